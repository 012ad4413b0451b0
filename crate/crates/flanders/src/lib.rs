//! Exact Drazin and group inverses of rational matrices, with verifiable
//! similarity certificates.
//!
//! For square matrices `A`, `B`, `C` over ℚ with `A*B*A = A*C*A`, this crate
//! constructs explicit invertible units realizing the generalized Flanders
//! theorem:
//!
//! * `AC ~ BA` whenever both products are group invertible, and
//!   `(AC)^# ~ (BA)^#` under the same unit;
//! * `(AC)^D ~ (BA)^D` always, together with the core parts
//!   `(AC)^2 (AC)^D ~ (BA)^2 (BA)^D`;
//! * `AC ~ BA` if and only if `rank((AC)^k) = rank((BA)^k)` for all `k`, with
//!   a constructive conjugator on the positive side and a recomputable rank
//!   witness on the negative side;
//! * `(AC)^s ~ (BA)^s` for every `s >= max(ind(AC), ind(BA))`, and the
//!   classical `(AB)^s ~ (BA)^s` as the `B = C` case.
//!
//! Every similarity is returned as a [`similarity::SimilarityCertificate`]
//! carrying the unit and its inverse, so verification is nothing but exact
//! multiplication.
//!
//! # Ground field
//!
//! All arithmetic is over the rationals with arbitrary-precision numerators
//! and denominators. The theorems are usually stated over ℂ, but the
//! constructions involved are field-generic, and exact rank — which the
//! rank-sequence criterion hinges on — is not decidable in floating point.
//! ℚ^(n×n), like any matrix ring over a field, is unit-regular, so every
//! hypothesis of the matrix-level statements is satisfiable here.
//!
//! Outside matrix rings the picture changes: group invertibility of `ab` and
//! `ba` alone does not force `ab ~ ba` in a general ring. The classical
//! counterexample lives in the endomorphism ring of an infinite-dimensional
//! vector space (a one-sided shift `σ` and its left inverse `τ` give
//! `τσ = 1` similar to nothing but `1`, while `στ` is a proper idempotent).
//! No finite matrix instance exhibits this, which is exactly why the
//! unit-regular hypothesis carries the theorems above. That ring-theoretic
//! territory is out of scope for this crate.
//!
//! # Layout
//!
//! * [`scalar`], [`matrix`] — exact rational arithmetic and rank-revealing
//!   eliminations;
//! * [`decomposition`] — index, core-nilpotent splitting, unit-regular
//!   factorization, Jordan chains for nilpotent similarity;
//! * [`gen_inverse`] — Drazin/group inverses with a recursive full-rank
//!   factorization as an independent oracle;
//! * [`similarity`] — the theorem engine producing certificates;
//! * [`instances`] — deterministic generation of valid triples;
//! * [`cli`] — the file formats and subcommands of the `flanders` binary.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod gen_inverse;
pub mod instances;
pub mod matrix;
pub mod scalar;
pub mod similarity;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::Scalar;
