//! The theorem engine: inverse transfer along `ABA = ACA`, explicit similarity
//! units for products and their group/Drazin inverses, the rank-sequence
//! criterion with a constructive conjugator, and power similarity.
//!
//! Every positive answer is a [`SimilarityCertificate`] carrying the unit and
//! its inverse, so a verifier needs nothing but exact multiplication; every
//! negative answer from the rank criterion carries a recomputable witness.
//! Identities that are forced by the hypotheses (rather than by the caller's
//! input) are asserted during construction: a failure there is a bug in this
//! crate, not bad input.

use crate::decomposition::{core_nilpotent, index, nilpotent_similarity, unit_regular_factor};
use crate::error::{Error, Result};
use crate::gen_inverse::{drazin, group_inverse};
use crate::matrix::Matrix;

/// Matrices `(A, B, C)` with `A*B*A = A*C*A`, checked at construction.
#[derive(Debug, Clone)]
pub struct FlandersTriple {
    a: Matrix,
    b: Matrix,
    c: Matrix,
}

/// The intermediates of the unit construction: `x`, `y` and the unit-regular
/// factor `v` of `x`. Exposed so callers can audit the construction.
#[derive(Debug, Clone)]
pub struct Workings {
    pub x: Matrix,
    pub y: Matrix,
    pub v: Matrix,
}

/// Which similarity a certificate claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `AC ~ BA` with both products group invertible.
    Group,
    /// `(AC)^# ~ (BA)^#`.
    GroupInverse,
    /// `(AC)^D ~ (BA)^D`.
    Drazin,
    /// `(AC)^2 (AC)^D ~ (BA)^2 (BA)^D`, the core parts.
    DrazinCore,
    /// `AC ~ BA` decided by the rank-sequence criterion.
    Full,
    /// `(AC)^s ~ (BA)^s`.
    Power,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Group => "group",
            Relation::GroupInverse => "group_inverse",
            Relation::Drazin => "drazin",
            Relation::DrazinCore => "drazin_core",
            Relation::Full => "full",
            Relation::Power => "power",
        }
    }

    pub fn parse(tag: &str) -> Result<Self> {
        Ok(match tag {
            "group" => Relation::Group,
            "group_inverse" => Relation::GroupInverse,
            "drazin" => Relation::Drazin,
            "drazin_core" => Relation::DrazinCore,
            "full" => Relation::Full,
            "power" => Relation::Power,
            other => return Err(Error::Parse(format!("unknown relation tag {other:?}"))),
        })
    }
}

/// A self-contained similarity proof: `u * u_inv = I` and
/// `lhs = u_inv * rhs * u`, checkable by multiplication alone.
#[derive(Debug, Clone)]
pub struct SimilarityCertificate {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub lhs: Matrix,
    pub rhs: Matrix,
    pub relation: Relation,
}

impl SimilarityCertificate {
    /// Re-derives the certified relation from scratch; no trusted state.
    pub fn verify(&self) -> bool {
        let n = self.u.rows();
        if !self.u.is_square() || self.u_inv.rows() != n || self.u_inv.cols() != n {
            return false;
        }
        let id = Matrix::identity(n);
        let unit_ok = self.u.checked_mul(&self.u_inv).is_ok_and(|m| m == id)
            && self.u_inv.checked_mul(&self.u).is_ok_and(|m| m == id);
        let conjugate = self
            .u_inv
            .checked_mul(&self.rhs)
            .and_then(|m| m.checked_mul(&self.u));
        unit_ok && conjugate.is_ok_and(|m| m == self.lhs)
    }

    fn checked(
        u: Matrix,
        u_inv: Matrix,
        lhs: Matrix,
        rhs: Matrix,
        relation: Relation,
    ) -> SimilarityCertificate {
        let cert = SimilarityCertificate { u, u_inv, lhs, rhs, relation };
        assert!(cert.verify(), "constructed {} certificate must verify", relation.as_str());
        cert
    }
}

/// Evidence that `AC` and `BA` are not similar: a power at which their ranks
/// differ. Both ranks are recomputable from the triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSimilar {
    pub witness_power: usize,
    pub rank_lhs: usize,
    pub rank_rhs: usize,
}

/// Outcome of the rank-sequence decision.
#[derive(Debug, Clone)]
pub enum SimilarityOutcome {
    Similar(Box<SimilarityCertificate>),
    NotSimilar(NotSimilar),
}

/// Checks `A*B*A = A*C*A` exactly and wraps the triple.
pub fn validate_triple(a: Matrix, b: Matrix, c: Matrix) -> Result<FlandersTriple> {
    for m in [&a, &b, &c] {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
    }
    if a.rows() != b.rows() || a.rows() != c.rows() {
        return Err(Error::DimensionMismatch {
            op: "validate_triple",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: b.rows().max(c.rows()),
            rhs_cols: b.cols().max(c.cols()),
        });
    }
    let aba = &(&a * &b) * &a;
    let aca = &(&a * &c) * &a;
    if aba != aca {
        let (row, col) = first_difference(&aba, &aca);
        return Err(Error::ConstraintViolated { row, col });
    }
    Ok(FlandersTriple { a, b, c })
}

fn first_difference(lhs: &Matrix, rhs: &Matrix) -> (usize, usize) {
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs.get(i, j) != rhs.get(i, j) {
                return (i, j);
            }
        }
    }
    unreachable!("matrices differ")
}

impl FlandersTriple {
    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }

    pub fn ac(&self) -> Matrix {
        &self.a * &self.c
    }

    pub fn ba(&self) -> Matrix {
        &self.b * &self.a
    }
}

/// Transfers the Drazin inverse across the triple:
/// `(BA)^D = B * ((AC)^D)^2 * A`, returned together with `(AC)^D`.
///
/// The transfer identities `A*(BA)^D = (AC)^D*A` and
/// `A*B*(AC)^D = A*C*(AC)^D` are checked exactly, as is agreement with the
/// directly computed `(BA)^D`.
pub fn lemma1_transfer(t: &FlandersTriple) -> (Matrix, Matrix) {
    let ac_d = drazin(&t.ac()).expect("square").inverse;
    let ba_d = &(&t.b * &(&ac_d * &ac_d)) * &t.a;

    assert_eq!(ba_d, drazin(&t.ba()).expect("square").inverse, "transferred (BA)^D must match");
    assert_eq!(&t.a * &ba_d, &ac_d * &t.a, "A*(BA)^D = (AC)^D*A must hold");
    assert_eq!(
        &(&t.a * &t.b) * &ac_d,
        &(&t.a * &t.c) * &ac_d,
        "A*B*(AC)^D = A*C*(AC)^D must hold"
    );
    (ba_d, ac_d)
}

/// Builds the invertible unit `u = (1 - xy - xv) v^-1 (1 - yx - vx)` and its
/// closed-form inverse `u^-1 = v - vxv + y`, checking every identity the
/// construction relies on.
fn build_unit(x: Matrix, y: Matrix) -> (Matrix, Matrix, Workings) {
    let n = x.rows();
    let id = Matrix::identity(n);
    let v = unit_regular_factor(&x).expect("square");

    let xy = &x * &y;
    let yx = &y * &x;
    let xv = &x * &v;
    let vx = &v * &x;
    assert_eq!(&xy * &x, x, "x*y*x = x must hold");
    assert_eq!(&yx * &y, y, "y*x*y = y must hold");
    assert_eq!(&xv * &x, x, "x*v*x = x must hold");

    let left = &(&id - &xy) - &xv;
    let right = &(&id - &yx) - &vx;
    assert_eq!(&left * &left, id, "(1 - xy - xv)^2 = 1 must hold");
    assert_eq!(&right * &right, id, "(1 - yx - vx)^2 = 1 must hold");

    let v_inv = v.inverse().expect("unit-regular factor is invertible");
    let u = &(&left * &v_inv) * &right;
    let u_inv = &(&v - &(&vx * &v)) + &y;
    assert_eq!(&u * &u_inv, id, "closed-form inverse must invert u");
    assert_eq!(&u_inv * &u, id, "closed-form inverse must invert u");
    assert_eq!(u_inv, u.inverse().expect("u is invertible"), "closed form must match elimination");

    (u, u_inv, Workings { x, y, v })
}

/// Certificates for `AC ~ BA` and `(AC)^# ~ (BA)^#`, both conjugated by the
/// same unit built from `x = B*(AC)^#`, `y = AC*(AC)^#*A`.
pub fn group_similarity_certificate(
    t: &FlandersTriple,
) -> Result<(SimilarityCertificate, SimilarityCertificate, Workings)> {
    let ac = t.ac();
    let ba = t.ba();
    let ac_sharp = group_inverse(&ac)?;
    let ba_sharp = group_inverse(&ba)?;

    let x = &t.b * &ac_sharp;
    let y = &(&ac * &ac_sharp) * &t.a;
    let (u, u_inv, w) = build_unit(x, y);

    // intermediates of the construction, all exact consequences of ABA = ACA
    assert_eq!(&(&w.x * &ac) * &w.y, ba, "x*(AC)*y = BA must hold");
    assert_eq!(&(&w.y * &ba) * &w.x, ac, "y*(BA)*x = AC must hold");
    let aca = &ac * &t.a;
    assert_eq!(&ac * &u_inv, aca, "(AC)*u^-1 = ACA must hold");
    assert_eq!(&u_inv * &ba, aca, "u^-1*(BA) = ACA must hold");

    let cert = SimilarityCertificate::checked(u.clone(), u_inv.clone(), ac, ba, Relation::Group);
    let cert_sharp =
        SimilarityCertificate::checked(u, u_inv, ac_sharp, ba_sharp, Relation::GroupInverse);
    Ok((cert, cert_sharp, w))
}

/// Certificates for `(AC)^D ~ (BA)^D` and for the core parts
/// `(AC)^2 (AC)^D ~ (BA)^2 (BA)^D`, with the same unit for both; built from
/// `x = B*(AC)^D`, `y = AC*(AC)^D*A`.
pub fn drazin_similarity_certificate(
    t: &FlandersTriple,
) -> (SimilarityCertificate, SimilarityCertificate, Workings) {
    let ac = t.ac();
    let ba = t.ba();
    let ac_d = drazin(&ac).expect("square").inverse;
    let ba_d = drazin(&ba).expect("square").inverse;

    let x = &t.b * &ac_d;
    let y = &(&ac * &ac_d) * &t.a;
    let (u, u_inv, w) = build_unit(x, y);

    assert_eq!(&(&w.x * &ac_d) * &w.y, ba_d, "x*(AC)^D*y = (BA)^D must hold");
    assert_eq!(&(&w.y * &ba_d) * &w.x, ac_d, "y*(BA)^D*x = (AC)^D must hold");

    let core_lhs = &(&ac * &ac) * &ac_d;
    let core_rhs = &(&ba * &ba) * &ba_d;
    let cert =
        SimilarityCertificate::checked(u.clone(), u_inv.clone(), ac_d, ba_d, Relation::Drazin);
    let core_cert =
        SimilarityCertificate::checked(u, u_inv, core_lhs, core_rhs, Relation::DrazinCore);
    (cert, core_cert, w)
}

/// `rank((AC)^k)` and `rank((BA)^k)` for `k = 1..n`. Both sequences are
/// constant from the index on, and indices never exceed `n`, so `n` powers
/// decide similarity.
pub fn rank_sequence(t: &FlandersTriple) -> (Vec<usize>, Vec<usize>) {
    let ac = t.ac();
    let ba = t.ba();
    let n = t.size();
    let mut ac_pow = Matrix::identity(n);
    let mut ba_pow = Matrix::identity(n);
    let mut ac_ranks = Vec::with_capacity(n);
    let mut ba_ranks = Vec::with_capacity(n);
    for _ in 0..n {
        ac_pow = &ac_pow * &ac;
        ba_pow = &ba_pow * &ba;
        ac_ranks.push(ac_pow.rank());
        ba_ranks.push(ba_pow.rank());
    }
    (ac_ranks, ba_ranks)
}

/// Decides `AC ~ BA` by the rank-sequence criterion and, when the sequences
/// agree, constructs an explicit conjugator.
///
/// The conjugator glues the two core-nilpotent splittings: the Drazin unit
/// `u` maps one splitting onto the other, and `T = Q*u*P^-1` is necessarily
/// block diagonal with an invertible core block; its nilpotent block is then
/// replaced by a Jordan-chain similarity of the two nilpotent parts.
pub fn full_similarity(t: &FlandersTriple) -> SimilarityOutcome {
    let (ac_ranks, ba_ranks) = rank_sequence(t);
    for (k, (&ra, &rb)) in ac_ranks.iter().zip(&ba_ranks).enumerate() {
        if ra != rb {
            return SimilarityOutcome::NotSimilar(NotSimilar {
                witness_power: k + 1,
                rank_lhs: ra,
                rank_rhs: rb,
            });
        }
    }

    let ac = t.ac();
    let ba = t.ba();
    let dec_ac = core_nilpotent(&ac).expect("square");
    let dec_ba = core_nilpotent(&ba).expect("square");
    assert_eq!(dec_ac.core_rank, dec_ba.core_rank, "equal rank sequences force equal core sizes");
    let r = dec_ac.core_rank;
    let n = t.size();

    let (drazin_cert, _, _) = drazin_similarity_certificate(t);
    let glue = &(&dec_ba.p * &drazin_cert.u) * &dec_ac.p_inv;
    assert!(glue.block(0, r, r, n - r).is_zero(), "glue matrix must be block diagonal");
    assert!(glue.block(r, 0, n - r, r).is_zero(), "glue matrix must be block diagonal");
    let core_block = glue.block(0, 0, r, r);
    let core_inv = core_block.inverse().expect("core glue block is invertible");
    assert_eq!(
        &(&core_inv * &dec_ba.core) * &core_block,
        dec_ac.core,
        "core blocks must be conjugate under the glue"
    );

    let nil_block = nilpotent_similarity(&dec_ac.nil, &dec_ba.nil)
        .expect("equal rank sequences force equal Weyr sequences");

    let s = &(&dec_ba.p_inv * &Matrix::block_diag(&[core_block, nil_block])) * &dec_ac.p;
    let s_inv = s.inverse().expect("conjugator is invertible");
    SimilarityOutcome::Similar(Box::new(SimilarityCertificate::checked(
        s,
        s_inv,
        ac,
        ba,
        Relation::Full,
    )))
}

/// Certificate for `(AC)^s ~ (BA)^s`, valid for any
/// `s >= max(ind(AC), ind(BA))`, `s >= 1`.
///
/// Reduces to the group case on the derived triple `(A, B', C')` with
/// `B' = (BA)^(s-1)*B` and `C' = C*(AC)^(s-1)`, whose products are exactly
/// `(AC)^s` and `(BA)^s` and are group invertible at such `s`.
pub fn power_similarity(t: &FlandersTriple, s: usize) -> Result<SimilarityCertificate> {
    let ac = t.ac();
    let ba = t.ba();
    let ind_ac = index(&ac).expect("square");
    let ind_ba = index(&ba).expect("square");
    if s < 1 || s < ind_ac.max(ind_ba) {
        return Err(Error::IndexTooSmall { s, ind_ac, ind_ba });
    }

    let b_prime = &ba.pow(s - 1).expect("square") * &t.b;
    let c_prime = &t.c * &ac.pow(s - 1).expect("square");
    let derived = validate_triple(t.a.clone(), b_prime, c_prime)
        .expect("derived triple satisfies the constraint");

    let ac_s = ac.pow(s).expect("square");
    let ba_s = ba.pow(s).expect("square");
    assert_eq!(derived.ac(), ac_s, "A*C' must equal (AC)^s");
    assert_eq!(derived.ba(), ba_s, "B'*A must equal (BA)^s");
    assert!(index(&ac_s).expect("square") <= 1, "(AC)^s must be group invertible");
    assert!(index(&ba_s).expect("square") <= 1, "(BA)^s must be group invertible");

    let (cert, _, _) = group_similarity_certificate(&derived)
        .expect("powers at or above the index are group invertible");
    Ok(SimilarityCertificate::checked(cert.u, cert.u_inv, cert.lhs, cert.rhs, Relation::Power))
}

/// `(AB)^s ~ (BA)^s` for any two square matrices of equal size, the `B = C`
/// instance of [`power_similarity`].
pub fn ab_ba_power(a: &Matrix, b: &Matrix, s: usize) -> Result<SimilarityCertificate> {
    let t = validate_triple(a.clone(), b.clone(), b.clone())?;
    power_similarity(&t, s)
}
