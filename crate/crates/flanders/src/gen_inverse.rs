//! Drazin and group inverses, with axiom verification and an independent
//! second route for cross-checking.
//!
//! The primary algorithm goes through the core-nilpotent decomposition:
//! `P * A * P^-1 = diag(U, N)` gives `A^D = P^-1 * diag(U^-1, 0) * P`. The
//! oracle [`drazin_cline`] instead recurses through full-rank factorizations
//! and shares no code path with the decomposition, so a defect in either
//! elimination shows up as a disagreement between the two.

use crate::decomposition::core_nilpotent;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A Drazin inverse together with the index it was computed at.
///
/// The three defining identities hold exactly: `A X = X A`, `X A X = X`,
/// `A^(index+1) X = A^index`; for index <= 1 additionally `A X A = A`.
#[derive(Debug, Clone)]
pub struct DrazinResult {
    pub inverse: Matrix,
    pub index: usize,
}

/// Drazin inverse via the core-nilpotent decomposition.
///
/// The result is checked against all three axioms before it is returned, so
/// every call doubles as a self-test.
pub fn drazin(a: &Matrix) -> Result<DrazinResult> {
    let d = core_nilpotent(a)?;
    let core_inv = d.core.inverse().expect("core block is invertible");
    let nil_size = a.rows() - d.core_rank;
    let block = Matrix::block_diag(&[core_inv, Matrix::zeros(nil_size, nil_size)]);
    let inverse = &(&d.p_inv * &block) * &d.p;
    assert!(
        verify_drazin(a, &inverse, d.index).expect("shapes agree"),
        "computed Drazin inverse must satisfy the defining axioms"
    );
    Ok(DrazinResult { inverse, index: d.index })
}

/// Group inverse `A^#`, the Drazin inverse when the index is at most 1.
pub fn group_inverse(a: &Matrix) -> Result<Matrix> {
    let d = drazin(a)?;
    if d.index > 1 {
        return Err(Error::NoGroupInverse { index: d.index });
    }
    Ok(d.inverse)
}

/// Exact check of the Drazin axioms `AX = XA`, `XAX = X`, `A^(k+1) X = A^k`.
pub fn verify_drazin(a: &Matrix, x: &Matrix, k: usize) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if a.rows() != x.rows() || a.cols() != x.cols() {
        return Err(Error::DimensionMismatch {
            op: "verify_drazin",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: x.rows(),
            rhs_cols: x.cols(),
        });
    }
    let commute = a * x == x * a;
    let inner = &(x * a) * x == *x;
    let stabilize = &a.pow(k + 1)? * x == a.pow(k)?;
    Ok(commute && inner && stabilize)
}

/// Drazin inverse by recursive full-rank factorization.
///
/// Split `A = F * G` with `F` the pivot columns and `G` the nonzero rows of
/// the reduced form, recurse on the smaller `G * F`, and combine as
/// `A^D = F * ((G F)^D)^2 * G`. Base cases are the invertible and zero
/// matrices. Kept deliberately independent of [`drazin`] as its oracle.
pub fn drazin_cline(a: &Matrix) -> Result<Matrix> {
    let n = if a.is_square() {
        a.rows()
    } else {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    };
    let rref = a.rref();
    let r = rref.pivots.len();
    if r == n {
        return a.inverse();
    }
    if r == 0 {
        return Ok(Matrix::zeros(n, n));
    }
    let f = Matrix::from_columns(n, &rref.pivots.iter().map(|&j| a.column(j)).collect::<Vec<_>>());
    let g = rref.reduced.block(0, 0, r, n);
    debug_assert_eq!(&f * &g, *a, "full-rank factorization must reassemble A");
    let inner = drazin_cline(&(&g * &f))?;
    Ok(&(&f * &(&inner * &inner)) * &g)
}
