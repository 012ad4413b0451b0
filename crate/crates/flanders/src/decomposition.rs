//! Structural decompositions: matrix index, core-nilpotent splitting,
//! unit-regular factorization and nilpotent similarity via Jordan chains.
//!
//! The core-nilpotent decomposition is the backbone of everything else: a
//! square matrix restricted to the column space of `A^k` (k its index) is
//! invertible, restricted to the null space of `A^k` it is nilpotent, and the
//! two subspaces split the whole space. Choosing the basis as pivot columns of
//! `A^k` followed by the null space basis makes the decomposition fully
//! deterministic given the crate's pivoting rule.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Block-diagonalization `P * A * P^-1 = diag(core, nil)` with an invertible
/// core and a nilpotent tail, plus the index that produced the split.
#[derive(Debug, Clone)]
pub struct CoreNilpotent {
    pub p: Matrix,
    pub p_inv: Matrix,
    /// Invertible `core_rank x core_rank` block.
    pub core: Matrix,
    /// Nilpotent block of size `n - core_rank`; `nil^index = 0`.
    pub nil: Matrix,
    /// Index of the source matrix; 0 exactly when the matrix is invertible.
    pub index: usize,
    /// rank(A^index), the size of the core block.
    pub core_rank: usize,
}

impl CoreNilpotent {
    /// `P^-1 * diag(core, nil) * P`, which must equal the source exactly.
    pub fn reassemble(&self) -> Matrix {
        let block = Matrix::block_diag(&[self.core.clone(), self.nil.clone()]);
        &(&self.p_inv * &block) * &self.p
    }
}

/// Differences of successive nullities of a nilpotent matrix. Two nilpotents
/// are similar iff these sequences coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeyrSequence {
    pub values: Vec<usize>,
}

/// Smallest `k >= 0` with `rank(A^(k+1)) = rank(A^k)`, taking `A^0 = I`.
pub fn index(a: &Matrix) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let mut power = Matrix::identity(a.rows());
    let mut prev_rank = power.rank();
    for k in 0.. {
        power = &power * a;
        let r = power.rank();
        if r == prev_rank {
            return Ok(k);
        }
        prev_rank = r;
    }
    unreachable!("ranks strictly decrease until they stabilize")
}

/// Splits `A` into its invertible core and nilpotent part.
///
/// The basis is the pivot columns of `A^k` followed by the null space basis of
/// `A^k`, `k = index(A)`; both subspaces are invariant under `A`, so the
/// conjugated matrix is exactly block diagonal. Every structural claim is
/// asserted before returning.
pub fn core_nilpotent(a: &Matrix) -> Result<CoreNilpotent> {
    let k = index(a)?;
    let n = a.rows();
    let a_pow = a.pow(k)?;

    let mut basis = a_pow.colspace_basis();
    let r = basis.len();
    basis.extend(a_pow.nullspace_basis());
    assert_eq!(basis.len(), n, "column space and null space of A^index must split the space");

    let p_inv = Matrix::from_columns(n, &basis);
    let p = p_inv.inverse().expect("basis matrix is invertible");
    let conjugated = &(&p * a) * &p_inv;

    let core = conjugated.block(0, 0, r, r);
    let nil = conjugated.block(r, r, n - r, n - r);
    assert!(conjugated.block(0, r, r, n - r).is_zero(), "off-diagonal block must vanish");
    assert!(conjugated.block(r, 0, n - r, r).is_zero(), "off-diagonal block must vanish");
    assert_eq!(core.rank(), r, "core block must be invertible");
    assert!(nil.pow(k).expect("nil is square").is_zero(), "nil block must satisfy nil^index = 0");
    if k >= 1 && r < n {
        assert!(
            !nil.pow(k - 1).expect("nil is square").is_zero(),
            "nil block must have nilpotency order equal to the index"
        );
    }
    assert_eq!(r, a_pow.rank());

    Ok(CoreNilpotent { p, p_inv, core, nil, index: k, core_rank: r })
}

/// Invertible `V` with `X * V * X = X`: the unit-regular factorization.
///
/// Taken canonically from the rank normal form `X = P * diag(I_r, 0) * Q` as
/// `V = Q^-1 * P^-1`; any valid unit works downstream, determinism is what
/// matters here.
pub fn unit_regular_factor(x: &Matrix) -> Result<Matrix> {
    let f = x.rank_normal_form()?;
    let v = &f.q.inverse().expect("q is invertible") * &f.p.inverse().expect("p is invertible");
    assert_eq!(&(x * &v) * x, *x, "unit-regular identity XVX = X must hold");
    Ok(v)
}

/// Nullity differences `dim null(N^(i+1)) - dim null(N^i)` of a nilpotent `N`.
pub fn weyr_sequence(n_mat: &Matrix) -> Result<WeyrSequence> {
    if !n_mat.is_square() {
        return Err(Error::NotSquare { rows: n_mat.rows(), cols: n_mat.cols() });
    }
    let n = n_mat.rows();
    if !n_mat.pow(n)?.is_zero() {
        return Err(Error::NotNilpotent);
    }
    let mut values = Vec::new();
    let mut covered = 0;
    let mut prev_nullity = 0;
    let mut power = Matrix::identity(n);
    while covered < n {
        power = &power * n_mat;
        let nullity = n - power.rank();
        values.push(nullity - prev_nullity);
        covered += nullity - prev_nullity;
        prev_nullity = nullity;
    }
    debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
    Ok(WeyrSequence { values })
}

/// The nilpotent Jordan matrix with the given block sizes: ones on the
/// superdiagonal inside each block, zero elsewhere.
pub fn canonical_nilpotent(block_sizes: &[usize]) -> Matrix {
    let blocks: Vec<Matrix> = block_sizes
        .iter()
        .map(|&size| {
            Matrix::from_fn(size, size, |i, j| {
                if i + 1 == j { Scalar::one() } else { Scalar::zero() }
            })
        })
        .collect();
    Matrix::block_diag(&blocks)
}

/// Chain basis for a nilpotent matrix: returns `(M, block_sizes)` with
/// `M^-1 * N * M = canonical_nilpotent(block_sizes)` exactly.
///
/// Chains are grown from the highest power down: at stage `i` the vectors
/// pushed forward from longer chains already sit inside `null(N^i)`, and the
/// null space basis vectors of `N^i` are tried in ascending order as new chain
/// tops whenever they extend the accumulated span beyond `null(N^(i-1))`.
fn jordan_chain_basis(n_mat: &Matrix) -> (Matrix, Vec<usize>) {
    let n = n_mat.rows();
    if n == 0 {
        return (Matrix::identity(0), Vec::new());
    }
    let mut order = 0;
    {
        let mut power = Matrix::identity(n);
        while !power.is_zero() {
            power = &power * n_mat;
            order += 1;
        }
    }

    let null_basis: Vec<Vec<Matrix>> = (0..=order)
        .map(|i| n_mat.pow(i).expect("square").nullspace_basis())
        .collect();

    // (top vector, chain length), discovered longest-first
    let mut tops: Vec<(Matrix, usize)> = Vec::new();
    for stage in (1..=order).rev() {
        let mut span: Vec<Matrix> = null_basis[stage - 1].clone();
        for (top, len) in &tops {
            let pushed = &n_mat.pow(len - stage).expect("square") * top;
            span.push(pushed);
        }
        let mut span_rank = Matrix::from_columns(n, &span).rank();
        for candidate in &null_basis[stage] {
            let mut extended = span.clone();
            extended.push(candidate.clone());
            let r = Matrix::from_columns(n, &extended).rank();
            if r > span_rank {
                span = extended;
                span_rank = r;
                tops.push((candidate.clone(), stage));
            }
        }
    }

    let mut columns = Vec::with_capacity(n);
    let mut sizes = Vec::with_capacity(tops.len());
    for (top, len) in &tops {
        for j in (0..*len).rev() {
            columns.push(&n_mat.pow(j).expect("square") * top);
        }
        sizes.push(*len);
    }
    assert_eq!(columns.len(), n, "Jordan chains must exhaust the space");
    let m = Matrix::from_columns(n, &columns);
    assert_eq!(m.rank(), n, "chain vectors must be independent");
    (m, sizes)
}

/// Invertible `S` with `N1 = S^-1 * N2 * S`, or the first power at which the
/// Weyr sequences (equivalently, the rank sequences) differ.
pub fn nilpotent_similarity(n1: &Matrix, n2: &Matrix) -> Result<Matrix> {
    if n1.rows() != n2.rows() || n1.cols() != n2.cols() {
        return Err(Error::DimensionMismatch {
            op: "nilpotent_similarity",
            lhs_rows: n1.rows(),
            lhs_cols: n1.cols(),
            rhs_rows: n2.rows(),
            rhs_cols: n2.cols(),
        });
    }
    let w1 = weyr_sequence(n1)?;
    let w2 = weyr_sequence(n2)?;
    let len = w1.values.len().max(w2.values.len());
    for i in 0..len {
        let a = w1.values.get(i).copied().unwrap_or(0);
        let b = w2.values.get(i).copied().unwrap_or(0);
        if a != b {
            return Err(Error::WeyrMismatch { power: i + 1 });
        }
    }

    let (m1, sizes1) = jordan_chain_basis(n1);
    let (m2, sizes2) = jordan_chain_basis(n2);
    assert_eq!(sizes1, sizes2, "equal Weyr sequences force equal block sizes");

    let s = &m2 * &m1.inverse().expect("chain basis is invertible");
    let s_inv = s.inverse().expect("similarity is invertible");
    assert_eq!(&(&s_inv * n2) * &s, *n1, "conjugation must reproduce N1 exactly");
    Ok(s)
}
