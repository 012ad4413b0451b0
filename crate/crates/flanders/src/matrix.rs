//! Dense matrices over exact rationals.
//!
//! Everything downstream (decompositions, Drazin inverses, certificates) is
//! built from the eliminations here, so this module carries the pivoting
//! convention for the whole crate: the pivot is the first nonzero entry
//! scanning top to bottom in the leftmost unresolved column. Exact arithmetic
//! needs no stability pivoting and the fixed rule keeps every decomposition
//! reproducible.
//!
//! Degenerate shapes are legal: a 0x0 matrix has rank 0, its powers are the
//! (empty) identity, and products with empty inner dimension are zero matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Output of [`Matrix::rref`]: `transform * input = reduced` exactly, with
/// `transform` invertible and `pivots` the strictly increasing pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

/// Rank normal form of a square matrix: `input = p * diag(I_rank, 0) * q`
/// with `p`, `q` invertible.
#[derive(Debug, Clone)]
pub struct RankNormalForm {
    pub p: Matrix,
    pub rank: usize,
    pub q: Matrix,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "entry count {} does not match {rows}x{cols}",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix literal, the workhorse of tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged rows");
        Matrix::from_fn(rows.len(), c, |i, j| Scalar::from_int(rows[i][j]))
    }

    /// Matrix from `"p/q"` strings, for rational literals in examples.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self> {
        let parsed: Result<Vec<Vec<Scalar>>> = rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect())
            .collect();
        Matrix::from_rows(parsed?)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Scalar::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, factor: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * factor)
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact product; the checked form of `*`.
    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                let rhs = rhs.get(k, j);
                if rhs.is_zero() {
                    continue;
                }
                acc = acc + lhs * rhs;
            }
            acc
        }))
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op: "add",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j)))
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.checked_add(&-rhs).map_err(|e| match e {
            Error::DimensionMismatch { lhs_rows, lhs_cols, rhs_rows, rhs_cols, .. } => {
                Error::DimensionMismatch { op: "sub", lhs_rows, lhs_cols, rhs_rows, rhs_cols }
            }
            other => other,
        })
    }

    /// `self^k` for square matrices, with `self^0 = I`.
    pub fn pow(&self, k: usize) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Gauss-Jordan elimination to reduced row echelon form, tracking the row
    /// operations in an invertible `transform` so that `transform * self = reduced`.
    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let mut transform = Matrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut pivot_row = 0;

        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // First nonzero entry scanning top to bottom in this column.
            let Some(src) = (pivot_row..self.rows).find(|&r| !reduced.get(r, col).is_zero())
            else {
                continue;
            };
            if src != pivot_row {
                reduced.swap_rows(src, pivot_row);
                transform.swap_rows(src, pivot_row);
            }
            let pivot = reduced.get(pivot_row, col);
            if !pivot.is_one() {
                let inv = pivot.inverse().expect("pivot is nonzero");
                reduced.scale_row(pivot_row, &inv);
                transform.scale_row(pivot_row, &inv);
            }
            for r in 0..self.rows {
                if r != pivot_row && !reduced.get(r, col).is_zero() {
                    let factor = reduced.get(r, col).clone();
                    reduced.sub_scaled_row(r, pivot_row, &factor);
                    transform.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Rref { reduced, pivots, transform }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Exact inverse; singular input is a distinct error from a non-square one.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let rref = self.rref();
        if rref.pivots.len() < n {
            return Err(Error::Singular { rank: rref.pivots.len(), size: n });
        }
        Ok(rref.transform)
    }

    /// Exact basis of `{ v : self * v = 0 }` as column vectors, one per free
    /// column of the reduced form, in ascending free-column order.
    pub fn nullspace_basis(&self) -> Vec<Matrix> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - rref.pivots.len());
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = Matrix::zeros(self.cols, 1);
            v.set(free, 0, Scalar::one());
            for (row, &p) in rref.pivots.iter().enumerate() {
                v.set(p, 0, -rref.reduced.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// The pivot columns of `self`, an exact basis of the column space.
    pub fn colspace_basis(&self) -> Vec<Matrix> {
        self.rref().pivots.iter().map(|&j| self.column(j)).collect()
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn from_columns(rows: usize, columns: &[Matrix]) -> Matrix {
        for c in columns {
            assert!(c.rows == rows && c.cols == 1, "columns must be {rows}x1");
        }
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j].get(i, 0).clone())
    }

    /// Copies the block with upper-left corner (`row`, `col`) of the given shape.
    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Matrix {
        assert!(row + rows <= self.rows && col + cols <= self.cols, "block out of bounds");
        Matrix::from_fn(rows, cols, |i, j| self.get(row + i, col + j).clone())
    }

    /// diag(blocks), each block square.
    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let n = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(n, n);
        let mut offset = 0;
        for b in blocks {
            assert!(b.is_square(), "block_diag needs square blocks");
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(offset + i, offset + j, b.get(i, j).clone());
                }
            }
            offset += b.rows;
        }
        out
    }

    /// Rank normal form `self = p * diag(I_r, 0) * q` of a square matrix.
    ///
    /// From `transform * self = reduced`: take `p = transform^-1`, permute the
    /// pivot columns of `reduced` to the front and clear the residual block
    /// with a unipotent column operation, and fold both into `q`.
    pub fn rank_normal_form(&self) -> Result<RankNormalForm> {
        let n = self.require_square()?;
        let Rref { reduced, pivots, transform } = self.rref();
        let r = pivots.len();
        let p = transform.inverse().expect("row transform is invertible");

        let mut order = pivots.clone();
        let mut is_pivot = vec![false; n];
        for &j in &pivots {
            is_pivot[j] = true;
        }
        order.extend((0..n).filter(|&j| !is_pivot[j]));

        // permutation: column t of (reduced * perm) is column order[t] of reduced
        let mut perm = Matrix::zeros(n, n);
        for (t, &j) in order.iter().enumerate() {
            perm.set(j, t, Scalar::one());
        }
        // unipotent block [[I_r, F], [0, I]] undoing the elimination of the
        // non-pivot columns; F holds their entries in the pivot rows
        let mut e_inv = Matrix::identity(n);
        for i in 0..r {
            for t in r..n {
                e_inv.set(i, t, reduced.get(i, order[t]).clone());
            }
        }
        let q = &e_inv * &perm.transpose();

        let mut d = Matrix::zeros(n, n);
        for i in 0..r {
            d.set(i, i, Scalar::one());
        }
        debug_assert_eq!(&(&p * &d) * &q, *self);
        Ok(RankNormalForm { p, rank: r, q })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Scalar) {
        for j in 0..self.cols {
            if self.get(row, j).is_zero() {
                continue;
            }
            let v = self.get(row, j) * factor;
            self.set(row, j, v);
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &Scalar) {
        for j in 0..self.cols {
            if self.get(source, j).is_zero() {
                continue;
            }
            let v = self.get(target, j) - &(self.get(source, j) * factor);
            self.set(target, j, v);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        let mut widths = vec![0usize; self.cols];
        for j in 0..self.cols {
            for i in 0..self.rows {
                widths[j] = widths[j].max(self.get(i, j).to_string().len());
            }
        }
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:>width$}", self.get(i, j).to_string(), width = widths[j])?;
            }
            write!(f, "]")?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

macro_rules! borrowing_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
    };
}

borrowing_binop!(Mul, mul, checked_mul);
borrowing_binop!(Add, add, checked_add);
borrowing_binop!(Sub, sub, checked_sub);

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mul_matches_hand_products() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 1]]);
        let c = Matrix::from_i64(&[&[0, 0], &[1, 1]]);
        assert_eq!(&a * &c, Matrix::from_i64(&[&[1, 1], &[1, 1]]));
        let b = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(&b * &a, Matrix::from_i64(&[&[0, 2], &[0, 2]]));
        let m = Matrix::from_i64(&[&[3, -2], &[7, 5]]);
        assert_eq!(&Matrix::identity(2) * &m, m);
    }

    #[test]
    fn mul_dimension_mismatch_is_an_error() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(matches!(a.checked_mul(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn pow_examples() {
        let j = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(j.pow(2).unwrap(), Matrix::from_i64(&[&[2, 2], &[2, 2]]));
        assert_eq!(j.pow(0).unwrap(), Matrix::identity(2));
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(n.pow(2).unwrap().is_zero());
        assert!(Matrix::zeros(2, 3).pow(2).is_err());
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.transform, id);

        let j = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let r = j.rref();
        assert_eq!(r.reduced, Matrix::from_i64(&[&[1, 1], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(&r.transform * &j, r.reduced);

        let z = Matrix::zeros(2, 2);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.transform, Matrix::identity(2));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Matrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn inverse_examples() {
        let s = Matrix::parse_rows(&[&["1", "0"], &["1/2", "1/2"]]).unwrap();
        let expected = Matrix::from_i64(&[&[1, 0], &[-1, 2]]);
        assert_eq!(s.inverse().unwrap(), expected);
        assert_eq!(&s * &expected, Matrix::identity(2));
        assert_eq!(&expected * &s, Matrix::identity(2));

        assert_eq!(Matrix::identity(3).inverse().unwrap(), Matrix::identity(3));

        let singular = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(singular.inverse(), Err(Error::Singular { rank: 1, size: 2 }));
        assert!(Matrix::zeros(2, 3).inverse().is_err());
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::identity(3).nullspace_basis().is_empty());
        assert_eq!(Matrix::zeros(2, 2).nullspace_basis().len(), 2);

        let j = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let basis = j.nullspace_basis();
        assert_eq!(basis.len(), 1);
        // proportional to (1, -1)^T
        let v = &basis[0];
        assert!((&j * v).is_zero());
        assert_eq!(v.get(0, 0), &-v.get(1, 0));
        assert!(!v.get(0, 0).is_zero());
    }

    #[test]
    fn colspace_examples() {
        let basis = Matrix::identity(2).colspace_basis();
        assert_eq!(basis, vec![
            Matrix::from_i64(&[&[1], &[0]]),
            Matrix::from_i64(&[&[0], &[1]]),
        ]);
        let j = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(j.colspace_basis(), vec![Matrix::from_i64(&[&[1], &[1]])]);
        assert!(Matrix::zeros(2, 2).colspace_basis().is_empty());
    }

    #[test]
    fn rank_normal_form_examples() {
        let z = Matrix::zeros(2, 2);
        let f = z.rank_normal_form().unwrap();
        assert_eq!(f.rank, 0);
        assert_eq!(f.p, Matrix::identity(2));
        assert_eq!(f.q, Matrix::identity(2));

        let f = Matrix::identity(3).rank_normal_form().unwrap();
        assert_eq!(f.rank, 3);

        let x = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = x.rank_normal_form().unwrap();
        assert_eq!(f.rank, 1);
        let mut d = Matrix::zeros(2, 2);
        d.set(0, 0, Scalar::one());
        assert_eq!(&(&f.p * &d) * &f.q, x);
        assert_eq!(f.p.rank(), 2);
        assert_eq!(f.q.rank(), 2);
    }

    #[test]
    fn empty_matrices_behave() {
        let e = Matrix::zeros(0, 0);
        assert_eq!(&e * &e, e);
        assert_eq!(e.pow(5).unwrap(), e);
        assert_eq!(e.inverse().unwrap(), e);
        assert!(e.is_identity());
        // empty inner dimension gives an exact zero matrix
        let a = Matrix::zeros(2, 0);
        let b = Matrix::zeros(0, 3);
        assert_eq!(&a * &b, Matrix::zeros(2, 3));
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec((-4i64..=4, 1i64..=3), rows * cols).prop_map(
            move |cells| {
                let entries = cells.into_iter().map(|(p, q)| Scalar::ratio(p, q)).collect();
                Matrix::new(rows, cols, entries).unwrap()
            },
        )
    }

    fn dims() -> impl Strategy<Value = (usize, usize, usize, usize)> {
        (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_is_associative((m, n, k, l) in dims().prop_flat_map(|(a, b, c, d)| {
            (small_matrix(a, b), small_matrix(b, c), small_matrix(c, d), Just(d))
        })) {
            let _ = l;
            prop_assert_eq!(&(&m * &n) * &k, &m * &(&n * &k));
        }

        #[test]
        fn rank_of_product_bounded((m, n) in dims().prop_flat_map(|(a, b, c, _)| {
            (small_matrix(a, b), small_matrix(b, c))
        })) {
            prop_assert!((&m * &n).rank() <= m.rank().min(n.rank()));
        }

        #[test]
        fn rref_transform_is_invertible_and_exact(m in (1usize..=4, 1usize..=4)
            .prop_flat_map(|(r, c)| small_matrix(r, c)))
        {
            let rref = m.rref();
            prop_assert_eq!(&rref.transform * &m, rref.reduced.clone());
            prop_assert_eq!(rref.transform.rank(), m.rows());
            let mut last = None;
            for &p in &rref.pivots {
                prop_assert!(last.map_or(true, |q| p > q));
                last = Some(p);
            }
        }

        #[test]
        fn rank_invariant_under_invertible_factors(m in (2usize..=4)
            .prop_flat_map(|n| (small_matrix(n, n), small_matrix(n, n), small_matrix(n, n))))
        {
            let (m, p, q) = m;
            prop_assume!(p.rank() == p.rows() && q.rank() == q.rows());
            prop_assert_eq!((&(&p * &m) * &q).rank(), m.rank());
        }

        #[test]
        fn rank_normal_form_reassembles(m in (1usize..=4).prop_flat_map(|n| small_matrix(n, n))) {
            let n = m.rows();
            let f = m.rank_normal_form().unwrap();
            let mut d = Matrix::zeros(n, n);
            for i in 0..f.rank {
                d.set(i, i, Scalar::one());
            }
            prop_assert_eq!(&(&f.p * &d) * &f.q, m.clone());
            prop_assert_eq!(f.rank, m.rank());
            prop_assert_eq!(f.p.rank(), n);
            prop_assert_eq!(f.q.rank(), n);
        }

        #[test]
        fn nullspace_dimension_and_membership(m in (1usize..=4, 1usize..=4)
            .prop_flat_map(|(r, c)| small_matrix(r, c)))
        {
            let basis = m.nullspace_basis();
            prop_assert_eq!(basis.len(), m.cols() - m.rank());
            for v in &basis {
                prop_assert!((&m * v).is_zero());
            }
        }
    }
}
