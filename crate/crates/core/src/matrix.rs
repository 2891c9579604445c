//! Dense integer matrices and Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-major matrix of arbitrary precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of small integers. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &BigInt) {
        self.data[i * self.cols + j] += v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch in product");
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum()).collect()
    }

    /// `[self | other]`
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch in hconcat");
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Stacks `self` above `other`.
    pub fn vconcat(&self, other: &IntMatrix) -> IntMatrix {
        self.transpose().hconcat(&other.transpose()).transpose()
    }

    /// Block diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            self.add_to(dst, j, &v);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            self.add_to(i, dst, &v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }
}

/// Result of a Smith normal form computation.
///
/// `u * m * v == d` where `d` is diagonal with entries `diag`, each dividing
/// the next, and `u`, `v` unimodular. `u_inv` is the inverse of `u`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diag: Vec<BigInt>,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// All `min(rows, cols)` diagonal entries, zeros included.
    pub fn full_diagonal(&self) -> Vec<BigInt> {
        let n = self.u.rows().min(self.v.rows());
        let mut d = self.diag.clone();
        d.resize(n, BigInt::zero());
        d
    }
}

/// Row operations are mirrored into `u` and, inverted, into `u_inv`.
struct Tracker {
    m: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Tracker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.m.add_row(dst, src, k);
        self.u.add_row(dst, src, k);
        self.u_inv.add_col(src, dst, &-k);
    }
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.m.add_col(dst, src, k);
        self.v.add_col(dst, src, k);
    }
    fn negate_row(&mut self, r: usize) {
        self.m.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }
}

/// Smith normal form with transforms, by repeated smallest-pivot reduction.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut t = Tracker {
        m: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
    };
    let mut diag = Vec::new();
    for s in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in s..rows {
                for j in s..cols {
                    let x = t.m.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < t.m.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(t, diag);
            };
            t.swap_rows(s, pi);
            t.swap_cols(s, pj);
            let pivot = t.m.get(s, s).clone();
            let mut dirty = false;
            for i in s + 1..rows {
                let x = t.m.get(i, s);
                if !x.is_zero() {
                    let q = x.div_floor(&pivot);
                    t.add_row(i, s, &-q);
                    dirty |= !t.m.get(i, s).is_zero();
                }
            }
            for j in s + 1..cols {
                let x = t.m.get(s, j);
                if !x.is_zero() {
                    let q = x.div_floor(&pivot);
                    t.add_col(j, s, &-q);
                    dirty |= !t.m.get(s, j).is_zero();
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (s + 1..rows).find(|&i| (s + 1..cols).any(|j| !t.m.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => t.add_row(s, i, &BigInt::one()),
                None => break,
            }
        }
        if t.m.get(s, s).is_negative() {
            t.negate_row(s);
        }
        diag.push(t.m.get(s, s).clone());
    }
    finish(t, diag)
}

fn finish(t: Tracker, diag: Vec<BigInt>) -> SmithForm {
    SmithForm { diag, u: t.u, u_inv: t.u_inv, v: t.v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        let d = s.u.mul(m).mul(&s.v);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < s.rank() { s.diag[i].clone() } else { BigInt::zero() };
                assert_eq!(d.get(i, j), &want, "entry ({i},{j})");
            }
        }
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        for w in s.diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn diagonalises_small_examples() {
        let s = check(&IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(s.diag, vec![2.into(), 6.into(), 12.into()]);
        let s = check(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diag, vec![1.into(), 6.into()]);
    }

    #[test]
    fn handles_degenerate_shapes() {
        assert_eq!(check(&IntMatrix::zeros(3, 2)).rank(), 0);
        assert_eq!(check(&IntMatrix::zeros(0, 4)).rank(), 0);
        assert_eq!(check(&IntMatrix::zeros(2, 0)).rank(), 0);
        assert_eq!(check(&IntMatrix::from_rows(&[vec![0]])).full_diagonal(), vec![BigInt::zero()]);
        let s = check(&IntMatrix::from_rows(&[vec![4, 2], vec![2, 4]]));
        assert_eq!(s.diag, vec![2.into(), 6.into()]);
        let s = check(&IntMatrix::from_rows(&[vec![0, 0, 5]]));
        assert_eq!(s.diag, vec![5.into()]);
    }

    #[test]
    fn negative_pivots_become_positive() {
        let s = check(&IntMatrix::from_rows(&[vec![-4, 0], vec![0, -6]]));
        assert_eq!(s.diag, vec![2.into(), 12.into()]);
    }
}
