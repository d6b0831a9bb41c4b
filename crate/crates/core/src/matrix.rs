//! Dense matrices over an exact field: reduction, solving, kernels.
//!
//! Matrices are stored row-major and carry their field so that empty shapes
//! (zero rows or columns, which occur constantly as vertex components of
//! module maps) still know how to produce scalars. All algorithms are plain
//! Gauss-Jordan; sizes stay at desk scale so no pivoting strategy or sparsity
//! is needed.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("shape mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
}

/// A `rows x cols` matrix over an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    entries: Vec<Scalar>,
}

/// Result of row reduction: the reduced matrix, its pivot columns and rank.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, field, entries: rows.into_iter().flatten().collect() }
    }

    /// Small integer literals, mostly for tests and fixtures.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&n| field.from_i64(n)).collect()).collect(),
        )
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.set(r, c, out.get(r, c).add(&a.mul(b)));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&a.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = self.entries[i].add(&other.entries[i]);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.neg();
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.mul(s);
        }
        out
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zero(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut out = Matrix::zero(self.field, self.rows + other.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..self.cols {
                out.set(self.rows + r, c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(ro + r, co + c, b.get(r, c).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form with unit pivots.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = m.get(lead, col).inverse().expect("pivot nonzero");
            m.scale_row(lead, &inv);
            for r in 0..m.rows {
                if r != lead && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, lead, &factor);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A full-rank matrix `K` with `self * K = 0` and
    /// `cols(K) = cols(self) - rank(self)`, columns in free-column order.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { matrix: r, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zero(self.field, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, self.field.one());
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, r.get(i, fc).neg());
            }
        }
        k
    }

    /// Some solution `X` of `self * X = b`, or `None` when inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>, LinAlgError> {
        if self.rows != b.rows {
            return Err(LinAlgError::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: b.rows,
                right_cols: b.cols,
            });
        }
        let aug = self.hstack(b);
        let Rref { matrix: r, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zero(self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, r.get(i, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// The pivot columns of `self`, a deterministic basis of the column space.
    pub fn column_space_basis(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_cols(&pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let i = a * self.cols + c;
            let j = b * self.cols + c;
            self.entries.swap(i, j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(s);
            self.set(r, c, v);
        }
    }

    fn sub_scaled_row(&mut self, r: usize, src: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c).sub(&self.get(src, c).mul(s));
            self.set(r, c, v);
        }
    }
}

/// A linear subspace of `k^n` held in reduced row echelon form.
///
/// Used both as a containment test and as the canonicalizer for quotient
/// spaces: `reduce` projects along the subspace onto the complement spanned
/// by the non-pivot coordinates, which makes representatives of quotient
/// classes unique.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub ambient: usize,
    pub field: Field,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, field, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Span of the given vectors.
    pub fn from_vectors(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let m = Matrix::from_rows(field, vectors.to_vec());
        if m.rows == 0 {
            return Subspace::zero(field, ambient);
        }
        assert_eq!(m.cols, ambient);
        let Rref { matrix, pivots, rank } = m.rref();
        let rows = (0..rank).map(|r| matrix.row(r)).collect();
        Subspace { ambient, field, rows, pivots }
    }

    /// Span of the columns of `m`, a subspace of `k^rows`.
    pub fn from_columns(m: &Matrix) -> Subspace {
        let t = m.transpose();
        let vectors: Vec<Vec<Scalar>> = (0..t.rows).map(|r| t.row(r)).collect();
        Subspace::from_vectors(m.field, m.rows, &vectors)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The reduced spanning rows.
    pub fn row_basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Coordinate indices whose standard basis vectors span a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Canonical residue of `v` modulo the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for i in 0..self.ambient {
                if !row[i].is_zero() {
                    out[i] = out[i].sub(&c.mul(&row[i]));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Extends the span by `v`; returns false if `v` was already inside.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut red = self.reduce(v);
        let Some(p) = red.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = red[p].inverse().unwrap();
        for s in &mut red {
            *s = s.mul(&inv);
        }
        // keep existing rows reduced against the new pivot
        for row in &mut self.rows {
            let c = row[p].clone();
            if !c.is_zero() {
                for i in 0..red.len() {
                    row[i] = row[i].sub(&c.mul(&red[i]));
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.rows.insert(at, red);
        true
    }
}

pub fn zero_vec(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x.mul(s)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(q(), 2);
        let r = m.rref();
        assert_eq!(r.matrix, m);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_zero() {
        let m = Matrix::zero(q(), 3, 2);
        let r = m.rref();
        assert!(r.matrix.is_zero());
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rank_one_by_hand() {
        // hand row-reduction: [[1,2],[2,4]] -> [[1,2],[0,0]], rank 1
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn solve_identity() {
        let b = Matrix::from_i64(q(), &[&[3], &[5]]);
        let x = Matrix::identity(q(), 2).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_inconsistent() {
        // rows force x = 1 and x = 2 at once
        let a = Matrix::from_i64(q(), &[&[1], &[1]]);
        let b = Matrix::from_i64(q(), &[&[1], &[2]]);
        assert_eq!(a.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_shape_mismatch() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::from_i64(q(), &[&[1]]);
        assert!(a.solve(&b).is_err());
    }

    #[test]
    fn kernel_of_sum_row() {
        // kernel of [1 1] is spanned by (1,-1) after the enumeration oracle:
        // vectors (x,y) with x + y = 0 form a line through (1,-1).
        let m = Matrix::from_i64(q(), &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols, 1);
        assert!(m.mul(&k).is_zero());
        let ratio = k.get(0, 0).div(k.get(1, 0));
        assert_eq!(ratio, q().from_i64(-1));
    }

    #[test]
    fn empty_shapes() {
        let a = Matrix::zero(q(), 0, 3);
        let b = Matrix::zero(q(), 3, 0);
        assert_eq!(a.mul(&b.transpose().transpose()).rows, 0);
        assert_eq!(b.rank(), 0);
        assert_eq!(a.kernel_basis().cols, 3);
        let s = Subspace::from_columns(&b);
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn subspace_reduce_is_projection() {
        let f = q();
        let s = Subspace::from_vectors(
            f,
            3,
            &[
                alloc::vec![f.from_i64(1), f.from_i64(0), f.from_i64(2)],
                alloc::vec![f.from_i64(0), f.from_i64(1), f.from_i64(3)],
            ],
        );
        let v = alloc::vec![f.from_i64(4), f.from_i64(5), f.from_i64(6)];
        let r = s.reduce(&v);
        // pivot coordinates cleared, residue depends only on the class
        assert!(r[0].is_zero() && r[1].is_zero());
        assert_eq!(s.reduce(&r), r);
        assert!(s.contains(&alloc::vec![f.from_i64(2), f.from_i64(2), f.from_i64(10)]));
    }
}
