use super::{Field, Ring};
use std::fmt;

/// Dense matrix over an exact ring, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &R) {
        let cell = &mut self.data[i * self.cols + j];
        *cell = cell.add(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> R {
        assert_eq!(self.rows, self.cols);
        let mut acc = R::zero();
        for i in 0..self.rows {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<F: Field> Matrix<F> {
    /// Rank via straightforward Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut cs = ColumnSpace::new(self.rows);
        for j in 0..self.cols {
            cs.insert(self.column(j));
        }
        cs.rank()
    }

    /// Basis of the right kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        // Row-reduce, then read free columns.
        let (rref, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = Some(r);
            }
            v
        };
        let mut out = vec![];
        for j in 0..self.cols {
            if pivot_set[j].is_some() {
                continue;
            }
            let mut vker = vec![F::zero(); self.cols];
            vker[j] = F::one();
            for (jj, slot) in pivot_set.iter().enumerate() {
                if let Some(r) = slot {
                    vker[jj] = rref.get(*r, j).neg();
                }
            }
            out.push(vker);
        }
        out
    }

    /// Reduced row echelon form with the pivot column of each nonzero row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = vec![];
        let mut row = 0;
        for col in 0..m.cols {
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, row * m.cols + j);
                }
            }
            let inv = m.get(row, col).inv();
            for j in col..m.cols {
                let v = m.get(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j).sub(&factor.mul(m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Echelonized column space.
    pub fn column_space(&self) -> ColumnSpace<F> {
        let mut cs = ColumnSpace::new(self.rows);
        for j in 0..self.cols {
            cs.insert(self.column(j));
        }
        cs
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Incrementally built subspace of F^dim kept in reduced echelon form.
///
/// Coordinates of an inserted-span vector in the echelon basis can be
/// read off directly at the pivot positions.
pub struct ColumnSpace<F: Field> {
    dim: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> ColumnSpace<F> {
    pub fn new(dim: usize) -> Self {
        ColumnSpace {
            dim,
            basis: vec![],
            pivots: vec![],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Subtract the projection onto the current span, in place.
    pub fn reduce(&self, v: &mut [F]) {
        assert_eq!(v.len(), self.dim);
        for (b, &p) in self.basis.iter().zip(self.pivots.iter()) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (vi, bi) in v.iter_mut().zip(b.iter()) {
                if !bi.is_zero() {
                    *vi = vi.sub(&c.mul(bi));
                }
            }
        }
    }

    /// Add a vector to the span; returns false when it was already in.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        // keep earlier basis vectors reduced against the new pivot
        for b in self.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let c = b[p].clone();
            for (bi, vi) in b.iter_mut().zip(v.iter()) {
                if !vi.is_zero() {
                    *bi = bi.sub(&c.mul(vi));
                }
            }
        }
        self.basis.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the echelon basis, when `v` lies in the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rational};

    fn m(rows: usize, cols: usize, vals: &[i64]) -> Matrix<Rational> {
        assert_eq!(vals.len(), rows * cols);
        Matrix::from_fn(rows, cols, |i, j| rat(vals[i * cols + j]))
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&ker[0]).iter().all(|x| x == &rat(0)));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn column_space_coords() {
        let mut cs = ColumnSpace::new(3);
        assert!(cs.insert(vec![rat(1), rat(1), rat(0)]));
        assert!(cs.insert(vec![rat(0), rat(2), rat(2)]));
        assert!(!cs.insert(vec![rat(1), rat(3), rat(2)]));
        assert_eq!(cs.rank(), 2);
        // v = original b1 + b2; coords are in the echelon basis
        let v = vec![rat(1), rat(3), rat(2)];
        let coords = cs.coords(&v).unwrap();
        let mut rebuilt = vec![rat(0); 3];
        for (c, b) in coords.iter().zip(cs.basis()) {
            for (r, bi) in rebuilt.iter_mut().zip(b.iter()) {
                *r += c * bi;
            }
        }
        assert_eq!(rebuilt, v);
        assert!(!cs.contains(&[rat(1), rat(0), rat(0)]));
    }

    #[test]
    fn idempotent_split_via_column_space() {
        // P = projection onto span{(1,1)} along (1,-1)
        let p = Matrix::from_fn(2, 2, |_, _| rat(1) / rat(2));
        assert_eq!(p.mul(&p), p);
        let cs = p.column_space();
        assert_eq!(cs.rank(), 1);
    }
}
