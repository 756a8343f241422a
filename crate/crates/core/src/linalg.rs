//! Dense matrices over a finite field: rank, kernels and solves by Gaussian
//! elimination.
//!
//! Pivoting is fixed: columns are scanned left to right and the pivot of a
//! column is the first remaining row with a nonzero entry. Every basis returned
//! here is therefore a deterministic function of the input.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        FMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| x % field.order()));
        }
        FMatrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &FMatrix) -> Result<FMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let k = &self.field;
        let mut out = Self::zeros(k, self.rows, other.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(m, c);
                    if b != 0 {
                        let v = k.add(out.get(r, c), k.mul(a, b));
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let k = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(0, |acc, (&a, &b)| k.add(acc, k.mul(a, b)))
            })
            .collect())
    }

    pub fn add(&self, other: &FMatrix) -> Result<FMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| k.add(a, b)).collect();
        Ok(FMatrix { field: k.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let k = self.field.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(r) = (prow..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if r != prow {
                for c in 0..self.cols {
                    self.data.swap(r * self.cols + c, prow * self.cols + c);
                }
            }
            let inv = k.inv(self.get(prow, col));
            for c in col..self.cols {
                let v = k.mul(self.get(prow, c), inv);
                self.set(prow, c, v);
            }
            for r2 in 0..self.rows {
                if r2 == prow {
                    continue;
                }
                let factor = self.get(r2, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = k.sub(self.get(r2, c), k.mul(factor, self.get(prow, c)));
                    self.set(r2, c, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right null space, as the columns of the returned matrix.
    pub fn kernel(&self) -> FMatrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let k = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(k, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            basis.set(fc, j, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(pc, j, k.neg(m.get(r, fc)));
            }
        }
        basis
    }

    /// A solution of `self * x = b`, with all free variables set to zero, or
    /// `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let mut aug = Self::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r] % self.field.order());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

/// Incrementally built subspace of `k^dim`, kept in reduced echelon form.
///
/// Reducing a vector against it yields a canonical representative of the
/// vector's class in the quotient by the subspace.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    dim: usize,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl Subspace {
    pub fn new(field: &Field, dim: usize) -> Self {
        Subspace { field: field.clone(), dim, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Elem>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Reduces `v` against the subspace; the result has zeros at every pivot.
    pub fn reduce(&self, v: &mut [Elem]) {
        let k = &self.field;
        for (p, row) in &self.rows {
            let f = v[*p];
            if f != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    if y != 0 {
                        *x = k.sub(*x, k.mul(f, y));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.dim);
        let k = self.field.clone();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = k.inv(w[p]);
        for x in w.iter_mut() {
            *x = k.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&w) {
                    if y != 0 {
                        *x = k.sub(*x, k.mul(f, y));
                    }
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let k = f2();
        let a = FMatrix::from_rows(&k, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(a.kernel().columns(), vec![vec![1, 1]]);
        assert_eq!(FMatrix::identity(&k, 3).kernel().cols(), 0);
        let a = FMatrix::from_rows(&k, &[vec![1, 0, 1], vec![0, 1, 1]]);
        // Oracle: enumerate all of F_2^3.
        let mut null = Vec::new();
        for code in 0u32..8 {
            let v: Vec<u32> = (0..3).map(|i| (code >> i) & 1).collect();
            if a.mul_vec(&v).unwrap().iter().all(|&x| x == 0) {
                null.push(v);
            }
        }
        assert_eq!(null, vec![vec![0, 0, 0], vec![1, 1, 1]]);
        assert_eq!(a.kernel().columns(), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn solve_examples() {
        let k = f2();
        let id = FMatrix::identity(&k, 3);
        assert_eq!(id.solve(&[1, 0, 1]).unwrap(), Some(vec![1, 0, 1]));
        let a = FMatrix::from_rows(&k, &[vec![1, 1]]);
        assert_eq!(a.solve(&[1]).unwrap(), Some(vec![1, 0]));
        let z = FMatrix::zeros(&k, 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        assert!(z.solve(&[1]).is_err());
    }

    #[test]
    fn subspace_reduction_is_canonical() {
        let k = Field::prime(3).unwrap();
        let mut s = Subspace::new(&k, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1]));
        let mut a = vec![2, 2, 2];
        let mut b = vec![0, 0, 1];
        s.reduce(&mut a);
        s.reduce(&mut b);
        // both are congruent modulo the span
        let diff: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| k.sub(x, y)).collect();
        assert!(diff.iter().all(|&x| x == 0) || s.contains(&diff));
    }
}
