//! Row-compressed sparse integer matrices with exact (overflow-checked)
//! arithmetic.
//!
//! Operator identities in this crate (intertwining, composition) are exact
//! statements about integer matrices, so the arithmetic here never rounds:
//! every product and difference is carried out in `i64` with checked
//! operations, and any overflow surfaces as an error instead of wrapping.

use std::io::Write;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// CSR matrix over `i64`. Column indices are sorted within each row and
/// explicit zeros are never stored, so `==` is structural equality of the
/// represented matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<i64>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            row_ptr: vec![0; rows + 1],
            col_idx: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseIntMatrix {
            rows: n,
            cols: n,
            row_ptr: (0..=n).collect(),
            col_idx: (0..n).collect(),
            values: vec![1; n],
        }
    }

    /// Builds row by row. `entries` for each row may be unsorted and may
    /// contain duplicate columns; duplicates are accumulated.
    pub fn from_rows<I>(rows: usize, cols: usize, row_entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<(usize, i64)>>,
    {
        let mut m = SparseIntMatrix {
            rows,
            cols,
            row_ptr: Vec::with_capacity(rows + 1),
            col_idx: Vec::new(),
            values: Vec::new(),
        };
        m.row_ptr.push(0);
        let mut count = 0usize;
        for mut entries in row_entries {
            count += 1;
            entries.sort_unstable_by_key(|&(c, _)| c);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(entries.len());
            for (c, val) in entries {
                assert!(c < cols, "column {c} out of bounds for {cols} columns");
                match merged.last_mut() {
                    Some((last, acc)) if *last == c => {
                        *acc = acc
                            .checked_add(val)
                            .ok_or(Error::Overflow("sparse accumulation"))?;
                    }
                    _ => merged.push((c, val)),
                }
            }
            for (c, val) in merged {
                if val != 0 {
                    m.col_idx.push(c);
                    m.values.push(val);
                }
            }
            m.row_ptr.push(m.col_idx.len());
        }
        assert_eq!(count, rows, "row iterator produced {count} of {rows} rows");
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let lo = self.row_ptr[a];
        let hi = self.row_ptr[a + 1];
        self.col_idx[lo..hi]
            .iter()
            .copied()
            .zip(self.values[lo..hi].iter().copied())
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        let lo = self.row_ptr[a];
        let hi = self.row_ptr[a + 1];
        match self.col_idx[lo..hi].binary_search(&b) {
            Ok(pos) => self.values[lo + pos],
            Err(_) => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|a| self.row(a).all(|(b, val)| self.get(b, a) == val))
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows)
            .map(|a| self.row(a).map(|(_, v)| v).sum())
            .collect()
    }

    /// Exact product `self * other` in checked `i64` arithmetic.
    pub fn mul(&self, other: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut scratch: Vec<i64> = vec![0; other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut out_rows: Vec<Vec<(usize, i64)>> = Vec::with_capacity(self.rows);
        for a in 0..self.rows {
            for (k, left) in self.row(a) {
                for (b, right) in other.row(k) {
                    let term = left
                        .checked_mul(right)
                        .ok_or(Error::Overflow("sparse product"))?;
                    if scratch[b] == 0 && term != 0 {
                        touched.push(b);
                    }
                    scratch[b] = scratch[b]
                        .checked_add(term)
                        .ok_or(Error::Overflow("sparse product"))?;
                }
            }
            let mut entries: Vec<(usize, i64)> = Vec::with_capacity(touched.len());
            for &b in &touched {
                if scratch[b] != 0 {
                    entries.push((b, scratch[b]));
                }
                scratch[b] = 0;
            }
            touched.clear();
            out_rows.push(entries);
        }
        SparseIntMatrix::from_rows(self.rows, other.cols, out_rows)
    }

    fn combine(&self, other: &SparseIntMatrix, sign: i64) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut rows: Vec<Vec<(usize, i64)>> = Vec::with_capacity(self.rows);
        for a in 0..self.rows {
            let mut entries: Vec<(usize, i64)> = self.row(a).collect();
            for (b, v) in other.row(a) {
                let signed = v
                    .checked_mul(sign)
                    .ok_or(Error::Overflow("sparse combination"))?;
                entries.push((b, signed));
            }
            rows.push(entries);
        }
        SparseIntMatrix::from_rows(self.rows, self.cols, rows)
    }

    pub fn add(&self, other: &SparseIntMatrix) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &SparseIntMatrix) -> Result<Self> {
        self.combine(other, -1)
    }

    /// Entrywise `factor * self`, checked.
    pub fn scaled(&self, factor: i64) -> Result<Self> {
        let mut out = self.clone();
        for v in &mut out.values {
            *v = v
                .checked_mul(factor)
                .ok_or(Error::Overflow("sparse scaling"))?;
        }
        Ok(out)
    }

    /// Exact integer matrix-vector product.
    pub fn matvec_int(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut y = vec![0i64; self.rows];
        for (a, out) in y.iter_mut().enumerate() {
            for (b, val) in self.row(a) {
                let term = val
                    .checked_mul(x[b])
                    .ok_or(Error::Overflow("integer matvec"))?;
                *out = out
                    .checked_add(term)
                    .ok_or(Error::Overflow("integer matvec"))?;
            }
        }
        Ok(y)
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut y = vec![0.0; self.rows];
        for (a, out) in y.iter_mut().enumerate() {
            for (b, val) in self.row(a) {
                *out += val as f64 * x[b];
            }
        }
        Ok(y)
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.rows, self.cols);
        for a in 0..self.rows {
            for (b, val) in self.row(a) {
                m[(a, b)] = val as f64;
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.values
            .iter()
            .map(|&v| (v as f64) * (v as f64))
            .sum::<f64>()
            .sqrt()
    }

    /// Matrix Market coordinate format, 1-based indices. With
    /// `symmetric = true` only the lower triangle is emitted.
    pub fn write_matrix_market<W: Write>(&self, w: &mut W, symmetric: bool) -> Result<()> {
        let kind = if symmetric { "symmetric" } else { "general" };
        writeln!(w, "%%MatrixMarket matrix coordinate integer {kind}")?;
        let entries: Vec<(usize, usize, i64)> = (0..self.rows)
            .flat_map(|a| {
                self.row(a)
                    .filter(move |&(b, _)| !symmetric || b <= a)
                    .map(move |(b, val)| (a, b, val))
            })
            .collect();
        writeln!(w, "{} {} {}", self.rows, self.cols, entries.len())?;
        for (a, b, val) in entries {
            writeln!(w, "{} {} {}", a + 1, b + 1, val)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SparseIntMatrix {
        SparseIntMatrix::from_rows(
            2,
            3,
            vec![vec![(2, 3), (0, 1)], vec![(1, -2), (1, 1), (2, 0)]],
        )
        .unwrap()
    }

    #[test]
    fn construction_sorts_merges_and_drops_zeros() {
        let m = sample();
        assert_eq!(m.nnz(), 3);
        assert_eq!(m.get(0, 0), 1);
        assert_eq!(m.get(0, 2), 3);
        assert_eq!(m.get(1, 1), -1);
        assert_eq!(m.get(1, 2), 0);
        assert_eq!(m.row(0).collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn product_matches_dense() {
        let a = sample();
        let b = SparseIntMatrix::from_rows(
            3,
            2,
            vec![vec![(0, 2)], vec![(0, -1), (1, 4)], vec![(1, 5)]],
        )
        .unwrap();
        let c = a.mul(&b).unwrap();
        let dense = a.to_dense() * b.to_dense();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(c.get(i, j) as f64, dense[(i, j)]);
            }
        }
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn add_sub_scale() {
        let a = sample();
        assert!(a.sub(&a).unwrap().is_zero());
        let doubled = a.add(&a).unwrap();
        assert_eq!(doubled, a.scaled(2).unwrap());
        assert_eq!(doubled.max_abs(), 6);
    }

    #[test]
    fn matvec_int_matches_float() {
        let a = sample();
        let y = a.matvec_int(&[1, 2, 3]).unwrap();
        assert_eq!(y, vec![10, -2]);
        let yf = a.matvec(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(yf, vec![10.0, -2.0]);
        assert!(a.matvec_int(&[1, 2]).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = SparseIntMatrix::from_rows(1, 1, vec![vec![(0, i64::MAX)]]).unwrap();
        assert!(matches!(big.mul(&big), Err(Error::Overflow(_))));
        assert!(matches!(big.scaled(2), Err(Error::Overflow(_))));
    }

    #[test]
    fn matrix_market_output() {
        let m = SparseIntMatrix::from_rows(2, 2, vec![vec![(0, 2), (1, -1)], vec![(0, -1)]])
            .unwrap();
        let mut buf = Vec::new();
        m.write_matrix_market(&mut buf, true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "%%MatrixMarket matrix coordinate integer symmetric\n2 2 2\n1 1 2\n2 1 -1\n"
        );
    }
}
