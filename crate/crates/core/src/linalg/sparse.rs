//! Column-compressed matrices for the cobar complex, whose maps are mostly zero.

use std::collections::BTreeMap;

use super::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// Entries stored per column as `(row, value)` pairs, sorted by row, zeros never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, field, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let columns = (0..n).map(|i| vec![(i, field.one())]).collect();
        SparseMatrix { rows: n, cols: n, field, columns }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let columns = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| !m[(r, c)].is_zero())
                    .map(|r| (r, m[(r, c)].clone()))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: m.rows(), cols: m.cols(), field: m.field(), columns }
    }

    /// Builds from a column function that may return entries in any order, with repeats summed.
    pub fn from_column_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize) -> Vec<(usize, Scalar)>,
    ) -> Self {
        let columns = (0..cols).map(|c| normalize(field, f(c))).collect();
        SparseMatrix { rows, cols, field, columns }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                m[(*r, c)] = x.clone();
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

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                columns[*r].push((c, x.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, field: self.field, columns }
    }

    pub fn apply_sparse(&self, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, x) in v {
            for (r, a) in &self.columns[*c] {
                acc.entry(*r).or_insert_with(|| self.field.zero()).add_product(a, x);
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.columns[c] {
                out[*r].add_product(a, x);
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "sparse product shape mismatch");
        let columns = other.columns.iter().map(|col| self.apply_sparse(col)).collect();
        SparseMatrix { rows: self.rows, cols: other.cols, field: self.field, columns }
    }

    fn combine(&self, other: &SparseMatrix, sign: &Scalar) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sparse sum shape mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut entries = a.clone();
                entries.extend(b.iter().map(|(r, x)| (*r, x * sign)));
                normalize(self.field, entries)
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, field: self.field, columns }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, &self.field.one())
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, &-self.field.one())
    }

    /// Kronecker product under the left-slowest ordering.
    pub fn kronecker(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.field, other.field);
        let (r2, c2) = (other.rows, other.cols);
        let mut columns = Vec::with_capacity(self.cols * c2);
        for a_col in &self.columns {
            for b_col in &other.columns {
                let mut col = Vec::with_capacity(a_col.len() * b_col.len());
                for (i1, a) in a_col {
                    for (i2, b) in b_col {
                        col.push((i1 * r2 + i2, a * b));
                    }
                }
                columns.push(col);
            }
        }
        SparseMatrix { rows: self.rows * r2, cols: self.cols * c2, field: self.field, columns }
    }

    /// Rank by incremental sparse elimination: columns are reduced one at a time against the
    /// pivots found so far, each pivot keyed by its lowest row index.
    pub fn rank(&self) -> usize {
        let mut echelon: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        let mut order: Vec<usize> = (0..self.cols).collect();
        order.sort_by_key(|&c| self.columns[c].len());
        for c in order {
            let mut v = self.columns[c].clone();
            while let Some((lead, x)) = v.first().cloned() {
                match echelon.get(&lead) {
                    Some(p) => {
                        let factor = -&x;
                        v = axpy(self.field, &v, &factor, p);
                    }
                    None => {
                        let inv = x.inverse().expect("leading entry is nonzero");
                        let normalized = v.iter().map(|(r, y)| (*r, y * &inv)).collect();
                        echelon.insert(lead, normalized);
                        break;
                    }
                }
            }
        }
        echelon.len()
    }
}

fn normalize(field: FieldSpec, entries: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (r, x) in entries {
        *acc.entry(r).or_insert_with(|| field.zero()) += &x;
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// `v + factor * p` for sorted sparse vectors.
fn axpy(field: FieldSpec, v: &[(usize, Scalar)], factor: &Scalar, p: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let vi = v.get(i).map(|e| e.0);
        let pj = p.get(j).map(|e| e.0);
        match (vi, pj) {
            (Some(a), Some(b)) if a == b => {
                let mut x = v[i].1.clone();
                x.add_product(factor, &p[j].1);
                if !x.is_zero() {
                    out.push((a, x));
                }
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(v[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(v[i].clone());
                i += 1;
            }
            (_, Some(b)) => {
                let mut x = field.zero();
                x.add_product(factor, &p[j].1);
                out.push((b, x));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip_and_products() {
        let q = FieldSpec::Rationals;
        let a = Matrix::from_i64(q, &[&[1, 0, 2], &[0, 0, -1]]);
        let b = Matrix::from_i64(q, &[&[3, 1], &[0, 0], &[1, 4]]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.to_dense(), a);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.kronecker(&sb).to_dense(), a.kronecker(&b).unwrap());
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert!(sa.sub(&sa).is_zero());
    }

    #[test]
    fn rank_agrees_with_dense() {
        let f2 = FieldSpec::prime(2).unwrap();
        let m = Matrix::from_i64(f2, &[&[1, 1, 0, 1], &[0, 1, 1, 0], &[1, 0, 1, 1], &[1, 1, 1, 1]]);
        assert_eq!(SparseMatrix::from_dense(&m).rank(), m.rank());
    }
}
