//! Dense exact linear algebra over Q and GF(p).
//!
//! Matrices act on column vectors: a map `V -> W` is stored as a `dim W x dim V`
//! matrix. Tensor products of spaces use one global basis ordering, lexicographic
//! with the left factor slowest: `e_i (x) f_j` has index `i * dim F + j`.

mod elimination;
mod sparse;
mod subspace;

pub use elimination::{rank_of_rows, rref_rows};
pub use sparse::SparseMatrix;
pub use subspace::{Quotient, Subspace};

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.label())?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Builds a matrix column by column; `f(c)` is the image of the `c`-th basis vector.
    pub fn from_column_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize) -> Vec<Scalar>) -> Self {
        let columns: Vec<Vec<Scalar>> = (0..cols).map(&mut f).collect();
        Self::from_columns(field, rows, &columns)
    }

    /// Row-major data; fails when the entry count is wrong or an entry lives in another field.
    pub fn from_row_major(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(bad.field().label(), field.label()));
        }
        Ok(Matrix { rows, cols, field, data })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            debug_assert_eq!(row.len(), cols);
            data.extend(row.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, field, data }
    }

    pub fn row_vector(field: FieldSpec, v: &[Scalar]) -> Self {
        Self::from_rows(field, v.len(), &[v.to_vec()])
    }

    pub fn column_vector(field: FieldSpec, v: &[Scalar]) -> Self {
        Self::from_columns(field, v.len(), &[v.to_vec()])
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

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    fn check_same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.label(), other.field.label()));
        }
        Ok(())
    }

    /// Matrix product; skips zero entries of the left factor.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.field, other.field, "matrix product field mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self.data[r * self.cols + c];
                if !a.is_zero() {
                    o.add_product(a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    /// `a (x) b` under the left-slowest basis ordering.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_field(other)?;
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, r1 * r2, c1 * c2);
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = &self[(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = &other[(i2, j2)];
                        if !b.is_zero() {
                            out[(i1 * r2 + i2, j1 * c2 + j2)] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    pub fn vstack_all(field: FieldSpec, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, field, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.row_vecs(), self.cols)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref_rows(&mut rows, self.cols);
        (Matrix::from_rows(self.field, self.cols, &rows), pivots)
    }

    /// Canonical basis of the null space.
    pub fn kernel(&self) -> Subspace {
        let mut rows = self.row_vecs();
        let pivots = rref_rows(&mut rows, self.cols);
        let mut is_pivot = vec![None; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                let x = &rows[r][free];
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// Canonical basis of the column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, self.columns())
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} equations",
                rhs.len(),
                self.rows
            )));
        }
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Solves `self * X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch("solve_matrix row mismatch".into()));
        }
        let n = self.cols;
        let k = rhs.cols;
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(rhs.row(r).iter().cloned());
                row
            })
            .collect();
        let pivots = rref_rows(&mut rows, n + k);
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, k);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x[(p, j)] = rows[r][n + j].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        match self.solve_matrix(&id) {
            Ok(Some(x)) if self.mul(&x) == id => Some(x),
            _ => None,
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    /// Entries as strings, row-major.
    pub fn to_strings(&self) -> Vec<String> {
        self.data.iter().map(|s| s.to_string()).collect()
    }

    pub fn parse_row_major(field: FieldSpec, rows: usize, cols: usize, entries: &[String]) -> Result<Matrix> {
        let data = entries.iter().map(|e| field.parse(e)).collect::<Result<Vec<_>>>()?;
        Matrix::from_row_major(field, rows, cols, data)
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_dense(self)
    }
}

/// Permutation taking `A (x) B (x) C` coordinates to `A (x) C (x) B` coordinates.
pub fn swap_last_two(field: FieldSpec, a: usize, b: usize, c: usize) -> Matrix {
    let n = a * b * c;
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..a {
        for j in 0..b {
            for k in 0..c {
                m[(i * c * b + k * b + j, i * b * c + j * c + k)] = field.one();
            }
        }
    }
    m
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id = Matrix::identity(q(), 3);
        assert_eq!(id.kernel().dim(), 0);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let z = Matrix::zeros(q(), 2, 3);
        let k = z.kernel();
        assert_eq!(k.dim(), 3);
        assert_eq!(k, Subspace::full(q(), 3));
    }

    #[test]
    fn kernel_over_gf2() {
        let f2 = FieldSpec::prime(2).unwrap();
        let m = Matrix::from_i64(f2, &[&[1, 1], &[0, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().column(0), vec![f2.one(), f2.one()]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(q(), 2);
        let x = id.solve(&[q().from_i64(1), q().from_i64(2)]).unwrap().unwrap();
        assert_eq!(x, vec![q().from_i64(1), q().from_i64(2)]);

        let z = Matrix::zeros(q(), 1, 1);
        assert!(z.solve(&[q().one()]).unwrap().is_none());

        let two = Matrix::from_i64(q(), &[&[2]]);
        let x = two.solve(&[q().one()]).unwrap().unwrap();
        assert_eq!(x[0].to_string(), "1/2");

        assert!(two.solve(&[q().one(), q().one()]).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let k = Matrix::identity(q(), 2).kronecker(&Matrix::identity(q(), 3)).unwrap();
        assert_eq!(k, Matrix::identity(q(), 6));
        let a = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let z = Matrix::zeros(q(), 2, 2);
        assert!(a.kronecker(&z).unwrap().is_zero());
        let six = Matrix::from_i64(q(), &[&[2]]).kronecker(&Matrix::from_i64(q(), &[&[3]])).unwrap();
        assert_eq!(six, Matrix::from_i64(q(), &[&[6]]));
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(a.kronecker(&Matrix::identity(f2, 1)).is_err());
    }

    #[test]
    fn kronecker_acts_on_pure_tensors() {
        let a = Matrix::from_i64(q(), &[&[1, 2], &[0, -1], &[3, 1]]);
        let b = Matrix::from_i64(q(), &[&[2, 0], &[1, 5]]);
        let v = vec![q().from_i64(1), q().from_i64(-2)];
        let w = vec![q().from_i64(3), q().from_i64(4)];
        let vw: Vec<Scalar> = v.iter().flat_map(|x| w.iter().map(move |y| x * y)).collect();
        let av = a.apply(&v);
        let bw = b.apply(&w);
        let expected: Vec<Scalar> = av.iter().flat_map(|x| bw.iter().map(move |y| x * y)).collect();
        assert_eq!(a.kronecker(&b).unwrap().apply(&vw), expected);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(q(), 2));
        assert!(Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn swap_permutation() {
        let p = swap_last_two(q(), 1, 2, 3);
        let a = Matrix::from_i64(q(), &[&[1], &[2]]);
        let b = Matrix::from_i64(q(), &[&[3], &[4], &[5]]);
        let ab = a.kronecker(&b).unwrap();
        let ba = b.kronecker(&a).unwrap();
        assert_eq!(p.mul(&ab), ba);
    }
}
