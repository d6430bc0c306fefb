use super::{rref_rows, Matrix};
use crate::scalar::{FieldSpec, Scalar};

/// A subspace of `k^n` in canonical form: the basis columns, read as rows, are in reduced
/// row echelon form. Two subspaces are equal exactly when their canonical bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// A complement to a subspace together with the maps that identify it with the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Ambient coordinates whose unit vectors represent the quotient basis.
    pub reps: Vec<usize>,
    /// `dim Q x ambient`; kills the subspace and is the identity on `reps`.
    pub projection: Matrix,
    /// `ambient x dim Q`; unit vectors at `reps`.
    pub section: Matrix,
}

impl Subspace {
    pub fn from_vectors(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut rows = vectors;
        let pivots = rref_rows(&mut rows, ambient);
        let basis = Matrix::from_rows(field, ambient, &rows).transpose();
        Subspace { ambient, basis, pivots }
    }

    /// Span of the columns of `m`.
    pub fn span_of_columns(m: &Matrix) -> Self {
        Self::from_vectors(m.field(), m.rows(), m.columns())
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, ambient, 0), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    /// `ambient x dim`, columns in canonical form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.columns()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.basis.apply(&coords) == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `dim x ambient` matrix taking a vector of the subspace to its coordinates.
    /// Only meaningful on vectors that lie in the subspace.
    pub fn coordinate_matrix(&self) -> Matrix {
        let field = self.field();
        let mut m = Matrix::zeros(field, self.dim(), self.ambient);
        for (i, &p) in self.pivots.iter().enumerate() {
            m[(i, p)] = field.one();
        }
        m
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::from_vectors(self.field(), self.ambient, vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(field, self.ambient);
        }
        let stacked = self.basis.hstack(&other.basis.scale(&-field.one()));
        let ker = stacked.kernel();
        let left = self.basis.mul(&ker.basis().select_rows(&(0..self.dim()).collect::<Vec<_>>()));
        Subspace::span_of_columns(&left)
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient);
        Subspace::span_of_columns(&map.mul(&self.basis))
    }

    /// A map whose kernel is this subspace, onto the coordinates outside the pivots.
    pub fn quotient(&self) -> Quotient {
        let field = self.field();
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let reps: Vec<usize> = (0..self.ambient).filter(|&i| !is_pivot[i]).collect();
        // P(v) = (v - B v[pivots]) restricted to reps
        let mut projection = Matrix::zeros(field, reps.len(), self.ambient);
        for (qi, &r) in reps.iter().enumerate() {
            projection[(qi, r)] = field.one();
            for (bi, &p) in self.pivots.iter().enumerate() {
                let b = &self.basis[(r, bi)];
                if !b.is_zero() {
                    projection[(qi, p)] = -b;
                }
            }
        }
        let mut section = Matrix::zeros(field, self.ambient, reps.len());
        for (qi, &r) in reps.iter().enumerate() {
            section[(r, qi)] = field.one();
        }
        Quotient { reps, projection, section }
    }

    /// Whether `map` sends this subspace into `target`.
    pub fn maps_into(&self, map: &Matrix, target: &Subspace) -> bool {
        map.mul(&self.basis).columns().iter().all(|v| target.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn canonical_form_ignores_spanning_set() {
        let a = Subspace::from_vectors(q(), 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::from_vectors(q(), 3, vec![v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_examples() {
        let s = Subspace::from_vectors(q(), 2, vec![v(&[1, 0])]);
        let quo = s.quotient();
        assert_eq!(quo.reps.len(), 1);
        assert!(quo.projection.apply(&v(&[1, 0])).iter().all(Scalar::is_zero));

        let full = Subspace::full(q(), 3);
        assert_eq!(full.quotient().reps.len(), 0);

        let zero = Subspace::zero(q(), 3);
        assert_eq!(zero.quotient().projection, Matrix::identity(q(), 3));
    }

    #[test]
    fn projection_kernel_is_the_subspace() {
        let s = Subspace::from_vectors(q(), 4, vec![v(&[1, 2, 0, 1]), v(&[0, 1, 1, 3])]);
        let quo = s.quotient();
        assert_eq!(quo.projection.kernel(), s);
        let ps = quo.projection.mul(&quo.section);
        assert_eq!(ps, Matrix::identity(q(), 2));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::from_vectors(q(), 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_vectors(q(), 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::from_vectors(q(), 3, vec![v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(q(), 3));
        assert!(a.intersection(&b).is_subspace_of(&a));
    }
}
