use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::report::ValidationReport;
use crate::scalar::{FieldSpec, Scalar};

/// A finite-dimensional unital algebra given by structure constants.
///
/// `mult` is the map `A (x) A -> A` as a `dim x dim^2` matrix, so
/// `e_i e_j = sum_k mult[(k, i * dim + j)] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    mult: Matrix,
    unit: Vec<Scalar>,
}

impl Algebra {
    pub fn new(field: FieldSpec, dim: usize, mult: Matrix, unit: Vec<Scalar>) -> Result<Self> {
        if mult.rows() != dim || mult.cols() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication of a {dim}-dim algebra must be {dim}x{}, got {}x{}",
                dim * dim,
                mult.rows(),
                mult.cols()
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {dim}", unit.len())));
        }
        if mult.field() != field {
            return Err(Error::FieldMismatch(mult.field().label(), field.label()));
        }
        Ok(Algebra { field, dim, mult, unit })
    }

    /// Builds from `m[i][j][k]`, the coefficient of `e_k` in `e_i e_j`.
    pub fn from_cube(field: FieldSpec, cube: &[Vec<Vec<Scalar>>], unit: Vec<Scalar>) -> Result<Self> {
        let n = cube.len();
        let mult = Matrix::from_fn(field, n, n * n, |k, ij| cube[ij / n][ij % n][k].clone());
        Self::new(field, n, mult, unit)
    }

    /// The field itself, `k` as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Self {
        Algebra { field, dim: 1, mult: Matrix::identity(field, 1), unit: vec![field.one()] }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coefficient of `e_k` in `e_i e_j`.
    pub fn m(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(k, i * self.dim + j)]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field, self.dim, i)
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.m(i, j, k);
                    if !c.is_zero() {
                        o.add_product(c, &xy);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.product(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.product(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Checks associativity and the two-sided unit; witnesses are basis indices.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        report.record("associativity", self.associativity_witness());
        report.record("unit", self.unit_witness());
        report
    }

    fn associativity_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim;
        for i in 0..n {
            let ei = self.basis_vector(i);
            for j in 0..n {
                let ij = self.product(&ei, &self.basis_vector(j));
                for k in 0..n {
                    let ek = self.basis_vector(k);
                    let left = self.product(&ij, &ek);
                    let right = self.product(&ei, &self.product(&self.basis_vector(j), &ek));
                    if left != right {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }

    fn unit_witness(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .find(|&i| {
                let ei = self.basis_vector(i);
                self.product(&self.unit, &ei) != ei || self.product(&ei, &self.unit) != ei
            })
            .map(|i| vec![i])
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| (0..self.dim).all(|k| self.m(i, j, k) == self.m(j, i, k))))
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mult = Matrix::from_fn(self.field, n, n * n, |k, ij| self.m(ij % n, ij / n, k).clone());
        Algebra { field: self.field, dim: n, mult, unit: self.unit.clone() }
    }

    /// Tensor product algebra `A (x) B` with componentwise multiplication.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (a, b) = (self.dim, other.dim);
        let n = a * b;
        let mult = Matrix::from_fn(self.field, n, n * n, |k, ij| {
            let (x, y) = (ij / n, ij % n);
            let (x1, x2, y1, y2, k1, k2) = (x / b, x % b, y / b, y % b, k / b, k % b);
            self.m(x1, y1, k1) * other.m(x2, y2, k2)
        });
        let unit = tensor_vectors(&self.unit, &other.unit);
        Algebra { field: self.field, dim: n, mult, unit }
    }

    /// Smallest subalgebra containing the given vectors.
    pub fn generated_subalgebra(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut span = vec![self.unit.clone()];
        span.extend(vectors.iter().cloned());
        let mut current = Subspace::from_vectors(self.field, self.dim, span);
        loop {
            let basis = current.basis_vectors();
            let mut grown = basis.clone();
            for x in &basis {
                for y in &basis {
                    grown.push(self.product(x, y));
                }
            }
            let next = Subspace::from_vectors(self.field, self.dim, grown);
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// A small generating set chosen greedily among basis vectors, in index order.
    /// A linear map commuting with these commutes with the whole algebra.
    pub fn generators(&self) -> Vec<Vec<Scalar>> {
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        let mut sub = self.generated_subalgebra(&gens);
        for i in 0..self.dim {
            if sub.dim() == self.dim {
                break;
            }
            let e = self.basis_vector(i);
            if sub.contains(&e) {
                continue;
            }
            gens.push(e);
            sub = self.generated_subalgebra(&gens);
        }
        gens
    }
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Coordinates of `a (x) b` under the left-slowest ordering.
pub fn tensor_vectors(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers(field: FieldSpec) -> Algebra {
        // basis 1, t with t^2 = 0
        let z = field.zero();
        let o = field.one();
        let cube = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        Algebra::from_cube(field, &cube, vec![o, z]).unwrap()
    }

    #[test]
    fn dual_numbers_validate() {
        let a = dual_numbers(FieldSpec::Rationals);
        assert!(a.validate().passed());
        assert!(a.is_commutative());
        assert_eq!(a.generators().len(), 1);
    }

    #[test]
    fn broken_unit_is_reported() {
        let q = FieldSpec::Rationals;
        let a = dual_numbers(q);
        let broken = Algebra::new(q, 2, a.mult().clone(), vec![q.zero(), q.one()]).unwrap();
        let report = broken.validate();
        assert_eq!(report.failing(), vec!["unit"]);
    }

    #[test]
    fn tensor_of_dual_numbers() {
        let a = dual_numbers(FieldSpec::Rationals);
        let t = a.tensor(&a);
        assert_eq!(t.dim(), 4);
        assert!(t.validate().passed());
        assert_eq!(t.generators().len(), 2);
    }
}
