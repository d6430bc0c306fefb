//! Finite-dimensional Hopf algebras by structure constants.

mod algebra;
mod integrals;

pub use algebra::{tensor_vectors, unit_vector, Algebra};
pub use integrals::IntegralData;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::{FieldSpec, Scalar};

/// Names used in validation reports, in report order.
pub const HOPF_AXIOMS: [&str; 7] = [
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "bialgebra",
    "antipode",
    "antipode-bijective",
];

/// A Hopf algebra with bijective antipode.
///
/// `comult` is `H -> H (x) H` as a `dim^2 x dim` matrix: `Delta(e_i) = sum comult[(j*dim+k, i)] e_j (x) e_k`.
/// `antipode` holds `S(e_i)` in column `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    comult: Matrix,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inv: Option<Matrix>,
}

impl HopfAlgebra {
    /// Assembles the data without checking axioms; only shapes are checked.
    /// When `antipode` is `None` it is solved for, which fails if no antipode exists.
    pub fn from_parts(algebra: Algebra, comult: Matrix, counit: Vec<Scalar>, antipode: Option<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        let field = algebra.field();
        if comult.rows() != n * n || comult.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication must be {}x{n}, got {}x{}",
                n * n,
                comult.rows(),
                comult.cols()
            )));
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch(format!("counit has length {}, expected {n}", counit.len())));
        }
        if comult.field() != field {
            return Err(Error::FieldMismatch(comult.field().label(), field.label()));
        }
        let antipode = match antipode {
            Some(s) => {
                if s.rows() != n || s.cols() != n {
                    return Err(Error::DimensionMismatch(format!("antipode must be {n}x{n}")));
                }
                s
            }
            None => solve_antipode(&algebra, &comult, &counit)?,
        };
        let antipode_inv = antipode.inverse();
        Ok(HopfAlgebra { algebra, comult, counit, antipode, antipode_inv })
    }

    /// Assembles and validates; fails with the validation report when an axiom does not hold.
    pub fn new(algebra: Algebra, comult: Matrix, counit: Vec<Scalar>, antipode: Option<Matrix>) -> Result<Self> {
        let h = Self::from_parts(algebra, comult, counit, antipode)?;
        let report = h.validate();
        if !report.passed() {
            return Err(Error::Validation { object: "Hopf algebra".into(), report });
        }
        Ok(h)
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// The inverse antipode. Panics if the antipode is singular, which validation rules out.
    pub fn antipode_inv(&self) -> &Matrix {
        self.antipode_inv.as_ref().expect("antipode is not bijective")
    }

    /// Coefficient of `e_k` in `e_i e_j`.
    pub fn m(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.algebra.m(i, j, k)
    }

    /// Coefficient of `e_j (x) e_k` in `Delta(e_i)`.
    pub fn delta(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[(j * self.dim() + k, i)]
    }

    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.algebra.product(a, b)
    }

    pub fn coproduct(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(a)
    }

    pub fn epsilon(&self, a: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (x, e) in a.iter().zip(&self.counit) {
            acc.add_product(x, e);
        }
        acc
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis_vector(i)
    }

    /// Convolution product in `H*`: `(f g)(h) = f(h_1) g(h_2)`, covectors as coordinate vectors.
    pub fn convolve(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut acc = self.field().zero();
                for j in 0..n {
                    if f[j].is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let c = self.delta(i, j, k);
                        if !c.is_zero() && !g[k].is_zero() {
                            acc.add_product(c, &(&f[j] * &g[k]));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.delta(i, j, k) == self.delta(i, k, j))))
    }

    /// Checks every Hopf axiom and reports failing basis indices.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.algebra.validate();
        report.record("coassociativity", self.coassociativity_witness());
        report.record("counit", self.counit_witness());
        report.record("bialgebra", self.bialgebra_witness());
        report.record("antipode", self.antipode_witness());
        let bijective = match &self.antipode_inv {
            Some(inv) => inv.mul(&self.antipode) == Matrix::identity(self.field(), self.dim()),
            None => false,
        };
        report.record("antipode-bijective", if bijective { None } else { Some(vec![]) });
        report
    }

    fn coassociativity_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let id = Matrix::identity(self.field(), n);
        let left = self.comult.kronecker(&id).expect("same field").mul(&self.comult);
        let right = id.kronecker(&self.comult).expect("same field").mul(&self.comult);
        (0..n).find(|&i| left.column(i) != right.column(i)).map(|i| vec![i])
    }

    fn counit_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        (0..n)
            .find(|&i| {
                let ei = self.basis_vector(i);
                let d = self.coproduct(&ei);
                let mut left = vec![self.field().zero(); n];
                let mut right = vec![self.field().zero(); n];
                for j in 0..n {
                    for k in 0..n {
                        let c = &d[j * n + k];
                        if c.is_zero() {
                            continue;
                        }
                        left[k].add_product(c, &self.counit[j]);
                        right[j].add_product(c, &self.counit[k]);
                    }
                }
                left != ei || right != ei
            })
            .map(|i| vec![i])
    }

    /// `Delta` and `epsilon` are unital algebra maps.
    fn bialgebra_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let unit = self.unit();
        if self.coproduct(unit) != tensor_vectors(unit, unit) || !self.epsilon(unit).is_one() {
            return Some(vec![]);
        }
        let tensor = self.algebra.tensor(&self.algebra);
        for i in 0..n {
            let ei = self.basis_vector(i);
            for j in 0..n {
                let ej = self.basis_vector(j);
                let prod = self.product(&ei, &ej);
                let lhs = self.coproduct(&prod);
                let rhs = tensor.product(&self.coproduct(&ei), &self.coproduct(&ej));
                if lhs != rhs || self.epsilon(&prod) != &self.counit[i] * &self.counit[j] {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    fn antipode_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        (0..n)
            .find(|&i| {
                let d = self.coproduct(&self.basis_vector(i));
                let target: Vec<Scalar> = self.unit().iter().map(|u| u * &self.counit[i]).collect();
                let mut left = vec![self.field().zero(); n];
                let mut right = vec![self.field().zero(); n];
                for j in 0..n {
                    for k in 0..n {
                        let c = &d[j * n + k];
                        if c.is_zero() {
                            continue;
                        }
                        let sj = self.antipode.column(j);
                        let sk = self.antipode.column(k);
                        let l = self.product(&sj, &self.basis_vector(k));
                        let r = self.product(&self.basis_vector(j), &sk);
                        for p in 0..n {
                            left[p].add_product(c, &l[p]);
                            right[p].add_product(c, &r[p]);
                        }
                    }
                }
                left != target || right != target
            })
            .map(|i| vec![i])
    }

    /// The linear dual `H*` in the dual basis.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let field = self.field();
        // f_a f_b = sum_i Delta[i][a][b] f_i
        let mult = Matrix::from_fn(field, n, n * n, |i, ab| self.delta(i, ab / n, ab % n).clone());
        let algebra = Algebra::new(field, n, mult, self.counit.clone()).expect("shapes agree");
        // Delta(f_i) = sum m[a][b][i] f_a (x) f_b
        let comult = Matrix::from_fn(field, n * n, n, |ab, i| self.m(ab / n, ab % n, i).clone());
        let counit = self.unit().to_vec();
        let antipode = self.antipode.transpose();
        let antipode_inv = self.antipode_inv.as_ref().map(Matrix::transpose);
        HopfAlgebra { algebra, comult, counit, antipode, antipode_inv }
    }

    /// Integrals in `H*` and the normalized one when it exists.
    pub fn integrals(&self) -> IntegralData {
        integrals::compute(self)
    }

    pub fn is_cosemisimple(&self) -> bool {
        self.integrals().cosemisimple
    }
}

/// Solves `S(h_1) h_2 = epsilon(h) 1 = h_1 S(h_2)` for `S`.
///
/// The unknown `s[l][j]`, the coefficient of `e_l` in `S(e_j)`, sits at position `l * n + j`.
pub fn solve_antipode(algebra: &Algebra, comult: &Matrix, counit: &[Scalar]) -> Result<Matrix> {
    let n = algebra.dim();
    let field = algebra.field();
    let unknowns = n * n;
    let mut eqs = Matrix::zeros(field, 2 * n * n, unknowns);
    let mut rhs = vec![field.zero(); 2 * n * n];
    for i in 0..n {
        for p in 0..n {
            let row_l = i * n + p;
            let row_r = n * n + i * n + p;
            let target = &counit[i] * &algebra.unit()[p];
            rhs[row_l] = target.clone();
            rhs[row_r] = target;
            for j in 0..n {
                for k in 0..n {
                    let c = &comult[(j * n + k, i)];
                    if c.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        // S(e_j) e_k
                        let a = algebra.m(l, k, p);
                        if !a.is_zero() {
                            eqs[(row_l, l * n + j)].add_product(c, a);
                        }
                        // e_j S(e_k)
                        let b = algebra.m(j, l, p);
                        if !b.is_zero() {
                            eqs[(row_r, l * n + k)].add_product(c, b);
                        }
                    }
                }
            }
        }
    }
    match eqs.solve(&rhs)? {
        Some(x) => Matrix::from_row_major(field, n, n, x),
        None => Err(Error::NoAntipode),
    }
}
