//! Left modules over finite-dimensional algebras, free resolutions and Ext.
//!
//! An action `R (x) M -> M` is a `dim M x (dim R * dim M)` matrix: the image of
//! `e_r (x) e_m` is column `r * dim M + m`.

pub(crate) mod resolution;

pub use resolution::{ext_over_algebra, injective_resolution, projective_resolution, InjectiveResolution, ProjectiveResolution};

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comodule::random_vector;
use crate::error::{Error, Result};
use crate::hopf::{unit_vector, Algebra};
use crate::linalg::{Matrix, Subspace};
use crate::report::ValidationReport;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Matrix,
}

impl AlgebraModule {
    pub fn from_parts(algebra: Arc<Algebra>, dim: usize, action: Matrix) -> Result<Self> {
        if action.rows() != dim || action.cols() != algebra.dim() * dim {
            return Err(Error::DimensionMismatch(format!(
                "action on a {dim}-dim module must be {dim}x{}, got {}x{}",
                algebra.dim() * dim,
                action.rows(),
                action.cols()
            )));
        }
        Ok(AlgebraModule { algebra, dim, action })
    }

    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Matrix) -> Result<Self> {
        let m = Self::from_parts(algebra, dim, action)?;
        let report = m.validate();
        if !report.passed() {
            return Err(Error::Validation { object: "module".into(), report });
        }
        Ok(m)
    }

    /// Builds from the matrices of the basis elements of the algebra.
    pub fn from_basis_actions(algebra: Arc<Algebra>, dim: usize, acts: &[Matrix]) -> Result<Self> {
        let field = algebra.field();
        let n = algebra.dim();
        let action = Matrix::from_column_fn(field, dim, n * dim, |col| acts[col / dim].column(col % dim));
        Self::from_parts(algebra, dim, action)
    }

    /// `R^rank`, with basis `e_j (x) e_i` at index `j * dim R + i`.
    pub fn free(algebra: &Arc<Algebra>, rank: usize) -> Self {
        let field = algebra.field();
        let acts: Vec<Matrix> = (0..algebra.dim())
            .map(|r| Matrix::identity(field, rank).kronecker(&algebra.left_mult(&algebra.basis_vector(r))).expect("same field"))
            .collect();
        Self::from_basis_actions(algebra.clone(), rank * algebra.dim(), &acts).expect("shape")
    }

    /// `R*` with `(r f)(x) = f(x r)`; an injective cogenerator.
    pub fn coregular(algebra: &Arc<Algebra>) -> Self {
        let acts: Vec<Matrix> = (0..algebra.dim()).map(|i| algebra.right_mult(&algebra.basis_vector(i)).transpose()).collect();
        Self::from_basis_actions(algebra.clone(), algebra.dim(), &acts).expect("shape")
    }

    /// One-dimensional module through a character `chi`, given on basis elements.
    pub fn character(algebra: &Arc<Algebra>, chi: &[Scalar]) -> Result<Self> {
        let field = algebra.field();
        let action = Matrix::row_vector(field, chi);
        Self::new(algebra.clone(), 1, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    /// Matrix of `m -> r m`.
    pub fn act_matrix(&self, r: &[Scalar]) -> Matrix {
        let field = self.field();
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (i, x) in r.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            out = out.add(&self.basis_act(i).scale(x));
        }
        out
    }

    pub fn basis_act(&self, i: usize) -> Matrix {
        let cols: Vec<usize> = (0..self.dim).map(|m| i * self.dim + m).collect();
        self.action.select_columns(&cols)
    }

    pub fn act(&self, r: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.act_matrix(r).apply(m)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = self.algebra.dim();
        let acts: Vec<Matrix> = (0..n).map(|i| self.basis_act(i)).collect();
        let mut witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.product(&self.algebra.basis_vector(i), &self.algebra.basis_vector(j));
                if self.act_matrix(&prod) != acts[i].mul(&acts[j]) {
                    witness = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        report.record("associativity", witness);
        let unital = self.act_matrix(self.algebra.unit()) == Matrix::identity(self.field(), self.dim);
        report.record("unit", if unital { None } else { Some(vec![]) });
        report
    }

    pub fn same_algebra(&self, other: &AlgebraModule) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::Hypothesis("modules over different algebras".into()))
        }
    }

    pub fn direct_sum(&self, other: &AlgebraModule) -> Result<AlgebraModule> {
        self.same_algebra(other)?;
        let acts: Vec<Matrix> = (0..self.algebra.dim()).map(|i| self.basis_act(i).direct_sum(&other.basis_act(i))).collect();
        Self::from_basis_actions(self.algebra.clone(), self.dim + other.dim, &acts)
    }

    /// Whether a linear map `self -> target` commutes with the action.
    pub fn is_linear(&self, f: &Matrix, target: &AlgebraModule) -> bool {
        (0..self.algebra.dim()).all(|i| f.mul(&self.basis_act(i)) == target.basis_act(i).mul(f))
    }

    /// `Hom_R(self, target)` inside the flattened `Hom(M, N)`, using a generating set of `R`.
    pub fn hom(&self, target: &AlgebraModule) -> Result<Subspace> {
        self.same_algebra(target)?;
        Ok(linearity_equations(self, target, &self.algebra.generators()).kernel())
    }

    /// Smallest submodule containing `vectors`.
    pub fn generated_submodule(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let acts: Vec<Matrix> = (0..self.algebra.dim()).map(|i| self.basis_act(i)).collect();
        let mut span: Vec<Vec<Scalar>> = Vec::new();
        for v in vectors {
            for a in &acts {
                span.push(a.apply(v));
            }
        }
        Subspace::from_vectors(self.field(), self.dim, span)
    }

    /// The action restricted to a stable subspace, in its canonical basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<AlgebraModule> {
        let coords = sub.coordinate_matrix();
        let mut acts = Vec::new();
        for i in 0..self.algebra.dim() {
            let image = self.basis_act(i).mul(sub.basis());
            for v in image.columns() {
                if !sub.contains(&v) {
                    return Err(Error::Hypothesis("subspace is not a submodule".into()));
                }
            }
            acts.push(coords.mul(&image));
        }
        Self::from_basis_actions(self.algebra.clone(), sub.dim(), &acts)
    }

    pub fn quotient(&self, sub: &Subspace) -> Result<(AlgebraModule, crate::linalg::Quotient)> {
        self.restrict(sub)?;
        let q = sub.quotient();
        let acts: Vec<Matrix> = (0..self.algebra.dim()).map(|i| q.projection.mul(&self.basis_act(i)).mul(&q.section)).collect();
        let m = Self::from_basis_actions(self.algebra.clone(), q.reps.len(), &acts)?;
        Ok((m, q))
    }

    /// The `k`-dual as a module over the opposite algebra: `(r f)(m) = f(r m)`.
    pub fn dual_over_opposite(&self, opposite: &Arc<Algebra>) -> AlgebraModule {
        let acts: Vec<Matrix> = (0..self.algebra.dim()).map(|i| self.basis_act(i).transpose()).collect();
        Self::from_basis_actions(opposite.clone(), self.dim, &acts).expect("shape")
    }

    /// A small generating set: greedy choice among basis vectors and seeded random vectors,
    /// each step taking the candidate that enlarges the generated submodule most, then pruned.
    pub fn generators(&self) -> Vec<Vec<Scalar>> {
        let field = self.field();
        let mut candidates: Vec<Vec<Scalar>> = (0..self.dim).map(|i| unit_vector(field, self.dim, i)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x6e6e);
        for _ in 0..self.dim.max(4) {
            candidates.push(random_vector(field, self.dim, &mut rng));
        }
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        let mut current = 0;
        while current < self.dim {
            let mut best: Option<(usize, usize)> = None;
            for (ci, c) in candidates.iter().enumerate() {
                let mut trial = chosen.clone();
                trial.push(c.clone());
                let d = self.generated_submodule(&trial).dim();
                if d > current && best.is_none_or(|(_, bd)| d > bd) {
                    best = Some((ci, d));
                }
            }
            let (ci, d) = best.expect("basis vectors generate the module");
            chosen.push(candidates[ci].clone());
            current = d;
        }
        let mut i = 0;
        while i < chosen.len() {
            let mut trial = chosen.clone();
            trial.remove(i);
            if self.generated_submodule(&trial).dim() == self.dim {
                chosen = trial;
            } else {
                i += 1;
            }
        }
        chosen
    }

    /// The surjection `R^g -> M` sending `e_j (x) 1` to the `j`-th generator.
    pub fn free_cover(&self) -> (AlgebraModule, Matrix) {
        let gens = self.generators();
        let n = self.algebra.dim();
        let free = AlgebraModule::free(&self.algebra, gens.len());
        let cover = Matrix::from_column_fn(self.field(), self.dim, gens.len() * n, |col| {
            self.act(&self.algebra.basis_vector(col % n), &gens[col / n])
        });
        (free, cover)
    }

    /// Projective iff the free cover has an `R`-linear section.
    pub fn is_projective(&self) -> bool {
        let (free, cover) = self.free_cover();
        let Ok(maps) = self.hom(&free) else { return false };
        let field = self.field();
        let candidates: Vec<Matrix> = maps
            .basis_vectors()
            .into_iter()
            .map(|v| cover.mul(&Matrix::from_row_major(field, free.dim, self.dim, v).expect("shape")))
            .collect();
        let system = Matrix::from_column_fn(field, self.dim * self.dim, candidates.len(), |t| candidates[t].data().to_vec());
        let target = Matrix::identity(field, self.dim).data().to_vec();
        matches!(system.solve(&target), Ok(Some(_)))
    }

    /// Injective iff the dual is projective over the opposite algebra.
    pub fn is_injective(&self) -> bool {
        let op = Arc::new(self.algebra.opposite());
        self.dual_over_opposite(&op).is_projective()
    }
}

/// Matrix of `f -> (f L_g - L_g f)_g` over the given generators `g`.
pub(crate) fn linearity_equations(m: &AlgebraModule, n: &AlgebraModule, gens: &[Vec<Scalar>]) -> Matrix {
    let field = m.field();
    let (dm, dn) = (m.dim, n.dim);
    let lm: Vec<Matrix> = gens.iter().map(|g| m.act_matrix(g)).collect();
    let ln: Vec<Matrix> = gens.iter().map(|g| n.act_matrix(g)).collect();
    let block = dn * dm;
    Matrix::from_column_fn(field, gens.len() * block, block, |rc| {
        let (r, c) = (rc / dm, rc % dm);
        let mut out = vec![field.zero(); gens.len() * block];
        for (t, (a, b)) in lm.iter().zip(&ln).enumerate() {
            // (E_{r,c} A)[r][c'] = A[c][c']
            for cp in 0..dm {
                let x = &a[(c, cp)];
                if !x.is_zero() {
                    out[t * block + r * dm + cp] += x;
                }
            }
            // (B E_{r,c})[r'][c] = B[r'][r]
            for rp in 0..dn {
                let y = &b[(rp, r)];
                if !y.is_zero() {
                    out[t * block + rp * dm + c] -= y;
                }
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn dual_numbers() -> Arc<Algebra> {
        Arc::new(fixtures::dual_numbers(FieldSpec::Rationals))
    }

    #[test]
    fn free_module_is_projective_and_injective() {
        let r = dual_numbers();
        let free = AlgebraModule::free(&r, 1);
        assert!(free.validate().passed());
        assert!(free.is_projective());
        assert!(free.is_injective());
    }

    #[test]
    fn simple_module_over_dual_numbers() {
        let r = dual_numbers();
        let q = r.field();
        let k = AlgebraModule::character(&r, &[q.one(), q.zero()]).unwrap();
        assert!(!k.is_projective());
        assert!(!k.is_injective());
        assert_eq!(k.hom(&k).unwrap().dim(), 1);
    }

    #[test]
    fn semisimple_group_algebra_modules_are_projective() {
        let h = fixtures::group_algebra_c2(FieldSpec::Rationals);
        let r = Arc::new(h.algebra().clone());
        let q = r.field();
        let triv = AlgebraModule::character(&r, &[q.one(), q.one()]).unwrap();
        let sign = AlgebraModule::character(&r, &[q.one(), q.from_i64(-1)]).unwrap();
        let m = triv.direct_sum(&sign).unwrap();
        assert!(m.is_projective());
        assert!(m.is_injective());
        assert_eq!(m.generators().len(), 1);
    }
}
