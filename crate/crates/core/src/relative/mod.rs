//! Comodule algebras and relative Hopf modules.
//!
//! A relative `(A, H)`-Hopf module carries a left `A`-action (see [`crate::modules`]) and a
//! right `H`-coaction (see [`crate::comodule`]) with `rho(am) = a_0 m_0 (x) a_1 m_1`.

mod functors;
mod smash;

pub use functors::{
    a_hom_rational, adjunction, b_hom_from_a, induce, nu_and_bullet, tensor_over_a, AHom, AdjunctionData, BHom,
    Induced, NuData, TensorOverA,
};
pub use smash::SmashAlgebra;

use std::sync::Arc;

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::modules::AlgebraModule;
use crate::report::ValidationReport;
use crate::scalar::{FieldSpec, Scalar};

/// An algebra whose multiplication and unit are colinear for a coaction on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    algebra: Arc<Algebra>,
    comodule: Comodule,
}

impl ComoduleAlgebra {
    pub fn from_parts(algebra: Arc<Algebra>, comodule: Comodule) -> Result<Self> {
        if algebra.dim() != comodule.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {}, coaction is on dimension {}",
                algebra.dim(),
                comodule.dim()
            )));
        }
        if algebra.field() != comodule.field() {
            return Err(Error::FieldMismatch(algebra.field().label(), comodule.field().label()));
        }
        Ok(ComoduleAlgebra { algebra, comodule })
    }

    pub fn new(algebra: Arc<Algebra>, comodule: Comodule) -> Result<Self> {
        let a = Self::from_parts(algebra, comodule)?;
        let report = a.validate();
        if !report.passed() {
            return Err(Error::Validation { object: "comodule algebra".into(), report });
        }
        Ok(a)
    }

    /// `A` with `rho(a) = a (x) 1`.
    pub fn trivial(hopf: &Arc<HopfAlgebra>, algebra: Algebra) -> Self {
        let comodule = Comodule::trivial(hopf, algebra.dim());
        ComoduleAlgebra { algebra: Arc::new(algebra), comodule }
    }

    /// `H` coacting on itself by `Delta`.
    pub fn regular(hopf: &Arc<HopfAlgebra>) -> Self {
        ComoduleAlgebra { algebra: Arc::new(hopf.algebra().clone()), comodule: Comodule::regular(hopf) }
    }

    /// `R (x) H` with `rho(r (x) h) = r (x) h_1 (x) h_2`.
    pub fn tensor_with_regular(hopf: &Arc<HopfAlgebra>, r: &Algebra) -> Self {
        let algebra = r.tensor(hopf.algebra());
        let comodule = Comodule::free(hopf, r.dim());
        ComoduleAlgebra { algebra: Arc::new(algebra), comodule }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        self.comodule.hopf()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Algebra and comodule axioms, plus `rho(ab) = a_0 b_0 (x) a_1 b_1` (witness: the pair)
    /// and `rho(1) = 1 (x) 1`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.algebra.validate();
        report.merge(self.comodule.validate());
        let n = self.dim();
        let field = self.field();
        let id_h = Matrix::identity(field, self.hopf().dim());
        let aa = self.comodule.tensor(&self.comodule).expect("same Hopf algebra");
        let mu = self.algebra.mult();
        let left = self.comodule.coaction().mul(mu);
        let right = mu.kronecker(&id_h).expect("same field").mul(aa.coaction());
        let witness = (0..n * n).find(|&c| left.column(c) != right.column(c)).map(|c| vec![c / n, c % n]);
        report.record("multiplicativity", witness);
        let unit = self.algebra.unit();
        let rho_unit = self.comodule.coaction().apply(unit);
        let expected = crate::hopf::tensor_vectors(unit, self.hopf().unit());
        report.record("unit-colinearity", if rho_unit == expected { None } else { Some(vec![]) });
        report
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    /// `B = A^coH` with its restricted multiplication.
    pub fn coinvariant_subalgebra(&self) -> CoinvariantAlgebra {
        let subspace = self.comodule.coinvariants();
        let field = self.field();
        let d = subspace.dim();
        let basis = subspace.basis_vectors();
        let mut cube = vec![vec![vec![field.zero(); d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = self.algebra.product(&basis[i], &basis[j]);
                cube[i][j] = subspace.coordinates(&prod).expect("coinvariants are closed under multiplication");
            }
        }
        let unit = subspace.coordinates(self.algebra.unit()).expect("the unit is coinvariant");
        let algebra = Algebra::from_cube(field, &cube, unit).expect("shapes agree");
        CoinvariantAlgebra { subspace, algebra: Arc::new(algebra) }
    }

    /// `A` as a left module over `B` by left multiplication.
    pub fn as_left_b_module(&self, b: &CoinvariantAlgebra) -> AlgebraModule {
        let acts: Vec<Matrix> = b.subspace.basis_vectors().iter().map(|x| self.algebra.left_mult(x)).collect();
        AlgebraModule::from_basis_actions(b.algebra.clone(), self.dim(), &acts).expect("shape")
    }

    /// `A` as a left module over `B^op`, i.e. a right `B`-module, by right multiplication.
    pub fn as_right_b_module(&self, b: &CoinvariantAlgebra) -> AlgebraModule {
        let op = Arc::new(b.algebra.opposite());
        let acts: Vec<Matrix> = b.subspace.basis_vectors().iter().map(|x| self.algebra.right_mult(x)).collect();
        AlgebraModule::from_basis_actions(op, self.dim(), &acts).expect("shape")
    }
}

/// The coinvariant subalgebra `B = A^coH` in the canonical basis of the coinvariant subspace.
#[derive(Clone, Debug)]
pub struct CoinvariantAlgebra {
    pub subspace: Subspace,
    pub algebra: Arc<Algebra>,
}

impl CoinvariantAlgebra {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// A basis element of `B` as a vector of `A`.
    pub fn embed(&self, i: usize) -> Vec<Scalar> {
        self.subspace.basis().column(i)
    }

    /// The restriction of scalars of an `A`-module to `B`.
    pub fn restrict_scalars(&self, m: &AlgebraModule) -> AlgebraModule {
        let acts: Vec<Matrix> = (0..self.dim()).map(|i| m.act_matrix(&self.embed(i))).collect();
        AlgebraModule::from_basis_actions(self.algebra.clone(), m.dim(), &acts).expect("shape")
    }

    /// `N^coH` as a `B`-module, in the canonical basis of the coinvariant subspace.
    pub fn coinvariant_module(&self, n: &RelHopfModule) -> AlgebraModule {
        let sub = n.comodule().coinvariants();
        self.restrict_scalars(n.module()).restrict(&sub).expect("B preserves coinvariants")
    }
}

/// A relative `(A, H)`-Hopf module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelHopfModule {
    base: Arc<ComoduleAlgebra>,
    comodule: Comodule,
    module: AlgebraModule,
}

impl RelHopfModule {
    /// Checks shapes only.
    pub fn from_parts(base: Arc<ComoduleAlgebra>, comodule: Comodule, action: Matrix) -> Result<Self> {
        comodule.same_hopf(base.comodule())?;
        let module = AlgebraModule::from_parts(base.algebra.clone(), comodule.dim(), action)?;
        Ok(RelHopfModule { base, comodule, module })
    }

    pub fn new(base: Arc<ComoduleAlgebra>, comodule: Comodule, action: Matrix) -> Result<Self> {
        let m = Self::from_parts(base, comodule, action)?;
        let report = m.validate();
        if !report.passed() {
            return Err(Error::Validation { object: "relative Hopf module".into(), report });
        }
        Ok(m)
    }

    /// `A` acting on itself.
    pub fn regular(base: &Arc<ComoduleAlgebra>) -> Self {
        let module = AlgebraModule::free(&base.algebra, 1);
        RelHopfModule { base: base.clone(), comodule: base.comodule.clone(), module }
    }

    /// `A (x) V` with `a (a' (x) v) = a a' (x) v` and the tensor coaction.
    pub fn free(base: &Arc<ComoduleAlgebra>, v: &Comodule) -> Result<Self> {
        let comodule = base.comodule.tensor(v)?;
        let field = base.field();
        let id_v = Matrix::identity(field, v.dim());
        let acts: Vec<Matrix> = (0..base.dim())
            .map(|i| base.algebra.left_mult(&base.algebra.basis_vector(i)).kronecker(&id_v).expect("same field"))
            .collect();
        let module = AlgebraModule::from_basis_actions(base.algebra.clone(), comodule.dim(), &acts)?;
        Ok(RelHopfModule { base: base.clone(), comodule, module })
    }

    /// `N (x) V` for a comodule `V`, with `a (n (x) v) = a n (x) v`.
    pub fn tensor_comodule(&self, v: &Comodule) -> Result<Self> {
        let comodule = self.comodule.tensor(v)?;
        let id_v = Matrix::identity(self.field(), v.dim());
        let acts: Vec<Matrix> =
            (0..self.base.dim()).map(|i| self.module.basis_act(i).kronecker(&id_v).expect("same field")).collect();
        let module = AlgebraModule::from_basis_actions(self.base.algebra.clone(), comodule.dim(), &acts)?;
        Ok(RelHopfModule { base: self.base.clone(), comodule, module })
    }

    /// `I (x) H` for an `A`-module `I`: `a (x (x) h) = a_0 x (x) a_1 h`, coaction `id (x) Delta`.
    pub fn cofree(base: &Arc<ComoduleAlgebra>, i: &AlgebraModule) -> Result<Self> {
        let hopf = base.hopf();
        let nh = hopf.dim();
        let di = i.dim();
        let field = base.field();
        let comodule = Comodule::free(hopf, di);
        let rho = base.comodule.coaction();
        let acts: Vec<Matrix> = (0..base.dim())
            .map(|a| {
                let mut act = Matrix::zeros(field, di * nh, di * nh);
                for c in 0..base.dim() {
                    for hh in 0..nh {
                        let coef = &rho[(c * nh + hh, a)];
                        if coef.is_zero() {
                            continue;
                        }
                        let block = i.basis_act(c).kronecker(&hopf.algebra().left_mult(&hopf.basis_vector(hh))).expect("same field");
                        act = act.add(&block.scale(coef));
                    }
                }
                act
            })
            .collect();
        let module = AlgebraModule::from_basis_actions(base.algebra.clone(), di * nh, &acts)?;
        Ok(RelHopfModule { base: base.clone(), comodule, module })
    }

    pub fn base(&self) -> &Arc<ComoduleAlgebra> {
        &self.base
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn module(&self) -> &AlgebraModule {
        &self.module
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        self.comodule.hopf()
    }

    pub fn field(&self) -> FieldSpec {
        self.comodule.field()
    }

    pub fn dim(&self) -> usize {
        self.comodule.dim()
    }

    /// Module and comodule axioms plus `rho(am) = a_0 m_0 (x) a_1 m_1` (witness: `(a, m)`).
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.module.validate();
        report.merge(self.comodule.validate());
        let dm = self.dim();
        let field = self.field();
        let id_h = Matrix::identity(field, self.hopf().dim());
        let am = self.base.comodule.tensor(&self.comodule).expect("same Hopf algebra");
        let act = self.module.action();
        let left = self.comodule.coaction().mul(act);
        let right = act.kronecker(&id_h).expect("same field").mul(am.coaction());
        let witness = (0..act.cols()).find(|&c| left.column(c) != right.column(c)).map(|c| vec![c / dm.max(1), c % dm.max(1)]);
        report.record("compatibility", witness);
        report
    }

    pub fn same_base(&self, other: &RelHopfModule) -> Result<()> {
        if Arc::ptr_eq(&self.base, &other.base) || self.base == other.base {
            Ok(())
        } else {
            Err(Error::Hypothesis("relative Hopf modules over different comodule algebras".into()))
        }
    }

    pub fn coinvariants(&self) -> Subspace {
        self.comodule.coinvariants()
    }

    pub fn direct_sum(&self, other: &RelHopfModule) -> Result<RelHopfModule> {
        self.same_base(other)?;
        let comodule = self.comodule.direct_sum(&other.comodule)?;
        let module = self.module.direct_sum(&other.module)?;
        Ok(RelHopfModule { base: self.base.clone(), comodule, module })
    }

    /// `_A Hom^H(self, other)` inside the flattened `Hom(M, N)`.
    pub fn morphisms(&self, other: &RelHopfModule) -> Result<Subspace> {
        self.same_base(other)?;
        Ok(self.module.hom(&other.module)?.intersection(&self.comodule.colinear_maps(&other.comodule)?))
    }

    pub fn is_morphism(&self, f: &Matrix, other: &RelHopfModule) -> bool {
        self.module.is_linear(f, &other.module) && self.comodule.is_colinear(f, &other.comodule)
    }

    /// Smallest subobject containing `vectors`: closed under the action and under coaction components.
    pub fn generated_subobject(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let field = self.field();
        let mut current = Subspace::from_vectors(field, self.dim(), vectors.to_vec());
        let acts: Vec<Matrix> = (0..self.base.dim()).map(|i| self.module.basis_act(i)).collect();
        loop {
            let basis = current.basis_vectors();
            let mut grown = basis.clone();
            for v in &basis {
                grown.extend(self.comodule.components(v));
                grown.extend(acts.iter().map(|a| a.apply(v)));
            }
            let next = Subspace::from_vectors(field, self.dim(), grown);
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    pub fn is_subobject(&self, sub: &Subspace) -> bool {
        self.comodule.is_subcomodule(sub) && self.module.restrict(sub).is_ok()
    }

    pub fn restrict(&self, sub: &Subspace) -> Result<RelHopfModule> {
        let comodule = self.comodule.restrict(sub)?;
        let module = self.module.restrict(sub)?;
        Ok(RelHopfModule { base: self.base.clone(), comodule, module })
    }

    pub fn quotient(&self, sub: &Subspace) -> Result<(RelHopfModule, Quotient)> {
        let (comodule, q) = self.comodule.quotient(sub)?;
        let (module, _) = self.module.quotient(sub)?;
        Ok((RelHopfModule { base: self.base.clone(), comodule, module }, q))
    }

    /// The same object in a new basis (columns of `t`).
    pub fn change_basis(&self, t: &Matrix) -> Result<RelHopfModule> {
        let comodule = self.comodule.change_basis(t)?;
        let inv = t.inverse().ok_or_else(|| Error::Hypothesis("change of basis is singular".into()))?;
        let acts: Vec<Matrix> = (0..self.base.dim()).map(|i| inv.mul(&self.module.basis_act(i)).mul(t)).collect();
        let module = AlgebraModule::from_basis_actions(self.base.algebra.clone(), self.dim(), &acts)?;
        Ok(RelHopfModule { base: self.base.clone(), comodule, module })
    }
}
