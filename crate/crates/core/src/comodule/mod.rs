//! Right comodules over a finite-dimensional Hopf algebra.
//!
//! A coaction `rho: M -> M (x) H` is a `(dim M * dim H) x dim M` matrix. Linear maps
//! `M -> N` are flattened row-major, so the elementary map `E_{r,c}` (sending `e_c` to `e_r`)
//! has index `r * dim M + c`.

mod hom;
mod semisimple;

pub use hom::{compose_witnesses, curry, CurryData, RationalityWitness};
pub use semisimple::{ErgodicDecomposition, Isotypic};

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::report::ValidationReport;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    hopf: Arc<HopfAlgebra>,
    dim: usize,
    coaction: Matrix,
}

impl Comodule {
    /// Checks shapes only.
    pub fn from_parts(hopf: Arc<HopfAlgebra>, dim: usize, coaction: Matrix) -> Result<Self> {
        if coaction.rows() != dim * hopf.dim() || coaction.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "coaction of a {dim}-dim comodule must be {}x{dim}, got {}x{}",
                dim * hopf.dim(),
                coaction.rows(),
                coaction.cols()
            )));
        }
        if coaction.field() != hopf.field() {
            return Err(Error::FieldMismatch(coaction.field().label(), hopf.field().label()));
        }
        Ok(Comodule { hopf, dim, coaction })
    }

    /// Checks shapes and the comodule axioms.
    pub fn new(hopf: Arc<HopfAlgebra>, dim: usize, coaction: Matrix) -> Result<Self> {
        let c = Self::from_parts(hopf, dim, coaction)?;
        let report = c.validate();
        if !report.passed() {
            return Err(Error::Validation { object: "comodule".into(), report });
        }
        Ok(c)
    }

    /// `k^dim` with `rho(m) = m (x) 1`.
    pub fn trivial(hopf: &Arc<HopfAlgebra>, dim: usize) -> Self {
        let unit = Matrix::column_vector(hopf.field(), hopf.unit());
        let coaction = Matrix::identity(hopf.field(), dim).kronecker(&unit).expect("same field");
        Comodule { hopf: hopf.clone(), dim, coaction }
    }

    /// One-dimensional comodule `rho(m) = m (x) g` for a vector `g` of `H`.
    /// It is a comodule exactly when `g` is grouplike.
    pub fn one_dimensional(hopf: &Arc<HopfAlgebra>, g: &[Scalar]) -> Result<Self> {
        Self::new(hopf.clone(), 1, Matrix::column_vector(hopf.field(), g))
    }

    /// `H` coacting on itself by `Delta`.
    pub fn regular(hopf: &Arc<HopfAlgebra>) -> Self {
        Comodule { hopf: hopf.clone(), dim: hopf.dim(), coaction: hopf.comult().clone() }
    }

    /// `V (x) H` with coaction `id (x) Delta`.
    pub fn free(hopf: &Arc<HopfAlgebra>, v_dim: usize) -> Self {
        let coaction = Matrix::identity(hopf.field(), v_dim).kronecker(hopf.comult()).expect("same field");
        Comodule { hopf: hopf.clone(), dim: v_dim * hopf.dim(), coaction }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn field(&self) -> FieldSpec {
        self.hopf.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn same_hopf(&self, other: &Comodule) -> Result<()> {
        if Arc::ptr_eq(&self.hopf, &other.hopf) || self.hopf == other.hopf {
            Ok(())
        } else {
            Err(Error::HopfMismatch)
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let h = &self.hopf;
        let field = self.field();
        let id_m = Matrix::identity(field, self.dim);
        let id_h = Matrix::identity(field, h.dim());
        let left = self.coaction.kronecker(&id_h).expect("same field").mul(&self.coaction);
        let right = id_m.kronecker(h.comult()).expect("same field").mul(&self.coaction);
        report.record("coassociativity", (0..self.dim).find(|&i| left.column(i) != right.column(i)).map(|i| vec![i]));
        let counit = Matrix::row_vector(field, h.counit());
        let back = id_m.kronecker(&counit).expect("same field").mul(&self.coaction);
        report.record("counit", (0..self.dim).find(|&i| back.column(i) != id_m.column(i)).map(|i| vec![i]));
        report
    }

    /// The `H`-components of `rho(v)`: `rho(v) = sum_h component_h (x) e_h`.
    pub fn components(&self, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        let image = self.coaction.apply(v);
        let n = self.hopf.dim();
        (0..n).map(|h| (0..self.dim).map(|a| image[a * n + h].clone()).collect()).collect()
    }

    /// `M^coH`, the kernel of `rho - (m -> m (x) 1)`.
    pub fn coinvariants(&self) -> Subspace {
        let unit = Matrix::column_vector(self.field(), self.hopf.unit());
        let insert = Matrix::identity(self.field(), self.dim).kronecker(&unit).expect("same field");
        self.coaction.sub(&insert).kernel()
    }

    /// Whether `f: self -> target` satisfies `rho_N f = (f (x) id) rho_M`.
    pub fn is_colinear(&self, f: &Matrix, target: &Comodule) -> bool {
        if f.rows() != target.dim || f.cols() != self.dim {
            return false;
        }
        let id_h = Matrix::identity(self.field(), self.hopf.dim());
        target.coaction.mul(f) == f.kronecker(&id_h).expect("same field").mul(&self.coaction)
    }

    /// `rho(m (x) n) = m_0 (x) n_0 (x) m_1 n_1`.
    pub fn tensor(&self, other: &Comodule) -> Result<Comodule> {
        self.same_hopf(other)?;
        let h = &self.hopf;
        let nh = h.dim();
        let (dm, dn) = (self.dim, other.dim);
        let field = self.field();
        let products = product_table(h);
        let coaction = Matrix::from_column_fn(field, dm * dn * nh, dm * dn, |col| {
            let (a, b) = (col / dn, col % dn);
            let mut out = vec![field.zero(); dm * dn * nh];
            for c in 0..dm {
                for hh in 0..nh {
                    let x = &self.coaction[(c * nh + hh, a)];
                    if x.is_zero() {
                        continue;
                    }
                    for d in 0..dn {
                        for k in 0..nh {
                            let y = &other.coaction[(d * nh + k, b)];
                            if y.is_zero() {
                                continue;
                            }
                            let xy = x * y;
                            for (p, coef) in products[hh][k].iter().enumerate() {
                                if !coef.is_zero() {
                                    out[(c * dn + d) * nh + p].add_product(&xy, coef);
                                }
                            }
                        }
                    }
                }
            }
            out
        });
        Ok(Comodule { hopf: h.clone(), dim: dm * dn, coaction })
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        self.same_hopf(other)?;
        let nh = self.hopf.dim();
        let dim = self.dim + other.dim;
        let mut coaction = Matrix::zeros(self.field(), dim * nh, dim);
        for a in 0..self.dim {
            for r in 0..self.dim * nh {
                coaction[(r, a)] = self.coaction[(r, a)].clone();
            }
        }
        for b in 0..other.dim {
            for r in 0..other.dim * nh {
                coaction[(self.dim * nh + r, self.dim + b)] = other.coaction[(r, b)].clone();
            }
        }
        Ok(Comodule { hopf: self.hopf.clone(), dim, coaction })
    }

    /// The same comodule in a new basis: `t` has the new basis vectors as columns.
    pub fn change_basis(&self, t: &Matrix) -> Result<Comodule> {
        let inv = t.inverse().ok_or_else(|| Error::Hypothesis("change of basis is singular".into()))?;
        let id_h = Matrix::identity(self.field(), self.hopf.dim());
        let coaction = inv.kronecker(&id_h)?.mul(&self.coaction).mul(t);
        Ok(Comodule { hopf: self.hopf.clone(), dim: self.dim, coaction })
    }

    /// The comodule `HOM(self, target)` of all linear maps.
    pub fn hom(&self, target: &Comodule) -> Result<Comodule> {
        hom::hom_comodule(self, target)
    }

    /// `M* = HOM(M, k)`.
    pub fn dual(&self) -> Comodule {
        let k = Comodule::trivial(&self.hopf, 1);
        hom::hom_comodule(self, &k).expect("same Hopf algebra")
    }

    /// `Hom^H(self, target)` as a subspace of the flattened `Hom(M, N)`.
    pub fn colinear_maps(&self, target: &Comodule) -> Result<Subspace> {
        self.same_hopf(target)?;
        Ok(colinearity_equations(self, target).kernel())
    }

    /// Smallest subcomodule containing `vectors`, with its restricted coaction.
    pub fn generated_subcomodule(&self, vectors: &[Vec<Scalar>]) -> (Subspace, Comodule) {
        let field = self.field();
        let mut current = Subspace::from_vectors(field, self.dim, vectors.to_vec());
        loop {
            let basis = current.basis_vectors();
            let mut grown = basis.clone();
            for v in &basis {
                grown.extend(self.components(v));
            }
            let next = Subspace::from_vectors(field, self.dim, grown);
            if next.dim() == current.dim() {
                break;
            }
            current = next;
        }
        let sub = self.restrict(&current).expect("closure is stable under the coaction");
        (current, sub)
    }

    /// Restriction of the coaction to a stable subspace, in its canonical basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<Comodule> {
        let nh = self.hopf.dim();
        let d = sub.dim();
        let field = self.field();
        let mut coaction = Matrix::zeros(field, d * nh, d);
        for (i, b) in sub.basis_vectors().iter().enumerate() {
            for (h, comp) in self.components(b).iter().enumerate() {
                let coords = sub
                    .coordinates(comp)
                    .ok_or_else(|| Error::Hypothesis("subspace is not a subcomodule".into()))?;
                for (j, x) in coords.into_iter().enumerate() {
                    coaction[(j * nh + h, i)] = x;
                }
            }
        }
        Ok(Comodule { hopf: self.hopf.clone(), dim: d, coaction })
    }

    pub fn is_subcomodule(&self, sub: &Subspace) -> bool {
        self.restrict(sub).is_ok()
    }

    /// `M / sub` with the induced coaction, and the quotient maps used.
    pub fn quotient(&self, sub: &Subspace) -> Result<(Comodule, Quotient)> {
        if !self.is_subcomodule(sub) {
            return Err(Error::Hypothesis("quotient by a subspace that is not a subcomodule".into()));
        }
        let q = sub.quotient();
        let id_h = Matrix::identity(self.field(), self.hopf.dim());
        let coaction = q.projection.kronecker(&id_h)?.mul(&self.coaction).mul(&q.section);
        let dim = q.reps.len();
        Ok((Comodule { hopf: self.hopf.clone(), dim, coaction }, q))
    }

    /// Injective iff the colinear embedding `rho: M -> M (x) H` into the free comodule splits.
    pub fn is_injective(&self) -> bool {
        self.injective_retraction().is_some()
    }

    /// A colinear `r: M (x) H -> M` with `r rho = id`, if one exists.
    pub fn injective_retraction(&self) -> Option<Matrix> {
        let field = self.field();
        let free = Comodule::free(&self.hopf, self.dim);
        let maps = free.colinear_maps(self).expect("same Hopf algebra");
        let (dm, df) = (self.dim, free.dim);
        // sum_t c_t B_t rho = id, one equation per entry of the identity
        let candidates: Vec<Matrix> = maps
            .basis_vectors()
            .iter()
            .map(|v| Matrix::from_row_major(field, dm, df, v.clone()).expect("shape").mul(&self.coaction))
            .collect();
        let system = Matrix::from_column_fn(field, dm * dm, candidates.len(), |t| candidates[t].data().to_vec());
        let target = Matrix::identity(field, dm).data().to_vec();
        let coeffs = system.solve(&target).expect("shapes agree")?;
        let mut r = Matrix::zeros(field, dm, df);
        for (c, v) in coeffs.iter().zip(maps.basis_vectors()) {
            if !c.is_zero() {
                r = r.add(&Matrix::from_row_major(field, dm, df, v).expect("shape").scale(c));
            }
        }
        Some(r)
    }

    /// Whether the flip `m (x) n -> n (x) m` is colinear from `M (x) N` to `N (x) M`.
    pub fn flip_is_colinear(&self, other: &Comodule) -> Result<bool> {
        let mn = self.tensor(other)?;
        let nm = other.tensor(self)?;
        let flip = flip_matrix(self.field(), self.dim, other.dim);
        Ok(mn.is_colinear(&flip, &nm))
    }

    /// The projector `p_M = (id (x) phi) rho` for a normalized integral `phi`.
    pub fn integral_projector(&self) -> Result<ErgodicDecomposition> {
        semisimple::integral_projector(self)
    }

    /// `M` as a left module over `H*` with `f m = m_0 f(m_1)`.
    pub fn as_dual_module(&self) -> crate::modules::AlgebraModule {
        let nh = self.hopf.dim();
        let dual = Arc::new(self.hopf.dual().algebra().clone());
        let acts: Vec<Matrix> = (0..nh)
            .map(|x| Matrix::from_fn(self.field(), self.dim, self.dim, |a, b| self.coaction[(a * nh + x, b)].clone()))
            .collect();
        crate::modules::AlgebraModule::from_basis_actions(dual, self.dim, &acts).expect("shapes agree")
    }

    /// The `V`-isotypic part of `self` for a simple `V` with `End^H(V) = k`.
    pub fn isotypic_component(&self, v: &Comodule) -> Result<Isotypic> {
        semisimple::isotypic_component(self, v)
    }

    /// Simplicity by closure: every nonzero basis vector and ten seeded random vectors
    /// generate the whole comodule.
    pub fn is_simple(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        let field = self.field();
        let mut probes: Vec<Vec<Scalar>> = (0..self.dim).map(|i| crate::hopf::unit_vector(field, self.dim, i)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..10 {
            probes.push(random_vector(field, self.dim, &mut rng));
        }
        probes
            .iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .all(|v| self.generated_subcomodule(std::slice::from_ref(v)).0.dim() == self.dim)
    }
}

/// Matrix of `f -> rho_N f - (f (x) id) rho_M` on flattened `f`.
pub(crate) fn colinearity_equations(m: &Comodule, n: &Comodule) -> Matrix {
    let nh = m.hopf.dim();
    let (dm, dn) = (m.dim, n.dim);
    let field = m.field();
    // output G is (dn * nh) x dm, flattened row-major
    Matrix::from_column_fn(field, dn * nh * dm, dn * dm, |rc| {
        let (r, c) = (rc / dm, rc % dm);
        let mut out = vec![field.zero(); dn * nh * dm];
        for a in 0..dn * nh {
            let x = &n.coaction[(a, r)];
            if !x.is_zero() {
                out[a * dm + c] += x;
            }
        }
        for h in 0..nh {
            for cp in 0..dm {
                let y = &m.coaction[(c * nh + h, cp)];
                if !y.is_zero() {
                    out[(r * nh + h) * dm + cp] -= y;
                }
            }
        }
        out
    })
}

/// `products[h][k]` = coordinates of `e_h e_k`.
pub(crate) fn product_table(h: &HopfAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let n = h.dim();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| h.m(i, j, k).clone()).collect()).collect()).collect()
}

/// Permutation `M (x) N -> N (x) M`.
pub fn flip_matrix(field: FieldSpec, dm: usize, dn: usize) -> Matrix {
    let mut f = Matrix::zeros(field, dm * dn, dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            f[(b * dm + a, a * dn + b)] = field.one();
        }
    }
    f
}

/// A vector with small random integer entries.
pub fn random_vector(field: FieldSpec, n: usize, rng: &mut impl Rng) -> Vec<Scalar> {
    (0..n).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn kc2() -> Arc<HopfAlgebra> {
        Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals))
    }

    fn kg(h: &Arc<HopfAlgebra>) -> Comodule {
        Comodule::one_dimensional(h, &h.basis_vector(1)).unwrap()
    }

    #[test]
    fn validation_examples() {
        let h = kc2();
        assert!(Comodule::trivial(&h, 1).validate().passed());
        assert!(kg(&h).validate().passed());
        let h4 = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        let kx = Comodule::from_parts(h4.clone(), 1, Matrix::column_vector(h4.field(), &h4.basis_vector(2))).unwrap();
        assert!(kx.validate().failing().contains(&"counit"));
    }

    #[test]
    fn tensor_examples() {
        let h = kc2();
        let k = Comodule::trivial(&h, 1);
        let g = kg(&h);
        assert_eq!(k.tensor(&g).unwrap(), g);
        assert_eq!(g.tensor(&g).unwrap(), k);
        let reg = Comodule::regular(&h);
        let rr = reg.tensor(&reg).unwrap();
        assert_eq!(rr.dim(), 4);
        assert!(rr.validate().passed());
    }

    #[test]
    fn free_and_coinvariants() {
        let h4 = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        assert_eq!(Comodule::free(&h4, 0).dim(), 0);
        let f = Comodule::free(&h4, 2);
        assert_eq!(f.dim(), 8);
        assert_eq!(f.coinvariants().dim(), 2);
        let h = kc2();
        assert_eq!(Comodule::free(&h, 1), Comodule::regular(&h));
        assert_eq!(Comodule::regular(&h).coinvariants().dim(), 1);
        assert_eq!(kg(&h).coinvariants().dim(), 0);
        assert_eq!(Comodule::trivial(&h, 3).coinvariants().dim(), 3);
    }

    #[test]
    fn colinear_map_examples() {
        let h = kc2();
        let k = Comodule::trivial(&h, 1);
        assert_eq!(k.colinear_maps(&kg(&h)).unwrap().dim(), 0);
        let reg = Comodule::regular(&h);
        assert_eq!(reg.colinear_maps(&reg).unwrap().dim(), 2);
        let id = Matrix::identity(h.field(), 2);
        assert!(reg.colinear_maps(&reg).unwrap().contains(id.data()));
    }

    #[test]
    fn generated_subcomodule_of_x() {
        let h4 = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        let reg = Comodule::regular(&h4);
        let (span, sub) = reg.generated_subcomodule(&[h4.basis_vector(2)]);
        let expected = Subspace::from_vectors(h4.field(), 4, vec![h4.basis_vector(1), h4.basis_vector(2)]);
        assert_eq!(span, expected);
        assert!(sub.validate().passed());
        let (one, _) = Comodule::regular(&kc2()).generated_subcomodule(&[kc2().basis_vector(0)]);
        assert_eq!(one.dim(), 1);
    }

    #[test]
    fn injectivity_examples() {
        let h4 = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        assert!(Comodule::regular(&h4).is_injective());
        assert!(!Comodule::trivial(&h4, 1).is_injective());
        let h = kc2();
        assert!(Comodule::trivial(&h, 1).is_injective());
        assert!(kg(&h).direct_sum(&Comodule::trivial(&h, 2)).unwrap().is_injective());
    }

    #[test]
    fn simplicity() {
        let h4 = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        let reg = Comodule::regular(&h4);
        let (_, v) = reg.generated_subcomodule(&[h4.basis_vector(2)]);
        assert!(!v.is_simple());
        assert!(Comodule::trivial(&h4, 1).is_simple());
        assert!(!Comodule::trivial(&h4, 2).is_simple());
    }
}
