use std::sync::Arc;

use super::{ComoduleAlgebra, RelHopfModule};
use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::linalg::Matrix;
use crate::modules::AlgebraModule;

/// `A # H*` on `A (x) H*`, basis `e_i # f_x` at index `i * dim H + x`, with
/// `(a # f)(b # g) = a b_0 # (f L_{b_1}) g` where `(f L_h)(x) = f(hx)`.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    pub base: Arc<ComoduleAlgebra>,
    pub dual: HopfAlgebra,
    pub algebra: Arc<Algebra>,
}

impl SmashAlgebra {
    pub fn new(base: &Arc<ComoduleAlgebra>) -> Self {
        let hopf = base.hopf();
        let field = base.field();
        let (da, nh) = (base.dim(), hopf.dim());
        let n = da * nh;
        let rho = base.comodule().coaction();
        let alg = base.algebra();
        let mult = Matrix::from_column_fn(field, n, n * n, |col| {
            let (left, right) = (col / n, col % n);
            let (i, x) = (left / nh, left % nh);
            let (j, l) = (right / nh, right % nh);
            let mut out = vec![field.zero(); n];
            for c in 0..da {
                for hh in 0..nh {
                    let r = &rho[(c * nh + hh, j)];
                    if r.is_zero() {
                        continue;
                    }
                    for k in 0..da {
                        let a = alg.m(i, c, k);
                        if a.is_zero() {
                            continue;
                        }
                        let ra = r * a;
                        // (f_x L_{e_hh}) = sum_y m[hh][y][x] f_y, then f_y f_l = sum_z Delta[z][y][l] f_z
                        for y in 0..nh {
                            let t = hopf.m(hh, y, x);
                            if t.is_zero() {
                                continue;
                            }
                            let rat = &ra * t;
                            for z in 0..nh {
                                let d = hopf.delta(z, y, l);
                                if !d.is_zero() {
                                    out[k * nh + z].add_product(&rat, d);
                                }
                            }
                        }
                    }
                }
            }
            out
        });
        let unit = crate::hopf::tensor_vectors(alg.unit(), hopf.counit());
        let algebra = Algebra::new(field, n, mult, unit).expect("shapes agree");
        SmashAlgebra { base: base.clone(), dual: hopf.dual(), algebra: Arc::new(algebra) }
    }

    fn hopf(&self) -> &Arc<HopfAlgebra> {
        self.base.hopf()
    }

    /// `(a # f) m = a (m_0 f(m_1))`.
    pub fn to_module(&self, m: &RelHopfModule) -> Result<AlgebraModule> {
        m.comodule().same_hopf(self.base.comodule())?;
        let nh = self.hopf().dim();
        let dm = m.dim();
        let field = m.field();
        let rho = m.comodule().coaction();
        let components: Vec<Matrix> =
            (0..nh).map(|x| Matrix::from_fn(field, dm, dm, |a, b| rho[(a * nh + x, b)].clone())).collect();
        let mut acts = Vec::with_capacity(self.algebra.dim());
        for i in 0..self.base.dim() {
            let ai = m.module().basis_act(i);
            for comp in &components {
                acts.push(ai.mul(comp));
            }
        }
        AlgebraModule::from_basis_actions(self.algebra.clone(), dm, &acts)
    }

    /// `a m = (a # eps) m` and `rho(m) = sum_h (f_h -> m) (x) e_h`; fails unless the result is a
    /// relative Hopf module.
    pub fn from_module(&self, m: &AlgebraModule) -> Result<RelHopfModule> {
        if !Arc::ptr_eq(m.algebra(), &self.algebra) && **m.algebra() != *self.algebra {
            return Err(Error::Hypothesis("module is not over this smash product".into()));
        }
        let hopf = self.hopf();
        let nh = hopf.dim();
        let da = self.base.dim();
        let dm = m.dim();
        let field = m.field();
        let a_unit = self.base.algebra().unit();
        let acts: Vec<Matrix> = (0..da)
            .map(|i| m.act_matrix(&crate::hopf::tensor_vectors(&self.base.algebra().basis_vector(i), hopf.counit())))
            .collect();
        let hits: Vec<Matrix> = (0..nh)
            .map(|h| m.act_matrix(&crate::hopf::tensor_vectors(a_unit, &crate::hopf::unit_vector(field, nh, h))))
            .collect();
        let coaction = Matrix::from_fn(field, dm * nh, dm, |row, b| hits[row % nh][(row / nh, b)].clone());
        let comodule = Comodule::from_parts(hopf.clone(), dm, coaction)?;
        let action = AlgebraModule::from_basis_actions(self.base.algebra().clone(), dm, &acts)?;
        RelHopfModule::new(self.base.clone(), comodule, action.action().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::FieldSpec;

    #[test]
    fn ground_smash_is_the_dual() {
        let h = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        let ground = Arc::new(ComoduleAlgebra::trivial(&h, Algebra::ground(h.field())));
        let s = SmashAlgebra::new(&ground);
        assert_eq!(*s.algebra, *h.dual().algebra());
    }

    #[test]
    fn smash_products_are_associative() {
        for field in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
            let h = Arc::new(fixtures::group_algebra_c2(field));
            let reg = Arc::new(ComoduleAlgebra::regular(&h));
            let s = SmashAlgebra::new(&reg);
            assert_eq!(s.algebra.dim(), 4);
            assert!(s.algebra.validate().passed());
        }
        let h4 = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        let s = SmashAlgebra::new(&Arc::new(ComoduleAlgebra::regular(&h4)));
        assert!(s.algebra.validate().passed());
    }

    #[test]
    fn transport_round_trip() {
        let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals));
        let reg = Arc::new(ComoduleAlgebra::regular(&h));
        let s = SmashAlgebra::new(&reg);
        let m = RelHopfModule::regular(&reg);
        let sm = s.to_module(&m).unwrap();
        assert!(sm.validate().passed());
        assert_eq!(s.from_module(&sm).unwrap(), m);
    }
}
