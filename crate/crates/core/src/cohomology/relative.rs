use std::sync::Arc;

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::modules::{ext_over_algebra, injective_resolution, projective_resolution, AlgebraModule};
use crate::relative::{a_hom_rational, CoinvariantAlgebra, RelHopfModule, SmashAlgebra};

use super::complex::{power, CochainComplex, GradedComodule};
use crate::modules::resolution::hom_differential;

/// `... -> A (x) V_1 -> A (x) V_0 -> M -> 0` with `V_0 = M` as a comodule and each
/// `V_{i+1}` a subcomodule generating the previous kernel as an `A`-module.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub target: RelHopfModule,
    pub generators: Vec<Comodule>,
    pub modules: Vec<RelHopfModule>,
    /// `maps[0]` is `P_0 -> M`; `maps[i]` is `P_i -> P_{i-1}`.
    pub maps: Vec<Matrix>,
}

impl FreeResolution {
    pub fn is_exact(&self) -> bool {
        if self.maps[0].rank() != self.target.dim() {
            return false;
        }
        (1..self.maps.len()).all(|i| self.maps[i - 1].kernel() == self.maps[i].image())
    }

    pub fn maps_are_morphisms(&self) -> bool {
        self.maps.iter().enumerate().all(|(i, f)| {
            let target = if i == 0 { &self.target } else { &self.modules[i - 1] };
            self.modules[i].is_morphism(f, target)
        })
    }
}

pub fn a_free_resolution(m: &RelHopfModule, len: usize) -> Result<FreeResolution> {
    let base = m.base();
    let v0 = m.comodule().clone();
    let p0 = RelHopfModule::free(base, &v0)?;
    let mut generators = vec![v0];
    let mut modules = vec![p0];
    let mut maps = vec![m.module().action().clone()];
    for _ in 0..len {
        let last = modules.last().expect("nonempty");
        let kernel = maps.last().expect("nonempty").kernel();
        let k = last.restrict(&kernel)?;
        let w = generating_subcomodule(&k);
        let v = k.comodule().restrict(&w)?;
        let next = RelHopfModule::free(base, &v)?;
        // a (x) v -> a . v inside the kernel, then into the previous term
        let include = Matrix::identity(m.field(), base.dim()).kronecker(w.basis())?;
        let map = kernel.basis().mul(k.module().action()).mul(&include);
        generators.push(v);
        modules.push(next);
        maps.push(map);
    }
    Ok(FreeResolution { target: m.clone(), generators, modules, maps })
}

/// A subcomodule `W` of `k` with `A W = k`, grown one basis vector at a time.
fn generating_subcomodule(k: &RelHopfModule) -> Subspace {
    let field = k.field();
    let mut w = Subspace::zero(field, k.dim());
    let mut span = Subspace::zero(field, k.dim());
    for i in 0..k.dim() {
        if span.dim() == k.dim() {
            break;
        }
        let mut e = vec![field.zero(); k.dim()];
        e[i] = field.one();
        if span.contains(&e) {
            continue;
        }
        let (sub, _) = k.comodule().generated_subcomodule(&[e]);
        w = w.sum(&sub);
        span = k.generated_subobject(&w.basis_vectors());
    }
    w
}

/// `_A EXT^p(M, N)` for `p = 0..=pmax` with its coaction, from a free resolution of `M`.
/// Each `_A HOM(A (x) V, N)` is replaced by `HOM(V, N)` through `f -> f(1 (x) -)`.
pub fn a_ext(m: &RelHopfModule, n: &RelHopfModule, pmax: usize) -> Result<GradedComodule> {
    m.same_base(n)?;
    let res = a_free_resolution(m, pmax + 1)?;
    let base = m.base();
    let field = m.field();
    let da = base.dim();
    let dn = n.dim();
    let act_n = n.module().action();
    let unit = Matrix::column_vector(field, base.algebra().unit());
    let objects = res.generators.iter().map(|v| v.hom(n.comodule())).collect::<Result<Vec<_>>>()?;
    let mut differentials = Vec::with_capacity(pmax + 1);
    for i in 0..=pmax {
        let (dv, dw) = (res.generators[i].dim(), res.generators[i + 1].dim());
        // V_{i+1} -> A (x) V_i, w -> p(1 (x) w)
        let q = res.maps[i + 1].mul(&unit.kronecker(&Matrix::identity(field, dw))?);
        let d = Matrix::from_column_fn(field, dn * dw, dn * dv, |rc| {
            let (r, c) = (rc / dv, rc % dv);
            let mut out = vec![field.zero(); dn * dw];
            for w in 0..dw {
                for a in 0..da {
                    let x = &q[(a * dv + c, w)];
                    if x.is_zero() {
                        continue;
                    }
                    for row in 0..dn {
                        out[row * dw + w].add_product(x, &act_n[(row, a * dn + r)]);
                    }
                }
            }
            out
        });
        differentials.push(d);
    }
    let complex = CochainComplex::new(objects, differentials)?;
    Ok(complex.cohomology()?.truncate(pmax + 1))
}

/// `dim _A Ext^{H,p}(M, N)` as module `Ext` over the smash product `A # H*`.
pub fn a_ext_h(m: &RelHopfModule, n: &RelHopfModule, pmax: usize) -> Result<Vec<usize>> {
    m.same_base(n)?;
    let smash = SmashAlgebra::new(m.base());
    ext_over_algebra(&smash.to_module(m)?, &smash.to_module(n)?, pmax)
}

/// `_A EXT^p(M, N)` from an injective resolution of `N` by relative Hopf modules.
pub fn a_ext_injective(m: &RelHopfModule, n: &RelHopfModule, pmax: usize) -> Result<GradedComodule> {
    m.same_base(n)?;
    let smash = SmashAlgebra::new(m.base());
    let inj = injective_resolution(&smash.to_module(n)?, pmax + 1);
    let terms = inj.modules.iter().map(|e| smash.from_module(e)).collect::<Result<Vec<_>>>()?;
    let homs = terms.iter().map(|e| a_hom_rational(m, e)).collect::<Result<Vec<_>>>()?;
    let mut differentials = Vec::with_capacity(pmax + 1);
    for i in 0..=pmax {
        let post = inj.maps[i + 1].kronecker(&Matrix::identity(m.field(), m.dim()))?;
        differentials.push(map_between(&homs[i].carrier, &post, &homs[i + 1].carrier)?);
    }
    let complex = CochainComplex::new(homs.into_iter().map(|h| h.comodule).collect(), differentials)?;
    Ok(complex.cohomology()?.truncate(pmax + 1))
}

/// `Ext^p_B(M, N)` for a `B`-module `M` and a relative Hopf module `N`, with the coaction of `N`
/// carried through `Hom_B(B^g, N) = N^g`.
pub fn b_ext(b: &CoinvariantAlgebra, m: &AlgebraModule, n: &RelHopfModule, pmax: usize) -> Result<GradedComodule> {
    if !Arc::ptr_eq(m.algebra(), &b.algebra) && **m.algebra() != *b.algebra {
        return Err(Error::Hypothesis("module is not over the coinvariant subalgebra".into()));
    }
    let res = projective_resolution(m, pmax + 1);
    let nb = b.restrict_scalars(n.module());
    let objects = res.ranks.iter().map(|&g| power(n.comodule(), g, n.hopf())).collect();
    let differentials = (0..=pmax).map(|p| hom_differential(&res, &nb, p)).collect();
    let complex = CochainComplex::new(objects, differentials)?;
    Ok(complex.cohomology()?.truncate(pmax + 1))
}

/// `op` from `src` to `dst`, in their coordinates.
fn map_between(src: &Subspace, op: &Matrix, dst: &Subspace) -> Result<Matrix> {
    let image = op.mul(src.basis());
    if image.columns().iter().any(|v| !dst.contains(v)) {
        return Err(Error::Hypothesis("map leaves the target subspace".into()));
    }
    Ok(dst.coordinate_matrix().mul(&image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hopf::{Algebra, HopfAlgebra};
    use crate::relative::ComoduleAlgebra;
    use crate::scalar::FieldSpec;

    fn kc2(field: FieldSpec) -> Arc<HopfAlgebra> {
        Arc::new(fixtures::group_algebra_c2(field))
    }

    #[test]
    fn free_resolutions_are_exact() {
        let h = kc2(FieldSpec::Rationals);
        let base = Arc::new(ComoduleAlgebra::tensor_with_regular(&h, &fixtures::dual_numbers(h.field())));
        let b = base.coinvariant_subalgebra();
        let k = AlgebraModule::character(&b.algebra, &[h.field().one(), h.field().zero()]).unwrap();
        let m = crate::relative::induce(&base, &b, &k).unwrap().module;
        let res = a_free_resolution(&m, 3).unwrap();
        assert!(res.is_exact());
        assert!(res.maps_are_morphisms());
    }

    #[test]
    fn regular_module_is_projective() {
        for field in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
            let h = kc2(field);
            let base = Arc::new(ComoduleAlgebra::regular(&h));
            let a = RelHopfModule::regular(&base);
            let e = a_ext(&a, &a, 2).unwrap();
            assert_eq!(e.dims(), vec![2, 0, 0]);
            assert_eq!(a_ext_h(&a, &a, 2).unwrap(), vec![1, 0, 0]);
            assert_eq!(a_ext_injective(&a, &a, 2).unwrap().dims(), vec![2, 0, 0]);
        }
    }

    #[test]
    fn dual_numbers_with_trivial_coaction() {
        let h = kc2(FieldSpec::Rationals);
        let q = h.field();
        let base = Arc::new(ComoduleAlgebra::trivial(&h, fixtures::dual_numbers(q)));
        let b = base.coinvariant_subalgebra();
        assert_eq!(b.dim(), 2);
        let k_b = AlgebraModule::character(&b.algebra, &[q.one(), q.zero()]).unwrap();
        let k = crate::relative::induce(&base, &b, &k_b).unwrap().module;
        // Ext over k[t]/t^2 of k with itself is one-dimensional in each degree
        let e = a_ext(&k, &k, 3).unwrap();
        assert_eq!(e.dims(), vec![1, 1, 1, 1]);
        assert_eq!(a_ext_injective(&k, &k, 3).unwrap().dims(), e.dims());
        assert_eq!(a_ext_h(&k, &k, 3).unwrap(), e.coinvariant_dims());
        let via_b = b_ext(&b, &k_b, &k, 3).unwrap();
        assert_eq!(via_b.dims(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn ground_field_base_reduces_to_comodule_ext() {
        let f2 = FieldSpec::prime(2).unwrap();
        let h = Arc::new(fixtures::dual_group_algebra_c2(f2));
        let ground = Arc::new(ComoduleAlgebra::trivial(&h, Algebra::ground(f2)));
        let k = RelHopfModule::from_parts(ground.clone(), Comodule::trivial(&h, 1), Matrix::identity(f2, 1)).unwrap();
        assert_eq!(a_ext_h(&k, &k, 3).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(a_ext(&k, &k, 3).unwrap().dims(), vec![1, 0, 0, 0]);
    }
}
