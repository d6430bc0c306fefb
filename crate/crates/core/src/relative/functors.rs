use std::sync::Arc;

use super::{CoinvariantAlgebra, ComoduleAlgebra, RelHopfModule};
use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::hopf::tensor_vectors;
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::modules::AlgebraModule;
use crate::scalar::Scalar;

/// `op` restricted to a stable subspace, in its canonical coordinates.
pub(crate) fn restrict_operator(sub: &Subspace, op: &Matrix) -> Result<Matrix> {
    let image = op.mul(sub.basis());
    for v in image.columns() {
        if !sub.contains(&v) {
            return Err(Error::Hypothesis("subspace is not stable".into()));
        }
    }
    Ok(sub.coordinate_matrix().mul(&image))
}

/// On flattened `f: M -> N`, the map `f -> f L` for `L: M -> M`.
pub(crate) fn precompose_operator(dn: usize, l: &Matrix) -> Matrix {
    Matrix::identity(l.field(), dn).kronecker(&l.transpose()).expect("same field")
}

/// On flattened `f: M -> N`, the map `f -> L f` for `L: N -> N'`.
pub(crate) fn postcompose_operator(dm: usize, l: &Matrix) -> Matrix {
    l.kronecker(&Matrix::identity(l.field(), dm)).expect("same field")
}

/// `_A HOM(M, N)`: the `A`-linear maps with the coaction of all linear maps restricted to them.
#[derive(Clone, Debug)]
pub struct AHom {
    /// `A`-linear maps inside the flattened `Hom(M, N)`.
    pub carrier: Subspace,
    pub comodule: Comodule,
    /// `(a f) = f L(a)`, present when `A` and `H` are commutative.
    pub module: Option<RelHopfModule>,
}

pub fn a_hom_rational(m: &RelHopfModule, n: &RelHopfModule) -> Result<AHom> {
    m.same_base(n)?;
    let carrier = m.module().hom(n.module())?;
    let full = m.comodule().hom(n.comodule())?;
    let comodule = full.restrict(&carrier)?;
    let base = m.base();
    let module = if base.is_commutative() && base.hopf().is_commutative() {
        let acts = (0..base.dim())
            .map(|i| restrict_operator(&carrier, &precompose_operator(n.dim(), &m.module().basis_act(i))))
            .collect::<Result<Vec<_>>>()?;
        let action = AlgebraModule::from_basis_actions(base.algebra().clone(), carrier.dim(), &acts)?;
        Some(RelHopfModule::from_parts(base.clone(), comodule.clone(), action.action().clone())?)
    } else {
        None
    };
    Ok(AHom { carrier, comodule, module })
}

/// `A (x)_B M` for a `B`-module `M`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub module: RelHopfModule,
    /// Span of `ab (x) m - a (x) bm` inside `A (x) M`.
    pub relations: Subspace,
    pub quotient: Quotient,
}

pub fn induce(base: &Arc<ComoduleAlgebra>, b: &CoinvariantAlgebra, m: &AlgebraModule) -> Result<Induced> {
    let field = base.field();
    let (da, dm) = (base.dim(), m.dim());
    let algebra = base.algebra();
    let mut rels = Vec::new();
    for i in 0..da {
        let ai = algebra.basis_vector(i);
        for j in 0..b.dim() {
            let bj = b.embed(j);
            let abj = algebra.product(&ai, &bj);
            let act = m.basis_act(j);
            for k in 0..dm {
                let mk = crate::hopf::unit_vector(field, dm, k);
                let mut v = tensor_vectors(&abj, &mk);
                let w = tensor_vectors(&ai, &act.column(k));
                for (x, y) in v.iter_mut().zip(&w) {
                    *x -= y;
                }
                rels.push(v);
            }
        }
    }
    let relations = Subspace::from_vectors(field, da * dm, rels);
    let trivial = Comodule::trivial(base.hopf(), dm);
    let big = RelHopfModule::free(base, &trivial)?;
    let (module, quotient) = big.quotient(&relations)?;
    Ok(Induced { module, relations, quotient })
}

/// The bijection `_A Hom^H(A (x)_B M, N) = _B Hom(M, N^coH)`, `F -> (m -> F[1 (x) m])`,
/// `g -> ([a (x) m] -> a g(m))`. Maps into `N^coH` are stored inside `Hom(M, N)`.
#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub source: Subspace,
    pub target: Subspace,
    pub forward: Matrix,
    pub backward: Matrix,
}

impl AdjunctionData {
    pub fn is_bijection(&self) -> bool {
        self.source.maps_into(&self.forward, &self.target)
            && self.target.maps_into(&self.backward, &self.source)
            && self.backward.mul(&self.forward.mul(self.source.basis())) == *self.source.basis()
            && self.forward.mul(&self.backward.mul(self.target.basis())) == *self.target.basis()
    }
}

pub fn adjunction(induced: &Induced, b: &CoinvariantAlgebra, m: &AlgebraModule, n: &RelHopfModule) -> Result<AdjunctionData> {
    let i = &induced.module;
    i.same_base(n)?;
    let base = i.base();
    let field = base.field();
    let (da, dm, dn) = (base.dim(), m.dim(), n.dim());
    let source = i.morphisms(n)?;
    let inv = n.coinvariants();
    let n_inv = b.coinvariant_module(n);
    let into = m.hom(&n_inv)?;
    let embed = postcompose_operator(dm, inv.basis());
    let target = into.image_under(&embed);
    // m -> [1 (x) m]
    let unit = Matrix::column_vector(field, base.algebra().unit());
    let iota = induced.quotient.projection.mul(&unit.kronecker(&Matrix::identity(field, dm))?);
    let forward = precompose_operator(dn, &iota);
    let id_a = Matrix::identity(field, da);
    let backward = Matrix::from_column_fn(field, dn * i.dim(), dn * dm, |rc| {
        let (r, c) = (rc / dm, rc % dm);
        let mut e = Matrix::zeros(field, dn, dm);
        e[(r, c)] = field.one();
        let g = n.module().action().mul(&id_a.kronecker(&e).expect("same field")).mul(&induced.quotient.section);
        g.data().to_vec()
    });
    Ok(AdjunctionData { source, target, forward, backward })
}

/// `_B HOM(A, N)` for a `B`-module `N`, with `(af)(a') = f(a'a)`.
#[derive(Clone, Debug)]
pub struct BHom {
    /// `B`-linear maps inside the flattened `Hom(A, N)`.
    pub carrier: Subspace,
    pub module: RelHopfModule,
    /// `f -> f(1)` from carrier coordinates to `N`.
    pub evaluation: Matrix,
}

pub fn b_hom_from_a(base: &Arc<ComoduleAlgebra>, b: &CoinvariantAlgebra, n: &AlgebraModule) -> Result<BHom> {
    if !Arc::ptr_eq(n.algebra(), &b.algebra) && **n.algebra() != *b.algebra {
        return Err(Error::Hypothesis("module is not over the coinvariant subalgebra".into()));
    }
    let field = base.field();
    let (da, dn) = (base.dim(), n.dim());
    let a_b = base.as_left_b_module(b);
    let carrier = a_b.hom(n)?;
    let full = base.comodule().hom(&Comodule::trivial(base.hopf(), dn))?;
    let comodule = full.restrict(&carrier)?;
    let algebra = base.algebra();
    let acts = (0..da)
        .map(|i| restrict_operator(&carrier, &precompose_operator(dn, &algebra.right_mult(&algebra.basis_vector(i)))))
        .collect::<Result<Vec<_>>>()?;
    let action = AlgebraModule::from_basis_actions(algebra.clone(), carrier.dim(), &acts)?;
    let module = RelHopfModule::from_parts(base.clone(), comodule, action.action().clone())?;
    let unit = Matrix::column_vector(field, algebra.unit());
    let evaluation = Matrix::identity(field, dn).kronecker(&unit.transpose())?.mul(carrier.basis());
    Ok(BHom { carrier, module, evaluation })
}

/// `nu_M: M -> _B HOM(A, M^coH)`, `nu_M(m)(a) = p_M(am)`, and `.M = ker nu_M`.
#[derive(Clone, Debug)]
pub struct NuData {
    pub target: BHom,
    /// From `M` to the carrier coordinates of `target`.
    pub nu: Matrix,
    pub bullet: Subspace,
}

pub fn nu_and_bullet(m: &RelHopfModule, b: &CoinvariantAlgebra) -> Result<NuData> {
    let decomposition = m.comodule().integral_projector()?;
    let base = m.base();
    let field = m.field();
    let inv = &decomposition.invariant_part;
    let n_inv = b.coinvariant_module(m);
    let target = b_hom_from_a(base, b, &n_inv)?;
    let (da, dc) = (base.dim(), inv.dim());
    let mut columns = Vec::with_capacity(m.dim());
    for k in 0..m.dim() {
        // flattened map A -> M^coH, entry [r][i]
        let mut flat = vec![field.zero(); dc * da];
        for i in 0..da {
            let am = m.module().basis_act(i).column(k);
            let p = decomposition.projector.apply(&am);
            let coords = inv.coordinates(&p).expect("p_M lands in the coinvariants");
            for (r, x) in coords.into_iter().enumerate() {
                flat[r * da + i] = x;
            }
        }
        let coords = target
            .carrier
            .coordinates(&flat)
            .ok_or_else(|| Error::Hypothesis("nu_M(m) is not B-linear".into()))?;
        columns.push(coords);
    }
    let nu = Matrix::from_columns(field, target.carrier.dim(), &columns);
    let bullet = nu.kernel();
    Ok(NuData { target, nu, bullet })
}

/// `M (x)_A N` for commutative `A`.
#[derive(Clone, Debug)]
pub struct TensorOverA {
    pub module: RelHopfModule,
    /// Span of `am (x) n - m (x) an` inside `M (x) N`.
    pub relations: Subspace,
    pub quotient: Quotient,
}

pub fn tensor_over_a(m: &RelHopfModule, n: &RelHopfModule) -> Result<TensorOverA> {
    m.same_base(n)?;
    let base = m.base();
    if !base.is_commutative() {
        return Err(Error::NotCommutative("the comodule algebra".into()));
    }
    let field = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let mut rels: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..base.dim() {
        let (am, an) = (m.module().basis_act(i), n.module().basis_act(i));
        for a in 0..dm {
            for b in 0..dn {
                let mut v = tensor_vectors(&am.column(a), &crate::hopf::unit_vector(field, dn, b));
                let w = tensor_vectors(&crate::hopf::unit_vector(field, dm, a), &an.column(b));
                for (x, y) in v.iter_mut().zip(&w) {
                    *x -= y;
                }
                rels.push(v);
            }
        }
    }
    let relations = Subspace::from_vectors(field, dm * dn, rels);
    let comodule = m.comodule().tensor(n.comodule())?;
    let id_n = Matrix::identity(field, dn);
    let acts: Vec<Matrix> = (0..base.dim()).map(|i| m.module().basis_act(i).kronecker(&id_n).expect("same field")).collect();
    let action = AlgebraModule::from_basis_actions(base.algebra().clone(), dm * dn, &acts)?;
    let big = RelHopfModule::from_parts(base.clone(), comodule, action.action().clone())?;
    let (module, quotient) = big.quotient(&relations)?;
    Ok(TensorOverA { module, relations, quotient })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hopf::HopfAlgebra;
    use crate::scalar::FieldSpec;

    fn kc2() -> Arc<HopfAlgebra> {
        Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals))
    }

    #[test]
    fn a_hom_of_regular_is_evaluation_isomorphic() {
        let h = kc2();
        let base = Arc::new(ComoduleAlgebra::regular(&h));
        let a = RelHopfModule::regular(&base);
        let hom = a_hom_rational(&a, &a).unwrap();
        assert_eq!(hom.carrier.dim(), 2);
        assert!(hom.comodule.validate().passed());
        // evaluation at 1 is a colinear bijection onto A
        let q = h.field();
        let unit = Matrix::column_vector(q, h.unit());
        let ev = Matrix::identity(q, 2).kronecker(&unit.transpose()).unwrap().mul(hom.carrier.basis());
        assert_eq!(ev.rank(), 2);
        assert!(hom.comodule.is_colinear(&ev, a.comodule()));
        // the identity is a coinvariant
        let id = Matrix::identity(q, 2).data().to_vec();
        let coords = hom.carrier.coordinates(&id).unwrap();
        assert!(hom.comodule.coinvariants().contains(&coords));
        // A and H commutative: module structure exists and validates
        assert!(hom.module.unwrap().validate().passed());
    }

    #[test]
    fn a_hom_module_over_commutative_trivial_coaction() {
        let h = kc2();
        let base = Arc::new(ComoduleAlgebra::trivial(&h, fixtures::dual_numbers(h.field())));
        let kg = Comodule::one_dimensional(&h, &h.basis_vector(1)).unwrap();
        let m = RelHopfModule::free(&base, &kg).unwrap();
        let n = RelHopfModule::regular(&base);
        let hom = a_hom_rational(&m, &n).unwrap();
        assert!(hom.module.unwrap().validate().passed());
    }

    #[test]
    fn induction_examples() {
        let h = kc2();
        let q = h.field();
        let base = Arc::new(ComoduleAlgebra::regular(&h));
        let b = base.coinvariant_subalgebra();
        let k2 = AlgebraModule::free(&b.algebra, 2);
        let ind = induce(&base, &b, &k2).unwrap();
        assert_eq!(ind.module.dim(), 4);
        assert!(ind.module.validate().passed());
        let k = AlgebraModule::free(&b.algebra, 1);
        let ind = induce(&base, &b, &k).unwrap();
        assert_eq!(ind.module.comodule(), base.comodule());
        // A = B: induction returns M with the trivial coaction
        let t = Arc::new(ComoduleAlgebra::trivial(&h, fixtures::dual_numbers(q)));
        let tb = t.coinvariant_subalgebra();
        let m = AlgebraModule::character(&tb.algebra, &[q.one(), q.zero()]).unwrap();
        let ind = induce(&t, &tb, &m).unwrap();
        assert_eq!(ind.module.dim(), 1);
        assert_eq!(*ind.module.comodule(), Comodule::trivial(&h, 1));
    }

    #[test]
    fn adjunction_examples() {
        let h = kc2();
        let base = Arc::new(ComoduleAlgebra::regular(&h));
        let b = base.coinvariant_subalgebra();
        let k = AlgebraModule::free(&b.algebra, 1);
        let ind = induce(&base, &b, &k).unwrap();
        let n = RelHopfModule::regular(&base);
        let adj = adjunction(&ind, &b, &k, &n).unwrap();
        assert_eq!(adj.source.dim(), 1);
        assert_eq!(adj.target.dim(), 1);
        assert!(adj.is_bijection());
    }

    #[test]
    fn b_hom_examples() {
        let h = kc2();
        let base = Arc::new(ComoduleAlgebra::regular(&h));
        let b = base.coinvariant_subalgebra();
        let k = AlgebraModule::free(&b.algebra, 1);
        let bh = b_hom_from_a(&base, &b, &k).unwrap();
        assert_eq!(bh.carrier.dim(), 2);
        assert!(bh.module.validate().passed());
        let inv = bh.module.coinvariants();
        assert_eq!(inv.dim(), 1);
        assert_eq!(bh.evaluation.mul(inv.basis()).rank(), 1);
    }

    #[test]
    fn bullet_examples() {
        let h = kc2();
        let base = Arc::new(ComoduleAlgebra::regular(&h));
        let b = base.coinvariant_subalgebra();
        let a = RelHopfModule::regular(&base);
        assert!(nu_and_bullet(&a, &b).unwrap().bullet.is_zero());
        let k = AlgebraModule::free(&b.algebra, 1);
        let bh = b_hom_from_a(&base, &b, &k).unwrap();
        assert!(nu_and_bullet(&bh.module, &b).unwrap().bullet.is_zero());
        // A = k: the bullet is the ergodic part
        let ground = Arc::new(ComoduleAlgebra::trivial(&h, crate::hopf::Algebra::ground(h.field())));
        let gb = ground.coinvariant_subalgebra();
        let kg = Comodule::one_dimensional(&h, &h.basis_vector(1)).unwrap();
        let m = RelHopfModule::free(&ground, &Comodule::trivial(&h, 1).direct_sum(&kg).unwrap()).unwrap();
        let data = nu_and_bullet(&m, &gb).unwrap();
        assert_eq!(data.bullet, m.comodule().integral_projector().unwrap().ergodic_part);
    }

    #[test]
    fn tensor_over_a_examples() {
        let h = kc2();
        let q = h.field();
        let base = Arc::new(ComoduleAlgebra::trivial(&h, fixtures::dual_numbers(q)));
        let a = RelHopfModule::regular(&base);
        let kg = Comodule::one_dimensional(&h, &h.basis_vector(1)).unwrap();
        let n = RelHopfModule::free(&base, &kg).unwrap();
        let t = tensor_over_a(&a, &n).unwrap();
        assert_eq!(t.module.dim(), n.dim());
        assert!(t.module.validate().passed());
        let reg = Arc::new(ComoduleAlgebra::regular(&Arc::new(fixtures::sweedler(q))));
        let r = RelHopfModule::regular(&reg);
        assert!(matches!(tensor_over_a(&r, &r), Err(Error::NotCommutative(_))));
    }
}
