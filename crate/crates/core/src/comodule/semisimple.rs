use super::Comodule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// `M = M^coH (+) M_coH` split by the integral projector.
#[derive(Clone, Debug)]
pub struct ErgodicDecomposition {
    pub invariant_part: Subspace,
    pub ergodic_part: Subspace,
    pub projector: Matrix,
}

impl ErgodicDecomposition {
    /// Idempotent, colinear, identity on coinvariants, and the two parts span `M` directly.
    pub fn verify(&self, m: &Comodule) -> bool {
        let p = &self.projector;
        let field = m.field();
        let direct = self.invariant_part.intersection(&self.ergodic_part).is_zero()
            && self.invariant_part.dim() + self.ergodic_part.dim() == m.dim();
        let trivial = Comodule::trivial(m.hopf(), m.dim());
        p.mul(p) == *p
            && m.is_colinear(p, &trivial)
            && self.invariant_part == m.coinvariants()
            && p.mul(self.invariant_part.basis()) == *self.invariant_part.basis()
            && m.is_subcomodule(&self.ergodic_part)
            && m.is_subcomodule(&self.invariant_part)
            && direct
            && self.invariant_part.sum(&self.ergodic_part) == Subspace::full(field, m.dim())
    }
}

pub(super) fn integral_projector(m: &Comodule) -> Result<ErgodicDecomposition> {
    let data = m.hopf().integrals();
    let phi = data.normalized.ok_or(Error::NotCosemisimple)?;
    let field = m.field();
    let row = Matrix::row_vector(field, &phi);
    let projector = Matrix::identity(field, m.dim()).kronecker(&row)?.mul(m.coaction());
    Ok(ErgodicDecomposition {
        invariant_part: projector.image(),
        ergodic_part: projector.kernel(),
        projector,
    })
}

/// `N_V` as the image of the evaluation `Hom^H(V, N) (x) V -> N`.
#[derive(Clone, Debug)]
pub struct Isotypic {
    pub component: Subspace,
    pub hom: Subspace,
    /// Evaluation on `Hom^H(V, N) (x) V` in the canonical basis of `hom`; injective.
    pub evaluation: Matrix,
}

pub(super) fn isotypic_component(n: &Comodule, v: &Comodule) -> Result<Isotypic> {
    n.same_hopf(v)?;
    let field = n.field();
    let ends = v.colinear_maps(v)?;
    if ends.dim() != 1 {
        return Err(Error::NotSimple(format!("End^H(V) has dimension {}", ends.dim())));
    }
    if !v.is_simple() {
        return Err(Error::NotSimple("V has a proper nonzero subcomodule".into()));
    }
    let hom = v.colinear_maps(n)?;
    let maps: Vec<Matrix> = hom
        .basis_vectors()
        .into_iter()
        .map(|b| Matrix::from_row_major(field, n.dim(), v.dim(), b).expect("shape"))
        .collect();
    let dv = v.dim();
    let evaluation = Matrix::from_column_fn(field, n.dim(), maps.len() * dv, |col| maps[col / dv].column(col % dv));
    if evaluation.rank() != evaluation.cols() {
        return Err(Error::NotSimple("evaluation on Hom^H(V, N) (x) V is not injective".into()));
    }
    Ok(Isotypic { component: evaluation.image(), hom, evaluation })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::scalar::FieldSpec;

    #[test]
    fn projector_examples() {
        let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals));
        let k = Comodule::trivial(&h, 1);
        let kg = Comodule::one_dimensional(&h, &h.basis_vector(1)).unwrap();
        let m = k.direct_sum(&kg).unwrap();
        let d = m.integral_projector().unwrap();
        assert!(d.verify(&m));
        assert_eq!(d.projector, Matrix::from_i64(h.field(), &[&[1, 0], &[0, 0]]));
        let dk = k.integral_projector().unwrap();
        assert_eq!(dk.projector, Matrix::identity(h.field(), 1));
        assert!(dk.ergodic_part.is_zero());
        let dg = kg.integral_projector().unwrap();
        assert!(dg.projector.is_zero());
        assert_eq!(dg.ergodic_part.dim(), 1);
    }

    #[test]
    fn projector_refuses_non_cosemisimple() {
        let h4 = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        assert!(matches!(Comodule::trivial(&h4, 1).integral_projector(), Err(Error::NotCosemisimple)));
    }

    #[test]
    fn isotypic_examples() {
        let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals));
        let k = Comodule::trivial(&h, 1);
        let kg = Comodule::one_dimensional(&h, &h.basis_vector(1)).unwrap();
        let n = k.direct_sum(&kg).unwrap().direct_sum(&kg).unwrap();
        assert_eq!(n.isotypic_component(&kg).unwrap().component.dim(), 2);
        assert_eq!(n.isotypic_component(&k).unwrap().component, n.coinvariants());
        let only_g = kg.direct_sum(&kg).unwrap();
        assert!(only_g.isotypic_component(&k).unwrap().component.is_zero());
        assert!(matches!(n.isotypic_component(&n), Err(Error::NotSimple(_))));
    }
}
