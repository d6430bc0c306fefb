use std::sync::Arc;

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Subspace};

/// A bounded complex `C^0 -> C^1 -> ... -> C^n` of comodules.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub objects: Vec<Comodule>,
    /// `differentials[q]: C^q -> C^{q+1}`.
    pub differentials: Vec<Matrix>,
}

/// Cohomology with the coaction induced on each `ker / im`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComodule {
    pub pieces: Vec<Comodule>,
}

impl GradedComodule {
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Comodule::dim).collect()
    }

    pub fn coinvariant_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|c| c.coinvariants().dim()).collect()
    }

    pub fn truncate(mut self, len: usize) -> Self {
        self.pieces.truncate(len);
        self
    }
}

impl CochainComplex {
    pub fn new(objects: Vec<Comodule>, differentials: Vec<Matrix>) -> Result<Self> {
        if differentials.len() + 1 != objects.len() {
            return Err(Error::DimensionMismatch("a complex needs one differential between consecutive objects".into()));
        }
        for (q, d) in differentials.iter().enumerate() {
            if d.cols() != objects[q].dim() || d.rows() != objects[q + 1].dim() {
                return Err(Error::DimensionMismatch(format!("differential {q} does not compose")));
            }
        }
        Ok(CochainComplex { objects, differentials })
    }

    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    pub fn differentials_colinear(&self) -> bool {
        self.differentials.iter().enumerate().all(|(q, d)| self.objects[q].is_colinear(d, &self.objects[q + 1]))
    }

    /// `H^q = ker d_q / im d_{q-1}` for every degree, the top one having `d = 0`.
    pub fn cohomology(&self) -> Result<GradedComodule> {
        if !self.is_complex() {
            return Err(Error::Hypothesis("differentials do not square to zero".into()));
        }
        let mut pieces = Vec::with_capacity(self.objects.len());
        for (q, obj) in self.objects.iter().enumerate() {
            let field = obj.field();
            let cycles = match self.differentials.get(q) {
                Some(d) => d.kernel(),
                None => Subspace::full(field, obj.dim()),
            };
            let z = obj.restrict(&cycles)?;
            let boundaries = if q == 0 {
                Subspace::zero(field, cycles.dim())
            } else {
                let d = &self.differentials[q - 1];
                cycles.coordinate_matrix().mul(d).image()
            };
            let (h, _) = z.quotient(&boundaries)?;
            pieces.push(h);
        }
        Ok(GradedComodule { pieces })
    }
}

/// The zero comodule or a direct sum of copies.
pub(crate) fn power(c: &Comodule, copies: usize, hopf: &Arc<HopfAlgebra>) -> Comodule {
    let mut out = Comodule::trivial(hopf, 0);
    for _ in 0..copies {
        out = out.direct_sum(c).expect("same Hopf algebra");
    }
    out
}

/// `dim H^q` from the object dimensions and differential ranks.
pub(crate) fn dims_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    dims.iter()
        .enumerate()
        .map(|(q, d)| d - ranks.get(q).copied().unwrap_or(0) - if q == 0 { 0 } else { ranks[q - 1] })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::FieldSpec;

    #[test]
    fn small_complexes() {
        let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals));
        let q = h.field();
        let k = Comodule::trivial(&h, 1);
        let c = CochainComplex::new(vec![k.clone(), k.clone()], vec![Matrix::zeros(q, 1, 1)]).unwrap();
        assert_eq!(c.cohomology().unwrap().dims(), vec![1, 1]);
        let c = CochainComplex::new(vec![k.clone(), k.clone()], vec![Matrix::identity(q, 1)]).unwrap();
        assert_eq!(c.cohomology().unwrap().dims(), vec![0, 0]);
        assert!(c.differentials_colinear());
        let kg = Comodule::one_dimensional(&h, &h.basis_vector(1)).unwrap();
        let c = CochainComplex::new(vec![kg.clone(), k], vec![Matrix::identity(q, 1)]).unwrap();
        assert!(!c.differentials_colinear());
        assert!(CochainComplex::new(vec![kg], vec![Matrix::identity(q, 1)]).is_err());
        assert_eq!(dims_from_ranks(&[1, 2, 1], &[1, 1]), vec![0, 0, 0]);
    }
}
