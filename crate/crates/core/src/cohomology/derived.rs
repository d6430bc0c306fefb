use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseMatrix};
use crate::scalar::Scalar;

use super::cobar::CobarResolution;
use super::complex::dims_from_ranks;
use super::guard;

/// `R^p(M)` for `p = 0..=pmax`: cohomology of `(C^q(M))^coH`, each term identified with
/// `C^{q-1}` through `u -> u_0 (x) S(u_1)`.
pub fn derived_coinvariants(m: &Comodule, pmax: usize, cap: usize) -> Result<Vec<usize>> {
    let h = m.hopf();
    let nh = h.dim();
    guard("derived coinvariants", m.dim().saturating_mul(nh.saturating_pow(pmax as u32 + 1)), cap)?;
    let cobar = CobarResolution::build(m, pmax);
    let field = m.field();
    let s = SparseMatrix::from_dense(h.antipode());
    let rhos = cobar.coactions(pmax as isize - 1);
    let mut ranks = Vec::with_capacity(pmax + 1);
    let mut dims = Vec::with_capacity(pmax + 1);
    for q in 0..=pmax {
        let prev = q as isize - 1;
        let iota = SparseMatrix::identity(field, cobar.dim(prev)).kronecker(&s).mul(&rhos[q]);
        ranks.push(iota.sub(cobar.phi(prev)).rank());
        dims.push(cobar.dim(prev));
    }
    Ok(dims_from_ranks(&dims, &ranks))
}

/// The differential of `Hom^H(M, C^q(N))` carried to `Hom(M, C^{q-1}(N)) -> Hom(M, C^q(N))`:
/// `g -> F_g - phi_{q-1} g` with `F_g(m) = g(m_0)_0 (x) S(g(m_0)_1) m_1`.
fn ext_h_differential(m: &Comodule, x_dim: usize, rho_x: &SparseMatrix, phi: &SparseMatrix) -> SparseMatrix {
    let h = m.hopf();
    let nh = h.dim();
    let dm = m.dim();
    let field = m.field();
    let s = h.antipode();
    // twisted[k][hh] = S(e_k) e_hh
    let twisted: Vec<Vec<Vec<(usize, Scalar)>>> = (0..nh)
        .map(|k| {
            let sk = s.column(k);
            (0..nh)
                .map(|hh| {
                    h.product(&sk, &h.basis_vector(hh)).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
                })
                .collect()
        })
        .collect();
    let rho_m = m.coaction();
    SparseMatrix::from_column_fn(field, x_dim * nh * dm, x_dim * dm, |rc| {
        let (r, c) = (rc / dm, rc % dm);
        let mut out = Vec::new();
        for b in 0..dm {
            for hh in 0..nh {
                let x = &rho_m[(c * nh + hh, b)];
                if x.is_zero() {
                    continue;
                }
                for (row, y) in rho_x.column(r) {
                    let (j, k) = (row / nh, row % nh);
                    let xy = x * y;
                    for (p, coef) in &twisted[k][hh] {
                        out.push(((j * nh + p) * dm + b, &xy * coef));
                    }
                }
            }
        }
        for (row, v) in phi.column(r) {
            out.push((row * dm + c, -v));
        }
        out
    })
}

/// `dim Ext^p_H(M, N)` for `p = 0..=pmax`, the cohomology of `Hom^H(M, C^q(N))`.
pub fn ext_h(m: &Comodule, n: &Comodule, pmax: usize, cap: usize) -> Result<Vec<usize>> {
    m.same_hopf(n)?;
    let nh = m.hopf().dim();
    let needed = m.dim().saturating_mul(n.dim()).saturating_mul(nh.saturating_pow(pmax as u32 + 1));
    guard("Ext over H", needed, cap)?;
    let cobar = CobarResolution::build(n, pmax);
    let rhos = cobar.coactions(pmax as isize - 1);
    let mut ranks = Vec::with_capacity(pmax + 1);
    let mut dims = Vec::with_capacity(pmax + 1);
    for q in 0..=pmax {
        let prev = q as isize - 1;
        let d = ext_h_differential(m, cobar.dim(prev), &rhos[q], cobar.phi(prev));
        ranks.push(d.rank());
        dims.push(m.dim() * cobar.dim(prev));
    }
    Ok(dims_from_ranks(&dims, &ranks))
}

/// [`ext_h`] computed the slow way, from colinear maps into each dense `C^q(N)`.
pub fn ext_h_generic(m: &Comodule, n: &Comodule, pmax: usize, cap: usize) -> Result<Vec<usize>> {
    m.same_hopf(n)?;
    let nh = m.hopf().dim();
    let needed = m.dim().saturating_mul(n.dim()).saturating_mul(nh.saturating_pow(pmax as u32 + 2));
    guard("Ext over H from colinear maps", needed, cap)?;
    let cobar = CobarResolution::build(n, pmax + 1);
    let field = m.field();
    let spaces = (0..=pmax + 1).map(|q| m.colinear_maps(&cobar.comodule(q as isize))).collect::<Result<Vec<_>>>()?;
    let mut ranks = Vec::with_capacity(pmax + 1);
    for q in 0..=pmax {
        let post = cobar.phi(q as isize).to_dense().kronecker(&Matrix::identity(field, m.dim()))?;
        let image = post.mul(spaces[q].basis());
        ranks.push(spaces[q + 1].coordinate_matrix().mul(&image).rank());
    }
    let dims: Vec<usize> = spaces.iter().take(pmax + 1).map(|s| s.dim()).collect();
    Ok(dims_from_ranks(&dims, &ranks))
}

/// Rational `EXT` computed from `HOM(M, C^q(N))`.
#[derive(Clone, Debug)]
pub struct RationalExt {
    pub dims: Vec<usize>,
    /// `EXT^0` with its coaction, as a subcomodule of `HOM(M, C^0(N))`.
    pub degree_zero: Comodule,
    /// `HOM(M, N) -> EXT^0` induced by `phi_{-1}`, in the coordinates of `degree_zero`.
    pub comparison: Matrix,
    /// `HOM(M, N)` itself.
    pub hom: Comodule,
}

impl RationalExt {
    /// The comparison is a colinear bijection.
    pub fn degree_zero_is_hom(&self) -> bool {
        self.comparison.rows() == self.comparison.cols()
            && self.comparison.rank() == self.comparison.cols()
            && self.hom.is_colinear(&self.comparison, &self.degree_zero)
    }
}

pub fn ext_rational(m: &Comodule, n: &Comodule, qmax: usize, cap: usize) -> Result<RationalExt> {
    m.same_hopf(n)?;
    let nh = m.hopf().dim();
    let needed = m.dim().saturating_mul(n.dim()).saturating_mul(nh.saturating_pow(qmax as u32 + 2));
    guard("rational EXT", needed, cap)?;
    let field = m.field();
    let dm = m.dim();
    let cobar = CobarResolution::build(n, qmax + 1);
    // rank(phi (x) id_M) = dim M * rank(phi)
    let ranks: Vec<usize> = (0..=qmax).map(|q| dm * cobar.phi(q as isize).rank()).collect();
    let dims: Vec<usize> = (0..=qmax).map(|q| dm * cobar.dim(q as isize)).collect();
    let dims = dims_from_ranks(&dims, &ranks);

    let c0 = cobar.comodule(0);
    let hom0 = m.hom(&c0)?;
    let id_m = Matrix::identity(field, dm);
    let d0 = cobar.phi(0).to_dense().kronecker(&id_m)?;
    let cycles = d0.kernel();
    let degree_zero = hom0.restrict(&cycles)?;
    let insert = cobar.phi(-1).to_dense().kronecker(&id_m)?;
    let comparison = cycles.coordinate_matrix().mul(&insert);
    if insert.columns().iter().any(|v| !cycles.contains(v)) {
        return Err(Error::Hypothesis("phi_-1 does not land in the cycles".into()));
    }
    Ok(RationalExt { dims, degree_zero, comparison, hom: m.hom(n)? })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::hopf::{Algebra, HopfAlgebra};
    use crate::modules::{ext_over_algebra, AlgebraModule};
    use crate::relative::{ComoduleAlgebra, RelHopfModule, SmashAlgebra};
    use crate::scalar::FieldSpec;

    /// `M` as a module over `H*` with `f m = m_0 f(m_1)`, via the smash product with the ground field.
    fn dual_module(m: &Comodule) -> AlgebraModule {
        let h = m.hopf();
        let ground = Arc::new(ComoduleAlgebra::trivial(h, Algebra::ground(h.field())));
        let rel = RelHopfModule::from_parts(ground.clone(), m.clone(), Matrix::identity(h.field(), m.dim())).unwrap();
        SmashAlgebra::new(&ground).to_module(&rel).unwrap()
    }

    fn hopfs() -> Vec<Arc<HopfAlgebra>> {
        let f2 = FieldSpec::prime(2).unwrap();
        let q = FieldSpec::Rationals;
        vec![
            Arc::new(fixtures::group_algebra_c2(q)),
            Arc::new(fixtures::group_algebra_c2(f2)),
            Arc::new(fixtures::dual_group_algebra_c2(f2)),
            Arc::new(fixtures::dual_group_algebra_c2(q)),
            Arc::new(fixtures::sweedler(q)),
        ]
    }

    #[test]
    fn coinvariants_of_the_trivial_comodule() {
        for h in hopfs() {
            let k = Comodule::trivial(&h, 1);
            let r = derived_coinvariants(&k, 3, 10_000).unwrap();
            let oracle = ext_over_algebra(&dual_module(&k), &dual_module(&k), 3).unwrap();
            assert_eq!(r, oracle);
            assert_eq!(r[0], 1);
            assert_eq!(r.iter().skip(1).all(|&x| x == 0), h.is_cosemisimple());
        }
    }

    #[test]
    fn ext_matches_module_ext_over_the_dual() {
        for h in hopfs() {
            let k = Comodule::trivial(&h, 1);
            let reg = Comodule::regular(&h);
            for (m, n) in [(&k, &k), (&reg, &k), (&k, &reg), (&reg, &reg)] {
                let fast = ext_h(m, n, 2, 10_000).unwrap();
                let oracle = ext_over_algebra(&dual_module(m), &dual_module(n), 2).unwrap();
                assert_eq!(fast, oracle);
                assert_eq!(ext_h_generic(m, n, 1, 10_000).unwrap(), fast[..2]);
            }
            assert_eq!(ext_h(&k, &k, 3, 10_000).unwrap(), derived_coinvariants(&k, 3, 10_000).unwrap());
        }
    }

    #[test]
    fn free_comodules_are_acyclic() {
        for h in hopfs() {
            let free = Comodule::free(&h, 2);
            let r = derived_coinvariants(&free, 3, 10_000).unwrap();
            assert_eq!(r, vec![2, 0, 0, 0]);
        }
    }

    #[test]
    fn rational_ext_is_concentrated_in_degree_zero() {
        for h in hopfs() {
            let k = Comodule::trivial(&h, 1);
            let reg = Comodule::regular(&h);
            let e = ext_rational(&reg, &k, 2, 10_000).unwrap();
            assert_eq!(e.dims, vec![h.dim(), 0, 0]);
            assert!(e.degree_zero_is_hom());
        }
    }

    #[test]
    fn guard_applies() {
        let h = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        let k = Comodule::trivial(&h, 1);
        assert!(matches!(derived_coinvariants(&k, 9, 10_000), Err(Error::ResourceLimit { .. })));
    }
}
