use std::sync::Arc;

use super::AlgebraModule;
use crate::linalg::{Matrix, Subspace};

/// `... -> P_1 -> P_0 -> M -> 0` with each `P_i` free on a greedily chosen generating set.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    pub target: AlgebraModule,
    pub modules: Vec<AlgebraModule>,
    /// Free ranks of the `P_i`.
    pub ranks: Vec<usize>,
    /// `maps[0]` is the augmentation `P_0 -> M`; `maps[i]` is `P_i -> P_{i-1}`.
    pub maps: Vec<Matrix>,
}

impl ProjectiveResolution {
    /// Image equals kernel at `M` and at each `P_i` below the top.
    pub fn is_exact(&self) -> bool {
        if self.maps[0].rank() != self.target.dim() {
            return false;
        }
        for i in 1..self.maps.len() {
            if self.maps[i - 1].kernel() != self.maps[i].image() {
                return false;
            }
        }
        true
    }
}

pub fn projective_resolution(m: &AlgebraModule, len: usize) -> ProjectiveResolution {
    let algebra = m.algebra().clone();
    let field = m.field();
    let (p0, eps) = m.free_cover();
    let mut ranks = vec![p0.dim() / algebra.dim().max(1)];
    let mut modules = vec![p0];
    let mut maps = vec![eps];
    for _ in 0..len {
        let last_map = maps.last().expect("nonempty");
        let last = modules.last().expect("nonempty");
        let kernel: Subspace = last_map.kernel();
        let (next, map) = if kernel.is_zero() {
            (AlgebraModule::free(&algebra, 0), Matrix::zeros(field, last.dim(), 0))
        } else {
            let k = last.restrict(&kernel).expect("kernels of module maps are submodules");
            let (free, cover) = k.free_cover();
            (free, kernel.basis().mul(&cover))
        };
        ranks.push(next.dim() / algebra.dim().max(1));
        modules.push(next);
        maps.push(map);
    }
    ProjectiveResolution { target: m.clone(), modules, ranks, maps }
}

/// `dim Ext^p_R(M, N)` for `p = 0..=pmax`, from a free resolution of `M`.
pub fn ext_over_algebra(m: &AlgebraModule, n: &AlgebraModule, pmax: usize) -> crate::error::Result<Vec<usize>> {
    m.same_algebra(n)?;
    let res = projective_resolution(m, pmax + 1);
    let deltas: Vec<Matrix> = (0..=pmax).map(|p| hom_differential(&res, n, p)).collect();
    let mut dims = Vec::with_capacity(pmax + 1);
    for p in 0..=pmax {
        let dim_hom = res.ranks[p] * n.dim();
        let rank_out = deltas[p].rank();
        let rank_in = if p == 0 { 0 } else { deltas[p - 1].rank() };
        dims.push(dim_hom - rank_out - rank_in);
    }
    Ok(dims)
}

/// `Hom_R(P_p, N) -> Hom_R(P_{p+1}, N)`, both identified with `N^{rank}` by evaluation on generators.
pub(crate) fn hom_differential(res: &ProjectiveResolution, n: &AlgebraModule, p: usize) -> Matrix {
    let algebra = n.algebra();
    let field = n.field();
    let dr = algebra.dim();
    let dn = n.dim();
    let (g_in, g_out) = (res.ranks[p], res.ranks[p + 1]);
    let d = &res.maps[p + 1];
    let acts: Vec<Matrix> = (0..dr).map(|i| n.basis_act(i)).collect();
    let mut delta = Matrix::zeros(field, g_out * dn, g_in * dn);
    for jp in 0..g_out {
        // d(e_{j'} (x) 1)
        let mut src = vec![field.zero(); g_out * dr];
        for (k, u) in algebra.unit().iter().enumerate() {
            src[jp * dr + k] = u.clone();
        }
        let v = d.apply(&src);
        for j in 0..g_in {
            let mut block = Matrix::zeros(field, dn, dn);
            for (i, act) in acts.iter().enumerate() {
                let x = &v[j * dr + i];
                if !x.is_zero() {
                    block = block.add(&act.scale(x));
                }
            }
            for r in 0..dn {
                for c in 0..dn {
                    delta[(jp * dn + r, j * dn + c)] = block[(r, c)].clone();
                }
            }
        }
    }
    delta
}

/// `0 -> N -> E^0 -> E^1 -> ...` obtained by dualizing a free resolution of `N*` over `R^op`.
#[derive(Clone, Debug)]
pub struct InjectiveResolution {
    pub source: AlgebraModule,
    pub modules: Vec<AlgebraModule>,
    /// `maps[0]` is `N -> E^0`; `maps[i]` is `E^{i-1} -> E^i`.
    pub maps: Vec<Matrix>,
}

impl InjectiveResolution {
    pub fn is_exact(&self) -> bool {
        if self.maps[0].rank() != self.source.dim() {
            return false;
        }
        (1..self.maps.len()).all(|i| self.maps[i - 1].image() == self.maps[i].kernel())
    }

    pub fn all_injective(&self) -> bool {
        self.modules.iter().all(AlgebraModule::is_injective)
    }
}

pub fn injective_resolution(n: &AlgebraModule, len: usize) -> InjectiveResolution {
    let algebra = n.algebra().clone();
    let op = Arc::new(algebra.opposite());
    let dual = n.dual_over_opposite(&op);
    let res = projective_resolution(&dual, len);
    let modules = res.modules.iter().map(|p| p.dual_over_opposite(&algebra)).collect();
    let maps = res.maps.iter().map(Matrix::transpose).collect();
    InjectiveResolution { source: n.clone(), modules, maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::FieldSpec;

    #[test]
    fn group_algebra_in_char_two_has_periodic_ext() {
        let f2 = FieldSpec::prime(2).unwrap();
        let h = fixtures::group_algebra_c2(f2);
        let r = Arc::new(h.algebra().clone());
        let k = AlgebraModule::character(&r, &[f2.one(), f2.one()]).unwrap();
        assert_eq!(ext_over_algebra(&k, &k, 4).unwrap(), vec![1, 1, 1, 1, 1]);
        let res = projective_resolution(&k, 4);
        assert!(res.is_exact());
        assert!(res.ranks.iter().all(|&g| g == 1));
    }

    #[test]
    fn semisimple_ext_vanishes() {
        let q = FieldSpec::Rationals;
        let r = Arc::new(fixtures::group_algebra_c2(q).algebra().clone());
        let k = AlgebraModule::character(&r, &[q.one(), q.one()]).unwrap();
        let sign = AlgebraModule::character(&r, &[q.one(), q.from_i64(-1)]).unwrap();
        let m = k.direct_sum(&sign).unwrap();
        assert_eq!(ext_over_algebra(&m, &m, 3).unwrap(), vec![2, 0, 0, 0]);
        let inj = injective_resolution(&k, 2);
        assert!(inj.is_exact());
    }

    #[test]
    fn dual_numbers_resolutions() {
        let q = FieldSpec::Rationals;
        let r = Arc::new(fixtures::dual_numbers(q));
        let k = AlgebraModule::character(&r, &[q.one(), q.zero()]).unwrap();
        assert_eq!(ext_over_algebra(&k, &k, 4).unwrap(), vec![1, 1, 1, 1, 1]);
        let inj = injective_resolution(&k, 3);
        assert!(inj.is_exact());
        assert!(inj.all_injective());
        assert!(inj.maps[0].rank() == 1);
    }
}
