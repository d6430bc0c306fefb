use crate::comodule::Comodule;
use crate::error::Result;
use crate::hopf::HopfAlgebra;
use crate::linalg::SparseMatrix;
use crate::scalar::Scalar;

use super::guard;

/// `C^{-1} = M`, `C^{q+1} = C^q (x) H` with the diagonal coaction,
/// `phi_{-1}(m) = m (x) 1`, `phi_{q+1}(u (x) h) = u (x) h (x) 1 - phi_q(u) (x) h`,
/// `psi_q(u (x) h) = eps(h) u`.
#[derive(Clone, Debug)]
pub struct CobarResolution {
    source: Comodule,
    top: usize,
    /// `dims[q + 1] = dim C^q`.
    dims: Vec<usize>,
    /// `phi[q + 1] = phi_q` for `q = -1 .. top - 1`.
    phi: Vec<SparseMatrix>,
    /// `psi[q] = psi_q` for `q = 0 ..= top`.
    psi: Vec<SparseMatrix>,
}

/// The resolution through degree `qmax`, with `C^{qmax + 1}` built so the homotopy identity can
/// be checked in degree `qmax`. Guarded by `dim M * (dim H)^(qmax + 1) <= cap`.
pub fn cobar_resolution(m: &Comodule, qmax: usize, cap: usize) -> Result<CobarResolution> {
    let nh = m.hopf().dim();
    guard("cobar resolution", m.dim().saturating_mul(nh.saturating_pow(qmax as u32 + 1)), cap)?;
    Ok(CobarResolution::build(m, qmax + 1))
}

impl CobarResolution {
    /// Builds `C^{-1} .. C^top` unguarded.
    pub(crate) fn build(m: &Comodule, top: usize) -> Self {
        let h = m.hopf();
        let field = m.field();
        let nh = h.dim();
        let unit = SparseMatrix::from_dense(&crate::linalg::Matrix::column_vector(field, h.unit()));
        let counit = SparseMatrix::from_dense(&crate::linalg::Matrix::row_vector(field, h.counit()));
        let id_h = SparseMatrix::identity(field, nh);
        let mut dims = vec![m.dim()];
        for _ in 0..=top {
            let last = *dims.last().expect("nonempty");
            dims.push(last * nh);
        }
        let mut phi = vec![SparseMatrix::identity(field, m.dim()).kronecker(&unit)];
        for q in 0..top {
            // phi_q on C^q = C^{q-1} (x) H
            let prev = phi.last().expect("nonempty");
            let id = SparseMatrix::identity(field, dims[q + 1]);
            phi.push(id.kronecker(&unit).sub(&prev.kronecker(&id_h)));
        }
        let psi = (0..=top).map(|q| SparseMatrix::identity(field, dims[q]).kronecker(&counit)).collect();
        CobarResolution { source: m.clone(), top, dims, phi, psi }
    }

    pub fn source(&self) -> &Comodule {
        &self.source
    }

    /// Highest degree `q` with `C^q` built.
    pub fn top(&self) -> usize {
        self.top
    }

    /// `dim C^q` for `q >= -1`.
    pub fn dim(&self, q: isize) -> usize {
        self.dims[(q + 1) as usize]
    }

    /// `phi_q` for `-1 <= q < top`.
    pub fn phi(&self, q: isize) -> &SparseMatrix {
        &self.phi[(q + 1) as usize]
    }

    /// `psi_q` for `0 <= q <= top`.
    pub fn psi(&self, q: usize) -> &SparseMatrix {
        &self.psi[q]
    }

    /// `phi_{q+1} phi_q = 0` for every composable pair.
    pub fn squares_vanish(&self) -> bool {
        (0..self.phi.len().saturating_sub(1)).all(|i| self.phi[i + 1].mul(&self.phi[i]).is_zero())
    }

    /// `psi_0 phi_{-1} = id` and `phi_{q-1} psi_q + psi_{q+1} phi_q = id` for `0 <= q < top`.
    pub fn homotopy_holds(&self) -> bool {
        let field = self.source.field();
        if self.psi[0].mul(&self.phi[0]) != SparseMatrix::identity(field, self.dims[0]) {
            return false;
        }
        (0..self.top).all(|q| {
            let lhs = self.phi(q as isize - 1).mul(self.psi(q)).add(&self.psi(q + 1).mul(self.phi(q as isize)));
            lhs == SparseMatrix::identity(field, self.dim(q as isize))
        })
    }

    /// Coactions of `C^{-1} .. C^upto`.
    pub fn coactions(&self, upto: isize) -> Vec<SparseMatrix> {
        let h = self.source.hopf();
        let mut out = vec![SparseMatrix::from_dense(self.source.coaction())];
        for q in 0..=upto {
            let prev = out.last().expect("nonempty");
            out.push(tensor_regular_coaction(prev, self.dim(q - 1), h));
        }
        out
    }

    /// `C^q` as a dense comodule.
    pub fn comodule(&self, q: isize) -> Comodule {
        let rho = self.coactions(q).pop().expect("nonempty").to_dense();
        Comodule::from_parts(self.source.hopf().clone(), self.dim(q), rho).expect("shapes agree")
    }

    /// Each `phi_q` with `q <= upto` is colinear for the diagonal coactions.
    pub fn differentials_colinear(&self, upto: isize) -> bool {
        let field = self.source.field();
        let id_h = SparseMatrix::identity(field, self.source.hopf().dim());
        let upto = upto.min(self.top as isize - 1);
        let rhos = self.coactions(upto + 1);
        (-1..=upto).all(|q| {
            let i = (q + 1) as usize;
            rhos[i + 1].mul(self.phi(q)) == self.phi(q).kronecker(&id_h).mul(&rhos[i])
        })
    }
}

/// The coaction of `V (x) H` from that of `V`: `v (x) h -> v_0 (x) h_1 (x) v_1 h_2`.
pub(crate) fn tensor_regular_coaction(rho: &SparseMatrix, dim: usize, h: &HopfAlgebra) -> SparseMatrix {
    let nh = h.dim();
    let field = h.field();
    let delta: Vec<Vec<(usize, usize, Scalar)>> = (0..nh)
        .map(|i| {
            let mut out = Vec::new();
            for p in 0..nh {
                for q in 0..nh {
                    let x = h.delta(i, p, q);
                    if !x.is_zero() {
                        out.push((p, q, x.clone()));
                    }
                }
            }
            out
        })
        .collect();
    let products: Vec<Vec<Vec<(usize, Scalar)>>> = (0..nh)
        .map(|k| {
            (0..nh)
                .map(|q| (0..nh).filter(|&r| !h.m(k, q, r).is_zero()).map(|r| (r, h.m(k, q, r).clone())).collect())
                .collect()
        })
        .collect();
    SparseMatrix::from_column_fn(field, dim * nh * nh, dim * nh, |col| {
        let (v, hh) = (col / nh, col % nh);
        let mut out = Vec::new();
        for (row, x) in rho.column(v) {
            let (a, k) = (row / nh, row % nh);
            for (p, q, d) in &delta[hh] {
                let xd = x * d;
                for (r, c) in &products[k][*q] {
                    out.push((((a * nh + p) * nh) + r, &xd * c));
                }
            }
        }
        out
    })
}
