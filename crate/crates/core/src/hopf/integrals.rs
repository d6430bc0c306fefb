use super::HopfAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Left integrals in the convolution algebra `H*`: covectors `phi` with `f phi = f(1) phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    /// Covectors written in the dual basis.
    pub space: Subspace,
    /// An integral with `phi(1) = 1`, when one exists.
    pub normalized: Option<Vec<Scalar>>,
    pub cosemisimple: bool,
}

pub(super) fn compute(h: &HopfAlgebra) -> IntegralData {
    let n = h.dim();
    let field = h.field();
    let unit = h.unit();
    // For each dual basis vector f_i and each e_k:
    // (f_i phi)(e_k) = sum_b Delta[k][i][b] phi_b must equal unit_i phi_k.
    let mut eqs = Matrix::zeros(field, n * n, n);
    for i in 0..n {
        for k in 0..n {
            let row = i * n + k;
            for b in 0..n {
                let c = h.delta(k, i, b);
                if !c.is_zero() {
                    eqs[(row, b)] += c;
                }
            }
            eqs[(row, k)] -= &unit[i];
        }
    }
    let space = eqs.kernel();
    let at_one = |phi: &[Scalar]| {
        let mut acc = field.zero();
        for (u, p) in unit.iter().zip(phi) {
            acc.add_product(u, p);
        }
        acc
    };
    let normalized = space.basis_vectors().into_iter().find_map(|phi| {
        let v = at_one(&phi);
        let inv = v.inverse()?;
        Some(phi.iter().map(|x| x * &inv).collect::<Vec<_>>())
    });
    let cosemisimple = normalized.is_some();
    IntegralData { space, normalized, cosemisimple }
}
