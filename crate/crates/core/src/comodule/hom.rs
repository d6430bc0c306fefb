use super::Comodule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// `HOM(M, N)`: all linear maps with `f_0(m) (x) f_1 = f(m_0)_0 (x) S^{-1}(m_1) f(m_0)_1`.
pub(crate) fn hom_comodule(m: &Comodule, n: &Comodule) -> Result<Comodule> {
    m.same_hopf(n)?;
    let h = m.hopf();
    let nh = h.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let field = m.field();
    let s_inv = h.antipode_inv();
    // twisted[hh][k] = S^{-1}(e_hh) e_k
    let twisted: Vec<Vec<Vec<Scalar>>> = (0..nh)
        .map(|hh| {
            let s = s_inv.column(hh);
            (0..nh).map(|k| h.product(&s, &h.basis_vector(k))).collect()
        })
        .collect();
    let d = dm * dn;
    let coaction = Matrix::from_column_fn(field, d * nh, d, |rc| {
        let (r, c) = (rc / dm, rc % dm);
        let mut out = vec![field.zero(); d * nh];
        for b in 0..dm {
            for hh in 0..nh {
                let x = &m.coaction()[(c * nh + hh, b)];
                if x.is_zero() {
                    continue;
                }
                for j in 0..dn {
                    for k in 0..nh {
                        let y = &n.coaction()[(j * nh + k, r)];
                        if y.is_zero() {
                            continue;
                        }
                        let xy = x * y;
                        for (p, coef) in twisted[hh][k].iter().enumerate() {
                            if !coef.is_zero() {
                                out[(j * dm + b) * nh + p].add_product(&xy, coef);
                            }
                        }
                    }
                }
            }
        }
        out
    });
    Comodule::from_parts(h.clone(), d, coaction)
}

/// The currying bijection `Hom^H(N (x) M, P) -> Hom^H(M, HOM(N, P))`, `phi(f)(m)(n) = f(n (x) m)`.
#[derive(Clone, Debug)]
pub struct CurryData {
    /// `Hom^H(N (x) M, P)` inside `Hom(N (x) M, P)`.
    pub source: Subspace,
    /// `Hom^H(M, HOM(N, P))` inside `Hom(M, Hom(N, P))`.
    pub target: Subspace,
    /// `phi` on the full map spaces.
    pub forward: Matrix,
    /// `phi^{-1}` on the full map spaces.
    pub backward: Matrix,
}

impl CurryData {
    /// Both directions land in the colinear subspaces and are mutually inverse there.
    pub fn is_bijection(&self) -> bool {
        self.source.maps_into(&self.forward, &self.target)
            && self.target.maps_into(&self.backward, &self.source)
            && self.backward.mul(&self.forward.mul(self.source.basis())) == *self.source.basis()
            && self.forward.mul(&self.backward.mul(self.target.basis())) == *self.target.basis()
    }
}

pub fn curry(m: &Comodule, n: &Comodule, p: &Comodule) -> Result<CurryData> {
    m.same_hopf(n)?;
    m.same_hopf(p)?;
    let field = m.field();
    let (dm, dn, dp) = (m.dim(), n.dim(), p.dim());
    let nm = n.tensor(m)?;
    let hom_np = n.hom(p)?;
    let source = nm.colinear_maps(p)?;
    let target = m.colinear_maps(&hom_np)?;
    let size = dp * dn * dm;
    let mut forward = Matrix::zeros(field, size, size);
    for r in 0..dp {
        for b in 0..dn {
            for a in 0..dm {
                // f = E_{r, (b, a)} in Hom(N (x) M, P)
                let f_index = r * (dn * dm) + (b * dm + a);
                // phi(f)(e_a) = E_{r, b} in Hom(N, P)
                let g_index = (r * dn + b) * dm + a;
                forward[(g_index, f_index)] = field.one();
            }
        }
    }
    let backward = forward.transpose();
    Ok(CurryData { source, target, forward, backward })
}

/// Certificate that a linear map `f: M -> N` factors through a finite-dimensional comodule:
/// `V` is the subcomodule of `HOM(M, N)` generated by `f`, and `F(m (x) v) = v(m)` is colinear
/// on `M (x) V` with `F(m (x) f) = f(m)`.
#[derive(Clone, Debug)]
pub struct RationalityWitness {
    pub v: Comodule,
    /// Coordinates of `f` in `V`.
    pub vector: Vec<Scalar>,
    /// The evaluation `M (x) V -> N`.
    pub evaluation: Matrix,
    pub source: Comodule,
    pub target: Comodule,
}

impl RationalityWitness {
    pub fn new(m: &Comodule, n: &Comodule, f: &Matrix) -> Result<Self> {
        if f.rows() != n.dim() || f.cols() != m.dim() {
            return Err(Error::DimensionMismatch("map does not fit the comodules".into()));
        }
        let field = m.field();
        let hom = m.hom(n)?;
        let flat = f.data().to_vec();
        let (span, v) = hom.generated_subcomodule(std::slice::from_ref(&flat));
        let vector = span.coordinates(&flat).expect("f lies in the subcomodule it generates");
        let maps: Vec<Matrix> = span
            .basis_vectors()
            .into_iter()
            .map(|b| Matrix::from_row_major(field, n.dim(), m.dim(), b).expect("shape"))
            .collect();
        let dv = maps.len();
        let evaluation = Matrix::from_column_fn(field, n.dim(), m.dim() * dv, |col| maps[col % dv].column(col / dv));
        Ok(RationalityWitness { v, vector, evaluation, source: m.clone(), target: n.clone() })
    }

    /// `F` is colinear and `F(m (x) f) = f(m)` for every basis vector `m`.
    pub fn verify(&self, f: &Matrix) -> bool {
        let Ok(mv) = self.source.tensor(&self.v) else { return false };
        if !mv.is_colinear(&self.evaluation, &self.target) {
            return false;
        }
        let field = self.source.field();
        (0..self.source.dim()).all(|a| {
            let ea = crate::hopf::unit_vector(field, self.source.dim(), a);
            let x = crate::hopf::tensor_vectors(&ea, &self.vector);
            self.evaluation.apply(&x) == f.column(a)
        })
    }
}

/// Witness for `g f` built from witnesses for `f: M -> N` and `g: N -> P`:
/// `K(m (x) v (x) w) = G(F(m (x) v) (x) w)` on `M (x) (V (x) W)`, certified at `f (x) g`.
pub fn compose_witnesses(wf: &RationalityWitness, wg: &RationalityWitness) -> Result<RationalityWitness> {
    let field = wf.source.field();
    let v = wf.v.tensor(&wg.v)?;
    let dw = wg.v.dim();
    let id_w = Matrix::identity(field, dw);
    let k = wg.evaluation.mul(&wf.evaluation.kronecker(&id_w)?);
    let vector = crate::hopf::tensor_vectors(&wf.vector, &wg.vector);
    Ok(RationalityWitness { v, vector, evaluation: k, source: wf.source.clone(), target: wg.target.clone() })
}
