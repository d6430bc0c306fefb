//! The shipped Hopf algebras and the small algebras used alongside them.

use std::sync::Arc;

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::linalg::Matrix;
use crate::modules::AlgebraModule;
use crate::relative::{induce, ComoduleAlgebra, RelHopfModule};
use crate::scalar::{FieldSpec, Scalar};
use crate::workspace::Workspace;

/// Names accepted by `hopfcoh fixtures --name`.
pub const FIXTURE_NAMES: [&str; 7] =
    ["kc2_q", "kc2_gf2", "dual_kc2_gf2", "dual_kc2_q", "sweedler4_q", "dualnumbers_A", "regular_A"];

/// Algebra from a product table: `table(i, j)` lists `(k, c)` with `e_i e_j = sum c e_k`.
pub fn algebra_from_table(field: FieldSpec, n: usize, unit: usize, table: impl Fn(usize, usize) -> Vec<(usize, i64)>) -> Algebra {
    let mut mult = Matrix::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in table(i, j) {
                mult[(k, i * n + j)] += &field.from_i64(c);
            }
        }
    }
    let mut u = vec![field.zero(); n];
    u[unit] = field.one();
    Algebra::new(field, n, mult, u).expect("table has the right shape")
}

/// Comultiplication from `delta(i)`, a list of `(j, k, c)` with `Delta(e_i) = sum c e_j (x) e_k`.
pub fn comult_from_table(field: FieldSpec, n: usize, delta: impl Fn(usize) -> Vec<(usize, usize, i64)>) -> Matrix {
    let mut m = Matrix::zeros(field, n * n, n);
    for i in 0..n {
        for (j, k, c) in delta(i) {
            m[(j * n + k, i)] += &field.from_i64(c);
        }
    }
    m
}

fn ints(field: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

/// `kC2` with basis `1, g`.
pub fn group_algebra_c2(field: FieldSpec) -> HopfAlgebra {
    let algebra = algebra_from_table(field, 2, 0, |i, j| vec![((i + j) % 2, 1)]);
    let comult = comult_from_table(field, 2, |i| vec![(i, i, 1)]);
    let antipode = Matrix::identity(field, 2);
    HopfAlgebra::new(algebra, comult, ints(field, &[1, 1]), Some(antipode)).expect("kC2 is a Hopf algebra")
}

/// Functions on `C2` in the idempotent basis `e_1, e_g`.
pub fn dual_group_algebra_c2(field: FieldSpec) -> HopfAlgebra {
    let pointwise = algebra_from_table(field, 2, 0, |i, j| if i == j { vec![(i, 1)] } else { vec![] });
    // the unit is e_1 + e_g
    let algebra = Algebra::new(field, 2, pointwise.mult().clone(), ints(field, &[1, 1])).expect("shape");
    // Delta(e_x) = sum over yz = x of e_y (x) e_z
    let comult = comult_from_table(field, 2, |x| (0..2).map(|y| (y, (x + y) % 2, 1)).collect());
    HopfAlgebra::new(algebra, comult, ints(field, &[1, 0]), Some(Matrix::identity(field, 2)))
        .expect("functions on C2 form a Hopf algebra")
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Delta(x) = x (x) 1 + g (x) x`.
pub fn sweedler(field: FieldSpec) -> HopfAlgebra {
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let algebra = algebra_from_table(field, 4, ONE, |i, j| match (i, j) {
        (ONE, j) => vec![(j, 1)],
        (i, ONE) => vec![(i, 1)],
        (G, G) => vec![(ONE, 1)],
        (G, X) => vec![(GX, 1)],
        (G, GX) => vec![(X, 1)],
        (X, G) => vec![(GX, -1)],
        (GX, G) => vec![(X, -1)],
        _ => vec![],
    });
    let comult = comult_from_table(field, 4, |i| match i {
        ONE => vec![(ONE, ONE, 1)],
        G => vec![(G, G, 1)],
        X => vec![(X, ONE, 1), (G, X, 1)],
        _ => vec![(GX, G, 1), (ONE, GX, 1)],
    });
    let mut antipode = Matrix::identity(field, 4);
    antipode[(X, X)] = field.zero();
    antipode[(GX, GX)] = field.zero();
    antipode[(GX, X)] = field.from_i64(-1);
    antipode[(X, GX)] = field.one();
    HopfAlgebra::new(algebra, comult, ints(field, &[1, 1, 0, 0]), Some(antipode)).expect("Sweedler's algebra is a Hopf algebra")
}

/// `k[t]/(t^2)` with basis `1, t`.
pub fn dual_numbers(field: FieldSpec) -> Algebra {
    algebra_from_table(field, 2, 0, |i, j| if i + j < 2 { vec![(i + j, 1)] } else { vec![] })
}

/// The monoid bialgebra `k{1, z}` with `z^2 = z` and `z` grouplike. It has no antipode.
pub fn idempotent_monoid_bialgebra(field: FieldSpec) -> (Algebra, Matrix, Vec<Scalar>) {
    let algebra = algebra_from_table(field, 2, 0, |i, j| vec![(i.max(j), 1)]);
    let comult = comult_from_table(field, 2, |i| vec![(i, i, 1)]);
    (algebra, comult, ints(field, &[1, 1]))
}

/// The named workspace shipped as a fixture. Every Hopf algebra is called `H`.
pub fn fixture_workspace(name: &str) -> Result<Workspace> {
    let q = FieldSpec::Rationals;
    let f2 = FieldSpec::prime(2)?;
    match name {
        "kc2_q" => group_algebra_workspace(q),
        "kc2_gf2" => group_algebra_workspace(f2),
        "dual_kc2_q" => dual_group_algebra_workspace(q),
        "dual_kc2_gf2" => dual_group_algebra_workspace(f2),
        "sweedler4_q" => sweedler_workspace(),
        "dualnumbers_A" => dual_numbers_workspace(),
        "regular_A" => regular_base_workspace(),
        other => Err(Error::UnknownName(format!("fixture \"{other}\""))),
    }
}

fn hopf_workspace(hopf: HopfAlgebra) -> Result<(Workspace, Arc<HopfAlgebra>)> {
    let h = Arc::new(hopf);
    let mut ws = Workspace::new(h.field());
    ws.add_hopf("H", h.clone())?;
    Ok((ws, h))
}

fn group_algebra_workspace(field: FieldSpec) -> Result<Workspace> {
    let (mut ws, h) = hopf_workspace(group_algebra_c2(field))?;
    ws.add_comodule("k", "H", Comodule::trivial(&h, 1))?;
    ws.add_comodule("k_g", "H", Comodule::one_dimensional(&h, &h.basis_vector(1))?)?;
    ws.add_comodule("H_regular", "H", Comodule::regular(&h))?;
    Ok(ws)
}

fn dual_group_algebra_workspace(field: FieldSpec) -> Result<Workspace> {
    let (mut ws, h) = hopf_workspace(dual_group_algebra_c2(field))?;
    ws.add_comodule("k", "H", Comodule::trivial(&h, 1))?;
    ws.add_comodule("H_regular", "H", Comodule::regular(&h))?;
    if field.characteristic() != 2 {
        // the sign character e_1 - e_g, equal to the unit in characteristic 2
        ws.add_comodule("sign", "H", Comodule::one_dimensional(&h, &ints(field, &[1, -1]))?)?;
    }
    Ok(ws)
}

fn sweedler_workspace() -> Result<Workspace> {
    let (mut ws, h) = hopf_workspace(sweedler(FieldSpec::Rationals))?;
    let regular = Comodule::regular(&h);
    ws.add_comodule("k", "H", Comodule::trivial(&h, 1))?;
    ws.add_comodule("k_g", "H", Comodule::one_dimensional(&h, &h.basis_vector(1))?)?;
    // the subcomodules of H generated by x and by gx
    ws.add_comodule("V_x", "H", regular.generated_subcomodule(&[h.basis_vector(2)]).1)?;
    ws.add_comodule("V_gx", "H", regular.generated_subcomodule(&[h.basis_vector(3)]).1)?;
    Ok(ws)
}

/// `k` as a module over `k[t]/(t^2)` or its coinvariant copies: `1 -> 1`, `t -> 0`.
fn augmentation(algebra: &Arc<Algebra>) -> Result<AlgebraModule> {
    let field = algebra.field();
    let mut chi = vec![field.zero(); algebra.dim()];
    chi[0] = field.one();
    AlgebraModule::character(algebra, &chi)
}

fn dual_numbers_workspace() -> Result<Workspace> {
    let (mut ws, h) = hopf_workspace(group_algebra_c2(FieldSpec::Rationals))?;
    let field = h.field();
    let k_g = Comodule::one_dimensional(&h, &h.basis_vector(1))?;
    ws.add_comodule("k", "H", Comodule::trivial(&h, 1))?;
    ws.add_comodule("k_g", "H", k_g.clone())?;

    let plain = Arc::new(ComoduleAlgebra::trivial(&h, dual_numbers(field)));
    ws.add_comodule_algebra("A", "H", plain.clone())?;
    let graded = Arc::new(ComoduleAlgebra::tensor_with_regular(&h, &dual_numbers(field)));
    ws.add_comodule_algebra("A_graded", "H", graded.clone())?;

    let b = ws.comodule_algebra("A")?.coinvariants.clone();
    let k_b = augmentation(&b.algebra)?;
    let a_reg = RelHopfModule::regular(&plain);
    let k_a = RelHopfModule::new(plain.clone(), Comodule::trivial(&h, 1), Matrix::row_vector(field, &ints(field, &[1, 0])))?;
    ws.add_rel_module("k_A", "A", k_a)?;
    ws.add_rel_module("A_kg", "A", a_reg.tensor_comodule(&k_g)?)?;
    ws.add_rel_module("A_reg", "A", a_reg)?;
    ws.add_b_module("k_B", "A", k_b)?;
    ws.add_b_module("B_reg", "A", AlgebraModule::free(&b.algebra, 1))?;

    let bg = ws.comodule_algebra("A_graded")?.coinvariants.clone();
    let k_bg = augmentation(&bg.algebra)?;
    ws.add_rel_module("Ag_reg", "A_graded", RelHopfModule::regular(&graded))?;
    ws.add_rel_module("Ag_k", "A_graded", induce(&graded, &bg, &k_bg)?.module)?;
    ws.add_b_module("k_Bg", "A_graded", k_bg)?;
    Ok(ws)
}

fn regular_base_workspace() -> Result<Workspace> {
    let (mut ws, h) = hopf_workspace(group_algebra_c2(FieldSpec::Rationals))?;
    let k_g = Comodule::one_dimensional(&h, &h.basis_vector(1))?;
    ws.add_comodule("k", "H", Comodule::trivial(&h, 1))?;
    ws.add_comodule("k_g", "H", k_g.clone())?;
    let base = Arc::new(ComoduleAlgebra::regular(&h));
    ws.add_comodule_algebra("A", "H", base.clone())?;
    ws.add_rel_module("A_reg", "A", RelHopfModule::regular(&base))?;
    ws.add_rel_module("A_free_kg", "A", RelHopfModule::free(&base, &k_g)?)?;
    let b = ws.comodule_algebra("A")?.coinvariants.clone();
    ws.add_b_module("k_B", "A", AlgebraModule::character(&b.algebra, &[h.field().one()])?)?;
    Ok(ws)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_hopf_algebras_validate() {
        let f2 = FieldSpec::prime(2).unwrap();
        let q = FieldSpec::Rationals;
        for h in [group_algebra_c2(q), group_algebra_c2(f2), dual_group_algebra_c2(q), dual_group_algebra_c2(f2), sweedler(q)] {
            assert!(h.validate().passed());
        }
    }

    #[test]
    fn dual_numbers_are_commutative() {
        let a = dual_numbers(FieldSpec::Rationals);
        assert!(a.validate().passed());
        assert!(a.is_commutative());
    }
}
