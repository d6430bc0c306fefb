use std::sync::Arc;

use proptest::prelude::*;

use hopfcoh::cohomology::{cobar_resolution, DEFAULT_CAP};
use hopfcoh::comodule::curry;
use hopfcoh::fixtures;
use hopfcoh::hopf::HopfAlgebra;
use hopfcoh::relative::{ComoduleAlgebra, SmashAlgebra};
use hopfcoh::sampling::Sampler;
use hopfcoh::workspace::Workspace;
use hopfcoh::{FieldSpec, Matrix, Subspace};

fn field(which: u8) -> FieldSpec {
    match which % 3 {
        0 => FieldSpec::Rationals,
        1 => FieldSpec::prime(2).unwrap(),
        _ => FieldSpec::prime(5).unwrap(),
    }
}

fn hopf(which: u8) -> Arc<HopfAlgebra> {
    let q = FieldSpec::Rationals;
    let f2 = FieldSpec::prime(2).unwrap();
    Arc::new(match which % 5 {
        0 => fixtures::group_algebra_c2(q),
        1 => fixtures::group_algebra_c2(f2),
        2 => fixtures::dual_group_algebra_c2(q),
        3 => fixtures::dual_group_algebra_c2(f2),
        _ => fixtures::sweedler(q),
    })
}

fn matrix(f: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_fn(f, rows, cols, |r, c| f.from_i64(entries[(r * cols + c) % entries.len()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(which in 0u8..3, rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-3i64..4, 36)) {
        let f = field(which);
        let m = matrix(f, rows, cols, &entries);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), cols);
        prop_assert!(m.mul(kernel.basis()).columns().iter().all(|c| c.iter().all(|x| x.is_zero())));
        prop_assert_eq!(m.image().dim(), m.transpose().rank());
    }

    #[test]
    fn subspace_lattice(which in 0u8..3, a in prop::collection::vec(-2i64..3, 12), b in prop::collection::vec(-2i64..3, 12)) {
        let f = field(which);
        let u = matrix(f, 4, 3, &a).image();
        let v = matrix(f, 4, 3, &b).image();
        prop_assert_eq!(u.sum(&v).dim() + u.intersection(&v).dim(), u.dim() + v.dim());
        prop_assert!(u.intersection(&v).is_subspace_of(&u));
        prop_assert!(u.is_subspace_of(&u.sum(&v)));
        prop_assert_eq!(u.sum(&Subspace::zero(f, 4)), u);
    }

    #[test]
    fn hom_comodules_validate_and_restrict_to_colinear_maps(which in 0u8..5, seed in any::<u64>()) {
        let h = hopf(which);
        let mut s = Sampler::new(seed);
        let (m, n) = (s.comodule(&h, 3), s.comodule(&h, 3));
        let hom = m.hom(&n).unwrap();
        prop_assert!(hom.validate().passed());
        prop_assert_eq!(hom.dim(), m.dim() * n.dim());
        prop_assert_eq!(hom.coinvariants(), m.colinear_maps(&n).unwrap());
    }

    #[test]
    fn currying_is_bijective(which in 0u8..5, seed in any::<u64>()) {
        let h = hopf(which);
        let mut s = Sampler::new(seed);
        let (m, n, p) = (s.comodule(&h, 2), s.comodule(&h, 2), s.comodule(&h, 2));
        let data = curry(&m, &n, &p).unwrap();
        prop_assert!(data.is_bijection());
    }

    #[test]
    fn cobar_identities(which in 0u8..5, seed in any::<u64>()) {
        let h = hopf(which);
        let m = Sampler::new(seed).comodule(&h, 3);
        let c = cobar_resolution(&m, 3, DEFAULT_CAP).unwrap();
        prop_assert!(c.squares_vanish());
        prop_assert!(c.homotopy_holds());
    }

    #[test]
    fn smash_round_trip(seed in any::<u64>(), graded in any::<bool>()) {
        let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals));
        let base = Arc::new(if graded {
            ComoduleAlgebra::tensor_with_regular(&h, &fixtures::dual_numbers(h.field()))
        } else {
            ComoduleAlgebra::regular(&h)
        });
        let m = Sampler::new(seed).rel_module(&base, 4);
        let smash = SmashAlgebra::new(&base);
        let module = smash.to_module(&m).unwrap();
        prop_assert!(module.validate().passed());
        prop_assert_eq!(smash.from_module(&module).unwrap(), m);
    }

    #[test]
    fn workspace_json_round_trips(which in 0u8..5, seed in any::<u64>()) {
        let h = hopf(which);
        let mut ws = Workspace::new(h.field());
        ws.add_hopf("H", h.clone()).unwrap();
        let mut s = Sampler::new(seed);
        ws.add_comodule("M", "H", s.comodule(&h, 3)).unwrap();
        ws.add_comodule("N", "H", s.comodule(&h, 3)).unwrap();
        let text = ws.to_json();
        let again = Workspace::parse(&text).unwrap();
        prop_assert_eq!(again.to_json(), text);
        prop_assert_eq!(again.comodule("M").unwrap(), ws.comodule("M").unwrap());
    }
}
