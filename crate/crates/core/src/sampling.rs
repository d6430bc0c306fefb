//! Seeded random objects for property checks: small comodules and relative Hopf modules built
//! from catalog pieces, summed, and written in a random basis.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::comodule::{random_vector, Comodule};
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::relative::{ComoduleAlgebra, RelHopfModule};
use crate::scalar::FieldSpec;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `L U` with unit triangular factors, so always invertible.
    pub fn invertible(&mut self, field: FieldSpec, n: usize) -> Matrix {
        let mut l = Matrix::identity(field, n);
        let mut u = Matrix::identity(field, n);
        for i in 0..n {
            for j in 0..i {
                l[(i, j)] = field.from_i64(self.rng.gen_range(-2..=2));
                u[(j, i)] = field.from_i64(self.rng.gen_range(-2..=2));
            }
        }
        l.mul(&u)
    }

    /// A direct sum of catalog pieces of total dimension between 1 and `max_dim`, in a random basis.
    pub fn comodule(&mut self, hopf: &Arc<HopfAlgebra>, max_dim: usize) -> Comodule {
        let pieces = self.comodule_catalog(hopf);
        let target = self.rng.gen_range(1..=max_dim.max(1));
        let mut out = Comodule::trivial(hopf, 0);
        while out.dim() < target {
            let room = target - out.dim();
            let fitting: Vec<&Comodule> = pieces.iter().filter(|p| p.dim() <= room).collect();
            let piece = fitting.choose(&mut self.rng).expect("the trivial comodule always fits");
            out = out.direct_sum(piece).expect("same Hopf algebra");
        }
        let t = self.invertible(hopf.field(), out.dim());
        out.change_basis(&t).expect("invertible")
    }

    /// Subcomodules of `H` generated by basis and random vectors, plus the trivial comodule.
    pub fn comodule_catalog(&mut self, hopf: &Arc<HopfAlgebra>) -> Vec<Comodule> {
        let regular = Comodule::regular(hopf);
        let n = hopf.dim();
        let mut probes: Vec<Vec<_>> = (0..n).map(|i| hopf.basis_vector(i)).collect();
        for _ in 0..3 {
            probes.push(random_vector(hopf.field(), n, &mut self.rng));
        }
        let mut pieces = vec![Comodule::trivial(hopf, 1)];
        for v in probes {
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let (_, sub) = regular.generated_subcomodule(&[v]);
            if !pieces.contains(&sub) {
                pieces.push(sub);
            }
        }
        pieces
    }

    /// A sum of catalog pieces of dimension at most `max_dim` (or the smallest piece), in a random basis.
    pub fn rel_module(&mut self, base: &Arc<ComoduleAlgebra>, max_dim: usize) -> RelHopfModule {
        let pieces = self.rel_catalog(base, max_dim);
        let smallest = pieces.iter().map(RelHopfModule::dim).min().expect("catalog is nonempty");
        let target = self.rng.gen_range(smallest..=max_dim.max(smallest));
        let mut out: Option<RelHopfModule> = None;
        loop {
            let have = out.as_ref().map_or(0, RelHopfModule::dim);
            let fitting: Vec<&RelHopfModule> = pieces.iter().filter(|p| have + p.dim() <= target).collect();
            let Some(piece) = fitting.choose(&mut self.rng) else { break };
            let piece = (*piece).clone();
            out = Some(match out {
                None => piece,
                Some(m) => m.direct_sum(&piece).expect("same base"),
            });
        }
        let m = out.expect("the smallest piece fits");
        let t = self.invertible(base.field(), m.dim());
        m.change_basis(&t).expect("invertible")
    }

    /// `A`, `A (x) V` for catalog comodules `V`, and subobjects and quotients of those
    /// generated by one random vector, keeping those of dimension at most `max_dim`.
    pub fn rel_catalog(&mut self, base: &Arc<ComoduleAlgebra>, max_dim: usize) -> Vec<RelHopfModule> {
        let mut frees = vec![RelHopfModule::regular(base)];
        for v in self.comodule_catalog(base.hopf()) {
            if base.dim() * v.dim() <= max_dim.max(2 * base.dim()) {
                frees.push(RelHopfModule::free(base, &v).expect("same Hopf algebra"));
            }
        }
        let mut pieces = Vec::new();
        for p in &frees {
            let v = random_vector(base.field(), p.dim(), &mut self.rng);
            let sub = p.generated_subobject(&[v]);
            if !sub.is_zero() && sub.dim() < p.dim() {
                pieces.push(p.restrict(&sub).expect("subobject"));
                pieces.push(p.quotient(&sub).expect("subobject").0);
            }
            pieces.push(p.clone());
        }
        pieces.retain(|p| p.dim() > 0 && p.dim() <= max_dim);
        if pieces.is_empty() {
            pieces.push(RelHopfModule::regular(base));
        }
        let mut unique: Vec<RelHopfModule> = Vec::new();
        for p in pieces {
            if !unique.contains(&p) {
                unique.push(p);
            }
        }
        unique
    }

    pub fn vector(&mut self, field: FieldSpec, n: usize) -> Vec<crate::scalar::Scalar> {
        random_vector(field, n, &mut self.rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn random_comodules_validate() {
        let h = Arc::new(fixtures::sweedler(FieldSpec::Rationals));
        let mut s = Sampler::new(7);
        for _ in 0..10 {
            let m = s.comodule(&h, 3);
            assert!(m.dim() >= 1 && m.dim() <= 3);
            assert!(m.validate().passed());
        }
    }

    #[test]
    fn random_relative_modules_validate() {
        let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::prime(2).unwrap()));
        let base = Arc::new(ComoduleAlgebra::regular(&h));
        let mut s = Sampler::new(3);
        for _ in 0..5 {
            let m = s.rel_module(&base, 4);
            assert!(m.dim() <= 4);
            assert!(m.validate().passed());
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals));
        assert_eq!(Sampler::new(1).comodule(&h, 3), Sampler::new(1).comodule(&h, 3));
    }
}
