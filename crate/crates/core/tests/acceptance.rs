//! Acceptance criteria, one test per criterion. Each prints a `criterion N: PASS|FAIL` line
//! with the measured numbers; the tests hold a shared lock so runtime bounds are measured alone.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::{Arc, Mutex, MutexGuard};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfcoh::cohomology::{cobar_resolution, derived_coinvariants, ext_h, ext_rational, a_ext_h, DEFAULT_CAP};
use hopfcoh::comodule::Comodule;
use hopfcoh::fixtures::{self, fixture_workspace, FIXTURE_NAMES};
use hopfcoh::hopf::{Algebra, HopfAlgebra};
use hopfcoh::modules::{ext_over_algebra, AlgebraModule};
use hopfcoh::relative::{ComoduleAlgebra, SmashAlgebra};
use hopfcoh::report::Status;
use hopfcoh::sampling::Sampler;
use hopfcoh::suite::{self, SuiteOptions};
use hopfcoh::{FieldSpec, Matrix, Scalar};

static LOCK: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    LOCK.lock().unwrap_or_else(|e| e.into_inner())
}

fn report(n: usize, title: &str, ok: bool, detail: &str) {
    println!("criterion {n} ({title}): {} {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} ({title}) failed: {detail}");
}

fn gf2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

/// The five shipped Hopf algebras.
fn hopf_fixtures() -> Vec<(&'static str, Arc<HopfAlgebra>)> {
    let q = FieldSpec::Rationals;
    vec![
        ("kc2_q", Arc::new(fixtures::group_algebra_c2(q))),
        ("kc2_gf2", Arc::new(fixtures::group_algebra_c2(gf2()))),
        ("dual_kc2_q", Arc::new(fixtures::dual_group_algebra_c2(q))),
        ("dual_kc2_gf2", Arc::new(fixtures::dual_group_algebra_c2(gf2()))),
        ("sweedler4_q", Arc::new(fixtures::sweedler(q))),
    ]
}

/// Fixture comodules over the Hopf algebra of `name`, plus `extra` random ones of dimension at most 3.
fn test_comodules(name: &str, h: &Arc<HopfAlgebra>, extra: usize, seed: u64) -> Vec<Comodule> {
    let ws = fixture_workspace(name).unwrap();
    let mut out: Vec<Comodule> = ws.comodules_over("H").into_iter().map(|(_, c)| c.clone()).collect();
    let mut s = Sampler::new(seed);
    out.extend((0..extra).map(|_| s.comodule(h, 3)));
    out
}

// ---- an axiom checker written from the structure constants, independent of the library ----

struct Constants {
    n: usize,
    zero: Scalar,
    one: Scalar,
    m: Vec<Vec<Vec<Scalar>>>,
    u: Vec<Scalar>,
    d: Vec<Vec<Vec<Scalar>>>,
    e: Vec<Scalar>,
    s: Vec<Vec<Scalar>>,
}

impl Constants {
    fn new(field: FieldSpec, mult: &Matrix, unit: &[Scalar], comult: &Matrix, counit: &[Scalar], antipode: &Matrix) -> Self {
        let n = unit.len();
        Constants {
            n,
            zero: field.zero(),
            one: field.one(),
            m: (0..n).map(|k| (0..n).map(|i| (0..n).map(|j| mult[(k, i * n + j)].clone()).collect()).collect()).collect(),
            u: unit.to_vec(),
            d: (0..n).map(|j| (0..n).map(|k| (0..n).map(|i| comult[(j * n + k, i)].clone()).collect()).collect()).collect(),
            e: counit.to_vec(),
            s: (0..n).map(|k| (0..n).map(|i| antipode[(k, i)].clone()).collect()).collect(),
        }
    }

    fn delta(&self, i: usize, j: usize) -> Scalar {
        if i == j { self.one.clone() } else { self.zero.clone() }
    }

    fn sum(&self, terms: impl Iterator<Item = Scalar>) -> Scalar {
        terms.fold(self.zero.clone(), |acc, x| &acc + &x)
    }

    fn violated(&self) -> BTreeSet<&'static str> {
        let n = self.n;
        let r = || 0..n;
        let mut out = BTreeSet::new();
        // (e_i e_j) e_l = e_i (e_j e_l)
        let assoc = r().all(|i| {
            r().all(|j| {
                r().all(|l| {
                    r().all(|t| {
                        self.sum(r().map(|k| &self.m[k][i][j] * &self.m[t][k][l]))
                            == self.sum(r().map(|k| &self.m[k][j][l] * &self.m[t][i][k]))
                    })
                })
            })
        });
        if !assoc {
            out.insert("associativity");
        }
        let unit = r().all(|i| {
            r().all(|t| {
                self.sum(r().map(|k| &self.u[k] * &self.m[t][k][i])) == self.delta(t, i)
                    && self.sum(r().map(|k| &self.u[k] * &self.m[t][i][k])) == self.delta(t, i)
            })
        });
        if !unit {
            out.insert("unit");
        }
        let coassoc = r().all(|i| {
            r().all(|a| {
                r().all(|b| {
                    r().all(|c| {
                        self.sum(r().map(|j| &self.d[j][c][i] * &self.d[a][b][j]))
                            == self.sum(r().map(|k| &self.d[a][k][i] * &self.d[b][c][k]))
                    })
                })
            })
        });
        if !coassoc {
            out.insert("coassociativity");
        }
        let counit = r().all(|i| {
            r().all(|k| {
                self.sum(r().map(|j| &self.e[j] * &self.d[j][k][i])) == self.delta(k, i)
                    && self.sum(r().map(|j| &self.e[j] * &self.d[k][j][i])) == self.delta(k, i)
            })
        });
        if !counit {
            out.insert("counit");
        }
        let unit_grouplike = r().all(|a| {
            r().all(|b| self.sum(r().map(|i| &self.u[i] * &self.d[a][b][i])) == &self.u[a] * &self.u[b])
        }) && self.sum(r().map(|i| &self.u[i] * &self.e[i])) == self.one;
        let multiplicative = r().all(|i| {
            r().all(|j| {
                let counit_ok = self.sum(r().map(|k| &self.m[k][i][j] * &self.e[k])) == &self.e[i] * &self.e[j];
                counit_ok
                    && r().all(|a| {
                        r().all(|b| {
                            let lhs = self.sum(r().map(|k| &self.m[k][i][j] * &self.d[a][b][k]));
                            let mut rhs = self.zero.clone();
                            for p in r() {
                                for q in r() {
                                    let x = &self.d[p][q][i];
                                    if x.is_zero() {
                                        continue;
                                    }
                                    for t in r() {
                                        for w in r() {
                                            let y = &self.d[t][w][j];
                                            if y.is_zero() {
                                                continue;
                                            }
                                            rhs = &rhs + &(&(x * y) * &(&self.m[a][p][t] * &self.m[b][q][w]));
                                        }
                                    }
                                }
                            }
                            lhs == rhs
                        })
                    })
            })
        });
        if !(unit_grouplike && multiplicative) {
            out.insert("bialgebra");
        }
        // S(e_j) e_k and e_j S(e_k) summed against Delta(e_i), compared with epsilon(e_i) 1
        let antipode = r().all(|i| {
            r().all(|t| {
                let target = &self.u[t] * &self.e[i];
                let mut left = self.zero.clone();
                let mut right = self.zero.clone();
                for j in r() {
                    for k in r() {
                        let c = &self.d[j][k][i];
                        if c.is_zero() {
                            continue;
                        }
                        for p in r() {
                            left = &left + &(&(c * &self.s[p][j]) * &self.m[t][p][k]);
                            right = &right + &(&(c * &self.s[p][k]) * &self.m[t][j][p]);
                        }
                    }
                }
                left == target && right == target
            })
        });
        if !antipode {
            out.insert("antipode");
        }
        if !self.invertible_s() {
            out.insert("antipode-bijective");
        }
        out
    }

    /// Gaussian elimination on a copy of `S`.
    fn invertible_s(&self) -> bool {
        let n = self.n;
        let mut a = self.s.clone();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return false };
            a.swap(col, p);
            let inv = a[col][col].inverse().unwrap();
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &sub;
                }
            }
        }
        true
    }
}

#[test]
fn criterion_01_axiom_suite_and_mutations() {
    let _g = serial();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut detail = Vec::new();
    let mut ok = true;
    for (name, h) in hopf_fixtures() {
        let field = h.field();
        let base = Constants::new(field, h.algebra().mult(), h.unit(), h.comult(), h.counit(), h.antipode());
        ok &= h.validate().passed() && base.violated().is_empty();
        let mut agree = 0;
        for _ in 0..30 {
            let mut mult = h.algebra().mult().clone();
            let mut unit = h.unit().to_vec();
            let mut comult = h.comult().clone();
            let mut counit = h.counit().to_vec();
            let mut antipode = h.antipode().clone();
            let one = field.one();
            match rng.gen_range(0..5) {
                0 => {
                    let (r, c) = (rng.gen_range(0..mult.rows()), rng.gen_range(0..mult.cols()));
                    mult[(r, c)] = &mult[(r, c)] + &one;
                }
                1 => {
                    let i = rng.gen_range(0..unit.len());
                    unit[i] = &unit[i] + &one;
                }
                2 => {
                    let (r, c) = (rng.gen_range(0..comult.rows()), rng.gen_range(0..comult.cols()));
                    comult[(r, c)] = &comult[(r, c)] + &one;
                }
                3 => {
                    let i = rng.gen_range(0..counit.len());
                    counit[i] = &counit[i] + &one;
                }
                _ => {
                    let (r, c) = (rng.gen_range(0..antipode.rows()), rng.gen_range(0..antipode.cols()));
                    antipode[(r, c)] = &antipode[(r, c)] + &one;
                }
            }
            let oracle = Constants::new(field, &mult, &unit, &comult, &counit, &antipode).violated();
            let algebra = Algebra::new(field, h.dim(), mult, unit).unwrap();
            let mutated = HopfAlgebra::from_parts(algebra, comult, counit, Some(antipode)).unwrap();
            let validation = mutated.validate();
            let found: BTreeSet<&str> = validation.failing().into_iter().collect();
            if !found.is_empty() && found == oracle {
                agree += 1;
            } else {
                println!("  {name}: validator {found:?}, oracle {oracle:?}");
            }
        }
        ok &= agree == 30;
        detail.push(format!("{name} {agree}/30"));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(5);
    report(1, "axiom suite", ok, &format!("[{}] in {:.2?}", detail.join(", "), elapsed));
}

#[test]
fn criterion_02_resolution_exactness() {
    let _g = serial();
    let mut ok = true;
    let mut gf2_time = Duration::ZERO;
    let mut count = 0;
    for (name, h) in hopf_fixtures() {
        let start = Instant::now();
        for m in test_comodules(name, &h, 10, 21) {
            let c = cobar_resolution(&m, 4, DEFAULT_CAP).unwrap();
            ok &= c.squares_vanish() && c.homotopy_holds();
            count += 1;
        }
        if h.field() == gf2() {
            gf2_time += start.elapsed();
        }
    }
    ok &= gf2_time < Duration::from_secs(30);
    report(2, "resolution exactness", ok, &format!("{count} comodules, q <= 4, GF(2) fixtures in {gf2_time:.2?}"));
}

#[test]
fn criterion_03_hom_coinvariants() {
    let _g = serial();
    let mut ok = true;
    let mut nonzero = 0;
    for (name, h) in hopf_fixtures() {
        let mut s = Sampler::new(31);
        for _ in 0..25 {
            let (m, n) = (s.comodule(&h, 3), s.comodule(&h, 3));
            let lhs = m.hom(&n).unwrap().coinvariants();
            let rhs = m.colinear_maps(&n).unwrap();
            if lhs != rhs {
                println!("  {name}: subspaces differ");
                ok = false;
            }
            nonzero += usize::from(rhs.dim() > 0);
        }
    }
    report(3, "hom coinvariants", ok, &format!("125 pairs, {nonzero} with nonzero colinear maps"));
}

#[test]
fn criterion_04_cosemisimple_collapse() {
    let _g = serial();
    let mut ok = true;
    let mut count = 0;
    for (name, h) in hopf_fixtures().into_iter().filter(|(n, _)| n.starts_with("kc2")) {
        ok &= h.is_cosemisimple();
        let comodules = test_comodules(name, &h, 10, 41);
        for m in &comodules {
            let r = derived_coinvariants(m, 4, DEFAULT_CAP).unwrap();
            ok &= r[0] == m.coinvariants().dim() && r[1..].iter().all(|&d| d == 0);
            let split = m.integral_projector().unwrap();
            ok &= split.verify(m);
            for n in comodules.iter().take(4) {
                let e = ext_h(m, n, 4, DEFAULT_CAP).unwrap();
                ok &= e[1..].iter().all(|&d| d == 0);
                count += 1;
            }
        }
    }
    report(4, "cosemisimple collapse", ok, &format!("{count} Ext pairs over kC2 (Q and GF(2)), p <= 4"));
}

#[test]
fn criterion_05_group_cohomology_oracle() {
    let _g = serial();
    let f2 = gf2();
    let dual = Arc::new(fixtures::dual_group_algebra_c2(f2));
    let k = Comodule::trivial(&dual, 1);
    let lhs = derived_coinvariants(&k, 4, DEFAULT_CAP).unwrap();
    // comodules over (kC2)* are modules over kC2: Ext over the group algebra of the trivial module
    let group = Arc::new(fixtures::group_algebra_c2(f2).algebra().clone());
    let trivial = AlgebraModule::character(&group, &[f2.one(), f2.one()]).unwrap();
    let oracle = ext_over_algebra(&trivial, &trivial, 4).unwrap();
    let ok = lhs == vec![1; 5] && lhs == oracle;
    report(5, "group cohomology oracle", ok, &format!("R^p(k) = {lhs:?}, oracle {oracle:?}"));
}

#[test]
fn criterion_06_rational_ext_vanishes() {
    let _g = serial();
    let mut ok = true;
    let mut pairs = 0;
    let mut h4_nonzero = 0;
    for (name, _) in hopf_fixtures() {
        let ws = fixture_workspace(name).unwrap();
        let cs = ws.comodules_over("H");
        for (_, m) in &cs {
            for (_, n) in &cs {
                let e = ext_rational(m, n, 3, DEFAULT_CAP).unwrap();
                ok &= e.dims[1..].iter().all(|&d| d == 0) && e.degree_zero_is_hom();
                pairs += 1;
                if name == "sweedler4_q" && ext_h(m, n, 3, DEFAULT_CAP).unwrap()[1..].iter().any(|&d| d > 0) {
                    h4_nonzero += 1;
                }
            }
        }
    }
    ok &= h4_nonzero > 0;
    report(6, "rational EXT vanishing", ok, &format!("{pairs} pairs; {h4_nonzero} Sweedler pairs with nonzero Ext^H in degree >= 1"));
}

#[test]
fn criterion_07_tensor_hom_coinvariants() {
    let _g = serial();
    let mut ok = true;
    let mut h4_degree_one = 0;
    let mut total = 0;
    for (name, h) in hopf_fixtures() {
        let cs = test_comodules(name, &h, 2, 71);
        let mut per_fixture = 0;
        for m in &cs {
            for n in &cs {
                let lhs = derived_coinvariants(&m.dual().tensor(n).unwrap(), 3, DEFAULT_CAP).unwrap();
                let rhs = ext_h(m, n, 3, DEFAULT_CAP).unwrap();
                ok &= lhs == rhs;
                per_fixture += 1;
                if name == "sweedler4_q" && rhs[1] > 0 {
                    h4_degree_one += 1;
                }
            }
        }
        ok &= per_fixture >= 5;
        total += per_fixture;
    }
    ok &= h4_degree_one > 0;
    report(7, "tensor-hom coinvariants", ok, &format!("{total} pairs, {h4_degree_one} Sweedler pairs with nonzero degree 1"));
}

#[test]
fn criterion_08_relative_layer() {
    let _g = serial();
    let designated = [
        "coinvariants-as-relative-ext",
        "rational-relative-ext-coinvariants",
        "relative-ext-projective-side",
        "relative-ext-injective-side",
        "relative-ext-coinvariants",
        "coinduced-hom-adjunction",
        "coinduced-evaluation",
        "bullet-kernel",
        "bullet-quotient",
        "bullet-restriction",
        "coinduced-bullet",
        "isotypic-coinduced",
        "b-ext-coinvariants",
        "flat-coinvariants-injective",
    ];
    let workspaces: Vec<(String, _)> = FIXTURE_NAMES.iter().map(|n| (n.to_string(), fixture_workspace(n).unwrap())).collect();
    let start = Instant::now();
    let full = suite::run_many(&workspaces, "all", &SuiteOptions::default()).unwrap();
    let elapsed = start.elapsed();
    let mut ok = full.all_passed() && elapsed < Duration::from_secs(120);
    for f in full.failures() {
        println!("  failed: {} {}", f.check, f.fixture);
    }
    let mut passes = 0;
    for check in designated {
        let entries: Vec<_> = full.entries().iter().filter(|e| e.check == check).collect();
        let ran = entries.iter().filter(|e| e.status == Status::Pass).count();
        // both relative fixtures live over kC2 over Q, which is cosemisimple: nothing may be skipped
        let skipped = entries.iter().filter(|e| matches!(e.status, Status::Skipped(_))).count();
        if ran == 0 || skipped > 0 {
            println!("  {check}: {ran} pass, {skipped} skipped");
            ok = false;
        }
        passes += ran;
    }
    let summary = full.to_json()["summary"].clone();
    report(8, "relative layer", ok, &format!("{passes} designated entries pass; full suite {summary} in {elapsed:.2?}"));
}

#[test]
fn criterion_09_smash_transport() {
    let _g = serial();
    let h = Arc::new(fixtures::group_algebra_c2(FieldSpec::Rationals));
    let bases = [
        Arc::new(ComoduleAlgebra::regular(&h)),
        Arc::new(ComoduleAlgebra::tensor_with_regular(&h, &fixtures::dual_numbers(h.field()))),
    ];
    let mut s = Sampler::new(91);
    let mut ok = true;
    let mut nonzero = 0;
    for i in 0..20 {
        let base = &bases[i % 2];
        let smash = SmashAlgebra::new(base);
        let m = s.rel_module(base, 4);
        let n = s.rel_module(base, 4);
        let (sm, sn) = (smash.to_module(&m).unwrap(), smash.to_module(&n).unwrap());
        ok &= smash.from_module(&sm).unwrap() == m && smash.from_module(&sn).unwrap() == n;
        let direct = m.morphisms(&n).unwrap().dim();
        ok &= sm.hom(&sn).unwrap().dim() == direct;
        ok &= a_ext_h(&m, &n, 0).unwrap()[0] == direct;
        nonzero += usize::from(direct > 0);
    }
    for name in ["dualnumbers_A", "regular_A"] {
        let ws = fixture_workspace(name).unwrap();
        for a in ws.comodule_algebras.keys() {
            let rel = ws.rel_modules_over(a);
            for (_, m) in &rel {
                for (_, n) in &rel {
                    ok &= a_ext_h(m, n, 0).unwrap()[0] == m.morphisms(n).unwrap().dim();
                }
            }
        }
    }
    report(9, "smash transport", ok, &format!("20 random pairs ({nonzero} with nonzero Hom) and all fixture pairs"));
}

#[test]
fn criterion_10_cli_contract() {
    let _g = serial();
    let exe = env!("CARGO_BIN_EXE_hopfcoh");
    let dir = tempfile::tempdir().unwrap();
    let mut ok = true;
    let mut files = Vec::new();
    for name in FIXTURE_NAMES {
        let path = dir.path().join(format!("{name}.json"));
        let status = Command::new(exe).args(["fixtures", "--name", name, "--emit"]).arg(&path).status().unwrap();
        ok &= status.success();
        let text = std::fs::read_to_string(&path).unwrap();
        ok &= hopfcoh::workspace::Workspace::parse(&text).unwrap().to_json() == text;
        ok &= Command::new(exe).arg("validate").arg(&path).output().unwrap().status.code() == Some(0);
        files.push(path);
    }
    let run = || {
        Command::new(exe).args(["check", "--suite", "all", "--json", "--workspace"]).args(&files).output().unwrap()
    };
    let (first, second) = (run(), run());
    ok &= first.status.code() == Some(0) && second.status.code() == Some(0);
    ok &= !first.stdout.is_empty() && first.stdout == second.stdout;
    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    ok &= parsed["summary"]["fail"] == 0;
    report(10, "CLI contract", ok, &format!("7 fixtures emitted and re-parsed; check exit {:?}; reports identical: {}", first.status.code(), first.stdout == second.stdout));
}
