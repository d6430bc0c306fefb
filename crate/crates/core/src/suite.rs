//! The theorem-verification suite: every check compares two independently computed sides
//! (dimensions, or subspaces of one ambient space) on the objects of a workspace.
//! Checks whose hypotheses fail on a fixture report `skipped: hypothesis` with the reason.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::cohomology::{
    a_ext, a_ext_h, a_ext_injective, b_ext, cobar_resolution, derived_coinvariants, ext_h, ext_rational,
};
use crate::comodule::{curry, Comodule};
use crate::error::{Error, Result};
use crate::hopf::{solve_antipode, HopfAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::modules::{ext_over_algebra, injective_resolution, AlgebraModule};
use crate::relative::{
    a_hom_rational, adjunction, b_hom_from_a, induce, nu_and_bullet, tensor_over_a, CoinvariantAlgebra, ComoduleAlgebra,
    RelHopfModule, SmashAlgebra,
};
use crate::report::{Entry, Report};
use crate::sampling::Sampler;
use crate::workspace::Workspace;

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Highest cohomological degree compared.
    pub pmax: usize,
    /// Resource cap passed to every guarded computation.
    pub cap: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { pmax: 3, cap: crate::cohomology::DEFAULT_CAP, seed: 2024 }
    }
}

pub struct Check {
    pub name: &'static str,
    pub group: &'static str,
    pub summary: &'static str,
    run: fn(&Ctx, &'static str) -> Result<Vec<Entry>>,
}

const NOT_COSEMISIMPLE: &str = "H is not cosemisimple";
const NOT_COMMUTATIVE: &str = "A or H is not commutative";
const ALPHA_NOTE: &str = "(α) assumed via fixture check";

pub const GROUPS: [&str; 7] =
    ["axioms", "resolution", "comodule-cohomology", "relative", "relative-ext", "coinduction", "commutative"];

pub static CHECKS: &[Check] = &[
    Check { name: "hopf-axioms", group: "axioms", summary: "every Hopf algebra passes its axioms", run: hopf_axioms },
    Check { name: "antipode-solve", group: "axioms", summary: "solving for S reproduces the stored antipode", run: antipode_solve },
    Check { name: "dual-hopf", group: "axioms", summary: "H* is a Hopf algebra and H** = H", run: dual_hopf },
    Check { name: "integral-space", group: "axioms", summary: "integrals form a line; a normalized one satisfies f phi = f(1) phi", run: integral_space },
    Check { name: "comodule-axioms", group: "axioms", summary: "every comodule is coassociative and counital", run: comodule_axioms },
    Check { name: "cobar-square-zero", group: "resolution", summary: "phi_{q+1} phi_q = 0 for q <= 4", run: cobar_square_zero },
    Check { name: "cobar-homotopy", group: "resolution", summary: "phi_{q-1} psi_q + psi_{q+1} phi_q = id for q <= 4", run: cobar_homotopy },
    Check { name: "cobar-colinear", group: "resolution", summary: "each phi_q is colinear", run: cobar_colinear },
    Check { name: "free-acyclic", group: "comodule-cohomology", summary: "R^p of a free comodule vanishes for p >= 1", run: free_acyclic },
    Check { name: "hom-coinvariants", group: "comodule-cohomology", summary: "HOM(M, N)^coH = Hom^H(M, N) as subspaces", run: hom_coinvariants },
    Check { name: "hom-currying", group: "comodule-cohomology", summary: "Hom^H(N (x) M, P) = Hom^H(M, HOM(N, P)) by currying", run: hom_currying },
    Check { name: "integral-splitting", group: "comodule-cohomology", summary: "M = M^coH (+) M_coH through the integral projector", run: integral_splitting },
    Check { name: "isotypic-completeness", group: "comodule-cohomology", summary: "isotypic components of the simples add up to N", run: isotypic_completeness },
    Check { name: "cosemisimple-collapse", group: "comodule-cohomology", summary: "R^p and Ext^{H,p} vanish for p >= 1", run: cosemisimple_collapse },
    Check { name: "coinvariants-dual-oracle", group: "comodule-cohomology", summary: "R^p(M) = Ext^p over H* of (k, M)", run: coinvariants_dual_oracle },
    Check { name: "ext-dual-oracle", group: "comodule-cohomology", summary: "Ext^{H,p}(M, N) = Ext^p over H* of (M, N)", run: ext_dual_oracle },
    Check { name: "ext-degree-zero", group: "comodule-cohomology", summary: "Ext^{H,0}(M, N) = Hom^H(M, N)", run: ext_degree_zero },
    Check { name: "tensor-hom-coinvariants", group: "comodule-cohomology", summary: "R^p(M* (x) N) = Ext^{H,p}(M, N)", run: tensor_hom_coinvariants },
    Check { name: "rational-ext-vanishing", group: "comodule-cohomology", summary: "EXT^q(M, N) = 0 for q >= 1", run: rational_ext_vanishing },
    Check { name: "rational-ext-degree-zero", group: "comodule-cohomology", summary: "EXT^0(M, N) = HOM(M, N) as comodules", run: rational_ext_degree_zero },
    Check { name: "comodule-algebra-axioms", group: "relative", summary: "every comodule algebra passes its axioms", run: comodule_algebra_axioms },
    Check { name: "relative-module-axioms", group: "relative", summary: "relative Hopf modules and B-modules pass their axioms", run: relative_module_axioms },
    Check { name: "coinvariant-subalgebra", group: "relative", summary: "B = A^coH is a unital subalgebra", run: coinvariant_subalgebra },
    Check { name: "relative-hom-coinvariants", group: "relative", summary: "_A HOM(M, N)^coH = _A Hom^H(M, N) as subspaces", run: relative_hom_coinvariants },
    Check { name: "relative-tensor-hom", group: "relative", summary: "_A Hom^H(N (x) V, P) = Hom^H(V, _A HOM(N, P)) by currying", run: relative_tensor_hom },
    Check { name: "induction-adjunction", group: "relative", summary: "_A Hom^H(A (x)_B M, N) = _B Hom(M, N^coH)", run: induction_adjunction },
    Check { name: "smash-algebra-axioms", group: "relative", summary: "A # H* is associative and unital", run: smash_algebra_axioms },
    Check { name: "smash-round-trip", group: "relative", summary: "relative module -> A # H*-module -> relative module is the identity", run: smash_round_trip },
    Check { name: "smash-hom-dims", group: "relative", summary: "_A Hom^H(M, N) and A # H*-linear maps have equal dimension", run: smash_hom_dims },
    Check { name: "smash-degree-zero", group: "relative", summary: "_A Ext^{H,0}(M, N) = _A Hom^H(M, N)", run: smash_degree_zero },
    Check { name: "coinvariants-as-relative-ext", group: "relative-ext", summary: "R^p(N) = _A Ext^{H,p}(A, N)", run: coinvariants_as_relative_ext },
    Check { name: "relative-ext-projective-side", group: "relative-ext", summary: "_A EXT^p(M, N) = _A Ext^p(M, N)", run: relative_ext_projective_side },
    Check { name: "relative-ext-injective-side", group: "relative-ext", summary: "_A EXT^p(M, N) = H^p(_A Hom(M, E^*))", run: relative_ext_injective_side },
    Check { name: "rational-relative-ext-coinvariants", group: "relative-ext", summary: "_A EXT^q(M, N)^coH = _A Ext^{H,q}(M, N)", run: rational_relative_ext_coinvariants },
    Check { name: "relative-ext-coinvariants", group: "relative-ext", summary: "_A Ext^q(M, N)^coH = _A Ext^{H,q}(M, N)", run: relative_ext_coinvariants },
    Check { name: "b-ext-coinvariants", group: "relative-ext", summary: "_B Ext^i(M, N)^coH = _B Ext^i(M, N^coH)", run: b_ext_coinvariants },
    Check { name: "induced-ext", group: "relative-ext", summary: "_A Ext^{H,p}(A (x)_B M, N) = _B Ext^p(M, N^coH)", run: induced_ext },
    Check { name: "coinduced-hom-adjunction", group: "coinduction", summary: "_A Hom^H(M, _B HOM(A, N)) = _B Hom(M^coH, N)", run: coinduced_hom_adjunction },
    Check { name: "coinduced-evaluation", group: "coinduction", summary: "f -> f(1) is a B-isomorphism _B HOM(A, N)^coH -> N", run: coinduced_evaluation },
    Check { name: "coinduced-subobjects", group: "coinduction", summary: "nonzero subobjects of _B HOM(A, N) have coinvariants", run: coinduced_subobjects },
    Check { name: "coinduced-essential", group: "coinduction", summary: "subobjects M of _B HOM(A, N) are essential over A M^coH", run: coinduced_essential },
    Check { name: "coinduced-bullet", group: "coinduction", summary: "bullet vanishes on subobjects of _B HOM(A, N)", run: coinduced_bullet },
    Check { name: "bullet-kernel", group: "coinduction", summary: "bullet M = ker nu_M", run: bullet_kernel },
    Check { name: "bullet-quotient", group: "coinduction", summary: "bullet (M / bullet M) = 0", run: bullet_quotient },
    Check { name: "bullet-restriction", group: "coinduction", summary: "bullet N meets a subobject M in bullet M", run: bullet_restriction },
    Check { name: "injective-coinduced", group: "coinduction", summary: "injective E with bullet E = 0 is _B HOM(A, E^coH), E^coH injective", run: injective_coinduced },
    Check { name: "isotypic-coinduced", group: "coinduction", summary: "_B HOM(A, M)_V = _B HOM(A_{V*}, M)", run: isotypic_coinduced },
    Check { name: "flat-coinvariants-injective", group: "coinduction", summary: "A projective over B: injectives have injective coinvariants", run: flat_coinvariants_injective },
    Check { name: "commutative-hom-module", group: "commutative", summary: "_A HOM(M, N) is a relative Hopf module", run: commutative_hom_module },
    Check { name: "tensor-over-a-adjunction", group: "commutative", summary: "_A Hom^H(M (x)_A N, P) = _A Hom^H(M, _A HOM(N, P))", run: tensor_over_a_adjunction },
];

/// Checks named by `selector`: `all`, a group name, or a check name.
pub fn select(selector: &str) -> Result<Vec<&'static Check>> {
    if selector == "all" {
        return Ok(CHECKS.iter().collect());
    }
    let picked: Vec<&Check> = CHECKS.iter().filter(|c| c.name == selector || c.group == selector).collect();
    if picked.is_empty() {
        return Err(Error::UnknownName(format!("suite \"{selector}\"")));
    }
    Ok(picked)
}

/// Runs the selected checks on one workspace.
pub fn run(ws: &Workspace, fixture: &str, selector: &str, opts: &SuiteOptions) -> Result<Vec<Entry>> {
    let ctx = Ctx::new(ws, fixture, opts);
    let valid = ws.validate().is_ok();
    let mut entries = Vec::new();
    for check in select(selector)? {
        // Nothing beyond the axioms is meaningful on an object that fails them.
        if !valid && check.group != "axioms" {
            continue;
        }
        entries.extend((check.run)(&ctx, check.name)?);
    }
    Ok(entries)
}

/// Runs the selected checks on several workspaces in parallel and merges the sorted report.
pub fn run_many(workspaces: &[(String, Workspace)], selector: &str, opts: &SuiteOptions) -> Result<Report> {
    select(selector)?;
    let results: Vec<Result<Vec<Entry>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = workspaces
            .iter()
            .map(|(name, ws)| scope.spawn(move || run(ws, name, selector, opts)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut entries = Vec::new();
    for r in results {
        entries.extend(r?);
    }
    Ok(Report::new(entries))
}

struct Ctx<'a> {
    ws: &'a Workspace,
    fixture: &'a str,
    opts: SuiteOptions,
    ext_cache: RefCell<HashMap<(String, String), Vec<usize>>>,
    derived_cache: RefCell<HashMap<String, Vec<usize>>>,
}

type Named<'a, T> = (&'a str, &'a T);

struct AlgebraCtx<'a> {
    name: &'a str,
    base: &'a Arc<ComoduleAlgebra>,
    b: &'a CoinvariantAlgebra,
    rel: Vec<Named<'a, RelHopfModule>>,
    bmods: Vec<Named<'a, AlgebraModule>>,
}

impl<'a> Ctx<'a> {
    fn new(ws: &'a Workspace, fixture: &'a str, opts: &SuiteOptions) -> Self {
        Ctx {
            ws,
            fixture,
            opts: *opts,
            ext_cache: RefCell::new(HashMap::new()),
            derived_cache: RefCell::new(HashMap::new()),
        }
    }

    fn label(&self, names: &[&str]) -> String {
        format!("{}:{}", self.fixture, names.join(","))
    }

    fn hopfs(&self) -> Vec<Named<'a, Arc<HopfAlgebra>>> {
        self.ws.hopf.iter().map(|(n, h)| (n.as_str(), h)).collect()
    }

    fn comodules(&self, hopf: &str) -> Vec<Named<'a, Comodule>> {
        self.ws.comodules_over(hopf)
    }

    fn pairs(&self, hopf: &str) -> Vec<(Named<'a, Comodule>, Named<'a, Comodule>)> {
        let cs = self.comodules(hopf);
        cs.iter().flat_map(|&m| cs.iter().map(move |&n| (m, n))).collect()
    }

    fn algebras(&self) -> Vec<AlgebraCtx<'a>> {
        self.ws
            .comodule_algebras
            .iter()
            .map(|(name, a)| AlgebraCtx {
                name: name.as_str(),
                base: &a.algebra,
                b: &a.coinvariants,
                rel: self.ws.rel_modules_over(name),
                bmods: self.ws.b_modules_over(name),
            })
            .collect()
    }

    fn sampler(&self, salt: &str) -> Sampler {
        let mut seed = self.opts.seed;
        for b in self.fixture.bytes().chain(salt.bytes()) {
            seed = seed.wrapping_mul(1_000_003).wrapping_add(b as u64);
        }
        Sampler::new(seed)
    }

    fn ext(&self, hopf: &str, m: Named<Comodule>, n: Named<Comodule>) -> Result<Vec<usize>> {
        let key = (format!("{hopf}/{}", m.0), format!("{hopf}/{}", n.0));
        if let Some(v) = self.ext_cache.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = ext_h(m.1, n.1, self.opts.pmax, self.opts.cap)?;
        self.ext_cache.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    fn derived(&self, key: &str, m: &Comodule) -> Result<Vec<usize>> {
        if let Some(v) = self.derived_cache.borrow().get(key) {
            return Ok(v.clone());
        }
        let v = derived_coinvariants(m, self.opts.pmax, self.opts.cap)?;
        self.derived_cache.borrow_mut().insert(key.to_string(), v.clone());
        Ok(v)
    }
}

fn graded(check: &str, fixture: &str, lhs: &[usize], rhs: &[usize]) -> Vec<Entry> {
    lhs.iter().zip(rhs).enumerate().map(|(p, (&l, &r))| Entry::dims(check, fixture, Some(p), l, r)).collect()
}

/// Degrees `1..` of `dims` compared with zero.
fn vanishing(check: &str, fixture: &str, dims: &[usize]) -> Vec<Entry> {
    dims.iter().enumerate().skip(1).map(|(p, &d)| Entry::dims(check, fixture, Some(p), d, 0)).collect()
}

fn is_commutative_setting(base: &ComoduleAlgebra) -> bool {
    base.is_commutative() && base.hopf().is_commutative()
}

fn subspace_of(ambient: &Subspace, inner: &Subspace) -> Subspace {
    inner.image_under(ambient.basis())
}

// ---- axioms ----

fn hopf_axioms(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    Ok(ctx.hopfs().into_iter().map(|(n, h)| Entry::property(check, &ctx.label(&[n]), None, h.dim(), h.validate().passed())).collect())
}

fn antipode_solve(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (n, h) in ctx.hopfs() {
        let agrees = solve_antipode(h.algebra(), h.comult(), h.counit()).is_ok_and(|s| s == *h.antipode());
        out.push(Entry::property(check, &ctx.label(&[n]), None, h.dim(), agrees));
    }
    Ok(out)
}

fn dual_hopf(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (n, h) in ctx.hopfs() {
        let d = h.dual();
        out.push(Entry::property(check, &ctx.label(&[n]), None, h.dim(), d.validate().passed() && d.dual() == **h));
    }
    Ok(out)
}

fn integral_space(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (n, h) in ctx.hopfs() {
        let data = h.integrals();
        let mut ok = data.space.dim() == 1 && data.cosemisimple == data.normalized.is_some();
        if let Some(phi) = &data.normalized {
            let mut s = ctx.sampler(check);
            for _ in 0..20 {
                let f = s.vector(h.field(), h.dim());
                let f_one = h.unit().iter().zip(&f).fold(h.field().zero(), |mut acc, (u, x)| {
                    acc.add_product(u, x);
                    acc
                });
                let scaled: Vec<_> = phi.iter().map(|p| p * &f_one).collect();
                ok &= h.convolve(&f, phi) == scaled;
            }
        }
        let note = if data.cosemisimple { "cosemisimple" } else { "not cosemisimple" };
        out.push(Entry::property(check, &ctx.label(&[n]), None, data.space.dim(), ok).with_note(note));
    }
    Ok(out)
}

fn comodule_axioms(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        for (n, m) in ctx.comodules(hn) {
            out.push(Entry::property(check, &ctx.label(&[n]), None, m.dim(), m.validate().passed()));
        }
    }
    Ok(out)
}

// ---- resolution ----

const COBAR_DEPTH: usize = 4;

fn cobar_check(ctx: &Ctx, check: &'static str, test: fn(&crate::cohomology::CobarResolution) -> bool) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        for (n, m) in ctx.comodules(hn) {
            let c = cobar_resolution(m, COBAR_DEPTH, ctx.opts.cap)?;
            out.push(Entry::property(check, &ctx.label(&[n]), None, c.dim(COBAR_DEPTH as isize), test(&c)));
        }
    }
    Ok(out)
}

fn cobar_square_zero(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cobar_check(ctx, check, |c| c.squares_vanish())
}

fn cobar_homotopy(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cobar_check(ctx, check, |c| c.homotopy_holds())
}

fn cobar_colinear(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cobar_check(ctx, check, |c| c.differentials_colinear(2))
}

// ---- comodule cohomology ----

fn free_acyclic(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, h) in ctx.hopfs() {
        let free = Comodule::free(h, 1);
        let r = derived_coinvariants(&free, ctx.opts.pmax, ctx.opts.cap)?;
        let label = ctx.label(&[&format!("{hn}_free")]);
        out.push(Entry::dims(check, &label, Some(0), r[0], 1));
        out.extend(vanishing(check, &label, &r));
    }
    Ok(out)
}

fn hom_coinvariants(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, h) in ctx.hopfs() {
        let mut pairs: Vec<(String, Comodule, Comodule)> =
            ctx.pairs(hn).into_iter().map(|(m, n)| (ctx.label(&[m.0, n.0]), m.1.clone(), n.1.clone())).collect();
        let mut s = ctx.sampler(check);
        for i in 0..3 {
            let max = if h.dim() > 2 { 2 } else { 3 };
            pairs.push((ctx.label(&[&format!("random{i}")]), s.comodule(h, max), s.comodule(h, max)));
        }
        for (label, m, n) in pairs {
            let lhs = m.hom(&n)?.coinvariants();
            let rhs = m.colinear_maps(&n)?;
            out.push(Entry::property(check, &label, None, rhs.dim(), lhs == rhs));
        }
    }
    Ok(out)
}

fn hom_currying(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        let cs = ctx.comodules(hn);
        for &(mn, m) in &cs {
            for &(nn, n) in &cs {
                for &(pn, p) in &cs {
                    let data = curry(m, n, p)?;
                    let ok = data.is_bijection() && data.source.dim() == data.target.dim();
                    out.push(Entry::property(check, &ctx.label(&[mn, nn, pn]), None, data.source.dim(), ok));
                }
            }
        }
    }
    Ok(out)
}

fn integral_splitting(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, h) in ctx.hopfs() {
        for (n, m) in ctx.comodules(hn) {
            if !h.is_cosemisimple() {
                out.push(Entry::skipped(check, &ctx.label(&[n]), NOT_COSEMISIMPLE));
                continue;
            }
            let d = m.integral_projector()?;
            out.push(Entry::property(check, &ctx.label(&[n]), None, m.dim(), d.verify(m)));
        }
    }
    Ok(out)
}

/// Split simple comodules of the workspace over `hopf`, one per isomorphism class.
fn simples<'a>(ctx: &Ctx<'a>, hopf: &str) -> Result<Vec<Named<'a, Comodule>>> {
    let mut out: Vec<Named<Comodule>> = Vec::new();
    for (n, c) in ctx.comodules(hopf) {
        if c.dim() == 0 || !c.is_simple() || c.colinear_maps(c)?.dim() != 1 {
            continue;
        }
        let mut fresh = true;
        for (_, d) in &out {
            if d.dim() == c.dim() && !c.colinear_maps(d)?.is_zero() {
                fresh = false;
            }
        }
        if fresh {
            out.push((n, c));
        }
    }
    Ok(out)
}

fn isotypic_completeness(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, h) in ctx.hopfs() {
        let simple = simples(ctx, hn)?;
        for (n, m) in ctx.comodules(hn) {
            if !h.is_cosemisimple() {
                out.push(Entry::skipped(check, &ctx.label(&[n]), NOT_COSEMISIMPLE));
                continue;
            }
            let mut total = Subspace::zero(m.field(), m.dim());
            let mut sum = 0;
            for (_, v) in &simple {
                let iso = m.isotypic_component(v)?;
                sum += iso.component.dim();
                total = total.sum(&iso.component);
            }
            let mut e = Entry::dims(check, &ctx.label(&[n]), None, sum, m.dim());
            if total.dim() != sum {
                e.status = crate::report::Status::Fail;
                e.note = Some("components are not independent".into());
            }
            out.push(e);
        }
    }
    Ok(out)
}

fn cosemisimple_collapse(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, h) in ctx.hopfs() {
        if !h.is_cosemisimple() {
            out.push(Entry::skipped(check, &ctx.label(&[hn]), NOT_COSEMISIMPLE));
            continue;
        }
        for (n, m) in ctx.comodules(hn) {
            out.extend(vanishing(check, &ctx.label(&[n]), &ctx.derived(n, m)?));
        }
        for (m, n) in ctx.pairs(hn) {
            out.extend(vanishing(check, &ctx.label(&[m.0, n.0]), &ctx.ext(hn, m, n)?));
        }
    }
    Ok(out)
}

fn coinvariants_dual_oracle(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, h) in ctx.hopfs() {
        let k = Comodule::trivial(h, 1).as_dual_module();
        for (n, m) in ctx.comodules(hn) {
            let lhs = ctx.derived(n, m)?;
            let rhs = ext_over_algebra(&k, &m.as_dual_module(), ctx.opts.pmax)?;
            out.extend(graded(check, &ctx.label(&[n]), &lhs, &rhs));
        }
    }
    Ok(out)
}

fn ext_dual_oracle(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        for (m, n) in ctx.pairs(hn) {
            let lhs = ctx.ext(hn, m, n)?;
            let rhs = ext_over_algebra(&m.1.as_dual_module(), &n.1.as_dual_module(), ctx.opts.pmax)?;
            out.extend(graded(check, &ctx.label(&[m.0, n.0]), &lhs, &rhs));
        }
    }
    Ok(out)
}

fn ext_degree_zero(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        for (m, n) in ctx.pairs(hn) {
            let lhs = ctx.ext(hn, m, n)?[0];
            out.push(Entry::dims(check, &ctx.label(&[m.0, n.0]), Some(0), lhs, m.1.colinear_maps(n.1)?.dim()));
        }
    }
    Ok(out)
}

fn tensor_hom_coinvariants(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        for (m, n) in ctx.pairs(hn) {
            let lhs = derived_coinvariants(&m.1.dual().tensor(n.1)?, ctx.opts.pmax, ctx.opts.cap)?;
            out.extend(graded(check, &ctx.label(&[m.0, n.0]), &lhs, &ctx.ext(hn, m, n)?));
        }
    }
    Ok(out)
}

fn rational_ext_vanishing(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        for (m, n) in ctx.pairs(hn) {
            let e = ext_rational(m.1, n.1, ctx.opts.pmax, ctx.opts.cap)?;
            out.extend(vanishing(check, &ctx.label(&[m.0, n.0]), &e.dims));
        }
    }
    Ok(out)
}

fn rational_ext_degree_zero(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (hn, _) in ctx.hopfs() {
        for (m, n) in ctx.pairs(hn) {
            let e = ext_rational(m.1, n.1, 0, ctx.opts.cap)?;
            let mut entry = Entry::dims(check, &ctx.label(&[m.0, n.0]), Some(0), e.dims[0], m.1.dim() * n.1.dim());
            if !e.degree_zero_is_hom() {
                entry.status = crate::report::Status::Fail;
                entry.note = Some("comparison with HOM(M, N) is not a colinear bijection".into());
            }
            out.push(entry);
        }
    }
    Ok(out)
}

// ---- relative objects ----

fn comodule_algebra_axioms(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    Ok(ctx
        .algebras()
        .iter()
        .map(|a| Entry::property(check, &ctx.label(&[a.name]), None, a.base.dim(), a.base.validate().passed()))
        .collect())
}

fn relative_module_axioms(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        for (n, m) in &a.rel {
            out.push(Entry::property(check, &ctx.label(&[n]), None, m.dim(), m.validate().passed()));
        }
        for (n, m) in &a.bmods {
            out.push(Entry::property(check, &ctx.label(&[n]), None, m.dim(), m.validate().passed()));
        }
    }
    Ok(out)
}

fn coinvariant_subalgebra(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        let alg = a.base.algebra();
        let sub = &a.b.subspace;
        let mut ok = *sub == a.base.comodule().coinvariants() && sub.contains(alg.unit()) && a.b.algebra.validate().passed();
        for i in 0..sub.dim() {
            for j in 0..sub.dim() {
                ok &= sub.contains(&alg.product(&a.b.embed(i), &a.b.embed(j)));
            }
        }
        out.push(Entry::property(check, &ctx.label(&[a.name]), None, a.b.dim(), ok));
    }
    Ok(out)
}

fn relative_hom_coinvariants(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        for (mn, m) in &a.rel {
            for (nn, n) in &a.rel {
                let hom = a_hom_rational(m, n)?;
                let lhs = subspace_of(&hom.carrier, &hom.comodule.coinvariants());
                let rhs = m.morphisms(n)?;
                out.push(Entry::property(check, &ctx.label(&[mn, nn]), None, rhs.dim(), lhs == rhs));
            }
        }
    }
    Ok(out)
}

fn relative_tensor_hom(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        let hopf = &ctx.ws.comodule_algebras[a.name].hopf;
        for (vn, v) in ctx.comodules(hopf) {
            for (nn, n) in &a.rel {
                for (pn, p) in &a.rel {
                    let source = n.tensor_comodule(v)?.morphisms(p)?;
                    let hom = a_hom_rational(n, p)?;
                    let inner = v.colinear_maps(&hom.comodule)?;
                    // maps V -> carrier coordinates, pushed into Hom(V, Hom(N, P))
                    let push = hom.carrier.basis().kronecker(&Matrix::identity(v.field(), v.dim()))?;
                    let target = inner.image_under(&push);
                    let phi = curry(v, n.comodule(), p.comodule())?;
                    let ok = source.image_under(&phi.forward) == target;
                    let e = Entry::dims(check, &ctx.label(&[vn, nn, pn]), None, source.dim(), target.dim());
                    out.push(if ok { e } else { Entry::property(check, &e.fixture, None, source.dim(), false) });
                }
            }
        }
    }
    Ok(out)
}

fn induction_adjunction(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        for (mn, m) in &a.bmods {
            let induced = induce(a.base, a.b, m)?;
            for (nn, n) in &a.rel {
                let data = adjunction(&induced, a.b, m, n)?;
                let ok = data.is_bijection() && data.source.dim() == data.target.dim();
                out.push(Entry::property(check, &ctx.label(&[mn, nn]), None, data.source.dim(), ok));
            }
        }
    }
    Ok(out)
}

fn smash_algebra_axioms(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    Ok(ctx
        .algebras()
        .iter()
        .map(|a| {
            let s = SmashAlgebra::new(a.base);
            let ok = s.algebra.validate().passed() && s.algebra.dim() == a.base.dim() * a.base.hopf().dim();
            Entry::property(check, &ctx.label(&[a.name]), None, s.algebra.dim(), ok)
        })
        .collect())
}

fn smash_round_trip(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        let s = SmashAlgebra::new(a.base);
        for (n, m) in &a.rel {
            let module = s.to_module(m)?;
            let ok = module.validate().passed() && s.from_module(&module)? == **m;
            out.push(Entry::property(check, &ctx.label(&[n]), None, m.dim(), ok));
        }
    }
    Ok(out)
}

fn smash_hom_dims(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        let s = SmashAlgebra::new(a.base);
        for (mn, m) in &a.rel {
            for (nn, n) in &a.rel {
                let lhs = m.morphisms(n)?.dim();
                let rhs = s.to_module(m)?.hom(&s.to_module(n)?)?.dim();
                out.push(Entry::dims(check, &ctx.label(&[mn, nn]), None, lhs, rhs));
            }
        }
    }
    Ok(out)
}

fn smash_degree_zero(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        for (mn, m) in &a.rel {
            for (nn, n) in &a.rel {
                let lhs = a_ext_h(m, n, 0)?[0];
                out.push(Entry::dims(check, &ctx.label(&[mn, nn]), Some(0), lhs, m.morphisms(n)?.dim()));
            }
        }
    }
    Ok(out)
}

// ---- relative Ext ----

fn coinvariants_as_relative_ext(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        let regular = RelHopfModule::regular(a.base);
        for (n, m) in &a.rel {
            let lhs = derived_coinvariants(m.comodule(), ctx.opts.pmax, ctx.opts.cap)?;
            let rhs = a_ext_h(&regular, m, ctx.opts.pmax)?;
            out.extend(graded(check, &ctx.label(&[n]), &lhs, &rhs));
        }
    }
    Ok(out)
}

fn relative_pairs(ctx: &Ctx, check: &'static str, gate: Option<fn(&AlgebraCtx) -> Option<&'static str>>, f: fn(&Ctx, &RelHopfModule, &RelHopfModule) -> Result<(Vec<usize>, Vec<usize>)>) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        if let Some(reason) = gate.and_then(|g| g(&a)) {
            out.push(Entry::skipped(check, &ctx.label(&[a.name]), reason));
            continue;
        }
        for (mn, m) in &a.rel {
            for (nn, n) in &a.rel {
                let (lhs, rhs) = f(ctx, m, n)?;
                out.extend(graded(check, &ctx.label(&[mn, nn]), &lhs, &rhs));
            }
        }
    }
    Ok(out)
}

fn cosemisimple_gate(a: &AlgebraCtx) -> Option<&'static str> {
    if a.base.hopf().is_cosemisimple() {
        None
    } else {
        Some(NOT_COSEMISIMPLE)
    }
}

fn relative_ext_projective_side(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    relative_pairs(ctx, check, None, |ctx, m, n| {
        let lhs = a_ext(m, n, ctx.opts.pmax)?.dims();
        let rhs = ext_over_algebra(m.module(), n.module(), ctx.opts.pmax)?;
        Ok((lhs, rhs))
    })
}

fn relative_ext_injective_side(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    relative_pairs(ctx, check, None, |ctx, m, n| {
        let lhs = a_ext(m, n, ctx.opts.pmax)?;
        let rhs = a_ext_injective(m, n, ctx.opts.pmax)?;
        Ok((lhs.dims(), rhs.dims()))
    })
}

fn rational_relative_ext_coinvariants(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    relative_pairs(ctx, check, Some(cosemisimple_gate), |ctx, m, n| {
        let lhs = a_ext_injective(m, n, ctx.opts.pmax)?.coinvariant_dims();
        Ok((lhs, a_ext_h(m, n, ctx.opts.pmax)?))
    })
}

fn relative_ext_coinvariants(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    relative_pairs(ctx, check, Some(cosemisimple_gate), |ctx, m, n| {
        let lhs = a_ext(m, n, ctx.opts.pmax)?.coinvariant_dims();
        Ok((lhs, a_ext_h(m, n, ctx.opts.pmax)?))
    })
}

fn b_ext_coinvariants(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        if let Some(reason) = cosemisimple_gate(&a) {
            out.push(Entry::skipped(check, &ctx.label(&[a.name]), reason));
            continue;
        }
        for (mn, m) in &a.bmods {
            for (nn, n) in &a.rel {
                let lhs = b_ext(a.b, m, n, ctx.opts.pmax)?.coinvariant_dims();
                let rhs = ext_over_algebra(m, &a.b.coinvariant_module(n), ctx.opts.pmax)?;
                out.extend(graded(check, &ctx.label(&[mn, nn]), &lhs, &rhs));
            }
        }
    }
    Ok(out)
}

/// Whether the cofree cogenerator `A* (x) H` has vanishing bullet.
fn alpha_holds(a: &AlgebraCtx) -> Result<bool> {
    let cogenerator = RelHopfModule::cofree(a.base, &AlgebraModule::coregular(a.base.algebra()))?;
    Ok(nu_and_bullet(&cogenerator, a.b)?.bullet.is_zero())
}

fn induced_ext(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        if let Some(reason) = cosemisimple_gate(&a) {
            out.push(Entry::skipped(check, &ctx.label(&[a.name]), reason));
            continue;
        }
        if !alpha_holds(&a)? {
            out.push(Entry::skipped(check, &ctx.label(&[a.name]), "(α) fails: the cofree cogenerator has nonzero bullet"));
            continue;
        }
        for (mn, m) in &a.bmods {
            let induced = induce(a.base, a.b, m)?.module;
            for (nn, n) in &a.rel {
                let lhs = a_ext_h(&induced, n, ctx.opts.pmax)?;
                let rhs = ext_over_algebra(m, &a.b.coinvariant_module(n), ctx.opts.pmax)?;
                let label = ctx.label(&[mn, nn]);
                out.extend(graded(check, &label, &lhs, &rhs).into_iter().map(|e| e.with_note(ALPHA_NOTE)));
            }
        }
    }
    Ok(out)
}

// ---- coinduction and bullet ----

/// Runs `f` on each algebra of a cosemisimple fixture, skipping otherwise.
fn cosemisimple_algebras(ctx: &Ctx, check: &'static str, mut f: impl FnMut(&AlgebraCtx, &mut Vec<Entry>) -> Result<()>) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        match cosemisimple_gate(&a) {
            Some(reason) => out.push(Entry::skipped(check, &ctx.label(&[a.name]), reason)),
            None => f(&a, &mut out)?,
        }
    }
    Ok(out)
}

fn coinduced_hom_adjunction(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cosemisimple_algebras(ctx, check, |a, out| {
        for (nn, n) in &a.bmods {
            let t = b_hom_from_a(a.base, a.b, n)?;
            for (mn, m) in &a.rel {
                let lhs = m.morphisms(&t.module)?.dim();
                let rhs = a.b.coinvariant_module(m).hom(n)?.dim();
                out.push(Entry::dims(check, &ctx.label(&[mn, nn]), None, lhs, rhs));
            }
        }
        Ok(())
    })
}

fn coinduced_evaluation(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cosemisimple_algebras(ctx, check, |a, out| {
        for (nn, n) in &a.bmods {
            let t = b_hom_from_a(a.base, a.b, n)?;
            let inv = t.module.coinvariants();
            let eval = t.evaluation.mul(inv.basis());
            let mut ok = eval.rank() == inv.dim() && inv.dim() == n.dim();
            for i in 0..a.b.dim() {
                let act = t.module.module().act_matrix(&a.b.embed(i));
                ok &= t.evaluation.mul(&act.mul(inv.basis())) == n.basis_act(i).mul(&eval);
            }
            out.push(Entry::dims(check, &ctx.label(&[nn]), None, inv.dim(), n.dim()).with_note(if ok { "B-linear bijection" } else { "not a B-linear bijection" }));
            if !ok {
                out.push(Entry::property(check, &ctx.label(&[nn]), None, inv.dim(), false));
            }
        }
        Ok(())
    })
}

/// Subobjects of `m` generated by each basis vector and by a few random vectors.
fn probe_subobjects(m: &RelHopfModule, s: &mut Sampler) -> Vec<Subspace> {
    let field = m.field();
    let mut probes: Vec<Vec<_>> = (0..m.dim()).map(|i| crate::hopf::unit_vector(field, m.dim(), i)).collect();
    for _ in 0..3 {
        probes.push(s.vector(field, m.dim()));
    }
    let mut out: Vec<Subspace> = Vec::new();
    for v in probes {
        let sub = m.generated_subobject(&[v]);
        if !sub.is_zero() && !out.contains(&sub) {
            out.push(sub);
        }
    }
    out
}

fn coinduced_subobjects(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut s = ctx.sampler(check);
    cosemisimple_algebras(ctx, check, |a, out| {
        for (nn, n) in &a.bmods {
            let t = b_hom_from_a(a.base, a.b, n)?.module;
            let inv = t.coinvariants();
            let subs = probe_subobjects(&t, &mut s);
            let ok = subs.iter().all(|sub| !sub.intersection(&inv).is_zero());
            out.push(Entry::property(check, &ctx.label(&[nn]), None, subs.len(), ok));
        }
        Ok(())
    })
}

fn coinduced_essential(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut s = ctx.sampler(check);
    cosemisimple_algebras(ctx, check, |a, out| {
        for (nn, n) in &a.bmods {
            let t = b_hom_from_a(a.base, a.b, n)?.module;
            let inv = t.coinvariants();
            let mut tested = 0;
            let mut ok = true;
            for sub in probe_subobjects(&t, &mut s) {
                let generated = t.generated_subobject(&sub.intersection(&inv).basis_vectors());
                let m = t.restrict(&sub)?;
                for inner in probe_subobjects(&m, &mut s) {
                    tested += 1;
                    ok &= !subspace_of(&sub, &inner).intersection(&generated).is_zero();
                }
            }
            out.push(Entry::property(check, &ctx.label(&[nn]), None, tested, ok));
        }
        Ok(())
    })
}

fn coinduced_bullet(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut s = ctx.sampler(check);
    cosemisimple_algebras(ctx, check, |a, out| {
        for (nn, n) in &a.bmods {
            let t = b_hom_from_a(a.base, a.b, n)?.module;
            let mut ok = nu_and_bullet(&t, a.b)?.bullet.is_zero();
            let subs = probe_subobjects(&t, &mut s);
            for sub in &subs {
                ok &= nu_and_bullet(&t.restrict(sub)?, a.b)?.bullet.is_zero();
            }
            out.push(Entry::property(check, &ctx.label(&[nn]), None, subs.len() + 1, ok));
        }
        Ok(())
    })
}

/// `{m : p_M(am) = 0 for all a}` straight from the definition.
fn bullet_by_definition(m: &RelHopfModule) -> Result<Subspace> {
    let p = m.comodule().integral_projector()?.projector;
    let blocks: Vec<Matrix> = (0..m.base().dim()).map(|i| p.mul(&m.module().basis_act(i))).collect();
    Ok(Matrix::vstack_all(m.field(), m.dim(), &blocks).kernel())
}

fn bullet_kernel(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cosemisimple_algebras(ctx, check, |a, out| {
        for (n, m) in &a.rel {
            let nu = nu_and_bullet(m, a.b)?;
            let direct = bullet_by_definition(m)?;
            out.push(Entry::property(check, &ctx.label(&[n]), None, direct.dim(), nu.bullet == direct));
        }
        Ok(())
    })
}

fn bullet_quotient(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cosemisimple_algebras(ctx, check, |a, out| {
        for (n, m) in &a.rel {
            let bullet = nu_and_bullet(m, a.b)?.bullet;
            let (q, _) = m.quotient(&bullet)?;
            let ok = nu_and_bullet(&q, a.b)?.bullet.is_zero();
            out.push(Entry::property(check, &ctx.label(&[n]), None, bullet.dim(), ok));
        }
        Ok(())
    })
}

fn bullet_restriction(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut s = ctx.sampler(check);
    cosemisimple_algebras(ctx, check, |a, out| {
        for (n, m) in &a.rel {
            let whole = nu_and_bullet(m, a.b)?.bullet;
            let subs = probe_subobjects(m, &mut s);
            let mut ok = true;
            for sub in &subs {
                let inner = nu_and_bullet(&m.restrict(sub)?, a.b)?.bullet;
                ok &= subspace_of(sub, &inner) == whole.intersection(sub);
            }
            out.push(Entry::property(check, &ctx.label(&[n]), None, subs.len(), ok));
        }
        Ok(())
    })
}

/// Injective relative Hopf modules: the first two terms of an injective resolution of each
/// relative module of the fixture, over the smash product.
fn injectives(a: &AlgebraCtx) -> Result<Vec<(String, RelHopfModule)>> {
    let smash = SmashAlgebra::new(a.base);
    let mut out = Vec::new();
    for (n, m) in &a.rel {
        let res = injective_resolution(&smash.to_module(m)?, 1);
        for (i, e) in res.modules.iter().enumerate() {
            if e.dim() > 0 {
                out.push((format!("E{i}({n})"), smash.from_module(e)?));
            }
        }
    }
    Ok(out)
}

fn injective_coinduced(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cosemisimple_algebras(ctx, check, |a, out| {
        for (name, e) in injectives(a)? {
            let nu = nu_and_bullet(&e, a.b)?;
            let label = ctx.label(&[&name]);
            if !nu.bullet.is_zero() {
                out.push(Entry::skipped(check, &label, "bullet E is nonzero"));
                continue;
            }
            let inv_injective = a.b.coinvariant_module(&e).is_injective();
            let iso = nu.nu.rank() == e.dim() && nu.target.module.dim() == e.dim() && e.is_morphism(&nu.nu, &nu.target.module);
            let mut entry = Entry::dims(check, &label, None, e.dim(), nu.target.module.dim());
            if !(inv_injective && iso) {
                entry.status = crate::report::Status::Fail;
                entry.note = Some(format!("coinvariants injective: {inv_injective}, nu an isomorphism: {iso}"));
            }
            out.push(entry);
        }
        Ok(())
    })
}

fn isotypic_coinduced(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    cosemisimple_algebras(ctx, check, |a, out| {
        let hopf = &ctx.ws.comodule_algebras[a.name].hopf;
        let simple = simples(ctx, hopf)?;
        if simple.is_empty() {
            out.push(Entry::skipped(check, &ctx.label(&[a.name]), "no split simple comodule in the fixture"));
        }
        let a_b = a.base.as_left_b_module(a.b);
        for (vn, v) in &simple {
            let piece = a.base.comodule().isotypic_component(&v.dual())?.component;
            let piece_module = a_b.restrict(&piece)?;
            let piece_comodule = a.base.comodule().restrict(&piece)?;
            for (nn, n) in &a.bmods {
                let whole = b_hom_from_a(a.base, a.b, n)?.module;
                let lhs = whole.comodule().isotypic_component(v)?.component.dim();
                let carrier = piece_module.hom(n)?;
                let small = piece_comodule.hom(&Comodule::trivial(a.base.hopf(), n.dim()))?.restrict(&carrier)?;
                let pure = small.isotypic_component(v)?.component.dim() == small.dim();
                let mut entry = Entry::dims(check, &ctx.label(&[vn, nn]), None, lhs, small.dim());
                if !pure {
                    entry.status = crate::report::Status::Fail;
                    entry.note = Some("_B HOM(A_{V*}, M) is not V-isotypic".into());
                }
                out.push(entry);
            }
        }
        Ok(())
    })
}

fn flat_coinvariants_injective(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        if !a.base.as_right_b_module(a.b).is_projective() {
            out.push(Entry::skipped(check, &ctx.label(&[a.name]), "A is not projective as a right B-module"));
            continue;
        }
        for (name, e) in injectives(&a)? {
            let inv = a.b.coinvariant_module(&e);
            out.push(Entry::property(check, &ctx.label(&[&name]), None, inv.dim(), inv.is_injective()));
        }
    }
    Ok(out)
}

// ---- commutative case ----

fn commutative_algebras(ctx: &Ctx, check: &'static str, mut f: impl FnMut(&AlgebraCtx, &mut Vec<Entry>) -> Result<()>) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for a in ctx.algebras() {
        if is_commutative_setting(a.base) {
            f(&a, &mut out)?;
        } else {
            out.push(Entry::skipped(check, &ctx.label(&[a.name]), NOT_COMMUTATIVE));
        }
    }
    Ok(out)
}

fn commutative_hom_module(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    commutative_algebras(ctx, check, |a, out| {
        for (mn, m) in &a.rel {
            for (nn, n) in &a.rel {
                let hom = a_hom_rational(m, n)?;
                let ok = hom.module.as_ref().is_some_and(|x| x.validate().passed());
                out.push(Entry::property(check, &ctx.label(&[mn, nn]), None, hom.carrier.dim(), ok));
            }
        }
        Ok(())
    })
}

fn tensor_over_a_adjunction(ctx: &Ctx, check: &'static str) -> Result<Vec<Entry>> {
    commutative_algebras(ctx, check, |a, out| {
        for (mn, m) in &a.rel {
            for (nn, n) in &a.rel {
                let tensor = tensor_over_a(m, n)?.module;
                for (pn, p) in &a.rel {
                    let lhs = tensor.morphisms(p)?.dim();
                    let inner = a_hom_rational(n, p)?.module.ok_or_else(|| Error::NotCommutative("A".into()))?;
                    let rhs = m.morphisms(&inner)?.dim();
                    out.push(Entry::dims(check, &ctx.label(&[mn, nn, pn]), None, lhs, rhs));
                }
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::report::Status;

    #[test]
    fn selectors() {
        assert_eq!(select("all").unwrap().len(), CHECKS.len());
        assert_eq!(select("hom-coinvariants").unwrap().len(), 1);
        assert!(select("coinduction").unwrap().len() > 3);
        assert!(matches!(select("nonsense"), Err(Error::UnknownName(_))));
        for g in GROUPS {
            assert!(!select(g).unwrap().is_empty(), "{g}");
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = CHECKS.iter().map(|c| c.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
    }

    #[test]
    fn group_algebra_fixture_passes() {
        let ws = fixtures::fixture_workspace("kc2_gf2").unwrap();
        let entries = run(&ws, "kc2_gf2", "all", &SuiteOptions::default()).unwrap();
        let failures: Vec<_> = entries.iter().filter(|e| e.status == Status::Fail).collect();
        assert!(failures.is_empty(), "{failures:?}");
        let ws = fixtures::fixture_workspace("dual_kc2_gf2").unwrap();
        let entries = run(&ws, "dual_kc2_gf2", "comodule-cohomology", &SuiteOptions::default()).unwrap();
        // (kC2)* over GF(2) is not cosemisimple
        assert!(entries.iter().any(|e| e.check == "cosemisimple-collapse" && matches!(e.status, Status::Skipped(_))));
        assert!(entries.iter().all(|e| e.status != Status::Fail));
    }

    #[test]
    fn broken_objects_only_get_the_axioms() {
        let good = fixtures::fixture_workspace("kc2_q").unwrap();
        let h = good.hopf_algebra("H").unwrap();
        let field = h.field();
        let antipode = Matrix::from_i64(field, &[&[2, 0], &[0, 1]]);
        let broken = HopfAlgebra::from_parts(h.algebra().clone(), h.comult().clone(), h.counit().to_vec(), Some(antipode)).unwrap();
        let mut ws = Workspace::new(field);
        ws.add_hopf("H", Arc::new(broken)).unwrap();
        let entries = run(&ws, "broken", "all", &SuiteOptions::default()).unwrap();
        assert!(entries.iter().all(|e| select("axioms").unwrap().iter().any(|c| c.name == e.check)));
        for failing in ["hopf-axioms", "antipode-solve"] {
            assert!(entries.iter().any(|e| e.check == failing && e.status == Status::Fail), "{failing}");
        }
    }
}
