//! The acceptance suite: one runner per criterion, each deterministic for a
//! given configuration.

use std::collections::{HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axioms::{check_axioms, check_observations, duality_selftest, Scope};
use crate::catalogue;
use crate::concrete::{GroupModel, Morphism, RingModel};
use crate::elemset::ElemSet;
use crate::engine::{
    decide, induces_homomorphism, normal_to, projection_diamond, relation_oracle, Dir, Pyramid, Zigzag,
};
use crate::error::FormError;
use crate::form::{Dual, FormModel};
use crate::group::GroupTable;
use crate::ring::RingTable;
use crate::theorems::{
    butterfly, diamond_iso, double_quotient, image_theorem, modular_counterexample, restricted_modular_law,
    TheoremReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Upper bound on group orders for the exhaustive criteria; each
    /// criterion uses the smaller of this and its own bound.
    pub max_order: usize,
    pub seed: u64,
    pub random_zigzags: usize,
    pub butterfly_samples: usize,
    pub image_homs: HomCoverage,
    pub fail_fast: bool,
}

/// Which homomorphisms the image theorem is run over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomCoverage {
    All,
    /// Every homomorphism between groups of order at most 8, and one per
    /// orbit of `Aut(codomain)` acting by composition above that.
    OrbitRepresentatives,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_order: 16,
            seed: 1,
            random_zigzags: 5000,
            butterfly_samples: 1000,
            image_homs: HomCoverage::All,
            fail_fast: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub failures: u64,
    /// Summary lines, then the first few failures.
    pub details: Vec<String>,
}

const KEPT: usize = 5;

struct Tally {
    cases: u64,
    failures: u64,
    details: Vec<String>,
    failed: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: 0, details: Vec::new(), failed: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.failed.len() < KEPT {
                self.failed.push(what());
            }
        }
    }

    fn report(&mut self, r: &TheoremReport, what: impl FnOnce() -> String) {
        self.record(r.passed(), || {
            let why = r.failure().map(|c| format!("{} {}", c.name, c.detail)).unwrap_or_default();
            format!("{}: {why}", what())
        });
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    fn finish(self, id: u8, name: &'static str) -> CriterionResult {
        let mut details = self.details;
        details.extend(self.failed.into_iter().map(|f| format!("failure: {f}")));
        CriterionResult {
            id,
            name,
            passed: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            details,
        }
    }
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "axiom certification"),
    (2, "duality involution"),
    (3, "induction agrees with the relation oracle"),
    (4, "opposite zigzags induce inverse isomorphisms"),
    (5, "projection diamond identity"),
    (6, "pyramid path independence and vertical laws"),
    (7, "diamond isomorphism theorem"),
    (8, "double-quotient and image theorems"),
    (9, "butterfly lemma"),
    (10, "restricted modular law"),
    (11, "ring-model partiality"),
];

pub fn criterion_name(id: u8) -> &'static str {
    CRITERIA.iter().find(|(i, _)| *i == id).map(|(_, n)| *n).unwrap_or("unknown")
}

pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionResult {
    let name = criterion_name(id);
    let tally = match id {
        1 => axiom_certification(),
        2 => duality(),
        3 => oracle_agreement(cfg),
        4 => inverse_pairs(cfg),
        5 => lemma_identity(cfg),
        6 => path_independence(cfg),
        7 => diamond_theorem(cfg),
        8 => quotient_theorems(cfg),
        9 => butterflies(cfg),
        10 => modular_law(cfg),
        11 => ring_partiality(),
        _ => {
            let mut t = Tally::new();
            t.record(false, || format!("no criterion {id}"));
            t
        }
    };
    tally.finish(id, name)
}

/// Runs the criteria in order, stopping at the first failure when
/// `fail_fast` is set.
pub fn run_suite(cfg: &SuiteConfig, mut on_result: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    for (id, _) in CRITERIA {
        let r = run_criterion(id, cfg);
        on_result(&r);
        let stop = cfg.fail_fast && !r.passed;
        out.push(r);
        if stop {
            break;
        }
    }
    out
}

type GObj = Arc<GroupTable>;
type GMor = Morphism<GroupTable>;
type GZig = Zigzag<GObj, GMor>;

/// Catalogue groups up to `max_order`, interned and named.
pub fn named_groups(m: &GroupModel, max_order: usize) -> Vec<(String, GObj)> {
    catalogue::small_groups(max_order)
        .into_iter()
        .map(|(n, g)| {
            let x = m.object(g);
            (n.clone(), m.name(&x, &n))
        })
        .collect()
}

fn group_scope(m: &GroupModel) -> Scope<GObj, GMor> {
    let objects = catalogue::axiom_groups()
        .into_iter()
        .map(|(n, g)| {
            let x = m.object(g);
            m.name(&x, &n)
        })
        .collect();
    Scope::new("grp", objects)
}

fn ring_scope(m: &RingModel) -> Scope<Arc<RingTable>, Morphism<RingTable>> {
    let objects = catalogue::axiom_rings()
        .into_iter()
        .map(|(n, r)| {
            let x = m.object(r);
            m.name(&x, &n)
        })
        .collect();
    Scope::new("ring", objects)
}

fn axiom_certification() -> Tally {
    let mut t = Tally::new();
    let gm = GroupModel::new();
    let gs = group_scope(&gm);
    let rm = RingModel::new();
    let rs = ring_scope(&rm);
    let reports = [
        check_axioms(&gm, &gs, &[1, 2, 3, 4, 5]),
        check_observations(&gm, &gs),
        check_axioms(&rm, &rs, &[1, 2, 3, 4, 5]),
        check_observations(&rm, &rs),
    ];
    for (r, kind) in reports.iter().zip(["axioms", "observations", "axioms", "observations"]) {
        let instances: u64 = r.sections.iter().map(|s| s.instances()).sum();
        t.note(format!(
            "{} {kind}: {} objects, {} morphisms, {instances} instances, {} violations",
            r.scope,
            r.objects,
            r.morphisms,
            r.failures()
        ));
        for s in &r.sections {
            for l in &s.laws {
                t.cases += l.instances - l.failures;
                for w in &l.witnesses {
                    t.record(false, || format!("{} {}: {}: {w}", r.scope, s.name, l.law));
                }
                let unrecorded = l.failures - l.witnesses.len() as u64;
                t.failures += unrecorded;
                t.cases += unrecorded;
            }
        }
    }
    t
}

fn duality() -> Tally {
    let mut t = Tally::new();
    let gm = GroupModel::new();
    let rm = RingModel::new();
    let reports =
        [("grp", duality_selftest(&gm, &group_scope(&gm))), ("ring", duality_selftest(&rm, &ring_scope(&rm)))];
    for (name, d) in reports {
        for ((axiom, p), (_, q)) in d.primal.verdicts().iter().zip(d.dual.verdicts()) {
            t.record(*p == q, || format!("{name} {axiom}: primal {p}, dual {q}"));
        }
        t.record(d.involution.passed(), || format!("{name} involution: {}", d.involution.witnesses.join("; ")));
        t.note(format!(
            "{name}: primal {}, dual {}, {} double-dual queries agree",
            if d.primal.passed() { "OK" } else { "FAIL" },
            if d.dual.passed() { "OK" } else { "FAIL" },
            d.involution.instances - d.involution.failures
        ));
    }
    t
}

/// Homomorphism lists between the catalogue groups of order at most 8.
struct HomTable {
    objects: Vec<GObj>,
    homs: Vec<Vec<Vec<GMor>>>,
}

impl HomTable {
    fn new(m: &GroupModel, max_order: usize) -> Self {
        let objects: Vec<GObj> = named_groups(m, max_order).into_iter().map(|(_, x)| x).collect();
        let homs = objects.iter().map(|x| objects.iter().map(|y| m.morphisms(x, y)).collect()).collect();
        HomTable { objects, homs }
    }

    fn zigzag(&self, m: &GroupModel, rng: &mut ChaCha8Rng, max_len: usize) -> GZig {
        let k = self.objects.len();
        let len = rng.gen_range(1..=max_len);
        let mut cur = rng.gen_range(0..k);
        let mut steps = Vec::with_capacity(len);
        for _ in 0..len {
            let next = rng.gen_range(0..k);
            let dir = if rng.gen_bool(0.5) { Dir::Fwd } else { Dir::Bwd };
            let list = match dir {
                Dir::Fwd => &self.homs[cur][next],
                Dir::Bwd => &self.homs[next][cur],
            };
            steps.push((list[rng.gen_range(0..list.len())].clone(), dir));
            cur = next;
        }
        Zigzag::new(m, steps).expect("steps chain by construction")
    }
}

/// The seeded zigzags shared by the induction criteria.
fn random_zigzags(m: &GroupModel, cfg: &SuiteConfig) -> Vec<GZig> {
    let table = HomTable::new(m, cfg.max_order.min(8));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.random_zigzags).map(|_| table.zigzag(m, &mut rng, 5)).collect()
}

fn describe(m: &GroupModel, z: &GZig) -> String {
    crate::theorems::render_zigzag(m, z)
}

fn oracle_agreement(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let mut induced = 0;
    for z in random_zigzags(&m, cfg) {
        let criterion = induces_homomorphism(&m, &z);
        let oracle = match relation_oracle(&m, &z) {
            Ok(o) => o,
            Err(e) => {
                t.record(false, || format!("{}: oracle error {e}", describe(&m, &z)));
                continue;
            }
        };
        if criterion != oracle.is_total_function() {
            t.record(false, || {
                format!("{}: criterion says {criterion}, oracle relation {}", describe(&m, &z), oracle.relation)
            });
            continue;
        }
        match decide(&m, &z) {
            Ok(d) => match (&d.morphism, criterion) {
                (Some(h), true) => {
                    induced += 1;
                    let same = oracle.relation.as_map().as_deref() == Some(h.map()) && oracle.is_hom == Some(true);
                    t.record(same, || format!("{}: induced {h}, oracle {}", describe(&m, &z), oracle.relation));
                }
                (None, false) => t.record(true, String::new),
                _ => t.record(false, || format!("{}: decision disagrees with criterion", describe(&m, &z))),
            },
            Err(e) => t.record(false, || format!("{}: {e}", describe(&m, &z))),
        }
    }
    t.note(format!("{} zigzags, {induced} induce a homomorphism, {} do not", t.cases, t.cases - induced));
    t
}

fn inverse_pairs(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let zs = random_zigzags(&m, cfg);
    for z in &zs {
        let op = z.opposite();
        if !(induces_homomorphism(&m, z) && induces_homomorphism(&m, &op)) {
            continue;
        }
        let pair = decide(&m, z).and_then(|a| Ok((a.morphism, decide(&m, &op)?.morphism)));
        match pair {
            Ok((Some(h), Some(g))) => {
                let inverse = m.compose(&g, &h).ok() == Some(m.identity(z.first()))
                    && m.compose(&h, &g).ok() == Some(m.identity(z.last()));
                t.record(inverse, || format!("{}: {h} and {g} are not inverse", describe(&m, z)));
            }
            Ok(_) => t.record(false, || format!("{}: criterion holds but nothing induced", describe(&m, z))),
            Err(e) => t.record(false, || format!("{}: {e}", describe(&m, z))),
        }
    }
    t.note(format!("{} of {} zigzags induce in both directions", t.cases, zs.len()));
    t
}

fn lemma_identity(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let groups = named_groups(&m, cfg.max_order.min(12));
    for (name, g) in &groups {
        let normals: Vec<_> = m.subobjects(g).into_iter().filter(|s| m.is_normal(s)).collect();
        for a in &normals {
            for b in &normals {
                let n = m.projection(a).expect("normal");
                let r = m.projection(b).expect("normal");
                let (_, x, y) = match projection_diamond(&m, &n, &r) {
                    Ok(d) => d,
                    Err(e) => {
                        t.record(false, || format!("{name} N={a} R={b}: {e}"));
                        continue;
                    }
                };
                for s in m.subobjects(&m.cod(&n)) {
                    let lhs = m.inverse_image(&y, &m.direct_image(&x, &s).expect("in domain")).expect("in codomain");
                    let rhs = m.direct_image(&r, &m.inverse_image(&n, &s).expect("in codomain")).expect("in domain");
                    t.record(lhs == rhs, || format!("{name} N={a} R={b} S={s}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    t.note(format!("{} groups, {} subobject instances", groups.len(), t.cases));
    t
}

fn path_independence(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let mut pyramids = 0;
    for z in random_zigzags(&m, cfg).into_iter().filter(|z| z.len() <= 3) {
        let pyr = match Pyramid::build(&m, &z) {
            Ok(p) => p,
            Err(e) => {
                t.record(false, || format!("{}: {e}", describe(&m, &z)));
                continue;
            }
        };
        pyramids += 1;
        check_pyramid(&m, &pyr, &mut t, &z);
    }
    t.note(format!("{pyramids} pyramids, {} chase comparisons", t.cases));
    t
}

fn check_pyramid(m: &GroupModel, pyr: &Pyramid<GObj, GMor>, t: &mut Tally, z: &GZig) {
    let keys = pyr.node_keys();
    for &a in &keys {
        for &b in &keys {
            if a == b {
                continue;
            }
            let paths = pyr.horizontal_paths(a, b);
            if paths.len() > 1 {
                for s in m.subobjects(pyr.node(a)) {
                    let first = pyr.chase_path(m, &paths[0], &s).expect("chase");
                    for p in &paths[1..] {
                        let other = pyr.chase_path(m, p, &s).expect("chase");
                        t.record(other == first, || format!("{}: forward {a:?}->{b:?} from {s}", describe(m, z)));
                    }
                }
                for s in m.subobjects(pyr.node(b)) {
                    let rev = |p: &Vec<(usize, usize)>| p.iter().rev().copied().collect::<Vec<_>>();
                    let first = pyr.chase_path(m, &rev(&paths[0]), &s).expect("chase");
                    for p in &paths[1..] {
                        let other = pyr.chase_path(m, &rev(p), &s).expect("chase");
                        t.record(other == first, || format!("{}: backward {b:?}->{a:?} from {s}", describe(m, z)));
                    }
                }
            }
            for p in pyr.vertical_paths(a, b) {
                let (low, high) = (pyr.node(a), pyr.node(b));
                let up_bottom = pyr.chase_path(m, &p, &m.bottom(low)).expect("chase");
                let up_top = pyr.chase_path(m, &p, &m.top(low)).expect("chase");
                t.record(m.is_bottom(&up_bottom) && m.is_top(&up_top), || {
                    format!("{}: upward {a:?}->{b:?} gives {up_bottom}, {up_top}", describe(m, z))
                });
                let down: Vec<_> = p.iter().rev().copied().collect();
                for s in m.subobjects(high) {
                    let there = pyr.chase_path(m, &down, &s).expect("chase");
                    let back = pyr.chase_path(m, &p, &there).expect("chase");
                    t.record(back == s, || format!("{}: down and up {b:?}->{a:?} from {s}", describe(m, z)));
                }
            }
        }
    }
}

fn diamond_theorem(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let groups = named_groups(&m, cfg.max_order.min(16));
    let mut dual_runs = 0;
    for (name, g) in &groups {
        let subs = m.subobjects(g);
        for a in &subs {
            for b in &subs {
                if m.is_conormal(b) && normal_to(&m, a, &m.join(a, b)) {
                    match diamond_iso(&m, a, b) {
                        Ok(r) => t.report(&r, || format!("{name} A={a} B={b}")),
                        Err(e) => t.record(false, || format!("{name} A={a} B={b}: {e}")),
                    }
                }
                let d = Dual(&m);
                if d.is_conormal(b) && normal_to(&d, a, &d.join(a, b)) {
                    dual_runs += 1;
                    match diamond_iso(&d, a, b) {
                        Ok(r) => t.report(&r, || format!("dual {name} A={a} B={b}")),
                        Err(e) => t.record(false, || format!("dual {name} A={a} B={b}: {e}")),
                    }
                }
            }
        }
    }
    t.note(format!("{} groups, {} primal and {dual_runs} dual instances", groups.len(), t.cases - dual_runs));
    t
}

/// A generating set of `Aut(h)`, chosen greedily in enumeration order.
fn automorphism_generators(h: &GroupTable) -> Vec<Vec<usize>> {
    let n = h.order();
    let autos: Vec<Vec<usize>> =
        h.homs(h).into_iter().filter(|f| f.iter().copied().collect::<ElemSet>().len() == n).collect();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut reached: HashSet<Vec<usize>> = HashSet::from([(0..n).collect()]);
    for a in autos {
        if reached.contains(&a) {
            continue;
        }
        gens.push(a);
        let mut frontier: Vec<Vec<usize>> = reached.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y: Vec<usize> = x.iter().map(|&v| g[v]).collect();
                if reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

/// One homomorphism `g → h` per orbit of `Aut(h)` acting by composition,
/// the first of each orbit in enumeration order.
fn homs_up_to_automorphism(g: &GroupTable, h: &GroupTable, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let homs = g.homs(h);
    let index: HashMap<&[usize], usize> = homs.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut seen = vec![false; homs.len()];
    let mut reps = Vec::new();
    for i in 0..homs.len() {
        if seen[i] {
            continue;
        }
        reps.push(homs[i].clone());
        seen[i] = true;
        let mut stack = vec![i];
        while let Some(j) = stack.pop() {
            for a in gens {
                let moved: Vec<usize> = homs[j].iter().map(|&v| a[v]).collect();
                let k = index[moved.as_slice()];
                if !seen[k] {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
    }
    reps
}

const ORBITS_ABOVE: usize = 8;

fn quotient_theorems(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let groups = named_groups(&m, cfg.max_order.min(16));

    let mut dq = 0u64;
    let mut dual_dq = 0u64;
    for (name, g) in &groups {
        for n in m.subobjects(g).into_iter().filter(|s| m.is_normal(s)) {
            let q = m.cod(&m.projection(&n).expect("normal"));
            for s in m.subobjects(&q) {
                dq += 1;
                match double_quotient(&m, &n, &s) {
                    Ok(r) => t.report(&r, || format!("{name} N={n} S={s}")),
                    Err(e) => t.record(false, || format!("{name} N={n} S={s}: {e}")),
                }
            }
        }
        let d = Dual(&m);
        for n in d.subobjects(g).into_iter().filter(|s| d.is_normal(s)) {
            let q = d.cod(&d.projection(&n).expect("normal in the dual"));
            for s in d.subobjects(&q) {
                dual_dq += 1;
                match double_quotient(&d, &n, &s) {
                    Ok(r) => t.report(&r, || format!("dual {name} N={n} S={s}")),
                    Err(e) => t.record(false, || format!("dual {name} N={n} S={s}: {e}")),
                }
            }
        }
    }

    let mut homs_used = 0u64;
    let mut image_cases = 0u64;
    let mut gens_cache: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    for (gname, g) in &groups {
        for (hi, (hname, h)) in groups.iter().enumerate() {
            let all = cfg.image_homs == HomCoverage::All || g.order().max(h.order()) <= ORBITS_ABOVE;
            let maps = if all {
                g.homs(h)
            } else {
                let gens = gens_cache.entry(hi).or_insert_with(|| automorphism_generators(h));
                homs_up_to_automorphism(g, h, gens)
            };
            for map in maps {
                homs_used += 1;
                let f = m.hom(g, h, map).expect("enumerated homomorphism");
                let k = m.kernel(&f);
                let above: Vec<_> = m.subobjects(g).into_iter().filter(|w| m.leq(&k, w)).collect();
                for w in &above {
                    for x in above.iter().filter(|x| m.leq(w, x)) {
                        image_cases += 1;
                        match image_theorem(&m, &f, w, x) {
                            Ok(r) => t.report(&r, || format!("{gname}->{hname} {f} W={w} X={x}")),
                            Err(e) => t.record(false, || format!("{gname}->{hname} {f} W={w} X={x}: {e}")),
                        }
                    }
                }
            }
        }
    }

    let rm = RingModel::new();
    let mut ring_cases = 0u64;
    for (name, r) in
        [("Z6", RingTable::cyclic(6)), ("Z2xZ2", RingTable::product(&RingTable::cyclic(2), &RingTable::cyclic(2)))]
    {
        let x = rm.object(r);
        let x = rm.name(&x, name);
        for n in rm.subobjects(&x).into_iter().filter(|s| rm.is_normal(s)) {
            let q = rm.cod(&rm.projection(&n).expect("ideal"));
            for s in rm.subobjects(&q).into_iter().filter(|s| rm.is_normal(s)) {
                ring_cases += 1;
                match double_quotient(&rm, &n, &s) {
                    Ok(r) => t.report(&r, || format!("ring {name} N={n} S={s}")),
                    Err(e) => t.record(false, || format!("ring {name} N={n} S={s}: {e}")),
                }
            }
        }
        for (_, y) in catalogue::axiom_rings() {
            let y = rm.object(y);
            for f in rm.morphisms(&x, &y) {
                let k = rm.kernel(&f);
                let top = rm.top(&x);
                for w in rm.subobjects(&x).into_iter().filter(|w| rm.is_normal(w) && rm.leq(&k, w)) {
                    ring_cases += 1;
                    match image_theorem(&rm, &f, &w, &top) {
                        Ok(r) => t.report(&r, || format!("ring {name} {f} W={w}")),
                        Err(e) => t.record(false, || format!("ring {name} {f} W={w}: {e}")),
                    }
                }
            }
        }
    }
    t.note(format!("double quotient: {dq} primal and {dual_dq} dual instances over {} groups", groups.len()));
    let coverage = match cfg.image_homs {
        HomCoverage::All => "all homomorphisms".to_string(),
        HomCoverage::OrbitRepresentatives => {
            format!("all up to order {ORBITS_ABOVE}, one per codomain-automorphism orbit above")
        }
    };
    t.note(format!("image theorem: {image_cases} instances over {homs_used} homomorphisms ({coverage})"));
    t.note(format!("ring spot checks: {ring_cases} instances on Z6 and Z2xZ2"));
    t
}

/// Pairs `(S′, S)` with `S′ ◁ S`.
fn normal_pairs<M: FormModel>(m: &M, g: &M::Obj) -> Vec<(M::Sub, M::Sub)> {
    let subs = m.subobjects(g);
    let mut out = Vec::new();
    for s in &subs {
        for s1 in &subs {
            if normal_to(m, s1, s) {
                out.push((s1.clone(), s.clone()));
            }
        }
    }
    out
}

fn butterflies(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let groups = named_groups(&m, cfg.max_order.min(12));
    for (name, g) in &groups {
        let pairs = normal_pairs(&m, g);
        for (s1, s) in &pairs {
            for (t1, tt) in &pairs {
                match butterfly(&m, s1, s, t1, tt) {
                    Ok(r) => t.report(&r, || format!("{name} S'={s1} S={s} T'={t1} T={tt}")),
                    Err(e) => t.record(false, || format!("{name} S'={s1} S={s} T'={t1} T={tt}: {e}")),
                }
            }
        }
    }
    let exhaustive = t.cases;
    let s4 = m.object(GroupTable::symmetric(4));
    let s4 = m.name(&s4, "S4");
    let pairs = normal_pairs(&m, &s4);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.butterfly_samples {
        let (s1, s) = &pairs[rng.gen_range(0..pairs.len())];
        let (t1, tt) = &pairs[rng.gen_range(0..pairs.len())];
        match butterfly(&m, s1, s, t1, tt) {
            Ok(r) => t.report(&r, || format!("S4 S'={s1} S={s} T'={t1} T={tt}")),
            Err(e) => t.record(false, || format!("S4 S'={s1} S={s} T'={t1} T={tt}: {e}")),
        }
    }
    t.note(format!(
        "{exhaustive} exhaustive instances over {} groups, {} seeded instances in S4 ({} valid pairs)",
        groups.len(),
        cfg.butterfly_samples,
        pairs.len()
    ));
    t
}

/// Subgroup join by closure of the union, independent of the model.
fn brute_join(g: &GroupTable, a: &ElemSet, b: &ElemSet) -> ElemSet {
    g.closure(&a.union(b))
}

fn modular_law(cfg: &SuiteConfig) -> Tally {
    let mut t = Tally::new();
    let m = GroupModel::new();
    let groups = named_groups(&m, cfg.max_order.min(16));
    for (name, g) in &groups {
        let subs = m.subobjects(g);
        for x in &subs {
            for z in subs.iter().filter(|z| m.leq(x, z)) {
                for y in &subs {
                    let applies = (m.is_normal(y) && m.is_conormal(z)) || (m.is_conormal(y) && m.is_normal(x));
                    if !applies {
                        continue;
                    }
                    match restricted_modular_law(&m, x, y, z) {
                        Ok(r) => t.report(&r, || format!("{name} X={x} Y={y} Z={z}")),
                        Err(e) => t.record(false, || format!("{name} X={x} Y={y} Z={z}: {e}")),
                    }
                }
            }
        }
    }
    let law_cases = t.cases;
    t.note(format!("{law_cases} hypothesis-satisfying triples over {} groups", groups.len()));

    let found = groups.iter().find_map(|(name, g)| modular_counterexample(&m, g).map(|w| (name.clone(), g.clone(), w)));
    match found {
        Some((name, g, (x, y, z))) => {
            let (xs, ys, zs) = (x.elems(), y.elems(), z.elems());
            let lhs = brute_join(&g, &xs, &ys.intersection(&zs));
            let rhs = brute_join(&g, &xs, &ys).intersection(&zs);
            let independent =
                g.is_subgroup(&xs) && g.is_subgroup(&ys) && g.is_subgroup(&zs) && xs.is_subset(&zs) && lhs != rhs;
            t.record(independent, || format!("counterexample in {name} not confirmed"));
            t.note(format!("unrestricted law fails in {name}: X={x} Y={y} Z={z}, X∨(Y∧Z)={lhs} but (X∨Y)∧Z={rhs}"));
        }
        None => t.record(false, || "no counterexample to the unrestricted law in scope".to_string()),
    }
    t
}

fn ring_partiality() -> Tally {
    let mut t = Tally::new();
    let m = RingModel::new();
    let z6 = m.object(RingTable::cyclic(6));
    let z6 = m.name(&z6, "Z6");
    let subs = m.subobjects(&z6);
    let normal = subs.iter().filter(|s| m.is_normal(s)).count();
    let conormal = subs.iter().filter(|s| m.is_conormal(s)).count();
    t.record(normal == 4, || format!("Z6 has {normal} ideals"));
    t.record(conormal == 1, || format!("Z6 has {conormal} unital subrings"));
    t.note(format!("Z6: {} additive subgroups, {normal} normal, {conormal} conormal", subs.len()));
    for s in subs.iter().filter(|s| !m.is_conormal(s)) {
        let got = m.embedding(s);
        let expected = format!("not-conormal: {s} is not conormal in Z6");
        t.record(matches!(&got, Err(e) if e.to_string() == expected), || format!("embedding of {s}: {got:?}"));
    }

    // Engine operations over ring zigzags must report missing embeddings
    // and projections as errors, never panic.
    let rings: Vec<_> = catalogue::small_rings()
        .into_iter()
        .map(|(n, r)| {
            let x = m.object(r);
            m.name(&x, &n)
        })
        .collect();
    let homs: Vec<Vec<Vec<_>>> = rings.iter().map(|x| rings.iter().map(|y| m.morphisms(x, y)).collect()).collect();
    let mut zigzags = 0;
    let mut panics = 0;
    let mut induced = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    while zigzags < 500 {
        let len = rng.gen_range(1..=4);
        let mut cur = rng.gen_range(0..rings.len());
        let mut steps = Vec::new();
        for _ in 0..len {
            let next = rng.gen_range(0..rings.len());
            let dir = if rng.gen_bool(0.5) { Dir::Fwd } else { Dir::Bwd };
            let list = match dir {
                Dir::Fwd => &homs[cur][next],
                Dir::Bwd => &homs[next][cur],
            };
            if list.is_empty() {
                break;
            }
            steps.push((list[rng.gen_range(0..list.len())].clone(), dir));
            cur = next;
        }
        if steps.len() != len {
            continue;
        }
        zigzags += 1;
        let z = Zigzag::new(&m, steps).expect("chained");
        let outcome = catch_unwind(AssertUnwindSafe(|| {
            let d = decide(&m, &z);
            let o = relation_oracle(&m, &z);
            (d.map(|d| d.morphism.is_some()), o.map(|o| o.is_total_function()))
        }));
        match outcome {
            Ok((Ok(ind), Ok(func))) => {
                if ind {
                    induced += 1;
                }
                t.record(ind == func, || {
                    format!("{}: induction {ind}, oracle {func}", crate::theorems::render_zigzag(&m, &z))
                });
            }
            Ok((Err(e), _)) | Ok((_, Err(e))) => {
                let expected = matches!(e, FormError::ModelCapability(_));
                t.record(expected, || format!("{}: {e}", crate::theorems::render_zigzag(&m, &z)));
            }
            Err(_) => {
                panics += 1;
                t.record(false, || format!("{}: panicked", crate::theorems::render_zigzag(&m, &z)));
            }
        }
    }
    t.note(format!("{zigzags} ring zigzags, {induced} induce, {panics} panics"));
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automorphism_orbits_partition_the_homs() {
        let k4 = GroupTable::klein();
        let gens = automorphism_generators(&k4);
        let reps = homs_up_to_automorphism(&GroupTable::cyclic(2), &k4, &gens);
        // the trivial map and one injection: Aut(K4) permutes the involutions
        assert_eq!(reps, vec![vec![0, 0], vec![0, 1]]);
        let z4 = GroupTable::cyclic(4);
        let reps = homs_up_to_automorphism(&z4, &z4, &automorphism_generators(&z4));
        assert_eq!(reps.len(), 3);
    }
}
