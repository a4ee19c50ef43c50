//! Finite-scope certification of the axioms and their consequences, and the
//! duality self-test.
//!
//! Every quantifier of an axiom ranges over a [`Scope`]: a list of objects,
//! optionally closed under the quotient and subobject-carrier constructions,
//! together with the morphisms between them.

use std::fmt;
use std::sync::Arc;

use crate::error::{FormError, Result};
use crate::form::{Dual, FormModel};

/// Objects and morphisms that the axiom quantifiers range over.
#[derive(Debug, Clone)]
pub struct Scope<O, F> {
    pub name: String,
    pub objects: Vec<O>,
    /// An explicit morphism list (identities are always added); `None`
    /// enumerates every morphism between scope objects.
    pub morphisms: Option<Vec<F>>,
    /// Rounds of adding the domains of `ι_S` and codomains of `π_S` for all
    /// subobjects `S` of scope objects.
    pub closure_depth: usize,
}

impl<O: Clone + PartialEq, F: Clone + PartialEq> Scope<O, F> {
    /// All morphisms, closure depth 1.
    pub fn new(name: impl Into<String>, objects: Vec<O>) -> Self {
        Scope { name: name.into(), objects, morphisms: None, closure_depth: 1 }
    }

    pub fn with_morphisms(mut self, morphisms: Vec<F>) -> Self {
        self.morphisms = Some(morphisms);
        self
    }

    pub fn with_closure_depth(mut self, depth: usize) -> Self {
        self.closure_depth = depth;
        self
    }

    /// The closed object list and the morphisms between every ordered pair.
    pub fn expand<M: FormModel<Obj = O, Mor = F>>(&self, model: &M) -> Expanded<O, F> {
        let mut objects: Vec<O> = Vec::new();
        for x in &self.objects {
            if !objects.contains(x) {
                objects.push(x.clone());
            }
        }
        let mut frontier = objects.clone();
        for _ in 0..self.closure_depth {
            let mut next = Vec::new();
            for x in &frontier {
                for s in model.subobjects(x) {
                    let made = [
                        model.embedding(&s).ok().map(|i| model.dom(&i)),
                        model.projection(&s).ok().map(|p| model.cod(&p)),
                    ];
                    for y in made.into_iter().flatten() {
                        if !objects.contains(&y) {
                            objects.push(y.clone());
                            next.push(y);
                        }
                    }
                }
            }
            frontier = next;
        }
        let k = objects.len();
        let mut homs = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in 0..k {
                homs[i][j] = match &self.morphisms {
                    None => model.morphisms(&objects[i], &objects[j]),
                    Some(list) => {
                        let mut v: Vec<F> = if i == j { vec![model.identity(&objects[i])] } else { Vec::new() };
                        for f in list {
                            if model.dom(f) == objects[i] && model.cod(f) == objects[j] && !v.contains(f) {
                                v.push(f.clone());
                            }
                        }
                        v
                    }
                };
            }
        }
        Expanded { objects, homs }
    }
}

/// A scope after closure, with its morphism table.
#[derive(Debug, Clone)]
pub struct Expanded<O, F> {
    pub objects: Vec<O>,
    /// `homs[i][j]`: morphisms `objects[i] → objects[j]`.
    pub homs: Vec<Vec<Vec<F>>>,
}

impl<O, F> Expanded<O, F> {
    fn all(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.homs
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().flat_map(move |(j, fs)| fs.iter().map(move |f| (i, j, f))))
    }

    pub fn morphism_count(&self) -> usize {
        self.homs.iter().flatten().map(Vec::len).sum()
    }
}

/// Violations recorded per law are capped; the total is still counted.
const KEPT: usize = 5;

/// Outcome of one law over its instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub law: String,
    pub instances: u64,
    pub failures: u64,
    /// The first few failing instances.
    pub witnesses: Vec<String>,
}

impl LawResult {
    fn new(law: impl Into<String>) -> Self {
        LawResult { law: law.into(), instances: 0, failures: 0, witnesses: Vec::new() }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < KEPT {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// The laws checked for one axiom, or one observation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub laws: Vec<LawResult>,
}

impl Section {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed)
    }

    pub fn instances(&self) -> u64 {
        self.laws.iter().map(|l| l.instances).sum()
    }

    pub fn failures(&self) -> u64 {
        self.laws.iter().map(|l| l.failures).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub scope: String,
    pub objects: usize,
    pub morphisms: usize,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn failures(&self) -> u64 {
        self.sections.iter().map(Section::failures).sum()
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// `(section, passed)` pairs, the verdicts compared by the duality test.
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        self.sections.iter().map(|s| (s.name.clone(), s.passed())).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scope {}: {} objects, {} morphisms", self.scope, self.objects, self.morphisms)?;
        for s in &self.sections {
            if s.passed() {
                writeln!(f, "  {}: OK ({} instances)", s.name, s.instances())?;
                continue;
            }
            writeln!(f, "  {}: FAIL ({} of {} instances)", s.name, s.failures(), s.instances())?;
            for l in s.laws.iter().filter(|l| !l.passed()) {
                for w in &l.witnesses {
                    writeln!(f, "    {}: {w}", l.law)?;
                }
            }
        }
        Ok(())
    }
}

fn sub_witness<M: FormModel>(model: &M, s: &M::Sub) -> String {
    format!("({}, {s})", model.describe_obj(&model.parent(s)))
}

fn mor_witness<M: FormModel>(model: &M, f: &M::Mor) -> String {
    format!("{}: {} -> {}", model.describe_mor(f), model.describe_obj(&model.dom(f)), model.describe_obj(&model.cod(f)))
}

/// Runs the selected axioms (`1..=5`) over the scope.
pub fn check_axioms<M: FormModel>(model: &M, scope: &Scope<M::Obj, M::Mor>, which: &[u8]) -> Report {
    let ex = scope.expand(model);
    let mut sections = Vec::new();
    for &a in which {
        let section = match a {
            1 => axiom1(model, &ex),
            2 => axiom2(model, &ex),
            3 => axiom3(model, &ex),
            4 => axiom4(model, &ex),
            5 => axiom5(model, &ex),
            _ => continue,
        };
        sections.push(section);
    }
    Report { scope: scope.name.clone(), objects: ex.objects.len(), morphisms: ex.morphism_count(), sections }
}

/// Composition, the subobject partial order, the Galois pair and
/// functoriality of images.
fn axiom1<M: FormModel>(model: &M, ex: &Expanded<M::Obj, M::Mor>) -> Section {
    let mut ident = LawResult::new("identities");
    let mut assoc = LawResult::new("associativity");
    let mut order = LawResult::new("partial order");
    let mut galois = LawResult::new("Galois pair");
    let mut functor = LawResult::new("functoriality");
    let k = ex.objects.len();

    for (_, _, f) in ex.all() {
        let left = model.compose(&model.identity(&model.cod(f)), f);
        let right = model.compose(f, &model.identity(&model.dom(f)));
        ident.record(left.as_ref().ok() == Some(f) && right.as_ref().ok() == Some(f), || mor_witness(model, f));
    }
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for g in &ex.homs[b][c] {
                    let gfs: Vec<(&M::Mor, M::Mor)> =
                        ex.homs[a][b].iter().map(|f| (f, model.compose(g, f).expect("composable"))).collect();
                    for d in 0..k {
                        for h in &ex.homs[c][d] {
                            let hg = model.compose(h, g).expect("composable");
                            for (f, gf) in &gfs {
                                let lhs = model.compose(&hg, f);
                                let rhs = model.compose(h, gf);
                                assoc.record(lhs.is_ok() && lhs.ok() == rhs.ok(), || {
                                    format!(
                                        "{} then {} then {}",
                                        model.describe_mor(f),
                                        model.describe_mor(g),
                                        model.describe_mor(h)
                                    )
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    for x in &ex.objects {
        let subs = model.subobjects(x);
        for a in &subs {
            order.record(model.leq(a, a), || sub_witness(model, a));
            for b in &subs {
                if model.leq(a, b) && model.leq(b, a) {
                    order.record(a == b, || format!("{a} and {b} in {}", model.describe_obj(x)));
                }
                for c in &subs {
                    if model.leq(a, b) && model.leq(b, c) {
                        order.record(model.leq(a, c), || format!("{a} ⊆ {b} ⊆ {c} in {}", model.describe_obj(x)));
                    }
                }
            }
        }
    }
    for (i, j, f) in ex.all() {
        let dsubs = model.subobjects(&ex.objects[i]);
        let csubs = model.subobjects(&ex.objects[j]);
        let images: Vec<M::Sub> = dsubs.iter().map(|a| model.direct_image(f, a).expect("in domain")).collect();
        let preimages: Vec<M::Sub> = csubs.iter().map(|b| model.inverse_image(f, b).expect("in codomain")).collect();
        for (a, fa) in dsubs.iter().zip(&images) {
            for (b, fb) in csubs.iter().zip(&preimages) {
                galois.record(model.leq(fa, b) == model.leq(a, fb), || {
                    format!("{} with {a} and {b}", mor_witness(model, f))
                });
            }
        }
        let id_dom = model.identity(&ex.objects[i]);
        for a in &dsubs {
            functor.record(
                model.direct_image(&id_dom, a).ok().as_ref() == Some(a)
                    && model.inverse_image(&id_dom, a).ok().as_ref() == Some(a),
                || format!("identity images of {}", sub_witness(model, a)),
            );
        }
        for l in 0..k {
            for g in &ex.homs[j][l] {
                let gf = model.compose(g, f).expect("composable");
                for (a, fa) in dsubs.iter().zip(&images) {
                    functor.record(model.direct_image(&gf, a).ok() == model.direct_image(g, fa).ok(), || {
                        format!("direct image of {a} along {} then {}", model.describe_mor(f), model.describe_mor(g))
                    });
                }
                for c in model.subobjects(&ex.objects[l]) {
                    let step = model.inverse_image(g, &c).expect("in codomain");
                    functor.record(model.inverse_image(&gf, &c).ok() == model.inverse_image(f, &step).ok(), || {
                        format!("inverse image of {c} along {} then {}", model.describe_mor(f), model.describe_mor(g))
                    });
                }
            }
        }
    }
    Section { name: "axiom 1".into(), laws: vec![ident, assoc, order, galois, functor] }
}

/// Bounded lattices and the two image identities.
fn axiom2<M: FormModel>(model: &M, ex: &Expanded<M::Obj, M::Mor>) -> Section {
    let mut lattice = LawResult::new("bounded lattice");
    let mut direct = LawResult::new("f f⁻¹B = B ∧ Im f");
    let mut inverse = LawResult::new("f⁻¹ f A = A ∨ Ker f");
    for x in &ex.objects {
        let subs = model.subobjects(x);
        let (top, bottom) = (model.top(x), model.bottom(x));
        for a in &subs {
            lattice.record(model.leq(&bottom, a) && model.leq(a, &top), || sub_witness(model, a));
            for b in &subs {
                let m = model.meet(a, b);
                let j = model.join(a, b);
                let mut ok = model.leq(&m, a) && model.leq(&m, b) && model.leq(a, &j) && model.leq(b, &j);
                for c in &subs {
                    if model.leq(c, a) && model.leq(c, b) {
                        ok &= model.leq(c, &m);
                    }
                    if model.leq(a, c) && model.leq(b, c) {
                        ok &= model.leq(&j, c);
                    }
                }
                lattice.record(ok, || format!("{a} and {b} in {}", model.describe_obj(x)));
            }
        }
    }
    for (i, j, f) in ex.all() {
        let im = model.image(f);
        let ker = model.kernel(f);
        for b in model.subobjects(&ex.objects[j]) {
            let lhs = model.direct_image(f, &model.inverse_image(f, &b).expect("in codomain")).expect("in domain");
            direct.record(lhs == model.meet(&b, &im), || format!("{} with B = {b}", mor_witness(model, f)));
        }
        for a in model.subobjects(&ex.objects[i]) {
            let lhs = model.inverse_image(f, &model.direct_image(f, &a).expect("in domain")).expect("in codomain");
            inverse.record(lhs == model.join(&a, &ker), || format!("{} with A = {a}", mor_witness(model, f)));
        }
    }
    Section { name: "axiom 2".into(), laws: vec![lattice, direct, inverse] }
}

/// `ι_S` exists exactly for conormal `S` and `π_S` exactly for normal `S`,
/// with their universal properties against every scope morphism.
fn axiom3<M: FormModel>(model: &M, ex: &Expanded<M::Obj, M::Mor>) -> Section {
    let mut exist_i = LawResult::new("ι exists exactly for conormal subobjects");
    let mut exist_p = LawResult::new("π exists exactly for normal subobjects");
    let mut univ_i = LawResult::new("universal property of ι");
    let mut univ_p = LawResult::new("universal property of π");
    let elementwise = ex.objects.first().is_some_and(|x| model.cardinality(x).is_some())
        && ex.all().next().is_some_and(|(_, _, f)| model.element_map(f).is_some());
    for (gi, g) in ex.objects.iter().enumerate() {
        for s in model.subobjects(g) {
            match model.embedding(&s) {
                Ok(i) => {
                    let shape = model.is_conormal(&s)
                        && model.cod(&i) == *g
                        && model.is_embedding(&i)
                        && model.image(&i) == s
                        && (!model.is_top(&s) || i == model.identity(g));
                    exist_i.record(shape, || format!("ι for {} is malformed", sub_witness(model, &s)));
                    let sq = model.dom(&i);
                    let mono = elementwise.then(|| injective(&model.element_map(&i).expect("element model")));
                    for (xi, x) in ex.objects.iter().enumerate() {
                        for f in &ex.homs[xi][gi] {
                            let fits = model.leq(&model.image(f), &s);
                            let lifted = model.lift_through_embedding(&i, f);
                            let ok = match (&lifted, fits) {
                                (Ok(u), true) => {
                                    let factors = model.compose(&i, u).ok().as_ref() == Some(f);
                                    let unique = match mono {
                                        Some(m) => m,
                                        None => {
                                            model
                                                .morphisms(x, &sq)
                                                .iter()
                                                .filter(|v| model.compose(&i, v).ok().as_ref() == Some(f))
                                                .count()
                                                == 1
                                        }
                                    };
                                    factors && unique
                                }
                                (Err(_), false) => true,
                                _ => false,
                            };
                            univ_i
                                .record(ok, || format!("{} against {}", sub_witness(model, &s), mor_witness(model, f)));
                        }
                    }
                }
                Err(_) => exist_i
                    .record(!model.is_conormal(&s), || format!("ι missing for conormal {}", sub_witness(model, &s))),
            }
            match model.projection(&s) {
                Ok(p) => {
                    let shape = model.is_normal(&s)
                        && model.dom(&p) == *g
                        && model.is_projection(&p)
                        && model.kernel(&p) == s
                        && (!model.is_bottom(&s) || p == model.identity(g));
                    exist_p.record(shape, || format!("π for {} is malformed", sub_witness(model, &s)));
                    let q = model.cod(&p);
                    let epi = elementwise.then(|| {
                        surjective(
                            &model.element_map(&p).expect("element model"),
                            model.cardinality(&q).expect("element model"),
                        )
                    });
                    for (yi, y) in ex.objects.iter().enumerate() {
                        for f in &ex.homs[gi][yi] {
                            let fits = model.leq(&s, &model.kernel(f));
                            let extended = model.extend_through_projection(&p, f);
                            let ok = match (&extended, fits) {
                                (Ok(v), true) => {
                                    let factors = model.compose(v, &p).ok().as_ref() == Some(f);
                                    let unique = match epi {
                                        Some(e) => e,
                                        None => {
                                            model
                                                .morphisms(&q, y)
                                                .iter()
                                                .filter(|w| model.compose(w, &p).ok().as_ref() == Some(f))
                                                .count()
                                                == 1
                                        }
                                    };
                                    factors && unique
                                }
                                (Err(_), false) => true,
                                _ => false,
                            };
                            univ_p
                                .record(ok, || format!("{} against {}", sub_witness(model, &s), mor_witness(model, f)));
                        }
                    }
                }
                Err(_) => {
                    exist_p.record(!model.is_normal(&s), || format!("π missing for normal {}", sub_witness(model, &s)))
                }
            }
        }
    }
    Section { name: "axiom 3".into(), laws: vec![exist_i, exist_p, univ_i, univ_p] }
}

fn injective(map: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    map.iter().all(|y| seen.insert(*y))
}

fn surjective(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &y in map {
        hit[y] = true;
    }
    hit.into_iter().all(|b| b)
}

/// Kernels are normal, images conormal, and every morphism factors as
/// `ι_{Im f} ∘ h ∘ π_{Ker f}` with `h` an isomorphism.
fn axiom4<M: FormModel>(model: &M, ex: &Expanded<M::Obj, M::Mor>) -> Section {
    let mut kinds = LawResult::new("kernel normal and image conormal");
    let mut fact = LawResult::new("factorization");
    for (_, _, f) in ex.all() {
        let (k, im) = (model.kernel(f), model.image(f));
        kinds.record(model.is_normal(&k) && model.is_conormal(&im), || mor_witness(model, f));
        let ok = match model.factorize(f) {
            Ok(fac) => {
                fac.compose(model).ok().as_ref() == Some(f)
                    && model.is_isomorphism(&fac.iso)
                    && model.kernel(&fac.projection) == k
                    && model.image(&fac.embedding) == im
                    && model.is_projection(&fac.projection)
                    && model.is_embedding(&fac.embedding)
            }
            Err(_) => false,
        };
        fact.record(ok, || mor_witness(model, f));
    }
    Section { name: "axiom 4".into(), laws: vec![kinds, fact] }
}

/// Joins of normal subobjects are normal; meets of conormal ones conormal.
fn axiom5<M: FormModel>(model: &M, ex: &Expanded<M::Obj, M::Mor>) -> Section {
    let mut joins = LawResult::new("normal joins");
    let mut meets = LawResult::new("conormal meets");
    for x in &ex.objects {
        let subs = model.subobjects(x);
        for a in &subs {
            for b in &subs {
                if model.is_normal(a) && model.is_normal(b) {
                    joins.record(model.is_normal(&model.join(a, b)), || {
                        format!("{a} ∨ {b} in {}", model.describe_obj(x))
                    });
                }
                if model.is_conormal(a) && model.is_conormal(b) {
                    meets.record(model.is_conormal(&model.meet(a, b)), || {
                        format!("{a} ∧ {b} in {}", model.describe_obj(x))
                    });
                }
            }
        }
    }
    Section { name: "axiom 5".into(), laws: vec![joins, meets] }
}

/// The derived observations over the scope. A failure here is an
/// implementation bug, since each one follows from the axioms.
pub fn check_observations<M: FormModel>(model: &M, scope: &Scope<M::Obj, M::Mor>) -> Report {
    use crate::engine::normal_to;

    let ex = scope.expand(model);
    let k = ex.objects.len();
    let subs: Vec<Vec<M::Sub>> = ex.objects.iter().map(|x| model.subobjects(x)).collect();
    let mut sections = Vec::new();
    let mut section = |name: &str, laws: Vec<LawResult>| sections.push(Section { name: name.to_string(), laws });

    let mut unit = LawResult::new("A ⊆ f⁻¹fA and ff⁻¹B ⊆ B");
    let mut idem = LawResult::new("ff⁻¹fA = fA and f⁻¹ff⁻¹B = f⁻¹B");
    let mut pres = LawResult::new("images preserve joins, meets, 1 and ⊤");
    let mut fixed = LawResult::new("fixed points of the Galois pair");
    let mut kinds = LawResult::new("embeddings have trivial kernel, projections full image");
    let mut char_e = LawResult::new("trivial kernel iff embedding, full image iff projection");
    let mut iso = LawResult::new("isomorphism iff embedding and projection");
    let mut inj = LawResult::new("image maps detect embeddings and projections");
    let mut retract = LawResult::new("image maps retract exactly for embeddings and projections");
    let mut stable = LawResult::new("conormal stable under direct images, normal under inverse images");
    let mut along = LawResult::new("normal stable along projections, conormal along embeddings");
    let mut rel_inv = LawResult::new("f⁻¹B ◁ f⁻¹A when B ◁ A and f⁻¹A conormal");
    let mut rel_dir = LawResult::new("pB ◁ pA when B ◁ A");
    let mut join_pull = LawResult::new("m⁻¹(A∨B) = m⁻¹A ∨ m⁻¹B below Im m");

    for (i, j, f) in ex.all() {
        let w = || mor_witness(model, f);
        let (ker, im) = (model.kernel(f), model.image(f));
        let (emb, proj) = (model.is_embedding(f), model.is_projection(f));
        let fa: Vec<M::Sub> = subs[i].iter().map(|a| model.direct_image(f, a).expect("in domain")).collect();
        let fb: Vec<M::Sub> = subs[j].iter().map(|b| model.inverse_image(f, b).expect("in codomain")).collect();
        for (a, x) in subs[i].iter().zip(&fa) {
            let back = model.inverse_image(f, x).expect("in codomain");
            unit.record(model.leq(a, &back), || format!("{} with A = {a}", w()));
            idem.record(model.direct_image(f, &back).ok().as_ref() == Some(x), || format!("{} with A = {a}", w()));
            fixed.record((back == *a) == model.leq(&ker, a), || format!("{} with A = {a}", w()));
            stable.record(!model.is_conormal(a) || model.is_conormal(x), || format!("{} with A = {a}", w()));
            if proj {
                along.record(!model.is_normal(a) || model.is_normal(x), || format!("{} with A = {a}", w()));
            }
        }
        for (b, y) in subs[j].iter().zip(&fb) {
            let there = model.direct_image(f, y).expect("in domain");
            unit.record(model.leq(&there, b), || format!("{} with B = {b}", w()));
            idem.record(model.inverse_image(f, &there).ok().as_ref() == Some(y), || format!("{} with B = {b}", w()));
            fixed.record((there == *b) == model.leq(b, &im), || format!("{} with B = {b}", w()));
            stable.record(!model.is_normal(b) || model.is_normal(y), || format!("{} with B = {b}", w()));
            if emb {
                along.record(!model.is_conormal(b) || model.is_conormal(y), || format!("{} with B = {b}", w()));
            }
        }
        for (ai, a) in subs[i].iter().enumerate() {
            for (bi, b) in subs[i].iter().enumerate() {
                pres.record(
                    model.direct_image(f, &model.join(a, b)).ok() == Some(model.join(&fa[ai], &fa[bi])),
                    || format!("{} with {a}, {b}", w()),
                );
                if proj && normal_to(model, b, a) {
                    rel_dir.record(normal_to(model, &fa[bi], &fa[ai]), || format!("{} with {b} ◁ {a}", w()));
                }
            }
        }
        for (ai, a) in subs[j].iter().enumerate() {
            for (bi, b) in subs[j].iter().enumerate() {
                pres.record(
                    model.inverse_image(f, &model.meet(a, b)).ok() == Some(model.meet(&fb[ai], &fb[bi])),
                    || format!("{} with {a}, {b}", w()),
                );
                if normal_to(model, b, a) && model.is_conormal(&fb[ai]) {
                    rel_inv.record(normal_to(model, &fb[bi], &fb[ai]), || format!("{} with {b} ◁ {a}", w()));
                }
                if emb && model.leq(&model.join(a, b), &im) {
                    join_pull.record(
                        model.inverse_image(f, &model.join(a, b)).ok() == Some(model.join(&fb[ai], &fb[bi])),
                        || format!("{} with {a}, {b}", w()),
                    );
                }
            }
        }
        pres.record(
            model.is_bottom(&model.direct_image(f, &model.bottom(&ex.objects[i])).expect("in domain"))
                && model.is_top(&model.inverse_image(f, &model.top(&ex.objects[j])).expect("in codomain")),
            w,
        );
        kinds.record((!emb || model.is_bottom(&ker)) && (!proj || model.is_top(&im)), w);
        char_e.record(emb == model.is_bottom(&ker) && proj == model.is_top(&im), w);
        let inverse_ok = model.invert(f).ok().is_some_and(|g| {
            model.compose(&g, f).ok() == Some(model.identity(&ex.objects[i]))
                && model.compose(f, &g).ok() == Some(model.identity(&ex.objects[j]))
        });
        iso.record((emb && proj) == inverse_ok, w);
        let direct_injective = distinct(&fa);
        let inverse_surjective = subs[i].iter().all(|a| fb.contains(a));
        let inverse_injective = distinct(&fb);
        let direct_surjective = subs[j].iter().all(|b| fa.contains(b));
        inj.record(
            emb == direct_injective
                && emb == inverse_surjective
                && proj == inverse_injective
                && proj == direct_surjective,
            w,
        );
        let retract_e = subs[i].iter().zip(&fa).all(|(a, x)| model.inverse_image(f, x).ok().as_ref() == Some(a));
        let retract_p = subs[j].iter().zip(&fb).all(|(b, y)| model.direct_image(f, y).ok().as_ref() == Some(b));
        retract.record(emb == retract_e && proj == retract_p, w);
    }
    section("Galois pair", vec![unit, idem, pres, fixed]);
    section("embeddings and projections", vec![kinds, char_e, iso, inj, retract]);
    section("stability", vec![stable, along, rel_inv, rel_dir, join_pull]);

    let mut comp = LawResult::new("composites of embeddings/projections");
    let mut cancel = LawResult::new("factors of embeddings/projections");
    let mut mono = LawResult::new("embeddings are monic, projections epic");
    for a in 0..k {
        for b in 0..k {
            for f in &ex.homs[a][b] {
                for c in 0..k {
                    for g in &ex.homs[b][c] {
                        let gf = model.compose(g, f).expect("composable");
                        let w = || format!("{} then {}", model.describe_mor(f), model.describe_mor(g));
                        let both_e = model.is_embedding(f) && model.is_embedding(g);
                        let both_p = model.is_projection(f) && model.is_projection(g);
                        comp.record((!both_e || model.is_embedding(&gf)) && (!both_p || model.is_projection(&gf)), w);
                        cancel.record(
                            (!model.is_embedding(&gf) || model.is_embedding(f))
                                && (!model.is_projection(&gf) || model.is_projection(g)),
                            w,
                        );
                    }
                }
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            let fs = &ex.homs[a][b];
            for c in 0..k {
                for m in ex.homs[b][c].iter().filter(|m| model.is_embedding(m)) {
                    let composed: Vec<M::Mor> = fs.iter().map(|u| model.compose(m, u).expect("composable")).collect();
                    mono.record(distinct(&composed), || format!("embedding {}", mor_witness(model, m)));
                }
                for p in ex.homs[c][a].iter().filter(|p| model.is_projection(p)) {
                    let composed: Vec<M::Mor> = fs.iter().map(|v| model.compose(v, p).expect("composable")).collect();
                    mono.record(distinct(&composed), || format!("projection {}", mor_witness(model, p)));
                }
            }
        }
    }
    let mut conventions = LawResult::new("ι_⊤ = 1 and π_1 = 1");
    for x in &ex.objects {
        let id = model.identity(x);
        conventions.record(
            model.embedding(&model.top(x)).ok().as_ref() == Some(&id)
                && model.projection(&model.bottom(x)).ok().as_ref() == Some(&id),
            || model.describe_obj(x),
        );
    }
    section("composition", vec![comp, cancel, mono, conventions]);

    Report { scope: scope.name.clone(), objects: ex.objects.len(), morphisms: ex.morphism_count(), sections }
}

fn distinct<T: PartialEq>(xs: &[T]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

/// Primal and dual axiom runs, and the involution check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub primal: Report,
    pub dual: Report,
    /// Queries on the double dual that answered differently from the model.
    pub involution: LawResult,
}

impl DualityReport {
    pub fn verdicts_match(&self) -> bool {
        self.primal.verdicts() == self.dual.verdicts()
    }

    pub fn passed(&self) -> bool {
        self.verdicts_match() && self.involution.passed()
    }
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((name, p), (_, d)) in self.primal.verdicts().iter().zip(self.dual.verdicts()) {
            let word = |ok: bool| if ok { "OK" } else { "FAIL" };
            writeln!(f, "  {name}: primal {} dual {}{}", word(*p), word(d), if *p == d { "" } else { " MISMATCH" })?;
        }
        writeln!(
            f,
            "  involution: {} ({} queries)",
            if self.involution.passed() { "OK" } else { "FAIL" },
            self.involution.instances
        )
    }
}

/// Runs every axiom on the model and on its dual, and checks that the double
/// dual answers every contract query over the scope like the model.
pub fn duality_selftest<M: FormModel>(model: &M, scope: &Scope<M::Obj, M::Mor>) -> DualityReport {
    let all = [1, 2, 3, 4, 5];
    let primal = check_axioms(model, scope, &all);
    let dual = check_axioms(&Dual(model), scope, &all);
    DualityReport { primal, dual, involution: involution(model, scope) }
}

fn same_result<T: PartialEq>(a: &Result<T>, b: &Result<T>) -> bool {
    match (a, b) {
        (Ok(x), Ok(y)) => x == y,
        (Err(x), Err(y)) => x == y,
        _ => false,
    }
}

fn involution<M: FormModel>(model: &M, scope: &Scope<M::Obj, M::Mor>) -> LawResult {
    let dd = Dual(Dual(model));
    let ex = scope.expand(model);
    let mut law = LawResult::new("double dual agrees with the model");
    for (i, x) in ex.objects.iter().enumerate() {
        let subs = model.subobjects(x);
        law.record(
            dd.subobjects(x) == subs
                && dd.top(x) == model.top(x)
                && dd.bottom(x) == model.bottom(x)
                && dd.identity(x) == model.identity(x)
                && dd.cardinality(x) == model.cardinality(x)
                && dd.describe_obj(x) == model.describe_obj(x),
            || model.describe_obj(x),
        );
        for a in &subs {
            law.record(
                dd.parent(a) == model.parent(a)
                    && dd.is_normal(a) == model.is_normal(a)
                    && dd.is_conormal(a) == model.is_conormal(a)
                    && same_result(&dd.embedding(a), &model.embedding(a))
                    && same_result(&dd.projection(a), &model.projection(a)),
                || sub_witness(model, a),
            );
            for b in &subs {
                law.record(
                    dd.leq(a, b) == model.leq(a, b)
                        && dd.meet(a, b) == model.meet(a, b)
                        && dd.join(a, b) == model.join(a, b),
                    || format!("{a}, {b} in {}", model.describe_obj(x)),
                );
            }
        }
        for (j, y) in ex.objects.iter().enumerate() {
            law.record(dd.morphisms(x, y) == ex.homs[i][j] || scope.morphisms.is_some(), || {
                format!("morphisms {} -> {}", model.describe_obj(x), model.describe_obj(y))
            });
        }
    }
    for (i, j, f) in ex.all() {
        let mut ok = dd.dom(f) == model.dom(f)
            && dd.cod(f) == model.cod(f)
            && dd.is_embedding(f) == model.is_embedding(f)
            && dd.is_projection(f) == model.is_projection(f)
            && dd.kernel(f) == model.kernel(f)
            && dd.image(f) == model.image(f)
            && same_result(&dd.invert(f), &model.invert(f))
            && same_result(&dd.factorize(f), &model.factorize(f))
            && dd.describe_mor(f) == model.describe_mor(f)
            && dd.element_map(f) == model.element_map(f);
        if let Some(map) = model.element_map(f) {
            let (x, y) = (model.dom(f), model.cod(f));
            ok &= match (dd.from_element_map(&x, &y, map.to_vec()), model.from_element_map(&x, &y, map.to_vec())) {
                (Some(a), Some(b)) => same_result(&a, &b),
                (a, b) => a.is_none() && b.is_none(),
            };
        }
        for a in &model.subobjects(&ex.objects[i]) {
            ok &= same_result(&dd.direct_image(f, a), &model.direct_image(f, a));
        }
        for b in &model.subobjects(&ex.objects[j]) {
            ok &= same_result(&dd.inverse_image(f, b), &model.inverse_image(f, b));
        }
        for l in 0..ex.objects.len() {
            for g in &ex.homs[j][l] {
                ok &= same_result(&dd.compose(g, f), &model.compose(g, f));
            }
        }
        let im = model.embedding(&model.image(f));
        if let Ok(m) = im {
            ok &= same_result(&dd.lift_through_embedding(&m, f), &model.lift_through_embedding(&m, f));
        }
        let pk = model.projection(&model.kernel(f));
        if let Ok(p) = pk {
            ok &= same_result(&dd.extend_through_projection(&p, f), &model.extend_through_projection(&p, f));
        }
        law.record(ok, || mor_witness(model, f));
    }
    law
}

/// A model whose projection for one subobject has been removed while the
/// subobject is still reported normal; used to check that the certifier
/// notices.
#[derive(Debug, Clone)]
pub struct WithoutProjection<M: FormModel> {
    pub inner: M,
    pub removed: M::Sub,
}

impl<M: FormModel> FormModel for WithoutProjection<M> {
    type Obj = M::Obj;
    type Mor = M::Mor;
    type Sub = M::Sub;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        self.inner.dom(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        self.inner.cod(f)
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.inner.identity(x)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        self.inner.compose(g, f)
    }
    fn parent(&self, s: &Self::Sub) -> Self::Obj {
        self.inner.parent(s)
    }
    fn subobjects(&self, x: &Self::Obj) -> Vec<Self::Sub> {
        self.inner.subobjects(x)
    }
    fn top(&self, x: &Self::Obj) -> Self::Sub {
        self.inner.top(x)
    }
    fn bottom(&self, x: &Self::Obj) -> Self::Sub {
        self.inner.bottom(x)
    }
    fn leq(&self, a: &Self::Sub, b: &Self::Sub) -> bool {
        self.inner.leq(a, b)
    }
    fn meet(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        self.inner.meet(a, b)
    }
    fn join(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        self.inner.join(a, b)
    }
    fn direct_image(&self, f: &Self::Mor, a: &Self::Sub) -> Result<Self::Sub> {
        self.inner.direct_image(f, a)
    }
    fn inverse_image(&self, f: &Self::Mor, b: &Self::Sub) -> Result<Self::Sub> {
        self.inner.inverse_image(f, b)
    }
    fn is_normal(&self, s: &Self::Sub) -> bool {
        self.inner.is_normal(s)
    }
    fn is_conormal(&self, s: &Self::Sub) -> bool {
        self.inner.is_conormal(s)
    }
    fn embedding(&self, s: &Self::Sub) -> Result<Self::Mor> {
        self.inner.embedding(s)
    }
    fn projection(&self, s: &Self::Sub) -> Result<Self::Mor> {
        if *s == self.removed {
            return Err(FormError::NotNormal {
                object: self.inner.describe_obj(&self.inner.parent(s)),
                sub: s.to_string(),
            });
        }
        self.inner.projection(s)
    }
    fn is_embedding(&self, f: &Self::Mor) -> bool {
        self.inner.is_embedding(f)
    }
    fn is_projection(&self, f: &Self::Mor) -> bool {
        self.inner.is_projection(f)
    }
    fn invert(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.inner.invert(f)
    }
    fn lift_through_embedding(&self, m: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        self.inner.lift_through_embedding(m, f)
    }
    fn extend_through_projection(&self, p: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.inner.extend_through_projection(p, g)
    }
    fn morphisms(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        self.inner.morphisms(x, y)
    }
    fn element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>> {
        self.inner.element_map(f)
    }
    fn cardinality(&self, x: &Self::Obj) -> Option<usize> {
        self.inner.cardinality(x)
    }
    fn from_element_map(&self, dom: &Self::Obj, cod: &Self::Obj, map: Vec<usize>) -> Option<Result<Self::Mor>> {
        self.inner.from_element_map(dom, cod, map)
    }
    fn dual_element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>> {
        self.inner.dual_element_map(f)
    }
    fn dual_from_element_map(&self, dom: &Self::Obj, cod: &Self::Obj, map: Vec<usize>) -> Option<Result<Self::Mor>> {
        self.inner.dual_from_element_map(dom, cod, map)
    }
    fn describe_obj(&self, x: &Self::Obj) -> String {
        self.inner.describe_obj(x)
    }
    fn describe_mor(&self, f: &Self::Mor) -> String {
        self.inner.describe_mor(f)
    }
}
