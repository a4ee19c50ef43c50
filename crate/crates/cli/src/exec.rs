//! Script execution: declarations build model state, commands report.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use formchase_core::axioms::{check_axioms, check_observations, Scope};
use formchase_core::engine::{decide, relation_oracle, Pyramid};
use formchase_core::group::{make_group, GroupKind};
use formchase_core::theorems::{
    butterfly, diamond_iso, double_quotient, image_theorem, restricted_modular_law, TheoremReport,
};
use formchase_core::{
    catalogue, chase, Algebra, Concrete, Dir, Dual, FormError, FormModel, GroupModel, GroupTable, Morphism, RingModel,
    RingTable, SubObject, Zigzag,
};

use crate::print::command_line;
use crate::script::{GroupSpec, RingSpec, Script, Statement, Stmt, SubArg, Theorem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub fail_fast: bool,
    /// Largest object a declaration may build.
    pub max_order: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { fail_fast: false, max_order: formchase_core::elemset::MAX_ORDER }
    }
}

/// The outcome of one command, or of a declaration that failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub line: usize,
    pub command: String,
    pub ok: bool,
    /// `OK` or `FAIL <reason>`.
    pub verdict: String,
    pub output: Vec<String>,
    pub data: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Execution {
    pub records: Vec<Record>,
}

impl Execution {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.ok)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for r in &self.records {
            match format {
                Format::Text => {
                    out.push_str(&format!("line {}: {}\n", r.line, r.command));
                    for l in &r.output {
                        out.push_str(&format!("  {l}\n"));
                    }
                    out.push_str(&format!("  {}\n", r.verdict));
                }
                Format::Json => {
                    out.push_str(&serde_json::to_string(r).expect("records serialize"));
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Runs the statements in order. Execution continues past failures unless
/// `fail_fast` is set.
pub fn execute_script(script: &Script, opts: &Options) -> Execution {
    let mut env = Env::new(opts.max_order);
    let mut records = Vec::new();
    for st in &script.statements {
        let rec = env.statement(st);
        let stop = opts.fail_fast && rec.as_ref().is_some_and(|r| !r.ok);
        records.extend(rec);
        if stop {
            break;
        }
    }
    Execution { records }
}

#[derive(Clone)]
enum Obj {
    Group(Arc<GroupTable>),
    Ring(Arc<RingTable>),
}

#[derive(Clone)]
enum Hom {
    Group(Morphism<GroupTable>),
    Ring(Morphism<RingTable>),
}

#[derive(Clone)]
enum Sub {
    Group(SubObject<GroupTable>),
    Ring(SubObject<RingTable>),
}

#[derive(Clone)]
struct ScopeDecl {
    objects: Vec<String>,
    homs: Option<Vec<String>>,
    depth: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Group,
    Ring,
}

impl Kind {
    fn noun(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::Ring => "ring",
        }
    }
}

/// Typed access to the environment for one kind of algebra.
trait Kinded: Algebra {
    fn model(env: &Env) -> &Concrete<Self>;
    fn obj(o: &Obj) -> Option<&Arc<Self>>;
    fn hom(h: &Hom) -> Option<&Morphism<Self>>;
    fn sub(s: &Sub) -> Option<&SubObject<Self>>;
    fn builtin_scope(env: &Env) -> Vec<Arc<Self>>;
}

impl Kinded for GroupTable {
    fn model(env: &Env) -> &Concrete<Self> {
        &env.groups
    }
    fn obj(o: &Obj) -> Option<&Arc<Self>> {
        match o {
            Obj::Group(x) => Some(x),
            Obj::Ring(_) => None,
        }
    }
    fn hom(h: &Hom) -> Option<&Morphism<Self>> {
        match h {
            Hom::Group(f) => Some(f),
            Hom::Ring(_) => None,
        }
    }
    fn sub(s: &Sub) -> Option<&SubObject<Self>> {
        match s {
            Sub::Group(x) => Some(x),
            Sub::Ring(_) => None,
        }
    }
    fn builtin_scope(env: &Env) -> Vec<Arc<Self>> {
        catalogue::axiom_groups()
            .into_iter()
            .map(|(n, g)| {
                let x = env.groups.object(g);
                env.groups.name(&x, &n)
            })
            .collect()
    }
}

impl Kinded for RingTable {
    fn model(env: &Env) -> &Concrete<Self> {
        &env.rings
    }
    fn obj(o: &Obj) -> Option<&Arc<Self>> {
        match o {
            Obj::Ring(x) => Some(x),
            Obj::Group(_) => None,
        }
    }
    fn hom(h: &Hom) -> Option<&Morphism<Self>> {
        match h {
            Hom::Ring(f) => Some(f),
            Hom::Group(_) => None,
        }
    }
    fn sub(s: &Sub) -> Option<&SubObject<Self>> {
        match s {
            Sub::Ring(x) => Some(x),
            Sub::Group(_) => None,
        }
    }
    fn builtin_scope(env: &Env) -> Vec<Arc<Self>> {
        catalogue::axiom_rings()
            .into_iter()
            .map(|(n, r)| {
                let x = env.rings.object(r);
                env.rings.name(&x, &n)
            })
            .collect()
    }
}

struct Env {
    groups: GroupModel,
    rings: RingModel,
    max_order: usize,
    objects: HashMap<String, Obj>,
    homs: HashMap<String, Hom>,
    subs: HashMap<String, Sub>,
    zigzags: HashMap<String, Vec<(String, Dir)>>,
    scopes: HashMap<String, ScopeDecl>,
    dual: bool,
}

/// Command output: body lines and structured data.
#[derive(Default)]
struct Body {
    lines: Vec<String>,
    data: serde_json::Map<String, Value>,
}

impl Body {
    fn line(&mut self, l: impl Into<String>) {
        self.lines.push(l.into());
    }
    fn set(&mut self, k: &str, v: Value) {
        self.data.insert(k.to_string(), v);
    }
}

/// A failed command: the reason, plus whatever output preceded it.
type Verdict = Result<(), String>;

fn err(e: FormError) -> String {
    e.to_string()
}

fn undefined(kind: &str, name: &str) -> String {
    format!("undefined-name: {kind} `{name}` was not successfully declared")
}

impl Env {
    fn new(max_order: usize) -> Self {
        Env {
            groups: GroupModel::new(),
            rings: RingModel::new(),
            max_order,
            objects: HashMap::new(),
            homs: HashMap::new(),
            subs: HashMap::new(),
            zigzags: HashMap::new(),
            scopes: HashMap::new(),
            dual: false,
        }
    }

    fn statement(&mut self, st: &Statement) -> Option<Record> {
        let mut body = Body::default();
        let verdict = if st.stmt.is_command() {
            self.command(&st.stmt, &mut body)
        } else {
            match self.declare(&st.stmt) {
                Ok(()) => return None,
                Err(e) => Err(e),
            }
        };
        let (ok, verdict) = match verdict {
            Ok(()) => (true, "OK".to_string()),
            Err(reason) => (false, format!("FAIL {reason}")),
        };
        Some(Record {
            line: st.line,
            command: command_line(&st.stmt),
            ok,
            verdict,
            output: body.lines,
            data: Value::Object(body.data),
        })
    }

    fn check_order(&self, n: usize) -> Result<(), String> {
        if n == 0 || n > self.max_order {
            Err(format!("invalid-table: order {n} is outside 1..={}", self.max_order))
        } else {
            Ok(())
        }
    }

    fn object_kind(&self, name: &str) -> Result<Kind, String> {
        match self.objects.get(name) {
            Some(Obj::Group(_)) => Ok(Kind::Group),
            Some(Obj::Ring(_)) => Ok(Kind::Ring),
            None => Err(undefined("object", name)),
        }
    }

    fn hom_kind(&self, name: &str) -> Result<Kind, String> {
        match self.homs.get(name) {
            Some(Hom::Group(_)) => Ok(Kind::Group),
            Some(Hom::Ring(_)) => Ok(Kind::Ring),
            None => Err(undefined("homomorphism", name)),
        }
    }

    fn declare(&mut self, stmt: &Stmt) -> Verdict {
        match stmt {
            Stmt::Group { name, spec } => {
                let kind = match spec {
                    GroupSpec::Cyclic(k) => GroupKind::Cyclic(*k),
                    GroupSpec::Dihedral(k) => GroupKind::Dihedral(*k),
                    GroupSpec::Symmetric(k) => GroupKind::Symmetric(*k),
                    GroupSpec::Klein => GroupKind::Klein,
                    GroupSpec::Quaternion => GroupKind::Quaternion,
                    GroupSpec::Table(rows) => GroupKind::Table(rows.clone()),
                };
                let g = make_group(&kind, self.max_order).map_err(err)?;
                let x = self.groups.object(g);
                let x = self.groups.name(&x, name);
                self.objects.insert(name.clone(), Obj::Group(x));
            }
            Stmt::Ring { name, spec } => {
                let r = match spec {
                    RingSpec::Zero => RingTable::zero(),
                    RingSpec::Cyclic(k) => {
                        self.check_order(*k)?;
                        RingTable::cyclic(*k)
                    }
                    RingSpec::Table { add, mul, one } => {
                        self.check_order(add.len())?;
                        RingTable::from_tables(add, mul, *one).map_err(err)?
                    }
                };
                let x = self.rings.object(r);
                let x = self.rings.name(&x, name);
                self.objects.insert(name.clone(), Obj::Ring(x));
            }
            Stmt::Hom { name, dom, cod, map } => {
                let d = self.objects.get(dom).ok_or_else(|| undefined("object", dom))?;
                let c = self.objects.get(cod).ok_or_else(|| undefined("object", cod))?;
                let h = match (d, c) {
                    (Obj::Group(d), Obj::Group(c)) => Hom::Group(self.groups.hom(d, c, map.clone()).map_err(err)?),
                    (Obj::Ring(d), Obj::Ring(c)) => Hom::Ring(self.rings.hom(d, c, map.clone()).map_err(err)?),
                    _ => return Err(format!("kind-mismatch: {dom} and {cod} are not both groups or both rings")),
                };
                self.homs.insert(name.clone(), h);
            }
            Stmt::Sub { name, parent, elems } => {
                let s = match self.objects.get(parent).ok_or_else(|| undefined("object", parent))? {
                    Obj::Group(p) => Sub::Group(self.groups.sub(p, elems).map_err(err)?),
                    Obj::Ring(p) => Sub::Ring(self.rings.sub(p, elems).map_err(err)?),
                };
                self.subs.insert(name.clone(), s);
            }
            Stmt::Zigzag { name, steps } => {
                match self.hom_kind(&steps[0].0)? {
                    Kind::Group => self.with_model::<GroupTable, _>(|m, env| env.zigzag_from(m, steps).map(|_| ()))?,
                    Kind::Ring => self.with_model::<RingTable, _>(|m, env| env.zigzag_from(m, steps).map(|_| ()))?,
                }
                self.zigzags.insert(name.clone(), steps.clone());
            }
            Stmt::Scope { name, objects, homs, depth } => {
                let kind = self.object_kind(&objects[0])?;
                for o in objects {
                    if self.object_kind(o)? != kind {
                        return Err(format!("kind-mismatch: scope {name} mixes groups and rings"));
                    }
                }
                for h in homs.iter().flatten() {
                    if self.hom_kind(h)? != kind {
                        return Err(format!("kind-mismatch: scope {name} mixes groups and rings"));
                    }
                }
                self.scopes
                    .insert(name.clone(), ScopeDecl { objects: objects.clone(), homs: homs.clone(), depth: *depth });
            }
            _ => unreachable!("commands are not declarations"),
        }
        Ok(())
    }

    /// Calls `f` with the current model for kind `A`: the concrete model or
    /// its dual.
    fn with_model<A: Kinded, R>(&self, f: impl FnOnce(&dyn ModelRef<A>, &Env) -> R) -> R {
        let m = A::model(self);
        if self.dual {
            f(&Dual(m), self)
        } else {
            f(&m, self)
        }
    }

    fn zigzag_from<A: Kinded>(
        &self,
        m: &dyn ModelRef<A>,
        steps: &[(String, Dir)],
    ) -> Result<Zigzag<Arc<A>, Morphism<A>>, String> {
        let mut out = Vec::with_capacity(steps.len());
        for (h, d) in steps {
            let f = self.homs.get(h).ok_or_else(|| undefined("homomorphism", h))?;
            let f = A::hom(f).ok_or_else(|| format!("kind-mismatch: {h} is not a {} homomorphism", A::NOUN))?;
            out.push((f.clone(), *d));
        }
        m.zigzag(out).map_err(err)
    }

    fn zigzag_kind(&self, name: &str) -> Result<Kind, String> {
        let steps = self.zigzags.get(name).ok_or_else(|| undefined("zigzag", name))?;
        self.hom_kind(&steps[0].0)
    }

    fn command(&mut self, stmt: &Stmt, body: &mut Body) -> Verdict {
        let kind = match stmt {
            Stmt::Dualize(on) => {
                self.dual = *on;
                body.line(if *on { "dual model active" } else { "primal model active" });
                body.set("dual", json!(on));
                return Ok(());
            }
            Stmt::Chase { zigzag, .. }
            | Stmt::Induce { zigzag }
            | Stmt::Oracle { zigzag }
            | Stmt::Pyramid { zigzag } => self.zigzag_kind(zigzag)?,
            Stmt::VerifyAxioms { scope } => match scope.as_str() {
                "grp" => Kind::Group,
                "ring" => Kind::Ring,
                s => {
                    let decl = self.scopes.get(s).ok_or_else(|| undefined("scope", s))?;
                    self.object_kind(&decl.objects[0])?
                }
            },
            Stmt::Verify(Theorem::ImageTheorem { hom, .. }) => self.hom_kind(hom)?,
            Stmt::Verify(
                Theorem::Diamond { object, .. }
                | Theorem::DoubleQuotient { object, .. }
                | Theorem::Butterfly { object, .. }
                | Theorem::ModularLaw { object, .. },
            ) => self.object_kind(object)?,
            _ => unreachable!("declarations are not commands"),
        };
        body.set("model", json!(format!("{}{}", if self.dual { "dual " } else { "" }, kind.noun())));
        match kind {
            Kind::Group => self.with_model::<GroupTable, _>(|m, env| env.run(m, stmt, body)),
            Kind::Ring => self.with_model::<RingTable, _>(|m, env| env.run(m, stmt, body)),
        }
    }

    fn run<A: Kinded>(&self, m: &dyn ModelRef<A>, stmt: &Stmt, body: &mut Body) -> Verdict {
        match stmt {
            Stmt::Chase { zigzag, dir, sub } => {
                let z = self.zigzag_from(m, &self.zigzags[zigzag])?;
                let start = match dir {
                    Dir::Fwd => z.first().clone(),
                    Dir::Bwd => z.last().clone(),
                };
                let s = self.resolve(m, sub, &start)?;
                let trace = m.chase(&z, &s, *dir).map_err(err)?;
                let mut nodes: Vec<&Arc<A>> = z.nodes().iter().collect();
                if *dir == Dir::Bwd {
                    nodes.reverse();
                }
                for (x, s) in nodes.into_iter().zip(&trace) {
                    body.line(format!("{} {s}", m.describe(x)));
                }
                body.set("trace", json!(trace.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
                Ok(())
            }
            Stmt::Induce { zigzag } => {
                let z = self.zigzag_from(m, &self.zigzags[zigzag])?;
                let (morphism, obstruction) = m.decide(&z).map_err(err)?;
                match morphism {
                    Some(h) => {
                        let iso = m.is_iso(&h);
                        let (a, b) = (m.describe(z.first()), m.describe(z.last()));
                        if self.dual {
                            // Dual morphisms carry the element map of their primal arrow.
                            body.line(format!("induced {a} -> {b}, dual of {b} -> {a} {h}"));
                        } else {
                            body.line(format!("induced {a} -> {b} {h}"));
                        }
                        body.line(format!("isomorphism: {}", yes(iso)));
                        body.set("map", json!(h.map()));
                        body.set("isomorphism", json!(iso));
                        Ok(())
                    }
                    None => Err(format!("not-inducible: {}", obstruction.unwrap_or_default())),
                }
            }
            Stmt::Oracle { zigzag } => {
                let z = self.zigzag_from(m, &self.zigzags[zigzag])?;
                let o = m.oracle(&z).map_err(err)?;
                let (morphism, _) = m.decide(&z).map_err(err)?;
                body.line(format!("relation {}", o.relation));
                body.line(format!("function: {}", yes(o.is_function)));
                body.line(format!("total: {}", yes(o.is_total)));
                if let Some(h) = o.is_hom {
                    body.line(format!("homomorphism: {}", yes(h)));
                }
                let agrees = o.is_total_function() == morphism.is_some()
                    && morphism.is_none_or(|h| o.relation.as_map().as_deref() == Some(h.map()));
                body.line(format!("agrees with induction: {}", yes(agrees)));
                body.set("pairs", json!(o.relation.pairs()));
                body.set("function", json!(o.is_function));
                body.set("total", json!(o.is_total));
                body.set("homomorphism", json!(o.is_hom));
                body.set("agrees", json!(agrees));
                if agrees {
                    Ok(())
                } else {
                    Err("internal-consistency: oracle and induction disagree".into())
                }
            }
            Stmt::Pyramid { zigzag } => {
                let z = self.zigzag_from(m, &self.zigzags[zigzag])?;
                let (text, verified, principal) = m.pyramid(&z).map_err(err)?;
                for l in text.lines() {
                    body.line(l);
                }
                body.line(format!("principal path {principal}"));
                body.set("nodes", json!(text.lines().count()));
                verified.map_err(err)
            }
            Stmt::VerifyAxioms { scope } => {
                let sc = self.scope::<A>(scope)?;
                let (axioms, observations) = m.certify(&sc);
                for l in axioms.lines().chain(observations.lines()) {
                    body.line(l);
                }
                body.set("objects", json!(sc.objects.len()));
                if axioms.passed && observations.passed {
                    Ok(())
                } else {
                    Err(format!("{} violations", axioms.failures + observations.failures))
                }
            }
            Stmt::Verify(t) => {
                let report = self.theorem(m, t)?;
                for l in report.to_string().lines() {
                    body.line(l);
                }
                body.set("theorem", json!(report.theorem));
                body.set("isomorphisms", json!(report.isomorphisms));
                body.set(
                    "checks",
                    json!(report.checks.iter().map(|c| json!({"name": c.name, "ok": c.ok})).collect::<Vec<_>>()),
                );
                match report.failure() {
                    None => Ok(()),
                    Some(c) => Err(format!("{}: {}", c.name, c.detail)),
                }
            }
            _ => unreachable!(),
        }
    }

    fn object<A: Kinded>(&self, name: &str) -> Result<Arc<A>, String> {
        let o = self.objects.get(name).ok_or_else(|| undefined("object", name))?;
        A::obj(o).cloned().ok_or_else(|| format!("kind-mismatch: {name} is not a {}", A::NOUN))
    }

    fn resolve<A: Kinded>(&self, m: &dyn ModelRef<A>, arg: &SubArg, parent: &Arc<A>) -> Result<SubObject<A>, String> {
        match arg {
            SubArg::Top => Ok(m.top(parent)),
            SubArg::Bottom => Ok(m.bottom(parent)),
            SubArg::Literal(v) => A::model(self).sub(parent, v).map_err(err),
            SubArg::Name(n) => {
                let s = self.subs.get(n).ok_or_else(|| undefined("subobject", n))?;
                let s = A::sub(s).ok_or_else(|| format!("kind-mismatch: {n} is not a subobject of a {}", A::NOUN))?;
                if s.parent() != parent {
                    return Err(err(FormError::ParentMismatch {
                        what: format!("{n} = {s}"),
                        expected: m.describe(parent),
                    }));
                }
                Ok(s.clone())
            }
        }
    }

    fn scope<A: Kinded>(&self, name: &str) -> Result<Scope<Arc<A>, Morphism<A>>, String> {
        if name == "grp" || name == "ring" {
            if (name == "grp") != (A::NOUN == "group") {
                return Err(format!("kind-mismatch: scope {name}"));
            }
            return Ok(Scope::new(name, A::builtin_scope(self)));
        }
        let decl = &self.scopes[name];
        let objects = decl.objects.iter().map(|o| self.object::<A>(o)).collect::<Result<Vec<_>, _>>()?;
        let mut sc = Scope::new(name, objects);
        if let Some(hs) = &decl.homs {
            let mut list = Vec::new();
            for h in hs {
                let f = self.homs.get(h).ok_or_else(|| undefined("homomorphism", h))?;
                list.push(A::hom(f).cloned().ok_or_else(|| format!("kind-mismatch: {h}"))?);
            }
            sc = sc.with_morphisms(list);
        }
        if let Some(d) = decl.depth {
            sc = sc.with_closure_depth(d);
        }
        Ok(sc)
    }

    fn theorem<A: Kinded>(&self, m: &dyn ModelRef<A>, t: &Theorem) -> Result<TheoremReport, String> {
        match t {
            Theorem::Diamond { object, a, b } => {
                let g = self.object::<A>(object)?;
                m.diamond(&self.resolve(m, a, &g)?, &self.resolve(m, b, &g)?)
            }
            Theorem::DoubleQuotient { object, n, s } => {
                let g = self.object::<A>(object)?;
                let n = self.resolve(m, n, &g)?;
                let q = m.quotient_of(&n)?;
                m.double_quotient(&n, &self.resolve(m, s, &q)?)
            }
            Theorem::ImageTheorem { hom, w, x } => {
                let f = self.homs.get(hom).ok_or_else(|| undefined("homomorphism", hom))?;
                let f = A::hom(f).cloned().ok_or_else(|| format!("kind-mismatch: {hom}"))?;
                let d = m.domain(&f);
                m.image_theorem(&f, &self.resolve(m, w, &d)?, &self.resolve(m, x, &d)?)
            }
            Theorem::Butterfly { object, s1, s, t1, t } => {
                let g = self.object::<A>(object)?;
                let r = |a| self.resolve(m, a, &g);
                m.butterfly(&r(s1)?, &r(s)?, &r(t1)?, &r(t)?)
            }
            Theorem::ModularLaw { object, x, y, z } => {
                let g = self.object::<A>(object)?;
                let r = |a| self.resolve(m, a, &g);
                m.modular(&r(x)?, &r(y)?, &r(z)?)
            }
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Rendered axiom or observation report.
struct Certification {
    text: String,
    passed: bool,
    failures: u64,
}

impl Certification {
    fn lines(&self) -> std::str::Lines<'_> {
        self.text.lines()
    }
}

/// The operations the executor needs from a model over `A`, object safe so
/// the primal and the dual model share one code path.
trait ModelRef<A: Kinded> {
    fn zigzag(&self, steps: Vec<(Morphism<A>, Dir)>) -> formchase_core::Result<Zigzag<Arc<A>, Morphism<A>>>;
    fn describe(&self, x: &Arc<A>) -> String;
    fn top(&self, x: &Arc<A>) -> SubObject<A>;
    fn bottom(&self, x: &Arc<A>) -> SubObject<A>;
    fn domain(&self, f: &Morphism<A>) -> Arc<A>;
    fn is_iso(&self, f: &Morphism<A>) -> bool;
    fn quotient_of(&self, n: &SubObject<A>) -> Result<Arc<A>, String>;
    fn chase(
        &self,
        z: &Zigzag<Arc<A>, Morphism<A>>,
        s: &SubObject<A>,
        dir: Dir,
    ) -> formchase_core::Result<Vec<SubObject<A>>>;
    #[allow(clippy::type_complexity)]
    fn decide(&self, z: &Zigzag<Arc<A>, Morphism<A>>) -> formchase_core::Result<(Option<Morphism<A>>, Option<String>)>;
    fn oracle(&self, z: &Zigzag<Arc<A>, Morphism<A>>) -> formchase_core::Result<formchase_core::engine::OracleReport>;
    #[allow(clippy::type_complexity)]
    fn pyramid(
        &self,
        z: &Zigzag<Arc<A>, Morphism<A>>,
    ) -> formchase_core::Result<(String, formchase_core::Result<()>, String)>;
    fn certify(&self, sc: &Scope<Arc<A>, Morphism<A>>) -> (Certification, Certification);
    fn diamond(&self, a: &SubObject<A>, b: &SubObject<A>) -> Result<TheoremReport, String>;
    fn double_quotient(&self, n: &SubObject<A>, s: &SubObject<A>) -> Result<TheoremReport, String>;
    fn image_theorem(&self, f: &Morphism<A>, w: &SubObject<A>, x: &SubObject<A>) -> Result<TheoremReport, String>;
    fn butterfly(
        &self,
        s1: &SubObject<A>,
        s: &SubObject<A>,
        t1: &SubObject<A>,
        t: &SubObject<A>,
    ) -> Result<TheoremReport, String>;
    fn modular(&self, x: &SubObject<A>, y: &SubObject<A>, z: &SubObject<A>) -> Result<TheoremReport, String>;
}

impl<A, M> ModelRef<A> for M
where
    A: Kinded,
    M: FormModel<Obj = Arc<A>, Mor = Morphism<A>, Sub = SubObject<A>>,
{
    fn zigzag(&self, steps: Vec<(Morphism<A>, Dir)>) -> formchase_core::Result<Zigzag<Arc<A>, Morphism<A>>> {
        Zigzag::new(self, steps)
    }
    fn describe(&self, x: &Arc<A>) -> String {
        self.describe_obj(x)
    }
    fn top(&self, x: &Arc<A>) -> SubObject<A> {
        FormModel::top(self, x)
    }
    fn bottom(&self, x: &Arc<A>) -> SubObject<A> {
        FormModel::bottom(self, x)
    }
    fn domain(&self, f: &Morphism<A>) -> Arc<A> {
        self.dom(f)
    }
    fn is_iso(&self, f: &Morphism<A>) -> bool {
        self.is_isomorphism(f)
    }
    fn quotient_of(&self, n: &SubObject<A>) -> Result<Arc<A>, String> {
        Ok(self.cod(&self.projection(n).map_err(err)?))
    }
    fn chase(
        &self,
        z: &Zigzag<Arc<A>, Morphism<A>>,
        s: &SubObject<A>,
        dir: Dir,
    ) -> formchase_core::Result<Vec<SubObject<A>>> {
        Ok(chase(self, z, s, dir)?.subs)
    }
    fn decide(&self, z: &Zigzag<Arc<A>, Morphism<A>>) -> formchase_core::Result<(Option<Morphism<A>>, Option<String>)> {
        let d = decide(self, z)?;
        Ok((d.morphism, d.obstruction))
    }
    fn oracle(&self, z: &Zigzag<Arc<A>, Morphism<A>>) -> formchase_core::Result<formchase_core::engine::OracleReport> {
        relation_oracle(self, z)
    }
    fn pyramid(
        &self,
        z: &Zigzag<Arc<A>, Morphism<A>>,
    ) -> formchase_core::Result<(String, formchase_core::Result<()>, String)> {
        let p = Pyramid::build(self, z)?;
        let principal = p.principal_path().iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ");
        Ok((p.render(self), p.verify(self), principal))
    }
    fn certify(&self, sc: &Scope<Arc<A>, Morphism<A>>) -> (Certification, Certification) {
        let a = check_axioms(self, sc, &[1, 2, 3, 4, 5]);
        let o = check_observations(self, sc);
        (
            Certification { text: a.to_string(), passed: a.passed(), failures: a.failures() },
            Certification { text: o.to_string(), passed: o.passed(), failures: o.failures() },
        )
    }
    fn diamond(&self, a: &SubObject<A>, b: &SubObject<A>) -> Result<TheoremReport, String> {
        diamond_iso(self, a, b).map_err(err)
    }
    fn double_quotient(&self, n: &SubObject<A>, s: &SubObject<A>) -> Result<TheoremReport, String> {
        double_quotient(self, n, s).map_err(err)
    }
    fn image_theorem(&self, f: &Morphism<A>, w: &SubObject<A>, x: &SubObject<A>) -> Result<TheoremReport, String> {
        image_theorem(self, f, w, x).map_err(err)
    }
    fn butterfly(
        &self,
        s1: &SubObject<A>,
        s: &SubObject<A>,
        t1: &SubObject<A>,
        t: &SubObject<A>,
    ) -> Result<TheoremReport, String> {
        butterfly(self, s1, s, t1, t).map_err(err)
    }
    fn modular(&self, x: &SubObject<A>, y: &SubObject<A>, z: &SubObject<A>) -> Result<TheoremReport, String> {
        restricted_modular_law(self, x, y, z).map_err(err)
    }
}
