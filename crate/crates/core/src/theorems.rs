//! The isomorphism theorems as executable constructions. Each checker tests
//! its hypotheses, builds the zigzag of the classical proof, induces the
//! isomorphism through the pyramid and cross-checks it independently.

use std::fmt;

use crate::engine::{
    decide, embedding_diamond, normal_to, projection_diamond, relation_oracle, subquotient, Dir, Zigzag,
};
use crate::error::{FormError, Result};
use crate::form::FormModel;

/// One named yes/no finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), ok, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub hypotheses: Vec<Check>,
    /// Each constructed zigzag as `name: f dir, g dir, ...`.
    pub zigzags: Vec<String>,
    /// Each induced isomorphism as `name: morphism`.
    pub isomorphisms: Vec<String>,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    fn new(theorem: &'static str) -> Self {
        TheoremReport {
            theorem,
            hypotheses: Vec::new(),
            zigzags: Vec::new(),
            isomorphisms: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn hyp(&mut self, name: impl Into<String>, ok: bool) {
        self.hypotheses.push(Check::new(name, ok, ""));
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, ok, detail));
    }

    pub fn passed(&self) -> bool {
        self.hypotheses.iter().chain(&self.checks).all(|c| c.ok)
    }

    /// The first failed hypothesis or check.
    pub fn failure(&self) -> Option<&Check> {
        self.hypotheses.iter().chain(&self.checks).find(|c| !c.ok)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.theorem, if self.passed() { "OK" } else { "FAIL" })?;
        for h in &self.hypotheses {
            writeln!(f, "  hypothesis {}: {}", h.name, if h.ok { "holds" } else { "fails" })?;
        }
        for z in &self.zigzags {
            writeln!(f, "  zigzag {z}")?;
        }
        for i in &self.isomorphisms {
            writeln!(f, "  iso {i}")?;
        }
        for c in &self.checks {
            write!(f, "  check {}: {}", c.name, if c.ok { "OK" } else { "FAIL" })?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn render_zigzag<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>) -> String {
    z.steps().iter().map(|(f, d)| format!("{} {d}", model.describe_mor(f))).collect::<Vec<_>>().join(", ")
}

fn require(theorem: &str, ok: bool, hypothesis: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(FormError::hypothesis(theorem, hypothesis()))
    }
}

fn same_parent<M: FormModel>(model: &M, theorem: &str, subs: &[&M::Sub]) -> Result<()> {
    let g = model.parent(subs[0]);
    for s in &subs[1..] {
        if model.parent(s) != g {
            return Err(FormError::hypothesis(theorem, format!("{s} and {} lie in different objects", subs[0])));
        }
    }
    Ok(())
}

/// `A ∧ C ◁ B ∧ C`, given `A ◁ B` and `C` conormal.
pub fn lemma_meet_normality<M: FormModel>(model: &M, a: &M::Sub, b: &M::Sub, c: &M::Sub) -> Result<bool> {
    const NAME: &str = "meet-normality";
    same_parent(model, NAME, &[a, b, c])?;
    require(NAME, normal_to(model, a, b), || format!("{a} ◁ {b}"))?;
    require(NAME, model.is_conormal(c), || format!("{c} conormal"))?;
    Ok(normal_to(model, &model.meet(a, c), &model.meet(b, c)))
}

/// `A ∨ C ◁ B ∨ C`, given `A ◁ B` and `C ◁ B ∨ C`.
pub fn lemma_join_normality<M: FormModel>(model: &M, a: &M::Sub, b: &M::Sub, c: &M::Sub) -> Result<bool> {
    const NAME: &str = "join-normality";
    same_parent(model, NAME, &[a, b, c])?;
    require(NAME, normal_to(model, a, b), || format!("{a} ◁ {b}"))?;
    let bc = model.join(b, c);
    require(NAME, normal_to(model, c, &bc), || format!("{c} ◁ {bc}"))?;
    Ok(normal_to(model, &model.join(a, c), &bc))
}

/// Induces along `z`, requires an isomorphism, and asks for a second
/// witness: the element-level relation when the model has one, and carrier
/// sizes of the end nodes when it has those. At least one second witness
/// must be available.
fn certify<M: FormModel>(
    model: &M,
    report: &mut TheoremReport,
    label: &str,
    z: &Zigzag<M::Obj, M::Mor>,
) -> Option<M::Mor> {
    report.zigzags.push(format!("{label}: {}", render_zigzag(model, z)));
    let d = match decide(model, z) {
        Ok(d) => d,
        Err(e) => {
            report.check(format!("{label} induces"), false, e.to_string());
            return None;
        }
    };
    let Some(h) = d.morphism else {
        report.check(format!("{label} induces"), false, d.obstruction.unwrap_or_default());
        return None;
    };
    report.check(format!("{label} induces"), true, "");
    report.isomorphisms.push(format!("{label}: {}", model.describe_mor(&h)));
    report.check(format!("{label} is an isomorphism"), model.is_isomorphism(&h), "");
    let mut witnesses = 0;
    match relation_oracle(model, z) {
        Ok(o) => {
            witnesses += 1;
            let agrees = o.is_total_function() && o.relation.as_map().as_deref() == model.element_map(&h).as_deref();
            report.check(format!("{label} oracle"), agrees, o.relation.to_string());
        }
        Err(FormError::ModelCapability(_)) => {}
        Err(e) => report.check(format!("{label} oracle"), false, e.to_string()),
    }
    if let (Some(x), Some(y)) = (model.cardinality(z.first()), model.cardinality(z.last())) {
        witnesses += 1;
        report.check(format!("{label} cardinality"), x == y, format!("{x} = {y}"));
    }
    report.check(format!("{label} second witness"), witnesses > 0, "");
    Some(h)
}

fn cardinality_check<M: FormModel>(model: &M, report: &mut TheoremReport, name: &str, x: &M::Obj, y: &M::Obj) {
    if let (Some(a), Some(b)) = (model.cardinality(x), model.cardinality(y)) {
        report.check(name, a == b, format!("{a} = {b}"));
    }
}

/// `B/(A∧B) ≅ (A∨B)/A`, for `B` conormal and `A ◁ A∨B`.
pub fn diamond_iso<M: FormModel>(model: &M, a: &M::Sub, b: &M::Sub) -> Result<TheoremReport> {
    const NAME: &str = "diamond";
    same_parent(model, NAME, &[a, b])?;
    let ab = model.join(a, b);
    let amb = model.meet(a, b);
    require(NAME, model.is_conormal(b), || format!("{b} conormal"))?;
    require(NAME, normal_to(model, a, &ab), || format!("{a} ◁ {ab}"))?;
    let mut r = TheoremReport::new(NAME);
    r.hyp(format!("{b} conormal"), true);
    r.hyp(format!("{a} ◁ {ab}"), true);
    let meet_normal = normal_to(model, &amb, b);
    r.check(format!("{amb} ◁ {b}"), meet_normal, "");
    if !meet_normal {
        return Ok(r);
    }
    let ib = model.embedding(b)?;
    let ij = model.embedding(&ab)?;
    let p1 = model.projection(&model.inverse_image(&ib, &amb)?)?;
    let p2 = model.projection(&model.inverse_image(&ij, a)?)?;
    let z = Zigzag::new(model, vec![(p1, Dir::Bwd), (ib, Dir::Fwd), (ij, Dir::Bwd), (p2, Dir::Fwd)])?;
    certify(model, &mut r, "B/(A∧B) → (A∨B)/A", &z);
    let lhs = subquotient(model, b, &amb)?.object;
    let rhs = subquotient(model, &ab, a)?.object;
    r.check("end nodes are the subquotients", *z.first() == lhs && *z.last() == rhs, "");
    cardinality_check(model, &mut r, "|B/(A∧B)| = |(A∨B)/A|", &lhs, &rhs);
    Ok(r)
}

/// `G/R ≅ (G/N)/S` with `R = π_N⁻¹S`, for `N` normal and `S` a subobject of
/// `G/N`. The clauses that apply to `S` are recorded in the report.
pub fn double_quotient<M: FormModel>(model: &M, n: &M::Sub, s: &M::Sub) -> Result<TheoremReport> {
    const NAME: &str = "double-quotient";
    require(NAME, model.is_normal(n), || format!("{n} normal"))?;
    let pn = model.projection(n)?;
    if model.parent(s) != model.cod(&pn) {
        return Err(FormError::hypothesis(NAME, format!("{s} is not a subobject of the quotient by {n}")));
    }
    let mut r = TheoremReport::new(NAME);
    r.hyp(format!("{n} normal"), true);
    let rr = model.inverse_image(&pn, s)?;
    r.check(format!("{n} ⊆ R = {rr} and π_N R = {s}"), model.leq(n, &rr) && model.direct_image(&pn, &rr)? == *s, "");
    if model.is_conormal(s) {
        let co = crate::engine::coquotient(model, n, &rr);
        match co {
            Ok(co) => {
                let is = model.embedding(s)?;
                let z = Zigzag::new(model, vec![(co.inner.clone(), Dir::Fwd), (is, Dir::Bwd)])?;
                certify(model, &mut r, "N\\R → S/1", &z);
            }
            Err(e) => r.check(format!("{rr} conormal to {n}"), false, e.to_string()),
        }
    }
    let r_normal = model.is_normal(&rr);
    r.check(
        "S normal iff R normal",
        model.is_normal(s) == r_normal,
        format!("R = {rr} {}normal", if r_normal { "" } else { "not " }),
    );
    if model.is_normal(s) && r_normal {
        let pr = model.projection(&rr)?;
        let ps = model.projection(s)?;
        let z = Zigzag::new(model, vec![(pr, Dir::Bwd), (pn, Dir::Fwd), (ps, Dir::Fwd)])?;
        certify(model, &mut r, "G/R → (G/N)/S", &z);
    }
    Ok(r)
}

/// For `Ker f ⊆ W ⊆ X` with `X` conormal: `W ◁ X` iff `fW ◁ fX`, and then
/// `X/W ≅ fX/fW`.
pub fn image_theorem<M: FormModel>(model: &M, f: &M::Mor, w: &M::Sub, x: &M::Sub) -> Result<TheoremReport> {
    const NAME: &str = "image";
    same_parent(model, NAME, &[w, x])?;
    if model.parent(x) != model.dom(f) {
        return Err(FormError::hypothesis(NAME, format!("{x} is not a subobject of the domain")));
    }
    let k = model.kernel(f);
    require(NAME, model.leq(&k, w), || format!("Ker f = {k} ⊆ {w}"))?;
    require(NAME, model.leq(w, x), || format!("{w} ⊆ {x}"))?;
    require(NAME, model.is_conormal(x), || format!("{x} conormal"))?;
    let mut r = TheoremReport::new(NAME);
    r.hyp(format!("Ker f = {k} ⊆ {w} ⊆ {x}"), true);
    r.hyp(format!("{x} conormal"), true);
    let fw = model.direct_image(f, w)?;
    let fx = model.direct_image(f, x)?;
    let before = normal_to(model, w, x);
    let after = normal_to(model, &fw, &fx);
    r.check("W ◁ X iff fW ◁ fX", before == after, format!("{w} ◁ {x} is {before}, {fw} ◁ {fx} is {after}"));
    if before && after {
        let ix = model.embedding(x)?;
        let ifx = model.embedding(&fx)?;
        let p1 = model.projection(&model.inverse_image(&ix, w)?)?;
        let p2 = model.projection(&model.inverse_image(&ifx, &fw)?)?;
        let z = Zigzag::new(
            model,
            vec![(p1, Dir::Bwd), (ix, Dir::Fwd), (f.clone(), Dir::Fwd), (ifx, Dir::Bwd), (p2, Dir::Fwd)],
        )?;
        certify(model, &mut r, "X/W → fX/fW", &z);
    }
    Ok(r)
}

/// Zassenhaus: for `S′ ◁ S` and `T′ ◁ T`, both
/// `(S′∨(S∧T))/(S′∨(S∧T′))` and `((S∧T)∨T′)/((S′∧T)∨T′)` are isomorphic to
/// `(S∧T)/((S′∧T)∨(S∧T′))`.
pub fn butterfly<M: FormModel>(model: &M, s1: &M::Sub, s: &M::Sub, t1: &M::Sub, t: &M::Sub) -> Result<TheoremReport> {
    const NAME: &str = "butterfly";
    same_parent(model, NAME, &[s1, s, t1, t])?;
    for x in [s1, s, t1, t] {
        require(NAME, model.is_conormal(x), || format!("{x} conormal"))?;
    }
    require(NAME, normal_to(model, s1, s), || format!("{s1} ◁ {s}"))?;
    require(NAME, normal_to(model, t1, t), || format!("{t1} ◁ {t}"))?;
    let st = model.meet(s, t);
    let u = model.join(s1, &st);
    let u1 = model.join(s1, &model.meet(s, t1));
    let v = model.join(&st, t1);
    let v1 = model.join(&model.meet(s1, t), t1);
    require(NAME, model.is_conormal(&u), || format!("{u} conormal"))?;
    require(NAME, model.is_conormal(&v), || format!("{v} conormal"))?;

    let mut r = TheoremReport::new(NAME);
    r.hyp(format!("{s1} ◁ {s}"), true);
    r.hyp(format!("{t1} ◁ {t}"), true);
    r.hyp("all four conormal", true);
    r.hyp(format!("{u} and {v} conormal"), true);
    let left_normal = normal_to(model, &u1, &u);
    let right_normal = normal_to(model, &v1, &v);
    r.check(format!("{u1} ◁ {u}"), left_normal, "");
    r.check(format!("{v1} ◁ {v}"), right_normal, "");
    if !(left_normal && right_normal) {
        return Ok(r);
    }

    let is = model.embedding(s)?;
    let it = model.embedding(t)?;
    let ps = model.projection(&model.inverse_image(&is, s1)?)?;
    let pt = model.projection(&model.inverse_image(&it, t1)?)?;
    let (_, a, b) = embedding_diamond(model, &is, &it)?;
    let fac_f = model.factorize(&model.compose(&ps, &a)?)?;
    let fac_g = model.factorize(&model.compose(&pt, &b)?)?;
    let mf = model.compose(&fac_f.embedding, &fac_f.iso)?;
    let mg = model.compose(&fac_g.embedding, &fac_g.iso)?;
    let (_, x, y) = projection_diamond(model, &fac_f.projection, &fac_g.projection)?;

    let iu = model.embedding(&u)?;
    let pu = model.projection(&model.inverse_image(&iu, &u1)?)?;
    let iv = model.embedding(&v)?;
    let pv = model.projection(&model.inverse_image(&iv, &v1)?)?;
    let left = Zigzag::new(
        model,
        vec![(pu, Dir::Bwd), (iu, Dir::Fwd), (is, Dir::Bwd), (ps, Dir::Fwd), (mf, Dir::Bwd), (x, Dir::Fwd)],
    )?;
    let right = Zigzag::new(
        model,
        vec![(pv, Dir::Bwd), (iv, Dir::Fwd), (it, Dir::Bwd), (pt, Dir::Fwd), (mg, Dir::Bwd), (y, Dir::Fwd)],
    )?;
    certify(model, &mut r, "left wing → body", &left);
    certify(model, &mut r, "right wing → body", &right);

    let body = model.join(&model.meet(s1, t), &model.meet(s, t1));
    match subquotient(model, &st, &body) {
        Ok(sq) => {
            cardinality_check(model, &mut r, "|left wing| = |body|", left.first(), &sq.object);
            cardinality_check(model, &mut r, "|right wing| = |body|", right.first(), &sq.object);
            cardinality_check(model, &mut r, "|middle node| = |body|", left.last(), &sq.object);
        }
        Err(e) => r.check(format!("{body} ◁ {st}"), false, e.to_string()),
    }
    Ok(r)
}

/// Which side condition licenses the modular law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModularBranch {
    /// `Y` normal and `Z` conormal.
    NormalY,
    /// `Y` conormal and `X` normal.
    ConormalY,
}

/// `X ∨ (Y ∧ Z) = (X ∨ Y) ∧ Z` for `X ⊆ Z` under either side condition.
pub fn restricted_modular_law<M: FormModel>(model: &M, x: &M::Sub, y: &M::Sub, z: &M::Sub) -> Result<TheoremReport> {
    const NAME: &str = "modular-law";
    same_parent(model, NAME, &[x, y, z])?;
    require(NAME, model.leq(x, z), || format!("{x} ⊆ {z}"))?;
    let branch = if model.is_normal(y) && model.is_conormal(z) {
        ModularBranch::NormalY
    } else if model.is_conormal(y) && model.is_normal(x) {
        ModularBranch::ConormalY
    } else {
        return Err(FormError::hypothesis(
            NAME,
            format!("neither ({y} normal and {z} conormal) nor ({y} conormal and {x} normal)"),
        ));
    };
    let mut r = TheoremReport::new(NAME);
    r.hyp(format!("{x} ⊆ {z}"), true);
    r.hyp(
        match branch {
            ModularBranch::NormalY => format!("{y} normal and {z} conormal"),
            ModularBranch::ConormalY => format!("{y} conormal and {x} normal"),
        },
        true,
    );
    let lhs = model.join(x, &model.meet(y, z));
    let rhs = model.meet(&model.join(x, y), z);
    r.check("X∨(Y∧Z) = (X∨Y)∧Z", lhs == rhs, format!("{lhs} = {rhs}"));
    Ok(r)
}

/// The first triple `X ⊆ Z` of subobjects of `g` (in enumeration order)
/// violating the unrestricted modular law.
pub fn modular_counterexample<M: FormModel>(model: &M, g: &M::Obj) -> Option<(M::Sub, M::Sub, M::Sub)> {
    let subs = model.subobjects(g);
    for z in &subs {
        for x in subs.iter().filter(|x| model.leq(x, z)) {
            for y in &subs {
                if model.join(x, &model.meet(y, z)) != model.meet(&model.join(x, y), z) {
                    return Some((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    None
}

/// Builds the zigzag `A/B ← A/1 → G → G/B ← (π_B A)/1` and induces the
/// canonical isomorphism between the subquotient and the coquotient, when
/// both are defined.
pub fn quotient_coquotient<M: FormModel>(model: &M, a: &M::Sub, b: &M::Sub) -> Result<TheoremReport> {
    const NAME: &str = "quotient-coquotient";
    same_parent(model, NAME, &[a, b])?;
    let sq = subquotient(model, a, b).map_err(|_| FormError::hypothesis(NAME, format!("{b} ◁ {a}")))?;
    let co = crate::engine::coquotient(model, b, a)
        .map_err(|_| FormError::hypothesis(NAME, format!("{a} conormal to {b}")))?;
    let mut r = TheoremReport::new(NAME);
    r.hyp(format!("{b} ◁ {a}"), true);
    r.hyp(format!("{a} conormal to {b}"), true);
    let z = Zigzag::new(
        model,
        vec![(sq.inner, Dir::Bwd), (sq.outer, Dir::Fwd), (co.outer, Dir::Fwd), (co.inner, Dir::Bwd)],
    )?;
    certify(model, &mut r, "A/B → B\\A", &z);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::GroupModel;
    use crate::group::GroupTable;

    #[test]
    fn hypothesis_errors_name_the_hypothesis() {
        let m = GroupModel::new();
        let s3 = m.object(GroupTable::symmetric(3));
        let a = m.sub(&s3, &[0, 1]).unwrap();
        let b = m.sub(&s3, &[0, 2]).unwrap();
        let err = diamond_iso(&m, &a, &b).unwrap_err();
        assert_eq!(err.to_string(), "hypothesis-violation: diamond: {0,1} ◁ {0,1,2,3,4,5}");
    }

    #[test]
    fn report_display() {
        let m = GroupModel::new();
        let s3 = m.object(GroupTable::symmetric(3));
        let a = m.sub(&s3, &[0, 4, 5]).unwrap();
        let b = m.sub(&s3, &[0, 1]).unwrap();
        let r = diamond_iso(&m, &a, &b).unwrap();
        assert!(r.passed(), "{r}");
        let text = r.to_string();
        assert!(text.starts_with("diamond: OK\n"));
        assert!(text.contains("oracle: OK ({0->0, 1->1})"));
    }
}
