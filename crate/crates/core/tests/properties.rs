use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use formchase_core::axioms::{check_axioms, Scope};
use formchase_core::engine::{decide, induces_homomorphism, normal_to, relation_oracle, subquotient};
use formchase_core::{
    catalogue, chase, dualize, Dir, Dual, FormModel, GroupModel, GroupTable, Morphism, Numbering, Zigzag,
};

/// The catalogue groups of order at most 8 with every homomorphism between
/// them, as raw tables and maps so each test can build its own model.
struct Universe {
    groups: Vec<GroupTable>,
    homs: Vec<Vec<Vec<Vec<usize>>>>,
}

fn universe() -> &'static Universe {
    static U: OnceLock<Universe> = OnceLock::new();
    U.get_or_init(|| {
        let groups: Vec<GroupTable> = catalogue::small_groups(8).into_iter().map(|(_, g)| g).collect();
        let homs = groups.iter().map(|a| groups.iter().map(|b| a.homs(b)).collect()).collect();
        Universe { groups, homs }
    })
}

/// A zigzag description: start group, then (next group, direction, hom choice).
#[derive(Debug, Clone)]
struct Plan {
    start: usize,
    steps: Vec<(usize, bool, usize)>,
}

fn plan(max_len: usize) -> impl Strategy<Value = Plan> {
    let k = universe().groups.len();
    (0..k, prop::collection::vec((0..k, any::<bool>(), any::<usize>()), 1..=max_len))
        .prop_map(|(start, steps)| Plan { start, steps })
}

fn build(m: &GroupModel, p: &Plan) -> Zigzag<Arc<GroupTable>, Morphism<GroupTable>> {
    let u = universe();
    let obj = |i: usize| m.object(u.groups[i].clone());
    let mut cur = p.start;
    let mut steps = Vec::new();
    for &(next, fwd, pick) in &p.steps {
        let (dir, list, dom, cod) =
            if fwd { (Dir::Fwd, &u.homs[cur][next], cur, next) } else { (Dir::Bwd, &u.homs[next][cur], next, cur) };
        let map = list[pick % list.len()].clone();
        steps.push((m.hom(&obj(dom), &obj(cod), map).unwrap(), dir));
        cur = next;
    }
    Zigzag::new(m, steps).unwrap()
}

/// A homomorphism between two catalogue groups with a subgroup on each side.
fn hom_with_subs() -> impl Strategy<Value = (usize, usize, usize, usize, usize)> {
    let k = universe().groups.len();
    (0..k, 0..k, any::<usize>(), any::<usize>(), any::<usize>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn images_form_a_galois_pair((a, b, pick, sa, sb) in hom_with_subs()) {
        let u = universe();
        let m = GroupModel::new();
        let (x, y) = (m.object(u.groups[a].clone()), m.object(u.groups[b].clone()));
        let maps = &u.homs[a][b];
        let f = m.hom(&x, &y, maps[pick % maps.len()].clone()).unwrap();
        let xs = m.subobjects(&x);
        let ys = m.subobjects(&y);
        let s = &xs[sa % xs.len()];
        let t = &ys[sb % ys.len()];
        let fs = m.direct_image(&f, s).unwrap();
        let ft = m.inverse_image(&f, t).unwrap();
        prop_assert_eq!(m.leq(&fs, t), m.leq(s, &ft));
        prop_assert!(m.leq(s, &m.inverse_image(&f, &fs).unwrap()));
        prop_assert!(m.leq(&m.direct_image(&f, &ft).unwrap(), t));
        // Forward then backward adds exactly the kernel.
        prop_assert_eq!(m.inverse_image(&f, &fs).unwrap(), m.join(s, &m.kernel(&f)));
        prop_assert_eq!(m.direct_image(&f, &ft).unwrap(), m.meet(t, &m.image(&f)));
    }

    #[test]
    fn dual_of_dual_answers_like_the_model((a, b, pick, sa, sb) in hom_with_subs()) {
        let u = universe();
        let m = GroupModel::new();
        let dd = dualize(dualize(&m));
        let (x, y) = (m.object(u.groups[a].clone()), m.object(u.groups[b].clone()));
        let maps = &u.homs[a][b];
        let f = m.hom(&x, &y, maps[pick % maps.len()].clone()).unwrap();
        let xs = m.subobjects(&x);
        prop_assert_eq!(&dd.subobjects(&x), &xs);
        let s = &xs[sa % xs.len()];
        let t = &xs[sb % xs.len()];
        prop_assert_eq!(dd.leq(s, t), m.leq(s, t));
        prop_assert_eq!(dd.meet(s, t), m.meet(s, t));
        prop_assert_eq!(dd.direct_image(&f, s), m.direct_image(&f, s));
        prop_assert_eq!(dd.is_normal(s), m.is_normal(s));
        prop_assert_eq!(dd.projection(s), m.projection(s));
        prop_assert_eq!(dd.kernel(&f), m.kernel(&f));
        prop_assert_eq!(dd.element_map(&f), m.element_map(&f));
    }

    #[test]
    fn dual_swaps_the_vocabulary((a, b, pick, sa, sb) in hom_with_subs()) {
        let u = universe();
        let m = GroupModel::new();
        let d = Dual(&m);
        let (x, y) = (m.object(u.groups[a].clone()), m.object(u.groups[b].clone()));
        let maps = &u.homs[a][b];
        let f = m.hom(&x, &y, maps[pick % maps.len()].clone()).unwrap();
        let xs = m.subobjects(&x);
        let ys = m.subobjects(&y);
        let s = &xs[sa % xs.len()];
        let t = &ys[sb % ys.len()];
        prop_assert_eq!(d.dom(&f), y.clone());
        prop_assert_eq!(d.leq(s, &m.top(&x)), m.leq(&m.top(&x), s));
        prop_assert_eq!(d.direct_image(&f, t).unwrap(), m.inverse_image(&f, t).unwrap());
        prop_assert_eq!(d.is_normal(s), m.is_conormal(s));
        prop_assert_eq!(d.kernel(&f), m.image(&f));
        prop_assert_eq!(d.is_embedding(&f), m.is_projection(&f));
    }

    #[test]
    fn subquotient_orders_divide((g, sa, sb) in (0..universe().groups.len(), any::<usize>(), any::<usize>())) {
        let m = GroupModel::new();
        let x = m.object(universe().groups[g].clone());
        let subs = m.subobjects(&x);
        let a = &subs[sa % subs.len()];
        let b = &subs[sb % subs.len()];
        match subquotient(&m, a, b) {
            Ok(q) => {
                prop_assert!(normal_to(&m, b, a));
                prop_assert_eq!(m.cardinality(&q.object).unwrap() * b.elems().len(), a.elems().len());
            }
            Err(e) => {
                prop_assert!(!normal_to(&m, b, a));
                prop_assert_eq!(e.kind(), "normality-violation");
            }
        }
    }

    #[test]
    fn opposite_is_an_involution(p in plan(5)) {
        let m = GroupModel::new();
        let z = build(&m, &p);
        prop_assert_eq!(z.opposite().opposite(), z.clone());
        let op = z.opposite();
        prop_assert_eq!(op.first(), z.last());
    }

    #[test]
    fn chasing_the_opposite_reverses_directions(p in plan(4), pick in any::<usize>()) {
        let m = GroupModel::new();
        let z = build(&m, &p);
        let subs = m.subobjects(z.last());
        let s = &subs[pick % subs.len()];
        let back = chase(&m, &z, s, Dir::Bwd).unwrap();
        let fwd_op = chase(&m, &z.opposite(), s, Dir::Fwd).unwrap();
        prop_assert_eq!(back.result(), fwd_op.result());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn induction_agrees_with_the_oracle(p in plan(5)) {
        let m = GroupModel::new();
        let z = build(&m, &p);
        let oracle = relation_oracle(&m, &z).unwrap();
        let induced = induces_homomorphism(&m, &z);
        prop_assert_eq!(induced, oracle.is_total_function());
        let d = decide(&m, &z).unwrap();
        match d.morphism {
            Some(h) => {
                prop_assert!(induced);
                let graph = oracle.relation.as_map();
                prop_assert_eq!(graph.as_deref(), Some(h.map()));
                // The induced morphism transports subobjects as the zigzag does.
                for s in m.subobjects(z.first()) {
                    let chased = chase(&m, &z, &s, Dir::Fwd).unwrap();
                    prop_assert_eq!(chased.result(), &m.direct_image(&h, &s).unwrap());
                }
            }
            None => prop_assert!(!induced && d.obstruction.is_some()),
        }
    }

    #[test]
    fn opposite_inductions_are_inverse(p in plan(4)) {
        let m = GroupModel::new();
        let z = build(&m, &p);
        let op = z.opposite();
        if let (Some(h), Some(g)) = (decide(&m, &z).unwrap().morphism, decide(&m, &op).unwrap().morphism) {
            prop_assert_eq!(m.compose(&g, &h).unwrap(), m.identity(z.first()));
            prop_assert_eq!(m.compose(&h, &g).unwrap(), m.identity(z.last()));
        }
    }

    #[test]
    fn induced_morphism_ignores_coset_numbering(p in plan(4)) {
        let canonical = GroupModel::new();
        let reversed = GroupModel::with_numbering(Numbering::Reversed);
        let a = decide(&canonical, &build(&canonical, &p)).unwrap().morphism;
        let b = decide(&reversed, &build(&reversed, &p)).unwrap().morphism;
        prop_assert_eq!(a.map(|h| h.map().to_vec()), b.map(|h| h.map().to_vec()));
    }

    #[test]
    fn pyramids_commute(p in plan(3)) {
        let m = GroupModel::new();
        let z = build(&m, &p);
        let pyr = formchase_core::Pyramid::build(&m, &z).unwrap();
        prop_assert!(pyr.verify(&m).is_ok());
        prop_assert_eq!(pyr.node_count(), (z.len() + 1) * (z.len() + 2) / 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn closure_never_flips_a_verdict(picks in prop::collection::btree_set(0..6usize, 1..=3)) {
        let m = GroupModel::new();
        let pool = catalogue::axiom_groups();
        let objects: Vec<_> = picks.iter().map(|&i| m.object(pool[i].1.clone())).collect();
        let narrow = check_axioms(&m, &Scope::new("narrow", objects.clone()).with_closure_depth(0), &[1, 2, 3, 4, 5]);
        let wide = check_axioms(&m, &Scope::new("wide", objects).with_closure_depth(1), &[1, 2, 3, 4, 5]);
        prop_assert!(narrow.passed());
        prop_assert!(wide.passed());
        prop_assert_eq!(narrow.to_string().replace("narrow", "wide").lines().count(), wide.to_string().lines().count());
    }
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let m = GroupModel::new();
        let objects = catalogue::axiom_groups().into_iter().take(5).map(|(n, g)| {
            let x = m.object(g);
            m.name(&x, &n)
        });
        check_axioms(&m, &Scope::new("grp", objects.collect()), &[1, 2, 3, 4, 5]).to_string()
    };
    assert_eq!(run(), run());
}
