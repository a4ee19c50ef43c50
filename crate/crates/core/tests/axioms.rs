use formchase_core::axioms::{check_axioms, check_observations, duality_selftest, Scope, WithoutProjection};
use formchase_core::{catalogue, Dual, FormModel, GroupModel, GroupTable, RingModel, RingTable};

fn group_scope(
    m: &GroupModel,
    names: &[&str],
) -> Scope<std::sync::Arc<GroupTable>, formchase_core::Morphism<GroupTable>> {
    let objects = catalogue::small_groups(8)
        .into_iter()
        .filter(|(n, _)| names.contains(&n.as_str()))
        .map(|(n, g)| {
            let x = m.object(g);
            m.name(&x, &n)
        })
        .collect();
    Scope::new("grp", objects)
}

#[test]
fn small_group_scope_passes() {
    let m = GroupModel::new();
    let scope = group_scope(&m, &["Z1", "Z2", "Z4", "K4", "S3"]);
    let r = check_axioms(&m, &scope, &[1, 2, 3, 4, 5]);
    assert!(r.passed(), "{r}");
    assert_eq!(r.sections.len(), 5);
    let obs = check_observations(&m, &scope);
    assert!(obs.passed(), "{obs}");
}

#[test]
fn removed_projection_is_an_axiom_three_violation() {
    let m = GroupModel::new();
    let scope = group_scope(&m, &["Z1", "Z2", "Z4", "K4", "S3"]).with_closure_depth(0);
    let s3 = scope.objects.iter().find(|x| x.order() == 6).unwrap().clone();
    let a3 = m.sub(&s3, &[0, 4, 5]).unwrap();
    let faulty = WithoutProjection { inner: &m, removed: a3 };
    let r = check_axioms(&faulty, &scope, &[3]);
    assert!(!r.passed());
    let law = &r.sections[0].laws[1];
    assert_eq!(law.failures, 1);
    assert_eq!(law.witnesses, vec!["π missing for normal (S3, {0,4,5})".to_string()]);

    let d = duality_selftest(&faulty, &scope);
    assert!(d.verdicts_match(), "{d}");
    let dual_law = &d.dual.section("axiom 3").unwrap().laws[0];
    assert_eq!(dual_law.witnesses, vec!["ι missing for conormal (S3, {0,4,5})".to_string()]);
}

#[test]
fn ring_scope_passes_with_its_dual() {
    let m = RingModel::new();
    let objects = [
        ("Zero", RingTable::zero()),
        ("Z2", RingTable::cyclic(2)),
        ("Z6", RingTable::cyclic(6)),
        ("Z2xZ2", RingTable::product(&RingTable::cyclic(2), &RingTable::cyclic(2))),
    ]
    .into_iter()
    .map(|(n, r)| {
        let x = m.object(r);
        m.name(&x, n)
    })
    .collect();
    let scope = Scope::new("ring", objects);
    let r = check_axioms(&m, &scope, &[1, 2, 3, 4, 5]);
    assert!(r.passed(), "{r}");
    let d = duality_selftest(&m, &scope);
    assert!(d.passed(), "{d}");
    assert!(check_observations(&Dual(&m), &scope).passed());
}

#[test]
fn explicit_morphism_lists() {
    let m = GroupModel::new();
    let z4 = m.object(GroupTable::cyclic(4));
    let z2 = m.object(GroupTable::cyclic(2));
    let parity = m.hom(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
    let scope =
        Scope::new("parity", vec![z4.clone(), z2.clone()]).with_morphisms(vec![parity.clone()]).with_closure_depth(0);
    let ex = scope.expand(&m);
    assert_eq!(ex.morphism_count(), 3);
    let r = check_axioms(&m, &scope, &[1, 2, 4]);
    assert!(r.passed(), "{r}");
    let dsub = m.subobjects(&z4);
    let images: Vec<String> = dsub.iter().map(|a| m.direct_image(&parity, a).unwrap().to_string()).collect();
    assert_eq!(images, ["{0}", "{0}", "{0,1}"]);
}
