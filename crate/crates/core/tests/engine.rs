use std::sync::Arc;

use formchase_core::engine::{
    conormal_to, coquotient, decide, embedding_diamond, induced_homomorphism, induces_homomorphism, node_count,
    normal_to, projection_diamond, relation_oracle, subquotient, Construction, Orientation,
};
use formchase_core::{chase, Dir, FormError, FormModel, GroupModel, GroupTable, Morphism, Pyramid, Zigzag};

type Z = Zigzag<Arc<GroupTable>, Morphism<GroupTable>>;

fn parity(m: &GroupModel) -> Morphism<GroupTable> {
    let z4 = m.object(GroupTable::cyclic(4));
    let z2 = m.object(GroupTable::cyclic(2));
    m.hom(&z4, &z2, vec![0, 1, 0, 1]).unwrap()
}

/// `π bwd, ι_B fwd, ι_{A∨B} bwd, π fwd` from `B/(A∧B)` to `(A∨B)/A`.
fn diamond_zigzag(m: &GroupModel, a: &[usize], b: &[usize]) -> Z {
    let s3 = m.object(GroupTable::symmetric(3));
    let a = m.sub(&s3, a).unwrap();
    let b = m.sub(&s3, b).unwrap();
    let ib = m.embedding(&b).unwrap();
    let j = m.join(&a, &b);
    let ij = m.embedding(&j).unwrap();
    let p1 = m.projection(&m.inverse_image(&ib, &m.meet(&a, &b)).unwrap()).unwrap();
    let p2 = m.projection(&m.inverse_image(&ij, &a).unwrap()).unwrap();
    Zigzag::new(m, vec![(p1, Dir::Bwd), (ib, Dir::Fwd), (ij, Dir::Bwd), (p2, Dir::Fwd)]).unwrap()
}

#[test]
fn chase_traces() {
    let m = GroupModel::new();
    let f = parity(&m);
    let z2 = m.cod(&f);
    let z = Zigzag::new(&m, vec![(f.clone(), Dir::Fwd), (m.identity(&z2), Dir::Bwd)]).unwrap();
    let s = m.sub(&m.dom(&f), &[0, 2]).unwrap();
    let trace = chase(&m, &z, &s, Dir::Fwd).unwrap();
    let shown: Vec<String> = trace.subs.iter().map(|s| s.to_string()).collect();
    assert_eq!(shown, ["{0,2}", "{0}", "{0}"]);

    let single = Zigzag::new(&m, vec![(f.clone(), Dir::Fwd)]).unwrap();
    for t in m.subobjects(&m.dom(&f)) {
        let there = chase(&m, &single, &t, Dir::Fwd).unwrap();
        let back = chase(&m, &single, there.result(), Dir::Bwd).unwrap();
        assert_eq!(*back.result(), m.join(&t, &m.kernel(&f)));
    }

    let id = Zigzag::identity(&m, &m.dom(&f));
    assert_eq!(chase(&m, &id, &s, Dir::Fwd).unwrap().subs, vec![s.clone(), s.clone()]);

    let wrong = m.top(&z2);
    assert!(matches!(chase(&m, &z, &wrong, Dir::Fwd), Err(FormError::ParentMismatch { .. })));
}

#[test]
fn zigzag_endpoints_are_checked() {
    let m = GroupModel::new();
    let f = parity(&m);
    let err = Zigzag::new(&m, vec![(f.clone(), Dir::Fwd), (f.clone(), Dir::Fwd)]).unwrap_err();
    assert_eq!(err.kind(), "invalid-zigzag");
    assert_eq!(Zigzag::<Arc<GroupTable>, Morphism<GroupTable>>::new(&m, vec![]).unwrap_err().kind(), "invalid-zigzag");
    let z = Zigzag::new(&m, vec![(f.clone(), Dir::Bwd)]).unwrap();
    assert_eq!(*z.first(), m.cod(&f));
    assert_eq!(z.opposite().steps()[0].1, Dir::Fwd);
}

#[test]
fn single_step_pyramid() {
    let m = GroupModel::new();
    let f = parity(&m);
    let z = Zigzag::new(&m, vec![(f.clone(), Dir::Fwd)]).unwrap();
    let pyr = Pyramid::build(&m, &z).unwrap();
    pyr.verify(&m).unwrap();
    assert_eq!(pyr.node_count(), 3);
    assert_eq!(pyr.construction((0, 1)), Some(Construction::BaseForward));
    let up = pyr.left_edge((0, 1));
    assert_eq!(up.orientation, Orientation::TowardApex);
    assert_eq!(m.kernel(&up.mor).to_string(), "{0,2}");
    assert_eq!(pyr.right_edge((0, 1)).orientation, Orientation::TowardBase);
    assert_eq!(induced_homomorphism(&m, &z).unwrap(), f);
}

#[test]
fn pyramid_node_counts() {
    for n in 1..6 {
        assert_eq!(node_count(n), (1..=n + 1).sum::<usize>());
    }
    let m = GroupModel::new();
    let z = diamond_zigzag(&m, &[0, 4, 5], &[0, 1]);
    let pyr = Pyramid::build(&m, &z).unwrap();
    assert_eq!(pyr.node_count(), 15);
    pyr.verify(&m).unwrap();
}

#[test]
fn top_chases_to_top_up_the_left_flank() {
    let m = GroupModel::new();
    let z = diamond_zigzag(&m, &[0, 4, 5], &[0, 1]);
    let pyr = Pyramid::build(&m, &z).unwrap();
    let flank: Vec<_> = (0..=4).map(|q| (0, q)).collect();
    for k in 1..flank.len() {
        let top = m.top(pyr.node((0, 0)));
        let got = pyr.chase_path(&m, &flank[..=k], &top).unwrap();
        assert!(m.is_top(&got), "node {:?}", flank[k]);
    }
}

#[test]
fn induction_examples() {
    let m = GroupModel::new();
    let f = parity(&m);
    let id = Zigzag::identity(&m, &m.dom(&f));
    assert!(induces_homomorphism(&m, &id));
    assert_eq!(induced_homomorphism(&m, &id).unwrap(), m.identity(&m.dom(&f)));

    let back = Zigzag::new(&m, vec![(f.clone(), Dir::Bwd)]).unwrap();
    assert!(!induces_homomorphism(&m, &back));
    let err = induced_homomorphism(&m, &back).unwrap_err();
    assert_eq!(err.to_string(), "not-inducible: forward chase of 1 = {0,2}");

    let z = diamond_zigzag(&m, &[0, 4, 5], &[0, 1]);
    assert!(induces_homomorphism(&m, &z));
    let d = decide(&m, &z).unwrap();
    let h = d.morphism.unwrap();
    assert!(m.is_isomorphism(&h));
    assert_eq!(m.cardinality(&m.dom(&h)), Some(2));
    assert_eq!(m.cardinality(&m.cod(&h)), Some(2));
    let oracle = relation_oracle(&m, &z).unwrap();
    assert!(oracle.is_total_function());
    assert_eq!(oracle.relation.as_map().unwrap(), h.map());
    assert_eq!(oracle.relation.to_string(), "{0->0, 1->1}");
}

#[test]
fn oracle_examples() {
    let m = GroupModel::new();
    let f = parity(&m);
    let fwd = relation_oracle(&m, &Zigzag::new(&m, vec![(f.clone(), Dir::Fwd)]).unwrap()).unwrap();
    assert!(fwd.is_total_function());
    assert_eq!(fwd.is_hom, Some(true));
    assert_eq!(fwd.relation.as_map().unwrap(), vec![0, 1, 0, 1]);
    let bwd = relation_oracle(&m, &Zigzag::new(&m, vec![(f, Dir::Bwd)]).unwrap()).unwrap();
    assert!(!bwd.is_function);
    assert!(bwd.is_total);
    assert_eq!(bwd.relation.related(0).iter().collect::<Vec<_>>(), vec![0, 2]);
    assert_eq!(bwd.is_hom, None);
}

#[test]
fn diamonds_satisfy_the_lemma_identity() {
    let m = GroupModel::new();
    let d4 = m.object(GroupTable::dihedral(4));
    let normals: Vec<_> = m.subobjects(&d4).into_iter().filter(|s| m.is_normal(s)).collect();
    for a in &normals {
        for b in &normals {
            let n = m.projection(a).unwrap();
            let r = m.projection(b).unwrap();
            let (p, x, y) = projection_diamond(&m, &n, &r).unwrap();
            assert_eq!(m.compose(&x, &n).unwrap(), p);
            assert_eq!(m.compose(&y, &r).unwrap(), p);
            for s in m.subobjects(&m.cod(&n)) {
                let lhs = m.inverse_image(&y, &m.direct_image(&x, &s).unwrap()).unwrap();
                let rhs = m.direct_image(&r, &m.inverse_image(&n, &s).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
    let subs = m.subobjects(&d4);
    for a in &subs {
        for b in &subs {
            let (e, x, y) = embedding_diamond(&m, &m.embedding(a).unwrap(), &m.embedding(b).unwrap()).unwrap();
            assert_eq!(m.image(&e), m.meet(a, b));
            assert!(m.is_embedding(&x) && m.is_embedding(&y));
        }
    }
}

#[test]
fn normality_relation_examples() {
    let m = GroupModel::new();
    let s3 = m.object(GroupTable::symmetric(3));
    let sub = |e: &[usize]| m.sub(&s3, e).unwrap();
    assert!(normal_to(&m, &sub(&[0]), &sub(&[0, 1])));
    assert!(!normal_to(&m, &sub(&[0, 1]), &m.top(&s3)));
    assert!(normal_to(&m, &m.bottom(&s3), &m.top(&s3)));
    assert!(normal_to(&m, &sub(&[0, 1]), &sub(&[0, 1])));
    assert!(!normal_to(&m, &sub(&[0, 1]), &sub(&[0, 4, 5])));
    assert!(conormal_to(&m, &sub(&[0, 4, 5]), &m.top(&s3)));
    assert!(!conormal_to(&m, &sub(&[0, 1]), &m.top(&s3)));
}

#[test]
fn subquotient_examples() {
    let m = GroupModel::new();
    let s3 = m.object(GroupTable::symmetric(3));
    let a3 = m.sub(&s3, &[0, 4, 5]).unwrap();
    let b = m.sub(&s3, &[0, 1]).unwrap();

    let a_over_1 = subquotient(&m, &b, &m.bottom(&s3)).unwrap();
    assert_eq!(m.cardinality(&a_over_1.object), Some(2));
    let again = subquotient(&m, &m.top(&a_over_1.object), &m.bottom(&a_over_1.object)).unwrap();
    assert_eq!(again.object, a_over_1.object);

    let sign = subquotient(&m, &m.top(&s3), &a3).unwrap();
    assert_eq!(m.cardinality(&sign.object), Some(2));
    assert_eq!(sign.inner.map(), &[0, 1, 1, 1, 0, 0]);

    let trivial = subquotient(&m, &a3, &a3).unwrap();
    assert_eq!(m.cardinality(&trivial.object), Some(1));

    let err = subquotient(&m, &m.top(&s3), &b).unwrap_err();
    assert_eq!(err.kind(), "normality-violation");

    let co = coquotient(&m, &a3, &m.top(&s3)).unwrap();
    assert_eq!(m.cardinality(&co.object), Some(2));
    assert_eq!(coquotient(&m, &b, &m.top(&s3)).unwrap_err().kind(), "normality-violation");
}

#[test]
fn ring_pyramids_never_assume_missing_embeddings() {
    use formchase_core::{RingModel, RingTable};
    let m = RingModel::new();
    let z6 = m.object(RingTable::cyclic(6));
    let z2 = m.object(RingTable::cyclic(2));
    let f = m.hom(&z6, &z2, vec![0, 1, 0, 1, 0, 1]).unwrap();
    let z = Zigzag::new(&m, vec![(f.clone(), Dir::Fwd), (f.clone(), Dir::Bwd)]).unwrap();
    let d = decide(&m, &z).unwrap();
    assert!(d.morphism.is_none());
    assert_eq!(d.obstruction.as_deref(), Some("forward chase of 1 = {0,2,4}"));
    let oracle = relation_oracle(&m, &z).unwrap();
    assert!(!oracle.is_function);
}
