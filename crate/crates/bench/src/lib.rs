//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use formchase_core::{Dir, FormModel, GroupModel, GroupTable, Morphism, Zigzag};

pub type GroupZigzag = Zigzag<Arc<GroupTable>, Morphism<GroupTable>>;

/// The diamond zigzag of S3 with A the alternating subgroup and B a
/// transposition subgroup.
pub fn s3_diamond(m: &GroupModel) -> GroupZigzag {
    let s3 = m.object(GroupTable::symmetric(3));
    let z2 = m.object(GroupTable::cyclic(2));
    let p = m.hom(&z2, &z2, vec![0, 1]).unwrap();
    let i = m.hom(&z2, &s3, vec![0, 1]).unwrap();
    let j = m.identity(&s3);
    let q = m.hom(&s3, &z2, vec![0, 1, 1, 1, 0, 0]).unwrap();
    Zigzag::new(m, vec![(p, Dir::Bwd), (i, Dir::Fwd), (j, Dir::Bwd), (q, Dir::Fwd)]).unwrap()
}

/// A zigzag of length `len` alternating between Z16 and Z8 through the
/// reduction map, forward then backward.
pub fn reduction_chain(m: &GroupModel, len: usize) -> GroupZigzag {
    let z16 = m.object(GroupTable::cyclic(16));
    let z8 = m.object(GroupTable::cyclic(8));
    let f = m.hom(&z16, &z8, (0..16).map(|i| i % 8).collect()).unwrap();
    let steps = (0..len).map(|k| (f.clone(), if k % 2 == 0 { Dir::Fwd } else { Dir::Bwd })).collect();
    Zigzag::new(m, steps).unwrap()
}
