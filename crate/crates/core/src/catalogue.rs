//! Named finite groups and rings used by the exhaustive suites.

use crate::group::GroupTable;
use crate::ring::RingTable;

fn metacyclic(m: usize, n: usize, t: usize, k: usize) -> GroupTable {
    GroupTable::metacyclic(m, n, t, k).expect("catalogue parameters define a group")
}

fn product(parts: &[GroupTable]) -> GroupTable {
    parts.iter().skip(1).fold(parts[0].clone(), |acc, g| GroupTable::direct_product(&acc, g))
}

fn cyclics(orders: &[usize]) -> GroupTable {
    product(&orders.iter().map(|&k| GroupTable::cyclic(k)).collect::<Vec<_>>())
}

/// `K4 ⋊ Z3`, the generator of `Z3` permuting the three involutions
/// cyclically; `(c, v)` at index `4c + v`.
pub fn alternating4() -> GroupTable {
    let rot = |v: usize, c: usize| (0..c).fold(v, |v, _| if v == 0 { 0 } else { v % 3 + 1 });
    GroupTable::from_fn(12, |x, y| {
        let (c1, v1) = (x / 4, x % 4);
        let (c2, v2) = (y / 4, y % 4);
        ((c1 + c2) % 3) * 4 + (v1 ^ rot(v2, c1))
    })
    .expect("A4 table is a group")
}

/// The Pauli group `⟨X, Y, Z⟩` up to phase `i^k`; `(k, a, b)` stands for
/// `i^k X^a Z^b` at index `4k + 2a + b`.
pub fn pauli() -> GroupTable {
    GroupTable::from_fn(16, |x, y| {
        let (k1, a1, b1) = (x / 4, x / 2 % 2, x % 2);
        let (k2, a2, b2) = (y / 4, y / 2 % 2, y % 2);
        let k = (k1 + k2 + 2 * b1 * a2) % 4;
        k * 4 + (a1 ^ a2) * 2 + (b1 ^ b2)
    })
    .expect("Pauli table is a group")
}

/// `(Z4 × Z2) ⋊ Z2` with the involution `(x, y) ↦ (x, y + x)`;
/// `(h, x, y)` at index `8h + 2x + y`.
pub fn semidirect_16_3() -> GroupTable {
    let act = |x: usize, y: usize, h: usize| if h == 1 { (x, (y + x) % 2) } else { (x, y) };
    GroupTable::from_fn(16, |p, q| {
        let (h1, x1, y1) = (p / 8, p / 2 % 4, p % 2);
        let (h2, x2, y2) = (q / 8, q / 2 % 4, q % 2);
        let (x2, y2) = act(x2, y2, h1);
        ((h1 + h2) % 2) * 8 + ((x1 + x2) % 4) * 2 + (y1 + y2) % 2
    })
    .expect("(16,3) table is a group")
}

/// One representative of every isomorphism class of groups of order at
/// most `max_order` (supported up to 16), by order and then by name.
pub fn small_groups(max_order: usize) -> Vec<(String, GroupTable)> {
    let mut out: Vec<(&str, GroupTable)> = vec![
        ("Z1", GroupTable::trivial()),
        ("Z2", GroupTable::cyclic(2)),
        ("Z3", GroupTable::cyclic(3)),
        ("Z4", GroupTable::cyclic(4)),
        ("K4", GroupTable::klein()),
        ("Z5", GroupTable::cyclic(5)),
        ("Z6", GroupTable::cyclic(6)),
        ("S3", GroupTable::symmetric(3)),
        ("Z7", GroupTable::cyclic(7)),
        ("Z8", GroupTable::cyclic(8)),
        ("Z4xZ2", cyclics(&[4, 2])),
        ("Z2^3", cyclics(&[2, 2, 2])),
        ("D4", GroupTable::dihedral(4)),
        ("Q8", GroupTable::quaternion()),
        ("Z9", GroupTable::cyclic(9)),
        ("Z3^2", cyclics(&[3, 3])),
        ("Z10", GroupTable::cyclic(10)),
        ("D5", GroupTable::dihedral(5)),
        ("Z11", GroupTable::cyclic(11)),
        ("Z12", GroupTable::cyclic(12)),
        ("Z6xZ2", cyclics(&[6, 2])),
        ("A4", alternating4()),
        ("D6", GroupTable::dihedral(6)),
        ("Dic3", metacyclic(3, 4, 0, 2)),
        ("Z13", GroupTable::cyclic(13)),
        ("Z14", GroupTable::cyclic(14)),
        ("D7", GroupTable::dihedral(7)),
        ("Z15", GroupTable::cyclic(15)),
        ("Z16", GroupTable::cyclic(16)),
        ("Z4^2", cyclics(&[4, 4])),
        ("Z8xZ2", cyclics(&[8, 2])),
        ("Z4xZ2^2", cyclics(&[4, 2, 2])),
        ("Z2^4", cyclics(&[2, 2, 2, 2])),
        ("D8", GroupTable::dihedral(8)),
        ("Q16", metacyclic(8, 2, 4, 7)),
        ("SD16", metacyclic(8, 2, 0, 3)),
        ("M16", metacyclic(8, 2, 0, 5)),
        ("Z4:Z4", metacyclic(4, 4, 0, 3)),
        ("Z2xD4", product(&[GroupTable::cyclic(2), GroupTable::dihedral(4)])),
        ("Z2xQ8", product(&[GroupTable::cyclic(2), GroupTable::quaternion()])),
        ("Pauli", pauli()),
        ("(Z4xZ2):Z2", semidirect_16_3()),
    ];
    out.retain(|(_, g)| g.order() <= max_order);
    out.into_iter().map(|(n, g)| (n.to_string(), g)).collect()
}

/// The group scope used for axiom certification.
pub fn axiom_groups() -> Vec<(String, GroupTable)> {
    let keep = ["Z1", "Z2", "Z3", "Z4", "K4", "Z6", "S3", "D4", "Q8"];
    small_groups(8).into_iter().filter(|(n, _)| keep.contains(&n.as_str())).collect()
}

/// The ring scope used for axiom certification.
pub fn axiom_rings() -> Vec<(String, RingTable)> {
    vec![
        ("Zero".to_string(), RingTable::zero()),
        ("Z2".to_string(), RingTable::cyclic(2)),
        ("Z4".to_string(), RingTable::cyclic(4)),
        ("Z6".to_string(), RingTable::cyclic(6)),
        ("Z2xZ2".to_string(), RingTable::product(&RingTable::cyclic(2), &RingTable::cyclic(2))),
    ]
}

/// Unital rings of order at most 8 used by the ring spot checks.
pub fn small_rings() -> Vec<(String, RingTable)> {
    let z2 = RingTable::cyclic(2);
    let mut out = axiom_rings();
    out.extend([
        ("Z3".to_string(), RingTable::cyclic(3)),
        ("Z8".to_string(), RingTable::cyclic(8)),
        ("Z2xZ4".to_string(), RingTable::product(&z2, &RingTable::cyclic(4))),
        ("Z2^3".to_string(), RingTable::product(&RingTable::product(&z2, &z2), &z2)),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Isomorphism-class fingerprint: order, abelian flag, sorted element
    /// orders, sorted subgroup sizes.
    fn invariants(g: &GroupTable) -> (usize, bool, Vec<usize>, Vec<usize>) {
        let mut orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
        orders.sort();
        let mut subs: Vec<usize> = g.subgroups().iter().map(|s| s.len()).collect();
        subs.sort();
        (g.order(), g.is_abelian(), orders, subs)
    }

    /// Brute-force search for a bijection preserving the table, extending
    /// element by element along a generating set.
    fn isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
        if g.order() != h.order() {
            return false;
        }
        let gens = g.generators().to_vec();
        fn assign(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &mut Vec<usize>) -> bool {
            if images.len() == gens.len() {
                let homs = g.homs(h);
                return homs.iter().any(|m| {
                    gens.iter().zip(images.iter()).all(|(&x, &y)| m[x] == y)
                        && m.iter().copied().collect::<crate::elemset::ElemSet>().len() == h.order()
                });
            }
            for y in 0..h.order() {
                if h.element_order(y) == g.element_order(gens[images.len()]) {
                    images.push(y);
                    if assign(g, h, gens, images) {
                        return true;
                    }
                    images.pop();
                }
            }
            false
        }
        assign(g, h, &gens, &mut Vec::new())
    }

    #[test]
    fn class_counts_per_order() {
        let groups = small_groups(16);
        let count = |n: usize| groups.iter().filter(|(_, g)| g.order() == n).count();
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(count(i + 1), e, "order {}", i + 1);
        }
        assert_eq!(groups.len(), 42);
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let groups = small_groups(16);
        for (i, (na, a)) in groups.iter().enumerate() {
            for (nb, b) in &groups[i + 1..] {
                if invariants(a) == invariants(b) {
                    assert!(!isomorphic(a, b), "{na} and {nb} are isomorphic");
                }
            }
        }
    }

    #[test]
    fn named_structure() {
        let a4 = alternating4();
        assert!(!a4.is_abelian());
        assert_eq!(a4.subgroups().iter().filter(|s| s.len() == 6).count(), 0);
        let q16 = &small_groups(16).into_iter().find(|(n, _)| n == "Q16").unwrap().1;
        assert_eq!((0..16).filter(|&x| q16.element_order(x) == 2).count(), 1);
    }
}
