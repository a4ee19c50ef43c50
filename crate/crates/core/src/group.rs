//! Finite groups given by Cayley tables.
//!
//! Element `0` is always the identity. Subgroups are [`ElemSet`]s over the
//! element indices. Builders fix a numbering per kind:
//!
//! * `cyclic k`: `i` is the residue `i mod k`.
//! * `dihedral k` (order `2k`): `i < k` is the rotation `r^i`, `k + i` is the
//!   reflection `s r^i`.
//! * `symmetric k`: permutations of `0..k`, ordered by number of moved points
//!   and then lexicographically, so the identity comes first. The product
//!   `σ·τ` applies `τ` first.
//! * `klein`: `(a, b)` is element `2a + b`, with componentwise addition.
//! * `quaternion`: `a^i b^j` is element `4j + i`, with `a^4 = 1`, `b^2 = a^2`,
//!   `b a b⁻¹ = a⁻¹`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::elemset::{ElemSet, MAX_ORDER};
use crate::error::{FormError, Result};

/// Default ceiling for builder-made groups; `S4` has order 24.
pub const DEFAULT_MAX_ORDER: usize = 24;

pub struct GroupTable {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    cache: Cache,
}

#[derive(Default)]
struct Cache {
    subgroups: OnceLock<Arc<[ElemSet]>>,
    generators: OnceLock<Vec<usize>>,
    orders: OnceLock<Vec<usize>>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl std::hash::Hash for GroupTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.mul.hash(state);
    }
}

impl Clone for GroupTable {
    fn clone(&self) -> Self {
        GroupTable::trusted(self.n, self.mul.clone())
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable(order {})", self.n)
    }
}

/// What `make_group` should build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Klein,
    Quaternion,
    Table(Vec<Vec<usize>>),
}

pub fn make_group(kind: &GroupKind, max_order: usize) -> Result<GroupTable> {
    let order = match kind {
        GroupKind::Cyclic(k) => *k,
        GroupKind::Dihedral(k) => 2 * k,
        GroupKind::Symmetric(k) => (1..=*k).try_fold(1usize, |acc, i| acc.checked_mul(i)).unwrap_or(usize::MAX),
        GroupKind::Klein => 4,
        GroupKind::Quaternion => 8,
        GroupKind::Table(rows) => rows.len(),
    };
    if order == 0 {
        return Err(FormError::InvalidTable("a group needs at least one element".into()));
    }
    if order > max_order.min(MAX_ORDER) {
        return Err(FormError::InvalidTable(format!(
            "order {order} exceeds the configured bound {}",
            max_order.min(MAX_ORDER)
        )));
    }
    Ok(match kind {
        GroupKind::Cyclic(k) => GroupTable::cyclic(*k),
        GroupKind::Dihedral(k) => GroupTable::dihedral(*k),
        GroupKind::Symmetric(k) => GroupTable::symmetric(*k),
        GroupKind::Klein => GroupTable::klein(),
        GroupKind::Quaternion => GroupTable::quaternion(),
        GroupKind::Table(rows) => GroupTable::from_rows(rows)?,
    })
}

impl GroupTable {
    /// Builds from a table the caller vouches for (quotients, carriers,
    /// builders). Unit tests still validate.
    pub(crate) fn trusted(n: usize, mul: Vec<usize>) -> Self {
        #[cfg(test)]
        validate(n, &mul).expect("trusted table is a group");
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b;
                    break;
                }
            }
        }
        GroupTable { n, mul, inv, cache: Cache::default() }
    }

    /// Validates an `n × n` table of element indices.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(FormError::InvalidTable(format!("order {n} out of range 1..={MAX_ORDER}")));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FormError::InvalidTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            mul.extend_from_slice(row);
        }
        validate(n, &mul)?;
        Ok(Self::trusted(n, mul))
    }

    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(k: usize) -> Self {
        assert!(k >= 1);
        Self::trusted(k, (0..k * k).map(|i| (i / k + i % k) % k).collect())
    }

    pub fn dihedral(k: usize) -> Self {
        assert!(k >= 1);
        let n = 2 * k;
        // s^xs r^xa · s^ys r^ya = s^(xs+ys) r^(±xa + ya), using r^a s = s r^-a
        let op = |x: usize, y: usize| -> usize {
            let (xs, xa) = (x / k, x % k);
            let (ys, ya) = (y / k, y % k);
            let a = if ys == 0 { (xa + ya) % k } else { (k - xa + ya) % k };
            (xs + ys) % 2 * k + a
        };
        Self::trusted(n, (0..n * n).map(|i| op(i / n, i % n)).collect())
    }

    pub fn klein() -> Self {
        Self::trusted(4, (0..16).map(|i| (i / 4) ^ (i % 4)).collect())
    }

    pub fn quaternion() -> Self {
        Self::metacyclic(4, 2, 2, 3).expect("Q8 parameters are valid")
    }

    /// `⟨a, b | a^m = 1, b^n = a^t, b a b⁻¹ = a^k⟩`, element `a^i b^j` at
    /// index `j·m + i`. Fails when the parameters do not define a group of
    /// order `m·n`.
    pub fn metacyclic(m: usize, n: usize, t: usize, k: usize) -> Result<Self> {
        let order = m * n;
        let kpow = |j: usize| (0..j).fold(1usize, |acc, _| acc * k % m);
        Self::from_fn(order, |x, y| {
            let (i1, j1) = (x % m, x / m);
            let (i2, j2) = (y % m, y / m);
            let mut i = i1 + kpow(j1) * i2;
            let mut j = j1 + j2;
            if j >= n {
                j -= n;
                i += t;
            }
            j * m + i % m
        })
    }

    pub fn symmetric(k: usize) -> Self {
        let perms = permutations_by_support(k);
        let n = perms.len();
        let index: std::collections::HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut mul = Vec::with_capacity(n * n);
        for s in &perms {
            for t in &perms {
                let st: Vec<usize> = (0..k).map(|i| s[t[i]]).collect();
                mul.push(index[st.as_slice()]);
            }
        }
        Self::trusted(n, mul)
    }

    /// `(a, b)` at index `a·|B| + b`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        let (na, nb) = (a.n, b.n);
        let n = na * nb;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                mul.push(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
            }
        }
        Self::trusted(n, mul)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders()[x]
    }

    fn element_orders(&self) -> &[usize] {
        self.cache.orders.get_or_init(|| {
            (0..self.n)
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != 0 {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &ElemSet) -> ElemSet {
        let gens: Vec<usize> = gens.iter().filter(|&g| g != 0).collect();
        let mut seen = ElemSet::singleton(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Range-checked [`GroupTable::closure`]; the empty set generates `{0}`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Result<ElemSet> {
        let mut set = ElemSet::empty();
        for &g in gens {
            if g >= self.n {
                return Err(FormError::OutOfRange { index: g, order: self.n });
            }
            set.insert(g);
        }
        Ok(self.closure(&set))
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        if !s.contains(0) || s.iter().any(|x| x >= self.n) {
            return false;
        }
        // finite: closure under products suffices
        s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    /// Greedy small generating set: repeatedly add the element that enlarges
    /// the generated subgroup most (smallest index on ties).
    pub fn generators(&self) -> &[usize] {
        self.cache.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut span = ElemSet::singleton(0);
            while span.len() < self.n {
                let mut best: Option<(usize, ElemSet)> = None;
                for x in 0..self.n {
                    if span.contains(x) {
                        continue;
                    }
                    let mut with = span;
                    with.insert(x);
                    let grown = self.closure(&with);
                    if best.as_ref().is_none_or(|(_, b)| grown.len() > b.len()) {
                        best = Some((x, grown));
                    }
                }
                let (x, grown) = best.expect("span is a proper subgroup");
                gens.push(x);
                span = grown;
            }
            gens
        })
    }

    /// All subgroups sorted by size, then lexicographically.
    pub fn subgroups(&self) -> Arc<[ElemSet]> {
        self.cache
            .subgroups
            .get_or_init(|| {
                let cyclic: Vec<ElemSet> = {
                    let mut v: Vec<ElemSet> = (0..self.n).map(|x| self.closure(&ElemSet::singleton(x))).collect();
                    v.sort();
                    v.dedup();
                    v
                };
                let mut found: HashSet<ElemSet> = cyclic.iter().copied().collect();
                let mut work: Vec<ElemSet> = cyclic.clone();
                while let Some(h) = work.pop() {
                    for c in &cyclic {
                        if c.is_subset(&h) {
                            continue;
                        }
                        let k = self.closure(&h.union(c));
                        if found.insert(k) {
                            work.push(k);
                        }
                    }
                }
                let mut all: Vec<ElemSet> = found.into_iter().collect();
                all.sort();
                all.into()
            })
            .clone()
    }

    /// Closed under conjugation by the generators of the whole group.
    pub fn is_normal(&self, s: &ElemSet) -> bool {
        self.generators().iter().all(|&g| {
            let gi = self.inv(g);
            s.iter().all(|x| s.contains(self.mul(self.mul(g, x), gi)))
        })
    }

    /// Coset table of a normal subgroup and the projection map. Cosets are
    /// numbered by ascending minimal member (descending for
    /// [`Numbering::Reversed`], the identity coset staying at 0).
    pub fn quotient(&self, normal: &ElemSet, numbering: Numbering) -> (GroupTable, Vec<usize>) {
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n {
            if coset[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for m in normal.iter() {
                coset[self.mul(x, m)] = id;
            }
        }
        let k = reps.len();
        let relabel = |c: usize| numbering.relabel(c, k);
        let proj: Vec<usize> = coset.iter().map(|&c| relabel(c)).collect();
        let mut ordered_reps = vec![0; k];
        for (c, &r) in reps.iter().enumerate() {
            ordered_reps[relabel(c)] = r;
        }
        let mut mul = Vec::with_capacity(k * k);
        for &a in &ordered_reps {
            for &b in &ordered_reps {
                mul.push(proj[self.mul(a, b)]);
            }
        }
        (GroupTable::trusted(k, mul), proj)
    }

    /// The subgroup as a group in its own right, elements renumbered in
    /// ascending order, and the inclusion map.
    pub fn carrier(&self, sub: &ElemSet, numbering: Numbering) -> (GroupTable, Vec<usize>) {
        let incl = numbering.order_members(sub);
        let k = incl.len();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in incl.iter().enumerate() {
            index[x] = i;
        }
        let mut mul = Vec::with_capacity(k * k);
        for &a in &incl {
            for &b in &incl {
                mul.push(index[self.mul(a, b)]);
            }
        }
        (GroupTable::trusted(k, mul), incl)
    }

    pub fn is_hom(&self, cod: &GroupTable, map: &[usize]) -> bool {
        map.len() == self.n
            && map.iter().all(|&y| y < cod.n)
            && (0..self.n).all(|a| (0..self.n).all(|b| map[self.mul(a, b)] == cod.mul(map[a], map[b])))
    }

    /// Every homomorphism into `cod`, sorted lexicographically by map.
    ///
    /// Images are assigned to [`GroupTable::generators`] (each to an element
    /// whose order divides the generator's) and the assignment is extended
    /// along the Cayley graph, rejecting on the first inconsistency.
    pub fn homs(&self, cod: &GroupTable) -> Vec<Vec<usize>> {
        let gens = self.generators().to_vec();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..cod.n).filter(|&y| o.is_multiple_of(cod.element_order(y))).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut images = vec![0usize; gens.len()];
        let mut map = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        self.hom_search(cod, &gens, &candidates, 0, &mut images, &mut map, &mut queue, &mut out);
        out.sort();
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn hom_search(
        &self,
        cod: &GroupTable,
        gens: &[usize],
        candidates: &[Vec<usize>],
        depth: usize,
        images: &mut Vec<usize>,
        map: &mut Vec<usize>,
        queue: &mut VecDeque<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == gens.len() {
            if self.extend_assignment(cod, gens, images, map, queue) {
                out.push(map.clone());
            }
            return;
        }
        for &y in &candidates[depth] {
            images[depth] = y;
            self.hom_search(cod, gens, candidates, depth + 1, images, map, queue, out);
        }
    }

    fn extend_assignment(
        &self,
        cod: &GroupTable,
        gens: &[usize],
        images: &[usize],
        map: &mut [usize],
        queue: &mut VecDeque<usize>,
    ) -> bool {
        map.fill(usize::MAX);
        map[0] = 0;
        queue.clear();
        queue.push_back(0);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let z = self.mul(x, g);
                let val = cod.mul(map[x], img);
                if map[z] == usize::MAX {
                    map[z] = val;
                    queue.push_back(z);
                } else if map[z] != val {
                    return false;
                }
            }
        }
        true
    }
}

/// How constructed objects number their elements. `Canonical` is what every
/// public entry point uses; `Reversed` is an alternative, equally lawful
/// choice used to check that induced morphisms do not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Numbering {
    #[default]
    Canonical,
    Reversed,
}

impl Numbering {
    /// Position of the `c`-th class (in canonical order) among `k` classes.
    pub(crate) fn relabel(self, c: usize, k: usize) -> usize {
        match self {
            Numbering::Canonical => c,
            Numbering::Reversed if c == 0 => 0,
            Numbering::Reversed => k - c,
        }
    }

    pub(crate) fn order_members(self, s: &ElemSet) -> Vec<usize> {
        let mut v = s.to_vec();
        if self == Numbering::Reversed && v.len() > 1 {
            v[1..].reverse();
        }
        v
    }
}

fn validate(n: usize, mul: &[usize]) -> Result<()> {
    let bad = |msg: String| Err(FormError::InvalidTable(msg));
    if mul.len() != n * n {
        return bad(format!("expected {} entries, found {}", n * n, mul.len()));
    }
    if let Some(&x) = mul.iter().find(|&&x| x >= n) {
        return bad(format!("entry {x} out of range for order {n}"));
    }
    let m = |a: usize, b: usize| mul[a * n + b];
    for a in 0..n {
        if m(0, a) != a || m(a, 0) != a {
            return bad(format!("identity law fails: element 0 is not an identity for {a}"));
        }
    }
    for a in 0..n {
        let mut row = ElemSet::empty();
        let mut col = ElemSet::empty();
        for b in 0..n {
            row.insert(m(a, b));
            col.insert(m(b, a));
        }
        if row.len() != n {
            return bad(format!("permutation law fails: row {a} repeats an entry"));
        }
        if col.len() != n {
            return bad(format!("permutation law fails: column {a} repeats an entry"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    return bad(format!("associativity fails for ({a}, {b}, {c})"));
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| m(a, b) == 0 && m(b, a) == 0) {
            return bad(format!("inverse law fails: {a} has no two-sided inverse"));
        }
    }
    Ok(())
}

/// Permutations of `0..k` ordered by number of moved points, then
/// lexicographically.
fn permutations_by_support(k: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        perms.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    perms.sort_by_key(|p| p.iter().enumerate().filter(|(i, x)| i != *x).count());
    perms
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    /// Every subset closed under products and containing 0.
    fn brute_subgroups(g: &GroupTable) -> Vec<ElemSet> {
        let n = g.order();
        let mut out: Vec<ElemSet> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<ElemSet>())
            .filter(|s| s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(g.mul(a, b)))))
            .collect();
        out.sort();
        out
    }

    /// Every map checked against the homomorphism law.
    fn brute_homs(g: &GroupTable, h: &GroupTable) -> Vec<Vec<usize>> {
        let (n, m) = (g.order(), h.order());
        let mut out = Vec::new();
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let d = c % m;
                    c /= m;
                    d
                })
                .collect();
            if g.is_hom(h, &map) {
                out.push(map);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn cyclic_four_is_addition_mod_four() {
        let z4 = GroupTable::cyclic(4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(z4.mul(a, b), (a + b) % 4);
            }
        }
    }

    #[test]
    fn symmetric_three_numbering() {
        let s3 = GroupTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.element_order(0), 1);
        for t in [1, 2, 3] {
            assert_eq!(s3.element_order(t), 2, "element {t} should be a transposition");
        }
        for c in [4, 5] {
            assert_eq!(s3.element_order(c), 3, "element {c} should be a 3-cycle");
        }
        assert!(!s3.is_abelian());
    }

    #[test]
    fn builders_pass_validation() {
        for g in [
            GroupTable::cyclic(1),
            GroupTable::cyclic(7),
            GroupTable::dihedral(1),
            GroupTable::dihedral(4),
            GroupTable::dihedral(6),
            GroupTable::klein(),
            GroupTable::quaternion(),
            GroupTable::symmetric(4),
        ] {
            validate(g.order(), &g.mul).unwrap();
        }
        let q8 = GroupTable::quaternion();
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
        let d4 = GroupTable::dihedral(4);
        assert_eq!((0..8).filter(|&x| d4.element_order(x) == 2).count(), 5);
    }

    #[test]
    fn invalid_tables_cite_the_law() {
        let err = |rows: Vec<Vec<usize>>| GroupTable::from_rows(&rows).unwrap_err().to_string();
        assert!(err(vec![vec![1, 0], vec![0, 1]]).contains("identity"));
        assert!(err(vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]]).contains("permutation"));
        // a Latin square with identity 0 that is not associative
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(err(rows).contains("associativity"));
        assert!(err(vec![vec![0, 5], vec![1, 0]]).contains("out of range"));
    }

    #[test]
    fn make_group_respects_bounds() {
        assert!(make_group(&GroupKind::Symmetric(4), DEFAULT_MAX_ORDER).is_ok());
        assert!(make_group(&GroupKind::Symmetric(5), DEFAULT_MAX_ORDER).is_err());
        assert!(make_group(&GroupKind::Cyclic(0), DEFAULT_MAX_ORDER).is_err());
        assert_eq!(make_group(&GroupKind::Cyclic(4), 24).unwrap(), GroupTable::cyclic(4));
    }

    #[test]
    fn generated_subgroups() {
        let s3 = GroupTable::symmetric(3);
        assert_eq!(s3.generated_subgroup(&[1, 2]).unwrap(), s3.elements());
        assert_eq!(s3.generated_subgroup(&[]).unwrap(), set(&[0]));
        assert_eq!(GroupTable::cyclic(4).generated_subgroup(&[2]).unwrap(), set(&[0, 2]));
        assert!(matches!(s3.generated_subgroup(&[6]), Err(FormError::OutOfRange { index: 6, order: 6 })));
    }

    #[test]
    fn subgroup_enumeration_matches_brute_force() {
        for g in [
            GroupTable::trivial(),
            GroupTable::cyclic(4),
            GroupTable::klein(),
            GroupTable::symmetric(3),
            GroupTable::dihedral(4),
            GroupTable::quaternion(),
            GroupTable::cyclic(8),
        ] {
            assert_eq!(g.subgroups().to_vec(), brute_subgroups(&g), "{g:?}");
        }
        assert_eq!(GroupTable::cyclic(4).subgroups().to_vec(), vec![set(&[0]), set(&[0, 2]), set(&[0, 1, 2, 3])]);
        assert_eq!(GroupTable::symmetric(3).subgroups().len(), 6);
        assert_eq!(GroupTable::trivial().subgroups().to_vec(), vec![set(&[0])]);
    }

    #[test]
    fn normality() {
        let s3 = GroupTable::symmetric(3);
        assert!(s3.is_normal(&set(&[0, 4, 5])));
        assert!(!s3.is_normal(&set(&[0, 1])));
        assert!(s3.is_normal(&s3.elements()));
        assert!(s3.is_normal(&set(&[0])));
    }

    #[test]
    fn quotients() {
        let z4 = GroupTable::cyclic(4);
        let (q, p) = z4.quotient(&set(&[0, 2]), Numbering::Canonical);
        assert_eq!(q.order(), 2);
        assert_eq!(p, vec![0, 1, 0, 1]);
        let s3 = GroupTable::symmetric(3);
        let (q, p) = s3.quotient(&set(&[0, 4, 5]), Numbering::Canonical);
        assert_eq!(q.order(), 2);
        assert_eq!(p, vec![0, 1, 1, 1, 0, 0]);
        let (q, p) = s3.quotient(&set(&[0]), Numbering::Canonical);
        assert_eq!(q, s3);
        assert_eq!(p, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn reversed_numbering_is_another_lawful_choice() {
        let z6 = GroupTable::cyclic(6);
        let (q, p) = z6.quotient(&set(&[0, 3]), Numbering::Reversed);
        assert_eq!(q.order(), 3);
        assert!(z6.is_hom(&q, &p));
        assert_eq!(p, vec![0, 2, 1, 0, 2, 1]);
        let (c, incl) = z6.carrier(&set(&[0, 2, 4]), Numbering::Reversed);
        assert_eq!(incl, vec![0, 4, 2]);
        assert!(c.is_hom(&z6, &incl));
    }

    #[test]
    fn hom_enumeration_matches_brute_force() {
        let groups = [
            GroupTable::trivial(),
            GroupTable::cyclic(2),
            GroupTable::cyclic(4),
            GroupTable::klein(),
            GroupTable::symmetric(3),
            GroupTable::cyclic(6),
        ];
        for g in &groups {
            for h in &groups {
                assert_eq!(g.homs(h), brute_homs(g, h), "{g:?} -> {h:?}");
            }
        }
        let (z4, z2, s3) = (GroupTable::cyclic(4), GroupTable::cyclic(2), GroupTable::symmetric(3));
        assert_eq!(z4.homs(&z2), vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1]]);
        assert_eq!(z2.homs(&z4), vec![vec![0, 0], vec![0, 2]]);
        assert_eq!(s3.homs(&z2), vec![vec![0; 6], vec![0, 1, 1, 1, 0, 0]]);
    }
}
