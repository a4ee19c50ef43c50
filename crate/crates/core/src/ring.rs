//! Finite rings with identity. Subobjects are additive subgroups; ideals are
//! the normal ones and subrings containing the identity the conormal ones.

use std::fmt;

use crate::elemset::ElemSet;
use crate::error::{FormError, Result};
use crate::group::{GroupTable, Numbering};

pub struct RingTable {
    add: GroupTable,
    mul: Vec<usize>,
    one: usize,
}

impl PartialEq for RingTable {
    fn eq(&self, other: &Self) -> bool {
        self.one == other.one && self.mul == other.mul && self.add == other.add
    }
}

impl Eq for RingTable {}

impl std::hash::Hash for RingTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.add.hash(state);
        self.mul.hash(state);
        self.one.hash(state);
    }
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingTable(order {}, one={})", self.order(), self.one)
    }
}

impl RingTable {
    /// Validates addition, multiplication and the identity, citing the first
    /// violated law.
    pub fn from_tables(add: &[Vec<usize>], mul: &[Vec<usize>], one: usize) -> Result<Self> {
        let bad = |msg: String| Err(FormError::InvalidRing(msg));
        let add = match GroupTable::from_rows(add) {
            Ok(g) => g,
            Err(e) => return bad(format!("addition: {e}")),
        };
        let n = add.order();
        if !add.is_abelian() {
            return bad("addition is not commutative".into());
        }
        if mul.len() != n || mul.iter().any(|r| r.len() != n) {
            return bad(format!("multiplication table must be {n}×{n}"));
        }
        if let Some(x) = mul.iter().flatten().find(|&&x| x >= n) {
            return bad(format!("multiplication entry {x} out of range"));
        }
        if one >= n {
            return bad(format!("identity index {one} out of range"));
        }
        let m = |a: usize, b: usize| mul[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return bad(format!("multiplication is not associative at ({a}, {b}, {c})"));
                    }
                    if m(a, add.mul(b, c)) != add.mul(m(a, b), m(a, c)) {
                        return bad(format!("left distributivity fails at ({a}, {b}, {c})"));
                    }
                    if m(add.mul(a, b), c) != add.mul(m(a, c), m(b, c)) {
                        return bad(format!("right distributivity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| m(one, a) != a || m(a, one) != a) {
            return bad(format!("{one} is not a two-sided identity (fails for {a})"));
        }
        Ok(RingTable { add, mul: mul.iter().flatten().copied().collect(), one })
    }

    fn trusted(add: GroupTable, mul: Vec<usize>, one: usize) -> Self {
        RingTable { add, mul, one }
    }

    /// `Z/k`; `k = 1` is the zero ring.
    pub fn cyclic(k: usize) -> Self {
        assert!(k >= 1);
        let mul = (0..k * k).map(|i| (i / k) * (i % k) % k).collect();
        Self::trusted(GroupTable::cyclic(k), mul, 1 % k)
    }

    pub fn zero() -> Self {
        Self::cyclic(1)
    }

    /// Componentwise product, `(a, b)` at index `a·|S| + b`.
    pub fn product(r: &RingTable, s: &RingTable) -> Self {
        let (nr, ns) = (r.order(), s.order());
        let n = nr * ns;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                mul.push(r.mul(x / ns, y / ns) * ns + s.mul(x % ns, y % ns));
            }
        }
        Self::trusted(GroupTable::direct_product(&r.add, &s.add), mul, r.one * ns + s.one)
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn additive(&self) -> &GroupTable {
        &self.add
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.rows()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        self.add.is_subgroup(s)
            && (0..self.order()).all(|r| s.iter().all(|x| s.contains(self.mul(r, x)) && s.contains(self.mul(x, r))))
    }

    pub fn is_unital_subring(&self, s: &ElemSet) -> bool {
        self.add.is_subgroup(s)
            && s.contains(self.one)
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    /// `(normal, conormal)` = `(ideal, unital subring)`.
    pub fn classify_subobject(&self, s: &ElemSet) -> Result<(bool, bool)> {
        if !self.add.is_subgroup(s) {
            return Err(FormError::NotASubobject(format!("{s} in a ring of order {}", self.order())));
        }
        Ok((self.is_ideal(s), self.is_unital_subring(s)))
    }

    /// Coset ring of an ideal and the projection map.
    pub fn quotient(&self, ideal: &ElemSet, numbering: Numbering) -> (RingTable, Vec<usize>) {
        let (qadd, proj) = self.add.quotient(ideal, numbering);
        let k = qadd.order();
        let mut reps = vec![usize::MAX; k];
        for (x, &c) in proj.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(proj[self.mul(a, b)]);
            }
        }
        let one = proj[self.one];
        (RingTable::trusted(qadd, mul, one), proj)
    }

    /// A unital subring as a ring in its own right and the inclusion map.
    pub fn carrier(&self, sub: &ElemSet, numbering: Numbering) -> (RingTable, Vec<usize>) {
        let (cadd, incl) = self.add.carrier(sub, numbering);
        let k = incl.len();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in incl.iter().enumerate() {
            index[x] = i;
        }
        let mut mul = Vec::with_capacity(k * k);
        for &a in &incl {
            for &b in &incl {
                mul.push(index[self.mul(a, b)]);
            }
        }
        let one = index[self.one];
        (RingTable::trusted(cadd, mul, one), incl)
    }

    pub fn is_hom(&self, cod: &RingTable, map: &[usize]) -> bool {
        self.add.is_hom(&cod.add, map)
            && map[self.one] == cod.one
            && (0..self.order()).all(|a| (0..self.order()).all(|b| map[self.mul(a, b)] == cod.mul(map[a], map[b])))
    }

    /// Unital ring homomorphisms: additive homomorphisms filtered by
    /// multiplicativity and unitality, sorted by map.
    pub fn homs(&self, cod: &RingTable) -> Vec<Vec<usize>> {
        self.add.homs(&cod.add).into_iter().filter(|m| self.is_hom(cod, m)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    fn z2xz2() -> RingTable {
        RingTable::product(&RingTable::cyclic(2), &RingTable::cyclic(2))
    }

    #[test]
    fn table_validation() {
        let z6 = RingTable::cyclic(6);
        assert!(RingTable::from_tables(&z6.add_rows(), &z6.mul_rows(), 1).is_ok());
        let p = z2xz2();
        let rebuilt = RingTable::from_tables(&p.add_rows(), &p.mul_rows(), 3).unwrap();
        assert_eq!(rebuilt, p);
        // broken distributivity: square every product
        let mut mul = RingTable::cyclic(3).mul_rows();
        mul[2][2] = 2;
        let add = RingTable::cyclic(3).add_rows();
        let err = RingTable::from_tables(&add, &mul, 1).unwrap_err().to_string();
        assert!(err.contains("distributivity") || err.contains("associative"), "{err}");
        assert!(RingTable::from_tables(&add, &RingTable::cyclic(3).mul_rows(), 2)
            .unwrap_err()
            .to_string()
            .contains("identity"));
    }

    #[test]
    fn zero_ring_is_admitted() {
        let z = RingTable::zero();
        assert_eq!(z.order(), 1);
        assert_eq!(z.one(), 0);
        assert_eq!(z.classify_subobject(&set(&[0])).unwrap(), (true, true));
    }

    #[test]
    fn classification() {
        let z6 = RingTable::cyclic(6);
        assert_eq!(z6.classify_subobject(&set(&[0, 2, 4])).unwrap(), (true, false));
        // (0,0) = 0 and (1,1) = 3
        assert_eq!(z2xz2().classify_subobject(&set(&[0, 3])).unwrap(), (false, true));
        assert_eq!(z6.classify_subobject(&ElemSet::full(6)).unwrap(), (true, true));
        assert!(matches!(z6.classify_subobject(&set(&[0, 1])), Err(FormError::NotASubobject(_))));
    }

    #[test]
    fn quotients() {
        let z6 = RingTable::cyclic(6);
        let (q, p) = z6.quotient(&set(&[0, 3]), Numbering::Canonical);
        assert_eq!(q, RingTable::cyclic(3));
        assert_eq!(p, vec![0, 1, 2, 0, 1, 2]);
        let (q, p) = z6.quotient(&set(&[0, 2, 4]), Numbering::Canonical);
        assert_eq!(q.order(), 2);
        assert!(z6.is_hom(&q, &p));
        let (q, _) = z6.quotient(&set(&[0]), Numbering::Canonical);
        assert_eq!(q, z6);
    }

    #[test]
    fn homs_are_unital() {
        let z6 = RingTable::cyclic(6);
        assert_eq!(z6.homs(&RingTable::cyclic(2)), vec![vec![0, 1, 0, 1, 0, 1]]);
        assert!(RingTable::cyclic(2).homs(&z6).is_empty());
        assert_eq!(z6.homs(&RingTable::zero()).len(), 1);
        // the two coordinate projections of Z2×Z2 onto Z2
        assert_eq!(z2xz2().homs(&RingTable::cyclic(2)).len(), 2);
    }
}
