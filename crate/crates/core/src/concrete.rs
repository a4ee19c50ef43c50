//! Element-level models: finite groups and unital rings seen through the
//! [`FormModel`] contract.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::elemset::{ElemSet, MAX_ORDER};
use crate::error::{FormError, Result};
use crate::form::FormModel;
use crate::group::{GroupTable, Numbering};
use crate::ring::RingTable;

/// A finite algebra whose subobjects are subgroups of an underlying group.
pub trait Algebra: Eq + Hash + fmt::Debug + Send + Sync + Sized + 'static {
    /// `"group"` or `"ring"`.
    const NOUN: &'static str;

    fn order(&self) -> usize;
    /// All subobjects, sorted by size and then lexicographically.
    fn subobject_list(&self) -> Arc<[ElemSet]>;
    fn is_subobject(&self, s: &ElemSet) -> bool;
    fn invalid_subobject(&self, s: &ElemSet) -> FormError;
    fn is_normal_sub(&self, s: &ElemSet) -> bool;
    fn is_conormal_sub(&self, s: &ElemSet) -> bool;
    fn quotient_by(&self, s: &ElemSet, numbering: Numbering) -> (Self, Vec<usize>);
    fn carrier_of(&self, s: &ElemSet, numbering: Numbering) -> (Self, Vec<usize>);
    fn is_hom_to(&self, cod: &Self, map: &[usize]) -> bool;
    fn homs_to(&self, cod: &Self) -> Vec<Vec<usize>>;
}

impl Algebra for GroupTable {
    const NOUN: &'static str = "group";

    fn order(&self) -> usize {
        GroupTable::order(self)
    }
    fn subobject_list(&self) -> Arc<[ElemSet]> {
        self.subgroups()
    }
    fn is_subobject(&self, s: &ElemSet) -> bool {
        self.is_subgroup(s)
    }
    fn invalid_subobject(&self, s: &ElemSet) -> FormError {
        FormError::NotASubgroup(format!("{s} in a group of order {}", self.order()))
    }
    fn is_normal_sub(&self, s: &ElemSet) -> bool {
        self.is_normal(s)
    }
    fn is_conormal_sub(&self, _s: &ElemSet) -> bool {
        true
    }
    fn quotient_by(&self, s: &ElemSet, numbering: Numbering) -> (Self, Vec<usize>) {
        self.quotient(s, numbering)
    }
    fn carrier_of(&self, s: &ElemSet, numbering: Numbering) -> (Self, Vec<usize>) {
        self.carrier(s, numbering)
    }
    fn is_hom_to(&self, cod: &Self, map: &[usize]) -> bool {
        self.is_hom(cod, map)
    }
    fn homs_to(&self, cod: &Self) -> Vec<Vec<usize>> {
        self.homs(cod)
    }
}

impl Algebra for RingTable {
    const NOUN: &'static str = "ring";

    fn order(&self) -> usize {
        RingTable::order(self)
    }
    fn subobject_list(&self) -> Arc<[ElemSet]> {
        self.additive().subgroups()
    }
    fn is_subobject(&self, s: &ElemSet) -> bool {
        self.additive().is_subgroup(s)
    }
    fn invalid_subobject(&self, s: &ElemSet) -> FormError {
        FormError::NotASubobject(format!("{s} in a ring of order {}", self.order()))
    }
    fn is_normal_sub(&self, s: &ElemSet) -> bool {
        self.is_ideal(s)
    }
    fn is_conormal_sub(&self, s: &ElemSet) -> bool {
        self.is_unital_subring(s)
    }
    fn quotient_by(&self, s: &ElemSet, numbering: Numbering) -> (Self, Vec<usize>) {
        self.quotient(s, numbering)
    }
    fn carrier_of(&self, s: &ElemSet, numbering: Numbering) -> (Self, Vec<usize>) {
        self.carrier(s, numbering)
    }
    fn is_hom_to(&self, cod: &Self, map: &[usize]) -> bool {
        map.len() == self.order() && map.iter().all(|&y| y < cod.order()) && self.is_hom(cod, map)
    }
    fn homs_to(&self, cod: &Self) -> Vec<Vec<usize>> {
        self.homs(cod)
    }
}

fn same<A: Eq>(a: &Arc<A>, b: &Arc<A>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A structure-preserving map; equality is extensional plus endpoints.
pub struct Morphism<A> {
    dom: Arc<A>,
    cod: Arc<A>,
    map: Arc<[usize]>,
}

impl<A> Clone for Morphism<A> {
    fn clone(&self) -> Self {
        Morphism { dom: self.dom.clone(), cod: self.cod.clone(), map: self.map.clone() }
    }
}

impl<A: Eq> PartialEq for Morphism<A> {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && same(&self.dom, &other.dom) && same(&self.cod, &other.cod)
    }
}

impl<A> Morphism<A> {
    pub fn dom(&self) -> &Arc<A> {
        &self.dom
    }
    pub fn cod(&self) -> &Arc<A> {
        &self.cod
    }
    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

impl<A> fmt::Display for Morphism<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("map [")?;
        for (i, x) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl<A> fmt::Debug for Morphism<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A subobject: an element set valid in its parent's lattice.
pub struct SubObject<A> {
    parent: Arc<A>,
    elems: ElemSet,
}

impl<A> Clone for SubObject<A> {
    fn clone(&self) -> Self {
        SubObject { parent: self.parent.clone(), elems: self.elems }
    }
}

impl<A: Eq> PartialEq for SubObject<A> {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems && same(&self.parent, &other.parent)
    }
}

impl<A> SubObject<A> {
    pub fn parent(&self) -> &Arc<A> {
        &self.parent
    }
    pub fn elems(&self) -> ElemSet {
        self.elems
    }
}

impl<A> fmt::Display for SubObject<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.elems, f)
    }
}

impl<A> fmt::Debug for SubObject<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.elems, f)
    }
}

/// The concrete model over an [`Algebra`].
///
/// Objects are interned, so structurally equal tables share one handle (and
/// its caches). Names registered with [`Concrete::name`] show up in error
/// messages.
pub struct Concrete<A> {
    numbering: Numbering,
    objects: Mutex<HashSet<Arc<A>>>,
    names: Mutex<HashMap<usize, String>>,
}

pub type GroupModel = Concrete<GroupTable>;
pub type RingModel = Concrete<RingTable>;

impl<A: Algebra> Default for Concrete<A> {
    fn default() -> Self {
        Self::with_numbering(Numbering::Canonical)
    }
}

impl<A> fmt::Debug for Concrete<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Concrete({:?})", self.numbering)
    }
}

impl<A: Algebra> Concrete<A> {
    pub fn new() -> Self {
        Self::default()
    }

    /// A model whose quotients and carriers use another numbering.
    pub fn with_numbering(numbering: Numbering) -> Self {
        Concrete { numbering, objects: Mutex::new(HashSet::new()), names: Mutex::new(HashMap::new()) }
    }

    pub fn numbering(&self) -> Numbering {
        self.numbering
    }

    pub fn object(&self, a: A) -> Arc<A> {
        let mut objects = self.objects.lock().expect("object table poisoned");
        if let Some(existing) = objects.get(&a) {
            return existing.clone();
        }
        let arc = Arc::new(a);
        objects.insert(arc.clone());
        arc
    }

    /// Interns an existing handle.
    pub fn adopt(&self, a: &Arc<A>) -> Arc<A> {
        let mut objects = self.objects.lock().expect("object table poisoned");
        if let Some(existing) = objects.get(&**a) {
            return existing.clone();
        }
        objects.insert(a.clone());
        a.clone()
    }

    /// Attaches a display name to an object.
    pub fn name(&self, x: &Arc<A>, name: &str) -> Arc<A> {
        let x = self.adopt(x);
        self.names.lock().expect("name table poisoned").insert(Arc::as_ptr(&x) as usize, name.to_string());
        x
    }

    pub fn hom(&self, dom: &Arc<A>, cod: &Arc<A>, map: Vec<usize>) -> Result<Morphism<A>> {
        if map.len() != dom.order() {
            return Err(FormError::NotAHomomorphism(format!(
                "map has {} entries but the domain has order {}",
                map.len(),
                dom.order()
            )));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= cod.order()) {
            return Err(FormError::OutOfRange { index: y, order: cod.order() });
        }
        if !dom.is_hom_to(cod, &map) {
            return Err(FormError::NotAHomomorphism(format!(
                "map [{}] from {} to {} does not preserve the operations",
                map.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                self.describe_obj(dom),
                self.describe_obj(cod)
            )));
        }
        Ok(Morphism { dom: self.adopt(dom), cod: self.adopt(cod), map: map.into() })
    }

    pub fn sub(&self, parent: &Arc<A>, elems: &[usize]) -> Result<SubObject<A>> {
        let mut set = ElemSet::empty();
        for &x in elems {
            if x >= parent.order() || x >= MAX_ORDER {
                return Err(FormError::OutOfRange { index: x, order: parent.order() });
            }
            set.insert(x);
        }
        self.sub_from_set(parent, set)
    }

    pub fn sub_from_set(&self, parent: &Arc<A>, set: ElemSet) -> Result<SubObject<A>> {
        if !parent.is_subobject(&set) {
            return Err(parent.invalid_subobject(&set));
        }
        Ok(SubObject { parent: self.adopt(parent), elems: set })
    }

    fn morphism(&self, dom: &Arc<A>, cod: &Arc<A>, map: Vec<usize>) -> Morphism<A> {
        Morphism { dom: dom.clone(), cod: cod.clone(), map: map.into() }
    }

    fn check_parent(&self, s: &SubObject<A>, x: &Arc<A>) -> Result<()> {
        if same(&s.parent, x) {
            Ok(())
        } else {
            Err(FormError::ParentMismatch { what: s.elems.to_string(), expected: self.describe_obj(x) })
        }
    }
}

impl<A: Algebra> FormModel for Concrete<A> {
    type Obj = Arc<A>;
    type Mor = Morphism<A>;
    type Sub = SubObject<A>;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        f.dom.clone()
    }

    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        f.cod.clone()
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.morphism(x, x, (0..x.order()).collect())
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        if !same(&f.cod, &g.dom) {
            return Err(FormError::NotComposable(format!(
                "codomain {} of {f} differs from domain {} of {g}",
                self.describe_obj(&f.cod),
                self.describe_obj(&g.dom)
            )));
        }
        Ok(self.morphism(&f.dom, &g.cod, f.map.iter().map(|&x| g.map[x]).collect()))
    }

    fn parent(&self, s: &Self::Sub) -> Self::Obj {
        s.parent.clone()
    }

    fn subobjects(&self, x: &Self::Obj) -> Vec<Self::Sub> {
        x.subobject_list().iter().map(|&elems| SubObject { parent: x.clone(), elems }).collect()
    }

    fn top(&self, x: &Self::Obj) -> Self::Sub {
        SubObject { parent: x.clone(), elems: ElemSet::full(x.order()) }
    }

    fn bottom(&self, x: &Self::Obj) -> Self::Sub {
        SubObject { parent: x.clone(), elems: ElemSet::singleton(0) }
    }

    fn leq(&self, a: &Self::Sub, b: &Self::Sub) -> bool {
        a.elems.is_subset(&b.elems)
    }

    fn meet(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        SubObject { parent: a.parent.clone(), elems: a.elems.intersection(&b.elems) }
    }

    /// The smallest subobject containing both: the first superset of the
    /// union in the size-sorted lattice.
    fn join(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        let union = a.elems.union(&b.elems);
        let elems = a
            .parent
            .subobject_list()
            .iter()
            .copied()
            .find(|s| union.is_subset(s))
            .expect("the top subobject contains everything");
        SubObject { parent: a.parent.clone(), elems }
    }

    fn direct_image(&self, f: &Self::Mor, a: &Self::Sub) -> Result<Self::Sub> {
        self.check_parent(a, &f.dom)?;
        Ok(SubObject { parent: f.cod.clone(), elems: a.elems.iter().map(|x| f.map[x]).collect() })
    }

    fn inverse_image(&self, f: &Self::Mor, b: &Self::Sub) -> Result<Self::Sub> {
        self.check_parent(b, &f.cod)?;
        Ok(SubObject {
            parent: f.dom.clone(),
            elems: (0..f.map.len()).filter(|&x| b.elems.contains(f.map[x])).collect(),
        })
    }

    fn is_normal(&self, s: &Self::Sub) -> bool {
        s.parent.is_normal_sub(&s.elems)
    }

    fn is_conormal(&self, s: &Self::Sub) -> bool {
        s.parent.is_conormal_sub(&s.elems)
    }

    fn embedding(&self, s: &Self::Sub) -> Result<Self::Mor> {
        if !self.is_conormal(s) {
            return Err(FormError::NotConormal { object: self.describe_obj(&s.parent), sub: s.elems.to_string() });
        }
        if s.elems.len() == s.parent.order() {
            return Ok(self.identity(&s.parent));
        }
        let (carrier, incl) = s.parent.carrier_of(&s.elems, self.numbering);
        Ok(self.morphism(&self.object(carrier), &s.parent, incl))
    }

    fn projection(&self, s: &Self::Sub) -> Result<Self::Mor> {
        if !self.is_normal(s) {
            return Err(FormError::NotNormal { object: self.describe_obj(&s.parent), sub: s.elems.to_string() });
        }
        if s.elems.len() == 1 {
            return Ok(self.identity(&s.parent));
        }
        let (quotient, proj) = s.parent.quotient_by(&s.elems, self.numbering);
        Ok(self.morphism(&s.parent, &self.object(quotient), proj))
    }

    fn is_embedding(&self, f: &Self::Mor) -> bool {
        f.map.iter().filter(|&&y| y == 0).count() == 1
    }

    fn is_projection(&self, f: &Self::Mor) -> bool {
        f.map.iter().copied().collect::<ElemSet>().len() == f.cod.order()
    }

    fn invert(&self, f: &Self::Mor) -> Result<Self::Mor> {
        if !self.is_embedding(f) {
            return Err(FormError::NotAnIsomorphism(format!("kernel {} of {f} is not trivial", self.kernel(f))));
        }
        if !self.is_projection(f) {
            return Err(FormError::NotAnIsomorphism(format!(
                "image {} of {f} is not the whole codomain",
                self.image(f)
            )));
        }
        let mut inv = vec![0; f.map.len()];
        for (x, &y) in f.map.iter().enumerate() {
            inv[y] = x;
        }
        Ok(self.morphism(&f.cod, &f.dom, inv))
    }

    fn lift_through_embedding(&self, m: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        if !same(&m.cod, &f.cod) {
            return Err(FormError::NotComposable(format!("{f} and the embedding {m} have different codomains")));
        }
        if !self.is_embedding(m) {
            return Err(FormError::NoFactorization(format!("{m} is not an embedding")));
        }
        let mut back = vec![usize::MAX; m.cod.order()];
        for (x, &y) in m.map.iter().enumerate() {
            back[y] = x;
        }
        let mut u = Vec::with_capacity(f.map.len());
        for (x, &y) in f.map.iter().enumerate() {
            if back[y] == usize::MAX {
                return Err(FormError::NoFactorization(format!("{f} sends {x} to {y}, outside the image of {m}")));
            }
            u.push(back[y]);
        }
        Ok(self.morphism(&f.dom, &m.dom, u))
    }

    fn extend_through_projection(&self, p: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        if !same(&p.dom, &g.dom) {
            return Err(FormError::NotComposable(format!("{g} and the projection {p} have different domains")));
        }
        if !self.is_projection(p) {
            return Err(FormError::NoFactorization(format!("{p} is not a projection")));
        }
        let mut v = vec![usize::MAX; p.cod.order()];
        for (x, (&c, &y)) in p.map.iter().zip(g.map.iter()).enumerate() {
            if v[c] == usize::MAX {
                v[c] = y;
            } else if v[c] != y {
                return Err(FormError::NoFactorization(format!("{g} is not constant on the fibre of {p} through {x}")));
            }
        }
        Ok(self.morphism(&p.cod, &g.cod, v))
    }

    fn morphisms(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        x.homs_to(y).into_iter().map(|m| self.morphism(x, y, m)).collect()
    }

    fn element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>> {
        Some(f.map.clone())
    }

    fn cardinality(&self, x: &Self::Obj) -> Option<usize> {
        Some(x.order())
    }

    fn from_element_map(&self, dom: &Self::Obj, cod: &Self::Obj, map: Vec<usize>) -> Option<Result<Self::Mor>> {
        Some(self.hom(dom, cod, map))
    }

    fn describe_obj(&self, x: &Self::Obj) -> String {
        let names = self.names.lock().expect("name table poisoned");
        if let Some(n) = names.get(&(Arc::as_ptr(x) as usize)) {
            return n.clone();
        }
        drop(names);
        if let Some(canon) = self.objects.lock().expect("object table poisoned").get(&**x) {
            if let Some(n) = self.names.lock().expect("name table poisoned").get(&(Arc::as_ptr(canon) as usize)) {
                return n.clone();
            }
        }
        format!("{} of order {}", A::NOUN, x.order())
    }

    fn describe_mor(&self, f: &Self::Mor) -> String {
        f.to_string()
    }
}
