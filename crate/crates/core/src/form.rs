//! The model contract: objects, morphisms, subobject lattices, the Galois pair
//! of direct and inverse images, canonical embeddings and projections, and
//! the duality involution.
//!
//! Everything above this module (the engine, the theorem checkers, the axiom
//! certifier) is written against [`FormModel`] only, so it runs unchanged on
//! a model and on its dual.

use std::fmt;
use std::sync::Arc;

use crate::error::{FormError, Result};

/// A finite model of the self-dual axioms.
///
/// Lattice operations (`leq`, `meet`, `join`) require both arguments to share
/// a parent object; mixing parents is a caller bug. Image maps check parents
/// and report [`FormError::ParentMismatch`].
pub trait FormModel {
    type Obj: Clone + PartialEq + fmt::Debug;
    type Mor: Clone + PartialEq + fmt::Debug;
    type Sub: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    fn parent(&self, s: &Self::Sub) -> Self::Obj;
    /// All subobjects of `x`, in a fixed order.
    fn subobjects(&self, x: &Self::Obj) -> Vec<Self::Sub>;
    fn top(&self, x: &Self::Obj) -> Self::Sub;
    fn bottom(&self, x: &Self::Obj) -> Self::Sub;
    fn leq(&self, a: &Self::Sub, b: &Self::Sub) -> bool;
    fn meet(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub;
    fn join(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub;

    fn direct_image(&self, f: &Self::Mor, a: &Self::Sub) -> Result<Self::Sub>;
    fn inverse_image(&self, f: &Self::Mor, b: &Self::Sub) -> Result<Self::Sub>;

    fn is_normal(&self, s: &Self::Sub) -> bool;
    fn is_conormal(&self, s: &Self::Sub) -> bool;

    /// `ι_S : S/1 → G`; the identity when `S` is the top subobject.
    fn embedding(&self, s: &Self::Sub) -> Result<Self::Mor>;
    /// `π_S : G → G/S`; the identity when `S` is the bottom subobject.
    fn projection(&self, s: &Self::Sub) -> Result<Self::Mor>;

    fn is_embedding(&self, f: &Self::Mor) -> bool;
    fn is_projection(&self, f: &Self::Mor) -> bool;
    fn invert(&self, f: &Self::Mor) -> Result<Self::Mor>;

    /// The unique `u` with `f = m ∘ u`, for an embedding `m` with `Im f ⊆ Im m`.
    fn lift_through_embedding(&self, m: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    /// The unique `v` with `g = v ∘ p`, for a projection `p` with `Ker p ⊆ Ker g`.
    fn extend_through_projection(&self, p: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// Every morphism `x → y` (finite models only).
    fn morphisms(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;

    /// Element-level view of a morphism, when the model has elements.
    fn element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>>;
    /// Carrier size of an object, when the model has elements.
    fn cardinality(&self, x: &Self::Obj) -> Option<usize>;

    /// A morphism with the given element map, when the model has elements.
    /// `Some(Err(_))` means the map does not preserve the structure.
    #[allow(clippy::wrong_self_convention)]
    fn from_element_map(&self, _dom: &Self::Obj, _cod: &Self::Obj, _map: Vec<usize>) -> Option<Result<Self::Mor>> {
        None
    }

    /// [`FormModel::element_map`] of the dual model. Only a dual of a dual
    /// has an element-level reading again.
    fn dual_element_map(&self, _f: &Self::Mor) -> Option<Arc<[usize]>> {
        None
    }

    /// [`FormModel::from_element_map`] of the dual model.
    fn dual_from_element_map(&self, _dom: &Self::Obj, _cod: &Self::Obj, _map: Vec<usize>) -> Option<Result<Self::Mor>> {
        None
    }

    fn describe_obj(&self, x: &Self::Obj) -> String;
    fn describe_mor(&self, f: &Self::Mor) -> String;

    /// `Ker f = f⁻¹1`.
    fn kernel(&self, f: &Self::Mor) -> Self::Sub {
        self.inverse_image(f, &self.bottom(&self.cod(f)))
            .expect("bottom of the codomain is a subobject of the codomain")
    }

    /// `Im f = f⊤`.
    fn image(&self, f: &Self::Mor) -> Self::Sub {
        self.direct_image(f, &self.top(&self.dom(f))).expect("top of the domain is a subobject of the domain")
    }

    fn is_isomorphism(&self, f: &Self::Mor) -> bool {
        self.is_embedding(f) && self.is_projection(f)
    }

    fn is_top(&self, s: &Self::Sub) -> bool {
        *s == self.top(&self.parent(s))
    }

    fn is_bottom(&self, s: &Self::Sub) -> bool {
        *s == self.bottom(&self.parent(s))
    }

    /// `f = ι_{Im f} ∘ h ∘ π_{Ker f}` with `h` an isomorphism.
    fn factorize(&self, f: &Self::Mor) -> Result<Factorization<Self::Mor>> {
        let kernel = self.kernel(f);
        let image = self.image(f);
        let projection = self.projection(&kernel).map_err(capability)?;
        let embedding = self.embedding(&image).map_err(capability)?;
        let corestricted = self.lift_through_embedding(&embedding, f)?;
        let iso = self.extend_through_projection(&projection, &corestricted)?;
        if !self.is_isomorphism(&iso) {
            return Err(FormError::NoFactorization(format!(
                "middle map of {} is not an isomorphism",
                self.describe_mor(f)
            )));
        }
        Ok(Factorization { projection, iso, embedding })
    }
}

fn capability(e: FormError) -> FormError {
    match e {
        FormError::NotNormal { .. } | FormError::NotConormal { .. } => FormError::ModelCapability(e.to_string()),
        other => other,
    }
}

/// `f = embedding ∘ iso ∘ projection`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization<M> {
    pub projection: M,
    pub iso: M,
    pub embedding: M,
}

impl<M> Factorization<M> {
    /// Recomposes the three parts.
    pub fn compose<F: FormModel<Mor = M> + ?Sized>(&self, model: &F) -> Result<M> {
        let hm = model.compose(&self.iso, &self.projection)?;
        model.compose(&self.embedding, &hm)
    }
}

impl<M: FormModel + ?Sized> FormModel for &M {
    type Obj = M::Obj;
    type Mor = M::Mor;
    type Sub = M::Sub;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        (**self).dom(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        (**self).cod(f)
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        (**self).identity(x)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        (**self).compose(g, f)
    }
    fn parent(&self, s: &Self::Sub) -> Self::Obj {
        (**self).parent(s)
    }
    fn subobjects(&self, x: &Self::Obj) -> Vec<Self::Sub> {
        (**self).subobjects(x)
    }
    fn top(&self, x: &Self::Obj) -> Self::Sub {
        (**self).top(x)
    }
    fn bottom(&self, x: &Self::Obj) -> Self::Sub {
        (**self).bottom(x)
    }
    fn leq(&self, a: &Self::Sub, b: &Self::Sub) -> bool {
        (**self).leq(a, b)
    }
    fn meet(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        (**self).meet(a, b)
    }
    fn join(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        (**self).join(a, b)
    }
    fn direct_image(&self, f: &Self::Mor, a: &Self::Sub) -> Result<Self::Sub> {
        (**self).direct_image(f, a)
    }
    fn inverse_image(&self, f: &Self::Mor, b: &Self::Sub) -> Result<Self::Sub> {
        (**self).inverse_image(f, b)
    }
    fn is_normal(&self, s: &Self::Sub) -> bool {
        (**self).is_normal(s)
    }
    fn is_conormal(&self, s: &Self::Sub) -> bool {
        (**self).is_conormal(s)
    }
    fn embedding(&self, s: &Self::Sub) -> Result<Self::Mor> {
        (**self).embedding(s)
    }
    fn projection(&self, s: &Self::Sub) -> Result<Self::Mor> {
        (**self).projection(s)
    }
    fn is_embedding(&self, f: &Self::Mor) -> bool {
        (**self).is_embedding(f)
    }
    fn is_projection(&self, f: &Self::Mor) -> bool {
        (**self).is_projection(f)
    }
    fn invert(&self, f: &Self::Mor) -> Result<Self::Mor> {
        (**self).invert(f)
    }
    fn lift_through_embedding(&self, m: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        (**self).lift_through_embedding(m, f)
    }
    fn extend_through_projection(&self, p: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        (**self).extend_through_projection(p, g)
    }
    fn morphisms(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        (**self).morphisms(x, y)
    }
    fn element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>> {
        (**self).element_map(f)
    }
    fn cardinality(&self, x: &Self::Obj) -> Option<usize> {
        (**self).cardinality(x)
    }
    fn from_element_map(&self, dom: &Self::Obj, cod: &Self::Obj, map: Vec<usize>) -> Option<Result<Self::Mor>> {
        (**self).from_element_map(dom, cod, map)
    }
    fn dual_element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>> {
        (**self).dual_element_map(f)
    }
    fn dual_from_element_map(&self, dom: &Self::Obj, cod: &Self::Obj, map: Vec<usize>) -> Option<Result<Self::Mor>> {
        (**self).dual_from_element_map(dom, cod, map)
    }
    fn describe_obj(&self, x: &Self::Obj) -> String {
        (**self).describe_obj(x)
    }
    fn describe_mor(&self, f: &Self::Mor) -> String {
        (**self).describe_mor(f)
    }
}

/// The dual model.
///
/// Same objects and subobjects; every morphism is reversed, each subobject
/// order is inverted, direct and inverse images trade places, and so do
/// normal/conormal, embeddings/projections and `ι`/`π`. The dual has no
/// element-level reading, so [`FormModel::element_map`] is `None` unless the
/// dualized model is itself a dual.
#[derive(Debug, Clone, Copy)]
pub struct Dual<M>(pub M);

pub fn dualize<M: FormModel>(model: M) -> Dual<M> {
    Dual(model)
}

impl<M: FormModel> FormModel for Dual<M> {
    type Obj = M::Obj;
    type Mor = M::Mor;
    type Sub = M::Sub;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        self.0.cod(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        self.0.dom(f)
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        self.0.identity(x)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        self.0.compose(f, g)
    }
    fn parent(&self, s: &Self::Sub) -> Self::Obj {
        self.0.parent(s)
    }
    fn subobjects(&self, x: &Self::Obj) -> Vec<Self::Sub> {
        self.0.subobjects(x)
    }
    fn top(&self, x: &Self::Obj) -> Self::Sub {
        self.0.bottom(x)
    }
    fn bottom(&self, x: &Self::Obj) -> Self::Sub {
        self.0.top(x)
    }
    fn leq(&self, a: &Self::Sub, b: &Self::Sub) -> bool {
        self.0.leq(b, a)
    }
    fn meet(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        self.0.join(a, b)
    }
    fn join(&self, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        self.0.meet(a, b)
    }
    fn direct_image(&self, f: &Self::Mor, a: &Self::Sub) -> Result<Self::Sub> {
        self.0.inverse_image(f, a)
    }
    fn inverse_image(&self, f: &Self::Mor, b: &Self::Sub) -> Result<Self::Sub> {
        self.0.direct_image(f, b)
    }
    fn is_normal(&self, s: &Self::Sub) -> bool {
        self.0.is_conormal(s)
    }
    fn is_conormal(&self, s: &Self::Sub) -> bool {
        self.0.is_normal(s)
    }
    fn embedding(&self, s: &Self::Sub) -> Result<Self::Mor> {
        self.0.projection(s).map_err(swap_normality)
    }
    fn projection(&self, s: &Self::Sub) -> Result<Self::Mor> {
        self.0.embedding(s).map_err(swap_normality)
    }
    fn is_embedding(&self, f: &Self::Mor) -> bool {
        self.0.is_projection(f)
    }
    fn is_projection(&self, f: &Self::Mor) -> bool {
        self.0.is_embedding(f)
    }
    fn invert(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.0.invert(f)
    }
    fn lift_through_embedding(&self, m: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        self.0.extend_through_projection(m, f)
    }
    fn extend_through_projection(&self, p: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.0.lift_through_embedding(p, g)
    }
    fn morphisms(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor> {
        self.0.morphisms(y, x)
    }
    fn element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>> {
        self.0.dual_element_map(f)
    }
    fn from_element_map(&self, dom: &Self::Obj, cod: &Self::Obj, map: Vec<usize>) -> Option<Result<Self::Mor>> {
        self.0.dual_from_element_map(dom, cod, map)
    }
    fn dual_element_map(&self, f: &Self::Mor) -> Option<Arc<[usize]>> {
        self.0.element_map(f)
    }
    fn dual_from_element_map(&self, dom: &Self::Obj, cod: &Self::Obj, map: Vec<usize>) -> Option<Result<Self::Mor>> {
        self.0.from_element_map(dom, cod, map)
    }
    fn cardinality(&self, x: &Self::Obj) -> Option<usize> {
        self.0.cardinality(x)
    }
    fn describe_obj(&self, x: &Self::Obj) -> String {
        self.0.describe_obj(x)
    }
    fn describe_mor(&self, f: &Self::Mor) -> String {
        self.0.describe_mor(f)
    }
}

/// Read in the dual, a missing projection is a missing embedding.
fn swap_normality(e: FormError) -> FormError {
    match e {
        FormError::NotNormal { object, sub } => FormError::NotConormal { object, sub },
        FormError::NotConormal { object, sub } => FormError::NotNormal { object, sub },
        other => other,
    }
}
