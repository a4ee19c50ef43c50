use crate::error::{FormError, Result};
use crate::form::{Dual, FormModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalityMode {
    /// `B ◁ A`: `B ⊆ A`, `A` conormal and `ι_A⁻¹B` normal.
    NormalTo,
    /// `A` conormal to `B`: `B` normal, `B ⊆ A` and `π_B A` conormal.
    ConormalTo,
}

/// `B ◁ A`.
pub fn normal_to<M: FormModel>(model: &M, b: &M::Sub, a: &M::Sub) -> bool {
    if model.parent(a) != model.parent(b) || !model.leq(b, a) || !model.is_conormal(a) {
        return false;
    }
    let Ok(i) = model.embedding(a) else {
        return false;
    };
    model.inverse_image(&i, b).map(|s| model.is_normal(&s)).unwrap_or(false)
}

/// `A` is conormal to `B`; the dual of [`normal_to`].
pub fn conormal_to<M: FormModel>(model: &M, b: &M::Sub, a: &M::Sub) -> bool {
    normal_to(&Dual(model), a, b)
}

pub fn normality_relation<M: FormModel>(model: &M, b: &M::Sub, a: &M::Sub, mode: NormalityMode) -> bool {
    match mode {
        NormalityMode::NormalTo => normal_to(model, b, a),
        NormalityMode::ConormalTo => conormal_to(model, b, a),
    }
}

/// `A/B = (A/1)/ι_A⁻¹B` together with the two morphisms that define it.
#[derive(Debug, Clone, PartialEq)]
pub struct Subquotient<O, F> {
    pub object: O,
    /// `ι_A : A/1 → G` (for a coquotient, `π_B : G → G/B`).
    pub outer: F,
    /// `π : A/1 → A/B` (for a coquotient, `ι : (π_B A)/1 → G/B`).
    pub inner: F,
}

/// `A/B`, defined when `B ◁ A`.
pub fn subquotient<M: FormModel>(model: &M, a: &M::Sub, b: &M::Sub) -> Result<Subquotient<M::Obj, M::Mor>> {
    if !normal_to(model, b, a) {
        return Err(FormError::NormalityViolation(format!("{b} is not normal to {a}")));
    }
    let outer = model.embedding(a)?;
    let inner = model.projection(&model.inverse_image(&outer, b)?)?;
    Ok(Subquotient { object: model.cod(&inner), outer, inner })
}

/// `B\A = (π_B A)/1`, defined when `A` is conormal to `B`: the subquotient
/// of the dual model.
pub fn coquotient<M: FormModel>(model: &M, b: &M::Sub, a: &M::Sub) -> Result<Subquotient<M::Obj, M::Mor>> {
    if !conormal_to(model, b, a) {
        return Err(FormError::NormalityViolation(format!("{a} is not conormal to {b}")));
    }
    subquotient(&Dual(model), b, a)
}
