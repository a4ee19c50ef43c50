use crate::error::{FormError, Result};
use crate::form::FormModel;

use super::pyramid::Pyramid;
use super::zigzag::{chase, Dir, Zigzag};

/// Why a zigzag fails the induction criterion, if it does.
pub fn induction_obstruction<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>) -> Option<String> {
    let bottom = model.bottom(z.first());
    let fwd = chase(model, z, &bottom, Dir::Fwd).expect("bottom of the first node");
    if !model.is_bottom(fwd.result()) {
        return Some(format!("forward chase of 1 = {}", fwd.result()));
    }
    let top = model.top(z.last());
    let bwd = chase(model, z, &top, Dir::Bwd).expect("top of the last node");
    if !model.is_top(bwd.result()) {
        return Some(format!("backward chase of ⊤ = {}", bwd.result()));
    }
    None
}

/// Chasing `1` forward ends at `1` and chasing `⊤` backward ends at `⊤`.
pub fn induces_homomorphism<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>) -> bool {
    induction_obstruction(model, z).is_none()
}

/// Outcome of the certified decision procedure.
#[derive(Debug, Clone)]
pub struct Induction<O, F> {
    pub pyramid: Pyramid<O, F>,
    pub principal: Zigzag<O, F>,
    /// The induced morphism, when the zigzag induces one.
    pub morphism: Option<F>,
    /// The failed chase, when it does not.
    pub obstruction: Option<String>,
}

/// Decides induction twice, by the chase criterion and by collapsibility of
/// the principal horizontal zigzag of the pyramid, and extracts the induced
/// morphism. Disagreement, a non-commuting pyramid or an induced morphism
/// whose images differ from the chases is reported as
/// [`FormError::InternalConsistency`].
pub fn decide<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>) -> Result<Induction<M::Obj, M::Mor>> {
    let obstruction = induction_obstruction(model, z);
    let pyramid = Pyramid::build(model, z)?;
    pyramid.verify(model)?;
    let principal = pyramid.principal_zigzag(model)?;
    let collapsible = principal.is_collapsible(model);
    if collapsible != obstruction.is_none() {
        return Err(FormError::InternalConsistency(format!(
            "chase criterion says {} but the principal zigzag is {}collapsible",
            obstruction.as_deref().unwrap_or("inducible"),
            if collapsible { "" } else { "not " }
        )));
    }
    let morphism = if collapsible {
        let f = principal.collapse(model)?;
        check_images(model, z, &f)?;
        Some(f)
    } else {
        None
    };
    Ok(Induction { pyramid, principal, morphism, obstruction })
}

/// The induced morphism `X₀ → Xₙ`.
pub fn induced_homomorphism<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>) -> Result<M::Mor> {
    let d = decide(model, z)?;
    match d.morphism {
        Some(f) => Ok(f),
        None => Err(FormError::NotInducible(d.obstruction.expect("set when not collapsible"))),
    }
}

/// Direct and inverse images of `f` agree with forward and backward chases.
fn check_images<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>, f: &M::Mor) -> Result<()> {
    for s in model.subobjects(z.first()) {
        let chased = chase(model, z, &s, Dir::Fwd)?;
        if model.direct_image(f, &s)? != *chased.result() {
            return Err(FormError::InternalConsistency(format!(
                "direct image of {s} along the induced morphism differs from the forward chase"
            )));
        }
    }
    for s in model.subobjects(z.last()) {
        let chased = chase(model, z, &s, Dir::Bwd)?;
        if model.inverse_image(f, &s)? != *chased.result() {
            return Err(FormError::InternalConsistency(format!(
                "inverse image of {s} along the induced morphism differs from the backward chase"
            )));
        }
    }
    Ok(())
}
