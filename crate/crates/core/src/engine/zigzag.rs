use std::fmt;

use crate::error::{FormError, Result};
use crate::form::FormModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Fwd,
    Bwd,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Fwd => Dir::Bwd,
            Dir::Bwd => Dir::Fwd,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dir::Fwd => "fwd",
            Dir::Bwd => "bwd",
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A chain `X₀ ~ X₁ ~ … ~ Xₙ` of morphisms, each read forward
/// (`Xᵢ₋₁ → Xᵢ`) or backward (`Xᵢ₋₁ ← Xᵢ`).
#[derive(Debug, Clone, PartialEq)]
pub struct Zigzag<O, F> {
    steps: Vec<(F, Dir)>,
    nodes: Vec<O>,
}

impl<O: Clone + PartialEq + fmt::Debug, F: Clone> Zigzag<O, F> {
    /// Checks that adjacent endpoints agree. An empty step list is refused;
    /// use an identity step for a zigzag of length zero.
    pub fn new<M>(model: &M, steps: Vec<(F, Dir)>) -> Result<Self>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        if steps.is_empty() {
            return Err(FormError::InvalidZigzag("a zigzag needs at least one step".into()));
        }
        let ends = |(f, d): &(F, Dir)| match d {
            Dir::Fwd => (model.dom(f), model.cod(f)),
            Dir::Bwd => (model.cod(f), model.dom(f)),
        };
        let mut nodes = vec![ends(&steps[0]).0];
        for (i, step) in steps.iter().enumerate() {
            let (from, to) = ends(step);
            if from != nodes[i] {
                return Err(FormError::InvalidZigzag(format!(
                    "step {} starts at {} but the previous node is {}",
                    i + 1,
                    model.describe_obj(&from),
                    model.describe_obj(&nodes[i])
                )));
            }
            nodes.push(to);
        }
        Ok(Zigzag { steps, nodes })
    }

    /// A single forward identity step.
    pub fn identity<M>(model: &M, x: &O) -> Self
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        Zigzag { steps: vec![(model.identity(x), Dir::Fwd)], nodes: vec![x.clone(), x.clone()] }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[(F, Dir)] {
        &self.steps
    }

    /// `X₀ … Xₙ`.
    pub fn nodes(&self) -> &[O] {
        &self.nodes
    }

    pub fn first(&self) -> &O {
        &self.nodes[0]
    }

    pub fn last(&self) -> &O {
        &self.nodes[self.nodes.len() - 1]
    }

    /// The mirror image: steps reversed, directions flipped.
    pub fn opposite(&self) -> Self {
        Zigzag {
            steps: self.steps.iter().rev().map(|(f, d)| (f.clone(), d.flip())).collect(),
            nodes: self.nodes.iter().rev().cloned().collect(),
        }
    }

    /// True when every backward step is an isomorphism.
    pub fn is_collapsible<M>(&self, model: &M) -> bool
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        self.steps.iter().all(|(f, d)| *d == Dir::Fwd || model.is_isomorphism(f))
    }

    /// Composite of a collapsible zigzag, backward steps inverted.
    pub fn collapse<M>(&self, model: &M) -> Result<F>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        let mut acc = model.identity(self.first());
        for (f, d) in &self.steps {
            let step = match d {
                Dir::Fwd => f.clone(),
                Dir::Bwd => model.invert(f)?,
            };
            acc = model.compose(&step, &acc)?;
        }
        Ok(acc)
    }
}

/// Subobjects visited by a chase, starting at the node the chase began from.
#[derive(Debug, Clone, PartialEq)]
pub struct ChaseTrace<S> {
    pub dir: Dir,
    pub subs: Vec<S>,
}

impl<S> ChaseTrace<S> {
    pub fn result(&self) -> &S {
        self.subs.last().expect("a trace is never empty")
    }
}

/// Transports `s` along `z`: forward from `X₀` (direct images on forward
/// steps, inverse images on backward ones) or backward from `Xₙ`.
pub fn chase<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>, s: &M::Sub, dir: Dir) -> Result<ChaseTrace<M::Sub>> {
    let start = match dir {
        Dir::Fwd => z.first(),
        Dir::Bwd => z.last(),
    };
    if model.parent(s) != *start {
        return Err(FormError::ParentMismatch { what: s.to_string(), expected: model.describe_obj(start) });
    }
    let mut subs = vec![s.clone()];
    let mut cur = s.clone();
    let mut apply = |f: &M::Mor, image: bool| -> Result<()> {
        cur = if image { model.direct_image(f, &cur)? } else { model.inverse_image(f, &cur)? };
        subs.push(cur.clone());
        Ok(())
    };
    match dir {
        Dir::Fwd => {
            for (f, d) in z.steps() {
                apply(f, *d == Dir::Fwd)?;
            }
        }
        Dir::Bwd => {
            for (f, d) in z.steps().iter().rev() {
                apply(f, *d == Dir::Bwd)?;
            }
        }
    }
    Ok(ChaseTrace { dir, subs })
}
