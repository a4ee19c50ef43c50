//! The triangular diagram built over a zigzag.
//!
//! Node `(p, q)` with `0 ≤ p ≤ q ≤ n` sits at level `q - p`; the base nodes
//! `(i, i)` are the zigzag's nodes and `(0, n)` is the apex. A node above the
//! base has two children, `(p, q - 1)` on its left and `(p + 1, q)` on its
//! right, and the edge to each child carries one morphism. An edge oriented
//! [`Orientation::TowardApex`] points from the child up to the parent and is
//! a projection; one oriented [`Orientation::TowardBase`] points from the
//! parent down to the child and is an embedding.

use std::fmt;

use crate::error::{FormError, Result};
use crate::form::FormModel;

use super::zigzag::{Dir, Zigzag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    TowardApex,
    TowardBase,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Edge<F> {
    pub mor: F,
    pub orientation: Orientation,
}

/// How the edges above a node were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Factorization of a forward base step.
    BaseForward,
    /// Factorization of a backward base step.
    BaseBackward,
    Projection,
    Embedding,
    /// Left wedge edge up, right wedge edge down.
    MixedLeftUp,
    /// Left wedge edge down, right wedge edge up.
    MixedLeftDown,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::BaseForward => "base-fwd",
            Construction::BaseBackward => "base-bwd",
            Construction::Projection => "projection",
            Construction::Embedding => "embedding",
            Construction::MixedLeftUp => "mixed-up-down",
            Construction::MixedLeftDown => "mixed-down-up",
        })
    }
}

pub type Node = (usize, usize);

#[derive(Debug, Clone)]
pub struct Pyramid<O, F> {
    n: usize,
    nodes: Vec<Option<O>>,
    left: Vec<Option<Edge<F>>>,
    right: Vec<Option<Edge<F>>>,
    built_by: Vec<Option<Construction>>,
    base: Vec<F>,
}

/// Number of nodes over a zigzag of length `n`.
pub fn node_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

fn capability(e: FormError) -> FormError {
    match e {
        FormError::NotNormal { .. } | FormError::NotConormal { .. } => FormError::ModelCapability(e.to_string()),
        other => other,
    }
}

/// Top of a projection diamond over `n: G → X` and `r: G → Y`: the
/// projection `p` for `Ker n ∨ Ker r` and the flanks `x`, `y` with
/// `x n = p = y r`.
pub fn projection_diamond<M: FormModel>(model: &M, n: &M::Mor, r: &M::Mor) -> Result<(M::Mor, M::Mor, M::Mor)> {
    let k = model.join(&model.kernel(n), &model.kernel(r));
    let p = model.projection(&k).map_err(capability)?;
    let x = model.extend_through_projection(n, &p)?;
    let y = model.extend_through_projection(r, &p)?;
    Ok((p, x, y))
}

/// Top of an embedding diamond under `m: X → G` and `k: Y → G`: the
/// embedding `e` for `Im m ∧ Im k` and the flanks `a`, `b` with
/// `m a = e = k b`.
pub fn embedding_diamond<M: FormModel>(model: &M, m: &M::Mor, k: &M::Mor) -> Result<(M::Mor, M::Mor, M::Mor)> {
    let i = model.meet(&model.image(m), &model.image(k));
    let e = model.embedding(&i).map_err(capability)?;
    let a = model.lift_through_embedding(m, &e)?;
    let b = model.lift_through_embedding(k, &e)?;
    Ok((e, a, b))
}

/// `(projection, embedding ∘ iso)` of a factorization.
fn triangle<M: FormModel>(model: &M, f: &M::Mor) -> Result<(M::Mor, M::Mor)> {
    let fac = model.factorize(f)?;
    let down = model.compose(&fac.embedding, &fac.iso)?;
    Ok((fac.projection, down))
}

impl<O: Clone + PartialEq + fmt::Debug, F: Clone + PartialEq + fmt::Debug> Pyramid<O, F> {
    fn idx(&self, (p, q): Node) -> usize {
        debug_assert!(p <= q && q <= self.n);
        p * (self.n + 1) + q
    }

    pub fn build<M>(model: &M, z: &Zigzag<O, F>) -> Result<Self>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        let n = z.len();
        let size = (n + 1) * (n + 1);
        let mut pyr = Pyramid {
            n,
            nodes: vec![None; size],
            left: vec![None; size],
            right: vec![None; size],
            built_by: vec![None; size],
            base: z.steps().iter().map(|(f, _)| f.clone()).collect(),
        };
        for (i, x) in z.nodes().iter().enumerate() {
            let k = pyr.idx((i, i));
            pyr.nodes[k] = Some(x.clone());
        }
        for (i, (f, d)) in z.steps().iter().enumerate() {
            let (up, down) = triangle(model, f)?;
            let top = model.cod(&up);
            let up = Edge { mor: up, orientation: Orientation::TowardApex };
            let down = Edge { mor: down, orientation: Orientation::TowardBase };
            let k = pyr.idx((i, i + 1));
            pyr.nodes[k] = Some(top);
            match d {
                Dir::Fwd => {
                    pyr.left[k] = Some(up);
                    pyr.right[k] = Some(down);
                    pyr.built_by[k] = Some(Construction::BaseForward);
                }
                Dir::Bwd => {
                    pyr.left[k] = Some(down);
                    pyr.right[k] = Some(up);
                    pyr.built_by[k] = Some(Construction::BaseBackward);
                }
            }
        }
        for level in 2..=n {
            for p in 0..=n - level {
                let q = p + level;
                pyr.build_diamond(model, (p, q))?;
            }
        }
        Ok(pyr)
    }

    fn build_diamond<M>(&mut self, model: &M, top: Node) -> Result<()>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        let (p, q) = top;
        // the wedge: left node (p, q-1) and right node (p+1, q) over the
        // bottom node (p+1, q-1)
        let wl = self.right[self.idx((p, q - 1))].clone().expect("lower level is built");
        let wr = self.left[self.idx((p + 1, q))].clone().expect("lower level is built");
        use Orientation::*;
        let (left, right, obj, how) = match (wl.orientation, wr.orientation) {
            (TowardApex, TowardApex) => {
                let (pr, x, y) = projection_diamond(model, &wl.mor, &wr.mor)?;
                let obj = model.cod(&pr);
                (
                    Edge { mor: x, orientation: TowardApex },
                    Edge { mor: y, orientation: TowardApex },
                    obj,
                    Construction::Projection,
                )
            }
            (TowardBase, TowardBase) => {
                let (e, a, b) = embedding_diamond(model, &wl.mor, &wr.mor)?;
                let obj = model.dom(&e);
                (
                    Edge { mor: a, orientation: TowardBase },
                    Edge { mor: b, orientation: TowardBase },
                    obj,
                    Construction::Embedding,
                )
            }
            (TowardApex, TowardBase) => {
                // right node --m--> bottom --n--> left node
                let across = model.compose(&wl.mor, &wr.mor)?;
                let (up, down) = triangle(model, &across)?;
                let obj = model.cod(&up);
                (
                    Edge { mor: down, orientation: TowardBase },
                    Edge { mor: up, orientation: TowardApex },
                    obj,
                    Construction::MixedLeftUp,
                )
            }
            (TowardBase, TowardApex) => {
                // left node --m--> bottom --n--> right node
                let across = model.compose(&wr.mor, &wl.mor)?;
                let (up, down) = triangle(model, &across)?;
                let obj = model.cod(&up);
                (
                    Edge { mor: up, orientation: TowardApex },
                    Edge { mor: down, orientation: TowardBase },
                    obj,
                    Construction::MixedLeftDown,
                )
            }
        };
        let k = self.idx(top);
        self.nodes[k] = Some(obj);
        self.left[k] = Some(left);
        self.right[k] = Some(right);
        self.built_by[k] = Some(how);
        Ok(())
    }

    /// Length of the underlying zigzag.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        node_count(self.n)
    }

    /// All nodes, level by level from the base, left to right.
    pub fn node_keys(&self) -> Vec<Node> {
        (0..=self.n).flat_map(|level| (0..=self.n - level).map(move |p| (p, p + level))).collect()
    }

    pub fn node(&self, at: Node) -> &O {
        self.nodes[self.idx(at)].as_ref().expect("node exists")
    }

    pub fn apex(&self) -> &O {
        self.node((0, self.n))
    }

    /// The edge from `(p, q)` to its left child `(p, q - 1)`.
    pub fn left_edge(&self, at: Node) -> &Edge<F> {
        self.left[self.idx(at)].as_ref().expect("edge exists above the base")
    }

    /// The edge from `(p, q)` to its right child `(p + 1, q)`.
    pub fn right_edge(&self, at: Node) -> &Edge<F> {
        self.right[self.idx(at)].as_ref().expect("edge exists above the base")
    }

    pub fn construction(&self, at: Node) -> Option<Construction> {
        self.built_by[self.idx(at)]
    }

    /// The edge joining two adjacent nodes, with the upper node first.
    fn edge_between(&self, a: Node, b: Node) -> Option<(&Edge<F>, bool)> {
        let (upper, lower, a_is_upper) = if a.1 - a.0 > b.1 - b.0 { (a, b, true) } else { (b, a, false) };
        if upper.1 - upper.0 != lower.1 - lower.0 + 1 {
            return None;
        }
        if lower == (upper.0, upper.1 - 1) {
            Some((self.left_edge(upper), a_is_upper))
        } else if lower == (upper.0 + 1, upper.1) {
            Some((self.right_edge(upper), a_is_upper))
        } else {
            None
        }
    }

    /// The morphism between adjacent nodes `a` and `b` read as a zigzag
    /// step from `a` to `b`.
    pub fn step(&self, a: Node, b: Node) -> Result<(F, Dir)> {
        let (edge, a_is_upper) = self
            .edge_between(a, b)
            .ok_or_else(|| FormError::InvalidZigzag(format!("{a:?} and {b:?} are not adjacent")))?;
        let forward = match edge.orientation {
            Orientation::TowardApex => !a_is_upper,
            Orientation::TowardBase => a_is_upper,
        };
        Ok((edge.mor.clone(), if forward { Dir::Fwd } else { Dir::Bwd }))
    }

    /// The zigzag read off a path of adjacent nodes.
    pub fn path_zigzag<M>(&self, model: &M, path: &[Node]) -> Result<Zigzag<O, F>>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        if path.len() < 2 {
            return Ok(Zigzag::identity(model, self.node(path[0])));
        }
        let steps = path.windows(2).map(|w| self.step(w[0], w[1])).collect::<Result<Vec<_>>>()?;
        Zigzag::new(model, steps)
    }

    /// Up the left flank from `(0, 0)` to the apex, then down the right
    /// flank to `(n, n)`.
    pub fn principal_path(&self) -> Vec<Node> {
        let n = self.n;
        (0..=n).map(|q| (0, q)).chain((1..=n).map(|p| (p, n))).collect()
    }

    pub fn principal_zigzag<M>(&self, model: &M) -> Result<Zigzag<O, F>>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        self.path_zigzag(model, &self.principal_path())
    }

    /// Every horizontal path from `a` to `b`: each move raises `p` or `q` by
    /// one.
    pub fn horizontal_paths(&self, a: Node, b: Node) -> Vec<Vec<Node>> {
        let mut out = Vec::new();
        if a.0 <= b.0 && a.1 <= b.1 {
            let mut path = vec![a];
            self.walk(a, b, true, &mut path, &mut out);
        }
        out
    }

    /// Every vertical path from the lower node `a` up to `b`: each move
    /// lowers `p` or raises `q` by one.
    pub fn vertical_paths(&self, a: Node, b: Node) -> Vec<Vec<Node>> {
        let mut out = Vec::new();
        if b.0 <= a.0 && a.1 <= b.1 {
            let mut path = vec![a];
            self.walk(a, b, false, &mut path, &mut out);
        }
        out
    }

    fn walk(&self, at: Node, goal: Node, horizontal: bool, path: &mut Vec<Node>, out: &mut Vec<Vec<Node>>) {
        if at == goal {
            out.push(path.clone());
            return;
        }
        let mut moves = Vec::with_capacity(2);
        if horizontal {
            if at.0 < goal.0 && at.0 < at.1 {
                moves.push((at.0 + 1, at.1));
            }
            if at.1 < goal.1 {
                moves.push((at.0, at.1 + 1));
            }
        } else {
            if at.0 > goal.0 {
                moves.push((at.0 - 1, at.1));
            }
            if at.1 < goal.1 {
                moves.push((at.0, at.1 + 1));
            }
        }
        for next in moves {
            path.push(next);
            self.walk(next, goal, horizontal, path, out);
            path.pop();
        }
    }

    /// Chases `s` (a subobject of the first node) along a path of adjacent
    /// nodes.
    pub fn chase_path<M>(&self, model: &M, path: &[Node], s: &M::Sub) -> Result<M::Sub>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        let mut cur = s.clone();
        for w in path.windows(2) {
            let (f, d) = self.step(w[0], w[1])?;
            cur = match d {
                Dir::Fwd => model.direct_image(&f, &cur)?,
                Dir::Bwd => model.inverse_image(&f, &cur)?,
            };
        }
        Ok(cur)
    }

    /// Structural certificate: upward edges are projections, downward edges
    /// embeddings, and every base triangle and diamond commutes.
    pub fn verify<M>(&self, model: &M) -> Result<()>
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        let fail = |what: String| Err(FormError::InternalConsistency(what));
        for at in self.node_keys() {
            if at.0 == at.1 {
                continue;
            }
            for edge in [self.left_edge(at), self.right_edge(at)] {
                let ok = match edge.orientation {
                    Orientation::TowardApex => model.is_projection(&edge.mor),
                    Orientation::TowardBase => model.is_embedding(&edge.mor),
                };
                if !ok {
                    return fail(format!("edge below {at:?} has the wrong kind"));
                }
            }
            let (l, r) = (self.left_edge(at), self.right_edge(at));
            let commutes = match self.construction(at).expect("built") {
                Construction::BaseForward => model.compose(&r.mor, &l.mor)? == self.base[at.0],
                Construction::BaseBackward => model.compose(&l.mor, &r.mor)? == self.base[at.0],
                how => {
                    let wl = self.right_edge((at.0, at.1 - 1));
                    let wr = self.left_edge((at.0 + 1, at.1));
                    match how {
                        Construction::Projection => {
                            model.compose(&l.mor, &wl.mor)? == model.compose(&r.mor, &wr.mor)?
                        }
                        Construction::Embedding => model.compose(&wl.mor, &l.mor)? == model.compose(&wr.mor, &r.mor)?,
                        Construction::MixedLeftUp => {
                            model.compose(&l.mor, &r.mor)? == model.compose(&wl.mor, &wr.mor)?
                        }
                        Construction::MixedLeftDown => {
                            model.compose(&r.mor, &l.mor)? == model.compose(&wr.mor, &wl.mor)?
                        }
                        _ => unreachable!(),
                    }
                }
            };
            if !commutes {
                return fail(format!("diamond under {at:?} does not commute"));
            }
        }
        Ok(())
    }

    /// Text rendering, one line per node from the apex down.
    pub fn render<M>(&self, model: &M) -> String
    where
        M: FormModel<Obj = O, Mor = F>,
    {
        let mut out = String::new();
        for level in (0..=self.n).rev() {
            for p in 0..=self.n - level {
                let at = (p, p + level);
                let obj = self.node(at);
                let card = model.cardinality(obj).map(|c| format!(" |{c}|")).unwrap_or_default();
                out.push_str(&format!("({},{}){card}", at.0, at.1));
                if level > 0 {
                    let arrow = |e: &Edge<F>| match e.orientation {
                        Orientation::TowardApex => "up",
                        Orientation::TowardBase => "down",
                    };
                    let (l, r) = (self.left_edge(at), self.right_edge(at));
                    out.push_str(&format!(
                        " {} left {} {} right {} {}",
                        self.construction(at).expect("built"),
                        arrow(l),
                        model.describe_mor(&l.mor),
                        arrow(r),
                        model.describe_mor(&r.mor)
                    ));
                }
                out.push('\n');
            }
        }
        out
    }
}
