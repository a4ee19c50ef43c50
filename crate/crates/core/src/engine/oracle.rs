use std::fmt;

use crate::elemset::ElemSet;
use crate::error::{FormError, Result};
use crate::form::FormModel;

use super::zigzag::{Dir, Zigzag};

/// A relation between the carriers of two objects, one row per element of
/// the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<ElemSet>,
}

impl Relation {
    pub fn identity(n: usize) -> Self {
        Relation { rows: (0..n).map(ElemSet::singleton).collect() }
    }

    /// The graph of an element map.
    pub fn graph(map: &[usize]) -> Self {
        Relation { rows: map.iter().map(|&y| ElemSet::singleton(y)).collect() }
    }

    pub fn rows(&self) -> &[ElemSet] {
        &self.rows
    }

    pub fn related(&self, x: usize) -> ElemSet {
        self.rows[x]
    }

    /// Each element is related to at most one element.
    pub fn is_function(&self) -> bool {
        self.rows.iter().all(|r| r.len() <= 1)
    }

    /// Each element is related to at least one element.
    pub fn is_total(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty())
    }

    /// The element map, when the relation is a total function.
    pub fn as_map(&self) -> Option<Vec<usize>> {
        self.rows.iter().map(|r| if r.len() == 1 { r.first() } else { None }).collect()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows.iter().enumerate().flat_map(|(x, r)| r.iter().map(move |y| (x, y))).collect()
    }

    /// `self` followed by the graph of `f`.
    fn then_forward(&self, f: &[usize]) -> Self {
        Relation { rows: self.rows.iter().map(|r| r.iter().map(|y| f[y]).collect()).collect() }
    }

    /// `self` followed by the opposite of the graph of `f`.
    fn then_backward(&self, f: &[usize], cod_order: usize) -> Self {
        let mut fibres = vec![ElemSet::empty(); cod_order];
        for (x, &y) in f.iter().enumerate() {
            fibres[y].insert(x);
        }
        Relation {
            rows: self.rows.iter().map(|r| r.iter().fold(ElemSet::empty(), |acc, y| acc.union(&fibres[y]))).collect(),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, y)) in self.pairs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}->{y}")?;
        }
        f.write_str("}")
    }
}

/// What the oracle learned about a zigzag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub relation: Relation,
    pub is_function: bool,
    pub is_total: bool,
    /// Whether the map preserves the structure; `None` unless the relation
    /// is a total function.
    pub is_hom: Option<bool>,
}

impl OracleReport {
    pub fn is_total_function(&self) -> bool {
        self.is_function && self.is_total
    }
}

/// Composes the element relations of the steps: the graph of `f` on forward
/// steps and its opposite on backward ones.
pub fn relation_oracle<M: FormModel>(model: &M, z: &Zigzag<M::Obj, M::Mor>) -> Result<OracleReport> {
    let capability = || FormError::ModelCapability("the relation oracle needs an element-level model".into());
    let n0 = model.cardinality(z.first()).ok_or_else(capability)?;
    let mut rel = Relation::identity(n0);
    for (i, (f, d)) in z.steps().iter().enumerate() {
        let map = model.element_map(f).ok_or_else(capability)?;
        rel = match d {
            Dir::Fwd => rel.then_forward(&map),
            Dir::Bwd => {
                let n = model.cardinality(&z.nodes()[i]).ok_or_else(capability)?;
                rel.then_backward(&map, n)
            }
        };
    }
    let (is_function, is_total) = (rel.is_function(), rel.is_total());
    let is_hom =
        rel.as_map().map(|map| model.from_element_map(z.first(), z.last(), map).map(|r| r.is_ok()).unwrap_or(false));
    Ok(OracleReport { relation: rel, is_function, is_total, is_hom })
}
