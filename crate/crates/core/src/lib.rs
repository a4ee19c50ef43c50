//! Finite models of a self-dual axiomatic theory of group-like structures,
//! with subobject chasing, homomorphism induction and executable
//! isomorphism theorems.

pub mod axioms;
pub mod catalogue;
pub mod concrete;
pub mod elemset;
pub mod engine;
pub mod error;
pub mod form;
pub mod group;
pub mod ring;
pub mod suite;
pub mod theorems;

pub use concrete::{Algebra, Concrete, GroupModel, Morphism, RingModel, SubObject};
pub use elemset::ElemSet;
pub use engine::{chase, ChaseTrace, Dir, Pyramid, Relation, Zigzag};
pub use error::{FormError, Result};
pub use form::{dualize, Dual, Factorization, FormModel};
pub use group::{GroupKind, GroupTable, Numbering};
pub use ring::RingTable;
