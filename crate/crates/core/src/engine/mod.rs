//! Zigzags, subobject chasing, pyramids and homomorphism induction.

mod induce;
mod normality;
mod oracle;
mod pyramid;
mod zigzag;

pub use induce::{decide, induced_homomorphism, induces_homomorphism, induction_obstruction, Induction};
pub use normality::{conormal_to, coquotient, normal_to, normality_relation, subquotient, NormalityMode, Subquotient};
pub use oracle::{relation_oracle, OracleReport, Relation};
pub use pyramid::{embedding_diamond, node_count, projection_diamond, Construction, Edge, Node, Orientation, Pyramid};
pub use zigzag::{chase, ChaseTrace, Dir, Zigzag};
