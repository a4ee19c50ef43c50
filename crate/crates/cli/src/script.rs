//! The script syntax tree.

use formchase_core::Dir;

/// A parsed script. Equality compares statements and ignores source
/// positions, so a pretty-printed script re-parses to an equal one.
#[derive(Debug, Clone, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.statements.len() == other.statements.len()
            && self.statements.iter().zip(&other.statements).all(|(a, b)| a.stmt == b.stmt)
    }
}

impl Eq for Script {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    /// 1-based line of the statement's first token.
    pub line: usize,
    pub column: usize,
    pub stmt: Stmt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Klein,
    Quaternion,
    Table(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zero,
    Cyclic(usize),
    Table { add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, one: usize },
}

/// A subobject argument: a declared name, a literal, or a lattice bound of
/// the current model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubArg {
    Name(String),
    Literal(Vec<usize>),
    Top,
    Bottom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem {
    Diamond { object: String, a: SubArg, b: SubArg },
    DoubleQuotient { object: String, n: SubArg, s: SubArg },
    ImageTheorem { hom: String, w: SubArg, x: SubArg },
    Butterfly { object: String, s1: SubArg, s: SubArg, t1: SubArg, t: SubArg },
    ModularLaw { object: String, x: SubArg, y: SubArg, z: SubArg },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Group { name: String, spec: GroupSpec },
    Ring { name: String, spec: RingSpec },
    Hom { name: String, dom: String, cod: String, map: Vec<usize> },
    Sub { name: String, parent: String, elems: Vec<usize> },
    Zigzag { name: String, steps: Vec<(String, Dir)> },
    Scope { name: String, objects: Vec<String>, homs: Option<Vec<String>>, depth: Option<usize> },
    Chase { zigzag: String, dir: Dir, sub: SubArg },
    Induce { zigzag: String },
    Oracle { zigzag: String },
    Pyramid { zigzag: String },
    VerifyAxioms { scope: String },
    Verify(Theorem),
    Dualize(bool),
}

impl Stmt {
    /// Whether the statement is a command (as opposed to a declaration).
    pub fn is_command(&self) -> bool {
        !matches!(
            self,
            Stmt::Group { .. }
                | Stmt::Ring { .. }
                | Stmt::Hom { .. }
                | Stmt::Sub { .. }
                | Stmt::Zigzag { .. }
                | Stmt::Scope { .. }
        )
    }
}

/// Scope names available without a declaration: the certification scopes
/// of groups and of rings.
pub const BUILTIN_SCOPES: [&str; 2] = ["grp", "ring"];
