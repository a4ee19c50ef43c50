//! Script language and runners for the `formchase` command.

pub mod exec;
pub mod parse;
pub mod print;
pub mod script;
pub mod selftest;

pub use exec::{execute_script, Execution, Format, Options, Record};
pub use parse::{parse_script, ParseError, ParseErrorKind};
pub use print::pretty;
pub use script::Script;
