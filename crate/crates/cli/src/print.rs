//! Canonical rendering of a script, one statement per line plus table rows.

use std::fmt::{self, Write};

use crate::script::{GroupSpec, RingSpec, Script, Stmt, SubArg, Theorem};

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn rows(out: &mut String, rows: &[Vec<usize>]) -> fmt::Result {
    for r in rows {
        writeln!(out, "  {}", join(r, " "))?;
    }
    Ok(())
}

fn sub(s: &SubArg) -> String {
    match s {
        SubArg::Name(n) => n.clone(),
        SubArg::Literal(v) => format!("{{{}}}", join(v, ",")),
        SubArg::Top => "top".into(),
        SubArg::Bottom => "bottom".into(),
    }
}

pub fn pretty(script: &Script) -> String {
    let mut out = String::new();
    for st in &script.statements {
        statement(&mut out, &st.stmt).expect("writing to a String cannot fail");
    }
    out
}

pub fn statement(out: &mut String, stmt: &Stmt) -> fmt::Result {
    match stmt {
        Stmt::Group { name, spec } => match spec {
            GroupSpec::Cyclic(k) => writeln!(out, "group {name} cyclic {k}")?,
            GroupSpec::Dihedral(k) => writeln!(out, "group {name} dihedral {k}")?,
            GroupSpec::Symmetric(k) => writeln!(out, "group {name} symmetric {k}")?,
            GroupSpec::Klein => writeln!(out, "group {name} klein")?,
            GroupSpec::Quaternion => writeln!(out, "group {name} quaternion")?,
            GroupSpec::Table(t) => {
                writeln!(out, "group {name} table {}", t.len())?;
                rows(out, t)?;
            }
        },
        Stmt::Ring { name, spec } => match spec {
            RingSpec::Zero => writeln!(out, "ring {name} zero")?,
            RingSpec::Cyclic(k) => writeln!(out, "ring {name} cyclic {k}")?,
            RingSpec::Table { add, mul, one } => {
                writeln!(out, "ring {name} table {} one={one}", add.len())?;
                rows(out, add)?;
                out.push_str("  mul\n");
                rows(out, mul)?;
            }
        },
        Stmt::Hom { name, dom, cod, map } => {
            write!(out, "hom {name} : {dom} -> {cod} map")?;
            for x in map {
                write!(out, " {x}")?;
            }
            out.push('\n');
        }
        Stmt::Sub { name, parent, elems } => {
            writeln!(out, "sub {name} of {parent} = {{{}}}", join(elems, ","))?;
        }
        Stmt::Zigzag { name, steps } => {
            let steps: Vec<String> = steps.iter().map(|(h, d)| format!("{h} {}", d.as_str())).collect();
            writeln!(out, "zigzag {name} = {}", steps.join(", "))?;
        }
        Stmt::Scope { name, objects, homs, depth } => {
            write!(out, "scope {name} = {}", objects.join(" "))?;
            if let Some(h) = homs {
                out.push_str(" with");
                for x in h {
                    write!(out, " {x}")?;
                }
            }
            if let Some(d) = depth {
                write!(out, " depth {d}")?;
            }
            out.push('\n');
        }
        Stmt::Chase { zigzag, dir, sub: s } => {
            writeln!(out, "chase {zigzag} {} {}", dir.as_str(), sub(s))?;
        }
        Stmt::Induce { zigzag } => writeln!(out, "induce {zigzag}")?,
        Stmt::Oracle { zigzag } => writeln!(out, "oracle {zigzag}")?,
        Stmt::Pyramid { zigzag } => writeln!(out, "pyramid {zigzag}")?,
        Stmt::VerifyAxioms { scope } => writeln!(out, "verify axioms {scope}")?,
        Stmt::Verify(t) => {
            let line = match t {
                Theorem::Diamond { object, a, b } => format!("diamond {object} {} {}", sub(a), sub(b)),
                Theorem::DoubleQuotient { object, n, s } => format!("doublequotient {object} {} {}", sub(n), sub(s)),
                Theorem::ImageTheorem { hom, w, x } => format!("imagetheorem {hom} {} {}", sub(w), sub(x)),
                Theorem::Butterfly { object, s1, s, t1, t } => {
                    format!("butterfly {object} {} {} {} {}", sub(s1), sub(s), sub(t1), sub(t))
                }
                Theorem::ModularLaw { object, x, y, z } => {
                    format!("modularlaw {object} {} {} {}", sub(x), sub(y), sub(z))
                }
            };
            writeln!(out, "verify {line}")?;
        }
        Stmt::Dualize(on) => writeln!(out, "dualize {}", if *on { "on" } else { "off" })?,
    }
    Ok(())
}

/// One-line rendering of a command, used as the header of its output.
pub fn command_line(stmt: &Stmt) -> String {
    let mut s = String::new();
    statement(&mut s, stmt).expect("writing to a String cannot fail");
    s.lines().next().unwrap_or_default().to_string()
}
