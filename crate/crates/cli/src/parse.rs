//! Line-oriented script parser.

use std::collections::HashSet;
use std::fmt;

use formchase_core::Dir;

use crate::script::{GroupSpec, RingSpec, Script, Statement, Stmt, SubArg, Theorem, BUILTIN_SCOPES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UndefinedName,
    DuplicateName,
    Arity,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::UndefinedName => "undefined name",
            ParseErrorKind::DuplicateName => "duplicate name",
            ParseErrorKind::Arity => "arity error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}: {}", self.line, self.column, self.kind.as_str(), self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Sym(&'static str),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
        }
    }
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '\'' | '.' | '^')
}

/// Tokens of one line with their 1-based columns; `#` starts a comment.
fn lex(text: &str, line: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if is_name_start(c) {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n = digits.parse().map_err(|_| ParseError {
                kind: ParseErrorKind::Syntax,
                line,
                column: col,
                message: format!("number `{digits}` is too large"),
            })?;
            out.push((Tok::Int(n), col));
            continue;
        }
        let sym = match c {
            '-' if chars.get(i + 1) == Some(&'>') => "->",
            ':' => ":",
            '=' => "=",
            ',' => ",",
            '{' => "{",
            '}' => "}",
            _ => {
                return Err(ParseError {
                    kind: ParseErrorKind::Syntax,
                    line,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        i += sym.len();
        out.push((Tok::Sym(sym), col));
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end: usize,
}

/// A command argument: a name or a subobject literal.
enum Atom {
    Name(String, usize),
    Literal(Vec<usize>),
}

impl Cursor {
    fn err(&self, kind: ParseErrorKind, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { kind, line: self.line, column, message: message.into() }
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let found = self.peek().map_or("end of line".to_string(), |t| t.to_string());
        self.err(ParseErrorKind::Syntax, self.col(), format!("expected {wanted}, found {found}"))
    }

    fn ident(&mut self, wanted: &str) -> Result<(String, usize), ParseError> {
        match self.toks.get(self.pos) {
            Some((Tok::Ident(s), c)) => {
                let r = (s.clone(), *c);
                self.pos += 1;
                Ok(r)
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn int(&mut self, wanted: &str) -> Result<usize, ParseError> {
        match self.toks.get(self.pos) {
            Some((Tok::Int(n), _)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn sym(&mut self, s: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(s)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{s}`")))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.peek_keyword(kw) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{kw}`")))
        }
    }

    fn peek_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }

    fn done(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of line"))
        }
    }

    fn literal(&mut self) -> Result<Vec<usize>, ParseError> {
        self.sym("{")?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::Sym("}")) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.int("an element index")?);
            match self.peek() {
                Some(Tok::Sym(",")) => self.pos += 1,
                Some(Tok::Sym("}")) => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.unexpected("`,` or `}`")),
            }
        }
    }

    fn atoms(&mut self) -> Result<Vec<Atom>, ParseError> {
        let mut out = Vec::new();
        while let Some(t) = self.peek() {
            match t {
                Tok::Ident(_) => {
                    let (n, c) = self.ident("a name")?;
                    out.push(Atom::Name(n, c));
                }
                Tok::Sym("{") => out.push(Atom::Literal(self.literal()?)),
                _ => return Err(self.unexpected("a name or a subobject literal")),
            }
        }
        Ok(out)
    }
}

#[derive(Default)]
struct Names {
    objects: HashSet<String>,
    homs: HashSet<String>,
    subs: HashSet<String>,
    zigzags: HashSet<String>,
    scopes: HashSet<String>,
}

#[derive(Clone, Copy)]
enum Kind {
    Object,
    Hom,
    Sub,
    Zigzag,
    Scope,
}

impl Kind {
    fn noun(self) -> &'static str {
        match self {
            Kind::Object => "object",
            Kind::Hom => "homomorphism",
            Kind::Sub => "subobject",
            Kind::Zigzag => "zigzag",
            Kind::Scope => "scope",
        }
    }
}

impl Names {
    fn set(&mut self, k: Kind) -> &mut HashSet<String> {
        match k {
            Kind::Object => &mut self.objects,
            Kind::Hom => &mut self.homs,
            Kind::Sub => &mut self.subs,
            Kind::Zigzag => &mut self.zigzags,
            Kind::Scope => &mut self.scopes,
        }
    }

    fn declare(&mut self, cur: &Cursor, k: Kind, name: &str, col: usize) -> Result<(), ParseError> {
        let reserved = matches!(name, "top" | "bottom") && matches!(k, Kind::Sub)
            || BUILTIN_SCOPES.contains(&name) && matches!(k, Kind::Scope);
        if reserved {
            return Err(cur.err(ParseErrorKind::DuplicateName, col, format!("`{name}` is reserved")));
        }
        if !self.set(k).insert(name.to_string()) {
            return Err(cur.err(
                ParseErrorKind::DuplicateName,
                col,
                format!("{} `{name}` is already declared", k.noun()),
            ));
        }
        Ok(())
    }

    fn require(&mut self, cur: &Cursor, k: Kind, name: &str, col: usize) -> Result<(), ParseError> {
        let builtin = matches!(k, Kind::Scope) && BUILTIN_SCOPES.contains(&name);
        if builtin || self.set(k).contains(name) {
            Ok(())
        } else {
            Err(cur.err(ParseErrorKind::UndefinedName, col, format!("no {} named `{name}`", k.noun())))
        }
    }
}

/// Source lines with their 1-based numbers.
struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { lines: text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect(), next: 0 }
    }

    /// The next line that has tokens.
    fn next_tokens(&mut self) -> Result<Option<Cursor>, ParseError> {
        while self.next < self.lines.len() {
            let (line, text) = self.lines[self.next];
            self.next += 1;
            let toks = lex(text, line)?;
            if !toks.is_empty() {
                return Ok(Some(Cursor { toks, pos: 0, line, end: text.chars().count() + 1 }));
            }
        }
        Ok(None)
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.0)
    }

    /// `n` table rows of `n` entries each.
    fn rows(&mut self, n: usize, what: &str) -> Result<Vec<Vec<usize>>, ParseError> {
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let Some(mut cur) = self.next_tokens()? else {
                return Err(ParseError {
                    kind: ParseErrorKind::Syntax,
                    line: self.last_line(),
                    column: 1,
                    message: format!("{what} needs {n} rows, found {r}"),
                });
            };
            let mut row = Vec::with_capacity(n);
            while !cur.at_end() {
                row.push(cur.int("a table entry")?);
            }
            if row.len() != n {
                return Err(cur.err(
                    ParseErrorKind::Arity,
                    1,
                    format!("{what} row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

fn parse_dir(cur: &mut Cursor) -> Result<Dir, ParseError> {
    let col = cur.col();
    let (d, _) = cur.ident("`fwd` or `bwd`")?;
    match d.as_str() {
        "fwd" => Ok(Dir::Fwd),
        "bwd" => Ok(Dir::Bwd),
        other => Err(cur.err(ParseErrorKind::Syntax, col, format!("expected `fwd` or `bwd`, found `{other}`"))),
    }
}

pub fn parse_script(text: &str) -> Result<Script, ParseError> {
    let mut lines = Lines::new(text);
    let mut names = Names::default();
    let mut statements = Vec::new();
    while let Some(mut cur) = lines.next_tokens()? {
        let (line, column) = (cur.line, cur.col());
        let stmt = statement(&mut cur, &mut lines, &mut names)?;
        statements.push(Statement { line, column, stmt });
    }
    Ok(Script { statements })
}

fn statement(cur: &mut Cursor, lines: &mut Lines, names: &mut Names) -> Result<Stmt, ParseError> {
    let (head, head_col) = cur.ident("a declaration or a command")?;
    match head.as_str() {
        "group" => {
            let (name, col) = cur.ident("a group name")?;
            let (kind, kcol) = cur.ident("a group kind")?;
            let spec = match kind.as_str() {
                "cyclic" => GroupSpec::Cyclic(cur.int("the order")?),
                "dihedral" => GroupSpec::Dihedral(cur.int("the polygon size")?),
                "symmetric" => GroupSpec::Symmetric(cur.int("the degree")?),
                "klein" => GroupSpec::Klein,
                "quaternion" => GroupSpec::Quaternion,
                "table" => {
                    let n = cur.int("the order")?;
                    cur.done()?;
                    GroupSpec::Table(lines.rows(n, "group table")?)
                }
                other => {
                    return Err(cur.err(
                        ParseErrorKind::Syntax,
                        kcol,
                        format!("unknown group kind `{other}`; expected cyclic, dihedral, symmetric, klein, quaternion or table"),
                    ))
                }
            };
            if !matches!(spec, GroupSpec::Table(_)) {
                cur.done()?;
            }
            names.declare(cur, Kind::Object, &name, col)?;
            Ok(Stmt::Group { name, spec })
        }
        "ring" => {
            let (name, col) = cur.ident("a ring name")?;
            let (kind, kcol) = cur.ident("a ring kind")?;
            let spec = match kind.as_str() {
                "zero" => RingSpec::Zero,
                "cyclic" => RingSpec::Cyclic(cur.int("the order")?),
                "table" => {
                    let n = cur.int("the order")?;
                    cur.keyword("one")?;
                    cur.sym("=")?;
                    let one = cur.int("the index of the identity")?;
                    cur.done()?;
                    let add = lines.rows(n, "addition table")?;
                    let Some(mut sep) = lines.next_tokens()? else {
                        return Err(ParseError {
                            kind: ParseErrorKind::Syntax,
                            line: lines.last_line(),
                            column: 1,
                            message: "expected `mul` before the multiplication table".into(),
                        });
                    };
                    sep.keyword("mul")?;
                    sep.done()?;
                    let mul = lines.rows(n, "multiplication table")?;
                    RingSpec::Table { add, mul, one }
                }
                other => {
                    return Err(cur.err(
                        ParseErrorKind::Syntax,
                        kcol,
                        format!("unknown ring kind `{other}`; expected zero, cyclic or table"),
                    ))
                }
            };
            if !matches!(spec, RingSpec::Table { .. }) {
                cur.done()?;
            }
            names.declare(cur, Kind::Object, &name, col)?;
            Ok(Stmt::Ring { name, spec })
        }
        "hom" => {
            let (name, col) = cur.ident("a homomorphism name")?;
            cur.sym(":")?;
            let (dom, dcol) = cur.ident("the domain")?;
            cur.sym("->")?;
            let (cod, ccol) = cur.ident("the codomain")?;
            cur.keyword("map")?;
            let mut map = Vec::new();
            while !cur.at_end() {
                map.push(cur.int("an image index")?);
            }
            names.require(cur, Kind::Object, &dom, dcol)?;
            names.require(cur, Kind::Object, &cod, ccol)?;
            names.declare(cur, Kind::Hom, &name, col)?;
            Ok(Stmt::Hom { name, dom, cod, map })
        }
        "sub" => {
            let (name, col) = cur.ident("a subobject name")?;
            cur.keyword("of")?;
            let (parent, pcol) = cur.ident("the parent object")?;
            cur.sym("=")?;
            let elems = cur.literal()?;
            cur.done()?;
            names.require(cur, Kind::Object, &parent, pcol)?;
            names.declare(cur, Kind::Sub, &name, col)?;
            Ok(Stmt::Sub { name, parent, elems })
        }
        "zigzag" => {
            let (name, col) = cur.ident("a zigzag name")?;
            cur.sym("=")?;
            let mut steps = Vec::new();
            loop {
                let (hom, hcol) = cur.ident("a homomorphism name")?;
                names.require(cur, Kind::Hom, &hom, hcol)?;
                steps.push((hom, parse_dir(cur)?));
                if cur.at_end() {
                    break;
                }
                cur.sym(",")?;
            }
            names.declare(cur, Kind::Zigzag, &name, col)?;
            Ok(Stmt::Zigzag { name, steps })
        }
        "scope" => {
            let (name, col) = cur.ident("a scope name")?;
            cur.sym("=")?;
            let mut objects = Vec::new();
            while let Some(Tok::Ident(s)) = cur.peek() {
                if s == "with" || s == "depth" {
                    break;
                }
                let (o, ocol) = cur.ident("an object name")?;
                names.require(cur, Kind::Object, &o, ocol)?;
                objects.push(o);
            }
            if objects.is_empty() {
                return Err(cur.unexpected("an object name"));
            }
            let mut homs = None;
            if cur.peek_keyword("with") {
                cur.pos += 1;
                let mut list = Vec::new();
                while let Some(Tok::Ident(s)) = cur.peek() {
                    if s == "depth" {
                        break;
                    }
                    let (h, hcol) = cur.ident("a homomorphism name")?;
                    names.require(cur, Kind::Hom, &h, hcol)?;
                    list.push(h);
                }
                homs = Some(list);
            }
            let mut depth = None;
            if cur.peek_keyword("depth") {
                cur.pos += 1;
                depth = Some(cur.int("the closure depth")?);
            }
            cur.done()?;
            names.declare(cur, Kind::Scope, &name, col)?;
            Ok(Stmt::Scope { name, objects, homs, depth })
        }
        "chase" => {
            let args = fixed_atoms(cur, head_col, "chase", 3)?;
            let zigzag = name_arg(cur, names, &args[0], Kind::Zigzag)?;
            let dir = match &args[1] {
                Atom::Name(d, _) if d == "fwd" => Dir::Fwd,
                Atom::Name(d, _) if d == "bwd" => Dir::Bwd,
                Atom::Name(d, c) => {
                    return Err(cur.err(ParseErrorKind::Syntax, *c, format!("expected `fwd` or `bwd`, found `{d}`")))
                }
                Atom::Literal(_) => return Err(cur.err(ParseErrorKind::Syntax, head_col, "expected `fwd` or `bwd`")),
            };
            let sub = sub_arg(cur, names, &args[2])?;
            Ok(Stmt::Chase { zigzag, dir, sub })
        }
        "induce" | "oracle" | "pyramid" => {
            let args = fixed_atoms(cur, head_col, &head, 1)?;
            let zigzag = name_arg(cur, names, &args[0], Kind::Zigzag)?;
            Ok(match head.as_str() {
                "induce" => Stmt::Induce { zigzag },
                "oracle" => Stmt::Oracle { zigzag },
                _ => Stmt::Pyramid { zigzag },
            })
        }
        "dualize" => {
            let args = fixed_atoms(cur, head_col, "dualize", 1)?;
            match &args[0] {
                Atom::Name(s, _) if s == "on" => Ok(Stmt::Dualize(true)),
                Atom::Name(s, _) if s == "off" => Ok(Stmt::Dualize(false)),
                Atom::Name(s, c) => {
                    Err(cur.err(ParseErrorKind::Syntax, *c, format!("expected `on` or `off`, found `{s}`")))
                }
                Atom::Literal(_) => Err(cur.err(ParseErrorKind::Syntax, head_col, "expected `on` or `off`")),
            }
        }
        "verify" => {
            let (what, wcol) = cur.ident("what to verify")?;
            let arity = match what.as_str() {
                "axioms" => 1,
                "diamond" | "doublequotient" | "imagetheorem" => 3,
                "modularlaw" => 4,
                "butterfly" => 5,
                other => {
                    return Err(cur.err(
                        ParseErrorKind::Syntax,
                        wcol,
                        format!("unknown verification `{other}`; expected axioms, diamond, doublequotient, imagetheorem, butterfly or modularlaw"),
                    ))
                }
            };
            let a = fixed_atoms(cur, head_col, &format!("verify {what}"), arity)?;
            if what == "axioms" {
                let scope = name_arg(cur, names, &a[0], Kind::Scope)?;
                return Ok(Stmt::VerifyAxioms { scope });
            }
            let first_kind = if what == "imagetheorem" { Kind::Hom } else { Kind::Object };
            let first = name_arg(cur, names, &a[0], first_kind)?;
            let mut subs = Vec::with_capacity(arity - 1);
            for atom in &a[1..] {
                subs.push(sub_arg(cur, names, atom)?);
            }
            let mut it = subs.into_iter();
            let mut next = || it.next().expect("arity checked");
            let theorem = match what.as_str() {
                "diamond" => Theorem::Diamond { object: first, a: next(), b: next() },
                "doublequotient" => Theorem::DoubleQuotient { object: first, n: next(), s: next() },
                "imagetheorem" => Theorem::ImageTheorem { hom: first, w: next(), x: next() },
                "butterfly" => Theorem::Butterfly { object: first, s1: next(), s: next(), t1: next(), t: next() },
                _ => Theorem::ModularLaw { object: first, x: next(), y: next(), z: next() },
            };
            Ok(Stmt::Verify(theorem))
        }
        other => Err(cur.err(ParseErrorKind::Syntax, head_col, format!("unknown statement `{other}`"))),
    }
}

fn fixed_atoms(cur: &mut Cursor, col: usize, what: &str, n: usize) -> Result<Vec<Atom>, ParseError> {
    let atoms = cur.atoms()?;
    if atoms.len() != n {
        return Err(cur.err(
            ParseErrorKind::Arity,
            col,
            format!("`{what}` takes {n} argument{}, found {}", if n == 1 { "" } else { "s" }, atoms.len()),
        ));
    }
    Ok(atoms)
}

fn name_arg(cur: &Cursor, names: &mut Names, a: &Atom, k: Kind) -> Result<String, ParseError> {
    match a {
        Atom::Name(n, c) => {
            names.require(cur, k, n, *c)?;
            Ok(n.clone())
        }
        Atom::Literal(_) => Err(cur.err(
            ParseErrorKind::Syntax,
            cur.end,
            format!("expected a {} name, found a subobject literal", k.noun()),
        )),
    }
}

fn sub_arg(cur: &Cursor, names: &mut Names, a: &Atom) -> Result<SubArg, ParseError> {
    Ok(match a {
        Atom::Literal(v) => SubArg::Literal(v.clone()),
        Atom::Name(n, _) if n == "top" => SubArg::Top,
        Atom::Name(n, _) if n == "bottom" => SubArg::Bottom,
        Atom::Name(n, c) => {
            names.require(cur, Kind::Sub, n, *c)?;
            SubArg::Name(n.clone())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(text: &str) -> Stmt {
        let s = parse_script(text).unwrap();
        s.statements.last().unwrap().stmt.clone()
    }

    #[test]
    fn declarations() {
        assert_eq!(only("group Z4 cyclic 4"), Stmt::Group { name: "Z4".into(), spec: GroupSpec::Cyclic(4) });
        assert_eq!(
            only("group Z4 cyclic 4\ngroup Z2 cyclic 2\nhom f : Z4 -> Z2 map 0 1 0 1"),
            Stmt::Hom { name: "f".into(), dom: "Z4".into(), cod: "Z2".into(), map: vec![0, 1, 0, 1] }
        );
        let z = only("group A cyclic 2\nhom p : A -> A map 0 1\nhom i : A -> A map 0 1\nhom j : A -> A map 0 1\nhom q : A -> A map 0 1\nzigzag D = p bwd, i fwd, j bwd, q fwd");
        match z {
            Stmt::Zigzag { steps, .. } => assert_eq!(steps.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tables_span_lines() {
        let s = parse_script(
            "group G table 2 # the group of order 2\n  0 1\n\n  1 0\nring R table 2 one=1\n0 1\n1 0\nmul\n0 0\n0 1\n",
        )
        .unwrap();
        assert_eq!(s.statements.len(), 2);
        assert_eq!(s.statements[1].line, 5);
        match &s.statements[1].stmt {
            Stmt::Ring { spec: RingSpec::Table { one, mul, .. }, .. } => {
                assert_eq!(*one, 1);
                assert_eq!(mul[1], vec![0, 1]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_script("group Z4 cyclic 4\n  induce Q").unwrap_err();
        assert_eq!((e.kind, e.line, e.column), (ParseErrorKind::UndefinedName, 2, 10));
        assert_eq!(e.to_string(), "line 2, column 10: undefined name: no zigzag named `Q`");

        let e = parse_script("group Z4 cyclic 4\nverify diamond Z4 top").unwrap_err();
        assert_eq!((e.kind, e.line, e.column), (ParseErrorKind::Arity, 2, 1));

        let e = parse_script("group Z4 cyclic 4 5").unwrap_err();
        assert_eq!((e.kind, e.column), (ParseErrorKind::Syntax, 19));

        let e = parse_script("group Z4 cyclic 4\ngroup Z4 klein").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateName);

        let e = parse_script("group G table 2\n0 1\n1").unwrap_err();
        assert_eq!((e.kind, e.line), (ParseErrorKind::Arity, 3));

        let e = parse_script("hom f : A -> B map 0 $").unwrap_err();
        assert_eq!((e.kind, e.column), (ParseErrorKind::Syntax, 22));
    }

    #[test]
    fn empty_and_comment_only_scripts() {
        assert!(parse_script("").unwrap().statements.is_empty());
        assert!(parse_script("# nothing\n\n   # here\n").unwrap().statements.is_empty());
    }
}
