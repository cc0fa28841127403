//! The `.fol` document language.
//!
//! ```text
//! vars x0, x1, x2, x3
//! form = x1*dx0 - x0*dx1
//! component axis {
//!   ideal [x0, x1]
//!   param [s:t] = [0, 0, s, t]
//! }
//! ```
//!
//! Expression precedence, tightest first: `^`, unary `-`, `*` and `/`,
//! binary `+` and `-`. `d(expr)` is the differential of a function and
//! `dx` the differential of a declared variable `x`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use folia_core::algebra::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

/// Byte offset into the source.
pub type Pos = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Newline => f.write_str("end of line"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, (Pos, String)> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    // Newlines inside () and [] do not end a statement.
    let mut depth = 0i32;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        match c {
            '#' => {
                while i < bytes.len() && bytes[i].1 != '\n' {
                    i += 1;
                }
            }
            '\n' => {
                if depth == 0 {
                    out.push((Tok::Newline, pos));
                }
                i += 1;
            }
            c if c.is_whitespace() => i += 1,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().map(|b| b.1).collect();
                out.push((Tok::Int(text.parse().expect("digits")), pos));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].1.is_alphanumeric() || bytes[i].1 == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(bytes[start..i].iter().map(|b| b.1).collect()), pos));
            }
            '+' | '-' | '*' | '/' | '^' | ',' | ':' | ';' | '=' | '{' | '}' => {
                out.push((Tok::Sym(c), pos));
                i += 1;
            }
            '(' | '[' => {
                depth += 1;
                out.push((Tok::Sym(c), pos));
                i += 1;
            }
            ')' | ']' => {
                depth -= 1;
                out.push((Tok::Sym(c), pos));
                i += 1;
            }
            other => return Err((pos, format!("unexpected character '{other}'"))),
        }
    }
    out.push((Tok::Eof, src.len()));
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

/// Positions are ignored: two trees are equal when their shapes are.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Num(BigInt),
    Var(String),
    /// `dx` for a declared variable `x`.
    Diff(String),
    /// `d(expr)`.
    DiffOf(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Affine,
    Projective,
}

#[derive(Debug, Clone)]
pub struct ComponentDecl {
    pub name: String,
    pub pos: Pos,
    pub ideal: Option<Vec<Expr>>,
    /// Parameter names and image coordinates.
    pub param: Option<(String, String, Vec<Expr>)>,
    pub point: Option<Vec<Rat>>,
    pub parts: Option<Vec<String>>,
}

impl PartialEq for ComponentDecl {
    fn eq(&self, other: &Self) -> bool {
        (&self.name, &self.ideal, &self.param, &self.point, &self.parts)
            == (&other.name, &other.ideal, &other.param, &other.point, &other.parts)
    }
}

impl Eq for ComponentDecl {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Vars(Vec<String>),
    Space(Space),
    Degree(u32),
    Form(Expr),
    Logarithmic { hypersurfaces: Vec<Expr>, weights: Vec<Rat> },
    Pencil { f: Expr, g: Expr, p: u32, q: u32 },
    Component(ComponentDecl),
    Point { name: String, coords: Vec<Rat> },
    Pullback { name: String, vars: Vec<String>, eta: Expr, via: Vec<Expr> },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub statements: Vec<Statement>,
}

pub fn line_col(src: &str, pos: Pos) -> (usize, usize) {
    let before = &src[..pos.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

pub fn error_at(src: &str, pos: Pos, msg: impl Into<String>) -> DslError {
    let (line, col) = line_col(src, pos);
    DslError { line, col, msg: msg.into() }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = Result<T, DslError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(error_at(self.src, self.pos(), msg))
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected '{c}', found {}", self.peek()))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => self.err(format!("expected a name, found {other}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            other => self.err(format!("expected '{kw}', found {other}")),
        }
    }

    fn uint(&mut self) -> PResult<u32> {
        match self.peek().clone() {
            Tok::Int(n) => match u32::try_from(&n) {
                Ok(v) => {
                    self.bump();
                    Ok(v)
                }
                Err(_) => self.err("integer too large"),
            },
            other => self.err(format!("expected an integer, found {other}")),
        }
    }

    fn signed_rat(&mut self) -> PResult<Rat> {
        let neg = if self.is_sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let num = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                n
            }
            other => return self.err(format!("expected a number, found {other}")),
        };
        let den = if self.is_sym('/') {
            self.bump();
            match self.peek().clone() {
                Tok::Int(d) if !d.is_zero() => {
                    self.bump();
                    d
                }
                _ => return self.err("expected a nonzero denominator"),
            }
        } else {
            BigInt::from(1)
        };
        let r = Rat::new(num, den);
        Ok(if neg { -r } else { r })
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        self.expect_sym('[')?;
        let mut out = Vec::new();
        if !self.is_sym(']') {
            out.push(item(self)?);
            while self.is_sym(',') {
                self.bump();
                out.push(item(self)?);
            }
        }
        self.expect_sym(']')?;
        Ok(out)
    }

    fn point_literal(&mut self) -> PResult<Vec<Rat>> {
        self.expect_sym('[')?;
        let mut out = vec![self.signed_rat()?];
        while self.is_sym(':') || self.is_sym(',') {
            self.bump();
            out.push(self.signed_rat()?);
        }
        self.expect_sym(']')?;
        Ok(out)
    }

    fn end_of_statement(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Newline | Tok::Sym(';') => {
                self.bump();
                Ok(())
            }
            Tok::Eof | Tok::Sym('}') => Ok(()),
            other => self.err(format!("expected end of statement, found {other}")),
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Tok::Newline | Tok::Sym(';')) {
            self.bump();
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self, vars: &[String]) -> PResult<Expr> {
        let mut lhs = self.term(vars)?;
        loop {
            let pos = self.pos();
            if self.is_sym('+') {
                self.bump();
                let rhs = self.term(vars)?;
                lhs = Expr { kind: ExprKind::Add(Box::new(lhs), Box::new(rhs)), pos };
            } else if self.is_sym('-') {
                self.bump();
                let rhs = self.term(vars)?;
                lhs = Expr { kind: ExprKind::Sub(Box::new(lhs), Box::new(rhs)), pos };
            } else {
                return Ok(lhs);
            }
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self, vars: &[String]) -> PResult<Expr> {
        let mut lhs = self.unary(vars)?;
        loop {
            let pos = self.pos();
            if self.is_sym('*') {
                self.bump();
                let rhs = self.unary(vars)?;
                lhs = Expr { kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)), pos };
            } else if self.is_sym('/') {
                self.bump();
                let rhs = self.unary(vars)?;
                lhs = Expr { kind: ExprKind::Div(Box::new(lhs), Box::new(rhs)), pos };
            } else {
                return Ok(lhs);
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self, vars: &[String]) -> PResult<Expr> {
        if self.is_sym('-') {
            let pos = self.pos();
            self.bump();
            let inner = self.unary(vars)?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), pos });
        }
        self.power(vars)
    }

    // power := atom ('^' integer)?
    fn power(&mut self, vars: &[String]) -> PResult<Expr> {
        let base = self.atom(vars)?;
        if self.is_sym('^') {
            let pos = self.pos();
            self.bump();
            let e = self.uint()?;
            return Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), pos });
        }
        Ok(base)
    }

    fn atom(&mut self, vars: &[String]) -> PResult<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Num(n), pos })
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr(vars)?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                if vars.contains(&name) {
                    return Ok(Expr { kind: ExprKind::Var(name), pos });
                }
                if name == "d" && self.is_sym('(') {
                    self.bump();
                    let e = self.expr(vars)?;
                    self.expect_sym(')')?;
                    return Ok(Expr { kind: ExprKind::DiffOf(Box::new(e)), pos });
                }
                if let Some(v) = name.strip_prefix('d') {
                    if vars.iter().any(|x| x == v) {
                        return Ok(Expr { kind: ExprKind::Diff(v.to_string()), pos });
                    }
                }
                Err(error_at(self.src, pos, format!("undeclared variable '{name}'")))
            }
            other => self.err(format!("expected an expression, found {other}")),
        }
    }

    fn expr_list(&mut self, vars: &[String]) -> PResult<Vec<Expr>> {
        self.list(|p| p.expr(vars))
    }

    fn component(&mut self, vars: &[String]) -> PResult<ComponentDecl> {
        let pos = self.pos();
        let name = self.ident()?;
        self.expect_sym('{')?;
        let mut decl = ComponentDecl { name, pos, ideal: None, param: None, point: None, parts: None };
        self.skip_separators();
        while !self.is_sym('}') {
            let at = self.pos();
            let kw = self.ident()?;
            let duplicate = match kw.as_str() {
                "ideal" => decl.ideal.replace(self.expr_list(vars)?).is_some(),
                "param" => {
                    self.expect_sym('[')?;
                    let s = self.ident()?;
                    self.expect_sym(':')?;
                    let t = self.ident()?;
                    self.expect_sym(']')?;
                    self.expect_sym('=')?;
                    let scope = vec![s.clone(), t.clone()];
                    let images = self.expr_list(&scope)?;
                    decl.param.replace((s, t, images)).is_some()
                }
                "point" => decl.point.replace(self.point_literal()?).is_some(),
                "parts" => decl.parts.replace(self.list(|p| p.ident())?).is_some(),
                other => return Err(error_at(self.src, at, format!("unknown component field '{other}'"))),
            };
            if duplicate {
                return Err(error_at(self.src, at, format!("duplicate field '{kw}'")));
            }
            self.end_of_statement()?;
            self.skip_separators();
        }
        self.expect_sym('}')?;
        Ok(decl)
    }

    fn statement(&mut self, vars: &mut Vec<String>) -> PResult<Statement> {
        let at = self.pos();
        let kw = self.ident()?;
        match kw.as_str() {
            "vars" => {
                if !vars.is_empty() {
                    return Err(error_at(self.src, at, "variables already declared"));
                }
                let mut names = vec![self.ident()?];
                while self.is_sym(',') {
                    self.bump();
                    names.push(self.ident()?);
                }
                for (i, n) in names.iter().enumerate() {
                    if names[..i].contains(n) {
                        return Err(error_at(self.src, at, format!("variable '{n}' declared twice")));
                    }
                    if n == "d" {
                        return Err(error_at(self.src, at, "'d' is reserved"));
                    }
                }
                *vars = names.clone();
                Ok(Statement::Vars(names))
            }
            "space" => match self.ident()?.as_str() {
                "affine" => Ok(Statement::Space(Space::Affine)),
                "projective" => Ok(Statement::Space(Space::Projective)),
                other => Err(error_at(self.src, at, format!("unknown space '{other}'"))),
            },
            "degree" => Ok(Statement::Degree(self.uint()?)),
            "form" => {
                self.expect_sym('=')?;
                Ok(Statement::Form(self.expr(vars)?))
            }
            "logarithmic" => {
                let hypersurfaces = self.expr_list(vars)?;
                self.keyword("weights")?;
                let weights = self.list(|p| p.signed_rat())?;
                Ok(Statement::Logarithmic { hypersurfaces, weights })
            }
            "pencil" => {
                let f = self.expr(vars)?;
                self.expect_sym(',')?;
                let g = self.expr(vars)?;
                self.keyword("exponents")?;
                let p = self.uint()?;
                self.expect_sym(',')?;
                let q = self.uint()?;
                Ok(Statement::Pencil { f, g, p, q })
            }
            "component" => Ok(Statement::Component(self.component(vars)?)),
            "point" => {
                let name = self.ident()?;
                self.expect_sym('=')?;
                Ok(Statement::Point { name, coords: self.point_literal()? })
            }
            "pullback" => {
                let name = self.ident()?;
                let local = self.list(|p| p.ident())?;
                self.expect_sym('=')?;
                let eta = self.expr(&local)?;
                self.keyword("via")?;
                let via = self.expr_list(vars)?;
                Ok(Statement::Pullback { name, vars: local, eta, via })
            }
            other => Err(error_at(self.src, at, format!("unknown statement '{other}'"))),
        }
    }
}

fn parser(src: &str) -> PResult<Parser<'_>> {
    let toks = lex(src).map_err(|(pos, msg)| error_at(src, pos, msg))?;
    Ok(Parser { src, toks, at: 0 })
}

pub fn parse_document(src: &str) -> Result<Document, DslError> {
    let mut p = parser(src)?;
    let mut vars = Vec::new();
    let mut statements = Vec::new();
    p.skip_separators();
    while *p.peek() != Tok::Eof {
        statements.push(p.statement(&mut vars)?);
        p.end_of_statement()?;
        p.skip_separators();
    }
    Ok(Document { statements })
}

/// A single expression over `vars`.
pub fn parse_expr(src: &str, vars: &[String]) -> Result<Expr, DslError> {
    let mut p = parser(src)?;
    let e = p.expr(vars)?;
    if *p.peek() != Tok::Eof {
        return p.err(format!("unexpected {}", p.peek()));
    }
    Ok(e)
}

/// A point written `[a:b:c:d]`, `a:b:c:d` or `a,b,c`.
pub fn parse_point(src: &str) -> Result<Vec<Rat>, DslError> {
    let trimmed = src.trim();
    let wrapped = if trimmed.starts_with('[') { trimmed.to_string() } else { format!("[{trimmed}]") };
    let mut p = parser(&wrapped)?;
    let pt = p.point_literal()?;
    if *p.peek() != Tok::Eof {
        return p.err(format!("unexpected {}", p.peek()));
    }
    Ok(pt)
}

// Binding strength used by the renderer.
fn level(e: &ExprKind) -> u8 {
    match e {
        ExprKind::Add(..) | ExprKind::Sub(..) => 1,
        ExprKind::Mul(..) | ExprKind::Div(..) => 2,
        ExprKind::Neg(..) => 3,
        ExprKind::Pow(..) => 4,
        _ => 5,
    }
}

fn render_at(e: &Expr, min: u8, out: &mut String) {
    let wrap = level(&e.kind) < min;
    if wrap {
        out.push('(');
    }
    match &e.kind {
        ExprKind::Num(n) => out.push_str(&n.to_string()),
        ExprKind::Var(v) => out.push_str(v),
        ExprKind::Diff(v) => {
            out.push('d');
            out.push_str(v);
        }
        ExprKind::DiffOf(inner) => {
            out.push_str("d(");
            render_at(inner, 0, out);
            out.push(')');
        }
        ExprKind::Neg(inner) => {
            out.push('-');
            render_at(inner, 3, out);
        }
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
            render_at(a, 1, out);
            out.push_str(if matches!(e.kind, ExprKind::Add(..)) { " + " } else { " - " });
            render_at(b, 2, out);
        }
        ExprKind::Mul(a, b) | ExprKind::Div(a, b) => {
            render_at(a, 2, out);
            out.push(if matches!(e.kind, ExprKind::Mul(..)) { '*' } else { '/' });
            render_at(b, 3, out);
        }
        ExprKind::Pow(base, k) => {
            render_at(base, 5, out);
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
    if wrap {
        out.push(')');
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        render_at(self, 0, &mut s);
        f.write_str(&s)
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

fn rat_text(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn point_text(p: &[Rat], sep: &str) -> String {
    format!("[{}]", p.iter().map(rat_text).collect::<Vec<_>>().join(sep))
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            match s {
                Statement::Vars(vs) => writeln!(f, "vars {}", vs.join(", "))?,
                Statement::Space(Space::Affine) => writeln!(f, "space affine")?,
                Statement::Space(Space::Projective) => writeln!(f, "space projective")?,
                Statement::Degree(d) => writeln!(f, "degree {d}")?,
                Statement::Form(e) => writeln!(f, "form = {e}")?,
                Statement::Logarithmic { hypersurfaces, weights } => writeln!(
                    f,
                    "logarithmic [{}] weights [{}]",
                    join(hypersurfaces),
                    weights.iter().map(rat_text).collect::<Vec<_>>().join(", ")
                )?,
                Statement::Pencil { f: a, g, p, q } => writeln!(f, "pencil {a}, {g} exponents {p}, {q}")?,
                Statement::Component(c) => {
                    writeln!(f, "component {} {{", c.name)?;
                    if let Some(gens) = &c.ideal {
                        writeln!(f, "  ideal [{}]", join(gens))?;
                    }
                    if let Some((s, t, images)) = &c.param {
                        writeln!(f, "  param [{s}:{t}] = [{}]", join(images))?;
                    }
                    if let Some(p) = &c.point {
                        writeln!(f, "  point {}", point_text(p, ":"))?;
                    }
                    if let Some(parts) = &c.parts {
                        writeln!(f, "  parts [{}]", parts.join(", "))?;
                    }
                    writeln!(f, "}}")?;
                }
                Statement::Point { name, coords } => writeln!(f, "point {name} = {}", point_text(coords, ":"))?,
                Statement::Pullback { name, vars, eta, via } => {
                    writeln!(f, "pullback {name} [{}] = {eta} via [{}]", vars.join(", "), join(via))?
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn precedence() {
        let v = vars(&["x", "y"]);
        let e = parse_expr("-x^2*y + 3", &v).unwrap();
        assert_eq!(e.to_string(), "-x^2*y + 3");
        match &e.kind {
            ExprKind::Add(lhs, _) => match &lhs.kind {
                ExprKind::Mul(a, _) => assert!(matches!(a.kind, ExprKind::Neg(_))),
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_expr("x - (y - 1)", &v).unwrap().to_string(), "x - (y - 1)");
        assert_eq!(parse_expr("(x - y) - 1", &v).unwrap().to_string(), "x - y - 1");
        assert_eq!(parse_expr("(x*y)^2", &v).unwrap().to_string(), "(x*y)^2");
        assert_eq!(parse_expr("(-x)^2", &v).unwrap().to_string(), "(-x)^2");
    }

    #[test]
    fn differentials() {
        let v = vars(&["x0", "x1"]);
        let e = parse_expr("x0*dx1 - x1*dx0", &v).unwrap();
        assert_eq!(e.to_string(), "x0*dx1 - x1*dx0");
        let e = parse_expr("d(x0^2)", &v).unwrap();
        assert!(matches!(e.kind, ExprKind::DiffOf(_)));
    }

    #[test]
    fn errors_carry_positions() {
        let v = vars(&["x"]);
        let err = parse_expr("x + y", &v).unwrap_err();
        assert_eq!((err.line, err.col), (1, 5));
        assert!(err.msg.contains("undeclared variable 'y'"));
        let err = parse_document("vars x\nform = x*dx +\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_document("vars x\nform = x $ dx\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 10));
    }

    #[test]
    fn document_round_trip() {
        let src = "vars x0, x1, x2, x3\nform = x1*dx0 - x0*dx1\ncomponent axis {\n  ideal [x0, x1]; param [s:t] = [0, 0, s, t]\n  point [0:0:1:-1/2]\n}\npoint p = [0:0:1:0]\n";
        let doc = parse_document(src).unwrap();
        let again = parse_document(&doc.to_string()).unwrap();
        assert_eq!(doc, again);
        assert_eq!(doc.statements.len(), 4);
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("0:1:-2/3").unwrap().len(), 3);
        assert_eq!(parse_point("[1, 2]").unwrap().len(), 2);
        assert!(parse_point("[1:x]").is_err());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn ex(kind: ExprKind) -> Expr {
        Expr { kind, pos: 0 }
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u32..20).prop_map(|n| ex(ExprKind::Num(n.into()))),
            prop::sample::select(vec!["x", "y", "z"]).prop_map(|v| ex(ExprKind::Var(v.into()))),
            prop::sample::select(vec!["x", "y", "z"]).prop_map(|v| ex(ExprKind::Diff(v.into()))),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| ex(ExprKind::Neg(Box::new(a)))),
                inner.clone().prop_map(|a| ex(ExprKind::DiffOf(Box::new(a)))),
                (inner.clone(), 1u32..4).prop_map(|(a, k)| ex(ExprKind::Pow(Box::new(a), k))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ex(ExprKind::Add(Box::new(a), Box::new(b)))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ex(ExprKind::Sub(Box::new(a), Box::new(b)))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ex(ExprKind::Mul(Box::new(a), Box::new(b)))),
                (inner.clone(), inner).prop_map(|(a, b)| ex(ExprKind::Div(Box::new(a), Box::new(b)))),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn rendering_reparses_to_the_same_tree(e in arb_expr()) {
            let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
            let text = e.to_string();
            let back = parse_expr(&text, &vars).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
            prop_assert_eq!(back, e, "{}", text);
        }
    }
}
