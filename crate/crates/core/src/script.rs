//! The input language.
//!
//! ```text
//! ring  := "ring" ("Q" | "F" INT) "[" IDENT ("," IDENT)* "]"
//! ideal := "ideal" IDENT "=" expr
//! expr  := "(" poly ("," poly)* ")" | "intersect" "(" expr "," expr ")" | IDENT
//! poly  := signed sum of terms; term := coeff? ("*"? IDENT ("^" INT)?)*
//! cmd   := ("analyze"|"profile"|"poset") IDENT
//!        | "chain" IDENT "from" "(" IDENT ("," IDENT)* ")"
//!        | "family" NAME ("(" INT ("," INT)* ")")?
//! ```
//!
//! `#` starts a comment. Parsing also resolves names, so a returned
//! [`Script`] is well formed: every ideal and variable it mentions exists.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::families::FamilySpec;
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Lexical,
    Syntax,
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: error[{code}]: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub kind: ErrorKind,
    pub code: &'static str,
    pub message: String,
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected one of: {})", expected.join(", "))
    }
}

pub mod codes {
    pub const UNEXPECTED_CHAR: &str = "E001";
    pub const BAD_INTEGER: &str = "E002";
    pub const UNEXPECTED_TOKEN: &str = "E101";
    pub const UNEXPECTED_EOF: &str = "E102";
    pub const NO_RING: &str = "E201";
    pub const UNDECLARED_IDEAL: &str = "E202";
    pub const UNKNOWN_VARIABLE: &str = "E203";
    pub const DUPLICATE_VARIABLE: &str = "E204";
    pub const DUPLICATE_IDEAL: &str = "E205";
    pub const BAD_FIELD: &str = "E206";
    pub const RING_MISMATCH: &str = "E207";
    pub const BAD_COEFFICIENT: &str = "E208";
    pub const BAD_FAMILY: &str = "E209";
    pub const RESERVED_WORD: &str = "E210";
    pub const TOO_MANY_VARIABLES: &str = "E211";
}

const KEYWORDS: [&str; 9] = ["ring", "ideal", "intersect", "analyze", "profile", "poset", "chain", "from", "family"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                s.push(bump(&mut chars));
            }
            out.push(Token { tok: Tok::Ident(s), line: l, column: col });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(bump(&mut chars));
            }
            let n: BigInt = s.parse().map_err(|_| ParseError {
                kind: ErrorKind::Lexical,
                code: codes::BAD_INTEGER,
                message: format!("malformed integer `{s}`"),
                line: l,
                column: col,
                expected: vec![],
            })?;
            out.push(Token { tok: Tok::Int(n), line: l, column: col });
        } else if "[](),=*^+-/".contains(c) {
            bump(&mut chars);
            out.push(Token { tok: Tok::Sym(c), line: l, column: col });
        } else {
            return Err(ParseError {
                kind: ErrorKind::Lexical,
                code: codes::UNEXPECTED_CHAR,
                message: format!("unexpected character `{c}`"),
                line: l,
                column: col,
                expected: vec![],
            });
        }
    }
    out.push(Token { tok: Tok::Eof, line, column });
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn field(&self) -> Field {
        match *self {
            FieldSpec::Rationals => Field::Rationals,
            FieldSpec::Prime(p) => Field::prime(p).expect("checked while parsing"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub field: FieldSpec,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermExpr {
    pub coeff: BigRational,
    pub factors: Vec<(String, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    pub terms: Vec<TermExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Generators(Vec<PolyExpr>),
    Intersect(Box<Expr>, Box<Expr>),
    Ref(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    /// Index into the script's ring declarations.
    pub ring: usize,
    pub expr: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze(String),
    Profile(String),
    Poset(String),
    Chain { ideal: String, from: Vec<String> },
    Family(FamilySpec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Ring(RingDecl),
    Ideal(IdealDecl),
    Command(Command),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl Script {
    pub fn rings(&self) -> Vec<&RingDecl> {
        self.statements
            .iter()
            .filter_map(|s| match s {
                Statement::Ring(r) => Some(r),
                _ => None,
            })
            .collect()
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Command(c) => Some(c),
            _ => None,
        })
    }

    /// Canonical source text; parsing it yields an identical script.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.statements {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Ring(r) => {
                let field = match r.field {
                    FieldSpec::Rationals => "Q".to_string(),
                    FieldSpec::Prime(p) => format!("F {p}"),
                };
                write!(f, "ring {field}[{}]", r.vars.join(","))
            }
            Statement::Ideal(d) => write!(f, "ideal {} = {}", d.name, d.expr),
            Statement::Command(c) => match c {
                Command::Analyze(i) => write!(f, "analyze {i}"),
                Command::Profile(i) => write!(f, "profile {i}"),
                Command::Poset(i) => write!(f, "poset {i}"),
                Command::Chain { ideal, from } => write!(f, "chain {ideal} from ({})", from.join(",")),
                Command::Family(spec) => write!(f, "family {spec}"),
            },
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Generators(g) => {
                let g: Vec<String> = g.iter().map(|p| p.to_string()).collect();
                write!(f, "({})", g.join(", "))
            }
            Expr::Intersect(a, b) => write!(f, "intersect({a}, {b})"),
            Expr::Ref(name) => write!(f, "{name}"),
        }
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            let mut first = true;
            if !c.is_one() || t.factors.is_empty() {
                write!(f, "{c}")?;
                first = false;
            }
            for (v, e) in &t.factors {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{v}")?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    rings: Vec<RingDecl>,
    /// ideal name -> ring index
    ideals: HashMap<String, usize>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, expected: &[&str]) -> PResult<T> {
        let t = self.peek();
        let (code, message) = match &t.tok {
            Tok::Eof => (codes::UNEXPECTED_EOF, "unexpected end of input".to_string()),
            other => (codes::UNEXPECTED_TOKEN, format!("unexpected {}", other.describe())),
        };
        Err(ParseError {
            kind: ErrorKind::Syntax,
            code,
            message,
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>().into_iter().collect(),
        })
    }

    fn semantic<T>(&self, at: &Token, code: &'static str, message: String) -> PResult<T> {
        Err(ParseError {
            kind: ErrorKind::Semantic,
            code,
            message,
            line: at.line,
            column: at.column,
            expected: vec![],
        })
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn expect_sym(&mut self, c: char) -> PResult<Token> {
        if self.is_sym(c) {
            Ok(self.next())
        } else {
            self.syntax(&[&format!("`{c}`")])
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<Token> {
        if self.is_keyword(kw) {
            Ok(self.next())
        } else {
            self.syntax(&[&format!("`{kw}`")])
        }
    }

    /// A non-keyword identifier.
    fn ident(&mut self, what: &str) -> PResult<(String, Token)> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(s) if KEYWORDS.contains(&s.as_str()) => {
                self.semantic(&t, codes::RESERVED_WORD, format!("`{s}` is reserved and cannot be used as {what}"))
            }
            Tok::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok((s, t))
            }
            _ => self.syntax(&[what]),
        }
    }

    fn int(&mut self) -> PResult<(BigInt, Token)> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.next();
                Ok((n, t))
            }
            _ => self.syntax(&["integer"]),
        }
    }

    fn small_int<T: TryFrom<BigInt>>(&mut self) -> PResult<T> {
        let (n, t) = self.int()?;
        T::try_from(n.clone()).or_else(|_| {
            Err(ParseError {
                kind: ErrorKind::Lexical,
                code: codes::BAD_INTEGER,
                message: format!("integer `{n}` is out of range"),
                line: t.line,
                column: t.column,
                expected: vec![],
            })
        })
    }

    fn script(&mut self) -> PResult<Script> {
        let mut statements = Vec::new();
        loop {
            let t = self.peek().clone();
            let stmt = match &t.tok {
                Tok::Eof => break,
                Tok::Ident(kw) => match kw.as_str() {
                    "ring" => Statement::Ring(self.ring()?),
                    "ideal" => Statement::Ideal(self.ideal()?),
                    "analyze" | "profile" | "poset" | "chain" | "family" => Statement::Command(self.command()?),
                    _ => return self.syntax(&STATEMENT_START),
                },
                _ => return self.syntax(&STATEMENT_START),
            };
            statements.push(stmt);
        }
        Ok(Script { statements })
    }

    fn ring(&mut self) -> PResult<RingDecl> {
        self.expect_keyword("ring")?;
        let t = self.peek().clone();
        let field = match &t.tok {
            Tok::Ident(s) if s == "Q" => {
                self.next();
                FieldSpec::Rationals
            }
            Tok::Ident(s) if s == "F" => {
                self.next();
                let p: u64 = self.small_int()?;
                FieldSpec::Prime(p)
            }
            Tok::Ident(s) if s.len() > 1 && s.starts_with('F') && s[1..].bytes().all(|b| b.is_ascii_digit()) => {
                self.next();
                match s[1..].parse::<u64>() {
                    Ok(p) => FieldSpec::Prime(p),
                    Err(_) => return self.semantic(&t, codes::BAD_FIELD, format!("characteristic in `{s}` is out of range")),
                }
            }
            _ => return self.syntax(&["`Q`", "`F`"]),
        };
        if let FieldSpec::Prime(p) = field {
            if Field::prime(p).is_err() {
                return self.semantic(&t, codes::BAD_FIELD, format!("F {p}: {p} is not a prime"));
            }
        }
        self.expect_sym('[')?;
        let mut vars = Vec::new();
        loop {
            let (v, vt) = self.ident("variable name")?;
            if vars.contains(&v) {
                return self.semantic(&vt, codes::DUPLICATE_VARIABLE, format!("variable `{v}` declared twice"));
            }
            vars.push(v);
            if self.is_sym(',') {
                self.next();
            } else {
                break;
            }
        }
        if vars.len() > 64 {
            let here = self.peek().clone();
            return self.semantic(&here, codes::TOO_MANY_VARIABLES, "at most 64 variables are supported".into());
        }
        self.expect_sym(']')?;
        let decl = RingDecl { field, vars };
        self.rings.push(decl.clone());
        Ok(decl)
    }

    fn current_ring(&self, at: &Token) -> PResult<usize> {
        if self.rings.is_empty() {
            self.semantic(at, codes::NO_RING, "no ring declared".into())
        } else {
            Ok(self.rings.len() - 1)
        }
    }

    fn ideal(&mut self) -> PResult<IdealDecl> {
        let kw = self.expect_keyword("ideal")?;
        let ring = self.current_ring(&kw)?;
        let (name, nt) = self.ident("ideal name")?;
        if self.ideals.contains_key(&name) {
            return self.semantic(&nt, codes::DUPLICATE_IDEAL, format!("ideal `{name}` declared twice"));
        }
        self.expect_sym('=')?;
        let expr = self.expr(ring)?;
        self.ideals.insert(name.clone(), ring);
        Ok(IdealDecl { name, ring, expr })
    }

    fn expr(&mut self, ring: usize) -> PResult<Expr> {
        if self.is_sym('(') {
            self.next();
            let mut gens = vec![self.poly(ring)?];
            while self.is_sym(',') {
                self.next();
                gens.push(self.poly(ring)?);
            }
            self.expect_sym(')')?;
            return Ok(Expr::Generators(gens));
        }
        if self.is_keyword("intersect") {
            self.next();
            self.expect_sym('(')?;
            let a = self.expr(ring)?;
            self.expect_sym(',')?;
            let b = self.expr(ring)?;
            self.expect_sym(')')?;
            return Ok(Expr::Intersect(Box::new(a), Box::new(b)));
        }
        if matches!(self.peek().tok, Tok::Ident(_)) {
            let (name, t) = self.ident("ideal name")?;
            self.check_ideal(&name, &t, Some(ring))?;
            return Ok(Expr::Ref(name));
        }
        self.syntax(&["`(`", "`intersect`", "ideal name"])
    }

    fn check_ideal(&self, name: &str, at: &Token, ring: Option<usize>) -> PResult<usize> {
        match self.ideals.get(name) {
            None => self.semantic(at, codes::UNDECLARED_IDEAL, format!("undeclared ideal `{name}`")),
            Some(&r) if ring.is_some_and(|want| want != r) => self.semantic(
                at,
                codes::RING_MISMATCH,
                format!("ideal `{name}` belongs to a different ring"),
            ),
            Some(&r) => Ok(r),
        }
    }

    fn poly(&mut self, ring: usize) -> PResult<PolyExpr> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.is_sym('-') || self.is_sym('+') {
            negate = self.next().tok == Tok::Sym('-');
        }
        loop {
            let mut term = self.term(ring)?;
            if negate {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            if self.is_sym('+') || self.is_sym('-') {
                negate = self.next().tok == Tok::Sym('-');
            } else {
                break;
            }
        }
        Ok(PolyExpr { terms })
    }

    fn term(&mut self, ring: usize) -> PResult<TermExpr> {
        let mut coeff = BigRational::one();
        let mut has_coeff = false;
        if let Tok::Int(_) = self.peek().tok {
            let (num, _) = self.int()?;
            let mut den = BigInt::one();
            if self.is_sym('/') {
                self.next();
                let (d, dt) = self.int()?;
                if d.is_zero() {
                    return self.semantic(&dt, codes::BAD_COEFFICIENT, "zero denominator".into());
                }
                den = d;
            }
            coeff = BigRational::new(num, den);
            if let FieldSpec::Prime(p) = self.rings[ring].field {
                if FieldSpec::Prime(p).field().element(&coeff).is_err() {
                    let at = self.toks[self.pos - 1].clone();
                    return self.semantic(&at, codes::BAD_COEFFICIENT, format!("coefficient {coeff} is not defined over F{p}"));
                }
            }
            has_coeff = true;
        }
        let mut factors = Vec::new();
        loop {
            let star = self.is_sym('*');
            if star {
                if !has_coeff && factors.is_empty() {
                    return self.syntax(&["coefficient", "variable"]);
                }
                self.next();
            }
            let t = self.peek().clone();
            let is_var = matches!(&t.tok, Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()));
            if !is_var {
                if star {
                    return self.syntax(&["variable"]);
                }
                break;
            }
            let (v, vt) = self.ident("variable")?;
            if !self.rings[ring].vars.contains(&v) {
                return self.semantic(&vt, codes::UNKNOWN_VARIABLE, format!("unknown variable `{v}`"));
            }
            let mut e = 1u32;
            if self.is_sym('^') {
                self.next();
                e = self.small_int()?;
            }
            factors.push((v, e));
        }
        if !has_coeff && factors.is_empty() {
            return self.syntax(&["coefficient", "variable"]);
        }
        Ok(TermExpr { coeff, factors })
    }

    fn command(&mut self) -> PResult<Command> {
        let kw = self.next();
        let Tok::Ident(word) = &kw.tok else { unreachable!() };
        match word.as_str() {
            "analyze" | "profile" | "poset" => {
                let (name, t) = self.ident("ideal name")?;
                self.check_ideal(&name, &t, None)?;
                Ok(match word.as_str() {
                    "analyze" => Command::Analyze(name),
                    "profile" => Command::Profile(name),
                    _ => Command::Poset(name),
                })
            }
            "chain" => {
                let (name, t) = self.ident("ideal name")?;
                let ring = self.check_ideal(&name, &t, None)?;
                self.expect_keyword("from")?;
                self.expect_sym('(')?;
                let mut from = Vec::new();
                loop {
                    let (v, vt) = self.ident("variable")?;
                    if !self.rings[ring].vars.contains(&v) {
                        return self.semantic(&vt, codes::UNKNOWN_VARIABLE, format!("unknown variable `{v}`"));
                    }
                    from.push(v);
                    if self.is_sym(',') {
                        self.next();
                    } else {
                        break;
                    }
                }
                self.expect_sym(')')?;
                Ok(Command::Chain { ideal: name, from })
            }
            _ => {
                let t = self.peek().clone();
                let name = match &t.tok {
                    Tok::Ident(s) => {
                        let s = s.clone();
                        self.next();
                        s
                    }
                    _ => return self.syntax(&FamilySpec::NAMES),
                };
                let mut args = Vec::new();
                if self.is_sym('(') {
                    self.next();
                    loop {
                        args.push(self.small_int::<usize>()?);
                        if self.is_sym(',') {
                            self.next();
                        } else {
                            break;
                        }
                    }
                    self.expect_sym(')')?;
                }
                match FamilySpec::from_name(&name, &args) {
                    Ok(spec) => Ok(Command::Family(spec)),
                    Err(e) => self.semantic(&t, codes::BAD_FAMILY, e.to_string()),
                }
            }
        }
    }
}

const STATEMENT_START: [&str; 7] = ["`ring`", "`ideal`", "`analyze`", "`profile`", "`poset`", "`chain`", "`family`"];

pub fn parse(src: &str) -> Result<Script, ParseError> {
    let toks = lex(src)?;
    Parser {
        toks,
        pos: 0,
        rings: Vec::new(),
        ideals: HashMap::new(),
    }
    .script()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_domain_example() {
        let s = parse("ring Q[x,y,z,v]  ideal I = intersect((x),(y,z))  analyze I").unwrap();
        assert_eq!(s.statements.len(), 3);
        assert_eq!(s.commands().next(), Some(&Command::Analyze("I".into())));
    }

    #[test]
    fn ideal_without_ring() {
        let e = parse("ideal I = (x)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Semantic);
        assert_eq!(e.code, codes::NO_RING);
        assert_eq!(e.message, "no ring declared");
        assert_eq!((e.line, e.column), (1, 1));
    }

    #[test]
    fn family_command() {
        let s = parse("family example_ufd(2,3)").unwrap();
        assert_eq!(s.commands().next(), Some(&Command::Family(FamilySpec::ExampleUfd { a: 2, b: 3 })));
        assert_eq!(parse("family prop42(2,5)").unwrap_err().code, codes::BAD_FAMILY);
    }

    #[test]
    fn error_positions_and_expected_sets() {
        let e = parse("ring Q[x,y]\nideal I = (x,\n)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
        assert_eq!((e.line, e.column), (3, 1));
        assert!(e.expected.contains(&"variable".to_string()));
        let e = parse("ring Q[x] ideal I = (x) analyze J").unwrap_err();
        assert_eq!(e.code, codes::UNDECLARED_IDEAL);
        let e = parse("ring Q[x] ideal I = (y)").unwrap_err();
        assert_eq!(e.code, codes::UNKNOWN_VARIABLE);
        let e = parse("ring Q[x] ideal I = (x) $").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Lexical);
        assert_eq!(e.column, 25);
    }

    #[test]
    fn polynomial_syntax() {
        let s = parse("ring F7[x,y] ideal I = (-x^2*y + 3/2 x y - 4, 2x - y)").unwrap();
        let Statement::Ideal(d) = &s.statements[1] else { panic!() };
        assert_eq!(d.expr.to_string(), "(-x^2*y + 3/2*x*y - 4, 2*x - y)");
        assert!(matches!(parse("ring F6[x]").unwrap_err().code, codes::BAD_FIELD));
        assert_eq!(parse("ring F7[x] ideal I = (1/7*x)").unwrap_err().code, codes::BAD_COEFFICIENT);
    }

    #[test]
    fn render_round_trip() {
        let src = "ring Q[x,y,z] # comment\nideal I = intersect((x), (y, z - 1/3))\nideal J = intersect(I, (x*y))\nchain J from (x,y)\nprofile I\nfamily example_domain\n";
        let s = parse(src).unwrap();
        let again = parse(&s.render()).unwrap();
        assert_eq!(s, again);
        assert_eq!(again.render(), s.render());
    }

    #[test]
    fn ideals_bind_to_their_ring() {
        let e = parse("ring Q[x] ideal I = (x) ring Q[x] ideal J = intersect(I, (x))").unwrap_err();
        assert_eq!(e.code, codes::RING_MISMATCH);
    }

    #[test]
    fn keywords_are_reserved() {
        assert_eq!(parse("ring Q[from]").unwrap_err().code, codes::RESERVED_WORD);
    }
}
