//! Finite presentations with exponents that depend on a prime parameter.
//!
//! Text format, one item per line, `#` starts a comment:
//!
//! ```text
//! %p 2                      # value substituted for `p`
//! %prime 2                  # optional; group prime when `p` is not prime
//! gens a b c
//! rel [a,b] = a^(-p^5)      # relation lhs = rhs
//! rel [a^(p^2), b^(p^6)]    # relator
//! pow a^(p^12) = 1          # power relation
//! ```
//!
//! Words are products of factors separated by blanks or `*`; a factor is a
//! generator, `1`, a parenthesised word or a left-normed commutator
//! `[w1, w2, ...]`, optionally raised to an exponent. Exponent expressions
//! use integers, `p`, `+`, `-`, `*` and `^`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::pc::collect::{Central, Elt, Rules};
use crate::pc::{is_prime, Element, PcPresentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, col: usize, name: String },
    #[error("line {line}: exponent {expr} is not an integer")]
    NonInteger { line: usize, expr: String },
    #[error("presentation declares no generators")]
    NoGenerators,
    #[error("missing `%p` line")]
    MissingP,
    #[error("{0} is not a prime; add a `%prime` line")]
    NotPrime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    P,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn int(v: impl Into<BigInt>) -> Expr {
        let v: BigInt = v.into();
        if v.is_negative() {
            Expr::Neg(Box::new(Expr::Int(-v)))
        } else {
            Expr::Int(v)
        }
    }

    /// `p^k`
    pub fn p_pow(k: u32) -> Expr {
        match k {
            1 => Expr::P,
            _ => Expr::Pow(Box::new(Expr::P), Box::new(Expr::int(k))),
        }
    }

    /// `m * p^k`, with the usual abbreviations.
    pub fn scaled_p_pow(m: i64, k: u32) -> Expr {
        let base = if k == 0 { Expr::int(1) } else { Expr::p_pow(k) };
        match m {
            1 => base,
            -1 => Expr::Neg(Box::new(base)),
            _ if k == 0 => Expr::int(m),
            _ if m < 0 => Expr::Neg(Box::new(Expr::Mul(Box::new(Expr::int(-m)), Box::new(base)))),
            _ => Expr::Mul(Box::new(Expr::int(m)), Box::new(base)),
        }
    }

    pub fn eval(&self, p: &BigInt) -> Option<BigInt> {
        Some(match self {
            Expr::Int(v) => v.clone(),
            Expr::P => p.clone(),
            Expr::Neg(a) => -a.eval(p)?,
            Expr::Add(a, b) => a.eval(p)? + b.eval(p)?,
            Expr::Sub(a, b) => a.eval(p)? - b.eval(p)?,
            Expr::Mul(a, b) => a.eval(p)? * b.eval(p)?,
            Expr::Pow(a, b) => {
                let e = b.eval(p)?;
                if e.is_negative() {
                    return None;
                }
                num_traits::pow(a.eval(p)?, e.to_usize()?)
            }
        })
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::P => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Int(v) => write!(f, "{v}")?,
            Expr::P => write!(f, "p")?,
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write(f, 3)?;
            }
            Expr::Add(a, b) => {
                a.write(f, 1)?;
                write!(f, "+")?;
                b.write(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.write(f, 1)?;
                write!(f, "-")?;
                b.write(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.write(f, 2)?;
                write!(f, "*")?;
                b.write(f, 3)?;
            }
            Expr::Pow(a, b) => {
                a.write(f, 5)?;
                write!(f, "^")?;
                b.write(f, 3)?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// A word over generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Gen(usize),
    Pow(Box<Word>, Expr),
    /// Product; the empty product is the identity.
    Prod(Vec<Word>),
    /// Left-normed commutator of at least two entries.
    Comm(Vec<Word>),
}

impl Word {
    pub fn identity() -> Word {
        Word::Prod(vec![])
    }

    pub fn pow(self, e: Expr) -> Word {
        Word::Pow(Box::new(self), e)
    }

    pub fn comm(items: Vec<Word>) -> Word {
        assert!(items.len() >= 2);
        Word::Comm(items)
    }

    /// Product that avoids one-factor wrappers.
    pub fn product(mut items: Vec<Word>) -> Word {
        if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Word::Prod(items)
        }
    }

    fn resolve(&self, p: &BigInt, line: usize) -> Result<RWord, FpError> {
        Ok(match self {
            Word::Gen(i) => RWord::Gen(*i),
            Word::Pow(w, e) => {
                let v = e.eval(p).ok_or_else(|| FpError::NonInteger { line, expr: e.to_string() })?;
                RWord::Pow(Box::new(w.resolve(p, line)?), v)
            }
            Word::Prod(ws) => RWord::Prod(ws.iter().map(|w| w.resolve(p, line)).collect::<Result<_, _>>()?),
            Word::Comm(ws) => RWord::Comm(ws.iter().map(|w| w.resolve(p, line)).collect::<Result<_, _>>()?),
        })
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, names: &[String], atom: bool) -> fmt::Result {
        match self {
            Word::Gen(i) => write!(f, "{}", names[*i]),
            Word::Prod(ws) if ws.is_empty() => write!(f, "1"),
            Word::Prod(ws) => {
                if atom {
                    write!(f, "(")?;
                }
                for (k, w) in ws.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    w.write(f, names, !matches!(w, Word::Pow(..)))?;
                }
                if atom {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Word::Pow(w, e) => {
                if atom {
                    write!(f, "(")?;
                }
                w.write(f, names, true)?;
                write!(f, "^")?;
                e.write(f, 3)?;
                if atom {
                    write!(f, ")")?;
                }
                Ok(())
            }
            Word::Comm(ws) => {
                write!(f, "[")?;
                for (k, w) in ws.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    w.write(f, names, false)?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A word with exponents evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RWord {
    Gen(usize),
    Pow(Box<RWord>, BigInt),
    Prod(Vec<RWord>),
    Comm(Vec<RWord>),
}

impl RWord {
    pub fn inverse(self) -> RWord {
        RWord::Pow(Box::new(self), BigInt::from(-1))
    }

    pub(crate) fn eval<C: Central>(&self, rules: &Rules<C>, images: &[Elt<C>]) -> Elt<C> {
        match self {
            RWord::Gen(i) => images[*i].clone(),
            RWord::Pow(w, e) => {
                if e.is_zero() {
                    return rules.identity();
                }
                rules.pow_big(&w.eval(rules, images), e)
            }
            RWord::Prod(ws) => {
                let mut acc = rules.identity();
                for w in ws {
                    acc = rules.mul(&acc, &w.eval(rules, images));
                }
                acc
            }
            RWord::Comm(ws) => {
                let mut acc = ws[0].eval(rules, images);
                for w in &ws[1..] {
                    acc = rules.comm(&acc, &w.eval(rules, images));
                }
                acc
            }
        }
    }

    /// Evaluates in a pc group at the given generator images.
    pub fn evaluate(&self, pc: &PcPresentation, images: &[Element]) -> Element {
        let imgs: Vec<Elt<()>> = images.iter().map(|e| Elt { exps: e.exponents().to_vec(), central: () }).collect();
        Element::from_raw(self.eval(pc.rules(), &imgs).exps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `lhs = rhs`
    Equal(Word, Word),
    /// `w = 1`
    Relator(Word),
    /// `gen^exp = rhs`
    Power { gen: usize, exp: Expr, rhs: Word },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPresentation {
    /// Value substituted for `p` in exponents.
    pub p: u64,
    /// Prime of the p-group when `p` itself is not prime.
    pub prime: Option<u64>,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl FpPresentation {
    pub fn new(p: u64, generators: &[&str]) -> Self {
        FpPresentation { p, prime: None, generators: generators.iter().map(|s| s.to_string()).collect(), relations: vec![] }
    }

    pub fn gen(&self, name: &str) -> Word {
        Word::Gen(self.generators.iter().position(|g| g == name).unwrap_or_else(|| panic!("no generator {name}")))
    }

    pub fn group_prime(&self) -> u64 {
        self.prime.unwrap_or(self.p)
    }

    pub fn parse(text: &str) -> Result<Self, FpError> {
        let mut p = None;
        let mut prime = None;
        let mut generators: Option<Vec<String>> = None;
        let mut relations = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let content = raw.split('#').next().unwrap();
            let trimmed = content.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let offset = content.len() - trimmed.len();
            let (kw, rest) = match trimmed.find(char::is_whitespace) {
                Some(k) => (&trimmed[..k], &trimmed[k..]),
                None => (trimmed, ""),
            };
            let rest_col = offset + kw.len();
            let syntax = |col: usize, msg: &str| FpError::Syntax { line, col: col + 1, msg: msg.to_string() };
            match kw {
                "%p" | "%prime" => {
                    let v: u64 = rest.trim().parse().map_err(|_| syntax(rest_col, "expected a positive integer"))?;
                    if v < 2 {
                        return Err(syntax(rest_col, "expected an integer at least 2"));
                    }
                    if kw == "%p" {
                        p = Some(v);
                    } else {
                        prime = Some(v);
                    }
                }
                "gens" => {
                    let names: Vec<String> =
                        rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(String::from).collect();
                    for n in &names {
                        if !is_ident(n) {
                            return Err(syntax(rest_col, &format!("bad generator name `{n}`")));
                        }
                    }
                    if names.is_empty() {
                        return Err(FpError::NoGenerators);
                    }
                    generators = Some(names);
                }
                "rel" | "pow" => {
                    let gens = generators.as_ref().ok_or_else(|| syntax(offset, "relation before `gens`"))?;
                    let mut ps = Parser { s: content.as_bytes(), pos: rest_col, line, gens };
                    let rel = if kw == "rel" {
                        let lhs = ps.word()?;
                        ps.skip_ws();
                        if ps.eat(b'=') {
                            let rhs = ps.word()?;
                            Relation::Equal(lhs, rhs)
                        } else {
                            Relation::Relator(lhs)
                        }
                    } else {
                        ps.skip_ws();
                        let col = ps.pos;
                        let name = ps.ident().ok_or_else(|| ps.err("expected a generator"))?;
                        let gen = gens.iter().position(|g| *g == name).ok_or(FpError::UnknownGenerator {
                            line,
                            col: col + 1,
                            name,
                        })?;
                        ps.skip_ws();
                        if !ps.eat(b'^') {
                            return Err(ps.err("expected `^`"));
                        }
                        let exp = ps.unary()?;
                        ps.skip_ws();
                        if !ps.eat(b'=') {
                            return Err(ps.err("expected `=`"));
                        }
                        let rhs = ps.word()?;
                        Relation::Power { gen, exp, rhs }
                    };
                    ps.skip_ws();
                    if ps.pos < ps.s.len() {
                        return Err(ps.err("unexpected input"));
                    }
                    resolve_relation(&rel, &BigInt::from(p.unwrap_or(2)), line)?;
                    relations.push(rel);
                }
                _ => return Err(syntax(offset, &format!("unknown directive `{kw}`"))),
            }
        }
        let generators = generators.ok_or(FpError::NoGenerators)?;
        let p = p.ok_or(FpError::MissingP)?;
        let fp = FpPresentation { p, prime, generators, relations };
        if !is_prime(fp.group_prime()) {
            return Err(FpError::NotPrime(fp.group_prime()));
        }
        Ok(fp)
    }

    /// Relators with exponents evaluated at `p`.
    pub fn relators(&self) -> Result<Vec<RWord>, FpError> {
        let p = BigInt::from(self.p);
        self.relations.iter().enumerate().map(|(k, rel)| resolve_relation(rel, &p, k + 1)).collect()
    }

    /// The text of one relation line, without the keyword.
    pub fn relation_text(&self, k: usize) -> String {
        struct R<'a>(&'a FpPresentation, &'a Relation);
        impl fmt::Display for R<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let names = &self.0.generators;
                match self.1 {
                    Relation::Relator(w) => w.write(f, names, false),
                    Relation::Equal(l, r) => {
                        l.write(f, names, false)?;
                        write!(f, " = ")?;
                        r.write(f, names, false)
                    }
                    Relation::Power { gen, exp, rhs } => {
                        write!(f, "{}^", names[*gen])?;
                        exp.write(f, 3)?;
                        write!(f, " = ")?;
                        rhs.write(f, names, false)
                    }
                }
            }
        }
        R(self, &self.relations[k]).to_string()
    }
}

impl fmt::Display for FpPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "%p {}", self.p)?;
        if let Some(q) = self.prime {
            writeln!(f, "%prime {q}")?;
        }
        writeln!(f, "gens {}", self.generators.join(" "))?;
        for (k, rel) in self.relations.iter().enumerate() {
            let kw = if matches!(rel, Relation::Power { .. }) { "pow" } else { "rel" };
            writeln!(f, "{kw} {}", self.relation_text(k))?;
        }
        Ok(())
    }
}

fn resolve_relation(rel: &Relation, p: &BigInt, line: usize) -> Result<RWord, FpError> {
    Ok(match rel {
        Relation::Relator(w) => w.resolve(p, line)?,
        Relation::Equal(l, r) => RWord::Prod(vec![l.resolve(p, line)?, r.resolve(p, line)?.inverse()]),
        Relation::Power { gen, exp, rhs } => {
            let e = exp.eval(p).ok_or_else(|| FpError::NonInteger { line, expr: exp.to_string() })?;
            RWord::Prod(vec![RWord::Pow(Box::new(RWord::Gen(*gen)), e), rhs.resolve(p, line)?.inverse()])
        }
    })
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
    gens: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> FpError {
        FpError::Syntax { line: self.line, col: self.pos + 1, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        if is_ident(t) {
            Some(t.to_string())
        } else {
            self.pos = start;
            None
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().ok()
    }

    fn word(&mut self) -> Result<Word, FpError> {
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                None | Some(b'=') | Some(b',') | Some(b']') | Some(b')') => break,
                Some(b'*') if !factors.is_empty() => {
                    self.pos += 1;
                }
                _ => {}
            }
            factors.push(self.factor()?);
        }
        match factors.len() {
            0 => Err(self.err("expected a word")),
            _ => Ok(Word::product(factors)),
        }
    }

    fn factor(&mut self) -> Result<Word, FpError> {
        let atom = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                w
            }
            Some(b'[') => {
                self.pos += 1;
                let mut items = vec![self.word()?];
                while self.eat(b',') {
                    items.push(self.word()?);
                }
                if !self.eat(b']') {
                    return Err(self.err("expected `]` or `,`"));
                }
                if items.len() < 2 {
                    return Err(self.err("a commutator needs at least two entries"));
                }
                Word::Comm(items)
            }
            Some(b'1') => {
                let col = self.pos;
                match self.number() {
                    Some(v) if v == BigInt::from(1) => Word::identity(),
                    _ => {
                        self.pos = col;
                        return Err(self.err("only `1` may appear as a word"));
                    }
                }
            }
            _ => {
                let col = self.pos;
                let name = self.ident().ok_or_else(|| self.err("expected a generator"))?;
                let i = self.gens.iter().position(|g| *g == name).ok_or(FpError::UnknownGenerator {
                    line: self.line,
                    col: col + 1,
                    name,
                })?;
                Word::Gen(i)
            }
        };
        if self.eat(b'^') {
            let e = self.unary()?;
            Ok(atom.pow(e))
        } else {
            Ok(atom)
        }
    }

    fn expr(&mut self) -> Result<Expr, FpError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, FpError> {
        let mut lhs = self.unary()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, FpError> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.prim()?;
        if self.eat(b'^') {
            Ok(Expr::Pow(Box::new(base), Box::new(self.unary()?)))
        } else {
            Ok(base)
        }
    }

    fn prim(&mut self) -> Result<Expr, FpError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.number().unwrap())),
            Some(b'p') => {
                let save = self.pos;
                match self.ident().as_deref() {
                    Some("p") => Ok(Expr::P),
                    _ => {
                        self.pos = save;
                        Err(self.err("exponents may only mention `p`"))
                    }
                }
            }
            _ => Err(self.err("expected an exponent")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_of(text: &str, p: u64, gens: &str) -> FpPresentation {
        FpPresentation::parse(&format!("%p {p}\ngens {gens}\n{text}\n")).unwrap()
    }

    #[test]
    fn parses_negative_power_exponent() {
        let fp = rel_of("rel [a,b] = a^(-p^5)", 2, "a b");
        let r = &fp.relators().unwrap()[0];
        let a = RWord::Gen(0);
        let b = RWord::Gen(1);
        let want = RWord::Prod(vec![
            RWord::Comm(vec![a.clone(), b]),
            RWord::Pow(Box::new(RWord::Pow(Box::new(a), BigInt::from(-32))), BigInt::from(-1)),
        ]);
        assert_eq!(*r, want);
    }

    #[test]
    fn parses_simple_exponent() {
        let fp = rel_of("rel [b,d] = a^(p)", 3, "a b c d");
        match &fp.relators().unwrap()[0] {
            RWord::Prod(v) => {
                assert_eq!(v[1], RWord::Pow(Box::new(RWord::Pow(Box::new(RWord::Gen(0)), BigInt::from(3))), BigInt::from(-1)))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(FpPresentation::parse("%p 3\ngens\n"), Err(FpError::NoGenerators));
        assert!(matches!(
            FpPresentation::parse("%p 3\ngens a\nrel a b\n"),
            Err(FpError::UnknownGenerator { line: 3, col: 7, .. })
        ));
        assert!(matches!(FpPresentation::parse("%p 3\ngens a\nrel a^(p^-1)\n"), Err(FpError::NonInteger { .. })));
        assert!(matches!(FpPresentation::parse("%p 3\ngens a\nrel a^q\n"), Err(FpError::Syntax { line: 3, .. })));
        assert!(matches!(FpPresentation::parse("%p 4\ngens a\n"), Err(FpError::NotPrime(4))));
        assert!(FpPresentation::parse("%p 4\n%prime 2\ngens a\n").is_ok());
    }

    #[test]
    fn round_trips() {
        let text = "%p 2\ngens a b c\n\
                    rel [a,b] = a^(-p^5)\n\
                    rel [a,c] = b^(3*p^6) a^(p^4)\n\
                    rel [a^(p^2), b^(p^6)]\n\
                    rel [a^p^2,c] = a^-p^2 b^(3*p^8) a^(17*p^2)\n\
                    rel [[a,b],c,c] = (a b)^2 1\n\
                    pow c^(p^10) = 1\n\
                    rel a^(p+1-2*p) * b\n";
        let fp = FpPresentation::parse(text).unwrap();
        let again = FpPresentation::parse(&fp.to_string()).unwrap();
        assert_eq!(fp, again);
        assert_eq!(fp.to_string(), again.to_string());
    }

    #[test]
    fn exponent_precedence() {
        let e = |s: &str| {
            let fp = rel_of(&format!("rel a^({s})"), 3, "a");
            match &fp.relators().unwrap()[0] {
                RWord::Pow(_, v) => v.clone(),
                _ => unreachable!(),
            }
        };
        assert_eq!(e("-p^2"), BigInt::from(-9));
        assert_eq!(e("2*p^2+1"), BigInt::from(19));
        assert_eq!(e("p^2^2"), BigInt::from(81));
        assert_eq!(e("10-3-2"), BigInt::from(5));
    }
}
