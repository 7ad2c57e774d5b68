//! Plain-text pc presentations.
//!
//! ```text
//! %p 3
//! %orders 9 27
//! %weights 1 1
//! g1^9 = 1
//! g2^27 = 1
//! g2^g1 = g2^4
//! ```
//!
//! Every power relation and every conjugation relation is written, in
//! collected form. On input, `%weights` is optional (all ones) and missing
//! relations are trivial.
use std::fmt::Write as _;

use thiserror::Error;

use super::{Element, PcBuilder, PcError, PcPresentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PcpError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: unknown generator {name}")]
    UnknownGenerator { line: usize, name: String },
    #[error("line {line}: {what} is not a non-negative integer")]
    NotInteger { line: usize, what: String },
    #[error("missing %{0} header")]
    MissingHeader(&'static str),
    #[error(transparent)]
    Pc(#[from] PcError),
}

pub fn write_pcp(pc: &PcPresentation) -> String {
    let n = pc.n();
    let mut s = String::new();
    let join = |v: Vec<String>| v.join(" ");
    writeln!(s, "%p {}", pc.prime()).unwrap();
    writeln!(s, "%orders {}", join(pc.relative_orders().iter().map(u64::to_string).collect())).unwrap();
    writeln!(s, "%weights {}", join(pc.weights().iter().map(u32::to_string).collect())).unwrap();
    for i in 0..n {
        writeln!(s, "g{}^{} = {}", i + 1, pc.relative_orders()[i], pc.power_relation(i)).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            writeln!(s, "g{}^g{} = {}", j + 1, i + 1, pc.conjugate_relation(j, i)).unwrap();
        }
    }
    s
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl Line<'_> {
    fn syntax(&self, at: &str, msg: &str) -> PcpError {
        // `at` is always a subslice of `text`
        let col = at.as_ptr() as usize - self.text.as_ptr() as usize + 1;
        PcpError::Syntax { line: self.no, col, msg: msg.into() }
    }

    fn int(&self, s: &str) -> Result<u64, PcpError> {
        s.parse().map_err(|_| PcpError::NotInteger { line: self.no, what: s.into() })
    }

    fn gen(&self, s: &str, n: usize) -> Result<usize, PcpError> {
        let unknown = || PcpError::UnknownGenerator { line: self.no, name: s.into() };
        let k: usize = s.strip_prefix('g').and_then(|d| d.parse().ok()).ok_or_else(unknown)?;
        if k == 0 || k > n {
            return Err(unknown());
        }
        Ok(k - 1)
    }

    /// A collected word `g_i^e g_j ...` with strictly increasing indices.
    fn word(&self, s: &str, n: usize) -> Result<Vec<u64>, PcpError> {
        let mut v = vec![0; n];
        let s = s.trim();
        if s == "1" {
            return Ok(v);
        }
        let mut last = None;
        for tok in s.split_whitespace() {
            let (g, e) = match tok.split_once('^') {
                Some((g, e)) => (self.gen(g, n)?, self.int(e)?),
                None => (self.gen(tok, n)?, 1),
            };
            if last.is_some_and(|l| l >= g) {
                return Err(self.syntax(tok, "word is not in collected form"));
            }
            last = Some(g);
            v[g] = e;
        }
        Ok(v)
    }
}

pub fn parse_pcp(text: &str) -> Result<PcPresentation, PcpError> {
    let mut prime = None;
    let mut builder: Option<PcBuilder> = None;
    let mut orders: Vec<u64> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let text = raw.split('#').next().unwrap();
        let line = Line { no: k + 1, text };
        let t = text.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix('%') {
            let mut it = rest.split_whitespace();
            match it.next() {
                Some("p") => {
                    let v = it.next().ok_or_else(|| line.syntax(t, "expected a prime"))?;
                    prime = Some(line.int(v)?);
                }
                Some("orders") => {
                    let p = prime.ok_or(PcpError::MissingHeader("p"))?;
                    orders = it.map(|x| line.int(x)).collect::<Result<_, _>>()?;
                    builder = Some(PcBuilder::new(p, orders.clone()));
                }
                Some("weights") => {
                    let b = builder.take().ok_or(PcpError::MissingHeader("orders"))?;
                    let w: Vec<u32> = it.map(|x| line.int(x).map(|v| v as u32)).collect::<Result<_, _>>()?;
                    builder = Some(b.weights(w));
                }
                _ => return Err(line.syntax(t, "unknown header")),
            }
            continue;
        }
        let b = builder.take().ok_or(PcpError::MissingHeader("orders"))?;
        let n = orders.len();
        let (lhs, rhs) = t.split_once('=').ok_or_else(|| line.syntax(t, "expected '='"))?;
        let (base, exp) = lhs.trim().split_once('^').ok_or_else(|| line.syntax(lhs, "expected g_i^e or g_j^g_i"))?;
        let j = line.gen(base, n)?;
        let rhs = line.word(rhs, n)?;
        builder = Some(if exp.starts_with('g') {
            let i = line.gen(exp, n)?;
            if i >= j {
                return Err(line.syntax(exp, "conjugating generator must come first"));
            }
            b.conjugate(j, i, rhs)
        } else {
            if line.int(exp)? != orders[j] {
                return Err(line.syntax(exp, "power relation exponent differs from the relative order"));
            }
            b.power(j, rhs)
        });
    }
    match builder {
        Some(b) => Ok(b.build()?),
        None if prime.is_none() => Err(PcpError::MissingHeader("p")),
        None => Err(PcpError::MissingHeader("orders")),
    }
}

impl PcPresentation {
    pub fn to_pcp(&self) -> String {
        write_pcp(self)
    }
}

/// Element from a collected word in `g1, g2, ...`.
pub fn parse_element(pc: &PcPresentation, s: &str) -> Result<Element, PcpError> {
    let line = Line { no: 1, text: s };
    Ok(pc.element(line.word(s, pc.n())?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc::cyclic_derived_example;

    #[test]
    fn small_roundtrip() {
        let pc = cyclic_derived_example(3, 3).unwrap();
        let text = write_pcp(&pc);
        assert!(text.contains("g2^g1 = g2^4"), "{text}");
        assert_eq!(parse_pcp(&text).unwrap(), pc);
    }

    #[test]
    fn defaults_and_errors() {
        let pc = parse_pcp("%p 2\n%orders 2 2\n# Klein four\n").unwrap();
        assert_eq!(pc.order_exponent(), 2);
        assert!(matches!(parse_pcp("%orders 2"), Err(PcpError::MissingHeader("p"))));
        assert!(matches!(parse_pcp("%p 3\n%orders 3 3\ng2^g1 = g7\n"), Err(PcpError::UnknownGenerator { line: 3, .. })));
        assert!(matches!(parse_pcp("%p 3\n%orders 3 3\ng1^3 = g2^x\n"), Err(PcpError::NotInteger { line: 3, .. })));
        let e = parse_pcp("%p 3\n%orders 3 3\ng1^9 = 1\n").unwrap_err();
        assert!(matches!(e, PcpError::Syntax { line: 3, col: 4, .. }), "{e}");
        assert!(matches!(parse_pcp("%p 3\n%orders 3 3\ng1^3 = g1\n"), Err(PcpError::Pc(_))));
        let p = parse_pcp("%p 3\n%orders 3 3\n").unwrap();
        assert_eq!(parse_element(&p, "g1^2 g2").unwrap().exponents(), &[2, 1]);
    }
}
