//! Polynomial input: parsing and localization at the origin.
//!
//! Grammar (whitespace is ignored, multiplication must be explicit):
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := variable | rational | '(' expr ')'
//! rational := int ('/' posint)?
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{BiPoly, Rat};
use crate::error::{Error, Result};

/// Sparse polynomial in an arbitrary list of variables, keyed by exponent
/// vectors. Only used as the parser's intermediate form.
type Sparse = BTreeMap<Vec<u32>, Rat>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            negate(&self.term()?)
        } else {
            self.term()?
        };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { add(&acc, &rhs) } else { add(&acc, &negate(&rhs)) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Sparse> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self
                .natural()?
                .ok_or_else(|| self.syntax("expected a natural exponent after `^`"))?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.syntax("exponent too large"))?;
            let mut acc = constant(self.vars.len(), Rat::one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?.expect("digit present");
                let mut value = Rat::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self
                        .natural()?
                        .ok_or_else(|| self.syntax("expected a denominator after `/`"))?;
                    if den.is_zero() {
                        return Err(self.syntax("zero denominator"));
                    }
                    value /= Rat::from_integer(den);
                }
                Ok(constant(self.vars.len(), value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let idx = self.vars.iter().position(|v| *v == name).ok_or_else(|| {
                    Error::UnknownVariable {
                        name: name.to_string(),
                        pos: start,
                    }
                })?;
                let mut exps = vec![0; self.vars.len()];
                exps[idx] = 1;
                Ok(BTreeMap::from([(exps, Rat::one())]))
            }
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn natural(&mut self) -> Result<Option<BigInt>> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(Some(digits.parse().expect("digits")))
    }
}

fn constant(nvars: usize, c: Rat) -> Sparse {
    let mut out = Sparse::new();
    if !c.is_zero() {
        out.insert(vec![0; nvars], c);
    }
    out
}

fn add(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (e, c) in b {
        let entry = out.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            out.remove(e);
        }
    }
    out
}

fn negate(a: &Sparse) -> Sparse {
    a.iter().map(|(e, c)| (e.clone(), -c)).collect()
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += ca * cb;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// Parses an expression over the given variable names into exponent-vector
/// form.
pub(crate) fn parse_sparse(text: &str, vars: &[&str]) -> Result<BTreeMap<Vec<u32>, Rat>> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let out = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a polynomial in `x` and `y`.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let sparse = parse_sparse(text, &["x", "y"])?;
    Ok(BiPoly::from_terms(
        sparse.into_iter().map(|(e, c)| ((e[0], e[1]), c)),
    ))
}

/// A germ at the origin as pairwise coprime squarefree factors that all
/// vanish there, each with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredGerm {
    pub factors: Vec<(BiPoly, u32)>,
    pub source_text: String,
    /// Factors discarded because they do not vanish at the origin.
    pub dropped: Vec<BiPoly>,
}

/// Serializable echo of a germ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermEcho {
    pub poly: String,
    pub factors: Vec<FactorEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEcho {
    pub factor: String,
    pub multiplicity: u32,
}

impl FactoredGerm {
    /// Order of vanishing of the product of `factor^mult` at the origin.
    pub fn multiplicity(&self) -> u32 {
        self.factors
            .iter()
            .map(|(f, m)| m * f.order().unwrap_or(0))
            .sum()
    }

    /// The product `prod factor^mult`.
    pub fn expand(&self) -> BiPoly {
        self.factors
            .iter()
            .fold(BiPoly::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }

    pub fn echo(&self) -> GermEcho {
        GermEcho {
            poly: self.source_text.clone(),
            factors: self
                .factors
                .iter()
                .map(|(f, m)| FactorEcho {
                    factor: f.to_expr(),
                    multiplicity: *m,
                })
                .collect(),
            notice: (!self.dropped.is_empty()).then(|| {
                let names: Vec<String> = self.dropped.iter().map(|f| f.to_expr()).collect();
                format!("dropped factors that are units at the origin: {}", names.join(", "))
            }),
        }
    }
}

/// Squarefree-decomposes `p` and keeps the factors through the origin.
pub fn germ_localize(p: &BiPoly) -> Result<FactoredGerm> {
    germ_localize_with_source(p, &p.to_expr())
}

pub fn germ_localize_with_source(p: &BiPoly, source: &str) -> Result<FactoredGerm> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.vanishes_at_origin() {
        return Err(Error::NotAGerm);
    }
    let mut factors = Vec::new();
    let mut dropped = Vec::new();
    for (f, m) in p.squarefree_pieces()? {
        if f.vanishes_at_origin() {
            factors.push((f, m));
        } else {
            dropped.push(f);
        }
    }
    Ok(FactoredGerm {
        factors,
        source_text: source.to_string(),
        dropped,
    })
}

/// Parses and localizes in one step.
pub fn parse_germ(text: &str) -> Result<FactoredGerm> {
    germ_localize_with_source(&parse_poly(text)?, text.trim())
}
