//! Text renderings of graphs and rational functions.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{lcm_denominators, serde_rat};
use crate::algebra::{rational_roots, Rat, RatFun1, UniPoly};
use crate::error::Result;
use crate::resolution::ResolutionGraph;
use crate::zeta::poles;

/// Numerator and denominator with coprime integer coefficients in
/// ascending degree, the denominator's leading coefficient positive.
pub fn integer_form(z: &RatFun1) -> (Vec<BigInt>, Vec<BigInt>) {
    if z.is_zero() {
        return (vec![BigInt::zero()], vec![BigInt::one()]);
    }
    let all: Vec<&Rat> = z.numer().coeffs().iter().chain(z.denom().coeffs()).collect();
    let l = Rat::from_integer(lcm_denominators(all.iter().copied()));
    let scale = |p: &UniPoly| -> Vec<BigInt> {
        p.coeffs().iter().map(|c| (c * &l).to_integer()).collect()
    };
    let (mut num, mut den) = (scale(z.numer()), scale(z.denom()));
    let g = num
        .iter()
        .chain(den.iter())
        .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
    let sign = if den.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let g = g * sign;
    for c in num.iter_mut().chain(den.iter_mut()) {
        *c = &*c / &g;
    }
    (num, den)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunRecord {
    /// Integer coefficients in ascending degree, as decimal strings.
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub text: String,
    pub latex: String,
}

impl RatFunRecord {
    pub fn new(z: &RatFun1) -> Self {
        let (num, den) = integer_form(z);
        RatFunRecord {
            numerator: num.iter().map(BigInt::to_string).collect(),
            denominator: den.iter().map(BigInt::to_string).collect(),
            text: emit_plain(z),
            latex: emit_latex(z),
        }
    }

    /// Rebuilds the rational function from the coefficient arrays.
    pub fn to_ratfun(&self) -> Result<RatFun1> {
        let parse = |v: &[String]| -> Result<UniPoly> {
            v.iter()
                .map(|c| {
                    c.parse::<BigInt>().map(Rat::from_integer).map_err(|_| {
                        crate::error::Error::InvalidArgument(format!("bad coefficient `{c}`"))
                    })
                })
                .collect::<Result<Vec<_>>>()
                .map(UniPoly::new)
        };
        RatFun1::new(parse(&self.numerator)?, parse(&self.denominator)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleRecord {
    #[serde(with = "serde_rat")]
    pub location: Rat,
    pub order: u32,
    #[serde(with = "serde_rat")]
    pub residue: Rat,
    /// Coefficient of `(s - s0)^(-order)`.
    #[serde(with = "serde_rat")]
    pub leading_coefficient: Rat,
}

pub fn pole_records(z: &RatFun1) -> Result<Vec<PoleRecord>> {
    Ok(poles(z)?
        .into_iter()
        .map(|p| PoleRecord {
            residue: z.residue(&p.location),
            location: p.location,
            order: p.order,
            leading_coefficient: p.coefficient,
        })
        .collect())
}

fn plain_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        match (i, a.is_one()) {
            (0, _) => {
                let _ = write!(out, "{a}");
            }
            (1, true) => out.push('s'),
            (1, false) => {
                let _ = write!(out, "{a}*s");
            }
            (_, true) => {
                let _ = write!(out, "s^{i}");
            }
            (_, false) => {
                let _ = write!(out, "{a}*s^{i}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `(num)/(den)` with coprime integer coefficients, in the syntax accepted
/// by `--expect`.
pub fn emit_plain(z: &RatFun1) -> String {
    let (num, den) = integer_form(z);
    if den.len() == 1 && den[0].is_one() {
        return plain_poly(&num);
    }
    format!("({})/({})", plain_poly(&num), plain_poly(&den))
}

fn latex_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if i == 0 || !a.is_one() {
            let _ = write!(out, "{a}");
        }
        match i {
            0 => {}
            1 => out.push('s'),
            _ => {
                let _ = write!(out, "s^{{{i}}}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `\frac{num}{den}` with integer coefficients; the denominator is a
/// product of linear factors when all its roots are rational.
pub fn emit_latex(z: &RatFun1) -> String {
    if z.is_zero() {
        return "0".into();
    }
    let (num, den) = integer_form(z);
    if den.len() == 1 {
        let n = latex_poly(&num);
        return if den[0].is_one() { n } else { format!("\\frac{{{n}}}{{{}}}", den[0]) };
    }
    let report = match rational_roots(z.denom()) {
        Ok(r) if r.remainder_degree == 0 => r,
        _ => return format!("\\frac{{{}}}{{{}}}", latex_poly(&num), latex_poly(&den)),
    };
    // z = num' / (c * prod (q s - p)^m) with primitive integer linear factors
    let mut product = UniPoly::one();
    let mut factors = Vec::new();
    for (root, m) in &report.roots {
        let lin = vec![-root.numer().clone(), root.denom().clone()];
        let poly = UniPoly::new(lin.iter().cloned().map(Rat::from_integer).collect());
        product = &product * &poly.pow(*m);
        factors.push((latex_poly(&lin), *m));
    }
    // z * product is a polynomial
    let top = (z.numer() * &product).div_exact(z.denom()).expect("rational roots divide");
    let (content, ints) = top.integer_primitive();
    let (cnum, cden) = (content.numer().clone(), content.denom().clone());
    let numer_coeffs: Vec<BigInt> = ints.iter().map(|c| c * &cnum).collect();
    let numer = latex_poly(&numer_coeffs);
    let mut denom = if cden.is_one() { String::new() } else { cden.to_string() };
    let single = factors.len() == 1 && factors[0].1 == 1 && denom.is_empty();
    for (f, m) in &factors {
        if single {
            denom.push_str(f);
        } else if *m == 1 {
            let _ = write!(denom, "({f})");
        } else {
            let _ = write!(denom, "({f})^{{{m}}}");
        }
    }
    format!("\\frac{{{numer}}}{{{denom}}}")
}

/// DOT rendering: filled nodes for exceptional curves, open nodes for
/// branches. An orbit of conjugate branches is drawn as one node per
/// member, each labeled with the orbit size.
pub fn emit_dot(g: &ResolutionGraph) -> String {
    let mut out = String::from("graph resolution {\n  node [shape=circle];\n");
    for e in &g.exceptionals {
        let _ = writeln!(
            out,
            "  E{id} [label=\"E{id}({n},{nu})\", style=filled];",
            id = e.id,
            n = e.n,
            nu = e.nu
        );
    }
    let mut counter = 0;
    let mut branch_edges = Vec::new();
    let mut open = |out: &mut String, n: u64, orbit: u64| {
        counter += 1;
        let _ = writeln!(out, "  b{counter} [label=\"branch({n})\u{d7}{orbit}\"];");
        counter
    };
    for b in &g.branches {
        for _ in 0..b.orbit_size {
            let id = open(&mut out, b.n, b.orbit_size);
            branch_edges.push((format!("b{id}"), format!("E{}", b.host)));
        }
    }
    if let Some(origin) = &g.nc_at_origin_case {
        for &n in &origin.branches {
            open(&mut out, n, 1);
        }
    }
    for (a, b) in &g.edges {
        let _ = writeln!(out, "  E{a} -- E{b};");
    }
    for (a, b) in branch_edges {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::parse_germ;
    use crate::resolution::resolve_germ;
    use crate::zeta::zeta_top;

    fn graph(text: &str) -> ResolutionGraph {
        resolve_germ(&parse_germ(text).unwrap()).unwrap()
    }

    #[test]
    fn latex_examples() {
        assert_eq!(emit_latex(&zeta_top(&graph("y^2+x^3"))), "\\frac{4s+5}{(s+1)(6s+5)}");
        assert_eq!(emit_latex(&RatFun1::zero()), "0");
        assert_eq!(emit_latex(&RatFun1::from_ints(&[1], &[1, 2]).unwrap()), "\\frac{1}{2s+1}");
        assert_eq!(emit_latex(&RatFun1::from_ints(&[1], &[2, 2]).unwrap()), "\\frac{1}{2(s+1)}");
        assert_eq!(emit_latex(&RatFun1::from_ints(&[1], &[1, 2, 1]).unwrap()), "\\frac{1}{(s+1)^{2}}");
        assert_eq!(emit_latex(&RatFun1::from_ints(&[1], &[1, 0, 1]).unwrap()), "\\frac{1}{s^{2}+1}");
    }

    #[test]
    fn plain_round_trip() {
        let z = zeta_top(&graph("x^3*y^2+x^7"));
        assert_eq!(crate::cli::parse_ratfun(&emit_plain(&z)).unwrap(), z);
        assert_eq!(emit_plain(&zeta_top(&graph("y^2+x^3"))), "(4*s+5)/(6*s^2+11*s+5)");
        assert_eq!(emit_plain(&RatFun1::zero()), "0");
    }

    #[test]
    fn integer_forms() {
        let z = RatFun1::new(
            UniPoly::new(vec![Rat::new(1.into(), 2.into())]),
            UniPoly::new(vec![Rat::from_integer(1.into()), Rat::new(1.into(), 3.into())]),
        )
        .unwrap();
        let (n, d) = integer_form(&z);
        assert_eq!(n, vec![BigInt::from(3)]);
        assert_eq!(d, vec![BigInt::from(6), BigInt::from(2)]);
        let back = RatFunRecord::new(&z).to_ratfun().unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn dot_shapes() {
        let count = |s: &str, pat: &str| s.matches(pat).count();
        let cusp = emit_dot(&graph("y^2+x^3"));
        assert_eq!(count(&cusp, "style=filled"), 3);
        assert_eq!(count(&cusp, "branch("), 1);
        assert_eq!(count(&cusp, " -- "), 3);
        let line = emit_dot(&graph("y^2"));
        assert_eq!(count(&line, "branch("), 1);
        assert_eq!(count(&line, "style=filled"), 0);
        assert_eq!(count(&line, " -- "), 0);
        let tacnode = emit_dot(&graph("y^2+x^4"));
        assert_eq!(count(&tacnode, "style=filled"), 2);
        assert_eq!(count(&tacnode, "-- E2;"), 3);
        assert_eq!(count(&tacnode, "branch(1)\u{d7}2"), 2);
    }
}
