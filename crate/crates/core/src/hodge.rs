//! Hodge-polynomial zeta function of a resolved curve germ.
//!
//! Every stratum is a point set or a punctured rational curve, so its
//! Hodge polynomial depends on `uv` only. The function is kept as a
//! reduced fraction in `w = uv` and `T = (uv)^(-s)`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{fmt_rat, serde_rat};
use crate::algebra::{factor_order, BiPoly, Rat, UniPoly};
use crate::error::{Error, Result};
use crate::resolution::{ResolutionGraph, StratumShape};

/// Fraction `num / den` in `w` (first variable) and `T` (second).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeZeta {
    pub num: BiPoly,
    pub den: BiPoly,
}

/// `w^nu - T^n`.
fn pole_factor(nu: u64, n: u64) -> BiPoly {
    BiPoly::from_int_terms(&[(1, nu as u32, 0), (-1, 0, n as u32)])
}

fn cyclotomic(d: u64, cache: &mut BTreeMap<u64, UniPoly>) -> UniPoly {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    let mut p = UniPoly::monomial(Rat::one(), d as usize) - UniPoly::from_ints(&[1]);
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.div_exact(&cyclotomic(e, cache)).expect("cyclotomic divisor");
        }
    }
    cache.insert(d, p.clone());
    p
}

/// Irreducible factors of `w^nu - T^n`: the homogenized cyclotomic
/// polynomials `Phi_d(w^a, T^b)` for `d | gcd(nu, n)`, with `a = nu/g`,
/// `b = n/g`.
fn pole_factor_pieces(nu: u64, n: u64, cache: &mut BTreeMap<u64, UniPoly>) -> Vec<BiPoly> {
    let g = nu.gcd(&n);
    let (a, b) = ((nu / g) as u32, (n / g) as u32);
    (1..=g)
        .filter(|d| g.is_multiple_of(*d))
        .map(|d| {
            let phi = cyclotomic(d, cache);
            let deg = phi.degree().unwrap_or(0) as u32;
            BiPoly::from_terms(
                phi.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| ((a * i as u32, b * (deg - i as u32)), c.clone())),
            )
        })
        .collect()
}

/// Hodge polynomial of a stratum in `w`.
fn stratum_hodge(shape: StratumShape) -> BiPoly {
    match shape {
        StratumShape::Points { count } => BiPoly::constant(Rat::from_integer(count.into())),
        StratumShape::PuncturedLine { punctures } => BiPoly::from_terms([
            ((1, 0), Rat::one()),
            ((0, 0), Rat::one() - Rat::from_integer(punctures.into())),
        ]),
    }
}

/// `w^(-2) sum_I H(E_I°) prod_{i in I} (w-1) T^{N_i} / (w^{nu_i} - T^{N_i})`,
/// reduced.
pub fn zeta_hodge(g: &ResolutionGraph) -> HodgeZeta {
    let strata = g.strata();
    // common denominator: every (nu, N) factor to the largest power it
    // takes in a single stratum
    let mut powers: BTreeMap<(u64, u64), u32> = BTreeMap::new();
    for s in &strata {
        let mut local: BTreeMap<(u64, u64), u32> = BTreeMap::new();
        for c in &s.members {
            *local.entry((c.nu, c.n)).or_default() += 1;
        }
        for (key, k) in local {
            let slot = powers.entry(key).or_default();
            *slot = (*slot).max(k);
        }
    }
    let mut den = BiPoly::monomial(Rat::one(), 2, 0);
    for (&(nu, n), &k) in &powers {
        den = den * pole_factor(nu, n).pow(k);
    }
    let w_minus_one = BiPoly::from_int_terms(&[(1, 1, 0), (-1, 0, 0)]);
    let mut num = BiPoly::zero();
    for s in &strata {
        let mut cofactor = den.div_exact(&BiPoly::monomial(Rat::one(), 2, 0)).expect("w^2");
        let mut term = stratum_hodge(s.shape);
        for c in &s.members {
            cofactor = cofactor.div_exact(&pole_factor(c.nu, c.n)).expect("factor of denominator");
            term = term * w_minus_one.clone() * BiPoly::monomial(Rat::one(), 0, c.n as u32);
        }
        num = num + term * cofactor;
    }
    let mut cache = BTreeMap::new();
    let mut pieces = vec![BiPoly::x()];
    for &(nu, n) in powers.keys() {
        pieces.extend(pole_factor_pieces(nu, n, &mut cache));
    }
    pieces.sort_by_key(|p| p.to_expr());
    pieces.dedup();
    reduce(num, den, &pieces)
}

fn reduce(mut num: BiPoly, mut den: BiPoly, pieces: &[BiPoly]) -> HodgeZeta {
    if num.is_zero() {
        return HodgeZeta { num, den: BiPoly::one() };
    }
    for piece in pieces {
        while let (Some(a), Some(b)) = (num.div_exact(piece), den.div_exact(piece)) {
            num = a;
            den = b;
        }
    }
    let lead = den.leading_coeff();
    HodgeZeta {
        num: num.scale(&lead.recip()),
        den: den.scale(&lead.recip()),
    }
}

fn split_negative(s0: &Rat) -> (i64, i64) {
    let p: i64 = (-s0.numer()).try_into().expect("numerator fits in i64");
    let q: i64 = s0.denom().try_into().expect("denominator fits in i64");
    (p, q)
}

/// Exact value at `u = 1` of `f(u^q, u^p)` after cancelling the common
/// order of vanishing, for `s0 = -p/q`.
pub fn hodge_specialize_top(zh: &HodgeZeta, s0: &Rat) -> Result<Rat> {
    let (p, q) = split_negative(s0);
    let (num, _) = zh.num.substitute_monomial(q, p);
    let (den, _) = zh.den.substitute_monomial(q, p);
    let one = Rat::one();
    let vanishing = |f: &UniPoly| {
        let mut f = f.clone();
        let mut k = 0;
        let root = UniPoly::linear_root(&one);
        while !f.is_zero() && f.eval(&one).is_zero() {
            f = f.div_exact(&root).expect("root at 1");
            k += 1;
        }
        (f, k)
    };
    if den.is_zero() {
        // a factor w^nu - T^N with nu/N = p/q vanishes identically
        return Err(Error::PoleAtSpecialization(fmt_rat(s0)));
    }
    if num.is_zero() {
        return Ok(Rat::zero());
    }
    let (num_r, a) = vanishing(&num);
    let (den_r, b) = vanishing(&den);
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Err(Error::PoleAtSpecialization(fmt_rat(s0))),
        std::cmp::Ordering::Greater => Ok(Rat::zero()),
        std::cmp::Ordering::Equal => Ok(num_r.eval(&one) / den_r.eval(&one)),
    }
}

/// Order of `w^a - T^b` in the denominator minus its order in the
/// numerator, for `s0 = -a/b`.
pub fn hodge_pole_order(zh: &HodgeZeta, s0: &Rat) -> Result<i64> {
    if !(s0 < &Rat::zero()) {
        return Err(Error::InvalidArgument("pole candidates must be negative".into()));
    }
    let (a, b) = split_negative(s0);
    debug_assert_eq!(a.gcd(&b), 1);
    let factor = pole_factor(a as u64, b as u64);
    let in_den = factor_order(&zh.den, &factor)? as i64;
    let in_num = if zh.num.is_zero() { 0 } else { factor_order(&zh.num, &factor)? as i64 };
    Ok(in_den - in_num)
}

/// Real poles with their orders: every `-nu/N` of the graph whose factor
/// survives in the reduced denominator.
pub fn hodge_poles(g: &ResolutionGraph, zh: &HodgeZeta) -> Result<Vec<(Rat, i64)>> {
    let mut out = Vec::new();
    for s0 in crate::zeta::candidate_poles(g) {
        let order = hodge_pole_order(zh, &s0)?;
        if order > 0 {
            out.push((s0, order));
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    w: u32,
    #[serde(rename = "T")]
    t: u32,
    #[serde(with = "serde_rat")]
    coeff: Rat,
}

#[derive(Serialize, Deserialize)]
struct HodgeRecord {
    variables: [String; 2],
    numerator: Vec<TermRecord>,
    denominator: Vec<TermRecord>,
}

fn records(p: &BiPoly) -> Vec<TermRecord> {
    p.terms()
        .map(|(&(w, t), c)| TermRecord { w, t, coeff: c.clone() })
        .collect()
}

fn from_records(r: Vec<TermRecord>) -> BiPoly {
    BiPoly::from_terms(r.into_iter().map(|t| ((t.w, t.t), t.coeff)))
}

impl Serialize for HodgeZeta {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HodgeRecord {
            variables: ["w".into(), "T".into()],
            numerator: records(&self.num),
            denominator: records(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HodgeZeta {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = HodgeRecord::deserialize(d)?;
        Ok(HodgeZeta {
            num: from_records(r.numerator),
            den: from_records(r.denominator),
        })
    }
}

impl HodgeZeta {
    pub fn display(&self) -> String {
        format!(
            "({}) / ({})",
            self.num.display_with("w", "T"),
            self.den.display_with("w", "T")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::germ::parse_germ;
    use crate::resolution::resolve_germ;
    use crate::zeta::zeta_top;

    fn graph(text: &str) -> ResolutionGraph {
        resolve_germ(&parse_germ(text).unwrap()).unwrap()
    }

    #[test]
    fn y_squared_closed_form() {
        let zh = zeta_hodge(&graph("y^2"));
        // (w-1) T^2 / (w^2 (w - T^2))
        let expected_num = BiPoly::from_int_terms(&[(1, 1, 2), (-1, 0, 2)]);
        let expected_den = BiPoly::from_int_terms(&[(1, 3, 0), (-1, 2, 2)]);
        assert_eq!(&zh.num * &expected_den, &zh.den * &expected_num);
        assert_eq!(zh.den.total_degree(), Some(4));
        assert_eq!(hodge_specialize_top(&zh, &rat(-1, 3)).unwrap(), int(3));
        assert_eq!(hodge_pole_order(&zh, &rat(-1, 2)).unwrap(), 1);
        assert_eq!(hodge_pole_order(&zh, &rat(-1, 3)).unwrap(), 0);
        assert!(matches!(
            hodge_specialize_top(&zh, &rat(-1, 2)),
            Err(Error::PoleAtSpecialization(_))
        ));
    }

    #[test]
    fn smooth_and_cusp() {
        let zh = zeta_hodge(&graph("y"));
        assert_eq!(hodge_specialize_top(&zh, &int(0)).unwrap(), int(1));
        assert_eq!(hodge_specialize_top(&zh, &rat(7, 3)).unwrap(), rat(3, 10));
        let cusp = graph("y^2+x^3");
        let zh = zeta_hodge(&cusp);
        assert_eq!(hodge_specialize_top(&zh, &rat(-1, 2)).unwrap(), int(3));
        assert_eq!(hodge_pole_order(&zh, &rat(-5, 6)).unwrap(), 1);
        assert_eq!(hodge_pole_order(&zh, &int(-1)).unwrap(), 1);
        assert_eq!(hodge_pole_order(&zh, &rat(-2, 3)).unwrap(), 0);
    }

    #[test]
    fn specialization_matches_topological() {
        for text in ["y^2+x^4", "x*y*(x+y)", "y^3+x*y^2+x^5", "x^3*y^2+x^7", "y^2+x^2"] {
            let g = graph(text);
            let zh = zeta_hodge(&g);
            let top = zeta_top(&g);
            for s in [rat(1, 7), rat(-2, 9), int(3), rat(-11, 5), rat(-3, 13)] {
                assert_eq!(hodge_specialize_top(&zh, &s).unwrap(), top.eval(&s).unwrap(), "{text} at {s}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let zh = zeta_hodge(&graph("y^2+x^3"));
        let text = serde_json::to_string(&zh).unwrap();
        assert_eq!(serde_json::from_str::<HodgeZeta>(&text).unwrap(), zh);
    }
}
