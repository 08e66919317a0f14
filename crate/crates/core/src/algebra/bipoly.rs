//! Sparse polynomials in two variables over the rationals.
//!
//! The first variable is called `x` and the second `y` by default; the
//! Hodge module reuses the type with the names `w` and `T`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{gcd_numerators, lcm_denominators, Rat};
use super::unipoly::{poly_gcd, UniPoly};
use crate::error::{Error, Result};

/// Exponent pair `(deg_x, deg_y)`.
pub type Exp = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exp, Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, Rat)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Integer coefficients, `(coeff, deg_x, deg_y)`.
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(c, i, j)| ((i, j), Rat::from_integer(c.into()))),
        )
    }

    pub fn add_term(&mut self, e: Exp, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0, 0)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Order of vanishing at the origin (lowest total degree).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms.iter().fold(Rat::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn swap_variables(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * Rat::from_integer(BigInt::from(j)))),
        )
    }

    /// `p(x, y)` as `sum_j c_j(x) y^j`.
    pub fn to_y_coeffs(&self) -> Vec<UniPoly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut dense: Vec<Vec<Rat>> = vec![Vec::new(); dy as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut dense[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rat::zero());
            }
            row[i as usize] = c.clone();
        }
        dense.into_iter().map(UniPoly::new).collect()
    }

    pub fn from_y_coeffs(coeffs: &[UniPoly]) -> Self {
        let mut out = Self::zero();
        for (j, cj) in coeffs.iter().enumerate() {
            for (i, c) in cj.coeffs().iter().enumerate() {
                out.add_term((i as u32, j as u32), c.clone());
            }
        }
        out
    }

    /// Univariate polynomial in `x` embedded as a bivariate one.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_y_coeffs(std::slice::from_ref(p))
    }

    /// Univariate polynomial in `y` embedded as a bivariate one.
    pub fn from_y_poly(p: &UniPoly) -> Self {
        Self::from_x_poly(p).swap_variables()
    }

    /// `p(0, y)` as a polynomial in `y`.
    pub fn restrict_x0(&self) -> UniPoly {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            if i == 0 {
                if coeffs.len() <= j as usize {
                    coeffs.resize(j as usize + 1, Rat::zero());
                }
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// `p(x, 0)` as a polynomial in `x`.
    pub fn restrict_y0(&self) -> UniPoly {
        self.swap_variables().restrict_x0()
    }

    /// Strict transform in the chart `(x, y) -> (x, x y)` after removing
    /// `x^m`; `m` must not exceed the order of `self`.
    pub fn chart_x(&self, m: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + j - m, j), c.clone()))
                .collect(),
        }
    }

    /// Strict transform in the chart `(x, y) -> (x y, y)` after removing
    /// `y^m`.
    pub fn chart_y(&self, m: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, i + j - m), c.clone()))
                .collect(),
        }
    }

    /// `p(x, y + c)`.
    pub fn translate_y(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let shifted: Vec<UniPoly> = self
            .swap_variables()
            .to_y_coeffs()
            .iter()
            .map(|row| row.translate(c))
            .collect();
        Self::from_y_coeffs(&shifted).swap_variables()
    }

    /// Substitutes `x = u^a`, `y = u^b` (exponents may be negative) and
    /// returns `(q, shift)` with the result equal to `u^shift * q(u)`.
    pub fn substitute_monomial(&self, a: i64, b: i64) -> (UniPoly, i64) {
        if self.is_zero() {
            return (UniPoly::zero(), 0);
        }
        let exps: Vec<(i64, &Rat)> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (a * i as i64 + b * j as i64, c))
            .collect();
        let shift = exps.iter().map(|(e, _)| *e).min().unwrap();
        let top = exps.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rat::zero(); (top - shift) as usize + 1];
        for (e, c) in exps {
            coeffs[(e - shift) as usize] += c;
        }
        (UniPoly::new(coeffs), shift)
    }

    /// Gcd in `Q[x]` of the `y`-coefficients.
    pub fn content_y(&self) -> UniPoly {
        self.to_y_coeffs()
            .iter()
            .fold(UniPoly::zero(), |acc, c| poly_gcd(&acc, c))
    }

    /// Exact quotient by a polynomial in `x` alone.
    fn div_x_poly(&self, d: &UniPoly) -> Option<Self> {
        let rows: Option<Vec<UniPoly>> = self.to_y_coeffs().iter().map(|c| c.div_exact(d)).collect();
        rows.map(|r| Self::from_y_coeffs(&r))
    }

    /// Exact quotient, if `divisor` divides `self` in `Q[x, y]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dcoef = divisor.to_y_coeffs();
        let db = dcoef.len() - 1;
        let lead = &dcoef[db];
        let mut rem = self.to_y_coeffs();
        let mut quot: Vec<UniPoly> = vec![UniPoly::zero(); rem.len().saturating_sub(db).max(1)];
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        while !rem.is_empty() {
            let dr = rem.len() - 1;
            if dr < db {
                return None;
            }
            let q = rem[dr].div_exact(lead)?;
            for (k, dk) in dcoef.iter().enumerate() {
                rem[dr - db + k] = &rem[dr - db + k] - &(&q * dk);
            }
            quot[dr - db] = q;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Some(Self::from_y_coeffs(&quot))
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient (leading = highest `y` power, then highest `x` power).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = lcm_denominators(self.terms.values());
        let scaled: Vec<Rat> = self
            .terms
            .values()
            .map(|c| c * Rat::from_integer(l.clone()))
            .collect();
        let mut g = gcd_numerators(&scaled);
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        self.scale(&Rat::new(l, g))
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (j, i))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Gcd in `Q[x, y]`, normalized; `gcd(0, 0) = 0`.
    ///
    /// Contents in `Q[x]` are handled by univariate gcd, primitive parts by
    /// a primitive pseudo-remainder sequence in `y`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let ca = self.content_y();
        let cb = other.content_y();
        let content = poly_gcd(&ca, &cb);
        let mut a = self.div_x_poly(&ca).expect("content divides");
        let mut b = other.div_x_poly(&cb).expect("content divides");
        if a.degree_y() < b.degree_y() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree_y() == Some(0) {
                // b is primitive of y-degree 0, hence a nonzero constant.
                a = Self::one();
                break;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() {
                r
            } else {
                let c = r.content_y();
                r.div_x_poly(&c).expect("content divides")
            };
        }
        (&a * &Self::from_x_poly(&content)).normalized()
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`, degrees in `y`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let bc = b.to_y_coeffs();
        let db = bc.len() - 1;
        let lead = bc[db].clone();
        let mut r = self.to_y_coeffs();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let top = r[dr].clone();
            for c in r.iter_mut() {
                *c = &*c * &lead;
            }
            for (k, bk) in bc.iter().enumerate() {
                r[dr - db + k] = &r[dr - db + k] - &(&top * bk);
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::from_y_coeffs(&r)
    }

    /// Squarefree pieces before merging equal multiplicities: the univariate
    /// contents in each variable are split off first, then Yun's algorithm
    /// runs on the remaining part in `y`. Every piece is normalized and
    /// nonconstant; the product of `piece^mult` equals `self` up to a
    /// rational unit.
    pub fn squarefree_pieces(&self) -> Result<Vec<(BiPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let cx = self.content_y();
        let rest = self.div_x_poly(&cx).expect("content divides");
        for (f, m) in cx.squarefree_decomposition()? {
            out.push((Self::from_x_poly(&f).normalized(), m));
        }
        let swapped = rest.swap_variables();
        let cy = swapped.content_y();
        let rest = swapped.div_x_poly(&cy).expect("content divides").swap_variables();
        for (f, m) in cy.squarefree_decomposition()? {
            out.push((Self::from_y_poly(&f).normalized(), m));
        }
        if !rest.is_constant() {
            out.extend(rest.yun_in_y());
        }
        Ok(out)
    }

    /// Yun's algorithm with respect to `y` for a polynomial that is primitive
    /// in `y` over `Q[x]`.
    fn yun_in_y(&self) -> Vec<(BiPoly, u32)> {
        let mut out = Vec::new();
        let dp = self.derivative_y();
        let a0 = self.gcd(&dp);
        let mut b = self.div_exact(&a0).expect("gcd divides");
        let c = dp.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative_y();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.normalized(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            let c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative_y();
            i += 1;
        }
        out
    }

    /// Squarefree decomposition with distinct multiplicities: pieces of the
    /// same multiplicity are multiplied together.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(BiPoly, u32)>> {
        let mut merged: BTreeMap<u32, BiPoly> = BTreeMap::new();
        for (f, m) in self.squarefree_pieces()? {
            let slot = merged.entry(m).or_insert_with(BiPoly::one);
            *slot = &*slot * &f;
        }
        Ok(merged.into_iter().map(|(m, f)| (f.normalized(), m)).collect())
    }

    pub fn display_with(&self, vx: &str, vy: &str) -> String {
        self.render(vx, vy, false)
    }

    /// Text accepted by the germ parser (explicit `*`).
    pub fn to_expr(&self) -> String {
        self.render("x", "y", true)
    }

    fn render(&self, vx: &str, vy: &str, explicit: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Higher y-powers first, then higher x-powers: y^2+x^3.
        let mut keys: Vec<&Exp> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.1, k.0)));
        let mut out = String::new();
        for k in keys {
            let vars = [(vy, k.1), (vx, k.0)];
            if explicit {
                super::write_term_explicit(&mut out, &self.terms[k], &vars);
            } else {
                super::write_term(&mut out, &self.terms[k], &vars);
            }
        }
        out
    }
}

/// Largest `m` with `q^m` dividing `p` exactly.
pub fn factor_order(p: &BiPoly, q: &BiPoly) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.is_constant() {
        return Err(Error::InvalidArgument("factor must be nonconstant".into()));
    }
    let mut m = 0;
    let mut cur = p.clone();
    while let Some(next) = cur.div_exact(q) {
        cur = next;
        m += 1;
    }
    Ok(m)
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x", "y"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x", "y"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn bp(t: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    fn product(pieces: &[(BiPoly, u32)]) -> BiPoly {
        pieces
            .iter()
            .fold(BiPoly::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }

    #[test]
    fn squarefree_examples() {
        // x^3 y^2 + x^5 = x^3 (y^2 + x^2)
        let f = bp(&[(1, 3, 2), (1, 5, 0)]);
        let sq = f.squarefree_decomposition().unwrap();
        assert_eq!(sq, vec![(bp(&[(1, 0, 2), (1, 2, 0)]), 1), (bp(&[(1, 1, 0)]), 3)]);
        // Oracle: expanding back reproduces the input.
        assert_eq!(product(&sq), f);

        assert_eq!(bp(&[(1, 0, 2)]).squarefree_decomposition().unwrap(), vec![(BiPoly::y(), 2)]);

        let xyxy = bp(&[(1, 2, 1), (1, 1, 2)]);
        let sq = xyxy.squarefree_decomposition().unwrap();
        assert_eq!(sq, vec![(xyxy.clone(), 1)]);
        assert_eq!(BiPoly::zero().squarefree_decomposition(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_of_mixed_powers() {
        // (y^2 + x^3)^2 (y - x) x
        let a = bp(&[(1, 0, 2), (1, 3, 0)]);
        let b = bp(&[(1, 0, 1), (-1, 1, 0)]);
        let f = &(&a.pow(2) * &b) * &BiPoly::x();
        let sq = f.squarefree_decomposition().unwrap();
        assert_eq!(sq.len(), 2);
        assert_eq!(sq[1], (a.clone(), 2));
        assert_eq!(product(&sq).normalized(), f.normalized());
    }

    #[test]
    fn gcd_and_division() {
        let a = bp(&[(1, 0, 2), (1, 3, 0)]);
        let b = bp(&[(1, 0, 1), (1, 1, 0)]);
        let c = bp(&[(1, 0, 1), (-2, 2, 1), (1, 1, 0)]);
        let g = (&a * &b).gcd(&(&a * &c));
        assert_eq!(g, a);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert!(a.gcd(&b).is_constant());
    }

    #[test]
    fn factor_order_examples() {
        // variables named w, T in the Hodge setting: use x = w, y = T.
        let w_minus_t = bp(&[(1, 1, 0), (-1, 0, 1)]);
        let w2_t2 = bp(&[(1, 2, 0), (-1, 0, 2)]);
        assert_eq!(factor_order(&w2_t2, &w_minus_t), Ok(1));
        // the second division leaves a remainder
        let once = w2_t2.div_exact(&w_minus_t).unwrap();
        assert!(once.div_exact(&w_minus_t).is_none());
        let cube = &w_minus_t.pow(3) * &BiPoly::x();
        assert_eq!(factor_order(&cube, &w_minus_t), Ok(3));
        let w5_t6 = bp(&[(1, 5, 0), (-1, 0, 6)]);
        assert_eq!(factor_order(&bp(&[(1, 1, 0), (-1, 0, 0)]), &w5_t6), Ok(0));
        assert_eq!(factor_order(&BiPoly::zero(), &w5_t6), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn charts_and_translation() {
        // y^2 + x^3 in the x-chart: x^2 (y^2 + x)
        let f = bp(&[(1, 0, 2), (1, 3, 0)]);
        assert_eq!(f.chart_x(2), bp(&[(1, 0, 2), (1, 1, 0)]));
        assert_eq!(f.chart_y(2), bp(&[(1, 0, 0), (1, 3, 1)]));
        let g = bp(&[(1, 0, 1), (1, 1, 0)]).translate_y(&int(-1));
        assert_eq!(g, bp(&[(1, 0, 1), (1, 1, 0), (-1, 0, 0)]));
        assert_eq!(f.restrict_x0(), UniPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn render_is_parser_friendly() {
        let f = bp(&[(2, 2, 1), (-1, 0, 3), (1, 0, 0)]);
        assert_eq!(f.to_expr(), "-y^3+2*y*x^2+1");
        assert_eq!(f.display_with("x", "y"), "-y^3+2yx^2+1");
    }
}
