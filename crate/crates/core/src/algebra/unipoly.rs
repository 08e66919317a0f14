//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{gcd_numerators, lcm_denominators, Rat};
use crate::error::{Error, Result};

/// Polynomial in one variable with coefficients in ascending degree.
///
/// Trailing zero coefficients are never stored, so the zero polynomial is
/// the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    /// `s - root`.
    pub fn linear_root(root: &Rat) -> Self {
        Self::new(vec![-root.clone(), Rat::one()])
    }

    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Exponent of the lowest nonzero term.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `s^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.lead().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// `p(s + c)`.
    pub fn translate(&self, c: &Rat) -> Self {
        // Horner in the shifted variable.
        let lin = Self::new(vec![c.clone(), Rat::one()]);
        let mut acc = Self::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(coeff.clone());
        }
        acc
    }

    /// `p(q(s))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(coeff.clone());
        }
        acc
    }

    /// Integer primitive form: `self = scale * poly(ints)` with coprime
    /// integer coefficients and positive leading coefficient.
    pub fn integer_primitive(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let l = lcm_denominators(&self.coeffs);
        let scaled: Vec<Rat> = self
            .coeffs
            .iter()
            .map(|c| c * Rat::from_integer(l.clone()))
            .collect();
        let mut g = gcd_numerators(&scaled);
        if self.lead().is_negative() {
            g = -g;
        }
        let ints: Vec<BigInt> = scaled.iter().map(|c| c.numer() / &g).collect();
        (Rat::new(g, l), ints)
    }

    /// Yun's squarefree decomposition: monic factors with distinct
    /// multiplicities whose product times `self.lead()` is `self`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let p = self.monic();
        let dp = p.derivative();
        let a0 = poly_gcd(&p, &dp);
        let mut b = p.div_exact(&a0).expect("gcd divides");
        let mut c = dp.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = poly_gcd(&b, &d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && poly_gcd(self, &self.derivative()).is_constant()
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            super::write_term(&mut out, c, &[(var, i as u32)]);
        }
        out
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("s"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("s"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}
