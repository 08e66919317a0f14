//! Reduced univariate rational functions in `s`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rat;
use super::roots::rational_roots;
use super::unipoly::{poly_gcd, UniPoly};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
///
/// Because the form is canonical, structural equality is equality of
/// rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun1 {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun1 {
    pub fn zero() -> Self {
        Self {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self {
            num: UniPoly::constant(c),
            den: UniPoly::one(),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// `1 / (a + b s)`.
    pub fn reciprocal_linear(a: &Rat, b: &Rat) -> Self {
        Self::new(UniPoly::one(), UniPoly::new(vec![a.clone(), b.clone()]))
            .expect("nonzero linear denominator")
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.lead();
        Ok(Self {
            num: num.scale(&lead.recip()),
            den: den.monic(),
        })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(UniPoly::from_ints(num), UniPoly::from_ints(den))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `s`, or `None` at a pole.
    pub fn eval(&self, s: &Rat) -> Option<Rat> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(s) / d)
    }

    /// `f(s + c)`.
    pub fn translate(&self, c: &Rat) -> Self {
        Self::new(self.num.translate(c), self.den.translate(c)).expect("translation keeps den nonzero")
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Rational poles with their orders, from the reduced denominator.
    pub fn pole_orders(&self) -> Result<Vec<(Rat, u32)>> {
        let report = rational_roots(&self.den)?;
        if report.remainder_degree > 0 {
            return Err(Error::NonRationalDenominatorRoot);
        }
        Ok(report.roots)
    }

    /// First `count` coefficients `c_{-k}, c_{-k+1}, ...` of the Laurent
    /// expansion at `s0`, where `k` is the pole order there (0 if regular).
    ///
    /// Computed by dividing out `(s - s0)` exactly and expanding the
    /// remaining regular quotient as a power series.
    pub fn laurent_at(&self, s0: &Rat, count: usize) -> (u32, Vec<Rat>) {
        let lin = UniPoly::linear_root(s0);
        let mut den = self.den.clone();
        let mut order = 0u32;
        while let Some(q) = den.div_exact(&lin) {
            den = q;
            order += 1;
        }
        // Expand num(t + s0) / den(t + s0) as a series in t.
        let n = self.num.translate(s0);
        let d = den.translate(s0);
        let d0 = d.coeff(0);
        let mut series: Vec<Rat> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = n.coeff(k);
            for (j, sj) in series.iter().enumerate() {
                acc -= d.coeff(k - j) * sj;
            }
            series.push(acc / &d0);
        }
        (order, series)
    }

    /// Coefficient of `(s - s0)^(-1)`; zero where the function is regular.
    pub fn residue(&self, s0: &Rat) -> Rat {
        let (order, _) = self.laurent_at(s0, 0);
        if order == 0 {
            return Rat::zero();
        }
        let (_, coeffs) = self.laurent_at(s0, order as usize);
        coeffs[order as usize - 1].clone()
    }

    /// Coefficient of `(s - s0)^(-order)`.
    pub fn leading_laurent(&self, s0: &Rat) -> Rat {
        let (_, coeffs) = self.laurent_at(s0, 1);
        coeffs[0].clone()
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.display_with(var);
        }
        format!("({})/({})", self.num.display_with(var), self.den.display_with(var))
    }
}

impl fmt::Debug for RatFun1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("s"))
    }
}

impl fmt::Display for RatFun1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("s"))
    }
}

impl Add for &RatFun1 {
    type Output = RatFun1;
    fn add(self, rhs: &RatFun1) -> RatFun1 {
        if self.den == rhs.den {
            return RatFun1::new(&self.num + &rhs.num, self.den.clone()).expect("monic den");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun1::new(num, &self.den * &rhs.den).expect("monic den")
    }
}

impl Sub for &RatFun1 {
    type Output = RatFun1;
    fn sub(self, rhs: &RatFun1) -> RatFun1 {
        self + &(-rhs)
    }
}

impl Mul for &RatFun1 {
    type Output = RatFun1;
    fn mul(self, rhs: &RatFun1) -> RatFun1 {
        RatFun1::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("monic den")
    }
}

/// Panics when dividing by zero.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &RatFun1 {
    type Output = RatFun1;
    fn div(self, rhs: &RatFun1) -> RatFun1 {
        self * &rhs.recip().expect("division by the zero rational function")
    }
}

impl Neg for &RatFun1 {
    type Output = RatFun1;
    fn neg(self) -> RatFun1 {
        RatFun1 {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFun1 {
    type Output = RatFun1;
    fn add(self, rhs: RatFun1) -> RatFun1 {
        &self + &rhs
    }
}

impl Sub for RatFun1 {
    type Output = RatFun1;
    fn sub(self, rhs: RatFun1) -> RatFun1 {
        &self - &rhs
    }
}

impl Mul for RatFun1 {
    type Output = RatFun1;
    fn mul(self, rhs: RatFun1) -> RatFun1 {
        &self * &rhs
    }
}

impl Zero for RatFun1 {
    fn zero() -> Self {
        RatFun1::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn reduce_examples() {
        // (24s+30) / (6 (1+s)(5+6s)) -> (4s+5)/((s+1)(6s+5))
        let den = &(&UniPoly::from_ints(&[6]) * &UniPoly::from_ints(&[1, 1])) * &UniPoly::from_ints(&[5, 6]);
        let z = RatFun1::new(UniPoly::from_ints(&[30, 24]), den).unwrap();
        let expected_den = &UniPoly::from_ints(&[1, 1]) * &UniPoly::from_ints(&[5, 6]);
        // cross-multiplication: num * expected_den == expected_num * den
        assert_eq!(
            &z.numer().clone() * &expected_den,
            &UniPoly::from_ints(&[5, 4]) * z.denom()
        );
        assert_eq!(z.denom(), &UniPoly::new(vec![rat(5, 6), rat(11, 6), int(1)]));

        let zero = RatFun1::new(UniPoly::zero(), UniPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(zero.denom(), &UniPoly::one());
        assert!(zero.is_zero());

        let sq = RatFun1::from_ints(&[1, 2, 1], &[1, 1]).unwrap();
        assert_eq!(sq, RatFun1::from_poly(UniPoly::from_ints(&[1, 1])));

        assert_eq!(RatFun1::from_ints(&[1], &[]), Err(Error::ZeroDenominator));
    }

    #[test]
    fn residues_and_orders() {
        let cusp = RatFun1::from_ints(&[5, 4], &[5, 11, 6]).unwrap();
        assert_eq!(cusp.pole_orders().unwrap(), vec![(int(-1), 1), (rat(-5, 6), 1)]);
        assert_eq!(cusp.residue(&rat(-5, 6)), rat(5, 3));
        assert_eq!(cusp.residue(&int(0)), int(0));

        let double = RatFun1::from_ints(&[1], &[1, 2, 1]).unwrap();
        assert_eq!(double.pole_orders().unwrap(), vec![(int(-1), 2)]);
        assert_eq!(double.leading_laurent(&int(-1)), int(1));
        assert_eq!(double.residue(&int(-1)), int(0));

        let irr = RatFun1::from_ints(&[1], &[1, 0, 1]).unwrap();
        assert_eq!(irr.pole_orders(), Err(Error::NonRationalDenominatorRoot));
    }
}
