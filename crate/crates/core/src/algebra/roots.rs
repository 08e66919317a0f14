//! Exact rational roots of univariate polynomials.
//!
//! Roots are located by Sturm-sequence bisection with rational endpoints.
//! Once an isolating interval is narrower than `1/A^2` (with `A` the
//! leading coefficient of the integer primitive form), the only rational
//! root it can hold is the simplest rational in it, which is then tested
//! exactly. No integer factorization is needed.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rat;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Rational roots with multiplicities plus the rootless cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    /// Sorted increasingly.
    pub roots: Vec<(Rat, u32)>,
    /// Monic factor without rational roots left after removing the roots.
    pub remainder: UniPoly,
    pub remainder_degree: usize,
    pub remainder_squarefree: bool,
}

pub fn rational_roots(p: &UniPoly) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut remainder = UniPoly::one();
    for (g, m) in p.squarefree_decomposition()? {
        let (found, rest) = squarefree_rational_roots(&g);
        roots.extend(found.into_iter().map(|r| (r, m)));
        remainder = &remainder * &rest.pow(m);
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let remainder = remainder.monic();
    Ok(RootReport {
        remainder_degree: remainder.degree().unwrap_or(0),
        remainder_squarefree: remainder.is_squarefree(),
        roots,
        remainder,
    })
}

/// Rational roots of a squarefree polynomial and the deflated cofactor.
fn squarefree_rational_roots(g: &UniPoly) -> (Vec<Rat>, UniPoly) {
    let mut f = g.monic();
    let mut found = Vec::new();
    'restart: loop {
        if f.is_constant() {
            return (found, f);
        }
        if f.coeff(0).is_zero() {
            found.push(Rat::zero());
            f = f.div_exact(&UniPoly::x()).expect("zero root");
            continue;
        }
        let sturm = sturm_sequence(&f);
        let (_, ints) = f.integer_primitive();
        let lead = Rat::from_integer(ints.last().unwrap().abs());
        let resolution = (&lead * &lead * Rat::from_integer(BigInt::from(2))).recip();
        let bound = cauchy_bound(&f);
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = variations(&sturm, &lo) - variations(&sturm, &hi);
            if count == 0 {
                continue;
            }
            if f.eval(&hi).is_zero() {
                record(&mut found, &mut f, hi);
                continue 'restart;
            }
            let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
            if f.eval(&mid).is_zero() {
                record(&mut found, &mut f, mid);
                continue 'restart;
            }
            if count > 1 {
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
                continue;
            }
            // Exactly one simple root in (lo, hi): refine by sign changes.
            let (mut a, mut b) = (lo, hi);
            let sa = f.eval(&a).is_positive();
            while &b - &a >= resolution {
                let m = (&a + &b) / Rat::from_integer(BigInt::from(2));
                let fm = f.eval(&m);
                if fm.is_zero() {
                    record(&mut found, &mut f, m);
                    continue 'restart;
                }
                if fm.is_positive() == sa {
                    a = m;
                } else {
                    b = m;
                }
            }
            let candidate = simplest_between(&a, &b);
            if f.eval(&candidate).is_zero() {
                record(&mut found, &mut f, candidate);
                continue 'restart;
            }
        }
        return (found, f);
    }
}

fn record(found: &mut Vec<Rat>, f: &mut UniPoly, root: Rat) {
    *f = f.div_exact(&UniPoly::linear_root(&root)).expect("exact root");
    found.push(root);
}

fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            return seq;
        }
        if seq[n - 1].is_constant() {
            return seq;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        seq.push(-&r);
    }
}

fn variations(seq: &[UniPoly], at: &Rat) -> i64 {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = p.eval(at);
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if last.is_some_and(|l| l != positive) {
            count += 1;
        }
        last = Some(positive);
    }
    count
}

/// `1 + max |a_i / a_n|`, a strict bound on the absolute value of roots.
fn cauchy_bound(f: &UniPoly) -> Rat {
    let lead = f.lead();
    let n = f.degree().unwrap();
    let max = (0..n)
        .map(|i| (f.coeff(i) / &lead).abs())
        .max()
        .unwrap_or_else(Rat::zero);
    max + Rat::one()
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rat::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn examples() {
        // y^2 (y+1)
        let r = rational_roots(&p(&[0, 0, 1, 1])).unwrap();
        assert_eq!(r.roots, vec![(int(-1), 1), (int(0), 2)]);
        assert_eq!(r.remainder_degree, 0);

        // 1 + y^2: discriminant -4 != 0, so the cofactor is squarefree
        let r = rational_roots(&p(&[1, 0, 1])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.remainder_degree, 2);
        assert!(r.remainder_squarefree);

        // (2y - 1)^3
        let r = rational_roots(&p(&[-1, 2]).pow(3)).unwrap();
        assert_eq!(r.roots, vec![(rat(1, 2), 3)]);

        assert_eq!(rational_roots(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn close_roots_and_irrational_neighbours() {
        // (7y - 3)(7y - 4)(y^2 - 2)(1000y - 999)
        let f = &(&(&p(&[-3, 7]) * &p(&[-4, 7])) * &p(&[-2, 0, 1])) * &p(&[-999, 1000]);
        let r = rational_roots(&f).unwrap();
        assert_eq!(r.roots, vec![(rat(3, 7), 1), (rat(4, 7), 1), (rat(999, 1000), 1)]);
        assert_eq!(r.remainder, p(&[-2, 0, 1]));
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-7, 10), &rat(-6, 10)), rat(-2, 3));
        assert_eq!(simplest_between(&rat(1, 2), &rat(1, 2)), rat(1, 2));
    }
}
