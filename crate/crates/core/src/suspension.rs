//! Zeta functions of `f + z^2` from the curve data of `f`, and the closed
//! forms of the worked families with their identity checks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, BiPoly, Rat, RatFun1, UniPoly};
use crate::error::{Error, Result};
use crate::germ::parse_germ;
use crate::resolution::resolve_germ;
use crate::zeta::{zeta_d, zeta_top};

/// `Z_F` for `F = f + z^2`, given `Z = Z_f` and `Z2 = Z_f^(2)`:
///
/// `1/(2s+1) + s(2s+3)/(2(s+1)(2s+1)) Z(s+1/2) - 3s/(2(s+1)) Z2(s+1/2)`.
pub fn suspend_zeta(z: &RatFun1, z2: &RatFun1) -> RatFun1 {
    let half = rat(1, 2);
    let first = RatFun1::from_ints(&[1], &[1, 2]).expect("nonzero");
    // s(2s+3) / (2(s+1)(2s+1))
    let second = RatFun1::from_ints(&[0, 3, 2], &[2, 6, 4]).expect("nonzero");
    // 3s / (2(s+1))
    let third = RatFun1::from_ints(&[0, 3], &[2, 2]).expect("nonzero");
    let shifted = z.translate(&half);
    let shifted2 = z2.translate(&half);
    &(&first + &(&second * &shifted)) - &(&third * &shifted2)
}

/// Families with closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    /// `y^2 + x^k`, `k >= 2`.
    Y2xk,
    /// `x^3 y^2 + x^k`, `k >= 5`, with `Z` and `Z^(2)`.
    X3y2xk,
    /// `x^2 + y^2 + z^i` obtained by suspending `y^2 + x^i`, `i >= 2`.
    Suspension,
    /// `x^n z^2 + x^(3+n) y^2 + x^k`, `n >= 0`, `k >= n + 4`.
    Threevar,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [
        FamilyId::Y2xk,
        FamilyId::X3y2xk,
        FamilyId::Suspension,
        FamilyId::Threevar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Y2xk => "y2xk",
            FamilyId::X3y2xk => "x3y2xk",
            FamilyId::Suspension => "suspension",
            FamilyId::Threevar => "threevar",
        }
    }

    /// Smallest admissible `k` (for `Threevar`, relative to `n`).
    pub fn min_k(self, n: u64) -> u64 {
        match self {
            FamilyId::Y2xk | FamilyId::Suspension => 2,
            FamilyId::X3y2xk => 5,
            FamilyId::Threevar => n + 4,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

fn check_range(id: FamilyId, n: u64, k: u64) -> Result<()> {
    if k < id.min_k(n) {
        return Err(Error::ParamOutOfRange(format!(
            "{id} needs k >= {}, got k = {k}",
            id.min_k(n)
        )));
    }
    Ok(())
}

fn r(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

fn linear(c0: i64, c1: i64) -> UniPoly {
    UniPoly::new(vec![r(c0), r(c1)])
}

/// `Z` of `x^3 y^2 + x^k` as displayed for even `k = 2r + 4`.
fn x3y2xk_even(rr: i64) -> (RatFun1, RatFun1) {
    let num = UniPoly::new(vec![r(2 * rr + 3), r(2 * rr + 8), r(3)]);
    let lead = linear(2 * rr + 3, 4 * rr + 8);
    let den = &(&lead * &linear(1, 3)) * &linear(1, 1);
    (
        RatFun1::new(num, den).expect("nonzero"),
        RatFun1::new(UniPoly::one(), lead).expect("nonzero"),
    )
}

/// Numerator `3s^2 - rs - 2s - r - 1` and denominator of the displayed
/// odd-`k` closed form, `k = 2r + 3`, exactly as printed.
pub fn x3y2xk_odd_display(rr: i64) -> (UniPoly, UniPoly) {
    let num = UniPoly::new(vec![r(-rr - 1), r(-rr - 2), r(3)]);
    let den = &(&linear(rr + 1, 2 * rr + 3) * &linear(1, 3)) * &linear(1, 1);
    (num, den)
}

/// Closed forms of a family member: `(Z, Z^(2))` for the curve families,
/// `(Z_F, None)` for the surface families.
pub fn family_zeta(id: FamilyId, n: u64, k: u64) -> Result<(RatFun1, Option<RatFun1>)> {
    check_range(id, n, k)?;
    let ki = k as i64;
    match id {
        FamilyId::X3y2xk => {
            if k.is_multiple_of(2) {
                let (z, z2) = x3y2xk_even((ki - 4) / 2);
                Ok((z, Some(z2)))
            } else {
                // The printed odd numerator has the opposite overall sign;
                // with it Z(0) would be -1 instead of 1 and the suspended
                // closed form below would not follow.
                let (num, den) = x3y2xk_odd_display((ki - 3) / 2);
                Ok((RatFun1::new(-&num, den)?, Some(RatFun1::zero())))
            }
        }
        FamilyId::Suspension | FamilyId::Y2xk => {
            let curve = y2xk_engine(k)?;
            if id == FamilyId::Y2xk {
                return Ok(curve);
            }
            Ok((suspend_zeta(&curve.0, curve.1.as_ref().expect("curve has Z2")), None))
        }
        FamilyId::Threevar => {
            let ni = n as i64;
            let (num, den) = threevar_parts(ni, ki);
            Ok((RatFun1::new(num, den)?, None))
        }
    }
}

/// `Z_{F_k}` for `F_k = x^3 y^2 + x^k + z^2`.
pub fn suspended_x3y2xk(k: u64) -> Result<RatFun1> {
    check_range(FamilyId::X3y2xk, 0, k)?;
    let ki = k as i64;
    let num = UniPoly::new(vec![r(10 * ki - 5), r(15 * ki - 5), r(6 * ki - 6)]);
    let den = &(&linear(5, 6) * &linear(1, 1)) * &linear(2 * ki - 1, 2 * ki);
    RatFun1::new(num, den)
}

fn y2xk_engine(k: u64) -> Result<(RatFun1, Option<RatFun1>)> {
    let g = resolve_germ(&parse_germ(&format!("y^2+x^{k}"))?)?;
    Ok((zeta_top(&g), Some(zeta_d(&g, 2))))
}

/// Numerator coefficients (ascending in `s`) of the three-variable family
/// as polynomials in `(n, k)`, stored as `BiPoly` in `(x, y) = (n, k)`.
fn threevar_numerator_symbolic() -> Vec<BiPoly> {
    let t = BiPoly::from_int_terms;
    vec![
        // -10n + 10k - 5
        t(&[(-10, 1, 0), (10, 0, 1), (-5, 0, 0)]),
        // -4n^2 + 4kn - 7n + 15k - 5
        t(&[(-4, 2, 0), (4, 1, 1), (-7, 1, 0), (15, 0, 1), (-5, 0, 0)]),
        // n^2 + 3kn - 4n + 6k - 6
        t(&[(1, 2, 0), (3, 1, 1), (-4, 1, 0), (6, 0, 1), (-6, 0, 0)]),
        // -2n^2 - 6n
        t(&[(-2, 2, 0), (-6, 1, 0)]),
    ]
}

fn threevar_parts(n: i64, k: i64) -> (UniPoly, UniPoly) {
    let (nr, kr) = (r(n), r(k));
    let num = UniPoly::new(
        threevar_numerator_symbolic()
            .iter()
            .map(|c| c.eval(&nr, &kr))
            .collect(),
    );
    let den = &(&(&linear(5, 6 + 2 * n) * &linear(1, 1)) * &linear(2 * k - 2 * n - 1, 2 * k))
        * &linear(1, n);
    (num, den)
}

/// `(k-1-2n)(k-n-3)(2k-2n-1)(2n^2-2kn+n+2k) / (4k^3)`.
pub fn threevar_substitution_value(n: i64, k: i64) -> Rat {
    let p = (k - 1 - 2 * n) * (k - n - 3) * (2 * k - 2 * n - 1) * (2 * n * n - 2 * k * n + n + 2 * k);
    Rat::new(BigInt::from(p), BigInt::from(4 * k * k * k))
}

/// Exact value of the three-variable numerator at `s = -(2k-2n-1)/(2k)`.
pub fn threevar_numerator_at_designated(n: i64, k: i64) -> Rat {
    let (num, _) = threevar_parts(n, k);
    num.eval(&Rat::new(BigInt::from(-(2 * k - 2 * n - 1)), BigInt::from(2 * k)))
}

/// Checks, as a polynomial identity in `(n, k)`, that
/// `8k^3 * numerator(-(2k-2n-1)/(2k)) = 2 (k-1-2n)(k-n-3)(2k-2n-1)(2n^2-2kn+n+2k)`.
pub fn threevar_identity_holds_symbolically() -> bool {
    let t = BiPoly::from_int_terms;
    let two_k = t(&[(2, 0, 1)]);
    // minus the numerator of the designated s value
    let top = t(&[(-2, 0, 1), (2, 1, 0), (1, 0, 0)]);
    let coeffs = threevar_numerator_symbolic();
    let mut lhs = BiPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        let term = &(c * &top.pow(i as u32)) * &two_k.pow(3 - i as u32);
        lhs = &lhs + &term;
    }
    let rhs = [
        t(&[(1, 0, 1), (-1, 0, 0), (-2, 1, 0)]),
        t(&[(1, 0, 1), (-1, 1, 0), (-3, 0, 0)]),
        t(&[(2, 0, 1), (-2, 1, 0), (-1, 0, 0)]),
        t(&[(2, 2, 0), (-2, 1, 1), (1, 1, 0), (2, 0, 1)]),
    ]
    .iter()
    .fold(BiPoly::constant(r(2)), |acc, f| &acc * f);
    lhs == rhs
}

/// Checks `4k^2 * N_F(-(2k-1)/(2k)) = 2 (k-1)(k-3)(2k-1)` as a polynomial
/// identity in `k`.
pub fn suspended_identity_holds_symbolically() -> bool {
    // coefficients of N_F in s as polynomials in k
    let c = [linear(-5, 10), linear(-5, 15), linear(-6, 6)];
    let top = linear(1, -2);
    let two_k = linear(0, 2);
    let mut lhs = UniPoly::zero();
    for (i, ci) in c.iter().enumerate() {
        lhs = &lhs + &(&(ci * &top.pow(i as u32)) * &two_k.pow(2 - i as u32));
    }
    let rhs = &(&(&UniPoly::constant(r(2)) * &linear(-1, 1)) * &linear(-3, 1)) * &linear(-1, 2);
    lhs == rhs
}

/// `(k-1)(k-3)(2k-1) / (2k^2)`.
pub fn suspended_substitution_value(k: i64) -> Rat {
    Rat::new(
        BigInt::from((k - 1) * (k - 3) * (2 * k - 1)),
        BigInt::from(2 * k * k),
    )
}

/// One record of a family verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCheck {
    pub family: FamilyId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub k: u64,
    pub checks: Vec<NamedCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
}

impl NamedCheck {
    pub fn compare<T: PartialEq + fmt::Display>(name: &str, expected: &T, computed: &T) -> Self {
        let passed = expected == computed;
        NamedCheck {
            name: name.to_string(),
            passed,
            expected: (!passed).then(|| expected.to_string()),
            computed: (!passed).then(|| computed.to_string()),
        }
    }

    pub fn flag(name: &str, passed: bool) -> Self {
        NamedCheck {
            name: name.to_string(),
            passed,
            expected: None,
            computed: None,
        }
    }
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<Error> {
        self.checks.iter().find(|c| !c.passed).map(|c| Error::Mismatch {
            context: format!("{} k={} {}", self.family, self.k, c.name),
            expected: c.expected.clone().unwrap_or_else(|| "true".into()),
            computed: c.computed.clone().unwrap_or_else(|| "false".into()),
        })
    }
}

/// Runs the identity checks for one member of the `x^3 y^2 + x^k` family.
pub fn verify_x3y2xk(k: u64) -> Result<FamilyCheck> {
    let (z_closed, z2_closed) = family_zeta(FamilyId::X3y2xk, 0, k)?;
    let z2_closed = z2_closed.expect("curve family");
    let g = resolve_germ(&parse_germ(&format!("x^3*y^2+x^{k}"))?)?;
    let z = zeta_top(&g);
    let z2 = zeta_d(&g, 2);
    let suspended = suspend_zeta(&z, &z2);
    let f_closed = suspended_x3y2xk(k)?;
    let ki = k as i64;
    let s0 = Rat::new(BigInt::from(-(2 * ki - 1)), BigInt::from(2 * ki));
    let displayed_num = UniPoly::new(vec![r(10 * ki - 5), r(15 * ki - 5), r(6 * ki - 6)]);
    let displayed_value = displayed_num.eval(&s0);
    let mut checks = vec![
        NamedCheck::compare("zeta", &z_closed, &z),
        NamedCheck::compare("zeta_d2", &z2_closed, &z2),
        NamedCheck::compare("suspended", &f_closed, &suspended),
        NamedCheck::compare("substitution", &suspended_substitution_value(ki), &displayed_value),
        NamedCheck::flag("pole", !displayed_value.is_zero() && f_closed.eval(&s0).is_none()),
    ];
    if k % 2 == 1 {
        let (num, den) = x3y2xk_odd_display((ki - 3) / 2);
        let printed = RatFun1::new(num, den)?;
        checks.push(NamedCheck::compare("printed_odd_form_negated", &printed, &(-&z)));
    }
    Ok(FamilyCheck {
        family: FamilyId::X3y2xk,
        n: None,
        k,
        checks,
    })
}

/// Checks one `(n, k)` of the three-variable family: the substitution
/// identity and that the designated value is a pole exactly when the
/// product does not vanish.
pub fn verify_threevar(n: u64, k: u64) -> Result<FamilyCheck> {
    let (z, _) = family_zeta(FamilyId::Threevar, n, k)?;
    let (ni, ki) = (n as i64, k as i64);
    let value = threevar_numerator_at_designated(ni, ki);
    let expected = threevar_substitution_value(ni, ki);
    let s0 = Rat::new(BigInt::from(-(2 * ki - 2 * ni - 1)), BigInt::from(2 * ki));
    let vanishes = value.is_zero();
    let checks = vec![
        NamedCheck::compare("substitution", &expected, &value),
        NamedCheck::flag("vanishes_iff_k_eq_1_plus_2n", vanishes == (ki == 1 + 2 * ni)),
        NamedCheck::flag("pole_iff_nonvanishing", z.eval(&s0).is_none() == !vanishes),
    ];
    Ok(FamilyCheck {
        family: FamilyId::Threevar,
        n: Some(n),
        k,
        checks,
    })
}

/// Checks the resolution of `y^2 + x^k`: the exceptional curves form a
/// chain, the last one carries the data `(4r+2, 2r+3)` for `k = 2r+1`
/// resp. `(2r, r+1)` for `k = 2r`, and the poles below `-1/2` are `-1`
/// and `-1/2 - 1/k`.
pub fn verify_y2xk(k: u64) -> Result<FamilyCheck> {
    check_range(FamilyId::Y2xk, 0, k)?;
    let g = resolve_germ(&parse_germ(&format!("y^2+x^{k}"))?)?;
    let r_ = k / 2;
    let (count, data, branches_on_last) = if k % 2 == 1 {
        (r_ + 2, (4 * r_ + 2, 2 * r_ + 3), 1)
    } else {
        (r_, (2 * r_, r_ + 1), 2)
    };
    let last = g.exceptional(count as usize).map(|e| (e.n, e.nu));
    let chain = g.edges.len() + 1 == g.exceptionals.len()
        && (1..=g.exceptionals.len()).all(|i| g.neighbours(i).len() <= 2);
    let on_last: u64 = g.branches_on(count as usize).map(|b| b.orbit_size).sum();
    let half = Rat::new(BigInt::from(-1), BigInt::from(2));
    let below: Vec<String> = crate::zeta::pole_set(&zeta_top(&g))?
        .into_iter()
        .filter(|p| p < &half)
        .map(|p| p.to_string())
        .collect();
    let mut expected_below = vec![&half - Rat::new(BigInt::from(1), BigInt::from(k))];
    if k > 2 {
        expected_below.insert(0, r(-1));
    }
    let expected_below: Vec<String> = expected_below.iter().map(|p| p.to_string()).collect();
    let fmt_data = |d: Option<(u64, u64)>| match d {
        Some((n, nu)) => format!("E{count}({n},{nu})"),
        None => "none".into(),
    };
    Ok(FamilyCheck {
        family: FamilyId::Y2xk,
        n: None,
        k,
        checks: vec![
            NamedCheck::compare("exceptional_count", &(count as usize), &g.exceptionals.len()),
            NamedCheck::compare("last_vertex", &fmt_data(Some(data)), &fmt_data(last)),
            NamedCheck::flag("chain", chain),
            NamedCheck::compare("branches_on_last", &branches_on_last, &on_last),
            NamedCheck::compare("poles_below_half", &expected_below.join(", "), &below.join(", ")),
        ],
    })
}

/// Checks that suspending `y^2 + x^i` gives poles exactly `{-1, -1 - 1/i}`.
pub fn verify_suspension(i: u64) -> Result<FamilyCheck> {
    let (zf, _) = family_zeta(FamilyId::Suspension, 0, i)?;
    let poles = crate::zeta::pole_set(&zf)?;
    let expected: std::collections::BTreeSet<Rat> = [
        r(-1),
        r(-1) - Rat::new(BigInt::from(1), BigInt::from(i)),
    ]
    .into_iter()
    .collect();
    let fmt_set = |s: &std::collections::BTreeSet<Rat>| {
        s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    };
    Ok(FamilyCheck {
        family: FamilyId::Suspension,
        n: None,
        k: i,
        checks: vec![NamedCheck::compare("poles", &fmt_set(&expected), &fmt_set(&poles))],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn rf(num: &[i64], den: &[i64]) -> RatFun1 {
        RatFun1::from_ints(num, den).unwrap()
    }

    #[test]
    fn y2xk_chains() {
        for k in 2..=16 {
            let check = verify_y2xk(k).unwrap();
            assert!(check.passed(), "{:?}", check.first_failure());
        }
    }

    #[test]
    fn suspend_examples() {
        assert_eq!(suspend_zeta(&rf(&[1], &[1, 1]), &RatFun1::zero()), rf(&[1], &[1, 1]));
        assert_eq!(
            suspend_zeta(&rf(&[1], &[1, 2, 1]), &RatFun1::zero()),
            rf(&[3, 1], &[3, 5, 2])
        );
    }

    #[test]
    fn closed_forms() {
        let (z, z2) = family_zeta(FamilyId::X3y2xk, 0, 5).unwrap();
        // -(3s^2 - 3s - 2) / ((5s+2)(3s+1)(s+1))
        assert_eq!(z, rf(&[2, 3, -3], &[2, 13, 26, 15]));
        assert!(z2.unwrap().is_zero());
        let (_, z2) = family_zeta(FamilyId::X3y2xk, 0, 8).unwrap();
        // r = 2: 1/(8s + 8s + 4 + 3)
        assert_eq!(z2.unwrap(), rf(&[1], &[7, 16]));
        assert_eq!(
            family_zeta(FamilyId::X3y2xk, 0, 4),
            Err(Error::ParamOutOfRange("x3y2xk needs k >= 5, got k = 4".into()))
        );
        for (n, k) in [(0, 4), (1, 5), (2, 9)] {
            let (z, _) = family_zeta(FamilyId::Threevar, n, k).unwrap();
            assert_eq!(z.eval(&int(0)), Some(int(1)));
        }
    }

    #[test]
    fn x3y2xk_identities() {
        for k in 5..=9 {
            let report = verify_x3y2xk(k).unwrap();
            assert!(report.passed(), "{report:?}");
        }
        assert_eq!(suspended_substitution_value(5), rat(36, 25));
        assert!(suspended_identity_holds_symbolically());
    }

    #[test]
    fn threevar_identities() {
        assert!(threevar_identity_holds_symbolically());
        assert_eq!(threevar_substitution_value(0, 4), rat(168, 256));
        assert_eq!(threevar_numerator_at_designated(0, 4), rat(168, 256));
        assert!(threevar_substitution_value(3, 7).is_zero());
        for n in 0..=3 {
            for k in n + 4..=n + 12 {
                assert!(verify_threevar(n, k).unwrap().passed(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn suspension_poles() {
        for i in 2..=6 {
            assert!(verify_suspension(i).unwrap().passed(), "i={i}");
        }
        let (z, _) = family_zeta(FamilyId::Suspension, 0, 2).unwrap();
        assert_eq!(z, rf(&[3, 1], &[3, 5, 2]));
        assert_eq!(z.eval(&int(0)), Some(int(1)));
    }
}
