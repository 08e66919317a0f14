//! Exact arithmetic: rationals, sparse polynomials in one and two
//! variables, reduced rational functions and root/factor utilities.

pub mod bipoly;
pub mod ratfun;
pub mod rational;
pub mod roots;
pub mod unipoly;

pub use bipoly::{factor_order, BiPoly};
pub use ratfun::RatFun1;
pub use rational::{int, rat, Rat};
pub use roots::{rational_roots, RootReport};
pub use unipoly::{poly_gcd, UniPoly};

use num_traits::{One, Signed};

/// Appends `coeff * var1^e1 * ...` to `out` using `+`/`-` joiners.
///
/// Multiplication is written as juxtaposition (`4s`, `x^2y`).
pub(crate) fn write_term(out: &mut String, coeff: &Rat, vars: &[(&str, u32)]) {
    write_term_with(out, coeff, vars, "");
}

/// Same as [`write_term`] but with an explicit multiplication sign, so the
/// output is accepted by the germ parser.
pub(crate) fn write_term_explicit(out: &mut String, coeff: &Rat, vars: &[(&str, u32)]) {
    write_term_with(out, coeff, vars, "*");
}

fn write_term_with(out: &mut String, coeff: &Rat, vars: &[(&str, u32)], mul: &str) {
    let negative = coeff.is_negative();
    if !out.is_empty() {
        out.push(if negative { '-' } else { '+' });
    } else if negative {
        out.push('-');
    }
    let abs = coeff.abs();
    let mono: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    let joiner = if mul.is_empty() { "" } else { mul };
    if mono.is_empty() {
        out.push_str(&rational::fmt_rat(&abs));
        return;
    }
    if !abs.is_one() {
        out.push_str(&rational::fmt_rat(&abs));
        // A fractional coefficient always gets a separator so that `1/2s`
        // is never confused with `1/(2s)`.
        if !mul.is_empty() || !abs.is_integer() {
            out.push('*');
        }
    }
    out.push_str(&mono.join(joiner));
}
