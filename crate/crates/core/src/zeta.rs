//! Topological zeta functions assembled from a resolution graph, and the
//! pole, residue and threshold data derived from them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{half_minus_reciprocal_index, serde_rat, serde_rat_vec};
use crate::algebra::{RatFun1, Rat};
use crate::error::{Error, Result};
use crate::resolution::{Component, ResolutionGraph};

fn ratio(nu: u64, n: u64) -> Rat {
    Rat::new(BigInt::from(nu), BigInt::from(n))
}

fn factor(c: &Component) -> RatFun1 {
    RatFun1::reciprocal_linear(&Rat::from_integer(c.nu.into()), &Rat::from_integer(c.n.into()))
}

/// Sum over strata of `chi * prod 1/(nu + s N)`, restricted to strata whose
/// members all have `d | N`.
pub fn zeta_d(g: &ResolutionGraph, d: u64) -> RatFun1 {
    assert!(d >= 1, "d must be positive");
    let mut total = RatFun1::zero();
    for stratum in g.strata() {
        if !stratum.members.iter().all(|c| c.n % d == 0) {
            continue;
        }
        let chi = stratum.euler();
        if chi == 0 {
            continue;
        }
        let term = stratum
            .members
            .iter()
            .fold(RatFun1::constant(Rat::from_integer(chi.into())), |acc, c| {
                &acc * &factor(c)
            });
        total = &total + &term;
    }
    total
}

pub fn zeta_top(g: &ResolutionGraph) -> RatFun1 {
    zeta_d(g, 1)
}

/// Every component with its `(N, nu)`: exceptionals first, then branches.
fn components(g: &ResolutionGraph) -> Vec<Component> {
    let mut out: Vec<Component> = g
        .exceptionals
        .iter()
        .map(|e| Component { n: e.n, nu: e.nu })
        .collect();
    out.extend(g.branches.iter().map(|b| Component { n: b.n, nu: 1 }));
    if let Some(origin) = &g.nc_at_origin_case {
        out.extend(origin.branches.iter().map(|&n| Component { n, nu: 1 }));
    }
    out
}

/// Log canonical threshold: the minimum of `nu/N` over all components.
pub fn lct(g: &ResolutionGraph) -> Rat {
    components(g)
        .iter()
        .map(|c| ratio(c.nu, c.n))
        .min()
        .expect("a germ has at least one branch")
}

/// `{-nu/N}` over all components.
pub fn candidate_poles(g: &ResolutionGraph) -> BTreeSet<Rat> {
    components(g).iter().map(|c| -ratio(c.nu, c.n)).collect()
}

/// Poles predicted from the graph shape: exceptional curves meeting the
/// rest at least three times, and every branch.
pub fn predicted_poles(g: &ResolutionGraph) -> BTreeSet<Rat> {
    let mut out: BTreeSet<Rat> = g
        .exceptionals
        .iter()
        .filter(|e| g.valence(e.id) >= 3)
        .map(|e| -ratio(e.nu, e.n))
        .collect();
    out.extend(g.branches.iter().map(|b| -ratio(1, b.n)));
    if let Some(origin) = &g.nc_at_origin_case {
        out.extend(origin.branches.iter().map(|&n| -ratio(1, n)));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pole {
    #[serde(with = "serde_rat")]
    pub location: Rat,
    pub order: u32,
    /// Residue for a simple pole, otherwise the coefficient of
    /// `(s - s0)^(-order)`.
    #[serde(with = "serde_rat")]
    pub coefficient: Rat,
}

/// Rational poles of a reduced rational function with their orders and
/// leading Laurent coefficients.
pub fn poles(z: &RatFun1) -> Result<Vec<Pole>> {
    Ok(z.pole_orders()?
        .into_iter()
        .map(|(location, order)| Pole {
            coefficient: z.leading_laurent(&location),
            location,
            order,
        })
        .collect())
}

pub fn pole_set(z: &RatFun1) -> Result<BTreeSet<Rat>> {
    Ok(z.pole_orders()?.into_iter().map(|(r, _)| r).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaReport {
    pub zeta: RatFun1,
    pub poles: Vec<Pole>,
    pub candidate_poles: Vec<Rat>,
    pub lct: Rat,
}

pub fn zeta_report(g: &ResolutionGraph, d: u64) -> Result<ZetaReport> {
    let zeta = zeta_d(g, d);
    Ok(ZetaReport {
        poles: poles(&zeta)?,
        candidate_poles: candidate_poles(g).into_iter().collect(),
        lct: lct(g),
        zeta,
    })
}

/// A component meeting a given exceptional curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Neighbour {
    Exceptional { id: usize },
    /// Index into `ResolutionGraph::branches`.
    Branch { index: usize, orbit_size: u64 },
}

impl Neighbour {
    /// Number of intersection points this neighbour accounts for.
    pub fn multiplicity(&self) -> u64 {
        match self {
            Neighbour::Exceptional { .. } => 1,
            Neighbour::Branch { orbit_size, .. } => *orbit_size,
        }
    }
}

fn neighbour_data(g: &ResolutionGraph, i: usize) -> Vec<(Neighbour, Component)> {
    let mut out = Vec::new();
    for j in g.neighbours(i) {
        let e = g.exceptional(j).expect("neighbour exists");
        out.push((Neighbour::Exceptional { id: j }, Component { n: e.n, nu: e.nu }));
    }
    for (index, b) in g.branches.iter().enumerate() {
        if b.host == i {
            out.push((
                Neighbour::Branch {
                    index,
                    orbit_size: b.orbit_size,
                },
                Component { n: b.n, nu: 1 },
            ));
        }
    }
    out
}

fn exceptional_component(g: &ResolutionGraph, i: usize) -> Result<Component> {
    g.exceptional(i)
        .map(|e| Component { n: e.n, nu: e.nu })
        .ok_or_else(|| Error::InvalidArgument(format!("no exceptional curve E{i}")))
}

/// `alpha_j = nu_j - (nu_i / N_i) N_j` for every component meeting `E_i`.
pub fn alpha_values(g: &ResolutionGraph, i: usize) -> Result<Vec<(Neighbour, Rat)>> {
    let ei = exceptional_component(g, i)?;
    let r = ratio(ei.nu, ei.n);
    Ok(neighbour_data(g, i)
        .into_iter()
        .map(|(nb, c)| {
            let alpha = Rat::from_integer(c.nu.into()) - &r * Rat::from_integer(c.n.into());
            (nb, alpha)
        })
        .collect())
}

/// `sum (alpha_j - 1) + 2 = 0`, conjugate points counted individually.
pub fn check_relation_alpha(g: &ResolutionGraph, i: usize) -> Result<bool> {
    let total = alpha_values(g, i)?
        .iter()
        .fold(Rat::from_integer(2.into()), |acc, (nb, a)| {
            acc + Rat::from_integer(nb.multiplicity().into()) * (a - Rat::one())
        });
    Ok(total.is_zero())
}

/// `sum N_j = 0 mod N_i`.
pub fn check_congruence(g: &ResolutionGraph, i: usize) -> Result<bool> {
    let ei = exceptional_component(g, i)?;
    let total: u64 = neighbour_data(g, i)
        .iter()
        .map(|(nb, c)| nb.multiplicity() * c.n)
        .sum();
    Ok(total.is_multiple_of(ei.n))
}

/// Contribution of `E_i` to the residue of the `d`-restricted zeta function
/// at `-nu_i/N_i`: `(chi(E_i°) + sum_{j, d | N_j} 1/alpha_j) / N_i`.
pub fn contribution_residue(g: &ResolutionGraph, i: usize, d: u64) -> Result<Rat> {
    let ei = exceptional_component(g, i)?;
    if d == 0 || ei.n % d != 0 {
        return Err(Error::InvalidArgument(format!(
            "d = {d} does not divide N = {} of E{i}",
            ei.n
        )));
    }
    let mut total = Rat::from_integer(g.open_euler(i).into());
    let data = neighbour_data(g, i);
    for ((nb, alpha), (_, c)) in alpha_values(g, i)?.into_iter().zip(&data) {
        if c.n % d != 0 {
            continue;
        }
        if alpha.is_zero() {
            return Err(Error::AlphaZero(format!("{nb:?} next to E{i}")));
        }
        total += Rat::from_integer(nb.multiplicity().into()) * alpha.recip();
    }
    Ok(total / Rat::from_integer(ei.n.into()))
}

/// Outcome of testing a pole list against the small-pole statements.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SmallPoleVerdict {
    /// Poles below `-1/2` outside `{-1/2 - 1/i : i >= 2}`.
    #[serde(with = "serde_rat_vec")]
    pub outside_set: Vec<Rat>,
    /// Poles in `(-1, -1/2]`.
    #[serde(with = "serde_rat_vec")]
    pub in_window: Vec<Rat>,
}

impl SmallPoleVerdict {
    pub fn passes(&self) -> bool {
        self.outside_set.is_empty() && self.in_window.len() <= 1
    }
}

pub fn classify_small_poles(poles: &[Rat]) -> SmallPoleVerdict {
    let half = Rat::new(BigInt::from(-1), BigInt::from(2));
    let minus_one = -Rat::one();
    let mut verdict = SmallPoleVerdict::default();
    for p in poles {
        if p < &half && half_minus_reciprocal_index(p).is_none() {
            verdict.outside_set.push(p.clone());
        }
        if p > &minus_one && p <= &half {
            verdict.in_window.push(p.clone());
        }
    }
    verdict
}

/// Poles below `-1/2` other than `-1`; empty for germs of multiplicity at
/// least four.
pub fn poles_below_half_except_minus_one(poles: &[Rat]) -> Vec<Rat> {
    let half = Rat::new(BigInt::from(-1), BigInt::from(2));
    poles
        .iter()
        .filter(|p| *p < &half && **p != -Rat::one())
        .cloned()
        .collect()
}

/// Exceptional ids whose candidate `-nu/N` is shared with no other
/// component.
pub fn unshared_exceptionals(g: &ResolutionGraph) -> Vec<usize> {
    let all = components(g);
    g.exceptionals
        .iter()
        .filter(|e| {
            let r = ratio(e.nu, e.n);
            all.iter().filter(|c| ratio(c.nu, c.n) == r).count() == 1
        })
        .map(|e| e.id)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::germ::parse_germ;
    use crate::resolution::resolve_germ;

    fn resolve(text: &str) -> ResolutionGraph {
        resolve_germ(&parse_germ(text).unwrap()).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun1 {
        RatFun1::from_ints(num, den).unwrap()
    }

    fn id_with(g: &ResolutionGraph, n: u64) -> usize {
        g.exceptionals.iter().find(|e| e.n == n).unwrap().id
    }

    #[test]
    fn zeta_examples() {
        let cusp = resolve("y^2+x^3");
        assert_eq!(zeta_top(&cusp), rf(&[5, 4], &[5, 11, 6]));
        assert_eq!(zeta_top(&resolve("y^2")), rf(&[1], &[1, 2]));
        assert_eq!(zeta_top(&resolve("x^2+y^2")), rf(&[1], &[1, 2, 1]));
    }

    #[test]
    fn zeta_d_examples() {
        let cusp = resolve("y^2+x^3");
        assert_eq!(zeta_d(&cusp, 1), zeta_top(&cusp));
        // oracle: 1/(2+2s) - 1/(5+6s) + 1/((2+2s)(5+6s))
        let oracle = &(&rf(&[1], &[2, 2]) - &rf(&[1], &[5, 6])) + &rf(&[1], &[10, 22, 12]);
        assert_eq!(zeta_d(&cusp, 2), oracle);
        assert_eq!(zeta_d(&cusp, 2), rf(&[2], &[5, 6]));
        assert!(zeta_d(&resolve("x^3*y^2+x^5"), 2).is_zero());
    }

    #[test]
    fn lct_examples() {
        assert_eq!(lct(&resolve("y^2+x^3")), rat(5, 6));
        assert_eq!(lct(&resolve("y^2")), rat(1, 2));
        assert_eq!(lct(&resolve("x*y*(x+y)")), rat(2, 3));
    }

    #[test]
    fn pole_examples() {
        let p = poles(&rf(&[5, 4], &[5, 11, 6])).unwrap();
        assert_eq!(
            p.iter().map(|p| (p.location.clone(), p.order)).collect::<Vec<_>>(),
            vec![(int(-1), 1), (rat(-5, 6), 1)]
        );
        assert_eq!(p[1].coefficient, rat(5, 3));
        let p = poles(&rf(&[1], &[1, 2, 1])).unwrap();
        assert_eq!((p[0].location.clone(), p[0].order), (int(-1), 2));
        let p = pole_set(&rf(&[3, 1], &[3, 5, 2])).unwrap();
        assert_eq!(p, BTreeSet::from([int(-3) / int(2), int(-1)]));
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(
            predicted_poles(&resolve("y^2+x^3")),
            BTreeSet::from([rat(-5, 6), int(-1)])
        );
        assert_eq!(predicted_poles(&resolve("y^2")), BTreeSet::from([rat(-1, 2)]));
        assert_eq!(
            predicted_poles(&resolve("x*y*(x+y)")),
            BTreeSet::from([rat(-2, 3), int(-1)])
        );
    }

    #[test]
    fn alpha_examples() {
        let cusp = resolve("y^2+x^3");
        let e6 = id_with(&cusp, 6);
        let e2 = id_with(&cusp, 2);
        let e3 = id_with(&cusp, 3);
        let alphas = alpha_values(&cusp, e6).unwrap();
        let lookup = |nb: Neighbour| alphas.iter().find(|(n, _)| *n == nb).unwrap().1.clone();
        assert_eq!(lookup(Neighbour::Exceptional { id: e2 }), rat(1, 3));
        assert_eq!(lookup(Neighbour::Exceptional { id: e3 }), rat(1, 2));
        assert_eq!(
            lookup(Neighbour::Branch {
                index: 0,
                orbit_size: 1
            }),
            rat(1, 6)
        );
        assert!(check_relation_alpha(&cusp, e6).unwrap());
        assert!(check_congruence(&cusp, e6).unwrap());

        let node = resolve("x^2+y^2");
        let alphas = alpha_values(&node, 1).unwrap();
        assert_eq!(alphas[0].1, int(0));
        assert_eq!(contribution_residue(&node, 1, 1), Err(Error::AlphaZero(format!("{:?} next to E1", alphas[0].0))));
        assert!(check_congruence(&node, 1).unwrap());
        assert!(check_relation_alpha(&node, 1).unwrap());
    }

    #[test]
    fn contribution_examples() {
        let cusp = resolve("y^2+x^3");
        let e6 = id_with(&cusp, 6);
        assert_eq!(contribution_residue(&cusp, e6, 1).unwrap(), rat(5, 3));
        assert_eq!(zeta_top(&cusp).residue(&rat(-5, 6)), rat(5, 3));
        // E1 and E2 meet only one other component.
        for n in [2, 3] {
            let id = id_with(&cusp, n);
            assert_eq!(contribution_residue(&cusp, id, 1).unwrap(), int(0));
        }
        // y^2 + x^4 with d = 2: only E1(2,2) survives next to E2(4,3), so
        // the contribution is (-1 + 2)/4, the residue of Z^(2) at -3/4.
        let g = resolve("y^2+x^4");
        let e4 = id_with(&g, 4);
        assert_eq!(contribution_residue(&g, e4, 2).unwrap(), rat(1, 4));
        assert_eq!(zeta_d(&g, 2).residue(&rat(-3, 4)), rat(1, 4));
        // x^3 y^2 + x^5 with d = 2: a two-neighbour vertex whose neighbours
        // are both filtered out still gives zero.
        let g = resolve("x^3*y^2+x^5");
        for e in &g.exceptionals {
            if e.n % 2 == 0 && g.valence(e.id) == 2 {
                assert_eq!(contribution_residue(&g, e.id, 2).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn small_pole_verdicts() {
        assert!(classify_small_poles(&[rat(-9, 14)]).passes());
        assert!(classify_small_poles(&[int(-1), rat(-5, 6)]).passes());
        assert!(classify_small_poles(&[rat(-7, 10)]).passes());
        let bad = classify_small_poles(&[rat(-5, 7)]);
        assert_eq!(bad.outside_set, vec![rat(-5, 7)]);
        let two = classify_small_poles(&[rat(-5, 6), rat(-3, 4)]);
        assert!(!two.passes());
    }
}
