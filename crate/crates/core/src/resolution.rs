//! Embedded resolution of plane curve germs by point blow-ups.
//!
//! The engine keeps a worklist of infinitely near points. Each point carries
//! the local equations of the strict transform (one squarefree polynomial
//! per factor of the germ, with the factor's multiplicity) and the
//! exceptional curves through it, which are always coordinate axes of the
//! local chart. Points that are not normal crossings are blown up; the
//! others are recorded as edges or branch attachments of the dual graph.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{poly_gcd, rational_roots, BiPoly, Rat, UniPoly};
use crate::error::{Error, Result};
use crate::germ::FactoredGerm;

pub const DEFAULT_MAX_BLOWUPS: usize = 512;

/// Exceptional curve with its numerical data. Ids start at 1 and follow
/// creation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExceptionalDatum {
    pub id: usize,
    #[serde(rename = "N")]
    pub n: u64,
    pub nu: u64,
}

/// A strict-transform branch (or a cluster of conjugate branches) meeting
/// an exceptional curve transversally at `orbit_size` complex points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchAttachment {
    pub host: usize,
    #[serde(rename = "N")]
    pub n: u64,
    pub orbit_size: u64,
}

/// The germ was already normal crossings: one smooth branch, or two
/// transversal smooth branches, through the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OriginCrossing {
    /// `N` of each branch through the origin.
    pub branches: Vec<u64>,
    /// Intersection multiplicity of the two branches (always 1).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intersection_multiplicity: Option<u64>,
}

/// Why a point was blown up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlowupReason {
    /// More than two curves pass through the point.
    TooManyCurves,
    /// Some factor of the strict transform is singular there.
    SingularStrictTransform,
    /// A smooth branch is tangent to an exceptional curve.
    TangentToExceptional,
    /// Two smooth branches are tangent to each other.
    TangentBranches,
}

/// One step of the resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupRecord {
    pub created: ExceptionalDatum,
    pub through: Vec<ExceptionalDatum>,
    pub mu: u64,
    pub reason: BlowupReason,
    /// Set when a single smooth branch was tangent to this exceptional.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tangent_to: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionGraph {
    pub exceptionals: Vec<ExceptionalDatum>,
    /// Unordered pairs stored as `(smaller id, larger id)`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub branches: Vec<BranchAttachment>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nc_at_origin_case: Option<OriginCrossing>,
    #[serde(default)]
    pub history: Vec<BlowupRecord>,
}

/// Component of the total transform, as seen by stratum bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub n: u64,
    pub nu: u64,
}

/// Shape of a stratum, enough to read off its Euler characteristic and
/// Hodge polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratumShape {
    /// Projective line minus `punctures` points.
    PuncturedLine { punctures: u64 },
    /// A finite set of points.
    Points { count: u64 },
}

/// A nonempty stratum `E_I` (minus the other components) of the
/// resolution, restricted to the preimage of the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub members: Vec<Component>,
    pub shape: StratumShape,
}

impl Stratum {
    pub fn euler(&self) -> i64 {
        match self.shape {
            StratumShape::PuncturedLine { punctures } => 2 - punctures as i64,
            StratumShape::Points { count } => count as i64,
        }
    }
}

impl ResolutionGraph {
    pub fn exceptional(&self, id: usize) -> Option<&ExceptionalDatum> {
        self.exceptionals.iter().find(|e| e.id == id)
    }

    pub fn blowup_count(&self) -> usize {
        self.exceptionals.len()
    }

    pub fn neighbours(&self, id: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn branches_on(&self, id: usize) -> impl Iterator<Item = &BranchAttachment> {
        self.branches.iter().filter(move |b| b.host == id)
    }

    /// Number of intersection points with other components, counting
    /// conjugate branch points individually.
    pub fn valence(&self, id: usize) -> u64 {
        self.neighbours(id).len() as u64 + self.branches_on(id).map(|b| b.orbit_size).sum::<u64>()
    }

    /// Euler characteristic of `E_id` minus all other components.
    pub fn open_euler(&self, id: usize) -> i64 {
        2 - self.valence(id) as i64
    }

    /// Every stratum contributing to the zeta function.
    pub fn strata(&self) -> Vec<Stratum> {
        if let Some(origin) = &self.nc_at_origin_case {
            return vec![Stratum {
                members: origin.branches.iter().map(|&n| Component { n, nu: 1 }).collect(),
                shape: StratumShape::Points { count: 1 },
            }];
        }
        let comp = |id: usize| {
            let e = self.exceptional(id).expect("edge endpoint exists");
            Component { n: e.n, nu: e.nu }
        };
        let mut out = Vec::new();
        for e in &self.exceptionals {
            out.push(Stratum {
                members: vec![comp(e.id)],
                shape: StratumShape::PuncturedLine {
                    punctures: self.valence(e.id),
                },
            });
        }
        for &(a, b) in &self.edges {
            out.push(Stratum {
                members: vec![comp(a), comp(b)],
                shape: StratumShape::Points { count: 1 },
            });
        }
        for br in &self.branches {
            out.push(Stratum {
                members: vec![Component { n: br.n, nu: 1 }, comp(br.host)],
                shape: StratumShape::Points {
                    count: br.orbit_size,
                },
            });
        }
        out
    }
}

/// Numerical data of the exceptional curve created by blowing up a point
/// lying on the given exceptionals, where the strict transform has
/// multiplicity `mu`.
pub fn numerical_data_2d(through: &[ExceptionalDatum], mu: u64) -> Result<(u64, u64)> {
    let n = through.iter().map(|e| e.n).sum::<u64>() + mu;
    let nu = match through {
        [] => 2,
        [a] => a.nu + 1,
        [a, b] => a.nu + b.nu,
        _ => return Err(Error::TooManyThrough(through.len())),
    };
    Ok((n, nu))
}

/// Infinitely near point awaiting classification. Local coordinates are
/// `(u, v)`, stored as the `(x, y)` of the polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSituation {
    /// Factors of the strict transform through the point.
    pub factors: Vec<(BiPoly, u64)>,
    /// Exceptional curve with local equation `u = 0`.
    pub on_u0: Option<ExceptionalDatum>,
    /// Exceptional curve with local equation `v = 0`.
    pub on_v0: Option<ExceptionalDatum>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcStatus {
    NormalCrossings,
    NeedsBlowup(BlowupReason),
}

impl LocalSituation {
    pub fn axes(&self) -> Vec<ExceptionalDatum> {
        self.on_u0.iter().chain(self.on_v0.iter()).copied().collect()
    }

    /// Multiplicity of the strict transform at the point, with factor
    /// multiplicities.
    pub fn mu(&self) -> u64 {
        self.factors
            .iter()
            .map(|(f, m)| m * u64::from(f.order().unwrap_or(0)))
            .sum()
    }
}

/// Decides whether the total transform is a normal crossings divisor at
/// the point.
pub fn nc_status(sit: &LocalSituation) -> NcStatus {
    use BlowupReason::*;
    let axes = sit.axes().len();
    if sit.factors.is_empty() {
        return NcStatus::NormalCrossings;
    }
    if sit.factors.iter().any(|(f, _)| f.order() != Some(1)) {
        return NcStatus::NeedsBlowup(SingularStrictTransform);
    }
    if sit.factors.len() + axes > 2 {
        return NcStatus::NeedsBlowup(TooManyCurves);
    }
    let linear: Vec<(Rat, Rat)> = sit
        .factors
        .iter()
        .map(|(f, _)| (f.coeff(1, 0), f.coeff(0, 1)))
        .collect();
    for (a, b) in &linear {
        if (sit.on_u0.is_some() && b.is_zero()) || (sit.on_v0.is_some() && a.is_zero()) {
            return NcStatus::NeedsBlowup(TangentToExceptional);
        }
    }
    if let [(a1, b1), (a2, b2)] = linear.as_slice() {
        if (a1 * b2 - a2 * b1).is_zero() {
            return NcStatus::NeedsBlowup(TangentBranches);
        }
    }
    NcStatus::NormalCrossings
}

/// Result of blowing up one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupOutcome {
    pub record: BlowupRecord,
    pub successors: Vec<LocalSituation>,
    /// Transversal branches through non-rational points of the new curve.
    pub orbit_branches: Vec<BranchAttachment>,
}

/// Blows up the origin of `sit`, creating the exceptional curve `new_id`.
pub fn blow_up_point(sit: &LocalSituation, new_id: usize) -> Result<BlowupOutcome> {
    let reason = match nc_status(sit) {
        NcStatus::NeedsBlowup(r) => r,
        NcStatus::NormalCrossings => BlowupReason::TooManyCurves,
    };
    let through = sit.axes();
    let mu = sit.mu();
    let (n, nu) = numerical_data_2d(&through, mu)?;
    let created = ExceptionalDatum { id: new_id, n, nu };

    let tangent_to = match (reason, sit.factors.as_slice(), through.as_slice()) {
        (BlowupReason::TangentToExceptional, [_], [e]) => Some(e.id),
        _ => None,
    };

    let orders: Vec<u32> = sit.factors.iter().map(|(f, _)| f.order().unwrap_or(0)).collect();
    let chart_x: Vec<(BiPoly, u64)> = sit
        .factors
        .iter()
        .zip(&orders)
        .map(|((f, m), &o)| (f.chart_x(o), *m))
        .collect();
    let chart_y: Vec<(BiPoly, u64)> = sit
        .factors
        .iter()
        .zip(&orders)
        .map(|((f, m), &o)| (f.chart_y(o), *m))
        .collect();

    // Points of the new curve in the x-chart are the roots of the
    // restrictions f_j(0, t).
    let mut centers: BTreeSet<Rat> = BTreeSet::new();
    let mut leftovers: Vec<(UniPoly, u64)> = Vec::new();
    for (f, m) in &chart_x {
        let restriction = f.restrict_x0();
        if restriction.is_constant() {
            continue;
        }
        let report = rational_roots(&restriction)?;
        centers.extend(report.roots.into_iter().map(|(r, _)| r));
        if report.remainder_degree > 0 {
            if !report.remainder_squarefree {
                return Err(Error::UnsupportedIrrationalCenter(format!(
                    "repeated non-rational root of {} on the exceptional curve",
                    report.remainder.display_with("t")
                )));
            }
            leftovers.push((report.remainder, *m));
        }
    }
    for i in 0..leftovers.len() {
        for j in i + 1..leftovers.len() {
            if !poly_gcd(&leftovers[i].0, &leftovers[j].0).is_constant() {
                return Err(Error::UnsupportedIrrationalCenter(format!(
                    "two branches meet at a root of {} on the exceptional curve",
                    poly_gcd(&leftovers[i].0, &leftovers[j].0).display_with("t")
                )));
            }
        }
    }
    let orbit_branches = leftovers
        .iter()
        .map(|(q, m)| BranchAttachment {
            host: new_id,
            n: *m,
            orbit_size: q.degree().unwrap_or(0) as u64,
        })
        .collect();

    if sit.on_v0.is_some() {
        centers.insert(Rat::zero());
    }
    let mut successors = Vec::new();
    for c in &centers {
        let factors: Vec<(BiPoly, u64)> = chart_x
            .iter()
            .map(|(f, m)| (f.translate_y(c), *m))
            .filter(|(f, _)| f.vanishes_at_origin())
            .collect();
        successors.push(LocalSituation {
            factors,
            on_u0: Some(created),
            on_v0: if c.is_zero() { sit.on_v0 } else { None },
        });
    }
    let at_infinity: Vec<(BiPoly, u64)> = chart_y
        .into_iter()
        .filter(|(f, _)| f.vanishes_at_origin())
        .collect();
    if !at_infinity.is_empty() || sit.on_u0.is_some() {
        successors.push(LocalSituation {
            factors: at_infinity,
            on_u0: sit.on_u0,
            on_v0: Some(created),
        });
    }

    Ok(BlowupOutcome {
        record: BlowupRecord {
            created,
            through,
            mu,
            reason,
            tangent_to,
        },
        successors,
        orbit_branches,
    })
}

/// Minimal embedded resolution with the default blow-up limit.
pub fn resolve_germ(g: &FactoredGerm) -> Result<ResolutionGraph> {
    resolve_germ_with_limit(g, DEFAULT_MAX_BLOWUPS)
}

pub fn resolve_germ_with_limit(g: &FactoredGerm, max_blowups: usize) -> Result<ResolutionGraph> {
    let start = LocalSituation {
        factors: g.factors.iter().map(|(f, m)| (f.clone(), u64::from(*m))).collect(),
        on_u0: None,
        on_v0: None,
    };
    if start.factors.is_empty() {
        return Err(Error::NotAGerm);
    }
    let mut graph = ResolutionGraph {
        exceptionals: Vec::new(),
        edges: Vec::new(),
        branches: Vec::new(),
        nc_at_origin_case: None,
        history: Vec::new(),
    };
    if nc_status(&start) == NcStatus::NormalCrossings {
        let branches: Vec<u64> = start.factors.iter().map(|(_, m)| *m).collect();
        graph.nc_at_origin_case = Some(OriginCrossing {
            intersection_multiplicity: (branches.len() == 2).then_some(1),
            branches,
        });
        return Ok(graph);
    }

    let mut work = vec![start];
    while let Some(sit) = work.pop() {
        match nc_status(&sit) {
            NcStatus::NormalCrossings => record_normal_crossing(&mut graph, &sit),
            NcStatus::NeedsBlowup(_) => {
                if graph.exceptionals.len() >= max_blowups {
                    return Err(Error::BlowupLimit(max_blowups));
                }
                let outcome = blow_up_point(&sit, graph.exceptionals.len() + 1)?;
                graph.exceptionals.push(outcome.record.created);
                graph.history.push(outcome.record);
                graph.branches.extend(outcome.orbit_branches);
                // Reverse so that points are processed in the order found.
                work.extend(outcome.successors.into_iter().rev());
            }
        }
    }
    graph.edges.sort_unstable();
    graph
        .branches
        .sort_by_key(|b| (b.host, b.n, b.orbit_size));
    Ok(graph)
}

fn record_normal_crossing(graph: &mut ResolutionGraph, sit: &LocalSituation) {
    match (sit.axes().as_slice(), sit.factors.as_slice()) {
        ([a, b], []) => {
            let pair = (a.id.min(b.id), a.id.max(b.id));
            graph.edges.push(pair);
        }
        ([e], [(_, m)]) => graph.branches.push(BranchAttachment {
            host: e.id,
            n: *m,
            orbit_size: 1,
        }),
        // A free point of a single exceptional carries no data.
        _ => {}
    }
}

/// Self-intersection number of each exceptional curve: -1 at creation,
/// lowered by one for every later center lying on it.
pub fn self_intersections(graph: &ResolutionGraph) -> Vec<(usize, i64)> {
    graph
        .exceptionals
        .iter()
        .map(|e| {
            let later = graph
                .history
                .iter()
                .filter(|r| r.through.iter().any(|t| t.id == e.id))
                .count() as i64;
            (e.id, -1 - later)
        })
        .collect()
}

/// Exceptional curves that could be blown down with the total transform
/// staying normal crossings: self-intersection -1 and at most two
/// intersection points with other components.
pub fn contractible_curves(graph: &ResolutionGraph) -> Vec<usize> {
    self_intersections(graph)
        .into_iter()
        .filter(|&(id, self_int)| self_int == -1 && graph.valence(id) <= 2)
        .map(|(id, _)| id)
        .collect()
}

/// True if the resolution is minimal. A germ that is a node through a
/// single squarefree factor (such as `x^2+y^2`) is blown up once, because
/// its two branches are only separated over the complex numbers; that one
/// exceptional curve is the only tolerated contractible curve.
pub fn is_minimal(graph: &ResolutionGraph) -> bool {
    let contractible = contractible_curves(graph);
    contractible.is_empty()
        || (graph.exceptionals.len() == 1
            && graph.exceptionals[0].n == 2
            && graph.valence(graph.exceptionals[0].id) == 2)
}

/// Inequalities on candidate poles satisfied by every blow-up step;
/// returns a description of each violation.
pub fn local_data_violations(graph: &ResolutionGraph) -> Vec<String> {
    let ratio = |e: &ExceptionalDatum| Rat::new((e.nu as i64).into(), (e.n as i64).into());
    let mut out = Vec::new();
    for r in &graph.history {
        let new = ratio(&r.created);
        match r.through.as_slice() {
            [a, b] => {
                // -nu/N strictly above the smaller of the two old values.
                let max_old = ratio(a).max(ratio(b));
                if new >= max_old {
                    out.push(format!(
                        "E{}: {} is not below max({}, {})",
                        r.created.id,
                        new,
                        ratio(a),
                        ratio(b)
                    ));
                }
            }
            [a] if r.mu >= 2 => {
                let lo = ratio(a).min(Rat::new(1.into(), (r.mu as i64).into()));
                let hi = ratio(a).max(Rat::new(1.into(), (r.mu as i64).into()));
                if new < lo || new > hi {
                    out.push(format!(
                        "E{}: {} not between {} and 1/{}",
                        r.created.id,
                        new,
                        ratio(a),
                        r.mu
                    ));
                }
            }
            _ => {}
        }
        if let Some(host) = r.tangent_to {
            let Some(old) = r.through.iter().find(|e| e.id == host) else {
                out.push(format!("E{}: tangency host E{host} not recorded", r.created.id));
                continue;
            };
            let follow = graph.history.iter().find(|s| {
                s.through.len() == 2
                    && s.through.iter().any(|e| e.id == host)
                    && s.through.iter().any(|e| e.id == r.created.id)
            });
            let Some(follow) = follow else {
                out.push(format!(
                    "E{}: tangency to E{host} not followed by a blow-up at the corner",
                    r.created.id
                ));
                continue;
            };
            let expected = (2 * old.n + 2 * r.mu, 2 * old.nu + 1);
            if (follow.created.n, follow.created.nu) != expected {
                out.push(format!(
                    "E{}: data ({}, {}) after tangency, expected {:?}",
                    follow.created.id, follow.created.n, follow.created.nu, expected
                ));
            }
            let value = ratio(&follow.created);
            let half = Rat::new(1.into(), (2 * r.mu as i64).into());
            let (lo, hi) = if half < ratio(old) {
                (half, ratio(old))
            } else {
                (ratio(old), half)
            };
            if value < lo || value > hi {
                out.push(format!(
                    "E{}: {} not between {} and {}",
                    follow.created.id,
                    value,
                    ratio(old),
                    Rat::new(1.into(), (2 * r.mu as i64).into())
                ));
            }
        }
    }
    out
}

/// Total number of complex intersection points of the strict transform
/// with the exceptional locus.
pub fn branch_point_count(graph: &ResolutionGraph) -> u64 {
    graph.branches.iter().map(|b| b.orbit_size).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::parse_germ;

    fn resolve(text: &str) -> ResolutionGraph {
        resolve_germ(&parse_germ(text).unwrap()).unwrap()
    }

    fn data(g: &ResolutionGraph) -> Vec<(u64, u64)> {
        let mut d: Vec<(u64, u64)> = g.exceptionals.iter().map(|e| (e.n, e.nu)).collect();
        d.sort();
        d
    }

    fn ed(id: usize, n: u64, nu: u64) -> ExceptionalDatum {
        ExceptionalDatum { id, n, nu }
    }

    #[test]
    fn numerical_data_examples() {
        assert_eq!(numerical_data_2d(&[], 2).unwrap(), (2, 2));
        assert_eq!(numerical_data_2d(&[ed(1, 2, 2)], 1).unwrap(), (3, 3));
        assert_eq!(numerical_data_2d(&[ed(1, 2, 2), ed(2, 4, 3)], 1).unwrap(), (7, 5));
        assert_eq!(
            numerical_data_2d(&[ed(1, 1, 2), ed(2, 1, 2), ed(3, 1, 2)], 1),
            Err(Error::TooManyThrough(3))
        );
    }

    #[test]
    fn cusp_graph() {
        let g = resolve("y^2+x^3");
        assert_eq!(data(&g), vec![(2, 2), (3, 3), (6, 5)]);
        let e6 = g.exceptionals.iter().find(|e| e.n == 6).unwrap().id;
        let e2 = g.exceptionals.iter().find(|e| e.n == 2).unwrap().id;
        let e3 = g.exceptionals.iter().find(|e| e.n == 3).unwrap().id;
        let mut expected = vec![(e2.min(e6), e2.max(e6)), (e3.min(e6), e3.max(e6))];
        expected.sort();
        assert_eq!(g.edges, expected);
        assert_eq!(
            g.branches,
            vec![BranchAttachment {
                host: e6,
                n: 1,
                orbit_size: 1
            }]
        );
        assert!(local_data_violations(&g).is_empty());
    }

    #[test]
    fn first_blowup_of_cusp() {
        let germ = parse_germ("y^2+x^3").unwrap();
        let sit = LocalSituation {
            factors: vec![(germ.factors[0].0.clone(), 1)],
            on_u0: None,
            on_v0: None,
        };
        let out = blow_up_point(&sit, 1).unwrap();
        assert_eq!(out.record.created, ed(1, 2, 2));
        assert_eq!(out.successors.len(), 1);
        assert!(out.orbit_branches.is_empty());
        assert_eq!(
            nc_status(&out.successors[0]),
            NcStatus::NeedsBlowup(BlowupReason::TangentToExceptional)
        );
    }

    #[test]
    fn three_lines() {
        let g = resolve("x*y*(x+y)");
        assert_eq!(data(&g), vec![(3, 2)]);
        assert!(g.edges.is_empty());
        assert_eq!(g.branches.len(), 3);
        assert!(g.branches.iter().all(|b| b.orbit_size == 1 && b.n == 1));
    }

    #[test]
    fn conjugate_pair() {
        let g = resolve("x^2+y^2");
        assert_eq!(data(&g), vec![(2, 2)]);
        assert_eq!(
            g.branches,
            vec![BranchAttachment {
                host: 1,
                n: 1,
                orbit_size: 2
            }]
        );
        assert_eq!(branch_point_count(&g), 2);
    }

    #[test]
    fn normal_crossings_at_origin() {
        let g = resolve("y^2");
        assert!(g.exceptionals.is_empty());
        assert_eq!(g.nc_at_origin_case.as_ref().unwrap().branches, vec![2]);

        let g = resolve("x*(x+y)^3");
        assert_eq!(g.nc_at_origin_case.as_ref().unwrap().branches.len(), 2);
    }

    #[test]
    fn nc_status_examples() {
        let e = ed(1, 2, 2);
        let transversal = LocalSituation {
            factors: vec![(BiPoly::from_int_terms(&[(1, 0, 1), (1, 1, 0)]), 1)],
            on_u0: Some(e),
            on_v0: None,
        };
        assert_eq!(nc_status(&transversal), NcStatus::NormalCrossings);
        // v + u^2 is tangent to u = 0? No: its tangent line is v = 0.
        let tangent = LocalSituation {
            factors: vec![(BiPoly::from_int_terms(&[(1, 1, 0), (1, 0, 2)]), 1)],
            on_u0: Some(e),
            on_v0: None,
        };
        assert_eq!(
            nc_status(&tangent),
            NcStatus::NeedsBlowup(BlowupReason::TangentToExceptional)
        );
        let singular = LocalSituation {
            factors: vec![(BiPoly::from_int_terms(&[(1, 0, 2), (1, 3, 0)]), 1)],
            on_u0: Some(e),
            on_v0: None,
        };
        assert_eq!(
            nc_status(&singular),
            NcStatus::NeedsBlowup(BlowupReason::SingularStrictTransform)
        );
    }

    #[test]
    fn repeated_irrational_center_is_refused() {
        // (y^2 - 2x^2)^2 + x^5: the tangent cone is a double conjugate pair.
        let germ = parse_germ("(y^2-2*x^2)^2+x^5").unwrap();
        assert!(matches!(
            resolve_germ(&germ),
            Err(Error::UnsupportedIrrationalCenter(_))
        ));
    }

    #[test]
    fn blowup_limit() {
        let germ = parse_germ("y^2+x^40").unwrap();
        assert_eq!(resolve_germ_with_limit(&germ, 3), Err(Error::BlowupLimit(3)));
    }

    #[test]
    fn json_round_trip() {
        let g = resolve("y^3+x*y^2+x^6");
        let text = serde_json::to_string(&g).unwrap();
        let back: ResolutionGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn minimality_replay() {
        for text in ["y^2+x^3", "y^3+x^5", "x*y*(x+y)", "x^3*y^2+x^7"] {
            assert!(is_minimal(&resolve(text)), "{text}");
        }
    }
}
