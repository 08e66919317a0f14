//! Residue contributions of an exceptional projective plane carrying a
//! line arrangement.
//!
//! Each line carries an alpha value. Points where three or more lines meet
//! are blown up, the new curves get their alpha from the incident lines,
//! and the contribution is read off the resulting normal crossings
//! stratification.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{fmt_rat, parse_rat, serde_rat};
use crate::algebra::Rat;
use crate::error::{Error, Result};
use crate::germ::parse_sparse;

/// Projective line `a x + b y + c z = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line(pub [Rat; 3]);

impl Line {
    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Line([a, b, c].map(|v| Rat::from_integer(v.into())))
    }

    /// Parses `a*x+b*y+c*z` (any linear form in `x`, `y`, `z`).
    pub fn parse(text: &str) -> Result<Self> {
        let terms = parse_sparse(text, &["x", "y", "z"])?;
        let mut coeffs = [Rat::zero(), Rat::zero(), Rat::zero()];
        for (exps, c) in terms {
            match exps.iter().position(|&e| e == 1) {
                Some(i) if exps.iter().sum::<u32>() == 1 => coeffs[i] = c,
                _ => {
                    return Err(Error::InvalidConfig(format!(
                        "`{}` is not a linear form in x, y, z",
                        text.trim()
                    )))
                }
            }
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidConfig("zero linear form".into()));
        }
        Ok(Line(coeffs))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, v) in self.0.iter().zip(["x", "y", "z"]) {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                out.push('-');
            }
            out.push_str(&format!("{}*{}", fmt_rat(&c.abs()), v));
        }
        f.write_str(&out)
    }
}

/// Scales projective coordinates so that the first nonzero entry is 1.
fn normalize(p: [Rat; 3]) -> [Rat; 3] {
    let lead = p.iter().find(|c| !c.is_zero()).cloned().expect("nonzero point");
    p.map(|c| c / &lead)
}

fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Line arrangement with one alpha per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceConfig {
    pub lines: Vec<Line>,
    pub alphas: Vec<Rat>,
}

/// `sum (alpha_j - 1) + 3 = 0`: the relation attached to the creation of
/// the plane by blowing up a point, all curves being lines.
pub fn check_creation_relation(alphas: &[Rat]) -> bool {
    let total = alphas
        .iter()
        .fold(Rat::from_integer(3.into()), |acc, a| acc + a - Rat::one());
    total.is_zero()
}

/// `sum mu_k (alpha_k - 1) + 2`.
pub fn alpha_blowup(incident: &[(Rat, u32)]) -> Rat {
    incident
        .iter()
        .fold(Rat::from_integer(2.into()), |acc, (a, mu)| {
            acc + Rat::from_integer((*mu).into()) * (a - Rat::one())
        })
}

impl SurfaceConfig {
    /// Validates distinct lines, one alpha per line and the creation
    /// relation.
    pub fn new(lines: Vec<Line>, alphas: Vec<Rat>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::InvalidConfig("no lines".into()));
        }
        if lines.len() != alphas.len() {
            return Err(Error::InvalidConfig(format!(
                "{} lines but {} alpha values",
                lines.len(),
                alphas.len()
            )));
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if cross(&lines[i].0, &lines[j].0).iter().all(Zero::is_zero) {
                    return Err(Error::InvalidConfig(format!(
                        "lines {} and {} coincide",
                        lines[i], lines[j]
                    )));
                }
            }
        }
        if !check_creation_relation(&alphas) {
            let sum = alphas.iter().fold(Rat::zero(), |acc, a| acc + a);
            return Err(Error::InvalidConfig(format!(
                "alphas sum to {}, the creation relation needs {}",
                fmt_rat(&sum),
                lines.len() as i64 - 3
            )));
        }
        Ok(Self { lines, alphas })
    }
}

/// Curve on the resolved plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigCurve {
    /// `line` for a strict transform of an input line, `exceptional`
    /// otherwise.
    pub kind: CurveKind,
    #[serde(with = "serde_rat")]
    pub alpha: Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type", content = "index")]
pub enum CurveKind {
    Line(usize),
    Exceptional(usize),
}

/// Normal crossings arrangement of rational curves on a blown-up plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigResolution {
    pub curves: Vec<ConfigCurve>,
    /// Transversal intersection points, as pairs of curve indices.
    pub crossings: Vec<(usize, usize)>,
    /// Number of point blow-ups applied to the plane.
    pub blowups: usize,
    /// Incident line indices of every point blown up by the resolution.
    pub blown_points: Vec<Vec<usize>>,
}

impl ConfigResolution {
    /// Euler characteristic of the blown-up plane.
    pub fn surface_euler(&self) -> i64 {
        3 + self.blowups as i64
    }

    pub fn curve_euler(&self, j: usize) -> i64 {
        2 - self
            .crossings
            .iter()
            .filter(|&&(a, b)| a == j || b == j)
            .count() as i64
    }

    /// Euler characteristic of the complement of all curves.
    pub fn complement_euler(&self) -> i64 {
        self.surface_euler() - (2 * self.curves.len() as i64 - self.crossings.len() as i64)
    }

    /// Sum of the Euler characteristics of all strata.
    pub fn total_euler(&self) -> i64 {
        self.complement_euler()
            + (0..self.curves.len()).map(|j| self.curve_euler(j)).sum::<i64>()
            + self.crossings.len() as i64
    }

    /// `sum_I chi(C_I°) prod_{j not in I} alpha_j`: the contribution times
    /// `N * prod alpha_j`, a polynomial in the alphas.
    pub fn cleared_sum(&self) -> Rat {
        let alphas: Vec<&Rat> = self.curves.iter().map(|c| &c.alpha).collect();
        let product_except = |skip: &[usize]| {
            alphas
                .iter()
                .enumerate()
                .filter(|(i, _)| !skip.contains(i))
                .fold(Rat::one(), |acc, (_, a)| acc * *a)
        };
        let mut total = Rat::from_integer(self.complement_euler().into()) * product_except(&[]);
        for j in 0..self.curves.len() {
            total += Rat::from_integer(self.curve_euler(j).into()) * product_except(&[j]);
        }
        for &(a, b) in &self.crossings {
            total += product_except(&[a, b]);
        }
        total
    }

    /// Blows up one more point and assigns the new curve its alpha.
    /// Returns `None` if that alpha vanishes.
    pub fn blow_up_extra(&self, probe: Probe) -> Option<ConfigResolution> {
        let mut next = self.clone();
        let new = next.curves.len();
        let alpha = match probe {
            Probe::OffCurves => alpha_blowup(&[]),
            Probe::FreeOnCurve(j) => {
                next.crossings.push((j, new));
                alpha_blowup(&[(self.curves[j].alpha.clone(), 1)])
            }
            Probe::Crossing(p) => {
                let (a, b) = next.crossings.remove(p);
                next.crossings.push((a, new));
                next.crossings.push((b, new));
                alpha_blowup(&[
                    (self.curves[a].alpha.clone(), 1),
                    (self.curves[b].alpha.clone(), 1),
                ])
            }
        };
        if alpha.is_zero() {
            return None;
        }
        next.curves.push(ConfigCurve {
            kind: CurveKind::Exceptional(self.blowups),
            alpha,
        });
        next.blowups += 1;
        Some(next)
    }
}

/// Point of the resolved plane used for an extra blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Probe {
    /// A point on curve `j` and on no other curve.
    FreeOnCurve(usize),
    /// The crossing with this index.
    Crossing(usize),
    /// A point on no curve.
    OffCurves,
}

/// Blows up every point where at least three lines meet.
pub fn arrangement_resolve(cfg: &SurfaceConfig) -> ConfigResolution {
    let mut points: BTreeMap<[Rat; 3], Vec<usize>> = BTreeMap::new();
    for i in 0..cfg.lines.len() {
        for j in i + 1..cfg.lines.len() {
            let p = normalize(cross(&cfg.lines[i].0, &cfg.lines[j].0));
            let entry = points.entry(p).or_default();
            for idx in [i, j] {
                if !entry.contains(&idx) {
                    entry.push(idx);
                }
            }
        }
    }
    let mut curves: Vec<ConfigCurve> = cfg
        .alphas
        .iter()
        .enumerate()
        .map(|(i, a)| ConfigCurve {
            kind: CurveKind::Line(i),
            alpha: a.clone(),
        })
        .collect();
    let mut crossings = Vec::new();
    let mut blown_points = Vec::new();
    for (_, mut incident) in points {
        incident.sort_unstable();
        if incident.len() == 2 {
            crossings.push((incident[0], incident[1]));
            continue;
        }
        let alpha = alpha_blowup(
            &incident
                .iter()
                .map(|&j| (cfg.alphas[j].clone(), 1))
                .collect::<Vec<_>>(),
        );
        let new = curves.len();
        curves.push(ConfigCurve {
            kind: CurveKind::Exceptional(blown_points.len()),
            alpha,
        });
        crossings.extend(incident.iter().map(|&j| (j, new)));
        blown_points.push(incident);
    }
    ConfigResolution {
        curves,
        crossings,
        blowups: blown_points.len(),
        blown_points,
    }
}

/// `(1/N) sum_I chi(C_I°) prod_{j in I} 1/alpha_j`.
pub fn contribution_surface(res: &ConfigResolution, n: u64) -> Result<Rat> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    if let Some(j) = res.curves.iter().position(|c| c.alpha.is_zero()) {
        return Err(Error::AlphaZero(format!("curve {j} of the configuration")));
    }
    let mut total = Rat::from_integer(res.complement_euler().into());
    for (j, c) in res.curves.iter().enumerate() {
        total += Rat::from_integer(res.curve_euler(j).into()) / &c.alpha;
    }
    for &(a, b) in &res.crossings {
        total += (&res.curves[a].alpha * &res.curves[b].alpha).recip();
    }
    Ok(total / Rat::from_integer(n.into()))
}

/// True if one extra blow-up at `probe` leaves the contribution unchanged.
/// Probes whose new alpha vanishes are vacuously stable.
pub fn stability_probe(res: &ConfigResolution, probe: Probe) -> Result<bool> {
    let before = contribution_surface(res, 1)?;
    match res.blow_up_extra(probe) {
        None => Ok(true),
        Some(next) => Ok(contribution_surface(&next, 1)? == before),
    }
}

/// Named arrangements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    OneLine,
    TwoLines,
    ThreeConcurrent,
    ThreeGeneral,
    ThreeConcurrentPlusOne,
    FourGeneral,
}

impl Preset {
    pub const ALL: [Preset; 6] = [
        Preset::OneLine,
        Preset::TwoLines,
        Preset::ThreeConcurrent,
        Preset::ThreeGeneral,
        Preset::ThreeConcurrentPlusOne,
        Preset::FourGeneral,
    ];

    /// The five arrangements whose contribution vanishes identically.
    pub const CANCELLING: [Preset; 5] = [
        Preset::OneLine,
        Preset::TwoLines,
        Preset::ThreeConcurrent,
        Preset::ThreeGeneral,
        Preset::ThreeConcurrentPlusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::OneLine => "one-line",
            Preset::TwoLines => "two-lines",
            Preset::ThreeConcurrent => "three-concurrent",
            Preset::ThreeGeneral => "three-general",
            Preset::ThreeConcurrentPlusOne => "three-concurrent-plus-one",
            Preset::FourGeneral => "four-general",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown preset `{name}`")))
    }

    pub fn lines(self) -> Vec<Line> {
        let l = Line::from_ints;
        match self {
            Preset::OneLine => vec![l(1, 0, 0)],
            Preset::TwoLines => vec![l(1, 0, 0), l(0, 1, 0)],
            Preset::ThreeConcurrent => vec![l(1, 0, 0), l(0, 1, 0), l(1, 1, 0)],
            Preset::ThreeGeneral => vec![l(1, 0, 0), l(0, 1, 0), l(0, 0, 1)],
            Preset::ThreeConcurrentPlusOne => {
                vec![l(1, 0, 0), l(0, 1, 0), l(1, 1, 0), l(0, 0, 1)]
            }
            Preset::FourGeneral => vec![l(1, 0, 0), l(0, 1, 0), l(0, 0, 1), l(1, 1, 1)],
        }
    }
}

/// Parses `a*x+b*y+c*z;...`.
pub fn parse_lines(text: &str) -> Result<Vec<Line>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(Line::parse)
        .collect()
}

/// Parses comma-separated rationals.
pub fn parse_alphas(text: &str) -> Result<Vec<Rat>> {
    text.split(',')
        .map(|s| {
            parse_rat(s).ok_or_else(|| Error::InvalidArgument(format!("bad rational `{}`", s.trim())))
        })
        .collect()
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let num: i64 = rng.gen_range(-40..=40);
        let den: i64 = rng.gen_range(1..=12);
        if num != 0 {
            return Rat::new(BigInt::from(num), BigInt::from(den));
        }
    }
}

/// Alphas with the first `len - 1` values drawn at random and the last
/// fixed by the creation relation.
fn alphas_from_free(free: &[Rat], len: usize) -> Vec<Rat> {
    let mut out = free.to_vec();
    let target = Rat::from_integer((len as i64 - 3).into());
    let sum = free.iter().fold(Rat::zero(), |acc, a| acc + a);
    out.push(target - sum);
    out
}

/// Draws alphas satisfying the creation relation such that every alpha of
/// the resolved arrangement is nonzero.
pub fn sample_alphas(preset: Preset, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    let lines = preset.lines();
    loop {
        let free: Vec<Rat> = (0..lines.len() - 1).map(|_| random_rat(rng)).collect();
        let alphas = alphas_from_free(&free, lines.len());
        let cfg = SurfaceConfig::new(lines.clone(), alphas.clone()).expect("relation holds");
        if arrangement_resolve(&cfg).curves.iter().all(|c| !c.alpha.is_zero()) {
            return alphas;
        }
    }
}

/// Evaluates the cleared contribution polynomial on the grid
/// `{1, ..., D+1}^m` of free alphas, where `D` bounds its total degree and
/// `m` is the number of free alphas. Vanishing on the whole grid proves
/// vanishing identically. Returns `(grid points, zero count)`.
pub fn certify_identically_zero(preset: Preset) -> (usize, usize) {
    let lines = preset.lines();
    let free = lines.len() - 1;
    let probe = SurfaceConfig::new(lines.clone(), alphas_from_free(&vec![Rat::one(); free], lines.len()))
        .expect("relation holds");
    let degree = arrangement_resolve(&probe).curves.len();
    let side = degree + 1;
    let total = side.pow(free as u32);
    let mut zeros = 0;
    for index in 0..total {
        let mut rest = index;
        let point: Vec<Rat> = (0..free)
            .map(|_| {
                let v = rest % side;
                rest /= side;
                Rat::from_integer((v as i64 + 1).into())
            })
            .collect();
        let cfg = SurfaceConfig::new(lines.clone(), alphas_from_free(&point, lines.len()))
            .expect("relation holds");
        if arrangement_resolve(&cfg).cleared_sum().is_zero() {
            zeros += 1;
        }
    }
    (total, zeros)
}

/// Outcome of the sampling suite for one arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigSuiteEntry {
    pub preset: String,
    pub samples: usize,
    pub zero_samples: usize,
    pub grid_points: usize,
    pub grid_zeros: usize,
    pub probes: usize,
    pub stable_probes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example_nonzero: Option<String>,
}

impl ConfigSuiteEntry {
    pub fn all_zero(&self) -> bool {
        self.zero_samples == self.samples && self.grid_zeros == self.grid_points
    }

    pub fn all_stable(&self) -> bool {
        self.stable_probes == self.probes
    }
}

/// Random samples per arrangement: at least 20, and 25 per free alpha.
pub fn sample_count(preset: Preset) -> usize {
    (25 * (preset.lines().len() - 1)).max(20)
}

fn random_probe(res: &ConfigResolution, rng: &mut ChaCha8Rng) -> Probe {
    loop {
        match rng.gen_range(0..3) {
            0 => return Probe::OffCurves,
            1 => return Probe::FreeOnCurve(rng.gen_range(0..res.curves.len())),
            _ if !res.crossings.is_empty() => {
                return Probe::Crossing(rng.gen_range(0..res.crossings.len()))
            }
            _ => continue,
        }
    }
}

/// Samples contributions and stability probes for one arrangement.
pub fn run_config_suite_entry(preset: Preset, seed: u64, probes: usize) -> Result<ConfigSuiteEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (preset as u64).wrapping_mul(0x9E37_79B9));
    let samples = sample_count(preset);
    let mut zero_samples = 0;
    let mut example_nonzero = None;
    let mut probes_run = 0;
    let mut stable = 0;
    for i in 0..samples {
        let alphas = sample_alphas(preset, &mut rng);
        let cfg = SurfaceConfig::new(preset.lines(), alphas)?;
        let res = arrangement_resolve(&cfg);
        let value = contribution_surface(&res, 1)?;
        if value.is_zero() {
            zero_samples += 1;
        } else if example_nonzero.is_none() {
            example_nonzero = Some(fmt_rat(&value));
        }
        if i < probes {
            let probe = random_probe(&res, &mut rng);
            probes_run += 1;
            if stability_probe(&res, probe)? {
                stable += 1;
            }
        }
    }
    let (grid_points, grid_zeros) = certify_identically_zero(preset);
    Ok(ConfigSuiteEntry {
        preset: preset.name().to_string(),
        samples,
        zero_samples,
        grid_points,
        grid_zeros,
        probes: probes_run,
        stable_probes: stable,
        example_nonzero,
    })
}

/// Center of a blow-up in a threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterKind {
    Point,
    Curve,
}

/// Numerical data of the exceptional surface created by blowing up a
/// point or a smooth curve lying on the given exceptional surfaces, with
/// `mu` the multiplicity of the strict transform along the center.
pub fn numerical_data_3d(kind: CenterKind, through: &[(u64, u64)], mu: u64) -> Result<(u64, u64)> {
    let n = through.iter().map(|t| t.0).sum::<u64>() + mu;
    let nus: u64 = through.iter().map(|t| t.1).sum();
    let nu = match (kind, through.len()) {
        (CenterKind::Point, 0) => 3,
        (CenterKind::Point, 1) => nus + 2,
        (CenterKind::Point, 2) => nus + 1,
        (CenterKind::Point, 3) => nus,
        (CenterKind::Curve, 0) => 2,
        (CenterKind::Curve, 1) => nus + 1,
        (CenterKind::Curve, 2) => nus,
        (kind, count) => {
            return Err(Error::InvalidThroughCount(format!(
                "{count} surfaces through a {} center",
                match kind {
                    CenterKind::Point => "point",
                    CenterKind::Curve => "curve",
                }
            )))
        }
    };
    Ok((n, nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn config(preset: Preset, alphas: &[Rat]) -> ConfigResolution {
        arrangement_resolve(&SurfaceConfig::new(preset.lines(), alphas.to_vec()).unwrap())
    }

    #[test]
    fn creation_relation() {
        assert!(check_creation_relation(&[int(1), int(-3), int(2)]));
        assert!(check_creation_relation(&[int(1), int(-3), int(2), int(1)]));
        assert!(!check_creation_relation(&[int(1), int(-1), int(1)]));
        assert!(SurfaceConfig::new(Preset::ThreeGeneral.lines(), vec![int(1), int(1), int(1)]).is_err());
    }

    #[test]
    fn alpha_blowup_examples() {
        let (a, b, c) = (rat(1, 2), rat(-3, 4), rat(1, 4));
        assert_eq!(alpha_blowup(&[(a.clone(), 1), (b.clone(), 1), (c.clone(), 1)]), int(-1));
        assert_eq!(alpha_blowup(&[(a.clone(), 1)]), &a + int(1));
        assert_eq!(alpha_blowup(&[]), int(2));
    }

    #[test]
    fn resolve_examples() {
        let res = config(Preset::ThreeConcurrent, &[int(2), int(-5), int(3)]);
        assert_eq!(res.blowups, 1);
        assert_eq!(res.curves[3].alpha, int(-1));
        assert_eq!(res.complement_euler(), -1);
        assert_eq!(res.curve_euler(3), -1);
        assert_eq!(res.total_euler(), 4);

        let res = config(Preset::ThreeGeneral, &[int(2), int(-5), int(3)]);
        assert_eq!(res.blowups, 0);

        let res = config(Preset::FourGeneral, &[int(2), int(2), int(2), int(-5)]);
        assert_eq!(res.blowups, 0);
        assert_eq!(res.crossings.len(), 6);
        assert_eq!(res.total_euler(), 3);
    }

    #[test]
    fn contribution_examples() {
        let res = config(Preset::ThreeConcurrent, &[rat(7, 3), int(-5), rat(8, 3)]);
        assert_eq!(contribution_surface(&res, 1).unwrap(), int(0));
        let res = config(Preset::ThreeGeneral, &[rat(1, 2), rat(-3, 2), int(1)]);
        assert_eq!(contribution_surface(&res, 1).unwrap(), int(0));
        let res = config(Preset::FourGeneral, &[int(2), int(2), int(2), int(-5)]);
        assert_eq!(contribution_surface(&res, 1).unwrap(), rat(3, 20));
        // brute force over the 6 double points: chi = 1, each line chi = -1
        let inv: Vec<Rat> = [2, 2, 2, -5].iter().map(|&a| int(a).recip()).collect();
        let mut brute = int(1) - inv.iter().fold(int(0), |acc, v| acc + v);
        for i in 0..4 {
            for j in i + 1..4 {
                brute += &inv[i] * &inv[j];
            }
        }
        assert_eq!(brute, rat(3, 20));
        let res = config(Preset::ThreeConcurrent, &[int(1), int(-1), int(0)]);
        assert!(matches!(contribution_surface(&res, 1), Err(Error::AlphaZero(_))));
    }

    #[test]
    fn probes() {
        let res = config(Preset::ThreeConcurrentPlusOne, &[rat(1, 2), rat(3, 2), rat(-5, 3), rat(2, 3)]);
        for probe in [Probe::FreeOnCurve(0), Probe::Crossing(0), Probe::OffCurves] {
            assert!(stability_probe(&res, probe).unwrap());
        }
        let res = config(Preset::FourGeneral, &[int(2), int(2), int(2), int(-5)]);
        for probe in [Probe::FreeOnCurve(3), Probe::Crossing(5), Probe::OffCurves] {
            assert!(stability_probe(&res, probe).unwrap());
        }
    }

    #[test]
    fn certification() {
        for preset in Preset::CANCELLING {
            let (points, zeros) = certify_identically_zero(preset);
            assert_eq!(points, zeros, "{}", preset.name());
        }
        let (points, zeros) = certify_identically_zero(Preset::FourGeneral);
        assert!(zeros < points);
    }

    #[test]
    fn table_cells() {
        use CenterKind::*;
        assert_eq!(numerical_data_3d(Point, &[], 2).unwrap(), (2, 3));
        assert_eq!(numerical_data_3d(Point, &[(4, 3)], 2).unwrap(), (6, 5));
        assert_eq!(numerical_data_3d(Point, &[(4, 3), (5, 7)], 2).unwrap(), (11, 11));
        assert_eq!(numerical_data_3d(Point, &[(4, 3), (5, 7), (1, 1)], 2).unwrap(), (12, 11));
        assert_eq!(numerical_data_3d(Curve, &[], 2).unwrap(), (2, 2));
        assert_eq!(numerical_data_3d(Curve, &[(4, 3)], 2).unwrap(), (6, 4));
        assert_eq!(numerical_data_3d(Curve, &[(4, 3), (5, 7)], 2).unwrap(), (11, 10));
        assert!(matches!(
            numerical_data_3d(Curve, &[(1, 1), (1, 1), (1, 1)], 1),
            Err(Error::InvalidThroughCount(_))
        ));
    }

    #[test]
    fn parse_line_list() {
        let lines = parse_lines("x; 2*y - z; 1/2*x+y+z").unwrap();
        assert_eq!(lines[2], Line([rat(1, 2), int(1), int(1)]));
        assert!(parse_lines("x*y").is_err());
        assert!(parse_lines("x+1").is_err());
    }
}
