//! Sample germs: the worked families plus seeded random germs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BiPoly, Rat};
use crate::error::{Error, Result};
use crate::germ::{germ_localize_with_source, parse_germ, FactoredGerm};
use crate::resolution::{resolve_germ, ResolutionGraph};

/// Default seed of every randomized suite.
pub const DEFAULT_SEED: u64 = 0x2E7A_5EED;

/// Random germs kept in the default corpus.
pub const DEFAULT_RANDOM_COUNT: usize = 120;

/// Total degree bound of random germs.
pub const MAX_RANDOM_DEGREE: u32 = 8;

#[derive(Debug, Clone)]
pub struct CorpusGerm {
    pub label: String,
    pub germ: FactoredGerm,
    pub graph: ResolutionGraph,
}

impl CorpusGerm {
    pub fn multiplicity(&self) -> u32 {
        self.germ.multiplicity()
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub seed: u64,
    pub germs: Vec<CorpusGerm>,
    /// Germs the engine declined, with the reason.
    pub skipped: Vec<(String, String)>,
    /// Number of random germs among `germs`.
    pub random_count: usize,
}

/// Texts of the worked family germs.
pub fn family_texts() -> Vec<String> {
    let mut out: Vec<String> = (2..=16).map(|k| format!("y^2+x^{k}")).collect();
    out.push("x*y*(x+y)".into());
    out.push("y^3+x*y^2".into());
    out.extend((4..=12).map(|k| format!("y^3+x*y^2+x^{k}")));
    out.extend(["y^3+x^4", "y^3+y*x^3", "y^3+x^5"].map(String::from));
    out.extend((5..=16).map(|k| format!("x^3*y^2+x^{k}")));
    out
}

fn small_coeff(rng: &mut ChaCha8Rng) -> Rat {
    let c: i64 = *[-3, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
    Rat::from_integer(c.into())
}

/// One factor vanishing at the origin, with its total degree at most
/// `budget`.
fn random_block(rng: &mut ChaCha8Rng, budget: u32) -> BiPoly {
    let swap = rng.gen_bool(0.5);
    let block = match rng.gen_range(0..4) {
        0 => BiPoly::from_terms([((1, 0), small_coeff(rng)), ((0, 1), small_coeff(rng))]),
        1 if budget >= 2 => {
            // y^p + c x^q
            let p = rng.gen_range(1..=budget.min(4));
            let q = rng.gen_range(1..=budget);
            BiPoly::from_terms([((0, p), Rat::from_integer(1.into())), ((q, 0), small_coeff(rng))])
        }
        2 if budget >= 2 => {
            // y - c x^m, a branch tangent to the x-axis
            let m = rng.gen_range(2..=budget);
            BiPoly::from_terms([((0, 1), Rat::from_integer(1.into())), ((m, 0), small_coeff(rng))])
        }
        _ => {
            // a few monomials of degree at least 2
            let low = budget.min(2);
            let count = rng.gen_range(2..=4);
            let mut p = BiPoly::zero();
            for _ in 0..count {
                let d = rng.gen_range(low..=budget);
                let i = rng.gen_range(0..=d);
                p.add_term((i, d - i), small_coeff(rng));
            }
            if p.is_zero() {
                BiPoly::y()
            } else {
                p
            }
        }
    };
    if swap {
        block.swap_variables()
    } else {
        block
    }
}

/// A random product of one to three blocks of total degree at most
/// `MAX_RANDOM_DEGREE`.
pub fn random_germ_poly(rng: &mut ChaCha8Rng) -> BiPoly {
    let blocks = rng.gen_range(1..=3);
    let mut budget = MAX_RANDOM_DEGREE;
    let mut p = BiPoly::one();
    for k in 0..blocks {
        let reserve = (blocks - k - 1) as u32;
        if budget <= reserve {
            break;
        }
        let block = random_block(rng, (budget - reserve).min(6));
        let degree = block.total_degree().unwrap_or(0);
        budget -= degree.min(budget);
        let power = if degree * 2 <= budget && rng.gen_bool(0.2) { 2 } else { 1 };
        if power == 2 {
            budget -= degree;
        }
        p = p * block.pow(power);
    }
    p
}

fn try_resolve(label: String, germ: Result<FactoredGerm>) -> std::result::Result<CorpusGerm, (String, String)> {
    let germ = germ.map_err(|e| (label.clone(), e.to_string()))?;
    match resolve_germ(&germ) {
        Ok(graph) => Ok(CorpusGerm { label, germ, graph }),
        Err(e) => Err((label, e.to_string())),
    }
}

/// Family germs followed by `random_count` resolvable random germs.
/// Random candidates the engine declines are counted in `skipped`.
pub fn build_corpus(seed: u64, random_count: usize) -> Result<Corpus> {
    let mut germs = Vec::new();
    for text in family_texts() {
        let germ = try_resolve(text.clone(), parse_germ(&text)).map_err(|(l, e)| {
            Error::InvalidArgument(format!("family germ {l} failed: {e}"))
        })?;
        germs.push(germ);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut skipped = Vec::new();
    let mut kept = 0;
    while kept < random_count {
        let poly = random_germ_poly(&mut rng);
        let label = poly.to_expr();
        match try_resolve(label.clone(), germ_localize_with_source(&poly, &label)) {
            Ok(g) => {
                germs.push(g);
                kept += 1;
            }
            Err(skip) => skipped.push(skip),
        }
    }
    Ok(Corpus {
        seed,
        germs,
        skipped,
        random_count,
    })
}
