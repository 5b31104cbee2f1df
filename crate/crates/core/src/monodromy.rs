//! Cycle-type statistics of specializations `f - t₀` and identification of the
//! monodromy group by comparison with exact cycle-type distributions.
//!
//! By Chebotarev, the factorization shape of `f - t₀` over F_q at a random
//! unramified t₀ follows the cycle-type distribution of the arithmetic
//! monodromy group acting on the roots.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{discriminant_pencil, factor_shape, is_square_polynomial, Poly};
use crate::sweep::map_shards;

/// A cycle type, as a partition in descending order.
pub type CycleType = Vec<usize>;

type Perm = Vec<u8>;

/// Group names in the order used for tie-breaking.
pub const GROUP_NAMES: [&str; 13] =
    ["C2", "C3", "S3", "C4", "C2xC2", "D4", "A4", "S4", "C5", "D5", "AGL1F5", "A5", "S5"];

fn canonical_name(name: &str) -> Option<&'static str> {
    let key: String = name
        .chars()
        .filter(|c| !matches!(c, ' ' | '_' | '(' | ')' | '-'))
        .map(|c| c.to_ascii_uppercase())
        .collect();
    let alias = match key.as_str() {
        "C2^2" | "C2×C2" | "V4" | "K4" => "C2XC2",
        "F20" | "AGL1F_5" | "AGL15" => "AGL1F5",
        k => k,
    };
    GROUP_NAMES.iter().copied().find(|g| g.to_ascii_uppercase() == alias)
}

/// Degree and generators (1-based cycle notation) of a named group.
fn presentation(name: &str) -> (usize, &'static [&'static [&'static [u8]]]) {
    match name {
        "C2" => (2, &[&[&[1, 2]]]),
        "C3" => (3, &[&[&[1, 2, 3]]]),
        "S3" => (3, &[&[&[1, 2, 3]], &[&[1, 2]]]),
        "C4" => (4, &[&[&[1, 2, 3, 4]]]),
        "C2xC2" => (4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]),
        "D4" => (4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]),
        "A4" => (4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]),
        "S4" => (4, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]),
        "C5" => (5, &[&[&[1, 2, 3, 4, 5]]]),
        "D5" => (5, &[&[&[1, 2, 3, 4, 5]], &[&[2, 5], &[3, 4]]]),
        "AGL1F5" => (5, &[&[&[1, 2, 3, 4, 5]], &[&[2, 3, 5, 4]]]),
        "A5" => (5, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2, 3]]]),
        "S5" => (5, &[&[&[1, 2, 3, 4, 5]], &[&[1, 2]]]),
        _ => unreachable!("names come from GROUP_NAMES"),
    }
}

fn from_cycles(n: usize, cycles: &[&[u8]]) -> Perm {
    let mut p: Perm = (0..n as u8).collect();
    for c in cycles {
        for (i, &a) in c.iter().enumerate() {
            p[a as usize - 1] = c[(i + 1) % c.len()] - 1;
        }
    }
    p
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// All elements of the group generated by `gens`.
fn closure(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = (0..n as u8).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen.into_iter().collect()
}

fn cycle_type(p: &Perm) -> CycleType {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Exact cycle-type distribution of a transitive permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceDistribution {
    pub name: &'static str,
    pub degree: usize,
    pub order: u64,
    pub probabilities: BTreeMap<CycleType, Ratio<i128>>,
}

pub fn reference_distribution(name: &str) -> Result<ReferenceDistribution> {
    let name = canonical_name(name).ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
    let (degree, gens) = presentation(name);
    let gens: Vec<Perm> = gens.iter().map(|g| from_cycles(degree, g)).collect();
    let elements = closure(degree, &gens);
    let order = elements.len() as i128;
    let mut counts: BTreeMap<CycleType, i128> = BTreeMap::new();
    for e in &elements {
        *counts.entry(cycle_type(e)).or_default() += 1;
    }
    Ok(ReferenceDistribution {
        name,
        degree,
        order: order as u64,
        probabilities: counts.into_iter().map(|(k, c)| (k, Ratio::new(c, order))).collect(),
    })
}

/// Default candidate list for a degree.
pub fn candidates_for_degree(n: usize) -> Vec<&'static str> {
    GROUP_NAMES.iter().copied().filter(|g| presentation(g).0 == n).collect()
}

/// Which specializations a census visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sample {
    All,
    /// `count` values t₀ drawn uniformly with replacement from a seeded stream.
    Random { count: u64, seed: u64 },
}

/// Factorization shapes of `f - t₀` over the sampled t₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCensus {
    pub degree: usize,
    /// Number of squarefree specializations counted.
    pub sample_size: u64,
    /// Specializations skipped because `f - t₀` had a repeated root.
    pub skipped: u64,
    pub counts: BTreeMap<CycleType, u64>,
}

impl CycleCensus {
    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "sample_size": self.sample_size,
            "skipped": self.skipped,
            "counts": self.counts.iter().map(|(k, v)| json!({"cycle_type": k, "count": v})).collect::<Vec<_>>(),
        })
    }

    fn merge(&mut self, other: CycleCensus) {
        self.sample_size += other.sample_size;
        self.skipped += other.skipped;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
    }
}

fn census_of(f: &Poly, df: &Poly, values: impl Iterator<Item = FieldElement>) -> Result<CycleCensus> {
    let mut census =
        CycleCensus { degree: f.deg(), sample_size: 0, skipped: 0, counts: BTreeMap::new() };
    for t in values {
        let g = f.sub_constant(t);
        if g.gcd(df).deg() > 0 {
            census.skipped += 1;
            continue;
        }
        census.sample_size += 1;
        *census.counts.entry(factor_shape(&g)?.partition()).or_default() += 1;
    }
    Ok(census)
}

pub fn cycle_census(f: &Poly, sample: Sample) -> Result<CycleCensus> {
    cycle_census_with(f, sample, 1)
}

pub fn cycle_census_with(f: &Poly, sample: Sample, threads: usize) -> Result<CycleCensus> {
    let n = f.deg();
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if n > 5 {
        return Err(Error::UnsupportedDegree(n));
    }
    if !f.is_separable()? {
        return Err(Error::InseparableInput);
    }
    let field = f.field();
    let df = f.derivative();
    let draws: Vec<FieldElement> = match sample {
        Sample::All => Vec::new(),
        Sample::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| FieldElement(rng.gen_range(0..field.order()))).collect()
        }
    };
    let len = match sample {
        Sample::All => field.order(),
        Sample::Random { count, .. } => {
            u32::try_from(count).map_err(|_| Error::Parse(format!("sample count {count} too large")))?
        }
    };
    let parts = map_shards(len, threads, |range| match sample {
        Sample::All => census_of(f, &df, range.map(FieldElement)),
        Sample::Random { .. } => census_of(f, &df, range.map(|i| draws[i as usize])),
    });
    let mut total = CycleCensus { degree: n, sample_size: 0, skipped: 0, counts: BTreeMap::new() };
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

/// Total-variation distance between the empirical census and a reference.
pub fn tv_distance(census: &CycleCensus, reference: &ReferenceDistribution) -> Ratio<i128> {
    let size = census.sample_size as i128;
    let keys: BTreeSet<&CycleType> = census.counts.keys().chain(reference.probabilities.keys()).collect();
    let mut sum = Ratio::from_integer(0);
    for k in keys {
        let empirical = Ratio::new(census.counts.get(k).copied().unwrap_or(0) as i128, size);
        let exact = reference.probabilities.get(k).copied().unwrap_or_else(|| Ratio::from_integer(0));
        let diff = empirical - exact;
        sum += if diff < Ratio::from_integer(0) { -diff } else { diff };
    }
    sum / 2
}

/// Result of matching a census against candidate groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub best: &'static str,
    pub distance: Ratio<i128>,
    /// Runner-up distance minus best distance, zero with a single candidate.
    pub margin: Ratio<i128>,
    pub distances: Vec<(&'static str, Ratio<i128>)>,
}

impl Identification {
    pub fn to_json(&self) -> Value {
        let r = |x: &Ratio<i128>| *x.numer() as f64 / *x.denom() as f64;
        json!({
            "best": self.best,
            "distance": r(&self.distance),
            "margin": r(&self.margin),
            "distances": self.distances.iter().map(|(g, d)| json!({"group": g, "distance": r(d)})).collect::<Vec<_>>(),
        })
    }
}

/// The candidate of the census degree closest in total variation; ties go to
/// the earlier candidate.
pub fn identify_group(census: &CycleCensus, candidates: &[&str]) -> Result<Identification> {
    if census.sample_size == 0 {
        return Err(Error::EmptyCensus);
    }
    let mut distances = Vec::new();
    for &c in candidates {
        let reference = reference_distribution(c)?;
        if reference.degree == census.degree {
            distances.push((reference.name, tv_distance(census, &reference)));
        }
    }
    if distances.is_empty() {
        return Err(Error::UnknownGroup(candidates.join(",")));
    }
    let mut order: Vec<usize> = (0..distances.len()).collect();
    order.sort_by(|&a, &b| distances[a].1.cmp(&distances[b].1).then(a.cmp(&b)));
    let (best, distance) = distances[order[0]];
    let margin = order.get(1).map_or(Ratio::from_integer(0), |&i| distances[i].1 - distance);
    Ok(Identification { best, distance, margin, distances })
}

/// Whether the geometric monodromy of a quintic lies in A_5, i.e. whether
/// `disc_X(f - t)` is a constant square times a square in F_q[t].
pub fn even_subgroup_test(f: &Poly) -> Result<bool> {
    let p = f.field().characteristic();
    if f.deg() != 5 {
        return Err(Error::WrongDegree { expected: 5, actual: f.deg() });
    }
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if p == 5 {
        return Err(Error::UnsupportedCharacteristic(5));
    }
    is_square_polynomial(&discriminant_pencil(f)?)
}
