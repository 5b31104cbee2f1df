//! Good polynomials: minimal monodromy orders, witnesses achieving them, and
//! the totally split places that become repair groups of a code.
//!
//! A value t₀ is a totally split place of f when `f - t₀` has `deg f`
//! distinct roots in F_q. The root sets of f - t₀ over distinct split places
//! are pairwise disjoint sets of size `deg f` on which f is constant.

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{div_ceil, div_floor, isqrt, prime_power};
use crate::error::{Error, Result};
use crate::field::{smallest_irreducible, Field, FieldElement};
use crate::poly::{powmod_raw, Poly};
use crate::sweep::map_shards;

/// The minimal arithmetic/geometric monodromy group for degree n over F_q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonodromyClass {
    pub n: usize,
    pub group_order: u64,
    pub group_name: String,
}

impl MonodromyClass {
    fn new(n: usize, group_order: u64, group_name: &str) -> Self {
        MonodromyClass { n, group_order, group_name: group_name.to_string() }
    }
}

fn field_params(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or(Error::NotPrimePower(q))
}

/// G_n(q) with the group realizing it, for 2 <= n <= 5.
pub fn classify_gn(n: usize, q: u64) -> Result<MonodromyClass> {
    let (p, m) = field_params(q)?;
    Ok(match n {
        2 => MonodromyClass::new(2, 2, "C2"),
        3 if q % 3 == 0 || q % 3 == 1 => MonodromyClass::new(3, 3, "C3"),
        3 => MonodromyClass::new(3, 6, "S3"),
        4 if q == 2 => MonodromyClass::new(4, 24, "S4"),
        4 if p == 2 && m > 1 => MonodromyClass::new(4, 4, "C2xC2"),
        4 if q % 4 == 1 => MonodromyClass::new(4, 4, "C4"),
        4 => MonodromyClass::new(4, 8, "D4"),
        5 if q % 5 == 0 || q % 5 == 1 => MonodromyClass::new(5, 5, "C5"),
        5 if q % 5 == 4 => MonodromyClass::new(5, 10, "D5"),
        5 => MonodromyClass::new(5, 120, "S5"),
        _ => return Err(Error::UnsupportedDegree(n)),
    })
}

/// A degree-n polynomial over `field` whose monodromy realizes `classify_gn(n, q)`.
pub fn construct_witness(n: usize, field: &Field) -> Result<Poly> {
    if !(2..=5).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    let q = field.order() as u64;
    let p = field.characteristic() as u64;
    let monomial = |e: usize| Poly::monomial(field, FieldElement::ONE, e);
    // X^2 * g with g the smallest irreducible of degree n - 2 over F_p.
    let symmetric = || -> Result<Poly> {
        let g = if n == 3 {
            Poly::from_ints(field, &[1, 1])
        } else {
            let coeffs = smallest_irreducible(p as u32, n - 2)?;
            Poly::new(field, coeffs.iter().map(|&c| field.from_int(c as i64)).collect())
        };
        Ok(monomial(2).mul(&g))
    };
    if q == 2 && n == 4 {
        return symmetric();
    }
    if (q - 1) % n as u64 == 0 {
        return Ok(monomial(n));
    }
    if p == n as u64 {
        return Ok(monomial(n).sub(&monomial(1)));
    }
    match n {
        4 if p == 2 => {
            let alphas = additive_triple(field);
            let roots = [FieldElement::ZERO, alphas[0], alphas[1], alphas[2]];
            Ok(Poly::from_roots(field, &roots))
        }
        4 => Ok(Poly::from_ints(field, &[0, 0, 1, 0, 1])),
        5 if q % 5 == 4 => Ok(Poly::from_ints(field, &[0, 5, 0, -5, 0, 1])),
        _ => symmetric(),
    }
}

/// Smallest triple (in element order) of distinct nonzero elements summing to
/// zero, for F_q of characteristic 2 with q > 2.
fn additive_triple(field: &Field) -> [FieldElement; 3] {
    let q = field.order();
    for a in 1..q {
        for b in a + 1..q {
            let c = field.add(FieldElement(a), FieldElement(b));
            if c.code() > b {
                return [FieldElement(a), FieldElement(b), c];
            }
        }
    }
    unreachable!("F_q with q > 2 even contains such a triple")
}

/// How totally split places are counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SplitMethod {
    /// Evaluate f on every element and count values hit exactly deg f times.
    #[default]
    FiberTally,
    /// For every t₀ compute `X^q mod (f - t₀)` and test `deg gcd = deg f`.
    RootCount,
}

fn check_separable(f: &Poly) -> Result<()> {
    if !f.is_separable()? {
        return Err(Error::InseparableInput);
    }
    Ok(())
}

/// Value of f at every element, in element order.
fn evaluate_all(f: &Poly, threads: usize) -> Vec<FieldElement> {
    let q = f.field().order();
    map_shards(q, threads, |range| range.map(|x| f.eval_unchecked(FieldElement(x))).collect::<Vec<_>>()).concat()
}

/// Number of preimages of each value, saturating at 255.
fn fiber_sizes(values: &[FieldElement], q: u32) -> Vec<u8> {
    let mut sizes = vec![0u8; q as usize];
    for v in values {
        let s = &mut sizes[v.code() as usize];
        *s = s.saturating_add(1);
    }
    sizes
}

/// `|{t₀ ∈ F_q : f - t₀ splits into deg f distinct linear factors}|`.
pub fn count_split_places(f: &Poly) -> Result<u64> {
    count_split_places_with(f, SplitMethod::FiberTally, 1)
}

pub fn count_split_places_with(f: &Poly, method: SplitMethod, threads: usize) -> Result<u64> {
    check_separable(f)?;
    let field = f.field();
    let q = field.order();
    let n = f.deg();
    match method {
        SplitMethod::FiberTally => {
            if n > u8::MAX as usize {
                return Err(Error::UnsupportedDegree(n));
            }
            let sizes = fiber_sizes(&evaluate_all(f, threads), q);
            Ok(sizes.iter().filter(|&&s| s as usize == n).count() as u64)
        }
        SplitMethod::RootCount => {
            let monic = f.monic();
            let lc_inv = field.inv(f.leading())?;
            let partial = map_shards(q, threads, |range| {
                let mut g = monic.coeffs().to_vec();
                let x = [FieldElement::ZERO, FieldElement::ONE];
                let mut hits = 0u64;
                for t in range {
                    // Monic associate of f - t₀.
                    g[0] = field.sub(monic.coeff(0), field.mul(FieldElement(t), lc_inv));
                    let h = powmod_raw(field, &x, q as u64, &g);
                    let gp = Poly::new(field, g.clone());
                    let lin = gp.gcd(&Poly::new(field, h).sub(&Poly::x(field)));
                    if lin.deg() == n {
                        hits += 1;
                    }
                }
                hits
            });
            Ok(partial.into_iter().sum())
        }
    }
}

/// A split place t₀ with its root set, on which f takes the value t₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodSet {
    pub value: FieldElement,
    pub points: Vec<FieldElement>,
}

/// Integer bounds on the number of totally split places.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitBounds {
    pub lower: i64,
    pub upper: i64,
}

impl SplitBounds {
    pub fn contains(&self, count: u64) -> bool {
        self.lower <= count as i64 && count as i64 <= self.upper
    }
}

/// A polynomial with its extracted good sets.
#[derive(Clone, Debug)]
pub struct GoodPolyReport {
    pub f: Poly,
    /// Locality, `deg f - 1`.
    pub r: usize,
    /// Number of good sets in `good_sets`.
    pub ell: usize,
    /// Total number of split places (equals `ell` unless truncated).
    pub split_places: u64,
    pub good_sets: Vec<GoodSet>,
    pub bounds: Option<SplitBounds>,
}

impl GoodPolyReport {
    pub fn with_bounds(mut self, bounds: SplitBounds) -> Self {
        self.bounds = Some(bounds);
        self
    }

    pub fn to_json(&self) -> Value {
        let field = self.f.field();
        json!({
            "poly": self.f.to_string(),
            "r": self.r,
            "ell": self.ell,
            "split_places": self.split_places,
            "bounds": self.bounds,
            "good_sets": self.good_sets.iter().map(|g| json!({
                "value": field.to_json(g.value),
                "points": g.points.iter().map(|&x| field.to_json(x)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Root sets of `f - t₀` over the split places t₀, in element order of t₀,
/// truncated to `max_sets`.
pub fn extract_good_sets(f: &Poly, max_sets: Option<usize>) -> Result<GoodPolyReport> {
    extract_good_sets_with(f, max_sets, 1)
}

pub fn extract_good_sets_with(f: &Poly, max_sets: Option<usize>, threads: usize) -> Result<GoodPolyReport> {
    check_separable(f)?;
    let field = f.field();
    let q = field.order();
    let n = f.deg();
    if n > u8::MAX as usize {
        return Err(Error::UnsupportedDegree(n));
    }
    let values = evaluate_all(f, threads);
    let sizes = fiber_sizes(&values, q);
    let split: Vec<u32> = (0..q).filter(|&t| sizes[t as usize] as usize == n).collect();
    let keep = max_sets.map_or(split.len(), |m| m.min(split.len()));
    let mut slot = vec![u32::MAX; q as usize];
    for (i, &t) in split[..keep].iter().enumerate() {
        slot[t as usize] = i as u32;
    }
    let mut good_sets: Vec<GoodSet> = split[..keep]
        .iter()
        .map(|&t| GoodSet { value: FieldElement(t), points: Vec::with_capacity(n) })
        .collect();
    for (x, v) in values.iter().enumerate() {
        let s = slot[v.code() as usize];
        if s != u32::MAX {
            good_sets[s as usize].points.push(FieldElement(x as u32));
        }
    }
    Ok(GoodPolyReport {
        f: f.clone(),
        r: n - 1,
        ell: good_sets.len(),
        split_places: split.len() as u64,
        good_sets,
        bounds: None,
    })
}

/// Upper bound on the genus of the splitting field of `f - t` for a degree-n
/// f with monodromy of the given order, valid when the ramification is tame.
pub fn genus_bound(n: usize, group_order: u64, q: u64) -> Result<u64> {
    let (p, _) = field_params(q)?;
    if group_order % p == 0 {
        return Err(Error::WildRamificationUnsupported { p: p as u32, order: group_order });
    }
    if n == 5 && (group_order == 5 || group_order == 10) {
        return Ok(0);
    }
    if n == 5 && group_order == 120 && q % 2 != 0 && q % 3 != 0 && q % 5 != 0 {
        return Ok(36);
    }
    Ok(((n as u64).saturating_sub(2) * group_order + 2) / 2)
}

/// Window `[(q+1-2g√q)/|G| - n/2, (q+1+2g√q)/|G|]` rounded outward to integers.
///
/// `2g√q = √(4g²q)` is replaced by the ceiling of that square root, so the
/// integer interval always contains the exact real one.
pub fn split_bounds(q: u64, group_order: u64, genus: u64, n: usize) -> SplitBounds {
    let radicand = 4 * (genus as u128) * (genus as u128) * q as u128;
    let root = isqrt(radicand);
    let weil = if root * root == radicand { root } else { root + 1 } as i128;
    let (q, g, n) = (q as i128, group_order as i128, n as i128);
    SplitBounds {
        lower: div_ceil(2 * (q + 1 - weil) - n * g, 2 * g) as i64,
        upper: div_floor(q + 1 + weil, g) as i64,
    }
}

/// The S_5 quintic window, genus constant 36.
pub fn s5_quintic_window(q: u64) -> SplitBounds {
    split_bounds(q, 120, 36, 5)
}

/// Bounds for a witness of class `class` over F_q when the genus bound applies.
pub fn witness_bounds(class: &MonodromyClass, q: u64) -> Option<SplitBounds> {
    genus_bound(class.n, class.group_order, q)
        .ok()
        .map(|g| split_bounds(q, class.group_order, g, class.n))
}

/// The value `f(x)` for every x in `points`.
pub fn fiber_values(f: &Poly, points: &[FieldElement]) -> Vec<FieldElement> {
    points.iter().map(|&x| f.eval_unchecked(x)).collect()
}
