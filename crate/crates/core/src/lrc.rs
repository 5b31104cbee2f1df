//! Optimal locally recoverable codes from good polynomials.
//!
//! With good sets A_1, ..., A_ell of size r + 1 (fibers of f over split
//! places) and A their concatenation, a message `a = (a_ij)`, `i < r`, `j < t`
//! is encoded as the evaluations on A of
//!
//! ```text
//! f_a(X) = sum_{i<r} sum_{j<t} a_ij f(X)^j X^i.
//! ```
//!
//! f is constant on each A_i, so f_a restricted to A_i has degree below r and
//! any symbol is recovered from the other r symbols of its group.

use std::ops::Range;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::good::GoodPolyReport;
use crate::poly::Poly;
use crate::sweep::map_shards;

/// Default bound on the number of messages enumerated by
/// [`min_distance_bruteforce`].
pub const BRUTEFORCE_CAP: u128 = 10_000_000;

#[derive(Clone, Debug)]
pub struct LrcCode {
    pub field: Field,
    pub f: Poly,
    /// Locality.
    pub r: usize,
    /// Number of repair groups.
    pub ell: usize,
    pub t: usize,
    pub n: usize,
    pub k: usize,
    /// Evaluation points, group by group.
    pub points: Vec<FieldElement>,
    /// Value of f on each group.
    pub group_values: Vec<FieldElement>,
    pub groups: Vec<Range<usize>>,
}

pub fn build_code(report: &GoodPolyReport, t: usize) -> Result<LrcCode> {
    let ell = report.good_sets.len();
    if t < 1 || t > ell {
        return Err(Error::BadMessageParam { t, ell });
    }
    if report.r == 0 {
        return Err(Error::UnsupportedDegree(report.f.deg()));
    }
    let r = report.r;
    let mut points = Vec::with_capacity((r + 1) * ell);
    let mut groups = Vec::with_capacity(ell);
    for set in &report.good_sets {
        let start = points.len();
        points.extend_from_slice(&set.points);
        groups.push(start..points.len());
    }
    Ok(LrcCode {
        field: report.f.field().clone(),
        f: report.f.clone(),
        r,
        ell,
        t,
        n: (r + 1) * ell,
        k: r * t,
        points,
        group_values: report.good_sets.iter().map(|s| s.value).collect(),
        groups,
    })
}

/// A received word with an erasure mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    pub symbols: Vec<FieldElement>,
    pub erased: Vec<bool>,
}

impl Codeword {
    pub fn new(symbols: Vec<FieldElement>) -> Codeword {
        let erased = vec![false; symbols.len()];
        Codeword { symbols, erased }
    }

    /// Marks `position` erased and zeroes its symbol.
    pub fn erase(&mut self, position: usize) {
        self.erased[position] = true;
        self.symbols[position] = FieldElement::ZERO;
    }

    pub fn erasures(&self) -> Vec<usize> {
        (0..self.erased.len()).filter(|&i| self.erased[i]).collect()
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }
}

impl LrcCode {
    pub fn group_of(&self, position: usize) -> usize {
        position / (self.r + 1)
    }

    /// Message index of `a_ij`.
    pub fn message_index(&self, i: usize, j: usize) -> usize {
        i * self.t + j
    }

    pub fn encode(&self, message: &[FieldElement]) -> Result<Codeword> {
        if message.len() != self.k {
            return Err(Error::WrongMessageLength { expected: self.k, actual: message.len() });
        }
        let field = &self.field;
        let mut symbols = Vec::with_capacity(self.n);
        for (g, range) in self.groups.iter().enumerate() {
            let v = self.group_values[g];
            // c_i = sum_j a_ij v^j, then f_a(x) = sum_i c_i x^i on this group.
            let c: Vec<FieldElement> = (0..self.r)
                .map(|i| {
                    let mut acc = FieldElement::ZERO;
                    for j in (0..self.t).rev() {
                        acc = field.add(field.mul(acc, v), message[self.message_index(i, j)]);
                    }
                    acc
                })
                .collect();
            for &x in &self.points[range.clone()] {
                let mut acc = FieldElement::ZERO;
                for &ci in c.iter().rev() {
                    acc = field.add(field.mul(acc, x), ci);
                }
                symbols.push(acc);
            }
        }
        Ok(Codeword::new(symbols))
    }

    fn check_length(&self, w: &Codeword) -> Result<()> {
        if w.symbols.len() != self.n || w.erased.len() != self.n {
            return Err(Error::WrongCodewordLength { expected: self.n, actual: w.symbols.len() });
        }
        Ok(())
    }

    /// Recovers the symbol at `position` from the other r symbols of its group
    /// by Lagrange interpolation.
    pub fn repair_at(&self, w: &Codeword, position: usize) -> Result<FieldElement> {
        self.check_length(w)?;
        if position >= self.n {
            return Err(Error::WrongCodewordLength { expected: self.n, actual: position + 1 });
        }
        let field = &self.field;
        let range = self.groups[self.group_of(position)].clone();
        let helpers: Vec<usize> = range.filter(|&i| i != position).collect();
        if helpers.iter().any(|&i| w.erased[i]) {
            return Err(Error::NotLocallyRepairable { position });
        }
        let x = self.points[position];
        let mut value = FieldElement::ZERO;
        for &i in &helpers {
            let xi = self.points[i];
            let mut num = FieldElement::ONE;
            let mut den = FieldElement::ONE;
            for &j in &helpers {
                if j != i {
                    let xj = self.points[j];
                    num = field.mul(num, field.sub(x, xj));
                    den = field.mul(den, field.sub(xi, xj));
                }
            }
            value = field.add(value, field.mul(w.symbols[i], field.div(num, den)?));
        }
        Ok(value)
    }

    /// Recovers the first erased symbol of `w`.
    pub fn repair(&self, w: &Codeword) -> Result<FieldElement> {
        self.check_length(w)?;
        let position = w.erasures().first().copied().ok_or(Error::NoErasure)?;
        self.repair_at(w, position)
    }

    /// Rows are the codewords of the unit messages, in message index order.
    pub fn generator_matrix(&self) -> Vec<Vec<FieldElement>> {
        (0..self.k)
            .map(|idx| {
                let mut a = vec![FieldElement::ZERO; self.k];
                a[idx] = FieldElement::ONE;
                self.encode(&a).expect("message has length k").symbols
            })
            .collect()
    }

    /// Singleton-type bound `n - k - ceil(k/r) + 2` met by these codes.
    pub fn optimal_distance(&self) -> usize {
        self.n - self.k - self.k.div_ceil(self.r) + 2
    }

    /// Integers over prime fields, coordinate tuples `[c0;c1;...]` otherwise.
    fn csv_cell(&self, c: FieldElement) -> String {
        if self.field.degree() == 1 {
            c.code().to_string()
        } else {
            let coords: Vec<String> = self.field.coords(c).iter().map(u32::to_string).collect();
            format!("[{}]", coords.join(";"))
        }
    }

    pub fn generator_csv(&self) -> String {
        let mut out = String::new();
        for row in self.generator_matrix() {
            let cells: Vec<String> = row.iter().map(|&c| self.csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let field = &self.field;
        json!({
            "field": field.spec(),
            "poly": self.f.to_string(),
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "t": self.t,
            "ell": self.ell,
            "optimal_distance": self.optimal_distance(),
            "groups": self.groups.iter().enumerate().map(|(g, range)| json!({
                "value": field.to_json(self.group_values[g]),
                "positions": [range.start, range.end - 1],
                "points": self.points[range.clone()].iter().map(|&x| field.to_json(x)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn codeword_json(&self, w: &Codeword) -> Value {
        let field = &self.field;
        json!({
            "n": self.n,
            "coordinates": (0..w.symbols.len()).map(|i| json!({
                "index": i,
                "point": field.to_json(self.points[i]),
                "value": if w.erased[i] { Value::Null } else { field.to_json(w.symbols[i]) },
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn encode(code: &LrcCode, message: &[FieldElement]) -> Result<Codeword> {
    code.encode(message)
}

pub fn repair(code: &LrcCode, w: &Codeword) -> Result<FieldElement> {
    code.repair(w)
}

/// Rank over F_q by Gaussian elimination.
pub fn matrix_rank(field: &Field, rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = field.inv(m[rank][c]).expect("pivot is nonzero");
        for x in m[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let factor = m[i][c];
                for j in c..cols {
                    let sub = field.mul(factor, m[rank][j]);
                    m[i][j] = field.sub(m[i][j], sub);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn min_distance_bruteforce(code: &LrcCode) -> Result<usize> {
    min_distance_bruteforce_with(code, BRUTEFORCE_CAP, 1)
}

/// Minimum weight of a nonzero codeword, enumerating all `q^k` messages.
///
/// The most significant message digit is sharded across threads; inside a
/// shard an odometer walks the remaining digits, updating the codeword by one
/// scaled generator row per step.
pub fn min_distance_bruteforce_with(code: &LrcCode, cap: u128, threads: usize) -> Result<usize> {
    let field = &code.field;
    let q = field.order();
    let size = (q as u128).checked_pow(code.k as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    let rows = code.generator_matrix();
    let k = code.k;
    let n = code.n;
    let top = &rows[k - 1];
    let lower = &rows[..k - 1];
    let best = map_shards(q, threads, |range| {
        let mut best = usize::MAX;
        for lead in range {
            let lead = FieldElement(lead);
            let mut cur: Vec<FieldElement> = top.iter().map(|&g| field.mul(lead, g)).collect();
            let mut digits = vec![0u32; k - 1];
            loop {
                if !(lead.is_zero() && digits.iter().all(|&d| d == 0)) {
                    best = best.min(cur.iter().filter(|s| !s.is_zero()).count());
                }
                // Odometer step.
                let mut d = 0;
                loop {
                    if d == k - 1 {
                        break;
                    }
                    let old = FieldElement(digits[d]);
                    let next = if digits[d] + 1 == q { 0 } else { digits[d] + 1 };
                    let delta = field.sub(FieldElement(next), old);
                    for c in 0..n {
                        cur[c] = field.add(cur[c], field.mul(delta, lower[d][c]));
                    }
                    digits[d] = next;
                    if next != 0 {
                        break;
                    }
                    d += 1;
                }
                if d == k - 1 {
                    break;
                }
            }
        }
        best
    });
    Ok(best.into_iter().min().unwrap_or(usize::MAX))
}
