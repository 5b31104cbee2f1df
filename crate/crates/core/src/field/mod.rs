//! Exact arithmetic in F_{p^m}.
//!
//! Elements are stored as the integer code `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! of their coordinate vector in the polynomial basis `1, x, ..., x^{m-1}` of
//! `F_p[x] / (modulus)`. The code is canonical, so equality of elements is
//! equality of codes, and enumerating codes `0..q` is the fixed element order
//! used everywhere a deterministic order matters.
//!
//! For p = 2 the code is the packed bit vector of the coordinates. Extension
//! fields up to [`TABLE_LIMIT`] elements get log/antilog tables for
//! multiplication and inversion.

mod irreducible;

pub use irreducible::{is_irreducible_over_prime, smallest_irreducible};

use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::arith::{is_prime, prime_factors, prime_power};
use crate::error::{Error, Result};

/// Extension fields with at most this many elements precompute log tables.
pub const TABLE_LIMIT: u32 = 1 << 22;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 31;

/// Shared handle to a field context.
pub type Field = Arc<FieldCtx>;

/// An element of a finite field, identified by its canonical code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The canonical integer code (coordinate vector read as base-p digits, low first).
    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

#[derive(Debug)]
enum Repr {
    Prime,
    /// Modulus packed as bits, including the leading x^m bit.
    Binary { modulus_bits: u64 },
    /// Powers p^0..p^m.
    Odd { place: Vec<u32> },
}

#[derive(Debug)]
struct LogTables {
    log: Vec<u32>,
    /// exp[i] = g^i for i in 0..2(q-1), so a sum of two logs needs no reduction.
    exp: Vec<u32>,
}

/// The finite field F_q with q = p^m, immutable after construction.
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    repr: Repr,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// Builds F_{p^m}. With `m > 1` and no modulus, the smallest monic irreducible
/// of degree m (ordered by its coefficient code, low coefficient least
/// significant) is selected.
pub fn make_field(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NonPrimeCharacteristic(p));
    }
    if m == 0 {
        return Err(Error::ZeroExtensionDegree);
    }
    let q = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
    if q > MAX_ORDER as u128 {
        return Err(Error::FieldTooLarge(q));
    }
    let p = p as u32;
    if m == 1 {
        if let Some(md) = modulus {
            // A degree-1 monic modulus is allowed and ignored.
            if md.len() != 2 || md[1] % p as u64 != 1 {
                return Err(Error::BadModulus { expected: 1 });
            }
        }
        return Ok(Arc::new(FieldCtx::prime(p)));
    }
    let modulus: Vec<u32> = match modulus {
        Some(md) => {
            if md.len() != m as usize + 1 || md[m as usize] % p as u64 != 1 {
                return Err(Error::BadModulus { expected: m });
            }
            let md: Vec<u32> = md.iter().map(|&c| (c % p as u64) as u32).collect();
            if !is_irreducible_over_prime(p, &md)? {
                return Err(Error::ReducibleModulus);
            }
            md
        }
        None => smallest_irreducible(p, m as usize)?,
    };
    Ok(Arc::new(FieldCtx::extension(p, m, modulus)))
}

/// Parses a field spec `"p^m"` or `"q"` and builds the field.
pub fn parse_field(spec: &str, modulus: Option<&[u64]>) -> Result<Field> {
    let spec = spec.trim();
    let (p, m) = match spec.split_once('^') {
        Some((p, m)) => {
            let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad field spec {spec:?}")))?;
            let m: u32 = m.trim().parse().map_err(|_| Error::Parse(format!("bad field spec {spec:?}")))?;
            (p, m)
        }
        None => {
            let q: u64 = spec.parse().map_err(|_| Error::Parse(format!("bad field spec {spec:?}")))?;
            prime_power(q).ok_or(Error::NotPrimePower(q))?
        }
    };
    make_field(p, m, modulus)
}

impl FieldCtx {
    fn prime(p: u32) -> Self {
        FieldCtx { p, m: 1, q: p, modulus: None, repr: Repr::Prime, tables: None }
    }

    fn extension(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(m);
        let repr = if p == 2 {
            let bits = modulus.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i));
            Repr::Binary { modulus_bits: bits }
        } else {
            Repr::Odd { place: (0..=m).map(|i| p.pow(i)).collect() }
        };
        let mut ctx = FieldCtx { p, m, q, modulus: Some(modulus), repr, tables: None };
        if q <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        ctx
    }

    fn build_tables(&self) -> LogTables {
        let q = self.q;
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let g = (2..q)
            .map(FieldElement)
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, order / r) != FieldElement::ONE))
            .expect("multiplicative group of a finite field is cyclic");
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut acc = FieldElement::ONE;
        for i in 0..n {
            exp[i] = acc.0;
            exp[i + n] = acc.0;
            log[acc.0 as usize] = i as u32;
            acc = self.mul_slow(acc, g);
        }
        LogTables { log, exp }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Defining modulus (low coefficient first, monic), present iff m > 1.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    /// Human-readable spec, `"p"` for prime fields and `"p^m"` otherwise.
    pub fn spec(&self) -> String {
        if self.m == 1 {
            self.p.to_string()
        } else {
            format!("{}^{}", self.p, self.m)
        }
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element with the given code; fails if the code is not below q.
    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if code < self.q as u64 {
            Ok(FieldElement(code as u32))
        } else {
            Err(Error::MixedFields)
        }
    }

    #[inline]
    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// Element from its coordinates in the polynomial basis (low first).
    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElement> {
        if coords.len() > self.m as usize {
            return Err(Error::Parse(format!(
                "element has {} coordinates, field degree is {}",
                coords.len(),
                self.m
            )));
        }
        let mut code = 0u64;
        for &c in coords.iter().rev() {
            code = code * self.p as u64 + c % self.p as u64;
        }
        Ok(FieldElement(code as u32))
    }

    /// Coordinates in the polynomial basis, length m.
    pub fn coords(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    /// All q elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    pub fn enumerate_elements(&self) -> Vec<FieldElement> {
        self.elements().collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.repr {
            Repr::Prime => {
                let s = a.0 + b.0;
                FieldElement(if s >= self.p { s - self.p } else { s })
            }
            Repr::Binary { .. } => FieldElement(a.0 ^ b.0),
            Repr::Odd { .. } => {
                let p = self.p;
                let (mut x, mut y) = (a.0, b.0);
                let mut out = 0u32;
                let mut place = 1u32;
                while x != 0 || y != 0 {
                    let s = x % p + y % p;
                    out += (if s >= p { s - p } else { s }) * place;
                    x /= p;
                    y /= p;
                    place = place.wrapping_mul(p);
                }
                FieldElement(out)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.repr {
            Repr::Prime => FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 }),
            Repr::Binary { .. } => a,
            Repr::Odd { .. } => {
                let p = self.p;
                let mut x = a.0;
                let mut out = 0u32;
                let mut place = 1u32;
                while x != 0 {
                    let c = x % p;
                    out += (if c == 0 { 0 } else { p - c }) * place;
                    x /= p;
                    place = place.wrapping_mul(p);
                }
                FieldElement(out)
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.repr {
            Repr::Prime => FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 }),
            Repr::Binary { .. } => FieldElement(a.0 ^ b.0),
            Repr::Odd { .. } => self.add(a, self.neg(b)),
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if let Repr::Prime = self.repr {
            return FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    FieldElement::ZERO
                } else {
                    FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
                }
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Multiplication straight from the polynomial-basis definition.
    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.repr {
            Repr::Prime => FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32),
            Repr::Binary { modulus_bits } => {
                let (x, y) = (a.0 as u64, b.0 as u64);
                let mut prod = 0u64;
                for i in 0..self.m {
                    if (y >> i) & 1 == 1 {
                        prod ^= x << i;
                    }
                }
                let m = self.m;
                for i in (m..2 * m - 1).rev() {
                    if (prod >> i) & 1 == 1 {
                        prod ^= modulus_bits << (i - m);
                    }
                }
                FieldElement(prod as u32)
            }
            Repr::Odd { place } => {
                let p = self.p as u64;
                let m = self.m as usize;
                let ca = self.coords(a);
                let cb = self.coords(b);
                let mut prod = vec![0u64; 2 * m - 1];
                for (i, &x) in ca.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] += x as u64 * y as u64;
                    }
                }
                let modulus = self.modulus.as_ref().expect("extension field has a modulus");
                for i in (m..2 * m - 1).rev() {
                    let c = prod[i] % p;
                    if c == 0 {
                        continue;
                    }
                    // x^i = x^{i-m} * x^m and x^m = -(modulus without its leading term).
                    for (k, &mk) in modulus[..m].iter().enumerate() {
                        prod[i - m + k] += c * (p - mk as u64);
                    }
                    prod[i] = 0;
                }
                let code = prod[..m].iter().zip(place).map(|(&c, &pl)| (c % p) as u32 * pl).sum();
                FieldElement(code)
            }
        }
    }

    fn pow_slow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let e = e % (self.q as u64 - 1);
        if let Some(t) = &self.tables {
            let l = (t.log[a.0 as usize] as u64 * e) % (self.q as u64 - 1);
            return FieldElement(t.exp[l as usize]);
        }
        let mut base = a;
        let mut acc = FieldElement::ONE;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let Repr::Prime = self.repr {
            // Extended Euclid on (a, p).
            let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
            let (mut s0, mut s1) = (0i64, 1i64);
            while r1 != 0 {
                let k = r0 / r1;
                (r0, r1) = (r1, r0 - k * r1);
                (s0, s1) = (s1, s0 - k * s1);
            }
            return Ok(FieldElement(s0.rem_euclid(self.p as i64) as u32));
        }
        if let Some(t) = &self.tables {
            let l = t.log[a.0 as usize];
            let n = self.q - 1;
            return Ok(FieldElement(t.exp[((n - l) % n) as usize]));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Checked arithmetic: both operands must be elements of this field.
    pub fn arith(&self, a: FieldElement, b: FieldElement, kind: ArithKind) -> Result<FieldElement> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::MixedFields);
        }
        Ok(match kind {
            ArithKind::Add => self.add(a, b),
            ArithKind::Sub => self.sub(a, b),
            ArithKind::Mul => self.mul(a, b),
        })
    }

    /// `a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// Quadratic character test for odd q: true for zero and nonzero squares.
    pub fn is_square(&self, a: FieldElement) -> Result<bool> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        Ok(a.is_zero() || self.pow(a, (self.q as u64 - 1) / 2) == FieldElement::ONE)
    }

    /// Unique p-th root (Frobenius is an automorphism): `a^(q/p)`.
    pub fn pth_root(&self, a: FieldElement) -> FieldElement {
        self.pow(a, (self.q / self.p) as u64)
    }

    /// Text form: an integer for prime-subfield elements, otherwise the
    /// coordinate vector as `[c0;c1;...]`.
    pub fn format(&self, a: FieldElement) -> String {
        if a.0 < self.p {
            a.0.to_string()
        } else {
            let parts: Vec<String> = self.coords(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(";"))
        }
    }

    /// JSON form: an integer for prime fields, the coordinate array otherwise.
    pub fn to_json(&self, a: FieldElement) -> Value {
        if self.m == 1 {
            Value::from(a.0)
        } else {
            Value::from(self.coords(a))
        }
    }

    /// Parses an integer (reduced into the prime subfield) or `[c0;c1;...]`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coords = inner
                .split([';', ':', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad coordinate {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            return self.from_coords(&coords);
        }
        let n: i64 = s.parse().map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
        Ok(self.from_int(n))
    }

    /// JSON description of the field, including the modulus in use.
    pub fn describe(&self) -> Value {
        serde_json::json!({
            "spec": self.spec(),
            "p": self.p,
            "m": self.m,
            "q": self.q,
            "modulus": self.modulus,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(ctx: &FieldCtx, coords: &[u64]) -> FieldElement {
        ctx.from_coords(coords).unwrap()
    }

    #[test]
    fn prime_field_examples() {
        let f5 = make_field(5, 1, None).unwrap();
        assert_eq!(f5.add(FieldElement(2), FieldElement(4)), FieldElement(1));
        let f7 = make_field(7, 1, None).unwrap();
        assert_eq!(f7.mul(FieldElement(3), FieldElement(5)), FieldElement(1));
        assert_eq!(f7.inv(FieldElement(3)).unwrap(), FieldElement(5));
        assert_eq!(f7.pow(FieldElement(3), 6), FieldElement::ONE);
        assert_eq!(f7.pow(FieldElement(3), 0), FieldElement::ONE);
        assert_eq!(f7.pow(FieldElement(0), 0), FieldElement::ONE);
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(f2.inv(FieldElement(1)).unwrap(), FieldElement(1));
        assert!(f2.modulus().is_none());
    }

    #[test]
    fn f4_examples() {
        let f4 = make_field(2, 2, Some(&[1, 1, 1])).unwrap();
        let x = fe(&f4, &[0, 1]);
        assert_eq!(f4.mul(x, x), fe(&f4, &[1, 1]));
        assert_eq!(f4.inv(x).unwrap(), fe(&f4, &[1, 1]));
        assert_eq!(f4.enumerate_elements().len(), 4);
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1, None).unwrap_err(), Error::NonPrimeCharacteristic(4));
        assert_eq!(make_field(2, 2, Some(&[1, 0, 1])).unwrap_err(), Error::ReducibleModulus);
        let f7 = make_field(7, 1, None).unwrap();
        assert_eq!(f7.inv(FieldElement::ZERO).unwrap_err(), Error::ZeroInverse);
        assert_eq!(f7.arith(FieldElement(9), FieldElement(1), ArithKind::Add).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn default_modulus_f8192() {
        let f = make_field(2, 13, None).unwrap();
        let md: Vec<u64> = f.modulus().unwrap().iter().map(|&c| c as u64).collect();
        assert!(is_irreducible_over_prime(2, f.modulus().unwrap()).unwrap());
        assert_eq!(md.len(), 14);
        assert_eq!(f.order(), 8192);
        // Lagrange: g^(q-1) = 1 for 100 nonzero elements.
        for code in (1..8192u64).step_by(81).take(100) {
            let g = f.element(code).unwrap();
            assert_eq!(f.pow(g, 8191), FieldElement::ONE);
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        for (p, m) in [(2u64, 5u32), (3, 4), (5, 3), (7, 2)] {
            let f = make_field(p, m, None).unwrap();
            for a in f.elements() {
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn enumeration_is_distinct() {
        let f = make_field(3, 7, None).unwrap();
        let all = f.enumerate_elements();
        assert_eq!(all.len(), 2187);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), 2187);
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(f3.enumerate_elements(), vec![FieldElement(0), FieldElement(1), FieldElement(2)]);
    }

    #[test]
    fn parse_and_format() {
        let f = parse_field("3^2", None).unwrap();
        let a = f.parse_element("[1;2]").unwrap();
        assert_eq!(f.coords(a), vec![1, 2]);
        assert_eq!(f.format(a), "[1;2]");
        assert_eq!(f.parse_element("-1").unwrap(), FieldElement(2));
        assert_eq!(parse_field("19597", None).unwrap().order(), 19597);
        assert_eq!(parse_field("12", None).unwrap_err(), Error::NotPrimePower(12));
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(make_field(13, 1, None).unwrap()),
            Just(make_field(2, 8, None).unwrap()),
            Just(make_field(3, 5, None).unwrap()),
            Just(make_field(5, 2, None).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let q = f.order();
            let (a, b, c) = (FieldElement(a % q), FieldElement(b % q), FieldElement(c % q));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.zero()), a);
            prop_assert_eq!(f.mul(a, f.one()), a);
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            // Frobenius is a ring homomorphism.
            prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
            if !a.is_zero() {
                let ai = f.inv(a).unwrap();
                prop_assert_eq!(f.mul(a, ai), f.one());
                prop_assert_eq!(f.inv(ai).unwrap(), a);
            }
        }
    }
}
