//! Dense univariate polynomials over a [`FieldCtx`](crate::field::FieldCtx).

mod factor;
mod parse;
mod resultant;
mod roots;

pub use factor::{factor_shape, squarefree_decomposition, FactorShape};
pub use resultant::{discriminant_pencil, is_square_polynomial, resultant};
pub use roots::{count_distinct_roots, roots_of, splits_completely, SWEEP_LIMIT};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldCtx, FieldElement};

/// Polynomial with coefficients low degree first and no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    DivMod,
    Gcd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyArith {
    Single(Poly),
    Pair(Poly, Poly),
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({} over F_{})", self, self.field.spec())
    }
}

fn trim(v: &mut Vec<FieldElement>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

// Slice-level kernels shared by the Poly methods and the hot sweep loops.

pub(crate) fn mul_raw(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ctx.add(out[i + j], ctx.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Reduces `a` in place modulo a monic `m`.
pub(crate) fn rem_monic_raw(ctx: &FieldCtx, a: &mut Vec<FieldElement>, m: &[FieldElement]) {
    let dm = m.len() - 1;
    while a.len() > dm {
        let top = a.len() - 1;
        let c = a[top];
        if !c.is_zero() {
            for k in 0..dm {
                let idx = top - dm + k;
                a[idx] = ctx.sub(a[idx], ctx.mul(c, m[k]));
            }
        }
        a.pop();
    }
    trim(a);
}

pub(crate) fn mulmod_raw(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement], m: &[FieldElement]) -> Vec<FieldElement> {
    let mut prod = mul_raw(ctx, a, b);
    rem_monic_raw(ctx, &mut prod, m);
    prod
}

/// `base^e mod m` for monic `m` of positive degree.
pub(crate) fn powmod_raw(ctx: &FieldCtx, base: &[FieldElement], mut e: u64, m: &[FieldElement]) -> Vec<FieldElement> {
    let mut acc = vec![FieldElement::ONE];
    rem_monic_raw(ctx, &mut acc, m);
    let mut b = base.to_vec();
    rem_monic_raw(ctx, &mut b, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_raw(ctx, &acc, &b, m);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod_raw(ctx, &b, &b, m);
        }
    }
    acc
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Poly {
        trim(&mut coeffs);
        Poly { field: field.clone(), coeffs }
    }

    /// Coefficients given as integers, reduced into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: FieldElement) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, FieldElement::ONE)
    }

    /// The indeterminate X.
    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, FieldElement::ONE, 1)
    }

    pub fn monomial(field: &Field, c: FieldElement, exp: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; exp + 1];
        coeffs[exp] = c;
        Poly::new(field, coeffs)
    }

    /// Monic product of `X - r` over the given roots.
    pub fn from_roots(field: &Field, roots: &[FieldElement]) -> Poly {
        roots.iter().fold(Poly::one(field), |acc, &r| {
            acc.mul(&Poly::new(field, vec![field.neg(r), FieldElement::ONE]))
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of X^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&FieldElement::ONE)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if std::sync::Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn with(&self, coeffs: Vec<FieldElement>) -> Poly {
        Poly::new(&self.field, coeffs)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        self.with((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        self.with((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Poly {
        self.with(self.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.with(mul_raw(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        self.with(self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    /// `self - c` for a field constant `c`.
    pub fn sub_constant(&self, c: FieldElement) -> Poly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(FieldElement::ZERO);
        }
        coeffs[0] = self.field.sub(coeffs[0], c);
        self.with(coeffs)
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(self.field.inv(lc).expect("leading coefficient is nonzero")),
        }
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let f = &self.field;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lc_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lc_inv);
            quot[top - dd] = c;
            if c.is_zero() {
                continue;
            }
            for k in 0..=dd {
                let idx = top - dd + k;
                rem[idx] = f.sub(rem[idx], f.mul(c, divisor.coeffs[k]));
            }
        }
        rem.truncate(dd);
        Ok((self.with(quot), self.with(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient, discarding the remainder.
    pub fn quo(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.0)
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int((i % f.characteristic() as usize) as i64), c))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> Result<FieldElement> {
        if !self.field.contains(x) {
            return Err(Error::MixedFields);
        }
        Ok(self.eval_unchecked(x))
    }

    #[inline]
    pub(crate) fn eval_unchecked(&self, x: FieldElement) -> FieldElement {
        let f = &*self.field;
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// True iff the derivative is nonzero, i.e. f is not a polynomial in X^p.
    pub fn is_separable(&self) -> Result<bool> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        Ok(!self.derivative().is_zero())
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn powmod(&self, e: u64, modulus: &Poly) -> Result<Poly> {
        self.same_field(modulus)?;
        if modulus.is_constant() {
            return Err(Error::ConstantModulus);
        }
        let lc = modulus.leading();
        if lc == FieldElement::ONE {
            return Ok(self.with(powmod_raw(&self.field, &self.coeffs, e, &modulus.coeffs)));
        }
        // Reducing modulo the monic associate gives the same remainders.
        let m = modulus.monic();
        Ok(self.with(powmod_raw(&self.field, &self.coeffs, e, &m.coeffs)))
    }

    /// `f(g(X))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(&self.field), |acc, &c| acc.mul(g).add(&Poly::constant(&self.field, c)))
    }

    /// Lagrange interpolation through points with distinct abscissae.
    pub fn interpolate(field: &Field, points: &[(FieldElement, FieldElement)]) -> Result<Poly> {
        let mut out = Poly::zero(field);
        for (j, &(xj, yj)) in points.iter().enumerate() {
            let mut basis = Poly::one(field);
            let mut denom = FieldElement::ONE;
            for (l, &(xl, _)) in points.iter().enumerate() {
                if l != j {
                    basis = basis.mul(&Poly::new(field, vec![field.neg(xl), FieldElement::ONE]));
                    denom = field.mul(denom, field.sub(xj, xl));
                }
            }
            out = out.add(&basis.scale(field.div(yj, denom)?));
        }
        Ok(out)
    }

    /// Checked binary operation; quotient and remainder for `DivMod`.
    pub fn arith(&self, other: &Poly, op: PolyOp) -> Result<PolyArith> {
        self.same_field(other)?;
        Ok(match op {
            PolyOp::Add => PolyArith::Single(self.add(other)),
            PolyOp::Sub => PolyArith::Single(self.sub(other)),
            PolyOp::Mul => PolyArith::Single(self.mul(other)),
            PolyOp::Gcd => PolyArith::Single(self.gcd(other)),
            PolyOp::DivMod => {
                let (q, r) = self.div_rem(other)?;
                PolyArith::Pair(q, r)
            }
        })
    }

    /// Comma-separated coefficient list, low degree first.
    pub fn to_coeff_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|&c| self.field.format(c)).collect();
        parts.join(",")
    }

    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        parse::parse_poly(field, text)
    }
}

impl fmt::Display for Poly {
    /// Human form such as `x^5+x^3+x^2`, highest degree first.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            let coef = self.field.format(c);
            match (i, c == FieldElement::ONE) {
                (0, _) => write!(out, "{coef}")?,
                (1, true) => write!(out, "x")?,
                (1, false) => write!(out, "{coef}*x")?,
                (_, true) => write!(out, "x^{i}")?,
                (_, false) => write!(out, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}
