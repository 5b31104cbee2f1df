//! Irreducibility over prime fields, used to validate and pick field moduli.

use std::sync::Arc;

use super::{FieldCtx, FieldElement};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// True iff the monic polynomial `coeffs` (low first, entries in 0..p) is
/// irreducible over F_p: no factor of degree d <= deg/2, checked by
/// `gcd(f, X^{p^d} - X) = 1` for each such d.
pub fn is_irreducible_over_prime(p: u32, coeffs: &[u32]) -> Result<bool> {
    let fp = Arc::new(FieldCtx::prime(p));
    let f = Poly::new(&fp, coeffs.iter().map(|&c| FieldElement(c % p)).collect());
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let n = f.deg();
    if n == 1 {
        return Ok(true);
    }
    if f.coeff(0).is_zero() {
        return Ok(false);
    }
    let x = Poly::x(&fp);
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.powmod(p as u64, &f)?;
        if f.gcd(&h.sub(&x)).deg() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest monic irreducible of degree `m` over F_p, ordering candidates by
/// the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` of their lower coefficients.
pub fn smallest_irreducible(p: u32, m: usize) -> Result<Vec<u32>> {
    let mut digits = vec![0u32; m];
    loop {
        // Candidates with zero constant term are divisible by X.
        if digits[0] != 0 || m == 1 {
            let mut coeffs = digits.clone();
            coeffs.push(1);
            if is_irreducible_over_prime(p, &coeffs)? {
                return Ok(coeffs);
            }
        }
        let mut i = 0;
        loop {
            if i == m {
                unreachable!("irreducible polynomials exist in every degree");
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}
