//! Resultants and the discriminant of the pencil `f(X) - t`.

use crate::error::{Error, Result};
use crate::field::FieldElement;

use super::{squarefree_decomposition, Poly};

/// Resultant of two polynomials over F_q by the Euclidean remainder sequence.
pub fn resultant(a: &Poly, b: &Poly) -> Result<FieldElement> {
    let field = a.field().clone();
    if **a.field() != **b.field() {
        return Err(Error::MixedFields);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = FieldElement::ONE;
    loop {
        if a.is_zero() || b.is_zero() {
            return Ok(FieldElement::ZERO);
        }
        let (da, db) = (a.deg(), b.deg());
        if db == 0 {
            return Ok(field.mul(acc, field.pow(b.leading(), da as u64)));
        }
        if da == 0 {
            return Ok(field.mul(acc, field.pow(a.leading(), db as u64)));
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(FieldElement::ZERO);
        }
        // Res(A, B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R)
        let mut factor = field.pow(b.leading(), (da - r.deg()) as u64);
        if (da * db) % 2 == 1 {
            factor = field.neg(factor);
        }
        acc = field.mul(acc, factor);
        a = b;
        b = r;
    }
}

/// Determinant of a square matrix over F_q[t] by fraction-free elimination.
fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Result<Poly> {
    let n = m.len();
    let field = m[0][0].field().clone();
    let mut negate = false;
    let mut prev = Poly::one(&field);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Poly::zero(&field)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.quo(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// `D(t) = disc_X(f(X) - t)` for a quintic f in odd characteristic, as a
/// polynomial in t. Computed as the Sylvester-matrix resultant of `f - t` and
/// `f'` with entries in F_q[t]; its leading coefficient is `5^5`.
pub fn discriminant_pencil(f: &Poly) -> Result<Poly> {
    let field = f.field().clone();
    if f.deg() != 5 || f.is_zero() {
        return Err(Error::WrongDegree { expected: 5, actual: f.deg() });
    }
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let n = 5;
    let df = f.derivative();
    // Coefficients of f - t and f' (formal degree 4), highest first, as constants in t.
    let pencil: Vec<Poly> = (0..=n)
        .rev()
        .map(|i| {
            if i == 0 {
                Poly::new(&field, vec![f.coeff(0), field.neg(FieldElement::ONE)])
            } else {
                Poly::constant(&field, f.coeff(i))
            }
        })
        .collect();
    let deriv: Vec<Poly> = (0..n).rev().map(|i| Poly::constant(&field, df.coeff(i))).collect();
    let size = 2 * n - 1;
    let mut sylvester = vec![vec![Poly::zero(&field); size]; size];
    for row in 0..n - 1 {
        for (j, c) in pencil.iter().enumerate() {
            sylvester[row][row + j] = c.clone();
        }
    }
    for row in 0..n {
        for (j, c) in deriv.iter().enumerate() {
            sylvester[n - 1 + row][row + j] = c.clone();
        }
    }
    let res = bareiss_det(sylvester)?;
    // disc = (-1)^{n(n-1)/2} Res(f - t, f') / lc(f); the sign is + for n = 5.
    Ok(res.scale(field.inv(f.leading())?))
}

/// True iff `D = c * E^2` with c a square in F_q (odd characteristic only).
pub fn is_square_polynomial(d: &Poly) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = d.field();
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let even = squarefree_decomposition(d)?.iter().all(|(_, e)| e % 2 == 0);
    Ok(even && field.is_square(d.leading())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn pencil_of_pure_quintic() {
        let f11 = make_field(11, 1, None).unwrap();
        let d = discriminant_pencil(&Poly::from_ints(&f11, &[0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(d, Poly::from_ints(&f11, &[0, 0, 0, 0, 1]));
    }

    #[test]
    fn pencil_leading_coefficient_is_5_pow_5() {
        let f19 = make_field(19, 1, None).unwrap();
        for coeffs in [[3i64, 1, 4, 1, 5, 1], [2, 7, 1, 8, 2, 1], [0, 0, 1, 1, 0, 1], [9, 0, 0, 0, 18, 1]] {
            let d = discriminant_pencil(&Poly::from_ints(&f19, &coeffs)).unwrap();
            assert_eq!(d.deg(), 4);
            assert_eq!(d.leading(), f19.from_int(3125));
        }
    }

    #[test]
    fn pencil_errors() {
        let f19 = make_field(19, 1, None).unwrap();
        assert_eq!(
            discriminant_pencil(&Poly::from_ints(&f19, &[0, 0, 0, 1])).unwrap_err(),
            Error::WrongDegree { expected: 5, actual: 3 }
        );
        let f8 = make_field(2, 3, None).unwrap();
        assert_eq!(
            discriminant_pencil(&Poly::from_ints(&f8, &[0, 0, 0, 0, 0, 1])).unwrap_err(),
            Error::EvenCharacteristic
        );
    }

    #[test]
    fn square_examples() {
        let f5 = make_field(5, 1, None).unwrap();
        assert!(is_square_polynomial(&Poly::from_ints(&f5, &[0, 0, 1])).unwrap());
        assert!(!is_square_polynomial(&Poly::from_ints(&f5, &[0, 1])).unwrap());
        assert!(!is_square_polynomial(&Poly::from_ints(&f5, &[0, 0, 2])).unwrap());
        assert_eq!(is_square_polynomial(&Poly::zero(&f5)).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn euclidean_resultant_small_cases() {
        let f7 = make_field(7, 1, None).unwrap();
        // Res(X - a, g) = g(a).
        let g = Poly::from_ints(&f7, &[3, 0, 1]);
        let lin = Poly::from_ints(&f7, &[-2, 1]);
        assert_eq!(resultant(&lin, &g).unwrap(), g.eval(FieldElement(2)).unwrap());
        assert_eq!(resultant(&lin, &lin).unwrap(), FieldElement::ZERO);
    }
}
