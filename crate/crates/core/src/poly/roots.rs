//! Root counting and root extraction in F_q.

use crate::error::{Error, Result};
use crate::field::FieldElement;

use super::{mulmod_raw, powmod_raw, Poly};

/// Fields up to this order find roots by evaluating at every element.
pub const SWEEP_LIMIT: u32 = 10_000;

/// `gcd(f, X^q - X)`, the product of the distinct linear factors of f.
fn linear_part(f: &Poly) -> Poly {
    let field = f.field();
    let m = f.monic();
    let xq = Poly::new(field, powmod_raw(field, &[FieldElement::ZERO, FieldElement::ONE], field.order() as u64, m.coeffs()));
    m.gcd(&xq.sub(&Poly::x(field)))
}

/// Number of distinct roots of f in F_q, as `deg gcd(f, X^q - X)`.
pub fn count_distinct_roots(f: &Poly) -> Result<usize> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    Ok(linear_part(f).deg())
}

/// True iff f has deg f distinct roots in F_q.
pub fn splits_completely(f: &Poly) -> Result<bool> {
    Ok(count_distinct_roots(f)? == f.deg())
}

/// All distinct roots of f in F_q, in element order.
pub fn roots_of(f: &Poly) -> Result<Vec<FieldElement>> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let field = f.field();
    if field.order() <= SWEEP_LIMIT {
        return Ok(field.elements().filter(|&x| f.eval_unchecked(x).is_zero()).collect());
    }
    let mut roots = Vec::with_capacity(f.deg());
    split_linear(&linear_part(f), &mut roots);
    roots.sort_unstable();
    Ok(roots)
}

/// Equal-degree splitting of a monic squarefree product of distinct linear factors.
fn split_linear(g: &Poly, out: &mut Vec<FieldElement>) {
    let field = g.field();
    match g.deg() {
        0 => return,
        1 => {
            out.push(field.neg(g.coeff(0)));
            return;
        }
        _ => {}
    }
    let q = field.order() as u64;
    for delta in field.elements() {
        let probe = if field.characteristic() == 2 {
            if delta.is_zero() {
                continue;
            }
            // Trace of delta*X: sum of its 2^i powers for i < m.
            let mut y = Poly::new(field, vec![FieldElement::ZERO, delta]).rem(g).expect("g is nonzero");
            let mut tr = y.clone();
            for _ in 1..field.degree() {
                y = Poly::new(field, mulmod_raw(field, y.coeffs(), y.coeffs(), g.coeffs()));
                tr = tr.add(&y);
            }
            tr
        } else {
            let shifted = [delta, FieldElement::ONE];
            Poly::new(field, powmod_raw(field, &shifted, (q - 1) / 2, g.coeffs())).sub(&Poly::one(field))
        };
        let d = g.gcd(&probe);
        if d.deg() > 0 && d.deg() < g.deg() {
            let rest = g.quo(&d).expect("d is nonzero");
            split_linear(&d, out);
            split_linear(&rest, out);
            return;
        }
    }
    unreachable!("distinct roots are always separated by some shift");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn root_count_examples() {
        let f7 = make_field(7, 1, None).unwrap();
        assert_eq!(count_distinct_roots(&Poly::from_ints(&f7, &[-1, 0, 1])).unwrap(), 2);
        assert_eq!(count_distinct_roots(&Poly::from_ints(&f7, &[1, 0, 1])).unwrap(), 0);
        let f5 = make_field(5, 1, None).unwrap();
        assert_eq!(count_distinct_roots(&Poly::from_ints(&f5, &[0, -1, 0, 0, 0, 1])).unwrap(), 5);
        assert_eq!(count_distinct_roots(&Poly::from_ints(&f5, &[2])).unwrap_err(), Error::ConstantInput);
    }

    #[test]
    fn split_examples() {
        let f7 = make_field(7, 1, None).unwrap();
        assert!(splits_completely(&Poly::from_ints(&f7, &[-1, 0, 1])).unwrap());
        assert!(!splits_completely(&Poly::from_ints(&f7, &[0, 0, 1])).unwrap());
        let f13 = make_field(13, 1, None).unwrap();
        assert!(splits_completely(&Poly::from_ints(&f13, &[-8, 0, 0, 1])).unwrap());
    }

    #[test]
    fn roots_examples() {
        let f13 = make_field(13, 1, None).unwrap();
        let roots = roots_of(&Poly::from_ints(&f13, &[-8, 0, 0, 1])).unwrap();
        assert_eq!(roots, vec![FieldElement(2), FieldElement(5), FieldElement(6)]);
        let a = FieldElement(9);
        assert_eq!(roots_of(&Poly::new(&f13, vec![f13.neg(a), FieldElement::ONE])).unwrap(), vec![a]);
        let f7 = make_field(7, 1, None).unwrap();
        let two = Poly::from_roots(&f7, &[FieldElement(1), FieldElement(2)]);
        assert_eq!(roots_of(&two).unwrap(), vec![FieldElement(1), FieldElement(2)]);
    }

    #[test]
    fn splitting_path_matches_sweep() {
        // Above the sweep limit roots come from equal-degree splitting.
        for (p, m) in [(10007u64, 1u32), (2, 14), (3, 9)] {
            let f = make_field(p, m, None).unwrap();
            let chosen: Vec<FieldElement> = [3u32, 77, 4099, 1000, 9999].iter().map(|&c| FieldElement(c)).collect();
            let g = Poly::from_roots(&f, &chosen).mul(&Poly::from_ints(&f, &[1, 1, 1, 1]));
            let mut expected: Vec<FieldElement> = f.elements().filter(|&x| g.eval_unchecked(x).is_zero()).collect();
            expected.sort_unstable();
            assert_eq!(roots_of(&g).unwrap(), expected);
            assert_eq!(count_distinct_roots(&g).unwrap(), expected.len());
        }
    }
}
