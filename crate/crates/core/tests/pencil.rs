//! The discriminant pencil against a direct Sylvester determinant of
//! `f - t₀` and `f'` at every t₀ of a small field.

use lrcforge::poly::{discriminant_pencil, is_square_polynomial, resultant};
use lrcforge::{make_field, Field, FieldElement, Poly};

fn det(field: &Field, mut m: Vec<Vec<FieldElement>>) -> FieldElement {
    let n = m.len();
    let mut acc = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return field.zero() };
        if p != c {
            m.swap(p, c);
            acc = field.neg(acc);
        }
        acc = field.mul(acc, m[c][c]);
        let inv = field.inv(m[c][c]).unwrap();
        for i in c + 1..n {
            let factor = field.mul(m[i][c], inv);
            for j in c..n {
                let sub = field.mul(factor, m[c][j]);
                m[i][j] = field.sub(m[i][j], sub);
            }
        }
    }
    acc
}

fn sylvester_disc(f: &Poly, t: FieldElement) -> FieldElement {
    let field = f.field();
    let g = f.sub_constant(t);
    let dg = f.derivative();
    let size = 9;
    let mut m = vec![vec![field.zero(); size]; size];
    for row in 0..4 {
        for j in 0..=5 {
            m[row][row + j] = g.coeff(5 - j);
        }
    }
    for row in 0..5 {
        for j in 0..=4 {
            m[4 + row][row + j] = dg.coeff(4 - j);
        }
    }
    field.div(det(field, m), f.leading()).unwrap()
}

#[test]
fn pencil_matches_pointwise_determinants() {
    for (p, m, coeffs) in [
        (7u64, 1u32, vec![0i64, 0, 1, 1, 0, 1]),
        (11, 1, vec![3, 1, 4, 1, 5, 9]),
        (3, 2, vec![2, 0, 1, 2, 1, 1]),
        (19, 1, vec![0, 5, 0, -5, 0, 1]),
    ] {
        let field = make_field(p, m, None).unwrap();
        let f = Poly::from_ints(&field, &coeffs);
        let d = discriminant_pencil(&f).unwrap();
        for t in field.elements() {
            let direct = sylvester_disc(&f, t);
            assert_eq!(d.eval(t).unwrap(), direct, "F_{} f={f} t={}", field.spec(), field.format(t));
            let euclid = resultant(&f.sub_constant(t), &f.derivative()).unwrap();
            assert_eq!(field.div(euclid, f.leading()).unwrap(), direct);
        }
    }
}

#[test]
fn dickson_pencil_is_square() {
    for q in [19u64, 29, 59, 79] {
        let field = make_field(q, 1, None).unwrap();
        let f = Poly::from_ints(&field, &[0, 5, 0, -5, 0, 1]);
        assert!(is_square_polynomial(&discriminant_pencil(&f).unwrap()).unwrap());
    }
}
