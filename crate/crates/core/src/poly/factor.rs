//! Factorization shapes by distinct-degree splitting, and squarefree decomposition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;

use super::{powmod_raw, Poly};

/// Degrees and multiplicities of the irreducible factors of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorShape {
    /// `(degree, multiplicity)` pairs sorted by decreasing degree.
    factors: Vec<(usize, usize)>,
}

impl FactorShape {
    pub fn from_pairs(mut factors: Vec<(usize, usize)>) -> FactorShape {
        factors.sort_unstable_by(|a, b| b.cmp(a));
        FactorShape { factors }
    }

    /// Shape of a squarefree polynomial from its factor degrees.
    pub fn from_partition(parts: &[usize]) -> FactorShape {
        FactorShape::from_pairs(parts.iter().map(|&d| (d, 1)).collect())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.factors
    }

    /// Factor degrees with multiplicity, in decreasing order.
    pub fn partition(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|&(d, k)| std::iter::repeat_n(d, k)).collect()
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|&(d, k)| d * k).sum()
    }
}

/// Factor degrees of a squarefree polynomial via distinct-degree factorization.
///
/// For each d the gcd of the remaining part with `X^{q^d} - X` collects the
/// irreducible factors of degree d; its degree divided by d counts them.
pub fn factor_shape(f: &Poly) -> Result<FactorShape> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if f.gcd(&f.derivative()).deg() > 0 || f.derivative().is_zero() {
        return Err(Error::NotSquarefree);
    }
    let field = f.field();
    let q = field.order() as u64;
    let x = Poly::x(field);
    let mut rest = f.monic();
    let mut h = x.rem(&rest)?;
    let mut parts = Vec::new();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = Poly::new(field, powmod_raw(field, h.coeffs(), q, rest.coeffs()));
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            parts.extend(std::iter::repeat_n(d, g.deg() / d));
            rest = rest.quo(&g)?;
            h = h.rem(&rest)?;
        }
        d += 1;
    }
    if rest.deg() > 0 {
        parts.push(rest.deg());
    }
    Ok(FactorShape::from_partition(&parts))
}

/// Replaces a polynomial in X^p by its p-th root.
fn pth_root(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let coeffs: Vec<FieldElement> = f.coeffs().iter().step_by(p).map(|&c| field.pth_root(c)).collect();
    Poly::new(field, coeffs)
}

/// Squarefree decomposition `f = lc * prod g_i^{e_i}` with monic, pairwise
/// coprime, squarefree `g_i`; returns the `(g_i, e_i)` sorted by multiplicity.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::new();
    sqf_into(&f.monic(), 1, &mut out);
    out.sort_by_key(|(g, e)| (*e, g.coeffs().to_vec()));
    Ok(out)
}

fn sqf_into(f: &Poly, scale: usize, out: &mut Vec<(Poly, usize)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().characteristic() as usize;
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.quo(&c).expect("gcd is nonzero");
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let factor = w.quo(&y).expect("gcd is nonzero");
        if factor.deg() > 0 {
            out.push((factor, i * scale));
        }
        w = y;
        c = c.quo(&w).expect("gcd is nonzero");
        i += 1;
    }
    if c.deg() > 0 {
        // What remains is a p-th power.
        sqf_into(&pth_root(&c), scale * p, out);
    }
}
