//! Multivariate polynomial gcd.
//!
//! Monomial content is split off first, then the problem is reduced variable
//! by variable: content with respect to the main variable is handled
//! recursively and the primitive parts go through a primitive pseudo-remainder
//! sequence. Cheap exits (constants, monomials, exact division) cover the
//! overwhelmingly common cases produced by the rest of the crate.

use super::poly::{Monomial, MultiPoly, Var};
use super::rational::Rational;

/// Gcd normalized to integer coefficients, unit content, positive leading coefficient.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = MultiPoly::monomial(ma.gcd(&mb), Rational::from_integer(1.into()));
    let a1 = strip_monomial(a, &ma);
    let b1 = strip_monomial(b, &mb);
    let rest = gcd_monomial_free(&a1, &b1);
    (&mono * &rest).primitive()
}

fn strip_monomial(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.is_one() {
        p.clone()
    } else {
        p.div_term(m, &Rational::from_integer(1.into())).expect("monomial content divides")
    }
}

/// Gcd of two nonzero polynomials that have no monomial factor.
fn gcd_monomial_free(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a.num_terms() == 1 || b.num_terms() == 1 {
        return MultiPoly::one();
    }
    let (small, big) = if a.num_terms() <= b.num_terms() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.primitive();
    }
    let va = a.vars();
    let vb = b.vars();
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return poly_gcd(&content_in(a, v), b);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return poly_gcd(a, &content_in(b, v));
    }
    let v = *va
        .iter()
        .min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("non-constant polynomial has a variable");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = poly_gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let h = prs_gcd(&pa, &pb, v);
    (&c * &h).primitive()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let coeffs = p.to_univariate(v);
    let mut g = MultiPoly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.primitive() } else { poly_gcd(&g, c) };
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

fn primitive_part_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").primitive()
}

/// Primitive PRS on polynomials that are primitive with respect to `v`.
fn prs_gcd(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let (mut f, mut g) = if a.degree_in(v) >= b.degree_in(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        if g.degree_in(v) == 0 {
            return MultiPoly::one();
        }
        let r = pseudo_remainder(&f, &g, v);
        if r.is_zero() {
            return primitive_part_in(&g, v);
        }
        f = g;
        g = primitive_part_in(&r, v);
    }
}

/// Sparse pseudo-remainder: some nonzero multiple of the true remainder.
fn pseudo_remainder(f: &MultiPoly, g: &MultiPoly, v: Var) -> MultiPoly {
    let gc = g.to_univariate(v);
    let dg = gc.len() - 1;
    let lc = gc[dg].clone();
    let mut r = f.to_univariate(v);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = &*c * &lc;
        }
        for (k, gk) in gc.iter().enumerate() {
            let t = &lr * gk;
            r[k + shift] = &r[k + shift] - &t;
        }
        debug_assert!(r[dr].is_zero());
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    let out = MultiPoly::from_univariate(v, &r);
    if out.is_zero() {
        out
    } else {
        out.primitive()
    }
}
