//! The fraction field ℚ(α, β, ζ, η).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::poly_gcd;
use super::poly::{Monomial, MultiPoly, Var, NVARS};
use super::rational::Rational;
use super::ExactError;

/// A reduced fraction `num/den` of polynomials.
///
/// After normalization both parts have integer coefficients with joint content
/// one, the denominator's leading coefficient is positive, and common factors
/// found by [`poly_gcd`] are cancelled.
#[derive(Clone, Debug)]
pub struct FieldElem {
    num: MultiPoly,
    den: MultiPoly,
}

impl FieldElem {
    /// Normalizes `num/den`; fails when `den` is zero.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<FieldElem, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> FieldElem {
        if num.is_zero() {
            return FieldElem::zero();
        }
        let (num, den) = if den.num_terms() == 1 || num.num_terms() == 1 {
            let g = num.monomial_content().gcd(&den.monomial_content());
            if g.is_one() {
                (num, den)
            } else {
                let one = Rational::one();
                (num.div_term(&g, &one).unwrap(), den.div_term(&g, &one).unwrap())
            }
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        Self::fix_scale(num, den)
    }

    /// Joint integer scaling with positive leading denominator coefficient.
    fn fix_scale(num: MultiPoly, den: MultiPoly) -> FieldElem {
        let l = num.denominator_lcm().lcm(&den.denominator_lcm());
        let lr = Rational::from_integer(l.clone());
        let (num, den) = if l.is_one() { (num, den) } else { (num.scale(&lr), den.scale(&lr)) };
        let g = num.numerator_gcd().gcd(&den.numerator_gcd());
        let mut f = Rational::new(BigInt::one(), g);
        if den.leading_term().unwrap().1.is_negative() {
            f = -f;
        }
        if f.is_one() {
            FieldElem { num, den }
        } else {
            FieldElem { num: num.scale(&f), den: den.scale(&f) }
        }
    }

    pub fn zero() -> Self {
        FieldElem { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        FieldElem { num: MultiPoly::one(), den: MultiPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: &Rational) -> Self {
        FieldElem {
            num: MultiPoly::constant(Rational::from_integer(r.numer().clone())),
            den: MultiPoly::constant(Rational::from_integer(r.denom().clone())),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self::fix_scale(p, MultiPoly::one()).or_zero()
    }

    fn or_zero(self) -> Self {
        if self.num.is_zero() {
            FieldElem::zero()
        } else {
            self
        }
    }

    pub fn var(v: Var) -> Self {
        FieldElem { num: MultiPoly::var(v), den: MultiPoly::one() }
    }

    pub fn alpha() -> Self {
        Self::var(Var::Alpha)
    }

    pub fn beta() -> Self {
        Self::var(Var::Beta)
    }

    pub fn zeta() -> Self {
        Self::var(Var::Zeta)
    }

    pub fn eta() -> Self {
        Self::var(Var::Eta)
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The value as a polynomial, if the denominator is a constant.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&d.recip()))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        Some(self.num.as_constant()? / self.den.as_constant()?)
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.num.has_var(v) || self.den.has_var(v)
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(Self::fix_scale(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> FieldElem {
        let base = if e < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let e = e.unsigned_abs();
        FieldElem { num: base.num.pow(e), den: base.den.pow(e) }.rescaled()
    }

    fn rescaled(self) -> FieldElem {
        Self::fix_scale(self.num, self.den).or_zero()
    }

    /// Evaluates at a rational point; `None` if the denominator vanishes there.
    pub fn eval(&self, point: &[Rational; NVARS]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }

    /// Substitutes each indeterminate by a field element.
    pub fn substitute(&self, map: &dyn Fn(Var) -> FieldElem) -> Result<FieldElem, ExactError> {
        let vals: Vec<FieldElem> = Var::ALL.iter().map(|&v| map(v)).collect();
        let n = subst_poly(&self.num, &vals);
        let d = subst_poly(&self.den, &vals);
        if d.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(&n / &d)
    }

    /// Canonical text `num/den`.
    pub fn to_canonical_string(&self) -> String {
        format!("{}/{}", self.num.to_canonical_string(), self.den.to_canonical_string())
    }

    /// Human-facing form: integers and plain polynomials print without `/1`.
    pub fn to_pretty_string(&self) -> String {
        let wrap = |p: &MultiPoly| {
            let s = pretty_poly(p);
            if p.num_terms() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            pretty_poly(&self.num)
        } else {
            let den = pretty_poly(&self.den);
            let den = if den.contains(['*', '/', ' ']) { format!("({den})") } else { den };
            format!("{}/{den}", wrap(&self.num))
        }
    }

    /// Cheap addition of a fraction with identical denominator, or the general path.
    fn add_impl(&self, rhs: &FieldElem, negate: bool) -> FieldElem {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return FieldElem { num: rnum, den: rhs.den.clone() };
        }
        if self.den == rhs.den {
            return Self::normalize(&self.num + &rnum, self.den.clone());
        }
        if let (Some((m1, c1)), Some((m2, c2))) = (self.den.single_term(), rhs.den.single_term()) {
            let l = m1.lcm(m2);
            let lc = c1.numer().lcm(c2.numer());
            let lcr = Rational::from_integer(lc);
            let f1 = (l.div(m1), &lcr / c1);
            let f2 = (l.div(m2), &lcr / c2);
            let num = &self.num.mul_term(&f1.0, &f1.1) + &rnum.mul_term(&f2.0, &f2.1);
            return Self::normalize(num, MultiPoly::monomial(l, lcr));
        }
        let num = &(&self.num * &rhs.den) + &(&rnum * &self.den);
        Self::normalize(num, &self.den * &rhs.den)
    }

    fn mul_impl(&self, rhs: &FieldElem) -> FieldElem {
        if self.is_zero() || rhs.is_zero() {
            return FieldElem::zero();
        }
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        Self::fix_scale(&n1 * &n2, &d1 * &d2)
    }
}

/// Cancels the gcd of a numerator against a denominator.
fn cancel(n: &MultiPoly, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if d.is_constant() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    if n.num_terms() == 1 || d.num_terms() == 1 {
        let g = n.monomial_content().gcd(&d.monomial_content());
        let one = Rational::one();
        return (n.div_term(&g, &one).unwrap(), d.div_term(&g, &one).unwrap());
    }
    let g = poly_gcd(n, d);
    if g.is_constant() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
    }
}

fn subst_poly(p: &MultiPoly, vals: &[FieldElem]) -> FieldElem {
    let mut acc = FieldElem::zero();
    for (m, c) in p.terms() {
        let mut t = FieldElem::from_rational(c);
        for v in Var::ALL {
            let e = m.exp(v);
            if e > 0 {
                t = &t * &vals[v.index()].pow(e as i32);
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// Readable polynomial text: `3*a^2*b - a + 1`.
pub fn pretty_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&pretty_term(m, &abs));
    }
    out
}

fn pretty_term(m: &Monomial, abs: &Rational) -> String {
    let mut factors = Vec::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => factors.push(v.symbol().to_string()),
            e => factors.push(format!("{}^{}", v.symbol(), e)),
        }
    }
    if factors.is_empty() {
        return abs.to_string();
    }
    let body = factors.join("*");
    if abs.is_one() {
        body
    } else {
        format!("{abs}*{body}")
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for FieldElem {}

impl Default for FieldElem {
    fn default() -> Self {
        FieldElem::zero()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty_string())
    }
}

impl FromStr for FieldElem {
    type Err = ExactError;

    /// Parses the canonical `num/den` text.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse(s.to_string());
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let num = MultiPoly::parse_canonical(n).ok_or_else(bad)?;
        let den = MultiPoly::parse_canonical(d).ok_or_else(bad)?;
        FieldElem::new(num, den)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical_string())
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.mul_impl(rhs)
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero; use [`FieldElem::inv`] for a checked path.
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self.mul_impl(&rhs.inv().expect("division by zero in FieldElem"))
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        FieldElem::from_rational(&r)
    }
}

impl From<MultiPoly> for FieldElem {
    fn from(p: MultiPoly) -> Self {
        FieldElem::from_poly(p)
    }
}
