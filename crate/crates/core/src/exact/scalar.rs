//! A minimal field interface so combinatorial routines run both symbolically
//! (over [`FieldElem`]) and at numeric parameter points (over [`Rational`]).

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::field::FieldElem;
use super::linsolve::{linsolve_multi, linsolve_rational_multi, LinSolution};
use super::ExactError;
use super::rational::Rational;

pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// Exact solve of `A X = B` with a consistency certificate.
    fn solve(a: &[Vec<Self>], rhs: &[Vec<Self>]) -> Result<LinSolution<Self>, ExactError>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn over(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|i| self.times(&i))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scaled(&self, k: i64) -> Self {
        self.times(&Self::from_int(k))
    }

    fn power(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn solve(a: &[Vec<Self>], rhs: &[Vec<Self>]) -> Result<LinSolution<Self>, ExactError> {
        linsolve_rational_multi(a, rhs)
    }
}

impl Scalar for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn from_rational(r: &Rational) -> Self {
        FieldElem::from_rational(r)
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn solve(a: &[Vec<Self>], rhs: &[Vec<Self>]) -> Result<LinSolution<Self>, ExactError> {
        linsolve_multi(a, rhs)
    }
    fn is_one(&self) -> bool {
        FieldElem::is_one(self)
    }
    fn power(&self, e: u32) -> Self {
        self.pow(e as i32)
    }
}
