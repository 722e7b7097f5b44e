//! Exact coefficient rings: rationals, sparse multivariate polynomials over
//! the rationals, and the [`Ring`] trait that lets power series run over
//! either.

mod binomial;
mod multipoly;
mod rational;

use std::fmt::Debug;

use thiserror::Error;

pub use binomial::{binomial, binomial_signed};
pub use multipoly::{Exponents, MultiPoly, PolyOp};
pub use rational::{reduced_gcd, ArithOp, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
    #[error("polynomials have {left} and {right} variables")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("exponent vector of length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("assignment of length {found}, expected {expected}")]
    AssignmentLength { expected: usize, found: usize },
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableIndex { index: usize, num_vars: usize },
    #[error("not a permutation of the variables")]
    InvalidPermutation,
}

/// A commutative ring with unit whose elements carry a shape descriptor
/// (`()` for the rationals, the variable count for polynomials). Elements
/// with different descriptors must not be combined.
pub trait Ring: Clone + PartialEq + Debug {
    type Descriptor: Clone + PartialEq + Debug;

    fn descriptor(&self) -> Self::Descriptor;
    fn zero_in(desc: &Self::Descriptor) -> Self;
    fn one_in(desc: &Self::Descriptor) -> Self;
    fn from_rational(q: &Rational, desc: &Self::Descriptor) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, if this element is a unit.
    fn inverse(&self) -> Option<Self>;

    fn scale_rational(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q, &self.descriptor()))
    }
}

impl Ring for Rational {
    type Descriptor = ();

    fn descriptor(&self) {}

    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }

    fn one_in(_: &()) -> Self {
        Rational::one()
    }

    fn from_rational(q: &Rational, _: &()) -> Self {
        q.clone()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl Ring for MultiPoly {
    type Descriptor = usize;

    fn descriptor(&self) -> usize {
        self.num_vars()
    }

    fn zero_in(n: &usize) -> Self {
        MultiPoly::zero(*n)
    }

    fn one_in(n: &usize) -> Self {
        MultiPoly::one(*n)
    }

    fn from_rational(q: &Rational, n: &usize) -> Self {
        MultiPoly::constant(*n, q.clone())
    }

    fn add(&self, rhs: &Self) -> Self {
        self.add_unchecked(rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add_unchecked(&MultiPoly::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.mul_unchecked(rhs)
    }

    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }

    /// Only nonzero constants are units in a polynomial ring over a field.
    fn inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        let inv = c.recip().ok()?;
        Some(MultiPoly::constant(self.num_vars(), inv))
    }

    fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(q)
    }
}
