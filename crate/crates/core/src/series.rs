//! Truncated formal power series in one variable `h` over a [`Ring`].
//!
//! A series of order `N` stores the coefficients of `h^0 .. h^N`. Binary
//! operations truncate to the smaller operand order, so every stored
//! coefficient is exact.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient of h^{index} requested from a series truncated at order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("constant term is not a unit; series is not invertible")]
    NotInvertible,
    #[error("operands live in different coefficient rings")]
    RingMismatch,
    #[error("a series needs at least one coefficient")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// Standard Taylor series with rational coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StdSeries {
    Exp,
    Sinh,
    Cosh,
    /// `S(h) = sinh(h/2) / (h/2)`, an even unit series.
    SinhHalfNormalized,
}

#[derive(Clone)]
pub struct PowerSeries<R: Ring> {
    desc: R::Descriptor,
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Result<Self, SeriesError> {
        let desc = coeffs.first().ok_or(SeriesError::Empty)?.descriptor();
        if coeffs.iter().any(|c| c.descriptor() != desc) {
            return Err(SeriesError::RingMismatch);
        }
        Ok(PowerSeries { desc, coeffs })
    }

    /// Lifts rational coefficients into the ring described by `desc`.
    pub fn from_rationals(desc: &R::Descriptor, coeffs: &[Rational]) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(PowerSeries {
            desc: desc.clone(),
            coeffs: coeffs.iter().map(|q| R::from_rational(q, desc)).collect(),
        })
    }

    pub fn zero(desc: &R::Descriptor, order: usize) -> Self {
        PowerSeries { desc: desc.clone(), coeffs: vec![R::zero_in(desc); order + 1] }
    }

    pub fn one(desc: &R::Descriptor, order: usize) -> Self {
        let mut s = Self::zero(desc, order);
        s.coeffs[0] = R::one_in(desc);
        s
    }

    /// The constant series `c`.
    pub fn constant(c: R, order: usize) -> Self {
        let desc = c.descriptor();
        let mut s = Self::zero(&desc, order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn descriptor(&self) -> &R::Descriptor {
        &self.desc
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `h^k`; asking past the truncation order is an error,
    /// never an implicit zero.
    pub fn coefficient(&self, k: usize) -> Result<&R, SeriesError> {
        self.coeffs
            .get(k)
            .ok_or(SeriesError::BeyondOrder { index: k, order: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        PowerSeries { desc: self.desc.clone(), coeffs: self.coeffs[..keep].to_vec() }
    }

    fn check_ring(&self, other: &Self) -> Result<(), SeriesError> {
        if self.desc != other.desc {
            return Err(SeriesError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        Ok(self.zip_with(other, R::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        Ok(self.zip_with(other, R::sub))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        PowerSeries { desc: self.desc.clone(), coeffs }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = R::zero_in(&self.desc);
            for j in 0..=k {
                let (a, b) = (&self.coeffs[j], &other.coeffs[k - j]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            coeffs.push(acc);
        }
        Ok(PowerSeries { desc: self.desc.clone(), coeffs })
    }

    pub fn apply(&self, other: &Self, op: SeriesOp) -> Result<Self, SeriesError> {
        match op {
            SeriesOp::Add => self.add(other),
            SeriesOp::Sub => self.sub(other),
            SeriesOp::Mul => self.mul(other),
        }
    }

    pub fn neg(&self) -> Self {
        PowerSeries { desc: self.desc.clone(), coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    /// Multiplies every coefficient by the rational `q`.
    pub fn scale(&self, q: &Rational) -> Self {
        PowerSeries {
            desc: self.desc.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scale_rational(q)).collect(),
        }
    }

    /// Multiplicative inverse by the recurrence
    /// `g_k = -g_0 * sum_{j=1..k} f_j g_{k-j}` with `g_0 = 1/f_0`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].inverse().ok_or(SeriesError::NotInvertible)?;
        let mut g = Vec::with_capacity(self.coeffs.len());
        g.push(inv0.clone());
        for k in 1..=self.order() {
            let mut acc = R::zero_in(&self.desc);
            for j in 1..=k {
                let f = &self.coeffs[j];
                if !f.is_zero() && !g[k - j].is_zero() {
                    acc = acc.add(&f.mul(&g[k - j]));
                }
            }
            g.push(acc.mul(&inv0).neg());
        }
        Ok(PowerSeries { desc: self.desc.clone(), coeffs: g })
    }

    /// `f^e`; negative exponents go through [`PowerSeries::invert`].
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = PowerSeries::one(&self.desc, self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes `h -> c h`, i.e. `g_k = c^k f_k`.
    pub fn scale_arg(&self, c: &R) -> Result<Self, SeriesError> {
        if c.descriptor() != self.desc {
            return Err(SeriesError::RingMismatch);
        }
        let mut power = R::one_in(&self.desc);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, f) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power.mul(c);
            }
            coeffs.push(power.mul(f));
        }
        Ok(PowerSeries { desc: self.desc.clone(), coeffs })
    }

    /// Applies a coefficientwise ring map.
    pub fn map_coeffs<S: Ring>(&self, desc: &S::Descriptor, f: impl Fn(&R) -> S) -> PowerSeries<S> {
        PowerSeries { desc: desc.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl PowerSeries<Rational> {
    /// Coerces into another coefficient ring.
    pub fn lift<S: Ring>(&self, desc: &S::Descriptor) -> PowerSeries<S> {
        self.map_coeffs(desc, |q| S::from_rational(q, desc))
    }
}

/// Equality up to the common truncation order.
impl<R: Ring> PartialEq for PowerSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.desc == other.desc && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl<R: Ring> fmt::Debug for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PowerSeries")
            .field("order", &self.order())
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*h")?,
                _ => write!(f, "({c})*h^{k}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(h^{})", self.order() + 1)
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, i| acc * i)
}

fn std_coefficient(kind: StdSeries, k: usize) -> Rational {
    let inv = |d: BigInt| Rational::new(1, d).expect("factorials are nonzero");
    match kind {
        StdSeries::Exp => inv(factorial(k)),
        StdSeries::Sinh if k % 2 == 1 => inv(factorial(k)),
        StdSeries::Cosh if k % 2 == 0 => inv(factorial(k)),
        StdSeries::SinhHalfNormalized if k % 2 == 0 => {
            inv(factorial(k + 1) * (BigInt::from(1) << k))
        }
        _ => Rational::zero(),
    }
}

/// Taylor coefficients of a standard function up to `h^order`, coerced into
/// the ring described by `desc`.
pub fn std_series<R: Ring>(kind: StdSeries, order: usize, desc: &R::Descriptor) -> PowerSeries<R> {
    let coeffs: Vec<Rational> = (0..=order).map(|k| std_coefficient(kind, k)).collect();
    PowerSeries::from_rationals(desc, &coeffs).expect("order + 1 >= 1 coefficients")
}
