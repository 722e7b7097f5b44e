//! Characteristic classes of smooth complete intersections
//! `M ⊂ CP^{m+r}` cut out by hypersurfaces of degrees `a_1 .. a_r`.
//!
//! Every class is expanded as a power series in the hyperplane class `h`.
//! Pairing a degree-`m` class `x h^m` with the fundamental class gives
//! `x · a_1 ⋯ a_r`.
//!
//! The characteristic number `<Â(TM) ch(T^C M), [M]>` is computed as
//!
//! ```text
//! 2 (a_1 ⋯ a_r) · coeff(h^m, S(h)^-(m+r+1) · ∏ S(a_j h) · B(h))
//! S(h) = sinh(h/2) / (h/2)
//! B(h) = (m+r+1) cosh(h) - 1 - Σ cosh(a_j h)
//! ```
//!
//! which is the pole-free form of the usual `sinh` quotient: every factor is
//! a unit series, so only unit inversion is needed and truncating at order
//! `m` keeps the `h^m` coefficient exact.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{MultiPoly, Rational, Ring};
use crate::series::{std_series, PowerSeries, SeriesError, StdSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharClassError {
    #[error("complex dimension must be at least 1")]
    InvalidDimension,
    #[error("at least one defining degree is required")]
    NoDegrees,
    #[error("defining degrees must be positive")]
    ZeroDegree,
    #[error("characteristic number {value} is not an integer")]
    NonIntegral { value: Rational },
    #[error("no spin structure: first Chern coefficient {c1} is odd")]
    NotSpin { c1: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Sign of the first Chern class, which decides which Kähler-Einstein
/// metric the manifold carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Curvature {
    /// `c_1 > 0`
    Fano,
    /// `c_1 = 0`, Ricci-flat
    CalabiYau,
    /// `c_1 < 0`, negative Einstein constant
    GeneralType,
}

impl Curvature {
    pub fn as_str(self) -> &'static str {
        match self {
            Curvature::Fano => "fano",
            Curvature::CalabiYau => "calabi_yau",
            Curvature::GeneralType => "general_type",
        }
    }
}

impl fmt::Display for Curvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Plus,
    Minus,
}

/// Complex dimension `m` and the defining degrees, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteIntersection {
    m: usize,
    degrees: Vec<u64>,
}

impl CompleteIntersection {
    pub fn new(m: usize, degrees: impl Into<Vec<u64>>) -> Result<Self, CharClassError> {
        let mut degrees = degrees.into();
        if m == 0 {
            return Err(CharClassError::InvalidDimension);
        }
        if degrees.is_empty() {
            return Err(CharClassError::NoDegrees);
        }
        if degrees.contains(&0) {
            return Err(CharClassError::ZeroDegree);
        }
        degrees.sort_unstable();
        Ok(CompleteIntersection { m, degrees })
    }

    /// Degree-`a` hypersurface in `CP^{m+1}`.
    pub fn hypersurface(m: usize, a: u64) -> Result<Self, CharClassError> {
        Self::new(m, vec![a])
    }

    pub fn complex_dim(&self) -> usize {
        self.m
    }

    pub fn real_dim(&self) -> usize {
        2 * self.m
    }

    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `<h^m, [M]> = a_1 ⋯ a_r`
    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&a| BigInt::from(a)).product()
    }

    fn ambient_twist(&self) -> u64 {
        (self.m + self.codim() + 1) as u64
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "M^{}({})", self.m, ds.join(","))
    }
}

/// A characteristic class written as a truncated series in `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassPolynomial(PowerSeries<Rational>);

impl ClassPolynomial {
    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn coefficient(&self, k: usize) -> Result<&Rational, SeriesError> {
        self.0.coefficient(k)
    }

    pub fn series(&self) -> &PowerSeries<Rational> {
        &self.0
    }

    /// Evaluates the top-degree part on `[M]`.
    pub fn pair(&self, ci: &CompleteIntersection) -> Result<Rational, SeriesError> {
        Ok(self.coefficient(ci.m)? * &Rational::from(ci.degree_product()))
    }
}

/// `k` with `c_1(TM) = k h`, namely `m + r + 1 - Σ a_j`.
pub fn first_chern_coefficient(ci: &CompleteIntersection) -> i64 {
    ci.ambient_twist() as i64 - ci.degrees.iter().map(|&a| a as i64).sum::<i64>()
}

/// Spin iff `c_1` is even.
pub fn is_spin(ci: &CompleteIntersection) -> bool {
    first_chern_coefficient(ci) % 2 == 0
}

pub fn curvature_class(ci: &CompleteIntersection) -> Curvature {
    match first_chern_coefficient(ci) {
        k if k > 0 => Curvature::Fano,
        0 => Curvature::CalabiYau,
        _ => Curvature::GeneralType,
    }
}

fn linear_factor(slope: &Rational, order: usize) -> PowerSeries<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    if order >= 1 {
        coeffs[1] = slope.clone();
    }
    PowerSeries::from_coeffs(coeffs).expect("nonempty")
}

fn quadratic_factor(slope: &Rational, order: usize) -> PowerSeries<Rational> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    if order >= 2 {
        coeffs[2] = slope.clone();
    }
    PowerSeries::from_coeffs(coeffs).expect("nonempty")
}

/// `c(TM) = (1+h)^{m+r+1} ∏ (1 + a_j h)^{-1}`
pub fn chern_class(ci: &CompleteIntersection, order: usize) -> ClassPolynomial {
    product_class(ci, order, linear_factor)
}

/// `p(TM) = (1+h^2)^{m+r+1} ∏ (1 + a_j^2 h^2)^{-1}`
pub fn pontryagin_class(ci: &CompleteIntersection, order: usize) -> ClassPolynomial {
    product_class(ci, order, |a, n| quadratic_factor(&(a * a), n))
}

fn product_class(
    ci: &CompleteIntersection,
    order: usize,
    factor: impl Fn(&Rational, usize) -> PowerSeries<Rational>,
) -> ClassPolynomial {
    let unit = || Rational::one();
    let mut acc = factor(&unit(), order)
        .pow(ci.ambient_twist() as i64)
        .expect("unit constant term");
    for &a in &ci.degrees {
        let inv = factor(&Rational::from(a as i64), order).invert().expect("unit constant term");
        acc = acc.mul(&inv).expect("same ring");
    }
    ClassPolynomial(acc)
}

/// `ch(T^C M) = 2 (-1 + (m+r+1) cosh h - Σ cosh(a_j h))`
pub fn chern_character(ci: &CompleteIntersection, order: usize) -> ClassPolynomial {
    let degrees: Vec<Rational> = ci.degrees.iter().map(|&a| Rational::from(a as i64)).collect();
    let b = cosh_combination(ci.ambient_twist(), &degrees, &(), order).expect("same ring");
    ClassPolynomial(b.scale(&Rational::from(2)))
}

/// `Â(TM) = S(h)^{-(m+r+1)} ∏ S(a_j h)`
pub fn a_hat_class(ci: &CompleteIntersection, order: usize) -> ClassPolynomial {
    let degrees: Vec<Rational> = ci.degrees.iter().map(|&a| Rational::from(a as i64)).collect();
    ClassPolynomial(a_hat_series(ci.ambient_twist(), &degrees, &(), order).expect("same ring"))
}

/// `S(h)^{-twist} ∏ S(a_j h)` over an arbitrary coefficient ring.
fn a_hat_series<R: Ring>(
    twist: u64,
    degrees: &[R],
    desc: &R::Descriptor,
    order: usize,
) -> Result<PowerSeries<R>, SeriesError> {
    let s = std_series::<R>(StdSeries::SinhHalfNormalized, order, desc);
    let mut acc = s.pow(-(twist as i64))?;
    for a in degrees {
        acc = acc.mul(&s.scale_arg(a)?)?;
    }
    Ok(acc)
}

/// `twist · cosh(h) - 1 - Σ cosh(a_j h)`
fn cosh_combination<R: Ring>(
    twist: u64,
    degrees: &[R],
    desc: &R::Descriptor,
    order: usize,
) -> Result<PowerSeries<R>, SeriesError> {
    let cosh = std_series::<R>(StdSeries::Cosh, order, desc);
    let mut acc = cosh.scale(&Rational::from(twist as i64)).sub(&PowerSeries::one(desc, order))?;
    for a in degrees {
        acc = acc.sub(&cosh.scale_arg(a)?)?;
    }
    Ok(acc)
}

/// `2 ∏a_j · coeff(h^m, Â · B)`, generic in the ring holding the degrees.
fn char_number_in<R: Ring>(m: usize, degrees: &[R], desc: &R::Descriptor) -> Result<R, SeriesError> {
    let twist = (m + degrees.len() + 1) as u64;
    let a_hat = a_hat_series(twist, degrees, desc, m)?;
    let b = cosh_combination(twist, degrees, desc, m)?;
    let top = a_hat.mul(&b)?.coefficient(m)?.clone();
    let prefactor = degrees
        .iter()
        .fold(R::from_rational(&Rational::from(2), desc), |acc, a| acc.mul(a));
    Ok(prefactor.mul(&top))
}

/// `<Â(TM) ch(T^C M), [M]>` as an exact rational. Integral whenever `M` is
/// spin; non-spin inputs can produce fractions.
pub fn char_number_rational(ci: &CompleteIntersection) -> Rational {
    let degrees: Vec<Rational> = ci.degrees.iter().map(|&a| Rational::from(a as i64)).collect();
    char_number_in(ci.m, &degrees, &()).expect("rational pipeline is total")
}

/// `<Â(TM) ch(T^C M), [M]>`, required to be an integer.
pub fn char_number(ci: &CompleteIntersection) -> Result<BigInt, CharClassError> {
    let value = char_number_rational(ci);
    value.to_integer().ok_or(CharClassError::NonIntegral { value })
}

/// The characteristic number as a polynomial in symbolic degrees
/// `a_1 .. a_r`, for complex dimension `m`.
pub fn char_number_polynomial(m: usize, r: usize) -> Result<MultiPoly, CharClassError> {
    if m == 0 {
        return Err(CharClassError::InvalidDimension);
    }
    if r == 0 {
        return Err(CharClassError::NoDegrees);
    }
    let vars: Vec<MultiPoly> = (0..r).map(|i| MultiPoly::var(r, i).expect("index < r")).collect();
    Ok(char_number_in(m, &vars, &r)?)
}

/// `<Â(TM), [M]> = ∏a_j · coeff(h^m, S^{-(m+r+1)} ∏ S(a_j h))`
pub fn a_hat_genus(ci: &CompleteIntersection) -> Rational {
    a_hat_class(ci, ci.m).pair(ci).expect("order m")
}

/// Index of the Rarita-Schwinger operator of the given chirality,
/// `±(<Â ch(T^C M), [M]> + <Â, [M]>)`.
pub fn rs_index(ci: &CompleteIntersection, chirality: Chirality) -> Result<BigInt, CharClassError> {
    if !is_spin(ci) {
        return Err(CharClassError::NotSpin { c1: first_chern_coefficient(ci) });
    }
    let total = char_number_rational(ci) + a_hat_genus(ci);
    let value = total.to_integer().ok_or(CharClassError::NonIntegral { value: total })?;
    Ok(match chirality {
        Chirality::Plus => value,
        Chirality::Minus => -value,
    })
}
