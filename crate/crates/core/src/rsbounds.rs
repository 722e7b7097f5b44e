//! Lower bounds on the dimension of the space of Rarita-Schwinger fields.
//!
//! On a compact Einstein spin manifold of even dimension `n >= 4` the
//! index of the twisted Dirac operator bounds the chiral solution spaces:
//! `RS^±(M) >= ±<Â ch(T^C M), [M]> - N(n)`, where the parallel-spinor
//! deduction `N(n)` only applies in the Ricci-flat case.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::charclass::{
    a_hat_genus, char_number, curvature_class, first_chern_coefficient, is_spin, rs_index,
    CharClassError, Chirality, CompleteIntersection, Curvature,
};
use crate::ring::{binomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("dimension must be positive")]
    NonPositiveDimension,
    #[error("not spin: first Chern coefficient {c1} is odd, no spin structure")]
    NotSpin { c1: i64 },
    #[error("fano: theorem inapplicable, Kähler-Einstein existence not guaranteed")]
    Fano,
    #[error("theorem requires n >= 4, got real dimension {n}")]
    DimensionTooSmall { n: usize },
    #[error("complex dimension must be even and at least 2, got {m}")]
    OddComplexDimension { m: usize },
    #[error("threshold must be at least 1")]
    InvalidThreshold,
    #[error(transparent)]
    CharClass(#[from] CharClassError),
}

fn pow2(e: u64) -> BigInt {
    BigInt::from(1) << e
}

/// Largest number of linearly independent parallel spinors on a complete
/// simply connected `n`-manifold without flat factor: `2^k` for `n = 4k`
/// or `4k + 7`, `2^{k+1}` for `n = 4k + 14` or `4k + 21`, else zero.
pub fn max_parallel_spinors(n: u64) -> Result<BigInt, BoundError> {
    if n == 0 {
        return Err(BoundError::NonPositiveDimension);
    }
    let value = match n % 4 {
        0 => pow2(n / 4),
        3 if n >= 7 => pow2((n - 7) / 4),
        2 if n >= 14 => pow2((n - 14) / 4 + 1),
        1 if n >= 21 => pow2((n - 21) / 4 + 1),
        _ => BigInt::zero(),
    };
    Ok(value)
}

/// `RS(T^n) = (n - 1) 2^{⌊n/2⌋}` for a flat torus with its trivial spin
/// structure.
pub fn torus_rs_dimension(n: u64) -> Result<BigInt, BoundError> {
    if n == 0 {
        return Err(BoundError::NonPositiveDimension);
    }
    Ok(BigInt::from(n - 1) * pow2(n / 2))
}

/// Parallel spinors on a flat `T^k`: the spinor rank `2^{⌊k/2⌋}`.
pub fn torus_parallel_spinors(k: u64) -> BigInt {
    pow2(k / 2)
}

/// `RS(X × T^k) >= RS(X) · 2^{⌊k/2⌋}`
pub fn product_bound(rs_x: &BigInt, k: u64) -> BigInt {
    rs_x * torus_parallel_spinors(k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsBoundReport {
    pub ci: CompleteIntersection,
    /// Real dimension `2m`.
    pub n: usize,
    pub spin: bool,
    pub curvature: Curvature,
    /// `<Â ch(T^C M), [M]>`, unclamped.
    pub charnum: BigInt,
    pub a_hat_genus: Rational,
    /// Index of the positive-chirality Rarita-Schwinger operator.
    pub rs_index_plus: BigInt,
    /// `N(n)` on the Calabi-Yau branch, zero otherwise.
    pub parallel_spinor_deduction: BigInt,
    pub bound_plus: BigInt,
    pub bound_minus: BigInt,
    pub bound_total: BigInt,
}

fn clamp(x: BigInt) -> BigInt {
    if x.is_negative() {
        BigInt::zero()
    } else {
        x
    }
}

/// Applies the index bound to a complete intersection. Only spin inputs
/// with `c_1 <= 0` and real dimension at least 4 qualify; bounds are floored
/// at zero.
pub fn rs_lower_bound(ci: &CompleteIntersection) -> Result<RsBoundReport, BoundError> {
    if !is_spin(ci) {
        return Err(BoundError::NotSpin { c1: first_chern_coefficient(ci) });
    }
    let curvature = curvature_class(ci);
    if curvature == Curvature::Fano {
        return Err(BoundError::Fano);
    }
    let n = ci.real_dim();
    if n < 4 {
        return Err(BoundError::DimensionTooSmall { n });
    }
    let charnum = char_number(ci)?;
    let deduction = match curvature {
        Curvature::CalabiYau => max_parallel_spinors(n as u64)?,
        _ => BigInt::zero(),
    };
    Ok(RsBoundReport {
        ci: ci.clone(),
        n,
        spin: true,
        curvature,
        a_hat_genus: a_hat_genus(ci),
        rs_index_plus: rs_index(ci, Chirality::Plus)?,
        bound_plus: clamp(&charnum - &deduction),
        bound_minus: clamp(-&charnum - &deduction),
        bound_total: clamp(charnum.abs() - &deduction),
        parallel_spinor_deduction: deduction,
        charnum,
    })
}

fn require_even(m: usize) -> Result<(), BoundError> {
    if m < 2 || m % 2 == 1 {
        return Err(BoundError::OddComplexDimension { m });
    }
    Ok(())
}

/// Closed form of `<Â ch(T^C M), [M]>` for the Calabi-Yau hypersurface of
/// degree `m + 2`: `-2 [C(2m+3, m+1) + 1 - (m+2)^2]`.
pub fn cy_hypersurface_char_number_closed_form(m: usize) -> Result<BigInt, BoundError> {
    require_even(m)?;
    let m = m as u64;
    let bracket = binomial(2 * m + 3, m + 1) + 1 - BigInt::from((m + 2) * (m + 2));
    Ok(-2 * bracket)
}

/// `2 [C(2m+3, m+1) + 1 - (m+2)^2] - 2^{m/2}`
pub fn cy_hypersurface_bound_closed_form(m: usize) -> Result<BigInt, BoundError> {
    let charnum = cy_hypersurface_char_number_closed_form(m)?;
    Ok(-charnum - pow2(m as u64 / 2))
}

/// Whether the Calabi-Yau hypersurface bound beats the flat torus `T^{2m}`.
pub fn exceeds_torus(m: usize) -> Result<bool, BoundError> {
    Ok(cy_hypersurface_bound_closed_form(m)? > torus_rs_dimension(2 * m as u64)?)
}

/// Smallest even degree `a > m + 2` whose hypersurface has
/// `|<Â ch(T^C M), [M]>| > threshold`. Such hypersurfaces are spin with
/// negative first Chern class. Terminates because the characteristic number
/// is a polynomial of degree `m + 1` in `a` with nonzero leading term.
pub fn find_degree_exceeding(m: usize, threshold: &BigInt) -> Result<u64, BoundError> {
    require_even(m)?;
    if threshold < &BigInt::from(1) {
        return Err(BoundError::InvalidThreshold);
    }
    let mut a = m as u64 + 4;
    loop {
        let ci = CompleteIntersection::hypersurface(m, a)?;
        if &char_number(&ci)?.abs() > threshold {
            return Ok(a);
        }
        a += 2;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelSpinorRow {
    pub n: u64,
    pub max_parallel_spinors: BigInt,
}

/// `N(n)` for `n = 1 ..= max_n`.
pub fn parallel_spinor_table(max_n: u64) -> Result<Vec<ParallelSpinorRow>, BoundError> {
    if max_n == 0 {
        return Err(BoundError::NonPositiveDimension);
    }
    (1..=max_n)
        .map(|n| Ok(ParallelSpinorRow { n, max_parallel_spinors: max_parallel_spinors(n)? }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalabiYauRow {
    pub m: usize,
    pub rs_bound: BigInt,
    pub torus_rs: BigInt,
}

/// Calabi-Yau hypersurface bound against `RS(T^{2m})` for even
/// `m = 2 ..= max_m`.
pub fn calabi_yau_table(max_m: usize) -> Result<Vec<CalabiYauRow>, BoundError> {
    require_even(max_m)?;
    (2..=max_m)
        .step_by(2)
        .map(|m| {
            Ok(CalabiYauRow {
                m,
                rs_bound: cy_hypersurface_bound_closed_form(m)?,
                torus_rs: torus_rs_dimension(2 * m as u64)?,
            })
        })
        .collect()
}
