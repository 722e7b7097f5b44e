//! Exact characteristic numbers of complete intersections in complex
//! projective space, and the Rarita-Schwinger dimension bounds they imply.
//!
//! * [`ring`]: rationals, binomials and sparse multivariate polynomials.
//! * [`series`]: truncated power series over either coefficient ring.
//! * [`charclass`]: Chern, Pontryagin, Â and Chern-character data and the
//!   characteristic number `<Â(TM) ch(T^C M), [M]>`.
//! * [`rsbounds`]: parallel-spinor counts, torus counts and the index bound.

pub mod charclass;
pub mod ring;
pub mod rsbounds;
pub mod series;

pub use charclass::{
    a_hat_genus, char_number, char_number_polynomial, char_number_rational, CharClassError,
    Chirality, ClassPolynomial, CompleteIntersection, Curvature,
};
pub use num_bigint::BigInt;
pub use ring::{binomial, MultiPoly, Rational, Ring, RingError};
pub use rsbounds::{rs_lower_bound, BoundError, RsBoundReport};
pub use series::{std_series, PowerSeries, SeriesError, StdSeries};
