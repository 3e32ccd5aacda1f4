//! Exact arithmetic: rationals, bivariate Laurent polynomials, rational
//! functions, truncated series and multivariate polynomials.

pub mod bigrat;
pub mod field;
pub mod gcd;
pub mod laurent;
pub mod mpoly;
pub mod ratfun;
pub mod series;

pub use bigrat::BigRat;
pub use field::{Exact, Field, Ground, Params, Sampled};
pub use laurent::{LaurentPoly2, Mono};
pub use mpoly::MPoly;
pub use ratfun::RatFun2;
pub use series::{expand_series, Direction, TruncSeries, ZPoly};
