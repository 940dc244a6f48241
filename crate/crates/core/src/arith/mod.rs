//! Exact arithmetic kernel: rationals, dense polynomials over a field,
//! rational functions of `n`, interpolation, Bernoulli numbers and rational
//! root isolation.

mod bernoulli;
mod interp;
mod modgcd;
mod poly;
mod rat;
mod ratfn;
mod roots;

pub use bernoulli::bernoulli;
pub use interp::cauchy_interpolate;
pub use poly::{Field, Poly};
pub use rat::{floor, int, is_integer, lcm_of_denominators, rat, to_f64, Rat};
pub use ratfn::{RatFn, UPoly};
pub use roots::{cauchy_bound, integer_roots, rational_roots};
