//! Exact definite summation of rational summands.
//!
//! Given `R(k, n) = P(k, n) / Q(k, n)` with rational coefficients, the engine
//! decides whether `S(n) = sum_{k=0}^{n-1} R(k, n)` is a rational function of
//! `n` and returns it when it is. The sum is rewritten as a finite combination
//! of normalized polygamma values, the arguments are grouped into affine
//! classes, and each class is reduced with the shift and multiplication rules.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the command line and JSON
//! live in the `ratsum` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod arith;
pub mod decompose;
mod error;
pub mod expr;
pub mod numeric;
pub mod polygamma;
pub mod transforms;

pub use analysis::{asymptotics_of, classify, k_linear_roots, Asymptotics, LinearFactor, SlownessClass};
pub use arith::{bernoulli, cauchy_interpolate, Field, Poly, RatFn, Rat, UPoly};
pub use decompose::{decompose, faulhaber_sum, AtomicFraction, Pfd};
pub use error::{Error, SyntaxError};
pub use expr::{parse, BiRat, KPoly};
pub use numeric::{check_identity, direct_sum, eval_pgexpr, psi_norm, CheckReport, EvalConfig, Identity};
pub use polygamma::{
    affine_relate, atomic_to_polygamma, decide, decide_traced, multiplication_expand, n_min_bound,
    normalize_class, partition_classes, shift_reduce, AffineClass, LogTerm, PGExpr, PGTerm,
    TraceStage, Verdict, VerdictStatus,
};
pub use transforms::{m_section, reflect_full, split_at, SectionedSummand};
