//! Polygamma representation of the sum and the rationality decision.

mod classes;
mod decide;
mod expr;
mod rules;

pub use classes::{affine_relate, normalize_class, partition_classes, AffineClass, ClassMember};
pub use decide::{decide, decide_traced, n_min_bound, n_min_bound_with, TraceStage, Verdict, VerdictStatus};
pub use expr::{LogTerm, PGExpr, PGTerm};
pub use rules::{atomic_to_polygamma, multiplication_expand, shift_reduce};
