//! Summand frontend: the [`BiRat`] type, the parser and canonical rendering.

mod birat;
mod parse;
pub(crate) mod render;

pub use birat::{BiRat, KPoly};
pub use parse::parse;
