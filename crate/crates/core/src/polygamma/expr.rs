use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use crate::arith::RatFn;
use crate::expr::render::{inline_pieces, join_terms, ratfn_pieces, scaled_piece};

/// `coef * psi^(order)(arg)` with the normalized polygamma.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PGTerm {
    pub coef: RatFn,
    pub order: u32,
    pub arg: RatFn,
}

impl PGTerm {
    pub fn new(coef: RatFn, order: u32, arg: RatFn) -> Self {
        PGTerm { coef, order, arg }
    }

    /// `psi(order, arg)` without the coefficient.
    pub fn psi_text(&self) -> String {
        format!("psi({}, {})", self.order, arg_text(&self.arg))
    }
}

/// `coef * log(prime)`
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LogTerm {
    pub prime: u64,
    pub coef: RatFn,
}

/// `rational_part + sum coef * psi^(order)(arg) + sum coef * log(prime)`.
///
/// Terms are kept merged: no two share `(order, arg)`, no two share a prime,
/// and no coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PGExpr {
    pub rational_part: RatFn,
    pub pg_terms: Vec<PGTerm>,
    pub log_terms: Vec<LogTerm>,
}

pub(crate) fn arg_text(arg: &RatFn) -> String {
    join_terms(&inline_pieces(arg))
}

fn arg_key(arg: &RatFn) -> (bool, core::cmp::Reverse<usize>, String) {
    let deg = arg.num().degree().unwrap_or(0) + arg.den().degree().unwrap_or(0);
    (arg.is_constant(), core::cmp::Reverse(deg), arg_text(arg))
}

impl PGExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(f: RatFn) -> Self {
        PGExpr { rational_part: f, ..Self::default() }
    }

    pub fn from_term(t: PGTerm) -> Self {
        let mut e = Self::zero();
        e.add_term(t);
        e
    }

    pub fn add_rational(&mut self, f: &RatFn) {
        self.rational_part = &self.rational_part + f;
    }

    pub fn add_term(&mut self, t: PGTerm) {
        if t.coef.is_zero() {
            return;
        }
        if let Some(i) = self.pg_terms.iter().position(|o| o.order == t.order && o.arg == t.arg) {
            let coef = &self.pg_terms[i].coef + &t.coef;
            if coef.is_zero() {
                self.pg_terms.remove(i);
            } else {
                self.pg_terms[i].coef = coef;
            }
        } else {
            self.pg_terms.push(t);
        }
    }

    pub fn add_log(&mut self, prime: u64, coef: RatFn) {
        if coef.is_zero() {
            return;
        }
        if let Some(i) = self.log_terms.iter().position(|o| o.prime == prime) {
            let c = &self.log_terms[i].coef + &coef;
            if c.is_zero() {
                self.log_terms.remove(i);
            } else {
                self.log_terms[i].coef = c;
            }
        } else {
            self.log_terms.push(LogTerm { prime, coef });
        }
    }

    pub fn add_expr(&mut self, other: &PGExpr) {
        self.add_rational(&other.rational_part);
        for t in &other.pg_terms {
            self.add_term(t.clone());
        }
        for l in &other.log_terms {
            self.add_log(l.prime, l.coef.clone());
        }
    }

    pub fn scaled(&self, c: &RatFn) -> PGExpr {
        let mut out = PGExpr::rational(&self.rational_part * c);
        for t in &self.pg_terms {
            out.add_term(PGTerm::new(&t.coef * c, t.order, t.arg.clone()));
        }
        for l in &self.log_terms {
            out.add_log(l.prime, &l.coef * c);
        }
        out
    }

    /// No polygamma and no logarithm terms.
    pub fn is_rational(&self) -> bool {
        self.pg_terms.is_empty() && self.log_terms.is_empty()
    }

    /// Sorts terms into display order: by order, non-constant arguments
    /// first, higher degree first, then by text; logs by prime.
    pub fn canonicalize(&mut self) {
        self.pg_terms.sort_by(|a, b| match a.order.cmp(&b.order) {
            Ordering::Equal => arg_key(&a.arg).cmp(&arg_key(&b.arg)),
            o => o,
        });
        self.log_terms.sort_by_key(|l| l.prime);
    }
}

impl fmt::Display for PGExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut e = self.clone();
        e.canonicalize();
        let mut pieces = Vec::new();
        for t in &e.pg_terms {
            pieces.push(scaled_piece(&t.coef, &t.psi_text()));
        }
        for l in &e.log_terms {
            pieces.push(scaled_piece(&l.coef, &format!("log({})", l.prime)));
        }
        pieces.extend(ratfn_pieces(&e.rational_part));
        f.write_str(&join_terms(&pieces))
    }
}

impl fmt::Display for PGTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(&[scaled_piece(&self.coef, &self.psi_text())]))
    }
}

impl LogTerm {
    pub fn text(&self) -> String {
        format!("log({})", self.prime)
    }
}
