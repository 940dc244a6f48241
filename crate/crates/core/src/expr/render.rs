//! Canonical text for engine values.
//!
//! Rational functions of `n` are shown integer-cleared (`(2*n^3 - 3*n^2 + n)/6`),
//! polynomials in `k` list powers of `k` outermost in decreasing degree, and a
//! summand is shown with its monic denominator. Every rendering parses back to
//! the same normalized value.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::birat::{BiRat, KPoly};
use crate::arith::{lcm_of_denominators, Rat, RatFn};

/// `f` split into a sign and the text of `|f|` (the rendering of `-f` when
/// the cleared numerator has a negative leading coefficient).
pub(crate) struct SignedText {
    pub negative: bool,
    pub body: String,
    /// `body` has a top-level `+` or `-`.
    pub is_sum: bool,
}

fn cleared(f: &RatFn) -> (Vec<BigInt>, Vec<BigInt>) {
    let l = lcm_of_denominators(f.num().coeffs().iter().chain(f.den().coeffs()));
    let scale = |c: &Rat| (c * Rat::from_integer(l.clone())).to_integer();
    let mut num: Vec<BigInt> = f.num().coeffs().iter().map(scale).collect();
    let mut den: Vec<BigInt> = f.den().coeffs().iter().map(scale).collect();
    let g = num.iter().chain(den.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        num.iter_mut().for_each(|c| *c /= &g);
        den.iter_mut().for_each(|c| *c /= &g);
    }
    (num, den)
}

fn power(var: &str, d: usize) -> String {
    match d {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{d}"),
    }
}

/// Signed monomials of an integer polynomial, highest degree first.
fn int_terms(coeffs: &[BigInt], var: &str) -> Vec<(bool, String)> {
    let as_rat: Vec<Rat> = coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect();
    rat_terms(&as_rat, var)
}

pub(crate) fn join_terms(pieces: &[(bool, String)]) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in pieces.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

pub(crate) fn signed_text(f: &RatFn) -> SignedText {
    let (mut num, den) = cleared(f);
    let negative = num.last().is_some_and(|c| c.is_negative());
    if negative {
        num.iter_mut().for_each(|c| *c = -&*c);
    }
    let num_terms = int_terms(&num, "n");
    let num_text = join_terms(&num_terms);
    if den.len() == 1 && den[0].is_one() {
        return SignedText { negative, body: num_text, is_sum: num_terms.len() > 1 };
    }
    let num_part = if num_terms.len() > 1 { format!("({num_text})") } else { num_text };
    let den_terms = int_terms(&den, "n");
    let den_text = join_terms(&den_terms);
    let bare = den_terms.len() == 1 && !den_text.contains('*');
    let den_part = if bare { den_text } else { format!("({den_text})") };
    SignedText { negative, body: format!("{num_part}/{den_part}"), is_sum: false }
}

fn rat_terms(coeffs: &[Rat], var: &str) -> Vec<(bool, String)> {
    coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| {
            let mag = c.abs();
            let body = if d == 0 {
                mag.to_string()
            } else if mag.is_one() {
                power(var, d)
            } else {
                format!("{mag}*{}", power(var, d))
            };
            (c.is_negative(), body)
        })
        .collect()
}

/// Like [`signed_text`], but polynomials in `n` keep exact fractional
/// coefficients term by term (`n + 1/2` rather than `(2*n + 1)/2`). Used for
/// values embedded in larger expressions.
pub(crate) fn inline_text(f: &RatFn) -> SignedText {
    if !f.is_polynomial() {
        return signed_text(f);
    }
    let negative = f.num().lc().is_some_and(|c| c.is_negative());
    let p = if negative { -f.num() } else { f.num().clone() };
    let terms = rat_terms(p.coeffs(), "n");
    SignedText { negative, body: join_terms(&terms), is_sum: terms.len() > 1 }
}

/// Signed pieces of an embedded value; polynomials are split term by term.
pub(crate) fn inline_pieces(f: &RatFn) -> Vec<(bool, String)> {
    if f.is_polynomial() {
        rat_terms(f.num().coeffs(), "n")
    } else {
        ratfn_pieces(f)
    }
}

/// `c * thing` as a signed piece, dropping a unit coefficient.
pub(crate) fn scaled_piece(c: &RatFn, thing: &str) -> (bool, String) {
    let s = inline_text(c);
    let body = if s.body == "1" {
        thing.to_string()
    } else if s.is_sum {
        format!("({})*{thing}", s.body)
    } else {
        format!("{}*{thing}", s.body)
    };
    (s.negative, body)
}

/// Signed pieces of a standalone rational function: polynomials are listed
/// term by term, anything with a denominator is one piece.
pub(crate) fn ratfn_pieces(f: &RatFn) -> Vec<(bool, String)> {
    if f.is_zero() {
        return Vec::new();
    }
    let (num, den) = cleared(f);
    if den.len() == 1 && den[0].is_one() {
        return int_terms(&num, "n");
    }
    let s = signed_text(f);
    alloc::vec![(s.negative, s.body)]
}

fn kpoly_pieces(p: &KPoly) -> Vec<(bool, String)> {
    let mut pieces = Vec::new();
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if d == 0 {
            pieces.extend(inline_pieces(c));
        } else {
            pieces.push(scaled_piece(c, &power("k", d)));
        }
    }
    pieces
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(&ratfn_pieces(self)))
    }
}

pub(crate) fn kpoly_text(p: &KPoly) -> String {
    join_terms(&kpoly_pieces(p))
}

impl fmt::Display for BiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = self.num().clone();
        let mut den = self.den().clone();
        // p/q over a monic denominator reads better as p/(q*den)
        if let Some(c) = num.is_constant().then(|| num.coeff(0).as_constant()).flatten() {
            if !den.is_one() && !c.denom().is_one() {
                let q = RatFn::constant(Rat::from_integer(c.denom().clone()));
                num = num.scale(&q);
                den = den.scale(&q);
            }
        }
        let num_pieces = kpoly_pieces(&num);
        let num_text = join_terms(&num_pieces);
        if den.is_one() {
            return f.write_str(&num_text);
        }
        let num_part = if num_pieces.len() > 1 || num_text.contains('/') { format!("({num_text})") } else { num_text };
        let den_text = kpoly_text(&den);
        let den_part = if den.term_count() == 1 { den_text } else { format!("({den_text})") };
        write!(f, "{num_part}/{den_part}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use alloc::string::ToString;

    fn rf(text: &str) -> RatFn {
        let v = parse(text).unwrap();
        assert!(v.den().is_one() && v.num().is_constant());
        v.num().coeff(0)
    }

    #[test]
    fn ratfn_formats() {
        let n = RatFn::var();
        let f = &n / &(&n + &RatFn::one());
        assert_eq!(f.to_string(), "n/(n + 1)");
        assert_eq!((-&f).to_string(), "-n/(n + 1)");
        assert_eq!((&RatFn::one() / &n).to_string(), "1/n");
        assert_eq!(rf("(2*n^3 - 3*n^2 + n)/6").to_string(), "(2*n^3 - 3*n^2 + n)/6");
        assert_eq!(rf("1/(2*n)").to_string(), "1/(2*n)");
        assert_eq!(rf("-n^2 - 1").to_string(), "-n^2 - 1");
        assert_eq!(rf("(1 - n)/n").to_string(), "-(n - 1)/n");
        assert_eq!(rf("n/2 + 1/2").to_string(), "(n + 1)/2");
        assert_eq!(RatFn::zero().to_string(), "0");
    }

    #[test]
    fn birat_formats() {
        assert_eq!(parse("1/((k+1)*(k+2))").unwrap().to_string(), "1/(k^2 + 3*k + 2)");
        assert_eq!(parse("(n*k - 1)/(n*k)").unwrap().to_string(), "(k - 1/n)/k");
        assert_eq!(parse("1/(k-n+1/2)").unwrap().to_string(), "1/(k - n + 1/2)");
        assert_eq!(parse("-1/(k+1/2)").unwrap().to_string(), "-1/(k + 1/2)");
        assert_eq!(parse("1/(2*k+1)").unwrap().to_string(), "1/(2*k + 1)");
        assert_eq!(parse("-3/(4*k^2+2)").unwrap().to_string(), "-3/(4*k^2 + 2)");
        assert_eq!(parse("k^2/(k^2)").unwrap().to_string(), "1");
        assert_eq!(parse("(n+1)*k^2 - k/n - n - 1").unwrap().to_string(), "(n + 1)*k^2 - 1/n*k - n - 1");
    }

    #[test]
    fn rendering_parses_back() {
        for text in ["(k - 1/n)/k", "1/(k^2 + 1)", "(n^2 + 1)/(n - 3)*k/(k + n/2)", "k^3 - 2/(n + 1)*k", "1/k^2"] {
            let v = parse(text).unwrap();
            assert_eq!(parse(&v.to_string()).unwrap(), v, "{text}");
        }
    }
}
