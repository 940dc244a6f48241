use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::expr::{arg_text, PGExpr, PGTerm};
use super::rules::{multiplication_expand, shift_reduce};
use crate::arith::{floor, Rat, RatFn};
use crate::Error;

/// `(beta, sigma)` with `g2 = beta*g1 + sigma`, both rational constants and
/// `beta != 0`, if such a relation exists.
pub fn affine_relate(g1: &RatFn, g2: &RatFn) -> Result<Option<(Rat, Rat)>, Error> {
    if g1.is_constant() {
        return Err(Error::ConstantBase);
    }
    let ratio = &g2.derivative() / &g1.derivative();
    let Some(beta) = ratio.as_constant() else {
        return Ok(None);
    };
    if beta.is_zero() {
        return Ok(None);
    }
    let rest = g2 - &(g1 * &RatFn::constant(beta.clone()));
    Ok(rest.as_constant().map(|sigma| (beta, sigma)))
}

/// A term of an affine class: `term.arg = beta*base + sigma`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassMember {
    pub term: PGTerm,
    pub beta: Rat,
    pub sigma: Rat,
}

/// Terms of one order whose arguments are pairwise related by positive
/// dilations and rational shifts. Constant arguments share a class whose
/// base is `0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineClass {
    pub order: u32,
    pub base: RatFn,
    pub members: Vec<ClassMember>,
}

fn canonical_key(arg: &RatFn) -> (usize, Rat, String) {
    let deg = arg.num().degree().unwrap_or(0) + arg.den().degree().unwrap_or(0);
    let lead = arg.num().lc().map(|c| c.abs()).unwrap_or_else(Rat::zero);
    (deg, lead, arg_text(arg))
}

/// Groups terms into maximal classes. Positive-dilation relatedness is an
/// equivalence relation, so comparing against each class base suffices; the
/// base is the member that sorts first by degree, leading coefficient size
/// and text.
pub fn partition_classes(terms: &[PGTerm]) -> Vec<AffineClass> {
    let mut sorted: Vec<&PGTerm> = terms.iter().collect();
    sorted.sort_by_cached_key(|t| (t.order, canonical_key(&t.arg)));
    let mut classes: Vec<AffineClass> = Vec::new();
    for t in sorted {
        if let Some(c) = t.arg.as_constant() {
            let member = ClassMember { term: t.clone(), beta: Rat::one(), sigma: c };
            match classes.iter_mut().find(|cl| cl.order == t.order && cl.base.is_zero()) {
                Some(cl) => cl.members.push(member),
                None => classes.push(AffineClass { order: t.order, base: RatFn::zero(), members: alloc::vec![member] }),
            }
            continue;
        }
        let mut placed = false;
        for cl in classes.iter_mut().filter(|cl| cl.order == t.order && !cl.base.is_zero()) {
            if let Ok(Some((beta, sigma))) = affine_relate(&cl.base, &t.arg) {
                if beta.is_positive() {
                    cl.members.push(ClassMember { term: t.clone(), beta, sigma });
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            let member = ClassMember { term: t.clone(), beta: Rat::one(), sigma: Rat::zero() };
            classes.push(AffineClass { order: t.order, base: t.arg.clone(), members: alloc::vec![member] });
        }
    }
    classes
}

fn frac(q: &Rat) -> Rat {
    q - Rat::from_integer(floor(q))
}

/// Rewrites a class over `w = base/Q` (`Q` the lcm of the dilation
/// denominators): every member is expanded with the multiplication rule into
/// arguments `w + c`, and each residue class of `c` mod 1 is shifted down to
/// its smallest `c`. Surviving arguments are pairwise incommensurable.
pub fn normalize_class(class: &AffineClass) -> Result<PGExpr, Error> {
    if class.members.iter().any(|m| !m.beta.is_positive()) {
        return Err(Error::NegativeDilation);
    }
    let mut expanded = PGExpr::zero();
    let w = if class.base.is_zero() {
        for m in &class.members {
            expanded.add_term(m.term.clone());
        }
        RatFn::zero()
    } else {
        let q = class.members.iter().fold(BigInt::one(), |acc, m| acc.lcm(m.beta.denom()));
        let qr = Rat::from_integer(q);
        let w = &class.base / &RatFn::constant(qr.clone());
        for m in &class.members {
            let mult = (&m.beta * &qr).to_integer();
            let mult = u32::try_from(&mult).map_err(|_| Error::InvalidArgument("dilation too large".into()))?;
            if mult == 1 {
                expanded.add_term(m.term.clone());
            } else {
                expanded.add_expr(&multiplication_expand(&m.term, mult)?);
            }
        }
        w
    };

    let offsets: Vec<Rat> = expanded
        .pg_terms
        .iter()
        .map(|t| (&t.arg - &w).as_constant().expect("argument is w plus a constant"))
        .collect();
    let mut out = PGExpr { rational_part: expanded.rational_part.clone(), pg_terms: Vec::new(), log_terms: Vec::new() };
    for l in &expanded.log_terms {
        out.add_log(l.prime, l.coef.clone());
    }
    for (t, c) in expanded.pg_terms.iter().zip(&offsets) {
        let r = frac(c);
        let lowest = offsets.iter().filter(|o| frac(o) == r).min().expect("contains c");
        let j = (c - lowest).to_integer();
        let j = i64::try_from(&j).map_err(|_| Error::InvalidArgument("shift too large".into()))?;
        out.add_expr(&shift_reduce(t, j)?);
    }
    Ok(out)
}
