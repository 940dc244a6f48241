use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, ToPrimitive};

use super::classes::{normalize_class, partition_classes};
use super::expr::{PGExpr, PGTerm};
use super::rules::atomic_to_polygamma;
use crate::analysis::{classify, k_linear_roots, reflected_root, LinearFactor, SlownessClass};
use crate::arith::{cauchy_bound, integer_roots, is_integer, lcm_of_denominators, Rat, RatFn, UPoly};
use crate::decompose::{decompose_factored, faulhaber_sum, AtomicFraction};
use crate::expr::render::kpoly_text;
use crate::expr::BiRat;
use crate::numeric::direct_sum;
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VerdictStatus {
    Rational,
    NotRational,
    Unknown,
    Unsupported,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Rational => "rational",
            VerdictStatus::NotRational => "not_rational",
            VerdictStatus::Unknown => "unknown",
            VerdictStatus::Unsupported => "unsupported",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// `S(n) = closed_form(n)` for every integer `n >= valid_from`.
    Rational { closed_form: RatFn, valid_from: u64 },
    /// Every root is slow (directly or after reflection) and a polygamma
    /// term with a non-constant argument survives normalization.
    NotRational { residual: PGExpr, roots: Vec<(LinearFactor, SlownessClass)> },
    /// Something survives but a fast root rules out a certificate.
    Unknown { residual: PGExpr },
    Unsupported { reason: String },
}

impl Verdict {
    pub fn status(&self) -> VerdictStatus {
        match self {
            Verdict::Rational { .. } => VerdictStatus::Rational,
            Verdict::NotRational { .. } => VerdictStatus::NotRational,
            Verdict::Unknown { .. } => VerdictStatus::Unknown,
            Verdict::Unsupported { .. } => VerdictStatus::Unsupported,
        }
    }

    pub fn closed_form(&self) -> Option<&RatFn> {
        match self {
            Verdict::Rational { closed_form, .. } => Some(closed_form),
            _ => None,
        }
    }

    pub fn residual(&self) -> Option<&PGExpr> {
        match self {
            Verdict::NotRational { residual, .. } | Verdict::Unknown { residual } => Some(residual),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Rational { closed_form, valid_from } => {
                write!(f, "rational: {closed_form} (n >= {valid_from})")
            }
            Verdict::NotRational { residual, .. } => write!(f, "not_rational: {residual}"),
            Verdict::Unknown { residual } => write!(f, "unknown: {residual}"),
            Verdict::Unsupported { reason } => write!(f, "unsupported: {reason}"),
        }
    }
}

/// One step of [`decide_traced`], as human-readable text.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStage {
    pub stage: &'static str,
    pub detail: String,
}

pub fn decide(r: &BiRat) -> Result<Verdict, Error> {
    decide_traced(r).map(|(v, _)| v)
}

/// Runs the full pipeline: linear roots in `k`, partial fractions, power
/// sums, polygamma form, affine classes, normalization.
///
/// Atoms at a root `alpha ~ n` with `n - 1 - alpha` slow are read backwards
/// (`k -> n - 1 - k`), which maps `beta/(k - alpha)^t` to
/// `(-1)^t beta/(k - (n - 1 - alpha))^t` without changing the sum.
pub fn decide_traced(r: &BiRat) -> Result<(Verdict, Vec<TraceStage>), Error> {
    let mut trace = Vec::new();
    let mut log = |stage: &'static str, detail: String| trace.push(TraceStage { stage, detail });

    let (factors, remainder) = k_linear_roots(r.den())?;
    let classes: Vec<SlownessClass> = factors.iter().map(|f| classify(&f.alpha)).collect();
    let roots_text: Vec<String> = factors
        .iter()
        .zip(&classes)
        .map(|(f, c)| format!("k = {} (multiplicity {}, {})", f.alpha, f.multiplicity, c.as_str()))
        .collect();
    log("factorization", if roots_text.is_empty() { "no roots".into() } else { roots_text.join("; ") });
    if !remainder.is_constant() {
        log("factorization", format!("factor without roots in Q(n): {}", kpoly_text(&remainder)));
        return Ok((Verdict::Unsupported { reason: "non-rational roots in k".into() }, trace));
    }

    let effective: Vec<RatFn> = factors
        .iter()
        .zip(&classes)
        .map(|(f, c)| if *c == SlownessClass::ReflectSlow { reflected_root(&f.alpha) } else { f.alpha.clone() })
        .collect();
    // A reflected root hits 0..n-1 exactly when the original does. The
    // summand is singular for infinitely many n only if some root lands in
    // 0..n-1 infinitely often, i.e. both alpha and n - 1 - alpha do.
    let singular_roots = effective.clone();
    if singular_roots.iter().any(|a| root_bad_set(a).is_none() && root_bad_set(&reflected_root(a)).is_none()) {
        return Ok((Verdict::Unsupported { reason: "persistent singularity".into() }, trace));
    }

    // k_linear_roots divided every factor out exactly
    let pfd = decompose_factored(r, &factors);
    log("pfd", pfd_text(&pfd.poly_part, &pfd.fractions));

    let mut expr = PGExpr::rational(faulhaber_sum(&pfd.poly_part));
    let mut betas = Vec::new();
    for frac in &pfd.fractions {
        let idx = factors.iter().position(|f| f.alpha == frac.alpha).expect("root of the denominator");
        let atom = if classes[idx] == SlownessClass::ReflectSlow {
            let sign = if frac.t % 2 == 0 { RatFn::one() } else { -RatFn::one() };
            AtomicFraction { alpha: effective[idx].clone(), t: frac.t, beta: &frac.beta * &sign }
        } else {
            frac.clone()
        };
        betas.push(atom.beta.clone());
        expr.add_expr(&atomic_to_polygamma(&atom));
    }
    log("pgexpr", expr.to_string());

    let (constant_terms, moving_terms): (Vec<PGTerm>, Vec<PGTerm>) =
        expr.pg_terms.iter().cloned().partition(|t| t.arg.is_constant());
    let mut normalized = PGExpr::rational(expr.rational_part.clone());
    let mut class_texts = Vec::new();
    for class in partition_classes(&moving_terms) {
        let members: Vec<String> = class.members.iter().map(|m| m.term.to_string()).collect();
        class_texts.push(format!("[{}]", members.join(", ")));
        normalized.add_expr(&normalize_class(&class)?);
    }
    log("classes", if class_texts.is_empty() { "none".into() } else { class_texts.join(" ") });
    let mut constants = PGExpr::zero();
    for class in partition_classes(&constant_terms) {
        constants.add_expr(&normalize_class(&class)?);
    }
    normalized.add_rational(&constants.rational_part);
    for l in &constants.log_terms {
        normalized.add_log(l.prime, l.coef.clone());
    }
    let surviving_moving = !normalized.pg_terms.is_empty();
    for t in &constants.pg_terms {
        normalized.add_term(t.clone());
    }
    log("normalized", normalized.to_string());

    let transcendental_constant = !surviving_moving
        && normalized.pg_terms.iter().all(|t| t.coef.is_constant())
        && normalized.log_terms.iter().all(|l| l.coef.is_constant());
    if transcendental_constant {
        let mut extra: Vec<RatFn> = r.coefficients().cloned().collect();
        extra.extend(betas);
        let Some(valid_from) = n_min_bound_with(&singular_roots, &normalized.rational_part, &extra) else {
            return Ok((Verdict::Unsupported { reason: "persistent singularity".into() }, trace));
        };
        let mut closed_form = normalized.rational_part.clone();
        if !normalized.is_rational() {
            // S(n) - rational_part is a constant, rational because S(n) is.
            let n0 = Rat::from_integer(valid_from.into());
            let at = closed_form.eval(&n0).expect("valid_from avoids poles");
            let c = direct_sum(r, valid_from)? - at;
            log("constant", format!("constant terms sum to {c}, fixed at n = {valid_from}"));
            closed_form = &closed_form + &RatFn::constant(c);
        }
        return Ok((Verdict::Rational { closed_form, valid_from }, trace));
    }

    let all_slow = classes.iter().all(|c| *c != SlownessClass::Fast);
    let verdict = if all_slow && surviving_moving {
        let roots = factors.into_iter().zip(classes).collect();
        Verdict::NotRational { residual: normalized, roots }
    } else {
        Verdict::Unknown { residual: normalized }
    };
    Ok((verdict, trace))
}

fn pfd_text(poly: &crate::expr::KPoly, fractions: &[AtomicFraction]) -> String {
    let mut parts = Vec::new();
    if !poly.is_zero() {
        parts.push(kpoly_text(poly));
    }
    for f in fractions {
        let den = crate::expr::KPoly::linear_root(f.alpha.clone());
        let den = if f.t == 1 { format!("({})", kpoly_text(&den)) } else { format!("({})^{}", kpoly_text(&den), f.t) };
        parts.push(format!("({})/{den}", f.beta));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Positive integers `n` at which a polynomial in `n` vanishes.
fn positive_zeros(p: &UPoly) -> Vec<u64> {
    if p.is_zero() {
        return Vec::new();
    }
    integer_roots(p).into_iter().filter(|z| z.is_positive()).filter_map(|z| z.to_u64()).collect()
}

/// Positive integers `n` with `alpha(n)` undefined or a nonnegative integer;
/// `None` when there are infinitely many.
fn root_bad_set(alpha: &RatFn) -> Option<Vec<u64>> {
    let mut bad = positive_zeros(alpha.den());
    let hit = |n: u64| alpha.eval(&Rat::from_integer(n.into())).is_some_and(|v| is_integer(&v) && !v.is_negative());

    if let Some(c) = alpha.as_constant() {
        return if is_integer(&c) && !c.is_negative() { None } else { Some(bad) };
    }
    let d = lcm_of_denominators(alpha.num().coeffs().iter().chain(alpha.den().coeffs()));
    if alpha.is_polynomial() {
        let p = alpha.num() * &UPoly::constant(Rat::one() / alpha.den().coeff(0));
        let period = d.to_u64()?;
        // sign of p is that of its leading coefficient past the root bound
        let bound = cauchy_bound(&p).ceil().to_integer().to_u64()?;
        if p.lc().expect("non-constant").is_positive() {
            // a single integral residue past the bound repeats forever
            if (bound + 1..=bound + period).any(hit) {
                return None;
            }
        }
        bad.extend((1..=bound + period).filter(|&n| hit(n)));
        return Some(bad);
    }
    // alpha = poly + proper part; once |proper| < 1/d no integer is reachable
    // except where the proper part vanishes.
    let (_, rem) = alpha.num().div_rem(alpha.den());
    let dr = Rat::from_integer(d.clone());
    let scaled = &rem * &UPoly::constant(dr);
    let gap = &(alpha.den() * alpha.den()) - &(&scaled * &scaled);
    let bound = cauchy_bound(&gap).max(cauchy_bound(&rem)).ceil().to_integer().to_u64()?;
    bad.extend((1..=bound).filter(|&n| hit(n)));
    Some(bad)
}

/// Smallest `N >= 1` such that for every integer `n >= N` no root lands on a
/// nonnegative integer and `closed_form` is defined. `None` when some root
/// is singular for infinitely many `n`.
pub fn n_min_bound(roots: &[LinearFactor], closed_form: &RatFn) -> Option<u64> {
    let alphas: Vec<RatFn> = roots.iter().map(|f| f.alpha.clone()).collect();
    n_min_bound_with(&alphas, closed_form, &[])
}

/// [`n_min_bound`] over bare root functions, also avoiding the poles of every
/// function in `extra`.
pub fn n_min_bound_with(roots: &[RatFn], closed_form: &RatFn, extra: &[RatFn]) -> Option<u64> {
    let mut bad: Vec<u64> = Vec::new();
    for a in roots {
        bad.extend(root_bad_set(a)?);
    }
    for f in core::iter::once(closed_form).chain(extra) {
        bad.extend(positive_zeros(f.den()));
    }
    Some(bad.into_iter().max().map_or(1, |m| m + 1))
}
