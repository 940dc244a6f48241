//! Floating evaluation of normalized polygamma values, identity checks and
//! the exact direct-summation oracle.

use alloc::format;
use alloc::vec::Vec;

// `Float` supplies ln/powi/tan without std
#[allow(unused_imports)]
use num_traits::{Float, Zero};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::arith::{bernoulli, to_f64, Rat, RatFn};
use crate::expr::BiRat;
use crate::polygamma::{multiplication_expand, shift_reduce, PGExpr, PGTerm};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct EvalConfig {
    /// Arguments are shifted upward until they reach this value.
    pub shift_threshold: f64,
    /// Number of Bernoulli pairs in the asymptotic series.
    pub series_terms: usize,
    /// Decimal digits carried; evaluation is in `f64`, so at most 15.
    pub working_precision: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { shift_threshold: 16.0, series_terms: 10, working_precision: 15 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.shift_threshold >= 8.0) {
            return Err(Error::InvalidArgument("shift_threshold must be at least 8".into()));
        }
        if self.series_terms < 4 {
            return Err(Error::InvalidArgument("series_terms must be at least 4".into()));
        }
        if self.working_precision != 15 {
            return Err(Error::InvalidArgument("working_precision must be 15 (double precision)".into()));
        }
        Ok(())
    }
}

fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Normalized polygamma `(-1)^s/s! * d^(s+1)/dz^(s+1) log Gamma(z)` at real
/// `x`, so that `psi^(s)(x + 1) = psi^(s)(x) + 1/x^(s+1)`.
pub fn psi_norm(s: u32, x: f64, cfg: &EvalConfig) -> Result<f64, Error> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite argument {x}")));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(format!("psi({s}, {x})")));
    }
    let p = s as i32 + 1;
    let mut x = x;
    let mut correction = 0.0;
    while x < cfg.shift_threshold {
        correction -= x.powi(-p);
        x += 1.0;
    }
    let series = if s == 0 {
        let mut acc = x.ln() - 0.5 / x;
        for k in 1..=cfg.series_terms {
            acc -= to_f64(&bernoulli(2 * k)) / (2 * k) as f64 * x.powi(-2 * k as i32);
        }
        acc
    } else {
        let sf = s as f64;
        let mut acc = 1.0 / (sf * x.powi(s as i32)) + 0.5 * x.powi(-p);
        for k in 1..=cfg.series_terms as u64 {
            let c = to_f64(&bernoulli(2 * k as usize)) * binomial(2 * k + s as u64 - 1, s as u64) / (2 * k) as f64;
            acc += c * x.powi(-((2 * k) as i32 + s as i32));
        }
        -acc
    };
    Ok(series + correction)
}

fn eval_ratfn(f: &RatFn, n: f64, what: &str) -> Result<f64, Error> {
    f.eval_f64(n).ok_or_else(|| Error::Pole(format!("{what} at n = {n}")))
}

/// Value of `e` at `n`.
pub fn eval_pgexpr(e: &PGExpr, n: f64, cfg: &EvalConfig) -> Result<f64, Error> {
    let mut acc = eval_ratfn(&e.rational_part, n, "rational part")?;
    for t in &e.pg_terms {
        let arg = eval_ratfn(&t.arg, n, "argument")?;
        let coef = eval_ratfn(&t.coef, n, "coefficient")?;
        acc += coef * psi_norm(t.order, arg, cfg).map_err(|_| Error::Pole(format!("{t} at n = {n}")))?;
    }
    for l in &e.log_terms {
        acc += eval_ratfn(&l.coef, n, "log coefficient")? * (l.prime as f64).ln();
    }
    Ok(acc)
}

/// `sum_{k=0}^{n0-1} R(k, n0)` in exact arithmetic.
pub fn direct_sum(r: &BiRat, n0: u64) -> Result<Rat, Error> {
    if n0 == 0 {
        return Ok(Rat::zero());
    }
    let (num, den) = r
        .specialize_n(&Rat::from_integer(n0.into()))
        .ok_or_else(|| Error::Pole(format!("summand coefficient undefined at n = {n0}")))?;
    let mut total = Rat::zero();
    for k in 0..n0 {
        let kr = Rat::from_integer(k.into());
        let d = den.eval(&kr);
        if d.is_zero() {
            return Err(Error::SingularTerm { k, n: n0 });
        }
        total += num.eval(&kr) / d;
    }
    Ok(total)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Identity {
    /// `psi(z + 1) = psi(z) + 1/z^(s+1)`
    Shift,
    /// `psi(1 - z) = psi(z) + pi*cot(pi*z)` and its derivatives
    Reflection,
    /// `psi(m*z) = log m + (1/m) sum_r psi(z + r/m)` and its derivatives
    Multiplication,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Shift => "shift",
            Identity::Reflection => "reflection",
            Identity::Multiplication => "multiplication",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub identity: Identity,
    pub max_abs_error: f64,
    pub points: usize,
}

/// Random rational in `[lo, hi]` with denominator 1000, at least `gap` from
/// every integer.
fn sample(rng: &mut SmallRng, lo: f64, hi: f64, gap: f64) -> Rat {
    loop {
        let v = rng.gen_range(lo..hi);
        if (v - v.round()).abs() >= gap {
            return Rat::new(((v * 1000.0).round() as i64).into(), 1000.into());
        }
    }
}

/// `P_s(c)` with `d^s/dz^s [pi cot(pi z)] = pi^(s+1) P_s(cot(pi z))`,
/// coefficients low to high.
fn cot_derivative_poly(s: u32) -> Vec<f64> {
    let mut p = alloc::vec![0.0, 1.0];
    for _ in 0..s {
        // P' then multiply by -(1 + c^2)
        let dp: Vec<f64> = p.iter().enumerate().skip(1).map(|(i, c)| i as f64 * c).collect();
        let mut next = alloc::vec![0.0; dp.len() + 2];
        for (i, c) in dp.iter().enumerate() {
            next[i] -= c;
            next[i + 2] -= c;
        }
        p = next;
    }
    p
}

fn factorial(s: u32) -> f64 {
    (1..=s).fold(1.0, |acc, i| acc * i as f64)
}

/// Evaluates both sides of `which` at `points` random real arguments per
/// order and reports the largest absolute discrepancy. Multiplication is
/// checked for `m` in `{2, 3, 6}` through the symbolic expansion, including
/// its logarithm terms; shifts go through the symbolic shift rule with
/// `j` in `-2..=3`.
pub fn check_identity(which: Identity, orders: &[u32], points: usize, cfg: &EvalConfig) -> Result<CheckReport, Error> {
    if points == 0 {
        return Err(Error::InvalidArgument("points must be at least 1".into()));
    }
    cfg.validate()?;
    let mut rng = SmallRng::seed_from_u64(0x5eed ^ which as u64);
    let mut max_err: f64 = 0.0;
    let value = |e: &PGExpr| eval_pgexpr(e, 0.0, cfg);
    for &s in orders {
        for i in 0..points {
            let err = match which {
                Identity::Shift => {
                    let x = sample(&mut rng, -2.5, 30.0, 0.05);
                    let j = rng.gen_range(-2i64..=3);
                    let term = PGTerm::new(RatFn::constant(Rat::from_integer(1.into())), s, RatFn::constant(x));
                    let rewritten = shift_reduce(&term, j)?;
                    (value(&PGExpr::from_term(term))? - value(&rewritten)?).abs()
                }
                Identity::Multiplication => {
                    let m = [2u32, 3, 6][i % 3];
                    let x = sample(&mut rng, 0.05, 25.0, 0.0);
                    let arg = RatFn::constant(&x * Rat::from_integer(m.into()));
                    let term = PGTerm::new(RatFn::constant(Rat::from_integer(1.into())), s, arg);
                    let expanded = multiplication_expand(&term, m)?;
                    (value(&PGExpr::from_term(term))? - value(&expanded)?).abs()
                }
                Identity::Reflection => {
                    let z = to_f64(&sample(&mut rng, -2.5, 3.5, 0.05));
                    let pi = core::f64::consts::PI;
                    let c = 1.0 / (pi * z).tan();
                    let poly = cot_derivative_poly(s);
                    let p_val = poly.iter().rev().fold(0.0, |acc, a| acc * c + a);
                    let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
                    let rhs = sign * psi_norm(s, z, cfg)? + pi.powi(s as i32 + 1) * p_val / factorial(s);
                    (psi_norm(s, 1.0 - z, cfg)? - rhs).abs()
                }
            };
            max_err = max_err.max(err);
        }
    }
    Ok(CheckReport { identity: which, max_abs_error: max_err, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::expr::parse;

    const EULER: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn known_values() {
        let cfg = EvalConfig::default();
        assert!((psi_norm(0, 1.0, &cfg).unwrap() + EULER).abs() < 1e-13);
        let zeta2 = core::f64::consts::PI.powi(2) / 6.0;
        assert!((psi_norm(1, 1.0, &cfg).unwrap() + zeta2).abs() < 1e-13);
        assert!((psi_norm(0, 2.0, &cfg).unwrap() - psi_norm(0, 1.0, &cfg).unwrap() - 1.0).abs() < 1e-12);
        // psi(1/2) = -gamma - 2 log 2
        assert!((psi_norm(0, 0.5, &cfg).unwrap() + EULER + 2.0 * 2f64.ln()).abs() < 1e-13);
        assert!(matches!(psi_norm(0, -3.0, &cfg), Err(Error::Pole(_))));
        assert!(matches!(psi_norm(2, 0.0, &cfg), Err(Error::Pole(_))));
    }

    #[test]
    fn direct_sums() {
        assert_eq!(direct_sum(&parse("1/((k+1)*(k+2))").unwrap(), 3).unwrap(), rat(3, 4));
        assert_eq!(direct_sum(&parse("k").unwrap(), 5).unwrap(), int(10));
        assert_eq!(direct_sum(&parse("1/(k-2)").unwrap(), 5), Err(Error::SingularTerm { k: 2, n: 5 }));
        assert_eq!(direct_sum(&parse("1/(k-2)").unwrap(), 0).unwrap(), int(0));
    }

    #[test]
    fn expressions() {
        let cfg = EvalConfig::default();
        let f = parse("n/(n+1)").unwrap().num().coeff(0);
        assert!((eval_pgexpr(&PGExpr::rational(f), 3.0, &cfg).unwrap() - 0.75).abs() < 1e-15);
        let mut e = PGExpr::zero();
        e.add_log(2, RatFn::constant(int(1)));
        assert!((eval_pgexpr(&e, 7.0, &cfg).unwrap() - 0.693_147_180_559_945_3).abs() < 1e-12);
    }

    #[test]
    fn identities_hold() {
        let cfg = EvalConfig::default();
        for which in [Identity::Shift, Identity::Multiplication, Identity::Reflection] {
            let rep = check_identity(which, &[0, 1, 2], 50, &cfg).unwrap();
            assert!(rep.max_abs_error <= 1e-9, "{which:?}: {}", rep.max_abs_error);
        }
    }

    #[test]
    fn config_limits() {
        assert!(EvalConfig { shift_threshold: 4.0, ..EvalConfig::default() }.validate().is_err());
        assert!(EvalConfig { series_terms: 2, ..EvalConfig::default() }.validate().is_err());
        assert!(EvalConfig::default().validate().is_ok());
    }
}
