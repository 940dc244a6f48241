use num_traits::One;

use super::expr::{PGExpr, PGTerm};
use crate::arith::{Rat, RatFn};
use crate::decompose::AtomicFraction;
use crate::Error;

/// `sum_{k=0}^{n-1} beta/(k - alpha)^t = beta*psi^(t-1)(n - alpha) - beta*psi^(t-1)(-alpha)`
pub fn atomic_to_polygamma(a: &AtomicFraction) -> PGExpr {
    let order = a.t - 1;
    let mut e = PGExpr::zero();
    e.add_term(PGTerm::new(a.beta.clone(), order, &RatFn::var() - &a.alpha));
    e.add_term(PGTerm::new(-&a.beta, order, -&a.alpha));
    e
}

/// Rewrites `coef*psi^(t)(g)` as `coef*psi^(t)(g - j)` plus the rational
/// corrections from `psi^(t)(z + 1) = psi^(t)(z) + 1/z^(t+1)`.
///
/// Fails only for a constant argument when a correction hits `1/0`.
pub fn shift_reduce(term: &PGTerm, j: i64) -> Result<PGExpr, Error> {
    let t = term.order as i64;
    let target = &term.arg - &RatFn::int(j);
    let mut e = PGExpr::from_term(PGTerm::new(term.coef.clone(), term.order, target));
    // j > 0: + sum_{l=1}^{j} 1/(g - l)^(t+1);  j < 0: - sum_{l=0}^{|j|-1} 1/(g + l)^(t+1)
    let (range, sign) = if j >= 0 { (1..=j, RatFn::one()) } else { (0..=(-j - 1), -RatFn::one()) };
    for l in range {
        let offset = if j >= 0 { -l } else { l };
        let base = &term.arg + &RatFn::int(offset);
        let corr = base.pow(-(t + 1)).ok_or_else(|| Error::Pole(alloc::format!("psi({}, {})", term.order, base)))?;
        e.add_rational(&(&(&corr * &term.coef) * &sign));
    }
    Ok(e)
}

/// Distinct prime factors of `m` with multiplicity.
pub(crate) fn factor(mut m: u64) -> alloc::vec::Vec<(u64, u32)> {
    let mut out = alloc::vec::Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// `psi^(t)(m*w) = [t = 0]*log m + m^-(t+1) * sum_{r<m} psi^(t)(w + r/m)`
/// with `w = arg/m`; `log m` is spread over the primes of `m`.
pub fn multiplication_expand(term: &PGTerm, m: u32) -> Result<PGExpr, Error> {
    if m < 2 {
        return Err(Error::InvalidArgument(alloc::format!("multiplication needs m >= 2, got {m}")));
    }
    let mr = Rat::from_integer(m.into());
    let w = &term.arg / &RatFn::constant(mr.clone());
    let scale = RatFn::constant(Rat::one() / num_traits::pow(mr.clone(), term.order as usize + 1));
    let coef = &term.coef * &scale;
    let mut e = PGExpr::zero();
    for r in 0..m {
        let arg = &w + &RatFn::constant(Rat::new(r.into(), m.into()));
        e.add_term(PGTerm::new(coef.clone(), term.order, arg));
    }
    if term.order == 0 {
        for (p, k) in factor(m.into()) {
            e.add_log(p, &term.coef * &RatFn::int(k.into()));
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::expr::parse;
    use alloc::string::ToString;

    fn rf(text: &str) -> RatFn {
        parse(text).unwrap().num().coeff(0)
    }

    fn psi(order: u32, arg: &str) -> PGTerm {
        PGTerm::new(RatFn::one(), order, rf(arg))
    }

    #[test]
    fn atomic_sums() {
        let a = AtomicFraction { alpha: RatFn::int(-1), t: 1, beta: RatFn::one() };
        assert_eq!(atomic_to_polygamma(&a).to_string(), "psi(0, n + 1) - psi(0, 1)");
        let a = AtomicFraction { alpha: rf("1/n"), t: 2, beta: rf("n") };
        assert_eq!(atomic_to_polygamma(&a).to_string(), "n*psi(1, (n^2 - 1)/n) - n*psi(1, -1/n)");
    }

    #[test]
    fn shifts() {
        assert_eq!(shift_reduce(&psi(0, "n + 2"), 1).unwrap().to_string(), "psi(0, n + 1) + 1/(n + 1)");
        assert_eq!(shift_reduce(&psi(1, "n"), 0).unwrap(), PGExpr::from_term(psi(1, "n")));
        let half = PGTerm::new(RatFn::one(), 0, RatFn::constant(rat(1, 2)));
        assert_eq!(shift_reduce(&half, -1).unwrap().to_string(), "psi(0, 3/2) - 2");
        let one = PGTerm::new(RatFn::one(), 0, RatFn::one());
        assert!(shift_reduce(&one, 1).is_err());
    }

    #[test]
    fn multiplication() {
        let e = multiplication_expand(&psi(0, "2*n"), 2).unwrap();
        assert_eq!(e.to_string(), "1/2*psi(0, n) + 1/2*psi(0, n + 1/2) + log(2)");
        let e = multiplication_expand(&psi(1, "2*n"), 2).unwrap();
        assert!(e.log_terms.is_empty());
        assert!(e.pg_terms.iter().all(|t| t.coef == RatFn::constant(rat(1, 4))));
        let e = multiplication_expand(&psi(0, "6*n"), 6).unwrap();
        let mut logs: alloc::vec::Vec<_> = e.log_terms.iter().map(|l| (l.prime, l.coef.clone())).collect();
        logs.sort_by_key(|l| l.0);
        assert_eq!(logs, alloc::vec![(2, RatFn::one()), (3, RatFn::one())]);
        assert_eq!(e.pg_terms.len(), 6);
        assert_eq!(factor(360), alloc::vec![(2, 3), (3, 2), (5, 1)]);
    }
}
