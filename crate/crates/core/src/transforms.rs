//! Rearrangements of `sum_{k=0}^{n-1} R(k, n)` that preserve its value.

use alloc::vec::Vec;

use num_traits::One;

use crate::arith::{Rat, RatFn};
use crate::expr::BiRat;
use crate::Error;

/// `R(n - 1 - k, n)`: the same sum read backwards.
pub fn reflect_full(r: &BiRat) -> BiRat {
    let n_minus_1 = &RatFn::var() - &RatFn::one();
    r.substitute_k(&-RatFn::one(), &n_minus_1)
}

/// `parts[r](j, N) = R(m*j + r, m*N)`, so that the sum of `R` up to `m*N`
/// equals the sum of every part up to `N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SectionedSummand {
    pub parts: Vec<BiRat>,
    pub modulus: u32,
}

pub fn m_section(r: &BiRat, m: u32) -> Result<SectionedSummand, Error> {
    if m < 2 {
        return Err(Error::InvalidArgument(alloc::format!("m-section needs m >= 2, got {m}")));
    }
    let scaled = r.scale_n(&Rat::from_integer(m.into()));
    let a = RatFn::int(m.into());
    let parts = (0..m).map(|res| scaled.substitute_k(&a, &RatFn::int(res.into()))).collect();
    Ok(SectionedSummand { parts, modulus: m })
}

/// Peels off the first `m + 1` terms: returns `R(0, n), ..., R(m, n)` and the
/// shifted tail `R(k + m + 1, n)`. A head entry is `None` when the summand's
/// denominator vanishes identically at that `k`.
pub fn split_at(r: &BiRat, m: u32) -> (Vec<Option<RatFn>>, BiRat) {
    let head = (0..=m).map(|i| r.eval_k(&RatFn::int(i.into()))).collect();
    let tail = r.substitute_k(&RatFn::one(), &RatFn::int(i64::from(m) + 1));
    (head, tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(text: &str) -> BiRat {
        parse(text).unwrap()
    }

    #[test]
    fn reflection() {
        assert_eq!(reflect_full(&p("1/(k - n + 1/2)")), p("-1/(k + 1/2)"));
        assert_eq!(reflect_full(&p("1")), p("1"));
        assert_eq!(reflect_full(&p("1/(k+1)")), p("1/(n-k)"));
        let r = p("(k^2 + n)/((k + 1/n)*(k - 2*n))");
        assert_eq!(reflect_full(&reflect_full(&r)), r);
    }

    #[test]
    fn sections() {
        let s = m_section(&p("1/(k+1)"), 2).unwrap();
        assert_eq!(s.parts, vec![p("1/(2*k + 1)"), p("1/(2*k + 2)")]);
        let ones = m_section(&p("1"), 3).unwrap();
        assert_eq!(ones.parts, vec![p("1"); 3]);
        assert!(m_section(&p("k"), 1).is_err());
    }

    #[test]
    fn splitting() {
        let (head, tail) = split_at(&p("1/(k+1)"), 0);
        assert_eq!(head, vec![Some(RatFn::one())]);
        assert_eq!(tail, p("1/(k+2)"));
        let (head, tail) = split_at(&p("1/(k - n^2)"), 1);
        assert_eq!(head.iter().map(|h| h.as_ref().unwrap().to_string()).collect::<Vec<_>>(), vec!["-1/n^2", "-1/(n^2 - 1)"]);
        assert_eq!(tail, p("1/(k + 2 - n^2)"));
        let (head, _) = split_at(&p("1/k"), 1);
        assert_eq!(head[0], None);
    }
}
