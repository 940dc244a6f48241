//! Partial fractions over linear factors in `k`, and power sums.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::analysis::LinearFactor;
use crate::arith::{bernoulli, Poly, Rat, RatFn, UPoly};
use crate::expr::{BiRat, KPoly};
use crate::Error;

/// `beta / (k - alpha)^t`
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct AtomicFraction {
    pub alpha: RatFn,
    pub t: u32,
    pub beta: RatFn,
}

impl AtomicFraction {
    pub fn to_birat(&self) -> BiRat {
        let den = KPoly::linear_root(self.alpha.clone()).pow(self.t);
        BiRat::new(KPoly::constant(self.beta.clone()), den).expect("nonzero denominator")
    }
}

/// `poly_part + sum beta / (k - alpha)^t`
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Pfd {
    pub poly_part: KPoly,
    pub fractions: Vec<AtomicFraction>,
}

impl Pfd {
    /// Adds a fraction, merging with an existing `(alpha, t)` entry.
    pub fn push(&mut self, frac: AtomicFraction) {
        if let Some(i) = self.fractions.iter().position(|f| f.alpha == frac.alpha && f.t == frac.t) {
            let beta = &self.fractions[i].beta + &frac.beta;
            if beta.is_zero() {
                self.fractions.remove(i);
            } else {
                self.fractions[i].beta = beta;
            }
        } else if !frac.beta.is_zero() {
            self.fractions.push(frac);
        }
    }

    /// The summand this decomposition represents.
    pub fn recombine(&self) -> BiRat {
        self.fractions.iter().fold(BiRat::from_kpoly(self.poly_part.clone()), |acc, f| &acc + &f.to_birat())
    }
}

/// Partial fractions of `r` given the complete linear factorization of its
/// denominator. Coefficients come from a Taylor expansion of the cofactor
/// quotient around each root.
pub fn decompose(r: &BiRat, factors: &[LinearFactor]) -> Result<Pfd, Error> {
    // Distinct roots whose multiplicities fill the monic denominator and
    // divide it make up exactly its factorization.
    let total: usize = factors.iter().map(|f| f.multiplicity as usize).sum();
    let distinct = factors.iter().enumerate().all(|(i, f)| factors[..i].iter().all(|g| g.alpha != f.alpha));
    let divides = |f: &LinearFactor| {
        taylor_head(r.den(), &f.alpha, f.multiplicity as usize).iter().all(Zero::is_zero)
    };
    if r.den().degree() != Some(total) || !distinct || !factors.iter().all(divides) {
        return Err(Error::UnsupportedDenominator);
    }
    Ok(decompose_factored(r, factors))
}

/// [`decompose`] for a factorization already known to be complete.
pub(crate) fn decompose_factored(r: &BiRat, factors: &[LinearFactor]) -> Pfd {
    let (poly_part, rem) = r.num().div_rem(r.den());
    let mut pfd = Pfd { poly_part, fractions: Vec::new() };
    for f in factors {
        let d = f.multiplicity as usize;
        // expansions in h = k - alpha, truncated at h^d
        let num = taylor_head(&rem, &f.alpha, d);
        let mut cof = alloc::vec![RatFn::zero(); d];
        cof[0] = RatFn::one();
        for g in factors.iter().filter(|g| g.alpha != f.alpha) {
            let c = &f.alpha - &g.alpha;
            for _ in 0..g.multiplicity {
                // multiply the truncated series by (c + h)
                for j in (0..d).rev() {
                    let shifted = if j > 0 { cof[j - 1].clone() } else { RatFn::zero() };
                    cof[j] = &(&cof[j] * &c) + &shifted;
                }
            }
        }
        let c0 = &cof[0];
        let mut series: Vec<RatFn> = Vec::with_capacity(d);
        for j in 0..d {
            let mut acc = num[j].clone();
            for i in 1..=j {
                acc = &acc - &(&cof[i] * &series[j - i]);
            }
            series.push(&acc / c0);
        }
        for (j, beta) in series.into_iter().enumerate() {
            pfd.push(AtomicFraction { alpha: f.alpha.clone(), t: (d - j) as u32, beta });
        }
    }
    pfd
}

/// The first `count` Taylor coefficients of `p` at `k = alpha`.
fn taylor_head(p: &KPoly, alpha: &RatFn, count: usize) -> Vec<RatFn> {
    let mut out = Vec::with_capacity(count);
    let mut q = p.clone();
    let mut fact = Rat::one();
    for j in 0..count {
        if j > 0 {
            q = q.derivative();
            fact = fact * Rat::from_integer((j as i64).into());
        }
        out.push(&q.eval_at(alpha) / &RatFn::constant(fact.clone()));
    }
    out
}

/// `sum_{k=0}^{n-1} k^m` as a polynomial in `n`.
pub fn power_sum(m: usize) -> UPoly {
    let mut coeffs = alloc::vec![Rat::zero(); m + 2];
    let mut binom = Rat::one();
    for j in 0..=m {
        coeffs[m + 1 - j] = &binom * &bernoulli(j) / Rat::from_integer((m as i64 + 1).into());
        binom = binom * Rat::from_integer(((m + 1 - j) as i64).into()) / Rat::from_integer(((j + 1) as i64).into());
    }
    Poly::from_coeffs(coeffs)
}

/// `sum_{k=0}^{n-1} p(k, n)`, exactly.
pub fn faulhaber_sum(p: &KPoly) -> RatFn {
    p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).fold(RatFn::zero(), |acc, (m, c)| {
        &acc + &(c * &RatFn::from_poly(power_sum(m)))
    })
}
