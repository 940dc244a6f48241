//! Roots of the summand denominator in `k` and their growth in `n`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{cauchy_bound, cauchy_interpolate, rational_roots, Poly, Rat, RatFn, UPoly};
use crate::expr::KPoly;
use crate::Error;

/// A root `alpha(n)` of the denominator with multiplicity `d`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LinearFactor {
    pub alpha: RatFn,
    pub multiplicity: u32,
}

/// `alpha(n) ~ c * n^epsilon` as `n -> infinity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Asymptotics {
    /// [`Asymptotics::NEG_INFINITY`] for the zero function.
    pub epsilon: i64,
    pub c: Rat,
}

impl Asymptotics {
    pub const NEG_INFINITY: i64 = i64::MIN;

    pub fn is_zero(&self) -> bool {
        self.epsilon == Self::NEG_INFINITY
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SlownessClass {
    /// `epsilon < 1`.
    Slow,
    /// `epsilon = 1` and `n - 1 - alpha` is slow.
    ReflectSlow,
    Fast,
}

impl SlownessClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SlownessClass::Slow => "slow",
            SlownessClass::ReflectSlow => "reflect_slow",
            SlownessClass::Fast => "fast",
        }
    }
}

pub fn asymptotics_of(alpha: &RatFn) -> Asymptotics {
    match alpha.degree_balance() {
        None => Asymptotics { epsilon: Asymptotics::NEG_INFINITY, c: Rat::zero() },
        Some(epsilon) => {
            let c = alpha.num().lc().expect("nonzero").clone() / alpha.den().lc().expect("nonzero").clone();
            Asymptotics { epsilon, c }
        }
    }
}

/// `n - 1 - alpha`
pub fn reflected_root(alpha: &RatFn) -> RatFn {
    &(&RatFn::var() - &RatFn::one()) - alpha
}

pub fn classify(alpha: &RatFn) -> SlownessClass {
    if asymptotics_of(alpha).epsilon <= 0 {
        SlownessClass::Slow
    } else if asymptotics_of(&reflected_root(alpha)).epsilon <= 0 {
        SlownessClass::ReflectSlow
    } else {
        SlownessClass::Fast
    }
}

/// Splits `q` as `remainder * prod (k - alpha_s)^{d_s}` with every
/// `alpha_s` in `Q(n)` and `remainder` free of such roots.
///
/// The polynomial is specialized at integer samples `n = M, M+1, ...`, the
/// distinct rational roots of every specialization are found, and root
/// functions are rebuilt by rational interpolation over consistent
/// per-sample assignments. Only candidates that divide exactly are kept, and
/// each is divided out as often as it goes.
pub fn k_linear_roots(q: &KPoly) -> Result<(Vec<LinearFactor>, KPoly), Error> {
    let Some(lc) = q.lc().cloned() else {
        return Err(Error::DegenerateInput("zero denominator".into()));
    };
    let mut s = q.monic();
    let mut factors = Vec::new();
    loop {
        let batch = match s.degree() {
            None | Some(0) => break,
            Some(1) => alloc::vec![-s.coeff(0)],
            _ if s.coeff(0).is_zero() => alloc::vec![RatFn::zero()],
            _ => reconstruct_roots(&s),
        };
        if batch.is_empty() {
            break;
        }
        for alpha in batch {
            let mut multiplicity = 0;
            while let Some(quot) = divide_linear(&s, &alpha) {
                s = quot;
                multiplicity += 1;
            }
            debug_assert!(multiplicity > 0, "verified root divides");
            factors.push(LinearFactor { alpha, multiplicity });
        }
    }
    Ok((factors, s.scale(&lc)))
}

/// `p / (k - alpha)` when the division is exact.
fn divide_linear(p: &KPoly, alpha: &RatFn) -> Option<KPoly> {
    let coeffs = p.coeffs();
    if coeffs.len() < 2 {
        return None;
    }
    let mut quot = alloc::vec![RatFn::zero(); coeffs.len() - 1];
    let mut acc = RatFn::zero();
    for i in (1..coeffs.len()).rev() {
        acc = &(&acc * alpha) + &coeffs[i];
        quot[i - 1] = acc.clone();
    }
    let rem = &(&acc * alpha) + &coeffs[0];
    rem.is_zero().then(|| KPoly::from_coeffs(quot))
}

struct Sample {
    n: Rat,
    roots: Vec<Rat>,
}

struct Sampler<'a> {
    s: &'a KPoly,
    next: BigInt,
    samples: Vec<Sample>,
    limit: usize,
    /// Some specialization has no rational root, so `s` has none in `Q(n)`.
    rootless: bool,
}

impl Sampler<'_> {
    fn push_one(&mut self) {
        let n = Rat::from_integer(self.next.clone());
        self.next += 1;
        if let Some(spec) = specialize(self.s, &n) {
            let roots = rational_roots(&spec);
            self.rootless |= roots.is_empty();
            self.samples.push(Sample { n, roots });
        }
    }

    /// Indices of samples with the modal root count, drawing new samples
    /// until there are `want` of them or the budget runs out.
    fn good(&mut self, want: usize) -> Vec<usize> {
        loop {
            while self.samples.len() < want && !self.rootless {
                self.push_one();
            }
            if self.rootless {
                return Vec::new();
            }
            let c = modal_count(&self.samples);
            let good: Vec<usize> = (0..self.samples.len()).filter(|&i| self.samples[i].roots.len() == c).collect();
            if good.len() >= want || self.samples.len() >= self.limit {
                return good;
            }
            self.push_one();
        }
    }
}

/// Roots in `Q(n)` of a monic square-free `s` with nonzero constant term.
fn reconstruct_roots(s: &KPoly) -> Vec<RatFn> {
    // Clearing denominators gives P(k, n) = sum p_i(n) k^i over Q[n]. A root
    // u/v makes (v k - u) divide P, so deg v <= deg p_top and deg u <= deg p_0.
    let lead = s.coeffs().iter().fold(UPoly::one(), |acc, c| {
        let g = Poly::gcd(&acc, c.den());
        (&acc * c.den()).exact_div(&g).expect("gcd divides")
    });
    let p0 = (s.coeff(0).num() * &lead).exact_div(s.coeff(0).den()).expect("lcm is a multiple");
    let deg_den = lead.degree().unwrap_or(0);
    let deg_num = p0.degree().unwrap_or(0);
    let needed = deg_num + deg_den + 2;

    let start = cauchy_bound(&lead).ceil().to_integer() + BigInt::from(8);
    let mut sampler = Sampler { s, next: start, samples: Vec::new(), limit: 4 * needed + 16, rootless: false };

    let mut found: Vec<RatFn> = Vec::new();
    let accept = |f: RatFn, found: &mut Vec<RatFn>| {
        if !found.contains(&f) && s.eval_at(&f).is_zero() {
            found.push(f);
        }
    };

    // Past every crossing of the root curves the i-th smallest rational root
    // tracks the same function, so try rank-aligned sequences first, with
    // growing degree bounds. Any candidate is verified exactly.
    for d in 0..=deg_num.max(deg_den) {
        let (dn, dd) = (d.min(deg_num), d.min(deg_den));
        let want = dn + dd + 2;
        let good = sampler.good(want);
        if sampler.rootless {
            return Vec::new();
        }
        if good.len() < want {
            break;
        }
        let samples = &sampler.samples;
        for rank in 0..samples[good[0]].roots.len() {
            let pts: Vec<(Rat, Rat)> =
                good[..want].iter().map(|&i| (samples[i].n.clone(), samples[i].roots[rank].clone())).collect();
            if let Ok(Some(f)) = cauchy_interpolate(&pts, dn, dd) {
                accept(f, &mut found);
            }
        }
        if !found.is_empty() {
            return found;
        }
    }

    // Rank alignment fails when root curves still cross among the samples.
    // Search assignments on a minimal prefix instead: interpolate from
    // dn + dd + 1 samples and keep candidates whose value at every other
    // sample is one of that sample's roots.
    let mut budget: usize = 200_000;
    for d in 0..=deg_num.max(deg_den) {
        let (dn, dd) = (d.min(deg_num), d.min(deg_den));
        let m0 = dn + dd + 1;
        while sampler.samples.len() < m0 + 1 && !sampler.rootless {
            sampler.push_one();
        }
        if sampler.rootless {
            return Vec::new();
        }
        let samples = &sampler.samples;
        let mut choice = alloc::vec![0usize; m0];
        'odometer: loop {
            if budget == 0 {
                return found;
            }
            budget -= 1;
            let pts: Vec<(Rat, Rat)> =
                samples[..m0].iter().zip(&choice).map(|(smp, &c)| (smp.n.clone(), smp.roots[c].clone())).collect();
            if let Ok(Some(f)) = cauchy_interpolate(&pts, dn, dd) {
                let consistent = samples[m0..].iter().all(|smp| f.eval(&smp.n).is_some_and(|v| smp.roots.contains(&v)));
                if consistent {
                    accept(f, &mut found);
                }
            }
            let mut i = m0;
            loop {
                if i == 0 {
                    break 'odometer;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < samples[i].roots.len() {
                    break;
                }
                choice[i] = 0;
            }
        }
        if !found.is_empty() {
            return found;
        }
    }
    found
}

fn specialize(s: &KPoly, n: &Rat) -> Option<UPoly> {
    let cs: Option<Vec<Rat>> = s.coeffs().iter().map(|c| c.eval(n)).collect();
    Some(UPoly::from_coeffs(cs?))
}

fn modal_count(samples: &[Sample]) -> usize {
    let mut best = (0usize, 0usize);
    for smp in samples {
        let c = smp.roots.len();
        let freq = samples.iter().filter(|o| o.roots.len() == c).count();
        if freq > best.1 || (freq == best.1 && c > best.0) {
            best = (c, freq);
        }
    }
    best.0
}
