//! Generators and corpora shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;
use ratsum_core::arith::{int, rat};
use ratsum_core::{classify, AtomicFraction, BiRat, KPoly, Poly, Rat, RatFn, SlownessClass, UPoly};

pub fn rand_rat(rng: &mut StdRng, h: i64) -> Rat {
    rat(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

pub fn rand_upoly(rng: &mut StdRng, deg: usize, h: i64) -> UPoly {
    Poly::from_coeffs((0..=deg).map(|_| rand_rat(rng, h)).collect())
}

/// Nonzero polynomial of exact degree `deg` with integer coefficients.
pub fn rand_int_upoly(rng: &mut StdRng, deg: usize, h: i64) -> UPoly {
    loop {
        let p = Poly::from_coeffs((0..=deg).map(|_| int(rng.gen_range(-h..=h))).collect());
        if p.degree() == Some(deg) {
            return p;
        }
    }
}

pub fn rand_ratfn(rng: &mut StdRng, deg_num: usize, deg_den: usize, h: i64) -> RatFn {
    loop {
        let num = rand_upoly(rng, deg_num, h);
        let den = rand_int_upoly(rng, deg_den, h);
        if let Some(f) = RatFn::new(num, den) {
            if !f.is_zero() {
                return f;
            }
        }
    }
}

/// A slow root (`epsilon <= 0`) of degree at most 2 and height at most `h`
/// that is not a nonnegative integer constant.
pub fn rand_slow_root(rng: &mut StdRng, h: i64) -> RatFn {
    loop {
        let dd = rng.gen_range(0..=2);
        let dn = rng.gen_range(0..=dd);
        let num = Poly::from_coeffs((0..=dn).map(|_| int(rng.gen_range(-h..=h))).collect());
        let den = rand_int_upoly(rng, dd, h);
        let Some(alpha) = RatFn::new(num, den) else { continue };
        if classify(&alpha) != SlownessClass::Slow {
            continue;
        }
        if let Some(c) = alpha.as_constant() {
            if c.is_integer() && c >= Rat::zero() {
                continue;
            }
        }
        return alpha;
    }
}

pub fn atom(alpha: RatFn, t: u32, beta: RatFn) -> BiRat {
    AtomicFraction { alpha, t, beta }.to_birat()
}

/// `g(k + 1, n) - g(k, n)` with `g` a sum of up to three atomic fractions
/// at slow roots, orders at most 2.
pub fn rand_telescoping(rng: &mut StdRng) -> (BiRat, BiRat) {
    loop {
        let terms = rng.gen_range(1..=3);
        let mut g = BiRat::zero();
        for _ in 0..terms {
            let alpha = rand_slow_root(rng, 6);
            let t = rng.gen_range(1..=2);
            let (dn, dd) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
            let beta = rand_ratfn(rng, dn, dd, 6);
            g = &g + &atom(alpha, t, beta);
        }
        let r = &g.substitute_k(&RatFn::one(), &RatFn::one()) - &g;
        if !r.is_zero() {
            return (r, g);
        }
    }
}

/// A summand whose denominator splits into linear factors at slow roots,
/// with multiplicities up to 3 and a random numerator.
pub fn rand_split_summand(rng: &mut StdRng) -> BiRat {
    let roots = rng.gen_range(1..=3);
    let mut den = KPoly::one();
    for _ in 0..roots {
        let alpha = rand_slow_root(rng, 6);
        den = &den * &KPoly::linear_root(alpha).pow(rng.gen_range(1..=3));
    }
    let deg = den.degree().unwrap() + rng.gen_range(0..=2);
    let num = Poly::from_coeffs(
        (0..=deg)
            .map(|_| {
                let dd = rng.gen_range(0..=1);
                rand_ratfn(rng, 1, dd, 5)
            })
            .collect(),
    );
    BiRat::new(num, den).unwrap()
}

/// Inputs the pipeline handles end to end, across every verdict.
pub const SUPPORTED: &[&str] = &[
    "1/((k+1)*(k+2))",
    "1/(k+1-1/n) - 1/(k-1/n)",
    "1/(k-n+1/2) + 1/(k+1/2)",
    "1/(k+1)",
    "1/(k+n+1)",
    "k",
    "k^3 - n*k + 1",
    "1/((k+1)*(k+2)*(k+3))",
    "(2*k+3)/((k+1)^2*(k+2)^2)",
    "1/((k+1/2)*(k+3/2))",
    "1/(k+1)^2 - 1/(k+2)^2",
    "n/((k+1/n)*(k+1+1/n))",
    "1/(k+1) - 1/(k+2) + k^2",
    "1/(k-n-1/2) + 1/(k+1/2)",
    "1/(k+1/3) - 1/(k+4/3)",
    "1/(k+1)^2",
    "1/(k+1/2)",
    "1/(k - n/2 + 1/3)",
    "(k + n)/((k - 1/n)^2*(k + 2))",
    "1/(k-n-1) - 1/(k-n)",
];

/// Cases meant to probe the certified-negative gate, including fast roots
/// that cancel, fast roots that do not, reflected roots, and inputs outside
/// the supported class.
pub const ADVERSARIAL: &[&str] = &[
    "1/(k+n+1)",
    "1/(k+2*n)",
    "1/(k-2*n-1)",
    "1/(k+n^2)",
    "1/(k-n^2-1/2)",
    "1/(k + n/2)",
    "1/(k - n/2 + 1/3)",
    "1/(k+n+1) - 1/(k+n+2)",
    "1/(2*k+n+1)",
    "1/(k+n+1) + 1/(k+1)",
    "n/(k+n^2+1) - n/(k+n^2)",
    "1/((k+n)*(k+1))",
    "1/(k+1)",
    "1/(k+1/2)",
    "1/(k-n+1/2)",
    "1/(k-n+1/2) + 1/(k+1/2)",
    "1/(k-n+1/2) - 1/(k+1/2)",
    "1/(k+1/n)",
    "1/(k-n+1-1/n)",
    "1/(k+1)^3",
    "1/((k+1/n)*(k+2*n))",
    "1/(k^2+1)",
    "1/(k^2-n)",
    "1/(k^2-2)",
    "1/((k^2+1)*(k+1))",
    "1/(k-3)",
    "1/(k-n+1)",
    "1/k",
    "k^2/(k+n)^2",
    "1/(k+n+1/2) - 1/(k+n+3/2)",
];
