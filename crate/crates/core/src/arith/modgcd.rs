//! Multi-modular gcd in `Q[x]`.
//!
//! Both inputs are reduced to primitive integer polynomials. Their gcd is
//! computed modulo a run of word-sized primes, lifted by Chinese remaindering
//! and accepted once the lift divides both inputs exactly.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::rat::{lcm_of_denominators, Rat};

type ZPoly = Vec<BigInt>;

const MAX_PRIMES: usize = 400;

/// Monic gcd of two nonzero polynomials, or `None` if the prime budget runs
/// out first.
pub(crate) fn gcd(a: &Poly<Rat>, b: &Poly<Rat>) -> Option<Poly<Rat>> {
    if a.is_constant() || b.is_constant() {
        return Some(Poly::one());
    }
    let (a, b) = (primitive(a), primitive(b));
    let gamma = a.last().expect("nonzero").gcd(b.last().expect("nonzero"));
    let mut primes = Primes::new();
    let mut best_deg = usize::MAX;
    let mut lift: ZPoly = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<ZPoly> = None;
    for _ in 0..MAX_PRIMES {
        let p = primes.next_prime();
        let (la, lb) = (reduce(a.last().unwrap(), p), reduce(b.last().unwrap(), p));
        if la == 0 || lb == 0 {
            continue;
        }
        let g = gcd_mod(&reduce_poly(&a, p), &reduce_poly(&b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return Some(Poly::one());
        }
        if d > best_deg {
            continue;
        }
        // scale the monic image so its leading coefficient is gamma
        let scale = reduce(&gamma, p);
        let image: Vec<u64> = g.iter().map(|&c| mul_mod(c, scale, p)).collect();
        if d < best_deg {
            best_deg = d;
            lift = image.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            previous = None;
            continue;
        }
        crt_combine(&mut lift, &modulus, &image, p);
        modulus *= p;
        let candidate = primitive_int(&symmetric(&lift, &modulus));
        if previous.as_ref() == Some(&candidate) && divides(&candidate, &a) && divides(&candidate, &b) {
            let h = Poly::from_coeffs(candidate.into_iter().map(Rat::from_integer).collect());
            return Some(h.monic());
        }
        previous = Some(candidate);
    }
    None
}

fn primitive(p: &Poly<Rat>) -> ZPoly {
    let d = lcm_of_denominators(p.coeffs());
    let ints: ZPoly = p.coeffs().iter().map(|c| (c * Rat::from_integer(d.clone())).to_integer()).collect();
    primitive_int(&ints)
}

fn primitive_int(p: &[BigInt]) -> ZPoly {
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if p.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    let content = content * sign;
    p.iter().map(|c| c / &content).collect()
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

fn reduce_poly(a: &[BigInt], p: u64) -> Vec<u64> {
    a.iter().map(|c| reduce(c, p)).collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over `Z/p` of polynomials with nonzero leading coefficients.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let inv = inv_mod(*r1.last().unwrap(), p);
        while r0.len() >= r1.len() {
            let shift = r0.len() - r1.len();
            let c = mul_mod(*r0.last().unwrap(), inv, p);
            for (i, &d) in r1.iter().enumerate() {
                let t = mul_mod(c, d, p);
                r0[i + shift] = (r0[i + shift] + p - t) % p;
            }
            trim(&mut r0);
            if r0.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut r0, &mut r1);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    r0.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

fn crt_combine(lift: &mut [BigInt], modulus: &BigInt, image: &[u64], p: u64) {
    let m_inv = inv_mod(reduce(modulus, p), p);
    for (h, &g) in lift.iter_mut().zip(image) {
        let diff = (g + p - reduce(h, p)) % p;
        let t = mul_mod(diff, m_inv, p);
        *h += modulus * t;
    }
}

fn symmetric(lift: &[BigInt], modulus: &BigInt) -> ZPoly {
    let half = modulus / 2;
    lift.iter().map(|c| if *c > half { c - modulus } else { c.clone() }).collect()
}

/// Whether `h` divides `a` in `Z[x]`; `h` is primitive, so this matches
/// divisibility in `Q[x]`.
fn divides(h: &[BigInt], a: &[BigInt]) -> bool {
    if h.len() > a.len() {
        return false;
    }
    let lc = h.last().unwrap();
    let mut rem = a.to_vec();
    for i in (0..=a.len() - h.len()).rev() {
        let top = &rem[i + h.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        for (j, c) in h.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
    }
    rem.iter().all(Zero::is_zero)
}

/// Descending primes below 2^31, by trial division.
struct Primes {
    next: u64,
}

impl Primes {
    fn new() -> Self {
        Primes { next: (1 << 31) - 1 }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if (3..).step_by(2).take_while(|d| d * d <= c).all(|d| c % d != 0) {
                return c;
            }
        }
    }
}
