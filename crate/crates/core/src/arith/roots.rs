use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rat::{is_integer, lcm_of_denominators, Rat};
use super::ratfn::UPoly;

/// Bound `B` with every complex root of `p` satisfying `|z| < B`.
pub fn cauchy_bound(p: &UPoly) -> Rat {
    let Some(lc) = p.lc() else {
        return Rat::one();
    };
    let lc = lc.abs();
    let max = p.coeffs()[..p.coeffs().len() - 1].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(Rat::zero);
    max + Rat::one()
}

/// Distinct rational roots of `p`, ascending.
///
/// Real roots are isolated with a Sturm sequence; each isolating interval is
/// narrowed below `1/|a_d|` (the spacing of every rational root candidate
/// `m/|a_d|` once `p` has integer coefficients) and the single candidate left
/// is checked exactly.
pub fn rational_roots(p: &UPoly) -> Vec<Rat> {
    roots_on_grid(p, false)
}

/// Distinct integer roots of `p`, ascending. Isolation only has to reach
/// unit width.
pub fn integer_roots(p: &UPoly) -> Vec<BigInt> {
    roots_on_grid(p, true).into_iter().map(|q| q.to_integer()).collect()
}

/// Dyadic `num / 2^exp`.
#[derive(Clone)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn at_exp(&self, exp: u32) -> BigInt {
        &self.num << (exp - self.exp) as usize
    }
}

fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
    let exp = a.exp.max(b.exp);
    Dyadic { num: a.at_exp(exp) + b.at_exp(exp), exp: exp + 1 }
}

/// Roots of `p` on the grid `Z / L`, where `L` is 1 for integer roots and
/// the leading coefficient of the primitive square-free part otherwise.
fn roots_on_grid(p: &UPoly, integers_only: bool) -> Vec<Rat> {
    if p.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let f = squarefree_part(&integer_scaled(p));
    if f.degree() == Some(1) {
        let r = -f.coeff(0) / f.coeff(1);
        return if !integers_only || is_integer(&r) { alloc::vec![r] } else { Vec::new() };
    }
    if f.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let grid = if integers_only { BigInt::one() } else { f.lc().expect("nonzero").abs().to_integer() };
    let sturm: Vec<Vec<BigInt>> =
        sturm_sequence(&f).iter().map(|q| q.coeffs().iter().map(|c| c.to_integer()).collect()).collect();
    let fz = &sturm[0];
    let bound = cauchy_bound(&f).ceil().to_integer();
    let variations = |x: &Dyadic| {
        let mut last = 0i8;
        let mut count = 0usize;
        for q in &sturm {
            let s = sign_at(q, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    };
    // width of (a, b] below the grid spacing 1/L
    let narrow = |a: &Dyadic, b: &Dyadic| {
        let exp = a.exp.max(b.exp);
        (b.at_exp(exp) - a.at_exp(exp)) * &grid < BigInt::one() << exp as usize
    };
    let mut out = Vec::new();
    let lo = Dyadic { num: -&bound - 1, exp: 0 };
    let hi = Dyadic { num: bound, exp: 0 };
    let mut stack = alloc::vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let count = variations(&a) - variations(&b);
        if count == 0 {
            continue;
        }
        if count > 1 {
            let mid = midpoint(&a, &b);
            stack.push((mid.clone(), b));
            stack.push((a, mid));
            continue;
        }
        // One root in (a, b]: f changes sign across it unless it sits at b,
        // so plain bisection on f suffices.
        let (mut a, mut b) = (a, b);
        let sb = sign_at(fz, &b);
        if sb != 0 {
            while !narrow(&a, &b) {
                let mid = midpoint(&a, &b);
                match sign_at(fz, &mid) {
                    0 => {
                        b = mid;
                        break;
                    }
                    s if s == sb => b = mid,
                    _ => a = mid,
                }
            }
        }
        // the grid point at or below b is the only candidate
        let exp = a.exp.max(b.exp);
        let m = (b.at_exp(exp) * &grid).div_floor(&(BigInt::one() << exp as usize));
        let cand = Rat::new(m.clone(), grid.clone());
        let above_a = m << exp as usize > a.at_exp(exp) * &grid;
        if above_a && f.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn integer_scaled(p: &UPoly) -> UPoly {
    let l = Rat::from_integer(lcm_of_denominators(p.coeffs()));
    p.scale(&l)
}

fn squarefree_part(p: &UPoly) -> UPoly {
    let g = Poly::gcd(p, &p.derivative());
    let q = p.exact_div(&g).expect("gcd divides");
    integer_scaled(&q)
}

fn sturm_sequence(f: &UPoly) -> Vec<UPoly> {
    let mut seq = alloc::vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&integer_scaled(&r));
    }
    seq
}

/// Sign of `p(x)` for integer coefficients and dyadic `x = a / 2^e`, via
/// the homogeneous form `sum c_i a^i 2^(e(d-i))`.
fn sign_at(p: &[BigInt], x: &Dyadic) -> i8 {
    let mut acc = BigInt::zero();
    for (steps, c) in p.iter().rev().enumerate() {
        acc = acc * &x.num + (c << (steps * x.exp as usize));
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}
