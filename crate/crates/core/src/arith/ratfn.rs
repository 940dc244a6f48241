use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::interp::reconstruct_any;
use super::poly::{Field, Poly};
use super::rat::{int, to_f64, Rat};

/// Polynomial in `n` with rational coefficients.
pub type UPoly = Poly<Rat>;

/// Rational function of `n` over the rationals, kept reduced with a monic
/// denominator so that equality is structural.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RatFn {
    num: UPoly,
    den: UPoly,
}

impl RatFn {
    /// Reduced quotient `num / den`; `None` when `den` is zero.
    pub fn new(num: UPoly, den: UPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
            }
        };
        let lc = den.lc().expect("nonzero").clone();
        if lc.is_one() {
            Some(RatFn { num, den })
        } else {
            let inv = Rat::one() / lc;
            Some(RatFn { num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    /// From a numerator and a nonzero denominator already known coprime.
    fn from_coprime(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc = den.lc().expect("nonzero").clone();
        if lc.is_one() {
            RatFn { num, den }
        } else {
            let inv = Rat::one() / lc;
            RatFn { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn int(v: i64) -> Self {
        Self::constant(int(v))
    }

    /// The variable `n`.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// `deg(num) - deg(den)`, `None` for the zero function.
    pub fn degree_balance(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap_or(0) as i64)
    }

    /// Value at `n = x`, `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> Option<f64> {
        let horner = |p: &UPoly| p.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c));
        let d = horner(&self.den);
        if d == 0.0 {
            return None;
        }
        Some(horner(&self.num) / d)
    }

    pub fn recip(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Some(RatFn { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(top, &self.den * &self.den).expect("nonzero denominator")
    }

    /// `self(inner(n))`
    pub fn compose(&self, inner: &RatFn) -> Option<Self> {
        // N(a/b) / D(a/b) = b^(deg D - deg N) * H_N / H_D with H homogenized
        let (a, b) = (&inner.num, &inner.den);
        let top = homogenize(&self.num, a, b);
        let bottom = homogenize(&self.den, a, b);
        if bottom.is_zero() {
            return None;
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let (top, bottom) = if dd >= dn {
            (&top * &b.pow((dd - dn) as u32), bottom)
        } else {
            (top, &bottom * &b.pow((dn - dd) as u32))
        };
        Self::new(top, bottom)
    }

    /// `self(a*n + b)` for rational `a != 0`.
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Self {
        Self::new(self.num.compose_affine(a, b), self.den.compose_affine(a, b)).expect("affine map keeps den nonzero")
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFn {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl Field for RatFn {
    fn from_int(v: i64) -> Self {
        RatFn::int(v)
    }

    fn fast_gcd(a: &Poly<RatFn>, b: &Poly<RatFn>) -> Option<Poly<RatFn>> {
        specialized_gcd(a, b)
    }
}

impl Default for RatFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rat> for RatFn {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        // Henrici: with g = gcd(d1, d2), any common factor of the result
        // divides g.
        let g = Poly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFn::from_coprime(num, &self.den * &rhs.den);
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RatFn::zero();
        }
        let h = Poly::gcd(&num, &g);
        let den = &d1 * &rhs.den;
        if h.is_one() {
            RatFn::from_coprime(num, den)
        } else {
            RatFn::from_coprime(num.exact_div(&h).expect("gcd divides"), den.exact_div(&h).expect("gcd divides"))
        }
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        if self.is_constant() && rhs.is_polynomial() {
            return RatFn { num: rhs.num.scale(&self.num.coeff(0)), den: rhs.den.clone() };
        }
        if rhs.is_constant() && self.is_polynomial() {
            return RatFn { num: self.num.scale(&rhs.num.coeff(0)), den: self.den.clone() };
        }
        // Cross-cancel first to keep the products small.
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RatFn::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        let inv = rhs.recip().expect("division by zero rational function");
        self * &inv
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_by_value {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: RatFn) -> RatFn {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_by_value!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}


/// Gcd in `Q(n)[k]` from images at integer `n`.
///
/// Clearing denominators turns `a` and `b` into polynomials in `n, k`. At a
/// point where their leading coefficients and denominators survive, the gcd
/// of the images has degree at least that of the true gcd, so a constant
/// image proves coprimality. Otherwise the coefficients of the monic gcd are
/// rebuilt by rational interpolation over the images of minimal degree and
/// the candidate is accepted only if it divides both inputs exactly, which
/// together with the degree bound makes it the gcd.
fn specialized_gcd(a: &Poly<RatFn>, b: &Poly<RatFn>) -> Option<Poly<RatFn>> {
    const MAX_DEGREE: usize = 48;
    let image = |p: &Poly<RatFn>, x: &Rat| -> Option<UPoly> {
        let coeffs = p.coeffs().iter().map(|c| c.eval(x)).collect::<Option<Vec<Rat>>>()?;
        let q = Poly::from_coeffs(coeffs);
        (q.degree() == p.degree()).then_some(q)
    };
    let mut samples: Vec<(Rat, UPoly)> = Vec::new();
    let mut min_deg = usize::MAX;
    let mut v: i64 = 6;
    let mut total = 2;
    while total <= MAX_DEGREE {
        while samples.len() < total + 3 {
            v += 1;
            let x = Rat::from_integer(v.into());
            let (Some(pa), Some(pb)) = (image(a, &x), image(b, &x)) else { continue };
            let g = Poly::gcd(&pa, &pb);
            let d = g.degree().expect("nonzero images");
            if d == 0 {
                return Some(Poly::one());
            }
            if d < min_deg {
                min_deg = d;
                samples.clear();
            }
            if d == min_deg {
                samples.push((x, g));
            }
        }
        if let Some(g) = rebuild(&samples, min_deg, total) {
            let divides = |p: &Poly<RatFn>| p.div_rem(&g).1.is_zero();
            if divides(a) && divides(b) {
                return Some(g);
            }
        }
        total *= 2;
    }
    None
}

/// Monic polynomial of degree `deg` whose coefficients interpolate the
/// samples with numerator plus denominator degree at most `total`.
fn rebuild(samples: &[(Rat, UPoly)], deg: usize, total: usize) -> Option<Poly<RatFn>> {
    let mut coeffs = Vec::with_capacity(deg + 1);
    for j in 0..deg {
        let points: Vec<(Rat, Rat)> = samples.iter().map(|(x, g)| (x.clone(), g.coeff(j))).collect();
        let (fit, holdout) = points.split_at(total + 1);
        let c = reconstruct_any(fit, holdout)?;
        coeffs.push(c);
    }
    coeffs.push(RatFn::one());
    Some(Poly::from_coeffs(coeffs))
}

/// `b^deg(p) * p(a/b)` as a polynomial.
fn homogenize(p: &UPoly, a: &UPoly, b: &UPoly) -> UPoly {
    let mut acc = UPoly::zero();
    let mut bpow = UPoly::one();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * a) + &bpow.scale(c);
        bpow = &bpow * b;
    }
    acc
}

impl Poly<RatFn> {
    /// Value at `k = alpha`. Works over a common denominator so only the
    /// final quotient is reduced.
    pub fn eval_at(&self, alpha: &RatFn) -> RatFn {
        let Some(d) = self.degree() else {
            return RatFn::zero();
        };
        let mut common = UPoly::one();
        for c in self.coeffs() {
            if !c.den.is_constant() && c.den != common {
                let g = Poly::gcd(&common, &c.den);
                common = &common * &c.den.exact_div(&g).expect("gcd divides");
            }
        }
        let (a, b) = (&alpha.num, &alpha.den);
        let mut acc = UPoly::zero();
        let mut bpow = UPoly::one();
        for c in self.coeffs().iter().rev() {
            let lifted = &c.num * &common.exact_div(&c.den).expect("common multiple");
            acc = &(&acc * a) + &(&lifted * &bpow);
            bpow = &bpow * b;
        }
        RatFn::new(acc, &common * &b.pow(d as u32)).expect("nonzero denominator")
    }
}
