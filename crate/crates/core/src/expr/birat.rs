use alloc::string::ToString;
use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{Poly, Rat, RatFn, UPoly};
use crate::Error;

/// Polynomial in `k` whose coefficients are rational functions of `n`.
pub type KPoly = Poly<RatFn>;

/// A summand `R(k, n)` as a reduced quotient of polynomials in `k` over
/// `Q(n)`. The denominator is monic in `k` and coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct BiRat {
    num: KPoly,
    den: KPoly,
}

impl BiRat {
    pub fn new(num: KPoly, den: KPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DegenerateInput("denominator is identically zero".to_string()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
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
            return Ok(BiRat { num, den });
        }
        let inv = RatFn::one() / lc;
        Ok(BiRat { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn zero() -> Self {
        BiRat { num: KPoly::zero(), den: KPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(RatFn::one())
    }

    pub fn constant(c: RatFn) -> Self {
        Self::from_kpoly(KPoly::constant(c))
    }

    pub fn from_kpoly(p: KPoly) -> Self {
        BiRat { num: p, den: KPoly::one() }
    }

    /// The variable `k`.
    pub fn k() -> Self {
        Self::from_kpoly(KPoly::x())
    }

    /// The variable `n`.
    pub fn n() -> Self {
        Self::constant(RatFn::var())
    }

    pub fn num(&self) -> &KPoly {
        &self.num
    }

    pub fn den(&self) -> &KPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("division by zero".to_string()));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(BiRat { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// `R(a*k + b, n)` with `a, b` rational functions of `n`.
    pub fn substitute_k(&self, a: &RatFn, b: &RatFn) -> Self {
        Self::new(self.num.compose_affine(a, b), self.den.compose_affine(a, b)).expect("nonzero denominator")
    }

    /// `R(k, scale * n)`.
    pub fn scale_n(&self, scale: &Rat) -> Self {
        let zero = Rat::zero();
        let map = |p: &KPoly| p.map_coeffs(|c| c.compose_affine(scale, &zero));
        Self::new(map(&self.num), map(&self.den)).expect("nonzero denominator")
    }

    /// `R(k0, n)` as a rational function of `n`, `None` when the denominator
    /// vanishes identically at `k = k0`.
    pub fn eval_k(&self, k0: &RatFn) -> Option<RatFn> {
        let d = self.den.eval(k0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(k0) / d)
    }

    /// Numerator and denominator in `k` at `n = n0`; `None` if a coefficient
    /// has a pole there.
    pub fn specialize_n(&self, n0: &Rat) -> Option<(UPoly, UPoly)> {
        let spec = |p: &KPoly| -> Option<UPoly> {
            let cs: Option<Vec<Rat>> = p.coeffs().iter().map(|c| c.eval(n0)).collect();
            Some(UPoly::from_coeffs(cs?))
        };
        Some((spec(&self.num)?, spec(&self.den)?))
    }

    /// Every rational-function coefficient of numerator and denominator.
    pub fn coefficients(&self) -> impl Iterator<Item = &RatFn> {
        self.num.coeffs().iter().chain(self.den.coeffs())
    }
}

impl Add for &BiRat {
    type Output = BiRat;
    fn add(self, rhs: &BiRat) -> BiRat {
        if self.den == rhs.den {
            return BiRat::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        BiRat::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den).expect("nonzero")
    }
}

impl Sub for &BiRat {
    type Output = BiRat;
    fn sub(self, rhs: &BiRat) -> BiRat {
        self + &(-rhs)
    }
}

impl Mul for &BiRat {
    type Output = BiRat;
    fn mul(self, rhs: &BiRat) -> BiRat {
        BiRat::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

/// Panics on a zero divisor; use [`BiRat::recip`] for a checked version.
impl Div for &BiRat {
    type Output = BiRat;
    fn div(self, rhs: &BiRat) -> BiRat {
        self * &rhs.recip().expect("division by zero summand")
    }
}

impl Neg for &BiRat {
    type Output = BiRat;
    fn neg(self) -> BiRat {
        BiRat { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_by_value {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for BiRat {
            type Output = BiRat;
            fn $m(self, rhs: BiRat) -> BiRat {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_by_value!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for BiRat {
    type Output = BiRat;
    fn neg(self) -> BiRat {
        -&self
    }
}
