use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rat::Rat;
use crate::Error;

/// Coefficient field of a [`Poly`]. Characteristic zero is assumed by the
/// square-free decomposition.
pub trait Field:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Div<Output = Self>
{
    fn from_int(v: i64) -> Self;

    /// Monic gcd of two nonzero polynomials by some faster route than the
    /// Euclidean algorithm, or `None` to fall back to it.
    fn fast_gcd(_a: &Poly<Self>, _b: &Poly<Self>) -> Option<Poly<Self>> {
        None
    }
}

impl Field for Rat {
    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }

    fn fast_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Option<Poly<Self>> {
        super::modgcd::gcd(a, b)
    }
}

/// Dense univariate polynomial, coefficients stored from degree 0 upwards.
/// The leading stored coefficient is never zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: F, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// `x - root`
    pub fn linear_root(root: F) -> Self {
        Poly { coeffs: vec![-root, F::one()] }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = F::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_int(i as i64))
                .collect(),
        )
    }

    pub fn map_coeffs<G: Field>(&self, f: impl FnMut(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = F::one() / divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = rem[i + dd].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if !a.is_zero() && !b.is_zero() {
            if let Some(g) = F::fast_gcd(a, b) {
                return g;
            }
        }
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(a*x + b)`
    pub fn compose_affine(&self, a: &F, b: &F) -> Self {
        self.compose(&Poly::from_coeffs(vec![b.clone(), a.clone()]))
    }

    /// Square-free decomposition by Yun's method. Returns monic, pairwise
    /// coprime, square-free factors with strictly increasing multiplicities;
    /// their product equals `self` up to the leading coefficient.
    pub fn squarefree(&self) -> Result<Vec<(Self, u32)>, Error> {
        if self.is_zero() {
            return Err(Error::SquarefreeOfZero);
        }
        let a = self.monic();
        let mut out = Vec::new();
        if a.is_constant() {
            return Ok(out);
        }
        let b = a.derivative();
        let c = Self::gcd(&a, &b);
        let mut w = a.exact_div(&c).expect("gcd divides");
        let mut y = b.exact_div(&c).expect("gcd divides derivative");
        let mut z = &y - &w.derivative();
        let mut i = 1u32;
        while !w.is_constant() {
            let g = Self::gcd(&w, &z);
            if !g.is_constant() {
                out.push((g.clone(), i));
            }
            w = w.exact_div(&g).expect("gcd divides");
            y = z.exact_div(&g).expect("gcd divides");
            z = &y - &w.derivative();
            i += 1;
        }
        Ok(out)
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_by_value {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_by_value!(Add::add, Sub::sub, Mul::mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}
