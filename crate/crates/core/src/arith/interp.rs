use alloc::vec::Vec;

use num_traits::Zero;

use super::poly::Poly;
use super::rat::Rat;
use super::ratfn::{RatFn, UPoly};
use crate::Error;

/// Rational interpolation through `points` with `deg(num) <= deg_num` and
/// `deg(den) <= deg_den`.
///
/// Runs the extended Euclidean algorithm on the node polynomial and the
/// Lagrange interpolant and stops at the first remainder of degree at most
/// `deg_num`. Extra points beyond `deg_num + deg_den + 1` act as checks.
/// Returns `Ok(None)` when no such function exists whose denominator is
/// nonzero at every node.
pub fn cauchy_interpolate(points: &[(Rat, Rat)], deg_num: usize, deg_den: usize) -> Result<Option<RatFn>, Error> {
    let needed = deg_num + deg_den + 1;
    if points.len() < needed {
        return Err(Error::InsufficientPoints { needed, got: points.len() });
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::DuplicateNodes);
        }
    }

    let nodes = points.iter().fold(UPoly::one(), |acc, (x, _)| &acc * &UPoly::linear_root(x.clone()));
    let lagrange = newton_interpolant(points);

    let (mut r0, mut r1) = (nodes, lagrange);
    let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
    while r1.degree().is_some_and(|d| d > deg_num) {
        let (q, r) = r0.div_rem(&r1);
        let t = &t0 - &(&q * &t1);
        r0 = core::mem::replace(&mut r1, r);
        t0 = core::mem::replace(&mut t1, t);
    }
    let Some(f) = RatFn::new(r1, t1) else {
        return Ok(None);
    };
    let fits = f.num().degree().map_or(true, |d| d <= deg_num)
        && f.den().degree().unwrap_or(0) <= deg_den
        && points.iter().all(|(x, y)| f.eval(x).as_ref() == Some(y));
    Ok(fits.then_some(f))
}

/// Rational function through `fit` that also matches every `holdout`
/// point, without prior degree bounds. Every convergent of the extended
/// Euclidean sequence is tried, so any function with numerator plus
/// denominator degree below `fit.len()` is found.
pub(crate) fn reconstruct_any(fit: &[(Rat, Rat)], holdout: &[(Rat, Rat)]) -> Option<RatFn> {
    let nodes = fit.iter().fold(UPoly::one(), |acc, (x, _)| &acc * &UPoly::linear_root(x.clone()));
    let (mut r0, mut r1) = (nodes, newton_interpolant(fit));
    let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
    loop {
        // cheap screen on the held-out points before reducing
        let plausible = holdout.iter().all(|(x, y)| {
            let d = t1.eval(x);
            !d.is_zero() && r1.eval(x) == y * &d
        });
        if let Some(f) = plausible.then(|| RatFn::new(r1.clone(), t1.clone())).flatten() {
            let agrees = |pts: &[(Rat, Rat)]| pts.iter().all(|(x, y)| f.eval(x).as_ref() == Some(y));
            if agrees(holdout) && agrees(fit) {
                return Some(f);
            }
        }
        if r1.is_zero() {
            return None;
        }
        let (q, r) = r0.div_rem(&r1);
        let t = &t0 - &(&q * &t1);
        r0 = core::mem::replace(&mut r1, r);
        t0 = core::mem::replace(&mut t1, t);
    }
}

/// Interpolating polynomial of degree `< points.len()` via divided differences.
fn newton_interpolant(points: &[(Rat, Rat)]) -> UPoly {
    let xs: Vec<&Rat> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut acc = UPoly::zero();
    for i in (0..dd.len()).rev() {
        acc = &(&acc * &UPoly::linear_root(xs[i].clone())) + &Poly::constant(dd[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::arith::rat::int;

    fn pts(v: &[(i64, i64)]) -> Vec<(Rat, Rat)> {
        v.iter().map(|&(x, y)| (int(x), int(y))).collect()
    }

    #[test]
    fn constant_data() {
        let f = cauchy_interpolate(&pts(&[(1, 1), (2, 1), (3, 1)]), 0, 0).unwrap();
        assert_eq!(f, Some(RatFn::one()));
    }

    #[test]
    fn recovers_simple_fraction() {
        let target = &(&RatFn::var() + &RatFn::one()) / &RatFn::var();
        let points: Vec<_> = (1..=4).map(|x| (int(x), target.eval(&int(x)).unwrap())).collect();
        assert_eq!(cauchy_interpolate(&points, 1, 1).unwrap(), Some(target));
    }

    #[test]
    fn no_line_through_three_points() {
        assert_eq!(cauchy_interpolate(&pts(&[(1, 1), (2, 2), (3, 5)]), 1, 0).unwrap(), None);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(cauchy_interpolate(&pts(&[(1, 1), (1, 2)]), 1, 0), Err(Error::DuplicateNodes));
        assert_eq!(
            cauchy_interpolate(&pts(&[(1, 1)]), 1, 1),
            Err(Error::InsufficientPoints { needed: 3, got: 1 })
        );
    }
}
