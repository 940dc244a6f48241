use std::f64::consts::{LN_2, PI};

use ratsum_core::arith::rat;
use ratsum_core::{
    check_identity, direct_sum, eval_pgexpr, parse, psi_norm, EvalConfig, Error, Identity, PGExpr, PGTerm, RatFn,
};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn psi(s: u32, x: f64) -> f64 {
    psi_norm(s, x, &EvalConfig::default()).unwrap()
}

/// `-sum_{j>=0} 1/(x+j)^(s+1)` for `s >= 1`: a long partial sum plus the
/// leading Euler-Maclaurin tail terms.
fn brute_series(s: u32, x: f64) -> f64 {
    const N: usize = 20_000;
    let p = s as i32 + 1;
    let head: f64 = (0..N).rev().map(|j| (x + j as f64).powi(-p)).sum();
    let t = x + N as f64;
    let tail = t.powi(-(s as i32)) / s as f64 + 0.5 * t.powi(-p) + (p as f64) / 12.0 * t.powi(-p - 1);
    -(head + tail)
}

#[test]
fn digamma_special_values() {
    assert!((psi(0, 1.0) + EULER_GAMMA).abs() < 1e-13);
    assert!((psi(0, 0.5) + EULER_GAMMA + 2.0 * LN_2).abs() < 1e-13);
    assert!((psi(0, 0.25) + EULER_GAMMA + PI / 2.0 + 3.0 * LN_2).abs() < 1e-13);
}

#[test]
fn higher_orders_match_the_defining_series() {
    assert!((psi(1, 1.0) + PI * PI / 6.0).abs() < 1e-13);
    for s in 1..=5 {
        for &x in &[0.3, 1.0, 2.5, 7.25, 40.0] {
            let (got, want) = (psi(s, x), brute_series(s, x));
            assert!((got - want).abs() <= 1e-11 * want.abs().max(1.0), "s={s} x={x}: {got} vs {want}");
        }
    }
}

#[test]
fn recurrence_residual() {
    for s in 0..=4 {
        for i in 0..40 {
            let x = -7.3 + 0.61 * i as f64;
            if x.fract() == 0.0 {
                continue;
            }
            let residual = psi(s, x + 1.0) - psi(s, x) - x.powi(-(s as i32 + 1));
            let scale = psi(s, x).abs().max(1.0);
            assert!(residual.abs() <= 1e-11 * scale, "s={s} x={x}: {residual}");
        }
    }
}

#[test]
fn poles_at_nonpositive_integers() {
    for x in [0.0, -1.0, -4.0] {
        assert!(matches!(psi_norm(2, x, &EvalConfig::default()), Err(Error::Pole(_))));
    }
}

#[test]
fn identity_suites_hold() {
    let cfg = EvalConfig::default();
    for which in [Identity::Shift, Identity::Reflection, Identity::Multiplication] {
        let report = check_identity(which, &[0, 1, 2, 3], 32, &cfg).unwrap();
        assert!(report.max_abs_error <= 1e-9, "{which:?}: {}", report.max_abs_error);
    }
}

#[test]
fn config_rejects_other_precisions() {
    let cfg = EvalConfig { working_precision: 30, ..EvalConfig::default() };
    assert!(cfg.validate().is_err());
}

#[test]
fn harmonic_number() {
    assert_eq!(direct_sum(&parse("1/(k+1)").unwrap(), 4).unwrap(), rat(25, 12));
    // psi(n + 1) - psi(1) at n = 4
    let mut e = PGExpr::from_term(PGTerm::new(RatFn::int(1), 0, &RatFn::var() + &RatFn::int(1)));
    e.add_term(PGTerm::new(RatFn::int(-1), 0, RatFn::int(1)));
    let v = eval_pgexpr(&e, 4.0, &EvalConfig::default()).unwrap();
    assert!((v - 25.0 / 12.0).abs() < 1e-13);
}

#[test]
fn direct_sum_reports_singular_terms() {
    let r = parse("1/(k-2)").unwrap();
    assert_eq!(direct_sum(&r, 2).unwrap(), rat(-3, 2));
    assert_eq!(direct_sum(&r, 3), Err(Error::SingularTerm { k: 2, n: 3 }));
}
