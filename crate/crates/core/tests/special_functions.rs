mod common;

use std::f64::consts::PI;

use airy_bessel::special::{bessel_i, bessel_j, bessel_k, bessel_k_oracle, gamma, k_from_i_bridge, SeriesOptions};
use airy_bessel::Order;
use common::{bessel_j_by_integral, gamma_by_integral, rel};
use proptest::prelude::*;

fn ord(nu: f64) -> Order {
    Order::new(nu).unwrap()
}

// 40-digit reference values (mpmath)
const GAMMA_TABLE: [(f64, f64); 16] = [
    (-9.7, 2.1575324901235475706e-6),
    (-5.25, 0.02403364606908169999),
    (-2.5, -0.94530872048294188123),
    (-0.9, -10.570564109631926448),
    (-0.1, -10.686287021193193001),
    (0.1, 9.5135076986687312858),
    (1.0 / 3.0, 2.6789385347077477889),
    (0.5, 1.7724538509055160273),
    (2.0 / 3.0, 1.354117939426400483),
    (1.5, 0.88622692545275801365),
    (3.7, 4.1706517837966040301),
    (7.3, 1271.4236336639088399),
    (12.9, 372227524.6644961854),
    (19.5, 27724322986333718.178),
    (25.1, 8.5450339262932662568e+23),
    (29.9, 6.304174488373721221e+30),
];

const K_TABLE: [(f64, f64, f64); 16] = [
    (1.0 / 3.0, 0.1, 2.8998279809345771101),
    (1.0 / 3.0, 0.5, 0.98903107424672428248),
    (1.0 / 3.0, 1.0, 0.43843063344153435975),
    (1.0 / 3.0, 2.0, 0.11654496129616524846),
    (1.0 / 3.0, 3.0, 0.035305904902162556918),
    (1.0 / 3.0, 5.0, 0.0037288750960535883781),
    (1.0 / 3.0, 8.0, 0.00014743456313650054432),
    (1.0 / 3.0, 10.0, 0.000017874608271055334872),
    (2.0 / 3.0, 0.1, 4.7529626776208200781),
    (2.0 / 3.0, 0.5, 1.2059304647203356674),
    (2.0 / 3.0, 1.0, 0.49447506210420825825),
    (2.0 / 3.0, 2.0, 0.1248389274881283093),
    (2.0 / 3.0, 3.0, 0.037057074495188499176),
    (2.0 / 3.0, 5.0, 0.0038444246344968212699),
    (2.0 / 3.0, 8.0, 0.00015036305267099087005),
    (2.0 / 3.0, 10.0, 0.000018161187569530204238),
];

#[test]
fn gamma_relative_error_on_reference_table() {
    for &(x, expected) in &GAMMA_TABLE {
        let g = gamma(x).unwrap();
        assert!(rel(g.value, expected) <= 1e-13, "Γ({x}) = {} vs {expected}", g.value);
        assert!(g.abs_error >= (g.value - expected).abs() * 0.5, "Γ({x}) err {:e} est {:e}", rel(g.value, expected), g.abs_error / g.value.abs());
    }
}

#[test]
fn gamma_one_third_matches_defining_integral() {
    let oracle = gamma_by_integral(1.0 / 3.0);
    let g = gamma(1.0 / 3.0).unwrap().value;
    assert!(rel(g, oracle) <= 1e-12, "{g} vs {oracle}");
}

#[test]
fn j_one_third_at_one_matches_integral_representation() {
    let oracle = bessel_j_by_integral(1.0 / 3.0, 1.0);
    let j = bessel_j(ord(1.0 / 3.0), 1.0, SeriesOptions::default()).unwrap().value;
    assert!((j - oracle).abs() <= 1e-10, "{j} vs {oracle}");
}

#[test]
fn half_integer_j_and_i_closed_forms() {
    let opts = SeriesOptions::default();
    let mut x = 0.5;
    while x <= 10.0 {
        let j = bessel_j(ord(0.5), x, opts).unwrap().value;
        let j_exact = (2.0 / (PI * x)).sqrt() * x.sin();
        assert!((j - j_exact).abs() <= 1e-11 * j_exact.abs().max(1e-3), "J at {x}");
        let i = bessel_i(ord(0.5), x, opts).unwrap().value;
        let i_exact = (2.0 / (PI * x)).sqrt() * x.sinh();
        assert!(rel(i, i_exact) <= 1e-11);
        let k = bessel_k(ord(0.5), x).unwrap().value;
        let k_exact = (PI / (2.0 * x)).sqrt() * (-x).exp();
        assert!(rel(k, k_exact) <= 1e-11);
        x += 0.25;
    }
}

#[test]
fn k_matches_reference_and_oracle() {
    for &(nu, x, expected) in &K_TABLE {
        let k = bessel_k(ord(nu), x).unwrap();
        let oracle = bessel_k_oracle(ord(nu), x).unwrap();
        assert!(rel(k.value, expected) <= 1e-13, "K_{nu}({x}) = {} vs {expected}", k.value);
        assert!(rel(oracle.value, expected) <= 1e-12, "oracle K_{nu}({x}) = {}", oracle.value);
        assert!(rel(k.value, oracle.value) <= 1e-10);
    }
}

#[test]
fn cross_oracle_closure_at_two() {
    // π/(2 sin(π/3)) (I_{-1/3}(2) − I_{1/3}(2)) against the trapezoid oracle
    let opts = SeriesOptions::default();
    let im = bessel_i(ord(-1.0 / 3.0), 2.0, opts).unwrap().value;
    let ip = bessel_i(ord(1.0 / 3.0), 2.0, opts).unwrap().value;
    let composed = PI / (2.0 * (PI / 3.0).sin()) * (im - ip);
    let oracle = bessel_k_oracle(Order::one_third(), 2.0).unwrap().value;
    assert!(rel(composed, oracle) <= 1e-10);
    let bridge = k_from_i_bridge(Order::one_third(), 2.0).unwrap().value;
    assert!(rel(bridge, composed) <= 1e-15);
}

#[test]
fn two_thirds_order_mutual_agreement() {
    let k = bessel_k(Order::two_thirds(), 1.0).unwrap().value;
    let oracle = bessel_k_oracle(Order::two_thirds(), 1.0).unwrap().value;
    assert!(rel(k, oracle) <= 1e-10);
}

#[test]
fn k_recurrences_on_grid() {
    let mut x = 0.2;
    while x <= 8.0 {
        for &nu in &[1.0 / 3.0, 2.0 / 3.0] {
            let km = bessel_k(ord(nu - 1.0), x).unwrap().value;
            let kp = bessel_k(ord(nu + 1.0), x).unwrap().value;
            let k = bessel_k(ord(nu), x).unwrap().value;
            let diff = km - kp + 2.0 * nu / x * k;
            assert!(diff.abs() <= 1e-9 * k, "difference recurrence ν={nu} x={x}: {diff}");

            let h = 1e-5 * x;
            let fd = (bessel_k(ord(nu), x + h).unwrap().value - bessel_k(ord(nu), x - h).unwrap().value) / (2.0 * h);
            let exact = -(km + kp) / 2.0;
            assert!(rel(fd, exact) <= 1e-6, "derivative recurrence ν={nu} x={x}");
        }
        x *= 1.3;
    }
}

#[test]
fn reported_error_bounds_actual_error() {
    // the estimate must cover |value − oracle| (less the oracle's own error) in ≥ 99% of points
    let mut total = 0;
    let mut covered = 0;
    for &nu in &[1.0 / 3.0, 2.0 / 3.0, 0.25, 1.7, -0.4] {
        let mut x = 0.1;
        while x <= 10.0 {
            let k = bessel_k(ord(nu), x).unwrap();
            let oracle = bessel_k_oracle(ord(nu), x).unwrap();
            total += 1;
            if (k.value - oracle.value).abs() <= k.abs_error + oracle.abs_error {
                covered += 1;
            }
            x *= 1.17;
        }
    }
    // half-integer I and J have closed forms with no oracle error
    let opts = SeriesOptions::default();
    let mut x = 0.05;
    while x <= 12.0 {
        let i = bessel_i(ord(0.5), x, opts).unwrap();
        let j = bessel_j(ord(-0.5), x, opts).unwrap();
        let i_exact = (2.0 / (PI * x)).sqrt() * x.sinh();
        let j_exact = (2.0 / (PI * x)).sqrt() * x.cos();
        total += 2;
        // closed forms carry a few ulps of their own
        if (i.value - i_exact).abs() <= i.abs_error + 4.0 * f64::EPSILON * i_exact.abs() {
            covered += 1;
        }
        if (j.value - j_exact).abs() <= j.abs_error + 4.0 * f64::EPSILON * (2.0 / (PI * x)).sqrt() {
            covered += 1;
        }
        x *= 1.1;
    }
    assert!(covered as f64 >= 0.99 * total as f64, "{covered}/{total}");
}

proptest! {
    #[test]
    fn k_is_even_in_order(nu in 0.01f64..3.0, x in 0.1f64..10.0) {
        prop_assume!(nu.fract() != 0.0);
        let a = bessel_k(ord(nu), x).unwrap().value;
        let b = bessel_k(ord(-nu), x).unwrap().value;
        prop_assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn k_is_positive_and_decreasing(nu in 0.05f64..2.9, x in 0.1f64..20.0) {
        prop_assume!(nu.fract() != 0.0);
        let a = bessel_k(ord(nu), x).unwrap().value;
        let b = bessel_k(ord(nu), x * 1.01).unwrap().value;
        prop_assert!(a > 0.0);
        prop_assert!(b < a);
    }

    #[test]
    fn i_satisfies_difference_recurrence(nu in -2.9f64..2.9, x in 0.1f64..20.0) {
        // I_{ν−1} − I_{ν+1} = (2ν/x) I_ν
        prop_assume!((nu - 1.0).fract() != 0.0 || nu - 1.0 >= 0.0);
        let opts = SeriesOptions::default();
        let im = bessel_i(ord(nu - 1.0), x, opts).unwrap();
        let ip = bessel_i(ord(nu + 1.0), x, opts).unwrap();
        let i = bessel_i(ord(nu), x, opts).unwrap();
        let lhs = im.value - ip.value;
        let rhs = 2.0 * nu / x * i.value;
        let budget = im.abs_error + ip.abs_error + (2.0 * nu / x).abs() * i.abs_error + 1e-15 * (im.value.abs() + ip.value.abs());
        prop_assert!((lhs - rhs).abs() <= budget, "lhs {} rhs {} budget {}", lhs, rhs, budget);
    }
}
