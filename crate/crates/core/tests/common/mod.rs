//! Brute-force oracles written independently of the library's internals.
#![allow(dead_code, clippy::needless_range_loop)]

use num::{One, Rational64, Zero};
use screenq::{PhaseScalar, RootDatum, Weight};

pub fn q(arity: usize, a: i64) -> PhaseScalar {
    PhaseScalar::q_power(arity, Rational64::from_integer(a))
}

pub fn qr(arity: usize, a: Rational64) -> PhaseScalar {
    PhaseScalar::q_power(arity, a)
}

pub fn z(arity: usize, k: usize, n: i64) -> PhaseScalar {
    PhaseScalar::z_power(arity, k, n).unwrap()
}

/// `Σ_{k<m} b^k` by repeated multiplication.
pub fn geometric(m: u32, b: &PhaseScalar) -> PhaseScalar {
    let mut acc = PhaseScalar::zero(b.arity());
    let mut power = PhaseScalar::one(b.arity());
    for _ in 0..m {
        acc = &acc + &power;
        power = &power * b;
    }
    acc
}

/// Rank-one single-current formula for `Ê_1 U_{λ;m}` at generic weight:
/// `(1 − z² ĥ^{m−1}) / (q_1 − q_1^{-1}) · [m]_{ĥ}` with `ĥ = (−1)^p q^{n_11}`.
pub fn single_current(datum: &RootDatum, m: u32) -> PhaseScalar {
    assert_eq!(datum.rank(), 1);
    let n = datum.inner(1, 1);
    let odd = datum.odd().contains(&1);
    let mut hat = qr(1, n);
    if odd {
        hat = -hat;
    }
    let d = n / Rational64::from_integer(2);
    let qd = qr(1, d);
    let denom = &qd - &qr(1, -d);
    let z2 = z(1, 1, 2);
    let one = PhaseScalar::one(1);
    let hat_pow = hat.pow(i64::from(m) - 1).unwrap();
    let num = &(&one - &(&z2 * &hat_pow)) * &geometric(m, &hat);
    num.try_div(&denom).unwrap()
}

/// `x · G · y` for root coordinates.
pub fn gram_pairing(datum: &RootDatum, x: &[Rational64], y: &[Rational64]) -> Rational64 {
    let mut acc = Rational64::zero();
    for i in 0..x.len() {
        for j in 0..y.len() {
            acc += x[i] * datum.inner(i + 1, j + 1) * y[j];
        }
    }
    acc
}

/// Exchange phase of two composite fields, computed from their net charges
/// `μ = λ − Σ α_i` and the number of odd-odd pairs.
pub fn braid_by_charges(datum: &RootDatum, l1: &[Rational64], s1: &[usize], l2: &[Rational64], s2: &[usize]) -> PhaseScalar {
    let charge = |l: &[Rational64], s: &[usize]| {
        let mut mu = l.to_vec();
        for &i in s {
            mu[i - 1] -= Rational64::one();
        }
        mu
    };
    let exponent = gram_pairing(datum, &charge(l1, s1), &charge(l2, s2));
    let odd1 = s1.iter().filter(|i| datum.odd().contains(i)).count();
    let odd2 = s2.iter().filter(|i| datum.odd().contains(i)).count();
    let p = qr(0, exponent);
    if (odd1 * odd2) % 2 == 1 {
        -p
    } else {
        p
    }
}

/// Cross product of two rows of a 3-column system, scaled so that the first
/// nonzero entry is 1.
pub fn cross_kernel(a: &[PhaseScalar; 3], b: &[PhaseScalar; 3]) -> [PhaseScalar; 3] {
    let c = [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ];
    let lead = c.iter().find(|x| !x.is_zero()).expect("rows are independent").clone();
    let inv = lead.invert().unwrap();
    [&c[0] * &inv, &c[1] * &inv, &c[2] * &inv]
}

pub fn dot(a: &[PhaseScalar], b: &[PhaseScalar]) -> PhaseScalar {
    let mut acc = PhaseScalar::zero(a[0].arity());
    for (x, y) in a.iter().zip(b) {
        acc = &acc + &(x * y);
    }
    acc
}

/// Rows of `Ê_j` on the images of `F1F1F2`, `F1F2F1`, `F2F1F1` for sl(3),
/// worked out by hand and stripped of the common `1/(q − q^{-1})`:
/// `(Ê_2 → U[1,1])`, `(Ê_1 → U[1,2])`, `(Ê_1 → U[2,1])`.
pub fn sl3_hand_rows() -> [[PhaseScalar; 3]; 3] {
    let a = 2;
    let one = PhaseScalar::one(a);
    let z1sq = z(a, 1, 2);
    let z2sq = z(a, 2, 2);
    let zero = PhaseScalar::zero(a);
    let e2 = [
        &q(a, -2) * &(&one - &z2sq),
        &q(a, -1) * &(&one - &(&q(a, -2) * &z2sq)),
        &one - &(&q(a, -4) * &z2sq),
    ];
    let e1_12 = [
        &(&one + &q(a, 2)) * &(&one - &z1sq),
        &q(a, 1) * &(&one - &z1sq),
        zero.clone(),
    ];
    let e1_21 = [
        zero,
        &one - &(&q(a, 2) * &z1sq),
        &(&q(a, 1) + &q(a, -1)) * &(&one - &(&q(a, 2) * &z1sq)),
    ];
    [e2, e1_12, e1_21]
}

/// Seeded random rational weight with small numerators and denominators.
pub fn random_weight(rng: &mut impl rand::Rng, rank: usize) -> Weight {
    Weight::Concrete(
        (0..rank)
            .map(|_| Rational64::new(rng.gen_range(-3..=3), rng.gen_range(1..=3)))
            .collect(),
    )
}
