//! Dense polynomial helpers over BigInt / BigRational coefficients,
//! low-degree-first. Just enough for cyclotomic reduction: products,
//! exact division by monic divisors, and the extended Euclidean
//! algorithm used for field inversion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn int_trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    int_trim(&mut out);
    out
}

/// Long division by a monic divisor; panics if the division is not exact.
fn int_div_exact_monic(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    assert!(div.last().is_some_and(One::is_one), "divisor must be monic");
    let mut rem = num.to_vec();
    let d = div.len() - 1;
    if rem.len() <= d {
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for k in (0..quot.len()).rev() {
        let c = std::mem::replace(&mut rem[k + d], BigInt::zero());
        if !c.is_zero() {
            for (j, dj) in div.iter().take(d).enumerate() {
                let sub = dj * &c;
                rem[k + j] -= sub;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    int_trim(&mut quot);
    quot
}

/// The M-th cyclotomic polynomial Phi_M(x), monic with integer
/// coefficients, computed by dividing x^M - 1 by Phi_d for every proper
/// divisor d of M. Coefficients are returned low-degree-first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial order must be positive");
    if m == 1 {
        return vec![-BigInt::one(), BigInt::one()];
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in divisors(m) {
        if d < m {
            den = int_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    int_div_exact_monic(&num, &den)
}

/// Euler's totient, the degree of Phi_M.
pub fn euler_phi(m: u64) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub(crate) fn rat_zero() -> BigRational {
    BigRational::zero()
}

pub(crate) fn rat_is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn rat_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rat_degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Remainder and quotient of `num / div` over the rationals.
fn rat_divmod(num: &[BigRational], div: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = rat_degree(div).expect("division by the zero polynomial");
    let lead = div[dd].clone();
    let mut rem = num.to_vec();
    rat_trim(&mut rem);
    let nd = match rat_degree(&rem) {
        Some(nd) if nd >= dd => nd,
        _ => return (vec![rat_zero()], rem),
    };
    let mut quot = vec![rat_zero(); nd - dd + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for j in 0..=dd {
                let sub = &div[j] * &c;
                rem[k + j] -= sub;
            }
        }
        quot[k] = c;
    }
    rat_trim(&mut rem);
    rat_trim(&mut quot);
    (quot, rem)
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![rat_zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    rat_trim(&mut out);
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), rat_zero());
    }
    for (j, bj) in b.iter().enumerate() {
        out[j] -= bj;
    }
    rat_trim(&mut out);
    out
}

/// Extended Euclid over Q[x]: returns (g, s) with s*a = g (mod b).
/// When b is irreducible and a is a nonzero polynomial of smaller degree,
/// g is a nonzero constant, so s/g is the inverse of a modulo b.
pub(crate) fn rat_ext_gcd_mod(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = b.to_vec();
    let mut r1 = a.to_vec();
    rat_trim(&mut r0);
    rat_trim(&mut r1);
    let mut s0 = vec![rat_zero()];
    let mut s1 = vec![BigRational::one()];
    while !rat_is_zero_poly(&r1) {
        let (q, r) = rat_divmod(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

/// Horner evaluation of an integer polynomial at a rational point.
pub fn int_poly_eval(p: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = rat_zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Signed magnitude bound used by sanity checks on coefficient growth.
pub fn int_poly_height(p: &[BigInt]) -> BigInt {
    p.iter().map(Signed::abs).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn divisors_are_sorted_and_complete() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(20), vec![1, 2, 4, 5, 10, 20]);
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        // Frozen by dividing x^12 - 1 by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6 by hand.
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(20),
            ints(&[1, 0, -1, 0, 1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn cyclotomic_degree_is_euler_phi() {
        for m in 1..=60 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m), "M = {m}");
        }
    }

    #[test]
    fn product_over_divisors_recovers_x_m_minus_1() {
        for m in 1..=30u64 {
            let mut prod = ints(&[1]);
            for d in divisors(m) {
                prod = int_mul(&prod, &cyclotomic_polynomial(d));
            }
            let mut expect = vec![BigInt::zero(); m as usize + 1];
            expect[0] = -BigInt::from(1);
            expect[m as usize] = BigInt::from(1);
            assert_eq!(prod, expect, "M = {m}");
        }
    }

    #[test]
    fn cyclotomic_vanishes_at_primitive_root_numerically() {
        for m in [3u64, 4, 8, 12, 20, 24, 36] {
            let phi = cyclotomic_polynomial(m);
            let theta = 2.0 * std::f64::consts::PI / m as f64;
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for (k, c) in phi.iter().enumerate() {
                let c: f64 = c.to_string().parse().unwrap();
                re += c * (theta * k as f64).cos();
                im += c * (theta * k as f64).sin();
            }
            assert!(re.hypot(im) < 1e-9, "Phi_{m} at zeta_{m}: {re} + {im}i");
        }
    }
}
