//! Coefficient oracles computed without the library's own expansion code.

use chenforms::modular_letters::{builtin_form, eisenstein_level, eta_square_product};
use num_bigint::BigInt;

mod common;

use common::*;

#[test]
fn cusp_matches_pentagonal_oracle() {
    let terms = 300;
    let f = eta_square_product(terms);
    let oracle = pentagonal_oracle(terms);
    for n in 0..=terms {
        assert_eq!(f.coefficients()[n], big(oracle[n]), "a_{n}");
    }
    let first: Vec<i128> = oracle[1..=5].to_vec();
    assert_eq!(first, vec![1, -2, -1, 2, 1]);
}

#[test]
fn cusp_matches_point_counts() {
    let f = builtin_form("cusp11", 200).unwrap();
    for p in (2..200).filter(|&p| is_prime(p) && p != 11) {
        let ap = p - affine_points(p);
        assert_eq!(f.coefficients()[p as usize], BigInt::from(ap), "a_{p}");
    }
    // Split multiplicative reduction at 11.
    assert_eq!(f.coefficients()[11], BigInt::from(1));
}

#[test]
fn cusp_hecke_recursion() {
    let f = builtin_form("cusp11", 400).unwrap();
    let a = |n: usize| f.coefficients()[n].clone();
    for m in 2..20usize {
        for n in 2..20usize {
            if num_integer::gcd(m, n) == 1 {
                assert_eq!(a(m * n), a(m) * a(n), "a_{m}{n}");
            }
        }
    }
    for p in [2usize, 3, 5, 7] {
        let mut k = p * p;
        while k <= 400 {
            assert_eq!(a(k), a(p) * a(k / p) - BigInt::from(p) * a(k / p / p), "a_{k}");
            k *= p;
        }
    }
}

#[test]
fn eisenstein_matches_divisor_sums() {
    let terms = 300;
    let e = eisenstein_level(11, terms).unwrap();
    assert_eq!(e.coefficients()[0], big(-10));
    for n in 1..=terms as u64 {
        let mut want = -24 * sigma1(n);
        if n % 11 == 0 {
            want += 11 * 24 * sigma1(n / 11);
        }
        assert_eq!(e.coefficients()[n as usize], big(want), "b_{n}");
    }
    assert_eq!(e.coefficients()[2], big(-72));
    assert_eq!(e.coefficients()[11], big(-24));
}
