//! Brute-force oracles shared by test targets.
#![allow(dead_code)]

use num_bigint::BigInt;

/// η-product coefficients of q·Π(1−qⁿ)²(1−q^{11n})² via the pentagonal
/// number theorem, in plain i128 arithmetic.
pub fn pentagonal_oracle(terms: usize) -> Vec<i128> {
    let mut euler = vec![0i128; terms + 1];
    let mut k: i64 = 0;
    loop {
        let mut hit = false;
        for kk in [k, -k] {
            let e = (kk * (3 * kk - 1) / 2) as usize;
            if e <= terms {
                euler[e] = if kk % 2 == 0 { 1 } else { -1 };
                hit = true;
            }
        }
        if !hit {
            break;
        }
        k += 1;
    }
    let mul = |a: &[i128], b: &[i128]| {
        let mut out = vec![0i128; terms + 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, y) in b.iter().enumerate().take(terms + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut e11 = vec![0i128; terms + 1];
    for (i, v) in euler.iter().enumerate() {
        if i * 11 <= terms {
            e11[i * 11] = *v;
        }
    }
    let sq = mul(&euler, &euler);
    let prod = mul(&sq, &mul(&e11, &e11));
    let mut shifted = vec![0i128; terms + 1];
    shifted[1..].copy_from_slice(&prod[..terms]);
    shifted
}

/// Affine points on y² + y = x³ − x² − 10x − 20 over 𝔽_p, brute force.
pub fn affine_points(p: i64) -> i64 {
    let mut count = 0;
    for x in 0..p {
        let rhs = (x * x * x - x * x - 10 * x - 20).rem_euclid(p);
        for y in 0..p {
            if (y * y + y).rem_euclid(p) == rhs {
                count += 1;
            }
        }
    }
    count
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn sigma1(n: u64) -> i128 {
    (1..=n).filter(|d| n % d == 0).map(|d| d as i128).sum()
}

pub fn big(v: i128) -> BigInt {
    BigInt::from(v)
}
