//! Exact binomials and multinomials.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(x, r)` for a possibly negative upper index, with the convention that
/// the value is zero whenever `x < r`.
pub fn binomial_signed(x: i64, r: u64) -> BigInt {
    if x < 0 || (x as u64) < r {
        return BigInt::zero();
    }
    BigInt::from(binomial(x as u64, r))
}

/// `C(n, k)` in `u128`, or `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) is divisible by (i + 1) after the multiplication.
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of distinct rearrangements of a multiset with the given
/// multiplicities.
pub fn multinomial(multiplicities: &[usize]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &c in multiplicities {
        total += c as u64;
        acc *= binomial(total, c as u64);
    }
    acc
}

/// Number of distinct coordinate permutations of `point`.
pub fn orbit_size(point: &[u32]) -> BigUint {
    let mut sorted = point.to_vec();
    sorted.sort_unstable();
    let mut mults = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&v| v == sorted[i]).count();
        mults.push(j);
        i += j;
    }
    multinomial(&mults)
}
