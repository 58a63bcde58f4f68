//! Closed-form h*-vectors for three reflexive Schur families, all with
//! `m = n` variables:
//!
//! * the single row `(n)`,
//! * the near hook `(2,1,…,1,0)`, a partition of `n` with `n - 2` ones,
//! * the two-row-column family `(2,…,2)` for even `n`, `(2,…,2,1)` for odd `n`.
//!
//! No closed form is offered for `(m,…,m,0)`; the generic engine covers it.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::combinat::{binomial, binomial_signed};
use crate::ehrhart::HStarVector;
use crate::error::{Error, Result};
use crate::partitions::Partition;

fn finish(coeffs: Vec<BigInt>, dim: usize) -> Result<HStarVector> {
    let mut out = Vec::with_capacity(coeffs.len());
    for (j, c) in coeffs.into_iter().enumerate() {
        if c.is_negative() {
            return Err(Error::Consistency(format!("closed form gave h*_{j} = {c}")));
        }
        out.push(c.to_biguint().expect("nonnegative"));
    }
    HStarVector::new(out, dim)
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!("n must be at least {min}")));
    }
    Ok(())
}

/// `h*_j = Σ_i (-1)^i C(n,i) C((j-i+1)n - 1, n - 1)` for `λ = (n)`.
pub fn hstar_single_row(n: usize) -> Result<HStarVector> {
    check_n(n, 1)?;
    let n64 = n as i64;
    let coeffs = (0..n)
        .map(|j| {
            let mut acc = BigInt::zero();
            for i in 0..=j {
                let term = BigInt::from(binomial(n as u64, i as u64)) * binomial_signed((j as i64 - i as i64 + 1) * n64 - 1, n as u64 - 1);
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect();
    finish(coeffs, n - 1)
}

/// `h*_j = C(n-1, j)^2` for `λ = (2,1,…,1,0) ⊢ n`.
pub fn hstar_near_hook(n: usize) -> Result<HStarVector> {
    check_n(n, 3)?;
    let coeffs = (0..n).map(|j| BigInt::from(binomial(n as u64 - 1, j as u64).pow(2))).collect();
    finish(coeffs, n - 1)
}

/// `a_{n,k}`: weak compositions of `nk` into `n` parts, each at most `2k`.
pub fn bounded_compositions(n: usize, k: usize) -> Result<BigUint> {
    check_n(n, 1)?;
    let (n64, k64) = (n as i64, k as i64);
    let mut acc = BigInt::zero();
    for i in 0..=n {
        let term = BigInt::from(binomial(n as u64, i as u64)) * binomial_signed(n64 * k64 + n64 - 1 - i as i64 * (2 * k64 + 1), n as u64 - 1);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().ok_or_else(|| Error::Consistency(format!("a_({n},{k}) came out negative")))
}

/// `h*_j = Σ_k (-1)^(j-k) C(n, j-k) a_{n,k}` for `(2,…,2)` or `(2,…,2,1)`.
pub fn hstar_two_row_family(n: usize) -> Result<HStarVector> {
    check_n(n, 2)?;
    let a: Vec<BigInt> = (0..n).map(|k| bounded_compositions(n, k).map(BigInt::from)).collect::<Result<_>>()?;
    let coeffs = (0..n)
        .map(|j| {
            let mut acc = BigInt::zero();
            for (k, ak) in a.iter().enumerate().take(j + 1) {
                let term = BigInt::from(binomial(n as u64, (j - k) as u64)) * ak;
                if (j - k) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect();
    finish(coeffs, n - 1)
}

/// The partition (with `m = n`) each family describes.
pub fn family_partition(family: Family, n: usize) -> Result<Partition> {
    let mut parts = vec![0u32; n];
    match family {
        Family::SingleRow => {
            check_n(n, 1)?;
            parts[0] = n as u32;
        }
        Family::NearHook => {
            check_n(n, 3)?;
            parts.iter_mut().take(n - 1).for_each(|p| *p = 1);
            parts[0] = 2;
        }
        Family::TwoRow => {
            check_n(n, 2)?;
            for p in parts.iter_mut().take(n / 2) {
                *p = 2;
            }
            if n % 2 == 1 {
                parts[n / 2] = 1;
            }
        }
    }
    Partition::new(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SingleRow,
    NearHook,
    TwoRow,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::SingleRow, Family::NearHook, Family::TwoRow];

    pub fn name(self) -> &'static str {
        match self {
            Family::SingleRow => "single-row",
            Family::NearHook => "near-hook",
            Family::TwoRow => "two-row",
        }
    }

    pub fn hstar(self, n: usize) -> Result<HStarVector> {
        match self {
            Family::SingleRow => hstar_single_row(n),
            Family::NearHook => hstar_near_hook(n),
            Family::TwoRow => hstar_two_row_family(n),
        }
    }

    /// Smallest `n` the family is defined for.
    pub fn min_n(self) -> usize {
        match self {
            Family::SingleRow => 1,
            Family::NearHook => 3,
            Family::TwoRow => 2,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}` (single-row, near-hook, two-row)")))
    }
}
