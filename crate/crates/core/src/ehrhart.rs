//! Ehrhart counts, the h*-vector, and the Ehrhart polynomial.
//!
//! For a lattice polytope `P` of dimension `d`, the h*-vector is read off the
//! first `d + 1` dilate counts:
//!
//! ```text
//! h*_j = Σ_{i=0}^{j} (-1)^i C(d+1, i) ehr(j - i)
//! ```

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::polytope::PolytopeHandle;

/// `(h*_0, …, h*_d)` together with `d`. Trailing zeros are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector {
    coeffs: Vec<BigUint>,
    dim: usize,
}

impl HStarVector {
    /// Pads with zeros to length `dim + 1`. Fails when `coeffs` is longer
    /// than that or does not start with 1.
    pub fn new(mut coeffs: Vec<BigUint>, dim: usize) -> Result<Self> {
        if coeffs.len() > dim + 1 {
            return Err(Error::InvalidArgument(format!("{} coefficients for dimension {dim}", coeffs.len())));
        }
        if coeffs.first().is_none_or(|c| !c.is_one()) {
            return Err(Error::InvalidArgument("h*_0 must be 1".into()));
        }
        coeffs.resize(dim + 1, BigUint::zero());
        Ok(Self { coeffs, dim })
    }

    pub fn from_u64s(coeffs: &[u64], dim: usize) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect(), dim)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Index of the last nonzero entry.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// `Σ h*_j`, the normalized volume.
    pub fn normalized_volume(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Entries as machine integers, when they fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| c.to_u64()).collect()
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for HStarVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HStarVector", 2)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.serialize_field("dim", &self.dim)?;
        s.end()
    }
}

/// Symmetric at full degree `d`.
pub fn is_palindromic(v: &HStarVector) -> bool {
    let c = &v.coeffs;
    (0..c.len()).all(|i| c[i] == c[c.len() - 1 - i])
}

/// `d - s + 1` when the h*-polynomial of degree `s` is palindromic.
pub fn gorenstein_index(v: &HStarVector) -> Option<usize> {
    let s = v.degree();
    let head = &v.coeffs[..=s];
    (0..=s).all(|i| head[i] == head[s - i]).then(|| v.dim - s + 1)
}

/// Weakly increasing up to some peak and weakly decreasing after it.
pub fn is_unimodal(v: &HStarVector) -> bool {
    let c = &v.coeffs;
    let mut i = 0;
    while i + 1 < c.len() && c[i] <= c[i + 1] {
        i += 1;
    }
    while i + 1 < c.len() && c[i] >= c[i + 1] {
        i += 1;
    }
    i + 1 >= c.len()
}

/// `#(tP ∩ Z^m)`, with `t = 0` giving 1.
pub fn count_dilate(handle: &PolytopeHandle, t: u32) -> Result<BigUint> {
    if t == 0 {
        return Ok(BigUint::one());
    }
    Ok(handle.dilate(t)?.count_lattice_points())
}

/// Dimension of a handle, checked against what each family must have.
pub fn checked_dimension(handle: &PolytopeHandle) -> Result<usize> {
    let d = handle.dimension();
    let expected = if handle.is_degenerate() {
        0
    } else {
        match handle {
            PolytopeHandle::Schur { .. } => handle.m() - 1,
            PolytopeHandle::Grothendieck { .. } => handle.m(),
        }
    };
    if d != expected {
        return Err(Error::Consistency(format!("{handle} has dimension {d}, expected {expected}")));
    }
    Ok(d)
}

/// `ehr(0), …, ehr(n)`, computed in parallel.
pub fn dilate_counts(handle: &PolytopeHandle, n: u32) -> Result<Vec<BigUint>> {
    (0..=n).into_par_iter().map(|t| count_dilate(handle, t)).collect()
}

/// h*-vector from the counts `ehr(0..=d)`.
pub fn hstar_from_counts(counts: &[BigUint], dim: usize) -> Result<HStarVector> {
    if counts.len() < dim + 1 {
        return Err(Error::InvalidArgument(format!("need {} counts, got {}", dim + 1, counts.len())));
    }
    let mut coeffs = Vec::with_capacity(dim + 1);
    for j in 0..=dim {
        let mut acc = BigInt::zero();
        for i in 0..=j {
            let term = BigInt::from(binomial(dim as u64 + 1, i as u64)) * BigInt::from(counts[j - i].clone());
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc.is_negative() {
            return Err(Error::Consistency(format!("h*_{j} = {acc} is negative")));
        }
        coeffs.push(acc.to_biguint().expect("nonnegative"));
    }
    if !coeffs[0].is_one() {
        return Err(Error::Consistency(format!("h*_0 = {} instead of 1", coeffs[0])));
    }
    Ok(HStarVector { coeffs, dim })
}

/// The h*-vector of a handle. A single point has `h* = (1)`.
pub fn hstar(handle: &PolytopeHandle) -> Result<HStarVector> {
    let d = checked_dimension(handle)?;
    let counts = dilate_counts(handle, d as u32)?;
    hstar_from_counts(&counts, d)
}

/// `ehr(t)` as a polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    /// The unique polynomial of degree `≤ n` through `(t, counts[t])` for
    /// `t = 0..=n`.
    pub fn interpolate(counts: &[BigUint]) -> Self {
        let n = counts.len();
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, y) in counts.iter().enumerate() {
            // basis polynomial prod_{j != i} (t - j) / (i - j)
            let mut basis = vec![BigRational::one()];
            let mut denom = BigInt::one();
            for j in 0..n {
                if j == i {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * BigRational::from_integer(BigInt::from(j));
                }
                basis = next;
                denom *= BigInt::from(i as i64 - j as i64);
            }
            let scale = BigRational::new(BigInt::from(y.clone()), denom);
            for (k, b) in basis.iter().enumerate() {
                coeffs[k] += b * &scale;
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: u64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    pub fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("never empty")
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(first && k == 0) {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Interpolates the Ehrhart polynomial through `t = 0..=d`.
pub fn ehrhart_polynomial(handle: &PolytopeHandle) -> Result<EhrhartPolynomial> {
    let d = checked_dimension(handle)?;
    let p = EhrhartPolynomial::interpolate(&dilate_counts(handle, d as u32)?);
    if d > 0 && (p.degree() != d || !p.leading().is_positive()) {
        return Err(Error::Consistency(format!("Ehrhart polynomial of {handle} has degree {}", p.degree())));
    }
    Ok(p)
}
