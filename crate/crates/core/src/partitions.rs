//! Partitions with a fixed number of parts, dominance, and the dominating
//! sequence that grows a partition one box at a time.
//!
//! Every partition here carries its ambient length `m` explicitly: `(2,1,0)`
//! and `(2,1)` are different values, because the polytopes they index live in
//! different spaces.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing vector of nonnegative integers of fixed length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from exactly `m = parts.len()` entries.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("a partition needs m >= 1 parts".into()));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                index: i + 1,
                reason: format!("part {} exceeds the preceding part {}", parts[i + 1], parts[i]),
            });
        }
        Ok(Self { parts })
    }

    /// The all-zero partition with `m` parts.
    pub fn zero(m: usize) -> Self {
        Self { parts: vec![0; m.max(1)] }
    }

    /// Parses `"2,1"` and zero-pads it to `m` parts.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let mut values = Vec::new();
        for (i, tok) in text.split(',').map(str::trim).enumerate() {
            if tok.is_empty() {
                continue;
            }
            let v: i64 = tok.parse().map_err(|_| Error::InvalidPartition {
                index: i,
                reason: format!("`{tok}` is not an integer"),
            })?;
            values.push(v);
        }
        make_partition(&values, m)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn first(&self) -> u32 {
        self.parts[0]
    }

    pub fn last(&self) -> u32 {
        self.parts[self.parts.len() - 1]
    }

    /// Sum of the `k` largest parts.
    pub fn prefix_sum(&self, k: usize) -> u64 {
        self.parts[..k].iter().map(|&p| p as u64).sum()
    }

    /// True when all parts are equal, i.e. the coordinate-permutation orbit
    /// is a single point.
    pub fn is_trivial_orbit(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn is_reduced(&self) -> bool {
        self.last() == 0
    }

    /// Componentwise containment of Young diagrams, `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.m() == other.m() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// `t * self`, checked for overflow.
    pub fn dilate(&self, t: u32) -> Result<Partition> {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_mul(t).ok_or(Error::Overflow("partition dilation")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition { parts })
    }

    /// Subtracts the last part from every part.
    pub fn reduce_by_translation(&self) -> (Partition, u32) {
        let shift = self.last();
        let parts = self.parts.iter().map(|&p| p - shift).collect();
        (Partition { parts }, shift)
    }

    /// Adds `shift` to every part.
    pub fn translate(&self, shift: u32) -> Result<Partition> {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_add(shift).ok_or(Error::Overflow("partition translation")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated list with no padding (`m` = number of entries).
    fn from_str(s: &str) -> Result<Self> {
        let count = s.split(',').filter(|t| !t.trim().is_empty()).count();
        Partition::parse(s, count)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Validates `values` and zero-pads them to `m` parts.
pub fn make_partition(values: &[i64], m: usize) -> Result<Partition> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    if values.len() > m {
        return Err(Error::InvalidPartition {
            index: m,
            reason: format!("{} parts do not fit in m = {m}", values.len()),
        });
    }
    let mut parts = Vec::with_capacity(m);
    for (i, &v) in values.iter().enumerate() {
        if v < 0 {
            return Err(Error::InvalidPartition { index: i, reason: format!("negative part {v}") });
        }
        let v = u32::try_from(v).map_err(|_| Error::InvalidPartition {
            index: i,
            reason: format!("part {v} is too large"),
        })?;
        parts.push(v);
    }
    parts.resize(m, 0);
    Partition::new(parts)
}

fn check_same_m(a: &Partition, b: &Partition) -> Result<()> {
    if a.m() != b.m() {
        return Err(Error::LengthMismatch { expected: a.m(), found: b.m() });
    }
    Ok(())
}

/// Prefix-sum dominance `mu ⊵ lambda`. Weights are not compared; callers
/// that need the equal-weight order check that themselves.
pub fn dominates(mu: &Partition, lambda: &Partition) -> Result<bool> {
    check_same_m(mu, lambda)?;
    Ok(prefix_dominated(lambda.parts(), mu.parts()))
}

/// True when every prefix sum of `lower` is at most the matching prefix sum
/// of `upper`. Both slices must already be sorted decreasingly.
pub(crate) fn prefix_dominated(lower: &[u32], upper: &[u32]) -> bool {
    let (mut sl, mut su) = (0u64, 0u64);
    for (a, b) in lower.iter().zip(upper) {
        sl += *a as u64;
        su += *b as u64;
        if sl > su {
            return false;
        }
    }
    true
}

pub fn reduce_by_translation(lambda: &Partition) -> (Partition, u32) {
    lambda.reduce_by_translation()
}

/// The dominating sequence `λ = λ^(0), …, λ^(N)` of `G_{h,λ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominatingSequence {
    h: u32,
    seq: Vec<Partition>,
    /// Row increments `λ^(N) − λ`.
    a: Vec<u32>,
    /// Prefix sums of `a`; `b[m-1] = N`.
    b: Vec<usize>,
    /// Row (0-based) that received the box at each step.
    rows: Vec<usize>,
}

impl DominatingSequence {
    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn base(&self) -> &Partition {
        &self.seq[0]
    }

    /// `N`, the number of boxes added.
    pub fn n(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn top(&self) -> &Partition {
        self.seq.last().expect("sequence is never empty")
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.seq
    }

    /// `λ^(k)`.
    pub fn layer(&self, k: usize) -> Result<&Partition> {
        self.seq.get(k).ok_or(Error::LayerOutOfRange { k, n: self.n() })
    }

    pub fn increments(&self) -> &[u32] {
        &self.a
    }

    pub fn prefix_increments(&self) -> &[usize] {
        &self.b
    }

    /// The 0-based rows that received boxes, in order.
    pub fn rows_added(&self) -> &[usize] {
        &self.rows
    }

    /// Distinct partitions `λ^(b_1), …, λ^(b_m)` in order.
    pub fn corner_partitions(&self) -> Vec<&Partition> {
        let mut out: Vec<&Partition> = Vec::new();
        for &bk in &self.b {
            let p = &self.seq[bk];
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }
}

/// Greedily adds one box per step at the smallest row `r` (1-based) that has
/// received fewer than `h(r-1)` boxes and can take a box without breaking the
/// partition condition; stops when no row qualifies.
pub fn dominating_sequence(h: u32, lambda: &Partition) -> Result<DominatingSequence> {
    if h == 0 {
        return Err(Error::InvalidArgument("h must be at least 1".into()));
    }
    let m = lambda.m();
    let base = lambda.parts();
    let mut cur = base.to_vec();
    let mut seq = vec![lambda.clone()];
    let mut rows = Vec::new();
    loop {
        let legal = (0..m).find(|&i| {
            let added = (cur[i] - base[i]) as u64;
            let cap = h as u64 * i as u64;
            added < cap && (i == 0 || cur[i - 1] > cur[i])
        });
        let Some(i) = legal else { break };
        cur[i] = cur[i].checked_add(1).ok_or(Error::Overflow("dominating sequence"))?;
        rows.push(i);
        seq.push(Partition::from_sorted_unchecked(cur.clone()));
    }
    let a: Vec<u32> = cur.iter().zip(base).map(|(c, b)| c - b).collect();
    let b = a
        .iter()
        .scan(0usize, |acc, &x| {
            *acc += x as usize;
            Some(*acc)
        })
        .collect();
    Ok(DominatingSequence { h, seq, a, b, rows })
}

/// Membership in `A(h, λ)`: `λ ⊆ μ ⊆ λ^(N)`.
pub fn in_a(h: u32, lambda: &Partition, mu: &Partition) -> Result<bool> {
    check_same_m(lambda, mu)?;
    let seq = dominating_sequence(h, lambda)?;
    Ok(lambda.is_contained_in(mu) && mu.is_contained_in(seq.top()))
}

/// All partitions `μ` with `lower ⊆ μ ⊆ upper`, ordered by weight and then
/// reverse-lexicographically within a weight.
pub fn partitions_between(lower: &Partition, upper: &Partition) -> Result<Vec<Partition>> {
    check_same_m(lower, upper)?;
    if !lower.is_contained_in(upper) {
        return Err(Error::NotContained { inner: lower.to_string(), outer: upper.to_string() });
    }
    let m = lower.m();
    let mut out = Vec::new();
    let mut cur = vec![0u32; m];
    fn rec(i: usize, lo: &[u32], hi: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lo.len() {
            out.push(Partition::from_sorted_unchecked(cur.clone()));
            return;
        }
        let cap = if i == 0 { hi[0] } else { hi[i].min(cur[i - 1]) };
        for v in lo[i]..=cap {
            cur[i] = v;
            rec(i + 1, lo, hi, cur, out);
        }
    }
    rec(0, lower.parts(), upper.parts(), &mut cur, &mut out);
    out.sort_by(|x, y| x.weight().cmp(&y.weight()).then_with(|| y.cmp(x)));
    Ok(out)
}

/// All partitions of `n` into at most `m` parts (each padded to length `m`)
/// with largest part at most `max_part`, in reverse-lexicographic order.
pub fn partitions_of(n: u64, m: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(rem: u64, slots: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Partition::from_sorted_unchecked(cur.clone()));
            }
            return;
        }
        if rem > cap as u64 * slots as u64 {
            return;
        }
        let hi = (cap as u64).min(rem) as u32;
        for v in (0..=hi).rev() {
            cur.push(v);
            rec(rem - v as u64, slots - 1, v, cur, out);
            cur.pop();
        }
    }
    if m > 0 {
        rec(n, m, max_part, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn make_partition_pads_and_validates() {
        assert_eq!(make_partition(&[2, 1], 3).unwrap(), p(&[2, 1, 0]));
        assert_eq!(make_partition(&[3], 3).unwrap(), p(&[3, 0, 0]));
        match make_partition(&[1, 2], 2) {
            Err(Error::InvalidPartition { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {other:?}"),
        }
        match make_partition(&[2, -1], 3) {
            Err(Error::InvalidPartition { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(make_partition(&[1, 1, 1], 2).is_err());
        assert!(make_partition(&[], 0).is_err());
    }

    #[test]
    fn identity_includes_m() {
        assert_ne!(p(&[2, 1, 0]), p(&[2, 1]));
        assert_eq!(Partition::parse("2, 1", 3).unwrap().to_string(), "2,1,0");
        assert_eq!("2,1,0".parse::<Partition>().unwrap().m(), 3);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[2, 2, 0]), &p(&[2, 1, 1])).unwrap());
        assert!(!dominates(&p(&[2, 1, 1]), &p(&[2, 2, 0])).unwrap());
        assert!(dominates(&p(&[3, 1, 0]), &p(&[3, 1, 0])).unwrap());
        assert!(matches!(
            dominates(&p(&[2, 1]), &p(&[2, 1, 0])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn reduction() {
        assert_eq!(p(&[3, 2, 1]).reduce_by_translation(), (p(&[2, 1, 0]), 1));
        assert_eq!(p(&[2, 1, 0]).reduce_by_translation(), (p(&[2, 1, 0]), 0));
        assert_eq!(p(&[5, 5, 5]).reduce_by_translation(), (p(&[0, 0, 0]), 5));
    }

    #[test]
    fn dominating_sequence_examples() {
        let s = dominating_sequence(1, &p(&[2, 1, 0])).unwrap();
        assert_eq!(s.partitions(), &[p(&[2, 1, 0]), p(&[2, 2, 0]), p(&[2, 2, 1]), p(&[2, 2, 2])]);
        assert_eq!(s.n(), 3);
        assert_eq!(s.increments(), &[0, 1, 2]);
        assert_eq!(s.prefix_increments(), &[0, 1, 3]);

        let s = dominating_sequence(2, &p(&[3, 0])).unwrap();
        assert_eq!(s.partitions(), &[p(&[3, 0]), p(&[3, 1]), p(&[3, 2])]);

        let s = dominating_sequence(5, &p(&[4])).unwrap();
        assert_eq!(s.n(), 0);
        assert!(dominating_sequence(0, &p(&[1, 0])).is_err());
    }

    #[test]
    fn in_a_examples() {
        let l = p(&[2, 1, 0]);
        assert!(in_a(1, &l, &p(&[2, 2, 1])).unwrap());
        assert!(!in_a(1, &l, &p(&[3, 1, 0])).unwrap());
        assert!(in_a(3, &l, &l).unwrap());
    }

    #[test]
    fn layers_out_of_range() {
        let s = dominating_sequence(1, &p(&[2, 1, 0])).unwrap();
        assert_eq!(s.layer(1).unwrap(), &p(&[2, 2, 0]));
        assert!(matches!(s.layer(4), Err(Error::LayerOutOfRange { k: 4, n: 3 })));
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(4, 4, 4).len(), 5);
        assert_eq!(partitions_of(4, 2, 4).len(), 3);
        assert_eq!(partitions_of(4, 3, 2).len(), 2);
        let between = partitions_between(&p(&[2, 1, 0]), &p(&[2, 2, 2])).unwrap();
        let shown: Vec<String> = between.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["2,1,0", "2,2,0", "2,1,1", "2,2,1", "2,2,2"]);
    }
}
