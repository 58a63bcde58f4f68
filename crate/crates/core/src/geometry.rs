//! Lattice points, linear inequalities, coordinate-permutation orbits and
//! exact affine rank.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A lattice point with nonnegative coordinates.
pub type Point = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        })
    }
}

/// `⟨coeffs, x⟩ (sense) bound`, with a label recording where it came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FacetInequality {
    pub coeffs: Vec<i64>,
    pub bound: i64,
    pub sense: Sense,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub tag: String,
}

impl FacetInequality {
    /// `Σ_{i∈subset} x_i (sense) bound`.
    pub fn subset_sum(m: usize, subset: &[usize], sense: Sense, bound: i64, tag: impl Into<String>) -> Self {
        let mut coeffs = vec![0; m];
        for &i in subset {
            coeffs[i] = 1;
        }
        Self { coeffs, bound, sense, tag: tag.into() }
    }

    pub fn value(&self, p: &[u32]) -> i64 {
        self.coeffs.iter().zip(p).map(|(a, &x)| a * x as i64).sum()
    }

    /// Signed slack: nonnegative exactly when `p` satisfies the inequality.
    /// For an equation this is `-|⟨a,p⟩ - b|`.
    pub fn slack(&self, p: &[u32]) -> i64 {
        let v = self.value(p);
        match self.sense {
            Sense::Le => self.bound - v,
            Sense::Ge => v - self.bound,
            Sense::Eq => -(v - self.bound).abs(),
        }
    }

    pub fn is_satisfied(&self, p: &[u32]) -> bool {
        self.slack(p) >= 0
    }

    pub fn is_tight(&self, p: &[u32]) -> bool {
        self.value(p) == self.bound
    }

    /// Indices with coefficient 1, when this is a 0/1 functional.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }

    /// Key that ignores the tag.
    pub fn key(&self) -> (Vec<i64>, Sense, i64) {
        (self.coeffs.clone(), self.sense, self.bound)
    }
}

impl fmt::Display for FacetInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "x{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " {} {}", self.sense, self.bound)
    }
}

/// Every proper nonempty subset of `0..m`, by cardinality and then
/// lexicographically.
pub fn proper_subsets(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..m {
        out.extend(subsets_of_size(m, size));
    }
    out
}

/// All `size`-subsets of `0..m` in lexicographic order.
pub fn subsets_of_size(m: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, size, cur, out);
            cur.pop();
        }
    }
    rec(0, m, size, &mut cur, &mut out);
    out
}

/// Distinct coordinate permutations of `point`, in lexicographic order.
pub fn orbit(point: &[u32]) -> OrbitIter {
    let mut cur = point.to_vec();
    cur.sort_unstable();
    OrbitIter { cur: Some(cur) }
}

pub struct OrbitIter {
    cur: Option<Vec<u32>>,
}

impl Iterator for OrbitIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let cur = self.cur.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            self.cur = Some(next);
        }
        Some(cur)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Weakly decreasing rearrangement.
pub fn sorted_desc(p: &[u32]) -> Vec<u32> {
    let mut s = p.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Incremental exact row echelon form over the integers, used to measure the
/// affine rank of a point set.
#[derive(Clone, Debug, Default)]
pub struct AffineRank {
    origin: Option<Vec<i128>>,
    rows: Vec<(usize, Vec<i128>)>,
    dim: usize,
}

impl AffineRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a point; returns true when it raised the rank.
    pub fn push(&mut self, p: &[u32]) -> bool {
        let v: Vec<i128> = p.iter().map(|&x| x as i128).collect();
        let Some(origin) = &self.origin else {
            self.dim = v.len();
            self.origin = Some(v);
            return false;
        };
        let mut d: Vec<i128> = v.iter().zip(origin).map(|(a, b)| a - b).collect();
        for (pc, row) in &self.rows {
            let c = d[*pc];
            if c == 0 {
                continue;
            }
            let piv = row[*pc];
            for (x, r) in d.iter_mut().zip(row) {
                *x = *x * piv - c * r;
            }
            normalize(&mut d);
        }
        match d.iter().position(|&x| x != 0) {
            Some(pc) => {
                self.rows.push((pc, d));
                true
            }
            None => false,
        }
    }
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Affine rank of a finite point set (dimension of its affine hull); zero
/// for an empty or single-point set.
pub fn affine_rank<'a, I>(points: I) -> usize
where
    I: IntoIterator<Item = &'a Point>,
{
    let mut r = AffineRank::new();
    for p in points {
        r.push(p);
    }
    r.rank()
}

/// Facets of `conv(points)` among the given 0/1 subset functionals.
///
/// For each subset and sense the bound is the extreme value over `points`;
/// the inequality is kept when the points attaining it span an affine
/// subspace of dimension `dim - 1`.
pub fn subset_facets(points: &[Point], dim: usize, candidates: &[(Vec<usize>, Sense)], tag: &str) -> Vec<FacetInequality> {
    let Some(first) = points.first() else { return Vec::new() };
    let m = first.len();
    let mut out = Vec::new();
    for (subset, sense) in candidates {
        let f = FacetInequality::subset_sum(m, subset, *sense, 0, tag);
        let values: Vec<i64> = points.iter().map(|p| f.value(p)).collect();
        let bound = match sense {
            Sense::Le => *values.iter().max().unwrap(),
            Sense::Ge => *values.iter().min().unwrap(),
            Sense::Eq => continue,
        };
        let mut rank = AffineRank::new();
        for (p, _) in points.iter().zip(&values).filter(|(_, &v)| v == bound) {
            rank.push(p);
            if rank.rank() + 1 >= dim {
                break;
            }
        }
        if dim >= 1 && rank.rank() + 1 == dim {
            out.push(FacetInequality { bound, ..f });
        }
    }
    out
}

/// Rank of a set of integer vectors.
pub fn linear_rank(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<(usize, Vec<i128>)> = Vec::new();
    for v in vectors {
        let mut d: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (pc, row) in &rows {
            let c = d[*pc];
            if c == 0 {
                continue;
            }
            let piv = row[*pc];
            for (x, r) in d.iter_mut().zip(row) {
                *x = *x * piv - c * r;
            }
            normalize(&mut d);
        }
        if let Some(pc) = d.iter().position(|&x| x != 0) {
            rows.push((pc, d));
        }
    }
    rows.len()
}
