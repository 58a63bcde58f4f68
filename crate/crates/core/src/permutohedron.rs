//! The λ-permutohedron `P_λ^m`, the convex hull of all coordinate
//! permutations of λ. It is the Newton polytope of the Schur polynomial
//! `s_λ(x_1, …, x_m)`.
//!
//! Membership is Rado's criterion: `p` lies in `P_λ` iff `p ≥ 0`,
//! `Σ p_i = |λ|`, and the decreasing rearrangement of `p` is dominated by λ.
//! Lattice points are therefore the orbits of the partitions dominated by λ,
//! and counting them never needs to materialize a point.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::combinat::{binomial, binomial_u128, orbit_size};
use crate::error::{Error, Result};
use crate::geometry::{orbit, proper_subsets, sorted_desc, FacetInequality, Point, Sense};
use crate::partitions::{prefix_dominated, Partition};

/// Facets of a polytope plus the equations cutting out its affine span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetDescription {
    pub facets: Vec<FacetInequality>,
    pub span: Vec<FacetInequality>,
}

impl FacetDescription {
    pub fn contains(&self, p: &[u32]) -> bool {
        self.span.iter().all(|e| e.is_tight(p)) && self.facets.iter().all(|f| f.is_satisfied(p))
    }
}

/// The vertices: the distinct coordinate permutations of λ.
pub fn vertices(lambda: &Partition) -> Vec<Point> {
    orbit(lambda.parts()).collect()
}

pub fn contains(lambda: &Partition, p: &[u32]) -> bool {
    if p.len() != lambda.m() {
        return false;
    }
    let total: u64 = p.iter().map(|&x| x as u64).sum();
    total == lambda.weight() && prefix_dominated(&sorted_desc(p), lambda.parts())
}

/// Partitions `μ ⊢ |λ|` with `m` parts (zero padded) and `μ ⊴ λ`, in
/// reverse-lexicographic order.
pub fn dominated_partitions(lambda: &Partition) -> Vec<Partition> {
    let m = lambda.m();
    let lam = lambda.parts();
    let prefix: Vec<u64> = lam
        .iter()
        .scan(0u64, |s, &x| {
            *s += x as u64;
            Some(*s)
        })
        .collect();
    let n = lambda.weight();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(
        i: usize,
        sum: u64,
        cap: u32,
        n: u64,
        prefix: &[u64],
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        let m = prefix.len();
        if i == m {
            if sum == n {
                out.push(Partition::from_sorted_unchecked(cur.clone()));
            }
            return;
        }
        let rem = n - sum;
        if rem > cap as u64 * (m - i) as u64 {
            return;
        }
        let hi = (cap as u64).min(rem).min(prefix[i] - sum) as u32;
        for v in (0..=hi).rev() {
            cur.push(v);
            rec(i + 1, sum + v as u64, v, n, prefix, cur, out);
            cur.pop();
        }
    }
    rec(0, 0, lam[0], n, &prefix, &mut cur, &mut out);
    out
}

/// All lattice points of `P_λ`, sorted lexicographically.
pub fn lattice_points(lambda: &Partition) -> Result<Vec<Point>> {
    crate::check_enumeration_cap(&count_lattice_points(lambda))?;
    let mut pts: Vec<Point> = dominated_partitions(lambda).iter().flat_map(|mu| orbit(mu.parts())).collect();
    pts.sort_unstable();
    Ok(pts)
}

/// Number of lattice points of `P_λ`.
///
/// This is the sum over `μ ⊴ λ` of the number of distinct rearrangements of
/// μ, evaluated by a dynamic program that chooses the multiplicity of each
/// value from `λ_1` down to 0 while tracking how many coordinates are placed
/// and their running sum; the dominance test only needs the prefix sums at
/// each position, which are linear inside a block of equal values.
pub fn count_lattice_points(lambda: &Partition) -> BigUint {
    match count_dp_u128(lambda) {
        Some(c) => BigUint::from(c),
        None => count_dp_big(lambda),
    }
}

/// The same count by explicit enumeration of dominated partitions.
pub fn count_lattice_points_by_partitions(lambda: &Partition) -> BigUint {
    dominated_partitions(lambda).iter().map(|mu| orbit_size(mu.parts())).sum()
}

fn prefix_sums(lambda: &Partition) -> Vec<u64> {
    std::iter::once(0)
        .chain(lambda.parts().iter().scan(0u64, |s, &x| {
            *s += x as u64;
            Some(*s)
        }))
        .collect()
}

trait Acc: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn binom(n: usize, k: usize) -> Option<Self>;
    fn mul_add(acc: &Self, a: &Self, b: &Self) -> Option<Self>;
}

impl Acc for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn binom(n: usize, k: usize) -> Option<Self> {
        binomial_u128(n as u64, k as u64)
    }
    fn mul_add(acc: &Self, a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_add(*acc)
    }
}

impl Acc for BigUint {
    fn zero() -> Self {
        <BigUint as Zero>::zero()
    }
    fn one() -> Self {
        BigUint::from(1u8)
    }
    fn binom(n: usize, k: usize) -> Option<Self> {
        Some(binomial(n as u64, k as u64))
    }
    fn mul_add(acc: &Self, a: &Self, b: &Self) -> Option<Self> {
        Some(acc + a * b)
    }
}

#[allow(clippy::needless_range_loop)]
fn count_dp<T: Acc>(lambda: &Partition) -> Option<T> {
    let m = lambda.m();
    let n = lambda.weight() as usize;
    let pre = prefix_sums(lambda);
    // table[j][s]: placements of j coordinates, all larger than the current
    // value, with sum s.
    let mut table: Vec<Vec<T>> = vec![vec![T::zero(); n + 1]; m + 1];
    table[0][0] = T::one();
    for v in (1..=lambda.first() as usize).rev() {
        let mut next = table.clone();
        for j in 0..m {
            for s in 0..=n {
                if table[j][s] == T::zero() {
                    continue;
                }
                for c in 1..=m - j {
                    let (jj, ss) = (j + c, s + v * c);
                    // convexity: once a prefix bound fails, larger c fail too
                    if ss as u64 > pre[jj] {
                        break;
                    }
                    next[jj][ss] = T::mul_add(&next[jj][ss], &table[j][s], &T::binom(m - j, c)?)?;
                }
            }
        }
        table = next;
    }
    // zeros fill the remaining coordinates in exactly one way
    let mut total = T::zero();
    for row in &table {
        total = T::mul_add(&total, &row[n], &T::one())?;
    }
    Some(total)
}

fn count_dp_u128(lambda: &Partition) -> Option<u128> {
    count_dp::<u128>(lambda)
}

fn count_dp_big(lambda: &Partition) -> BigUint {
    count_dp::<BigUint>(lambda).expect("big-integer arithmetic cannot overflow")
}

/// Whether `Σ_{i∈I} x_i ≤ λ_1 + … + λ_s` (any `|I| = s`) defines a facet.
///
/// The tight vertices are the products of the permutations of the first `s`
/// parts with those of the last `m - s` parts, whose dimension is the sum of
/// the two block dimensions; it is a facet when that reaches `m - 2`. A block
/// of size 1 is a point and never falls short.
pub fn is_facet_cardinality(lambda: &Partition, s: usize) -> bool {
    let m = lambda.m();
    if s == 0 || s >= m || lambda.is_trivial_orbit() {
        return false;
    }
    let parts = lambda.parts();
    let head_ok = s == 1 || parts[0] != parts[s - 1];
    let tail_ok = m - s == 1 || parts[s] != parts[m - 1];
    head_ok && tail_ok
}

/// Facets of `P_λ`, one inequality per qualifying subset (by cardinality,
/// then lexicographically), together with the span equation `Σ x_i = |λ|`.
pub fn facets(lambda: &Partition) -> Result<FacetDescription> {
    if lambda.is_trivial_orbit() {
        return Err(Error::Degenerate(format!("the orbit of ({lambda}) is a single point")));
    }
    let m = lambda.m();
    let mut facets = Vec::new();
    for subset in proper_subsets(m) {
        let s = subset.len();
        if !is_facet_cardinality(lambda, s) {
            continue;
        }
        let tag = match s {
            1 => "x_i <= lambda_1".to_string(),
            s if s == m - 1 => "|I| = m-1".to_string(),
            s => format!("|I| = {s}"),
        };
        facets.push(FacetInequality::subset_sum(m, &subset, Sense::Le, lambda.prefix_sum(s) as i64, tag));
    }
    let all: Vec<usize> = (0..m).collect();
    let span = vec![FacetInequality::subset_sum(m, &all, Sense::Eq, lambda.weight() as i64, "span")];
    Ok(FacetDescription { facets, span })
}

pub fn dilate(lambda: &Partition, t: u32) -> Result<Partition> {
    lambda.dilate(t)
}

/// Affine dimension of `P_λ`, measured on its vertices.
pub fn dimension(lambda: &Partition) -> usize {
    let m = lambda.m();
    let mut rank = crate::geometry::AffineRank::new();
    for v in orbit(lambda.parts()) {
        rank.push(&v);
        if rank.rank() + 1 >= m {
            break;
        }
    }
    rank.rank()
}

/// Convenience for callers that want a machine-size count.
pub fn count_lattice_points_u64(lambda: &Partition) -> Option<u64> {
    count_lattice_points(lambda).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binomial;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Box scan: every vector in `[0, λ_1]^m` with the right sum that passes
    /// all `2^m - 2` Rado inequalities.
    fn rado_scan(lambda: &Partition) -> Vec<Point> {
        let m = lambda.m();
        let top = lambda.first();
        let mut out = Vec::new();
        let mut cur = vec![0u32; m];
        loop {
            let sum: u64 = cur.iter().map(|&x| x as u64).sum();
            if sum == lambda.weight() {
                let ok = proper_subsets(m).iter().all(|sub| {
                    let v: u64 = sub.iter().map(|&i| cur[i] as u64).sum();
                    v <= lambda.prefix_sum(sub.len())
                });
                if ok {
                    out.push(cur.clone());
                }
            }
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < top {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    #[test]
    fn vertices_examples() {
        assert_eq!(vertices(&p(&[2, 1, 0])).len(), 6);
        assert_eq!(vertices(&p(&[3, 0, 0])), vec![vec![0, 0, 3], vec![0, 3, 0], vec![3, 0, 0]]);
        assert_eq!(vertices(&p(&[1, 1, 1])).len(), 1);
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&p(&[2, 1, 0]), &[1, 1, 1]));
        assert!(contains(&p(&[3, 0, 0]), &[2, 0, 1]));
        assert!(!contains(&p(&[2, 1, 0]), &[3, 0, 0]));
        assert!(!contains(&p(&[2, 1, 0]), &[1, 1]));
    }

    #[test]
    fn lattice_point_examples() {
        assert_eq!(lattice_points(&p(&[2, 1, 0])).unwrap().len(), 7);
        assert_eq!(lattice_points(&p(&[3, 0, 0])).unwrap().len(), 10);
        // box scan of [0,1]^3 with coordinate sum 2
        assert_eq!(lattice_points(&p(&[1, 1, 0])).unwrap(), rado_scan(&p(&[1, 1, 0])));
        assert_eq!(lattice_points(&p(&[1, 1, 0])).unwrap().len(), 3);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_lattice_points(&p(&[2, 1, 0])), BigUint::from(7u32));
        assert_eq!(count_lattice_points(&p(&[0, 0, 0, 0])), BigUint::from(1u32));
        for n in 0..8u32 {
            for m in 1..6usize {
                let mut v = vec![0; m];
                v[0] = n;
                let lam = p(&v);
                assert_eq!(count_lattice_points(&lam), binomial(n as u64 + m as u64 - 1, m as u64 - 1));
            }
        }
    }

    #[test]
    fn membership_matches_rado_scan() {
        for n in 0..=6u64 {
            for m in 1..=4usize {
                for lam in crate::partitions::partitions_of(n, m, n as u32) {
                    assert_eq!(lattice_points(&lam).unwrap(), rado_scan(&lam), "lambda = {lam}");
                }
            }
        }
    }

    #[test]
    fn dp_count_matches_enumeration() {
        for n in 0..=8u64 {
            for m in 1..=5usize {
                for lam in crate::partitions::partitions_of(n, m, n as u32) {
                    let pts = lattice_points(&lam).unwrap();
                    assert_eq!(count_lattice_points(&lam), BigUint::from(pts.len()), "lambda = {lam}");
                    assert_eq!(count_lattice_points_by_partitions(&lam), BigUint::from(pts.len()));
                }
            }
        }
    }

    #[test]
    fn big_count_path_agrees() {
        let lam = p(&[7, 5, 3, 1, 0]);
        assert_eq!(BigUint::from(count_dp_u128(&lam).unwrap()), count_dp_big(&lam));
    }

    #[test]
    fn facet_examples() {
        for m in 2..=6usize {
            let mut v = vec![m as u32; m];
            v[m - 1] = 0;
            let f = facets(&p(&v)).unwrap();
            assert_eq!(f.facets.len(), m);
            assert!(f.facets.iter().all(|x| x.support().len() == 1 && x.bound == m as i64));

            let mut v = vec![0; m];
            v[0] = m as u32;
            let f = facets(&p(&v)).unwrap();
            assert_eq!(f.facets.len(), m);
            assert!(f.facets.iter().all(|x| x.support().len() == m - 1 && x.bound == m as i64));
        }
        for m in 3..=6usize {
            let mut v = vec![1; m];
            v[0] = 2;
            v[m - 1] = 0;
            let f = facets(&p(&v)).unwrap();
            assert_eq!(f.facets.len(), (1 << m) - 2);
            assert!(f.facets.iter().all(|x| x.bound == x.support().len() as i64 + 1));
        }
        assert!(matches!(facets(&p(&[2, 2, 2])), Err(Error::Degenerate(_))));
        let f = facets(&p(&[3, 0])).unwrap();
        assert_eq!(f.facets.len(), 2);
        assert_eq!(f.span[0].sense, Sense::Eq);
    }

    #[test]
    fn dilation() {
        assert_eq!(dilate(&p(&[2, 1, 0]), 3).unwrap(), p(&[6, 3, 0]));
        assert_eq!(dilate(&p(&[2, 1, 0]), 1).unwrap(), p(&[2, 1, 0]));
        assert_eq!(dilate(&p(&[1, 0]), 5).unwrap(), p(&[5, 0]));
    }
}
