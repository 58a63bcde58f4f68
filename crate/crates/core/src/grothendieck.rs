//! `Newt(G_{h,λ})`, the Newton polytope of an inflated symmetric Grothendieck
//! polynomial.
//!
//! The polytope is stacked from permutohedra: its slice at coordinate sum
//! `|λ| + k` is `P_{λ^(k)}` for `k = 0..=N`, where `λ^(k)` runs through the
//! dominating sequence. Everything here is derived from that sequence.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::geometry::{orbit, sorted_desc, subsets_of_size, AffineRank, FacetInequality, Point, Sense};
use crate::partitions::{dominating_sequence, prefix_dominated, DominatingSequence, Partition};
use crate::permutohedron::{self, is_facet_cardinality, FacetDescription};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckPolytope {
    seq: DominatingSequence,
}

impl GrothendieckPolytope {
    pub fn new(h: u32, lambda: &Partition) -> Result<Self> {
        Ok(Self { seq: dominating_sequence(h, lambda)? })
    }

    pub fn h(&self) -> u32 {
        self.seq.h()
    }

    pub fn lambda(&self) -> &Partition {
        self.seq.base()
    }

    pub fn m(&self) -> usize {
        self.lambda().m()
    }

    /// `N`, the index of the last layer.
    pub fn n(&self) -> usize {
        self.seq.n()
    }

    pub fn sequence(&self) -> &DominatingSequence {
        &self.seq
    }

    /// `λ^(k)`, whose permutohedron is the layer at sum `|λ| + k`.
    pub fn layer(&self, k: usize) -> Result<&Partition> {
        self.seq.layer(k)
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        if p.len() != self.m() {
            return false;
        }
        let total: u64 = p.iter().map(|&x| x as u64).sum();
        let base = self.lambda().weight();
        if total < base {
            return false;
        }
        match self.seq.layer((total - base) as usize) {
            Ok(layer) => prefix_dominated(&sorted_desc(p), layer.parts()),
            Err(_) => false,
        }
    }

    /// Union of the orbits of `λ^(b_1), …, λ^(b_m)`, sorted.
    pub fn vertex_candidates(&self) -> Vec<Point> {
        let mut pts: Vec<Point> = self.seq.corner_partitions().into_iter().flat_map(|p| orbit(p.parts())).collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// Orbits of every layer partition; their convex hull is the polytope.
    pub fn generating_points(&self) -> Vec<Point> {
        let mut pts: Vec<Point> = self.seq.partitions().iter().flat_map(|p| orbit(p.parts())).collect();
        pts.sort_unstable();
        pts
    }

    pub fn lattice_points(&self) -> Result<Vec<Point>> {
        crate::check_enumeration_cap(&self.count_lattice_points())?;
        let mut out = Vec::new();
        for layer in self.seq.partitions() {
            out.extend(permutohedron::lattice_points(layer)?);
        }
        Ok(out)
    }

    /// Lattice points of layer `k` only.
    pub fn layer_points(&self, k: usize) -> Result<Vec<Point>> {
        permutohedron::lattice_points(self.layer(k)?)
    }

    pub fn count_lattice_points(&self) -> BigUint {
        self.seq.partitions().iter().map(permutohedron::count_lattice_points).sum()
    }

    /// The `t`-th dilate, which is `Newt(G_{th, tλ})`.
    pub fn dilate(&self, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("dilation factor must be at least 1".into()));
        }
        let h = self.h().checked_mul(t).ok_or(Error::Overflow("dilated h"))?;
        Self::new(h, &self.lambda().dilate(t)?)
    }

    /// Affine dimension, measured on the vertex candidates.
    pub fn dimension(&self) -> usize {
        let mut rank = AffineRank::new();
        for v in self.vertex_candidates() {
            rank.push(&v);
            if rank.rank() == self.m() {
                break;
            }
        }
        rank.rank()
    }

    /// Facet inequalities read off the dominating sequence. Requires `λ`
    /// reduced by translation and not identically zero.
    pub fn facets(&self) -> Result<FacetDescription> {
        let lambda = self.lambda();
        if !lambda.is_reduced() {
            return Err(Error::NotReduced(lambda.to_string()));
        }
        if lambda.is_trivial_orbit() {
            return Err(Error::Degenerate(format!("G_{{{}, ({lambda})}} has a single point", self.h())));
        }
        let m = self.m();
        let all: Vec<usize> = (0..m).collect();
        let weight = lambda.weight() as i64;
        let mut out = vec![FacetInequality::subset_sum(m, &all, Sense::Ge, weight, "a")];
        if !self.seq.top().is_trivial_orbit() {
            out.push(FacetInequality::subset_sum(m, &all, Sense::Le, weight + self.n() as i64, "b"));
        }
        let j_bound = weight - lambda.first() as i64;
        for (k, &bk) in (1..=m).zip(self.seq.prefix_increments()) {
            let mu = self.seq.layer(bk)?;
            if mu.is_trivial_orbit() {
                continue;
            }
            for s in 1..m {
                if !is_facet_cardinality(mu, s) {
                    continue;
                }
                let top = mu.prefix_sum(s) as i64;
                let bottom = mu.weight() as i64 - top;
                for subset in subsets_of_size(m, s) {
                    if s <= k {
                        out.push(FacetInequality::subset_sum(m, &subset, Sense::Le, top, format!("c k={k}")));
                    }
                    if s >= k {
                        let rest: Vec<usize> = (0..m).filter(|i| !subset.contains(i)).collect();
                        if rest.len() == m - 1 && bottom == j_bound {
                            continue;
                        }
                        out.push(FacetInequality::subset_sum(m, &rest, Sense::Ge, bottom, format!("d k={k}")));
                    }
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|f| seen.insert(f.key()));
        Ok(FacetDescription { facets: out, span: Vec::new() })
    }
}

/// `λ^(k)` for `G_{h,λ}`.
pub fn layer(h: u32, lambda: &Partition, k: usize) -> Result<Partition> {
    Ok(dominating_sequence(h, lambda)?.layer(k)?.clone())
}

pub fn contains(h: u32, lambda: &Partition, p: &[u32]) -> Result<bool> {
    Ok(GrothendieckPolytope::new(h, lambda)?.contains(p))
}

/// `(th, tλ)`.
pub fn dilate(h: u32, lambda: &Partition, t: u32) -> Result<(u32, Partition)> {
    let g = GrothendieckPolytope::new(h, lambda)?.dilate(t)?;
    Ok((g.h(), g.lambda().clone()))
}
