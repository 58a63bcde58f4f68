//! A tagged handle for the two polytope families, from which everything else
//! is derived on demand.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{linear_rank, orbit, proper_subsets, subset_facets, FacetInequality, Point, Sense};
use crate::grothendieck::GrothendieckPolytope;
use crate::partitions::Partition;
use crate::permutohedron::{self, FacetDescription};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PolytopeHandle {
    /// `P_λ = Newt(s_λ)`.
    Schur { lambda: Partition },
    /// `Newt(G_{h,λ})`.
    Grothendieck { h: u32, lambda: Partition },
}

impl PolytopeHandle {
    pub fn schur(lambda: Partition) -> Self {
        PolytopeHandle::Schur { lambda }
    }

    pub fn grothendieck(h: u32, lambda: Partition) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidArgument("h must be at least 1".into()));
        }
        Ok(PolytopeHandle::Grothendieck { h, lambda })
    }

    pub fn lambda(&self) -> &Partition {
        match self {
            PolytopeHandle::Schur { lambda } | PolytopeHandle::Grothendieck { lambda, .. } => lambda,
        }
    }

    pub fn m(&self) -> usize {
        self.lambda().m()
    }

    pub fn h(&self) -> Option<u32> {
        match self {
            PolytopeHandle::Schur { .. } => None,
            PolytopeHandle::Grothendieck { h, .. } => Some(*h),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            PolytopeHandle::Schur { .. } => "schur",
            PolytopeHandle::Grothendieck { .. } => "grothendieck",
        }
    }

    fn groth(&self) -> Option<GrothendieckPolytope> {
        match self {
            PolytopeHandle::Schur { .. } => None,
            PolytopeHandle::Grothendieck { h, lambda } => {
                Some(GrothendieckPolytope::new(*h, lambda).expect("h >= 1 is checked at construction"))
            }
        }
    }

    /// True when the polytope is a single point.
    pub fn is_degenerate(&self) -> bool {
        self.lambda().is_trivial_orbit()
    }

    /// The `t`-th dilate as another handle (`t = 0` is the origin).
    pub fn dilate(&self, t: u32) -> Result<Self> {
        match self {
            PolytopeHandle::Schur { lambda } => Ok(PolytopeHandle::Schur { lambda: lambda.dilate(t)? }),
            PolytopeHandle::Grothendieck { h, lambda } => {
                if t == 0 {
                    return Ok(PolytopeHandle::Schur { lambda: Partition::zero(self.m()) });
                }
                let h = h.checked_mul(t).ok_or(Error::Overflow("dilated h"))?;
                Ok(PolytopeHandle::Grothendieck { h, lambda: lambda.dilate(t)? })
            }
        }
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        match self {
            PolytopeHandle::Schur { lambda } => permutohedron::contains(lambda, p),
            PolytopeHandle::Grothendieck { .. } => self.groth().unwrap().contains(p),
        }
    }

    pub fn count_lattice_points(&self) -> BigUint {
        match self {
            PolytopeHandle::Schur { lambda } => permutohedron::count_lattice_points(lambda),
            PolytopeHandle::Grothendieck { .. } => self.groth().unwrap().count_lattice_points(),
        }
    }

    /// All lattice points. Schur points come sorted; Grothendieck points come
    /// layer by layer, each layer sorted.
    pub fn lattice_points(&self) -> Result<Vec<Point>> {
        match self {
            PolytopeHandle::Schur { lambda } => permutohedron::lattice_points(lambda),
            PolytopeHandle::Grothendieck { .. } => self.groth().unwrap().lattice_points(),
        }
    }

    /// Points whose convex hull is the polytope.
    pub fn generating_points(&self) -> Vec<Point> {
        match self {
            PolytopeHandle::Schur { lambda } => orbit(lambda.parts()).collect(),
            PolytopeHandle::Grothendieck { .. } => self.groth().unwrap().generating_points(),
        }
    }

    /// Affine dimension: `m - 1` for a nontrivial permutohedron, `m` for a
    /// nondegenerate Grothendieck polytope, `0` for a point. Measured, not
    /// assumed.
    pub fn dimension(&self) -> usize {
        match self {
            PolytopeHandle::Schur { lambda } => permutohedron::dimension(lambda),
            PolytopeHandle::Grothendieck { .. } => self.groth().unwrap().dimension(),
        }
    }

    /// Facets as given by the closed-form descriptions of each family.
    pub fn facets(&self) -> Result<FacetDescription> {
        match self {
            PolytopeHandle::Schur { lambda } => permutohedron::facets(lambda),
            PolytopeHandle::Grothendieck { .. } => self.groth().unwrap().facets(),
        }
    }

    /// Facets found directly from the generating points: every 0/1 subset
    /// functional whose extreme value is attained on a codimension-one set.
    /// Works for unreduced λ too.
    pub fn geometric_facets(&self) -> Result<FacetDescription> {
        if self.is_degenerate() {
            return Err(Error::Degenerate(format!("{self} is a single point")));
        }
        let m = self.m();
        let points = self.generating_points();
        let dim = self.dimension();
        let all: Vec<usize> = (0..m).collect();
        match self {
            PolytopeHandle::Schur { lambda } => {
                let candidates: Vec<(Vec<usize>, Sense)> = proper_subsets(m).into_iter().map(|s| (s, Sense::Le)).collect();
                let facets = subset_facets(&points, dim, &candidates, "geometric");
                let span = vec![FacetInequality::subset_sum(m, &all, Sense::Eq, lambda.weight() as i64, "span")];
                Ok(FacetDescription { facets, span })
            }
            PolytopeHandle::Grothendieck { .. } => {
                let mut candidates = Vec::new();
                for s in proper_subsets(m).into_iter().chain(std::iter::once(all)) {
                    candidates.push((s.clone(), Sense::Le));
                    candidates.push((s, Sense::Ge));
                }
                let facets = subset_facets(&points, dim, &candidates, "geometric");
                Ok(FacetDescription { facets, span: Vec::new() })
            }
        }
    }

    /// Vertices, each certified extreme: the normals of the inequalities
    /// tight at a vertex (facets and span equations) have full rank `m`.
    pub fn vertices(&self) -> Result<Vec<Point>> {
        let candidates = match self {
            PolytopeHandle::Schur { lambda } => permutohedron::vertices(lambda),
            PolytopeHandle::Grothendieck { .. } => self.groth().unwrap().vertex_candidates(),
        };
        if self.is_degenerate() {
            return Ok(candidates);
        }
        let desc = self.geometric_facets()?;
        for v in &candidates {
            if !is_extreme(&desc, v) {
                return Err(Error::Consistency(format!("{v:?} is not an extreme point of {self}")));
            }
        }
        Ok(candidates)
    }
}

/// Whether `p` (assumed to lie in the polytope) is a vertex of the polytope
/// described by `desc`.
pub fn is_extreme(desc: &FacetDescription, p: &[u32]) -> bool {
    let normals: Vec<Vec<i64>> = desc
        .span
        .iter()
        .chain(desc.facets.iter().filter(|f| f.is_tight(p)))
        .map(|f| f.coeffs.clone())
        .collect();
    linear_rank(&normals) == p.len()
}

/// Checks that a 0/1 functional takes consecutive integer values on the
/// lattice of the affine span: some integer direction `v` with
/// `⟨span_i, v⟩ = 0` for all span equations has `⟨f, v⟩ = 1`.
pub fn is_primitive_on_span(f: &FacetInequality, span: &[FacetInequality]) -> bool {
    let m = f.coeffs.len();
    let dot = |a: &[i64], v: &[i64]| -> i64 { a.iter().zip(v).map(|(x, y)| x * y).sum() };
    let mut directions: Vec<Vec<i64>> = Vec::new();
    for i in 0..m {
        let mut e = vec![0; m];
        e[i] = 1;
        directions.push(e);
        for j in 0..m {
            if i != j {
                let mut d = vec![0; m];
                d[i] = 1;
                d[j] = -1;
                directions.push(d);
            }
        }
    }
    directions.iter().any(|v| span.iter().all(|s| dot(&s.coeffs, v) == 0) && dot(&f.coeffs, v).abs() == 1)
}

impl fmt::Display for PolytopeHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeHandle::Schur { lambda } => write!(f, "P_({lambda})"),
            PolytopeHandle::Grothendieck { h, lambda } => write!(f, "Newt(G_{{{h},({lambda})}})"),
        }
    }
}
