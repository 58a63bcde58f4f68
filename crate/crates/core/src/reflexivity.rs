//! Reflexive and Gorenstein polytopes: a direct geometric test and the
//! closed-form classifications for both families.
//!
//! A polytope is reflexive (relative to its affine span) when it has exactly
//! one relative-interior lattice point and every facet lies at lattice
//! distance 1 from it. All facet functionals here are 0/1 subset sums, which
//! are primitive on the lattice of the span, so the distance is just the slack.

use serde::Serialize;

use crate::ehrhart::{checked_dimension, gorenstein_index, hstar};
use crate::error::{Error, Result};
use crate::geometry::{FacetInequality, Point};
use crate::partitions::Partition;
use crate::permutohedron::FacetDescription;
use crate::polytope::{is_primitive_on_span, PolytopeHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Reflexive,
    #[serde(rename = "not-reflexive")]
    NotReflexive,
    /// The polytope is a single point.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetDistance {
    pub facet: String,
    pub distance: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityReport {
    pub handle: PolytopeHandle,
    pub verdict: Verdict,
    pub interior_count: usize,
    pub interior_point: Option<Point>,
    pub distances: Vec<FacetDistance>,
}

impl ReflexivityReport {
    pub fn is_reflexive(&self) -> bool {
        self.verdict == Verdict::Reflexive
    }
}

fn checked_facets(handle: &PolytopeHandle) -> Result<FacetDescription> {
    let desc = handle.geometric_facets()?;
    for f in &desc.facets {
        if !is_primitive_on_span(f, &desc.span) {
            return Err(Error::Consistency(format!("facet {f} is not primitive on the span of {handle}")));
        }
    }
    Ok(desc)
}

/// Lattice points strictly inside every facet.
pub fn interior_lattice_points(handle: &PolytopeHandle) -> Result<Vec<Point>> {
    let desc = checked_facets(handle)?;
    Ok(handle.lattice_points()?.into_iter().filter(|p| desc.facets.iter().all(|f| f.slack(p) > 0)).collect())
}

pub fn is_reflexive_geometric(handle: &PolytopeHandle) -> Result<ReflexivityReport> {
    let mut report = ReflexivityReport {
        handle: handle.clone(),
        verdict: Verdict::Degenerate,
        interior_count: 0,
        interior_point: None,
        distances: Vec::new(),
    };
    if handle.is_degenerate() {
        return Ok(report);
    }
    let desc = checked_facets(handle)?;
    let interior: Vec<Point> =
        handle.lattice_points()?.into_iter().filter(|p| desc.facets.iter().all(|f| f.slack(p) > 0)).collect();
    report.interior_count = interior.len();
    report.verdict = Verdict::NotReflexive;
    if let [u] = interior.as_slice() {
        report.distances =
            desc.facets.iter().map(|f| FacetDistance { facet: f.to_string(), distance: f.slack(u) }).collect();
        if report.distances.iter().all(|d| d.distance == 1) {
            report.verdict = Verdict::Reflexive;
            if let PolytopeHandle::Schur { lambda } = handle {
                let m = lambda.m() as u64;
                if lambda.weight() % m != 0 {
                    return Err(Error::Consistency(format!("{handle} is reflexive but m does not divide |λ|")));
                }
            }
        }
        report.interior_point = Some(u.clone());
    }
    Ok(report)
}

/// Smallest `c` with `cP` reflexive, found geometrically.
///
/// The facet set is invariant under permuting coordinates, so a unique
/// interior point of `cP` is a constant vector; it is pinned down by the
/// coordinate sum and then tested against every facet of `cP`.
pub fn gorenstein_index_geometric(handle: &PolytopeHandle) -> Result<Option<usize>> {
    if handle.is_degenerate() {
        return Err(Error::Degenerate(format!("{handle} is a single point")));
    }
    let d = checked_dimension(handle)?;
    let desc = checked_facets(handle)?;
    let m = handle.m() as i64;
    let weight = handle.lambda().weight() as i64;
    for c in 1..=(d as i64 + 1) {
        // coordinate sum of the candidate point
        let total = match handle {
            PolytopeHandle::Schur { .. } => c * weight,
            PolytopeHandle::Grothendieck { .. } => c * weight + 1,
        };
        if total % m != 0 {
            continue;
        }
        let u = total / m;
        let point = vec![u as u32; m as usize];
        let ok = desc.facets.iter().all(|f| {
            let scaled = FacetInequality { bound: f.bound * c, ..f.clone() };
            scaled.slack(&point) == 1
        });
        if ok {
            return Ok(Some(c as usize));
        }
    }
    Ok(None)
}

fn check_m(lambda: &Partition) -> Result<()> {
    if lambda.m() < 2 {
        return Err(Error::InvalidArgument("classification needs m >= 2".into()));
    }
    Ok(())
}

fn is_form(parts: &[u32], blocks: &[(u32, usize)]) -> bool {
    let mut expected = Vec::with_capacity(parts.len());
    for &(v, n) in blocks {
        expected.extend(std::iter::repeat_n(v, n));
    }
    expected == parts
}

/// The reflexive form matched by `λ` after reduction, if any.
pub fn schur_reflexive_form(lambda: &Partition) -> Result<Option<&'static str>> {
    check_m(lambda)?;
    let (red, _) = lambda.reduce_by_translation();
    if red.is_trivial_orbit() {
        return Err(Error::Degenerate(format!("({lambda}) reduces to the zero partition")));
    }
    let m = red.m();
    let p = red.parts();
    let mu = m as u32;
    let form = if is_form(p, &[(mu, 1), (0, m - 1)]) {
        Some("(m,0,...,0)")
    } else if is_form(p, &[(2, 1), (1, m - 2), (0, 1)]) {
        Some("(2,1,...,1,0)")
    } else if m % 2 == 0 && is_form(p, &[(2, m / 2), (0, m / 2)]) {
        Some("(2,...,2,0,...,0)")
    } else if m % 2 == 1 && is_form(p, &[(2, m / 2), (1, 1), (0, m / 2)]) {
        Some("(2,...,2,1,0,...,0)")
    } else if is_form(p, &[(mu, m - 1), (0, 1)]) {
        Some("(m,...,m,0)")
    } else {
        None
    };
    Ok(form)
}

pub fn schur_reflexive_classifier(lambda: &Partition) -> Result<bool> {
    Ok(schur_reflexive_form(lambda)?.is_some())
}

/// The Gorenstein form matched by `λ` after reduction, if any.
pub fn schur_gorenstein_form(lambda: &Partition) -> Result<Option<&'static str>> {
    if let Some(f) = schur_reflexive_form(lambda)? {
        return Ok(Some(f));
    }
    let (red, _) = lambda.reduce_by_translation();
    let m = red.m();
    let p = red.parts();
    let k = p[0];
    let divides = (m as u32).is_multiple_of(k);
    let form = if divides && is_form(p, &[(k, 1), (0, m - 1)]) {
        Some("(k,0,...,0), k | m")
    } else if m % 2 == 0 && is_form(p, &[(1, m / 2), (0, m / 2)]) {
        Some("(1,...,1,0,...,0), half ones")
    } else if divides && is_form(p, &[(k, m - 1), (0, 1)]) {
        Some("(k,...,k,0), k | m")
    } else {
        None
    };
    Ok(form)
}

pub fn schur_gorenstein_classifier(lambda: &Partition) -> Result<bool> {
    Ok(schur_gorenstein_form(lambda)?.is_some())
}

/// The reflexive form matched by `(h, λ)`, if any. `λ` must be reduced.
pub fn grothendieck_reflexive_form(h: u32, lambda: &Partition) -> Result<Option<&'static str>> {
    check_m(lambda)?;
    if h == 0 {
        return Err(Error::InvalidArgument("h must be at least 1".into()));
    }
    if !lambda.is_reduced() {
        return Err(Error::NotReduced(lambda.to_string()));
    }
    if lambda.is_trivial_orbit() {
        return Err(Error::Degenerate("the zero partition gives a single point".into()));
    }
    let m = lambda.m();
    let p = lambda.parts();
    let form = if m % 2 == 1 && m >= 3 && is_form(p, &[(2, (m - 1) / 2), (0, m.div_ceil(2))]) {
        Some("(2,...,2,0,...,0) of m-1, m odd")
    } else if m.is_multiple_of(2) && m >= 4 && is_form(p, &[(2, (m - 2) / 2), (1, 1), (0, m / 2)]) {
        Some("(2,...,2,1,0,...,0) of m-1, m even")
    } else if h >= 2 && is_form(p, &[(m as u32 + 1, m - 1), (0, 1)]) {
        Some("(m+1,...,m+1,0), h >= 2")
    } else if h == 1 && p == [4, 4, 0] {
        Some("(4,4,0), h = 1")
    } else {
        None
    };
    Ok(form)
}

pub fn grothendieck_reflexive_classifier(h: u32, lambda: &Partition) -> Result<bool> {
    Ok(grothendieck_reflexive_form(h, lambda)?.is_some())
}

/// Gorenstein by the h*-vector: `Some(c)` when the h*-polynomial is
/// palindromic at its own degree, `c` being the index.
pub fn gorenstein_index_from_hstar(handle: &PolytopeHandle) -> Result<Option<usize>> {
    Ok(gorenstein_index(&hstar(handle)?))
}
