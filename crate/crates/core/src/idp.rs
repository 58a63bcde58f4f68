//! The integer decomposition property, checked two ways: by comparing
//! iterated Minkowski sumsets with the lattice points of each dilate, and
//! constructively by splitting a tableau into column classes.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{sorted_desc, Point};
use crate::grothendieck::GrothendieckPolytope;
use crate::partitions::{prefix_dominated, Partition};
use crate::permutohedron;
use crate::polytope::PolytopeHandle;
use crate::symfun::Tableau;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdpOutcome {
    pub holds: bool,
    pub t_max: u32,
    /// `(t, p)` with `p` in `tP` but not a sum of `t` points of `P`.
    pub counterexample: Option<(u32, Point)>,
}

/// Compares `S_t = S_{t-1} + S_1` with the lattice points of `tP` for every
/// `t ≤ t_max`.
pub fn idp_brute(handle: &PolytopeHandle, t_max: u32) -> Result<IdpOutcome> {
    let base = handle.lattice_points()?;
    let mut sums: HashSet<Point> = base.iter().cloned().collect();
    for t in 2..=t_max {
        let target = handle.dilate(t)?;
        crate::check_enumeration_cap(&(num_bigint::BigUint::from(sums.len()) * base.len()))?;
        let mut next: HashSet<Point> = HashSet::with_capacity(sums.len() * 2);
        for a in &sums {
            for b in &base {
                next.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        sums = next;
        if num_bigint::BigUint::from(sums.len()) != target.count_lattice_points() {
            let missing = target.lattice_points()?.into_iter().find(|p| !sums.contains(p));
            return Ok(IdpOutcome { holds: false, t_max, counterexample: missing.map(|p| (t, p)) });
        }
    }
    Ok(IdpOutcome { holds: true, t_max, counterexample: None })
}

/// A semistandard tableau of the given shape and content, or `None` when
/// none exists (exactly when the sorted content is not dominated by the
/// shape).
///
/// Letters go in increasing order, each as a horizontal strip placed as high
/// as possible; if that ever dead-ends, lower placements are tried in turn.
pub fn ssyt_with_content(shape: &Partition, content: &[u32]) -> Option<Tableau> {
    let total: u64 = content.iter().map(|&x| x as u64).sum();
    if total != shape.weight() || !prefix_dominated(&sorted_desc(content), shape.parts()) {
        return None;
    }
    let target = shape.parts();
    let rows = target.len();
    let mut filled = vec![vec![]; rows];
    let mut dead: HashSet<(usize, Vec<u32>)> = HashSet::new();
    if place(0, content, target, &mut filled, &mut dead) {
        Some(Tableau { shape: shape.clone(), rows: filled })
    } else {
        None
    }
}

fn place(letter: usize, content: &[u32], target: &[u32], filled: &mut Vec<Vec<u32>>, dead: &mut HashSet<(usize, Vec<u32>)>) -> bool {
    let lens: Vec<u32> = filled.iter().map(|r| r.len() as u32).collect();
    if letter == content.len() {
        return lens == target;
    }
    if dead.contains(&(letter, lens.clone())) {
        return false;
    }
    let mut adds = vec![0u32; lens.len()];
    let found = strip(0, content[letter], letter, &lens, target, &mut adds, content, filled, dead);
    if !found {
        dead.insert((letter, lens));
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn strip(
    r: usize,
    left: u32,
    letter: usize,
    lens: &[u32],
    target: &[u32],
    adds: &mut Vec<u32>,
    content: &[u32],
    filled: &mut Vec<Vec<u32>>,
    dead: &mut HashSet<(usize, Vec<u32>)>,
) -> bool {
    if r == lens.len() {
        if left != 0 {
            return false;
        }
        for (row, &a) in adds.iter().enumerate() {
            filled[row].extend(std::iter::repeat_n(letter as u32 + 1, a as usize));
        }
        if place(letter + 1, content, target, filled, dead) {
            return true;
        }
        for (row, &a) in adds.iter().enumerate() {
            let keep = filled[row].len() - a as usize;
            filled[row].truncate(keep);
        }
        return false;
    }
    // a cell may only sit under a cell filled by an earlier letter
    let cap = if r == 0 { target[0] } else { target[r].min(lens[r - 1]) };
    let most = cap.saturating_sub(lens[r]).min(left);
    for a in (0..=most).rev() {
        adds[r] = a;
        if strip(r + 1, left - a, letter, lens, target, adds, content, filled, dead) {
            return true;
        }
    }
    adds[r] = 0;
    false
}

/// A point of a dilate written as a sum of points of the base polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub point: Point,
    pub tableau: Tableau,
    pub pieces: Vec<Tableau>,
    pub parts: Vec<Point>,
}

impl Decomposition {
    fn from_split(point: &[u32], tableau: Tableau, t: usize) -> Self {
        let m = point.len();
        let pieces: Vec<Tableau> = (0..t).map(|i| tableau.column_class(i, t)).collect();
        let parts = pieces.iter().map(|p| p.content(m)).collect();
        Self { point: point.to_vec(), tableau, pieces, parts }
    }

    /// Every piece is semistandard, lies in the base polytope, and the
    /// pieces add up to the point.
    pub fn validate(&self, base: &PolytopeHandle) -> Result<()> {
        let m = self.point.len();
        let mut total = vec![0u32; m];
        for (piece, part) in self.pieces.iter().zip(&self.parts) {
            if !piece.is_semistandard(m as u32) {
                return Err(Error::Consistency(format!("column class {:?} is not semistandard", piece.rows)));
            }
            if !base.contains(part) {
                return Err(Error::Consistency(format!("{part:?} is not in {base}")));
            }
            total.iter_mut().zip(part).for_each(|(a, b)| *a += b);
        }
        if total != self.point {
            return Err(Error::Consistency(format!("pieces sum to {total:?}, not {:?}", self.point)));
        }
        Ok(())
    }
}

/// Writes `p ∈ tP_λ` as a sum of `t` points of `P_λ`.
pub fn decompose_schur(lambda: &Partition, t: u32, p: &[u32]) -> Result<Decomposition> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    let shape = lambda.dilate(t)?;
    if !permutohedron::contains(&shape, p) {
        return Err(Error::PointOutside { point: p.to_vec(), polytope: format!("{t}P_({lambda})") });
    }
    let tableau = ssyt_with_content(&shape, p)
        .ok_or_else(|| Error::Consistency(format!("no tableau of shape ({shape}) with content {p:?}")))?;
    let d = Decomposition::from_split(p, tableau, t as usize);
    d.validate(&PolytopeHandle::schur(lambda.clone()))?;
    Ok(d)
}

/// Writes `p ∈ t·Newt(G_{h,λ})` as a sum of `t` points of `Newt(G_{h,λ})`.
pub fn decompose_grothendieck(h: u32, lambda: &Partition, t: u32, p: &[u32]) -> Result<Decomposition> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    let base = GrothendieckPolytope::new(h, lambda)?;
    let dilate = base.dilate(t)?;
    if !dilate.contains(p) {
        return Err(Error::PointOutside { point: p.to_vec(), polytope: format!("{t}Newt(G_{{{h},({lambda})}})") });
    }
    let k = p.iter().map(|&x| x as u64).sum::<u64>() - dilate.lambda().weight();
    let shape = dilate.layer(k as usize)?.clone();
    let tableau = ssyt_with_content(&shape, p)
        .ok_or_else(|| Error::Consistency(format!("no tableau of shape ({shape}) with content {p:?}")))?;
    let d = Decomposition::from_split(p, tableau, t as usize);
    let top = base.sequence().top();
    for piece in &d.pieces {
        if !lambda.is_contained_in(&piece.shape) || !piece.shape.is_contained_in(top) {
            return Err(Error::Consistency(format!("piece shape ({}) is not between ({lambda}) and ({top})", piece.shape)));
        }
    }
    d.validate(&PolytopeHandle::grothendieck(h, lambda.clone())?)?;
    Ok(d)
}

/// Decomposes a point of the `t`-th dilate of any handle.
pub fn decompose(handle: &PolytopeHandle, t: u32, p: &[u32]) -> Result<Decomposition> {
    match handle {
        PolytopeHandle::Schur { lambda } => decompose_schur(lambda, t, p),
        PolytopeHandle::Grothendieck { h, lambda } => decompose_grothendieck(*h, lambda, t, p),
    }
}

/// Decomposes every lattice point of every dilate `t = 1..=t_max`; returns
/// how many certificates were produced.
pub fn idp_constructive(handle: &PolytopeHandle, t_max: u32) -> Result<usize> {
    let mut n = 0;
    for t in 1..=t_max {
        for p in handle.dilate(t)?.lattice_points()? {
            decompose(handle, t, &p)?;
            n += 1;
        }
    }
    Ok(n)
}
