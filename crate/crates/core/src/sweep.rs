//! Sweeps comparing the closed-form classifiers with geometry over ranges of
//! partitions. Cases run in parallel; results keep a fixed order.

use rayon::prelude::*;
use serde::Serialize;

use crate::ehrhart::{gorenstein_index, hstar};
use crate::error::Result;
use crate::partitions::{partitions_of, Partition};
use crate::polytope::PolytopeHandle;
use crate::reflexivity::{
    gorenstein_index_geometric, grothendieck_reflexive_form, is_reflexive_geometric, schur_gorenstein_form,
    schur_reflexive_form,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurCase {
    pub lambda: Partition,
    pub reflexive_form: Option<&'static str>,
    pub reflexive_geometric: bool,
    pub gorenstein_form: Option<&'static str>,
    /// Gorenstein index read off the h*-vector.
    pub gorenstein_hstar: Option<usize>,
    /// Gorenstein index from lattice distances of dilates.
    pub gorenstein_geometric: Option<usize>,
}

impl SchurCase {
    pub fn reflexive_agrees(&self) -> bool {
        self.reflexive_form.is_some() == self.reflexive_geometric
    }

    pub fn gorenstein_agrees(&self) -> bool {
        self.gorenstein_form.is_some() == self.gorenstein_hstar.is_some() && self.gorenstein_hstar == self.gorenstein_geometric
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrothendieckCase {
    pub h: u32,
    pub lambda: Partition,
    pub reflexive_form: Option<&'static str>,
    pub reflexive_geometric: bool,
}

impl GrothendieckCase {
    pub fn agrees(&self) -> bool {
        self.reflexive_form.is_some() == self.reflexive_geometric
    }
}

/// Every `λ` with `|λ| ≤ max_n` and `2 ≤ m ≤ max_m` whose orbit is not a
/// single point, in order of `m`, then weight, then reverse-lex.
pub fn schur_range(max_n: u64, max_m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        for n in 0..=max_n {
            out.extend(partitions_of(n, m, n as u32).into_iter().filter(|l| !l.is_trivial_orbit()));
        }
    }
    out
}

/// Reduced, nonzero `λ` with `|λ| ≤ max_n`, `2 ≤ m ≤ max_m`.
pub fn grothendieck_range(max_n: u64, max_m: usize) -> Vec<Partition> {
    schur_range(max_n, max_m).into_iter().filter(|l| l.is_reduced()).collect()
}

pub fn schur_case(lambda: &Partition) -> Result<SchurCase> {
    let handle = PolytopeHandle::schur(lambda.clone());
    Ok(SchurCase {
        lambda: lambda.clone(),
        reflexive_form: schur_reflexive_form(lambda)?,
        reflexive_geometric: is_reflexive_geometric(&handle)?.is_reflexive(),
        gorenstein_form: schur_gorenstein_form(lambda)?,
        gorenstein_hstar: gorenstein_index(&hstar(&handle)?),
        gorenstein_geometric: gorenstein_index_geometric(&handle)?,
    })
}

pub fn grothendieck_case(h: u32, lambda: &Partition) -> Result<GrothendieckCase> {
    let handle = PolytopeHandle::grothendieck(h, lambda.clone())?;
    Ok(GrothendieckCase {
        h,
        lambda: lambda.clone(),
        reflexive_form: grothendieck_reflexive_form(h, lambda)?,
        reflexive_geometric: is_reflexive_geometric(&handle)?.is_reflexive(),
    })
}

pub fn schur_sweep(max_n: u64, max_m: usize) -> Result<Vec<SchurCase>> {
    schur_range(max_n, max_m).par_iter().map(schur_case).collect()
}

pub fn grothendieck_sweep(max_n: u64, max_m: usize, hs: &[u32]) -> Result<Vec<GrothendieckCase>> {
    let cases: Vec<(u32, Partition)> =
        hs.iter().flat_map(|&h| grothendieck_range(max_n, max_m).into_iter().map(move |l| (h, l))).collect();
    cases.par_iter().map(|(h, l)| grothendieck_case(*h, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_agree() {
        let s = schur_sweep(5, 4).unwrap();
        assert!(!s.is_empty());
        for c in &s {
            assert!(c.reflexive_agrees(), "{c:?}");
            assert!(c.gorenstein_agrees(), "{c:?}");
        }
        for c in grothendieck_sweep(4, 3, &[1, 2]).unwrap() {
            assert!(c.agrees(), "{c:?}");
        }
    }
}
