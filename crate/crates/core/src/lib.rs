//! Newton polytopes of Schur polynomials and inflated symmetric Grothendieck
//! polynomials, with exact Ehrhart data.
//!
//! ```
//! use newton_ehrhart::{hstar, Partition, PolytopeHandle};
//!
//! let lambda = Partition::parse("2,1", 3).unwrap();
//! let v = hstar(&PolytopeHandle::schur(lambda)).unwrap();
//! assert_eq!(v.to_string(), "1,4,1");
//! ```
//!
//! Counting is exact throughout. Lattice points are only materialized when a
//! caller asks for them, and enumeration refuses to go past the cap read from
//! `NEWTON_EHRHART_MAX_POINTS` (default ten million).

use std::sync::OnceLock;

use num_bigint::BigUint;

pub mod combinat;
pub mod ehrhart;
pub mod error;
pub mod formulas;
pub mod geometry;
pub mod grothendieck;
pub mod idp;
pub mod partitions;
pub mod permutohedron;
pub mod polytope;
pub mod reflexivity;
pub mod sweep;
pub mod symfun;

pub use ehrhart::{count_dilate, ehrhart_polynomial, gorenstein_index, hstar, is_palindromic, is_unimodal, EhrhartPolynomial, HStarVector};
pub use error::{Error, Result};
pub use geometry::{FacetInequality, Point, Sense};
pub use partitions::{dominates, dominating_sequence, in_a, make_partition, reduce_by_translation, DominatingSequence, Partition};
pub use permutohedron::FacetDescription;
pub use polytope::PolytopeHandle;
pub use reflexivity::{ReflexivityReport, Verdict};
pub use symfun::{MonomialMap, Tableau};

const DEFAULT_MAX_POINTS: u64 = 10_000_000;

/// The enumeration cap, read once from `NEWTON_EHRHART_MAX_POINTS`.
pub fn max_points() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("NEWTON_EHRHART_MAX_POINTS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_POINTS)
    })
}

pub(crate) fn check_enumeration_cap(needed: &BigUint) -> Result<()> {
    let cap = max_points();
    if *needed > BigUint::from(cap) {
        return Err(Error::TooLarge { needed: needed.to_string(), cap });
    }
    Ok(())
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/ehrhart.md")]
    mod ehrhart {}
    #[doc = include_str!("../../../book/src/reflexivity.md")]
    mod reflexivity {}
    #[doc = include_str!("../../../book/src/idp.md")]
    mod idp {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
