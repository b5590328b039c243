//! Exact root-system and representation computations for homogeneous maximal
//! totally complex submanifolds of quaternionic projective space.
//!
//! The pipeline runs [`root_data`] → [`rep_calc`] → [`classify`], with
//! [`catalog`] holding the expected results and checking them. Labels are
//! Bourbaki throughout; [`notation`] converts other numberings at the edge.
//!
//! ```
//! use mtc_core::classify::mtc_report;
//! use mtc_core::notation::{parse_group_and_rep, Convention};
//!
//! let (g, v) = parse_group_and_rep("A5", "L3", Convention::Bourbaki).unwrap();
//! let r = mtc_report(&g, &v).unwrap();
//! assert!(r.passes());
//! assert_eq!(r.orbit.levi.to_string(), "A2+A2+T1");
//! ```

pub mod catalog;
pub mod classify;
pub mod error;
pub mod expr;
pub mod notation;
pub mod rep_calc;
pub mod root_data;

// The guide's code blocks run as doc-tests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/root-systems.md")]
    mod root_systems {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    mod orbits {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/reducible.md")]
    mod reducible {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
