//! Cover ideals of graphs, quasi-equigeneration and fiber-cone invariants.

pub mod catalog;
pub mod error;
pub mod fiber;
pub mod grading;
pub mod graph;
pub mod graphfile;
pub mod ideal;
pub mod ratlin;
pub mod report;
pub mod sweep;
pub mod trees;

pub use error::{Error, Result};
pub use graph::Graph;
pub use ideal::{Monomial, MonomialIdeal};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/cover-ideals.md")]
    mod cover_ideals {}
    #[doc = include_str!("../../../book/src/grading.md")]
    mod grading {}
    #[doc = include_str!("../../../book/src/fiber-cones.md")]
    mod fiber_cones {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
