//! Exact-arithmetic weighted chromatic, Tutte, and Tutte–Grothendieck
//! polynomials of labelled graphs and matroids, their label-sum invariants,
//! and the chromatic/Tutte cochain complexes with weighted graded Euler
//! numbers. All arithmetic is over the rationals; every identity check is
//! exact.

pub mod categorify;
pub mod fixtures;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod matroid;
pub mod mvpoly;
pub mod poly;
pub mod rational;
pub mod setpoly;
pub mod subset;
pub mod verify;
pub mod weights;

pub use graph::{EdgeLabel, Multigraph};
pub use matroid::RankOracle;
pub use mvpoly::{MVPoly, Var};
pub use rational::Rational;
pub use setpoly::SetIndexedPoly;
pub use subset::SubsetMask;
pub use weights::WeightFn;

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("gamma undefined below degree 1")]
    GammaUndefined,
    #[error("contract-loop")]
    ContractLoop,
    #[error("{guard} guard exceeded (limit {limit})")]
    SizeGuard { guard: &'static str, limit: usize },
    #[error("harmonicity required")]
    HarmonicityRequired,
    #[error("polynomial is not univariate in {0}")]
    NotUnivariate(&'static str),
    #[error("alpha and beta must be nonzero")]
    ZeroParameter,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
