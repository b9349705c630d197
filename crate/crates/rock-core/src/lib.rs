//! Exact-arithmetic combinatorics and algebra of RoCK blocks.
//!
//! The crate builds, over the integers and with no floating point anywhere,
//! the combinatorial objects attached to a RoCK block of quantum
//! characteristic `e` and weight `d`: abacus displays with their cores,
//! quotients and hook decompositions; residue words and divided-power words;
//! standard and colored tableaux with the degree statistic; the zigzag
//! algebra `Z` and its wreath products `W_d` with the colored permutation
//! modules `M_{λ,c}`; the generalized Schur algebra `S^Z(n,d)` computed as an
//! endomorphism ring; and the Turner double `D_Q(n,d)`. Graded dimensions are
//! Laurent polynomials in `q` and every identity the crate checks is an exact
//! integer or Laurent-polynomial equality.

pub mod abacus;
pub mod combin;
pub mod double;
pub mod gdim;
pub mod intlinalg;
pub mod laurent;
pub mod schur;
pub mod suites;
pub mod tableaux;
pub mod words;
pub mod wreath;
pub mod zigzag;

use thiserror::Error;

/// Errors surfaced by operations with documented preconditions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: parts must be weakly decreasing and non-negative")]
    BadPartition,
    #[error("invalid skew shape: inner diagram is not contained in the outer one")]
    BadSkew,
    #[error("abacus needs at least {needed} beads, got {got}")]
    TooFewBeads { needed: usize, got: usize },
    #[error("partition is not in the block of the given core and weight")]
    NotInBlock,
    #[error("core is not {d}-Rouquier")]
    NotRouquier { d: usize },
    #[error("permutation does not lie in the parabolic subgroup S_lambda")]
    NotInParabolic,
    #[error("word weight is not a multiple of delta")]
    NotImaginaryWeight,
    #[error("node set is not contained in the removable {0}-nodes of the shape")]
    NotRemovable(usize),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
