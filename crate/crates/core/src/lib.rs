//! Exact machinery for linear cellular automata over (ℤ/p)^s on the line:
//! p-ary digit combinatorics (Lucas binomials, Lucas sets, gaps and
//! zero-blocks, Cesàro densities), the sparse polynomial algebra of LCA
//! with fast powering, and characters of the configuration group with
//! pull-backs and dilations.
//!
//! Everything in this crate is exact integer / rational arithmetic; no
//! floating point, no IO. The companion `lcalab` crate adds measures,
//! spectral diagnostics, and the command-line front end.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod character;
pub mod error;
pub mod frac;
pub mod lucas;
pub mod poly;

pub use character::{Character, Phase};
pub use error::CoreError;
pub use frac::Frac;
pub use lucas::{
    cesaro_density, gaps_in_lucas_set, in_j, lucas_binomial, lucas_decompose, lucas_set,
    p_ary_digits, zero_block_count, DensityReport, LucasSet, PAryExpansion,
};
pub use poly::{classify_bipartite, k_p, s_rank_of_sites, BipartiteForm, Config, LcaPolynomial};
