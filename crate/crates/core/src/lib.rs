//! Hosoya polynomials, Wiener indices and H-palindromic trees.
//!
//! The central object is a graph's distance distribution: `alpha[k]` counts
//! unordered vertex pairs at distance `k`, with `alpha[0]` equal to the
//! number of vertices. These are the coefficients of the Hosoya polynomial.
//! A graph of diameter `D` is H-palindromic when `alpha[k] = alpha[D - k]`
//! for all `k`.
//!
//! - [`graph`] and [`distribution`]: graphs, the edge-list format, exact
//!   distributions, Wiener index and polynomial evaluation.
//! - [`palindrome`]: the distance to palindromicity `Z` and the parity
//!   identities of bipartite graphs.
//! - [`families`]: the infinite family of palindromic diameter-six trees and
//!   binary Hamming graphs.
//! - [`enumerate`]: isomorph-free generation of free trees and exhaustive
//!   palindromicity searches.
//! - [`cli`]: the `hosoya` command-line tool.
//!
//! ```
//! use hosoya::graph::parse_edge_list;
//! use hosoya::distribution::distance_distribution;
//! use hosoya::palindrome::palindromicity_distance;
//!
//! let path = parse_edge_list("3 2\n0 1\n1 2").unwrap();
//! let dist = distance_distribution(&path).unwrap();
//! assert_eq!(dist.to_string(), "(3, 2, 1)");
//! assert_eq!(dist.wiener_index(), 4u32.into());
//! assert_eq!(palindromicity_distance(&dist).z_value, 2u32.into());
//! ```

pub mod cli;
pub mod distribution;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod palindrome;

pub use distribution::{distance_distribution, DistanceDistribution};
pub use error::{DistributionError, EnumerateError, FamilyError, GraphError, PalindromeError};
pub use graph::{parse_edge_list, Graph};

// The guide's code listings run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/distances.md")]
    mod distances {}
    #[doc = include_str!("../../../book/src/palindromicity.md")]
    mod palindromicity {}
    #[doc = include_str!("../../../book/src/diameter-six.md")]
    mod diameter_six {}
    #[doc = include_str!("../../../book/src/hamming.md")]
    mod hamming {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
