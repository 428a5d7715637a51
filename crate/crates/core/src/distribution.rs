//! Distance distributions and the quantities read off them.
//!
//! Entry `k` of a [`DistanceDistribution`] counts unordered vertex pairs at
//! distance `k`; entry 0 counts the vertices themselves. Read as polynomial
//! coefficients this is the Hosoya polynomial `H(G, x) = sum_k alpha[k] x^k`,
//! and its derivative at `x = 1` is the Wiener index.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{DistributionError, GraphError};
use crate::graph::Graph;

/// Exact coefficient vector `(alpha[0], ..., alpha[D])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceDistribution {
    alpha: Vec<BigUint>,
}

impl DistanceDistribution {
    /// Wraps a coefficient vector after checking the pair-count identity
    /// `sum_{k >= 1} alpha[k] == n (n - 1) / 2` with `n = alpha[0]`.
    ///
    /// Trailing zeros are kept as given.
    pub fn from_alpha(alpha: Vec<BigUint>) -> Result<Self, DistributionError> {
        let n = alpha.first().ok_or(DistributionError::Empty)?;
        let expected = pair_count(n);
        let found: BigUint = alpha[1..].iter().sum();
        if found != expected {
            return Err(DistributionError::PairCount {
                expected: expected.to_string(),
                found: found.to_string(),
            });
        }
        Ok(DistanceDistribution { alpha })
    }

    /// Convenience constructor for small literal vectors.
    pub fn from_counts(counts: &[u64]) -> Result<Self, DistributionError> {
        Self::from_alpha(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub(crate) fn from_alpha_unchecked(alpha: Vec<BigUint>) -> Self {
        debug_assert!(Self::from_alpha(alpha.clone()).is_ok());
        DistanceDistribution { alpha }
    }

    pub fn alpha(&self) -> &[BigUint] {
        &self.alpha
    }

    /// Number of vertices, `alpha[0]`.
    pub fn vertex_count(&self) -> &BigUint {
        &self.alpha[0]
    }

    /// Largest `k` with `alpha[k] > 0`.
    pub fn diameter(&self) -> usize {
        self.alpha.iter().rposition(|a| !a.is_zero()).unwrap_or(0)
    }

    /// `sum_k k * alpha[k]`.
    pub fn wiener_index(&self) -> BigUint {
        self.alpha
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * BigUint::from(k))
            .sum()
    }

    /// Evaluates the Hosoya polynomial exactly at `lambda` (Horner's rule).
    pub fn hosoya_evaluate(&self, lambda: &BigRational) -> BigRational {
        self.alpha.iter().rev().fold(BigRational::zero(), |acc, a| {
            acc * lambda + BigRational::from_integer(a.clone().into())
        })
    }

    /// Coefficients as `u64` when every entry fits.
    pub fn to_u64_vec(&self) -> Option<Vec<u64>> {
        self.alpha.iter().map(|a| u64::try_from(a).ok()).collect()
    }
}

impl fmt::Display for DistanceDistribution {
    /// Formats as `(a0, a1, ..., aD)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.alpha.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// `n (n - 1) / 2`.
pub(crate) fn pair_count(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    n * (n - BigUint::one()) >> 1u32
}

/// Distance distribution of a connected graph by one BFS per vertex.
pub fn distance_distribution(g: &Graph) -> Result<DistanceDistribution, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    // ordered-pair counts
    let mut counts: Vec<u64> = vec![0; n];
    for source in 0..n {
        for d in g.bfs_distances(source) {
            counts[d] += 1;
        }
    }
    let diameter = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
    counts.truncate(diameter + 1);
    let alpha = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| BigUint::from(if k == 0 { c } else { c / 2 }))
        .collect();
    Ok(DistanceDistribution::from_alpha_unchecked(alpha))
}
