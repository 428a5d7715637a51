//! Distance to H-palindromicity.
//!
//! A graph of diameter `D` is H-palindromic when `alpha[k] == alpha[D - k]`
//! for every `k`. The distance to palindromicity is
//! `Z = sum_{k=0}^{floor(D/2)} |alpha[k] - alpha[D - k]|`.
//!
//! For a bipartite graph with parts of sizes `a` and `b`, pairs at odd
//! distance are exactly the cross pairs, so the odd coefficients sum to `a b`
//! and the even ones (including `alpha[0]`) to `(a^2 + a + b^2 + b) / 2`.
//! When `D` is odd every term of `Z` pairs an even index with an odd one, which
//! forces `Z >= ceil(n / 2)`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::distribution::{distance_distribution, DistanceDistribution};
use crate::error::PalindromeError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeReport {
    pub z_value: BigUint,
    pub is_palindromic: bool,
    pub diameter: usize,
    /// `|alpha[k] - alpha[D - k]|` for `k = 0 ..= D / 2`.
    pub per_k_gaps: Vec<BigUint>,
}

/// Computes `Z` and the per-term gaps. The middle term of an even diameter is
/// included (it is always zero).
pub fn palindromicity_distance(dist: &DistanceDistribution) -> PalindromeReport {
    let alpha = dist.alpha();
    let diameter = dist.diameter();
    let per_k_gaps: Vec<BigUint> = (0..=diameter / 2)
        .map(|k| abs_diff(&alpha[k], &alpha[diameter - k]))
        .collect();
    let z_value: BigUint = per_k_gaps.iter().sum();
    PalindromeReport {
        is_palindromic: z_value.is_zero(),
        z_value,
        diameter,
        per_k_gaps,
    }
}

fn abs_diff(x: &BigUint, y: &BigUint) -> BigUint {
    if x >= y {
        x - y
    } else {
        y - x
    }
}

/// `(sum of alpha[k] over even k, sum over odd k)`; `k = 0` counts as even.
pub fn parity_sums(dist: &DistanceDistribution) -> (BigUint, BigUint) {
    let mut even = BigUint::zero();
    let mut odd = BigUint::zero();
    for (k, a) in dist.alpha().iter().enumerate() {
        if k % 2 == 0 {
            even += a;
        } else {
            odd += a;
        }
    }
    (even, odd)
}

/// `Z(G) - ceil(n / 2)` for a connected bipartite graph of odd diameter.
///
/// The result is never negative. The parity-sum identities are re-derived
/// from the bipartition and asserted; a violation panics.
pub fn odd_diameter_margin(g: &Graph) -> Result<BigInt, PalindromeError> {
    let dist = distance_distribution(g)?;
    let (first, second) = g.bipartition()?.ok_or(PalindromeError::NotBipartite)?;
    let diameter = dist.diameter();
    if diameter % 2 == 0 {
        return Err(PalindromeError::EvenDiameter(diameter));
    }

    let a = BigUint::from(first.len());
    let b = BigUint::from(second.len());
    let (even, odd) = parity_sums(&dist);
    assert_eq!(odd, &a * &b, "odd-distance pairs must be the cross pairs");
    assert_eq!(
        even,
        (&a * &a + &a + &b * &b + &b) >> 1u32,
        "even-distance pairs must lie within a part"
    );

    let n = g.vertex_count();
    let z = palindromicity_distance(&dist).z_value;
    let margin = BigInt::from(z) - BigInt::from(n.div_ceil(2));
    assert!(margin >= BigInt::zero(), "odd-diameter bound violated");
    Ok(margin)
}
