//! Diameter-six palindromic trees and binary Hamming graphs.
//!
//! The tree `T(a, b, s, t)` is a path `v1 .. v6` with one pendant vertex on
//! `v2`, one pendant vertex `u` on `v5`, and then `t`, `s`, `a`, `b` further
//! pendant vertices on `v4`, `v5`, `v6` and `u`. It is H-palindromic exactly
//! when `s = t + 3 = (a + b - 5) / 2` and
//! `(a - 3b + 3)^2 - 2 (2b - 3)^2 + 94 = 0`. Substituting `x = a - 3b + 3` and
//! `y = 2b - 3` turns the last condition into `x^2 - 2 y^2 = -94`, whose
//! solutions from `(2, 7)` onward follow `x' = 3x + 4y`, `y' = 2x + 3y`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::distribution::{pair_count, DistanceDistribution};
use crate::error::FamilyError;
use crate::graph::Graph;

/// Largest tree [`build_family_tree`] materializes by default.
pub const DEFAULT_TREE_VERTEX_LIMIT: usize = 100_000;

/// Largest `m` for which [`hamming_graph`] materializes by default.
pub const DEFAULT_HAMMING_LIMIT: u32 = 14;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParameters {
    pub a: BigUint,
    pub b: BigUint,
    pub s: BigUint,
    pub t: BigUint,
}

impl FamilyParameters {
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>, s: impl Into<BigUint>, t: impl Into<BigUint>) -> Self {
        FamilyParameters {
            a: a.into(),
            b: b.into(),
            s: s.into(),
            t: t.into(),
        }
    }

    /// `a + b + s + t + 8`.
    pub fn vertex_count(&self) -> BigUint {
        &self.a + &self.b + &self.s + &self.t + 8u32
    }

    /// Whether these parameters satisfy the palindromic-family conditions.
    pub fn is_admissible(&self) -> bool {
        let sum = &self.a + &self.b;
        if sum.is_even() || sum < BigUint::from(11u32) {
            return false;
        }
        if self.s != &self.t + 3u32 || BigUint::from(2u32) * &self.s + 5u32 != sum {
            return false;
        }
        let a = BigInt::from(self.a.clone());
        let b = BigInt::from(self.b.clone());
        let x: BigInt = &a - 3 * &b + 3;
        let y: BigInt = 2 * &b - 3;
        &x * &x - 2 * &y * &y + 94 == BigInt::zero()
    }
}

/// Materializes `T(a, b, s, t)`.
///
/// Numbering: `v1..v6` are `0..=5`, the pendant on `v2` is 6, `u` is 7, then
/// the blocks of `t`, `s`, `a` and `b` pendants in that order.
pub fn build_family_tree(p: &FamilyParameters, vertex_limit: usize) -> Result<Graph, FamilyError> {
    let too_large = || FamilyError::TooLarge {
        requested: p.vertex_count().to_string(),
        limit: vertex_limit,
    };
    let n = p.vertex_count().to_usize().ok_or_else(too_large)?;
    if n > vertex_limit {
        return Err(too_large());
    }
    let count = |x: &BigUint| x.to_usize().expect("bounded by vertex count");
    let mut edges: Vec<(usize, usize)> = (1..6).map(|i| (i - 1, i)).collect();
    edges.push((1, 6));
    edges.push((4, 7));
    let mut next = 8;
    for (anchor, size) in [(3, count(&p.t)), (4, count(&p.s)), (5, count(&p.a)), (7, count(&p.b))] {
        for v in next..next + size {
            edges.push((anchor, v));
        }
        next += size;
    }
    debug_assert_eq!(next, n);
    Ok(Graph::from_edges(n, edges).expect("construction yields a simple tree"))
}

fn choose2(x: &BigUint) -> BigUint {
    pair_count(x)
}

/// Closed-form coefficients `(alpha0, ..., alpha6)` of `T(a, b, s, t)`.
///
/// Valid for every non-negative parameter set. `alpha3` comes from the total
/// pair count. The vector always has seven entries; `alpha6` is zero when
/// `a = b = 0`.
pub fn closed_form_alpha(p: &FamilyParameters) -> DistanceDistribution {
    let FamilyParameters { a, b, s, t } = p;
    let n = p.vertex_count();
    let alpha0 = n.clone();
    let alpha1 = &n - 1u32;
    let alpha2 = choose2(&(a + 1u32))
        + choose2(&(b + 1u32))
        + choose2(&(s + 3u32))
        + choose2(&(t + 2u32))
        + 4u32;
    let alpha4 = (s + 2u32) + (a + b + 2u32) * (t + 1u32) + a * b;
    let alpha5 = a + b + 2u32 * (s + 2u32);
    let alpha6 = 2u32 * (a + b);
    let known = &alpha0 + &alpha1 + &alpha2 + &alpha4 + &alpha5 + &alpha6;
    let total = &n + choose2(&n);
    assert!(total >= known, "closed-form coefficients exceed the pair count");
    let alpha3 = total - known;
    DistanceDistribution::from_alpha_unchecked(vec![alpha0, alpha1, alpha2, alpha3, alpha4, alpha5, alpha6])
}

/// One solution of `x^2 - 2 y^2 = -94` on the branch seeded at `(2, 7)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellSolution {
    pub index: usize,
    pub x: BigInt,
    pub y: BigInt,
}

impl PellSolution {
    fn check(&self) {
        assert_eq!(
            &self.x * &self.x - 2 * &self.y * &self.y,
            BigInt::from(-94),
            "recurrence left the curve at index {}",
            self.index
        );
    }
}

/// Endless stream of Pell solutions, index 0 first.
#[derive(Debug, Clone)]
pub struct PellSolutions {
    next: PellSolution,
}

impl Default for PellSolutions {
    fn default() -> Self {
        PellSolutions {
            next: PellSolution {
                index: 0,
                x: BigInt::from(2),
                y: BigInt::from(7),
            },
        }
    }
}

impl Iterator for PellSolutions {
    type Item = PellSolution;

    fn next(&mut self) -> Option<PellSolution> {
        let current = &self.next;
        current.check();
        let following = PellSolution {
            index: current.index + 1,
            x: 3 * &current.x + 4 * &current.y,
            y: 2 * &current.x + 3 * &current.y,
        };
        Some(std::mem::replace(&mut self.next, following))
    }
}

/// The first `count` solutions.
pub fn pell_solutions(count: usize) -> Vec<PellSolution> {
    PellSolutions::default().take(count).collect()
}

/// Parameters of the family member built from one Pell solution.
pub fn parameters_from_pell(sol: &PellSolution) -> FamilyParameters {
    let (x, y) = (&sol.x, &sol.y);
    assert!(x.is_even() && y.is_odd() && y.is_positive());
    let a = x + (3 * y + 3) / 2;
    let b = (y + 3) / 2;
    let s = (&a + &b - 5) / 2;
    let t = &s - 3;
    let to_unsigned = |v: BigInt| v.to_biguint().expect("family parameters are non-negative");
    let params = FamilyParameters {
        a: to_unsigned(a),
        b: to_unsigned(b),
        s: to_unsigned(s),
        t: to_unsigned(t),
    };
    assert!(params.is_admissible(), "index {} is not admissible", sol.index);
    params
}

/// Parameters and coefficients of the `index`-th palindromic diameter-six tree.
pub fn family_member(index: usize) -> (FamilyParameters, DistanceDistribution) {
    let sol = PellSolutions::default().nth(index).expect("stream is infinite");
    let params = parameters_from_pell(&sol);
    let dist = closed_form_alpha(&params);
    (params, dist)
}

/// The binary Hamming graph `H(m, 2)`: `m`-bit words adjacent when they
/// differ in one bit. Vertex index is the word's binary value.
pub fn hamming_graph(m: u32, limit: u32) -> Result<Graph, FamilyError> {
    if m > limit || m >= usize::BITS - 1 {
        return Err(FamilyError::TooLarge {
            requested: (BigUint::one() << m).to_string(),
            limit: 1usize << limit.min(usize::BITS - 2),
        });
    }
    let n = 1usize << m;
    let edges = (0..n).flat_map(|w| (0..m).map(move |bit| (w, w ^ (1 << bit))).filter(|&(u, v)| u < v));
    Ok(Graph::from_edges(n, edges).expect("hypercube is simple"))
}

/// Closed form: `alpha[0] = 2^m`, `alpha[k] = 2^(m-1) C(m, k)`.
pub fn hamming_alpha(m: u32) -> DistanceDistribution {
    assert!(m >= 1, "Hamming graphs need m >= 1");
    let half = BigUint::one() << (m - 1);
    let mut alpha = Vec::with_capacity(m as usize + 1);
    alpha.push(BigUint::one() << m);
    let mut binom = BigUint::one();
    for k in 1..=m {
        binom = binom * (m - k + 1) / k;
        alpha.push(&half * &binom);
    }
    DistanceDistribution::from_alpha_unchecked(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::distance_distribution;
    use crate::palindrome::palindromicity_distance;

    fn counts(d: &DistanceDistribution) -> Vec<u64> {
        d.to_u64_vec().unwrap()
    }

    #[test]
    fn builds_family_trees() {
        let g = build_family_tree(&FamilyParameters::new(14u32, 5u32, 7u32, 4u32), DEFAULT_TREE_VERTEX_LIMIT).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (38, 37));
        assert!(g.is_tree());

        let g = build_family_tree(&FamilyParameters::new(0u32, 0u32, 0u32, 0u32), DEFAULT_TREE_VERTEX_LIMIT).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(distance_distribution(&g).unwrap().diameter(), 5);

        let g = build_family_tree(&FamilyParameters::new(1u32, 1u32, 0u32, 0u32), DEFAULT_TREE_VERTEX_LIMIT).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(distance_distribution(&g).unwrap().diameter(), 6);
    }

    #[test]
    fn refuses_oversized_trees() {
        let p = FamilyParameters::new(14u32, 5u32, 7u32, 4u32);
        assert!(matches!(build_family_tree(&p, 37), Err(FamilyError::TooLarge { .. })));
        assert!(build_family_tree(&p, 38).is_ok());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            counts(&closed_form_alpha(&FamilyParameters::new(14u32, 5u32, 7u32, 4u32))),
            vec![38, 37, 184, 223, 184, 37, 38]
        );
        assert_eq!(
            counts(&closed_form_alpha(&FamilyParameters::new(73u32, 14u32, 41u32, 38u32))),
            vec![174, 173, 4536, 5459, 4536, 173, 174]
        );
        assert_eq!(
            counts(&closed_form_alpha(&FamilyParameters::new(0u32, 0u32, 0u32, 0u32))),
            vec![8, 7, 8, 5, 4, 4, 0]
        );
    }

    #[test]
    fn pell_examples() {
        let sols = pell_solutions(4);
        let pairs: Vec<(i64, i64)> = sols.iter().map(|s| (s.x.to_i64().unwrap(), s.y.to_i64().unwrap())).collect();
        assert_eq!(pairs, vec![(2, 7), (34, 25), (202, 143), (1178, 833)]);
        assert_eq!(sols[3].index, 3);
    }

    #[test]
    fn family_members() {
        let (p, d) = family_member(0);
        assert_eq!(p, FamilyParameters::new(14u32, 5u32, 7u32, 4u32));
        assert_eq!(d.vertex_count(), &BigUint::from(38u32));

        let (p, d) = family_member(2);
        assert_eq!(p, FamilyParameters::new(418u32, 73u32, 243u32, 240u32));
        assert_eq!(counts(&d), vec![982, 981, 149572, 179583, 149572, 981, 982]);

        let (_, d) = family_member(3);
        assert_eq!(d.vertex_count(), &BigUint::from(5694u32));
    }

    #[test]
    fn admissibility() {
        assert!(FamilyParameters::new(14u32, 5u32, 7u32, 4u32).is_admissible());
        assert!(!FamilyParameters::new(14u32, 5u32, 7u32, 3u32).is_admissible());
        assert!(!FamilyParameters::new(0u32, 0u32, 0u32, 0u32).is_admissible());
    }

    #[test]
    fn hamming_examples() {
        let k2 = hamming_graph(1, DEFAULT_HAMMING_LIMIT).unwrap();
        assert_eq!(k2.to_edge_list(), "2 1\n0 1\n");
        let c4 = hamming_graph(2, DEFAULT_HAMMING_LIMIT).unwrap();
        assert_eq!(c4.to_edge_list(), "4 4\n0 1\n0 2\n1 3\n2 3\n");
        let cube = hamming_graph(3, DEFAULT_HAMMING_LIMIT).unwrap();
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));
        assert!(hamming_graph(15, DEFAULT_HAMMING_LIMIT).is_err());
    }

    #[test]
    fn hamming_closed_form() {
        assert_eq!(counts(&hamming_alpha(3)), vec![8, 12, 12, 4]);
        assert_eq!(counts(&hamming_alpha(1)), vec![2, 1]);
        let h4 = hamming_alpha(4);
        assert_eq!(counts(&h4), vec![16, 32, 48, 32, 8]);
        assert_eq!(palindromicity_distance(&h4).z_value, BigUint::from(8u32));
    }
}
