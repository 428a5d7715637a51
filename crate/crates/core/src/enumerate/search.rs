//! Exhaustive palindromicity search over all free trees of one order.
//!
//! Parallel runs split the generation order into contiguous shards whose
//! boundaries fall where a fixed-length prefix of the level sequence changes.
//! Each shard is scanned by its own cursor and the reports are merged; merging
//! is associative and commutative, so the result does not depend on how many
//! shards were used.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use super::generator::{check_order, first_tree, FreeTreeCursor, DEFAULT_ORDER_LIMIT};
use super::tree_distances::TreeDistances;
use super::TreeCode;
use crate::distribution::DistanceDistribution;
use crate::error::EnumerateError;

/// Outcome of scanning a set of free trees of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub trees_examined: u64,
    /// Palindromic trees in generation order.
    pub palindromic: Vec<(TreeCode, DistanceDistribution)>,
    /// Minimum of `Z - ceil(n / 2)` over odd-diameter trees.
    pub min_margin_odd_diameter: Option<i64>,
    /// First tree in generation order attaining the minimum margin.
    pub min_margin_tree: Option<TreeCode>,
    pub per_diameter_counts: BTreeMap<usize, u64>,
}

impl SearchReport {
    pub fn empty(n: usize) -> Self {
        SearchReport {
            n,
            trees_examined: 0,
            palindromic: Vec::new(),
            min_margin_odd_diameter: None,
            min_margin_tree: None,
            per_diameter_counts: BTreeMap::new(),
        }
    }

    /// Combines two reports over disjoint sets of trees of the same order.
    pub fn merge(mut self, other: SearchReport) -> SearchReport {
        assert_eq!(self.n, other.n, "cannot merge reports of different orders");
        self.trees_examined += other.trees_examined;
        for (d, c) in other.per_diameter_counts {
            *self.per_diameter_counts.entry(d).or_default() += c;
        }
        self.palindromic.extend(other.palindromic);
        // generation order is decreasing lexicographic order
        self.palindromic.sort_by(|x, y| y.0.cmp(&x.0));

        let theirs = other.min_margin_odd_diameter.zip(other.min_margin_tree);
        let ours = self.min_margin_odd_diameter.zip(self.min_margin_tree.take());
        let best = match (ours, theirs) {
            (Some(x), Some(y)) => Some(if (y.0, std::cmp::Reverse(&y.1)) < (x.0, std::cmp::Reverse(&x.1)) { y } else { x }),
            (x, y) => x.or(y),
        };
        self.min_margin_odd_diameter = best.as_ref().map(|b| b.0);
        self.min_margin_tree = best.map(|b| b.1);
        self
    }

    pub fn palindromic_count(&self) -> usize {
        self.palindromic.len()
    }

    /// JSON document: `n`, `trees_examined`, `per_diameter_counts`,
    /// `palindromic` (levels plus decimal-string coefficients) and
    /// `min_margin_odd_diameter`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Palindromic<'a> {
            levels: &'a [u8],
            alpha: Vec<String>,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            trees_examined: u64,
            per_diameter_counts: BTreeMap<String, u64>,
            palindromic: Vec<Palindromic<'a>>,
            min_margin_odd_diameter: Option<i64>,
        }
        let doc = Doc {
            n: self.n,
            trees_examined: self.trees_examined,
            per_diameter_counts: self
                .per_diameter_counts
                .iter()
                .map(|(d, c)| (d.to_string(), *c))
                .collect(),
            palindromic: self
                .palindromic
                .iter()
                .map(|(code, dist)| Palindromic {
                    levels: code.levels(),
                    alpha: dist.alpha().iter().map(|a| a.to_string()).collect(),
                })
                .collect(),
            min_margin_odd_diameter: self.min_margin_odd_diameter,
        };
        serde_json::to_value(doc).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n: {}", self.n).unwrap();
        writeln!(out, "trees examined: {}", self.trees_examined).unwrap();
        let counts: Vec<String> = self
            .per_diameter_counts
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        writeln!(out, "trees per diameter: {}", counts.join(" ")).unwrap();
        writeln!(out, "palindromic trees: {}", self.palindromic.len()).unwrap();
        for (code, dist) in &self.palindromic {
            writeln!(out, "  D={} alpha={} levels=[{}]", dist.diameter(), dist, code).unwrap();
        }
        match (self.min_margin_odd_diameter, &self.min_margin_tree) {
            (Some(m), Some(t)) => writeln!(out, "min odd-diameter margin: {m} levels=[{t}]").unwrap(),
            _ => writeln!(out, "min odd-diameter margin: none").unwrap(),
        }
        out
    }
}

/// Per-tree evaluation shared by sequential and sharded scans.
struct Scanner {
    n: usize,
    distances: TreeDistances,
    alpha: Vec<u32>,
    per_diameter: Vec<u64>,
    report: SearchReport,
}

impl Scanner {
    fn new(n: usize) -> Self {
        Scanner {
            n,
            distances: TreeDistances::new(n),
            alpha: vec![0; n],
            per_diameter: vec![0; n],
            report: SearchReport::empty(n),
        }
    }

    fn run(mut self, mut cursor: FreeTreeCursor) -> SearchReport {
        while let Some(changed) = cursor.advance() {
            self.visit(cursor.levels(), changed);
        }
        self.finish()
    }

    #[inline]
    fn visit(&mut self, levels: &[u8], changed: usize) {
        self.distances.update(levels, changed);
        self.distances.alpha_into(&mut self.alpha);
        let alpha = &self.alpha;
        let diameter = alpha.iter().rposition(|&a| a > 0).unwrap_or(0);
        self.per_diameter[diameter] += 1;
        self.report.trees_examined += 1;

        let z: u32 = (0..=diameter / 2)
            .map(|k| alpha[k].abs_diff(alpha[diameter - k]))
            .sum();
        if z == 0 {
            let dist = DistanceDistribution::from_alpha_unchecked(
                alpha[..=diameter].iter().map(|&a| BigUint::from(a)).collect(),
            );
            self.report
                .palindromic
                .push((TreeCode::from_generator(levels), dist));
        }
        if diameter % 2 == 1 {
            let margin = z as i64 - self.n.div_ceil(2) as i64;
            // strict: the first minimizer in generation order is kept
            if self.report.min_margin_odd_diameter.map_or(true, |m| margin < m) {
                self.report.min_margin_odd_diameter = Some(margin);
                self.report.min_margin_tree = Some(TreeCode::from_generator(levels));
            }
        }
    }

    fn finish(mut self) -> SearchReport {
        self.report.per_diameter_counts = self
            .per_diameter
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, &c)| (d, c))
            .collect();
        self.report
    }
}

/// Scans every free tree on `n` vertices sequentially.
pub fn search_palindromic(n: usize) -> Result<SearchReport, EnumerateError> {
    let cursor = FreeTreeCursor::new(n, DEFAULT_ORDER_LIMIT)?;
    Ok(Scanner::new(n).run(cursor))
}

/// A contiguous run of the generation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shard {
    n: usize,
    start: Option<Vec<u8>>,
    stop: Option<Vec<u8>>,
}

impl Shard {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cursor(&self) -> FreeTreeCursor {
        match &self.start {
            Some(start) => FreeTreeCursor::between(start.clone(), self.stop.clone()),
            None => FreeTreeCursor::empty(),
        }
    }
}

/// Splits the trees on `n` vertices into `shards` disjoint contiguous
/// shards of roughly equal size.
///
/// Boundaries are placed only where the first `n / 2` levels change. Finding
/// them takes one pass of the generator without distance work. Some shards
/// may be empty when there are fewer prefix blocks than shards.
pub fn shard_plan(n: usize, shards: usize) -> Result<Vec<Shard>, EnumerateError> {
    if shards == 0 {
        return Err(EnumerateError::NoShards);
    }
    check_order(n, DEFAULT_ORDER_LIMIT)?;
    if shards == 1 {
        return Ok(vec![Shard {
            n,
            start: Some(first_tree(n)),
            stop: None,
        }]);
    }

    let prefix = (n / 2).max(1);
    let mut blocks: Vec<(Vec<u8>, u64)> = Vec::new();
    let mut cursor = FreeTreeCursor::new(n, DEFAULT_ORDER_LIMIT)?;
    while let Some(changed) = cursor.advance() {
        match blocks.last_mut() {
            Some(last) if changed >= prefix => last.1 += 1,
            _ => blocks.push((cursor.levels().to_vec(), 1)),
        }
    }

    let total: u64 = blocks.iter().map(|b| b.1).sum();
    let mut starts: Vec<Option<Vec<u8>>> = Vec::with_capacity(shards);
    let mut seen = 0u64;
    let mut blocks = blocks.into_iter().peekable();
    for j in 0..shards as u64 {
        let quota = (total * (j + 1)).div_ceil(shards as u64);
        let mut start = None;
        while seen < quota {
            let Some((levels, count)) = blocks.next() else { break };
            start.get_or_insert(levels);
            seen += count;
        }
        starts.push(start);
    }

    // each non-empty shard stops where the next non-empty one starts
    let mut plan = Vec::with_capacity(shards);
    let mut stop = None;
    for start in starts.into_iter().rev() {
        let shard = Shard {
            n,
            start: start.clone(),
            stop: if start.is_some() { stop.clone() } else { None },
        };
        if start.is_some() {
            stop = start;
        }
        plan.push(shard);
    }
    plan.reverse();
    Ok(plan)
}

/// Scans one shard.
pub fn search_shard(shard: &Shard) -> SearchReport {
    Scanner::new(shard.n).run(shard.cursor())
}

/// Scans all trees on `n` vertices using `jobs` shards, one thread each.
/// The report equals [`search_palindromic`]'s for every `jobs >= 1`.
pub fn search_palindromic_parallel(n: usize, jobs: usize) -> Result<SearchReport, EnumerateError> {
    if jobs == 0 {
        return Err(EnumerateError::NoShards);
    }
    if jobs == 1 {
        return search_palindromic(n);
    }
    let plan = shard_plan(n, jobs)?;
    let reports: Vec<SearchReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = plan
            .iter()
            .map(|shard| scope.spawn(move || search_shard(shard)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard worker panicked"))
            .collect()
    });
    Ok(reports
        .into_iter()
        .fold(SearchReport::empty(n), SearchReport::merge))
}

/// Smallest odd-diameter margin for one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarginSummary {
    pub odd_diameter_trees: u64,
    pub min_margin: Option<i64>,
    pub witness: Option<TreeCode>,
}

impl Serialize for TreeCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.levels().serialize(serializer)
    }
}

/// For each `n` in `5 ..= n_max`, the minimum of `Z - ceil(n / 2)` over all
/// odd-diameter trees on `n` vertices and a tree attaining it.
pub fn conjecture_audit(
    n_max: usize,
    jobs: usize,
) -> Result<BTreeMap<usize, MarginSummary>, EnumerateError> {
    if n_max < 5 || n_max > DEFAULT_ORDER_LIMIT {
        return Err(EnumerateError::OrderOutOfRange {
            n: n_max,
            limit: DEFAULT_ORDER_LIMIT,
        });
    }
    (5..=n_max)
        .map(|n| {
            let report = search_palindromic_parallel(n, jobs)?;
            let odd_diameter_trees = report
                .per_diameter_counts
                .iter()
                .filter(|(d, _)| *d % 2 == 1)
                .map(|(_, c)| c)
                .sum();
            Ok((
                n,
                MarginSummary {
                    odd_diameter_trees,
                    min_margin: report.min_margin_odd_diameter,
                    witness: report.min_margin_tree,
                },
            ))
        })
        .collect()
}
