//! Successor-based generation of unlabeled free trees.
//!
//! Each free tree is represented by the level sequence of one rooted version
//! of it: the tree rooted at its center, children ordered so the sequence is
//! lexicographically largest, and (for bicentral trees) the central edge
//! oriented so the left subtree of the root is the smaller one. Rooted level
//! sequences are stepped in decreasing lexicographic order by the
//! Beyer–Hedetniemi successor; sequences that are not the chosen
//! representative are skipped with the Wright–Richmond–Odlyzko–McKay jump
//! rather than filtered one at a time.
//!
//! The generator state is just the current level sequence, so a cursor can be
//! resumed from any emitted tree. Sharding relies on this.

use crate::error::EnumerateError;

/// Default upper bound on the tree order accepted by the enumerator.
pub const DEFAULT_ORDER_LIMIT: usize = 26;

/// Hard upper bound: levels are stored as bytes.
pub(crate) const MAX_ORDER: usize = 255;

pub(crate) fn check_order(n: usize, limit: usize) -> Result<(), EnumerateError> {
    let limit = limit.min(MAX_ORDER);
    if n == 0 || n > limit {
        return Err(EnumerateError::OrderOutOfRange { n, limit });
    }
    Ok(())
}

/// Level sequence of the path on `n` vertices rooted at its center; the
/// first tree in generation order.
pub(crate) fn first_tree(n: usize) -> Vec<u8> {
    if n <= 2 {
        return (0..n as u8).collect();
    }
    (0..=(n / 2) as u8).chain(1..n.div_ceil(2) as u8).collect()
}

/// Cursor over free trees in generation order.
///
/// [`advance`](Self::advance) moves to the next tree and reports the first
/// position of the level sequence that changed, which lets consumers reuse
/// work done on the unchanged prefix.
#[derive(Debug, Clone)]
pub struct FreeTreeCursor {
    levels: Vec<u8>,
    started: bool,
    done: bool,
    stop: Option<Vec<u8>>,
}

impl FreeTreeCursor {
    /// All free trees on `n` vertices, `1 <= n <= limit`.
    pub fn new(n: usize, limit: usize) -> Result<Self, EnumerateError> {
        check_order(n, limit)?;
        Ok(Self::between(first_tree(n), None))
    }

    /// Trees from `start` (inclusive) up to `stop` (exclusive) or the end.
    /// `start` must be an emitted tree.
    pub(crate) fn between(start: Vec<u8>, stop: Option<Vec<u8>>) -> Self {
        FreeTreeCursor {
            levels: start,
            started: false,
            done: false,
            stop,
        }
    }

    pub(crate) fn empty() -> Self {
        FreeTreeCursor {
            levels: Vec::new(),
            started: true,
            done: true,
            stop: None,
        }
    }

    /// Current level sequence. Only meaningful after `advance` returned `Some`.
    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    /// Steps to the next tree. Returns the first index whose level changed
    /// (0 for the first tree), or `None` when exhausted.
    pub fn advance(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return if self.at_stop() {
                self.done = true;
                None
            } else {
                Some(0)
            };
        }
        let Some(p) = last_non_leaf_level(&self.levels) else {
            self.done = true;
            return None;
        };
        next_rooted_at(&mut self.levels, p);
        let changed = match skip_invalid(&mut self.levels) {
            Some(c) => c.min(p),
            None => p,
        };
        if self.at_stop() {
            self.done = true;
            return None;
        }
        Some(changed)
    }

    fn at_stop(&self) -> bool {
        self.stop.as_deref() == Some(&self.levels[..])
    }
}

/// Last position `p > 0` with level at least 2, if any.
fn last_non_leaf_level(levels: &[u8]) -> Option<usize> {
    levels.iter().rposition(|&l| l >= 2)
}

/// Beyer–Hedetniemi successor at position `p`: lower `levels[p]` by one and
/// refill the tail by repeating the subtree pattern that starts at `p`'s
/// parent.
fn next_rooted_at(levels: &mut [u8], p: usize) {
    let target = levels[p] - 1;
    let mut q = p - 1;
    while levels[q] != target {
        q -= 1;
    }
    for i in p..levels.len() {
        levels[i] = levels[i - p + q];
    }
}

/// Index of the root's second child, or `n` if the root has one child.
fn split_point(levels: &[u8]) -> usize {
    levels
        .iter()
        .skip(2)
        .position(|&l| l == 1)
        .map_or(levels.len(), |i| i + 2)
}

/// Checks whether `levels` is the canonical representative of its free tree;
/// if not, jumps forward to the next representative. Returns the first
/// changed index when a jump was made.
fn skip_invalid(levels: &mut [u8]) -> Option<usize> {
    let n = levels.len();
    let m = split_point(levels);
    // left subtree of the root occupies 1..m (levels shifted by one);
    // the rest is the root plus m..n
    let left_height = levels[1..m].iter().max().copied().unwrap_or(1) - 1;
    let rest_height = levels[m..].iter().max().copied().unwrap_or(0);

    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        let left_len = m - 1;
        let rest_len = n - m + 1;
        if left_len > rest_len {
            valid = false;
        } else if left_len == rest_len {
            let left = levels[1..m].iter().map(|&l| l - 1);
            let rest = std::iter::once(0).chain(levels[m..].iter().copied());
            if left.gt(rest) {
                valid = false;
            }
        }
    }
    if valid {
        return None;
    }

    let p = m - 1;
    let old = levels[p];
    next_rooted_at(levels, p);
    let mut changed = p;
    if old > 2 {
        let m = split_point(levels);
        let height = levels[1..m].iter().max().copied().unwrap_or(1) as usize - 1;
        let start = n - (height + 1);
        for (offset, slot) in levels[start..].iter_mut().enumerate() {
            *slot = offset as u8 + 1;
        }
        changed = changed.min(start);
    }
    Some(changed)
}
