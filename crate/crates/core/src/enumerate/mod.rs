//! Exhaustive enumeration of unlabeled free trees and palindromicity searches.

mod generator;
mod search;
mod tree_distances;

use std::fmt;

use crate::error::EnumerateError;
use crate::graph::Graph;

pub use generator::{FreeTreeCursor, DEFAULT_ORDER_LIMIT};
pub use search::{
    conjecture_audit, search_palindromic, search_palindromic_parallel, search_shard, shard_plan,
    MarginSummary, SearchReport, Shard,
};
pub use tree_distances::TreeDistances;

/// Level sequence of a rooted tree in preorder: `levels[0] = 0`, every other
/// entry at least 1 and at most one more than its predecessor. The parent of
/// vertex `i` is the nearest earlier vertex one level up.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCode {
    levels: Vec<u8>,
}

impl TreeCode {
    pub fn new(levels: Vec<u8>) -> Result<Self, EnumerateError> {
        let bad = |msg: String| Err(EnumerateError::MalformedLevels(msg));
        match levels.first() {
            None => return bad("empty sequence".into()),
            Some(&first) if first != 0 => return bad(format!("root level is {first}, expected 0")),
            _ => {}
        }
        for i in 1..levels.len() {
            if levels[i] == 0 {
                return bad(format!("second root at position {i}"));
            }
            if levels[i] > levels[i - 1] + 1 {
                return bad(format!(
                    "level jumps from {} to {} at position {i}",
                    levels[i - 1],
                    levels[i]
                ));
            }
        }
        Ok(TreeCode { levels })
    }

    pub(crate) fn from_generator(levels: &[u8]) -> Self {
        TreeCode {
            levels: levels.to_vec(),
        }
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.len()
    }

    /// Parent of each vertex; `None` for the root.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut last_at_level: Vec<usize> = Vec::new();
        let mut parents = Vec::with_capacity(self.levels.len());
        for (i, &level) in self.levels.iter().enumerate() {
            let level = level as usize;
            parents.push(level.checked_sub(1).map(|up| last_at_level[up]));
            last_at_level.truncate(level);
            last_at_level.push(i);
        }
        parents
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.levels.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Decodes a level sequence into a tree graph; vertex `i` is position `i`.
pub fn tree_code_to_graph(code: &TreeCode) -> Graph {
    Graph::from_parents(&code.parents())
}

/// Iterator over all free trees on `n` vertices, in generation order.
pub fn free_trees(n: usize) -> Result<impl Iterator<Item = TreeCode>, EnumerateError> {
    free_trees_with_limit(n, DEFAULT_ORDER_LIMIT)
}

pub fn free_trees_with_limit(
    n: usize,
    limit: usize,
) -> Result<impl Iterator<Item = TreeCode>, EnumerateError> {
    let mut cursor = FreeTreeCursor::new(n, limit)?;
    Ok(std::iter::from_fn(move || {
        cursor.advance()?;
        Some(TreeCode::from_generator(cursor.levels()))
    }))
}
