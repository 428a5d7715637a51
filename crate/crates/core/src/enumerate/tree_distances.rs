//! Distance distributions of level-sequence trees, updated incrementally.
//!
//! In a level sequence every vertex comes after its parent and after all
//! vertices that precede it in preorder, so for `j < i` the distance
//! `d(i, j)` is `d(parent(i), j) + 1`. Rows depend only on earlier rows,
//! and when the generator rewrites a suffix of the sequence only the rows of
//! that suffix need recomputing. Per-row cumulative histograms make the
//! distribution available without touching the unchanged prefix.

/// Scratch state for one tree order.
#[derive(Debug, Clone)]
pub struct TreeDistances {
    n: usize,
    parent: Vec<usize>,
    dist: Vec<u8>,
    // cumulative[i * n + k]: pairs {j, l} with j < l <= i at distance k
    cumulative: Vec<u32>,
}

impl TreeDistances {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        TreeDistances {
            n,
            parent: vec![0; n],
            dist: vec![0; n * n],
            cumulative: vec![0; n * n],
        }
    }

    /// Recomputes rows `from..n` for `levels`. Rows before `from` must
    /// describe the same prefix as the previous call.
    pub fn update(&mut self, levels: &[u8], from: usize) {
        let n = self.n;
        debug_assert_eq!(levels.len(), n);
        for i in from.max(1)..n {
            let mut p = i - 1;
            while levels[p] >= levels[i] {
                p = self.parent[p];
            }
            self.parent[i] = p;

            let (before, rest) = self.cumulative.split_at_mut(i * n);
            let row_hist = &mut rest[..n];
            row_hist.copy_from_slice(&before[(i - 1) * n..]);
            for j in 0..i {
                let d = self.dist[p * n + j] + 1;
                self.dist[i * n + j] = d;
                self.dist[j * n + i] = d;
                row_hist[d as usize] += 1;
            }
        }
    }

    /// `alpha[k]` for `k = 0 .. n` (trailing zeros included). Entry 0 is `n`.
    pub fn alpha(&self) -> &[u32] {
        &self.cumulative[(self.n - 1) * self.n..]
    }

    /// Writes the full coefficient vector, `alpha[0] = n`, into `out`.
    pub fn alpha_into(&self, out: &mut [u32]) {
        out.copy_from_slice(self.alpha());
        out[0] = self.n as u32;
    }
}
