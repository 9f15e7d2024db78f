//! Breadth-first search for symmetric subsemigroups `H' ⊆ H` of small colength.
//!
//! The children of a node `H'` are the semigroups `H' \ {g}` for `g` a minimal
//! generator of `H'`, so a node at depth `d` has `|H \ H'| = d`. The least depth
//! at which a symmetric node appears bounds `bg(k[H])` from above: it only
//! ranges over monomial subrings.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{inconsistency, Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BgSearchResult {
    pub bound: u32,
    pub best_colength: Option<u64>,
    /// Minimal generators of the first symmetric node found at `best_colength`.
    pub witness: Option<Vec<i64>>,
    pub nodes_visited: usize,
    /// The search stopped before `bound` because a level exceeded the node cap.
    pub truncated: bool,
}

/// Default limit on the number of distinct nodes generated by the search.
pub const DEFAULT_NODE_CAP: usize = 100_000;

pub fn bg_upper_bound(h: &Arc<NumericalSemigroup>, bound: u32) -> Result<BgSearchResult> {
    bg_upper_bound_capped(h, bound, DEFAULT_NODE_CAP)
}

/// As [`bg_upper_bound`], but stops once more than `node_cap` nodes have been generated.
pub fn bg_upper_bound_capped(
    h: &Arc<NumericalSemigroup>,
    bound: u32,
    node_cap: usize,
) -> Result<BgSearchResult> {
    if h.is_full() {
        return Err(Error::FullSemigroup);
    }
    // A node is H minus a set of removed elements; that set identifies it, so
    // duplicates are dropped before the child semigroup is built.
    let mut level: Vec<(Vec<i64>, NumericalSemigroup)> = vec![(Vec::new(), h.as_ref().clone())];
    let mut generated = 1;
    let mut visited = 0;
    let mut truncated = false;

    'search: for depth in 0..=bound {
        visited += level.len();
        for (_, node) in &level {
            if node.is_symmetric()? {
                return Ok(BgSearchResult {
                    bound,
                    best_colength: Some(depth as u64),
                    witness: Some(node.minimal_generators().to_vec()),
                    nodes_visited: visited,
                    truncated: false,
                });
            }
        }
        if depth == bound {
            break;
        }
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut next = Vec::new();
        for (removed, node) in &level {
            for &g in node.minimal_generators() {
                let mut key = removed.clone();
                let at = key.partition_point(|&x| x < g);
                key.insert(at, g);
                if !seen.insert(key.clone()) {
                    continue;
                }
                let child = node.remove_minimal_generator(g).ok_or_else(|| {
                    inconsistency(format!("{g} is not a minimal generator of {node}"))
                })?;
                next.push((key, child));
                generated += 1;
                if generated > node_cap {
                    truncated = true;
                    break 'search;
                }
            }
        }
        level = next;
    }

    Ok(BgSearchResult {
        bound,
        best_colength: None,
        witness: None,
        nodes_visited: visited,
        truncated,
    })
}
