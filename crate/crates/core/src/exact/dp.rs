//! Subset dynamic programming: `T(W) = 1 + min T(W \ S)` over independent `S ⊆ W`.

use super::mis::{closed_masks, for_each_mis_mask};
use super::table::SubsetTable;
use crate::colouring::{Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DP_MAX_N: usize = 24;

/// Returns `chi(G)` and the table `T(W) = chi(G[W])`.
///
/// With `use_maximal`, the minimum runs only over maximal independent sets of
/// `G[W]`; otherwise over all non-empty independent subsets.
/// Subsets are processed in increasing bitmask order, which visits every
/// proper subset of `W` before `W`.
pub fn chromatic_number_dp(g: &Graph, use_maximal: bool) -> Result<(usize, SubsetTable<u8>)> {
    let n = g.n();
    if n > DP_MAX_N {
        return Err(Error::Resource(format!(
            "subset dynamic programming on {n} vertices exceeds {DP_MAX_N}"
        )));
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let full = (1usize << n) - 1;
    let mut t = vec![0u8; full + 1];
    if use_maximal {
        let closed = closed_masks(g).expect("n <= 64");
        for w in 1..=full {
            let mut best = u8::MAX;
            for_each_mis_mask(&closed, w as u64, &mut |s| {
                best = best.min(t[w & !(s as usize)]);
            });
            t[w] = best + 1;
        }
    } else {
        let mut independent = vec![false; full + 1];
        independent[0] = true;
        for s in 1..=full {
            let v = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            independent[s] = independent[rest] && adj[v] as usize & rest == 0;
        }
        for w in 1..=full {
            let mut best = u8::MAX;
            let mut s = w;
            while s != 0 {
                if independent[s] {
                    best = best.min(t[w & !s]);
                }
                s = (s - 1) & w;
            }
            t[w] = best + 1;
        }
    }
    Ok((t[full] as usize, SubsetTable::new(n, t)))
}

/// An optimal colouring read back from a table of `chromatic_number_dp`:
/// repeatedly removes an independent set `S` of the remaining vertices `W`
/// with `T(W \ S) = T(W) - 1`, trying subsets in decreasing mask order.
pub fn colouring_from_table(g: &Graph, table: &SubsetTable<u8>) -> Colouring {
    let n = g.n();
    assert_eq!(table.n(), n, "table belongs to a graph of the same order");
    let adj = g.adjacency_masks().expect("n <= 64");
    let independent = |s: u64| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0);
    let mut f = Colouring::uncoloured(n);
    let mut w = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut colour: Colour = 0;
    while w != 0 {
        colour += 1;
        let target = table.get_mask(w) - 1;
        let mut s = w;
        while !(independent(s) && table.get_mask(w & !s) == target) {
            s = (s - 1) & w;
            assert!(s != 0, "table is not a colouring table for this graph");
        }
        for v in (0..n).filter(|&v| s >> v & 1 == 1) {
            f.set(v, colour);
        }
        w &= !s;
    }
    f
}
