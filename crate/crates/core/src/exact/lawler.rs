//! Lawler's 3-colouring via maximal independent sets.

use super::mis::for_each_maximal_independent_set;
use crate::colouring::Colouring;
use crate::graph::Graph;
use crate::greedy::{bipartition, Bipartition};
use crate::vertex_set::VertexSet;

/// Tries every maximal independent set `S` as colour class 3 and 2-colours
/// `G - S`. Some 3-colouring has a maximal independent class, so this finds
/// one whenever the graph is 3-colourable.
pub fn lawler_3col(g: &Graph) -> Option<Colouring> {
    let all = VertexSet::full(g.n());
    let mut found = None;
    for_each_maximal_independent_set(g, &all, |s| {
        if found.is_some() {
            return;
        }
        let (rest, back) = g.induced_subgraph(&all.difference(s));
        if let Bipartition::TwoColouring(two) = bipartition(&rest) {
            let mut f = Colouring::uncoloured(g.n());
            for v in s.iter() {
                f.set(v, 3);
            }
            for (i, &v) in back.iter().enumerate() {
                f.set(v, two.get(i).expect("total colouring"));
            }
            found = Some(f);
        }
    });
    found
}
