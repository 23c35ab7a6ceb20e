//! Maximal independent sets by Bron–Kerbosch with pivoting, run on the
//! complement: a set is independent in `G` exactly when it is a clique in the
//! complement, so candidates for extending `R` by `v` shrink by `N[v]`.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Calls `visit` once for every maximal independent set of `G[within]`.
pub fn for_each_maximal_independent_set(
    g: &Graph,
    within: &VertexSet,
    mut visit: impl FnMut(&VertexSet),
) {
    let closed: Vec<VertexSet> = (0..g.n())
        .map(|v| {
            let mut s = g.neighbour_set(v);
            s.insert(v);
            s
        })
        .collect();
    let within: VertexSet = within.iter().filter(|&v| v < g.n()).collect();
    bron_kerbosch(&closed, VertexSet::new(), within, VertexSet::new(), &mut visit);
}

pub fn enumerate_maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, &VertexSet::full(g.n()), |s| out.push(s.clone()));
    out
}

fn bron_kerbosch(
    closed: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    visit: &mut impl FnMut(&VertexSet),
) {
    if p.is_empty() {
        if x.is_empty() {
            visit(&r);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.difference(&closed[u]).len())
        .expect("p is non-empty");
    let branch = p.intersection(&closed[pivot]);
    for v in branch.iter() {
        let mut r2 = r.clone();
        r2.insert(v);
        bron_kerbosch(
            closed,
            r2,
            p.difference(&closed[v]),
            x.difference(&closed[v]),
            visit,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Word-sized variant for graphs with at most 64 vertices; `closed[v]` is the
/// bitmask of `N[v]`.
pub(crate) fn for_each_mis_mask(closed: &[u64], within: u64, visit: &mut impl FnMut(u64)) {
    bk_mask(closed, 0, within, 0, visit);
}

fn bk_mask(closed: &[u64], r: u64, mut p: u64, mut x: u64, visit: &mut impl FnMut(u64)) {
    if p == 0 {
        if x == 0 {
            visit(r);
        }
        return;
    }
    let mut best = (0, u32::MAX);
    let mut candidates = p | x;
    while candidates != 0 {
        let u = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let left = (p & !closed[u]).count_ones();
        if best.1 == u32::MAX || left > best.1 {
            best = (u, left);
        }
    }
    let mut branch = p & closed[best.0];
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        bk_mask(closed, r | 1 << v, p & !closed[v], x & !closed[v], visit);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

pub(crate) fn closed_masks(g: &Graph) -> Option<Vec<u64>> {
    g.adjacency_masks()
        .map(|adj| adj.into_iter().enumerate().map(|(v, a)| a | 1 << v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    fn brute_force(g: &Graph) -> Vec<u64> {
        let adj = g.adjacency_masks().unwrap();
        let n = g.n();
        let independent = |s: u64| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0);
        (0u64..1 << n)
            .filter(|&s| independent(s))
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !independent(s | 1 << v)))
            .collect()
    }

    fn sorted_masks(sets: Vec<VertexSet>) -> Vec<u64> {
        let mut m: Vec<u64> = sets.iter().map(|s| s.to_mask().unwrap()).collect();
        m.sort_unstable();
        m
    }

    #[test]
    fn examples() {
        assert_eq!(sorted_masks(enumerate_maximal_independent_sets(&families::complete(3))), vec![1, 2, 4]);
        assert_eq!(enumerate_maximal_independent_sets(&families::two_triangles()).len(), 9);
        let c5 = enumerate_maximal_independent_sets(&families::cycle(5));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|s| s.len() == 2));
        assert_eq!(enumerate_maximal_independent_sets(&families::empty(0)), vec![VertexSet::new()]);
    }

    #[test]
    fn restricted_to_subset() {
        let g = families::cycle(6);
        let within: VertexSet = [0, 1, 2].into_iter().collect();
        let mut got = Vec::new();
        for_each_maximal_independent_set(&g, &within, |s| got.push(s.clone()));
        assert_eq!(sorted_masks(got), vec![0b010, 0b101]);
    }

    proptest! {
        #[test]
        fn matches_filter(n in 0usize..=12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = families::random_gnp(n, p, seed);
            let expected = brute_force(&g);
            prop_assert_eq!(sorted_masks(enumerate_maximal_independent_sets(&g)), expected.clone());
            let closed = closed_masks(&g).unwrap();
            let mut masks = Vec::new();
            for_each_mis_mask(&closed, (1u64 << n) - 1, &mut |s| masks.push(s));
            masks.sort_unstable();
            prop_assert_eq!(masks, expected);
        }
    }
}
