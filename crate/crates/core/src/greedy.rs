//! Greedy colouring heuristics and bipartition-based algorithms.

use std::cmp::Reverse;
use std::collections::{BTreeSet, VecDeque};

use rand::RngExt;

use crate::colouring::{Colour, Colouring, OddCycleCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingStrategy {
    Given,
    LargestFirst,
    SmallestLast,
    /// The order in which DSATUR colours the vertices.
    Dsatur,
    Random(u64),
}

/// A permutation of the vertices according to `strategy`.
pub fn make_ordering(g: &Graph, strategy: OrderingStrategy) -> Vec<usize> {
    match strategy {
        OrderingStrategy::Given => (0..g.n()).collect(),
        OrderingStrategy::LargestFirst => {
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.sort_by_key(|&v| Reverse(g.degree(v)));
            order
        }
        OrderingStrategy::SmallestLast => g.degeneracy_ordering().0,
        OrderingStrategy::Dsatur => dsatur(g).1,
        OrderingStrategy::Random(seed) => {
            let mut order: Vec<usize> = (0..g.n()).collect();
            let mut r = rng::from_seed(seed);
            for i in (1..order.len()).rev() {
                let j = r.random_range(0..=i as u64) as usize;
                order.swap(i, j);
            }
            order
        }
    }
}

/// Greedy colouring: visits vertices in `order` and gives each the smallest colour
/// not used by an already coloured neighbour.
pub fn greedy_colour(g: &Graph, order: &[usize]) -> Colouring {
    let mut f = Colouring::uncoloured(g.n());
    let mut taken: Vec<usize> = vec![usize::MAX; g.max_degree() + 2];
    for (step, &v) in order.iter().enumerate() {
        for &w in g.neighbours(v) {
            if let Some(c) = f.get(w) {
                if (c as usize) < taken.len() {
                    taken[c as usize] = step;
                }
            }
        }
        let c = (1..taken.len())
            .find(|&c| taken[c] != step)
            .expect("deg + 1 colours always suffice");
        f.set(v, c as Colour);
    }
    f
}

pub fn colour_with(g: &Graph, strategy: OrderingStrategy) -> Colouring {
    match strategy {
        OrderingStrategy::Dsatur => dsatur_colour(g),
        s => greedy_colour(g, &make_ordering(g, s)),
    }
}

/// DSATUR: repeatedly colours the uncoloured vertex with the most distinct
/// colours among its neighbours, breaking ties by larger degree and then by
/// lower index.
pub fn dsatur_colour(g: &Graph) -> Colouring {
    dsatur(g).0
}

fn dsatur(g: &Graph) -> (Colouring, Vec<usize>) {
    let n = g.n();
    let mut f = Colouring::uncoloured(n);
    let mut seen: Vec<BTreeSet<Colour>> = vec![BTreeSet::new(); n];
    let key = |v: usize, sat: usize| (Reverse(sat), Reverse(g.degree(v)), v);
    let mut queue: BTreeSet<(Reverse<usize>, Reverse<usize>, usize)> =
        (0..n).map(|v| key(v, 0)).collect();
    let mut order = Vec::with_capacity(n);
    while let Some((_, _, v)) = queue.pop_first() {
        let c = (1..).find(|c| !seen[v].contains(c)).expect("unbounded range");
        f.set(v, c);
        order.push(v);
        for &w in g.neighbours(v) {
            if f.get(w).is_none() && !seen[w].contains(&c) {
                queue.remove(&key(w, seen[w].len()));
                seen[w].insert(c);
                queue.insert(key(w, seen[w].len()));
            }
        }
    }
    (f, order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    TwoColouring(Colouring),
    OddCycle(OddCycleCertificate),
}

/// Bipartition: breadth-first 2-colouring of every component, followed by a
/// full verification pass. An edge with equal colours at both ends closes an
/// odd cycle through the breadth-first tree, which is returned instead.
pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut f = Colouring::uncoloured(n);
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if f.get(root).is_some() {
            continue;
        }
        f.set(root, 1);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbours(v) {
                if f.get(w).is_none() {
                    f.set(w, 3 - f.get(v).expect("queued vertices are coloured"));
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    match g.edges().find(|&(u, v)| f.get(u) == f.get(v)) {
        None => Bipartition::TwoColouring(f),
        Some((u, v)) => {
            let (mut a, mut b) = (u, v);
            let mut left = Vec::new();
            let mut right = Vec::new();
            while a != b {
                if depth[a] >= depth[b] {
                    left.push(a);
                    a = parent[a];
                } else {
                    right.push(b);
                    b = parent[b];
                }
            }
            left.push(a);
            left.extend(right.into_iter().rev());
            Bipartition::OddCycle(OddCycleCertificate { cycle: left })
        }
    }
}

/// List colouring when every list has at most two colours.
///
/// Vertices are visited in index order; an uncoloured vertex tries its
/// smaller colour and then the other one. Each try propagates forced choices
/// (a neighbour losing one of its two colours must take the other) and is
/// undone if some list runs empty. A successful propagation leaves every
/// uncoloured vertex unconstrained by the coloured ones, so it is never
/// revisited. Returns `None` if no proper list colouring exists.
pub fn list_bipartition(g: &Graph, lists: &[Vec<Colour>]) -> Option<Colouring> {
    assert_eq!(lists.len(), g.n(), "one list per vertex");
    let lists: Vec<Vec<Colour>> = lists
        .iter()
        .map(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l.dedup();
            assert!(l.len() <= 2, "lists must have at most two colours");
            l
        })
        .collect();
    let mut f = Colouring::uncoloured(g.n());
    let mut trail = Vec::new();
    for v in 0..g.n() {
        if f.get(v).is_some() {
            continue;
        }
        let placed = lists[v]
            .iter()
            .any(|&c| propagate(g, &lists, &mut f, &mut trail, v, c));
        if !placed {
            return None;
        }
    }
    Some(f)
}

fn propagate(
    g: &Graph,
    lists: &[Vec<Colour>],
    f: &mut Colouring,
    trail: &mut Vec<usize>,
    start: usize,
    c: Colour,
) -> bool {
    trail.clear();
    f.set(start, c);
    trail.push(start);
    let mut i = 0;
    while i < trail.len() {
        let x = trail[i];
        i += 1;
        let cx = f.get(x).expect("trail vertices are coloured");
        for &w in g.neighbours(x) {
            match f.get(w) {
                Some(cw) if cw == cx => {
                    for &y in trail.iter() {
                        f.clear(y);
                    }
                    return false;
                }
                Some(_) => {}
                None if lists[w].contains(&cx) => {
                    match lists[w].iter().find(|&&d| d != cx) {
                        Some(&d) => {
                            f.set(w, d);
                            trail.push(w);
                        }
                        None => {
                            for &y in trail.iter() {
                                f.clear(y);
                            }
                            return false;
                        }
                    }
                }
                None => {}
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaletteOutcome {
    pub colouring: Colouring,
    /// The lists drawn in the successful round.
    pub lists: Vec<Vec<Colour>>,
    pub rounds: usize,
}

const PALETTES: [[Colour; 2]; 3] = [[1, 2], [2, 3], [1, 3]];

/// Palette restriction: draws a random 2-element list from `{1, 2, 3}` for every
/// vertex and solves the resulting list problem, up to `max_rounds` times.
pub fn palette_restriction_3col(g: &Graph, seed: u64, max_rounds: usize) -> Option<PaletteOutcome> {
    let mut r = rng::from_seed(seed);
    for round in 1..=max_rounds {
        let lists: Vec<Vec<Colour>> = (0..g.n())
            .map(|_| PALETTES[r.random_range(0..3u64) as usize].to_vec())
            .collect();
        if let Some(colouring) = list_bipartition(g, &lists) {
            return Some(PaletteOutcome {
                colouring,
                lists,
                rounds: round,
            });
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WigdersonOutcome {
    pub colouring: Colouring,
    /// Centres whose neighbourhoods were peeled, in order.
    pub peeled: Vec<usize>,
    pub threshold: usize,
}

/// `ceil(sqrt(n))`.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut s = (n as f64).sqrt() as usize;
    while s * s < n {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}

/// Upper bound on the colours used by [`wigderson_colour`] on `n` vertices.
pub fn wigderson_bound(n: usize) -> usize {
    let t = ceil_sqrt(n).max(1);
    2 * n.div_ceil(t) + t + 1
}

/// Wigderson's algorithm for 3-colourable graphs.
///
/// While some remaining vertex has at least `ceil(sqrt(n))` remaining
/// neighbours (lowest index first), its neighbourhood is 2-coloured with
/// fresh colours and removed. The rest is coloured greedily in index order
/// with further fresh colours. A neighbourhood that is not bipartite proves
/// the graph is not 3-colourable.
pub fn wigderson_colour(g: &Graph) -> Result<WigdersonOutcome> {
    wigderson_peel(g, ceil_sqrt(g.n())).map(|(outcome, rest)| {
        let mut outcome = outcome;
        let next = outcome.colouring.palette_size();
        let (h, back) = g.induced_subgraph(&rest);
        let tail = greedy_colour(&h, &make_ordering(&h, OrderingStrategy::Given));
        for (i, &v) in back.iter().enumerate() {
            outcome
                .colouring
                .set(v, next + tail.get(i).expect("total colouring"));
        }
        outcome
    })
}

/// The peeling phase alone: peels neighbourhoods of vertices with remaining degree at
/// least `threshold`. Returns the partial colouring and the unpeeled set.
pub(crate) fn wigderson_peel(g: &Graph, threshold: usize) -> Result<(WigdersonOutcome, VertexSet)> {
    let mut rest = VertexSet::full(g.n());
    let mut f = Colouring::uncoloured(g.n());
    let mut peeled = Vec::new();
    let mut next: Colour = 1;
    let remaining_degree =
        |rest: &VertexSet, v: usize| g.neighbours(v).iter().filter(|&&w| rest.contains(w)).count();
    loop {
        let centre = rest
            .iter()
            .find(|&v| remaining_degree(&rest, v) >= threshold.max(1));
        let Some(v) = centre else { break };
        let hood: VertexSet = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&w| rest.contains(w))
            .collect();
        let (h, back) = g.induced_subgraph(&hood);
        match bipartition(&h) {
            Bipartition::TwoColouring(two) => {
                for (i, &w) in back.iter().enumerate() {
                    f.set(w, next - 1 + two.get(i).expect("total colouring"));
                }
                next += two.palette_size();
            }
            Bipartition::OddCycle(cert) => {
                return Err(Error::NotThreeColourable {
                    centre: v,
                    certificate: OddCycleCertificate {
                        cycle: cert.cycle.iter().map(|&i| back[i]).collect(),
                    },
                });
            }
        }
        rest = rest.difference(&hood);
        peeled.push(v);
    }
    Ok((
        WigdersonOutcome {
            colouring: f,
            peeled,
            threshold,
        },
        rest,
    ))
}

/// True iff `g` admits a proper colouring with colours `1..=q`; used only
/// to cross-check heuristics in tests.
#[cfg(test)]
pub(crate) fn brute_force_colourable(g: &Graph, q: Colour) -> bool {
    let n = g.n();
    let mut f = vec![1; n];
    loop {
        if crate::colouring::verify_colouring(g, &Colouring::from_total(f.clone()), q) {
            return true;
        }
        let mut i = 0;
        while i < n && f[i] == q {
            f[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
        f[i] += 1;
    }
}
