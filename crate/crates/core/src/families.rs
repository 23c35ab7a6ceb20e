//! Named graphs and seeded random instance generators.

use rand::RngExt;

use crate::graph::Graph;
use crate::rng;

pub const PAW_U: usize = 0;
pub const PAW_V: usize = 1;
pub const PAW_W: usize = 2;
pub const PAW_X: usize = 3;

/// Triangle `u, v, w` with a pendant vertex `x` attached to `u`.
pub fn paw() -> Graph {
    Graph::new(
        4,
        [(PAW_X, PAW_U), (PAW_U, PAW_V), (PAW_V, PAW_W), (PAW_W, PAW_U)],
    )
    .expect("valid edges")
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid edges")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("valid edges")
}

/// The cycle `C_n`; for `n < 3` this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    let closing = (n >= 3).then(|| (n - 1, 0));
    Graph::new(n, (1..n).map(|v| (v - 1, v)).chain(closing)).expect("valid edges")
}

/// The star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|v| (0, v))).expect("valid edges")
}

/// Complete bipartite graph minus a perfect matching, on `n` (even)
/// vertices. Vertex `2i` and vertex `2i + 1` form the removed matching pair,
/// so the identity ordering alternates sides and greedy colouring in that
/// order spends `n / 2` colours.
pub fn crown(n: usize) -> Graph {
    assert!(n.is_multiple_of(2), "crown graphs have an even number of vertices");
    let half = n / 2;
    let edges = (0..half).flat_map(move |i| {
        (0..half)
            .filter(move |&j| j != i)
            .map(move |j| (2 * i, 2 * j + 1))
    });
    Graph::new(n, edges).expect("valid edges")
}

pub fn two_triangles() -> Graph {
    complete(3).disjoint_union(&complete(3))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::new(10, outer.chain(inner).chain(spokes)).expect("valid edges")
}

/// The Grötzsch graph: triangle-free with chromatic number 4. Vertex 0 is the
/// hub, 1..=5 its neighbours, 6..=10 the outer rim.
pub fn grotzsch() -> Graph {
    const EDGES: [(usize, usize); 20] = [
        (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
        (7, 3), (3, 9), (9, 5), (5, 11), (2, 8),
        (8, 4), (4, 10), (10, 6), (7, 8), (8, 9),
        (9, 10), (10, 11), (7, 11), (2, 11), (6, 7),
    ];
    Graph::new(11, EDGES.iter().map(|&(a, b)| (a - 1, b - 1))).expect("valid edges")
}

/// Marriage ties between sixteen Florentine families, labelled by their
/// initials; see [`FLORENTINE_LABELS`].
pub fn florentine() -> Graph {
    const EDGES: [(char, char); 20] = [
        ('a', 'm'), ('b', 'c'), ('b', 'm'), ('c', 'e'), ('c', 's'),
        ('d', 't'), ('d', 'i'), ('d', 'l'), ('d', 'z'), ('e', 'i'),
        ('e', 's'), ('g', 'z'), ('i', 's'), ('m', 'r'), ('m', 't'),
        ('m', 'z'), ('m', 'v'), ('p', 'v'), ('r', 's'), ('r', 't'),
    ];
    let id = |c: char| {
        FLORENTINE_LABELS
            .iter()
            .position(|&l| l == c)
            .expect("known label")
    };
    Graph::new(16, EDGES.iter().map(|&(a, b)| (id(a), id(b)))).expect("valid edges")
}

pub const FLORENTINE_LABELS: [char; 16] = [
    'a', 'b', 'c', 'd', 'e', 'g', 'i', 'l', 'm', 'p', 'r', 's', 't', 'u', 'v', 'z',
];

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng::from_seed(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid edges")
}

/// A random 3-colourable graph: each vertex gets a uniformly random class in
/// `0..3`, and each pair in different classes is joined with probability `p`.
/// Returns the graph and the hidden 3-colouring (colours `1..=3`).
pub fn planted_3col(n: usize, p: f64, seed: u64) -> (Graph, Vec<u32>) {
    let mut r = rng::from_seed(seed);
    let class: Vec<u32> = (0..n).map(|_| r.random_range(1..=3u32)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if class[u] != class[v] && r.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    (Graph::new(n, edges).expect("valid edges"), class)
}

/// `count` graphs `G(n, p)` with `n` uniform in `1..=max_n` and `p`
/// uniform in `[0, 1)`, each drawn from its own substream of `seed`.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    assert!(max_n >= 1, "need max_n >= 1");
    (0..count)
        .map(|i| {
            let mut r = rng::substream(seed, i as u32);
            let n = r.random_range(1..=max_n);
            let p: f64 = r.random();
            random_gnp(n, p, r.random())
        })
        .collect()
}

/// Every graph on `n` vertices, one per edge subset of `K_n`, in order of
/// the subset bitmask over canonical edge indices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = complete(n).edges().collect();
    assert!(pairs.len() < 32, "too many graphs to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("valid edges")
    })
}
