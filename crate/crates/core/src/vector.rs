//! Vector colouring and random-hyperplane rounding.
//!
//! A vector q-colouring places every vertex on the unit sphere so that
//! adjacent vertices have inner product at most `-1/(q-1)`. It is found here
//! by a low-rank first-order method: vectors live on the sphere in a small
//! dimension, and a squared-hinge penalty on the edges is minimized by
//! projected gradient steps with backtracking and random restarts. Success is
//! checked exactly on the returned vectors; failure proves nothing.

use std::f64::consts::PI;

use rand::RngExt;
use rand_distr::StandardNormal;

use crate::colouring::{Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::{dsatur_colour, greedy_colour, wigderson_peel};
use crate::rng;
use crate::vertex_set::VertexSet;

/// Unit vectors, one per vertex, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorEmbedding {
    dim: usize,
    coords: Vec<f64>,
    /// The `q` the embedding was sought for.
    pub target_q: f64,
}

impl VectorEmbedding {
    pub fn new(vectors: &[Vec<f64>], target_q: f64) -> Self {
        let dim = vectors.first().map_or(0, Vec::len);
        assert!(vectors.iter().all(|v| v.len() == dim), "equal dimensions");
        Self {
            dim,
            coords: vectors.concat(),
            target_q,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len().checked_div(self.dim).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vector(&self, v: usize) -> &[f64] {
        &self.coords[v * self.dim..(v + 1) * self.dim]
    }

    pub fn inner(&self, u: usize, v: usize) -> f64 {
        dot(self.vector(u), self.vector(v))
    }

    /// Largest inner product over edges, recomputed on every call; `-1` for
    /// a graph without edges.
    pub fn achieved(&self, g: &Graph) -> f64 {
        g.edges()
            .map(|(u, v)| self.inner(u, v))
            .fold(-1.0, f64::max)
    }

    /// Smallest angle between adjacent vectors.
    pub fn min_angle(&self, g: &Graph) -> f64 {
        self.achieved(g).clamp(-1.0, 1.0).acos()
    }

    pub fn max_norm_error(&self) -> f64 {
        (0..self.len())
            .map(|v| (dot(self.vector(v), self.vector(v)).sqrt() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Whether this certifies a vector `q`-colouring of `g` up to `tol`.
    pub fn certifies(&self, g: &Graph, q: f64, tol: f64) -> bool {
        self.len() == g.n()
            && self.max_norm_error() <= 1e-9
            && self.achieved(g) <= -1.0 / (q - 1.0) + tol
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `q` unit vectors in `R^q` with pairwise inner product `-1/(q-1)`: the
/// standard basis recentred on its centroid and rescaled.
pub fn simplex_embedding(q: usize) -> Result<Vec<Vec<f64>>> {
    if q < 2 {
        return Err(Error::Domain(format!("a simplex needs q >= 2, got {q}")));
    }
    let qf = q as f64;
    let on = ((qf - 1.0) / qf).sqrt();
    let off = -1.0 / (qf * (qf - 1.0)).sqrt();
    Ok((0..q)
        .map(|i| (0..q).map(|j| if i == j { on } else { off }).collect())
        .collect())
}

/// Places each colour class of a proper colouring at one simplex corner,
/// giving a vector `q`-colouring with `q` the largest colour used.
pub fn embed_colouring(f: &Colouring) -> Result<VectorEmbedding> {
    let q = (f.palette_size() as usize).max(2);
    let corners = simplex_embedding(q)?;
    let vectors: Vec<Vec<f64>> = (0..f.len())
        .map(|v| corners[f.get(v).expect("total colouring") as usize - 1].clone())
        .collect();
    Ok(VectorEmbedding::new(&vectors, q as f64))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverOptions {
    pub tol: f64,
    pub seed: u64,
    pub max_iters: usize,
    pub restarts: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-3,
            seed: 0,
            max_iters: 20_000,
            restarts: 5,
        }
    }
}

/// Searches for a vector `q`-colouring with `achieved <= -1/(q-1) + tol`.
pub fn solve_vector_colouring(g: &Graph, q: f64, tol: f64, seed: u64, max_iters: usize) -> Option<VectorEmbedding> {
    solve_with(
        g,
        q,
        &SolverOptions {
            tol,
            seed,
            max_iters,
            ..SolverOptions::default()
        },
    )
}

pub fn solve_with(g: &Graph, q: f64, opts: &SolverOptions) -> Option<VectorEmbedding> {
    assert!(q > 1.0 && opts.tol > 0.0, "need q > 1 and tol > 0");
    let n = g.n();
    let threshold = -1.0 / (q - 1.0);
    if g.m() == 0 {
        let mut coords = vec![0.0; n];
        coords.iter_mut().for_each(|x| *x = 1.0);
        return Some(VectorEmbedding {
            dim: 1,
            coords,
            target_q: q,
        });
    }
    let dim = n.min(((2 * n) as f64).sqrt().ceil() as usize + 2);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let aim = threshold - opts.tol / 4.0;
    for restart in 0..opts.restarts.max(1) {
        let mut r = rng::substream(opts.seed, restart as u32);
        let mut x: Vec<f64> = (0..n * dim).map(|_| r.sample(StandardNormal)).collect();
        normalize_rows(&mut x, dim);
        minimize(&edges, &mut x, dim, aim, threshold, opts.max_iters);
        let emb = VectorEmbedding {
            dim,
            coords: x,
            target_q: q,
        };
        if emb.certifies(g, q, opts.tol) {
            return Some(emb);
        }
    }
    None
}

fn normalize_rows(x: &mut [f64], dim: usize) {
    for row in x.chunks_mut(dim) {
        let norm = dot(row, row).sqrt();
        if norm > 0.0 {
            row.iter_mut().for_each(|c| *c /= norm);
        } else {
            row[0] = 1.0;
        }
    }
}

fn penalty(edges: &[(usize, usize)], x: &[f64], dim: usize, aims: &[f64]) -> f64 {
    edges
        .iter()
        .zip(aims)
        .map(|(&(u, v), aim)| {
            let s = dot(&x[u * dim..(u + 1) * dim], &x[v * dim..(v + 1) * dim]) - aim;
            if s > 0.0 {
                s * s
            } else {
                0.0
            }
        })
        .sum()
}

fn edge_products<'a>(edges: &'a [(usize, usize)], x: &'a [f64], dim: usize) -> impl Iterator<Item = f64> + 'a {
    edges
        .iter()
        .map(move |&(u, v)| dot(&x[u * dim..(u + 1) * dim], &x[v * dim..(v + 1) * dim]))
}

fn worst_edge(edges: &[(usize, usize)], x: &[f64], dim: usize) -> f64 {
    edge_products(edges, x, dim).fold(f64::NEG_INFINITY, f64::max)
}

// Augmented-Lagrangian outer loop: every round runs a block of descent
// steps, then lowers the aim of each edge still above `target` by its
// excess.
fn minimize(edges: &[(usize, usize)], x: &mut Vec<f64>, dim: usize, target: f64, stop: f64, max_iters: usize) {
    const BLOCK: usize = 200;
    let mut shifts = vec![0.0; edges.len()];
    let mut aims = vec![target; edges.len()];
    let mut done = 0;
    while done < max_iters {
        let steps = BLOCK.min(max_iters - done);
        done += steps;
        if descend(edges, x, dim, &aims, stop, steps) {
            return;
        }
        for ((shift, aim), s) in shifts.iter_mut().zip(&mut aims).zip(edge_products(edges, x, dim)) {
            *shift = f64::max(0.0, *shift + s - target);
            *aim = target - *shift;
        }
    }
}

// Riemannian gradient descent on the product of spheres with Armijo
// backtracking; returns true once every edge is at or below `stop`.
fn descend(edges: &[(usize, usize)], x: &mut Vec<f64>, dim: usize, aims: &[f64], stop: f64, max_iters: usize) -> bool {
    let mut step = 1.0;
    let mut value = penalty(edges, x, dim, aims);
    let mut grad = vec![0.0; x.len()];
    let mut trial = vec![0.0; x.len()];
    for _ in 0..max_iters {
        if worst_edge(edges, x, dim) <= stop {
            return true;
        }
        if value == 0.0 {
            return false;
        }
        grad.iter_mut().for_each(|g| *g = 0.0);
        for (&(u, v), aim) in edges.iter().zip(aims) {
            let s = dot(&x[u * dim..(u + 1) * dim], &x[v * dim..(v + 1) * dim]) - aim;
            if s > 0.0 {
                for k in 0..dim {
                    grad[u * dim + k] += 2.0 * s * x[v * dim + k];
                    grad[v * dim + k] += 2.0 * s * x[u * dim + k];
                }
            }
        }
        for (gr, xr) in grad.chunks_mut(dim).zip(x.chunks(dim)) {
            let radial = dot(gr, xr);
            gr.iter_mut().zip(xr).for_each(|(g, x)| *g -= radial * x);
        }
        let norm2 = dot(&grad, &grad);
        if norm2 < 1e-30 {
            return false;
        }
        step *= 2.0;
        loop {
            trial
                .iter_mut()
                .zip(x.iter().zip(&grad))
                .for_each(|(t, (x, g))| *t = x - step * g);
            normalize_rows(&mut trial, dim);
            let next = penalty(edges, &trial, dim, aims);
            if next <= value - 1e-4 * step * norm2 {
                std::mem::swap(x, &mut trial);
                value = next;
                break;
            }
            step /= 2.0;
            if step < 1e-14 {
                return false;
            }
        }
    }
    worst_edge(edges, x, dim) <= stop
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = g.neighbours(start).to_vec();
        candidates.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in candidates {
            if clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Upper estimate of the vector chromatic number: bisection on solver
/// feasibility between a clique lower bound and a colouring upper bound,
/// returning the bracket midpoint once its width is at most `tol`.
pub fn vector_chromatic_number(g: &Graph, tol: f64, seed: u64) -> f64 {
    if g.m() == 0 {
        return 1.0;
    }
    let mut lo = greedy_clique(g).max(2) as f64;
    let mut hi = dsatur_colour(g).palette_size().max(2) as f64;
    let solve_tol = tol / 10.0;
    while hi - lo > tol {
        let mid = (lo + hi) / 2.0;
        if solve_vector_colouring(g, mid, solve_tol, seed, 20_000).is_some() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / 2.0
}

/// `ceil(log_{π/(π-α)} (2Δ))`.
pub fn hyperplane_count(delta: usize, alpha: f64) -> Result<u32> {
    if !(alpha > 0.0 && alpha < PI) || delta == 0 {
        return Err(Error::Domain(format!(
            "hyperplane count needs 0 < α < π and Δ >= 1, got α = {alpha}, Δ = {delta}"
        )));
    }
    let r = ((2.0 * delta as f64).ln() / (PI / (PI - alpha)).ln()).ceil();
    Ok((r as u32).max(1))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundingOutcome {
    /// `b_r ... b_1` as an integer, `b_i = 1` iff the vector lies strictly on
    /// the positive side of hyperplane `i`.
    pub labels: Vec<u32>,
    pub monochromatic: Vec<(usize, usize)>,
    pub hyperplanes: Vec<Vec<f64>>,
}

/// Rounds with `r` hyperplanes whose normals are standard Gaussian.
pub fn round_embedding(g: &Graph, x: &VectorEmbedding, r: u32, seed: u64) -> RoundingOutcome {
    let mut rng = rng::from_seed(seed);
    let hyperplanes: Vec<Vec<f64>> = (0..r)
        .map(|_| (0..x.dim()).map(|_| rng.sample(StandardNormal)).collect())
        .collect();
    let labels: Vec<u32> = (0..x.len())
        .map(|v| {
            hyperplanes
                .iter()
                .enumerate()
                .filter(|(_, h)| dot(x.vector(v), h) > 0.0)
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let monochromatic = g.edges().filter(|&(u, v)| labels[u] == labels[v]).collect();
    RoundingOutcome {
        labels,
        monochromatic,
        hyperplanes,
    }
}

/// Fraction of `trials` random hyperplanes through the origin that separate
/// two unit vectors at angle `phi`.
pub fn separation_rate(phi: f64, trials: usize, seed: u64) -> f64 {
    let pair = VectorEmbedding::new(&[vec![1.0, 0.0], vec![phi.cos(), phi.sin()]], 2.0);
    let edge = Graph::new(2, [(0, 1)]).expect("valid edge");
    let mut r = rng::from_seed(seed);
    let separated = (0..trials)
        .filter(|_| round_embedding(&edge, &pair, 1, r.random()).monochromatic.is_empty())
        .count();
    separated as f64 / trials as f64
}

/// `ε` in the vector `(3 + ε)`-colouring used for rounding.
pub const KMS_EPSILON: f64 = 2e-5;
const KMS_TOL: f64 = 1e-3;
const KMS_REDRAWS: usize = 3;
const KMS_MAX_LEVELS: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct KmsLevel {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub hyperplanes: u32,
    pub monochromatic: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KmsOutcome {
    pub colouring: Colouring,
    pub levels: Vec<KmsLevel>,
}

/// Recursive hyperplane rounding for 3-colourable graphs.
///
/// Each level vector-colours the residual graph, rounds it with `r`
/// hyperplanes (redrawing up to three times while more than half the edges
/// stay monochromatic, keeping the best draw), gives every vertex outside
/// the monochromatic edges a colour from a fresh block of `2^r`, and recurses
/// on the endpoints of the monochromatic edges. If the recursion gets
/// unusually deep the remainder is coloured greedily with fresh colours.
pub fn kms_colour(g: &Graph, seed: u64) -> Result<KmsOutcome> {
    let mut f = Colouring::uncoloured(g.n());
    let levels = kms_into(g, &VertexSet::full(g.n()), &mut f, 0, seed)?;
    Ok(KmsOutcome {
        colouring: f.compacted(),
        levels,
    })
}

fn kms_into(
    g: &Graph,
    start: &VertexSet,
    f: &mut Colouring,
    mut base: Colour,
    seed: u64,
) -> Result<Vec<KmsLevel>> {
    let mut rest = start.clone();
    let mut levels = Vec::new();
    let mut level_seed = rng::from_seed(seed);
    while !rest.is_empty() {
        let (h, back) = g.induced_subgraph(&rest);
        if h.m() == 0 {
            for &v in &back {
                f.set(v, base + 1);
            }
            break;
        }
        if levels.len() == KMS_MAX_LEVELS {
            let order: Vec<usize> = (0..h.n()).collect();
            let tail = greedy_colour(&h, &order);
            for (i, &v) in back.iter().enumerate() {
                f.set(v, base + tail.get(i).expect("total colouring"));
            }
            break;
        }
        let q = 3.0 + KMS_EPSILON;
        let opts = SolverOptions {
            tol: KMS_TOL,
            seed: level_seed.random(),
            ..SolverOptions::default()
        };
        let x = solve_with(&h, q, &opts).ok_or_else(|| Error::Solver {
            level: levels.len(),
            residual: h.clone(),
        })?;
        let floor = (-1.0 / (2.0 + KMS_EPSILON)).acos();
        let alpha = x.min_angle(&h).max(floor);
        let delta = h.max_degree();
        let r = hyperplane_count(delta, alpha)?;
        let mut best: Option<RoundingOutcome> = None;
        for _ in 0..KMS_REDRAWS {
            let out = round_embedding(&h, &x, r, level_seed.random());
            let better = best
                .as_ref()
                .is_none_or(|b| out.monochromatic.len() < b.monochromatic.len());
            if better {
                best = Some(out);
            }
            if best.as_ref().is_some_and(|b| 2 * b.monochromatic.len() <= h.m()) {
                break;
            }
        }
        let out = best.expect("at least one draw");
        let mut endpoints = VertexSet::new();
        for &(u, v) in &out.monochromatic {
            endpoints.insert(back[u]);
            endpoints.insert(back[v]);
        }
        for (i, &v) in back.iter().enumerate() {
            if !endpoints.contains(v) {
                f.set(v, base + out.labels[i] + 1);
            }
        }
        levels.push(KmsLevel {
            vertices: h.n(),
            edges: h.m(),
            max_degree: delta,
            hyperplanes: r,
            monochromatic: out.monochromatic.len(),
        });
        base += 1 << r;
        rest = endpoints;
    }
    Ok(levels)
}

/// Default peeling threshold `ceil(n^(1/1.631))`.
pub fn hybrid_threshold(n: usize) -> usize {
    (n as f64).powf(1.0 / 1.631).ceil() as usize
}

/// Peels neighbourhoods of vertices with residual degree above `d` as in
/// Wigderson's algorithm, then rounds the remainder with [`kms_colour`]'s
/// procedure using fresh colours.
pub fn hybrid_colour(g: &Graph, d: Option<usize>, seed: u64) -> Result<KmsOutcome> {
    let d = d.unwrap_or_else(|| hybrid_threshold(g.n()));
    let (peeled, rest) = wigderson_peel(g, d + 1)?;
    let mut f = peeled.colouring;
    let base = f.palette_size();
    let levels = kms_into(g, &rest, &mut f, base, seed)?;
    Ok(KmsOutcome {
        colouring: f.compacted(),
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify_colouring;
    use crate::families;

    #[test]
    fn simplex() {
        assert!(matches!(simplex_embedding(1), Err(Error::Domain(_))));
        for q in 2..=10 {
            let s = simplex_embedding(q).unwrap();
            for i in 0..q {
                assert!((dot(&s[i], &s[i]) - 1.0).abs() < 1e-12);
                for j in 0..i {
                    assert!((dot(&s[i], &s[j]) + 1.0 / (q as f64 - 1.0)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn embedded_colourings_hit_the_simplex_value() {
        for seed in 0..10 {
            let g = families::random_gnp(12, 0.4, seed);
            let f = dsatur_colour(&g);
            let emb = embed_colouring(&f).unwrap();
            let q = emb.target_q;
            for (u, v) in g.edges() {
                assert!((emb.inner(u, v) + 1.0 / (q - 1.0)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn solver_examples() {
        let k2 = families::complete(2);
        let x = solve_vector_colouring(&k2, 2.0, 1e-6, 0, 10_000).unwrap();
        assert!(x.achieved(&k2) <= -1.0 + 1e-6);

        let c5 = families::cycle(5);
        let q = 5f64.sqrt() + 1e-3;
        let x = solve_vector_colouring(&c5, q, 1e-3, 0, 20_000).unwrap();
        assert!(x.achieved(&c5) <= -1.0 / (5f64.sqrt() - 1.0) + 1e-3);
        assert!(x.max_norm_error() <= 1e-9);

        let gr = families::grotzsch();
        for q in [3.0 + 2e-5, 3.0 + 1e-3] {
            let x = solve_vector_colouring(&gr, q, 1e-3, 0, 20_000).unwrap();
            assert!(x.certifies(&gr, q, 1e-3));
        }
    }

    #[test]
    fn solver_respects_cliques() {
        for r in 3..=6 {
            let g = families::complete(r).disjoint_union(&families::random_gnp(6, 0.3, r as u64));
            let q = r as f64 - 0.3;
            assert!(solve_vector_colouring(&g, q, 1e-3, 1, 5_000).is_none());
        }
    }

    #[test]
    fn vector_chromatic_numbers() {
        let tol = 1e-2;
        assert_eq!(vector_chromatic_number(&families::empty(3), tol, 0), 1.0);
        assert!((vector_chromatic_number(&families::cycle(6), tol, 0) - 2.0).abs() <= tol);
        assert!(vector_chromatic_number(&families::cycle(5), tol, 0) <= 5f64.sqrt() + tol);
        assert!((vector_chromatic_number(&families::complete(4), tol, 0) - 4.0).abs() <= tol);
    }

    #[test]
    fn hyperplane_counts() {
        assert_eq!(hyperplane_count(2, 2.0 * PI / 3.0).unwrap(), 2);
        for alpha in [0.3, 1.0, 2.0, 3.0] {
            let expected = (2f64.ln() / (PI / (PI - alpha)).ln()).ceil() as u32;
            assert_eq!(hyperplane_count(1, alpha).unwrap(), expected.max(1));
        }
        assert!(hyperplane_count(2, 0.0).is_err());
        assert!(hyperplane_count(2, PI).is_err());
        assert!(hyperplane_count(0, 1.0).is_err());
    }

    #[test]
    fn colours_per_round_bound() {
        let alpha = (-0.5f64).acos();
        for delta in 1..200usize {
            let two_delta = 2.0 * delta as f64;
            let exact = 2f64.powf(two_delta.ln() / (PI / (PI - alpha)).ln());
            assert!(exact <= two_delta.powf(0.631) * (1.0 + 1e-12));
            let r = hyperplane_count(delta, alpha).unwrap();
            assert!(2f64.powi(r as i32) < 2.0 * two_delta.powf(0.631));
        }
    }

    #[test]
    fn rounding_examples() {
        let k2 = families::complete(2);
        let antipodal = VectorEmbedding::new(&[vec![1.0, 0.0], vec![-1.0, 0.0]], 2.0);
        let same = VectorEmbedding::new(&[vec![0.6, 0.8], vec![0.6, 0.8]], 2.0);
        for seed in 0..100 {
            assert!(round_embedding(&k2, &antipodal, 1, seed).monochromatic.is_empty());
            assert_eq!(round_embedding(&k2, &same, 3, seed).monochromatic.len(), 1);
            let out = round_embedding(&k2, &antipodal, 3, seed);
            assert!(out.labels.iter().all(|&l| l < 8));
            assert_eq!(out.hyperplanes.len(), 3);
        }
        let mono = 1.0 - separation_rate(PI / 2.0, 100_000, 9);
        assert!((mono - 0.5).abs() <= 0.005);
    }

    #[test]
    fn separation_matches_angle() {
        let trials = 100_000;
        for (i, phi) in [PI / 6.0, PI / 2.0, 2.0 * PI / 3.0, 0.9 * PI].into_iter().enumerate() {
            let p = phi / PI;
            let sigma = (p * (1.0 - p) / trials as f64).sqrt();
            let rate = separation_rate(phi, trials, 1000 + i as u64);
            assert!((rate - p).abs() <= 3.0 * sigma, "φ = {phi}: {rate}");
        }
    }

    #[test]
    fn first_round_monochromatic_edges() {
        let (g, _) = families::planted_3col(40, 0.25, 11);
        let q = 3.0 + KMS_EPSILON;
        let x = solve_vector_colouring(&g, q, 1e-3, 0, 20_000).unwrap();
        let floor = (-1.0 / (2.0 + KMS_EPSILON)).acos();
        let alpha = x.min_angle(&g).max(floor);
        let r = hyperplane_count(g.max_degree(), alpha).unwrap();
        let rounds = 2000;
        let total: usize = (0..rounds)
            .map(|seed| round_embedding(&g, &x, r, seed).monochromatic.len())
            .sum();
        let mean = total as f64 / rounds as f64;
        let bound = g.m() as f64 / (2.0 * g.max_degree() as f64);
        assert!(mean <= bound * 1.1, "mean |M| = {mean}, bound {bound}");
    }

    #[test]
    fn kms_examples() {
        let gr = families::grotzsch();
        let out = kms_colour(&gr, 0).unwrap();
        assert!(verify_colouring(&gr, &out.colouring, out.colouring.palette_size()));
        let k2 = families::complete(2);
        let out = kms_colour(&k2, 0).unwrap();
        assert!(out.colouring.palette_size() <= 2);
    }

    #[test]
    fn kms_on_planted() {
        for seed in 0..5 {
            let (g, _) = families::planted_3col(30, 0.3, seed);
            let out = kms_colour(&g, seed).unwrap();
            assert!(verify_colouring(&g, &out.colouring, out.colouring.palette_size()));
        }
    }

    #[test]
    fn hybrid_examples() {
        let (g, _) = families::planted_3col(30, 0.2, 3);
        let n = g.n();
        let plain = kms_colour(&g, 7).unwrap();
        assert_eq!(hybrid_colour(&g, Some(n), 7).unwrap(), plain);
        let mixed = hybrid_colour(&g, None, 7).unwrap();
        assert!(verify_colouring(&g, &mixed.colouring, mixed.colouring.palette_size()));
        assert!(hybrid_colour(&families::complete(4), Some(1), 0).is_err());
    }

    #[test]
    fn hybrid_against_pure_strategies() {
        let (mut hybrid, mut kms, mut wig) = (0.0, 0.0, 0.0);
        let runs = 10;
        for seed in 0..runs {
            let (g, _) = families::planted_3col(60, 0.15, 100 + seed);
            let h = hybrid_colour(&g, None, seed).unwrap().colouring;
            let k = kms_colour(&g, seed).unwrap().colouring;
            let w = crate::greedy::wigderson_colour(&g).unwrap().colouring;
            for f in [&h, &k, &w] {
                assert!(verify_colouring(&g, f, f.palette_size()));
            }
            hybrid += h.distinct_colours() as f64;
            kms += k.distinct_colours() as f64;
            wig += w.distinct_colours() as f64;
        }
        let (hybrid, kms, wig) = (hybrid / runs as f64, kms / runs as f64, wig / runs as f64);
        assert!(hybrid <= kms.max(wig) + 1.0, "hybrid {hybrid}, kms {kms}, wigderson {wig}");
    }
}
