//! Glauber dynamics for sampling proper q-colourings.
//!
//! Each step picks a uniform vertex `v` and a uniform colour `c` and recolours
//! `v` with `c` unless a neighbour already has it. Vertex and colour draws
//! come from two separate substreams of the seed, so coupled chains can share
//! them exactly.

use rand::RngExt;

use crate::colouring::{verify_colouring, Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::{greedy_colour, make_ordering, OrderingStrategy};
use crate::rng;

/// `ceil(q n ln(2n) / (q - 4Δ))`, the step count that guarantees mixing.
pub fn mixing_time(g: &Graph, q: Colour) -> Result<u64> {
    let n = g.n();
    let four_delta = 4 * g.max_degree() as u64;
    if (q as u64) <= four_delta {
        return Err(Error::Domain(format!(
            "mixing bound needs q > 4Δ = {four_delta}, got q = {q}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("mixing bound undefined for the empty graph".into()));
    }
    let t = q as f64 * n as f64 * (2.0 * n as f64).ln() / (q as f64 - four_delta as f64);
    Ok(t.ceil() as u64)
}

/// One step with a given proposal; returns whether it was accepted.
pub fn glauber_step_in_place(g: &Graph, f: &mut Colouring, v: usize, c: Colour) -> bool {
    let blocked = g.neighbours(v).iter().any(|&w| f.get(w) == Some(c));
    if !blocked {
        f.set(v, c);
    }
    !blocked
}

pub fn glauber_step(g: &Graph, f: &Colouring, v: usize, c: Colour) -> Colouring {
    let mut next = f.clone();
    glauber_step_in_place(g, &mut next, v, c);
    next
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainConfig {
    pub q: Colour,
    pub steps: u64,
    pub seed: u64,
    pub initial: Colouring,
    /// Run even when `q <= 4Δ`, where no mixing guarantee holds.
    pub allow_unproven: bool,
}

impl ChainConfig {
    /// Greedy start and the guaranteed step count.
    pub fn standard(g: &Graph, q: Colour, seed: u64) -> Result<Self> {
        Ok(Self {
            q,
            steps: mixing_time(g, q)?,
            seed,
            initial: greedy_colour(g, &make_ordering(g, OrderingStrategy::Given)),
            allow_unproven: false,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub colouring: Colouring,
    /// False when the run was outside the proven regime `q > 4Δ`.
    pub guaranteed: bool,
}

/// Proposal streams for one chain.
pub struct Proposals {
    vertices: rng::Rng,
    colours: rng::Rng,
    n: u64,
    q: Colour,
}

impl Proposals {
    pub fn new(seed: u64, n: usize, q: Colour) -> Self {
        Self {
            vertices: rng::substream(seed, 0),
            colours: rng::substream(seed, 1),
            n: n as u64,
            q,
        }
    }

    pub fn next_proposal(&mut self) -> (usize, Colour) {
        let v = self.vertices.random_range(0..self.n) as usize;
        let c = self.colours.random_range(1..=self.q);
        (v, c)
    }
}

/// Runs the chain for `cfg.steps` steps from `cfg.initial`.
pub fn metropolis_sample(g: &Graph, cfg: &ChainConfig) -> Result<Sample> {
    if !verify_colouring(g, &cfg.initial, cfg.q) {
        return Err(Error::Input(format!(
            "initial colouring is not a proper {}-colouring",
            cfg.q
        )));
    }
    let guaranteed = cfg.q as u64 > 4 * g.max_degree() as u64;
    if !guaranteed && !cfg.allow_unproven {
        return Err(Error::Domain(format!(
            "q = {} is not above 4Δ = {}; set allow_unproven to run anyway",
            cfg.q,
            4 * g.max_degree()
        )));
    }
    if cfg.steps == 0 {
        return Err(Error::Input("a chain needs at least one step".into()));
    }
    let mut f = cfg.initial.clone();
    if g.n() > 0 {
        let mut proposals = Proposals::new(cfg.seed, g.n(), cfg.q);
        for _ in 0..cfg.steps {
            let (v, c) = proposals.next_proposal();
            glauber_step_in_place(g, &mut f, v, c);
        }
    }
    Ok(Sample {
        colouring: f,
        guaranteed,
    })
}

/// Runs two chains with shared proposals, reporting the number of
/// disagreeing vertices after every step. Returns the final pair.
pub fn coupled_run(
    g: &Graph,
    q: Colour,
    start: (&Colouring, &Colouring),
    seed: u64,
    steps: u64,
    mut on_step: impl FnMut(usize),
) -> (Colouring, Colouring) {
    let (mut a, mut b) = (start.0.clone(), start.1.clone());
    if g.n() == 0 {
        return (a, b);
    }
    let mut proposals = Proposals::new(seed, g.n(), q);
    for _ in 0..steps {
        let (v, c) = proposals.next_proposal();
        glauber_step_in_place(g, &mut a, v, c);
        glauber_step_in_place(g, &mut b, v, c);
        on_step((0..g.n()).filter(|&u| a.get(u) != b.get(u)).count());
    }
    (a, b)
}

/// Fraction of seeds for which two coupled chains from `start` agree after
/// `steps` steps.
pub fn coupling_probe_from(
    g: &Graph,
    q: Colour,
    start: (&Colouring, &Colouring),
    seeds: impl IntoIterator<Item = u64>,
    steps: u64,
) -> f64 {
    let (mut agree, mut total) = (0usize, 0usize);
    for seed in seeds {
        let (a, b) = coupled_run(g, q, start, seed, steps, |_| {});
        agree += usize::from(a == b);
        total += 1;
    }
    agree as f64 / total.max(1) as f64
}

/// Coupling agreement after the guaranteed step count, starting from the
/// index-order greedy colouring and from the reverse-order greedy colouring
/// with colours mirrored (`c -> q + 1 - c`), which differ at every vertex.
pub fn coupling_probe(g: &Graph, q: Colour, seeds: impl IntoIterator<Item = u64>) -> Result<f64> {
    let steps = mixing_time(g, q)?;
    let first = greedy_colour(g, &make_ordering(g, OrderingStrategy::Given));
    let reverse: Vec<usize> = (0..g.n()).rev().collect();
    let mirrored = greedy_colour(g, &reverse);
    let second = Colouring::from_total(
        (0..g.n())
            .map(|v| q + 1 - mirrored.get(v).expect("total colouring"))
            .collect(),
    );
    Ok(coupling_probe_from(g, q, (&first, &second), seeds, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::count_colourings_bruteforce;
    use crate::families;
    use proptest::prelude::*;
    use statrs::distribution::{ChiSquared, ContinuousCDF};

    #[test]
    fn mixing_times() {
        assert_eq!(mixing_time(&families::complete(2), 9).unwrap(), 5);
        assert_eq!(mixing_time(&families::cycle(4), 9).unwrap(), 75);
        assert!(matches!(mixing_time(&families::cycle(4), 8), Err(Error::Domain(_))));
    }

    #[test]
    fn steps_on_an_edge() {
        let k2 = families::complete(2);
        let f = Colouring::from_total(vec![1, 2]);
        assert_eq!(glauber_step(&k2, &f, 0, 2), f);
        assert_eq!(glauber_step(&k2, &f, 0, 3), Colouring::from_total(vec![3, 2]));
    }

    #[test]
    fn reproducible() {
        let k2 = families::complete(2);
        let cfg = ChainConfig::standard(&k2, 9, 42).unwrap();
        assert_eq!(cfg.steps, 5);
        let a = metropolis_sample(&k2, &cfg).unwrap();
        let b = metropolis_sample(&k2, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.guaranteed);
        assert!(verify_colouring(&k2, &a.colouring, 9));
    }

    #[test]
    fn relaxed_guard() {
        let g = families::empty(3);
        let mut seen = std::collections::HashSet::new();
        for seed in 0..200 {
            let cfg = ChainConfig {
                q: 2,
                steps: 1,
                seed,
                initial: Colouring::from_total(vec![1, 1, 1]),
                allow_unproven: true,
            };
            let s = metropolis_sample(&g, &cfg).unwrap();
            assert!(verify_colouring(&g, &s.colouring, 2));
            seen.insert(s.colouring);
        }
        assert!(seen.len() >= 2);
        let strict = ChainConfig {
            q: 4,
            steps: 5,
            seed: 0,
            initial: Colouring::from_total(vec![1, 2]),
            allow_unproven: false,
        };
        assert!(matches!(metropolis_sample(&families::complete(2), &strict), Err(Error::Domain(_))));
        let bad = ChainConfig {
            initial: Colouring::from_total(vec![1, 1]),
            q: 9,
            ..strict
        };
        assert!(matches!(metropolis_sample(&families::complete(2), &bad), Err(Error::Input(_))));
    }

    #[test]
    fn uniform_on_an_edge() {
        let k2 = families::complete(2);
        let q = 9;
        assert_eq!(count_colourings_bruteforce(&k2, q).unwrap(), 72u32.into());
        let samples = 100_000u64;
        let mut counts = vec![0u64; 81];
        for seed in 0..samples {
            let cfg = ChainConfig {
                steps: 25,
                ..ChainConfig::standard(&k2, q, seed).unwrap()
            };
            let f = metropolis_sample(&k2, &cfg).unwrap().colouring;
            let (a, b) = (f.get(0).unwrap(), f.get(1).unwrap());
            counts[((a - 1) * 9 + (b - 1)) as usize] += 1;
        }
        let expected = samples as f64 / 72.0;
        let mut chi2 = 0.0;
        for a in 0..9 {
            for b in 0..9 {
                let observed = counts[a * 9 + b] as f64;
                if a == b {
                    assert_eq!(observed, 0.0);
                } else {
                    chi2 += (observed - expected).powi(2) / expected;
                }
            }
        }
        let critical = ChiSquared::new(71.0).unwrap().inverse_cdf(0.999);
        assert!(chi2 < critical, "chi2 {chi2} >= {critical}");
    }

    #[test]
    fn coupling_examples() {
        let k2 = families::complete(2);
        let agree = coupling_probe(&k2, 9, 0..1000).unwrap();
        let sigma = (0.25f64 / 1000.0).sqrt();
        assert!(agree >= 0.5 - 3.0 * sigma, "agreement {agree}");
        let c4 = families::cycle(4);
        assert!(coupling_probe(&c4, 9, 0..1000).unwrap() >= 0.5 - 3.0 * sigma);
        let f = Colouring::from_total(vec![1, 2]);
        assert_eq!(coupling_probe_from(&k2, 9, (&f, &f), 0..50, 25), 1.0);
    }

    proptest! {
        #[test]
        fn steps_preserve_validity(n in 1usize..=12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = families::random_gnp(n, p, seed);
            let q = g.max_degree() as Colour + 2;
            let mut f = greedy_colour(&g, &make_ordering(&g, OrderingStrategy::Given));
            let mut proposals = Proposals::new(seed, n, q);
            for _ in 0..1000 {
                let (v, c) = proposals.next_proposal();
                glauber_step_in_place(&g, &mut f, v, c);
                prop_assert!(verify_colouring(&g, &f, q));
            }
        }

        #[test]
        fn disagreement_moves_by_at_most_one(n in 1usize..=10, p in 0.0f64..0.5, seed in any::<u64>()) {
            let g = families::random_gnp(n, p, seed);
            let q = 4 * g.max_degree() as Colour + 1;
            let a = greedy_colour(&g, &make_ordering(&g, OrderingStrategy::Given));
            let b = Colouring::from_total((0..n).map(|v| q + 1 - a.get(v).unwrap()).collect());
            let mut last = (0..n).filter(|&v| a.get(v) != b.get(v)).count();
            coupled_run(&g, q, (&a, &b), seed, 500, |d| {
                assert!(d.abs_diff(last) <= 1);
                last = d;
            });
        }
    }
}
