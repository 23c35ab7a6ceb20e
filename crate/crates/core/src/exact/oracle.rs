//! Exhaustive search over all maps `V -> {1..q}`.
//!
//! Maps are explored in lexicographic order with vertex 0 most significant.
//! A prefix that already violates an edge is skipped together with all its
//! extensions, which changes neither the first proper map found nor the count.

use num_bigint::BigUint;

use crate::colouring::{Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `q^n` accepted without an explicit limit.
pub const EXHAUSTIVE_LIMIT: f64 = 1e9;

fn guard(g: &Graph, q: Colour, limit: f64) -> Result<()> {
    let size = (q as f64).powi(g.n() as i32);
    if size > limit {
        return Err(Error::Resource(format!(
            "exhaustive search over {q}^{} maps exceeds {limit:e}",
            g.n()
        )));
    }
    Ok(())
}

/// The lexicographically first proper colouring with colours `1..=q`.
pub fn exhaustive_decide(g: &Graph, q: Colour) -> Result<Option<Colouring>> {
    exhaustive_decide_with_limit(g, q, EXHAUSTIVE_LIMIT)
}

pub fn exhaustive_decide_with_limit(g: &Graph, q: Colour, limit: f64) -> Result<Option<Colouring>> {
    guard(g, q, limit)?;
    let mut f = vec![0; g.n()];
    let mut found = None;
    search(g, q, &mut f, 0, &mut |f| {
        found = Some(Colouring::from_total(f.to_vec()));
        false
    });
    Ok(found)
}

/// The number of proper colourings with colours `1..=q`.
pub fn count_colourings_bruteforce(g: &Graph, q: Colour) -> Result<BigUint> {
    guard(g, q, EXHAUSTIVE_LIMIT)?;
    let mut f = vec![0; g.n()];
    let mut count = 0u64;
    search(g, q, &mut f, 0, &mut |_| {
        count += 1;
        true
    });
    Ok(BigUint::from(count))
}

/// Smallest `q` for which [`exhaustive_decide`] succeeds.
pub fn least_colourable_q(g: &Graph) -> Result<Colour> {
    for q in 0..=g.n() as Colour {
        if q == 0 && g.n() > 0 {
            continue;
        }
        if exhaustive_decide(g, q)?.is_some() {
            return Ok(q);
        }
    }
    unreachable!("n colours always suffice")
}

// Returns false once `visit` asks to stop.
fn search(
    g: &Graph,
    q: Colour,
    f: &mut Vec<Colour>,
    v: usize,
    visit: &mut impl FnMut(&[Colour]) -> bool,
) -> bool {
    if v == g.n() {
        return visit(f);
    }
    for c in 1..=q {
        if g.neighbours(v).iter().all(|&w| w > v || f[w] != c) {
            f[v] = c;
            if !search(g, q, f, v + 1, visit) {
                return false;
            }
        }
    }
    f[v] = 0;
    true
}
