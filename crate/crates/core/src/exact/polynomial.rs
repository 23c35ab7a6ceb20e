//! Chromatic polynomials by edge recurrences and by Whitney's expansion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact coefficients `a_0, ..., a_n` of `P(G, q) = sum a_k q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticPolynomial {
    coeffs: Vec<BigInt>,
}

impl ChromaticPolynomial {
    pub fn from_coefficients(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn evaluate(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, a| acc * &q + a)
    }

    fn monomial(k: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        c
    }

    /// `q^k (q - 1)^(n - k)`.
    fn forest(n: usize, k: usize) -> Vec<BigInt> {
        let mut c = Self::monomial(k);
        for _ in k..n {
            c = times_linear(&c, -1);
        }
        c
    }

    /// `q (q - 1) ... (q - n + 1)`.
    fn falling(n: usize) -> Vec<BigInt> {
        (0..n).fold(vec![BigInt::one()], |c, i| times_linear(&c, -(i as i64)))
    }
}

// Multiplies by (q + shift).
fn times_linear(c: &[BigInt], shift: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); c.len() + 1];
    for (k, a) in c.iter().enumerate() {
        out[k + 1] += a;
        out[k] += a * shift;
    }
    out
}

// a + sign * b
fn combine(a: Vec<BigInt>, b: Vec<BigInt>, sign: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (k, x) in a.into_iter().enumerate() {
        out[k] += x;
    }
    for (k, y) in b.into_iter().enumerate() {
        out[k] += y * sign;
    }
    out
}

impl fmt::Display for ChromaticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = a.abs();
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Which edge recurrence drives the contraction algorithm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RecurrenceDirection {
    /// `P(G) = P(G - e) - P(G / e)` down to edgeless graphs and forests.
    #[default]
    Deletion,
    /// `P(G) = P(G + e) + P(G / e)` up to complete graphs; cheaper on dense
    /// inputs.
    Addition,
}

/// Largest `n + m` (or `n + m̄` for the addition direction) accepted.
pub const CONTRACTION_MAX_SIZE: usize = 40;

pub fn chromatic_polynomial_contraction(g: &Graph) -> Result<ChromaticPolynomial> {
    chromatic_polynomial_with(g, RecurrenceDirection::Deletion)
}

pub fn chromatic_polynomial_with(g: &Graph, direction: RecurrenceDirection) -> Result<ChromaticPolynomial> {
    let n = g.n();
    let size = match direction {
        RecurrenceDirection::Deletion => n + g.m(),
        RecurrenceDirection::Addition => n + n * n.saturating_sub(1) / 2 - g.m(),
    };
    if size > CONTRACTION_MAX_SIZE {
        return Err(Error::Resource(format!(
            "contraction recurrence on size {size} exceeds {CONTRACTION_MAX_SIZE}"
        )));
    }
    let coeffs = match direction {
        RecurrenceDirection::Deletion => deletion(g),
        RecurrenceDirection::Addition => addition(g),
    };
    Ok(ChromaticPolynomial::from_coefficients(coeffs))
}

fn deletion(g: &Graph) -> Vec<BigInt> {
    if g.m() == 0 {
        return ChromaticPolynomial::monomial(g.n());
    }
    if g.is_forest() {
        return ChromaticPolynomial::forest(g.n(), g.components().len());
    }
    let v = (0..g.n())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("non-empty graph");
    let w = g.neighbours(v)[0];
    let minus = g.delete_edge(v, w).expect("edge present");
    let (slash, _) = g.contract_edge(v, w).expect("edge present");
    combine(deletion(&minus), deletion(&slash), -1)
}

fn addition(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    let missing = (0..n)
        .min_by_key(|&v| (g.degree(v), v))
        .filter(|&v| g.degree(v) + 1 < n);
    let Some(v) = missing else {
        return ChromaticPolynomial::falling(n);
    };
    let w = (0..n)
        .find(|&w| w != v && !g.has_edge(v, w))
        .expect("v has a non-neighbour");
    let plus = g.add_edge(v, w).expect("non-edge");
    let (merged, _) = g.identify(v, w).expect("distinct vertices");
    combine(addition(&plus), addition(&merged), 1)
}

/// Largest edge count accepted by the Whitney expansion.
pub const WHITNEY_MAX_M: usize = 30;

/// `P(G, q) = sum over A ⊆ E of (-1)^|A| q^k(A)`, where `k(A)` counts the
/// components of the spanning subgraph `(V, A)`.
pub fn whitney_polynomial(g: &Graph) -> Result<ChromaticPolynomial> {
    if g.m() > WHITNEY_MAX_M {
        return Err(Error::Resource(format!(
            "Whitney expansion over 2^{} edge subsets exceeds 2^{WHITNEY_MAX_M}",
            g.m()
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut signed = vec![0i64; g.n() + 1];
    let mut uf = RollbackUnionFind::new(g.n());
    expand(&edges, 0, 0, &mut uf, &mut signed);
    Ok(ChromaticPolynomial::from_coefficients(
        signed.into_iter().map(BigInt::from).collect(),
    ))
}

pub fn whitney_evaluate(g: &Graph, q: i64) -> Result<BigInt> {
    Ok(whitney_polynomial(g)?.evaluate(q))
}

fn expand(
    edges: &[(usize, usize)],
    i: usize,
    size: usize,
    uf: &mut RollbackUnionFind,
    signed: &mut [i64],
) {
    if i == edges.len() {
        signed[uf.components] += if size.is_multiple_of(2) { 1 } else { -1 };
        return;
    }
    expand(edges, i + 1, size, uf, signed);
    let (u, v) = edges[i];
    let merged = uf.union(u, v);
    expand(edges, i + 1, size + 1, uf, signed);
    if merged {
        uf.rollback();
    }
}

struct RollbackUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
    history: Vec<(usize, usize, bool)>,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
            history: Vec::new(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let bumped = self.rank[a] == self.rank[b];
        if bumped {
            self.rank[a] += 1;
        }
        self.parent[b] = a;
        self.components -= 1;
        self.history.push((a, b, bumped));
        true
    }

    fn rollback(&mut self) {
        let (a, b, bumped) = self.history.pop().expect("a union to undo");
        self.parent[b] = b;
        if bumped {
            self.rank[a] -= 1;
        }
        self.components += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::count_colourings_bruteforce;
    use crate::families;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn edgeless_is_monomial() {
        let p = chromatic_polynomial_contraction(&families::empty(3)).unwrap();
        assert_eq!(p.coefficients(), ints(&[0, 0, 0, 1]).as_slice());
    }

    #[test]
    fn triangle_and_paw() {
        let k3 = chromatic_polynomial_contraction(&families::complete(3)).unwrap();
        assert_eq!(k3.coefficients(), ints(&[0, 2, -3, 1]).as_slice());
        assert_eq!(k3.evaluate(3), 6.into());
        assert_eq!(k3.evaluate(2), 0.into());
        assert_eq!(k3.to_string(), "q^3 - 3q^2 + 2q");
        let paw = chromatic_polynomial_contraction(&families::paw()).unwrap();
        assert_eq!(paw.evaluate(3), 12.into());
    }

    #[test]
    fn whitney_examples() {
        assert_eq!(whitney_evaluate(&families::complete(2), 3).unwrap(), 6.into());
        assert_eq!(whitney_evaluate(&families::empty(4), 5).unwrap(), 625.into());
        assert_eq!(whitney_evaluate(&families::paw(), 3).unwrap(), 12.into());
        assert!(matches!(
            whitney_polynomial(&families::complete(9)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn directions_agree_on_petersen() {
        let g = families::petersen();
        let del = chromatic_polynomial_with(&g, RecurrenceDirection::Deletion).unwrap();
        assert_eq!(del.evaluate(3), 120.into());
        assert_eq!(del.evaluate(2), 0.into());
    }

    #[test]
    fn grotzsch_polynomial_vanishes_at_three() {
        let p = chromatic_polynomial_contraction(&families::grotzsch()).unwrap();
        assert_eq!(p.evaluate(3), 0.into());
        assert!(p.evaluate(4) > 0.into());
    }

    #[test]
    fn complete_graphs_by_addition() {
        for n in 0..8 {
            let p = chromatic_polynomial_with(&families::complete(n), RecurrenceDirection::Addition).unwrap();
            assert_eq!(p.coefficients(), ChromaticPolynomial::from_coefficients(ChromaticPolynomial::falling(n)).coefficients());
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..3 * n.max(1))
                .prop_map(move |edges| Graph::new(n, edges.into_iter().filter(|_| n > 0)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn recurrences_and_expansion_agree_with_counting(g in arb_graph(7)) {
            let del = chromatic_polynomial_contraction(&g).unwrap();
            let add = chromatic_polynomial_with(&g, RecurrenceDirection::Addition).unwrap();
            let whit = whitney_polynomial(&g).unwrap();
            prop_assert_eq!(&del, &add);
            prop_assert_eq!(&del, &whit);
            prop_assert_eq!(del.degree(), g.n());
            if g.n() > 0 {
                prop_assert!(del.coefficients()[g.n()].is_one());
                prop_assert!(del.evaluate(0).is_zero());
                prop_assert_eq!(del.evaluate(1).is_zero(), g.m() >= 1);
            }
            for q in 0..=g.n() as i64 {
                let count = count_colourings_bruteforce(&g, q as u32).unwrap();
                prop_assert_eq!(del.evaluate(q), BigInt::from(count));
            }
        }

        #[test]
        fn deletion_contraction_identity(g in arb_graph(7), pick in any::<usize>(), q in 0i64..6) {
            let edges: Vec<_> = g.edges().collect();
            prop_assume!(!edges.is_empty());
            let (u, v) = edges[pick % edges.len()];
            let p = |h: &Graph| chromatic_polynomial_contraction(h).unwrap().evaluate(q);
            let (slash, _) = g.contract_edge(u, v).unwrap();
            let minus = g.delete_edge(u, v).unwrap();
            prop_assert_eq!(p(&g), p(&minus) - p(&slash));
        }
    }
}
