//! Run reports and their independent verification.
//!
//! A report carries the payload an algorithm produced and a `verified` flag.
//! The flag is always computed by [`verify_payload`], which re-checks the
//! payload against the instance without trusting the algorithm; `chroma
//! verify` runs the same check on a stored report.

use chroma_core::edge::{verify_edge_colouring, EdgeColouring};
use chroma_core::exact::{
    chromatic_polynomial_with, whitney_polynomial, RecurrenceDirection, WHITNEY_MAX_M,
};
use chroma_core::reductions::{backtrack_colour, ReductionArtifact, Witness};
use chroma_core::vector::VectorEmbedding;
use chroma_core::{verify_colouring, Colour, Colouring, Graph, OddCycleCertificate};
use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::dimacs::{write_dimacs_col, ParsedCnf};
use crate::reduce::{rebuild_reduction, ReductionKind};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceId {
    pub file: Option<String>,
    pub sha256: String,
}

impl InstanceId {
    pub fn of(file: Option<String>, content: &str) -> Self {
        Self {
            file,
            sha256: hex::encode(Sha256::digest(content.as_bytes())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algorithm: String,
    pub instance: InstanceId,
    pub seed: u64,
    pub wall_time_ms: f64,
    pub result: Payload,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Which number a [`Payload::Number`] reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    ChromaticNumber,
    ChromaticIndex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    /// Colours `1..` of vertices `1..=n` in input order.
    Colouring { colours: Vec<Colour>, count: usize },
    /// `[u, v, colour]` with 1-based endpoints, one per edge.
    EdgeColouring { edges: Vec<[usize; 3]>, count: usize },
    /// An exact value with a witness using that many colours. For the
    /// chromatic index the witness colours edges in canonical order.
    Number {
        quantity: Quantity,
        value: usize,
        witness: Vec<Colour>,
    },
    /// Coefficients from the constant term up, as decimal strings.
    Polynomial {
        method: String,
        coefficients: Vec<String>,
        text: String,
    },
    Decision {
        q: Colour,
        colourable: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ie_sum: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<Colour>>,
    },
    /// An odd cycle inside the neighbourhood of `centre`, 1-based; together
    /// they rule out a 3-colouring.
    Certificate { centre: usize, odd_cycle: Vec<usize> },
    Sample {
        q: Colour,
        steps: u64,
        guaranteed: bool,
        colours: Vec<Colour>,
    },
    Embedding {
        target_q: f64,
        tol: f64,
        achieved: f64,
        vectors: Vec<Vec<f64>>,
    },
    Reduction {
        reduction: ReductionKind,
        note: String,
        target_q: Colour,
        n: usize,
        m: usize,
        /// SHA-256 of the reduced graph in DIMACS form.
        graph_sha256: String,
        /// Whether the reduced instance was solved. When false only the
        /// construction itself is checked.
        solved: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        reduced_colouring: Option<Vec<Colour>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<WitnessPayload>,
    },
    Xcheck(crate::xcheck::XcheckSummary),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessPayload {
    Colouring(Vec<Colour>),
    Assignment(Vec<bool>),
}

impl From<Witness> for WitnessPayload {
    fn from(w: Witness) -> Self {
        match w {
            Witness::Colouring(f) => Self::Colouring(colours_of(&f)),
            Witness::Assignment(a) => Self::Assignment(a),
        }
    }
}

/// The problem instance a payload refers to.
#[derive(Clone, Debug)]
pub enum Instance {
    Graph(Graph),
    Cnf(ParsedCnf),
}

pub fn colours_of(f: &Colouring) -> Vec<Colour> {
    f.to_total().expect("total colouring")
}

pub fn graph_digest(g: &Graph) -> String {
    hex::encode(Sha256::digest(write_dimacs_col(g, &[]).as_bytes()))
}

fn total(colours: &[Colour], n: usize) -> Option<Colouring> {
    (colours.len() == n && colours.iter().all(|&c| c >= 1)).then(|| Colouring::from_total(colours.to_vec()))
}

fn proper_with(g: &Graph, colours: &[Colour], q: Colour) -> bool {
    total(colours, g.n()).is_some_and(|f| verify_colouring(g, &f, q))
}

/// Re-checks `payload` against `instance`.
pub fn verify_payload(instance: &Instance, payload: &Payload) -> bool {
    match (instance, payload) {
        (Instance::Graph(g), Payload::Colouring { colours, count }) => {
            total(colours, g.n()).is_some_and(|f| {
                verify_colouring(g, &f, f.palette_size()) && f.distinct_colours() == *count
            })
        }
        (Instance::Graph(g), Payload::EdgeColouring { edges, count }) => verify_edges(g, edges, *count),
        (Instance::Graph(g), Payload::Number { quantity, value, witness }) => {
            let target = match quantity {
                Quantity::ChromaticNumber => g.clone(),
                Quantity::ChromaticIndex => g.line_graph().0,
            };
            let Ok(q) = Colour::try_from(*value) else {
                return false;
            };
            proper_with(&target, witness, q) && (q == 0 || backtrack_colour(&target, q - 1, &[]).is_none())
        }
        (Instance::Graph(g), Payload::Polynomial { method, coefficients, .. }) => {
            verify_polynomial(g, method, coefficients)
        }
        (Instance::Graph(g), Payload::Decision { q, colourable, ie_sum, witness }) => {
            let sum_agrees = ie_sum.as_ref().is_none_or(|s| {
                s.parse::<BigInt>()
                    .is_ok_and(|sum| g.n() == 0 || (sum.sign() == Sign::Plus) == *colourable)
            });
            let answer_checks = match (colourable, witness) {
                (true, Some(w)) => proper_with(g, w, *q),
                (false, None) => backtrack_colour(g, *q, &[]).is_none(),
                _ => false,
            };
            sum_agrees && answer_checks
        }
        (Instance::Graph(g), Payload::Certificate { centre, odd_cycle }) => {
            let cycle: Vec<usize> = odd_cycle.iter().map(|&v| v.wrapping_sub(1)).collect();
            let centre = centre.wrapping_sub(1);
            centre < g.n()
                && cycle.iter().all(|&v| v < g.n() && g.has_edge(centre, v))
                && (OddCycleCertificate { cycle }).verify(g)
        }
        (Instance::Graph(g), Payload::Sample { q, colours, .. }) => proper_with(g, colours, *q),
        (
            Instance::Graph(g),
            Payload::Embedding {
                target_q,
                tol,
                achieved,
                vectors,
            },
        ) => {
            if vectors.len() != g.n() || vectors.iter().any(|v| v.len() != vectors[0].len()) {
                return false;
            }
            let emb = VectorEmbedding::new(vectors, *target_q);
            (emb.achieved(g) - achieved).abs() <= 1e-12 && emb.certifies(g, *target_q, *tol)
        }
        (_, Payload::Reduction { .. }) => verify_reduction(instance, payload),
        (_, Payload::Xcheck(summary)) => summary.all_agree(),
        _ => false,
    }
}

fn verify_edges(g: &Graph, edges: &[[usize; 3]], count: usize) -> bool {
    if edges.len() != g.m() {
        return false;
    }
    let mut colours = vec![None; g.m()];
    for &[u, v, c] in edges {
        let (Some(u), Some(v)) = (u.checked_sub(1), v.checked_sub(1)) else {
            return false;
        };
        if u >= g.n() || v >= g.n() || c == 0 {
            return false;
        }
        let Some(e) = g.edge_index(u, v) else {
            return false;
        };
        let Ok(c) = Colour::try_from(c) else {
            return false;
        };
        if colours[e].replace(c).is_some() {
            return false;
        }
    }
    let ec = EdgeColouring::from_partial(colours);
    let distinct: std::collections::BTreeSet<_> = ec.as_slice().iter().collect();
    verify_edge_colouring(g, &ec) && distinct.len() == count
}

fn verify_polynomial(g: &Graph, method: &str, coefficients: &[String]) -> bool {
    let Ok(coeffs) = coefficients
        .iter()
        .map(|c| c.parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
    else {
        return false;
    };
    let independent = if method != "whitney" && g.m() <= WHITNEY_MAX_M {
        whitney_polynomial(g)
    } else if method == "addition" {
        chromatic_polynomial_with(g, RecurrenceDirection::Deletion)
    } else {
        chromatic_polynomial_with(g, RecurrenceDirection::Addition)
    };
    independent.is_ok_and(|p| p.coefficients() == coeffs.as_slice())
}

fn verify_reduction(instance: &Instance, payload: &Payload) -> bool {
    let Payload::Reduction {
        reduction,
        target_q,
        n,
        m,
        graph_sha256,
        solved,
        reduced_colouring,
        witness,
        ..
    } = payload
    else {
        return false;
    };
    let Ok(art): Result<ReductionArtifact, _> = rebuild_reduction(instance, *reduction) else {
        return false;
    };
    let h = &art.graph;
    if (h.n(), h.m(), art.target_q) != (*n, *m, *target_q) || graph_digest(h) != *graph_sha256 {
        return false;
    }
    match (reduced_colouring, witness) {
        _ if !solved => reduced_colouring.is_none() && witness.is_none(),
        (Some(colours), Some(w)) => {
            let Some(f) = total(colours, h.n()) else {
                return false;
            };
            let Ok(back) = art.back_translate(&f) else {
                return false;
            };
            WitnessPayload::from(back.clone()) == *w && witness_solves(instance, *reduction, &back)
        }
        (None, None) => {
            backtrack_colour(h, art.target_q, &[]).is_none() && !input_has_witness(instance, *reduction)
        }
        _ => false,
    }
}

fn witness_solves(instance: &Instance, kind: ReductionKind, w: &Witness) -> bool {
    match (instance, w) {
        (Instance::Graph(g), Witness::Colouring(f)) => verify_colouring(g, f, kind.source_q()),
        (Instance::Cnf(cnf), Witness::Assignment(a)) => {
            !cnf.unsatisfiable_at_parse && cnf.formula.is_satisfied_by(a)
        }
        _ => false,
    }
}

const MAX_BRUTE_FORCE_VARIABLES: usize = 30;

/// Formulas over more than [`MAX_BRUTE_FORCE_VARIABLES`] variables count as
/// possibly satisfiable.
fn input_has_witness(instance: &Instance, kind: ReductionKind) -> bool {
    match instance {
        Instance::Graph(g) => backtrack_colour(g, kind.source_q(), &[]).is_some(),
        Instance::Cnf(cnf) => {
            cnf.formula.variables() > MAX_BRUTE_FORCE_VARIABLES
                || (!cnf.unsatisfiable_at_parse && cnf.formula.brute_force_satisfy().is_some())
        }
    }
}
