//! Cross-validation of the exact algorithms against each other and of the
//! 3-colouring heuristics on graphs known to be 3-colourable.

use std::collections::BTreeMap;

use chroma_core::exact::{
    chromatic_number_dp, chromatic_polynomial_contraction, count_colourings_bruteforce,
    exhaustive_decide, ie_decide, lawler_3col, least_colourable_q, whitney_evaluate,
};
use chroma_core::greedy::{palette_restriction_3col, wigderson_bound, wigderson_colour};
use chroma_core::vector::kms_colour;
use chroma_core::{families, verify_colouring, Colour, Graph};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimacs::write_dimacs_col;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub check: String,
    pub detail: String,
    pub dimacs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct XcheckSummary {
    pub instances: usize,
    pub checks: BTreeMap<String, Tally>,
    pub counterexamples: Vec<Counterexample>,
}

impl XcheckSummary {
    pub fn all_agree(&self) -> bool {
        self.counterexamples.is_empty() && self.checks.values().all(|t| t.fail == 0)
    }

    fn merge(mut self, other: Self) -> Self {
        self.instances += other.instances;
        for (name, t) in other.checks {
            let mine = self.checks.entry(name).or_default();
            mine.pass += t.pass;
            mine.fail += t.fail;
        }
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Exhaustive counts, both polynomials, both DP variants,
    /// inclusion–exclusion and Lawler, all against each other.
    Exact,
    /// Lawler, palette restriction, Wigderson and vector rounding must all
    /// return verified colourings.
    ThreeColourable { seed: u64 },
}

#[derive(Clone, Debug)]
pub struct Case {
    pub label: String,
    pub graph: Graph,
    pub suite: Suite,
}

struct Recorder<'a> {
    case: &'a Case,
    summary: XcheckSummary,
}

impl Recorder<'_> {
    fn record(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        let tally = self.summary.checks.entry(check.to_string()).or_default();
        if ok {
            tally.pass += 1;
        } else {
            tally.fail += 1;
            self.summary.counterexamples.push(Counterexample {
                instance: self.case.label.clone(),
                check: check.to_string(),
                detail: detail(),
                dimacs: write_dimacs_col(&self.case.graph, std::slice::from_ref(&self.case.label)),
            });
        }
    }
}

pub fn check_case(case: &Case) -> XcheckSummary {
    let mut rec = Recorder {
        case,
        summary: XcheckSummary {
            instances: 1,
            ..XcheckSummary::default()
        },
    };
    match case.suite {
        Suite::Exact => exact_suite(&case.graph, &mut rec),
        Suite::ThreeColourable { seed } => three_colourable_suite(&case.graph, seed, &mut rec),
    }
    rec.summary
}

fn exact_suite(g: &Graph, rec: &mut Recorder<'_>) {
    let n = g.n();
    let counts: Vec<_> = match (0..=n as Colour)
        .map(|q| count_colourings_bruteforce(g, q))
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(c) => c,
        Err(e) => return rec.record("exhaustive", false, || e.to_string()),
    };
    let least = match least_colourable_q(g) {
        Ok(q) => q as usize,
        Err(e) => return rec.record("exhaustive", false, || e.to_string()),
    };
    rec.record("exhaustive", counts.iter().position(|c| c.bits() > 0) == Some(least), || {
        format!("least colourable q = {least} but counts are {counts:?}")
    });

    match chromatic_polynomial_contraction(g) {
        Ok(p) => {
            let bad = (0..=n).find(|&q| p.evaluate(q as i64) != BigInt::from(counts[q].clone()));
            rec.record("contraction", bad.is_none(), || {
                let q = bad.expect("failing q");
                format!("P({q}) = {} but {} colourings exist; P = {p}", p.evaluate(q as i64), counts[q])
            });
        }
        Err(e) => rec.record("contraction", false, || e.to_string()),
    }

    let whitney: Result<Vec<_>, _> = (0..=n).map(|q| whitney_evaluate(g, q as i64)).collect();
    match whitney {
        Ok(values) => {
            let bad = (0..=n).find(|&q| values[q] != BigInt::from(counts[q].clone()));
            rec.record("whitney", bad.is_none(), || {
                let q = bad.expect("failing q");
                format!("Whitney gives {} at q = {q}, exhaustive {}", values[q], counts[q])
            });
        }
        Err(e) => rec.record("whitney", false, || e.to_string()),
    }

    for (name, maximal) in [("dp", false), ("dp_maximal", true)] {
        match chromatic_number_dp(g, maximal) {
            Ok((chi, _)) => rec.record(name, chi == least, || format!("{name} gives {chi}, exhaustive {least}")),
            Err(e) => rec.record(name, false, || e.to_string()),
        }
    }

    let mut ie_ok = Ok(true);
    for q in 1..=n.max(1) as Colour {
        let decided = ie_decide(g, q).map(|(yes, _)| yes);
        let direct = exhaustive_decide(g, q).map(|f| f.is_some());
        match (decided, direct) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => {
                ie_ok = Err(format!("q = {q}: inclusion–exclusion says {a}, exhaustive {b}"));
                break;
            }
            (Err(e), _) | (_, Err(e)) => {
                ie_ok = Err(e.to_string());
                break;
            }
        }
    }
    let ie_detail = ie_ok.clone().err().unwrap_or_default();
    rec.record("inclusion_exclusion", ie_ok.is_ok(), || ie_detail);

    let lawler = lawler_3col(g);
    let verified = lawler.as_ref().is_none_or(|f| verify_colouring(g, f, 3));
    rec.record("lawler", verified && lawler.is_some() == (least <= 3), || {
        format!("Lawler found {:?}, chromatic number {least}", lawler.as_ref().map(|f| f.as_slice().to_vec()))
    });
}

/// Round limit for palette restriction on planted instances.
pub const PALETTE_ROUNDS: usize = 200_000;

fn three_colourable_suite(g: &Graph, seed: u64, rec: &mut Recorder<'_>) {
    let lawler = lawler_3col(g);
    rec.record("lawler", lawler.is_some_and(|f| verify_colouring(g, &f, 3)), || {
        "no verified 3-colouring".into()
    });
    let palette = palette_restriction_3col(g, seed, PALETTE_ROUNDS);
    rec.record("palette", palette.is_some_and(|p| verify_colouring(g, &p.colouring, 3)), || {
        format!("no verified 3-colouring in {PALETTE_ROUNDS} rounds")
    });
    match wigderson_colour(g) {
        Ok(w) => {
            let used = w.colouring.palette_size();
            let ok = verify_colouring(g, &w.colouring, used) && used as usize <= wigderson_bound(g.n());
            rec.record("wigderson", ok, || format!("{used} colours"));
        }
        Err(e) => rec.record("wigderson", false, || e.to_string()),
    }
    match kms_colour(g, seed) {
        Ok(k) => rec.record(
            "kms",
            verify_colouring(g, &k.colouring, k.colouring.palette_size()),
            || "colouring not proper".into(),
        ),
        Err(e) => rec.record("kms", false, || e.to_string()),
    }
}

pub fn run(cases: &[Case]) -> XcheckSummary {
    cases
        .par_iter()
        .map(check_case)
        .reduce(XcheckSummary::default, XcheckSummary::merge)
}

pub fn exhaustive_cases(max_n: usize) -> Vec<Case> {
    (0..=max_n)
        .flat_map(|n| {
            families::all_graphs(n).enumerate().map(move |(i, graph)| Case {
                label: format!("all-graphs n={n} #{i}"),
                graph,
                suite: Suite::Exact,
            })
        })
        .collect()
}

pub fn random_cases(count: usize, max_n: usize, seed: u64) -> Vec<Case> {
    families::random_corpus(count, max_n, seed)
        .into_iter()
        .enumerate()
        .map(|(i, graph)| Case {
            label: format!("random seed={seed} #{i}"),
            graph,
            suite: Suite::Exact,
        })
        .collect()
}

pub fn planted_cases(count: usize, n: usize, p: f64, seed: u64) -> Vec<Case> {
    (0..count as u64)
        .map(|i| Case {
            label: format!("planted n={n} p={p} seed={}", seed + i),
            graph: families::planted_3col(n, p, seed + i).0,
            suite: Suite::ThreeColourable { seed: seed + i },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpora_agree() {
        let mut cases = exhaustive_cases(3);
        cases.extend(random_cases(10, 6, 1));
        cases.extend(planted_cases(3, 10, 0.4, 2));
        let summary = run(&cases);
        assert_eq!(summary.instances, cases.len());
        assert!(summary.all_agree(), "{:?}", summary.counterexamples);
        assert_eq!(summary.checks["kms"].pass, 3);
    }

    #[test]
    fn disagreement_is_reported() {
        let case = Case {
            label: "K4 as 3-colourable".into(),
            graph: families::complete(4),
            suite: Suite::ThreeColourable { seed: 0 },
        };
        let summary = check_case(&case);
        assert!(!summary.all_agree());
        let lawler = summary.counterexamples.iter().find(|c| c.check == "lawler").unwrap();
        assert!(lawler.dimacs.contains("p edge 4 6"));
    }
}
