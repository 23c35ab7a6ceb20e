//! Command dispatch, exit codes and report rendering.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use chroma_core::edge::{chromatic_index_via_line_graph, vizing_colour};
use chroma_core::exact::{
    chromatic_number_dp, chromatic_number_ie, chromatic_polynomial_contraction, chromatic_polynomial_with,
    colouring_from_table, exhaustive_decide, ie_decide, lawler_3col, least_colourable_q, whitney_polynomial,
    ChromaticPolynomial, RecurrenceDirection,
};
use chroma_core::greedy::{colour_with, dsatur_colour, palette_restriction_3col, wigderson_colour, OrderingStrategy};
use chroma_core::reductions::{backtrack_colour, construct_from_decision};
use chroma_core::sample::{metropolis_sample, mixing_time, ChainConfig};
use chroma_core::vector::{hybrid_colour, kms_colour, solve_vector_colouring, vector_chromatic_number};
use chroma_core::{Colour, Colouring, Error, Graph, OddCycleCertificate};
use thiserror::Error;

use crate::cli::{Algorithm, Cli, Command, DecideMethod, Format, NumberMethod, Order, PolyMethod, ReduceTo};
use crate::dimacs::{parse_dimacs_cnf, parse_dimacs_col, write_dimacs_col, ParseError};
use crate::generate::generate_dimacs;
use crate::reduce::{rebuild_reduction, ReductionKind};
use crate::report::{
    colours_of, graph_digest, verify_payload, Instance, InstanceId, Payload, Quantity, RunReport, WitnessPayload,
};
use crate::xcheck::{self, Case, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: invalid report: {source}")]
    Report {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    GaveUp(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io { .. } | Self::Parse { .. } | Self::Report { .. } | Self::Usage(_) => EXIT_INPUT,
            Self::GaveUp(_) => EXIT_RESOURCE,
            Self::Core(e) => match e {
                Error::Input(_) | Error::Domain(_) => EXIT_INPUT,
                Error::NotThreeColourable { .. } => EXIT_NEGATIVE,
                Error::Resource(_) | Error::InvariantViolation(_) | Error::Solver { .. } | Error::Oracle(_) => {
                    EXIT_RESOURCE
                }
            },
        }
    }
}

/// What a command prints and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn execute(cli: Cli) -> Outcome {
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(Response::Report(report)) => {
            let code = report_exit_code(&report);
            let stderr = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Outcome {
                stdout: render(&report, format),
                stderr,
                code,
            }
        }
        Ok(Response::Raw { stdout, code }) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

/// 0 for a verified positive answer, 1 for a verified negative one and 3
/// for anything that failed verification.
pub fn report_exit_code(report: &RunReport) -> i32 {
    if let Payload::Xcheck(summary) = &report.result {
        return if summary.all_agree() { EXIT_OK } else { EXIT_NEGATIVE };
    }
    if !report.verified {
        return EXIT_RESOURCE;
    }
    let negative = match &report.result {
        Payload::Certificate { .. } => true,
        Payload::Decision { colourable, .. } => !colourable,
        Payload::Reduction { solved, witness, .. } => *solved && witness.is_none(),
        _ => false,
    };
    if negative {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

enum Response {
    Report(Box<RunReport>),
    Raw { stdout: String, code: i32 },
}

struct Loaded {
    instance: Instance,
    id: InstanceId,
    warnings: Vec<String>,
}

impl Loaded {
    fn graph(&self) -> Result<&Graph, CliError> {
        match &self.instance {
            Instance::Graph(g) => Ok(g),
            Instance::Cnf(_) => Err(CliError::Usage("this command needs a graph, not a CNF formula".into())),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn is_cnf(text: &str) -> bool {
    text.lines().any(|l| {
        let mut t = l.split_whitespace();
        t.next() == Some("p") && t.next() == Some("cnf")
    })
}

/// Reads a DIMACS `col` file, or a `cnf` file when its header says so.
fn load(path: &Path) -> Result<Loaded, CliError> {
    let text = read(path)?;
    let id = InstanceId::of(Some(path.display().to_string()), &text);
    let parse_err = |source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    };
    if is_cnf(&text) {
        let cnf = parse_dimacs_cnf(&text).map_err(parse_err)?;
        let warnings = cnf.warnings.clone();
        Ok(Loaded {
            instance: Instance::Cnf(cnf),
            id,
            warnings,
        })
    } else {
        let parsed = parse_dimacs_col(&text).map_err(parse_err)?;
        Ok(Loaded {
            instance: Instance::Graph(parsed.graph),
            id,
            warnings: parsed.warnings,
        })
    }
}

fn report(algorithm: impl Into<String>, loaded: &Loaded, seed: u64, start: Instant, result: Payload) -> Response {
    let verified = verify_payload(&loaded.instance, &result);
    Response::Report(Box::new(RunReport {
        algorithm: algorithm.into(),
        instance: loaded.id.clone(),
        seed,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        result,
        verified,
        warnings: loaded.warnings.clone(),
    }))
}

fn colouring_payload(f: &Colouring) -> Payload {
    Payload::Colouring {
        colours: colours_of(f),
        count: f.distinct_colours(),
    }
}

fn certificate_payload(centre: usize, certificate: &OddCycleCertificate) -> Payload {
    Payload::Certificate {
        centre: centre + 1,
        odd_cycle: certificate.cycle.iter().map(|v| v + 1).collect(),
    }
}

fn negative(q: Colour) -> Payload {
    Payload::Decision {
        q,
        colourable: false,
        ie_sum: None,
        witness: None,
    }
}

fn polynomial_payload(method: &str, p: &ChromaticPolynomial) -> Payload {
    Payload::Polynomial {
        method: method.into(),
        coefficients: p.coefficients().iter().map(|c| c.to_string()).collect(),
        text: p.to_string(),
    }
}

fn dispatch(command: Command) -> Result<Response, CliError> {
    let start = Instant::now();
    match command {
        Command::Colour {
            alg,
            order,
            seed,
            q,
            d,
            max_rounds,
            file,
        } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            let (name, payload) = colour(g, alg, order, seed, q, d, max_rounds)?;
            Ok(report(name, &loaded, seed, start, payload))
        }
        Command::Decide { q, method, file } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            let (ie_sum, witness) = match method {
                DecideMethod::Ie => {
                    let (yes, sum) = ie_decide(g, q)?;
                    let witness = if yes { backtrack_colour(g, q, &[]) } else { None };
                    (Some(sum.to_string()), witness)
                }
                DecideMethod::Exhaustive => (None, exhaustive_decide(g, q)?),
                DecideMethod::Lawler => {
                    if q != 3 {
                        return Err(CliError::Usage("--method lawler decides q = 3 only".into()));
                    }
                    (None, lawler_3col(g))
                }
                DecideMethod::Dp => {
                    let (chi, table) = chromatic_number_dp(g, false)?;
                    (None, (chi <= q as usize).then(|| colouring_from_table(g, &table)))
                }
            };
            let payload = Payload::Decision {
                q,
                colourable: witness.is_some(),
                ie_sum,
                witness: witness.as_ref().map(colours_of),
            };
            Ok(report(format!("decide-{method:?}").to_lowercase(), &loaded, 0, start, payload))
        }
        Command::ChromaticNumber { method, file } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            let (value, witness) = match method {
                NumberMethod::Dp | NumberMethod::DpMaximal => {
                    let (chi, table) = chromatic_number_dp(g, method == NumberMethod::DpMaximal)?;
                    (chi, colouring_from_table(g, &table))
                }
                NumberMethod::Ie => {
                    let chi = chromatic_number_ie(g)?;
                    (chi, witness_with(g, chi)?)
                }
                NumberMethod::Exhaustive => {
                    let chi = least_colourable_q(g)? as usize;
                    (chi, witness_with(g, chi)?)
                }
            };
            let payload = Payload::Number {
                quantity: Quantity::ChromaticNumber,
                value,
                witness: colours_of(&witness),
            };
            Ok(report(
                format!("chromatic-number-{}", method_name(method)),
                &loaded,
                0,
                start,
                payload,
            ))
        }
        Command::Poly { method, file } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            let (name, p) = match method {
                PolyMethod::Contraction => ("contraction", chromatic_polynomial_contraction(g)?),
                PolyMethod::Addition => ("addition", chromatic_polynomial_with(g, RecurrenceDirection::Addition)?),
                PolyMethod::Whitney => ("whitney", whitney_polynomial(g)?),
            };
            Ok(report(format!("poly-{name}"), &loaded, 0, start, polynomial_payload(name, &p)))
        }
        Command::EdgeColour { file } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            let ec = vizing_colour(g)?;
            let edges: Vec<[usize; 3]> = g
                .edges()
                .enumerate()
                .map(|(e, (u, v))| [u + 1, v + 1, ec.get(e).expect("total edge colouring") as usize])
                .collect();
            let count = edges.iter().map(|e| e[2]).collect::<std::collections::BTreeSet<_>>().len();
            Ok(report("vizing", &loaded, 0, start, Payload::EdgeColouring { edges, count }))
        }
        Command::ChromaticIndex { file } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            let value = chromatic_index_via_line_graph(g)?;
            let witness = witness_with(&g.line_graph().0, value)?;
            let payload = Payload::Number {
                quantity: Quantity::ChromaticIndex,
                value,
                witness: colours_of(&witness),
            };
            Ok(report("chromatic-index-ie", &loaded, 0, start, payload))
        }
        Command::Sample {
            q,
            steps,
            seed,
            allow_unproven,
            file,
        } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            let cfg = if allow_unproven {
                let steps = steps.or_else(|| mixing_time(g, q).ok()).ok_or_else(|| {
                    CliError::Usage("--steps is required when q is not above 4 times the maximum degree".into())
                })?;
                ChainConfig {
                    q,
                    steps,
                    seed,
                    initial: dsatur_colour(g),
                    allow_unproven,
                }
            } else {
                let mut cfg = ChainConfig::standard(g, q, seed)?;
                if let Some(s) = steps {
                    cfg.steps = s;
                }
                cfg
            };
            let sample = metropolis_sample(g, &cfg)?;
            let payload = Payload::Sample {
                q,
                steps: cfg.steps,
                guaranteed: sample.guaranteed,
                colours: colours_of(&sample.colouring),
            };
            Ok(report("glauber", &loaded, seed, start, payload))
        }
        Command::Vector {
            q,
            tol,
            seed,
            max_iters,
            file,
        } => {
            let loaded = load(&file)?;
            let g = loaded.graph()?;
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Usage("--tol must be positive".into()));
            }
            let target = match q {
                Some(q) if q < 2.0 || !q.is_finite() => {
                    return Err(CliError::Usage("--q must be at least 2".into()))
                }
                Some(q) => q,
                None => vector_chromatic_number(g, tol, seed) + tol / 2.0,
            };
            let emb = solve_vector_colouring(g, target, tol, seed, max_iters).ok_or_else(|| {
                CliError::GaveUp(format!("no vector {target}-colouring found within tolerance {tol}"))
            })?;
            let payload = Payload::Embedding {
                target_q: target,
                tol,
                achieved: emb.achieved(g),
                vectors: (0..emb.len()).map(|v| emb.vector(v).to_vec()).collect(),
            };
            Ok(report("vector", &loaded, seed, start, payload))
        }
        Command::Reduce {
            to,
            q,
            solve,
            output,
            file,
        } => {
            let loaded = load(&file)?;
            let need_q = || q.ok_or_else(|| CliError::Usage("this reduction needs --q".into()));
            let kind = match to {
                ReduceTo::ThreeCol => ReductionKind::ThreeColouring { q: need_q()? },
                ReduceTo::Apex => ReductionKind::Apex { q: need_q()? },
                ReduceTo::Sat => ReductionKind::Satisfiability,
            };
            let art = rebuild_reduction(&loaded.instance, kind)?;
            let h = &art.graph;
            if let Some(path) = &output {
                let dimacs = write_dimacs_col(h, std::slice::from_ref(&art.note));
                std::fs::write(path, dimacs).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
            }
            let (reduced_colouring, witness) = if solve {
                let fixed: Vec<(usize, Colour)> = match kind {
                    ReductionKind::ThreeColouring { .. } => vec![(0, 1), (1, 2), (2, 3)],
                    ReductionKind::Satisfiability => (0..art.target_q as usize)
                        .map(|i| (i, i as Colour + 1))
                        .collect(),
                    ReductionKind::Apex { .. } => Vec::new(),
                };
                match backtrack_colour(h, art.target_q, &fixed) {
                    Some(f) => {
                        let back = art.back_translate(&f)?;
                        (Some(colours_of(&f)), Some(WitnessPayload::from(back)))
                    }
                    None => (None, None),
                }
            } else {
                (None, None)
            };
            let payload = Payload::Reduction {
                reduction: kind,
                note: art.note.clone(),
                target_q: art.target_q,
                n: h.n(),
                m: h.m(),
                graph_sha256: graph_digest(h),
                solved: solve,
                reduced_colouring,
                witness,
            };
            Ok(report("reduce", &loaded, 0, start, payload))
        }
        Command::Verify { instance, report } => {
            let loaded = load(&instance)?;
            let text = read(&report)?;
            let stored: RunReport = serde_json::from_str(&text).map_err(|source| CliError::Report {
                path: report.clone(),
                source,
            })?;
            let instance_matches = stored.instance.sha256 == loaded.id.sha256;
            let verified = verify_payload(&loaded.instance, &stored.result);
            let ok = instance_matches && verified;
            let summary = serde_json::json!({
                "instance_matches": instance_matches,
                "stored_verified": stored.verified,
                "verified": verified,
            });
            Ok(Response::Raw {
                stdout: format!("{}\n", serde_json::to_string_pretty(&summary).expect("serializable")),
                code: if ok { EXIT_OK } else { EXIT_NEGATIVE },
            })
        }
        Command::Xcheck {
            exhaustive,
            random,
            max_n,
            planted,
            planted_n,
            planted_p,
            seed,
            files,
        } => {
            let defaults = exhaustive.is_none() && random.is_none() && planted.is_none() && files.is_empty();
            let exhaustive = exhaustive.or(defaults.then_some(5));
            let random = random.or(defaults.then_some(200));
            let planted = planted.or(defaults.then_some(20));
            if !(0.0..=1.0).contains(&planted_p) {
                return Err(CliError::Usage("--planted-p must lie in [0, 1]".into()));
            }
            let mut cases = Vec::new();
            let mut description = Vec::new();
            if let Some(k) = exhaustive {
                cases.extend(xcheck::exhaustive_cases(k));
                description.push(format!("all graphs n<={k}"));
            }
            if let Some(count) = random {
                cases.extend(xcheck::random_cases(count, max_n, seed));
                description.push(format!("{count} random n<={max_n}"));
            }
            if let Some(count) = planted {
                cases.extend(xcheck::planted_cases(count, planted_n, planted_p, seed));
                description.push(format!("{count} planted n={planted_n} p={planted_p}"));
            }
            let mut warnings = Vec::new();
            for path in &files {
                let loaded = load(path)?;
                cases.push(Case {
                    label: path.display().to_string(),
                    graph: loaded.graph()?.clone(),
                    suite: Suite::Exact,
                });
                warnings.extend(loaded.warnings);
                description.push(path.display().to_string());
            }
            let summary = xcheck::run(&cases);
            let loaded = Loaded {
                instance: Instance::Graph(Graph::empty(0)),
                id: InstanceId::of(None, &description.join("; ")),
                warnings,
            };
            Ok(report("xcheck", &loaded, seed, start, Payload::Xcheck(summary)))
        }
        Command::Gen {
            kind,
            params,
            seed,
            output,
        } => {
            let dimacs = generate_dimacs(&kind, &params, seed)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, &dimacs).map_err(|source| CliError::Io { path, source })?;
                    Ok(Response::Raw {
                        stdout: String::new(),
                        code: EXIT_OK,
                    })
                }
                None => Ok(Response::Raw {
                    stdout: dimacs,
                    code: EXIT_OK,
                }),
            }
        }
    }
}

fn method_name(method: NumberMethod) -> &'static str {
    match method {
        NumberMethod::Dp => "dp",
        NumberMethod::DpMaximal => "dp-maximal",
        NumberMethod::Ie => "ie",
        NumberMethod::Exhaustive => "exhaustive",
    }
}

fn witness_with(g: &Graph, q: usize) -> Result<Colouring, CliError> {
    backtrack_colour(g, q as Colour, &[])
        .ok_or_else(|| CliError::Core(Error::InvariantViolation(format!("no {q}-colouring found to witness the value"))))
}

fn colour(
    g: &Graph,
    alg: Algorithm,
    order: Order,
    seed: u64,
    q: Option<Colour>,
    d: Option<usize>,
    max_rounds: usize,
) -> Result<(String, Payload), CliError> {
    let done = |name: &str, f: &Colouring| Ok((name.to_string(), colouring_payload(f)));
    match alg {
        Algorithm::Greedy => {
            let (name, strategy) = match order {
                Order::Given => ("given", OrderingStrategy::Given),
                Order::LargestFirst => ("largest-first", OrderingStrategy::LargestFirst),
                Order::SmallestLast => ("smallest-last", OrderingStrategy::SmallestLast),
                Order::Random => ("random", OrderingStrategy::Random(seed)),
            };
            done(&format!("greedy-{name}"), &colour_with(g, strategy))
        }
        Algorithm::Dsatur => done("dsatur", &dsatur_colour(g)),
        Algorithm::Wigderson => match wigderson_colour(g) {
            Ok(w) => done("wigderson", &w.colouring),
            Err(Error::NotThreeColourable { centre, certificate }) => {
                Ok(("wigderson".into(), certificate_payload(centre, &certificate)))
            }
            Err(e) => Err(e.into()),
        },
        Algorithm::Lawler => match lawler_3col(g) {
            Some(f) => done("lawler", &f),
            None => Ok(("lawler".into(), negative(3))),
        },
        Algorithm::Palette => match palette_restriction_3col(g, seed, max_rounds) {
            Some(p) => done("palette", &p.colouring),
            None => Err(CliError::GaveUp(format!(
                "palette restriction found no 3-colouring in {max_rounds} rounds"
            ))),
        },
        Algorithm::Dp => {
            let (_, table) = chromatic_number_dp(g, false)?;
            done("dp", &colouring_from_table(g, &table))
        }
        Algorithm::Fromdecision => {
            let q = q.ok_or_else(|| CliError::Usage("--alg fromdecision needs --q".into()))?;
            match construct_from_decision(g, q, |h, q| ie_decide(h, q).map(|(yes, _)| yes))? {
                Some(f) => done("fromdecision", &f),
                None => Ok(("fromdecision".into(), negative(q))),
            }
        }
        Algorithm::Kms => done("kms", &kms_colour(g, seed)?.colouring),
        Algorithm::Hybrid => done("hybrid", &hybrid_colour(g, d, seed)?.colouring),
    }
}

pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(report).expect("serializable")),
        Format::Text => render_text(report),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let file = r.instance.file.as_deref().unwrap_or("-");
    writeln!(w, "algorithm  {}", r.algorithm).unwrap();
    writeln!(w, "instance   {file} (sha256 {})", &r.instance.sha256[..12]).unwrap();
    writeln!(w, "seed       {}", r.seed).unwrap();
    writeln!(w, "time       {:.3} ms", r.wall_time_ms).unwrap();
    writeln!(w, "verified   {}", if r.verified { "yes" } else { "NO" }).unwrap();
    match &r.result {
        Payload::Colouring { colours, count } => {
            writeln!(w, "colours    {count}").unwrap();
            writeln!(w, "colouring  {}", join(colours)).unwrap();
        }
        Payload::EdgeColouring { edges, count } => {
            writeln!(w, "colours    {count}").unwrap();
            for [u, v, c] in edges {
                writeln!(w, "  {u}-{v}: {c}").unwrap();
            }
        }
        Payload::Number { quantity, value, witness } => {
            let name = match quantity {
                Quantity::ChromaticNumber => "chromatic number",
                Quantity::ChromaticIndex => "chromatic index",
            };
            writeln!(w, "{name}  {value}").unwrap();
            writeln!(w, "witness    {}", join(witness)).unwrap();
        }
        Payload::Polynomial { text, .. } => writeln!(w, "P(q) = {text}").unwrap(),
        Payload::Decision { q, colourable, ie_sum, witness } => {
            let verdict = if *colourable { "colourable" } else { "not colourable" };
            writeln!(w, "{q}-colouring {verdict}").unwrap();
            if let Some(s) = ie_sum {
                writeln!(w, "sum        {s}").unwrap();
            }
            if let Some(f) = witness {
                writeln!(w, "witness    {}", join(f)).unwrap();
            }
        }
        Payload::Certificate { centre, odd_cycle } => {
            writeln!(w, "not 3-colourable: odd cycle {} around {centre}", join(odd_cycle)).unwrap();
        }
        Payload::Sample { q, steps, guaranteed, colours } => {
            writeln!(w, "q          {q}").unwrap();
            writeln!(w, "steps      {steps}{}", if *guaranteed { "" } else { " (no mixing guarantee)" }).unwrap();
            writeln!(w, "colouring  {}", join(colours)).unwrap();
        }
        Payload::Embedding { target_q, tol, achieved, vectors } => {
            writeln!(w, "target     {target_q} (tolerance {tol})").unwrap();
            writeln!(w, "achieved   {achieved:.9}").unwrap();
            writeln!(w, "dimension  {}", vectors.first().map_or(0, Vec::len)).unwrap();
        }
        Payload::Reduction {
            note,
            target_q,
            n,
            m,
            solved,
            witness,
            ..
        } => {
            writeln!(w, "reduced    {n} vertices, {m} edges, {target_q} colours").unwrap();
            writeln!(w, "note       {note}").unwrap();
            if *solved {
                match witness {
                    Some(WitnessPayload::Colouring(f)) => writeln!(w, "witness    {}", join(f)).unwrap(),
                    Some(WitnessPayload::Assignment(a)) => {
                        let bits: Vec<u8> = a.iter().map(|&b| u8::from(b)).collect();
                        writeln!(w, "witness    {}", join(&bits)).unwrap()
                    }
                    None => writeln!(w, "no colouring of the reduced graph exists").unwrap(),
                }
            }
        }
        Payload::Xcheck(s) => {
            writeln!(w, "instances  {}", s.instances).unwrap();
            for (name, t) in &s.checks {
                writeln!(w, "  {name:<20} pass {:>6}  fail {:>6}", t.pass, t.fail).unwrap();
            }
            for c in &s.counterexamples {
                writeln!(w, "counterexample [{}] {}: {}", c.check, c.instance, c.detail).unwrap();
                w.push_str(&c.dimacs);
            }
        }
    }
    for warning in &r.warnings {
        writeln!(w, "warning    {warning}").unwrap();
    }
    out
}
