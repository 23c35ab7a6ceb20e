//! Instance generators behind `chroma gen`.

use chroma_core::families;
use chroma_core::{Error, Graph, Result};

use crate::dimacs::{parse_dimacs_col, write_dimacs_col};

/// The sixteen-family marriage network, with family initials in comments.
pub const FLORENTINE_COL: &str = include_str!("../fixtures/florentine.col");

pub const KINDS: &str = "crown <n>, cycle <n>, complete <n>, random <n> <p>, planted3col <n> <p>, \
                         grotzsch, petersen, florentine, paw";

fn arg<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    let raw = params
        .get(i)
        .ok_or_else(|| Error::Input(format!("missing parameter <{what}>")))?;
    raw.parse()
        .map_err(|_| Error::Input(format!("parameter <{what}> = '{raw}' is not valid")))
}

fn probability(params: &[String], i: usize) -> Result<f64> {
    let p: f64 = arg(params, i, "p")?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(Error::Input(format!("probability {p} outside [0, 1]")))
    }
}

/// The graph and a comment describing it.
pub fn generate(kind: &str, params: &[String], seed: u64) -> Result<(Graph, String)> {
    let expect = |count: usize| {
        if params.len() == count {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "'{kind}' takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let graph = match kind {
        "crown" => {
            expect(1)?;
            let n: usize = arg(params, 0, "n")?;
            if n % 2 == 1 {
                return Err(Error::Input(format!("crown graphs need an even n, got {n}")));
            }
            families::crown(n)
        }
        "cycle" => {
            expect(1)?;
            families::cycle(arg(params, 0, "n")?)
        }
        "complete" => {
            expect(1)?;
            families::complete(arg(params, 0, "n")?)
        }
        "random" => {
            expect(2)?;
            families::random_gnp(arg(params, 0, "n")?, probability(params, 1)?, seed)
        }
        "planted3col" => {
            expect(2)?;
            families::planted_3col(arg(params, 0, "n")?, probability(params, 1)?, seed).0
        }
        "grotzsch" => {
            expect(0)?;
            families::grotzsch()
        }
        "petersen" => {
            expect(0)?;
            families::petersen()
        }
        "florentine" => {
            expect(0)?;
            parse_dimacs_col(FLORENTINE_COL)
                .map_err(|e| Error::InvariantViolation(format!("bundled fixture: {e}")))?
                .graph
        }
        "paw" => {
            expect(0)?;
            families::paw()
        }
        _ => return Err(Error::Input(format!("unknown kind '{kind}'; expected one of {KINDS}"))),
    };
    let mut comment = std::iter::once(kind.to_string())
        .chain(params.iter().cloned())
        .collect::<Vec<_>>()
        .join(" ");
    if matches!(kind, "random" | "planted3col") {
        comment.push_str(&format!(" seed {seed}"));
    }
    Ok((graph, comment))
}

pub fn generate_dimacs(kind: &str, params: &[String], seed: u64) -> Result<String> {
    if kind == "florentine" && params.is_empty() {
        return Ok(FLORENTINE_COL.to_string());
    }
    let (g, comment) = generate(kind, params, seed)?;
    Ok(write_dimacs_col(&g, &[comment]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn named_graphs() {
        let (g, _) = generate("grotzsch", &[], 0).unwrap();
        assert_eq!((g.n(), g.m()), (11, 20));
        let (g, _) = generate("crown", &p(&["6"]), 0).unwrap();
        assert_eq!(g, families::crown(6));
        assert_eq!(generate("florentine", &[], 0).unwrap().0, families::florentine());
        assert_eq!(generate("paw", &[], 0).unwrap().0, families::paw());
    }

    #[test]
    fn deterministic_random_output() {
        let a = generate_dimacs("random", &p(&["12", "0.4"]), 5).unwrap();
        assert_eq!(a, generate_dimacs("random", &p(&["12", "0.4"]), 5).unwrap());
        assert_ne!(a, generate_dimacs("random", &p(&["12", "0.4"]), 6).unwrap());
    }

    #[test]
    fn bad_parameters() {
        for (kind, params) in [
            ("crown", p(&["5"])),
            ("crown", p(&[])),
            ("random", p(&["5", "1.5"])),
            ("cycle", p(&["x"])),
            ("paw", p(&["1"])),
            ("hypercube", p(&["3"])),
        ] {
            assert!(matches!(generate(kind, &params, 0), Err(Error::Input(_))), "{kind}");
        }
    }
}
