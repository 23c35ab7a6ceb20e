//! Reductions as run from the command line.

use chroma_core::reductions::{
    reduce_col_to_col_plus_one, reduce_qcol_to_3col, reduce_sat_with_empty_clauses, ReductionArtifact,
};
use chroma_core::{Colour, Error, Result};
use serde::{Deserialize, Serialize};

use crate::report::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum ReductionKind {
    /// `q`-colouring of a graph as 3-colouring.
    ThreeColouring { q: Colour },
    /// CNF satisfiability as `(r+1)`-colouring.
    Satisfiability,
    /// `q`-colouring as `(q+1)`-colouring of the graph plus an apex.
    Apex { q: Colour },
}

impl ReductionKind {
    /// The number of colours asked of the input graph.
    pub fn source_q(&self) -> Colour {
        match self {
            Self::ThreeColouring { q } | Self::Apex { q } => *q,
            Self::Satisfiability => 0,
        }
    }
}

pub fn rebuild_reduction(instance: &Instance, kind: ReductionKind) -> Result<ReductionArtifact> {
    match (instance, kind) {
        (Instance::Graph(g), ReductionKind::ThreeColouring { q }) => reduce_qcol_to_3col(g, q as usize),
        (Instance::Graph(g), ReductionKind::Apex { q }) => Ok(reduce_col_to_col_plus_one(g, q)),
        (Instance::Cnf(cnf), ReductionKind::Satisfiability) => Ok(reduce_sat_with_empty_clauses(
            &cnf.formula,
            usize::from(cnf.unsatisfiable_at_parse),
        )),
        (Instance::Graph(_), ReductionKind::Satisfiability) => {
            Err(Error::Input("the satisfiability reduction needs a CNF instance".into()))
        }
        (Instance::Cnf(_), _) => Err(Error::Input("this reduction needs a graph instance".into())),
    }
}
