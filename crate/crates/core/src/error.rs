use thiserror::Error;

use crate::colouring::OddCycleCertificate;
use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// An exponential algorithm refused an instance above its guard.
    #[error("resource guard exceeded: {0}")]
    Resource(String),

    /// A numeric parameter outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Internal consistency check failed. Reaching this is a bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// The input was promised to be 3-colourable but a neighbourhood turned
    /// out not to be bipartite; the odd cycle proves chi(G) > 3.
    #[error("graph is not 3-colourable: neighbourhood of {centre} contains an odd cycle")]
    NotThreeColourable {
        centre: usize,
        certificate: OddCycleCertificate,
    },

    /// The vector colouring solver did not find an embedding.
    #[error("vector colouring solver failed at recursion level {level} ({} residual vertices)", .residual.n())]
    Solver { level: usize, residual: Graph },

    /// A decision procedure gave answers that cannot all be true.
    #[error("decision oracle inconsistent: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
