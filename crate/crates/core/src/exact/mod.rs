//! Exact algorithms: exhaustive oracles, chromatic polynomials, subset
//! dynamic programming, maximal independent sets, Lawler's 3-colouring and
//! inclusion–exclusion.
//!
//! Everything here is exponential. Each entry point checks a size guard and
//! returns [`Error::Resource`](crate::Error::Resource) instead of running
//! away.

mod dp;
mod inclusion_exclusion;
mod lawler;
mod mis;
mod oracle;
mod polynomial;
mod table;

pub use dp::{chromatic_number_dp, colouring_from_table, DP_MAX_N};
pub use inclusion_exclusion::{
    chromatic_number_ie, ie_decide, ie_sum, ie_sums, tabulate_g, IE_MAX_N,
};
pub use lawler::lawler_3col;
pub use mis::{enumerate_maximal_independent_sets, for_each_maximal_independent_set};
pub use oracle::{
    count_colourings_bruteforce, exhaustive_decide, exhaustive_decide_with_limit,
    least_colourable_q, EXHAUSTIVE_LIMIT,
};
pub use polynomial::{
    chromatic_polynomial_contraction, chromatic_polynomial_with, whitney_evaluate,
    whitney_polynomial, ChromaticPolynomial, RecurrenceDirection, CONTRACTION_MAX_SIZE,
    WHITNEY_MAX_M,
};
pub use table::SubsetTable;
