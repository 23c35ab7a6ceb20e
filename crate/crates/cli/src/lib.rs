//! Command-line front end: DIMACS input, run reports with independent
//! verification, reductions, cross-checking and instance generation.

pub mod cli;
pub mod dimacs;
pub mod generate;
pub mod reduce;
pub mod report;
pub mod run;
pub mod xcheck;
