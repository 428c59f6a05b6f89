//! Verification harness: argument parsing, seeded sampling, parallel sweeps,
//! versioned reports and the invariant suite behind `selftest`.

pub mod parse;
pub mod report;
pub mod run;
pub mod sample;
pub mod suite;
