//! Command-line front end: curve-file parsing, per-curve local certificates,
//! lattice bookkeeping, and the end-to-end verification corpus.

pub mod commands;
pub mod curvefile;
pub mod report;
pub mod verify;
