//! Combinatorial machinery for orientation questions on tournaments:
//! isomorph-free enumeration, embedding link/knot catalogues with certificate
//! search, the explicit tournament constructions, and the GF(2)/pigeonhole
//! counting toolkit behind the multi-component linking arguments.

pub mod catalogue;
pub mod constructions;
pub mod digraph;
pub mod gf2;
pub mod iso;
pub mod linking;
pub mod report;

pub use digraph::{
    glue, is_consistent, killed_by_partial, CompletionPolicy, CyclePattern, DirectedCycle,
    OrientedGraph, Tournament,
};
pub use iso::{all_labelings, canonical_form, enumerate_tournaments, CanonicalForm};

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported size n={0}")]
    UnsupportedSize(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("contraction of {v} -> {w} is not consistent: {v} is not a sink and {w} is not a source")]
    ContractionNotConsistent { v: usize, w: usize },

    #[error("glue conflict: merged pair {{{u}, {v}}} would carry both directions")]
    GlueConflict { u: usize, v: usize },

    #[error("witness failure: {0}")]
    WitnessFailure(String),

    #[error("validation failed for {name}: {reason}")]
    ValidationFailed { name: String, reason: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
