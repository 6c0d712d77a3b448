//! Enumeration, construction and verification of 3-valent planar maps
//! that consist of a ring of `n` q-gonal faces whose inner and outer
//! domains are filled with p-gonal faces.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! domain arithmetic -> boundary sequences -> patch filling -> ring assembly -> catalog
//! ```
//!
//! * [`map`] — dart-based combinatorial maps, canonical codes, automorphisms.
//! * [`domain`] — which parameter triples (p, q, n) are arithmetically admissible.
//! * [`seq`] — cyclic boundary sequences, complements, ring layouts.
//! * [`patch`] — deciding and enumerating fillings of a boundary by p-gons.
//! * [`assemble`] — gluing patches onto a decorated prism ring; named constructions.
//! * [`catalog`] — the enumeration pipeline, verification report and persistence.
//! * [`export`] — planar_code / dot / json output.

pub mod assemble;
pub mod catalog;
pub mod domain;
pub mod export;
pub mod map;
pub mod patch;
pub mod seq;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum RingError {
    /// A combinatorial map failed a structural requirement (valence,
    /// connectivity, Euler characteristic, permutation axioms).
    #[error("structural error: {0}")]
    Structural(String),
    /// A boundary sequence has no q-complement because some ring edge
    /// would need more than q-4 subdivision vertices.
    #[error("q-complement undefined: {0}")]
    ComplementUndefined(String),
    /// Inner and outer patches do not fit on the same ring.
    #[error("glue mismatch: {0}")]
    GlueMismatch(String),
    /// The q-gons of a map do not form a single ring.
    #[error("not a ring: {0}")]
    NotARing(String),
    /// A search exceeded its node or time budget. Never conflated with
    /// a negative answer.
    #[error("resource exhausted: {0}")]
    ResourceExhausted(String),
    /// Parameter out of the supported range.
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, RingError>;

/// Search budgets. The environment variable `RINGMAP_CAPS` overrides the
/// defaults; it is parsed as comma-separated `key=value` pairs with keys
/// `nodes` and `seconds`, e.g. `RINGMAP_CAPS=nodes=500000000,seconds=7200`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of search nodes per filled sequence.
    pub max_nodes: u64,
    /// Wall-clock budget for a whole enumeration run, in seconds.
    pub max_seconds: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_nodes: 100_000_000, max_seconds: 3600 }
    }
}

impl Caps {
    /// Default caps with any `RINGMAP_CAPS` environment override applied.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(spec) = std::env::var("RINGMAP_CAPS") {
            for part in spec.split(',') {
                let mut it = part.splitn(2, '=');
                match (it.next().map(str::trim), it.next().and_then(|v| v.trim().parse::<u64>().ok())) {
                    (Some("nodes"), Some(v)) => caps.max_nodes = v,
                    (Some("seconds"), Some(v)) => caps.max_seconds = v,
                    _ => {}
                }
            }
        }
        caps
    }
}
