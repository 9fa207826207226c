//! JSON report emitted by every single-polyomino command.

use serde::Serialize;

use polyalg_core::structure::CollapseStep;
use polyalg_core::{ConjectureReport, HilbertSeries, IntPolynomial, Polyomino, TheoremReport};

#[derive(Debug, Serialize)]
pub struct Flags {
    pub connected: bool,
    pub simple: bool,
    pub thin: bool,
    pub cell_interval: bool,
}

/// Oracle comparison, tagged by mode.
#[derive(Debug, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Verdict {
    Theorem(TheoremReport),
    Conjecture(ConjectureReport),
}

/// Wall-clock milliseconds per stage; only filled with `--timings`.
#[derive(Debug, Default, Serialize)]
pub struct Timings {
    pub parse_ms: f64,
    pub compute_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub cells: Polyomino,
    pub ascii: String,
    pub rank: usize,
    pub vertices: usize,
    pub flags: Flags,
    pub rook_polynomial: Option<IntPolynomial>,
    pub rook_number: Option<usize>,
    pub hilbert_series: Option<HilbertSeries>,
    pub regularity: Option<usize>,
    pub multiplicity: Option<serde_json::Value>,
    pub a_invariant: Option<i64>,
    pub s_property: Option<bool>,
    pub gorenstein: Option<bool>,
    pub collapse: Option<CollapseStep>,
    pub oracle: Option<Verdict>,
    pub timings: Option<Timings>,
}

/// A big integer as a JSON number, or a decimal string beyond `i64`.
pub fn big_value(v: &num_bigint::BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    v.to_i64().map_or_else(|| v.to_string().into(), Into::into)
}

impl Report {
    pub fn new(command: &'static str, p: &Polyomino) -> Self {
        Report {
            command,
            cells: p.clone(),
            ascii: p.to_ascii(),
            rank: p.rank(),
            vertices: p.vertices().len(),
            flags: Flags {
                connected: p.is_connected(),
                simple: p.is_simple(),
                thin: p.is_thin(),
                cell_interval: p.is_cell_interval(),
            },
            rook_polynomial: None,
            rook_number: None,
            hilbert_series: None,
            regularity: None,
            multiplicity: None,
            a_invariant: None,
            s_property: None,
            gorenstein: None,
            collapse: None,
            oracle: None,
            timings: None,
        }
    }
}
