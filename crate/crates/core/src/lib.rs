//! Rook polynomials, Hilbert series and homological invariants of simple
//! thin polyominoes, with an independent Gröbner-basis oracle.

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod grid;
pub mod hilbert;
pub mod oracle;
pub mod poly;
pub mod rook;
pub mod structure;

pub use enumerate::{
    conjecture_scan, enumerate_fixed, filter_corpus, CanonicalForm, Predicate, ScanRecord,
    ScanSummary,
};
pub use error::{Error, Result};
pub use grid::{
    parse_polyomino, Cell, CellInterval, InputFormat, Orientation, Point, Polyomino, VertexInterval,
};
pub use hilbert::{
    a_invariant, hilbert_series_recursive, hilbert_series_thin, is_gorenstein, krull_dimension,
    multiplicity, regularity, series_expansion, HilbertSeries,
};
pub use oracle::{
    h_from_differences, hilbert_function_oracle, verify_conjecture, verify_main_theorem,
    ConjectureReport, ResourceLimits, TheoremReport,
};
pub use poly::IntPolynomial;
pub use rook::{rook_number, rook_polynomial_bruteforce, rook_polynomial_recursive};
pub use structure::{
    collapse, find_collapse, has_s_property, leaves, remove_leaf, CollapseStep, Leaf, TieBreak,
};
