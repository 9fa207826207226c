//! Independent verification through the polyomino ideal.
//!
//! The inner 2-minors generate a pure binomial ideal. A degree-capped
//! Gröbner basis gives the initial ideal, whose Hilbert function is counted
//! exactly and compared against the combinatorial side.

mod count;
mod groebner;
mod monomial;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Point, Polyomino};
use crate::hilbert::{hilbert_series_thin, series_expansion, HilbertSeries};
use crate::poly::{serialize_bigints, IntPolynomial};
use crate::rook::{rook_number, rook_polynomial_bruteforce};
use crate::structure::require_simple_thin;

pub use count::{hilbert_numerator, minimalize};
pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use monomial::{Binomial, Monomial, TermOrder};

/// Guards against runaway oracle computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResourceLimits {
    pub max_vars: usize,
    pub max_degree: usize,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits {
            max_vars: 30,
            max_degree: 12,
        }
    }
}

impl ResourceLimits {
    fn check(&self, p: &Polyomino, degree: usize) -> Result<()> {
        let n = p.vertices().len();
        if n > self.max_vars {
            return Err(Error::ResourceLimit(format!(
                "{n} vertex variables exceed the limit of {}",
                self.max_vars
            )));
        }
        if degree > self.max_degree {
            return Err(Error::ResourceLimit(format!(
                "degree {degree} exceeds the limit of {}",
                self.max_degree
            )));
        }
        Ok(())
    }
}

/// Vertex variables in lexicographic order; index 0 is the largest variable.
#[derive(Clone, Debug)]
pub struct VariableMap {
    points: Vec<Point>,
    index: BTreeMap<Point, usize>,
}

impl VariableMap {
    pub fn new(p: &Polyomino) -> Self {
        let points: Vec<Point> = p.vertices().iter().copied().collect();
        let index = points.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        VariableMap { points, index }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn index(&self, v: Point) -> Option<usize> {
        self.index.get(&v).copied()
    }

    fn product(&self, a: Point, b: Point) -> Monomial {
        let mut m = Monomial::one(self.len());
        m.0[self.index[&a]] += 1;
        m.0[self.index[&b]] += 1;
        m
    }

    /// `x(i,j)*x(k,l)`, with `^e` for repeated variables.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .support()
            .map(|(i, e)| {
                let v = self.points[i];
                if e == 1 {
                    format!("x({},{})", v.x, v.y)
                } else {
                    format!("x({},{})^{e}", v.x, v.y)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }

    pub fn format_binomial(&self, b: &Binomial) -> String {
        format!(
            "{} - {}",
            self.format_monomial(&b.lead),
            self.format_monomial(&b.trail)
        )
    }
}

/// One oriented binomial per inner interval, deduplicated.
pub fn inner_2_minors(p: &Polyomino) -> Vec<Binomial> {
    inner_2_minors_with(p, &VariableMap::new(p), TermOrder::DegRevLex)
}

fn inner_2_minors_with(p: &Polyomino, vars: &VariableMap, order: TermOrder) -> Vec<Binomial> {
    let mut out: Vec<Binomial> = Vec::new();
    for iv in p.inner_intervals() {
        let (a, b) = iv.diagonal();
        let (c, d) = iv.anti_diagonal();
        if let Some(g) = Binomial::oriented(vars.product(a, b), vars.product(c, d), order) {
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Generators, a Gröbner basis valid through `degree`, and the Hilbert
/// function read off it.
#[derive(Clone, Debug)]
pub struct OracleRun {
    pub vars: VariableMap,
    pub generators: Vec<Binomial>,
    pub basis: GroebnerBasis,
    pub hilbert_function: Vec<BigInt>,
}

impl OracleRun {
    /// Plain-text dump: a comment header, then one binomial per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "-- generators ({})", self.generators.len());
        for g in &self.generators {
            let _ = writeln!(s, "{}", self.vars.format_binomial(g));
        }
        let _ = writeln!(
            s,
            "-- groebner basis ({}, degrevlex, complete: {})",
            self.basis.elements.len(),
            self.basis.is_complete()
        );
        for g in &self.basis.elements {
            let _ = writeln!(s, "{}", self.vars.format_binomial(g));
        }
        s
    }
}

/// Runs the full oracle pipeline up to degree `up_to`.
pub fn run_oracle(p: &Polyomino, up_to: usize, limits: &ResourceLimits) -> Result<OracleRun> {
    limits.check(p, up_to)?;
    let vars = VariableMap::new(p);
    let order = TermOrder::DegRevLex;
    let generators = inner_2_minors_with(p, &vars, order);
    let basis = buchberger(&generators, order, Some(up_to.max(2) as u32))?;
    let leads = minimalize(basis.leading_monomials());
    let numerator = hilbert_numerator(&leads);
    let hilbert_function = series_expansion(&HilbertSeries::new(numerator, vars.len()), up_to);
    Ok(OracleRun {
        vars,
        generators,
        basis,
        hilbert_function,
    })
}

/// `H(0..=up_to)` of `K[P]`, counted from the initial ideal.
pub fn hilbert_function_oracle(
    p: &Polyomino,
    up_to: usize,
    limits: &ResourceLimits,
) -> Result<Vec<BigInt>> {
    Ok(run_oracle(p, up_to, limits)?.hilbert_function)
}

/// Upper bound on `d` tried by [`h_from_differences`].
pub const MAX_DIFFERENCES: usize = 256;

/// Inverts [`series_expansion`]: applies `(Δa)(k) = a(k) - a(k-1)` until the
/// last two entries vanish. Returns `(h, d)`.
pub fn h_from_differences(values: &[BigInt]) -> Result<(IntPolynomial, usize)> {
    if values.len() < 2 {
        return Err(Error::InsufficientDepth(format!(
            "{} values cannot show two trailing zeros",
            values.len()
        )));
    }
    let mut a = values.to_vec();
    for d in 0..=MAX_DIFFERENCES {
        let n = a.len();
        if a[n - 1].is_zero() && a[n - 2].is_zero() {
            let h = IntPolynomial::new(a);
            if h.is_zero() {
                break;
            }
            return Ok((h, d));
        }
        for k in (1..n).rev() {
            let prev = a[k - 1].clone();
            a[k] -= prev;
        }
    }
    Err(Error::InsufficientDepth(format!(
        "differences of {} values never stabilized at zero",
        values.len()
    )))
}

/// Outcome of checking `H_{K[P]}` against the series built from `r_P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub depth: usize,
    pub matches: bool,
    #[serde(serialize_with = "serialize_bigints")]
    pub oracle: Vec<BigInt>,
    #[serde(serialize_with = "serialize_bigints")]
    pub expected: Vec<BigInt>,
    pub series: HilbertSeries,
}

/// Compares the oracle Hilbert function with the expansion of
/// `r_P(t) / (1 - t)^d` for a simple thin `p`.
pub fn verify_main_theorem(
    p: &Polyomino,
    depth: usize,
    limits: &ResourceLimits,
) -> Result<TheoremReport> {
    require_simple_thin(p)?;
    let need = rook_number(p) + 2;
    if depth < need {
        return Err(Error::InsufficientDepth(format!(
            "depth {depth} is below rook number + 2 = {need}"
        )));
    }
    let series = hilbert_series_thin(p)?;
    let expected = series_expansion(&series, depth);
    let oracle = hilbert_function_oracle(p, depth, limits)?;
    Ok(TheoremReport {
        depth,
        matches: oracle == expected,
        oracle,
        expected,
        series,
    })
}

/// Outcome of comparing the recovered `h(t)` with the rook polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub depth: usize,
    pub equal: bool,
    pub h: IntPolynomial,
    pub d: usize,
    pub rook: IntPolynomial,
    pub rook_number: usize,
    /// `deg h == rook number`.
    pub degree_matches: bool,
    pub is_thin: bool,
    pub is_simple: bool,
}

/// Recovers `h(t)` from the oracle and compares it with `r_P(t)`.
pub fn verify_conjecture(
    p: &Polyomino,
    depth: usize,
    limits: &ResourceLimits,
) -> Result<ConjectureReport> {
    if !p.is_connected() {
        return Err(Error::Precondition("the polyomino is not connected".into()));
    }
    let values = hilbert_function_oracle(p, depth, limits)?;
    let (h, d) = h_from_differences(&values)?;
    let rook = rook_polynomial_bruteforce(p);
    let rook_number = rook.degree().unwrap_or(0);
    Ok(ConjectureReport {
        depth,
        equal: h == rook,
        degree_matches: h.degree() == Some(rook_number),
        h,
        d,
        rook,
        rook_number,
        is_thin: p.is_thin(),
        is_simple: p.is_simple(),
    })
}
