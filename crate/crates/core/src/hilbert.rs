//! Hilbert-Poincaré series of coordinate rings of simple thin polyominoes and
//! the invariants read off them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::Polyomino;
use crate::poly::{binomial, IntPolynomial};
use crate::rook::{rook_number, rook_polynomial_bruteforce};
use crate::structure::{decompose, has_s_property, require_simple_thin, TieBreak};

/// The rational function `numerator(t) / (1 - t)^denom_power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    #[serde(rename = "h")]
    pub numerator: IntPolynomial,
    #[serde(rename = "d")]
    pub denom_power: usize,
}

impl HilbertSeries {
    pub fn new(numerator: IntPolynomial, denom_power: usize) -> Self {
        HilbertSeries {
            numerator,
            denom_power,
        }
    }

    /// Cancels common `(1 - t)` factors.
    pub fn reduced(mut self) -> Self {
        while self.denom_power > 0 {
            match self.numerator.div_one_minus_t() {
                Some(q) if !self.numerator.is_zero() => {
                    self.numerator = q;
                    self.denom_power -= 1;
                }
                _ => break,
            }
        }
        self
    }

    pub fn is_reduced(&self) -> bool {
        self.denom_power == 0 || !self.numerator.eval_at_one().is_zero()
    }

    /// The same series written over `(1 - t)^power`, `power >= denom_power`.
    fn numerator_over(&self, power: usize) -> IntPolynomial {
        &self.numerator * &IntPolynomial::one_minus_t_pow(power - self.denom_power)
    }

    /// Sum of two series, reduced.
    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let power = self.denom_power.max(other.denom_power);
        HilbertSeries::new(
            &self.numerator_over(power) + &other.numerator_over(power),
            power,
        )
        .reduced()
    }

    /// Multiply by `t^k / (1 - t)^m`.
    pub fn scale(&self, k: usize, m: usize) -> HilbertSeries {
        HilbertSeries::new(self.numerator.shift(k), self.denom_power + m)
    }

    /// The first `up_to + 1` Hilbert function values.
    pub fn expand(&self, up_to: usize) -> Vec<BigInt> {
        series_expansion(self, up_to)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/(1-t)^{}", self.numerator, self.denom_power)
    }
}

/// `H(k) = sum_i h_i * C(d - 1 + k - i, d - 1)` for `k = 0..=up_to`.
pub fn series_expansion(series: &HilbertSeries, up_to: usize) -> Vec<BigInt> {
    let d = series.denom_power as u64;
    (0..=up_to)
        .map(|k| {
            series
                .numerator
                .coefficients()
                .iter()
                .enumerate()
                .take_while(|(i, _)| *i <= k)
                .map(|(i, h)| {
                    let m = (k - i) as u64;
                    let ways = if d == 0 {
                        BigInt::from((m == 0) as u8)
                    } else {
                        binomial(d - 1 + m, d - 1)
                    };
                    h * ways
                })
                .sum()
        })
        .collect()
}

fn require_simple(p: &Polyomino) -> Result<()> {
    if !p.is_connected() || !p.is_simple() {
        return Err(Error::Precondition(
            "the dimension formula needs a simple polyomino".into(),
        ));
    }
    Ok(())
}

/// `|V(P)| - rank(P)`.
pub fn krull_dimension(p: &Polyomino) -> Result<usize> {
    require_simple(p)?;
    Ok(p.vertices().len() - p.rank())
}

/// `(1 + r t) / (1 - t)^(r + 2)`.
pub fn cell_interval_series(r: usize) -> Result<HilbertSeries> {
    if r < 1 {
        return Err(Error::Precondition(
            "a cell interval has at least one cell".into(),
        ));
    }
    Ok(HilbertSeries::new(IntPolynomial::new([1, r as i64]), r + 2))
}

/// The rook polynomial over `(1 - t)^d`.
pub fn hilbert_series_thin(p: &Polyomino) -> Result<HilbertSeries> {
    require_simple_thin(p)?;
    Ok(HilbertSeries::new(
        rook_polynomial_bruteforce(p),
        krull_dimension(p)?,
    ))
}

/// One level of the series recursion, for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesStep {
    pub d: usize,
    pub d_prime: usize,
    pub d_double_prime: usize,
    pub r: usize,
}

/// `HP_P = 1/(1-t) * (HP_P' + t/(1-t)^(r-1) * HP_P'')`, bottoming out at
/// cell intervals.
pub fn hilbert_series_recursive(p: &Polyomino) -> Result<HilbertSeries> {
    hilbert_series_recursive_traced(p, TieBreak::Smallest, &mut |_| {})
}

/// Same as [`hilbert_series_recursive`], reporting each combination step.
pub fn hilbert_series_recursive_traced(
    p: &Polyomino,
    tie: TieBreak,
    trace: &mut dyn FnMut(&SeriesStep),
) -> Result<HilbertSeries> {
    let Some(dec) = decompose(p, tie)? else {
        return cell_interval_series(p.rank());
    };
    let r = dec.step.r;
    let prime = hilbert_series_recursive_traced(&dec.p_prime, tie, trace)?;
    let double_prime = hilbert_series_recursive_traced(&dec.p_double_prime, tie, trace)?;
    let series = prime.scale(0, 1).add(&double_prime.scale(1, r));
    trace(&SeriesStep {
        d: series.denom_power,
        d_prime: prime.denom_power,
        d_double_prime: double_prime.denom_power,
        r,
    });
    Ok(series)
}

/// Checks `1 + sum_{i=1}^{r-1} (-1)^i i C(r+1, i+1) t^(i+1) + (-1)^r r t^(r+1)`
/// against `(1 + r t)(1 - t)^r` coefficient by coefficient.
pub fn betti_numerator_identity(r: usize) -> Result<bool> {
    if r < 1 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    let mut lhs = vec![BigInt::zero(); r + 2];
    lhs[0] = BigInt::from(1);
    for i in 1..r {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        lhs[i + 1] = BigInt::from(sign * i as i64) * binomial(r as u64 + 1, i as u64 + 1);
    }
    let sign = if r.is_multiple_of(2) { 1 } else { -1 };
    lhs[r + 1] = BigInt::from(sign * r as i64);
    let lhs = IntPolynomial::new(lhs);
    let rhs = &IntPolynomial::new([1, r as i64]) * &IntPolynomial::one_minus_t_pow(r);
    Ok(lhs == rhs)
}

/// Castelnuovo-Mumford regularity, `deg h = r(P)`.
pub fn regularity(p: &Polyomino) -> Result<usize> {
    require_simple_thin(p)?;
    Ok(rook_number(p))
}

/// `r_P(1)`.
pub fn multiplicity(p: &Polyomino) -> Result<BigInt> {
    require_simple_thin(p)?;
    Ok(rook_polynomial_bruteforce(p).eval_at_one())
}

/// `deg h - d`.
pub fn a_invariant(p: &Polyomino) -> Result<i64> {
    require_simple_thin(p)?;
    let d = krull_dimension(p)?;
    Ok(rook_number(p) as i64 - d as i64)
}

pub fn is_palindromic(h: &IntPolynomial) -> bool {
    h.is_palindromic()
}

/// Gorenstein test for simple thin polyominoes.
///
/// Computes both the S-property and the symmetry of the rook polynomial; a
/// disagreement is reported as [`Error::Falsification`].
pub fn is_gorenstein(p: &Polyomino) -> Result<bool> {
    require_simple_thin(p)?;
    let s_property = has_s_property(p);
    let rook = rook_polynomial_bruteforce(p);
    let symmetric = is_palindromic(&rook);
    if s_property != symmetric {
        return Err(Error::Falsification(format!(
            "S-property is {s_property} but rook polynomial {rook} symmetric is {symmetric}:\n{p}"
        )));
    }
    Ok(s_property)
}

/// Converts an expansion to `i64`s for tests and reports.
pub fn to_i64s(values: &[BigInt]) -> Option<Vec<i64>> {
    values.iter().map(ToPrimitive::to_i64).collect()
}
