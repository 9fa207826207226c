//! Rook polynomials of polyomino boards.
//!
//! Two rooks attack each other when they share a row or a column and every
//! cell strictly between them belongs to the board; a missing cell blocks the
//! attack. Equivalently, two cells attack iff they lie in a common maximal
//! straight run of cells.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grid::{Cell, Polyomino};
use crate::poly::IntPolynomial;
use crate::structure::{decompose, TieBreak};

/// Whether rooks on `c` and `d` attack each other on the board `p`.
pub fn attacks(p: &Polyomino, c: Cell, d: Cell) -> Result<bool> {
    for cell in [c, d] {
        if !p.contains(cell) {
            return Err(Error::Precondition(format!(
                "cell {cell} is not in the polyomino"
            )));
        }
    }
    if c == d {
        return Err(Error::Precondition("a cell does not attack itself".into()));
    }
    let between =
        |lo: i32, hi: i32, f: &dyn Fn(i32) -> Cell| (lo + 1..hi).all(|k| p.contains(f(k)));
    Ok(if c.y == d.y {
        between(c.x.min(d.x), c.x.max(d.x), &|x| Cell::new(x, c.y))
    } else if c.x == d.x {
        between(c.y.min(d.y), c.y.max(d.y), &|y| Cell::new(c.x, y))
    } else {
        false
    })
}

/// For each cell (canonical order), the ids of its horizontal and vertical
/// maximal runs. Length-one runs get their own id.
fn run_ids(p: &Polyomino) -> Vec<(usize, usize)> {
    let mut ids: BTreeMap<Cell, (usize, usize)> = BTreeMap::new();
    let mut next = 0;
    for &c in p.cells() {
        let h = if p.contains(c.offset(-1, 0)) {
            ids[&c.offset(-1, 0)].0
        } else {
            next += 1;
            next - 1
        };
        let v = if p.contains(c.offset(0, -1)) {
            ids[&c.offset(0, -1)].1
        } else {
            next += 1;
            next - 1
        };
        ids.insert(c, (h, v));
    }
    p.cells().iter().map(|c| ids[c]).collect()
}

/// Counts non-attacking placements of every size by backtracking over cells
/// in canonical order, tracking which runs are occupied.
pub fn rook_polynomial_bruteforce(p: &Polyomino) -> IntPolynomial {
    let runs = run_ids(p);
    let n_runs = runs.iter().map(|&(h, v)| h.max(v) + 1).max().unwrap_or(0);
    let mut occupied = vec![false; n_runs];
    let mut counts = vec![0u128; p.rank() + 1];

    fn place(
        start: usize,
        k: usize,
        runs: &[(usize, usize)],
        occupied: &mut [bool],
        counts: &mut [u128],
    ) {
        counts[k] += 1;
        for i in start..runs.len() {
            let (h, v) = runs[i];
            if occupied[h] || occupied[v] {
                continue;
            }
            occupied[h] = true;
            occupied[v] = true;
            place(i + 1, k + 1, runs, occupied, counts);
            occupied[h] = false;
            occupied[v] = false;
        }
    }

    place(0, 0, &runs, &mut occupied, &mut counts);
    IntPolynomial::new(counts)
}

/// Largest number of pairwise non-attacking rooks.
pub fn rook_number(p: &Polyomino) -> usize {
    rook_polynomial_bruteforce(p).degree().unwrap_or(0)
}

/// Rook polynomial through the collapse recursion
/// `r_P = r_{P'} + t * r_{P''}`, with `1 + p t` for a cell interval of rank `p`.
pub fn rook_polynomial_recursive(p: &Polyomino) -> Result<IntPolynomial> {
    rook_polynomial_recursive_with(p, TieBreak::Smallest)
}

pub fn rook_polynomial_recursive_with(p: &Polyomino, tie: TieBreak) -> Result<IntPolynomial> {
    match decompose(p, tie)? {
        None => Ok(IntPolynomial::new([1, p.rank() as i64])),
        Some(d) => {
            let with_leaf_empty = rook_polynomial_recursive_with(&d.p_prime, tie)?;
            let with_rook_on_leaf = rook_polynomial_recursive_with(&d.p_double_prime, tie)?;
            Ok(&with_leaf_empty + &with_rook_on_leaf.shift(1))
        }
    }
}
