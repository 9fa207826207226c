#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use polyalg_core::grid::{Cell, Polyomino};
use polyalg_core::hilbert::hilbert_series_recursive_traced;
use polyalg_core::rook::rook_number;
use polyalg_core::structure::{decompose, TieBreak};
use proptest::prelude::*;

/// Fixed polyomino counts by rank via Redelmeier's algorithm, sharing no code
/// with the library enumerator.
pub fn redelmeier_counts(n: usize) -> Vec<u64> {
    fn valid((x, y): (i32, i32)) -> bool {
        y > 0 || (y == 0 && x >= 0)
    }
    fn go(
        untried: &mut Vec<(i32, i32)>,
        size: usize,
        n: usize,
        seen: &mut HashSet<(i32, i32)>,
        counts: &mut [u64],
    ) {
        while let Some(c) = untried.pop() {
            counts[size + 1] += 1;
            if size + 1 < n {
                let mut next = untried.clone();
                let mut added = Vec::new();
                for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                    let nb = (c.0 + dx, c.1 + dy);
                    if valid(nb) && seen.insert(nb) {
                        added.push(nb);
                        next.push(nb);
                    }
                }
                go(&mut next, size + 1, n, seen, counts);
                for a in added {
                    seen.remove(&a);
                }
            }
        }
    }
    let mut counts = vec![0; n + 1];
    let mut seen = HashSet::from([(0, 0)]);
    go(&mut vec![(0, 0)], 0, n, &mut seen, &mut counts);
    counts
}

/// True when some 2x2 block of cells lies in `p`.
pub fn has_square_block(p: &Polyomino) -> bool {
    p.cells().iter().any(|c| {
        [c.offset(1, 0), c.offset(0, 1), c.offset(1, 1)]
            .iter()
            .all(|&d| p.contains(d))
    })
}

/// Grows a thin polyomino from `(0, 0)`; each step picks a cell and a side.
pub fn grow_thin(steps: &[(prop::sample::Index, u8)]) -> Polyomino {
    let mut cells: BTreeSet<Cell> = BTreeSet::from([Cell::new(0, 0)]);
    for (idx, side) in steps {
        let base = *idx.get(&cells.iter().copied().collect::<Vec<_>>());
        let new = base.neighbours()[*side as usize % 4];
        if cells.contains(&new) {
            continue;
        }
        let fat = [(-1, -1), (-1, 0), (0, -1), (0, 0)]
            .iter()
            .any(|&(dx, dy)| {
                let ll = new.offset(dx, dy);
                [ll, ll.offset(1, 0), ll.offset(0, 1), ll.offset(1, 1)]
                    .iter()
                    .all(|c| *c == new || cells.contains(c))
            });
        if !fat {
            cells.insert(new);
        }
    }
    Polyomino::new(cells).unwrap().normalize()
}

/// Random simple thin polyominoes with up to `max_steps + 1` cells.
pub fn simple_thin(max_steps: usize) -> impl Strategy<Value = Polyomino> {
    prop::collection::vec((any::<prop::sample::Index>(), 0u8..4), 0..=max_steps)
        .prop_map(|s| grow_thin(&s))
        .prop_filter("simple", |p| p.is_simple())
}

/// Tallies from walking the whole recursion tree.
#[derive(Debug, Default)]
pub struct WalkStats {
    pub nodes: usize,
    pub leaf_steps: usize,
    pub collapse_steps: usize,
    pub violations: Vec<String>,
}

/// Visits every decomposition reached by the recursions under `tie` and
/// checks the rook-number and size laws.
pub fn walk(p: &Polyomino, tie: TieBreak, stats: &mut WalkStats) {
    stats.nodes += 1;
    let Some(dec) = decompose(p, tie).expect("simple thin") else {
        return;
    };
    let r = rook_number(p);
    let (rp, rpp) = (rook_number(&dec.p_prime), rook_number(&dec.p_double_prime));
    stats.leaf_steps += 1;
    stats.collapse_steps += 1;
    if rp != r && rp + 1 != r {
        stats
            .violations
            .push(format!("r(P') = {rp}, r(P) = {r} for {p:?}"));
    }
    if rpp + 1 != r {
        stats
            .violations
            .push(format!("r(P'') = {rpp}, r(P) = {r} for {p:?}"));
    }
    let s = dec.step.r;
    let pp = &dec.p_double_prime;
    if pp.rank() + s != p.rank() || pp.vertices().len() + 2 * s != p.vertices().len() {
        stats.violations.push(format!("size law fails for {p:?}"));
    }
    for q in [&dec.p_prime, pp] {
        if !(q.is_connected() && q.is_simple() && q.is_thin()) {
            stats
                .violations
                .push(format!("lost simple thin: {q:?} from {p:?}"));
        }
    }
    walk(&dec.p_prime, tie, stats);
    walk(pp, tie, stats);
}

/// Denominator laws `d = d' + 1 = d'' + r` at every step of the series recursion.
pub fn denominator_violations(p: &Polyomino, tie: TieBreak) -> Vec<String> {
    let mut bad = Vec::new();
    hilbert_series_recursive_traced(p, tie, &mut |st| {
        if st.d_prime + 1 != st.d || st.d_double_prime + st.r != st.d {
            bad.push(format!("{st:?} in {p:?}"));
        }
    })
    .expect("simple thin");
    bad
}
