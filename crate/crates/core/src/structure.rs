//! The two reductions used by the recursions: leaf removal (`P'`) and the
//! collapse of a maximal interval (`P''`), plus single cells and the
//! S-property.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Cell, CellInterval, Point, Polyomino};

/// A cell with an edge whose endpoints touch no other cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Leaf {
    pub cell: Cell,
    pub leaf_corners: (Point, Point),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CollapseKind {
    /// Removing the interval leaves one polyomino.
    Tail,
    /// Removing the interval leaves a polyomino and a cell interval.
    Endcut,
}

/// Corners of the pivot cell: `a`, `b` on the `P1` side, `a'`, `b'` facing
/// `P2`, with `a` and `a'` on a common line parallel to the collapsed interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PivotCorners {
    pub a: Point,
    pub b: Point,
    pub a_prime: Point,
    pub b_prime: Point,
}

/// One decomposition `P = P1 ⊔ I ⊔ P2` of a simple thin polyomino.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseStep {
    pub interval_i: CellInterval,
    pub interval_j: CellInterval,
    pub pivot: Cell,
    pub kind: CollapseKind,
    pub part_p1: Polyomino,
    pub part_p2: Option<Polyomino>,
    pub corners: PivotCorners,
    /// `a - a'`, applied to `P2`.
    pub translation: (i32, i32),
    /// Number of cells of `I`.
    pub r: usize,
}

/// Which candidate to take when several are valid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Canonical choice: lexicographically smallest candidate.
    #[default]
    Smallest,
    /// Largest candidate; used to check that results do not depend on choices.
    Largest,
}

/// Number of cells of the polyomino having each vertex as a corner.
fn vertex_multiplicity(p: &Polyomino) -> BTreeMap<Point, usize> {
    let mut counts = BTreeMap::new();
    for c in p.cells() {
        for v in c.corners() {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    counts
}

fn free_edge(cell: Cell, counts: &BTreeMap<Point, usize>) -> Option<(Point, Point)> {
    let mut free: Vec<(Point, Point)> = cell
        .edges()
        .into_iter()
        .filter(|(u, v)| counts[u] == 1 && counts[v] == 1)
        .collect();
    free.sort();
    free.first().copied()
}

/// All leaves, in canonical cell order, each with its smallest free edge.
pub fn leaves(p: &Polyomino) -> Vec<Leaf> {
    let counts = vertex_multiplicity(p);
    p.cells()
        .iter()
        .filter_map(|&cell| {
            free_edge(cell, &counts).map(|leaf_corners| Leaf { cell, leaf_corners })
        })
        .collect()
}

/// `P \ {C}`, renormalized.
pub fn remove_leaf(p: &Polyomino, leaf: &Leaf) -> Result<Polyomino> {
    if p.rank() < 2 {
        return Err(Error::Precondition("cannot remove the only cell".into()));
    }
    let counts = vertex_multiplicity(p);
    let (u, v) = leaf.leaf_corners;
    let is_edge = leaf
        .cell
        .edges()
        .iter()
        .any(|&(x, y)| (x, y) == (u, v) || (y, x) == (u, v));
    if !p.contains(leaf.cell) || !is_edge || counts[&u] != 1 || counts[&v] != 1 {
        return Err(Error::NotALeaf(format!(
            "cell {} with corners {u}, {v}",
            leaf.cell
        )));
    }
    Polyomino::new(p.cells().iter().copied().filter(|&c| c != leaf.cell)).map(|q| q.normalize())
}

/// Edge-connected components of a cell set, each sorted, ordered by first cell.
fn components(cells: &BTreeSet<Cell>) -> Vec<BTreeSet<Cell>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::from([start]);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbours() {
                if cells.contains(&n) && seen.insert(n) {
                    comp.insert(n);
                    queue.push_back(n);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn is_straight_run(cells: &BTreeSet<Cell>) -> bool {
    Polyomino::new(cells.iter().copied()).is_ok_and(|p| p.is_cell_interval())
}

/// Corners of `pivot` on the side facing `toward` (a neighbour along `J`)
/// and on the opposite side.
fn pivot_corners(pivot: Cell, toward: Cell) -> PivotCorners {
    let (x, y) = (pivot.x, pivot.y);
    let (dx, dy) = (toward.x - x, toward.y - y);
    // Near side: the edge of the pivot shared with `toward`.
    let (near, far) = match (dx, dy) {
        (-1, 0) => (x, x + 1),
        (1, 0) => (x + 1, x),
        (0, -1) => (y, y + 1),
        (0, 1) => (y + 1, y),
        _ => unreachable!("pivot neighbour must be edge-adjacent"),
    };
    if dy == 0 {
        // J horizontal; a is the upper corner.
        PivotCorners {
            a: Point::new(near, y + 1),
            b: Point::new(near, y),
            a_prime: Point::new(far, y + 1),
            b_prime: Point::new(far, y),
        }
    } else {
        // J vertical; a is the left corner.
        PivotCorners {
            a: Point::new(x, near),
            b: Point::new(x + 1, near),
            a_prime: Point::new(x, far),
            b_prime: Point::new(x + 1, far),
        }
    }
}

/// Tests whether `p` is collapsible in the maximal interval `interval` and
/// returns the step when it is. `intervals` must be `p.maximal_cell_intervals()`.
pub fn collapsible_in(
    p: &Polyomino,
    interval: &CellInterval,
    intervals: &[CellInterval],
    tie: TieBreak,
) -> Option<CollapseStep> {
    let mut meeting = intervals
        .iter()
        .filter(|other| *other != interval && other.shares_cell(interval));
    let j = meeting.next()?;
    if meeting.next().is_some() {
        return None;
    }
    let shared: Vec<Cell> = interval
        .cells
        .iter()
        .copied()
        .filter(|c| j.contains(*c))
        .collect();
    let [pivot] = shared[..] else { return None };

    let rest: BTreeSet<Cell> = p
        .cells()
        .iter()
        .copied()
        .filter(|c| !interval.contains(*c))
        .collect();
    let comps = components(&rest);
    let (p1, p2, kind) = match comps.len() {
        1 => (comps[0].clone(), None, CollapseKind::Tail),
        2 => {
            let straight: Vec<usize> = (0..2).filter(|&k| is_straight_run(&comps[k])).collect();
            let p2_idx = match (straight.as_slice(), tie) {
                ([], _) => return None,
                ([k], _) => *k,
                (_, TieBreak::Smallest) => 1,
                (_, TieBreak::Largest) => 0,
            };
            (
                comps[1 - p2_idx].clone(),
                Some(comps[p2_idx].clone()),
                CollapseKind::Endcut,
            )
        }
        _ => return None,
    };

    let (sx, sy) = j.orientation.step();
    let toward = [pivot.offset(sx, sy), pivot.offset(-sx, -sy)]
        .into_iter()
        .find(|n| p1.contains(n))?;
    let corners = pivot_corners(pivot, toward);
    let translation = (
        corners.a.x - corners.a_prime.x,
        corners.a.y - corners.a_prime.y,
    );
    Some(CollapseStep {
        interval_i: interval.clone(),
        interval_j: j.clone(),
        pivot,
        kind,
        part_p1: Polyomino::new(p1).ok()?,
        part_p2: p2.map(|c| Polyomino::new(c).expect("component is non-empty")),
        corners,
        translation,
        r: interval.len(),
    })
}

pub(crate) fn require_simple_thin(p: &Polyomino) -> Result<()> {
    if !p.is_connected() {
        return Err(Error::Precondition("polyomino is not connected".into()));
    }
    if !p.is_simple() {
        return Err(Error::Precondition("polyomino is not simple".into()));
    }
    if !p.is_thin() {
        return Err(Error::Precondition("polyomino is not thin".into()));
    }
    Ok(())
}

/// Canonical collapse step: tails before endcuts, then the interval with the
/// smallest first cell.
pub fn find_collapse(p: &Polyomino) -> Result<CollapseStep> {
    find_collapse_with(p, TieBreak::Smallest)
}

pub fn find_collapse_with(p: &Polyomino, tie: TieBreak) -> Result<CollapseStep> {
    require_simple_thin(p)?;
    if p.is_cell_interval() {
        return Err(Error::Precondition(
            "a cell interval has no collapse step".into(),
        ));
    }
    let intervals = p.maximal_cell_intervals();
    let mut candidates: Vec<CollapseStep> = intervals
        .iter()
        .filter_map(|iv| collapsible_in(p, iv, &intervals, tie))
        .collect();
    if tie == TieBreak::Largest {
        candidates.reverse();
    }
    candidates
        .iter()
        .find(|s| s.kind == CollapseKind::Tail)
        .or_else(|| candidates.first())
        .cloned()
        .ok_or_else(|| {
            Error::Falsification(format!(
                "simple thin polyomino without a collapsible interval:\n{p}"
            ))
        })
}

fn validate_step(p: &Polyomino, step: &CollapseStep) -> Result<()> {
    let bad = |msg: &str| Err(Error::InvalidStep(msg.into()));
    let i = &step.interval_i;
    if i.cells.iter().any(|c| !p.contains(*c))
        || step.interval_j.cells.iter().any(|c| !p.contains(*c))
    {
        return bad("intervals are not inside the polyomino");
    }
    if !i.contains(step.pivot) || !step.interval_j.contains(step.pivot) {
        return bad("pivot is not in both intervals");
    }
    if step.r != i.len() {
        return bad("r differs from the interval length");
    }
    let mut union: BTreeSet<Cell> = i.cells.iter().copied().collect();
    let mut total = i.len();
    for part in std::iter::once(&step.part_p1).chain(step.part_p2.as_ref()) {
        total += part.rank();
        union.extend(part.cells().iter().copied());
    }
    if total != p.rank() || union != *p.cells() {
        return bad("parts do not partition the polyomino");
    }
    match (&step.kind, &step.part_p2) {
        (CollapseKind::Tail, None) => Ok(()),
        (CollapseKind::Endcut, Some(p2)) if p2.is_cell_interval() => Ok(()),
        _ => bad("kind does not match the second part"),
    }
}

/// `P''`: `P1` together with `P2` translated by `a - a'`, normalized.
pub fn collapse(p: &Polyomino, step: &CollapseStep) -> Result<Polyomino> {
    validate_step(p, step)?;
    let (dx, dy) = step.translation;
    let mut cells: BTreeSet<Cell> = step.part_p1.cells().clone();
    if let Some(p2) = &step.part_p2 {
        for c in p2.cells() {
            if !cells.insert(c.offset(dx, dy)) {
                return Err(Error::InvalidStep("translated part overlaps P1".into()));
            }
        }
    }
    Ok(Polyomino::new(cells)?.normalize())
}

/// Everything one recursion step needs.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub step: CollapseStep,
    /// The leaf removed to form `P'`; an end cell of `I` other than the pivot.
    pub leaf: Leaf,
    pub p_prime: Polyomino,
    pub p_double_prime: Polyomino,
}

/// Collapse step, leaf of the collapsed interval, `P'` and `P''`; `None` for
/// cell intervals (the base case).
pub fn decompose(p: &Polyomino, tie: TieBreak) -> Result<Option<Decomposition>> {
    require_simple_thin(p)?;
    if p.is_cell_interval() {
        return Ok(None);
    }
    let step = find_collapse_with(p, tie)?;
    let i = &step.interval_i;
    let ends = [i.first(), i.last()];
    let mut candidates: Vec<Leaf> = leaves(p)
        .into_iter()
        .filter(|l| l.cell != step.pivot && ends.contains(&l.cell))
        .collect();
    if tie == TieBreak::Largest {
        candidates.reverse();
    }
    let leaf = *candidates
        .first()
        .ok_or_else(|| Error::Falsification(format!("collapsed interval has no leaf:\n{p}")))?;
    let p_prime = remove_leaf(p, &leaf)?;
    let p_double_prime = collapse(p, &step)?;
    Ok(Some(Decomposition {
        step,
        leaf,
        p_prime,
        p_double_prime,
    }))
}

/// Cells that lie in exactly one maximal interval.
pub fn single_cells(p: &Polyomino) -> BTreeSet<Cell> {
    let intervals = p.maximal_cell_intervals();
    p.cells()
        .iter()
        .copied()
        .filter(|&c| intervals.iter().filter(|iv| iv.contains(c)).count() == 1)
        .collect()
}

/// Every maximal interval holds exactly one single cell.
pub fn has_s_property(p: &Polyomino) -> bool {
    let singles = single_cells(p);
    p.maximal_cell_intervals()
        .iter()
        .all(|iv| iv.cells.iter().filter(|c| singles.contains(c)).count() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::grid::Orientation;

    fn c(x: i32, y: i32) -> Cell {
        Cell::new(x, y)
    }

    fn leaf_cells(p: &Polyomino) -> Vec<Cell> {
        leaves(p).iter().map(|l| l.cell).collect()
    }

    /// Independent leaf test straight from the definition: an edge of C with
    /// neither endpoint a corner of another cell.
    fn is_leaf_by_definition(p: &Polyomino, cell: Cell) -> bool {
        let others: BTreeSet<Point> = p
            .cells()
            .iter()
            .filter(|&&d| d != cell)
            .flat_map(|d| d.corners())
            .collect();
        cell.edges()
            .iter()
            .any(|(u, v)| !others.contains(u) && !others.contains(v))
    }

    #[test]
    fn domino_leaves() {
        assert_eq!(leaf_cells(&row(2)), vec![c(0, 0), c(1, 0)]);
    }

    #[test]
    fn skew_leaves() {
        assert_eq!(leaf_cells(&skew_tetromino()), vec![c(0, 0), c(1, 2)]);
    }

    #[test]
    fn heptomino_leaves() {
        // C1, C2, C4 in canonical order.
        assert_eq!(leaf_cells(&heptomino()), vec![c(0, 2), c(1, 0), c(3, 0)]);
        for p in [heptomino(), staircase(), skew_tetromino(), cross(), ring8()] {
            let expected: Vec<Cell> = p
                .cells()
                .iter()
                .copied()
                .filter(|&x| is_leaf_by_definition(&p, x))
                .collect();
            assert_eq!(leaf_cells(&p), expected);
        }
    }

    #[test]
    fn canonical_leaf_edge_is_smallest() {
        let l = leaves(&row(3))[0];
        assert_eq!(l.cell, c(0, 0));
        assert_eq!(l.leaf_corners, (Point::new(0, 0), Point::new(0, 1)));
    }

    #[test]
    fn remove_leaf_examples() {
        let r3 = row(3);
        let l = *leaves(&r3).last().unwrap();
        assert_eq!(remove_leaf(&r3, &l).unwrap(), row(2));

        let skew = skew_tetromino();
        let l = leaves(&skew)
            .into_iter()
            .find(|l| l.cell == c(1, 2))
            .unwrap();
        assert_eq!(
            remove_leaf(&skew, &l).unwrap(),
            Polyomino::from_coords(&[(0, 0), (0, 1), (1, 1)]).unwrap()
        );
    }

    #[test]
    fn remove_leaf_errors() {
        let one = row(1);
        let l = leaves(&one)[0];
        assert!(matches!(remove_leaf(&one, &l), Err(Error::Precondition(_))));
        let fake = Leaf {
            cell: c(2, 1),
            leaf_corners: (Point::new(2, 2), Point::new(3, 2)),
        };
        assert!(matches!(
            remove_leaf(&heptomino(), &fake),
            Err(Error::NotALeaf(_))
        ));
    }

    #[test]
    fn heptomino_collapse_is_tail() {
        let p = heptomino();
        let s = find_collapse(&p).unwrap();
        assert_eq!(s.kind, CollapseKind::Tail);
        assert_eq!(s.interval_i.cells, vec![c(0, 2), c(1, 2)]);
        assert_eq!(s.interval_j.cells, vec![c(1, 0), c(1, 1), c(1, 2)]);
        assert_eq!(s.pivot, c(1, 2));
        assert!(s.part_p2.is_none());
        assert_eq!(s.r, 2);
        let q = collapse(&p, &s).unwrap();
        let expected = Polyomino::from_coords(&[(1, 1), (1, 0), (2, 1), (3, 1), (3, 0)])
            .unwrap()
            .normalize();
        assert_eq!(q, expected);
    }

    #[test]
    fn cross_collapses_as_endcut_in_column() {
        let p = cross();
        let intervals = p.maximal_cell_intervals();
        let column = intervals
            .iter()
            .find(|iv| iv.orientation == Orientation::Vertical)
            .unwrap();
        let s = collapsible_in(&p, column, &intervals, TieBreak::Smallest).unwrap();
        assert_eq!(s.kind, CollapseKind::Endcut);
        assert_eq!(s.pivot, c(1, 2));
        assert_eq!(s.part_p1, Polyomino::from_coords(&[(0, 2)]).unwrap());
        assert_eq!(
            s.part_p2,
            Some(Polyomino::from_coords(&[(2, 2), (3, 2), (4, 2)]).unwrap())
        );
        assert_eq!(s.corners.a, Point::new(1, 3));
        assert_eq!(s.corners.b, Point::new(1, 2));
        assert_eq!(s.corners.a_prime, Point::new(2, 3));
        assert_eq!(s.translation, (-1, 0));
        // Two horizontal segments joined into one row.
        assert_eq!(collapse(&p, &s).unwrap(), row(4));
    }

    #[test]
    fn cross_canonical_choice() {
        // Both arms are endcuts; the row has the smaller first cell.
        let s = find_collapse(&cross()).unwrap();
        assert_eq!(s.kind, CollapseKind::Endcut);
        assert_eq!(s.interval_i.orientation, Orientation::Horizontal);
        assert_eq!(collapse(&cross(), &s).unwrap().rank(), 5);
    }

    #[test]
    fn l_tromino_tail() {
        let s = find_collapse(&l_tromino()).unwrap();
        assert_eq!(s.kind, CollapseKind::Tail);
        assert_eq!(s.r, 2);
        assert_eq!(s.interval_i.orientation, Orientation::Vertical);
        let other = find_collapse_with(&l_tromino(), TieBreak::Largest).unwrap();
        assert_eq!(other.interval_i.orientation, Orientation::Horizontal);
    }

    #[test]
    fn find_collapse_errors() {
        assert!(matches!(
            find_collapse(&row(4)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            find_collapse(&square_tetromino()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            find_collapse(&ring8()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn collapse_rejects_foreign_step() {
        let s = find_collapse(&heptomino()).unwrap();
        assert!(matches!(
            collapse(&staircase(), &s),
            Err(Error::InvalidStep(_))
        ));
        let mut bad = s.clone();
        bad.r = 3;
        assert!(matches!(
            collapse(&heptomino(), &bad),
            Err(Error::InvalidStep(_))
        ));
    }

    #[test]
    fn single_cells_examples() {
        let want: BTreeSet<Cell> = [c(0, 2), c(1, 0), c(2, 1), c(3, 0)].into();
        assert_eq!(single_cells(&heptomino()), want);
        let want: BTreeSet<Cell> = [c(0, 2), c(2, 0)].into();
        assert_eq!(single_cells(&staircase()), want);
        assert_eq!(single_cells(&row(5)).len(), 5);
    }

    #[test]
    fn s_property_examples() {
        assert!(has_s_property(&heptomino()));
        assert!(!has_s_property(&staircase()));
        assert!(has_s_property(&row(1)));
        assert!(!has_s_property(&row(2)));
    }

    #[test]
    fn decompose_heptomino() {
        let d = decompose(&heptomino(), TieBreak::Smallest)
            .unwrap()
            .unwrap();
        assert_eq!(d.leaf.cell, c(0, 2));
        assert_eq!(d.p_prime.rank(), 6);
        assert_eq!(d.p_double_prime.rank(), 5);
        assert!(decompose(&row(3), TieBreak::Smallest).unwrap().is_none());
    }
}
