//! Named polyominoes that recur in tests, benchmarks and documentation.

use crate::grid::Polyomino;

fn build(coords: &[(i32, i32)]) -> Polyomino {
    Polyomino::from_coords(coords).expect("fixture is non-empty")
}

/// Seven-cell simple thin polyomino with four maximal intervals, each holding
/// exactly one single cell. Cells in order: C1, D12, D23, C2, C3, D34, C4.
pub fn heptomino() -> Polyomino {
    build(&[(0, 2), (1, 2), (1, 1), (1, 0), (2, 1), (3, 1), (3, 0)])
}

/// Five-cell staircase: C1, A, D, B, C2. Two of its intervals have no single cell.
pub fn staircase() -> Polyomino {
    build(&[(0, 2), (1, 2), (1, 1), (2, 1), (2, 0)])
}

pub fn square_tetromino() -> Polyomino {
    build(&[(0, 0), (1, 0), (0, 1), (1, 1)])
}

pub fn skew_tetromino() -> Polyomino {
    build(&[(0, 0), (0, 1), (1, 1), (1, 2)])
}

pub fn l_tromino() -> Polyomino {
    build(&[(0, 0), (1, 0), (0, 1)])
}

/// 2x2 block plus one cell: the only non-thin shape among pentominoes.
pub fn p_pentomino() -> Polyomino {
    build(&[(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)])
}

/// The 3x3 box without its centre.
pub fn ring8() -> Polyomino {
    build(&[
        (0, 0),
        (1, 0),
        (2, 0),
        (0, 1),
        (2, 1),
        (0, 2),
        (1, 2),
        (2, 2),
    ])
}

/// A horizontal cell interval of rank `r`.
pub fn row(r: usize) -> Polyomino {
    assert!(r >= 1);
    Polyomino::new((0..r as i32).map(|x| crate::grid::Cell::new(x, 0))).expect("r >= 1")
}

/// A cross: the row `y = 2` for `x = 0..=4` and the column `x = 1` for
/// `y = 0..=5`. Collapsing it in the column glues `(0,2)` to the three cells
/// right of the crossing.
pub fn cross() -> Polyomino {
    let mut coords: Vec<(i32, i32)> = (0..=4).map(|x| (x, 2)).collect();
    coords.extend((0..=5).map(|y| (1, y)));
    build(&coords)
}
