//! Lattice model of polyominoes: cells, vertices, intervals, parsing and the
//! structural predicates (connected, simple, thin).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i32; 2]", into = "[i32; 2]")]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }
}

impl From<[i32; 2]> for Point {
    fn from([x, y]: [i32; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i32; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The unit cell `[(x, y), (x + 1, y + 1)]`, identified by its lower-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i32; 2]", into = "[i32; 2]")]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub fn lower_left(self) -> Point {
        Point::new(self.x, self.y)
    }

    /// Corners in the order lower-left, lower-right, upper-left, upper-right.
    pub fn corners(self) -> [Point; 4] {
        let (x, y) = (self.x, self.y);
        [
            Point::new(x, y),
            Point::new(x + 1, y),
            Point::new(x, y + 1),
            Point::new(x + 1, y + 1),
        ]
    }

    /// The four edges, each as an ordered pair of endpoints.
    pub fn edges(self) -> [(Point, Point); 4] {
        let [ll, lr, ul, ur] = self.corners();
        [(ll, lr), (ll, ul), (lr, ur), (ul, ur)]
    }

    pub fn offset(self, dx: i32, dy: i32) -> Cell {
        Cell::new(self.x + dx, self.y + dy)
    }

    pub fn neighbours(self) -> [Cell; 4] {
        [
            self.offset(1, 0),
            self.offset(-1, 0),
            self.offset(0, 1),
            self.offset(0, -1),
        ]
    }
}

impl From<[i32; 2]> for Cell {
    fn from([x, y]: [i32; 2]) -> Self {
        Cell { x, y }
    }
}

impl From<Cell> for [i32; 2] {
    fn from(c: Cell) -> Self {
        [c.x, c.y]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.x, self.y)
    }
}

/// Input encodings accepted by [`parse_polyomino`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    /// Rows of `#` (cell) and `.` (empty); the top row has the highest `y`.
    AsciiGrid,
    /// A JSON array of `[x, y]` integer pairs.
    CoordinateList,
}

impl InputFormat {
    /// Guess the format from the first non-blank character.
    pub fn detect(input: &str) -> InputFormat {
        match input.trim_start().chars().next() {
            Some('[') => InputFormat::CoordinateList,
            _ => InputFormat::AsciiGrid,
        }
    }
}

/// A finite, non-empty set of cells together with its vertex set.
///
/// Construction does not require edge-connectivity so that inputs can be
/// classified; use [`Polyomino::is_connected`] to check.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyomino {
    cells: BTreeSet<Cell>,
    vertices: BTreeSet<Point>,
}

impl Serialize for Polyomino {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.cells.iter())
    }
}

impl PartialOrd for Polyomino {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polyomino {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cells.cmp(&other.cells)
    }
}

impl Polyomino {
    /// Builds a polyomino from cells; duplicates collapse to one cell.
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::Empty);
        }
        let vertices = cells.iter().flat_map(|c| c.corners()).collect();
        Ok(Polyomino { cells, vertices })
    }

    /// Shorthand for tests and fixtures: `Polyomino::from_coords(&[(0, 0), (1, 0)])`.
    pub fn from_coords(coords: &[(i32, i32)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Cell::new(x, y)))
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    pub fn vertices(&self) -> &BTreeSet<Point> {
        &self.vertices
    }

    /// Smallest cell in the canonical (x, y) order.
    pub fn first_cell(&self) -> Cell {
        *self.cells.iter().next().expect("non-empty")
    }

    /// Inclusive bounds `(min_x, min_y, max_x, max_y)` of the cell coordinates.
    pub fn bounds(&self) -> (i32, i32, i32, i32) {
        let mut it = self.cells.iter();
        let c = it.next().expect("non-empty");
        it.fold((c.x, c.y, c.x, c.y), |(x0, y0, x1, y1), c| {
            (x0.min(c.x), y0.min(c.y), x1.max(c.x), y1.max(c.y))
        })
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Polyomino {
        Polyomino::new(self.cells.iter().map(|c| c.offset(dx, dy))).expect("non-empty")
    }

    /// Translate so that the minimum x and minimum y are both zero.
    pub fn normalize(&self) -> Polyomino {
        let (x0, y0, _, _) = self.bounds();
        if x0 == 0 && y0 == 0 {
            return self.clone();
        }
        self.translate(-x0, -y0)
    }

    pub fn is_normalized(&self) -> bool {
        let (x0, y0, _, _) = self.bounds();
        x0 == 0 && y0 == 0
    }

    /// True when the cells, viewed under edge adjacency, form one component.
    pub fn is_connected(&self) -> bool {
        let start = self.first_cell();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbours() {
                if self.cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// True when no empty cell is enclosed.
    ///
    /// Flood-fills the complement inside the bounding box padded by one unit;
    /// everything outside the padded box is trivially connected to it.
    pub fn is_simple(&self) -> bool {
        let (x0, y0, x1, y1) = self.bounds();
        let (x0, y0, x1, y1) = (x0 - 1, y0 - 1, x1 + 1, y1 + 1);
        let inside = |c: Cell| c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
        let start = Cell::new(x0, y0);
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbours() {
                if inside(n) && !self.cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        let area = (x1 - x0 + 1) as usize * (y1 - y0 + 1) as usize;
        seen.len() + self.cells.len() == area
    }

    /// True when no 2x2 block of cells is contained in the polyomino.
    pub fn is_thin(&self) -> bool {
        !self.cells.iter().any(|&c| {
            self.contains(c.offset(1, 0))
                && self.contains(c.offset(0, 1))
                && self.contains(c.offset(1, 1))
        })
    }

    /// True when all cells lie in one row or one column.
    pub fn is_cell_interval(&self) -> bool {
        let (x0, y0, x1, y1) = self.bounds();
        let span = ((x1 - x0) as usize + 1) * ((y1 - y0) as usize + 1);
        (x0 == x1 || y0 == y1) && span == self.rank()
    }

    /// Maximal horizontal and vertical runs of cells, with runs that are
    /// strictly contained in another run dropped.
    ///
    /// For thin polyominoes these are exactly the maximal inner intervals of
    /// cells. A lone cell yields one interval with [`Orientation::Point`].
    pub fn maximal_cell_intervals(&self) -> Vec<CellInterval> {
        if self.rank() == 1 {
            return vec![CellInterval {
                cells: vec![self.first_cell()],
                orientation: Orientation::Point,
            }];
        }
        let mut out = Vec::new();
        for &c in &self.cells {
            if c.neighbours().iter().all(|&n| !self.contains(n)) {
                out.push(CellInterval {
                    cells: vec![c],
                    orientation: Orientation::Point,
                });
                continue;
            }
            for orientation in [Orientation::Horizontal, Orientation::Vertical] {
                let (dx, dy) = orientation.step();
                if self.contains(c.offset(-dx, -dy)) {
                    continue;
                }
                let mut run = vec![c];
                let mut next = c.offset(dx, dy);
                while self.contains(next) {
                    run.push(next);
                    next = next.offset(dx, dy);
                }
                // A length-one run lies inside the perpendicular run unless
                // the cell has no neighbour at all.
                if run.len() >= 2 {
                    out.push(CellInterval {
                        cells: run,
                        orientation,
                    });
                }
            }
        }
        out.sort();
        out
    }

    /// Every proper vertex interval whose cells all belong to the polyomino.
    pub fn inner_intervals(&self) -> Vec<VertexInterval> {
        let mut out = Vec::new();
        for &c in &self.cells {
            // Grow rectangles with lower-left cell `c`.
            let mut max_w = usize::MAX;
            let mut h = 0;
            loop {
                let row = c.offset(0, h);
                let mut w = 0;
                while w < max_w && self.contains(row.offset(w as i32, 0)) {
                    w += 1;
                }
                if w == 0 {
                    break;
                }
                max_w = w;
                for width in 1..=w {
                    out.push(VertexInterval::new(
                        c.lower_left(),
                        Point::new(c.x + width as i32, c.y + h + 1),
                    ));
                }
                h += 1;
            }
        }
        out.sort();
        out
    }

    /// Renders the cells as rows of `#`/`.`, top row first.
    pub fn to_ascii(&self) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let mut rows = Vec::new();
        for y in (y0..=y1).rev() {
            let row: String = (x0..=x1)
                .map(|x| {
                    if self.contains(Cell::new(x, y)) {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect();
            rows.push(row);
        }
        rows.join("\n")
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// Parses a polyomino and returns it normalized.
pub fn parse_polyomino(input: &str, format: InputFormat) -> Result<Polyomino> {
    let cells = match format {
        InputFormat::AsciiGrid => parse_ascii(input)?,
        InputFormat::CoordinateList => parse_coordinates(input)?,
    };
    Ok(Polyomino::new(cells)?.normalize())
}

fn parse_ascii(input: &str) -> Result<Vec<Cell>> {
    let rows: Vec<&str> = input
        .lines()
        .map(str::trim_end)
        .skip_while(|l| l.is_empty())
        .collect();
    let rows: Vec<&str> = match rows.iter().rposition(|l| !l.is_empty()) {
        Some(last) => rows[..=last].to_vec(),
        None => Vec::new(),
    };
    let height = rows.len() as i32;
    let mut cells = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let y = height - 1 - i as i32;
        for (x, ch) in row.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::new(x as i32, y)),
                '.' => {}
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} at row {}, column {}",
                        i + 1,
                        x + 1
                    )))
                }
            }
        }
    }
    if cells.is_empty() {
        return Err(Error::Empty);
    }
    Ok(cells)
}

fn parse_coordinates(input: &str) -> Result<Vec<Cell>> {
    let pairs: Vec<[i32; 2]> =
        serde_json::from_str(input).map_err(|e| Error::Parse(format!("coordinate list: {e}")))?;
    if pairs.is_empty() {
        return Err(Error::Empty);
    }
    Ok(pairs.into_iter().map(Cell::from).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
    /// A single cell, which is simultaneously a row and a column.
    Point,
}

impl Orientation {
    /// Unit step along the run.
    pub fn step(self) -> (i32, i32) {
        match self {
            Orientation::Horizontal => (1, 0),
            Orientation::Vertical => (0, 1),
            Orientation::Point => (0, 0),
        }
    }
}

/// The vertex interval `[lower, upper]` of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexInterval {
    pub lower: Point,
    pub upper: Point,
}

impl VertexInterval {
    pub fn new(lower: Point, upper: Point) -> Self {
        debug_assert!(lower.x <= upper.x && lower.y <= upper.y);
        VertexInterval { lower, upper }
    }

    pub fn is_proper(&self) -> bool {
        self.lower.x < self.upper.x && self.lower.y < self.upper.y
    }

    /// The diagonal corners `a` (lower-left) and `b` (upper-right).
    pub fn diagonal(&self) -> (Point, Point) {
        (self.lower, self.upper)
    }

    /// The anti-diagonal corners `c` (upper-left) and `d` (lower-right).
    pub fn anti_diagonal(&self) -> (Point, Point) {
        (
            Point::new(self.lower.x, self.upper.y),
            Point::new(self.upper.x, self.lower.y),
        )
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.lower.x..self.upper.x)
            .flat_map(move |x| (self.lower.y..self.upper.y).map(move |y| Cell::new(x, y)))
    }
}

/// A straight run of consecutive cells, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CellInterval {
    pub cells: Vec<Cell>,
    pub orientation: Orientation,
}

impl CellInterval {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn first(&self) -> Cell {
        self.cells[0]
    }

    pub fn last(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }

    pub fn shares_cell(&self, other: &CellInterval) -> bool {
        self.cells.iter().any(|c| other.contains(*c))
    }
}
