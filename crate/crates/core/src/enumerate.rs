//! Fixed polyominoes up to translation, grown cell by cell.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Cell, Polyomino};
use crate::oracle::{verify_conjecture, ResourceLimits};
use crate::poly::IntPolynomial;
use crate::rook::rook_number;

/// Default upper bound accepted by [`enumerate_fixed`].
pub const DEFAULT_RANK_LIMIT: usize = 10;

/// Normalized, sorted cell list. Equal iff the polyominoes are translates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(pub Vec<Cell>);

impl CanonicalForm {
    pub fn of(p: &Polyomino) -> Self {
        CanonicalForm(p.normalize().cells().iter().copied().collect())
    }

    pub fn to_polyomino(&self) -> Polyomino {
        Polyomino::new(self.0.iter().copied()).expect("canonical forms are non-empty")
    }
}

/// Stream of fixed polyominoes by increasing rank, each rank in canonical order.
pub struct FixedPolyominoes {
    level: Vec<CanonicalForm>,
    pos: usize,
    rank: usize,
    max_rank: usize,
}

impl FixedPolyominoes {
    fn grow(level: &[CanonicalForm]) -> Vec<CanonicalForm> {
        let mut next = BTreeSet::new();
        for form in level {
            let p = form.to_polyomino();
            for c in p.cells() {
                for n in c.neighbours() {
                    if !p.contains(n) {
                        let grown = Polyomino::new(p.cells().iter().copied().chain([n]))
                            .expect("non-empty");
                        next.insert(CanonicalForm::of(&grown));
                    }
                }
            }
        }
        next.into_iter().collect()
    }
}

impl Iterator for FixedPolyominoes {
    type Item = Polyomino;

    fn next(&mut self) -> Option<Polyomino> {
        while self.pos == self.level.len() {
            if self.rank >= self.max_rank {
                return None;
            }
            self.level = Self::grow(&self.level);
            self.rank += 1;
            self.pos = 0;
        }
        self.pos += 1;
        Some(self.level[self.pos - 1].to_polyomino())
    }
}

/// Every fixed polyomino of rank `1..=max_rank`, each exactly once.
pub fn enumerate_fixed(max_rank: usize) -> Result<FixedPolyominoes> {
    enumerate_fixed_with_limit(max_rank, DEFAULT_RANK_LIMIT)
}

pub fn enumerate_fixed_with_limit(max_rank: usize, limit: usize) -> Result<FixedPolyominoes> {
    if max_rank < 1 || max_rank > limit {
        return Err(Error::ResourceLimit(format!(
            "rank bound {max_rank} outside 1..={limit}"
        )));
    }
    Ok(FixedPolyominoes {
        level: vec![CanonicalForm(vec![Cell::new(0, 0)])],
        pos: 0,
        rank: 1,
        max_rank,
    })
}

/// Grid predicates for [`filter_corpus`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    Simple,
    NotSimple,
    Thin,
    NotThin,
    NotCellInterval,
}

impl Predicate {
    pub fn holds(self, p: &Polyomino) -> bool {
        match self {
            Predicate::Simple => p.is_simple(),
            Predicate::NotSimple => !p.is_simple(),
            Predicate::Thin => p.is_thin(),
            Predicate::NotThin => !p.is_thin(),
            Predicate::NotCellInterval => !p.is_cell_interval(),
        }
    }
}

/// The polyominoes of rank `<= max_rank` satisfying every predicate.
pub fn filter_corpus(
    max_rank: usize,
    predicates: &[Predicate],
) -> Result<impl Iterator<Item = Polyomino>> {
    let predicates = predicates.to_vec();
    Ok(enumerate_fixed(max_rank)?.filter(move |p| predicates.iter().all(|q| q.holds(p))))
}

/// One line of a conjecture scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub cells: Polyomino,
    pub rank: usize,
    pub simple: bool,
    pub thin: bool,
    pub depth: usize,
    pub rook: Option<IntPolynomial>,
    pub h: Option<IntPolynomial>,
    pub d: Option<usize>,
    pub equal: Option<bool>,
    pub degree_matches: Option<bool>,
    pub skipped: Option<String>,
}

impl ScanRecord {
    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }
}

/// Runs the conjecture check on `p` at depth `rook number + 3`.
pub fn scan_record(p: &Polyomino, limits: &ResourceLimits) -> ScanRecord {
    let depth = rook_number(p) + 3;
    let mut record = ScanRecord {
        cells: p.clone(),
        rank: p.rank(),
        simple: p.is_simple(),
        thin: p.is_thin(),
        depth,
        rook: None,
        h: None,
        d: None,
        equal: None,
        degree_matches: None,
        skipped: None,
    };
    match verify_conjecture(p, depth, limits) {
        Ok(r) => {
            record.equal = Some(r.equal);
            record.degree_matches = Some(r.degree_matches);
            record.rook = Some(r.rook);
            record.h = Some(r.h);
            record.d = Some(r.d);
        }
        Err(e) => record.skipped = Some(e.to_string()),
    }
    record
}

/// Aggregate verdicts of a scan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub processed: usize,
    pub skipped: usize,
    pub thin: usize,
    pub non_thin: usize,
    pub equal: usize,
    pub unequal: usize,
    /// Thin, yet `r_P != h`.
    pub thin_unequal: Vec<Polyomino>,
    /// Not thin, yet `r_P == h`.
    pub non_thin_equal: Vec<Polyomino>,
    /// `deg h != r(P)`.
    pub degree_mismatch: Vec<Polyomino>,
}

impl ScanSummary {
    pub fn from_records<'a, I: IntoIterator<Item = &'a ScanRecord>>(records: I) -> Self {
        let mut s = ScanSummary::default();
        for r in records {
            s.total += 1;
            let (Some(equal), Some(deg_ok)) = (r.equal, r.degree_matches) else {
                s.skipped += 1;
                continue;
            };
            s.processed += 1;
            if r.thin {
                s.thin += 1;
            } else {
                s.non_thin += 1;
            }
            if equal {
                s.equal += 1;
            } else {
                s.unequal += 1;
            }
            if r.thin && !equal {
                s.thin_unequal.push(r.cells.clone());
            }
            if !r.thin && equal {
                s.non_thin_equal.push(r.cells.clone());
            }
            if !deg_ok {
                s.degree_mismatch.push(r.cells.clone());
            }
        }
        s
    }

    pub fn counterexamples(&self) -> usize {
        self.thin_unequal.len() + self.non_thin_equal.len() + self.degree_mismatch.len()
    }
}

/// Scans every polyomino of rank `<= max_rank` sequentially.
pub fn conjecture_scan(
    max_rank: usize,
    limits: &ResourceLimits,
) -> Result<(Vec<ScanRecord>, ScanSummary)> {
    let records: Vec<ScanRecord> = enumerate_fixed(max_rank)?
        .map(|p| scan_record(&p, limits))
        .collect();
    let summary = ScanSummary::from_records(&records);
    Ok((records, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::square_tetromino;

    #[test]
    fn small_ranks() {
        let all: Vec<Polyomino> = enumerate_fixed(2).unwrap().collect();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0], Polyomino::from_coords(&[(0, 0)]).unwrap());
        assert!(all.contains(&Polyomino::from_coords(&[(0, 0), (1, 0)]).unwrap()));
        assert!(all.contains(&Polyomino::from_coords(&[(0, 0), (0, 1)]).unwrap()));
    }

    #[test]
    fn rank_bounds() {
        assert!(enumerate_fixed(0).is_err());
        assert!(enumerate_fixed(11).is_err());
        assert!(enumerate_fixed_with_limit(11, 11).is_ok());
    }

    #[test]
    fn thin_corpus_at_rank_four() {
        assert_eq!(filter_corpus(4, &[Predicate::Thin]).unwrap().count(), 27);
        let fat: Vec<_> = filter_corpus(4, &[Predicate::NotThin]).unwrap().collect();
        assert_eq!(fat, vec![square_tetromino()]);
    }

    #[test]
    fn scan_at_rank_four() {
        let (records, summary) = conjecture_scan(4, &ResourceLimits::default()).unwrap();
        assert_eq!(summary.total, records.len());
        assert_eq!(summary.total, 1 + 2 + 6 + 19);
        assert_eq!(summary.processed + summary.skipped, summary.total);
        assert_eq!(summary.skipped, 0);
        assert_eq!(summary.unequal, 1);
        let unequal: Vec<_> = records.iter().filter(|r| r.equal == Some(false)).collect();
        assert_eq!(unequal[0].cells, square_tetromino());
        assert_eq!(summary.counterexamples(), 0);
    }
}
