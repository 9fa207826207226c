mod common;

use std::collections::BTreeSet;

use common::*;
use polyalg_core::enumerate::{enumerate_fixed, filter_corpus, CanonicalForm, Predicate};
use polyalg_core::grid::Polyomino;
use polyalg_core::hilbert::{hilbert_series_recursive, hilbert_series_thin, is_gorenstein};
use polyalg_core::oracle::{hilbert_function_oracle, ResourceLimits};
use polyalg_core::poly::IntPolynomial;
use polyalg_core::rook::{rook_number, rook_polynomial_bruteforce, rook_polynomial_recursive_with};
use polyalg_core::structure::{find_collapse_with, has_s_property, TieBreak};
use proptest::prelude::*;

#[test]
fn enumeration_matches_independent_count() {
    let oracle = redelmeier_counts(8);
    let mut by_rank = vec![0u64; 9];
    for p in enumerate_fixed(8).unwrap() {
        by_rank[p.rank()] += 1;
    }
    assert_eq!(by_rank, oracle);
    assert_eq!(&oracle[1..], &[1, 2, 6, 19, 63, 216, 760, 2725]);
}

#[test]
fn enumeration_is_canonical_and_connected() {
    let mut seen = BTreeSet::new();
    for p in enumerate_fixed(7).unwrap() {
        assert!(p.is_connected());
        assert!(p.is_normalized());
        assert!(seen.insert(CanonicalForm::of(&p)), "duplicate {p:?}");
    }
}

#[test]
fn holes_first_appear_at_rank_seven() {
    assert_eq!(
        filter_corpus(6, &[Predicate::NotSimple]).unwrap().count(),
        0
    );
    let holed: Vec<Polyomino> = filter_corpus(7, &[Predicate::NotSimple]).unwrap().collect();
    assert!(!holed.is_empty());
    assert!(holed.iter().all(|p| p.rank() == 7));
}

#[test]
fn predicates_compose() {
    let fat_simple: Vec<Polyomino> = filter_corpus(5, &[Predicate::Simple, Predicate::NotThin])
        .unwrap()
        .collect();
    let expected: Vec<Polyomino> = enumerate_fixed(5)
        .unwrap()
        .filter(has_square_block)
        .collect();
    assert_eq!(fat_simple, expected);
    // Square tetromino plus the 8 fixed P-pentominoes.
    assert_eq!(fat_simple.len(), 9);
    let interior = filter_corpus(3, &[Predicate::NotCellInterval])
        .unwrap()
        .count();
    assert_eq!(interior, 4);
}

/// Every simple thin polyomino of rank <= 7 under both tie-breaks.
#[test]
fn recursions_agree_on_corpus() {
    for p in filter_corpus(7, &[Predicate::Simple, Predicate::Thin]).unwrap() {
        let brute = rook_polynomial_bruteforce(&p);
        let thin = hilbert_series_thin(&p).unwrap();
        for tie in [TieBreak::Smallest, TieBreak::Largest] {
            assert_eq!(
                rook_polynomial_recursive_with(&p, tie).unwrap(),
                brute,
                "{p}"
            );
        }
        assert_eq!(hilbert_series_recursive(&p).unwrap(), thin, "{p}");
        assert_eq!(has_s_property(&p), brute.is_palindromic(), "{p}");
        assert_eq!(is_gorenstein(&p).unwrap(), brute.is_palindromic());
    }
}

#[test]
fn walks_respect_laws_on_corpus() {
    for tie in [TieBreak::Smallest, TieBreak::Largest] {
        let mut stats = WalkStats::default();
        for p in filter_corpus(7, &[Predicate::Simple, Predicate::Thin]).unwrap() {
            walk(&p, tie, &mut stats);
            stats.violations.extend(denominator_violations(&p, tie));
        }
        assert!(
            stats.violations.is_empty(),
            "{:?}",
            &stats.violations[..stats.violations.len().min(5)]
        );
        assert!(stats.collapse_steps > 0);
    }
}

#[test]
fn collapse_exists_off_intervals() {
    for p in filter_corpus(
        7,
        &[
            Predicate::Simple,
            Predicate::Thin,
            Predicate::NotCellInterval,
        ],
    )
    .unwrap()
    {
        for tie in [TieBreak::Smallest, TieBreak::Largest] {
            assert!(find_collapse_with(&p, tie).is_ok(), "{p}");
        }
    }
}

fn coefficients_le(a: &IntPolynomial, b: &IntPolynomial) -> bool {
    let n = a.coefficients().len().max(b.coefficients().len());
    (0..n).all(|k| a.coeff(k) <= b.coeff(k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rook_recursion_matches_brute_force(p in simple_thin(11)) {
        let brute = rook_polynomial_bruteforce(&p);
        prop_assert_eq!(rook_polynomial_recursive_with(&p, TieBreak::Smallest).unwrap(), brute.clone());
        prop_assert_eq!(rook_polynomial_recursive_with(&p, TieBreak::Largest).unwrap(), brute);
    }

    #[test]
    fn series_recursion_matches_thin_formula(p in simple_thin(11)) {
        let series = hilbert_series_recursive(&p).unwrap();
        prop_assert_eq!(&series, &hilbert_series_thin(&p).unwrap());
        prop_assert!(series.is_reduced());
        prop_assert!(denominator_violations(&p, TieBreak::Largest).is_empty());
    }

    #[test]
    fn rook_polynomial_shape(p in simple_thin(11)) {
        let r = rook_polynomial_bruteforce(&p);
        prop_assert_eq!(r.coeff(0), 1.into());
        prop_assert_eq!(r.coeff(1), p.rank().into());
        let deg = r.degree().unwrap();
        prop_assert!((0..=deg).all(|k| r.coeff(k) > 0.into()));
    }

    #[test]
    fn gorenstein_characterizations_agree(p in simple_thin(11)) {
        prop_assert_eq!(has_s_property(&p), rook_polynomial_bruteforce(&p).is_palindromic());
    }

    #[test]
    fn collapse_laws(p in simple_thin(11)) {
        let mut stats = WalkStats::default();
        walk(&p, TieBreak::Smallest, &mut stats);
        prop_assert!(stats.violations.is_empty(), "{:?}", stats.violations);
    }

    /// Removing a cell that keeps the rest connected cannot add placements.
    #[test]
    fn rook_monotone_on_connected_subpolyominoes(p in simple_thin(9), pick in any::<prop::sample::Index>()) {
        prop_assume!(p.rank() > 1);
        let cells: Vec<_> = p.cells().iter().copied().collect();
        let drop = *pick.get(&cells);
        let q = Polyomino::new(cells.iter().copied().filter(|&c| c != drop)).unwrap();
        prop_assume!(q.is_connected());
        prop_assert!(coefficients_le(&rook_polynomial_bruteforce(&q), &rook_polynomial_bruteforce(&p)));
        prop_assert!(rook_number(&q) <= rook_number(&p));
    }

    #[test]
    fn grid_predicates_translation_invariant(p in simple_thin(9), dx in -5i32..5, dy in -5i32..5) {
        let q = p.translate(dx, dy);
        prop_assert_eq!(q.normalize(), p.normalize());
        prop_assert_eq!(q.normalize().normalize(), q.normalize());
        prop_assert_eq!(q.is_simple(), p.is_simple());
        prop_assert_eq!(q.is_thin(), p.is_thin());
        prop_assert_eq!(q.is_connected(), p.is_connected());
        prop_assert!(!has_square_block(&p));
    }

    #[test]
    fn maximal_intervals_of_thin(p in simple_thin(11)) {
        let ivs = p.maximal_cell_intervals();
        for c in p.cells() {
            prop_assert!(ivs.iter().filter(|iv| iv.contains(*c)).count() <= 2);
        }
        for (i, a) in ivs.iter().enumerate() {
            for b in &ivs[i + 1..] {
                prop_assert!(a.cells.iter().filter(|c| b.contains(**c)).count() <= 1);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_low_degrees(p in simple_thin(5)) {
        let h = hilbert_function_oracle(&p, 2, &ResourceLimits::default()).unwrap();
        prop_assert_eq!(h[0].clone(), 1.into());
        prop_assert_eq!(h[1].clone(), p.vertices().len().into());
    }
}
