use cylra_core::atom::{AtomName, EdgeColour, Shade};
use cylra_core::atomset::AtomSet;
use cylra_core::constructions::rainbow::{rainbow_finite, RainbowParams};
use cylra_core::constructions::split::{split_ra, SplitParams};
use cylra_core::games::{ca_game, GameVariant, SolveBudget};
use cylra_core::strategies::board::{BoardDemand, ColouredBoard, exists_rainbow_move};
use cylra_core::strategies::cone::replay_cone_strategy;
use cylra_core::strategies::partition::{exists_ef_partition_move, PartitionBook};
use cylra_core::strategies::rho::RhoBook;
use cylra_core::strategies::StrategyError;

#[test]
fn rho_gap_law_and_midpoints() {
    // Pool 27 = 3^3 hosts three rounds of insertions at gaps 9, 3, 1.
    let mut book = RhoBook::new(27, 3);
    book.advance_round();
    assert_eq!(book.gap(), 9);
    assert_eq!(book.insert(5).unwrap(), 13);
    book.advance_round();
    assert_eq!(book.gap(), 3);
    assert_eq!(book.insert(1).unwrap(), 5);
    book.advance_round();
    assert_eq!(book.gap(), 1);
    assert_eq!(book.insert(3).unwrap(), 9);
    book.check_invariants().unwrap();

    // A pool of 5 hosts one gap-9 insertion but not a second.
    let mut small = RhoBook::new(5, 3);
    small.advance_round();
    assert_eq!(small.insert(1).unwrap(), 2);
    assert!(matches!(small.insert(2), Err(StrategyError::NoRedAvailable { .. })));
}

#[test]
fn scripted_cone_responses() {
    let board = ColouredBoard::opening(EdgeColour::White(0, Shade::Full));
    let mut book = RhoBook::new(27, 3);
    book.advance_round();

    // First cone demand: a fresh green witness, the book gains one point.
    let (b1, book) = exists_rainbow_move(&board, &BoardDemand::cone(0, 1, 4), &book).unwrap();
    assert_eq!(b1.nodes(), 3);
    assert_eq!(b1.edge(0, 2), EdgeColour::Green(4));
    assert_eq!(book.get(4), Some(13));

    // Second cone over the same base with a lower tint: the apex-apex
    // edge gets the red dictated by rule (*), indices in book order.
    let mut book2 = book.clone();
    book2.advance_round();
    let (b2, book2) = exists_rainbow_move(&b1, &BoardDemand::cone(0, 1, 1), &book2).unwrap();
    assert_eq!(book2.get(1), Some(5));
    assert_eq!(b2.edge(3, 2), EdgeColour::Red(5, 13));

    // A third cone with an intermediate tint: every apex pair is red and
    // the red triple respects the shared-tint pattern.
    let mut book3 = book2.clone();
    book3.advance_round();
    let (b3, book3) = exists_rainbow_move(&b2, &BoardDemand::cone(0, 1, 2), &book3).unwrap();
    let v = book3.get(2).unwrap();
    assert!(5 < v && v < 13);
    assert_eq!(b3.edge(3, 4), EdgeColour::Red(5, v));
    assert_eq!(b3.edge(4, 2), EdgeColour::Red(v, 13));
    assert!(b3.consistent());
}

#[test]
fn scripted_exists_survives_small_tree() {
    // Full three-tint tree at the acceptance pool: the scripted responses
    // survive every universal line.
    let report = cylra_core::strategies::board::survive_exhaustive(3, 3, 27).unwrap();
    assert!(report.cone_positions > 100, "{report:?}");
    assert!(report.side_demands_verified > 10_000, "{report:?}");
    // An undersized red pool must fail through the gap law, not survive
    // vacuously.
    let err = cylra_core::strategies::board::survive_exhaustive(3, 3, 9).unwrap_err();
    assert!(matches!(err, cylra_core::strategies::StrategyError::NoRedAvailable { .. }), "{err}");
}

#[test]
fn cone_replay_defeats_exhaustive_exists() {
    let s = rainbow_finite(RainbowParams::standard(3)).unwrap();
    let budget = SolveBudget::default();
    let cert = replay_cone_strategy(&s, 6, 4, &budget).unwrap();
    // Four demands: the opening cone and three further tints.
    assert_eq!(cert.depth(), 4);
    ca_game::replay_certificate(&s, GameVariant::BoldG, 6, &cert, &budget).unwrap();
}

#[test]
fn partition_book_matches_split_algebras() {
    let left = split_ra(SplitParams { index_bound: 2, alpha: 3 }).unwrap();
    let right = split_ra(SplitParams { index_bound: 2, alpha: 4 }).unwrap();
    let book = PartitionBook::new(&left, &right).unwrap();

    // A pebble on an atom disjoint from the split element mirrors
    // identically.
    let y0 = left.atom_index(&AtomName::Yellow { index: 0 }).unwrap();
    let e = AtomSet::singleton(left.atom_count(), y0);
    let (partner, book) = exists_ef_partition_move(&book, true, &e, 3).unwrap();
    let y0r = right.atom_index(&AtomName::Yellow { index: 0 }).unwrap();
    assert_eq!(partner, AtomSet::singleton(right.atom_count(), y0r));

    // A pebble covering exactly 2 of the 3 left copies: the partner takes
    // exactly 2 of the 4 right copies.
    let copies: Vec<usize> = (0..left.atom_count())
        .filter(|&a| matches!(left.name(a), AtomName::RedCopy { .. }))
        .collect();
    let mut e2 = AtomSet::empty(left.atom_count());
    e2.insert(copies[0]);
    e2.insert(copies[1]);
    let (partner2, book2) = exists_ef_partition_move(&book, true, &e2, 1).unwrap();
    let taken: usize = (0..right.atom_count())
        .filter(|&b| matches!(right.name(b), AtomName::RedCopy { .. }) && partner2.contains(b))
        .count();
    assert_eq!(taken, 2);
    book2.check_invariants(1).unwrap();
}
