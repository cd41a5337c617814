use cylra_core::constructions::{monk_ra, MonkParams};
use cylra_core::games::ef::{ef_solve, EfStructure};
use cylra_core::games::ra_game;
use cylra_core::games::{GameVariant, SolveBudget, Verdict};
use cylra_core::oracle::ramsey_colouring_exists;

#[test]
fn monk_pigeonhole_verdicts() {
    // Three greens, one red: every 1-colouring of K_3 has a monochromatic
    // triangle, so the universal player forces a red triangle among three
    // cone tips. Two greens survive.
    let budget = SolveBudget::default();
    let lose = monk_ra(MonkParams { greens: 3, reds: 1 }).unwrap();
    let r = ra_game::solve(&lose, GameVariant::G, 5, 6, &budget);
    assert_eq!(r.verdict, Verdict::ForallWins, "{:?}", r.notes);
    let cert = r.certificate.expect("certificate");
    ra_game::replay_certificate(&lose, GameVariant::G, 5, &cert).unwrap();

    // With a single red, the universal player also wins with two greens:
    // witnesses g0 and g1 over the identity get a composition-forced red
    // edge (g0;g1 = {r}), and one further witness demand (0,1,g0,r) closes
    // an all-red triangle, which the lone red index cannot 3-colour. Four
    // nodes and three rounds suffice, so the verdict is ForallWins at every
    // budget from (4,3) upward. This matches non-representability: any
    // single-red structure fails associativity, so no finite budget can be
    // survivable forever.
    let live = monk_ra(MonkParams { greens: 2, reds: 1 }).unwrap();
    let r = ra_game::solve(&live, GameVariant::G, 5, 6, &budget);
    assert_eq!(r.verdict, Verdict::ForallWins, "{:?}", r.notes);
    let r = ra_game::solve(&live, GameVariant::G, 4, 3, &budget);
    assert_eq!(r.verdict, Verdict::ForallWins, "{:?}", r.notes);
    let r = ra_game::solve(&live, GameVariant::G, 4, 2, &budget);
    assert_eq!(r.verdict, Verdict::ExistsWins, "{:?}", r.notes);

    // The Ramsey oracle values used by the acceptance battery.
    assert!(!ramsey_colouring_exists(3, 1).unwrap());
    assert!(ramsey_colouring_exists(2, 1).unwrap());
}

#[test]
fn fast_engine_matches_reference_on_small_boards() {
    let budget = SolveBudget::default();
    for (greens, reds) in [(2u32, 1u32), (3, 1)] {
        let s = monk_ra(MonkParams { greens, reds }).unwrap();
        for k in 1..=3u32 {
            let fast = ra_game::solve(&s, GameVariant::G, 3, k, &budget).verdict;
            let full = ra_game::solve_full(&s, GameVariant::G, 3, k, &budget).verdict;
            assert_eq!(fast, full, "monk({greens},{reds}) k={k}");
        }
    }
}

#[test]
fn lyndon_battery_monotone() {
    let budget = SolveBudget::default();
    let s = monk_ra(MonkParams { greens: 3, reds: 1 }).unwrap();
    let table = ra_game::lyndon_battery(&s, 7, 5, &budget);
    let mut lost = false;
    let mut lost_at = None;
    for (k, v) in &table {
        if *v == Verdict::ForallWins && !lost {
            lost = true;
            lost_at = Some(*k);
        }
        if lost {
            assert_eq!(*v, Verdict::ForallWins);
        }
    }
    // The hand argument wins within six rounds.
    assert!(lost_at.is_some_and(|k| k <= 6), "table: {table:?}");
}

#[test]
fn ef_complete_graph_law() {
    // Forall wins K_{n+1} vs K_n exactly when he has n+1 pebbles and n+1
    // rounds to spend.
    for n in 1..=5usize {
        for p in 1..=8usize {
            for r in 1..=8u32 {
                let left = EfStructure::complete_graph(n + 1);
                let right = EfStructure::complete_graph(n);
                let v = ef_solve(&left, &right, p, r);
                let expected = if p >= n + 1 && r >= (n + 1) as u32 {
                    Verdict::ForallWins
                } else {
                    Verdict::ExistsWins
                };
                assert_eq!(v, expected, "n={n} p={p} r={r}");
            }
        }
    }
}
