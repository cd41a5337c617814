//! The ordered survival board: a complete edge-coloured graph over which
//! the existential player's scripted red-choice rule is validated against
//! an exhaustive universal adversary.
//!
//! The board's palette has integer-ordered green tints and an ordered red
//! index pool. Its triangle rules (deliberately distinct from the finite
//! rainbow generator's stricter table) are:
//!
//! - three green edges are forbidden;
//! - two tinted greens with distinct tints p != q meeting at a node forbid
//!   a base-grade (index 0) white third edge, and a red third edge must
//!   have its index order matching the tint order (read from the p-apex
//!   toward the q-apex) — the "two greens and one red" forbidden class;
//!   an ordinary (index 1) white third is allowed;
//! - a cone corner (tinted green plus the plain apex green) with a white
//!   third edge requires the white's shade to admit the tint;
//! - red triples are otherwise unconstrained as bare triangles: the
//!   source's consistency check for red triangles is scoped to apexes of
//!   cones with a common base.
//!
//! The scripted red-choice rule (*) is scoped the same way: the response
//! labels the edge between two apexes of cones with a common base by the
//! book red r_{rho(p), rho(q)}; every other new edge is an ordinary white.
//!
//! A round adds one node: the universal player picks an ordered base pair
//! (x, y) and the two edge colours of the new node toward x and y, subject
//! to the demanded triangle being consistent; the existential player must
//! colour every remaining edge of the new node. The scripted response
//! labels forced corners with reds through the rho book (rule (*)) and
//! everything else with a full-shade white.

use crate::atom::{EdgeColour, Shade};
use crate::strategies::rho::RhoBook;
use crate::strategies::StrategyError;
use std::collections::BTreeMap;

/// Consistency of a triangle under the ordered board rules, with edges
/// oriented as in `RainbowPalette::triangle_consistent`.
pub fn board_triangle_consistent(e01: EdgeColour, e02: EdgeColour, e12: EdgeColour) -> bool {
    if e01.is_green() && e02.is_green() && e12.is_green() {
        return false;
    }
    let corners = [
        (e01, e02, e12),
        (e01.mirror(), e12, e02),
        (e02.mirror(), e12.mirror(), e01),
    ];
    for (left, right, third) in corners {
        match (left, right) {
            (EdgeColour::Green(p), EdgeColour::Green(q)) if p != q => match third {
                EdgeColour::Red(a, b) => {
                    if (p < q) != (a < b) {
                        return false;
                    }
                }
                EdgeColour::White(0, _) => return false,
                _ => {}
            },
            (EdgeColour::Green(t), EdgeColour::TintGreen(_))
            | (EdgeColour::TintGreen(_), EdgeColour::Green(t)) => {
                if let EdgeColour::White(_, shade) = third {
                    if !shade.admits(t) {
                        return false;
                    }
                }
            }
            _ => {}
        }
    }
    true
}

/// A complete edge-coloured graph; edges stored for a < b, oriented a -> b.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColouredBoard {
    n: usize,
    edges: BTreeMap<(usize, usize), EdgeColour>,
}

impl ColouredBoard {
    /// The two-node opening board with the given edge colour.
    pub fn opening(c: EdgeColour) -> Self {
        let mut edges = BTreeMap::new();
        edges.insert((0, 1), c);
        ColouredBoard { n: 2, edges }
    }

    pub fn nodes(&self) -> usize {
        self.n
    }

    /// Edge colour oriented x -> y.
    pub fn edge(&self, x: usize, y: usize) -> EdgeColour {
        debug_assert_ne!(x, y);
        if x < y {
            self.edges[&(x, y)]
        } else {
            self.edges[&(y, x)].mirror()
        }
    }

    /// Every triangle passes the board rules.
    pub fn consistent(&self) -> bool {
        for a in 0..self.n {
            for b in a + 1..self.n {
                for c in b + 1..self.n {
                    if !board_triangle_consistent(
                        self.edge(a, b),
                        self.edge(a, c),
                        self.edge(b, c),
                    ) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A cylindrifier demand: a new node z with edge(x, z) = cx (read x -> z)
/// and edge(z, y) = cy (read z -> y).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoardDemand {
    pub x: usize,
    pub y: usize,
    pub cx: EdgeColour,
    pub cy: EdgeColour,
}

impl BoardDemand {
    /// A cone demand: apex tinted `t` over the ordered base (x, y).
    pub fn cone(x: usize, y: usize, t: i64) -> Self {
        BoardDemand { x, y, cx: EdgeColour::Green(t), cy: EdgeColour::TintGreen(1) }
    }

    /// Whether the demanded triangle is consistent with the board.
    pub fn legal(&self, board: &ColouredBoard) -> bool {
        self.x < board.nodes()
            && self.y < board.nodes()
            && self.x != self.y
            && board_triangle_consistent(self.cx, board.edge(self.x, self.y), self.cy)
    }
}

fn green_tint(c: EdgeColour) -> Option<i64> {
    match c {
        EdgeColour::Green(t) => Some(t),
        _ => None,
    }
}

/// The scripted existential response: place the demanded edges, extend the
/// book for any new tints, label corner-forced edges with reds through the
/// book (rule (*)), and label everything else with a full-shade white.
/// Errors propagate pool exhaustion, unsatisfiable forced corners, and
/// (defensively) any resulting inconsistency with a trace.
pub fn exists_rainbow_move(
    board: &ColouredBoard,
    demand: &BoardDemand,
    book: &RhoBook,
) -> Result<(ColouredBoard, RhoBook), StrategyError> {
    if !demand.legal(board) {
        return Err(StrategyError::IllegalMove(format!("{demand:?}")));
    }
    let mut book = book.clone();
    let z = board.nodes();
    let mut next = board.clone();
    next.n = z + 1;
    next.edges.insert((demand.x, z), demand.cx);
    next.edges.insert((demand.y, z), demand.cy.mirror());
    // New tints enter the book in ascending order (deterministic).
    let mut tints: Vec<i64> =
        [demand.cx, demand.cy].iter().filter_map(|&c| green_tint(c)).collect();
    tints.sort_unstable();
    for t in tints {
        book.insert(t)?;
    }
    // Rule (*) applies between apexes of cones with a common base. The new
    // node is a cone apex iff the demand gave it one tinted green (toward
    // the base-0 node) and one plain apex green (toward the other base
    // node); every apex created on this board has exactly that shape, so
    // the forced value per edge is unique.
    let apex_base = match (green_tint(demand.cx), demand.cx, green_tint(demand.cy), demand.cy) {
        (Some(p), _, None, EdgeColour::TintGreen(_)) => Some((demand.x, demand.y, p)),
        (None, EdgeColour::TintGreen(_), Some(p), _) => Some((demand.y, demand.x, p)),
        _ => None,
    };
    for w in 0..z {
        if w == demand.x || w == demand.y {
            continue;
        }
        let mut label = EdgeColour::White(1, Shade::Full);
        if let Some((base0, base1, p)) = apex_base {
            // w is a same-base cone apex iff it carries a tinted green to
            // the base-0 node and a plain apex green to the other.
            if matches!(next.edge(base1, w), EdgeColour::TintGreen(_)) {
                if let Some(q) = green_tint(next.edge(base0, w)) {
                    if q != p {
                        let (mu, b) = (
                            book.insert(p)?, // already present: demanded tints were inserted
                            book.insert(q)?,
                        );
                        label = EdgeColour::Red(mu, b); // read z -> w
                    }
                }
            }
        }
        let key = if w < z { (w, z) } else { (z, w) };
        let oriented = if w < z { label.mirror() } else { label };
        next.edges.insert(key, oriented);
    }
    book.check_invariants()?;
    // Verify every new triangle (defensive; the scripted rules are meant
    // to make this unreachable).
    for a in 0..z {
        for b in a + 1..z {
            if !board_triangle_consistent(next.edge(a, b), next.edge(a, z), next.edge(b, z)) {
                return Err(StrategyError::Invariant {
                    trace: format!(
                        "inconsistent triangle ({a},{b},{z}): {:?} {:?} {:?} after {demand:?}",
                        next.edge(a, b),
                        next.edge(a, z),
                        next.edge(b, z)
                    ),
                });
            }
        }
    }
    Ok((next, book))
}

/// Statistics from a survival run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SurvivalReport {
    /// Positions reached through the recursive cone tree.
    pub cone_positions: usize,
    /// Scripted responses verified against the wider demand alphabet.
    pub side_demands_verified: usize,
}

/// Red index candidates for universal demands: the book's used values plus
/// one representative inside every gap between them (and the pool ends),
/// capped for tractability. The board rules read only the order pattern of
/// red indices, so one representative per gap exhausts the demand
/// behaviours.
fn red_candidates(book: &RhoBook, pool: u32) -> Vec<u32> {
    let used: Vec<u32> = book.entries().map(|(_, v)| v).collect();
    let mut out: Vec<u32> = Vec::new();
    let mut prev: Option<u32> = None;
    for &v in &used {
        let lo = prev.map_or(0, |p| p + 1);
        if lo < v {
            out.push((lo + v - 1) / 2);
        }
        out.push(v);
        prev = Some(v);
    }
    let lo = prev.map_or(0, |p| p + 1);
    if lo < pool {
        out.push((lo + pool - 1) / 2);
    }
    out.truncate(8);
    out
}

/// The full demand alphabet at a position: every ordered base pair with
/// every colour pair over the tint pool, whites of both flavours and all
/// shades, and reds over the gap-representative candidates.
fn demand_alphabet(board: &ColouredBoard, book: &RhoBook, tints: i64, pool: u32) -> Vec<BoardDemand> {
    let mut colours = vec![EdgeColour::TintGreen(1)];
    for t in 1..=tints {
        colours.push(EdgeColour::Green(t));
    }
    for i in 0..2u8 {
        colours.push(EdgeColour::White(i, Shade::Empty));
        for t in 1..=tints {
            colours.push(EdgeColour::White(i, Shade::Tint(t)));
        }
        colours.push(EdgeColour::White(i, Shade::Full));
    }
    let reds = red_candidates(book, pool);
    for &a in &reds {
        for &b in &reds {
            if a != b {
                colours.push(EdgeColour::Red(a, b));
            }
        }
    }
    let mut out = Vec::new();
    for x in 0..board.nodes() {
        for y in 0..board.nodes() {
            if x == y {
                continue;
            }
            for &cx in &colours {
                for &cy in &colours {
                    let d = BoardDemand { x, y, cx, cy };
                    if d.legal(board) {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}

/// Run the exhaustive universal tree for `rounds` rounds against the
/// scripted existential player, starting from the full-shade white opening
/// edge: (a) recurse through every cone demand over every ordered base
/// pair and every tint in `1..=tints`; (b) at every reached position,
/// additionally verify the scripted response against the whole demand
/// alphabet (with red indices quotiented to gap representatives). Returns
/// the statistics on success; any demand the script cannot answer
/// surfaces as an error.
pub fn survive_exhaustive(
    rounds: u32,
    tints: i64,
    pool: u32,
) -> Result<SurvivalReport, StrategyError> {
    let board = ColouredBoard::opening(EdgeColour::White(0, Shade::Full));
    let book = RhoBook::new(pool, rounds);
    let mut report = SurvivalReport::default();
    survive_rec(&board, &book, rounds, tints, pool, &mut report)?;
    Ok(report)
}

fn survive_rec(
    board: &ColouredBoard,
    book: &RhoBook,
    remaining: u32,
    tints: i64,
    pool: u32,
    report: &mut SurvivalReport,
) -> Result<(), StrategyError> {
    report.cone_positions += 1;
    if remaining == 0 {
        return Ok(());
    }
    let mut stepped = book.clone();
    stepped.advance_round();
    // (b) the wider alphabet: verify one scripted response per demand.
    for d in demand_alphabet(board, &stepped, tints, pool) {
        let (next, next_book) = exists_rainbow_move(board, &d, &stepped)?;
        debug_assert!(next.consistent());
        next_book.check_invariants()?;
        report.side_demands_verified += 1;
    }
    // (a) recurse through the cone demands.
    for x in 0..board.nodes() {
        for y in 0..board.nodes() {
            if x == y {
                continue;
            }
            for t in 1..=tints {
                let d = BoardDemand::cone(x, y, t);
                if !d.legal(board) {
                    continue;
                }
                let (next, next_book) = exists_rainbow_move(board, &d, &stepped)?;
                survive_rec(&next, &next_book, remaining - 1, tints, pool, report)?;
            }
        }
    }
    Ok(())
}
