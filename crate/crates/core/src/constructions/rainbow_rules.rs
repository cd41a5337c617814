//! The coloured-graph consistency tables for the rainbow family.
//!
//! The literature the rainbow construction descends from defers the
//! complete white/yellow tables to cited sources, so this module is the
//! single versioned authority for the concrete finite rules used here.
//! Version v1 rules, for dimension 3:
//!
//! - Edge colours: one plain green g_1; tinted greens g_0^t for
//!   1 <= t <= greenCount; whites w_i (i < 2) fused with a yellow shade
//!   from the palette {empty, single tint, full}; oriented reds r_{a,b}
//!   with a != b drawn from `red_count` indices.
//! - A triangle with three green edges is inconsistent.
//! - Two tinted greens with distinct tints p != q meeting at a node force
//!   the third edge to be red, oriented so that the index order matches
//!   the tint order (p < q iff a < b reading the red from the p-apex to
//!   the q-apex).
//! - An all-red triangle is consistent exactly when a single injective
//!   node indexing chains the three pairs: r_{a,b}, r_{b,c}, r_{a,c} with
//!   a, b, c pairwise distinct.
//! - A cone corner (one tinted green g_0^t and one plain green meeting at
//!   a node) with a white third edge requires the white's shade to admit
//!   t. With a red third edge it is unconstrained.
//! - Everything else (white against white, reds meeting whites or single
//!   greens, same-tint green pairs, plain green pairs) is consistent.
//!
//! The rules are deliberately permissive outside the quoted red-matching
//! clause: extra freedom only strengthens a ForallWins verdict obtained
//! against them.

use crate::atom::{EdgeColour, Shade};

/// Version tag recorded in generated structures' provenance notes.
pub const RULES_VERSION: &str = "v1";

/// Palette parameters for dimension 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RainbowPalette {
    /// Number of tinted-green superscripts (tints run 1..=green_count).
    pub green_count: i64,
    /// Number of red indices (reds are ordered pairs of distinct indices).
    pub red_count: u32,
}

impl RainbowPalette {
    /// All edge colours in deterministic order.
    pub fn colours(&self) -> Vec<EdgeColour> {
        let mut out = vec![EdgeColour::TintGreen(1)];
        for t in 1..=self.green_count {
            out.push(EdgeColour::Green(t));
        }
        for i in 0..2u8 {
            out.push(EdgeColour::White(i, Shade::Empty));
            for t in 1..=self.green_count {
                out.push(EdgeColour::White(i, Shade::Tint(t)));
            }
            out.push(EdgeColour::White(i, Shade::Full));
        }
        for a in 0..self.red_count {
            for b in 0..self.red_count {
                if a != b {
                    out.push(EdgeColour::Red(a, b));
                }
            }
        }
        out
    }

    /// Consistency of a triangle on nodes {0,1,2} with the given oriented
    /// edges (e01 read 0->1, e02 read 0->2, e12 read 1->2).
    pub fn triangle_consistent(
        &self,
        e01: EdgeColour,
        e02: EdgeColour,
        e12: EdgeColour,
    ) -> bool {
        if e01.is_green() && e02.is_green() && e12.is_green() {
            return false;
        }
        // Corner checks: for vertex v, `left` and `right` are the edges
        // from v to the two apexes, and `third` is the apex-apex edge read
        // from the left apex to the right apex.
        let corners = [
            (e01, e02, e12), // v = 0, apexes 1 then 2
            (e01.mirror(), e12, e02), // v = 1, apexes 0 then 2
            (e02.mirror(), e12.mirror(), e01), // v = 2, apexes 0 then 1
        ];
        for (left, right, third) in corners {
            match (left, right) {
                (EdgeColour::Green(p), EdgeColour::Green(q)) if p != q => {
                    // Distinct tints force an order-matching red.
                    match third {
                        EdgeColour::Red(a, b) => {
                            if (p < q) != (a < b) {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
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
        if e01.is_red() && e02.is_red() && e12.is_red() {
            let (EdgeColour::Red(a, b), EdgeColour::Red(a2, c), EdgeColour::Red(b2, c2)) =
                (e01, e02, e12)
            else {
                unreachable!()
            };
            // Need nu(0)=a, nu(1)=b, nu(2)=c with all edges chaining.
            if a2 != a || b2 != b || c2 != c || a == c {
                return false;
            }
        }
        true
    }
}
