//! Substitution-cylindrifier words and their partial-map semantics.
//!
//! A word over the letters s_i^j (substitution) and c_i (cylindrifier)
//! evaluates to a partial self-map of the index set m: the empty word is the
//! identity, appending s_i^j post-composes with [j|i] (the total map sending
//! j to i and fixing everything else), and appending c_i restricts the
//! domain to m minus {i}.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScLetter {
    /// s_sub^sup.
    Subst { sub: usize, sup: usize },
    /// c_i.
    Cyl(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScWord {
    /// Size of the index set.
    pub m: usize,
    pub letters: Vec<ScLetter>,
}

/// A partial self-map of {0, .., m-1}.
pub type PartialMap = BTreeMap<usize, usize>;

impl ScWord {
    pub fn new(m: usize, letters: Vec<ScLetter>) -> Self {
        for l in &letters {
            match *l {
                ScLetter::Subst { sub, sup } => {
                    assert!(sub < m && sup < m, "letter index out of range");
                }
                ScLetter::Cyl(i) => assert!(i < m, "letter index out of range"),
            }
        }
        ScWord { m, letters }
    }

    /// Evaluate the word to its partial map.
    pub fn eval(&self) -> PartialMap {
        let mut map: PartialMap = (0..self.m).map(|x| (x, x)).collect();
        for l in &self.letters {
            match *l {
                ScLetter::Subst { sub, sup } => {
                    // w . [sup|sub]: precompose with the map sending sup to
                    // sub; pointwise: new(x) = w([sup|sub](x)), with domain
                    // the [sup|sub]-preimage of w's domain.
                    let mut out = PartialMap::new();
                    for x in 0..self.m {
                        let y = if x == sup { sub } else { x };
                        if let Some(&v) = map.get(&y) {
                            out.insert(x, v);
                        }
                    }
                    map = out;
                }
                ScLetter::Cyl(i) => {
                    map.remove(&i);
                }
            }
        }
        map
    }
}

/// The substitution word s_{ij} carrying coordinates 0, 1 to i, j:
/// s_i^0 s_j^1 when j != 0; s_0^1 s_i^0 when j = 0, i != 1;
/// s_0^2 s_1^0 s_2^1 when (i, j) = (1, 0).
pub fn subst_word(m: usize, i: usize, j: usize) -> ScWord {
    assert!(i < m && j < m && i != j, "need distinct i, j < m");
    let letters = if j != 0 {
        vec![
            ScLetter::Subst { sub: i, sup: 0 },
            ScLetter::Subst { sub: j, sup: 1 },
        ]
    } else if i != 1 {
        vec![
            ScLetter::Subst { sub: 0, sup: 1 },
            ScLetter::Subst { sub: i, sup: 0 },
        ]
    } else {
        assert!(m >= 3, "the (1,0) case needs a spare index");
        vec![
            ScLetter::Subst { sub: 0, sup: 2 },
            ScLetter::Subst { sub: 1, sup: 0 },
            ScLetter::Subst { sub: 2, sup: 1 },
        ]
    };
    ScWord::new(m, letters)
}
