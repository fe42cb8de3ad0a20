//! The weighted consistency test for pc-presentations of 2-groups.
//!
//! A weighted presentation of a `d`-generator 2-group of class `c` is
//! consistent when the following pairs collect to the same normal form
//! (inner parentheses collected first):
//!
//! | kind  | words                           | conditions                                  |
//! |-------|---------------------------------|---------------------------------------------|
//! | `Kji` | `(x_k x_j) x_i`, `x_k (x_j x_i)` | `i < j < k`, `i <= d`, `w_i + w_j + w_k <= c` |
//! | `Jji` | `(x_j x_j) x_i`, `x_j (x_j x_i)` | `i < j`, `i <= d`, `w_i + w_j < c`            |
//! | `Jii` | `(x_j x_i) x_i`, `x_j (x_i x_i)` | `i < j`, `w_i + w_j < c`                      |
//! | `Iii` | `(x_i x_i) x_i`, `x_i (x_i x_i)` | `2 w_i < c`                                   |

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{PcError, Result};
use crate::pc::{GenWord, NormalWord, PcPresentation};

/// Failures kept in a report beyond this many are counted but not stored.
pub const MAX_STORED_FAILURES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TripleKind {
    Kji,
    Jji,
    Jii,
    Iii,
}

/// One test word `a b c`, with 0-based generator indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConsistencyTriple {
    pub kind: TripleKind,
    /// The three letters `(a, b, c)` of the test word, left to right.
    pub letters: (usize, usize, usize),
}

impl ConsistencyTriple {
    /// `(a b) c`, with `a b` collected first.
    pub fn left(&self, pres: &PcPresentation) -> NormalWord {
        let (a, b, c) = self.letters;
        let ab = pres.collect(&GenWord::from_letters(&[a, b]));
        let mut w = ab.to_gen_word();
        w.push(c, 1);
        pres.collect(&w)
    }

    /// `a (b c)`, with `b c` collected first.
    pub fn right(&self, pres: &PcPresentation) -> NormalWord {
        let (a, b, c) = self.letters;
        let bc = pres.collect(&GenWord::from_letters(&[b, c]));
        let mut w = GenWord::from_letters(&[a]);
        w.extend(&bc.to_gen_word());
        pres.collect(&w)
    }

    pub fn display<'a>(&'a self, pres: &'a PcPresentation) -> impl fmt::Display + 'a {
        let (a, b, c) = self.letters;
        let names = pres.names();
        DisplayTriple {
            names: [&names[a], &names[b], &names[c]],
        }
    }
}

struct DisplayTriple<'a> {
    names: [&'a String; 3],
}

impl fmt::Display for DisplayTriple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.names;
        write!(f, "({a},{b},{c})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyFailure {
    pub triple: ConsistencyTriple,
    pub left: NormalWord,
    pub right: NormalWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub consistent: bool,
    /// At most [`MAX_STORED_FAILURES`] entries, in triple order.
    pub failures: Vec<ConsistencyFailure>,
    pub failure_count: usize,
    pub triples_checked: usize,
}

/// Class bound to use when the class is unknown: the sum of all weights,
/// which makes every weight condition hold.
pub fn fallback_class_bound(pres: &PcPresentation) -> u32 {
    pres.weights().iter().sum()
}

/// The test triples for class bound `c`, sorted, without duplicates.
pub fn consistency_triples(pres: &PcPresentation, c: u32) -> Vec<ConsistencyTriple> {
    let n = pres.ngens();
    let d = pres.min_gens();
    let w = pres.weights();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if i < d && w[i] + w[j] + w[k] <= c {
                    out.push(ConsistencyTriple {
                        kind: TripleKind::Kji,
                        letters: (k, j, i),
                    });
                }
            }
            if i < d && w[i] + w[j] < c {
                out.push(ConsistencyTriple {
                    kind: TripleKind::Jji,
                    letters: (j, j, i),
                });
            }
            if w[i] + w[j] < c {
                out.push(ConsistencyTriple {
                    kind: TripleKind::Jii,
                    letters: (j, i, i),
                });
            }
        }
        if 2 * w[i] < c {
            out.push(ConsistencyTriple {
                kind: TripleKind::Iii,
                letters: (i, i, i),
            });
        }
    }
    out.sort_by_key(|t| (t.letters, t.kind));
    out.dedup();
    out
}

/// Runs the consistency test with class bound `c`.
///
/// Only `p = 2` is supported.
pub fn check_consistency(pres: &PcPresentation, c: u32) -> Result<ConsistencyReport> {
    if pres.prime() != 2 {
        return Err(PcError::UnsupportedPrime(pres.prime()));
    }
    let triples = consistency_triples(pres, c);
    Ok(run_triples(pres, &triples))
}

/// Checks an explicit list of triples; used by [`check_consistency`] and to
/// examine triples outside the weighted list.
pub fn run_triples(pres: &PcPresentation, triples: &[ConsistencyTriple]) -> ConsistencyReport {
    let failures: Vec<ConsistencyFailure> = triples
        .par_iter()
        .filter_map(|t| {
            let left = t.left(pres);
            let right = t.right(pres);
            (left != right).then_some(ConsistencyFailure {
                triple: *t,
                left,
                right,
            })
        })
        .collect();
    let failure_count = failures.len();
    let mut failures = failures;
    failures.truncate(MAX_STORED_FAILURES);
    ConsistencyReport {
        consistent: failure_count == 0,
        failures,
        failure_count,
        triples_checked: triples.len(),
    }
}

/// Every triple of the four shapes with no index or weight side conditions.
///
/// Passing this list is the classical consistency criterion for an
/// arbitrary pc-presentation of a 2-group, independent of any weighting.
pub fn unrestricted_triples(pres: &PcPresentation) -> Vec<ConsistencyTriple> {
    let n = pres.ngens();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(ConsistencyTriple {
                    kind: TripleKind::Kji,
                    letters: (k, j, i),
                });
            }
            out.push(ConsistencyTriple {
                kind: TripleKind::Jji,
                letters: (j, j, i),
            });
            out.push(ConsistencyTriple {
                kind: TripleKind::Jii,
                letters: (j, i, i),
            });
        }
        out.push(ConsistencyTriple {
            kind: TripleKind::Iii,
            letters: (i, i, i),
        });
    }
    out.sort_by_key(|t| (t.letters, t.kind));
    out
}
