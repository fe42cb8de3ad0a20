//! Weighted power-conjugate presentations and collection.
//!
//! A presentation on pc-generators `x_1, ..., x_n` for a prime `p` has
//! relations
//!
//! ```text
//! x_i^p     = x_{i+1}^{b(i,i+1)} ... x_n^{b(i,n)}
//! x_j^{x_i} = x_j x_{j+1}^{b(i,j,j+1)} ... x_n^{b(i,j,n)}    (i < j)
//! ```
//!
//! with all exponents in `[0, p)`. Omitted relations are trivial. Collection
//! rewrites any word in the generators into the normal form
//! `x_1^{a_1} ... x_n^{a_n}`.

mod collect;
pub mod doc;
mod word;

pub use collect::CollectStats;
pub use doc::{load_presentation, load_presentation_file, LoadError, PresentationDoc};
pub use word::{GenWord, NormalWord};

use crate::error::{PcError, Result};

/// How a non-minimal pc-generator arises from earlier ones. Used to extend
/// a map given on the minimal generators to all pc-generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definition {
    /// `x_k = x_i^p`
    Power(usize),
    /// `x_k = [x_j, x_i]` with `i < j`
    Commutator(usize, usize),
}

/// A validated weighted pc-presentation. Immutable after construction.
#[derive(Clone, Debug)]
pub struct PcPresentation {
    prime: u8,
    ngens: usize,
    min_gens: usize,
    weights: Vec<u32>,
    names: Vec<String>,
    powers: Vec<NormalWord>,
    // flat `i * ngens + j`, only meaningful for i < j
    conjugates: Vec<NormalWord>,
    definitions: Vec<Option<Definition>>,
    // letter expansions used by collection
    power_letters: Vec<Vec<usize>>,
    tail_letters: Vec<Vec<usize>>,
    inverse_letters: Vec<Vec<usize>>,
}

/// Accumulates relations before validation.
#[derive(Clone, Debug)]
pub struct PresentationBuilder {
    prime: u32,
    ngens: usize,
    min_gens: usize,
    weights: Vec<u32>,
    names: Option<Vec<String>>,
    powers: Vec<(usize, Vec<(usize, i64)>)>,
    conjugates: Vec<((usize, usize), Vec<(usize, i64)>)>,
    definitions: Vec<(usize, Definition)>,
}

impl PresentationBuilder {
    pub fn new(prime: u32, ngens: usize, min_gens: usize, weights: Vec<u32>) -> Self {
        PresentationBuilder {
            prime,
            ngens,
            min_gens,
            weights,
            names: None,
            powers: Vec::new(),
            conjugates: Vec::new(),
            definitions: Vec::new(),
        }
    }

    pub fn names(mut self, names: Vec<String>) -> Self {
        self.names = Some(names);
        self
    }

    /// `x_i^p = word`, 0-based indices.
    pub fn power(mut self, i: usize, word: &[(usize, i64)]) -> Self {
        self.powers.push((i, word.to_vec()));
        self
    }

    /// `x_j^{x_i} = x_j * tail`, 0-based indices with `i < j`.
    pub fn conjugate(mut self, i: usize, j: usize, tail: &[(usize, i64)]) -> Self {
        self.conjugates.push(((i, j), tail.to_vec()));
        self
    }

    pub fn definition(mut self, k: usize, def: Definition) -> Self {
        self.definitions.push((k, def));
        self
    }

    pub fn build(self) -> Result<PcPresentation> {
        let PresentationBuilder {
            prime,
            ngens,
            min_gens,
            weights,
            names,
            powers,
            conjugates,
            definitions,
        } = self;

        if !(2..256).contains(&prime) || !is_prime(prime) {
            return Err(PcError::BadPrime(prime));
        }
        let p = prime as u8;
        if min_gens > ngens {
            return Err(PcError::Malformed(format!(
                "dgens = {min_gens} exceeds ngens = {ngens}"
            )));
        }
        if weights.len() != ngens {
            return Err(PcError::Weights(format!(
                "expected {ngens} weights, got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(PcError::Weights("weights must be positive".into()));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(PcError::Weights("weights must be non-decreasing".into()));
        }
        if weights[..min_gens].iter().any(|&w| w != 1) {
            return Err(PcError::Weights(
                "the minimal generators must have weight 1".into(),
            ));
        }
        let names = match names {
            Some(names) if names.len() == ngens => names,
            Some(names) => {
                return Err(PcError::Malformed(format!(
                    "expected {ngens} generator names, got {}",
                    names.len()
                )))
            }
            None => (1..=ngens).map(|i| format!("g{i}")).collect(),
        };

        let to_word =
            |relation: &str, above: usize, terms: &[(usize, i64)]| -> Result<NormalWord> {
                let mut w = NormalWord::identity(ngens);
                let mut seen = vec![false; ngens];
                for &(g, e) in terms {
                    if g >= ngens {
                        return Err(PcError::IndexOutOfRange(g + 1));
                    }
                    if !(0..prime as i64).contains(&e) {
                        return Err(PcError::ExponentOutOfRange {
                            generator: g + 1,
                            exponent: e,
                            prime: p,
                        });
                    }
                    if seen[g] {
                        return Err(PcError::Malformed(format!(
                            "relation {relation} mentions generator {} twice",
                            g + 1
                        )));
                    }
                    seen[g] = true;
                    if e != 0 && g <= above {
                        return Err(PcError::Triangularity {
                            relation: relation.to_string(),
                            generator: g + 1,
                            bound: above + 1,
                        });
                    }
                    w.exps_mut()[g] = e as u8;
                }
                Ok(w)
            };

        let mut power_words = vec![NormalWord::identity(ngens); ngens];
        let mut power_set = vec![false; ngens];
        for (i, terms) in &powers {
            let i = *i;
            if i >= ngens {
                return Err(PcError::IndexOutOfRange(i + 1));
            }
            if std::mem::replace(&mut power_set[i], true) {
                return Err(PcError::Malformed(format!(
                    "power relation for generator {} given twice",
                    i + 1
                )));
            }
            power_words[i] = to_word(&format!("g{}^p", i + 1), i, terms)?;
        }

        let mut conj_words = vec![NormalWord::identity(ngens); ngens * ngens];
        let mut conj_set = vec![false; ngens * ngens];
        for ((i, j), terms) in &conjugates {
            let (i, j) = (*i, *j);
            if i >= ngens || j >= ngens {
                return Err(PcError::IndexOutOfRange(i.max(j) + 1));
            }
            if i >= j {
                return Err(PcError::Malformed(format!(
                    "conjugate relation ({},{}) needs i < j",
                    i + 1,
                    j + 1
                )));
            }
            if std::mem::replace(&mut conj_set[i * ngens + j], true) {
                return Err(PcError::Malformed(format!(
                    "conjugate relation ({},{}) given twice",
                    i + 1,
                    j + 1
                )));
            }
            let label = format!("g{}^g{}", j + 1, i + 1);
            let w = to_word(&label, j, terms)?;
            let required = weights[i] + weights[j];
            for (g, _) in w.support() {
                if weights[g] < required {
                    return Err(PcError::WeightCondition {
                        relation: label,
                        generator: g + 1,
                        weight: weights[g],
                        required,
                    });
                }
            }
            conj_words[i * ngens + j] = w;
        }

        let mut defs = vec![None; ngens];
        for (k, def) in definitions {
            if k >= ngens {
                return Err(PcError::IndexOutOfRange(k + 1));
            }
            let bad = |reason: &str| PcError::Definition {
                generator: k + 1,
                reason: reason.to_string(),
            };
            if k < min_gens {
                return Err(bad("minimal generators need no definition"));
            }
            let expected = NormalWord::generator(ngens, k);
            match def {
                Definition::Power(i) => {
                    if i >= k {
                        return Err(bad("defining generator must precede it"));
                    }
                    if power_words[i] != expected {
                        return Err(bad("power relation does not equal the generator"));
                    }
                }
                Definition::Commutator(j, i) => {
                    if !(i < j && j < k) {
                        return Err(bad("commutator [x_j, x_i] needs i < j < k"));
                    }
                    if conj_words[i * ngens + j] != expected {
                        return Err(bad("conjugate relation tail does not equal the generator"));
                    }
                }
            }
            defs[k] = Some(def);
        }
        // generators without an explicit definition take the first relation
        // whose right-hand side is exactly that generator
        for (k, def) in defs.iter_mut().enumerate().skip(min_gens) {
            if def.is_some() {
                continue;
            }
            let target = NormalWord::generator(ngens, k);
            *def = (0..k).find_map(|i| {
                if power_words[i] == target {
                    return Some(Definition::Power(i));
                }
                (i + 1..k)
                    .find(|&j| conj_words[i * ngens + j] == target)
                    .map(|j| Definition::Commutator(j, i))
            });
        }

        let letters = |w: &NormalWord| -> Vec<usize> {
            w.support()
                .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize))
                .collect()
        };
        let power_letters = power_words.iter().map(letters).collect();
        let tail_letters = conj_words.iter().map(letters).collect();

        let mut pres = PcPresentation {
            prime: p,
            ngens,
            min_gens,
            weights,
            names,
            powers: power_words,
            conjugates: conj_words,
            definitions: defs,
            power_letters,
            tail_letters,
            inverse_letters: vec![Vec::new(); ngens],
        };
        pres.compute_generator_inverses();
        Ok(pres)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

impl PcPresentation {
    pub fn prime(&self) -> u8 {
        self.prime
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn min_gens(&self) -> usize {
        self.min_gens
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Right-hand side of `x_i^p`.
    pub fn power_rhs(&self, i: usize) -> &NormalWord {
        &self.powers[i]
    }

    /// Tail of `x_j^{x_i} = x_j * tail` for `i < j`.
    pub fn conj_tail(&self, i: usize, j: usize) -> &NormalWord {
        debug_assert!(i < j);
        &self.conjugates[i * self.ngens + j]
    }

    pub fn definition(&self, k: usize) -> Option<Definition> {
        self.definitions[k]
    }

    /// `p^ngens`, the order of the group when the presentation is consistent.
    pub fn formal_order(&self) -> u128 {
        (self.prime as u128).pow(self.ngens as u32)
    }

    pub fn identity(&self) -> NormalWord {
        NormalWord::identity(self.ngens)
    }

    pub fn generator(&self, i: usize) -> NormalWord {
        NormalWord::generator(self.ngens, i)
    }

    /// Validates user-supplied exponents and wraps them as a normal word.
    pub fn word(&self, exps: &[u8]) -> Result<NormalWord> {
        if exps.len() != self.ngens {
            return Err(PcError::LengthMismatch {
                expected: self.ngens,
                got: exps.len(),
            });
        }
        if let Some(i) = exps.iter().position(|&e| e >= self.prime) {
            return Err(PcError::ExponentOutOfRange {
                generator: i + 1,
                exponent: exps[i] as i64,
                prime: self.prime,
            });
        }
        Ok(NormalWord::from_exponents(exps.to_vec()))
    }

    pub(crate) fn check_word(&self, w: &NormalWord) -> Result<()> {
        if w.len() != self.ngens {
            return Err(PcError::LengthMismatch {
                expected: self.ngens,
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Returns a copy of this presentation with one power relation replaced.
    /// Skips validation of weights; intended for fault injection in tests.
    pub fn with_power_rhs(&self, i: usize, rhs: NormalWord) -> Self {
        let mut out = self.clone();
        out.power_letters[i] = rhs
            .support()
            .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize))
            .collect();
        out.powers[i] = rhs;
        out.definitions.iter_mut().for_each(|d| {
            if *d == Some(Definition::Power(i)) {
                *d = None;
            }
        });
        out.compute_generator_inverses();
        out
    }

    /// Returns a copy with the conjugate relation `x_j^{x_i}` replaced;
    /// an identity tail makes the generators commute.
    pub fn with_conj_tail(&self, i: usize, j: usize, tail: NormalWord) -> Self {
        let mut out = self.clone();
        let idx = i * self.ngens + j;
        out.tail_letters[idx] = tail
            .support()
            .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize))
            .collect();
        out.conjugates[idx] = tail;
        out.definitions.iter_mut().for_each(|d| {
            if *d == Some(Definition::Commutator(j, i)) {
                *d = None;
            }
        });
        out
    }

    /// All non-trivial relations with a printable label, in a fixed order:
    /// powers by generator, then conjugates by `(i, j)`.
    pub fn relation_labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 0..self.ngens {
            out.push(format!("{}^{}", self.names[i], self.prime));
        }
        for i in 0..self.ngens {
            for j in i + 1..self.ngens {
                out.push(format!("{}^{}", self.names[j], self.names[i]));
            }
        }
        out
    }

    pub fn display<'a>(&'a self, w: &'a NormalWord) -> impl std::fmt::Display + 'a {
        w.display_with(&self.names)
    }
}
