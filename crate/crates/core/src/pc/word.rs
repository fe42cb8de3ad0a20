use std::fmt;

/// An element in normal form `x_1^{a_1} x_2^{a_2} ... x_n^{a_n}`, stored as
/// its exponent vector. Generator indices are 0-based throughout the crate.
///
/// The derived ordering is lexicographic on the exponent vector, which is
/// the canonical element order used by enumeration and reports.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NormalWord {
    exps: Vec<u8>,
}

impl NormalWord {
    pub fn identity(ngens: usize) -> Self {
        NormalWord {
            exps: vec![0; ngens],
        }
    }

    /// The normal word of a single pc-generator.
    pub fn generator(ngens: usize, index: usize) -> Self {
        let mut w = Self::identity(ngens);
        w.exps[index] = 1;
        w
    }

    /// Builds a word without checking exponents against a prime; callers that
    /// take user input go through [`crate::pc::PcPresentation::word`].
    pub fn from_exponents(exps: Vec<u8>) -> Self {
        NormalWord { exps }
    }

    /// Builds a word of length `ngens` from sparse `(index, exponent)` pairs.
    pub fn from_sparse(ngens: usize, terms: &[(usize, u8)]) -> Self {
        let mut w = Self::identity(ngens);
        for &(i, e) in terms {
            w.exps[i] = e;
        }
        w
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u8 {
        self.exps[index]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Nonzero `(index, exponent)` pairs in increasing index order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e))
    }

    /// Index of the first generator with a nonzero exponent.
    pub fn leading_index(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e != 0)
    }

    /// The word as an uncollected generator word.
    pub fn to_gen_word(&self) -> GenWord {
        GenWord::from_pairs(self.support().map(|(i, e)| (i, e as i64)))
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [u8] {
        &mut self.exps
    }

    /// Renders the word with the given generator names, omitting unit
    /// exponents: `x1*x3*z*y1`. The identity prints as `1`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWord { word: self, names }
    }
}

impl fmt::Debug for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalWord{:?}", self.exps)
    }
}

struct DisplayWord<'a> {
    word: &'a NormalWord,
    names: &'a [String],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, e) in self.word.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "g{}", i + 1)?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// An uncollected word: a sequence of `(generator index, exponent)` pairs.
/// Exponents may be negative or exceed `p - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenWord {
    letters: Vec<(usize, i64)>,
}

impl GenWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        GenWord {
            letters: pairs.into_iter().collect(),
        }
    }

    /// A word of positive single letters, `x_{i_1} x_{i_2} ...`.
    pub fn from_letters(letters: &[usize]) -> Self {
        Self::from_pairs(letters.iter().map(|&i| (i, 1)))
    }

    pub fn push(&mut self, index: usize, exponent: i64) {
        self.letters.push((index, exponent));
    }

    pub fn extend(&mut self, other: &GenWord) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn pairs(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}
