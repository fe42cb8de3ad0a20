//! The groups `H_n^eps`: 4-generator 2-groups of order `2^{n+5}` and class
//! `n + 1`, on pc-generators `x_1, x_2, x_3, x_4, z, y_1, ..., y_n`.
//!
//! Commutator relations (the same for every `eps`):
//!
//! ```text
//! [x_2,x_1] = [x_3,x_2] = [x_4,x_1] = z,   [x_3,x_1] = y_1,
//! y_i^{x_1} = y_i^{x_3} = y_i y_{i+1}      (1 <= i < n)
//! ```
//!
//! Power relations:
//!
//! ```text
//! x_j^2 = z^{eps_j},  z^2 = 1,  y_i^2 = y_{i+1} y_{i+2} (i <= n-2),
//! y_{n-1}^2 = y_n,  y_n^2 = 1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::pc::{Definition, NormalWord, PcPresentation, PresentationBuilder};

/// 0-based index of `x_j` for `j` in `1..=4`.
pub const fn x(j: usize) -> usize {
    j - 1
}

/// 0-based index of `z`.
pub const Z: usize = 4;

/// 0-based index of `y_i` for `i >= 1`.
pub const fn y(i: usize) -> usize {
    4 + i
}

/// The four bits `(eps_1, eps_2, eps_3, eps_4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Epsilon(pub [u8; 4]);

impl Epsilon {
    /// All sixteen vectors in lexicographic order.
    pub fn all() -> impl Iterator<Item = Epsilon> {
        (0u8..16).map(|m| Epsilon([m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1]))
    }

    pub fn bits(&self) -> [u8; 4] {
        self.0
    }

    /// Isomorphism class representatives of the sixteen families.
    pub fn representatives() -> [Epsilon; 4] {
        [
            Epsilon([0, 0, 0, 0]),
            Epsilon([0, 1, 0, 0]),
            Epsilon([0, 1, 1, 0]),
            Epsilon([0, 0, 0, 1]),
        ]
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Epsilon {
    type Err = String;

    /// Accepts `0110` or `0,1,1,0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits: Vec<u8> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(format!("invalid epsilon {s:?}: expected four bits")),
            })
            .collect::<Result<_, _>>()?;
        let bits: [u8; 4] = digits
            .try_into()
            .map_err(|_| format!("invalid epsilon {s:?}: expected four bits"))?;
        Ok(Epsilon(bits))
    }
}

/// Selects the group `H_n^eps`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    n: usize,
    eps: Epsilon,
}

impl FamilySpec {
    /// `None` when `n == 0`.
    pub fn new(n: usize, eps: Epsilon) -> Option<Self> {
        (n >= 1).then_some(FamilySpec { n, eps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> Epsilon {
        self.eps
    }

    pub fn ngens(&self) -> usize {
        self.n + 5
    }

    /// `n + 1`
    pub fn class(&self) -> usize {
        self.n + 1
    }
}

/// Images of the minimal generators under a candidate endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMap {
    images: Vec<NormalWord>,
}

impl GenMap {
    pub fn new(images: Vec<NormalWord>) -> Self {
        GenMap { images }
    }

    pub fn identity(pres: &PcPresentation) -> Self {
        GenMap::new((0..pres.min_gens()).map(|i| pres.generator(i)).collect())
    }

    pub fn images(&self) -> &[NormalWord] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

fn generator_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=4).map(|j| format!("x{j}")).collect();
    names.push("z".into());
    names.extend((1..=n).map(|i| format!("y{i}")));
    names
}

/// The presentation of `H_n^eps`.
pub fn build_family(spec: FamilySpec) -> PcPresentation {
    let n = spec.n;
    let eps = spec.eps.0;
    let mut weights = vec![1, 1, 1, 1, 2];
    weights.extend((1..=n).map(|i| i as u32 + 1));

    let mut b = PresentationBuilder::new(2, n + 5, 4, weights).names(generator_names(n));
    for j in 1..=4 {
        if eps[j - 1] == 1 {
            b = b.power(x(j), &[(Z, 1)]);
        }
    }
    for i in 1..=n.saturating_sub(2) {
        b = b.power(y(i), &[(y(i + 1), 1), (y(i + 2), 1)]);
    }
    if n >= 2 {
        b = b.power(y(n - 1), &[(y(n), 1)]);
    }

    b = b
        .conjugate(x(1), x(2), &[(Z, 1)])
        .conjugate(x(1), x(3), &[(y(1), 1)])
        .conjugate(x(2), x(3), &[(Z, 1)])
        .conjugate(x(1), x(4), &[(Z, 1)]);
    for i in 1..n {
        b = b
            .conjugate(x(1), y(i), &[(y(i + 1), 1)])
            .conjugate(x(3), y(i), &[(y(i + 1), 1)]);
    }

    b = b
        .definition(Z, Definition::Commutator(x(2), x(1)))
        .definition(y(1), Definition::Commutator(x(3), x(1)));
    for i in 1..n {
        b = b.definition(y(i + 1), Definition::Commutator(y(i), x(1)));
    }
    b.build().expect("family presentations are well formed")
}

/// `x_4 -> x_4 z`, fixing `x_1, x_2, x_3`.
pub fn theta(spec: FamilySpec) -> GenMap {
    let ngens = spec.ngens();
    let mut images: Vec<NormalWord> = (1..=4)
        .map(|j| NormalWord::generator(ngens, x(j)))
        .collect();
    images[3] = NormalWord::from_sparse(ngens, &[(x(4), 1), (Z, 1)]);
    GenMap::new(images)
}

/// All sixteen presentations for a given `n`, in lexicographic order of `eps`.
pub fn family_catalog(n: usize) -> Vec<(Epsilon, PcPresentation)> {
    assert!(n >= 1, "family index must be positive");
    Epsilon::all()
        .map(|eps| (eps, build_family(FamilySpec { n, eps })))
        .collect()
}
