//! Whole-group computations by exhaustive enumeration.
//!
//! [`EnumeratedGroup`] lists every element of a consistent presentation and
//! tabulates right multiplication by each pc-generator, so that products
//! cost at most `ngens * (p - 1)` table lookups instead of a collection.
//! Element `x_1^{a_1}...x_n^{a_n}` has index `sum a_k p^{n-1-k}`, which makes
//! index order agree with lexicographic order on exponent vectors.

mod classes;
mod series;

pub use classes::ClassPartition;

use rayon::prelude::*;

use crate::error::{PcError, Result};
use crate::pc::{NormalWord, PcPresentation};

/// Default limit on the number of elements enumerated.
pub const DEFAULT_ELEMENT_CAP: u64 = 1 << 20;

/// Element index into an [`EnumeratedGroup`].
pub type Elem = u32;

/// A sorted, duplicate-free set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    elems: Vec<Elem>,
}

impl ElementSet {
    pub fn from_unsorted(mut elems: Vec<Elem>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        ElementSet { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elems.iter().copied()
    }

    /// Least element.
    pub fn first(&self) -> Option<Elem> {
        self.elems.first().copied()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            elems: self.iter().filter(|&e| other.contains(e)).collect(),
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }
}

/// All elements of a consistent presentation, with multiplication tables.
#[derive(Clone, Debug)]
pub struct EnumeratedGroup {
    pres: PcPresentation,
    order: usize,
    // place[k] = p^{n-1-k}
    place: Vec<u32>,
    // rmul[k][g] = g * x_k
    rmul: Vec<Vec<Elem>>,
    inv: Vec<Elem>,
}

/// Lists all `p^ngens` exponent vectors, refusing beyond `cap`.
pub fn enumerate_elements(pres: &PcPresentation, cap: u64) -> Result<Vec<NormalWord>> {
    let order = checked_order(pres, cap)?;
    let place = places(pres);
    Ok((0..order as Elem)
        .map(|i| decode(pres, &place, i))
        .collect())
}

fn checked_order(pres: &PcPresentation, cap: u64) -> Result<usize> {
    let order = pres.formal_order();
    if order > cap as u128 || order > Elem::MAX as u128 {
        return Err(PcError::CapExceeded { order, cap });
    }
    Ok(order as usize)
}

fn places(pres: &PcPresentation) -> Vec<u32> {
    let n = pres.ngens();
    let p = pres.prime() as u32;
    (0..n).map(|k| p.pow((n - 1 - k) as u32)).collect()
}

fn decode(pres: &PcPresentation, place: &[u32], idx: Elem) -> NormalWord {
    let p = pres.prime() as u32;
    NormalWord::from_exponents(place.iter().map(|&pl| (idx / pl % p) as u8).collect())
}

impl EnumeratedGroup {
    pub fn new(pres: &PcPresentation, cap: u64) -> Result<Self> {
        let order = checked_order(pres, cap)?;
        let place = places(pres);
        let n = pres.ngens();
        let gens: Vec<NormalWord> = (0..n).map(|k| pres.generator(k)).collect();
        let encode = |w: &NormalWord| -> Elem {
            w.exponents()
                .iter()
                .zip(&place)
                .map(|(&e, &pl)| e as u32 * pl)
                .sum()
        };
        let rows: Vec<(Vec<Elem>, Elem)> = (0..order as Elem)
            .into_par_iter()
            .map(|idx| {
                let w = decode(pres, &place, idx);
                let row = gens.iter().map(|g| encode(&pres.multiply(&w, g))).collect();
                (row, encode(&pres.inverse(&w)))
            })
            .collect();
        let mut rmul = vec![vec![0; order]; n];
        let mut inv = vec![0; order];
        for (idx, (row, i)) in rows.into_iter().enumerate() {
            for (k, r) in row.into_iter().enumerate() {
                rmul[k][idx] = r;
            }
            inv[idx] = i;
        }
        Ok(EnumeratedGroup {
            pres: pres.clone(),
            order,
            place,
            rmul,
            inv,
        })
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn all(&self) -> ElementSet {
        ElementSet {
            elems: self.elements().collect(),
        }
    }

    /// Index of the `k`-th pc-generator.
    pub fn generator(&self, k: usize) -> Elem {
        self.place[k]
    }

    pub fn encode(&self, w: &NormalWord) -> Elem {
        w.exponents()
            .iter()
            .zip(&self.place)
            .map(|(&e, &pl)| e as u32 * pl)
            .sum()
    }

    pub fn word(&self, e: Elem) -> NormalWord {
        decode(&self.pres, &self.place, e)
    }

    pub fn exponent(&self, e: Elem, k: usize) -> u8 {
        (e / self.place[k] % self.pres.prime() as u32) as u8
    }

    /// `a * x_k`
    pub fn mul_gen(&self, a: Elem, k: usize) -> Elem {
        self.rmul[k][a as usize]
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.pres.prime() as u32;
        let mut r = a;
        for (k, &pl) in self.place.iter().enumerate() {
            for _ in 0..(b / pl % p) {
                r = self.rmul[k][r as usize];
            }
        }
        r
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    /// `g^{-1} a g`
    pub fn conj(&self, a: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `[a, b] = a^{-1} b^{-1} a b`
    pub fn comm(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn centralizer(&self, a: Elem) -> ElementSet {
        ElementSet {
            elems: self
                .elements()
                .filter(|&g| self.mul(g, a) == self.mul(a, g))
                .collect(),
        }
    }

    /// Intersection of the centralizers of the pc-generators.
    pub fn center(&self) -> ElementSet {
        let n = self.pres.ngens();
        ElementSet {
            elems: self
                .elements()
                .filter(|&g| {
                    (0..n).all(|k| {
                        let x = self.generator(k);
                        self.mul_gen(g, k) == self.mul(x, g)
                    })
                })
                .collect(),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[Elem]) -> ElementSet {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![self.identity()];
        let mut next = 0;
        // closing under right multiplication by the generators suffices in a
        // finite group
        while next < out.len() {
            let x = out[next];
            next += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !std::mem::replace(&mut seen[y as usize], true) {
                    out.push(y);
                }
            }
        }
        ElementSet::from_unsorted(out)
    }

    /// The smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[Elem]) -> ElementSet {
        let n = self.pres.ngens();
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![self.identity()];
        let mut next = 0;
        let conj_gens: Vec<(Elem, Elem)> = (0..n)
            .map(|k| {
                let x = self.generator(k);
                (self.inv(x), x)
            })
            .collect();
        while next < out.len() {
            let x = out[next];
            next += 1;
            let images = gens.iter().map(|&g| self.mul(x, g)).chain(
                conj_gens
                    .iter()
                    .map(|&(xi, xx)| self.mul(self.mul(xi, x), xx)),
            );
            for y in images.collect::<Vec<_>>() {
                if !std::mem::replace(&mut seen[y as usize], true) {
                    out.push(y);
                }
            }
        }
        ElementSet::from_unsorted(out)
    }

    /// Whether `set` is closed under multiplication and inverses.
    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        set.contains(self.identity())
            && set.iter().all(|a| {
                set.contains(self.inv(a)) && set.iter().all(|b| set.contains(self.mul(a, b)))
            })
    }

    /// Whether `set` is closed under conjugation by every pc-generator.
    pub fn is_normalized(&self, set: &ElementSet) -> bool {
        (0..self.pres.ngens()).all(|k| {
            let x = self.generator(k);
            set.iter().all(|a| set.contains(self.conj(a, x)))
        })
    }

    /// Returns `g` with `a^g = b`, the least such element, if any.
    pub fn is_conjugate(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.elements().find(|&g| self.conj(a, g) == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, x, y, Epsilon, FamilySpec, Z};
    use crate::pc::PresentationBuilder;

    fn quaternion() -> PcPresentation {
        PresentationBuilder::new(2, 3, 2, vec![1, 1, 2])
            .power(0, &[(2, 1)])
            .power(1, &[(2, 1)])
            .conjugate(0, 1, &[(2, 1)])
            .build()
            .unwrap()
    }

    fn h(n: usize, bits: [u8; 4]) -> EnumeratedGroup {
        let pres = build_family(FamilySpec::new(n, Epsilon(bits)).unwrap());
        EnumeratedGroup::new(&pres, DEFAULT_ELEMENT_CAP).unwrap()
    }

    #[test]
    fn enumeration_sizes_and_cap() {
        let k4 = PresentationBuilder::new(2, 2, 2, vec![1, 1])
            .build()
            .unwrap();
        assert_eq!(
            enumerate_elements(&k4, DEFAULT_ELEMENT_CAP).unwrap().len(),
            4
        );
        let h1 = build_family(FamilySpec::new(1, Epsilon([0; 4])).unwrap());
        let els = enumerate_elements(&h1, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(els.len(), 64);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            enumerate_elements(&h1, 32),
            Err(PcError::CapExceeded { order: 64, cap: 32 })
        ));
    }

    #[test]
    fn table_products_match_collection() {
        let g = h(2, [1, 0, 1, 1]);
        let pres = g.presentation().clone();
        for a in g.elements().step_by(7) {
            for b in g.elements().step_by(5) {
                let expect = pres.multiply(&g.word(a), &g.word(b));
                assert_eq!(g.word(g.mul(a, b)), expect);
            }
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
    }

    #[test]
    fn quaternion_center_brute_force() {
        let q = EnumeratedGroup::new(&quaternion(), DEFAULT_ELEMENT_CAP).unwrap();
        // brute force: elements commuting with all 8 elements
        let brute: Vec<Elem> = q
            .elements()
            .filter(|&a| q.elements().all(|b| q.mul(a, b) == q.mul(b, a)))
            .collect();
        assert_eq!(brute, vec![0, q.generator(2)]);
        assert_eq!(q.center().elems(), brute.as_slice());
    }

    #[test]
    fn abelian_center_is_whole_group() {
        let e = PresentationBuilder::new(2, 3, 3, vec![1, 1, 1])
            .build()
            .unwrap();
        let g = EnumeratedGroup::new(&e, 64).unwrap();
        assert_eq!(g.center(), g.all());
        assert_eq!(g.centralizer(g.identity()), g.all());
    }

    #[test]
    fn family_centralizers() {
        let g = h(3, [0, 1, 1, 0]);
        let c = g
            .centralizer(g.generator(x(1)))
            .intersection(&g.centralizer(g.generator(x(3))));
        let z = g.generator(Z);
        let yn = g.generator(y(3));
        assert_eq!(c, ElementSet::from_unsorted(vec![0, z, yn, g.mul(z, yn)]));
        assert!(g.is_subgroup(&c));
    }

    #[test]
    fn centralizer_of_x2_in_h1() {
        let g = h(1, [0; 4]);
        let a = g.generator(x(2));
        let brute = g
            .elements()
            .filter(|&b| g.word(g.mul(a, b)) == g.presentation().multiply(&g.word(b), &g.word(a)))
            .count();
        let c = g.centralizer(a);
        assert_eq!(c.len(), brute);
        // x1^a1 x2^a2 x3^a3 x4^a4 z^b y1^c commutes with x_2 iff a1 = a3
        assert_eq!(c.len(), 32);
        assert!(g.is_subgroup(&c));
    }

    #[test]
    fn closures() {
        let g = h(3, [0; 4]);
        assert_eq!(g.subgroup_closure(&[]).elems(), &[0]);
        let gens: Vec<Elem> = [Z, y(1), y(2), y(3)]
            .iter()
            .map(|&k| g.generator(k))
            .collect();
        assert_eq!(g.subgroup_closure(&gens).len(), 16);
        assert_eq!(
            g.subgroup_closure(&[g.generator(y(2)), g.generator(y(3))])
                .len(),
            4
        );
    }

    #[test]
    fn conjugacy_witness() {
        let g = h(1, [0, 1, 0, 1]);
        let x4 = g.generator(x(4));
        let x4z = g.mul(x4, g.generator(Z));
        let w = g.is_conjugate(x4, x4z).unwrap();
        assert_eq!(g.conj(x4, w), x4z);
        assert_eq!(g.is_conjugate(x4, x4), Some(g.identity()));
        assert_eq!(g.is_conjugate(x4, g.generator(x(1))), None);
    }
}
