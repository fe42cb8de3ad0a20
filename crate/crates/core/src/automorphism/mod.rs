//! Endomorphisms induced from images of the minimal generators, the inner
//! and class-preserving tests, and exhaustive computation of `Aut(G)`,
//! `Aut_c(G)`, `Inn(G)` and `Out_c(G) = Aut_c(G) / Inn(G)`.

mod outc;
mod search;

pub use outc::{out_c, OutC};
pub use search::{enumerate_automorphisms, AutSet, DEFAULT_AUT_CAP};

use crate::analysis::{ClassPartition, Elem, EnumeratedGroup};
use crate::error::{PcError, Result};
use crate::families::GenMap;
use crate::pc::{Definition, NormalWord};

/// A homomorphism `G -> G`, stored as the images of all pc-generators.
/// Images of other elements are computed from their normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementMap {
    images: Vec<Elem>,
}

impl ElementMap {
    pub fn identity(group: &EnumeratedGroup) -> Self {
        ElementMap {
            images: (0..group.presentation().ngens())
                .map(|k| group.generator(k))
                .collect(),
        }
    }

    /// Conjugation `a -> g^{-1} a g`.
    pub fn conjugation(group: &EnumeratedGroup, g: Elem) -> Self {
        ElementMap {
            images: (0..group.presentation().ngens())
                .map(|k| group.conj(group.generator(k), g))
                .collect(),
        }
    }

    /// Image of pc-generator `k`.
    pub fn image_of_generator(&self, k: usize) -> Elem {
        self.images[k]
    }

    pub fn generator_images(&self) -> &[Elem] {
        &self.images
    }

    /// The images of the minimal generators; determines the map.
    pub fn key(&self, group: &EnumeratedGroup) -> &[Elem] {
        &self.images[..group.presentation().min_gens()]
    }

    pub fn apply(&self, group: &EnumeratedGroup, e: Elem) -> Elem {
        let n = group.presentation().ngens();
        let mut out = group.identity();
        for k in 0..n {
            for _ in 0..group.exponent(e, k) {
                out = group.mul(out, self.images[k]);
            }
        }
        out
    }

    /// Image of every element, indexed by element.
    pub fn table(&self, group: &EnumeratedGroup) -> Vec<Elem> {
        group.elements().map(|e| self.apply(group, e)).collect()
    }

    /// `x -> other(self(x))`
    pub fn then(&self, group: &EnumeratedGroup, other: &ElementMap) -> ElementMap {
        ElementMap {
            images: self.images.iter().map(|&e| other.apply(group, e)).collect(),
        }
    }

    /// The inverse automorphism, found by inverting the element table.
    pub fn inverse(&self, group: &EnumeratedGroup) -> Option<ElementMap> {
        let table = self.table(group);
        let mut inv = vec![Elem::MAX; table.len()];
        for (e, &img) in table.iter().enumerate() {
            if inv[img as usize] != Elem::MAX {
                return None;
            }
            inv[img as usize] = e as Elem;
        }
        let n = group.presentation().ngens();
        Some(ElementMap {
            images: (0..n).map(|k| inv[group.generator(k) as usize]).collect(),
        })
    }

    pub fn display(&self, group: &EnumeratedGroup) -> String {
        let pres = group.presentation();
        (0..pres.min_gens())
            .map(|k| {
                format!(
                    "{}->{}",
                    pres.names()[k],
                    pres.display(&group.word(self.images[k]))
                )
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Evaluates the normal word `w` with pc-generator `k` sent to `images[k]`.
fn eval(group: &EnumeratedGroup, images: &[Elem], w: &NormalWord) -> Elem {
    let mut out = group.identity();
    for (k, e) in w.support() {
        for _ in 0..e {
            out = group.mul(out, images[k]);
        }
    }
    out
}

/// Image of pc-generator `k >= d` from its definition.
fn defined_image(group: &EnumeratedGroup, images: &[Elem], k: usize) -> Result<Elem> {
    let pres = group.presentation();
    match pres.definition(k) {
        Some(Definition::Power(i)) => Ok(group.pow(images[i], pres.prime() as u64)),
        Some(Definition::Commutator(j, i)) => Ok(group.comm(images[j], images[i])),
        None => Err(PcError::MissingDefinition(k + 1)),
    }
}

/// A relation of the presentation: `x_i^p = rhs` or `x_j^{x_i} = x_j * tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    Power(usize),
    Conjugate(usize, usize),
}

impl Relation {
    pub(crate) fn all(ngens: usize) -> impl Iterator<Item = Relation> {
        (0..ngens).map(Relation::Power).chain(
            (0..ngens).flat_map(move |i| (i + 1..ngens).map(move |j| Relation::Conjugate(i, j))),
        )
    }

    /// Whether the relation holds with generators sent to `images`.
    pub(crate) fn holds(&self, group: &EnumeratedGroup, images: &[Elem]) -> bool {
        let pres = group.presentation();
        match *self {
            Relation::Power(i) => {
                group.pow(images[i], pres.prime() as u64) == eval(group, images, pres.power_rhs(i))
            }
            Relation::Conjugate(i, j) => {
                group.conj(images[j], images[i])
                    == group.mul(images[j], eval(group, images, pres.conj_tail(i, j)))
            }
        }
    }

    /// Every generator the relation mentions.
    pub(crate) fn generators(&self, group: &EnumeratedGroup) -> Vec<usize> {
        let pres = group.presentation();
        match *self {
            Relation::Power(i) => std::iter::once(i)
                .chain(pres.power_rhs(i).support().map(|(g, _)| g))
                .collect(),
            Relation::Conjugate(i, j) => [i, j]
                .into_iter()
                .chain(pres.conj_tail(i, j).support().map(|(g, _)| g))
                .collect(),
        }
    }

    pub(crate) fn label(&self, group: &EnumeratedGroup) -> String {
        let pres = group.presentation();
        let names = pres.names();
        match *self {
            Relation::Power(i) => format!(
                "{}^{} = {}",
                names[i],
                pres.prime(),
                pres.display(pres.power_rhs(i))
            ),
            Relation::Conjugate(i, j) => format!(
                "{}^{} = {}*{}",
                names[j],
                names[i],
                names[j],
                pres.display(pres.conj_tail(i, j))
            ),
        }
    }
}

/// Extends `gm` to all pc-generators through their definitions and checks
/// every relation. Fails with [`PcError::RelationViolated`] when `gm` does
/// not define a homomorphism.
pub fn induce(group: &EnumeratedGroup, gm: &GenMap) -> Result<ElementMap> {
    let pres = group.presentation();
    let d = pres.min_gens();
    if gm.len() != d {
        return Err(PcError::ImageCount {
            expected: d,
            got: gm.len(),
        });
    }
    let mut images = Vec::with_capacity(pres.ngens());
    for w in gm.images() {
        pres.check_word(w)?;
        images.push(group.encode(w));
    }
    for k in d..pres.ngens() {
        let img = defined_image(group, &images, k)?;
        images.push(img);
    }
    for rel in Relation::all(pres.ngens()) {
        if !rel.holds(group, &images) {
            return Err(PcError::RelationViolated(rel.label(group)));
        }
    }
    Ok(ElementMap { images })
}

/// Whether the images of the minimal generators generate the whole group.
pub fn is_automorphism(group: &EnumeratedGroup, em: &ElementMap) -> bool {
    group.subgroup_closure(em.key(group)).len() == group.order()
}

/// Returns `g` with `em(a) = a^g` for all `a`, the least such element (and so
/// the least element of its coset of the center), if `em` is inner.
pub fn is_inner(group: &EnumeratedGroup, em: &ElementMap) -> Option<Elem> {
    let n = group.presentation().ngens();
    group
        .elements()
        .find(|&g| (0..n).all(|k| group.conj(group.generator(k), g) == em.image_of_generator(k)))
}

/// Returns a class representative `r` whose image leaves its class, or
/// `None` when `em` preserves every conjugacy class.
///
/// Checking representatives suffices: if `h = r^g` then
/// `em(h) = em(r)^{em(g)}` is conjugate to `r`, hence to `h`.
pub fn class_preserving_counterexample(
    group: &EnumeratedGroup,
    em: &ElementMap,
    classes: &ClassPartition,
) -> Option<Elem> {
    classes
        .representatives()
        .find(|&r| !classes.same_class(r, em.apply(group, r)))
}

pub fn is_class_preserving(
    group: &EnumeratedGroup,
    em: &ElementMap,
    classes: &ClassPartition,
) -> bool {
    class_preserving_counterexample(group, em, classes).is_none()
}
