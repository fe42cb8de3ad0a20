use std::collections::HashSet;

use rayon::prelude::*;

use super::{defined_image, is_class_preserving, ElementMap, Relation};
use crate::analysis::{Elem, EnumeratedGroup};
use crate::error::{PcError, Result};

/// Largest group order searched by default.
pub const DEFAULT_AUT_CAP: u64 = 1 << 7;

/// All automorphisms of a group, with the inner and class-preserving ones
/// marked.
#[derive(Clone, Debug)]
pub struct AutSet {
    maps: Vec<ElementMap>,
    inner: Vec<bool>,
    class_preserving: Vec<bool>,
}

impl AutSet {
    /// Sorted by the images of the minimal generators.
    pub fn maps(&self) -> &[ElementMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn inner(&self) -> impl Iterator<Item = &ElementMap> {
        self.maps
            .iter()
            .zip(&self.inner)
            .filter(|(_, &f)| f)
            .map(|(m, _)| m)
    }

    pub fn class_preserving(&self) -> impl Iterator<Item = &ElementMap> {
        self.maps
            .iter()
            .zip(&self.class_preserving)
            .filter(|(_, &f)| f)
            .map(|(m, _)| m)
    }

    pub fn is_inner(&self, index: usize) -> bool {
        self.inner[index]
    }

    pub fn is_class_preserving(&self, index: usize) -> bool {
        self.class_preserving[index]
    }

    pub fn inner_count(&self) -> usize {
        self.inner.iter().filter(|&&f| f).count()
    }

    pub fn class_preserving_count(&self) -> usize {
        self.class_preserving.iter().filter(|&&f| f).count()
    }

    pub fn position(&self, group: &EnumeratedGroup, m: &ElementMap) -> Option<usize> {
        self.maps
            .binary_search_by(|probe| probe.key(group).cmp(m.key(group)))
            .ok()
    }
}

struct Search<'g> {
    group: &'g EnumeratedGroup,
    d: usize,
    ngens: usize,
    // pc-generators whose image is fixed once minimal generator L is placed
    defined_at: Vec<Vec<usize>>,
    // relations that become checkable once minimal generator L is placed
    checks_at: Vec<Vec<Relation>>,
    candidates: Vec<Vec<Elem>>,
    frattini: Vec<bool>,
}

impl<'g> Search<'g> {
    fn new(group: &'g EnumeratedGroup) -> Result<Self> {
        let pres = group.presentation();
        let n = pres.ngens();
        let d = pres.min_gens();
        let p = pres.prime() as u64;

        let mut stage = vec![0usize; n];
        for (k, s) in stage.iter_mut().enumerate().take(d) {
            *s = k;
        }
        for k in d..n {
            stage[k] = match pres.definition(k) {
                Some(crate::pc::Definition::Power(i)) => stage[i],
                Some(crate::pc::Definition::Commutator(j, i)) => stage[j].max(stage[i]),
                None => return Err(PcError::MissingDefinition(k + 1)),
            };
        }
        let mut defined_at = vec![Vec::new(); d.max(1)];
        for k in d..n {
            defined_at[stage[k]].push(k);
        }
        let mut checks_at = vec![Vec::new(); d.max(1)];
        for rel in Relation::all(n) {
            let s = rel
                .generators(group)
                .into_iter()
                .map(|g| stage[g])
                .max()
                .unwrap_or(0);
            checks_at[s].push(rel);
        }

        // Frattini subgroup G^p [G, G]
        let mut gens: Vec<Elem> = group.elements().map(|g| group.pow(g, p)).collect();
        for i in 0..n {
            for j in i + 1..n {
                gens.push(group.comm(group.generator(j), group.generator(i)));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let phi = group.normal_closure(&gens);
        let mut frattini = vec![false; group.order()];
        for e in phi.iter() {
            frattini[e as usize] = true;
        }

        // candidate images, ordered by (order, weight of leading generator, lex)
        let weight_of = |e: Elem| -> u32 {
            (0..n)
                .find(|&k| group.exponent(e, k) != 0)
                .map_or(0, |k| pres.weight(k))
        };
        let orders: Vec<u64> = group.elements().map(|e| group.element_order(e)).collect();
        let candidates = (0..d)
            .map(|k| {
                let target = orders[group.generator(k) as usize];
                let mut c: Vec<Elem> = group
                    .elements()
                    .filter(|&e| orders[e as usize] == target && !frattini[e as usize])
                    .collect();
                c.sort_by_key(|&e| (orders[e as usize], weight_of(e), e));
                c
            })
            .collect();

        Ok(Search {
            group,
            d,
            ngens: n,
            defined_at,
            checks_at,
            candidates,
            frattini,
        })
    }

    // Places the image of minimal generator `level` and recurses; `span` is
    // the subgroup generated by the Frattini subgroup and the images placed
    // so far.
    fn descend(&self, level: usize, images: &mut [Elem], span: &[bool], out: &mut Vec<ElementMap>) {
        if level == self.d {
            let m = ElementMap {
                images: images.to_vec(),
            };
            if super::is_automorphism(self.group, &m) {
                out.push(m);
            }
            return;
        }
        for &c in &self.candidates[level] {
            if span[c as usize] {
                continue;
            }
            if let Some(next_span) = self.place(level, c, images, span) {
                self.descend(level + 1, images, &next_span, out);
            }
        }
    }

    fn place(
        &self,
        level: usize,
        c: Elem,
        images: &mut [Elem],
        span: &[bool],
    ) -> Option<Vec<bool>> {
        let g = self.group;
        images[level] = c;
        for &k in &self.defined_at[level] {
            images[k] = defined_image(g, images, k).expect("definitions checked in Search::new");
        }
        if !self.checks_at[level].iter().all(|r| r.holds(g, images)) {
            return None;
        }
        // <span, c> is the union of the cosets span * c^i, since span
        // contains the Frattini subgroup and is therefore normal
        let p = g.presentation().prime() as u64;
        let members: Vec<Elem> = span
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(e, _)| e as Elem)
            .collect();
        let mut next = span.to_vec();
        let mut cp = c;
        for _ in 1..p {
            for &s in &members {
                next[g.mul(s, cp) as usize] = true;
            }
            cp = g.mul(cp, c);
        }
        Some(next)
    }
}

/// Every automorphism of `group`, found by backtracking over the images of
/// the minimal generators.
///
/// Candidates for the image of `x_k` have the order of `x_k` and lie outside
/// the span of the Frattini subgroup and the images already placed; each
/// relation is checked as soon as all generators it mentions have images.
pub fn enumerate_automorphisms(group: &EnumeratedGroup, cap: u64) -> Result<AutSet> {
    if group.order() as u64 > cap {
        return Err(PcError::CapExceeded {
            order: group.order() as u128,
            cap,
        });
    }
    let search = Search::new(group)?;
    let mut maps: Vec<ElementMap> = if search.d == 0 {
        vec![ElementMap::identity(group)]
    } else {
        search.candidates[0]
            .par_iter()
            .map(|&c| {
                let mut out = Vec::new();
                let mut images = vec![0; search.ngens];
                if let Some(span) = search.place(0, c, &mut images, &search.frattini) {
                    search.descend(1, &mut images, &span, &mut out);
                }
                out
            })
            .flatten()
            .collect()
    };
    maps.sort_by(|a, b| a.key(group).cmp(b.key(group)));
    maps.dedup();

    let inner_keys: HashSet<Vec<Elem>> = group
        .elements()
        .map(|g| ElementMap::conjugation(group, g).key(group).to_vec())
        .collect();
    let classes = group.conjugacy_classes();
    let inner = maps
        .iter()
        .map(|m| inner_keys.contains(m.key(group)))
        .collect();
    let class_preserving = maps
        .par_iter()
        .map(|m| is_class_preserving(group, m, &classes))
        .collect();
    Ok(AutSet {
        maps,
        inner,
        class_preserving,
    })
}
