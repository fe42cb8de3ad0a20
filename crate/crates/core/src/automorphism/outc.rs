use std::collections::HashSet;

use super::{enumerate_automorphisms, ElementMap};
use crate::analysis::{Elem, EnumeratedGroup};
use crate::error::Result;

/// Orders of `Aut(G) >= Aut_c(G) >= Inn(G)` and coset representatives of
/// `Inn(G)` in `Aut_c(G)`.
#[derive(Clone, Debug)]
pub struct OutC {
    pub group_order: usize,
    pub center_order: usize,
    pub aut_order: usize,
    pub aut_c_order: usize,
    pub inn_order: usize,
    /// `|Aut_c(G)| / |Inn(G)|`; 1 means every class-preserving automorphism
    /// is inner.
    pub out_c_order: usize,
    /// One class-preserving automorphism per coset of `Inn(G)`, the first
    /// being the identity.
    pub representatives: Vec<ElementMap>,
}

/// Computes `Out_c(G)` by enumerating `Aut(G)`, taking the kernel of its
/// action on conjugacy classes, and dividing out `Inn(G)`.
pub fn out_c(group: &EnumeratedGroup, cap: u64) -> Result<OutC> {
    let auts = enumerate_automorphisms(group, cap)?;
    let inner: Vec<&ElementMap> = auts.inner().collect();
    let mut covered: HashSet<Vec<Elem>> = HashSet::new();
    let mut representatives = Vec::new();
    for a in auts.class_preserving() {
        if covered.contains(a.key(group)) {
            continue;
        }
        representatives.push(a.clone());
        for c in &inner {
            covered.insert(a.then(group, c).key(group).to_vec());
        }
    }
    let aut_c_order = auts.class_preserving_count();
    let inn_order = inner.len();
    debug_assert_eq!(aut_c_order % inn_order, 0);
    Ok(OutC {
        group_order: group.order(),
        center_order: group.center().len(),
        aut_order: auts.len(),
        aut_c_order,
        inn_order,
        out_c_order: aut_c_order / inn_order,
        representatives,
    })
}
