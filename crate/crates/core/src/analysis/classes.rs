use super::{Elem, ElementSet, EnumeratedGroup};

/// The conjugacy classes of a group, ordered by representative. Each class
/// is sorted and its representative is its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    classes: Vec<ElementSet>,
    class_of: Vec<u32>,
}

impl ClassPartition {
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> impl Iterator<Item = Elem> + '_ {
        self.classes
            .iter()
            .map(|c| c.first().expect("classes are nonempty"))
    }

    /// Index of the class containing `e`.
    pub fn class_index(&self, e: Elem) -> usize {
        self.class_of[e as usize] as usize
    }

    pub fn class_of(&self, e: Elem) -> &ElementSet {
        &self.classes[self.class_index(e)]
    }

    pub fn same_class(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a as usize] == self.class_of[b as usize]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ElementSet::len).collect()
    }
}

impl EnumeratedGroup {
    /// Orbits of the conjugation action of the pc-generators.
    pub fn conjugacy_classes(&self) -> ClassPartition {
        let n = self.pres.ngens();
        let conj_gens: Vec<(Elem, Elem)> = (0..n)
            .map(|k| {
                let x = self.generator(k);
                (self.inv(x), x)
            })
            .collect();
        let mut class_of = vec![u32::MAX; self.order];
        let mut classes = Vec::new();
        let mut queue = Vec::new();
        for start in self.elements() {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            // elements below `start` are already assigned, so `start` is the
            // least element of its class
            let id = classes.len() as u32;
            class_of[start as usize] = id;
            queue.clear();
            queue.push(start);
            let mut next = 0;
            while next < queue.len() {
                let a = queue[next];
                next += 1;
                for &(xi, x) in &conj_gens {
                    let b = self.mul(self.mul(xi, a), x);
                    if class_of[b as usize] == u32::MAX {
                        class_of[b as usize] = id;
                        queue.push(b);
                    }
                }
            }
            classes.push(ElementSet::from_unsorted(queue.clone()));
        }
        ClassPartition { classes, class_of }
    }
}
