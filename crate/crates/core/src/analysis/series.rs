use super::{ElementSet, EnumeratedGroup};

impl EnumeratedGroup {
    /// `G = gamma_1 > gamma_2 > ... > gamma_{c+1} = 1`.
    ///
    /// `gamma_{i+1} = [gamma_i, G]` is the normal closure of the commutators
    /// of every element of `gamma_i` with each pc-generator.
    pub fn lower_central_series(&self) -> Vec<ElementSet> {
        let n = self.pres.ngens();
        let mut series = vec![self.all()];
        while series.last().is_some_and(|g| g.len() > 1) {
            let current = series.last().expect("nonempty");
            let mut comms: Vec<_> = current
                .iter()
                .flat_map(|a| (0..n).map(move |k| (a, k)))
                .map(|(a, k)| self.comm(a, self.generator(k)))
                .collect();
            comms.sort_unstable();
            comms.dedup();
            let next = self.normal_closure(&comms);
            if next.len() == current.len() {
                // not nilpotent; cannot happen for a consistent p-group
                break;
            }
            series.push(next);
        }
        series
    }

    /// Smallest `c` with `gamma_{c+1} = 1`.
    pub fn nilpotency_class(&self) -> usize {
        self.lower_central_series().len() - 1
    }
}
