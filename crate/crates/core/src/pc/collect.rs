//! Collection from the left, and the group arithmetic built on it.

use super::{GenWord, NormalWord, PcPresentation};
use crate::error::Result;

/// Work counters for a single collection call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CollectStats {
    /// Number of single generator letters multiplied into the collected part.
    pub steps: u64,
}

impl PcPresentation {
    /// Reduces `word` to normal form.
    pub fn collect(&self, word: &GenWord) -> NormalWord {
        self.collect_with_stats(word).0
    }

    pub fn collect_with_stats(&self, word: &GenWord) -> (NormalWord, CollectStats) {
        let mut stack = Vec::new();
        for &(g, e) in word.pairs().iter().rev() {
            self.push_power_letters(&mut stack, g, e);
        }
        let mut out = self.identity();
        let mut stats = CollectStats::default();
        self.collect_stack(out.exps_mut(), &mut stack, &mut stats);
        (out, stats)
    }

    // Pushes the letters of x_g^e so that they are popped in order.
    fn push_power_letters(&self, stack: &mut Vec<usize>, g: usize, e: i64) {
        // x^p need not be 1, so exponents are expanded rather than reduced
        if e >= 0 {
            for _ in 0..e {
                stack.push(g);
            }
        } else {
            for _ in 0..(-e) {
                stack.extend(self.inverse_letters[g].iter().rev());
            }
        }
    }

    /// Multiplies the collected exponent vector `exps` on the right by the
    /// letters on `stack` (top of stack first).
    ///
    /// Multiplying `x_1^{e_1}...x_n^{e_n}` by `x_k` rewrites it as
    /// `x_1^{e_1}...x_k^{e_k + 1} * (x_{k+1}^{e_{k+1}}...x_n^{e_n})^{x_k}`;
    /// the conjugated suffix is expanded with the tails of the conjugate
    /// relations and pushed back for collection. Every pushed letter has
    /// index above `k`, so the process terminates.
    fn collect_stack(&self, exps: &mut [u8], stack: &mut Vec<usize>, stats: &mut CollectStats) {
        let n = self.ngens;
        let p = self.prime;
        let mut pending: Vec<usize> = Vec::new();
        while let Some(k) = stack.pop() {
            stats.steps += 1;
            let mut top = n;
            while top > k + 1 && exps[top - 1] == 0 {
                top -= 1;
            }
            if top == k + 1 {
                exps[k] += 1;
                if exps[k] == p {
                    exps[k] = 0;
                    stack.extend(self.power_letters[k].iter().rev());
                }
                continue;
            }

            pending.clear();
            let row = k * n;
            for j in k + 1..top {
                for _ in 0..exps[j] {
                    pending.push(j);
                    pending.extend_from_slice(&self.tail_letters[row + j]);
                }
                exps[j] = 0;
            }
            stack.extend(pending.iter().rev());
            exps[k] += 1;
            if exps[k] == p {
                exps[k] = 0;
                stack.extend(self.power_letters[k].iter().rev());
            }
        }
    }

    pub(super) fn compute_generator_inverses(&mut self) {
        // x_k^{-1} = x_k^{p-1} * (x_k^p)^{-1}; the power word only involves
        // later generators, whose inverses are already known.
        let n = self.ngens;
        let p = self.prime as usize;
        for k in (0..n).rev() {
            let mut stack: Vec<usize> = Vec::new();
            let mut letters: Vec<usize> = vec![k; p - 1];
            for (g, e) in self.powers[k]
                .support()
                .collect::<Vec<_>>()
                .into_iter()
                .rev()
            {
                for _ in 0..e {
                    letters.extend_from_slice(&self.inverse_letters[g]);
                }
            }
            stack.extend(letters.iter().rev());
            let mut w = self.identity();
            self.collect_stack(w.exps_mut(), &mut stack, &mut CollectStats::default());
            self.inverse_letters[k] = w
                .support()
                .flat_map(|(g, e)| std::iter::repeat_n(g, e as usize))
                .collect();
        }
    }

    fn push_normal(&self, stack: &mut Vec<usize>, w: &NormalWord) {
        for (g, e) in w.support().collect::<Vec<_>>().into_iter().rev() {
            for _ in 0..e {
                stack.push(g);
            }
        }
    }

    /// Normal form of `a * b`.
    pub fn multiply(&self, a: &NormalWord, b: &NormalWord) -> NormalWord {
        let mut out = a.clone();
        let mut stack = Vec::new();
        self.push_normal(&mut stack, b);
        self.collect_stack(out.exps_mut(), &mut stack, &mut CollectStats::default());
        out
    }

    /// As [`Self::multiply`], rejecting words of the wrong length.
    pub fn try_multiply(&self, a: &NormalWord, b: &NormalWord) -> Result<NormalWord> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(self.multiply(a, b))
    }

    /// Product of a sequence of normal words, left to right.
    pub fn product<'a>(&self, words: impl IntoIterator<Item = &'a NormalWord>) -> NormalWord {
        let mut out = self.identity();
        for w in words {
            out = self.multiply(&out, w);
        }
        out
    }

    pub fn inverse(&self, a: &NormalWord) -> NormalWord {
        // (x_1^{a_1}...x_n^{a_n})^{-1} = x_n^{-a_n} ... x_1^{-a_1}
        let mut stack = Vec::new();
        for (g, e) in a.support() {
            for _ in 0..e {
                stack.extend(self.inverse_letters[g].iter().rev());
            }
        }
        let mut out = self.identity();
        self.collect_stack(out.exps_mut(), &mut stack, &mut CollectStats::default());
        out
    }

    /// `a^k`, with negative `k` taken through the inverse.
    pub fn power(&self, a: &NormalWord, k: i64) -> NormalWord {
        let mut base = if k < 0 { self.inverse(a) } else { a.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `a^g = g^{-1} a g`.
    pub fn conjugate(&self, a: &NormalWord, g: &NormalWord) -> NormalWord {
        let gi = self.inverse(g);
        self.multiply(&self.multiply(&gi, a), g)
    }

    /// `[a, b] = a^{-1} a^b = a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: &NormalWord, b: &NormalWord) -> NormalWord {
        let ai = self.inverse(a);
        self.multiply(&ai, &self.conjugate(a, b))
    }

    /// Smallest `k >= 1` with `a^k = 1`. For a consistent presentation this
    /// is a power of `p` dividing `p^ngens`.
    pub fn element_order(&self, a: &NormalWord) -> u64 {
        let p = self.prime as u64;
        let mut x = a.clone();
        let mut order = 1u64;
        for _ in 0..=self.ngens {
            if x.is_identity() {
                return order;
            }
            x = self.power(&x, p as i64);
            order *= p;
        }
        order
    }
}

#[cfg(test)]
mod tests {
    use crate::pc::{GenWord, PresentationBuilder};

    #[test]
    fn cyclic_of_order_eight() {
        // x_1^2 = x_2, x_2^2 = x_3
        let c8 = PresentationBuilder::new(2, 3, 1, vec![1, 2, 3])
            .power(0, &[(1, 1)])
            .power(1, &[(2, 1)])
            .build()
            .unwrap();
        let x = c8.generator(0);
        assert_eq!(c8.element_order(&x), 8);
        assert_eq!(c8.power(&x, 3).exponents(), &[1, 1, 0]);
        assert_eq!(c8.power(&x, -1).exponents(), &[1, 1, 1]);
        assert_eq!(
            c8.collect(&GenWord::from_pairs([(0, 9)])).exponents(),
            &[1, 0, 0]
        );
    }

    #[test]
    fn empty_word_is_identity() {
        let k = PresentationBuilder::new(3, 2, 2, vec![1, 1])
            .build()
            .unwrap();
        assert!(k.collect(&GenWord::new()).is_identity());
        assert!(k.power(&k.generator(0), 0).is_identity());
        assert!(k.inverse(&k.identity()).is_identity());
    }

    #[test]
    fn odd_prime_heisenberg() {
        // [x_2, x_1] = x_3 over p = 3
        let h = PresentationBuilder::new(3, 3, 2, vec![1, 1, 2])
            .conjugate(0, 1, &[(2, 1)])
            .build()
            .unwrap();
        let (a, b) = (h.generator(0), h.generator(1));
        assert_eq!(h.commutator(&b, &a), h.generator(2));
        assert_eq!(h.multiply(&b, &a).exponents(), &[1, 1, 1]);
        let ab = h.multiply(&a, &b);
        assert!(h.multiply(&ab, &h.inverse(&ab)).is_identity());
        assert_eq!(h.element_order(&ab), 3);
    }
}
