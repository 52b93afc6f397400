//! Backtracking enumeration of order-preserving self-maps.
//!
//! Elements are assigned in id order and candidate images are tried in
//! increasing id order, so solutions come out in lexicographic order of their
//! value vectors. After every assignment the candidate sets are pruned to arc
//! consistency over the cover pairs: for each cover `x < y`, an image of `x`
//! must lie below some candidate of `y` and vice versa. Propagation only drops
//! values that belong to no solution, so the enumeration order is unaffected.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Default limit on the number of elements for exhaustive map searches.
pub const DEFAULT_SEARCH_CAP: usize = 15;

/// Environment variable that overrides [`DEFAULT_SEARCH_CAP`].
pub const SEARCH_CAP_ENV: &str = "CROSSCUT_SEARCH_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_elements: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_elements: DEFAULT_SEARCH_CAP,
        }
    }
}

impl SearchConfig {
    pub fn with_cap(max_elements: usize) -> Self {
        SearchConfig { max_elements }
    }

    /// Reads [`SEARCH_CAP_ENV`], falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(SEARCH_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(SearchConfig::with_cap)
            .unwrap_or_default()
    }

    pub fn check(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_elements {
            return Err(Error::CapExceeded {
                what,
                got: n,
                cap: self.max_elements,
            });
        }
        Ok(())
    }
}

/// An enumeration of order-preserving endomaps, optionally restricted by
/// per-element candidate sets.
#[derive(Clone, Debug)]
pub struct EndomapSearch<'a> {
    poset: &'a Poset,
    domains: Vec<ElementSet>,
    covers: Vec<(usize, usize)>,
}

impl<'a> EndomapSearch<'a> {
    pub fn new(poset: &'a Poset) -> Self {
        EndomapSearch {
            poset,
            domains: vec![poset.all(); poset.len()],
            covers: poset.covers(),
        }
    }

    /// Only maps with `f(x) != x` for every `x`.
    pub fn fixed_point_free(mut self) -> Self {
        for (x, d) in self.domains.iter_mut().enumerate() {
            d.remove(x);
        }
        self
    }

    /// Only maps with `f(x)` in `allowed`.
    pub fn restrict(mut self, x: usize, allowed: ElementSet) -> Self {
        self.domains[x] = self.domains[x].intersection(allowed);
        self
    }

    /// Only maps sending every member of `s` into `target`.
    pub fn restrict_image(mut self, s: ElementSet, target: ElementSet) -> Self {
        for x in s {
            self.domains[x] = self.domains[x].intersection(target);
        }
        self
    }

    /// Calls `visit` on every admissible map in lexicographic order until it
    /// breaks. Returns the break value, if any.
    pub fn for_each<B>(&self, mut visit: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
        let mut domains = self.domains.clone();
        if !self.propagate(&mut domains) {
            return None;
        }
        let mut values = vec![0; self.poset.len()];
        match self.descend(0, domains, &mut values, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    fn descend<B>(
        &self,
        x: usize,
        domains: Vec<ElementSet>,
        values: &mut [usize],
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if x == values.len() {
            return visit(values);
        }
        for v in domains[x] {
            let mut next = domains.clone();
            next[x] = ElementSet::singleton(v);
            if self.propagate(&mut next) {
                values[x] = v;
                self.descend(x + 1, next, values, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Prunes to arc consistency; false if some candidate set empties.
    fn propagate(&self, domains: &mut [ElementSet]) -> bool {
        let p = self.poset;
        loop {
            let mut changed = false;
            for &(lo, hi) in &self.covers {
                let lo_new = domains[lo].intersection(p.down_closure(domains[hi]));
                if lo_new != domains[lo] {
                    if lo_new.is_empty() {
                        return false;
                    }
                    domains[lo] = lo_new;
                    changed = true;
                }
                let hi_new = domains[hi].intersection(p.up_closure(domains[lo]));
                if hi_new != domains[hi] {
                    if hi_new.is_empty() {
                        return false;
                    }
                    domains[hi] = hi_new;
                    changed = true;
                }
            }
            if !changed {
                return domains.iter().all(|d| !d.is_empty());
            }
        }
    }

    /// The lexicographically least admissible map.
    pub fn first(&self) -> Option<Vec<usize>> {
        self.for_each(|values| ControlFlow::Break(values.to_vec()))
    }

    pub fn count(&self) -> u64 {
        let mut n = 0u64;
        self.for_each::<()>(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    /// Whether every admissible map satisfies `pred`; stops at the first
    /// counterexample and returns it.
    pub fn find_counterexample(&self, mut pred: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
        self.for_each(|values| {
            if pred(values) {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(values.to_vec())
            }
        })
    }

    /// Some admissible map, chosen by trying candidate images in random order.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Vec<usize>> {
        let mut domains = self.domains.clone();
        if !self.propagate(&mut domains) {
            return None;
        }
        let mut values = vec![0; self.poset.len()];
        self.sample_from(0, domains, &mut values, rng).then_some(values)
    }

    fn sample_from<R: Rng + ?Sized>(
        &self,
        x: usize,
        domains: Vec<ElementSet>,
        values: &mut [usize],
        rng: &mut R,
    ) -> bool {
        if x == values.len() {
            return true;
        }
        let mut candidates = domains[x].to_vec();
        candidates.shuffle(rng);
        for v in candidates {
            let mut next = domains.clone();
            next[x] = ElementSet::singleton(v);
            if self.propagate(&mut next) {
                values[x] = v;
                if self.sample_from(x + 1, next, values, rng) {
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::numeric_labels;

    /// Brute force over all n^n functions.
    fn brute_count(p: &Poset, fixed_point_free: bool) -> u64 {
        let n = p.len();
        let total = n.pow(n as u32);
        let mut count = 0;
        for code in 0..total {
            let mut c = code;
            let f: Vec<usize> = (0..n)
                .map(|_| {
                    let v = c % n;
                    c /= n;
                    v
                })
                .collect();
            let monotone = p
                .elements()
                .all(|x| p.elements().all(|y| !p.le(x, y) || p.le(f[x], f[y])));
            let fpf = (0..n).all(|x| f[x] != x);
            if monotone && (!fixed_point_free || fpf) {
                count += 1;
            }
        }
        count
    }

    fn small_posets() -> Vec<Poset> {
        vec![
            Poset::chain(1),
            Poset::chain(2),
            Poset::antichain(2),
            Poset::chain(4),
            Poset::antichain(4),
            Poset::from_covers(numeric_labels(5), &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4)]).unwrap(),
            Poset::from_covers(numeric_labels(4), &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap(),
            Poset::from_covers(numeric_labels(6), &[(0, 1), (2, 3), (1, 4), (3, 4), (5, 4)]).unwrap(),
        ]
    }

    #[test]
    fn counts_match_brute_force() {
        for p in small_posets() {
            assert_eq!(EndomapSearch::new(&p).count(), brute_count(&p, false), "{p:?}");
            assert_eq!(
                EndomapSearch::new(&p).fixed_point_free().count(),
                brute_count(&p, true),
                "{p:?}"
            );
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(EndomapSearch::new(&Poset::chain(2)).count(), 3);
        assert_eq!(EndomapSearch::new(&Poset::chain(1)).count(), 1);
        assert_eq!(EndomapSearch::new(&Poset::antichain(2)).count(), 4);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let p = Poset::from_covers(numeric_labels(4), &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let mut seen = Vec::new();
        EndomapSearch::new(&p).for_each::<()>(|v| {
            seen.push(v.to_vec());
            ControlFlow::Continue(())
        });
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
        assert_eq!(seen[0], vec![0, 0, 0, 0]);
    }

    #[test]
    fn samples_are_monotone() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let p = Poset::from_covers(numeric_labels(6), &[(0, 1), (2, 3), (1, 4), (3, 4), (5, 4)]).unwrap();
        for _ in 0..50 {
            let f = EndomapSearch::new(&p).sample(&mut rng).unwrap();
            for x in p.elements() {
                for y in p.elements() {
                    if p.le(x, y) {
                        assert!(p.le(f[x], f[y]));
                    }
                }
            }
        }
    }

    #[test]
    fn cap_from_config() {
        let cfg = SearchConfig::with_cap(3);
        assert!(cfg.check("x", 3).is_ok());
        assert!(matches!(cfg.check("x", 4), Err(Error::CapExceeded { .. })));
    }
}
