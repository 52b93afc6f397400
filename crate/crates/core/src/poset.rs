//! Finite posets over dense integer ids.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// A finite partially ordered set on `0..n`.
///
/// The order is stored twice, as the principal up-set and down-set of every
/// element, so that both directions of a comparison are a single bit test.
/// Every constructor checks reflexivity, antisymmetry and transitivity.
///
/// Equality compares the relation only; labels are presentation.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of a cover list.
    ///
    /// A pair `(x, y)` means `y` covers `x`. Redundant pairs (already implied
    /// by transitivity) are accepted.
    pub fn from_covers<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        covers: &[(usize, usize)],
    ) -> Result<Poset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        check_size(n)?;
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for &(x, y) in covers {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::Index { index: i, size: n });
                }
            }
            if x == y {
                return Err(Error::Cycle(x));
            }
            up[x].insert(y);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row = up[k];
            for r in up.iter_mut() {
                if r.contains(k) {
                    *r = r.union(row);
                }
            }
        }
        for x in 0..n {
            for y in up[x].without(x) {
                if up[y].contains(x) {
                    return Err(Error::Cycle(x));
                }
            }
        }
        Ok(Self::from_up_sets_unchecked(labels, up))
    }

    /// Builds a poset from an arbitrary relation predicate and verifies the
    /// partial order axioms.
    pub fn from_relation(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let n = labels.len();
        check_size(n)?;
        let up = (0..n).map(|x| (0..n).filter(|&y| le(x, y)).collect()).collect();
        let p = Self::from_up_sets_unchecked(labels, up);
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn from_up_sets_unchecked(labels: Vec<String>, up: Vec<ElementSet>) -> Poset {
        let n = labels.len();
        let mut down = vec![ElementSet::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in *row {
                down[y].insert(x);
            }
        }
        Poset { labels, up, down }
    }

    /// Checks the three partial order axioms against the stored relation.
    pub fn validate(&self) -> Result<()> {
        for x in self.elements() {
            if !self.le(x, x) {
                return Err(Error::PreconditionFailed("relation is not reflexive"));
            }
            for y in self.strict_up(x) {
                if self.le(y, x) {
                    return Err(Error::Cycle(x));
                }
                if !self.up[y].is_subset(self.up[x]) {
                    return Err(Error::PreconditionFailed("relation is not transitive"));
                }
            }
        }
        Ok(())
    }

    /// The `n`-element chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(numeric_labels(n), &covers).expect("chain is a poset")
    }

    /// The `n`-element antichain.
    pub fn antichain(n: usize) -> Poset {
        Poset::from_covers(numeric_labels(n), &[]).expect("antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.len() {
            return Err(Error::BadParams(format!(
                "{} labels for {} elements",
                labels.len(),
                self.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Looks up an element id by label.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::Index {
                index: x,
                size: self.len(),
            })
        }
    }

    pub fn check_subset(&self, s: ElementSet) -> Result<()> {
        match s.difference(self.all()).first() {
            None => Ok(()),
            Some(index) => Err(Error::Index {
                index,
                size: self.len(),
            }),
        }
    }

    /// `x <= y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    /// Elements comparable with `x`, including `x`.
    pub fn comparable_with(&self, x: usize) -> ElementSet {
        self.up[x].union(self.down[x])
    }

    pub(crate) fn up(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    pub(crate) fn strict_up(&self, x: usize) -> ElementSet {
        self.up[x].without(x)
    }

    pub(crate) fn strict_down(&self, x: usize) -> ElementSet {
        self.down[x].without(x)
    }

    pub fn down_set(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(self.down[x])
    }

    pub fn up_set(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(self.up[x])
    }

    pub fn strict_down_set(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(self.strict_down(x))
    }

    pub fn strict_up_set(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(self.strict_up(x))
    }

    /// Union of the principal down-sets of the members of `s`.
    pub fn down_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(ElementSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    /// Union of the principal up-sets of the members of `s`.
    pub fn up_closure(&self, s: ElementSet) -> ElementSet {
        s.iter().fold(ElementSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    pub fn is_down_set(&self, s: ElementSet) -> bool {
        self.down_closure(s) == s
    }

    pub fn is_up_set(&self, s: ElementSet) -> bool {
        self.up_closure(s) == s
    }

    pub fn maximal_elements(&self) -> ElementSet {
        self.elements()
            .filter(|&x| self.strict_up(x).is_empty())
            .collect()
    }

    pub fn minimal_elements(&self) -> ElementSet {
        self.elements()
            .filter(|&x| self.strict_down(x).is_empty())
            .collect()
    }

    /// The maximum of `s`, if `s` has one.
    pub fn maximum_of(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.down[m]))
    }

    /// The minimum of `s`, if `s` has one.
    pub fn minimum_of(&self, s: ElementSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(self.up[m]))
    }

    pub fn upper_covers(&self, x: usize) -> ElementSet {
        let above = self.strict_up(x);
        let far = above
            .iter()
            .fold(ElementSet::EMPTY, |acc, z| acc.union(self.strict_up(z)));
        above.difference(far)
    }

    pub fn lower_covers(&self, x: usize) -> ElementSet {
        let below = self.strict_down(x);
        let far = below
            .iter()
            .fold(ElementSet::EMPTY, |acc, z| acc.union(self.strict_down(z)));
        below.difference(far)
    }

    /// The Hasse diagram: every `(x, y)` with `y` covering `x`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.elements()
            .flat_map(|x| self.upper_covers(x).iter().map(move |y| (x, y)))
            .collect()
    }

    /// Number of elements in a longest chain ending at `x`, minus one.
    pub fn height_of(&self, x: usize) -> usize {
        // Ids need not follow a linear extension, so recurse on strict down-sets.
        let below = self.strict_down(x);
        below.iter().map(|y| self.height_of(y) + 1).max().unwrap_or(0)
    }

    /// Heights of all elements, computed in one pass over a linear extension.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut h = vec![0; self.len()];
        for x in order {
            h[x] = self.lower_covers(x).iter().map(|y| h[y] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Splits `s` into the connected components of the induced subposet,
    /// sorted by least member.
    pub fn connected_components(&self, s: ElementSet) -> Vec<ElementSet> {
        let mut rest = s.intersection(self.all());
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.component_of(s, start);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// The connected component of `s` containing `x` (assumes `x` in `s`).
    pub(crate) fn component_of(&self, s: ElementSet, x: usize) -> ElementSet {
        let mut comp = ElementSet::singleton(x);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let reach = frontier
                .iter()
                .fold(ElementSet::EMPTY, |acc, v| acc.union(self.comparable_with(v)));
            frontier = reach.intersection(s).difference(comp);
            comp = comp.union(frontier);
        }
        comp
    }

    pub fn is_connected(&self, s: ElementSet) -> bool {
        match s.first() {
            None => false,
            Some(x) => self.component_of(s, x) == s,
        }
    }

    /// The dual poset, same ids and labels.
    pub fn opposite(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Restriction of the order to `s`, renumbered `0..|s|` in increasing id
    /// order (`s.to_vec()[i]` is the original id of new element `i`).
    pub fn induced_subposet(&self, s: ElementSet) -> Result<Poset> {
        self.check_subset(s)?;
        let members = s.to_vec();
        let mut index = [usize::MAX; MAX_ELEMENTS];
        for (i, &x) in members.iter().enumerate() {
            index[x] = i;
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        let up = members
            .iter()
            .map(|&x| self.up[x].intersection(s).iter().map(|y| index[y]).collect())
            .collect();
        Ok(Self::from_up_sets_unchecked(labels, up))
    }

    /// Whether every maximal chain meets `x`.
    ///
    /// A maximal chain of a finite poset is a cover path from a minimal to a
    /// maximal element, so this is a reachability search in the Hasse diagram
    /// restricted to the complement of `x`.
    pub fn is_cutset(&self, x: ElementSet) -> Result<bool> {
        self.check_subset(x)?;
        let allowed = self.all().difference(x);
        let maximal = self.maximal_elements();
        let mut seen = self.minimal_elements().intersection(allowed);
        let mut stack = seen.to_vec();
        while let Some(v) = stack.pop() {
            if maximal.contains(v) {
                return Ok(false);
            }
            for w in self.upper_covers(v).intersection(allowed).difference(seen) {
                seen.insert(w);
                stack.push(w);
            }
        }
        Ok(!self.is_empty())
    }

    /// Least common upper bound of `s`, if it exists.
    pub fn has_join(&self, s: ElementSet) -> Result<Option<usize>> {
        if s.is_empty() {
            return Err(Error::EmptyInput);
        }
        self.check_subset(s)?;
        let bounds = s.iter().fold(self.all(), |acc, x| acc.intersection(self.up[x]));
        Ok(self.minimum_of(bounds))
    }

    /// Greatest common lower bound of `s`, if it exists.
    pub fn has_meet(&self, s: ElementSet) -> Result<Option<usize>> {
        self.opposite().has_join(s)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::TooLarge {
            got: n,
            max: MAX_ELEMENTS,
        });
    }
    Ok(())
}

pub fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex_easy() -> Poset {
        Poset::from_covers(numeric_labels(5), &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4)]).unwrap()
    }

    fn crown6() -> Poset {
        Poset::from_covers(
            numeric_labels(6),
            &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn closure_of_covers() {
        let p = ex_easy();
        assert_eq!(p.maximal_elements(), ElementSet::from([2, 3, 4]));
        assert_eq!(p.minimal_elements(), ElementSet::from([0, 1]));
        assert_eq!(p.down_set(3).unwrap(), ElementSet::from([0, 1, 3]));
        assert_eq!(p.covers(), vec![(0, 2), (0, 3), (0, 4), (1, 3), (1, 4)]);
    }

    #[test]
    fn singleton_poset() {
        let p = Poset::from_covers(["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.le(0, 0));
        assert_eq!(p.opposite(), p);
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Poset::from_covers(numeric_labels(2), &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
        let err = Poset::from_covers(numeric_labels(3), &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
    }

    #[test]
    fn out_of_range_cover() {
        let err = Poset::from_covers(numeric_labels(2), &[(0, 2)]).unwrap_err();
        assert_eq!(err, Error::Index { index: 2, size: 2 });
        assert!(ex_easy().down_set(9).is_err());
    }

    #[test]
    fn redundant_covers_reduce_to_hasse() {
        let p = Poset::from_covers(numeric_labels(3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p, Poset::chain(3));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn strict_sets_exclude_element() {
        let p = ex_easy();
        for x in p.elements() {
            let down = p.down_set(x).unwrap();
            assert!(!down.intersects(p.strict_up_set(x).unwrap()));
            assert!(!p.strict_down_set(x).unwrap().contains(x));
        }
    }

    #[test]
    fn components_in_canonical_order() {
        let p = ex_easy();
        assert_eq!(
            p.connected_components(ElementSet::from([0, 1])),
            vec![ElementSet::from([0]), ElementSet::from([1])]
        );
        assert_eq!(p.connected_components(p.all()), vec![p.all()]);
        assert!(p.connected_components(ElementSet::EMPTY).is_empty());
        // 2 and 3 are linked only through 0 inside the subset.
        assert_eq!(
            p.connected_components(ElementSet::from([2, 3, 1])),
            vec![ElementSet::from([1, 3]), ElementSet::from([2])]
        );
    }

    #[test]
    fn opposite_swaps_extremes() {
        let p = ex_easy();
        let op = p.opposite();
        assert_eq!(op.maximal_elements(), ElementSet::from([0, 1]));
        assert_eq!(op.opposite(), p);
    }

    #[test]
    fn induced_subposet_renumbers() {
        let p = ex_easy();
        let q = p.induced_subposet(ElementSet::from([1, 3, 4])).unwrap();
        assert_eq!(q.labels(), ["1", "3", "4"]);
        assert_eq!(q.covers(), vec![(0, 1), (0, 2)]);
        assert_eq!(p.induced_subposet(p.all()).unwrap(), p);
    }

    #[test]
    fn cutsets() {
        let p = crown6();
        assert!(p.is_cutset(p.maximal_elements()).unwrap());
        assert!(p.is_cutset(p.minimal_elements()).unwrap());
        assert!(!p.is_cutset(ElementSet::from([3])).unwrap());
        let c = Poset::chain(3);
        assert!(c.is_cutset(ElementSet::from([1])).unwrap());
        assert!(!ex_easy().is_cutset(ElementSet::from([3, 4])).unwrap());
    }

    #[test]
    fn joins() {
        let c = Poset::chain(4);
        assert_eq!(c.has_join(ElementSet::from([0, 2])).unwrap(), Some(2));
        assert_eq!(ex_easy().has_join(ElementSet::from([0])).unwrap(), Some(0));
        // {0,1} has upper bounds {3,4}, neither least.
        assert_eq!(ex_easy().has_join(ElementSet::from([0, 1])).unwrap(), None);
        assert_eq!(c.has_join(ElementSet::EMPTY), Err(Error::EmptyInput));
    }

    #[test]
    fn heights_follow_longest_chain() {
        let p = Poset::from_covers(numeric_labels(4), &[(0, 1), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.heights(), vec![0, 1, 0, 2]);
        assert_eq!(p.height_of(3), 2);
    }
}
