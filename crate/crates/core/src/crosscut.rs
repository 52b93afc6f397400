//! Crosscut posets of a finite poset.
//!
//! For a subset `X` of a poset `P`, the crosscut poset `Γ(P, X)` collects the
//! connected components of every non-empty `st(A)`, `A` ranging over the
//! non-empty subsets of `X`, ordered by inclusion. Here `st(A)` is the set of
//! elements comparable with every member of `A`.
//!
//! Three instances matter most:
//!
//! * the down-side poset `Γ(P, mxl P)`, whose nodes are down-sets;
//! * the up-side poset `Γ(P, mnl P)` with the order reversed, whose nodes are
//!   up-sets;
//! * the combined poset: both of the above side by side, plus `U <= D`
//!   whenever an up-side node `U` meets a down-side node `D`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::set::ElementSet;

/// Largest `|X|` for which `Γ(P, X)` is enumerated.
pub const GAMMA_CAP: usize = 20;

/// Which half of a crosscut poset a node comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Built from maximal elements (or an arbitrary `X`); ordered by inclusion.
    Down,
    /// Built from minimal elements; ordered by reverse inclusion.
    Up,
}

impl Side {
    pub fn tag(self) -> &'static str {
        match self {
            Side::Down => "D",
            Side::Up => "U",
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Down => Side::Up,
            Side::Up => Side::Down,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A poset whose elements are subsets of an underlying poset.
#[derive(Clone, Debug)]
pub struct CrosscutPoset {
    base: Poset,
    nodes: Vec<ElementSet>,
    sides: Vec<Side>,
    order: Poset,
}

impl CrosscutPoset {
    fn build(
        base: &Poset,
        nodes: Vec<ElementSet>,
        sides: Vec<Side>,
        le: impl Fn(usize, usize) -> bool,
    ) -> Result<CrosscutPoset> {
        let labels = nodes.iter().map(|&c| subset_label(base, c)).collect();
        let order = Poset::from_relation(labels, le)?;
        Ok(CrosscutPoset {
            base: base.clone(),
            nodes,
            sides,
            order,
        })
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn nodes(&self) -> &[ElementSet] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> ElementSet {
        self.nodes[i]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn side(&self, i: usize) -> Side {
        self.sides[i]
    }

    /// The order on node indices, labelled `{..}` by member labels.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, node: ElementSet, side: Side) -> Option<usize> {
        (0..self.len()).find(|&i| self.nodes[i] == node && self.sides[i] == side)
    }

    /// Node sets on one side, in node order.
    pub fn side_nodes(&self, side: Side) -> Vec<ElementSet> {
        (0..self.len())
            .filter(|&i| self.sides[i] == side)
            .map(|i| self.nodes[i])
            .collect()
    }

    /// Hasse edges `(u, d)` of the combined order running from an up-side
    /// node to a down-side node.
    pub fn cross_covers(&self) -> Vec<(usize, usize)> {
        self.order
            .covers()
            .into_iter()
            .filter(|&(i, j)| self.sides[i] != self.sides[j])
            .collect()
    }

    /// All comparabilities `(u, d)` between an up-side and a down-side node.
    pub fn cross_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.sides[i] == Side::Up && self.sides[j] == Side::Down && self.order.le(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// `{a b c}` using the base poset's labels.
pub fn subset_label(base: &Poset, s: ElementSet) -> String {
    let members: Vec<&str> = s.iter().map(|x| base.label(x)).collect();
    format!("{{{}}}", members.join(" "))
}

/// Elements comparable with every member of `a`.
pub fn st(p: &Poset, a: ElementSet) -> Result<ElementSet> {
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    p.check_subset(a)?;
    Ok(st_unchecked(p, a))
}

fn st_unchecked(p: &Poset, a: ElementSet) -> ElementSet {
    a.iter()
        .fold(p.all(), |acc, x| acc.intersection(p.comparable_with(x)))
}

/// `I_X(B)`: the members of `x` comparable with every member of `b`.
pub fn index_set(p: &Poset, x: ElementSet, b: ElementSet) -> Result<ElementSet> {
    if b.is_empty() {
        return Err(Error::EmptyInput);
    }
    p.check_subset(x)?;
    p.check_subset(b)?;
    Ok(x.iter().filter(|&e| b.is_subset(p.comparable_with(e))).collect())
}

/// Node sets of `Γ(P, X)`, deduplicated and sorted by member list.
pub fn gamma_nodes(p: &Poset, x: ElementSet) -> Result<Vec<ElementSet>> {
    p.check_subset(x)?;
    let xs = x.to_vec();
    if xs.len() > GAMMA_CAP {
        return Err(Error::CapExceeded {
            what: "crosscut generating set",
            got: xs.len(),
            cap: GAMMA_CAP,
        });
    }
    // st over subset masks, built incrementally from the mask minus its low bit.
    let subsets = 1usize << xs.len();
    let mut st_of = vec![p.all(); subsets];
    let mut distinct = HashSet::new();
    for mask in 1..subsets {
        let low = mask.trailing_zeros() as usize;
        st_of[mask] = st_of[mask & (mask - 1)].intersection(p.comparable_with(xs[low]));
        if !st_of[mask].is_empty() {
            distinct.insert(st_of[mask]);
        }
    }
    let mut nodes = BTreeSet::new();
    for s in distinct {
        for comp in p.connected_components(s) {
            nodes.insert(comp.to_vec());
        }
    }
    Ok(nodes.into_iter().map(ElementSet::from_iter).collect())
}

/// `Γ(P, X)` ordered by inclusion.
pub fn gamma(p: &Poset, x: ElementSet) -> Result<CrosscutPoset> {
    let nodes = gamma_nodes(p, x)?;
    let sides = vec![Side::Down; nodes.len()];
    CrosscutPoset::build(p, nodes.clone(), sides, |i, j| nodes[i].is_subset(nodes[j]))
}

/// The down-side crosscut poset `Γ(P, mxl P)`.
pub fn d_poset(p: &Poset) -> Result<CrosscutPoset> {
    gamma(p, p.maximal_elements())
}

/// The up-side crosscut poset `Γ(P, mnl P)` with reverse inclusion.
pub fn u_poset(p: &Poset) -> Result<CrosscutPoset> {
    let nodes = gamma_nodes(p, p.minimal_elements())?;
    let sides = vec![Side::Up; nodes.len()];
    CrosscutPoset::build(p, nodes.clone(), sides, |i, j| nodes[j].is_subset(nodes[i]))
}

/// The combined crosscut poset: down-side nodes first, then up-side nodes.
///
/// Fails with [`Error::NotDisjoint`] when the two halves share a node set,
/// which for connected posets happens exactly when `P` is bounded.
pub fn c_poset(p: &Poset) -> Result<CrosscutPoset> {
    let down = gamma_nodes(p, p.maximal_elements())?;
    let up = gamma_nodes(p, p.minimal_elements())?;
    if down.iter().any(|d| up.contains(d)) {
        return Err(Error::NotDisjoint);
    }
    let sides: Vec<Side> = std::iter::repeat_n(Side::Down, down.len())
        .chain(std::iter::repeat_n(Side::Up, up.len()))
        .collect();
    let nodes: Vec<ElementSet> = down.into_iter().chain(up).collect();
    let le = |i: usize, j: usize| match (sides[i], sides[j]) {
        (Side::Down, Side::Down) => nodes[i].is_subset(nodes[j]),
        (Side::Up, Side::Up) => nodes[j].is_subset(nodes[i]),
        (Side::Up, Side::Down) => nodes[i].intersects(nodes[j]),
        (Side::Down, Side::Up) => false,
    };
    // from_relation re-checks the axioms, transitivity included.
    CrosscutPoset::build(p, nodes.clone(), sides.clone(), le)
}

/// The least node of `Γ(P, X)` containing `b`: the component of
/// `st(I_X(b))` that contains `b`.
///
/// Returns `None` when no node of `Γ(P, X)` contains `b`.
pub fn min_containing(p: &Poset, x: ElementSet, b: ElementSet) -> Result<Option<ElementSet>> {
    if b.is_empty() {
        return Err(Error::EmptyInput);
    }
    p.check_subset(b)?;
    if !p.is_connected(b) {
        return Err(Error::NotConnected);
    }
    let index = index_set(p, x, b)?;
    if index.is_empty() {
        return Ok(None);
    }
    let s = st_unchecked(p, index);
    if !b.is_subset(s) {
        return Ok(None);
    }
    let first = b.first().expect("b is non-empty");
    Ok(Some(p.component_of(s, first)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::numeric_labels;

    fn sets(v: &[&[usize]]) -> Vec<ElementSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    fn ex_easy() -> Poset {
        Poset::from_covers(numeric_labels(5), &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4)]).unwrap()
    }

    fn ex_nonfunctorial() -> Poset {
        Poset::from_covers(numeric_labels(5), &[(0, 1), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn st_reading() {
        let p = ex_nonfunctorial();
        assert_eq!(
            st(&p, ElementSet::from([3, 4])).unwrap(),
            ElementSet::from([0, 1, 2])
        );
        assert_eq!(st(&p, ElementSet::from([3])).unwrap(), p.down_set(3).unwrap());
        let q = ex_easy();
        assert_eq!(
            st(&q, ElementSet::from([2, 3, 4])).unwrap(),
            ElementSet::from([0])
        );
        assert_eq!(st(&q, ElementSet::EMPTY), Err(Error::EmptyInput));
        // Non-maximal singleton: down-set and up-set together.
        assert_eq!(
            st(&q, ElementSet::from([0])).unwrap(),
            ElementSet::from([0, 2, 3, 4])
        );
    }

    #[test]
    fn index_sets() {
        let q = ex_easy();
        let mxl = q.maximal_elements();
        assert_eq!(index_set(&q, mxl, ElementSet::from([0])).unwrap(), mxl);
        assert!(index_set(&q, mxl, ElementSet::from([3])).unwrap().contains(3));
        let p = ex_nonfunctorial();
        assert_eq!(
            index_set(&p, ElementSet::from([3, 4]), ElementSet::from([2, 3])).unwrap(),
            ElementSet::from([3])
        );
        assert_eq!(index_set(&p, mxl, ElementSet::EMPTY), Err(Error::EmptyInput));
    }

    #[test]
    fn ex_easy_halves() {
        let p = ex_easy();
        let d = d_poset(&p).unwrap();
        assert_eq!(d.nodes(), sets(&[&[0], &[0, 1, 3], &[0, 1, 4], &[0, 2], &[1]]));
        let u = u_poset(&p).unwrap();
        assert_eq!(u.nodes(), sets(&[&[0, 2, 3, 4], &[1, 3, 4], &[3], &[4]]));
        // Reverse inclusion: the big up-sets sit below the singletons.
        let big = u.index_of(ElementSet::from([1, 3, 4]), Side::Up).unwrap();
        let small = u.index_of(ElementSet::from([3]), Side::Up).unwrap();
        assert!(u.order().lt(big, small));
    }

    #[test]
    fn singleton_and_chain() {
        let one = Poset::antichain(1);
        assert_eq!(gamma(&one, one.all()).unwrap().nodes(), &[one.all()]);
        let c = Poset::chain(4);
        assert_eq!(d_poset(&c).unwrap().nodes(), &[c.all()]);
        assert_eq!(u_poset(&c).unwrap().nodes(), &[c.all()]);
        assert_eq!(c_poset(&c).unwrap_err(), Error::NotDisjoint);
    }

    #[test]
    fn combined_order() {
        let c = c_poset(&ex_easy()).unwrap();
        assert_eq!(c.len(), 9);
        let u3 = c.index_of(ElementSet::from([3]), Side::Up).unwrap();
        let d013 = c.index_of(ElementSet::from([0, 1, 3]), Side::Down).unwrap();
        let u0234 = c.index_of(ElementSet::from([0, 2, 3, 4]), Side::Up).unwrap();
        let d02 = c.index_of(ElementSet::from([0, 2]), Side::Down).unwrap();
        assert!(c.order().le(u3, d013));
        assert!(c.order().le(u0234, d02));
        assert!(!c.order().le(d02, u0234));
    }

    #[test]
    fn min_containing_cases() {
        let q = ex_easy();
        let mxl = q.maximal_elements();
        assert_eq!(
            min_containing(&q, mxl, ElementSet::from([0])).unwrap(),
            Some(ElementSet::from([0]))
        );
        assert_eq!(
            min_containing(&q, mxl, ElementSet::from([0, 2])).unwrap(),
            Some(ElementSet::from([0, 2]))
        );
        assert_eq!(
            min_containing(&q, mxl, ElementSet::from([0, 1])),
            Err(Error::NotConnected)
        );
        let p = ex_nonfunctorial();
        assert_eq!(
            min_containing(&p, p.maximal_elements(), ElementSet::from([2, 3])).unwrap(),
            Some(ElementSet::from([0, 1, 2, 3]))
        );
        // 2 is incomparable with 1, so I_X({1,3}) is empty.
        assert_eq!(
            min_containing(&p, ElementSet::from([2]), ElementSet::from([1, 3])).unwrap(),
            None
        );
    }

    #[test]
    fn gamma_cap() {
        let p = Poset::antichain(21);
        assert!(matches!(gamma(&p, p.all()), Err(Error::CapExceeded { .. })));
    }
}
