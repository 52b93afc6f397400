//! Order-isomorphism by backtracking.

use crate::poset::Poset;
use crate::set::ElementSet;

/// Per-element invariants preserved by any isomorphism.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Signature {
    below: usize,
    above: usize,
    lower_covers: usize,
    upper_covers: usize,
    height: usize,
}

fn signatures(p: &Poset) -> Vec<Signature> {
    let heights = p.heights();
    p.elements()
        .map(|x| Signature {
            below: p.strict_down(x).len(),
            above: p.strict_up(x).len(),
            lower_covers: p.lower_covers(x).len(),
            upper_covers: p.upper_covers(x).len(),
            height: heights[x],
        })
        .collect()
}

/// Finds a bijection `phi` with `x <= y` in `p` iff `phi[x] <= phi[y]` in `q`.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }

    // Most constrained elements first: rarest signature, then most comparabilities.
    let mut order: Vec<usize> = p.elements().collect();
    order.sort_by_key(|&x| {
        let class = sp.iter().filter(|s| **s == sp[x]).count();
        (class, usize::MAX - p.comparable_with(x).len(), x)
    });

    let mut state = Search {
        p,
        q,
        sp: &sp,
        sq: &sq,
        order: &order,
        phi: vec![usize::MAX; p.len()],
        used: ElementSet::EMPTY,
    };
    state.extend(0).then_some(state.phi)
}

struct Search<'a> {
    p: &'a Poset,
    q: &'a Poset,
    sp: &'a [Signature],
    sq: &'a [Signature],
    order: &'a [usize],
    phi: Vec<usize>,
    used: ElementSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&x) = self.order.get(depth) else {
            return true;
        };
        for y in self.q.all().difference(self.used) {
            if self.sq[y] != self.sp[x] || !self.consistent(depth, x, y) {
                continue;
            }
            self.phi[x] = y;
            self.used.insert(y);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(y);
        }
        self.phi[x] = usize::MAX;
        false
    }

    fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
        self.order[..depth].iter().all(|&z| {
            let w = self.phi[z];
            self.p.le(x, z) == self.q.le(y, w) && self.p.le(z, x) == self.q.le(w, y)
        })
    }
}

/// Checks that `phi` is an order-isomorphism from `p` onto `q`.
pub fn is_isomorphism(p: &Poset, q: &Poset, phi: &[usize]) -> bool {
    if p.len() != q.len() || phi.len() != p.len() {
        return false;
    }
    let image: ElementSet = phi.iter().copied().filter(|&y| y < q.len()).collect();
    if image != q.all() {
        return false;
    }
    p.elements()
        .all(|x| p.elements().all(|z| p.le(x, z) == q.le(phi[x], phi[z])))
}
