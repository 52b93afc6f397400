//! Naive reference implementations used to cross-check the library.
//!
//! Everything here works on plain boolean matrices and sorted vectors and
//! only reads the order relation of a library poset.

#![allow(dead_code)]

use std::collections::BTreeSet;

use crosscut::Poset;

pub type Set = Vec<usize>;

pub struct Naive {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
}

impl Naive {
    pub fn of(p: &Poset) -> Naive {
        let n = p.len();
        let le = (0..n).map(|i| (0..n).map(|j| p.le(i, j)).collect()).collect();
        Naive { n, le }
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le[x][y] || self.le[y][x]
    }

    pub fn maximal(&self) -> Set {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| y == x || !self.le[x][y]))
            .collect()
    }

    pub fn minimal(&self) -> Set {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| y == x || !self.le[y][x]))
            .collect()
    }

    pub fn st(&self, a: &[usize]) -> Set {
        (0..self.n)
            .filter(|&x| a.iter().all(|&y| self.comparable(x, y)))
            .collect()
    }

    /// Connected components of the comparability graph restricted to `s`.
    pub fn components(&self, s: &[usize]) -> Vec<Set> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for &start in s {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                for &y in s {
                    if !seen[y] && self.comparable(x, y) {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
                i += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, s: &[usize]) -> bool {
        !s.is_empty() && self.components(s).len() == 1
    }

    /// Components of `st(A)` over all non-empty `A ⊆ x` with `st(A)` non-empty.
    pub fn gamma(&self, x: &[usize]) -> BTreeSet<Set> {
        let mut nodes = BTreeSet::new();
        for mask in 1usize..1 << x.len() {
            let a: Set = (0..x.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| x[i])
                .collect();
            let s = self.st(&a);
            if !s.is_empty() {
                nodes.extend(self.components(&s));
            }
        }
        nodes
    }

    /// The node of `gamma(x)` contained in every node containing `b`.
    pub fn min_containing(&self, x: &[usize], b: &[usize]) -> Option<Set> {
        let containing: Vec<Set> = self
            .gamma(x)
            .into_iter()
            .filter(|c| b.iter().all(|e| c.contains(e)))
            .collect();
        containing
            .iter()
            .find(|m| containing.iter().all(|c| m.iter().all(|e| c.contains(e))))
            .cloned()
    }

    pub fn is_monotone(&self, f: &[usize]) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| !self.le[x][y] || self.le[f[x]][f[y]]))
    }

    /// Every order-preserving self-map, by plain odometer enumeration.
    pub fn endomaps(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.n == 0 {
            return out;
        }
        let mut f = vec![0; self.n];
        loop {
            if self.is_monotone(&f) {
                out.push(f.clone());
            }
            let mut i = self.n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                f[i] += 1;
                if f[i] < self.n {
                    break;
                }
                f[i] = 0;
            }
        }
    }

    pub fn has_fpp(&self) -> bool {
        self.endomaps().iter().all(|f| (0..self.n).any(|x| f[x] == x))
    }
}

pub fn image(f: &[usize], s: &[usize]) -> Set {
    let set: BTreeSet<usize> = s.iter().map(|&x| f[x]).collect();
    set.into_iter().collect()
}

pub fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn intersects(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|x| b.contains(x))
}
