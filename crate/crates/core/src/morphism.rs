//! Order-preserving maps and the maps they induce on crosscut posets.

use crate::crosscut::{c_poset, d_poset, min_containing, u_poset, CrosscutPoset, Side};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::search::{EndomapSearch, SearchConfig};
use crate::set::ElementSet;

/// A total order-preserving function between two posets, stored pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderMap {
    source: Poset,
    target: Poset,
    values: Vec<usize>,
}

impl OrderMap {
    /// Checks totality, range and monotonicity. On failure the error names a
    /// pair `x <= y` whose images are out of order.
    pub fn new(source: Poset, target: Poset, values: Vec<usize>) -> Result<OrderMap> {
        if values.len() != source.len() {
            return Err(Error::Arity {
                got: values.len(),
                expected: source.len(),
            });
        }
        for &v in &values {
            target.check_element(v)?;
        }
        for x in source.elements() {
            for y in source.strict_up(x) {
                if !target.le(values[x], values[y]) {
                    return Err(Error::NotMonotone {
                        x,
                        y,
                        fx: values[x],
                        fy: values[y],
                    });
                }
            }
        }
        Ok(OrderMap {
            source,
            target,
            values,
        })
    }

    pub fn identity(p: &Poset) -> OrderMap {
        OrderMap {
            source: p.clone(),
            target: p.clone(),
            values: p.elements().collect(),
        }
    }

    pub fn constant(source: &Poset, target: &Poset, c: usize) -> Result<OrderMap> {
        OrderMap::new(source.clone(), target.clone(), vec![c; source.len()])
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn image(&self, s: ElementSet) -> ElementSet {
        image_of(&self.values, s)
    }

    pub fn is_endomap(&self) -> bool {
        self.source == self.target
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.image(self.source.all()) == self.target.all()
    }

    pub fn fixed_points(&self) -> Result<ElementSet> {
        if !self.is_endomap() {
            return Err(Error::NotEndomap);
        }
        Ok(self.source.elements().filter(|&x| self.values[x] == x).collect())
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn after(&self, inner: &OrderMap) -> Result<OrderMap> {
        if inner.target != self.source {
            return Err(Error::Mismatch);
        }
        Ok(OrderMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            values: inner.values.iter().map(|&y| self.values[y]).collect(),
        })
    }
}

pub(crate) fn image_of(values: &[usize], s: ElementSet) -> ElementSet {
    s.iter().map(|x| values[x]).collect()
}

pub fn make_map(source: &Poset, target: &Poset, values: Vec<usize>) -> Result<OrderMap> {
    OrderMap::new(source.clone(), target.clone(), values)
}

/// `f ∘ g`.
pub fn compose(f: &OrderMap, g: &OrderMap) -> Result<OrderMap> {
    f.after(g)
}

pub fn fixed_points(f: &OrderMap) -> Result<ElementSet> {
    f.fixed_points()
}

/// The lexicographically least fixed-point-free endomap of `p`, if any.
pub fn find_fixed_point_free(p: &Poset, cfg: &SearchConfig) -> Result<Option<OrderMap>> {
    cfg.check("fixed-point-free search", p.len())?;
    Ok(EndomapSearch::new(p)
        .fixed_point_free()
        .first()
        .map(|values| OrderMap {
            source: p.clone(),
            target: p.clone(),
            values,
        }))
}

/// Number of order-preserving self-maps of `p`.
pub fn count_endomaps(p: &Poset, cfg: &SearchConfig) -> Result<u64> {
    cfg.check("endomap count", p.len())?;
    Ok(EndomapSearch::new(p).count())
}

/// Follows `x0, f(x0), f(f(x0)), ..` up to a fixed point above `x0`.
pub fn abian_brown(f: &OrderMap, x0: usize) -> Result<usize> {
    if !f.is_endomap() {
        return Err(Error::NotEndomap);
    }
    f.source.check_element(x0)?;
    if !f.source.le(x0, f.apply(x0)) {
        return Err(Error::PreconditionFailed("x0 is not below its image"));
    }
    let mut x = x0;
    loop {
        let next = f.apply(x);
        if next == x {
            return Ok(x);
        }
        x = next;
    }
}

/// Induces node maps between two fixed crosscut posets.
///
/// A down-side node `C` goes to the least down-side node of the target that
/// contains `f(C)`; an up-side node goes to the least (by inclusion) up-side
/// node containing `f(C)`, which is the greatest in the reversed order.
#[derive(Clone, Debug)]
pub struct Inducer {
    source: CrosscutPoset,
    target: CrosscutPoset,
}

impl Inducer {
    pub fn down(source: &Poset, target: &Poset) -> Result<Inducer> {
        Ok(Inducer {
            source: d_poset(source)?,
            target: d_poset(target)?,
        })
    }

    pub fn up(source: &Poset, target: &Poset) -> Result<Inducer> {
        Ok(Inducer {
            source: u_poset(source)?,
            target: u_poset(target)?,
        })
    }

    pub fn combined(source: &Poset, target: &Poset) -> Result<Inducer> {
        Ok(Inducer {
            source: c_poset(source)?,
            target: c_poset(target)?,
        })
    }

    pub fn source(&self) -> &CrosscutPoset {
        &self.source
    }

    pub fn target(&self) -> &CrosscutPoset {
        &self.target
    }

    /// Image of source node `i` under the map with pointwise `values`.
    pub fn node_image(&self, values: &[usize], i: usize) -> Result<usize> {
        let side = self.source.side(i);
        let q = self.target.base();
        let generators = match side {
            Side::Down => q.maximal_elements(),
            Side::Up => q.minimal_elements(),
        };
        let image = image_of(values, self.source.node(i));
        min_containing(q, generators, image)?
            .and_then(|node| self.target.index_of(node, side))
            .ok_or(Error::PreconditionFailed(
                "image is not contained in any node of the target crosscut poset",
            ))
    }

    /// Node images for every source node.
    pub fn apply(&self, values: &[usize]) -> Result<Vec<usize>> {
        (0..self.source.len())
            .map(|i| self.node_image(values, i))
            .collect()
    }

    /// The induced map, checked to be order-preserving.
    pub fn induce(self, f: &OrderMap) -> Result<InducedMap> {
        if f.source != *self.source.base() || f.target != *self.target.base() {
            return Err(Error::Mismatch);
        }
        let values = self.apply(&f.values)?;
        let map = OrderMap::new(self.source.order().clone(), self.target.order().clone(), values)?;
        Ok(InducedMap {
            map,
            source: self.source,
            target: self.target,
        })
    }
}

/// An induced map together with the crosscut posets it runs between.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub map: OrderMap,
    pub source: CrosscutPoset,
    pub target: CrosscutPoset,
}

impl InducedMap {
    /// Node set that source node set `c` is sent to, if `c` is a source node.
    pub fn apply_node(&self, c: ElementSet, side: Side) -> Option<ElementSet> {
        let i = self.source.index_of(c, side)?;
        Some(self.target.node(self.map.apply(i)))
    }

    /// Source nodes fixed by an induced endomap, as node sets.
    pub fn fixed_nodes(&self) -> Result<Vec<(ElementSet, Side)>> {
        Ok(self
            .map
            .fixed_points()?
            .iter()
            .map(|i| (self.source.node(i), self.source.side(i)))
            .collect())
    }
}

/// The down-side induced map.
pub fn induced_d(f: &OrderMap) -> Result<InducedMap> {
    Inducer::down(&f.source, &f.target)?.induce(f)
}

/// The up-side induced map.
pub fn induced_u(f: &OrderMap) -> Result<InducedMap> {
    Inducer::up(&f.source, &f.target)?.induce(f)
}

/// The combined induced map; needs both crosscut posets to be defined.
pub fn induced_c(f: &OrderMap) -> Result<InducedMap> {
    Inducer::combined(&f.source, &f.target)?.induce(f)
}
