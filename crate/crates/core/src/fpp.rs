//! Fixed point property verdicts, irreducible points and dismantling.

use std::fmt;

use crate::crosscut::d_poset;
use crate::error::{Error, Result};
use crate::gallery::{fixture, FixtureSpec};
use crate::iso::are_isomorphic;
use crate::morphism::{find_fixed_point_free, image_of, OrderMap};
use crate::poset::Poset;
use crate::search::{EndomapSearch, SearchConfig};
use crate::set::ElementSet;

/// Why a point could be removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// The strict down-set has a maximum (a unique lower cover).
    Down,
    /// The strict up-set has a minimum (a unique upper cover).
    Up,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Irreducibility::Down => "down-irreducible",
            Irreducibility::Up => "up-irreducible",
        })
    }
}

/// Whether `x` is irreducible in the subposet `within`.
fn irreducibility_in(p: &Poset, within: ElementSet, x: usize) -> Option<Irreducibility> {
    let below = p.strict_down(x).intersection(within);
    if !below.is_empty() && p.maximum_of(below).is_some() {
        return Some(Irreducibility::Down);
    }
    let above = p.strict_up(x).intersection(within);
    if !above.is_empty() && p.minimum_of(above).is_some() {
        return Some(Irreducibility::Up);
    }
    None
}

pub fn irreducibility(p: &Poset, x: usize) -> Option<Irreducibility> {
    irreducibility_in(p, p.all(), x)
}

pub fn irreducible_points(p: &Poset) -> ElementSet {
    p.elements().filter(|&x| irreducibility(p, x).is_some()).collect()
}

/// One removal: the element id in the original poset and why it was removable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DismantlingStep {
    pub removed: usize,
    pub reason: Irreducibility,
}

#[derive(Clone, Debug)]
pub struct DismantlingTrace {
    pub steps: Vec<DismantlingStep>,
    /// Original ids of the elements that remain.
    pub core_elements: ElementSet,
    pub core: Poset,
}

impl DismantlingTrace {
    pub fn is_dismantlable(&self) -> bool {
        self.core.len() == 1
    }

    /// Replays the steps on `p`, checking each removal, and returns the core.
    pub fn replay(&self, p: &Poset) -> Result<Poset> {
        let mut within = p.all();
        for step in &self.steps {
            if irreducibility_in(p, within, step.removed).is_none() {
                return Err(Error::PreconditionFailed("trace removes a non-irreducible point"));
            }
            within.remove(step.removed);
        }
        p.induced_subposet(within)
    }
}

/// Greedily removes the least irreducible point until none is left.
pub fn dismantle(p: &Poset) -> DismantlingTrace {
    let mut within = p.all();
    let mut steps = Vec::new();
    while within.len() > 1 {
        let next = within
            .iter()
            .find_map(|x| irreducibility_in(p, within, x).map(|r| (x, r)));
        let Some((removed, reason)) = next else { break };
        steps.push(DismantlingStep { removed, reason });
        within.remove(removed);
    }
    DismantlingTrace {
        steps,
        core_elements: within,
        core: p.induced_subposet(within).expect("subset of p"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FppMethod {
    Dismantling,
    Search,
    Pipeline,
}

impl fmt::Display for FppMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FppMethod::Dismantling => "dismantling",
            FppMethod::Search => "search",
            FppMethod::Pipeline => "pipeline",
        })
    }
}

#[derive(Clone, Debug)]
pub struct FppVerdict {
    pub has_fpp: bool,
    /// A fixed-point-free endomap whenever `has_fpp` is false.
    pub witness: Option<OrderMap>,
    pub method: FppMethod,
}

impl FppVerdict {
    fn holds(method: FppMethod) -> FppVerdict {
        FppVerdict {
            has_fpp: true,
            witness: None,
            method,
        }
    }
}

pub fn has_fpp(p: &Poset) -> Result<FppVerdict> {
    has_fpp_with(p, &SearchConfig::default())
}

/// Dismantling first; exact search when the core has more than one point.
pub fn has_fpp_with(p: &Poset, cfg: &SearchConfig) -> Result<FppVerdict> {
    if dismantle(p).is_dismantlable() {
        return Ok(FppVerdict::holds(FppMethod::Dismantling));
    }
    let witness = find_fixed_point_free(p, cfg)?;
    if let Some(w) = &witness {
        debug_assert!(w.fixed_points().is_ok_and(|s| s.is_empty()));
    }
    Ok(FppVerdict {
        has_fpp: witness.is_none(),
        witness,
        method: FppMethod::Search,
    })
}

/// `Some(n)` when `p` is a `2n`-crown.
///
/// A crown is exactly a connected height-one poset in which every element
/// is comparable with exactly two others (its comparability graph is then a
/// single even cycle).
pub fn is_crown(p: &Poset) -> Option<usize> {
    let n = p.len();
    if n < 4 || n % 2 == 1 || !p.is_connected(p.all()) {
        return None;
    }
    let minimal = p.minimal_elements();
    let maximal = p.maximal_elements();
    if minimal.intersects(maximal) || minimal.union(maximal) != p.all() || minimal.len() != n / 2 {
        return None;
    }
    p.elements()
        .all(|x| p.comparable_with(x).len() == 3)
        .then_some(n / 2)
}

/// Whether every non-bijective order-preserving self-map of the crown `p`
/// has a fixed point.
pub fn crown_nonbijective_fixed_point(p: &Poset, cfg: &SearchConfig) -> Result<bool> {
    if is_crown(p).is_none() {
        return Err(Error::NotACrown);
    }
    cfg.check("crown endomap check", p.len())?;
    let all = p.all();
    Ok(EndomapSearch::new(p)
        .fixed_point_free()
        .find_counterexample(|f| image_of(f, all) == all)
        .is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HoftCheck {
    /// Every non-empty set of minimal elements has a join.
    pub applicable: bool,
    /// When applicable: every endomap has some `x` with `f(x) >= x`.
    pub holds: Option<bool>,
}

/// Largest number of minimal elements whose subsets are enumerated.
pub const HOFT_MINIMAL_CAP: usize = 15;

pub fn hoft_check(p: &Poset, cfg: &SearchConfig) -> Result<HoftCheck> {
    cfg.check("Hoft check", p.len())?;
    let mnl = p.minimal_elements().to_vec();
    if mnl.len() > HOFT_MINIMAL_CAP {
        return Err(Error::CapExceeded {
            what: "minimal elements for join enumeration",
            got: mnl.len(),
            cap: HOFT_MINIMAL_CAP,
        });
    }
    let applicable = (1usize..1 << mnl.len()).all(|mask| {
        let subset: ElementSet = (0..mnl.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| mnl[i])
            .collect();
        matches!(p.has_join(subset), Ok(Some(_)))
    });
    if !applicable {
        return Ok(HoftCheck {
            applicable,
            holds: None,
        });
    }
    // A counterexample is a map with f(x) not above x for every x.
    let mut search = EndomapSearch::new(p);
    for x in p.elements() {
        search = search.restrict(x, p.all().difference(p.up(x)));
    }
    Ok(HoftCheck {
        applicable,
        holds: Some(search.first().is_none()),
    })
}

const MIDDLE_LEVEL: ElementSet = ElementSet::from_bits(0b111_000);

/// Whether every fixed-point-free endomap of `P1` or `P2` maps `{3,4,5}`
/// onto itself.
pub fn lemma_middle_level(p: &Poset) -> Result<bool> {
    let is_fixture = [FixtureSpec::P1, FixtureSpec::P2]
        .into_iter()
        .any(|s| fixture(s).is_ok_and(|q| q == *p));
    if !is_fixture {
        return Err(Error::WrongFixture);
    }
    Ok(level_preserved_by_fixed_point_free(p, MIDDLE_LEVEL))
}

/// Whether `f(level) = level` for every fixed-point-free endomap (vacuously
/// true when there is none).
pub fn level_preserved_by_fixed_point_free(p: &Poset, level: ElementSet) -> bool {
    EndomapSearch::new(p)
        .fixed_point_free()
        .find_counterexample(|f| image_of(f, level) == level)
        .is_none()
}

/// Verdict through the down-side crosscut poset: if it and every one of its
/// nodes has the fixed point property, so does `p`. Falls back to
/// [`has_fpp_with`] otherwise.
pub fn pipeline_fpp(p: &Poset, cfg: &SearchConfig) -> Result<FppVerdict> {
    if let Some(verdict) = pipeline_only(p, cfg)? {
        return Ok(verdict);
    }
    has_fpp_with(p, cfg)
}

/// The crosscut route alone; `None` when it is inconclusive.
pub fn pipeline_only(p: &Poset, cfg: &SearchConfig) -> Result<Option<FppVerdict>> {
    if p.is_empty() {
        return Ok(None);
    }
    let d = d_poset(p)?;
    if !has_fpp_with(d.order(), cfg)?.has_fpp {
        return Ok(None);
    }
    for &node in d.nodes() {
        if !has_fpp_with(&p.induced_subposet(node)?, cfg)?.has_fpp {
            return Ok(None);
        }
    }
    Ok(Some(FppVerdict::holds(FppMethod::Pipeline)))
}

/// Whether `p` is isomorphic to the `2n`-crown fixture (a cross-check on
/// [`is_crown`]).
pub fn is_crown_by_isomorphism(p: &Poset) -> Option<usize> {
    let n = p.len() / 2;
    if n < 2 || p.len() % 2 == 1 {
        return None;
    }
    are_isomorphic(p, &crate::gallery::crown(n)).map(|_| n)
}
