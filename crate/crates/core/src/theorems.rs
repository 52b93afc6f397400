//! Randomized property suites over small posets.
//!
//! Each suite checks one structural fact about crosscut posets, induced maps
//! or the fixed point property on a stream of seeded random posets. Exact
//! fixed-point-property answers here always come from the endomap search,
//! never from dismantling, so that the dismantling suites have something
//! independent to compare against.

use std::fmt;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crosscut::{c_poset, d_poset, gamma_nodes, index_set, min_containing, st, u_poset, Side};
use crate::error::{Error, Result};
use crate::fpp::{dismantle, hoft_check, irreducible_points, pipeline_fpp};
use crate::iso::{are_isomorphic, is_isomorphism};
use crate::morphism::{abian_brown, image_of, Inducer, OrderMap};
use crate::poset::Poset;
use crate::random::random_poset_with;
use crate::search::{EndomapSearch, SearchConfig};
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seeds: u64,
    pub max_size: usize,
    pub base_seed: u64,
    /// Posets with at most this many endomaps are checked on all of them;
    /// larger ones on `endomap_samples` random endomaps.
    pub endomap_budget: usize,
    pub endomap_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seeds: 200,
            max_size: 9,
            base_seed: 0,
            endomap_budget: 2000,
            endomap_samples: 150,
        }
    }
}

/// Outcome of one suite across all seeds.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub id: char,
    pub name: &'static str,
    /// Individual facts checked.
    pub checks: u64,
    /// Seeds on which the suite's hypothesis held at least once.
    pub applicable: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) {:<34} {:>9} checks {:>5} seeds  {}",
            self.id,
            self.name,
            self.checks,
            self.applicable,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Counts checks and collects failures for a single seed.
struct Tally {
    checks: u64,
    applicable: bool,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        self.applicable = true;
        if !ok && self.failures.len() < 5 {
            self.failures.push(msg());
        }
    }
}

/// Everything a suite needs about one random poset.
struct Instance {
    seed: u64,
    poset: Poset,
    endomaps: Vec<Vec<usize>>,
    generators: Vec<ElementSet>,
    cfg: SearchConfig,
}

impl Instance {
    fn has_fpp(&self, p: &Poset) -> Result<bool> {
        self.cfg.check("property suite", p.len())?;
        Ok(EndomapSearch::new(p).fixed_point_free().first().is_none())
    }
}

type SuiteFn = fn(&Instance, &mut Tally) -> Result<()>;

const SUITES: &[(char, &str, SuiteFn)] = &[
    ('a', "gamma nodes are components", gamma_components),
    ('b', "min_containing is the minimum", min_containing_minimum),
    ('c', "duality D(P^op) = U(P)^op", duality),
    ('d', "induced maps monotone, dominating", induced_maps),
    ('e', "fixed point of f => of D(f)", converse_fixed_point),
    ('f', "fixed node with FPP => fixed point", fixed_node_fixed_point),
    ('g', "dismantlable => FPP", dismantlable_fpp),
    ('h', "irreducible removal keeps FPP", irreducible_removal),
    ('i', "Hoft-Hoft conclusion", hoft_conclusion),
    ('j', "combined order is a partial order", combined_order),
    ('k', "disjointness of D and U", disjointness),
    ('l', "Abian-Brown iteration", abian_brown_iteration),
    ('m', "pipeline agrees with search", pipeline_agreement),
    ('n', "poset core invariants", core_invariants),
];

pub fn suite_names() -> Vec<(char, &'static str)> {
    SUITES.iter().map(|&(id, name, _)| (id, name)).collect()
}

/// Runs every suite on `cfg.seeds` random posets.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    let mut reports: Vec<SuiteReport> = SUITES
        .iter()
        .map(|&(id, name, _)| SuiteReport {
            id,
            name,
            checks: 0,
            applicable: 0,
            failures: Vec::new(),
        })
        .collect();
    if cfg.max_size == 0 {
        return Err(Error::BadParams("max size must be positive".into()));
    }
    let search = SearchConfig::with_cap(cfg.max_size.max(crate::search::DEFAULT_SEARCH_CAP));
    for offset in 0..cfg.seeds {
        let seed = cfg.base_seed.wrapping_add(offset);
        let instance = instance(seed, cfg, search)?;
        for (report, &(_, _, suite)) in reports.iter_mut().zip(SUITES) {
            let mut tally = Tally {
                checks: 0,
                applicable: false,
                failures: Vec::new(),
            };
            if let Err(e) = suite(&instance, &mut tally) {
                tally.failures.push(format!("error: {e}"));
            }
            report.checks += tally.checks;
            report.applicable += tally.applicable as u64;
            report
                .failures
                .extend(tally.failures.into_iter().map(|m| format!("seed {seed}: {m}")));
        }
    }
    Ok(reports)
}

fn instance(seed: u64, cfg: &SuiteConfig, search: SearchConfig) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=cfg.max_size);
    let density = rng.random_range(0.1..0.75);
    let poset = random_poset_with(n, density, &mut rng)?;

    let mut endomaps = Vec::new();
    let search_all = EndomapSearch::new(&poset);
    let overflow = search_all.for_each(|v| {
        if endomaps.len() == cfg.endomap_budget {
            ControlFlow::Break(())
        } else {
            endomaps.push(v.to_vec());
            ControlFlow::Continue(())
        }
    });
    if overflow.is_some() {
        endomaps = (0..cfg.endomap_samples)
            .filter_map(|_| search_all.sample(&mut rng))
            .collect();
    }

    let mut generators = vec![poset.maximal_elements(), poset.minimal_elements()];
    let random_subset: ElementSet = poset.elements().filter(|_| rng.random_bool(0.4)).collect();
    if !random_subset.is_empty() {
        generators.push(random_subset);
    }
    Ok(Instance {
        seed,
        poset,
        endomaps,
        generators,
        cfg: search,
    })
}

fn names(p: &Poset, s: ElementSet) -> String {
    crate::crosscut::subset_label(p, s)
}

fn gamma_components(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    for &x in &inst.generators {
        for b in gamma_nodes(p, x)? {
            let index = index_set(p, x, b)?;
            let ok = !b.is_empty()
                && p.is_connected(b)
                && !index.is_empty()
                && p.connected_components(st(p, index)?).contains(&b);
            t.check(ok, || format!("node {} of Γ(P,{})", names(p, b), names(p, x)));
        }
    }
    let d = d_poset(p)?;
    for &c in d.nodes() {
        t.check(p.is_down_set(c), || {
            format!("D node {} not a down-set", names(p, c))
        });
    }
    let u = u_poset(p)?;
    for &c in u.nodes() {
        t.check(p.is_up_set(c), || format!("U node {} not an up-set", names(p, c)));
    }
    Ok(())
}

fn min_containing_minimum(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    // Connected probes: every principal down-set, up-set, comparable pair and component.
    let mut probes: Vec<ElementSet> = Vec::new();
    for x in p.elements() {
        probes.push(ElementSet::singleton(x));
        probes.push(p.down_set(x)?);
        probes.push(p.up_set(x)?);
        for y in p.strict_up(x) {
            probes.push(ElementSet::from([x, y]));
        }
    }
    for &x in &inst.generators {
        let nodes = gamma_nodes(p, x)?;
        probes.extend(nodes.iter().copied());
        for &b in &probes {
            let containing: Vec<ElementSet> = nodes.iter().copied().filter(|c| b.is_subset(*c)).collect();
            let brute = containing
                .iter()
                .copied()
                .find(|m| containing.iter().all(|c| m.is_subset(*c)));
            let fast = min_containing(p, x, b)?;
            t.check(
                fast == brute && (containing.is_empty() || brute.is_some()),
                || {
                    format!(
                        "b={} X={}: got {:?}, brute force {:?}",
                        names(p, b),
                        names(p, x),
                        fast.map(|s| names(p, s)),
                        brute.map(|s| names(p, s))
                    )
                },
            );
        }
    }
    Ok(())
}

fn duality(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    let op = p.opposite();
    let d_op = d_poset(&op)?;
    let u = u_poset(p)?;
    t.check(
        d_op.nodes() == u.nodes() && *d_op.order() == u.order().opposite(),
        || "D(P^op) differs from U(P)^op".into(),
    );
    match (c_poset(p), c_poset(&op)) {
        (Ok(c), Ok(c_op)) => {
            let mut ok = c.len() == c_op.len();
            let lookup: Vec<Option<usize>> = (0..c.len())
                .map(|i| c_op.index_of(c.node(i), c.side(i).flip()))
                .collect();
            ok &= lookup.iter().all(Option::is_some);
            if ok {
                for i in 0..c.len() {
                    for j in 0..c.len() {
                        let (i2, j2) = (lookup[i].unwrap(), lookup[j].unwrap());
                        ok &= c.order().le(i, j) == c_op.order().le(j2, i2);
                    }
                }
            }
            t.check(ok, || "C(P^op) differs from C(P)^op".into());
        }
        (Err(Error::NotDisjoint), Err(Error::NotDisjoint)) => {}
        (a, b) => t.check(false, || {
            format!("C defined on one side only: {:?} vs {:?}", a.err(), b.err())
        }),
    }
    Ok(())
}

fn inducers(p: &Poset) -> Result<(Inducer, Inducer, Option<Inducer>)> {
    let c = match Inducer::combined(p, p) {
        Ok(c) => Some(c),
        Err(Error::NotDisjoint) => None,
        Err(e) => return Err(e),
    };
    Ok((Inducer::down(p, p)?, Inducer::up(p, p)?, c))
}

fn induced_maps(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    let op = p.opposite();
    let (down, up, combined) = inducers(p)?;
    let down_op = Inducer::down(&op, &op)?;
    for f in &inst.endomaps {
        for inducer in [Some(&down), Some(&up), combined.as_ref()].into_iter().flatten() {
            let values = inducer.apply(f)?;
            let cp = inducer.source();
            let monotone = OrderMap::new(cp.order().clone(), cp.order().clone(), values.clone()).is_ok();
            let dominates = (0..cp.len()).all(|i| image_of(f, cp.node(i)).is_subset(cp.node(values[i])));
            t.check(monotone && dominates, || {
                format!("f={f:?}: induced map monotone={monotone} dominating={dominates}")
            });
        }
        // The up-side map is the down-side map of the same function on P^op.
        let via_op = down_op.apply(f)?;
        t.check(via_op == up.apply(f)?, || {
            format!("f={f:?}: U(f) differs from D(f^op)")
        });
    }
    Ok(())
}

fn converse_fixed_point(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    let down = Inducer::down(p, p)?;
    for f in &inst.endomaps {
        if p.elements().any(|x| f[x] == x) {
            let df = down.apply(f)?;
            t.check((0..df.len()).any(|i| df[i] == i), || {
                format!("f={f:?} has a fixed point but D(f)={df:?} does not")
            });
        }
    }
    Ok(())
}

fn fixed_node_fixed_point(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    let (down, _, combined) = inducers(p)?;
    for inducer in [Some(&down), combined.as_ref()].into_iter().flatten() {
        let cp = inducer.source();
        let node_fpp = (0..cp.len())
            .map(|i| inst.has_fpp(&p.induced_subposet(cp.node(i))?))
            .collect::<Result<Vec<bool>>>()?;
        for f in &inst.endomaps {
            let induced = inducer.apply(f)?;
            for i in 0..cp.len() {
                if induced[i] == i && node_fpp[i] {
                    let c = cp.node(i);
                    t.check(c.iter().any(|x| f[x] == x), || {
                        format!(
                            "f={f:?} fixes node {} ({}) with FPP but has no fixed point in it",
                            names(p, c),
                            cp.side(i)
                        )
                    });
                }
            }
        }
    }
    Ok(())
}

fn dismantlable_fpp(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    if dismantle(p).is_dismantlable() {
        t.check(inst.has_fpp(p)?, || "dismantlable poset without FPP".into());
    }
    Ok(())
}

fn irreducible_removal(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    let irreducible = irreducible_points(p);
    if irreducible.is_empty() {
        return Ok(());
    }
    let whole = inst.has_fpp(p)?;
    for x in irreducible {
        let rest = inst.has_fpp(&p.induced_subposet(p.all().without(x))?)?;
        t.check(whole == rest, || {
            format!("FPP {whole} but {rest} after removing {}", p.label(x))
        });
    }
    Ok(())
}

fn hoft_conclusion(inst: &Instance, t: &mut Tally) -> Result<()> {
    let check = hoft_check(&inst.poset, &inst.cfg)?;
    if check.applicable {
        t.check(check.holds == Some(true), || {
            "Hoft-Hoft hypothesis holds, conclusion fails".into()
        });
    }
    Ok(())
}

fn combined_order(inst: &Instance, t: &mut Tally) -> Result<()> {
    let c = match c_poset(&inst.poset) {
        Ok(c) => c,
        Err(Error::NotDisjoint) => return Ok(()),
        Err(e) => return Err(e),
    };
    let o = c.order();
    let n = c.len();
    let mut ok = true;
    for i in 0..n {
        ok &= o.le(i, i);
        for j in 0..n {
            ok &= i == j || !(o.le(i, j) && o.le(j, i));
            for k in 0..n {
                ok &= !(o.le(i, j) && o.le(j, k)) || o.le(i, k);
            }
            // Cross relations run only from up-side to down-side nodes.
            if c.side(i) == Side::Down && c.side(j) == Side::Up {
                ok &= !o.le(i, j);
            }
        }
    }
    t.check(ok, || "combined order violates a partial order axiom".into());
    Ok(())
}

fn disjointness(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    if !p.is_connected(p.all()) {
        return Ok(());
    }
    let d = d_poset(p)?;
    let u = u_poset(p)?;
    let meet = d.nodes().iter().any(|x| u.nodes().contains(x));
    let bounded = p.maximum_of(p.all()).is_some() && p.minimum_of(p.all()).is_some();
    let trivial = d.nodes() == [p.all()] && u.nodes() == [p.all()];
    t.check(meet == bounded && bounded == trivial, || {
        format!("meet={meet} bounded={bounded} trivial={trivial}")
    });
    Ok(())
}

fn abian_brown_iteration(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    for f in &inst.endomaps {
        let map = OrderMap::new(p.clone(), p.clone(), f.clone())?;
        for x0 in p.elements().filter(|&x| p.le(x, f[x])) {
            let fixed = abian_brown(&map, x0)?;
            t.check(f[fixed] == fixed && p.le(x0, fixed), || {
                format!("f={f:?} x0={x0}: iteration ended at {fixed}")
            });
        }
    }
    Ok(())
}

fn pipeline_agreement(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    let pipeline = pipeline_fpp(p, &inst.cfg)?;
    let exact = inst.has_fpp(p)?;
    t.check(pipeline.has_fpp == exact, || {
        format!(
            "pipeline says {} ({}), search says {exact}",
            pipeline.has_fpp, pipeline.method
        )
    });
    Ok(())
}

fn core_invariants(inst: &Instance, t: &mut Tally) -> Result<()> {
    let p = &inst.poset;
    t.check(p.validate().is_ok(), || "relation is not a partial order".into());
    t.check(p.opposite().opposite() == *p, || {
        "opposite is not an involution".into()
    });
    t.check(p.opposite().maximal_elements() == p.minimal_elements(), || {
        "mxl(P^op) != mnl(P)".into()
    });
    t.check(
        p.is_cutset(p.maximal_elements())? && p.is_cutset(p.minimal_elements())?,
        || "extremal elements do not form cutsets".into(),
    );
    for x in p.elements() {
        t.check(p.is_down_set(p.down_set(x)?) && p.is_up_set(p.up_set(x)?), || {
            format!("principal sets of {x} not closed")
        });
    }
    let comps = p.connected_components(p.all());
    let union = comps.iter().fold(ElementSet::EMPTY, |a, &c| a.union(c));
    let disjoint = comps.iter().map(|c| c.len()).sum::<usize>() == p.len();
    let separated = comps.iter().enumerate().all(|(i, &a)| {
        comps[i + 1..]
            .iter()
            .all(|&b| a.iter().all(|x| !p.comparable_with(x).intersects(b)))
    });
    t.check(
        union == p.all() && disjoint && separated && comps.iter().all(|&c| p.is_connected(c)),
        || "components are not a partition into connected parts".into(),
    );
    // Isomorphism against a shuffled copy, both directions.
    let mut rng = ChaCha8Rng::seed_from_u64(inst.seed ^ 0x5eed);
    let mut perm: Vec<usize> = p.elements().collect();
    perm.shuffle(&mut rng);
    let q = Poset::from_relation(crate::poset::numeric_labels(p.len()), |i, j| {
        p.le(perm[i], perm[j])
    })?;
    let forward = are_isomorphic(p, &q);
    let backward = are_isomorphic(&q, p);
    t.check(
        forward.as_deref().is_some_and(|phi| is_isomorphism(p, &q, phi))
            && backward.as_deref().is_some_and(|phi| is_isomorphism(&q, p, phi)),
        || "shuffled copy not recognised as isomorphic".into(),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_run_passes() {
        let cfg = SuiteConfig {
            seeds: 25,
            max_size: 7,
            ..SuiteConfig::default()
        };
        let reports = run_all(&cfg).unwrap();
        assert_eq!(reports.len(), SUITES.len());
        for r in &reports {
            assert!(r.passed(), "{r}: {:?}", r.failures);
        }
    }
}
