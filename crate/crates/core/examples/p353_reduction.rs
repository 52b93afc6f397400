// Reduce the combined crosscut poset of P353_1 by irreducible points until
// it becomes P3323, then use the crosscut route to settle its fixed point
// property.

use crosscut::crosscut::{c_poset, Side};
use crosscut::fpp::{irreducibility, pipeline_fpp};
use crosscut::gallery::{fixture, FixtureSpec};
use crosscut::iso::are_isomorphic;
use crosscut::{Poset, Result, SearchConfig};

/// Removes `points` one at a time, checking each is irreducible at the time.
fn remove_irreducible(p: &Poset, points: &[usize]) -> Result<Poset> {
    let mut current = p.clone();
    let mut ids: Vec<usize> = p.elements().collect();
    for &x in points {
        let local = ids
            .iter()
            .position(|&id| id == x)
            .expect("each point removed once");
        assert!(
            irreducibility(&current, local).is_some(),
            "{} is not irreducible",
            p.label(x)
        );
        current = current.induced_subposet(current.all().without(local))?;
        ids.remove(local);
    }
    Ok(current)
}

pub fn run_example() -> Result<()> {
    let p = fixture(FixtureSpec::P353_1)?;
    let c = c_poset(&p)?;
    let order = c.order();
    println!("C(P353_1) has {} nodes", c.len());

    // Minimal down-side nodes and maximal up-side nodes.
    let extremes: Vec<usize> = (0..c.len())
        .filter(|&i| match c.side(i) {
            Side::Down => (0..c.len()).all(|j| c.side(j) == Side::Up || !order.lt(j, i)),
            Side::Up => (0..c.len()).all(|j| c.side(j) == Side::Down || !order.lt(i, j)),
        })
        .collect();
    let twelve = remove_irreducible(order, &extremes)?;
    let q1 = fixture(FixtureSpec::Q1)?;
    let phi = are_isomorphic(&q1, &twelve).expect("12-node reduction is Q1");
    println!(
        "after removing {} extreme nodes: isomorphic to Q1",
        extremes.len()
    );

    let a = q1.find("a").expect("Q1 has a point a");
    let eleven = twelve.induced_subposet(twelve.all().without(phi[a]))?;
    assert!(are_isomorphic(&fixture(FixtureSpec::Q2)?, &eleven).is_some());
    assert!(are_isomorphic(&fixture(FixtureSpec::P3323)?, &eleven).is_some());
    println!("removing a leaves a copy of P3323");

    let verdict = pipeline_fpp(&p, &SearchConfig::default())?;
    println!("P353_1 has FPP: {} (method={})", verdict.has_fpp, verdict.method);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
