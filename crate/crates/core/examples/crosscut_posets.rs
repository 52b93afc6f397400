// The down-side, up-side and combined crosscut posets of a small poset.

use crosscut::crosscut::{c_poset, d_poset, u_poset, Side};
use crosscut::dot::{crosscut_dot, DotOptions};
use crosscut::gallery::{fixture, FixtureSpec};
use crosscut::text::emit_crosscut;
use crosscut::Result;

pub fn run_example() -> Result<()> {
    // 0 < 2,3,4 and 1 < 3,4.
    let p = fixture(FixtureSpec::ExEasy)?;

    let d = d_poset(&p)?;
    let u = u_poset(&p)?;
    println!(
        "D nodes: {}",
        d.nodes()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!(
        "U nodes: {}",
        u.nodes()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );

    let c = c_poset(&p)?;
    assert_eq!(c.len(), d.len() + u.len());
    for (i, j) in c.cross_covers() {
        assert_eq!((c.side(i), c.side(j)), (Side::Up, Side::Down));
        println!("cross cover: U{} < D{}", c.node(i), c.node(j));
    }
    print!("{}", emit_crosscut(&c));
    let dot = crosscut_dot(&c, &DotOptions::default());
    println!("DOT output has {} lines", dot.lines().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
