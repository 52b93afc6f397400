// Induced maps on crosscut posets do not respect composition.

use crosscut::gallery::{fixture, FixtureSpec};
use crosscut::morphism::{compose, induced_d, make_map, OrderMap};
use crosscut::Result;

pub fn run_example() -> Result<()> {
    // 0 < 1 < 3,4 and 2 < 3,4.
    let p = fixture(FixtureSpec::ExNonfunctorial)?;
    let f = make_map(&p, &p, vec![2, 3, 3, 3, 3])?;
    let g = OrderMap::constant(&p, &p, 0)?;

    let fg = compose(&f, &g)?;
    let df = induced_d(&f)?;
    let dg = induced_d(&g)?;
    let dfg = induced_d(&fg)?;
    let composed = compose(&df.map, &dg.map)?;

    for i in 0..dfg.source.len() {
        println!(
            "{}: D(f∘g) -> {}, D(f)∘D(g) -> {}",
            dfg.source.node(i),
            dfg.target.node(dfg.map.apply(i)),
            df.target.node(composed.apply(i)),
        );
    }
    assert_ne!(dfg.map, composed);
    println!("D(f∘g) differs from D(f)∘D(g)");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
