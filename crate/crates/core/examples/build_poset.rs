// Build a poset from cover pairs, query it, and round-trip it through the
// text format.

use crosscut::text::{emit_poset, parse_poset};
use crosscut::{ElementSet, Poset, Result};

pub fn run_example() -> Result<()> {
    // A diamond with a pendant element on top.
    let p = Poset::from_covers(
        vec!["bot", "l", "r", "top", "cap"],
        &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
    )?;
    let (bot, l, r, cap) = (0, 1, 2, 4);

    assert!(p.le(bot, cap));
    assert!(!p.comparable(l, r));
    println!("down-set of cap: {}", p.down_set(cap)?);
    println!(
        "join of l and r: {:?}",
        p.has_join(ElementSet::from([l, r]))?.map(|x| p.label(x))
    );
    println!("heights: {:?}", p.heights());

    let text = emit_poset(&p);
    print!("{text}");
    assert_eq!(parse_poset(&text)?, p);

    // Implied pairs are fine; cycles are not.
    assert!(Poset::from_covers(vec!["a", "b"], &[(0, 1), (1, 0)]).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
