// Crowns are the smallest posets without the fixed point property, and they
// fall apart as soon as one point is removed.

use crosscut::fpp::{crown_nonbijective_fixed_point, dismantle, has_fpp, is_crown};
use crosscut::gallery::{fixture, FixtureSpec};
use crosscut::text::format_trace;
use crosscut::{Result, SearchConfig};

pub fn run_example() -> Result<()> {
    for n in 2..=4 {
        let p = fixture(FixtureSpec::Crown { n })?;
        assert_eq!(is_crown(&p), Some(n));
        let verdict = has_fpp(&p)?;
        assert!(!verdict.has_fpp);
        let rotation = verdict.witness.expect("crowns have fixed-point-free maps");
        println!("{}-crown: fixed-point-free map {:?}", 2 * n, rotation.values());
        assert!(crown_nonbijective_fixed_point(&p, &SearchConfig::default())?);

        let q = p.induced_subposet(p.all().without(0))?;
        let trace = dismantle(&q);
        assert!(trace.is_dismantlable());
        print!("{}", format_trace(&q, &trace));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
