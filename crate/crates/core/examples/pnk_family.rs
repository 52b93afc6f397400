// The family P^{n,k}: its down-side crosscut poset always has the same nine
// nodes, and removing the three maximal elements leaves a 2n-crown.

use crosscut::crosscut::d_poset;
use crosscut::fpp::{has_fpp_with, is_crown};
use crosscut::gallery::{expected_dnk, fixture, FixtureSpec};
use crosscut::{Result, SearchConfig};

pub fn run_example() -> Result<()> {
    let cfg = SearchConfig::with_cap(25);
    for (n, k) in [(4, 2), (5, 3), (6, 4)] {
        let p = fixture(FixtureSpec::Pnk { n, k })?;
        let d = d_poset(&p)?;
        let expected = expected_dnk(n, k)?;
        for (name, set) in expected.named() {
            assert!(d.nodes().contains(&set));
            println!(
                "P^{{{n},{k}}} {name}: {}",
                crosscut::crosscut::subset_label(&p, set)
            );
        }
        let rest = p.induced_subposet(p.all().difference(p.maximal_elements()))?;
        assert_eq!(is_crown(&rest), Some(n));
        println!("P^{{{n},{k}}} has FPP: {}", has_fpp_with(&p, &cfg)?.has_fpp);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
