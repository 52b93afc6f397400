// Decide the fixed point property by dismantling and exhaustive search.

use crosscut::fpp::has_fpp_with;
use crosscut::gallery::{fixture, FixtureSpec};
use crosscut::morphism::count_endomaps;
use crosscut::search::EndomapSearch;
use crosscut::text::format_verdict;
use crosscut::{Result, SearchConfig};

pub fn run_example() -> Result<()> {
    // Honours CROSSCUT_SEARCH_CAP.
    let cfg = SearchConfig::from_env();

    for spec in [FixtureSpec::ExEasy, FixtureSpec::Ex2, FixtureSpec::P3323] {
        let p = fixture(spec)?;
        let verdict = has_fpp_with(&p, &cfg)?;
        println!("{spec}: {} endomaps", count_endomaps(&p, &cfg)?);
        print!("{}", format_verdict(&verdict));
        if let Some(w) = &verdict.witness {
            assert!(w.fixed_points()?.is_empty());
        }
    }

    // The search can also be restricted: endomaps of ex_2 sending 0 to 1.
    let p = fixture(FixtureSpec::Ex2)?;
    let n = EndomapSearch::new(&p)
        .restrict(0, [1].into())
        .fixed_point_free()
        .count();
    println!("fixed-point-free maps of ex_2 with 0 -> 1: {n}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
