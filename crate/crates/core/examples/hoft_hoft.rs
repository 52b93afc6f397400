// When every set of minimal elements has a join, every order-preserving
// self-map moves some element upward.

use crosscut::fpp::hoft_check;
use crosscut::gallery::{fixture, FixtureSpec};
use crosscut::random::random_poset;
use crosscut::{Result, SearchConfig};

pub fn run_example() -> Result<()> {
    let cfg = SearchConfig::default();
    let mut applicable = 0;
    for seed in 0..50 {
        let p = random_poset(7, 0.5, seed)?;
        let check = hoft_check(&p, &cfg)?;
        if check.applicable {
            applicable += 1;
            assert_eq!(check.holds, Some(true));
        }
    }
    println!("hypothesis held on {applicable} of 50 random posets; conclusion held on all of them");

    // Two minimal elements with two minimal upper bounds: no join.
    let crown = fixture(FixtureSpec::Crown { n: 2 })?;
    assert!(!hoft_check(&crown, &cfg)?.applicable);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
