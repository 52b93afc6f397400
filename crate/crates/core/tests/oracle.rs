//! The library against the naive reference on seeded random posets.

mod common;

use common::{image, intersects, subset, Naive, Set};
use crosscut::crosscut::{c_poset, d_poset, gamma_nodes, min_containing, u_poset, Side};
use crosscut::fpp::has_fpp;
use crosscut::morphism::{count_endomaps, Inducer};
use crosscut::random::random_poset;
use crosscut::{ElementSet, Error, Poset, SearchConfig};

fn to_set(s: &[usize]) -> ElementSet {
    s.iter().copied().collect()
}

fn poset(seed: u64, max: usize) -> Poset {
    let n = 1 + (seed as usize * 7 + 3) % max;
    let density = [0.15, 0.3, 0.45, 0.6][(seed % 4) as usize];
    random_poset(n, density, seed).unwrap()
}

#[test]
fn gamma_matches_reference() {
    for seed in 0..300 {
        let p = poset(seed, 8);
        let naive = Naive::of(&p);
        let odd: Set = (0..p.len()).filter(|x| x % 2 == 1).collect();
        for x in [naive.maximal(), naive.minimal(), odd] {
            let got: Vec<Set> = gamma_nodes(&p, to_set(&x))
                .unwrap()
                .iter()
                .map(|s| s.to_vec())
                .collect();
            let want: Vec<Set> = naive.gamma(&x).into_iter().collect();
            assert_eq!(got, want, "seed {seed}, X = {x:?}");
        }
    }
}

#[test]
fn crosscut_orders_match_reference() {
    for seed in 0..300 {
        let p = poset(seed, 8);
        let d = d_poset(&p).unwrap();
        let u = u_poset(&p).unwrap();
        for i in 0..d.len() {
            for j in 0..d.len() {
                assert_eq!(
                    d.order().le(i, j),
                    subset(&d.node(i).to_vec(), &d.node(j).to_vec())
                );
            }
        }
        for i in 0..u.len() {
            for j in 0..u.len() {
                assert_eq!(
                    u.order().le(i, j),
                    subset(&u.node(j).to_vec(), &u.node(i).to_vec())
                );
            }
        }
        let c = match c_poset(&p) {
            Ok(c) => c,
            Err(Error::NotDisjoint) => {
                assert!(d.nodes().iter().any(|s| u.nodes().contains(s)), "seed {seed}");
                continue;
            }
            Err(e) => panic!("seed {seed}: {e}"),
        };
        for i in 0..c.len() {
            for j in 0..c.len() {
                let (a, b) = (c.node(i).to_vec(), c.node(j).to_vec());
                let want = match (c.side(i), c.side(j)) {
                    (Side::Down, Side::Down) => subset(&a, &b),
                    (Side::Up, Side::Up) => subset(&b, &a),
                    (Side::Up, Side::Down) => intersects(&a, &b),
                    (Side::Down, Side::Up) => false,
                };
                assert_eq!(c.order().le(i, j), want, "seed {seed}: {i} {j}");
            }
        }
    }
}

#[test]
fn min_containing_matches_reference() {
    for seed in 0..150 {
        let p = poset(seed, 7);
        let naive = Naive::of(&p);
        for x in [naive.maximal(), naive.minimal()] {
            for mask in 1usize..1 << p.len() {
                let b: Set = (0..p.len()).filter(|i| mask >> i & 1 == 1).collect();
                if !naive.is_connected(&b) {
                    assert_eq!(
                        min_containing(&p, to_set(&x), to_set(&b)),
                        Err(Error::NotConnected)
                    );
                    continue;
                }
                let got = min_containing(&p, to_set(&x), to_set(&b))
                    .unwrap()
                    .map(|s| s.to_vec());
                assert_eq!(
                    got,
                    naive.min_containing(&x, &b),
                    "seed {seed}, X = {x:?}, b = {b:?}"
                );
            }
        }
    }
}

#[test]
fn induced_maps_match_reference() {
    for seed in 0..120 {
        let p = poset(seed, 6);
        let naive = Naive::of(&p);
        let down = Inducer::down(&p, &p).unwrap();
        let up = Inducer::up(&p, &p).unwrap();
        let maps = naive.endomaps();
        for f in maps.iter().step_by(1 + maps.len() / 200) {
            for (inducer, x) in [(&down, naive.maximal()), (&up, naive.minimal())] {
                let values = inducer.apply(f).unwrap();
                let cp = inducer.source();
                for (i, &v) in values.iter().enumerate() {
                    let want = naive.min_containing(&x, &image(f, &cp.node(i).to_vec()));
                    assert_eq!(Some(cp.node(v).to_vec()), want, "seed {seed}, f = {f:?}");
                }
            }
        }
    }
}

#[test]
fn fixed_point_property_matches_reference() {
    let cfg = SearchConfig::default();
    for seed in 0..200 {
        let p = poset(seed, 6);
        let naive = Naive::of(&p);
        assert_eq!(
            count_endomaps(&p, &cfg).unwrap(),
            naive.endomaps().len() as u64,
            "seed {seed}"
        );
        assert_eq!(has_fpp(&p).unwrap().has_fpp, naive.has_fpp(), "seed {seed}");
    }
}
