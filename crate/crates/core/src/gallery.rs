//! Named posets: the worked examples, the three eleven-element posets
//! `P3323`, `P353_1`, `P353_2`, the middle-level lemma posets, the
//! reductions `Q1`/`Q2`, crowns, and the two-parameter family `P^{n,k}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::{numeric_labels, Poset};
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureSpec {
    /// Two minimal elements under three maximal ones (`0 < 2,3,4`, `1 < 3,4`).
    ExEasy,
    /// The poset on which induced maps fail to compose.
    ExNonfunctorial,
    /// Two stacked 4-crowns; no fixed point property.
    Ex2,
    P3323,
    P353_1,
    P353_2,
    /// The family `P^{n,k}`, `n >= 4`, `2 <= k <= n-1`.
    Pnk {
        n: usize,
        k: usize,
    },
    /// The `2n`-crown, `n >= 2`.
    Crown {
        n: usize,
    },
    P1,
    P2,
    Q1,
    Q2,
}

pub const FIXTURE_NAMES: [&str; 12] = [
    "ex_easy",
    "ex_nonfunctorial",
    "ex_2",
    "P3323",
    "P353_1",
    "P353_2",
    "Pnk",
    "crown",
    "P1",
    "P2",
    "Q1",
    "Q2",
];

impl FixtureSpec {
    /// Parses a fixture name plus its integer parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<FixtureSpec> {
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::BadParams(format!(
                    "{name} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "ex_easy" => FixtureSpec::ExEasy,
            "ex_nonfunctorial" => FixtureSpec::ExNonfunctorial,
            "ex_2" => FixtureSpec::Ex2,
            "P3323" => FixtureSpec::P3323,
            "P353_1" => FixtureSpec::P353_1,
            "P353_2" => FixtureSpec::P353_2,
            "P1" => FixtureSpec::P1,
            "P2" => FixtureSpec::P2,
            "Q1" => FixtureSpec::Q1,
            "Q2" => FixtureSpec::Q2,
            "Pnk" => {
                arity(2)?;
                FixtureSpec::Pnk {
                    n: params[0],
                    k: params[1],
                }
            }
            "crown" => {
                arity(1)?;
                FixtureSpec::Crown { n: params[0] }
            }
            other => return Err(Error::BadParams(format!("unknown fixture {other:?}"))),
        };
        if !matches!(spec, FixtureSpec::Pnk { .. } | FixtureSpec::Crown { .. }) {
            arity(0)?;
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FixtureSpec::Pnk { n, k } => check_pnk(n, k),
            FixtureSpec::Crown { n } if n < 2 => {
                Err(Error::BadParams(format!("crown needs n >= 2, got {n}")))
            }
            // 2n elements must fit the bitset.
            FixtureSpec::Crown { n } if n > 32 => {
                Err(Error::BadParams(format!("crown needs n <= 32, got {n}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FixtureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureSpec::ExEasy => f.write_str("ex_easy"),
            FixtureSpec::ExNonfunctorial => f.write_str("ex_nonfunctorial"),
            FixtureSpec::Ex2 => f.write_str("ex_2"),
            FixtureSpec::P3323 => f.write_str("P3323"),
            FixtureSpec::P353_1 => f.write_str("P353_1"),
            FixtureSpec::P353_2 => f.write_str("P353_2"),
            FixtureSpec::Pnk { n, k } => write!(f, "Pnk {n} {k}"),
            FixtureSpec::Crown { n } => write!(f, "crown {n}"),
            FixtureSpec::P1 => f.write_str("P1"),
            FixtureSpec::P2 => f.write_str("P2"),
            FixtureSpec::Q1 => f.write_str("Q1"),
            FixtureSpec::Q2 => f.write_str("Q2"),
        }
    }
}

impl FromStr for FixtureSpec {
    type Err = Error;

    /// `"Pnk 5 3"`, `"crown 4"`, `"P3323"`.
    fn from_str(s: &str) -> Result<FixtureSpec> {
        let mut words = s.split_whitespace();
        let name = words
            .next()
            .ok_or(Error::BadParams("empty fixture name".into()))?;
        let params = words
            .map(|w| {
                w.parse()
                    .map_err(|_| Error::BadParams(format!("bad parameter {w:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        FixtureSpec::parse(name, &params)
    }
}

fn check_pnk(n: usize, k: usize) -> Result<()> {
    if n < 4 || k < 2 || k > n - 1 {
        return Err(Error::BadParams(format!(
            "Pnk needs n >= 4 and 2 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    if 2 * n + 3 > crate::set::MAX_ELEMENTS {
        return Err(Error::BadParams(format!("Pnk with n={n} is too large")));
    }
    Ok(())
}

fn numbered(n: usize, covers: &[(usize, usize)]) -> Poset {
    Poset::from_covers(numeric_labels(n), covers).expect("fixture covers are acyclic")
}

/// Three-level posets on `0..9` with `{0,1,2} < {3,4,5} < {6,7,8}`.
fn three_level(low: &[(usize, usize)]) -> Poset {
    let mut covers = low.to_vec();
    covers.extend([(3, 6), (3, 7), (4, 6), (4, 8), (5, 7), (5, 8)]);
    numbered(9, &covers)
}

pub fn fixture(spec: FixtureSpec) -> Result<Poset> {
    spec.validate()?;
    Ok(match spec {
        FixtureSpec::ExEasy => numbered(5, &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4)]),
        FixtureSpec::ExNonfunctorial => numbered(5, &[(0, 1), (1, 3), (1, 4), (2, 3), (2, 4)]),
        FixtureSpec::Ex2 => numbered(
            6,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
        ),
        FixtureSpec::P3323 => numbered(
            11,
            &[
                (0, 3),
                (0, 4),
                (1, 3),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 8),
                (3, 10),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 7),
                (6, 8),
                (6, 9),
                (7, 9),
                (7, 10),
            ],
        ),
        FixtureSpec::P353_1 => numbered(
            11,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 6),
                (1, 7),
                (2, 5),
                (2, 6),
                (2, 7),
                (3, 8),
                (4, 8),
                (6, 8),
                (7, 8),
                (3, 9),
                (5, 9),
                (7, 9),
                (4, 10),
                (5, 10),
                (6, 10),
            ],
        ),
        FixtureSpec::P353_2 => numbered(
            11,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 6),
                (1, 7),
                (2, 5),
                (2, 6),
                (2, 7),
                (3, 8),
                (4, 8),
                (6, 8),
                (3, 9),
                (5, 9),
                (6, 9),
                (7, 9),
                (4, 10),
                (5, 10),
                (7, 10),
            ],
        ),
        FixtureSpec::P1 => three_level(&[(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)]),
        FixtureSpec::P2 => three_level(&[(0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4), (2, 5)]),
        FixtureSpec::Q1 => {
            let labels = ["0", "1", "2", "3", "4", "5", "9", "10", "a", "12", "13", "14"];
            Poset::from_covers(
                labels,
                &[
                    (0, 3),
                    (0, 4),
                    (1, 3),
                    (1, 5),
                    (2, 4),
                    (2, 5),
                    (3, 6),
                    (5, 6),
                    (5, 7),
                    (3, 7),
                    (4, 8),
                    (6, 9),
                    (6, 10),
                    (7, 9),
                    (7, 11),
                    (8, 10),
                    (8, 11),
                ],
            )?
        }
        FixtureSpec::Q2 => {
            let labels = ["0", "1", "2", "3", "4", "5", "9", "10", "12", "13", "14"];
            Poset::from_covers(
                labels,
                &[
                    (0, 3),
                    (0, 4),
                    (1, 3),
                    (1, 5),
                    (2, 4),
                    (2, 5),
                    (3, 6),
                    (5, 6),
                    (5, 7),
                    (3, 7),
                    (4, 9),
                    (4, 10),
                    (6, 8),
                    (6, 9),
                    (7, 8),
                    (7, 10),
                ],
            )?
        }
        FixtureSpec::Crown { n } => crown(n),
        FixtureSpec::Pnk { n, k } => pnk(n, k),
    })
}

/// Covers of the bottom two levels shared by crowns and `P^{n,k}`:
/// top `j` sits over bottoms `j-1` and `j+1` (1-based), except that the first
/// top is over bottoms 1, 2 and the last over `n-1`, `n`.
fn crown_covers(
    n: usize,
    bottom: impl Fn(usize) -> usize,
    top: impl Fn(usize) -> usize,
) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for j in 1..=n {
        let below = match j {
            1 => [1, 2],
            _ if j == n => [n - 1, n],
            _ => [j - 1, j + 1],
        };
        for i in below {
            covers.push((bottom(i), top(j)));
        }
    }
    covers
}

/// The `2n`-crown labelled `1..n` (bottoms) and `n+1..2n` (tops).
pub fn crown(n: usize) -> Poset {
    let labels: Vec<String> = (1..=2 * n).map(|i| i.to_string()).collect();
    let covers = crown_covers(n, |i| i - 1, |j| n + j - 1);
    Poset::from_covers(labels, &covers).expect("crown covers are acyclic")
}

/// Ids of `c_j`, `b_j`, `a_i` (all 1-based) in `P^{n,k}`.
#[derive(Clone, Copy, Debug)]
pub struct PnkIds {
    pub n: usize,
}

impl PnkIds {
    pub fn c(&self, j: usize) -> usize {
        j - 1
    }

    pub fn b(&self, j: usize) -> usize {
        self.n + j - 1
    }

    pub fn a(&self, i: usize) -> usize {
        2 * self.n + i - 1
    }
}

fn pnk(n: usize, k: usize) -> Poset {
    let ids = PnkIds { n };
    let mut labels: Vec<String> = (1..=n).map(|j| format!("c{j}")).collect();
    labels.extend((1..=n).map(|j| format!("b{j}")));
    labels.extend((1..=3).map(|i| format!("a{i}")));
    let mut covers = crown_covers(n, |i| ids.c(i), |j| ids.b(j));
    // Each a_i sits over the b_j listed in its principal down-set.
    for j in 1..=n {
        if j < n {
            covers.push((ids.b(j), ids.a(1)));
        }
        if j != n - 1 {
            covers.push((ids.b(j), ids.a(2)));
        }
        if j >= k {
            covers.push((ids.b(j), ids.a(3)));
        }
    }
    Poset::from_covers(labels, &covers).expect("Pnk covers are acyclic")
}

/// The nine nodes of the down-side crosscut poset of `P^{n,k}` from their
/// closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedDnk {
    /// Principal down-sets of `a_1`, `a_2`, `a_3`.
    pub down_a: [ElementSet; 3],
    pub a: ElementSet,
    pub b: ElementSet,
    pub c: ElementSet,
    pub d: ElementSet,
    pub e: ElementSet,
    pub f: ElementSet,
}

impl ExpectedDnk {
    pub fn named(&self) -> [(&'static str, ElementSet); 9] {
        [
            ("P<=a1", self.down_a[0]),
            ("P<=a2", self.down_a[1]),
            ("P<=a3", self.down_a[2]),
            ("A", self.a),
            ("B", self.b),
            ("C", self.c),
            ("D", self.d),
            ("E", self.e),
            ("F", self.f),
        ]
    }

    pub fn sets(&self) -> Vec<ElementSet> {
        self.named().iter().map(|&(_, s)| s).collect()
    }
}

/// Principal down-sets of every element of `P^{n,k}` from their closed forms.
pub fn expected_pnk_down_sets(n: usize, k: usize) -> Result<Vec<ElementSet>> {
    check_pnk(n, k)?;
    let ids = PnkIds { n };
    let bs = |pred: &dyn Fn(usize) -> bool| -> ElementSet {
        (1..=n).filter(|&j| pred(j)).map(|j| ids.b(j)).collect()
    };
    let cs = |pred: &dyn Fn(usize) -> bool| -> ElementSet {
        (1..=n).filter(|&j| pred(j)).map(|j| ids.c(j)).collect()
    };
    let mut out = vec![ElementSet::EMPTY; 2 * n + 3];
    for j in 1..=n {
        out[ids.c(j)] = ElementSet::singleton(ids.c(j));
        let below = match j {
            1 => [1, 2],
            _ if j == n => [n - 1, n],
            _ => [j - 1, j + 1],
        };
        out[ids.b(j)] = ElementSet::from([ids.b(j), ids.c(below[0]), ids.c(below[1])]);
    }
    out[ids.a(1)] = bs(&|j| j < n).union(cs(&|_| true)).with(ids.a(1));
    out[ids.a(2)] = bs(&|j| j != n - 1).union(cs(&|_| true)).with(ids.a(2));
    out[ids.a(3)] = bs(&|j| j >= k).union(cs(&|j| j + 1 >= k)).with(ids.a(3));
    Ok(out)
}

pub fn expected_dnk(n: usize, k: usize) -> Result<ExpectedDnk> {
    check_pnk(n, k)?;
    let ids = PnkIds { n };
    let down = expected_pnk_down_sets(n, k)?;
    let same = |j: usize| j % 2 == n % 2;
    let bs = |pred: &dyn Fn(usize) -> bool| -> ElementSet {
        (1..=n).filter(|&j| pred(j)).map(|j| ids.b(j)).collect()
    };
    let cs = |pred: &dyn Fn(usize) -> bool| -> ElementSet {
        (1..=n).filter(|&j| pred(j)).map(|j| ids.c(j)).collect()
    };
    let in_range = |j: usize, lo: usize, hi: usize| lo <= j && j <= hi;
    let km1 = k - 1;
    Ok(ExpectedDnk {
        down_a: [down[ids.a(1)], down[ids.a(2)], down[ids.a(3)]],
        a: bs(&|j| j <= n - 2).union(cs(&|j| j < n)),
        b: bs(&|j| in_range(j, k, n - 1) && !same(j)).union(cs(&|j| in_range(j, km1, n) && same(j))),
        c: bs(&|j| in_range(j, k, n) && same(j))
            .union(cs(&|j| in_range(j, km1, n - 1) && !same(j)))
            .with(ids.c(n)),
        d: bs(&|j| j + 3 <= n && j >= k && !same(j)).union(cs(&|j| in_range(j, km1, n - 2) && same(j))),
        e: bs(&|j| in_range(j, k, n - 2) && same(j)).union(cs(&|j| in_range(j, km1, n - 1) && !same(j))),
        f: ElementSet::singleton(ids.c(n)),
    })
}
