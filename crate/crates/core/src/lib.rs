//! Finite posets, their crosscut posets, and fixed point property checks.
//!
//! The crate is organised bottom-up:
//!
//! * [`poset`] and [`set`]: finite posets on dense ids with bitset subsets,
//!   plus [`iso`] for order-isomorphism;
//! * [`crosscut`]: `st`, index sets, `Γ(P, X)` and the down-side, up-side and
//!   combined crosscut posets;
//! * [`morphism`] and [`search`]: order-preserving maps, exhaustive endomap
//!   enumeration, and the maps induced on crosscut posets;
//! * [`fpp`]: irreducible points, dismantling, crowns and verdicts;
//! * [`gallery`], [`text`], [`dot`], [`random`]: named fixtures and I/O;
//! * [`theorems`]: randomized property suites, also run by the CLI.
//!
//! ```
//! use crosscut::{crosscut::d_poset, gallery::{fixture, FixtureSpec}, ElementSet};
//!
//! let p = fixture(FixtureSpec::Ex2).unwrap();
//! let d = d_poset(&p).unwrap();
//! assert_eq!(d.len(), 3);
//! assert!(d.nodes().contains(&ElementSet::from([0, 1, 2, 3])));
//! ```

pub mod cli;
pub mod crosscut;
pub mod dot;
pub mod error;
pub mod fpp;
pub mod gallery;
pub mod iso;
pub mod morphism;
pub mod poset;
pub mod random;
pub mod search;
pub mod set;
pub mod text;
pub mod theorems;

pub use crate::crosscut::{CrosscutPoset, Side};
pub use crate::error::{Error, Result};
pub use crate::morphism::OrderMap;
pub use crate::poset::Poset;
pub use crate::search::SearchConfig;
pub use crate::set::ElementSet;
