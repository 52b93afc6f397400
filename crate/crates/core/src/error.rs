use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a cycle through element {0}")]
    Cycle(usize),
    #[error("element index {index} out of range for a poset of {size} elements")]
    Index { index: usize, size: usize },
    #[error("posets are limited to {max} elements, got {got}")]
    TooLarge { got: usize, max: usize },
    #[error("operation requires a non-empty subset")]
    EmptyInput,
    #[error("{what}: size {got} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("the down-side and up-side crosscut posets share a node")]
    NotDisjoint,
    #[error("subset is not connected")]
    NotConnected,
    #[error("map is not order-preserving: {x} <= {y} but f({x}) = {fx} is not <= f({y}) = {fy}")]
    NotMonotone {
        x: usize,
        y: usize,
        fx: usize,
        fy: usize,
    },
    #[error("map has {got} values but its source has {expected} elements")]
    Arity { got: usize, expected: usize },
    #[error("posets do not match for composition")]
    Mismatch,
    #[error("map is not an endomap")]
    NotEndomap,
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("poset is not a crown")]
    NotACrown,
    #[error("poset is neither of the middle-level lemma fixtures")]
    WrongFixture,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
