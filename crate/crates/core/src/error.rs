use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("Coxeter graph is not of finite type: {0}")]
    NonFiniteType(String),
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("cannot parse group specification {0:?}")]
    BadGroupSpec(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("group of order {order} exceeds the enumeration bound {bound} (set {var} to raise it)")]
    EnumerationBoundExceeded { order: u128, bound: usize, var: &'static str },
    #[error("group of order {order} exceeds the oracle limit {limit}")]
    OracleScaleExceeded { order: usize, limit: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("element is not in the domain D_R({s},{t})")]
    NotInDomain { s: usize, t: usize },
    #[error("cell is not contained in D_R({s},{t})")]
    CellNotInDomain { s: usize, t: usize },
    #[error("generators {s},{t} have m(s,t) = {m}; expected {expected}")]
    BadOrder { s: usize, t: usize, m: u32, expected: &'static str },
    #[error("character table computation failed: {0}")]
    CharacterTable(String),
    #[error("class orderings of character table and class function disagree")]
    TableMismatch,
    #[error("unknown irreducible character {0:?}")]
    UnknownCharacter(String),
    #[error("two-sided cell {block} has {count} family members with b = a")]
    SpecialNotUnique { block: usize, count: usize },
    #[error("left cell {cell} contains no distinguished involution")]
    CellWithoutDistinguished { cell: usize },
    #[error("left cell {cell} contains {count} distinguished involutions")]
    CellWithMultipleDistinguished { cell: usize, count: usize },
    #[error("conjugacy class {0} does not consist of involutions")]
    NotInvolutionClass(usize),
    #[error("emitted block is not a left cell: {0}")]
    VerificationMismatch(String),
    #[error("star closure covers {covered} of {total} elements")]
    IncompleteClosure { covered: usize, total: usize },
    #[error("no representative cell meets the star orbit of the element")]
    IndexMiss,
    #[error("invalid data file: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
