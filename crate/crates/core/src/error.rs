use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group too large: {what} exceeds the bound {bound}")]
    TooLarge { what: &'static str, bound: usize },
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is not cyclic")]
    NotCyclic,
    #[error("point set is not stabilized by the group")]
    NotStabilized,
    #[error("permutation of lines does not come from a lattice automorphism: {0}")]
    InconsistentPermutation(String),
    #[error("quotient lattice has torsion: invariant factors {0:?}")]
    TorsionFound(Vec<String>),
    #[error("modulus {0} is not a prime power")]
    BadModulus(i64),
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("expected a polynomial of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("general position failed: {0}")]
    GeneralPositionFailed(String),
    #[error("the three boundary lines meet at an Eckardt point")]
    EckardtPoint,
    #[error("concurrency of the boundary lines undecided at {0} bits of precision")]
    Indeterminate(u32),
    #[error("invariants did not stabilize for p = {p}: {at_n} vs {at_np}")]
    StabilizationFailed { p: u32, at_n: String, at_np: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
