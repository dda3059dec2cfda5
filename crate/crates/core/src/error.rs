use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("both homogeneous quaternionic coordinates are zero")]
    ZeroPoint,
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("polynomial is constant in `{0}`")]
    ZeroDegree(String),
    #[error("homogenization degree {requested} is below the degree {actual} of the polynomial")]
    DegreeTooSmall { requested: u32, actual: u32 },
    #[error("spanning points are linearly dependent")]
    DependentPoints,
    #[error("point violates the Pluecker relation (t1*t6 - t2*t5 + t3*t4 = {0})")]
    NotOnGrassmannian(String),
    #[error("antisymmetric Pluecker matrix has no pair of independent columns")]
    RankError,
    #[error("slice pair has degree 0, the lift is degenerate")]
    DegenerateLift,
    #[error("polynomial `{0}` has non-real coefficients")]
    NonRealCoefficients(String),
    #[error("f4 and f5 are both constant")]
    BothConstant,
    #[error("no pair of columns of the line matrix is generically independent")]
    RankCollapse,
    #[error("degenerate parametrization: {0}")]
    DegenerateParametrization(String),
    #[error("every resultant of the ruling minors vanishes identically")]
    AllResultantsZero,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unexpected identifier `{name}` at position {pos} (declared variable: `{expected}`)")]
    WrongVariable {
        name: String,
        expected: String,
        pos: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
