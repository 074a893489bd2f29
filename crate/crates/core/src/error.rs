use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not parabolic")]
    NotParabolic,

    #[error("generator `{0}` is not parabolic")]
    GeneratorNotParabolic(String),

    #[error("degenerate matrix (determinant {0:.3e})")]
    BadMatrix(f64),

    #[error("malformed PD term: {0}")]
    MalformedTerm(String),

    #[error("edge labels must cover 1..{expected} exactly twice each: {detail}")]
    EdgeCountMismatch { expected: usize, detail: String },

    #[error("crossing {crossing} is inconsistent with the edge orientation: {detail}")]
    InvalidCrossing { crossing: usize, detail: String },

    #[error("diagram is not a connected single-component knot diagram: {0}")]
    Disconnected(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("malformed group word `{0}`")]
    MalformedWord(String),

    #[error("Wirtinger relation violated at crossing {crossing} (residual {residual:.3e})")]
    RelationViolated { crossing: usize, residual: f64 },

    #[error("no arc labeling satisfies the Wirtinger relations: {0}")]
    NoArcLabeling(String),

    #[error("region extension is inconsistent across arc {arc}")]
    InconsistentExtension { arc: usize },

    #[error("state sum {phi} is not within {tol:e} of a multiple of the volume {volume} (residual {residual:.3e})")]
    OutOfLattice {
        phi: f64,
        volume: f64,
        residual: f64,
        tol: f64,
    },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("{0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short stable name used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotParabolic => "NotParabolic",
            Error::GeneratorNotParabolic(_) => "NotParabolic",
            Error::BadMatrix(_) => "BadMatrix",
            Error::MalformedTerm(_) => "MalformedTerm",
            Error::EdgeCountMismatch { .. } => "EdgeCountMismatch",
            Error::InvalidCrossing { .. } => "InvalidCrossing",
            Error::Disconnected(_) => "Disconnected",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::MalformedWord(_) => "MalformedWord",
            Error::RelationViolated { .. } => "RelationViolated",
            Error::NoArcLabeling(_) => "NoArcLabeling",
            Error::InconsistentExtension { .. } => "InconsistentExtension",
            Error::OutOfLattice { .. } => "OutOfLattice",
            Error::InvalidColoring(_) => "InvalidColoring",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Json(_) => "Json",
        }
    }

    /// Whether the failure is numerical (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::OutOfLattice { .. })
    }
}
