use thiserror::Error;

/// Library-wide error type. Variants map one-to-one onto the failure modes of
/// the individual operations; the CLI maps them to stage-tagged exit codes.
#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("gamma pole at nonpositive integer argument")]
    Pole,
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("square-root sign choices violate t1*t2*t3 = n1*n2*n3")]
    SignConstraint,
    #[error("orbit exceeded maximum size {0}")]
    OrbitOverflow(usize),
    #[error("trace data is reducible; cannot normalize a triple")]
    ReducibleData,
    #[error("Fricke residual too large for realizable data: {0}")]
    Residual(String),
    #[error("no rational function matches the series at degrees ({0}, {1})")]
    NoSolution(usize, usize),
    #[error("rational-function fit at degrees ({0}, {1}) is underdetermined")]
    Ambiguous(usize, usize),
    #[error("permutations do not generate a transitive group")]
    NonTransitive,
    #[error("integer rounding residual {0} too large in minimal-polynomial recognition")]
    Rounding(String),
    #[error("trace lies on the excluded ray (-inf, -2]")]
    Domain,
    #[error("sigma = 0 (trace = 2) excluded")]
    ZeroSigma,
    #[error("denominator 4*a*g*a'*g' vanishes in the s formula")]
    DegenerateDenominator,
    #[error("validity condition failed: {0}")]
    Validity(String),
    #[error("s-hat vanishes; leading coefficient undefined")]
    ZeroShat,
    #[error("series inversion impossible: leading coefficient vanishes")]
    SeriesInversion,
    #[error("resonant coefficient equation inconsistent at order {0}")]
    Resonance(i64),
    #[error("fractional exponent survives in symmetric function {0} (coefficient {1})")]
    FractionalResidue(usize, String),
    #[error("non-rational coefficient in curve assembly: {0}")]
    NonRationalCoefficient(String),
    #[error("root path approaches a discriminant point")]
    PathTooClose,
    #[error("evaluation point hits a singularity: {0}")]
    SingularPoint(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("gauge-degenerate trace data: {0}")]
    GaugeDegenerate(String),
    #[error("images of the residue matrices are linearly dependent")]
    DependentImages,
    #[error("the (2,3) entry polynomial is constant; no zero to extract")]
    ConstantPolynomial,
    #[error("integration step failure: {0}")]
    StepFailure(String),
    #[error("diagonal entry 1 + u_ii vanishes")]
    DegenerateDiagonal,
    #[error("matrix is not in the big cell")]
    NotInBigCell,
    #[error("u matrix is singular")]
    SingularU,
    #[error("product has no unit eigenvalue within tolerance")]
    NoUnitEigenvalue,
    #[error("no invariant structure found; representation looks irreducible")]
    Irreducible,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("linear solve failed: singular system")]
    SingularSystem,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
