use alloc::string::String;

use num_bigint::BigInt;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no primitive direction for the zero vector")]
    NoPrimitiveDirection,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("singular system")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polytope must have dimension at least 1")]
    ZeroDimension,
    #[error("polytope has no vertices")]
    NoVertices,
    #[error("vertices {first} and {second} coincide")]
    DuplicateVertex { first: usize, second: usize },
    #[error("vertex hull has rank {rank} in dimension {dim}")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("facets required for dimension {dim} > 3")]
    FacetsRequired { dim: usize },
    #[error("facet {facet} has a zero normal")]
    ZeroNormal { facet: usize },
    #[error("vertex {vertex} violates facet {facet}")]
    FacetViolated { facet: usize, vertex: usize },
    #[error("facet {facet} is not tight on an (n-1)-dimensional face")]
    NotAFacet { facet: usize },
    #[error("vertex {vertex} lies on {tight} != {dim} facets")]
    NonSimpleVertex {
        vertex: usize,
        tight: usize,
        dim: usize,
    },
    #[error("vertex {vertex} is not an extreme point of the facet system")]
    NotExtreme { vertex: usize },
    #[error("vertex {vertex} has {found} neighbours, expected {dim}")]
    WrongDegree {
        vertex: usize,
        found: usize,
        dim: usize,
    },
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("window lower bound exceeds upper bound on axis {axis}")]
    InvalidWindow { axis: usize },
    #[error("expected {expected} signs, found {found}")]
    SignCount { expected: usize, found: usize },
    #[error("orientation violates the expansion condition: {0}")]
    InvalidOrientation(String),
    #[error("zeta is not generic: pairing with edge {edge} at vertex {vertex} vanishes")]
    NonGenericZeta { vertex: usize, edge: usize },
    #[error("denominator factor {edge} at vertex {vertex} vanishes")]
    VanishingDenominator { vertex: usize, edge: usize },
    #[error("evaluation point has a zero coordinate")]
    ZeroCoordinate,
    #[error("todd argument {index} is zero")]
    ZeroToddArgument { index: usize },
    #[error("power series division by a series with zero constant term")]
    NonUnitDivisor,
    #[error("constant-term routes disagree at vertex {vertex}")]
    RouteMismatch { vertex: usize },
    #[error("vertex sum {0} is not an integer")]
    NonIntegralCount(String),
    #[error("kmax {kmax} below dim + 1 = {needed}")]
    KmaxTooSmall { kmax: usize, needed: usize },
    #[error("counts not polynomial at k = {k}: input invalid")]
    NotPolynomial { k: usize },
    #[error("leading Ehrhart coefficient {leading} differs from volume {volume}")]
    VolumeMismatch { leading: String, volume: String },
    #[error("operation requires dimension {expected}, polytope has dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("bounding box holds {0} candidate points, above the scan limit")]
    ScanTooLarge(BigInt),
}

pub type Result<T> = core::result::Result<T, Error>;
