use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set must have between 1 and 16 elements, got {0}")]
    GroundSize(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element set {mask:#x} does not fit a ground set of {size} elements")]
    MaskOutOfRange { mask: u32, size: usize },
    #[error("ground sets differ")]
    GroundMismatch,
    #[error("family is not an alignment: {0}")]
    NotAlignment(String),
    #[error("family is not a convex geometry: {0}")]
    NotConvexGeometry(String),
    #[error("order is not a permutation of the ground set")]
    BadOrder,
    #[error("carousel parameter n must be at least 1")]
    CarouselArity,
    #[error("{what} must be at most {limit}, got {got}")]
    TooLarge { what: &'static str, limit: usize, got: usize },
    #[error("no realization with at most {k_max} chains; every k <= {k_max} refuted")]
    KMaxExceeded { k_max: usize },
    #[error("empty circle list")]
    EmptyHull,
    #[error("invalid circle `{0}`: radius must be finite and non-negative")]
    BadCircle(String),
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("point lies inside or on the circle")]
    PointInsideCircle,
    #[error("circle is not strictly inside the triangle")]
    NotInsideTriangle,
    #[error("coincident projection endpoints on side {0}")]
    CoincidentEndpoints(&'static str),
    #[error("no class named `{0}`")]
    UnknownClass(String),
    #[error("class table does not match the reference partition: {0}")]
    TaxonomyMismatch(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
