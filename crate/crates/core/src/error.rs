use alloc::boxed::Box;
use alloc::string::String;

use crate::count::BigCount;
use crate::families::LevelDirection;
use crate::shift::ShiftValidation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{n} vertices requested; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("weighting has {got} entries but the graph has {expected} vertices")]
    WeightingSize { expected: usize, got: usize },
    #[error("total weight overflows u64")]
    WeightOverflow,
    #[error("cannot place total weight {0} on an empty support")]
    EmptySupport(u64),
    #[error("clique size {k} is below the minimum {min}")]
    CliqueSize { k: usize, min: usize },
    #[error("enumeration budget exceeded: {required} items needed, budget is {budget}")]
    BudgetExceeded { required: BigCount, budget: u64 },
    #[error("malformed shift spec: {0}")]
    MalformedShift(String),
    #[error("shift conditions are not satisfied")]
    InvalidShift(Box<ShiftValidation>),
    #[error("injection certificate failed: {0}")]
    CertificateFailed(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("Sperner graph order {0} is outside 1..=5")]
    SpernerOrder(usize),
    #[error("no level injection from level {r} {direction} in B_{n}: requires r {} n/2", direction.relation())]
    HallPrecondition {
        n: usize,
        r: usize,
        direction: LevelDirection,
    },
    #[error("multipartite spec needs at least one part and every part must be non-empty")]
    EmptyMultipartite,
    #[error("graph is not the complete multipartite graph of the given parts")]
    MultipartiteMismatch,
}
