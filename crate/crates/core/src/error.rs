use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("the zero-vertex graph is not accepted here")]
    EmptyGraph,
    #[error("parameter {name} = {value} out of range ({expected})")]
    ParameterOutOfRange {
        name: &'static str,
        value: usize,
        expected: &'static str,
    },
    #[error("malformed graph6 byte {byte:#04x} at offset {offset}")]
    Graph6Byte { byte: u8, offset: usize },
    #[error("graph6 payload for order {order} needs {expected} bytes, found {found}")]
    Graph6Length {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6 supports orders up to 62, got {0}")]
    Graph6Order(usize),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("family of {size} sets exceeds the brute-force limit of {limit}")]
    FamilyTooLarge { size: usize, limit: usize },
    #[error("graph of order {order} exceeds the definitional-check limit of {limit}")]
    GraphTooLarge { order: usize, limit: usize },
    #[error("{0:?} is not a triangle of the graph")]
    NotATriangle(Vec<usize>),
    #[error("triangle {0:?} is not an inner triangle")]
    NotInnerTriangle(Vec<usize>),
    #[error("vertex {0} is not a normal vertex")]
    NotNormal(usize),
    #[error("graph is not clique-Helly")]
    NotCliqueHelly,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
