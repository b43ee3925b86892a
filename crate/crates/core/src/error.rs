use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {0} exceeds the supported maximum of 62 vertices")]
    OrderTooLarge(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    Graph6Byte { byte: u8, offset: usize },
    #[error("graph6: truncated input (expected {expected} data bytes, found {found})")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("cannot parse graph expression {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("colouring covers {found} edges but the host has {expected}")]
    PartialColoring { expected: usize, found: usize },
    #[error("malformed witness: {0}")]
    Witness(String),
    #[error("host has {0} edges; brute force is limited to 24")]
    TooManyEdges(usize),
    #[error("order {0} is outside the enumeration range 1..={1}")]
    OrderOutOfRange(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("could not certify the matching partition after {0} improvement steps")]
    PartitionNotCertified(usize),
    #[error("lower bound {bound} contradicted: a host of order {order} arrows")]
    LowerBoundViolated { bound: usize, order: usize },
    #[error("certificate: {0}")]
    Certificate(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
