use thiserror::Error;

/// The simplicial-surface axiom that a structure failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Every edge has exactly two distinct vertices.
    EdgeVertices,
    /// Every face has three edges and three vertices, each vertex on two of the edges.
    FaceShape,
    /// Every edge lies on exactly two distinct faces.
    EdgeFaces,
    /// The faces around every vertex form a single cycle.
    Umbrella,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            Axiom::EdgeVertices => "condition 1 (edge with two vertices)",
            Axiom::FaceShape => "condition 2 (face with three edges and three vertices)",
            Axiom::EdgeFaces => "condition 3 (edge on exactly two faces)",
            Axiom::Umbrella => "condition 4 (umbrella condition)",
        };
        f.write_str(text)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("simplicial surface axiom violated, {axiom}: {detail}")]
    Axiom { axiom: Axiom, detail: String },

    #[error("vertex {0} has degree 2")]
    DegreeTwo(u32),

    #[error("surface is not connected ({0} components)")]
    Disconnected(usize),

    #[error("invalid umbrella descriptor: {0}")]
    Umbrella(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("face graph would have a repeated arc between faces {0} and {1}")]
    MultiArc(u32, u32),

    #[error("graph has a bridge {{{0}, {1}}}")]
    Bridge(u32, u32),

    #[error("graph has {found} simple cycles, more than the limit of {limit}")]
    TooManyCycles { found: usize, limit: usize },

    #[error("expected a simplicial sphere, got {0}")]
    NotSphere(String),

    #[error("surface is not vertex-faithful")]
    NotVertexFaithful,

    #[error("invalid waist: {0}")]
    Waist(String),

    #[error("invalid rotation system: {0}")]
    Rotation(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn axiom(axiom: Axiom, detail: impl Into<String>) -> Self {
        Error::Axiom {
            axiom,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
