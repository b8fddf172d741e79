//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by graph parsing, allocation, routing, the exact
/// solver, and the simulator.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph parse error at line {line}: {msg}")]
    GraphParse { line: usize, msg: String },

    #[error("graph not connected")]
    NotConnected,

    #[error("self-loop at node {node}")]
    SelfLoop { node: usize },

    #[error("duplicate edge between {a} and {b}")]
    DuplicateEdge { a: usize, b: usize },

    #[error("nonpositive edge length {length} between {a} and {b}")]
    NonpositiveLength { a: usize, b: usize, length: f64 },

    #[error("node id {node} out of range (graph has {limit} nodes)")]
    NodeOutOfRange { node: usize, limit: usize },

    #[error("agent {agent} has nonpositive speed {speed}")]
    NonpositiveSpeed { agent: usize, speed: f64 },

    #[error("duplicate origin node {node}")]
    DuplicateOrigin { node: usize },

    #[error("unknown agent id {agent}")]
    UnknownAgent { agent: usize },

    #[error("no alive agents")]
    NoAliveAgents,

    #[error("agent {agent} is already dead")]
    AgentAlreadyDead { agent: usize },

    #[error("agent list is empty")]
    NoAgents,

    #[error("duplicate agent position {x}")]
    DuplicatePosition { x: f64 },

    #[error("{what} cap exceeded: limit {limit}, got {actual}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("coverage violation: node {node} not covered by its owner's route")]
    CoverageViolation { node: usize },

    #[error("degenerate ratio: optimal objective is zero while heuristic is positive")]
    DegenerateRatio,

    #[error("scenario parse error at line {line}: {msg}")]
    ScenarioParse { line: usize, msg: String },

    #[error("invalid scenario: {msg}")]
    ScenarioInvalid { msg: String },

    #[error("csv parse error: {msg}")]
    CsvParse { msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
