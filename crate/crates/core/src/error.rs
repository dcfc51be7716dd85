//! Error types for configuration, scenario parsing, and protocol sequencing.

use thiserror::Error;

/// Rejected configuration or parameter set.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("participant count must satisfy 2 <= N <= M (got N={participants}, M={nodes})")]
    BadNetworkShape { participants: usize, nodes: usize },
    #[error("sequence length n must be at least 1")]
    EmptySequence,
    #[error("detection fraction delta must lie in [0, 1] (got {0})")]
    BadDelta(f64),
    #[error("error-rate threshold must lie in [0, 1) (got {0})")]
    BadThreshold(f64),
    #[error("detection samples do not fit: {total} requested, {available} key bits available")]
    SampleOverflow { total: usize, available: usize },
    #[error("expected {expected} injected tags, got {got}")]
    TagCountMismatch { expected: usize, got: usize },
    #[error("bit string `{name}` must have length {expected}, got {got}")]
    BitLengthMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("aggregating tags needs at least two of them")]
    TooFewTags,
    #[error("tags must all share one length")]
    TagLengthMismatch,
    #[error("attacked edge {edge} is outside the ring (valid: 0..={max})")]
    BadEdge { edge: usize, max: usize },
    #[error("impersonation target {target} is not a participant (valid: 1..={max})")]
    BadTarget { target: usize, max: usize },
    #[error("ancilla vectors must share one common dimension >= 1")]
    AncillaDimensionMismatch,
    #[error("ancilla vectors must not all be zero")]
    AncillaAllZero,
}

/// Protocol called out of order, or a channel failed mid-run.
#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error("operation requires session phase {expected}, but the session is in {found}")]
    OutOfOrder {
        expected: &'static str,
        found: &'static str,
    },
    #[error("no such participant index {0}")]
    NoSuchParty(usize),
    #[error("quantum channel lost on edge {edge}")]
    ChannelLost { edge: usize },
}

/// Scenario-file problems, with the offending section and key named.
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("failed to read scenario file: {0}")]
    Io(#[from] std::io::Error),
    #[error("scenario file is not well-formed TOML: {0}")]
    Syntax(String),
    #[error("unknown section [{0}]")]
    UnknownSection(String),
    #[error("[{section}] unknown key `{key}`")]
    UnknownKey { section: String, key: String },
    #[error("[{section}] missing required key `{key}`")]
    MissingKey { section: String, key: String },
    #[error("[{section}] key `{key}`: {problem}")]
    BadValue {
        section: String,
        key: String,
        problem: String,
    },
    #[error(transparent)]
    Config(#[from] ConfigError),
}
