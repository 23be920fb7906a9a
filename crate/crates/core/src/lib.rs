//! Orientation completion for partially oriented graphs.
//!
//! A partially oriented graph ([`Pog`]) mixes undirected edges and arcs on a
//! simple underlying graph. To *complete* it is to orient every remaining
//! edge. This crate decides, for a range of target classes, whether a
//! completion exists; it builds one when it does and returns a checkable
//! [`Certificate`] when it does not.
//!
//! Target classes covered:
//!
//! * local tournaments and quasi-transitive oriented graphs ([`auxgraph`]),
//! * acyclic local tournaments / proper interval graphs ([`chordal`],
//!   [`representation`]),
//! * locally transitive local tournaments for friendly inputs and proper
//!   circular-arc representation extension ([`friendly`]),
//! * transitive tournaments, strong oriented graphs, in-tournaments and
//!   directed cycle factors ([`completions`]),
//! * round and excellent cyclic orderings ([`round`], [`moon`]),
//! * the 3-SAT reduction to locally transitive tournament completion plus an
//!   exact small-instance solver ([`hardness`]).

pub mod auxgraph;
pub mod certificate;
pub mod chordal;
pub mod class;
pub mod classify;
pub mod cli;
pub mod completions;
pub mod friendly;
pub mod hardness;
pub mod moon;
pub mod pog;
pub mod report;
pub mod representation;
pub mod round;
pub mod twosat;

pub use certificate::{verify_certificate, Certificate, CycleLocation};
pub use class::{complete, CompletionClass};
pub use classify::{classify, find_directed_cycle, PropertyReport};
pub use pog::{OrderKind, Ordering, OrientedGraph, Pog};

/// Either a constructed object or a refutation certificate.
pub type Verdict<T> = std::result::Result<T, Certificate>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid pog: {0}")]
    Invariant(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("every vertex has an outgoing arc; no sink to start the search from")]
    NoZeroOutdegreeStart,
    #[error("input is not in the required class: {0}")]
    NotInClass(String),
    #[error("ordering is not excellent for the input")]
    NotExcellent,
    #[error("input has no round ordering")]
    NotRound,
    #[error("input is not a locally transitive tournament")]
    NotLtt,
    #[error("assignment does not satisfy the formula (clause {clause})")]
    NotSatisfying { clause: usize },
    #[error("the orientation fixed by the assignment has no excellent ordering")]
    NoExcellentOrdering,
    #[error("instance exceeds the size guard: {0}")]
    SizeGuard(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("unsupported instance: {0}")]
    UnsupportedInstance(String),
    #[error("malformed formula: {0}")]
    MalformedFormula(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("input is not friendly ({})", .0.tag())]
    NotFriendly(Box<Certificate>),
}

pub type Result<T> = std::result::Result<T, Error>;
