//! The 3-SAT reduction to locally transitive tournament completion, its
//! gadgets, and an exact backtracking solver for small instances.

mod cnf;
mod exact;
mod gadgets;
mod satorder;

pub use cnf::CnfFormula;
pub use exact::{
    exact_complete, ltt_to_ordering, ordering_to_ltt, search_excellent_ordering, search_nice_ordering, ExactOutcome,
    SearchMode, Target, ENUMERATION_EDGE_LIMIT, ORDERING_SEARCH_LIMIT, SEARCH_EDGE_LIMIT,
};
pub use gadgets::{
    assignment_orientation, assignment_to_ordering, build_reduction, gadget, layout_ordering, GadgetKind,
    ReductionInstance, Role,
};
pub use satorder::sat_excellent_ordering;
