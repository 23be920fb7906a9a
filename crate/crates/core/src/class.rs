//! Completion targets addressable by name.

use clap::ValueEnum;

use crate::auxgraph::{complete_via_aux, AuxMode};
use crate::certificate::CertClass;
use crate::chordal::complete_to_acyclic_lt;
use crate::completions::{
    complete_to_cycle_factor_bruteforce, complete_to_in_tournament, complete_to_strong,
    complete_to_transitive_tournament, CYCLE_FACTOR_EDGE_LIMIT,
};
use crate::friendly::complete_friendly;
use crate::hardness::{exact_complete, ExactOutcome, SearchMode, Target};
use crate::pog::{OrientedGraph, Pog};
use crate::{Certificate, Error, Result, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CompletionClass {
    Lt,
    AcyclicLt,
    LtltFriendly,
    LttExact,
    Transitive,
    InTournament,
    QuasiTransitive,
    Strong,
    CycleFactor,
}

impl CompletionClass {
    /// The kebab-case name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            CompletionClass::Lt => "lt",
            CompletionClass::AcyclicLt => "acyclic-lt",
            CompletionClass::LtltFriendly => "ltlt-friendly",
            CompletionClass::LttExact => "ltt-exact",
            CompletionClass::Transitive => "transitive",
            CompletionClass::InTournament => "in-tournament",
            CompletionClass::QuasiTransitive => "quasi-transitive",
            CompletionClass::Strong => "strong",
            CompletionClass::CycleFactor => "cycle-factor",
        }
    }
}

impl std::str::FromStr for CompletionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<CompletionClass> {
        CompletionClass::value_variants()
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnsupportedInstance(format!("unknown class `{s}`")))
    }
}

/// Completes `p` to `class`. The outer error covers inputs the chosen
/// algorithm does not accept (unfriendly pogs, size guards).
pub fn complete(p: &Pog, class: CompletionClass) -> Result<Verdict<OrientedGraph>> {
    Ok(match class {
        CompletionClass::Lt => complete_via_aux(p, AuxMode::LocalTournament),
        CompletionClass::QuasiTransitive => complete_via_aux(p, AuxMode::QuasiTransitive),
        CompletionClass::AcyclicLt => complete_to_acyclic_lt(p),
        CompletionClass::LtltFriendly => complete_friendly(p)?,
        CompletionClass::Transitive => complete_to_transitive_tournament(p),
        CompletionClass::InTournament => complete_to_in_tournament(p),
        CompletionClass::Strong => complete_to_strong(p),
        CompletionClass::CycleFactor => complete_to_cycle_factor_bruteforce(p, CYCLE_FACTOR_EDGE_LIMIT)?,
        CompletionClass::LttExact => match exact_complete(p, Target::Ltt, SearchMode::First)? {
            ExactOutcome::Found(mut v) => Ok(v.remove(0)),
            _ => Err(Certificate::NoCompletion { class: CertClass::Ltt, implications: vec![] }),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for &c in CompletionClass::value_variants() {
            assert_eq!(c.name().parse::<CompletionClass>().unwrap(), c);
            assert_eq!(c.to_possible_value().unwrap().get_name(), c.name());
        }
        assert!("nope".parse::<CompletionClass>().is_err());
    }
}
