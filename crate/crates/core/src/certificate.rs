//! Refutation certificates and their independent verifier.
//!
//! Certificates are generic over the vertex type: algorithms emit
//! `Certificate<usize>` and the JSON form uses vertex names.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::auxgraph::{aux_adjacent, build_aux, AuxMode};
use crate::pog::Pog;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "kebab-case")]
pub enum CycleLocation<V = usize> {
    /// All cycle vertices lie in one non-universal cell.
    Cell,
    OutNeighbourhood(V),
    InNeighbourhood(V),
}

/// An arc that every completion must contain, with the even walk in the
/// auxiliary graph that forces it from an arc of the pog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcedArc<V = usize> {
    pub arc: (V, V),
    pub walk: Vec<(V, V)>,
}

/// Target class of a [`Certificate::NoCompletion`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertClass {
    InTournament,
    CycleFactor,
    Ltt,
    Ltlt,
    LocalTournament,
    ExcellentOrdering,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Certificate<V = usize> {
    /// Odd closed walk in the auxiliary graph; the last pair is adjacent to
    /// the first.
    OddClosedWalkAux {
        mode: AuxMode,
        walk: Vec<(V, V)>,
    },
    /// Walk with an odd number of steps joining two arcs of the pog.
    OrientationConflict {
        mode: AuxMode,
        walk: Vec<(V, V)>,
    },
    /// Walk with an even number of steps from an arc of the pog to a pair
    /// whose edge is still unoriented.
    NotConsentaneous {
        walk: Vec<(V, V)>,
    },
    BadTriple {
        x: V,
        y: V,
        z: V,
    },
    /// Unoriented edge whose removal disconnects its ends.
    Bridge {
        u: V,
        v: V,
    },
    /// Every adjacent pair leaving `side` is an arc out of it.
    DirectedCut {
        side: Vec<V>,
    },
    /// Directed cycle on arcs of the pog and forced arcs.
    DirectedCycle {
        cycle: Vec<V>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        location: Option<CycleLocation<V>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        forced: Vec<ForcedArc<V>>,
    },
    NonAdjacentPair {
        u: V,
        v: V,
    },
    /// Chordless cycle on at least four vertices.
    NotChordal {
        hole: Vec<V>,
    },
    /// Three pairwise non-adjacent vertices, each pair joined by a path
    /// avoiding the closed neighbourhood of the third.
    AsteroidalTriple {
        triple: [V; 3],
    },
    /// Exhaustively refuted instance. For in-tournaments `implications` is a
    /// closed chain of implied arcs passing through some arc and its reverse.
    NoCompletion {
        class: CertClass,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        implications: Vec<(V, V)>,
    },
}

fn map_pairs<V, W, E>(
    xs: &[(V, V)],
    f: &mut impl FnMut(&V) -> std::result::Result<W, E>,
) -> std::result::Result<Vec<(W, W)>, E> {
    xs.iter().map(|(a, b)| Ok((f(a)?, f(b)?))).collect()
}

impl<V> Certificate<V> {
    pub fn tag(&self) -> &'static str {
        match self {
            Certificate::OddClosedWalkAux { .. } => "OddClosedWalkAux",
            Certificate::OrientationConflict { .. } => "OrientationConflict",
            Certificate::NotConsentaneous { .. } => "NotConsentaneous",
            Certificate::BadTriple { .. } => "BadTriple",
            Certificate::Bridge { .. } => "Bridge",
            Certificate::DirectedCut { .. } => "DirectedCut",
            Certificate::DirectedCycle { .. } => "DirectedCycle",
            Certificate::NonAdjacentPair { .. } => "NonAdjacentPair",
            Certificate::NotChordal { .. } => "NotChordal",
            Certificate::AsteroidalTriple { .. } => "AsteroidalTriple",
            Certificate::NoCompletion { .. } => "NoCompletion",
        }
    }

    pub fn try_map<W, E>(
        &self,
        mut f: impl FnMut(&V) -> std::result::Result<W, E>,
    ) -> std::result::Result<Certificate<W>, E> {
        use Certificate::*;
        Ok(match self {
            OddClosedWalkAux { mode, walk } => OddClosedWalkAux { mode: *mode, walk: map_pairs(walk, &mut f)? },
            OrientationConflict { mode, walk } => OrientationConflict { mode: *mode, walk: map_pairs(walk, &mut f)? },
            NotConsentaneous { walk } => NotConsentaneous { walk: map_pairs(walk, &mut f)? },
            BadTriple { x, y, z } => BadTriple { x: f(x)?, y: f(y)?, z: f(z)? },
            Bridge { u, v } => Bridge { u: f(u)?, v: f(v)? },
            DirectedCut { side } => {
                DirectedCut { side: side.iter().map(&mut f).collect::<std::result::Result<_, _>>()? }
            }
            DirectedCycle { cycle, location, forced } => DirectedCycle {
                cycle: cycle.iter().map(&mut f).collect::<std::result::Result<_, _>>()?,
                location: match location {
                    None => None,
                    Some(CycleLocation::Cell) => Some(CycleLocation::Cell),
                    Some(CycleLocation::OutNeighbourhood(v)) => Some(CycleLocation::OutNeighbourhood(f(v)?)),
                    Some(CycleLocation::InNeighbourhood(v)) => Some(CycleLocation::InNeighbourhood(f(v)?)),
                },
                forced: forced
                    .iter()
                    .map(|fa| Ok(ForcedArc { arc: (f(&fa.arc.0)?, f(&fa.arc.1)?), walk: map_pairs(&fa.walk, &mut f)? }))
                    .collect::<std::result::Result<_, _>>()?,
            },
            NonAdjacentPair { u, v } => NonAdjacentPair { u: f(u)?, v: f(v)? },
            NotChordal { hole } => NotChordal { hole: hole.iter().map(&mut f).collect::<std::result::Result<_, _>>()? },
            AsteroidalTriple { triple } => {
                AsteroidalTriple { triple: [f(&triple[0])?, f(&triple[1])?, f(&triple[2])?] }
            }
            NoCompletion { class, implications } => {
                NoCompletion { class: *class, implications: map_pairs(implications, &mut f)? }
            }
        })
    }
}

impl Certificate<usize> {
    /// Replaces vertex indices by the names used in `p`.
    pub fn named(&self, p: &Pog) -> Certificate<String> {
        self.try_map::<String, std::convert::Infallible>(|&v| Ok(p.name(v).to_string())).expect("infallible")
    }

    pub fn to_json(&self, p: &Pog) -> serde_json::Value {
        serde_json::to_value(self.named(p)).expect("certificates serialize")
    }

    /// Parses the JSON form and resolves names against `p`.
    pub fn from_json(text: &str, p: &Pog) -> Result<Certificate> {
        let named: Certificate<String> =
            serde_json::from_str(text).map_err(|e| Error::InvalidCertificate(e.to_string()))?;
        named.try_map(|name| p.vertex(name))
    }
}

struct Checker<'a> {
    p: &'a Pog,
}

impl Checker<'_> {
    fn valid(&self, v: usize) -> bool {
        v < self.p.n()
    }

    fn pair_ok(&self, (u, v): (usize, usize)) -> bool {
        self.valid(u) && self.valid(v) && u != v && self.p.adjacent(u, v)
    }

    fn walk_ok(&self, mode: AuxMode, walk: &[(usize, usize)]) -> bool {
        walk.iter().all(|&a| self.pair_ok(a)) && walk.windows(2).all(|w| aux_adjacent(self.p, mode, w[0], w[1]))
    }

    /// Reachability in the underlying graph with some vertices removed and
    /// optionally one edge ignored.
    fn connected_avoiding(&self, from: usize, to: usize, blocked: &[bool], skip_edge: Option<(usize, usize)>) -> bool {
        let n = self.p.n();
        if blocked[from] || blocked[to] {
            return false;
        }
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                return true;
            }
            for v in 0..n {
                if seen[v] || blocked[v] || !self.p.adjacent(u, v) {
                    continue;
                }
                if let Some((a, b)) = skip_edge {
                    if (u, v) == (a, b) || (u, v) == (b, a) {
                        continue;
                    }
                }
                seen[v] = true;
                queue.push_back(v);
            }
        }
        false
    }

    fn directed_cycle(&self, cycle: &[usize], location: &Option<CycleLocation>, forced: &[ForcedArc]) -> bool {
        let p = self.p;
        let mut extra: HashSet<(usize, usize)> = HashSet::new();
        for fa in forced {
            let (a, b) = fa.arc;
            let walk = &fa.walk;
            if !self.pair_ok((a, b))
                || walk.is_empty()
                || (walk.len() - 1) % 2 != 0
                || !self.walk_ok(AuxMode::LocalTournament, walk)
                || !p.is_arc(walk[0].0, walk[0].1)
                || *walk.last().unwrap() != (a, b)
            {
                return false;
            }
            extra.insert((a, b));
        }
        let is_arc = |u: usize, v: usize| p.is_arc(u, v) || extra.contains(&(u, v));
        let k = cycle.len();
        if k < 3 || cycle.iter().any(|&v| !self.valid(v)) {
            return false;
        }
        if cycle.iter().collect::<HashSet<_>>().len() != k {
            return false;
        }
        if !(0..k).all(|i| is_arc(cycle[i], cycle[(i + 1) % k])) {
            return false;
        }
        match location {
            None => true,
            Some(CycleLocation::OutNeighbourhood(c)) => self.valid(*c) && cycle.iter().all(|&v| is_arc(*c, v)),
            Some(CycleLocation::InNeighbourhood(c)) => self.valid(*c) && cycle.iter().all(|&v| is_arc(v, *c)),
            Some(CycleLocation::Cell) => {
                let n = p.n();
                let closed = |v: usize| -> Vec<bool> { (0..n).map(|u| u == v || p.adjacent(u, v)).collect() };
                let first = closed(cycle[0]);
                let universal = first.iter().all(|&b| b);
                !universal && cycle.iter().all(|&v| closed(v) == first)
            }
        }
    }

    fn implication_step(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        let p = self.p;
        // A unit clause: the reverse of an arc implies the arc.
        if a == (b.1, b.0) && p.is_arc(b.0, b.1) {
            return true;
        }
        // (x, v) forbids (y, v) for non-adjacent neighbours x, y of v.
        let (x, v) = a;
        let (v2, y) = b;
        v == v2 && x != y && !p.adjacent(x, y)
    }

    fn check(&self, c: &Certificate) -> bool {
        let p = self.p;
        match c {
            Certificate::OddClosedWalkAux { mode, walk } => {
                walk.len() % 2 == 1
                    && self.walk_ok(*mode, walk)
                    && aux_adjacent(p, *mode, *walk.last().unwrap(), walk[0])
            }
            Certificate::OrientationConflict { mode, walk } => {
                walk.len() >= 2
                    && walk.len() % 2 == 0
                    && self.walk_ok(*mode, walk)
                    && p.is_arc(walk[0].0, walk[0].1)
                    && {
                        let (u, v) = *walk.last().unwrap();
                        p.is_arc(u, v)
                    }
            }
            Certificate::NotConsentaneous { walk } => {
                !walk.is_empty()
                    && walk.len() % 2 == 1
                    && self.walk_ok(AuxMode::LocalTournament, walk)
                    && p.is_arc(walk[0].0, walk[0].1)
                    && {
                        let (u, v) = *walk.last().unwrap();
                        p.is_edge(u, v)
                    }
            }
            Certificate::BadTriple { x, y, z } => {
                let (x, y, z) = (*x, *y, *z);
                if !(self.pair_ok((x, y)) && self.pair_ok((y, z)) && self.pair_ok((x, z))) {
                    return false;
                }
                let aux = build_aux(p, AuxMode::LocalTournament);
                let comps = [aux.edge_component(x, y), aux.edge_component(y, z), aux.edge_component(x, z)];
                let distinct = comps[0] != comps[1] && comps[1] != comps[2] && comps[0] != comps[2];
                let oriented = [(x, y), (y, z), (x, z)].iter().filter(|&&(a, b)| !p.is_edge(a, b)).count();
                distinct && oriented == 2
            }
            Certificate::Bridge { u, v } => {
                let (u, v) = (*u, *v);
                self.pair_ok((u, v))
                    && p.is_edge(u, v)
                    && !self.connected_avoiding(u, v, &vec![false; p.n()], Some((u, v)))
            }
            Certificate::DirectedCut { side } => {
                let n = p.n();
                if side.is_empty() || side.iter().any(|&v| !self.valid(v)) {
                    return false;
                }
                let mut inside = vec![false; n];
                for &v in side {
                    inside[v] = true;
                }
                if inside.iter().all(|&b| b) {
                    return false;
                }
                (0..n).all(|u| (0..n).all(|v| !(inside[u] && !inside[v] && p.adjacent(u, v)) || p.is_arc(u, v)))
            }
            Certificate::DirectedCycle { cycle, location, forced } => self.directed_cycle(cycle, location, forced),
            Certificate::NonAdjacentPair { u, v } => self.valid(*u) && self.valid(*v) && u != v && !p.adjacent(*u, *v),
            Certificate::NotChordal { hole } => {
                let k = hole.len();
                k >= 4
                    && hole.iter().all(|&v| self.valid(v))
                    && hole.iter().collect::<HashSet<_>>().len() == k
                    && (0..k).all(|i| {
                        (i + 1..k).all(|j| {
                            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                            p.adjacent(hole[i], hole[j]) == consecutive
                        })
                    })
            }
            Certificate::AsteroidalTriple { triple } => {
                let t = *triple;
                if t.iter().any(|&v| !self.valid(v)) {
                    return false;
                }
                (0..3).all(|i| {
                    let (a, b, c) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
                    if a == b || p.adjacent(a, b) {
                        return false;
                    }
                    let blocked: Vec<bool> = (0..p.n()).map(|w| w == c || p.adjacent(w, c)).collect();
                    self.connected_avoiding(a, b, &blocked, None)
                })
            }
            Certificate::NoCompletion { class, implications } => match class {
                CertClass::InTournament => {
                    let k = implications.len();
                    k >= 2
                        && implications.iter().all(|&a| self.pair_ok(a))
                        && (0..k).all(|i| self.implication_step(implications[i], implications[(i + 1) % k]))
                        && implications.iter().any(|&(u, v)| implications.contains(&(v, u)))
                }
                CertClass::CycleFactor => crate::completions::complete_to_cycle_factor_bruteforce(
                    p,
                    crate::completions::CYCLE_FACTOR_EDGE_LIMIT,
                )
                .map(|r| r.is_err())
                .unwrap_or(false),
                other => {
                    let target = match other {
                        CertClass::Ltt => crate::hardness::Target::Ltt,
                        CertClass::Ltlt => crate::hardness::Target::Ltlt,
                        CertClass::LocalTournament => crate::hardness::Target::LocalTournament,
                        CertClass::ExcellentOrdering => crate::hardness::Target::ExcellentOrdering,
                        _ => unreachable!(),
                    };
                    matches!(
                        crate::hardness::exact_complete(p, target, crate::hardness::SearchMode::First),
                        Ok(crate::hardness::ExactOutcome::None)
                    )
                }
            },
        }
    }
}

/// Checks that `c` is a valid refutation for its tag against `p`.
pub fn verify_certificate(p: &Pog, c: &Certificate) -> bool {
    Checker { p }.check(c)
}
