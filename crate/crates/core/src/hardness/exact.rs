use crate::classify::classify;
use crate::pog::{complete_closure, Ordering, OrientedGraph, Pog};
use crate::round::{
    check_ordering, find_round_ordering, is_excellent, round_to_ltt_with, saturate_to_round_lt, OrderingProperty,
};
use crate::{Error, Result};

/// Most unoriented edges accepted when enumerating or counting.
pub const ENUMERATION_EDGE_LIMIT: usize = 22;
/// Most unoriented edges accepted when looking for one completion.
pub const SEARCH_EDGE_LIMIT: usize = 66;
/// Most vertices for the excellent-ordering target and the ordering
/// searches.
pub const ORDERING_SEARCH_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Locally transitive tournament; the underlying graph must be complete.
    Ltt,
    /// Locally transitive local tournament.
    Ltlt,
    LocalTournament,
    InTournament,
    /// Input must be oriented; completions are the locally transitive
    /// tournaments containing it, which exist exactly when it has an
    /// excellent ordering.
    ExcellentOrdering,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    Enumerate { limit: usize },
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    /// No completion exists.
    None,
    /// Completions sorted by arc list; a single one in [`SearchMode::First`].
    Found(Vec<OrientedGraph>),
    Count(u64),
}

/// Bitset state of a partial orientation.
struct State {
    out: Vec<u64>,
    inn: Vec<u64>,
    adj: Vec<u64>,
    target: Target,
}

impl State {
    fn bit(v: usize) -> u64 {
        1u64 << v
    }

    fn add(&mut self, a: usize, b: usize) {
        self.out[a] |= Self::bit(b);
        self.inn[b] |= Self::bit(a);
    }

    fn remove(&mut self, a: usize, b: usize) {
        self.out[a] &= !Self::bit(b);
        self.inn[b] &= !Self::bit(a);
    }

    /// Whether arc `a -> b`, already present, takes part in a violation.
    fn violated(&self, a: usize, b: usize) -> bool {
        let lt_out = self.out[a] & !self.adj[b] & !Self::bit(b) != 0;
        let lt_in = self.inn[b] & !self.adj[a] & !Self::bit(a) != 0;
        match self.target {
            Target::InTournament => lt_in,
            Target::LocalTournament => lt_out || lt_in,
            Target::Ltt | Target::Ltlt | Target::ExcellentOrdering => {
                lt_out || lt_in || self.transitivity_violated(a, b)
            }
        }
    }

    /// A directed triangle through the arc `a -> b` inside one neighbourhood,
    /// or one that `b` closes in `N+(a)` or `a` closes in `N-(b)`.
    fn transitivity_violated(&self, a: usize, b: usize) -> bool {
        let mut zs = self.out[b] & self.inn[a];
        while zs != 0 {
            let z = zs.trailing_zeros() as usize;
            zs &= zs - 1;
            let common_in = self.inn[a] & self.inn[b] & self.inn[z];
            let common_out = self.out[a] & self.out[b] & self.out[z];
            if common_in | common_out != 0 {
                return true;
            }
        }
        let mut xs = self.out[a] & self.out[b];
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            if self.out[x] & self.out[a] & self.inn[b] != 0 {
                return true;
            }
        }
        let mut xs = self.inn[b] & self.out[a];
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            if self.out[x] & self.inn[b] & self.inn[a] != 0 {
                return true;
            }
        }
        false
    }

    fn try_arc(&mut self, a: usize, b: usize) -> bool {
        self.add(a, b);
        let ok = !self.violated(a, b);
        self.remove(a, b);
        ok
    }
}

struct Search<'a> {
    state: State,
    edges: Vec<(usize, usize)>,
    open: Vec<bool>,
    mode: SearchMode,
    found: Vec<Vec<(usize, usize)>>,
    count: u64,
    base: &'a Pog,
}

impl Search<'_> {
    /// Returns `true` to stop.
    fn run(&mut self) -> bool {
        let mut pick: Option<(usize, Vec<(usize, usize)>)> = None;
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if !self.open[k] {
                continue;
            }
            let mut options = Vec::with_capacity(2);
            for (a, b) in [(u, v), (v, u)] {
                if self.state.try_arc(a, b) {
                    options.push((a, b));
                }
            }
            if options.is_empty() {
                return false;
            }
            let better = pick.as_ref().is_none_or(|(_, o)| options.len() < o.len());
            if better {
                let forced = options.len() == 1;
                pick = Some((k, options));
                if forced {
                    break;
                }
            }
        }
        let Some((k, options)) = pick else {
            return self.leaf();
        };
        self.open[k] = false;
        for (a, b) in options {
            self.state.add(a, b);
            let stop = self.run();
            self.state.remove(a, b);
            if stop {
                self.open[k] = true;
                return true;
            }
        }
        self.open[k] = true;
        false
    }

    fn leaf(&mut self) -> bool {
        self.count += 1;
        match self.mode {
            SearchMode::Count => false,
            SearchMode::First => {
                self.found.push(self.arcs());
                true
            }
            SearchMode::Enumerate { limit } => {
                self.found.push(self.arcs());
                self.found.len() >= limit
            }
        }
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.base.n();
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if self.state.out[u] >> v & 1 == 1 {
                    arcs.push((u, v));
                }
            }
        }
        arcs
    }
}

fn in_class(d: &OrientedGraph, target: Target) -> bool {
    let r = classify(d);
    match target {
        Target::Ltt | Target::ExcellentOrdering => r.is_tournament && r.is_locally_transitive_lt,
        Target::Ltlt => r.is_locally_transitive_lt,
        Target::LocalTournament => r.is_local_tournament,
        Target::InTournament => r.is_in_tournament,
    }
}

/// Backtracking search over the unoriented edges of `p`, taking the most
/// constrained edge first and pruning on local violations.
pub fn exact_complete(p: &Pog, target: Target, mode: SearchMode) -> Result<ExactOutcome> {
    let base = match target {
        Target::ExcellentOrdering => {
            if !p.is_oriented() {
                return Err(Error::NotInClass("the excellent-ordering target takes an oriented graph".into()));
            }
            if p.n() > ORDERING_SEARCH_LIMIT {
                return Err(Error::SizeGuard(format!("{} vertices, limit {ORDERING_SEARCH_LIMIT}", p.n())));
            }
            complete_closure(&OrientedGraph::try_from(p.clone()).expect("oriented"))
        }
        _ => p.clone(),
    };
    let n = base.n();
    if n > 64 {
        return Err(Error::SizeGuard(format!("{n} vertices, limit 64")));
    }
    let edges = base.edges();
    let limit = match mode {
        SearchMode::First => SEARCH_EDGE_LIMIT,
        _ => ENUMERATION_EDGE_LIMIT,
    };
    if edges.len() > limit {
        return Err(Error::SizeGuard(format!("{} unoriented edges, limit {limit}", edges.len())));
    }
    let empty = || match mode {
        SearchMode::Count => ExactOutcome::Count(0),
        _ => ExactOutcome::None,
    };
    if target == Target::Ltt && !base.is_complete() {
        return Ok(empty());
    }
    let mut state = State { out: vec![0; n], inn: vec![0; n], adj: vec![0; n], target };
    for u in 0..n {
        for v in base.neighbours(u) {
            state.adj[u] |= State::bit(v);
        }
    }
    let arcs = base.arcs();
    for &(u, v) in &arcs {
        state.add(u, v);
    }
    if arcs.iter().any(|&(u, v)| state.violated(u, v)) {
        return Ok(empty());
    }
    let open = vec![true; edges.len()];
    let mut search = Search { state, edges, open, mode, found: Vec::new(), count: 0, base: &base };
    search.run();
    if let SearchMode::Count = mode {
        return Ok(ExactOutcome::Count(search.count));
    }
    let mut found = search.found;
    if found.is_empty() {
        return Ok(ExactOutcome::None);
    }
    found.sort();
    let graphs = found
        .into_iter()
        .map(|arcs| {
            let d = OrientedGraph::from_arcs(base.names(), &arcs).expect("search keeps pog invariants");
            assert!(in_class(&d, target) && d.contains_arcs_of(&base), "search returned an invalid completion");
            d
        })
        .collect();
    Ok(ExactOutcome::Found(graphs))
}

/// A locally transitive tournament containing `d`, built from an excellent
/// ordering of `d`.
pub fn ordering_to_ltt(d: &OrientedGraph, o: &Ordering) -> Result<OrientedGraph> {
    if o.len() != d.n() {
        return Err(Error::InvalidOrdering("ordering and graph sizes differ".into()));
    }
    if !is_excellent(d, o) {
        return Err(Error::NotExcellent);
    }
    let round = saturate_to_round_lt(d, o)?;
    round_to_ltt_with(&round, o)
}

/// An excellent ordering for every oriented graph contained in `t`: the
/// round ordering of `t`.
pub fn ltt_to_ordering(t: &OrientedGraph) -> Result<Ordering> {
    let r = classify(t);
    if !(r.is_tournament && r.is_locally_transitive_lt) {
        return Err(Error::NotLtt);
    }
    Ok(find_round_ordering(t).expect("locally transitive tournaments are round"))
}

/// Visits cyclic orderings with vertex 0 first, the rest in lexicographic
/// order, until `accept` holds.
fn search_orderings(d: &Pog, accept: impl Fn(&Ordering) -> bool) -> Result<Option<Ordering>> {
    let n = d.n();
    if n > ORDERING_SEARCH_LIMIT.min(10) {
        return Err(Error::SizeGuard(format!("{n} vertices, limit 10")));
    }
    if n == 0 {
        return Ok(Some(Ordering::cyclic(Vec::new())?));
    }
    let mut seq: Vec<usize> = (0..n).collect();
    loop {
        let o = Ordering::cyclic(seq.clone())?;
        if accept(&o) {
            return Ok(Some(o));
        }
        if !next_permutation(&mut seq[1..]) {
            return Ok(None);
        }
    }
}

fn next_permutation(s: &mut [usize]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let Some(i) = (0..s.len() - 1).rev().find(|&i| s[i] < s[i + 1]) else {
        return false;
    };
    let j = (i + 1..s.len()).rev().find(|&j| s[j] > s[i]).expect("successor exists");
    s.swap(i, j);
    s[i + 1..].reverse();
    true
}

/// First nice cyclic ordering of `d`, by exhaustive search.
pub fn search_nice_ordering(d: &Pog) -> Result<Option<Ordering>> {
    search_orderings(d, |o| matches!(check_ordering(d, o, OrderingProperty::Nice), Ok(Ok(()))))
}

/// First excellent cyclic ordering of `d`, by exhaustive search.
pub fn search_excellent_ordering(d: &Pog) -> Result<Option<Ordering>> {
    search_orderings(d, |o| is_excellent(d, o))
}
