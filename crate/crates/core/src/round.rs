//! Round, excellent and nice cyclic orderings, and the completions they
//! drive: excellent pogs to oriented graphs, oriented graphs to round local
//! tournaments and round local tournaments to locally transitive tournaments.

use serde::Serialize;

use crate::classify::{classify, topological_order};
use crate::pog::{Ordering, OrientedGraph, Pog};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderingProperty {
    Round,
    Excellent,
    Nice,
}

impl std::str::FromStr for OrderingProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "round" => Ok(OrderingProperty::Round),
            "excellent" => Ok(OrderingProperty::Excellent),
            "nice" => Ok(OrderingProperty::Nice),
            other => Err(Error::InvalidOrdering(format!("unknown ordering property `{other}`"))),
        }
    }
}

/// The first offending configuration found when scanning in ordering order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Round orderings are only defined for oriented graphs.
    Unoriented { u: usize, v: usize },
    /// The in- or out-neighbourhood of `vertex` is not the block of
    /// vertices right before or after it.
    Round { vertex: usize },
    /// Arcs `first = (i, j)` and `second = (s, t)` appear in cyclic order
    /// `i, t, s, j`.
    Excellent { first: (usize, usize), second: (usize, usize) },
    /// Arcs `i -> k` and `j -> i` with cyclic order `k, i, j`.
    Nice { k: usize, i: usize, j: usize },
}

/// Cyclic offsets measured from a fixed ordering.
struct Cyc {
    pos: Vec<usize>,
    n: usize,
}

impl Cyc {
    fn new(o: &Ordering) -> Cyc {
        Cyc { pos: o.positions(), n: o.len() }
    }

    /// Steps forward from `a` to `b`.
    fn off(&self, a: usize, b: usize) -> usize {
        (self.pos[b] + self.n - self.pos[a]) % self.n
    }
}

fn check_len(p: &Pog, o: &Ordering) -> Result<()> {
    if o.len() != p.n() {
        return Err(Error::InvalidOrdering(format!("ordering has {} vertices, graph has {}", o.len(), p.n())));
    }
    Ok(())
}

/// Checks `o` against `prop`. Excellent and nice only look at arcs.
pub fn check_ordering(p: &Pog, o: &Ordering, prop: OrderingProperty) -> Result<std::result::Result<(), Violation>> {
    check_len(p, o)?;
    Ok(match prop {
        OrderingProperty::Round => round_violation(p, o),
        OrderingProperty::Excellent => excellent_violation(p, o),
        OrderingProperty::Nice => nice_violation(p, o),
    }
    .map_or(Ok(()), Err))
}

fn round_violation(p: &Pog, o: &Ordering) -> Option<Violation> {
    if let Some(&(u, v)) = p.edges().first() {
        return Some(Violation::Unoriented { u, v });
    }
    let n = p.n();
    let seq = o.seq();
    for (i, &v) in seq.iter().enumerate() {
        let dp = p.out_neighbours(v).len();
        let dm = p.in_neighbours(v).len();
        let outs_ok = (1..=dp).all(|k| p.is_arc(v, seq[(i + k) % n]));
        let ins_ok = (1..=dm).all(|k| p.is_arc(seq[(i + n - k) % n], v));
        if !outs_ok || !ins_ok {
            return Some(Violation::Round { vertex: v });
        }
    }
    None
}

fn arcs_by_position(p: &Pog, o: &Ordering) -> Vec<(usize, usize)> {
    let pos = o.positions();
    let mut arcs = p.arcs();
    arcs.sort_by_key(|&(u, v)| (pos[u], pos[v]));
    arcs
}

fn excellent_violation(p: &Pog, o: &Ordering) -> Option<Violation> {
    let c = Cyc::new(o);
    let arcs = arcs_by_position(p, o);
    for &(i, j) in &arcs {
        let span = c.off(i, j);
        for &(s, t) in &arcs {
            if c.off(i, t) < c.off(i, s) && c.off(i, s) <= span {
                return Some(Violation::Excellent { first: (i, j), second: (s, t) });
            }
        }
    }
    None
}

fn nice_violation(p: &Pog, o: &Ordering) -> Option<Violation> {
    let c = Cyc::new(o);
    for &i in o.seq() {
        let outs = p.out_neighbours(i);
        let ins = p.in_neighbours(i);
        let mut best: Option<(usize, usize, usize)> = None;
        for &k in &outs {
            for &j in &ins {
                if c.off(i, j) < c.off(i, k) {
                    let key = (c.off(i, k), c.off(i, j));
                    if best.is_none_or(|(bk, bj, _)| key < (c.off(i, bk), c.off(i, bj))) {
                        best = Some((k, j, i));
                    }
                }
            }
        }
        if let Some((k, j, i)) = best {
            return Some(Violation::Nice { k, i, j });
        }
    }
    None
}

pub fn is_excellent(p: &Pog, o: &Ordering) -> bool {
    o.len() == p.n() && excellent_violation(p, o).is_none()
}

pub fn is_round(p: &Pog, o: &Ordering) -> bool {
    o.len() == p.n() && round_violation(p, o).is_none()
}

/// A round ordering of an oriented graph, if one exists.
///
/// In a round ordering each vertex with an out-neighbour is followed by the
/// source of its out-neighbourhood, and a vertex without out-neighbours is
/// only possible when its component is acyclic. That makes the ordering of a
/// connected input unique up to rotation.
pub fn find_round_ordering(d: &Pog) -> Option<Ordering> {
    if !d.is_oriented() {
        return None;
    }
    let n = d.n();
    let comps = d.components();
    let seq = if comps.len() <= 1 {
        match topological_order(d) {
            Some(order) => order,
            None => successor_chain(d)?,
        }
    } else {
        let mut seq = Vec::with_capacity(n);
        for comp in &comps {
            let sub = d.induced(comp);
            let order = topological_order(&sub)?;
            seq.extend(order.into_iter().map(|i| comp[i]));
        }
        seq
    };
    let o = Ordering::cyclic(seq).ok()?;
    is_round(d, &o).then_some(o)
}

fn successor_chain(d: &Pog) -> Option<Vec<usize>> {
    let n = d.n();
    let mut placed = vec![false; n];
    let mut seq = vec![0];
    placed[0] = true;
    let mut cur = 0;
    while seq.len() < n {
        let outs = d.out_neighbours(cur);
        let next = *outs.iter().find(|&&w| outs.iter().all(|&x| !d.is_arc(x, w)))?;
        if placed[next] {
            return None;
        }
        placed[next] = true;
        seq.push(next);
        cur = next;
    }
    Some(seq)
}

/// Arcs of `p` not dominated by any other arc with respect to `c`.
fn maximal_arcs(p: &Pog, c: &Cyc) -> Vec<(usize, usize)> {
    let arcs = p.arcs();
    arcs.iter()
        .copied()
        .filter(|&(s, t)| {
            !arcs.iter().any(|&(a, b)| (a, b) != (s, t) && c.off(a, s) < c.off(a, t) && c.off(a, t) <= c.off(a, b))
        })
        .collect()
}

/// Pairs `(x, y)` inside the interval of arc `(a, b)`, `x` before `y`, for
/// which `keep` holds.
fn pairs_inside(p: &Pog, c: &Cyc, (a, b): (usize, usize), keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let span = c.off(a, b);
    let mut inside: Vec<usize> = (0..p.n()).filter(|&v| c.off(a, v) <= span).collect();
    inside.sort_by_key(|&v| c.off(a, v));
    let mut out = Vec::new();
    for (i, &x) in inside.iter().enumerate() {
        for &y in &inside[i + 1..] {
            if keep(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Orients every edge of `p` so that `o` stays excellent.
///
/// Edges inside the interval of a maximal arc follow the ordering; once none
/// is left, the earliest remaining edge is oriented forward and the maximal
/// arcs are recomputed.
pub fn complete_under_excellent(p: &Pog, o: &Ordering) -> Result<OrientedGraph> {
    check_len(p, o)?;
    if !is_excellent(p, o) {
        return Err(Error::NotExcellent);
    }
    let c = Cyc::new(o);
    let mut cur = p.clone();
    loop {
        let mut progress = false;
        for arc in maximal_arcs(&cur, &c) {
            for (x, y) in pairs_inside(&cur, &c, arc, |x, y| cur.is_edge(x, y)) {
                cur.orient(x, y).expect("unoriented edge");
                progress = true;
            }
        }
        if progress {
            continue;
        }
        let pos = o.positions();
        match cur.edges().into_iter().min_by_key(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]))) {
            None => break,
            Some((u, v)) => {
                let (x, y) = if pos[u] < pos[v] { (u, v) } else { (v, u) };
                cur.orient(x, y).expect("unoriented edge");
            }
        }
    }
    assert!(is_excellent(&cur, o), "completion broke excellence");
    Ok(OrientedGraph::try_from(cur).expect("all edges oriented"))
}

/// Adds arcs until `o` is a round ordering of a local tournament containing
/// `d`.
pub fn saturate_to_round_lt(d: &OrientedGraph, o: &Ordering) -> Result<OrientedGraph> {
    check_len(d, o)?;
    if !is_excellent(d, o) {
        return Err(Error::NotExcellent);
    }
    let c = Cyc::new(o);
    let mut cur = d.clone();
    // New arcs stay inside the intervals of the current maximal arcs, so the
    // set of maximal arcs is fixed and one pass suffices.
    for arc in maximal_arcs(&cur, &c) {
        for (x, y) in pairs_inside(&cur, &c, arc, |x, y| !cur.adjacent(x, y)) {
            cur.add_arc(x, y).expect("non-adjacent pair");
        }
    }
    assert!(is_round(&cur, o), "saturation is not round");
    assert!(classify(&cur).is_local_tournament, "saturation is not a local tournament");
    Ok(cur)
}

/// Extends a round local tournament to a locally transitive tournament.
pub fn round_to_ltt(d: &OrientedGraph) -> Result<OrientedGraph> {
    let o = find_round_ordering(d).ok_or(Error::NotRound)?;
    round_to_ltt_with(d, &o)
}

/// [`round_to_ltt`] for a known round ordering `o` of `d`.
pub fn round_to_ltt_with(d: &OrientedGraph, o: &Ordering) -> Result<OrientedGraph> {
    check_len(d, o)?;
    if !is_round(d, o) {
        return Err(Error::NotRound);
    }
    let n = d.n();
    let mut cur = d.clone();
    while let Some(&v) = o.seq().iter().find(|&&v| cur.degree(v) + 1 < n) {
        let rot = o.rotated_to(v);
        let seq = rot.seq();
        let dp = cur.out_degree(v);
        let dm = cur.in_degree(v);
        for &w in &seq[dp + 1..n - dm] {
            cur.add_arc(v, w).expect("non-neighbour of the first vertex");
        }
        cur = saturate_to_round_lt(&cur, o)?;
    }
    let report = classify(&cur);
    assert!(report.is_tournament && report.is_locally_transitive_lt);
    Ok(cur)
}
