//! Completions to transitive tournaments, strong oriented graphs and
//! in-tournaments, plus cycle-factor tools.

use std::collections::VecDeque;

use crate::certificate::{CertClass, Certificate};
use crate::classify::{classify, find_directed_cycle, topological_order};
use crate::pog::{OrientedGraph, Pog};
use crate::twosat::{two_sat, TwoSatResult};
use crate::{Error, Result, Verdict};

/// Largest number of unoriented edges the cycle-factor search accepts.
pub const CYCLE_FACTOR_EDGE_LIMIT: usize = 20;

/// Completes `p` to a transitive tournament.
pub fn complete_to_transitive_tournament(p: &Pog) -> Verdict<OrientedGraph> {
    let n = p.n();
    for u in 0..n {
        for v in u + 1..n {
            if !p.adjacent(u, v) {
                return Err(Certificate::NonAdjacentPair { u, v });
            }
        }
    }
    if let Some(cycle) = find_directed_cycle(p) {
        return Err(Certificate::DirectedCycle { cycle, location: None, forced: Vec::new() });
    }
    let order = topological_order(p).expect("acyclic");
    let mut out = p.clone();
    for (i, &u) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            if out.is_edge(u, v) {
                out.orient(u, v).expect("edge slot");
            }
        }
    }
    Ok(OrientedGraph::try_from(out).expect("complete graph fully oriented"))
}

/// Unoriented edges whose removal disconnects the underlying graph.
fn unoriented_bridges(p: &Pog) -> Vec<(usize, usize)> {
    let n = p.n();
    let mut out = Vec::new();
    for (u, v) in p.edges() {
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for y in p.neighbours(x) {
                if !seen[y] && !((x, y) == (u, v) || (x, y) == (v, u)) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if !seen[v] {
            out.push((u, v));
        }
    }
    out
}

/// Reachability from `s`, treating edges as two-way and arcs as one-way.
fn mixed_reach(p: &Pog, s: usize, forward: bool) -> Vec<bool> {
    let n = p.n();
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for y in 0..n {
            let step = p.is_edge(x, y) || if forward { p.is_arc(x, y) } else { p.is_arc(y, x) };
            if step && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Why `p` has no strong completion, if it has none.
fn strong_obstruction(p: &Pog) -> Option<Certificate> {
    let n = p.n();
    if n <= 1 {
        return None;
    }
    let comps = p.components();
    if comps.len() > 1 {
        return Some(Certificate::DirectedCut { side: comps[0].clone() });
    }
    if let Some(&(u, v)) = unoriented_bridges(p).first() {
        return Some(Certificate::Bridge { u, v });
    }
    let fwd = mixed_reach(p, 0, true);
    if fwd.iter().any(|&b| !b) {
        return Some(Certificate::DirectedCut { side: (0..n).filter(|&v| !fwd[v]).collect() });
    }
    let back = mixed_reach(p, 0, false);
    if back.iter().any(|&b| !b) {
        return Some(Certificate::DirectedCut { side: (0..n).filter(|&v| back[v]).collect() });
    }
    None
}

/// Completes `p` to a strongly connected oriented graph.
///
/// Edges are oriented one at a time in sorted order, choosing `u -> v` for
/// `u < v` whenever that keeps the remainder completable.
pub fn complete_to_strong(p: &Pog) -> Verdict<OrientedGraph> {
    if let Some(cert) = strong_obstruction(p) {
        return Err(cert);
    }
    let mut cur = p.clone();
    for (u, v) in p.edges() {
        cur.orient(u, v).expect("edge slot");
        if strong_obstruction(&cur).is_some() {
            cur.unorient(u, v);
            cur.orient(v, u).expect("edge slot");
            debug_assert!(strong_obstruction(&cur).is_none());
        }
    }
    let d = OrientedGraph::try_from(cur).expect("all edges oriented");
    assert!(classify(&d).is_strong, "completion is not strong");
    Ok(d)
}

/// Completes `p` to an in-tournament (every in-neighbourhood a tournament)
/// through 2-SAT, one variable per edge.
pub fn complete_to_in_tournament(p: &Pog) -> Verdict<OrientedGraph> {
    let pairs = p.ug_edges();
    let n = p.n();
    let mut var = vec![0i32; n * n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        var[u * n + v] = k as i32 + 1;
        var[v * n + u] = -(k as i32 + 1);
    }
    // Literal for "x -> y".
    let lit = |x: usize, y: usize| var[x * n + y];
    let mut clauses = Vec::new();
    for (u, v) in p.arcs() {
        clauses.push((lit(u, v), lit(u, v)));
    }
    for c in 0..n {
        let nb = p.neighbours(c);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !p.adjacent(x, y) {
                    clauses.push((lit(c, x), lit(c, y)));
                }
            }
        }
    }
    match two_sat(pairs.len(), &clauses) {
        TwoSatResult::Sat(assign) => {
            let mut out = p.clone();
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if out.is_edge(u, v) {
                    let (a, b) = if assign[k] { (u, v) } else { (v, u) };
                    out.orient(a, b).expect("edge slot");
                }
            }
            let d = OrientedGraph::try_from(out).expect("all edges oriented");
            assert!(classify(&d).is_in_tournament, "completion is not an in-tournament");
            Ok(d)
        }
        TwoSatResult::Unsat { cycle, .. } => {
            let implications = cycle
                .into_iter()
                .map(|l| {
                    let (u, v) = pairs[l.unsigned_abs() as usize - 1];
                    if l > 0 {
                        (u, v)
                    } else {
                        (v, u)
                    }
                })
                .collect();
            Err(Certificate::NoCompletion { class: CertClass::InTournament, implications })
        }
    }
}

/// Whether the arcs of `d` contain a spanning collection of vertex-disjoint
/// directed cycles. Each vertex needs a distinct successor, which is a
/// perfect matching between out-copies and in-copies.
pub fn has_cycle_factor(d: &Pog) -> bool {
    cycle_factor(d).is_some()
}

/// Successor of each vertex in some cycle factor.
pub fn cycle_factor(d: &Pog) -> Option<Vec<usize>> {
    let n = d.n();
    let outs: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbours(v)).collect();
    let mut owner = vec![usize::MAX; n];
    fn augment(u: usize, outs: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &w in &outs[u] {
            if !seen[w] {
                seen[w] = true;
                if owner[w] == usize::MAX || augment(owner[w], outs, owner, seen) {
                    owner[w] = u;
                    return true;
                }
            }
        }
        false
    }
    for u in 0..n {
        let mut seen = vec![false; n];
        if !augment(u, &outs, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut succ = vec![0; n];
    for (w, &u) in owner.iter().enumerate() {
        succ[u] = w;
    }
    Some(succ)
}

/// Exhaustive search for an orientation whose arcs have a cycle factor.
///
/// Orientations are tried in lexicographic order over the sorted edges,
/// `u -> v` (for `u < v`) first. Returns the first hit or a
/// [`Certificate::NoCompletion`].
pub fn complete_to_cycle_factor_bruteforce(p: &Pog, edge_limit: usize) -> Result<Verdict<OrientedGraph>> {
    let edges = p.edges();
    if edges.len() > edge_limit {
        return Err(Error::SizeGuard(format!("{} unoriented edges, limit {edge_limit}", edges.len())));
    }
    let n = p.n();
    let mut cur = p.clone();
    let mut outs: Vec<usize> = (0..n).map(|v| p.out_neighbours(v).len()).collect();
    let mut ins: Vec<usize> = (0..n).map(|v| p.in_neighbours(v).len()).collect();
    let mut open: Vec<usize> = vec![0; n];
    for &(u, v) in &edges {
        open[u] += 1;
        open[v] += 1;
    }
    fn search(
        k: usize,
        edges: &[(usize, usize)],
        cur: &mut Pog,
        outs: &mut [usize],
        ins: &mut [usize],
        open: &mut [usize],
    ) -> bool {
        // A vertex with no edges left needs both an out-arc and an in-arc.
        let dead =
            |v: usize, outs: &[usize], ins: &[usize], open: &[usize]| open[v] == 0 && (outs[v] == 0 || ins[v] == 0);
        if k == edges.len() {
            return has_cycle_factor(cur);
        }
        let (u, v) = edges[k];
        open[u] -= 1;
        open[v] -= 1;
        for (a, b) in [(u, v), (v, u)] {
            cur.orient(a, b).expect("edge slot");
            outs[a] += 1;
            ins[b] += 1;
            if !dead(u, outs, ins, open) && !dead(v, outs, ins, open) && search(k + 1, edges, cur, outs, ins, open) {
                return true;
            }
            outs[a] -= 1;
            ins[b] -= 1;
            cur.unorient(a, b);
        }
        open[u] += 1;
        open[v] += 1;
        false
    }
    if search(0, &edges, &mut cur, &mut outs, &mut ins, &mut open) {
        Ok(Ok(OrientedGraph::try_from(cur).expect("all edges oriented")))
    } else {
        Ok(Err(Certificate::NoCompletion { class: CertClass::CycleFactor, implications: Vec::new() }))
    }
}

/// The pog of a digraph `b` (which may contain 2-cycles) whose 2-cycles
/// become edges and whose other arcs stay. Its completions with a cycle
/// factor correspond to cycle factors of `b` without 2-cycles.
pub fn reduction_from_digraph(n: usize, arcs: &[(usize, usize)]) -> Result<Pog> {
    let mut has = vec![false; n * n];
    for &(u, v) in arcs {
        if u >= n || v >= n || u == v {
            return Err(Error::Invariant(format!("arc ({u}, {v}) out of range or a loop")));
        }
        has[u * n + v] = true;
    }
    let mut p = Pog::with_size(n);
    for u in 0..n {
        for v in 0..n {
            if !has[u * n + v] || u == v {
                continue;
            }
            if has[v * n + u] {
                if u < v {
                    p.add_edge(u, v)?;
                }
            } else {
                p.add_arc(u, v)?;
            }
        }
    }
    Ok(p)
}

/// Maximum number of arc-disjoint `s`-`t` paths, capped at `cap`.
fn arc_connectivity(d: &Pog, s: usize, t: usize, cap: usize) -> usize {
    let n = d.n();
    let mut res = vec![0i32; n * n];
    for (u, v) in d.arcs() {
        res[u * n + v] = 1;
    }
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n {
                if prev[y] == usize::MAX && res[x * n + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            break;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            res[x * n + y] -= 1;
            res[y * n + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Whether the arcs of `d` stay strongly connected after deleting any
/// `k - 1` of them.
pub fn is_k_arc_strong(d: &Pog, k: usize) -> bool {
    let n = d.n();
    if n <= 1 || k == 0 {
        return true;
    }
    (1..n).all(|v| arc_connectivity(d, 0, v, k) >= k && arc_connectivity(d, v, 0, k) >= k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify_certificate;

    fn pog(text: &str) -> Pog {
        Pog::parse(text).unwrap()
    }

    #[test]
    fn transitive_tournament() {
        let p = pog("arc c a\nedge a b\nedge b c");
        let d = complete_to_transitive_tournament(&p).unwrap();
        assert!(d.is_arc(0, 1) && d.is_arc(1, 2) && d.is_arc(0, 2));
        let path = pog("edge a b\nedge b c");
        assert_eq!(complete_to_transitive_tournament(&path), Err(Certificate::NonAdjacentPair { u: 0, v: 2 }));
    }

    #[test]
    fn strong_examples() {
        let path = pog("edge a b\nedge b c");
        let cert = complete_to_strong(&path).unwrap_err();
        assert_eq!(cert, Certificate::Bridge { u: 0, v: 1 });
        assert!(verify_certificate(&path, &cert));
        let tri = pog("edge a b\nedge b c\nedge a c");
        assert!(classify(&complete_to_strong(&tri).unwrap()).is_strong);
        let cut = pog("arc a b\narc a c\nedge b c");
        let cert = complete_to_strong(&cut).unwrap_err();
        assert!(verify_certificate(&cut, &cert));
        let two = pog("v a\nv b");
        assert!(verify_certificate(&two, &complete_to_strong(&two).unwrap_err()));
    }

    #[test]
    fn claw_in_tournament() {
        let claw = pog("edge c x\nedge c y\nedge c z");
        let d = complete_to_in_tournament(&claw).unwrap();
        assert!(d.in_degree(0) <= 1);
        let bad = pog("arc x c\narc y c");
        let cert = complete_to_in_tournament(&bad).unwrap_err();
        assert!(verify_certificate(&bad, &cert));
    }

    #[test]
    fn cycle_factors() {
        let c3 = pog("arc a b\narc b c\narc c a");
        assert!(has_cycle_factor(&c3));
        assert!(!has_cycle_factor(&pog("arc a b\narc b c\narc a c")));
        let k4 = pog("edge a b\nedge a c\nedge a d\nedge b c\nedge b d\nedge c d");
        assert!(complete_to_cycle_factor_bruteforce(&k4, 20).unwrap().is_ok());
        let star = pog("edge c x\nedge c y");
        let cert = complete_to_cycle_factor_bruteforce(&star, 20).unwrap().unwrap_err();
        assert!(verify_certificate(&star, &cert));
        assert!(matches!(complete_to_cycle_factor_bruteforce(&k4, 3), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn digraph_reduction() {
        let p = reduction_from_digraph(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap();
        assert!(p.is_edge(0, 1) && p.is_arc(1, 2) && p.is_arc(2, 0));
    }

    #[test]
    fn arc_strength() {
        let c3 = pog("arc a b\narc b c\narc c a");
        assert!(is_k_arc_strong(&c3, 1));
        assert!(!is_k_arc_strong(&c3, 2));
    }
}
