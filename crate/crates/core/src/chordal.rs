//! LBFS, perfect elimination orderings, the lexicographic 2-colouring and
//! completion to acyclic local tournaments.

use std::collections::VecDeque;

use crate::auxgraph::{build_aux, closure_in_mode, AuxMode, Closure};
use crate::certificate::{Certificate, ForcedArc};
use crate::classify::{classify, find_directed_cycle};
use crate::pog::{Ordering, OrientedGraph, Pog};
use crate::{Error, Result, Verdict};

/// Lexicographic breadth-first search on the underlying graph of `g`.
///
/// Returns the visit order: the first vertex visited gets the highest label
/// `v_n`, so the reversal of the result is the elimination ordering. Ties
/// go to the smallest index. With `arc_aware` the search starts at the
/// smallest vertex without out-going arcs and, among tied vertices, prefers
/// those with no out-neighbour left unvisited.
pub fn lbfs(g: &Pog, arc_aware: bool) -> Result<Ordering> {
    let n = g.n();
    if n == 0 {
        return Ordering::linear(Vec::new());
    }
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let out: Vec<Vec<usize>> = (0..n).map(|v| g.out_neighbours(v)).collect();
    if arc_aware && (0..n).all(|v| !out[v].is_empty()) {
        return Err(Error::NoZeroOutdegreeStart);
    }
    for step in 0..n {
        let free_of_out = |v: usize, visited: &[bool]| out[v].iter().all(|&w| visited[w]);
        let mut best: Option<usize> = None;
        for v in (0..n).filter(|&v| !visited[v]) {
            let better = match best {
                None => true,
                Some(b) => match label[v].cmp(&label[b]) {
                    std::cmp::Ordering::Greater => true,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => arc_aware && free_of_out(v, &visited) && !free_of_out(b, &visited),
                },
            };
            if better {
                best = Some(v);
            }
        }
        let v = best.expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        let number = n - step;
        for w in 0..n {
            if !visited[w] && g.adjacent(v, w) {
                label[w].push(number);
            }
        }
    }
    Ordering::linear(order)
}

/// The elimination ordering `v_1, ..., v_n` produced by LBFS.
pub fn lbfs_peo(g: &Pog, arc_aware: bool) -> Result<Ordering> {
    lbfs(g, arc_aware).map(|o| o.reversed())
}

/// Checks that `order` is a perfect elimination ordering of the underlying
/// graph. A violation `(x, y, z)` has `x` before `y` before `z`, `xy`, `xz`
/// adjacent and `yz` not.
pub fn check_peo(g: &Pog, order: &Ordering) -> std::result::Result<(), (usize, usize, usize)> {
    let seq = order.seq();
    for (i, &x) in seq.iter().enumerate() {
        let later: Vec<usize> = seq[i + 1..].iter().copied().filter(|&w| g.adjacent(x, w)).collect();
        for (a, &y) in later.iter().enumerate() {
            for &z in &later[a + 1..] {
                if !g.adjacent(y, z) {
                    return Err((x, y, z));
                }
            }
        }
    }
    Ok(())
}

/// Red pairs of the lexicographic 2-colouring with respect to `order`.
///
/// Components are coloured starting from their lexicographically smallest
/// uncoloured pair, which becomes red. The caller decides whether the red
/// pairs form an acyclic local tournament.
pub fn lex_two_colouring(g: &Pog, order: &Ordering) -> Vec<(usize, usize)> {
    let aux = build_aux(g, AuxMode::LocalTournament);
    let pos = order.positions();
    let mut by_rank: Vec<usize> = (0..aux.len()).collect();
    by_rank.sort_by_key(|&i| {
        let (u, v) = aux.pair(i);
        (pos[u], pos[v])
    });
    let mut colour: Vec<Option<bool>> = vec![None; aux.len()];
    for &s in &by_rank {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(true);
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            let c = colour[a].unwrap();
            for &b in aux.neighbours(a) {
                if colour[b].is_none() {
                    colour[b] = Some(!c);
                    queue.push_back(b);
                }
            }
        }
    }
    let mut red: Vec<(usize, usize)> =
        (0..aux.len()).filter(|&i| colour[i] == Some(true)).map(|i| aux.pair(i)).collect();
    red.sort_unstable();
    red
}

/// A chordless cycle on at least four vertices, if any.
pub fn find_hole(g: &Pog) -> Option<Vec<usize>> {
    let n = g.n();
    for x in 0..n {
        let nbrs = g.neighbours(x);
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if g.adjacent(y, z) {
                    continue;
                }
                let blocked: Vec<bool> = (0..n).map(|w| w != y && w != z && (w == x || g.adjacent(w, x))).collect();
                if let Some(path) = shortest_path(g, y, z, &blocked) {
                    let mut hole = vec![x];
                    hole.extend(path);
                    return Some(hole);
                }
            }
        }
    }
    None
}

/// Three pairwise non-adjacent vertices, each two joined by a path that
/// avoids the closed neighbourhood of the third.
pub fn find_asteroidal_triple(g: &Pog) -> Option<[usize; 3]> {
    let n = g.n();
    let avoiding = |c: usize| -> Vec<bool> { (0..n).map(|w| w == c || g.adjacent(w, c)).collect() };
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.adjacent(a, c) || g.adjacent(b, c) {
                    continue;
                }
                if shortest_path(g, a, b, &avoiding(c)).is_some()
                    && shortest_path(g, b, c, &avoiding(a)).is_some()
                    && shortest_path(g, a, c, &avoiding(b)).is_some()
                {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Pog, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    if blocked[from] || blocked[to] {
        return None;
    }
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in 0..n {
            if prev[w] == usize::MAX && !blocked[w] && g.adjacent(u, w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Certificate for a directed cycle of the closure, justifying every arc
/// that the input pog does not contain.
pub(crate) fn cycle_certificate(
    p: &Pog,
    closure: &Closure,
    cycle: Vec<usize>,
    location: Option<crate::certificate::CycleLocation>,
    extra: &[(usize, usize)],
) -> Certificate {
    let mut forced = Vec::new();
    let k = cycle.len();
    let mut arcs: Vec<(usize, usize)> = (0..k).map(|i| (cycle[i], cycle[(i + 1) % k])).collect();
    arcs.extend_from_slice(extra);
    for (u, v) in arcs {
        if !p.is_arc(u, v) && forced.iter().all(|f: &ForcedArc| f.arc != (u, v)) {
            forced.push(ForcedArc { arc: (u, v), walk: closure.justify(u, v) });
        }
    }
    Certificate::DirectedCycle { cycle, location, forced }
}

/// Certificate that the underlying graph is not a proper interval graph,
/// given that its auxiliary graph is bipartite.
pub(crate) fn not_proper_interval(g: &Pog) -> Certificate {
    if let Some(hole) = find_hole(g) {
        return Certificate::NotChordal { hole };
    }
    if let Some(triple) = find_asteroidal_triple(g) {
        return Certificate::AsteroidalTriple { triple };
    }
    // A claw-free chordal graph without an asteroidal triple is a proper
    // interval graph, so callers only get here on an internal error.
    panic!("graph rejected as non proper interval but no obstruction found");
}

/// Completes `p` to an acyclic local tournament.
pub fn complete_to_acyclic_lt(p: &Pog) -> Verdict<OrientedGraph> {
    let closure = closure_in_mode(p, AuxMode::LocalTournament)?;
    let closed = &closure.pog;
    if let Some(cycle) = find_directed_cycle(closed) {
        return Err(cycle_certificate(p, &closure, cycle, None, &[]));
    }
    let peo = lbfs_peo(closed, true).expect("an acyclic pog has a sink");
    let g = closed.underlying();
    if check_peo(&g, &peo).is_err() {
        return Err(not_proper_interval(&g));
    }
    let red = lex_two_colouring(&g, &peo);
    let mut out = g.clone();
    for &(u, v) in &red {
        out.orient(u, v).expect("red pairs cover each edge once");
    }
    let d = OrientedGraph::try_from(out).expect("every edge has a red pair");
    let report = classify(&d);
    if report.is_acyclic && report.is_local_tournament && d.contains_arcs_of(closed) {
        Ok(d)
    } else {
        Err(not_proper_interval(&g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify_certificate;

    fn pog(text: &str) -> Pog {
        Pog::parse(text).unwrap()
    }

    #[test]
    fn lbfs_on_triangle_is_input_order() {
        let k3 = pog("edge a b\nedge b c\nedge a c");
        assert_eq!(lbfs(&k3, false).unwrap().seq(), &[0, 1, 2]);
        assert!(check_peo(&k3, &lbfs_peo(&k3, false).unwrap()).is_ok());
    }

    #[test]
    fn four_cycle_has_no_peo() {
        let c4 = pog("edge a b\nedge b c\nedge c d\nedge d a");
        let peo = lbfs_peo(&c4, false).unwrap();
        assert!(check_peo(&c4, &peo).is_err());
        assert_eq!(find_hole(&c4).map(|h| h.len()), Some(4));
    }

    #[test]
    fn peo_examples() {
        let path = pog("edge a b\nedge b c");
        assert!(check_peo(&path, &Ordering::linear(vec![0, 2, 1]).unwrap()).is_ok());
        assert!(check_peo(&path, &Ordering::linear(vec![1, 0, 2]).unwrap()).is_err());
        assert!(check_peo(&Pog::default(), &Ordering::linear(vec![]).unwrap()).is_ok());
    }

    #[test]
    fn arc_aware_lbfs_keeps_arcs_forward() {
        let p = pog("arc a b\nedge b c");
        let peo = lbfs_peo(&p, true).unwrap();
        let pos = peo.positions();
        assert!(pos[0] < pos[1]);
        let cyc = pog("arc a b\narc b c\narc c a");
        assert!(matches!(lbfs(&cyc, true), Err(Error::NoZeroOutdegreeStart)));
    }

    #[test]
    fn lex_colouring_small_graphs() {
        let path = pog("edge a b\nedge b c");
        let peo = lbfs_peo(&path, false).unwrap();
        let red = lex_two_colouring(&path, &peo);
        assert!(red == vec![(0, 1), (1, 2)] || red == vec![(1, 0), (2, 1)]);
        let k3 = pog("edge a b\nedge b c\nedge a c");
        let red = lex_two_colouring(&k3, &lbfs_peo(&k3, false).unwrap());
        let mut d = k3.clone();
        for (u, v) in red {
            d.orient(u, v).unwrap();
        }
        assert!(classify(&d).is_acyclic);
    }

    #[test]
    fn acyclic_completions() {
        let d = complete_to_acyclic_lt(&pog("v a\nv b\nv c\nedge a b\narc c b")).unwrap();
        assert_eq!(d.arcs(), vec![(1, 0), (2, 1)]);

        let cyc = pog("arc a b\narc b c\narc c a");
        let cert = complete_to_acyclic_lt(&cyc).unwrap_err();
        assert_eq!(cert.tag(), "DirectedCycle");
        assert!(verify_certificate(&cyc, &cert));

        let c4 = pog("edge a b\nedge b c\nedge c d\nedge d a");
        let cert = complete_to_acyclic_lt(&c4).unwrap_err();
        assert_eq!(cert.tag(), "NotChordal");
        assert!(verify_certificate(&c4, &cert));

        let net = pog("edge a b\nedge b c\nedge a c\nedge a x\nedge b y\nedge c z");
        let cert = complete_to_acyclic_lt(&net).unwrap_err();
        assert!(verify_certificate(&net, &cert));

        let tent = pog("edge a b\nedge b c\nedge a c\nedge x a\nedge x b\nedge y b\nedge y c\nedge z a\nedge z c");
        let cert = complete_to_acyclic_lt(&tent).unwrap_err();
        assert_eq!(cert.tag(), "AsteroidalTriple");
        assert!(verify_certificate(&tent, &cert));
    }

    #[test]
    fn forced_arcs_close_a_cycle() {
        let p = pog("arc a b\narc b c\nedge c a\narc y c\nedge y b");
        let cert = complete_to_acyclic_lt(&p).unwrap_err();
        match &cert {
            Certificate::DirectedCycle { forced, .. } => {
                assert_eq!(forced.len(), 1);
                assert_eq!(forced[0].arc, (2, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_certificate(&p, &cert));
    }
}
