//! Structural predicates on the arc digraph of a pog.

use serde::Serialize;

use crate::pog::Pog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Out,
    In,
}

/// Why a predicate failed. Vertex indices refer to the classified pog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// An unoriented edge.
    Edge {
        u: usize,
        v: usize,
    },
    /// Two distinct non-adjacent vertices.
    NonAdjacent {
        u: usize,
        v: usize,
    },
    /// Non-adjacent `x`, `y` both in the given neighbourhood of `centre`.
    NeighbourPair {
        centre: usize,
        side: Side,
        x: usize,
        y: usize,
    },
    /// A directed cycle inside the given neighbourhood of `centre`.
    CycleInNeighbourhood {
        centre: usize,
        side: Side,
        cycle: Vec<usize>,
    },
    /// `x -> y -> z` with `x`, `z` non-adjacent.
    OpenPath {
        x: usize,
        y: usize,
        z: usize,
    },
    Cycle {
        cycle: Vec<usize>,
    },
    /// Vertices reachable from (or reaching) the first vertex; not all of V.
    Unreachable {
        side: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub is_oriented: bool,
    pub is_tournament: bool,
    pub is_local_tournament: bool,
    pub is_locally_transitive_lt: bool,
    pub is_in_tournament: bool,
    pub is_quasi_transitive: bool,
    pub is_acyclic: bool,
    pub is_strong: bool,
    pub oriented_witness: Option<Witness>,
    pub tournament_witness: Option<Witness>,
    pub local_tournament_witness: Option<Witness>,
    pub locally_transitive_witness: Option<Witness>,
    pub in_tournament_witness: Option<Witness>,
    pub quasi_transitive_witness: Option<Witness>,
    pub acyclic_witness: Option<Witness>,
    pub strong_witness: Option<Witness>,
}

/// Evaluates every predicate. Class predicates look at arcs only, so on a
/// pog with unoriented edges they describe its arc digraph.
pub fn classify(p: &Pog) -> PropertyReport {
    let oriented_witness = p.edges().first().map(|&(u, v)| Witness::Edge { u, v });
    let tournament_witness = non_adjacent_pair(p);
    let local_tournament_witness = neighbour_pair(p, &[Side::Out, Side::In]);
    let in_tournament_witness = neighbour_pair(p, &[Side::In]);
    let locally_transitive_witness = neighbourhood_cycle(p).or_else(|| local_tournament_witness.clone());
    let quasi_transitive_witness = open_path(p);
    let acyclic_witness = find_directed_cycle(p).map(|cycle| Witness::Cycle { cycle });
    let strong_witness = strong_witness(p);
    PropertyReport {
        is_oriented: oriented_witness.is_none(),
        is_tournament: tournament_witness.is_none(),
        is_local_tournament: local_tournament_witness.is_none(),
        is_locally_transitive_lt: locally_transitive_witness.is_none(),
        is_in_tournament: in_tournament_witness.is_none(),
        is_quasi_transitive: quasi_transitive_witness.is_none(),
        is_acyclic: acyclic_witness.is_none(),
        is_strong: strong_witness.is_none(),
        oriented_witness,
        tournament_witness,
        local_tournament_witness,
        locally_transitive_witness,
        in_tournament_witness,
        quasi_transitive_witness,
        acyclic_witness,
        strong_witness,
    }
}

fn non_adjacent_pair(p: &Pog) -> Option<Witness> {
    let n = p.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !p.adjacent(u, v))
        .map(|(u, v)| Witness::NonAdjacent { u, v })
}

fn side_set(p: &Pog, v: usize, side: Side) -> Vec<usize> {
    match side {
        Side::Out => p.out_neighbours(v),
        Side::In => p.in_neighbours(v),
    }
}

fn neighbour_pair(p: &Pog, sides: &[Side]) -> Option<Witness> {
    for centre in 0..p.n() {
        let sets: Vec<(Side, Vec<usize>)> = sides.iter().map(|&s| (s, side_set(p, centre, s))).collect();
        let mut best: Option<(usize, usize, Side)> = None;
        for (side, set) in &sets {
            for (i, &x) in set.iter().enumerate() {
                if let Some(&y) = set[i + 1..].iter().find(|&&y| !p.adjacent(x, y)) {
                    if best.is_none_or(|(bx, by, _)| (x, y) < (bx, by)) {
                        best = Some((x, y, *side));
                    }
                    break;
                }
            }
        }
        if let Some((x, y, side)) = best {
            return Some(Witness::NeighbourPair { centre, side, x, y });
        }
    }
    None
}

fn neighbourhood_cycle(p: &Pog) -> Option<Witness> {
    for centre in 0..p.n() {
        for side in [Side::Out, Side::In] {
            let set = side_set(p, centre, side);
            let sub = p.induced(&set);
            if let Some(cycle) = find_directed_cycle(&sub) {
                let cycle = cycle.into_iter().map(|i| set[i]).collect();
                return Some(Witness::CycleInNeighbourhood { centre, side, cycle });
            }
        }
    }
    None
}

fn open_path(p: &Pog) -> Option<Witness> {
    let n = p.n();
    for x in 0..n {
        for y in p.out_neighbours(x) {
            for z in p.out_neighbours(y) {
                if z != x && !p.adjacent(x, z) {
                    return Some(Witness::OpenPath { x, y, z });
                }
            }
        }
    }
    None
}

/// A directed cycle on arcs only, starting at its smallest vertex.
pub fn find_directed_cycle(p: &Pog) -> Option<Vec<usize>> {
    let n = p.n();
    let out: Vec<Vec<usize>> = (0..n).map(|v| p.out_neighbours(v)).collect();
    // 0 = new, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < out[v].len() {
                let w = out[v][*next];
                *next += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let start = stack.iter().position(|&(u, _)| u == w).expect("on stack");
                        let mut cycle: Vec<usize> = stack[start..].iter().map(|&(u, _)| u).collect();
                        let m = cycle.iter().enumerate().min_by_key(|&(_, &u)| u).map(|(i, _)| i).unwrap();
                        cycle.rotate_left(m);
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Topological order of the arc digraph (smallest available index first).
pub fn topological_order(p: &Pog) -> Option<Vec<usize>> {
    let n = p.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| p.in_neighbours(v).len()).collect();
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for w in p.out_neighbours(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn reach(p: &Pog, from: usize, forward: bool) -> Vec<bool> {
    let n = p.n();
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            let step = if forward { p.is_arc(u, v) } else { p.is_arc(v, u) };
            if step && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

fn strong_witness(p: &Pog) -> Option<Witness> {
    if p.n() <= 1 {
        return None;
    }
    for forward in [true, false] {
        let seen = reach(p, 0, forward);
        if seen.iter().any(|&b| !b) {
            let side = (0..p.n()).filter(|&v| seen[v]).collect();
            return Some(Witness::Unreachable { side });
        }
    }
    None
}

/// Strong connectivity of the arc digraph.
pub fn is_strong(p: &Pog) -> bool {
    strong_witness(p).is_none()
}
