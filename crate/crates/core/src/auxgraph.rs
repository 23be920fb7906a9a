//! The auxiliary graph on ordered edge pairs and the orientation completions
//! it decides.
//!
//! Every edge `uv` of the underlying graph contributes the two pairs `(u, v)`
//! and `(v, u)`. Two pairs are joined when choosing both (or neither) as arcs
//! would create a forbidden configuration, so the completions of the target
//! class correspond exactly to proper red/blue colourings with the red pairs
//! taken as arcs.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::pog::{OrientedGraph, Pog};
use crate::{classify, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuxMode {
    /// Out- and in-neighbourhoods must be tournaments.
    LocalTournament,
    /// A path `x -> y -> z` needs `x` and `z` adjacent.
    QuasiTransitive,
}

/// Adjacency of two ordered pairs, decided from the rules directly.
///
/// Both pairs must be adjacent pairs of `g`.
pub(crate) fn aux_adjacent(g: &Pog, mode: AuxMode, a: (usize, usize), b: (usize, usize)) -> bool {
    let ((u, v), (x, y)) = (a, b);
    if a == b {
        return false;
    }
    if u == y && v == x {
        return true;
    }
    match mode {
        AuxMode::LocalTournament => (u == x && !g.adjacent(v, y)) || (v == y && !g.adjacent(u, x)),
        AuxMode::QuasiTransitive => (v == x && u != y && !g.adjacent(u, y)) || (y == u && x != v && !g.adjacent(x, v)),
    }
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct AuxGraph {
    pub mode: AuxMode,
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<u32>,
    adj: Vec<Vec<usize>>,
    comp: Vec<usize>,
    comps: Vec<Vec<usize>>,
}

/// Builds the auxiliary graph of the underlying graph of `g`.
pub fn build_aux(g: &Pog, mode: AuxMode) -> AuxGraph {
    let n = g.n();
    let mut pairs = Vec::new();
    let mut index = vec![NONE; n * n];
    for u in 0..n {
        for v in 0..n {
            if g.adjacent(u, v) {
                index[u * n + v] = pairs.len() as u32;
                pairs.push((u, v));
            }
        }
    }
    let id = |u: usize, v: usize| index[u * n + v] as usize;
    let mut adj = vec![Vec::new(); pairs.len()];
    let join = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbours(v)).collect();
    for (p, &(u, v)) in pairs.iter().enumerate() {
        if u < v {
            join(p, id(v, u), &mut adj);
        }
    }
    match mode {
        AuxMode::LocalTournament => {
            for w in 0..n {
                for (i, &x) in nbrs[w].iter().enumerate() {
                    for &y in &nbrs[w][i + 1..] {
                        if !g.adjacent(x, y) {
                            join(id(w, x), id(w, y), &mut adj);
                            join(id(x, w), id(y, w), &mut adj);
                        }
                    }
                }
            }
        }
        AuxMode::QuasiTransitive => {
            for y in 0..n {
                for &x in &nbrs[y] {
                    for &z in &nbrs[y] {
                        if x != z && !g.adjacent(x, z) {
                            join(id(x, y), id(y, z), &mut adj);
                        }
                    }
                }
            }
        }
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }

    let mut comp = vec![usize::MAX; pairs.len()];
    let mut comps = Vec::new();
    for s in 0..pairs.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        let c = comps.len();
        comp[s] = c;
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            i += 1;
            for &b in &adj[a] {
                if comp[b] == usize::MAX {
                    comp[b] = c;
                    members.push(b);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    AuxGraph { mode, n, pairs, index, adj, comp, comps }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColouring {
    /// `red[i]` for the aux vertex with index `i`.
    pub red: Vec<bool>,
}

impl AuxGraph {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Aux vertices as ordered pairs, sorted.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        self.pairs[i]
    }

    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let i = self.index[u * self.n + v];
        (i != NONE).then_some(i as usize)
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.comp[i]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    /// A component is thin when it consists of one edge's two pairs only.
    pub fn is_thin(&self, c: usize) -> bool {
        self.comps[c].len() == 2
    }

    /// Component id of the edge `{u, v}`.
    pub fn edge_component(&self, u: usize, v: usize) -> Option<usize> {
        self.id(u, v).map(|i| self.comp[i])
    }

    fn to_pairs(&self, walk: &[usize]) -> Vec<(usize, usize)> {
        walk.iter().map(|&i| self.pairs[i]).collect()
    }

    /// Proper 2-colouring with each component's smallest pair red, or an odd
    /// closed walk.
    pub fn two_colour(&self) -> Verdict<TwoColouring> {
        let m = self.pairs.len();
        let mut colour: Vec<Option<bool>> = vec![None; m];
        let mut parent = vec![usize::MAX; m];
        let mut depth = vec![0usize; m];
        for comp in &self.comps {
            let root = comp[0];
            colour[root] = Some(true);
            let mut queue = VecDeque::from([root]);
            while let Some(a) = queue.pop_front() {
                let ca = colour[a].expect("queued vertices are coloured");
                for &b in &self.adj[a] {
                    match colour[b] {
                        None => {
                            colour[b] = Some(!ca);
                            parent[b] = a;
                            depth[b] = depth[a] + 1;
                            queue.push_back(b);
                        }
                        Some(cb) if cb == ca => {
                            let cycle = odd_cycle(&parent, &depth, a, b);
                            return Err(Certificate::OddClosedWalkAux { mode: self.mode, walk: self.to_pairs(&cycle) });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(TwoColouring { red: colour.into_iter().map(|c| c.unwrap_or(true)).collect() })
    }

    /// Shortest path between two aux vertices of the same component.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.pairs.len()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            if a == to {
                break;
            }
            for &b in &self.adj[a] {
                if prev[b] == usize::MAX {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

/// Closes the odd cycle formed by BFS-tree paths to `a`, `b` and the edge `ab`.
fn odd_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    left.reverse();
    // left runs from the common ancestor down to `a`; continue with `b` up.
    left.extend(right);
    left
}

/// The consentaneous closure of a pog together with the data needed to
/// justify every arc it adds.
#[derive(Debug, Clone)]
pub struct Closure {
    pub pog: Pog,
    pub aux: AuxGraph,
    pub colouring: TwoColouring,
    /// BFS parent towards an arc of the input pog, `usize::MAX` at sources.
    parent: Vec<usize>,
}

impl Closure {
    /// Even walk in the auxiliary graph from an arc of the input pog to the
    /// pair `(u, v)`, which must be an arc of the closure.
    pub fn justify(&self, u: usize, v: usize) -> Vec<(usize, usize)> {
        let mut cur = self.aux.id(u, v).expect("arc of the closure");
        let mut walk = vec![cur];
        while self.parent[cur] != usize::MAX {
            cur = self.parent[cur];
            walk.push(cur);
        }
        walk.reverse();
        self.aux.to_pairs(&walk)
    }
}

/// Minimal consentaneous pog containing `p`, or the certificate showing that
/// no local tournament completion (quasi-transitive in that mode) exists.
pub fn closure_in_mode(p: &Pog, mode: AuxMode) -> Verdict<Closure> {
    let aux = build_aux(p, mode);
    let colouring = aux.two_colour()?;
    let mut out = p.clone();
    let mut parent = vec![usize::MAX; aux.len()];
    for comp in aux.components() {
        let arcs: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&i| {
                let (u, v) = aux.pair(i);
                p.is_arc(u, v)
            })
            .collect();
        let Some(&first) = arcs.first() else { continue };
        let class = colouring.red[first];
        if let Some(&bad) = arcs.iter().find(|&&i| colouring.red[i] != class) {
            let path = aux.shortest_path(first, bad).expect("same component");
            return Err(Certificate::OrientationConflict { mode, walk: aux.to_pairs(&path) });
        }
        // Multi-source BFS from the arcs gives short justification walks.
        let mut seen: Vec<bool> = vec![false; aux.len()];
        let mut queue: VecDeque<usize> = arcs.iter().copied().collect();
        for &a in &arcs {
            seen[a] = true;
        }
        while let Some(a) = queue.pop_front() {
            for &b in aux.neighbours(a) {
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        for &i in comp {
            if colouring.red[i] == class {
                let (u, v) = aux.pair(i);
                if p.is_edge(u, v) {
                    out.orient(u, v).expect("edge slot");
                }
            }
        }
    }
    Ok(Closure { pog: out, aux, colouring, parent })
}

/// The minimal consentaneous pog containing `p`.
pub fn consentaneous_closure(p: &Pog) -> Verdict<Pog> {
    closure_in_mode(p, AuxMode::LocalTournament).map(|c| c.pog)
}

/// `Ok` when `p` is consentaneous; otherwise an odd walk, an orientation
/// conflict, or an even walk from an arc to an unoriented edge.
pub fn check_consentaneous(p: &Pog) -> Result<(), Certificate> {
    let closure = closure_in_mode(p, AuxMode::LocalTournament)?;
    for (u, v) in closure.pog.arcs() {
        if p.is_edge(u, v) {
            return Err(Certificate::NotConsentaneous { walk: closure.justify(u, v) });
        }
    }
    Ok(())
}

/// Completes `p` to a local tournament (or quasi-transitive oriented graph).
///
/// Each auxiliary component contributes one whole colour class: the one
/// holding the input's arcs, or the one with the smallest pair if the
/// component carries no arc.
pub fn complete_via_aux(p: &Pog, mode: AuxMode) -> Verdict<OrientedGraph> {
    let closure = closure_in_mode(p, mode)?;
    let aux = &closure.aux;
    let mut out = closure.pog.clone();
    for comp in aux.components() {
        let (u0, v0) = aux.pair(comp[0]);
        if !out.is_edge(u0, v0) {
            continue;
        }
        for &i in comp {
            if closure.colouring.red[i] {
                let (u, v) = aux.pair(i);
                out.orient(u, v).expect("untouched component is unoriented");
            }
        }
    }
    let d = OrientedGraph::try_from(out).expect("every edge lies in some component");
    let report = classify(&d);
    match mode {
        AuxMode::LocalTournament => assert!(report.is_local_tournament, "completion is not a local tournament"),
        AuxMode::QuasiTransitive => assert!(report.is_quasi_transitive, "completion is not quasi-transitive"),
    }
    Ok(d)
}
