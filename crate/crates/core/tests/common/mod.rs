//! Independent brute-force oracles shared by the integration suites.
//!
//! Nothing here calls into the library's algorithms: digraphs are bitmask
//! adjacency tables and every class predicate is checked from its
//! definition.

#![allow(dead_code)]

use orientcomp::{OrientedGraph, Pog};
use rand::Rng;

/// A pog on at most 16 vertices: adjacency masks plus the arcs and edges.
#[derive(Debug, Clone)]
pub struct Mixed {
    pub n: usize,
    pub adj: Vec<u16>,
    pub arcs: Vec<(usize, usize)>,
    pub edges: Vec<(usize, usize)>,
}

impl Mixed {
    pub fn from_pog(p: &Pog) -> Mixed {
        let n = p.n();
        assert!(n <= 16);
        let mut adj = vec![0u16; n];
        let mut arcs = Vec::new();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                if p.is_arc(u, v) {
                    arcs.push((u, v));
                }
                if p.is_edge(u, v) && u < v {
                    edges.push((u, v));
                }
                if p.adjacent(u, v) {
                    adj[u] |= 1 << v;
                }
            }
        }
        Mixed { n, adj, arcs, edges }
    }

    pub fn to_pog(&self) -> Pog {
        let mut p = Pog::with_size(self.n);
        for &(u, v) in &self.edges {
            p.add_edge(u, v).unwrap();
        }
        for &(u, v) in &self.arcs {
            p.add_arc(u, v).unwrap();
        }
        p
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }
}

/// An oriented graph as out-neighbour masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dig {
    pub n: usize,
    pub out: Vec<u16>,
}

impl Dig {
    pub fn empty(n: usize) -> Dig {
        Dig { n, out: vec![0; n] }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Dig {
        let mut d = Dig::empty(n);
        for &(u, v) in arcs {
            d.out[u] |= 1 << v;
        }
        d
    }

    pub fn from_oriented(d: &OrientedGraph) -> Dig {
        Dig::from_arcs(d.n(), &d.arcs())
    }

    pub fn arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn inn(&self, v: usize) -> u16 {
        (0..self.n).filter(|&u| self.arc(u, v)).fold(0, |m, u| m | 1 << u)
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut a = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.arc(u, v) {
                    a.push((u, v));
                }
            }
        }
        a
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.arc(u, v) || self.arc(v, u)
    }

    /// Every two vertices of `set` adjacent.
    fn clique(&self, set: u16) -> bool {
        members(set).iter().all(|&u| members(set).iter().all(|&v| u == v || self.adjacent(u, v)))
    }

    /// The arcs inside `set` form no directed cycle.
    fn acyclic_on(&self, set: u16) -> bool {
        let mut left = set;
        loop {
            let sink = members(left).into_iter().find(|&v| self.out[v] & left == 0);
            match sink {
                Some(v) => left &= !(1 << v),
                None => return left == 0,
            }
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic_on(full(self.n))
    }

    pub fn is_tournament(&self) -> bool {
        self.clique(full(self.n))
    }

    pub fn is_local_tournament(&self) -> bool {
        (0..self.n).all(|v| self.clique(self.out[v]) && self.clique(self.inn(v)))
    }

    pub fn is_in_tournament(&self) -> bool {
        (0..self.n).all(|v| self.clique(self.inn(v)))
    }

    pub fn is_ltlt(&self) -> bool {
        self.is_local_tournament() && (0..self.n).all(|v| self.acyclic_on(self.out[v]) && self.acyclic_on(self.inn(v)))
    }

    pub fn is_ltt(&self) -> bool {
        self.is_tournament() && self.is_ltlt()
    }

    pub fn is_transitive_tournament(&self) -> bool {
        self.is_tournament() && self.is_acyclic()
    }

    pub fn is_quasi_transitive(&self) -> bool {
        (0..self.n).all(|y| {
            members(self.inn(y))
                .into_iter()
                .all(|x| members(self.out[y]).into_iter().all(|z| x == z || self.adjacent(x, z)))
        })
    }

    pub fn is_strong(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let reach = |fwd: bool| {
            let mut seen = 1u16;
            let mut stack = vec![0usize];
            while let Some(u) = stack.pop() {
                let next = if fwd { self.out[u] } else { self.inn(u) };
                for w in members(next & !seen) {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
            seen == full(self.n)
        };
        reach(true) && reach(false)
    }

    pub fn contains(&self, arcs: &[(usize, usize)]) -> bool {
        arcs.iter().all(|&(u, v)| self.arc(u, v))
    }

    /// The underlying graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u16;
        let mut stack = vec![0usize];
        while let Some(u) = stack.pop() {
            for w in members((self.out[u] | self.inn(u)) & !seen) {
                seen |= 1 << w;
                stack.push(w);
            }
        }
        seen == full(self.n)
    }
}

pub fn full(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

pub fn members(set: u16) -> Vec<usize> {
    (0..16).filter(|&v| set >> v & 1 == 1).collect()
}

/// Depth-first search over orientations of the free edges of `m`. `prune`
/// rejects partial orientations that cannot be extended; `accept` tests
/// complete ones. Returns the first accepted completion.
pub fn search(m: &Mixed, prune: &dyn Fn(&Dig, &[u16]) -> bool, accept: &dyn Fn(&Dig) -> bool) -> Option<Dig> {
    fn go(
        d: &mut Dig,
        edges: &[(usize, usize)],
        adj: &[u16],
        prune: &dyn Fn(&Dig, &[u16]) -> bool,
        accept: &dyn Fn(&Dig) -> bool,
    ) -> bool {
        if prune(d, adj) {
            return false;
        }
        let Some((&(u, v), rest)) = edges.split_first() else {
            return accept(d);
        };
        for (a, b) in [(u, v), (v, u)] {
            d.out[a] |= 1 << b;
            if go(d, rest, adj, prune, accept) {
                return true;
            }
            d.out[a] &= !(1 << b);
        }
        false
    }
    let mut d = Dig::from_arcs(m.n, &m.arcs);
    go(&mut d, &m.edges, &m.adj, prune, accept).then_some(d)
}

/// Partial-orientation pruning for local tournaments: two out-neighbours
/// (or two in-neighbours) of a vertex must be adjacent in the graph.
pub fn lt_prune(d: &Dig, adj: &[u16]) -> bool {
    (0..d.n).any(|v| {
        let clique = |set: u16| members(set).iter().all(|&u| set & !(1 << u) & !adj[u] == 0);
        !clique(d.out[v]) || !clique(d.inn(v))
    })
}

pub fn no_prune(_: &Dig, _: &[u16]) -> bool {
    false
}

pub fn completable(m: &Mixed, accept: &dyn Fn(&Dig) -> bool) -> bool {
    search(m, &no_prune, accept).is_some()
}

pub fn lt_completable(m: &Mixed, accept: &dyn Fn(&Dig) -> bool) -> bool {
    search(m, &lt_prune, accept).is_some()
}

/// Every labelled graph on `n` vertices as an edge list.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let k = pairs.len();
    (0..1u64 << k).map(move |mask| (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect())
}

/// Every pog on `n` vertices: each pair absent, an edge, or an arc either way.
pub fn all_pogs(n: usize) -> impl Iterator<Item = Mixed> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 4u64.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut m = Mixed { n, adj: vec![0; n], arcs: Vec::new(), edges: Vec::new() };
        for &(u, v) in &pairs {
            match code % 4 {
                0 => {}
                1 => m.edges.push((u, v)),
                2 => m.arcs.push((u, v)),
                _ => m.arcs.push((v, u)),
            }
            if code % 4 != 0 {
                m.adj[u] |= 1 << v;
                m.adj[v] |= 1 << u;
            }
            code /= 4;
        }
        m
    })
}

/// A random pog: each pair present with probability `density`, and each
/// present pair an arc with probability `arc_share`.
pub fn random_pog(rng: &mut impl Rng, n: usize, density: f64, arc_share: f64) -> Mixed {
    let mut m = Mixed { n, adj: vec![0; n], arcs: Vec::new(), edges: Vec::new() };
    for u in 0..n {
        for v in u + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            m.adj[u] |= 1 << v;
            m.adj[v] |= 1 << u;
            if rng.gen_bool(arc_share) {
                m.arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            } else {
                m.edges.push((u, v));
            }
        }
    }
    m
}

/// `m` with `keep` of a full orientation `d`'s arcs fixed and the rest free.
pub fn partially_forget(rng: &mut impl Rng, d: &Dig, keep: f64) -> Mixed {
    let mut m = Mixed { n: d.n, adj: vec![0; d.n], arcs: Vec::new(), edges: Vec::new() };
    for (u, v) in d.arcs() {
        m.adj[u] |= 1 << v;
        m.adj[v] |= 1 << u;
        if rng.gen_bool(keep) {
            m.arcs.push((u, v));
        } else {
            m.edges.push((u.min(v), u.max(v)));
        }
    }
    m
}

/// Positions of a cyclic ordering.
fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Arcs `(i, j)`, `(s, t)` with `i, t, s, j` in cyclic order (`i = t` or
/// `s = j` allowed) make an ordering fail to be excellent.
pub fn is_excellent(arcs: &[(usize, usize)], order: &[usize]) -> bool {
    let n = order.len();
    let pos = positions(order);
    let off = |a: usize, b: usize| (pos[b] + n - pos[a]) % n;
    for &(i, j) in arcs {
        for &(s, t) in arcs {
            if off(i, t) < off(i, s) && off(i, s) <= off(i, j) {
                return false;
            }
        }
    }
    true
}

/// Each vertex's out-neighbours follow it consecutively and its
/// in-neighbours precede it consecutively.
pub fn is_round(d: &Dig, order: &[usize]) -> bool {
    let n = order.len();
    (0..n).all(|i| {
        let v = order[i];
        let outs = d.out[v].count_ones() as usize;
        let ins = d.inn(v).count_ones() as usize;
        (1..=outs).all(|k| d.arc(v, order[(i + k) % n])) && (1..=ins).all(|k| d.arc(order[(i + n - k) % n], v))
    })
}

/// Some cyclic ordering of `n` vertices satisfies `ok`.
pub fn some_cyclic_ordering(n: usize, ok: &dyn Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    if n == 0 {
        return ok(&[]).then(Vec::new);
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut found = None;
    permute(&mut rest, 0, &mut |perm| {
        let mut seq = vec![0];
        seq.extend_from_slice(perm);
        if ok(&seq) {
            found = Some(seq);
            true
        } else {
            false
        }
    });
    found
}

fn permute(a: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == a.len() {
        return visit(a);
    }
    for i in k..a.len() {
        a.swap(k, i);
        if permute(a, k + 1, visit) {
            a.swap(k, i);
            return true;
        }
        a.swap(k, i);
    }
    false
}

/// The orientation of a graph given by an interval model: `u -> v` when
/// `u`'s interval contains the left end of `v`'s.
pub fn interval_orientation(ivs: &[(i64, i64)]) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for (u, &(lu, ru)) in ivs.iter().enumerate() {
        for (v, &(lv, _)) in ivs.iter().enumerate() {
            if u != v && lu < lv && lv <= ru {
                arcs.push((u, v));
            }
        }
    }
    arcs
}

/// A random unit interval graph on `n` vertices, as interval endpoints.
pub fn random_unit_intervals(rng: &mut impl Rng, n: usize, spread: i64) -> Vec<(i64, i64)> {
    let mut lefts: Vec<i64> = Vec::new();
    while lefts.len() < n {
        let l = rng.gen_range(0..spread * n as i64);
        if !lefts.contains(&l) {
            lefts.push(l);
        }
    }
    lefts.into_iter().map(|l| (l, l + spread)).collect()
}
