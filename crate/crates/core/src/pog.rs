//! Partially oriented graphs, oriented graphs and vertex orderings.
//!
//! Vertices are named externally and stored as dense indices `0..n`. Every
//! unordered pair of vertices holds at most one of: nothing, an undirected
//! edge, or an arc in one direction.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::Deref;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Empty,
    Edge,
    /// Arc from the row vertex to the column vertex.
    Out,
    /// Arc from the column vertex to the row vertex.
    In,
}

/// A partially oriented graph.
#[derive(Debug, Clone, Default)]
pub struct Pog {
    names: Vec<String>,
    index: HashMap<String, usize>,
    slots: Vec<Slot>,
}

impl PartialEq for Pog {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.slots == other.slots
    }
}

impl Eq for Pog {}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'))
}

impl Pog {
    /// A pog with the given vertices and no adjacencies.
    pub fn with_vertices<S: AsRef<str>>(names: &[S]) -> Result<Pog> {
        let mut pog = Pog::default();
        for name in names {
            pog.add_vertex(name.as_ref())?;
        }
        Ok(pog)
    }

    /// A pog on `n` vertices named `v0`, `v1`, ...
    pub fn with_size(n: usize) -> Pog {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        Pog::with_vertices(&names).expect("generated names are valid")
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        if !valid_name(name) {
            return Err(Error::Invariant(format!("invalid vertex name `{name}`")));
        }
        if self.index.contains_key(name) {
            return Err(Error::Invariant(format!("duplicate vertex `{name}`")));
        }
        let n = self.n();
        let mut slots = vec![Slot::Empty; (n + 1) * (n + 1)];
        for u in 0..n {
            for v in 0..n {
                slots[u * (n + 1) + v] = self.slots[u * n + v];
            }
        }
        self.slots = slots;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), n);
        Ok(n)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    fn slot(&self, u: usize, v: usize) -> Slot {
        self.slots[u * self.n() + v]
    }

    fn set(&mut self, u: usize, v: usize, s: Slot) {
        let n = self.n();
        let mirror = match s {
            Slot::Out => Slot::In,
            Slot::In => Slot::Out,
            other => other,
        };
        self.slots[u * n + v] = s;
        self.slots[v * n + u] = mirror;
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n() || v >= self.n() {
            return Err(Error::Invariant(format!("vertex index out of range ({u}, {v})")));
        }
        if u == v {
            return Err(Error::Invariant(format!("loop at `{}`", self.name(u))));
        }
        match self.slot(u, v) {
            Slot::Empty => Ok(()),
            Slot::Edge => {
                Err(Error::Invariant(format!("pair {{{}, {}}} already joined by an edge", self.name(u), self.name(v))))
            }
            Slot::Out | Slot::In => {
                Err(Error::Invariant(format!("pair {{{}, {}}} already joined by an arc", self.name(u), self.name(v))))
            }
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.set(u, v, Slot::Edge);
        Ok(())
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.set(u, v, Slot::Out);
        Ok(())
    }

    /// Replaces the edge `uv` by the arc `(u, v)`.
    pub fn orient(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n() || v >= self.n() || self.slot(u, v) != Slot::Edge {
            return Err(Error::Invariant(format!("no edge between {u} and {v} to orient")));
        }
        self.set(u, v, Slot::Out);
        Ok(())
    }

    /// Turns the pair `{u, v}` back into an unoriented edge (it must be adjacent).
    pub(crate) fn unorient(&mut self, u: usize, v: usize) {
        debug_assert!(self.adjacent(u, v));
        self.set(u, v, Slot::Edge);
    }

    #[inline]
    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.slot(u, v) == Slot::Edge
    }

    #[inline]
    pub fn is_arc(&self, u: usize, v: usize) -> bool {
        self.slot(u, v) == Slot::Out
    }

    /// Adjacent in the underlying graph.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.slot(u, v) != Slot::Empty
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.adjacent(v, u)).collect()
    }

    pub fn out_neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.is_arc(v, u)).collect()
    }

    pub fn in_neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.is_arc(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n()).filter(|&u| self.adjacent(v, u)).count()
    }

    /// Unoriented edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.is_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Arcs sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if self.is_arc(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacent pairs of the underlying graph as `(u, v)` with `u < v`.
    pub fn ug_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.slots.iter().filter(|&&s| s == Slot::Edge).count() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.slots.iter().filter(|&&s| s == Slot::Out).count()
    }

    pub fn is_oriented(&self) -> bool {
        !self.slots.contains(&Slot::Edge)
    }

    /// Every pair of distinct vertices adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| (u + 1..n).all(|v| self.adjacent(u, v)))
    }

    /// The underlying graph as an arc-free pog.
    pub fn underlying(&self) -> Pog {
        let mut g = self.clone();
        for s in g.slots.iter_mut() {
            if matches!(s, Slot::Out | Slot::In) {
                *s = Slot::Edge;
            }
        }
        g
    }

    /// The arcs of this pog with every edge dropped.
    pub fn arc_digraph(&self) -> OrientedGraph {
        let mut g = self.clone();
        for s in g.slots.iter_mut() {
            if *s == Slot::Edge {
                *s = Slot::Empty;
            }
        }
        OrientedGraph(g)
    }

    /// The sub-pog induced by `verts`, in the given order.
    pub fn induced(&self, verts: &[usize]) -> Pog {
        let names: Vec<&str> = verts.iter().map(|&v| self.name(v)).collect();
        let mut sub = Pog::with_vertices(&names).expect("names come from a valid pog");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i != j {
                    let s = self.slot(u, v);
                    sub.slots[i * verts.len() + j] = s;
                }
            }
        }
        sub
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in 0..n {
                    if !seen[v] && self.adjacent(u, v) {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Same vertex names and the same adjacency, irrespective of vertex order.
    pub fn same_as(&self, other: &Pog) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let map: Option<Vec<usize>> = self.names.iter().map(|nm| other.index_of(nm)).collect();
        let Some(map) = map else { return false };
        (0..self.n()).all(|u| (0..self.n()).all(|v| self.slot(u, v) == other.slot(map[u], map[v])))
    }

    /// Renders in the native line format or as DOT.
    pub fn render(&self, format: RenderFormat) -> String {
        let mut out = String::new();
        match format {
            RenderFormat::Native => {
                for name in &self.names {
                    let _ = writeln!(out, "v {name}");
                }
                for (u, v) in self.edges() {
                    let _ = writeln!(out, "edge {} {}", self.name(u), self.name(v));
                }
                for (u, v) in self.arcs() {
                    let _ = writeln!(out, "arc {} {}", self.name(u), self.name(v));
                }
            }
            RenderFormat::Dot => {
                out.push_str("digraph pog {\n");
                for name in &self.names {
                    let _ = writeln!(out, "  \"{name}\";");
                }
                for (u, v) in self.edges() {
                    let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.name(u), self.name(v));
                }
                for (u, v) in self.arcs() {
                    let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.name(u), self.name(v));
                }
                out.push_str("}\n");
            }
        }
        out
    }

    /// Parses the native line format.
    ///
    /// `v <name>` declares a vertex, `edge <u> <v>` an undirected edge and
    /// `arc <u> <v>` the arc `u -> v`. Vertices named in edge or arc lines are
    /// declared implicitly; vertex order is first mention. `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Pog> {
        let mut pog = Pog::default();
        let mut declared = std::collections::HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let perr = |message: String| Error::Parse { line, message };
            for t in &toks[1..] {
                if !valid_name(t) {
                    return Err(perr(format!("invalid vertex name `{t}`")));
                }
            }
            match toks[0] {
                "v" => {
                    if toks.len() != 2 {
                        return Err(perr("expected `v <name>`".into()));
                    }
                    if !declared.insert(toks[1].to_string()) {
                        return Err(perr(format!("vertex `{}` declared twice", toks[1])));
                    }
                    if pog.index_of(toks[1]).is_none() {
                        pog.add_vertex(toks[1])?;
                    }
                }
                kw @ ("edge" | "arc") => {
                    if toks.len() != 3 {
                        return Err(perr(format!("expected `{kw} <u> <v>`")));
                    }
                    let mut ends = [0usize; 2];
                    for (k, t) in toks[1..].iter().enumerate() {
                        ends[k] = match pog.index_of(t) {
                            Some(i) => i,
                            None => pog.add_vertex(t)?,
                        };
                    }
                    let [u, v] = ends;
                    if u == v {
                        return Err(perr(format!("loop at `{}`", toks[1])));
                    }
                    let existing = pog.slot(u, v);
                    if existing != Slot::Empty {
                        let what = match (existing, kw) {
                            (Slot::Edge, "edge") => "declared twice as an edge",
                            (Slot::Edge, _) | (_, "edge") => "both edge and arc",
                            (Slot::Out, _) => "declared twice as an arc",
                            _ => "arcs in both directions",
                        };
                        return Err(Error::Invariant(format!("line {line}: pair {{{}, {}}} {what}", toks[1], toks[2])));
                    }
                    if kw == "edge" {
                        pog.add_edge(u, v)?;
                    } else {
                        pog.add_arc(u, v)?;
                    }
                }
                other => return Err(perr(format!("unknown directive `{other}`"))),
            }
        }
        Ok(pog)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Native,
    Dot,
}

/// A pog without unoriented edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrientedGraph(Pog);

impl OrientedGraph {
    pub fn with_vertices<S: AsRef<str>>(names: &[S]) -> Result<OrientedGraph> {
        Pog::with_vertices(names).map(OrientedGraph)
    }

    pub fn with_size(n: usize) -> OrientedGraph {
        OrientedGraph(Pog::with_size(n))
    }

    /// Builds an oriented graph from an arc list over the given names.
    pub fn from_arcs<S: AsRef<str>>(names: &[S], arcs: &[(usize, usize)]) -> Result<OrientedGraph> {
        let mut g = Pog::with_vertices(names)?;
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(OrientedGraph(g))
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.0.add_arc(u, v)
    }

    pub fn as_pog(&self) -> &Pog {
        &self.0
    }

    pub fn into_pog(self) -> Pog {
        self.0
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.n()).filter(|&u| self.is_arc(v, u)).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n()).filter(|&u| self.is_arc(u, v)).count()
    }

    pub fn induced_oriented(&self, verts: &[usize]) -> OrientedGraph {
        OrientedGraph(self.0.induced(verts))
    }

    /// Every arc of `other` (matched by vertex name) is an arc here.
    pub fn contains_arcs_of(&self, other: &Pog) -> bool {
        other.arcs().into_iter().all(|(u, v)| match (self.index_of(other.name(u)), self.index_of(other.name(v))) {
            (Some(a), Some(b)) => self.is_arc(a, b),
            _ => false,
        })
    }
}

impl TryFrom<Pog> for OrientedGraph {
    type Error = Error;

    fn try_from(p: Pog) -> Result<OrientedGraph> {
        if let Some((u, v)) = p.edges().first() {
            return Err(Error::NotInClass(format!(
                "expected an oriented graph but {{{}, {}}} is unoriented",
                p.name(*u),
                p.name(*v)
            )));
        }
        Ok(OrientedGraph(p))
    }
}

impl Deref for OrientedGraph {
    type Target = Pog;

    fn deref(&self) -> &Pog {
        &self.0
    }
}

/// The complete pog `D^c`: `D` plus an edge for every non-adjacent pair.
pub fn complete_closure(d: &OrientedGraph) -> Pog {
    let mut p = d.as_pog().clone();
    let n = p.n();
    for u in 0..n {
        for v in u + 1..n {
            if !p.adjacent(u, v) {
                p.set(u, v, Slot::Edge);
            }
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Linear,
    Cyclic,
}

/// A linear or cyclic sequence of all vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    pub kind: OrderKind,
    seq: Vec<usize>,
}

impl Ordering {
    pub fn new(kind: OrderKind, seq: Vec<usize>) -> Result<Ordering> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n || seen[v] {
                return Err(Error::InvalidOrdering(format!("sequence is not a permutation of 0..{n}")));
            }
            seen[v] = true;
        }
        Ok(Ordering { kind, seq })
    }

    pub fn linear(seq: Vec<usize>) -> Result<Ordering> {
        Ordering::new(OrderKind::Linear, seq)
    }

    pub fn cyclic(seq: Vec<usize>) -> Result<Ordering> {
        Ordering::new(OrderKind::Cyclic, seq)
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `pos[v]` is the position of vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.seq.len()];
        for (i, &v) in self.seq.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn reversed(&self) -> Ordering {
        let mut seq = self.seq.clone();
        seq.reverse();
        Ordering { kind: self.kind, seq }
    }

    /// Cyclic rotation so that `v` comes first.
    pub fn rotated_to(&self, v: usize) -> Ordering {
        let p = self.seq.iter().position(|&x| x == v).expect("vertex in ordering");
        let mut seq = self.seq[p..].to_vec();
        seq.extend_from_slice(&self.seq[..p]);
        Ordering { kind: self.kind, seq }
    }

    /// `order <kind> v1 v2 ...`
    pub fn render(&self, p: &Pog) -> String {
        let kind = match self.kind {
            OrderKind::Linear => "linear",
            OrderKind::Cyclic => "cyclic",
        };
        let mut s = format!("order {kind}");
        for &v in &self.seq {
            s.push(' ');
            s.push_str(p.name(v));
        }
        s.push('\n');
        s
    }

    pub fn parse(text: &str, p: &Pog) -> Result<Ordering> {
        for (lineno, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let perr = |message: String| Error::Parse { line: lineno + 1, message };
            if toks[0] != "order" || toks.len() < 2 {
                return Err(perr("expected `order <linear|cyclic> <v1> ... <vn>`".into()));
            }
            let kind = match toks[1] {
                "linear" => OrderKind::Linear,
                "cyclic" => OrderKind::Cyclic,
                k => return Err(perr(format!("unknown ordering kind `{k}`"))),
            };
            let seq = toks[2..].iter().map(|t| p.vertex(t)).collect::<Result<Vec<_>>>()?;
            if seq.len() != p.n() {
                return Err(Error::InvalidOrdering(format!(
                    "ordering lists {} vertices, graph has {}",
                    seq.len(),
                    p.n()
                )));
            }
            return Ordering::new(kind, seq);
        }
        Err(Error::Parse { line: 0, message: "no `order` line found".into() })
    }
}
