//! Proper interval and proper circular-arc representations, and their
//! correspondence with acyclic and locally transitive local tournaments.
//!
//! A representation orients its graph: `u -> v` when the interval (arc) of
//! `u` contains the left (counterclockwise) endpoint of that of `v`.

use std::fmt::Write as _;

use crate::chordal::complete_to_acyclic_lt;
use crate::classify::classify;
use crate::pog::{Ordering, OrientedGraph, Pog};
use crate::round::find_round_ordering;
use crate::{Error, Result, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RepKind {
    Interval,
    /// Arcs run clockwise from `left` to `right` on a circle of `modulus`
    /// points.
    Circular {
        modulus: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct RepEntry {
    pub name: String,
    pub left: i64,
    pub right: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Representation {
    pub kind: RepKind,
    pub entries: Vec<RepEntry>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidRepresentation(msg.into())
}

impl Representation {
    /// Lines `iv <name> <l> <r>` or `ca <name> <start> <end> <modulus>`.
    pub fn parse(text: &str) -> Result<Representation> {
        let mut kind: Option<RepKind> = None;
        let mut entries: Vec<RepEntry> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let perr = |message: String| Error::Parse { line: lineno + 1, message };
            let num = |s: &str| s.parse::<i64>().map_err(|_| perr(format!("`{s}` is not an integer")));
            let (k, name, left, right) = match toks.as_slice() {
                ["iv", name, l, r] => (RepKind::Interval, *name, num(l)?, num(r)?),
                ["ca", name, s, e, m] => {
                    let modulus = num(m)?;
                    if modulus <= 0 {
                        return Err(perr("modulus must be positive".into()));
                    }
                    (RepKind::Circular { modulus }, *name, num(s)?, num(e)?)
                }
                _ => return Err(perr("expected `iv <name> <l> <r>` or `ca <name> <s> <e> <M>`".into())),
            };
            if !crate::pog::valid_name(name) {
                return Err(perr(format!("invalid vertex name `{name}`")));
            }
            match kind {
                None => kind = Some(k),
                Some(prev) if prev != k => return Err(perr("mixed representation kinds or moduli".into())),
                _ => {}
            }
            if entries.iter().any(|e| e.name == name) {
                return Err(perr(format!("vertex `{name}` listed twice")));
            }
            entries.push(RepEntry { name: name.to_string(), left, right });
        }
        let kind = kind.unwrap_or(RepKind::Interval);
        let rep = Representation { kind, entries };
        rep.check_coordinates()?;
        Ok(rep)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            match self.kind {
                RepKind::Interval => writeln!(s, "iv {} {} {}", e.name, e.left, e.right),
                RepKind::Circular { modulus } => writeln!(s, "ca {} {} {} {}", e.name, e.left, e.right, modulus),
            }
            .expect("writing to a string");
        }
        s
    }

    fn check_coordinates(&self) -> Result<()> {
        for e in &self.entries {
            match self.kind {
                RepKind::Interval if e.left > e.right => {
                    return Err(bad(format!("interval of `{}` has left > right", e.name)));
                }
                RepKind::Circular { modulus } => {
                    let inside = |x: i64| (0..modulus).contains(&x);
                    if !inside(e.left) || !inside(e.right) || e.left == e.right {
                        return Err(bad(format!("arc of `{}` must have distinct endpoints in [0, {modulus})", e.name)));
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn entry(&self, name: &str) -> Option<&RepEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Offset of point `x` from the start of the arc of `e`.
    fn offset(&self, e: &RepEntry, x: i64) -> i64 {
        match self.kind {
            RepKind::Interval => x - e.left,
            RepKind::Circular { modulus } => (x - e.left).rem_euclid(modulus),
        }
    }

    fn length(&self, e: &RepEntry) -> i64 {
        self.offset(e, e.right)
    }

    fn contains_point(&self, e: &RepEntry, x: i64) -> bool {
        let o = self.offset(e, x);
        o >= 0 && o <= self.length(e)
    }

    /// Whether the set of `b` lies inside the set of `a`.
    fn contains(&self, a: &RepEntry, b: &RepEntry) -> bool {
        let (s, e) = (self.offset(a, b.left), self.offset(a, b.right));
        s >= 0 && s <= e && e <= self.length(a)
    }

    fn intersect(&self, a: &RepEntry, b: &RepEntry) -> bool {
        self.contains_point(a, b.left) || self.contains_point(b, a.left)
    }

    fn check_proper(&self) -> Result<()> {
        for (i, a) in self.entries.iter().enumerate() {
            for b in &self.entries[i + 1..] {
                if self.contains(a, b) || self.contains(b, a) {
                    return Err(bad(format!("`{}` and `{}` are nested", a.name, b.name)));
                }
                if self.contains_point(a, b.left) && self.contains_point(b, a.left) {
                    return Err(bad(format!("`{}` and `{}` cover each other's start", a.name, b.name)));
                }
            }
        }
        Ok(())
    }
}

/// Verifies that `rep` is a proper representation of the graph underlying
/// `g` restricted to the represented vertices, and returns the orientation it
/// induces on those vertices, indexed in `rep` order.
pub fn orientation_from_representation(g: &Pog, rep: &Representation) -> Result<OrientedGraph> {
    rep.check_coordinates()?;
    rep.check_proper()?;
    let names: Vec<&str> = rep.entries.iter().map(|e| e.name.as_str()).collect();
    let idx = names.iter().map(|n| g.vertex(n)).collect::<Result<Vec<_>>>()?;
    let mut d = OrientedGraph::with_vertices(&names)?;
    for (i, a) in rep.entries.iter().enumerate() {
        for (j, b) in rep.entries.iter().enumerate() {
            if i == j {
                continue;
            }
            let meets = rep.intersect(a, b);
            if meets != g.adjacent(idx[i], idx[j]) {
                return Err(bad(format!(
                    "`{}` and `{}` {} in the graph but their sets {}",
                    a.name,
                    b.name,
                    if meets { "are not adjacent" } else { "are adjacent" },
                    if meets { "meet" } else { "are disjoint" }
                )));
            }
            if meets && rep.contains_point(a, b.left) {
                d.add_arc(i, j).expect("proper sets orient each pair once");
            }
        }
    }
    Ok(d)
}

/// Interval layout of an acyclic local tournament: vertices in topological
/// order, each interval reaching just past the left end of its last
/// out-neighbour.
fn interval_layout(d: &Pog) -> Vec<(i64, i64)> {
    let n = d.n();
    let scale = n as i64 + 1;
    let order: Vec<usize> = {
        let mut seq = Vec::with_capacity(n);
        for comp in d.components() {
            let sub = d.induced(&comp);
            let topo = crate::classify::topological_order(&sub).expect("acyclic input");
            seq.extend(topo.into_iter().map(|i| comp[i]));
        }
        seq
    };
    let pos = Ordering::linear(order.clone()).expect("permutation").positions();
    let mut out = vec![(0, 0); n];
    for (i, &v) in order.iter().enumerate() {
        let reach = d.out_neighbours(v).iter().map(|&w| pos[w]).max().unwrap_or(i);
        out[v] = (scale * i as i64, scale * reach as i64 + i as i64 + 1);
    }
    out
}

/// Circular layout from a round ordering on `n (n + 1)` points.
fn circular_layout(d: &Pog, o: &Ordering) -> (Vec<(i64, i64)>, i64) {
    let n = d.n() as i64;
    let m = n * (n + 1);
    let mut out = vec![(0, 0); d.n()];
    for (i, &v) in o.seq().iter().enumerate() {
        let dp = d.out_neighbours(v).len() as i64;
        let i = i as i64;
        out[v] = ((n + 1) * i, ((n + 1) * (i + dp) + (n - dp)) % m);
    }
    (out, m)
}

fn build(d: &Pog, kind: RepKind, coords: &[(i64, i64)]) -> Representation {
    let entries = coords
        .iter()
        .enumerate()
        .map(|(v, &(left, right))| RepEntry { name: d.name(v).to_string(), left, right })
        .collect();
    Representation { kind, entries }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Interval,
    Circular,
}

/// A representation inducing exactly `d`.
pub fn representation_from_orientation(d: &OrientedGraph, target: Target) -> Result<Representation> {
    let report = classify(d);
    if !report.is_local_tournament {
        return Err(Error::NotInClass("not a local tournament".into()));
    }
    let rep = match target {
        Target::Interval => {
            if !report.is_acyclic {
                return Err(Error::NotInClass("interval orientations are acyclic".into()));
            }
            build(d, RepKind::Interval, &interval_layout(d))
        }
        Target::Circular => {
            if d.n() == 0 {
                return Ok(Representation { kind: RepKind::Circular { modulus: 1 }, entries: vec![] });
            }
            if d.is_connected() {
                let o = find_round_ordering(d).ok_or(Error::NotRound)?;
                let (coords, modulus) = circular_layout(d, &o);
                build(d, RepKind::Circular { modulus }, &coords)
            } else if report.is_acyclic {
                let n = d.n() as i64;
                build(d, RepKind::Circular { modulus: n * (n + 1) }, &interval_layout(d))
            } else {
                return Err(Error::NotRound);
            }
        }
    };
    let back = orientation_from_representation(d, &rep).expect("layout is a proper representation");
    assert!(back.as_pog().same_as(d), "layout does not reproduce the orientation");
    Ok(rep)
}

/// Extends a proper interval representation of an induced subgraph to one of
/// the whole graph whose orientation agrees on the represented part.
pub fn extend_interval_representation(g: &Pog, partial: &Representation) -> Result<Verdict<Representation>> {
    if partial.kind != RepKind::Interval {
        return Err(bad("expected an interval representation"));
    }
    let p = lift(g, partial)?;
    match complete_to_acyclic_lt(&p) {
        Err(cert) => Ok(Err(cert)),
        Ok(d) => {
            let rep = representation_from_orientation(&d, Target::Interval)?;
            check_agrees(g, partial, &rep)?;
            Ok(Ok(rep))
        }
    }
}

/// The underlying graph of `g` with the arcs induced by `partial`.
pub(crate) fn lift(g: &Pog, partial: &Representation) -> Result<Pog> {
    let h = orientation_from_representation(g, partial)?;
    let mut p = g.underlying();
    for (u, v) in h.arcs() {
        let (a, b) = (g.vertex(h.name(u))?, g.vertex(h.name(v))?);
        p.orient(a, b)?;
    }
    Ok(p)
}

pub(crate) fn check_agrees(g: &Pog, partial: &Representation, full: &Representation) -> Result<()> {
    let h = orientation_from_representation(g, partial)?;
    let all = orientation_from_representation(g, full)?;
    for (u, v) in h.arcs() {
        let (a, b) = (all.vertex(h.name(u))?, all.vertex(h.name(v))?);
        assert!(all.is_arc(a, b), "extension changed the given orientation");
    }
    for e in &partial.entries {
        assert!(full.entry(&e.name).is_some());
    }
    Ok(())
}
