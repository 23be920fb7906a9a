//! Locally transitive local tournament completion of friendly pogs, proper
//! circular-arc recognition and representation extension.
//!
//! A pog is *friendly* when it is consentaneous and has no bad triple: a
//! triangle whose three edges lie in distinct components of the auxiliary
//! graph and exactly two of which are oriented.

use serde::Serialize;

use crate::auxgraph::{build_aux, check_consentaneous, closure_in_mode, complete_via_aux, AuxMode, Closure};
use crate::certificate::{Certificate, CycleLocation};
use crate::chordal::cycle_certificate;
use crate::classify::{classify, find_directed_cycle, topological_order};
use crate::moon::merge_ltt;
use crate::pog::{OrientedGraph, Pog};
use crate::representation::{check_agrees, lift, representation_from_orientation, RepKind, Representation, Target};
use crate::{Error, Result, Verdict};

/// Cells, complement components and their bipartitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    /// Classes of vertices with equal closed neighbourhoods, by smallest
    /// member.
    pub cells: Vec<Vec<usize>>,
    /// Vertices adjacent to every other vertex.
    pub universal: Vec<usize>,
    /// Components of the complement graph, by smallest member.
    pub complement_components: Vec<Vec<usize>>,
    /// `(S, T)` for each complement component, `S` holding its smallest
    /// vertex; `None` if the component is not bipartite.
    pub bipartitions: Vec<Option<(Vec<usize>, Vec<usize>)>>,
    /// Number of auxiliary components with more than one edge.
    pub thick_components: usize,
}

pub fn analyze(p: &Pog) -> Analysis {
    let n = p.n();
    let closed = |v: usize| -> Vec<bool> { (0..n).map(|u| u == v || p.adjacent(u, v)).collect() };
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut cell_of = vec![usize::MAX; n];
    for v in 0..n {
        if cell_of[v] != usize::MAX {
            continue;
        }
        let nv = closed(v);
        let cell: Vec<usize> = (v..n).filter(|&u| cell_of[u] == usize::MAX && closed(u) == nv).collect();
        for &u in &cell {
            cell_of[u] = cells.len();
        }
        cells.push(cell);
    }
    let universal: Vec<usize> = (0..n).filter(|&v| p.degree(v) + 1 == n).collect();

    let mut side = vec![usize::MAX; n];
    let mut complement_components = Vec::new();
    let mut bipartitions = Vec::new();
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut comp = vec![s];
        let mut bipartite = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for w in 0..n {
                if w == u || p.adjacent(u, w) {
                    continue;
                }
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    comp.push(w);
                } else if side[w] == side[u] {
                    bipartite = false;
                }
            }
        }
        comp.sort_unstable();
        let parts = bipartite.then(|| {
            let s_part = comp.iter().copied().filter(|&v| side[v] == 0).collect();
            let t_part = comp.iter().copied().filter(|&v| side[v] == 1).collect();
            (s_part, t_part)
        });
        complement_components.push(comp);
        bipartitions.push(parts);
    }
    let aux = build_aux(p, AuxMode::LocalTournament);
    let thick_components = (0..aux.components().len()).filter(|&c| !aux.is_thin(c)).count();
    Analysis { cells, universal, complement_components, bipartitions, thick_components }
}

/// Bad triples `(x, y, z)` with `x < y < z`.
pub fn bad_triples(p: &Pog) -> Vec<(usize, usize, usize)> {
    let aux = build_aux(p, AuxMode::LocalTournament);
    let n = p.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let Some(cxy) = aux.edge_component(x, y) else { continue };
            for z in y + 1..n {
                let (Some(cyz), Some(cxz)) = (aux.edge_component(y, z), aux.edge_component(x, z)) else {
                    continue;
                };
                if cxy == cyz || cyz == cxz || cxy == cxz {
                    continue;
                }
                let oriented = [(x, y), (y, z), (x, z)].iter().filter(|&&(a, b)| !p.is_edge(a, b)).count();
                if oriented == 2 {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// `Ok` for a friendly pog, otherwise the first reason it is not.
pub fn is_friendly(p: &Pog) -> std::result::Result<(), Certificate> {
    check_consentaneous(p)?;
    match bad_triples(p).first() {
        Some(&(x, y, z)) => Err(Certificate::BadTriple { x, y, z }),
        None => Ok(()),
    }
}

/// A directed cycle found in a sub-pog, before being mapped back.
struct FoundCycle {
    cycle: Vec<usize>,
    location: Option<CycleLocation>,
}

impl FoundCycle {
    fn map(self, f: impl Fn(usize) -> usize) -> FoundCycle {
        let location = self.location.map(|l| match l {
            CycleLocation::Cell => CycleLocation::Cell,
            CycleLocation::OutNeighbourhood(c) => CycleLocation::OutNeighbourhood(f(c)),
            CycleLocation::InNeighbourhood(c) => CycleLocation::InNeighbourhood(f(c)),
        });
        FoundCycle { cycle: self.cycle.into_iter().map(f).collect(), location }
    }

    fn certificate(self, p: &Pog, closure: &Closure) -> Certificate {
        let extra: Vec<(usize, usize)> = match self.location {
            Some(CycleLocation::OutNeighbourhood(c)) => self.cycle.iter().map(|&v| (c, v)).collect(),
            Some(CycleLocation::InNeighbourhood(c)) => self.cycle.iter().map(|&v| (v, c)).collect(),
            _ => Vec::new(),
        };
        cycle_certificate(p, closure, self.cycle, self.location, &extra)
    }
}

fn rotate_min(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(m) = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).map(|(i, _)| i) {
        cycle.rotate_left(m);
    }
    cycle
}

/// Directed cycles inside a neighbourhood of a vertex, or inside a
/// non-universal cell when `cells` is set.
fn forbidden_cycle(p: &Pog, cells: bool) -> Option<FoundCycle> {
    let within = |set: &[usize]| -> Option<Vec<usize>> {
        find_directed_cycle(&p.induced(set)).map(|c| rotate_min(c.into_iter().map(|i| set[i]).collect()))
    };
    if cells {
        let a = analyze(p);
        for cell in a.cells.iter().filter(|c| c.len() >= 3 && !a.universal.contains(&c[0])) {
            if let Some(cycle) = within(cell) {
                return Some(FoundCycle { cycle, location: Some(CycleLocation::Cell) });
            }
        }
    }
    for v in 0..p.n() {
        if let Some(cycle) = within(&p.out_neighbours(v)) {
            return Some(FoundCycle { cycle, location: Some(CycleLocation::OutNeighbourhood(v)) });
        }
        if let Some(cycle) = within(&p.in_neighbours(v)) {
            return Some(FoundCycle { cycle, location: Some(CycleLocation::InNeighbourhood(v)) });
        }
    }
    None
}

fn require_ltlt(d: &OrientedGraph, p: &Pog) {
    let r = classify(d);
    assert!(r.is_local_tournament && r.is_locally_transitive_lt, "completion is not locally transitive");
    assert!(d.contains_arcs_of(p), "completion lost an arc");
}

/// Completes a friendly pog on a complete graph to a locally transitive
/// tournament.
pub fn friendly_complete_graph(p: &Pog) -> Result<Verdict<OrientedGraph>> {
    if !p.is_complete() {
        return Err(Error::NotInClass("underlying graph is not complete".into()));
    }
    if let Err(cert) = is_friendly(p) {
        return Err(Error::NotFriendly(Box::new(cert)));
    }
    match complete_graph_inner(p) {
        Ok(d) => Ok(Ok(d)),
        Err(found) => {
            let closure = closure_in_mode(p, AuxMode::LocalTournament).expect("friendly pogs are closed");
            Ok(Err(found.certificate(p, &closure)))
        }
    }
}

/// Tournaments of the arc components are merged one by one.
fn complete_graph_inner(p: &Pog) -> std::result::Result<OrientedGraph, FoundCycle> {
    if let Some(found) = forbidden_cycle(p, false) {
        return Err(found);
    }
    let arc_graph = p.arc_digraph();
    let groups = arc_graph.as_pog().components();
    let mut merged: Option<(OrientedGraph, Vec<usize>)> = None;
    for g in groups {
        let part = p.induced(&g);
        merged = Some(match merged {
            None => (OrientedGraph::try_from(part).expect("arc components are tournaments"), g),
            Some((t, mut verts)) => {
                let m = merge_ltt(&t, &part).expect("parts are locally transitive tournaments");
                verts.extend(g);
                (m, verts)
            }
        });
    }
    let mut out = p.clone();
    if let Some((t, verts)) = merged {
        for (u, v) in t.arcs() {
            let (a, b) = (verts[u], verts[v]);
            if out.is_edge(a, b) {
                out.orient(a, b).expect("edge slot");
            }
        }
    }
    let d = OrientedGraph::try_from(out).expect("complete and oriented");
    require_ltlt(&d, p);
    Ok(d)
}

/// Completes a friendly pog to a locally transitive local tournament.
///
/// The consentaneous closure is taken first, so friendliness is judged on
/// the closure. Certificates refer to `p`.
pub fn complete_friendly(p: &Pog) -> Result<Verdict<OrientedGraph>> {
    let closure = match closure_in_mode(p, AuxMode::LocalTournament) {
        Ok(c) => c,
        Err(cert) => return Ok(Err(cert)),
    };
    let q = closure.pog.clone();
    if let Some(&(x, y, z)) = bad_triples(&q).first() {
        return Err(Error::NotFriendly(Box::new(Certificate::BadTriple { x, y, z })));
    }
    let mut out = q.clone();
    for comp in q.components() {
        let sub = q.induced(&comp);
        match complete_component(&sub) {
            Ok(d) => {
                for (u, v) in d.arcs() {
                    let (a, b) = (comp[u], comp[v]);
                    if out.is_edge(a, b) {
                        out.orient(a, b).expect("edge slot");
                    }
                }
            }
            Err(found) => return Ok(Err(found.map(|i| comp[i]).certificate(p, &closure))),
        }
    }
    let d = OrientedGraph::try_from(out).expect("all components completed");
    require_ltlt(&d, p);
    Ok(Ok(d))
}

/// One connected component of a closed friendly pog.
fn complete_component(p: &Pog) -> std::result::Result<OrientedGraph, FoundCycle> {
    if let Some(found) = forbidden_cycle(p, true) {
        return Err(found);
    }
    if p.is_complete() {
        return complete_graph_inner(p);
    }
    let a = analyze(p);
    let mut cur = p.clone();
    for cell in a.cells.iter().filter(|c| c.len() >= 2 && !a.universal.contains(&c[0])) {
        let order = topological_order(&cur.induced(cell)).expect("cell cycles were ruled out");
        for (i, &x) in order.iter().enumerate() {
            for &y in &order[i + 1..] {
                let (u, v) = (cell[x], cell[y]);
                if cur.is_edge(u, v) {
                    cur.orient(u, v).expect("edge slot");
                }
            }
        }
    }
    let single_thick = a.thick_components <= 1 || a.bipartitions.iter().any(Option::is_none);
    let d = if single_thick {
        complete_via_aux(&cur, AuxMode::LocalTournament).expect("cell orientations leave the aux colouring intact")
    } else {
        complete_between_components(&cur, &a)?
    };
    require_ltlt(&d, p);
    Ok(d)
}

fn complete_between_components(p: &Pog, a: &Analysis) -> std::result::Result<OrientedGraph, FoundCycle> {
    let n = p.n();
    let mut cur = p.clone();
    let mut comp_of = vec![0; n];
    for (i, c) in a.complement_components.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    // Unbalanced edges inside each complement component form one auxiliary
    // component; give untouched ones their canonical colour class.
    let aux = build_aux(&cur, AuxMode::LocalTournament);
    let colouring = aux.two_colour().expect("friendly pogs have a bipartite aux graph");
    for comp in aux.components() {
        let (u0, v0) = aux.pair(comp[0]);
        if aux.is_thin(aux.component_of(comp[0])) || comp_of[u0] != comp_of[v0] {
            continue;
        }
        if comp.iter().any(|&i| {
            let (u, v) = aux.pair(i);
            cur.is_arc(u, v)
        }) {
            continue;
        }
        for &i in comp {
            if colouring.red[i] {
                let (u, v) = aux.pair(i);
                cur.orient(u, v).expect("untouched component");
            }
        }
    }

    let reps: Vec<usize> = a.complement_components.iter().map(|c| c[0]).collect();
    let k = cur.induced(&reps);
    let r = complete_graph_inner(&k).map_err(|f| f.map(|i| reps[i]))?;
    let parts: Vec<(Vec<usize>, Vec<usize>)> =
        a.bipartitions.iter().map(|b| b.clone().expect("bipartite complement")).collect();
    let dominate = |from: &[usize], to: &[usize], cur: &mut Pog| {
        for &x in from {
            for &y in to {
                if cur.is_edge(x, y) {
                    cur.orient(x, y).expect("edge slot");
                }
            }
        }
    };
    for i in 0..reps.len() {
        for j in 0..reps.len() {
            if i == j || !r.is_arc(i, j) {
                continue;
            }
            let (si, ti) = (&parts[i].0, &parts[i].1);
            let (sj, tj) = (&parts[j].0, &parts[j].1);
            match (ti.is_empty(), tj.is_empty()) {
                (false, false) => {
                    dominate(si, sj, &mut cur);
                    dominate(sj, ti, &mut cur);
                    dominate(ti, tj, &mut cur);
                    dominate(tj, si, &mut cur);
                }
                (false, true) => {
                    dominate(si, sj, &mut cur);
                    dominate(sj, ti, &mut cur);
                }
                (true, false) => {
                    dominate(tj, si, &mut cur);
                    dominate(si, sj, &mut cur);
                }
                (true, true) => dominate(si, sj, &mut cur),
            }
        }
    }
    Ok(OrientedGraph::try_from(cur).expect("every edge oriented"))
}

/// A proper circular-arc representation of the underlying graph, or a
/// certificate that none exists.
pub fn recognize_proper_circular_arc(g: &Pog) -> Verdict<Representation> {
    let u = g.underlying();
    let d = if u.is_connected() {
        match complete_friendly(&u) {
            Ok(v) => v?,
            Err(e) => panic!("graphs without arcs are friendly: {e}"),
        }
    } else {
        // Disconnected graphs need every component to be proper interval.
        crate::chordal::complete_to_acyclic_lt(&u)?
    };
    Ok(representation_from_orientation(&d, Target::Circular).expect("valid orientation"))
}

/// Options for [`extend_circular_arc_representation`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtendOptions {
    /// Accept complement components with no represented vertex. The lifted
    /// pog may then fail to be friendly.
    pub allow_uncovered: bool,
}

/// Extends a proper circular-arc representation of an induced subgraph to
/// the whole (connected) graph, keeping the orientation of the given part.
///
/// Certificates refer to the pog obtained by orienting the represented part.
pub fn extend_circular_arc_representation(
    g: &Pog,
    partial: &Representation,
    opts: ExtendOptions,
) -> Result<Verdict<Representation>> {
    if !matches!(partial.kind, RepKind::Circular { .. }) {
        return Err(Error::InvalidRepresentation("expected a circular-arc representation".into()));
    }
    let base = g.underlying();
    if partial.entries.is_empty() {
        return Ok(recognize_proper_circular_arc(&base));
    }
    if !base.is_connected() {
        return Err(Error::UnsupportedInstance("circular-arc extension needs a connected graph".into()));
    }
    let p = lift(g, partial)?;
    let represented: Vec<bool> = {
        let mut r = vec![false; p.n()];
        for e in &partial.entries {
            r[p.vertex(&e.name)?] = true;
        }
        r
    };
    let a = analyze(&p);
    if !opts.allow_uncovered {
        if let Some(c) = a.complement_components.iter().find(|c| c.iter().all(|&v| !represented[v])) {
            return Err(Error::UnsupportedInstance(format!(
                "complement component containing `{}` has no represented vertex",
                p.name(c[0])
            )));
        }
    }
    match complete_friendly(&p)? {
        Err(cert) => Ok(Err(cert)),
        Ok(d) => {
            let rep = representation_from_orientation(&d, Target::Circular)?;
            check_agrees(g, partial, &rep)?;
            Ok(Ok(rep))
        }
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
    fn one_bad_triple_in_k4() {
        let p = pog("arc a b\narc b c\nedge a c\nedge a d\nedge b d\nedge c d");
        assert_eq!(bad_triples(&p), vec![(0, 1, 2)]);
        assert_eq!(is_friendly(&p), Err(Certificate::BadTriple { x: 0, y: 1, z: 2 }));
        assert!(verify_certificate(&p, &Certificate::BadTriple { x: 0, y: 1, z: 2 }));
    }

    #[test]
    fn cycles_analysis() {
        let c4 = pog("edge a b\nedge b c\nedge c d\nedge d a");
        let a = analyze(&c4);
        assert_eq!(a.complement_components, vec![vec![0, 2], vec![1, 3]]);
        assert!(a.universal.is_empty());
        assert_eq!(a.cells.len(), 4);
    }

    #[test]
    fn friendly_complete_examples() {
        let k4 = pog("edge a b\nedge a c\nedge a d\nedge b c\nedge b d\nedge c d");
        let d = friendly_complete_graph(&k4).unwrap().unwrap();
        assert!(classify(&d).is_locally_transitive_lt);
        let two = pog("arc a b\narc b c\narc c a\narc x y\narc y z\narc z x\n\
                       edge a x\nedge a y\nedge a z\nedge b x\nedge b y\nedge b z\nedge c x\nedge c y\nedge c z");
        let d = friendly_complete_graph(&two).unwrap().unwrap();
        assert!(d.contains_arcs_of(&two));
    }

    #[test]
    fn cycles_and_wheels() {
        for n in 4..9 {
            let mut c = Pog::with_size(n);
            for i in 0..n {
                c.add_edge(i, (i + 1) % n).unwrap();
            }
            let d = complete_friendly(&c).unwrap().unwrap();
            assert!(classify(&d).is_locally_transitive_lt);
            let rep = recognize_proper_circular_arc(&c).unwrap();
            assert_eq!(rep.entries.len(), n);
        }
    }

    #[test]
    fn claw_is_not_pca() {
        let claw = pog("edge c x\nedge c y\nedge c z");
        let cert = recognize_proper_circular_arc(&claw).unwrap_err();
        assert!(verify_certificate(&claw, &cert));
    }

    #[test]
    fn c4_extension() {
        let g = pog("edge a b\nedge b c\nedge c d\nedge d a");
        let partial = Representation::parse("ca a 0 5 20\nca b 4 9 20").unwrap();
        let rep = extend_circular_arc_representation(&g, &partial, ExtendOptions::default()).unwrap().unwrap();
        assert_eq!(rep.entries.len(), 4);
    }
}
