//! Decomposition of locally transitive tournaments into transitive parts over
//! a regular frame, and merging of two such tournaments.

use crate::classify::{classify, topological_order};
use crate::pog::{OrientedGraph, Pog};
use crate::round::find_round_ordering;
use crate::{Error, Result};

/// `T = frame[parts[0], ..., parts[k-1]]`.
///
/// Frame vertex `i` stands for `parts[i]` and carries the name of its first
/// member. Each part is listed in its transitive order, source first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoonDecomposition {
    pub frame: OrientedGraph,
    pub parts: Vec<Vec<usize>>,
}

fn require_ltt(t: &Pog) -> Result<()> {
    let r = classify(t);
    if r.is_oriented && r.is_tournament && r.is_locally_transitive_lt {
        Ok(())
    } else {
        Err(Error::NotLtt)
    }
}

/// Repeatedly merges twins (vertices with equal in- and out-neighbourhoods
/// outside the pair) until the quotient has none.
pub fn moon_decompose(t: &Pog) -> Result<MoonDecomposition> {
    require_ltt(t)?;
    let n = t.n();
    let mut groups: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    'merge: loop {
        let reps: Vec<usize> = groups.iter().map(|g| g[0]).collect();
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                let twins = (0..reps.len())
                    .filter(|&c| c != a && c != b)
                    .all(|c| t.is_arc(reps[a], reps[c]) == t.is_arc(reps[b], reps[c]));
                if twins {
                    let moved = groups.remove(b);
                    groups[a].extend(moved);
                    continue 'merge;
                }
            }
        }
        break;
    }
    for g in &mut groups {
        g.sort_unstable();
        let sub = t.induced(g);
        let order = topological_order(&sub).expect("parts of a locally transitive tournament are acyclic");
        *g = order.into_iter().map(|i| g[i]).collect();
    }
    groups.sort_by_key(|g| *g.iter().min().unwrap());
    let names: Vec<&str> = groups.iter().map(|g| t.name(g[0])).collect();
    let mut frame = OrientedGraph::with_vertices(&names).expect("names from a valid pog");
    for i in 0..groups.len() {
        for j in 0..groups.len() {
            if i != j && t.is_arc(groups[i][0], groups[j][0]) {
                frame.add_arc(i, j).expect("frame is a tournament");
            }
        }
    }
    let k = groups.len();
    assert!(k % 2 == 1, "frame of a locally transitive tournament has odd order");
    assert!((0..k).all(|v| frame.out_degree(v) == k / 2), "frame is not regular");
    Ok(MoonDecomposition { frame, parts: groups })
}

/// A locally transitive tournament on the disjoint union of `t1` and `t2`
/// that contains both.
pub fn merge_ltt(t1: &Pog, t2: &Pog) -> Result<OrientedGraph> {
    let d1 = moon_decompose(t1)?;
    let d2 = moon_decompose(t2)?;
    let names: Vec<&str> = t1.names().iter().chain(t2.names()).map(String::as_str).collect();
    let mut out = OrientedGraph::with_vertices(&names)?;
    let n1 = t1.n();
    // The larger frame hosts the smaller one.
    let (big, small, big_off, small_off) =
        if d1.parts.len() >= d2.parts.len() { (&d1, &d2, 0, n1) } else { (&d2, &d1, n1, 0) };
    let big_order = find_round_ordering(&big.frame).expect("regular tournament frames are round");
    let small_order = find_round_ordering(&small.frame).expect("regular tournament frames are round");
    let a = big.parts.len() / 2;
    let b = small.parts.len() / 2;
    // slot[v] = (position on the big frame, 0 for big parts / 1 for small,
    // rank inside its part) over the merged vertex set.
    let mut slot = vec![(0usize, 0usize, 0usize); out.n()];
    for (p, &f) in big_order.seq().iter().enumerate() {
        for (r, &v) in big.parts[f].iter().enumerate() {
            slot[big_off + v] = (p, 0, r);
        }
    }
    for (i, &f) in small_order.seq().iter().enumerate() {
        let p = if i <= b { i } else { a + i - b };
        for (r, &v) in small.parts[f].iter().enumerate() {
            slot[small_off + v] = (p, 1, r);
        }
    }
    let k = 2 * a + 1;
    for u in 0..out.n() {
        for v in 0..out.n() {
            let (pu, su, ru) = slot[u];
            let (pv, sv, rv) = slot[v];
            let wins = if pu != pv {
                let gap = (pv + k - pu) % k;
                (1..=a).contains(&gap)
            } else if su != sv {
                su < sv
            } else {
                ru < rv
            };
            if u != v && wins {
                out.add_arc(u, v).expect("each pair decided once");
            }
        }
    }
    assert!(out.contains_arcs_of(t1) && out.contains_arcs_of(t2));
    require_ltt(&out).expect("merge is a locally transitive tournament");
    Ok(out)
}
