mod common;

use common::{is_round, random_pog, some_cyclic_ordering, Dig};
use orientcomp::hardness::{search_excellent_ordering, search_nice_ordering};
use orientcomp::moon::{merge_ltt, moon_decompose};
use orientcomp::round::{
    check_ordering, complete_under_excellent, find_round_ordering, round_to_ltt, saturate_to_round_lt,
    OrderingProperty, Violation,
};
use orientcomp::{Ordering, OrientedGraph, Pog};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn oriented(text: &str) -> OrientedGraph {
    OrientedGraph::try_from(Pog::parse(text).unwrap()).unwrap()
}

fn cyclic(seq: &[usize]) -> Ordering {
    Ordering::cyclic(seq.to_vec()).unwrap()
}

const C3: &str = "arc a b\narc b c\narc c a";
const C4: &str = "arc a b\narc b c\narc c d\narc d a";
const C5: &str = "arc a b\narc b c\narc c d\narc d e\narc e a";

#[test]
fn triangle_is_round_in_its_own_order() {
    let d = oriented(C3);
    assert!(check_ordering(&d, &cyclic(&[0, 1, 2]), OrderingProperty::Round).unwrap().is_ok());
}

#[test]
fn crossing_arcs_violate_excellence() {
    let d = oriented("v v1\nv v2\nv v3\nv v4\narc v1 v4\narc v3 v2");
    let got = check_ordering(&d, &cyclic(&[0, 1, 2, 3]), OrderingProperty::Excellent).unwrap();
    assert_eq!(got, Err(Violation::Excellent { first: (0, 3), second: (2, 1) }));
}

#[test]
fn excellent_orderings_are_nice() {
    let mut rng = StdRng::seed_from_u64(6);
    let mut excellent = 0;
    for k in 0..500 {
        let m = random_pog(&mut rng, 3 + k % 5, 0.5, 1.0);
        let d = m.to_pog();
        if let Some(o) = search_excellent_ordering(&d).unwrap() {
            excellent += 1;
            assert!(check_ordering(&d, &o, OrderingProperty::Nice).unwrap().is_ok());
            assert!(search_nice_ordering(&d).unwrap().is_some());
        }
    }
    assert!(excellent > 100);
}

#[test]
fn round_orderings_of_small_graphs() {
    let c4 = oriented(C4);
    assert_eq!(find_round_ordering(&c4).unwrap().rotated_to(0).seq(), [0, 1, 2, 3]);

    let tt = oriented("arc a b\narc b c\narc a c");
    assert_eq!(find_round_ordering(&tt).unwrap().seq(), [0, 1, 2]);

    // x dominates a directed triangle
    let bad = oriented("arc a b\narc b c\narc c a\narc x a\narc x b\narc x c");
    assert!(find_round_ordering(&bad).is_none());
    assert!(some_cyclic_ordering(4, &|o| is_round(&Dig::from_oriented(&bad), o)).is_none());
}

#[test]
fn edge_under_a_maximal_arc_follows_the_ordering() {
    let p = Pog::parse("v v1\nv v2\nv v3\narc v1 v3\nedge v1 v2").unwrap();
    let d = complete_under_excellent(&p, &cyclic(&[0, 1, 2])).unwrap();
    assert!(d.is_arc(0, 1));
}

#[test]
fn arc_free_pogs_complete_excellently() {
    let p = Pog::parse("edge a b\nedge b c\nedge c d\nedge a c\nedge d a").unwrap();
    let o = cyclic(&[0, 1, 2, 3]);
    let d = complete_under_excellent(&p, &o).unwrap();
    assert!(check_ordering(&d, &o, OrderingProperty::Excellent).unwrap().is_ok());
}

#[test]
fn saturation_examples() {
    let d = oriented("v v1\nv v2\nv v3\narc v1 v3");
    let o = cyclic(&[0, 1, 2]);
    let s = saturate_to_round_lt(&d, &o).unwrap();
    assert!(s.is_arc(0, 1) && s.is_arc(1, 2) && s.is_arc(0, 2));

    let c4 = oriented(C4);
    let s = saturate_to_round_lt(&c4, &cyclic(&[0, 1, 2, 3])).unwrap();
    assert!(s.same_as(&c4));

    let chorded = oriented(&format!("{C5}\narc a d"));
    let o = cyclic(&[0, 1, 2, 3, 4]);
    let s = saturate_to_round_lt(&chorded, &o).unwrap();
    assert!(is_round(&Dig::from_oriented(&s), o.seq()));
    assert!(Dig::from_oriented(&s).is_local_tournament());
}

#[test]
fn round_graphs_extend_to_locally_transitive_tournaments() {
    assert!(round_to_ltt(&oriented(C3)).unwrap().same_as(&oriented(C3)));

    let c4 = oriented(C4);
    let t = round_to_ltt(&c4).unwrap();
    assert!(t.is_arc(0, 2) && t.is_arc(1, 3));

    let c5 = oriented(C5);
    let t = round_to_ltt(&c5).unwrap();
    assert!(Dig::from_oriented(&t).is_ltt() && t.contains_arcs_of(&c5));
}

#[test]
fn moon_decomposition_examples() {
    let tt = oriented("arc a b\narc a c\narc a d\narc b c\narc b d\narc c d");
    let m = moon_decompose(&tt).unwrap();
    assert_eq!(m.frame.n(), 1);
    assert_eq!(m.parts, [vec![0, 1, 2, 3]]);

    let m = moon_decompose(&oriented(C3)).unwrap();
    assert_eq!(m.frame.n(), 3);
    assert!(m.parts.iter().all(|p| p.len() == 1));

    let ltt4 = oriented("arc a b\narc b c\narc c d\narc d a\narc a c\narc b d");
    let m = moon_decompose(&ltt4).unwrap();
    let sizes: usize = m.parts.iter().map(Vec::len).sum();
    assert_eq!(sizes, 4);
    assert!(Dig::from_oriented(&m.frame).is_ltt());
}

#[test]
fn merging_locally_transitive_tournaments() {
    let t = merge_ltt(&oriented("v a"), &oriented("v b")).unwrap();
    assert_eq!(t.arc_count(), 1);

    let c3 = oriented(C3);
    let t = merge_ltt(&c3, &oriented("v x")).unwrap();
    assert!(Dig::from_oriented(&t).is_ltt() && t.contains_arcs_of(&c3));

    let other = oriented("arc x y\narc y z\narc z x");
    let t = merge_ltt(&c3, &other).unwrap();
    assert_eq!(t.n(), 6);
    assert!(Dig::from_oriented(&t).is_ltt() && t.contains_arcs_of(&c3) && t.contains_arcs_of(&other));
}
