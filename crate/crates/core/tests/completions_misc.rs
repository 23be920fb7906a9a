mod common;

use common::Dig;
use orientcomp::completions::{
    complete_to_cycle_factor_bruteforce, complete_to_in_tournament, complete_to_strong,
    complete_to_transitive_tournament, cycle_factor, has_cycle_factor, is_k_arc_strong, reduction_from_digraph,
};
use orientcomp::twosat::{two_sat, TwoSatResult};
use orientcomp::{verify_certificate, Certificate, Pog};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn pog(text: &str) -> Pog {
    Pog::parse(text).unwrap()
}

#[test]
fn transitive_tournament_examples() {
    let d = complete_to_transitive_tournament(&pog("arc a b\nedge b c\nedge a c")).unwrap();
    assert!(d.is_arc(0, 1) && Dig::from_oriented(&d).is_transitive_tournament());

    let c3 = pog("arc a b\narc b c\narc c a");
    let cert = complete_to_transitive_tournament(&c3).unwrap_err();
    assert_eq!(cert.tag(), "DirectedCycle");
    assert!(verify_certificate(&c3, &cert));

    let p = pog("arc a b\narc b c\nedge a c\nedge a d\nedge b d\nedge c d");
    let d = complete_to_transitive_tournament(&p).unwrap();
    assert!(Dig::from_oriented(&d).is_transitive_tournament() && d.contains_arcs_of(&p));
}

#[test]
fn strong_completion_examples() {
    let d = complete_to_strong(&pog("arc a b\nedge b c\nedge c a")).unwrap();
    assert!(d.is_arc(1, 2) && d.is_arc(2, 0));

    let edge = pog("edge a b");
    assert_eq!(complete_to_strong(&edge).unwrap_err(), Certificate::Bridge { u: 0, v: 1 });

    let p = pog("arc a b\nedge b c\nedge c d\narc a d");
    let cert = complete_to_strong(&p).unwrap_err();
    assert_eq!(cert, Certificate::DirectedCut { side: vec![0] });
    assert!(verify_certificate(&p, &cert));
}

#[test]
fn in_tournament_examples() {
    let claw = pog("edge c x\nedge c y\nedge c z");
    let d = complete_to_in_tournament(&claw).unwrap();
    assert!(d.is_arc(0, 1) && d.is_arc(0, 2) && d.is_arc(0, 3));

    let p = pog("arc x c\narc y c\nedge c z");
    let cert = complete_to_in_tournament(&p).unwrap_err();
    assert_eq!(cert.tag(), "NoCompletion");
    assert!(verify_certificate(&p, &cert));
}

/// A random chordal graph: each new vertex joins a clique of earlier ones.
fn random_chordal(rng: &mut StdRng, n: usize) -> Pog {
    let mut p = Pog::with_size(n);
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        for u in 0..v {
            if u != anchor && p.adjacent(u, anchor) && clique.iter().all(|&w| p.adjacent(u, w)) && rng.gen_bool(0.5) {
                clique.push(u);
            }
        }
        if rng.gen_bool(0.85) {
            for u in clique {
                p.add_edge(u, v).unwrap();
            }
        }
    }
    p
}

#[test]
fn chordal_graphs_orient_as_in_tournaments() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let g = random_chordal(&mut rng, n);
        let d = complete_to_in_tournament(&g).unwrap();
        assert!(Dig::from_oriented(&d).is_in_tournament());
    }
}

#[test]
fn two_sat_examples() {
    assert_eq!(two_sat(1, &[(1, 1)]), TwoSatResult::Sat(vec![true]));
    assert!(matches!(two_sat(2, &[(1, 2), (-1, 2), (1, -2), (-1, -2)]), TwoSatResult::Unsat { .. }));
}

#[test]
fn two_sat_matches_truth_tables() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=12usize);
        let m = rng.gen_range(0..=3 * n);
        let lit = |rng: &mut StdRng| {
            let v = rng.gen_range(1..=n as i32);
            if rng.gen_bool(0.5) {
                v
            } else {
                -v
            }
        };
        let clauses: Vec<(i32, i32)> = (0..m).map(|_| (lit(&mut rng), lit(&mut rng))).collect();
        let holds = |a: &[bool], l: i32| a[l.unsigned_abs() as usize - 1] == (l > 0);
        let satisfiable = (0..1u32 << n).any(|mask| {
            let a: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            clauses.iter().all(|&(x, y)| holds(&a, x) || holds(&a, y))
        });
        match two_sat(n, &clauses) {
            TwoSatResult::Sat(a) => {
                assert!(satisfiable);
                assert!(clauses.iter().all(|&(x, y)| holds(&a, x) || holds(&a, y)));
            }
            TwoSatResult::Unsat { var, cycle } => {
                assert!(!satisfiable);
                assert!(cycle.contains(&(var as i32)) && cycle.contains(&-(var as i32)));
            }
        }
    }
}

#[test]
fn cycle_factor_examples() {
    assert!(has_cycle_factor(&pog("arc a b\narc b c\narc c a")));
    assert!(!has_cycle_factor(&pog("arc a b\narc b c\narc a c")));
    let two = pog("arc a b\narc b c\narc c a\narc x y\narc y z\narc z x");
    let succ = cycle_factor(&two).unwrap();
    assert!((0..6).all(|v| two.is_arc(v, succ[v])));
}

#[test]
fn cycle_factor_completion_examples() {
    let d = complete_to_cycle_factor_bruteforce(&pog("edge a b\nedge b c\nedge c d\nedge d a"), 20).unwrap().unwrap();
    assert!(has_cycle_factor(&d));
    let p = pog("edge a b\nv c");
    let cert = complete_to_cycle_factor_bruteforce(&p, 20).unwrap().unwrap_err();
    assert!(verify_certificate(&p, &cert));
}

/// Cycle factors of `b` avoiding 2-cycles, by brute force over successor
/// maps.
fn has_long_cycle_factor(n: usize, arcs: &[(usize, usize)]) -> bool {
    fn go(v: usize, n: usize, arcs: &[(usize, usize)], succ: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if v == n {
            return (0..n).all(|u| succ[succ[u]] != u);
        }
        for &(a, b) in arcs {
            if a == v && !used[b] {
                used[b] = true;
                succ[v] = b;
                if go(v + 1, n, arcs, succ, used) {
                    return true;
                }
                used[b] = false;
            }
        }
        false
    }
    go(0, n, arcs, &mut vec![0; n], &mut vec![false; n])
}

#[test]
fn digraph_reduction_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.3) {
                    arcs.push((u, v));
                }
            }
        }
        let p = reduction_from_digraph(n, &arcs).unwrap();
        if p.edge_count() > 20 {
            continue;
        }
        let got = complete_to_cycle_factor_bruteforce(&p, 20).unwrap();
        assert_eq!(got.is_ok(), has_long_cycle_factor(n, &arcs), "{arcs:?}");
    }
}

#[test]
fn arc_strength() {
    let c3 = pog("arc a b\narc b c\narc c a");
    assert!(is_k_arc_strong(&c3, 1));
    assert!(!is_k_arc_strong(&c3, 2));
    let mut text = String::new();
    for v in 0..5 {
        text.push_str(&format!("arc v{v} v{}\narc v{v} v{}\n", (v + 1) % 5, (v + 2) % 5));
    }
    assert!(is_k_arc_strong(&pog(&text), 2));
}
