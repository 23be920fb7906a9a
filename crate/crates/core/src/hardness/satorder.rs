use varisat::{ExtendFormula, Lit, Solver, Var};

use crate::pog::{Ordering, Pog};
use crate::round::is_excellent;

/// Pairwise precedence literals of a linear order with vertex 0 first.
struct Precedence {
    n: usize,
    vars: Vec<Var>,
}

impl Precedence {
    /// Literal for "`a` comes before `b`".
    fn before(&self, a: usize, b: usize) -> Lit {
        if a < b {
            self.vars[a * self.n + b].positive()
        } else {
            self.vars[b * self.n + a].negative()
        }
    }
}

/// An excellent cyclic ordering of the arcs of `d`, found with a SAT
/// solver, or `None` when there is none. Edges of `d` are ignored.
///
/// Cut at vertex 0, a cyclic ordering is a linear order. Each pair of arcs
/// forbids the four rotations of its bad interleaving.
pub fn sat_excellent_ordering(d: &Pog) -> Option<Ordering> {
    let n = d.n();
    if n <= 3 {
        let o = Ordering::cyclic((0..n).collect()).expect("identity is a permutation");
        return is_excellent(d, &o).then_some(o).or_else(|| {
            let o = Ordering::cyclic((0..n).rev().collect()).expect("reversal is a permutation");
            is_excellent(d, &o).then_some(o)
        });
    }
    let mut solver = Solver::new();
    let vars: Vec<Var> = (0..n * n).map(|_| solver.new_var()).collect();
    let p = Precedence { n, vars };
    for x in 1..n {
        solver.add_clause(&[p.before(0, x)]);
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                solver.add_clause(&[!p.before(a, b), !p.before(b, c), !p.before(c, a)]);
                solver.add_clause(&[!p.before(b, a), !p.before(c, b), !p.before(a, c)]);
            }
        }
    }
    let mut forbid = |seq: &[usize]| {
        for r in 0..seq.len() {
            let clause: Vec<Lit> =
                (0..seq.len() - 1).map(|q| !p.before(seq[(r + q) % seq.len()], seq[(r + q + 1) % seq.len()])).collect();
            solver.add_clause(&clause);
        }
    };
    let arcs = d.arcs();
    for &(i, j) in &arcs {
        for &(s, t) in &arcs {
            if (i, j) == (s, t) || (i == t && s == j) {
                continue;
            }
            if i == t {
                forbid(&[i, s, j]);
            } else if s == j {
                forbid(&[i, t, j]);
            } else if i != s && j != t {
                forbid(&[i, t, s, j]);
            }
        }
    }
    if !solver.solve().expect("no proof logging or interruption is configured") {
        return None;
    }
    let model = solver.model().expect("a satisfiable formula has a model");
    let truth: std::collections::HashSet<Lit> = model.into_iter().collect();
    let mut seq: Vec<usize> = (0..n).collect();
    seq.sort_by_key(|&v| (0..n).filter(|&u| u != v && truth.contains(&p.before(u, v))).count());
    let o = Ordering::cyclic(seq).expect("sorted vertices form a permutation");
    assert!(is_excellent(d, &o), "solver model is not an excellent ordering");
    Some(o)
}
