//! 2-SAT via the implication graph and its strong components.
//!
//! Literals follow the DIMACS convention: `v` is variable `v` (1-based) and
//! `-v` its negation.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoSatResult {
    /// `assignment[v - 1]` is the value of variable `v`.
    Sat(Vec<bool>),
    /// A closed implication chain `x => ... => -x => ... => x`, first
    /// literal not repeated at the end.
    Unsat { var: usize, cycle: Vec<i32> },
}

fn node(lit: i32) -> usize {
    let v = lit.unsigned_abs() as usize - 1;
    2 * v + usize::from(lit < 0)
}

fn literal(node: usize) -> i32 {
    let v = (node / 2 + 1) as i32;
    if node.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Solves the conjunction of `clauses` over variables `1..=n_vars`.
///
/// Panics if a literal is zero or names a variable beyond `n_vars`.
pub fn two_sat(n_vars: usize, clauses: &[(i32, i32)]) -> TwoSatResult {
    let m = 2 * n_vars;
    let mut graph = vec![Vec::new(); m];
    for &(a, b) in clauses {
        for lit in [a, b] {
            assert!(lit != 0 && (lit.unsigned_abs() as usize) <= n_vars, "literal {lit} out of range");
        }
        graph[node(-a)].push(node(b));
        graph[node(-b)].push(node(a));
    }
    let comp = tarjan(&graph);
    for v in 0..n_vars {
        if comp[2 * v] == comp[2 * v + 1] {
            let there = path(&graph, 2 * v, 2 * v + 1);
            let back = path(&graph, 2 * v + 1, 2 * v);
            let mut cycle: Vec<i32> = there.iter().map(|&x| literal(x)).collect();
            cycle.pop();
            cycle.extend(back.iter().map(|&x| literal(x)));
            cycle.pop();
            return TwoSatResult::Unsat { var: v + 1, cycle };
        }
    }
    // Tarjan numbers components in reverse topological order.
    TwoSatResult::Sat((0..n_vars).map(|v| comp[2 * v] < comp[2 * v + 1]).collect())
}

fn path(graph: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; graph.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &w in &graph[u] {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut out = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        out.push(cur);
    }
    out.reverse();
    out
}

fn tarjan(graph: &[Vec<usize>]) -> Vec<usize> {
    let n = graph.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut ncomp = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut work: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = work.last_mut() {
            if *i < graph[v].len() {
                let w = graph[v][*i];
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("component root on stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    comp
}
