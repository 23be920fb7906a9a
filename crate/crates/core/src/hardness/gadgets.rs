use serde::Serialize;

use super::cnf::CnfFormula;
use crate::classify::{classify, find_directed_cycle};
use crate::pog::{Ordering, OrientedGraph, Pog};
use crate::round::is_excellent;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    /// Positive occurrence of a variable.
    X,
    /// Negative occurrence.
    XBar,
    /// The clause wheel.
    Wheel,
}

/// The three building blocks as standalone pogs.
pub fn gadget(kind: GadgetKind) -> Pog {
    let text = match kind {
        GadgetKind::X => {
            "v a\nv b\nv alpha\nv beta\narc a alpha\narc a beta\narc alpha b\narc b beta\nedge a b\nedge alpha beta\n"
        }
        GadgetKind::XBar => {
            "v u\nv v\nv alpha\nv beta\narc v alpha\narc v beta\narc alpha u\narc u beta\nedge u v\nedge alpha beta\n"
        }
        GadgetKind::Wheel => {
            "v c\nv c11\nv c12\nv c21\nv c22\nv c31\nv c32\n\
             arc c c11\narc c c12\narc c c21\narc c c22\narc c c31\narc c c32\n\
             arc c12 c21\narc c22 c31\narc c32 c11\n\
             edge c11 c12\nedge c21 c22\nedge c31 c32\n"
        }
    };
    Pog::parse(text).expect("gadget text is well formed")
}

/// What a vertex of a reduction instance stands for. Variables and clauses
/// are 1-based; `h` and `t` count positive and negative occurrences of the
/// variable in clause order, from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "lowercase")]
pub enum Role {
    Alpha { var: usize },
    Beta { var: usize },
    A { var: usize, h: usize },
    B { var: usize, h: usize },
    U { var: usize, t: usize },
    V { var: usize, t: usize },
    Hub { clause: usize },
}

impl Role {
    pub fn name(&self) -> String {
        match *self {
            Role::Alpha { var } => format!("alpha.x{var}"),
            Role::Beta { var } => format!("beta.x{var}"),
            Role::A { var, h } => format!("a.x{var}.{h}"),
            Role::B { var, h } => format!("b.x{var}.{h}"),
            Role::U { var, t } => format!("u.x{var}.{t}"),
            Role::V { var, t } => format!("v.x{var}.{t}"),
            Role::Hub { clause } => format!("hub.c{clause}"),
        }
    }
}

/// `H'`: the pog built from a formula, and `H`, its arcs alone.
#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub formula: CnfFormula,
    pub pog: Pog,
    pub oriented: OrientedGraph,
    /// Role of each vertex, indexed like `pog`.
    pub roles: Vec<Role>,
    /// For clause `j` (0-based), the rim pairs `(c_k1, c_k2)` of its wheel.
    pub rims: Vec<[(usize, usize); 3]>,
}

impl ReductionInstance {
    fn find(&self, role: Role) -> usize {
        self.roles.iter().position(|&r| r == role).expect("role present")
    }
}

/// Builds the reduction instance of `f`.
pub fn build_reduction(f: &CnfFormula) -> Result<ReductionInstance> {
    let mut occurs = vec![false; f.n_vars + 1];
    for c in &f.clauses {
        for &l in c {
            occurs[l.unsigned_abs() as usize] = true;
        }
    }
    if let Some(v) = (1..=f.n_vars).find(|&v| !occurs[v]) {
        return Err(Error::MalformedFormula(format!("variable {v} occurs in no clause")));
    }
    let mut roles: Vec<Role> = Vec::new();
    for var in 1..=f.n_vars {
        roles.push(Role::Alpha { var });
        roles.push(Role::Beta { var });
    }
    let mut pos_count = vec![0; f.n_vars + 1];
    let mut neg_count = vec![0; f.n_vars + 1];
    // Literal endpoints (c_k1, c_k2) in role form, per clause.
    let mut rim_roles: Vec<[(Role, Role); 3]> = Vec::new();
    for c in &f.clauses {
        let mut rim = [(Role::Hub { clause: 0 }, Role::Hub { clause: 0 }); 3];
        for (k, &l) in c.iter().enumerate() {
            let var = l.unsigned_abs() as usize;
            rim[k] = if l > 0 {
                pos_count[var] += 1;
                let h = pos_count[var];
                roles.push(Role::A { var, h });
                roles.push(Role::B { var, h });
                (Role::A { var, h }, Role::B { var, h })
            } else {
                neg_count[var] += 1;
                let t = neg_count[var];
                roles.push(Role::U { var, t });
                roles.push(Role::V { var, t });
                (Role::U { var, t }, Role::V { var, t })
            };
        }
        rim_roles.push(rim);
    }
    for clause in 1..=f.clauses.len() {
        roles.push(Role::Hub { clause });
    }
    let names: Vec<String> = roles.iter().map(Role::name).collect();
    let mut pog = Pog::with_vertices(&names)?;
    let idx = |r: Role| roles.iter().position(|&x| x == r).expect("role present");
    for var in 1..=f.n_vars {
        let (al, be) = (idx(Role::Alpha { var }), idx(Role::Beta { var }));
        pog.add_edge(al, be)?;
        for h in 1..=pos_count[var] {
            let (a, b) = (idx(Role::A { var, h }), idx(Role::B { var, h }));
            pog.add_arc(a, al)?;
            pog.add_arc(a, be)?;
            pog.add_arc(al, b)?;
            pog.add_arc(b, be)?;
            pog.add_edge(a, b)?;
        }
        for t in 1..=neg_count[var] {
            let (u, v) = (idx(Role::U { var, t }), idx(Role::V { var, t }));
            pog.add_arc(v, al)?;
            pog.add_arc(v, be)?;
            pog.add_arc(al, u)?;
            pog.add_arc(u, be)?;
            pog.add_edge(u, v)?;
        }
    }
    let mut rims = Vec::new();
    for (j, rim) in rim_roles.iter().enumerate() {
        let hub = idx(Role::Hub { clause: j + 1 });
        let pairs: [(usize, usize); 3] = rim.map(|(x, y)| (idx(x), idx(y)));
        for &(x, y) in &pairs {
            pog.add_arc(hub, x)?;
            pog.add_arc(hub, y)?;
        }
        for k in 0..3 {
            pog.add_arc(pairs[k].1, pairs[(k + 1) % 3].0)?;
        }
        rims.push(pairs);
    }
    let oriented = pog.arc_digraph();
    for v in 0..oriented.n() {
        for side in [oriented.out_neighbours(v), oriented.in_neighbours(v)] {
            assert!(find_directed_cycle(&oriented.induced(&side)).is_none(), "neighbourhood in H has a cycle");
        }
    }
    Ok(ReductionInstance { formula: f.clone(), pog, oriented, roles, rims })
}

/// The orientation of `H'` fixed by a satisfying assignment.
pub fn assignment_orientation(r: &ReductionInstance, t: &[bool]) -> Result<OrientedGraph> {
    let f = &r.formula;
    if t.len() != f.n_vars {
        return Err(Error::InvalidOrdering(format!(
            "assignment has {} values, formula has {} variables",
            t.len(),
            f.n_vars
        )));
    }
    if let Some(j) = f.first_unsatisfied(t) {
        return Err(Error::NotSatisfying { clause: j + 1 });
    }
    let mut h = r.pog.clone();
    for (v, role) in r.roles.iter().enumerate() {
        let value = |var: usize| t[var - 1];
        match *role {
            Role::Alpha { var } => {
                let be = r.find(Role::Beta { var });
                if value(var) {
                    h.orient(be, v)?
                } else {
                    h.orient(v, be)?
                }
            }
            Role::A { var, h: k } => {
                let b = r.find(Role::B { var, h: k });
                if value(var) {
                    h.orient(b, v)?
                } else {
                    h.orient(v, b)?
                }
            }
            Role::U { var, t: k } => {
                let w = r.find(Role::V { var, t: k });
                if value(var) {
                    h.orient(v, w)?
                } else {
                    h.orient(w, v)?
                }
            }
            _ => {}
        }
    }
    Ok(OrientedGraph::try_from(h).expect("every edge of the instance is fixed by the assignment"))
}

/// The block layout `alpha(true), hubs, A(true), B(false), alpha(false),
/// A(false), B(true)`, where `A(x)` and `B(x)` are the out- and
/// in-neighbours of `alpha(x)`. It is not always excellent: rim arcs between
/// literals of different variables can point backwards inside a hub's
/// interval.
pub fn layout_ordering(r: &ReductionInstance, t: &[bool]) -> Result<(OrientedGraph, Ordering)> {
    let d = assignment_orientation(r, t)?;
    let f = &r.formula;
    let mut a_set: Vec<Vec<usize>> = vec![Vec::new(); f.n_vars + 1];
    let mut b_set: Vec<Vec<usize>> = vec![Vec::new(); f.n_vars + 1];
    for var in 1..=f.n_vars {
        let al = r.find(Role::Alpha { var });
        let rank = |v: usize| match r.roles[v] {
            Role::A { h, .. } | Role::B { h, .. } => (0, h),
            Role::U { t, .. } | Role::V { t, .. } => (1, t),
            _ => (2, 0),
        };
        a_set[var] = d.out_neighbours(al);
        a_set[var].sort_by_key(|&v| rank(v));
        b_set[var] = d.in_neighbours(al);
        b_set[var].sort_by_key(|&v| rank(v));
    }
    let vars = |value: bool| (1..=f.n_vars).filter(move |&v| t[v - 1] == value);
    let mut seq = Vec::with_capacity(d.n());
    seq.extend(vars(true).map(|v| r.find(Role::Alpha { var: v })));
    seq.extend((1..=f.clauses.len()).map(|j| r.find(Role::Hub { clause: j })));
    for v in vars(true) {
        seq.extend(&a_set[v]);
    }
    for v in vars(false) {
        seq.extend(&b_set[v]);
    }
    seq.extend(vars(false).map(|v| r.find(Role::Alpha { var: v })));
    for v in vars(false) {
        seq.extend(&a_set[v]);
    }
    for v in vars(true) {
        seq.extend(&b_set[v]);
    }
    let order = Ordering::cyclic(seq)?;
    debug_assert!(classify(&d).is_oriented);
    Ok((d, order))
}

/// The orientation of `H'` fixed by a satisfying assignment together with
/// an excellent cyclic ordering of it: the block layout when that is
/// excellent, otherwise one found by [`sat_excellent_ordering`].
///
/// Some satisfying assignments fix an orientation with no excellent ordering
/// at all; those give [`Error::NoExcellentOrdering`].
///
/// [`sat_excellent_ordering`]: super::sat_excellent_ordering
pub fn assignment_to_ordering(r: &ReductionInstance, t: &[bool]) -> Result<(OrientedGraph, Ordering)> {
    let (d, order) = layout_ordering(r, t)?;
    if is_excellent(&d, &order) {
        return Ok((d, order));
    }
    match super::sat_excellent_ordering(&d) {
        Some(order) => Ok((d, order)),
        None => Err(Error::NoExcellentOrdering),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_clauses() -> CnfFormula {
        CnfFormula::new(3, vec![[1, 2, -3], [-1, -2, 3], [1, -2, -3]]).unwrap()
    }

    #[test]
    fn instance_sizes() {
        let r = build_reduction(&three_clauses()).unwrap();
        assert_eq!(r.pog.n(), 3 * 2 + 9 * 2 + 3);
        let single = build_reduction(&CnfFormula::new(3, vec![[1, 2, 3]]).unwrap()).unwrap();
        assert_eq!(single.pog.n(), 6 + 6 + 1);
        assert_eq!(single.pog.edge_count(), 3 + 3);
    }

    #[test]
    fn satisfying_assignments_give_excellent_orderings() {
        let f = three_clauses();
        let r = build_reduction(&f).unwrap();
        for mask in 0..8u32 {
            let t: Vec<bool> = (0..3).map(|i| mask >> i & 1 == 1).collect();
            match assignment_to_ordering(&r, &t) {
                Ok((d, o)) => {
                    assert!(f.is_satisfied_by(&t));
                    assert!(is_excellent(&d, &o));
                }
                Err(Error::NotSatisfying { .. }) => assert!(!f.is_satisfied_by(&t)),
                Err(e) => panic!("{t:?}: {e}"),
            }
        }
    }

    #[test]
    fn block_layout_can_fail() {
        let r = build_reduction(&three_clauses()).unwrap();
        let (d, o) = layout_ordering(&r, &[false, false, false]).unwrap();
        assert!(!is_excellent(&d, &o));
    }

    #[test]
    fn some_satisfying_assignments_admit_no_ordering() {
        let f = CnfFormula::new(4, vec![[1, 2, 3], [1, 3, 4], [1, 4, 2]]).unwrap();
        let r = build_reduction(&f).unwrap();
        assert!(matches!(assignment_to_ordering(&r, &[true, false, false, false]), Err(Error::NoExcellentOrdering)));
        let (d, o) = assignment_to_ordering(&r, &[true, true, false, false]).unwrap();
        assert!(is_excellent(&d, &o));
    }

    #[test]
    fn satisfiable_formula_whose_instance_has_no_ordering() {
        let f = CnfFormula::new(3, vec![[-3, -2, 1], [-1, -3, 2], [2, 3, 1], [-2, -3, -1], [-1, -2, 3], [1, 3, 2]])
            .unwrap();
        let r = build_reduction(&f).unwrap();
        let sats = f.satisfying_assignments();
        assert_eq!(sats.len(), 3);
        for t in sats {
            assert!(matches!(assignment_to_ordering(&r, &t), Err(Error::NoExcellentOrdering)));
        }
        assert!(crate::hardness::sat_excellent_ordering(&r.oriented).is_none());
    }

    #[test]
    fn unused_variable_rejected() {
        let f = CnfFormula::new(4, vec![[1, 2, 3]]).unwrap();
        assert!(matches!(build_reduction(&f), Err(Error::MalformedFormula(_))));
    }
}
