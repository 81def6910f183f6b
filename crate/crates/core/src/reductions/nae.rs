//! NAE-3SAT to two-color STC with budget `3m`.
//!
//! Each variable becomes a cycle `v_1..v_{2m}` with a middle vertex `c_i` on
//! every cycle edge (a ring of triangles). Each clause becomes a `K_{2,3}` on
//! `{a1, a2} x {b1, b2, b3}` with one connector edge per literal from `b_p`
//! to a middle vertex of the literal's variable: positive literals take the
//! next unused even index, negative literals the next unused odd index.

use super::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{Labeling, MultiInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeLayout {
    /// Formula after padding to at least three clauses.
    pub formula: CnfFormula,
    /// Cycle length per variable gadget.
    pub cycle_len: usize,
    /// `cycle[x][i]` is `v_{i+1}` of variable `x`.
    pub cycle: Vec<Vec<usize>>,
    /// `middle[x][i]` is `c_{i+1}` of variable `x`.
    pub middle: Vec<Vec<usize>>,
    pub clause_a: Vec<[usize; 2]>,
    pub clause_b: Vec<[usize; 3]>,
    /// `connector[j][p]` is the middle vertex joined to `b_{p+1}` of clause `j`.
    pub connector: Vec<[usize; 3]>,
}

pub fn reduce_nae3sat(f: &CnfFormula) -> Result<(MultiInstance, NaeLayout)> {
    let f = CnfFormula::new(f.num_vars, f.clauses.clone())?;
    if f.clauses.is_empty() {
        return Err(Error::validation("formula has no clauses"));
    }
    let mut clauses = f.clauses.clone();
    let mut i = 0;
    while clauses.len() < 3 {
        clauses.push(f.clauses[i % f.clauses.len()]);
        i += 1;
    }
    let formula = CnfFormula {
        num_vars: f.num_vars,
        clauses,
    };
    let m = formula.clauses.len();
    let len = 2 * m;

    let mut next = 0;
    let mut fresh = |k: usize| {
        let ids: Vec<usize> = (next..next + k).collect();
        next += k;
        ids
    };
    let mut pairs = Vec::new();
    let mut cycle = Vec::new();
    let mut middle = Vec::new();
    for _ in 0..formula.num_vars {
        let v = fresh(len);
        let c = fresh(len);
        for i in 0..len {
            let (a, b) = (v[i], v[(i + 1) % len]);
            pairs.extend([(a, b), (a, c[i]), (b, c[i])]);
        }
        cycle.push(v);
        middle.push(c);
    }

    // Next unused slot per variable; 1-based even indices are 0-based odd.
    let mut next_even = vec![1usize; formula.num_vars];
    let mut next_odd = vec![0usize; formula.num_vars];
    let mut clause_a = Vec::new();
    let mut clause_b = Vec::new();
    let mut connector = Vec::new();
    for cl in &formula.clauses {
        let a = fresh(2);
        let b = fresh(3);
        for &x in &a {
            for &y in &b {
                pairs.push((x, y));
            }
        }
        let mut conn = [0; 3];
        for (p, lit) in cl.iter().enumerate() {
            let slot = if lit.negated {
                &mut next_odd[lit.var]
            } else {
                &mut next_even[lit.var]
            };
            conn[p] = middle[lit.var][*slot];
            *slot += 2;
            pairs.push((b[p], conn[p]));
        }
        clause_a.push([a[0], a[1]]);
        clause_b.push([b[0], b[1], b[2]]);
        connector.push(conn);
    }

    let g = Graph::new(next, &pairs).expect("gadget edges are distinct");
    let inst = MultiInstance::new(g, 2, 3 * m)?;
    Ok((
        inst,
        NaeLayout {
            formula,
            cycle_len: len,
            cycle,
            middle,
            clause_a,
            clause_b,
            connector,
        },
    ))
}

/// Clause-gadget colors on `{a1,b*}`, `{a2,b*}` for the connector on `b_x`
/// colored 1, on `b_y` colored 2 and on `b_z` weak.
pub fn clause_gadget_colors(x: usize, y: usize, z: usize) -> ([usize; 3], [usize; 3]) {
    let mut a1 = [0; 3];
    let mut a2 = [0; 3];
    a1[x] = 2;
    a1[y] = 0;
    a1[z] = 1;
    a2[x] = 0;
    a2[y] = 1;
    a2[z] = 2;
    (a1, a2)
}

pub fn nae_labeling_from_assignment(
    g: &Graph,
    layout: &NaeLayout,
    assignment: &[bool],
) -> Result<Labeling> {
    let f = &layout.formula;
    if assignment.len() != f.num_vars {
        return Err(Error::contract("assignment length differs from variable count"));
    }
    if !f.is_nae_satisfied(assignment) {
        return Err(Error::contract("assignment is not NAE-satisfying"));
    }
    let eid = |a: usize, b: usize| g.edge_id(a, b).expect("layout edge exists");
    let mut color = vec![0; g.m()];
    let len = layout.cycle_len;
    for x in 0..f.num_vars {
        let (v, c) = (&layout.cycle[x], &layout.middle[x]);
        for i in 0..len {
            // Triangle i+1: odd triangles take 1 when true, 2 when false.
            let odd = i % 2 == 0;
            let col = if odd == assignment[x] { 1 } else { 2 };
            let (a, b) = (v[i], v[(i + 1) % len]);
            color[eid(a, b)] = col;
            color[eid(a, c[i])] = col;
            color[eid(b, c[i])] = col;
        }
    }
    for (j, cl) in f.clauses.iter().enumerate() {
        let vals: Vec<bool> = cl.iter().map(|l| l.value(assignment)).collect();
        let x = vals.iter().position(|&t| t).unwrap();
        let y = vals.iter().position(|&t| !t).unwrap();
        let z = 3 - x - y;
        let b = layout.clause_b[j];
        let [a1, a2] = layout.clause_a[j];
        color[eid(b[x], layout.connector[j][x])] = 1;
        color[eid(b[y], layout.connector[j][y])] = 2;
        color[eid(b[z], layout.connector[j][z])] = 0;
        let (c1, c2) = clause_gadget_colors(x, y, z);
        for p in 0..3 {
            color[eid(a1, b[p])] = c1[p];
            color[eid(a2, b[p])] = c2[p];
        }
    }
    Ok(Labeling::new(color))
}

/// One clause gadget with pendant connector endpoints: vertices
/// `a1=0, a2=1, b1..b3=2..4, d1..d3=5..7`. Returns the graph and the
/// connector edge ids in `b` order.
pub fn isolated_clause_gadget() -> (Graph, [usize; 3]) {
    let mut pairs = Vec::new();
    for a in 0..2 {
        for b in 2..5 {
            pairs.push((a, b));
        }
    }
    for p in 0..3 {
        pairs.push((2 + p, 5 + p));
    }
    let g = Graph::new(8, &pairs).unwrap();
    let conn = [0, 1, 2].map(|p| g.edge_id(2 + p, 5 + p).unwrap());
    (g, conn)
}
