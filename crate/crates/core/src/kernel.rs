//! Kernelization on closed critical cliques.
//!
//! A closed critical clique `K` is shrunk when
//! `|K| > tau * |E(N(K), N2(K))|`, where `tau` counts distinct nonempty edge
//! lists. For every `v` in `N(K)` and every nonempty list on edges between
//! `v` and `K`, at most `|E({v}, N2(K))|` vertices of `K` are kept; the rest
//! are deleted and the budget drops by the deleted edges with empty lists.

use std::collections::BTreeSet;

use crate::critical::{critical_cliques, CriticalCliqueDecomposition};
use crate::error::{Error, Result};
use crate::gallai::k1;
use crate::graph::Graph;
use crate::model::{ElInstance, Labeling};

pub fn tau(inst: &ElInstance) -> usize {
    inst.psi
        .iter()
        .filter(|l| !l.is_empty())
        .collect::<BTreeSet<_>>()
        .len()
}

/// One application of the clique rule. Vertex ids are those of the instance
/// the rule was applied to (original ids when stored in a [`KernelTrace`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Application {
    pub tau: usize,
    pub clique: Vec<usize>,
    pub neighborhood: Vec<usize>,
    pub second_neighborhood: Vec<usize>,
    pub marked: Vec<usize>,
    pub deleted_vertices: Vec<usize>,
    pub deleted_edges: Vec<(usize, usize)>,
    pub empty_deleted: Vec<(usize, usize)>,
    pub budget_decrement: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Rule(Application),
    /// Edges inside a critical clique whose empty list was replaced by `{1}`
    /// at the cost of one budget unit each.
    NormalizeEmpty(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelTrace {
    /// `tau` of the input instance.
    pub tau: usize,
    pub steps: Vec<Step>,
    /// Original vertex id to reduced vertex id.
    pub vertex_map: Vec<Option<usize>>,
    /// The budget went negative; `reduced` is the canonical no-instance.
    pub infeasible: bool,
}

impl KernelTrace {
    pub fn applications(&self) -> impl Iterator<Item = &Application> {
        self.steps.iter().filter_map(|s| match s {
            Step::Rule(a) => Some(a),
            Step::NormalizeEmpty(_) => None,
        })
    }

    pub fn total_decrement(&self) -> usize {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Rule(a) => a.budget_decrement,
                Step::NormalizeEmpty(e) => e.len(),
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub reduced: ElInstance,
    pub trace: KernelTrace,
    /// `(tau' + 1) * 2 * k1` of the reduced instance.
    pub bound: usize,
    pub reduced_k1: usize,
}

impl KernelResult {
    pub fn within_bound(&self) -> bool {
        self.reduced.g.n() <= self.bound
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KernelOptions {
    /// Rewrite empty lists on edges inside critical cliques to `{1}`,
    /// charging one budget unit per edge.
    pub normalize_empty_cc: bool,
}

/// Number of edges between the vertex sets `a` and `b` (disjoint).
fn edges_between(g: &Graph, a: &[usize], b: &[usize]) -> usize {
    let mut in_b = vec![false; g.n()];
    for &x in b {
        in_b[x] = true;
    }
    a.iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| in_b[w]).count())
        .sum()
}

fn rule_applies(inst: &ElInstance, d: &CriticalCliqueDecomposition, i: usize, tau: usize) -> bool {
    if !d.closed[i] {
        return false;
    }
    let cut = edges_between(&inst.g, &d.neighborhood(i), &d.second_neighborhood(i));
    d.cliques[i].len() > tau * cut
}

/// Output of a single rule application, ids local to the input instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueReduction {
    pub reduced: ElInstance,
    /// Input vertex id to reduced vertex id.
    pub map: Vec<Option<usize>>,
    pub application: Application,
    /// The decrement exceeded `k`; `reduced.k` was clamped to 0.
    pub budget_exhausted: bool,
}

/// Applies the clique rule to the critical clique with the given vertex set.
pub fn reduce_closed_clique(inst: &ElInstance, clique: &[usize]) -> Result<CliqueReduction> {
    let g = &inst.g;
    let d = critical_cliques(g);
    let Some(&first) = clique.first() else {
        return Err(Error::contract("empty clique"));
    };
    let idx = *d
        .clique_of
        .get(first)
        .ok_or_else(|| Error::contract(format!("vertex {first} out of range")))?;
    let mut sorted = clique.to_vec();
    sorted.sort_unstable();
    if d.cliques[idx] != sorted {
        return Err(Error::contract("vertex set is not a critical clique"));
    }
    let t = tau(inst);
    if !rule_applies(inst, &d, idx, t) {
        return Err(Error::contract(
            "clique is open or within the size bound",
        ));
    }

    let nk = d.neighborhood(idx);
    let n2 = d.second_neighborhood(idx);
    let mut in_n2 = vec![false; g.n()];
    for &x in &n2 {
        in_n2[x] = true;
    }
    let mut in_k = vec![false; g.n()];
    for &x in &sorted {
        in_k[x] = true;
    }

    let mut important = vec![false; g.n()];
    for &v in &nk {
        let bound = g.neighbors(v).iter().filter(|&&w| in_n2[w]).count();
        let mut lists: Vec<&Vec<usize>> = Vec::new();
        for &w in &sorted {
            let list = &inst.psi[g.edge_id(v, w).expect("K joined to N(K)")];
            if !list.is_empty() && !lists.contains(&list) {
                lists.push(list);
            }
        }
        for list in lists {
            let mut i = 0;
            for &w in &sorted {
                if i == bound {
                    break;
                }
                if inst.psi[g.edge_id(v, w).unwrap()] == *list {
                    important[w] = true;
                    i += 1;
                }
            }
        }
    }

    let marked: Vec<usize> = sorted.iter().copied().filter(|&w| important[w]).collect();
    let deleted: Vec<usize> = sorted.iter().copied().filter(|&w| !important[w]).collect();
    let mut keep = vec![true; g.n()];
    for &w in &deleted {
        keep[w] = false;
    }
    let mut deleted_edges = Vec::new();
    let mut empty_deleted = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if !keep[a] || !keep[b] {
            deleted_edges.push((a, b));
            if inst.psi[e].is_empty() {
                empty_deleted.push((a, b));
            }
        }
    }
    let (h, map) = g.induced_subgraph(&keep);
    let psi = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| keep[a] && keep[b])
        .map(|(e, _)| inst.psi[e].clone())
        .collect();
    let dec = empty_deleted.len();
    let reduced = ElInstance {
        g: h,
        c: inst.c,
        k: inst.k.saturating_sub(dec),
        psi,
    };
    Ok(CliqueReduction {
        reduced,
        map,
        budget_exhausted: dec > inst.k,
        application: Application {
            tau: t,
            clique: sorted,
            neighborhood: nk,
            second_neighborhood: n2,
            marked,
            deleted_vertices: deleted,
            deleted_edges,
            empty_deleted,
            budget_decrement: dec,
        },
    })
}

/// Path on three vertices, both lists `{1}`, budget 0. The rule does not
/// apply to it, so it is its own kernel.
pub fn canonical_no_instance(c: usize) -> ElInstance {
    ElInstance {
        g: Graph::path(3),
        c,
        k: 0,
        psi: vec![vec![1], vec![1]],
    }
}

/// Edges with empty lists whose endpoints share a critical clique.
fn empty_cc_edges(inst: &ElInstance) -> Vec<usize> {
    let d = critical_cliques(&inst.g);
    (0..inst.g.m())
        .filter(|&e| {
            let (a, b) = inst.g.edge(e);
            inst.psi[e].is_empty() && d.clique_of[a] == d.clique_of[b]
        })
        .collect()
}

pub fn kernelize(inst: &ElInstance, opts: KernelOptions) -> KernelResult {
    let mut cur = inst.clone();
    let mut orig: Vec<usize> = (0..inst.g.n()).collect();
    let mut budget = inst.k as i64;
    let mut steps = Vec::new();

    loop {
        if opts.normalize_empty_cc {
            let es = empty_cc_edges(&cur);
            if !es.is_empty() {
                for &e in &es {
                    cur.psi[e] = vec![1];
                }
                budget -= es.len() as i64;
                cur.k = cur.k.saturating_sub(es.len());
                steps.push(Step::NormalizeEmpty(
                    es.iter()
                        .map(|&e| {
                            let (a, b) = cur.g.edge(e);
                            (orig[a], orig[b])
                        })
                        .collect(),
                ));
                if budget < 0 {
                    break;
                }
            }
        }
        let d = critical_cliques(&cur.g);
        let t = tau(&cur);
        let Some(i) = (0..d.len()).find(|&i| rule_applies(&cur, &d, i, t)) else {
            break;
        };
        let red = reduce_closed_clique(&cur, &d.cliques[i]).expect("rule applies");
        budget -= red.application.budget_decrement as i64;
        let a = red.application;
        let o = |v: usize| orig[v];
        let op = |(x, y): (usize, usize)| (orig[x], orig[y]);
        steps.push(Step::Rule(Application {
            tau: a.tau,
            clique: a.clique.iter().map(|&v| o(v)).collect(),
            neighborhood: a.neighborhood.iter().map(|&v| o(v)).collect(),
            second_neighborhood: a.second_neighborhood.iter().map(|&v| o(v)).collect(),
            marked: a.marked.iter().map(|&v| o(v)).collect(),
            deleted_vertices: a.deleted_vertices.iter().map(|&v| o(v)).collect(),
            deleted_edges: a.deleted_edges.iter().map(|&e| op(e)).collect(),
            empty_deleted: a.empty_deleted.iter().map(|&e| op(e)).collect(),
            budget_decrement: a.budget_decrement,
        }));
        let mut next = vec![0; red.reduced.g.n()];
        for (old, new) in red.map.iter().enumerate() {
            if let Some(nw) = new {
                next[*nw] = orig[old];
            }
        }
        orig = next;
        cur = red.reduced;
        if budget < 0 {
            break;
        }
    }

    let infeasible = budget < 0;
    let mut vertex_map = vec![None; inst.g.n()];
    if infeasible {
        cur = canonical_no_instance(inst.c);
    } else {
        for (new, &old) in orig.iter().enumerate() {
            vertex_map[old] = Some(new);
        }
    }
    let reduced_k1 = k1(&cur.g).k1;
    let bound = (tau(&cur) + 1) * 2 * reduced_k1;
    KernelResult {
        reduced: cur,
        trace: KernelTrace {
            tau: tau(inst),
            steps,
            vertex_map,
            infeasible,
        },
        bound,
        reduced_k1,
    }
}

/// Extends a witness of the reduced instance to one of the original instance
/// with at most `original.k` weak edges.
pub fn lift_witness(original: &ElInstance, result: &KernelResult, lab: &Labeling) -> Result<Labeling> {
    let trace = &result.trace;
    if trace.infeasible {
        return Err(Error::contract("kernel proved the instance infeasible"));
    }
    let g = &original.g;
    let red = &result.reduced;
    if lab.color_of.len() != red.g.m() {
        return Err(Error::contract("witness does not match the reduced instance"));
    }
    let mut back = vec![0; red.g.n()];
    for (old, new) in trace.vertex_map.iter().enumerate() {
        if let Some(nw) = new {
            back[*nw] = old;
        }
    }
    let mut color = vec![0usize; g.m()];
    for (e, &(a, b)) in red.g.edges().iter().enumerate() {
        color[g.edge_id(back[a], back[b]).expect("reduced edge exists")] = lab.color_of[e];
    }

    // Lists as seen by the last step; undone step by step.
    let mut psi = original.psi.clone();
    for s in &trace.steps {
        if let Step::NormalizeEmpty(es) = s {
            for &(a, b) in es {
                psi[g.edge_id(a, b).unwrap()] = vec![1];
            }
        }
    }
    let eid = |a: usize, b: usize| g.edge_id(a, b).expect("trace edge exists");

    for s in trace.steps.iter().rev() {
        let app = match s {
            Step::NormalizeEmpty(es) => {
                for &(a, b) in es {
                    let e = eid(a, b);
                    psi[e].clear();
                    color[e] = 0;
                }
                continue;
            }
            Step::Rule(app) => app,
        };
        let mut in_k = vec![false; g.n()];
        for &x in &app.clique {
            in_k[x] = true;
        }
        let mut gone = vec![false; g.n()];
        for &x in &app.deleted_vertices {
            gone[x] = true;
        }
        let mut in_n2 = vec![false; g.n()];
        for &x in &app.second_neighborhood {
            in_n2[x] = true;
        }

        let mut pending: Vec<(usize, usize, usize)> = Vec::new();
        for &(a, b) in &app.deleted_edges {
            let e = eid(a, b);
            if psi[e].is_empty() {
                color[e] = 0;
            } else if in_k[a] && in_k[b] {
                color[e] = psi[e][0];
            } else {
                let (u, v) = if gone[a] { (a, b) } else { (b, a) };
                pending.push((e, u, v));
            }
        }
        // Deleted clique-to-neighbourhood edges, grouped by (v, list).
        pending.sort_by(|x, y| (x.2, &psi[x.0]).cmp(&(y.2, &psi[y.0])));
        let mut start = 0;
        while start < pending.len() {
            let v = pending[start].2;
            let list = psi[pending[start].0].clone();
            let mut end = start;
            while end < pending.len() && pending[end].2 == v && psi[pending[end].0] == list {
                end += 1;
            }
            let siblings: Vec<usize> = app
                .clique
                .iter()
                .filter(|&&y| !gone[y])
                .map(|&y| eid(v, y))
                .filter(|&e| psi[e] == list)
                .collect();
            let out: Vec<usize> = g
                .neighbors(v)
                .iter()
                .zip(g.incident_edges(v))
                .filter(|(w, _)| in_n2[**w])
                .map(|(_, &e)| e)
                .collect();
            let x = if let Some(&e) = siblings.iter().find(|&&e| color[e] != 0) {
                color[e]
            } else if out.is_empty() {
                list[0]
            } else {
                // All siblings weak: recolor them, and demote the at most
                // |out| <= |siblings| clashing edges towards N2(K).
                if siblings.len() < out.len() {
                    return Err(Error::contract("trace inconsistent with instance"));
                }
                let x = list[0];
                for &e in &siblings {
                    color[e] = x;
                }
                for &e in &out {
                    if color[e] == x {
                        color[e] = 0;
                    }
                }
                x
            };
            for p in &pending[start..end] {
                color[p.0] = x;
            }
            start = end;
        }
    }
    Ok(Labeling::new(color))
}
