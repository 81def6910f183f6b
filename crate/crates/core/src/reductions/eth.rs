//! Compression of 3-SAT (each variable in at most four clauses) into a
//! VL-Multi-STC instance with `O(sqrt n)` vertices, `c = 9n + 4` and `k = 0`.
//!
//! Layers, with `s = ceil(sqrt n)`:
//!
//! | layer | vertices | size |
//! |-------|----------|------|
//! | `U^X` | `alpha^(r,r')_t` over the 12 ordered pairs `r != r'` | `12(s+9)` |
//! | `M^X` | `gamma^r_t`, `r = 1..4` | `4s` |
//! | `D^X` | `delta_t` | `s+9` |
//! | `U^C` | `eta_t` | `12s+1` |
//! | `D^C` | `theta_t` | `s` |
//!
//! All index values (`down`, `mid`, `up`, clause `up`/`down`, occurrence
//! numbers, `r`) are 1-based like the color codes; vertex ids are 0-based.

use std::collections::BTreeSet;

use super::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{Labeling, VlInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EthLayout {
    pub formula: CnfFormula,
    pub s: usize,
    /// Proper 9-coloring of the variable conflict graph (1-based).
    pub var_color: Vec<usize>,
    /// Group `S_t` members, `t` 1-based at index `t-1`.
    pub groups: Vec<Vec<usize>>,
    pub down: Vec<usize>,
    pub mid: Vec<usize>,
    pub clause_up: Vec<usize>,
    pub clause_down: Vec<usize>,
    /// `omega[j][p]`: occurrence number of the `p`-th variable of clause `j`.
    pub omega: Vec<[usize; 3]>,
    ux: usize,
    mx: usize,
    dx: usize,
    uc: usize,
    dc: usize,
    total: usize,
}

/// The 12 ordered pairs `(r, r')` with `r != r'`, lexicographic.
pub fn ordered_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(12);
    for r in 1..=4 {
        for q in 1..=4 {
            if r != q {
                out.push((r, q));
            }
        }
    }
    out
}

impl EthLayout {
    pub fn n(&self) -> usize {
        self.formula.num_vars
    }

    pub fn c(&self) -> usize {
        9 * self.n() + 4
    }

    pub fn vertex_count(&self) -> usize {
        self.total
    }

    pub fn up(&self, i: usize) -> usize {
        self.down[i]
    }

    /// `T_i^r` for 0-based variable `i`.
    pub fn t_code(&self, i: usize, r: usize) -> usize {
        8 * i + 2 * (r - 1) + 1
    }

    pub fn f_code(&self, i: usize, r: usize) -> usize {
        self.t_code(i, r) + 1
    }

    pub fn r_code(&self, i: usize) -> usize {
        8 * self.n() + i + 1
    }

    pub fn z_code(&self, q: usize) -> usize {
        9 * self.n() + q
    }

    pub fn alpha(&self, r: usize, q: usize, t: usize) -> usize {
        let p = ordered_pairs().iter().position(|&x| x == (r, q)).unwrap();
        self.ux + p * (self.s + 9) + t - 1
    }

    pub fn gamma(&self, r: usize, t: usize) -> usize {
        self.mx + (r - 1) * self.s + t - 1
    }

    pub fn delta(&self, t: usize) -> usize {
        self.dx + t - 1
    }

    pub fn eta(&self, t: usize) -> usize {
        self.uc + t - 1
    }

    pub fn theta(&self, t: usize) -> usize {
        self.dc + t - 1
    }

    pub fn u_x(&self) -> std::ops::Range<usize> {
        self.ux..self.mx
    }

    pub fn m_x(&self) -> std::ops::Range<usize> {
        self.mx..self.dx
    }

    pub fn d_x(&self) -> std::ops::Range<usize> {
        self.dx..self.uc
    }

    pub fn u_c(&self) -> std::ops::Range<usize> {
        self.uc..self.dc
    }

    pub fn d_c(&self) -> std::ops::Range<usize> {
        self.dc..self.total
    }

    /// Color set of all occurrence colors of clause `j`.
    pub fn clause_colors(&self, j: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (p, l) in self.formula.clauses[j].iter().enumerate() {
            out.insert(self.t_code(l.var, self.omega[j][p]));
            out.insert(self.f_code(l.var, self.omega[j][p]));
        }
        out
    }

    /// Literal color set of clause `j`.
    pub fn literal_colors(&self, j: usize) -> BTreeSet<usize> {
        self.formula.clauses[j]
            .iter()
            .enumerate()
            .map(|(p, l)| {
                let r = self.omega[j][p];
                if l.negated {
                    self.f_code(l.var, r)
                } else {
                    self.t_code(l.var, r)
                }
            })
            .collect()
    }

    fn lists(&self) -> Vec<BTreeSet<usize>> {
        let mut lam = vec![BTreeSet::new(); self.total];
        for i in 0..self.n() {
            let (d, md) = (self.down[i], self.mid[i]);
            for r in 1..=4 {
                let g = &mut lam[self.gamma(r, md)];
                g.extend([self.t_code(i, r), self.f_code(i, r), self.r_code(i)]);
                lam[self.delta(d)].extend([self.t_code(i, r), self.f_code(i, r)]);
            }
            for (r, q) in ordered_pairs() {
                lam[self.alpha(r, q, self.up(i))].extend([
                    self.t_code(i, r),
                    self.f_code(i, q),
                    self.r_code(i),
                ]);
            }
        }
        for j in 0..self.formula.clauses.len() {
            lam[self.eta(self.clause_up[j])].extend(self.clause_colors(j));
            lam[self.theta(self.clause_down[j])].extend(self.literal_colors(j));
        }
        for (q, range) in [self.u_x(), self.d_x(), self.u_c(), self.d_c()]
            .into_iter()
            .enumerate()
        {
            for v in range {
                lam[v].insert(self.z_code(q + 1));
            }
        }
        lam
    }

    fn rep_edge(&self, i: usize, r: usize) -> (usize, usize) {
        (self.gamma(r, self.mid[i]), self.delta(self.down[i]))
    }

    fn clause_edge(&self, j: usize) -> (usize, usize) {
        (self.eta(self.clause_up[j]), self.theta(self.clause_down[j]))
    }

    fn connection_edge(&self, j: usize, p: usize) -> (usize, usize) {
        let x = self.formula.clauses[j][p].var;
        (self.delta(self.down[x]), self.eta(self.clause_up[j]))
    }

    /// Each structural claim of the construction as a named boolean.
    pub fn claims(&self, inst: &VlInstance) -> Vec<(&'static str, bool)> {
        let n = self.n();
        let f = &self.formula;
        let lam = |v: usize| -> BTreeSet<usize> { inst.lambda[v].iter().copied().collect() };
        let meet = |a: usize, b: usize| -> BTreeSet<usize> { &lam(a) & &lam(b) };
        let set = |xs: &[usize]| -> BTreeSet<usize> { xs.iter().copied().collect() };
        let share_clause = |a: usize, b: usize| {
            f.clauses.iter().any(|cl| {
                cl.iter().any(|l| l.var == a) && cl.iter().any(|l| l.var == b)
            })
        };
        let pairs_of = |lim: usize| (0..lim).flat_map(move |a| (a + 1..lim).map(move |b| (a, b)));

        let groupsizes = self.groups.len() <= self.s + 9
            && self.groups.iter().all(|g| g.len() <= self.s)
            && self.down.iter().all(|&d| (1..=self.groups.len()).contains(&d));
        let var_downs = pairs_of(n).all(|(a, b)| !share_clause(a, b) || self.down[a] != self.down[b]);
        let rep_distinct =
            pairs_of(n).all(|(a, b)| (self.down[a], self.mid[a]) != (self.down[b], self.mid[b]));
        let var_ups = pairs_of(n).all(|(a, b)| !share_clause(a, b) || self.up(a) != self.up(b));
        let mut sound_a = true;
        let mut sound_b = true;
        let mut representer = true;
        for i in 0..n {
            for (r, q) in ordered_pairs() {
                let a = self.alpha(r, q, self.up(i));
                sound_a &= meet(a, self.gamma(r, self.mid[i]))
                    == set(&[self.t_code(i, r), self.r_code(i)]);
                sound_b &= meet(a, self.gamma(q, self.mid[i]))
                    == set(&[self.f_code(i, q), self.r_code(i)]);
            }
            for r in 1..=4 {
                let (x, y) = self.rep_edge(i, r);
                representer &= meet(x, y) == set(&[self.t_code(i, r), self.f_code(i, r)]);
            }
        }
        let m = f.clauses.len();
        let downs = |j: usize| -> BTreeSet<usize> {
            f.clauses[j].iter().map(|l| self.down[l.var]).collect()
        };
        let clause_ups = pairs_of(m).all(|(a, b)| {
            self.clause_up[a] != self.clause_up[b] || downs(a).is_disjoint(&downs(b))
        });
        let clause_edges = pairs_of(m).all(|(a, b)| {
            (self.clause_up[a], self.clause_down[a]) != (self.clause_up[b], self.clause_down[b])
        });
        let classes_ok = self.clause_up.iter().all(|&u| (1..=12 * self.s + 1).contains(&u))
            && self.clause_down.iter().all(|&d| (1..=self.s).contains(&d));
        let mut colors_clauses = true;
        let mut colors_connection = true;
        for j in 0..m {
            let (x, y) = self.clause_edge(j);
            colors_clauses &= meet(x, y) == self.literal_colors(j);
            for p in 0..3 {
                let i = f.clauses[j][p].var;
                let r = self.omega[j][p];
                let (x, y) = self.connection_edge(j, p);
                colors_connection &= meet(x, y) == set(&[self.t_code(i, r), self.f_code(i, r)]);
            }
        }
        vec![
            ("groupsizes", groupsizes),
            ("different variable downs", var_downs),
            ("representing edges not equal", rep_distinct),
            ("different variable ups", var_ups),
            ("variable soundness T/R", sound_a),
            ("variable soundness F/R", sound_b),
            ("representer colors", representer),
            ("different clause ups", clause_ups && classes_ok),
            ("clause edges not equal", clause_edges),
            ("edge colors clauses", colors_clauses),
            ("edge colors connection", colors_connection),
        ]
    }
}

pub fn reduce_3sat_eth(f: &CnfFormula) -> Result<(VlInstance, EthLayout)> {
    let f = CnfFormula::new(f.num_vars, f.clauses.clone())?;
    let n = f.num_vars;
    if n == 0 {
        return Err(Error::validation("formula has no variables"));
    }
    if let Some(x) = f.occurrences().iter().position(|&o| o > 4) {
        return Err(Error::validation(format!(
            "variable {} occurs in more than four clauses",
            x + 1
        )));
    }
    let s = (1..).find(|&s: &usize| s * s >= n).unwrap();
    let m = f.clauses.len();

    // Greedy 9-coloring of the variable conflict graph, in index order.
    let mut conflicts = vec![BTreeSet::new(); n];
    for cl in &f.clauses {
        for a in cl {
            for b in cl {
                if a.var != b.var {
                    conflicts[a.var].insert(b.var);
                }
            }
        }
    }
    let mut var_color = vec![0; n];
    for x in 0..n {
        let used: BTreeSet<usize> = conflicts[x].iter().map(|&y| var_color[y]).collect();
        var_color[x] = (1..).find(|q| !used.contains(q)).unwrap();
        debug_assert!(var_color[x] <= 9);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for q in 1..=9 {
        let class: Vec<usize> = (0..n).filter(|&x| var_color[x] == q).collect();
        groups.extend(class.chunks(s).map(|c| c.to_vec()));
    }
    let mut down = vec![0; n];
    let mut mid = vec![0; n];
    for (t, g) in groups.iter().enumerate() {
        for (p, &x) in g.iter().enumerate() {
            down[x] = t + 1;
            mid[x] = p + 1;
        }
    }

    let clause_downs: Vec<BTreeSet<usize>> = f
        .clauses
        .iter()
        .map(|cl| cl.iter().map(|l| down[l.var]).collect())
        .collect();
    let clash = |a: usize, b: usize| !clause_downs[a].is_disjoint(&clause_downs[b]);
    let clause_up = color_clauses(m, 12 * s + 1, s, clash)?;
    let mut seen = vec![0; 12 * s + 2];
    let clause_down: Vec<usize> = clause_up
        .iter()
        .map(|&u| {
            seen[u] += 1;
            seen[u]
        })
        .collect();

    let mut count = vec![0; n];
    let omega = f
        .clauses
        .iter()
        .map(|cl| {
            cl.map(|l| {
                count[l.var] += 1;
                count[l.var]
            })
        })
        .collect();

    let ux = 0;
    let mx = ux + 12 * (s + 9);
    let dx = mx + 4 * s;
    let uc = dx + s + 9;
    let dc = uc + 12 * s + 1;
    let total = dc + s;
    let layout = EthLayout {
        formula: f,
        s,
        var_color,
        groups,
        down,
        mid,
        clause_up,
        clause_down,
        omega,
        ux,
        mx,
        dx,
        uc,
        dc,
        total,
    };

    let mut pairs = Vec::new();
    for range in [layout.u_x(), layout.d_x(), layout.u_c(), layout.d_c()] {
        for a in range.clone() {
            for b in a + 1..range.end {
                pairs.push((a, b));
            }
        }
    }
    for i in 0..n {
        for r in 1..=4 {
            pairs.push(layout.rep_edge(i, r));
        }
        for (r, q) in ordered_pairs() {
            let a = layout.alpha(r, q, layout.up(i));
            pairs.push((a, layout.gamma(r, layout.mid[i])));
            pairs.push((a, layout.gamma(q, layout.mid[i])));
        }
    }
    for j in 0..m {
        pairs.push(layout.clause_edge(j));
        for p in 0..3 {
            pairs.push(layout.connection_edge(j, p));
        }
    }
    let g = Graph::new(total, &pairs)
        .map_err(|e| Error::contract(format!("construction produced a bad edge set: {e}")))?;
    let lambda = layout
        .lists()
        .into_iter()
        .map(|l| l.into_iter().collect())
        .collect();
    let inst = VlInstance::new(g, layout.c(), 0, lambda)?;
    Ok((inst, layout))
}

/// Proper coloring of `m` items into `classes` classes of size at most
/// `cap`: greedy in item order, and when an item is blocked, one member of a
/// full compatible class is moved elsewhere to make room.
fn color_clauses(
    m: usize,
    classes: usize,
    cap: usize,
    clash: impl Fn(usize, usize) -> bool,
) -> Result<Vec<usize>> {
    let mut class_of = vec![0usize; m];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); classes + 1];
    let fits = |members: &Vec<Vec<usize>>, x: usize, k: usize| {
        members[k].iter().all(|&y| y == x || !clash(x, y))
    };
    for j in 0..m {
        if let Some(k) = (1..=classes).find(|&k| members[k].len() < cap && fits(&members, j, k)) {
            class_of[j] = k;
            members[k].push(j);
            continue;
        }
        let mut placed = false;
        'outer: for k in 1..=classes {
            if !fits(&members, j, k) {
                continue;
            }
            for idx in 0..members[k].len() {
                let d = members[k][idx];
                let target = (1..=classes)
                    .find(|&y| y != k && members[y].len() < cap && fits(&members, d, y));
                if let Some(y) = target {
                    members[k].swap_remove(idx);
                    members[y].push(d);
                    class_of[d] = y;
                    members[k].push(j);
                    class_of[j] = k;
                    placed = true;
                    break 'outer;
                }
            }
        }
        if !placed {
            return Err(Error::contract("clause coloring could not place a clause"));
        }
    }
    Ok(class_of)
}

/// Zero-weak labeling from a satisfying assignment.
pub fn eth_labeling_from_assignment(
    g: &Graph,
    layout: &EthLayout,
    assignment: &[bool],
) -> Result<Labeling> {
    let f = &layout.formula;
    if assignment.len() != f.num_vars || !f.is_satisfied(assignment) {
        return Err(Error::contract("assignment does not satisfy the formula"));
    }
    let eid = |(a, b): (usize, usize)| g.edge_id(a, b).expect("layout edge");
    let mut color = vec![0; g.m()];
    for (q, range) in [layout.u_x(), layout.d_x(), layout.u_c(), layout.d_c()]
        .into_iter()
        .enumerate()
    {
        for a in range.clone() {
            for b in a + 1..range.end {
                color[eid((a, b))] = layout.z_code(q + 1);
            }
        }
    }
    for (i, &val) in assignment.iter().enumerate() {
        let (t, rr) = (|r| layout.t_code(i, r), layout.r_code(i));
        let fc = |r| layout.f_code(i, r);
        for r in 1..=4 {
            color[eid(layout.rep_edge(i, r))] = if val { t(r) } else { fc(r) };
        }
        for (r, q) in ordered_pairs() {
            let a = layout.alpha(r, q, layout.up(i));
            color[eid((a, layout.gamma(r, layout.mid[i])))] = if val { rr } else { t(r) };
            color[eid((a, layout.gamma(q, layout.mid[i])))] = if val { fc(q) } else { rr };
        }
    }
    for (j, cl) in f.clauses.iter().enumerate() {
        let p = cl.iter().position(|l| l.value(assignment)).unwrap();
        let (l, r) = (cl[p], layout.omega[j][p]);
        color[eid(layout.clause_edge(j))] = if l.negated {
            layout.f_code(l.var, r)
        } else {
            layout.t_code(l.var, r)
        };
        for (p, l) in cl.iter().enumerate() {
            let r = layout.omega[j][p];
            color[eid(layout.connection_edge(j, p))] = if assignment[l.var] {
                layout.f_code(l.var, r)
            } else {
                layout.t_code(l.var, r)
            };
        }
    }
    Ok(Labeling::new(color))
}

/// Reads the assignment off the first representing edge of every variable.
pub fn eth_assignment_from_labeling(
    g: &Graph,
    layout: &EthLayout,
    lab: &Labeling,
) -> Result<Vec<bool>> {
    if lab.color_of.len() != g.m() {
        return Err(Error::contract("labeling does not match the graph"));
    }
    let mut a = Vec::with_capacity(layout.n());
    for i in 0..layout.n() {
        let (x, y) = layout.rep_edge(i, 1);
        let col = lab.color_of[g.edge_id(x, y).expect("layout edge")];
        if col == layout.t_code(i, 1) {
            a.push(true);
        } else if col == layout.f_code(i, 1) {
            a.push(false);
        } else {
            return Err(Error::contract(format!(
                "representing edge of variable {} has color {col}",
                i + 1
            )));
        }
    }
    if !layout.formula.is_satisfied(&a) {
        return Err(Error::contract("extracted assignment does not satisfy the formula"));
    }
    Ok(a)
}

/// Whether every representing edge of variable `i` agrees with the first
/// one: `T_i^r` on occurrence `r` implies `T_i^1` on occurrence 1.
pub fn representing_edges_agree(g: &Graph, layout: &EthLayout, lab: &Labeling, i: usize) -> bool {
    let col = |r: usize| {
        let (x, y) = layout.rep_edge(i, r);
        lab.color_of[g.edge_id(x, y).unwrap()]
    };
    (1..=4).all(|r| {
        (col(r) != layout.t_code(i, r) || col(1) == layout.t_code(i, 1))
            && (col(r) != layout.f_code(i, r) || col(1) == layout.f_code(i, 1))
    })
}
