//! Problem instances, labelings and labeling verification.
//!
//! Every variant normalizes into [`ElInstance`], which carries one color list
//! per edge id. Color lists are sorted, duplicate-free subsets of `1..=c`.

use crate::error::{Error, Result};
use crate::graph::{induced_p3s, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElInstance {
    pub g: Graph,
    pub c: usize,
    pub k: usize,
    pub psi: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VlInstance {
    pub g: Graph,
    pub c: usize,
    pub k: usize,
    pub lambda: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiInstance {
    pub g: Graph,
    pub c: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Multi(MultiInstance),
    Vl(VlInstance),
    El(ElInstance),
}

fn check_list(list: &mut Vec<usize>, c: usize, what: &str) -> Result<()> {
    list.sort_unstable();
    list.dedup();
    if let Some(&bad) = list.iter().find(|&&x| x == 0 || x > c) {
        return Err(Error::validation(format!("{what}: color {bad} outside 1..={c}")));
    }
    Ok(())
}

fn check_c(c: usize) -> Result<()> {
    if c == 0 {
        return Err(Error::validation("c must be at least 1"));
    }
    Ok(())
}

pub fn full_list(c: usize) -> Vec<usize> {
    (1..=c).collect()
}

impl ElInstance {
    pub fn new(g: Graph, c: usize, k: usize, mut psi: Vec<Vec<usize>>) -> Result<Self> {
        check_c(c)?;
        if psi.len() != g.m() {
            return Err(Error::validation(format!(
                "{} edge lists for {} edges",
                psi.len(),
                g.m()
            )));
        }
        for (e, list) in psi.iter_mut().enumerate() {
            check_list(list, c, &format!("list of edge {e}"))?;
        }
        Ok(ElInstance { g, c, k, psi })
    }

    /// Instance with every edge list equal to `{1..c}`.
    pub fn full(g: Graph, c: usize, k: usize) -> Result<Self> {
        MultiInstance::new(g, c, k).map(|m| m.normalize())
    }

    pub fn has_full_lists(&self) -> bool {
        let full = full_list(self.c);
        self.psi.iter().all(|l| *l == full)
    }
}

impl VlInstance {
    pub fn new(g: Graph, c: usize, k: usize, mut lambda: Vec<Vec<usize>>) -> Result<Self> {
        check_c(c)?;
        if lambda.len() != g.n() {
            return Err(Error::validation(format!(
                "{} vertex lists for {} vertices",
                lambda.len(),
                g.n()
            )));
        }
        for (v, list) in lambda.iter_mut().enumerate() {
            check_list(list, c, &format!("list of vertex {v}"))?;
        }
        Ok(VlInstance { g, c, k, lambda })
    }

    pub fn normalize(&self) -> ElInstance {
        let psi = self
            .g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let other = &self.lambda[v];
                self.lambda[u]
                    .iter()
                    .copied()
                    .filter(|x| other.binary_search(x).is_ok())
                    .collect()
            })
            .collect();
        ElInstance {
            g: self.g.clone(),
            c: self.c,
            k: self.k,
            psi,
        }
    }
}

impl MultiInstance {
    pub fn new(g: Graph, c: usize, k: usize) -> Result<Self> {
        check_c(c)?;
        Ok(MultiInstance { g, c, k })
    }

    pub fn normalize(&self) -> ElInstance {
        ElInstance {
            g: self.g.clone(),
            c: self.c,
            k: self.k,
            psi: vec![full_list(self.c); self.g.m()],
        }
    }
}

impl Instance {
    pub fn normalize(&self) -> ElInstance {
        match self {
            Instance::Multi(m) => m.normalize(),
            Instance::Vl(v) => v.normalize(),
            Instance::El(e) => e.clone(),
        }
    }

    pub fn graph(&self) -> &Graph {
        match self {
            Instance::Multi(m) => &m.g,
            Instance::Vl(v) => &v.g,
            Instance::El(e) => &e.g,
        }
    }
}

/// Edge coloring with values in `0..=c`; 0 is weak.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    pub color_of: Vec<usize>,
}

impl Labeling {
    pub fn new(color_of: Vec<usize>) -> Self {
        Labeling { color_of }
    }

    pub fn all_weak(m: usize) -> Self {
        Labeling {
            color_of: vec![0; m],
        }
    }

    pub fn weak_count(&self) -> usize {
        self.color_of.iter().filter(|&&x| x == 0).count()
    }

    /// Edge ids of the strong class `i` (or the weak class for `i = 0`).
    pub fn class(&self, i: usize) -> Vec<usize> {
        (0..self.color_of.len())
            .filter(|&e| self.color_of[e] == i)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Two edges of an induced P3 share a strong color.
    StcP3(usize, usize),
    /// A strong edge carries a color outside its list.
    List(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub is_stc: bool,
    pub is_list_satisfying: bool,
    pub weak_count: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.is_stc && self.is_list_satisfying
    }
}

pub fn verify_labeling(inst: &ElInstance, lab: &Labeling) -> Result<VerifyReport> {
    if lab.color_of.len() != inst.g.m() {
        return Err(Error::validation(format!(
            "labeling covers {} edges, instance has {}",
            lab.color_of.len(),
            inst.g.m()
        )));
    }
    if let Some(e) = (0..inst.g.m()).find(|&e| lab.color_of[e] > inst.c) {
        return Err(Error::validation(format!(
            "edge {e} has color {} above c={}",
            lab.color_of[e], inst.c
        )));
    }
    let mut violations = Vec::new();
    for (a, b) in induced_p3s(&inst.g) {
        let x = lab.color_of[a];
        if x != 0 && x == lab.color_of[b] {
            violations.push(Violation::StcP3(a, b));
        }
    }
    let is_stc = violations.is_empty();
    let mut is_list_satisfying = true;
    for (e, &x) in lab.color_of.iter().enumerate() {
        if x != 0 && inst.psi[e].binary_search(&x).is_err() {
            violations.push(Violation::List(e));
            is_list_satisfying = false;
        }
    }
    Ok(VerifyReport {
        is_stc,
        is_list_satisfying,
        weak_count: lab.weak_count(),
        violations,
    })
}

/// True iff `lab` is a list-respecting STC-labeling with at most `k` weak edges.
pub fn is_witness(inst: &ElInstance, lab: &Labeling) -> bool {
    verify_labeling(inst, lab).is_ok_and(|r| r.is_valid() && r.weak_count <= inst.k)
}
