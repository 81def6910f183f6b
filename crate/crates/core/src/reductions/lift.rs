//! Adding one strong color without changing the answer.
//!
//! `H` extends `G` by a clique `C` made of blocks `C_v` (`k+1` vertices each,
//! all joined to `v`), cliques `U_1..U_c` of `k+1` vertices fully joined to
//! `C`, and pendant vertices `u^i_1..u^i_c` joined to all of `U_i`. Any
//! labeling of `H` with at most `k` weak edges is forced to spend the extra
//! color on the `V`-`C` edges, which leaves `c` colors for `G`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{Labeling, MultiInstance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftLayout {
    pub n: usize,
    pub c: usize,
    pub k: usize,
    /// `blocks[v]` is `C_v`.
    pub blocks: Vec<Vec<usize>>,
    /// `cliques[i]` is `U_{i+1}`.
    pub cliques: Vec<Vec<usize>>,
    /// `pendants[i][j]` is `u^{i+1}_{j+1}`.
    pub pendants: Vec<Vec<usize>>,
}

impl LiftLayout {
    pub fn vertex_count(n: usize, c: usize, k: usize) -> usize {
        n + (k + 1) * n + c * (k + 1) + c * c
    }
}

pub fn lift_color(inst: &MultiInstance) -> (MultiInstance, LiftLayout) {
    let (n, c, k) = (inst.g.n(), inst.c, inst.k);
    let mut next = n;
    let mut take = |len: usize| {
        let ids: Vec<usize> = (next..next + len).collect();
        next += len;
        ids
    };
    let blocks: Vec<Vec<usize>> = (0..n).map(|_| take(k + 1)).collect();
    let cliques: Vec<Vec<usize>> = (0..c).map(|_| take(k + 1)).collect();
    let pendants: Vec<Vec<usize>> = (0..c).map(|_| take(c)).collect();

    let mut pairs: Vec<(usize, usize)> = inst.g.edges().to_vec();
    let big: Vec<usize> = blocks.iter().flatten().copied().collect();
    clique_pairs(&big, &mut pairs);
    for (v, block) in blocks.iter().enumerate() {
        pairs.extend(block.iter().map(|&x| (v, x)));
    }
    for (ui, pend) in cliques.iter().zip(&pendants) {
        clique_pairs(ui, &mut pairs);
        for &u in ui {
            pairs.extend(big.iter().map(|&x| (x, u)));
            pairs.extend(pend.iter().map(|&p| (u, p)));
        }
    }
    let g = Graph::new(next, &pairs).expect("construction has no repeated pairs");
    let lifted = MultiInstance::new(g, c + 1, k).expect("c + 1 >= 1");
    (
        lifted,
        LiftLayout {
            n,
            c,
            k,
            blocks,
            cliques,
            pendants,
        },
    )
}

fn clique_pairs(vs: &[usize], out: &mut Vec<(usize, usize)>) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            out.push((a, b));
        }
    }
}

/// Extends a labeling of `G` to `H`: `V`-`C` edges take `c+1`, edges inside
/// `C`, between `C` and `U_1`, and inside any `U_i` take 1, `C`-`U_i` edges
/// take `i`, and `U_i`-`u^i_j` takes `j` (or `c+1` when `i = j`).
pub fn lift_labeling(original: &Graph, lifted: &Graph, layout: &LiftLayout, lab: &Labeling) -> Result<Labeling> {
    if lab.color_of.len() != original.m() {
        return Err(Error::contract("labeling does not match the original graph"));
    }
    let c = layout.c;
    let mut color = vec![1; lifted.m()];
    for (e, &(u, v)) in original.edges().iter().enumerate() {
        color[lifted.edge_id(u, v).expect("G is a subgraph")] = lab.color_of[e];
    }
    let eid = |a: usize, b: usize| lifted.edge_id(a, b).expect("layout edge");
    for (v, block) in layout.blocks.iter().enumerate() {
        for &x in block {
            color[eid(v, x)] = c + 1;
        }
    }
    for (i, ui) in layout.cliques.iter().enumerate() {
        for &u in ui {
            for &x in layout.blocks.iter().flatten() {
                color[eid(x, u)] = i + 1;
            }
            for (j, &p) in layout.pendants[i].iter().enumerate() {
                color[eid(u, p)] = if i == j { c + 1 } else { j + 1 };
            }
        }
    }
    Ok(Labeling::new(color))
}
