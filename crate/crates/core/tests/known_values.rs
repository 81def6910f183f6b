//! Small instances whose answers are recomputed here by brute force and
//! compared against the library.

mod common;

use common::all_graphs;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stc_core::gallai::{gallai_graph, k1};
use stc_core::graph::induced_p3s;
use stc_core::kernel::{kernelize, KernelOptions};
use stc_core::model::{is_witness, verify_labeling, ElInstance, Labeling};
use stc_core::reductions::{
    eth_assignment_from_labeling, eth_labeling_from_assignment, lift_color,
    nae_labeling_from_assignment, reduce_3sat_eth, reduce_is_to_setcover, reduce_nae3sat,
    reduce_setcover, CnfFormula, LiftLayout, Lit, SetCover,
};
use stc_core::solve::{shortcut_multi, solve_fpt, solve_oracle, Limits};
use stc_core::{Graph, MultiInstance};

/// Smallest number of weak edges with one strong color: every induced P3
/// must contain a weak edge.
fn brute_min_weak(g: &Graph) -> usize {
    let p3 = induced_p3s(g);
    (0u32..1 << g.m())
        .filter(|w| p3.iter().all(|&(a, b)| w >> a & 1 == 1 || w >> b & 1 == 1))
        .map(|w| w.count_ones() as usize)
        .min()
        .unwrap()
}

/// Exhaustive search over all `(c+1)^m` labelings.
fn brute_answer(inst: &ElInstance) -> bool {
    let m = inst.g.m();
    let base = inst.c + 1;
    (0..base.pow(m as u32)).any(|code| {
        let color = (0..m).map(|i| code / base.pow(i as u32) % base).collect();
        is_witness(inst, &Labeling::new(color))
    })
}

fn star(leaves: usize) -> Graph {
    Graph::star(leaves)
}

#[test]
fn induced_p3_counts() {
    assert_eq!(induced_p3s(&Graph::complete(3)).len(), 0);
    assert_eq!(induced_p3s(&Graph::path(3)).len(), 1);
    assert_eq!(induced_p3s(&star(3)).len(), 3);
}

#[test]
fn gallai_shapes() {
    let p4 = gallai_graph(&Graph::path(4));
    assert_eq!((p4.n(), p4.base.m()), (3, 2));
    assert_eq!(gallai_graph(&Graph::complete(3)).base.m(), 0);
    let s = gallai_graph(&star(3));
    assert!(s.base.is_clique(&[0, 1, 2]));
}

#[test]
fn k1_values_match_brute_force() {
    for (g, want) in [
        (Graph::path(3), 1),
        (star(3), 2),
        (Graph::cycle(5), 3),
        (Graph::cycle(4), 2),
        (Graph::complete(4), 0),
    ] {
        assert_eq!(brute_min_weak(&g), want);
        assert_eq!(k1(&g).k1, want);
    }
    for g in all_graphs(5) {
        assert_eq!(k1(&g).k1, brute_min_weak(&g));
    }
}

#[test]
fn solver_examples() {
    let lim = Limits::default();
    let full = |g: Graph, c, k| ElInstance::full(g, c, k).unwrap();
    let cases = [
        (full(Graph::path(3), 1, 0), false),
        (full(Graph::path(3), 2, 0), true),
        (full(star(3), 2, 0), false),
        (full(star(3), 2, 1), true),
        (full(Graph::cycle(4), 2, 0), true),
        (full(Graph::cycle(5), 2, 0), false),
        (full(Graph::cycle(5), 2, 1), true),
        (full(Graph::complete(3), 1, 0), true),
        (full(Graph::path(4), 1, 1), true),
        (full(star(3), 3, 0), true),
        (
            ElInstance::new(Graph::path(3), 2, 0, vec![vec![1], vec![1]]).unwrap(),
            false,
        ),
        (
            ElInstance::new(Graph::path(3), 2, 0, vec![vec![1], vec![2]]).unwrap(),
            true,
        ),
    ];
    for (inst, want) in cases {
        assert_eq!(brute_answer(&inst), want);
        let o = solve_oracle(&inst, &lim).unwrap();
        let f = solve_fpt(&inst, &lim).unwrap();
        assert_eq!((o.answer, f.answer), (want, want));
    }
    let p3 = solve_oracle(&full(Graph::path(3), 2, 0), &lim).unwrap();
    assert_eq!(p3.witness.unwrap().color_of, vec![1, 2]);
}

#[test]
fn shortcut_examples() {
    let c4 = MultiInstance::new(Graph::cycle(4), 3, 0).unwrap();
    let w = shortcut_multi(&c4).unwrap().witness.unwrap();
    assert!(is_witness(&c4.normalize(), &w));
    let c5 = MultiInstance::new(Graph::cycle(5), 4, 0).unwrap();
    assert!(shortcut_multi(&c5).is_some());
    let c5 = MultiInstance::new(Graph::cycle(5), 3, 0).unwrap();
    assert!(shortcut_multi(&c5).is_none());
}

#[test]
fn five_clique_kernel() {
    // K = {0..4}, all adjacent to 5, and 5 - 6.
    let mut pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
    pairs.push((5, 6));
    let g = Graph::new(7, &pairs).unwrap();
    let inst = ElInstance::full(g, 1, 1).unwrap();
    let r = kernelize(&inst, KernelOptions::default());
    assert_eq!(r.reduced.g.n(), 3);
    assert_eq!(r.reduced.g.m(), 2);
    assert_eq!(r.reduced.k, 1);
    assert_eq!((r.bound, r.reduced_k1), (4, 1));
    assert_eq!(brute_answer(&inst), brute_answer(&r.reduced));
}

/// Every formula over at most four variables with one or two distinct
/// clauses.
#[test]
fn nae_equivalence_small() {
    let lim = Limits::default();
    let mut checked = 0;
    for n in 3..=4usize {
        let mut clauses = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for s in 0..8 {
                        let l = |v: usize, bit: usize| Lit { var: v, negated: s >> bit & 1 == 1 };
                        clauses.push([l(a, 0), l(b, 1), l(c, 2)]);
                    }
                }
            }
        }
        let mut formulas: Vec<Vec<[Lit; 3]>> = clauses.iter().map(|&c| vec![c]).collect();
        for i in 0..clauses.len() {
            for j in i + 1..clauses.len() {
                formulas.push(vec![clauses[i], clauses[j]]);
            }
        }
        for cls in formulas {
            let f = CnfFormula::new(n, cls).unwrap();
            let (inst, lay) = reduce_nae3sat(&f).unwrap();
            let el = inst.normalize();
            let r = solve_fpt(&el, &lim).unwrap();
            let models = f.nae_satisfying(usize::MAX);
            assert_eq!(r.answer, !models.is_empty(), "{f:?}");
            for a in models {
                let lab = nae_labeling_from_assignment(&inst.g, &lay, &a).unwrap();
                assert!(is_witness(&el, &lab));
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 36 + 528);
}

#[test]
fn nae_symmetry_and_counts() {
    let f = CnfFormula::new(3, vec![[Lit::pos(0), Lit::pos(1), Lit::pos(2)]]).unwrap();
    let (inst, lay) = reduce_nae3sat(&f).unwrap();
    let el = inst.normalize();
    let a = [true, false, false];
    let b = [false, true, true];
    let la = nae_labeling_from_assignment(&inst.g, &lay, &a).unwrap();
    let lb = nae_labeling_from_assignment(&inst.g, &lay, &b).unwrap();
    assert_eq!(verify_labeling(&el, &la).unwrap().weak_count, 9);
    for x in 0..3 {
        for (i, &v) in lay.cycle[x].iter().enumerate() {
            let w = lay.cycle[x][(i + 1) % lay.cycle_len];
            let e = inst.g.edge_id(v, w).unwrap();
            assert_ne!(la.color_of[e], 0);
            assert_eq!(la.color_of[e] + lb.color_of[e], 3);
        }
    }
}

#[test]
fn lift_examples() {
    let lim = Limits::default();
    for (g, want) in [(Graph::path(3), false), (Graph::complete(3), true)] {
        let inst = MultiInstance::new(g, 1, 0).unwrap();
        let (h, _) = lift_color(&inst);
        assert_eq!(h.g.n(), LiftLayout::vertex_count(3, 1, 0));
        assert_eq!(solve_fpt(&h.normalize(), &lim).unwrap().answer, want);
    }
}

#[test]
fn setcover_examples() {
    let lim = Limits::default();
    for (t, want) in [(1, true), (0, false)] {
        let sc = SetCover::new(vec![1, 2], vec![vec![1], vec![2], vec![1, 2]], t).unwrap();
        let (inst, lay) = reduce_setcover(&sc).unwrap();
        assert_eq!((inst.c, lay.pad.len()), (4, 3 - t));
        assert_eq!(solve_fpt(&inst.normalize(), &lim).unwrap().answer, want);
        assert!(k1(&inst.g).k1 <= 3 - t);
    }
    let k3 = Graph::complete(3);
    assert!(reduce_is_to_setcover(&k3, 1).unwrap().has_cover());
    assert!(!reduce_is_to_setcover(&k3, 2).unwrap().has_cover());
}

#[test]
fn eth_extraction_separates_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = CnfFormula::random(&mut rng, 6, 8, 4);
    let models = f.satisfying(usize::MAX);
    assert!(models.len() > 1);
    let (inst, lay) = reduce_3sat_eth(&f).unwrap();
    let el = inst.normalize();
    for a in &models {
        let lab = eth_labeling_from_assignment(&inst.g, &lay, a).unwrap();
        assert!(is_witness(&el, &lab));
        assert_eq!(&eth_assignment_from_labeling(&inst.g, &lay, &lab).unwrap(), a);
    }
}

#[test]
fn eth_clique_layers_use_z_colors() {
    let f = CnfFormula::new(3, vec![[Lit::pos(0), Lit::neg(1), Lit::pos(2)]; 2]).unwrap();
    let (inst, lay) = reduce_3sat_eth(&f).unwrap();
    let a = f.satisfying(1).remove(0);
    let lab = eth_labeling_from_assignment(&inst.g, &lay, &a).unwrap();
    for (q, range) in [lay.u_x(), lay.d_x(), lay.u_c(), lay.d_c()].into_iter().enumerate() {
        let (x, y) = (range.start, range.start + 1);
        assert_eq!(lab.color_of[inst.g.edge_id(x, y).unwrap()], lay.z_code(q + 1));
    }
    let i = 0;
    let e1 = inst
        .g
        .edge_id(lay.alpha(1, 2, lay.up(i)), lay.gamma(1, lay.mid[i]))
        .unwrap();
    let want = if a[i] { lay.r_code(i) } else { lay.t_code(i, 1) };
    assert_eq!(lab.color_of[e1], want);
}
