use proptest::prelude::*;
use stc_core::critical::critical_cliques;
use stc_core::gallai::{gallai_graph, k1};
use stc_core::io::{emit_cnf, emit_instance, emit_labeling, parse_cnf, parse_instance, parse_labeling};
use stc_core::kernel::{kernelize, lift_witness, KernelOptions};
use stc_core::model::{is_witness, verify_labeling, ElInstance, Instance, Labeling};
use stc_core::reductions::{
    lift_color, lift_labeling, nae_labeling_from_assignment, reduce_nae3sat, CnfFormula, Lit,
};
use stc_core::solve::{solve_fpt, solve_oracle, solve_subset_dp, Limits, SubgraphColoring};
use stc_core::{Graph, MultiInstance, VlInstance};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::bits::u64::between(0, pairs.max(1))
            .prop_map(move |mask| Graph::from_pair_mask(n, mask & ((1u64 << pairs) - 1)))
    })
}

fn lists(len: usize, c: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    proptest::collection::vec(proptest::bits::usize::between(0, c), len).prop_map(move |masks| {
        masks
            .into_iter()
            .map(|m| (1..=c).filter(|x| m >> (x - 1) & 1 == 1).collect())
            .collect()
    })
}

fn el_instance(max_n: usize, max_c: usize) -> impl Strategy<Value = ElInstance> {
    (graph(max_n), 1..=max_c).prop_flat_map(|(g, c)| {
        let m = g.m();
        (Just(g), Just(c), 0..=m, lists(m, c))
            .prop_map(|(g, c, k, psi)| ElInstance::new(g, c, k, psi).unwrap())
    })
}

fn instance() -> impl Strategy<Value = Instance> {
    (el_instance(8, 4), 0..3usize).prop_flat_map(|(el, variant)| {
        let n = el.g.n();
        let c = el.c;
        lists(n, c).prop_map(move |lambda| match variant {
            0 => Instance::Multi(MultiInstance::new(el.g.clone(), el.c, el.k).unwrap()),
            1 => Instance::Vl(VlInstance::new(el.g.clone(), el.c, el.k, lambda).unwrap()),
            _ => Instance::El(el.clone()),
        })
    })
}

fn labeling_for(g: &Graph, c: usize) -> impl Strategy<Value = Labeling> {
    proptest::collection::vec(0..=c, g.m()).prop_map(Labeling::new)
}

proptest! {
    #[test]
    fn instance_documents_round_trip(x in instance()) {
        let text = emit_instance(&x);
        let y = parse_instance(&text).unwrap();
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(emit_instance(&y), text);
    }

    #[test]
    fn labeling_documents_round_trip((g, lab) in graph(7).prop_flat_map(|g| {
        let l = labeling_for(&g, 3);
        (Just(g), l)
    })) {
        let text = emit_labeling(&g, Some(&lab));
        prop_assert_eq!(parse_labeling(&text, &g).unwrap(), Some(lab));
    }

    #[test]
    fn stc_iff_gallai_coloring((inst, lab) in el_instance(6, 3).prop_flat_map(|i| {
        let l = labeling_for(&i.g, i.c);
        (Just(i), l)
    })) {
        let r = verify_labeling(&inst, &lab).unwrap();
        let gg = gallai_graph(&inst.g);
        let chi = SubgraphColoring::from_labeling(&gg, &lab);
        prop_assert_eq!(r.is_stc && r.is_list_satisfying, chi.is_valid(&gg, &inst.psi));
        prop_assert_eq!(r.weak_count, chi.zeros());
        prop_assert_eq!(chi.to_labeling(&gg), lab);
    }

    #[test]
    fn solvers_agree(inst in el_instance(6, 3)) {
        let lim = Limits::default();
        let o = solve_oracle(&inst, &lim).unwrap();
        let f = solve_fpt(&inst, &lim).unwrap();
        prop_assert_eq!(o.answer, f.answer);
        if inst.g.m() <= 15 {
            prop_assert_eq!(o.answer, solve_subset_dp(&inst, &lim).unwrap().answer);
        }
        for w in [o.witness, f.witness].into_iter().flatten() {
            prop_assert!(is_witness(&inst, &w));
        }
    }

    #[test]
    fn k1_cover_covers_gallai(g in graph(8)) {
        let r = k1(&g);
        let gg = gallai_graph(&g);
        let mut in_cover = vec![false; g.m()];
        for &e in &r.cover {
            in_cover[e] = true;
        }
        prop_assert_eq!(r.cover.len(), r.k1);
        for &(a, b) in gg.base.edges() {
            prop_assert!(in_cover[gg.to_edge[a]] || in_cover[gg.to_edge[b]]);
        }
    }

    #[test]
    fn critical_cliques_partition(g in graph(9)) {
        let d = critical_cliques(&g);
        let mut seen = vec![0; g.n()];
        for (i, k) in d.cliques.iter().enumerate() {
            prop_assert!(g.is_clique(k));
            for &v in k {
                seen[v] += 1;
                prop_assert_eq!(d.clique_of[v], i);
                prop_assert_eq!(g.closed_neighborhood(v), g.closed_neighborhood(k[0]));
            }
            prop_assert_eq!(d.closed[i], g.is_clique(&d.neighborhood(i)));
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
    }

    #[test]
    fn kernel_is_sound_and_idempotent(inst in el_instance(6, 3), normalize in any::<bool>()) {
        let lim = Limits::default();
        let opts = KernelOptions { normalize_empty_cc: normalize };
        let r = kernelize(&inst, opts);
        let before = solve_fpt(&inst, &lim).unwrap();
        let after = solve_fpt(&r.reduced, &lim).unwrap();
        prop_assert_eq!(before.answer, after.answer);
        if let Some(w) = after.witness {
            let lifted = lift_witness(&inst, &r, &w).unwrap();
            prop_assert!(is_witness(&inst, &lifted));
        }
        prop_assert!(r.within_bound());
        prop_assert_eq!(kernelize(&r.reduced, opts).reduced, r.reduced);
    }

    #[test]
    fn lift_keeps_witnesses(g in graph(4), c in 1..=2usize, k in 0..=1usize) {
        let inst = MultiInstance::new(g, c, k).unwrap();
        let (h, lay) = lift_color(&inst);
        let lim = Limits::default();
        if let Some(w) = solve_fpt(&inst.normalize(), &lim).unwrap().witness {
            let l = lift_labeling(&inst.g, &h.g, &lay, &w).unwrap();
            prop_assert!(is_witness(&h.normalize(), &l));
        }
    }

    #[test]
    fn nae_labelings_verify(
        clauses in proptest::collection::vec(
            (proptest::sample::subsequence((0..5usize).collect::<Vec<_>>(), 3), any::<[bool; 3]>()),
            1..4,
        )
    ) {
        let cls = clauses
            .iter()
            .map(|(vs, neg)| [0, 1, 2].map(|i| Lit { var: vs[i], negated: neg[i] }))
            .collect();
        let f = CnfFormula::new(5, cls).unwrap();
        let (inst, lay) = reduce_nae3sat(&f).unwrap();
        let el = inst.normalize();
        for a in f.nae_satisfying(4) {
            let lab = nae_labeling_from_assignment(&inst.g, &lay, &a).unwrap();
            prop_assert!(is_witness(&el, &lab));
        }
        prop_assert_eq!(parse_cnf(&emit_cnf(&f)).unwrap(), f);
    }
}
