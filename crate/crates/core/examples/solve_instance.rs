//! Solve a small instance with every exact algorithm.
use stc_core::io::emit_labeling;
use stc_core::model::ElInstance;
use stc_core::solve::{solve, Algo, Limits};
use stc_core::Graph;

fn main() -> stc_core::error::Result<()> {
    // C5 needs a weak edge with two colors, none with three.
    let limits = Limits::default();
    for (c, k) in [(2, 0), (2, 1), (3, 0)] {
        let inst = ElInstance::full(Graph::cycle(5), c, k)?;
        for algo in [Algo::Oracle, Algo::Dp, Algo::Fpt] {
            let r = solve(&inst, algo, &limits)?;
            println!("c={c} k={k} {algo:?}: {} ({} nodes)", r.answer, r.stats.nodes);
        }
        let r = solve(&inst, Algo::Auto, &limits)?;
        print!("{}", emit_labeling(&inst.g, r.witness.as_ref()));
    }
    Ok(())
}
