use stc_core::model::MultiInstance;
use stc_core::reductions::lift_color;
use stc_core::solve::{solve_fpt, Limits};
use stc_core::Graph;

fn main() -> stc_core::error::Result<()> {
    let lim = Limits::default();
    for g in [Graph::path(3), Graph::complete(3)] {
        let inst = MultiInstance::new(g, 1, 0)?;
        let (lifted, _) = lift_color(&inst);
        let before = solve_fpt(&inst.normalize(), &lim)?.answer;
        let after = solve_fpt(&lifted.normalize(), &lim)?.answer;
        println!(
            "{} vertices, c={} -> {} vertices, c={}: {before} / {after}",
            inst.g.n(),
            inst.c,
            lifted.g.n(),
            lifted.c
        );
    }
    Ok(())
}
