use stc_core::model::is_witness;
use stc_core::reductions::{nae_labeling_from_assignment, reduce_nae3sat, CnfFormula, Lit};
use stc_core::solve::{solve_fpt, Limits};

fn main() -> stc_core::error::Result<()> {
    let f = CnfFormula::new(
        4,
        vec![
            [Lit::pos(0), Lit::pos(1), Lit::neg(2)],
            [Lit::neg(0), Lit::pos(2), Lit::pos(3)],
        ],
    )?;
    let (inst, layout) = reduce_nae3sat(&f)?;
    let el = inst.normalize();
    println!("n={} m={} c={} k={}", inst.g.n(), inst.g.m(), inst.c, inst.k);

    let r = solve_fpt(&el, &Limits::default())?;
    println!("solver: {} after {} nodes", r.answer, r.stats.nodes);

    let a = f.nae_satisfying(1).remove(0);
    let lab = nae_labeling_from_assignment(&inst.g, &layout, &a)?;
    println!("assignment {a:?} gives a witness: {}", is_witness(&el, &lab));
    Ok(())
}
