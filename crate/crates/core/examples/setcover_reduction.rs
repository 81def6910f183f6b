use stc_core::model::is_witness;
use stc_core::reductions::{reduce_is_to_setcover, reduce_setcover, setcover_labeling_from_cover};
use stc_core::Graph;

fn main() -> stc_core::error::Result<()> {
    // Independent set of size 2 in C5, routed through set cover.
    let sc = reduce_is_to_setcover(&Graph::cycle(5), 2)?;
    println!("universe {:?}, {} sets, t={}", sc.universe, sc.family.len(), sc.t);
    let (inst, layout) = reduce_setcover(&sc)?;
    println!("STC instance: n={} m={} c={} k={}", inst.g.n(), inst.g.m(), inst.c, inst.k);
    match sc.find_cover() {
        Some(cover) => {
            let lab = setcover_labeling_from_cover(&sc, &layout, &inst.g, &cover)?;
            println!("cover {cover:?}, witness: {}", is_witness(&inst.normalize(), &lab));
        }
        None => println!("no cover"),
    }
    Ok(())
}
