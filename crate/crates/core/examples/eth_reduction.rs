use rand::SeedableRng;
use stc_core::model::is_witness;
use stc_core::reductions::{
    eth_assignment_from_labeling, eth_labeling_from_assignment, reduce_3sat_eth, CnfFormula,
};

fn main() -> stc_core::error::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let f = CnfFormula::random(&mut rng, 5, 6, 4);
    let (inst, layout) = reduce_3sat_eth(&f)?;
    println!("n={} m={} c={}", inst.g.n(), inst.g.m(), inst.c);
    for (name, ok) in layout.claims(&inst) {
        println!("  {name}: {ok}");
    }
    let el = inst.normalize();
    for a in f.satisfying(3) {
        let lab = eth_labeling_from_assignment(&inst.g, &layout, &a)?;
        let back = eth_assignment_from_labeling(&inst.g, &layout, &lab)?;
        println!("{a:?}: witness {} round trip {}", is_witness(&el, &lab), back == a);
    }
    Ok(())
}
