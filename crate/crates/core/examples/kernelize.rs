//! A large clique hanging off a path shrinks to a few vertices.
use stc_core::io::{emit_instance, emit_trace};
use stc_core::kernel::{kernelize, KernelOptions};
use stc_core::model::{ElInstance, Instance};
use stc_core::Graph;

fn main() -> stc_core::error::Result<()> {
    let size = 8;
    let mut pairs: Vec<(usize, usize)> = (0..=size)
        .flat_map(|a| (a + 1..=size).map(move |b| (a, b)))
        .collect();
    pairs.push((size, size + 1));
    pairs.push((size + 1, size + 2));
    let inst = ElInstance::full(Graph::new(size + 3, &pairs)?, 1, 2)?;
    let r = kernelize(&inst, KernelOptions::default());
    print!("{}", emit_trace(&r));
    print!("{}", emit_instance(&Instance::El(r.reduced)));
    Ok(())
}
