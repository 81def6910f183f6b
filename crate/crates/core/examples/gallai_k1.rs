use stc_core::gallai::{gallai_graph, k1};
use stc_core::Graph;

fn main() {
    let g = Graph::star(4);
    let gg = gallai_graph(&g);
    println!("star(4): {} edges, Gallai graph has {} edges", g.m(), gg.base.m());
    let r = k1(&g);
    println!("k1 = {}", r.k1);
    for e in r.cover {
        let (u, v) = g.edge(e);
        println!("  weak {u}-{v}");
    }
}
