use super::{Limits, SolveResult};
use crate::error::{Error, Result};
use crate::gallai::gallai_graph;
use crate::model::{ElInstance, Labeling};

/// Subset dynamic program over the Gallai graph.
///
/// `layer[i][S]` holds iff the Gallai vertices `S` can be properly colored
/// with colors `1..=i`, each vertex using a color from its list.
pub fn solve_subset_dp(inst: &ElInstance, limits: &Limits) -> Result<SolveResult> {
    let m = inst.g.m();
    let size = 1u128 << m.min(127);
    if m >= 64 || size > limits.max_subsets as u128 {
        return Err(Error::ResourceLimit {
            what: "dp subsets",
            needed: size,
            limit: limits.max_subsets as u128,
        });
    }
    let full = (1usize << m) - 1;
    let gg = gallai_graph(&inst.g);
    let adj: Vec<usize> = (0..m)
        .map(|w| gg.base.neighbors(w).iter().fold(0, |acc, &x| acc | 1 << x))
        .collect();

    let mut indep = vec![false; full + 1];
    indep[0] = true;
    for t in 1..=full {
        let low = t.trailing_zeros() as usize;
        let rest = t & (t - 1);
        indep[t] = indep[rest] && adj[low] & rest == 0;
    }

    let allowed: Vec<usize> = (1..=inst.c)
        .map(|i| {
            (0..m)
                .filter(|&w| inst.psi[gg.to_edge[w]].binary_search(&i).is_ok())
                .fold(0, |acc, w| acc | 1 << w)
        })
        .collect();

    let mut nodes = 0u64;
    let mut layers: Vec<Vec<bool>> = Vec::with_capacity(inst.c + 1);
    let mut base = vec![false; full + 1];
    base[0] = true;
    layers.push(base);
    for i in 1..=inst.c {
        let prev = &layers[i - 1];
        let a = allowed[i - 1];
        let mut cur = vec![false; full + 1];
        for s in 0..=full {
            nodes += 1;
            if prev[s] {
                cur[s] = true;
                continue;
            }
            let avail = s & a;
            let mut t = avail;
            while t != 0 {
                if indep[t] && prev[s & !t] {
                    cur[s] = true;
                    break;
                }
                t = (t - 1) & avail;
            }
        }
        layers.push(cur);
    }

    let need = m.saturating_sub(inst.k) as u32;
    let top = &layers[inst.c];
    let Some(mut s) = (0..=full).find(|&s| top[s] && s.count_ones() >= need) else {
        return Ok(SolveResult::no(nodes));
    };

    let mut chi = vec![0; m];
    for i in (1..=inst.c).rev() {
        let prev = &layers[i - 1];
        let avail = s & allowed[i - 1];
        // Smallest integer T first: enumerate submasks in increasing order.
        let mut t = 0usize;
        loop {
            if indep[t] && prev[s & !t] {
                break;
            }
            assert!(t != avail, "re-descent lost a reachable subset");
            t = ((t | !avail).wrapping_add(1)) & avail;
        }
        for w in 0..m {
            if t >> w & 1 == 1 {
                chi[w] = i;
            }
        }
        s &= !t;
    }
    let mut color_of = vec![0; m];
    for w in 0..m {
        color_of[gg.to_edge[w]] = chi[w];
    }
    Ok(SolveResult::yes(Labeling::new(color_of), nodes))
}
