//! Set Cover to VL-Multi-STC with `k = 0`, and Independent Set to Set Cover.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{Labeling, VlInstance};

/// A Set Cover instance: can `t` sets of `family` cover `universe`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCover {
    pub universe: Vec<usize>,
    pub family: Vec<Vec<usize>>,
    pub t: usize,
}

impl SetCover {
    /// Sorts and dedups the universe and every set; members must lie in the
    /// universe.
    pub fn new(mut universe: Vec<usize>, mut family: Vec<Vec<usize>>, t: usize) -> Result<Self> {
        universe.sort_unstable();
        universe.dedup();
        for (i, set) in family.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(x) = set.iter().find(|x| universe.binary_search(x).is_err()) {
                return Err(Error::validation(format!(
                    "set {} has element {x} outside the universe",
                    i + 1
                )));
            }
        }
        Ok(SetCover {
            universe,
            family,
            t,
        })
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        self.universe
            .iter()
            .all(|u| chosen.iter().any(|&i| self.family[i].binary_search(u).is_ok()))
    }

    /// Lexicographically first cover with at most `t` sets, by brute force.
    pub fn find_cover(&self) -> Option<Vec<usize>> {
        let f = self.family.len();
        assert!(f < 30, "brute force over too many sets");
        for size in 0..=self.t.min(f) {
            let mut best: Option<Vec<usize>> = None;
            for mask in 0u32..1 << f {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let chosen: Vec<usize> = (0..f).filter(|&i| mask >> i & 1 == 1).collect();
                if self.is_cover(&chosen) && best.as_ref().is_none_or(|b| chosen < *b) {
                    best = Some(chosen);
                }
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }

    pub fn has_cover(&self) -> bool {
        self.find_cover().is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverLayout {
    /// Vertex of each universe element, in universe order.
    pub universe_vertices: Vec<usize>,
    /// `z_{t+1} .. z_{|F|}`.
    pub pad: Vec<usize>,
    pub selector: usize,
    pub e_u: Vec<usize>,
    pub e_ua: Vec<usize>,
    pub e_za: Vec<usize>,
}

pub fn reduce_setcover(sc: &SetCover) -> Result<(VlInstance, SetCoverLayout)> {
    let f = sc.family.len();
    if f == 0 {
        return Err(Error::validation("family is empty"));
    }
    if sc.t > f {
        return Err(Error::validation(format!("t = {} exceeds |F| = {f}", sc.t)));
    }
    let nu = sc.universe.len();
    let universe_vertices: Vec<usize> = (0..nu).collect();
    let pad: Vec<usize> = (nu..nu + f - sc.t).collect();
    let selector = nu + f - sc.t;

    let mut pairs = Vec::new();
    for a in 0..nu {
        for b in a + 1..nu {
            pairs.push((a, b));
        }
    }
    pairs.extend(universe_vertices.iter().map(|&u| (u, selector)));
    pairs.extend(pad.iter().map(|&z| (z, selector)));
    let g = Graph::new(selector + 1, &pairs).expect("distinct pairs");

    let mut lambda = vec![(1..=f).collect::<Vec<_>>(); g.n()];
    for (idx, x) in sc.universe.iter().enumerate() {
        let mut l: Vec<usize> = (0..f)
            .filter(|&i| sc.family[i].binary_search(x).is_ok())
            .map(|i| i + 1)
            .collect();
        l.push(f + 1);
        lambda[idx] = l;
    }
    let eid = |a: usize, b: usize| g.edge_id(a, b).unwrap();
    let e_u = (0..nu)
        .flat_map(|a| (a + 1..nu).map(move |b| (a, b)))
        .map(|(a, b)| eid(a, b))
        .collect();
    let e_ua = universe_vertices.iter().map(|&u| eid(u, selector)).collect();
    let e_za = pad.iter().map(|&z| eid(z, selector)).collect();
    let inst = VlInstance::new(g, f + 1, 0, lambda)?;
    Ok((
        inst,
        SetCoverLayout {
            universe_vertices,
            pad,
            selector,
            e_u,
            e_ua,
            e_za,
        },
    ))
}

/// Zero-weak labeling from a cover of at most `t` sets (0-based indices).
pub fn setcover_labeling_from_cover(
    sc: &SetCover,
    layout: &SetCoverLayout,
    g: &Graph,
    cover: &[usize],
) -> Result<Labeling> {
    if cover.len() > sc.t || cover.iter().any(|&i| i >= sc.family.len()) || !sc.is_cover(cover) {
        return Err(Error::contract("not a cover of size at most t"));
    }
    let f = sc.family.len();
    let mut color = vec![0; g.m()];
    for &e in &layout.e_u {
        color[e] = f + 1;
    }
    let mut chosen: Vec<usize> = cover.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    for (idx, x) in sc.universe.iter().enumerate() {
        let i = *chosen
            .iter()
            .find(|&&i| sc.family[i].binary_search(x).is_ok())
            .unwrap();
        color[layout.e_ua[idx]] = i + 1;
    }
    let unused = (0..f).filter(|i| chosen.binary_search(i).is_err());
    for (&e, i) in layout.e_za.iter().zip(unused) {
        color[e] = i + 1;
    }
    Ok(Labeling::new(color))
}

/// Universe = edge ids of `g`, `F_v` = edges incident to `v`, `t = n - s`.
/// `g` has an independent set of size `s` iff `t` sets cover the universe.
pub fn reduce_is_to_setcover(g: &Graph, s: usize) -> Result<SetCover> {
    if s > g.n() {
        return Err(Error::validation(format!(
            "independent set size {s} exceeds {} vertices",
            g.n()
        )));
    }
    let family = (0..g.n()).map(|v| g.incident_edges(v).to_vec()).collect();
    SetCover::new((0..g.m()).collect(), family, g.n() - s)
}
