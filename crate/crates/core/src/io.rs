//! Text formats: instance documents, labelings, DIMACS CNF and set cover.
//!
//! Instance grammar, one item per line, `#` starts a comment line:
//!
//! ```text
//! p <mstc|vlmstc|elmstc> <n> <m> <c> <k>
//! e <u> <v> [colors]      colors only in elmstc; `1,3`, `*` (all) or `-` (none)
//! vl <u> <colors>         only in vlmstc; unlisted vertices get all colors
//! ```
//!
//! Vertices are 1-based in files and 0-based in memory.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::{KernelResult, Step};
use crate::model::{full_list, ElInstance, Instance, Labeling, MultiInstance, VlInstance};
use crate::reductions::{CnfFormula, Lit, SetCover};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    Multi,
    Vl,
    El,
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

fn num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} '{tok}'")))
}

fn vertex(tok: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = num(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn colors(tok: &str, c: usize, line: usize) -> Result<Vec<usize>> {
    match tok {
        "*" => Ok(full_list(c)),
        "-" => Ok(Vec::new()),
        _ => {
            let mut out = Vec::new();
            for part in tok.split(',') {
                let x: usize = num(part, line, "color")?;
                if x == 0 || x > c {
                    return Err(Error::parse(line, format!("color {x} outside 1..={c}")));
                }
                out.push(x);
            }
            out.sort_unstable();
            out.dedup();
            Ok(out)
        }
    }
}

fn fmt_colors(list: &[usize], c: usize) -> String {
    if list.is_empty() {
        "-".into()
    } else if list.len() == c {
        "*".into()
    } else {
        list.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let Some((hl, head)) = lines.next() else {
        return Err(Error::parse(text.lines().count().max(1), "missing header"));
    };
    if head.len() != 6 || head[0] != "p" {
        return Err(Error::parse(hl, "expected 'p <variant> <n> <m> <c> <k>'"));
    }
    let variant = match head[1] {
        "mstc" => Variant::Multi,
        "vlmstc" => Variant::Vl,
        "elmstc" => Variant::El,
        other => return Err(Error::parse(hl, format!("unknown variant '{other}'"))),
    };
    let n: usize = num(head[2], hl, "n")?;
    let m: usize = num(head[3], hl, "m")?;
    let c: usize = num(head[4], hl, "c")?;
    let k: usize = num(head[5], hl, "k")?;
    if c == 0 {
        return Err(Error::parse(hl, "c must be at least 1"));
    }

    let mut pairs = Vec::new();
    let mut edge_lists = Vec::new();
    let mut vlists: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut seen = std::collections::HashMap::new();
    let mut last = hl;
    for (ln, toks) in lines {
        last = ln;
        match toks[0] {
            "e" => {
                let max = if variant == Variant::El { 4 } else { 3 };
                if toks.len() < 3 || toks.len() > max {
                    return Err(Error::parse(ln, "bad edge line"));
                }
                let u = vertex(toks[1], n, ln)?;
                let v = vertex(toks[2], n, ln)?;
                if u == v {
                    return Err(Error::parse(ln, "self-loop"));
                }
                let key = (u.min(v), u.max(v));
                if let Some(prev) = seen.insert(key, ln) {
                    return Err(Error::parse(ln, format!("duplicate edge, first on line {prev}")));
                }
                pairs.push(key);
                edge_lists.push(match toks.get(3) {
                    Some(t) => colors(t, c, ln)?,
                    None => full_list(c),
                });
            }
            "vl" => {
                if variant != Variant::Vl {
                    return Err(Error::parse(ln, "vertex lists are only allowed in vlmstc"));
                }
                if toks.len() != 3 {
                    return Err(Error::parse(ln, "bad vertex list line"));
                }
                let u = vertex(toks[1], n, ln)?;
                if vlists[u].is_some() {
                    return Err(Error::parse(ln, format!("second list for vertex {}", u + 1)));
                }
                vlists[u] = Some(colors(toks[2], c, ln)?);
            }
            other => return Err(Error::parse(ln, format!("unknown line type '{other}'"))),
        }
    }
    if pairs.len() != m {
        return Err(Error::parse(
            last,
            format!("header announces {m} edges, found {}", pairs.len()),
        ));
    }
    let g = Graph::new(n, &pairs).map_err(|e| Error::parse(hl, e.to_string()))?;
    let inst = match variant {
        Variant::Multi => Instance::Multi(MultiInstance::new(g, c, k)?),
        Variant::Vl => {
            let lambda = vlists
                .into_iter()
                .map(|l| l.unwrap_or_else(|| full_list(c)))
                .collect();
            Instance::Vl(VlInstance::new(g, c, k, lambda)?)
        }
        Variant::El => {
            // Lists were read in file order; edge ids follow sorted order.
            let mut psi = vec![Vec::new(); m];
            for (key, list) in pairs.iter().zip(edge_lists) {
                psi[g.edge_id(key.0, key.1).unwrap()] = list;
            }
            Instance::El(ElInstance::new(g, c, k, psi)?)
        }
    };
    Ok(inst)
}

/// Canonical document: edges in id order, `*` for full lists, `vl` lines
/// only for vertices whose list is not full.
pub fn emit_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let (tag, c, k) = match inst {
        Instance::Multi(x) => ("mstc", x.c, x.k),
        Instance::Vl(x) => ("vlmstc", x.c, x.k),
        Instance::El(x) => ("elmstc", x.c, x.k),
    };
    let mut out = format!("p {tag} {} {} {c} {k}\n", g.n(), g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match inst {
            Instance::El(x) => {
                writeln!(out, "e {} {} {}", u + 1, v + 1, fmt_colors(&x.psi[e], c)).unwrap()
            }
            _ => writeln!(out, "e {} {}", u + 1, v + 1).unwrap(),
        }
    }
    if let Instance::Vl(x) = inst {
        for (v, l) in x.lambda.iter().enumerate() {
            if l.len() != c {
                writeln!(out, "vl {} {}", v + 1, fmt_colors(l, c)).unwrap();
            }
        }
    }
    out
}

/// `s YES <weak>` and one `u v color` line per edge, or `s NO`.
pub fn emit_labeling(g: &Graph, lab: Option<&Labeling>) -> String {
    let Some(lab) = lab else {
        return "s NO\n".into();
    };
    let mut out = format!("s YES {}\n", lab.weak_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{} {} {}", u + 1, v + 1, lab.color_of[e]).unwrap();
    }
    out
}

/// Reads a labeling for `g`; `None` for `s NO`.
pub fn parse_labeling(text: &str, g: &Graph) -> Result<Option<Labeling>> {
    let mut lines = content_lines(text);
    let Some((hl, head)) = lines.next() else {
        return Err(Error::parse(text.lines().count().max(1), "missing status line"));
    };
    match head.as_slice() {
        ["s", "NO"] => return Ok(None),
        ["s", "YES", _] => {}
        _ => return Err(Error::parse(hl, "expected 's YES <weak>' or 's NO'")),
    }
    let weak: usize = num(head[2], hl, "weak count")?;
    let mut color: Vec<Option<usize>> = vec![None; g.m()];
    let mut last = hl;
    for (ln, toks) in lines {
        last = ln;
        if toks.len() != 3 {
            return Err(Error::parse(ln, "expected '<u> <v> <color>'"));
        }
        let u = vertex(toks[0], g.n(), ln)?;
        let v = vertex(toks[1], g.n(), ln)?;
        let x: usize = num(toks[2], ln, "color")?;
        let Some(e) = g.edge_id(u, v) else {
            return Err(Error::parse(ln, format!("{{{},{}}} is not an edge", u + 1, v + 1)));
        };
        if color[e].replace(x).is_some() {
            return Err(Error::parse(ln, "edge colored twice"));
        }
    }
    let Some(color) = color.into_iter().collect::<Option<Vec<_>>>() else {
        return Err(Error::parse(last, "some edges have no color"));
    };
    let lab = Labeling::new(color);
    if lab.weak_count() != weak {
        return Err(Error::parse(
            hl,
            format!("status says {weak} weak edges, found {}", lab.weak_count()),
        ));
    }
    Ok(Some(lab))
}

/// DIMACS `cnf`; every clause has exactly three literals.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header = None;
    let mut clauses = Vec::new();
    let mut cur: Vec<i64> = Vec::new();
    let mut last = 1;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') || l.starts_with('%') {
            continue;
        }
        last = ln;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() || toks.len() != 4 || toks[1] != "cnf" {
                return Err(Error::parse(ln, "expected a single 'p cnf <vars> <clauses>'"));
            }
            let v: usize = num(toks[2], ln, "variable count")?;
            let c: usize = num(toks[3], ln, "clause count")?;
            header = Some((v, c));
            continue;
        }
        let Some((nv, _)) = header else {
            return Err(Error::parse(ln, "clause before header"));
        };
        for t in toks {
            let x: i64 = num(t, ln, "literal")?;
            if x == 0 {
                if cur.len() != 3 {
                    return Err(Error::parse(ln, format!("clause has {} literals, need 3", cur.len())));
                }
                let cl = [cur[0], cur[1], cur[2]].map(Lit::from_dimacs);
                if cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var {
                    return Err(Error::parse(ln, "clause repeats a variable"));
                }
                clauses.push(cl);
                cur.clear();
            } else {
                if x.unsigned_abs() as usize > nv {
                    return Err(Error::parse(ln, format!("literal {x} exceeds {nv} variables")));
                }
                cur.push(x);
            }
        }
    }
    let Some((nv, nc)) = header else {
        return Err(Error::parse(last, "missing 'p cnf' header"));
    };
    if !cur.is_empty() {
        return Err(Error::parse(last, "last clause is not terminated by 0"));
    }
    if clauses.len() != nc {
        return Err(Error::parse(
            last,
            format!("header announces {nc} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(nv, clauses)
}

pub fn emit_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for cl in &f.clauses {
        for l in cl {
            let x = l.var as i64 + 1;
            write!(out, "{} ", if l.negated { -x } else { x }).unwrap();
        }
        out.push_str("0\n");
    }
    out
}

/// Lines `u <elements>` (may repeat), `f <members>` (one per set, in
/// order) and a single `t <int>`.
pub fn parse_setcover(text: &str) -> Result<SetCover> {
    let mut universe = Vec::new();
    let mut family = Vec::new();
    let mut t = None;
    let mut last = 1;
    for (ln, toks) in content_lines(text) {
        last = ln;
        let vals = |toks: &[&str]| -> Result<Vec<usize>> {
            toks.iter().map(|x| num(x, ln, "element")).collect()
        };
        match toks[0] {
            "u" => universe.extend(vals(&toks[1..])?),
            "f" => family.push(vals(&toks[1..])?),
            "t" => {
                if toks.len() != 2 || t.is_some() {
                    return Err(Error::parse(ln, "expected a single 't <int>'"));
                }
                t = Some(num(toks[1], ln, "t")?);
            }
            other => return Err(Error::parse(ln, format!("unknown line type '{other}'"))),
        }
    }
    let Some(t) = t else {
        return Err(Error::parse(last, "missing 't' line"));
    };
    SetCover::new(universe, family, t).map_err(|e| Error::parse(last, e.to_string()))
}

pub fn emit_setcover(sc: &SetCover) -> String {
    let join = |xs: &[usize]| {
        xs.iter()
            .map(|x| format!(" {x}"))
            .collect::<String>()
    };
    let mut out = format!("u{}\n", join(&sc.universe));
    for set in &sc.family {
        writeln!(out, "f{}", join(set)).unwrap();
    }
    writeln!(out, "t {}", sc.t).unwrap();
    out
}

/// Kernelization trace as `#` comment lines, 1-based original vertex ids.
pub fn emit_trace(result: &KernelResult) -> String {
    let ids = |xs: &[usize]| -> String {
        if xs.is_empty() {
            "-".into()
        } else {
            xs.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")
        }
    };
    let pairs = |xs: &[(usize, usize)]| -> String {
        if xs.is_empty() {
            "-".into()
        } else {
            xs.iter()
                .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                .collect::<Vec<_>>()
                .join(",")
        }
    };
    let tr = &result.trace;
    let mut out = format!("# tau {}\n", tr.tau);
    for step in &tr.steps {
        match step {
            Step::Rule(a) => writeln!(
                out,
                "# rule clique {} nbr {} nbr2 {} marked {} deleted {} budget -{}",
                ids(&a.clique),
                ids(&a.neighborhood),
                ids(&a.second_neighborhood),
                ids(&a.marked),
                ids(&a.deleted_vertices),
                a.budget_decrement
            )
            .unwrap(),
            Step::NormalizeEmpty(edges) => {
                writeln!(out, "# normalize {} budget -{}", pairs(edges), edges.len()).unwrap()
            }
        }
    }
    if tr.infeasible {
        out.push_str("# infeasible\n");
    }
    writeln!(
        out,
        "# kernel n {} k1 {} bound {}",
        result.reduced.g.n(),
        result.reduced_k1,
        result.bound
    )
    .unwrap();
    out
}
