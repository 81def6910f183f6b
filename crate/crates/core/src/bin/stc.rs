use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Parser, Subcommand};
use stc_core::gallai::{gallai_graph, k1};
use stc_core::io::{
    emit_instance, emit_labeling, emit_setcover, emit_trace, parse_cnf, parse_instance,
    parse_labeling, parse_setcover,
};
use stc_core::kernel::{kernelize, KernelOptions};
use stc_core::model::verify_labeling;
use stc_core::reductions::{
    lift_color, reduce_3sat_eth, reduce_is_to_setcover, reduce_nae3sat, reduce_setcover,
};
use stc_core::solve::{solve, Algo, Limits};
use stc_core::{Error, Instance};

#[derive(Parser)]
#[command(name = "stc", version, about = "Strong triadic closure with multiple edge colors")]
struct Cli {
    /// Cap on the brute-force search space.
    #[arg(long, global = true, env = "STC_MAX_ENUM", default_value_t = Limits::default().max_enum)]
    max_enum: u128,
    /// Cap on subsets tabulated by the dynamic program.
    #[arg(long, global = true, env = "STC_MAX_SUBSETS", default_value_t = Limits::default().max_subsets)]
    max_subsets: u64,
    /// Cap on branching nodes.
    #[arg(long, global = true, env = "STC_MAX_NODES", default_value_t = Limits::default().max_nodes)]
    max_nodes: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide instances and print a witness labeling.
    Solve {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value = "auto", value_parser = ["oracle", "dp", "fpt", "auto"])]
        algo: String,
        /// Worker threads; output order always follows the file order.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the Gallai graph of the instance graph.
    Gallai { file: PathBuf },
    /// Print k1 and a minimum Gallai vertex cover.
    K1 { file: PathBuf },
    /// Apply the critical-clique rule to a fixpoint and print the kernel.
    Kernelize {
        file: PathBuf,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        normalize_empty_cc: bool,
    },
    /// Generate instances from other problems.
    #[command(subcommand)]
    Gen(Gen),
    /// Check a labeling against an instance.
    Verify { instance: PathBuf, labeling: PathBuf },
}

#[derive(Subcommand)]
enum Gen {
    /// NAE-3SAT (DIMACS) to two-color STC.
    Nae3sat { cnf: PathBuf },
    /// Multi-STC instance with one more color.
    Lift { instance: PathBuf },
    /// Set cover file to vertex-list STC.
    Setcover { input: PathBuf },
    /// 3-SAT (DIMACS, at most four occurrences per variable) to vertex-list STC.
    Eth3sat { cnf: PathBuf },
    /// Independent set of size `s` in the instance graph to set cover.
    Is2sc { instance: PathBuf, s: usize },
}

enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Parse { .. }) => 2,
            Failure::Lib(Error::ResourceLimit { .. }) => 3,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Out = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    Ok(parse_instance(&read(path)?)?)
}

fn solve_file(path: &Path, algo: Algo, limits: &Limits) -> Out {
    let inst = load(path)?.normalize();
    let r = solve(&inst, algo, limits)?;
    if let Some(w) = &r.witness {
        debug_assert!(stc_core::model::is_witness(&inst, w));
    }
    Ok(emit_labeling(&inst.g, r.witness.as_ref()))
}

fn solve_many(files: &[PathBuf], algo: Algo, limits: &Limits, jobs: usize) -> Vec<Out> {
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<Out>> = (0..files.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs.clamp(1, files.len().max(1)))
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= files.len() {
                            break done;
                        }
                        done.push((i, solve_file(&files[i], algo, limits)));
                    }
                })
            })
            .collect();
        for w in workers {
            for (i, out) in w.join().expect("worker panicked") {
                slots[i] = Some(out);
            }
        }
    });
    slots.into_iter().map(|s| s.unwrap()).collect()
}

fn gallai_cmd(path: &Path) -> Out {
    let inst = load(path)?;
    let g = inst.graph();
    let gg = gallai_graph(g);
    let mut out = format!("p gallai {} {}\n", gg.n(), gg.base.m());
    for (w, &e) in gg.to_edge.iter().enumerate() {
        let (u, v) = g.edge(e);
        out += &format!("v {} {} {}\n", w + 1, u + 1, v + 1);
    }
    for &(a, b) in gg.base.edges() {
        out += &format!("e {} {}\n", a + 1, b + 1);
    }
    Ok(out)
}

fn k1_cmd(path: &Path) -> Out {
    let inst = load(path)?;
    let g = inst.graph();
    let r = k1(g);
    let mut out = format!("k1 {}\n", r.k1);
    for &e in &r.cover {
        let (u, v) = g.edge(e);
        out += &format!("w {} {}\n", u + 1, v + 1);
    }
    Ok(out)
}

fn kernelize_cmd(path: &Path, trace: bool, normalize_empty_cc: bool) -> Out {
    let inst = load(path)?.normalize();
    let r = kernelize(&inst, KernelOptions { normalize_empty_cc });
    let mut out = if trace { emit_trace(&r) } else { String::new() };
    out += &emit_instance(&Instance::El(r.reduced));
    Ok(out)
}

fn gen_cmd(g: &Gen) -> Out {
    Ok(match g {
        Gen::Nae3sat { cnf } => {
            let (inst, _) = reduce_nae3sat(&parse_cnf(&read(cnf)?)?)?;
            emit_instance(&Instance::Multi(inst))
        }
        Gen::Lift { instance } => {
            let Instance::Multi(m) = load(instance)? else {
                return Err(Failure::Lib(Error::Validation(
                    "lift needs an mstc instance".into(),
                )));
            };
            emit_instance(&Instance::Multi(lift_color(&m).0))
        }
        Gen::Setcover { input } => {
            let (inst, _) = reduce_setcover(&parse_setcover(&read(input)?)?)?;
            emit_instance(&Instance::Vl(inst))
        }
        Gen::Eth3sat { cnf } => {
            let (inst, _) = reduce_3sat_eth(&parse_cnf(&read(cnf)?)?)?;
            emit_instance(&Instance::Vl(inst))
        }
        Gen::Is2sc { instance, s } => {
            let inst = load(instance)?;
            emit_setcover(&reduce_is_to_setcover(inst.graph(), *s)?)
        }
    })
}

/// Prints `s VALID <weak>` and exits 0 when the labeling is a witness;
/// otherwise `s INVALID` with one comment line per problem, exit 1.
fn verify_cmd(instance: &Path, labeling: &Path) -> Result<(String, bool), Failure> {
    let inst = load(instance)?.normalize();
    let Some(lab) = parse_labeling(&read(labeling)?, &inst.g)? else {
        return Ok(("s INVALID\n# labeling file says NO\n".into(), false));
    };
    let rep = verify_labeling(&inst, &lab)?;
    let mut problems = Vec::new();
    for v in &rep.violations {
        problems.push(format!("# {v:?}"));
    }
    if rep.weak_count > inst.k {
        problems.push(format!("# {} weak edges exceed k = {}", rep.weak_count, inst.k));
    }
    if problems.is_empty() {
        Ok((format!("s VALID {}\n", rep.weak_count), true))
    } else {
        Ok((format!("s INVALID\n{}\n", problems.join("\n")), false))
    }
}

/// Ignores write errors so a closed pipe ends the process quietly.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn finish(r: Out) -> ExitCode {
    match r {
        Ok(s) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_enum: cli.max_enum,
        max_subsets: cli.max_subsets,
        max_nodes: cli.max_nodes,
    };
    match &cli.cmd {
        Cmd::Solve { files, algo, jobs } => {
            let algo: Algo = algo.parse().expect("restricted by clap");
            let outs = solve_many(files, algo, &limits, *jobs);
            let mut code = 0;
            for (path, out) in files.iter().zip(outs) {
                if files.len() > 1 {
                    emit(&format!("# {}\n", path.display()));
                }
                match out {
                    Ok(s) => emit(&s),
                    Err(f) => {
                        eprintln!("error: {}: {}", path.display(), f.message());
                        if code == 0 {
                            code = f.code();
                        }
                    }
                }
            }
            ExitCode::from(code)
        }
        Cmd::Gallai { file } => finish(gallai_cmd(file)),
        Cmd::K1 { file } => finish(k1_cmd(file)),
        Cmd::Kernelize {
            file,
            trace,
            normalize_empty_cc,
        } => finish(kernelize_cmd(file, *trace, *normalize_empty_cc)),
        Cmd::Gen(g) => finish(gen_cmd(g)),
        Cmd::Verify { instance, labeling } => match verify_cmd(instance, labeling) {
            Ok((s, ok)) => {
                emit(&s);
                ExitCode::from(if ok { 0 } else { 1 })
            }
            Err(f) => finish(Err(f)),
        },
    }
}
