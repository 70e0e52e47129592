//! `wdeg`: generators, exact search, plane witnesses, verification and
//! coloring from the command line.
//!
//! Exit status is 0 on success, 1 when a verification or construction
//! fails, and 2 on usage errors, including unreadable or malformed inputs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use wdeg_core::coloring::{
    color_from_witness, validate_coloring, ColorChooser, ListAssignment, MaxChooser, MinChooser,
    RandomChooser,
};
use wdeg_core::delsave::verify;
use wdeg_core::exact::{degeneracy, is_weakly_degenerate, weak_degeneracy};
use wdeg_core::format::{
    parse_charges, parse_lists, parse_pg, parse_sg, parse_witness, write_coloring, write_dot,
    write_pg, write_sg, write_witness,
};
use wdeg_core::gen::{gen, Family, GenSpec, Generated, SplitMix64};
use wdeg_core::selfcheck::run_all;
use wdeg_core::{make_instance, witness, ChargeFn, PlaneGraph, SimpleGraph, VertexId};

#[derive(Parser)]
#[command(name = "wdeg", version, about = "Weak degeneracy toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph: cycle N, path N, clique N, wheel N, grid R C,
    /// icosahedron, petersen, apollonian N, triangulation N, gnp N P,
    /// regular N D.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; `.sg` forces the plain format. Defaults to stdout.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Print the degeneracy and a peeling order.
    Degeneracy { file: PathBuf },
    /// Print the weak degeneracy.
    Wd {
        file: PathBuf,
        /// Give up above this value (exit 1).
        #[arg(long)]
        max_d: Option<usize>,
        /// Write the witness here; `-` for stdout.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Build a witness for `G - S` under the charges of the instance
    /// `(G, S, I)`.
    WitnessPlanar {
        file: PathBuf,
        /// Comma-separated `S`.
        #[arg(short = 'S', value_delimiter = ',')]
        s: Vec<VertexId>,
        /// Comma-separated `I`.
        #[arg(short = 'I', value_delimiter = ',')]
        i: Vec<VertexId>,
        #[arg(short)]
        o: PathBuf,
        /// Write the rule trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write a Graphviz rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a witness; prints one line per step.
    Verify {
        file: PathBuf,
        /// `const:d`, `charges:x0,x1,...`, or `instance:S=a,b;I=c` to check
        /// a witness for `G - S` under the instance charges.
        charges: String,
        witness: PathBuf,
    },
    /// Color along a witness.
    Color {
        file: PathBuf,
        witness: PathBuf,
        #[arg(long, conflicts_with = "palette")]
        lists: Option<PathBuf>,
        /// Lists `{1..k}` on every vertex.
        #[arg(long)]
        palette: Option<u32>,
        /// `min`, `max` or `random:SEED`.
        #[arg(long, default_value = "min")]
        chooser: String,
        /// Charges the witness is played under. Defaults to `|L(v)| - 1`.
        #[arg(long)]
        charges: Option<String>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Selfcheck,
}

enum Failure {
    Usage(anyhow::Error),
    Failed(anyhow::Error),
}

type Res<T> = Result<T, Failure>;

fn usage<T>(e: impl Into<anyhow::Error>) -> Res<T> {
    Err(Failure::Usage(e.into()))
}

trait UsageExt<T> {
    fn usage(self) -> Res<T>;
}

impl<T, E: Into<anyhow::Error>> UsageExt<T> for Result<T, E> {
    fn usage(self) -> Res<T> {
        self.map_err(|e| Failure::Usage(e.into()))
    }
}

fn failed<T>(e: impl Into<anyhow::Error>) -> Res<T> {
    Err(Failure::Failed(e.into()))
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .usage()
}

fn write_out(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) if p == Path::new("-") => {
            print!("{text}");
            Ok(())
        }
        Some(p) => fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .usage(),
    }
}

fn is_pg(path: &Path, text: &str) -> bool {
    match path.extension().and_then(|e| e.to_str()) {
        Some("pg") => true,
        Some("sg") => false,
        _ => text.lines().any(|l| l.trim_start().starts_with("outer")),
    }
}

fn load_plane(path: &Path) -> Res<PlaneGraph> {
    let text = read(path)?;
    parse_pg(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .usage()
}

fn load_graph(path: &Path) -> Res<SimpleGraph> {
    let text = read(path)?;
    let g = if is_pg(path, &text) {
        parse_pg(&text).map(|p| p.graph().clone())
    } else {
        parse_sg(&text)
    };
    g.with_context(|| format!("parsing {}", path.display()))
        .usage()
}

/// `G - S` and its charges for `S=a,b,c;I=d,e` on a `.pg` file.
fn instance_charges(path: &Path, spec: &str) -> Res<(SimpleGraph, ChargeFn)> {
    let mut s = Vec::new();
    let mut i = Vec::new();
    for part in spec.split(';').filter(|p| !p.is_empty()) {
        let (key, vals) = part.split_once('=').unwrap_or((part, ""));
        let target = match key.trim() {
            "S" => &mut s,
            "I" => &mut i,
            k => return usage(anyhow!("instance key must be S or I, got {k:?}")),
        };
        for v in vals.split(',').filter(|v| !v.trim().is_empty()) {
            target.push(v.trim().parse::<VertexId>().context("instance vertex").usage()?);
        }
    }
    let inst = make_instance(load_plane(path)?, &s, &i)
        .context("invalid instance")
        .usage()?;
    Ok((inst.residual(), inst.charges().clone()))
}

fn chooser(spec: &str) -> Res<Box<dyn ColorChooser>> {
    match spec {
        "min" => Ok(Box::new(MinChooser)),
        "max" => Ok(Box::new(MaxChooser)),
        _ => match spec.strip_prefix("random:").map(str::parse::<u64>) {
            Some(Ok(seed)) => Ok(Box::new(RandomChooser(SplitMix64::new(seed)))),
            _ => usage(anyhow!("chooser must be min, max or random:SEED, got {spec:?}")),
        },
    }
}

fn run(cmd: Cmd) -> Res<()> {
    match cmd {
        Cmd::Gen {
            family,
            params,
            seed,
            o,
        } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let spec = GenSpec {
                family: Family::parse(&family, &params).usage()?,
                seed,
            };
            let header = spec.header();
            let g = gen(&spec).usage()?;
            let force_sg = o
                .as_deref()
                .and_then(Path::extension)
                .is_some_and(|e| e == "sg");
            let text = match &g {
                Generated::Plane(p) if !force_sg => write_pg(p, Some(&header)),
                _ => write_sg(g.graph(), Some(&header)),
            };
            write_out(o.as_deref(), &text)
        }
        Cmd::Degeneracy { file } => {
            let g = load_graph(&file)?;
            let (d, order) = degeneracy(&g);
            let order: Vec<String> = order.iter().map(ToString::to_string).collect();
            println!("{d}");
            println!("{}", order.join(" "));
            Ok(())
        }
        Cmd::Wd { file, max_d, o } => {
            let g = load_graph(&file)?;
            let (d, w) = match max_d {
                None => weak_degeneracy(&g).usage()?,
                Some(k) => {
                    let mut found = None;
                    for d in 0..=k {
                        let f = ChargeFn::constant(&g, d as i64);
                        if let Some(w) = is_weakly_degenerate(&g, &f).usage()? {
                            found = Some((d, w));
                            break;
                        }
                    }
                    match found {
                        Some(x) => x,
                        None => return failed(anyhow!("weak degeneracy exceeds {k}")),
                    }
                }
            };
            println!("{d}");
            if let Some(o) = o {
                write_out(Some(&o), &write_witness(&w))?;
            }
            Ok(())
        }
        Cmd::WitnessPlanar {
            file,
            s,
            i,
            o,
            trace,
            dot,
        } => {
            let g = load_plane(&file)?;
            let inst = make_instance(g, &s, &i)
                .context("invalid instance")
                .usage()?;
            let out = match witness(&inst) {
                Ok(out) => out,
                Err(e) => return failed(anyhow!(e).context("witness construction failed")),
            };
            write_out(Some(&o), &write_witness(&out.witness))?;
            if let Some(t) = trace {
                let lines: String = out.trace.iter().map(|r| format!("{r}\n")).collect();
                write_out(Some(&t), &lines)?;
            }
            if let Some(d) = dot {
                let text = write_dot(inst.graph().graph(), inst.s(), inst.i(), Some(&out.witness));
                write_out(Some(&d), &text)?;
            }
            eprintln!(
                "{} moves, {} saves, {} rule firings",
                out.witness.len(),
                out.witness.save_count(),
                out.trace.len()
            );
            Ok(())
        }
        Cmd::Verify {
            file,
            charges,
            witness,
        } => {
            let (g, f) = match charges.strip_prefix("instance:") {
                Some(spec) => instance_charges(&file, spec)?,
                None => {
                    let g = load_graph(&file)?;
                    let f = parse_charges(&charges, &g).usage()?;
                    (g, f)
                }
            };
            let w = parse_witness(&read(&witness)?)
                .with_context(|| format!("parsing {}", witness.display()))
                .usage()?;
            match verify(&g, &f, &w) {
                Ok(tr) => {
                    for l in tr.to_lines() {
                        println!("{l}");
                    }
                    Ok(())
                }
                Err(e) => failed(anyhow!(e).context("witness rejected")),
            }
        }
        Cmd::Color {
            file,
            witness,
            lists,
            palette,
            chooser: ch,
            charges,
            o,
        } => {
            let g = load_graph(&file)?;
            let w = parse_witness(&read(&witness)?)
                .with_context(|| format!("parsing {}", witness.display()))
                .usage()?;
            let lists = match (lists, palette) {
                (Some(p), _) => parse_lists(&read(&p)?)
                    .with_context(|| format!("parsing {}", p.display()))
                    .usage()?,
                (None, k) => ListAssignment::palette(&g, k.unwrap_or(5)),
            };
            let f = match charges {
                Some(spec) => parse_charges(&spec, &g).usage()?,
                None => {
                    let mut f = ChargeFn::new(g.capacity());
                    for v in g.vertices() {
                        let Some(l) = lists.get(v) else {
                            return usage(anyhow!("vertex {v} has no list"));
                        };
                        f.set(v, l.len() as i64 - 1);
                    }
                    f
                }
            };
            if let Err(e) = verify(&g, &f, &w) {
                return failed(anyhow!(e).context("witness rejected"));
            }
            let mut chooser = chooser(&ch)?;
            let c = match color_from_witness(&g, &f, &w, &lists, chooser.as_mut()) {
                Ok(c) => c,
                Err(e) => return failed(e),
            };
            if !validate_coloring(&g, &c, Some(&lists)) {
                return failed(anyhow!("produced coloring is not proper"));
            }
            write_out(o.as_deref(), &write_coloring(&c))
        }
        Cmd::Selfcheck => {
            let checks = run_all(|c| println!("{c}"));
            let bad = checks.iter().filter(|c| !c.passed).count();
            if bad > 0 {
                return failed(anyhow!("{bad} criteria failed"));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
