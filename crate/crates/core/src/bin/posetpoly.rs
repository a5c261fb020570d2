use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use poset_polytopes::grassmann::{self, root_poset};
use poset_polytopes::polytope::{self, Method, Params};
use poset_polytopes::{dilworth, geometry, io, rep, verify, Error, Poset};

#[derive(Parser)]
#[command(name = "posetpoly", version, about = "Poset polytopes, FFLV bases and Grassmannian graph closures")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Excess algorithm.
    #[arg(long, global = true, default_value = "flow")]
    method: Method,

    /// Largest poset size allowed for subset enumeration.
    #[arg(long, global = true, env = "POSETPOLY_BRUTE_CAP", default_value_t = polytope::DEFAULT_BRUTE_CAP,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    brute_cap: usize,

    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Poset JSON file.
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Root poset R(d) of Gr(d, n).
    #[arg(long, num_args = 2, value_names = ["D", "N"])]
    grassmann: Option<Vec<usize>>,
}

#[derive(Args)]
struct Grassmann {
    #[arg(long, num_args = 2, value_names = ["D", "N"], required = true)]
    grassmann: Vec<usize>,
}

#[derive(Args)]
struct Level {
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long = "M", default_value_t = 0)]
    big_m: u32,
}

impl Level {
    fn params(&self) -> Params {
        Params::new(self.m, self.big_m)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the poset in the JSON poset format.
    Poset {
        #[command(flatten)]
        source: Source,
    },
    /// Width, a maximum antichain and a minimum chain cover.
    Width {
        #[command(flatten)]
        source: Source,
    },
    /// Violation excess M(z).
    Excess {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        z: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Membership of z in S(m, M).
    Member {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        z: PathBuf,
        #[command(flatten)]
        level: Level,
    },
    /// All points of S(m, M).
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        level: Level,
        /// Only report the number of points.
        #[arg(long)]
        count: bool,
    },
    /// Split z in S(m, M) into m antichains and a remainder.
    Decompose {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        z: PathBuf,
        #[command(flatten)]
        level: Level,
    },
    /// Split the whole poset into m antichains and at most M leftovers.
    Partition {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        level: Level,
    },
    /// FFLV point count against the Weyl dimension.
    Fflv {
        #[command(flatten)]
        grassmann: Grassmann,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Cyclic span dimension against |S(m, M)| on R(d).
    Dims {
        #[command(flatten)]
        grassmann: Grassmann,
        #[command(flatten)]
        level: Level,
        #[arg(long, default_value_t = rep::DEFAULT_DIM_CAP)]
        dim_cap: usize,
    },
    BasisCheck {
        #[command(flatten)]
        grassmann: Grassmann,
        #[command(flatten)]
        level: Level,
        #[arg(long, default_value_t = rep::DEFAULT_DIM_CAP)]
        dim_cap: usize,
    },
    RelationCheck {
        #[command(flatten)]
        grassmann: Grassmann,
        #[command(flatten)]
        level: Level,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Poincaré polynomial of the graph closure over Gr(d, n).
    Poincare {
        #[command(flatten)]
        grassmann: Grassmann,
    },
    /// Poincaré polynomials of the strata X_k.
    Strata {
        #[command(flatten)]
        grassmann: Grassmann,
    },
    /// Stratum index of a subspace given as a JSON matrix.
    Stratum {
        #[arg(long)]
        subspace: PathBuf,
    },
    /// Fiber of the graph closure over a subspace.
    Fiber {
        #[arg(long)]
        subspace: PathBuf,
    },
    /// Run the property suite.
    Verify {
        /// Only checks whose name starts with this prefix.
        #[arg(long, default_value = "")]
        only: String,
    },
}

enum Failure {
    Domain(Error),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e)
        } else {
            Failure::Domain(e)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(Error::Parse(format!("{}: {e}", path.display()))))
}

fn dn(v: &[usize]) -> (usize, usize) {
    (v[0], v[1])
}

fn load(source: &Source) -> Result<Poset, Failure> {
    match (&source.poset, &source.grassmann) {
        (Some(path), _) => Ok(io::parse_poset(&read(path)?)?),
        (None, Some(v)) => {
            let (d, n) = dn(v);
            Ok(root_poset(d, n)?.poset)
        }
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Output plus whether the command's own check passed.
fn run(cli: &Cli) -> Result<(Value, bool), Failure> {
    let out = match &cli.command {
        Command::Poset { source } => to_value(&load(source)?.to_file()),
        Command::Width { source } => {
            let p = load(source)?;
            let all = p.all();
            json!({
                "width": dilworth::width(&p, &all)?,
                "antichain": io::labels_json(&p, &dilworth::max_antichain(&p, &all)?.0),
                "chains": dilworth::min_chain_cover(&p, &all)?
                    .iter()
                    .map(|c| io::labels_json(&p, &c.0))
                    .collect::<Vec<_>>(),
            })
        }
        Command::Excess { source, z, m } => {
            let p = load(source)?;
            let z = io::parse_vector(&p, &read(z)?)?;
            json!({
                "m": m,
                "method": format!("{:?}", cli.method).to_lowercase(),
                "excess": polytope::violation_excess_capped(&p, &z, *m, cli.method, cli.brute_cap)?,
            })
        }
        Command::Member { source, z, level } => {
            let p = load(source)?;
            let z = io::parse_vector(&p, &read(z)?)?;
            json!({
                "m": level.m,
                "M": level.big_m,
                "member": polytope::membership(&p, &z, level.params())?,
                "excess": polytope::violation_excess_capped(&p, &z, level.m, cli.method, cli.brute_cap)?,
            })
        }
        Command::Enumerate { source, level, count } => {
            let p = load(source)?;
            let pts = polytope::enumerate_points(&p, level.params());
            let mut out = json!({ "m": level.m, "M": level.big_m, "count": pts.len() });
            if !count {
                out["points"] = json!(pts
                    .iter()
                    .map(|z| io::vector_json(&p, z)["z"].clone())
                    .collect::<Vec<_>>());
            }
            out
        }
        Command::Decompose { source, z, level } => {
            let p = load(source)?;
            let z = io::parse_vector(&p, &read(z)?)?;
            io::cert_json(&p, &polytope::decompose(&p, &z, level.params())?)
        }
        Command::Partition { source, level } => {
            let p = load(source)?;
            io::cert_json(&p, &polytope::partition_poset(&p, level.params())?)
        }
        Command::Fflv { grassmann, m } => {
            let (d, n) = dn(&grassmann.grassmann);
            let points = grassmann::fflv_points(d, n, *m)?.len();
            let dim = grassmann::weyl_dim(d, n, *m)?;
            let agree = num_bigint::BigUint::from(points) == dim;
            return Ok((
                json!({ "d": d, "n": n, "m": m, "points": points, "weyl_dim": dim.to_string(), "agree": agree }),
                agree,
            ));
        }
        Command::Dims { grassmann, level, dim_cap } => {
            let (d, n) = dn(&grassmann.grassmann);
            let points = polytope::enumerate_points(&root_poset(d, n)?.poset, level.params()).len();
            let span = rep::cyclic_span_dim(d, n, level.params(), *dim_cap)?;
            return Ok((
                json!({ "d": d, "n": n, "m": level.m, "M": level.big_m, "points": points, "span_dim": span }),
                points == span,
            ));
        }
        Command::BasisCheck { grassmann, level, dim_cap } => {
            let (d, n) = dn(&grassmann.grassmann);
            let report = rep::basis_check(d, n, level.params(), *dim_cap)?;
            let mut out = to_value(&report);
            out["passed"] = json!(report.passed());
            return Ok((out, report.passed()));
        }
        Command::RelationCheck { grassmann, level, samples } => {
            let (d, n) = dn(&grassmann.grassmann);
            let report = rep::relation_check(d, n, level.params(), *samples, cli.seed)?;
            let mut out = to_value(&report);
            out["passed"] = json!(report.passed());
            return Ok((out, report.passed()));
        }
        Command::Poincare { grassmann } => {
            let (d, n) = dn(&grassmann.grassmann);
            io::poly_json(&geometry::graph_poincare(d, n)?)
        }
        Command::Strata { grassmann } => {
            let (d, n) = dn(&grassmann.grassmann);
            json!({
                "d": d,
                "n": n,
                "strata": geometry::strata_poincare(d, n)?
                    .iter()
                    .enumerate()
                    .map(|(k, p)| json!({ "k": k, "poincare": io::poly_json(p) }))
                    .collect::<Vec<_>>(),
                "preimage": to_value(&geometry::preimage_dim_table(d, n)?),
            })
        }
        Command::Stratum { subspace } => {
            let u = io::parse_subspace(&read(subspace)?)?;
            json!({ "d": u.d(), "n": u.n(), "k": geometry::stratum_of(&u), "rref": io::matrix_json(u.rows()) })
        }
        Command::Fiber { subspace } => io::fiber_json(&geometry::fiber_of(&io::parse_subspace(&read(subspace)?)?)),
        Command::Verify { only } => {
            let report = verify::run(cli.seed, only);
            return Ok((to_value(&report), report.passed));
        }
    };
    Ok((out, true))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if x.is_object() || x.as_array().is_some_and(|a| a.iter().any(|e| e.is_object())) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {x}\n"));
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                out.push_str(&format!("{pad}-\n"));
                render_text(x, indent + 1, out);
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, passed)) => {
            match cli.format {
                Format::Json => println!("{value}"),
                Format::Text => {
                    let mut s = String::new();
                    render_text(&value, 0, &mut s);
                    print!("{s}");
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
