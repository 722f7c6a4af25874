use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use madgad::decomp::{self, Decomposition, Variant};
use madgad::designs::{self, BlockDesign, TruncateMode};
use madgad::error::Error;
use madgad::formulas;
use madgad::graph::GraphList;
use madgad::io::parse_graph;
use madgad::mad::mad;
use madgad::normalize;
use madgad::oracle::{self, OracleBudget};
use madgad::rational::Rational;

#[derive(Parser)]
#[command(
    name = "madgad",
    version,
    about = "Maximum average degree of graph decompositions"
)]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = designs::DEFAULT_SEED)]
    seed: u64,
    /// Render the top-level report fields as aligned text.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact maximum average degree of a graph file (`-` for stdin).
    Mad { file: String },
    /// Closed-form values.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Block designs as JSON.
    #[command(subcommand)]
    Design(DesignCmd),
    /// Build a decomposition or packing.
    Construct(ConstructArgs),
    /// Validate a decomposition file and report its Mad-sum.
    Verify { file: String },
    /// Normalize a graph list or decomposition to the extremal list.
    Normalize {
        file: String,
        /// Write the step log to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
        #[arg(long, global = true)]
        budget_n: Option<usize>,
        #[arg(long, global = true)]
        budget_k: Option<usize>,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Largest Mad of a graph with m edges.
    G {
        #[arg(long)]
        m: u64,
    },
    /// Largest Mad-sum of k graphs with N edges in total.
    Mlist {
        #[arg(long)]
        k: u64,
        #[arg(long = "edges")]
        edges: u64,
    },
    /// Upper bound on M(k,n).
    Mbound {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// M(2,n).
    M2 {
        #[arg(long)]
        n: u64,
    },
    /// M(C(n,2)−t, n) from a maximum partial triple system.
    Psts {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
    },
    /// Square-root caps.
    Sqrt {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlaneArg {
    Pg,
    Ag,
}

#[derive(Clone, Copy, ValueEnum)]
enum TruncArg {
    Point,
    Line,
}

#[derive(Subcommand)]
enum DesignCmd {
    Sts {
        #[arg(long)]
        n: usize,
    },
    Psts {
        #[arg(long)]
        n: usize,
    },
    Pg {
        #[arg(long)]
        q: u64,
    },
    Ag {
        #[arg(long)]
        q: u64,
    },
    Truncate {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        plane: PlaneArg,
        #[arg(long, value_enum)]
        mode: TruncArg,
    },
    Cyclic {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructName {
    K2,
    SmallK,
    #[value(name = "k7-k8")]
    K7K8,
    Design,
    Psts,
    Blowup,
    PlanePlusR,
    Triangular,
    Recursive,
    Apex,
    Split,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    name: ConstructName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value = "a")]
    variant: String,
    /// Design file for `design` and `blowup`; decomposition file for
    /// `recursive`, `apex` and `split`.
    #[arg(long)]
    from: Option<String>,
}

#[derive(Subcommand)]
enum OracleCmd {
    Mad {
        file: String,
    },
    Mlist {
        #[arg(long)]
        k: usize,
        #[arg(long = "edges")]
        edges: usize,
    },
    Mkn {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    Invariants {
        file: String,
    },
}

enum Failure {
    Usage(String),
    Refused(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(_) => Failure::Refused(e.to_string()),
            Error::Domain(_) => Failure::Usage(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|v| emit(&cli, &v));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Refused(m) => (3, m),
                Failure::Invalid(m) => (1, m),
            };
            eprintln!("madgad: {msg}");
            ExitCode::from(code)
        }
    }
}

fn emit(cli: &Cli, v: &Value) -> Result<(), Failure> {
    let text = if cli.table {
        table(v)
    } else {
        format!("{}\n", serde_json::to_string_pretty(v)?)
    };
    match &cli.out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn table(v: &Value) -> String {
    let Value::Object(map) = v else {
        return format!("{v}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (key, val) in map {
        let shown = match val {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{key:<width$}  {shown}\n"));
    }
    out
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.cmd {
        Command::Mad { file } => {
            let g = parse_graph(&read_input(file)?)?;
            let c = mad(&g);
            Ok(json!({"mad": rat(&c.value), "witness": c.witness, "source": "max-flow"}))
        }
        Command::Formula(f) => formula(f),
        Command::Design(d) => design(d, cli.seed),
        Command::Construct(a) => {
            let d = construct(a)?;
            Ok(serde_json::to_value(d)?)
        }
        Command::Verify { file } => {
            let d: Decomposition = serde_json::from_str(&read_input(file)?)?;
            Ok(serde_json::to_value(decomp::validate(&d)?)?)
        }
        Command::Normalize { file, trace } => {
            let l = read_list(&read_input(file)?)?;
            let k = l.len() as u64;
            let e = l.total_edges() as u64;
            let st = normalize::normalize(&l, k, e)?;
            st.check_trajectory()?;
            if let Some(p) = trace {
                fs::write(p, serde_json::to_string_pretty(&st.log)?)?;
            }
            Ok(json!({
                "k": k,
                "edges": e,
                "initial_mad_sum": rat(&normalize::list_mad_sum(&l)),
                "mad_sum": rat(&st.mad_sum()),
                "terminal": st.multiset(),
                "steps": st.log.len(),
                "source": "normalize",
            }))
        }
        Command::Oracle {
            cmd,
            budget_n,
            budget_k,
        } => run_oracle(cmd, *budget_n, *budget_k),
        Command::Selftest => {
            let results = madgad::acceptance::run_all();
            let ok = results.iter().all(|r| r.passed);
            let v = json!({"passed": ok, "criteria": results, "source": "acceptance"});
            if ok {
                Ok(v)
            } else {
                println!("{}", serde_json::to_string_pretty(&v)?);
                Err(Failure::Invalid("acceptance suite failed".into()))
            }
        }
    }
}

/// A graph list is either `{"graphs": [...]}` or a decomposition's parts.
fn read_list(s: &str) -> Result<GraphList, Failure> {
    let v: Value = serde_json::from_str(s)?;
    if v.get("parts").is_some() {
        let d: Decomposition = serde_json::from_value(v)?;
        decomp::validate(&d)?;
        Ok(GraphList::new(d.parts))
    } else {
        Ok(serde_json::from_value(v)?)
    }
}

fn formula(f: &FormulaCmd) -> Outcome {
    Ok(match *f {
        FormulaCmd::G { m } => {
            let (p, r) = formulas::rep_params(m);
            json!({"m": m, "value": rat(&formulas::g_max_mad(m)?), "p": p, "r": r, "source": "g_max_mad"})
        }
        FormulaCmd::Mlist { k, edges } => {
            let t = formulas::param_triple(k, edges)?;
            json!({"k": k, "edges": edges, "value": rat(&formulas::m_list(k, edges)?),
                   "p": t.p, "q": t.q, "r": t.r, "source": "m_list"})
        }
        FormulaCmd::Mbound { k, n } => {
            json!({"k": k, "n": n, "value": rat(&formulas::m_upper_bound(k, n)?), "source": "m_upper_bound"})
        }
        FormulaCmd::M2 { n } => {
            json!({"n": n, "value": rat(&formulas::m_two(n)?), "source": "m_two"})
        }
        FormulaCmd::Psts { n, t } => {
            let (v, list) = formulas::m_upper_range(n, t)?;
            json!({"n": n, "t": t, "k": list.len(), "value": rat(&v), "source": "m_upper_range"})
        }
        FormulaCmd::Sqrt { k, n } => {
            json!({"k": k, "n": n, "bounds": formulas::sqrt_upper_bounds(k, n), "source": "sqrt_upper_bounds"})
        }
    })
}

fn design(d: &DesignCmd, seed: u64) -> Outcome {
    let out = match *d {
        DesignCmd::Sts { n } => serde_json::to_value(designs::steiner_triple_system(n)?)?,
        DesignCmd::Psts { n } => {
            let (b, leave) = designs::max_partial_triple_system_seeded(n, seed)?;
            json!({"design": b, "leave": leave})
        }
        DesignCmd::Pg { q } => serde_json::to_value(designs::projective_plane(q)?)?,
        DesignCmd::Ag { q } => serde_json::to_value(designs::affine_plane(q)?)?,
        DesignCmd::Truncate { q, plane, mode } => {
            let base = match plane {
                PlaneArg::Pg => designs::projective_plane(q)?,
                PlaneArg::Ag => designs::affine_plane(q)?,
            };
            let mode = match mode {
                TruncArg::Point => TruncateMode::DeletePoint,
                TruncArg::Line => TruncateMode::DeleteLine,
            };
            serde_json::to_value(designs::truncate_plane(&base, mode)?)?
        }
        DesignCmd::Cyclic { q } => {
            let (b, set) = designs::cyclic_plane_difference_set(q)?;
            json!({"design": b, "difference_set": set})
        }
    };
    Ok(out)
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required")))
}

fn read_design(path: &str) -> Result<BlockDesign, Failure> {
    let s = read_input(path)?;
    let v: Value = serde_json::from_str(&s)?;
    // `design psts` and `design cyclic` wrap the design.
    let v = v.get("design").cloned().unwrap_or(v);
    let d: BlockDesign = serde_json::from_value(v)?;
    designs::validate_pairwise(&d)?;
    Ok(d)
}

fn read_decomposition(path: &str) -> Result<Decomposition, Failure> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn construct(a: &ConstructArgs) -> Result<Decomposition, Failure> {
    let from = || {
        a.from
            .as_deref()
            .ok_or_else(|| Failure::Usage("--from is required".into()))
    };
    Ok(match a.name {
        ConstructName::K2 => decomp::construct_k2(need(a.n, "n")?)?,
        ConstructName::SmallK => {
            let variant = match a.variant.to_ascii_lowercase().as_str() {
                "a" => Variant::A,
                "b" => Variant::B,
                other => return Err(Failure::Usage(format!("unknown variant `{other}`"))),
            };
            decomp::construct_small_k(need(a.k, "k")?, need(a.n, "n")?, variant)?
        }
        ConstructName::K7K8 => decomp::construct_k7_k8(),
        ConstructName::Design => {
            let d = read_design(from()?)?;
            let n = a.n.unwrap_or(d.point_count);
            decomp::construct_from_design(&d, n)?
        }
        ConstructName::Psts => {
            decomp::construct_psts_decomposition(need(a.n, "n")?, need(a.t, "t")?)?
        }
        ConstructName::Blowup => {
            let d = read_design(from()?)?;
            decomp::blow_up_design_decomposition(&d, need(a.n, "n")?)?
        }
        ConstructName::PlanePlusR => {
            decomp::plane_plus_r_decomposition(need(a.q, "q")?, need(a.r, "r")?, need(a.n, "n")?)?
        }
        ConstructName::Triangular => {
            decomp::construct_triangular(need(a.t, "t")?, need(a.n, "n")?)?
        }
        ConstructName::Recursive => {
            decomp::recursive_blowup(&read_decomposition(from()?)?, need(a.t, "t")?)?
        }
        ConstructName::Apex => decomp::apex_extend(&read_decomposition(from()?)?)?,
        ConstructName::Split => decomp::split_edge(&read_decomposition(from()?)?)?,
    })
}

fn run_oracle(cmd: &OracleCmd, budget_n: Option<usize>, budget_k: Option<usize>) -> Outcome {
    let with = |mut b: OracleBudget| {
        if let Some(n) = budget_n {
            b.max_vertices = n;
        }
        if let Some(k) = budget_k {
            b.max_k = k;
        }
        b
    };
    Ok(match cmd {
        OracleCmd::Mad { file } => {
            let g = parse_graph(&read_input(file)?)?;
            let c = oracle::mad_bruteforce(&g, &with(OracleBudget::for_mad()))?;
            json!({"mad": rat(&c.value), "witness": c.witness, "source": "oracle"})
        }
        OracleCmd::Mlist { k, edges } => {
            let v = oracle::m_list_dp(*k, *edges, &with(OracleBudget::for_mlist()))?;
            json!({"k": k, "edges": edges, "value": rat(&v), "source": "oracle"})
        }
        OracleCmd::Mkn { k, n } => {
            let r = oracle::m_kn_search(*k, *n, &with(OracleBudget::for_search()))?;
            json!({"k": k, "n": n, "value": rat(&r.value), "sets": r.sets, "source": "oracle"})
        }
        OracleCmd::Invariants { file } => {
            let g = parse_graph(&read_input(file)?)?;
            let inv = oracle::invariants_small(&g, &with(OracleBudget::for_invariants()))?;
            let mut v = serde_json::to_value(inv)?;
            v["source"] = json!("oracle");
            v
        }
    })
}
