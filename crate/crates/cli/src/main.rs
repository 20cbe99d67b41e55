//! Command-line front end: reduce sharbly chains, classify points into
//! Voronoi cones, compute normal forms, and check reducedness and cycles.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sharbly_core::error::Error;
use sharbly_core::gl2of::Mat2;
use sharbly_core::qfield::FieldParams;
use sharbly_core::reducer;
use sharbly_core::sharbly::{self, SharblyChain};
use sharbly_core::voronoi::{barycenter, ConeContext, SymPair};

#[derive(Parser)]
#[command(
    name = "sharbly",
    version,
    about = "Exact Voronoi reduction of 1-sharbly chains over real quadratic fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Input JSON file
    input: PathBuf,
    /// Squarefree field discriminant part d (O = Z[sqrt d]); cone data is
    /// shipped for d = 2 only
    #[arg(long, default_value_t = 2)]
    field: u32,
    /// Cone data JSON for fields other than Q(sqrt 2)
    #[arg(long)]
    cone_data: Option<PathBuf>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Pretty-print the JSON output
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a 1-sharbly chain to Voronoi reduced terms
    Reduce {
        #[command(flatten)]
        common: Common,
        /// Pass limit before giving up
        #[arg(long, default_value_t = 64)]
        max_passes: usize,
        /// Write the reduction tree to this file
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Synthesize canonical spanning-vector lifts for terms without lifts
        #[arg(long)]
        default_lifts: bool,
    },
    /// Minimal Voronoi cone containing a positive semidefinite point
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// GL2(O) normal form of a matrix
    NormalForm {
        #[command(flatten)]
        common: Common,
    },
    /// Is a sharbly Voronoi reduced? Reports the witness cone
    CheckReduced {
        #[command(flatten)]
        common: Common,
    },
    /// Does the boundary of a 1-sharbly chain vanish modulo Gamma?
    CheckCycle {
        #[command(flatten)]
        common: Common,
    },
    /// Translate a chain by a group element
    Act {
        #[command(flatten)]
        common: Common,
        /// The acting matrix, as inline JSON [[a, b], [c, d]]
        #[arg(long)]
        matrix: String,
    },
}

enum Ctx {
    Static(&'static ConeContext),
    Owned(Box<ConeContext>),
}

impl Ctx {
    fn get(&self) -> &ConeContext {
        match self {
            Ctx::Static(c) => c,
            Ctx::Owned(c) => c,
        }
    }
}

fn load_context(common: &Common) -> Result<Ctx, Error> {
    match (&common.cone_data, common.field) {
        (None, 2) => Ok(Ctx::Static(ConeContext::qsqrt2())),
        (None, d) => Err(Error::InvalidConeData(format!(
            "no cone data is shipped for d = {d}; supply --cone-data"
        ))),
        (Some(path), d) => {
            let params = FieldParams::with_computed_unit(d)?;
            let json = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Ok(Ctx::Owned(Box::new(ConeContext::load(params, &json)?)))
        }
    }
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn emit(common: &Common, value: &serde_json::Value) -> Result<(), Error> {
    let text = if common.pretty {
        serde_json::to_string_pretty(value).unwrap()
    } else {
        serde_json::to_string(value).unwrap()
    };
    match &common.output {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Parse a chain whose terms need no lifts (verts only).
fn parse_plain_chain(params: &FieldParams, v: &serde_json::Value) -> Result<SharblyChain, Error> {
    let d = v
        .get("field")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("chain is missing \"field\"".into()))? as u32;
    if d != params.d() {
        return Err(Error::Parse(format!(
            "chain is over d = {d}, context is d = {}",
            params.d()
        )));
    }
    let terms = v
        .get("terms")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("chain is missing \"terms\"".into()))?;
    let mut out = SharblyChain::new();
    for (i, t) in terms.iter().enumerate() {
        let coeff = t
            .get("coeff")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| Error::Parse(format!("term {i}: missing integer coeff")))?;
        let verts = t
            .get("verts")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse(format!("term {i}: missing verts")))?;
        let mut raw = Vec::new();
        for w in verts {
            raw.push(sharbly_core::gl2of::Vec2::from_json(d, w)?);
        }
        out.add_raw(params, &raw, coeff)?;
    }
    Ok(out)
}

fn cmd_reduce(
    common: &Common,
    max_passes: usize,
    trace_path: &Option<PathBuf>,
    default_lifts: bool,
) -> Result<(), Error> {
    let ctx = load_context(common)?;
    let ctx = ctx.get();
    let input = read_json(&common.input)?;
    let chain = sharbly::chain_from_json(ctx.params(), &input, default_lifts)?;
    let cfg = reducer::ReducerConfig {
        max_passes,
        trace_enabled: true,
    };
    let out = reducer::reduce_chain(ctx, &chain, &cfg)?;
    // per-pass size report on stderr
    eprintln!("passes: {}", out.passes);
    let mut level: Vec<&reducer::TraceNode> = out.trace.roots.iter().collect();
    let mut pass = 0usize;
    while !level.is_empty() {
        let split: Vec<&reducer::TraceNode> = level
            .iter()
            .copied()
            .filter(|n| n.status == "split")
            .collect();
        if !split.is_empty() {
            pass += 1;
            for n in &split {
                eprintln!(
                    "  pass {pass}: case {} on sizes {:?} -> {} children",
                    n.case.map(|c| c.to_string()).unwrap_or_default(),
                    n.sizes,
                    n.children.len()
                );
            }
        }
        level = level.iter().flat_map(|n| n.children.iter()).collect();
    }
    eprintln!(
        "output: {} reduced terms ({} with multiplicity)",
        out.chain.len(),
        out.chain.weight()
    );
    if let Some(tp) = trace_path {
        let text = serde_json::to_string_pretty(&out.trace.to_json()).unwrap();
        fs::write(tp, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", tp.display())))?;
    }
    emit(common, &out.chain.to_json(ctx.params().d()))
}

fn cmd_classify(common: &Common) -> Result<(), Error> {
    let ctx = load_context(common)?;
    let ctx = ctx.get();
    let input = read_json(&common.input)?;
    let p = SymPair::from_json(ctx.params().d(), &input)?;
    let cone = ctx.containing_cone(&p)?;
    emit(common, &cone.to_json())
}

fn cmd_normal_form(common: &Common) -> Result<(), Error> {
    let ctx = load_context(common)?;
    let ctx = ctx.get();
    let input = read_json(&common.input)?;
    let m = Mat2::from_json(ctx.params().d(), &input)?;
    let (m0, gamma) = sharbly_core::gl2of::normal_form(ctx.params(), &m)?;
    emit(
        common,
        &serde_json::json!({ "m0": m0.to_json(), "gamma": gamma.to_json() }),
    )
}

fn cmd_check_reduced(common: &Common) -> Result<(), Error> {
    let ctx = load_context(common)?;
    let ctx = ctx.get();
    let input = read_json(&common.input)?;
    let verts_json = input
        .get("verts")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("expected {\"verts\": [...]}".into()))?;
    let mut raw = Vec::new();
    for w in verts_json {
        raw.push(sharbly_core::gl2of::Vec2::from_json(ctx.params().d(), w)?);
    }
    let canonical = sharbly_core::sharbly::Sharbly::canonicalize(ctx.params(), &raw)?;
    let out = match canonical {
        None => serde_json::json!({ "reduced": true, "degenerate": true }),
        Some((s, _)) => {
            let reduced = sharbly::is_voronoi_reduced(ctx, &s)?;
            let cone = ctx.containing_cone(&barycenter(s.verts()))?;
            serde_json::json!({
                "reduced": reduced,
                "degenerate": false,
                "witness_cone": cone.to_json(),
            })
        }
    };
    emit(common, &out)
}

fn cmd_check_cycle(common: &Common) -> Result<(), Error> {
    let ctx = load_context(common)?;
    let ctx = ctx.get();
    let input = read_json(&common.input)?;
    let chain = parse_plain_chain(ctx.params(), &input)?;
    let boundary = chain.boundary(ctx.params())?;
    let mut residues: std::collections::BTreeMap<String, (i64, bool)> =
        std::collections::BTreeMap::new();
    for (s, &c) in boundary.iter() {
        let key = sharbly::gamma_key(ctx.params(), s.verts()[0].vec(), s.verts()[1].vec())?;
        let e = residues
            .entry(key.key_string())
            .or_insert((0, key.self_inverse));
        e.0 += c * key.sign;
        e.1 |= key.self_inverse;
    }
    let mut classes = Vec::new();
    let mut is_cycle = true;
    for (k, (total, self_inv)) in &residues {
        let vanishes = if *self_inv {
            total % 2 == 0
        } else {
            *total == 0
        };
        if !vanishes {
            is_cycle = false;
        }
        if *total != 0 || !vanishes {
            classes.push(serde_json::json!({
                "key": k,
                "total": total,
                "self_inverse": self_inv,
                "vanishes": vanishes,
            }));
        }
    }
    emit(
        common,
        &serde_json::json!({ "is_cycle": is_cycle, "residues": classes }),
    )
}

fn cmd_act(common: &Common, matrix: &str) -> Result<(), Error> {
    let ctx = load_context(common)?;
    let ctx = ctx.get();
    let m_json: serde_json::Value =
        serde_json::from_str(matrix).map_err(|e| Error::Parse(format!("--matrix: {e}")))?;
    let g = Mat2::from_json(ctx.params().d(), &m_json)?;
    let input = read_json(&common.input)?;
    let has_lifts = input
        .get("terms")
        .and_then(|t| t.as_array())
        .map(|a| a.iter().all(|t| t.get("lifts").is_some()))
        .unwrap_or(false);
    if has_lifts {
        let chain = sharbly::chain_from_json(ctx.params(), &input, false)?;
        let moved = reducer::act_lifted(ctx, &g, &chain)?;
        emit(common, &sharbly::chain_to_json(ctx.params().d(), &moved))
    } else {
        let chain = parse_plain_chain(ctx.params(), &input)?;
        let moved = reducer::act_chain(ctx, &g, &chain)?;
        emit(common, &moved.to_json(ctx.params().d()))
    }
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Reduce {
            common,
            max_passes,
            trace,
            default_lifts,
        } => cmd_reduce(common, *max_passes, trace, *default_lifts),
        Cmd::Classify { common } => cmd_classify(common),
        Cmd::NormalForm { common } => cmd_normal_form(common),
        Cmd::CheckReduced { common } => cmd_check_reduced(common),
        Cmd::CheckCycle { common } => cmd_check_cycle(common),
        Cmd::Act { common, matrix } => cmd_act(common, matrix),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::NonTermination) => {
            eprintln!("error: {}", Error::NonTermination);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
