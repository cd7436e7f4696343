//! Batch command-line interface with deterministic JSON output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::brauer::{
    closure_type, count_by_type, coset_reps, diagram_from_perm, double_cosets, key_lemma_witness, partition_a0_a1,
    perm_type, type_representative, partitions, MAX_ENUMERATION_K,
};
use crate::enveloping::{eta_prime, harish_chandra, is_central, is_j_poly, is_supersymmetric, PbwElement};
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};
use crate::freealg::{check_degree, eta};
use crate::liealg::AlgebraSpec;
use crate::schurweyl::{
    check_duality_relations, molev_element, pi_tensor, sergeev_z, str_gelfand, theta, z_sigma,
};
use crate::signs::Permutation;
use crate::superlinalg::Family;

/// Default cap on tensor degrees handled by a command.
pub const DEFAULT_MAX_DEGREE: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "superinv",
    version,
    about = "Exact invariants of gl(m|n), osp(m|2n), q(n) and p(n)",
    after_help = "Permutations: cycle notation \"(2 3)(4 5)\" with the rightmost cycle applied first, \
                  or one-line notation \"[1,3,2,5,4,6]\"; points are 1-based. For osp and p the \
                  permutation lives in S_2k, for gl and q in S_k.\n\
                  Exit codes: 0 success, 1 a checked property failed or internal error, 2 usage error."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Algebra family: gl, osp, q or p.
    #[arg(long, global = true, default_value = "gl")]
    pub family: String,
    /// Even size m (gl(m|n), osp(m|2n)); ignored for q and p.
    #[arg(long, global = true, default_value_t = 1)]
    pub m: usize,
    /// Odd size n.
    #[arg(long, global = true, default_value_t = 1)]
    pub n: usize,
    /// Degree k.
    #[arg(long, global = true, default_value_t = 1)]
    pub k: usize,
    /// Permutation in cycle or one-line notation.
    #[arg(long, global = true)]
    pub perm: Option<String>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest tensor degree a command may build.
    #[arg(long, global = true, env = "SUPERINV_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// theta_sigma and z_sigma with a centrality verdict.
    Invariant,
    /// Shifted Harish-Chandra image of Str X-hat^k (or z_sigma with --perm) with predicate verdicts.
    Hc,
    /// Key Lemma witnesses for sigma in S_2k (all sigma for k <= 3, one per type above).
    Keylemma,
    /// Brauer diagram counts by type, double cosets, and the closure of --perm.
    Brauer,
    /// Checks eta(pi(theta_sigma)) = 0 and z_sigma scalar over coset representatives for p(n).
    PnTrivial,
    /// Defining relations of the centralizer algebra on V^{(x)k}.
    Relations,
    /// Centrality (and Harish-Chandra predicates) of z_sigma for all degrees up to k.
    Sweep,
    /// Sergeev's Z_k for q(n) against 2^(k-1) z_(12..k).
    Sergeev,
    /// Molev element Str (u_1 + X-hat_1)..(u_k + X-hat_k) theta_sigma.
    Molev {
        /// Comma separated rationals u_1..u_k (default all zero).
        #[arg(long)]
        u: Option<String>,
    },
}

/// Validated command configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub perm: Option<String>,
    pub max_degree: usize,
}

impl RunConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<Self> {
        let family = Family::from_str(&g.family)?;
        let m = match family {
            Family::Q | Family::P => g.n,
            _ => g.m,
        };
        Ok(Self {
            family,
            m,
            n: g.n,
            k: g.k,
            perm: g.perm.clone(),
            max_degree: g.max_degree,
        })
    }

    pub fn algebra(&self) -> Result<AlgebraSpec> {
        AlgebraSpec::build(self.family, self.m, self.n)
    }

    /// Degree of the symmetric group the permutation lives in.
    pub fn perm_degree(&self) -> usize {
        match self.family {
            Family::Osp | Family::P => 2 * self.k,
            _ => self.k,
        }
    }

    pub fn permutation(&self) -> Result<Permutation> {
        let text = self.perm.as_deref().unwrap_or("()");
        Permutation::parse(text, self.perm_degree())
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        check_degree(degree, self.max_degree)
    }
}

/// JSON report plus whether every checked property held.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
}

impl Outcome {
    fn new(report: Value, ok: bool) -> Self {
        Self { report, ok }
    }
}

fn perm_json(sigma: &Permutation) -> Value {
    json!({"cycles": sigma.cycle_string(), "one_line": sigma.one_line()})
}

pub fn cmd_invariant(cfg: &RunConfig) -> Result<Outcome> {
    cfg.check_degree(cfg.k)?;
    let alg = cfg.algebra()?;
    let sigma = cfg.permutation()?;
    let t = theta(&alg, &sigma)?;
    let z = eta_prime(&alg, &pi_tensor(&alg, &t)?);
    let central = is_central(&alg, &z);
    Ok(Outcome::new(
        json!({
            "algebra": alg.label(),
            "k": cfg.k,
            "perm": perm_json(&sigma),
            "theta": t.to_json(),
            "z": z.to_json(&alg),
            "z_is_zero": z.is_zero(),
            "central": central,
        }),
        central,
    ))
}

fn hc_report(alg: &AlgebraSpec, element: &PbwElement) -> Result<(Value, bool)> {
    let poly = harish_chandra(alg, element)?;
    let (a, b) = alg.cartan_split();
    let central = is_central(alg, element);
    let mut report = json!({
        "poly": poly.to_display(),
        "polynomial": poly.to_json(),
        "top_degree": poly.top_degree_part().to_display(),
        "central": central,
    });
    let ok = match alg.family() {
        Family::Gl => {
            let s = is_supersymmetric(&poly, a, b);
            report["supersymmetric"] = json!(s);
            s
        }
        _ => {
            let j = is_j_poly(&poly, a, b);
            report["j_polynomial"] = json!(j);
            j
        }
    };
    Ok((report, ok && central))
}

pub fn cmd_hc(cfg: &RunConfig) -> Result<Outcome> {
    if !matches!(cfg.family, Family::Gl | Family::Osp) {
        return Err(Error::Unsupported {
            family: cfg.family.name(),
            what: "HC unsupported for this family".into(),
        });
    }
    cfg.check_degree(cfg.k)?;
    let alg = cfg.algebra()?;
    let (label, element) = match &cfg.perm {
        Some(_) => {
            let sigma = cfg.permutation()?;
            (format!("z_{}", sigma.cycle_string()), z_sigma(&alg, &sigma)?)
        }
        None => {
            let x = if cfg.family == Family::Gl { "E" } else { "F" };
            (format!("Str {x}-hat^{}", cfg.k), str_gelfand(&alg, cfg.k)?)
        }
    };
    let (mut report, ok) = hc_report(&alg, &element)?;
    report["algebra"] = json!(alg.label());
    report["element"] = json!(label);
    Ok(Outcome::new(report, ok))
}

pub fn cmd_keylemma(cfg: &RunConfig) -> Result<Outcome> {
    let k = cfg.k;
    if k == 0 || k > MAX_ENUMERATION_K / 2 {
        return Err(Error::BoundExceeded(format!("keylemma needs 1 <= k <= {}", MAX_ENUMERATION_K / 2)));
    }
    cfg.check_degree(2 * k)?;
    let exhaustive = k <= 3;
    let sigmas: Vec<Permutation> = if exhaustive {
        Permutation::all(2 * k).collect()
    } else {
        partitions(k).iter().map(|t| type_representative(k, t)).collect()
    };
    let rows: Vec<Result<(Value, bool)>> = sigmas
        .par_iter()
        .map(|sigma| {
            let (w, source) = key_lemma_witness(sigma)?;
            let verified = w.verify(sigma);
            let mut row = w.to_json();
            row["sigma"] = perm_json(sigma);
            row["type"] = json!(crate::brauer::type_string(&perm_type(sigma)?));
            row["source"] = json!(source);
            row["verified"] = json!(verified);
            Ok((row, verified && w.sign_product_negative()))
        })
        .collect();
    let mut witnesses = Vec::with_capacity(rows.len());
    let mut all_ok = true;
    for r in rows {
        let (row, ok) = r?;
        all_ok &= ok;
        witnesses.push(row);
    }
    Ok(Outcome::new(
        json!({
            "k": k,
            "mode": if exhaustive { "all" } else { "type_representatives" },
            "count": witnesses.len(),
            "all_sign_products_negative": all_ok,
            "witnesses": witnesses,
        }),
        all_ok,
    ))
}

pub fn cmd_brauer(cfg: &RunConfig) -> Result<Outcome> {
    let k = cfg.k;
    cfg.check_degree(2 * k)?;
    let counts = count_by_type(k)?;
    let mut by_type = serde_json::Map::new();
    for row in &counts.rows {
        by_type.insert(row.type_string.clone(), json!(row.count));
    }
    let mut ok = counts.all_match;
    let mut report = json!({
        "k": k,
        "counts": by_type,
        "total": counts.total,
        "expected_total": counts.expected_total,
        "rows": counts.rows,
        "all_match": counts.all_match,
    });
    if k <= 4 {
        let dc = double_cosets(k)?;
        ok &= dc.all_match;
        report["double_cosets"] = serde_json::to_value(&dc).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    }
    if cfg.perm.is_some() {
        let sigma = Permutation::parse(cfg.perm.as_deref().unwrap_or("()"), 2 * k)?;
        let diagram = diagram_from_perm(&sigma)?;
        let mut closure = closure_type(&diagram).to_json();
        closure["diagram"] = diagram.to_json();
        if k <= 4 {
            let part = partition_a0_a1(&sigma)?;
            let half = crate::brauer::stabilizer_order(&perm_type(&sigma)?) / 2;
            closure["partition"] = part.to_json(half);
        }
        report["perm"] = perm_json(&sigma);
        report["closure"] = closure;
    }
    Ok(Outcome::new(report, ok))
}

/// `eta(pi(theta_r)) = 0` and `z_r` scalar for every coset representative `r` of `S_2k / H`.
pub fn pn_trivial_report(alg: &AlgebraSpec, k: usize) -> Result<Outcome> {
    let reps = coset_reps(k)?;
    let rows: Vec<Result<(Value, bool, bool)>> = reps
        .par_iter()
        .map(|r| {
            let t = pi_tensor(alg, &theta(alg, r)?)?;
            let eta_zero = eta(alg, &t).is_zero();
            let z = eta_prime(alg, &t);
            let scalar = z.is_scalar();
            Ok((
                json!({
                    "sigma": perm_json(r),
                    "pi_theta_nonzero": !t.is_zero(),
                    "eta_zero": eta_zero,
                    "z_scalar": scalar,
                    "z": z.to_json(alg),
                }),
                eta_zero,
                scalar,
            ))
        })
        .collect();
    let mut details = Vec::with_capacity(rows.len());
    let (mut all_zero, mut all_scalar) = (true, true);
    for r in rows {
        let (row, z0, sc) = r?;
        all_zero &= z0;
        all_scalar &= sc;
        details.push(row);
    }
    Ok(Outcome::new(
        json!({
            "algebra": alg.label(),
            "k": k,
            "reps": details.len(),
            "all_zero": all_zero,
            "all_scalar": all_scalar,
            "details": details,
        }),
        all_zero && all_scalar,
    ))
}

pub fn cmd_pn_trivial(cfg: &RunConfig) -> Result<Outcome> {
    cfg.check_degree(2 * cfg.k)?;
    let alg = AlgebraSpec::build(Family::P, cfg.n, cfg.n)?;
    pn_trivial_report(&alg, cfg.k)
}

pub fn cmd_relations(cfg: &RunConfig) -> Result<Outcome> {
    cfg.check_degree(cfg.k)?;
    let alg = cfg.algebra()?;
    let report = check_duality_relations(&alg, cfg.k)?;
    Ok(Outcome::new(report.to_json(), report.all_hold))
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<Outcome> {
    let alg = cfg.algebra()?;
    let mut levels = Vec::new();
    let mut ok = true;
    for d in 1..=cfg.k {
        let (degree, sigmas): (usize, Vec<Permutation>) = match cfg.family {
            Family::Osp | Family::P => (2 * d, coset_reps(d)?),
            _ => (d, Permutation::all(d).collect()),
        };
        cfg.check_degree(degree)?;
        eprintln!("sweep: {} degree {degree}, {} permutations", alg.label(), sigmas.len());
        let rows: Vec<Result<(Value, bool)>> = sigmas
            .par_iter()
            .map(|sigma| {
                let z = z_sigma(&alg, sigma)?;
                let central = is_central(&alg, &z);
                let mut row = json!({"sigma": perm_json(sigma), "central": central, "z_is_zero": z.is_zero()});
                let mut good = central;
                if matches!(alg.family(), Family::Gl | Family::Osp) {
                    let (hc, hc_ok) = hc_report(&alg, &z)?;
                    row["hc"] = hc;
                    good &= hc_ok;
                }
                Ok((row, good))
            })
            .collect();
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            let (row, good) = r?;
            ok &= good;
            out.push(row);
        }
        levels.push(json!({"k": d, "results": out}));
    }
    Ok(Outcome::new(json!({"algebra": alg.label(), "levels": levels, "all_pass": ok}), ok))
}

pub fn cmd_sergeev(cfg: &RunConfig) -> Result<Outcome> {
    if cfg.family != Family::Q {
        return Err(Error::Unsupported {
            family: cfg.family.name(),
            what: "Sergeev elements need --family q".into(),
        });
    }
    cfg.check_degree(cfg.k)?;
    let alg = cfg.algebra()?;
    let zk = sergeev_z(&alg, cfg.k)?;
    let cycle = Permutation::long_cycle(cfg.k);
    let z = z_sigma(&alg, &cycle)?;
    let factor = Scalar::from_int(1i64 << (cfg.k - 1));
    let matches = zk == z.scale(&factor);
    let central = is_central(&alg, &zk);
    let odd = cfg.k % 2 == 1;
    Ok(Outcome::new(
        json!({
            "algebra": alg.label(),
            "k": cfg.k,
            "Z": zk.to_json(&alg),
            "z_cycle": z.to_json(&alg),
            "cycle": cycle.cycle_string(),
            "Z_equals_2^(k-1)_z": matches,
            "Z_central": central,
            "k_odd": odd,
        }),
        !odd || (matches && central),
    ))
}

fn parse_u(text: Option<&str>, k: usize) -> Result<Vec<Scalar>> {
    let Some(text) = text else {
        return Ok(vec![Scalar::zero(); k]);
    };
    text.split(',')
        .map(|s| {
            Rational::from_str(s.trim())
                .map(Scalar::from_rational)
                .map_err(|_| Error::Parse(format!("cannot read rational {s:?}")))
        })
        .collect()
}

pub fn cmd_molev(cfg: &RunConfig, u: Option<&str>) -> Result<Outcome> {
    if !matches!(cfg.family, Family::Gl | Family::Osp) {
        return Err(Error::Unsupported {
            family: cfg.family.name(),
            what: "Molev elements need gl or osp".into(),
        });
    }
    let alg = cfg.algebra()?;
    let sigma = cfg.permutation()?;
    let s = theta(&alg, &sigma)?;
    cfg.check_degree(s.degree())?;
    let u = parse_u(u, s.degree())?;
    let element = molev_element(&alg, &s, &u)?;
    let central = is_central(&alg, &element);
    let u_text: Vec<String> = u.iter().map(|x| x.to_string()).collect();
    Ok(Outcome::new(
        json!({
            "algebra": alg.label(),
            "perm": perm_json(&sigma),
            "u": u_text,
            "element": element.to_json(&alg),
            "central": central,
        }),
        central,
    ))
}

pub fn dispatch(command: &Command, cfg: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Invariant => cmd_invariant(cfg),
        Command::Hc => cmd_hc(cfg),
        Command::Keylemma => cmd_keylemma(cfg),
        Command::Brauer => cmd_brauer(cfg),
        Command::PnTrivial => cmd_pn_trivial(cfg),
        Command::Relations => cmd_relations(cfg),
        Command::Sweep => cmd_sweep(cfg),
        Command::Sergeev => cmd_sergeev(cfg),
        Command::Molev { u } => cmd_molev(cfg, u.as_deref()),
    }
}

/// Exit code for an error: 2 for bad input, 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParameters(_)
        | Error::Parse(_)
        | Error::Unsupported { .. }
        | Error::DegreeCapExceeded { .. }
        | Error::BoundExceeded(_)
        | Error::InvalidIndex(_)
        | Error::PositionOutOfRange { .. }
        | Error::NotInvariant => 2,
        _ => 1,
    }
}

/// Canonical rendering: sorted keys, two-space indentation, trailing newline.
pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).unwrap_or_else(|_| "null".into());
    s.push('\n');
    s
}

/// A run that produced no report: exit code and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

/// Parses arguments (the first item is the program name) and runs the command.
pub fn execute<I, T>(args: I) -> std::result::Result<(Cli, Outcome), Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Failure {
        code: if e.use_stderr() { 2 } else { 0 },
        message: e.render().to_string(),
    })?;
    if let Some(j) = cli.global.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let outcome = RunConfig::from_args(&cli.global)
        .and_then(|cfg| dispatch(&cli.command, &cfg))
        .map_err(|e| Failure {
            code: exit_code(&e),
            message: format!("error: {e}"),
        })?;
    Ok((cli, outcome))
}

/// Parses arguments, runs the command, writes the report, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (cli, outcome) = match execute(args) {
        Ok(v) => v,
        Err(f) => {
            if f.code == 0 {
                print!("{}", f.message);
            } else {
                eprint!("{}", f.message);
                if !f.message.ends_with('\n') {
                    eprintln!();
                }
            }
            return f.code;
        }
    };
    let text = render(&outcome.report);
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return 1;
    }
    if outcome.ok {
        0
    } else {
        1
    }
}
