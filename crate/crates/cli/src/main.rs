use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use flagcurv::campaign::{self, Campaign, Config};
use flagcurv::chevalley::ChevalleyTable;
use flagcurv::curvature::Hermitian;
use flagcurv::flagspace::{parse_flag, AlmostComplexStructure, FlagManifold, InvariantMetric};
use flagcurv::positivity::{self, build_cpn_matrix, check_psd_rational, classify, ClassifyOptions, PsdMode};
use flagcurv::rational::{fmt_q, parse_q};
use flagcurv::rootsys::{parse_root, LieType, RootSystem};
use flagcurv::Error;

/// `println!` that exits quietly when the reader closes the pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

const NUMBERING: &str = "Simple roots use Bourbaki numbering: A_n chain 1..n; B_n and C_n with node n the short (B) or long (C) end; \
D_n with nodes n-1, n forking; E_n as 1-3-4-5-...-n with 2 on node 4; F4 with 1,2 long and 3,4 short; G2 with 1 short and 2 long. \
Flags are written \"<type> k=<painted nodes>\", e.g. \"C4 k=2,3,4\"; the painted nodes span Π_K.";

#[derive(Parser)]
#[command(name = "flagcurv", version, about = "Curvature positivity of invariant almost-Hermitian metrics on flag manifolds", after_help = NUMBERING)]
struct Cli {
    /// key = value settings file (bounds, tolerance, seed, samples, output_dir)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system, marks and Killing norms of a simple type
    Roots {
        /// Type such as A3, C4, G2, F4
        lie_type: String,
        /// Dump the structure constants as CSV
        #[arg(long)]
        csv: bool,
    },
    /// Isotropy summands of a flag manifold
    Flag { flag: String },
    /// Invariant almost-complex structures of a flag
    Acs {
        flag: String,
        /// Show one structure, as a sign string like "+-"
        #[arg(long)]
        acs: Option<String>,
        /// Test whether two roots form a Lemma pair for --acs
        #[arg(long, num_args = 2, value_names = ["ALPHA", "GAMMA"], allow_hyphen_values = true)]
        pair: Option<Vec<String>>,
    },
    /// Kähler, quasi-Kähler or almost-Kähler metric cones
    Metrics {
        kind: ConeKind,
        flag: String,
        #[arg(long, allow_hyphen_values = true)]
        acs: String,
    },
    /// Positivity classification of one metric
    Check {
        flag: String,
        #[arg(long, allow_hyphen_values = true)]
        acs: String,
        /// Summand weights, e.g. "1,3/2"
        #[arg(long)]
        metric: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Use the floating-point eigensolver even for rational matrices
        #[arg(long)]
        float: bool,
        /// Dump the curvature tensor as CSV
        #[arg(long)]
        csv: bool,
    },
    /// The CP^{2n-1} diagonal-pair matrix across values of t
    Cpn {
        #[arg(long)]
        n: usize,
        /// One or more values, e.g. "--t 1/2,1,2"
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<String>,
        /// Print the matrices as CSV
        #[arg(long)]
        csv: bool,
    },
    /// Run a verification campaign and write its report
    Verify {
        campaign: String,
        #[arg(long)]
        max_rank: Option<usize>,
        /// Report directory; defaults to output_dir from the config
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConeKind {
    Kahler,
    QuasiKahler,
    AlmostKahler,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = hint(&e) {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(2)
        }
    }
}

fn hint(e: &Error) -> Option<&'static str> {
    match e {
        Error::InvalidLieType(_) => Some("types are A1.., B2.., C2.., D3.., E6-E8, F4, G2 (e.g. `flagcurv roots G2`)"),
        Error::Parse(_) | Error::IndexOutOfRange { .. } => {
            Some("flags look like \"C4 k=2,3,4\", structures like \"+-\" (first sign +), metrics like \"1,3/2\"")
        }
        Error::SummandCount { .. } => Some("give one sign or weight per summand; `flagcurv flag <flag>` lists them"),
        Error::NonCanonicalAcs => Some("structures are identified with their conjugates; write the first sign as +"),
        Error::BoundExceeded(_) => Some("pass --config with a larger limit.<campaign>"),
        _ => None,
    }
}

fn load_config(path: Option<&Path>) -> Result<Config, Error> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Error::Parse(format!("cannot read config {}: {e}", p.display())))?;
            Config::parse(&text)
        }
    }
}

fn print_json(v: &serde_json::Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let cfg = load_config(cli.config.as_deref())?;
    match cli.command {
        Command::Roots { lie_type, csv } => cmd_roots(&lie_type, csv, cli.json)?,
        Command::Flag { flag } => cmd_flag(&flag, cli.json)?,
        Command::Acs { flag, acs, pair } => cmd_acs(&flag, acs.as_deref(), pair.as_deref(), cli.json)?,
        Command::Metrics { kind, flag, acs } => cmd_metrics(kind, &flag, &acs, cli.json)?,
        Command::Check { flag, acs, metric, samples, seed, float, csv } => {
            let opts = ClassifyOptions {
                samples: samples.unwrap_or(cfg.samples),
                seed: seed.unwrap_or(cfg.seed),
                psd_mode: if float { PsdMode::Float } else { PsdMode::ExactIfRational },
            };
            cmd_check(&flag, &acs, &metric, &opts, csv, cli.json)?
        }
        Command::Cpn { n, t, csv } => cmd_cpn(n, &t, csv, cli.json)?,
        Command::Verify { campaign, max_rank, out } => return cmd_verify(&campaign, max_rank, out, &cfg, cli.json),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_roots(text: &str, csv: bool, as_json: bool) -> Result<(), Error> {
    let t: LieType = text.parse()?;
    let rs = Arc::new(RootSystem::build(t));
    if csv {
        print!("{}", ChevalleyTable::build(Arc::clone(&rs)).to_csv());
        return Ok(());
    }
    let roots: Vec<serde_json::Value> = (0..rs.num_positive())
        .map(|i| json!({"root": rs.root(i).0, "height": rs.root(i).height(), "killing_norm": fmt_q(&rs.killing(i, i)), "label": rs.label(i)}))
        .collect();
    if as_json {
        print_json(&json!({
            "type": t.to_string(),
            "rank": rs.rank(),
            "cartan_matrix": rs.cartan_matrix(),
            "marks": rs.marks(),
            "highest_root": rs.highest_root().0,
            "dual_coxeter_number": rs.dual_coxeter_number(),
            "killing_scale": fmt_q(&rs.killing_scale()),
            "num_roots": rs.len(),
            "positive_roots": roots,
        }));
        return Ok(());
    }
    out!("{t}: rank {}, {} roots", rs.rank(), rs.len());
    out!("marks {:?}, highest root {}", rs.marks(), rs.highest_root());
    out!("dual Coxeter number {}, (α,β)_B = {} (α,β) with long roots of length² 2", rs.dual_coxeter_number(), fmt_q(&rs.killing_scale()));
    out!("Cartan matrix:");
    for row in rs.cartan_matrix() {
        out!("  {:?}", row);
    }
    out!("positive roots (negatives follow):");
    for i in 0..rs.num_positive() {
        out!("  {:<16} height {:<3} (α,α)_B = {:<6} {}", rs.root(i).to_string(), rs.root(i).height(), fmt_q(&rs.killing(i, i)), rs.label(i));
    }
    Ok(())
}

fn root_list(fm: &FlagManifold, roots: &[usize]) -> Vec<String> {
    roots.iter().map(|&i| fm.root_system().root(i).to_string()).collect()
}

fn cmd_flag(text: &str, as_json: bool) -> Result<(), Error> {
    let fm = parse_flag(text)?;
    if as_json {
        let summands: Vec<Vec<String>> = fm.summands().iter().map(|s| root_list(&fm, s)).collect();
        print_json(&json!({
            "flag": fm.label(),
            "painted": fm.painted(),
            "unpainted": fm.unpainted(),
            "summands": summands,
            "real_dimension": fm.real_dimension(),
            "structures": fm.num_acs(),
            "lambda_one_kahler": fm.lambda_one_is_kahler(),
        }));
        return Ok(());
    }
    out!("{}: painted {:?}, unpainted {:?}", fm.label(), fm.painted(), fm.unpainted());
    out!("{} summands, real dimension {}, {} almost-complex structures", fm.num_summands(), fm.real_dimension(), fm.num_acs());
    for (i, s) in fm.summands().iter().enumerate() {
        out!("  m{}: {}", i + 1, root_list(&fm, s).join(" "));
    }
    out!("λ≡1 Kähler: {}", if fm.lambda_one_is_kahler() { "yes" } else { "no" });
    Ok(())
}

fn cmd_acs(text: &str, acs: Option<&str>, pair: Option<&[String]>, as_json: bool) -> Result<(), Error> {
    let fm = parse_flag(text)?;
    let rs = fm.root_system();
    let Some(acs) = acs else {
        if pair.is_some() {
            return Err(Error::Parse("--pair needs --acs".into()));
        }
        let rows: Vec<(AlmostComplexStructure, bool, Option<(usize, usize)>)> =
            fm.enumerate_acs().into_iter().map(|j| (j.clone(), fm.is_integrable(&j), fm.lemma_pair(&j))).collect();
        if as_json {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(j, i, p)| json!({"acs": j.to_string(), "integrable": i, "lemma_pair": p.map(|(a, g)| [rs.root(a).0.clone(), rs.root(g).0.clone()])}))
                .collect();
            print_json(&json!({"flag": fm.label(), "count": rows.len(), "structures": v}));
        } else {
            out!("{}: {} structures", fm.label(), rows.len());
            for (j, i, p) in rows {
                let pair = p.map(|(a, g)| format!("Lemma pair ({}, {})", rs.root(a), rs.root(g))).unwrap_or_default();
                out!("  {j:<8} {:<15} {pair}", if i { "integrable" } else { "non-integrable" });
            }
        }
        return Ok(());
    };
    let j: AlmostComplexStructure = acs.parse()?;
    fm.check_acs(&j)?;
    let plus = fm.rm_plus(&j);
    let lemma = fm.lemma_pair(&j);
    let pair_result = match pair {
        Some([a, g]) => {
            let find = |s: &str| -> Result<usize, Error> {
                let r = parse_root(s)?;
                rs.index_of(&r).ok_or_else(|| Error::Parse(format!("{r} is not a root of {}", rs.lie_type())))
            };
            let (a, g) = (find(a)?, find(g)?);
            Some((a, g, fm.is_lemma_pair(&j, a, g)))
        }
        _ => None,
    };
    if as_json {
        print_json(&json!({
            "flag": fm.label(),
            "acs": j.to_string(),
            "integrable": fm.is_integrable(&j),
            "rm_plus": root_list(&fm, &plus),
            "lemma_pair": lemma.map(|(a, g)| [rs.root(a).0.clone(), rs.root(g).0.clone()]),
            "pair": pair_result.map(|(a, g, ok)| json!({"alpha": rs.root(a).0, "gamma": rs.root(g).0, "lemma_pair": ok})),
        }));
        return Ok(());
    }
    out!("{} {j}: {}", fm.label(), if fm.is_integrable(&j) { "integrable" } else { "non-integrable" });
    out!("R_M^+: {}", root_list(&fm, &plus).join(" "));
    match lemma {
        Some((a, g)) => out!("Lemma pair: ({}, {})", rs.root(a), rs.root(g)),
        None => out!("Lemma pair: none"),
    }
    if let Some((a, g, ok)) = pair_result {
        out!("({}, {}) is {}a Lemma pair", rs.root(a), rs.root(g), if ok { "" } else { "not " });
    }
    Ok(())
}

fn cmd_metrics(kind: ConeKind, text: &str, acs: &str, as_json: bool) -> Result<(), Error> {
    let fm = parse_flag(text)?;
    let j: AlmostComplexStructure = acs.parse()?;
    fm.check_acs(&j)?;
    let (name, cone) = match kind {
        ConeKind::Kahler => ("kahler", fm.kahler_metrics(&j)),
        ConeKind::QuasiKahler => ("quasi-kahler", fm.quasi_kahler_metrics(&j)),
        ConeKind::AlmostKahler => ("almost-kahler", fm.almost_kahler_metrics(&j)),
    };
    if as_json {
        print_json(&json!({"flag": fm.label(), "acs": j.to_string(), "kind": name, "cone": cone, "description": cone.describe()}));
    } else {
        out!("{} {j} {name}: {}", fm.label(), cone.describe());
        if let Some(p) = &cone.interior_point {
            out!("  e.g. λ = ({})", p.iter().map(fmt_q).collect::<Vec<_>>().join(","));
        }
    }
    Ok(())
}

fn cmd_check(text: &str, acs: &str, metric: &str, opts: &ClassifyOptions, csv: bool, as_json: bool) -> Result<(), Error> {
    let fm = parse_flag(text)?;
    let j: AlmostComplexStructure = acs.parse()?;
    let lam: InvariantMetric = metric.parse()?;
    let ct = ChevalleyTable::build(fm.root_system_arc());
    if csv {
        let h = Hermitian::new(&ct, &fm, &j, &lam)?;
        print!("{}", h.tensor().to_csv(&ct));
        return Ok(());
    }
    let v = classify(&ct, &fm, &j, &lam, opts)?;
    if as_json {
        out!("{}", v.to_json());
        return Ok(());
    }
    out!("{} {} λ=({}): {}", v.flag, v.acs, v.metric, v.verdict);
    out!("  integrable {}, Kähler {}, quasi-Kähler {}", v.integrable, v.kahler, v.quasi_kahler);
    if let Some(e) = v.min_eig {
        out!("  dual-Nakano min eigenvalue {e:.6e} ({})", if v.exactness.dual_nakano { "exact PSD test" } else { "float" });
    }
    if let Some(e) = v.nakano_min_eig {
        out!("  Nakano min eigenvalue {e:.6e} ({})", if v.exactness.nakano { "exact PSD test" } else { "float" });
    }
    match &v.witness {
        Some(positivity::Witness::BasisPair { alpha, gamma, value, .. }) => {
            out!("  witness: R(X_α,X_-α,X_γ,X_-γ) = {value} at α={alpha:?}, γ={gamma:?}")
        }
        Some(positivity::Witness::Directions { value, .. }) => out!("  witness: sampled directions with value {value:.6e}"),
        None => {}
    }
    for c in &v.certificates {
        out!("  Lemma certificate: α={:?}, γ={:?}", c.alpha, c.gamma);
    }
    out!("  samples {}, seed {}", v.samples, v.seed);
    Ok(())
}

fn cmd_cpn(n: usize, ts: &[String], csv: bool, as_json: bool) -> Result<(), Error> {
    let mut out = Vec::new();
    for t in ts {
        let t = parse_q(t)?;
        let m = build_cpn_matrix(n, t)?;
        let r = check_psd_rational(&m.entries);
        let class = if r.is_pd {
            "positive definite"
        } else if r.is_psd {
            "positive semidefinite, singular"
        } else {
            "not positive semidefinite"
        };
        if csv {
            out!("# n={n} t={}", fmt_q(&t));
            for row in &m.entries {
                out!("{}", row.iter().map(fmt_q).collect::<Vec<_>>().join(","));
            }
        } else if !as_json {
            out!("n={n} t={}: {class}, min eigenvalue {:.6e}", fmt_q(&t), r.min_eig);
        }
        out.push(json!({"n": n, "t": fmt_q(&t), "psd": r.is_psd, "pd": r.is_pd, "min_eig": r.min_eig, "witness": r.witness}));
    }
    if as_json {
        print_json(&json!(out));
    }
    Ok(())
}

fn cmd_verify(name: &str, max_rank: Option<usize>, out: Option<PathBuf>, cfg: &Config, as_json: bool) -> Result<ExitCode, Error> {
    let c: Campaign = name.parse()?;
    let report = campaign::run(c, max_rank, cfg)?;
    let dir = out.unwrap_or_else(|| cfg.output_dir.clone()).join(c.as_str());
    let write = |file: &str, body: &str| -> Result<(), Error> {
        fs::create_dir_all(&dir).and_then(|_| fs::write(dir.join(file), body)).map_err(|e| Error::Parse(format!("cannot write report to {}: {e}", dir.display())))
    };
    let text = report.render_text();
    let js = report.to_json();
    write("report.txt", &text)?;
    write("report.json", &js)?;
    if as_json {
        out!("{js}");
    } else {
        for line in report.status_lines() {
            out!("{line}");
        }
        for check in report.checks.iter().filter(|c| !c.passed) {
            for x in &check.counterexamples {
                out!("  counterexample: {}: {}", x.case, x.reason);
                out!("  reproduce: {}", x.reproduce);
            }
        }
        for n in &report.notes {
            out!("note: {n}");
        }
        out!("{}: {} (report in {})", c, if report.passed { "PASS" } else { "FAIL" }, dir.display());
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
