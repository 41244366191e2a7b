//! Command-line front end: verify shellability properties of admissible
//! posets, enumerate them, inspect sigma-sets, and export DOT/JSON
//! artifacts.
//!
//! Exit codes: 0 all checks pass, 1 budget or resource errors, 2 theory
//! violations or failed checks, 64 configuration errors.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use admshell::adm::{build_adm, AdmPoset};
use admshell::affine::{acute_presentations, length, notation, parse_elt};
use admshell::bits::Bits;
use admshell::export;
use admshell::fixtures::{fig3, fig4, Figure};
use admshell::poset::Poset;
use admshell::qbg::build_qbg;
use admshell::report::{RunConfig, VerificationReport};
use admshell::verify::{
    label_adm, verify_coatom_ordering, verify_dual_el, verify_ncm, CheckOutcome, Scope,
    DEFAULT_BUDGET,
};
use admshell::{AdmError, CartanSpec, RootDatum, WeylElt};

#[derive(Parser)]
#[command(name = "admshell", version, about = "Admissible-set shellability toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker thread cap (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run shellability checks and write verification reports.
    Verify(VerifyArgs),
    /// Export DOT/JSON artifacts.
    Export(ExportArgs),
    /// List the elements of Adm(mu) with their lengths.
    Enumerate(DatumArgs),
    /// Print Sigma_w, its W^J projection, and the extremal elements.
    Sigma(SigmaArgs),
}

#[derive(Args)]
struct DatumArgs {
    /// Cartan family, e.g. A, B, C, D, E, F, G.
    #[arg(long = "type")]
    family: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Lattice preset: sc, ad, or gl.
    #[arg(long, default_value = "sc")]
    lattice: String,
    /// Full datum as JSON, overriding --type/--rank/--lattice.
    #[arg(long)]
    datum: Option<String>,
    /// Coweight in the lattice basis, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Replace mu by its dominant conjugate.
    #[arg(long)]
    dominate: bool,
    /// Restrict the poset to Adm(mu) below v (a reduced word like s1s2).
    #[arg(long)]
    v: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    datum: DatumArgs,
    /// Checks to run: dual_el, coatom, ncm, or all.
    #[arg(long, default_value = "all")]
    check: String,
    /// Interval scope for dual_el: all-intervals or top-intervals.
    #[arg(long, default_value = "all-intervals")]
    scope: String,
    /// Override N for the Cohen-Macaulay check.
    #[arg(long)]
    n: Option<i64>,
    /// Verify a bundled fixture (fig3 or fig4) instead of a datum.
    #[arg(long)]
    fixture: Option<String>,
    /// Directory for report JSON files (default: summaries to stdout only).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExportArgs {
    /// Artifact: qbg, hasse, labels, wt-table, or poset.
    what: String,
    #[command(flatten)]
    datum: DatumArgs,
    /// Export a bundled fixture's Hasse diagram (fig3 or fig4).
    #[arg(long)]
    fixture: Option<String>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SigmaArgs {
    #[command(flatten)]
    datum: DatumArgs,
    /// Element in text notation, e.g. t[1,0]*s1s2.
    #[arg(long)]
    w: String,
}

fn exit_code_of(e: &AdmError) -> ExitCode {
    match e {
        AdmError::UnknownType(_)
        | AdmError::Parse(_)
        | AdmError::InvalidLattice(_)
        | AdmError::NotDominant
        | AdmError::NotSpherical => ExitCode::from(64),
        AdmError::SearchBudgetExceeded
        | AdmError::CapExceeded(_)
        | AdmError::GroupTooLarge
        | AdmError::Io(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn budget() -> u64 {
    std::env::var("ADMSHELL_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

struct Setup {
    rd: RootDatum,
    mu: Vec<i64>,
    v: Option<WeylElt>,
    id: String,
}

fn parse_setup(args: &DatumArgs) -> Result<Setup, AdmError> {
    let spec = if let Some(json) = &args.datum {
        CartanSpec::from_json(json)?
    } else {
        let family = args
            .family
            .as_deref()
            .ok_or_else(|| AdmError::Parse("--type or --datum is required".into()))?
            .parse()?;
        let rank = args
            .rank
            .ok_or_else(|| AdmError::Parse("--rank is required".into()))?;
        let lattice = serde_json::from_value(serde_json::json!(args.lattice))
            .map_err(|_| AdmError::Parse(format!("unknown lattice {:?}", args.lattice)))?;
        CartanSpec::new(family, rank, lattice)
    };
    let rd = admshell::build_root_datum(spec)?;
    let mu_text = args
        .mu
        .as_deref()
        .ok_or_else(|| AdmError::Parse("--mu is required".into()))?;
    let mut mu: Vec<i64> = mu_text
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| AdmError::Parse(format!("bad coweight entry {x:?}")))
        })
        .collect::<Result<_, _>>()?;
    if mu.len() != rd.lattice_rank {
        return Err(AdmError::Parse(format!(
            "--mu needs {} entries for this lattice",
            rd.lattice_rank
        )));
    }
    if args.dominate {
        'outer: loop {
            for j in 0..rd.rank {
                if rd.pair_simple(&mu, j) < 0 {
                    mu = rd.weyl.act_lattice(&rd, rd.weyl.simple[j], &mu);
                    continue 'outer;
                }
            }
            break;
        }
    }
    let v = args
        .v
        .as_deref()
        .map(|s| parse_elt(&rd, s).map(|e| e.z))
        .transpose()?;
    let mut id = format!(
        "{}-mu{}",
        rd.spec
            .components
            .iter()
            .map(|(f, r)| format!("{f}{r}"))
            .collect::<Vec<_>>()
            .join("x"),
        mu.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    );
    if let Some(v) = v {
        id += &format!("-v{}", rd.weyl.name(v));
    }
    Ok(Setup { rd, mu, v, id })
}

fn write_artifact(out: Option<&std::path::Path>, text: &str) -> Result<(), AdmError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// The coatom ordering induced by the eta labels (the minimal coset
/// representative enumeration order).
fn induced_ordering(adm: &AdmPoset) -> Vec<usize> {
    adm.coatoms.iter().map(|&(_, ci)| ci).collect()
}

fn poset_minus_top(adm: &AdmPoset) -> Bits {
    let mut set = Bits::new(adm.poset.n);
    for i in 0..adm.poset.n {
        set.set(i);
    }
    set.clear(adm.hat1);
    set
}

fn fixture_by_name(name: &str) -> Result<Figure, AdmError> {
    match name {
        "fig3" => Ok(fig3()),
        "fig4" => Ok(fig4()),
        other => Err(AdmError::Parse(format!("unknown fixture {other:?}"))),
    }
}

fn fixture_poset(rd: &RootDatum, fig: &Figure) -> Result<(Poset, Vec<String>), AdmError> {
    let elts: Vec<_> = fig
        .elements
        .iter()
        .map(|s| admshell::affine::parse_affine_word(rd, s))
        .collect::<Result<_, _>>()?;
    let rank: Vec<u32> = elts.iter().map(|w| length(rd, w) as u32).collect();
    let covers: Vec<(usize, usize)> = fig.covers.clone();
    Ok((
        Poset::new(fig.elements.len(), &covers, rank),
        fig.elements.clone(),
    ))
}

fn emit_report(
    args: &VerifyArgs,
    id: &str,
    check: &str,
    scope: Scope,
    outcome: CheckOutcome,
    started: Instant,
) -> Result<bool, AdmError> {
    let pass = outcome.pass;
    let report = VerificationReport::new(
        id.to_string(),
        check,
        scope,
        outcome,
        started.elapsed().as_millis() as u64,
    );
    println!("{}", report.summary());
    for v in report.violations.iter().take(5) {
        println!("  violation: {v}");
    }
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{id}-{check}.json"));
        // timing is zeroed in files so identical runs are byte-identical
        std::fs::write(&path, report.normalized().to_json())?;
    }
    Ok(pass)
}

fn cmd_verify_fixture(args: &VerifyArgs, name: &str) -> Result<bool, AdmError> {
    let fig = fixture_by_name(name)?;
    let rd = fig.root_datum()?;
    let started = Instant::now();
    let cs = fig.subsets(&rd)?;
    fig.check(&rd, &cs)?;
    println!(
        "PASS reproduction [{}]: {} elements, {} covers, coxeter_type = {}",
        fig.name,
        fig.elements.len(),
        fig.covers.len(),
        cs.coxeter_type
    );
    let mut all = true;
    if args.check == "ncm" || args.check == "all" {
        let (poset, _) = fixture_poset(&rd, &fig)?;
        let mut set = Bits::new(poset.n);
        for i in 0..poset.n {
            set.set(i);
        }
        let n = args.n.unwrap_or_else(|| {
            *poset.rank.iter().max().unwrap() as i64 - *poset.rank.iter().min().unwrap() as i64
        });
        let outcome = verify_ncm(&poset, &set, n, budget())?;
        all &= emit_report(args, name, "ncm", Scope::AllIntervals, outcome, started)?;
    }
    Ok(all)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, AdmError> {
    if let Some(name) = &args.fixture {
        return cmd_verify_fixture(args, name);
    }
    let setup = parse_setup(&args.datum)?;
    let scope = match args.scope.as_str() {
        "all-intervals" | "all" => Scope::AllIntervals,
        "top-intervals" | "top" => Scope::TopIntervals,
        other => return Err(AdmError::Parse(format!("unknown scope {other:?}"))),
    };
    let checks: Vec<&str> = match args.check.as_str() {
        "all" => vec!["dual_el", "coatom", "ncm"],
        list => list.split(',').collect(),
    };
    // echoed so runs are reproducible from the log alone
    let config = RunConfig {
        datum: setup.rd.spec.clone(),
        mu: setup.mu.clone(),
        v: setup.v.map(|v| setup.rd.weyl.name(v)),
        checks: checks.iter().map(|s| s.to_string()).collect(),
        scope: scope.name().to_string(),
        budget: budget(),
        seed: args.seed,
    };
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{}-config.json", setup.id)), config.to_json())?;
    }
    let started = Instant::now();
    let adm = build_adm(&setup.rd, setup.mu.clone(), setup.v)?;
    println!(
        "poset {}: {} elements plus 1^, length {}",
        setup.id,
        adm.size(),
        adm.mu_two_rho
    );
    let mut all = true;
    for check in checks {
        let outcome = match check {
            "dual_el" => {
                let lp = label_adm(&setup.rd, &adm)?;
                verify_dual_el(&lp, scope)
            }
            "coatom" => verify_coatom_ordering(&adm.poset, &induced_ordering(&adm), budget())?,
            "ncm" => {
                let n = args.n.unwrap_or(adm.mu_two_rho);
                verify_ncm(&adm.poset, &poset_minus_top(&adm), n, budget())?
            }
            other => return Err(AdmError::Parse(format!("unknown check {other:?}"))),
        };
        all &= emit_report(args, &setup.id, check, scope, outcome, started)?;
    }
    Ok(all)
}

fn cmd_export(args: &ExportArgs) -> Result<(), AdmError> {
    if let Some(name) = &args.fixture {
        let fig = fixture_by_name(name)?;
        let rd = fig.root_datum()?;
        let (poset, names) = fixture_poset(&rd, &fig)?;
        let covers: Vec<(usize, usize)> = poset
            .covers_up
            .iter()
            .enumerate()
            .flat_map(|(lo, ups)| ups.iter().map(move |&hi| (lo, hi)))
            .collect();
        return write_artifact(args.out.as_deref(), &export::hasse_dot(&names, &covers));
    }
    let setup = parse_setup(&args.datum)?;
    let text = match args.what.as_str() {
        "qbg" => export::qbg_dot(&setup.rd, &build_qbg(&setup.rd)),
        "wt-table" => export::wt_table_json(&setup.rd, &build_qbg(&setup.rd)),
        "hasse" => {
            let adm = build_adm(&setup.rd, setup.mu.clone(), setup.v)?;
            export::adm_hasse_dot(&setup.rd, &adm)
        }
        "poset" => {
            let adm = build_adm(&setup.rd, setup.mu.clone(), setup.v)?;
            export::adm_poset_json(&setup.rd, &adm)
        }
        "labels" => {
            let adm = build_adm(&setup.rd, setup.mu.clone(), setup.v)?;
            export::adm_labels_json(&setup.rd, &adm)?
        }
        other => return Err(AdmError::Parse(format!("unknown artifact {other:?}"))),
    };
    write_artifact(args.out.as_deref(), &text)
}

fn cmd_enumerate(args: &DatumArgs) -> Result<(), AdmError> {
    let setup = parse_setup(args)?;
    let adm = build_adm(&setup.rd, setup.mu.clone(), setup.v)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for w in &adm.elements {
        writeln!(out, "{}\t{}", length(&setup.rd, w), notation(&setup.rd, w))?;
    }
    Ok(())
}

fn cmd_sigma(args: &SigmaArgs) -> Result<(), AdmError> {
    let setup = parse_setup(&args.datum)?;
    let adm = build_adm(&setup.rd, setup.mu.clone(), setup.v)?;
    let w = parse_elt(&setup.rd, &args.w)?;
    let idx = adm.position(&w).ok_or(AdmError::NotInAdm)?;
    let pres = acute_presentations(&setup.rd, &w)
        .into_iter()
        .next()
        .ok_or_else(|| AdmError::NoWitness("no acute presentation".into()))?;
    let sd = adm.sigma_data(&setup.rd, idx, &pres)?;
    let weyl = &setup.rd.weyl;
    let names = |v: &[WeylElt]| v.iter().map(|&z| weyl.name(z)).collect::<Vec<_>>().join(", ");
    println!("w = {}", notation(&setup.rd, &w));
    println!("Sigma_w   = {{{}}}", names(&sd.sigma));
    println!("Sigma_w^J = {{{}}}", names(&sd.sigma_j));
    println!("z_min = {}", weyl.name(sd.z_min));
    println!("a_min = {}", weyl.name(sd.a_min));
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, AdmError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| AdmError::Parse(e.to_string()))?;
    }
    match &cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Export(a) => cmd_export(a).map(|()| true),
        Cmd::Enumerate(a) => cmd_enumerate(a).map(|()| true),
        Cmd::Sigma(a) => cmd_sigma(a).map(|()| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_of(&e)
        }
    }
}
