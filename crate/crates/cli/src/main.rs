//! `lpm` — lattice path matroid toolkit frontend.
//!
//! Machine-readable JSON goes to stdout, human summaries to stderr. Exit
//! codes: 0 success, 1 verification/check failure, 2 usage or input error,
//! 3 desk-scale limit exceeded. Every error path prints a single
//! `error: <code>: <message>` line to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigUint, RandBigInt};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use lpm::ff::{FieldCtx, FieldElement};
use lpm::json::{element_to_doc, ElementDoc, PresentationDoc, RepresentationDoc, ShareFileDoc};
use lpm::matroid::{GroundPartition, IntervalPresentation};
use lpm::repr::{
    build_extension_rep, build_m_uniform_rep, build_prime_rep, verify_representation,
    Representation, VerifyMode,
};
use lpm::sss::SharingScheme;
use lpm::sweep::{run_all, SweepConfig};

#[derive(Parser)]
#[command(
    name = "lpm",
    version,
    about = "Construct, verify and use finite-field representations of lattice path matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a presentation: rank, basis count, nestedness, clonal classes.
    Info {
        /// Presentation JSON: a file path, or inline starting with '{'.
        input: String,
    },
    /// Build a representation of the presented matroid.
    Represent {
        input: String,
        /// Construction to run.
        #[arg(long, value_enum)]
        mode: Construction,
        /// Base prime for the extension construction.
        #[arg(long)]
        p: Option<String>,
        /// Base prime for the part-uniform construction.
        #[arg(long)]
        q: Option<String>,
        /// Write the representation here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a representation against the presented matroid.
    Verify {
        input: String,
        /// Representation JSON: a file path, or inline starting with '{'.
        #[arg(long)]
        rep: String,
        #[arg(long, value_enum, default_value_t = CheckMode::Bases)]
        mode: CheckMode,
    },
    /// Report minimum-weight matchings of every basis under the standard weights.
    IsolatingCheck { input: String },
    /// Minimal qualified sets of the matroid port at an element.
    Port {
        input: String,
        #[arg(long, default_value_t = 1)]
        po: usize,
    },
    /// Deal shares of a secret from a representation.
    Share {
        /// Representation JSON: a file path, or inline starting with '{'.
        input: String,
        #[arg(long, default_value_t = 1)]
        po: usize,
        /// Secret: decimal scalar, or JSON coefficient array for extensions.
        #[arg(long)]
        secret: String,
        /// Free coefficients as a JSON array; overrides --seed.
        #[arg(long)]
        free: Option<String>,
        /// Seed for deterministic derivation of free coefficients.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recover the secret from a share file.
    Reconstruct {
        /// Share file JSON: a file path, or inline starting with '{'.
        input: String,
        /// Restrict to these players (comma separated), default all.
        #[arg(long)]
        players: Option<String>,
    },
    /// Run the full acceptance sweep and print a pass/fail table.
    Sweep {
        /// Largest ground-set size to enumerate.
        #[arg(long = "limit-n", default_value_t = 6)]
        limit_n: usize,
        /// Worker threads for the per-instance checks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Ext,
    Prime,
    Muniform,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Bases,
    #[value(name = "all-subsets")]
    AllSubsets,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}: {e}", e.code());
            match e {
                lpm::Error::ScaleLimit { .. } | lpm::Error::PrimalityRange { .. } => {
                    ExitCode::from(3)
                }
                lpm::Error::Unqualified => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Reads a path, or treats the argument as inline JSON when it starts
/// with '{'.
fn read_input(arg: &str) -> Result<String, lpm::Error> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg)
        .map_err(|e| lpm::Error::InvalidInput(format!("cannot read {arg:?}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, lpm::Error> {
    serde_json::from_str(text).map_err(|e| lpm::Error::InvalidInput(format!("bad JSON: {e}")))
}

fn load_presentation(arg: &str) -> Result<(PresentationDoc, IntervalPresentation), lpm::Error> {
    let doc: PresentationDoc = parse_json(&read_input(arg)?)?;
    let p = doc.to_presentation()?;
    Ok((doc, p))
}

fn load_representation(arg: &str) -> Result<Representation, lpm::Error> {
    let doc: RepresentationDoc = parse_json(&read_input(arg)?)?;
    doc.to_representation()
}

fn parse_biguint(s: &str, what: &str) -> Result<BigUint, lpm::Error> {
    s.parse()
        .map_err(|_| lpm::Error::InvalidInput(format!("{what} is not a decimal integer: {s:?}")))
}

/// Accepts a decimal scalar or a JSON array of decimal coefficients.
fn parse_element(ctx: &FieldCtx, s: &str) -> Result<FieldElement, lpm::Error> {
    let doc: ElementDoc = if s.trim_start().starts_with('[') {
        parse_json(s)?
    } else {
        ElementDoc::Scalar(s.to_string())
    };
    lpm::json::doc_to_element(ctx, &doc)
}

fn emit(output: Option<&PathBuf>, line: &str) -> Result<(), lpm::Error> {
    match output {
        Some(path) => fs::write(path, format!("{line}\n"))
            .map_err(|e| lpm::Error::InvalidInput(format!("cannot write {path:?}: {e}"))),
        None => {
            println!("{line}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, lpm::Error> {
    match command {
        Command::Info { input } => cmd_info(&input),
        Command::Represent {
            input,
            mode,
            p,
            q,
            output,
        } => cmd_represent(&input, mode, p.as_deref(), q.as_deref(), output.as_ref()),
        Command::Verify { input, rep, mode } => cmd_verify(&input, &rep, mode),
        Command::IsolatingCheck { input } => cmd_isolating_check(&input),
        Command::Port { input, po } => cmd_port(&input, po),
        Command::Share {
            input,
            po,
            secret,
            free,
            seed,
            output,
        } => cmd_share(&input, po, &secret, free.as_deref(), seed, output.as_ref()),
        Command::Reconstruct { input, players } => cmd_reconstruct(&input, players.as_deref()),
        Command::Sweep { limit_n, jobs } => cmd_sweep(limit_n, jobs),
    }
}

fn cmd_info(input: &str) -> Result<ExitCode, lpm::Error> {
    let (_, p) = load_presentation(input)?;
    let m = p.to_matroid()?;
    let bases = m.bases().count();
    let nested = p.is_nested();
    let classes = m.clonal_classes()?;
    let out = serde_json::json!({
        "n": p.n(),
        "r": p.rank(),
        "bases": bases,
        "nested": nested,
        "clonal_classes": classes,
    });
    println!("{out}");
    eprintln!(
        "n={} r={} bases={} nested={}",
        p.n(),
        p.rank(),
        bases,
        nested
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_represent(
    input: &str,
    mode: Construction,
    p_arg: Option<&str>,
    q_arg: Option<&str>,
    output: Option<&PathBuf>,
) -> Result<ExitCode, lpm::Error> {
    let (doc, presentation) = load_presentation(input)?;
    let rep = match mode {
        Construction::Ext => {
            let p_str = p_arg.ok_or_else(|| {
                lpm::Error::InvalidInput("--p <prime> is required for --mode ext".into())
            })?;
            build_extension_rep(&presentation, &parse_biguint(p_str, "--p")?)?
        }
        Construction::Prime => build_prime_rep(&presentation)?,
        Construction::Muniform => {
            let q_str = q_arg.ok_or_else(|| {
                lpm::Error::InvalidInput("--q <prime> is required for --mode muniform".into())
            })?;
            let partition: GroundPartition = doc.to_partition()?.ok_or_else(|| {
                lpm::Error::InvalidInput(
                    "the presentation needs a \"partition\" for --mode muniform".into(),
                )
            })?;
            build_m_uniform_rep(&presentation, &partition, &parse_biguint(q_str, "--q")?)?
        }
    };
    let json = serde_json::to_string(&RepresentationDoc::from_representation(&rep))
        .expect("representation serializes");
    emit(output, &json)?;
    eprintln!(
        "representation: {}x{} over a field of order {}",
        rep.matrix().rows(),
        rep.matrix().cols(),
        rep.ctx().order()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(input: &str, rep_arg: &str, mode: CheckMode) -> Result<ExitCode, lpm::Error> {
    let (_, p) = load_presentation(input)?;
    let m = p.to_matroid()?;
    let rep = load_representation(rep_arg)?;
    let mode = match mode {
        CheckMode::Bases => VerifyMode::Bases,
        CheckMode::AllSubsets => VerifyMode::AllSubsets,
    };
    let outcome = verify_representation(&m, &rep, mode)?;
    let out = serde_json::json!({ "ok": outcome.ok, "witness": outcome.witness });
    println!("{out}");
    if outcome.ok {
        eprintln!("verification passed");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("verification FAILED, witness {:?}", outcome.witness);
        Ok(ExitCode::from(1))
    }
}

fn cmd_isolating_check(input: &str) -> Result<ExitCode, lpm::Error> {
    let (_, p) = load_presentation(input)?;
    let g = p.to_graph()?;
    let w = lpm::weights::WeightFunction::standard(&g);
    let report = lpm::weights::check_isolating(&g, &w)?;
    let out = serde_json::json!({
        "isolating": report.isolating,
        "max_weight": w.max_weight(),
        "bases": report.bases,
    });
    println!("{out}");
    eprintln!("isolating: {}", report.isolating);
    Ok(if report.isolating {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_port(input: &str, po: usize) -> Result<ExitCode, lpm::Error> {
    let (_, p) = load_presentation(input)?;
    let m = p.to_matroid()?;
    let port = m.port(po)?;
    let minimal = port.minimal_qualified()?;
    let out = serde_json::json!({
        "p_o": po,
        "players": lpm::matroid::AccessStructure::players(&port),
        "minimal_qualified": minimal,
    });
    println!("{out}");
    eprintln!("port at {po}: {} minimal qualified sets", minimal.len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_share(
    input: &str,
    po: usize,
    secret_arg: &str,
    free_arg: Option<&str>,
    seed: u64,
    output: Option<&PathBuf>,
) -> Result<ExitCode, lpm::Error> {
    let rep = load_representation(input)?;
    let scheme = SharingScheme::new(rep, po)?;
    let ctx = scheme.ctx().clone();
    let secret = parse_element(&ctx, secret_arg)?;
    let r = scheme.representation().matrix().rows();
    let free: Vec<FieldElement> = match free_arg {
        Some(arg) => {
            let docs: Vec<ElementDoc> = parse_json(arg)?;
            docs.iter()
                .map(|d| lpm::json::doc_to_element(&ctx, d))
                .collect::<Result<_, _>>()?
        }
        None => {
            // Deterministic pseudo-entropy: the library itself never draws
            // randomness, the frontend derives it from the seed.
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let p = ctx.characteristic().clone();
            let degree = match &ctx {
                FieldCtx::Prime(_) => 1,
                FieldCtx::Ext(f) => f.degree(),
            };
            (0..r - 1)
                .map(|_| {
                    let coeffs: Vec<BigUint> =
                        (0..degree).map(|_| rng.gen_biguint_below(&p)).collect();
                    ctx.from_coeffs(&coeffs)
                })
                .collect::<Result<_, _>>()?
        }
    };
    let coeffs = scheme.derive_coefficients(&secret, &free)?;
    let shares = scheme.deal(&secret, &coeffs)?;
    let json = serde_json::to_string(&ShareFileDoc::from_shares(&scheme, &shares))
        .expect("share file serializes");
    emit(output, &json)?;
    eprintln!(
        "dealt shares to {} players (dealer column {po})",
        shares.players().len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_reconstruct(input: &str, players_arg: Option<&str>) -> Result<ExitCode, lpm::Error> {
    let doc: ShareFileDoc = parse_json(&read_input(input)?)?;
    let scheme = doc.to_scheme()?;
    let mut shares = doc.to_shares(&scheme)?;
    if let Some(list) = players_arg {
        let players: Vec<usize> = list
            .split(',')
            .map(|tok| {
                tok.trim().parse().map_err(|_| {
                    lpm::Error::InvalidInput(format!("bad player {tok:?} in --players"))
                })
            })
            .collect::<Result<_, _>>()?;
        shares = shares.restrict(&players)?;
    }
    let secret = scheme.reconstruct(&shares)?;
    let out = serde_json::json!({ "secret": element_to_doc(scheme.ctx(), &secret) });
    println!("{out}");
    eprintln!("reconstructed from {} shares", shares.players().len());
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(limit_n: usize, jobs: usize) -> Result<ExitCode, lpm::Error> {
    let cfg = SweepConfig {
        max_n: limit_n,
        max_r: 3,
        jobs,
    };
    let results = run_all(&cfg);
    let rows: Vec<serde_json::Value> = results
        .iter()
        .map(|r| {
            serde_json::json!({
                "id": r.id,
                "name": r.name,
                "pass": r.pass,
                "instances": r.instances,
                "detail": r.detail,
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string(&rows).expect("sweep table serializes")
    );
    for r in &results {
        eprintln!("{}", r.summary_line());
    }
    let all_pass = results.iter().all(|r| r.pass);
    eprintln!(
        "sweep: {}/{} criteria passed",
        results.iter().filter(|r| r.pass).count(),
        results.len()
    );
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
