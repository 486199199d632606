//! `cliffeq`: equivalence checking for Clifford circuits in `.cqc` format.
//!
//! Exit codes: 0 equivalent (or success), 1 not equivalent, 2 usage, parse,
//! width or I/O error.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use cliffeq_bench::{run_sweep, Axis, CsvSink};
use cliffeq_core::{
    check_equivalence, check_identity, gen_pair, oracle_phase, Circuit, EquivalenceResult,
    GenConfig, PairKind, MAX_ORACLE_QUBITS,
};

const EXIT_EQUIVALENT: u8 = 0;
const EXIT_NOT_EQUIVALENT: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "cliffeq", version, about = "Exact equivalence checking of Clifford circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check two circuits for equivalence up to global phase.
    Check {
        a: PathBuf,
        b: PathBuf,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check whether a circuit implements the identity up to global phase.
    Identity {
        a: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a filled random circuit or a labeled circuit pair.
    Gen {
        #[arg(long)]
        qubits: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// equiv, nonequiv or single.
        #[arg(long, default_value = "equiv")]
        kind: PairKind,
        /// Output stem: writes STEM_a.cqc, STEM_b.cqc and STEM.label (or STEM.cqc for single).
        #[arg(long)]
        out: PathBuf,
        /// Gates replaced in a non-equivalent pair.
        #[arg(long, default_value_t = 1)]
        mutations: usize,
        /// Equivalence-preserving edits in an equivalent pair.
        #[arg(long, default_value_t = 4)]
        insertions: usize,
    },
    /// Compare two small circuits by dense unitary matrices.
    Oracle {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Time the checker over a sweep of qubit counts or depths.
    Bench {
        /// qubits or depth.
        #[arg(long)]
        axis: Axis,
        /// Ascending comma-separated sweep values.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<usize>,
        /// The depth (axis qubits) or qubit count (axis depth) held fixed.
        #[arg(long)]
        fixed: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pair kinds measured at every point.
        #[arg(long, value_delimiter = ',', default_value = "equiv,nonequiv")]
        kinds: Vec<PairKind>,
        /// CSV output path; standard output when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn read_circuit(path: &Path) -> Result<Circuit> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Circuit::parse(&text).with_context(|| format!("{}", path.display()))
}

fn report(result: &EquivalenceResult, json: bool) -> Result<u8> {
    if json {
        println!("{}", serde_json::to_string(result)?);
    } else {
        println!("{}", result.verdict);
        if let Some(w) = &result.witness {
            println!(
                "witness: {}-basis generator {}: {} vs {}",
                w.basis, w.generator, w.u_pauli, w.v_pauli
            );
        }
    }
    Ok(if result.is_equivalent() {
        EXIT_EQUIVALENT
    } else {
        EXIT_NOT_EQUIVALENT
    })
}

fn cmd_gen(cfg: GenConfig, out: &Path) -> Result<u8> {
    cfg.validate()?;
    let stem = out.to_string_lossy();
    if cfg.pair_kind == PairKind::Single {
        let (c, _) = gen_pair(&cfg)?;
        let path = format!("{stem}.cqc");
        fs::write(&path, c.serialize()).with_context(|| format!("writing {path}"))?;
        eprintln!("wrote {path} ({} gates)", c.len());
        return Ok(EXIT_EQUIVALENT);
    }
    let (a, b) = gen_pair(&cfg)?;
    let (pa, pb, pl) = (
        format!("{stem}_a.cqc"),
        format!("{stem}_b.cqc"),
        format!("{stem}.label"),
    );
    fs::write(&pa, a.serialize()).with_context(|| format!("writing {pa}"))?;
    fs::write(&pb, b.serialize()).with_context(|| format!("writing {pb}"))?;
    let label = cfg.pair_kind.label().expect("pair kinds have labels");
    fs::write(&pl, format!("{label}\n")).with_context(|| format!("writing {pl}"))?;
    eprintln!("wrote {pa}, {pb}, {pl} ({label})");
    Ok(EXIT_EQUIVALENT)
}

fn cmd_oracle(a: &Path, b: &Path, json: bool) -> Result<u8> {
    let (u, v) = (read_circuit(a)?, read_circuit(b)?);
    for c in [&u, &v] {
        if c.num_qubits() > MAX_ORACLE_QUBITS {
            bail!(
                "{} qubits exceeds the oracle limit of {MAX_ORACLE_QUBITS}",
                c.num_qubits()
            );
        }
    }
    let phase = oracle_phase(&u, &v)?;
    if json {
        let value = serde_json::json!({
            "verdict": if phase.is_some() { "Equivalent" } else { "NotEquivalent" },
            "phase": phase.map(|c| [c.re, c.im]),
            "n": u.num_qubits(),
        });
        println!("{value}");
    } else {
        match phase {
            Some(c) => println!("Equivalent (global phase {:.6}{:+.6}i)", c.re, c.im),
            None => println!("NotEquivalent"),
        }
    }
    Ok(if phase.is_some() {
        EXIT_EQUIVALENT
    } else {
        EXIT_NOT_EQUIVALENT
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    axis: Axis,
    values: &[usize],
    fixed: usize,
    reps: usize,
    seed: u64,
    kinds: &[PairKind],
    csv: Option<&Path>,
) -> Result<u8> {
    let (n, depth) = match axis {
        Axis::Qubits => (1, fixed),
        Axis::Depth => (fixed, 1),
    };
    let base = GenConfig::new(n, depth, seed);
    let out: Box<dyn Write> = match csv {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = CsvSink::new(out);
    let records = run_sweep(axis, values, &base, kinds, reps, |r| {
        eprintln!(
            "n={} depth={} kind={} verdict={} median={:.3} ms",
            r.n, r.depth, r.pair_kind, r.verdict, r.wall_ms
        );
        sink.write(r)
    })?;
    sink.into_inner()?.flush()?;
    eprintln!("{} points", records.len());
    Ok(EXIT_EQUIVALENT)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { a, b, json } => {
            let (u, v) = (read_circuit(&a)?, read_circuit(&b)?);
            report(&check_equivalence(&u, &v)?, json)
        }
        Command::Identity { a, json } => report(&check_identity(&read_circuit(&a)?)?, json),
        Command::Gen {
            qubits,
            depth,
            seed,
            kind,
            out,
            mutations,
            insertions,
        } => {
            let cfg = GenConfig {
                n: qubits,
                depth,
                seed,
                pair_kind: kind,
                mutation_count: mutations,
                insertion_count: insertions,
            };
            cmd_gen(cfg, &out)
        }
        Command::Oracle { a, b, json } => cmd_oracle(&a, &b, json),
        Command::Bench {
            axis,
            values,
            fixed,
            reps,
            seed,
            kinds,
            csv,
        } => cmd_bench(axis, &values, fixed, reps, seed, &kinds, csv.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
