//! Scaling sweeps over qubit count or circuit depth.
//!
//! Each sweep point generates a labeled pair, times only the equivalence
//! check (single-threaded, so timings are comparable across points) and
//! records the median wall time over the repetitions. Records stream to a
//! CSV sink as they complete.

use std::io::Write;
use std::time::{Duration, Instant};

use cliffeq_core::{
    check_equivalence_with, gen_pair, CheckError, CheckOptions, GenConfig, GenError, PairKind,
    Parallelism, Verdict,
};

pub const CSV_HEADER: &str = "n,depth,m,pair_kind,verdict,wall_ms,reps,seed";

pub const MIN_REPS: usize = 3;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("sweep values must be non-empty and sorted ascending")]
    UnsortedValues,
    #[error("at least {MIN_REPS} repetitions are required, got {0}")]
    TooFewReps(usize),
    #[error("out of memory at n = {n}, depth = {depth} (needs about {bytes} bytes)")]
    OutOfMemory { n: usize, depth: usize, bytes: usize },
    #[error("verdict {verdict} contradicts the {kind} label at n = {n}, depth = {depth}")]
    LabelMismatch {
        n: usize,
        depth: usize,
        kind: PairKind,
        verdict: Verdict,
    },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Qubits,
    Depth,
}

impl std::str::FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "qubits" => Ok(Axis::Qubits),
            "depth" => Ok(Axis::Depth),
            other => Err(format!("unknown axis {other:?} (expected qubits or depth)")),
        }
    }
}

/// One sweep point.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub depth: usize,
    /// Lowered gate count of both circuits together.
    pub m: usize,
    pub pair_kind: PairKind,
    pub verdict: Verdict,
    /// Median over `reps` timed checks.
    pub wall_ms: f64,
    pub reps: usize,
    pub seed: u64,
}

/// Streams records as CSV with the [`CSV_HEADER`] columns.
pub struct CsvSink<W: Write> {
    writer: csv::Writer<W>,
}

impl<W: Write> CsvSink<W> {
    pub fn new(inner: W) -> Self {
        CsvSink {
            writer: csv::WriterBuilder::new().has_headers(true).from_writer(inner),
        }
    }

    pub fn write(&mut self, record: &BenchRecord) -> Result<(), BenchError> {
        self.writer.serialize(record)?;
        self.writer.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn into_inner(self) -> Result<W, BenchError> {
        self.writer
            .into_inner()
            .map_err(|e| BenchError::Csv(csv::Error::from(e.into_error())))
    }
}

pub fn median(samples: &mut [Duration]) -> Duration {
    assert!(!samples.is_empty(), "median of no samples");
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

/// Rough peak memory of one check: two live tableaux plus both gate lists.
fn estimated_bytes(n: usize, depth: usize) -> usize {
    let tableau = n
        .saturating_mul(n.div_ceil(64))
        .saturating_mul(16)
        .saturating_add(n.saturating_mul(72));
    let gates = depth
        .saturating_mul(n)
        .saturating_mul(2 * std::mem::size_of::<cliffeq_core::Gate>());
    tableau.saturating_mul(2).saturating_add(gates)
}

fn reserve_or_fail(n: usize, depth: usize) -> Result<(), BenchError> {
    let bytes = estimated_bytes(n, depth);
    let mut probe: Vec<u8> = Vec::new();
    probe
        .try_reserve_exact(bytes)
        .map_err(|_| BenchError::OutOfMemory { n, depth, bytes })
}

/// Times the check on one generated pair.
pub fn measure_point(cfg: &GenConfig, reps: usize) -> Result<BenchRecord, BenchError> {
    if reps < MIN_REPS {
        return Err(BenchError::TooFewReps(reps));
    }
    reserve_or_fail(cfg.n, cfg.depth)?;
    let (u, v) = gen_pair(cfg)?;
    let options = CheckOptions {
        parallelism: Parallelism::Sequential,
    };
    let mut samples = Vec::with_capacity(reps);
    let mut verdict = None;
    for _ in 0..reps {
        let start = Instant::now();
        let result = check_equivalence_with(&u, &v, options)?;
        samples.push(start.elapsed());
        verdict = Some(result.verdict);
    }
    let verdict = verdict.expect("reps >= 1");
    let expected = match cfg.pair_kind {
        PairKind::NonEquivalent => Verdict::NotEquivalent,
        _ => Verdict::Equivalent,
    };
    if verdict != expected {
        return Err(BenchError::LabelMismatch {
            n: cfg.n,
            depth: cfg.depth,
            kind: cfg.pair_kind,
            verdict,
        });
    }
    Ok(BenchRecord {
        n: cfg.n,
        depth: cfg.depth,
        m: u.gate_count() + v.gate_count(),
        pair_kind: cfg.pair_kind,
        verdict,
        wall_ms: median(&mut samples).as_secs_f64() * 1e3,
        reps,
        seed: cfg.seed,
    })
}

/// Runs every `(value, kind)` point in order and hands each record to
/// `on_record` as soon as it is measured.
///
/// `fixed` supplies the seed, edit counts and whichever of `n`/`depth` the
/// axis does not vary.
pub fn run_sweep(
    axis: Axis,
    values: &[usize],
    fixed: &GenConfig,
    kinds: &[PairKind],
    reps: usize,
    mut on_record: impl FnMut(&BenchRecord) -> Result<(), BenchError>,
) -> Result<Vec<BenchRecord>, BenchError> {
    if values.is_empty() || values.windows(2).any(|w| w[0] > w[1]) {
        return Err(BenchError::UnsortedValues);
    }
    if reps < MIN_REPS {
        return Err(BenchError::TooFewReps(reps));
    }
    let mut records = Vec::with_capacity(values.len() * kinds.len());
    for &value in values {
        for &kind in kinds {
            let mut cfg = fixed.with_kind(kind);
            match axis {
                Axis::Qubits => cfg.n = value,
                Axis::Depth => cfg.depth = value,
            }
            let record = measure_point(&cfg, reps)?;
            on_record(&record)?;
            records.push(record);
        }
    }
    Ok(records)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let cov: f64 = logs.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let var: f64 = logs.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    cov / var
}
