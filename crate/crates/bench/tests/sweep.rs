use cliffeq_bench::{run_sweep, Axis, BenchRecord, CsvSink, CSV_HEADER};
use cliffeq_core::{GenConfig, PairKind, Verdict};

fn sweep_csv(seed: u64) -> (Vec<BenchRecord>, String) {
    let mut sink = CsvSink::new(Vec::new());
    let records = run_sweep(
        Axis::Qubits,
        &[2, 4, 8],
        &GenConfig::new(1, 5, seed),
        &[PairKind::Equivalent, PairKind::NonEquivalent],
        3,
        |r| sink.write(r),
    )
    .unwrap();
    (records, String::from_utf8(sink.into_inner().unwrap()).unwrap())
}

#[test]
fn trivial_point_smoke() {
    let records = run_sweep(
        Axis::Depth,
        &[1],
        &GenConfig::new(2, 1, 3),
        &[PairKind::Equivalent],
        3,
        |_| Ok(()),
    )
    .unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].verdict, Verdict::Equivalent);
    assert_eq!((records[0].n, records[0].depth, records[0].reps), (2, 1, 3));
}

#[test]
fn csv_rows_stream_with_header() {
    let (records, csv) = sweep_csv(42);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 1 + records.len());
    for (line, r) in lines[1..].iter().zip(&records) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 8);
        assert_eq!(fields[0], r.n.to_string());
        assert_eq!(fields[3], r.pair_kind.as_str());
        assert_eq!(fields[4], r.verdict.to_string());
        assert!(fields[5].parse::<f64>().unwrap() >= 0.0);
    }
    for r in &records {
        let expected = match r.pair_kind {
            PairKind::NonEquivalent => Verdict::NotEquivalent,
            _ => Verdict::Equivalent,
        };
        assert_eq!(r.verdict, expected);
    }
}

#[test]
fn csv_is_reproducible_apart_from_timing() {
    let strip = |csv: &str| -> Vec<String> {
        csv.lines()
            .map(|l| {
                let mut f: Vec<&str> = l.split(',').collect();
                f.remove(5);
                f.join(",")
            })
            .collect()
    };
    assert_eq!(strip(&sweep_csv(9).1), strip(&sweep_csv(9).1));
}
