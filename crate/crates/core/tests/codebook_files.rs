use std::collections::HashSet;
use std::path::PathBuf;

use ids_codebook::codebook_io::{self, CodebookFile, FORMAT_VERSION, REPORT_HEADER};
use ids_codebook::{grow_codebook, CheckSpec, EditOp, Error, ErrorSpec, GenerationConfig};

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/golden_1sub1del_m16.json")
}

fn golden_file() -> CodebookFile {
    serde_json::from_str(&std::fs::read_to_string(golden_path()).unwrap()).unwrap()
}

/// Words reachable from `s` with at most one substitution and at most one deletion.
fn ball(s: &[u8]) -> HashSet<Vec<u8>> {
    let mut out = HashSet::new();
    let mut subbed = vec![s.to_vec()];
    for i in 0..s.len() {
        for &c in b"ACGT" {
            let mut v = s.to_vec();
            v[i] = c;
            subbed.push(v);
        }
    }
    for w in subbed {
        for i in 0..w.len() {
            let mut v = w.clone();
            v.remove(i);
            out.insert(v);
        }
        out.insert(w);
    }
    out
}

#[test]
fn golden_codebook_loads_and_verifies() {
    let codebook = codebook_io::load(golden_path(), true).unwrap();
    assert_eq!((codebook.size(), codebook.seq_len()), (16, 13));
    assert_eq!(codebook.profile.quotas(), [2, 1, 1]);
    assert!((codebook.redundancy() - 22.0).abs() < 1e-9);
    assert_eq!(codebook_io::report(&codebook).csv_line(), "16,13,22.0000,54.0044,32.0044");
}

#[test]
fn golden_codebook_error_balls_are_disjoint() {
    let file = golden_file();
    let balls: Vec<HashSet<Vec<u8>>> = file.sequences.iter().map(|s| ball(s.as_bytes())).collect();
    for a in 0..balls.len() {
        for b in a + 1..balls.len() {
            assert!(balls[a].is_disjoint(&balls[b]), "{} and {}", file.sequences[a], file.sequences[b]);
        }
    }
}

#[test]
fn regenerating_the_golden_codebook_is_byte_identical() {
    let mut config = GenerationConfig::new(
        16,
        CheckSpec::Correct(ErrorSpec::new(vec![EditOp::any_sub(), EditOp::any_ins(), EditOp::any_del()], vec![1, 0, 1]).unwrap()),
    );
    config.seed = 1;
    let codebook = grow_codebook(&config).unwrap();
    assert_eq!(codebook_io::to_json(&codebook, false), std::fs::read_to_string(golden_path()).unwrap());
}

#[test]
fn save_and_load_keep_the_codebook() {
    let dir = tempfile::tempdir().unwrap();
    let original = codebook_io::load(golden_path(), false).unwrap();
    let path = dir.path().join("copy.json");
    codebook_io::save(&original, &path, false).unwrap();
    assert_eq!(codebook_io::load(&path, true).unwrap(), original);
}

#[test]
fn timing_is_only_written_on_request() {
    let codebook = codebook_io::load(golden_path(), false).unwrap();
    assert!(!codebook_io::to_json(&codebook, false).contains("elapsed_secs"));
    let mut timed = codebook.clone();
    timed.meta.elapsed = Some(std::time::Duration::from_millis(1500));
    assert!(codebook_io::to_json(&timed, true).contains("\"elapsed_secs\": 1.5"));
}

#[test]
fn duplicated_sequence_is_an_invariant_violation() {
    let mut file = golden_file();
    file.sequences[5] = file.sequences[2].clone();
    assert!(matches!(file.into_codebook(), Err(Error::InvariantViolation(_))));
}

#[test]
fn confusable_pair_fails_verification() {
    let mut file = golden_file();
    // one substitution away from sequence 0
    let mut s = file.sequences[0].clone().into_bytes();
    s[6] = if s[6] == b'A' { b'T' } else { b'A' };
    file.sequences[1] = String::from_utf8(s).unwrap();
    let codebook = file.into_codebook().unwrap();
    assert_eq!(codebook.first_conflict().unwrap().map(|(a, b, _)| (a, b)), Some((0, 1)));
    assert!(matches!(codebook.verify(), Err(Error::InvariantViolation(_))));
}

#[test]
fn structural_errors_are_distinct() {
    let mut file = golden_file();
    file.format_version = FORMAT_VERSION + 1;
    assert!(matches!(file.into_codebook(), Err(Error::VersionMismatch { .. })));

    let mut file = golden_file();
    file.sequences[3].push('A');
    assert!(matches!(file.into_codebook(), Err(Error::InvariantViolation(_))));

    let mut file = golden_file();
    file.sequences[3].replace_range(0..1, "N");
    assert!(matches!(file.into_codebook(), Err(Error::InvariantViolation(_))));

    let mut file = golden_file();
    file.m = 15;
    assert!(matches!(file.into_codebook(), Err(Error::InvariantViolation(_))));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"format_version\": 1").unwrap();
    assert!(matches!(codebook_io::load(&path, false), Err(Error::MalformedFile { .. })));
    assert!(matches!(codebook_io::load(dir.path().join("missing.json"), false), Err(Error::Io(_))));
}

#[test]
fn report_has_one_row_per_codebook() {
    let codebook = codebook_io::load(golden_path(), false).unwrap();
    let rows = [codebook_io::report(&codebook), codebook_io::ReportRow::new(1, 4)];
    let mut out = Vec::new();
    codebook_io::write_report(&rows, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], REPORT_HEADER);
    assert!(lines[2].starts_with("1,4,8.0000,"));
}
