//! Acceptance gate: one PASS/FAIL line per criterion at full level.
//!
//! Set `TURANLAB_BLESS=1` to rewrite the stability table fixture.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use turanlab::verifier::suite::{run_criterion, CriterionResult, Level, CRITERIA};
use turanlab::verifier::{stability_scan, DeficitKind};
use turanlab::FamilySpec;

/// Criteria that cannot hold as stated; they still run and print FAIL.
/// 11: C_5 (n=5, r=2), C_4 (n=4, r=3) and the complement of C_7 (n=7, r=3)
/// tie T_r(n) for the largest minimum degree, so T_r(n) is not unique.
const UNATTAINABLE: [usize; 1] = [11];

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn stability_table() -> String {
    let k3 = FamilySpec::Complete(3).construct().unwrap();
    let points = stability_scan(7, &k3, 2, DeficitKind::Edges, None, 0).unwrap();
    let mut out = String::from("graph6\tdeficit\tedit_distance\tdr_value\n");
    for p in points {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            p.graph6,
            p.deficit.as_f64(),
            p.edit_distance,
            p.dr_value
        ));
    }
    out
}

fn stability_fixture_matches() -> Result<(), String> {
    let path = data("stability_n7_k3_r2.tsv");
    let table = stability_table();
    if std::env::var_os("TURANLAB_BLESS").is_some() {
        std::fs::write(&path, &table).map_err(|e| e.to_string())?;
    }
    let frozen = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if frozen == table {
        return Ok(());
    }
    let diff = frozen
        .lines()
        .zip(table.lines())
        .find(|(a, b)| a != b)
        .map(|(a, b)| format!("frozen {a:?} vs now {b:?}"))
        .unwrap_or_else(|| "row count differs".into());
    Err(diff)
}

fn main() -> ExitCode {
    let corpus = data("atlas_n7.g6");
    let mut unexpected = Vec::new();
    println!("acceptance suite, level full");
    for id in 1..=CRITERIA.len() {
        let start = Instant::now();
        let mut res = run_criterion(id, Level::Full, Some(&corpus)).unwrap_or_else(|e| CriterionResult {
            id,
            name: CRITERIA[id - 1],
            passed: false,
            detail: format!("error: {e}"),
        });
        if id == 16 {
            if let Err(diff) = stability_fixture_matches() {
                res.passed = false;
                res.detail = format!("{}; fixture mismatch: {diff}", res.detail);
            } else {
                res.detail.push_str("; table matches fixture");
            }
        }
        let known = UNATTAINABLE.contains(&id);
        let tag = if !res.passed && known {
            " (known: unattainable as stated)"
        } else {
            ""
        };
        println!("{} [{:.1}s]{tag}", res.line(), start.elapsed().as_secs_f64());
        if !res.passed && !known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all attainable criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
