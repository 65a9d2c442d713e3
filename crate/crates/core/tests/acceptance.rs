//! One PASS/FAIL line per acceptance criterion. Claims run one at a time so
//! each wall time is measured alone and checked against its budget.

use std::process::ExitCode;
use std::time::Duration;

use localchrom::verify::{claims, criterion_title, run_claim, Status};

/// Wall-time budget for a single claim of the criterion.
fn budget(criterion: u8, id: &str) -> Option<Duration> {
    let secs = match (criterion, id) {
        (1..=3 | 5 | 7, _) => 1,
        (6, _) => 10,
        (4 | 8 | 9 | 12, _) => 30,
        (11, "search-n7") => 300,
        (11, _) => 3600,
        _ => return None,
    };
    Some(Duration::from_secs(secs))
}

fn main() -> ExitCode {
    let all = claims();
    let mut failed = 0;
    for criterion in 1..=12u8 {
        let mut problems = Vec::new();
        let mut ran = 0;
        for c in all.iter().filter(|c| c.criterion == criterion) {
            ran += 1;
            let limit = budget(criterion, c.id);
            let r = run_claim(c, limit);
            match r.status {
                Status::Pass => {
                    if let Some(l) = limit {
                        if r.elapsed_ms > l.as_millis() {
                            problems.push(format!("{} took {} ms (budget {} ms)", r.id, r.elapsed_ms, l.as_millis()));
                        }
                    }
                }
                Status::Fail => problems.push(format!("{}: {}", r.id, r.detail)),
                Status::Skip => problems.push(format!("{}: {}", r.id, r.detail)),
            }
        }
        if ran == 0 {
            problems.push("no claims registered".into());
        }
        if problems.is_empty() {
            println!("PASS criterion {criterion}: {} ({ran} claims)", criterion_title(criterion));
        } else {
            failed += 1;
            println!("FAIL criterion {criterion}: {} ({})", criterion_title(criterion), problems.join("; "));
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
