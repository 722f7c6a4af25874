use std::process::ExitCode;

fn main() -> ExitCode {
    let results = madgad::acceptance::run_all();
    let mut failed = 0;
    for r in &results {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {} - {} ({}; {} ms)",
            r.id, verdict, r.title, r.detail, r.elapsed_ms
        );
        if !r.passed {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
