//! Runs the cross-check battery and prints a summary.

fn main() {
    let max_rank = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let reports = thicket::verify::run_battery(max_rank, 6).unwrap();
    for r in &reports {
        println!("{} {} ({} cases)", if r.passed() { "PASS" } else { "FAIL" }, r.name, r.checked);
    }
}
