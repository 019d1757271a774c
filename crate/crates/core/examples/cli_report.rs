//! Running a command in-process and reading its JSON report.

use qnlab::cli::run;

fn main() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/m3bar.json");
    let out = run(["qnlab", "--report", "json", "check-conditions", fixture]);
    println!("exit {}", out.code);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    for c in report["checks"].as_array().unwrap() {
        println!("{:<24} {}", c["name"].as_str().unwrap(), c["status"]);
    }
}
