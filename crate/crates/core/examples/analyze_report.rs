//! The full JSON report produced by `nacrig analyze`, built from the library.
//!
//! cargo run --example analyze_report -- FIG8L

use std::env;

use nacrig::fixtures;
use nacrig::formats::GraphFormat;
use nacrig::report::{analyze, AnalyzeOptions};

fn main() -> nacrig::Result<()> {
    let name = env::args().nth(1).unwrap_or_else(|| "FIG8L".to_string());
    let g = fixtures::fixture(&name).expect("unknown fixture");
    let opts = AnalyzeOptions {
        up_to_swap: true,
        ..AnalyzeOptions::default()
    };
    let report = analyze(&g, GraphFormat::EdgeList, &opts);
    println!("{}", serde_json::to_string_pretty(&report)?);
    eprintln!("verdict {:?} ({}), exit code {}", report.verdict.kind, report.verdict.reason, report.exit_code());
    Ok(())
}
