//! Running a verification suite from code and writing JSON lines.

use theta_ktypes::verify::{run_suite, write_records, ParamRange, RunConfig, Suite};

fn main() {
    let cfg = RunConfig {
        p: Some(ParamRange::span(1, 2)),
        n: Some(ParamRange::span(2, 4)),
        m: Some(ParamRange::span(4, 6)),
        cutoff: Some(2),
        ..Default::default()
    };
    let records = run_suite(Suite::Thm14, &cfg).unwrap();
    let summary = write_records(&records, &mut std::io::sink()).unwrap();
    println!("thm14: {summary}");
}
