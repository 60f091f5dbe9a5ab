//! Prints a scenario in canonical form, then its JSON and text reports.
//!
//! `cargo run -p degloci --example run_scenario -- corpus/rank3_order_ideal.scn`

use degloci::scenario::{parse_scenario, run, Overrides, RunOptions};

fn main() {
    let path = std::env::args().nth(1).expect("scenario path");
    let text = std::fs::read_to_string(&path).unwrap();
    let s = parse_scenario(&path, &text, &Overrides::default()).unwrap();
    print!("{s}");
    let r = run(&s, &RunOptions::default());
    print!("{}", r.to_json_lines());
    print!("{}", r.to_text());
}
