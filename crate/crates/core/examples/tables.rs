//! Prints Whitney numbers and timings for the built-in families.
//!
//! `cargo run --release --example tables -- resonance 5`

use std::time::Instant;

use chambers::engine::{run_report, SymmetryOptions};
use chambers::families::{self, Family};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map(String::as_str).unwrap_or("resonance");
    let d: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let started = Instant::now();
    let family: Family = match name {
        "resonance" => families::resonance(d),
        "threshold" => families::threshold(d),
        "crosspolytope" => families::crosspolytope(d),
        "permutohedron" => families::permutohedron(d),
        "demicube" => families::demicube(d),
        other => families::platonic(other.parse().expect("family name")),
    }
    .expect("valid parameters");
    let built = started.elapsed();
    let (w, report) = run_report(&family.arrangement, &family.group, &SymmetryOptions::default()).unwrap();
    println!("{name} {d}: n = {}, |G| = {}", family.arrangement.len(), family.group.order());
    println!("whitney  {w}");
    println!("chambers {}", w.chambers());
    println!(
        "build {:?}, stabilizers {:?}, total {:?}, peak level {}, nodes {}",
        built,
        report.stabilizer_time,
        report.total_time,
        report.stats.peak_level_size(),
        report.stats.total_nodes()
    );
}
