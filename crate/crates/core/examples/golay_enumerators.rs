// The smallest extremal enumerators: extended Hamming, binary and ternary
// Golay, and a Type IV example.

use std::error::Error;

use extremal::gleason::{extremal_enumerator, extremal_minimum_weight, CodeType};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (t, n) in [(CodeType::I, 8), (CodeType::II, 24), (CodeType::III, 12), (CodeType::IV, 6)] {
        let e = extremal_enumerator(t, n)?;
        let d = extremal_minimum_weight(t, n)?;
        let a: Vec<String> = e.a.iter().map(|v| v.to_string()).collect();
        println!("Type {t}, n = {n}, d = {d}, a = [{}]", a.join(", "));
        println!("  W* = {}", e.poly);
    }
    let golay = extremal_enumerator(CodeType::II, 24)?;
    assert_eq!(golay.coefficient_at_weight(8), 759.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
