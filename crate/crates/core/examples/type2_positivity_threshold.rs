// The Type II threshold where the third nonzero coefficient first turns
// negative: n = 3672 is all positive, n = 3696 is not.

use std::error::Error;

use extremal::analysis::analyze;
use extremal::gleason::CodeType;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [3672, 3696] {
        let a = analyze(CodeType::II, n)?;
        let e = &a.enumerator;
        let third = &e.poly.coeffs()[e.m + 2];
        let digits = third.to_string().trim_start_matches('-').len();
        println!(
            "n = {n}: m = {}, A*_{} has {digits} digits, sign {}, all positive: {}",
            e.m,
            4 * (e.m + 2),
            a.report.third_nonzero.map_or("none", |s| s.tag()),
            a.report.strictly_positive
        );
    }
    assert!(analyze(CodeType::II, 3672)?.report.strictly_positive);
    assert!(analyze(CodeType::II, 3696)?.report.third_is_negative());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
