// Compare the triangular integer solve against the dense rational oracle.

use std::error::Error;
use std::time::Instant;

use extremal::gleason::{admissible, extremal_enumerator, CodeType};
use extremal::oracle::{build_system, generic_solve};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sys = build_system(CodeType::III, 12)?;
    println!("(III, 12) system: {:?} = {:?}", sys.matrix, sys.rhs);
    for t in CodeType::ALL {
        let start = Instant::now();
        let mut count = 0;
        for n in (1..=72).filter(|&n| admissible(t, n)) {
            if extremal_enumerator(t, n)? != generic_solve(t, n)? {
                return Err(format!("Type {t} n={n}: solvers disagree").into());
            }
            count += 1;
        }
        println!("Type {t}: {count} lengths agree ({:.2?})", start.elapsed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
