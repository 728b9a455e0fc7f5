// Extremal enumerators are fixed (up to the code size) by the MacWilliams
// transform, and their coefficients sum to the code size.

use std::error::Error;

use num_bigint::BigInt;

use extremal::gleason::{admissible, extremal_enumerator, type_params, CodeType};
use extremal::polyarith::{densify, eval_at_ones, macwilliams_transform};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for t in CodeType::ALL {
        let q = type_params(t).q;
        let lengths: Vec<usize> = (1..=96).filter(|&n| admissible(t, n)).collect();
        for &n in &lengths {
            let e = extremal_enumerator(t, n)?;
            let size = BigInt::from(q).pow(n as u32 / 2);
            let dense = densify(&e.poly);
            if macwilliams_transform(&dense, q)? != dense.scale(&size) {
                return Err(format!("Type {t} n={n} is not MacWilliams invariant").into());
            }
            if eval_at_ones(&e.poly) != size {
                return Err(format!("Type {t} n={n} has wrong mass").into());
            }
        }
        println!("Type {t}: {} lengths invariant under (X+{}Y, X-Y)", lengths.len(), q - 1);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
