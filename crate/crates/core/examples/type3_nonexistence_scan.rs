// Scan Type III lengths and list which ones have a negative coefficient in
// the extremal enumerator, i.e. no extremal code.

use std::error::Error;

use extremal::analysis::scan;
use extremal::gleason::CodeType;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let reports = scan(CodeType::III, 4, 400);
    let mut open = Vec::new();
    println!("{:>4}  {:>3}  {:>7}  {:>4}  {:>5}", "n", "d", "highest", "next", "third");
    for r in &reports {
        if r.all_nonnegative {
            open.push(r.n);
            continue;
        }
        let third = r.third_nonzero.map_or("none", |s| s.tag());
        println!("{:>4}  {:>3}  {:>7}  {:>4}  {:>5}", r.n, r.extremal_d(), r.highest, r.next_to_highest, third);
    }
    println!("not excluded by sign: {open:?}");
    assert!(open.contains(&12) && open.contains(&24));
    assert!(!open.contains(&72));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
