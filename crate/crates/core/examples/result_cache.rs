// Store and reload solved enumerators with the on-disk cache the CLI uses
// when `EXTREMAL_CACHE_DIR` is set.

use std::error::Error;
use std::io;

use extremal::cli::cache::Cache;
use extremal::gleason::{extremal_enumerator, CodeType};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let cache = Cache::new(dir.path());
    let e = extremal_enumerator(CodeType::III, 48)?;
    cache.put(&e)?;
    let path = cache.path_for(CodeType::III, 48);
    println!("wrote {} ({} bytes)", path.display(), std::fs::metadata(&path)?.len());
    let back = cache.get(CodeType::III, 48, &mut io::stderr()).ok_or("cache miss")?;
    assert_eq!(back, e);
    println!("reloaded {} coefficients", back.poly.coeffs().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
