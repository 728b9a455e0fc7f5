//! The `extremal` command line: `enum`, `scan`, `verify` and `bound`.
//!
//! Exit codes: 0 success, 1 a verified claim failed, 2 inadmissible input,
//! 64 usage error. Data goes to stdout, warnings and progress to stderr.

pub mod cache;
pub mod output;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::analysis::{
    admissible_lengths, cross_boundary_check, evaluate_claim, Analysis, ClaimId, ClaimRecord,
    CrossBoundaryRecord, SignReport, Verdict,
};
use crate::gleason::{extremal_enumerator, extremal_minimum_weight, CodeType, GleasonError};

use cache::Cache;
use output::{scan_csv, scan_json, OutputRecord, ScanRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MATH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Default sweep cap for Type III claims.
pub const DEFAULT_CAP_III: usize = 1000;
/// Default sweep cap for Type II claims outside `--long`; boundary samples
/// beyond it are still checked.
pub const DEFAULT_CAP_II: usize = 480;

#[derive(Debug, Parser)]
#[command(name = "extremal", version, about = "Extremal weight enumerators of self-dual codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the extremal weight enumerator for one length.
    Enum(EnumArgs),
    /// Sign summary for every admissible length in a range.
    Scan(ScanArgs),
    /// Re-check the known nonexistence claims.
    Verify(VerifyArgs),
    /// Print the extremal minimum weight.
    Bound(BoundArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    Thm1,
    #[value(name = "thm2-ii")]
    Thm2Ii,
    #[value(name = "thm2-iii")]
    Thm2Iii,
    Prop,
    Thm3,
    #[value(name = "remark-ii")]
    RemarkIi,
    All,
}

impl ClaimArg {
    fn claims(self) -> Vec<ClaimId> {
        match self {
            ClaimArg::Thm1 => vec![ClaimId::Thm1],
            ClaimArg::Thm2Ii => vec![ClaimId::Thm2TypeII],
            ClaimArg::Thm2Iii => vec![ClaimId::Thm2TypeIII],
            ClaimArg::Prop => vec![ClaimId::Prop],
            ClaimArg::Thm3 => vec![ClaimId::Thm3],
            ClaimArg::RemarkIi => vec![ClaimId::RemarkTypeII],
            ClaimArg::All => ClaimId::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long = "type")]
    pub code_type: CodeType,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = EnumFormat::Table)]
    pub format: EnumFormat,
    /// List every nonzero coefficient instead of the first few.
    #[arg(long)]
    pub full: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long = "type")]
    pub code_type: CodeType,
    #[arg(long)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
    pub format: ScanFormat,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub claim: ClaimArg,
    /// Check every admissible n up to this length.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Full Type II sweep up to n = 3952.
    #[arg(long)]
    pub long: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long = "type")]
    pub code_type: CodeType,
    #[arg(long)]
    pub n: usize,
}

/// Shared stderr sink for worker threads.
struct Diag<'a, E: Write> {
    sink: Mutex<&'a mut E>,
    cache_warned: AtomicBool,
}

impl<'a, E: Write + Send> Diag<'a, E> {
    fn new(sink: &'a mut E) -> Self {
        Diag { sink: Mutex::new(sink), cache_warned: AtomicBool::new(false) }
    }

    fn line(&self, msg: &str) {
        let mut s = self.sink.lock().unwrap_or_else(|e| e.into_inner());
        let _ = writeln!(s, "{msg}");
    }
}

/// Solves through the optional on-disk cache.
struct Engine {
    cache: Option<Cache>,
}

impl Engine {
    fn from_env() -> Self {
        Engine { cache: Cache::from_env() }
    }

    fn analyze<E: Write + Send>(&self, t: CodeType, n: usize, diag: &Diag<'_, E>) -> Result<Analysis, GleasonError> {
        let cached = self.cache.as_ref().and_then(|c| {
            let mut sink = diag.sink.lock().unwrap_or_else(|e| e.into_inner());
            c.get(t, n, &mut **sink)
        });
        let enumerator = match cached {
            Some(e) => e,
            None => {
                let e = extremal_enumerator(t, n)?;
                if let Some(c) = &self.cache {
                    if let Err(err) = c.put(&e) {
                        if !diag.cache_warned.swap(true, Ordering::Relaxed) {
                            diag.line(&format!(
                                "warning: cannot write cache in {}: {err}; continuing uncached",
                                c.dir().display()
                            ));
                        }
                    }
                }
                e
            }
        };
        let report = SignReport::from_enumerator(&enumerator);
        let verdict = Verdict::from_enumerator(&enumerator);
        Ok(Analysis { enumerator, report, verdict })
    }

    fn reports<E: Write + Send>(
        &self,
        t: CodeType,
        lengths: &[usize],
        diag: &Diag<'_, E>,
        progress: bool,
    ) -> Vec<SignReport> {
        let done = AtomicUsize::new(0);
        lengths
            .par_iter()
            .map(|&n| {
                let r = self.analyze(t, n, diag).expect("admissible length").report;
                if progress {
                    let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                    diag.line(&format!("progress: Type {t} n={n} ({k}/{})", lengths.len()));
                }
                r
            })
            .collect()
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, String> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err("--jobs must be at least 1".to_string()),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| e.to_string()),
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write,
    E: Write + Send,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let diag = Diag::new(err);
    let engine = Engine::from_env();
    let code = match cli.command {
        Command::Enum(a) => cmd_enum(&engine, &a, out, &diag),
        Command::Scan(a) => cmd_scan(&engine, &a, out, &diag),
        Command::Verify(a) => cmd_verify(&engine, &a, out, &diag),
        Command::Bound(a) => cmd_bound(&a, out, &diag),
    };
    let _ = out.flush();
    code
}

fn math_error<E: Write + Send>(e: &GleasonError, diag: &Diag<'_, E>) -> i32 {
    diag.line(&format!("error: {e}"));
    EXIT_MATH
}

fn cmd_enum<O: Write, E: Write + Send>(engine: &Engine, a: &EnumArgs, out: &mut O, diag: &Diag<'_, E>) -> i32 {
    let an = match engine.analyze(a.code_type, a.n, diag) {
        Ok(an) => an,
        Err(e) => return math_error(&e, diag),
    };
    let rec = OutputRecord::new(&an, a.full);
    let text = match a.format {
        EnumFormat::Json => rec.to_json() + "\n",
        EnumFormat::Csv => rec.to_csv(),
        EnumFormat::Table => rec.to_table(),
    };
    if rec.omitted > 0 && a.format != EnumFormat::Table {
        diag.line(&format!("note: {} nonzero coefficients omitted; pass --full for all", rec.omitted));
    }
    let _ = out.write_all(text.as_bytes());
    EXIT_OK
}

fn cmd_scan<O: Write, E: Write + Send>(engine: &Engine, a: &ScanArgs, out: &mut O, diag: &Diag<'_, E>) -> i32 {
    if a.from > a.to {
        diag.line(&format!("error: --from {} exceeds --to {}", a.from, a.to));
        return EXIT_USAGE;
    }
    let lengths = admissible_lengths(a.code_type, a.from, a.to);
    let reports = match with_jobs(a.jobs, || engine.reports(a.code_type, &lengths, diag, false)) {
        Ok(r) => r,
        Err(e) => {
            diag.line(&format!("error: {e}"));
            return EXIT_USAGE;
        }
    };
    let rows: Vec<ScanRow> = reports.iter().map(ScanRow::new).collect();
    let text = match a.format {
        ScanFormat::Csv => scan_csv(&rows),
        ScanFormat::Json => scan_json(&rows) + "\n",
    };
    let _ = out.write_all(text.as_bytes());
    EXIT_OK
}

/// Lengths checked for a claim under the given flags.
pub fn verify_lengths(c: ClaimId, cap: Option<usize>, long: bool) -> Vec<usize> {
    let t = c.code_type();
    match (cap, t) {
        (Some(cap), _) => admissible_lengths(t, 1, cap),
        (None, CodeType::II) if long => admissible_lengths(t, 1, c.full_cap()),
        (None, CodeType::II) => {
            let mut set: BTreeSet<usize> = admissible_lengths(t, 1, DEFAULT_CAP_II).into_iter().collect();
            for fam in c.families() {
                set.extend(fam.boundary_lengths());
            }
            set.into_iter().collect()
        }
        (None, _) => admissible_lengths(t, 1, DEFAULT_CAP_III),
    }
}

fn render_claim(rec: &ClaimRecord, handoff: Option<&CrossBoundaryRecord>, out: &mut impl Write) -> bool {
    let passed = rec.passed() && handoff.map_or(true, CrossBoundaryRecord::passed);
    let _ = writeln!(
        out,
        "{}: {} ({} lengths, n <= {})",
        rec.claim,
        if passed { "PASS" } else { "FAIL" },
        rec.lengths_checked,
        rec.max_n
    );
    for b in &rec.boundaries {
        let _ = writeln!(
            out,
            "  boundary n={} [{}] {}: {}",
            b.n,
            b.family,
            if b.member { "inside" } else { "outside" },
            if b.holds { "holds" } else { "does not hold" }
        );
    }
    if let Some(h) = handoff {
        for e in &h.entries {
            let _ = writeln!(
                out,
                "  handoff {} n={}: {} {} = {}; {}",
                e.family,
                e.n,
                e.slot,
                e.sign.map_or("none", |s| s.tag()),
                e.coefficient.as_ref().map_or_else(|| "-".to_string(), |c| output::abbreviate(&c.to_string())),
                if e.covered { "excluded" } else { "NOT excluded" }
            );
        }
    }
    for c in &rec.counterexamples {
        let _ = writeln!(out, "  counterexample n={}: {}", c.n, c.detail);
    }
    passed
}

fn cmd_verify<O: Write, E: Write + Send>(engine: &Engine, a: &VerifyArgs, out: &mut O, diag: &Diag<'_, E>) -> i32 {
    let claims = a.claim.claims();
    let plans: Vec<(ClaimId, Vec<usize>)> = claims.iter().map(|&c| (c, verify_lengths(c, a.cap, a.long))).collect();

    let result = with_jobs(a.jobs, || {
        let mut per_type: Vec<(CodeType, Vec<SignReport>)> = Vec::new();
        for t in [CodeType::III, CodeType::II] {
            let union: BTreeSet<usize> = plans
                .iter()
                .filter(|(c, _)| c.code_type() == t)
                .flat_map(|(_, ns)| ns.iter().copied())
                .collect();
            if union.is_empty() {
                continue;
            }
            let ns: Vec<usize> = union.into_iter().collect();
            per_type.push((t, engine.reports(t, &ns, diag, a.long)));
        }
        let records: Vec<ClaimRecord> = plans
            .iter()
            .map(|(c, ns)| {
                let reports: Vec<SignReport> = per_type
                    .iter()
                    .filter(|(t, _)| *t == c.code_type())
                    .flat_map(|(_, rs)| rs.iter().filter(|r| ns.binary_search(&r.n).is_ok()).cloned())
                    .collect();
                evaluate_claim(*c, &reports)
            })
            .collect();
        let handoff = claims
            .iter()
            .any(|&c| c == ClaimId::Thm3 && verify_lengths(c, a.cap, a.long).last().is_some_and(|&n| n >= 956))
            .then(|| cross_boundary_check(CodeType::III).expect("Type III"));
        (records, handoff)
    });
    let (records, handoff) = match result {
        Ok(r) => r,
        Err(e) => {
            diag.line(&format!("error: {e}"));
            return EXIT_USAGE;
        }
    };

    let mut passed = 0;
    for rec in &records {
        let h = (rec.claim == ClaimId::Thm3).then_some(handoff.as_ref()).flatten();
        if render_claim(rec, h, out) {
            passed += 1;
        }
    }
    if records.len() > 1 {
        let _ = writeln!(out, "summary: {passed}/{} claims passed", records.len());
    }
    if passed == records.len() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cmd_bound<O: Write, E: Write + Send>(a: &BoundArgs, out: &mut O, diag: &Diag<'_, E>) -> i32 {
    match extremal_minimum_weight(a.code_type, a.n) {
        Ok(d) => {
            let _ = writeln!(out, "{d}");
            EXIT_OK
        }
        Err(e) => math_error(&e, diag),
    }
}
