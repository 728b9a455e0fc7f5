//! Serialized forms of enumerators and scan rows.
//!
//! Coefficients are always exact decimal strings. Only the table view
//! shortens long numbers.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::cache::SCHEMA_VERSION;
use crate::analysis::{Analysis, Sign, SignReport, Verdict};

/// Table cells show at most this many digits.
pub const TABLE_DIGITS: usize = 40;
/// Nonzero coefficients listed without `--full`.
pub const DISPLAY_CAP: usize = 64;

pub const SCAN_CSV_HEADER: &str = "n,m,d,highest,next,third,excluded,witness";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Signs {
    pub highest: Sign,
    pub next: Sign,
    pub third: Option<Sign>,
}

/// Weight-ordered `weight -> decimal` map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap(pub Vec<(usize, String)>);

impl Serialize for WeightMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (w, v) in &self.0 {
            map.serialize_entry(&w.to_string(), v)?;
        }
        map.end()
    }
}

/// One `enum` result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    #[serde(rename = "type")]
    pub code_type: String,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub a: Vec<String>,
    /// Nonzero `A*_wt` for `wt > 0`.
    #[serde(rename = "A")]
    pub coefficients: WeightMap,
    pub signs: Signs,
    pub excluded: bool,
    pub witness_weight: Option<usize>,
    pub schema_version: u32,
    /// Nonzero coefficients left out by the display cap.
    #[serde(skip)]
    pub omitted: usize,
}

impl OutputRecord {
    pub fn new(an: &Analysis, full: bool) -> Self {
        let e = &an.enumerator;
        let r = &an.report;
        let step = e.step();
        let nonzero: Vec<(usize, String)> = e
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k * step, c.to_string()))
            .collect();
        let keep = if full { nonzero.len() } else { nonzero.len().min(DISPLAY_CAP) };
        let omitted = nonzero.len() - keep;
        OutputRecord {
            code_type: e.code_type.tag().to_string(),
            n: e.n,
            m: e.m,
            d: r.extremal_d(),
            a: e.a.iter().map(ToString::to_string).collect(),
            coefficients: WeightMap(nonzero.into_iter().take(keep).collect()),
            signs: signs_of(r),
            excluded: an.verdict.excluded,
            witness_weight: witness_weight(r, &an.verdict),
            schema_version: SCHEMA_VERSION,
            omitted,
        }
    }

    /// `(weight, value)` rows including the leading `X^n` term.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &str)> + '_ {
        std::iter::once((0, "1")).chain(self.coefficients.0.iter().map(|(w, v)| (*w, v.as_str())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("weight,coefficient\n");
        for (w, v) in self.rows() {
            let _ = writeln!(s, "{w},{v}");
        }
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Type {} n={} m={} d={}", self.code_type.to_uppercase(), self.n, self.m, self.d);
        let a: Vec<String> = self.a.iter().map(|v| abbreviate(v)).collect();
        let _ = writeln!(s, "a = [{}]", a.join(", "));
        let wlen = self.n.to_string().len().max("weight".len());
        let _ = writeln!(s, "{:>wlen$}  coefficient", "weight");
        for (w, v) in self.rows() {
            let _ = writeln!(s, "{w:>wlen$}  {}", abbreviate(v));
        }
        if self.omitted > 0 {
            let _ = writeln!(s, "... {} more nonzero coefficients (use --full)", self.omitted);
        }
        let third = self.signs.third.map_or("none", Sign::tag);
        let _ = writeln!(
            s,
            "signs: highest={} next={} third={}",
            self.signs.highest, self.signs.next, third
        );
        match self.witness_weight {
            Some(w) => {
                let _ = writeln!(s, "excluded: yes (negative coefficient at weight {w})");
            }
            None => {
                let _ = writeln!(s, "excluded: no");
            }
        }
        s
    }
}

fn signs_of(r: &SignReport) -> Signs {
    Signs { highest: r.highest, next: r.next_to_highest, third: r.third_nonzero }
}

fn witness_weight(r: &SignReport, v: &Verdict) -> Option<usize> {
    v.witness.as_ref().map(|(k, _)| k * r.step())
}

/// First [`TABLE_DIGITS`] digits plus a `…(<d> digits)` marker when longer.
pub fn abbreviate(v: &str) -> String {
    let (sign, digits) = match v.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", v),
    };
    if digits.len() <= TABLE_DIGITS {
        v.to_string()
    } else {
        format!("{sign}{}…({} digits)", &digits[..TABLE_DIGITS], digits.len())
    }
}

/// One `scan` line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub highest: Sign,
    pub next: Sign,
    pub third: Option<Sign>,
    pub excluded: bool,
    pub witness: Option<usize>,
}

impl ScanRow {
    pub fn new(r: &SignReport) -> Self {
        ScanRow {
            n: r.n,
            m: r.m,
            d: r.extremal_d(),
            highest: r.highest,
            next: r.next_to_highest,
            third: r.third_nonzero,
            excluded: !r.all_nonnegative,
            witness: r.first_negative_slot.map(|k| k * r.step()),
        }
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.d,
            self.highest,
            self.next,
            self.third.map_or("none", Sign::tag),
            self.excluded,
            self.witness.map(|w| w.to_string()).unwrap_or_default()
        )
    }
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut s = String::with_capacity(32 * (rows.len() + 1));
    s.push_str(SCAN_CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.csv_line());
        s.push('\n');
    }
    s
}

pub fn scan_json(rows: &[ScanRow]) -> String {
    serde_json::to_string_pretty(rows).expect("serializable")
}
