//! Sign analysis of extremal enumerators and mechanical checks of the
//! known nonexistence ranges.
//!
//! A negative coefficient in `W*` cannot count codewords, so any length
//! with one has no extremal code. The tracked coefficients are the top
//! lattice slot `K = floor(n/w)` ("highest"), slot `K-1` ("next"), and
//! slot `m+2` ("third nonzero", `A*_{w(m+2)}`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gleason::{
    admissible, extremal_enumerator, type_params, CodeType, ExtremalEnumerator, GleasonError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "neg")]
    Negative,
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "pos")]
    Positive,
}

impl Sign {
    pub fn of(v: &BigInt) -> Sign {
        if v.is_negative() {
            Sign::Negative
        } else if v.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// Short tag used in CSV/JSON output.
    pub fn tag(self) -> &'static str {
        match self {
            Sign::Negative => "neg",
            Sign::Zero => "zero",
            Sign::Positive => "pos",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "neg" => Ok(Sign::Negative),
            "zero" => Ok(Sign::Zero),
            "pos" => Ok(Sign::Positive),
            _ => Err(format!("bad sign tag {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub code_type: CodeType,
    pub n: usize,
    pub m: usize,
    /// `K = floor(n / w)`.
    pub top_index: usize,
    pub highest: Sign,
    pub next_to_highest: Sign,
    /// Sign of slot `m + 2`, absent when `m + 2 > K`.
    pub third_nonzero: Option<Sign>,
    pub first_negative_slot: Option<usize>,
    pub all_nonnegative: bool,
    /// Every slot outside the forced zeros is strictly positive. Forced
    /// zeros are slots `1..=m`, mirrored to `K-m..K-1` for palindromic types.
    pub strictly_positive: bool,
}

impl SignReport {
    pub fn from_enumerator(e: &ExtremalEnumerator) -> Self {
        let c = e.poly.coeffs();
        let top = e.top_slot();
        let m = e.m;
        let first_negative_slot = c.iter().position(|v| v.is_negative());
        let mirrored = palindromic(e.code_type);
        let forced_zero = |k: usize| {
            (1..=m).contains(&k) || (mirrored && k < top && top - k <= m)
        };
        let strictly_positive = c
            .iter()
            .enumerate()
            .all(|(k, v)| if forced_zero(k) { v.is_zero() } else { v.is_positive() });
        SignReport {
            code_type: e.code_type,
            n: e.n,
            m,
            top_index: top,
            highest: Sign::of(&c[top]),
            next_to_highest: if top >= 1 { Sign::of(&c[top - 1]) } else { Sign::Zero },
            third_nonzero: c.get(m + 2).map(Sign::of),
            first_negative_slot,
            all_nonnegative: first_negative_slot.is_none(),
            strictly_positive,
        }
    }

    pub fn step(&self) -> usize {
        type_params(self.code_type).w
    }

    /// Extremal minimum weight `w (m + 1)`.
    pub fn extremal_d(&self) -> usize {
        self.step() * (self.m + 1)
    }

    pub fn third_is_negative(&self) -> bool {
        self.third_nonzero.is_some_and(Sign::is_negative)
    }

    pub fn any_tracked_negative(&self) -> bool {
        self.highest.is_negative() || self.next_to_highest.is_negative() || self.third_is_negative()
    }

    pub fn sign_of(&self, slot: TrackedSlot) -> Option<Sign> {
        match slot {
            TrackedSlot::Highest => Some(self.highest),
            TrackedSlot::NextToHighest => Some(self.next_to_highest),
            TrackedSlot::ThirdNonzero => self.third_nonzero,
        }
    }
}

/// Whether the type's generators are palindromic, making every `W*` satisfy
/// `A*_{n-i} = A*_i`.
pub fn palindromic(t: CodeType) -> bool {
    let p = type_params(t);
    [&p.f, &p.g].iter().all(|g| {
        let c = g.coeffs();
        g.degree() % g.step() == 0 && c.iter().eq(c.iter().rev())
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub n: usize,
    pub excluded: bool,
    /// `(slot, coefficient)` of the smallest-weight negative coefficient.
    pub witness: Option<(usize, BigInt)>,
}

impl Verdict {
    pub fn from_enumerator(e: &ExtremalEnumerator) -> Self {
        let witness = e
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, v)| v.is_negative())
            .map(|(k, v)| (k, v.clone()));
        Verdict { n: e.n, excluded: witness.is_some(), witness }
    }
}

/// Enumerator together with its report and verdict.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub enumerator: ExtremalEnumerator,
    pub report: SignReport,
    pub verdict: Verdict,
}

pub fn analyze(t: CodeType, n: usize) -> Result<Analysis, GleasonError> {
    let enumerator = extremal_enumerator(t, n)?;
    let report = SignReport::from_enumerator(&enumerator);
    let verdict = Verdict::from_enumerator(&enumerator);
    Ok(Analysis { enumerator, report, verdict })
}

pub fn sign_report(t: CodeType, n: usize) -> Result<SignReport, GleasonError> {
    Ok(SignReport::from_enumerator(&extremal_enumerator(t, n)?))
}

pub fn classify(t: CodeType, n: usize) -> Result<Verdict, GleasonError> {
    Ok(Verdict::from_enumerator(&extremal_enumerator(t, n)?))
}

pub fn admissible_lengths(t: CodeType, n_from: usize, n_to: usize) -> Vec<usize> {
    (n_from.max(1)..=n_to).filter(|&n| admissible(t, n)).collect()
}

/// Reports for every admissible `n` in `n_from..=n_to`, ascending.
pub fn scan(t: CodeType, n_from: usize, n_to: usize) -> Vec<SignReport> {
    scan_lengths(t, &admissible_lengths(t, n_from, n_to), &|_| {})
}

/// Reports for the given lengths in the given order, evaluated in parallel
/// on the current rayon pool. `progress` is called once per finished `n`.
pub fn scan_lengths(
    t: CodeType,
    lengths: &[usize],
    progress: &(dyn Fn(usize) + Sync),
) -> Vec<SignReport> {
    lengths
        .par_iter()
        .map(|&n| {
            let r = sign_report(t, n).expect("admissible length");
            progress(n);
            r
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    Thm1,
    Thm2TypeII,
    Thm2TypeIII,
    Prop,
    Thm3,
    RemarkTypeII,
}

impl ClaimId {
    pub const ALL: [ClaimId; 6] = [
        ClaimId::Thm1,
        ClaimId::Thm2TypeII,
        ClaimId::Thm2TypeIII,
        ClaimId::Prop,
        ClaimId::Thm3,
        ClaimId::RemarkTypeII,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ClaimId::Thm1 => "thm1",
            ClaimId::Thm2TypeII => "thm2-ii",
            ClaimId::Thm2TypeIII => "thm2-iii",
            ClaimId::Prop => "prop",
            ClaimId::Thm3 => "thm3",
            ClaimId::RemarkTypeII => "remark-ii",
        }
    }

    pub fn code_type(self) -> CodeType {
        match self {
            ClaimId::Thm2TypeII | ClaimId::RemarkTypeII => CodeType::II,
            _ => CodeType::III,
        }
    }

    pub fn shape(self) -> ClaimShape {
        match self {
            ClaimId::Thm2TypeII | ClaimId::Thm2TypeIII => ClaimShape::Iff,
            _ => ClaimShape::Forward,
        }
    }

    pub fn families(self) -> Vec<Family> {
        use Requirement::*;
        use TrackedSlot::*;
        let fam = |modulus, offset, i_min, i_max, req| Family { modulus, offset, i_min, i_max, requirement: req };
        match self {
            ClaimId::Thm1 => vec![
                fam(24, 0, 3, None, Negative(Highest)),
                fam(24, 4, 7, None, Negative(Highest)),
                fam(24, 12, 11, None, Negative(NextToHighest)),
            ],
            ClaimId::Thm2TypeII => vec![
                fam(24, 0, 154, None, Negative(ThirdNonzero)),
                fam(24, 8, 159, None, Negative(ThirdNonzero)),
                fam(24, 16, 164, None, Negative(ThirdNonzero)),
            ],
            ClaimId::Thm2TypeIII => vec![
                fam(12, 0, 70, None, Negative(ThirdNonzero)),
                fam(12, 4, 75, None, Negative(ThirdNonzero)),
                fam(12, 8, 78, None, Negative(ThirdNonzero)),
            ],
            ClaimId::Prop => vec![
                fam(24, 8, 11, Some(38), Negative(Highest)),
                fam(24, 20, 19, Some(38), Negative(Highest)),
                fam(24, 16, 15, Some(36), Negative(NextToHighest)),
            ],
            ClaimId::Thm3 => vec![
                fam(24, 0, 3, None, AnyTrackedNegative),
                fam(24, 4, 7, None, AnyTrackedNegative),
                fam(24, 8, 11, None, AnyTrackedNegative),
                fam(24, 12, 11, None, AnyTrackedNegative),
                fam(24, 16, 15, None, AnyTrackedNegative),
                fam(24, 20, 19, None, AnyTrackedNegative),
            ],
            ClaimId::RemarkTypeII => vec![
                fam(24, 0, 0, Some(153), StrictlyPositive),
                fam(24, 8, 0, Some(158), StrictlyPositive),
                fam(24, 16, 0, Some(163), StrictlyPositive),
            ],
        }
    }

    /// Smallest cap that covers every boundary of the claim.
    pub fn full_cap(self) -> usize {
        self.families()
            .iter()
            .map(|f| f.i_max.map_or(f.n_at(f.i_min), |hi| f.n_at(hi + 1)))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim {0:?}")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        let alias = match norm.as_str() {
            "thm2-typeii" => "thm2-ii",
            "thm2-typeiii" => "thm2-iii",
            "remark-typeii" | "remark" => "remark-ii",
            other => other,
        };
        ClaimId::ALL
            .into_iter()
            .find(|c| c.tag() == alias)
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

/// How a claim's families relate to the computed signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimShape {
    /// Members satisfy the requirement; nothing asserted elsewhere.
    Forward,
    /// Membership in the union of families is equivalent to the requirement.
    Iff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackedSlot {
    Highest,
    NextToHighest,
    ThirdNonzero,
}

impl fmt::Display for TrackedSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrackedSlot::Highest => "highest",
            TrackedSlot::NextToHighest => "next-to-highest",
            TrackedSlot::ThirdNonzero => "third-nonzero",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    Negative(TrackedSlot),
    AnyTrackedNegative,
    StrictlyPositive,
}

impl Requirement {
    pub fn holds(self, r: &SignReport) -> bool {
        match self {
            Requirement::Negative(s) => r.sign_of(s).is_some_and(Sign::is_negative),
            Requirement::AnyTrackedNegative => r.any_tracked_negative(),
            Requirement::StrictlyPositive => r.strictly_positive,
        }
    }
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Requirement::Negative(s) => write!(f, "{s} negative"),
            Requirement::AnyTrackedNegative => f.write_str("some tracked coefficient negative"),
            Requirement::StrictlyPositive => f.write_str("all coefficients positive"),
        }
    }
}

/// `n = modulus * i + offset` for `i_min <= i (<= i_max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub modulus: usize,
    pub offset: usize,
    pub i_min: usize,
    pub i_max: Option<usize>,
    pub requirement: Requirement,
}

impl Family {
    pub fn n_at(&self, i: usize) -> usize {
        self.modulus * i + self.offset
    }

    /// `Some(i)` if `n` lies on this progression at all.
    pub fn index_of(&self, n: usize) -> Option<usize> {
        (n >= self.offset && (n - self.offset) % self.modulus == 0).then(|| (n - self.offset) / self.modulus)
    }

    pub fn contains(&self, n: usize) -> bool {
        self.index_of(n)
            .is_some_and(|i| i >= self.i_min && self.i_max.map_or(true, |hi| i <= hi))
    }

    /// Neighbours just outside the range: `i_min - 1` and `i_max + 1`.
    pub fn outside_neighbours(&self) -> Vec<usize> {
        let mut v = Vec::new();
        if self.i_min > 0 {
            v.push(self.n_at(self.i_min - 1));
        }
        if let Some(hi) = self.i_max {
            v.push(self.n_at(hi + 1));
        }
        v
    }

    /// The first and last members and the outside neighbours.
    pub fn boundary_lengths(&self) -> Vec<usize> {
        let mut v = vec![self.n_at(self.i_min)];
        if let Some(hi) = self.i_max {
            v.push(self.n_at(hi));
        }
        v.extend(self.outside_neighbours());
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset == 0 {
            write!(f, "n={}i", self.modulus)?;
        } else {
            write!(f, "n={}i+{}", self.modulus, self.offset)?;
        }
        match self.i_max {
            Some(hi) => write!(f, " ({}<=i<={hi})", self.i_min),
            None => write!(f, " (i>={})", self.i_min),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryWitness {
    pub family: String,
    pub n: usize,
    pub member: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimRecord {
    pub claim: ClaimId,
    pub lengths_checked: usize,
    pub max_n: usize,
    pub counterexamples: Vec<Counterexample>,
    pub boundaries: Vec<BoundaryWitness>,
}

impl ClaimRecord {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Lengths to compute so the claim is checked over `n <= n_cap`.
pub fn claim_lengths(c: ClaimId, n_cap: usize) -> Vec<usize> {
    admissible_lengths(c.code_type(), 1, n_cap)
}

/// Judge a claim against precomputed reports of the claim's type. Reports
/// of other types are ignored.
pub fn evaluate_claim(c: ClaimId, reports: &[SignReport]) -> ClaimRecord {
    let t = c.code_type();
    let families = c.families();
    let shape = c.shape();
    let mut counterexamples = Vec::new();
    let mut boundaries = Vec::new();
    let mut checked = 0;
    let mut max_n = 0;

    for r in reports.iter().filter(|r| r.code_type == t) {
        checked += 1;
        max_n = max_n.max(r.n);
        for fam in &families {
            let member = fam.contains(r.n);
            let holds = fam.requirement.holds(r);
            let on_boundary = fam.boundary_lengths().contains(&r.n);
            if on_boundary {
                boundaries.push(BoundaryWitness { family: fam.to_string(), n: r.n, member, holds });
            }
            if member && !holds {
                counterexamples.push(Counterexample {
                    n: r.n,
                    detail: format!("{fam}: expected {} ({})", fam.requirement, observed(r)),
                });
            }
        }
        if shape == ClaimShape::Iff {
            let member = families.iter().any(|f| f.contains(r.n));
            // all families share one requirement
            if !member && families[0].requirement.holds(r) {
                counterexamples.push(Counterexample {
                    n: r.n,
                    detail: format!(
                        "{} although n is outside every family ({})",
                        families[0].requirement,
                        observed(r)
                    ),
                });
            }
        }
    }
    ClaimRecord { claim: c, lengths_checked: checked, max_n, counterexamples, boundaries }
}

fn observed(r: &SignReport) -> String {
    format!(
        "observed highest={} next={} third={}",
        r.highest,
        r.next_to_highest,
        r.third_nonzero.map_or("none", Sign::tag)
    )
}

pub fn verify_claim(c: ClaimId, n_cap: usize) -> ClaimRecord {
    let lengths = claim_lengths(c, n_cap);
    evaluate_claim(c, &scan_lengths(c.code_type(), &lengths, &|_| {}))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossCheckError {
    #[error("cross-boundary check is only defined for Type III, got Type {0}")]
    Unsupported(CodeType),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandOff {
    pub family: &'static str,
    pub n: usize,
    /// The slot the stated range attributes the negativity to.
    pub slot: TrackedSlot,
    pub sign: Option<Sign>,
    /// The coefficient in that slot.
    pub coefficient: Option<BigInt>,
    /// The stated slot is negative.
    pub stated_slot_negative: bool,
    /// Some tracked coefficient is negative, so `n` is excluded.
    pub covered: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossBoundaryRecord {
    pub entries: Vec<HandOff>,
}

impl CrossBoundaryRecord {
    /// No gap: every hand-off length is excluded by a tracked coefficient.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.covered)
    }

    pub fn stated_slots_match(&self) -> bool {
        self.entries.iter().all(|e| e.stated_slot_negative)
    }
}

/// Checks where the finite Type III ranges hand off to the third-nonzero
/// thresholds: 24i+8 at 920/944, 24i+20 at 932/956, 24i+16 at 880/904.
pub fn cross_boundary_check(t: CodeType) -> Result<CrossBoundaryRecord, CrossCheckError> {
    if t != CodeType::III {
        return Err(CrossCheckError::Unsupported(t));
    }
    use TrackedSlot::*;
    let plan: [(&'static str, usize, TrackedSlot); 6] = [
        ("24i+8", 920, Highest),
        ("24i+8", 944, ThirdNonzero),
        ("24i+20", 932, Highest),
        ("24i+20", 956, ThirdNonzero),
        ("24i+16", 880, NextToHighest),
        ("24i+16", 904, ThirdNonzero),
    ];
    let analyses: Vec<Analysis> = plan
        .par_iter()
        .map(|&(_, n, _)| analyze(t, n).expect("admissible"))
        .collect();
    let entries = plan
        .iter()
        .zip(&analyses)
        .map(|(&(family, n, slot), a)| {
            let top = a.report.top_index;
            let k = match slot {
                Highest => Some(top),
                NextToHighest => top.checked_sub(1),
                ThirdNonzero => Some(a.enumerator.m + 2).filter(|&k| k <= top),
            };
            let sign = a.report.sign_of(slot);
            HandOff {
                family,
                n,
                slot,
                sign,
                coefficient: k.map(|k| a.enumerator.poly.coeffs()[k].clone()),
                stated_slot_negative: sign.is_some_and(Sign::is_negative),
                covered: a.report.any_tracked_negative(),
            }
        })
        .collect();
    Ok(CrossBoundaryRecord { entries })
}
