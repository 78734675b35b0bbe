//! A claim registry that mechanically checks the structural statements
//! about (1 - 2u^k)-constacyclic codes over R on a parameter grid —
//! exhaustively where the stated domain fits under a cap, by seeded
//! sampling otherwise — and emits verdicts with independently
//! re-checkable counterexamples.
//!
//! A failing verdict is a finding, not an error: the suite's job is to
//! measure which identities hold for the literal definitions, and every
//! `fails` row carries the raw inputs plus both sides of the violated
//! identity so that [`recheck_counterexample`] can reproduce it from
//! scratch.

mod checks;
mod domains;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Identifiers of the checked claims.  The short codes are the library's
/// stable external names for the statements (see README for the mapping
/// to plain-language descriptions).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    T1_1,
    T2_1,
    T2_2,
    P2_3,
    P2_4,
    T2_5,
    T2_6,
    T2_7,
    L2_8,
    T2_9a,
    T2_9b,
    T2_10,
    C2_11,
    T2_12,
    C2_13,
    C2_14,
    P2_16,
    C2_17,
    C2_18,
    E2_19,
    NoteParity,
}

/// Registry order: the canonical listing and report order.
pub const ALL_CLAIMS: [ClaimId; 21] = [
    ClaimId::T1_1,
    ClaimId::T2_1,
    ClaimId::T2_2,
    ClaimId::P2_3,
    ClaimId::P2_4,
    ClaimId::T2_5,
    ClaimId::T2_6,
    ClaimId::T2_7,
    ClaimId::L2_8,
    ClaimId::T2_9a,
    ClaimId::T2_9b,
    ClaimId::T2_10,
    ClaimId::C2_11,
    ClaimId::T2_12,
    ClaimId::C2_13,
    ClaimId::C2_14,
    ClaimId::P2_16,
    ClaimId::C2_17,
    ClaimId::C2_18,
    ClaimId::E2_19,
    ClaimId::NoteParity,
];

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::T1_1 => "T1.1",
            ClaimId::T2_1 => "T2.1",
            ClaimId::T2_2 => "T2.2",
            ClaimId::P2_3 => "P2.3",
            ClaimId::P2_4 => "P2.4",
            ClaimId::T2_5 => "T2.5",
            ClaimId::T2_6 => "T2.6",
            ClaimId::T2_7 => "T2.7",
            ClaimId::L2_8 => "L2.8",
            ClaimId::T2_9a => "T2.9a",
            ClaimId::T2_9b => "T2.9b",
            ClaimId::T2_10 => "T2.10",
            ClaimId::C2_11 => "C2.11",
            ClaimId::T2_12 => "T2.12",
            ClaimId::C2_13 => "C2.13",
            ClaimId::C2_14 => "C2.14",
            ClaimId::P2_16 => "P2.16",
            ClaimId::C2_17 => "C2.17",
            ClaimId::C2_18 => "C2.18",
            ClaimId::E2_19 => "E2.19",
            ClaimId::NoteParity => "NOTE-parity",
        }
    }

    pub fn parse(s: &str) -> Result<ClaimId> {
        ALL_CLAIMS
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }

    /// One-line statement of what is being checked.
    pub fn description(self) -> &'static str {
        match self {
            ClaimId::T1_1 => {
                "a code is invariant under the constacyclic shift exactly when its polynomial \
                 representation is closed under multiplication by a"
            }
            ClaimId::T2_1 => {
                "the Gray map intertwines the constacyclic shift with the cyclic shift of the \
                 image space"
            }
            ClaimId::T2_2 => "the Gray image of a constacyclic code is a cyclic code",
            ClaimId::P2_3 => "a code is constacyclic exactly when its dual is constacyclic",
            ClaimId::P2_4 => "the Gray image of a self-orthogonal code is self-orthogonal",
            ClaimId::T2_5 => {
                "a code is constacyclic exactly when its first component is cyclic and its \
                 other two components are negacyclic"
            }
            ClaimId::T2_6 => {
                "the sigma-weighted component generators span the code, whose size is \
                 p^(3m - sum of generator degrees)"
            }
            ClaimId::T2_7 => {
                "each constacyclic code is generated by the single sigma-combined polynomial"
            }
            ClaimId::L2_8 => {
                "multiplying the generator by a polynomial coprime to its cofactor does not \
                 change the generated ideal"
            }
            ClaimId::T2_9a => {
                "the sigma-combined generator times the sigma-combined cofactor equals a^m \
                 minus the unit"
            }
            ClaimId::T2_9b => {
                "slotwise coprimality with the cofactors lifts to an exact Bezout identity for \
                 the sigma-combined polynomials"
            }
            ClaimId::T2_10 => "the dual code decomposes into the duals of the three components",
            ClaimId::C2_11 => {
                "the dual is generated by the reciprocals of the cofactors, in triple and \
                 single-generator form, with size p^(sum of generator degrees)"
            }
            ClaimId::T2_12 => {
                "substituting unit*a for a is a ring isomorphism between the cyclic and \
                 constacyclic quotients (odd length)"
            }
            ClaimId::C2_13 => {
                "ideals of the cyclic quotient correspond to ideals of the constacyclic \
                 quotient under the substitution map (odd length)"
            }
            ClaimId::C2_14 => {
                "the coordinatewise unit-power scaling exchanges cyclic and constacyclic codes \
                 (odd length)"
            }
            ClaimId::P2_16 => {
                "the Gray map intertwines the coordinatewise scaling with the Nechaev \
                 permutation (odd length)"
            }
            ClaimId::C2_17 => {
                "applying the Nechaev permutation to the Gray image of a cyclic code yields a \
                 cyclic code (odd length)"
            }
            ClaimId::C2_18 => {
                "the Gray image of a cyclic code of odd length is equivalent to a cyclic code"
            }
            ClaimId::E2_19 => {
                "the displayed factorization of a^7 - 1 into three named factors holds over \
                 the base field"
            }
            ClaimId::NoteParity => {
                "odd powers of the unit equal the unit and even powers equal one"
            }
        }
    }

    /// Whether the claim quantifies over a code/vector length m.
    pub fn uses_m(self) -> bool {
        !matches!(self, ClaimId::E2_19 | ClaimId::NoteParity)
    }

    /// Whether the claim is stated only for odd m.
    pub fn odd_m_only(self) -> bool {
        matches!(
            self,
            ClaimId::T2_12
                | ClaimId::C2_13
                | ClaimId::C2_14
                | ClaimId::P2_16
                | ClaimId::C2_17
                | ClaimId::C2_18
        )
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClaimId> {
        ClaimId::parse(s)
    }
}

/// How a domain was covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Sampled,
}

/// Verdict of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "fails")]
    Fails,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

/// Enumeration and sampling limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest domain enumerated exhaustively (work units).
    pub enum_cap: u64,
    /// Number of seeded draws when a domain exceeds `enum_cap`.
    pub sample_size: u64,
    /// Largest codeword count enumerated for minimum-distance searches.
    pub distance_cap: u64,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { enum_cap: 100_000, sample_size: 1_000, distance_cap: 1_000_000 }
    }
}

/// Per-direction accounting for biconditional claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionReport {
    pub direction: String,
    /// Cases where this direction's hypothesis held and the conclusion was
    /// actually exercised.
    pub checked: u64,
    pub violations: u64,
}

/// Raw inputs plus both sides of a violated identity — everything needed
/// to re-derive the violation from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// A pointwise identity on a vector over R: two image-space sides.
    VectorPair {
        p: u32,
        k: u32,
        m: u32,
        /// R-vector, one ascending coefficient list per coordinate.
        vector: Vec<Vec<u32>>,
        lhs: Vec<u32>,
        rhs: Vec<u32>,
    },
    /// A divisor-triple-generated code whose (possibly permuted) Gray
    /// image contains `witness` but not its cyclic shift `shifted`.
    TripleWitness {
        p: u32,
        k: u32,
        m: u32,
        h1: Vec<u32>,
        h2: Vec<u32>,
        h3: Vec<u32>,
        witness: Vec<u32>,
        shifted: Vec<u32>,
    },
    /// A divisor triple violating a code-level condition.
    CodeCondition {
        p: u32,
        k: u32,
        m: u32,
        h1: Vec<u32>,
        h2: Vec<u32>,
        h3: Vec<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        g1: Option<Vec<u32>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        g2: Option<Vec<u32>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        g3: Option<Vec<u32>>,
        condition: String,
    },
    /// An R-submodule (by generator rows) violating a code-level
    /// condition; `w1`, `w2` optionally carry an offending image pair.
    SubmoduleCondition {
        p: u32,
        k: u32,
        m: u32,
        generators: Vec<Vec<Vec<u32>>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        w1: Option<Vec<u32>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        w2: Option<Vec<u32>>,
        condition: String,
    },
    /// A pair of quotient-ring elements violating an isomorphism law.
    MuPair {
        p: u32,
        k: u32,
        m: u32,
        f: Vec<Vec<u32>>,
        g: Vec<Vec<u32>>,
        condition: String,
    },
    /// A polynomial identity over F_p with both sides and their
    /// difference (ascending coefficients).
    PolyIdentity {
        p: u32,
        lhs: Vec<u32>,
        rhs: Vec<u32>,
        difference: Vec<u32>,
    },
}

/// The outcome of checking one claim at one grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub claim: String,
    pub p: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub seed: u64,
    pub strategy: Strategy,
    pub status: Status,
    pub evidence_count: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directions: Option<Vec<DirectionReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// The (p, k, m) grid a suite run covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub ps: Vec<u32>,
    pub ks: Vec<u32>,
    pub ms: Vec<u32>,
}

impl Grid {
    /// p in {3, 5}, k = 2, m in {1, 2, 3}.
    pub fn default_grid() -> Grid {
        Grid { ps: vec![3, 5], ks: vec![2], ms: vec![1, 2, 3] }
    }

    pub fn is_empty(&self) -> bool {
        self.ps.is_empty() || self.ks.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Summary {
    pub holds: u64,
    pub fails: u64,
    pub not_applicable: u64,
}

/// A full suite run: configuration plus one row per (claim, grid point).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub grid: Grid,
    pub caps: Caps,
    pub checks: Vec<TheoremCheck>,
    pub summary: Summary,
}

pub(super) struct Outcome {
    pub strategy: Strategy,
    pub evidence: u64,
    pub violations: u64,
    pub directions: Option<Vec<DirectionReport>>,
    pub counterexample: Option<Counterexample>,
    pub reason: Option<String>,
    pub applicable: bool,
}

impl Outcome {
    pub(super) fn not_applicable(reason: &str) -> Outcome {
        Outcome {
            strategy: Strategy::Exhaustive,
            evidence: 0,
            violations: 0,
            directions: None,
            counterexample: None,
            reason: Some(reason.to_string()),
            applicable: false,
        }
    }
}

/// Check a single claim at one grid point.  `m` is required exactly when
/// [`ClaimId::uses_m`] is true.  Failing claims yield `Ok` rows with
/// status `fails`; `Err` is reserved for unusable parameters.
pub fn check(
    id: ClaimId,
    p: u32,
    k: u32,
    m: Option<u32>,
    seed: u64,
    caps: &Caps,
) -> Result<TheoremCheck> {
    let m_used = if id.uses_m() {
        match m {
            Some(0) => return Err(Error::InvalidLength(0)),
            Some(v) => Some(v),
            None => return Err(Error::BadPayload(format!("claim {} requires m", id))),
        }
    } else {
        None
    };
    let outcome = checks::run(id, p, k, m_used, seed, caps)?;
    let status = if !outcome.applicable {
        Status::NotApplicable
    } else if outcome.violations == 0 {
        Status::Holds
    } else {
        Status::Fails
    };
    Ok(TheoremCheck {
        claim: id.as_str().to_string(),
        p,
        k,
        m: m_used,
        seed,
        strategy: outcome.strategy,
        status,
        evidence_count: outcome.evidence,
        violations: outcome.violations,
        directions: outcome.directions,
        reason: outcome.reason,
        counterexample: outcome.counterexample,
    })
}

/// Run every registered claim over the grid: one row per (claim, p, k, m)
/// for length-dependent claims, one per (claim, p, k) otherwise, in
/// registry order then grid order.
pub fn run_suite(grid: &Grid, seed: u64, caps: &Caps) -> Result<SuiteReport> {
    run_claims(&ALL_CLAIMS, grid, seed, caps)
}

/// [`run_suite`] restricted to a chosen subset of the registry, in the
/// order given.
pub fn run_claims(
    claims: &[ClaimId],
    grid: &Grid,
    seed: u64,
    caps: &Caps,
) -> Result<SuiteReport> {
    let mut checks_out = Vec::new();
    for &id in claims {
        for &p in &grid.ps {
            for &k in &grid.ks {
                if id.uses_m() {
                    for &m in &grid.ms {
                        checks_out.push(check(id, p, k, Some(m), seed, caps)?);
                    }
                } else {
                    checks_out.push(check(id, p, k, None, seed, caps)?);
                }
            }
        }
    }
    let mut summary = Summary::default();
    for row in &checks_out {
        match row.status {
            Status::Holds => summary.holds += 1,
            Status::Fails => summary.fails += 1,
            Status::NotApplicable => summary.not_applicable += 1,
        }
    }
    Ok(SuiteReport { seed, grid: grid.clone(), caps: *caps, checks: checks_out, summary })
}

/// Re-evaluate a failing row's violated identity from its raw inputs.
/// Returns true when the violation still holds for the stored data.
/// Tampered payloads yield `Ok(false)` or a schema error — never a panic.
pub fn recheck_counterexample(row: &TheoremCheck) -> Result<bool> {
    if row.status != Status::Fails {
        return Err(Error::BadPayload(format!(
            "row has status {:?}; only failing rows carry counterexamples",
            row.status
        )));
    }
    let ce = row
        .counterexample
        .as_ref()
        .ok_or_else(|| Error::BadPayload("failing row lacks a counterexample".to_string()))?;
    let id = ClaimId::parse(&row.claim)?;
    checks::recheck(id, ce)
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("static schema serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<SuiteReport> {
        serde_json::from_str(text).map_err(|e| Error::BadPayload(e.to_string()))
    }

    /// Human-readable fixed-width table with a trailing summary line.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<12} {:>3} {:>2} {:>2}  {:<10} {:<14} {:>9} {:>10}  note",
            "claim", "p", "k", "m", "strategy", "status", "evidence", "violations"
        );
        let _ = writeln!(out, "{}", "-".repeat(88));
        for row in &self.checks {
            let strategy = match row.strategy {
                Strategy::Exhaustive => "exhaustive",
                Strategy::Sampled => "sampled",
            };
            let status = match row.status {
                Status::Holds => "holds",
                Status::Fails => "fails",
                Status::NotApplicable => "not-applicable",
            };
            let note = if let Some(reason) = &row.reason {
                reason.clone()
            } else if row.counterexample.is_some() {
                "counterexample recorded".to_string()
            } else {
                String::new()
            };
            let _ = writeln!(
                out,
                "{:<12} {:>3} {:>2} {:>2}  {:<10} {:<14} {:>9} {:>10}  {}",
                row.claim,
                row.p,
                row.k,
                row.m.map_or_else(|| "-".to_string(), |m| m.to_string()),
                strategy,
                status,
                row.evidence_count,
                row.violations,
                note
            );
        }
        let _ = writeln!(
            out,
            "{} rows: {} holds, {} fails, {} not-applicable",
            self.checks.len(),
            self.summary.holds,
            self.summary.fails,
            self.summary.not_applicable
        );
        out
    }
}
