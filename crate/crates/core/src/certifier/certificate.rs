use std::fmt;

use serde::{Deserialize, Serialize};

use super::{HypothesisReport, InstanceEcho};
use crate::valuation::Ratio;

pub const CERT_SCHEMA: &str = "phi-irred-cert/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Irreducible,
    Inconclusive,
    HypothesisFailed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "IRREDUCIBLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::HypothesisFailed => "HYPOTHESIS_FAILED",
        })
    }
}

/// Half-open degree range `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "crate::decimal")]
    pub lo: u64,
    #[serde(with = "crate::decimal")]
    pub hi: u64,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallDegreeStep {
    /// `2n - 1 + c`, which `p0` must divide.
    #[serde(with = "crate::decimal")]
    pub target: u64,
    #[serde(with = "crate::decimal::opt")]
    pub p0: Option<u64>,
    pub a_n_coprime: bool,
    /// Indices `2j`, `j < n`, with `p0 | c_2j`.
    #[serde(with = "crate::decimal::seq")]
    pub divides_c: Vec<u64>,
    pub phi_irreducible: bool,
    pub interval: Interval,
    pub pass: bool,
}

/// One prime tried during a per-k search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    #[serde(with = "crate::decimal")]
    pub p: u64,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    #[serde(with = "crate::decimal")]
    pub k: u64,
    #[serde(with = "crate::decimal")]
    pub l: u64,
    #[serde(with = "crate::decimal")]
    pub threshold: u64,
    #[serde(with = "crate::decimal::opt")]
    pub p: Option<u64>,
    /// Indices `i <= 2n-k` with `c_i != 0`, each divisible by `p`.
    #[serde(with = "crate::decimal::seq")]
    pub divisibility: Vec<u64>,
    pub a_n_coprime: bool,
    pub a0_unit: bool,
    pub phi_irreducible: bool,
    pub polygon_slopes: Vec<Ratio>,
    pub slope: Option<Ratio>,
    pub bound: Ratio,
    pub interval: Interval,
    pub pass: bool,
    pub search_log: Vec<Attempt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub instance: InstanceEcho,
    pub instance_digest: String,
    pub hypotheses: HypothesisReport,
    #[serde(with = "crate::decimal")]
    pub scaled_degree: u64,
    pub scaled_digest: String,
    pub small_degree: Option<SmallDegreeStep>,
    pub steps: Vec<StepRecord>,
    #[serde(with = "crate::decimal::seq")]
    pub failed_k: Vec<u64>,
    pub skeleton: Vec<String>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn step(&self, k: u64) -> Option<&StepRecord> {
        self.steps.iter().find(|s| s.k == k)
    }

    /// Every prime the certificate relies on, in order of appearance.
    pub fn recorded_primes(&self) -> Vec<u64> {
        self.small_degree
            .iter()
            .filter_map(|s| s.p0)
            .chain(self.steps.iter().filter_map(|s| s.p))
            .collect()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inst = &self.instance;
        writeln!(f, "instance  c = {}, n = {}, phi = {}, a_n = {}", inst.c, inst.n, inst.phi, inst.a_n)?;
        for (i, a) in inst.lower_coeffs.iter().enumerate() {
            writeln!(f, "          a_{i}(x) = {a}")?;
        }
        writeln!(f, "digest    {}", self.instance_digest)?;
        writeln!(f, "F         degree {}, sha256 {}", self.scaled_degree, self.scaled_digest)?;
        let failures = self.hypotheses.failures();
        if failures.is_empty() {
            writeln!(f, "hypotheses pass ({})", self.hypotheses.bound.describe())?;
        } else {
            for msg in failures {
                writeln!(f, "hypotheses FAIL: {msg}")?;
            }
        }
        if let Some(s) = &self.small_degree {
            match s.p0 {
                Some(p0) => writeln!(f, "small     p0 = {p0} | {}, excludes degrees {}", s.target, s.interval)?,
                None => writeln!(f, "small     no usable prime divides {}", s.target)?,
            }
        }
        for s in &self.steps {
            match (s.p, &s.slope) {
                (Some(p), Some(slope)) => writeln!(
                    f,
                    "k = {:<3}  p = {p}, slope {slope} < {}, excludes degrees {}",
                    s.k, s.bound, s.interval
                )?,
                _ => writeln!(
                    f,
                    "k = {:<3}  no prime in [{}, {}) works ({} tried)",
                    s.k,
                    s.threshold,
                    2 * inst.n + inst.c,
                    s.search_log.len()
                )?,
            }
        }
        for line in &self.skeleton {
            writeln!(f, "  . {line}")?;
        }
        write!(f, "verdict   {}", self.verdict)
    }
}
