//! Checks of the closed-form hull numbers and bounds for complementary
//! prisms against the exact solver, on concretely generated instances.
//!
//! Each check produces one [`TheoremCheck`]; a [`Report`] renders them as
//! one line each:
//!
//! ```text
//! T9 prism(theorem9:4) expected=eq:4 observed=4 verdict=pass slack=- detail=g_connected,complement_connected
//! ```

mod checks;
pub mod corpus;

use std::fmt;
use std::str::FromStr;

pub use checks::Harness;

use crate::solver::HullReport;

/// The result a check is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Simplicial vertices lie in every hull set.
    L1,
    /// Every hull set of a prism meets `{u, ū}` when both are simplicial.
    L2,
    /// Prism of `K_n`.
    T2_1,
    /// Prism of `P_n`.
    T2_2,
    /// Prism of `C_n`.
    T2_3,
    /// Prisms of trees.
    T3,
    /// Disconnected, at least two nontrivial components.
    T4,
    /// One nontrivial component: lower bound.
    T5,
    /// One nontrivial component of diameter at most 3: upper bound.
    T6a,
    /// One nontrivial component of diameter above 3: upper bound.
    T6b,
    /// Upper bound via the complement of the nontrivial component.
    T7,
    /// Equality when the nontrivial component has diameter above 3.
    C1,
    /// Combined upper bound.
    C2,
    /// Connected cograph, complement without nontrivial components.
    T8i,
    /// Connected cograph, complement with one nontrivial component.
    T8ii,
    /// Connected cograph, complement with at least two nontrivial components.
    T8iii,
    /// Prisms of the pendant-clique gadget.
    T9,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::L1,
        TheoremId::L2,
        TheoremId::T2_1,
        TheoremId::T2_2,
        TheoremId::T2_3,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6a,
        TheoremId::T6b,
        TheoremId::T7,
        TheoremId::C1,
        TheoremId::C2,
        TheoremId::T8i,
        TheoremId::T8ii,
        TheoremId::T8iii,
        TheoremId::T9,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::L1 => "L1",
            TheoremId::L2 => "L2",
            TheoremId::T2_1 => "T2.1",
            TheoremId::T2_2 => "T2.2",
            TheoremId::T2_3 => "T2.3",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6a => "T6a",
            TheoremId::T6b => "T6b",
            TheoremId::T7 => "T7",
            TheoremId::C1 => "C1",
            TheoremId::C2 => "C2",
            TheoremId::T8i => "T8i",
            TheoremId::T8ii => "T8ii",
            TheoremId::T8iii => "T8iii",
            TheoremId::T9 => "T9",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown theorem id `{}`", self.0)
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, UnknownTheorem> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// What a check expects of the observed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Equal(usize),
    AtLeast(usize),
    AtMost(usize),
    /// Inclusive range.
    Between(usize, usize),
    /// A lemma: no minimum hull set violates it.
    NoViolations,
}

impl Expectation {
    fn holds(self, value: usize) -> bool {
        match self {
            Expectation::Equal(e) => value == e,
            Expectation::AtLeast(lo) => value >= lo,
            Expectation::AtMost(hi) => value <= hi,
            Expectation::Between(lo, hi) => lo <= value && value <= hi,
            Expectation::NoViolations => value == 0,
        }
    }

    /// Distance from the bound on the satisfied side; `None` for equalities.
    fn slack(self, value: usize) -> Option<i64> {
        let v = value as i64;
        match self {
            Expectation::AtLeast(b) => Some(v - b as i64),
            Expectation::AtMost(b) => Some(b as i64 - v),
            Expectation::Between(a, b) => Some((v - a as i64).min(b as i64 - v)),
            Expectation::Equal(_) | Expectation::NoViolations => None,
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Equal(v) => write!(f, "eq:{v}"),
            Expectation::AtLeast(v) => write!(f, "ge:{v}"),
            Expectation::AtMost(v) => write!(f, "le:{v}"),
            Expectation::Between(a, b) => write!(f, "range:{a}..{b}"),
            Expectation::NoViolations => f.write_str("violations:0"),
        }
    }
}

/// What was measured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Observation {
    Hull(HullReport),
    Lemma {
        hull_number: usize,
        minimum_sets: usize,
        violations: usize,
    },
}

impl Observation {
    /// The value compared against the expectation.
    pub fn value(&self) -> usize {
        match self {
            Observation::Hull(r) => r.hull_number,
            Observation::Lemma { violations, .. } => *violations,
        }
    }
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observation::Hull(r) => write!(f, "{}", r.hull_number),
            Observation::Lemma {
                hull_number,
                minimum_sets,
                violations,
            } => write!(
                f,
                "violations:{violations}/sets:{minimum_sets}/h:{hull_number}"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    /// The instance does not meet the result's hypothesis.
    NotApplicable,
    /// The instance is not of the kind the check accepts, or the solver
    /// refused it.
    Invalid,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
            Verdict::Invalid => "invalid",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    /// Family text of the checked graph.
    pub instance: String,
    pub expected: Option<Expectation>,
    pub observed: Option<Observation>,
    pub verdict: Verdict,
    /// For inequalities: how far the observation is from the bound.
    pub slack: Option<i64>,
    /// Classification data recomputed from the graph, `key=value` joined by commas.
    pub detail: String,
}

impl TheoremCheck {
    /// Builds a check whose verdict follows from `expected` and `observed`.
    pub fn judged(
        theorem: TheoremId,
        instance: String,
        expected: Expectation,
        observed: Observation,
        detail: String,
    ) -> Self {
        let value = observed.value();
        let verdict = if expected.holds(value) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            theorem,
            instance,
            expected: Some(expected),
            slack: expected.slack(value),
            observed: Some(observed),
            verdict,
            detail,
        }
    }

    pub fn unjudged(
        theorem: TheoremId,
        instance: String,
        verdict: Verdict,
        observed: Option<Observation>,
        detail: String,
    ) -> Self {
        Self {
            theorem,
            instance,
            expected: None,
            observed,
            verdict,
            slack: None,
            detail,
        }
    }
}

fn or_dash<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

impl fmt::Display for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} expected={} observed={} verdict={} slack={} detail={}",
            self.theorem,
            self.instance,
            or_dash(&self.expected),
            or_dash(&self.observed),
            self.verdict,
            or_dash(&self.slack),
            if self.detail.is_empty() {
                "-"
            } else {
                &self.detail
            },
        )
    }
}

/// An ordered list of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<TheoremCheck>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn of(&self, id: TheoremId) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(move |c| c.theorem == id)
    }

    /// One line per check, newline terminated.
    pub fn render(&self) -> String {
        self.checks.iter().map(|c| format!("{c}\n")).collect()
    }
}
