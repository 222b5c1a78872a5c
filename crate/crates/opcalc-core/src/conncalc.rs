//! Symbolic connectivity calculus for stable first-order excision bounds.
//!
//! Everything here is integer arithmetic about hypotheses, not about spaces:
//! a verdict certifies that the stated growth condition holds for the given
//! profile, never that any map of spaces is an equivalence.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The pair `(c, κ)` of a stable first-order excision bound `E₁(c, κ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcisionHypothesis {
    pub c: i64,
    pub kappa: i64,
}

impl ExcisionHypothesis {
    pub fn new(c: i64, kappa: i64) -> Self {
        ExcisionHypothesis { c, kappa }
    }
}

/// One loop-suspension conjugation step: `E₁(c, κ)` becomes `E₁(c−1, κ−1)`.
pub fn apply_t1(h: ExcisionHypothesis) -> ExcisionHypothesis {
    ExcisionHypothesis {
        c: h.c - 1,
        kappa: h.kappa - 1,
    }
}

/// The closed form of `i` iterations.
pub fn apply_t1_iterated(h: ExcisionHypothesis, i: i64) -> ExcisionHypothesis {
    ExcisionHypothesis {
        c: h.c - i,
        kappa: h.kappa - i,
    }
}

/// Connectivity of the stage map on `(ℓ−1)`-connected inputs: `−c + 2ℓ`
/// when `ℓ ≥ κ`, undefined otherwise.
pub fn t1_connectivity(h: ExcisionHypothesis, ell: i64) -> Option<i64> {
    if ell >= h.kappa {
        Some(-h.c + 2 * ell)
    } else {
        None
    }
}

/// An extended integer connectivity value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Conn {
    Finite(i64),
    Infinity(InfinityTag),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InfinityTag {
    #[serde(rename = "inf")]
    Inf,
}

impl Conn {
    pub fn infinity() -> Self {
        Conn::Infinity(InfinityTag::Inf)
    }

    pub fn as_finite(&self) -> Option<i64> {
        match self {
            Conn::Finite(v) => Some(*v),
            Conn::Infinity(_) => None,
        }
    }
}

/// Stagewise connectivity bounds, one per index `0..=N`, with the input
/// connectivity parameter they were derived at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityProfile {
    pub ell: i64,
    pub stages: Vec<Conn>,
}

/// A bound for a multivariable diagram, recorded as a function of the tuple
/// norm `|x|` on `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiProfile {
    pub q: usize,
    pub bound: Vec<Conn>,
}

/// Stage connectivities `i − c + 2ℓ` for `i = 0..=n`. Requires `ℓ ≥ κ`.
pub fn iterate_profile(
    h: ExcisionHypothesis,
    ell: i64,
    n: usize,
) -> Result<ConnectivityProfile> {
    if ell < h.kappa {
        return Err(Error::HypothesisNotApplicable(format!(
            "stage connectivities need ℓ ≥ κ, got ℓ = {ell}, κ = {}",
            h.kappa
        )));
    }
    let stages = (0..=n as i64)
        .map(|i| Conn::Finite(i - h.c + 2 * ell))
        .collect();
    Ok(ConnectivityProfile { ell, stages })
}

/// Outcome of testing the colimit-comparison criterion on a profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    /// The bound is eventually strictly growing (or infinite) on the tested
    /// range, with the certified integer slope of the tail.
    #[serde(rename = "criterion satisfied")]
    Satisfied {
        tail_start: usize,
        /// Minimal consecutive increment on the tail; absent when the tail
        /// is infinite throughout.
        slope: Option<i64>,
    },
    /// No growing tail exists in the data; the last offending window is
    /// reported.
    #[serde(rename = "not established")]
    NotEstablished { failing_window: Option<(usize, usize)> },
}

impl Verdict {
    pub fn satisfied(&self) -> bool {
        matches!(self, Verdict::Satisfied { .. })
    }
}

/// Tests whether the data certifies `n_{|x|} → ∞`: some tail must grow
/// strictly in every step (an infinite value may only be followed by
/// infinite values). The certified slope is the least increment on the
/// tail, at least 1 by integrality.
///
/// A profile shorter than two entries carries no growth evidence and is
/// rejected.
pub fn bokstedt_verdict(stages: &[Conn]) -> Verdict {
    if stages.len() < 2 {
        return Verdict::NotEstablished {
            failing_window: None,
        };
    }
    let good = |a: &Conn, b: &Conn| match (a, b) {
        (_, Conn::Infinity(_)) => true,
        (Conn::Infinity(_), Conn::Finite(_)) => false,
        (Conn::Finite(x), Conn::Finite(y)) => y > x,
    };
    let mut failing_window = None;
    let mut tail_start = 0;
    for i in 0..stages.len() - 1 {
        if !good(&stages[i], &stages[i + 1]) {
            failing_window = Some((i, i + 1));
            tail_start = i + 1;
        }
    }
    if tail_start + 1 >= stages.len() {
        return Verdict::NotEstablished { failing_window };
    }
    let slope = stages[tail_start..]
        .windows(2)
        .filter_map(|w| match (w[0].as_finite(), w[1].as_finite()) {
            (Some(a), Some(b)) => Some(b - a),
            _ => None,
        })
        .min();
    Verdict::Satisfied { tail_start, slope }
}

/// A catalog entry of a hypothesis taken as stated, without reinterpreting
/// its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ExampleHypothesis {
    /// The identity functor: stably 1-excisive with symbolic constants.
    #[serde(rename = "identity")]
    Identity { basis: String, constants: String },
    /// A mapping-space functor out of a `k`-dimensional complex: the bound
    /// is recorded verbatim as the expression `kn` with `κ = −1`; the
    /// `n`-dependence is kept symbolic.
    #[serde(rename = "mapping-space")]
    MappingSpace { dim_k: i64, c_expr: String, kappa: i64 },
}

/// The mapping-space entry for a specific source dimension.
pub fn mapping_space_hypothesis(dim_k: i64) -> ExampleHypothesis {
    ExampleHypothesis::MappingSpace {
        dim_k,
        c_expr: format!("{dim_k}*n"),
        kappa: -1,
    }
}

/// The bundled hypothesis catalog: the identity functor and the
/// mapping-space family at small source dimensions.
pub fn example_hypotheses() -> Vec<ExampleHypothesis> {
    let mut out = vec![ExampleHypothesis::Identity {
        basis: "Blakers-Massey".into(),
        constants: "symbolic".into(),
    }];
    for k in 0..=2 {
        out.push(mapping_space_hypothesis(k));
    }
    out
}
