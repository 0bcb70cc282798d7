//! Aggregated evaluation of every bound that applies to a state.
//!
//! Each [`BoundEntry`] compares `lhs` with `rhs`. Entries whose name ends in
//! `_lower` or starts with `ckw_` assert `lhs >= rhs`; all others assert
//! `lhs <= rhs`. `slack` is the difference on the satisfied side, so an entry
//! is satisfied iff `slack >= -tolerance`.

use std::fmt::Write as _;

use serde::Serialize;

use super::wclass::{is_wclass, wclass_bounds_from};
use super::{role_name, Analysis, ROLE_A, ROLE_B, ROLE_C1};
use crate::entanglement::{bipartite_concurrence_squared, ConcurrenceKind, ConcurrenceValue};
use crate::error::Result;
use crate::state::PureState;
use crate::tolerance;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub inequality: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub satisfied: bool,
}

impl BoundEntry {
    /// `lhs >= rhs`.
    pub fn at_least(inequality: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::with_slack(inequality.into(), lhs, rhs, lhs - rhs, tolerance)
    }

    /// `lhs <= rhs`.
    pub fn at_most(inequality: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::with_slack(inequality.into(), lhs, rhs, rhs - lhs, tolerance)
    }

    fn with_slack(inequality: String, lhs: f64, rhs: f64, slack: f64, tolerance: f64) -> Self {
        Self {
            inequality,
            lhs,
            rhs,
            slack,
            satisfied: slack >= -tolerance,
        }
    }
}

/// A concurrence used by some entry, keyed by its subsystem, e.g. `A,C1` or `AB|C1,C2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Component {
    pub subsystem: String,
    #[serde(flatten)]
    pub concurrence: ConcurrenceValue,
    pub squared: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub state_id: String,
    pub n_qubits: usize,
    pub tolerance: f64,
    pub entries: Vec<BoundEntry>,
    pub components: Vec<Component>,
}

#[derive(Debug, Clone)]
pub struct EvalOptions {
    pub state_id: String,
    pub tolerance: f64,
    /// `roles[k]` is the physical qubit playing role `k` (`A`, `B`, `C1`, ...).
    pub roles: Option<Vec<usize>>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            state_id: "state".to_string(),
            tolerance: tolerance::INEQUALITY,
            roles: None,
        }
    }
}

/// Evaluates every applicable bound with identity role order and the default tolerance.
pub fn evaluate_all(state: &PureState) -> Result<BoundReport> {
    evaluate_with(state, &EvalOptions::default())
}

pub fn evaluate_with(state: &PureState, options: &EvalOptions) -> Result<BoundReport> {
    let permuted;
    let state = match &options.roles {
        Some(order) => {
            permuted = state.permute_qubits(order)?;
            &permuted
        }
        None => state,
    };
    let analysis = Analysis::new(state)?;
    let n = state.n_qubits();
    let tol = options.tolerance;
    let mut entries = Vec::new();

    let ab = analysis.ab_rest();
    let t1 = analysis.theorem1_lower();
    entries.push(BoundEntry::at_least("theorem1_lower", ab, t1.raw, tol));
    entries.push(BoundEntry::at_least("theorem1_lower_clamped", ab, t1.clamped(), tol));
    entries.push(BoundEntry::at_most(
        "theorem2_upper",
        ab,
        analysis.theorem2_upper(),
        tol,
    ));

    let chain = analysis.inequality_chain();
    entries.push(BoundEntry::at_least("chain_lower", chain.mid, chain.lower, tol));
    entries.push(BoundEntry::at_most("chain_upper", chain.mid, chain.upper, tol));

    // T(ρ) = C²/2 for the marginal of a pure state.
    let (t_a, t_b, t_ab) = (analysis.a_rest() / 2.0, analysis.b_rest() / 2.0, ab / 2.0);
    entries.push(BoundEntry::at_least(
        "linear_entropy_lower",
        t_ab,
        (t_a - t_b).abs(),
        tol,
    ));
    entries.push(BoundEntry::at_most("linear_entropy_upper", t_ab, t_a + t_b, tol));

    let mut single_cuts = Vec::with_capacity(n);
    for focus in 0..n {
        let whole = bipartite_concurrence_squared(state, &[focus])?;
        single_cuts.push(whole);
        let partners = || (0..n).filter(move |&p| p != focus);
        let pairwise: f64 = partners().map(|p| analysis.c2(focus, p)).sum();
        let assisted: f64 = partners().map(|p| analysis.ca2(focus, p)).sum();
        let role = role_name(focus);
        entries.push(BoundEntry::at_least(format!("ckw_{role}"), whole, pairwise, tol));
        entries.push(BoundEntry::at_most(
            format!("dual_monogamy_{role}"),
            whole,
            assisted,
            tol,
        ));
    }

    if n >= 4 {
        let abc1 = analysis.abc1_rest()?;
        let cor1 = analysis.corollary1_lower()?;
        let cor2 = analysis.corollary2_lower()?;
        entries.push(BoundEntry::at_least("corollary1_lower", abc1, cor1.raw, tol));
        entries.push(BoundEntry::at_least(
            "corollary1_lower_clamped",
            abc1,
            cor1.clamped(),
            tol,
        ));
        entries.push(BoundEntry::at_least("corollary2_lower", abc1, cor2.raw, tol));
        entries.push(BoundEntry::at_least(
            "corollary2_lower_clamped",
            abc1,
            cor2.clamped(),
            tol,
        ));
        entries.push(BoundEntry::at_most(
            "corollary2_upper",
            abc1,
            analysis.corollary2_upper()?,
            tol,
        ));
    }

    let wclass = is_wclass(state);
    if wclass {
        for i in 0..n {
            for j in i + 1..n {
                let pair = format!("{}_{}", role_name(i), role_name(j));
                let ws = wclass_bounds_from(&analysis, state, i, j)?;
                entries.push(BoundEntry::at_least(
                    format!("wclass_lower_{pair}"),
                    ws.mid,
                    ws.lower,
                    tol,
                ));
                entries.push(BoundEntry::at_most(
                    format!("wclass_upper_{pair}"),
                    ws.mid,
                    ws.upper,
                    tol,
                ));
            }
        }
    }

    Ok(BoundReport {
        state_id: options.state_id.clone(),
        n_qubits: n,
        tolerance: tol,
        entries,
        components: components(state, &analysis, &single_cuts, wclass)?,
    })
}

fn components(state: &PureState, analysis: &Analysis, single_cuts: &[f64], wclass: bool) -> Result<Vec<Component>> {
    let n = state.n_qubits();
    let mut out = Vec::new();
    let mut push = |subsystem: String, value: f64, kind: ConcurrenceKind| {
        let concurrence = ConcurrenceValue::new(value, kind);
        out.push(Component {
            subsystem,
            squared: concurrence.squared(),
            concurrence,
        });
    };
    for p in 0..n {
        for q in p + 1..n {
            let name = format!("{},{}", role_name(p), role_name(q));
            push(name.clone(), analysis.concurrence(p, q), ConcurrenceKind::MixedTwoQubit);
            push(name, analysis.assistance(p, q), ConcurrenceKind::Assistance);
        }
    }
    let cut_name = |left: &[usize]| {
        let side = |qs: Vec<usize>| qs.into_iter().map(role_name).collect::<Vec<_>>().join(",");
        let right: Vec<usize> = (0..n).filter(|q| !left.contains(q)).collect();
        format!("{}|{}", side(left.to_vec()), side(right))
    };
    for (focus, &value) in single_cuts.iter().enumerate() {
        push(cut_name(&[focus]), value.sqrt(), ConcurrenceKind::PureBipartite);
    }
    push(
        cut_name(&[ROLE_A, ROLE_B]),
        analysis.ab_rest().sqrt(),
        ConcurrenceKind::PureBipartite,
    );
    if n >= 4 {
        push(
            cut_name(&[ROLE_A, ROLE_B, ROLE_C1]),
            analysis.abc1_rest()?.sqrt(),
            ConcurrenceKind::PureBipartite,
        );
    }
    if wclass {
        for i in 0..n {
            for j in i + 1..n {
                if (i, j) != (ROLE_A, ROLE_B) {
                    let value = bipartite_concurrence_squared(state, &[i, j])?;
                    push(cut_name(&[i, j]), value.sqrt(), ConcurrenceKind::PureBipartite);
                }
            }
        }
    }
    Ok(out)
}

impl BoundReport {
    pub fn all_satisfied(&self) -> bool {
        self.entries.iter().all(|e| e.satisfied)
    }

    pub fn entry(&self, inequality: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.inequality == inequality)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| !e.satisfied)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report contains only finite-friendly plain data")
    }

    /// `inequality,lhs,rhs,slack,satisfied` with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("inequality,lhs,rhs,slack,satisfied\n");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{},{:.16e},{:.16e},{:.16e},{}",
                e.inequality, e.lhs, e.rhs, e.slack, e.satisfied
            );
        }
        out
    }
}
