//! Poly-Clique search over the counterexample family.

use cliquelab_core::counterexamples::{tamta_family, FamilyLayout};
use cliquelab_core::poly_clique::InterdictionState;
use cliquelab_core::{FamilyParams, SearchMode};
use serde_json::json;

use crate::commands::{poly_search_report, Input, Timer};
use crate::error::CliError;
use crate::report::{Report, SweepSummary};

/// Largest k a sweep accepts.
pub const SWEEP_KMAX: usize = 10;

/// One report per k in `kmin..=kmax`.
pub fn sweep_family(
    kmin: usize,
    kmax: usize,
    mode: SearchMode,
    node_cap: u64,
    seed: u64,
    timer: &mut Timer,
) -> Result<Vec<Report>, CliError> {
    FamilyParams::new(kmin)?;
    if kmin > kmax {
        return Err(CliError::Usage(format!(
            "--kmin {kmin} exceeds --kmax {kmax}"
        )));
    }
    if kmax > SWEEP_KMAX {
        return Err(CliError::Usage(format!(
            "--kmax is capped at {SWEEP_KMAX}, got {kmax}"
        )));
    }
    let mut rows = Vec::new();
    for k in kmin..=kmax {
        let params = FamilyParams::new(k)?;
        let graph = tamta_family(params);
        let layout = FamilyLayout::new(params);
        let (cost, ties) = InterdictionState::new(&graph, k)?
            .cheapest_pairs()
            .expect("family graphs have edges");
        let inner = layout.inner_pairs();
        let inner_ties = ties.iter().filter(|p| inner.contains(p)).count();
        let input = Input {
            graph,
            source: format!("fixture:tamta-{k}"),
            seed,
        };
        let mut r =
            poly_search_report("polyclique search", &input, k, mode, node_cap, &None, timer)?;
        r.details = Some(json!({
            "min_pair_cost": cost,
            "min_cost_pairs": ties.len(),
            "inner_min_cost_pairs": inner_ties,
        }));
        r.notes.clear();
        rows.push(r);
    }
    Ok(rows)
}

pub fn summarize(rows: &[Report]) -> SweepSummary {
    let agreement = |r: &Report| r.outcomes.first().and_then(|o| o.agreement);
    SweepSummary {
        rows: rows.len(),
        disagreements: rows.iter().filter(|r| agreement(r) == Some(false)).count(),
        agreements: rows.iter().filter(|r| agreement(r) == Some(true)).count(),
        not_found: rows.iter().filter(|r| agreement(r).is_none()).count(),
    }
}
