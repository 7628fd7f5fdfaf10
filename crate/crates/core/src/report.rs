//! One-shot analysis of a graph, as consumed by the command-line tool.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Edge, Graph, VertexSet};
use crate::ke::is_alpha_critical;
use crate::ke::{classify_alpha_plus, core_neighborhood, decompose_components, Facts, KeDecomposition, StabilityClass};
use crate::limits::Limits;
use crate::stable::CoreReport;
use crate::structures::is_blossom_free;
use crate::verify::{ensure_no_violations, run_suite_on, CheckResult, SuiteOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantProfile {
    pub pendant_vertices: usize,
    pub alpha_critical_pendants: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub is_ke: bool,
    pub has_pm: bool,
    pub bipartite: bool,
    /// The canonical maximum matching.
    pub matching: Vec<Edge>,
    pub core_report: CoreReport,
    pub neighborhood_of_core: VertexSet,
    pub stability: StabilityClass,
    /// Per-component pieces are merged: `s` is the union of the components'
    /// maximum stable sets, itself a maximum stable set.
    pub decomposition: Option<KeDecomposition>,
    /// Relative to the canonical maximum matching.
    pub blossom_free: bool,
    pub pendant_profile: PendantProfile,
    pub checks: Vec<CheckResult>,
}

/// Computes every quantity and runs the check suite. A failed check is an
/// error unless it is one of the refuted statements, whose outcome is only
/// recorded.
pub fn full_report(g: &Graph, limits: &Limits) -> Result<AnalysisReport> {
    let facts = Facts::new(g, limits)?;
    let checks = run_suite_on(&facts, &SuiteOptions::default())?;
    ensure_no_violations(&checks)?;

    let decomposition = if facts.is_ke() {
        let parts = decompose_components(&facts)?;
        let mut matching: Vec<Edge> = parts.iter().flat_map(|d| d.matching_into_s.clone()).collect();
        matching.sort();
        Some(KeDecomposition {
            s: parts.iter().flat_map(|d| d.s.iter().collect::<Vec<_>>()).collect(),
            h_vertices: parts
                .iter()
                .flat_map(|d| d.h_vertices.iter().collect::<Vec<_>>())
                .collect(),
            matching_into_s: matching,
        })
    } else {
        None
    };
    let pendants = g.pendant_vertices();
    let mut critical = 0;
    for v in pendants.iter() {
        if is_alpha_critical(g, v, limits)? {
            critical += 1;
        }
    }
    Ok(AnalysisReport {
        n: g.order(),
        m: g.size(),
        alpha: facts.alpha(),
        mu: facts.mu(),
        is_ke: facts.is_ke(),
        has_pm: facts.has_pm(),
        bipartite: g.is_bipartite(),
        matching: facts.matching.pairs(),
        neighborhood_of_core: core_neighborhood(&facts)?.0,
        stability: classify_alpha_plus(&facts)?,
        decomposition,
        blossom_free: is_blossom_free(g, &facts.matching, limits)?,
        pendant_profile: PendantProfile {
            pendant_vertices: pendants.len(),
            alpha_critical_pendants: critical,
        },
        core_report: facts.cores,
        checks,
    })
}
