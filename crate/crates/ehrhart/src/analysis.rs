//! The end-to-end pipeline behind the command-line front end: one record
//! per polytope bundling counts, polynomial, delta-vector, closure,
//! reflexivity and smoothness flags, plus every theorem report; and the
//! seeded census sweep with JSONL persistence.

use std::io::Write;

use serde::Serialize;

use crate::counting::EhrhartData;
use crate::error::{Error, Result};
use crate::generators::random_polytope;
use crate::lattice::LatticePolytope;
use crate::normality::{default_c_max, is_integrally_closed, is_unimodular_simplex, ClosureReport};
use crate::reflexivity::{reflexivity_report_with, ReflexivityReport};
use crate::verify::{
    verify_diff_o, verify_hibi_lbt, verify_lower_bound, verify_oda, verify_partial_sums,
    verify_reflexive_upper, verify_unimodality, verify_volume_upper, VerificationReport,
    THEOREM_IDS,
};
use crate::Int;

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisFlags {
    pub integrally_closed: bool,
    pub c_max: u32,
    pub reflexive: bool,
    pub smooth: bool,
    pub unimodular_simplex: bool,
}

/// Everything the pipeline learned about one polytope. Serializes to a
/// single self-describing JSON object (the census writes one per line).
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisRecord {
    polytope: LatticePolytope,
    d: usize,
    #[serde(with = "crate::jsonnum::int")]
    n: Int,
    c_max: u32,
    dilates: u32,
    #[serde(flatten)]
    data: EhrhartData,
    flags: AnalysisFlags,
    closure: ClosureReport,
    reflexivity: ReflexivityReport,
    reports: Vec<VerificationReport>,
}

impl AnalysisRecord {
    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn data(&self) -> &EhrhartData {
        &self.data
    }

    pub fn flags(&self) -> &AnalysisFlags {
        &self.flags
    }

    pub fn closure(&self) -> &ClosureReport {
        &self.closure
    }

    pub fn reflexivity(&self) -> &ReflexivityReport {
        &self.reflexivity
    }

    pub fn reports(&self) -> &[VerificationReport] {
        &self.reports
    }

    pub fn report(&self, theorem_id: &str) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.theorem_id() == theorem_id)
    }

    /// Reports whose hypotheses were met but whose conclusion failed.
    pub fn violations(&self) -> Vec<&VerificationReport> {
        self.reports.iter().filter(|r| r.is_violation()).collect()
    }

    pub fn all_applicable_hold(&self) -> bool {
        self.reports.iter().all(|r| !r.is_violation())
    }
}

/// Runs the full pipeline: facets, counts, polynomial, delta, closure,
/// reflexivity, smoothness, and all theorem verifiers.
///
/// Defaults: `c_max = max(2, d-1)`, `dilates = d + 2` (the smallest window
/// on which the differentiable-O-sequence check is applicable).
pub fn analyze(
    polytope: &LatticePolytope,
    c_max: Option<u32>,
    dilates: Option<u32>,
) -> Result<AnalysisRecord> {
    let d = polytope.dim();
    let c_max = c_max.unwrap_or_else(|| default_c_max(d));
    let dilates = dilates.unwrap_or(d as u32 + 2);

    let data = EhrhartData::compute(polytope, dilates)?;
    let closure = is_integrally_closed(polytope, c_max)?;
    let reflexivity = reflexivity_report_with(polytope, &data)?;
    let reflexive = reflexivity.is_reflexive();
    let smooth = crate::normality::is_smooth(polytope);
    let unimodular = is_unimodular_simplex(polytope);

    let reports = vec![
        verify_volume_upper(polytope, &data, &closure),
        verify_reflexive_upper(&data, &closure, reflexive),
        verify_partial_sums(&data, &closure),
        verify_lower_bound(&data, &closure),
        verify_hibi_lbt(&data),
        verify_unimodality(&data, &closure, reflexive),
        verify_diff_o(&data, &closure),
        verify_oda(polytope, &data, &closure),
    ];

    Ok(AnalysisRecord {
        polytope: polytope.clone(),
        d,
        n: data.lattice_point_count().clone(),
        c_max,
        dilates,
        flags: AnalysisFlags {
            integrally_closed: closure.is_closed(),
            c_max,
            reflexive,
            smooth,
            unimodular_simplex: unimodular,
        },
        data,
        closure,
        reflexivity,
        reports,
    })
}

/// Runs the pipeline and extracts a single theorem report.
pub fn verify_one(
    polytope: &LatticePolytope,
    theorem_id: &str,
    c_max: Option<u32>,
    dilates: Option<u32>,
) -> Result<VerificationReport> {
    if !THEOREM_IDS.contains(&theorem_id) {
        return Err(Error::UnknownTheorem(theorem_id.to_string()));
    }
    let record = analyze(polytope, c_max, dilates)?;
    Ok(record
        .report(theorem_id)
        .expect("every known theorem id has a report")
        .clone())
}

#[derive(Clone, Debug)]
pub struct CensusParams {
    pub dim: usize,
    pub coord_bound: i64,
    pub count: u64,
    pub seed: u64,
    pub c_max: Option<u32>,
    pub dilates: Option<u32>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CensusSummary {
    pub generated: u64,
    pub integrally_closed: u64,
    pub reflexive: u64,
    pub smooth: u64,
    pub violations: u64,
}

/// Per-index seed partition for the census stream.
fn census_seed(base: u64, index: u64) -> u64 {
    base.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Analyzes `count` seeded random polytopes, streaming one record per line
/// to `out` in generation order. Returns the summary together with the
/// serialized lines of every violating record (for quarantine persistence).
/// Identical parameters produce byte-identical output.
pub fn census(params: &CensusParams, out: &mut dyn Write) -> Result<(CensusSummary, Vec<String>)> {
    let mut summary = CensusSummary::default();
    let mut quarantine = Vec::new();
    for i in 0..params.count {
        // vary the point count for shape diversity, deterministically
        let n_points = params.dim + 1 + (i % 4) as usize;
        let polytope = random_polytope(
            params.dim,
            params.coord_bound,
            n_points,
            census_seed(params.seed, i),
        )?;
        let record = analyze(&polytope, params.c_max, params.dilates)?;
        let line = serde_json::to_string(&record)?;
        out.write_all(line.as_bytes())?;
        out.write_all(b"\n")?;

        summary.generated += 1;
        if record.flags().integrally_closed {
            summary.integrally_closed += 1;
        }
        if record.flags().reflexive {
            summary.reflexive += 1;
        }
        if record.flags().smooth {
            summary.smooth += 1;
        }
        let violations = record.violations().len() as u64;
        if violations > 0 {
            summary.violations += violations;
            quarantine.push(line);
        }
    }
    Ok((summary, quarantine))
}
