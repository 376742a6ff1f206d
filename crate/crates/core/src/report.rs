//! JSON reports. Keys follow struct field order, reals are rounded to ten
//! decimals, and vertices are printed by their external labels, so identical
//! inputs always serialize to identical bytes.

use serde::Serialize;

use crate::battery::{ratio_to_f64, Analysis, BatterySummary, Finding};
use crate::bounds::{BoundReport, DegreeSumCheck};
use crate::connectivity::{ConnectivitySummary, CutReport, DensityBounds, SweepCut};
use crate::hypergraph::Hypergraph;
use crate::spectral::{ConnectivityCheck, Spectrum};

/// Rounds to ten decimal places; negative zero becomes zero.
pub fn round10(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.10}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn labels(h: &Hypergraph, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&v| h.label(v).into_owned()).collect()
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundJson {
    pub bound_name: String,
    pub bound_value: f64,
    pub lambda_n: f64,
    pub slack: f64,
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

impl BoundJson {
    pub fn new(h: &Hypergraph, r: &BoundReport) -> Self {
        Self {
            bound_name: r.name.to_string(),
            bound_value: round10(r.bound_value),
            lambda_n: round10(r.lambda_n),
            slack: round10(r.slack),
            holds: r.holds,
            witness: r.witness.as_ref().map(|w| labels(h, w)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeSumJson {
    pub edge_max: f64,
    pub witness: Option<Vec<String>>,
    pub lambda_n: f64,
    pub violated: bool,
}

impl DegreeSumJson {
    pub fn new(h: &Hypergraph, c: &DegreeSumCheck) -> Self {
        Self {
            edge_max: round10(c.edge_max),
            witness: c.witness.as_ref().map(|w| labels(h, w)),
            lambda_n: round10(c.lambda_n),
            violated: c.violated,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CutJson {
    pub subset: Vec<String>,
    pub boundary_size: usize,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub density: Option<f64>,
    pub sandwich_holds: bool,
}

impl CutJson {
    pub fn new(h: &Hypergraph, r: &CutReport) -> Self {
        Self {
            subset: labels(h, &r.subset),
            boundary_size: r.boundary_size,
            lower_bound: round10(r.lower_bound),
            upper_bound: round10(r.upper_bound),
            density: r.density.map(round10),
            sandwich_holds: r.sandwich_holds(crate::connectivity::SANDWICH_SLACK),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubsetJson {
    pub cut: CutJson,
    pub density_bounds: Option<DensityJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityJson {
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
}

impl From<DensityBounds> for DensityJson {
    fn from(d: DensityBounds) -> Self {
        Self {
            rho: round10(d.rho),
            lower: round10(d.lower),
            upper: round10(d.upper),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummaryJson {
    pub max_cut: usize,
    pub max_cut_witness: Vec<String>,
    pub max_cut_bound_paper: f64,
    pub max_cut_bound_derived: f64,
    /// Exact rational, e.g. `"2/3"`.
    pub isoperimetric: String,
    pub isoperimetric_value: f64,
    pub iso_witness: Vec<String>,
    pub iso_lower_bound: f64,
}

impl SummaryJson {
    pub fn new(h: &Hypergraph, s: &ConnectivitySummary) -> Self {
        Self {
            max_cut: s.max_cut,
            max_cut_witness: labels(h, &s.max_cut_witness),
            max_cut_bound_paper: round10(s.max_cut_bound_paper),
            max_cut_bound_derived: round10(s.max_cut_bound_derived),
            isoperimetric: s.isoperimetric.to_string(),
            isoperimetric_value: round10(ratio_to_f64(s.isoperimetric)),
            iso_witness: labels(h, &s.iso_witness),
            iso_lower_bound: round10(s.iso_lower_bound),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepJson {
    pub subset: Vec<String>,
    pub ratio: String,
    pub report: CutJson,
}

impl SweepJson {
    pub fn new(h: &Hypergraph, s: &SweepCut) -> Self {
        Self {
            subset: labels(h, &s.subset),
            ratio: s.ratio.to_string(),
            report: CutJson::new(h, &s.report),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumJson {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub k_min: Option<usize>,
    pub k_max: Option<usize>,
    pub spectrum: Vec<f64>,
    pub connected: bool,
    pub components: usize,
    pub lambda2: Option<f64>,
    pub lambda_n: Option<f64>,
}

impl SpectrumJson {
    pub fn new(input: &str, h: &Hypergraph, s: &Spectrum, c: &ConnectivityCheck) -> Self {
        let range = h.edge_size_range();
        Self {
            input: input.to_string(),
            n: h.n(),
            m: h.num_edges(),
            k_min: range.map(|r| r.0),
            k_max: range.map(|r| r.1),
            spectrum: s.eigenvalues().iter().copied().map(round10).collect(),
            connected: c.connected,
            components: c.components,
            lambda2: s.lambda2().ok().map(round10),
            lambda_n: s.lambda_n().ok().map(round10),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FindingJson {
    pub claim: String,
    pub detail: String,
    pub witness: Option<Vec<String>>,
}

impl FindingJson {
    pub fn new(h: &Hypergraph, f: &Finding) -> Self {
        Self {
            claim: f.claim.to_string(),
            detail: f.detail.clone(),
            witness: f.witness.as_ref().map(|w| labels(h, w)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub k_min: Option<usize>,
    pub k_max: Option<usize>,
    pub spectrum: Vec<f64>,
    pub connected: bool,
    pub bounds: Vec<BoundJson>,
    pub degree_sum: Option<DegreeSumJson>,
    pub cuts: Option<SummaryJson>,
    pub sweep: Option<SweepJson>,
    pub subsets_audited: Option<u64>,
    pub violations: Vec<FindingJson>,
    pub hard_failures: Vec<FindingJson>,
}

impl AnalysisReport {
    pub fn new(input: &str, h: &Hypergraph, a: &Analysis) -> Self {
        let range = h.edge_size_range();
        Self {
            input: input.to_string(),
            n: h.n(),
            m: h.num_edges(),
            k_min: range.map(|r| r.0),
            k_max: range.map(|r| r.1),
            spectrum: a
                .spectrum
                .eigenvalues()
                .iter()
                .copied()
                .map(round10)
                .collect(),
            connected: a.connectivity.connected,
            bounds: a.bounds.iter().map(|b| BoundJson::new(h, b)).collect(),
            degree_sum: a.degree_sum.as_ref().map(|d| DegreeSumJson::new(h, d)),
            cuts: a.cuts.as_ref().map(|c| SummaryJson::new(h, c)),
            sweep: a.sweep.as_ref().map(|s| SweepJson::new(h, s)),
            subsets_audited: a.audit.as_ref().map(|x| x.subsets_checked),
            violations: a
                .violations
                .iter()
                .map(|f| FindingJson::new(h, f))
                .collect(),
            hard_failures: a
                .hard_failures
                .iter()
                .map(|f| FindingJson::new(h, f))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BatteryReport {
    pub input: String,
    pub instances: usize,
    pub connected_instances: usize,
    pub hard_failure_count: usize,
    pub violation_counts: std::collections::BTreeMap<String, usize>,
    pub reports: Vec<AnalysisReport>,
}

impl BatteryReport {
    pub fn new(
        input: &str,
        instances: &[Hypergraph],
        summary: &BatterySummary,
        analyses: &[Analysis],
    ) -> Self {
        Self {
            input: input.to_string(),
            instances: summary.instances,
            connected_instances: summary.connected_instances,
            hard_failure_count: summary.hard_failure_count(),
            violation_counts: summary
                .violation_counts()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            reports: instances
                .iter()
                .zip(analyses)
                .enumerate()
                .map(|(i, (h, a))| AnalysisReport::new(&format!("{input}#{i}"), h, a))
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
