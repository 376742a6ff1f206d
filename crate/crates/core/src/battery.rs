//! Full verification of one hypergraph and seeded random batteries.
//!
//! Checks split in two kinds. Hard invariants follow from sound arguments
//! and any failure is a soundness alarm. Empirical claims are evaluated and
//! their violations recorded with witnesses, never treated as failures.

use std::collections::BTreeMap;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{BoundContext, BoundReport, DegreeSumCheck, NeighborMode};
use crate::connectivity::{
    ConnectivitySummary, CutCertifier, SubsetAudit, SweepCut, ENUMERATION_CAP, SANDWICH_SLACK,
};
use crate::error::{Error, Result};
use crate::generators::{distinct_edge_count, random_hypergraph};
use crate::hypergraph::Hypergraph;
use crate::spectral::{self, ConnectivityCheck, Spectrum};

/// Residual tolerance, relative to `max(1, ‖L‖_F)`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;
pub const ORTHONORMALITY_TOLERANCE: f64 = 1e-10;
/// PSD tolerance on `λ₁`, relative to `max(1, ‖L‖_F)`.
pub const PSD_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub claim: &'static str,
    pub detail: String,
    pub witness: Option<Vec<usize>>,
}

impl Finding {
    fn new(claim: &'static str, detail: String, witness: Option<Vec<usize>>) -> Self {
        Self {
            claim,
            detail,
            witness,
        }
    }
}

/// Everything computed about one hypergraph.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub spectrum: Spectrum,
    pub connectivity: ConnectivityCheck,
    pub bounds: Vec<BoundReport>,
    pub degree_sum: Option<DegreeSumCheck>,
    pub cuts: Option<ConnectivitySummary>,
    pub sweep: Option<SweepCut>,
    pub audit: Option<SubsetAudit>,
    pub hard_failures: Vec<Finding>,
    pub violations: Vec<Finding>,
}

impl Analysis {
    pub fn is_sound(&self) -> bool {
        self.hard_failures.is_empty()
    }
}

pub fn analyze(h: &Hypergraph) -> Result<Analysis> {
    let laplacian = h.laplacian();
    let spectrum = spectral::eigendecompose(&laplacian)?;
    let connectivity = spectral::connectivity_check(h, &spectrum);
    let mut hard = Vec::new();
    let mut soft = Vec::new();

    // Spectrum and construction invariants.
    let scale = spectrum.matrix_norm().max(1.0);
    let residual = spectrum.max_residual(&laplacian);
    if residual > RESIDUAL_TOLERANCE * scale {
        hard.push(Finding::new(
            "spectrum_residual",
            format!("max residual {residual:e}"),
            None,
        ));
    }
    let ortho = spectrum.orthonormality_defect();
    if ortho > ORTHONORMALITY_TOLERANCE {
        hard.push(Finding::new(
            "spectrum_orthonormality",
            format!("defect {ortho:e}"),
            None,
        ));
    }
    let lambda1 = spectrum.eigenvalues()[0];
    if lambda1 < -PSD_TOLERANCE * scale {
        hard.push(Finding::new(
            "spectrum_psd",
            format!("lambda1 = {lambda1:e}"),
            None,
        ));
    }
    let trace = laplacian.trace();
    let sum: f64 = spectrum.eigenvalues().iter().sum();
    if (sum - trace).abs() > RESIDUAL_TOLERANCE * trace.abs().max(1.0) {
        hard.push(Finding::new(
            "trace",
            format!("sum {sum} vs trace {trace}"),
            None,
        ));
    }
    if let Some(v) = (0..h.n()).find(|&i| laplacian.row_sum(i) != 0.0) {
        hard.push(Finding::new(
            "laplacian_row_sums",
            "nonzero row sum".into(),
            Some(vec![v]),
        ));
    }
    let profile = h.degree_profile();
    if let (Some(k_min), Some(k_max)) = (profile.k_min, profile.k_max) {
        for v in 0..h.n() {
            let (d, delta) = (profile.degree[v] as u64, profile.laplacian_degree[v]);
            if !((k_min as u64 - 1) * d <= delta && delta <= (k_max as u64 - 1) * d) {
                hard.push(Finding::new(
                    "degree_inequality",
                    format!("d={d}, delta={delta}"),
                    Some(vec![v]),
                ));
            }
        }
    }
    if !connectivity.consistent() {
        hard.push(Finding::new(
            "connectivity_agreement",
            format!("{connectivity:?}"),
            None,
        ));
    }

    let mut bounds = Vec::new();
    let mut degree_sum = None;
    let mut cuts = None;
    let mut sweep = None;
    let mut audit = None;

    if h.n() >= 2 {
        let ctx = BoundContext::with_spectrum(h, &spectrum)?;
        bounds = ctx.all_bounds();
        let twice = ctx.twice_max_delta();
        check_bound(&mut hard, &twice);
        if let Ok(pair) = ctx.delta_pair_sum() {
            check_bound(&mut hard, &pair);
            if pair.bound_value > twice.bound_value {
                hard.push(Finding::new(
                    "bound_ordering",
                    format!("{} > {}", pair.bound_value, twice.bound_value),
                    pair.witness.clone(),
                ));
            }
        }
        if h.uniformity() == Some(2) {
            if let Ok(zhu) = ctx.zhu_uniform() {
                check_bound(&mut hard, &zhu);
            }
        }
        for mode in [NeighborMode::Distinct, NeighborMode::Multiplicity] {
            if let Ok(r) = ctx.zhu_non_uniform(mode) {
                if !r.holds {
                    soft.push(bound_finding(&r));
                }
            }
        }
        let ds = ctx.degree_sum_check();
        if ds.violated {
            soft.push(Finding::new(
                "degree_sum_generalization",
                format!("lambda_n {} > edge degree sum {}", ds.lambda_n, ds.edge_max),
                ds.witness.clone(),
            ));
        }
        degree_sum = Some(ds);

        if h.n() <= ENUMERATION_CAP {
            let cert = CutCertifier::with_spectrum(h, spectrum.clone())?;
            let a = cert.audit_subsets()?;
            if let Some(s) = a.sandwich_violations.first() {
                hard.push(Finding::new(
                    "boundary_sandwich",
                    format!("{} subsets violate", a.sandwich_violations.len()),
                    Some(s.clone()),
                ));
            }
            if let Some(s) = a.quadratic_form_mismatches.first() {
                hard.push(Finding::new(
                    "quadratic_form_identity",
                    String::new(),
                    Some(s.clone()),
                ));
            }
            audit = Some(a);

            let summary = cert.summary()?;
            let mc = summary.max_cut as f64;
            if mc > summary.max_cut_bound_derived + SANDWICH_SLACK {
                hard.push(Finding::new(
                    "max_cut_derived_bound",
                    format!("{mc} > {}", summary.max_cut_bound_derived),
                    Some(summary.max_cut_witness.clone()),
                ));
            }
            if mc > summary.max_cut_bound_paper + SANDWICH_SLACK {
                soft.push(Finding::new(
                    "max_cut_kmax_bound",
                    format!("{mc} > {}", summary.max_cut_bound_paper),
                    Some(summary.max_cut_witness.clone()),
                ));
            }
            if connectivity.connected {
                let phi = ratio_to_f64(summary.isoperimetric);
                if phi < summary.iso_lower_bound - SANDWICH_SLACK {
                    hard.push(Finding::new(
                        "isoperimetric_bound",
                        format!("{phi} < {}", summary.iso_lower_bound),
                        Some(summary.iso_witness.clone()),
                    ));
                }
                let s = cert.fiedler_sweep()?;
                if s.ratio < summary.isoperimetric {
                    hard.push(Finding::new(
                        "sweep_below_optimum",
                        format!("{} < {}", s.ratio, summary.isoperimetric),
                        Some(s.subset.clone()),
                    ));
                }
                sweep = Some(s);
            }
            cuts = Some(summary);
        }
    }

    Ok(Analysis {
        spectrum,
        connectivity,
        bounds,
        degree_sum,
        cuts,
        sweep,
        audit,
        hard_failures: hard,
        violations: soft,
    })
}

fn bound_finding(r: &BoundReport) -> Finding {
    Finding::new(
        r.name,
        format!("bound {} < lambda_n {}", r.bound_value, r.lambda_n),
        r.witness.clone(),
    )
}

fn check_bound(hard: &mut Vec<Finding>, r: &BoundReport) {
    if !r.holds {
        hard.push(bound_finding(r));
    }
}

pub fn ratio_to_f64(r: num_rational::Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// How random battery instances are drawn.
#[derive(Debug, Clone, PartialEq)]
pub struct BatteryConfig {
    pub count: usize,
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub connected_only: bool,
    pub non_uniform_only: bool,
}

impl BatteryConfig {
    /// Mixed instances, `n ≤ 9`, edge sizes 2 to 4.
    pub fn desk(count: usize, seed: u64) -> Self {
        Self {
            count,
            seed,
            n_min: 3,
            n_max: 9,
            k_min: 2,
            k_max: 4,
            connected_only: false,
            non_uniform_only: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn non_uniform(mut self) -> Self {
        self.non_uniform_only = true;
        self
    }
}

/// Deterministic instance schedule for `config`. Each instance draws `n`, an
/// edge-size range and an edge count from a ChaCha8 stream seeded with
/// `config.seed`, then redraws until the filters accept it.
pub fn battery_instances(config: &BatteryConfig) -> Result<Vec<Hypergraph>> {
    if config.n_min < 2
        || config.n_min > config.n_max
        || config.k_min < 2
        || config.k_min > config.k_max
    {
        return Err(Error::BadParameters(format!("{config:?}")));
    }
    if config.non_uniform_only && (config.k_min == config.k_max || config.n_max < config.k_min + 1)
    {
        return Err(Error::BadParameters(
            "non-uniform instances need two edge sizes".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.count);
    while out.len() < config.count {
        let n = rng.gen_range(config.n_min..=config.n_max);
        let k_max = config.k_max.min(n);
        let k_min = config.k_min.min(k_max);
        if config.non_uniform_only && k_min == k_max {
            continue;
        }
        let available = distinct_edge_count(n, k_min, k_max);
        let m_cap = (2 * n).min(available as usize);
        let m = rng.gen_range(1..=m_cap);
        let h = random_hypergraph(n, m, k_min, k_max, rng.next_u64())?;
        if config.connected_only && !h.is_connected() {
            continue;
        }
        if config.non_uniform_only && h.uniformity().is_some() {
            continue;
        }
        out.push(h);
    }
    Ok(out)
}

/// `count` instances of `random_hypergraph(n, m, k_min, k_max, ·)` with
/// per-instance seeds drawn from a ChaCha8 stream seeded with `seed`.
pub fn fixed_shape_instances(
    n: usize,
    m: usize,
    k_min: usize,
    k_max: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<Hypergraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_hypergraph(n, m, k_min, k_max, rng.next_u64()))
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BatterySummary {
    pub instances: usize,
    pub connected_instances: usize,
    pub hard_failures: Vec<(usize, Finding)>,
    pub violations: Vec<(usize, Finding)>,
}

impl BatterySummary {
    pub fn violation_counts(&self) -> BTreeMap<&'static str, usize> {
        let mut counts = BTreeMap::new();
        for (_, f) in &self.violations {
            *counts.entry(f.claim).or_default() += 1;
        }
        counts
    }

    pub fn hard_failure_count(&self) -> usize {
        self.hard_failures.len()
    }
}

pub fn run_battery(instances: &[Hypergraph]) -> Result<(BatterySummary, Vec<Analysis>)> {
    let mut summary = BatterySummary {
        instances: instances.len(),
        ..Default::default()
    };
    let mut analyses = Vec::with_capacity(instances.len());
    for (idx, h) in instances.iter().enumerate() {
        let a = analyze(h)?;
        summary.connected_instances += usize::from(a.connectivity.connected);
        summary
            .hard_failures
            .extend(a.hard_failures.iter().cloned().map(|f| (idx, f)));
        summary
            .violations
            .extend(a.violations.iter().cloned().map(|f| (idx, f)));
        analyses.push(a);
    }
    Ok((summary, analyses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn analysis_of_regression_graph_is_sound() {
        let h = Hypergraph::validate(
            vec![vec![0, 1, 2], vec![1, 2, 3], vec![3, 4, 5], vec![0, 4, 5]],
            6,
        )
        .unwrap();
        let a = analyze(&h).unwrap();
        assert!(a.is_sound(), "{:?}", a.hard_failures);
        assert_eq!(a.cuts.as_ref().unwrap().max_cut, 4);
        assert!(a.sweep.is_some());
        assert_eq!(a.audit.unwrap().subsets_checked, 64);
    }

    #[test]
    fn degree_sum_counterexample_is_recorded_not_failed() {
        let h = Hypergraph::validate(
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 4], vec![2, 3, 4]],
            5,
        )
        .unwrap();
        let a = analyze(&h).unwrap();
        assert!(a.is_sound());
        assert!(a
            .violations
            .iter()
            .any(|f| f.claim == "degree_sum_generalization"));
    }

    #[test]
    fn single_vertex_analysis() {
        let a = analyze(&Hypergraph::validate(vec![], 1).unwrap()).unwrap();
        assert!(a.is_sound());
        assert!(a.bounds.is_empty() && a.cuts.is_none());
    }

    #[test]
    fn schedules_are_deterministic_and_filtered() {
        let cfg = BatteryConfig::desk(20, 7).connected();
        let a = battery_instances(&cfg).unwrap();
        assert_eq!(a, battery_instances(&cfg).unwrap());
        assert!(a.iter().all(|h| h.is_connected() && h.n() <= 9));

        let nu = battery_instances(&BatteryConfig::desk(20, 7).non_uniform()).unwrap();
        assert!(nu.iter().all(|h| h.uniformity().is_none()));

        let fixed = fixed_shape_instances(8, 6, 2, 4, 5, 12345).unwrap();
        assert_eq!(fixed, fixed_shape_instances(8, 6, 2, 4, 5, 12345).unwrap());
        assert!(fixed.iter().all(|h| h.n() == 8 && h.num_edges() == 6));
    }

    #[test]
    fn complete_family_battery_is_sound() {
        let instances: Vec<_> = (3..=6)
            .map(|n| generators::complete_k_graph(n, 3).unwrap())
            .collect();
        let (summary, _) = run_battery(&instances).unwrap();
        assert_eq!(summary.hard_failure_count(), 0);
        assert_eq!(summary.connected_instances, 4);
    }
}
