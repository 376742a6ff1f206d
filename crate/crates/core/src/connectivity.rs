//! Edge boundaries and the connectivity parameters built on them.
//!
//! For any vertex set `S` the boundary size is sandwiched by the extreme
//! nonzero Laplacian eigenvalues:
//!
//! ```text
//! 4 λ₂ |S|(n−|S|) / (n k_max²)  ≤  |∂S|  ≤  λₙ |S|(n−|S|) / (n (k_min − 1))
//! ```
//!
//! Exact max-cut and isoperimetric number come from subset enumeration,
//! capped at [`ENUMERATION_CAP`] vertices; the Fiedler sweep is the fallback
//! beyond that.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::spectral::{self, Spectrum};

pub const ENUMERATION_CAP: usize = 20;

/// Absolute slack used when auditing the boundary sandwich.
pub const SANDWICH_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    pub size: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutReport {
    pub subset: Vec<usize>,
    pub boundary_size: usize,
    pub lower_bound: f64,
    pub upper_bound: f64,
    /// `|∂S| / (|S|(n−|S|))`; `None` for the empty and the full set.
    pub density: Option<f64>,
}

impl CutReport {
    pub fn sandwich_holds(&self, slack: f64) -> bool {
        let b = self.boundary_size as f64;
        self.lower_bound - slack <= b && b <= self.upper_bound + slack
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityBounds {
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConnectivitySummary {
    pub max_cut: usize,
    pub max_cut_witness: Vec<usize>,
    /// `n λₙ / (4 (k_max − 1))`, recorded only.
    pub max_cut_bound_paper: f64,
    /// `n λₙ / (4 (k_min − 1))`, implied by the sandwich.
    pub max_cut_bound_derived: f64,
    pub isoperimetric: Ratio<u64>,
    pub iso_witness: Vec<usize>,
    /// `2 λ₂ / k_max²`.
    pub iso_lower_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCut {
    pub subset: Vec<usize>,
    /// `|∂S| / |S|` of the returned prefix.
    pub ratio: Ratio<u64>,
    pub report: CutReport,
}

/// Results of checking the sandwich on every subset.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SubsetAudit {
    pub subsets_checked: u64,
    pub sandwich_violations: Vec<Vec<usize>>,
    pub quadratic_form_mismatches: Vec<Vec<usize>>,
}

/// `t (|e| − t)` with `t = |e ∩ S|`: the edge's share of `χ_Sᵀ L χ_S`.
pub fn edge_contribution(edge: &[usize], subset: &[usize]) -> u64 {
    let t = edge.iter().filter(|v| subset.contains(v)).count() as u64;
    t * (edge.len() as u64 - t)
}

fn membership(h: &Hypergraph, subset: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; h.n()];
    for &v in subset {
        if v >= h.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: h.n(),
            });
        }
        inside[v] = true;
    }
    Ok(inside)
}

fn is_split(edge: &[usize], inside: &[bool]) -> bool {
    let t = edge.iter().filter(|&&v| inside[v]).count();
    t > 0 && t < edge.len()
}

pub fn edge_boundary(h: &Hypergraph, subset: &[usize]) -> Result<Boundary> {
    let inside = membership(h, subset)?;
    let edges: Vec<_> = h
        .edges()
        .iter()
        .filter(|e| is_split(e, &inside))
        .cloned()
        .collect();
    Ok(Boundary {
        size: edges.len(),
        edges,
    })
}

fn mask_to_subset(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// True when the sorted vertex list of `a` is lexicographically below `b`'s.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    // At the first differing position the set holding `x` shows `x` while the
    // other shows its next element above `x`, or has run out.
    let x = diff.trailing_zeros();
    let above = u64::MAX.checked_shl(x + 1).unwrap_or(0);
    if a >> x & 1 == 1 {
        b & above != 0
    } else {
        a & above == 0
    }
}

/// Precomputed spectrum and edge data for evaluating many cuts of one
/// hypergraph.
#[derive(Debug, Clone)]
pub struct CutCertifier<'a> {
    h: &'a Hypergraph,
    spectrum: Spectrum,
    lambda2: f64,
    lambda_n: f64,
    edge_range: Option<(usize, usize)>,
}

impl<'a> CutCertifier<'a> {
    pub fn new(h: &'a Hypergraph) -> Result<Self> {
        let spectrum = spectral::laplacian_spectrum(h)?;
        Self::with_spectrum(h, spectrum)
    }

    pub fn with_spectrum(h: &'a Hypergraph, spectrum: Spectrum) -> Result<Self> {
        Ok(Self {
            h,
            lambda2: spectrum.lambda2()?,
            lambda_n: spectrum.lambda_n()?,
            spectrum,
            edge_range: h.edge_size_range(),
        })
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    pub fn lambda_n(&self) -> f64 {
        self.lambda_n
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    fn sandwich(&self, size: usize) -> (f64, f64) {
        let Some((k_min, k_max)) = self.edge_range else {
            return (0.0, 0.0);
        };
        let n = self.h.n() as f64;
        let spread = size as f64 * (n - size as f64) / n;
        (
            4.0 * self.lambda2 * spread / (k_max * k_max) as f64,
            self.lambda_n * spread / (k_min - 1) as f64,
        )
    }

    fn report_from(&self, mut subset: Vec<usize>, boundary_size: usize) -> CutReport {
        subset.sort_unstable();
        subset.dedup();
        let n = self.h.n();
        let s = subset.len();
        let (lower_bound, upper_bound) = self.sandwich(s);
        CutReport {
            density: (s > 0 && s < n).then(|| boundary_size as f64 / (s * (n - s)) as f64),
            subset,
            boundary_size,
            lower_bound,
            upper_bound,
        }
    }

    pub fn report(&self, subset: &[usize]) -> Result<CutReport> {
        let boundary = edge_boundary(self.h, subset)?;
        Ok(self.report_from(subset.to_vec(), boundary.size))
    }

    pub fn edge_density_bounds(&self, subset: &[usize]) -> Result<DensityBounds> {
        let report = self.report(subset)?;
        let rho = report.density.ok_or(Error::DegenerateSubset)?;
        let n = self.h.n() as f64;
        let (lower, upper) = match self.edge_range {
            Some((k_min, k_max)) => (
                4.0 * self.lambda2 / (n * (k_max * k_max) as f64),
                self.lambda_n / (n * (k_min - 1) as f64),
            ),
            None => (0.0, 0.0),
        };
        Ok(DensityBounds { rho, lower, upper })
    }

    fn edge_masks(&self) -> Result<Vec<u64>> {
        let n = self.h.n();
        if n > ENUMERATION_CAP {
            return Err(Error::TooLarge {
                n,
                cap: ENUMERATION_CAP,
            });
        }
        Ok(self
            .h
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect())
    }

    /// Exact max-cut. Vertex `n−1` is kept outside `S`; the witness is the
    /// lexicographically least maximizer.
    pub fn max_cut(&self) -> Result<(usize, Vec<usize>)> {
        let masks = self.edge_masks()?;
        let n = self.h.n();
        let (mut best, mut best_mask) = (0usize, 0u64);
        for s in 0..1u64 << (n - 1) {
            let size = boundary_of_mask(&masks, s);
            if size > best || (size == best && lex_less(s, best_mask)) {
                best = size;
                best_mask = s;
            }
        }
        Ok((best, mask_to_subset(best_mask, n)))
    }

    /// Exact isoperimetric number `min |∂S|/|S|` over `0 < |S| ≤ n/2`.
    pub fn isoperimetric(&self) -> Result<(Ratio<u64>, Vec<usize>)> {
        let masks = self.edge_masks()?;
        let n = self.h.n();
        let mut best: Option<(Ratio<u64>, u64)> = None;
        for s in 1..1u64 << n {
            let size = s.count_ones() as usize;
            if 2 * size > n {
                continue;
            }
            let ratio = Ratio::new(boundary_of_mask(&masks, s) as u64, size as u64);
            let better = match &best {
                None => true,
                Some((r, m)) => ratio < *r || (ratio == *r && lex_less(s, *m)),
            };
            if better {
                best = Some((ratio, s));
            }
        }
        let (ratio, mask) = best.expect("n >= 2 admits a singleton");
        Ok((ratio, mask_to_subset(mask, n)))
    }

    pub fn summary(&self) -> Result<ConnectivitySummary> {
        let (max_cut, max_cut_witness) = self.max_cut()?;
        let (isoperimetric, iso_witness) = self.isoperimetric()?;
        let n = self.h.n() as f64;
        let (printed, derived, iso) = match self.edge_range {
            Some((k_min, k_max)) => (
                n * self.lambda_n / (4.0 * (k_max - 1) as f64),
                n * self.lambda_n / (4.0 * (k_min - 1) as f64),
                2.0 * self.lambda2 / (k_max * k_max) as f64,
            ),
            None => (0.0, 0.0, 0.0),
        };
        Ok(ConnectivitySummary {
            max_cut,
            max_cut_witness,
            max_cut_bound_paper: printed,
            max_cut_bound_derived: derived,
            isoperimetric,
            iso_witness,
            iso_lower_bound: iso,
        })
    }

    /// Spectral bisection: order vertices by decreasing Fiedler value (ties
    /// by index) and return the best prefix by `|∂S|/|S|` among prefixes
    /// with `|S| ≤ n/2`.
    pub fn fiedler_sweep(&self) -> Result<SweepCut> {
        if !self.h.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.h.n();
        let fiedler = self.spectrum.fiedler_vector()?;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| fiedler[b].total_cmp(&fiedler[a]).then(a.cmp(&b)));

        let mut inside = vec![false; n];
        // (ratio, boundary, prefix length)
        let mut best: Option<(Ratio<u64>, usize, usize)> = None;
        let mut fallback: Option<(usize, usize)> = None;
        for (p, &v) in order.iter().enumerate().take(n - 1) {
            inside[v] = true;
            let len = p + 1;
            let size = self
                .h
                .edges()
                .iter()
                .filter(|e| is_split(e, &inside))
                .count();
            if 2 * len <= n {
                let ratio = Ratio::new(size as u64, len as u64);
                if best.is_none_or(|b| ratio < b.0) {
                    best = Some((ratio, size, len));
                }
            } else if fallback.is_none_or(|f| size < f.0) {
                fallback = Some((size, len));
            }
        }
        let (ratio, size, len) = best.unwrap_or_else(|| {
            let (size, len) = fallback.expect("n >= 2 yields a prefix");
            (Ratio::new(size as u64, len as u64), size, len)
        });
        let report = self.report_from(order[..len].to_vec(), size);
        Ok(SweepCut {
            subset: report.subset.clone(),
            ratio,
            report,
        })
    }

    /// Checks the boundary sandwich and the identity
    /// `Σ_e t(|e|−t) = χ_Sᵀ L χ_S` on every subset of `V`.
    pub fn audit_subsets(&self) -> Result<SubsetAudit> {
        let masks = self.edge_masks()?;
        let n = self.h.n();
        let counts = self.h.adjacency_counts();
        let mut audit = SubsetAudit::default();
        for s in 0..1u64 << n {
            let boundary = boundary_of_mask(&masks, s);
            let (lower, upper) = self.sandwich(s.count_ones() as usize);
            let b = boundary as f64;
            if !(lower - SANDWICH_SLACK <= b && b <= upper + SANDWICH_SLACK) {
                audit.sandwich_violations.push(mask_to_subset(s, n));
            }
            let by_edges: u64 = masks
                .iter()
                .map(|&e| {
                    let t = (e & s).count_ones() as u64;
                    t * (e.count_ones() as u64 - t)
                })
                .sum();
            let mut quadratic = 0u64;
            for i in (0..n).filter(|&i| s >> i & 1 == 1) {
                for j in (0..n).filter(|&j| s >> j & 1 == 0) {
                    quadratic += counts[i * n + j];
                }
            }
            if by_edges != quadratic {
                audit.quadratic_form_mismatches.push(mask_to_subset(s, n));
            }
            audit.subsets_checked += 1;
        }
        Ok(audit)
    }
}

fn boundary_of_mask(edge_masks: &[u64], s: u64) -> usize {
    edge_masks
        .iter()
        .filter(|&&e| {
            let t = e & s;
            t != 0 && t != e
        })
        .count()
}

pub fn boundary_sandwich(h: &Hypergraph, subset: &[usize]) -> Result<CutReport> {
    CutCertifier::new(h)?.report(subset)
}

pub fn edge_density_bounds(h: &Hypergraph, subset: &[usize]) -> Result<DensityBounds> {
    CutCertifier::new(h)?.edge_density_bounds(subset)
}

pub fn max_cut(h: &Hypergraph) -> Result<(usize, Vec<usize>)> {
    check_cap(h)?;
    CutCertifier::new(h)?.max_cut()
}

pub fn isoperimetric(h: &Hypergraph) -> Result<(Ratio<u64>, Vec<usize>)> {
    check_cap(h)?;
    CutCertifier::new(h)?.isoperimetric()
}

pub fn fiedler_sweep(h: &Hypergraph) -> Result<SweepCut> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    CutCertifier::new(h)?.fiedler_sweep()
}

fn check_cap(h: &Hypergraph) -> Result<()> {
    if h.n() > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            n: h.n(),
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}
