//! Upper bounds on the largest Laplacian eigenvalue `λₙ`.
//!
//! Every bound is evaluated into a [`BoundReport`] that carries the bound,
//! the numerically computed `λₙ`, and whether the bound held.

use crate::error::{Error, Result};
use crate::hypergraph::{DegreeProfile, Hypergraph};
use crate::spectral::{self, Spectrum};

/// Relative slack allowed before a bound is declared violated.
pub const HOLDS_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: &'static str,
    pub bound_value: f64,
    pub lambda_n: f64,
    /// `bound_value − lambda_n`.
    pub slack: f64,
    pub holds: bool,
    /// Vertex, vertex pair or edge attaining the maximum.
    pub witness: Option<Vec<usize>>,
}

impl BoundReport {
    pub fn new(
        name: &'static str,
        bound_value: f64,
        lambda_n: f64,
        witness: Option<Vec<usize>>,
    ) -> Self {
        let slack = bound_value - lambda_n;
        Self {
            name,
            bound_value,
            lambda_n,
            slack,
            holds: slack >= -HOLDS_TOLERANCE * lambda_n.abs().max(1.0),
            witness,
        }
    }
}

/// How `N(i)` enters the average neighbour degree `m_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighborMode {
    /// `m_i = Σ_{j ∈ N(i)} d_j / d_i` over distinct neighbours.
    #[default]
    Distinct,
    /// Each neighbour weighted by its pair count: `m_i = Σ_j a_ij d_j / d_i`.
    Multiplicity,
}

/// Which `ℓ` the set differences `N(i) \ N(j)` range over in the generic
/// neighbourhood bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SetConvention {
    /// The sets as written; `N(i) \ N(j)` contains `j` itself.
    #[default]
    Literal,
    /// Drop `ℓ ∈ {i, j}` from both differences.
    ExcludeEndpoints,
}

/// Neighbour sets of the clique expansion with the degree data the bounds
/// read from them.
#[derive(Debug, Clone)]
pub struct NeighborhoodProfile {
    n: usize,
    counts: Vec<u64>,
    pub neighbors: Vec<Vec<usize>>,
    pub degree: Vec<usize>,
}

impl NeighborhoodProfile {
    pub fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let counts = h.adjacency_counts();
        let neighbors = (0..n)
            .map(|i| (0..n).filter(|&j| counts[i * n + j] > 0).collect())
            .collect();
        Self {
            n,
            counts,
            neighbors,
            degree: h.degree_profile().degree,
        }
    }

    #[inline]
    pub fn pair_count(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.n + j]
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.pair_count(i, j) > 0
    }

    /// Adjacent pairs `(i, j)` with `i < j`, lexicographic.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            self.neighbors[i]
                .iter()
                .copied()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// `d_i · m_i`, the neighbour-degree sum.
    fn neighbor_degree_sum(&self, i: usize, mode: NeighborMode) -> u64 {
        self.neighbors[i]
            .iter()
            .map(|&j| {
                let d = self.degree[j] as u64;
                match mode {
                    NeighborMode::Distinct => d,
                    NeighborMode::Multiplicity => self.pair_count(i, j) * d,
                }
            })
            .sum()
    }

    /// Average neighbour degree; `None` for isolated vertices.
    pub fn average_neighbor_degree(&self, i: usize, mode: NeighborMode) -> Option<f64> {
        (self.degree[i] > 0)
            .then(|| self.neighbor_degree_sum(i, mode) as f64 / self.degree[i] as f64)
    }

    pub fn common_neighbors(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors[i]
            .iter()
            .copied()
            .filter(move |&l| self.adjacent(j, l))
    }

    /// `[d_i(d_i+m_i) + d_j(d_j+m_j) − 2 Σ_{ℓ ∈ N(i)∩N(j)} d_ℓ] / (d_i + d_j)`.
    fn zhu_expression(&self, i: usize, j: usize, mode: NeighborMode) -> f64 {
        let (di, dj) = (self.degree[i] as u64, self.degree[j] as u64);
        let common: u64 = self
            .common_neighbors(i, j)
            .map(|l| self.degree[l] as u64)
            .sum();
        let numerator = di * di
            + self.neighbor_degree_sum(i, mode)
            + dj * dj
            + self.neighbor_degree_sum(j, mode)
            - 2 * common;
        numerator as f64 / (di + dj) as f64
    }
}

/// Shared inputs for all bounds on one hypergraph.
#[derive(Debug, Clone)]
pub struct BoundContext<'a> {
    pub hypergraph: &'a Hypergraph,
    pub degrees: DegreeProfile,
    pub neighborhoods: NeighborhoodProfile,
    pub lambda_n: f64,
}

impl<'a> BoundContext<'a> {
    pub fn new(h: &'a Hypergraph) -> Result<Self> {
        let spectrum = spectral::laplacian_spectrum(h)?;
        Self::with_spectrum(h, &spectrum)
    }

    pub fn with_spectrum(h: &'a Hypergraph, spectrum: &Spectrum) -> Result<Self> {
        Ok(Self {
            hypergraph: h,
            degrees: h.degree_profile(),
            neighborhoods: NeighborhoodProfile::new(h),
            lambda_n: spectrum.lambda_n()?,
        })
    }

    fn delta(&self, i: usize) -> f64 {
        self.degrees.laplacian_degree[i] as f64
    }

    /// `λₙ ≤ 2 max_i δ_i`.
    pub fn twice_max_delta(&self) -> BoundReport {
        let (arg, max) =
            self.degrees
                .laplacian_degree
                .iter()
                .enumerate()
                .fold(
                    (0, 0),
                    |best, (i, &d)| if d > best.1 { (i, d) } else { best },
                );
        BoundReport::new(
            "twice_max_delta",
            2.0 * max as f64,
            self.lambda_n,
            Some(vec![arg]),
        )
    }

    /// `λₙ ≤ max_{i~j} (δ_i + δ_j)`.
    pub fn delta_pair_sum(&self) -> Result<BoundReport> {
        let (pair, value) = self
            .max_over_pairs(|i, j| self.delta(i) + self.delta(j))
            .ok_or(Error::NoEdges)?;
        Ok(BoundReport::new(
            "delta_pair_sum",
            value,
            self.lambda_n,
            Some(pair),
        ))
    }

    /// Neighbourhood bound for a symmetric weight `f` positive on adjacent
    /// pairs:
    /// `max_{i~j} |N(i)∩N(j)| + [Σ_{ℓ∈N(i)\N(j)} f(i,ℓ) + Σ_{ℓ∈N(j)\N(i)} f(j,ℓ)] / f(i,j)`.
    pub fn zhu_generic<F>(&self, f: F, convention: SetConvention) -> Result<BoundReport>
    where
        F: Fn(usize, usize) -> f64,
    {
        let nb = &self.neighborhoods;
        for (i, j) in nb.adjacent_pairs() {
            let (fij, fji) = (f(i, j), f(j, i));
            if fij.is_nan() || fij <= 0.0 || fij != fji {
                return Err(Error::BadWeightFunction { i, j });
            }
        }
        let one_side = |i: usize, j: usize| -> f64 {
            nb.neighbors[i]
                .iter()
                .filter(|&&l| !nb.adjacent(j, l))
                .filter(|&&l| convention == SetConvention::Literal || l != j)
                .map(|&l| f(i, l))
                .sum()
        };
        let (pair, value) = self
            .max_over_pairs(|i, j| {
                let common = nb.common_neighbors(i, j).count() as f64;
                common + (one_side(i, j) + one_side(j, i)) / f(i, j)
            })
            .ok_or(Error::NoEdges)?;
        let name = match convention {
            SetConvention::Literal => "zhu_generic",
            SetConvention::ExcludeEndpoints => "zhu_generic_exclude_endpoints",
        };
        Ok(BoundReport::new(name, value, self.lambda_n, Some(pair)))
    }

    /// The generic bound with `f(i, j) = δ_i + δ_j`.
    pub fn zhu_generic_delta_sum(&self) -> Result<BoundReport> {
        let mut report =
            self.zhu_generic(|i, j| self.delta(i) + self.delta(j), SetConvention::Literal)?;
        report.name = "zhu_generic_delta_sum";
        Ok(report)
    }

    /// Degree/average-neighbour-degree bound for uniform inputs.
    pub fn zhu_uniform(&self) -> Result<BoundReport> {
        let (k_min, k_max) = self.hypergraph.edge_size_range().ok_or(Error::NoEdges)?;
        if k_min != k_max {
            return Err(Error::NotUniform { k_min, k_max });
        }
        let (pair, value) = self.zhu_max(NeighborMode::Distinct).ok_or(Error::NoEdges)?;
        Ok(BoundReport::new(
            "zhu_uniform",
            value,
            self.lambda_n,
            Some(pair),
        ))
    }

    /// The uniform expression scaled by `(k_max − 1)/(k_min − 1)`.
    pub fn zhu_non_uniform(&self, mode: NeighborMode) -> Result<BoundReport> {
        let (k_min, k_max) = self.hypergraph.edge_size_range().ok_or(Error::NoEdges)?;
        let factor = (k_max - 1) as f64 / (k_min - 1) as f64;
        let (pair, value) = self.zhu_max(mode).ok_or(Error::NoEdges)?;
        let name = match mode {
            NeighborMode::Distinct => "zhu_non_uniform",
            NeighborMode::Multiplicity => "zhu_non_uniform_multiplicity",
        };
        Ok(BoundReport::new(
            name,
            factor * value,
            self.lambda_n,
            Some(pair),
        ))
    }

    fn zhu_max(&self, mode: NeighborMode) -> Option<(Vec<usize>, f64)> {
        self.max_over_pairs(|i, j| self.neighborhoods.zhu_expression(i, j, mode))
    }

    /// Largest per-edge degree sum `max_e Σ_{i∈e} d_i` against `λₙ`; this
    /// is NOT a valid bound for hypergraphs.
    pub fn degree_sum_check(&self) -> DegreeSumCheck {
        let (witness, edge_max) = self
            .hypergraph
            .edges()
            .iter()
            .map(|e| {
                (
                    e.clone(),
                    e.iter().map(|&v| self.degrees.degree[v]).sum::<usize>(),
                )
            })
            .fold(
                (None, 0),
                |best, (e, s)| if s > best.1 { (Some(e), s) } else { best },
            );
        let edge_max = edge_max as f64;
        DegreeSumCheck {
            edge_max,
            witness,
            lambda_n: self.lambda_n,
            violated: self.lambda_n > edge_max + HOLDS_TOLERANCE,
        }
    }

    /// Every bound that applies to this hypergraph, in a fixed order.
    pub fn all_bounds(&self) -> Vec<BoundReport> {
        let mut out = vec![self.twice_max_delta()];
        out.extend(self.delta_pair_sum().ok());
        out.extend(self.zhu_generic_delta_sum().ok());
        out.extend(self.zhu_uniform().ok());
        out.extend(self.zhu_non_uniform(NeighborMode::Distinct).ok());
        out.extend(self.zhu_non_uniform(NeighborMode::Multiplicity).ok());
        out
    }

    /// First adjacent pair (lexicographic) attaining the maximum of `value`.
    fn max_over_pairs<F>(&self, value: F) -> Option<(Vec<usize>, f64)>
    where
        F: Fn(usize, usize) -> f64,
    {
        let mut best: Option<(Vec<usize>, f64)> = None;
        for (i, j) in self.neighborhoods.adjacent_pairs() {
            let v = value(i, j);
            if best.as_ref().is_none_or(|b| v > b.1) {
                best = Some((vec![i, j], v));
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSumCheck {
    pub edge_max: f64,
    pub witness: Option<Vec<usize>>,
    pub lambda_n: f64,
    pub violated: bool,
}

pub fn bound_twice_max_delta(h: &Hypergraph) -> Result<BoundReport> {
    Ok(BoundContext::new(h)?.twice_max_delta())
}

pub fn bound_delta_pair_sum(h: &Hypergraph) -> Result<BoundReport> {
    BoundContext::new(h)?.delta_pair_sum()
}

pub fn bound_zhu_uniform(h: &Hypergraph) -> Result<BoundReport> {
    BoundContext::new(h)?.zhu_uniform()
}

pub fn bound_zhu_non_uniform(h: &Hypergraph) -> Result<BoundReport> {
    BoundContext::new(h)?.zhu_non_uniform(NeighborMode::Distinct)
}

pub fn counterexample_degree_sum(h: &Hypergraph) -> Result<DegreeSumCheck> {
    Ok(BoundContext::new(h)?.degree_sum_check())
}
