//! Named hypergraph families with closed-form Laplacian spectra, and a seeded
//! random generator.
//!
//! Random sampling uses ChaCha8 (`rand_chacha`) seeded from a `u64`, so a seed
//! reproduces the same hypergraph on every platform.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_integer::binomial;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Eigenvalues with multiplicities, plus an optional monic polynomial whose
/// roots are the eigenvalues not given in closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSpectrum {
    /// Ascending, distinct eigenvalues with positive multiplicities.
    pub pairs: Vec<(f64, usize)>,
    /// Coefficients `c_0, …, c_d` of `c_0 + c_1 X + … + X^d`, lowest first.
    pub residual_polynomial: Option<Vec<f64>>,
}

impl AnalyticSpectrum {
    fn from_pairs(mut pairs: Vec<(f64, usize)>, residual_polynomial: Option<Vec<f64>>) -> Self {
        pairs.retain(|&(_, m)| m > 0);
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, usize)> = Vec::with_capacity(pairs.len());
        for (value, mult) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == value => last.1 += mult,
                _ => merged.push((value, mult)),
            }
        }
        Self {
            pairs: merged,
            residual_polynomial,
        }
    }

    /// Total multiplicity of the closed-form part.
    pub fn closed_form_count(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// Closed-form eigenvalues expanded by multiplicity, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    /// Evaluates the residual polynomial by Horner's rule.
    pub fn residual_at(&self, x: f64) -> Option<f64> {
        self.residual_polynomial
            .as_ref()
            .map(|c| c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci))
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::BadParameters(format!(
            "need 2 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// All `k`-subsets of `0..n`.
pub fn complete_k_graph(n: usize, k: usize) -> Result<Hypergraph> {
    check_k(n, k)?;
    Hypergraph::validate((0..n).combinations(k).collect(), n)
}

/// `0` once and `n·C(n−2, k−2)` with multiplicity `n − 1`.
pub fn complete_k_graph_spectrum(n: usize, k: usize) -> Result<AnalyticSpectrum> {
    check_k(n, k)?;
    let top = (n as u128 * binomial((n - 2) as u128, (k - 2) as u128)) as f64;
    Ok(AnalyticSpectrum::from_pairs(
        vec![(0.0, 1), (top, n - 1)],
        None,
    ))
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.len() < 2 || sizes.contains(&0) {
        return Err(Error::BadParameters(format!(
            "need at least two partitions of positive size, got {sizes:?}"
        )));
    }
    Ok(())
}

/// Partition `i` occupies a consecutive block of vertices; the edges are all
/// transversals taking one vertex from each partition.
pub fn complete_k_partite(sizes: &[usize]) -> Result<Hypergraph> {
    check_sizes(sizes)?;
    let n = sizes.iter().sum();
    let mut start = 0;
    let blocks: Vec<_> = sizes
        .iter()
        .map(|&s| {
            let block = start..start + s;
            start += s;
            block
        })
        .collect();
    Hypergraph::validate(blocks.into_iter().multi_cartesian_product().collect(), n)
}

/// Elementary symmetric polynomials `e_0, …, e_k` of `values`.
fn elementary_symmetric(values: &[u128]) -> Vec<u128> {
    let mut e = vec![0u128; values.len() + 1];
    e[0] = 1;
    for (done, &v) in values.iter().enumerate() {
        for j in (1..=done + 1).rev() {
            e[j] += e[j - 1] * v;
        }
    }
    e
}

/// Closed-form part `(k−1)·Π n_j / n_i` with multiplicity `n_i − 1` for each
/// partition, and the degree `k−1` residual polynomial
/// `X^{k−1} − A_{k−2} X^{k−2} + … + (−1)^{k−1} A_0` with
/// `A_i = (i+1) k^{k−2−i} (Π n_j)^{k−2−i} e_{i+1}(n)`.
pub fn complete_k_partite_spectrum(sizes: &[usize]) -> Result<AnalyticSpectrum> {
    check_sizes(sizes)?;
    let k = sizes.len();
    let sizes_u: Vec<u128> = sizes.iter().map(|&s| s as u128).collect();
    let product: u128 = sizes_u.iter().product();

    let mut pairs = vec![(0.0, 1)];
    for &ni in &sizes_u {
        pairs.push((((k as u128 - 1) * product / ni) as f64, ni as usize - 1));
    }

    let e = elementary_symmetric(&sizes_u);
    // coefficient of X^i is (−1)^{k−1−i} A_i
    let mut coeffs = Vec::with_capacity(k);
    for i in 0..k - 1 {
        let power = (k - 2 - i) as u32;
        let a_i = (i as f64 + 1.0)
            * (k as f64).powi(power as i32)
            * (product as f64).powi(power as i32)
            * e[i + 1] as f64;
        let sign = if (k - 1 - i).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        coeffs.push(sign * a_i);
    }
    coeffs.push(1.0);
    Ok(AnalyticSpectrum::from_pairs(pairs, Some(coeffs)))
}

fn check_star(k: usize, r: usize) -> Result<()> {
    if k < 2 || r < 1 {
        return Err(Error::BadParameters(format!(
            "need k >= 2 and r >= 1, got k={k}, r={r}"
        )));
    }
    Ok(())
}

/// Vertex 0 is the centre; spoke `j` is `{0} ∪ {1 + j(k−1), …, (j+1)(k−1)}`.
pub fn star_k_graph(k: usize, r: usize) -> Result<Hypergraph> {
    check_star(k, r)?;
    let n = (k - 1) * r + 1;
    let edges = (0..r)
        .map(|j| {
            std::iter::once(0)
                .chain(1 + j * (k - 1)..=(j + 1) * (k - 1))
                .collect()
        })
        .collect();
    Hypergraph::validate(edges, n)
}

/// `0` and `n` once each, `1` with multiplicity `r−1`, `k` with
/// multiplicity `(k−2)r`.
pub fn star_k_graph_spectrum(k: usize, r: usize) -> Result<AnalyticSpectrum> {
    check_star(k, r)?;
    let n = (k - 1) * r + 1;
    Ok(AnalyticSpectrum::from_pairs(
        vec![
            (0.0, 1),
            (1.0, r - 1),
            (k as f64, (k - 2) * r),
            (n as f64, 1),
        ],
        None,
    ))
}

/// Number of distinct edges with sizes in `k_min..=k_max` on `n` vertices.
pub fn distinct_edge_count(n: usize, k_min: usize, k_max: usize) -> u128 {
    (k_min..=k_max.min(n))
        .map(|k| binomial(n as u128, k as u128))
        .sum()
}

/// `m` distinct edges: each draw picks a size uniformly in `k_min..=k_max`,
/// then a uniform subset of that size; repeats are rejected.
pub fn random_hypergraph(
    n: usize,
    m: usize,
    k_min: usize,
    k_max: usize,
    seed: u64,
) -> Result<Hypergraph> {
    if !(2 <= k_min && k_min <= k_max && k_max <= n) {
        return Err(Error::BadParameters(format!(
            "need 2 <= kmin <= kmax <= n, got n={n}, kmin={k_min}, kmax={k_max}"
        )));
    }
    let available = distinct_edge_count(n, k_min, k_max);
    if m as u128 > available {
        return Err(Error::Unsatisfiable {
            requested: m as u128,
            available,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = BTreeSet::new();
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let k = rng.gen_range(k_min..=k_max);
        let mut edge = sample(&mut rng, n, k).into_vec();
        edge.sort_unstable();
        if chosen.insert(edge.clone()) {
            order.push(edge);
        }
    }
    Hypergraph::validate(order, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_k_graph_edges() {
        let h = complete_k_graph(4, 3).unwrap();
        assert_eq!(
            h.edges(),
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        assert_eq!(complete_k_graph(4, 2).unwrap().num_edges(), 6);
        assert_eq!(complete_k_graph(3, 3).unwrap().edges(), &[vec![0, 1, 2]]);
        assert!(complete_k_graph(3, 4).is_err());
        assert!(complete_k_graph(3, 1).is_err());
    }

    #[test]
    fn complete_k_graph_spectra() {
        assert_eq!(
            complete_k_graph_spectrum(4, 3).unwrap().pairs,
            vec![(0.0, 1), (8.0, 3)]
        );
        assert_eq!(
            complete_k_graph_spectrum(5, 3).unwrap().pairs,
            vec![(0.0, 1), (15.0, 4)]
        );
        for n in 2..8 {
            assert_eq!(
                complete_k_graph_spectrum(n, 2).unwrap().pairs,
                vec![(0.0, 1), (n as f64, n - 1)]
            );
        }
    }

    #[test]
    fn complete_k_partite_edges() {
        assert_eq!(complete_k_partite(&[2, 2]).unwrap().num_edges(), 4);
        assert_eq!(
            complete_k_partite(&[1, 1, 1]).unwrap().edges(),
            &[vec![0, 1, 2]]
        );
        let h = complete_k_partite(&[2, 1, 2]).unwrap();
        assert_eq!(h.num_edges(), 4);
        assert!(h.edges().iter().all(|e| e.len() == 3));
        assert!(complete_k_partite(&[3]).is_err());
        assert!(complete_k_partite(&[2, 0]).is_err());
    }

    #[test]
    fn complete_k_partite_spectra() {
        let s = complete_k_partite_spectrum(&[2, 2]).unwrap();
        assert_eq!(s.pairs, vec![(0.0, 1), (2.0, 2)]);
        assert_eq!(s.residual_polynomial, Some(vec![-4.0, 1.0]));

        let s = complete_k_partite_spectrum(&[1, 1]).unwrap();
        assert_eq!(s.pairs, vec![(0.0, 1)]);
        assert_eq!(s.residual_polynomial, Some(vec![-2.0, 1.0]));
    }

    #[test]
    fn five_partite_polynomial_matches_worked_form() {
        // X⁴ − 4(Σabcd)X³ + 15(Πa)(Σabc)X² − 50(Πa)²(Σab)X + 125(Πa)³(Σa)
        let (a, b, c, d, e) = (1.0, 2.0, 1.0, 3.0, 2.0);
        let v = [a, b, c, d, e];
        let prod: f64 = v.iter().product();
        let sym = |r: usize| -> f64 {
            v.iter()
                .combinations(r)
                .map(|s| s.into_iter().product::<f64>())
                .sum()
        };
        let expected = vec![
            125.0 * prod.powi(3) * sym(1),
            -50.0 * prod.powi(2) * sym(2),
            15.0 * prod * sym(3),
            -4.0 * sym(4),
            1.0,
        ];
        let s = complete_k_partite_spectrum(&[1, 2, 1, 3, 2]).unwrap();
        assert_eq!(s.residual_polynomial.unwrap(), expected);
    }

    #[test]
    fn star_construction_and_spectrum() {
        let h = star_k_graph(3, 2).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![0, 3, 4]]);
        let k1r = star_k_graph(2, 4).unwrap();
        assert_eq!(
            k1r.edges(),
            &[vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]]
        );
        let h = star_k_graph(4, 3).unwrap();
        assert_eq!(h.n(), 10);
        assert!(h.edges().iter().all(|e| e.len() == 4 && e[0] == 0));

        assert_eq!(
            star_k_graph_spectrum(3, 2).unwrap().expanded(),
            vec![0.0, 1.0, 3.0, 3.0, 5.0]
        );
        assert_eq!(
            star_k_graph_spectrum(2, 3).unwrap().expanded(),
            vec![0.0, 1.0, 1.0, 4.0]
        );
        assert_eq!(
            star_k_graph_spectrum(3, 1).unwrap().expanded(),
            vec![0.0, 3.0, 3.0]
        );
        assert!(star_k_graph(1, 2).is_err());
        assert!(star_k_graph(3, 0).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_hypergraph(5, 4, 2, 3, 42).unwrap();
        let b = random_hypergraph(5, 4, 2, 3, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.num_edges(), 4);
        assert!(a.edges().iter().all(|e| (2..=3).contains(&e.len())));
    }

    #[test]
    fn random_exhausts_small_universe() {
        for seed in 0..5 {
            assert_eq!(
                random_hypergraph(4, 4, 3, 3, seed).unwrap(),
                complete_k_graph(4, 3).unwrap()
            );
        }
        assert_eq!(
            random_hypergraph(3, 5, 3, 3, 7),
            Err(Error::Unsatisfiable {
                requested: 5,
                available: 1
            })
        );
        assert!(random_hypergraph(3, 1, 1, 2, 0).is_err());
        assert!(random_hypergraph(3, 1, 3, 2, 0).is_err());
    }
}
