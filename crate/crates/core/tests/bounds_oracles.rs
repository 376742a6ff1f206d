use std::collections::BTreeSet;

use hyperspec::battery::{battery_instances, BatteryConfig};
use hyperspec::bounds::{BoundContext, NeighborMode, SetConvention};
use hyperspec::generators::random_hypergraph;
use hyperspec::Hypergraph;

struct Naive {
    degree: Vec<f64>,
    delta: Vec<f64>,
    neighbors: Vec<BTreeSet<usize>>,
}

impl Naive {
    fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let mut degree = vec![0.0; n];
        let mut delta = vec![0.0; n];
        let mut neighbors = vec![BTreeSet::new(); n];
        for e in h.edges() {
            for &v in e {
                degree[v] += 1.0;
                delta[v] += (e.len() - 1) as f64;
                neighbors[v].extend(e.iter().copied().filter(|&u| u != v));
            }
        }
        Self {
            degree,
            delta,
            neighbors,
        }
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, set) in self.neighbors.iter().enumerate() {
            out.extend(set.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    fn max_pairs(&self, f: impl Fn(usize, usize) -> f64) -> f64 {
        self.pairs()
            .into_iter()
            .map(|(i, j)| f(i, j))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn zhu(&self, i: usize, j: usize) -> f64 {
        let m = |v: usize| {
            self.neighbors[v]
                .iter()
                .map(|&u| self.degree[u])
                .sum::<f64>()
        };
        let common: f64 = self.neighbors[i]
            .intersection(&self.neighbors[j])
            .map(|&u| self.degree[u])
            .sum();
        let (di, dj) = (self.degree[i], self.degree[j]);
        (di * di + m(i) + dj * dj + m(j) - 2.0 * common) / (di + dj)
    }
}

#[test]
fn closed_bounds_match_direct_computation() {
    for h in battery_instances(&BatteryConfig::desk(200, 21)).unwrap() {
        let naive = Naive::new(&h);
        let ctx = BoundContext::new(&h).unwrap();
        let twice = 2.0 * naive.delta.iter().copied().fold(0.0, f64::max);
        assert_eq!(ctx.twice_max_delta().bound_value, twice);
        let pair = naive.max_pairs(|i, j| naive.delta[i] + naive.delta[j]);
        assert_eq!(ctx.delta_pair_sum().unwrap().bound_value, pair);

        let (k_min, k_max) = h.edge_size_range().unwrap();
        let factor = (k_max - 1) as f64 / (k_min - 1) as f64;
        let zhu = factor * naive.max_pairs(|i, j| naive.zhu(i, j));
        let r = ctx.zhu_non_uniform(NeighborMode::Distinct).unwrap();
        assert!((r.bound_value - zhu).abs() <= 1e-12 * zhu.max(1.0));
    }
}

#[test]
fn generic_bound_with_unit_weights_matches_direct_computation() {
    for h in battery_instances(&BatteryConfig::desk(100, 22)).unwrap() {
        let naive = Naive::new(&h);
        let ctx = BoundContext::new(&h).unwrap();
        let expected = naive.max_pairs(|i, j| {
            let (ni, nj) = (&naive.neighbors[i], &naive.neighbors[j]);
            (ni.intersection(nj).count() + ni.difference(nj).count() + nj.difference(ni).count())
                as f64
        });
        let r = ctx.zhu_generic(|_, _| 1.0, SetConvention::Literal).unwrap();
        assert_eq!(r.bound_value, expected);
    }
}

#[test]
fn degree_neighbour_bound_holds_on_graphs() {
    for seed in 0..300u64 {
        let n = 3 + (seed % 8) as usize;
        let m = 1 + (seed as usize * 5) % (n * (n - 1) / 2);
        let h = random_hypergraph(n, m, 2, 2, seed).unwrap();
        let ctx = BoundContext::new(&h).unwrap();
        let r = ctx.zhu_uniform().unwrap();
        assert!(r.holds, "seed {seed}: {r:?}");
        assert!(ctx.delta_pair_sum().unwrap().bound_value <= ctx.twice_max_delta().bound_value);
    }
}

#[test]
fn weight_function_must_be_symmetric_and_positive() {
    let h = random_hypergraph(5, 4, 2, 3, 1).unwrap();
    let ctx = BoundContext::new(&h).unwrap();
    assert!(ctx.zhu_generic(|_, _| 0.0, SetConvention::Literal).is_err());
    assert!(ctx
        .zhu_generic(|i, j| (i + 2 * j + 1) as f64, SetConvention::Literal)
        .is_err());
}
