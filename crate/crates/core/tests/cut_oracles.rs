use num_rational::Ratio;
use proptest::prelude::*;

use hyperspec::battery::{battery_instances, BatteryConfig};
use hyperspec::connectivity::{edge_boundary, edge_contribution, CutCertifier};
use hyperspec::generators::{distinct_edge_count, random_hypergraph};
use hyperspec::Hypergraph;

fn sample(n: usize, m: usize, k_max: usize, seed: u64) -> Hypergraph {
    let k_max = k_max.min(n);
    let m = m.min(distinct_edge_count(n, 2, k_max) as usize);
    random_hypergraph(n, m, 2, k_max, seed).unwrap()
}

fn members(mask: u32, n: usize) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

fn crossing_edges(h: &Hypergraph, inside: &[bool]) -> usize {
    h.edges()
        .iter()
        .filter(|e| e.iter().any(|&v| inside[v]) && e.iter().any(|&v| !inside[v]))
        .count()
}

fn naive_max_cut(h: &Hypergraph) -> usize {
    (0..1u32 << h.n())
        .map(|m| crossing_edges(h, &members(m, h.n())))
        .max()
        .unwrap()
}

fn naive_isoperimetric(h: &Hypergraph) -> Ratio<u64> {
    let n = h.n();
    (1..1u32 << n)
        .filter(|m| 2 * m.count_ones() as usize <= n)
        .map(|m| {
            Ratio::new(
                crossing_edges(h, &members(m, n)) as u64,
                m.count_ones() as u64,
            )
        })
        .min()
        .unwrap()
}

fn to_subset(inside: &[bool]) -> Vec<usize> {
    (0..inside.len()).filter(|&v| inside[v]).collect()
}

#[test]
fn enumeration_matches_naive_oracle() {
    for h in battery_instances(&BatteryConfig::desk(150, 3)).unwrap() {
        let cert = CutCertifier::new(&h).unwrap();
        let (mc, witness) = cert.max_cut().unwrap();
        assert_eq!(mc, naive_max_cut(&h));
        assert_eq!(edge_boundary(&h, &witness).unwrap().size, mc);

        let (phi, iso_witness) = cert.isoperimetric().unwrap();
        assert_eq!(phi, naive_isoperimetric(&h));
        let b = edge_boundary(&h, &iso_witness).unwrap().size as u64;
        assert_eq!(Ratio::new(b, iso_witness.len() as u64), phi);
        assert!(2 * iso_witness.len() <= h.n());
    }
}

#[test]
fn complete_three_graph_cut_values() {
    let h = hyperspec::generators::complete_k_graph(4, 3).unwrap();
    assert_eq!(naive_max_cut(&h), 4);
    assert_eq!(naive_isoperimetric(&h), Ratio::from_integer(2));
    let summary = CutCertifier::new(&h).unwrap().summary().unwrap();
    assert_eq!(summary.max_cut, 4);
    assert_eq!(summary.isoperimetric, Ratio::from_integer(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boundary_matches_crossing_count(n in 3usize..=9, m in 1usize..=12, seed in any::<u64>(), mask in any::<u32>()) {
        let h = sample(n, m, 3, seed);
        let inside = members(mask, n);
        let subset = to_subset(&inside);
        let b = edge_boundary(&h, &subset).unwrap();
        prop_assert_eq!(b.size, crossing_edges(&h, &inside));
        prop_assert_eq!(b.edges.len(), b.size);
    }

    #[test]
    fn contributions_sum_to_quadratic_form(n in 3usize..=9, m in 1usize..=12, seed in any::<u64>(), mask in any::<u32>()) {
        let h = sample(n, m, 4, seed);
        let inside = members(mask, n);
        let subset = to_subset(&inside);
        let chi: Vec<f64> = inside.iter().map(|&b| f64::from(u8::from(b))).collect();
        let form = h.laplacian().quadratic_form(&chi);
        let total: u64 = h.edges().iter().map(|e| edge_contribution(e, &subset)).sum();
        let naive: usize = h
            .edges()
            .iter()
            .map(|e| {
                let k = e.iter().filter(|&&v| inside[v]).count();
                k * (e.len() - k)
            })
            .sum();
        prop_assert_eq!(total, naive as u64);
        prop_assert_eq!(form, naive as f64);
    }

    #[test]
    fn boundary_is_complement_symmetric(n in 3usize..=9, m in 1usize..=12, seed in any::<u64>(), mask in any::<u32>()) {
        let h = sample(n, m, 3, seed);
        let inside = members(mask, n);
        let outside: Vec<bool> = inside.iter().map(|b| !b).collect();
        prop_assert_eq!(
            edge_boundary(&h, &to_subset(&inside)).unwrap().size,
            edge_boundary(&h, &to_subset(&outside)).unwrap().size
        );
    }
}
