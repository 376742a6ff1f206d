//! Hypergraph data model and the weighted clique expansion.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// A hypergraph on vertices `0..n` with a set of hyperedges.
///
/// Edges are stored canonically: each edge is a strictly ascending vertex
/// list of length at least two, and the edge list itself is sorted
/// lexicographically with no repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Per-vertex degree `d_i`, Laplacian degree `δ_i` and the edge size range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degree: Vec<usize>,
    pub laplacian_degree: Vec<u64>,
    /// Smallest and largest edge size; `None` when there are no edges.
    pub k_min: Option<usize>,
    pub k_max: Option<usize>,
}

impl Hypergraph {
    /// Validates and canonicalizes a raw edge list over `n` vertices.
    pub fn validate(raw_edges: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut keyed = Vec::with_capacity(raw_edges.len());
        for (idx, mut edge) in raw_edges.into_iter().enumerate() {
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge {
                    edge: idx,
                    vertex: w[0],
                });
            }
            if edge.len() < 2 {
                return Err(Error::SingletonEdge { edge: idx });
            }
            keyed.push((edge, idx));
        }
        keyed.sort();
        if let Some(w) = keyed.windows(2).find(|w| w[0].0 == w[1].0) {
            let (a, b) = (w[0].1, w[1].1);
            return Err(Error::DuplicateEdge {
                first: a.min(b),
                second: a.max(b),
            });
        }
        Ok(Self {
            n,
            edges: keyed.into_iter().map(|(e, _)| e).collect(),
            labels: None,
        })
    }

    /// Attaches external labels, one per vertex index.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::BadParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External label of a vertex, or its index when unlabeled.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    /// Inverse of [`Hypergraph::label`].
    pub fn index_of(&self, label: &str) -> Result<usize> {
        let found = match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse::<usize>().ok().filter(|&v| v < self.n),
        };
        found.ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn edge_size_range(&self) -> Option<(usize, usize)> {
        let k_min = self.edges.iter().map(Vec::len).min()?;
        let k_max = self.edges.iter().map(Vec::len).max()?;
        Some((k_min, k_max))
    }

    /// The common edge size if every edge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        match self.edge_size_range() {
            Some((a, b)) if a == b => Some(a),
            _ => None,
        }
    }

    /// Integer pair counts `a_ij`, row-major, zero diagonal.
    pub fn adjacency_counts(&self) -> Vec<u64> {
        let n = self.n;
        let mut counts = vec![0u64; n * n];
        for edge in &self.edges {
            for (p, &i) in edge.iter().enumerate() {
                for &j in &edge[p + 1..] {
                    counts[i * n + j] += 1;
                    counts[j * n + i] += 1;
                }
            }
        }
        counts
    }

    /// Weighted clique-expansion adjacency matrix.
    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        let counts = self.adjacency_counts();
        let mut a = SymmetricMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                a.set(i, j, counts[i * self.n + j] as f64);
            }
        }
        a
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degree = vec![0usize; self.n];
        let mut laplacian_degree = vec![0u64; self.n];
        for edge in &self.edges {
            for &v in edge {
                degree[v] += 1;
                laplacian_degree[v] += edge.len() as u64 - 1;
            }
        }
        let range = self.edge_size_range();
        DegreeProfile {
            degree,
            laplacian_degree,
            k_min: range.map(|r| r.0),
            k_max: range.map(|r| r.1),
        }
    }

    /// `L = diag(δ) - A`. Entries are exact integers.
    pub fn laplacian(&self) -> SymmetricMatrix {
        let n = self.n;
        let counts = self.adjacency_counts();
        let mut l = SymmetricMatrix::zeros(n);
        for i in 0..n {
            let row = &counts[i * n..(i + 1) * n];
            l.set(i, i, row.iter().sum::<u64>() as f64);
            for j in i + 1..n {
                l.set(i, j, -(row[j] as f64));
            }
        }
        l
    }

    /// Connected-component id per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for edge in &self.edges {
            for w in edge.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut ids = vec![usize::MAX; self.n];
        let mut root_id = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            let r = uf.find(v);
            if root_id[r] == usize::MAX {
                root_id[r] = next;
                next += 1;
            }
            ids[v] = root_id[r];
        }
        ids
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    /// Connectivity by union-find over the edges.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 1-based vertex numbers shifted to 0-based indices.
    fn one_based(edges: &[&[usize]], n: usize) -> Hypergraph {
        Hypergraph::validate(
            edges
                .iter()
                .map(|e| e.iter().map(|v| v - 1).collect())
                .collect(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn validate_accepts_well_formed() {
        let h = Hypergraph::validate(vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3]], 4).unwrap();
        assert_eq!(h.num_edges(), 3);
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn validate_canonicalizes() {
        let h = Hypergraph::validate(vec![vec![3, 1], vec![2, 0, 1]], 4).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![1, 3]]);
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            Hypergraph::validate(vec![vec![0]], 1),
            Err(Error::SingletonEdge { edge: 0 })
        );
        assert_eq!(
            Hypergraph::validate(vec![vec![0, 1, 2], vec![2, 1, 0]], 3),
            Err(Error::DuplicateEdge {
                first: 0,
                second: 1
            })
        );
        assert_eq!(
            Hypergraph::validate(vec![vec![0, 3]], 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Hypergraph::validate(vec![vec![0, 1, 1]], 3),
            Err(Error::DuplicateVertexInEdge { edge: 0, vertex: 1 })
        );
        assert_eq!(Hypergraph::validate(vec![], 0), Err(Error::EmptyVertexSet));
        assert_eq!(
            Hypergraph::validate(vec![vec![]], 2),
            Err(Error::SingletonEdge { edge: 0 })
        );
    }

    #[test]
    fn weighted_expansion_distinguishes_g1_g2() {
        let g1 = one_based(&[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4]], 4);
        let g2 = one_based(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]], 4);
        let a1 = g1.adjacency_matrix();
        // a12=2, a13=1, a14=1, a23=2, a24=2, a34=1
        let expected = [
            (0, 1, 2.0),
            (0, 2, 1.0),
            (0, 3, 1.0),
            (1, 2, 2.0),
            (1, 3, 2.0),
            (2, 3, 1.0),
        ];
        for (i, j, v) in expected {
            assert_eq!(a1.get(i, j), v);
            assert_eq!(a1.get(j, i), v);
        }
        let a2 = g2.adjacency_matrix();
        for i in 0..4 {
            assert_eq!(a1.get(i, i), 0.0);
            for j in 0..4 {
                if i != j {
                    assert_eq!(a2.get(i, j), 2.0);
                }
            }
        }
        // Unweighted supports coincide: both are K4.
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a1.get(i, j) > 0.0, a2.get(i, j) > 0.0);
            }
        }
        assert_ne!(a1, a2);
    }

    #[test]
    fn single_edge_matrices() {
        let h = Hypergraph::validate(vec![vec![0, 1]], 2).unwrap();
        let a = h.adjacency_matrix();
        assert_eq!(a.to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(
            h.laplacian().to_rows(),
            vec![vec![1.0, -1.0], vec![-1.0, 1.0]]
        );
    }

    #[test]
    fn degree_profile_examples() {
        let g1 = one_based(&[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4]], 4);
        let p = g1.degree_profile();
        assert_eq!(p.degree, vec![2, 3, 2, 2]);
        assert_eq!(p.laplacian_degree, vec![4, 6, 4, 4]);
        assert_eq!((p.k_min, p.k_max), (Some(3), Some(3)));

        let h = one_based(&[&[1, 2, 3], &[4, 5, 6], &[3, 4], &[1, 2, 5, 6]], 6);
        let p = h.degree_profile();
        assert_eq!((p.k_min, p.k_max), (Some(2), Some(4)));

        let empty = Hypergraph::validate(vec![], 3).unwrap();
        let p = empty.degree_profile();
        assert_eq!(p.degree, vec![0, 0, 0]);
        assert_eq!(p.laplacian_degree, vec![0, 0, 0]);
        assert_eq!(p.k_min, None);
    }

    #[test]
    fn laplacian_examples() {
        let k43 = Hypergraph::validate(
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
            4,
        )
        .unwrap();
        let l = k43.laplacian();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(l.get(i, j), if i == j { 6.0 } else { -2.0 });
            }
        }

        let g1 = one_based(&[&[1, 2, 3], &[1, 2, 4], &[2, 3, 4]], 4);
        let (l, a) = (g1.laplacian(), g1.adjacency_matrix());
        let diag = [4.0, 6.0, 4.0, 4.0];
        for i in 0..4 {
            assert_eq!(l.get(i, i), diag[i]);
            assert_eq!(l.row_sum(i), 0.0);
            for j in 0..4 {
                if i != j {
                    assert_eq!(l.get(i, j), -a.get(i, j));
                }
            }
        }
    }

    #[test]
    fn components_and_labels() {
        let h = Hypergraph::validate(vec![vec![0, 1], vec![2, 3]], 5).unwrap();
        assert_eq!(h.components(), vec![0, 0, 1, 1, 2]);
        assert!(!h.is_connected());
        let single = Hypergraph::validate(vec![], 1).unwrap();
        assert!(single.is_connected());

        let h = h
            .with_labels(["a", "b", "c", "d", "e"].map(String::from).to_vec())
            .unwrap();
        assert_eq!(h.index_of("c"), Ok(2));
        assert_eq!(h.label(4), "e");
        assert!(h.index_of("z").is_err());
    }
}
