//! Dense symmetric eigendecomposition by cyclic Jacobi rotations, and the
//! Laplacian quantities derived from it.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::SymmetricMatrix;

pub const MAX_SWEEPS: usize = 100;

/// Convergence when the off-diagonal Frobenius norm drops below this
/// fraction of the input's Frobenius norm.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

/// Relative threshold under which an eigenvalue counts as zero.
pub const ZERO_TOLERANCE: f64 = 1e-8;

/// Components below this magnitude are skipped when fixing eigenvector signs.
const SIGN_EPS: f64 = 1e-10;

/// Ascending eigenvalues with orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<f64>>,
    matrix_norm: f64,
}

pub fn eigendecompose(m: &SymmetricMatrix) -> Result<Spectrum> {
    let n = m.dim();
    let norm = m.frobenius_norm();
    let mut a = m.to_rows();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let tol = OFF_DIAGONAL_TOLERANCE * norm;
    let mut sweep = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= tol {
            break;
        }
        if sweep == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure {
                sweeps: sweep,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweep += 1;
    }

    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|j| {
            let mut col: Vec<f64> = v.iter().map(|row| row[j]).collect();
            normalize_sign(&mut col);
            (a[j][j], col)
        })
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        matrix_norm: norm,
    })
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

/// Annihilates `a[p][q]` with a plane rotation and accumulates it into `v`.
fn rotate(a: &mut [Vec<f64>], v: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    for row in a.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = c * x - s * y;
        row[q] = s * x + c * y;
    }
    for k in 0..a.len() {
        let (x, y) = (a[p][k], a[q][k]);
        a[p][k] = c * x - s * y;
        a[q][k] = s * x + c * y;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for row in v.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = c * x - s * y;
        row[q] = s * x + c * y;
    }
}

/// Flips `x` so its first non-negligible component is positive.
fn normalize_sign(x: &mut [f64]) {
    if let Some(&first) = x.iter().find(|c| c.abs() > SIGN_EPS) {
        if first < 0.0 {
            x.iter_mut().for_each(|c| *c = -*c);
        }
    }
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, j: usize) -> &[f64] {
        &self.eigenvectors[j]
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Frobenius norm of the decomposed matrix.
    pub fn matrix_norm(&self) -> f64 {
        self.matrix_norm
    }

    /// Algebraic connectivity, the second-smallest eigenvalue.
    pub fn lambda2(&self) -> Result<f64> {
        self.require_two()?;
        Ok(self.eigenvalues[1])
    }

    pub fn lambda_n(&self) -> Result<f64> {
        self.require_two()?;
        Ok(self.eigenvalues[self.len() - 1])
    }

    /// Unit eigenvector of `λ₂`, first non-negligible component positive.
    pub fn fiedler_vector(&self) -> Result<Vec<f64>> {
        self.require_two()?;
        Ok(self.eigenvectors[1].clone())
    }

    pub fn zero_threshold(&self) -> f64 {
        ZERO_TOLERANCE * self.matrix_norm.max(1.0)
    }

    pub fn zero_multiplicity(&self) -> usize {
        let thr = self.zero_threshold();
        self.eigenvalues.iter().filter(|l| l.abs() <= thr).count()
    }

    /// `max_j ‖M v_j − λ_j v_j‖₂`.
    pub fn max_residual(&self, m: &SymmetricMatrix) -> f64 {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .map(|(&lambda, x)| {
                m.mul_vec(x)
                    .iter()
                    .zip(x)
                    .map(|(mx, xi)| (mx - lambda * xi).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// Largest entry of `|VᵀV − I|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let dot: f64 = self.eigenvectors[i]
                    .iter()
                    .zip(&self.eigenvectors[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    fn require_two(&self) -> Result<()> {
        if self.len() < 2 {
            return Err(Error::TooSmall { n: self.len() });
        }
        Ok(())
    }
}

/// Spectral and combinatorial connectivity side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityCheck {
    /// Union-find answer; authoritative.
    pub connected: bool,
    /// `λ₂` above the zero threshold (vacuously true for a single vertex).
    pub spectral_connected: bool,
    pub components: usize,
    pub zero_multiplicity: usize,
}

impl ConnectivityCheck {
    pub fn consistent(&self) -> bool {
        self.connected == self.spectral_connected && self.components == self.zero_multiplicity
    }
}

pub fn connectivity_check(h: &Hypergraph, spectrum: &Spectrum) -> ConnectivityCheck {
    let components = h.component_count();
    let spectral_connected = match spectrum.lambda2() {
        Ok(l2) => l2 > spectrum.zero_threshold(),
        Err(_) => true,
    };
    ConnectivityCheck {
        connected: components == 1,
        spectral_connected,
        components,
        zero_multiplicity: spectrum.zero_multiplicity(),
    }
}

/// Connectivity of `h`, decided by union-find.
pub fn is_connected(h: &Hypergraph) -> bool {
    h.is_connected()
}

/// Spectrum of the hypergraph Laplacian.
pub fn laplacian_spectrum(h: &Hypergraph) -> Result<Spectrum> {
    eigendecompose(&h.laplacian())
}
