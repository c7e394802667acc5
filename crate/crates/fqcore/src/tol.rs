//! All numerical thresholds in one record.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Residual bound for algebraic identities.
    pub identity: f64,
    /// Smallest admissible singular value is `sing_per_dim * dim`.
    pub sing_per_dim: f64,
    /// Eigenvalues closer than this to `(-inf, 0]` are rejected by the square root.
    pub branch_cut: f64,
    /// Relative change allowed when the quadrature node count is doubled.
    pub quad: f64,
    /// Entry-wise bound when comparing extracted rows to printed rows.
    pub row: f64,
    /// Residual bound for hyperscaling identities.
    pub decay: f64,
    /// Base step of the central differences.
    pub step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            identity: 1e-9,
            sing_per_dim: 1e-12,
            branch_cut: 1e-8,
            quad: 1e-10,
            row: 1e-6,
            decay: 1e-5,
            step: 1e-3,
        }
    }
}

impl Tolerances {
    pub fn sing(&self, dim: usize) -> f64 {
        self.sing_per_dim * dim as f64
    }
}
