use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

/// Forward/inverse plan pair of one length with reusable scratch.
/// Both directions are unnormalized, as in `rustfft`.
pub(crate) struct FftPair {
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
    scratch: Vec<Complex64>,
}

impl FftPair {
    pub(crate) fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        let len = fwd
            .get_inplace_scratch_len()
            .max(inv.get_inplace_scratch_len());
        Self {
            fwd,
            inv,
            scratch: vec![Complex64::new(0.0, 0.0); len],
        }
    }

    /// `X_k = sum_j x_j exp(-2 pi i j k / n)`
    pub(crate) fn forward(&mut self, data: &mut [Complex64]) {
        self.fwd.process_with_scratch(data, &mut self.scratch);
    }

    /// `x_j = sum_k X_k exp(+2 pi i j k / n)`
    pub(crate) fn inverse(&mut self, data: &mut [Complex64]) {
        self.inv.process_with_scratch(data, &mut self.scratch);
    }
}

/// Signed frequency index of FFT bin `k` for length `n`: `[0, n/2)` then `[-n/2, 0)`.
pub(crate) fn signed_index(k: usize, n: usize) -> i64 {
    if k < n / 2 {
        k as i64
    } else {
        k as i64 - n as i64
    }
}
