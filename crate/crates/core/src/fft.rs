use rustfft::FftPlanner;

use crate::C64;

/// Unnormalized forward DFT, `X_k = sum_j x_j e^{-2 pi i jk/n}`.
pub(crate) fn forward(buf: &mut [C64]) {
    let mut planner = FftPlanner::<f64>::new();
    planner.plan_fft_forward(buf.len()).process(buf);
}

/// Unnormalized inverse DFT, `x_j = sum_k X_k e^{2 pi i jk/n}`.
pub(crate) fn inverse(buf: &mut [C64]) {
    let mut planner = FftPlanner::<f64>::new();
    planner.plan_fft_inverse(buf.len()).process(buf);
}

/// Linear convolution of two coefficient vectors.
pub(crate) fn convolve(a: &[C64], b: &[C64]) -> Vec<C64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = a.len() + b.len() - 1;
    if a.len().min(b.len()) <= 32 {
        let mut out = vec![C64::new(0.0, 0.0); len];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        return out;
    }
    let n = len.next_power_of_two();
    let mut fa = a.to_vec();
    fa.resize(n, C64::new(0.0, 0.0));
    let mut fb = b.to_vec();
    fb.resize(n, C64::new(0.0, 0.0));
    forward(&mut fa);
    forward(&mut fb);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    inverse(&mut fa);
    let scale = 1.0 / n as f64;
    fa.truncate(len);
    fa.iter_mut().for_each(|x| *x *= scale);
    fa
}
