//! Radix-2 complex FFT used for polynomial multiplication and
//! evaluation/interpolation at roots of unity.

use alloc::vec::Vec;
use num_traits::Float;

use crate::Complex64;

/// Smallest power of two >= n (n >= 1).
pub fn next_pow2(n: usize) -> usize {
    n.next_power_of_two()
}

/// In-place iterative Cooley-Tukey transform. `len` must be a power of two.
/// With `inverse` the result is scaled by `1/len`.
pub fn fft_inplace(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    assert!(n.is_power_of_two(), "fft length must be a power of two");
    if n <= 1 {
        return;
    }

    // Bit-reversal permutation.
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }

    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let ang = sign * core::f64::consts::TAU / len as f64;
        let wlen = Complex64::new(ang.cos(), ang.sin());
        let mut i = 0;
        while i < n {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let u = buf[i + k];
                let v = buf[i + k + len / 2] * w;
                buf[i + k] = u + v;
                buf[i + k + len / 2] = u - v;
                w *= wlen;
            }
            i += len;
        }
        len <<= 1;
    }

    if inverse {
        let scale = 1.0 / n as f64;
        for x in buf.iter_mut() {
            *x *= scale;
        }
    }
}

/// Values of the polynomial with coefficients `coeffs` (ascending) at the
/// `len`-th roots of unity, `len` a power of two >= coeffs.len().
pub fn evaluate_at_roots_of_unity(coeffs: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut buf = Vec::with_capacity(len);
    buf.extend_from_slice(coeffs);
    buf.resize(len, Complex64::new(0.0, 0.0));
    fft_inplace(&mut buf, false);
    buf
}

/// Inverse of [`evaluate_at_roots_of_unity`]: recover coefficients from
/// values at the `values.len()`-th roots of unity.
pub fn interpolate_from_roots_of_unity(values: &[Complex64]) -> Vec<Complex64> {
    let mut buf = values.to_vec();
    fft_inplace(&mut buf, true);
    buf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn round_trip_recovers_coefficients() {
        let coeffs = [c64(1.0, 0.0), c64(-2.0, 0.5), c64(3.0, 0.0), c64(0.0, -1.0)];
        let vals = evaluate_at_roots_of_unity(&coeffs, 8);
        let back = interpolate_from_roots_of_unity(&vals);
        for (i, c) in coeffs.iter().enumerate() {
            assert!((back[i] - c).norm() < 1e-13);
        }
        for c in &back[4..] {
            assert!(c.norm() < 1e-13);
        }
    }

    #[test]
    fn matches_direct_evaluation() {
        let coeffs = [c64(2.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0)];
        let vals = evaluate_at_roots_of_unity(&coeffs, 4);
        // 4th roots of unity: 1, i, -1, -i.
        let pts = [c64(1.0, 0.0), c64(0.0, 1.0), c64(-1.0, 0.0), c64(0.0, -1.0)];
        for (v, x) in vals.iter().zip(pts.iter()) {
            let direct = coeffs[0] + coeffs[1] * x + coeffs[2] * x * x;
            assert!((v - direct).norm() < 1e-13);
        }
    }
}
