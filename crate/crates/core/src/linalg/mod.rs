//! Dense linear algebra and neural-net math primitives.
//!
//! Everything is 64-bit, row-major, and deterministic: `matmul` sums over the
//! inner index in ascending order, so repeated runs with identical inputs are
//! bit-identical. All operations are pure functions on immutable inputs.

mod matrix;
mod rng;
mod svd;

pub use matrix::Matrix;
pub use rng::Rng;
pub use svd::{svd, SvdFactors};

use crate::error::{Error, Result};

/// Row-wise softmax with per-row max subtraction.
///
/// The max shift makes the operation total: rows like `[1000, 0]` neither
/// overflow nor produce NaN.
pub fn softmax_rows(x: &Matrix) -> Matrix {
    let mut out = x.clone();
    for r in 0..out.rows() {
        let row = out.row_mut(r);
        let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut sum = 0.0;
        for v in row.iter_mut() {
            *v = (*v - max).exp();
            sum += *v;
        }
        for v in row.iter_mut() {
            *v /= sum;
        }
    }
    out
}

/// Row-wise layer normalization with population variance and `eps` inside the
/// square root, followed by the per-column affine `gain * xhat + bias`.
pub fn layer_norm(x: &Matrix, gain: &[f64], bias: &[f64], eps: f64) -> Result<Matrix> {
    if gain.len() != x.cols() || bias.len() != x.cols() {
        return Err(Error::Shape {
            op: "layer_norm",
            left: (x.rows(), x.cols()),
            right: (gain.len(), bias.len()),
        });
    }
    if eps <= 0.0 {
        return Err(Error::Config(format!("layer_norm: eps must be > 0, got {eps}")));
    }
    let n = x.cols() as f64;
    let mut out = Matrix::zeros(x.rows(), x.cols());
    for r in 0..x.rows() {
        let row = x.row(r);
        let mean = row.iter().sum::<f64>() / n;
        let var = row.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let inv = 1.0 / (var + eps).sqrt();
        let dst = out.row_mut(r);
        for c in 0..row.len() {
            dst[c] = gain[c] * ((row[c] - mean) * inv) + bias[c];
        }
    }
    Ok(out)
}

/// Default layer-norm epsilon used by every normalization site in the engine.
pub const LAYER_NORM_EPS: f64 = 1e-5;

/// Euclidean norm of a vector.
pub fn vec_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Dot product, summed left to right.
pub fn vec_dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0;
    for i in 0..a.len() {
        acc += a[i] * b[i];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn softmax_symmetric_row() {
        let x = Matrix::from_vec(1, 2, vec![0.0, 0.0]).unwrap();
        let y = softmax_rows(&x);
        assert_eq!(y.row(0), &[0.5, 0.5]);
    }

    #[test]
    fn softmax_analytic_row() {
        let x = Matrix::from_vec(1, 2, vec![2.0_f64.ln(), 0.0]).unwrap();
        let y = softmax_rows(&x);
        assert!((y.row(0)[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((y.row(0)[1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn softmax_extreme_row_does_not_overflow() {
        let x = Matrix::from_vec(1, 2, vec![1000.0, 0.0]).unwrap();
        let y = softmax_rows(&x);
        assert!((y.row(0)[0] - 1.0).abs() <= 1e-12);
        assert!(y.row(0)[1].abs() <= 1e-12);
        assert!(y.row(0).iter().all(|v| v.is_finite()));
    }

    #[test]
    fn softmax_rows_sum_to_one() {
        let mut rng = Rng::new(7);
        let x = Matrix::random_normal(5, 9, &mut rng);
        let y = softmax_rows(&x);
        for r in 0..y.rows() {
            let s: f64 = y.row(r).iter().sum();
            assert!((s - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn layer_norm_constant_row_is_zero() {
        let x = Matrix::from_vec(1, 4, vec![3.0; 4]).unwrap();
        let y = layer_norm(&x, &[1.0; 4], &[0.0; 4], 1e-5).unwrap();
        assert!(y.row(0).iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn layer_norm_already_normalized_row() {
        let x = Matrix::from_vec(1, 2, vec![1.0, -1.0]).unwrap();
        let y = layer_norm(&x, &[1.0; 2], &[0.0; 2], 1e-12).unwrap();
        assert!((y.row(0)[0] - 1.0).abs() < 1e-9);
        assert!((y.row(0)[1] + 1.0).abs() < 1e-9);
    }

    #[test]
    fn layer_norm_matches_two_pass_oracle() {
        let mut rng = Rng::new(42);
        let x = Matrix::random_normal(3, 8, &mut rng);
        let gain: Vec<f64> = (0..8).map(|i| 0.5 + i as f64 * 0.1).collect();
        let bias: Vec<f64> = (0..8).map(|i| -0.2 + i as f64 * 0.05).collect();
        let eps = 1e-5;
        let y = layer_norm(&x, &gain, &bias, eps).unwrap();

        // Independent two-pass mean/variance recomputation.
        for r in 0..x.rows() {
            let row = x.row(r);
            let mut mean = 0.0;
            for v in row {
                mean += v;
            }
            mean /= row.len() as f64;
            let mut var = 0.0;
            for v in row {
                var += (v - mean) * (v - mean);
            }
            var /= row.len() as f64;
            for c in 0..row.len() {
                let expect = gain[c] * ((row[c] - mean) / (var + eps).sqrt()) + bias[c];
                assert!((y.row(r)[c] - expect).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn layer_norm_rejects_bad_eps() {
        let x = Matrix::from_vec(1, 2, vec![1.0, 2.0]).unwrap();
        assert!(layer_norm(&x, &[1.0; 2], &[0.0; 2], 0.0).is_err());
    }
}
