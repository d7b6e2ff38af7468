//! Dense row-major f64 tensors and the forward-only numeric kernels.
//!
//! The reverse-mode tape in [`crate::tape`] calls into these kernels for its
//! forward computations, so there is a single implementation of each op.

use crate::error::{Error, Result};
use crate::rng::Rng;

/// A dense tensor of 64-bit floats, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    pub shape: Vec<usize>,
    pub values: Vec<f64>,
    pub requires_grad: bool,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        let expect: usize = shape.iter().product();
        if expect != values.len() {
            return Err(Error::Dim(format!(
                "shape {:?} holds {} values, got {}",
                shape,
                expect,
                values.len()
            )));
        }
        Ok(Tensor {
            shape,
            values,
            requires_grad: false,
        })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape,
            values: vec![0.0; n],
            requires_grad: false,
        }
    }

    pub fn scalar(x: f64) -> Self {
        Tensor {
            shape: vec![1],
            values: vec![x],
            requires_grad: false,
        }
    }

    pub fn matrix(rows: usize, cols: usize, values: Vec<f64>) -> Result<Self> {
        Tensor::new(vec![rows, cols], values)
    }

    /// Uniform init in [-1/sqrt(fan_in), +1/sqrt(fan_in)].
    pub fn uniform_init(shape: Vec<usize>, fan_in: usize, rng: &mut Rng) -> Self {
        let bound = 1.0 / (fan_in as f64).sqrt();
        let n: usize = shape.iter().product();
        let values = (0..n).map(|_| rng.uniform(-bound, bound)).collect();
        Tensor {
            shape,
            values,
            requires_grad: false,
        }
    }

    pub fn with_grad(mut self) -> Self {
        self.requires_grad = true;
        self
    }

    pub fn numel(&self) -> usize {
        self.values.len()
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    /// Row count / column count for rank-2 tensors.
    pub fn rows(&self) -> usize {
        self.shape[0]
    }

    pub fn cols(&self) -> usize {
        self.shape[self.shape.len() - 1]
    }

    pub fn is_scalar(&self) -> bool {
        self.numel() == 1
    }

    pub fn row(&self, r: usize) -> &[f64] {
        let c = self.cols();
        &self.values[r * c..(r + 1) * c]
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// Standard matrix product of two rank-2 tensors.
pub fn matmul(a: &Tensor, b: &Tensor) -> Result<Tensor> {
    if a.rank() != 2 || b.rank() != 2 {
        return Err(Error::Dim(format!(
            "matmul needs rank-2 operands, got {:?} x {:?}",
            a.shape, b.shape
        )));
    }
    let (m, k) = (a.shape[0], a.shape[1]);
    let (k2, n) = (b.shape[0], b.shape[1]);
    if k != k2 {
        return Err(Error::Dim(format!(
            "matmul inner dimensions disagree: {:?} x {:?}",
            a.shape, b.shape
        )));
    }
    let mut out = vec![0.0; m * n];
    for i in 0..m {
        let arow = &a.values[i * k..(i + 1) * k];
        let orow = &mut out[i * n..(i + 1) * n];
        for (kk, &aik) in arow.iter().enumerate() {
            let brow = &b.values[kk * n..(kk + 1) * n];
            for (o, &bv) in orow.iter_mut().zip(brow.iter()) {
                *o += aik * bv;
            }
        }
    }
    Tensor::new(vec![m, n], out)
}

/// Softmax along `axis`, computed with max-subtraction for stability.
pub fn softmax(x: &Tensor, axis: usize) -> Result<Tensor> {
    if axis >= x.rank() {
        return Err(Error::Dim(format!(
            "softmax axis {} out of range for shape {:?}",
            axis, x.shape
        )));
    }
    let axis_len = x.shape[axis];
    let inner: usize = x.shape[axis + 1..].iter().product();
    let outer: usize = x.shape[..axis].iter().product();
    let mut out = vec![0.0; x.numel()];
    for o in 0..outer {
        for i in 0..inner {
            let base = o * axis_len * inner + i;
            let mut max = f64::NEG_INFINITY;
            for j in 0..axis_len {
                max = max.max(x.values[base + j * inner]);
            }
            let mut sum = 0.0;
            for j in 0..axis_len {
                let e = (x.values[base + j * inner] - max).exp();
                out[base + j * inner] = e;
                sum += e;
            }
            for j in 0..axis_len {
                out[base + j * inner] /= sum;
            }
        }
    }
    Tensor::new(x.shape.clone(), out)
}

/// Layer normalization over the last axis: per row, subtract the mean, divide
/// by sqrt(population variance + eps), then scale by `gain` and shift by
/// `bias` (both length = last axis).
pub fn layer_norm(x: &Tensor, gain: &[f64], bias: &[f64], eps: f64) -> Result<Tensor> {
    if eps <= 0.0 {
        return Err(Error::Usage(format!("layer_norm eps must be > 0, got {eps}")));
    }
    let n = x.cols();
    if gain.len() != n || bias.len() != n {
        return Err(Error::Dim(format!(
            "layer_norm gain/bias length {}/{} does not match last axis {}",
            gain.len(),
            bias.len(),
            n
        )));
    }
    let rows = x.numel() / n;
    let mut out = vec![0.0; x.numel()];
    for r in 0..rows {
        let xin = &x.values[r * n..(r + 1) * n];
        let mean = xin.iter().sum::<f64>() / n as f64;
        let var = xin.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
        let inv = 1.0 / (var + eps).sqrt();
        let orow = &mut out[r * n..(r + 1) * n];
        for j in 0..n {
            orow[j] = (xin[j] - mean) * inv * gain[j] + bias[j];
        }
    }
    Tensor::new(x.shape.clone(), out)
}
