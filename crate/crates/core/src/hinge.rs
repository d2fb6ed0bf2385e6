//! Deterministic epoch-based SGD for an L2-regularized hinge-loss linear
//! classifier.  Shared by the classifier-committee and feature-ranking
//! induction methods.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Sparse feature vector: (feature id, value) pairs.
pub(crate) type SparseVec = Vec<(u32, f64)>;

pub(crate) fn dot(weights: &[f64], x: &SparseVec) -> f64 {
    x.iter().map(|&(i, v)| weights[i as usize] * v).sum()
}

pub(crate) fn l2_normalize(x: &mut SparseVec) {
    let norm: f64 = x.iter().map(|&(_, v)| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for (_, v) in x.iter_mut() {
            *v /= norm;
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct HingeModel {
    pub weights: Vec<f64>,
    pub bias: f64,
}

impl HingeModel {
    pub fn margin(&self, x: &SparseVec) -> f64 {
        dot(&self.weights, x) + self.bias
    }
}

/// Trains on `(vector, label)` samples with labels in {-1, +1}.  The epoch
/// order is shuffled with a seeded generator, so identical inputs and seed
/// give bit-identical weights; negating every label negates the weights
/// exactly.
pub(crate) fn train_hinge(
    samples: &[(SparseVec, f64)],
    dim: usize,
    epochs: usize,
    lambda: f64,
    seed: u64,
) -> HingeModel {
    let mut weights = vec![0.0; dim];
    let mut scale = 1.0_f64;
    let mut bias = 0.0_f64;
    let mut order: Vec<usize> = (0..samples.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = 0u64;
    for _ in 0..epochs {
        order.shuffle(&mut rng);
        for &idx in &order {
            let (x, y) = &samples[idx];
            t += 1;
            let eta = 1.0 / (lambda * t as f64);
            let margin = y * (scale * dot(&weights, x) + bias);
            scale *= 1.0 - eta * lambda;
            if scale.abs() < 1e-9 {
                // Fold the scale in before it underflows.
                for w in &mut weights {
                    *w *= scale;
                }
                scale = 1.0;
            }
            if margin < 1.0 {
                for &(i, v) in x {
                    weights[i as usize] += eta * y * v / scale;
                }
                bias += eta * y;
            }
        }
    }
    for w in &mut weights {
        *w *= scale;
    }
    HingeModel { weights, bias }
}
