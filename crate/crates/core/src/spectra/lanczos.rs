use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};

/// Symmetric linear operator given by its action.
pub trait SymOp: Sync {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64], y: &mut [f64]);
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LanczosResult {
    /// Largest eigenvalue on the complement of the deflated vectors.
    pub value: f64,
    pub residual: f64,
    pub iterations: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn orthogonalize(v: &mut [f64], basis: &[Vec<f64>]) {
    // two passes keep the basis orthogonal to working precision
    for _ in 0..2 {
        for q in basis {
            let c = dot(v, q);
            axpy(-c, q, v);
        }
    }
}

/// Top eigenvalue of `op` restricted to the orthogonal complement of the
/// unit vectors `deflate`, by Lanczos with full reorthogonalization.
/// Stops once the Ritz residual `beta_k |s_k|` drops below `tol`.
pub fn lanczos_top(
    op: &dyn SymOp,
    deflate: &[Vec<f64>],
    tol: f64,
    max_iter: usize,
    seed: u64,
) -> LanczosResult {
    let n = op.dim();
    let limit = max_iter.min(n.saturating_sub(deflate.len())).max(1);
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    orthogonalize(&mut v, deflate);
    let norm = dot(&v, &v).sqrt();
    v.iter_mut().for_each(|x| *x /= norm);

    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut alpha: Vec<f64> = Vec::new();
    let mut beta: Vec<f64> = Vec::new();
    let mut w = vec![0.0; n];
    let mut best = LanczosResult {
        value: f64::NAN,
        residual: f64::INFINITY,
        iterations: 0,
    };
    for k in 0..limit {
        op.apply(&v, &mut w);
        let a = dot(&w, &v);
        alpha.push(a);
        axpy(-a, &v, &mut w);
        if let Some(prev) = basis.last() {
            axpy(-beta[k - 1], prev, &mut w);
        }
        basis.push(v.clone());
        orthogonalize(&mut w, deflate);
        orthogonalize(&mut w, &basis);
        let b = dot(&w, &w).sqrt();
        let m = alpha.len();
        if k % 5 == 4 || k + 1 == limit || b < 1e-13 {
            let t = DMatrix::from_fn(m, m, |i, j| {
                if i == j {
                    alpha[i]
                } else if i + 1 == j {
                    beta[i]
                } else if j + 1 == i {
                    beta[j]
                } else {
                    0.0
                }
            });
            let eig = SymmetricEigen::new(t);
            let (idx, &theta) = eig
                .eigenvalues
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.total_cmp(y.1))
                .expect("nonempty tridiagonal");
            let residual = b * eig.eigenvectors[(m - 1, idx)].abs();
            best = LanczosResult {
                value: theta,
                residual,
                iterations: m,
            };
            if residual < tol || b < 1e-13 {
                break;
            }
        }
        beta.push(b);
        v = w.iter().map(|x| x / b).collect();
    }
    best
}
