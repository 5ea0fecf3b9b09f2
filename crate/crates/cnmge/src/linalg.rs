//! Dense vector/matrix kernel: norms, LU solve with partial pivoting and a
//! forward-difference Jacobian.

use crate::error::Error;
use std::ops::Deref;

/// Relative pivot threshold below which LU elimination reports a singular matrix.
pub const SINGULAR_PIVOT_REL: f64 = 1e-14;

/// Dense real vector. Construction guarantees at least one entry and all
/// entries finite, so downstream code can rely on well-formed values.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    data: Vec<f64>,
}

impl Vector {
    /// Validates and wraps raw entries.
    pub fn new(data: Vec<f64>) -> Result<Self, Error> {
        if data.is_empty() {
            return Err(Error::Empty);
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "vector construction",
            });
        }
        Ok(Self { data })
    }

    pub fn zeros(n: usize) -> Self {
        Self::filled(n, 0.0)
    }

    pub fn ones(n: usize) -> Self {
        Self::filled(n, 1.0)
    }

    pub fn filled(n: usize, value: f64) -> Self {
        assert!(n >= 1, "vector length must be at least 1");
        assert!(value.is_finite());
        Self {
            data: vec![value; n],
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }
}

impl Deref for Vector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.data
    }
}

impl AsRef<[f64]> for Vector {
    fn as_ref(&self) -> &[f64] {
        &self.data
    }
}

/// Dense square matrix in row-major order with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Validates and wraps row-major entries of an `n`-by-`n` matrix.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if data.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                found: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                context: "matrix construction",
            });
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(n, data)
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.n + col] = value;
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut out = vec![0.0; self.n];
        for (i, o) in out.iter_mut().enumerate() {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            *o = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// Induced infinity norm: maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .map(|v| v.abs())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }
}

/// Maximum absolute entry.
pub fn inf_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

/// Sum of absolute entries.
pub fn one_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Euclidean norm, scaled to avoid overflow for extreme entries.
pub fn euclid_norm(v: &[f64]) -> f64 {
    let scale = inf_norm(v);
    if scale == 0.0 || !scale.is_finite() {
        return scale;
    }
    let sum: f64 = v.iter().map(|x| (x / scale) * (x / scale)).sum();
    scale * sum.sqrt()
}

/// Solves `A x = b` by LU factorization with partial pivoting.
///
/// Reports [`Error::Singular`] when the chosen pivot magnitude falls below
/// `1e-14 * ||A||_inf`, signalling that the Newton step is unavailable.
pub fn solve_linear(a: &Matrix, b: &[f64]) -> Result<Vector, Error> {
    let n = a.dim();
    if b.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: b.len(),
        });
    }
    let threshold = SINGULAR_PIVOT_REL * a.inf_norm();
    let mut lu = a.data.clone();
    let mut x = b.to_vec();

    for k in 0..n {
        // Partial pivoting: pick the largest magnitude in column k.
        let mut p = k;
        let mut best = lu[k * n + k].abs();
        for r in k + 1..n {
            let v = lu[r * n + k].abs();
            if v > best {
                best = v;
                p = r;
            }
        }
        if best < threshold || best == 0.0 {
            return Err(Error::Singular {
                pivot: best,
                threshold,
            });
        }
        if p != k {
            for c in 0..n {
                lu.swap(k * n + c, p * n + c);
            }
            x.swap(k, p);
        }
        let pivot = lu[k * n + k];
        for r in k + 1..n {
            let m = lu[r * n + k] / pivot;
            if m != 0.0 {
                for c in k + 1..n {
                    lu[r * n + c] -= m * lu[k * n + c];
                }
                x[r] -= m * x[k];
            }
            lu[r * n + k] = m;
        }
    }

    for k in (0..n).rev() {
        let mut s = x[k];
        for c in k + 1..n {
            s -= lu[k * n + c] * x[c];
        }
        x[k] = s / lu[k * n + k];
    }

    Vector::new(x).map_err(|_| Error::NonFinite {
        context: "linear solve result",
    })
}

/// Forward-difference Jacobian of `f` at `x`: column `i` is
/// `(f(x + step e_i) - f(x)) / step`.
pub fn fd_jacobian<F>(f: F, x: &[f64], step: f64) -> Result<Matrix, Error>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    assert!(step > 0.0, "finite-difference step must be positive");
    let n = x.len();
    let f0 = f(x);
    if f0.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: f0.len(),
        });
    }
    if f0.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            context: "finite-difference base evaluation",
        });
    }
    let mut m = Matrix::zeros(n);
    let mut xp = x.to_vec();
    for j in 0..n {
        let saved = xp[j];
        xp[j] = saved + step;
        let fj = f(&xp);
        xp[j] = saved;
        if fj.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: fj.len(),
            });
        }
        for i in 0..n {
            let d = (fj[i] - f0[i]) / step;
            if !d.is_finite() {
                return Err(Error::NonFinite {
                    context: "finite-difference column",
                });
            }
            m.set(i, j, d);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn vector_rejects_empty_and_non_finite() {
        assert_eq!(Vector::new(vec![]), Err(Error::Empty));
        assert!(matches!(
            Vector::new(vec![1.0, f64::NAN]),
            Err(Error::NonFinite { .. })
        ));
        assert!(Vector::new(vec![0.0]).is_ok());
    }

    #[test]
    fn matrix_rejects_non_square_and_non_finite() {
        assert!(matches!(
            Matrix::new(2, vec![1.0, 2.0, 3.0]),
            Err(Error::Dimension { .. })
        ));
        assert!(matches!(
            Matrix::new(1, vec![f64::INFINITY]),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(3);
        let x = solve_linear(&a, &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(x.as_slice(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn solve_diagonal() {
        let a = Matrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 4.0]]).unwrap();
        let x = solve_linear(&a, &[2.0, 8.0]).unwrap();
        assert_eq!(x.as_slice(), &[1.0, 2.0]);
    }

    #[test]
    fn solve_zero_matrix_is_singular() {
        let a = Matrix::zeros(2);
        assert!(matches!(
            solve_linear(&a, &[1.0, 1.0]),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn solve_requires_pivoting() {
        // Zero leading pivot forces a row swap.
        let a = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let x = solve_linear(&a, &[3.0, 7.0]).unwrap();
        assert_eq!(x.as_slice(), &[7.0, 3.0]);
    }

    #[test]
    fn norms() {
        assert_eq!(inf_norm(&[0.0, 0.0, 0.0]), 0.0);
        assert_eq!(inf_norm(&[-3.0, 2.0]), 3.0);
        assert_eq!(inf_norm(&[1e-7, -1e-6]), 1e-6);
        assert_eq!(euclid_norm(&[3.0, 4.0]), 5.0);
        assert_eq!(euclid_norm(&[0.0]), 0.0);
        assert_eq!(euclid_norm(&[1.0, 1.0, 1.0, 1.0]), 2.0);
        assert_eq!(one_norm(&[1.0, -2.0, 3.0]), 6.0);
    }

    #[test]
    fn euclid_norm_does_not_overflow() {
        let n = euclid_norm(&[1e200, 1e200]);
        assert!((n - 1e200 * std::f64::consts::SQRT_2).abs() / n < 1e-15);
    }

    /// Random diagonally dominant system, well conditioned by construction.
    fn random_dominant(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let mut a = Matrix::zeros(n);
        for i in 0..n {
            let mut row_sum = 0.0;
            for j in 0..n {
                if i != j {
                    let v = rng.gen_range(-1.0..1.0);
                    a.set(i, j, v);
                    row_sum += v.abs();
                }
            }
            a.set(i, i, row_sum + 1.0 + rng.gen_range(0.0..1.0));
        }
        a
    }

    #[test]
    fn solve_multiply_roundtrip_50x50() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let a = random_dominant(50, &mut rng);
            let b: Vec<f64> = (0..50).map(|_| rng.gen_range(-10.0..10.0)).collect();
            let x = solve_linear(&a, &b).unwrap();
            let r = a.mul_vec(&x);
            let bound = 1e-10 * (1.0 + inf_norm(&b));
            for i in 0..50 {
                assert!(
                    (r[i] - b[i]).abs() <= bound,
                    "residual {} exceeds {}",
                    (r[i] - b[i]).abs(),
                    bound
                );
            }
        }
    }

    #[test]
    fn fd_jacobian_identity_map() {
        let f = |x: &[f64]| x.to_vec();
        let j = fd_jacobian(f, &[0.3, -1.7, 4.0], 1e-6).unwrap();
        // Off-diagonal differences cancel exactly; diagonal entries carry only
        // rounding error from the forward difference.
        for i in 0..3 {
            for k in 0..3 {
                if i == k {
                    assert!((j.get(i, k) - 1.0).abs() < 1e-9);
                } else {
                    assert_eq!(j.get(i, k), 0.0);
                }
            }
        }
    }

    #[test]
    fn fd_jacobian_componentwise_quadratic() {
        // F(x) = (x1^2, x2): forward difference of the first component is 2 x1 + h.
        let f = |x: &[f64]| vec![x[0] * x[0], x[1]];
        let h = 1e-6;
        let j = fd_jacobian(f, &[1.0, 5.0], h).unwrap();
        assert!((j.get(0, 0) - (2.0 + h)).abs() < 1e-9);
        assert_eq!(j.get(0, 1), 0.0);
        assert_eq!(j.get(1, 0), 0.0);
        assert!((j.get(1, 1) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn fd_jacobian_matches_rosenbrock_hessian() {
        // Gradient of the 2-D Rosenbrock function; its Jacobian is the Hessian.
        let grad = |x: &[f64]| {
            vec![
                -400.0 * x[0] * (x[1] - x[0] * x[0]) - 2.0 * (1.0 - x[0]),
                200.0 * (x[1] - x[0] * x[0]),
            ]
        };
        let j = fd_jacobian(grad, &[1.0, 1.0], 1e-6).unwrap();
        let expected = [[802.0, -400.0], [-400.0, 200.0]];
        for i in 0..2 {
            for k in 0..2 {
                assert!(
                    (j.get(i, k) - expected[i][k]).abs() < 1e-2,
                    "entry ({i},{k}) = {}",
                    j.get(i, k)
                );
            }
        }
    }

    #[test]
    fn fd_jacobian_affine_map_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        for _ in 0..10 {
            let n = 6;
            let a = random_dominant(n, &mut rng);
            let c: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let af = |p: &[f64]| {
                let mut v = a.mul_vec(p);
                for (vi, ci) in v.iter_mut().zip(&c) {
                    *vi += ci;
                }
                v
            };
            let j = fd_jacobian(af, &x, 1e-6).unwrap();
            for i in 0..n {
                for k in 0..n {
                    // No truncation error for affine maps; only rounding remains.
                    assert!(
                        (j.get(i, k) - a.get(i, k)).abs() <= 1e-8 * (1.0 + a.get(i, k).abs()),
                        "entry ({i},{k}): {} vs {}",
                        j.get(i, k),
                        a.get(i, k)
                    );
                }
            }
        }
    }

    #[test]
    fn fd_jacobian_rejects_non_finite() {
        let f = |x: &[f64]| vec![1.0 / x[0]];
        assert!(matches!(
            fd_jacobian(f, &[0.0], 1e-6),
            Err(Error::NonFinite { .. })
        ));
    }
}
