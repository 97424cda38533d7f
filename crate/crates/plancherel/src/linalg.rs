//! Dense complex linear algebra used by the character engine and the
//! positive-type checks: a cyclic Jacobi eigensolver for Hermitian matrices
//! and Gaussian elimination for small square systems.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Square matrix stored row-major.
#[derive(Clone, Debug)]
pub struct CMatrix {
    pub n: usize,
    pub data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.at(i, j).norm_sqr();
                }
            }
        }
        s.sqrt()
    }
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues ascending and
/// an orthonormal set of eigenvectors (columns of the returned matrix).
pub fn hermitian_eigen(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = a.n;
    let mut m = a.clone();
    let mut v = CMatrix::identity(n);
    let scale = m.frobenius().max(1e-300);
    let tol = 1e-14 * scale;

    for _sweep in 0..100 {
        if m.off_diagonal_norm() <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let g = m.at(p, q);
                if g.norm() <= tol / (n as f64) {
                    continue;
                }
                // Diagonalize the 2x2 block [[alpha, g], [conj(g), beta]]
                // exactly: (u1, u2) is an orthonormal eigenbasis.
                let alpha = m.at(p, p).re;
                let beta = m.at(q, q).re;
                let d = 0.5 * (alpha - beta);
                let r = (d * d + g.norm_sqr()).sqrt();
                // Component along e_q of the eigenvector for the larger
                // eigenvalue, written to avoid cancellation.
                let y = if d >= 0.0 {
                    g.norm_sqr() / (r + d)
                } else {
                    r - d
                };
                let norm = (g.norm_sqr() + y * y).sqrt();
                let a1 = g / norm; // complex
                let b1 = y / norm; // real
                // u1 = (a1, b1), u2 = (-b1 * a1/|a1|, |a1|).
                let phase = a1 / a1.norm();
                let u2p = -b1 * phase;
                let u2q = a1.norm();

                // m <- G^H m G, columns first, then rows.
                for row in 0..n {
                    let mp = m.at(row, p);
                    let mq = m.at(row, q);
                    m.set(row, p, mp * a1 + mq * b1);
                    m.set(row, q, mp * u2p + mq * u2q);
                }
                for col in 0..n {
                    let mp = m.at(p, col);
                    let mq = m.at(q, col);
                    m.set(p, col, mp * a1.conj() + mq * b1);
                    m.set(q, col, mp * u2p.conj() + mq * u2q);
                }
                for row in 0..n {
                    let vp = v.at(row, p);
                    let vq = v.at(row, q);
                    v.set(row, p, vp * a1 + vq * b1);
                    v.set(row, q, vp * u2p + vq * u2q);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let eig: Vec<f64> = (0..n).map(|i| m.at(i, i).re).collect();
    order.sort_by(|&i, &j| eig[i].partial_cmp(&eig[j]).unwrap());
    let values = order.iter().map(|&i| eig[i]).collect();
    let mut vectors = CMatrix::zeros(n);
    for (new, &old) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, new, v.at(row, old));
        }
    }
    (values, vectors)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &CMatrix) -> f64 {
    hermitian_eigen(a).0[0]
}

/// Solve a·x = b by Gaussian elimination with partial pivoting.
pub fn solve(a: &CMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = a.n;
    assert_eq!(b.len(), n);
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    let scale = m.frobenius().max(1e-300);
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, m.at(r, col).norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot_mag < 1e-12 * scale {
            return Err(Error::SingularSystem);
        }
        if pivot_row != col {
            for j in 0..n {
                let t = m.at(col, j);
                m.set(col, j, m.at(pivot_row, j));
                m.set(pivot_row, j, t);
            }
            rhs.swap(col, pivot_row);
        }
        let inv = Complex64::new(1.0, 0.0) / m.at(col, col);
        for r in (col + 1)..n {
            let factor = m.at(r, col) * inv;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for j in col..n {
                let v = m.at(r, j) - factor * m.at(col, j);
                m.set(r, j, v);
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for j in (row + 1)..n {
            acc -= m.at(row, j) * x[j];
        }
        x[row] = acc / m.at(row, row);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, seed: u64) -> CMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut b = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                b.set(
                    i,
                    j,
                    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                );
            }
        }
        // A = B + B^H is Hermitian.
        let mut a = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                a.set(i, j, b.at(i, j) + b.at(j, i).conj());
            }
        }
        a
    }

    #[test]
    fn known_two_by_two() {
        let mut a = CMatrix::zeros(2);
        a.set(0, 0, Complex64::new(1.0, 0.0));
        a.set(0, 1, Complex64::new(-1.0, 0.0));
        a.set(1, 0, Complex64::new(-1.0, 0.0));
        a.set(1, 1, Complex64::new(1.0, 0.0));
        let (vals, _) = hermitian_eigen(&a);
        assert!((vals[0] - 0.0).abs() < 1e-12);
        assert!((vals[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn eigen_reconstruction() {
        for seed in 0..4u64 {
            let n = 7;
            let a = random_hermitian(n, seed);
            let (vals, vecs) = hermitian_eigen(&a);
            for k in 0..n {
                for i in 0..n {
                    let mut av = Complex64::new(0.0, 0.0);
                    for j in 0..n {
                        av += a.at(i, j) * vecs.at(j, k);
                    }
                    let diff = av - vecs.at(i, k) * vals[k];
                    assert!(diff.norm() < 1e-10, "residual too large: {}", diff.norm());
                }
            }
            // Orthonormality.
            for k in 0..n {
                for l in 0..n {
                    let mut dot = Complex64::new(0.0, 0.0);
                    for i in 0..n {
                        dot += vecs.at(i, k).conj() * vecs.at(i, l);
                    }
                    let expect = if k == l { 1.0 } else { 0.0 };
                    assert!((dot - expect).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn solve_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 6;
        let mut a = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                a.set(
                    i,
                    j,
                    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                );
            }
        }
        let x_true: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            for j in 0..n {
                b[i] += a.at(i, j) * x_true[j];
            }
        }
        let x = solve(&a, &b).unwrap();
        for i in 0..n {
            assert!((x[i] - x_true[i]).norm() < 1e-9);
        }
    }

    #[test]
    fn singular_detected() {
        let a = CMatrix::zeros(3);
        assert!(matches!(
            solve(&a, &[Complex64::new(1.0, 0.0); 3]),
            Err(Error::SingularSystem)
        ));
    }
}
