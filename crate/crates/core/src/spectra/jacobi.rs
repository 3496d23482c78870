//! Cyclic Jacobi eigensolver for dense symmetric matrices, generic over the
//! floating-point scalar. Matrices here are small (n <= ~200), so the cubic
//! sweep cost is irrelevant and the accuracy (residuals near machine epsilon
//! times the norm) is what matters.

use num_traits::Float;

/// Eigenvalues (descending) and the max infinity-norm residual
/// `max_i ||A x_i - lambda_i x_i||_inf` over the computed eigenpairs.
pub fn symmetric_eigenvalues<F: Float>(matrix: &[Vec<F>]) -> (Vec<F>, F) {
    let n = matrix.len();
    if n == 0 {
        return (Vec::new(), F::zero());
    }
    let mut a: Vec<Vec<F>> = matrix.to_vec();
    let mut v: Vec<Vec<F>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect();

    let eps = F::epsilon();
    for _sweep in 0..64 {
        let mut off = F::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + a[p][q] * a[p][q];
            }
        }
        let scale = (0..n).fold(F::zero(), |m, i| m.max(a[i][i].abs()));
        if off.sqrt() <= eps * (scale + F::one()) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == F::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (F::from(2.0).unwrap() * apq);
                let t = {
                    let abs_th = theta.abs();
                    let s = (abs_th * abs_th + F::one()).sqrt();
                    let t = F::one() / (abs_th + s);
                    if theta < F::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = F::one() / (t * t + F::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j][j].partial_cmp(&a[i][i]).unwrap());
    let values: Vec<F> = order.iter().map(|&i| a[i][i]).collect();

    // residual against the original matrix
    let mut residual = F::zero();
    for (col, &i) in order.iter().enumerate() {
        let lambda = values[col];
        for r in 0..n {
            let mut acc = F::zero();
            for k in 0..n {
                acc = acc + matrix[r][k] * v[k][i];
            }
            residual = residual.max((acc - lambda * v[r][i]).abs());
        }
    }
    (values, residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let m = vec![vec![0.0f64, 1.0], vec![1.0, 0.0]];
        let (vals, res) = symmetric_eigenvalues(&m);
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] + 1.0).abs() < 1e-12);
        assert!(res < 1e-12);
    }

    #[test]
    fn f32_also_works() {
        let m = vec![vec![2.0f32, 1.0], vec![1.0, 2.0]];
        let (vals, res) = symmetric_eigenvalues(&m);
        assert!((vals[0] - 3.0).abs() < 1e-5);
        assert!((vals[1] - 1.0).abs() < 1e-5);
        assert!(res < 1e-4);
    }

    #[test]
    fn empty_matrix() {
        let (vals, _) = symmetric_eigenvalues::<f64>(&[]);
        assert!(vals.is_empty());
    }
}
