//! Eigenvalues of small Hermitian matrices by cyclic Jacobi rotation.

use num_complex::Complex64;

const OFF_DIAGONAL_THRESHOLD: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    let scale = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= OFF_DIAGONAL_THRESHOLD * scale.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Eigenvalues of a Hermitian matrix H = A + iB, ascending, via the real
/// symmetric embedding [[A, −B], [B, A]] whose spectrum is that of H doubled.
pub fn hermitian_eigenvalues(h: &[Vec<Complex64>]) -> Vec<f64> {
    let n = h.len();
    let mut big = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let z = h[i][j];
            big[i][j] = z.re;
            big[i + n][j + n] = z.re;
            big[i][j + n] = -z.im;
            big[i + n][j] = z.im;
        }
    }
    symmetric_eigenvalues(big).into_iter().step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let e = symmetric_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!((e[0] - 1.0).abs() < 1e-14 && (e[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_and_zero() {
        assert_eq!(symmetric_eigenvalues(vec![vec![0.0; 3]; 3]), vec![0.0; 3]);
        assert_eq!(symmetric_eigenvalues(vec![vec![5.0]]), vec![5.0]);
    }

    #[test]
    fn hermitian_rank_one() {
        let v = [Complex64::new(1.0, 2.0), Complex64::new(0.0, -1.0), Complex64::new(3.0, 0.5)];
        let h: Vec<Vec<Complex64>> = v.iter().map(|a| v.iter().map(|b| a * b.conj()).collect()).collect();
        let e = hermitian_eigenvalues(&h);
        let norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        assert!(e[0].abs() < 1e-12 && e[1].abs() < 1e-12);
        assert!((e[2] - norm_sq).abs() < 1e-12);
    }

    #[test]
    fn trace_preserved() {
        let a = vec![
            vec![4.0, -2.0, 0.5, 1.0],
            vec![-2.0, 1.0, 3.0, 0.0],
            vec![0.5, 3.0, -1.0, 2.0],
            vec![1.0, 0.0, 2.0, 6.0],
        ];
        let e = symmetric_eigenvalues(a);
        assert!((e.iter().sum::<f64>() - 10.0).abs() < 1e-12);
    }
}
