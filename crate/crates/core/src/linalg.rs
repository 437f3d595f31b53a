//! Dense linear algebra over ℚ.

use num_traits::{One, Zero};

use crate::exact_numbers::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn zeros(r: usize, c: usize) -> Matrix {
    vec![vec![Rational::zero(); c]; r]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = zeros(n, m);
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][k] * &bk[j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn trace(a: &Matrix) -> Rational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(a: &Matrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let p = m[col][col].clone();
        d *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    d
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(piv, r);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}

/// Basis of {x : A x = 0}.
pub fn kernel(a: &Matrix) -> Vec<Vec<Rational>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves A x = b for square invertible A.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Congruence diagonalization of a symmetric matrix: returns `(d, p)` with
/// `pᵗ g p = diag(d)` and `p` invertible.  Columns of `p` are the new basis.
pub fn congruence_diagonalize(g: &Matrix) -> (Vec<Rational>, Matrix) {
    let n = g.len();
    let mut a = g.clone();
    let mut p = identity(n);
    // Basis change e_i <- e_i + f e_j applied to both the form and p.
    fn add_col(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize, f: &Rational) {
        let n = a.len();
        for r in 0..n {
            let t = f * &a[r][j];
            a[r][i] += t;
        }
        for c in 0..n {
            let t = f * &a[j][c];
            a[i][c] += t;
        }
        for row in p.iter_mut() {
            let t = f * &row[j];
            row[i] += t;
        }
    }
    for i in 0..n {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
                for row in p.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                add_col(&mut a, &mut p, i, j, &Rational::one());
            } else {
                continue;
            }
        }
        let piv = a[i][i].clone();
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                let f = -(&a[i][j] / &piv);
                add_col(&mut a, &mut p, j, i, &f);
            }
        }
    }
    ((0..n).map(|i| a[i][i].clone()).collect(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(&a), int(18));
        let inv = inverse(&a).unwrap();
        assert_eq!(matmul(&a, &inv), identity(3));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn kernel_dimension() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(mat_vec(&a, &v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn congruence_diagonalization_of_cubic_trace_form() {
        // Trace form of x³ − 3x − 1 in the power basis.
        let g = m(&[&[3, 0, 6], &[0, 6, 3], &[6, 3, 18]]);
        let (d, p) = congruence_diagonalize(&g);
        let dd = matmul(&matmul(&transpose(&p), &g), &p);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j {
                    d[i].clone()
                } else {
                    Rational::zero()
                };
                assert_eq!(dd[i][j], expect);
            }
        }
        assert_eq!(d.iter().product::<Rational>(), int(81));
    }

    #[test]
    fn congruence_diagonalization_with_zero_diagonal() {
        let g = m(&[&[0, 1], &[1, 0]]);
        let (d, p) = congruence_diagonalize(&g);
        let dd = matmul(&matmul(&transpose(&p), &g), &p);
        assert_eq!(dd[0][1], Rational::zero());
        assert_eq!(d[0].clone() * d[1].clone(), int(-1) * det(&p) * det(&p));
    }
}
