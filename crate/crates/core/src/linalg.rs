//! Exact linear algebra over `BigRational`: row reduction, null spaces,
//! feasibility of `Ax = b, x ≥ 0`, and a symmetric pivoted elimination used
//! to certify positive semidefiniteness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type BigQ = BigRational;

pub fn bq(n: i64) -> BigQ {
    BigQ::from_integer(BigInt::from(n))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<BigQ>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : Ax = 0}` for an `rows × cols` matrix, one vector per free
/// column, in canonical (RREF-derived) form.
pub fn nullspace(a: &[Vec<BigQ>], cols: usize) -> Vec<Vec<BigQ>> {
    let mut m: Vec<Vec<BigQ>> = a.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigQ::zero(); cols];
        v[free] = BigQ::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Row-reduced, zero-row-free form of the span of `vectors`; two spans are
/// equal iff these agree.
pub fn span_rref(vectors: &[Vec<BigQ>]) -> Vec<Vec<BigQ>> {
    let mut m = vectors.to_vec();
    let pivots = rref(&mut m);
    m.truncate(pivots.len());
    m
}

/// Finds `x ≥ 0` with `Ax = b` by phase one of the simplex method with
/// Bland's rule. Returns `None` when infeasible.
pub fn nonnegative_solution(a: &[Vec<BigQ>], b: &[BigQ], cols: usize) -> Option<Vec<BigQ>> {
    let rows = a.len();
    if rows == 0 {
        return Some(vec![BigQ::zero(); cols]);
    }
    // Tableau columns: x (cols), artificials (rows), rhs.
    let width = cols + rows + 1;
    let mut t: Vec<Vec<BigQ>> = Vec::with_capacity(rows + 1);
    for i in 0..rows {
        let flip = b[i].is_negative();
        let mut row = vec![BigQ::zero(); width];
        for j in 0..cols {
            row[j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[cols + i] = BigQ::one();
        row[width - 1] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    // Objective: minimize the sum of artificials, expressed in nonbasic terms.
    let mut obj = vec![BigQ::zero(); width];
    for row in &t {
        for j in 0..cols {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    loop {
        let Some(enter) = (0..cols + rows).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigQ)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave?;
        let inv = t[r][enter].recip();
        for x in t[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for j in 0..width {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        let f = obj[enter].clone();
        for j in 0..width {
            obj[j] -= &f * &pivot_row[j];
        }
        basis[r] = enter;
    }
    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigQ::zero(); cols];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < cols {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

/// Outcome of exact symmetric elimination.
#[derive(Debug, Clone)]
pub struct ExactPsd {
    pub is_psd: bool,
    pub is_pd: bool,
    /// Direction with `xᵀAx < 0` when not PSD.
    pub negative_direction: Option<Vec<BigQ>>,
    /// Nonzero kernel vector when PSD but singular.
    pub kernel_vector: Option<Vec<BigQ>>,
}

/// Decides positive (semi)definiteness of a symmetric rational matrix by
/// diagonal-pivoted elimination, keeping the change of basis so that every
/// verdict comes with an explicit vector.
pub fn exact_psd(a: &[Vec<BigQ>]) -> ExactPsd {
    let n = a.len();
    let mut s: Vec<Vec<BigQ>> = a.to_vec();
    // cols[j]: vector in original coordinates whose Gram entries with the
    // other live columns equal the current Schur complement.
    let mut cols: Vec<Vec<BigQ>> = (0..n)
        .map(|j| {
            let mut v = vec![BigQ::zero(); n];
            v[j] = BigQ::one();
            v
        })
        .collect();
    let mut live: Vec<usize> = (0..n).collect();
    let mut kernel: Option<Vec<BigQ>> = None;
    let not_psd = |v: Vec<BigQ>| ExactPsd { is_psd: false, is_pd: false, negative_direction: Some(v), kernel_vector: None };

    while !live.is_empty() {
        if let Some(&k) = live.iter().find(|&&k| s[k][k].is_negative()) {
            return not_psd(cols[k].clone());
        }
        let Some(pos) = live.iter().position(|&k| s[k][k].is_positive()) else {
            // All remaining diagonal entries vanish.
            for (x, &i) in live.iter().enumerate() {
                for &j in &live[x + 1..] {
                    if !s[i][j].is_zero() {
                        let sign = if s[i][j].is_positive() { -1 } else { 1 };
                        let v: Vec<BigQ> = cols[i].iter().zip(&cols[j]).map(|(p, q)| p + q * bq(sign)).collect();
                        return not_psd(v);
                    }
                }
            }
            kernel = Some(cols[live[0]].clone());
            break;
        };
        let k = live.remove(pos);
        let pivot = s[k][k].clone();
        for &i in &live {
            if s[i][k].is_zero() {
                continue;
            }
            let f = &s[i][k] / &pivot;
            for &j in &live {
                let delta = &f * &s[k][j];
                s[i][j] -= delta;
            }
            let ck = cols[k].clone();
            for (x, y) in cols[i].iter_mut().zip(&ck) {
                *x -= &f * y;
            }
        }
    }
    ExactPsd { is_psd: true, is_pd: kernel.is_none(), negative_direction: None, kernel_vector: kernel }
}

pub fn quadratic_form(a: &[Vec<BigQ>], x: &[BigQ]) -> BigQ {
    let mut acc = BigQ::zero();
    for (i, row) in a.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        for (j, v) in row.iter().enumerate() {
            if !x[j].is_zero() && !v.is_zero() {
                acc += &x[i] * v * &x[j];
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigQ>> {
        rows.iter().map(|r| r.iter().map(|&x| bq(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_single_relation() {
        // 2x - y = 0
        let ns = nullspace(&m(&[&[2, -1]]), 2);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![BigQ::new(1.into(), 2.into()), bq(1)]);
    }

    #[test]
    fn simplex_feasibility() {
        let a = m(&[&[1, 1]]);
        assert!(nonnegative_solution(&a, &[bq(2)], 2).is_some());
        assert!(nonnegative_solution(&a, &[bq(-2)], 2).is_none());
        let a = m(&[&[1, -1], &[1, 1]]);
        let x = nonnegative_solution(&a, &[bq(0), bq(4)], 2).unwrap();
        assert_eq!(x, vec![bq(2), bq(2)]);
    }

    #[test]
    fn psd_classification() {
        let id = m(&[&[1, 0], &[0, 1]]);
        let r = exact_psd(&id);
        assert!(r.is_pd && r.negative_direction.is_none());

        let singular = m(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]);
        let r = exact_psd(&singular);
        assert!(r.is_psd && !r.is_pd);
        let k = r.kernel_vector.unwrap();
        assert!(quadratic_form(&singular, &k).is_zero());

        let indefinite = m(&[&[1, 2], &[2, 1]]);
        let r = exact_psd(&indefinite);
        assert!(!r.is_psd);
        assert!(quadratic_form(&indefinite, &r.negative_direction.unwrap()).is_negative());

        let off = m(&[&[0, 1], &[1, 0]]);
        let r = exact_psd(&off);
        assert!(quadratic_form(&off, &r.negative_direction.unwrap()).is_negative());

        let zero = m(&[&[0, 0], &[0, 0]]);
        let r = exact_psd(&zero);
        assert!(r.is_psd && !r.is_pd);
    }
}
