//! Exact feasibility of `A x = b, x >= 0` by phase-one simplex over the
//! rationals, with Bland's rule so it always terminates.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A nonnegative solution of `A x = b`, or `None` if there is none.
///
/// `a` is given by rows; every row must have the same length.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    assert_eq!(m, b.len(), "one right-hand side per row");
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![BigRational::zero(); n]);
    }
    let width = n + m + 1;
    let rhs = n + m;

    // Rows with b >= 0, one artificial variable per row.
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n, "ragged matrix");
        let flip = bi.is_negative();
        let mut r = vec![BigRational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            r[j] = if flip { -v } else { v.clone() };
        }
        r[n + i] = BigRational::one();
        r[rhs] = if flip { -bi } else { bi.clone() };
        t.push(r);
    }
    // Objective row: reduced costs of minimizing the sum of artificials.
    let mut z = vec![BigRational::zero(); width];
    for r in &t {
        for j in 0..n {
            z[j] -= &r[j];
        }
        z[rhs] -= &r[rhs];
    }
    t.push(z);
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a leaving row exists.
        let (p, _) = leave.expect("phase one is bounded");
        pivot(&mut t, p, enter);
        basis[p] = enter;
    }

    if !t[m][rhs].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = t[i][rhs].clone();
        }
    }
    Some(x)
}

pub fn is_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    feasible_point(a, b).is_some()
}

fn pivot(t: &mut [Vec<BigRational>], p: usize, q: usize) {
    let inv = t[p][q].recip();
    for v in t[p].iter_mut() {
        *v = &*v * &inv;
    }
    let pivot_row = t[p].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == p || row[q].is_zero() {
            continue;
        }
        let f = row[q].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}
