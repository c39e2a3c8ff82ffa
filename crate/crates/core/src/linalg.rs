//! Exact rational linear algebra helpers: square solves and a phase-1
//! simplex used for convex-combination membership in dimensions above two.

use num::rational::BigRational;
use num::{Signed, Zero};

/// Solve `A x = b` for square `A` by Gaussian elimination.
/// Returns `None` when `A` is singular.
pub fn solve_square(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for c in col..n {
            a[col][c] = &a[col][c] / &p;
        }
        b[col] = &b[col] / &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                }
                b[r] = &b[r] - &(&f * &b[col]);
            }
        }
    }
    Some(b)
}

/// Feasibility of `A x = b, x >= 0` via phase-1 simplex with Bland's rule.
pub fn feasible_nonneg(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // Tableau with artificial basis; rows scaled so b >= 0.
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (row, bi) in a.iter().zip(b) {
        let mut r: Vec<BigRational> = row.to_vec();
        r.push(bi.clone());
        if bi.is_negative() {
            for v in r.iter_mut() {
                *v = -v.clone();
            }
        }
        tab.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Objective: minimize sum of artificials. The reduced-cost row for the
    // original columns is -(column sum); last entry carries -(objective value).
    let mut obj: Vec<BigRational> = vec![BigRational::zero(); n + 1];
    for r in &tab {
        for j in 0..=n {
            obj[j] = &obj[j] - &r[j];
        }
    }

    loop {
        // Bland: smallest original column with negative reduced cost.
        let enter = (0..n).find(|&j| obj[j].is_negative());
        let Some(enter) = enter else {
            // Optimal: feasible iff objective value (artificial sum) is zero.
            return obj[n].is_zero();
        };
        // Ratio test over rows with positive pivot.
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for r in 0..m {
            if tab[r][enter].is_positive() {
                let ratio = &tab[r][n] / &tab[r][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(leave) = leave else {
            // Unbounded phase-1 cannot happen; treat as infeasible.
            return false;
        };
        // Pivot.
        let p = tab[leave][enter].clone();
        for v in tab[leave].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..m {
            if r != leave && !tab[r][enter].is_zero() {
                let f = tab[r][enter].clone();
                for c in 0..=n {
                    tab[r][c] = &tab[r][c] - &(&f * &tab[leave][c]);
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for c in 0..=n {
                obj[c] = &obj[c] - &(&f * &tab[leave][c]);
            }
        }
        basis[leave] = enter;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn r(x: i64) -> BigRational {
        BigRational::from_i64(x).unwrap()
    }

    #[test]
    fn solves_square_system() {
        // x + y = 3, x - y = 1 -> (2, 1)
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        let sol = solve_square(a, vec![r(3), r(1)]).unwrap();
        assert_eq!(sol, vec![r(2), r(1)]);
    }

    #[test]
    fn detects_singular() {
        let a = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        assert!(solve_square(a, vec![r(1), r(2)]).is_none());
    }

    #[test]
    fn simplex_feasibility() {
        // x1 + x2 = 1, x1 - x2 = 0 -> x = (1/2, 1/2) >= 0 feasible.
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        assert!(feasible_nonneg(&a, &[r(1), r(0)]));
        // x1 + x2 = 1, x1 + x2 = 2 infeasible.
        let a = vec![vec![r(1), r(1)], vec![r(1), r(1)]];
        assert!(!feasible_nonneg(&a, &[r(1), r(2)]));
        // x1 = -1, x1 >= 0 infeasible.
        let a = vec![vec![r(1)]];
        assert!(!feasible_nonneg(&a, &[r(-1)]));
    }
}
