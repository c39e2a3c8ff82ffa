//! Epsilon-subdifferentials of max-affine convex functions.
//!
//! For f(x) = max_i (a_i . x + b_i) the set `D(eps) = { g : f(y) - f(x) >=
//! g.(y - x) - eps  for all y }` is the polytope of gradient mixtures
//! `sum lambda_i a_i` with `lambda` in the simplex and `sum lambda_i (a_i .
//! x + b_i) >= f(x) - eps`. Vertices of its image in dimension <= 2 mix at
//! most two pieces, which gives an exact O(n^2) construction. The
//! definitional inequality doubles as an independent sampling oracle.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::scalar::Scalar;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq)]
pub struct PwlConvexFunction {
    pieces: Vec<(Vector, Scalar)>,
}

/// Grid specification for the definitional oracle.
#[derive(Clone, Debug, Serialize)]
pub struct OracleGrid {
    pub radius: f64,
    pub points_per_axis: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LipschitzReport {
    pub l_emp: f64,
    pub l_bound: f64,
    pub violations: usize,
    pub pairs: usize,
}

impl PwlConvexFunction {
    pub fn new(pieces: Vec<(Vector, Scalar)>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::EmptyInput("max-affine function with no pieces"));
        }
        let dim = pieces[0].0.dim();
        let mut dedup: Vec<(Vector, Scalar)> = Vec::with_capacity(pieces.len());
        for (a, b) in pieces {
            a.check_dim(dim)?;
            if !b.is_finite() {
                return Err(Error::NonFinite);
            }
            if !dedup
                .iter()
                .any(|(a2, b2)| a2.approx_eq(&a) && b2.approx_eq(&b))
            {
                dedup.push((a, b));
            }
        }
        Ok(PwlConvexFunction { pieces: dedup })
    }

    /// f(x) = max(x, -x) = |x|.
    pub fn abs_1d() -> Self {
        PwlConvexFunction::new(vec![
            (Vector::from_ints(&[1]), Scalar::zero()),
            (Vector::from_ints(&[-1]), Scalar::zero()),
        ])
        .unwrap()
    }

    pub fn dim(&self) -> usize {
        self.pieces[0].0.dim()
    }

    pub fn pieces(&self) -> &[(Vector, Scalar)] {
        &self.pieces
    }

    fn piece_value(&self, i: usize, x: &Vector) -> Scalar {
        &self.pieces[i].0.dot(x) + &self.pieces[i].1
    }

    /// Value and exact argmax set.
    pub fn eval(&self, x: &Vector) -> Result<(Scalar, Vec<usize>)> {
        x.check_dim(self.dim())?;
        let values: Vec<Scalar> = (0..self.pieces.len())
            .map(|i| self.piece_value(i, x))
            .collect();
        let max = values
            .iter()
            .cloned()
            .reduce(|a, b| a.max_val(b))
            .expect("nonempty");
        let active = values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.approx_eq(&max))
            .map(|(i, _)| i)
            .collect();
        Ok((max, active))
    }

    /// The epsilon-subdifferential polytope at `x`. Exact for d <= 2.
    pub fn eps_subdiff(&self, x: &Vector, eps: &Scalar) -> Result<Polytope> {
        x.check_dim(self.dim())?;
        if eps.sign() < 0 {
            return Err(Error::NegativeEps);
        }
        if self.dim() > 2 {
            return Err(Error::UnsupportedDimension(self.dim()));
        }
        let n = self.pieces.len();
        let values: Vec<Scalar> = (0..n).map(|i| self.piece_value(i, x)).collect();
        let fx = values
            .iter()
            .cloned()
            .reduce(|a, b| a.max_val(b))
            .expect("nonempty");
        let cutoff = &fx - eps;
        let mut candidates: Vec<Vector> = Vec::new();
        for i in 0..n {
            if (&values[i] - &cutoff).sign() >= 0 {
                candidates.push(self.pieces[i].0.clone());
            }
        }
        // A vertex of the gradient mixture polytope in d <= 2 blends at most
        // two pieces; the blend sits on the boundary of the eps constraint.
        for i in 0..n {
            for j in (i + 1)..n {
                let (ci, cj) = (&values[i], &values[j]);
                let denom = ci - cj;
                if denom.sign() == 0 {
                    continue;
                }
                let lambda = &(&cutoff - cj) / &denom;
                if lambda.sign() < 0 || (&lambda - &Scalar::from_int(1)).sign() > 0 {
                    continue;
                }
                let one_minus = Scalar::from_int(1) - lambda.clone();
                let g = self.pieces[i]
                    .0
                    .scale(&lambda)
                    .add(&self.pieces[j].0.scale(&one_minus));
                candidates.push(g);
            }
        }
        if candidates.is_empty() {
            // Cannot happen: an active piece always satisfies the cutoff.
            return Err(Error::EmptyInput("no feasible gradient"));
        }
        Polytope::hull(candidates)
    }

    /// Default sampling box for the definitional oracle.
    pub fn default_grid(&self, x: &Vector) -> OracleGrid {
        let max_grad = self
            .pieces
            .iter()
            .map(|(a, _)| a.norm())
            .fold(0.0f64, f64::max);
        let max_off = self
            .pieces
            .iter()
            .map(|(_, b)| b.to_f64().abs())
            .fold(0.0f64, f64::max);
        OracleGrid {
            radius: 10.0 * (1.0 + max_grad + max_off + x.norm()),
            points_per_axis: 101,
        }
    }

    /// Definitional check: `f(y) - f(x) >= g.(y-x) - eps` at every sampled y.
    pub fn eps_subdiff_oracle(
        &self,
        x: &Vector,
        eps: &Scalar,
        g: &Vector,
        grid: &OracleGrid,
    ) -> Result<bool> {
        x.check_dim(self.dim())?;
        g.check_dim(self.dim())?;
        let (fx, _) = self.eval(x)?;
        let ticks: Vec<Scalar> = (0..grid.points_per_axis)
            .map(|k| {
                let t = -grid.radius
                    + 2.0 * grid.radius * k as f64 / (grid.points_per_axis - 1) as f64;
                Scalar::rat_from_f64(t)
            })
            .collect();
        let check = |y: Vector| -> Result<bool> {
            let (fy, _) = self.eval(&y)?;
            let lhs = &fy - &fx;
            let rhs = &g.dot(&y.sub(x)) - eps;
            Ok((&lhs - &rhs).sign() >= 0)
        };
        match self.dim() {
            1 => {
                for t in &ticks {
                    if !check(Vector(vec![t.clone()]))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            2 => {
                for t in &ticks {
                    for s in &ticks {
                        if !check(Vector(vec![t.clone(), s.clone()]))? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    /// Graph convexity probe: `(1-t) D(e1) + t D(e2) ⊂ D((1-t)e1 + t e2)`.
    pub fn graph_convexity_check(
        &self,
        x: &Vector,
        eps1: &Scalar,
        eps2: &Scalar,
        t: &Scalar,
    ) -> Result<bool> {
        if t.sign() < 0 || (&(t - &Scalar::from_int(1))).sign() > 0 {
            return Err(Error::InvalidParameter("t must lie in [0, 1]".into()));
        }
        let d1 = self.eps_subdiff(x, eps1)?;
        let d2 = self.eps_subdiff(x, eps2)?;
        let one_minus = Scalar::from_int(1) - t.clone();
        let mix = d1
            .scale(&one_minus)
            .minkowski_sum(&d2.scale(t))?;
        let eps_mix = &(&one_minus * eps1) + &(t * eps2);
        let target = self.eps_subdiff(x, &eps_mix)?;
        target.contains_set(&mix)
    }

    /// Empirical Lipschitz probe for the Hausdorff continuity of
    /// `eps -> D(eps)` on `[eps - upsilon, eps + upsilon]`.
    ///
    /// `l_bound = ||D(eps + upsilon) + (-D(0))|| / (eps - upsilon)` follows
    /// the containment bound on the collection norm of
    /// `D(eps'') ÷ D(0)`; violations count sampled pairs with
    /// `d(D(e'), D(e'')) > l_bound |e' - e''| + 1e-9`.
    pub fn lipschitz_probe(
        &self,
        x: &Vector,
        eps: &Scalar,
        upsilon: &Scalar,
        pairs: usize,
        rng: &mut impl Rng,
    ) -> Result<LipschitzReport> {
        if upsilon.sign() <= 0 || (&(upsilon - eps)).sign() >= 0 {
            return Err(Error::InvalidParameter(
                "need 0 < upsilon < eps".into(),
            ));
        }
        let d_top = self.eps_subdiff(x, &(eps + upsilon))?;
        let d_zero = self.eps_subdiff(x, &Scalar::zero())?;
        let spread = d_top.minkowski_sum(&d_zero.neg())?;
        let l_bound = spread.norm() / (eps - upsilon).to_f64();

        let lo = (eps - upsilon).to_f64();
        let hi = (eps + upsilon).to_f64();
        let mut l_emp = 0.0f64;
        let mut violations = 0usize;
        for _ in 0..pairs {
            let e1 = Scalar::rat_from_f64(rng.random_range(lo..=hi));
            let e2 = Scalar::rat_from_f64(rng.random_range(lo..=hi));
            let delta = (&e1 - &e2).abs().to_f64();
            if delta == 0.0 {
                continue;
            }
            let dist = self
                .eps_subdiff(x, &e1)?
                .hausdorff(&self.eps_subdiff(x, &e2)?)?;
            l_emp = l_emp.max(dist / delta);
            if dist > l_bound * delta + 1e-9 {
                violations += 1;
            }
        }
        Ok(LipschitzReport {
            l_emp,
            l_bound,
            violations,
            pairs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval(a: (i64, i64), b: (i64, i64)) -> Polytope {
        Polytope::hull(vec![Vector::from_ratios(&[a]), Vector::from_ratios(&[b])]).unwrap()
    }

    #[test]
    fn eval_abs() {
        let f = PwlConvexFunction::abs_1d();
        let (v, active) = f.eval(&Vector::from_ints(&[1])).unwrap();
        assert_eq!(v, Scalar::from_int(1));
        assert_eq!(active, vec![0]);
        let (v, active) = f.eval(&Vector::from_ints(&[0])).unwrap();
        assert_eq!(v, Scalar::zero());
        assert_eq!(active.len(), 2);
        let single = PwlConvexFunction::new(vec![(Vector::from_ints(&[2]), Scalar::from_int(3))]).unwrap();
        let (v, active) = single.eval(&Vector::from_ints(&[5])).unwrap();
        assert_eq!(v, Scalar::from_int(13));
        assert_eq!(active, vec![0]);
    }

    #[test]
    fn dedups_identical_pieces() {
        let f = PwlConvexFunction::new(vec![
            (Vector::from_ints(&[1]), Scalar::zero()),
            (Vector::from_ints(&[1]), Scalar::zero()),
        ])
        .unwrap();
        assert_eq!(f.pieces().len(), 1);
    }

    #[test]
    fn eps_subdiff_abs() {
        let f = PwlConvexFunction::abs_1d();
        let x1 = Vector::from_ints(&[1]);
        // eps = 0 at x = 1: unique active gradient {1}.
        let d = f.eps_subdiff(&x1, &Scalar::zero()).unwrap();
        assert_eq!(d, Polytope::singleton(Vector::from_ints(&[1])));
        // eps = 0 at x = 0: [-1, 1].
        let d = f.eps_subdiff(&Vector::from_ints(&[0]), &Scalar::zero()).unwrap();
        assert_eq!(d, interval((-1, 1), (1, 1)));
        // eps = 1/2 at x = 1: [1/2, 1].
        let d = f.eps_subdiff(&x1, &Scalar::ratio(1, 2)).unwrap();
        assert_eq!(d, interval((1, 2), (1, 1)));
        // Negative eps is rejected.
        assert!(f.eps_subdiff(&x1, &Scalar::from_int(-1)).is_err());
    }

    #[test]
    fn eps_subdiff_monotone_in_eps() {
        let f = PwlConvexFunction::abs_1d();
        let x = Vector::from_ints(&[1]);
        let small = f.eps_subdiff(&x, &Scalar::ratio(1, 4)).unwrap();
        let large = f.eps_subdiff(&x, &Scalar::from_int(1)).unwrap();
        assert!(large.contains_set(&small).unwrap());
        // Large eps saturates at the hull of all gradients.
        let sat = f.eps_subdiff(&x, &Scalar::from_int(100)).unwrap();
        assert_eq!(sat, interval((-1, 1), (1, 1)));
    }

    #[test]
    fn oracle_agrees_with_construction() {
        let f = PwlConvexFunction::abs_1d();
        let x = Vector::from_ints(&[1]);
        let eps = Scalar::ratio(1, 2);
        let d = f.eps_subdiff(&x, &eps).unwrap();
        let grid = f.default_grid(&x);
        for v in d.vertices() {
            assert!(f.eps_subdiff_oracle(&x, &eps, v, &grid).unwrap());
        }
        // An outward step of 1e-3 past the lower endpoint fails.
        let probe = Vector(vec![Scalar::ratio(1, 2) - Scalar::ratio(1, 1000)]);
        assert!(!f.eps_subdiff_oracle(&x, &eps, &probe, &grid).unwrap());
        // Enlarging eps keeps membership.
        let bigger = &eps + &Scalar::from_int(1);
        assert!(f.eps_subdiff_oracle(&x, &bigger, &probe, &grid).unwrap());
    }

    #[test]
    fn graph_convexity_abs() {
        let f = PwlConvexFunction::abs_1d();
        let x = Vector::from_ints(&[1]);
        assert!(f
            .graph_convexity_check(&x, &Scalar::ratio(1, 2), &Scalar::ratio(1, 2), &Scalar::ratio(1, 3))
            .unwrap());
        // (1/2){1} + (1/2)[0,1] = [1/2,1] = D(1/2).
        assert!(f
            .graph_convexity_check(&x, &Scalar::zero(), &Scalar::from_int(1), &Scalar::ratio(1, 2))
            .unwrap());
    }

    #[test]
    fn lipschitz_probe_abs() {
        use rand::SeedableRng;
        let f = PwlConvexFunction::abs_1d();
        let x = Vector::from_ints(&[1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let rep = f
            .lipschitz_probe(&x, &Scalar::from_int(1), &Scalar::ratio(1, 2), 100, &mut rng)
            .unwrap();
        // D(eps) = [1-eps, 1] on this range: empirical constant 1, bound 3.
        assert!((rep.l_emp - 1.0).abs() < 1e-9, "l_emp = {}", rep.l_emp);
        assert!((rep.l_bound - 3.0).abs() < 1e-9, "l_bound = {}", rep.l_bound);
        assert_eq!(rep.violations, 0);
        // upsilon >= eps rejected.
        assert!(f
            .lipschitz_probe(&x, &Scalar::from_int(1), &Scalar::from_int(1), 10, &mut rng)
            .is_err());
    }
}
