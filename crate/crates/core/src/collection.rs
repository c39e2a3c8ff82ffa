//! The generalized set difference `X ÷ Y`: the collection of
//! inclusion-minimal convex compacts `Z` with `X ⊂ Y + Z`.
//!
//! The collection is stored as the formal pair `(X, Y)`; it is generally an
//! infinite family, and the pair is a sufficient statistic for support
//! queries (`inf_Z (Z)_p = (X)_p - (Y)_p`). Individual minimal elements are
//! extracted on demand by a deterministic direction-sweep cutter and
//! cross-checked by a coarse brute-force oracle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::{Halfspace, Polytope};
use crate::scalar::{sqrt_leq_sqrt_sum, Arithmetic, Scalar};
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq)]
pub struct Collection {
    minuend: Polytope,
    subtrahend: Polytope,
}

/// An `(m, tau)`-minimal element: feasible, and no grid-direction support
/// level can drop by more than `tau` without breaking feasibility.
#[derive(Clone, Debug, Serialize)]
pub struct MinimalElementReport {
    pub element: Polytope,
    pub selector: Vector,
    pub grid_size: usize,
    pub tolerance: Scalar,
    pub certified_feasible: bool,
    pub sweeps: usize,
}

/// Norm bracket `lower <= ||X ÷ Y|| <= upper`; squared values are exact.
#[derive(Clone, Debug, Serialize)]
pub struct NormBracket {
    pub lower: f64,
    pub upper: f64,
    pub lower_sq: Scalar,
    pub upper_sq: Scalar,
}

impl Collection {
    pub fn make(minuend: Polytope, subtrahend: Polytope) -> Result<Collection> {
        subtrahend.check_dim(minuend.dim())?;
        Ok(Collection {
            minuend,
            subtrahend,
        })
    }

    /// The embedding `X = X ÷ 0`.
    pub fn from_set(x: Polytope) -> Collection {
        let dim = x.dim();
        Collection {
            minuend: x,
            subtrahend: Polytope::origin(dim),
        }
    }

    pub fn zero(dim: usize) -> Collection {
        Collection {
            minuend: Polytope::origin(dim),
            subtrahend: Polytope::origin(dim),
        }
    }

    pub fn minuend(&self) -> &Polytope {
        &self.minuend
    }

    pub fn subtrahend(&self) -> &Polytope {
        &self.subtrahend
    }

    pub fn dim(&self) -> usize {
        self.minuend.dim()
    }

    /// Support of the collection: `inf_Z (Z)_p = (X)_p - (Y)_p`, exact.
    pub fn support(&self, p: &Vector) -> Result<Scalar> {
        p.check_dim(self.dim())?;
        Ok(self.minuend.support_value(p) - self.subtrahend.support_value(p))
    }

    /// `(X ÷ Y) + (Z ÷ W) = (X + Z) ÷ (Y + W)`.
    pub fn add(&self, other: &Collection) -> Result<Collection> {
        Ok(Collection {
            minuend: self.minuend.minkowski_sum(&other.minuend)?,
            subtrahend: self.subtrahend.minkowski_sum(&other.subtrahend)?,
        })
    }

    /// `alpha (X ÷ Y) = alpha X ÷ alpha Y`, regardless of the sign.
    pub fn scale(&self, alpha: &Scalar) -> Collection {
        Collection {
            minuend: self.minuend.scale(alpha),
            subtrahend: self.subtrahend.scale(alpha),
        }
    }

    /// Radstrom criterion: `[X, Y] ~ [Z, W]` iff `X + W = Z + Y`.
    pub fn is_equivalent(&self, other: &Collection) -> Result<bool> {
        other.minuend.check_dim(self.dim())?;
        let lhs = self.minuend.minkowski_sum(&other.subtrahend)?;
        let rhs = other.minuend.minkowski_sum(&self.subtrahend)?;
        Ok(lhs == rhs)
    }

    /// `0 = X ÷ Y` iff `Y = X` (pair equality of canonical polytopes).
    pub fn is_zero(&self) -> bool {
        self.minuend == self.subtrahend
    }

    /// Membership condition of Definition 2: `X ⊂ Y + Z`.
    pub fn feasible(&self, z: &Polytope) -> Result<bool> {
        z.check_dim(self.dim())?;
        self.subtrahend
            .minkowski_sum(z)?
            .contains_set(&self.minuend)
    }

    /// The always-feasible starting element `X + (-Y)`.
    pub fn outer_element(&self) -> Polytope {
        self.minuend
            .minkowski_sum(&self.subtrahend.neg())
            .expect("dims agree")
    }

    /// Extract one `(m, tau)`-minimal element by a deterministic support-level
    /// sweep: start from `X + (-Y)`, process the selector direction first and
    /// then an angularly interleaved grid (augmented with the edge normals of
    /// the start element in rational mode), cutting each direction down to
    /// the lowest level that keeps a covering witness for every vertex of X.
    pub fn minimal_element(
        &self,
        selector: &Vector,
        m: usize,
        tau: &Scalar,
    ) -> Result<MinimalElementReport> {
        selector.check_dim(self.dim())?;
        if m < 8 {
            return Err(Error::InvalidParameter("need at least 8 grid directions".into()));
        }
        if tau.sign() < 0 {
            return Err(Error::InvalidParameter("tolerance must be nonnegative".into()));
        }
        match self.dim() {
            1 => self.minimal_element_1d(selector, m, tau),
            2 => self.minimal_element_2d(selector, m, tau),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    fn minimal_element_1d(
        &self,
        selector: &Vector,
        m: usize,
        tau: &Scalar,
    ) -> Result<MinimalElementReport> {
        let e = Vector::from_ints(&[1]);
        let hi = self.support(&e)?;
        let lo = -self.support(&e.neg())?;
        // Feasible intervals need upper end >= hi and lower end <= lo; the
        // minimal element is [lo, hi] when that is an interval, otherwise a
        // selector-chosen singleton between hi and lo.
        let element = if (&hi - &lo).sign() >= 0 {
            Polytope::hull(vec![Vector(vec![lo]), Vector(vec![hi])])?
        } else {
            let t = if selector.0[0].sign() >= 0 { hi } else { lo };
            Polytope::singleton(Vector(vec![t]))
        };
        let certified = self.feasible(&element)?;
        Ok(MinimalElementReport {
            element,
            selector: selector.clone(),
            grid_size: m,
            tolerance: tau.clone(),
            certified_feasible: certified,
            sweeps: 1,
        })
    }

    fn minimal_element_2d(
        &self,
        selector: &Vector,
        m: usize,
        tau: &Scalar,
    ) -> Result<MinimalElementReport> {
        const MAX_SWEEPS: usize = 32;
        let mode = mode_of(&self.minuend);
        let outer = self.outer_element();

        // The selector leads, its negation follows immediately: that pair
        // flattens the element against the selector's own support level, so
        // tie sets of equally low support resolve differently per selector.
        let mut dirs: Vec<Vector> = vec![selector.clone(), selector.neg()];
        dirs.extend(anchored_grid(m, mode, selector));
        if mode == Arithmetic::Rational {
            // Both orientations of every outer edge normal: the pair pins an
            // element flat against a supporting line when minimality wants a
            // degenerate set.
            for h in outer.halfspaces()? {
                dirs.push(h.normal.neg());
                dirs.push(h.normal);
            }
        }

        // Per-vertex witness regions W_u = (u + (-Y)) ∩ Z, maintained under
        // every cut; nonemptiness of each W_u certifies feasibility.
        let neg_y = self.subtrahend.neg();
        let mut witnesses: Vec<Polytope> = Vec::new();
        for u in self.minuend.vertices() {
            witnesses.push(neg_y.translate(u)?);
        }

        let mut levels: Vec<Option<Scalar>> = vec![None; dirs.len()];
        let mut sweeps = 0;
        loop {
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::NonConvergence { sweeps: MAX_SWEEPS });
            }
            let mut max_drop = Scalar::zero();
            for (i, p) in dirs.iter().enumerate() {
                let target = witnesses
                    .iter()
                    .map(|w| w.support_min(p))
                    .reduce(|a, b| a.max_val(b))
                    .expect("minuend has vertices");
                if let Some(prev) = &levels[i] {
                    let drop = prev - &target;
                    if drop.sign() <= 0 {
                        continue;
                    }
                    max_drop = max_drop.max_val(drop);
                }
                let cut = Halfspace::new(p.clone(), target.clone())?;
                for w in witnesses.iter_mut() {
                    match w.clip(&cut)? {
                        Some(next) => *w = next,
                        None => {
                            return Err(Error::NonConvergence { sweeps });
                        }
                    }
                }
                levels[i] = Some(target);
            }
            if sweeps > 1 && (&max_drop - tau).sign() <= 0 {
                break;
            }
        }

        let cuts: Vec<Halfspace> = dirs
            .iter()
            .zip(&levels)
            .map(|(p, s)| Halfspace::new(p.clone(), s.clone().expect("level set")).unwrap())
            .collect();
        let element = outer
            .intersect_halfspaces(&cuts)?
            .ok_or(Error::NonConvergence { sweeps })?;
        let certified = self.feasible(&element)?;
        Ok(MinimalElementReport {
            element,
            selector: selector.clone(),
            grid_size: m,
            tolerance: tau.clone(),
            certified_feasible: certified,
            sweeps,
        })
    }

    /// Brute-force oracle for Definition 2 at desk scale: enumerate halfspace
    /// systems over `m` uniform directions with a discrete ladder of support
    /// levels per direction, and keep the candidates that are feasible and
    /// whose every single-step level reduction is infeasible.
    pub fn minimal_oracle(&self, m: usize, ladder: usize, budget: usize) -> Result<Vec<Polytope>> {
        if self.dim() != 2 {
            return Err(Error::UnsupportedDimension(self.dim()));
        }
        if m < 3 || m > 24 {
            return Err(Error::InvalidParameter("oracle needs 3 <= m <= 24".into()));
        }
        if ladder == 0 || ladder > 12 {
            return Err(Error::InvalidParameter("oracle needs 1 <= ladder <= 12".into()));
        }
        let states = (ladder + 1).checked_pow(m as u32).filter(|&s| s <= budget);
        let Some(states) = states else {
            return Err(Error::BudgetExceeded {
                states: (ladder + 1).saturating_pow(m as u32),
                budget,
            });
        };

        let mode = mode_of(&self.minuend);
        let dirs = uniform_directions(m, mode);
        // Candidates live inside X + (-Y): a minimal feasible set is the hull
        // of one covering witness per vertex of X, and every witness lies in
        // X + (-Y). A coarser base would make ladder-minimal candidates poke
        // outside it between grid directions without being any more honest.
        let base = self.outer_element();

        let mut lo = Vec::with_capacity(m);
        let mut step = Vec::with_capacity(m);
        for p in &dirs {
            let l = self.support(p)?;
            let h = base.support_value(p);
            step.push((&h - &l) / Scalar::from_int(ladder as i64));
            lo.push(l);
        }

        // Feasibility over all states, bottom-up by level sum; monotone in
        // the levels, so any feasible lower neighbor settles a state.
        let mut order: Vec<usize> = (0..states).collect();
        let digit_sum = |mut s: usize| {
            let mut t = 0;
            for _ in 0..m {
                t += s % (ladder + 1);
                s /= ladder + 1;
            }
            t
        };
        order.sort_by_key(|&s| digit_sum(s));
        let mut feas = vec![false; states];
        for &s in &order {
            let mut settled = false;
            let mut q = s;
            let mut stride = 1;
            for _ in 0..m {
                let digit = q % (ladder + 1);
                if digit > 0 && feas[s - stride] {
                    settled = true;
                    break;
                }
                q /= ladder + 1;
                stride *= ladder + 1;
            }
            if settled {
                feas[s] = true;
                continue;
            }
            feas[s] = self.oracle_state_feasible(&base, &dirs, &lo, &step, s, ladder)?;
        }

        let mut out: Vec<Polytope> = Vec::new();
        for s in 0..states {
            if !feas[s] {
                continue;
            }
            let mut minimal = true;
            let mut q = s;
            let mut stride = 1;
            for _ in 0..m {
                let digit = q % (ladder + 1);
                if digit > 0 && feas[s - stride] {
                    minimal = false;
                    break;
                }
                q /= ladder + 1;
                stride *= ladder + 1;
            }
            if !minimal {
                continue;
            }
            if let Some(z) = self.oracle_state_set(&base, &dirs, &lo, &step, s, ladder)? {
                if !out.iter().any(|w| *w == z) {
                    out.push(z);
                }
            }
        }
        Ok(out)
    }

    fn oracle_state_set(
        &self,
        base: &Polytope,
        dirs: &[Vector],
        lo: &[Scalar],
        step: &[Scalar],
        state: usize,
        ladder: usize,
    ) -> Result<Option<Polytope>> {
        let mut cuts = Vec::with_capacity(dirs.len());
        let mut q = state;
        for i in 0..dirs.len() {
            let digit = (q % (ladder + 1)) as i64;
            q /= ladder + 1;
            let level = &lo[i] + &(&step[i] * &Scalar::from_int(digit));
            cuts.push(Halfspace::new(dirs[i].clone(), level)?);
        }
        base.intersect_halfspaces(&cuts)
    }

    fn oracle_state_feasible(
        &self,
        base: &Polytope,
        dirs: &[Vector],
        lo: &[Scalar],
        step: &[Scalar],
        state: usize,
        ladder: usize,
    ) -> Result<bool> {
        match self.oracle_state_set(base, dirs, lo, step, state, ladder)? {
            None => Ok(false),
            Some(z) => self.feasible(&z),
        }
    }

    /// Bracket for `||X ÷ Y|| = sup_Z ||Z||`: the lower end is the best norm
    /// among extracted minimal elements (uniform selectors plus the direction
    /// opposing the farthest vertex of `X + (-Y)`), the upper end is
    /// `||X + (-Y)||`, valid because every minimal element stays inside it.
    pub fn collection_norm(&self, selectors: usize, m: usize, tau: &Scalar) -> Result<NormBracket> {
        let outer = self.outer_element();
        let upper_sq = outer.norm_sq();
        let mode = mode_of(&self.minuend);
        let mut sels = uniform_directions(selectors.max(1), mode);
        let far = outer.max_norm_vertex();
        if !far.is_zero() {
            sels.push(far.neg());
        }
        let mut lower_sq = Scalar::zero();
        for sel in &sels {
            if sel.is_zero() {
                continue;
            }
            let rep = self.minimal_element(sel, m, tau)?;
            lower_sq = lower_sq.max_val(rep.element.norm_sq());
        }
        Ok(NormBracket {
            lower: lower_sq.to_f64().sqrt(),
            upper: upper_sq.to_f64().sqrt(),
            lower_sq,
            upper_sq,
        })
    }

    /// `||X + (-Y)|| <= ||X|| + ||Y||`, checked exactly; combined with the
    /// containment bound this caps the collection norm.
    pub fn norm_triangle_holds(&self) -> bool {
        sqrt_leq_sqrt_sum(
            &self.outer_element().norm_sq(),
            &self.minuend.norm_sq(),
            &self.subtrahend.norm_sq(),
        )
    }
}

pub fn mode_of(p: &Polytope) -> Arithmetic {
    if p.vertices()[0].0[0].is_rational() {
        Arithmetic::Rational
    } else {
        Arithmetic::Double
    }
}

/// `m` directions spread over the circle. In rational mode the components
/// are cos/sin scaled by 2^20 and rounded to integers, so levels stay exact.
pub fn uniform_directions(m: usize, mode: Arithmetic) -> Vec<Vector> {
    const DENOM: f64 = (1i64 << 20) as f64;
    (0..m)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            match mode {
                Arithmetic::Rational => Vector::from_ints(&[
                    (theta.cos() * DENOM).round() as i64,
                    (theta.sin() * DENOM).round() as i64,
                ]),
                Arithmetic::Double => Vector(vec![
                    Scalar::f64(theta.cos()),
                    Scalar::f64(theta.sin()),
                ]),
            }
        })
        .collect()
}

/// Uniform grid reordered so consecutive directions are angularly far apart
/// (bit-reversal order); makes early cuts cover the whole circle.
pub fn interleaved_grid(m: usize, mode: Arithmetic) -> Vec<Vector> {
    let dirs = uniform_directions(m, mode);
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by_key(|&k| (k as u32).reverse_bits());
    idx.into_iter().map(|k| dirs[k].clone()).collect()
}

/// Uniform grid sorted by decreasing angular closeness to `anchor`, so cuts
/// sweep outward from the anchor direction. Exact: compares signed squared
/// cosines, never square roots. Ties break toward the counterclockwise side.
pub fn anchored_grid(m: usize, mode: Arithmetic, anchor: &Vector) -> Vec<Vector> {
    let mut dirs = uniform_directions(m, mode);
    let cos_key = |p: &Vector| -> (i8, Scalar, Scalar) {
        let c = p.dot(anchor);
        (c.sign(), &c * &c, p.norm_sq())
    };
    dirs.sort_by(|a, b| {
        let (sa, ca2, na) = cos_key(a);
        let (sb, cb2, nb) = cos_key(b);
        // Larger cos(angle to anchor) first: compare sign, then c^2 / |p|^2.
        let ord = sb.cmp(&sa).then_with(|| {
            let left = &ca2 * &nb;
            let right = &cb2 * &na;
            let by_sq = left.cmp_val(&right);
            if sa >= 0 && sb >= 0 {
                by_sq.reverse()
            } else {
                by_sq
            }
        });
        ord.then_with(|| {
            // Same angle magnitude: counterclockwise of the anchor first.
            let cross_a = &anchor.0[0] * &a.0[1] - &anchor.0[1] * &a.0[0];
            let cross_b = &anchor.0[0] * &b.0[1] - &anchor.0[1] * &b.0[0];
            cross_b.sign().cmp(&cross_a.sign())
        })
    });
    dirs
}
