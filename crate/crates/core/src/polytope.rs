//! Compact convex polytopes in V-representation with exact arithmetic.
//!
//! Every constructor canonicalizes: redundant points are dropped and the
//! vertex list is put into a canonical order (2D: counterclockwise from the
//! lexicographic minimum), so structural equality decides set equality.
//! Degenerate polytopes (singletons, segments) are first-class.

use std::cmp::Ordering;

use num::rational::BigRational;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// The closed halfspace `{ z : normal . z <= level }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vector,
    pub level: Scalar,
}

impl Halfspace {
    pub fn new(normal: Vector, level: Scalar) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::InvalidParameter("halfspace normal is zero".into()));
        }
        Ok(Halfspace { normal, level })
    }

    /// Signed slack `normal . v - level`; nonpositive means inside.
    fn excess(&self, v: &Vector) -> Scalar {
        self.normal.dot(v) - self.level.clone()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vector>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.vertices.len() == other.vertices.len()
            && self
                .vertices
                .iter()
                .zip(&other.vertices)
                .all(|(a, b)| a.approx_eq(b))
    }
}

impl Polytope {
    /// Convex hull of a nonempty point set, canonicalized.
    pub fn hull(points: Vec<Vector>) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::EmptyInput("hull of no points"));
        }
        let dim = points[0].dim();
        for p in &points {
            p.check_dim(dim)?;
        }
        let vertices = match dim {
            1 => hull_1d(points),
            2 => hull_2d(points),
            _ => hull_nd(points, dim),
        };
        Ok(Polytope { dim, vertices })
    }

    pub fn singleton(v: Vector) -> Polytope {
        let dim = v.dim();
        Polytope {
            dim,
            vertices: vec![v],
        }
    }

    pub fn origin(dim: usize) -> Polytope {
        Polytope::singleton(Vector::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn is_singleton(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim != dim {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim,
            })
        } else {
            Ok(())
        }
    }

    /// Support value `max_{x in X} p.x` together with the maximizing face.
    pub fn support(&self, p: &Vector) -> Result<(Scalar, Polytope)> {
        p.check_dim(self.dim)?;
        let value = self.support_value(p);
        let face: Vec<Vector> = self
            .vertices
            .iter()
            .filter(|v| p.dot(v).approx_eq(&value))
            .cloned()
            .collect();
        Ok((value, Polytope::hull(face)?))
    }

    pub fn support_value(&self, p: &Vector) -> Scalar {
        self.vertices
            .iter()
            .map(|v| p.dot(v))
            .reduce(|a, b| a.max_val(b))
            .expect("nonempty polytope")
    }

    /// Minimum of `p.z` over the polytope (`-support(-p)`).
    pub fn support_min(&self, p: &Vector) -> Scalar {
        self.vertices
            .iter()
            .map(|v| p.dot(v))
            .reduce(|a, b| a.min_val(b))
            .expect("nonempty polytope")
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        other.check_dim(self.dim)?;
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.add(b));
            }
        }
        Polytope::hull(sums)
    }

    pub fn scale(&self, alpha: &Scalar) -> Polytope {
        if alpha.sign() == 0 {
            return Polytope::origin(self.dim);
        }
        let pts: Vec<Vector> = self.vertices.iter().map(|v| v.scale(alpha)).collect();
        Polytope::hull(pts).expect("scaling preserves validity")
    }

    pub fn neg(&self) -> Polytope {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn translate(&self, v: &Vector) -> Result<Polytope> {
        v.check_dim(self.dim)?;
        let pts: Vec<Vector> = self.vertices.iter().map(|w| w.add(v)).collect();
        Polytope::hull(pts)
    }

    pub fn contains_point(&self, v: &Vector) -> Result<bool> {
        v.check_dim(self.dim)?;
        Ok(match self.dim {
            1 => {
                let x = &v.0[0];
                let lo = &self.vertices[0].0[0];
                let hi = &self.vertices[self.vertices.len() - 1].0[0];
                (lo - x).sign() <= 0 && (hi - x).sign() >= 0
            }
            2 => contains_point_2d(&self.vertices, v),
            _ => contains_point_lp(&self.vertices, v),
        })
    }

    /// `Y subset of X` reduced to vertex membership.
    pub fn contains_set(&self, inner: &Polytope) -> Result<bool> {
        inner.check_dim(self.dim)?;
        for v in &inner.vertices {
            if !self.contains_point(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Outward halfspace description; exact for d <= 2 including degenerate
    /// sets, brute-force facet enumeration for full-dimensional sets in
    /// d = 3, 4.
    pub fn halfspaces(&self) -> Result<Vec<Halfspace>> {
        match self.dim {
            1 => Ok(halfspaces_1d(&self.vertices)),
            2 => Ok(halfspaces_2d(&self.vertices)),
            3 | 4 => facets_nd(&self.vertices, self.dim),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    /// Clip by a single halfspace. `None` means empty intersection.
    pub fn clip(&self, h: &Halfspace) -> Result<Option<Polytope>> {
        h.normal.check_dim(self.dim)?;
        let pts = clip_points(&self.vertices, h, self.dim);
        if pts.is_empty() {
            Ok(None)
        } else {
            Ok(Some(Polytope::hull(pts)?))
        }
    }

    /// Clip by a sequence of halfspaces in order.
    pub fn intersect_halfspaces(&self, hs: &[Halfspace]) -> Result<Option<Polytope>> {
        let mut cur = self.clone();
        for h in hs {
            match cur.clip(h)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    pub fn intersect(&self, other: &Polytope) -> Result<Option<Polytope>> {
        other.check_dim(self.dim)?;
        match self.dim {
            1 | 2 => self.intersect_halfspaces(&other.halfspaces()?),
            3 | 4 => intersect_nd(self, other),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    /// Squared Euclidean distance from a point to the polytope, exact.
    pub fn dist_sq(&self, v: &Vector) -> Result<Scalar> {
        v.check_dim(self.dim)?;
        if self.contains_point(v)? {
            return Ok(Scalar::zero());
        }
        match self.dim {
            1 => {
                let x = &v.0[0];
                let d = self
                    .vertices
                    .iter()
                    .map(|w| {
                        let t = &w.0[0] - x;
                        &t * &t
                    })
                    .reduce(|a, b| a.min_val(b))
                    .unwrap();
                Ok(d)
            }
            2 => Ok(dist_sq_2d(&self.vertices, v)),
            _ => Ok(dist_sq_nd(&self.vertices, v, self.dim)),
        }
    }

    /// One-sided Hausdorff excess `d0(X, Y)^2 = max_{x in X} dist(x, Y)^2`.
    pub fn excess_sq(&self, other: &Polytope) -> Result<Scalar> {
        other.check_dim(self.dim)?;
        let mut best = Scalar::zero();
        for v in &self.vertices {
            let d = other.dist_sq(v)?;
            best = best.max_val(d);
        }
        Ok(best)
    }

    /// Squared Hausdorff distance, exact.
    pub fn hausdorff_sq(&self, other: &Polytope) -> Result<Scalar> {
        Ok(self.excess_sq(other)?.max_val(other.excess_sq(self)?))
    }

    pub fn hausdorff(&self, other: &Polytope) -> Result<f64> {
        Ok(self.hausdorff_sq(other)?.to_f64().sqrt())
    }

    /// Squared set norm `max_{x in X} ||x||^2`, exact.
    pub fn norm_sq(&self) -> Scalar {
        self.vertices
            .iter()
            .map(|v| v.norm_sq())
            .reduce(|a, b| a.max_val(b))
            .expect("nonempty polytope")
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    /// Vertex of maximal Euclidean norm (first in canonical order on ties).
    pub fn max_norm_vertex(&self) -> &Vector {
        let target = self.norm_sq();
        self.vertices
            .iter()
            .find(|v| v.norm_sq().approx_eq(&target))
            .expect("nonempty polytope")
    }
}

/// Regular m-gon approximation of the ball of the given radius, vertices on
/// (a 2^-20-rounded approximation of) the circle. The inscribed-polygon
/// deficiency is `(1 - cos(pi/m)) * radius` plus the rounding slack.
pub fn ball_polygon(m: usize, radius: &Scalar) -> Polytope {
    const DENOM: i64 = 1 << 20;
    let mut pts = Vec::with_capacity(m);
    for k in 0..m {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
        let x = Scalar::ratio((theta.cos() * DENOM as f64).round() as i64, DENOM);
        let y = Scalar::ratio((theta.sin() * DENOM as f64).round() as i64, DENOM);
        pts.push(Vector(vec![&x * radius, &y * radius]));
    }
    Polytope::hull(pts).expect("ball polygon")
}

fn hull_1d(points: Vec<Vector>) -> Vec<Vector> {
    let mut lo = points[0].clone();
    let mut hi = points[0].clone();
    for p in &points {
        if p.lex_cmp(&lo) == Ordering::Less {
            lo = p.clone();
        }
        if p.lex_cmp(&hi) == Ordering::Greater {
            hi = p.clone();
        }
    }
    if lo.approx_eq(&hi) {
        vec![lo]
    } else {
        vec![lo, hi]
    }
}

/// Cross product sign of (a - o) x (b - o).
fn cross(o: &Vector, a: &Vector, b: &Vector) -> Scalar {
    let ax = &a.0[0] - &o.0[0];
    let ay = &a.0[1] - &o.0[1];
    let bx = &b.0[0] - &o.0[0];
    let by = &b.0[1] - &o.0[1];
    &ax * &by - &ay * &bx
}

/// Andrew monotone chain; output counterclockwise from the lexicographic
/// minimum, collinear points dropped.
fn hull_2d(mut points: Vec<Vector>) -> Vec<Vector> {
    points.sort_by(|a, b| a.lex_cmp(b));
    points.dedup_by(|a, b| a.approx_eq(b));
    let n = points.len();
    if n <= 2 {
        return points;
    }
    let mut lower: Vec<Vector> = Vec::new();
    for p in &points {
        while lower.len() >= 2
            && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).sign() <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vector> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2
            && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).sign() <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 2 {
        // All points collinear-degenerate; fall back to the extreme pair.
        return hull_1d_like(points);
    }
    lower
}

fn hull_1d_like(points: Vec<Vector>) -> Vec<Vector> {
    let lo = points.first().unwrap().clone();
    let hi = points.last().unwrap().clone();
    if lo.approx_eq(&hi) {
        vec![lo]
    } else {
        vec![lo, hi]
    }
}

fn contains_point_2d(verts: &[Vector], p: &Vector) -> bool {
    match verts.len() {
        1 => verts[0].approx_eq(p),
        2 => {
            let (a, b) = (&verts[0], &verts[1]);
            if cross(a, b, p).sign() != 0 {
                return false;
            }
            let d = b.sub(a);
            let t = p.sub(a).dot(&d);
            t.sign() >= 0 && (&t - &d.norm_sq()).sign() <= 0
        }
        n => {
            for i in 0..n {
                let j = (i + 1) % n;
                if cross(&verts[i], &verts[j], p).sign() < 0 {
                    return false;
                }
            }
            true
        }
    }
}

fn contains_point_lp(verts: &[Vector], p: &Vector) -> bool {
    // Feasibility of p = sum(lambda_i v_i), lambda in the simplex.
    let dim = p.dim();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(dim + 1);
    for c in 0..dim {
        rows.push(verts.iter().map(|v| v.0[c].as_rational()).collect());
    }
    rows.push(vec![BigRational::from_integer(1.into()); verts.len()]);
    let mut rhs: Vec<BigRational> = p.0.iter().map(|x| x.as_rational()).collect();
    rhs.push(BigRational::from_integer(1.into()));
    linalg::feasible_nonneg(&rows, &rhs)
}

fn halfspaces_1d(verts: &[Vector]) -> Vec<Halfspace> {
    let lo = verts[0].0[0].clone();
    let hi = verts[verts.len() - 1].0[0].clone();
    vec![
        Halfspace {
            normal: Vector::from_ints(&[1]),
            level: hi,
        },
        Halfspace {
            normal: Vector::from_ints(&[-1]),
            level: -lo,
        },
    ]
}

fn halfspaces_2d(verts: &[Vector]) -> Vec<Halfspace> {
    match verts.len() {
        1 => {
            let v = &verts[0];
            vec![
                Halfspace {
                    normal: Vector::from_ints(&[1, 0]),
                    level: v.0[0].clone(),
                },
                Halfspace {
                    normal: Vector::from_ints(&[-1, 0]),
                    level: -&v.0[0],
                },
                Halfspace {
                    normal: Vector::from_ints(&[0, 1]),
                    level: v.0[1].clone(),
                },
                Halfspace {
                    normal: Vector::from_ints(&[0, -1]),
                    level: -&v.0[1],
                },
            ]
        }
        2 => {
            let (a, b) = (&verts[0], &verts[1]);
            let d = b.sub(a);
            let n = Vector(vec![d.0[1].clone(), -&d.0[0]]);
            vec![
                Halfspace {
                    level: n.dot(a),
                    normal: n.clone(),
                },
                Halfspace {
                    level: -n.dot(a),
                    normal: n.neg(),
                },
                Halfspace {
                    level: d.dot(b),
                    normal: d.clone(),
                },
                Halfspace {
                    level: -d.dot(a),
                    normal: d.neg(),
                },
            ]
        }
        n => {
            let mut out = Vec::with_capacity(n);
            for i in 0..n {
                let j = (i + 1) % n;
                let d = verts[j].sub(&verts[i]);
                // CCW boundary: outward normal is the clockwise rotation.
                let normal = Vector(vec![d.0[1].clone(), -&d.0[0]]);
                let level = normal.dot(&verts[i]);
                out.push(Halfspace { normal, level });
            }
            out
        }
    }
}

/// Clip a canonical vertex list by a halfspace; returns raw points (not yet
/// re-hulled). Works for singletons, segments and CCW polygons.
fn clip_points(verts: &[Vector], h: &Halfspace, dim: usize) -> Vec<Vector> {
    if dim == 1 {
        return clip_points_1d(verts, h);
    }
    match verts.len() {
        0 => vec![],
        1 => {
            if h.excess(&verts[0]).sign() <= 0 {
                verts.to_vec()
            } else {
                vec![]
            }
        }
        2 => clip_segment(&verts[0], &verts[1], h),
        n => {
            let mut out = Vec::with_capacity(n + 1);
            for i in 0..n {
                let cur = &verts[i];
                let next = &verts[(i + 1) % n];
                let fc = h.excess(cur);
                let fnx = h.excess(next);
                if fc.sign() <= 0 {
                    out.push(cur.clone());
                }
                if (fc.sign() > 0) != (fnx.sign() > 0) && fc.sign() != 0 && fnx.sign() != 0 {
                    let t = &fc / &(&fc - &fnx);
                    out.push(cur.add(&next.sub(cur).scale(&t)));
                }
            }
            out
        }
    }
}

fn clip_segment(a: &Vector, b: &Vector, h: &Halfspace) -> Vec<Vector> {
    let fa = h.excess(a);
    let fb = h.excess(b);
    match (fa.sign() <= 0, fb.sign() <= 0) {
        (true, true) => vec![a.clone(), b.clone()],
        (false, false) => vec![],
        (inside_a, _) => {
            let t = &fa / &(&fa - &fb);
            let cut = a.add(&b.sub(a).scale(&t));
            if inside_a {
                vec![a.clone(), cut]
            } else {
                vec![cut, b.clone()]
            }
        }
    }
}

fn clip_points_1d(verts: &[Vector], h: &Halfspace) -> Vec<Vector> {
    let n = &h.normal.0[0];
    match n.sign() {
        0 => {
            if (-&h.level).sign() <= 0 {
                verts.to_vec()
            } else {
                vec![]
            }
        }
        _ => {
            let bound = &h.level / n;
            let lo = verts[0].0[0].clone();
            let hi = verts[verts.len() - 1].0[0].clone();
            let (lo, hi) = if n.sign() > 0 {
                (lo, hi.min_val(bound))
            } else {
                (lo.max_val(bound), hi)
            };
            if (&lo - &hi).sign() > 0 {
                vec![]
            } else if lo.approx_eq(&hi) {
                vec![Vector(vec![lo])]
            } else {
                vec![Vector(vec![lo]), Vector(vec![hi])]
            }
        }
    }
}

fn dist_sq_2d(verts: &[Vector], p: &Vector) -> Scalar {
    let n = verts.len();
    if n == 1 {
        return p.sub(&verts[0]).norm_sq();
    }
    let mut best: Option<Scalar> = None;
    for i in 0..n {
        let j = (i + 1) % n;
        if n == 2 && i == 1 {
            break;
        }
        let d = segment_dist_sq(p, &verts[i], &verts[j]);
        best = Some(match best {
            Some(b) => b.min_val(d),
            None => d,
        });
    }
    best.unwrap()
}

fn segment_dist_sq(p: &Vector, a: &Vector, b: &Vector) -> Scalar {
    let d = b.sub(a);
    let len_sq = d.norm_sq();
    if len_sq.sign() == 0 {
        return p.sub(a).norm_sq();
    }
    let t = p.sub(a).dot(&d);
    let t = if t.sign() < 0 {
        Scalar::zero()
    } else if (&t - &len_sq).sign() > 0 {
        len_sq.clone()
    } else {
        t
    };
    let proj = a.add(&d.scale(&(&t / &len_sq)));
    p.sub(&proj).norm_sq()
}

// ---- general-dimension helpers (exact, rational) ----

fn hull_nd(points: Vec<Vector>, _dim: usize) -> Vec<Vector> {
    let mut sorted = points;
    sorted.sort_by(|a, b| a.lex_cmp(b));
    sorted.dedup_by(|a, b| a.approx_eq(b));
    if sorted.len() <= 2 {
        return sorted;
    }
    let mut extreme = Vec::new();
    for (i, v) in sorted.iter().enumerate() {
        let others: Vec<Vector> = sorted
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| w.clone())
            .collect();
        if !contains_point_lp(&others, v) {
            extreme.push(v.clone());
        }
    }
    if extreme.is_empty() {
        // All points coincide after dedup impossible here; keep sorted as-is.
        sorted
    } else {
        extreme
    }
}

/// Kernel vector of the (k x d) matrix of rows, via Gaussian elimination.
fn kernel_vector(rows: &[Vec<BigRational>], dim: usize) -> Option<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        if let Some(pr) = (r..a.len()).find(|&i| !a[i][c].is_zero()) {
            a.swap(r, pr);
            let p = a[r][c].clone();
            for cc in c..dim {
                a[r][cc] = &a[r][cc] / &p;
            }
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for cc in c..dim {
                        a[i][cc] = &a[i][cc] - &(&f * &a[r][cc]);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
    }
    let free = (0..dim).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![BigRational::zero(); dim];
    v[free] = BigRational::from_integer(1.into());
    for (row, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = -a[row][free].clone();
    }
    Some(v)
}

fn facets_nd(verts: &[Vector], dim: usize) -> Result<Vec<Halfspace>> {
    let n = verts.len();
    if n < dim + 1 {
        return Err(Error::Degenerate(format!(
            "facet enumeration needs a full-dimensional polytope in d={dim}"
        )));
    }
    let rat: Vec<Vec<BigRational>> = verts
        .iter()
        .map(|v| v.0.iter().map(|x| x.as_rational()).collect())
        .collect();
    let mut out: Vec<Halfspace> = Vec::new();
    let mut subset = vec![0usize; dim];
    enumerate_subsets(n, dim, &mut subset, 0, 0, &mut |s: &[usize]| {
        let base = &rat[s[0]];
        let rows: Vec<Vec<BigRational>> = s[1..]
            .iter()
            .map(|&i| {
                rat[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect::<Vec<_>>()
            })
            .collect();
        let Some(normal) = kernel_vector(&rows, dim) else {
            return;
        };
        if normal.iter().all(|x| x.is_zero()) {
            return;
        }
        let level: BigRational = normal.iter().zip(base).map(|(a, b)| a * b).sum();
        let mut pos = false;
        let mut neg = false;
        for v in &rat {
            let e: BigRational = normal.iter().zip(v).map(|(a, b)| a * b).sum::<BigRational>() - level.clone();
            if e.is_zero() {
                continue;
            }
            if e > BigRational::zero() {
                pos = true;
            } else {
                neg = true;
            }
        }
        if pos && neg {
            return;
        }
        let (normal, level) = if pos {
            (
                normal.iter().map(|x| -x.clone()).collect::<Vec<_>>(),
                -level,
            )
        } else {
            (normal, level)
        };
        let h = Halfspace {
            normal: Vector(normal.into_iter().map(Scalar::Rat).collect()),
            level: Scalar::Rat(level),
        };
        if !out.iter().any(|g| same_halfspace(g, &h)) {
            out.push(h);
        }
    });
    if out.is_empty() {
        return Err(Error::Degenerate(
            "no facets found; polytope is not full-dimensional".into(),
        ));
    }
    Ok(out)
}

fn same_halfspace(a: &Halfspace, b: &Halfspace) -> bool {
    // Same up to positive scaling.
    let pivot_a = a.normal.0.iter().position(|x| x.sign() != 0).unwrap();
    let pivot_b = b.normal.0.iter().position(|x| x.sign() != 0).unwrap();
    if pivot_a != pivot_b || a.normal.0[pivot_a].sign() != b.normal.0[pivot_b].sign() {
        return false;
    }
    let fa = a.normal.0[pivot_a].clone();
    let fb = b.normal.0[pivot_b].clone();
    for (x, y) in a.normal.0.iter().zip(&b.normal.0) {
        if !(x / &fa).approx_eq(&(y / &fb)) {
            return false;
        }
    }
    (&a.level / &fa).approx_eq(&(&b.level / &fb))
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    buf: &mut Vec<usize>,
    depth: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        f(buf);
        return;
    }
    for i in start..n {
        buf[depth] = i;
        enumerate_subsets(n, k, buf, depth + 1, i + 1, f);
    }
}

fn intersect_nd(x: &Polytope, y: &Polytope) -> Result<Option<Polytope>> {
    let dim = x.dim;
    let mut hs = x.halfspaces()?;
    hs.extend(y.halfspaces()?);
    let m = hs.len();
    let mut candidates: Vec<Vector> = Vec::new();
    let mut subset = vec![0usize; dim];
    enumerate_subsets(m, dim, &mut subset, 0, 0, &mut |s: &[usize]| {
        let a: Vec<Vec<BigRational>> = s
            .iter()
            .map(|&i| hs[i].normal.0.iter().map(|v| v.as_rational()).collect())
            .collect();
        let b: Vec<BigRational> = s.iter().map(|&i| hs[i].level.as_rational()).collect();
        if let Some(z) = linalg::solve_square(a, b) {
            let v = Vector(z.into_iter().map(Scalar::Rat).collect());
            if hs.iter().all(|h| h.excess(&v).sign() <= 0) {
                candidates.push(v);
            }
        }
    });
    if candidates.is_empty() {
        return Ok(None);
    }
    Ok(Some(Polytope::hull(candidates)?))
}

fn dist_sq_nd(verts: &[Vector], p: &Vector, dim: usize) -> Scalar {
    // Minimum over projections onto affine hulls of vertex subsets of size
    // <= d+1 whose barycentric coordinates are nonnegative.
    let n = verts.len();
    let mut best: Option<Scalar> = None;
    for v in verts {
        let d = p.sub(v).norm_sq();
        best = Some(match best.take() {
            Some(b) => b.min_val(d),
            None => d,
        });
    }
    for k in 2..=(dim + 1).min(n) {
        let mut subset = vec![0usize; k];
        enumerate_subsets(n, k, &mut subset, 0, 0, &mut |s: &[usize]| {
            if let Some(d) = project_subset(verts, p, s) {
                let cur = best.take();
                best = Some(match cur {
                    Some(b) => b.min_val(d),
                    None => d,
                });
            }
        });
    }
    best.expect("nonempty polytope")
}

fn project_subset(verts: &[Vector], p: &Vector, s: &[usize]) -> Option<Scalar> {
    let w0 = &verts[s[0]];
    let us: Vec<Vector> = s[1..].iter().map(|&i| verts[i].sub(w0)).collect();
    let k = us.len();
    let gram: Vec<Vec<BigRational>> = (0..k)
        .map(|i| (0..k).map(|j| us[i].dot(&us[j]).as_rational()).collect())
        .collect();
    let rhs: Vec<BigRational> = (0..k).map(|i| us[i].dot(&p.sub(w0)).as_rational()).collect();
    let mu = linalg::solve_square(gram, rhs)?;
    let mut lambda0 = BigRational::from_integer(1.into());
    for m in &mu {
        if m < &BigRational::zero() {
            return None;
        }
        lambda0 -= m.clone();
    }
    if lambda0 < BigRational::zero() {
        return None;
    }
    let mut proj = w0.clone();
    for (m, u) in mu.iter().zip(&us) {
        proj = proj.add(&u.scale(&Scalar::Rat(m.clone())));
    }
    Some(p.sub(&proj).norm_sq())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn square01() -> Polytope {
        Polytope::hull(vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[1, 1]),
            Vector::from_ints(&[0, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn hull_drops_interior_point() {
        let t = Polytope::hull(vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[0, 1]),
            Vector::from_ratios(&[(1, 4), (1, 4)]),
        ])
        .unwrap();
        assert_eq!(t.vertices().len(), 3);
    }

    #[test]
    fn hull_singleton_and_collinear() {
        let s = Polytope::hull(vec![Vector::from_ints(&[0, 0])]).unwrap();
        assert_eq!(s.vertices().len(), 1);
        let seg = Polytope::hull(vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[1, 1]),
            Vector::from_ratios(&[(1, 2), (1, 2)]),
        ])
        .unwrap();
        assert_eq!(seg.vertices().len(), 2);
        assert!(seg.vertices()[0].approx_eq(&Vector::from_ints(&[0, 0])));
    }

    #[test]
    fn hull_is_idempotent() {
        let sq = square01();
        let again = Polytope::hull(sq.vertices().to_vec()).unwrap();
        assert_eq!(sq, again);
    }

    #[test]
    fn support_on_square() {
        let sq = square01();
        let (v, face) = sq.support(&Vector::from_ints(&[1, 0])).unwrap();
        assert_eq!(v, Scalar::from_int(1));
        assert_eq!(face.vertices().len(), 2);
        let (v, face) = sq.support(&Vector::from_ints(&[1, 1])).unwrap();
        assert_eq!(v, Scalar::from_int(2));
        assert!(face.is_singleton());
        let s = Polytope::singleton(Vector::from_ints(&[3, 4]));
        let (v, face) = s.support(&Vector::from_ints(&[2, -1])).unwrap();
        assert_eq!(v, Scalar::from_int(2));
        assert!(face.is_singleton());
    }

    #[test]
    fn support_dimension_mismatch() {
        let sq = square01();
        assert!(sq.support(&Vector::from_ints(&[1])).is_err());
    }

    #[test]
    fn minkowski_segments_make_square() {
        let e1 = Polytope::hull(vec![Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 0])]).unwrap();
        let e2 = Polytope::hull(vec![Vector::from_ints(&[0, 0]), Vector::from_ints(&[0, 1])]).unwrap();
        assert_eq!(e1.minkowski_sum(&e2).unwrap(), square01());
        let z = Polytope::origin(2);
        assert_eq!(square01().minkowski_sum(&z).unwrap(), square01());
    }

    #[test]
    fn convex_scalar_identity() {
        // (1/3)X + (2/3)X = X
        let x = Polytope::hull(vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[2, 1]),
            Vector::from_ints(&[-1, 2]),
        ])
        .unwrap();
        let lhs = x
            .scale(&Scalar::ratio(1, 3))
            .minkowski_sum(&x.scale(&Scalar::ratio(2, 3)))
            .unwrap();
        assert_eq!(lhs, x);
    }

    #[test]
    fn scale_cases() {
        let seg = Polytope::hull(vec![Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 0])]).unwrap();
        let r = seg.scale(&Scalar::from_int(-1));
        assert!(r.vertices()[0].approx_eq(&Vector::from_ints(&[-1, 0])));
        assert_eq!(seg.scale(&Scalar::from_int(1)), seg);
        assert_eq!(seg.scale(&Scalar::zero()), Polytope::origin(2));
    }

    #[test]
    fn containment() {
        let sq = square01();
        assert!(sq.contains_point(&Vector::from_ratios(&[(1, 2), (1, 2)])).unwrap());
        assert!(!sq.contains_point(&Vector::from_ints(&[2, 0])).unwrap());
        for v in sq.vertices() {
            assert!(sq.contains_point(v).unwrap());
        }
        let big = sq.scale(&Scalar::from_int(2));
        assert!(big.contains_set(&sq).unwrap());
        assert!(sq.contains_set(&sq).unwrap());
        assert!(!sq.contains_set(&big).unwrap());
    }

    #[test]
    fn intersections() {
        let a = square01().scale(&Scalar::from_int(2));
        let b = a.translate(&Vector::from_ints(&[1, 1])).unwrap();
        let got = a.intersect(&b).unwrap().unwrap();
        let want = square01().translate(&Vector::from_ints(&[1, 1])).unwrap();
        assert_eq!(got, want);
        assert_eq!(a.intersect(&a).unwrap().unwrap(), a);
        let far = square01().translate(&Vector::from_ints(&[2, 2])).unwrap();
        assert!(square01().intersect(&far).unwrap().is_none());
    }

    #[test]
    fn halfspace_clipping() {
        let sq = square01();
        let h = Halfspace::new(Vector::from_ints(&[1, 0]), Scalar::ratio(1, 2)).unwrap();
        let clipped = sq.intersect_halfspaces(&[h]).unwrap().unwrap();
        assert_eq!(clipped.support_value(&Vector::from_ints(&[1, 0])), Scalar::ratio(1, 2));
        assert_eq!(clipped.support_value(&Vector::from_ints(&[0, 1])), Scalar::from_int(1));
        let loose = Halfspace::new(Vector::from_ints(&[1, 0]), Scalar::from_int(2)).unwrap();
        assert_eq!(sq.intersect_halfspaces(&[loose]).unwrap().unwrap(), sq);
        let cutoff = Halfspace::new(Vector::from_ints(&[1, 0]), Scalar::from_int(-1)).unwrap();
        assert!(sq.intersect_halfspaces(&[cutoff]).unwrap().is_none());
    }

    #[test]
    fn hausdorff_cases() {
        let sq = square01();
        assert_eq!(sq.hausdorff_sq(&sq).unwrap(), Scalar::zero());
        let moved = sq.translate(&Vector::from_ints(&[3, 4])).unwrap();
        assert_eq!(sq.hausdorff_sq(&moved).unwrap(), Scalar::from_int(25));
        // d([0,1]^2, [0,2]^2) = sqrt(2): (2,2) projects to (1,1).
        let big = sq.scale(&Scalar::from_int(2));
        assert_eq!(sq.hausdorff_sq(&big).unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn norm_cases() {
        assert_eq!(square01().norm_sq(), Scalar::from_int(2));
        assert_eq!(Polytope::origin(2).norm_sq(), Scalar::zero());
        let x = square01();
        let scaled = x.scale(&Scalar::from_int(-3));
        assert_eq!(scaled.norm_sq(), Scalar::from_int(18));
    }

    #[test]
    fn three_dimensional_paths() {
        // Unit cube in 3D.
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(Vector::from_ints(&[x, y, z]));
                }
            }
        }
        pts.push(Vector::from_ratios(&[(1, 2), (1, 2), (1, 2)]));
        let cube = Polytope::hull(pts).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        assert!(cube.contains_point(&Vector::from_ratios(&[(1, 2), (1, 2), (1, 2)])).unwrap());
        assert!(!cube.contains_point(&Vector::from_ints(&[2, 0, 0])).unwrap());
        assert_eq!(cube.halfspaces().unwrap().len(), 6);
        let shifted = cube.translate(&Vector::from_ratios(&[(1, 2), (0, 1), (0, 1)])).unwrap();
        let inter = cube.intersect(&shifted).unwrap().unwrap();
        assert_eq!(inter.vertices().len(), 8);
        assert_eq!(inter.support_value(&Vector::from_ints(&[-1, 0, 0])), Scalar::ratio(-1, 2));
        // Distance from an outside corner point.
        let d = cube.dist_sq(&Vector::from_ints(&[2, 2, 2])).unwrap();
        assert_eq!(d, Scalar::from_int(3));
    }

    #[test]
    fn ball_polygon_shape() {
        let b = ball_polygon(16, &Scalar::from_int(1));
        assert_eq!(b.vertices().len(), 16);
        assert!(b.contains_point(&Vector::zero(2)).unwrap());
        let n = b.norm();
        assert!((n - 1.0).abs() < 1e-5);
    }
}
