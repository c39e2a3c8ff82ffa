//! Single-set differences.
//!
//! Two conventions ship side by side:
//! - `cover_diff`: `{ z : X subset of Y + z }`, the translates of Y covering X;
//! - `erode_diff`: `{ z : z + Y subset of X }`, the classical erosion.
//!
//! Emptiness is an explicit `None`, never an error: most pairs have an
//! empty covering difference.

use crate::error::Result;
use crate::polytope::Polytope;

/// Covering difference `{ z : X ⊂ Y + z }`, computed as the intersection of
/// the translates `v + (-Y)` over the vertices `v` of `X`.
pub fn cover_diff(x: &Polytope, y: &Polytope) -> Result<Option<Polytope>> {
    y.check_dim(x.dim())?;
    let neg_y = y.neg();
    let mut acc: Option<Polytope> = None;
    for v in x.vertices() {
        let translate = neg_y.translate(v)?;
        acc = Some(match acc {
            None => translate,
            Some(cur) => match cur.intersect(&translate)? {
                Some(next) => next,
                None => return Ok(None),
            },
        });
    }
    Ok(acc)
}

/// Erosion `{ z : z + Y ⊂ X }`, computed as the intersection of `X - y`
/// over the vertices `y` of `Y`.
pub fn erode_diff(x: &Polytope, y: &Polytope) -> Result<Option<Polytope>> {
    y.check_dim(x.dim())?;
    let mut acc: Option<Polytope> = None;
    for w in y.vertices() {
        let shifted = x.translate(&w.neg())?;
        acc = Some(match acc {
            None => shifted,
            Some(cur) => match cur.intersect(&shifted)? {
                Some(next) => next,
                None => return Ok(None),
            },
        });
    }
    Ok(acc)
}

/// The intersection form printed in some references, `∩_x (Y - x)`. Differs
/// from the definitional `∩_x (x - Y)` whenever Y is not symmetric; kept for
/// the sign-discrepancy report.
pub fn cover_diff_flipped_form(x: &Polytope, y: &Polytope) -> Result<Option<Polytope>> {
    y.check_dim(x.dim())?;
    let mut acc: Option<Polytope> = None;
    for v in x.vertices() {
        let translate = y.translate(&v.neg())?;
        acc = Some(match acc {
            None => translate,
            Some(cur) => match cur.intersect(&translate)? {
                Some(next) => next,
                None => return Ok(None),
            },
        });
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::vector::Vector;

    fn rect(w: i64, h: i64) -> Polytope {
        Polytope::hull(vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[w, 0]),
            Vector::from_ints(&[w, h]),
            Vector::from_ints(&[0, h]),
        ])
        .unwrap()
    }

    #[test]
    fn cover_diff_of_singleton() {
        let v = Vector::from_ints(&[2, 3]);
        let x = Polytope::singleton(v.clone());
        let y = rect(1, 1);
        let got = cover_diff(&x, &y).unwrap().unwrap();
        let want = y.neg().translate(&v).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn cover_diff_self_is_origin() {
        let x = Polytope::hull(vec![
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[2, 0]),
            Vector::from_ints(&[1, 2]),
        ])
        .unwrap();
        let got = cover_diff(&x, &x).unwrap().unwrap();
        assert_eq!(got, Polytope::origin(2));
    }

    #[test]
    fn cover_diff_empty_when_uncoverable() {
        // No translate of the unit square covers the 2x1 rectangle.
        assert!(cover_diff(&rect(2, 1), &rect(1, 1)).unwrap().is_none());
    }

    #[test]
    fn erosion_cases() {
        let x = rect(2, 2);
        assert_eq!(erode_diff(&x, &Polytope::origin(2)).unwrap().unwrap(), x);
        assert_eq!(erode_diff(&rect(2, 2), &rect(1, 1)).unwrap().unwrap(), rect(1, 1));
        assert!(erode_diff(&rect(1, 1), &rect(2, 2)).unwrap().is_none());
    }

    #[test]
    fn covering_and_erosion_properties() {
        let small = rect(1, 1);
        let big = rect(3, 2);
        let z = cover_diff(&small, &big).unwrap().unwrap();
        assert!(z.minkowski_sum(&big).unwrap().contains_set(&small).unwrap());
        // Pointwise form: every z in Z has X ⊂ Y + z.
        for v in z.vertices() {
            assert!(big.translate(v).unwrap().contains_set(&small).unwrap());
        }
        let e = erode_diff(&big, &small).unwrap().unwrap();
        assert!(big.contains_set(&e.minkowski_sum(&small).unwrap()).unwrap());
        // 0 in Y implies erosion shrinks X.
        assert!(big.contains_set(&e).unwrap());
    }

    #[test]
    fn translation_equivariance() {
        let small = rect(1, 1);
        let big = rect(3, 2);
        let v = Vector::from_ints(&[5, -7]);
        let lhs = cover_diff(&small.translate(&v).unwrap(), &big).unwrap().unwrap();
        let rhs = cover_diff(&small, &big).unwrap().unwrap().translate(&v).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = erode_diff(&big.translate(&v).unwrap(), &small).unwrap().unwrap();
        let rhs = erode_diff(&big, &small).unwrap().unwrap().translate(&v).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_subtrahend_matches_flipped_form() {
        let x = rect(3, 2);
        // Y = [-1,1]^2 is symmetric.
        let y = rect(2, 2).translate(&Vector::from_ints(&[-1, -1])).unwrap();
        assert_eq!(y, y.neg());
        let a = cover_diff(&x, &y).unwrap();
        let b = cover_diff_flipped_form(&x, &y).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn asymmetric_subtrahend_separates_the_forms() {
        // X a singleton, Y a shifted square: the definitional form is x - Y,
        // the flipped form is Y - x.
        let x = Polytope::singleton(Vector::from_ints(&[0, 0]));
        let y = rect(1, 1).translate(&Vector::from_ints(&[3, 0])).unwrap();
        let a = cover_diff(&x, &y).unwrap().unwrap();
        let b = cover_diff_flipped_form(&x, &y).unwrap().unwrap();
        assert_ne!(a, b);
        // Only the definitional form satisfies the covering property.
        for v in a.vertices() {
            assert!(y.translate(v).unwrap().contains_set(&x).unwrap());
        }
        assert!(!y
            .translate(&b.vertices()[0])
            .unwrap()
            .contains_set(&x)
            .unwrap());
    }

    #[test]
    fn scale_zero_norm_behaviour() {
        // scale(X, a) has norm |a| * norm(X).
        let x = rect(1, 2);
        let s = x.scale(&Scalar::from_int(-3));
        assert_eq!(s.norm_sq(), Scalar::from_int(9) * x.norm_sq());
    }
}
