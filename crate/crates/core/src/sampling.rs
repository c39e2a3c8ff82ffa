//! Seeded random instances for property sweeps: small rational-coordinate
//! polygons and max-affine functions at desk scale.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::polytope::Polytope;
use crate::scalar::Scalar;
use crate::subdiff::PwlConvexFunction;
use crate::vector::Vector;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polygon: hull of up to `max_vertices` points with coordinates on
/// the grid Z/8 inside [-range, range]^2.
pub fn random_polygon(rng: &mut impl Rng, max_vertices: usize, range: i64) -> Polytope {
    let n = rng.random_range(1..=max_vertices.max(1));
    let lim = range * 8;
    let pts: Vec<Vector> = (0..n)
        .map(|_| {
            Vector(vec![
                Scalar::ratio(rng.random_range(-lim..=lim), 8),
                Scalar::ratio(rng.random_range(-lim..=lim), 8),
            ])
        })
        .collect();
    Polytope::hull(pts).expect("nonempty sample")
}

/// Random polygon with at least 3 hull vertices (resamples degenerate draws).
pub fn random_proper_polygon(rng: &mut impl Rng, max_vertices: usize, range: i64) -> Polytope {
    loop {
        let p = random_polygon(rng, max_vertices.max(4), range);
        if p.vertices().len() >= 3 {
            return p;
        }
    }
}

/// Random max-affine function with up to `max_pieces` pieces in `dim` <= 2.
pub fn random_pwl(rng: &mut impl Rng, dim: usize, max_pieces: usize) -> PwlConvexFunction {
    let n = rng.random_range(2..=max_pieces.max(2));
    let pieces = (0..n)
        .map(|_| {
            let a = Vector(
                (0..dim)
                    .map(|_| Scalar::ratio(rng.random_range(-16..=16), 8))
                    .collect(),
            );
            let b = Scalar::ratio(rng.random_range(-16..=16), 8);
            (a, b)
        })
        .collect();
    PwlConvexFunction::new(pieces).expect("nonempty pieces")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let a = random_polygon(&mut rng_from_seed(5), 8, 2);
        let b = random_polygon(&mut rng_from_seed(5), 8, 2);
        assert_eq!(a, b);
        let f = random_pwl(&mut rng_from_seed(5), 2, 6);
        let g = random_pwl(&mut rng_from_seed(5), 2, 6);
        assert_eq!(f, g);
    }

    #[test]
    fn proper_polygons_have_area() {
        let mut rng = rng_from_seed(11);
        for _ in 0..20 {
            let p = random_proper_polygon(&mut rng, 8, 2);
            assert!(p.vertices().len() >= 3);
        }
    }
}
