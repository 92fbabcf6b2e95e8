//! The slant map between the grid plane and the Khalimsky plane.
//!
//! `slant(x, y) = (x + y, y - x)` embeds `Z^2` onto exactly the pure
//! points of `K^2`, turning 4-adjacency into Khalimsky adjacency. The
//! expansion operator [`expand`] additionally absorbs every mixed point
//! whose minimal neighborhood or closure is completed by the image; it
//! is the device that carries 8-adjacency across the bridge.

use crate::error::{Error, Result};
use crate::khalimsky::{mixed_spans, KPoint, KSet};
use crate::rosenfeld::{GridPoint, GridSet};

/// Image of a grid point; always a pure point.
pub fn slant(p: GridPoint) -> KPoint {
    KPoint::new(p.x + p.y, p.y - p.x)
}

/// Unique preimage of a pure point. Mixed points are outside the range.
pub fn unslant(q: KPoint) -> Result<GridPoint> {
    if !q.is_pure() {
        return Err(Error::NotInSlantRange(q.x, q.y));
    }
    Ok(GridPoint::new((q.x - q.y) / 2, (q.x + q.y) / 2))
}

/// Pointwise image of a set.
pub fn slant_set(a: &GridSet) -> KSet {
    a.iter().map(slant).collect()
}

/// Preimage of a set. Mixed points contribute nothing, matching how
/// preimages of mixed-point-bearing sets are taken throughout.
pub fn unslant_set(b: &KSet) -> GridSet {
    b.iter()
        .filter(|p| p.is_pure())
        .map(|p| unslant(p).expect("pure point"))
        .collect()
}

/// The expansion of a grid set: its slant image together with every
/// mixed point `m` whose minimal neighborhood or closure lies inside
/// the image once `m` itself is discounted.
///
/// A qualifying mixed point has both partners of one of its spans in
/// the image, so it lies inside the image's bounding box inflated by
/// one; only that box is searched.
pub fn expand(a: &GridSet) -> KSet {
    let image = slant_set(a);
    let Some((lo, hi)) = image.bounding_box() else {
        return image;
    };
    let mut out: Vec<KPoint> = image.iter().collect();
    for x in lo.x - 1..=hi.x + 1 {
        for y in lo.y - 1..=hi.y + 1 {
            let m = KPoint::new(x, y);
            let Some((open_pair, closed_pair)) = mixed_spans(m) else {
                continue;
            };
            if open_pair.iter().all(|p| image.contains(*p))
                || closed_pair.iter().all(|p| image.contains(*p))
            {
                out.push(m);
            }
        }
    }
    KSet::from_points(out)
}

/// Whether `j` is a fixed point of expansion-after-preimage:
/// `expand(unslant_set(j)) == j`.
pub fn is_expansion_fixed(j: &KSet) -> bool {
    expand(&unslant_set(j)) == *j
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(pts: &[(i32, i32)]) -> GridSet {
        pts.iter().copied().collect()
    }

    fn ks(pts: &[(i32, i32)]) -> KSet {
        pts.iter().copied().collect()
    }

    #[test]
    fn slant_formula() {
        assert_eq!(slant(GridPoint::new(0, 0)), KPoint::new(0, 0));
        assert_eq!(slant(GridPoint::new(1, 2)), KPoint::new(3, 1));
        assert_eq!(slant(GridPoint::new(2, -1)), KPoint::new(1, -3));
    }

    #[test]
    fn slant_range_is_pure() {
        for x in -5..=5 {
            for y in -5..=5 {
                assert!(slant(GridPoint::new(x, y)).is_pure());
            }
        }
    }

    #[test]
    fn unslant_inverts() {
        assert_eq!(unslant(KPoint::new(3, 1)), Ok(GridPoint::new(1, 2)));
        assert_eq!(unslant(KPoint::new(0, 0)), Ok(GridPoint::new(0, 0)));
        assert_eq!(
            unslant(KPoint::new(1, 0)),
            Err(Error::NotInSlantRange(1, 0))
        );
    }

    #[test]
    fn set_images() {
        assert_eq!(slant_set(&gs(&[(0, 0), (1, 1)])), ks(&[(0, 0), (2, 0)]));
        // the mixed point drops out of the preimage
        assert_eq!(
            unslant_set(&ks(&[(0, 0), (1, 0), (2, 0)])),
            gs(&[(0, 0), (1, 1)])
        );
    }

    #[test]
    fn expand_singleton_adds_nothing() {
        assert_eq!(expand(&gs(&[(0, 0)])), ks(&[(0, 0)]));
    }

    #[test]
    fn expand_diagonal_pair_absorbs_connector() {
        // (0,0) and (1,1) map to (0,0) and (2,0); the mixed point (1,0)
        // has closure {(0,0),(1,0),(2,0)} and joins
        assert_eq!(
            expand(&gs(&[(0, 0), (1, 1)])),
            ks(&[(0, 0), (1, 0), (2, 0)])
        );
    }

    #[test]
    fn expansion_preimage_is_identity() {
        for seed in 0..20u64 {
            let mut v = Vec::new();
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            for x in 0..5 {
                for y in 0..5 {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    if state >> 62 == 0 {
                        v.push((x, y));
                    }
                }
            }
            let a: GridSet = v.into_iter().collect();
            assert_eq!(unslant_set(&expand(&a)), a);
            assert_eq!(unslant_set(&slant_set(&a)), a);
        }
    }

    #[test]
    fn expansion_fixed_cases() {
        // the expansion of the 4-point closed 8-curve is the 8-point ring
        let diamond = gs(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let ring = expand(&diamond);
        assert_eq!(
            ring,
            ks(&[
                (1, 1),
                (1, 0),
                (1, -1),
                (0, -1),
                (-1, -1),
                (-1, 0),
                (-1, 1),
                (0, 1)
            ])
        );
        assert!(is_expansion_fixed(&ring));

        // the all-pure diamond ring gains mixed points, so it is not fixed
        let diamond_ring = ks(&[
            (0, 0),
            (1, -1),
            (2, -2),
            (3, -1),
            (4, 0),
            (3, 1),
            (2, 2),
            (1, 1),
        ]);
        assert!(!is_expansion_fixed(&diamond_ring));

        assert!(is_expansion_fixed(&ks(&[(0, 0)])));
        assert!(is_expansion_fixed(&KSet::new()));
    }
}
