//! Exhaustive generators and the verification-suite runner.
//!
//! The generators stream every path, closed curve, arc, and Jordan
//! curve inside a bounded [`Window`], each exactly once, by
//! backtracking over induced paths and cycles of the corresponding
//! adjacency graph. The suites in the [registry] turn each
//! verified statement into a machine check over those streams, plus
//! seeded random sets where enumeration would be too coarse.

mod generate;
mod random;
mod suites;

pub use generate::{
    enumerate_arcs, enumerate_closed_curves, enumerate_jordan_curves, enumerate_paths,
};
pub use random::{random_grid_set, random_k_set};
pub use suites::{registry, run_suite, SuiteInfo};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bounded axis-aligned box of lattice points.
///
/// Construction is capped by area so that exhaustive enumeration stays
/// at desk scale; the default cap is [`Window::DEFAULT_AREA_CAP`] cells,
/// and [`Window::with_cap`] lifts it deliberately. Windows double as
/// grid-plane and Khalimsky-plane regions; each suite documents which
/// plane its window parameter lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Window {
    x_min: i32,
    x_max: i32,
    y_min: i32,
    y_max: i32,
}

impl Window {
    pub const DEFAULT_AREA_CAP: u64 = 100;

    pub fn new(x_min: i32, x_max: i32, y_min: i32, y_max: i32) -> Result<Self> {
        Self::with_cap(x_min, x_max, y_min, y_max, Self::DEFAULT_AREA_CAP)
    }

    pub fn with_cap(x_min: i32, x_max: i32, y_min: i32, y_max: i32, cap: u64) -> Result<Self> {
        if x_min > x_max || y_min > y_max {
            return Err(Error::InvalidWindow);
        }
        let w = Window {
            x_min,
            x_max,
            y_min,
            y_max,
        };
        if w.area() > cap {
            return Err(Error::WindowTooLarge { area: w.area(), cap });
        }
        Ok(w)
    }

    /// `w x h` cells anchored at the origin.
    pub fn of_size(w: u32, h: u32) -> Result<Self> {
        if w == 0 || h == 0 {
            return Err(Error::InvalidWindow);
        }
        Self::new(0, w as i32 - 1, 0, h as i32 - 1)
    }

    pub(crate) fn unchecked(x_min: i32, x_max: i32, y_min: i32, y_max: i32) -> Self {
        debug_assert!(x_min <= x_max && y_min <= y_max);
        Window {
            x_min,
            x_max,
            y_min,
            y_max,
        }
    }

    pub fn x_min(&self) -> i32 {
        self.x_min
    }

    pub fn x_max(&self) -> i32 {
        self.x_max
    }

    pub fn y_min(&self) -> i32 {
        self.y_min
    }

    pub fn y_max(&self) -> i32 {
        self.y_max
    }

    pub fn width(&self) -> u32 {
        (self.x_max - self.x_min + 1) as u32
    }

    pub fn height(&self) -> u32 {
        (self.y_max - self.y_min + 1) as u32
    }

    pub fn area(&self) -> u64 {
        self.width() as u64 * self.height() as u64
    }

    pub fn contains(&self, (x, y): (i32, i32)) -> bool {
        self.x_min <= x && x <= self.x_max && self.y_min <= y && y <= self.y_max
    }

    /// Cells in canonical order (x, then y).
    pub fn points(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        let ys = self.y_min..=self.y_max;
        (self.x_min..=self.x_max).flat_map(move |x| ys.clone().map(move |y| (x, y)))
    }

    /// The window grown by `margin` on every side. Derived windows keep
    /// no cap of their own.
    pub fn inflate(&self, margin: i32) -> Window {
        Window::unchecked(
            self.x_min - margin,
            self.x_max + margin,
            self.y_min - margin,
            self.y_max + margin,
        )
    }

    /// Bounding box of the slant image of this grid window.
    pub fn slant_image(&self) -> Window {
        Window::unchecked(
            self.x_min + self.y_min,
            self.x_max + self.y_max,
            self.y_min - self.x_max,
            self.y_max - self.x_min,
        )
    }

    /// Bounding box of the slant preimages of the pure points of this
    /// Khalimsky window.
    pub fn slant_preimage(&self) -> Window {
        let ceil_half = |n: i32| -> i32 { n.div_euclid(2) + (n.rem_euclid(2) != 0) as i32 };
        let floor_half = |n: i32| -> i32 { n.div_euclid(2) };
        Window::unchecked(
            ceil_half(self.x_min - self.y_max),
            floor_half(self.x_max - self.y_min),
            ceil_half(self.x_min + self.y_min),
            floor_half(self.x_max + self.y_max),
        )
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}, {}] x [{}, {}]",
            self.x_min, self.x_max, self.y_min, self.y_max
        )
    }
}

/// Parameter bundle for a suite run. Every field has a default, so
/// callers override only what a suite actually reads; each suite's
/// registry entry says how it interprets the window.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteParams {
    /// Enumeration region. Grid box for grid-side suites, Khalimsky box
    /// for curve-side suites.
    pub window: Window,
    /// Largest generated set size.
    pub max_size: usize,
    /// Seed for every randomized portion of a run.
    pub seed: u64,
    /// Random sets drawn per density.
    pub samples: u32,
    /// Inclusion probabilities for random sets.
    pub densities: Vec<f64>,
    /// Admit the size-4 curves that the Jordan-curve statements exclude,
    /// to expose where the size hypothesis is sharp.
    pub include_small: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            window: Window::of_size(6, 6).expect("default window within cap"),
            max_size: 8,
            seed: 7,
            samples: 200,
            densities: vec![0.2, 0.4, 0.6],
            include_small: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_cap_enforced() {
        assert!(Window::of_size(10, 10).is_ok());
        assert!(matches!(
            Window::of_size(11, 10),
            Err(Error::WindowTooLarge { area: 110, cap: 100 })
        ));
        assert!(Window::with_cap(0, 10, 0, 10, 121).is_ok());
        assert!(matches!(Window::new(3, 2, 0, 0), Err(Error::InvalidWindow)));
    }

    #[test]
    fn window_points_canonical() {
        let w = Window::of_size(2, 3).unwrap();
        let pts: Vec<(i32, i32)> = w.points().collect();
        assert_eq!(pts, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]);
        assert_eq!(w.area(), 6);
    }

    #[test]
    fn slant_windows_cover_images() {
        for w in [
            Window::of_size(6, 6).unwrap(),
            Window::new(-3, 2, 1, 7).unwrap(),
            Window::new(1, 5, -4, -1).unwrap(),
        ] {
            let img = w.slant_image();
            for (x, y) in w.points() {
                let q = crate::slant::slant(crate::rosenfeld::GridPoint::new(x, y));
                assert!(img.contains((q.x, q.y)));
            }
            let pre = img.slant_preimage();
            for (x, y) in img.points() {
                let q = crate::khalimsky::KPoint::new(x, y);
                if q.is_pure() {
                    let p = crate::slant::unslant(q).unwrap();
                    assert!(pre.contains((p.x, p.y)));
                }
            }
        }
    }
}
