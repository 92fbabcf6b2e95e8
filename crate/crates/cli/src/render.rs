//! ASCII and SVG figure output.
//!
//! Both renderers are deterministic: points are drawn in canonical
//! order, edges sorted by their endpoints, and all coordinates are
//! integers, so identical inputs give byte-identical output.
//!
//! ASCII legend: `.` empty cell, `#` grid point, `O` closed pure point,
//! `o` open pure point, `+` mixed point, `*` overlay point. The y axis
//! points up (top row is the largest y).
//!
//! SVG legend: pure and grid points are circles, mixed points are
//! squares, matching the usual way the two planes are drawn; overlays
//! cycle through accent colors.

use digitop::khalimsky::{k_adjacent, KPoint};
use digitop::rosenfeld::{are_adjacent, Adjacency, GridPoint};
use digitop::Plane;

pub struct Layer {
    pub plane: Plane,
    pub points: Vec<(i32, i32)>,
}

fn bounds(layers: &[Layer]) -> Option<(i32, i32, i32, i32)> {
    let mut it = layers.iter().flat_map(|l| l.points.iter().copied());
    let (x0, y0) = it.next()?;
    let mut b = (x0, x0, y0, y0);
    for (x, y) in layers.iter().flat_map(|l| l.points.iter().copied()) {
        b = (b.0.min(x), b.1.max(x), b.2.min(y), b.3.max(y));
    }
    Some(b)
}

fn glyph(plane: Plane, (x, y): (i32, i32)) -> char {
    match plane {
        Plane::Z2 => '#',
        Plane::K2 => {
            let p = KPoint::new(x, y);
            if p.is_mixed() {
                '+'
            } else if p.is_open() {
                'o'
            } else {
                'O'
            }
        }
    }
}

pub fn ascii(layers: &[Layer]) -> String {
    let Some((x_min, x_max, y_min, y_max)) = bounds(layers) else {
        return "(empty set)\n".to_string();
    };
    let width = (x_max - x_min + 1) as usize;
    let height = (y_max - y_min + 1) as usize;
    let mut grid = vec![vec!['.'; width]; height];
    for (i, layer) in layers.iter().enumerate() {
        for &(x, y) in &layer.points {
            let row = (y_max - y) as usize;
            let col = (x - x_min) as usize;
            grid[row][col] = if i == 0 { glyph(layer.plane, (x, y)) } else { '*' };
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row
            .iter()
            .flat_map(|&c| [c, ' '])
            .take(2 * width - 1)
            .collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn layer_edges(layer: &Layer, z2_adjacency: Adjacency) -> Vec<((i32, i32), (i32, i32))> {
    let mut pts = layer.points.clone();
    pts.sort_unstable();
    pts.dedup();
    let mut edges = Vec::new();
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            let adjacent = match layer.plane {
                Plane::Z2 => are_adjacent(
                    GridPoint::new(p.0, p.1),
                    GridPoint::new(q.0, q.1),
                    z2_adjacency,
                ),
                Plane::K2 => k_adjacent(KPoint::new(p.0, p.1), KPoint::new(q.0, q.1)),
            };
            if adjacent {
                edges.push((p, q));
            }
        }
    }
    edges
}

const SCALE: i32 = 24;
const RADIUS: i32 = 7;
const COLORS: [&str; 5] = ["#111111", "#2563eb", "#dc2626", "#059669", "#d97706"];

pub fn svg(layers: &[Layer], edges: bool, z2_adjacency: Adjacency) -> String {
    let Some((x_min, x_max, y_min, y_max)) = bounds(layers) else {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"48\" height=\"48\"/>\n"
            .to_string();
    };
    let px = |x: i32| (x - x_min + 1) * SCALE;
    let py = |y: i32| (y_max - y + 1) * SCALE;
    let width = (x_max - x_min + 2) * SCALE;
    let height = (y_max - y_min + 2) * SCALE;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    if edges {
        for (i, layer) in layers.iter().enumerate() {
            let color = COLORS[i % COLORS.len()];
            for (p, q) in layer_edges(layer, z2_adjacency) {
                out.push_str(&format!(
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
                    px(p.0), py(p.1), px(q.0), py(q.1)
                ));
            }
        }
    }
    for (i, layer) in layers.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let mut pts = layer.points.clone();
        pts.sort_unstable();
        pts.dedup();
        for (x, y) in pts {
            let mixed = layer.plane == Plane::K2 && KPoint::new(x, y).is_mixed();
            let open = layer.plane == Plane::K2 && KPoint::new(x, y).is_open();
            let fill = if open { "#ffffff" } else { color };
            if mixed {
                out.push_str(&format!(
                    "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{fill}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
                    px(x) - RADIUS, py(y) - RADIUS, 2 * RADIUS, 2 * RADIUS
                ));
            } else {
                out.push_str(&format!(
                    "  <circle cx=\"{}\" cy=\"{}\" r=\"{RADIUS}\" fill=\"{fill}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
                    px(x), py(y)
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_three_point_path() {
        let layer = Layer {
            plane: Plane::Z2,
            points: vec![(0, 0), (1, 1), (2, 1)],
        };
        assert_eq!(ascii(&[layer]), ". # #\n# . .\n");
    }

    #[test]
    fn ascii_khalimsky_glyphs() {
        let layer = Layer {
            plane: Plane::K2,
            points: vec![(0, 0), (1, 0), (1, 1)],
        };
        assert_eq!(ascii(&[layer]), ". o\nO +\n");
    }

    #[test]
    fn svg_diamond_counts() {
        let diamond = Layer {
            plane: Plane::K2,
            points: vec![(0, 0), (2, 0), (1, 1), (1, -1)],
        };
        let plain = svg(&[diamond], false, Adjacency::Eight);
        assert_eq!(plain.matches("<circle").count(), 4);
        assert_eq!(plain.matches("<line").count(), 0);
        let diamond = Layer {
            plane: Plane::K2,
            points: vec![(0, 0), (2, 0), (1, 1), (1, -1)],
        };
        let with_edges = svg(&[diamond], true, Adjacency::Eight);
        assert_eq!(with_edges.matches("<line").count(), 4);
    }

    #[test]
    fn svg_is_deterministic() {
        let mk = || Layer {
            plane: Plane::Z2,
            points: vec![(3, 1), (0, 0), (1, 1)],
        };
        assert_eq!(
            svg(&[mk()], true, Adjacency::Eight),
            svg(&[mk()], true, Adjacency::Eight)
        );
    }
}
