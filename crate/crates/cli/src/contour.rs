//! Marching squares for zero level sets of scalar functions on a box.

use trimax_core::Point;

/// Segments of the zero set of `f` over `[x0, x1] × [y0, y1]` sampled on an
/// `nx × ny` cell grid. Saddle cells are split by the centre value.
pub fn zero_set<F: Fn(Point) -> f64>(f: F, (x0, x1): (f64, f64), (y0, y1): (f64, f64), nx: usize, ny: usize) -> Vec<(Point, Point)> {
    let dx = (x1 - x0) / nx as f64;
    let dy = (y1 - y0) / ny as f64;
    let at = |i: usize, j: usize| Point::new(x0 + i as f64 * dx, y0 + j as f64 * dy);
    let values: Vec<Vec<f64>> = (0..=ny).map(|j| (0..=nx).map(|i| f(at(i, j))).collect()).collect();
    let mut out = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            // corners counterclockwise from bottom-left
            let corners = [at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
            let v = [values[j][i], values[j][i + 1], values[j + 1][i + 1], values[j + 1][i]];
            let crossing = |k: usize| {
                let (a, b) = (k, (k + 1) % 4);
                let t = v[a] / (v[a] - v[b]);
                corners[a].lerp(corners[b], t)
            };
            let edges: Vec<usize> = (0..4).filter(|&k| (v[k] < 0.0) != (v[(k + 1) % 4] < 0.0)).collect();
            match edges.len() {
                2 => out.push((crossing(edges[0]), crossing(edges[1]))),
                4 => {
                    let centre = f(corners[0].midpoint(corners[2]));
                    if (centre < 0.0) == (v[0] < 0.0) {
                        out.push((crossing(0), crossing(1)));
                        out.push((crossing(2), crossing(3)));
                    } else {
                        out.push((crossing(3), crossing(0)));
                        out.push((crossing(1), crossing(2)));
                    }
                }
                _ => {}
            }
        }
    }
    out
}
