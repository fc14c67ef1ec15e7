//! Brute-force maximizers and a bracketing root finder.
//!
//! Everything here works from raw geometry (line intersections and
//! half-plane tests) and never calls the closed forms it is used to check.
//! Grids are deterministic and cell-centred, so a given [`GridSpec`] always
//! produces the same answer regardless of thread count.

use rayon::prelude::*;

use crate::error::{GeomError, Result};
use crate::geom::{intersect_lines, Point, SideId, Triangle, Vertex};
use crate::solution::{PolygonKind, PolygonSolution};
use crate::wedged::wedge_vertex;

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    n: usize,
    bounds: Vec<(f64, f64)>,
}

impl GridSpec {
    pub fn new(n: usize, bounds: Vec<(f64, f64)>) -> Result<Self> {
        if n < 2 {
            return Err(GeomError::InvalidGrid(format!("n = {n}, need at least 2")));
        }
        if bounds.is_empty() {
            return Err(GeomError::InvalidGrid("no parameter bounds".into()));
        }
        if let Some((lo, hi)) = bounds.iter().find(|(lo, hi)| !(lo.is_finite() && hi.is_finite() && lo <= hi)) {
            return Err(GeomError::InvalidGrid(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self { n, bounds })
    }

    /// `dims` parameters, each on `[0, 1]`.
    pub fn unit(n: usize, dims: usize) -> Result<Self> {
        Self::new(n, vec![(0.0, 1.0); dims.max(1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    fn bound(&self, dim: usize) -> Result<(f64, f64)> {
        self.bounds
            .get(dim)
            .copied()
            .ok_or_else(|| GeomError::InvalidGrid(format!("missing bounds for parameter {dim}")))
    }

    /// `i`-th cell centre of parameter `dim`.
    fn sample(&self, (lo, hi): (f64, f64), i: usize) -> f64 {
        lo + (hi - lo) * (i as f64 + 0.5) / self.n as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub area: f64,
    pub witness: PolygonSolution,
    /// Winning grid parameter (first parameter for multi-parameter scans).
    pub argmax: f64,
}

/// Triangle as three inward half-planes.
struct HalfPlanes([(Point, f64); 3]);

impl HalfPlanes {
    fn of(t: &Triangle) -> Self {
        Self(SideId::ALL.map(|s| {
            let n = t.inward_normal(s);
            let (p, _) = t.side_points(s);
            (n, n.dot(p))
        }))
    }

    fn contains(&self, p: Point, eps: f64) -> bool {
        self.0.iter().all(|&(n, off)| n.dot(p) - off >= -eps)
    }
}

/// Scans parallelograms pinned at each vertex with sides along its two
/// sides, `V + u·(P−V) + v·(Q−V)`, keeping those whose fourth corner stays
/// inside the triangle. Needs two grid parameters (`u`, `v`).
pub fn brute_force_max_parallelogram(t: &Triangle, g: &GridSpec) -> Result<OracleResult> {
    let (bu, bv) = (g.bound(0)?, g.bound(1)?);
    let planes = HalfPlanes::of(t);
    let eps = t.geom_eps();
    let n = g.n;

    let best = Vertex::ALL
        .iter()
        .map(|&anchor| {
            let side = anchor.opposite_side();
            let (p, q) = t.side_points(side);
            let v0 = t.vertex(anchor);
            let (e1, e2) = (p - v0, q - v0);
            let unit_area = e1.cross(e2).abs();
            (0..n)
                .into_par_iter()
                .filter_map(|i| {
                    let u = g.sample(bu, i);
                    let mut row_best: Option<(f64, usize, usize)> = None;
                    for j in 0..n {
                        let v = g.sample(bv, j);
                        let corner = v0 + e1 * u + e2 * v;
                        if !planes.contains(corner, eps) {
                            break;
                        }
                        let area = unit_area * u * v;
                        if row_best.map_or(true, |(b, _, _)| area > b) {
                            row_best = Some((area, i, j));
                        }
                    }
                    row_best
                })
                .reduce_with(pick_max)
                .map(|(area, i, j)| (area, anchor, i, j))
        })
        .flatten()
        .fold(None::<(f64, Vertex, usize, usize)>, |acc, cur| match acc {
            Some(a) if a.0 >= cur.0 => Some(a),
            _ => Some(cur),
        })
        .ok_or_else(|| GeomError::InvalidGrid("no feasible parallelogram on grid".into()))?;

    let (area, anchor, i, j) = best;
    let (u, v) = (g.sample(bu, i), g.sample(bv, j));
    let (p, q) = t.side_points(anchor.opposite_side());
    let v0 = t.vertex(anchor);
    let (e1, e2) = (p - v0, q - v0);
    let witness = PolygonSolution::new(
        PolygonKind::Parallelogram,
        [v0, v0 + e1 * u, v0 + e1 * u + e2 * v, v0 + e2 * v],
        anchor.opposite_side(),
        area,
    )
    .with_anchor(anchor)
    .with_param("u", u)
    .with_param("v", v);
    Ok(OracleResult { area, witness, argmax: u })
}

/// Larger area wins; equal areas keep the lexicographically first cell.
fn pick_max(l: (f64, usize, usize), r: (f64, usize, usize)) -> (f64, usize, usize) {
    if r.0 > l.0 || (r.0 == l.0 && (r.1, r.2) < (l.1, l.2)) {
        r
    } else {
        l
    }
}

/// Cross-section of the triangle on the line at distance `y` from `base`:
/// its end points on the two other sides.
fn cross_section(t: &Triangle, base: SideId, y: f64) -> (Point, Point) {
    let (p, q) = t.side_points(base);
    let apex = t.vertex(base.opposite_vertex());
    let n = t.inward_normal(base);
    let dir = q - p;
    let start = p + n * y;
    let hit = |from: Point| {
        let (k, _) = intersect_lines(start, dir, from, apex - from).expect("side is not parallel to base");
        start + dir * k
    };
    (hit(p), hit(q))
}

fn apex_height(t: &Triangle, base: SideId) -> f64 {
    let (p, _) = t.side_points(base);
    (t.vertex(base.opposite_vertex()) - p).dot(t.inward_normal(base))
}

fn require_acute_base(t: &Triangle, base: SideId) -> Result<()> {
    match t.obtuse_base_vertex(base) {
        Some(vertex) => Err(GeomError::ObtuseBaseAngle { side: base, vertex }),
        None => Ok(()),
    }
}

/// Scans the top-edge height (as a fraction of the apex height) of
/// rectangles standing on `base`.
pub fn brute_force_max_rectangle(t: &Triangle, base: SideId, g: &GridSpec) -> Result<OracleResult> {
    require_acute_base(t, base)?;
    let bounds = g.bound(0)?;
    let (p, q) = t.side_points(base);
    let dir = (q - p).unit();
    let n = t.inward_normal(base);
    let h = apex_height(t, base);
    let rect = |frac: f64| {
        let y = frac * h;
        let (l, r) = cross_section(t, base, y);
        let width = (r - l).dot(dir);
        let foot = |m: Point| m - n * y;
        (width * y, [foot(l), foot(r), r, l])
    };
    let (area, i, _) = (0..g.n)
        .into_par_iter()
        .map(|i| (rect(g.sample(bounds, i)).0, i, 0))
        .reduce_with(pick_max)
        .expect("grid has at least two cells");
    let frac = g.sample(bounds, i);
    let (_, vertices) = rect(frac);
    let witness = PolygonSolution::new(PolygonKind::Rectangle, vertices, base, area).with_param("height_fraction", frac);
    Ok(OracleResult {
        area,
        witness,
        argmax: frac,
    })
}

/// Areas of wedged rectangles on `base` as the far corner `F` slides along
/// the base, one value per grid cell (parameter: `|AF| / b`).
pub fn scan_wedged_rectangles(t: &Triangle, base: SideId, g: &GridSpec) -> Result<Vec<(f64, [Point; 4])>> {
    let vertex = wedge_vertex(t, base).ok_or(GeomError::NotObtuseOnBase(base))?;
    let bounds = g.bound(0)?;
    let far_v = base.other_endpoint(vertex);
    let origin = t.vertex(vertex);
    let far = t.vertex(far_v);
    let third = t.vertex(base.opposite_vertex());
    let along = far - origin;
    let n = t.inward_normal(base);
    Ok((0..g.n)
        .into_par_iter()
        .map(|i| {
            let f = origin + along * g.sample(bounds, i);
            let (w, _) = intersect_lines(f, n, far, third - far).expect("normal is not parallel to far side");
            let area = (f - origin).norm() * w;
            (area, [origin, f, f + n * w, origin + n * w])
        })
        .collect())
}

pub fn brute_force_max_wedged_rectangle(t: &Triangle, base: SideId, g: &GridSpec) -> Result<OracleResult> {
    let scan = scan_wedged_rectangles(t, base, g)?;
    let (area, i, _) = scan
        .iter()
        .enumerate()
        .map(|(i, (a, _))| (*a, i, 0))
        .reduce(pick_max)
        .expect("grid has at least two cells");
    let frac = g.sample(g.bound(0)?, i);
    let vertex = wedge_vertex(t, base).expect("checked by scan");
    let witness = PolygonSolution::new(PolygonKind::WedgedRectangle, scan[i].1, base, area)
        .with_anchor(vertex)
        .with_param("e", (frac - 0.5) * t.side_len(base));
    Ok(OracleResult {
        area,
        witness,
        argmax: frac,
    })
}

/// Side of the square on `base` by bisection: the cross-section width at
/// height `s` must equal `s`. `g.n()` caps the iteration count.
pub fn brute_force_inscribed_square(t: &Triangle, base: SideId, g: &GridSpec) -> Result<f64> {
    require_acute_base(t, base)?;
    let (p, q) = t.side_points(base);
    let dir = (q - p).unit();
    let a = p.distance(q);
    let h = apex_height(t, base);
    let excess = |s: f64| {
        let (l, r) = cross_section(t, base, s);
        (r - l).dot(dir) - s
    };
    let (mut lo, mut hi) = (0.0, h.min(a));
    for _ in 0..g.n {
        if hi - lo <= 1e-15 * a {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if excess(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Bisection on a sign-changing bracket until it is narrower than `tol`.
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
    let (mut flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo * fhi < 0.0) {
        return Err(GeomError::NoBracket { lo, hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Newton iterations from `x0` until the step falls below `tol`.
pub fn newton_polish<F, D>(f: F, df: D, x0: f64, tol: f64, max_iter: usize) -> f64
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut x = x0;
    for _ in 0..max_iter {
        let d = df(x);
        if d == 0.0 {
            break;
        }
        let step = f(x) / d;
        x -= step;
        if step.abs() <= tol {
            break;
        }
    }
    x
}
