//! Wedged squares and rectangles: pinned at a non-acute vertex with one side
//! along an adjacent triangle side, used where inscription is impossible.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{intersect_lines, Point, SideId, Triangle, Vertex, ANGLE_EPS};
use crate::inscribed::{max_rectangles, positive};
use crate::solution::{PolygonKind, PolygonSolution, SquareKind, SquareTriple};

fn check_theta(theta: f64) -> Result<f64> {
    if theta.is_finite() && theta > 0.0 && theta < FRAC_PI_2 {
        Ok(theta)
    } else {
        Err(GeomError::OutOfRange {
            what: "θ",
            value: theta,
            range: "(0, π/2)",
        })
    }
}

/// `b·sinθ / (sinθ + cosθ)`.
pub fn wedged_square_side(b: f64, theta: f64) -> Result<f64> {
    positive("b", b)?;
    check_theta(theta)?;
    let (sin, cos) = theta.sin_cos();
    Ok(b * sin / (sin + cos))
}

/// `(b/2 + e)(b/2 − e)·tanθ`; `e` is signed.
pub fn wedged_rectangle_area(b: f64, theta: f64, e: f64) -> Result<f64> {
    positive("b", b)?;
    check_theta(theta)?;
    if !(e.abs() <= b / 2.0) {
        return Err(GeomError::OutOfRange {
            what: "e",
            value: e,
            range: "[-b/2, b/2]",
        });
    }
    Ok((b / 2.0 + e) * (b / 2.0 - e) * theta.tan())
}

/// `(b²/4)·tanθ − s_b²`, evaluated as `b²·sinθ·(sinθ − cosθ)² / (4·cosθ·(sinθ + cosθ)²)`
/// so the sign survives rounding at θ = 45°.
pub fn wedged_rect_vs_square_gap(b: f64, theta: f64) -> Result<f64> {
    positive("b", b)?;
    check_theta(theta)?;
    let (sin, cos) = theta.sin_cos();
    let (diff, sum) = (sin - cos, sin + cos);
    Ok(b * b * sin * diff * diff / (4.0 * cos * sum * sum))
}

fn is_wedge_vertex(t: &Triangle, v: Vertex) -> bool {
    t.angle_at(v) >= FRAC_PI_2 - ANGLE_EPS
}

/// The non-acute endpoint of `base`, if any.
pub fn wedge_vertex(t: &Triangle, base: SideId) -> Option<Vertex> {
    let (p, q) = base.endpoints();
    [p, q].into_iter().find(|&v| is_wedge_vertex(t, v))
}

struct WedgeFrame {
    origin: Point,
    along: Point,
    normal: Point,
    len: f64,
    theta: f64,
    /// The side opposite the wedge vertex, as (start, direction).
    far: (Point, Point),
}

fn frame(t: &Triangle, vertex: Vertex, base: SideId) -> WedgeFrame {
    let far_v = base.other_endpoint(vertex);
    let third = base.opposite_vertex();
    let origin = t.vertex(vertex);
    let w = t.vertex(far_v);
    WedgeFrame {
        origin,
        along: (w - origin).unit(),
        normal: t.inward_normal(base),
        len: t.side_len(base),
        theta: t.angle_at(far_v),
        far: (w, t.vertex(third) - w),
    }
}

/// Wedged square at `vertex` on `base`, found by the 45° ray from the vertex:
/// its hit on the opposite side is the square's diagonal corner.
pub fn construct_wedged_square(t: &Triangle, vertex: Vertex, base: SideId) -> Result<PolygonSolution> {
    if !base.touches(vertex) {
        return Err(GeomError::BaseNotAdjacent { side: base, vertex });
    }
    if !is_wedge_vertex(t, vertex) {
        return Err(GeomError::NotObtuseAtVertex(vertex));
    }
    let f = frame(t, vertex, base);
    let ray = f.along + f.normal;
    let (k, _) = intersect_lines(f.origin, ray, f.far.0, f.far.1).expect("45° ray is not parallel to the opposite side");
    let diag = f.origin + ray * k;
    let side = diag.distance(f.origin) / std::f64::consts::SQRT_2;
    let vertices = [f.origin, f.origin + f.along * side, diag, f.origin + f.normal * side];
    Ok(PolygonSolution::new(PolygonKind::WedgedSquare, vertices, base, side * side)
        .with_anchor(vertex)
        .with_param("s", side)
        .with_param("b", f.len)
        .with_param("theta", f.theta))
}

/// Max wedged rectangle on `base`: pinned at the non-acute endpoint, with
/// its far corner on the base midpoint and its top corner on the opposite side.
pub fn max_wedged_rectangle(t: &Triangle, base: SideId) -> Result<PolygonSolution> {
    let vertex = wedge_vertex(t, base).ok_or(GeomError::NotObtuseOnBase(base))?;
    let f = frame(t, vertex, base);
    let mid = f.origin + f.along * (f.len / 2.0);
    let (k, _) = intersect_lines(mid, f.normal, f.far.0, f.far.1).expect("base normal is not parallel to the opposite side");
    let width = k;
    let vertices = [f.origin, mid, mid + f.normal * width, f.origin + f.normal * width];
    Ok(PolygonSolution::new(PolygonKind::WedgedRectangle, vertices, base, f.len / 2.0 * width)
        .with_anchor(vertex)
        .with_param("b", f.len)
        .with_param("theta", f.theta)
        .with_param("e", 0.0))
}

/// Max-area chain on an obtuse triangle at `A` with `a ≥ b ≥ c`: the
/// midpoint rectangle on `a`, then the wedged rectangles on `b` and `c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WedgedOrdering {
    pub on_a: PolygonSolution,
    pub on_b: PolygonSolution,
    pub on_c: PolygonSolution,
    pub chain_holds: bool,
}

impl WedgedOrdering {
    pub fn areas(&self) -> [f64; 3] {
        [self.on_a.area, self.on_b.area, self.on_c.area]
    }
}

pub fn wedged_ordering_check(t: &Triangle) -> Result<WedgedOrdering> {
    if !t.is_obtuse_at(Vertex::A) {
        return Err(GeomError::NotObtuse);
    }
    let [a, b, c] = t.sides();
    let tol = 1e-12 * a;
    if b > a + tol || c > b + tol {
        return Err(GeomError::SidesNotSorted);
    }
    let on_a = max_rectangles(t)
        .into_iter()
        .find(|r| r.base == SideId::A)
        .expect("side a has two acute base angles");
    let on_b = max_wedged_rectangle(t, SideId::B)?;
    let on_c = max_wedged_rectangle(t, SideId::C)?;
    let slack = 1e-12 * on_a.area;
    let chain_holds = on_a.area + slack >= on_b.area && on_b.area + slack >= on_c.area;
    Ok(WedgedOrdering {
        on_a,
        on_b,
        on_c,
        chain_holds,
    })
}

/// Largest enclosed square per base: inscribed when neither base angle is
/// obtuse, otherwise wedged at the obtuse endpoint.
pub fn enclosed_square_triple(t: &Triangle) -> SquareTriple {
    let mut sides = [None; 3];
    let mut kinds = [SquareKind::None; 3];
    for base in SideId::ALL {
        let len = t.side_len(base);
        let (s, kind) = match t.obtuse_base_vertex(base) {
            None => {
                let h = t.height(base);
                (h * len / (h + len), SquareKind::Inscribed)
            }
            Some(v) => {
                let theta = t.angle_at(base.other_endpoint(v));
                let (sin, cos) = theta.sin_cos();
                (len * sin / (sin + cos), SquareKind::Wedged)
            }
        };
        sides[base as usize] = Some(s);
        kinds[base as usize] = kind;
    }
    SquareTriple { sides, kinds }
}
