//! Inscribed polygons: every vertex lies on a side of the triangle.

use crate::error::{GeomError, Result};
use crate::geom::{intersect_lines, shoelace_area, Point, SideId, Triangle, TriangleClass, Vertex};
use crate::solution::{PolygonKind, PolygonSolution, SquareKind, SquareTriple};

/// Fraction along the base vertex's adjacent side where the Polya seed sits.
pub const POLYA_SEED_FRACTION: f64 = 0.1;

/// Base side of the anchored parallelogram: the side leaving the anchor in
/// cyclic order `A → B → C`.
fn parallelogram_base(anchor: Vertex) -> SideId {
    match anchor {
        Vertex::A => SideId::C,
        Vertex::B => SideId::A,
        Vertex::C => SideId::B,
    }
}

/// The three maximal inscribed parallelograms, anchored at `A`, `B`, `C` in
/// that order. Each has its other three vertices at side midpoints and area
/// `(ABC)/2`.
pub fn max_parallelograms(t: &Triangle) -> [PolygonSolution; 3] {
    Vertex::ALL.map(|anchor| {
        let base = parallelogram_base(anchor);
        let far = base.other_endpoint(anchor);
        let third = base.opposite_vertex();
        let (v, p, q) = (t.vertex(anchor), t.vertex(far), t.vertex(third));
        let vertices = [v, v.midpoint(p), p.midpoint(q), q.midpoint(v)];
        let h = t.height(base);
        let a = t.side_len(base);
        PolygonSolution::new(PolygonKind::Parallelogram, vertices, base, h * a / 4.0)
            .with_anchor(anchor)
            .with_param("h", h)
            .with_param("a", a)
    })
}

/// The competitor parallelogram `BGHI` anchored at `B` with `G` on `BC`,
/// `H` on `CA` and `I` on `AB`, parametrized by `x = |JE|`.
pub fn competitor_parallelogram(t: &Triangle, x: f64) -> Result<[Point; 4]> {
    let a = t.side_len(SideId::A);
    if !(0.0..=a / 2.0).contains(&x) {
        return Err(GeomError::OutOfRange {
            what: "x",
            value: x,
            range: "[0, a/2]",
        });
    }
    let (pa, pb, pc) = (t.a(), t.b(), t.c());
    let g = pb.lerp(pc, 0.5 - x / a);
    // height fraction of HI above BC is (h/2 + y)/h with y = x·h/a
    let rise = 0.5 + x / a;
    let hh = pc.lerp(pa, rise);
    let i = pb.lerp(pa, rise);
    Ok([pb, g, hh, i])
}

/// `(BDEF) − x·y − (BGHI)`, which vanishes for every admissible `x`.
pub fn parallelogram_identity_residual(t: &Triangle, x: f64) -> Result<f64> {
    let competitor = competitor_parallelogram(t, x)?;
    let a = t.side_len(SideId::A);
    let h = t.height(SideId::A);
    let y = x * h / a;
    let best = &max_parallelograms(t)[Vertex::B as usize];
    Ok(shoelace_area(&best.vertices) - x * y - shoelace_area(&competitor))
}

fn check_base_angles(t: &Triangle, base: SideId) -> Result<()> {
    match t.obtuse_base_vertex(base) {
        Some(vertex) => Err(GeomError::ObtuseBaseAngle { side: base, vertex }),
        None => Ok(()),
    }
}

/// Midpoint rectangle standing on `base`; the top edge joins the midpoints
/// of the other two sides.
fn midpoint_rectangle(t: &Triangle, base: SideId) -> PolygonSolution {
    let (p, q) = t.side_points(base);
    let apex = t.vertex(base.opposite_vertex());
    let (mp, mq) = (p.midpoint(apex), q.midpoint(apex));
    let dir = (q - p).unit();
    let foot = |m: Point| p + dir * (m - p).dot(dir);
    let h = t.height(base);
    let a = t.side_len(base);
    PolygonSolution::new(PolygonKind::Rectangle, [foot(mp), foot(mq), mq, mp], base, h * a / 4.0)
        .with_param("h", h)
        .with_param("a", a)
}

/// Maximal inscribed rectangles: three for acute, two for right (the two
/// legs give one polygon, reported once with `coincident_base` set) and one
/// for obtuse triangles.
pub fn max_rectangles(t: &Triangle) -> Vec<PolygonSolution> {
    let class = t.classify();
    let right_vertex = match class {
        TriangleClass::Right(v) => Some(v),
        _ => None,
    };
    let mut out: Vec<PolygonSolution> = Vec::with_capacity(3);
    for base in SideId::ALL {
        if t.obtuse_base_vertex(base).is_some() {
            continue;
        }
        if let Some(rv) = right_vertex {
            if base.touches(rv) {
                if let Some(first) = out.iter_mut().find(|s| s.base.touches(rv)) {
                    first.coincident_base = Some(base);
                    continue;
                }
            }
        }
        out.push(midpoint_rectangle(t, base));
    }
    out
}

/// Side of the square inscribed on a base of length `a` with height `h`.
pub fn inscribed_square_side(h: f64, a: f64) -> Result<f64> {
    positive("h", h)?;
    positive("a", a)?;
    Ok(h * a / (h + a))
}

pub(crate) fn positive(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(GeomError::NonPositiveInput { what, value })
    }
}

/// Intermediate objects of the Polya construction on one base side.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyaConstruction {
    /// Base vertex the dilation is centred on.
    pub center: Point,
    /// Seed square `D, E, F, G` (E, F on the base, D on the adjacent side).
    pub seed: [Point; 4],
    /// Where the ray from the centre through `G` meets the far side.
    pub ray_hit: Point,
    pub ratio: f64,
    pub square: PolygonSolution,
}

/// Polya's construction: seed a small square against the base vertex, shoot
/// a ray from the vertex through its outer top corner, then dilate.
pub fn polya_construction(t: &Triangle, base: SideId) -> Result<PolyaConstruction> {
    check_base_angles(t, base)?;
    let (pv, qv) = base.endpoints();
    let apex_v = base.opposite_vertex();
    let (p, q, apex) = (t.vertex(pv), t.vertex(qv), t.vertex(apex_v));
    let u = (q - p).unit();
    let n = t.inward_normal(base);

    let d = p.lerp(apex, POLYA_SEED_FRACTION);
    let e = p + u * (d - p).dot(u);
    let seed_side = (d - e).dot(n);
    let f = e + u * seed_side;
    let g = f + n * seed_side;

    // far side runs from q to the apex
    let (k, _) = intersect_lines(p, g - p, q, apex - q).expect("ray through seed corner is not parallel to far side");
    let ray_hit = p + (g - p) * k;
    let dilate = |pt: Point| p + (pt - p) * k;
    let vertices = [dilate(e), dilate(f), ray_hit, dilate(d)];

    let side = seed_side * k;
    let h = t.height(base);
    let a = t.side_len(base);
    let square = PolygonSolution::new(PolygonKind::Square, vertices, base, side * side)
        .with_param("s", side)
        .with_param("h", h)
        .with_param("a", a);
    Ok(PolyaConstruction {
        center: p,
        seed: [d, e, f, g],
        ray_hit,
        ratio: k,
        square,
    })
}

/// Inscribed square on `base` built by the Polya dilation.
pub fn construct_inscribed_square(t: &Triangle, base: SideId) -> Result<PolygonSolution> {
    polya_construction(t, base).map(|c| c.square)
}

/// `ha/4 − (ha/(h+a))²`: how much the max rectangle beats the square.
pub fn square_vs_rectangle_gap(h: f64, a: f64) -> Result<f64> {
    let s = inscribed_square_side(h, a)?;
    Ok(h * a / 4.0 - s * s)
}

/// Inscribed square sides on all three bases of an acute triangle.
pub fn inscribed_square_triple(t: &Triangle) -> Result<SquareTriple> {
    if t.classify() != TriangleClass::Acute {
        return Err(GeomError::NotAcute);
    }
    Ok(admissible_inscribed_squares(t))
}

/// Inscribed square sides on every base without an obtuse base angle;
/// the remaining entries are `None`.
pub fn admissible_inscribed_squares(t: &Triangle) -> SquareTriple {
    let mut sides = [None; 3];
    let mut kinds = [SquareKind::None; 3];
    for base in SideId::ALL {
        if t.obtuse_base_vertex(base).is_none() {
            sides[base as usize] = Some(t.height(base) * t.side_len(base) / (t.height(base) + t.side_len(base)));
            kinds[base as usize] = SquareKind::Inscribed;
        }
    }
    SquareTriple { sides, kinds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn triangle_75_60() -> Triangle {
        Triangle::from_angles(75f64.to_radians(), 60f64.to_radians(), 2.0).unwrap()
    }

    fn equilateral(side: f64) -> Triangle {
        Triangle::from_angles(60f64.to_radians(), 60f64.to_radians(), side).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn parallelograms_equal_half_area() {
        let t = triangle_75_60();
        let sols = max_parallelograms(&t);
        let expect = 3f64.sqrt() * (1.0 + 3f64.sqrt()) / 4.0;
        for (s, anchor) in sols.iter().zip(Vertex::ALL) {
            assert_eq!(s.anchor, Some(anchor));
            assert!(rel(s.area, expect) < 1e-12);
            assert!(rel(s.shoelace_area(), s.area) < 1e-9);
            assert!(s.has_shape(t.geom_eps()));
            assert_eq!(s.vertices[0], t.vertex(anchor));
        }
    }

    #[test]
    fn parallelogram_area_ha_over_4() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(0.7, 2.0)).unwrap();
        for s in max_parallelograms(&t) {
            assert!((s.area - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_residual_vanishes() {
        let t = triangle_75_60();
        let a = t.side_len(SideId::A);
        let area = t.area();
        assert_eq!(parallelogram_identity_residual(&t, 0.0).unwrap().abs() < 1e-12 * area, true);
        for x in [a / 4.0, a / 2.0, 0.123] {
            assert!(parallelogram_identity_residual(&t, x).unwrap().abs() < 1e-9 * area, "x = {x}");
        }
        let degenerate = competitor_parallelogram(&t, a / 2.0).unwrap();
        assert!(shoelace_area(&degenerate) < 1e-12);
        assert!(matches!(parallelogram_identity_residual(&t, -0.1), Err(GeomError::OutOfRange { .. })));
        assert!(matches!(parallelogram_identity_residual(&t, a), Err(GeomError::OutOfRange { .. })));
    }

    #[test]
    fn competitor_vertices_on_sides() {
        let t = triangle_75_60();
        let [b, g, h, i] = competitor_parallelogram(&t, 0.3).unwrap();
        let eps = t.geom_eps();
        assert_eq!(b, t.b());
        assert!(t.distance_to_side(g, SideId::A) < eps);
        assert!(t.distance_to_side(h, SideId::B) < eps);
        assert!(t.distance_to_side(i, SideId::C) < eps);
    }

    #[test]
    fn rectangle_counts() {
        let acute = triangle_75_60();
        let r = max_rectangles(&acute);
        assert_eq!(r.len(), 3);
        for s in &r {
            let h = acute.height(s.base);
            assert!(rel(s.area, h * acute.side_len(s.base) / 4.0) < 1e-12);
            assert!(rel(s.shoelace_area(), s.area) < 1e-9);
            assert!(s.has_shape(acute.geom_eps()));
        }

        let right = Triangle::from_angles(45f64.to_radians(), 45f64.to_radians(), 1.0).unwrap();
        let r = max_rectangles(&right);
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].base, SideId::A);
        assert_eq!(r[0].coincident_base, Some(SideId::B));
        assert_eq!(r[1].base, SideId::C);
        assert_eq!(r[1].coincident_base, None);

        let obtuse = Triangle::from_angles_on_side(SideId::A, 39.13f64.to_radians(), 39.13f64.to_radians(), 1.55).unwrap();
        let r = max_rectangles(&obtuse);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].base, SideId::A);
    }

    #[test]
    fn right_leg_rectangles_really_coincide() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(0.0, 3.0)).unwrap();
        let on_b = midpoint_rectangle(&t, SideId::B);
        let on_c = midpoint_rectangle(&t, SideId::C);
        let mut vb: Vec<_> = on_b.vertices.iter().map(|p| (p.x, p.y)).collect();
        let mut vc: Vec<_> = on_c.vertices.iter().map(|p| (p.x, p.y)).collect();
        vb.sort_by(|l, r| l.partial_cmp(r).unwrap());
        vc.sort_by(|l, r| l.partial_cmp(r).unwrap());
        for (p, q) in vb.iter().zip(&vc) {
            assert!((p.0 - q.0).abs() < 1e-12 && (p.1 - q.1).abs() < 1e-12);
        }
    }

    #[test]
    fn square_side_formula() {
        let s = inscribed_square_side(3f64.sqrt(), 1.0 + 3f64.sqrt()).unwrap();
        assert!((s - 1.060).abs() < 1e-3);
        assert_eq!(inscribed_square_side(5.0, 5.0).unwrap(), 2.5);
        assert!((inscribed_square_side(2.37, 2.0).unwrap() - 1.084).abs() < 1e-3);
        assert!(matches!(inscribed_square_side(0.0, 1.0), Err(GeomError::NonPositiveInput { .. })));
        assert!(matches!(inscribed_square_side(1.0, -2.0), Err(GeomError::NonPositiveInput { .. })));
        let (h, a) = (1.7, 0.6);
        let s = inscribed_square_side(h, a).unwrap();
        assert!((s / a - (h - s) / h).abs() < 1e-15);
    }

    #[test]
    fn polya_square_on_equilateral() {
        let t = equilateral(1.0);
        let sq = construct_inscribed_square(&t, SideId::A).unwrap();
        let expect = 2.0 * 3f64.sqrt() - 3.0;
        let s = sq.param("s").unwrap();
        assert!(rel(s, expect) < 1e-9);
        for e in sq.edge_lengths() {
            assert!(rel(e, expect) < 1e-9);
        }
        let eps = t.geom_eps();
        assert!(sq.has_shape(eps));
        assert!(sq.inside(&t, eps));
        for p in sq.vertices {
            assert!(t.distance_to_boundary(p) < eps);
        }
    }

    #[test]
    fn polya_square_every_base_of_75_60_triangle() {
        let t = triangle_75_60();
        let eps = t.geom_eps();
        for base in SideId::ALL {
            let c = polya_construction(&t, base).unwrap();
            let sq = &c.square;
            let expect = inscribed_square_side(t.height(base), t.side_len(base)).unwrap();
            assert!(rel(sq.param("s").unwrap(), expect) < 1e-9, "base {base}");
            let [e, f, h, d] = sq.vertices;
            assert!(t.distance_to_side(e, base) < eps);
            assert!(t.distance_to_side(f, base) < eps);
            let (pv, qv) = base.endpoints();
            let far = SideId::ALL.iter().copied().find(|s| *s != base && s.touches(qv)).unwrap();
            let near = SideId::ALL.iter().copied().find(|s| *s != base && s.touches(pv)).unwrap();
            assert!(t.distance_to_side(h, far) < eps);
            assert!(t.distance_to_side(d, near) < eps);
            assert!(sq.has_shape(eps) && sq.inside(&t, eps));
            assert!(c.ratio > 1.0);
        }
        let sa = construct_inscribed_square(&t, SideId::A).unwrap();
        assert!((sa.param("s").unwrap() - 1.060).abs() < 1e-3);
    }

    #[test]
    fn polya_on_right_base_angle() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(0.0, 3.0)).unwrap();
        // side c = AB has the right angle at A
        let sq = construct_inscribed_square(&t, SideId::C).unwrap();
        assert!(rel(sq.param("s").unwrap(), 12.0 / 7.0) < 1e-9);
        assert!(sq.has_shape(t.geom_eps()));
    }

    #[test]
    fn polya_rejects_obtuse_base_angle() {
        let t = Triangle::from_angles(110f64.to_radians(), 30f64.to_radians(), 1.0).unwrap();
        assert_eq!(
            construct_inscribed_square(&t, SideId::C),
            Err(GeomError::ObtuseBaseAngle { side: SideId::C, vertex: Vertex::A })
        );
        assert!(construct_inscribed_square(&t, SideId::A).is_ok());
    }

    #[test]
    fn gap_values() {
        assert_eq!(square_vs_rectangle_gap(3.0, 3.0).unwrap(), 0.0);
        assert!((square_vs_rectangle_gap(1.0, 4.0).unwrap() - 0.36).abs() < 1e-15);
        let (h, a) = (3f64.sqrt(), 1.0 + 3f64.sqrt());
        let direct = h * a / 4.0 - (h * a / (h + a)).powi(2);
        let g = square_vs_rectangle_gap(h, a).unwrap();
        assert!((g - direct).abs() < 1e-15);
        assert!((g - 0.059).abs() < 1e-3);
    }

    #[test]
    fn triangle_75_60_square_triple() {
        let st = inscribed_square_triple(&triangle_75_60()).unwrap();
        let [sa, sb, sc] = st.values().unwrap();
        assert!((sa - 1.060).abs() < 1e-3);
        assert!((sb - 1.080).abs() < 1e-3);
        assert!((sc - 1.084).abs() < 1e-3);
        assert!(sa < sb && sb < sc);
        assert_eq!(st.kinds, [SquareKind::Inscribed; 3]);

        let eq = inscribed_square_triple(&equilateral(2.0)).unwrap().values().unwrap();
        assert!((eq[0] - eq[1]).abs() < 1e-12 && (eq[1] - eq[2]).abs() < 1e-12);

        let right = Triangle::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(0.0, 3.0)).unwrap();
        assert_eq!(inscribed_square_triple(&right), Err(GeomError::NotAcute));
    }

    #[test]
    fn admissible_squares_skip_obtuse_bases() {
        let t = Triangle::from_angles(110f64.to_radians(), 30f64.to_radians(), 1.0).unwrap();
        let st = admissible_inscribed_squares(&t);
        assert!(st.get(SideId::A).is_some());
        assert_eq!(st.get(SideId::B), None);
        assert_eq!(st.kind(SideId::C), SquareKind::None);
    }
}
