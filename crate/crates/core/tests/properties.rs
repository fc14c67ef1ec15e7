//! Property tests for the geometric invariants of every solver.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use proptest::prelude::*;
use trimax_core::calabi::{
    calabi_cubic, calabi_quartic, classify_apex, equality_curve_ab, polar_curve_point, ApexPoint,
};
use trimax_core::inscribed::{
    construct_inscribed_square, inscribed_square_side, inscribed_square_triple, max_rectangles,
    parallelogram_identity_residual, square_vs_rectangle_gap,
};
use trimax_core::wedged::{
    construct_wedged_square, enclosed_square_triple, wedged_ordering_check, wedged_rect_vs_square_gap,
    wedged_square_side,
};
use trimax_core::{Point, SideId, Triangle, TriangleClass, Vertex};

fn coord() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

/// Triangles whose smallest angle is at least one degree.
fn triangle() -> impl Strategy<Value = Triangle> {
    (coord(), coord(), coord(), coord(), coord(), coord())
        .prop_filter_map("sliver or degenerate", |(ax, ay, bx, by, cx, cy)| {
            let t = Triangle::new(Point::new(ax, ay), Point::new(bx, by), Point::new(cx, cy)).ok()?;
            let min = t.angles().into_iter().fold(f64::INFINITY, f64::min);
            (min > 1f64.to_radians()).then_some(t)
        })
}

/// Obtuse at `A` with `b > c`: A = (x, y) above the base BC = [(-1,0), (1,0)].
fn obtuse_sorted() -> impl Strategy<Value = Triangle> {
    (0.05..0.95f64, 0.05..1.0f64).prop_filter_map("not in the half disk", |(r, phi)| {
        let x = -r * phi.cos() * 0.98;
        let y = r * phi.sin();
        let t = Triangle::new(Point::new(x, y), Point::new(-1.0, 0.0), Point::new(1.0, 0.0)).ok()?;
        let [_, b, c] = t.sides();
        (t.is_obtuse_at(Vertex::A) && b > c * (1.0 + 1e-9)).then_some(t)
    })
}

fn rigid(p: Point, angle: f64, shift: Point, scale: f64) -> Point {
    let (s, c) = angle.sin_cos();
    Point::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + shift
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn side_times_height_is_twice_area(t in triangle()) {
        let twice = 2.0 * t.area();
        for s in SideId::ALL {
            prop_assert!((t.side_len(s) * t.height(s) - twice).abs() <= 1e-9 * twice);
        }
    }

    #[test]
    fn angles_sum_to_pi(t in triangle()) {
        let sum: f64 = t.angles().iter().sum();
        prop_assert!((sum - PI).abs() < 1e-9);
    }

    #[test]
    fn classify_survives_rigid_motion(t in triangle(), angle in 0.0..6.28f64, dx in coord(), dy in coord(), scale in 0.01..100.0f64) {
        let shift = Point::new(dx, dy);
        let moved = Triangle::new(
            rigid(t.a(), angle, shift, scale),
            rigid(t.b(), angle, shift, scale),
            rigid(t.c(), angle, shift, scale),
        ).unwrap();
        // exclude near-right inputs where the transform's rounding can flip the tie
        let largest = t.angles().into_iter().fold(0.0, f64::max);
        prop_assume!((largest - FRAC_PI_2).abs() > 1e-7);
        prop_assert_eq!(moved.classify(), t.classify());
    }

    #[test]
    fn from_angles_round_trips(alpha in 0.01..2.0f64, frac in 0.01..0.99f64, len in 0.1..10.0f64) {
        let beta = (PI - alpha) * frac;
        let t = Triangle::from_angles(alpha, beta, len).unwrap();
        prop_assert!((t.angle_at(Vertex::A) - alpha).abs() < 1e-9);
        prop_assert!((t.angle_at(Vertex::B) - beta).abs() < 1e-9);
    }

    #[test]
    fn gap_forms_agree(h in 0.01..100.0f64, a in 0.01..100.0f64) {
        let g = square_vs_rectangle_gap(h, a).unwrap();
        let factored = h * a * (h - a).powi(2) / (4.0 * (h + a).powi(2));
        prop_assert!((g - factored).abs() <= 1e-12 * (h * a / 4.0));
        prop_assert!(g >= -1e-15 * h * a);
    }

    #[test]
    fn square_solves_similarity(h in 0.01..100.0f64, a in 0.01..100.0f64) {
        let s = inscribed_square_side(h, a).unwrap();
        prop_assert!((s / a - (h - s) / h).abs() < 1e-12);
    }

    #[test]
    fn polya_square_fits(t in triangle()) {
        let eps = t.geom_eps();
        for base in SideId::ALL.into_iter().filter(|&s| t.obtuse_base_vertex(s).is_none()) {
            let sq = construct_inscribed_square(&t, base).unwrap();
            let expect = inscribed_square_side(t.height(base), t.side_len(base)).unwrap();
            let ratio = sq.param("s").unwrap() / expect;
            prop_assert!((ratio - 1.0).abs() <= 1e-9);
            prop_assert!(sq.has_shape(eps));
            for p in sq.vertices {
                prop_assert!(t.distance_to_boundary(p) < eps);
                prop_assert!(t.contains(p, eps));
            }
        }
    }

    #[test]
    fn identity_residual(t in triangle(), frac in 0.0..=1.0f64) {
        let x = frac * t.side_len(SideId::A) / 2.0;
        let r = parallelogram_identity_residual(&t, x).unwrap();
        prop_assert!(r.abs() < 1e-9 * t.area());
    }

    #[test]
    fn rectangle_counts_follow_class(t in triangle()) {
        let n = max_rectangles(&t).len();
        let expect = match t.classify() {
            TriangleClass::Acute => 3,
            TriangleClass::Right(_) => 2,
            TriangleClass::Obtuse(_) => 1,
        };
        prop_assert_eq!(n, expect);
    }

    #[test]
    fn wedged_square_solves_tangent(b in 0.01..100.0f64, theta in 0.01..1.56f64) {
        let s = wedged_square_side(b, theta).unwrap();
        prop_assert!((s / (b - s) - theta.tan()).abs() <= 1e-12 * theta.tan().max(1.0));
    }

    #[test]
    fn wedged_gap_nonnegative(b in 0.01..10.0f64, theta in 0.01..1.56f64) {
        let gap = wedged_rect_vs_square_gap(b, theta).unwrap();
        prop_assert!(gap >= 0.0);
        let s = wedged_square_side(b, theta).unwrap();
        let direct = b * b / 4.0 * theta.tan() - s * s;
        prop_assert!((gap - direct).abs() <= 1e-12 * b * b * theta.tan().max(1.0));
    }

    #[test]
    fn wedged_square_geometry(t in obtuse_sorted()) {
        let eps = t.geom_eps();
        for base in [SideId::B, SideId::C] {
            let sq = construct_wedged_square(&t, Vertex::A, base).unwrap();
            prop_assert!(sq.has_shape(eps));
            prop_assert!(t.distance_to_side(sq.vertices[2], SideId::A) < eps);
            let theta = t.angle_at(base.other_endpoint(Vertex::A));
            let expect = wedged_square_side(t.side_len(base), theta).unwrap();
            prop_assert!((sq.param("s").unwrap() / expect - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn wedged_chain(t in obtuse_sorted()) {
        let o = wedged_ordering_check(&t).unwrap();
        let [x, y, z] = o.areas();
        prop_assert!(o.chain_holds);
        prop_assert!(x >= y && y >= z);
    }

    #[test]
    fn enclosed_triple_matches_inscribed_on_acute(t in triangle()) {
        prop_assume!(t.classify() == TriangleClass::Acute);
        prop_assert_eq!(enclosed_square_triple(&t), inscribed_square_triple(&t).unwrap());
    }

    #[test]
    fn factor_identity(a in -3.0..3.0f64) {
        let q = calabi_quartic(a);
        prop_assert!((q - (a - 2.0) * calabi_cubic(a)).abs() <= 1e-10 * q.abs().max(1.0));
    }

    #[test]
    fn polar_points_on_cubic(mu in FRAC_PI_2..PI) {
        prop_assert!(equality_curve_ab(polar_curve_point(mu).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn reflection_swaps_roles(r in 0.05..0.999f64, phi in 0.02..1.55f64) {
        // points in the left half of the domain, then mirrored
        let p = Point::new(-1.0 + r * phi.cos() * 0.5, r * phi.sin() * 0.85);
        let Ok(apex) = ApexPoint::new(p) else { return Ok(()); };
        let l = classify_apex(apex).unwrap();
        let m = classify_apex(apex.reflected()).unwrap();
        prop_assert_eq!(m.ab, l.ac);
        prop_assert_eq!(m.ac, l.ab);
        prop_assert_eq!(m.bc, l.bc.reversed());
        prop_assert!(l.is_consistent());
    }
}

#[test]
fn acute_scalene_squares_increase() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 1000 {
        let alpha: f64 = rng.gen_range(1.0..89.9);
        let beta: f64 = rng.gen_range(1.0..89.9);
        let gamma = 180.0 - alpha - beta;
        if !(gamma > 0.5 && gamma < 89.9 && alpha > beta * 1.001 && beta > gamma * 1.001) {
            continue;
        }
        let t = Triangle::from_angles(alpha.to_radians(), beta.to_radians(), 1.0).unwrap();
        let [a, b, c] = t.sides();
        assert!(a > b && b > c);
        let [sa, sb, sc] = inscribed_square_triple(&t).unwrap().values().unwrap();
        assert!(sa < sb && sb < sc, "{alpha} {beta}: {sa} {sb} {sc}");
        let [ha, hb, hc] = SideId::ALL.map(|s| t.height(s));
        assert!(a + ha > b + hb && b + hb > c + hc);
        checked += 1;
    }
}

#[test]
fn wedged_gap_zero_only_at_quarter_turn() {
    let n = 10_000;
    for i in 0..=n {
        let theta = 0.01 + (FRAC_PI_2 - 0.02) * i as f64 / n as f64;
        let g = wedged_rect_vs_square_gap(1.0, theta).unwrap();
        if (theta - FRAC_PI_4).abs() > 1e-3 {
            assert!(g > 0.0, "θ = {theta}");
        }
    }
    assert!(wedged_rect_vs_square_gap(1.0, FRAC_PI_4).unwrap().abs() < 1e-15);
}
