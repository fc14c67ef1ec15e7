use serde::{Deserialize, Serialize};
use trimax_core::inscribed::{construct_inscribed_square, max_parallelograms, max_rectangles};
use trimax_core::oracle::{
    brute_force_inscribed_square, brute_force_max_parallelogram, brute_force_max_rectangle,
    brute_force_max_wedged_rectangle, GridSpec,
};
use trimax_core::wedged::{construct_wedged_square, enclosed_square_triple, max_wedged_rectangle, wedge_vertex};
use trimax_core::{Point, PolygonSolution, SideId, SquareTriple, Triangle, TriangleClass};

pub const SCHEMA_VERSION: u32 = 1;

/// Oracle grid used by `report --verify`.
pub const VERIFY_GRID: usize = 400;
/// Relative tolerance for grid oracles at [`VERIFY_GRID`].
pub const VERIFY_GRID_TOL: f64 = 5.0 / VERIFY_GRID as f64;
/// Absolute tolerance for the bisection square oracle.
pub const VERIFY_BISECTION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleEcho {
    pub vertices: Triangle,
    /// `(a, b, c)`.
    pub sides: [f64; 3],
    /// Angles at `(A, B, C)` in degrees.
    pub angles_deg: [f64; 3],
    pub class: TriangleClass,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WedgedSection {
    pub squares: Vec<PolygonSolution>,
    pub rectangles: Vec<PolygonSolution>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub name: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub delta: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub grid_n: usize,
    pub checks: Vec<OracleCheck>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub triangle: TriangleEcho,
    pub parallelograms: Vec<PolygonSolution>,
    pub rectangles: Vec<PolygonSolution>,
    /// Largest enclosed square per side, inscribed or wedged.
    pub squares: SquareTriple,
    pub inscribed_squares: Vec<PolygonSolution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedged: Option<WedgedSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl Report {
    pub fn build(t: &Triangle, verify: bool) -> Report {
        let inscribed_squares = SideId::ALL
            .into_iter()
            .filter(|&s| t.obtuse_base_vertex(s).is_none())
            .map(|s| construct_inscribed_square(t, s).expect("base angles checked"))
            .collect();
        let wedged = t.classify().special_vertex().map(|v| {
            let sides: Vec<SideId> = SideId::ALL.into_iter().filter(|s| s.touches(v)).collect();
            WedgedSection {
                squares: sides
                    .iter()
                    .map(|&s| construct_wedged_square(t, v, s).expect("non-acute vertex"))
                    .collect(),
                rectangles: sides
                    .iter()
                    .map(|&s| max_wedged_rectangle(t, s).expect("non-acute vertex"))
                    .collect(),
            }
        });
        Report {
            schema_version: SCHEMA_VERSION,
            triangle: TriangleEcho {
                vertices: *t,
                sides: t.sides(),
                angles_deg: t.angles().map(f64::to_degrees),
                class: t.classify(),
            },
            parallelograms: max_parallelograms(t).to_vec(),
            rectangles: max_rectangles(t),
            squares: enclosed_square_triple(t),
            inscribed_squares,
            wedged,
            verification: verify.then(|| verify_against_oracles(t)),
        }
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.triangle.vertices.vertices()
    }
}

fn relative_check(name: String, closed_form: f64, oracle: f64, tolerance: f64) -> OracleCheck {
    let delta = (closed_form - oracle).abs() / closed_form.abs();
    OracleCheck {
        name,
        closed_form,
        oracle,
        delta,
        tolerance,
        pass: delta <= tolerance,
    }
}

pub fn verify_against_oracles(t: &Triangle) -> Verification {
    let g1 = GridSpec::unit(VERIFY_GRID, 1).expect("valid grid");
    let g2 = GridSpec::unit(VERIFY_GRID, 2).expect("valid grid");
    let mut checks = Vec::new();

    let para = brute_force_max_parallelogram(t, &g2).expect("two-parameter grid");
    checks.push(relative_check("parallelogram".into(), t.area() / 2.0, para.area, VERIFY_GRID_TOL));

    for r in max_rectangles(t) {
        let o = brute_force_max_rectangle(t, r.base, &g1).expect("admissible base");
        checks.push(relative_check(format!("rectangle[{}]", r.base), r.area, o.area, VERIFY_GRID_TOL));
    }
    for base in SideId::ALL.into_iter().filter(|&s| t.obtuse_base_vertex(s).is_none()) {
        let closed = t.height(base) * t.side_len(base) / (t.height(base) + t.side_len(base));
        let o = brute_force_inscribed_square(t, base, &GridSpec::unit(200, 1).expect("valid grid")).expect("admissible base");
        let delta = (closed - o).abs();
        checks.push(OracleCheck {
            name: format!("inscribed-square[{base}]"),
            closed_form: closed,
            oracle: o,
            delta,
            tolerance: VERIFY_BISECTION_TOL,
            pass: delta <= VERIFY_BISECTION_TOL,
        });
    }
    for base in SideId::ALL {
        if wedge_vertex(t, base).is_none() {
            continue;
        }
        let closed = max_wedged_rectangle(t, base).expect("wedge vertex").area;
        let o = brute_force_max_wedged_rectangle(t, base, &g1).expect("wedge vertex");
        checks.push(relative_check(format!("wedged-rectangle[{base}]"), closed, o.area, VERIFY_GRID_TOL));
    }
    let pass = checks.iter().all(|c| c.pass);
    Verification {
        grid_n: VERIFY_GRID,
        checks,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_75_60_triangle() {
        let t = Triangle::from_angles(75f64.to_radians(), 60f64.to_radians(), 2.0).unwrap();
        let r = Report::build(&t, true);
        let [sa, sb, sc] = r.squares.values().unwrap();
        assert!((sa - 1.060).abs() < 1e-3 && (sb - 1.080).abs() < 1e-3 && (sc - 1.084).abs() < 1e-3);
        assert_eq!(r.parallelograms.len(), 3);
        assert_eq!(r.rectangles.len(), 3);
        assert!(r.wedged.is_none());
        assert!(r.verification.unwrap().pass);
    }

    #[test]
    fn obtuse_report_has_wedged_section() {
        let t = Triangle::from_angles_on_side(SideId::A, 30f64.to_radians(), 40f64.to_radians(), 2.0).unwrap();
        let r = Report::build(&t, true);
        let w = r.wedged.as_ref().unwrap();
        assert_eq!(w.squares.len(), 2);
        assert_eq!(r.inscribed_squares.len(), 1);
        let v = r.verification.unwrap();
        assert!(v.pass);
        assert!(v.checks.iter().any(|c| c.name.starts_with("wedged-rectangle")));
    }

    #[test]
    fn json_round_trip() {
        let t = Triangle::from_angles(50f64.to_radians(), 95f64.to_radians(), 1.3).unwrap();
        let r = Report::build(&t, true);
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(text.contains("\"schema_version\": 1"));
    }
}
