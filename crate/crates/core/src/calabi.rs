//! The equal-squares (Calabi) triangle and the size-ordering of enclosed
//! squares over the normalized apex domain `C = (0, 0)`, `B = (−1, 0)`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{Point, SideId, Triangle, TriangleClass, Vertex};
use crate::oracle::{find_root, newton_polish};
use crate::wedged::enclosed_square_triple;

/// Sign of an equality-curve value on the side where the second square of
/// the pair (`s_b` for [`equality_curve_ab`], `s_c` for
/// [`equality_curve_ac`]) is the larger one.
pub const SECOND_LARGER_SIGN: f64 = 1.0;

/// Relative tolerance for calling two square sides equal.
pub const CMP_REL_EPS: f64 = 1e-9;

pub fn calabi_quartic(a: f64) -> f64 {
    (((2.0 * a - 6.0) * a + 1.0) * a + 8.0) * a - 4.0
}

pub fn calabi_cubic(a: f64) -> f64 {
    ((2.0 * a - 2.0) * a - 3.0) * a + 2.0
}

fn calabi_cubic_slope(a: f64) -> f64 {
    (6.0 * a - 4.0) * a - 3.0
}

/// The equal-squares isosceles triangle with unit legs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalabiSolution {
    /// Base over leg, the longest-to-shortest side ratio.
    pub ratio: f64,
    /// Base angle, radians.
    pub theta: f64,
    /// Apex angle, radians.
    pub apex_angle: f64,
    pub h_a: f64,
    /// Common side of the three enclosed squares.
    pub s: f64,
}

impl CalabiSolution {
    /// The same square computed as a wedged square on a leg.
    pub fn s_wedged(&self) -> f64 {
        let (sin, cos) = self.theta.sin_cos();
        sin / (sin + cos)
    }

    pub fn cubic_residual(&self) -> f64 {
        calabi_cubic(self.ratio)
    }

    /// Apex in the normalized frame where the base has unit length.
    pub fn normalized_apex(&self) -> Point {
        Point::new(-0.5, self.h_a / self.ratio)
    }

    /// Calabi triangle with legs of length `leg`, apex `A` on top.
    pub fn triangle(&self, leg: f64) -> Result<Triangle> {
        Triangle::from_angles_on_side(SideId::A, self.theta, self.theta, leg * self.ratio)
    }
}

/// Largest root of `2a³ − 2a² − 3a + 2`: bisection on `[1.5, 1.6]` to 1e-6,
/// then Newton to 1e-14.
pub fn solve_calabi() -> CalabiSolution {
    let rough = find_root(calabi_cubic, 1.5, 1.6, 1e-6).expect("cubic changes sign on [1.5, 1.6]");
    let ratio = newton_polish(calabi_cubic, calabi_cubic_slope, rough, 1e-14, 50);
    let theta = (ratio / 2.0).acos();
    let h_a = (1.0 - ratio * ratio / 4.0).sqrt();
    CalabiSolution {
        ratio,
        theta,
        apex_angle: PI - 2.0 * theta,
        h_a,
        s: ratio * h_a / (ratio + h_a),
    }
}

/// `y³ + x²y + 2x² + 2y² + 2x`; vanishes where `s_a = s_b`.
pub fn equality_curve_ab(p: Point) -> f64 {
    let Point { x, y } = p;
    y * y * y + x * x * y + 2.0 * x * x + 2.0 * y * y + 2.0 * x
}

/// Mirror of [`equality_curve_ab`] about `x = −1/2`; vanishes where `s_a = s_c`.
pub fn equality_curve_ac(p: Point) -> f64 {
    let Point { x, y } = p;
    let u = x + 1.0;
    y * y * y + u * u * y + 2.0 * u * u + 2.0 * y * y - 2.0 * u
}

/// `r = 1 − cot(μ/2)` about `C`, for `μ ∈ [π/2, π]`.
pub fn polar_curve_r(mu: f64) -> Result<f64> {
    if !(FRAC_PI_2..=PI).contains(&mu) {
        return Err(GeomError::OutOfRange {
            what: "μ",
            value: mu,
            range: "[π/2, π]",
        });
    }
    Ok(1.0 - 1.0 / (mu / 2.0).tan())
}

/// Rectangular point of the polar curve at `μ`.
pub fn polar_curve_point(mu: f64) -> Result<Point> {
    let r = polar_curve_r(mu)?;
    Ok(Point::new(r * mu.cos(), r * mu.sin()))
}

/// Candidate apex in the normalized frame, inside both unit circles about
/// `C` and `B` (so `a = 1` is the longest side) and above the base.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApexPoint(Point);

/// `B` in the normalized frame.
pub const FRAME_B: Point = Point::new(-1.0, 0.0);
/// `C` in the normalized frame.
pub const FRAME_C: Point = Point::new(0.0, 0.0);
/// Centre of the right-angle semicircle.
pub const FRAME_D: Point = Point::new(-0.5, 0.0);

const DOMAIN_EPS: f64 = 1e-12;

impl ApexPoint {
    pub fn new(p: Point) -> Result<Self> {
        let inside = p.is_finite()
            && p.y > 0.0
            && p.distance(FRAME_C) <= 1.0 + DOMAIN_EPS
            && p.distance(FRAME_B) <= 1.0 + DOMAIN_EPS;
        if inside {
            Ok(Self(p))
        } else {
            Err(GeomError::OutsideDomain { x: p.x, y: p.y })
        }
    }

    pub fn point(self) -> Point {
        self.0
    }

    /// Mirror image about `x = −1/2`, which swaps sides `b` and `c`.
    pub fn reflected(self) -> Self {
        Self(Point::new(-1.0 - self.0.x, self.0.y))
    }

    /// Triangle `A = p`, `B = (−1, 0)`, `C = (0, 0)`.
    pub fn triangle(self) -> Result<Triangle> {
        Triangle::new(self.0, FRAME_B, FRAME_C)
    }

    /// Class from the semicircle of radius 1/2 about `D = (−1/2, 0)`.
    pub fn class(self) -> TriangleClass {
        let d = self.0.distance(FRAME_D);
        if (d - 0.5).abs() <= CMP_REL_EPS {
            TriangleClass::Right(Vertex::A)
        } else if d < 0.5 {
            TriangleClass::Obtuse(Vertex::A)
        } else {
            TriangleClass::Acute
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">")]
    Greater,
}

impl Relation {
    pub fn compare(l: f64, r: f64, eps: f64) -> Self {
        if (l - r).abs() <= eps {
            Relation::Equal
        } else if l < r {
            Relation::Less
        } else {
            Relation::Greater
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Relation::Less => Relation::Greater,
            Relation::Equal => Relation::Equal,
            Relation::Greater => Relation::Less,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Relation::Less => '<',
            Relation::Equal => '=',
            Relation::Greater => '>',
        }
    }
}

/// Outcome of comparing `(s_a, s_b)`, `(s_a, s_c)` and `(s_b, s_c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionLabel {
    pub ab: Relation,
    pub ac: Relation,
    pub bc: Relation,
    pub class: TriangleClass,
}

impl RegionLabel {
    /// Three-character pattern such as `<<=`.
    pub fn pattern(&self) -> String {
        [self.ab, self.ac, self.bc].iter().map(|r| r.symbol()).collect()
    }

    /// The largest squares' sides, in label order.
    pub fn largest(&self) -> Vec<SideId> {
        use Relation::*;
        let beats = |x: Relation, y: Relation| x != Less && y != Less;
        let mut out = Vec::new();
        if beats(self.ab, self.ac) {
            out.push(SideId::A);
        }
        if beats(self.ab.reversed(), self.bc) {
            out.push(SideId::B);
        }
        if beats(self.ac.reversed(), self.bc.reversed()) {
            out.push(SideId::C);
        }
        out
    }

    /// Whether the three relations can come from real numbers.
    pub fn is_consistent(&self) -> bool {
        use Relation::*;
        let rank = |r: Relation| match r {
            Less => -1,
            Equal => 0,
            Greater => 1,
        };
        // orderings over (a, b, c) realised by some triple
        let vals = [0i32, 1, 2];
        vals.iter().any(|&a| {
            vals.iter().any(|&b| {
                vals.iter().any(|&c| {
                    rank(self.ab) == (a - b).signum() && rank(self.ac) == (a - c).signum() && rank(self.bc) == (b - c).signum()
                })
            })
        })
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.pattern(), self.class.name())
    }
}

/// Classifies an apex by the ordering of its three enclosed squares.
pub fn classify_apex(p: ApexPoint) -> Result<RegionLabel> {
    let t = p.triangle()?;
    let [sa, sb, sc] = enclosed_square_triple(&t).values().expect("enclosed squares exist on every side");
    let eps = CMP_REL_EPS * t.side_len(SideId::A);
    Ok(RegionLabel {
        ab: Relation::compare(sa, sb, eps),
        ac: Relation::compare(sa, sc, eps),
        bc: Relation::compare(sb, sc, eps),
        class: p.class(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub apex_deg: f64,
    pub s_leg_area: f64,
    pub s_base_area: f64,
    /// `s_leg_area − s_base_area`.
    pub diff: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossover {
    pub lo_deg: f64,
    pub hi_deg: f64,
    /// Root of the area difference inside `[lo_deg, hi_deg]`.
    pub refined_deg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub sign_changes: usize,
    /// First sign change of `diff`, if any.
    pub crossover: Option<Crossover>,
}

fn isosceles(apex: f64, leg: f64) -> Result<Triangle> {
    let half = apex / 2.0;
    Triangle::new(
        Point::new(0.0, leg * half.cos()),
        Point::new(-leg * half.sin(), 0.0),
        Point::new(leg * half.sin(), 0.0),
    )
}

fn isosceles_row(apex_deg: f64, leg: f64) -> Result<SweepRow> {
    let t = isosceles(apex_deg.to_radians(), leg)?;
    let squares = enclosed_square_triple(&t);
    let s_leg = squares.get(SideId::B).expect("present");
    let s_base = squares.get(SideId::A).expect("present");
    let (s_leg_area, s_base_area) = (s_leg * s_leg, s_base * s_base);
    Ok(SweepRow {
        apex_deg,
        s_leg_area,
        s_base_area,
        diff: s_leg_area - s_base_area,
    })
}

/// Enclosed-square areas of isosceles triangles with legs `leg` as the apex
/// angle runs from `apex_min` to `apex_max` degrees in steps of `step`.
pub fn sweep_isosceles(apex_min: f64, apex_max: f64, step: f64, leg: f64) -> Result<Sweep> {
    let finite = [apex_min, apex_max, step, leg].iter().all(|v| v.is_finite());
    if !finite {
        return Err(GeomError::InvalidRange("non-finite argument".into()));
    }
    if !(apex_min > 90.0 && apex_max < 180.0 && apex_min <= apex_max) {
        return Err(GeomError::InvalidRange(format!(
            "[{apex_min}°, {apex_max}°] must satisfy 90° < min ≤ max < 180°"
        )));
    }
    if step <= 0.0 {
        return Err(GeomError::InvalidRange(format!("step {step} must be positive")));
    }
    if leg <= 0.0 {
        return Err(GeomError::InvalidRange(format!("leg {leg} must be positive")));
    }
    let count = ((apex_max - apex_min) / step + 1e-9).floor() as usize + 1;
    let rows = (0..count)
        .map(|i| isosceles_row(apex_min + i as f64 * step, leg))
        .collect::<Result<Vec<_>>>()?;

    let mut sign_changes = 0;
    let mut crossover = None;
    let mut prev: Option<&SweepRow> = None;
    for row in rows.iter().filter(|r| r.diff != 0.0) {
        if let Some(p) = prev {
            if (p.diff < 0.0) != (row.diff < 0.0) {
                sign_changes += 1;
                if crossover.is_none() {
                    let diff = |deg: f64| isosceles_row(deg, leg).map(|r| r.diff).unwrap_or(f64::NAN);
                    let refined_deg = find_root(diff, p.apex_deg, row.apex_deg, 1e-10)?;
                    crossover = Some(Crossover {
                        lo_deg: p.apex_deg,
                        hi_deg: row.apex_deg,
                        refined_deg,
                    });
                }
            }
        }
        prev = Some(row);
    }
    Ok(Sweep {
        rows,
        sign_changes,
        crossover,
    })
}
