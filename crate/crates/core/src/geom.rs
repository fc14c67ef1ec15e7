//! Planar primitives and the validated [`Triangle`] every solver works on.
//!
//! Vertex labels are fixed: side `a` is `BC`, `b` is `CA` and `c` is `AB`.
//! Nothing here ever relabels or sorts vertices; callers that need sorted
//! sides ask for them explicitly.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Twice-area threshold relative to the squared longest side.
pub const AREA_REL_EPS: f64 = 1e-12;
/// Angle tolerance in radians used for right-angle ties.
pub const ANGLE_EPS: f64 = 1e-9;
/// Vertex-on-side tolerance relative to the longest side.
pub const GEOM_REL_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn unit(self) -> Point {
        self * (1.0 / self.norm())
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }

    pub fn midpoint(self, other: Point) -> Point {
        self.lerp(other, 0.5)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Parameters `(t, s)` with `p + t·d = q + s·e`, or `None` for parallel lines.
pub fn intersect_lines(p: Point, d: Point, q: Point, e: Point) -> Option<(f64, f64)> {
    let denom = d.cross(e);
    if denom.abs() <= f64::EPSILON * d.norm() * e.norm() {
        return None;
    }
    let w = q - p;
    Some((w.cross(e) / denom, w.cross(d) / denom))
}

/// Distance from `p` to the closed segment `[s0, s1]`.
pub fn distance_to_segment(p: Point, s0: Point, s1: Point) -> f64 {
    let d = s1 - s0;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return p.distance(s0);
    }
    let t = ((p - s0).dot(d) / len2).clamp(0.0, 1.0);
    p.distance(s0 + d * t)
}

/// Signed shoelace area, positive for counterclockwise vertex order.
pub fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let twice: f64 = (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum();
    twice / 2.0
}

pub fn shoelace_area(vertices: &[Point]) -> f64 {
    signed_area(vertices).abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    fn index(self) -> usize {
        self as usize
    }

    /// The side across from this vertex.
    pub fn opposite_side(self) -> SideId {
        match self {
            Vertex::A => SideId::A,
            Vertex::B => SideId::B,
            Vertex::C => SideId::C,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        };
        f.write_str(s)
    }
}

/// A side named by its opposite vertex: `A` is side `a = BC`, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideId {
    A,
    B,
    C,
}

impl SideId {
    pub const ALL: [SideId; 3] = [SideId::A, SideId::B, SideId::C];

    /// Endpoints in label order: `a → (B, C)`, `b → (C, A)`, `c → (A, B)`.
    pub fn endpoints(self) -> (Vertex, Vertex) {
        match self {
            SideId::A => (Vertex::B, Vertex::C),
            SideId::B => (Vertex::C, Vertex::A),
            SideId::C => (Vertex::A, Vertex::B),
        }
    }

    pub fn opposite_vertex(self) -> Vertex {
        match self {
            SideId::A => Vertex::A,
            SideId::B => Vertex::B,
            SideId::C => Vertex::C,
        }
    }

    pub fn touches(self, v: Vertex) -> bool {
        self.opposite_vertex() != v
    }

    /// The endpoint of this side that is not `v`. `v` must be an endpoint.
    pub fn other_endpoint(self, v: Vertex) -> Vertex {
        let (p, q) = self.endpoints();
        if p == v {
            q
        } else {
            p
        }
    }

    pub fn parse(s: &str) -> Option<SideId> {
        match s {
            "a" | "A" => Some(SideId::A),
            "b" | "B" => Some(SideId::B),
            "c" | "C" => Some(SideId::C),
            _ => None,
        }
    }
}

impl fmt::Display for SideId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SideId::A => "a",
            SideId::B => "b",
            SideId::C => "c",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "vertex", rename_all = "lowercase")]
pub enum TriangleClass {
    Acute,
    Right(Vertex),
    Obtuse(Vertex),
}

impl TriangleClass {
    pub fn name(self) -> &'static str {
        match self {
            TriangleClass::Acute => "acute",
            TriangleClass::Right(_) => "right",
            TriangleClass::Obtuse(_) => "obtuse",
        }
    }

    /// Vertex carrying the right or obtuse angle.
    pub fn special_vertex(self) -> Option<Vertex> {
        match self {
            TriangleClass::Acute => None,
            TriangleClass::Right(v) | TriangleClass::Obtuse(v) => Some(v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[Point; 3]", into = "[Point; 3]")]
pub struct Triangle {
    vertices: [Point; 3],
}

impl TryFrom<[Point; 3]> for Triangle {
    type Error = GeomError;
    fn try_from(v: [Point; 3]) -> Result<Self> {
        Triangle::new(v[0], v[1], v[2])
    }
}

impl From<Triangle> for [Point; 3] {
    fn from(t: Triangle) -> Self {
        t.vertices
    }
}

impl Triangle {
    /// Validates three points as a non-degenerate triangle `ABC`.
    ///
    /// Vertices are kept exactly as given; the winding is available from
    /// [`Triangle::is_ccw`] and every solver is winding-agnostic.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let longest = a.distance(b).max(b.distance(c)).max(c.distance(a));
        let twice_area = (b - a).cross(c - a).abs();
        let threshold = AREA_REL_EPS * longest * longest;
        if !(twice_area > threshold) {
            return Err(GeomError::DegenerateTriangle {
                twice_area,
                threshold,
            });
        }
        Ok(Self {
            vertices: [a, b, c],
        })
    }

    /// Triangle with interior angles `alpha` at `A` and `beta` at `B`
    /// (radians) and side `c = AB` of length `base_len` along the x-axis.
    pub fn from_angles(alpha: f64, beta: f64, base_len: f64) -> Result<Self> {
        Self::from_angles_on_side(SideId::C, alpha, beta, base_len)
    }

    /// Like [`Triangle::from_angles`] for an arbitrary given side: `first`
    /// and `second` are the angles at the side's endpoints in label order
    /// (`a`: B then C, `b`: C then A, `c`: A then B).
    pub fn from_angles_on_side(side: SideId, first: f64, second: f64, len: f64) -> Result<Self> {
        let valid = first.is_finite()
            && second.is_finite()
            && first > 0.0
            && second > 0.0
            && first + second < std::f64::consts::PI;
        if !valid {
            return Err(GeomError::InvalidAngles {
                alpha: first,
                beta: second,
            });
        }
        if !(len.is_finite() && len > 0.0) {
            return Err(GeomError::NonPositiveInput {
                what: "side length",
                value: len,
            });
        }
        let p = Point::new(0.0, 0.0);
        let q = Point::new(len, 0.0);
        let dp = Point::new(first.cos(), first.sin());
        let dq = Point::new(-second.cos(), second.sin());
        let (t, _) = intersect_lines(p, dp, q, dq).ok_or(GeomError::InvalidAngles {
            alpha: first,
            beta: second,
        })?;
        let apex = p + dp * t;
        let mut v = [Point::default(); 3];
        let (s0, s1) = side.endpoints();
        v[s0.index()] = p;
        v[s1.index()] = q;
        v[side.opposite_vertex().index()] = apex;
        Self::new(v[0], v[1], v[2])
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        self.vertices[v.index()]
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    pub fn a(&self) -> Point {
        self.vertices[0]
    }

    pub fn b(&self) -> Point {
        self.vertices[1]
    }

    pub fn c(&self) -> Point {
        self.vertices[2]
    }

    pub fn side_points(&self, side: SideId) -> (Point, Point) {
        let (p, q) = side.endpoints();
        (self.vertex(p), self.vertex(q))
    }

    pub fn side_len(&self, side: SideId) -> f64 {
        let (p, q) = self.side_points(side);
        p.distance(q)
    }

    /// Side lengths `(a, b, c)`.
    pub fn sides(&self) -> [f64; 3] {
        SideId::ALL.map(|s| self.side_len(s))
    }

    pub fn longest_side_len(&self) -> f64 {
        let [a, b, c] = self.sides();
        a.max(b).max(c)
    }

    /// Sides from longest to shortest; ties keep label order.
    pub fn sides_by_length(&self) -> [SideId; 3] {
        let mut ids = SideId::ALL;
        ids.sort_by(|&l, &r| self.side_len(r).total_cmp(&self.side_len(l)));
        ids
    }

    pub fn twice_signed_area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        (b - a).cross(c - a)
    }

    pub fn area(&self) -> f64 {
        self.twice_signed_area().abs() / 2.0
    }

    pub fn is_ccw(&self) -> bool {
        self.twice_signed_area() > 0.0
    }

    /// Altitude onto `base`.
    pub fn height(&self, base: SideId) -> f64 {
        2.0 * self.area() / self.side_len(base)
    }

    /// Interior angle at `v` in radians.
    pub fn angle_at(&self, v: Vertex) -> f64 {
        let side = v.opposite_side();
        let (p, q) = self.side_points(side);
        let o = self.vertex(v);
        let (u, w) = (p - o, q - o);
        u.cross(w).abs().atan2(u.dot(w))
    }

    pub fn angles(&self) -> [f64; 3] {
        Vertex::ALL.map(|v| self.angle_at(v))
    }

    pub fn classify(&self) -> TriangleClass {
        let (v, angle) = Vertex::ALL
            .iter()
            .map(|&v| (v, self.angle_at(v)))
            .fold((Vertex::A, f64::MIN), |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            });
        if (angle - FRAC_PI_2).abs() <= ANGLE_EPS {
            TriangleClass::Right(v)
        } else if angle > FRAC_PI_2 {
            TriangleClass::Obtuse(v)
        } else {
            TriangleClass::Acute
        }
    }

    pub fn is_obtuse_at(&self, v: Vertex) -> bool {
        self.angle_at(v) > FRAC_PI_2 + ANGLE_EPS
    }

    /// Returns the obtuse endpoint of `side`, if any.
    pub fn obtuse_base_vertex(&self, side: SideId) -> Option<Vertex> {
        let (p, q) = side.endpoints();
        [p, q].into_iter().find(|&v| self.is_obtuse_at(v))
    }

    /// Unit normal of `side` pointing toward the opposite vertex.
    pub fn inward_normal(&self, side: SideId) -> Point {
        let (p, q) = self.side_points(side);
        let n = (q - p).perp().unit();
        let apex = self.vertex(side.opposite_vertex());
        if (apex - p).dot(n) >= 0.0 {
            n
        } else {
            -n
        }
    }

    pub fn geom_eps(&self) -> f64 {
        GEOM_REL_EPS * self.longest_side_len()
    }

    pub fn distance_to_side(&self, p: Point, side: SideId) -> f64 {
        let (s0, s1) = self.side_points(side);
        distance_to_segment(p, s0, s1)
    }

    pub fn distance_to_boundary(&self, p: Point) -> f64 {
        SideId::ALL
            .iter()
            .map(|&s| self.distance_to_side(p, s))
            .fold(f64::INFINITY, f64::min)
    }

    /// Closed containment with slack `eps` (distance outside any side line).
    pub fn contains(&self, p: Point, eps: f64) -> bool {
        SideId::ALL.iter().all(|&s| {
            let (s0, _) = self.side_points(s);
            (p - s0).dot(self.inward_normal(s)) >= -eps
        })
    }
}
