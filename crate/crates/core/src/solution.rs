use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geom::{shoelace_area, Point, SideId, Triangle, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolygonKind {
    Parallelogram,
    Rectangle,
    Square,
    WedgedSquare,
    WedgedRectangle,
}

impl PolygonKind {
    fn needs_right_angles(self) -> bool {
        !matches!(self, PolygonKind::Parallelogram)
    }

    fn needs_equal_sides(self) -> bool {
        matches!(self, PolygonKind::Square | PolygonKind::WedgedSquare)
    }
}

/// A solved maximal quadrilateral. Vertices are in boundary order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonSolution {
    pub kind: PolygonKind,
    pub vertices: [Point; 4],
    pub base: SideId,
    /// Second base side producing the identical polygon (right triangles).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coincident_base: Option<SideId>,
    /// Triangle vertex the polygon is pinned to, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<Vertex>,
    pub area: f64,
    pub params: BTreeMap<String, f64>,
}

impl PolygonSolution {
    pub fn new(kind: PolygonKind, vertices: [Point; 4], base: SideId, area: f64) -> Self {
        Self {
            kind,
            vertices,
            base,
            coincident_base: None,
            anchor: None,
            area,
            params: BTreeMap::new(),
        }
    }

    pub fn with_anchor(mut self, v: Vertex) -> Self {
        self.anchor = Some(v);
        self
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_owned(), value);
        self
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.get(name).copied()
    }

    pub fn shoelace_area(&self) -> f64 {
        shoelace_area(&self.vertices)
    }

    /// Side lengths `|v0v1|, |v1v2|, |v2v3|, |v3v0|`.
    pub fn edge_lengths(&self) -> [f64; 4] {
        let v = &self.vertices;
        [0, 1, 2, 3].map(|i| v[i].distance(v[(i + 1) % 4]))
    }

    /// Checks the kind's shape constraints with absolute tolerance `eps`.
    pub fn has_shape(&self, eps: f64) -> bool {
        let v = &self.vertices;
        let e01 = v[1] - v[0];
        let e12 = v[2] - v[1];
        let e32 = v[2] - v[3];
        let e03 = v[3] - v[0];
        if (e01 - e32).norm() > eps || (e12 - e03).norm() > eps {
            return false;
        }
        if self.kind.needs_right_angles() {
            let scale = e01.norm().max(e03.norm()).max(f64::MIN_POSITIVE);
            if (e01.dot(e03) / scale).abs() > eps {
                return false;
            }
        }
        if self.kind.needs_equal_sides() && (e01.norm() - e03.norm()).abs() > eps {
            return false;
        }
        true
    }

    /// All four vertices lie in the closed triangle (slack `eps`).
    pub fn inside(&self, t: &Triangle, eps: f64) -> bool {
        self.vertices.iter().all(|&p| t.contains(p, eps))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SquareKind {
    Inscribed,
    Wedged,
    None,
}

/// Enclosed-square sides `(s_a, s_b, s_c)`, one per base side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SquareTriple {
    pub sides: [Option<f64>; 3],
    pub kinds: [SquareKind; 3],
}

impl SquareTriple {
    pub fn get(&self, side: SideId) -> Option<f64> {
        self.sides[side as usize]
    }

    pub fn kind(&self, side: SideId) -> SquareKind {
        self.kinds[side as usize]
    }

    /// `(s_a, s_b, s_c)` when all three are present.
    pub fn values(&self) -> Option<[f64; 3]> {
        match self.sides {
            [Some(a), Some(b), Some(c)] => Some([a, b, c]),
            _ => None,
        }
    }
}
