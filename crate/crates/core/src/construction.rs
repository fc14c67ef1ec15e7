//! Named constructions selectable at runtime.
//!
//! Each construction turns a triangle into a [`Figure`]: the solved
//! polygons plus the auxiliary objects drawn while building them. The CLI
//! and renderers only ever talk to the [`Construction`] trait and look
//! implementations up by name in a [`ConstructionRegistry`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::geom::{Point, SideId, Triangle, Vertex};
use crate::inscribed::{construct_inscribed_square, max_parallelograms, max_rectangles, polya_construction};
use crate::solution::PolygonSolution;
use crate::wedged::{construct_wedged_square, max_wedged_rectangle, wedge_vertex};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Guide {
    Segment { from: Point, to: Point, role: String },
    Polygon { vertices: Vec<Point>, role: String },
    Marker { at: Point, label: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure {
    pub construction: String,
    pub triangle: Triangle,
    pub solutions: Vec<PolygonSolution>,
    pub guides: Vec<Guide>,
}

pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str;

    /// Fails when the construction does not apply to `t`.
    fn build(&self, t: &Triangle) -> Result<Figure>;
}

fn figure(name: &str, t: &Triangle, solutions: Vec<PolygonSolution>, guides: Vec<Guide>) -> Figure {
    Figure {
        construction: name.to_owned(),
        triangle: *t,
        solutions,
        guides,
    }
}

fn midpoint_markers(t: &Triangle) -> Vec<Guide> {
    SideId::ALL
        .iter()
        .map(|&s| {
            let (p, q) = t.side_points(s);
            Guide::Marker {
                at: p.midpoint(q),
                label: format!("M{s}"),
            }
        })
        .collect()
}

/// Non-acute vertex, or an error naming the largest angle.
fn wedge_anchor(t: &Triangle) -> Result<Vertex> {
    let v = Vertex::ALL
        .into_iter()
        .max_by(|&l, &r| t.angle_at(l).total_cmp(&t.angle_at(r)))
        .expect("three vertices");
    let side = SideId::ALL.into_iter().find(|s| s.touches(v)).expect("two sides meet each vertex");
    match wedge_vertex(t, side) {
        Some(w) if w == v => Ok(v),
        _ => Err(GeomError::NotObtuseAtVertex(v)),
    }
}

fn sides_at(v: Vertex) -> impl Iterator<Item = SideId> {
    SideId::ALL.into_iter().filter(move |s| s.touches(v))
}

pub struct Parallelograms;

impl Construction for Parallelograms {
    fn name(&self) -> &'static str {
        "parallelogram"
    }
    fn summary(&self) -> &'static str {
        "three maximal inscribed parallelograms on the side midpoints"
    }
    fn build(&self, t: &Triangle) -> Result<Figure> {
        Ok(figure(self.name(), t, max_parallelograms(t).to_vec(), midpoint_markers(t)))
    }
}

pub struct Rectangles;

impl Construction for Rectangles {
    fn name(&self) -> &'static str {
        "rectangle"
    }
    fn summary(&self) -> &'static str {
        "maximal inscribed rectangles, one per base without an obtuse angle"
    }
    fn build(&self, t: &Triangle) -> Result<Figure> {
        Ok(figure(self.name(), t, max_rectangles(t), midpoint_markers(t)))
    }
}

pub struct Squares;

impl Construction for Squares {
    fn name(&self) -> &'static str {
        "square"
    }
    fn summary(&self) -> &'static str {
        "inscribed squares on every admissible base"
    }
    fn build(&self, t: &Triangle) -> Result<Figure> {
        let solutions = SideId::ALL
            .into_iter()
            .filter(|&s| t.obtuse_base_vertex(s).is_none())
            .map(|s| construct_inscribed_square(t, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(figure(self.name(), t, solutions, Vec::new()))
    }
}

pub struct Polya;

impl Construction for Polya {
    fn name(&self) -> &'static str {
        "polya"
    }
    fn summary(&self) -> &'static str {
        "seed square, ray and dilation onto the first admissible base"
    }
    fn build(&self, t: &Triangle) -> Result<Figure> {
        let base = SideId::ALL
            .into_iter()
            .find(|&s| t.obtuse_base_vertex(s).is_none())
            .expect("at most one obtuse angle, so some base is admissible");
        let c = polya_construction(t, base)?;
        let guides = vec![
            Guide::Polygon {
                vertices: c.seed.to_vec(),
                role: "seed".into(),
            },
            Guide::Segment {
                from: c.center,
                to: c.ray_hit,
                role: "ray".into(),
            },
            Guide::Marker {
                at: c.ray_hit,
                label: "H".into(),
            },
        ];
        Ok(figure(self.name(), t, vec![c.square], guides))
    }
}

pub struct WedgedSquares;

impl Construction for WedgedSquares {
    fn name(&self) -> &'static str {
        "wedged-square"
    }
    fn summary(&self) -> &'static str {
        "wedged squares at the non-acute vertex via the 45° ray"
    }
    fn build(&self, t: &Triangle) -> Result<Figure> {
        let v = wedge_anchor(t)?;
        let solutions = sides_at(v)
            .map(|s| construct_wedged_square(t, v, s))
            .collect::<Result<Vec<_>>>()?;
        let guides = solutions
            .iter()
            .map(|s| Guide::Segment {
                from: s.vertices[0],
                to: s.vertices[2],
                role: "ray45".into(),
            })
            .collect();
        Ok(figure(self.name(), t, solutions, guides))
    }
}

pub struct WedgedRectangles;

impl Construction for WedgedRectangles {
    fn name(&self) -> &'static str {
        "wedged-rect"
    }
    fn summary(&self) -> &'static str {
        "max wedged rectangles at the non-acute vertex"
    }
    fn build(&self, t: &Triangle) -> Result<Figure> {
        let v = wedge_anchor(t)?;
        let solutions = sides_at(v)
            .map(|s| max_wedged_rectangle(t, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(figure(self.name(), t, solutions, midpoint_markers(t)))
    }
}

#[derive(Default)]
pub struct ConstructionRegistry {
    entries: BTreeMap<&'static str, Box<dyn Construction>>,
}

impl ConstructionRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry holding every built-in construction.
    pub fn builtin() -> Self {
        let mut r = Self::new();
        r.register(Box::new(Parallelograms));
        r.register(Box::new(Rectangles));
        r.register(Box::new(Squares));
        r.register(Box::new(Polya));
        r.register(Box::new(WedgedSquares));
        r.register(Box::new(WedgedRectangles));
        r
    }

    /// Adds `c`, replacing any construction already under its name.
    pub fn register(&mut self, c: Box<dyn Construction>) -> Option<Box<dyn Construction>> {
        self.entries.insert(c.name(), c)
    }

    pub fn get(&self, name: &str) -> Option<&dyn Construction> {
        self.entries.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn build(&self, name: &str, t: &Triangle) -> Result<Figure> {
        self.get(name)
            .ok_or_else(|| GeomError::UnknownConstruction(name.to_owned()))?
            .build(t)
    }
}
