//! Minimal SVG 1.1 writer. Geometry is emitted in the mathematical frame
//! (y up) inside a single flipping group, so coordinates in the file are the
//! computed values verbatim.

use std::fmt::Write;

use trimax_core::{Figure, Guide, Point, PolygonKind};

pub struct Canvas {
    min: Point,
    max: Point,
    scale: f64,
    body: String,
}

impl Canvas {
    /// Canvas covering `[min, max]` with `margin` extra on every side and
    /// `pixels` screen units across the longer extent.
    pub fn new(min: Point, max: Point, margin: f64, pixels: f64) -> Self {
        let min = Point::new(min.x - margin, min.y - margin);
        let max = Point::new(max.x + margin, max.y + margin);
        let extent = (max.x - min.x).max(max.y - min.y);
        Self {
            min,
            max,
            scale: pixels / extent,
            body: String::new(),
        }
    }

    fn width(&self) -> f64 {
        (self.max.x - self.min.x) * self.scale
    }

    fn height(&self) -> f64 {
        (self.max.y - self.min.y) * self.scale
    }

    /// Stroke width of `px` screen pixels in frame units.
    pub fn px(&self, px: f64) -> f64 {
        px / self.scale
    }

    pub fn raw(&mut self, element: &str) {
        self.body.push_str("    ");
        self.body.push_str(element);
        self.body.push('\n');
    }

    pub fn polygon(&mut self, pts: &[Point], style: &str, id: Option<&str>) {
        let mut points = String::new();
        for (i, p) in pts.iter().enumerate() {
            if i > 0 {
                points.push(' ');
            }
            write!(points, "{},{}", p.x, p.y).unwrap();
        }
        let id = id.map(|i| format!(" id=\"{i}\"")).unwrap_or_default();
        self.raw(&format!("<polygon{id} points=\"{points}\" {style}/>"));
    }

    pub fn line(&mut self, a: Point, b: Point, style: &str) {
        self.raw(&format!("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {style}/>", a.x, a.y, b.x, b.y));
    }

    pub fn circle(&mut self, c: Point, r: f64, style: &str, id: Option<&str>) {
        let id = id.map(|i| format!(" id=\"{i}\"")).unwrap_or_default();
        self.raw(&format!("<circle{id} cx=\"{}\" cy=\"{}\" r=\"{r}\" {style}/>", c.x, c.y));
    }

    pub fn rect(&mut self, corner: Point, w: f64, h: f64, style: &str) {
        self.raw(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{w}\" height=\"{h}\" {style}/>",
            corner.x, corner.y
        ));
    }

    /// Disconnected segments as a single path.
    pub fn segments(&mut self, segs: &[(Point, Point)], style: &str, id: Option<&str>) {
        let mut d = String::new();
        for (a, b) in segs {
            write!(d, "M{} {}L{} {}", a.x, a.y, b.x, b.y).unwrap();
        }
        let id = id.map(|i| format!(" id=\"{i}\"")).unwrap_or_default();
        self.raw(&format!("<path{id} d=\"{d}\" {style}/>"));
    }

    pub fn finish(self, title: &str) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
            w = self.width(),
            h = self.height()
        )
        .unwrap();
        writeln!(out, "  <title>{title}</title>").unwrap();
        writeln!(
            out,
            "  <g transform=\"matrix({k} 0 0 {nk} {tx} {ty})\">",
            k = self.scale,
            nk = -self.scale,
            tx = -self.min.x * self.scale,
            ty = self.max.y * self.scale
        )
        .unwrap();
        out.push_str(&self.body);
        out.push_str("  </g>\n</svg>\n");
        out
    }
}

fn bbox(points: impl IntoIterator<Item = Point>) -> (Point, Point) {
    points.into_iter().fold(
        (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), p| (Point::new(lo.x.min(p.x), lo.y.min(p.y)), Point::new(hi.x.max(p.x), hi.y.max(p.y))),
    )
}

fn solution_fill(kind: PolygonKind) -> &'static str {
    match kind {
        PolygonKind::Parallelogram => "#4c72b0",
        PolygonKind::Rectangle => "#55a868",
        PolygonKind::Square => "#c44e52",
        PolygonKind::WedgedSquare => "#8172b2",
        PolygonKind::WedgedRectangle => "#ccb974",
    }
}

/// Triangle, guides and solution polygons of one construction.
pub fn render_figure(fig: &Figure) -> String {
    let tri = fig.triangle.vertices();
    let (min, max) = bbox(tri);
    let extent = (max.x - min.x).max(max.y - min.y);
    let mut c = Canvas::new(min, max, 0.05 * extent, 600.0);
    let thin = c.px(1.0);
    let bold = c.px(2.0);

    c.polygon(&tri, &format!("fill=\"none\" stroke=\"black\" stroke-width=\"{bold}\""), Some("triangle"));
    for (i, s) in fig.solutions.iter().enumerate() {
        let style = format!(
            "fill=\"{}\" fill-opacity=\"0.25\" stroke=\"{}\" stroke-width=\"{thin}\"",
            solution_fill(s.kind),
            solution_fill(s.kind)
        );
        c.polygon(&s.vertices, &style, Some(&format!("solution-{i}")));
    }
    for g in &fig.guides {
        match g {
            Guide::Segment { from, to, role } => {
                c.line(*from, *to, &format!("class=\"{role}\" stroke=\"#555\" stroke-dasharray=\"{d} {d}\" stroke-width=\"{thin}\"", d = c.px(4.0)));
            }
            Guide::Polygon { vertices, role } => {
                c.polygon(vertices, &format!("class=\"{role}\" fill=\"none\" stroke=\"#dd8452\" stroke-width=\"{thin}\""), None);
            }
            Guide::Marker { at, label } => {
                c.circle(*at, c.px(3.0), &format!("class=\"marker\" fill=\"black\""), Some(&format!("marker-{label}")));
            }
        }
    }
    c.finish(&format!("trimax {} construction", fig.construction))
}
