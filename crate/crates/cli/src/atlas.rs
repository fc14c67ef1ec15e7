use std::collections::BTreeMap;
use std::io::Write;

use trimax_core::calabi::{
    classify_apex, equality_curve_ab, equality_curve_ac, solve_calabi, ApexPoint, RegionLabel, FRAME_B, FRAME_C,
    FRAME_D,
};
use trimax_core::{Point, Result};

use crate::contour::zero_set;
use crate::format::sig9;
use crate::svg::Canvas;

pub const MIN_GRID: usize = 8;
/// Highest apex in the domain (the equilateral apex).
pub const Y_MAX: f64 = 0.866_025_403_784_438_6;

#[derive(Debug, Clone, PartialEq)]
pub struct AtlasSample {
    pub at: Point,
    pub label: RegionLabel,
}

/// Cell-centred samples over `[−1, 0] × (0, √3/2]` kept inside the apex
/// domain, ordered by `(y, x)`.
pub fn sample_atlas(nx: usize, ny: usize) -> Result<Vec<AtlasSample>> {
    let mut out = Vec::new();
    for j in 0..ny {
        let y = Y_MAX * (j as f64 + 0.5) / ny as f64;
        for i in 0..nx {
            let x = -1.0 + (i as f64 + 0.5) / nx as f64;
            let Ok(apex) = ApexPoint::new(Point::new(x, y)) else {
                continue;
            };
            out.push(AtlasSample {
                at: apex.point(),
                label: classify_apex(apex)?,
            });
        }
    }
    Ok(out)
}

pub fn write_atlas_csv<W: Write>(samples: &[AtlasSample], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "class", "pattern"])?;
    for s in samples {
        w.write_record([sig9(s.at.x), sig9(s.at.y), s.label.class.name().to_owned(), s.label.pattern()])?;
    }
    w.flush()?;
    Ok(())
}

/// Count of samples per pattern.
pub fn census(samples: &[AtlasSample]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for s in samples {
        *m.entry(s.label.pattern()).or_insert(0) += 1;
    }
    m
}

fn pattern_color(pattern: &str) -> &'static str {
    match pattern {
        "<<<" => "#a6cee3",
        "<<>" => "#1f78b4",
        "<<=" => "#6baed6",
        "><<" => "#b2df8a",
        ">><" => "#33a02c",
        ">>>" => "#fb9a99",
        ">>=" => "#e31a1c",
        "<>>" => "#fdbf6f",
        "><>" | "<><" => "#ff7f00",
        "===" => "#000000",
        _ => "#cab2d6",
    }
}

pub fn render_atlas(samples: &[AtlasSample], nx: usize, ny: usize) -> String {
    let mut c = Canvas::new(Point::new(-1.0, 0.0), Point::new(0.0, 1.0), 0.05, 600.0);
    let (w, h) = (1.0 / nx as f64, Y_MAX / ny as f64);
    for s in samples {
        let corner = Point::new(s.at.x - w / 2.0, s.at.y - h / 2.0);
        c.rect(corner, w, h, &format!("fill=\"{}\" stroke=\"none\"", pattern_color(&s.label.pattern())));
    }
    let thin = c.px(1.0);
    let stroke = |color: &str| format!("fill=\"none\" stroke=\"{color}\" stroke-width=\"{thin}\"");
    c.circle(FRAME_C, 1.0, &stroke("black"), Some("circle-c"));
    c.circle(FRAME_D, 0.5, &stroke("black"), Some("semicircle-d"));
    c.line(Point::new(FRAME_D.x, 0.0), Point::new(FRAME_D.x, 1.0), &stroke("gray"));
    c.line(FRAME_B, FRAME_C, &stroke("black"));

    let (xs, ys) = ((-1.0, 0.0), (0.0, 1.0));
    let ab = zero_set(equality_curve_ab, xs, ys, 240, 240);
    let ac = zero_set(equality_curve_ac, xs, ys, 240, 240);
    c.segments(&ab, &stroke("#d62728"), Some("curve-ab"));
    c.segments(&ac, &stroke("#1f77b4"), Some("curve-ac"));

    let e = solve_calabi().normalized_apex();
    c.circle(e, c.px(4.0), "fill=\"black\"", Some("calabi-point"));
    c.finish("trimax apex atlas")
}
