use std::io::Write;

use trimax_core::calabi::Sweep;

use crate::format::sig9;

pub const SWEEP_HEADER: [&str; 4] = ["apex_deg", "s_leg_area", "s_base_area", "diff"];

/// CSV with one row per apex angle and a trailing summary row
/// `crossover,<lo>,<hi>,<refined>` (or `none,,,` without a sign change).
pub fn write_sweep_csv<W: Write>(sweep: &Sweep, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in &sweep.rows {
        w.write_record([sig9(r.apex_deg), sig9(r.s_leg_area), sig9(r.s_base_area), sig9(r.diff)])?;
    }
    match sweep.crossover {
        Some(c) => w.write_record(["crossover".to_owned(), sig9(c.lo_deg), sig9(c.hi_deg), sig9(c.refined_deg)])?,
        None => w.write_record(["none", "", "", ""])?,
    }
    w.flush()?;
    Ok(())
}
