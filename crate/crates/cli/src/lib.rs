//! Report building and file emission behind the `trimax` binary.

pub mod atlas;
pub mod contour;
pub mod format;
pub mod report;
pub mod svg;
pub mod sweep;
