//! Plane geometry: points, lines, curves and line configurations.

pub mod curve;
pub mod line;
pub mod point;
pub mod six_lines;

pub use curve::{
    point_sort_key, IntersectionProfile, PlaneCurve, SingularityKind, SingularityReport,
    TangentPair, MAX_CURVE_DEGREE,
};
pub use line::ProjLine;
pub use point::ProjPoint;
pub use six_lines::{line_product_curve, six_lines_analysis};
