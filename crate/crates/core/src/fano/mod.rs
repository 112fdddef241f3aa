//! The weighted-hypersurface threefold pipeline: fiber cubics over the plane
//! of directions, discriminant locus, tangent quadric sections, singular
//! slice sextics, and lifting of generated surface points.

pub mod generate;
pub mod model;
pub mod section;

pub use generate::{v1_generate, verify_threefold_points, ThreefoldPoint, V1GenConfig, V1Report};
pub use model::{FanoError, RamificationPoint, V1Model, VerticalFiber};
pub use section::{slice_is_singular_at, tangent_section_at, QuadricSection, TangentSectionFamily};
