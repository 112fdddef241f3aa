//! Exact-arithmetic engine for generating rational points on double covers of
//! the plane branched in singular sextics, and on the degree-6 hypersurface in
//! the weighted projective space P(1,1,1,2,3).
//!
//! The pipeline, bottom to top:
//!
//! * [`arith`] — big rationals, dense univariate and sparse bivariate
//!   polynomials, ternary forms, resultants, gcds, exact rational roots.
//! * [`plane`] — plane curves: multiplicities, tangent cones, line
//!   intersections, the tangent correspondence, six-line configurations.
//! * [`elliptic`] — short Weierstrass curves with the chord-tangent group
//!   law, the quartic-with-point to Weierstrass conversion, torsion testing.
//! * [`fibration`] — pencils of lines through a double point of the branch
//!   sextic, the induced elliptic fibration on the double cover, multisection
//!   search, and the point-generation engine.
//! * [`fano`] — the threefold pipeline: tangent quadric sections, singular
//!   slice sextics, and lifting generated surface points.
//!
//! Every computation is exact; no floating point is used anywhere.

pub mod arith;
pub mod elliptic;
pub mod error;
pub mod fano;
pub mod fibration;
pub mod fixtures;
pub mod heights;
pub mod json;
pub mod par;
pub mod plane;

pub use arith::{Poly1, Poly2, Rat};
