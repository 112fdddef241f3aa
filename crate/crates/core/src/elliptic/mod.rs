//! Elliptic curves over the rationals: Weierstrass models, the group law,
//! torsion, and quartic-model conversions.

pub mod quartic;
pub mod weierstrass;

pub use quartic::{
    jacobian_invariants, quartic_invariants, quartic_to_weierstrass, ModelMap, QuarticModel,
};
pub use weierstrass::{
    ECPoint, WeierstrassCurve, DEFAULT_HEIGHT_CAP_BITS, POSSIBLE_TORSION_ORDERS,
};
