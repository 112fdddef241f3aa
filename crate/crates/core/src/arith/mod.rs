//! Exact scalar and polynomial arithmetic.

pub mod form3;
pub mod poly1;
pub mod poly2;
pub mod rat;
pub mod roots;

pub use form3::Form3;
pub use poly1::Poly1;
pub use poly2::Poly2;
pub use rat::{
    height, height_bits, is_square, rat, rat_from_str, rat_int, rat_to_string, sqrt_exact, Rat,
};
pub use roots::{rational_roots, RootReport};
