//! Double covers of the plane and the elliptic fibration induced by a pencil
//! of lines through a rational double point of the branch sextic.
//!
//! With the double point translated to the origin, the branch equation
//! decomposes into forms f2 + f3 + ... + f6 and the pencil line (x, y) =
//! (s, s·t) pulls the cover equation back to w² = s²·g4(s; t); dividing the
//! square factor into the cover coordinate leaves the fiber quartic
//! v² = g4(s; t) whose coefficients are polynomials in the pencil parameter.
//! The vertical line is the one pencil member not of this shape and is kept
//! as a separate branch.

pub mod engine;
pub mod multisection;
pub mod six_lines;

pub use engine::{
    generate_points, intersect_multisection_fiber, verify_points, GenConfig, GeneratedPoint,
    GenerationReport, LiftedPoint,
};
pub use multisection::{find_multisections, Multisection, MultisectionSource};
pub use six_lines::{six_lines_generate, SixLineRun};

use crate::arith::poly1::Poly1;

use crate::arith::rat::{sqrt_exact, Rat};
use crate::error::{DegeneracyReport, FibrationError};
use crate::plane::{PlaneCurve, ProjLine};
use num_traits::Zero;

/// The surface w² = f6(x, y), a double cover of the plane branched in a
/// reduced sextic.
#[derive(Clone, Debug)]
pub struct DoubleCoverSurface {
    branch: PlaneCurve,
}

impl DoubleCoverSurface {
    pub fn new(branch: PlaneCurve) -> Result<DoubleCoverSurface, FibrationError> {
        if branch.degree() != 6 {
            return Err(FibrationError::Degenerate(DegeneracyReport::NotDegreeSix {
                degree: branch.degree(),
            }));
        }
        if !branch.is_reduced() {
            return Err(FibrationError::Degenerate(
                DegeneracyReport::MultipleComponents,
            ));
        }
        Ok(DoubleCoverSurface { branch })
    }

    pub fn branch(&self) -> &PlaneCurve {
        &self.branch
    }

    /// Exact membership test for w² = f(x, y).
    pub fn contains(&self, x: &Rat, y: &Rat, w: &Rat) -> bool {
        w * w == self.branch.equation().eval(x, y)
    }

    /// Rational lift over a plane point: Some(w >= 0) iff f(x, y) is a
    /// perfect square.
    pub fn lift(&self, x: &Rat, y: &Rat) -> Option<Rat> {
        sqrt_exact(&self.branch.equation().eval(x, y))
    }
}

/// The elliptic fibration attached to a double point of the branch curve.
#[derive(Clone, Debug)]
pub struct EllipticFibration {
    surface: DoubleCoverSurface,
    base_point: (Rat, Rat),
    /// Coefficients of the fiber quartic: entry i multiplies s^i and is a
    /// polynomial in the pencil parameter t.
    generic_fiber: [Poly1; 5],
    /// s-discriminant of the fiber quartic times its leading coefficient;
    /// vanishing flags every degenerate fiber, including leading-coefficient
    /// drops where a root migrates to infinity.
    disc_t: Poly1,
    /// Fiber quartic over the vertical pencil line.
    infinity_fiber: Poly1,
}

/// Build the fibration; the base point must be a double point of the branch.
pub fn build_fibration(
    surface: DoubleCoverSurface,
    base: (Rat, Rat),
) -> Result<EllipticFibration, FibrationError> {
    let m = surface.branch.multiplicity_at(&base.0, &base.1);
    match m {
        2 => {}
        0 | 1 => return Err(FibrationError::NotDoublePoint { multiplicity: m }),
        3 => {
            return Err(FibrationError::Degenerate(
                DegeneracyReport::TripleBasePoint,
            ))
        }
        _ => {
            return Err(FibrationError::Degenerate(
                DegeneracyReport::RationalFibration { multiplicity: m },
            ))
        }
    }
    let translated = surface.branch.equation().translate(&base.0, &base.1);
    debug_assert!(translated.homogeneous_part(0).is_zero());
    debug_assert!(translated.homogeneous_part(1).is_zero());

    let mut generic_fiber: [Poly1; 5] = [
        Poly1::zero(),
        Poly1::zero(),
        Poly1::zero(),
        Poly1::zero(),
        Poly1::zero(),
    ];
    let mut infinity_fiber = vec![Rat::zero(); 5];
    for i in 0..5u32 {
        let form = translated.homogeneous_part(i + 2);
        // f_k(1, t): coefficient of t^b is the (k-b, b) term
        let coeffs: Vec<Rat> = (0..=i + 2).map(|b| form.coeff(i + 2 - b, b)).collect();
        generic_fiber[i as usize] = Poly1::new(coeffs);
        infinity_fiber[i as usize] = form.coeff(0, i + 2);
    }
    let disc = quartic_disc_poly(&generic_fiber);
    let disc_t = &disc * &generic_fiber[4];
    Ok(EllipticFibration {
        surface,
        base_point: base,
        generic_fiber,
        disc_t,
        infinity_fiber: Poly1::new(infinity_fiber),
    })
}

/// A fiber of the pencil: the quartic model over one pencil parameter.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub t: Rat,
    pub quartic: Poly1,
    pub smooth: bool,
}

impl EllipticFibration {
    pub fn surface(&self) -> &DoubleCoverSurface {
        &self.surface
    }

    pub fn base_point(&self) -> &(Rat, Rat) {
        &self.base_point
    }

    pub fn generic_fiber(&self) -> &[Poly1; 5] {
        &self.generic_fiber
    }

    pub fn disc_t(&self) -> &Poly1 {
        &self.disc_t
    }

    /// The fiber at a finite pencil parameter. Degeneracy is data here, not
    /// an error: degenerate fibers are flagged and never used for generation.
    pub fn fiber_at(&self, t: &Rat) -> Fiber {
        let quartic = Poly1::new(self.generic_fiber.iter().map(|c| c.eval(t)).collect());
        let smooth = !self.disc_t.eval(t).is_zero();
        Fiber {
            t: t.clone(),
            quartic,
            smooth,
        }
    }

    /// The fiber over the vertical pencil line (the t = infinity member).
    pub fn fiber_at_infinity(&self) -> (Poly1, bool) {
        let q = self.infinity_fiber.clone();
        let smooth = q.degree() == Some(4) && q.is_square_free();
        (q, smooth)
    }

    /// The pencil line with parameter t: through the base point with
    /// direction (1, t).
    pub fn pencil_line(&self, t: &Rat) -> ProjLine {
        let (px, py) = &self.base_point;
        // t·(x - px) - (y - py) = 0
        ProjLine::new(t.clone(), -Rat::from_integer(1.into()), py - &(t * px))
            .expect("pencil line coefficients are nonzero")
    }

    /// Pencil parameter of an affine point away from the base point; `None`
    /// for points vertically above or below it (the infinity member).
    pub fn parameter_of(&self, x: &Rat, y: &Rat) -> Option<Rat> {
        let (px, py) = &self.base_point;
        let dx = x - px;
        if dx.is_zero() {
            return None;
        }
        Some((y - py) / dx)
    }

    /// Fiber coordinates (s, v) of a surface point (x, y, w) on the pencil
    /// line with parameter t; the base point itself has no fiber coordinates.
    pub fn fiber_coords(&self, x: &Rat, _y: &Rat, w: &Rat) -> Option<(Rat, Rat)> {
        let s = x - &self.base_point.0;
        if s.is_zero() {
            return None;
        }
        Some((s.clone(), w / &s))
    }
}

/// Discriminant of a quartic a4·s⁴ + ... + a0 with coefficients in Q[t].
fn quartic_disc_poly(c: &[Poly1; 5]) -> Poly1 {
    let (e, d, cc, b, a) = (&c[0], &c[1], &c[2], &c[3], &c[4]);
    let n = |k: i64| Poly1::constant(crate::arith::rat::rat_int(k));
    let mut terms: Vec<Poly1> = Vec::new();
    let mut push = |k: i64, parts: &[&Poly1]| {
        let mut acc = n(k);
        for p in parts {
            acc = &acc * *p;
        }
        terms.push(acc);
    };
    push(256, &[a, a, a, e, e, e]);
    push(-192, &[a, a, b, d, e, e]);
    push(-128, &[a, a, cc, cc, e, e]);
    push(144, &[a, a, cc, d, d, e]);
    push(-27, &[a, a, d, d, d, d]);
    push(144, &[a, b, b, cc, e, e]);
    push(-6, &[a, b, b, d, d, e]);
    push(-80, &[a, b, cc, cc, d, e]);
    push(18, &[a, b, cc, d, d, d]);
    push(16, &[a, cc, cc, cc, cc, e]);
    push(-4, &[a, cc, cc, cc, d, d]);
    push(-27, &[b, b, b, b, e, e]);
    push(18, &[b, b, b, cc, d, e]);
    push(-4, &[b, b, b, d, d, d]);
    push(-4, &[b, b, cc, cc, cc, e]);
    push(1, &[b, b, cc, cc, d, d]);
    let mut acc = Poly1::zero();
    for t in terms {
        acc = &acc + &t;
    }
    acc
}
