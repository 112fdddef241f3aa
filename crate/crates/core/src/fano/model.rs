//! The weighted hypersurface model w² = g(x0, x1, x2, z) with
//! g = c·z³ + q2(x)·z² + q4(x)·z + q6(x), of weighted degree 6 for weights
//! (1, 1, 1, 2) on (x, z). Vertical lines x = const carry cubic fibers in z;
//! the z-discriminant of g cuts out the locus of degenerate fibers.

use crate::arith::form3::Form3;
use crate::arith::rat::{rat_int, Rat};
use crate::elliptic::WeierstrassCurve;
use crate::error::DegeneracyReport;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FanoError {
    Degenerate(DegeneracyReport),
    FormDegree { expected: u32, got: u32 },
    PointNotOnRamification,
    GraphConditionFailed,
    OnDiscriminantLocus,
    ZeroDiscriminant,
    ZeroDirection,
}

impl fmt::Display for FanoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanoError::Degenerate(r) => write!(f, "degenerate: {r}"),
            FanoError::FormDegree { expected, got } => {
                write!(f, "form has degree {got}, expected {expected}")
            }
            FanoError::PointNotOnRamification => {
                write!(f, "point is not on the ramification divisor")
            }
            FanoError::GraphConditionFailed => {
                write!(
                    f,
                    "z-partial vanishes: ramification divisor is not a graph over the base there"
                )
            }
            FanoError::OnDiscriminantLocus => write!(f, "point lies on the discriminant locus"),
            FanoError::ZeroDiscriminant => write!(f, "fiber discriminant vanishes identically"),
            FanoError::ZeroDirection => write!(f, "direction must be a nonzero triple"),
        }
    }
}

impl std::error::Error for FanoError {}

#[derive(Clone, Debug)]
pub struct V1Model {
    c: Rat,
    q2: Form3,
    q4: Form3,
    q6: Form3,
}

/// A rational point of the ramification divisor R = {g = 0, w = 0}, in
/// weighted homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationPoint {
    pub x: [Rat; 3],
    pub z: Rat,
}

impl V1Model {
    pub fn new(c: Rat, q2: Form3, q4: Form3, q6: Form3) -> Result<V1Model, FanoError> {
        if c.is_zero() {
            return Err(FanoError::Degenerate(DegeneracyReport::VertexCubic));
        }
        for (form, want) in [(&q2, 2u32), (&q4, 4), (&q6, 6)] {
            if form.degree() != want {
                return Err(FanoError::FormDegree {
                    expected: want,
                    got: form.degree(),
                });
            }
        }
        Ok(V1Model { c, q2, q4, q6 })
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn q2(&self) -> &Form3 {
        &self.q2
    }

    pub fn q4(&self) -> &Form3 {
        &self.q4
    }

    pub fn q6(&self) -> &Form3 {
        &self.q6
    }

    pub fn eval_g(&self, x: &[Rat; 3], z: &Rat) -> Rat {
        let z2 = z * z;
        let z3 = &z2 * z;
        &self.c * z3 + self.q2.eval(x) * z2 + self.q4.eval(x) * z + self.q6.eval(x)
    }

    pub fn g_z(&self, x: &[Rat; 3], z: &Rat) -> Rat {
        rat_int(3) * &self.c * z * z + rat_int(2) * self.q2.eval(x) * z + self.q4.eval(x)
    }

    pub fn g_x(&self, var: usize, x: &[Rat; 3], z: &Rat) -> Rat {
        self.q2.partial(var).eval(x) * z * z
            + self.q4.partial(var).eval(x) * z
            + self.q6.partial(var).eval(x)
    }

    /// Membership of a threefold point: w² = g(x, z).
    pub fn contains(&self, x: &[Rat; 3], z: &Rat, w: &Rat) -> bool {
        w * w == self.eval_g(x, z)
    }

    pub fn on_ramification(&self, p: &RamificationPoint) -> bool {
        self.eval_g(&p.x, &p.z).is_zero()
    }

    /// Cyclic rotation of the x-coordinates; z and w are untouched.
    pub fn rotate_vars(&self, new_zero: usize) -> V1Model {
        V1Model {
            c: self.c.clone(),
            q2: self.q2.rotate_vars(new_zero),
            q4: self.q4.rotate_vars(new_zero),
            q6: self.q6.rotate_vars(new_zero),
        }
    }

    /// The fiber cubic w² = c·z³ + q2(x̂)z² + q4(x̂)z + q6(x̂) over a
    /// direction, with its short Weierstrass model when smooth.
    pub fn vertical_fiber(&self, xhat: &[Rat; 3]) -> Result<VerticalFiber, FanoError> {
        if xhat.iter().all(|v| v.is_zero()) {
            return Err(FanoError::ZeroDirection);
        }
        let cubic = [
            self.q6.eval(xhat),
            self.q4.eval(xhat),
            self.q2.eval(xhat),
            self.c.clone(),
        ];
        // disc of a·z³ + b·z² + c·z + d
        let (a, b, cc, d) = (&cubic[3], &cubic[2], &cubic[1], &cubic[0]);
        let disc = rat_int(18) * a * b * cc * d - rat_int(4) * b * b * b * d + b * b * cc * cc
            - rat_int(4) * a * cc * cc * cc
            - rat_int(27) * a * a * d * d;
        // scale to a monic model: (c·w)² = (c·z)³ + q2(c·z)² + c·q4(c·z) + c²·q6
        let p2 = cubic[2].clone();
        let p1 = &self.c * &cubic[1];
        let p0 = &self.c * &self.c * &cubic[0];
        let three = rat_int(3);
        let a_coef = &p1 - &(&p2 * &p2 / &three);
        let b_coef = rat_int(2) * &p2 * &p2 * &p2 / rat_int(27) - &p2 * &p1 / &three + &p0;
        let weierstrass = WeierstrassCurve::new(a_coef, b_coef).ok();
        let smooth = !disc.is_zero();
        debug_assert_eq!(smooth, weierstrass.is_some());
        Ok(VerticalFiber {
            cubic,
            disc,
            weierstrass,
        })
    }

    /// z-discriminant of g as a degree-12 form in x; its zero set is exactly
    /// where the fiber cubic has a multiple root.
    pub fn disc_locus(&self) -> Result<Form3, FanoError> {
        let a = Form3::from_terms(0, [(0, 0, 0, self.c.clone())]).expect("constant form");
        let b = &self.q2;
        let c = &self.q4;
        let d = &self.q6;
        // 18abcd - 4b³d + b²c² - 4ac³ - 27a²d²
        let mut acc = a.mul(b).mul(c).mul(d).scale(&rat_int(18));
        acc = acc.add(&b.mul(b).mul(b).mul(d).scale(&rat_int(-4)));
        acc = acc.add(&b.mul(b).mul(c).mul(c));
        acc = acc.add(&a.mul(c).mul(c).mul(c).scale(&rat_int(-4)));
        acc = acc.add(&a.mul(&a).mul(d).mul(d).scale(&rat_int(-27)));
        if acc.is_zero() {
            return Err(FanoError::ZeroDiscriminant);
        }
        Ok(acc)
    }

    /// The slice sextic form g(x, q(x)) of a degree-2 section z = q(x).
    pub fn slice(&self, quadric: &Form3) -> Result<Form3, FanoError> {
        if quadric.degree() != 2 {
            return Err(FanoError::FormDegree {
                expected: 2,
                got: quadric.degree(),
            });
        }
        let c_form = Form3::from_terms(0, [(0, 0, 0, self.c.clone())]).expect("constant form");
        let q = quadric;
        let q_sq = q.mul(q);
        let q_cu = q_sq.mul(q);
        let mut acc = c_form.mul(&q_cu);
        acc = acc.add(&self.q2.mul(&q_sq));
        acc = acc.add(&self.q4.mul(q));
        acc = acc.add(&self.q6);
        Ok(acc)
    }
}

#[derive(Clone, Debug)]
pub struct VerticalFiber {
    /// Coefficients [z⁰, z¹, z², z³] of the fiber cubic.
    pub cubic: [Rat; 4],
    /// Its z-discriminant.
    pub disc: Rat,
    /// Short Weierstrass model; `None` exactly when the fiber is singular.
    pub weierstrass: Option<WeierstrassCurve>,
}

impl VerticalFiber {
    pub fn is_smooth(&self) -> bool {
        self.weierstrass.is_some()
    }
}

/// Weighted rescale of a point: x ↦ λx fixes the underlying point when z and
/// w scale by λ² and λ³. Convenience for tests and normalization.
pub fn rescale_point(x: &[Rat; 3], z: &Rat, w: &Rat, lam: &Rat) -> ([Rat; 3], Rat, Rat) {
    let l2 = lam * lam;
    let l3 = &l2 * lam;
    ([&x[0] * lam, &x[1] * lam, &x[2] * lam], z * &l2, w * &l3)
}

impl RamificationPoint {
    pub fn new(x: [Rat; 3], z: Rat) -> RamificationPoint {
        RamificationPoint { x, z }
    }

    /// Normalize so the given coordinate equals 1, rescaling z by the square.
    pub fn normalize_at(&self, slot: usize) -> Option<RamificationPoint> {
        if self.x[slot].is_zero() {
            return None;
        }
        let inv = Rat::one() / &self.x[slot];
        let (x, z, _) = rescale_point(&self.x, &self.z, &Rat::zero(), &inv);
        Some(RamificationPoint { x, z })
    }

    pub fn rotate_left(&self, by: usize) -> RamificationPoint {
        let x = [
            self.x[by % 3].clone(),
            self.x[(by + 1) % 3].clone(),
            self.x[(by + 2) % 3].clone(),
        ];
        RamificationPoint {
            x,
            z: self.z.clone(),
        }
    }
}
