//! Quadric sections z = q(x) tangent to the ramification divisor at a chosen
//! point.
//!
//! In the chart x0 = 1 the constraints on the six coefficients of q are
//! linear: the value at the point is pinned, and matching first derivatives
//! of the implicit graph z = φ(x) of the ramification divisor kills the
//! gradient of the slice sextic there. The solution set is an affine space of
//! dimension exactly 3, with the transparent basis (x1-p1)², (x1-p1)(x2-p2),
//! (x2-p2)² of quadrics vanishing to second order at the point.

use super::model::{FanoError, RamificationPoint, V1Model};
use crate::arith::form3::Form3;
use crate::arith::poly2::Poly2;
use crate::arith::rat::{rat_int, Rat};
use num_traits::{One, Zero};

/// A section z = q(x) whose slice sextic is singular at the tangency point.
#[derive(Clone, Debug)]
pub struct QuadricSection {
    pub quadric: Form3,
    pub tangency: RamificationPoint,
}

/// The affine 3-parameter family of tangent quadric sections at a point.
/// Members are base + λ0·b0 + λ1·b1 + λ2·b2.
#[derive(Clone, Debug)]
pub struct TangentSectionFamily {
    pub base: Form3,
    pub basis: [Form3; 3],
    pub tangency: RamificationPoint,
}

impl TangentSectionFamily {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn member(&self, lambda: &[Rat; 3]) -> Form3 {
        let mut acc = self.base.clone();
        for (l, b) in lambda.iter().zip(self.basis.iter()) {
            acc = acc.add(&b.scale(l));
        }
        acc
    }

    /// Integer lattice members with max|λ| <= bound, ordered by
    /// (height, λ0, λ1, λ2); the base member λ = 0 comes first.
    pub fn members_by_height(&self, bound: u32) -> Vec<([Rat; 3], Form3)> {
        let b = bound as i64;
        let mut lams: Vec<(i64, i64, i64, i64)> = Vec::new();
        for l0 in -b..=b {
            for l1 in -b..=b {
                for l2 in -b..=b {
                    let h = l0.abs().max(l1.abs()).max(l2.abs());
                    lams.push((h, l0, l1, l2));
                }
            }
        }
        lams.sort_unstable();
        lams.into_iter()
            .map(|(_, l0, l1, l2)| {
                let lambda = [rat_int(l0), rat_int(l1), rat_int(l2)];
                let member = self.member(&lambda);
                (lambda, member)
            })
            .collect()
    }
}

/// Solve for the family of quadric sections tangent to the ramification
/// divisor at `p`. Preconditions: p lies on R, R is a graph over the x-plane
/// near p (nonvanishing z-partial) and the x-image avoids the discriminant
/// locus. The input point must have x0 != 0; callers rotate coordinates
/// first when it does not.
pub fn tangent_section_at(
    model: &V1Model,
    p: &RamificationPoint,
) -> Result<TangentSectionFamily, FanoError> {
    if !model.on_ramification(p) {
        return Err(FanoError::PointNotOnRamification);
    }
    let p = p.normalize_at(0).ok_or(FanoError::GraphConditionFailed)?;
    let gz = model.g_z(&p.x, &p.z);
    if gz.is_zero() {
        return Err(FanoError::GraphConditionFailed);
    }
    let disc = model.disc_locus()?;
    if disc.eval(&p.x).is_zero() {
        return Err(FanoError::OnDiscriminantLocus);
    }

    // first derivatives of the implicit graph z = φ(x): vᵢ = -gₓᵢ/g_z
    let v1 = -model.g_x(1, &p.x, &p.z) / &gz;
    let v2 = -model.g_x(2, &p.x, &p.z) / &gz;
    let (p1, p2) = (p.x[1].clone(), p.x[2].clone());

    // particular solution: z' + v1(x1-p1) + v2(x2-p2), homogenized
    let mut base = Poly2::zero();
    base.add_term(0, 0, &p.z - &(&v1 * &p1) - &(&v2 * &p2));
    base.add_term(1, 0, v1);
    base.add_term(0, 1, v2);
    let base = Form3::homogenize(&base, 2).expect("degree 2 chart polynomial");

    // kernel: quadrics vanishing to order 2 at (p1, p2)
    let d1 = Poly2::from_terms([(1, 0, Rat::one()), (0, 0, -p1.clone())]);
    let d2 = Poly2::from_terms([(0, 1, Rat::one()), (0, 0, -p2.clone())]);
    let basis = [
        Form3::homogenize(&(&d1 * &d1), 2).expect("degree 2"),
        Form3::homogenize(&(&d1 * &d2), 2).expect("degree 2"),
        Form3::homogenize(&(&d2 * &d2), 2).expect("degree 2"),
    ];

    let family = TangentSectionFamily {
        base,
        basis,
        tangency: p,
    };
    // every representative slices to a sextic singular at the tangency point
    debug_assert!(slice_is_singular_at(model, &family.base, &family.tangency));
    Ok(family)
}

/// Exact check of the section invariant: value and all partials of the slice
/// vanish at the tangency point.
pub fn slice_is_singular_at(model: &V1Model, quadric: &Form3, p: &RamificationPoint) -> bool {
    let Ok(slice) = model.slice(quadric) else {
        return false;
    };
    if !slice.eval(&p.x).is_zero() {
        return false;
    }
    (0..3).all(|v| slice.partial(v).eval(&p.x).is_zero())
}

impl QuadricSection {
    pub fn new(
        model: &V1Model,
        quadric: Form3,
        tangency: RamificationPoint,
    ) -> Result<QuadricSection, FanoError> {
        if quadric.eval(&tangency.x) != tangency.z {
            return Err(FanoError::PointNotOnRamification);
        }
        if !slice_is_singular_at(model, &quadric, &tangency) {
            return Err(FanoError::PointNotOnRamification);
        }
        Ok(QuadricSection { quadric, tangency })
    }
}
