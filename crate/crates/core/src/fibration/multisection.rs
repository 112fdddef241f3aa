//! Multisection search.
//!
//! A multisection here is the cover preimage of a plane line that is tangent
//! to the branch sextic at a smooth point whose tangent line meets the curve
//! transversally in a further rational point r'. The preimage is then tangent
//! to the fiber through r' at the (ramification) lift of r', and that fiber
//! must be smooth — the certificate that makes the group-law engine
//! applicable. Acceptance of a candidate checks, in order:
//!
//! 1. the tangent line avoids the base point (otherwise its preimage is a
//!    fiber component, not a multisection);
//! 2. the tangency point r' is not vertically above the base point, so the
//!    fiber through it has a finite pencil parameter;
//! 3. the pencil line through r' is transversal to the branch there (it must
//!    not be the tangent line of the branch at r');
//! 4. the fiber through r' is smooth (nonvanishing pencil discriminant);
//! 5. the quartic model of the multisection — the line restriction of the
//!    branch with the double root at the tangency divided out — is
//!    square-free of degree 3 or 4.

use super::EllipticFibration;
use crate::arith::poly1::Poly1;
use crate::arith::rat::Rat;
use crate::elliptic::QuarticModel;
use crate::heights::{height_u64, rationals_up_to_height};
use crate::plane::{point_sort_key, PlaneCurve, ProjLine, ProjPoint};
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub enum MultisectionSource {
    /// Tangent-correspondence construction: tangent at r, transversal at r'.
    Tangent { r: (Rat, Rat), r_prime: (Rat, Rat) },
    /// Six-line pipeline: the line through the second double point q and a
    /// smooth crossing point of the configuration.
    SecondPencil { q: ProjPoint, crossing: (Rat, Rat) },
}

#[derive(Clone, Debug)]
pub struct Multisection {
    /// The plane line whose cover preimage is the multisection.
    pub line: ProjLine,
    /// v² = q(σ): the line restriction of the branch with the square factor
    /// at the tangency divided into the cover coordinate.
    pub model: QuarticModel,
    /// Pencil parameter of the smooth fiber the multisection is tangent to.
    pub witness_t: Rat,
    /// Fiber coordinates (s, 0) of the tangency point: a ramification point
    /// of the fiber.
    pub witness_point: (Rat, Rat),
    pub source: MultisectionSource,
}

/// Height-bounded sweep for multisections from the tangent correspondence.
/// Candidate tangency points r run over rational points of the branch with
/// coordinate height at most `search_height`; results are ordered by
/// (height of r, r, height of r', r') and deduplicated by line.
pub fn find_multisections(fib: &EllipticFibration, search_height: u32) -> Vec<Multisection> {
    let branch = fib.surface().branch();
    let mut found: Vec<(SortKey, Multisection)> = Vec::new();
    for c in rationals_up_to_height(search_height) {
        let Ok(points) = branch.points_with_x(&c) else {
            continue;
        };
        for (x, y) in points {
            if height_u64(&y) > search_height as u64 {
                continue;
            }
            if !branch.is_smooth_point(&x, &y) {
                continue;
            }
            let Ok(pairs) = branch.tangent_pairs(&x, &y) else {
                continue;
            };
            for pair in pairs {
                if let Some(ms) = accept_tangent_candidate(
                    fib,
                    branch,
                    &pair.r,
                    &pair.r_prime,
                    &pair.tangent_line,
                ) {
                    let key = (point_sort_key(&pair.r), point_sort_key(&pair.r_prime));
                    found.push((key, ms));
                }
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<Multisection> = Vec::new();
    for (_, ms) in found {
        if out.iter().all(|m| m.line != ms.line) {
            out.push(ms);
        }
    }
    out
}

type SortKey = ((u64, Rat, Rat), (u64, Rat, Rat));

fn accept_tangent_candidate(
    fib: &EllipticFibration,
    branch: &PlaneCurve,
    r: &(Rat, Rat),
    r_prime: &(Rat, Rat),
    tangent: &ProjLine,
) -> Option<Multisection> {
    let (px, py) = fib.base_point();
    // (1) the multisection line must not pass through the base point
    if tangent.contains_affine(px, py) {
        return None;
    }
    // (2) finite pencil parameter at the tangency fiber
    let t0 = fib.parameter_of(&r_prime.0, &r_prime.1)?;
    // (3) pencil line transversal to the branch at r'
    let tangent_at_rp = branch.tangent_line_at(&r_prime.0, &r_prime.1).ok()?;
    if tangent_at_rp == *tangent {
        return None;
    }
    if tangent_at_rp == fib.pencil_line(&t0) {
        return None;
    }
    // (4) the tangency fiber is smooth
    if fib.disc_t().eval(&t0).is_zero() {
        return None;
    }
    // (5) square-free elliptic model for the multisection itself
    let q = restricted_cover_model(branch, tangent, r)?;
    let deg = q.degree()?;
    if !(3..=4).contains(&deg) {
        return None;
    }
    let model = QuarticModel::new(q, None).ok()?;
    if model.is_degenerate() {
        return None;
    }
    let _ = py;
    let witness_s = &r_prime.0 - px;
    debug_assert!(!witness_s.is_zero());
    debug_assert!(fib.fiber_at(&t0).quartic.eval(&witness_s).is_zero());
    Some(Multisection {
        line: tangent.clone(),
        model,
        witness_t: t0,
        witness_point: (witness_s, Rat::zero()),
        source: MultisectionSource::Tangent {
            r: r.clone(),
            r_prime: r_prime.clone(),
        },
    })
}

/// Restrict the branch equation to a line and divide out the square factor at
/// the given double intersection point; the leftover quartic is the cover
/// model of the line preimage.
pub fn restricted_cover_model(
    branch: &PlaneCurve,
    line: &ProjLine,
    at: &(Rat, Rat),
) -> Option<Poly1> {
    let ((ax, ay), (dx, dy)) = line.affine_parametrization()?;
    let restricted = branch.equation().restrict_to_line((&ax, &ay), (&dx, &dy));
    if restricted.is_zero() {
        return None;
    }
    let sigma = if !dx.is_zero() {
        (&at.0 - &ax) / &dx
    } else {
        (&at.1 - &ay) / &dy
    };
    let lin = Poly1::new(vec![-sigma, Rat::one()]);
    restricted.div_exact(&lin).ok()?.div_exact(&lin).ok()
}
