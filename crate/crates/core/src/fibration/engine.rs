//! The point-generation engine.
//!
//! For each rational pencil parameter in height order: intersect the
//! multisection line with the pencil line, lift the intersection to the cover
//! when the branch value is a perfect square, convert the fiber quartic with
//! the lifted point marked to a Weierstrass curve, and test the difference
//! class of the two conjugate lifts for torsion. Non-torsion classes generate:
//! multiples map back through the model to new exact points of the surface.
//!
//! Fibers are independent; the scan runs through the ordered parallel map and
//! merges results in enumeration order, so output bytes never depend on the
//! thread count. Every emitted point is checked against the surface equation
//! before emission — an internal panic here means a bug, never bad output.

use super::multisection::Multisection;
use super::EllipticFibration;
use crate::arith::rat::{sqrt_exact, Rat};
use crate::elliptic::{quartic_to_weierstrass, QuarticModel};
use crate::error::EllipticError;
use crate::heights::rationals_up_to_height;
use crate::json::rat_string;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Scan fibers with pencil parameter of height up to this bound.
    pub t_height: u32,
    /// Emit multiples 1..=k_max of each non-torsion generator.
    pub k_max: u32,
    /// Coordinate bit-length cap for group-law arithmetic.
    pub height_cap_bits: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            t_height: 50,
            k_max: 8,
            height_cap_bits: 100_000,
        }
    }
}

/// One generated rational point of the surface w² = f(x, y), tagged with its
/// fiber, group-law multiple and multisection of origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedPoint {
    #[serde(with = "rat_string")]
    pub t: Rat,
    pub k: u32,
    #[serde(with = "rat_string")]
    pub x: Rat,
    #[serde(with = "rat_string")]
    pub y: Rat,
    #[serde(with = "rat_string")]
    pub w: Rat,
    pub multisection: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub fibers_visited: u64,
    pub degenerate_fibers: u64,
    /// Pencil member parallel to the multisection line (no affine meet).
    pub no_affine_intersection: u64,
    /// Intersection exists but the branch value is not a rational square.
    pub no_rational_lift: u64,
    pub fibers_with_lift: u64,
    /// Fibers whose lift produced only torsion (including ramified w = 0).
    pub torsion_only_fibers: u64,
    pub nontorsion_fibers: u64,
    pub points_emitted: u64,
    pub height_overflow_fibers: u64,
    /// k values skipped because a multiple landed on the model-map
    /// exceptional set.
    pub map_undefined_skips: u64,
}

/// A rational point of the cover over the multisection-fiber intersection:
/// surface coordinates plus its fiber-model coordinates (s, v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedPoint {
    pub x: Rat,
    pub y: Rat,
    pub w: Rat,
    pub s: Rat,
    pub v: Rat,
}

/// Intersect the multisection line with the pencil line at parameter t and
/// lift to the cover. Returns no points when the lines are parallel or the
/// branch value is not a rational square, one point on the ramification
/// locus (w = 0), and the conjugate pair (±w) otherwise. Errors only when
/// the pencil member coincides with the multisection line.
pub fn intersect_multisection_fiber(
    fib: &EllipticFibration,
    ms: &Multisection,
    t: &Rat,
) -> Result<Vec<LiftedPoint>, crate::error::FibrationError> {
    let pencil = fib.pencil_line(t);
    if pencil == ms.line {
        return Err(crate::error::FibrationError::FiberDirection);
    }
    let meet = pencil.intersect(&ms.line).expect("distinct lines meet");
    let Some((x, y)) = meet.to_affine() else {
        return Ok(Vec::new());
    };
    let value = fib.surface().branch().equation().eval(&x, &y);
    let Some(w) = sqrt_exact(&value) else {
        return Ok(Vec::new());
    };
    let s = &x - &fib.base_point().0;
    debug_assert!(!s.is_zero(), "multisection line avoids the base point");
    let v = &w / &s;
    let mut out = vec![LiftedPoint {
        x: x.clone(),
        y: y.clone(),
        w: w.clone(),
        s: s.clone(),
        v: v.clone(),
    }];
    if !w.is_zero() {
        out.push(LiftedPoint {
            x,
            y,
            w: -w,
            s,
            v: -v,
        });
    }
    Ok(out)
}

enum FiberStatus {
    Degenerate,
    NoAffineIntersection,
    NoRationalLift,
    TorsionOnly,
    NonTorsion,
    HeightOverflow,
}

struct FiberResult {
    status: FiberStatus,
    points: Vec<GeneratedPoint>,
    map_skips: u64,
}

/// Run the engine over every smooth fiber with parameter height at most
/// `cfg.t_height`, in deterministic enumeration order.
pub fn generate_points(
    fib: &EllipticFibration,
    ms: &Multisection,
    ms_index: usize,
    cfg: &GenConfig,
) -> (Vec<GeneratedPoint>, GenerationReport) {
    let ts = rationals_up_to_height(cfg.t_height);
    let results = crate::par::map_ordered(ts, |t| fiber_task(fib, ms, ms_index, cfg, t));
    let mut report = GenerationReport::default();
    let mut points = Vec::new();
    for res in results {
        report.fibers_visited += 1;
        report.map_undefined_skips += res.map_skips;
        match res.status {
            FiberStatus::Degenerate => report.degenerate_fibers += 1,
            FiberStatus::NoAffineIntersection => report.no_affine_intersection += 1,
            FiberStatus::NoRationalLift => report.no_rational_lift += 1,
            FiberStatus::TorsionOnly => {
                report.fibers_with_lift += 1;
                report.torsion_only_fibers += 1;
            }
            FiberStatus::NonTorsion => {
                report.fibers_with_lift += 1;
                report.nontorsion_fibers += 1;
            }
            FiberStatus::HeightOverflow => report.height_overflow_fibers += 1,
        }
        report.points_emitted += res.points.len() as u64;
        points.extend(res.points);
    }
    (points, report)
}

fn fiber_task(
    fib: &EllipticFibration,
    ms: &Multisection,
    ms_index: usize,
    cfg: &GenConfig,
    t: Rat,
) -> FiberResult {
    let no_points = |status: FiberStatus| FiberResult {
        status,
        points: Vec::new(),
        map_skips: 0,
    };

    let fiber = fib.fiber_at(&t);
    if !fiber.smooth {
        return no_points(FiberStatus::Degenerate);
    }
    let lifts = match intersect_multisection_fiber(fib, ms, &t) {
        Ok(lifts) => lifts,
        // the multisection line never passes through the base point, so an
        // accepted multisection never coincides with a pencil member; treat
        // the guard as a degenerate skip
        Err(_) => return no_points(FiberStatus::Degenerate),
    };
    let Some(lift) = lifts.first() else {
        // distinguish "no affine meet" from "meet without a rational lift"
        let pencil = fib.pencil_line(&t);
        let affine = pencil
            .intersect(&ms.line)
            .map(|p| p.is_affine())
            .unwrap_or(false);
        return no_points(if affine {
            FiberStatus::NoRationalLift
        } else {
            FiberStatus::NoAffineIntersection
        });
    };
    if lift.w.is_zero() {
        // ramification point: the conjugate lifts coincide, the difference
        // class is the identity
        return no_points(FiberStatus::TorsionOnly);
    }
    let (base_x, base_y) = fib.base_point();
    let (s, v) = (lift.s.clone(), lift.v.clone());
    debug_assert_eq!(&v * &v, fiber.quartic.eval(&s));

    // mark the conjugate lift; the difference class [lift - conjugate] is
    // then exactly the forward image of the lift, and multiples map back
    // through the same chart
    let model = match QuarticModel::new(fiber.quartic.clone(), Some((s.clone(), -v.clone()))) {
        Ok(m) => m,
        Err(_) => return no_points(FiberStatus::Degenerate),
    };
    let Ok((curve, _origin, map)) = quartic_to_weierstrass(&model) else {
        return no_points(FiberStatus::Degenerate);
    };
    let curve = curve.with_height_cap(cfg.height_cap_bits);
    let generator = map.forward(&s, &v).expect("lift lies on the fiber quartic");

    match curve.torsion_order(&generator) {
        Err(EllipticError::HeightOverflow) => no_points(FiberStatus::HeightOverflow),
        Err(e) => unreachable!("torsion test on a curve point: {e}"),
        Ok(Some(_)) => no_points(FiberStatus::TorsionOnly),
        Ok(None) => {
            let mut points = Vec::new();
            let mut map_skips = 0;
            let mut acc = generator.clone();
            let mut status = FiberStatus::NonTorsion;
            for k in 1..=cfg.k_max {
                if k > 1 {
                    match curve.add(&acc, &generator) {
                        Ok(next) => acc = next,
                        Err(EllipticError::HeightOverflow) => {
                            status = FiberStatus::HeightOverflow;
                            break;
                        }
                        Err(e) => unreachable!("group law on curve points: {e}"),
                    }
                }
                match map.backward(&acc) {
                    Ok((sk, vk)) => {
                        let px = base_x + &sk;
                        let py = base_y + &(&sk * &t);
                        let pw = &vk * &sk;
                        assert!(
                            fib.surface().contains(&px, &py, &pw),
                            "emitted point must satisfy the surface equation exactly"
                        );
                        assert_eq!(
                            fib.parameter_of(&px, &py),
                            Some(t.clone()),
                            "emitted point must lie on its pencil line"
                        );
                        points.push(GeneratedPoint {
                            t: t.clone(),
                            k,
                            x: px,
                            y: py,
                            w: pw,
                            multisection: ms_index,
                        });
                    }
                    Err(EllipticError::MapUndefined) => map_skips += 1,
                    Err(e) => unreachable!("backward map on a curve point: {e}"),
                }
            }
            // distinct multiples of a non-torsion class give distinct points
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    assert!(
                        points[i].x != points[j].x
                            || points[i].y != points[j].y
                            || points[i].w != points[j].w,
                        "distinct k must emit distinct points"
                    );
                }
            }
            FiberResult {
                status,
                points,
                map_skips,
            }
        }
    }
}

/// Re-check a batch of emitted points against the surface equation; used by
/// the verification interface.
pub fn verify_points(branch: &crate::plane::PlaneCurve, pts: &[GeneratedPoint]) -> bool {
    pts.iter()
        .all(|p| &p.w * &p.w == branch.equation().eval(&p.x, &p.y))
}
