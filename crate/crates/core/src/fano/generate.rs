//! Threefold point generation: slice a tangent quadric section into a
//! singular sextic, hand the slice surface to the plane fibration engine, and
//! lift every generated surface point back through z = q(x).

use super::model::{FanoError, RamificationPoint, V1Model};
use super::section::{tangent_section_at, TangentSectionFamily};
use crate::arith::rat::Rat;
use crate::error::FibrationError;
use crate::fibration::{
    build_fibration, find_multisections, generate_points, DoubleCoverSurface, GenConfig,
    GenerationReport,
};
use crate::json::rat_string;
use crate::plane::PlaneCurve;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug)]
pub struct V1GenConfig {
    /// Lattice height bound for family member enumeration.
    pub member_height: u32,
    /// Height bound of the multisection sweep on each slice surface.
    pub search_height: u32,
    /// Fiber-scan configuration for the surface engine.
    pub surface: GenConfig,
    /// Stop after the first family member that emits points.
    pub stop_after_first_success: bool,
}

impl Default for V1GenConfig {
    fn default() -> Self {
        V1GenConfig {
            member_height: 1,
            search_height: 12,
            surface: GenConfig::default(),
            stop_after_first_success: true,
        }
    }
}

/// A generated rational point of the threefold, in the chart normalization of
/// its run, satisfying w² = g(x, z) exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldPoint {
    #[serde(with = "rat_string")]
    pub x0: Rat,
    #[serde(with = "rat_string")]
    pub x1: Rat,
    #[serde(with = "rat_string")]
    pub x2: Rat,
    #[serde(with = "rat_string")]
    pub z: Rat,
    #[serde(with = "rat_string")]
    pub w: Rat,
    /// Index of the family member whose slice produced the point.
    pub member: usize,
    #[serde(with = "rat_string")]
    pub t: Rat,
    pub k: u32,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct V1Report {
    pub family_dimension: usize,
    pub members_tried: u64,
    pub members_sliced_degenerate: u64,
    pub members_wrong_multiplicity: u64,
    pub members_without_multisection: u64,
    pub members_generated: u64,
    pub points_emitted: u64,
    /// Distinct base directions (vertical fibers) hit by emitted points.
    pub distinct_vertical_fibers: u64,
    pub surface_reports: Vec<GenerationReport>,
    /// Set when generation was skipped entirely (zero caps).
    pub no_generation_attempted: bool,
}

/// Run the full pipeline at a ramification point. Points are emitted in
/// member-then-engine order; the run is deterministic for a fixed config.
pub fn v1_generate(
    model: &V1Model,
    p: &RamificationPoint,
    cfg: &V1GenConfig,
) -> Result<(Vec<ThreefoldPoint>, V1Report), FanoError> {
    // chart normalization: rotate so the tangency point has x0 != 0
    let slot = (0..3)
        .find(|&i| !p.x[i].is_zero())
        .ok_or(FanoError::ZeroDirection)?;
    let rot_model = model.rotate_vars(slot);
    let rot_p = p.rotate_left(slot);
    debug_assert!(rot_model.on_ramification(&rot_p));

    let family = tangent_section_at(&rot_model, &rot_p)?;
    let mut report = V1Report {
        family_dimension: family.dimension(),
        ..V1Report::default()
    };
    let mut points: Vec<ThreefoldPoint> = Vec::new();

    if cfg.member_height == 0 && cfg.surface.t_height == 0 {
        report.no_generation_attempted = true;
        return Ok((points, report));
    }

    for (member_index, (_, quadric)) in family
        .members_by_height(cfg.member_height)
        .into_iter()
        .enumerate()
    {
        report.members_tried += 1;
        match run_member(&rot_model, &family, &quadric, member_index, cfg) {
            MemberOutcome::SliceDegenerate => report.members_sliced_degenerate += 1,
            MemberOutcome::WrongMultiplicity => report.members_wrong_multiplicity += 1,
            MemberOutcome::NoMultisection(surface_report) => {
                report.members_without_multisection += 1;
                if let Some(r) = surface_report {
                    report.surface_reports.push(r);
                }
            }
            MemberOutcome::Generated {
                pts,
                surface_report,
            } => {
                report.surface_reports.push(surface_report);
                if !pts.is_empty() {
                    report.members_generated += 1;
                }
                let had_points = !pts.is_empty();
                points.extend(pts);
                if had_points && cfg.stop_after_first_success {
                    break;
                }
            }
        }
    }

    // rotate emitted points back to the original coordinate order
    if slot != 0 {
        for pt in &mut points {
            let rotated = [pt.x0.clone(), pt.x1.clone(), pt.x2.clone()];
            // rotate right by `slot`: undo the left rotation of the inputs
            let orig = |i: usize| rotated[(i + 3 - slot) % 3].clone();
            pt.x0 = orig(0);
            pt.x1 = orig(1);
            pt.x2 = orig(2);
        }
    }
    for pt in &points {
        assert!(
            model.contains(&[pt.x0.clone(), pt.x1.clone(), pt.x2.clone()], &pt.z, &pt.w),
            "emitted threefold point must satisfy the model equation exactly"
        );
    }

    report.points_emitted = points.len() as u64;
    let mut dirs: Vec<(Rat, Rat, Rat)> = points
        .iter()
        .map(|p| (p.x0.clone(), p.x1.clone(), p.x2.clone()))
        .collect();
    dirs.sort();
    dirs.dedup();
    report.distinct_vertical_fibers = dirs.len() as u64;
    Ok((points, report))
}

enum MemberOutcome {
    SliceDegenerate,
    WrongMultiplicity,
    NoMultisection(Option<GenerationReport>),
    Generated {
        pts: Vec<ThreefoldPoint>,
        surface_report: GenerationReport,
    },
}

fn run_member(
    model: &V1Model,
    family: &TangentSectionFamily,
    quadric: &crate::arith::form3::Form3,
    member_index: usize,
    cfg: &V1GenConfig,
) -> MemberOutcome {
    let p = &family.tangency;
    let Ok(slice_form) = model.slice(quadric) else {
        return MemberOutcome::SliceDegenerate;
    };
    let chart = slice_form.dehomogenize();
    if chart.total_degree() != Some(6) {
        return MemberOutcome::SliceDegenerate;
    }
    let Ok(curve) = PlaneCurve::new(chart) else {
        return MemberOutcome::SliceDegenerate;
    };
    if !curve.is_reduced() {
        return MemberOutcome::SliceDegenerate;
    }
    let base = (p.x[1].clone(), p.x[2].clone());
    if curve.multiplicity_at(&base.0, &base.1) != 2 {
        return MemberOutcome::WrongMultiplicity;
    }
    let surface = match DoubleCoverSurface::new(curve) {
        Ok(s) => s,
        Err(_) => return MemberOutcome::SliceDegenerate,
    };
    let fib = match build_fibration(surface, base.clone()) {
        Ok(f) => f,
        Err(FibrationError::Degenerate(_)) => return MemberOutcome::SliceDegenerate,
        Err(_) => return MemberOutcome::WrongMultiplicity,
    };
    let multisections = find_multisections(&fib, cfg.search_height);
    let Some(ms) = multisections.first() else {
        return MemberOutcome::NoMultisection(None);
    };
    let (surface_points, surface_report) = generate_points(&fib, ms, 0, &cfg.surface);
    let mut pts = Vec::new();
    let qc = quadric.dehomogenize();
    for sp in surface_points {
        // lift through the section: z = q(1, x1, x2)
        let z = qc.eval(&sp.x, &sp.y);
        let x = [Rat::one(), sp.x.clone(), sp.y.clone()];
        let w = sp.w.clone();
        assert!(
            model.contains(&x, &z, &w),
            "lifted point must satisfy the threefold equation exactly"
        );
        pts.push(ThreefoldPoint {
            x0: x[0].clone(),
            x1: x[1].clone(),
            x2: x[2].clone(),
            z,
            w,
            member: member_index,
            t: sp.t,
            k: sp.k,
        });
    }
    MemberOutcome::Generated {
        pts,
        surface_report,
    }
}

/// Re-check a batch of threefold points against the model; used by the
/// verification interface.
pub fn verify_threefold_points(model: &V1Model, pts: &[ThreefoldPoint]) -> bool {
    pts.iter()
        .all(|p| model.contains(&[p.x0.clone(), p.x1.clone(), p.x2.clone()], &p.z, &p.w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::pinned_v1;

    #[test]
    fn zero_caps_mean_no_generation_attempted() {
        let (model, p) = pinned_v1();
        let cfg = V1GenConfig {
            member_height: 0,
            search_height: 0,
            surface: GenConfig {
                t_height: 0,
                k_max: 0,
                height_cap_bits: 1000,
            },
            stop_after_first_success: true,
        };
        let (pts, rep) = v1_generate(&model, &p, &cfg).unwrap();
        assert!(pts.is_empty());
        assert!(rep.no_generation_attempted);
        assert_eq!(rep.points_emitted, 0);
    }

    #[test]
    fn pipeline_emits_verified_points_on_the_fixture() {
        let (model, p) = pinned_v1();
        let cfg = V1GenConfig {
            member_height: 0,
            search_height: 8,
            surface: GenConfig {
                t_height: 10,
                k_max: 2,
                height_cap_bits: 50_000,
            },
            stop_after_first_success: true,
        };
        let (pts, rep) = v1_generate(&model, &p, &cfg).unwrap();
        assert_eq!(rep.family_dimension, 3);
        assert!(!pts.is_empty());
        assert!(verify_threefold_points(&model, &pts));
        // points lie on the section surface of their provenance: member 0 is
        // the constant section z = 1
        for pt in &pts {
            assert_eq!(pt.member, 0);
            assert_eq!(pt.z, crate::arith::rat::rat_int(1));
        }
    }
}
