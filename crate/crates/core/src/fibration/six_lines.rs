//! Generation driver for double covers of six-line configurations.
//!
//! The configuration analysis supplies two double points P and Q. Lines
//! through Q restrict the branch with a double root at Q, so their cover
//! preimages are fibers of the second pencil — and each one tangent to a
//! smooth fiber of the P-pencil at the lift of a smooth crossing point serves
//! as a multisection for the P-fibration. The downstream engine is the same.

use super::engine::{generate_points, GenConfig, GeneratedPoint, GenerationReport};
use super::multisection::{restricted_cover_model, Multisection, MultisectionSource};
use super::{build_fibration, DoubleCoverSurface, EllipticFibration};
use crate::arith::rat::Rat;
use crate::elliptic::QuarticModel;
use crate::error::{CurveError, FibrationError};
use crate::heights::rationals_up_to_height;
use crate::plane::{line_product_curve, six_lines_analysis, ProjLine, ProjPoint};
use num_traits::Zero;

#[derive(Debug)]
pub struct SixLineRun {
    pub base_point: (Rat, Rat),
    pub second_point: ProjPoint,
    pub sweep_line: ProjLine,
    pub fibration: EllipticFibration,
    pub multisections: Vec<Multisection>,
    pub points: Vec<GeneratedPoint>,
    pub report: Option<GenerationReport>,
}

/// Full pipeline: analyze the configuration, pick two double points, set up
/// the fibration at the affine one, sweep the free line for multisections,
/// and run the generation engine on the chosen multisection index.
pub fn six_lines_generate(
    lines: &[ProjLine],
    search_height: u32,
    ms_index: usize,
    cfg: &GenConfig,
) -> Result<SixLineRun, FibrationError> {
    let analysis = six_lines_analysis(lines)?;
    let doubles: Vec<&(ProjPoint, u32)> = analysis.iter().filter(|(_, m)| *m == 2).collect();
    // base point: first affine double point in the deterministic point order
    let base = doubles
        .iter()
        .find(|(p, _)| p.is_affine())
        .map(|(p, _)| p.clone())
        .ok_or(FibrationError::Curve(CurveError::NotSingular))?;
    let second = doubles
        .iter()
        .map(|(p, _)| p.clone())
        .find(|p| *p != base)
        .ok_or(FibrationError::Curve(CurveError::NotSingular))?;
    let base_aff = base.to_affine().expect("chosen affine");

    let branch = line_product_curve(lines)?;
    let surface = DoubleCoverSurface::new(branch)?;
    let fib = build_fibration(surface, base_aff.clone())?;

    // the sweep line: first input line through neither distinguished point
    let sweep_line = lines
        .iter()
        .find(|l| !l.contains(&base) && !l.contains(&second))
        .cloned()
        .ok_or(FibrationError::Curve(CurveError::NotSingular))?;

    let multisections =
        second_pencil_multisections(&fib, lines, &sweep_line, &second, search_height);
    let (points, report) = match multisections.get(ms_index) {
        Some(ms) => {
            let (pts, rep) = generate_points(&fib, ms, ms_index, cfg);
            (pts, Some(rep))
        }
        None => (Vec::new(), None),
    };
    Ok(SixLineRun {
        base_point: base_aff,
        second_point: second,
        sweep_line,
        fibration: fib,
        multisections,
        points,
        report,
    })
}

/// Multisections of the P-fibration built from lines through the second
/// double point q, tangent to smooth P-fibers at smooth crossing points of
/// the sweep line.
fn second_pencil_multisections(
    fib: &EllipticFibration,
    all_lines: &[ProjLine],
    sweep_line: &ProjLine,
    q: &ProjPoint,
    search_height: u32,
) -> Vec<Multisection> {
    let branch = fib.surface().branch();
    let (base_x, base_y) = fib.base_point().clone();
    let mut out: Vec<Multisection> = Vec::new();
    let Some(((ax, ay), (dx, dy))) = sweep_line.affine_parametrization() else {
        return out;
    };
    for tau in rationals_up_to_height(search_height) {
        let lx = &ax + &(&dx * &tau);
        let ly = &ay + &(&dy * &tau);
        // crossing point must be smooth on the configuration: on exactly one line
        let on_count = all_lines
            .iter()
            .filter(|l| l.contains_affine(&lx, &ly))
            .count();
        if on_count != 1 {
            continue;
        }
        // finite pencil parameter for the fiber through the crossing
        let Some(t0) = fib.parameter_of(&lx, &ly) else {
            continue;
        };
        if fib.disc_t().eval(&t0).is_zero() {
            continue;
        }
        // multisection line through q and the crossing point
        let crossing = ProjPoint::from_affine(&lx, &ly);
        if crossing == *q {
            continue;
        }
        let Ok(ms_line) = ProjLine::through(q, &crossing) else {
            continue;
        };
        // it must avoid the base point (no fiber component) and be
        // transversal to the sweep line at the crossing
        if ms_line.contains_affine(&base_x, &base_y) {
            continue;
        }
        debug_assert_ne!(ms_line, *sweep_line);
        // cover model: restriction with the double root at q divided out;
        // for q at infinity the degree drop plays that role
        let model_q = if let Some((qx, qy)) = q.to_affine() {
            restricted_cover_model(branch, &ms_line, &(qx, qy))
        } else {
            ms_line
                .affine_parametrization()
                .map(|((px, py), (ux, uy))| {
                    branch.equation().restrict_to_line((&px, &py), (&ux, &uy))
                })
        };
        let Some(model_q) = model_q else { continue };
        let Some(deg) = model_q.degree() else {
            continue;
        };
        if !(3..=4).contains(&deg) {
            continue;
        }
        let Ok(model) = QuarticModel::new(model_q, None) else {
            continue;
        };
        if model.is_degenerate() {
            continue;
        }
        let witness_s = &lx - &base_x;
        if witness_s.is_zero() {
            continue;
        }
        if out.iter().any(|m| m.line == ms_line) {
            continue;
        }
        out.push(Multisection {
            line: ms_line,
            model,
            witness_t: t0,
            witness_point: (witness_s, Rat::zero()),
            source: MultisectionSource::SecondPencil {
                q: q.clone(),
                crossing: (lx, ly),
            },
        });
    }
    out
}
