//! Plane curves of degree at most 6: multiplicities, tangent cones, line
//! intersection profiles and the tangent correspondence.

use super::line::ProjLine;
use super::point::ProjPoint;
use crate::arith::poly1::Poly1;
use crate::arith::poly2::Poly2;
use crate::arith::rat::Rat;
use crate::arith::roots::rational_roots;
use crate::error::CurveError;
use num_traits::{One, Zero};

pub const MAX_CURVE_DEGREE: u32 = 6;

#[derive(Clone, Debug)]
pub struct PlaneCurve {
    f: Poly2,
    degree: u32,
    reduced: bool,
}

impl PlaneCurve {
    /// Build a curve from its affine equation. Reducedness (no repeated
    /// factors) is computed up front; degenerate inputs for the cover
    /// pipeline are gated on this flag downstream.
    pub fn new(f: Poly2) -> Result<PlaneCurve, CurveError> {
        let degree = f.total_degree().ok_or(CurveError::ZeroPolynomial)?;
        if degree > MAX_CURVE_DEGREE {
            return Err(CurveError::DegreeTooLarge(degree));
        }
        let sf = f.square_free_part()?;
        let reduced = sf.total_degree() == Some(degree);
        Ok(PlaneCurve { f, degree, reduced })
    }

    pub fn equation(&self) -> &Poly2 {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn contains(&self, x: &Rat, y: &Rat) -> bool {
        self.f.eval(x, y).is_zero()
    }

    pub fn gradient_at(&self, x: &Rat, y: &Rat) -> (Rat, Rat) {
        (self.f.partial_x().eval(x, y), self.f.partial_y().eval(x, y))
    }

    /// Order of vanishing at an affine rational point: 0 off the curve,
    /// 1 at a smooth point, >= 2 at a singular one.
    pub fn multiplicity_at(&self, x: &Rat, y: &Rat) -> u32 {
        let shifted = self.f.translate(x, y);
        shifted
            .vanishing_order_at_origin()
            .expect("curve equation is nonzero")
    }

    pub fn is_smooth_point(&self, x: &Rat, y: &Rat) -> bool {
        if !self.contains(x, y) {
            return false;
        }
        let (gx, gy) = self.gradient_at(x, y);
        !(gx.is_zero() && gy.is_zero())
    }

    /// Tangent line at a smooth point.
    pub fn tangent_line_at(&self, x: &Rat, y: &Rat) -> Result<ProjLine, CurveError> {
        if !self.contains(x, y) {
            return Err(CurveError::PointNotOnCurve);
        }
        let (gx, gy) = self.gradient_at(x, y);
        if gx.is_zero() && gy.is_zero() {
            return Err(CurveError::PointIsSingular);
        }
        let c = -(&gx * x + &gy * y);
        ProjLine::new(gx, gy, c)
    }

    pub fn classify_singularity(&self, x: &Rat, y: &Rat) -> Result<SingularityReport, CurveError> {
        let m = self.multiplicity_at(x, y);
        if m < 2 {
            return Err(CurveError::NotSingular);
        }
        let shifted = self.f.translate(x, y);
        let form = shifted.homogeneous_part(m);
        let (roots, residual_degree) = binary_form_rational_roots(&form)?;
        // root [x0 : y0] of the form corresponds to the tangent direction
        // (x0, y0) out of the singular point
        let mut factors = Vec::new();
        for ((rx, ry), mult) in &roots {
            // line through (x, y) with direction (rx, ry)
            let a = -ry.clone();
            let b = rx.clone();
            let c = ry * x - rx * y;
            factors.push((ProjLine::new(a, b, c)?, *mult));
        }
        let kind = if m == 2 {
            match (factors.len(), residual_degree) {
                (2, 0) => SingularityKind::NodeSplit,
                (1, 0) => SingularityKind::CuspLike,
                (0, 2) => SingularityKind::NodeNonSplit,
                _ => unreachable!("degree-2 form factorization"),
            }
        } else {
            SingularityKind::Higher
        };
        Ok(SingularityReport {
            point: (x.clone(), y.clone()),
            multiplicity: m,
            tangent_lines: factors,
            residual_degree,
            kind,
        })
    }

    /// Projective intersection profile of the curve with a line: all rational
    /// intersection points with exact multiplicities, plus the degree of the
    /// irrational residual. Multiplicities and residual sum to the curve
    /// degree.
    pub fn intersection_profile(&self, line: &ProjLine) -> Result<IntersectionProfile, CurveError> {
        let d = self.degree;
        let mut points: Vec<(ProjPoint, u32)> = Vec::new();
        let residual_degree;
        if let Some(((ax, ay), (dx, dy))) = line.affine_parametrization() {
            let restricted = self.f.restrict_to_line((&ax, &ay), (&dx, &dy));
            if restricted.is_zero() {
                return Err(CurveError::LineIsComponent);
            }
            let deg_b = restricted.degree().unwrap_or(0) as u32;
            let report = rational_roots(&restricted)?;
            for (s, mult) in &report.roots {
                let px = &ax + &(&dx * s);
                let py = &ay + &(&dy * s);
                points.push((ProjPoint::from_affine(&px, &py), *mult as u32));
            }
            if deg_b < d {
                // degree drop: the direction point absorbs the difference
                points.push((line.direction().expect("affine line"), d - deg_b));
            }
            residual_degree = report.cofactor_degree as u32;
        } else {
            // the line at infinity: intersections are the roots of the top form
            let form = self.f.homogeneous_part(d);
            if form.is_zero() {
                return Err(CurveError::LineIsComponent);
            }
            let (roots, res) = binary_form_rational_roots(&form)?;
            for ((rx, ry), mult) in roots {
                let p = ProjPoint::new(rx, ry, Rat::zero()).expect("root is nonzero");
                points.push((p, mult));
            }
            residual_degree = res;
        }
        points.sort_by(|a, b| a.0.cmp(&b.0));
        let total: u32 = points.iter().map(|(_, m)| m).sum::<u32>() + residual_degree;
        debug_assert_eq!(
            total, d,
            "projective intersection count must equal the degree"
        );
        Ok(IntersectionProfile {
            points,
            residual_degree,
        })
    }

    /// Transversal rational intersections of the tangent line at a smooth
    /// rational point with the curve: the second coordinate of the tangent
    /// correspondence. Only affine transversal points are returned; a line
    /// meeting the curve with multiplicity 1 at a point is automatically
    /// transversal there, and the point is automatically smooth on the curve.
    pub fn tangent_pairs(&self, x: &Rat, y: &Rat) -> Result<Vec<TangentPair>, CurveError> {
        let tangent = self.tangent_line_at(x, y)?;
        let profile = self.intersection_profile(&tangent)?;
        let here = ProjPoint::from_affine(x, y);
        debug_assert!(
            profile.points.iter().any(|(p, m)| *p == here && *m >= 2),
            "tangency point must appear with multiplicity >= 2"
        );
        let mut out = Vec::new();
        for (p, mult) in &profile.points {
            if *mult != 1 || !p.is_affine() || *p == here {
                continue;
            }
            let (px, py) = p.to_affine().expect("affine");
            out.push(TangentPair {
                r: (x.clone(), y.clone()),
                r_prime: (px, py),
                tangent_line: tangent.clone(),
                transversal: true,
            });
        }
        out.sort_by_key(|a| point_sort_key(&a.r_prime));
        Ok(out)
    }

    /// Every rational singular point, with a conservative flag for possible
    /// irrational ones. Candidate x-coordinates come from the y-discriminant
    /// of the y-primitive part plus the y-free content and leading-coefficient
    /// roots; candidates are then confirmed pointwise by the multiplicity.
    pub fn rational_singular_points(&self) -> Result<(Vec<SingularityReport>, bool), CurveError> {
        let f = &self.f;
        let mut nonrational_possible = false;
        let mut xs: Vec<Rat> = Vec::new();
        let add_roots = |p: &Poly1, nonrational: &mut bool, xs: &mut Vec<Rat>| {
            if p.is_zero() || p.is_constant() {
                return Ok::<(), CurveError>(());
            }
            let report = rational_roots(p)?;
            if report.cofactor_degree > 0 {
                *nonrational = true;
            }
            for (r, _) in report.roots {
                xs.push(r);
            }
            Ok(())
        };
        let content = f.content_in_y();
        add_roots(&content, &mut nonrational_possible, &mut xs)?;
        let prim = f.primitive_part_in_y();
        if prim.degree_y().unwrap_or(0) >= 1 {
            let disc = prim.resultant_y(&prim.partial_y())?;
            add_roots(&disc, &mut nonrational_possible, &mut xs)?;
            add_roots(
                &prim.leading_coeff_in_y(),
                &mut nonrational_possible,
                &mut xs,
            )?;
        }
        xs.sort();
        xs.dedup();

        let mut out: Vec<SingularityReport> = Vec::new();
        for x0 in xs {
            let fy = f.specialize_x(&x0);
            let mut ys: Vec<Rat> = Vec::new();
            if fy.is_zero() {
                // vertical line component: singular points are its meets with
                // the rest of the curve
                let rest = f.div_exact(&Poly2::from_terms([
                    (1, 0, Rat::one()),
                    (0, 0, -x0.clone()),
                ]))?;
                let ry = rest.specialize_x(&x0);
                if !ry.is_zero() && !ry.is_constant() {
                    let rep = rational_roots(&ry)?;
                    if rep.cofactor_degree > 0 {
                        nonrational_possible = true;
                    }
                    ys.extend(rep.roots.into_iter().map(|(r, _)| r));
                }
            } else if !fy.is_constant() {
                let rep = rational_roots(&fy)?;
                ys.extend(rep.roots.into_iter().map(|(r, _)| r));
            }
            for y0 in ys {
                if self.multiplicity_at(&x0, &y0) >= 2 {
                    out.push(self.classify_singularity(&x0, &y0)?);
                }
            }
        }
        out.sort_by_key(|a| point_sort_key(&a.point));
        out.dedup_by(|a, b| a.point == b.point);
        Ok((out, nonrational_possible))
    }

    /// All rational points of the curve on the vertical line x = x0,
    /// sorted by y. Used by height-bounded point sweeps.
    pub fn points_with_x(&self, x0: &Rat) -> Result<Vec<(Rat, Rat)>, CurveError> {
        let fy = self.f.specialize_x(x0);
        if fy.is_zero() {
            // vertical line is a component; no isolated points to report
            return Err(CurveError::LineIsComponent);
        }
        if fy.is_constant() {
            return Ok(Vec::new());
        }
        let report = rational_roots(&fy)?;
        Ok(report
            .roots
            .into_iter()
            .map(|(yv, _)| (x0.clone(), yv))
            .collect())
    }
}

/// Deterministic ordering key for affine rational points: height first.
pub fn point_sort_key(p: &(Rat, Rat)) -> (u64, Rat, Rat) {
    let h = crate::heights::height_u64(&p.0).max(crate::heights::height_u64(&p.1));
    (h, p.0.clone(), p.1.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionProfile {
    pub points: Vec<(ProjPoint, u32)>,
    pub residual_degree: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityKind {
    NodeSplit,
    NodeNonSplit,
    CuspLike,
    Higher,
}

#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub point: (Rat, Rat),
    pub multiplicity: u32,
    /// Rational linear factors of the tangent cone, as lines through the
    /// point, with multiplicities.
    pub tangent_lines: Vec<(ProjLine, u32)>,
    /// Degree of the part of the tangent cone with no rational linear factor.
    pub residual_degree: u32,
    pub kind: SingularityKind,
}

#[derive(Clone, Debug)]
pub struct TangentPair {
    pub r: (Rat, Rat),
    pub r_prime: (Rat, Rat),
    pub tangent_line: ProjLine,
    pub transversal: bool,
}

/// Roots [x0 : y0] as coordinate pairs with multiplicities.
type BinaryFormRoots = Vec<((Rat, Rat), u32)>;

/// Rational roots [x0 : y0] of a nonzero binary form with multiplicities,
/// plus the degree of the rational-root-free cofactor.
fn binary_form_rational_roots(form: &Poly2) -> Result<(BinaryFormRoots, u32), CurveError> {
    let m = form.total_degree().ok_or(CurveError::ZeroPolynomial)?;
    // h(u) = form(u, 1); nonzero since the form is nonzero
    let h = Poly1::new((0..=m).map(|i| form.coeff(i, m - i)).collect());
    let deg_h = h.degree().expect("nonzero binary form") as u32;
    let report = rational_roots(&h)?;
    let mut roots: BinaryFormRoots = report
        .roots
        .into_iter()
        .map(|(r, mult)| ((r, Rat::one()), mult as u32))
        .collect();
    if deg_h < m {
        // factor y^(m - deg h): the root at [1 : 0]
        roots.push(((Rat::one(), Rat::zero()), m - deg_h));
    }
    Ok((roots, report.cofactor_degree as u32))
}
