//! Genus-one quartic models v² = q(s) and their Weierstrass forms.
//!
//! A model with a marked rational point converts to a short Weierstrass curve
//! with explicit forward and backward point maps. The marked point is sent to
//! the group identity. Two genuinely different reductions apply:
//!
//! * marked point off the ramification locus (v0 != 0): invert at the marked
//!   point, complete the square against v0·u² + αu + β, and read the cubic
//!   off the leftover linear term;
//! * marked point on the ramification locus (v0 = 0): the translated quartic
//!   has a simple root at 0; inverting turns the cofactor cubic directly into
//!   a cubic model.
//!
//! Each map is undefined on a small explicit exceptional set, recorded on the
//! map object; round trips hold everywhere else and are enforced by tests.

use super::weierstrass::{ECPoint, WeierstrassCurve};
use crate::arith::poly1::Poly1;
use crate::arith::rat::{rat_int, Rat};
use crate::error::EllipticError;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct QuarticModel {
    q: Poly1,
    marked: Option<(Rat, Rat)>,
    degenerate: bool,
}

impl QuarticModel {
    /// A model v² = q(s) with deg q in {3, 4}. A non-square-free q is
    /// accepted but flagged degenerate; a marked point must satisfy the
    /// equation exactly.
    pub fn new(q: Poly1, marked: Option<(Rat, Rat)>) -> Result<QuarticModel, EllipticError> {
        let deg = q.degree().ok_or(EllipticError::DegenerateQuartic)?;
        if !(3..=4).contains(&deg) {
            return Err(EllipticError::DegenerateQuartic);
        }
        if let Some((s0, v0)) = &marked {
            if (v0 * v0) != q.eval(s0) {
                return Err(EllipticError::OffCurve);
            }
        }
        let degenerate = !q.is_square_free();
        Ok(QuarticModel {
            q,
            marked,
            degenerate,
        })
    }

    pub fn quartic(&self) -> &Poly1 {
        &self.q
    }

    pub fn marked_point(&self) -> Option<&(Rat, Rat)> {
        self.marked.as_ref()
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn contains(&self, s: &Rat, v: &Rat) -> bool {
        v * v == self.q.eval(s)
    }
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
enum MapCase {
    /// v0 != 0; parameters of the completed square p(u) = (v0u²+αu+β)² + μu + ν.
    Generic {
        s0: Rat,
        v0: Rat,
        alpha: Rat,
        beta: Rat,
        mu: Rat,
        k: Rat,
    },
    /// v0 = 0; c0 is the constant term of the cofactor cubic h = q(s0 + σ)/σ.
    Ramified { s0: Rat, c0: Rat },
}

/// Birational identification of a marked quartic model with its short
/// Weierstrass curve.
#[derive(Clone, Debug)]
pub struct ModelMap {
    curve: WeierstrassCurve,
    quartic: Poly1,
    case: MapCase,
    /// x_short = x_long + shift.
    shift: Rat,
    exceptional_source: Vec<(Rat, Rat)>,
    exceptional_target: Vec<ECPoint>,
}

/// Convert a marked quartic model to (curve, image of the marked point, maps).
/// The marked point maps to the identity.
pub fn quartic_to_weierstrass(
    model: &QuarticModel,
) -> Result<(WeierstrassCurve, ECPoint, ModelMap), EllipticError> {
    if model.degenerate {
        return Err(EllipticError::DegenerateQuartic);
    }
    let (s0, v0) = model.marked.clone().ok_or(EllipticError::NoMarkedPoint)?;
    let shifted = model.q.shift(&s0);
    let a = |i: usize| shifted.coeff(i);
    debug_assert_eq!(a(0), &v0 * &v0);

    let (case, p2, p1, p0);
    if v0.is_zero() {
        // q(s0 + σ) = σ·h(σ) with h(0) != 0 by square-freeness
        let h = shifted.div_exact(&Poly1::monomial(Rat::one(), 1))?;
        let c0 = h.coeff(0);
        debug_assert!(!c0.is_zero());
        let (c1, c2, c3) = (h.coeff(1), h.coeff(2), h.coeff(3));
        p2 = c1;
        p1 = &c2 * &c0;
        p0 = &c3 * &c0 * &c0;
        case = MapCase::Ramified { s0: s0.clone(), c0 };
    } else {
        let two_v0 = &v0 + &v0;
        let alpha = a(1) / &two_v0;
        let beta = (a(2) - &alpha * &alpha) / &two_v0;
        let mu = a(3) - rat_int(2) * &alpha * &beta;
        let nu = a(4) - &beta * &beta;
        let k = rat_int(8) * &v0;
        p2 = rat_int(4) * &alpha * &alpha - rat_int(16) * &v0 * &beta;
        p1 = &k * &(rat_int(4) * &alpha * &mu - rat_int(8) * &v0 * &nu);
        p0 = &k * &k * &mu * &mu;
        case = MapCase::Generic {
            s0: s0.clone(),
            v0: v0.clone(),
            alpha,
            beta,
            mu,
            k,
        };
    }

    // depress y² = x³ + p2x² + p1x + p0 to short form
    let three = rat_int(3);
    let shift = &p2 / &three;
    let a_coef = &p1 - &(&p2 * &p2 / &three);
    let b_coef = rat_int(2) * &p2 * &p2 * &p2 / rat_int(27) - &p2 * &p1 / &three + &p0;
    let curve =
        WeierstrassCurve::new(a_coef, b_coef).map_err(|_| EllipticError::DegenerateQuartic)?;

    let mut map = ModelMap {
        curve: curve.clone(),
        quartic: model.q.clone(),
        case,
        shift,
        exceptional_source: Vec::new(),
        exceptional_target: Vec::new(),
    };
    map.compute_exceptional_sets();
    let marked_image = map.forward(&s0, &v0)?;
    debug_assert!(marked_image.is_infinity());
    Ok((curve, marked_image, map))
}

impl ModelMap {
    pub fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }

    /// Quartic points where the forward map needs its declared special cases
    /// or is many-to-one; round trips are only promised off this list.
    pub fn exceptional_source(&self) -> &[(Rat, Rat)] {
        &self.exceptional_source
    }

    /// Curve points where the backward map is undefined or declared.
    pub fn exceptional_target(&self) -> &[ECPoint] {
        &self.exceptional_target
    }

    pub fn is_exceptional_source(&self, s: &Rat, v: &Rat) -> bool {
        self.exceptional_source
            .iter()
            .any(|(a, b)| a == s && b == v)
    }

    /// Map a rational point of the quartic onto the curve.
    pub fn forward(&self, s: &Rat, v: &Rat) -> Result<ECPoint, EllipticError> {
        if !(v * v == self.quartic.eval(s)) {
            return Err(EllipticError::OffCurve);
        }
        let out = match &self.case {
            MapCase::Ramified { s0, c0 } => {
                let sigma = s - s0;
                if sigma.is_zero() {
                    return Ok(ECPoint::Infinity);
                }
                let u = Rat::one() / &sigma;
                let x_long = c0 * &u;
                let y = c0 * v / (&sigma * &sigma);
                ECPoint::Affine(&x_long + &self.shift, y)
            }
            MapCase::Generic {
                s0,
                v0,
                alpha,
                beta,
                mu,
                k,
            } => {
                let sigma = s - s0;
                if sigma.is_zero() {
                    if v == v0 {
                        return Ok(ECPoint::Infinity);
                    }
                    // conjugate of the marked point: limit of the chart maps
                    return Ok(ECPoint::Affine(self.shift.clone(), k * mu));
                }
                let u = Rat::one() / &sigma;
                let z = v / (&sigma * &sigma);
                let t = &z + &(v0 * &u * &u) + &(alpha * &u) + beta;
                let y_big = rat_int(4) * v0 * &t * &u + rat_int(2) * alpha * &t + mu;
                ECPoint::Affine(k * &t + &self.shift, k * &y_big)
            }
        };
        debug_assert!(
            self.curve.contains(&out),
            "forward image must satisfy the curve equation"
        );
        Ok(out)
    }

    /// Map a rational curve point back onto the quartic. Undefined on the
    /// exceptional target set (identity and the images of the points at
    /// infinity of the quartic), except for the declared special cases.
    pub fn backward(&self, p: &ECPoint) -> Result<(Rat, Rat), EllipticError> {
        if !self.curve.contains(p) {
            return Err(EllipticError::OffCurve);
        }
        match &self.case {
            MapCase::Ramified { s0, c0 } => {
                let (x, y) = match p.xy() {
                    None => return Ok((s0.clone(), Rat::zero())),
                    Some(xy) => xy,
                };
                let x_long = x - &self.shift;
                if x_long.is_zero() {
                    return Err(EllipticError::MapUndefined);
                }
                let u = &x_long / c0;
                let sigma = Rat::one() / &u;
                let s = &sigma + s0;
                let v = y * &sigma * &sigma / c0;
                debug_assert!(&v * &v == self.quartic.eval(&s));
                Ok((s, v))
            }
            MapCase::Generic {
                s0,
                v0,
                alpha,
                beta,
                mu,
                k,
            } => {
                let (x, y) = match p.xy() {
                    None => return Ok((s0.clone(), v0.clone())),
                    Some(xy) => xy,
                };
                let t = (x - &self.shift) / k;
                let y_big = y / k;
                if t.is_zero() {
                    if &y_big == mu {
                        return Ok((s0.clone(), -v0.clone()));
                    }
                    return Err(EllipticError::MapUndefined);
                }
                let u = (&y_big - &(rat_int(2) * alpha * &t) - mu) / (rat_int(4) * v0 * &t);
                if u.is_zero() {
                    return Err(EllipticError::MapUndefined);
                }
                let sigma = Rat::one() / &u;
                let z = &t - &(v0 * &u * &u) - &(alpha * &u) - beta;
                let s = &sigma + s0;
                let v = z * &sigma * &sigma;
                debug_assert!(&v * &v == self.quartic.eval(&s));
                Ok((s, v))
            }
        }
    }

    fn compute_exceptional_sets(&mut self) {
        let mut source = Vec::new();
        let mut target = vec![ECPoint::Infinity];
        match &self.case {
            MapCase::Ramified { s0, .. } => {
                source.push((s0.clone(), Rat::zero()));
                // u = 0 locus: x_long = 0; rational points there block backward
                let xs = self.shift.clone();
                let rhs = &xs * &xs * &xs + self.curve.a() * &xs + self.curve.b();
                if let Some(y) = crate::arith::rat::sqrt_exact(&rhs) {
                    target.push(ECPoint::Affine(xs.clone(), y.clone()));
                    if !y.is_zero() {
                        target.push(ECPoint::Affine(xs, -y));
                    }
                }
            }
            MapCase::Generic {
                s0,
                v0,
                alpha,
                beta,
                mu,
                k,
            } => {
                source.push((s0.clone(), v0.clone()));
                source.push((s0.clone(), -v0.clone()));
                // T = 0 locus on the quartic: v = -(v0 + ασ + βσ²) on the curve
                let g = Poly1::new(vec![v0.clone(), alpha.clone(), beta.clone()]);
                let diff = &self.quartic.shift(s0) - &(&g * &g);
                if !diff.is_zero() {
                    if let Ok(report) = crate::arith::roots::rational_roots(&diff) {
                        for (sigma, _) in report.roots {
                            if sigma.is_zero() {
                                continue;
                            }
                            let s = &sigma + s0;
                            let v = -g.eval(&sigma);
                            source.push((s, v));
                        }
                    }
                }
                // conjugate image and its negative sit over x_long = 0
                let conj_y = k * mu;
                target.push(ECPoint::Affine(self.shift.clone(), conj_y.clone()));
                if !conj_y.is_zero() {
                    target.push(ECPoint::Affine(self.shift.clone(), -conj_y));
                }
                // u = 0 locus: T² = 2βT + ν, images of the quartic's points
                // at infinity
                let nu = self.quartic.shift(s0).coeff(4) - beta * beta;
                let tpoly = Poly1::new(vec![-nu, -(rat_int(2) * beta), Rat::one()]);
                if let Ok(report) = crate::arith::roots::rational_roots(&tpoly) {
                    for (t, _) in report.roots {
                        let x = k * &t + &self.shift;
                        let y = k * &(rat_int(2) * alpha * &t + mu);
                        let cand = ECPoint::Affine(x, y);
                        if self.curve.contains(&cand) && !target.contains(&cand) {
                            target.push(cand);
                        }
                    }
                }
            }
        }
        source.dedup();
        self.exceptional_source = source;
        self.exceptional_target = target;
    }
}

/// Classical invariants of a binary quartic and the associated curve
/// y² = x³ - 27I·x - 27J. Used as a diagnostic for fibers with no rational
/// point in hand.
pub fn jacobian_invariants(q: &Poly1) -> Result<WeierstrassCurve, EllipticError> {
    if q.degree() != Some(4) {
        return Err(EllipticError::DegenerateQuartic);
    }
    if !q.is_square_free() {
        return Err(EllipticError::DegenerateQuartic);
    }
    let (e, d, c, b, a) = (q.coeff(0), q.coeff(1), q.coeff(2), q.coeff(3), q.coeff(4));
    let i_inv = rat_int(12) * &a * &e - rat_int(3) * &b * &d + &c * &c;
    let j_inv = rat_int(72) * &a * &c * &e + rat_int(9) * &b * &c * &d
        - rat_int(27) * &a * &d * &d
        - rat_int(27) * &b * &b * &e
        - rat_int(2) * &c * &c * &c;
    WeierstrassCurve::new(rat_int(-27) * &i_inv, rat_int(-27) * &j_inv)
}

/// The invariants themselves, for the scaling and shift identities.
pub fn quartic_invariants(q: &Poly1) -> (Rat, Rat) {
    let (e, d, c, b, a) = (q.coeff(0), q.coeff(1), q.coeff(2), q.coeff(3), q.coeff(4));
    let i_inv = rat_int(12) * &a * &e - rat_int(3) * &b * &d + &c * &c;
    let j_inv = rat_int(72) * &a * &c * &e + rat_int(9) * &b * &c * &d
        - rat_int(27) * &a * &d * &d
        - rat_int(27) * &b * &b * &e
        - rat_int(2) * &c * &c * &c;
    (i_inv, j_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rat_int};

    fn q(coeffs: &[i64]) -> Poly1 {
        Poly1::from_i64(coeffs)
    }

    #[test]
    fn model_construction_checks() {
        // marked point must satisfy the equation
        assert!(QuarticModel::new(q(&[1, 0, 0, 0, 1]), Some((rat_int(0), rat_int(2)))).is_err());
        let m = QuarticModel::new(q(&[1, 0, 0, 0, 1]), Some((rat_int(0), rat_int(1)))).unwrap();
        assert!(!m.is_degenerate());
        // (s²-1)² is degenerate
        let sq = QuarticModel::new(q(&[1, 0, -2, 0, 1]), None).unwrap();
        assert!(sq.is_degenerate());
        // degree must be 3 or 4
        assert!(QuarticModel::new(q(&[1, 0, 1]), None).is_err());
    }

    #[test]
    fn generic_case_hand_checked() {
        // v² = s⁴ + s³ + s² + 2s + 4, marked (0, 2); the point (1, 3) maps to
        // x' = 91, y' = 832 on y'² = x'³ − 5x'² − 221x' + 169 (worked by hand)
        let model = QuarticModel::new(q(&[4, 2, 1, 1, 1]), Some((rat_int(0), rat_int(2)))).unwrap();
        let (e, p0, map) = quartic_to_weierstrass(&model).unwrap();
        assert!(p0.is_infinity());
        assert_eq!(e.a(), &rat(-688, 3));
        assert_eq!(e.b(), &rat(-5632, 27));
        let img = map.forward(&rat_int(1), &rat_int(3)).unwrap();
        assert_eq!(img, ECPoint::Affine(rat(268, 3), rat_int(832)));
        assert!(e.contains(&img));
        let back = map.backward(&img).unwrap();
        assert_eq!(back, (rat_int(1), rat_int(3)));
        // marked point round trip through the declared special cases
        assert_eq!(
            map.backward(&ECPoint::Infinity).unwrap(),
            (rat_int(0), rat_int(2))
        );
        let conj = map.forward(&rat_int(0), &rat_int(-2)).unwrap();
        assert_eq!(conj, ECPoint::Affine(rat(-5, 3), rat_int(13)));
        assert!(e.contains(&conj));
        assert_eq!(map.backward(&conj).unwrap(), (rat_int(0), rat_int(-2)));
    }

    #[test]
    fn ramified_case_hand_checked() {
        // v² = (s²-1)(s²-4), marked (1, 0): (0, 2) maps to (19/3, -12) on
        // y² = x³ - (73/3)x + 1190/27 (worked by hand)
        let model =
            QuarticModel::new(q(&[4, 0, -5, 0, 1]), Some((rat_int(1), rat_int(0)))).unwrap();
        let (e, p0, map) = quartic_to_weierstrass(&model).unwrap();
        assert!(p0.is_infinity());
        assert_eq!(e.a(), &rat(-73, 3));
        assert_eq!(e.b(), &rat(1190, 27));
        // image of the marked point satisfies 2·P0 = O
        assert!(e.mul(2, &p0).unwrap().is_infinity());
        let img = map.forward(&rat_int(0), &rat_int(2)).unwrap();
        assert_eq!(img, ECPoint::Affine(rat(19, 3), rat_int(-12)));
        assert_eq!(map.backward(&img).unwrap(), (rat_int(0), rat_int(2)));
    }

    #[test]
    fn fermat_quartic_round_trip() {
        // v² = s⁴ + 1 with marked (0, 1): round trip of the marked point
        let model = QuarticModel::new(q(&[1, 0, 0, 0, 1]), Some((rat_int(0), rat_int(1)))).unwrap();
        let (e, p0, map) = quartic_to_weierstrass(&model).unwrap();
        assert!(p0.is_infinity());
        assert_eq!(map.backward(&p0).unwrap(), (rat_int(0), rat_int(1)));
        // this model reduces to y² = x³ - 64x
        assert_eq!(e.a(), &rat_int(-64));
        assert_eq!(e.b(), &rat_int(0));
        // conjugate lands on the 2-torsion point (0, 0): μ = 0 here, so the
        // difference class of the two lifts (0, ±1) is torsion of order 2
        let conj = map.forward(&rat_int(0), &rat_int(-1)).unwrap();
        assert_eq!(conj, ECPoint::Affine(rat_int(0), rat_int(0)));
        assert_eq!(e.torsion_order(&conj).unwrap(), Some(2));
    }

    #[test]
    fn degenerate_and_unmarked_errors() {
        let sq = QuarticModel::new(q(&[1, 0, -2, 0, 1]), None).unwrap();
        assert_eq!(
            quartic_to_weierstrass(&sq).unwrap_err(),
            EllipticError::DegenerateQuartic
        );
        let unmarked = QuarticModel::new(q(&[1, 0, 0, 0, 1]), None).unwrap();
        assert_eq!(
            quartic_to_weierstrass(&unmarked).unwrap_err(),
            EllipticError::NoMarkedPoint
        );
    }

    #[test]
    fn sampled_points_land_on_curve() {
        // degree-3 models and both marked-point kinds, swept over s with
        // square values
        let quartics = [
            q(&[4, 2, 1, 1, 1]),
            q(&[4, 0, -5, 0, 1]),
            q(&[9, 12, 10, 4, 1]),
            q(&[0, 4, 0, 1]), // cubic with root at 0
            q(&[1, 3, 3, 1]), // cubic, (0, 1) marked
        ];
        for quartic in &quartics {
            // find marked + sample points by a small s-sweep
            let mut points = Vec::new();
            for num in -12i64..=12 {
                for den in 1i64..=4 {
                    let s = rat(num, den);
                    let val = quartic.eval(&s);
                    if let Some(v) = crate::arith::rat::sqrt_exact(&val) {
                        points.push((s.clone(), v.clone()));
                        if !v.is_zero() {
                            points.push((s, -v));
                        }
                    }
                }
            }
            if points.is_empty() {
                continue;
            }
            let marked = points[0].clone();
            let model = QuarticModel::new(quartic.clone(), Some(marked)).unwrap();
            if model.is_degenerate() {
                continue;
            }
            let (e, _, map) = quartic_to_weierstrass(&model).unwrap();
            for (s, v) in &points {
                let img = map.forward(s, v).unwrap();
                assert!(e.contains(&img));
                if !map.is_exceptional_source(s, v) {
                    let (s2, v2) = map.backward(&img).unwrap();
                    assert_eq!(
                        (&s2, &v2),
                        (s, v),
                        "round trip on {quartic:?} at ({s}, {v})"
                    );
                }
            }
        }
    }

    #[test]
    fn invariants_of_fermat_quartic() {
        let (i_inv, j_inv) = quartic_invariants(&q(&[1, 0, 0, 0, 1]));
        assert_eq!(i_inv, rat_int(12));
        assert_eq!(j_inv, rat_int(0));
        let e = jacobian_invariants(&q(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(e.a(), &rat_int(-324));
        assert_eq!(e.b(), &rat_int(0));
    }

    #[test]
    fn invariants_shift_and_scale_laws() {
        let base = q(&[7, -3, 2, 5, 1]);
        let (i0, j0) = quartic_invariants(&base);
        // shift invariance
        let shifted = base.shift(&rat(3, 2));
        assert_eq!(quartic_invariants(&shifted), (i0.clone(), j0.clone()));
        // s -> λs scales (I, J) by (λ⁴, λ⁶)
        let lam = rat(2, 3);
        let lam4 = &lam * &lam * &lam * &lam;
        let lam6 = &lam4 * &lam * &lam;
        let dilated = base.dilate(&lam);
        let (i1, j1) = quartic_invariants(&dilated);
        assert_eq!(i1, &i0 * &lam4);
        assert_eq!(j1, &j0 * &lam6);
        // q -> λ⁴·q scales (I, J) by (λ⁸, λ¹²)
        let scaled = base.scale(&lam4);
        let (i2, j2) = quartic_invariants(&scaled);
        assert_eq!(i2, &i0 * &(&lam4 * &lam4));
        assert_eq!(j2, &j0 * &(&lam4 * &lam4 * &lam4));
    }

    #[test]
    fn jacobian_invariants_detect_degeneracy() {
        // disc(q) = (4I³ - J²)/27 vanishes exactly for non-square-free q
        assert!(jacobian_invariants(&q(&[1, 0, -2, 0, 1])).is_err());
        let (i_inv, j_inv) = quartic_invariants(&q(&[1, 0, -2, 0, 1]));
        let four = rat_int(4);
        assert_eq!(four * &i_inv * &i_inv * &i_inv, &j_inv * &j_inv);
    }
}
