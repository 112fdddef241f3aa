//! Projective lines ax + by + cz = 0 with rational parametrizations.

use super::point::ProjPoint;
use crate::arith::rat::Rat;
use crate::error::CurveError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Line in the projective plane; coefficients kept as coprime integers with
/// the first nonzero one positive, so proportional triples compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjLine {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl ProjLine {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<ProjLine, CurveError> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(CurveError::ZeroPolynomial);
        }
        let mut lcm = BigInt::one();
        for v in [&a, &b, &c] {
            lcm = lcm.lcm(v.denom());
        }
        let mut v = [
            a.numer() * (&lcm / a.denom()),
            b.numer() * (&lcm / b.denom()),
            c.numer() * (&lcm / c.denom()),
        ];
        let mut g = BigInt::zero();
        for x in &v {
            g = g.gcd(x);
        }
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                g = -g;
            }
        }
        for x in &mut v {
            *x = &*x / &g;
        }
        let [a, b, c] = v;
        Ok(ProjLine { a, b, c })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<ProjLine, CurveError> {
        ProjLine::new(
            Rat::from_integer(a.into()),
            Rat::from_integer(b.into()),
            Rat::from_integer(c.into()),
        )
    }

    /// The line through two distinct points (cross product).
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, CurveError> {
        let (px, py, pz) = p.coords();
        let (qx, qy, qz) = q.coords();
        let a = py * qz - pz * qy;
        let b = pz * qx - px * qz;
        let c = px * qy - py * qx;
        ProjLine::new(
            Rat::from_integer(a),
            Rat::from_integer(b),
            Rat::from_integer(c),
        )
        .map_err(|_| CurveError::ZeroPolynomial)
    }

    pub fn through_affine(p: (&Rat, &Rat), q: (&Rat, &Rat)) -> Result<ProjLine, CurveError> {
        ProjLine::through(
            &ProjPoint::from_affine(p.0, p.1),
            &ProjPoint::from_affine(q.0, q.1),
        )
    }

    pub fn coefficients(&self) -> (Rat, Rat, Rat) {
        (
            Rat::from_integer(self.a.clone()),
            Rat::from_integer(self.b.clone()),
            Rat::from_integer(self.c.clone()),
        )
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let (x, y, z) = p.coords();
        (&self.a * x + &self.b * y + &self.c * z).is_zero()
    }

    pub fn contains_affine(&self, x: &Rat, y: &Rat) -> bool {
        self.contains(&ProjPoint::from_affine(x, y))
    }

    pub fn is_line_at_infinity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Intersection point of two non-proportional lines.
    pub fn intersect(&self, other: &ProjLine) -> Option<ProjPoint> {
        let x = &self.b * &other.c - &self.c * &other.b;
        let y = &self.c * &other.a - &self.a * &other.c;
        let z = &self.a * &other.b - &self.b * &other.a;
        ProjPoint::new(
            Rat::from_integer(x),
            Rat::from_integer(y),
            Rat::from_integer(z),
        )
    }

    /// Direction point (intersection with the line at infinity); `None` for
    /// the line at infinity itself.
    pub fn direction(&self) -> Option<ProjPoint> {
        if self.is_line_at_infinity() {
            return None;
        }
        ProjPoint::new(
            Rat::from_integer(self.b.clone()),
            Rat::from_integer(-self.a.clone()),
            Rat::zero(),
        )
    }

    /// An affine anchor point and a primitive affine direction; `None` for the
    /// line at infinity.
    pub fn affine_parametrization(&self) -> Option<((Rat, Rat), (Rat, Rat))> {
        if self.is_line_at_infinity() {
            return None;
        }
        let anchor = if !self.b.is_zero() {
            (Rat::zero(), Rat::new(-self.c.clone(), self.b.clone()))
        } else {
            (Rat::new(-self.c.clone(), self.a.clone()), Rat::zero())
        };
        let dir = (
            Rat::from_integer(self.b.clone()),
            Rat::from_integer(-self.a.clone()),
        );
        Some((anchor, dir))
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x + ({})y + ({})z = 0", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rat_int};

    #[test]
    fn normalization_and_equality() {
        let l1 = ProjLine::new(rat(1, 2), rat(-3, 2), rat_int(1)).unwrap();
        let l2 = ProjLine::from_i64(1, -3, 2).unwrap();
        assert_eq!(l1, l2);
        let l3 = ProjLine::from_i64(-1, 3, -2).unwrap();
        assert_eq!(l1, l3);
        assert!(ProjLine::new(Rat::zero(), Rat::zero(), Rat::zero()).is_err());
    }

    #[test]
    fn incidence_and_intersection() {
        // x = 0 and y = 0 meet at the origin
        let v = ProjLine::from_i64(1, 0, 0).unwrap();
        let h = ProjLine::from_i64(0, 1, 0).unwrap();
        let p = v.intersect(&h).unwrap();
        assert_eq!(p.to_affine(), Some((rat_int(0), rat_int(0))));
        // parallel lines meet at infinity
        let x0 = ProjLine::from_i64(1, 0, 0).unwrap();
        let x1 = ProjLine::from_i64(1, 0, -1).unwrap();
        let q = x0.intersect(&x1).unwrap();
        assert!(!q.is_affine());
        assert!(x0.contains(&q) && x1.contains(&q));
        // proportional lines do not intersect in a point
        assert!(x0
            .intersect(&ProjLine::from_i64(2, 0, 0).unwrap())
            .is_none());
    }

    #[test]
    fn parametrization_traces_the_line() {
        let l = ProjLine::from_i64(3, 4, -10).unwrap(); // 3x + 4y = 10
        let ((ax, ay), (dx, dy)) = l.affine_parametrization().unwrap();
        for t in [rat_int(0), rat_int(1), rat(-7, 3)] {
            let x = &ax + &(&dx * &t);
            let y = &ay + &(&dy * &t);
            assert!(l.contains_affine(&x, &y));
        }
        assert!(l.contains(&l.direction().unwrap()));
    }

    #[test]
    fn through_two_points() {
        let l = ProjLine::through_affine((&rat_int(0), &rat_int(1)), (&rat_int(2), &rat_int(1)))
            .unwrap();
        assert_eq!(l, ProjLine::from_i64(0, 1, -1).unwrap()); // y = 1
    }
}
