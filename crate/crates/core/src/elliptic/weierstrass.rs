//! Short Weierstrass curves y² = x³ + Ax + B over the rationals, with the
//! chord-tangent group law and the torsion filter.
//!
//! Group-law heights roughly quadruple per doubling, so every operation
//! checks a configurable coordinate bit-length cap and fails loudly with
//! `HeightOverflow` instead of letting memory blow up.

use crate::arith::rat::{height_bits, rat_from_str, rat_to_string, Rat};
use crate::error::EllipticError;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

pub const DEFAULT_HEIGHT_CAP_BITS: u64 = 100_000;

/// Torsion orders that occur for elliptic curves over the rationals.
pub const POSSIBLE_TORSION_ORDERS: [u32; 11] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

#[derive(Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a: Rat,
    b: Rat,
    disc: Rat,
    height_cap_bits: u64,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ECPoint {
    Infinity,
    Affine(Rat, Rat),
}

impl ECPoint {
    pub fn affine(x: Rat, y: Rat) -> ECPoint {
        ECPoint::Affine(x, y)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn xy(&self) -> Option<(&Rat, &Rat)> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine(x, y) => Some((x, y)),
        }
    }

    pub fn neg(&self) -> ECPoint {
        match self {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => ECPoint::Affine(x.clone(), -y.clone()),
        }
    }
}

impl WeierstrassCurve {
    pub fn new(a: Rat, b: Rat) -> Result<WeierstrassCurve, EllipticError> {
        let disc = discriminant(&a, &b);
        if disc.is_zero() {
            return Err(EllipticError::SingularCurve);
        }
        Ok(WeierstrassCurve {
            a,
            b,
            disc,
            height_cap_bits: DEFAULT_HEIGHT_CAP_BITS,
        })
    }

    pub fn with_height_cap(mut self, bits: u64) -> WeierstrassCurve {
        self.height_cap_bits = bits;
        self
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn discriminant(&self) -> &Rat {
        &self.disc
    }

    pub fn height_cap_bits(&self) -> u64 {
        self.height_cap_bits
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine(x, y) => y * y == x * x * x + &self.a * x + &self.b,
        }
    }

    fn check(&self, p: &ECPoint) -> Result<(), EllipticError> {
        if !self.contains(p) {
            return Err(EllipticError::OffCurve);
        }
        if let ECPoint::Affine(x, y) = p {
            if height_bits(x) > self.height_cap_bits || height_bits(y) > self.height_cap_bits {
                return Err(EllipticError::HeightOverflow);
            }
        }
        Ok(())
    }

    /// Chord-tangent sum. Inputs are validated exactly; the result satisfies
    /// the curve equation exactly.
    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint, EllipticError> {
        self.check(p)?;
        self.check(q)?;
        let ((x1, y1), (x2, y2)) = match (p.xy(), q.xy()) {
            (None, _) => return Ok(q.clone()),
            (_, None) => return Ok(p.clone()),
            (Some(a), Some(b)) => (a, b),
        };
        let lambda = if x1 == x2 {
            if (y1.clone() + y2).is_zero() {
                return Ok(ECPoint::Infinity);
            }
            // tangent at p (y1 = y2 != 0)
            let num = Rat::from_integer(3.into()) * x1 * x1 + &self.a;
            num / (Rat::from_integer(2.into()) * y1)
        } else {
            (y2.clone() - y1) / (x2.clone() - x1)
        };
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = lambda * (x1.clone() - &x3) - y1.clone();
        let out = ECPoint::Affine(x3, y3);
        self.check(&out)?;
        Ok(out)
    }

    pub fn sub(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint, EllipticError> {
        self.add(p, &q.neg())
    }

    /// n·P by double-and-add; negative n negates.
    pub fn mul(&self, n: i64, p: &ECPoint) -> Result<ECPoint, EllipticError> {
        self.check(p)?;
        let (mut k, base) = if n < 0 {
            (n.unsigned_abs(), p.neg())
        } else {
            (n as u64, p.clone())
        };
        let mut acc = ECPoint::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &pow)?;
            }
            k >>= 1;
            if k > 0 {
                pow = self.add(&pow, &pow)?;
            }
        }
        Ok(acc)
    }

    /// Exact torsion test over the rationals: the order of a torsion point is
    /// one of 1..=10 or 12, so testing those multiples certifies infinite
    /// order whenever all of them miss the identity. Returns the exact order
    /// for torsion points, `None` for points of infinite order.
    pub fn torsion_order(&self, p: &ECPoint) -> Result<Option<u32>, EllipticError> {
        self.check(p)?;
        for k in POSSIBLE_TORSION_ORDERS {
            if self.mul(k as i64, p)?.is_infinity() {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

pub fn discriminant(a: &Rat, b: &Rat) -> Rat {
    let four = Rat::from_integer(4.into());
    let twentyseven = Rat::from_integer(27.into());
    let minus16 = Rat::from_integer((-16).into());
    minus16 * (four * a * a * a + twentyseven * b * b)
}

// wire formats: points as {"x": "...", "y": "..."} or {"infinity": true},
// curves as {"A": "...", "B": "..."}

impl Serialize for ECPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            ECPoint::Infinity => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("infinity", &true)?;
                m.end()
            }
            ECPoint::Affine(x, y) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("x", &rat_to_string(x))?;
                m.serialize_entry("y", &rat_to_string(y))?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for ECPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<ECPoint, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            infinity: bool,
            x: Option<String>,
            y: Option<String>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.infinity {
            return Ok(ECPoint::Infinity);
        }
        match (raw.x, raw.y) {
            (Some(x), Some(y)) => Ok(ECPoint::Affine(
                rat_from_str(&x).map_err(D::Error::custom)?,
                rat_from_str(&y).map_err(D::Error::custom)?,
            )),
            _ => Err(D::Error::custom("point needs x and y, or infinity: true")),
        }
    }
}

impl Serialize for WeierstrassCurve {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("A", &rat_to_string(&self.a))?;
        m.serialize_entry("B", &rat_to_string(&self.b))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for WeierstrassCurve {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<WeierstrassCurve, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "A")]
            a: String,
            #[serde(rename = "B")]
            b: String,
        }
        let raw = Raw::deserialize(d)?;
        WeierstrassCurve::new(
            rat_from_str(&raw.a).map_err(D::Error::custom)?,
            rat_from_str(&raw.b).map_err(D::Error::custom)?,
        )
        .map_err(D::Error::custom)
    }
}

impl fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x + ({})", self.a, self.b)
    }
}

impl fmt::Debug for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rat_int};

    fn curve(a: i64, b: i64) -> WeierstrassCurve {
        WeierstrassCurve::new(rat_int(a), rat_int(b)).unwrap()
    }

    fn pt(x: Rat, y: Rat) -> ECPoint {
        ECPoint::Affine(x, y)
    }

    #[test]
    fn singular_curves_rejected() {
        // y^2 = x^3: disc 0
        assert!(WeierstrassCurve::new(rat_int(0), rat_int(0)).is_err());
        // 4a^3 + 27b^2 = 0 with a = -3, b = 2
        assert!(WeierstrassCurve::new(rat_int(-3), rat_int(2)).is_err());
        assert!(WeierstrassCurve::new(rat_int(-1), rat_int(0)).is_ok());
    }

    #[test]
    fn two_torsion_chord() {
        // on y^2 = x^3 - x: (0,0) + (1,0) = (-1,0), worked by the chord formula
        let e = curve(-1, 0);
        let s = e
            .add(&pt(rat_int(0), rat_int(0)), &pt(rat_int(1), rat_int(0)))
            .unwrap();
        assert_eq!(s, pt(rat_int(-1), rat_int(0)));
        // y = 0 points are 2-torsion
        let d = e
            .add(&pt(rat_int(0), rat_int(0)), &pt(rat_int(0), rat_int(0)))
            .unwrap();
        assert!(d.is_infinity());
    }

    #[test]
    fn identity_and_inverse_laws() {
        // y^2 = x^3 + 4x contains (2, 4)
        let e = curve(4, 0);
        let p = pt(rat_int(2), rat_int(4));
        assert_eq!(e.add(&p, &ECPoint::Infinity).unwrap(), p);
        assert_eq!(e.add(&ECPoint::Infinity, &p).unwrap(), p);
        assert!(e.add(&p, &p.neg()).unwrap().is_infinity());
    }

    #[test]
    fn doubling_oracle() {
        // 2·(3,5) on y^2 = x^3 - 2, tangent slope 27/10 worked by hand
        let e = curve(0, -2);
        let d = e.mul(2, &pt(rat_int(3), rat_int(5))).unwrap();
        assert_eq!(d, pt(rat(129, 100), rat(-383, 1000)));
        assert!(e.contains(&d));
    }

    #[test]
    fn mul_edges() {
        let e = curve(0, -2);
        let p = pt(rat_int(3), rat_int(5));
        assert!(e.mul(0, &p).unwrap().is_infinity());
        assert_eq!(e.mul(1, &p).unwrap(), p);
        assert_eq!(e.mul(-1, &p).unwrap(), p.neg());
        // mul(-n, P) = -mul(n, P)
        assert_eq!(e.mul(-7, &p).unwrap(), e.mul(7, &p).unwrap().neg());
    }

    #[test]
    fn off_curve_rejected() {
        let e = curve(-1, 0);
        let bad = pt(rat_int(2), rat_int(2));
        assert_eq!(
            e.add(&bad, &ECPoint::Infinity),
            Err(EllipticError::OffCurve)
        );
        assert_eq!(e.mul(3, &bad), Err(EllipticError::OffCurve));
        assert_eq!(e.torsion_order(&bad), Err(EllipticError::OffCurve));
    }

    #[test]
    fn torsion_filter_basics() {
        let e = curve(-1, 0);
        assert_eq!(
            e.torsion_order(&pt(rat_int(0), rat_int(0))).unwrap(),
            Some(2)
        );
        assert_eq!(e.torsion_order(&ECPoint::Infinity).unwrap(), Some(1));
        // (3,5) on y^2 = x^3 - 2 has infinite order
        let e2 = curve(0, -2);
        assert_eq!(e2.torsion_order(&pt(rat_int(3), rat_int(5))).unwrap(), None);
    }

    #[test]
    fn wire_format_round_trip() {
        let e = curve(-1, 0);
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"A":"-1","B":"0"}"#);
        let back: WeierstrassCurve = serde_json::from_str(r#"{"A":"-1","B":"0"}"#).unwrap();
        assert_eq!(back, e);
        // singular curves are rejected at deserialization
        assert!(serde_json::from_str::<WeierstrassCurve>(r#"{"A":"0","B":"0"}"#).is_err());

        let p = pt(rat(1, 2), rat(-3, 4));
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"x":"1/2","y":"-3/4"}"#
        );
        let back: ECPoint = serde_json::from_str(r#"{"x":"1/2","y":"-3/4"}"#).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            serde_json::to_string(&ECPoint::Infinity).unwrap(),
            r#"{"infinity":true}"#
        );
        let inf: ECPoint = serde_json::from_str(r#"{"infinity":true}"#).unwrap();
        assert!(inf.is_infinity());
    }

    #[test]
    fn height_cap_trips() {
        let e = curve(0, -2).with_height_cap(64);
        let p = pt(rat_int(3), rat_int(5));
        // repeated doubling overflows a 64-bit cap quickly
        let mut q = p.clone();
        let mut tripped = false;
        for _ in 0..8 {
            match e.add(&q, &q) {
                Ok(next) => q = next,
                Err(EllipticError::HeightOverflow) => {
                    tripped = true;
                    break;
                }
                Err(other) => panic!("unexpected error {other:?}"),
            }
        }
        assert!(tripped);
    }
}
