//! Projective points with canonical integer coordinates.

use crate::arith::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A point of the projective plane, stored as coprime integers [x : y : z]
/// with the first nonzero coordinate positive. The normal form makes equality,
/// ordering and serialization unambiguous.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl ProjPoint {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Option<ProjPoint> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return None;
        }
        let mut lcm = BigInt::one();
        for c in [&x, &y, &z] {
            lcm = lcm.lcm(c.denom());
        }
        let mut v = [
            x.numer() * (&lcm / x.denom()),
            y.numer() * (&lcm / y.denom()),
            z.numer() * (&lcm / z.denom()),
        ];
        let mut g = BigInt::zero();
        for c in &v {
            g = g.gcd(c);
        }
        if let Some(first) = v.iter().find(|c| !c.is_zero()) {
            if first.is_negative() {
                g = -g;
            }
        }
        for c in &mut v {
            *c = &*c / &g;
        }
        let [x, y, z] = v;
        Some(ProjPoint { x, y, z })
    }

    pub fn from_affine(x: &Rat, y: &Rat) -> ProjPoint {
        ProjPoint::new(x.clone(), y.clone(), Rat::one()).expect("z = 1 is nonzero")
    }

    pub fn coords(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.x, &self.y, &self.z)
    }

    pub fn is_affine(&self) -> bool {
        !self.z.is_zero()
    }

    pub fn to_affine(&self) -> Option<(Rat, Rat)> {
        if self.z.is_zero() {
            return None;
        }
        Some((
            Rat::new(self.x.clone(), self.z.clone()),
            Rat::new(self.y.clone(), self.z.clone()),
        ))
    }

    /// max of coordinate magnitudes; the usual projective height on the
    /// normal form.
    pub fn height(&self) -> num_bigint::BigUint {
        let mut h = self.x.magnitude().clone();
        h = h.max(self.y.magnitude().clone());
        h.max(self.z.magnitude().clone())
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.x, self.y, self.z)
    }
}
