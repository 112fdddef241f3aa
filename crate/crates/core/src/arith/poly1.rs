//! Dense univariate polynomials over the rationals.
//!
//! Degrees stay tiny throughout (restrictions of sextics to lines, fiber
//! quartics, pencil discriminants), so a dense coefficient vector is the right
//! representation. All arithmetic is exact.

use super::rat::Rat;
use crate::error::ArithError;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly1 {
    /// `coeffs[i]` multiplies `s^i`; the last entry is nonzero unless the
    /// vector is empty (the zero polynomial).
    coeffs: Vec<Rat>,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn zero() -> Self {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly1::new(vec![c])
    }

    pub fn one() -> Self {
        Poly1::constant(Rat::one())
    }

    /// The monomial `c·s^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly1::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly1 { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly1::new(coeffs.iter().map(|&c| super::rat::rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly1 {
        if self.coeffs.len() <= 1 {
            return Poly1::zero();
        }
        Poly1::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Poly1 {
        if c.is_zero() {
            return Poly1::zero();
        }
        Poly1 {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `f(s + a)`.
    pub fn shift(&self, a: &Rat) -> Poly1 {
        let mut out = Poly1::zero();
        let lin = Poly1::new(vec![a.clone(), Rat::one()]);
        for c in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &Poly1::constant(c.clone());
        }
        out
    }

    /// `f(c·s)`.
    pub fn dilate(&self, c: &Rat) -> Poly1 {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pow;
                pow = &pow * c;
                v
            })
            .collect();
        Poly1::new(coeffs)
    }

    /// Reverse the coefficients: `s^n · f(1/s)` for `n = deg f`.
    pub fn reversed(&self) -> Poly1 {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly1::new(coeffs)
    }

    /// Quotient and remainder with `deg r < deg g`; exact field division.
    pub fn div_rem(&self, g: &Poly1) -> Result<(Poly1, Poly1), ArithError> {
        let gdeg = g.degree().ok_or(ArithError::DivisionByZeroPoly)?;
        let glead = g.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= gdeg {
            return Ok((Poly1::zero(), self.clone()));
        }
        let qlen = rem.len() - gdeg;
        let mut quot = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + gdeg].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / &glead;
            for (i, gc) in g.coeffs.iter().enumerate() {
                let v = &rem[k + i] - &(gc * &q);
                rem[k + i] = v;
            }
            quot[k] = q;
        }
        rem.truncate(gdeg);
        Ok((Poly1::new(quot), Poly1::new(rem)))
    }

    /// Division known to be exact; errors if a nonzero remainder shows up.
    pub fn div_exact(&self, g: &Poly1) -> Result<Poly1, ArithError> {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::InexactDivision)
        }
    }

    /// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
    pub fn gcd(&self, other: &Poly1) -> Poly1 {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(lc) => {
                let inv = Rat::one() / lc;
                a.scale(&inv)
            }
        }
    }

    /// Square-free part `f / gcd(f, f')`, normalized monic.
    pub fn square_free_part(&self) -> Result<Poly1, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let sf = self.div_exact(&g)?;
        let inv = Rat::one() / sf.leading().unwrap();
        Ok(sf.scale(&inv))
    }

    pub fn is_square_free(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).is_constant(),
        }
    }

    /// Sylvester resultant. Degenerate conventions: `res(f, c) = c^deg f` for a
    /// nonzero constant `c` (so `res(c, c') = 1`), undefined if both inputs are
    /// zero, and `0` if exactly one input is zero (shared factor with anything).
    pub fn resultant(&self, other: &Poly1) -> Result<Rat, ArithError> {
        let (fd, gd) = match (self.degree(), other.degree()) {
            (None, None) => return Err(ArithError::UndefinedResultant),
            (None, Some(_)) | (Some(_), None) => return Ok(Rat::zero()),
            (Some(f), Some(g)) => (f, g),
        };
        if fd == 0 && gd == 0 {
            return Ok(Rat::one());
        }
        if fd == 0 {
            return Ok(pow_rat(self.leading().unwrap(), gd as u32));
        }
        if gd == 0 {
            return Ok(pow_rat(other.leading().unwrap(), fd as u32));
        }
        // Sylvester matrix, eliminated over the field.
        let n = fd + gd;
        let mut m = vec![vec![Rat::zero(); n]; n];
        for row in 0..gd {
            for (k, c) in self.coeffs.iter().enumerate() {
                m[row][row + fd - k] = c.clone();
            }
        }
        for row in 0..fd {
            for (k, c) in other.coeffs.iter().enumerate() {
                m[gd + row][row + gd - k] = c.clone();
            }
        }
        Ok(det_fraction_field(m))
    }

    /// Discriminant `(-1)^{n(n-1)/2} · res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<Rat, ArithError> {
        let n = self.degree().ok_or(ArithError::ZeroPolynomial)?;
        if n < 2 {
            return Ok(Rat::one());
        }
        let res = self.resultant(&self.derivative())?;
        let sign = if (n * (n - 1) / 2) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        Ok(sign * res / self.leading().unwrap())
    }

    /// Scale so the coefficients are coprime integers with positive leading
    /// coefficient. Returns the integer coefficient vector.
    pub fn primitive_integer_coeffs(&self) -> Vec<num_bigint::BigInt> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        for v in &mut ints {
            *v = &*v / &g;
        }
        ints
    }
}

fn pow_rat(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Determinant by Gaussian elimination over the rationals.
fn det_fraction_field(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &p;
            let (upper, lower) = m.split_at_mut(row);
            let pivot_row = &upper[col];
            for (entry, pivot_entry) in lower[0].iter_mut().zip(pivot_row).skip(col) {
                let v = &*entry - &(pivot_entry * &factor);
                *entry = v;
            }
        }
    }
    det
}

impl Add for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &Poly1) -> Poly1 {
        if self.is_zero() || rhs.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + &(a * b);
                out[i + j] = v;
            }
        }
        Poly1::new(out)
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})s")?,
                _ => write!(f, "({c})s^{i}")?,
            }
        }
        Ok(())
    }
}
