//! Sparse bivariate polynomials over the rationals.
//!
//! Sextics and their relatives are sparse, so terms live in a `BTreeMap`
//! keyed by `(deg_x, deg_y)`; the map never stores zero coefficients and the
//! sorted keys keep every iteration order deterministic.

use super::poly1::Poly1;
use super::rat::Rat;
use crate::error::ArithError;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly2::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rat)>) -> Self {
        let mut p = Poly2::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn from_i64_terms(terms: &[(u32, u32, i64)]) -> Self {
        Poly2::from_terms(
            terms
                .iter()
                .map(|&(i, j, c)| (i, j, super::rat::rat_int(c))),
        )
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rat)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        // cache powers; degrees are tiny
        let dx = self.degree_x().unwrap_or(0) as usize;
        let dy = self.degree_y().unwrap_or(0) as usize;
        let xp = powers(x, dx);
        let yp = powers(y, dy);
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * &xp[i as usize] * &yp[j as usize];
        }
        acc
    }

    pub fn partial_x(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * Rat::from_integer(i.into()));
            }
        }
        out
    }

    pub fn partial_y(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * Rat::from_integer(j.into()));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Terms of total degree exactly `k` (a form when the polynomial is
    /// expanded around the origin).
    pub fn homogeneous_part(&self, k: u32) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j == k)
                .map(|(&key, v)| (key, v.clone()))
                .collect(),
        }
    }

    /// Lowest total degree with a nonzero form; order of vanishing at the origin.
    pub fn vanishing_order_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    /// `f(x + a, y + b)`.
    pub fn translate(&self, a: &Rat, b: &Rat) -> Poly2 {
        let x = Poly2::from_terms([(1, 0, Rat::one()), (0, 0, a.clone())]);
        let y = Poly2::from_terms([(0, 1, Rat::one()), (0, 0, b.clone())]);
        self.substitute(&x, &y)
    }

    /// Substitute arbitrary polynomials for x and y.
    pub fn substitute(&self, x_sub: &Poly2, y_sub: &Poly2) -> Poly2 {
        let dx = self.degree_x().unwrap_or(0) as usize;
        let dy = self.degree_y().unwrap_or(0) as usize;
        let xp = poly_powers(x_sub, dx);
        let yp = poly_powers(y_sub, dy);
        let mut acc = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            let term = &xp[i as usize] * &yp[j as usize];
            acc = &acc + &term.scale(c);
        }
        acc
    }

    /// Restrict to a parametrized line `(x, y) = p0 + s·d`, producing a
    /// univariate polynomial in the parameter.
    pub fn restrict_to_line(&self, p0: (&Rat, &Rat), d: (&Rat, &Rat)) -> Poly1 {
        let x_sub = Poly1::new(vec![p0.0.clone(), d.0.clone()]);
        let y_sub = Poly1::new(vec![p0.1.clone(), d.1.clone()]);
        let dx = self.degree_x().unwrap_or(0) as usize;
        let dy = self.degree_y().unwrap_or(0) as usize;
        let xp = poly1_powers(&x_sub, dx);
        let yp = poly1_powers(&y_sub, dy);
        let mut acc = Poly1::zero();
        for (&(i, j), c) in &self.terms {
            let t = &xp[i as usize] * &yp[j as usize];
            acc = &acc + &t.scale(c);
        }
        acc
    }

    /// Coefficients in y: entry `k` is the Poly1 in x multiplying `y^k`.
    pub fn as_poly_in_y(&self) -> Vec<Poly1> {
        let dy = match self.degree_y() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let dx = self.degree_x().unwrap_or(0) as usize;
        let mut rows = vec![vec![Rat::zero(); dx + 1]; dy + 1];
        for (&(i, j), c) in &self.terms {
            rows[j as usize][i as usize] = c.clone();
        }
        rows.into_iter().map(Poly1::new).collect()
    }

    pub fn from_poly_in_y(rows: &[Poly1]) -> Poly2 {
        let mut out = Poly2::zero();
        for (j, row) in rows.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    /// Substitute a rational for x, leaving a univariate polynomial in y.
    pub fn specialize_x(&self, x0: &Rat) -> Poly1 {
        Poly1::new(self.as_poly_in_y().iter().map(|row| row.eval(x0)).collect())
    }

    /// Gcd over Q\[x\] of the y-coefficients: the y-free part of a
    /// factorization f = content·(y-primitive part).
    pub fn content_in_y(&self) -> Poly1 {
        content_y(self)
    }

    pub fn primitive_part_in_y(&self) -> Poly2 {
        primitive_part_y(self, &content_y(self))
    }

    /// Leading coefficient with respect to y, a polynomial in x.
    pub fn leading_coeff_in_y(&self) -> Poly1 {
        self.as_poly_in_y().pop().unwrap_or_else(Poly1::zero)
    }

    /// Swap the roles of x and y.
    pub fn swap_vars(&self) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Exact division; errors unless `g` divides `self`.
    pub fn div_exact(&self, g: &Poly2) -> Result<Poly2, ArithError> {
        if g.is_zero() {
            return Err(ArithError::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(Poly2::zero());
        }
        // long division in (Q[x])[y]; quotient coefficients must divide exactly
        let f_rows = self.as_poly_in_y();
        let g_rows = g.as_poly_in_y();
        let gdeg = g_rows.len() - 1;
        let glead = g_rows.last().unwrap();
        if glead.is_zero() {
            // g has zero leading row only if g is zero, handled above
            unreachable!();
        }
        let mut rem = f_rows;
        if rem.len() < g_rows.len() {
            return Err(ArithError::InexactDivision);
        }
        let qlen = rem.len() - gdeg;
        let mut quot = vec![Poly1::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + gdeg].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(glead)?;
            for (i, gc) in g_rows.iter().enumerate() {
                let v = &rem[k + i] - &(gc * &q);
                rem[k + i] = v;
            }
            quot[k] = q;
        }
        if rem.iter().take(gdeg).any(|r| !r.is_zero()) {
            return Err(ArithError::InexactDivision);
        }
        Ok(Poly2::from_poly_in_y(&quot))
    }

    /// Gcd up to a scalar, normalized to primitive integer coefficients with
    /// positive leading term.
    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        let g = gcd2(self, other);
        normalize(&g)
    }

    /// Product of the distinct irreducible factors, up to a scalar:
    /// `f / gcd(f, f_x, f_y)`, normalized.
    pub fn square_free_part(&self) -> Result<Poly2, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let g1 = gcd2(self, &self.partial_x());
        let g = gcd2(&g1, &self.partial_y());
        let sf = self.div_exact(&normalize(&g))?;
        Ok(normalize(&sf))
    }

    pub fn is_square_free(&self) -> bool {
        match self.square_free_part() {
            Err(_) => false,
            Ok(sf) => sf.total_degree() == self.total_degree(),
        }
    }

    /// True when the two polynomials differ by a nonzero rational scalar.
    pub fn proportional_to(&self, other: &Poly2) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (k0, c0) = self.terms.iter().next().unwrap();
        let Some(d0) = other.terms.get(k0) else {
            return false;
        };
        let ratio = c0 / d0;
        self.terms.iter().all(|(k, c)| {
            other
                .terms
                .get(k)
                .map(|d| d * &ratio == *c)
                .unwrap_or(false)
        })
    }

    /// Resultant with respect to y, a polynomial in x. Fraction-free Bareiss
    /// elimination of the Sylvester matrix over Q\[x\].
    pub fn resultant_y(&self, other: &Poly2) -> Result<Poly1, ArithError> {
        let f = self.as_poly_in_y();
        let g = other.as_poly_in_y();
        if f.is_empty() && g.is_empty() {
            return Err(ArithError::UndefinedResultant);
        }
        if f.is_empty() || g.is_empty() {
            return Ok(Poly1::zero());
        }
        let (fd, gd) = (f.len() - 1, g.len() - 1);
        if fd == 0 && gd == 0 {
            return Ok(Poly1::one());
        }
        let n = fd + gd;
        let mut m = vec![vec![Poly1::zero(); n]; n];
        for row in 0..gd {
            for (k, c) in f.iter().enumerate() {
                m[row][row + fd - k] = c.clone();
            }
        }
        for row in 0..fd {
            for (k, c) in g.iter().enumerate() {
                m[gd + row][row + gd - k] = c.clone();
            }
        }
        bareiss_det(m)
    }
}

/// Bareiss fraction-free determinant over Q[x]; every division is exact.
fn bareiss_det(mut m: Vec<Vec<Poly1>>) -> Result<Poly1, ArithError> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly1::one());
    }
    let mut sign_flip = false;
    let mut prev = Poly1::one();
    for col in 0..n - 1 {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(Poly1::zero());
        };
        if pivot != col {
            m.swap(pivot, col);
            sign_flip = !sign_flip;
        }
        for row in col + 1..n {
            for k in col + 1..n {
                let num = &(&m[col][col] * &m[row][k]) - &(&m[row][col] * &m[col][k]);
                m[row][k] = num.div_exact(&prev)?;
            }
            m[row][col] = Poly1::zero();
        }
        prev = m[col][col].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { -&det } else { det })
}

/// Plain gcd, not normalized. Recursive content/primitive-part structure over
/// (Q[x])[y] with a primitive PRS.
fn gcd2(f: &Poly2, g: &Poly2) -> Poly2 {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let fy = f.degree_y().unwrap();
    let gy = g.degree_y().unwrap();
    if fy == 0 && gy == 0 {
        // both univariate in x
        let fp = f.as_poly_in_y().remove(0);
        let gp = g.as_poly_in_y().remove(0);
        return from_poly1_x(&fp.gcd(&gp));
    }
    if fy == 0 {
        let fp = f.as_poly_in_y().remove(0);
        return from_poly1_x(&fp.gcd(&content_y(g)));
    }
    if gy == 0 {
        let gp = g.as_poly_in_y().remove(0);
        return from_poly1_x(&gp.gcd(&content_y(f)));
    }
    let cf = content_y(f);
    let cg = content_y(g);
    let cont_gcd = cf.gcd(&cg);
    let pf = primitive_part_y(f, &cf);
    let pg = primitive_part_y(g, &cg);
    let prs = primitive_prs_gcd(pf, pg);
    let prs = primitive_part_y(&prs, &content_y(&prs));
    &prs * &from_poly1_x(&cont_gcd)
}

/// Content in y: gcd over Q[x] of the y-coefficients.
fn content_y(f: &Poly2) -> Poly1 {
    let mut acc = Poly1::zero();
    for row in f.as_poly_in_y() {
        if row.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { row } else { acc.gcd(&row) };
        if acc.is_constant() {
            return Poly1::one();
        }
    }
    acc
}

fn primitive_part_y(f: &Poly2, content: &Poly1) -> Poly2 {
    if content.is_constant() {
        let inv = Rat::one() / content.leading().expect("nonzero content");
        return f.scale(&inv);
    }
    let rows: Vec<Poly1> = f
        .as_poly_in_y()
        .iter()
        .map(|r| {
            if r.is_zero() {
                Poly1::zero()
            } else {
                r.div_exact(content).expect("content divides")
            }
        })
        .collect();
    Poly2::from_poly_in_y(&rows)
}

fn from_poly1_x(p: &Poly1) -> Poly2 {
    let mut out = Poly2::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        out.add_term(i as u32, 0, c.clone());
    }
    out
}

/// Gcd of two y-primitive polynomials with deg_y >= 1 via pseudo-remainders,
/// re-primitivized every step.
fn primitive_prs_gcd(mut a: Poly2, mut b: Poly2) -> Poly2 {
    loop {
        if b.is_zero() {
            return a;
        }
        if b.degree_y().unwrap_or(0) == 0 {
            // remainder dropped to Q[x]; primitive inputs share only content there
            let br = b.as_poly_in_y().remove(0);
            let c = content_y(&a).gcd(&br);
            return from_poly1_x(&c);
        }
        if a.degree_y().unwrap_or(0) < b.degree_y().unwrap_or(0) {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = pseudo_rem_y(&a, &b);
        a = b;
        b = if r.is_zero() {
            Poly2::zero()
        } else {
            primitive_part_y(&r, &content_y(&r))
        };
    }
}

/// Pseudo-remainder in y, up to positive powers of lc(g); callers
/// re-primitivize afterwards so stray content is harmless.
fn pseudo_rem_y(f: &Poly2, g: &Poly2) -> Poly2 {
    let g_rows = g.as_poly_in_y();
    let n = g_rows.len() - 1;
    let glead = g_rows.last().unwrap().clone();
    let mut r = f.as_poly_in_y();
    loop {
        while r.last().is_some_and(|p| p.is_zero()) {
            r.pop();
        }
        if r.len() <= n {
            break;
        }
        let d = r.len() - 1;
        let top = r.last().unwrap().clone();
        // r <- lc(g)·r − top·y^(d-n)·g, killing the degree-d term
        for row in r.iter_mut() {
            *row = &*row * &glead;
        }
        for (i, gc) in g_rows.iter().enumerate() {
            let v = &r[d - n + i] - &(gc * &top);
            r[d - n + i] = v;
        }
        debug_assert!(r[d].is_zero());
        r.pop();
    }
    Poly2::from_poly_in_y(&r)
}

/// Scale to primitive integer coefficients with positive leading (lex) term.
pub fn normalize(f: &Poly2) -> Poly2 {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Signed;
    if f.is_zero() {
        return Poly2::zero();
    }
    let mut lcm = BigInt::one();
    for (_, _, c) in f.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    for (_, _, c) in f.terms() {
        g = g.gcd(&(c.numer() * (&lcm / c.denom())));
    }
    let lead = f.terms.iter().next_back().unwrap().1;
    let mut factor = Rat::new(lcm, g);
    if (lead.clone() * &factor).is_negative() {
        factor = -factor;
    }
    f.scale(&factor)
}

fn powers(x: &Rat, n: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rat::one());
    for i in 0..n {
        let v = &out[i] * x;
        out.push(v);
    }
    out
}

fn poly_powers(p: &Poly2, n: usize) -> Vec<Poly2> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Poly2::constant(Rat::one()));
    for i in 0..n {
        let v = &out[i] * p;
        out.push(v);
    }
    out
}

fn poly1_powers(p: &Poly1, n: usize) -> Vec<Poly1> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Poly1::one());
    for i in 0..n {
        let v = &out[i] * p;
        out.push(v);
    }
    out
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if i > 0 {
                write!(f, "x^{i}")?;
            }
            if j > 0 {
                write!(f, "y^{j}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rat_int};

    fn xy(terms: &[(u32, u32, i64)]) -> Poly2 {
        Poly2::from_i64_terms(terms)
    }

    #[test]
    fn arithmetic_and_eval() {
        // (x + y)(x - y) = x^2 - y^2
        let s = xy(&[(1, 0, 1), (0, 1, 1)]);
        let d = xy(&[(1, 0, 1), (0, 1, -1)]);
        let p = &s * &d;
        assert_eq!(p, xy(&[(2, 0, 1), (0, 2, -1)]));
        assert_eq!(p.eval(&rat_int(3), &rat_int(2)), rat_int(5));
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn translation_matches_evaluation() {
        let f = xy(&[(6, 0, 1), (0, 6, 1), (0, 0, -1)]); // x^6 + y^6 - 1
        let g = f.translate(&rat_int(2), &rat(-1, 3));
        assert_eq!(
            g.eval(&rat_int(0), &rat_int(0)),
            f.eval(&rat_int(2), &rat(-1, 3))
        );
        assert_eq!(
            g.eval(&rat(1, 2), &rat_int(5)),
            f.eval(&rat(5, 2), &rat(14, 3))
        );
    }

    #[test]
    fn line_restriction() {
        // x^6 + y^6 - 1 along y = 0: s^6 - 1
        let f = xy(&[(6, 0, 1), (0, 6, 1), (0, 0, -1)]);
        let r = f.restrict_to_line((&rat_int(0), &rat_int(0)), (&rat_int(1), &rat_int(0)));
        assert_eq!(r, Poly1::from_i64(&[-1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn exact_division_round_trip() {
        let a = xy(&[(2, 1, 3), (0, 2, -1), (1, 0, 5), (0, 0, 2)]);
        let b = xy(&[(1, 1, 2), (1, 0, -1), (0, 0, 7)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(xy(&[(1, 0, 1)]).div_exact(&b).is_err());
    }

    #[test]
    fn gcd_of_products() {
        let a = xy(&[(1, 0, 1), (0, 1, 1)]); // x + y
        let b = xy(&[(1, 0, 1), (0, 1, -1)]); // x - y
        let c = xy(&[(2, 0, 1), (0, 1, 3), (0, 0, -2)]);
        let f = &(&a * &a) * &c;
        let g = &(&a * &b) * &c;
        let gcd = f.gcd(&g);
        assert!(gcd.proportional_to(&(&a * &c)));
    }

    #[test]
    fn gcd_handles_univariate_edges() {
        let fx = xy(&[(2, 0, 1), (0, 0, -1)]); // x^2 - 1 (no y)
        let g = &xy(&[(1, 0, 1), (0, 0, -1)]) * &xy(&[(0, 1, 1), (0, 0, 4)]); // (x-1)(y+4)
        assert!(fx.gcd(&g).proportional_to(&xy(&[(1, 0, 1), (0, 0, -1)])));
        let coprime = xy(&[(0, 1, 1)]);
        assert!(fx
            .gcd(&coprime)
            .proportional_to(&Poly2::constant(Rat::one())));
    }

    #[test]
    fn square_free_part_examples() {
        // (x+y)^2 (x-y) -> (x+y)(x-y) up to scalar
        let a = xy(&[(1, 0, 1), (0, 1, 1)]);
        let b = xy(&[(1, 0, 1), (0, 1, -1)]);
        let f = &(&a * &a) * &b;
        let sf = f.square_free_part().unwrap();
        assert!(sf.proportional_to(&(&a * &b)));

        // x^6 + y^6 - 1 is already reduced: gcd(f, f_x, f_y) is constant
        let fermat = xy(&[(6, 0, 1), (0, 6, 1), (0, 0, -1)]);
        let g1 = gcd2(&fermat, &fermat.partial_x());
        let g = gcd2(&g1, &fermat.partial_y());
        assert_eq!(g.total_degree(), Some(0));
        assert!(fermat.square_free_part().unwrap().proportional_to(&fermat));
        assert!(fermat.is_square_free());

        // x^2 -> x
        let x2 = xy(&[(2, 0, 1)]);
        assert!(x2
            .square_free_part()
            .unwrap()
            .proportional_to(&xy(&[(1, 0, 1)])));
        assert!(!x2.is_square_free());
    }

    #[test]
    fn resultant_y_detects_common_factors() {
        let a = xy(&[(1, 0, 1), (0, 1, 1)]);
        let b = xy(&[(1, 0, 1), (0, 1, -1)]);
        let c = xy(&[(0, 1, 1), (2, 0, 1), (0, 0, 1)]);
        // share the factor a
        let r = (&a * &c).resultant_y(&(&a * &b)).unwrap();
        assert!(r.is_zero());
        // coprime: resultant nonzero, and vanishes exactly under the common-root x-values
        let r2 = b.resultant_y(&c).unwrap();
        assert!(!r2.is_zero());
        // b: y = x; c: y = -(x^2+1); common root where x = -(x^2+1), i.e. x^2+x+1 = 0
        let expect = Poly1::from_i64(&[1, 1, 1]);
        let ratio = &r2.coeff(0) / &expect.coeff(0);
        assert_eq!(r2, expect.scale(&ratio));
    }

    #[test]
    fn resultant_y_matches_specialization() {
        // res_y(f, g)(x0) = res(f(x0, ·), g(x0, ·)) up to the degree-drop cases
        let f = xy(&[(0, 2, 1), (1, 1, -2), (0, 1, 1), (3, 0, 1), (0, 0, -7)]);
        let g = xy(&[(0, 3, 2), (2, 1, 1), (1, 0, -1), (0, 0, 3)]);
        let r = f.resultant_y(&g).unwrap();
        for x0 in [-3i64, -1, 0, 2, 5, 9] {
            let x0 = rat_int(x0);
            let fv = f.specialize_x(&x0);
            let gv = g.specialize_x(&x0);
            // leading y-coefficients are constants here, so no degree drop
            assert_eq!(fv.resultant(&gv).unwrap(), r.eval(&x0));
        }
    }

    #[test]
    fn swap_and_parts() {
        let f = xy(&[(2, 1, 5), (0, 3, -1)]);
        assert_eq!(f.swap_vars(), xy(&[(1, 2, 5), (3, 0, -1)]));
        assert_eq!(f.homogeneous_part(3), f);
        assert!(f.homogeneous_part(2).is_zero());
        assert_eq!(f.vanishing_order_at_origin(), Some(3));
    }
}
