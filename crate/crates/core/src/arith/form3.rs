//! Homogeneous forms in three variables (x0, x1, x2).
//!
//! Used by the weighted-hypersurface pipeline, where the coefficients of the
//! fiber cubic are forms of degrees 2, 4 and 6. A form knows its degree; the
//! zero form of a given degree is allowed.

use super::poly2::Poly2;
use super::rat::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Form3 {
    /// (i, j, k) -> coefficient with i + j + k == degree, no zeros stored.
    terms: BTreeMap<(u32, u32, u32), Rat>,
    degree: u32,
}

impl Form3 {
    pub fn zero(degree: u32) -> Self {
        Form3 {
            terms: BTreeMap::new(),
            degree,
        }
    }

    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (u32, u32, u32, Rat)>,
    ) -> Result<Self, String> {
        let mut f = Form3::zero(degree);
        for (i, j, k, c) in terms {
            if i + j + k != degree {
                return Err(format!(
                    "monomial ({i},{j},{k}) is not homogeneous of degree {degree}"
                ));
            }
            f.add_term(i, j, k, c);
        }
        Ok(f)
    }

    pub fn add_term(&mut self, i: u32, j: u32, k: u32, c: Rat) {
        debug_assert_eq!(i + j + k, self.degree);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j, k)) {
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

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, &Rat)> {
        self.terms.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn eval(&self, x: &[Rat; 3]) -> Rat {
        let d = self.degree as usize;
        let p0 = pow_table(&x[0], d);
        let p1 = pow_table(&x[1], d);
        let p2 = pow_table(&x[2], d);
        let mut acc = Rat::zero();
        for (&(i, j, k), c) in &self.terms {
            acc += c * &p0[i as usize] * &p1[j as usize] * &p2[k as usize];
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Form3 {
        let mut out = Form3::zero(self.degree.saturating_sub(1));
        for (&(i, j, k), c) in &self.terms {
            let e = [i, j, k][var];
            if e == 0 {
                continue;
            }
            let mut idx = [i, j, k];
            idx[var] = e - 1;
            out.add_term(idx[0], idx[1], idx[2], c * Rat::from_integer(e.into()));
        }
        out
    }

    pub fn add(&self, other: &Form3) -> Form3 {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (&(i, j, k), c) in &other.terms {
            out.add_term(i, j, k, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Form3) -> Form3 {
        let mut out = Form3::zero(self.degree + other.degree);
        for (&(a, b, c), u) in &self.terms {
            for (&(d, e, f), v) in &other.terms {
                out.add_term(a + d, b + e, c + f, u * v);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Form3 {
        if c.is_zero() {
            return Form3::zero(self.degree);
        }
        Form3 {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
            degree: self.degree,
        }
    }

    /// Chart x0 = 1: bivariate polynomial in (x1, x2).
    pub fn dehomogenize(&self) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(_, j, k), c) in &self.terms {
            out.add_term(j, k, c.clone());
        }
        out
    }

    /// Homogenize a bivariate polynomial to the given degree using x0.
    pub fn homogenize(p: &Poly2, degree: u32) -> Result<Form3, String> {
        let mut out = Form3::zero(degree);
        for (j, k, c) in p.terms() {
            if j + k > degree {
                return Err(format!(
                    "term of degree {} exceeds target degree {degree}",
                    j + k
                ));
            }
            out.add_term(degree - j - k, j, k, c.clone());
        }
        Ok(out)
    }

    /// Composition with the coordinate rotation inverse to rotating a point
    /// left by `new_zero` slots: if y = (x_{nz}, x_{nz+1}, x_{nz+2}) then
    /// `f.rotate_vars(nz).eval(y) == f.eval(x)`.
    pub fn rotate_vars(&self, new_zero: usize) -> Form3 {
        let mut out = Form3::zero(self.degree);
        for (&(i, j, k), c) in &self.terms {
            let idx = [i, j, k];
            let r = |v: usize| idx[(v + new_zero) % 3];
            out.add_term(r(0), r(1), r(2), c.clone());
        }
        out
    }
}

fn pow_table(x: &Rat, n: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rat::from_integer(1.into()));
    for i in 0..n {
        let v = &out[i] * x;
        out.push(v);
    }
    out
}

impl fmt::Debug for Form3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0[deg {}]", self.degree);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j, k), c)| format!("({c})x0^{i}x1^{j}x2^{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
