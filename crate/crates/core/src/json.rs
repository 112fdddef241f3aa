//! JSON conventions shared by every interface: rationals as canonical
//! strings, polynomials as sparse monomial lists. Round trips are bit-exact.

use crate::arith::poly1::Poly1;
use crate::arith::poly2::Poly2;
use crate::arith::rat::{rat_from_str, rat_to_string, Rat};
use num_traits::Zero;
use serde_json::Value;

/// serde adapter: a `Rat` field as its canonical string.
pub mod rat_string {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        rat_from_str(&s).map_err(de::Error::custom)
    }
}

pub fn rat_value(r: &Rat) -> Value {
    Value::String(rat_to_string(r))
}

pub fn rat_from_value(v: &Value) -> Result<Rat, String> {
    match v {
        Value::String(s) => rat_from_str(s),
        Value::Number(n) => rat_from_str(&n.to_string()),
        other => Err(format!("expected a rational string, got {other}")),
    }
}

/// Bivariate polynomial as `[[i, j, "c"], ...]`, sorted by exponents.
pub fn poly2_to_value(p: &Poly2) -> Value {
    Value::Array(
        p.terms()
            .map(|(i, j, c)| Value::Array(vec![i.into(), j.into(), rat_value(c)]))
            .collect(),
    )
}

pub fn poly2_from_value(v: &Value) -> Result<Poly2, String> {
    let rows = v.as_array().ok_or("expected an array of monomials")?;
    let mut p = Poly2::zero();
    for row in rows {
        let triple = row
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or("monomial must be [i, j, \"c\"]")?;
        let i = triple[0]
            .as_u64()
            .ok_or("exponent must be a nonnegative integer")? as u32;
        let j = triple[1]
            .as_u64()
            .ok_or("exponent must be a nonnegative integer")? as u32;
        p.add_term(i, j, rat_from_value(&triple[2])?);
    }
    Ok(p)
}

/// Univariate polynomial as `[[i, "c"], ...]`, sorted by exponent.
pub fn poly1_to_value(p: &Poly1) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Value::Array(vec![i.into(), rat_value(c)]))
            .collect(),
    )
}

pub fn poly1_from_value(v: &Value) -> Result<Poly1, String> {
    let rows = v.as_array().ok_or("expected an array of monomials")?;
    let mut coeffs: Vec<(usize, Rat)> = Vec::new();
    for row in rows {
        let pair = row
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or("monomial must be [i, \"c\"]")?;
        let i = pair[0]
            .as_u64()
            .ok_or("exponent must be a nonnegative integer")? as usize;
        coeffs.push((i, rat_from_value(&pair[1])?));
    }
    let deg = coeffs.iter().map(|(i, _)| *i).max().unwrap_or(0);
    let mut dense = vec![Rat::zero(); deg + 1];
    for (i, c) in coeffs {
        dense[i] = &dense[i] + &c;
    }
    Ok(Poly1::new(dense))
}
