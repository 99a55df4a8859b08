//! Text and JSON encodings of exact values.

use super::{ConvexPoly, GeomError, Point, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// `"num/den"` in lowest terms (integers keep the `/1`).
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"n/d"`, an integer, or a decimal literal with optional exponent
/// (`"0.13"`, `"1e-10"`). Decimals are read exactly.
pub fn parse_rat(s: &str) -> Result<Rat, GeomError> {
    let bad = || GeomError::BadRational(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rat::from_integer(BigInt::from_str(&digits).map_err(|_| bad())?);
    let scale = exp - frac_part.len() as i32;
    let ten = Rat::from_integer(BigInt::from(10));
    let p = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= p;
    } else {
        value /= p;
    }
    Ok(if neg { -value } else { value })
}

/// Serialized polygon: `{"vertices": [[["n","d"],["n","d"]], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vertices: Vec<[[String; 2]; 2]>,
}

fn rat_pair(r: &Rat) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

fn pair_rat(p: &[String; 2]) -> Result<Rat, GeomError> {
    parse_rat(&format!("{}/{}", p[0], p[1]))
}

impl PolyJson {
    pub fn from_poly(poly: &ConvexPoly) -> Self {
        PolyJson { vertices: poly.vertices().iter().map(|v| [rat_pair(&v.x), rat_pair(&v.y)]).collect() }
    }

    pub fn points(&self) -> Result<Vec<Point>, GeomError> {
        self.vertices.iter().map(|[x, y]| Ok(Point::new(pair_rat(x)?, pair_rat(y)?))).collect()
    }

    pub fn to_poly(&self) -> Result<ConvexPoly, GeomError> {
        ConvexPoly::from_vertices(self.points()?)
    }

    pub fn parse(text: &str) -> Result<PolyJson, GeomError> {
        serde_json::from_str(text).map_err(|e| GeomError::BadJson(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("string fields serialize")
    }
}
