//! Positive-dimension witness for holes bounded away from the square's edges.

use super::AnalysisError;
use crate::exact_geom::Rat;
use crate::holes::Hole;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `0.0^{⌊n/2⌋} 1 (0^n 1)^∞`, a bound on `min(x, y)` over the orbit of the
/// Cantor set `{10^n, 10^{n+1}}^*`.
pub fn witness_value(n: usize) -> Rat {
    let p: BigInt = BigInt::one() << (n + 1);
    Rat::new(p.clone(), (BigInt::one() << (n / 2 + 1)) * (p - 1))
}

/// Least `n >= 1` with `witness_value(n) < ε`, where `ε` is the least
/// coordinate over the closed hole. The hole's closure must lie in the open
/// unit square.
pub fn interior_witness(h: &Hole) -> Result<usize, AnalysisError> {
    let verts: Vec<_> = h.parts().iter().flat_map(|p| p.vertices()).collect();
    if verts.is_empty() {
        return Err(AnalysisError::Domain(format!("hole `{}` is empty", h.name)));
    }
    let one = Rat::one();
    if verts.iter().any(|v| !(v.x.is_positive() && v.y.is_positive() && v.x < one && v.y < one)) {
        return Err(AnalysisError::Domain(format!("hole `{}` touches the boundary of the square", h.name)));
    }
    let eps = verts.iter().map(|v| v.x.clone().min(v.y.clone())).min().expect("nonempty");
    debug_assert!(!eps.is_zero());
    Ok((1..).find(|&n| witness_value(n) < eps).expect("witness values tend to zero"))
}
