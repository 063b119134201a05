//! The quadratic-cofactor machinery.
//!
//! A quadratic `(X−p)² + q²` with `p, q > 0` admits a positive-coefficient
//! cofactor whose degree depends only on the ratio `h = p/q` and sits just
//! above `π·h`. The degree comes from the sign of the sequence
//! `Cᵢ = 2p·Cᵢ₋₁ − (p²+q²)·Cᵢ₋₂`; dividing consecutive terms gives the
//! O(1)-memory ratio recurrence `tᵢ = 2p − (p²+q²)/tᵢ₋₁` used for large
//! ratios, cross-checked against the exact rational recurrence where the
//! exact values stay tractable. The explicit cofactor itself is produced by
//! the exact LP and re-verified by exact expansion.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::lp::{solve_feasibility, LinearProgram, LpOutcome};
use crate::rational::{floor_pi_times, format_rat, Rat};
use crate::unipoly::UniPoly;
use crate::{Error, Result};

/// The tabulated ratios for which the first-negative index is known exactly.
pub const DEFAULT_RATIOS: [f64; 24] = [
    1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 9.0, 12.0, 13.0, 15.0, 19.0, 20.0, 30.0, 34.0, 36.0, 40.0,
    41.0, 49.0, 50.0, 51.0, 100.0, 200.0, 1000.0, 10000.0,
];

const ITERATION_GUARD: u64 = 100_000_000;

/// Smallest `i ≥ 1` with `Cᵢ ≤ 0`, via the double-precision ratio
/// recurrence at `p = h, q = 1`.
pub fn negative_index(h: f64) -> Result<u64> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain(format!("ratio must be positive and finite, got {h}")));
    }
    let s = h * h + 1.0;
    let mut t = 2.0 * h; // t₁ = C₁/C₀
    let mut i = 1u64;
    while t > 0.0 {
        i += 1;
        t = 2.0 * h - s / t;
        if i > ITERATION_GUARD {
            return Err(Error::Resource(format!(
                "no sign change within {ITERATION_GUARD} recurrence steps at h = {h}"
            )));
        }
    }
    Ok(i)
}

/// Same index from the exact rational recurrence at arbitrary `(p, q)`.
/// Values grow exponentially, so this is only meant for small ratios.
pub fn negative_index_exact(p: &Rat, q: &Rat) -> Result<u64> {
    if !p.is_positive() || !q.is_positive() {
        return Err(Error::Domain("p and q must be positive".into()));
    }
    let two_p = p + p;
    let s = p * p + q * q;
    let mut prev = Rat::from_integer(1.into()); // C₀
    let mut cur = two_p.clone(); // C₁
    let mut i = 1u64;
    loop {
        if cur <= Rat::zero() {
            return Ok(i);
        }
        let next = &two_p * &cur - &s * &prev;
        prev = cur;
        cur = next;
        i += 1;
        if i > 1_000_000 {
            return Err(Error::Resource(format!(
                "exact recurrence exceeded 1e6 steps at p/q = {}",
                format_rat(&(p / q))
            )));
        }
    }
}

/// `negative_index(h) / h`, the quantity that drifts toward π.
pub fn pi_estimate(h: f64) -> Result<f64> {
    Ok(negative_index(h)? as f64 / h)
}

/// `1 + INT(π·p/q)`.
pub fn theorem1_degree(p: &Rat, q: &Rat) -> Result<u64> {
    if !p.is_positive() || !q.is_positive() {
        return Err(Error::Domain("p and q must be positive".into()));
    }
    let f = floor_pi_times(&(p / q))?;
    f.to_u64()
        .map(|v| v + 1)
        .ok_or_else(|| Error::Resource("cofactor degree out of range".into()))
}

/// One row of the ratio scan.
#[derive(Debug, Clone, PartialEq)]
pub struct CofactorRun {
    pub h: f64,
    pub negative_index: u64,
    pub pi_estimate: f64,
}

pub fn scan_ratios(ratios: &[f64]) -> Result<Vec<CofactorRun>> {
    ratios
        .iter()
        .map(|&h| {
            let idx = negative_index(h)?;
            Ok(CofactorRun { h, negative_index: idx, pi_estimate: idx as f64 / h })
        })
        .collect()
}

/// An explicit positive-coefficient cofactor and its exactly-expanded
/// product with the quadratic.
#[derive(Debug, Clone, PartialEq)]
pub struct CofactorWitness {
    pub quadratic: UniPoly,
    pub r: UniPoly,
    pub product: UniPoly,
    pub degree: usize,
}

/// `(X−p)² + q²` as an exact polynomial.
pub fn quadratic_poly(p: &Rat, q: &Rat) -> UniPoly {
    UniPoly::new(vec![p * p + q * q, -(p + p), Rat::from_integer(1.into())])
}

/// Finds `R` with coefficients ≥ 1 whose product with `(X−p)² + q²` has
/// every coefficient ≥ 1, starting at the first-negative index of the
/// ratio and allowing the small slack the strictness rescaling needs.
pub fn build_cofactor(p: &Rat, q: &Rat) -> Result<CofactorWitness> {
    if !p.is_positive() || !q.is_positive() {
        return Err(Error::Domain("p and q must be positive".into()));
    }
    let quad = quadratic_poly(p, q);
    let h = (p / q)
        .to_f64()
        .ok_or_else(|| Error::Domain("ratio out of f64 range".into()))?;
    let d_start = negative_index(h)? as usize;
    let d_max = (theorem1_degree(p, q)? as usize + 2).max(d_start + 2);

    for d in d_start..=d_max {
        let mut lp = LinearProgram {
            num_vars: d + 1,
            constraints: Vec::new(),
            lower_bounds: vec![Some(Rat::from_integer(1.into())); d + 1],
        };
        // product coefficient k = Σ_j quad[k−j]·r_j ≥ 1
        for k in 0..=d + 2 {
            let mut row = vec![Rat::zero(); d + 1];
            for (offset, qc) in quad.coeffs().iter().enumerate() {
                if k >= offset && k - offset <= d {
                    row[k - offset] = qc.clone();
                }
            }
            lp.require_ge(row, Rat::from_integer(1.into()));
        }
        if let LpOutcome::Feasible { point } = solve_feasibility(&lp)? {
            let r = UniPoly::new(point);
            let product = quad.mul(&r);
            let all_positive = r.coeffs().iter().all(Signed::is_positive)
                && product.coeffs().iter().all(Signed::is_positive)
                && product.degree() == Some(d + 2);
            if !all_positive {
                return Err(Error::Internal(format!(
                    "cofactor verification failed at degree {d} for p = {}, q = {}",
                    format_rat(p),
                    format_rat(q)
                )));
            }
            return Ok(CofactorWitness { quadratic: quad, r, product, degree: d });
        }
    }
    Err(Error::Internal(format!(
        "no cofactor up to degree {d_max} for p = {}, q = {}; this contradicts the degree bound",
        format_rat(p),
        format_rat(q)
    )))
}
