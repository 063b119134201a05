//! Classical ground truth for the certificate machinery.
//!
//! Real-root counting is exact (Sturm chains over rationals, with
//! right-limit sign evaluation so multiple roots and root endpoints need no
//! special casing). Complex roots are float approximations from an
//! Aberth-style simultaneous iteration; they only ever feed the β degree
//! heuristic, never a certificate.

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::Rat;
use crate::unipoly::{BetaMode, UniPoly};
use crate::{Error, Result};

/// Interval endpoint for root counting; finite endpoints use right-limit
/// sign semantics, so `(lo, hi]` is counted exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// The signed remainder chain of (P, P′).
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            polys.push(d);
            loop {
                let n = polys.len();
                let (_, r) = polys[n - 2].div_rem(&polys[n - 1])?;
                if r.is_zero() {
                    break;
                }
                polys.push(r.neg());
            }
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    /// Sign variations in the chain at an endpoint (right limit for finite
    /// points, leading behavior at ±∞).
    pub fn variations_at(&self, at: &Endpoint) -> usize {
        let mut count = 0usize;
        let mut prev = 0i8;
        for f in &self.polys {
            let s = match at {
                Endpoint::PosInf => sign_at_pos_inf(f),
                Endpoint::NegInf => sign_at_neg_inf(f),
                Endpoint::Finite(c) => sign_at_right_of(f, c),
            };
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }
}

fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_pos_inf(f: &UniPoly) -> i8 {
    f.leading().map_or(0, sign_of)
}

fn sign_at_neg_inf(f: &UniPoly) -> i8 {
    match f.degree() {
        None => 0,
        Some(d) => {
            let s = sign_of(f.leading().unwrap());
            if d % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sign of `f` just right of `c`: the lowest nonzero coefficient of
/// `f(X+c)`.
fn sign_at_right_of(f: &UniPoly, c: &Rat) -> i8 {
    let v = f.evaluate(c);
    if !v.is_zero() {
        return sign_of(&v);
    }
    f.shifted(c)
        .coeffs()
        .iter()
        .find(|x| !x.is_zero())
        .map_or(0, sign_of)
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &UniPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    let ordered = match (lo, hi) {
        (Endpoint::NegInf, Endpoint::NegInf) | (Endpoint::PosInf, Endpoint::PosInf) => false,
        (Endpoint::NegInf, _) | (_, Endpoint::PosInf) => true,
        (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => false,
        (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
    };
    if !ordered {
        return Err(Error::Domain("sturm_count requires lo < hi".into()));
    }
    let chain = SturmChain::new(p)?;
    let va = chain.variations_at(lo);
    let vb = chain.variations_at(hi);
    Ok(va.saturating_sub(vb))
}

/// Distinct real roots anywhere on the line.
pub fn count_real_roots(p: &UniPoly) -> Result<usize> {
    sturm_count(p, &Endpoint::NegInf, &Endpoint::PosInf)
}

pub fn has_real_root(p: &UniPoly) -> Result<bool> {
    Ok(count_real_roots(p)? > 0)
}

/// `sturm_count(P, 0, +∞) > 0`.
pub fn has_positive_real_root(p: &UniPoly) -> Result<bool> {
    Ok(sturm_count(p, &Endpoint::Finite(Rat::zero()), &Endpoint::PosInf)? > 0)
}

/// Float approximations to all complex roots, with the max residual of the
/// monic polynomial over the returned roots.
#[derive(Debug, Clone)]
pub struct ComplexRootSet {
    pub roots: Vec<(f64, f64)>,
    pub residual: f64,
}

const ABERTH_MAX_ITERS: usize = 200;
const ABERTH_STEP_TOL: f64 = 1e-14;
const RESIDUAL_TOL: f64 = 1e-8;
/// Relative threshold deciding "nonzero imaginary component".
const IMAG_ZERO_THRESHOLD: f64 = 1e-9;

/// Aberth–Ehrlich simultaneous iteration, initialized on a circle of
/// radius `1 + max|aᵢ/a_N|`.
pub fn complex_roots(p: &UniPoly) -> Result<ComplexRootSet> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::Domain("complex_roots requires degree >= 1".into()));
    }
    let lead = p.leading().unwrap().clone();
    let monic: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| {
            (c / &lead)
                .to_f64()
                .ok_or_else(|| Error::Domain("coefficient out of f64 range".into()))
        })
        .collect::<Result<_>>()?;

    if deg == 1 {
        let root = -monic[0];
        return Ok(ComplexRootSet { roots: vec![(root, 0.0)], residual: 0.0 });
    }

    let radius = 1.0 + monic[..deg].iter().fold(0.0f64, |a, &c| a.max(c.abs()));
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.7;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    };

    let mut iterations = 0;
    for iter in 0..ABERTH_MAX_ITERS {
        iterations = iter + 1;
        let mut max_step = 0.0f64;
        for k in 0..deg {
            let (v, d) = eval(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let w = if d.norm() == 0.0 {
                // stationary point; nudge off it
                Complex64::new(1e-6, 1e-6)
            } else {
                v / d
            };
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.norm() > 0.0 {
                        s += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() == 0.0 { w } else { w / denom };
            z[k] -= step;
            let rel = step.norm() / z[k].norm().max(1.0);
            max_step = max_step.max(rel);
        }
        if max_step < ABERTH_STEP_TOL {
            break;
        }
    }

    let residual = z
        .iter()
        .map(|&zk| eval(zk).0.norm())
        .fold(0.0f64, f64::max);
    if !residual.is_finite() || residual > RESIDUAL_TOL {
        return Err(Error::NonConvergence { residual, iterations });
    }

    let mut roots: Vec<(f64, f64)> = z.iter().map(|c| (c.re, c.im)).collect();
    // snap numerically-real roots onto the axis and order deterministically
    for r in roots.iter_mut() {
        let scale = (r.0 * r.0 + r.1 * r.1).sqrt().max(1.0);
        if r.1.abs() <= IMAG_ZERO_THRESHOLD * scale {
            r.1 = 0.0;
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(ComplexRootSet { roots, residual })
}

/// β lower bound extracted from the approximate root set.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaEstimate {
    pub value: f64,
    pub mode: BetaMode,
    pub applicable: bool,
}

pub fn beta_estimate(p: &UniPoly, mode: BetaMode) -> Result<BetaEstimate> {
    let set = complex_roots(p)?;
    let mut best: Option<f64> = None;
    for &(re, im) in &set.roots {
        let scale = (re * re + im * im).sqrt().max(1.0);
        if im.abs() <= IMAG_ZERO_THRESHOLD * scale {
            continue;
        }
        let v = match mode {
            BetaMode::Imag => im.abs(),
            BetaMode::Ratio => {
                if re.abs() <= IMAG_ZERO_THRESHOLD * scale {
                    continue;
                }
                (im / re).abs()
            }
        };
        best = Some(best.map_or(v, |b: f64| b.min(v)));
    }
    Ok(match best {
        Some(v) => BetaEstimate { value: v, mode, applicable: true },
        None => BetaEstimate { value: 0.0, mode, applicable: false },
    })
}

/// One `((X−p)² + q²)` factor of `square(P)/leading²`; `q = 0` marks a real
/// root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticComponent {
    pub p: f64,
    pub q: f64,
}

/// Pairs the roots of `square(P)` into quadratic components: one per real
/// root of `P`, two per conjugate pair.
pub fn quadratic_components(p: &UniPoly) -> Result<Vec<QuadraticComponent>> {
    let set = complex_roots(p)?;
    let mut components = Vec::new();
    let mut upper: Vec<(f64, f64)> = Vec::new();
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &(re, im) in &set.roots {
        if im == 0.0 {
            components.push(QuadraticComponent { p: re, q: 0.0 });
        } else if im > 0.0 {
            upper.push((re, im));
        } else {
            lower.push((re, im));
        }
    }
    // match each upper-half root with its nearest conjugate candidate
    for (re, im) in upper {
        let target = (re, -im);
        let pick = lower
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let da = (a.0 - target.0).hypot(a.1 - target.1);
                let db = (b.0 - target.0).hypot(b.1 - target.1);
                da.partial_cmp(&db).unwrap()
            })
            .map(|(i, _)| i);
        let (cre, cim) = match pick {
            Some(i) => lower.remove(i),
            None => target,
        };
        let pp = (re + cre) / 2.0;
        let qq = (im - cim) / 2.0;
        components.push(QuadraticComponent { p: pp, q: qq });
        components.push(QuadraticComponent { p: pp, q: qq });
    }
    // stray unpaired lower-half roots (should not happen for real input)
    for (re, im) in lower {
        components.push(QuadraticComponent { p: re, q: im.abs() });
        components.push(QuadraticComponent { p: re, q: im.abs() });
    }
    components.sort_by(|a, b| (a.p, a.q).partial_cmp(&(b.p, b.q)).unwrap());
    Ok(components)
}
