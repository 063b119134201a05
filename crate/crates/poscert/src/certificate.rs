//! The univariate decision procedure.
//!
//! `find_multiplier` searches, at a fixed degree `D`, for a multiplier
//! `T ≥ 0` making every coefficient of `V = P·T` at least 1; the
//! constraint system is positively homogeneous in `T`, so this is
//! equivalent to strict positivity. A feasible point is a certificate that
//! `P` has no root in `]0, ∞[` (any sign change in `P` would force one in
//! `V` by Descartes' rule), and it is re-verified by exact multiplication
//! before being returned. `decide_positive_root` wraps this in iterative
//! deepening: feasibility at any degree is sound, while exhausting the
//! schedule below the β-based degree bound is only a bounded-search
//! answer, which the Sturm oracle resolves when cross-checking is enabled.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lp::{solve_feasibility, LinearProgram, LpOutcome};
use crate::oracle;
use crate::rational::{floor_pi_times, format_rat, Rat};
use crate::unipoly::{BetaMode, UniPoly};
use crate::{Error, Result};

/// A verified multiplier: `T` has nonnegative coefficients, and `V = P·T`
/// has every coefficient strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityCertificate {
    pub t: UniPoly,
    pub v: UniPoly,
    pub d: usize,
}

/// Knobs for the deepening search.
#[derive(Debug, Clone)]
pub struct DecisionConfig {
    pub beta_override: Option<Rat>,
    pub degree_cap: usize,
    pub use_oracle_crosscheck: bool,
}

pub const DEFAULT_DEGREE_CAP: usize = 64;

impl Default for DecisionConfig {
    fn default() -> Self {
        DecisionConfig {
            beta_override: None,
            degree_cap: DEFAULT_DEGREE_CAP,
            use_oracle_crosscheck: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NoPositiveRoot,
    PositiveRootExists,
}

/// Outcome of `decide_positive_root`.
#[derive(Debug, Clone)]
pub struct Decision {
    pub verdict: Verdict,
    /// Present exactly when the verdict is certificate-backed. It applies
    /// to the sign-normalized, X^k-stripped polynomial.
    pub certificate: Option<PositivityCertificate>,
    pub attempted_degrees: Vec<usize>,
    /// True when every attempted degree was infeasible but the schedule
    /// stopped short of the β-based bound, so LP infeasibility alone does
    /// not prove a positive root.
    pub bounded_search: bool,
    /// Sturm ground truth (`true` = has a positive real root), when
    /// cross-checking was enabled.
    pub oracle_has_positive_root: Option<bool>,
    /// The certificate is for `−P/X^k` rather than `P/X^k`.
    pub negated: bool,
    /// Power of X factored out before the search.
    pub stripped_power: usize,
}

/// `1 + INT(2π·β⁻¹·M²·N³)`, the multiplier degree at which the search is
/// complete.
pub fn degree_bound(n: usize, m: &Rat, beta: &Rat) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("degree bound needs N >= 1".into()));
    }
    if !beta.is_positive() {
        return Err(Error::Domain(format!("beta must be positive, got {}", format_rat(beta))));
    }
    let n_rat = Rat::from_integer(BigInt::from(n));
    let x = Rat::from_integer(2.into()) / beta * m * m * &n_rat * &n_rat * &n_rat;
    Ok(floor_pi_times(&x)? + 1)
}

/// True iff `T ≠ 0` with nonnegative coefficients and `P·T` has every
/// coefficient strictly positive — the checkable content of a
/// no-positive-root answer.
pub fn verify_certificate(p: &UniPoly, t: &UniPoly) -> bool {
    if t.is_zero() || t.coeffs().iter().any(Signed::is_negative) {
        return false;
    }
    let v = p.mul(t);
    !v.is_zero() && v.coeffs().iter().all(Signed::is_positive)
}

/// Scans a grid of positive rationals below the Cauchy root bound for a
/// point where `P ≤ 0`. Missing a dip is harmless: the LP still decides.
fn evaluation_witness(p: &UniPoly) -> bool {
    let n = match p.degree() {
        Some(n) if n > 0 => n,
        _ => return false,
    };
    let lead = p.leading().unwrap();
    let bound = Rat::one()
        + p.coeffs()[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rat::zero);
    let step = bound / Rat::from_integer(64.into());
    let mut x = Rat::zero();
    for _ in 0..64 {
        x += &step;
        if !p.evaluate(&x).is_positive() {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiplierSearch {
    Feasible(PositivityCertificate),
    InfeasibleAtDegree(usize),
}

/// LP search for a degree-`D` multiplier. Requires a nonzero constant
/// term (strip X^k first).
pub fn find_multiplier(p: &UniPoly, d: usize) -> Result<MultiplierSearch> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if p.coeff(0).is_zero() {
        return Err(Error::Domain(
            "find_multiplier needs a nonzero constant term; factor out X^k first".into(),
        ));
    }
    let num_vars = d + 1;
    let num_rows = n + d + 1;
    if num_vars.saturating_mul(num_rows) > 2_000_000 {
        return Err(Error::Resource(format!(
            "multiplier LP too large at degree {d}: {num_rows} rows x {num_vars} vars"
        )));
    }

    // Quick infeasibility screen: a row whose coefficients are all ≤ 0
    // cannot reach 1 with T ≥ 0.
    for k in 0..num_rows {
        let lo = k.saturating_sub(n);
        let hi = k.min(d);
        let all_nonpositive = (lo..=hi).all(|i| !p.coeff(k - i).is_positive());
        if all_nonpositive {
            return Ok(MultiplierSearch::InfeasibleAtDegree(d));
        }
    }
    // Second screen: any x > 0 with P(x) ≤ 0 defeats every degree, since
    // V = P·T would be positive at x while T(x) ≥ 0 (and T ≠ 0). Far
    // cheaper than proving the LP infeasible.
    if evaluation_witness(p) {
        return Ok(MultiplierSearch::InfeasibleAtDegree(d));
    }

    let mut lp = LinearProgram::nonnegative(num_vars);
    for k in 0..num_rows {
        let mut row = vec![Rat::zero(); num_vars];
        let lo = k.saturating_sub(n);
        let hi = k.min(d);
        for i in lo..=hi {
            row[i] = p.coeff(k - i);
        }
        lp.require_ge(row, Rat::one());
    }
    match solve_feasibility(&lp)? {
        LpOutcome::Infeasible => Ok(MultiplierSearch::InfeasibleAtDegree(d)),
        LpOutcome::Feasible { point } => {
            let t = UniPoly::new(point);
            if !verify_certificate(p, &t) {
                return Err(Error::Internal(format!(
                    "LP-feasible multiplier failed exact verification for {p} at degree {d}"
                )));
            }
            let v = p.mul(&t);
            Ok(MultiplierSearch::Feasible(PositivityCertificate { t, v, d }))
        }
    }
}

fn beta_for(p: &UniPoly, cfg: &DecisionConfig) -> Option<Rat> {
    if let Some(b) = &cfg.beta_override {
        return Some(b.clone());
    }
    let est = oracle::beta_estimate(p, BetaMode::Imag).ok()?;
    if !est.applicable {
        return None;
    }
    Rat::from_float(est.value).filter(|b| b.is_positive())
}

/// Decides whether `P` has a root in `]0, ∞[`.
pub fn decide_positive_root(p: &UniPoly, cfg: &DecisionConfig) -> Result<Decision> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (stripped, k) = p.strip_zero_roots();
    let negated = stripped.leading().unwrap().is_negative();
    let work = if negated { stripped.neg() } else { stripped };
    let n = work.degree().unwrap();

    if n == 0 {
        // positive constant: nothing to search
        let cert = PositivityCertificate { t: UniPoly::one(), v: work.clone(), d: 0 };
        debug_assert!(verify_certificate(&work, &cert.t));
        return Ok(Decision {
            verdict: Verdict::NoPositiveRoot,
            certificate: Some(cert),
            attempted_degrees: vec![0],
            bounded_search: false,
            oracle_has_positive_root: None,
            negated,
            stripped_power: k,
        });
    }

    // β-based completeness bound; polynomials without nonreal roots have
    // no β and rely on deepening plus the oracle.
    let beta_bound: Option<BigInt> = beta_for(&work, cfg).and_then(|beta| {
        let m = work.max_coeff_magnitude().ok()?;
        degree_bound(n, &m, &beta).ok()
    });

    let cap = match &beta_bound {
        Some(pb) if *pb < BigInt::from(cfg.degree_cap) => {
            // the bound itself is within reach; search no further
            usize::try_from(pb).unwrap_or(cfg.degree_cap).max(n)
        }
        _ => cfg.degree_cap.max(n),
    };

    let mut attempted = Vec::new();
    let mut d = n.min(cap);
    loop {
        attempted.push(d);
        if let MultiplierSearch::Feasible(cert) = find_multiplier(&work, d)? {
            return Ok(Decision {
                verdict: Verdict::NoPositiveRoot,
                certificate: Some(cert),
                attempted_degrees: attempted,
                bounded_search: false,
                oracle_has_positive_root: None,
                negated,
                stripped_power: k,
            });
        }
        if d >= cap {
            break;
        }
        d = (d * 2).min(cap);
    }

    let reached_bound = matches!(&beta_bound, Some(pb) if BigInt::from(*attempted.last().unwrap()) >= *pb);
    let oracle_has_positive_root = if cfg.use_oracle_crosscheck {
        Some(oracle::has_positive_real_root(&work)?)
    } else {
        None
    };
    let verdict = match oracle_has_positive_root {
        Some(true) | None => Verdict::PositiveRootExists,
        Some(false) => Verdict::NoPositiveRoot,
    };
    Ok(Decision {
        verdict,
        certificate: None,
        attempted_degrees: attempted,
        bounded_search: !reached_bound,
        oracle_has_positive_root,
        negated,
        stripped_power: k,
    })
}

/// Full real-line decision: positive side, negative side (via `P(−X)`),
/// and the root at zero.
#[derive(Debug, Clone)]
pub struct RealRootDecision {
    pub positive: Decision,
    pub negative: Decision,
    pub root_at_zero: bool,
    pub has_real_root: bool,
}

pub fn decide_real_root(p: &UniPoly, cfg: &DecisionConfig) -> Result<RealRootDecision> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let positive = decide_positive_root(p, cfg)?;
    let negative = decide_positive_root(&p.reflect(), cfg)?;
    let root_at_zero = p.coeff(0).is_zero();
    let has_real_root = root_at_zero
        || positive.verdict == Verdict::PositiveRootExists
        || negative.verdict == Verdict::PositiveRootExists;
    Ok(RealRootDecision { positive, negative, root_at_zero, has_real_root })
}

/// Builds the k-sign-change witness: given `B` with all-positive
/// coefficients and positive roots `a₁…a_k`, returns `(U, W)` with `U`
/// all-positive and `W = B·Π(X−aᵢ)·U` having exactly `k` sign changes.
///
/// Each factor `(X−aᵢ)` is completed to `X^b − aᵢ^b` by the geometric
/// polynomial of length `b = deg(B)+1`, so the partial products stack `B`
/// into disjoint degree blocks with alternating signs.
pub fn sign_change_witness(b_poly: &UniPoly, roots: &[Rat]) -> Result<(UniPoly, UniPoly)> {
    let deg_b = b_poly.degree().ok_or(Error::ZeroPolynomial)?;
    if b_poly.coeffs().iter().any(Signed::is_negative) {
        return Err(Error::Domain("witness base must have no negative coefficients".into()));
    }
    if roots.iter().any(|a| !a.is_positive()) {
        return Err(Error::Domain("witness roots must be positive".into()));
    }
    let block = deg_b + 1;

    let mut u = UniPoly::one();
    let mut w = b_poly.clone();
    for a in roots {
        // geometric completion: X^{b−1} + a·X^{b−2} + … + a^{b−1}
        let mut geo = vec![Rat::zero(); block];
        let mut pow = Rat::one();
        for slot in (0..block).rev() {
            geo[slot] = pow.clone();
            pow *= a;
        }
        u = u.mul(&UniPoly::new(geo));
        // pow is now a^b
        let mut factor = vec![Rat::zero(); block + 1];
        factor[0] = -pow;
        factor[block] = Rat::one();
        w = w.mul(&UniPoly::new(factor));
    }
    Ok((u, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn degree_bound_examples() {
        assert_eq!(degree_bound(2, &int(1), &int(1)).unwrap(), BigInt::from(51));
        assert_eq!(degree_bound(1, &int(1), &int(1)).unwrap(), BigInt::from(7));
        // 1 + floor(2π·2·4·8) = 1 + floor(128π)
        assert_eq!(degree_bound(2, &int(2), &rat(1, 2)).unwrap(), BigInt::from(403));
        assert!(degree_bound(2, &int(1), &int(0)).is_err());
        assert!(degree_bound(0, &int(1), &int(1)).is_err());
    }

    #[test]
    fn find_multiplier_quadratic_no_positive_roots() {
        // X²−X+1 admits a degree-2 multiplier (e.g. 3X²+4X+2)
        match find_multiplier(&p(&[1, -1, 1]), 2).unwrap() {
            MultiplierSearch::Feasible(cert) => {
                assert!(verify_certificate(&p(&[1, -1, 1]), &cert.t));
                assert_eq!(cert.v, p(&[1, -1, 1]).mul(&cert.t));
            }
            MultiplierSearch::InfeasibleAtDegree(_) => panic!("expected feasible"),
        }
        // the hand-verified point from the derivation
        assert!(verify_certificate(&p(&[1, -1, 1]), &p(&[2, 4, 3])));
        assert_eq!(p(&[1, -1, 1]).mul(&p(&[2, 4, 3])), p(&[2, 2, 1, 1, 3]));
    }

    #[test]
    fn find_multiplier_infeasible_with_positive_root() {
        for d in [0usize, 1, 2, 5, 9] {
            match find_multiplier(&p(&[-1, 1]), d).unwrap() {
                MultiplierSearch::InfeasibleAtDegree(got) => assert_eq!(got, d),
                MultiplierSearch::Feasible(_) => panic!("X−1 must never get a certificate"),
            }
        }
    }

    #[test]
    fn find_multiplier_rejects_zero_constant_term() {
        assert!(find_multiplier(&p(&[0, 1]), 2).is_err());
    }

    #[test]
    fn verify_certificate_examples() {
        assert!(verify_certificate(&p(&[1, -1, 1]), &p(&[2, 4, 3])));
        assert!(!verify_certificate(&p(&[-1, 1]), &p(&[1, 1]))); // product X²−1
        assert!(!verify_certificate(&p(&[1, 0, 1]), &UniPoly::zero()));
        assert!(!verify_certificate(&p(&[1, 0, 1]), &p(&[-1, 1]))); // negative coeff in T
    }

    #[test]
    fn decide_examples() {
        let cfg = DecisionConfig::default();
        let d = decide_positive_root(&p(&[2, 3, 1]), &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::NoPositiveRoot);
        assert!(d.certificate.is_some());

        let d = decide_positive_root(&p(&[2, -3, 1]), &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::PositiveRootExists);
        assert!(d.certificate.is_none());
        assert_eq!(d.oracle_has_positive_root, Some(true));

        // X⁴−X³+X²−X+1: primitive 10th roots of unity, no real roots
        let d = decide_positive_root(&p(&[1, -1, 1, -1, 1]), &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::NoPositiveRoot);
        let cert = d.certificate.unwrap();
        assert!(cert.d <= 16);
        assert!(verify_certificate(&p(&[1, -1, 1, -1, 1]), &cert.t));
    }

    #[test]
    fn decide_handles_sign_and_zero_roots() {
        let cfg = DecisionConfig::default();
        // −X²−3X−2 = −(X+1)(X+2): no positive roots, certificate for +P
        let d = decide_positive_root(&p(&[-2, -3, -1]), &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::NoPositiveRoot);
        assert!(d.negated);
        assert!(verify_certificate(&p(&[2, 3, 1]), &d.certificate.unwrap().t));

        // X³−X² = X²(X−1)
        let d = decide_positive_root(&p(&[0, 0, -1, 1]), &cfg).unwrap();
        assert_eq!(d.stripped_power, 2);
        assert_eq!(d.verdict, Verdict::PositiveRootExists);

        // constants
        let d = decide_positive_root(&p(&[-5]), &cfg).unwrap();
        assert_eq!(d.verdict, Verdict::NoPositiveRoot);
        assert!(d.negated);
    }

    #[test]
    fn decide_real_root_examples() {
        let cfg = DecisionConfig::default();
        let r = decide_real_root(&p(&[1, 0, 1]), &cfg).unwrap();
        assert!(!r.has_real_root);

        let r = decide_real_root(&p(&[-2, 0, 1]), &cfg).unwrap();
        assert!(r.has_real_root);
        assert_eq!(r.positive.verdict, Verdict::PositiveRootExists);

        let r = decide_real_root(&p(&[0, 0, 0, 1]), &cfg).unwrap();
        assert!(r.has_real_root);
        assert!(r.root_at_zero);
        assert_eq!(r.positive.verdict, Verdict::NoPositiveRoot);
    }

    #[test]
    fn witness_examples() {
        // B = 1, roots [1] → W = X − 1
        let (u, w) = sign_change_witness(&UniPoly::one(), &[int(1)]).unwrap();
        assert_eq!(u, UniPoly::one());
        assert_eq!(w, p(&[-1, 1]));
        assert_eq!(w.sign_changes().unwrap(), 1);

        // B = X+1, roots [2] → W = (X+1)(X²−4)
        let (u, w) = sign_change_witness(&p(&[1, 1]), &[int(2)]).unwrap();
        assert_eq!(u, p(&[2, 1]));
        assert_eq!(w, p(&[-4, -4, 1, 1]));
        assert_eq!(w.sign_changes().unwrap(), 1);

        // B = X+1, roots [1, 2] → exactly 2 sign changes
        let (u, w) = sign_change_witness(&p(&[1, 1]), &[int(1), int(2)]).unwrap();
        assert_eq!(w.sign_changes().unwrap(), 2);
        // W = B·(X−1)(X−2)·U exactly
        let rebuilt = p(&[1, 1]).mul(&p(&[-1, 1])).mul(&p(&[-2, 1])).mul(&u);
        assert_eq!(rebuilt, w);
    }

    #[test]
    fn witness_rejects_bad_inputs() {
        assert!(sign_change_witness(&p(&[1, -1]), &[int(1)]).is_err());
        assert!(sign_change_witness(&p(&[1, 1]), &[int(0)]).is_err());
        assert!(sign_change_witness(&UniPoly::zero(), &[int(1)]).is_err());
    }

    #[test]
    fn certificate_extends_one_degree_up() {
        // feasibility is monotone in D: T·(X+1) certifies at D+1
        let poly = p(&[1, -1, 1]);
        if let MultiplierSearch::Feasible(cert) = find_multiplier(&poly, 2).unwrap() {
            let lifted = cert.t.mul(&p(&[1, 1]));
            assert!(verify_certificate(&poly, &lifted));
        } else {
            panic!("expected feasible at 2");
        }
    }
}
