//! 3-SAT through polynomials.
//!
//! A width-3 clause becomes `(X₁−i)²(X₂−j)²(X₃−k)²` with `i = 1` when the
//! literal is negated and `2` otherwise, so the clause polynomial vanishes
//! at a `{1,2}` point exactly when the clause is satisfied under
//! `true ↦ 2, false ↦ 1`. The formula polynomial `Q` is the sum over
//! clauses; it has a zero on the `{1,2}^u` grid iff the formula is
//! satisfiable. Unsatisfiability is certified by polynomials `K, K₁…K_u`
//! with `Q·K + Σ Pᵢ·Kᵢ` all-positive, where `Pᵢ = (Xᵢ−1)²(Xᵢ−2)²` pins
//! variable `i` to the grid: such a combination is positive on the grid
//! while every summand would vanish at a satisfying point.

use num_traits::{One, Signed, Zero};

use crate::lp::{solve_feasibility, LinearProgram, LpOutcome};
use crate::mpoly::{Monomial, MultiPoly};
use crate::rational::{int, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub negated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub u: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(u: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if u == 0 || clauses.is_empty() {
            return Err(Error::Domain("formula needs at least one variable and one clause".into()));
        }
        for clause in &clauses {
            for lit in clause {
                if lit.var == 0 || lit.var > u {
                    return Err(Error::Domain(format!(
                        "literal variable {} out of range 1..={u}",
                        lit.var
                    )));
                }
            }
        }
        Ok(CnfFormula { u, clauses })
    }
}

/// Standard DIMACS CNF, restricted to width-3 clauses.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "cnf" {
                return Err(Error::Parse(format!("malformed DIMACS header: {line}")));
            }
            let u = parts[1]
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad variable count: {}", parts[1])))?;
            let m = parts[2]
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad clause count: {}", parts[2])))?;
            header = Some((u, m));
            continue;
        }
        for token in line.split_whitespace() {
            let v = token
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad literal token: {token}")))?;
            if v == 0 {
                if current.len() != 3 {
                    return Err(Error::Parse(format!(
                        "clause of width {}, expected exactly 3 literals",
                        current.len()
                    )));
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
            } else {
                current.push(Literal { var: v.unsigned_abs() as usize, negated: v < 0 });
            }
        }
    }
    if !current.is_empty() {
        return Err(Error::Parse("unterminated clause (missing trailing 0)".into()));
    }
    let (u, m) = header.ok_or_else(|| Error::Parse("missing DIMACS header".into()))?;
    if clauses.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} clauses, found {}",
            clauses.len()
        )));
    }
    CnfFormula::new(u, clauses)
}

fn literal_factor(u: usize, lit: Literal) -> Result<MultiPoly> {
    // (X_v − c)² with c = 1 for a negated literal, 2 otherwise
    let c = if lit.negated { 1 } else { 2 };
    let x = MultiPoly::var(u, lit.var - 1)?;
    let shifted = x.sub(&MultiPoly::constant(u, int(c)))?;
    shifted.mul(&shifted)
}

pub fn clause_polynomial(u: usize, clause: &[Literal; 3]) -> Result<MultiPoly> {
    let mut acc = MultiPoly::constant(u, Rat::one());
    for lit in clause {
        acc = acc.mul(&literal_factor(u, *lit)?)?;
    }
    Ok(acc)
}

/// `Q`, the sum of the clause polynomials.
pub fn encode(f: &CnfFormula) -> Result<MultiPoly> {
    let mut q = MultiPoly::zero(f.u);
    for clause in &f.clauses {
        q = q.add(&clause_polynomial(f.u, clause)?)?;
    }
    Ok(q)
}

/// The pins `Pᵢ = (Xᵢ−1)²(Xᵢ−2)²`, one per variable.
pub fn pin_polynomials(u: usize) -> Result<Vec<MultiPoly>> {
    if u == 0 {
        return Err(Error::Domain("need at least one variable".into()));
    }
    (0..u)
        .map(|i| {
            let x = MultiPoly::var(u, i)?;
            let a = x.sub(&MultiPoly::constant(u, int(1)))?;
            let b = x.sub(&MultiPoly::constant(u, int(2)))?;
            a.mul(&a)?.mul(&b.mul(&b)?)
        })
        .collect()
}

const BRUTE_FORCE_VAR_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    Sat(Vec<bool>),
    Unsat,
}

fn clause_satisfied(clause: &[Literal; 3], assignment: u32) -> bool {
    clause.iter().any(|lit| {
        let value = assignment >> (lit.var - 1) & 1 == 1;
        value != lit.negated
    })
}

/// Exhaustive scan of all 2^u assignments.
pub fn brute_force_sat(f: &CnfFormula) -> Result<SatResult> {
    if f.u > BRUTE_FORCE_VAR_LIMIT {
        return Err(Error::Resource(format!(
            "brute force capped at {BRUTE_FORCE_VAR_LIMIT} variables, got {}",
            f.u
        )));
    }
    for assignment in 0u32..1 << f.u {
        if f.clauses.iter().all(|c| clause_satisfied(c, assignment)) {
            let bits = (0..f.u).map(|i| assignment >> i & 1 == 1).collect();
            return Ok(SatResult::Sat(bits));
        }
    }
    Ok(SatResult::Unsat)
}

/// First point of `{1,2}^u` where `Q` vanishes, scanning in assignment
/// order (`true ↦ 2, false ↦ 1`).
pub fn hypercube_zero(q: &MultiPoly, u: usize) -> Result<Option<Vec<Rat>>> {
    if u > BRUTE_FORCE_VAR_LIMIT {
        return Err(Error::Resource(format!(
            "grid scan capped at {BRUTE_FORCE_VAR_LIMIT} variables, got {u}"
        )));
    }
    for assignment in 0u32..1 << u {
        let point: Vec<Rat> = (0..u)
            .map(|i| int(if assignment >> i & 1 == 1 { 2 } else { 1 }))
            .collect();
        if q.eval(&point)?.is_zero() {
            return Ok(Some(point));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsatCertificate {
    pub k: MultiPoly,
    pub k_i: Vec<MultiPoly>,
    pub p: MultiPoly,
    pub degree_bound_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateSearch {
    Feasible(UnsatCertificate),
    InfeasibleAtDegree(usize),
}

fn monomials_up_to(u: usize, d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() == u {
        out.push(prefix.clone());
        return;
    }
    let used: u32 = prefix.iter().sum();
    for e in 0..=(d as u32 - used) {
        prefix.push(e);
        monomials_up_to(u, d, prefix, out);
        prefix.pop();
    }
}

const CERT_LP_CELL_BUDGET: usize = 20_000_000;

/// LP search for `K, K₁…K_u` of total degree ≤ `d` making
/// `P = Q·K + Σ Pᵢ·Kᵢ` have every surviving coefficient positive.
///
/// The LP asks for constant term ≥ 1 and every other reachable monomial
/// coefficient ≥ 0; monomials outside the reachable support are
/// identically zero for any choice of multipliers and carry no
/// constraint. A feasible solution is rescaled so each nonzero
/// coefficient of `P` is ≥ 1, which positive homogeneity permits.
pub fn find_unsat_certificate(f: &CnfFormula, d: usize) -> Result<CertificateSearch> {
    let u = f.u;
    let q = encode(f)?;
    let pins = pin_polynomials(u)?;

    let mut basis = Vec::new();
    monomials_up_to(u, d, &mut Vec::new(), &mut basis);
    let per_block = basis.len();
    let num_vars = per_block * (1 + u);

    // generators in variable-block order: K's block first, then K₁…K_u
    let generators: Vec<&MultiPoly> = std::iter::once(&q).chain(pins.iter()).collect();

    // rows keyed by the reachable product monomials
    let mut rows: std::collections::BTreeMap<Monomial, Vec<Rat>> = std::collections::BTreeMap::new();
    for (block, g) in generators.iter().enumerate() {
        for (slot, m) in basis.iter().enumerate() {
            let var_index = block * per_block + slot;
            for (gm, gc) in g.terms() {
                let target: Vec<u32> = gm.0.iter().zip(m).map(|(a, b)| a + b).collect();
                let row = rows
                    .entry(Monomial(target))
                    .or_insert_with(|| vec![Rat::zero(); num_vars]);
                row[var_index] += gc;
            }
        }
    }
    let num_rows = rows.len();
    if num_rows.saturating_mul(num_vars) > CERT_LP_CELL_BUDGET {
        return Err(Error::Resource(format!(
            "certificate LP too large at degree {d}: {num_rows} constraints x {num_vars} variables"
        )));
    }

    let constant = Monomial(vec![0; u]);
    let mut lp = LinearProgram::free(num_vars);
    for (mono, row) in rows {
        let rhs = if mono == constant { Rat::one() } else { Rat::zero() };
        lp.require_ge(row, rhs);
    }
    let point = match solve_feasibility(&lp)? {
        LpOutcome::Infeasible => return Ok(CertificateSearch::InfeasibleAtDegree(d)),
        LpOutcome::Feasible { point } => point,
    };

    let rebuild = |block: usize| -> Result<MultiPoly> {
        MultiPoly::from_terms(
            u,
            basis
                .iter()
                .enumerate()
                .map(|(slot, m)| (m.clone(), point[block * per_block + slot].clone()))
                .collect(),
        )
    };
    let mut k = rebuild(0)?;
    let mut k_i: Vec<MultiPoly> = (1..=u).map(rebuild).collect::<Result<_>>()?;

    let mut p = q.mul(&k)?;
    for (pin, ki) in pins.iter().zip(&k_i) {
        p = p.add(&pin.mul(ki)?)?;
    }
    // lift the smallest surviving coefficient to 1
    if let Some(min) = p.terms().map(|(_, c)| c).min().cloned() {
        if min.is_positive() && min < Rat::one() {
            let s = min.recip();
            k = k.scale(&s);
            k_i = k_i.iter().map(|ki| ki.scale(&s)).collect();
            p = p.scale(&s);
        }
    }
    let cert = UnsatCertificate { k, k_i, p, degree_bound_used: d };
    if !verify_unsat_certificate(f, &cert)? {
        return Err(Error::Internal(format!(
            "LP-feasible certificate failed exact verification at degree {d}"
        )));
    }
    Ok(CertificateSearch::Feasible(cert))
}

/// True iff `cert.P` equals the exact expansion of `Q·K + Σ Pᵢ·Kᵢ` for
/// this formula and every coefficient of `cert.P` is ≥ 1.
pub fn verify_unsat_certificate(f: &CnfFormula, cert: &UnsatCertificate) -> Result<bool> {
    if cert.k_i.len() != f.u {
        return Ok(false);
    }
    let q = encode(f)?;
    let pins = pin_polynomials(f.u)?;
    let mut expansion = match q.mul(&cert.k) {
        Ok(p) => p,
        Err(_) => return Ok(false),
    };
    for (pin, ki) in pins.iter().zip(&cert.k_i) {
        let term = match pin.mul(ki) {
            Ok(t) => t,
            Err(_) => return Ok(false),
        };
        expansion = match expansion.add(&term) {
            Ok(s) => s,
            Err(_) => return Ok(false),
        };
    }
    if expansion != cert.p {
        return Ok(false);
    }
    let one = Rat::one();
    Ok(!cert.p.is_zero()
        && cert.p.constant_term() >= one
        && cert.p.terms().all(|(_, c)| *c >= one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn lit(v: i64) -> Literal {
        Literal { var: v.unsigned_abs() as usize, negated: v < 0 }
    }

    pub(crate) fn formula(u: usize, clauses: &[[i64; 3]]) -> CnfFormula {
        CnfFormula::new(
            u,
            clauses.iter().map(|c| [lit(c[0]), lit(c[1]), lit(c[2])]).collect(),
        )
        .unwrap()
    }

    /// All 8 sign patterns on 3 variables: unsatisfiable.
    pub(crate) fn full_unsat_formula() -> CnfFormula {
        let mut clauses = Vec::new();
        for mask in 0..8i64 {
            clauses.push([
                if mask & 1 == 1 { -1 } else { 1 },
                if mask & 2 == 2 { -2 } else { 2 },
                if mask & 4 == 4 { -3 } else { 3 },
            ]);
        }
        formula(3, &clauses)
    }

    #[test]
    fn parse_dimacs_examples() {
        let f = parse_dimacs("p cnf 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(f.u, 3);
        assert_eq!(f.clauses, vec![[lit(1), lit(2), lit(3)]]);

        let f = parse_dimacs("c comment\np cnf 3 1\n-1 2 -3 0\n").unwrap();
        assert_eq!(f.clauses, vec![[lit(-1), lit(2), lit(-3)]]);

        assert!(parse_dimacs("p cnf 3 1\n1 2 0\n").is_err());
        assert!(parse_dimacs("1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 3 2\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 3 1\n1 2 3\n").is_err());
    }

    #[test]
    fn encode_matches_explicit_products() {
        let f = formula(3, &[[1, 2, 3]]);
        let q = encode(&f).unwrap();
        let direct = clause_polynomial(3, &[lit(1), lit(2), lit(3)]).unwrap();
        assert_eq!(q, direct);
        // (X₁−2)²(X₂−2)²(X₃−2)²: leading and constant coefficients
        assert_eq!(q.coeff(&[2, 2, 2]), int(1));
        assert_eq!(q.constant_term(), int(64));
        assert_eq!(q.eval(&[int(2), int(1), int(1)]).unwrap(), int(0));

        let g = encode(&formula(3, &[[-1, 2, -3]])).unwrap();
        assert_eq!(g.eval(&[int(1), int(5), int(7)]).unwrap(), int(0));
        assert_eq!(g.constant_term(), int(4)); // 1·4·1
    }

    #[test]
    fn encode_sum_at_random_points() {
        let f = formula(3, &[[1, 2, 3], [-1, -2, -3]]);
        let q = encode(&f).unwrap();
        let c1 = clause_polynomial(3, &f.clauses[0]).unwrap();
        let c2 = clause_polynomial(3, &f.clauses[1]).unwrap();
        for (a, b, c) in [(3, 2), (-1, 3), (7, 5)].iter().flat_map(|&(p, q)| {
            [(rat(p, q), rat(1, 2), int(4)), (int(0), rat(p, q), rat(-3, 7))]
        }) {
            let pt = [a, b, c];
            let lhs = q.eval(&pt).unwrap();
            let rhs = c1.eval(&pt).unwrap() + c2.eval(&pt).unwrap();
            assert_eq!(lhs, rhs);
            assert!(!lhs.is_negative());
        }
    }

    #[test]
    fn pin_polynomial_expansion() {
        let pins = pin_polynomials(1).unwrap();
        assert_eq!(pins.len(), 1);
        let p = &pins[0];
        assert_eq!(p.coeff(&[4]), int(1));
        assert_eq!(p.coeff(&[3]), int(-6));
        assert_eq!(p.coeff(&[2]), int(13));
        assert_eq!(p.coeff(&[1]), int(-12));
        assert_eq!(p.coeff(&[0]), int(4));
        assert_eq!(p.eval(&[int(1)]).unwrap(), int(0));
        assert_eq!(p.eval(&[int(2)]).unwrap(), int(0));
        assert_eq!(p.eval(&[rat(3, 2)]).unwrap(), rat(1, 16));
    }

    #[test]
    fn brute_force_examples() {
        let f = formula(3, &[[1, 2, 3], [-1, -2, -3]]);
        match brute_force_sat(&f).unwrap() {
            SatResult::Sat(bits) => {
                assert!(f.clauses.iter().all(|c| {
                    c.iter().any(|l| bits[l.var - 1] != l.negated)
                }));
            }
            SatResult::Unsat => panic!("expected sat"),
        }
        assert_eq!(brute_force_sat(&full_unsat_formula()).unwrap(), SatResult::Unsat);
        assert!(matches!(
            brute_force_sat(&formula(3, &[[1, 2, 3]])).unwrap(),
            SatResult::Sat(_)
        ));
    }

    #[test]
    fn hypercube_zero_matches_brute_force() {
        let sat_f = formula(3, &[[1, 2, 3]]);
        let q = encode(&sat_f).unwrap();
        let zero = hypercube_zero(&q, 3).unwrap().expect("satisfiable formula");
        assert_eq!(q.eval(&zero).unwrap(), int(0));

        let q = encode(&full_unsat_formula()).unwrap();
        assert_eq!(hypercube_zero(&q, 3).unwrap(), None);
    }

    #[test]
    fn satisfiable_formulas_get_no_certificate_at_small_degrees() {
        let f = formula(3, &[[1, 2, 3]]);
        for d in 0..=2 {
            assert_eq!(
                find_unsat_certificate(&f, d).unwrap(),
                CertificateSearch::InfeasibleAtDegree(d),
                "d = {d}"
            );
        }
    }

    #[test]
    fn degree_zero_is_infeasible_even_when_unsat() {
        assert_eq!(
            find_unsat_certificate(&full_unsat_formula(), 0).unwrap(),
            CertificateSearch::InfeasibleAtDegree(0)
        );
    }

    #[test]
    fn verify_rejects_tampering() {
        // hand-build a bogus certificate and check the identity test fires
        let f = formula(3, &[[1, 2, 3]]);
        let cert = UnsatCertificate {
            k: MultiPoly::constant(3, int(1)),
            k_i: vec![MultiPoly::constant(3, int(1)); 3],
            p: MultiPoly::constant(3, int(1)),
            degree_bound_used: 0,
        };
        assert!(!verify_unsat_certificate(&f, &cert).unwrap());

        let wrong_arity = UnsatCertificate {
            k: MultiPoly::constant(3, int(1)),
            k_i: vec![MultiPoly::constant(3, int(1)); 2],
            p: MultiPoly::constant(3, int(1)),
            degree_bound_used: 0,
        };
        assert!(!verify_unsat_certificate(&f, &wrong_arity).unwrap());
    }

    #[test]
    fn formula_validation() {
        assert!(CnfFormula::new(3, vec![]).is_err());
        assert!(CnfFormula::new(2, vec![[lit(1), lit(2), lit(3)]]).is_err());
        assert!(CnfFormula::new(0, vec![[lit(1), lit(1), lit(1)]]).is_err());
    }
}
