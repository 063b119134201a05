//! Exact rational linear feasibility.
//!
//! Only feasibility is supported: the certificate searches never optimize.
//! Answers are always exact: a `Feasible` outcome carries a point
//! satisfying every constraint under `BigRational` re-evaluation, and
//! `Infeasible` is backed by an exactly-verified Farkas certificate or a
//! provably positive phase-one optimum.
//!
//! A double-precision two-phase simplex runs first to locate a candidate
//! basis cheaply; the basis system is then solved in exact rationals and
//! the resulting point (or dual Farkas vector) is certified. Whenever
//! certification fails, the all-rational two-phase simplex takes over,
//! using Dantzig's rule and switching permanently to Bland's rule after an
//! iteration budget so cycling is impossible.

use num_traits::{One, Signed, Zero};

use crate::rational::{format_rat, Rat};
use crate::{Error, Result};

/// A conjunction of `coeffs·x ≥ rhs` constraints over `num_vars` variables.
///
/// `lower_bounds[j] = Some(l)` constrains `x_j ≥ l`; `None` leaves `x_j`
/// free (it is split into a difference of nonnegatives internally).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    pub lower_bounds: Vec<Option<Rat>>,
}

/// One row `coeffs·x ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible { point: Vec<Rat> },
    Infeasible,
}

impl LinearProgram {
    /// All variables `≥ 0`, no constraints yet.
    pub fn nonnegative(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
            lower_bounds: vec![Some(Rat::zero()); num_vars],
        }
    }

    /// All variables free, no constraints yet.
    pub fn free(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
            lower_bounds: vec![None; num_vars],
        }
    }

    pub fn require_ge(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        self.constraints.push(Constraint { coeffs, rhs });
    }

    fn validate(&self) -> Result<()> {
        if self.lower_bounds.len() != self.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "{} lower bounds for {} variables",
                self.lower_bounds.len(),
                self.num_vars
            )));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch(format!(
                    "constraint {i} has {} coefficients, expected {}",
                    c.coeffs.len(),
                    self.num_vars
                )));
            }
        }
        Ok(())
    }

    /// Exact re-evaluation of a candidate point against every constraint
    /// and bound.
    pub fn is_satisfied_by(&self, point: &[Rat]) -> bool {
        if point.len() != self.num_vars {
            return false;
        }
        for (x, lb) in point.iter().zip(&self.lower_bounds) {
            if let Some(l) = lb {
                if x < l {
                    return false;
                }
            }
        }
        self.constraints.iter().all(|c| {
            let lhs: Rat = c.coeffs.iter().zip(point).map(|(a, x)| a * x).sum();
            lhs >= c.rhs
        })
    }

    /// Debug dump, one constraint per line, exact rationals.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (j, lb) in self.lower_bounds.iter().enumerate() {
            match lb {
                Some(l) => out.push_str(&format!("x{j} >= {}\n", format_rat(l))),
                None => out.push_str(&format!("x{j} free\n")),
            }
        }
        for c in &self.constraints {
            let terms: Vec<String> = c
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, a)| format!("{}*x{j}", format_rat(a)))
                .collect();
            out.push_str(&format!("{} >= {}\n", terms.join(" + "), format_rat(&c.rhs)));
        }
        out
    }
}

/// Decides feasibility exactly; deterministic for identical input.
pub fn solve_feasibility(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    if let Some(outcome) = float_probe(lp) {
        return Ok(outcome);
    }
    if std::env::var_os("POSCERT_LP_DEBUG").is_some() {
        eprintln!(
            "lp: float probe uncertified, exact fallback on {} rows x {} vars",
            lp.constraints.len(),
            lp.num_vars
        );
    }
    solve_feasibility_exact(lp)
}

/// Mapping of original variables onto nonnegative columns: bounded
/// `x = lb + y`, free `x = y⁺ − y⁻`.
fn split_columns(lp: &LinearProgram) -> (Vec<(usize, Option<usize>)>, usize) {
    let mut col_of_var: Vec<(usize, Option<usize>)> = Vec::with_capacity(lp.num_vars);
    let mut ncols_struct = 0usize;
    for lb in &lp.lower_bounds {
        match lb {
            Some(_) => {
                col_of_var.push((ncols_struct, None));
                ncols_struct += 1;
            }
            None => {
                col_of_var.push((ncols_struct, Some(ncols_struct + 1)));
                ncols_struct += 2;
            }
        }
    }
    (col_of_var, ncols_struct)
}

/// Standard form shared by both solvers: sparse columns over nonnegative
/// variables, every right-hand side nonnegative, one slack per row, and
/// the rows still needing an artificial marked.
struct Standardized {
    m: usize,
    ncols_struct: usize,
    /// Structural + slack columns, sparse as (row, value).
    cols: Vec<Vec<(usize, Rat)>>,
    b: Vec<Rat>,
    need_art: Vec<bool>,
    col_of_var: Vec<(usize, Option<usize>)>,
}

fn standardize(lp: &LinearProgram) -> Standardized {
    let (col_of_var, ncols_struct) = split_columns(lp);
    let m = lp.constraints.len();

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut b: Vec<Rat> = Vec::with_capacity(m);
    for c in &lp.constraints {
        let mut row = vec![Rat::zero(); ncols_struct];
        let mut rhs = c.rhs.clone();
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (pc, nc) = &col_of_var[j];
            row[*pc] = a.clone();
            if let Some(nc) = nc {
                row[*nc] = -a;
            }
            if let Some(l) = &lp.lower_bounds[j] {
                if !l.is_zero() {
                    rhs -= a * l;
                }
            }
        }
        rows.push(row);
        b.push(rhs);
    }

    // Rows with nonpositive rhs are negated so their slack can start
    // basic; the rest need an artificial.
    let mut need_art = Vec::with_capacity(m);
    for i in 0..m {
        if b[i].is_positive() {
            need_art.push(true);
        } else {
            for v in rows[i].iter_mut() {
                *v = -&*v;
            }
            b[i] = -&b[i];
            need_art.push(false);
        }
    }

    let mut cols: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); ncols_struct + m];
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                cols[j].push((i, v.clone()));
            }
        }
    }
    for i in 0..m {
        // surplus −1 on original-orientation rows, slack +1 on negated ones
        let sign = if need_art[i] { -Rat::one() } else { Rat::one() };
        cols[ncols_struct + i].push((i, sign));
    }

    Standardized { m, ncols_struct, cols, b, need_art, col_of_var }
}

const FLOAT_EPS: f64 = 1e-9;
const FLOAT_PIVOT_MIN: f64 = 1e-7;
const FLOAT_OBJ_TOL: f64 = 1e-7;

/// Double-precision two-phase simplex on the standardized system,
/// returning the final basis (standardized column indices; values ≥
/// `n_real` are artificials) and the phase-one objective value.
fn float_simplex(std_lp: &Standardized, seed: u64) -> Option<(Vec<usize>, f64)> {
    let m = std_lp.m;
    let n_real = std_lp.cols.len();
    let n_art: usize = std_lp.need_art.iter().filter(|&&x| x).count();
    let n = n_real + n_art;

    let mut tab = vec![vec![0.0f64; n + 1]; m];
    let mut basis = Vec::with_capacity(m);
    for (j, col) in std_lp.cols.iter().enumerate() {
        for (i, v) in col {
            tab[*i][j] = rat_to_f64(v)?;
        }
    }
    {
        // Tiny deterministic rhs perturbation so degenerate vertices do
        // not stall the float phase; exact certification later uses the
        // unperturbed data.
        let mut art = n_real;
        let mut noise = 0x9e3779b97f4a7c15u64 ^ seed.wrapping_mul(0xd1342543de82ef95);
        for i in 0..m {
            noise = noise.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let delta = 1e-6 * (1.0 + (noise >> 40) as f64 / (1u64 << 24) as f64);
            tab[i][n] = rat_to_f64(&std_lp.b[i])? + delta;
            if std_lp.need_art[i] {
                tab[i][art] = 1.0;
                basis.push(art);
                art += 1;
            } else {
                basis.push(std_lp.ncols_struct + i);
            }
        }
    }

    let mut obj = vec![0.0f64; n + 1];
    for j in n_real..n {
        obj[j] = 1.0;
    }
    for i in 0..m {
        if basis[i] >= n_real {
            for j in 0..=n {
                obj[j] -= tab[i][j];
            }
        }
    }

    let cap = 60 * (m + n) + 1000;
    let bland_after = cap / 2;
    for iter in 0..cap {
        let mut enter: Option<usize> = None;
        if iter > bland_after {
            enter = (0..n).find(|&j| obj[j] < -FLOAT_EPS);
        } else {
            let mut best = -FLOAT_EPS;
            for j in 0..n {
                if obj[j] < best {
                    best = obj[j];
                    enter = Some(j);
                }
            }
        }
        let Some(e) = enter else {
            if std::env::var_os("POSCERT_LP_DEBUG").is_some() {
                eprintln!("lp: float simplex {iter} iterations ({m} rows, {n} cols)");
            }
            return Some((basis, -obj[n]));
        };

        // ratio test; among near-ties take the largest pivot entry so the
        // basis stays numerically (and exactly) nonsingular
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if tab[i][e] > FLOAT_PIVOT_MIN {
                let ratio = tab[i][n] / tab[i][e];
                if ratio < best_ratio - FLOAT_EPS {
                    best_ratio = ratio;
                    leave = Some(i);
                } else if ratio < best_ratio + FLOAT_EPS
                    && leave.is_some_and(|l| tab[i][e].abs() > tab[l][e].abs())
                {
                    best_ratio = ratio.min(best_ratio);
                    leave = Some(i);
                }
            }
        }
        let l = leave?;

        let inv = 1.0 / tab[l][e];
        for v in tab[l].iter_mut() {
            *v *= inv;
        }
        let pivot_row = tab[l].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == l || row[e] == 0.0 {
                continue;
            }
            let f = row[e];
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
        }
        let f = obj[e];
        if f != 0.0 {
            for (v, pv) in obj.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
        }
        basis[l] = e;
    }
    None
}

fn rat_to_f64(r: &Rat) -> Option<f64> {
    use num_traits::ToPrimitive;
    r.to_f64().filter(|v| v.is_finite())
}

/// Exact dense solve of `A x = b` by Gaussian elimination. `None` when
/// singular.
fn solve_linear_system(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].clone().recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                if !a[col][c].is_zero() {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            if !a[r][c].is_zero() && !x[c].is_zero() {
                acc -= &a[r][c] * &x[c];
            }
        }
        x[r] = acc / &a[r][r];
    }
    Some(x)
}

/// Exact m×m matrix of the chosen basis columns (artificials are unit
/// columns on their own row).
fn basis_matrix(std_lp: &Standardized, basis: &[usize]) -> Vec<Vec<Rat>> {
    let m = std_lp.m;
    let n_real = std_lp.cols.len();
    let art_row_of: Vec<usize> = {
        let mut v = Vec::new();
        for (i, &need) in std_lp.need_art.iter().enumerate() {
            if need {
                v.push(i);
            }
        }
        v
    };
    let mut mat = vec![vec![Rat::zero(); m]; m];
    for (k, &col) in basis.iter().enumerate() {
        if col < n_real {
            for (i, v) in &std_lp.cols[col] {
                mat[*i][k] = v.clone();
            }
        } else {
            mat[art_row_of[col - n_real]][k] = Rat::one();
        }
    }
    mat
}

/// Runs the float simplex and certifies its answer exactly. `None` means
/// the probe could not be certified and the exact simplex must decide.
fn float_probe(lp: &LinearProgram) -> Option<LpOutcome> {
    let m = lp.constraints.len();
    if m == 0 {
        return None;
    }
    let std_lp = standardize(lp);
    let dbg = std::env::var_os("POSCERT_LP_DEBUG").is_some();
    // a fresh perturbation usually repairs a numerically bad basis
    for seed in 0..3u64 {
        let outcome = float_probe_once(lp, &std_lp, seed, dbg);
        if outcome.is_some() {
            return outcome;
        }
    }
    None
}

fn float_probe_once(
    lp: &LinearProgram,
    std_lp: &Standardized,
    seed: u64,
    dbg: bool,
) -> Option<LpOutcome> {
    let n_real = std_lp.cols.len();
    let Some((basis, obj)) = float_simplex(std_lp, seed) else {
        if dbg { eprintln!("lp: float simplex hit iteration cap (seed {seed})"); }
        return None;
    };
    if dbg { eprintln!("lp: float obj {obj:.3e} (seed {seed})"); }

    if obj <= FLOAT_OBJ_TOL {
        // candidate feasible: exact basic solution, nonbasic at zero
        let mat = basis_matrix(std_lp, &basis);
        let Some(x_basic) = solve_linear_system(mat, std_lp.b.clone()) else {
            if dbg { eprintln!("lp: basis matrix singular (primal)"); }
            return None;
        };
        let mut y = vec![Rat::zero(); std_lp.ncols_struct];
        for (k, &col) in basis.iter().enumerate() {
            if col >= n_real && !x_basic[k].is_zero() {
                if dbg { eprintln!("lp: artificial basic at nonzero level"); }
                return None;
            }
            if col < std_lp.ncols_struct {
                y[col] = x_basic[k].clone();
            }
        }
        let mut point = Vec::with_capacity(lp.num_vars);
        for (j, (pc, nc)) in std_lp.col_of_var.iter().enumerate() {
            let mut v = y[*pc].clone();
            if let Some(nc) = nc {
                v -= &y[*nc];
            }
            if let Some(l) = &lp.lower_bounds[j] {
                v += l;
            }
            point.push(v);
        }
        if lp.is_satisfied_by(&point) {
            return Some(LpOutcome::Feasible { point });
        }
        if dbg { eprintln!("lp: exact basic point violates constraints"); }
        return None;
    }

    // candidate infeasible: Farkas vector from the phase-one dual,
    // yᵀA ≤ 0 on every real column with yᵀb > 0
    let mat = basis_matrix(std_lp, &basis);
    let mt: Vec<Vec<Rat>> = (0..std_lp.m)
        .map(|i| (0..std_lp.m).map(|k| mat[k][i].clone()).collect())
        .collect();
    let c_basic: Vec<Rat> = basis
        .iter()
        .map(|&col| if col >= n_real { Rat::one() } else { Rat::zero() })
        .collect();
    let Some(dual) = solve_linear_system(mt, c_basic) else {
        if dbg { eprintln!("lp: basis matrix singular (dual)"); }
        return None;
    };

    let value: Rat = dual.iter().zip(&std_lp.b).map(|(y, b)| y * b).sum();
    if !value.is_positive() {
        if dbg { eprintln!("lp: farkas value not positive"); }
        return None;
    }
    for col in &std_lp.cols {
        let against: Rat = col.iter().map(|(i, v)| &dual[*i] * v).sum();
        if against.is_positive() {
            if dbg { eprintln!("lp: farkas column check failed"); }
            return None;
        }
    }
    Some(LpOutcome::Infeasible)
}

/// All-rational two-phase simplex; the authority when the float probe
/// fails to certify.
pub fn solve_feasibility_exact(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;

    let (col_of_var, ncols_struct) = split_columns(lp);

    let m = lp.constraints.len();
    if m == 0 {
        let point: Vec<Rat> = lp
            .lower_bounds
            .iter()
            .map(|lb| lb.clone().unwrap_or_else(Rat::zero))
            .collect();
        return Ok(LpOutcome::Feasible { point });
    }

    // Row data in structural columns with shifted rhs.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for c in &lp.constraints {
        let mut row = vec![Rat::zero(); ncols_struct];
        let mut b = c.rhs.clone();
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (pc, nc) = &col_of_var[j];
            row[*pc] = a.clone();
            if let Some(nc) = nc {
                row[*nc] = -a;
            }
            if let Some(l) = &lp.lower_bounds[j] {
                if !l.is_zero() {
                    b -= a * l;
                }
            }
        }
        rows.push(row);
        rhs.push(b);
    }

    // Tableau columns: structural | slack (one per row) | artificial | rhs.
    // Row i gets slack coefficient −1 (surplus); rows with negative rhs are
    // negated first so every rhs is nonnegative.
    let slack_base = ncols_struct;
    let art_base = slack_base + m;
    let mut need_art: Vec<bool> = Vec::with_capacity(m);
    for i in 0..m {
        if rhs[i].is_negative() {
            for v in rows[i].iter_mut() {
                *v = -&*v;
            }
            rhs[i] = -&rhs[i];
            need_art.push(false); // slack enters with +1 after negation
        } else if rhs[i].is_zero() {
            // choose the (negated-row) slack as basic at value 0
            for v in rows[i].iter_mut() {
                *v = -&*v;
            }
            need_art.push(false);
        } else {
            need_art.push(true);
        }
    }
    let n_art = need_art.iter().filter(|&&b| b).count();
    let total_cols = art_base + n_art;

    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    {
        let mut art_idx = 0usize;
        for i in 0..m {
            let mut row = vec![Rat::zero(); total_cols + 1];
            row[..ncols_struct].clone_from_slice(&rows[i]);
            if need_art[i] {
                // original orientation: a·y − s = b
                row[slack_base + i] = -Rat::one();
                row[art_base + art_idx] = Rat::one();
                basis.push(art_base + art_idx);
                art_idx += 1;
            } else {
                // negated: −a·y + s = −b  (stored already negated, rhs ≥ 0)
                row[slack_base + i] = Rat::one();
                basis.push(slack_base + i);
            }
            row[total_cols] = rhs[i].clone();
            tab.push(row);
        }
    }

    // Phase-one objective: minimize the sum of artificials. The reduced
    // cost row starts as c − Σ(artificial-basic rows).
    let mut obj = vec![Rat::zero(); total_cols + 1];
    for j in 0..n_art {
        obj[art_base + j] = Rat::one();
    }
    for (i, &b) in basis.iter().enumerate() {
        if b >= art_base {
            for j in 0..=total_cols {
                let v = &tab[i][j] * Rat::from_integer((-1).into());
                obj[j] += v;
            }
        }
    }

    let bland_after = 20 * (m + total_cols);
    let mut iters = 0usize;
    loop {
        iters += 1;
        let use_bland = iters > bland_after;
        // entering column: negative reduced cost
        let mut enter: Option<usize> = None;
        if use_bland {
            enter = (0..total_cols).find(|&j| obj[j].is_negative());
        } else {
            let mut best: Option<&Rat> = None;
            for j in 0..total_cols {
                if obj[j].is_negative() && best.is_none_or(|b| &obj[j] < b) {
                    best = Some(&obj[j]);
                    enter = Some(j);
                }
            }
        }
        let Some(e) = enter else { break };

        // ratio test; ties broken by smallest basic variable index
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Rat> = None;
        for i in 0..m {
            if tab[i][e].is_positive() {
                let ratio = &tab[i][total_cols] / &tab[i][e];
                let better = match &best_ratio {
                    None => true,
                    Some(br) => {
                        ratio < *br || (ratio == *br && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best_ratio = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // Phase-one objective is bounded below by 0, so an unbounded
            // direction cannot occur here.
            return Err(Error::Internal("phase-one simplex reported unbounded".into()));
        };

        pivot(&mut tab, &mut obj, l, e, total_cols);
        basis[l] = e;
    }

    // Objective value is −obj[rhs] (obj row holds c_B B⁻¹ b negated).
    let opt = -&obj[total_cols];
    if opt.is_positive() {
        return Ok(LpOutcome::Infeasible);
    }

    // Read the solution; basic artificials are at value zero.
    let mut y = vec![Rat::zero(); total_cols];
    for (i, &b) in basis.iter().enumerate() {
        y[b] = tab[i][total_cols].clone();
    }
    let mut point = Vec::with_capacity(lp.num_vars);
    for (j, (pc, nc)) in col_of_var.iter().enumerate() {
        let mut v = y[*pc].clone();
        if let Some(nc) = nc {
            v -= &y[*nc];
        }
        if let Some(l) = &lp.lower_bounds[j] {
            v += l;
        }
        point.push(v);
    }

    if !lp.is_satisfied_by(&point) {
        return Err(Error::Internal(format!(
            "simplex returned a point violating its own constraints\n{}",
            lp.dump()
        )));
    }
    Ok(LpOutcome::Feasible { point })
}

fn pivot(tab: &mut [Vec<Rat>], obj: &mut [Rat], l: usize, e: usize, total_cols: usize) {
    let piv = tab[l][e].clone();
    if !piv.is_zero() {
        let inv = piv.recip();
        for v in tab[l].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
    }
    let pivot_row = tab[l].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == l || row[e].is_zero() {
            continue;
        }
        let f = row[e].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    if !obj[e].is_zero() {
        let f = obj[e].clone();
        for (v, pv) in obj.iter_mut().take(total_cols + 1).zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ge(lp: &mut LinearProgram, coeffs: &[i64], rhs: i64) {
        lp.require_ge(coeffs.iter().map(|&c| int(c)).collect(), int(rhs));
    }

    #[test]
    fn contradictory_pair_is_infeasible() {
        let mut lp = LinearProgram::free(1);
        ge(&mut lp, &[1], 1);
        ge(&mut lp, &[-1], 0);
        assert_eq!(solve_feasibility(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn simplex_halfplane_is_feasible() {
        let mut lp = LinearProgram::nonnegative(2);
        ge(&mut lp, &[1, 1], 1);
        match solve_feasibility(&lp).unwrap() {
            LpOutcome::Feasible { point } => assert!(lp.is_satisfied_by(&point)),
            LpOutcome::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn triangle_with_interior() {
        // x ≥ 0, y ≥ 0, x+y ≤ 3 (as −x−y ≥ −3), x+2y ≥ 2
        let mut lp = LinearProgram::nonnegative(2);
        ge(&mut lp, &[-1, -1], -3);
        ge(&mut lp, &[1, 2], 2);
        match solve_feasibility(&lp).unwrap() {
            LpOutcome::Feasible { point } => assert!(lp.is_satisfied_by(&point)),
            LpOutcome::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn free_variable_can_go_negative() {
        let mut lp = LinearProgram::free(1);
        ge(&mut lp, &[-1], 5); // x ≤ −5
        match solve_feasibility(&lp).unwrap() {
            LpOutcome::Feasible { point } => assert!(point[0] <= int(-5)),
            LpOutcome::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn shifted_lower_bounds() {
        let mut lp = LinearProgram::nonnegative(2);
        lp.lower_bounds[0] = Some(rat(3, 2));
        ge(&mut lp, &[-1, -1], -2); // x+y ≤ 2 with x ≥ 3/2, y ≥ 0
        match solve_feasibility(&lp).unwrap() {
            LpOutcome::Feasible { point } => {
                assert!(point[0] >= rat(3, 2));
                assert!(lp.is_satisfied_by(&point));
            }
            LpOutcome::Infeasible => panic!("expected feasible"),
        }
        // tighten to infeasible
        lp.lower_bounds[1] = Some(int(1));
        ge(&mut lp, &[-1, -1], -2);
        lp.constraints[0].rhs = int(-2);
        lp.lower_bounds[0] = Some(int(2));
        assert_eq!(solve_feasibility(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn zero_rhs_rows() {
        let mut lp = LinearProgram::nonnegative(2);
        ge(&mut lp, &[1, -1], 0);
        ge(&mut lp, &[1, 1], 2);
        match solve_feasibility(&lp).unwrap() {
            LpOutcome::Feasible { point } => assert!(lp.is_satisfied_by(&point)),
            LpOutcome::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn dimension_mismatch_is_domain_error() {
        let mut lp = LinearProgram::nonnegative(2);
        lp.require_ge(vec![int(1)], int(0));
        assert!(solve_feasibility(&lp).is_err());
    }

    #[test]
    fn determinism() {
        let mut lp = LinearProgram::nonnegative(3);
        ge(&mut lp, &[1, 2, -1], 4);
        ge(&mut lp, &[-2, 1, 1], -1);
        ge(&mut lp, &[0, -1, 3], 2);
        let a = solve_feasibility(&lp).unwrap();
        let b = solve_feasibility(&lp).unwrap();
        assert_eq!(a, b);
    }
}
