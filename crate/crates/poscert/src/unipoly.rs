//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored ascending (index = power of X) with trailing
//! zeros stripped, so `degree` is well-defined; the zero polynomial is the
//! empty list and its degree is `None`.

use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::rational::{format_rat, int, parse_rat, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

/// Which quantity β bounds from below: magnitudes of nonzero imaginary
/// parts, or of nonzero imaginary-to-real ratios, over the complex roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaMode {
    Imag,
    Ratio,
}

/// Degree/coefficient summary of a polynomial: `n` its degree, `m` the
/// maximum coefficient magnitude, and optionally a β lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMeta {
    pub n: usize,
    pub m: Rat,
    pub beta: Option<Rat>,
    pub beta_mode: BetaMode,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c·X^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Ascending coefficients, trailing zeros stripped.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of X^k, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Max |aᵢ|, the M of the degree bound; errors on the zero polynomial.
    pub fn max_coeff_magnitude(&self) -> Result<Rat> {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::new(out)
    }

    pub fn square(&self) -> UniPoly {
        self.mul(self)
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * int(i as i64 + 1))
                .collect(),
        )
    }

    /// Exact polynomial division: `self = q·div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if div.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let dd = div.coeffs.len() - 1;
        let lead = div.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] / lead;
            rem[i] = Rat::zero();
            for (j, d) in div.coeffs[..dd].iter().enumerate() {
                let idx = i - dd + j;
                let delta = &f * d;
                rem[idx] -= delta;
            }
            quot[i - dd] = f;
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// `P(X+c)` (Taylor shift).
    pub fn shifted(&self, c: &Rat) -> UniPoly {
        let lin = UniPoly::new(vec![c.clone(), Rat::one()]);
        let mut acc = UniPoly::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&UniPoly::constant(coeff.clone()));
        }
        acc
    }

    /// `P(−X)`: coefficient aᵢ becomes (−1)ⁱ·aᵢ.
    pub fn reflect(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Number of sign alternations in the nonzero coefficient sequence.
    pub fn sign_changes(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut changes = 0;
        let mut prev = 0i8;
        for c in &self.coeffs {
            let s = if c.is_zero() {
                continue;
            } else if c.is_positive() {
                1
            } else {
                -1
            };
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
        Ok(changes)
    }

    /// Scales by a positive factor so the smallest nonzero |coefficient|
    /// becomes exactly 1.
    pub fn coefficient_normalize(&self) -> Result<UniPoly> {
        let min_mag = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.abs())
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&min_mag.recip()))
    }

    /// Splits off the largest X^k factor: returns `(P/X^k, k)`.
    pub fn strip_zero_roots(&self) -> (UniPoly, usize) {
        if self.is_zero() {
            return (UniPoly::zero(), 0);
        }
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (UniPoly::new(self.coeffs[k..].to_vec()), k)
    }

    /// Degree and max-coefficient summary (no β attached).
    pub fn meta(&self) -> Result<PolyMeta> {
        Ok(PolyMeta {
            n: self.degree().ok_or(Error::ZeroPolynomial)?,
            m: self.max_coeff_magnitude()?,
            beta: None,
            beta_mode: BetaMode::Imag,
        })
    }

    /// Parses either the list form `[1, -2, 3]` (ascending powers) or the
    /// human form `3x^2 - 2x + 1`; rationals are written `p/q`.
    pub fn parse(text: &str) -> Result<UniPoly> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if t.starts_with('[') {
            let inner = t
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {t:?}")))?;
            let inner = inner.trim();
            if inner.is_empty() {
                return Ok(UniPoly::zero());
            }
            let coeffs = inner
                .split(',')
                .map(parse_rat)
                .collect::<Result<Vec<_>>>()?;
            return Ok(UniPoly::new(coeffs));
        }
        parse_human(t)
    }

    /// The list form, ascending powers: `[1, -2, 3]`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(format_rat).collect();
        format!("[{}]", parts.join(", "))
    }
}

fn parse_human(text: &str) -> Result<UniPoly> {
    // Split into signed terms, then parse each as [coeff][x[^exp]].
    let mut terms: Vec<(i8, String)> = Vec::new();
    let mut sign = 1i8;
    let mut body = String::new();
    for ch in text.chars() {
        match ch {
            '+' | '-' => {
                if body.is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    terms.push((sign, std::mem::take(&mut body)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
            }
            c if c.is_whitespace() => {}
            _ => body.push(ch),
        }
    }
    if body.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {text:?}")));
    }
    terms.push((sign, body));

    let mut coeffs: Vec<Rat> = Vec::new();
    for (sg, term) in terms {
        let lower = term.to_ascii_lowercase();
        let (coef_str, exp) = match lower.find('x') {
            None => (lower.as_str(), 0usize),
            Some(pos) => {
                let after = &lower[pos + 1..];
                let exp = if after.is_empty() {
                    1
                } else if let Some(e) = after.strip_prefix('^') {
                    e.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in term {term:?}")))?
                } else {
                    return Err(Error::Parse(format!("bad term {term:?}")));
                };
                (lower[..pos].trim_end_matches('*'), exp)
            }
        };
        let coef = if coef_str.is_empty() {
            Rat::one()
        } else {
            parse_rat(coef_str)?
        };
        let coef = if sg < 0 { -coef } else { coef };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Rat::zero());
        }
        coeffs[exp] += coef;
    }
    Ok(UniPoly::new(coeffs))
}

impl fmt::Display for UniPoly {
    /// Human form, descending powers: `3x^2 - 2x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coef = i == 0 || !mag.is_one();
            if show_coef {
                write!(f, "{}", format_rat(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let q = UniPoly::new(vec![int(1), int(2), int(0), int(0)]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::new(vec![int(0)]).degree(), None);
    }

    #[test]
    fn mul_examples() {
        // (1+X)(1−X) = 1−X²
        assert_eq!(p(&[1, 1]).mul(&p(&[1, -1])), p(&[1, 0, -1]));
        // (X²−2X+2)(X³+3X²+5X+9/2) = X⁵+X⁴+X³+(1/2)X²+X+9
        let a = p(&[2, -2, 1]);
        let b = UniPoly::new(vec![rat(9, 2), int(5), int(3), int(1)]);
        let expected = UniPoly::new(vec![int(9), int(1), rat(1, 2), int(1), int(1), int(1)]);
        assert_eq!(a.mul(&b), expected);
        // annihilator
        assert_eq!(p(&[3, 1]).mul(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[1, 0, 1]).evaluate(&int(0)), int(1));
        assert_eq!(p(&[2, -3, 1]).evaluate(&int(2)), int(0));
        assert_eq!(p(&[1, -2, 3]).evaluate(&rat(1, 2)), rat(3, 4));
    }

    #[test]
    fn sign_change_examples() {
        assert_eq!(p(&[1, -2, 3]).sign_changes().unwrap(), 2);
        assert_eq!(p(&[1, 1, 1]).sign_changes().unwrap(), 0);
        assert_eq!(p(&[-1, 0, 0, 1]).sign_changes().unwrap(), 1);
        assert_eq!(UniPoly::zero().sign_changes(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(p(&[-1, 1]).reflect(), p(&[-1, -1]));
        assert_eq!(p(&[1, 0, 1]).reflect(), p(&[1, 0, 1]));
        assert_eq!(p(&[-1, 1, -2, 1]).reflect(), p(&[-1, -1, -2, -1]));
    }

    #[test]
    fn square_examples() {
        assert_eq!(p(&[-1, 1]).square(), p(&[1, -2, 1]));
        assert_eq!(p(&[1, 0, 1]).square(), p(&[1, 0, 2, 0, 1]));
        assert_eq!(UniPoly::zero().square(), UniPoly::zero());
    }

    #[test]
    fn coefficient_normalize_examples() {
        assert_eq!(p(&[4, 0, 2]).coefficient_normalize().unwrap(), p(&[2, 0, 1]));
        let q = UniPoly::new(vec![int(-2), rat(1, 3)]);
        assert_eq!(q.coefficient_normalize().unwrap(), p(&[-6, 1]));
        let m = UniPoly::monomial(int(1), 5);
        assert_eq!(m.coefficient_normalize().unwrap(), m);
        assert!(UniPoly::zero().coefficient_normalize().is_err());
    }

    #[test]
    fn div_rem_exact() {
        let a = p(&[-6, 11, -6, 1]); // (X−1)(X−2)(X−3)
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p(&[6, -5, 1]));
        let (q2, r2) = p(&[1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q2.mul(&p(&[1, 1])).add(&r2), p(&[1, 0, 1]));
    }

    #[test]
    fn shift_matches_evaluation() {
        let q = p(&[2, -3, 0, 1]);
        let s = q.shifted(&rat(5, 3));
        for x in [-2i64, -1, 0, 1, 2] {
            assert_eq!(s.evaluate(&int(x)), q.evaluate(&(int(x) + rat(5, 3))));
        }
    }

    #[test]
    fn parse_both_forms() {
        assert_eq!(UniPoly::parse("[1, -2, 3]").unwrap(), p(&[1, -2, 3]));
        assert_eq!(UniPoly::parse("3x^2 - 2x + 1").unwrap(), p(&[1, -2, 3]));
        assert_eq!(UniPoly::parse("x^2+1").unwrap(), p(&[1, 0, 1]));
        assert_eq!(UniPoly::parse("-x").unwrap(), p(&[0, -1]));
        assert_eq!(UniPoly::parse("1/2 x^2 - 3/4").unwrap(), UniPoly::new(vec![rat(-3, 4), int(0), rat(1, 2)]));
        assert_eq!(UniPoly::parse("[1/2, 0, 1]").unwrap(), UniPoly::new(vec![rat(1, 2), int(0), int(1)]));
        assert!(UniPoly::parse("").is_err());
        assert!(UniPoly::parse("[1, oops]").is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        for coeffs in [vec![1, -2, 3], vec![0, 0, 5], vec![-1], vec![2, 0, 0, -7]] {
            let q = p(&coeffs);
            assert_eq!(UniPoly::parse(&q.to_string()).unwrap(), q);
            assert_eq!(UniPoly::parse(&q.to_list_string()).unwrap(), q);
        }
    }

    #[test]
    fn strip_zero_roots_factor() {
        let (q, k) = p(&[0, 0, -1, 1]).strip_zero_roots();
        assert_eq!(k, 2);
        assert_eq!(q, p(&[-1, 1]));
        let (z, k0) = UniPoly::zero().strip_zero_roots();
        assert!(z.is_zero());
        assert_eq!(k0, 0);
    }
}
