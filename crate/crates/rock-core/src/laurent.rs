//! Sparse Laurent polynomials over the integers.
//!
//! All graded dimensions in this crate are values of this type. Coefficients
//! are exact `i64`s; desk-scale dimensions stay far below overflow and the
//! arithmetic ops assert on it in debug builds.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An element of `Z[q, q^-1]`, stored as a sorted exponent -> coefficient map
/// with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^n`.
    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn q_power(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry = entry.checked_add(c).expect("Laurent coefficient overflow");
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    /// Value at `q = 1`, i.e. the ungraded dimension.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect();
        Self { coeffs }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Exponent -> coefficient map with string keys, the canonical JSON form.
    pub fn to_string_map(&self) -> BTreeMap<String, i64> {
        self.coeffs
            .iter()
            .map(|(&e, &c)| (e.to_string(), c))
            .collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "q")?,
                1 => write!(f, "{a}q")?,
                _ if a == 1 => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.checked_neg().expect("overflow"));
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        &LaurentPoly::zero() - &self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(
                    e1.checked_add(e2).expect("exponent overflow"),
                    c1.checked_mul(c2).expect("coefficient overflow"),
                );
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_normalization() {
        let p = LaurentPoly::q_power(1) + LaurentPoly::q_power(-1);
        assert_eq!(p.coeff(1), 1);
        assert_eq!(p.coeff(-1), 1);
        assert_eq!(p.eval_at_one(), 2);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(p.bar(), p);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::monomial(2, 1) + LaurentPoly::monomial(0, 2);
        assert_eq!(p.to_string(), "2 + q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
