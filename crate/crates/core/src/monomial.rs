//! Monomials as exponent vectors.
//!
//! A monomial in `n` variables is identified with its exponent vector in
//! ℕⁿ: divisibility is coordinatewise ≤, multiplication is coordinatewise
//! addition, lcm/gcd are coordinatewise max/min. Exponents are `u64`;
//! multiplication is checked and reports overflow instead of wrapping.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial, stored as its exponent vector. The all-zeros vector is
/// the unit monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial { exponents }
    }

    /// The unit monomial 1 in `n` variables.
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exponents: vec![0; num_vars],
        }
    }

    /// The pure power x_var^exp.
    pub fn pure_power(num_vars: usize, var: usize, exp: u64) -> Self {
        assert!(var < num_vars);
        let mut exponents = vec![0; num_vars];
        exponents[var] = exp;
        Monomial { exponents }
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u64 {
        self.exponents[var]
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Total degree. Returned as u128 so that sums of large exponents
    /// cannot wrap.
    pub fn degree(&self) -> u128 {
        self.exponents.iter().map(|&e| e as u128).sum()
    }

    /// If this is x_i^e for a single variable i with e > 0, returns i.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut var = None;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                if var.is_some() {
                    return None;
                }
                var = Some(i);
            }
        }
        var
    }

    /// True iff `self` divides `other`, i.e. the exponent vectors
    /// compare ≤ coordinatewise.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.num_vars(), other.num_vars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Coordinatewise max.
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars(), other.num_vars());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial { exponents }
    }

    /// Coordinatewise min.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars(), other.num_vars());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial { exponents }
    }

    /// Coordinatewise sum, with overflow reported as an error.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.num_vars(), other.num_vars());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u64>>>()?;
        Ok(Monomial { exponents })
    }

    /// self^k, checked.
    pub fn checked_pow(&self, k: u64) -> Result<Self> {
        let exponents = self
            .exponents
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u64>>>()?;
        Ok(Monomial { exponents })
    }

    /// Exact quotient self / divisor, or None when divisor ∤ self.
    pub fn try_div(&self, divisor: &Self) -> Option<Self> {
        if !divisor.divides(self) {
            return None;
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&divisor.exponents)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial { exponents })
    }

    /// self / gcd(self, other). This is the generator of the colon
    /// ⟨self⟩ : ⟨other⟩ and never fails.
    pub fn div_by_gcd(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars(), other.num_vars());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a - a.min(b))
            .collect();
        Monomial { exponents }
    }

    /// Graded-lexicographic comparison: total degree first, then
    /// lexicographic on the exponent vector.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }

    /// The order generator lists are kept in: ascending total degree,
    /// ties broken by descending lexicographic order, so that e.g.
    /// x^5 sorts before x^4 y before y^5.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

/// Generic display with variables named x1, x2, … The CLI substitutes
/// user-facing names.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
