//! Freiman analysis for equigenerated m-primary monomial ideals.
//!
//! An equigenerated monomial ideal is Freiman when |G(I²)| attains the
//! lower bound l(I)·|G(I)| − C(l(I), 2). For m-primary ideals the
//! analytic spread l(I) equals the variable count, and being Freiman is
//! equivalent to being very good, i.e. to I² = I·⟨μ_1, …, μ_n⟩.

use crate::closure::is_very_good;
use crate::error::Result;
use crate::ideal::MonomialIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreimanVerdict {
    Freiman,
    NotFreiman,
    /// Not equigenerated or not m-primary; the counts are still reported
    /// but the Freiman label does not apply.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreimanReport {
    pub equigenerated: bool,
    /// Common total degree of the generators, when equigenerated and
    /// nonzero.
    pub degree: Option<u128>,
    pub num_vars: usize,
    /// |G(I)|.
    pub g1: usize,
    /// |G(I²)|.
    pub g2: usize,
    /// n·|G(I)| − C(n, 2), using the analytic spread n; only computed on
    /// the m-primary path.
    pub bound: Option<u128>,
    /// Whether I² = I·⟨μ_1, …, μ_n⟩; None when not m-primary.
    pub very_good: Option<bool>,
    pub verdict: FreimanVerdict,
}

/// True iff all generators share one total degree, returning that degree.
/// The zero ideal is vacuously equigenerated with no degree.
pub fn is_equigenerated(ideal: &MonomialIdeal) -> (bool, Option<u128>) {
    let mut gens = ideal.generators().iter();
    let Some(first) = gens.next() else {
        return (true, None);
    };
    let d = first.degree();
    if gens.all(|g| g.degree() == d) {
        (true, Some(d))
    } else {
        (false, None)
    }
}

/// Counts |G(I)| and |G(I²)|, compares against the Freiman bound, and
/// records the equivalent very-good test when it applies.
pub fn freiman_check(ideal: &MonomialIdeal) -> Result<FreimanReport> {
    let (equigenerated, degree) = is_equigenerated(ideal);
    let n = ideal.num_vars();
    let g1 = ideal.num_generators();
    let g2 = ideal.pow(2)?.num_generators();
    let m_primary = ideal.mprimary_profile().is_ok();
    let bound = if m_primary {
        // m-primary forces g1 >= n, so the bound is nonnegative
        Some(n as u128 * g1 as u128 - (n as u128 * (n as u128 - 1)) / 2)
    } else {
        None
    };
    let very_good = if m_primary {
        Some(is_very_good(ideal)?)
    } else {
        None
    };
    let verdict = match bound {
        Some(b) if equigenerated => {
            if g2 as u128 == b {
                FreimanVerdict::Freiman
            } else {
                FreimanVerdict::NotFreiman
            }
        }
        _ => FreimanVerdict::NotApplicable,
    };
    Ok(FreimanReport {
        equigenerated,
        degree,
        num_vars: n,
        g1,
        g2,
        bound,
        very_good,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn m(v: &[u64]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    fn maximal_power(n: usize, k: u64) -> MonomialIdeal {
        let gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, 1)).collect();
        MonomialIdeal::from_generators(n, gens)
            .unwrap()
            .pow(k)
            .unwrap()
    }

    #[test]
    fn equigenerated_detection() {
        let mixed = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[2, 2, 2]]);
        assert_eq!(is_equigenerated(&mixed), (false, None));

        let square = maximal_power(3, 2);
        assert_eq!(is_equigenerated(&square), (true, Some(2)));

        assert_eq!(
            is_equigenerated(&MonomialIdeal::zero(2)),
            (true, None)
        );
    }

    #[test]
    fn square_of_maximal_ideal_is_freiman() {
        let report = freiman_check(&maximal_power(3, 2)).unwrap();
        assert_eq!(report.g1, 6);
        assert_eq!(report.bound, Some(15));
        assert_eq!(report.g2, 15);
        assert_eq!(report.verdict, FreimanVerdict::Freiman);
        assert_eq!(report.very_good, Some(true));
    }

    #[test]
    fn cube_of_maximal_ideal_is_not_freiman() {
        // g2 = number of degree-6 monomials in 3 variables = C(8,2) = 28
        let report = freiman_check(&maximal_power(3, 3)).unwrap();
        assert_eq!(report.g1, 10);
        assert_eq!(report.bound, Some(27));
        assert_eq!(report.g2, 28);
        assert_eq!(report.verdict, FreimanVerdict::NotFreiman);
        assert_eq!(report.very_good, Some(false));
    }

    #[test]
    fn non_equigenerated_is_not_applicable() {
        // <x^3, y^3, x y> satisfies the numeric equality but carries no
        // Freiman label
        let report = freiman_check(&ideal(2, &[&[3, 0], &[0, 3], &[1, 1]])).unwrap();
        assert!(!report.equigenerated);
        assert_eq!(report.verdict, FreimanVerdict::NotApplicable);
        assert_eq!(report.g1, 3);
        assert_eq!(report.g2, 5);
        assert_eq!(report.bound, Some(5));
        assert_eq!(report.very_good, Some(false));
    }

    #[test]
    fn non_primary_is_not_applicable() {
        let report = freiman_check(&ideal(2, &[&[2, 1], &[1, 2]])).unwrap();
        assert!(report.equigenerated);
        assert_eq!(report.verdict, FreimanVerdict::NotApplicable);
        assert_eq!(report.bound, None);
        assert_eq!(report.very_good, None);
    }
}
