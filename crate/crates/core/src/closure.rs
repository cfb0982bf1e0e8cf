//! Ratliff–Rush closure of good m-primary monomial ideals.
//!
//! The closure Ĩ = ∪_{k≥0} (I^{k+1} : I^k) of a good ideal equals the
//! intersection of the n axis-stabilized box ideals, one per coordinate
//! direction. Each axis ideal is computed by a fixed-point iteration
//! that only ever multiplies the newly found monomials with the
//! non-corner generators, so no large power of I is expanded.
//!
//! [`oracle_closure`] computes the defining union by brute force over
//! explicit colon quotients up to a cutoff; it is the independent
//! cross-check for [`rr_closure`] and the honest fallback for bad ideals.

use crate::error::{Error, Result};
use crate::goodness::classify;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The result of stabilizing one axis line of box ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisStabilization {
    /// Axis index in 0..n.
    pub axis: usize,
    /// First index at which the line is stable: the box ideal with
    /// coordinate q on this axis (and 0 elsewhere) equals all later ones.
    pub q: u64,
    /// That stable ideal.
    pub ideal: MonomialIdeal,
    /// New-monomial sets per round, one entry per iteration: the first q
    /// are nonempty, the final entry is the empty set that stopped the
    /// loop.
    pub trace: Vec<Vec<Monomial>>,
}

/// Runs the axis iteration without classifying first. The caller is
/// responsible for goodness; on a bad ideal the iteration still
/// terminates but the result need not be a box ideal.
pub fn axis_stabilize_unchecked(
    ideal: &MonomialIdeal,
    axis: usize,
) -> Result<AxisStabilization> {
    let profile = ideal.mprimary_profile()?;
    let n = profile.num_vars();
    if axis >= n {
        return Err(Error::AxisOutOfRange { axis, num_vars: n });
    }
    let d = profile.degrees().to_vec();
    let mu_axis = profile.pure_power(axis);
    // non-corner generators; multiplying by a pure power never yields a
    // new monomial after the first round
    let multipliers: Vec<Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| g.pure_power_var().is_none() && !g.is_unit())
        .cloned()
        .collect();

    let mut stable = ideal.clone();
    let mut frontier: Vec<Monomial> = ideal.generators().to_vec();
    let mut trace: Vec<Vec<Monomial>> = Vec::new();
    loop {
        let mut fresh: Vec<Monomial> = Vec::new();
        for f in &frontier {
            for m in &multipliers {
                let fm = f.checked_mul(m)?;
                let within = (0..n)
                    .filter(|&j| j != axis)
                    .all(|j| fm.exponent(j) < d[j]);
                if !within {
                    continue;
                }
                let a = fm.div_by_gcd(&mu_axis);
                if !stable.contains(&a)? {
                    fresh.push(a);
                }
            }
        }
        let next = MonomialIdeal::from_generators(n, fresh)?;
        let frontier_set: Vec<Monomial> = next.generators().to_vec();
        trace.push(frontier_set.clone());
        if frontier_set.is_empty() {
            break;
        }
        stable = stable.sum(&next)?;
        frontier = frontier_set;
    }
    Ok(AxisStabilization {
        axis,
        q: (trace.len() - 1) as u64,
        ideal: stable,
        trace,
    })
}

/// Axis stabilization, gated on the classification: bad ideals are
/// refused with the failing witness.
pub fn axis_stabilize(ideal: &MonomialIdeal, axis: usize) -> Result<AxisStabilization> {
    let report = classify(ideal)?;
    if !report.is_good() {
        return Err(Error::BadIdeal(Box::new(report)));
    }
    axis_stabilize_unchecked(ideal, axis)
}

/// The Ratliff–Rush closure of a good ideal: the intersection of the n
/// axis-stabilized ideals. Bad ideals are refused; use
/// [`oracle_closure`] to explore those.
pub fn rr_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let report = classify(ideal)?;
    if !report.is_good() {
        return Err(Error::BadIdeal(Box::new(report)));
    }
    rr_closure_unchecked(ideal)
}

/// The closure formula without the classification gate. Meaningful only
/// for good ideals.
pub fn rr_closure_unchecked(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let n = ideal.mprimary_profile()?.num_vars();
    let mut acc: Option<MonomialIdeal> = None;
    for axis in 0..n {
        let stab = axis_stabilize_unchecked(ideal, axis)?;
        acc = Some(match acc {
            None => stab.ideal,
            Some(i) => i.intersect(&stab.ideal)?,
        });
    }
    Ok(acc.expect("at least one variable"))
}

/// The successive quotient I^{k+1} : I^k, computed on explicit powers.
pub fn successive_quotient(ideal: &MonomialIdeal, k: u64) -> Result<MonomialIdeal> {
    ideal.pow(k + 1)?.colon(&ideal.pow(k)?)
}

/// A truncation of the defining union Ĩ = ∪_{k≥0} (I^{k+1} : I^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub k_max: u64,
    pub window: u64,
    /// quotients[k-1] = I^{k+1} : I^k for k = 1..=k_max.
    pub quotients: Vec<MonomialIdeal>,
    /// Reduced sum of I and all computed quotients.
    pub union: MonomialIdeal,
    /// True when the last `window` quotients are equal ideals and the
    /// running union did not grow over that window. Evidence of
    /// stabilization, not proof: the union is over all k.
    pub stabilized: bool,
}

impl OracleReport {
    /// |G(I^{k+1} : I^k)| for k = 1..=k_max.
    pub fn quotient_counts(&self) -> Vec<usize> {
        self.quotients.iter().map(|q| q.num_generators()).collect()
    }
}

/// Computes the quotients I^{k+1} : I^k for k ≤ k_max incrementally and
/// reports their reduced union together with the stabilization evidence.
pub fn oracle_closure(ideal: &MonomialIdeal, k_max: u64, window: u64) -> Result<OracleReport> {
    assert!(k_max >= 1 && window >= 1);
    let mut power = ideal.clone(); // I^k
    let mut union = ideal.clone(); // includes the k = 0 quotient, I itself
    let mut quotients = Vec::with_capacity(k_max as usize);
    let mut union_snapshots = vec![union.clone()];
    for _ in 1..=k_max {
        let next_power = power.product(ideal)?;
        let quotient = next_power.colon(&power)?;
        union = union.sum(&quotient)?;
        quotients.push(quotient);
        union_snapshots.push(union.clone());
        power = next_power;
    }
    let stabilized = if k_max >= window {
        let tail = &quotients[(k_max - window) as usize..];
        tail.windows(2).all(|w| w[0] == w[1])
            && union_snapshots[(k_max - window) as usize] == union_snapshots[k_max as usize]
    } else {
        false
    };
    Ok(OracleReport {
        k_max,
        window,
        quotients,
        union,
        stabilized,
    })
}

/// Whether I equals its Ratliff–Rush closure. Uses the closure formula,
/// so the ideal must be good.
pub fn is_ratliff_rush(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(rr_closure(ideal)? == *ideal)
}

/// A good ideal all of whose box ideals equal I itself; equivalently
/// I² = I·⟨μ_1, …, μ_n⟩. All powers of such an ideal are Ratliff–Rush.
pub fn is_very_good(ideal: &MonomialIdeal) -> Result<bool> {
    let profile = ideal.mprimary_profile()?;
    let square = ideal.pow(2)?;
    let shifted = ideal.product(&profile.corner_ideal())?;
    Ok(square == shifted)
}
