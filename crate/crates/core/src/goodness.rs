//! Deciding whether an ideal satisfies the box decomposition principle.
//!
//! An m-primary ideal is *good* when every minimal generator of I^l lies
//! in a box whose coordinates sum to l−1, for every l ≥ 1. The decision
//! runs in three stages: an exact necessary degree bound, an exact
//! sufficient degree bound, and an exhaustive check of the finitely many
//! products of non-corner generators that can appear as minimal
//! generators of a power.
//!
//! [`verify_box_decomposition`] expands a power explicitly and checks the
//! principle directly; it shares no code path with [`classify`] and
//! serves as its independent oracle in the test suites.

use crate::boxes::{boxes_containing, is_corner};
use crate::error::{Error, Result};
use crate::ideal::{MPrimaryProfile, MonomialIdeal};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Good,
    Bad,
}

/// Which stage of the decision settled the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// A minimal generator violates the necessary degree bound.
    NecessaryFailed,
    /// Every non-corner generator meets the sufficient degree bound.
    SufficientPassed,
    /// The exhaustive product enumeration decided it.
    Exhaustive,
}

/// A concrete violation of the box decomposition principle: a monomial
/// of I^`power` whose largest containing box sums to `box_sum` < power−1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadWitness {
    pub monomial: Monomial,
    pub power: u64,
    pub box_sum: u64,
}

/// The power index of a non-corner generator: the smallest K with
/// m^K ∈ ⟨μ_1, …, μ_n⟩^K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KBound {
    pub generator: Monomial,
    pub power_index: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub rule: Rule,
    /// Present exactly when the verdict is Bad.
    pub witness: Option<BadWitness>,
    /// Power indices of the non-corner generators; filled only when the
    /// exhaustive stage ran.
    pub k_bounds: Vec<KBound>,
}

impl ClassificationReport {
    pub fn is_good(&self) -> bool {
        self.verdict == Verdict::Good
    }
}

/// Compares Σ exps[i]/d[i] with num/den exactly, accumulating the sum as
/// a normalized fraction. No floating point: the necessary bound is an
/// exact boundary (x y z in ⟨x³,y³,z³,xyz⟩ sits exactly at 1).
fn degree_sum_cmp(exps: &[u64], d: &[u64], num: u64, den: u64) -> std::cmp::Ordering {
    fn gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    let (mut p, mut q) = (0u128, 1u128);
    for (&a, &di) in exps.iter().zip(d) {
        let (a, di) = (a as u128, di as u128);
        p = p
            .checked_mul(di)
            .and_then(|pdi| a.checked_mul(q).and_then(|aq| pdi.checked_add(aq)))
            .expect("degree-sum overflow");
        q = q.checked_mul(di).expect("degree-sum overflow");
        let g = gcd(p, q);
        p /= g;
        q /= g;
    }
    let lhs = p.checked_mul(den as u128).expect("degree-sum overflow");
    let rhs = q.checked_mul(num as u128).expect("degree-sum overflow");
    lhs.cmp(&rhs)
}

/// The coordinate sum of the largest box containing m^k, Σ ⌊k·α_i / d_i⌋.
fn scaled_box_sum(exps: &[u64], d: &[u64], k: u128) -> u128 {
    exps.iter()
        .zip(d)
        .map(|(&a, &di)| {
            k.checked_mul(a as u128).expect("power-index overflow") / di as u128
        })
        .sum()
}

/// Necessary condition: every minimal generator satisfies
/// Σ α_i/d_i ≥ 1. Exact rational arithmetic.
pub fn check_necessary(ideal: &MonomialIdeal, profile: &MPrimaryProfile) -> Result<bool> {
    check_profile(ideal, profile)?;
    Ok(ideal.generators().iter().all(|g| {
        degree_sum_cmp(g.exponents(), profile.degrees(), 1, 1) != std::cmp::Ordering::Less
    }))
}

/// Sufficient condition: every non-corner minimal generator satisfies
/// Σ α_i/d_i ≥ n/2.
pub fn check_sufficient(ideal: &MonomialIdeal, profile: &MPrimaryProfile) -> Result<bool> {
    check_profile(ideal, profile)?;
    let n = profile.num_vars() as u64;
    for g in ideal.generators() {
        if is_corner(g, profile)? {
            continue;
        }
        if degree_sum_cmp(g.exponents(), profile.degrees(), n, 2) == std::cmp::Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_profile(ideal: &MonomialIdeal, profile: &MPrimaryProfile) -> Result<()> {
    if ideal.num_vars() != profile.num_vars() {
        return Err(Error::DimensionMismatch {
            left: ideal.num_vars(),
            right: profile.num_vars(),
        });
    }
    Ok(())
}

/// The smallest K ≥ 1 with m^K ∈ ⟨μ_1, …, μ_n⟩^K, found by ascending
/// search. Membership of m^K in the corner ideal power is equivalent to
/// Σ ⌊K·α_i/d_i⌋ ≥ K. The lcm of the d_i bounds the search; exceeding it
/// means the monomial violates the necessary degree condition.
pub fn power_index(m: &Monomial, profile: &MPrimaryProfile) -> Result<u64> {
    check_dims(m, profile)?;
    fn gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    let bound = profile
        .degrees()
        .iter()
        .try_fold(1u128, |acc, &d| {
            let d = d as u128;
            acc.checked_mul(d / gcd(acc, d))
        })
        .expect("lcm overflow");
    let mut k = 1u128;
    while k <= bound {
        if scaled_box_sum(m.exponents(), profile.degrees(), k) >= k {
            return u64::try_from(k).map_err(|_| Error::NoPowerIndex { bound });
        }
        k += 1;
    }
    Err(Error::NoPowerIndex { bound })
}

fn check_dims(m: &Monomial, profile: &MPrimaryProfile) -> Result<()> {
    if m.num_vars() != profile.num_vars() {
        return Err(Error::DimensionMismatch {
            left: m.num_vars(),
            right: profile.num_vars(),
        });
    }
    Ok(())
}

/// Full good/bad decision.
///
/// Order of stages: a generator violating the necessary bound settles
/// Bad immediately (with the smallest power of that generator all of
/// whose boxes sum below the requirement as witness); if every
/// non-corner generator meets the sufficient bound the ideal is Good;
/// otherwise every product ∏ m_i^{j_i} of non-corner generators with
/// j_i ≤ K_i − 1 is tested for a containing box of coordinate sum
/// ≥ (Σ j_i) − 1, in graded order, stopping at the first failure.
pub fn classify(ideal: &MonomialIdeal) -> Result<ClassificationReport> {
    let profile = ideal.mprimary_profile()?;
    let d = profile.degrees();

    for g in ideal.generators() {
        if degree_sum_cmp(g.exponents(), d, 1, 1) == std::cmp::Ordering::Less {
            // the powers g^l eventually outrun every box; report the
            // first power that does
            let mut l = 2u128;
            loop {
                let box_sum = scaled_box_sum(g.exponents(), d, l);
                if box_sum + 1 < l {
                    let power = u64::try_from(l).expect("witness power fits u64");
                    return Ok(ClassificationReport {
                        verdict: Verdict::Bad,
                        rule: Rule::NecessaryFailed,
                        witness: Some(BadWitness {
                            monomial: g.checked_pow(power)?,
                            power,
                            box_sum: u64::try_from(box_sum).expect("box sum fits u64"),
                        }),
                        k_bounds: Vec::new(),
                    });
                }
                l += 1;
            }
        }
    }

    if check_sufficient(ideal, &profile)? {
        return Ok(ClassificationReport {
            verdict: Verdict::Good,
            rule: Rule::SufficientPassed,
            witness: None,
            k_bounds: Vec::new(),
        });
    }

    let non_corners: Vec<&Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| !g.exponents().iter().zip(d).all(|(&a, &di)| a % di == 0))
        .collect();
    let k_bounds = non_corners
        .iter()
        .map(|g| {
            Ok(KBound {
                generator: (*g).clone(),
                power_index: power_index(g, &profile)?,
            })
        })
        .collect::<Result<Vec<KBound>>>()?;

    // Exponent tuples (j_1, …, j_t) ≠ 0 with j_i ≤ K_i − 1, enumerated in
    // graded order (total sum, then lexicographic) so the reported
    // witness has minimal total degree.
    let caps: Vec<u64> = k_bounds.iter().map(|kb| kb.power_index - 1).collect();
    let total: u128 = caps.iter().map(|&c| c as u128).sum();
    let mut l = 1u128;
    while l <= total {
        let mut tuple = vec![0u64; caps.len()];
        if let Some(witness) =
            first_failing_tuple(&non_corners, &caps, d, l, 0, l, &mut tuple)?
        {
            return Ok(ClassificationReport {
                verdict: Verdict::Bad,
                rule: Rule::Exhaustive,
                witness: Some(witness),
                k_bounds,
            });
        }
        l += 1;
    }

    Ok(ClassificationReport {
        verdict: Verdict::Good,
        rule: Rule::Exhaustive,
        witness: None,
        k_bounds,
    })
}

/// Walks the compositions of `remaining` over positions `pos..` (each
/// bounded by its cap) in lexicographic order and returns the first
/// product whose largest box sums below l − 1.
fn first_failing_tuple(
    gens: &[&Monomial],
    caps: &[u64],
    d: &[u64],
    l: u128,
    pos: usize,
    remaining: u128,
    tuple: &mut Vec<u64>,
) -> Result<Option<BadWitness>> {
    if pos == gens.len() {
        if remaining > 0 {
            return Ok(None);
        }
        let n = d.len();
        let mut product = Monomial::one(n);
        for (g, &j) in gens.iter().zip(tuple.iter()) {
            product = product.checked_mul(&g.checked_pow(j)?)?;
        }
        let box_sum: u128 = product
            .exponents()
            .iter()
            .zip(d)
            .map(|(&a, &di)| (a / di) as u128)
            .sum();
        if box_sum + 1 < l {
            return Ok(Some(BadWitness {
                monomial: product,
                power: u64::try_from(l).expect("power fits u64"),
                box_sum: u64::try_from(box_sum).expect("box sum fits u64"),
            }));
        }
        return Ok(None);
    }
    let cap = (caps[pos] as u128).min(remaining);
    for j in 0..=cap {
        tuple[pos] = j as u64;
        if let Some(w) =
            first_failing_tuple(gens, caps, d, l, pos + 1, remaining - j, tuple)?
        {
            return Ok(Some(w));
        }
    }
    tuple[pos] = 0;
    Ok(None)
}

/// Expands G(I^l) explicitly and checks that every minimal generator has
/// a containing box of coordinate sum exactly l − 1. Returns the first
/// counterexample, or None when the principle holds at this power.
/// Independent of [`classify`]: this is the definition, computed head-on.
pub fn verify_box_decomposition(
    ideal: &MonomialIdeal,
    l: u64,
) -> Result<Option<Monomial>> {
    assert!(l >= 1, "the box decomposition principle concerns l >= 1");
    let profile = ideal.mprimary_profile()?;
    let power = ideal.pow(l)?;
    let target = (l - 1) as u128;
    for g in power.generators() {
        let ok = boxes_containing(g, &profile)?
            .iter()
            .any(|b| b.sum() == target);
        if !ok {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}
