//! Shared helpers for the integration suites: small constructors and
//! deterministic random corpora of m-primary ideals.

#![allow(dead_code)]

use monobox::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn m(v: &[u64]) -> Monomial {
    Monomial::new(v.to_vec())
}

pub fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
    MonomialIdeal::from_generators(n, gens.iter().map(|g| m(g)).collect()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Σ e_i / d_i ≥ 1, cross-multiplied over the product of the d_i.
/// Degrees in these corpora are tiny, so u128 is plenty.
fn meets_degree_bound(e: &[u64], d: &[u64]) -> bool {
    let prod: u128 = d.iter().map(|&x| x as u128).product();
    let sum: u128 = e
        .iter()
        .zip(d)
        .map(|(&ei, &di)| ei as u128 * (prod / di as u128))
        .sum();
    sum >= prod
}

/// A random m-primary ideal: pure powers x_i^{d_i} with 2 ≤ d_i ≤ max_d,
/// plus `extras` monomials strictly inside the first box with at least
/// two positive exponents (so reduction keeps the profile intact). When
/// `force_necessary` is set, every extra generator satisfies the
/// necessary degree bound Σ e_i/d_i ≥ 1.
pub fn random_m_primary(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_d: u64,
    extras: usize,
    force_necessary: bool,
) -> MonomialIdeal {
    let d: Vec<u64> = (0..n).map(|_| rng.gen_range(2..=max_d)).collect();
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, d[i])).collect();
    for _ in 0..extras {
        loop {
            let e: Vec<u64> = (0..n).map(|i| rng.gen_range(0..d[i])).collect();
            if e.iter().filter(|&&x| x > 0).count() < 2 {
                continue;
            }
            if force_necessary && !meets_degree_bound(&e, &d) {
                continue;
            }
            gens.push(m(&e));
            break;
        }
    }
    MonomialIdeal::from_generators(n, gens).unwrap()
}

/// A random good ideal built to pass the sufficient degree bound: every
/// extra generator has e_i ≥ d_i/2 in each coordinate.
pub fn random_sufficient_good(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_d: u64,
    extras: usize,
) -> MonomialIdeal {
    let d: Vec<u64> = (0..n).map(|_| rng.gen_range(2..=max_d)).collect();
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, d[i])).collect();
    for _ in 0..extras {
        let e: Vec<u64> = (0..n)
            .map(|i| rng.gen_range(d[i].div_ceil(2)..d[i]))
            .collect();
        gens.push(m(&e));
    }
    MonomialIdeal::from_generators(n, gens).unwrap()
}

/// Draws random m-primary ideals (necessary bound enforced) and keeps
/// the ones that classify Good, until `count` are collected.
pub fn good_corpus(
    seed: u64,
    count: usize,
    ns: &[usize],
    max_d: u64,
    max_extras: usize,
) -> Vec<MonomialIdeal> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = ns[rng.gen_range(0..ns.len())];
        let extras = rng.gen_range(1..=max_extras);
        let candidate = random_m_primary(&mut rng, n, max_d, extras, true);
        if classify(&candidate).unwrap().is_good() {
            out.push(candidate);
        }
    }
    out
}

/// Random m-primary ideals with no goodness screening at all.
pub fn mixed_corpus(
    seed: u64,
    count: usize,
    ns: &[usize],
    max_d: u64,
    max_extras: usize,
) -> Vec<MonomialIdeal> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = ns[rng.gen_range(0..ns.len())];
            let extras = rng.gen_range(0..=max_extras);
            random_m_primary(&mut rng, n, max_d, extras, false)
        })
        .collect()
}

/// A random equigenerated m-primary ideal: all pure powers x_i^deg plus
/// up to `max_extras` further monomials of the same total degree.
pub fn random_equigenerated(rng: &mut ChaCha8Rng, n: usize, deg: u64, max_extras: usize) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::pure_power(n, i, deg)).collect();
    let extras = rng.gen_range(0..=max_extras);
    for _ in 0..extras {
        // random composition of deg into n parts
        let mut e = vec![0u64; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        if e.iter().filter(|&&x| x > 0).count() < 2 {
            continue; // a pure power again; already present
        }
        gens.push(m(&e));
    }
    MonomialIdeal::from_generators(n, gens).unwrap()
}

/// The ideal generated by all monomials of degree 2d in two variables
/// except x^d y^d.
pub fn punctured_degree_ideal(d: u64) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..=2 * d)
        .filter(|&a| a != d)
        .map(|a| m(&[a, 2 * d - a]))
        .collect();
    MonomialIdeal::from_generators(2, gens).unwrap()
}

/// ⟨x_1^{d_1}, …, x_n^{d_n}⟩ for random d_i.
pub fn random_pure_power_ideal(rng: &mut ChaCha8Rng, n: usize, max_d: u64) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..n)
        .map(|i| Monomial::pure_power(n, i, rng.gen_range(1..=max_d)))
        .collect();
    MonomialIdeal::from_generators(n, gens).unwrap()
}

/// All compositions of `total` into `parts` nonnegative summands.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; parts];
    fn rec(total: u64, pos: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pos + 1 == current.len() {
            current[pos] = total;
            out.push(current.clone());
            return;
        }
        for v in 0..=total {
            current[pos] = v;
            rec(total - v, pos + 1, current, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, 0, &mut current, &mut out);
    out
}
