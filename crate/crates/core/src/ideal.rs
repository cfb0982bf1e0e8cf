//! Monomial ideals as canonical minimal generating sets.
//!
//! An ideal is stored as the unique divisibility-antichain generating it,
//! sorted in the canonical order of [`Monomial::canonical_cmp`]. Equality
//! of ideals is therefore plain structural equality, and every operation
//! is deterministic: identical inputs give identical generator lists.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal in `num_vars` variables, held by its minimal
/// generating set. The zero ideal has an empty list; ⟨1⟩ is generated by
/// the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
}

/// Sort canonically, drop duplicates, and keep only the divisibility-
/// minimal elements. Only monomials of strictly smaller total degree can
/// strictly divide a given one, so each candidate is tested against the
/// survivors of lower degree.
fn reduce(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(Monomial::canonical_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    let mut cutoff = 0;
    let mut degree = None;
    for m in gens {
        let d = m.degree();
        if degree != Some(d) {
            cutoff = kept.len();
            degree = Some(d);
        }
        if kept[..cutoff].iter().all(|g| !g.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to the minimal
    /// generating set. An empty set gives the zero ideal.
    pub fn from_generators(num_vars: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.num_vars() != num_vars {
                return Err(Error::DimensionMismatch {
                    left: num_vars,
                    right: g.num_vars(),
                });
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            generators: reduce(gens),
        })
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            generators: Vec::new(),
        }
    }

    /// The unit ideal ⟨1⟩.
    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            generators: vec![Monomial::one(num_vars)],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// The minimal generating set, canonically ordered.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if self.num_vars != m.num_vars() {
            return Err(Error::DimensionMismatch {
                left: self.num_vars,
                right: m.num_vars(),
            });
        }
        Ok(())
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    /// I ⊆ J, tested generator by generator.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal sum I + J.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Ok(MonomialIdeal {
            num_vars: self.num_vars,
            generators: reduce(gens),
        })
    }

    /// Product IJ, generated by the pairwise products of generators.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ok(MonomialIdeal {
            num_vars: self.num_vars,
            generators: reduce(gens),
        })
    }

    /// I^l, with I^0 = ⟨1⟩. Reduces after every multiplication so the
    /// intermediate generating sets stay minimal.
    pub fn pow(&self, l: u64) -> Result<Self> {
        let mut acc = MonomialIdeal::unit(self.num_vars);
        for _ in 0..l {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Colon by a monomial: I : ⟨m⟩ = ⟨ g / gcd(g, m) ⟩ over generators g.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<Self> {
        self.check_monomial(m)?;
        let gens = self.generators.iter().map(|g| g.div_by_gcd(m)).collect();
        Ok(MonomialIdeal {
            num_vars: self.num_vars,
            generators: reduce(gens),
        })
    }

    /// Colon by an ideal: I : J = ∩_j (I : ⟨n_j⟩) over the generators of J.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.generators {
            let piece = self.colon_monomial(g)?;
            acc = Some(match acc {
                None => piece,
                Some(i) => i.intersect(&piece)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    /// Intersection, generated by pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            num_vars: self.num_vars,
            generators: reduce(gens),
        })
    }

    /// Extracts the pure-power degrees d_i with x_i^{d_i} a minimal
    /// generator. Fails with the first variable that has none.
    pub fn mprimary_profile(&self) -> Result<MPrimaryProfile> {
        let mut d = vec![0u64; self.num_vars];
        for g in &self.generators {
            if let Some(i) = g.pure_power_var() {
                d[i] = g.exponent(i);
            }
        }
        for (i, &di) in d.iter().enumerate() {
            if di == 0 {
                return Err(Error::NotMPrimary { var: i });
            }
        }
        Ok(MPrimaryProfile { d })
    }
}

/// The pure-power degrees (d_1, …, d_n) of an m-primary ideal: each
/// x_i^{d_i} is a minimal generator. These determine the box grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPrimaryProfile {
    d: Vec<u64>,
}

impl MPrimaryProfile {
    pub fn num_vars(&self) -> usize {
        self.d.len()
    }

    /// The degree vector (d_1, …, d_n).
    pub fn degrees(&self) -> &[u64] {
        &self.d
    }

    pub fn degree(&self, var: usize) -> u64 {
        self.d[var]
    }

    /// The generator x_var^{d_var}.
    pub fn pure_power(&self, var: usize) -> Monomial {
        Monomial::pure_power(self.d.len(), var, self.d[var])
    }

    /// The corner monomial μ_1^{a_1} ⋯ μ_n^{a_n} = ∏ x_i^{a_i d_i}.
    pub fn corner(&self, multiples: &[u64]) -> Result<Monomial> {
        if multiples.len() != self.d.len() {
            return Err(Error::DimensionMismatch {
                left: self.d.len(),
                right: multiples.len(),
            });
        }
        let exps = multiples
            .iter()
            .zip(&self.d)
            .map(|(a, d)| a.checked_mul(*d).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u64>>>()?;
        Ok(Monomial::new(exps))
    }

    /// The ideal ⟨μ_1, …, μ_n⟩ generated by the pure powers.
    pub fn corner_ideal(&self) -> MonomialIdeal {
        let gens = (0..self.d.len()).map(|i| self.pure_power(i)).collect();
        MonomialIdeal::from_generators(self.d.len(), gens).expect("matching dimensions")
    }
}
