//! Boxes, corners, box ideals and cones.
//!
//! An m-primary ideal with pure-power degrees (d_1, …, d_n) tiles ℕⁿ with
//! boxes B_{a_1..a_n} = ∏ [a_i d_i, (a_i+1) d_i]. Each box carries the
//! ideal obtained from the minimal generators of the matching power that
//! fall inside it, shifted back to the origin; that ideal is computed
//! here through the colon formula I^{a_1+…+a_n+1} : ⟨μ_1^{a_1} ⋯ μ_n^{a_n}⟩.
//!
//! Cones are the pieces ℕⁿ decomposes into around a chosen point: some
//! coordinates pinned to a value, the rest free above a vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{MPrimaryProfile, MonomialIdeal};
use crate::monomial::Monomial;

/// Coordinates (a_1, …, a_n) of a box in the grid of an m-primary ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxCoord(pub Vec<u64>);

impl BoxCoord {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    /// Coordinate sum, the quantity the box decomposition principle
    /// constrains.
    pub fn sum(&self) -> u128 {
        self.0.iter().map(|&a| a as u128).sum()
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
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

/// All boxes containing the monomial. Per coordinate the candidates are
/// ⌊α_i/d_i⌋ and, when α_i > 0 is an exact multiple of d_i, also
/// α_i/d_i − 1; the result is the cartesian product. A coordinate equal
/// to 0 only offers box coordinate 0 even though d_i divides it.
pub fn boxes_containing(m: &Monomial, profile: &MPrimaryProfile) -> Result<Vec<BoxCoord>> {
    check_dims(m, profile)?;
    let candidates: Vec<Vec<u64>> = m
        .exponents()
        .iter()
        .zip(profile.degrees())
        .map(|(&a, &d)| {
            let q = a / d;
            if a > 0 && a % d == 0 {
                vec![q - 1, q]
            } else {
                vec![q]
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut current = vec![0u64; candidates.len()];
    cartesian(&candidates, 0, &mut current, &mut out);
    Ok(out)
}

fn cartesian(cands: &[Vec<u64>], i: usize, current: &mut Vec<u64>, out: &mut Vec<BoxCoord>) {
    if i == cands.len() {
        out.push(BoxCoord(current.clone()));
        return;
    }
    for &v in &cands[i] {
        current[i] = v;
        cartesian(cands, i + 1, current, out);
    }
}

/// The coordinatewise-largest box containing the monomial:
/// (⌊α_1/d_1⌋, …, ⌊α_n/d_n⌋).
pub fn largest_box(m: &Monomial, profile: &MPrimaryProfile) -> Result<BoxCoord> {
    check_dims(m, profile)?;
    Ok(BoxCoord(
        m.exponents()
            .iter()
            .zip(profile.degrees())
            .map(|(&a, &d)| a / d)
            .collect(),
    ))
}

/// True iff every exponent is a multiple of the matching d_i, i.e. the
/// monomial is a product of the pure-power generators.
pub fn is_corner(m: &Monomial, profile: &MPrimaryProfile) -> Result<bool> {
    check_dims(m, profile)?;
    Ok(m.exponents()
        .iter()
        .zip(profile.degrees())
        .all(|(&a, &d)| a % d == 0))
}

/// The box ideal I_{a_1..a_n} = I^{a_1+…+a_n+1} : ⟨μ_1^{a_1} ⋯ μ_n^{a_n}⟩.
///
/// For good ideals this equals the generators of the matching power
/// inside the box, shifted to the origin. The colon is computed for any
/// m-primary ideal; callers wanting the box interpretation should gate
/// on the classification first.
pub fn box_ideal(ideal: &MonomialIdeal, coords: &BoxCoord) -> Result<MonomialIdeal> {
    let profile = ideal.mprimary_profile()?;
    if coords.0.len() != profile.num_vars() {
        return Err(Error::DimensionMismatch {
            left: profile.num_vars(),
            right: coords.0.len(),
        });
    }
    let l: u64 = coords
        .sum()
        .checked_add(1)
        .and_then(|s| u64::try_from(s).ok())
        .ok_or(Error::ExponentOverflow)?;
    let corner = profile.corner(coords.coords())?;
    ideal.pow(l)?.colon_monomial(&corner)
}

/// One coordinate of a cone: either pinned to an exact value or free to
/// range from a vertex value upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeEntry {
    Fixed(u64),
    Free(u64),
}

impl ConeEntry {
    pub fn value(&self) -> u64 {
        match *self {
            ConeEntry::Fixed(v) | ConeEntry::Free(v) => v,
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, ConeEntry::Free(_))
    }
}

/// A cone in ℕⁿ: the set of points agreeing with the vertex on the fixed
/// coordinates and at least as large on the free ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    entries: Vec<ConeEntry>,
}

impl Cone {
    pub fn new(entries: Vec<ConeEntry>) -> Self {
        Cone { entries }
    }

    pub fn entries(&self) -> &[ConeEntry] {
        &self.entries
    }

    /// Number of free coordinates.
    pub fn dimension(&self) -> usize {
        self.entries.iter().filter(|e| e.is_free()).count()
    }

    pub fn vertex(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.value()).collect()
    }

    pub fn contains_point(&self, point: &[u64]) -> bool {
        point.len() == self.entries.len()
            && self.entries.iter().zip(point).all(|(e, &p)| match *e {
                ConeEntry::Fixed(v) => p == v,
                ConeEntry::Free(v) => p >= v,
            })
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                ConeEntry::Fixed(v) => write!(f, "[{v}]")?,
                ConeEntry::Free(v) => write!(f, "{v}")?,
            }
        }
        write!(f, ")")
    }
}

/// The family of cones associated to a point (a_1, …, a_n): per
/// coordinate either the free value a_i or a fixed value below it, which
/// gives ∏ (a_i + 1) cones forming a disjoint cover of ℕⁿ.
pub fn cone_family(coords: &BoxCoord) -> Vec<Cone> {
    let mut out = Vec::new();
    let mut current: Vec<ConeEntry> = Vec::with_capacity(coords.0.len());
    cone_family_rec(&coords.0, &mut current, &mut out);
    out
}

fn cone_family_rec(coords: &[u64], current: &mut Vec<ConeEntry>, out: &mut Vec<Cone>) {
    if current.len() == coords.len() {
        out.push(Cone::new(current.clone()));
        return;
    }
    let a = coords[current.len()];
    for v in 0..a {
        current.push(ConeEntry::Fixed(v));
        cone_family_rec(coords, current, out);
        current.pop();
    }
    current.push(ConeEntry::Free(a));
    cone_family_rec(coords, current, out);
    current.pop();
}

/// Decomposes a cone into a disjoint union of cones with respect to one
/// of its points: the free coordinates are treated as a copy of ℕᵐ, the
/// cone family of the shifted point is computed there, and the fixed
/// coordinates are reinserted. Exactly one piece has the full dimension
/// of `cone`, with vertex `point`.
pub fn decompose_cone(cone: &Cone, point: &[u64]) -> Result<Vec<Cone>> {
    if !cone.contains_point(point) {
        return Err(Error::PointNotInCone {
            point: point.to_vec(),
        });
    }
    let free_positions: Vec<usize> = (0..cone.entries.len())
        .filter(|&i| cone.entries[i].is_free())
        .collect();
    let shifted: Vec<u64> = free_positions
        .iter()
        .map(|&i| point[i] - cone.entries[i].value())
        .collect();
    let family = cone_family(&BoxCoord(shifted));
    let pieces = family
        .into_iter()
        .map(|piece| {
            let mut entries = cone.entries.clone();
            for (j, &i) in free_positions.iter().enumerate() {
                let base = cone.entries[i].value();
                entries[i] = match piece.entries[j] {
                    ConeEntry::Fixed(v) => ConeEntry::Fixed(v + base),
                    ConeEntry::Free(v) => ConeEntry::Free(v + base),
                };
            }
            Cone::new(entries)
        })
        .collect();
    Ok(pieces)
}
