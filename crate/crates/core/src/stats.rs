//! Exact additive statistics: representation counts, additive energy,
//! Ruzsa distance, and the sumset lower bounds they imply.
//!
//! All counts are exact 64-bit integers; real-valued quantities use f64 and
//! natural logarithms.

use crate::error::{Error, Result};
use crate::set::ResidueSet;

/// The representation counts `r_{U+V}(t) = #{(u, v) : u + v = t}` for every
/// residue t of Z_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepProfile {
    modulus: usize,
    counts: Vec<u64>,
}

impl RepProfile {
    /// The group order n.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The count vector indexed by residue.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The count at a residue (reduced mod n).
    pub fn count_at(&self, t: usize) -> u64 {
        self.counts[t % self.modulus]
    }

    /// Total number of pairs; equals `|U| * |V|`.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The residues with at least one representation; equals the sumset.
    pub fn support(&self) -> ResidueSet {
        ResidueSet::from_residues(
            self.modulus,
            self.counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(t, _)| t),
        )
        .expect("modulus already validated")
    }
}

/// Computes the representation counts of `U + V`.
pub fn rep_function(u: &ResidueSet, v: &ResidueSet) -> Result<RepProfile> {
    let n = u.modulus();
    if v.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n,
            right: v.modulus(),
        });
    }
    let mut counts = vec![0u64; n];
    for a in u.iter() {
        for b in v.iter() {
            counts[(a + b) % n] += 1;
        }
    }
    Ok(RepProfile { modulus: n, counts })
}

/// The additive energy `E(U, V) = #{(u1, u2, v3, v4) : u1 + u2 = v3 + v4}`,
/// computed as `sum_t r_{U+U}(t) * r_{V+V}(t)`.
///
/// Note the convention: both summands on the left are drawn from U and both
/// on the right from V (this differs from the mixed u1 + v1 = u2 + v2 count).
pub fn additive_energy(u: &ResidueSet, v: &ResidueSet) -> Result<u64> {
    let ru = rep_function(u, u)?;
    let rv = rep_function(v, v)?;
    if ru.modulus != rv.modulus {
        return Err(Error::ModulusMismatch {
            left: ru.modulus,
            right: rv.modulus,
        });
    }
    Ok(ru.counts.iter().zip(&rv.counts).map(|(a, b)| a * b).sum())
}

/// The Ruzsa distance `d(U, V) = ln(|U - V| / sqrt(|U| |V|))`.
pub fn ruzsa_distance(u: &ResidueSet, v: &ResidueSet) -> Result<f64> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyOperand("ruzsa_distance operand"));
    }
    let diff = u.difference_set(v)?;
    Ok((diff.len() as f64 / ((u.len() * v.len()) as f64).sqrt()).ln())
}

/// The doubling constant `|U + U| / |U|` (the exponential of the Ruzsa
/// distance from U to -U).
pub fn doubling_constant(u: &ResidueSet) -> Result<f64> {
    if u.is_empty() {
        return Err(Error::EmptyOperand("doubling_constant operand"));
    }
    let double = u.sumset(u)?;
    Ok(double.len() as f64 / u.len() as f64)
}

/// The energy lower bound `(|U| |V|)^2 / E(U, V)` on sumset size.
///
/// For V = U (or an affine image of +/-U) this is at most both `|U + V|` and
/// `|U - V|`. For unrelated pairs the quadruple-count convention above can
/// undershoot the mixed energy and the quotient may exceed the sumset size
/// (it is infinite when no quadruple exists at all); see the crate tests for
/// a concrete witness.
pub fn energy_sum_bound(u: &ResidueSet, v: &ResidueSet) -> Result<f64> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyOperand("energy_sum_bound operand"));
    }
    let e = additive_energy(u, v)?;
    let pairs = (u.len() * v.len()) as f64;
    Ok(pairs * pairs / e as f64)
}

/// The Ruzsa-triangle lower bound `sqrt(|U| * |V - V|) <= |U + V|`.
pub fn ruzsa_sum_bound(u: &ResidueSet, v: &ResidueSet) -> Result<f64> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyOperand("ruzsa_sum_bound operand"));
    }
    if u.modulus() != v.modulus() {
        return Err(Error::ModulusMismatch {
            left: u.modulus(),
            right: v.modulus(),
        });
    }
    let vv = v.difference_set(v)?;
    Ok(((u.len() * vv.len()) as f64).sqrt())
}
