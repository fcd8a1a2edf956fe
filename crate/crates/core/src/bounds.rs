//! Classical sumset lower bounds (Olson, Mann) and the per-pair report that
//! lines them up against exact sumset sizes for the standard family.

use serde::Serialize;

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::family::build_family_a;
use crate::fourier::error_bound;
use crate::set::ResidueSet;
use crate::stats::additive_energy;

/// Outcome of the Olson bound `|U + V| >= |U|/2 + |V|`, which applies when
/// the sumset is proper and no proper coset contains U.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OlsonCheck {
    /// Whether the hypotheses hold (`U + V != Z_n` and the smallest coset
    /// containing U is the full group).
    pub applicable: bool,
    /// The bound value `|U|/2 + |V|`.
    pub bound: f64,
    /// Whether `|U + V| >= bound` (vacuously true when not applicable is
    /// irrelevant; this reports the raw comparison).
    pub satisfied: bool,
}

/// Checks the Olson bound for a pair of non-empty sets.
pub fn olson_check(u: &ResidueSet, v: &ResidueSet) -> Result<OlsonCheck> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyOperand("olson_check operand"));
    }
    let sum = u.sumset(v)?;
    let (_, coset) = u.smallest_coset()?;
    let applicable = !sum.is_full() && coset.is_full();
    let bound = u.len() as f64 / 2.0 + v.len() as f64;
    Ok(OlsonCheck {
        applicable,
        bound,
        satisfied: sum.len() as f64 >= bound,
    })
}

/// A proper subgroup H violating Mann's condition `|S + H| >= |S| + |H| - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MannViolation {
    /// A generator of the subgroup (a divisor of n).
    pub generator: usize,
    /// The subgroup order |H|.
    pub subgroup_size: usize,
    /// The exact size |S + H|.
    pub sum_size: usize,
    /// The violated threshold `|S| + |H| - 1`.
    pub required: usize,
}

/// Survey row for one proper subgroup: the exact sumset size against both
/// the theorem threshold `|S| + |H| - 1` and the shifted variant
/// `|S| + |H| + 1` that floats around in informal statements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MannCandidate {
    /// A generator of the subgroup (a divisor of n).
    pub generator: usize,
    /// The subgroup order |H|.
    pub subgroup_size: usize,
    /// The exact size |S + H|.
    pub sum_size: usize,
    /// `|S| + |H| - 1`.
    pub classic_bound: usize,
    /// `|S| + |H| + 1`.
    pub shifted_bound: usize,
    /// Whether `sum_size < classic_bound` (a genuine Mann violation).
    pub violates_classic: bool,
    /// Whether `sum_size < shifted_bound` (the comparison flag for the
    /// shifted variant; true for many healthy sets, e.g. whenever S + H is
    /// everything and |H| > n - |S|).
    pub violates_shifted: bool,
}

/// Enumerates every proper subgroup of Z_n (one per divisor of n) and
/// returns those violating `|S + H| >= |S| + |H| - 1`. An empty result
/// certifies the first branch of Mann's alternative for S.
pub fn mann_check(s: &ResidueSet) -> Result<Vec<MannViolation>> {
    Ok(mann_candidates(s)?
        .into_iter()
        .filter(|c| c.violates_classic)
        .map(|c| MannViolation {
            generator: c.generator,
            subgroup_size: c.subgroup_size,
            sum_size: c.sum_size,
            required: c.classic_bound,
        })
        .collect())
}

/// The full per-subgroup survey behind [`mann_check`], one row per proper
/// subgroup of Z_n in ascending generator order.
pub fn mann_candidates(s: &ResidueSet) -> Result<Vec<MannCandidate>> {
    if s.is_empty() {
        return Err(Error::EmptyOperand("mann_check operand"));
    }
    let n = s.modulus();
    let mut rows = Vec::new();
    for d in divisors(n) {
        if d == 1 {
            continue; // <1> is the whole group, not a proper subgroup
        }
        let h = ResidueSet::subgroup(n, d)?;
        let sum_size = s.sumset(&h)?.len();
        let classic_bound = s.len() + h.len() - 1;
        let shifted_bound = s.len() + h.len() + 1;
        rows.push(MannCandidate {
            generator: d,
            subgroup_size: h.len(),
            sum_size,
            classic_bound,
            shifted_bound,
            violates_classic: sum_size < classic_bound,
            violates_shifted: sum_size < shifted_bound,
        });
    }
    Ok(rows)
}

/// Exact sumset size of `A + v.comp(A)` for the standard family at one
/// parameter pair, next to every lower bound the toolkit can produce.
///
/// `fourier` is the clamped coverage margin `max(0, k/2 - error_bound)`:
/// when positive, every residue has a representation and the sumset is all
/// of Z_2k. It is a margin, not a cardinality estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    /// Family parameter; the group is Z_2k.
    pub k: usize,
    /// The unit multiplier applied to the complement.
    pub v: usize,
    /// The exact size `|A + v.comp(A)|`.
    pub actual: usize,
    /// `sqrt(|v.comp(A)| * |A - A|)`.
    pub ruzsa: f64,
    /// `(k^2)^2 / E(A, A)`, using `E(A, v.comp(A)) <= E(A, A)`.
    pub energy: f64,
    /// The Olson bound value `|A|/2 + |v.comp(A)| = 3k/2`.
    pub olson: f64,
    /// Whether the Olson hypotheses hold for this pair.
    pub olson_applicable: bool,
    /// The Mann-based bound `2k - 1`.
    pub mann: usize,
    /// Whether the Mann check eliminated every proper subgroup.
    pub mann_applicable: bool,
    /// `max(0, k/2 - error_bound(A, v.comp(A)))`.
    pub fourier: f64,
    /// Whether the sumset is all of Z_2k.
    pub full: bool,
}

/// Builds the [`BoundReport`] for family parameter k and unit v.
pub fn bound_report(k: usize, v: usize) -> Result<BoundReport> {
    let a = build_family_a(k)?;
    let n = 2 * k;
    let map = crate::affine::AffineMap::new(n, 0, v)?; // validates v as a unit
    let b = a.complement().dilate(map.multiplier());
    let sum = a.sumset(&b)?;
    let actual = sum.len();
    let diff = a.difference_set(&a)?;
    let olson = olson_check(&a, &b)?;
    let mann_ok = mann_check(&a)?.is_empty();
    let eb = error_bound(&a, &b)?;
    Ok(BoundReport {
        k,
        v: map.multiplier(),
        actual,
        ruzsa: ((b.len() * diff.len()) as f64).sqrt(),
        energy: {
            let e = additive_energy(&a, &a)? as f64;
            let pairs = (k * k) as f64;
            pairs * pairs / e
        },
        olson: olson.bound,
        olson_applicable: olson.applicable,
        mann: 2 * k - 1,
        mann_applicable: mann_ok,
        fourier: (k as f64 / 2.0 - eb).max(0.0),
        full: actual == n,
    })
}
