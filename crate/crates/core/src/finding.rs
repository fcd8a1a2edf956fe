//! Structured reports for computed deviations from expected identities.
//!
//! The scan harness checks a number of identities that are expected to hold
//! from some threshold k onward. When a computation contradicts one, the
//! harness records a [`Finding`] carrying a concrete witness instead of
//! aborting: the point of the scan is evidence, and a surprise is data.

use std::fmt;

use serde::Serialize;

/// The interpolated cubic fails to match the exact additive energy (checked
/// for k at or above 8).
pub const CLAIM_ENERGY_POLY: &str = "energy-closed-form";
/// A divisor subgroup H has |A + v.comp(A)| below |comp(A)| + |H| - 1
/// (checked for k at or above 6).
pub const CLAIM_MANN_EMPTY: &str = "mann-elimination";
/// Some unit v has |A + v.comp(A)| below 2k - 1 (checked for k at or
/// above 6).
pub const CLAIM_MIN_SUMSET: &str = "sumset-lower-bound";
/// A - comp(A) misses a non-zero residue (checked for k at or above 6).
pub const CLAIM_DIFF_COVER: &str = "difference-cover";
/// A non-covering unit v admits no translate identity
/// v.comp(A) = u - comp(A).
pub const CLAIM_TRANSLATE: &str = "translate-witness";

/// A computed deviation from an expected identity, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    /// Which identity was contradicted (one of the CLAIM_* constants).
    pub claim: &'static str,
    /// The parameter at which it happened.
    pub k: usize,
    /// Human-readable evidence: the offending values.
    pub witness: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FINDING {} k={}: {}", self.claim, self.k, self.witness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_json() {
        let finding = Finding {
            claim: CLAIM_ENERGY_POLY,
            k: 9,
            witness: "energy 1 != formula 2".into(),
        };
        assert_eq!(
            finding.to_string(),
            "FINDING energy-closed-form k=9: energy 1 != formula 2"
        );
        let json = serde_json::to_string(&finding).unwrap();
        assert!(json.starts_with(r#"{"claim":"energy-closed-form","k":9,"#));
    }
}
