//! The one-parameter family A(k) = {0,1} ∪ {3,…,k−1} ∪ {k+2} inside Z_2k:
//! construction, structural identities, the closed-form energy cubic, the
//! energy table, and the k-range scan harness.
//!
//! The family is built so that its complement is the translate A + k; the
//! scan asks, for each unit v, whether `A + v.comp(A)` covers its target,
//! and cross-checks the energy cubic, the divisor-subgroup elimination, and
//! the dichotomy verdict, reporting deviations as findings.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::mann_check;
use crate::dichotomy::{condf_status, is_counterpoint_dichotomy, kemperman_translate_check};
use crate::error::{Error, Result};
use crate::finding::{
    Finding, CLAIM_DIFF_COVER, CLAIM_ENERGY_POLY, CLAIM_MANN_EMPTY, CLAIM_MIN_SUMSET,
    CLAIM_TRANSLATE,
};
use crate::set::ResidueSet;
use crate::stats::additive_energy;

/// Default k values of the energy table (the `table1` command's default).
pub const TABLE1_KS: [usize; 7] = [8, 9, 10, 11, 12, 100, 1000];

/// Least k for which the family is defined (the middle interval is empty
/// there but the three anchor residues 0, 1, k+2 exist and are distinct).
pub const MIN_K: usize = 3;

/// Builds A(k) = {0,1} ∪ {3,…,k−1} ∪ {k+2} as a subset of Z_2k.
pub fn build_family_a(k: usize) -> Result<ResidueSet> {
    if k < MIN_K {
        return Err(Error::KTooSmall { k, min: MIN_K });
    }
    let members = [0, 1, k + 2].into_iter().chain(3..k);
    ResidueSet::from_residues(2 * k, members)
}

/// Exact structural identities of A(k), each reported individually.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralCheck {
    pub k: usize,
    /// |A(k)|, always k.
    pub size: usize,
    /// comp(A) equals the translate A + k.
    pub complement_is_shift: bool,
    /// A + A covers all of Z_2k (holds from k = 6).
    pub sum_is_full: bool,
    pub sum_size: usize,
    /// A − A equals Z_2k minus {k}; the exclusion of k is forced by the
    /// complement identity, so this really asserts the other 2k−1 residues.
    pub diff_is_all_but_k: bool,
    pub diff_size: usize,
}

/// Verifies the construction-level identities of A(k).
pub fn structural_check(k: usize) -> Result<StructuralCheck> {
    let a = build_family_a(k)?;
    let n = 2 * k;
    let sum = a.sumset(&a)?;
    let diff = a.difference_set(&a)?;
    let all_but_k = ResidueSet::singleton(n, k)?.complement();
    Ok(StructuralCheck {
        k,
        size: a.len(),
        complement_is_shift: a.complement() == a.translate(k),
        sum_is_full: sum.is_full(),
        sum_size: sum.len(),
        diff_is_all_but_k: diff == all_but_k,
        diff_size: diff.len(),
    })
}

/// The interpolated cubic (2k³ − 47k)/3 + 80 in exact integer arithmetic.
///
/// 3 divides 2k³ − 47k for every k (check k mod 3), so the division is
/// exact. The value agrees with the computed energy of A(k) from k = 5;
/// below that the set is too degenerate for the interpolation.
pub fn energy_closed_form(k: usize) -> u64 {
    let k = k as i128;
    ((2 * k * k * k - 47 * k) / 3 + 80) as u64
}

/// One row of the energy table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub k: usize,
    /// E(A,A), computed from the representation profile.
    pub energy: u64,
    /// k⁴ / E, the energy lower bound on the sumset size.
    pub energy_bound: f64,
    /// k³ / (2E), the heuristic coverage fraction.
    pub coverage_fraction: f64,
}

/// Computes the energy table for the given k values, in the given order.
pub fn table1(ks: &[usize]) -> Result<Vec<TableRow>> {
    ks.iter()
        .map(|&k| {
            let a = build_family_a(k)?;
            let energy = additive_energy(&a, &a)?;
            let kf = k as f64;
            Ok(TableRow {
                k,
                energy,
                energy_bound: kf.powi(4) / energy as f64,
                coverage_fraction: kf.powi(3) / (2.0 * energy as f64),
            })
        })
        .collect()
}

/// Everything the scan measures for one k, flattened for streaming output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub k: usize,
    /// Whether `A + v.comp(A)` meets its target for every unit v.
    pub condf_overall: bool,
    /// Units whose sumset misses part of its target, ascending.
    pub failing_units: Vec<usize>,
    /// min over units v of |A + v.comp(A)|.
    pub min_sumset_size: usize,
    /// No divisor subgroup eliminates the covering (see [`mann_check`]).
    pub mann_empty: bool,
    /// The set passes the counterpoint-dichotomy test.
    pub dichotomy_verdict: bool,
    /// Number of affine maps carrying A onto its complement.
    pub polarity_count: usize,
    /// E(A,A), exact.
    pub energy: u64,
    /// Whether the energy equals the interpolated cubic.
    pub energy_matches_poly: bool,
}

/// Runs every per-k measurement and collects findings for identities that
/// are expected to hold at this k but do not.
pub fn scan_one(k: usize) -> Result<(ScanRecord, Vec<Finding>)> {
    let a = build_family_a(k)?;
    let n = 2 * k;
    let status = condf_status(&a)?;
    let failing_units: Vec<usize> = status
        .units
        .iter()
        .filter(|r| !r.covers)
        .map(|r| r.v)
        .collect();
    let min_row = status
        .units
        .iter()
        .min_by_key(|r| r.sum_size)
        .expect("even modulus has at least one unit");
    let mann = mann_check(&a)?;
    let verdict = is_counterpoint_dichotomy(&a);
    let energy = additive_energy(&a, &a)?;
    let energy_matches_poly = energy == energy_closed_form(k);

    let mut findings = Vec::new();
    if k >= 8 && !energy_matches_poly {
        findings.push(Finding {
            claim: CLAIM_ENERGY_POLY,
            k,
            witness: format!("energy {} != formula {}", energy, energy_closed_form(k)),
        });
    }
    if k >= 6 {
        if let Some(v) = mann.first() {
            findings.push(Finding {
                claim: CLAIM_MANN_EMPTY,
                k,
                witness: format!(
                    "subgroup of size {} gives sum size {} < required {}",
                    v.subgroup_size, v.sum_size, v.required
                ),
            });
        }
        if min_row.sum_size < 2 * k - 1 {
            findings.push(Finding {
                claim: CLAIM_MIN_SUMSET,
                k,
                witness: format!(
                    "unit {} gives sum size {} < {}",
                    min_row.v,
                    min_row.sum_size,
                    2 * k - 1
                ),
            });
        }
        // the v = -1 row says exactly whether A - comp(A) = Z_2k \ {0}
        let reflected = status.units.last().expect("units end at n-1");
        debug_assert_eq!(reflected.v, n - 1);
        if !reflected.covers {
            findings.push(Finding {
                claim: CLAIM_DIFF_COVER,
                k,
                witness: format!("A - comp(A) misses residue {}", reflected.missing[0]),
            });
        }
    }
    for &v in &failing_units {
        let check = kemperman_translate_check(&a, v);
        if !check.full && check.witness.is_none() {
            findings.push(Finding {
                claim: CLAIM_TRANSLATE,
                k,
                witness: format!("no translate witness for unit {v}"),
            });
        }
    }

    let record = ScanRecord {
        k,
        condf_overall: status.overall,
        failing_units,
        min_sumset_size: min_row.sum_size,
        mann_empty: mann.is_empty(),
        dichotomy_verdict: verdict.verdict,
        polarity_count: verdict.polarity_count,
        energy,
        energy_matches_poly,
    };
    Ok((record, findings))
}

/// Scans an arbitrary list of k values on `jobs` worker threads
/// (`jobs = 0` lets the runtime pick). Records come back sorted by k with
/// findings in the same order, independent of worker count.
pub fn scan_ks(ks: &[usize], jobs: usize) -> Result<(Vec<ScanRecord>, Vec<Finding>)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let mut per_k: Vec<(ScanRecord, Vec<Finding>)> =
        pool.install(|| ks.par_iter().map(|&k| scan_one(k)).collect::<Result<_>>())?;
    per_k.sort_by_key(|(record, _)| record.k);
    let mut records = Vec::with_capacity(per_k.len());
    let mut findings = Vec::new();
    for (record, mut found) in per_k {
        records.push(record);
        findings.append(&mut found);
    }
    Ok((records, findings))
}

/// Sequential scan of the inclusive range `[k_min, k_max]`.
pub fn scan(k_min: usize, k_max: usize) -> Result<(Vec<ScanRecord>, Vec<Finding>)> {
    let ks: Vec<usize> = (k_min..=k_max).collect();
    scan_ks(&ks, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_instances() {
        let a8 = build_family_a(8).unwrap();
        assert_eq!(a8.to_vec(), vec![0, 1, 3, 4, 5, 6, 7, 10]);
        assert_eq!(a8.modulus(), 16);
        let a3 = build_family_a(3).unwrap();
        assert_eq!(a3.to_vec(), vec![0, 1, 5]);
        for k in 3..=200 {
            assert_eq!(build_family_a(k).unwrap().len(), k, "k={k}");
        }
        assert!(matches!(
            build_family_a(2),
            Err(Error::KTooSmall { k: 2, min: 3 })
        ));
    }

    #[test]
    fn structural_identities() {
        for k in 6..=64 {
            let c = structural_check(k).unwrap();
            assert!(
                c.complement_is_shift && c.sum_is_full && c.diff_is_all_but_k,
                "k={k}"
            );
            assert_eq!((c.size, c.sum_size, c.diff_size), (k, 2 * k, 2 * k - 1));
        }
        for k in 3..=5 {
            let c = structural_check(k).unwrap();
            assert!(c.complement_is_shift && !c.sum_is_full, "k={k}");
            assert!(c.diff_is_all_but_k, "k={k}");
        }
    }

    #[test]
    fn closed_form_reference_values() {
        assert_eq!(energy_closed_form(8), 296);
        assert_eq!(energy_closed_form(10), 590);
        assert_eq!(energy_closed_form(1000), 666651080);
    }

    #[test]
    fn closed_form_matches_exact_energy_from_five() {
        for k in 5..=64 {
            let a = build_family_a(k).unwrap();
            assert_eq!(
                additive_energy(&a, &a).unwrap(),
                energy_closed_form(k),
                "k={k}"
            );
        }
        // below the interpolation range the cubic overshoots
        for (k, exact) in [(3usize, 19u64), (4, 44)] {
            let a = build_family_a(k).unwrap();
            assert_eq!(additive_energy(&a, &a).unwrap(), exact);
            assert_ne!(exact, energy_closed_form(k));
        }
    }

    #[test]
    fn energy_stays_under_two_thirds_k_cubed() {
        for k in 6..=128u64 {
            let a = build_family_a(k as usize).unwrap();
            assert!(
                3 * additive_energy(&a, &a).unwrap() <= 2 * k * k * k,
                "k={k}"
            );
        }
    }

    #[test]
    fn table_rows_match_reference_values() {
        let rows = table1(&TABLE1_KS).unwrap();
        let energies: Vec<u64> = rows.iter().map(|r| r.energy).collect();
        assert_eq!(energies, vec![296, 425, 590, 795, 1044, 665180, 666651080]);
        let r8 = &rows[0];
        assert!((r8.energy_bound - 13.84).abs() < 0.005);
        assert!((r8.coverage_fraction - 0.86).abs() < 0.005);
        let r1000 = &rows[6];
        assert!((r1000.energy_bound - 1500.04).abs() < 0.005);
        assert!((r1000.coverage_fraction - 0.750).abs() < 0.005);
    }

    #[test]
    fn scan_record_at_eight() {
        let (record, findings) = scan_one(8).unwrap();
        assert_eq!(
            record,
            ScanRecord {
                k: 8,
                condf_overall: true,
                failing_units: vec![],
                min_sumset_size: 15,
                mann_empty: true,
                dichotomy_verdict: true,
                polarity_count: 1,
                energy: 296,
                energy_matches_poly: true,
            }
        );
        assert!(findings.is_empty());
    }

    #[test]
    fn scan_reports_small_k_failures_without_findings() {
        let (records, findings) = scan(3, 7).unwrap();
        let failing: Vec<&[usize]> = records.iter().map(|r| r.failing_units.as_slice()).collect();
        assert_eq!(failing, vec![&[1][..], &[1], &[1], &[7], &[3, 5]]);
        assert!(records.iter().all(|r| !r.condf_overall));
        // the expected identities are k-gated, so nothing fires down here
        assert!(findings.is_empty());
    }

    #[test]
    fn scan_is_deterministic_across_worker_counts() {
        let ks: Vec<usize> = (3..=40).collect();
        let serial = scan_ks(&ks, 1).unwrap();
        let parallel = scan_ks(&ks, 4).unwrap();
        assert_eq!(serial, parallel);
        let ks_ordered: Vec<usize> = serial.0.iter().map(|r| r.k).collect();
        assert_eq!(ks_ordered, ks);
    }

    #[test]
    fn scan_record_serializes_with_pinned_keys() {
        let (record, _) = scan_one(8).unwrap();
        let json = serde_json::to_string(&record).unwrap();
        assert_eq!(
            json,
            "{\"k\":8,\"condf_overall\":true,\"failing_units\":[],\
             \"min_sumset_size\":15,\"mann_empty\":true,\"dichotomy_verdict\":true,\
             \"polarity_count\":1,\"energy\":296,\"energy_matches_poly\":true}"
        );
    }
}
