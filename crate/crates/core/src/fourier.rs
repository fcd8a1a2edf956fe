//! Discrete Fourier analysis of indicator functions on Z_n.
//!
//! The transform convention is `hat(1_S)(xi) = (1/n) sum_{x in S} e^(-2 pi i xi x / n)`,
//! so the frequency-0 coefficient is the density `|S|/n` and Parseval reads
//! `sum_xi |hat(1_S)(xi)|^2 = |S|/n`. Transforms are computed as direct
//! O(n^2) sums: every modulus in range is exact enough and fast enough, and
//! no power-of-two padding games are worth the obscurity.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::set::ResidueSet;
use crate::stats::rep_function;

/// Largest tolerated deviation from an integer when a representation count
/// is reconstructed from spectra.
pub const RESIDUAL_LIMIT: f64 = 1e-6;

/// The full spectrum of an indicator function on Z_n.
#[derive(Clone, Debug)]
pub struct Spectrum {
    modulus: usize,
    coefficients: Vec<Complex64>,
}

impl Spectrum {
    /// The group order n.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// All n coefficients, indexed by frequency.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// The coefficient at a frequency (reduced mod n).
    pub fn coefficient(&self, xi: usize) -> Complex64 {
        self.coefficients[xi % self.modulus]
    }

    /// Coefficient magnitudes, indexed by frequency.
    pub fn magnitudes(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.norm()).collect()
    }

    /// The energy in the non-zero frequencies, `sum_{xi >= 1} |c_xi|^2`.
    pub fn tail_energy(&self) -> f64 {
        self.coefficients.iter().skip(1).map(|c| c.norm_sqr()).sum()
    }
}

/// Roots-of-unity table `e^(sign * 2 pi i j / n)` for `j in 0..n`.
fn root_table(n: usize, sign: f64) -> Vec<Complex64> {
    (0..n)
        .map(|j| Complex64::from_polar(1.0, sign * 2.0 * PI * j as f64 / n as f64))
        .collect()
}

/// The normalized indicator transform of a set.
pub fn dft_indicator(s: &ResidueSet) -> Spectrum {
    let n = s.modulus();
    let roots = root_table(n, -1.0);
    let scale = 1.0 / n as f64;
    let members = s.to_vec();
    let coefficients = (0..n)
        .map(|xi| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &x in &members {
                acc += roots[xi * x % n];
            }
            acc * scale
        })
        .collect();
    Spectrum {
        modulus: n,
        coefficients,
    }
}

/// Reconstructs the representation count `r_{U+V}(lambda)` from the two
/// spectra via `r(lambda) = n * sum_xi hat(1_U)(xi) hat(1_V)(xi) e^(2 pi i xi lambda / n)`,
/// rounded to the nearest integer.
///
/// A residual above [`RESIDUAL_LIMIT`] (or a negative rounded value) is
/// reported as an error: it means floating-point error swamped the signal.
pub fn rep_via_dft(u: &ResidueSet, v: &ResidueSet, lambda: usize) -> Result<u64> {
    let n = u.modulus();
    if v.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n,
            right: v.modulus(),
        });
    }
    let su = dft_indicator(u);
    let sv = dft_indicator(v);
    let inv_roots = root_table(n, 1.0);
    let lambda = lambda % n;
    let mut acc = Complex64::new(0.0, 0.0);
    for xi in 0..n {
        acc += su.coefficients[xi] * sv.coefficients[xi] * inv_roots[xi * lambda % n];
    }
    acc *= n as f64;
    let rounded = acc.re.round();
    let residual = (acc.re - rounded).abs().max(acc.im.abs());
    if residual > RESIDUAL_LIMIT || rounded < 0.0 {
        return Err(Error::ReconstructionResidual {
            residual,
            limit: RESIDUAL_LIMIT,
        });
    }
    Ok(rounded as u64)
}

/// The deviation `r_{U+V}(lambda) - n/4` of a representation count from its
/// mean, for half-density sets (|U| = |V| = n/2).
pub fn error_term(u: &ResidueSet, v: &ResidueSet, lambda: usize) -> Result<f64> {
    let n = u.modulus();
    if v.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n,
            right: v.modulus(),
        });
    }
    if !n.is_multiple_of(2) {
        return Err(Error::OddModulus(n));
    }
    for s in [u, v] {
        if s.len() != n / 2 {
            return Err(Error::NotHalfDensity {
                len: s.len(),
                modulus: n,
            });
        }
    }
    let r = rep_function(u, v)?;
    Ok(r.count_at(lambda) as f64 - n as f64 / 4.0)
}

/// The spectral bound `n * sum_{xi >= 1} |hat(1_U)(xi)| |hat(1_V)(xi)|`,
/// an upper bound for `|error_term|` at every lambda when both sets have
/// half density.
pub fn error_bound(u: &ResidueSet, v: &ResidueSet) -> Result<f64> {
    let n = u.modulus();
    if v.modulus() != n {
        return Err(Error::ModulusMismatch {
            left: n,
            right: v.modulus(),
        });
    }
    let su = dft_indicator(u);
    let sv = dft_indicator(v);
    let sum: f64 = (1..n)
        .map(|xi| su.coefficients[xi].norm() * sv.coefficients[xi].norm())
        .sum();
    Ok(n as f64 * sum)
}

/// The pointwise geometric-series bound `1/(2k sin(pi xi / 2k)) + 1/k` on
/// `|hat(1_A)(xi)|` for near-interval sets in Z_2k; frequency `xi` is reduced
/// mod 2k and must not vanish (the 0 term is singular).
pub fn vinogradov_bound(xi: usize, k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    let n = 2 * k;
    let xi = xi % n;
    if xi == 0 {
        return Err(Error::SingularFrequency);
    }
    let kf = k as f64;
    Ok(1.0 / (2.0 * kf * (PI * xi as f64 / (2.0 * kf)).sin()) + 1.0 / kf)
}

/// The tail energy `sum_{xi >= 1} |hat(1_S)(xi)|^2`, summed directly from
/// the spectrum; by Parseval it equals `|S|/n - (|S|/n)^2`.
pub fn tail_energy(s: &ResidueSet) -> f64 {
    dft_indicator(s).tail_energy()
}

/// The full tail sum of the squared pointwise bound,
/// `sum_{xi=1}^{2k-1} vinogradov_bound(xi, k)^2`; decreases toward 1/3.
pub fn bound_tail_sum(k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    let mut acc = 0.0;
    for xi in 1..2 * k {
        let b = vinogradov_bound(xi, k)?;
        acc += b * b;
    }
    Ok(acc)
}
