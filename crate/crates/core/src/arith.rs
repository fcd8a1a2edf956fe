//! Small modular-arithmetic helpers used across the crate.

/// Greatest common divisor (Euclid); `gcd(0, n) = n`.
pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative inverse of `v` modulo `n`, when `gcd(v, n) = 1`.
///
/// Returns `None` for non-units. For `n = 1` every residue inverts to 0.
pub(crate) fn mod_inverse(v: usize, n: usize) -> Option<usize> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i128, (v % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as usize)
}

/// Divisors of `n` in ascending order.
pub(crate) fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(1, 1), 1);
    }

    #[test]
    fn inverse_round_trips() {
        for n in 1..60usize {
            for v in 0..n {
                match mod_inverse(v, n) {
                    Some(w) => assert_eq!((v * w) % n, 1 % n, "v={v} n={n}"),
                    None => assert_ne!(gcd(v, n), 1, "v={v} n={n}"),
                }
            }
        }
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
    }
}
