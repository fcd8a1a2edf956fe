//! Dense subsets of the cyclic group Z_n.
//!
//! A [`ResidueSet`] stores its modulus together with a bit table over the
//! residues `0..n`, so membership is O(1) and sumsets reduce to word-parallel
//! shift-or passes. Values are immutable once built; every operation returns
//! a fresh set.

use crate::arith::gcd;
use crate::error::{Error, Result};

/// Largest supported modulus; keeps `a * b` for residues inside `usize`.
pub const MAX_MODULUS: usize = 1 << 31;

/// A subset of Z_n backed by a bit table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

fn check_modulus(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidModulus(n));
    }
    if n > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(n));
    }
    Ok(())
}

impl ResidueSet {
    /// The empty subset of Z_n.
    pub fn empty(n: usize) -> Result<Self> {
        check_modulus(n)?;
        Ok(Self {
            modulus: n,
            words: vec![0; word_count(n)],
        })
    }

    /// The full group Z_n as a subset of itself.
    pub fn full(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for w in &mut s.words {
            *w = !0;
        }
        s.mask_top();
        Ok(s)
    }

    /// The singleton `{x mod n}`.
    pub fn singleton(n: usize, x: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        s.insert(x % n);
        Ok(s)
    }

    /// Builds a set from residues, each reduced mod n.
    pub fn from_residues<I: IntoIterator<Item = usize>>(n: usize, residues: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for x in residues {
            s.insert(x % n);
        }
        Ok(s)
    }

    /// Parses a set literal: comma-separated items, each either an integer or
    /// an inclusive integer range `a-b` (`a <= b`); every listed integer is
    /// reduced mod n. The empty literal denotes the empty set.
    ///
    /// `"0,1,3-7,10"` with modulus 16 is `{0,1,3,4,5,6,7,10}`; `"17"` with
    /// modulus 12 is `{5}`.
    pub fn parse(literal: &str, n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        let malformed = |reason: String| Error::MalformedSetLiteral {
            literal: literal.to_string(),
            reason,
        };
        let body = literal.trim();
        if body.is_empty() {
            return Ok(s);
        }
        for item in body.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err(malformed("empty item".to_string()));
            }
            let parse_int = |txt: &str| -> Result<usize> {
                txt.parse::<usize>()
                    .map_err(|e| malformed(format!("invalid integer {txt:?}: {e}")))
            };
            match item.split_once('-') {
                Some((lo, hi)) => {
                    let lo = parse_int(lo.trim())?;
                    let hi = parse_int(hi.trim())?;
                    if lo > hi {
                        return Err(malformed(format!("descending range {lo}-{hi}")));
                    }
                    if hi - lo + 1 >= n {
                        // The range visits every residue class.
                        return Self::full(n);
                    }
                    for x in lo..=hi {
                        s.insert(x % n);
                    }
                }
                None => s.insert(parse_int(item)? % n),
            }
        }
        Ok(s)
    }

    /// Canonical literal: ascending residues, maximal runs collapsed to `a-b`.
    /// Inverse of [`ResidueSet::parse`] for canonical input.
    pub fn to_literal(&self) -> String {
        let mut out = String::new();
        let mut members = self.iter().peekable();
        while let Some(start) = members.next() {
            let mut end = start;
            while members.peek() == Some(&(end + 1)) {
                end = members.next().unwrap();
            }
            if !out.is_empty() {
                out.push(',');
            }
            if end == start {
                out.push_str(&start.to_string());
            } else {
                out.push_str(&format!("{start}-{end}"));
            }
        }
        out
    }

    /// The group order n.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether the set has no members.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Whether the set is all of Z_n.
    pub fn is_full(&self) -> bool {
        self.len() == self.modulus
    }

    /// Membership test; `x` is reduced mod n.
    pub fn contains(&self, x: usize) -> bool {
        let x = x % self.modulus;
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Members<'_> {
        Members {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Members collected in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Complement within Z_n.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.mask_top();
        out
    }

    /// Union of two subsets of the same group.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        Ok(out)
    }

    /// Intersection of two subsets of the same group.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        Ok(out)
    }

    /// The translate `S + u`.
    pub fn translate(&self, u: usize) -> Self {
        let mut out = Self {
            modulus: self.modulus,
            words: vec![0; self.words.len()],
        };
        self.or_rotated_into(&mut out.words, u % self.modulus);
        out.mask_top();
        out
    }

    /// The dilate `x . S = {x * s : s in S}`; `x` need not be a unit
    /// (`0 . S = {0}` for non-empty S).
    pub fn dilate(&self, x: usize) -> Self {
        let n = self.modulus;
        let x = x % n;
        let mut out = Self {
            modulus: n,
            words: vec![0; self.words.len()],
        };
        for s in self.iter() {
            out.insert(s * x % n);
        }
        out
    }

    /// The reflection `-S`.
    pub fn negate(&self) -> Self {
        self.dilate(self.modulus - 1)
    }

    /// The sumset `S + T = {s + t}`; word-parallel over the smaller operand.
    pub fn sumset(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self {
            modulus: self.modulus,
            words: vec![0; self.words.len()],
        };
        for s in small.iter() {
            large.or_rotated_into(&mut out.words, s);
        }
        out.mask_top();
        Ok(out)
    }

    /// The difference set `S - T = S + (-T)`.
    pub fn difference_set(&self, other: &Self) -> Result<Self> {
        self.sumset(&other.negate())
    }

    /// The cyclic subgroup generated by `d`: residues of `gcd(d, n) * Z`,
    /// of order `n / gcd(d, n)`.
    pub fn subgroup(n: usize, d: usize) -> Result<Self> {
        check_modulus(n)?;
        let mut g = gcd(d % n, n);
        if g == 0 {
            g = n; // d = 0 generates the trivial subgroup
        }
        let mut s = Self::empty(n)?;
        let mut x = 0;
        loop {
            s.insert(x);
            x += g;
            if x >= n {
                break;
            }
        }
        Ok(s)
    }

    /// The smallest coset containing the set: a representative `c` (the least
    /// member) and the unique minimal subgroup H with `S` inside `c + H`.
    pub fn smallest_coset(&self) -> Result<(usize, Self)> {
        let rep = self
            .iter()
            .next()
            .ok_or(Error::EmptyOperand("smallest_coset operand"))?;
        let mut g = self.modulus;
        for s in self.iter() {
            g = gcd(g, s - rep);
        }
        Ok((rep, Self::subgroup(self.modulus, g)?))
    }

    /// The period (stabilizer) subgroup `{h : S + h = S}`. The empty set and
    /// the full group are stabilized by everything.
    pub fn period(&self) -> Self {
        let n = self.modulus;
        let mut out = Self {
            modulus: n,
            words: vec![0; self.words.len()],
        };
        let mut scratch = vec![0u64; self.words.len()];
        for h in 0..n {
            scratch.iter_mut().for_each(|w| *w = 0);
            self.or_rotated_into(&mut scratch, h);
            mask_top_words(&mut scratch, n);
            if scratch == self.words {
                out.insert(h);
            }
        }
        out
    }

    /// Whether `S + h = S` for every h in `H` would keep S unchanged, i.e. the
    /// set is aperiodic when its period is the trivial subgroup.
    pub fn is_aperiodic(&self) -> bool {
        let p = self.period();
        p.len() == 1 && p.contains(0)
    }

    fn check_same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    fn insert(&mut self, x: usize) {
        debug_assert!(x < self.modulus);
        self.words[x / 64] |= 1u64 << (x % 64);
    }

    fn mask_top(&mut self) {
        mask_top_words(&mut self.words, self.modulus);
    }

    /// ORs the cyclic rotation `self + shift` into `dst` (no final masking;
    /// the caller masks once after accumulating).
    fn or_rotated_into(&self, dst: &mut [u64], shift: usize) {
        let n = self.modulus;
        let s = shift % n;
        if s == 0 {
            for (d, w) in dst.iter_mut().zip(&self.words) {
                *d |= w;
            }
            return;
        }
        // rotation = (self << s) | (self >> (n - s)), truncated to n bits
        or_shifted_left(dst, &self.words, s);
        or_shifted_right(dst, &self.words, n - s);
    }
}

fn mask_top_words(words: &mut [u64], n: usize) {
    let r = n % 64;
    if r != 0 {
        if let Some(top) = words.last_mut() {
            *top &= (1u64 << r) - 1;
        }
    }
}

/// `dst |= src << s` at word level (bits shifted past the top word are
/// discarded; a later mask trims bits at and above n).
fn or_shifted_left(dst: &mut [u64], src: &[u64], s: usize) {
    let ws = s / 64;
    let bs = s % 64;
    if bs == 0 {
        for j in ws..dst.len() {
            dst[j] |= src[j - ws];
        }
    } else {
        for j in ws..dst.len() {
            let mut w = src[j - ws] << bs;
            if j > ws {
                w |= src[j - ws - 1] >> (64 - bs);
            }
            dst[j] |= w;
        }
    }
}

/// `dst |= src >> t` at word level.
fn or_shifted_right(dst: &mut [u64], src: &[u64], t: usize) {
    let ws = t / 64;
    let bs = t % 64;
    if bs == 0 {
        for j in 0..dst.len() - ws {
            dst[j] |= src[j + ws];
        }
    } else {
        for j in 0..dst.len() - ws {
            let mut w = src[j + ws] >> bs;
            if j + ws + 1 < src.len() {
                w |= src[j + ws + 1] << (64 - bs);
            }
            dst[j] |= w;
        }
    }
}

/// Ascending iterator over the members of a [`ResidueSet`].
pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * 64 + bit)
    }
}

/// The units of Z_n in ascending order (`units(1) = [0]`, as 0 is the
/// identity of the one-element group).
pub fn units(n: usize) -> Result<Vec<usize>> {
    check_modulus(n)?;
    Ok((0..n).filter(|&v| gcd(v, n) == 1).collect())
}

impl std::fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl std::fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ResidueSet(mod {}: {{{}}})",
            self.modulus,
            self.to_literal()
        )
    }
}
