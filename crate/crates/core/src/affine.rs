//! Invertible affine maps `x -> v*x + u` on Z_n, written `e^u.v`.
//!
//! The multiplier v must be a unit of Z_n, so every map permutes the group;
//! composition and inversion stay inside the family.

use crate::arith::{gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::set::ResidueSet;

/// An invertible affine self-map of Z_n: `x -> multiplier * x + shift`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineMap {
    modulus: usize,
    shift: usize,
    multiplier: usize,
}

impl AffineMap {
    /// Builds `e^u.v : x -> v*x + u` on Z_n; `u` and `v` are reduced mod n
    /// and `v` must be a unit.
    pub fn new(n: usize, u: usize, v: usize) -> Result<Self> {
        // Reuse the modulus validation of the set type.
        ResidueSet::empty(n)?;
        let v = v % n;
        if gcd(v, n) != 1 {
            return Err(Error::NotAUnit {
                value: v,
                modulus: n,
            });
        }
        Ok(Self {
            modulus: n,
            shift: u % n,
            multiplier: v,
        })
    }

    /// The identity `e^0.1`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 1)
    }

    /// The group order n.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The translation part u of `e^u.v`.
    pub fn shift(&self) -> usize {
        self.shift
    }

    /// The multiplier part v of `e^u.v`.
    pub fn multiplier(&self) -> usize {
        self.multiplier
    }

    /// Applies the map to a residue.
    pub fn apply(&self, x: usize) -> usize {
        (self.multiplier * (x % self.modulus) + self.shift) % self.modulus
    }

    /// The image `{v*s + u : s in S}` of a set under the map.
    pub fn image(&self, s: &ResidueSet) -> Result<ResidueSet> {
        if s.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: s.modulus(),
            });
        }
        Ok(s.dilate(self.multiplier).translate(self.shift))
    }

    /// Composition `self . inner` (apply `inner` first):
    /// `e^u1.v1 . e^u2.v2 = e^(v1*u2 + u1).(v1*v2)`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.modulus != inner.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: inner.modulus,
            });
        }
        let n = self.modulus;
        Ok(Self {
            modulus: n,
            shift: (self.multiplier * inner.shift + self.shift) % n,
            multiplier: self.multiplier * inner.multiplier % n,
        })
    }

    /// The inverse map `e^(-v^-1 * u).(v^-1)`.
    pub fn inverse(&self) -> Self {
        let n = self.modulus;
        let w = mod_inverse(self.multiplier, n).expect("multiplier is a unit by construction");
        let shift = (n - w * self.shift % n) % n;
        Self {
            modulus: n,
            shift,
            multiplier: w,
        }
    }

    /// Whether the map is the identity of Z_n.
    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.multiplier == 1 % self.modulus
    }
}

impl std::fmt::Display for AffineMap {
    /// Canonical form `e^{u}.{v}` with both parts as residues in `[0, n)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e^{}.{}", self.shift, self.multiplier)
    }
}

impl serde::Serialize for AffineMap {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_units() {
        assert!(matches!(
            AffineMap::new(12, 0, 4),
            Err(Error::NotAUnit {
                value: 4,
                modulus: 12
            })
        ));
        assert!(AffineMap::new(12, 3, 5).is_ok());
        assert!(AffineMap::new(0, 0, 1).is_err());
    }

    #[test]
    fn identity_and_display() {
        let id = AffineMap::identity(8).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "e^0.1");
        let g = AffineMap::new(12, 2, 5).unwrap();
        assert_eq!(g.to_string(), "e^2.5");
        // negative multipliers are always displayed as reduced residues
        let h = AffineMap::new(6, 1, 5).unwrap();
        assert_eq!(h.to_string(), "e^1.5");
        assert_eq!(serde_json::to_string(&h).unwrap(), "\"e^1.5\"");
    }

    #[test]
    fn apply_and_image() {
        let g = AffineMap::new(12, 2, 5).unwrap();
        assert_eq!(g.apply(0), 2);
        assert_eq!(g.apply(3), 5);
        let k = ResidueSet::parse("0,3,4,7-9", 12).unwrap();
        assert_eq!(g.image(&k).unwrap(), k.complement());
        assert!(g.image(&ResidueSet::full(6).unwrap()).is_err());
    }

    #[test]
    fn composition_law() {
        let n = 16;
        for (u1, v1, u2, v2) in [(3, 5, 7, 3), (0, 15, 4, 9), (11, 7, 2, 11)] {
            let g1 = AffineMap::new(n, u1, v1).unwrap();
            let g2 = AffineMap::new(n, u2, v2).unwrap();
            let c = g1.compose(&g2).unwrap();
            assert_eq!(c.shift(), (v1 * u2 + u1) % n);
            assert_eq!(c.multiplier(), v1 * v2 % n);
            for x in 0..n {
                assert_eq!(c.apply(x), g1.apply(g2.apply(x)));
            }
        }
    }

    #[test]
    fn inverse_round_trips() {
        for n in [1usize, 2, 5, 12, 16] {
            for v in crate::set::units(n).unwrap() {
                for u in 0..n {
                    let g = AffineMap::new(n, u, v).unwrap();
                    assert!(g.compose(&g.inverse()).unwrap().is_identity());
                    assert!(g.inverse().compose(&g).unwrap().is_identity());
                }
            }
        }
    }

    #[test]
    fn one_element_group_edge() {
        // In Z_1 the only residue is 0 and e^0.0 is the identity.
        let g = AffineMap::new(1, 0, 0).unwrap();
        assert!(g.is_identity());
        assert_eq!(g.apply(0), 0);
    }
}
