//! Arithmetic in the prime field F_p.
//!
//! Elements are canonical residues in `0..p` stored as bare `u32`s; the
//! modulus lives in the [`Fp`] context rather than in each element.  All
//! products are computed in `u64`, so any prime below 2^16 is safe.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Exclusive upper bound for supported moduli.
pub const MAX_MODULUS: u32 = 1 << 16;

/// Trial-division primality test; adequate for word-sized moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A prime field context.  Copyable and cheap; every arithmetic helper
/// takes canonical residues and returns canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp {
    p: u32,
}

impl Fp {
    /// Field with any prime modulus `2 <= p < 2^16`.  Characteristic 2 is
    /// allowed here because plain polynomial factorization works over F_2;
    /// contexts that need 2 invertible go through [`Fp::new_odd`].
    pub fn new(p: u32) -> Result<Self> {
        if u64::from(p) >= u64::from(MAX_MODULUS) {
            return Err(Error::ModulusTooLarge(u64::from(p)));
        }
        if !is_prime(u64::from(p)) {
            return Err(Error::NotPrime(u64::from(p)));
        }
        Ok(Fp { p })
    }

    /// Field with an odd prime modulus (2 must be invertible).
    pub fn new_odd(p: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenModulus(2));
        }
        Self::new(p)
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    /// Canonicalize a signed integer into `0..p`.
    #[inline]
    pub fn elem(self, n: i64) -> u32 {
        let p = i64::from(self.p);
        (((n % p) + p) % p) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p, "operands must be canonical residues");
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p, "operands must be canonical residues");
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        debug_assert!(a < self.p, "operand must be a canonical residue");
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p, "operands must be canonical residues");
        ((u64::from(a) * u64::from(b)) % u64::from(self.p)) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        debug_assert!(a < self.p, "operand must be a canonical residue");
        if a == 0 {
            return Err(Error::NoInverse { value: a, modulus: self.p });
        }
        // Invariants: old_r = old_s * a (mod p), r = s * a (mod p).
        let (mut old_r, mut r) = (i64::from(a), i64::from(self.p));
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1, "gcd(a, p) must be 1 for prime p and a != 0");
        Ok(self.elem(old_s))
    }

    /// The residue 2^{-1}; only meaningful for odd p.
    pub fn half(self) -> Result<u32> {
        self.inv(self.elem(2))
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(self, a: u32, mut e: u128) -> u32 {
        debug_assert!(a < self.p, "operand must be a canonical residue");
        let mut base = a;
        let mut acc = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Dot product of two coordinate vectors of equal length.
    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        assert_eq!(a.len(), b.len(), "dot product needs vectors of equal length");
        let mut acc = 0u32;
        for (&x, &y) in a.iter().zip(b) {
            acc = self.add(acc, self.mul(x, y));
        }
        acc
    }
}

/// A validated parameter triple for the coefficient ring and code length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub p: u32,
    pub k: usize,
    pub m: usize,
}

/// Validate `(p, k, m)` for work over R = F_p[u]/(u^{k+1} - u).
///
/// Rejections carry distinct diagnostics: even p (2 must be invertible),
/// composite p, out-of-range p, k = 0, and m = 0.
pub fn validate_params(p: u64, k: u64, m: u64) -> Result<Params> {
    if p == 2 {
        return Err(Error::EvenModulus(2));
    }
    if p >= u64::from(MAX_MODULUS) {
        return Err(Error::ModulusTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    if m == 0 {
        return Err(Error::InvalidLength(0));
    }
    Ok(Params { p: p as u32, k: k as usize, m: m as usize })
}
