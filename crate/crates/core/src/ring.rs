//! The coefficient ring R = F_p[u]/(u^{k+1} - u).
//!
//! Elements are written a_0 + a_1 u + ... + a_k u^k and stored as exactly
//! k+1 canonical residues.  The defining relation u^{k+1} = u reduces any
//! exponent e >= k+1 to ((e - 1) mod k) + 1, while u^0 stays 1.
//!
//! The ring carries the unit lambda = 1 - 2u^k (a square root of 1) and the
//! three elements
//!
//! ```text
//! sigma_1 = 1 - u^k
//! sigma_2 = (u^{k-1} + u^k) / 2
//! sigma_3 = (-u^{k-1} + u^k) / 2
//! ```
//!
//! which sum to 1 for every k and are orthogonal idempotents exactly when
//! k = 2.  [`RingCtx::idempotent_report`] measures all of those identities
//! and records verdicts instead of assuming them.

use crate::error::{Error, Result};
use crate::field::Fp;
use std::fmt;

/// Context for R = F_p[u]/(u^{k+1} - u): an odd prime p and k >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingCtx {
    fp: Fp,
    k: u32,
}

/// An element of R with exactly k+1 coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    ctx: RingCtx,
    c: Vec<u32>,
}

impl RingCtx {
    pub fn new(p: u32, k: usize) -> Result<Self> {
        let fp = Fp::new_odd(p)?;
        if k == 0 {
            return Err(Error::InvalidK(0));
        }
        if k > 64 {
            // Exponent arithmetic stays comfortably in usize; anything this
            // large is outside the desk scale the crate targets anyway.
            return Err(Error::InvalidK(k as u64));
        }
        Ok(RingCtx { fp, k: k as u32 })
    }

    #[inline]
    pub fn fp(self) -> Fp {
        self.fp
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.fp.modulus()
    }

    #[inline]
    pub fn k(self) -> usize {
        self.k as usize
    }

    /// Number of stored coefficients, k + 1.
    #[inline]
    pub fn width(self) -> usize {
        self.k as usize + 1
    }

    /// Reduce an exponent by u^{k+1} = u.  Exponent 0 is untouched.
    pub fn reduce_exponent(self, e: usize) -> usize {
        let k = self.k as usize;
        if e <= k {
            e
        } else {
            ((e - 1) % k) + 1
        }
    }

    pub fn zero(self) -> RingElem {
        RingElem { ctx: self, c: vec![0; self.width()] }
    }

    pub fn one(self) -> RingElem {
        let mut c = vec![0; self.width()];
        c[0] = 1;
        RingElem { ctx: self, c }
    }

    /// u^e, with the exponent reduced.
    pub fn monomial(self, e: usize) -> RingElem {
        let mut c = vec![0; self.width()];
        c[self.reduce_exponent(e)] = 1;
        RingElem { ctx: self, c }
    }

    /// Element from signed coefficients (constant term first); the slice
    /// must hold exactly k+1 entries.
    pub fn from_signed(self, coeffs: &[i64]) -> RingElem {
        assert_eq!(coeffs.len(), self.width(), "an element of R has exactly k+1 coefficients");
        RingElem { ctx: self, c: coeffs.iter().map(|&n| self.fp.elem(n)).collect() }
    }

    /// Element from canonical residues; the vector must hold exactly k+1
    /// entries, each already reduced mod p.
    pub fn from_coeffs(self, coeffs: Vec<u32>) -> RingElem {
        assert_eq!(coeffs.len(), self.width(), "an element of R has exactly k+1 coefficients");
        assert!(coeffs.iter().all(|&x| x < self.p()), "coefficients must be canonical residues");
        RingElem { ctx: self, c: coeffs }
    }

    /// Embed an F_p residue as a constant.
    pub fn constant(self, c: u32) -> RingElem {
        let mut v = vec![0; self.width()];
        v[0] = c % self.p();
        RingElem { ctx: self, c: v }
    }

    /// The unit lambda = 1 - 2u^k.  Its square is 1 for every k.
    pub fn lambda(self) -> RingElem {
        let fp = self.fp;
        let mut c = vec![0; self.width()];
        c[0] = 1;
        c[self.k as usize] = fp.neg(fp.elem(2));
        RingElem { ctx: self, c }
    }

    /// sigma_1 = 1 - u^k, sigma_2 = (u^{k-1} + u^k)/2,
    /// sigma_3 = (-u^{k-1} + u^k)/2.
    ///
    /// For k = 1 the formulas for sigma_2 and sigma_3 would fold u^{k-1}
    /// into the constant term, which is a different element entirely; the
    /// request is rejected rather than silently reinterpreted.
    pub fn sigma(self, i: u8) -> Result<RingElem> {
        assert!((1..=3).contains(&i), "sigma index must be 1, 2, or 3");
        let fp = self.fp;
        let k = self.k as usize;
        if i >= 2 && k < 2 {
            return Err(Error::SigmaUndefined { i, k: self.k });
        }
        let mut c = vec![0; self.width()];
        match i {
            1 => {
                c[0] = 1;
                c[k] = fp.neg(1);
            }
            2 => {
                let h = fp.half()?;
                c[k - 1] = h;
                c[k] = h;
            }
            3 => {
                let h = fp.half()?;
                c[k - 1] = fp.neg(h);
                c[k] = h;
            }
            _ => unreachable!(),
        }
        Ok(RingElem { ctx: self, c })
    }

    /// Substitute u -> c.  Only legal when c^{k+1} = c, i.e. when the
    /// substitution respects the defining relation and is a ring
    /// homomorphism R -> F_p.
    pub fn eval(self, x: &RingElem, c: u32) -> Result<u32> {
        assert_eq!(x.ctx, self, "element evaluated in a foreign context");
        let fp = self.fp;
        let c = c % self.p();
        if fp.pow(c, self.k as u128 + 1) != c {
            return Err(Error::EvalNotHomomorphism { c, k: self.k });
        }
        // Horner evaluation, highest coefficient first.
        let mut acc = 0u32;
        for &coef in x.c.iter().rev() {
            acc = fp.add(fp.mul(acc, c), coef);
        }
        Ok(acc)
    }

    /// Total number of ring elements p^{k+1}, if it fits a u64.
    pub fn element_count(self) -> Option<u64> {
        let mut n = 1u64;
        for _ in 0..self.width() {
            n = n.checked_mul(u64::from(self.p()))?;
        }
        Some(n)
    }

    /// The `idx`-th ring element in the canonical order where the constant
    /// coefficient varies fastest.  Inverse of [`RingElem::index`].
    pub fn elem_from_index(self, mut idx: u64) -> RingElem {
        let p = u64::from(self.p());
        let mut c = vec![0u32; self.width()];
        for slot in c.iter_mut() {
            *slot = (idx % p) as u32;
            idx /= p;
        }
        RingElem { ctx: self, c }
    }

    /// Measure every sigma/lambda identity and record the verdicts.
    ///
    /// Never fails on a mathematical ground: identities that do not hold
    /// for this k are reported as such, with the offending products kept so
    /// callers can inspect the residual values.
    pub fn idempotent_report(self) -> Result<IdempotentReport> {
        let s = [self.sigma(1)?, self.sigma(2)?, self.sigma(3)?];
        let lam = self.lambda();

        let sum = s[0].add(&s[1]).add(&s[2]);
        let squares: Vec<RingElem> = s.iter().map(|x| x.mul(x)).collect();
        let square_is_idempotent =
            [squares[0] == s[0], squares[1] == s[1], squares[2] == s[2]];

        let product_pairs = [(1u8, 2u8), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)];
        let mut pairwise = Vec::with_capacity(6);
        let mut pairwise_is_zero = [false; 6];
        for (t, &(i, j)) in product_pairs.iter().enumerate() {
            let prod = s[usize::from(i) - 1].mul(&s[usize::from(j) - 1]);
            pairwise_is_zero[t] = prod.is_zero();
            pairwise.push(prod);
        }

        let lambda_products: Vec<RingElem> = s.iter().map(|x| lam.mul(x)).collect();
        // Expected: lambda sigma_1 = sigma_1, lambda sigma_2 = -sigma_2,
        // lambda sigma_3 = -sigma_3.
        let lambda_product_expected = [
            lambda_products[0] == s[0],
            lambda_products[1] == s[1].neg(),
            lambda_products[2] == s[2].neg(),
        ];

        Ok(IdempotentReport {
            p: self.p(),
            k: self.k(),
            sum,
            sum_is_one: {
                let mut one = vec![0; self.width()];
                one[0] = 1;
                s[0].add(&s[1]).add(&s[2]).c == one
            },
            squares: squares.try_into().expect("three squares"),
            square_is_idempotent,
            product_pairs,
            pairwise: pairwise.try_into().expect("six products"),
            pairwise_is_zero,
            lambda_products: lambda_products.try_into().expect("three products"),
            lambda_product_expected,
            lambda_squared_is_one: lam.mul(&lam) == self.one(),
        })
    }
}

impl RingElem {
    #[inline]
    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    /// Coefficients, constant term first; always k+1 entries.
    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.c
    }

    /// Coefficient of u^e for 0 <= e <= k.
    #[inline]
    pub fn coeff(&self, e: usize) -> u32 {
        self.c[e]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    fn assert_same(&self, other: &RingElem) {
        assert_eq!(self.ctx, other.ctx, "mixed ring contexts (different p or k)");
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        self.assert_same(other);
        let fp = self.ctx.fp;
        let c = self.c.iter().zip(&other.c).map(|(&a, &b)| fp.add(a, b)).collect();
        RingElem { ctx: self.ctx, c }
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        self.assert_same(other);
        let fp = self.ctx.fp;
        let c = self.c.iter().zip(&other.c).map(|(&a, &b)| fp.sub(a, b)).collect();
        RingElem { ctx: self.ctx, c }
    }

    pub fn neg(&self) -> RingElem {
        let fp = self.ctx.fp;
        RingElem { ctx: self.ctx, c: self.c.iter().map(|&a| fp.neg(a)).collect() }
    }

    /// Multiply by an F_p scalar.
    pub fn scale(&self, s: u32) -> RingElem {
        let fp = self.ctx.fp;
        RingElem { ctx: self.ctx, c: self.c.iter().map(|&a| fp.mul(a, s)).collect() }
    }

    /// Product in R: coefficient convolution followed by exponent reduction
    /// via u^{k+1} = u.
    pub fn mul(&self, other: &RingElem) -> RingElem {
        self.assert_same(other);
        let ctx = self.ctx;
        let fp = ctx.fp;
        let mut c = vec![0u32; ctx.width()];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let e = ctx.reduce_exponent(i + j);
                c[e] = fp.add(c[e], fp.mul(a, b));
            }
        }
        RingElem { ctx, c }
    }

    pub fn pow(&self, mut e: u64) -> RingElem {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Index of this element in the canonical enumeration order (constant
    /// coefficient fastest).
    pub fn index(&self) -> u64 {
        let p = u64::from(self.ctx.p());
        let mut idx = 0u64;
        for &coef in self.c.iter().rev() {
            idx = idx * p + u64::from(coef);
        }
        idx
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &coef) in self.c.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{coef}")?,
                1 if coef == 1 => write!(f, "u")?,
                1 => write!(f, "{coef}u")?,
                _ if coef == 1 => write!(f, "u^{e}")?,
                _ => write!(f, "{coef}u^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Everything [`RingCtx::idempotent_report`] measures about the sigma
/// elements and the unit lambda, values and verdicts side by side.
#[derive(Debug, Clone)]
pub struct IdempotentReport {
    pub p: u32,
    pub k: usize,
    /// sigma_1 + sigma_2 + sigma_3.
    pub sum: RingElem,
    pub sum_is_one: bool,
    /// sigma_i^2 for i = 1, 2, 3.
    pub squares: [RingElem; 3],
    pub square_is_idempotent: [bool; 3],
    /// Index labels for `pairwise`: the ordered pairs (i, j), i != j.
    pub product_pairs: [(u8, u8); 6],
    /// sigma_i sigma_j for the six ordered pairs.
    pub pairwise: [RingElem; 6],
    pub pairwise_is_zero: [bool; 6],
    /// lambda sigma_i for i = 1, 2, 3.
    pub lambda_products: [RingElem; 3],
    /// Whether lambda sigma_1 = sigma_1, lambda sigma_2 = -sigma_2,
    /// lambda sigma_3 = -sigma_3.
    pub lambda_product_expected: [bool; 3],
    pub lambda_squared_is_one: bool,
}

impl IdempotentReport {
    /// True when every identity needed for the sigma-decomposition holds
    /// (this is exactly the k = 2 situation).
    pub fn all_hold(&self) -> bool {
        self.sum_is_one
            && self.lambda_squared_is_one
            && self.square_is_idempotent.iter().all(|&b| b)
            && self.pairwise_is_zero.iter().all(|&b| b)
            && self.lambda_product_expected.iter().all(|&b| b)
    }
}

impl fmt::Display for IdempotentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAILS" };
        writeln!(f, "ring R = F_{}[u]/(u^{} - u)", self.p, self.k + 1)?;
        writeln!(f, "  lambda^2 = 1                 {}", mark(self.lambda_squared_is_one))?;
        writeln!(f, "  sigma_1 + sigma_2 + sigma_3 = {}   {}", self.sum, mark(self.sum_is_one))?;
        for i in 0..3 {
            writeln!(
                f,
                "  sigma_{}^2 = {}   {}",
                i + 1,
                self.squares[i],
                mark(self.square_is_idempotent[i])
            )?;
        }
        for (t, &(i, j)) in self.product_pairs.iter().enumerate() {
            writeln!(
                f,
                "  sigma_{i} sigma_{j} = {}   {}",
                self.pairwise[t],
                mark(self.pairwise_is_zero[t])
            )?;
        }
        let expect = ["sigma_1", "-sigma_2", "-sigma_3"];
        for i in 0..3 {
            writeln!(
                f,
                "  lambda sigma_{} = {}   (expect {})   {}",
                i + 1,
                self.lambda_products[i],
                expect[i],
                mark(self.lambda_product_expected[i])
            )?;
        }
        Ok(())
    }
}
