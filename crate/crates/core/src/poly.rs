//! Polynomials over F_p and over R.
//!
//! [`PolyFp`] is a dense univariate polynomial over a prime field with
//! division, extended GCD, complete factorization into monic irreducibles,
//! divisor enumeration, and reciprocals.  [`PolyR`] carries polynomials with
//! coefficients in R = F_p[u]/(u^{k+1} - u), enough to work inside
//! R[a]/(a^m - unit) and to apply the substitution a -> lambda a.
//!
//! Coefficients are stored ascending with no trailing zeros; the zero
//! polynomial has an empty coefficient vector and `degree() == None` (a
//! "minus infinity" degree, which keeps degree formulas out of -1
//! arithmetic).

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::ring::{RingCtx, RingElem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Hard ceiling on how many divisors [`PolyFp::divisors`] will enumerate.
const DIVISOR_CAP: u64 = 1_000_000;

/// A polynomial over F_p, coefficients ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    fp: Fp,
    c: Vec<u32>,
}

impl PolyFp {
    /// Build from canonical residues (ascending); trailing zeros are trimmed.
    pub fn new(fp: Fp, mut coeffs: Vec<u32>) -> PolyFp {
        assert!(
            coeffs.iter().all(|&x| x < fp.modulus()),
            "coefficients must be canonical residues"
        );
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { fp, c: coeffs }
    }

    /// Build from signed integers (ascending), reducing mod p.
    pub fn from_signed(fp: Fp, coeffs: &[i64]) -> PolyFp {
        PolyFp::new(fp, coeffs.iter().map(|&n| fp.elem(n)).collect())
    }

    pub fn zero(fp: Fp) -> PolyFp {
        PolyFp { fp, c: Vec::new() }
    }

    pub fn one(fp: Fp) -> PolyFp {
        PolyFp::constant(fp, 1)
    }

    pub fn constant(fp: Fp, c: u32) -> PolyFp {
        PolyFp::new(fp, vec![c % fp.modulus()])
    }

    /// The monomial a^e.
    pub fn monomial(fp: Fp, e: usize) -> PolyFp {
        let mut c = vec![0; e + 1];
        c[e] = 1;
        PolyFp { fp, c }
    }

    /// a^m - c with c given as a signed integer (so -1 builds a^m + |c'|).
    pub fn binomial(fp: Fp, m: usize, c: i64) -> PolyFp {
        let mut v = vec![0; m + 1];
        v[0] = fp.elem(-c);
        v[m] = 1;
        PolyFp::new(fp, v)
    }

    #[inline]
    pub fn fp(&self) -> Fp {
        self.fp
    }

    /// None for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Coefficient of a^i (0 beyond the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> u32 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.c
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn leading(&self) -> u32 {
        *self.c.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn is_monic(&self) -> bool {
        self.c.last() == Some(&1)
    }

    /// Scale to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> PolyFp {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.fp.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn add(&self, other: &PolyFp) -> PolyFp {
        self.assert_same(other);
        let fp = self.fp;
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| fp.add(self.coeff(i), other.coeff(i))).collect();
        PolyFp::new(fp, c)
    }

    pub fn sub(&self, other: &PolyFp) -> PolyFp {
        self.assert_same(other);
        let fp = self.fp;
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| fp.sub(self.coeff(i), other.coeff(i))).collect();
        PolyFp::new(fp, c)
    }

    pub fn neg(&self) -> PolyFp {
        let fp = self.fp;
        PolyFp { fp, c: self.c.iter().map(|&x| fp.neg(x)).collect() }
    }

    pub fn scale(&self, s: u32) -> PolyFp {
        let fp = self.fp;
        PolyFp::new(fp, self.c.iter().map(|&x| fp.mul(x, s)).collect())
    }

    pub fn mul(&self, other: &PolyFp) -> PolyFp {
        self.assert_same(other);
        let fp = self.fp;
        if self.is_zero() || other.is_zero() {
            return PolyFp::zero(fp);
        }
        let mut c = vec![0u32; self.c.len() + other.c.len() - 1];
        for (i, &x) in self.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.c.iter().enumerate() {
                c[i + j] = fp.add(c[i + j], fp.mul(x, y));
            }
        }
        PolyFp { fp, c }
    }

    /// Long division: f = q·g + r with deg r < deg g.
    pub fn divmod(&self, g: &PolyFp) -> Result<(PolyFp, PolyFp)> {
        self.assert_same(g);
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let fp = self.fp;
        let dg = g.degree().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dg {
            return Ok((PolyFp::zero(fp), self.clone()));
        }
        let lead_inv = fp.inv(g.leading()).expect("nonzero leading coefficient");
        let mut q = vec![0u32; r.len() - dg];
        for i in (dg..r.len()).rev() {
            if r[i] == 0 {
                continue;
            }
            let coef = fp.mul(r[i], lead_inv);
            q[i - dg] = coef;
            for (j, &gc) in g.c.iter().enumerate() {
                r[i - dg + j] = fp.sub(r[i - dg + j], fp.mul(coef, gc));
            }
        }
        Ok((PolyFp::new(fp, q), PolyFp::new(fp, r)))
    }

    pub fn rem_by(&self, g: &PolyFp) -> Result<PolyFp> {
        Ok(self.divmod(g)?.1)
    }

    /// True when self divides f exactly.
    pub fn divides(&self, f: &PolyFp) -> bool {
        match f.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Quotient when the division is known to be exact (panics otherwise —
    /// used where exactness is an internal invariant).
    fn div_exact(&self, g: &PolyFp) -> PolyFp {
        let (q, r) = self.divmod(g).expect("nonzero divisor");
        assert!(r.is_zero(), "division expected to be exact");
        q
    }

    /// Monic GCD; gcd(f, 0) = monic(f).  Both inputs zero is an error.
    pub fn gcd(&self, other: &PolyFp) -> Result<PolyFp> {
        self.assert_same(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem_by(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended GCD: returns (d, s, t) with s·f + t·g = d, d monic.
    pub fn gcd_ext(&self, other: &PolyFp) -> Result<(PolyFp, PolyFp, PolyFp)> {
        self.assert_same(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let fp = self.fp;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (PolyFp::one(fp), PolyFp::zero(fp));
        let (mut t0, mut t1) = (PolyFp::zero(fp), PolyFp::one(fp));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        let lead_inv = fp.inv(r0.leading()).expect("nonzero gcd");
        Ok((r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv)))
    }

    /// self^e mod m.  A constant modulus sends everything to zero.
    pub fn pow_mod(&self, mut e: u128, modulus: &PolyFp) -> Result<PolyFp> {
        self.assert_same(modulus);
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut base = self.rem_by(modulus)?;
        let mut acc = PolyFp::one(self.fp).rem_by(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem_by(modulus)?;
            }
            base = base.mul(&base).rem_by(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> PolyFp {
        let fp = self.fp;
        if self.c.len() <= 1 {
            return PolyFp::zero(fp);
        }
        let c = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, &x)| fp.mul(x, fp.elem(i as i64 + 1)))
            .collect();
        PolyFp::new(fp, c)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let fp = self.fp;
        let x = x % fp.modulus();
        let mut acc = 0u32;
        for &coef in self.c.iter().rev() {
            acc = fp.add(fp.mul(acc, x), coef);
        }
        acc
    }

    /// Monic normalization of a^{deg f}·f(1/a).  Requires a nonzero
    /// constant term (always true for divisors of a^m ∓ 1).
    pub fn reciprocal(&self) -> Result<PolyFp> {
        if self.is_zero() || self.c[0] == 0 {
            return Err(Error::ConstantTermZero);
        }
        let rev: Vec<u32> = self.c.iter().rev().copied().collect();
        Ok(PolyFp::new(self.fp, rev).monic())
    }

    /// Deterministic irreducibility test via iterated Frobenius: f of
    /// degree n is irreducible iff a^{p^n} = a (mod f) and, for every prime
    /// q | n, gcd(a^{p^{n/q}} - a, f) = 1.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.monic();
        let p = self.fp.modulus();
        let x = PolyFp::monomial(self.fp, 1).rem_by(&f).expect("nonconstant modulus");
        // frob[e] = a^{p^e} mod f.
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.clone());
        for _ in 0..n {
            let next = frob.last().unwrap().pow_mod(u128::from(p), &f).expect("nonzero modulus");
            frob.push(next);
        }
        if frob[n] != x {
            return false;
        }
        for q in prime_divisors(n) {
            let g = match frob[n / q].sub(&x).gcd(&f) {
                Ok(g) => g,
                Err(_) => return false,
            };
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Complete factorization into monic irreducibles.
    ///
    /// Squarefree split (GCD with the derivative, p-th-root recursion when
    /// the derivative vanishes), then distinct-degree split by Frobenius
    /// powers, then equal-degree split.  The equal-degree stage enumerates
    /// candidates deterministically when the residue ring is small and
    /// otherwise draws seeded candidates first, falling back to the
    /// deterministic sweep; either way the output is a pure function of
    /// (polynomial, seed).
    pub fn factor(&self, seed: u64) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let fp = self.fp;
        let unit = self.leading();
        let mut factors: Vec<(PolyFp, u32)> = Vec::new();
        let monic = self.monic();
        if monic.degree() != Some(0) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (part, mult) in squarefree_parts(&monic) {
                for (prod, d) in distinct_degree_parts(&part) {
                    for irr in equal_degree_factors(&prod, d, &mut rng) {
                        factors.push((irr, mult));
                    }
                }
            }
        }
        factors.sort_by(|(a, _), (b, _)| canonical_factor_order(a, b));
        debug_assert!(
            factors.windows(2).all(|w| w[0].0 != w[1].0),
            "squarefree/distinct-degree stages must yield distinct irreducibles"
        );
        Ok(Factorization { fp, unit, factors })
    }

    /// Every monic divisor, from the factorization, in odometer order over
    /// the factor multiplicities with the first factor's exponent varying
    /// fastest.  Includes 1 and monic(self).
    pub fn divisors(&self, seed: u64) -> Result<Vec<PolyFp>> {
        let fac = self.factor(seed)?;
        let count: u128 = fac.factors.iter().map(|&(_, e)| u128::from(e) + 1).product();
        if count > u128::from(DIVISOR_CAP) {
            return Err(Error::CapExceeded { needed: count, cap: DIVISOR_CAP });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut exps = vec![0u32; fac.factors.len()];
        'outer: loop {
            let mut d = PolyFp::one(self.fp);
            for (t, (g, _)) in fac.factors.iter().enumerate() {
                for _ in 0..exps[t] {
                    d = d.mul(g);
                }
            }
            out.push(d);
            for t in 0..exps.len() {
                if exps[t] < fac.factors[t].1 {
                    exps[t] += 1;
                    continue 'outer;
                }
                exps[t] = 0;
            }
            return Ok(out);
        }
    }

    fn assert_same(&self, other: &PolyFp) {
        assert_eq!(self.fp, other.fp, "mixed field contexts");
    }

    /// The polynomial whose coefficient vector is `idx` written base p
    /// (least significant digit = constant term).
    fn from_index(fp: Fp, mut idx: u128) -> PolyFp {
        let p = u128::from(fp.modulus());
        let mut c = Vec::new();
        while idx > 0 {
            c.push((idx % p) as u32);
            idx /= p;
        }
        PolyFp::new(fp, c)
    }
}

impl fmt::Display for PolyFp {
    /// Terms descending, canonical residues: "a^2 + 3a + 3"; zero is "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &coef) in self.c.iter().enumerate().rev() {
            if coef == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{coef}")?,
                1 if coef == 1 => write!(f, "a")?,
                1 => write!(f, "{coef}a")?,
                _ if coef == 1 => write!(f, "a^{e}")?,
                _ => write!(f, "{coef}a^{e}")?,
            }
        }
        Ok(())
    }
}

/// Order: degree ascending, then coefficients compared from the leading
/// term downward.  Under this order a^3 + a + 1 precedes a^3 + a^2 + 1.
fn canonical_factor_order(a: &PolyFp, b: &PolyFp) -> std::cmp::Ordering {
    let da = a.degree().unwrap_or(0);
    let db = b.degree().unwrap_or(0);
    da.cmp(&db).then_with(|| {
        for e in (0..=da).rev() {
            let ord = a.coeff(e).cmp(&b.coeff(e));
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Squarefree decomposition of a monic polynomial of degree >= 1: pairwise
/// coprime monic squarefree parts with their multiplicities.
fn squarefree_parts(f: &PolyFp) -> Vec<(PolyFp, u32)> {
    let fp = f.fp();
    let p = fp.modulus();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // Zero derivative in characteristic p means f = g(a^p) = g(a)^p.
        let root = pth_root(f);
        return squarefree_parts(&root).into_iter().map(|(g, e)| (g, e * p)).collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&deriv).expect("f nonzero");
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c).expect("w nonzero");
        let z = w.div_exact(&y);
        if z.degree().map_or(false, |d| d > 0) {
            out.push((z, i));
        }
        c = c.div_exact(&y);
        w = y;
        i += 1;
    }
    if c.degree() != Some(0) {
        // The leftover is a perfect p-th power.
        let root = pth_root(&c);
        out.extend(squarefree_parts(&root).into_iter().map(|(g, e)| (g, e * p)));
    }
    out
}

/// p-th root of a polynomial in a^p: over the prime field every
/// coefficient is its own p-th root, so only index-shuffling remains.
fn pth_root(f: &PolyFp) -> PolyFp {
    let fp = f.fp();
    let p = fp.modulus() as usize;
    let mut c = Vec::with_capacity(f.coeffs().len() / p + 1);
    for (e, &coef) in f.coeffs().iter().enumerate() {
        if e % p == 0 {
            c.push(coef);
        } else {
            debug_assert_eq!(coef, 0, "polynomial must lie in F_p[a^p]");
        }
    }
    PolyFp::new(fp, c)
}

/// Distinct-degree split of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
fn distinct_degree_parts(f: &PolyFp) -> Vec<(PolyFp, usize)> {
    let fp = f.fp();
    let p = fp.modulus();
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = PolyFp::monomial(fp, 1);
    let mut h = x.rem_by(&g).expect("nonzero modulus");
    let mut d = 1usize;
    loop {
        let n = match g.degree() {
            Some(n) if n >= 1 => n,
            _ => break,
        };
        if 2 * d > n {
            // Whatever is left is a single irreducible of degree n.
            out.push((g.clone(), n));
            break;
        }
        h = h.pow_mod(u128::from(p), &g).expect("nonzero modulus");
        let s = h.sub(&x.rem_by(&g).expect("nonzero modulus")).gcd(&g).expect("g nonzero");
        if s.degree().map_or(false, |e| e > 0) {
            out.push((s.clone(), d));
            g = g.div_exact(&s);
            if g.degree() == Some(0) {
                break;
            }
            h = h.rem_by(&g).expect("nonzero modulus");
        }
        d += 1;
    }
    out
}

/// Split a monic squarefree product of irreducibles, all of degree d, into
/// those irreducibles.
fn equal_degree_factors(f: &PolyFp, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyFp> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let g = find_splitter(f, d, rng);
    let h = f.div_exact(&g);
    let mut out = equal_degree_factors(&g, d, rng);
    out.extend(equal_degree_factors(&h, d, rng));
    out
}

/// Find a proper monic factor of f (monic squarefree, all factors of
/// degree d, at least two of them).
///
/// Candidates r run over residues mod f.  A residue splits f either through
/// gcd(f, r) directly or through the equal-degree splitting element
/// derived from r.  Splitters exist among the residues (any nontrivial
/// idempotent of the residue ring is one), so the deterministic sweep over
/// all residues cannot fail; seeded random draws merely find one faster
/// when the residue ring is large.
fn find_splitter(f: &PolyFp, d: usize, rng: &mut ChaCha8Rng) -> PolyFp {
    let fp = f.fp();
    let p = fp.modulus();
    let n = f.degree().expect("nonzero");
    let total = u128::from(p).checked_pow(n as u32);
    let deterministic = total.map_or(false, |t| t <= 4096);
    if !deterministic {
        for _ in 0..128 {
            let idx = rng.gen::<u128>() % total.unwrap_or(u128::MAX);
            let r = PolyFp::from_index(fp, idx);
            if let Some(g) = try_split(f, d, &r) {
                return g;
            }
        }
    }
    let limit = total.unwrap_or(u128::MAX);
    let mut idx = 1u128;
    while idx < limit {
        let r = PolyFp::from_index(fp, idx);
        if let Some(g) = try_split(f, d, &r) {
            return g;
        }
        idx += 1;
    }
    unreachable!("every residue ring with at least two slots contains a splitting element")
}

/// One equal-degree splitting attempt with candidate r.
fn try_split(f: &PolyFp, d: usize, r: &PolyFp) -> Option<PolyFp> {
    let fp = f.fp();
    let p = fp.modulus();
    let n = f.degree().expect("nonzero");
    let proper = |g: PolyFp| -> Option<PolyFp> {
        match g.degree() {
            Some(e) if e > 0 && e < n => Some(g),
            _ => None,
        }
    };
    let rr = r.rem_by(f).ok()?;
    if rr.is_zero() {
        return None;
    }
    if let Some(g) = proper(f.gcd(&rr).ok()?) {
        return Some(g);
    }
    if p == 2 {
        // Trace map over F_{2^d}: T(r) = r + r^2 + ... + r^{2^{d-1}}.
        let mut acc = rr.clone();
        let mut t = rr;
        for _ in 1..d {
            acc = acc.pow_mod(2, f).ok()?;
            t = t.add(&acc).rem_by(f).ok()?;
        }
        proper(f.gcd(&t).ok()?)
    } else {
        // r^{(p^d - 1)/2} computed as norm(r)^{(p-1)/2}, with
        // norm(r) = r^{1 + p + ... + p^{d-1}} built by iterated Frobenius
        // so no exponent ever exceeds p.
        let mut nrm = rr.clone();
        for _ in 1..d {
            nrm = nrm.pow_mod(u128::from(p), f).ok()?.mul(&rr).rem_by(f).ok()?;
        }
        let s = nrm.pow_mod(u128::from(p - 1) / 2, f).ok()?;
        proper(f.gcd(&s.sub(&PolyFp::one(fp))).ok()?)
    }
}

/// A complete factorization: unit scalar times monic irreducibles with
/// multiplicities, sorted by degree then leading-downward coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    fp: Fp,
    pub unit: u32,
    pub factors: Vec<(PolyFp, u32)>,
}

impl Factorization {
    pub fn fp(&self) -> Fp {
        self.fp
    }

    /// Multiply everything back together.
    pub fn product(&self) -> PolyFp {
        let mut acc = PolyFp::constant(self.fp, self.unit);
        for (g, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(g);
            }
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.unit);
        }
        if self.unit != 1 {
            write!(f, "{}", self.unit)?;
        }
        for (g, e) in &self.factors {
            write!(f, "({g})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with coefficients in R, ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyR {
    ctx: RingCtx,
    c: Vec<RingElem>,
}

impl PolyR {
    pub fn new(ctx: RingCtx, mut coeffs: Vec<RingElem>) -> PolyR {
        assert!(coeffs.iter().all(|x| x.ctx() == ctx), "coefficients must share the context");
        while coeffs.last().map_or(false, |x| x.is_zero()) {
            coeffs.pop();
        }
        PolyR { ctx, c: coeffs }
    }

    pub fn zero(ctx: RingCtx) -> PolyR {
        PolyR { ctx, c: Vec::new() }
    }

    pub fn one(ctx: RingCtx) -> PolyR {
        PolyR::new(ctx, vec![ctx.one()])
    }

    /// c·a^e for a ring coefficient c.
    pub fn monomial(ctx: RingCtx, coef: RingElem, e: usize) -> PolyR {
        let mut c = vec![ctx.zero(); e + 1];
        c[e] = coef;
        PolyR::new(ctx, c)
    }

    /// Embed an F_p polynomial coefficientwise as constants of R.
    pub fn from_fp(ctx: RingCtx, f: &PolyFp) -> PolyR {
        assert_eq!(f.fp(), ctx.fp(), "field context must match the ring context");
        PolyR::new(ctx, f.coeffs().iter().map(|&x| ctx.constant(x)).collect())
    }

    #[inline]
    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Coefficient of a^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> RingElem {
        self.c.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.c
    }

    pub fn add(&self, other: &PolyR) -> PolyR {
        self.assert_same(other);
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        PolyR::new(self.ctx, c)
    }

    pub fn sub(&self, other: &PolyR) -> PolyR {
        self.assert_same(other);
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        PolyR::new(self.ctx, c)
    }

    /// Product in R[a], no reduction.
    pub fn mul(&self, other: &PolyR) -> PolyR {
        self.assert_same(other);
        if self.is_zero() || other.is_zero() {
            return PolyR::zero(self.ctx);
        }
        let mut c = vec![self.ctx.zero(); self.c.len() + other.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&x.mul(y));
            }
        }
        PolyR::new(self.ctx, c)
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale(&self, s: &RingElem) -> PolyR {
        PolyR::new(self.ctx, self.c.iter().map(|x| x.mul(s)).collect())
    }

    /// Reduce via a^m = unit: each a^e with e >= m folds into a^{e-m} with
    /// an extra factor of unit.
    pub fn qr_reduce(&self, m: usize, unit: &RingElem) -> PolyR {
        assert!(m >= 1, "quotient modulus degree must be at least 1");
        let mut c: Vec<RingElem> = self.c.clone();
        for e in (m..c.len()).rev() {
            if !c[e].is_zero() {
                let folded = c[e].mul(unit);
                c[e - m] = c[e - m].add(&folded);
                c[e] = self.ctx.zero();
            }
        }
        c.truncate(m.min(c.len()));
        PolyR::new(self.ctx, c)
    }

    /// Product in R[a]/(a^m - unit) for representatives of degree < m.
    pub fn qr_mul(&self, other: &PolyR, m: usize, unit: &RingElem) -> PolyR {
        assert!(
            self.degree().map_or(true, |d| d < m) && other.degree().map_or(true, |d| d < m),
            "quotient representatives must have degree below m"
        );
        self.mul(other).qr_reduce(m, unit)
    }

    /// The substitution a -> lambda·a: coefficient of a^i picks up a
    /// factor lambda^i (= lambda for odd i, 1 for even i, since
    /// lambda^2 = 1).
    pub fn mu(&self) -> PolyR {
        let lam = self.ctx.lambda();
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, x)| if i % 2 == 1 { x.mul(&lam) } else { x.clone() })
            .collect();
        PolyR::new(self.ctx, c)
    }

    fn assert_same(&self, other: &PolyR) {
        assert_eq!(self.ctx, other.ctx, "mixed ring contexts");
    }
}

/// sigma_1·h_1 + sigma_2·h_2 + sigma_3·h_3 as a polynomial over R.
pub fn sigma_combine(ctx: RingCtx, parts: [&PolyFp; 3]) -> Result<PolyR> {
    let sig = [ctx.sigma(1)?, ctx.sigma(2)?, ctx.sigma(3)?];
    let mut acc = PolyR::zero(ctx);
    for (s, h) in sig.iter().zip(parts) {
        acc = acc.add(&PolyR::from_fp(ctx, h).scale(s));
    }
    Ok(acc)
}

impl fmt::Display for PolyR {
    /// Terms descending with ring coefficients parenthesized when they
    /// have more than one term: "(1 + u)a^2 + 2a + u".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, coef) in self.c.iter().enumerate().rev() {
            if coef.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let text = coef.to_string();
            let simple = !text.contains('+');
            let is_one = text == "1";
            match e {
                0 => write!(f, "{text}")?,
                _ => {
                    if is_one {
                        // bare power of a
                    } else if simple {
                        write!(f, "{text}")?;
                    } else {
                        write!(f, "({text})")?;
                    }
                    if e == 1 {
                        write!(f, "a")?;
                    } else {
                        write!(f, "a^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn fp(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn poly(p: u32, coeffs: &[i64]) -> PolyFp {
        PolyFp::from_signed(fp(p), coeffs)
    }

    #[test]
    fn divmod_examples() {
        // (a^2 - 1) / (a - 1) over F_5.
        let (q, r) = poly(5, &[-1, 0, 1]).divmod(&poly(5, &[-1, 1])).unwrap();
        assert_eq!(q, poly(5, &[1, 1]));
        assert!(r.is_zero());
        // f / 1 = (f, 0).
        let f = poly(5, &[3, 1, 4]);
        let (q, r) = f.divmod(&PolyFp::one(fp(5))).unwrap();
        assert_eq!(q, f);
        assert!(r.is_zero());
        // a^3 / (a^2 + 1) over F_3: a^3 = a(a^2 + 1) - a.
        let (q, r) = poly(3, &[0, 0, 0, 1]).divmod(&poly(3, &[1, 0, 1])).unwrap();
        assert_eq!(q, poly(3, &[0, 1]));
        assert_eq!(r, poly(3, &[0, 2]));
        assert!(matches!(
            f.divmod(&PolyFp::zero(fp(5))),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn division_identity_on_seeded_pairs() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        for p in [3u32, 5, 7] {
            let field = fp(p);
            let mut rng = ChaCha8Rng::seed_from_u64(0xD1D * u64::from(p));
            for _ in 0..1000 {
                let df = rng.gen_range(0..=8);
                let dg = rng.gen_range(0..=8);
                let f = PolyFp::new(field, (0..=df).map(|_| rng.gen_range(0..p)).collect());
                let mut gc: Vec<u32> = (0..=dg).map(|_| rng.gen_range(0..p)).collect();
                let last = gc.len() - 1;
                gc[last] = rng.gen_range(1..p);
                let g = PolyFp::new(field, gc);
                let (q, r) = f.divmod(&g).unwrap();
                assert_eq!(q.mul(&g).add(&r), f);
                assert!(r.degree() < g.degree() || r.is_zero());
            }
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            poly(5, &[-1, 1]).gcd(&poly(5, &[1, 1])).unwrap(),
            PolyFp::one(fp(5))
        );
        let f = poly(5, &[2, 4]);
        assert_eq!(f.gcd(&PolyFp::zero(fp(5))).unwrap(), f.monic());
        // gcd(a^2 - 1, a^2 + a) = a + 1 over F_3.
        assert_eq!(
            poly(3, &[-1, 0, 1]).gcd(&poly(3, &[0, 1, 1])).unwrap(),
            poly(3, &[1, 1])
        );
        assert!(matches!(
            PolyFp::zero(fp(3)).gcd(&PolyFp::zero(fp(3))),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn gcd_ext_bezout_identity() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        for p in [3u32, 5, 7] {
            let field = fp(p);
            let mut rng = ChaCha8Rng::seed_from_u64(0xBE2 + u64::from(p));
            for _ in 0..300 {
                let f = PolyFp::new(field, (0..rng.gen_range(1..7)).map(|_| rng.gen_range(0..p)).collect());
                let g = PolyFp::new(field, (0..rng.gen_range(1..7)).map(|_| rng.gen_range(0..p)).collect());
                if f.is_zero() && g.is_zero() {
                    continue;
                }
                let (d, s, t) = f.gcd_ext(&g).unwrap();
                assert_eq!(s.mul(&f).add(&t.mul(&g)), d, "Bezout identity");
                assert!(d.is_monic());
                assert!(d.divides(&f) && d.divides(&g));
            }
        }
    }

    #[test]
    fn factor_binary_septic() {
        // a^7 - 1 = a^7 + 1 over F_2 splits into three irreducibles.
        let f = poly(2, &[-1, 0, 0, 0, 0, 0, 0, 1]);
        let fac = f.factor(42).unwrap();
        assert_eq!(fac.unit, 1);
        let got: Vec<(PolyFp, u32)> = fac.factors.clone();
        assert_eq!(
            got,
            vec![
                (poly(2, &[1, 1]), 1),
                (poly(2, &[1, 1, 0, 1]), 1),
                (poly(2, &[1, 0, 1, 1]), 1),
            ],
            "(a + 1)(a^3 + a + 1)(a^3 + a^2 + 1)"
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn factor_examples() {
        // a^2 - 1 over F_5 = (a + 1)(a + 4).
        let fac = poly(5, &[-1, 0, 1]).factor(0).unwrap();
        assert_eq!(fac.factors, vec![(poly(5, &[1, 1]), 1), (poly(5, &[4, 1]), 1)]);
        // a^2 + 1 is irreducible over F_3.
        let fac = poly(3, &[1, 0, 1]).factor(0).unwrap();
        assert_eq!(fac.factors, vec![(poly(3, &[1, 0, 1]), 1)]);
        // a^3 - 1 = (a + 2)^3 in characteristic 3.
        let fac = poly(3, &[-1, 0, 0, 1]).factor(0).unwrap();
        assert_eq!(fac.factors, vec![(poly(3, &[2, 1]), 3)]);
        // Unit is preserved: 2a^2 - 2 over F_5.
        let fac = poly(5, &[-2, 0, 2]).factor(0).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.product(), poly(5, &[-2, 0, 2]));
    }

    #[test]
    fn factor_is_seed_independent_on_small_inputs() {
        // Small residue rings take the deterministic enumeration path, so
        // any seed must give the identical factor list.
        for p in [2u32, 3, 5] {
            let f = PolyFp::binomial(fp(p), 7, 1);
            let a = f.factor(1).unwrap();
            let b = f.factor(999).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn factor_reconstructs_and_factors_are_irreducible_exhaustively() {
        // All monic polynomials of degree 1..=3 over p in {3, 5, 7}.
        for p in [3u32, 5, 7] {
            let field = fp(p);
            for deg in 1..=3usize {
                let count = u64::from(p).pow(deg as u32);
                for idx in 0..count {
                    let mut c = Vec::with_capacity(deg + 1);
                    let mut i = idx;
                    for _ in 0..deg {
                        c.push((i % u64::from(p)) as u32);
                        i /= u64::from(p);
                    }
                    c.push(1);
                    let f = PolyFp::new(field, c);
                    let fac = f.factor(7).unwrap();
                    assert_eq!(fac.product(), f, "reconstruction at p={p}");
                    for (g, _) in &fac.factors {
                        assert!(g.is_monic());
                        assert!(g.is_irreducible(), "factor {g} of {f} over F_{p}");
                        // Independent check: no roots for degree >= 2.
                        if g.degree().unwrap() >= 2 {
                            for x in 0..p {
                                assert_ne!(g.eval(x), 0, "{g} has root {x} over F_{p}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn irreducibility_test_agrees_with_factorization() {
        for p in [3u32, 5] {
            let field = fp(p);
            for deg in 1..=4usize {
                let count = u64::from(p).pow(deg as u32);
                for idx in 0..count {
                    let mut c = Vec::with_capacity(deg + 1);
                    let mut i = idx;
                    for _ in 0..deg {
                        c.push((i % u64::from(p)) as u32);
                        i /= u64::from(p);
                    }
                    c.push(1);
                    let f = PolyFp::new(field, c);
                    let via_factor = {
                        let fac = f.factor(3).unwrap();
                        fac.factors.len() == 1 && fac.factors[0].1 == 1
                    };
                    assert_eq!(f.is_irreducible(), via_factor, "{f} over F_{p}");
                }
            }
        }
    }

    #[test]
    fn divisor_enumeration_examples() {
        // a^2 - 1 over F_3: exactly {1, a+1, a+2, a^2+2} in that order.
        let divs = poly(3, &[-1, 0, 1]).divisors(0).unwrap();
        assert_eq!(
            divs,
            vec![
                PolyFp::one(fp(3)),
                poly(3, &[1, 1]),
                poly(3, &[2, 1]),
                poly(3, &[2, 0, 1]),
            ]
        );
        // Irreducible: {1, f}.
        let f = poly(3, &[1, 0, 1]);
        assert_eq!(f.divisors(0).unwrap(), vec![PolyFp::one(fp(3)), f.clone()]);
        // a^3 - 1 over F_3: powers of a + 2.
        let divs = poly(3, &[-1, 0, 0, 1]).divisors(0).unwrap();
        let lin = poly(3, &[2, 1]);
        assert_eq!(
            divs,
            vec![
                PolyFp::one(fp(3)),
                lin.clone(),
                lin.mul(&lin),
                lin.mul(&lin).mul(&lin),
            ]
        );
        assert_eq!(divs[3], poly(3, &[2, 0, 0, 1]), "(a + 2)^3 = a^3 + 2 over F_3");
    }

    #[test]
    fn every_divisor_divides_and_the_list_is_complete() {
        // Cross-check divisors of a^m -/+ 1 against brute-force trial
        // division over all monic polynomials of degree <= m.
        for p in [3u32, 5] {
            let field = fp(p);
            for m in 1..=3usize {
                for sign in [1i64, -1] {
                    let f = PolyFp::binomial(field, m, sign);
                    let divs = f.divisors(0).unwrap();
                    for d in &divs {
                        assert!(d.divides(&f));
                    }
                    let mut brute = 0usize;
                    for deg in 0..=m {
                        let count = u64::from(p).pow(deg as u32);
                        for idx in 0..count {
                            let mut c = Vec::with_capacity(deg + 1);
                            let mut i = idx;
                            for _ in 0..deg {
                                c.push((i % u64::from(p)) as u32);
                                i /= u64::from(p);
                            }
                            c.push(1);
                            let d = PolyFp::new(field, c);
                            if d.divides(&f) {
                                brute += 1;
                                assert!(divs.contains(&d), "missing divisor {d}");
                            }
                        }
                    }
                    assert_eq!(brute, divs.len());
                }
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(poly(5, &[-1, 1]).reciprocal().unwrap(), poly(5, &[4, 1]));
        assert_eq!(
            poly(5, &[2, 1, 1]).reciprocal().unwrap(),
            poly(5, &[3, 3, 1]),
            "reversal 2a^2 + a + 1 normalized by 2^{{-1}} = 3"
        );
        assert!(matches!(
            PolyFp::monomial(fp(5), 1).reciprocal(),
            Err(Error::ConstantTermZero)
        ));
        // Involution up to monic normalization.
        for coeffs in [[1i64, 2, 3], [4, 0, 1], [2, 2, 1]] {
            let f = poly(5, &coeffs);
            assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f.monic());
        }
    }

    #[test]
    fn pow_mod_matches_naive() {
        let f = poly(5, &[1, 2, 1]);
        let m = poly(5, &[1, 0, 0, 1]);
        let mut naive = PolyFp::one(fp(5));
        for e in 0..40u32 {
            assert_eq!(f.pow_mod(u128::from(e), &m).unwrap(), naive.rem_by(&m).unwrap());
            naive = naive.mul(&f).rem_by(&m).unwrap();
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(5, &[3, 3, 1]).to_string(), "a^2 + 3a + 3");
        assert_eq!(PolyFp::zero(fp(5)).to_string(), "0");
        assert_eq!(poly(5, &[0, 1]).to_string(), "a");
        let fac = poly(5, &[-1, 0, 1]).factor(0).unwrap();
        assert_eq!(fac.to_string(), "(a + 1)(a + 4)");
    }

    // ---- PolyR ----

    fn rctx(p: u32, k: usize) -> RingCtx {
        RingCtx::new(p, k).unwrap()
    }

    #[test]
    fn qr_reduction_examples() {
        let ctx = rctx(5, 2);
        let lam = ctx.lambda();
        // a^{m-1} · a = a^m = lambda as a constant, here m = 3.
        let am1 = PolyR::monomial(ctx, ctx.one(), 2);
        let a = PolyR::monomial(ctx, ctx.one(), 1);
        assert_eq!(am1.qr_mul(&a, 3, &lam), PolyR::new(ctx, vec![lam.clone()]));
        // f · 1 = f.
        let f = PolyR::new(ctx, vec![ctx.one(), lam.clone(), ctx.monomial(1)]);
        assert_eq!(f.qr_mul(&PolyR::one(ctx), 3, &lam), f);
        // (a + 1)^2 in R[a]/(a^2 - lambda) = 2a + (1 + lambda) = 2a + (2 + 3u^2).
        let a_plus_1 = PolyR::new(ctx, vec![ctx.one(), ctx.one()]);
        let sq = a_plus_1.qr_mul(&a_plus_1, 2, &lam);
        assert_eq!(
            sq,
            PolyR::new(ctx, vec![ctx.from_signed(&[2, 0, 3]), ctx.constant(2)])
        );
    }

    #[test]
    fn mu_substitution() {
        let ctx = rctx(5, 2);
        let lam = ctx.lambda();
        let a = PolyR::monomial(ctx, ctx.one(), 1);
        assert_eq!(a.mu(), PolyR::monomial(ctx, lam.clone(), 1), "mu(a) = lambda a");
        let a2 = PolyR::monomial(ctx, ctx.one(), 2);
        assert_eq!(a2.mu(), a2, "mu(a^2) = a^2 because lambda^2 = 1");
        let f = PolyR::new(ctx, vec![ctx.one(), ctx.one(), ctx.one()]);
        assert_eq!(f.mu().mu(), f, "mu is an involution on representatives");
    }

    #[test]
    fn sigma_combine_examples() {
        let ctx = rctx(3, 2);
        let one = PolyFp::one(fp(3));
        // sigma_1 + sigma_2 + sigma_3 = 1.
        assert_eq!(sigma_combine(ctx, [&one, &one, &one]).unwrap(), PolyR::one(ctx));
        // h(a)·k(a) = a^2 - lambda for matched cofactors: h_1 = a - 1,
        // h_2 = a^2 + 1, h_3 = 1 with k_i the complementary divisors.
        let h = sigma_combine(
            ctx,
            [&poly(3, &[-1, 1]), &poly(3, &[1, 0, 1]), &one],
        )
        .unwrap();
        let kpoly = sigma_combine(
            ctx,
            [&poly(3, &[1, 1]), &one, &poly(3, &[1, 0, 1])],
        )
        .unwrap();
        let modulus = PolyR::new(
            ctx,
            vec![ctx.lambda().neg(), ctx.zero(), ctx.one()],
        );
        assert_eq!(h.mul(&kpoly), modulus, "cross terms vanish by orthogonality");
    }

    #[test]
    fn poly_r_display() {
        let ctx = rctx(5, 2);
        let f = PolyR::new(ctx, vec![ctx.monomial(1), ctx.constant(2), ctx.from_signed(&[1, 1, 0])]);
        assert_eq!(f.to_string(), "(1 + u)a^2 + 2a + u");
    }
}
