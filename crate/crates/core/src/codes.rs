//! Linear codes over F_p and over R: shifts, invariance, sigma
//! decomposition and recomposition, generator polynomials, duals,
//! cardinality, and minimum distance.
//!
//! A "linear code over R" is an R-submodule of R^m.  All module-level
//! linear algebra happens on the F_p expansion of R^m: coordinate i of an
//! R-vector occupies positions i(k+1) .. i(k+1)+k of a vector in
//! F_p^{(k+1)m} (ascending u-powers), and generator sets are closed under
//! multiplication by u at construction so that F_p-span and R-span agree.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::linalg::RowBasis;
use crate::poly::{sigma_combine, PolyFp, PolyR};
use crate::ring::{RingCtx, RingElem};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The three coordinate shifts: alpha rotates right, beta also negates the
/// wrapped entry, gamma multiplies the wrapped entry by lambda = 1 - 2u^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftKind {
    Alpha,
    Beta,
    Gamma,
}

impl ShiftKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ShiftKind::Alpha => "alpha",
            ShiftKind::Beta => "beta",
            ShiftKind::Gamma => "gamma",
        }
    }
}

impl fmt::Display for ShiftKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Shift of a vector over F_p.  Gamma needs ring coefficients and is
/// rejected here.
pub fn shift_fp(fp: Fp, v: &[u32], kind: ShiftKind) -> Vec<u32> {
    assert!(!v.is_empty(), "cannot shift an empty vector");
    let mut out = Vec::with_capacity(v.len());
    let wrapped = v[v.len() - 1];
    out.push(match kind {
        ShiftKind::Alpha => wrapped,
        ShiftKind::Beta => fp.neg(wrapped),
        ShiftKind::Gamma => panic!("gamma shift acts on vectors over R"),
    });
    out.extend_from_slice(&v[..v.len() - 1]);
    out
}

/// Shift of a vector over R.
pub fn shift_r(ctx: RingCtx, v: &[RingElem], kind: ShiftKind) -> Vec<RingElem> {
    assert!(!v.is_empty(), "cannot shift an empty vector");
    let wrapped = &v[v.len() - 1];
    let mut out = Vec::with_capacity(v.len());
    out.push(match kind {
        ShiftKind::Alpha => wrapped.clone(),
        ShiftKind::Beta => wrapped.neg(),
        ShiftKind::Gamma => wrapped.mul(&ctx.lambda()),
    });
    out.extend_from_slice(&v[..v.len() - 1]);
    out
}

/// Coordinatewise multiplication by powers of lambda:
/// (d_0, d_1, d_2, ...) -> (d_0, lambda d_1, lambda^2 d_2, ...).
pub fn mu_bar(ctx: RingCtx, v: &[RingElem]) -> Vec<RingElem> {
    let lam = ctx.lambda();
    v.iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { x.mul(&lam) } else { x.clone() })
        .collect()
}

/// A linear code over F_p: generator rows plus their cached RREF basis.
#[derive(Debug, Clone)]
pub struct LinearCodeFp {
    m: usize,
    rows: Vec<Vec<u32>>,
    basis: RowBasis,
}

impl LinearCodeFp {
    pub fn new(fp: Fp, m: usize, rows: Vec<Vec<u32>>) -> LinearCodeFp {
        assert!(m >= 1, "code length must be at least 1");
        assert!(rows.iter().all(|r| r.len() == m), "generator rows must have length m");
        let basis = RowBasis::from_rows(fp, m, rows.iter().cloned());
        LinearCodeFp { m, rows, basis }
    }

    pub fn zero(fp: Fp, m: usize) -> LinearCodeFp {
        LinearCodeFp::new(fp, m, Vec::new())
    }

    pub fn full(fp: Fp, m: usize) -> LinearCodeFp {
        let rows = (0..m)
            .map(|i| {
                let mut r = vec![0; m];
                r[i] = 1;
                r
            })
            .collect();
        LinearCodeFp::new(fp, m, rows)
    }

    #[inline]
    pub fn fp(&self) -> Fp {
        self.basis.fp()
    }

    /// Code length m.
    #[inline]
    pub fn length(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    /// Number of codewords p^dim, if it fits.
    pub fn size(&self) -> Option<u128> {
        self.basis.span_size()
    }

    pub fn basis(&self) -> &RowBasis {
        &self.basis
    }

    pub fn generator_rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.basis.contains(v)
    }

    pub fn equals(&self, other: &LinearCodeFp) -> bool {
        self.basis.spans_same(&other.basis)
    }

    pub fn is_subcode_of(&self, other: &LinearCodeFp) -> bool {
        self.basis.is_subspace_of(&other.basis)
    }

    /// True when the alpha (cyclic) or beta (negacyclic) shift maps the
    /// code into itself.  Checking basis rows suffices: shifts are linear.
    pub fn is_invariant(&self, kind: ShiftKind) -> bool {
        let fp = self.fp();
        self.basis
            .rows()
            .iter()
            .all(|r| self.basis.contains(&shift_fp(fp, r, kind)))
    }

    /// Dual code under the Euclidean inner product.
    pub fn dual(&self) -> LinearCodeFp {
        LinearCodeFp::new(self.fp(), self.m, self.basis.nullspace())
    }

    /// True when every pair of basis rows (including squares) is
    /// orthogonal; by bilinearity this is containment in the dual.
    pub fn is_self_orthogonal(&self) -> bool {
        let fp = self.fp();
        let rows = self.basis.rows();
        rows.iter()
            .enumerate()
            .all(|(i, r)| rows[i..].iter().all(|s| fp.dot(r, s) == 0))
    }

    /// Minimum Hamming weight over nonzero codewords, by full enumeration.
    pub fn min_distance(&self, cap: u64) -> Result<u64> {
        if self.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        let needed = self.size().unwrap_or(u128::MAX);
        if needed > u128::from(cap) {
            return Err(Error::CapExceeded { needed, cap });
        }
        let mut best = u64::MAX;
        for w in self.basis.iter_span() {
            let weight = w.iter().filter(|&&x| x != 0).count() as u64;
            if weight > 0 && weight < best {
                best = weight;
            }
        }
        Ok(best)
    }

    /// The monic generator polynomial of a cyclic (alpha) or negacyclic
    /// (beta) code, as an ideal of F_p[a]/(a^m -/+ 1): the GCD of the basis
    /// row polynomials with the modulus.  The zero code returns the modulus
    /// itself so that dimension = m - degree stays true.
    pub fn generator_polynomial(&self, kind: ShiftKind) -> Result<PolyFp> {
        let modulus = self.shift_modulus(kind);
        if !self.is_invariant(kind) {
            return Err(Error::NotInvariant(match kind {
                ShiftKind::Alpha => "alpha",
                ShiftKind::Beta => "beta",
                ShiftKind::Gamma => unreachable!("shift_modulus rejects gamma"),
            }));
        }
        let mut g = modulus.clone();
        for row in self.basis.rows() {
            let poly = PolyFp::new(self.fp(), row.clone());
            g = g.gcd(&poly).expect("modulus is nonzero");
        }
        debug_assert!(g.divides(&modulus));
        debug_assert_eq!(self.dim(), self.m - g.degree().unwrap_or(0));
        Ok(g)
    }

    /// The cyclic/negacyclic code generated by h: the ideal ⟨h⟩ of
    /// F_p[a]/(a^m -/+ 1) as a span of the a-multiples of h.
    pub fn from_generator_poly(fp: Fp, m: usize, h: &PolyFp, kind: ShiftKind) -> LinearCodeFp {
        let modulus = match kind {
            ShiftKind::Alpha => PolyFp::binomial(fp, m, 1),
            ShiftKind::Beta => PolyFp::binomial(fp, m, -1),
            ShiftKind::Gamma => panic!("gamma-constacyclic codes live over R"),
        };
        let mut rows = Vec::with_capacity(m);
        for i in 0..m {
            let shifted = PolyFp::monomial(fp, i)
                .mul(h)
                .rem_by(&modulus)
                .expect("modulus is nonzero");
            let mut row = shifted.coeffs().to_vec();
            row.resize(m, 0);
            rows.push(row);
        }
        LinearCodeFp::new(fp, m, rows)
    }

    fn shift_modulus(&self, kind: ShiftKind) -> PolyFp {
        match kind {
            ShiftKind::Alpha => PolyFp::binomial(self.fp(), self.m, 1),
            ShiftKind::Beta => PolyFp::binomial(self.fp(), self.m, -1),
            ShiftKind::Gamma => panic!("gamma shift acts on vectors over R"),
        }
    }
}

/// Flatten an R-vector into F_p coordinates, coordinate-major: position
/// i(k+1)+e holds the u^e coefficient of coordinate i.
pub fn expand_vector(ctx: RingCtx, v: &[RingElem]) -> Vec<u32> {
    let w = ctx.width();
    let mut out = Vec::with_capacity(v.len() * w);
    for x in v {
        debug_assert_eq!(x.ctx(), ctx);
        out.extend_from_slice(x.coeffs());
    }
    debug_assert_eq!(out.len(), v.len() * w);
    out
}

/// Inverse of [`expand_vector`].
pub fn contract_vector(ctx: RingCtx, w: &[u32]) -> Vec<RingElem> {
    let width = ctx.width();
    assert_eq!(w.len() % width, 0, "expansion length must be a multiple of k+1");
    w.chunks(width).map(|ch| ctx.from_coeffs(ch.to_vec())).collect()
}

/// A linear code over R: an R-submodule of R^m, stored as generator rows
/// plus the RREF basis of the u-closed F_p expansion.
#[derive(Debug, Clone)]
pub struct ConstaCodeR {
    ctx: RingCtx,
    m: usize,
    rows: Vec<Vec<RingElem>>,
    expansion: RowBasis,
}

impl ConstaCodeR {
    pub fn new(ctx: RingCtx, m: usize, rows: Vec<Vec<RingElem>>) -> ConstaCodeR {
        assert!(m >= 1, "code length must be at least 1");
        assert!(rows.iter().all(|r| r.len() == m), "generator rows must have length m");
        let mut expanded = Vec::with_capacity(rows.len() * ctx.width());
        for g in &rows {
            for e in 0..=ctx.k() {
                let ue = ctx.monomial(e);
                let ug: Vec<RingElem> = g.iter().map(|x| x.mul(&ue)).collect();
                expanded.push(expand_vector(ctx, &ug));
            }
        }
        let expansion = RowBasis::from_rows(ctx.fp(), m * ctx.width(), expanded);
        ConstaCodeR { ctx, m, rows, expansion }
    }

    pub fn zero(ctx: RingCtx, m: usize) -> ConstaCodeR {
        ConstaCodeR::new(ctx, m, Vec::new())
    }

    pub fn full(ctx: RingCtx, m: usize) -> ConstaCodeR {
        let rows = (0..m)
            .map(|i| {
                let mut r = vec![ctx.zero(); m];
                r[i] = ctx.one();
                r
            })
            .collect();
        ConstaCodeR::new(ctx, m, rows)
    }

    #[inline]
    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    /// Code length m (in R-symbols).
    #[inline]
    pub fn length(&self) -> usize {
        self.m
    }

    /// Dimension of the code as an F_p-subspace of F_p^{(k+1)m}.
    #[inline]
    pub fn fp_dim(&self) -> usize {
        self.expansion.rank()
    }

    /// Number of codewords p^{fp_dim}, if it fits.
    pub fn size(&self) -> Option<u128> {
        self.expansion.span_size()
    }

    pub fn generator_rows(&self) -> &[Vec<RingElem>] {
        &self.rows
    }

    pub fn expansion(&self) -> &RowBasis {
        &self.expansion
    }

    pub fn contains(&self, v: &[RingElem]) -> bool {
        assert_eq!(v.len(), self.m, "vector length must equal the code length");
        self.expansion.contains(&expand_vector(self.ctx, v))
    }

    pub fn equals(&self, other: &ConstaCodeR) -> bool {
        self.expansion.spans_same(&other.expansion)
    }

    pub fn is_subcode_of(&self, other: &ConstaCodeR) -> bool {
        self.expansion.is_subspace_of(&other.expansion)
    }

    /// All codewords as R-vectors, in span-iteration order.
    pub fn codewords(&self) -> impl Iterator<Item = Vec<RingElem>> + '_ {
        self.expansion.iter_span().map(move |w| contract_vector(self.ctx, &w))
    }

    /// True when the requested shift maps the code into itself.  The
    /// shifts commute with scalar multiplication by R, so checking the
    /// generator rows suffices.
    pub fn is_invariant(&self, kind: ShiftKind) -> bool {
        self.rows
            .iter()
            .all(|g| self.contains(&shift_r(self.ctx, g, kind)))
    }

    /// Generator rows as polynomials in R[a] (degree < m).
    pub fn poly_reprs(&self) -> Vec<PolyR> {
        self.rows
            .iter()
            .map(|g| PolyR::new(self.ctx, g.to_vec()))
            .collect()
    }

    /// The code {coefficient vectors of the ideal generated by `gens`} in
    /// R[a]/(a^m - unit): spans of all a-multiples of the generators.
    pub fn from_poly_ideal(ctx: RingCtx, m: usize, unit: &RingElem, gens: &[PolyR]) -> ConstaCodeR {
        let mut rows = Vec::with_capacity(gens.len() * m);
        for g in gens {
            let reduced = g.qr_reduce(m, unit);
            for j in 0..m {
                let aj = PolyR::monomial(ctx, ctx.one(), j);
                let prod = aj.qr_mul(&reduced, m, unit);
                rows.push(poly_to_vec(ctx, m, &prod));
            }
        }
        ConstaCodeR::new(ctx, m, rows)
    }

    /// Minimum symbol-level Hamming weight (nonzero R-coordinates) over
    /// nonzero codewords, by full enumeration.
    pub fn min_distance(&self, cap: u64) -> Result<u64> {
        if self.fp_dim() == 0 {
            return Err(Error::ZeroCode);
        }
        let needed = self.size().unwrap_or(u128::MAX);
        if needed > u128::from(cap) {
            return Err(Error::CapExceeded { needed, cap });
        }
        let width = self.ctx.width();
        let mut best = u64::MAX;
        for w in self.expansion.iter_span() {
            let weight = w
                .chunks(width)
                .filter(|ch| ch.iter().any(|&x| x != 0))
                .count() as u64;
            if weight > 0 && weight < best {
                best = weight;
            }
        }
        Ok(best)
    }

    /// Dual module {x : x·y = 0 for all codewords y} under the Euclidean
    /// R-valued inner product, computed from the (k+1) F_p-linear
    /// conditions per generator equation x·g = 0.
    pub fn dual_r(&self) -> ConstaCodeR {
        let ctx = self.ctx;
        let width = ctx.width();
        let mut conditions = Vec::with_capacity(self.rows.len() * width);
        for g in &self.rows {
            // coeff_t(sum_i x_i g_i) = 0 for t = 0..=k; the coefficient of
            // unknown x_{i,e} is coeff_t(u^e g_i).
            for t in 0..width {
                let mut row = vec![0u32; self.m * width];
                for (i, gi) in g.iter().enumerate() {
                    for e in 0..width {
                        let prod = ctx.monomial(e).mul(gi);
                        row[i * width + e] = prod.coeff(t);
                    }
                }
                conditions.push(row);
            }
        }
        let matrix = RowBasis::from_rows(ctx.fp(), self.m * width, conditions);
        let dual_rows: Vec<Vec<RingElem>> = matrix
            .nullspace()
            .into_iter()
            .map(|w| contract_vector(ctx, &w))
            .collect();
        ConstaCodeR::new(ctx, self.m, dual_rows)
    }

    /// True when every pair of generator rows has x·y = 0 in R; by
    /// R-bilinearity this is containment in the dual.
    pub fn is_self_orthogonal(&self) -> bool {
        let dot = |x: &[RingElem], y: &[RingElem]| -> RingElem {
            let mut acc = self.ctx.zero();
            for (a, b) in x.iter().zip(y) {
                acc = acc.add(&a.mul(b));
            }
            acc
        };
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| self.rows[i..].iter().all(|s| dot(r, s).is_zero()))
    }

    /// Project onto the three evaluation components: L_i is the image of
    /// the code under coordinatewise evaluation at c = 0, 1, -1.  Requires
    /// even k so that -1 is a legal evaluation point.  `exact` records
    /// whether k = 2, the case where sigma_1 L_1 + sigma_2 L_2 + sigma_3 L_3
    /// reassembles the code.
    pub fn decompose(&self) -> Result<Decomposition> {
        let ctx = self.ctx;
        if ctx.k() % 2 == 1 {
            return Err(Error::OddK(ctx.k() as u32));
        }
        let fp = ctx.fp();
        let points = [0u32, 1, fp.modulus() - 1];
        let mut parts = Vec::with_capacity(3);
        for &c in &points {
            let rows: Vec<Vec<u32>> = self
                .rows
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|x| ctx.eval(x, c).expect("0, 1, -1 are evaluation points for even k"))
                        .collect()
                })
                .collect();
            parts.push(LinearCodeFp::new(fp, self.m, rows));
        }
        let l3 = parts.pop().unwrap();
        let l2 = parts.pop().unwrap();
        let l1 = parts.pop().unwrap();
        Ok(Decomposition { triple: SigmaTriple::new(l1, l2, l3), exact: ctx.k() == 2 })
    }
}

/// Coefficient vector (length m) of a polynomial of degree < m.
pub fn poly_to_vec(ctx: RingCtx, m: usize, f: &PolyR) -> Vec<RingElem> {
    assert!(f.degree().map_or(true, |d| d < m), "representative degree must be below m");
    debug_assert_eq!(f.coeff(0).ctx(), ctx);
    (0..m).map(|i| f.coeff(i)).collect()
}

/// Result of [`ConstaCodeR::decompose`]: the component triple, and whether
/// the sigma identities reassemble it exactly (k = 2).
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub triple: SigmaTriple,
    pub exact: bool,
}

/// Three component codes over F_p of a common length, one per sigma slot.
#[derive(Debug, Clone)]
pub struct SigmaTriple {
    pub l1: LinearCodeFp,
    pub l2: LinearCodeFp,
    pub l3: LinearCodeFp,
}

fn require_k2(ctx: RingCtx) -> Result<()> {
    match ctx.k() {
        2 => Ok(()),
        1 => Err(Error::SigmaGate { k: 1, identity: "sigma_2 is undefined" }),
        k => Err(Error::SigmaGate { k: k as u32, identity: "sigma_2^2 = sigma_2" }),
    }
}

impl SigmaTriple {
    pub fn new(l1: LinearCodeFp, l2: LinearCodeFp, l3: LinearCodeFp) -> SigmaTriple {
        assert_eq!(l1.fp(), l2.fp(), "components must share p");
        assert_eq!(l1.fp(), l3.fp(), "components must share p");
        assert_eq!(l1.length(), l2.length(), "components must share m");
        assert_eq!(l1.length(), l3.length(), "components must share m");
        SigmaTriple { l1, l2, l3 }
    }

    /// The triple of ideals (⟨h1⟩, ⟨h2⟩, ⟨h3⟩) with h1 | a^m - 1 and
    /// h2, h3 | a^m + 1.
    pub fn from_divisors(fp: Fp, m: usize, h: [&PolyFp; 3]) -> SigmaTriple {
        SigmaTriple::new(
            LinearCodeFp::from_generator_poly(fp, m, h[0], ShiftKind::Alpha),
            LinearCodeFp::from_generator_poly(fp, m, h[1], ShiftKind::Beta),
            LinearCodeFp::from_generator_poly(fp, m, h[2], ShiftKind::Beta),
        )
    }

    #[inline]
    pub fn fp(&self) -> Fp {
        self.l1.fp()
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.l1.length()
    }

    pub fn component(&self, i: usize) -> &LinearCodeFp {
        match i {
            0 => &self.l1,
            1 => &self.l2,
            2 => &self.l3,
            _ => panic!("component index must be 0, 1, or 2"),
        }
    }

    pub fn equals(&self, other: &SigmaTriple) -> bool {
        self.l1.equals(&other.l1) && self.l2.equals(&other.l2) && self.l3.equals(&other.l3)
    }

    /// The code sigma_1 L_1 + sigma_2 L_2 + sigma_3 L_3 over R.  Gated on
    /// k = 2, where the sigmas are orthogonal idempotents and the sum is
    /// direct.
    pub fn build(&self, ctx: RingCtx) -> Result<ConstaCodeR> {
        require_k2(ctx)?;
        assert_eq!(ctx.fp(), self.fp(), "ring context must share p with the components");
        let m = self.length();
        let mut rows = Vec::new();
        for i in 0..3 {
            let sigma = ctx.sigma(i as u8 + 1)?;
            for row in self.component(i).basis().rows() {
                rows.push(row.iter().map(|&c| sigma.scale(c)).collect());
            }
        }
        Ok(ConstaCodeR::new(ctx, m, rows))
    }

    /// Monic generator polynomials (h1, h2, h3) of the components, each a
    /// divisor of its slot modulus (a^m - 1, a^m + 1, a^m + 1).
    pub fn generator_polys(&self) -> Result<[PolyFp; 3]> {
        Ok([
            self.l1.generator_polynomial(ShiftKind::Alpha)?,
            self.l2.generator_polynomial(ShiftKind::Beta)?,
            self.l3.generator_polynomial(ShiftKind::Beta)?,
        ])
    }

    /// Cofactors (k1, k2, k3) with h_i k_i = a^m -/+ 1 per slot.
    pub fn cofactors(&self) -> Result<[PolyFp; 3]> {
        let h = self.generator_polys()?;
        let fp = self.fp();
        let m = self.length();
        let moduli = [
            PolyFp::binomial(fp, m, 1),
            PolyFp::binomial(fp, m, -1),
            PolyFp::binomial(fp, m, -1),
        ];
        let mut out = Vec::with_capacity(3);
        for (hi, modulus) in h.iter().zip(&moduli) {
            let (q, r) = modulus.divmod(hi)?;
            debug_assert!(r.is_zero(), "generator polynomials divide their modulus");
            out.push(q);
        }
        Ok(out.try_into().expect("three cofactors"))
    }

    /// The single generator h(a) = sigma_1 h_1 + sigma_2 h_2 + sigma_3 h_3
    /// with ⟨h⟩ = build(self) in R[a]/(a^m - lambda).  Gated on k = 2.
    pub fn single_generator(&self, ctx: RingCtx) -> Result<PolyR> {
        require_k2(ctx)?;
        let h = self.generator_polys()?;
        sigma_combine(ctx, [&h[0], &h[1], &h[2]])
    }

    /// h(a), k(a) = sigma-combined cofactors, and the symbolic verdict of
    /// h(a)·k(a) = a^m - lambda in R[a].
    pub fn check_hk(&self, ctx: RingCtx) -> Result<HkReport> {
        require_k2(ctx)?;
        let hs = self.generator_polys()?;
        let ks = self.cofactors()?;
        let h = sigma_combine(ctx, [&hs[0], &hs[1], &hs[2]])?;
        let kpoly = sigma_combine(ctx, [&ks[0], &ks[1], &ks[2]])?;
        let modulus = lambda_modulus(ctx, self.length());
        let product = h.mul(&kpoly);
        Ok(HkReport { holds: product == modulus, h, k: kpoly, product, modulus })
    }

    /// Dual construction from reciprocal polynomials: the triple
    /// (⟨k1*⟩, ⟨k2*⟩, ⟨k3*⟩), its built code, the single generator
    /// k*(a) = sigma-combined reciprocals, and the predicted cardinality
    /// p^{deg h_1 + deg h_2 + deg h_3}.  Gated on k = 2.
    pub fn dual_via_reciprocal(&self, ctx: RingCtx) -> Result<ReciprocalDual> {
        require_k2(ctx)?;
        let hs = self.generator_polys()?;
        let ks = self.cofactors()?;
        let kstars = [ks[0].reciprocal()?, ks[1].reciprocal()?, ks[2].reciprocal()?];
        let triple = SigmaTriple::from_divisors(self.fp(), self.length(), [
            &kstars[0], &kstars[1], &kstars[2],
        ]);
        let code = triple.build(ctx)?;
        let single = sigma_combine(ctx, [&kstars[0], &kstars[1], &kstars[2]])?;
        let sum_deg: u32 = hs.iter().map(|h| h.degree().unwrap_or(0) as u32).sum();
        let predicted_size = u128::from(ctx.p()).pow(sum_deg);
        Ok(ReciprocalDual { kstars, triple, code, single, predicted_size })
    }

    /// Componentwise dual triple (L1^perp, L2^perp, L3^perp).
    pub fn dual_components(&self) -> SigmaTriple {
        SigmaTriple::new(self.l1.dual(), self.l2.dual(), self.l3.dual())
    }
}

/// a^m - lambda as a polynomial over R.
pub fn lambda_modulus(ctx: RingCtx, m: usize) -> PolyR {
    let mut c = vec![ctx.zero(); m + 1];
    c[0] = ctx.lambda().neg();
    c[m] = ctx.one();
    PolyR::new(ctx, c)
}

/// Outcome of the symbolic product check h(a)·k(a) = a^m - lambda.
#[derive(Debug, Clone)]
pub struct HkReport {
    pub h: PolyR,
    pub k: PolyR,
    pub product: PolyR,
    pub modulus: PolyR,
    pub holds: bool,
}

/// Outcome of the reciprocal-polynomial dual construction.
#[derive(Debug, Clone)]
pub struct ReciprocalDual {
    pub kstars: [PolyFp; 3],
    pub triple: SigmaTriple,
    pub code: ConstaCodeR,
    pub single: PolyR,
    pub predicted_size: u128,
}

/// On-disk description of a code.  R-codes store k >= 1 and one ascending
/// u-coefficient list per coordinate; plain F_p codes use k = 0 with
/// single-entry coefficient lists.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CodeFile {
    pub p: u32,
    pub k: u32,
    pub m: u32,
    pub unit: UnitKind,
    pub generators: Vec<Vec<Vec<u32>>>,
}

/// Which shift the file's code is stated to respect.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum UnitKind {
    Cyclic,
    Negacyclic,
    Lambda,
}

impl UnitKind {
    pub fn shift(self) -> ShiftKind {
        match self {
            UnitKind::Cyclic => ShiftKind::Alpha,
            UnitKind::Negacyclic => ShiftKind::Beta,
            UnitKind::Lambda => ShiftKind::Gamma,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            UnitKind::Cyclic => "cyclic",
            UnitKind::Negacyclic => "negacyclic",
            UnitKind::Lambda => "lambda",
        }
    }
}

impl CodeFile {
    pub fn from_json(text: &str) -> Result<CodeFile> {
        let file: CodeFile =
            serde_json::from_str(text).map_err(|e| Error::BadPayload(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("static schema serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let fp = Fp::new_odd(self.p)?;
        if self.m == 0 {
            return Err(Error::InvalidLength(0));
        }
        if self.k > 64 {
            return Err(Error::InvalidK(u64::from(self.k)));
        }
        if self.k == 0 && self.unit == UnitKind::Lambda {
            return Err(Error::BadPayload(
                "unit \"lambda\" requires k >= 1".to_string(),
            ));
        }
        let width = self.k as usize + 1;
        for row in &self.generators {
            if row.len() != self.m as usize {
                return Err(Error::BadVectorLength {
                    expected: self.m as usize,
                    got: row.len(),
                });
            }
            for coord in row {
                if coord.len() != width {
                    return Err(Error::BadVectorLength { expected: width, got: coord.len() });
                }
                if coord.iter().any(|&x| x >= fp.modulus()) {
                    return Err(Error::BadPayload(format!(
                        "coefficient out of range for p = {}",
                        self.p
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn for_r_code(code: &ConstaCodeR, unit: UnitKind) -> CodeFile {
        let ctx = code.ctx();
        CodeFile {
            p: ctx.p(),
            k: ctx.k() as u32,
            m: code.length() as u32,
            unit,
            generators: code
                .generator_rows()
                .iter()
                .map(|g| g.iter().map(|x| x.coeffs().to_vec()).collect())
                .collect(),
        }
    }

    pub fn for_fp_code(code: &LinearCodeFp, unit: UnitKind) -> CodeFile {
        CodeFile {
            p: code.fp().modulus(),
            k: 0,
            m: code.length() as u32,
            unit,
            generators: code
                .generator_rows()
                .iter()
                .map(|g| g.iter().map(|&c| vec![c]).collect())
                .collect(),
        }
    }

    pub fn is_fp_layout(&self) -> bool {
        self.k == 0
    }

    /// Reconstruct the R-code (k >= 1 layout).
    pub fn as_r_code(&self) -> Result<ConstaCodeR> {
        self.validate()?;
        if self.k == 0 {
            return Err(Error::InvalidK(0));
        }
        let ctx = RingCtx::new(self.p, self.k as usize)?;
        let rows = self
            .generators
            .iter()
            .map(|g| g.iter().map(|c| ctx.from_coeffs(c.clone())).collect())
            .collect();
        Ok(ConstaCodeR::new(ctx, self.m as usize, rows))
    }

    /// Reconstruct the F_p code (k = 0 layout).
    pub fn as_fp_code(&self) -> Result<LinearCodeFp> {
        self.validate()?;
        if self.k != 0 {
            return Err(Error::InvalidK(u64::from(self.k)));
        }
        let fp = Fp::new_odd(self.p)?;
        let rows = self
            .generators
            .iter()
            .map(|g| g.iter().map(|c| c[0]).collect())
            .collect();
        Ok(LinearCodeFp::new(fp, self.m as usize, rows))
    }
}
