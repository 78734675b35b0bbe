//! Enumeration domains for the claim checks: divisor triples, subspace
//! triples, pointwise vector spaces, and deterministic index sampling.

use crate::codes::{ConstaCodeR, LinearCodeFp, ShiftKind, SigmaTriple};
use crate::error::Result;
use crate::field::Fp;
use crate::linalg::RowBasis;
use crate::poly::PolyFp;
use crate::ring::{RingCtx, RingElem};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Caps, ClaimId, Strategy};

/// Stable per-(claim, params) seed so that sampled checks are reproducible
/// and independent of suite ordering.  FNV-1a over the identifying data.
pub(crate) fn derive_seed(seed: u64, claim: ClaimId, p: u32, k: u32, m: Option<u32>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |v: u64| {
        h ^= v;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    };
    eat(seed);
    for &b in claim.as_str().as_bytes() {
        eat(u64::from(b));
    }
    eat(u64::from(p));
    eat(u64::from(k));
    eat(m.map_or(u64::MAX, u64::from));
    h
}

/// Visit every index of a domain when it fits under the cap, or a seeded
/// sample of `caps.sample_size` indices otherwise.  Returns the strategy
/// used and the number of visits.
pub(crate) fn for_each_index<F: FnMut(u128)>(
    size: u128,
    caps: &Caps,
    rng: &mut ChaCha8Rng,
    mut visit: F,
) -> (Strategy, u64) {
    if size <= u128::from(caps.enum_cap) {
        for i in 0..size {
            visit(i);
        }
        (Strategy::Exhaustive, size as u64)
    } else {
        for _ in 0..caps.sample_size {
            visit(rng.gen_range(0..size));
        }
        (Strategy::Sampled, caps.sample_size)
    }
}

/// A three-way product domain, indexed with the first slot varying
/// fastest.
pub(crate) struct Triples {
    n1: usize,
    n2: usize,
    n3: usize,
}

impl Triples {
    pub(crate) fn new(n1: usize, n2: usize, n3: usize) -> Triples {
        Triples { n1, n2, n3 }
    }

    pub(crate) fn size(&self) -> u128 {
        self.n1 as u128 * self.n2 as u128 * self.n3 as u128
    }

    pub(crate) fn at(&self, idx: u128) -> (usize, usize, usize) {
        let i1 = (idx % self.n1 as u128) as usize;
        let rest = idx / self.n1 as u128;
        let i2 = (rest % self.n2 as u128) as usize;
        let i3 = (rest / self.n2 as u128) as usize;
        debug_assert!(i3 < self.n3);
        (i1, i2, i3)
    }
}

/// Monic divisor lists of a^m - 1 and a^m + 1 over F_p, in canonical
/// enumeration order.
pub(crate) fn slot_divisor_lists(fp: Fp, m: usize) -> Result<(Vec<PolyFp>, Vec<PolyFp>)> {
    let cyclic = PolyFp::binomial(fp, m, 1).divisors(0)?;
    let nega = PolyFp::binomial(fp, m, -1).divisors(0)?;
    Ok((cyclic, nega))
}

/// The component triple generated by the given slot divisors, with the
/// stated shift kind per slot.
pub(crate) fn triple_from(
    fp: Fp,
    m: usize,
    h: [&PolyFp; 3],
    kinds: [ShiftKind; 3],
) -> SigmaTriple {
    SigmaTriple::new(
        LinearCodeFp::from_generator_poly(fp, m, h[0], kinds[0]),
        LinearCodeFp::from_generator_poly(fp, m, h[1], kinds[1]),
        LinearCodeFp::from_generator_poly(fp, m, h[2], kinds[2]),
    )
}

pub(crate) const LAMBDA_KINDS: [ShiftKind; 3] = [ShiftKind::Alpha, ShiftKind::Beta, ShiftKind::Beta];
pub(crate) const CYCLIC_KINDS: [ShiftKind; 3] = [ShiftKind::Alpha, ShiftKind::Alpha, ShiftKind::Alpha];

/// The module spanned by sigma_1 S_1 + sigma_2 S_2 + sigma_3 S_3 for three
/// F_p-subspaces; for k = 2 this parameterizes every R-submodule of R^m.
pub(crate) fn subspace_code(
    ctx: RingCtx,
    m: usize,
    spaces: [&RowBasis; 3],
) -> Result<ConstaCodeR> {
    let fp = ctx.fp();
    let triple = SigmaTriple::new(
        LinearCodeFp::new(fp, m, spaces[0].rows().to_vec()),
        LinearCodeFp::new(fp, m, spaces[1].rows().to_vec()),
        LinearCodeFp::new(fp, m, spaces[2].rows().to_vec()),
    );
    triple.build(ctx)
}

/// The pointwise domain R^m, indexed with coordinate 0 varying fastest and
/// each coordinate in element-index order.
pub(crate) struct Vectors {
    ctx: RingCtx,
    m: usize,
    per: u64,
}

impl Vectors {
    pub(crate) fn new(ctx: RingCtx, m: usize) -> Vectors {
        let per = ctx
            .element_count()
            .expect("element count fits for desk-scale parameters");
        Vectors { ctx, m, per }
    }

    pub(crate) fn size(&self) -> u128 {
        // saturate rather than overflow: anything this large is sampled anyway
        u128::from(self.per)
            .checked_pow(self.m as u32)
            .unwrap_or(u128::MAX)
    }

    pub(crate) fn at(&self, idx: u128) -> Vec<RingElem> {
        let mut rest = idx;
        (0..self.m)
            .map(|_| {
                let e = (rest % u128::from(self.per)) as u64;
                rest /= u128::from(self.per);
                self.ctx.elem_from_index(e)
            })
            .collect()
    }
}

/// Elements of the quotient R[a]/(a^m - unit), represented as coefficient
/// vectors of degree < m; shares the [`Vectors`] indexing.
pub(crate) type QuotientElems = Vectors;
