//! The Gray map on R and R^m, its inverse at k = 2, and the Nechaev
//! permutation machinery on F_p vectors.
//!
//! The element-level map sends a_0 + a_1 u + ... + a_k u^k to the tuple
//! (-a_k, a_1, a_3, ..., 2a_0 + a_k): the negated top coefficient, then the
//! odd-index coefficients below k, then 2a_0 + a_k.  At k = 2 this is a
//! bijection R -> F_p^3; for k >= 3 the even-index coefficients
//! a_2, a_4, ... are absent from the tuple, so the map has a nontrivial
//! kernel, which [`GrayLayout::kernel_witness`] exhibits.  The extension to
//! R^m is block-major: all first components, then all second components,
//! and so on.

use crate::codes::{contract_vector, ConstaCodeR, LinearCodeFp};
use crate::error::{Error, Result};
use crate::ring::{RingCtx, RingElem};
use serde::{Deserialize, Serialize};

/// The ordered list of F_p-linear functionals defining the Gray map for
/// one ring context.
#[derive(Debug, Clone)]
pub struct GrayLayout {
    ctx: RingCtx,
    functionals: Vec<Vec<u32>>,
}

impl GrayLayout {
    pub fn new(ctx: RingCtx) -> GrayLayout {
        let fp = ctx.fp();
        let k = ctx.k();
        let width = ctx.width();
        let mut functionals = Vec::with_capacity(2 + k / 2);
        let mut row = vec![0u32; width];
        row[k] = fp.neg(1);
        functionals.push(row);
        for j in (1..k).filter(|j| j % 2 == 1) {
            let mut row = vec![0u32; width];
            row[j] = 1;
            functionals.push(row);
        }
        let mut row = vec![0u32; width];
        row[0] = fp.elem(2);
        row[k] = fp.add(row[k], 1);
        functionals.push(row);
        GrayLayout { ctx, functionals }
    }

    #[inline]
    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    /// Number of output components per ring element: 2 + floor(k/2).
    #[inline]
    pub fn image_width(&self) -> usize {
        self.functionals.len()
    }

    /// The functionals as rows of length k+1 (ascending u-powers).
    pub fn functionals(&self) -> &[Vec<u32>] {
        &self.functionals
    }

    /// Gray image of a single ring element, length [`Self::image_width`].
    pub fn gray_elem(&self, x: &RingElem) -> Vec<u32> {
        assert_eq!(x.ctx(), self.ctx, "element context must match the layout");
        let fp = self.ctx.fp();
        self.functionals
            .iter()
            .map(|row| fp.dot(row, x.coeffs()))
            .collect()
    }

    /// Block-major Gray image of an R-vector: output position t*m + i
    /// holds functional t applied to coordinate i.
    pub fn gray_map(&self, v: &[RingElem]) -> Vec<u32> {
        let m = v.len();
        let n = self.image_width();
        let fp = self.ctx.fp();
        let mut out = vec![0u32; n * m];
        for (i, x) in v.iter().enumerate() {
            assert_eq!(x.ctx(), self.ctx, "element context must match the layout");
            for (t, row) in self.functionals.iter().enumerate() {
                out[t * m + i] = fp.dot(row, x.coeffs());
            }
        }
        out
    }

    /// Inverse of the element-level map; defined only at k = 2, where
    /// a_2 = -w_0, a_1 = w_1, a_0 = (w_2 + w_0)/2.
    pub fn gray_inverse(&self, w: &[u32]) -> Result<RingElem> {
        if self.ctx.k() != 2 {
            return Err(Error::GrayNotInvertible(self.ctx.k() as u32));
        }
        if w.len() != 3 {
            return Err(Error::BadVectorLength { expected: 3, got: w.len() });
        }
        let fp = self.ctx.fp();
        let half = fp.half().expect("p is odd");
        let a2 = fp.neg(w[0]);
        let a1 = w[1];
        let a0 = fp.mul(half, fp.add(w[2], w[0]));
        Ok(self.ctx.from_coeffs(vec![a0, a1, a2]))
    }

    /// Blockwise inverse of [`Self::gray_map`] (k = 2 only).
    pub fn gray_inverse_vec(&self, w: &[u32]) -> Result<Vec<RingElem>> {
        if self.ctx.k() != 2 {
            return Err(Error::GrayNotInvertible(self.ctx.k() as u32));
        }
        let n = self.image_width();
        if w.len() % n != 0 {
            return Err(Error::BadVectorLength { expected: n, got: w.len() });
        }
        let m = w.len() / n;
        (0..m)
            .map(|i| {
                let coords: Vec<u32> = (0..n).map(|t| w[t * m + i]).collect();
                self.gray_inverse(&coords)
            })
            .collect()
    }

    /// A nonzero element with zero Gray image, when one exists: u^2 for
    /// k >= 3 (its coefficient a_2 appears in no functional).  None for
    /// k <= 2, where the map is injective.
    pub fn kernel_witness(&self) -> Option<RingElem> {
        if self.ctx.k() >= 3 {
            Some(self.ctx.monomial(2))
        } else {
            None
        }
    }
}

/// Gray image of a code over R: the F_p-span of the images of an
/// F_p-basis of the code (the map is F_p-linear, so this is the exact
/// image set).  Length image_width * m.
pub fn gray_image(layout: &GrayLayout, code: &ConstaCodeR) -> LinearCodeFp {
    let ctx = code.ctx();
    assert_eq!(ctx, layout.ctx(), "layout and code contexts must match");
    let rows: Vec<Vec<u32>> = code
        .expansion()
        .rows()
        .iter()
        .map(|w| layout.gray_map(&contract_vector(ctx, w)))
        .collect();
    LinearCodeFp::new(ctx.fp(), layout.image_width() * code.length(), rows)
}

/// A permutation of {0, ..., n-1}, stored as its image array; applying it
/// to a vector v yields out[i] = v[image[i]].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::BadPayload(format!(
                    "image array of length {n} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.image.len(), "vector length must match the permutation");
        self.image.iter().map(|&j| v[j]).collect()
    }

    /// self then other: (other ∘ self)(v) = other.apply(self.apply(v)).
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation { image: other.image.iter().map(|&j| self.image[j]).collect() }
    }
}

/// The involution psi on {0, ..., 2m-1} for odd m: the product of the
/// transpositions (2i+1, m+2i+1) for odd positions 2i+1 <= m-2.
pub fn nechaev_psi(m: usize) -> Result<Permutation> {
    if m % 2 == 0 {
        return Err(Error::EvenLength(m as u64));
    }
    let mut image: Vec<usize> = (0..2 * m).collect();
    let mut j = 1;
    while j + 2 <= m {
        image.swap(j, m + j);
        j += 2;
    }
    Ok(Permutation { image })
}

/// The permutation of {0, ..., 3m-1} acting as psi on the first 2m
/// positions and as the identity on the last m.
pub fn nechaev_rho_perm(m: usize) -> Result<Permutation> {
    let psi = nechaev_psi(m)?;
    let mut image = psi.image;
    image.extend(2 * m..3 * m);
    Ok(Permutation { image })
}

/// Apply the Nechaev permutation to a vector of length 3m (m odd):
/// out[i] = w[psi(i)] on the first 2m positions, identity on the rest.
pub fn nechaev_rho(w: &[u32]) -> Result<Vec<u32>> {
    if w.len() % 3 != 0 {
        return Err(Error::InvalidLength(w.len() as u64));
    }
    let m = w.len() / 3;
    Ok(nechaev_rho_perm(m)?.apply(w))
}

/// Coordinate-permuted code {perm(w) : w in code}.
pub fn permute_code(code: &LinearCodeFp, perm: &Permutation) -> LinearCodeFp {
    assert_eq!(code.length(), perm.len(), "permutation length must match the code length");
    let rows = code.generator_rows().iter().map(|r| perm.apply(r)).collect();
    LinearCodeFp::new(code.fp(), code.length(), rows)
}
