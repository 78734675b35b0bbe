//! Row spaces over F_p in reduced row-echelon form.
//!
//! [`RowBasis`] is the workhorse behind every code in this crate: it keeps a
//! canonical RREF basis of a subspace of F_p^n, so membership, equality of
//! spans, duals, and codeword enumeration are all cheap and deterministic.

use crate::field::Fp;

/// A subspace of F_p^width held as a reduced row-echelon basis.
///
/// The representation is canonical: two `RowBasis` values describe the same
/// subspace exactly when their `rows` agree, regardless of the order or
/// redundancy of the vectors they were built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowBasis {
    fp: Fp,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowBasis {
    /// The zero subspace of F_p^width.
    pub fn empty(fp: Fp, width: usize) -> Self {
        RowBasis { fp, width, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Span of the given rows.
    pub fn from_rows<I>(fp: Fp, width: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut b = Self::empty(fp, width);
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The RREF basis rows (no zero rows, pivots strictly increasing).
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis; the result is the canonical coset
    /// representative (zero iff `v` lies in the span).
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let fp = self.fp;
        let mut w = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c != 0 {
                for (wj, rj) in w.iter_mut().zip(row) {
                    *wj = fp.sub(*wj, fp.mul(c, *rj));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Insert a vector, keeping the basis in RREF.  Returns `true` when the
    /// rank grew.
    pub fn insert(&mut self, v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let fp = self.fp;
        let mut w = self.reduce(&v);
        let Some(piv) = w.iter().position(|&c| c != 0) else {
            return false;
        };
        // Normalize the new row to a leading 1.
        let lead_inv = fp.inv(w[piv]).expect("nonzero entry in a prime field is invertible");
        for c in w.iter_mut() {
            *c = fp.mul(*c, lead_inv);
        }
        // Clear the pivot column from the existing rows.
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (rj, wj) in row.iter_mut().zip(&w) {
                    *rj = fp.sub(*rj, fp.mul(c, *wj));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, w);
        true
    }

    /// Whether the two bases span the same subspace.
    pub fn spans_same(&self, other: &RowBasis) -> bool {
        self.rows == other.rows
    }

    /// Whether every vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &RowBasis) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Canonical basis of `{x : r . x = 0 for every basis row r}`.
    ///
    /// Treats the basis rows as the coefficient matrix of a homogeneous
    /// system; the free-variable construction on the RREF yields one basis
    /// vector per non-pivot column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let fp = self.fp;
        let mut out = Vec::new();
        for free in 0..self.width {
            if self.pivots.contains(&free) {
                continue;
            }
            let mut x = vec![0u32; self.width];
            x[free] = 1;
            for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                // Pivot variable = -(coefficient of the free column).
                x[piv] = fp.neg(row[free]);
            }
            out.push(x);
        }
        out
    }

    /// Number of vectors in the span, if it fits in a `u128`.
    pub fn span_size(&self) -> Option<u128> {
        let p = u128::from(self.fp.modulus());
        let mut n = 1u128;
        for _ in 0..self.rank() {
            n = n.checked_mul(p)?;
        }
        Some(n)
    }

    /// Iterate over every vector in the span, deterministically.
    ///
    /// Enumeration is a p-ary odometer over basis coefficients with the
    /// first basis row varying fastest; p^rank items in total.
    pub fn iter_span(&self) -> SpanIter<'_> {
        SpanIter {
            basis: self,
            digits: vec![0; self.rank()],
            current: vec![0; self.width],
            done: false,
        }
    }
}

/// Iterator over all vectors of a [`RowBasis`] span.
pub struct SpanIter<'a> {
    basis: &'a RowBasis,
    digits: Vec<u32>,
    current: Vec<u32>,
    done: bool,
}

impl Iterator for SpanIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let fp = self.basis.fp;
        let p = fp.modulus();
        // Advance the odometer; adding row j once per increment of digit j
        // keeps `current` equal to sum(digit_j * row_j) without recomputing.
        let mut j = 0;
        loop {
            if j == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[j] += 1;
            for (c, r) in self.current.iter_mut().zip(&self.basis.rows[j]) {
                *c = fp.add(*c, *r);
            }
            if self.digits[j] < p {
                break;
            }
            self.digits[j] = 0;
            j += 1;
        }
        Some(out)
    }
}

/// Enumerate every subspace of F_p^m as a canonical `RowBasis`, ordered by
/// rank, then pivot-column pattern, then free-entry assignment.
///
/// This walks all reduced row-echelon forms directly, so each subspace
/// appears exactly once.  Counts match the Gaussian binomials (28 subspaces
/// of F_3^3, 64 of F_5^3, ...).  Intended for small m and p.
pub fn all_subspaces(fp: Fp, m: usize) -> Vec<RowBasis> {
    let p = fp.modulus();
    let mut out = Vec::new();
    for rank in 0..=m {
        for pivots in combinations(m, rank) {
            // Free positions: entries (i, j) with j > pivots[i], j not a pivot.
            let mut free_pos = Vec::new();
            for (i, &pi) in pivots.iter().enumerate() {
                for j in (pi + 1)..m {
                    if !pivots.contains(&j) {
                        free_pos.push((i, j));
                    }
                }
            }
            let mut assignment = vec![0u32; free_pos.len()];
            loop {
                let mut rows = vec![vec![0u32; m]; rank];
                for (i, &pi) in pivots.iter().enumerate() {
                    rows[i][pi] = 1;
                }
                for (&(i, j), &c) in free_pos.iter().zip(&assignment) {
                    rows[i][j] = c;
                }
                out.push(RowBasis { fp, width: m, rows, pivots: pivots.clone() });
                // Advance the assignment odometer (first position fastest).
                let mut t = 0;
                loop {
                    if t == assignment.len() {
                        break;
                    }
                    assignment[t] += 1;
                    if assignment[t] < p {
                        break;
                    }
                    assignment[t] = 0;
                    t += 1;
                }
                if assignment.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }
    }
    out
}

/// All sorted `r`-element subsets of `0..n`, in lexicographic order.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            cur.push(j);
            rec(j + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}
