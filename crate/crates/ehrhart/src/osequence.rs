//! The Macaulay growth apparatus for finite nonnegative integer sequences:
//! i-binomial expansions, the `h^{<i>}` operator, O-sequence and
//! differentiable-O-sequence predicates, the Macaulay bound, the
//! Gorenstein-sequence criterion for `h_1 <= 3`, level and partial-sum
//! inequalities, unimodality and palindromy.
//!
//! Sequences are stored untruncated; predicates whose statement assumes a
//! nonzero last entry (level, partial sums, Gorenstein) work on the
//! truncation to the last nonzero entry.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::binomial;
use crate::Int;

/// A finite sequence of nonnegative integers `h_0..h_s`.
#[derive(Clone, PartialEq, Eq)]
pub struct HSequence {
    entries: Vec<Int>,
}

impl fmt::Debug for HSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HSequence{:?}", self.entries)
    }
}

impl HSequence {
    pub fn new(entries: Vec<Int>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("empty sequence".into()));
        }
        if let Some(bad) = entries.iter().find(|e| e.is_negative()) {
            return Err(Error::InvalidInput(format!("negative entry {bad}")));
        }
        Ok(Self { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| Int::from(e)).collect())
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one entry
    }

    /// Largest index with a nonzero entry; `None` for the zero sequence.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().rposition(|e| !e.is_zero())
    }

    /// The sequence with trailing zeros removed (at least one entry kept).
    pub fn truncated(&self) -> HSequence {
        let last = self.degree().unwrap_or(0);
        HSequence {
            entries: self.entries[..=last].to_vec(),
        }
    }

    fn entry(&self, i: usize) -> Int {
        self.entries.get(i).cloned().unwrap_or_else(Int::zero)
    }

    /// Macaulay's characterization: `h_0 = 1` and
    /// `h_{n+1} <= h_n^{<n>}` for every `n >= 1` inside the sequence.
    /// `h_1` is unconstrained beyond nonnegativity.
    pub fn is_o_sequence(&self) -> bool {
        if !self.entries[0].is_one() {
            return false;
        }
        for n in 1..self.entries.len().saturating_sub(1) {
            if self.entries[n + 1] > macaulay_power(&self.entries[n], n as u32) {
                return false;
            }
        }
        true
    }

    /// O-sequence whose first-difference sequence
    /// `(h_0, h_1-h_0, h_2-h_1, ...)` is again an O-sequence.
    /// A negative difference disqualifies immediately.
    pub fn is_differentiable_o_sequence(&self) -> bool {
        if !self.is_o_sequence() {
            return false;
        }
        match self.difference_sequence() {
            Some(diff) => diff.is_o_sequence(),
            None => false,
        }
    }

    /// First differences with `h_{-1} = 0`; `None` if any step decreases.
    pub fn difference_sequence(&self) -> Option<HSequence> {
        let mut diff = Vec::with_capacity(self.entries.len());
        let mut prev = Int::zero();
        for e in &self.entries {
            let d = e - &prev;
            if d.is_negative() {
                return None;
            }
            diff.push(d);
            prev = e.clone();
        }
        Some(HSequence { entries: diff })
    }

    /// `h_i <= C(h_1 + i - 1, i)` for every `i >= 1`.
    pub fn macaulay_bound_holds(&self) -> bool {
        let h1 = self.entry(1);
        for (i, h) in self.entries.iter().enumerate().skip(1) {
            let bound = binomial(&(&h1 + Int::from(i as u64 - 1)), i as u32);
            if *h > bound {
                return false;
            }
        }
        true
    }

    /// Gorenstein-sequence criterion, valid only for `h_1 <= 3`: symmetric
    /// and differentiable up to the middle. Refuses larger `h_1` rather
    /// than guessing.
    pub fn is_gorenstein_sequence_h1_le_3(&self) -> Result<bool> {
        let t = self.truncated();
        let h1 = t.entry(1);
        if h1 > Int::from(3) {
            return Err(Error::CriterionInapplicable(format!(
                "the symmetry-plus-differentiability criterion requires h_1 <= 3, got h_1 = {h1}"
            )));
        }
        let s = t.entries.len() - 1;
        if !t.is_palindromic() {
            return Ok(false);
        }
        let half = s / 2;
        let mut diff = Vec::with_capacity(half + 1);
        let mut prev = Int::zero();
        for e in &t.entries[..=half] {
            let d = e - &prev;
            if d.is_negative() {
                return Ok(false);
            }
            diff.push(d);
            prev = e.clone();
        }
        Ok(HSequence { entries: diff }.is_o_sequence())
    }

    /// All `(i, j)` with `i, j >= 0`, `i + j <= s` violating
    /// `h_i <= h_j * h_{i+j}` on the truncated sequence.
    pub fn level_violations(&self) -> Vec<(usize, usize)> {
        let t = self.truncated();
        let s = t.entries.len() - 1;
        let mut out = Vec::new();
        for i in 0..=s {
            for j in 0..=(s - i) {
                if t.entries[i] > &t.entries[j] * &t.entries[i + j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All `(m, n)` with `m >= 0`, `n >= 1`, `m + n < s` violating
    /// `h_1 + ... + h_n <= h_{m+1} + ... + h_{m+n}` on the truncated
    /// sequence.
    pub fn partial_sum_violations(&self) -> Vec<(usize, usize)> {
        let t = self.truncated();
        let s = t.entries.len() - 1;
        // prefix[i] = h_0 + ... + h_{i-1}
        let mut prefix = vec![Int::zero()];
        for e in &t.entries {
            prefix.push(prefix.last().unwrap() + e);
        }
        let sum = |a: usize, b: usize| &prefix[b + 1] - &prefix[a]; // h_a + ... + h_b
        let mut out = Vec::new();
        for m in 0..s {
            for n in 1..s - m {
                if sum(1, n) > sum(m + 1, m + n) {
                    out.push((m, n));
                }
            }
        }
        out
    }

    /// Weakly rises, then weakly falls.
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for w in self.entries.windows(2) {
            if w[1] > w[0] {
                if falling {
                    return false;
                }
            } else if w[1] < w[0] {
                falling = true;
            }
        }
        true
    }

    /// `h_i = h_{L-i}` over the full stored length (no truncation).
    pub fn is_palindromic(&self) -> bool {
        let n = self.entries.len();
        (0..n / 2).all(|i| self.entries[i] == self.entries[n - 1 - i])
    }
}

/// One term `C(n, k)` of a binomial expansion.
pub type ExpansionTerm = (Int, u32);

/// The unique greedy expansion `h = C(n_i, i) + ... + C(n_j, j)` with
/// `1 <= j <= n_j < ... < n_i`, terms stored with descending lower index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialExpansion {
    terms: Vec<ExpansionTerm>,
}

impl BinomialExpansion {
    pub fn terms(&self) -> &[ExpansionTerm] {
        &self.terms
    }

    /// Reconstructs the expanded number.
    pub fn value(&self) -> Int {
        self.terms.iter().map(|(n, k)| binomial(n, *k)).sum()
    }

    /// `h^{<i>}`: every `C(n, k)` shifted to `C(n+1, k+1)`.
    pub fn shifted_value(&self) -> Int {
        self.terms
            .iter()
            .map(|(n, k)| binomial(&(n + Int::one()), *k + 1))
            .sum()
    }
}

/// The i-binomial expansion of a positive integer.
pub fn binomial_expansion(h: &Int, i: u32) -> Result<BinomialExpansion> {
    if !h.is_positive() {
        return Err(Error::InvalidInput(format!("expansion needs h >= 1, got {h}")));
    }
    if i == 0 {
        return Err(Error::InvalidInput("expansion needs i >= 1".into()));
    }
    let mut terms = Vec::new();
    let mut rem = h.clone();
    let mut k = i;
    while rem.is_positive() {
        // greedy: n_k = max{ n : C(n, k) <= rem }
        let mut n = Int::from(k);
        loop {
            let next = &n + Int::one();
            if binomial(&next, k) > rem {
                break;
            }
            n = next;
        }
        rem -= binomial(&n, k);
        if let Some((prev_n, _)) = terms.last() {
            debug_assert!(n < *prev_n, "greedy terms must strictly decrease");
        }
        terms.push((n, k));
        // k = 1 always clears the remainder since C(n, 1) = n
        debug_assert!(k > 1 || rem.is_zero());
        k -= 1;
    }
    Ok(BinomialExpansion { terms })
}

/// Macaulay's `h^{<i>}`, with `0^{<i>} = 0`.
pub fn macaulay_power(h: &Int, i: u32) -> Int {
    if h.is_zero() {
        return Int::zero();
    }
    binomial_expansion(h, i)
        .expect("h >= 1 by the zero check")
        .shifted_value()
}
