//! Type-A Weyl group combinatorics.
//!
//! Permutations are stored in one-line notation with 1-based values. A word
//! `[a₁, …, a_l]` stands for the product `s_{a₁} ⋯ s_{a_l}` acting as function
//! composition, rightmost letter first: `w(x) = s_{a₁}(⋯ s_{a_l}(x))`. Minimal
//! coset representatives of `W / W_{S∖{α_r}}` are handled through their
//! images `{w(1), …, w(r)}` as [`RSubset`]s.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::params::GrassParams;

/// Strictly increasing `r`-subset of `{1, …, n}`.
///
/// Doubles as a Plücker index, a torus-fixed point of `G(r,n)` and a minimal
/// coset representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RSubset {
    elems: Vec<u32>,
}

impl RSubset {
    pub fn new(elems: Vec<u32>, n: u32) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::domain("subset must be non-empty"));
        }
        if elems[0] == 0 || *elems.last().unwrap() > n {
            return Err(Error::domain(format!("subset {elems:?} not inside 1..={n}")));
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!("subset {elems:?} is not strictly increasing")));
        }
        Ok(RSubset { elems })
    }

    /// Builds from an arbitrary list, sorting it; `None` on repeated entries.
    pub fn from_unsorted(mut elems: Vec<u32>) -> Option<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(RSubset { elems })
    }

    pub(crate) fn from_sorted_unchecked(elems: Vec<u32>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        RSubset { elems }
    }

    /// `{1, …, r}`.
    pub fn initial(r: u32) -> Self {
        RSubset { elems: (1..=r).collect() }
    }

    /// `{n−r+1, …, n}`.
    pub fn top(n: u32, r: u32) -> Self {
        RSubset { elems: (n - r + 1..=n).collect() }
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// `|I ∩ {1, …, s}|`.
    pub fn count_at_most(&self, s: u32) -> u32 {
        self.elems.partition_point(|&x| x <= s) as u32
    }

    /// Length of the corresponding minimal coset representative, `Σ (I_t − t)`.
    pub fn length(&self) -> u32 {
        self.elems.iter().zip(1..).map(|(&x, t)| x - t).sum()
    }

    /// `{n+1−i : i ∉ I}`, the index of the orthogonal complement after
    /// reversing the basis.
    pub fn dual(&self, n: u32) -> RSubset {
        let mut out: Vec<u32> = (1..=n).filter(|&i| !self.contains(i)).map(|i| n + 1 - i).collect();
        out.reverse();
        RSubset { elems: out }
    }

    /// All `r`-subsets of `{1, …, n}` in lexicographic order.
    pub fn all(n: u32, r: u32) -> SubsetIter {
        SubsetIter { n, cur: if r <= n { Some((1..=r).collect()) } else { None } }
    }
}

impl fmt::Display for RSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Lexicographic iterator over `r`-subsets.
#[derive(Debug, Clone)]
pub struct SubsetIter {
    n: u32,
    cur: Option<Vec<u32>>,
}

impl Iterator for SubsetIter {
    type Item = RSubset;

    fn next(&mut self) -> Option<RSubset> {
        let cur = self.cur.take()?;
        let r = cur.len();
        let mut next = cur.clone();
        // find rightmost slot that can be bumped
        let mut i = r;
        while i > 0 && next[i - 1] == self.n - (r - i) as u32 {
            i -= 1;
        }
        if i > 0 {
            next[i - 1] += 1;
            for j in i..r {
                next[j] = next[j - 1] + 1;
            }
            self.cur = Some(next);
        }
        Some(RSubset { elems: cur })
    }
}

/// Componentwise order on `r`-subsets: the Bruhat order on minimal coset
/// representatives of `W^{S∖{α_r}}`.
pub fn bruhat_leq(lhs: &RSubset, rhs: &RSubset) -> Result<bool> {
    if lhs.len() != rhs.len() {
        return Err(Error::domain(format!("cannot compare subsets of sizes {} and {}", lhs.len(), rhs.len())));
    }
    Ok(lhs.elems.iter().zip(&rhs.elems).all(|(a, b)| a <= b))
}

/// Permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let idx = x as usize;
            if idx == 0 || idx > n || seen[idx - 1] {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
            seen[idx - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: u32) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The longest element `w₀ : i ↦ n+1−i`.
    pub fn longest(n: u32) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `w(x)` for `x ∈ 1..=n`.
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize - 1]
    }

    /// Inversion count, i.e. Coxeter length.
    pub fn length(&self) -> u32 {
        let mut inv = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = alloc::vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images: out }
    }

    /// Right multiplication by `s_i`, i.e. swapping positions `i` and `i+1`.
    fn mul_simple_right(&mut self, i: u32) {
        self.images.swap(i as usize - 1, i as usize);
    }

    /// A reduced word, built by peeling off right descents.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut letters = Vec::new();
        'outer: loop {
            for i in 1..w.n() {
                if w.apply(i) > w.apply(i + 1) {
                    w.mul_simple_right(i);
                    letters.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        // letters were removed from the right, so the word reads backwards
        letters.reverse();
        ReducedWord { letters, n: self.n() }
    }

    /// Bruhat order by the tableau criterion: for every `k`, the sorted prefix
    /// `{u(1..k)}` is componentwise below `{w(1..k)}`.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n(), "comparing permutations of different degree");
        let n = self.images.len();
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for k in 0..n {
            a.push(self.images[k]);
            b.push(other.images[k]);
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Product of the word's simple transpositions in `S_n`. Works for any word,
/// reduced or not.
pub fn evaluate_word(letters: &[u32], n: u32) -> Result<Permutation> {
    let mut w = Permutation::identity(n);
    for &a in letters {
        if a == 0 || a >= n {
            return Err(Error::domain(format!("letter {a} outside 1..={}", n.saturating_sub(1))));
        }
        w.mul_simple_right(a);
    }
    Ok(w)
}

/// Word in the simple reflections whose length equals the length of its
/// product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    letters: Vec<u32>,
    n: u32,
}

impl ReducedWord {
    /// Checks letter range and reducedness.
    pub fn new(letters: Vec<u32>, n: u32) -> Result<Self> {
        let w = evaluate_word(&letters, n)?;
        if w.length() as usize != letters.len() {
            return Err(Error::domain(format!(
                "word {letters:?} has length {} but its product has length {}",
                letters.len(),
                w.length()
            )));
        }
        Ok(ReducedWord { letters, n })
    }

    pub fn identity(n: u32) -> Self {
        ReducedWord { letters: Vec::new(), n }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> Permutation {
        evaluate_word(&self.letters, self.n).expect("letters validated at construction")
    }

    /// `s_i ≤ w` in Bruhat order. For a reduced word this is "letter `i`
    /// occurs".
    pub fn contains_reflection(&self, i: u32) -> bool {
        self.letters.contains(&i)
    }
}

/// See [`ReducedWord::contains_reflection`].
pub fn contains_reflection(w: &ReducedWord, i: u32) -> bool {
    w.contains_reflection(i)
}

/// `{w(1), …, w(r)}` sorted.
pub fn coset_subset(w: &Permutation, r: u32) -> Result<RSubset> {
    if r == 0 || r >= w.n() {
        return Err(Error::domain(format!("r = {r} must lie in 1..={}", w.n().saturating_sub(1))));
    }
    let mut elems: Vec<u32> = w.images[..r as usize].to_vec();
    elems.sort_unstable();
    Ok(RSubset { elems })
}

/// The minimal coset representative whose first `r` images are `I`: it lists
/// `I` and then the complement, both increasing.
pub fn subset_to_min_rep(subset: &RSubset, n: u32) -> Permutation {
    let mut images = subset.elems.clone();
    images.extend((1..=n).filter(|&i| !subset.contains(i)));
    Permutation { images }
}

/// Concatenation of the descending runs `(s_{hi}, s_{hi−1}, …, s_{lo})`.
fn descending_blocks(blocks: impl Iterator<Item = (u32, u32)>) -> Vec<u32> {
    let mut out = Vec::new();
    for (hi, lo) in blocks {
        if hi >= lo {
            out.extend((lo..=hi).rev());
        }
    }
    out
}

/// `w_{s,r} = (s_s ⋯ s_{p+1})(s_{s+1} ⋯ s_{p+2}) ⋯ (s_{s+r−p−1} ⋯ s_r)`.
pub fn build_w_sr(params: &GrassParams) -> Result<ReducedWord> {
    let (r, s, p) = (params.r(), params.s(), params.p());
    let letters = descending_blocks((0..r - p).map(|j| (s + j, p + 1 + j)));
    ReducedWord::new(letters, params.n()).map_err(|e| Error::invariant(format!("w_(s,r) for {params}: {e}")))
}

/// `w₀^{S∖{α_r}} = (s_{n−r} ⋯ s_1)(s_{n−r+1} ⋯ s_2) ⋯ (s_{n−1} ⋯ s_r)`.
pub fn build_w0_coset(params: &GrassParams) -> Result<ReducedWord> {
    let (n, r) = (params.n(), params.r());
    let letters = descending_blocks((0..r).map(|j| (n - r + j, 1 + j)));
    ReducedWord::new(letters, n).map_err(|e| Error::invariant(format!("w0 coset for {params}: {e}")))
}

/// Letters of the displayed two-case expression for `w̃`: the first `p`
/// blocks `(s_{n−r+j} ⋯ s_{1+j})` followed by `(s_{n−r+j} ⋯ s_{s+1+j−p})` for
/// `j = p, …, r−1`. At `p = 0` this is the first case of the display.
pub fn w_tilde_literal(params: &GrassParams) -> Vec<u32> {
    let (n, r, s, p) = (params.n(), params.r(), params.s(), params.p());
    let head = (0..p).map(|j| (n - r + j, 1 + j));
    let tail = (p..r).map(|j| (n - r + j, s + 1 + j - p));
    descending_blocks(head.chain(tail))
}

/// `w̃` with `w₀^{S∖{α_r}} = w̃ · w_{s,r}` and lengths adding up.
///
/// Uses [`w_tilde_literal`] when it satisfies both conditions; otherwise falls
/// back to a reduced word of `w₀^{S∖{α_r}} · w_{s,r}⁻¹`.
pub fn factor_w_tilde(params: &GrassParams) -> Result<ReducedWord> {
    let w_sr = build_w_sr(params)?;
    let w0 = build_w0_coset(params)?;
    let target = w0.evaluate();
    let expected_len = w0.len() - w_sr.len();

    let literal = w_tilde_literal(params);
    if let Ok(word) = ReducedWord::new(literal, params.n()) {
        if word.len() == expected_len && word.evaluate().compose(&w_sr.evaluate()) == target {
            return Ok(word);
        }
    }

    let quotient = target.compose(&w_sr.evaluate().inverse());
    let word = quotient.reduced_word();
    if word.len() != expected_len {
        return Err(Error::invariant(format!(
            "w~ for {params}: length {} + {} != {}",
            word.len(),
            w_sr.len(),
            w0.len()
        )));
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn params(n: u32, r: u32, s: u32) -> GrassParams {
        GrassParams::new(n, r, s).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate_word(&[1], 2).unwrap().images(), &[2, 1]);
        assert_eq!(evaluate_word(&[], 4).unwrap(), Permutation::identity(4));
        let w = evaluate_word(&[2, 1, 3, 2], 5).unwrap();
        assert_eq!(coset_subset(&w, 2).unwrap().elems(), &[3, 4]);
        assert!(evaluate_word(&[4], 4).is_err());
        assert!(evaluate_word(&[0], 4).is_err());
    }

    #[test]
    fn non_reduced_word_is_shorter() {
        let w = evaluate_word(&[1, 1, 2], 3).unwrap();
        assert_eq!(w.length(), 1);
        assert!(ReducedWord::new(vec![1, 1, 2], 3).is_err());
        assert!(ReducedWord::new(vec![1, 2, 1], 3).is_ok());
    }

    #[test]
    fn coset_subsets() {
        assert_eq!(coset_subset(&Permutation::identity(4), 2).unwrap().elems(), &[1, 2]);
        assert_eq!(coset_subset(&Permutation::longest(4), 2).unwrap().elems(), &[3, 4]);
        assert!(coset_subset(&Permutation::identity(4), 4).is_err());
    }

    #[test]
    fn subset_bruhat_examples() {
        let s = |v: &[u32]| RSubset::new(v.to_vec(), 5).unwrap();
        assert!(bruhat_leq(&s(&[1, 2]), &s(&[3, 4])).unwrap());
        assert!(!bruhat_leq(&s(&[1, 4]), &s(&[2, 3])).unwrap());
        assert!(!bruhat_leq(&s(&[2, 3]), &s(&[1, 4])).unwrap());
        assert!(bruhat_leq(&s(&[1]), &s(&[1, 2])).is_err());
    }

    #[test]
    fn distinguished_words() {
        assert_eq!(build_w_sr(&params(5, 2, 2)).unwrap().letters(), &[2, 1, 3, 2]);
        assert_eq!(build_w_sr(&params(3, 2, 2)).unwrap().letters(), &[2]);
        let w0 = build_w0_coset(&params(4, 2, 1)).unwrap();
        assert_eq!(w0.letters(), &[2, 1, 3, 2]);
        assert_eq!(coset_subset(&w0.evaluate(), 2).unwrap().elems(), &[3, 4]);
    }

    #[test]
    fn w_tilde_small() {
        let wt = factor_w_tilde(&params(5, 2, 2)).unwrap();
        assert_eq!(wt.len(), 2);
        // r + s = n with p = 0: w_(s,r) is already the top element
        assert!(factor_w_tilde(&params(5, 1, 4)).unwrap().is_empty());
        assert!(factor_w_tilde(&params(6, 1, 5)).unwrap().is_empty());
    }

    #[test]
    fn subset_iteration_and_dual() {
        let all: Vec<_> = RSubset::all(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].elems(), &[1, 2]);
        assert_eq!(all[5].elems(), &[3, 4]);
        assert_eq!(RSubset::all(3, 3).count(), 1);
        let i = RSubset::new(vec![1, 3], 5).unwrap();
        // complement {2,4,5} -> {4,2,1} reversed
        assert_eq!(i.dual(5).elems(), &[1, 2, 4]);
        assert_eq!(i.dual(5).dual(5), i);
    }

    #[test]
    fn reduced_word_roundtrip() {
        let w = Permutation::new(vec![3, 1, 4, 2]).unwrap();
        let word = w.reduced_word();
        assert_eq!(word.len() as u32, w.length());
        assert_eq!(word.evaluate(), w);
    }
}
