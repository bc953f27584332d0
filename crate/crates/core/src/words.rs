//! Words over an ordered alphabet, Lyndon factorization, and the
//! Gessel–Reutenauer comparison between Lyndon-type content sums and
//! fundamental quasisymmetric functions of permutation descent sets.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm;
use std::collections::BTreeMap;

/// Duval's algorithm: the Lyndon factorization of `word`, returned as factor
/// slices in order. Factors are weakly decreasing lexicographically and
/// concatenate to the input.
pub fn lyndon_factorization(word: &[u32]) -> Vec<Vec<u32>> {
    let n = word.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && word[k] <= word[j] {
            if word[k] < word[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(word[i..i + j - k].to_vec());
            i += j - k;
        }
    }
    factors
}

/// The Lyndon type: weakly decreasing factor lengths.
pub fn lyndon_type(word: &[u32]) -> Result<Partition> {
    if word.is_empty() {
        return Err(Error::OutOfRange("empty word".into()));
    }
    let lens: Vec<u8> = lyndon_factorization(word)
        .iter()
        .map(|f| f.len() as u8)
        .collect();
    Partition::from_unsorted(lens)
}

/// Content exponent vector of a word over the alphabet `{0..m-1}`.
fn content(word: &[u32], m: usize) -> Vec<u8> {
    let mut e = vec![0u8; m];
    for &a in word {
        e[a as usize] += 1;
    }
    e
}

/// Sum over words of Lyndon type `λ` (alphabet size `m`, length `n`) of
/// their content monomials, as a map exponent-vector -> coefficient.
pub fn lyndon_type_monomials(lambda: &Partition, m: usize, n: usize) -> BTreeMap<Vec<u8>, u64> {
    let mut out = BTreeMap::new();
    let mut word = vec![0u32; n];
    fn go(
        word: &mut Vec<u32>,
        pos: usize,
        m: usize,
        lambda: &Partition,
        out: &mut BTreeMap<Vec<u8>, u64>,
    ) {
        if pos == word.len() {
            if &lyndon_type(word).expect("nonempty") == lambda {
                *out.entry(content(word, m)).or_insert(0) += 1;
            }
            return;
        }
        for a in 0..m as u32 {
            word[pos] = a;
            go(word, pos + 1, m, lambda, out);
        }
    }
    go(&mut word, 0, m, lambda, &mut out);
    out
}

/// Monomials of the fundamental quasisymmetric function `F_D` in `m`
/// variables, degree `n`: weakly increasing sequences `i_1 <= ... <= i_n`
/// over `{0..m-1}` with strict increase at positions in `D` (1-based).
fn fundamental_monomials(descents: &[usize], m: usize, n: usize, out: &mut BTreeMap<Vec<u8>, u64>) {
    let strict: Vec<bool> = (1..n).map(|j| descents.contains(&j)).collect();
    let mut seq = vec![0u32; n];
    fn go(
        seq: &mut Vec<u32>,
        pos: usize,
        m: usize,
        strict: &[bool],
        out: &mut BTreeMap<Vec<u8>, u64>,
    ) {
        let n = seq.len();
        if pos == n {
            *out.entry(content(seq, m)).or_insert(0) += 1;
            return;
        }
        let lo = if pos == 0 {
            0
        } else if strict[pos - 1] {
            seq[pos - 1] + 1
        } else {
            seq[pos - 1]
        };
        for a in lo..m as u32 {
            seq[pos] = a;
            go(seq, pos + 1, m, strict, out);
        }
    }
    go(&mut seq, 0, m, &strict, out);
}

/// Sum of `F_{Des(w)}` over permutations `w` of cycle type `λ`, expanded into
/// monomials of degree `n` in `m` variables.
pub fn descent_class_monomials(lambda: &Partition, m: usize, n: usize) -> BTreeMap<Vec<u8>, u64> {
    let mut out = BTreeMap::new();
    for w in perm::enumerate(n) {
        if &w.cycle_type() == lambda {
            fundamental_monomials(&w.descent_set(), m, n, &mut out);
        }
    }
    out
}

/// Coefficientwise comparison of the two monomial expansions. Returns
/// `Ok(())` on equality, or the first offending exponent vector.
pub fn gessel_reutenauer_check(lambda: &Partition, m: usize, n: usize) -> std::result::Result<(), Vec<u8>> {
    let lhs = lyndon_type_monomials(lambda, m, n);
    let rhs = descent_class_monomials(lambda, m, n);
    let keys: std::collections::BTreeSet<&Vec<u8>> = lhs.keys().chain(rhs.keys()).collect();
    for k in keys {
        if lhs.get(k).copied().unwrap_or(0) != rhs.get(k).copied().unwrap_or(0) {
            return Err(k.clone());
        }
    }
    Ok(())
}
