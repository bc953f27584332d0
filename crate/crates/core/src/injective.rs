//! Maps on injective words: the unsigned subword maps, the signed boundary
//! of the complex of injective words, and the sign-twist identification of
//! the top boundary kernel with the kernel of the chamber map.

use crate::error::{Error, Result};
use crate::groupalg::GroupContext;
use crate::matrix::{IntMatrix, RatMatrix};
use crate::perm::Permutation;
use crate::Q;
use num_traits::One;
use std::collections::HashMap;

/// All injective words of length `len` over `{1..n}`, lexicographic.
pub fn injective_words(n: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(n: usize, len: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n as u8 {
            if !cur.contains(&v) {
                cur.push(v);
                go(n, len, cur, out);
                cur.pop();
            }
        }
    }
    go(n, len, &mut cur, &mut out);
    out
}

fn word_index(words: &[Vec<u8>]) -> HashMap<Vec<u8>, usize> {
    words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect()
}

/// The subword map `δ+(n, j, i)`: an injective word of length `j` goes to
/// the sum of its length-`i` subwords. Rows are indexed by length-`i`
/// words, columns by length-`j` words.
pub fn delplus(n: usize, j: usize, i: usize) -> Result<IntMatrix> {
    if i > j || j > n {
        return Err(Error::OutOfRange(format!("delplus({n},{j},{i})")));
    }
    let rows = injective_words(n, i);
    let cols = injective_words(n, j);
    let row_of = word_index(&rows);
    let mut m = IntMatrix::zero(rows.len(), cols.len());
    for (c, word) in cols.iter().enumerate() {
        let mut sub = Vec::with_capacity(i);
        subwords(word, i, 0, &mut sub, &mut |s: &Vec<u8>| {
            m[(row_of[s], c)] += 1;
        });
    }
    Ok(m)
}

fn subwords(word: &[u8], need: usize, start: usize, cur: &mut Vec<u8>, f: &mut impl FnMut(&Vec<u8>)) {
    if cur.len() == need {
        f(cur);
        return;
    }
    let remaining = word.len() - start;
    if remaining < need - cur.len() {
        return;
    }
    for k in start..word.len() {
        cur.push(word[k]);
        subwords(word, need, k + 1, cur, f);
        cur.pop();
    }
}

/// The signed boundary `δ-(n, i)` of the complex of injective words, mapping
/// length `i+1` words to alternating sums of their length-`i` subwords.
pub fn delminus(n: usize, i: usize) -> Result<IntMatrix> {
    if i + 1 > n {
        return Err(Error::OutOfRange(format!("delminus({n},{i})")));
    }
    let rows = injective_words(n, i);
    let cols = injective_words(n, i + 1);
    let row_of = word_index(&rows);
    let mut m = IntMatrix::zero(rows.len(), cols.len());
    for (c, word) in cols.iter().enumerate() {
        for drop in 0..word.len() {
            let sub: Vec<u8> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != drop)
                .map(|(_, &v)| v)
                .collect();
            let sign = if drop % 2 == 0 { 1 } else { -1 };
            m[(row_of[&sub], c)] += sign;
        }
    }
    Ok(m)
}

/// The isomorphism `i_A`: a length `n-1` injective word missing the letter
/// `a` goes to the permutation starting with `a`. As a matrix it maps the
/// word basis to the permutation basis (lexicographic ranks).
pub fn missing_letter_iso(n: usize) -> RatMatrix {
    let words = injective_words(n, n - 1);
    let mut m = RatMatrix::zero(words.len(), words.len());
    for (c, word) in words.iter().enumerate() {
        let missing = (1..=n as u8).find(|v| !word.contains(v)).expect("one letter missing");
        let mut images = vec![missing];
        images.extend_from_slice(word);
        let w = Permutation::new(images).expect("permutation");
        m[(w.lex_rank(), c)] = Q::one();
    }
    m
}

/// Diagonal sign matrix `w -> sgn(w) w` on the permutation basis.
pub fn sign_twist(ctx: &GroupContext) -> RatMatrix {
    let mut m = RatMatrix::zero(ctx.order(), ctx.order());
    for (r, w) in ctx.perms.iter().enumerate() {
        m[(r, r)] = crate::q(w.sign());
    }
    m
}

/// The reversal action of the nontrivial element of Z_2 on words of a fixed
/// length, optionally twisted by `(-1)^{floor(len/2)}` (the chain-complex
/// convention).
pub fn reversal_matrix(n: usize, len: usize, chain_twist: bool) -> RatMatrix {
    let words = injective_words(n, len);
    let index = word_index(&words);
    let mut m = RatMatrix::zero(words.len(), words.len());
    let sign = if chain_twist && (len / 2) % 2 == 1 {
        -Q::one()
    } else {
        Q::one()
    };
    for (c, word) in words.iter().enumerate() {
        let mut rev = word.clone();
        rev.reverse();
        m[(index[&rev], c)] = sign.clone();
    }
    m
}
