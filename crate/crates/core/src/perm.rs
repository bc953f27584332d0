//! Permutations of `{1..n}` in one-line form, together with the elementary
//! statistics the shuffling operators are built from.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation of `{1..n}`. `images[i]` holds `w(i+1)`, so the struct is
/// exactly the one-line word `w_1 w_2 ... w_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n() <= 9 {
            for &v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", strs.join(","))
        }
    }
}

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// The longest element `n n-1 ... 2 1`.
    pub fn longest_element(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `w(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    /// `(u ∘ v)(i) = u(v(i))`.
    pub fn compose(&self, v: &Permutation) -> Result<Permutation> {
        if self.n() != v.n() {
            return Err(Error::SizeMismatch(format!(
                "compose: {} vs {}",
                self.n(),
                v.n()
            )));
        }
        Ok(Permutation {
            images: v.images.iter().map(|&i| self.images[i as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    /// Adjacent transposition `s_i = (i, i+1)`, `1 <= i <= n-1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Transposition `(a, b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// Lexicographic rank of the one-line word among all of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0usize;
        let mut fact = (1..n).product::<usize>().max(1);
        let mut used = vec![false; n + 1];
        for (i, &v) in self.images.iter().enumerate() {
            let smaller = (1..v as usize).filter(|&u| !used[u]).count();
            rank += smaller * fact;
            used[v as usize] = true;
            if i + 1 < n {
                fact /= n - 1 - i;
            }
        }
        rank
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Self {
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut fact = (1..n).product::<usize>().max(1);
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let idx = rank / fact;
            rank %= fact;
            images.push(avail.remove(idx));
            if i + 1 < n {
                fact /= n - 1 - i;
            }
        }
        Permutation { images }
    }

    /// Number of inversions `#{i<j : w_i > w_j}`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Descent set `{ j : w_j > w_{j+1} }` as 1-based positions.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&j| self.images[j - 1] > self.images[j])
            .collect()
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.apply(cur);
                len += 1;
            }
            parts.push(len as u8);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle lengths form a partition")
    }

    pub fn fixed_points(&self) -> usize {
        (1..=self.n()).filter(|&i| self.apply(i) == i).count()
    }

    /// A reduced word (list of adjacent-transposition indices) obtained by
    /// bubble sort; it is the lexicographically smallest reduced word for `w`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let n = w.len();
        let mut word = Vec::with_capacity(self.inversions());
        // Selection by repeated adjacent swaps: sort w to the identity and
        // record the swaps; applied in reverse they build w from the identity.
        let mut sorted = false;
        while !sorted {
            sorted = true;
            for i in 0..n.saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    word.push(i + 1);
                    sorted = false;
                }
            }
        }
        // w = s_{i_1} ... s_{i_l} with the recorded swaps reversed.
        word.reverse();
        word
    }
}

/// All permutations of `{1..n}` in lexicographic order of one-line words.
pub fn enumerate(n: usize) -> Vec<Permutation> {
    let total: usize = (1..=n).product::<usize>().max(1);
    (0..total).map(|r| Permutation::from_lex_rank(n, r)).collect()
}

/// `noninv_k(w)`: the number of k-element position sets carrying an
/// increasing subsequence of the one-line word.
pub fn noninv_k(w: &Permutation, k: usize) -> Result<u64> {
    let n = w.n();
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("k = {k} with n = {n}")));
    }
    // dp[j][i]: increasing subsequences of length j+1 ending at position i.
    let word = w.images();
    let mut dp = vec![vec![0u64; n]; k];
    for i in 0..n {
        dp[0][i] = 1;
    }
    for j in 1..k {
        for i in 0..n {
            let mut total = 0;
            for p in 0..i {
                if word[p] < word[i] {
                    total += dp[j - 1][p];
                }
            }
            dp[j][i] = total;
        }
    }
    Ok(dp[k - 1].iter().sum())
}

/// Is the value set `mask` (bit v-1 for value v) increasing in `w`, i.e. do
/// its letters occur left-to-right in increasing order?
fn mask_is_increasing(pos: &[usize], mask: u32) -> bool {
    let mut last = 0usize;
    let mut first = true;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize; // value v+1
        m &= m - 1;
        let p = pos[v];
        if !first && p < last {
            return false;
        }
        last = p;
        first = false;
    }
    true
}

/// `noninv_λ(w)`: the number of set partitions of `{1..n}` of type `λ` all of
/// whose blocks occur in increasing order inside the one-line word of `w`.
pub fn noninv_lambda(w: &Permutation, lambda: &Partition) -> Result<u64> {
    let n = w.n();
    if lambda.sum() != n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} does not sum to {n}"
        )));
    }
    let mut pos = vec![0usize; n];
    for i in 1..=n {
        pos[w.apply(i) - 1] = i;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut sizes: Vec<u8> = lambda.parts().to_vec();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(count_typed_partitions(&pos, full, &mut sizes))
}

fn count_typed_partitions(pos: &[usize], mask: u32, sizes: &mut Vec<u8>) -> u64 {
    if mask == 0 {
        return 1;
    }
    let lowest = mask.trailing_zeros();
    let rest = mask & !(1 << lowest);
    let mut total = 0u64;
    let mut tried: Vec<u8> = Vec::new();
    for idx in 0..sizes.len() {
        let s = sizes[idx];
        if tried.contains(&s) {
            continue;
        }
        tried.push(s);
        let size = s as usize;
        sizes.remove(idx);
        // Choose the remaining size-1 elements of the block from `rest`.
        let mut chosen = Vec::with_capacity(size - 1);
        total += choose_block(pos, rest, size - 1, 0, &mut chosen, 1 << lowest, sizes);
        sizes.insert(idx, s);
    }
    total
}

fn choose_block(
    pos: &[usize],
    rest: u32,
    need: usize,
    start: u32,
    chosen: &mut Vec<u32>,
    base: u32,
    sizes: &mut Vec<u8>,
) -> u64 {
    if need == 0 {
        let block = base | chosen.iter().fold(0u32, |acc, &b| acc | (1 << b));
        if mask_is_increasing(pos, block) {
            return count_typed_partitions(pos, rest & !block, sizes);
        }
        return 0;
    }
    let mut total = 0;
    let nbits = pos.len() as u32;
    for b in start..nbits {
        if rest & (1 << b) != 0 {
            chosen.push(b);
            total += choose_block(pos, rest, need - 1, b + 1, chosen, base, sizes);
            chosen.pop();
        }
    }
    total
}

/// `inv_λ(w)` for the hyperplane orbit `λ = (2, 1^{n-2})`: the inversion
/// number of `w`, i.e. `C(n,2) - noninv_λ(w)`.
pub fn inv_lambda(w: &Permutation, lambda: &Partition) -> Result<u64> {
    let n = w.n();
    let parts = lambda.parts();
    let hyperplane_shape =
        parts.first() == Some(&2) && parts.iter().skip(1).all(|&p| p == 1) && lambda.sum() == n;
    if !hyperplane_shape {
        return Err(Error::InvalidPartition(format!(
            "inv_lambda only supports (2,1^{{n-2}}), got {lambda}"
        )));
    }
    Ok(w.inversions() as u64)
}

/// Matching-number counts: `out[k]` is the number of k-element sets of
/// pairwise disjoint noninversion pairs of `w`, i.e. `noninv_{(2^k,1^{n-2k})}(w)`.
/// `out[0] = 1`.
pub fn noninv_two_blocks_all(w: &Permutation) -> Vec<u64> {
    let n = w.n();
    let kmax = n / 2;
    // adjacency of the noninversion graph on values: v < u joined when v
    // appears before u in the word.
    let mut pos = vec![0usize; n + 1];
    for i in 1..=n {
        pos[w.apply(i)] = i;
    }
    let mut adj = vec![0u32; n];
    for v in 1..=n {
        for u in v + 1..=n {
            if pos[v] < pos[u] {
                adj[v - 1] |= 1 << (u - 1);
                adj[u - 1] |= 1 << (v - 1);
            }
        }
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo: std::collections::HashMap<u32, Vec<u64>> = std::collections::HashMap::new();
    fn go(
        mask: u32,
        kmax: usize,
        adj: &[u32],
        memo: &mut std::collections::HashMap<u32, Vec<u64>>,
    ) -> Vec<u64> {
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        if mask == 0 {
            let mut out = vec![0u64; kmax + 1];
            out[0] = 1;
            return out;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        // v unmatched
        let mut out = go(rest, kmax, adj, memo);
        // v matched to a neighbour in the mask
        let mut nbrs = adj[v] & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let sub = go(rest & !(1 << u), kmax, adj, memo);
            for k in 1..=kmax {
                out[k] += sub[k - 1];
            }
        }
        memo.insert(mask, out.clone());
        out
    }
    go(full, kmax, &adj, &mut memo)
}

/// Exact derangement counts `(d_n, d_n^+, d_n^-)`: all, even, odd.
pub fn derangement_counts(n: usize) -> (u64, u64, u64) {
    let mut d = vec![0u64; n.max(2) + 1];
    let mut dp = vec![0u64; n.max(2) + 1];
    let mut dm = vec![0u64; n.max(2) + 1];
    d[0] = 1;
    dp[0] = 1;
    for m in 2..=n.max(2) {
        d[m] = (m as u64 - 1) * (d[m - 1] + d[m - 2]);
        dp[m] = (m as u64 - 1) * (dm[m - 1] + dm[m - 2]);
        dm[m] = (m as u64 - 1) * (dp[m - 1] + dp[m - 2]);
    }
    (d[n], dp[n], dm[n])
}

/// The convolution coefficient `d^{k,l}_w`: the number of triples
/// (k-set, l-set, factorization uv = w) with `u` increasing on the k-set and
/// `v` increasing on the l-set, counted by direct enumeration over `u`.
pub fn d_coefficient(w: &Permutation, k: usize, l: usize) -> Result<u64> {
    let n = w.n();
    if k == 0 || k > n || l == 0 || l > n {
        return Err(Error::OutOfRange(format!("k = {k}, l = {l}, n = {n}")));
    }
    let mut total = 0u64;
    for u in enumerate(n) {
        let v = u.inverse().compose(w)?;
        total += noninv_k(&u, k)? * noninv_k(&v, l)?;
    }
    Ok(total)
}
