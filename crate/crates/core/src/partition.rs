//! Number partitions: shapes of irreducibles, cycle types, orbit types.

use crate::error::{Error, Result};

/// A number partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u8>,
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts comma-separated parts (`"3,1,1"`) and exponent notation
    /// (`"2^2,1"` for `(2,2,1)`).
    fn from_str(s: &str) -> Result<Self> {
        let mut parts: Vec<u8> = Vec::new();
        if s.trim().is_empty() {
            return Err(Error::InvalidPartition("empty".into()));
        }
        for piece in s.split(',') {
            let piece = piece.trim();
            if let Some((base, exp)) = piece.split_once('^') {
                let base: u8 = base
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidPartition(s.into()))?;
                let exp: usize = exp
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidPartition(s.into()))?;
                if exp == 0 {
                    return Err(Error::InvalidPartition(s.into()));
                }
                parts.extend(std::iter::repeat(base).take(exp));
            } else {
                parts.push(
                    piece
                        .parse()
                        .map_err(|_| Error::InvalidPartition(s.into()))?,
                );
            }
        }
        Partition::new(parts)
    }
}

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} not sorted")));
        }
        Ok(Partition { parts })
    }

    pub fn from_unsorted(mut parts: Vec<u8>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Multiplicity `m_i` of the part `i`.
    pub fn multiplicity(&self, i: u8) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(k, 1^{n-k})`.
    pub fn hook_column(n: usize, k: usize) -> Self {
        let mut parts = vec![k as u8];
        parts.extend(std::iter::repeat(1u8).take(n - k));
        Partition { parts }
    }

    /// `(2^k, 1^{n-2k})`.
    pub fn two_blocks(n: usize, k: usize) -> Self {
        let mut parts = vec![2u8; k];
        parts.extend(std::iter::repeat(1u8).take(n - 2 * k));
        Partition { parts }
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u8)
            .collect();
        Partition { parts }
    }

    /// Number of odd-length columns of the Ferrers diagram.
    pub fn oddcols(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .filter(|&&p| p % 2 == 1)
            .count()
    }

    /// Hook-length formula dimension of the irreducible indexed by `self`.
    pub fn dimension(&self) -> u64 {
        let n = self.sum();
        if n == 0 {
            return 1;
        }
        let mut hooks_product = 1u128;
        let conj = self.conjugate();
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p as usize {
                let arm = p as usize - 1 - c;
                let leg = conj.parts[c] as usize - 1 - r;
                hooks_product *= (arm + leg + 1) as u128;
            }
        }
        let fact: u128 = (1..=n as u128).product();
        (fact / hooks_product) as u64
    }

    /// Centralizer order `z_λ = ∏ i^{m_i} m_i!` of a permutation of this
    /// cycle type.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        for i in 1..=self.parts.first().copied().unwrap_or(0) {
            let m = self.multiplicity(i) as u64;
            z *= (i as u64).pow(m as u32) * factorial(m);
        }
        z
    }

    /// Size of the conjugacy class with this cycle type in `S_n`.
    pub fn class_size(&self) -> u64 {
        factorial(self.sum() as u64) / self.centralizer_order()
    }

    /// Sign of any permutation with this cycle type.
    pub fn class_sign(&self) -> i64 {
        self.parts
            .iter()
            .map(|&c| if (c - 1) % 2 == 0 { 1 } else { -1 })
            .product()
    }

    /// Cells `(row, col)` of the Ferrers diagram, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.sum());
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p as usize {
                out.push((r, c));
            }
        }
        out
    }

    /// Whether `self / inner` is a horizontal strip (at most one cell per
    /// column), with `inner` contained in `self`.
    pub fn horizontal_strip_over(&self, inner: &Partition) -> bool {
        if inner.len() > self.len() {
            return false;
        }
        for i in 0..self.len() {
            let mu_i = inner.parts.get(i).copied().unwrap_or(0);
            if mu_i > self.parts[i] {
                return false;
            }
            if i + 1 < self.len() && self.parts[i + 1] > mu_i {
                return false;
            }
        }
        true
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

pub fn binomial(n: u64, k: i64) -> u64 {
    if k < 0 || k as u64 > n {
        return 0;
    }
    let k = (k as u64).min(n - k as u64);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as u64
}

/// All partitions of `n` in descending lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::new();
    fn go(remaining: usize, max: usize, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p as u8);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    go(n, n, &mut cur, &mut out);
    out
}
