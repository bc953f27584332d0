//! Set partitions of `{1..n}`: orbit representatives for the operators, and
//! the partition lattice with its Möbius function.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A set partition in canonical form: blocks sorted by minimum element,
/// elements ascending inside each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<u8>>,
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let elems: Vec<String> = b.iter().map(|e| e.to_string()).collect();
                elems.join("")
            })
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<u8>>) -> Result<Self> {
        let mut all: Vec<u8> = blocks.iter().flatten().copied().collect();
        let n = all.len();
        all.sort_unstable();
        if all != (1..=n as u8).collect::<Vec<_>>() {
            return Err(Error::InvalidPartition(format!(
                "blocks {blocks:?} do not partition 1..{n}"
            )));
        }
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Block sizes in weakly decreasing order.
    pub fn shape(&self) -> Partition {
        let sizes: Vec<u8> = self.blocks.iter().map(|b| b.len() as u8).collect();
        Partition::from_unsorted(sizes).expect("block sizes")
    }

    /// The standard representative of type `λ`: blocks on consecutive
    /// integers `{1..λ_1}, {λ_1+1..λ_1+λ_2}, ...`.
    pub fn standard_of_type(lambda: &Partition) -> SetPartition {
        let mut blocks = Vec::with_capacity(lambda.len());
        let mut next = 1u8;
        for &p in lambda.parts() {
            blocks.push((next..next + p).collect());
            next += p;
        }
        SetPartition { blocks }
    }

    /// Does `self` refine `other` (every block of `self` inside a block of
    /// `other`)?
    pub fn refines(&self, other: &SetPartition) -> bool {
        let n = self.n();
        let mut owner = vec![0usize; n + 1];
        for (i, b) in other.blocks.iter().enumerate() {
            for &e in b {
                owner[e as usize] = i;
            }
        }
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&e| owner[e as usize] == owner[b[0] as usize]))
    }
}

/// Every set partition of `{1..n}` of type `λ`, each exactly once, blocks in
/// canonical order. The count is `n! / (∏ λ_i! ∏ m_i!)`.
pub fn enumerate_of_type(n: usize, lambda: &Partition) -> Result<Vec<SetPartition>> {
    if lambda.sum() != n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} does not sum to {n}"
        )));
    }
    let mut out = Vec::new();
    let mut sizes: Vec<u8> = lambda.parts().to_vec();
    let mut blocks: Vec<Vec<u8>> = Vec::new();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    go(full, &mut sizes, &mut blocks, &mut out);
    Ok(out)
}

fn go(mask: u32, sizes: &mut Vec<u8>, blocks: &mut Vec<Vec<u8>>, out: &mut Vec<SetPartition>) {
    if mask == 0 {
        out.push(SetPartition {
            blocks: blocks.clone(),
        });
        return;
    }
    // head element always starts the next block: blocks come out sorted by min
    let head = mask.trailing_zeros() as u8;
    let rest = mask & !(1 << head);
    let mut tried: Vec<u8> = Vec::new();
    for idx in 0..sizes.len() {
        let s = sizes[idx];
        if tried.contains(&s) {
            continue;
        }
        tried.push(s);
        sizes.remove(idx);
        let mut members = vec![head + 1];
        pick(rest, s as usize - 1, head + 1, &mut members, sizes, blocks, out);
        sizes.insert(idx, s);
    }
}

fn pick(
    rest: u32,
    need: usize,
    start: u8,
    members: &mut Vec<u8>,
    sizes: &mut Vec<u8>,
    blocks: &mut Vec<Vec<u8>>,
    out: &mut Vec<SetPartition>,
) {
    if need == 0 {
        let used = members.iter().fold(0u32, |acc, &m| acc | (1 << (m - 1)));
        blocks.push(members.clone());
        go(rest & !used, sizes, blocks, out);
        blocks.pop();
        return;
    }
    for b in start..32 {
        if rest & (1 << b) != 0 {
            members.push(b + 1);
            pick(rest, need - 1, b + 1, members, sizes, blocks, out);
            members.pop();
        }
    }
}

/// All set partitions of `{1..n}` (the full lattice).
pub fn enumerate_all(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for lambda in crate::partition::partitions_of(n) {
        out.extend(enumerate_of_type(n, &lambda).expect("valid type"));
    }
    out
}

/// Möbius function `μ(0̂, 1̂)` of the partition lattice of `{1..n}`, computed
/// by the defining recursion over the interval below the one-block partition.
pub fn mobius_bottom_top(n: usize) -> i64 {
    // μ(0̂, x) via recursion μ(0̂, 0̂) = 1, Σ_{y ≤ x} μ(0̂, y) = 0 for x > 0̂.
    // Order by number of blocks descending: refinement order has 0̂ = all
    // singletons (n blocks) at the bottom.
    let mut parts = enumerate_all(n);
    parts.sort_by_key(|p| std::cmp::Reverse(p.blocks().len()));
    let mut mu: Vec<i64> = Vec::with_capacity(parts.len());
    for i in 0..parts.len() {
        if parts[i].blocks().len() == n {
            mu.push(1);
            continue;
        }
        let mut acc = 0i64;
        for j in 0..i {
            if parts[j].refines(&parts[i]) {
                acc += mu[j];
            }
        }
        mu.push(-acc);
    }
    let top = parts.iter().position(|p| p.blocks().len() == 1).unwrap();
    mu[top]
}
