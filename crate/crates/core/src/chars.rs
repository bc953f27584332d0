//! Exact character theory of the symmetric group via the border-strip
//! (Murnaghan–Nakayama) recursion on beta-sets.

use crate::partition::{partitions_of, Partition};
use crate::{Q, Z};
use num_traits::Zero;
use std::collections::HashMap;

/// Character value `χ^λ(μ)` by border-strip recursion.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.sum(), mu.sum(), "characters need λ, μ ⊢ n");
    let mut memo = HashMap::new();
    mn_rec(lambda, mu.parts(), &mut memo)
}

fn beta_set(lambda: &Partition) -> Vec<i64> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (l - 1 - i) as i64)
        .collect()
}

fn partition_from_beta(mut beta: Vec<i64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    // strip trailing zeros of the staircase
    let l = beta.len();
    let parts: Vec<u8> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (l - 1 - i) as i64) as u8)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta set yields a partition")
}

fn mn_rec(lambda: &Partition, mu: &[u8], memo: &mut HashMap<(Partition, Vec<u8>), i64>) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0] as i64;
    let rest = &mu[1..];
    let beta = beta_set(lambda);
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // height = number of beta entries strictly between b-r and b
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = b - r;
        let smaller = partition_from_beta(nb);
        total += sign * mn_rec(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Full character table of `S_n` with class data.
pub struct CharacterTable {
    pub n: usize,
    /// Row/column index: partitions of `n` in the order of `partitions_of`.
    pub partitions: Vec<Partition>,
    /// `values[i][j] = χ^{partitions[i]}(partitions[j])`.
    pub values: Vec<Vec<i64>>,
    /// Conjugacy class sizes, indexed like `partitions`.
    pub class_sizes: Vec<u64>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let mut memo = HashMap::new();
        let values: Vec<Vec<i64>> = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| mn_rec(lam, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let class_sizes = partitions.iter().map(|p| p.class_size()).collect();
        CharacterTable {
            n,
            partitions,
            values,
            class_sizes,
        }
    }

    pub fn index_of(&self, lambda: &Partition) -> usize {
        self.partitions
            .iter()
            .position(|p| p == lambda)
            .expect("partition of n")
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index_of(lambda)][self.index_of(mu)]
    }

    /// Multiplicities `(1/n!) Σ_μ |K_μ| f(μ) χ^λ(μ)` of a rational class
    /// function, one per irreducible.
    pub fn isotypic_multiplicities(&self, class_function: &[Q]) -> Vec<Q> {
        assert_eq!(class_function.len(), self.partitions.len());
        let order = Q::from_integer(Z::from(crate::partition::factorial(self.n as u64)));
        self.values
            .iter()
            .map(|row| {
                let mut acc = Q::zero();
                for ((&chi, f), &size) in row.iter().zip(class_function).zip(&self.class_sizes) {
                    acc += Q::from_integer(Z::from(chi) * Z::from(size)) * f;
                }
                acc / &order
            })
            .collect()
    }
}
