//! Young's seminormal matrix representations of the symmetric group. The
//! basis is indexed by standard tableaux; adjacent-transposition generators
//! are sparse (at most two entries per column), and the Jucys–Murphy
//! elements act diagonally by contents, which is what makes the coset-sum
//! construction of the operator blocks cheap.

use crate::matrix::RatMatrix;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::tableaux::{enumerate_syt, StandardTableau};
use crate::{q, qq, Q};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// One generator as sparse columns: `cols[c]` lists the nonzero entries
/// `(r, coeff)` of column `c`, i.e. `ρ(s)[r, c] = coeff`.
#[derive(Debug, Clone)]
pub struct SparseGen {
    pub cols: Vec<Vec<(usize, Q)>>,
}

pub struct SeminormalRep {
    pub lambda: Partition,
    pub n: usize,
    pub dim: usize,
    pub tableaux: Vec<StandardTableau>,
    /// `contents[t][j-1]` = column - row of entry `j` in tableau `t`.
    pub contents: Vec<Vec<i64>>,
    /// Generators for `s_1 .. s_{n-1}`.
    pub gens: Vec<SparseGen>,
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let n = lambda.sum();
        let tableaux = enumerate_syt(lambda);
        let dim = tableaux.len();
        let index: HashMap<&StandardTableau, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let contents: Vec<Vec<i64>> = tableaux
            .iter()
            .map(|t| {
                let mut c = vec![0i64; n];
                for (r, row) in t.rows().iter().enumerate() {
                    for (col, &v) in row.iter().enumerate() {
                        c[v as usize - 1] = col as i64 - r as i64;
                    }
                }
                c
            })
            .collect();
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut cols: Vec<Vec<(usize, Q)>> = vec![Vec::new(); dim];
            for (t, tab) in tableaux.iter().enumerate() {
                let d = contents[t][i] - contents[t][i - 1];
                if d == 1 {
                    cols[t].push((t, Q::one()));
                } else if d == -1 {
                    cols[t].push((t, -Q::one()));
                } else {
                    let swapped = swap_entries(tab, i as u8, i as u8 + 1);
                    let t2 = index[&swapped];
                    cols[t].push((t, qq(1, d)));
                    // off-diagonal coefficients paired so each generator
                    // squares to the identity
                    let off = if d > 0 {
                        Q::one() - qq(1, d) * qq(1, d)
                    } else {
                        Q::one()
                    };
                    cols[t].push((t2, off));
                }
            }
            gens.push(SparseGen { cols });
        }
        SeminormalRep {
            lambda: lambda.clone(),
            n,
            dim,
            tableaux,
            contents,
            gens,
        }
    }

    pub fn identity(&self) -> RatMatrix {
        RatMatrix::identity(self.dim)
    }

    /// `m * ρ(s_i)` in O(2 f^2): the product's column `c` is
    /// `Σ_k ρ(s_i)[k, c] * (column k of m)`.
    pub fn mul_right_by_gen(&self, m: &RatMatrix, i: usize) -> RatMatrix {
        let gen = &self.gens[i - 1];
        let mut out = RatMatrix::zero(m.rows(), self.dim);
        for c in 0..self.dim {
            for &(k, ref coeff) in &gen.cols[c] {
                if coeff.is_zero() {
                    continue;
                }
                for r in 0..m.rows() {
                    if m[(r, k)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, k)] * coeff;
                    out[(r, c)] += v;
                }
            }
        }
        out
    }

    /// `ρ(s_{i_1}) ρ(s_{i_2}) ... ρ(s_{i_l})`.
    pub fn rho_word(&self, word: &[usize]) -> RatMatrix {
        let mut acc = self.identity();
        for &i in word {
            acc = self.mul_right_by_gen(&acc, i);
        }
        acc
    }

    /// ρ(w) along the lexicographically smallest reduced word of `w`.
    pub fn rho_perm(&self, w: &Permutation) -> RatMatrix {
        self.rho_word(&w.reduced_word())
    }

    /// Σ_w a_w ρ(w) for a group-algebra element given as (permutation,
    /// coefficient) pairs.
    pub fn rho_of_element(&self, terms: &[(Permutation, Q)]) -> RatMatrix {
        let mut acc = RatMatrix::zero(self.dim, self.dim);
        for (w, coeff) in terms {
            if coeff.is_zero() {
                continue;
            }
            acc = acc.add(&self.rho_perm(w).scale(coeff)).expect("same dim");
        }
        acc
    }

    /// Diagonal of the Jucys–Murphy element `X_j = Σ_{i<j} (i,j)`.
    pub fn jm_diagonal(&self, j: usize) -> Vec<Q> {
        (0..self.dim).map(|t| q(self.contents[t][j - 1])).collect()
    }

    /// Diagonal of `Σ_{h ∈ S_m} h` (the subgroup permuting `{1..m}`), which
    /// expands as `∏_{j=2..m} (1 + X_j)`.
    pub fn symmetrizer_diagonal(&self, m: usize) -> Vec<Q> {
        (0..self.dim)
            .map(|t| {
                let mut acc = Q::one();
                for j in 2..=m {
                    acc *= Q::one() + q(self.contents[t][j - 1]);
                }
                acc
            })
            .collect()
    }

    pub fn trace_of_perm(&self, w: &Permutation) -> Q {
        self.rho_perm(w).trace().expect("square")
    }
}

fn swap_entries(t: &StandardTableau, a: u8, b: u8) -> StandardTableau {
    let rows: Vec<Vec<u8>> = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    StandardTableau::new(rows).expect("swap keeps standardness for axial distance >= 2")
}
