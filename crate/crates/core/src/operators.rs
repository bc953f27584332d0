//! The symmetrized shuffling operators: the group-algebra elements
//! `ν_λ = Σ_w noninv_λ(w) w`, their matrices, the chamber-localization
//! factorization `ν = π^T π`, and the coset square root `ν = (1/n_X) R^X ^XR`.

use crate::error::{Error, Result};
use crate::groupalg::{GroupContext, IntElement};
use crate::matrix::IntMatrix;
use crate::partition::{factorial, Partition};
use crate::perm::{self, Permutation};
use crate::setpart::{self, SetPartition};

/// `ν_λ = Σ_w noninv_λ(w) · w`.
pub fn nu_element(ctx: &GroupContext, lambda: &Partition) -> Result<IntElement> {
    if lambda.sum() != ctx.n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {}",
            ctx.n
        )));
    }
    let mut coeffs = Vec::with_capacity(ctx.order());
    for w in &ctx.perms {
        coeffs.push(perm::noninv_lambda(w, lambda)? as i64);
    }
    Ok(IntElement { n: ctx.n, coeffs })
}

/// The symmetric `n! x n!` matrix of right multiplication by `ν_λ` in the
/// lexicographic permutation basis: entry `(u, v)` is `noninv_λ(v^{-1} u)`.
pub fn nu_matrix(ctx: &GroupContext, lambda: &Partition) -> Result<IntMatrix> {
    if ctx.n > 7 {
        return Err(Error::Budget(format!("dense nu matrix at n = {}", ctx.n)));
    }
    Ok(nu_element(ctx, lambda)?.right_mult_matrix(ctx))
}

/// The 0/1 chamber-localization matrix: rows indexed by pairs (set partition
/// `X` of type `λ`, tuple of linear orders on its blocks), columns by
/// permutations; entry 1 when every block of `X` appears inside `w` in
/// exactly the row's orders. Satisfies `π^T π = ν_λ`.
pub fn pi_matrix(ctx: &GroupContext, lambda: &Partition) -> Result<IntMatrix> {
    let n = ctx.n;
    if lambda.sum() != n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {n}"
        )));
    }
    let partitions = setpart::enumerate_of_type(n, lambda)?;
    let orders_per_partition: usize = lambda
        .parts()
        .iter()
        .map(|&p| factorial(p as u64) as usize)
        .product();
    let rows = partitions.len() * orders_per_partition;
    let mut m = IntMatrix::zero(rows, ctx.order());
    for (col, w) in ctx.perms.iter().enumerate() {
        let mut pos = vec![0usize; n + 1];
        for i in 1..=n {
            pos[w.apply(i)] = i;
        }
        for (pidx, x) in partitions.iter().enumerate() {
            // mixed-radix digit per block: the lex rank of the order in which
            // the block's letters appear in w
            let mut offset = 0usize;
            for block in x.blocks() {
                let mut appearance: Vec<u8> = block.clone();
                appearance.sort_by_key(|&b| pos[b as usize]);
                // rank of `appearance` among the |B|! arrangements of the block
                let rank = arrangement_rank(block, &appearance);
                offset = offset * factorial(block.len() as u64) as usize + rank;
            }
            m[(pidx * orders_per_partition + offset, col)] = 1;
        }
    }
    Ok(m)
}

/// Lex rank of `arrangement` among all arrangements of the sorted `block`.
fn arrangement_rank(block: &[u8], arrangement: &[u8]) -> usize {
    let mut remaining: Vec<u8> = block.to_vec();
    let mut rank = 0usize;
    for &a in arrangement {
        let idx = remaining.iter().position(|&b| b == a).unwrap();
        rank = rank * remaining.len() + idx;
        remaining.remove(idx);
    }
    rank
}

pub struct CosetSquareRoot {
    /// `R^X = Σ_{u ∈ W^X} u` (inverses of the block-increasing elements).
    pub r_left: IntElement,
    /// `^XR = Σ_{y ∈ ^XW} y` (block-increasing elements).
    pub r_right: IntElement,
    /// `n_X = [N_W(X0) : Z_W(X0)]`.
    pub n_x: u64,
}

/// The two coset sums and index for the standard representative `X_0` of
/// type `λ` (blocks on consecutive integers starting at 1), with
/// `ν_λ = (1/n_X) R^X · ^XR`.
pub fn coset_square_root(ctx: &GroupContext, lambda: &Partition) -> Result<CosetSquareRoot> {
    let n = ctx.n;
    if lambda.sum() != n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {n}"
        )));
    }
    let x0 = SetPartition::standard_of_type(lambda);
    let mut right = vec![0i64; ctx.order()];
    let mut left = vec![0i64; ctx.order()];
    for (r, y) in ctx.perms.iter().enumerate() {
        if blocks_increasing(y, &x0) {
            right[r] = 1;
            left[ctx.inv_rank[r] as usize] = 1;
        }
    }
    let n_x = if n <= 6 {
        // explicit stabilizers: N permutes the blocks of X0 setwise
        let z: u64 = lambda.parts().iter().map(|&p| factorial(p as u64)).product();
        let nw = ctx
            .perms
            .iter()
            .filter(|w| stabilizes_setwise(w, &x0))
            .count() as u64;
        nw / z
    } else {
        product_of_multiplicity_factorials(lambda)
    };
    Ok(CosetSquareRoot {
        r_left: IntElement {
            n,
            coeffs: left,
        },
        r_right: IntElement {
            n,
            coeffs: right,
        },
        n_x,
    })
}

pub fn product_of_multiplicity_factorials(lambda: &Partition) -> u64 {
    let top = lambda.parts().first().copied().unwrap_or(0);
    (1..=top)
        .map(|i| factorial(lambda.multiplicity(i) as u64))
        .product()
}

/// Does every block of `x` occur in increasing order inside the one-line
/// word of `y`?
fn blocks_increasing(y: &Permutation, x: &SetPartition) -> bool {
    let n = y.n();
    let mut pos = vec![0usize; n + 1];
    for i in 1..=n {
        pos[y.apply(i)] = i;
    }
    x.blocks()
        .iter()
        .all(|b| b.windows(2).all(|p| pos[p[0] as usize] < pos[p[1] as usize]))
}

fn stabilizes_setwise(w: &Permutation, x: &SetPartition) -> bool {
    let images: Vec<Vec<u8>> = x
        .blocks()
        .iter()
        .map(|b| {
            let mut im: Vec<u8> = b.iter().map(|&e| w.apply(e as usize) as u8).collect();
            im.sort_unstable();
            im
        })
        .collect();
    images.iter().all(|im| x.blocks().contains(im))
}

/// All unordered pairs `{λ, γ}` of partitions of `n` other than `(n)` and
/// `(1^n)` together with whether `ν_λ` and `ν_γ` commute (exact group
/// algebra convolution), and whether the two-family rule predicts it.
pub struct CommutingPairReport {
    pub lambda: Partition,
    pub gamma: Partition,
    pub commute: bool,
    pub predicted: bool,
}

pub fn commuting_pairs_scan(ctx: &GroupContext) -> Result<Vec<CommutingPairReport>> {
    let n = ctx.n;
    if n > 6 {
        return Err(Error::Budget(format!("pair scan at n = {n}")));
    }
    let eligible: Vec<Partition> = crate::partition::partitions_of(n)
        .into_iter()
        .filter(|p| p.len() > 1 && p.parts().iter().any(|&x| x > 1))
        .collect();
    let elements: Vec<IntElement> = eligible
        .iter()
        .map(|lam| nu_element(ctx, lam))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 0..eligible.len() {
        for j in i + 1..eligible.len() {
            let ab = elements[i].mul(&elements[j], ctx)?;
            let ba = elements[j].mul(&elements[i], ctx)?;
            let commute = ab == ba;
            let predicted = both_in_a_family(&eligible[i], &eligible[j]);
            out.push(CommutingPairReport {
                lambda: eligible[i].clone(),
                gamma: eligible[j].clone(),
                commute,
                predicted,
            });
        }
    }
    Ok(out)
}

fn is_hook_column(p: &Partition) -> bool {
    p.parts().iter().skip(1).all(|&x| x == 1)
}

fn is_two_blocks(p: &Partition) -> bool {
    p.parts().iter().all(|&x| x <= 2)
}

fn both_in_a_family(a: &Partition, b: &Partition) -> bool {
    (is_hook_column(a) && is_hook_column(b)) || (is_two_blocks(a) && is_two_blocks(b))
}
