//! The Fourier-block spectral engine. Each operator of the two families is
//! computed inside every irreducible seminormal representation through the
//! coset factorization
//!
//! `ν = (1/n_X) R^X · ^XR = (1/m!) G · H · G*`
//!
//! for the orbit representative placed on the **last** letters: `H` is the
//! full subgroup sum of the chain subgroup `S_m` (diagonal in the seminormal
//! basis via Jucys–Murphy contents) and `G` runs over the few coset
//! representatives that are increasing on the prefix positions and on each
//! block of positions. Joint eigenspaces are then refined per irreducible
//! and merged into the printed tables.

use crate::chars::CharacterTable;
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::partition::{factorial, partitions_of, Partition};
use crate::perm::{self, Permutation};
use crate::poly::{factor_rational_roots, ZPoly};
use crate::seminormal::SeminormalRep;
use crate::tables::{Family, SpectraTable, TableRow};
use crate::{q, Q};
use num_traits::One;
use std::collections::BTreeMap;

/// Coset representatives for the columns operator `ν_{(k,1^{n-k})}`:
/// permutations increasing on positions `1..n-k` and on `n-k+1..n`,
/// one per `(n-k)`-subset of values.
fn grassmann_hook(n: usize, k: usize) -> Vec<Permutation> {
    let prefix = n - k;
    let mut out = Vec::new();
    let full: u32 = (1u32 << n) - 1;
    for mask in 0u32..=full {
        if mask.count_ones() as usize != prefix {
            continue;
        }
        let mut images: Vec<u8> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| i as u8 + 1)
            .collect();
        images.extend((0..n).filter(|i| mask & (1 << i) == 0).map(|i| i as u8 + 1));
        out.push(Permutation::new(images).expect("subset arrangement"));
    }
    out
}

/// Coset representatives for the two-blocks operator `ν_{(2^k,1^{n-2k})}`:
/// increasing on the prefix positions and inside each of the `k` trailing
/// position pairs.
fn grassmann_two_blocks(n: usize, k: usize) -> Vec<Permutation> {
    let prefix = n - 2 * k;
    let mut out = Vec::new();
    let mut values: Vec<u8> = (1..=n as u8).collect();
    let mut chosen: Vec<u8> = Vec::new();
    fn pick_prefix(
        values: &[u8],
        need: usize,
        start: usize,
        chosen: &mut Vec<u8>,
        k: usize,
        out: &mut Vec<Permutation>,
    ) {
        if need == 0 {
            let rest: Vec<u8> = values
                .iter()
                .copied()
                .filter(|v| !chosen.contains(v))
                .collect();
            let mut pairs: Vec<u8> = Vec::with_capacity(2 * k);
            pick_pairs(&rest, &mut pairs, chosen, out);
            return;
        }
        for i in start..values.len() {
            chosen.push(values[i]);
            pick_prefix(values, need - 1, i + 1, chosen, k, out);
            chosen.pop();
        }
    }
    fn pick_pairs(rest: &[u8], pairs: &mut Vec<u8>, prefix: &[u8], out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            let mut images = prefix.to_vec();
            images.extend_from_slice(pairs);
            out.push(Permutation::new(images).expect("pair arrangement"));
            return;
        }
        // each position pair in turn takes any sorted value pair, so slot
        // assignments are ordered: n!/((n-2k)! 2^k) representatives total
        for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                let (lo, hi) = (rest[i], rest[j]);
                let remaining: Vec<u8> = rest
                    .iter()
                    .copied()
                    .filter(|&v| v != lo && v != hi)
                    .collect();
                pairs.push(lo);
                pairs.push(hi);
                pick_pairs(&remaining, pairs, prefix, out);
                pairs.pop();
                pairs.pop();
            }
        }
    }
    pick_prefix(&values, prefix, 0, &mut chosen, k, &mut out);
    values.clear();
    out
}

/// `Σ_g ρ(g) · D · Σ_g ρ(g^{-1})`, scaled: the block of the operator.
fn coset_block(rep: &SeminormalRep, gs: &[Permutation], sym_m: usize, scale: &Q) -> RatMatrix {
    let f = rep.dim;
    let mut gsum = RatMatrix::zero(f, f);
    let mut gisum = RatMatrix::zero(f, f);
    for g in gs {
        gsum = gsum.add(&rep.rho_perm(g)).expect("dim");
        gisum = gisum.add(&rep.rho_perm(&g.inverse())).expect("dim");
    }
    let diag = rep.symmetrizer_diagonal(sym_m);
    // gsum * D
    let mut gd = gsum;
    for c in 0..f {
        if diag[c].is_one() {
            continue;
        }
        for r in 0..f {
            let v = &gd[(r, c)] * &diag[c];
            gd[(r, c)] = v;
        }
    }
    let mut out = gd.mul(&gisum).expect("dim");
    if !scale.is_one() {
        out = out.scale(scale);
    }
    out
}

/// Block of `ν_{(k,1^{n-k})}` in the irreducible representation.
pub fn nu_hook_block(rep: &SeminormalRep, k: usize) -> Result<RatMatrix> {
    let n = rep.n;
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("hook k = {k} at n = {n}")));
    }
    if k == n {
        return Ok(rep.identity());
    }
    if k == 1 {
        // the all-ones element: the full symmetrizer, diagonal
        let mut m = RatMatrix::zero(rep.dim, rep.dim);
        for (t, c) in rep.symmetrizer_diagonal(n).into_iter().enumerate() {
            m[(t, t)] = c;
        }
        return Ok(m);
    }
    Ok(coset_block(
        rep,
        &grassmann_hook(n, k),
        n - k,
        &Q::one(),
    ))
}

/// Block of `ν_{(2^k,1^{n-2k})}`; `k = 0` is the all-ones operator.
pub fn nu_two_blocks_block(rep: &SeminormalRep, k: usize) -> Result<RatMatrix> {
    let n = rep.n;
    if 2 * k > n {
        return Err(Error::OutOfRange(format!("two-blocks k = {k} at n = {n}")));
    }
    if k == 0 {
        return nu_hook_block(rep, 1);
    }
    let scale = Q::new(1.into(), crate::Z::from(factorial(k as u64)));
    Ok(coset_block(
        rep,
        &grassmann_two_blocks(n, k),
        n - 2 * k,
        &scale,
    ))
}

/// Operator labels and block constructors for a family at a given `n`.
pub fn family_operators(n: usize, family: Family) -> Vec<(String, Partition)> {
    match family {
        // the identity operator k = n is omitted from the tables, except at
        // n = 1 where it is the whole family
        Family::Columns => (1..n.max(2))
            .map(|k| {
                (
                    format!("nu_{}", Partition::hook_column(n, k.min(n))),
                    Partition::hook_column(n, k.min(n)),
                )
            })
            .collect(),
        Family::TwoBlocks => (0..=n / 2)
            .map(|k| {
                (
                    format!("nu_{}", Partition::two_blocks(n, k)),
                    Partition::two_blocks(n, k),
                )
            })
            .collect(),
    }
}

fn family_block(rep: &SeminormalRep, family: Family, idx: usize) -> Result<RatMatrix> {
    match family {
        Family::Columns => nu_hook_block(rep, idx + 1),
        Family::TwoBlocks => nu_two_blocks_block(rep, idx),
    }
}

/// One refined joint eigenspace inside a single irreducible block.
struct RefinedSpace {
    eigenvalues: Vec<i64>,
    w0: Option<i8>,
    dim: usize,
}

/// Split a subspace (given by a basis) into eigenspaces of the restriction
/// of `m`. Returns `(eigenvalue, basis)` pairs; non-integer eigenvalues are
/// pushed into `violations`.
fn split_by_operator(
    m: &RatMatrix,
    basis: &RatMatrix,
    label: &str,
    violations: &mut Vec<String>,
) -> Result<Vec<(i64, RatMatrix)>> {
    let s = m.restrict(basis)?;
    let charpoly = s.charpoly()?;
    let zp = ZPoly::from_rational_coeffs(&charpoly)
        .ok_or_else(|| Error::NonRationalSpectrum)?;
    let (roots, residual) = factor_rational_roots(&zp)?;
    if residual.degree() > 0 {
        violations.push(format!(
            "{label}: non-rational factor {residual} in block characteristic polynomial"
        ));
    }
    let mut out = Vec::new();
    for (root, _mult) in roots {
        if !root.is_integer() {
            violations.push(format!("{label}: non-integer eigenvalue {root}"));
            continue;
        }
        let rv = i64::try_from(root.to_integer()).expect("desk-scale eigenvalue");
        let shifted = s.plus_scalar_identity(&-q(rv))?;
        let kernel = shifted.kernel_basis();
        let sub_basis = basis.mul(&kernel)?;
        out.push((rv, sub_basis));
    }
    Ok(out)
}

fn refine_block(
    rep: &SeminormalRep,
    family: Family,
    violations: &mut Vec<String>,
) -> Result<Vec<RefinedSpace>> {
    let n = rep.n;
    let ops = family_operators(n, family);
    let mut spaces: Vec<(Vec<i64>, RatMatrix)> = vec![(Vec::new(), rep.identity())];
    for (idx, (label, _)) in ops.iter().enumerate() {
        let m = family_block(rep, family, idx)?;
        let mut next = Vec::new();
        for (eigs, basis) in spaces {
            for (val, sub) in split_by_operator(&m, &basis, label, violations)? {
                let mut e = eigs.clone();
                e.push(val);
                next.push((e, sub));
            }
        }
        spaces = next;
    }
    // refine by w0 and verify each joint eigenspace is w0-stable
    let w0 = rep.rho_perm(&Permutation::longest_element(n));
    let mut out = Vec::new();
    for (eigs, basis) in spaces {
        if !basis.spans_columns_of(&w0.mul(&basis)?)? {
            // not w0-stable: report the whole space without a sign
            out.push(RefinedSpace {
                eigenvalues: eigs,
                w0: None,
                dim: basis.cols(),
            });
            continue;
        }
        let s = w0.restrict(&basis)?;
        for sign in [1i8, -1i8] {
            let shifted = s.plus_scalar_identity(&-q(sign as i64))?;
            let kernel = shifted.kernel_basis();
            if kernel.cols() > 0 {
                out.push(RefinedSpace {
                    eigenvalues: eigs.clone(),
                    w0: Some(sign),
                    dim: kernel.cols(),
                });
            }
        }
    }
    Ok(out)
}

/// The complete simultaneous eigenspace table for a family, computed
/// per-irreducible and merged. For the two-blocks family only the non-kernel
/// rows are listed (each irreducible once, as in the source tables).
pub fn simultaneous_table(n: usize, family: Family) -> Result<SpectraTable> {
    let mut violations = Vec::new();
    // columns family: merge across irreducibles by (eigenvalues, sign), the
    // appendix layout; two-blocks family: one non-kernel row per irreducible
    let mut merged: BTreeMap<(Vec<i64>, Option<i8>, Option<String>), BTreeMap<String, u64>> =
        BTreeMap::new();
    for lambda in partitions_of(n) {
        let rep = SeminormalRep::new(&lambda);
        for space in refine_block(&rep, family, &mut violations)? {
            if family == Family::TwoBlocks && space.eigenvalues.iter().all(|&e| e == 0) {
                continue;
            }
            let key_lambda = match family {
                Family::Columns => None,
                Family::TwoBlocks => Some(lambda.to_string()),
            };
            let entry = merged
                .entry((space.eigenvalues, space.w0, key_lambda))
                .or_default();
            *entry.entry(lambda.to_string()).or_insert(0) += space.dim as u64;
        }
    }
    let rows: Vec<TableRow> = merged
        .into_iter()
        .map(|((eigenvalues, w0, _), multiplicities)| TableRow {
            eigenvalues,
            w0,
            multiplicities,
        })
        .collect();
    let mut table = SpectraTable {
        schema: 1,
        n,
        family,
        operators: family_operators(n, family)
            .into_iter()
            .map(|(label, _)| label)
            .collect(),
        rows,
        integrality_violations: violations,
    };
    table.sort_rows();
    Ok(table)
}

/// Dimension of a table row: multiplicity times irreducible dimension.
pub fn row_dimension(row: &TableRow) -> u64 {
    row.multiplicities
        .iter()
        .map(|(l, m)| {
            let lam: Partition = l.parse().expect("row label");
            m * lam.dimension()
        })
        .sum()
}

/// Filtration data extracted from the columns-family table.
pub struct FiltrationReport {
    pub n: usize,
    /// `kernel_dims[k-1]` = nullity of `ν_{(k,1^{n-k})}`, k = 1..n-1.
    pub kernel_dims: Vec<u64>,
    /// `(factor dim, plus dim, minus dim)` for levels j = 0..n.
    pub factor_dims: Vec<(u64, u64, u64)>,
    /// computed `(shape, sign) -> multiplicity` per level
    pub factors: Vec<BTreeMap<(Partition, i8), u64>>,
}

pub fn kernel_filtration(n: usize) -> Result<FiltrationReport> {
    let table = simultaneous_table(n, Family::Columns)?;
    let mut kernel_dims = vec![0u64; n - 1];
    let mut factor_dims = vec![(0u64, 0u64, 0u64); n + 1];
    let mut factors: Vec<BTreeMap<(Partition, i8), u64>> = vec![BTreeMap::new(); n + 1];
    for row in &table.rows {
        let dim = row_dimension(row);
        let level = row.level(n);
        for k in 1..n {
            if row.eigenvalues[k - 1] == 0 {
                kernel_dims[k - 1] += dim;
            }
        }
        factor_dims[level].0 += dim;
        let sign = row.w0.unwrap_or(0);
        if sign == 1 {
            factor_dims[level].1 += dim;
        } else if sign == -1 {
            factor_dims[level].2 += dim;
        }
        for (l, m) in &row.multiplicities {
            let lam: Partition = l.parse().expect("row label");
            *factors[level].entry((lam, sign)).or_insert(0) += m;
        }
        // nested kernels at block level: once an operator acts nonzero,
        // all later ones in the chain do too
        let first = row.eigenvalues.iter().position(|&e| e != 0);
        if let Some(k0) = first {
            assert!(
                row.eigenvalues[k0..].iter().all(|&e| e != 0),
                "kernel nesting violated in row {:?}",
                row.eigenvalues
            );
        }
    }
    Ok(FiltrationReport {
        n,
        kernel_dims,
        factor_dims,
        factors,
    })
}

/// Kernel chain data for the two-blocks family: nullities of
/// `ν_{(2^k,1^{n-2k})}` and the dimensions of the new non-kernel layer at
/// each level (the Gelfand layers, governed by odd column counts).
pub struct TwoBlocksFiltration {
    pub n: usize,
    /// `kernel_dims[k]` = nullity of `ν_{(2^k,1^{n-2k})}`, k = 0..n/2.
    pub kernel_dims: Vec<u64>,
    /// `layer_dims[k]` = rank gained at level k.
    pub layer_dims: Vec<u64>,
    /// kernels are nested along the chain
    pub nested: bool,
}

pub fn two_blocks_filtration(n: usize) -> Result<TwoBlocksFiltration> {
    let kmax = n / 2;
    let order = factorial(n as u64);
    let mut ranks = vec![0u64; kmax + 1];
    let mut nested = true;
    for lambda in partitions_of(n) {
        let rep = SeminormalRep::new(&lambda);
        let f = lambda.dimension();
        let mut seen_nonzero = false;
        for k in 0..=kmax {
            let block_rank = nu_two_blocks_block(&rep, k)?.rank() as u64;
            if seen_nonzero && block_rank == 0 {
                nested = false;
            }
            seen_nonzero |= block_rank > 0;
            ranks[k] += f * block_rank;
        }
    }
    let kernel_dims: Vec<u64> = ranks.iter().map(|r| order - r).collect();
    let mut layer_dims = vec![0u64; kmax + 1];
    for k in 0..=kmax {
        layer_dims[k] = ranks[k] - if k == 0 { 0 } else { ranks[k - 1] };
    }
    Ok(TwoBlocksFiltration {
        n,
        kernel_dims,
        layer_dims,
        nested,
    })
}

/// The two-blocks eigenvalue by the trace formula
/// `γ = Σ_w noninv_{(2^k,1^{n-2k})}(w) χ^λ(w)`, evaluated classwise.
pub struct TwoBlocksTraceData {
    pub n: usize,
    pub chars: CharacterTable,
    /// `class_sums[class][k]` = Σ over the class of the k-matching count.
    pub class_sums: Vec<Vec<u64>>,
}

impl TwoBlocksTraceData {
    pub fn new(n: usize) -> Self {
        let chars = CharacterTable::new(n);
        let kmax = n / 2;
        let mut class_sums = vec![vec![0u64; kmax + 1]; chars.partitions.len()];
        for w in perm::enumerate(n) {
            let class = chars.index_of(&w.cycle_type());
            let counts = perm::noninv_two_blocks_all(&w);
            for k in 0..=kmax {
                class_sums[class][k] += counts[k];
            }
        }
        TwoBlocksTraceData {
            n,
            chars,
            class_sums,
        }
    }

    /// `γ_{(2^k,1^{n-2k}),λ}`.
    pub fn eigenvalue(&self, lambda: &Partition, k: usize) -> i64 {
        let li = self.chars.index_of(lambda);
        let mut acc = 0i64;
        for (class, sums) in self.class_sums.iter().enumerate() {
            acc += sums[k] as i64 * self.chars.values[li][class];
        }
        acc
    }

    /// The `w_0` sign on the non-kernel eigenspace of `χ^λ`:
    /// `(-1)^{(n - oddcols λ)/2}`.
    pub fn w0_sign(&self, lambda: &Partition) -> i8 {
        let a = (self.n - lambda.oddcols()) / 2;
        if a % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Assembled table of the non-kernel rows, one per irreducible.
    pub fn table(&self) -> SpectraTable {
        let kmax = self.n / 2;
        let rows: Vec<TableRow> = self
            .chars
            .partitions
            .iter()
            .map(|lam| {
                let eigenvalues: Vec<i64> =
                    (0..=kmax).map(|k| self.eigenvalue(lam, k)).collect();
                let mut multiplicities = BTreeMap::new();
                multiplicities.insert(lam.to_string(), 1u64);
                TableRow {
                    eigenvalues,
                    w0: Some(self.w0_sign(lam)),
                    multiplicities,
                }
            })
            .collect();
        let mut table = SpectraTable {
            schema: 1,
            n: self.n,
            family: Family::TwoBlocks,
            operators: family_operators(self.n, Family::TwoBlocks)
                .into_iter()
                .map(|(label, _)| label)
                .collect(),
            rows,
            integrality_violations: vec![],
        };
        table.sort_rows();
        table
    }
}

/// Gelfand-model check: the non-kernel multiplicity of `χ^λ` in
/// `ν_{(2^a,1^{n-2a})}` is 1 exactly from `a = (n - oddcols λ)/2` on, so the
/// new content at each level is multiplicity-free and covers every
/// irreducible exactly once.
pub fn gelfand_model_check(n: usize) -> Result<bool> {
    let kmax = n / 2;
    for lambda in partitions_of(n) {
        let rep = SeminormalRep::new(&lambda);
        let a0 = (n - lambda.oddcols()) / 2;
        for k in 0..=kmax {
            let block = nu_two_blocks_block(&rep, k)?;
            let rank = block.rank();
            let expected = if k >= a0 { 1 } else { 0 };
            if rank != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One compared cell of the conjectural eigenvalue formulas.
#[derive(Debug, Clone)]
pub struct ConjectureCell {
    pub description: String,
    pub expected: i64,
    pub computed: Option<i64>,
    pub matches: bool,
}

fn factorial_i64(n: u64) -> i64 {
    factorial(n) as i64
}

/// Eigenvalue of an operator on the single copy of `shape` inside the level
/// `j` rows of a columns-family table, when that copy is unique.
fn isotypic_eigenvalue(
    table: &SpectraTable,
    shape: &Partition,
    level: usize,
    op_index: usize,
) -> Option<i64> {
    let label = shape.to_string();
    let mut found = None;
    for row in &table.rows {
        if row.level(table.n) == level && row.multiplicities.contains_key(&label) {
            if found.is_some() || row.multiplicities[&label] != 1 {
                return None;
            }
            found = Some(row.eigenvalues[op_index]);
        }
    }
    found
}

/// Compare the conjectural closed forms against computed data: the
/// `(n-k)! C(n-r-1, k-r-1) C(n+r, k+r)` family on the `(n-1,1)`-isotypic
/// levels, and the explicit small-k table for the operators with k = 1, 2, 3.
pub fn conjecture_formula_scan(n: usize) -> Result<Vec<ConjectureCell>> {
    use crate::partition::binomial;
    let table = simultaneous_table(n, Family::Columns)?;
    let mut cells = Vec::new();
    let mut push = |description: String, expected: i64, computed: Option<i64>| {
        let matches = computed == Some(expected);
        cells.push(ConjectureCell {
            description,
            expected,
            computed,
            matches,
        });
    };
    // the defining-representation copy at level j = n-1-r
    let hook = Partition::hook_column(n, n - 1);
    for k in 1..n {
        for r in 1..n {
            let j = n - 1 - r;
            if j == n - 1 {
                continue;
            }
            let expected = factorial_i64((n - k) as u64)
                * binomial((n - r - 1) as u64, k as i64 - r as i64 - 1) as i64
                * binomial((n + r) as u64, (k + r) as i64) as i64;
            let computed = isotypic_eigenvalue(&table, &hook, j, k - 1);
            push(
                format!("nu_(k={k}) on chi^{hook} at level {j}"),
                expected,
                computed,
            );
        }
    }
    // small-k table: each listed shape at its level, for k = 1, 2, 3
    let mut entry = |shape: Partition, level: usize, k: usize, expected: i64| {
        if k < n {
            let computed = isotypic_eigenvalue(&table, &shape, level, k - 1);
            push(
                format!("nu_(k={k}) on chi^{shape} at level {level}"),
                expected,
                computed,
            );
        }
    };
    // top factor: the trivial module
    let trivial = Partition::new(vec![n as u8]).expect("row shape");
    entry(trivial.clone(), n, 1, factorial_i64(n as u64));
    for k in [2usize, 3] {
        if k < n {
            entry(
                trivial.clone(),
                n,
                k,
                (binomial(n as u64, k as i64).pow(2) * factorial((n - k) as u64)) as i64,
            );
        }
    }
    if n >= 3 {
        // level n-2
        entry(
            Partition::hook_column(n, n - 1),
            n - 2,
            2,
            factorial_i64((n + 1) as u64) / 6,
        );
        entry(
            Partition::hook_column(n, n - 1),
            n - 2,
            3,
            (n as i64 - 2) * factorial_i64((n + 1) as u64) / 24,
        );
        let hook2 = Partition::new({
            let mut parts = vec![(n - 2) as u8, 1, 1];
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts
        })
        .expect("shape");
        entry(hook2.clone(), n - 2, 2, factorial_i64(n as u64) / 6);
        entry(
            hook2.clone(),
            n - 2,
            3,
            binomial(n as u64, 2) as i64 * factorial_i64((n - 1) as u64) / 6,
        );
        if n >= 5 {
            // level n-3
            entry(
                Partition::hook_column(n, n - 1),
                n - 3,
                3,
                factorial_i64((n + 2) as u64) / 120,
            );
            let twotwo = Partition::from_unsorted(vec![(n - 2) as u8, 2]).expect("shape");
            entry(twotwo, n - 3, 3, factorial_i64((n + 1) as u64) / 30);
            entry(hook2, n - 3, 3, factorial_i64((n + 1) as u64) / 60);
            let mixed = Partition::from_unsorted(vec![(n - 3) as u8, 2, 1]).expect("shape");
            entry(mixed, n - 3, 3, factorial_i64(n as u64) / 15);
        }
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalg::GroupContext;
    use crate::operators::nu_element;
    use std::str::FromStr;

    /// Brute-force block: Σ_w noninv_λop(w) ρ(w).
    fn direct_block(rep: &SeminormalRep, lam_op: &Partition, ctx: &GroupContext) -> RatMatrix {
        let nu = nu_element(ctx, lam_op).unwrap();
        let mut acc = RatMatrix::zero(rep.dim, rep.dim);
        for (r, w) in ctx.perms.iter().enumerate() {
            if nu.coeffs[r] == 0 {
                continue;
            }
            acc = acc
                .add(&rep.rho_perm(w).scale(&q(nu.coeffs[r])))
                .unwrap();
        }
        acc
    }

    #[test]
    fn coset_blocks_match_direct_sums() {
        for n in 3..=5usize {
            let ctx = GroupContext::new(n);
            for lambda in partitions_of(n) {
                let rep = SeminormalRep::new(&lambda);
                for k in 1..=n {
                    let fast = nu_hook_block(&rep, k).unwrap();
                    let slow = direct_block(&rep, &Partition::hook_column(n, k), &ctx);
                    assert_eq!(fast, slow, "hook block k={k}, irrep {lambda}, n={n}");
                }
                for k in 0..=n / 2 {
                    let fast = nu_two_blocks_block(&rep, k).unwrap();
                    let slow = direct_block(&rep, &Partition::two_blocks(n, k), &ctx);
                    assert_eq!(fast, slow, "two-blocks k={k}, irrep {lambda}, n={n}");
                }
            }
        }
    }

    #[test]
    fn trivial_block_values() {
        // ν_{(2,1)} on the trivial irrep of S_3 is [9]
        let rep = SeminormalRep::new(&Partition::from_str("3").unwrap());
        let b = nu_hook_block(&rep, 2).unwrap();
        assert_eq!(b[(0, 0)], q(9));
    }

    #[test]
    fn chi22_block_eigenvalues_for_n4() {
        // against the figure rows carrying χ^{2,2}: ν_{(2,1^2)} acts by zero
        // there, and ν_{(3,1)} has eigenvalues {4, 0}
        let rep = SeminormalRep::new(&Partition::from_str("2,2").unwrap());
        assert!(nu_hook_block(&rep, 2).unwrap().is_zero());
        let b = nu_hook_block(&rep, 3).unwrap();
        let cp = ZPoly::from_rational_coeffs(&b.charpoly().unwrap()).unwrap();
        let (roots, residual) = factor_rational_roots(&cp).unwrap();
        assert_eq!(residual.degree(), 0);
        let mut vals: Vec<i64> = roots
            .iter()
            .map(|(r, _)| i64::try_from(r.to_integer()).unwrap())
            .collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![0, 4]);
    }

    #[test]
    fn hook_blocks_commute_per_irrep() {
        for n in [4usize, 5] {
            for lambda in partitions_of(n) {
                let rep = SeminormalRep::new(&lambda);
                let blocks: Vec<RatMatrix> = (1..n)
                    .map(|k| nu_hook_block(&rep, k).unwrap())
                    .collect();
                for i in 0..blocks.len() {
                    for j in i + 1..blocks.len() {
                        assert!(blocks[i].commutator_is_zero(&blocks[j]).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn n3_table_is_exact() {
        let t = simultaneous_table(3, Family::Columns).unwrap();
        assert!(t.integrality_violations.is_empty());
        let expected: Vec<(Vec<i64>, i8, Vec<(&str, u64)>)> = vec![
            (vec![6, 9], 1, vec![("3", 1)]),
            (vec![0, 4], -1, vec![("2,1", 1)]),
            (vec![0, 1], -1, vec![("1,1,1", 1)]),
            (vec![0, 0], 1, vec![("2,1", 1)]),
        ];
        assert_eq!(t.rows.len(), expected.len());
        for (row, (eigs, w0, mults)) in t.rows.iter().zip(&expected) {
            assert_eq!(&row.eigenvalues, eigs);
            assert_eq!(row.w0, Some(*w0));
            let want: BTreeMap<String, u64> = mults
                .iter()
                .map(|(l, m)| (l.to_string(), *m))
                .collect();
            assert_eq!(row.multiplicities, want);
        }
    }

    #[test]
    fn table_dimensions_sum_to_group_order() {
        for n in 2..=5usize {
            let t = simultaneous_table(n, Family::Columns).unwrap();
            let total: u64 = t.rows.iter().map(row_dimension).sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    #[test]
    fn filtration_dimensions_match_derangement_counts() {
        use crate::partition::binomial;
        for n in 2..=5usize {
            let report = kernel_filtration(n).unwrap();
            for j in 0..=n {
                let (d, dp, dm) = perm::derangement_counts(n - j);
                let c = binomial(n as u64, j as i64);
                assert_eq!(report.factor_dims[j].0, c * d, "factor dim at j={j}, n={n}");
                assert_eq!(report.factor_dims[j].1, c * dp);
                assert_eq!(report.factor_dims[j].2, c * dm);
            }
            // nullity of ν_{(n-1,1)} equals d_n
            let (d, _, _) = perm::derangement_counts(n);
            assert_eq!(report.kernel_dims[n - 2], d);
        }
    }

    #[test]
    fn filtration_matches_tableau_prediction() {
        use crate::tableaux::predicted_factor;
        for n in 2..=5usize {
            let report = kernel_filtration(n).unwrap();
            for j in 0..=n {
                let mut predicted: BTreeMap<(Partition, i8), u64> = BTreeMap::new();
                for (shape, sign) in predicted_factor(n, j) {
                    *predicted.entry((shape, sign)).or_insert(0) += 1;
                }
                assert_eq!(report.factors[j], predicted, "level {j} at n = {n}");
            }
        }
    }

    #[test]
    fn two_blocks_table_n4() {
        let t = simultaneous_table(4, Family::TwoBlocks).unwrap();
        // rows: χ^4: (24, 72, 18, +), χ^{31}: (0,20,10,-), χ^{211}: (0,4,2,-),
        // χ^{22}: (0,0,8,+), χ^{1111}: (0,0,2,+)
        let find = |lam: &str| {
            t.rows
                .iter()
                .find(|r| r.multiplicities.contains_key(lam))
                .unwrap()
        };
        assert_eq!(find("4").eigenvalues, vec![24, 72, 18]);
        assert_eq!(find("4").w0, Some(1));
        assert_eq!(find("3,1").eigenvalues, vec![0, 20, 10]);
        assert_eq!(find("3,1").w0, Some(-1));
        assert_eq!(find("2,1,1").eigenvalues, vec![0, 4, 2]);
        assert_eq!(find("2,2").eigenvalues, vec![0, 0, 8]);
        assert_eq!(find("2,2").w0, Some(1));
        assert_eq!(find("1,1,1,1").eigenvalues, vec![0, 0, 2]);
    }

    #[test]
    fn trace_formula_matches_blocks() {
        for n in 3..=5usize {
            let data = TwoBlocksTraceData::new(n);
            let block_table = simultaneous_table(n, Family::TwoBlocks).unwrap();
            let trace_table = data.table();
            assert_eq!(block_table.rows, trace_table.rows, "n = {n}");
        }
    }

    #[test]
    fn second_family_eigenvalue_examples() {
        let d4 = TwoBlocksTraceData::new(4);
        assert_eq!(d4.eigenvalue(&Partition::from_str("4").unwrap(), 1), 72);
        assert_eq!(d4.eigenvalue(&Partition::from_str("2,2").unwrap(), 2), 8);
        // all-ones eigenvalue on the trivial module is n!
        for n in 2..=6usize {
            let d = TwoBlocksTraceData::new(n);
            let triv = Partition::from_str(&n.to_string()).unwrap();
            assert_eq!(d.eigenvalue(&triv, 0), factorial(n as u64) as i64);
        }
        // vanishing outside the oddcols support
        let d5 = TwoBlocksTraceData::new(5);
        for lam in partitions_of(5) {
            for k in 0..=2usize {
                let gamma = d5.eigenvalue(&lam, k);
                if lam.oddcols() < 5 - 2 * k {
                    assert_eq!(gamma, 0, "γ must vanish for {lam}, k={k}");
                } else {
                    assert!(gamma > 0, "γ must be positive for {lam}, k={k}");
                }
            }
        }
    }

    #[test]
    fn conjecture_cells_match_at_small_n() {
        for n in [4usize, 5] {
            for cell in conjecture_formula_scan(n).unwrap() {
                assert!(
                    cell.matches,
                    "n={n}: {} expected {} computed {:?}",
                    cell.description, cell.expected, cell.computed
                );
            }
        }
    }

    #[test]
    fn gelfand_model_small() {
        for n in 2..=5usize {
            assert!(gelfand_model_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn two_blocks_filtration_layers() {
        for n in 2..=6usize {
            let report = two_blocks_filtration(n).unwrap();
            assert!(report.nested, "two-blocks kernels must nest at n = {n}");
            for k in 0..=n / 2 {
                let expected: u64 = partitions_of(n)
                    .iter()
                    .filter(|lam| lam.oddcols() == n - 2 * k)
                    .map(|lam| lam.dimension())
                    .sum();
                assert_eq!(report.layer_dims[k], expected, "layer {k} at n = {n}");
            }
            // the final kernel complements the full Gelfand model
            let model: u64 = partitions_of(n).iter().map(|l| l.dimension()).sum();
            assert_eq!(
                report.kernel_dims[n / 2],
                factorial(n as u64) - model
            );
        }
    }
}
