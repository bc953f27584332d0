//! The face semigroup of the braid arrangement (ordered set partitions under
//! the pull product), the Bidigare face operators acting on chambers, and
//! Brown's minimal-polynomial criterion for weighted face sums.

use crate::error::{Error, Result};
use crate::groupalg::GroupContext;
use crate::matrix::{IntMatrix, RatMatrix};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::setpart::{self, SetPartition};
use crate::{Q, Z};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A face of the braid arrangement: an ordered set partition of `{1..n}`
/// (blocks are sets, kept sorted internally). Chambers are the faces with
/// all blocks singletons.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    blocks: Vec<Vec<u8>>,
}

impl std::fmt::Display for Face {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "({})", blocks.join("|"))
    }
}

impl Face {
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<Self> {
        let mut all: Vec<u8> = blocks.iter().flatten().copied().collect();
        let n = all.len();
        all.sort_unstable();
        if all != (1..=n as u8).collect::<Vec<_>>() || blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::InvalidPartition(format!(
                "blocks {blocks:?} are not an ordered set partition"
            )));
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Face { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn is_chamber(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// The chamber of `w`: singleton blocks in one-line order.
    pub fn chamber_of(w: &Permutation) -> Face {
        Face {
            blocks: w.images().iter().map(|&v| vec![v]).collect(),
        }
    }

    /// Chamber back to its permutation.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_chamber() {
            return None;
        }
        Permutation::new(self.blocks.iter().map(|b| b[0]).collect()).ok()
    }

    /// The pull product: refine each block of `self` by the order in which
    /// the blocks of `other` meet it.
    pub fn product(&self, other: &Face) -> Result<Face> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch("face product".into()));
        }
        let mut blocks = Vec::new();
        for b in &self.blocks {
            for c in &other.blocks {
                let inter: Vec<u8> = b.iter().copied().filter(|e| c.contains(e)).collect();
                if !inter.is_empty() {
                    blocks.push(inter);
                }
            }
        }
        Ok(Face { blocks })
    }

    /// Underlying unordered set partition (the support subspace).
    pub fn support(&self) -> SetPartition {
        SetPartition::new(self.blocks.clone()).expect("face blocks partition 1..n")
    }

    /// The face `x(J)` of the fundamental chamber with support of type `λ`:
    /// consecutive-integer blocks in increasing order.
    pub fn fundamental_of_type(lambda: &Partition) -> Face {
        let mut blocks = Vec::new();
        let mut next = 1u8;
        for &p in lambda.parts() {
            blocks.push((next..next + p).collect());
            next += p;
        }
        Face { blocks }
    }

    pub fn apply(&self, w: &Permutation) -> Face {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut im: Vec<u8> = b.iter().map(|&e| w.apply(e as usize) as u8).collect();
                im.sort_unstable();
                im
            })
            .collect();
        Face { blocks }
    }
}

/// All ordered set partitions of `{1..n}`.
pub fn enumerate_faces(n: usize) -> Vec<Face> {
    let mut out = Vec::new();
    for sp in setpart::enumerate_all(n) {
        let k = sp.blocks().len();
        // all orderings of the blocks
        let mut idx: Vec<usize> = (0..k).collect();
        permute_orders(&mut idx, 0, sp.blocks(), &mut out);
    }
    out.sort();
    out
}

fn permute_orders(idx: &mut Vec<usize>, at: usize, blocks: &[Vec<u8>], out: &mut Vec<Face>) {
    if at == idx.len() {
        out.push(Face {
            blocks: idx.iter().map(|&i| blocks[i].clone()).collect(),
        });
        return;
    }
    for i in at..idx.len() {
        idx.swap(at, i);
        permute_orders(idx, at + 1, blocks, out);
        idx.swap(at, i);
    }
}

/// The orbit of `x(J)` under the symmetric group: ordered set partitions
/// whose i-th block has the i-th size of the fundamental face.
pub fn orbit_of_fundamental(ctx: &GroupContext, lambda: &Partition) -> Vec<Face> {
    let x = Face::fundamental_of_type(lambda);
    let mut orbit: Vec<Face> = ctx.perms.iter().map(|w| x.apply(w)).collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

/// Matrix of left multiplication by `Σ_{y ∈ x(J)^W} y` on chambers, in the
/// lexicographic permutation basis.
pub fn bhr_matrix(ctx: &GroupContext, lambda: &Partition) -> Result<IntMatrix> {
    if lambda.sum() != ctx.n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {}",
            ctx.n
        )));
    }
    let orbit = orbit_of_fundamental(ctx, lambda);
    let order = ctx.order();
    let mut m = IntMatrix::zero(order, order);
    for (col, w) in ctx.perms.iter().enumerate() {
        let chamber = Face::chamber_of(w);
        for y in &orbit {
            let image = y.product(&chamber)?;
            let u = image.to_permutation().expect("face times chamber is a chamber");
            m[(u.lex_rank(), col)] += 1;
        }
    }
    Ok(m)
}

/// A W-invariant nonnegative weight assignment: one rational per block-size
/// composition (the orbit of a face is determined by its size sequence).
pub type FaceWeights = BTreeMap<Vec<u8>, Q>;

fn composition_of(face: &Face) -> Vec<u8> {
    face.blocks.iter().map(|b| b.len() as u8).collect()
}

/// Matrix of the weighted face operator `Σ_x p_x x` acting on chambers.
pub fn weighted_face_matrix(ctx: &GroupContext, weights: &FaceWeights) -> Result<RatMatrix> {
    for w in weights.values() {
        if w < &Q::zero() {
            return Err(Error::NegativeWeight);
        }
    }
    let order = ctx.order();
    let mut m = RatMatrix::zero(order, order);
    for face in enumerate_faces(ctx.n) {
        let Some(p) = weights.get(&composition_of(&face)) else {
            continue;
        };
        if p.is_zero() {
            continue;
        }
        for (col, w) in ctx.perms.iter().enumerate() {
            let image = face.product(&Face::chamber_of(w))?;
            let u = image.to_permutation().expect("chamber");
            m[(u.lex_rank(), col)] += p;
        }
    }
    Ok(m)
}

/// The candidate eigenvalues `λ_X = Σ_{supp(x) ⊆ X} p_x` over the partition
/// lattice: the total weight of faces whose support subspace contains `X`,
/// i.e. whose underlying partition is coarsened by refinement from `X`.
pub fn lattice_eigenvalue_candidates(n: usize, weights: &FaceWeights) -> Vec<(SetPartition, Q)> {
    let lattice = setpart::enumerate_all(n);
    let faces = enumerate_faces(n);
    lattice
        .into_iter()
        .map(|x| {
            let mut acc = Q::zero();
            for f in &faces {
                if let Some(p) = weights.get(&composition_of(f)) {
                    if x.refines(&f.support()) {
                        acc += p;
                    }
                }
            }
            (x, acc)
        })
        .collect()
}

/// Exact minimal polynomial of a square rational matrix via Krylov chains:
/// the monic least common annihilator over standard basis start vectors,
/// with a final full certification `p(M) = 0`.
pub fn minimal_polynomial(m: &RatMatrix) -> Result<Vec<Q>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut min_poly: Vec<Q> = vec![Q::one()];
    for start in 0..n {
        // cheap rejection on the basis vector before running its chain
        let mut v = RatMatrix::zero(n, 1);
        v[(start, 0)] = Q::one();
        if poly_kills_vector(m, &min_poly, &v)? {
            continue;
        }
        let local = krylov_annihilator(m, &v)?;
        min_poly = poly_lcm(&min_poly, &local);
    }
    // every basis vector is annihilated (checked or by construction, and
    // the polynomial only grows by multiples), so p(M) = 0 exactly
    Ok(min_poly)
}

fn poly_kills_vector(m: &RatMatrix, poly: &[Q], v: &RatMatrix) -> Result<bool> {
    let mut acc = v.scale(&poly[0]);
    let mut power = v.clone();
    for c in poly.iter().skip(1) {
        power = m.mul(&power)?;
        if !c.is_zero() {
            acc = acc.add(&power.scale(c))?;
        }
    }
    Ok(acc.is_zero())
}

fn krylov_annihilator(m: &RatMatrix, v: &RatMatrix) -> Result<Vec<Q>> {
    let n = m.rows();
    let mut basis: Vec<RatMatrix> = vec![v.clone()];
    loop {
        let next = m.mul(basis.last().unwrap())?;
        // solve for dependence: [basis | next]
        let k = basis.len();
        let mut aug = RatMatrix::zero(n, k + 1);
        for (j, b) in basis.iter().enumerate() {
            for r in 0..n {
                aug[(r, j)] = b[(r, 0)].clone();
            }
        }
        for r in 0..n {
            aug[(r, k)] = next[(r, 0)].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&k) {
            basis.push(next);
            continue;
        }
        // next = Σ c_j basis_j: monic annihilator t^k - Σ c_j t^j
        let mut coeffs = vec![Q::zero(); k + 1];
        for (prow, &pc) in pivots.iter().enumerate() {
            coeffs[pc] = -aug[(prow, k)].clone();
        }
        coeffs[k] = Q::one();
        return Ok(coeffs);
    }
}

fn poly_lcm(a: &[Q], b: &[Q]) -> Vec<Q> {
    let za = clear_denominators(a);
    let zb = clear_denominators(b);
    let g = za.gcd(&zb);
    let prod = za.mul(&zb);
    let lcm = prod.div_exact(&g).expect("gcd divides product").primitive();
    // re-monicize over Q
    let lead = Q::from_integer(lcm.leading());
    lcm.coeffs()
        .iter()
        .map(|c| Q::from_integer(c.clone()) / &lead)
        .collect()
}

fn clear_denominators(p: &[Q]) -> crate::poly::ZPoly {
    use num_integer::Integer;
    let mut denom = Z::one();
    for c in p {
        denom = denom.lcm(c.denom());
    }
    crate::poly::ZPoly::new(
        p.iter()
            .map(|c| (c * Q::from_integer(denom.clone())).to_integer())
            .collect(),
    )
}

pub struct BrownReport {
    /// ascending coefficients of the minimal polynomial
    pub min_poly: Vec<Q>,
    pub squarefree: bool,
    pub roots_within_candidates: bool,
    pub roots: Vec<Q>,
}

/// Brown's criterion instance: the minimal polynomial of a nonnegative
/// W-invariant face operator is squarefree with roots among the `λ_X`.
pub fn brown_min_poly(ctx: &GroupContext, weights: &FaceWeights) -> Result<BrownReport> {
    let m = weighted_face_matrix(ctx, weights)?;
    let min_poly = minimal_polynomial(&m)?;
    let candidates: Vec<Q> = lattice_eigenvalue_candidates(ctx.n, weights)
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    // extract roots by exact division against the candidate set
    let mut rem = min_poly.clone();
    let mut roots = Vec::new();
    let mut uniq = candidates.clone();
    uniq.sort();
    uniq.dedup();
    for cand in &uniq {
        while rem.len() > 1 && eval_qpoly(&rem, cand).is_zero() {
            rem = divide_linear(&rem, cand);
            roots.push(cand.clone());
        }
    }
    let fully_split = rem.len() == 1;
    let mut sorted = roots.clone();
    sorted.sort();
    sorted.dedup();
    let squarefree = sorted.len() == roots.len() && fully_split;
    Ok(BrownReport {
        min_poly,
        squarefree,
        roots_within_candidates: fully_split,
        roots,
    })
}

fn eval_qpoly(p: &[Q], x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn divide_linear(p: &[Q], root: &Q) -> Vec<Q> {
    // synthetic division by (t - root)
    let mut out = vec![Q::zero(); p.len() - 1];
    let mut carry = Q::zero();
    for i in (0..p.len() - 1).rev() {
        let c = &p[i + 1] + &carry;
        out[i] = c.clone();
        carry = c * root;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use rand::{Rng, SeedableRng};

    fn face(blocks: &[&[u8]]) -> Face {
        Face::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn pull_product_example() {
        let x = face(&[&[1, 2], &[3]]);
        let y = face(&[&[2], &[1], &[3]]);
        assert_eq!(x.product(&y).unwrap(), face(&[&[2], &[1], &[3]]));
    }

    #[test]
    fn left_regular_band_laws() {
        // x^2 = x and xyx = xy over random faces of the n = 5 arrangement
        let faces = enumerate_faces(5);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let x = &faces[rng.gen_range(0..faces.len())];
            let y = &faces[rng.gen_range(0..faces.len())];
            assert_eq!(x.product(x).unwrap(), *x);
            let xy = x.product(y).unwrap();
            assert_eq!(xy.product(x).unwrap(), xy);
        }
    }

    #[test]
    fn chambers_absorb() {
        let faces = enumerate_faces(4);
        let c = face(&[&[2], &[4], &[1], &[3]]);
        for y in &faces {
            assert_eq!(c.product(y).unwrap(), c);
        }
    }

    #[test]
    fn face_counts() {
        // ordered Bell numbers
        let counts = [1usize, 1, 3, 13, 75, 541];
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(enumerate_faces(n).len(), c);
        }
    }

    #[test]
    fn bidigare_correspondence() {
        // left multiplication by the x(J)-orbit sum equals right
        // multiplication by R^X under the chamber identification
        use crate::operators::coset_square_root;
        for n in 2..=5usize {
            let ctx = GroupContext::new(n);
            for lam in crate::partition::partitions_of(n) {
                let b = bhr_matrix(&ctx, &lam).unwrap();
                let cs = coset_square_root(&ctx, &lam).unwrap();
                let right = cs.r_left.right_mult_matrix(&ctx);
                assert_eq!(b, right, "Bidigare correspondence fails for {lam} at n={n}");
            }
        }
    }

    #[test]
    fn bhr_squares_to_nu() {
        // ν = (1/n_X) b^T b and shared kernels
        use crate::operators::{coset_square_root, nu_matrix};
        for n in 2..=5usize {
            let ctx = GroupContext::new(n);
            for lam in crate::partition::partitions_of(n) {
                let b = bhr_matrix(&ctx, &lam).unwrap();
                let nu = nu_matrix(&ctx, &lam).unwrap();
                let n_x = coset_square_root(&ctx, &lam).unwrap().n_x as i64;
                let btb = b.transpose().mul(&b).unwrap();
                for r in 0..nu.rows() {
                    for c in 0..nu.cols() {
                        assert_eq!(btb[(r, c)], n_x * nu[(r, c)]);
                    }
                }
                // same kernel
                let kb = b.to_rat().kernel_basis();
                let knu = nu.to_rat().kernel_basis();
                assert_eq!(kb.cols(), knu.cols());
                assert!(b.to_rat().mul(&knu).unwrap().is_zero());
                assert!(nu.to_rat().mul(&kb).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn random_to_top_instance() {
        // λ = (n-1,1): b^T b = ν_{(n-1,1)} with n_X = 1
        use crate::operators::nu_matrix;
        let ctx = GroupContext::new(4);
        let lam = Partition::hook_column(4, 3);
        let b = bhr_matrix(&ctx, &lam).unwrap();
        assert_eq!(b.transpose().mul(&b).unwrap(), nu_matrix(&ctx, &lam).unwrap());
    }

    #[test]
    fn all_ones_degenerate_case() {
        // λ = (1^n): the orbit is all chambers, b is the all-ones matrix,
        // and b^T b = n! ν_{(1^n)}
        use crate::operators::nu_matrix;
        let ctx = GroupContext::new(3);
        let lam = Partition::new(vec![1, 1, 1]).unwrap();
        let b = bhr_matrix(&ctx, &lam).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(b[(r, c)], 1);
            }
        }
        let nu = nu_matrix(&ctx, &lam).unwrap();
        let btb = b.transpose().mul(&b).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(btb[(r, c)], 6 * nu[(r, c)]);
            }
        }
    }

    #[test]
    fn brown_zero_weights() {
        let ctx = GroupContext::new(3);
        let weights = FaceWeights::new();
        let report = brown_min_poly(&ctx, &weights).unwrap();
        // zero operator: minimal polynomial t
        assert_eq!(report.min_poly, vec![q(0), q(1)]);
        assert!(report.squarefree);
    }

    #[test]
    fn brown_single_orbit_weight() {
        // weight 1 on the x(J)-orbit for λ = (2,1,1), n = 4
        let ctx = GroupContext::new(4);
        let mut weights = FaceWeights::new();
        weights.insert(vec![2, 1, 1], q(1));
        let report = brown_min_poly(&ctx, &weights).unwrap();
        assert!(report.squarefree);
        assert!(report.roots_within_candidates);
    }

    #[test]
    fn brown_random_nonnegative_weights() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [4usize, 5] {
            let ctx = GroupContext::new(n);
            let comps: Vec<Vec<u8>> = enumerate_faces(n)
                .iter()
                .map(|f| f.blocks().iter().map(|b| b.len() as u8).collect())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            for _ in 0..2 {
                let mut weights = FaceWeights::new();
                for comp in &comps {
                    weights.insert(comp.clone(), q(rng.gen_range(0..5)));
                }
                let report = brown_min_poly(&ctx, &weights).unwrap();
                assert!(report.squarefree, "minimal polynomial must be squarefree");
                assert!(report.roots_within_candidates);
            }
        }
    }

    #[test]
    fn negative_weight_rejected() {
        let ctx = GroupContext::new(3);
        let mut weights = FaceWeights::new();
        weights.insert(vec![1, 1, 1], q(-1));
        assert!(matches!(
            weighted_face_matrix(&ctx, &weights),
            Err(Error::NegativeWeight)
        ));
    }
}
