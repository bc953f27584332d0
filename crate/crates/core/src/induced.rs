//! Induced characters from centralizers in the symmetric group, with
//! root-of-unity values carried in double precision and integer rounding
//! guarded by a residual tolerance. The exact Lyndon/descent monomial
//! oracle cross-checks everything computed here.

use crate::chars::CharacterTable;
use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};
use crate::perm::{self, Permutation};
use std::collections::BTreeMap;

const ROUNDING_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn one() -> Self {
        C64 { re: 1.0, im: 0.0 }
    }
    pub fn zero() -> Self {
        C64 { re: 0.0, im: 0.0 }
    }
    pub fn root_of_unity(num: i64, den: usize) -> Self {
        let theta = 2.0 * std::f64::consts::PI * num as f64 / den as f64;
        C64 {
            re: theta.cos(),
            im: theta.sin(),
        }
    }
    pub fn mul(self, other: C64) -> C64 {
        C64 {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }
    pub fn add(self, other: C64) -> C64 {
        C64 {
            re: self.re + other.re,
            im: self.im + other.im,
        }
    }
}

/// A subgroup presented as explicit elements with linear character values.
pub struct LinearCharacter {
    pub elements: Vec<(Permutation, C64)>,
}

/// The standard cycle-product element of cycle type `λ`: disjoint cycles on
/// consecutive blocks `(1..λ_1)(λ_1+1..)...`.
pub fn standard_element_of_type(lambda: &Partition) -> Permutation {
    let n = lambda.sum();
    let mut images: Vec<u8> = (1..=n as u8).collect();
    let mut start = 0usize;
    for &p in lambda.parts() {
        let p = p as usize;
        for j in 0..p {
            images[start + j] = (start + (j + 1) % p) as u8 + 1;
        }
        start += p;
    }
    Permutation::new(images).expect("cycle product")
}

/// The centralizer of `v` with the degree-one character that sends each
/// `j`-cycle rotation offset to `exp(2πi/j)` and permutations of equal
/// cycles to 1.
pub fn lehrer_solomon_character(lambda: &Partition) -> LinearCharacter {
    let n = lambda.sum();
    let v = standard_element_of_type(lambda);
    // cycles of v with fixed starting points
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut start = 1usize;
    for &p in lambda.parts() {
        let p = p as usize;
        let mut c = Vec::with_capacity(p);
        let mut cur = start;
        for _ in 0..p {
            c.push(cur);
            cur = v.apply(cur);
        }
        cycles.push(c);
        start += p;
    }
    let mut elements = Vec::new();
    for u in perm::enumerate(n) {
        if u.compose(&v).unwrap() != v.compose(&u).unwrap() {
            continue;
        }
        // u maps each cycle onto a cycle of the same length with an offset
        let mut value = C64::one();
        for c in &cycles {
            let image_start = u.apply(c[0]);
            let target = cycles
                .iter()
                .find(|d| d.contains(&image_start))
                .expect("centralizer permutes cycles");
            let offset = target
                .iter()
                .position(|&x| x == image_start)
                .expect("member") as i64;
            value = value.mul(C64::root_of_unity(offset, c.len()));
        }
        elements.push((u, value));
    }
    LinearCharacter { elements }
}

/// Character of `Ind_U^G χ` as a class function on cycle types:
/// `(1/|U|) Σ_{x ∈ G, x^{-1} g x ∈ U} χ(x^{-1} g x)`.
pub fn induced_character(subgroup: &LinearCharacter, n: usize) -> Vec<(Partition, C64)> {
    let table: BTreeMap<&Permutation, C64> = subgroup
        .elements
        .iter()
        .map(|(u, c)| (u, *c))
        .collect();
    let usize_u = subgroup.elements.len() as f64;
    let all = perm::enumerate(n);
    crate::partition::partitions_of(n)
        .into_iter()
        .map(|class| {
            let g = all
                .iter()
                .find(|w| w.cycle_type() == class)
                .expect("class representative");
            let mut acc = C64::zero();
            for x in &all {
                let conj = x
                    .inverse()
                    .compose(g)
                    .unwrap()
                    .compose(x)
                    .unwrap();
                if let Some(c) = table.get(&conj) {
                    acc = acc.add(*c);
                }
            }
            (
                class,
                C64 {
                    re: acc.re / usize_u,
                    im: acc.im / usize_u,
                },
            )
        })
        .collect()
}

/// Inner products of an induced character with every irreducible, rounded
/// to integers; errors when any residual exceeds the tolerance.
pub fn irreducible_multiplicities(
    induced: &[(Partition, C64)],
    table: &CharacterTable,
) -> Result<Vec<(Partition, u64)>> {
    let n = table.n;
    let order = factorial(n as u64) as f64;
    let mut out = Vec::new();
    for (i, lam) in table.partitions.iter().enumerate() {
        let mut acc_re = 0.0;
        let mut acc_im = 0.0;
        for (j, (class, value)) in induced.iter().enumerate() {
            debug_assert_eq!(class, &table.partitions[j]);
            let weight = table.class_sizes[j] as f64 * table.values[i][j] as f64;
            acc_re += weight * value.re;
            acc_im += weight * value.im;
        }
        let m = acc_re / order;
        let rounded = m.round();
        let residual = (m - rounded).abs().max((acc_im / order).abs());
        if residual > ROUNDING_TOLERANCE {
            return Err(Error::Rounding(residual));
        }
        if rounded < 0.0 {
            return Err(Error::Rounding(rounded));
        }
        out.push((lam.clone(), rounded as u64));
    }
    Ok(out)
}

/// Monomial expansion (in `m` variables) of the symmetric function with
/// the given class-function values, via power sums:
/// `ch f = Σ_μ z_μ^{-1} f(μ) p_μ`.
pub fn class_function_monomials(
    values: &[(Partition, C64)],
    m: usize,
) -> BTreeMap<Vec<u8>, f64> {
    let mut out: BTreeMap<Vec<u8>, f64> = BTreeMap::new();
    for (mu, val) in values {
        let z = mu.centralizer_order() as f64;
        // expand p_mu = ∏ p_{mu_i} over exponent vectors
        let mut terms: BTreeMap<Vec<u8>, f64> = BTreeMap::new();
        terms.insert(vec![0u8; m], 1.0);
        for &part in mu.parts() {
            let mut next: BTreeMap<Vec<u8>, f64> = BTreeMap::new();
            for (expo, coeff) in &terms {
                for var in 0..m {
                    let mut e = expo.clone();
                    e[var] += part;
                    *next.entry(e).or_insert(0.0) += coeff;
                }
            }
            terms = next;
        }
        for (e, c) in terms {
            *out.entry(e).or_insert(0.0) += val.re * c / z;
        }
    }
    out
}

/// The Whitney-dimension identity: the induced character of the
/// Lehrer–Solomon linear character has dimension `#{w : cycle type λ}`.
pub fn lehrer_solomon_dimension_check(lambda: &Partition) -> Result<bool> {
    let n = lambda.sum();
    let lc = lehrer_solomon_character(lambda);
    let induced = induced_character(&lc, n);
    let id_value = induced
        .iter()
        .find(|(c, _)| c.parts().iter().all(|&p| p == 1))
        .map(|(_, v)| v.re)
        .unwrap_or(0.0);
    let expected = lambda.class_size() as f64;
    Ok((id_value - expected).abs() < ROUNDING_TOLERANCE * expected.max(1.0))
}
