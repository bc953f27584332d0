//! Group algebra of the symmetric group: dense rational/integer coefficient
//! vectors indexed by lexicographic rank, convolution products, and the
//! Eulerian idempotents.

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::perm::{self, Permutation};
use crate::{Q, Z};
use num_traits::{One, Zero};

/// Shared context: the permutations of `S_n` in lexicographic order, their
/// inverses, and (for small `n`) a composition table.
pub struct GroupContext {
    pub n: usize,
    pub perms: Vec<Permutation>,
    pub inv_rank: Vec<u32>,
    compose_table: Option<Vec<u32>>,
}

impl GroupContext {
    pub fn new(n: usize) -> Self {
        let perms = perm::enumerate(n);
        let inv_rank = perms.iter().map(|w| w.inverse().lex_rank() as u32).collect();
        // the full table is quadratic in n!; keep it to desk sizes
        let compose_table = if n <= 6 {
            let order = perms.len();
            let mut table = vec![0u32; order * order];
            for (a, u) in perms.iter().enumerate() {
                for (b, v) in perms.iter().enumerate() {
                    table[a * order + b] = u.compose(v).unwrap().lex_rank() as u32;
                }
            }
            Some(table)
        } else {
            None
        };
        GroupContext {
            n,
            perms,
            inv_rank,
            compose_table,
        }
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Rank of `perms[a] ∘ perms[b]`.
    pub fn compose_ranks(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.compose_table {
            t[a * self.order() + b] as usize
        } else {
            self.perms[a]
                .compose(&self.perms[b])
                .expect("same n")
                .lex_rank()
        }
    }
}

/// Dense rational group-algebra element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QElement {
    pub n: usize,
    pub coeffs: Vec<Q>,
}

impl QElement {
    pub fn zero(ctx: &GroupContext) -> Self {
        QElement {
            n: ctx.n,
            coeffs: vec![Q::zero(); ctx.order()],
        }
    }

    pub fn identity(ctx: &GroupContext) -> Self {
        let mut e = QElement::zero(ctx);
        e.coeffs[Permutation::identity(ctx.n).lex_rank()] = Q::one();
        e
    }

    pub fn single(ctx: &GroupContext, w: &Permutation, coeff: Q) -> Self {
        let mut e = QElement::zero(ctx);
        e.coeffs[w.lex_rank()] = coeff;
        e
    }

    pub fn from_fn(ctx: &GroupContext, mut f: impl FnMut(&Permutation) -> Q) -> Self {
        QElement {
            n: ctx.n,
            coeffs: ctx.perms.iter().map(|w| f(w)).collect(),
        }
    }

    pub fn coefficient(&self, w: &Permutation) -> &Q {
        &self.coeffs[w.lex_rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &QElement) -> Result<QElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch("group algebra add".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QElement) -> Result<QElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch("group algebra sub".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> QElement {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Convolution product `(a b)(w) = Σ_{uv = w} a(u) b(v)`.
    pub fn mul(&self, other: &QElement, ctx: &GroupContext) -> Result<QElement> {
        if self.n != other.n || self.n != ctx.n {
            return Err(Error::SizeMismatch("group algebra mul".into()));
        }
        let mut out = QElement::zero(ctx);
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let w = ctx.compose_ranks(a, b);
                let prod = ca * cb;
                out.coeffs[w] += prod;
            }
        }
        Ok(out)
    }

    /// `w -> w^{-1}` extended linearly.
    pub fn antipode(&self, ctx: &GroupContext) -> QElement {
        let mut out = QElement::zero(ctx);
        for (a, ca) in self.coeffs.iter().enumerate() {
            out.coeffs[ctx.inv_rank[a] as usize] = ca.clone();
        }
        out
    }

    /// Matrix of right multiplication `x -> x * self` on the lexicographic
    /// permutation basis: entry `(u, v)` is `coeff(v^{-1} u)`.
    pub fn right_mult_matrix(&self, ctx: &GroupContext) -> RatMatrix {
        let order = ctx.order();
        RatMatrix::from_fn(order, order, |u, v| {
            let vinv = ctx.inv_rank[v] as usize;
            self.coeffs[ctx.compose_ranks(vinv, u)].clone()
        })
    }

    pub fn to_int(&self) -> Option<IntElement> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(i64::try_from(c.to_integer()).ok()?);
        }
        Some(IntElement { n: self.n, coeffs })
    }

    /// Pairs `(w, coeff)` of the nonzero terms.
    pub fn terms(&self, ctx: &GroupContext) -> Vec<(Permutation, Q)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (ctx.perms[r].clone(), c.clone()))
            .collect()
    }
}

/// Dense integer group-algebra element for the larger convolutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntElement {
    pub n: usize,
    pub coeffs: Vec<i64>,
}

impl IntElement {
    pub fn from_fn(ctx: &GroupContext, mut f: impl FnMut(&Permutation) -> i64) -> Self {
        IntElement {
            n: ctx.n,
            coeffs: ctx.perms.iter().map(|w| f(w)).collect(),
        }
    }

    pub fn mul(&self, other: &IntElement, ctx: &GroupContext) -> Result<IntElement> {
        if self.n != other.n || self.n != ctx.n {
            return Err(Error::SizeMismatch("integer group algebra mul".into()));
        }
        let mut out = vec![0i128; ctx.order()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                out[ctx.compose_ranks(a, b)] += ca as i128 * cb as i128;
            }
        }
        Ok(IntElement {
            n: self.n,
            coeffs: out
                .into_iter()
                .map(|c| i64::try_from(c).expect("convolution overflow"))
                .collect(),
        })
    }

    /// Integer matrix of right multiplication on the permutation basis.
    pub fn right_mult_matrix(&self, ctx: &GroupContext) -> IntMatrix {
        let order = ctx.order();
        IntMatrix::from_fn(order, order, |u, v| {
            let vinv = ctx.inv_rank[v] as usize;
            self.coeffs[ctx.compose_ranks(vinv, u)]
        })
    }

    pub fn to_rat(&self) -> QElement {
        QElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|&c| crate::q(c)).collect(),
        }
    }
}

/// Matrix of the left action of `g` on the permutation basis.
pub fn left_action_matrix(ctx: &GroupContext, g: &Permutation) -> RatMatrix {
    let order = ctx.order();
    let grank = g.lex_rank();
    let mut m = RatMatrix::zero(order, order);
    for v in 0..order {
        m[(ctx.compose_ranks(grank, v), v)] = Q::one();
    }
    m
}

/// The Eulerian idempotents `e^{(1)}, ..., e^{(n)}`, read off the generating
/// function `(1/n!) Σ_σ (t - des σ)(t - des σ + 1)...(t - des σ + n - 1) σ`.
pub fn eulerian_idempotents(ctx: &GroupContext) -> Vec<QElement> {
    let n = ctx.n;
    let order_fact = Q::from_integer(Z::from(crate::partition::factorial(n as u64)));
    let mut out = vec![QElement::zero(ctx); n];
    for (r, w) in ctx.perms.iter().enumerate() {
        let d = w.descent_set().len() as i64;
        // expand (t - d)(t - d + 1)...(t - d + n - 1)
        let mut coeffs = vec![Z::zero(); n + 1];
        coeffs[0] = Z::one();
        for i in 0..n as i64 {
            let c = Z::from(i - d);
            for k in (0..=i as usize).rev() {
                let v = coeffs[k].clone();
                coeffs[k + 1] += &v;
                coeffs[k] = v * &c;
            }
        }
        for j in 1..=n {
            if !coeffs[j].is_zero() {
                out[j - 1].coeffs[r] = Q::from_integer(coeffs[j].clone()) / &order_fact;
            }
        }
    }
    out
}

/// Degree-one character idempotent `(1/n!) Σ χ(w) w` for `χ` trivial or sign.
pub fn linear_idempotent(ctx: &GroupContext, sign: bool) -> QElement {
    let order = Q::from_integer(Z::from(crate::partition::factorial(ctx.n as u64)));
    QElement::from_fn(ctx, |w| {
        let chi = if sign { crate::q(w.sign()) } else { Q::one() };
        chi / &order
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn identity_is_neutral() {
        let ctx = GroupContext::new(4);
        let e = QElement::identity(&ctx);
        let a = QElement::from_fn(&ctx, |w| q(w.inversions() as i64));
        assert_eq!(a.mul(&e, &ctx).unwrap(), a);
        assert_eq!(e.mul(&a, &ctx).unwrap(), a);
    }

    #[test]
    fn eulerian_idempotent_identities() {
        for n in 2..=5usize {
            let ctx = GroupContext::new(n);
            let es = eulerian_idempotents(&ctx);
            assert_eq!(es.len(), n);
            // Σ e^{(j)} = identity
            let mut total = QElement::zero(&ctx);
            for e in &es {
                total = total.add(e).unwrap();
            }
            assert_eq!(total, QElement::identity(&ctx));
            // Σ (-1)^j e^{(j)} = (-1)^n w_0
            let mut alt = QElement::zero(&ctx);
            for (j, e) in es.iter().enumerate() {
                let sign = if (j + 1) % 2 == 0 { q(1) } else { q(-1) };
                alt = alt.add(&e.scale(&sign)).unwrap();
            }
            let w0sign = if n % 2 == 0 { q(1) } else { q(-1) };
            let expected =
                QElement::single(&ctx, &Permutation::longest_element(n), w0sign);
            assert_eq!(alt, expected);
            // pairwise orthogonal idempotents
            for (i, a) in es.iter().enumerate() {
                for (j, b) in es.iter().enumerate() {
                    let prod = a.mul(b, &ctx).unwrap();
                    if i == j {
                        assert_eq!(prod, *a, "e^({}) not idempotent", i + 1);
                    } else {
                        assert!(prod.is_zero(), "e^({}) e^({}) != 0", i + 1, j + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn n2_eulerian_explicit() {
        // e^{(1)} = (id - s)/2, e^{(2)} = (id + s)/2
        let ctx = GroupContext::new(2);
        let es = eulerian_idempotents(&ctx);
        let id = Permutation::identity(2);
        let s = Permutation::longest_element(2);
        assert_eq!(es[0].coefficient(&id), &crate::qq(1, 2));
        assert_eq!(es[0].coefficient(&s), &crate::qq(-1, 2));
        assert_eq!(es[1].coefficient(&id), &crate::qq(1, 2));
        assert_eq!(es[1].coefficient(&s), &crate::qq(1, 2));
    }

    #[test]
    fn antipode_involution() {
        let ctx = GroupContext::new(4);
        let a = QElement::from_fn(&ctx, |w| q(w.apply(1) as i64));
        assert_eq!(a.antipode(&ctx).antipode(&ctx), a);
    }

    #[test]
    fn right_mult_matrix_composes_contravariantly() {
        // operator composition matches the reversed algebra product
        let ctx = GroupContext::new(4);
        let a = QElement::from_fn(&ctx, |w| q((w.inversions() % 3) as i64));
        let b = QElement::from_fn(&ctx, |w| q((w.fixed_points()) as i64));
        let ma = a.right_mult_matrix(&ctx);
        let mb = b.right_mult_matrix(&ctx);
        let mab = a.mul(&b, &ctx).unwrap().right_mult_matrix(&ctx);
        assert_eq!(mb.mul(&ma).unwrap(), mab);
    }
}
