//! Integer and rational polynomials: exact arithmetic, rational-root
//! extraction, and the quadratic-power detection needed for the
//! non-crystallographic characteristic polynomials.

use crate::error::{Error, Result};
use crate::{Q, Z};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial with arbitrary-precision integer coefficients, ascending
/// degree, no trailing zero coefficients (zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<Z>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<Z>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![Z::one()],
        }
    }

    pub fn x() -> Self {
        ZPoly {
            coeffs: vec![Z::zero(), Z::one()],
        }
    }

    /// `x - r`.
    pub fn linear(r: &Z) -> Self {
        ZPoly::new(vec![-r.clone(), Z::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| Z::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Z] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Z {
        self.coeffs.last().cloned().unwrap_or_else(Z::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &Z) -> Z {
        let mut acc = Z::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        ZPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Z::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![Z::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn pow(&self, mut e: usize) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exact division; `None` when `other` does not divide `self` over `Z`.
    pub fn div_exact(&self, other: &ZPoly) -> Option<ZPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Z::zero(); self.degree() - other.degree() + 1];
        let lead = other.leading();
        for k in (0..quot.len()).rev() {
            let top = rem[k + other.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            for (j, c) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::new(quot))
    }

    /// Primitive part (content removed, leading coefficient positive).
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = Z::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            g = -g;
        }
        ZPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive gcd via rational-coefficient Euclid.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let mut a: Vec<Q> = self.coeffs.iter().map(|c| Q::from_integer(c.clone())).collect();
        let mut b: Vec<Q> = other.coeffs.iter().map(|c| Q::from_integer(c.clone())).collect();
        let norm = |v: &mut Vec<Q>| {
            while v.last().map(|c| c.is_zero()).unwrap_or(false) {
                v.pop();
            }
        };
        norm(&mut a);
        norm(&mut b);
        while !b.is_empty() {
            // a mod b
            while a.len() >= b.len() && !a.is_empty() {
                let factor = a.last().unwrap() / b.last().unwrap();
                let shift = a.len() - b.len();
                for (j, c) in b.iter().enumerate() {
                    let v = c * &factor;
                    a[shift + j] -= v;
                }
                norm(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        if a.is_empty() {
            return ZPoly::zero();
        }
        // clear denominators, take primitive part
        let mut denom = Z::one();
        for c in &a {
            denom = denom.lcm(c.denom());
        }
        ZPoly::new(
            a.iter()
                .map(|c| (c * Q::from_integer(denom.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    /// Squarefree part `self / gcd(self, self')`, primitive.
    pub fn squarefree_part(&self) -> ZPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        self.primitive()
            .div_exact(&g)
            .expect("primitive gcd divides")
            .primitive()
    }

    /// Lagrange interpolation through `(points[i], values[i])`; panics if the
    /// interpolant is not integral.
    pub fn lagrange_interpolate(points: &[i64], values: &[Z]) -> ZPoly {
        assert_eq!(points.len(), values.len());
        let n = points.len();
        let mut acc = vec![Q::zero(); n];
        for i in 0..n {
            // numerator polynomial ∏_{j≠i}(x - x_j)
            let mut num = vec![Q::one()];
            let mut denom = Q::one();
            for j in 0..n {
                if i == j {
                    continue;
                }
                let xj = Q::from_integer(Z::from(points[j]));
                let mut next = vec![Q::zero(); num.len() + 1];
                for (k, c) in num.iter().enumerate() {
                    next[k + 1] += c;
                    let v = c * &xj;
                    next[k] -= v;
                }
                num = next;
                denom *= Q::from_integer(Z::from(points[i] - points[j]));
            }
            let scale = Q::from_integer(values[i].clone()) / denom;
            for (k, c) in num.iter().enumerate() {
                acc[k] += c * &scale;
            }
        }
        ZPoly::new(
            acc.iter()
                .map(|c| {
                    assert!(c.is_integer(), "interpolant must be integral");
                    c.to_integer()
                })
                .collect(),
        )
    }

    pub fn from_rational_coeffs(coeffs: &[Q]) -> Option<ZPoly> {
        let mut out = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(ZPoly::new(out))
    }
}

impl std::fmt::Display for ZPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                1 => {
                    if abs.is_one() {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{abs}x")?;
                    }
                }
                _ => {
                    if abs.is_one() {
                        write!(f, "x^{i}")?;
                    } else {
                        write!(f, "{abs}x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn factor_u64(mut n: u64) -> Option<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= 1 << 20 && p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if n < (1u64 << 40) {
            // leftover below the square of the trial bound is prime
            out.push((n, 1));
        } else {
            return None;
        }
    }
    Some(out)
}

fn divisors_from_factorization(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &d in &divs {
            let mut pe = 1u64;
            for _ in 0..=e {
                if let Some(v) = d.checked_mul(pe) {
                    next.push(v);
                }
                pe = match pe.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
            }
        }
        next.sort_unstable();
        next.dedup();
        divs = next;
    }
    divs
}

/// All rational roots with multiplicities, plus the residual (which has no
/// rational root). The polynomial must be nonzero.
pub fn factor_rational_roots(p: &ZPoly) -> Result<(Vec<(Q, usize)>, ZPoly)> {
    if p.is_zero() {
        return Err(Error::OutOfRange("zero polynomial".into()));
    }
    let mut roots: Vec<(Q, usize)> = Vec::new();
    let mut rem = p.primitive();
    // roots at zero
    let zero_mult = rem.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((Q::zero(), zero_mult));
        rem = ZPoly::new(rem.coeffs[zero_mult..].to_vec());
    }
    if rem.degree() == 0 {
        return Ok((roots, rem));
    }
    // candidate roots p/q from the squarefree part: p | constant, q | leading
    let sf = rem.squarefree_part();
    let constant = sf.coeffs.first().cloned().unwrap_or_else(Z::one);
    let leading = sf.leading();
    let c_u64 = constant
        .abs()
        .to_u64()
        .ok_or_else(|| Error::Budget(format!("root candidates: constant {constant} too large")))?;
    let l_u64 = leading
        .abs()
        .to_u64()
        .ok_or_else(|| Error::Budget(format!("root candidates: leading {leading} too large")))?;
    let cf = factor_u64(c_u64)
        .ok_or_else(|| Error::Budget(format!("cannot factor constant term {c_u64}")))?;
    let lf = factor_u64(l_u64)
        .ok_or_else(|| Error::Budget(format!("cannot factor leading term {l_u64}")))?;
    let mut candidates: Vec<Q> = Vec::new();
    for num in divisors_from_factorization(&cf) {
        for den in divisors_from_factorization(&lf) {
            let r = Q::new(Z::from(num), Z::from(den));
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        let lin = ZPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        let mut mult = 0;
        while eval_q(&rem, &r).is_zero() {
            // lin is primitive, so by Gauss's lemma it divides over Z
            rem = rem
                .div_exact(&lin)
                .expect("primitive linear factor divides")
                .primitive();
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    Ok((roots, rem.primitive()))
}

fn eval_q(p: &ZPoly, x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.coeffs.iter().rev() {
        acc = acc * x + Q::from_integer(c.clone());
    }
    acc
}

/// A factored polynomial `∏ f_i^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    pub factors: Vec<(ZPoly, usize)>,
}

impl FactoredPoly {
    pub fn expand(&self) -> ZPoly {
        let mut acc = ZPoly::one();
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e));
        }
        acc
    }
}

impl std::fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut pieces = Vec::new();
        for (poly, e) in &self.factors {
            let base = format!("({poly})");
            if *e == 1 {
                pieces.push(base);
            } else {
                pieces.push(format!("{base}^{e}"));
            }
        }
        write!(f, "{}", pieces.join(" "))
    }
}

/// Factor a monic integer polynomial into linear factors over the rationals
/// plus, when the residual is a perfect power of a single irreducible
/// quadratic, that quadratic power. Factors are ordered with non-linear
/// factors first, then linear factors by descending root.
pub fn factor_spectrum(p: &ZPoly) -> Result<FactoredPoly> {
    let (roots, residual) = factor_rational_roots(p)?;
    let mut factors: Vec<(ZPoly, usize)> = Vec::new();
    if residual.degree() > 0 {
        let sf = residual.squarefree_part();
        let m2 = residual.degree() / 2;
        if sf.degree() == 2 && residual.degree() % 2 == 0 && sf.pow(m2) == residual {
            factors.push((sf, m2));
        } else {
            factors.push((residual.clone(), 1));
        }
    }
    let mut linear: Vec<(ZPoly, usize, Q)> = roots
        .into_iter()
        .map(|(r, m)| {
            let lin = ZPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
            (lin, m, r)
        })
        .collect();
    linear.sort_by(|a, b| b.2.cmp(&a.2));
    factors.extend(linear.into_iter().map(|(f, m, _)| (f, m)));
    Ok(FactoredPoly { factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qq};

    fn zp(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_i64(coeffs)
    }

    #[test]
    fn display_forms() {
        assert_eq!(zp(&[3856, -248, 1]).to_string(), "x^2-248x+3856");
        assert_eq!(zp(&[-24, 1]).to_string(), "x-24");
        assert_eq!(zp(&[0, 1]).to_string(), "x");
        assert_eq!(zp(&[5, 1]).to_string(), "x+5");
    }

    #[test]
    fn simple_roots() {
        let p = zp(&[-1, 0, 1]); // t^2 - 1
        let (roots, residual) = factor_rational_roots(&p).unwrap();
        assert_eq!(roots, vec![(q(1), 1), (q(-1), 1)]);
        assert_eq!(residual, ZPoly::one());
    }

    #[test]
    fn rational_non_integer_root() {
        // (2x - 1)(x + 3)
        let p = zp(&[-3, 5, 2]);
        let (roots, residual) = factor_rational_roots(&p).unwrap();
        assert!(roots.contains(&(qq(1, 2), 1)));
        assert!(roots.contains(&(q(-3), 1)));
        assert_eq!(residual.degree(), 0);
    }

    #[test]
    fn h3_style_factorization() {
        // (t-24)^4 (t-12)^5 (t^2-248t+3856)^3
        let quad = zp(&[3856, -248, 1]);
        let p = ZPoly::linear(&Z::from(24))
            .pow(4)
            .mul(&ZPoly::linear(&Z::from(12)).pow(5))
            .mul(&quad.pow(3));
        let (roots, residual) = factor_rational_roots(&p).unwrap();
        assert_eq!(roots, vec![(q(24), 4), (q(12), 5)]);
        assert_eq!(residual, quad.pow(3));
        let fact = factor_spectrum(&p).unwrap();
        assert_eq!(
            fact.to_string(),
            "(x^2-248x+3856)^3 (x-24)^4 (x-12)^5"
        );
        assert_eq!(fact.expand(), p);
    }

    #[test]
    fn b2_counterexample_shape() {
        // t^3 (t-16) (t^2-8t+8)^2
        let quad = zp(&[8, -8, 1]);
        let p = ZPoly::x()
            .pow(3)
            .mul(&ZPoly::linear(&Z::from(16)))
            .mul(&quad.pow(2));
        let fact = factor_spectrum(&p).unwrap();
        assert_eq!(fact.to_string(), "(x^2-8x+8)^2 (x-16) (x)^3");
        assert_eq!(fact.expand(), p);
    }

    #[test]
    fn gcd_and_squarefree() {
        let p = ZPoly::linear(&Z::from(2)).pow(3).mul(&ZPoly::linear(&Z::from(5)));
        let sf = p.squarefree_part();
        assert_eq!(
            sf,
            ZPoly::linear(&Z::from(2)).mul(&ZPoly::linear(&Z::from(5)))
        );
    }

    #[test]
    fn interpolation_roundtrip() {
        let p = zp(&[7, -3, 0, 2]);
        let points: Vec<i64> = (0..4).collect();
        let values: Vec<Z> = points.iter().map(|&t| p.eval(&Z::from(t))).collect();
        assert_eq!(ZPoly::lagrange_interpolate(&points, &values), p);
    }

    #[test]
    fn div_exact_detects_nondivisor() {
        let p = zp(&[1, 1]); // x + 1
        let q_ = zp(&[0, 1]); // x
        assert!(p.div_exact(&q_).is_none());
        assert_eq!(p.mul(&q_).div_exact(&q_), Some(p));
    }
}
