//! Dense exact matrices: arbitrary-precision rational entries for the
//! spectral computations, and an `i64` variant for the large integer
//! operator matrices.

use crate::error::{Error, Result};
use crate::poly::ZPoly;
use crate::{q, Q, Z};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch("matrix add".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch("matrix sub".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Q) -> RatMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "matrix mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(r, c)] += prod;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self + t * I`.
    pub fn plus_scalar_identity(&self, t: &Q) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] += t;
        }
        Ok(out)
    }

    pub fn commutator_is_zero(&self, other: &RatMatrix) -> Result<bool> {
        if !self.is_square() || self.rows != other.rows || other.rows != other.cols {
            return Err(Error::SizeMismatch("commutator".into()));
        }
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self[(row, col)].recip();
            for c in col..self.cols {
                let v = &self[(row, c)] * &inv;
                self[(row, c)] = v;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for c in col..self.cols {
                        let v = &self[(row, c)] * &factor;
                        self[(r, c)] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Columns spanning the kernel, in reduced form (one free variable set
    /// to 1 per column).
    pub fn kernel_basis(&self) -> RatMatrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = RatMatrix::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = Q::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = -m[(prow, fc)].clone();
            }
        }
        basis
    }

    /// Does the column span of `inner` lie inside the column span of `self`?
    pub fn spans_columns_of(&self, inner: &RatMatrix) -> Result<bool> {
        if self.rows != inner.rows {
            return Err(Error::SizeMismatch("span containment".into()));
        }
        let rank_outer = self.rank();
        let mut stacked = RatMatrix::zero(self.rows, self.cols + inner.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                stacked[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..inner.cols {
                stacked[(r, self.cols + c)] = inner[(r, c)].clone();
            }
        }
        Ok(stacked.rank() == rank_outer)
    }

    /// Given an invariant subspace spanned by the (independent) columns of
    /// `basis`, return the matrix `S` of the restriction: `self * basis =
    /// basis * S`.
    pub fn restrict(&self, basis: &RatMatrix) -> Result<RatMatrix> {
        let mb = self.mul(basis)?;
        // Solve basis * S = mb column by column via one RREF of [basis | mb].
        let mut aug = RatMatrix::zero(self.rows, basis.cols + mb.cols);
        for r in 0..self.rows {
            for c in 0..basis.cols {
                aug[(r, c)] = basis[(r, c)].clone();
            }
            for c in 0..mb.cols {
                aug[(r, basis.cols + c)] = mb[(r, c)].clone();
            }
        }
        let pivots = aug.rref();
        // basis has full column rank, so pivots 0..basis.cols are exactly the
        // first block; inconsistency would leave a pivot beyond it.
        if pivots.len() != basis.cols || pivots.iter().any(|&p| p >= basis.cols) {
            return Err(Error::SizeMismatch(
                "subspace is not invariant or basis not independent".into(),
            ));
        }
        let mut s = RatMatrix::zero(basis.cols, mb.cols);
        for r in 0..basis.cols {
            for c in 0..mb.cols {
                s[(r, c)] = aug[(r, basis.cols + c)].clone();
            }
        }
        Ok(s)
    }

    /// Exact characteristic polynomial (monic, ascending coefficients) via
    /// similarity reduction to Hessenberg form over the rationals.
    pub fn charpoly(&self) -> Result<Vec<Q>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut h = self.clone();
        // reduce to upper Hessenberg by similarity transformations
        for col in 0..n.saturating_sub(2) {
            let Some(p) = (col + 1..n).find(|&r| !h[(r, col)].is_zero()) else {
                continue;
            };
            if p != col + 1 {
                for c in 0..n {
                    h.data.swap(p * n + c, (col + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + p, r * n + col + 1);
                }
            }
            let inv = h[(col + 1, col)].recip();
            for r in col + 2..n {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let factor = &h[(r, col)] * &inv;
                for c in 0..n {
                    let v = &h[(col + 1, c)] * &factor;
                    h[(r, c)] -= v;
                }
                // inverse transformation on columns
                for rr in 0..n {
                    let v = &h[(rr, r)] * &factor;
                    h[(rr, col + 1)] += v;
                }
            }
        }
        // charpolys of leading principal minors of a Hessenberg matrix
        let mut ps: Vec<Vec<Q>> = vec![vec![Q::one()]];
        for m in 1..=n {
            // p_m = (t - h[m-1][m-1]) p_{m-1} - sum over lower fringes
            let mut pm = poly_shift_mul(&ps[m - 1], &h[(m - 1, m - 1)]);
            let mut prod = Q::one();
            for i in (0..m - 1).rev() {
                prod *= &h[(i + 1, i)];
                if h[(i, m - 1)].is_zero() || prod.is_zero() {
                    if prod.is_zero() {
                        break;
                    }
                    continue;
                }
                let coeff = &h[(i, m - 1)] * &prod;
                for (k, c) in ps[i].iter().enumerate() {
                    let v = c * &coeff;
                    pm[k] -= v;
                }
            }
            ps.push(pm);
        }
        Ok(ps.pop().unwrap())
    }

    /// Spectral projector onto the `λ0`-eigenspace of a matrix whose minimal
    /// polynomial splits with the simple roots `eigenvalues`.
    pub fn eigenprojector(&self, eigenvalues: &[Q], lambda0: &Q) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !eigenvalues.contains(lambda0) {
            return Err(Error::NotAnEigenvalue(lambda0.to_string()));
        }
        let mut p = RatMatrix::identity(self.rows);
        for mu in eigenvalues {
            if mu == lambda0 {
                continue;
            }
            let factor = self.plus_scalar_identity(&-mu.clone())?;
            let denom = lambda0 - mu;
            p = p.mul(&factor)?.scale(&denom.recip());
        }
        Ok(p)
    }

    pub fn trace(&self) -> Result<Q> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut t = Q::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        Ok(t)
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            if !x.is_integer() {
                return None;
            }
            data.push(i64::try_from(x.to_integer()).ok()?);
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// `(t - a) * p` for polynomials in ascending coefficients.
fn poly_shift_mul(p: &[Q], a: &Q) -> Vec<Q> {
    let mut out = vec![Q::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        let v = c * a;
        out[i] -= v;
    }
    out
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

/// Dense `i64` matrix for the big integer operators (entries stay far below
/// overflow for every size in scope; products accumulate in `i128`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "int matrix mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)] as i128;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let acc = out[(r, c)] as i128 + a * other[(k, c)] as i128;
                    out[(r, c)] = i64::try_from(acc).expect("int matrix product overflow");
                }
            }
        }
        Ok(out)
    }

    pub fn commutator_is_zero(&self, other: &IntMatrix) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| q(self[(r, c)]))
    }

    /// Fraction-free determinant (Bareiss) over arbitrary-precision integers.
    pub fn bareiss_det(&self) -> Result<Z> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m: Vec<Vec<Z>> = (0..n)
            .map(|r| (0..n).map(|c| Z::from(self[(r, c)])).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = Z::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Ok(Z::zero());
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = Z::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(if sign == 1 {
            m[n - 1][n - 1].clone()
        } else {
            -m[n - 1][n - 1].clone()
        })
    }

    /// Characteristic polynomial by evaluating `det(tI - A)` at `n+1` integer
    /// points and Lagrange interpolation; used as an independent route to
    /// cross-check the Hessenberg path.
    pub fn charpoly_interpolation(&self) -> Result<ZPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let points: Vec<i64> = (0..=n as i64).collect();
        let mut values = Vec::with_capacity(points.len());
        for &t in &points {
            let shifted = IntMatrix::from_fn(n, n, |r, c| {
                if r == c {
                    t - self[(r, c)]
                } else {
                    -self[(r, c)]
                }
            });
            values.push(shifted.bareiss_det()?);
        }
        Ok(ZPoly::lagrange_interpolate(&points, &values))
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qq;

    fn rat(data: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_fn(data.len(), data[0].len(), |r, c| q(data[r][c]))
    }

    #[test]
    fn charpoly_trivial() {
        let z = RatMatrix::zero(2, 2);
        assert_eq!(z.charpoly().unwrap(), vec![q(0), q(0), q(1)]);
        let id = RatMatrix::identity(3);
        // (t-1)^3 = t^3 - 3t^2 + 3t - 1
        assert_eq!(id.charpoly().unwrap(), vec![q(-1), q(3), q(-3), q(1)]);
    }

    #[test]
    fn charpoly_matches_interpolation() {
        // dual route: Hessenberg over Q vs Bareiss determinants + Lagrange
        let m = rat(&[
            &[2, -1, 0, 3],
            &[1, 1, 4, 0],
            &[0, 5, -2, 1],
            &[3, 0, 1, 1],
        ]);
        let hess = m.charpoly().unwrap();
        let interp = m.to_int().unwrap().charpoly_interpolation().unwrap();
        let via: Vec<Q> = interp.coeffs().iter().map(|z| Q::from_integer(z.clone())).collect();
        assert_eq!(hess, via);
    }

    #[test]
    fn kernel_of_all_ones() {
        let ones = RatMatrix::from_fn(3, 3, |_, _| q(1));
        let k = ones.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(ones.mul(&k).unwrap().is_zero());
        assert_eq!(RatMatrix::identity(4).kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = rat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols() + m.rank(), m.cols());
        assert!(m.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn eigenprojector_diag() {
        let a = rat(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 5]]);
        let eigs = vec![q(2), q(5)];
        let p5 = a.eigenprojector(&eigs, &q(5)).unwrap();
        assert_eq!(p5, rat(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]));
        let p2 = a.eigenprojector(&eigs, &q(2)).unwrap();
        assert_eq!(p2.add(&p5).unwrap(), RatMatrix::identity(3));
        assert_eq!(p5.mul(&p5).unwrap(), p5);
        assert!(a.eigenprojector(&eigs, &q(7)).is_err());
    }

    #[test]
    fn restriction_of_invariant_subspace() {
        // subspace spanned by (1,1,0) and (0,0,1) is invariant for this block
        let a = rat(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 7]]);
        let basis = RatMatrix::from_fn(3, 2, |r, c| match (r, c) {
            (0, 0) | (1, 0) | (2, 1) => q(1),
            _ => q(0),
        });
        let s = a.restrict(&basis).unwrap();
        assert_eq!(s, rat(&[&[3, 0], &[0, 7]]));
    }

    #[test]
    fn commutator_checks() {
        let a = rat(&[&[1, 2], &[3, 4]]);
        assert!(a.commutator_is_zero(&a).unwrap());
        let b = rat(&[&[0, 1], &[1, 0]]);
        assert!(!a.commutator_is_zero(&b).unwrap());
    }

    #[test]
    fn bareiss_det_values() {
        let m = IntMatrix::from_fn(3, 3, |r, c| [[6, 1, 1], [4, -2, 5], [2, 8, 7]][r][c]);
        assert_eq!(m.bareiss_det().unwrap(), Z::from(-306));
        let singular = IntMatrix::from_fn(2, 2, |r, c| [[1, 2], [2, 4]][r][c]);
        assert_eq!(singular.bareiss_det().unwrap(), Z::from(0));
    }

    #[test]
    fn rational_entries_roundtrip() {
        let m = RatMatrix::from_fn(2, 2, |r, c| qq((r + c) as i64, 3));
        assert_eq!(m.scale(&q(3)).to_int().unwrap()[(1, 1)], 2);
    }
}
