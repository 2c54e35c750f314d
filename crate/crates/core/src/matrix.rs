//! Dense square matrices over `ℤ[q, q^{-1}]`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(size: usize) -> Self {
        PolyMatrix { size, entries: vec![LaurentPoly::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = PolyMatrix::zero(size);
        for i in 0..size {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn diagonal(diag: &[LaurentPoly]) -> Self {
        let mut m = PolyMatrix::zero(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: LaurentPoly) {
        self.entries[row * self.size + col] = v;
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMatrix::identity(self.size)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.entries[i * n + j] += &prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        PolyMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        PolyMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> PolyMatrix {
        PolyMatrix { size: self.size, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let (n, m) = (self.size, other.size);
        let mut out = PolyMatrix::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * m + k, j * m + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut t = LaurentPoly::zero();
        for i in 0..self.size {
            t += self.get(i, i);
        }
        t
    }

    /// Partial trace over the second factor of `V ⊗ V` where `dim V = dim`.
    pub fn partial_trace_second(&self, dim: usize) -> PolyMatrix {
        assert_eq!(self.size, dim * dim);
        let mut out = PolyMatrix::zero(dim);
        for a in 0..dim {
            for c in 0..dim {
                let mut acc = LaurentPoly::zero();
                for b in 0..dim {
                    acc += self.get(a * dim + b, c * dim + b);
                }
                out.set(a, c, acc);
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        let n = self.size;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a = self.entries.clone();
        let mut sign = 1i64;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return Ok(LaurentPoly::zero());
                };
                for c in 0..n {
                    a.swap(k * n + c, r * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i * n + j] * &a[k * n + k]) - &(&a[i * n + k] * &a[k * n + j]);
                    a[i * n + j] = num.div_exact(&prev).ok_or_else(|| {
                        Error::Operator("inexact division in determinant".into())
                    })?;
                }
            }
            prev = a[k * n + k].clone();
        }
        Ok(a[n * n - 1].scale(sign))
    }

    /// Exact inverse, available when the determinant is a unit `±q^e`.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        let n = self.size;
        let det = self.determinant()?;
        if !det.is_unit() {
            return Err(Error::Operator(format!(
                "determinant {det} is not a unit of ℤ[q, q^-1]"
            )));
        }
        let det_inv = det.pow(-1)?;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = (-1)^{i+j} · minor(j, i)
                let minor = self.minor(j, i);
                let mut c = minor.determinant()?;
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                out.set(i, j, &c * &det_inv);
            }
        }
        Ok(out)
    }

    fn minor(&self, row: usize, col: usize) -> PolyMatrix {
        let n = self.size;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != row) {
            for j in (0..n).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { size: n - 1, entries }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn kron_identity() {
        let i2 = PolyMatrix::identity(2);
        assert!(i2.kron(&i2).is_identity());
    }

    #[test]
    fn determinant_and_inverse() {
        let mut m = PolyMatrix::zero(2);
        m.set(0, 0, p(&[(1, 1), (-1, -1)]));
        m.set(0, 1, p(&[(0, 1)]));
        m.set(1, 0, p(&[(0, 1)]));
        assert_eq!(m.determinant().unwrap(), p(&[(0, -1)]));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());

        let two = PolyMatrix::diagonal(&[p(&[(0, 2)]), p(&[(0, 1)])]);
        assert!(two.inverse().is_err());
    }

    #[test]
    fn partial_trace_of_kron() {
        let a = PolyMatrix::diagonal(&[p(&[(1, 1)]), p(&[(-1, 1)])]);
        let b = PolyMatrix::diagonal(&[p(&[(0, 2)]), p(&[(2, 1)])]);
        let pt = a.kron(&b).partial_trace_second(2);
        assert_eq!(pt, a.scale(&b.trace()));
    }
}
