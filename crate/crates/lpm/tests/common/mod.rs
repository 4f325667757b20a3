//! Shared brute-force helpers for the invariant tests. Symbolic polynomial
//! determinants go through cofactor expansion, an independent route from
//! the field elimination they cross-check.

use lpm::ff::{FieldCtx, FieldElement};

/// Integer-coefficient polynomial, lowest degree first, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IPoly(pub Vec<i64>);

impl IPoly {
    pub fn zero() -> Self {
        IPoly(Vec::new())
    }

    pub fn monomial(degree: usize, coeff: i64) -> Self {
        if coeff == 0 {
            return IPoly::zero();
        }
        let mut c = vec![0; degree + 1];
        c[degree] = coeff;
        IPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        IPoly(v)
    }

    pub fn add(&self, other: &IPoly) -> IPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0i64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0);
        }
        IPoly::trim(out)
    }

    pub fn sub(&self, other: &IPoly) -> IPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0i64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0.get(i).copied().unwrap_or(0) - other.0.get(i).copied().unwrap_or(0);
        }
        IPoly::trim(out)
    }

    pub fn mul(&self, other: &IPoly) -> IPoly {
        if self.is_zero() || other.is_zero() {
            return IPoly::zero();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IPoly::trim(out)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0)
    }

    pub fn min_coeff(&self) -> Option<i64> {
        self.min_degree().map(|d| self.0[d])
    }
}

/// Cofactor-expansion determinant of a square matrix of integer polynomials.
pub fn ipoly_det(m: &[Vec<IPoly>]) -> IPoly {
    let n = m.len();
    if n == 0 {
        return IPoly::monomial(0, 1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = IPoly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<IPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&ipoly_det(&minor));
        det = if j % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

/// Polynomial with coefficients in a (prime) field, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPoly {
    pub ctx: FieldCtx,
    pub coeffs: Vec<FieldElement>,
}

impl FPoly {
    pub fn zero(ctx: &FieldCtx) -> Self {
        FPoly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(ctx: &FieldCtx, degree: usize, coeff: FieldElement) -> Self {
        if ctx.is_zero(&coeff) {
            return FPoly::zero(ctx);
        }
        let mut coeffs = vec![ctx.zero(); degree + 1];
        coeffs[degree] = coeff;
        FPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(ctx: &FieldCtx, mut v: Vec<FieldElement>) -> Self {
        while v.last().is_some_and(|c| ctx.is_zero(c)) {
            v.pop();
        }
        FPoly {
            ctx: ctx.clone(),
            coeffs: v,
        }
    }

    pub fn add(&self, other: &FPoly) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.ctx.zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            out.push(self.ctx.add(a, b));
        }
        FPoly::trim(&self.ctx, out)
    }

    pub fn sub(&self, other: &FPoly) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.ctx.zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            out.push(self.ctx.sub(a, b));
        }
        FPoly::trim(&self.ctx, out)
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        if self.is_zero() || other.is_zero() {
            return FPoly::zero(&self.ctx);
        }
        let mut out = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ctx.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.ctx.mul(a, b);
                out[i + j] = self.ctx.add(&out[i + j], &t);
            }
        }
        FPoly::trim(&self.ctx, out)
    }

    pub fn min_term(&self) -> Option<(usize, &FieldElement)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !self.ctx.is_zero(c))
    }
}

/// Cofactor-expansion determinant over the polynomial ring.
pub fn fpoly_det(ctx: &FieldCtx, m: &[Vec<FPoly>]) -> FPoly {
    let n = m.len();
    if n == 0 {
        return FPoly::monomial(ctx, 0, ctx.one());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = FPoly::zero(ctx);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<FPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&fpoly_det(ctx, &minor));
        det = if j % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

/// Integer determinant by cofactor expansion (entries fit i128 comfortably
/// at desk scale).
pub fn int_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect();
        let term = m[0][j] * int_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}
