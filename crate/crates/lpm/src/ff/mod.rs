//! Exact finite field arithmetic.
//!
//! Two kinds of fields are supported: prime fields `F_p` with an
//! arbitrary-precision prime modulus, and extension fields `F_{p^s}`
//! realized as quotient rings `F_p[x]/(f)` by a monic irreducible `f`.
//! Elements are canonical values (reduced residues, or coefficient vectors
//! of length `s`, lowest degree first) that do not carry a context pointer;
//! all arithmetic goes through the context, mirroring the usual
//! field-as-ring-object style.

mod matrix;
pub mod poly;
pub mod primes;

pub use matrix::FieldMatrix;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result, MAX_ENUMERATION};

/// Prime field `F_p`. Construction certifies primality deterministically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: BigUint,
}

impl PrimeField {
    pub fn new(p: BigUint) -> Result<Self> {
        if !primes::is_prime(&p)? {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> &BigUint {
        &self.p
    }

    pub(crate) fn reduce(&self, v: &BigUint) -> BigUint {
        v % &self.p
    }

    pub(crate) fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.p {
            s - &self.p
        } else {
            s
        }
    }

    pub(crate) fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &self.p - b
        }
    }

    pub(crate) fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a.is_zero() || b.is_zero() {
            return BigUint::zero();
        }
        (a * b) % &self.p
    }

    /// Inverse by Fermat; the caller guarantees a nonzero argument.
    pub(crate) fn inv_unchecked(&self, a: &BigUint) -> BigUint {
        debug_assert!(!a.is_zero());
        let e = &self.p - BigUint::from(2u32);
        a.modpow(&e, &self.p)
    }
}

/// Extension field `F_{p^s} = F_p[x]/(f)` for a monic irreducible `f` of
/// degree `s`. The class of `x` is exposed as [`FieldCtx::generator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    degree: usize,
    modulus: Vec<BigUint>,
}

impl ExtField {
    /// Wraps an explicit modulus polynomial (coefficients lowest first,
    /// length `s + 1`, monic). Irreducibility is re-verified.
    pub fn new(base: PrimeField, modulus: Vec<BigUint>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidPolynomial(
                "modulus must have degree at least 1".into(),
            ));
        }
        if !modulus.last().unwrap().is_one() {
            return Err(Error::InvalidPolynomial("modulus must be monic".into()));
        }
        if modulus.iter().any(|c| c >= base.modulus()) {
            return Err(Error::InvalidPolynomial(
                "modulus coefficients must be reduced".into(),
            ));
        }
        if !poly::is_irreducible(&modulus, &base) {
            return Err(Error::InvalidPolynomial(format!(
                "modulus of degree {} is reducible over F_{}",
                modulus.len() - 1,
                base.modulus()
            )));
        }
        Ok(ExtField {
            degree: modulus.len() - 1,
            base,
            modulus,
        })
    }

    /// Builds `F_{p^s}` with the lexicographically first irreducible modulus.
    pub fn find(base: PrimeField, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPolynomial(
                "extension degree must be at least 1".into(),
            ));
        }
        let modulus = poly::find_irreducible(&base, degree);
        Ok(ExtField {
            base,
            degree,
            modulus,
        })
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus_poly(&self) -> &[BigUint] {
        &self.modulus
    }

    fn pad(&self, v: Vec<BigUint>) -> Vec<BigUint> {
        let mut v = v;
        v.resize(self.degree, BigUint::zero());
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Repr {
    Prime(BigUint),
    Ext(Vec<BigUint>),
}

/// A field element in canonical form. Arithmetic goes through [`FieldCtx`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub(crate) Repr);

/// A prime or extension field, dispatching exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldCtx {
    Prime(PrimeField),
    Ext(ExtField),
}

impl FieldCtx {
    /// Number of elements: `p` or `p^s`.
    pub fn order(&self) -> BigUint {
        match self {
            FieldCtx::Prime(f) => f.p.clone(),
            FieldCtx::Ext(f) => f.base.p.pow(f.degree as u32),
        }
    }

    pub fn characteristic(&self) -> &BigUint {
        match self {
            FieldCtx::Prime(f) => &f.p,
            FieldCtx::Ext(f) => &f.base.p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldCtx::Prime(_) => FieldElement(Repr::Prime(BigUint::zero())),
            FieldCtx::Ext(f) => FieldElement(Repr::Ext(vec![BigUint::zero(); f.degree])),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_biguint(&BigUint::one())
    }

    pub fn from_u64(&self, v: u64) -> FieldElement {
        self.from_biguint(&BigUint::from(v))
    }

    /// Embeds an integer, reduced modulo the characteristic.
    pub fn from_biguint(&self, v: &BigUint) -> FieldElement {
        match self {
            FieldCtx::Prime(f) => FieldElement(Repr::Prime(f.reduce(v))),
            FieldCtx::Ext(f) => {
                let mut coeffs = vec![BigUint::zero(); f.degree];
                coeffs[0] = f.base.reduce(v);
                FieldElement(Repr::Ext(coeffs))
            }
        }
    }

    /// Builds an extension element from its coefficient vector (lowest degree
    /// first, at most `s` entries, reduced entries not required).
    pub fn from_coeffs(&self, coeffs: &[BigUint]) -> Result<FieldElement> {
        match self {
            FieldCtx::Prime(f) => {
                if coeffs.len() != 1 {
                    return Err(Error::InvalidInput(
                        "prime field elements have a single coefficient".into(),
                    ));
                }
                Ok(FieldElement(Repr::Prime(f.reduce(&coeffs[0]))))
            }
            FieldCtx::Ext(f) => {
                if coeffs.len() > f.degree {
                    return Err(Error::InvalidInput(format!(
                        "coefficient vector longer than extension degree {}",
                        f.degree
                    )));
                }
                let v: Vec<BigUint> = coeffs.iter().map(|c| f.base.reduce(c)).collect();
                Ok(FieldElement(Repr::Ext(f.pad(v))))
            }
        }
    }

    /// The class of the indeterminate in an extension field (reduced, so for
    /// degree-one moduli this is the constant `-c_0`). Panics on prime fields.
    pub fn generator(&self) -> FieldElement {
        match self {
            FieldCtx::Prime(_) => panic!("prime fields have no distinguished generator"),
            FieldCtx::Ext(f) => {
                let x = vec![BigUint::zero(), BigUint::one()];
                let r = poly::rem(&x, &f.modulus, &f.base);
                FieldElement(Repr::Ext(f.pad(r)))
            }
        }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        match &a.0 {
            Repr::Prime(v) => v.is_zero(),
            Repr::Ext(v) => v.iter().all(|c| c.is_zero()),
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, &a.0, &b.0) {
            (FieldCtx::Prime(f), Repr::Prime(x), Repr::Prime(y)) => {
                FieldElement(Repr::Prime(f.add(x, y)))
            }
            (FieldCtx::Ext(f), Repr::Ext(x), Repr::Ext(y)) => FieldElement(Repr::Ext(
                x.iter().zip(y).map(|(u, v)| f.base.add(u, v)).collect(),
            )),
            _ => panic!("field element used with a foreign context"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, &a.0, &b.0) {
            (FieldCtx::Prime(f), Repr::Prime(x), Repr::Prime(y)) => {
                FieldElement(Repr::Prime(f.sub(x, y)))
            }
            (FieldCtx::Ext(f), Repr::Ext(x), Repr::Ext(y)) => FieldElement(Repr::Ext(
                x.iter().zip(y).map(|(u, v)| f.base.sub(u, v)).collect(),
            )),
            _ => panic!("field element used with a foreign context"),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, &a.0, &b.0) {
            (FieldCtx::Prime(f), Repr::Prime(x), Repr::Prime(y)) => {
                FieldElement(Repr::Prime(f.mul(x, y)))
            }
            (FieldCtx::Ext(f), Repr::Ext(x), Repr::Ext(y)) => {
                let prod = poly::mul_mod(x, y, &f.modulus, &f.base);
                FieldElement(Repr::Ext(f.pad(prod)))
            }
            _ => panic!("field element used with a foreign context"),
        }
    }

    /// Multiplicative inverse; inversion of zero is an error.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self, &a.0) {
            (FieldCtx::Prime(f), Repr::Prime(x)) => {
                Ok(FieldElement(Repr::Prime(f.inv_unchecked(x))))
            }
            (FieldCtx::Ext(f), Repr::Ext(x)) => {
                let (g, u) = poly::ext_gcd_mod(x, &f.modulus, &f.base);
                debug_assert_eq!(g, vec![BigUint::one()]);
                Ok(FieldElement(Repr::Ext(f.pad(u))))
            }
            _ => panic!("field element used with a foreign context"),
        }
    }

    /// `a^e` by square-and-multiply; `a^0 = 1` including for `a = 0`.
    pub fn pow(&self, a: &FieldElement, e: u64) -> FieldElement {
        let mut result = self.one();
        let mut acc = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &acc);
            }
            e >>= 1;
            if e > 0 {
                acc = self.mul(&acc, &acc);
            }
        }
        result
    }

    /// All field elements in a fixed order (prime residues ascending;
    /// extension coefficient vectors in odometer order, constant coefficient
    /// fastest). Gated by [`MAX_ENUMERATION`].
    pub fn all_elements(&self) -> Result<Vec<FieldElement>> {
        let order = self.order();
        if order > BigUint::from(MAX_ENUMERATION) {
            return Err(Error::ScaleLimit {
                what: "field element enumeration",
                limit: MAX_ENUMERATION as u128,
                actual: u128::try_from(&order).unwrap_or(u128::MAX),
            });
        }
        match self {
            FieldCtx::Prime(_) => {
                let mut out = Vec::new();
                let mut v = BigUint::zero();
                while v < order {
                    out.push(FieldElement(Repr::Prime(v.clone())));
                    v += BigUint::one();
                }
                Ok(out)
            }
            FieldCtx::Ext(f) => {
                let p = f.base.p.clone();
                let mut out = Vec::new();
                let mut digits = vec![BigUint::zero(); f.degree];
                loop {
                    out.push(FieldElement(Repr::Ext(digits.clone())));
                    // Odometer increment.
                    let mut i = 0;
                    loop {
                        if i == f.degree {
                            return Ok(out);
                        }
                        digits[i] += BigUint::one();
                        if digits[i] < p {
                            break;
                        }
                        digits[i] = BigUint::zero();
                        i += 1;
                    }
                }
            }
        }
    }

    /// Coefficients of an element in this context: a single residue for
    /// prime fields, `s` coefficients (lowest first) for extensions.
    pub fn coefficients(&self, a: &FieldElement) -> Vec<BigUint> {
        match &a.0 {
            Repr::Prime(v) => vec![v.clone()],
            Repr::Ext(v) => v.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f5() -> FieldCtx {
        FieldCtx::Prime(PrimeField::new(BigUint::from(5u32)).unwrap())
    }

    fn f8() -> FieldCtx {
        let base = PrimeField::new(BigUint::from(2u32)).unwrap();
        FieldCtx::Ext(ExtField::find(base, 3).unwrap())
    }

    fn f9() -> FieldCtx {
        let base = PrimeField::new(BigUint::from(3u32)).unwrap();
        FieldCtx::Ext(ExtField::find(base, 2).unwrap())
    }

    fn random_element(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> FieldElement {
        let all = ctx.all_elements().unwrap();
        all[rng.gen_range(0..all.len())].clone()
    }

    #[test]
    fn prime_field_basics() {
        let f = f5();
        let a = f.from_u64(2);
        let b = f.from_u64(4);
        assert_eq!(f.add(&a, &b), f.from_u64(1));
        assert_eq!(f.mul(&a, &b), f.from_u64(3));
        assert_eq!(f.sub(&a, &b), f.from_u64(3));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(
            PrimeField::new(BigUint::from(6u32)),
            Err(Error::NotPrime(_))
        ));
    }

    #[test]
    fn cube_of_generator_in_f8() {
        // In F_2[a]/(a^3 + a + 1): a^3 = a + 1.
        let f = f8();
        let alpha = f.generator();
        let expect = f
            .from_coeffs(&[BigUint::from(1u32), BigUint::from(1u32)])
            .unwrap();
        assert_eq!(f.pow(&alpha, 3), expect);
        // alpha generates the multiplicative group of order 7.
        assert_eq!(f.pow(&alpha, 7), f.one());
        assert_ne!(f.pow(&alpha, 1), f.one());
    }

    #[test]
    fn identity_and_inverse_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for ctx in [f5(), f8(), f9()] {
            for _ in 0..50 {
                let a = random_element(&ctx, &mut rng);
                let b = random_element(&ctx, &mut rng);
                let c = random_element(&ctx, &mut rng);
                assert_eq!(ctx.mul(&a, &ctx.one()), a);
                assert_eq!(ctx.add(&ctx.add(&a, &b), &c), ctx.add(&a, &ctx.add(&b, &c)));
                assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
                assert_eq!(
                    ctx.mul(&a, &ctx.add(&b, &c)),
                    ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
                );
                if !ctx.is_zero(&a) {
                    let inv = ctx.inv(&a).unwrap();
                    assert_eq!(ctx.mul(&a, &inv), ctx.one());
                }
            }
            assert!(matches!(ctx.inv(&ctx.zero()), Err(Error::DivisionByZero)));
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for ctx in [f8(), f9()] {
            let p: u64 = ctx.characteristic().try_into().unwrap();
            for _ in 0..40 {
                let a = random_element(&ctx, &mut rng);
                let b = random_element(&ctx, &mut rng);
                let lhs = ctx.pow(&ctx.add(&a, &b), p);
                let rhs = ctx.add(&ctx.pow(&a, p), &ctx.pow(&b, p));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn element_enumeration_sizes() {
        assert_eq!(f5().all_elements().unwrap().len(), 5);
        assert_eq!(f8().all_elements().unwrap().len(), 8);
        assert_eq!(f9().all_elements().unwrap().len(), 9);
        let big =
            FieldCtx::Prime(PrimeField::new("75557863725914323419151".parse().unwrap()).unwrap());
        assert!(matches!(big.all_elements(), Err(Error::ScaleLimit { .. })));
    }

    #[test]
    fn ext_field_rejects_reducible_modulus() {
        let base = PrimeField::new(BigUint::from(2u32)).unwrap();
        // X^2 + 1 = (X + 1)^2 over F_2.
        let m = vec![
            BigUint::from(1u32),
            BigUint::from(0u32),
            BigUint::from(1u32),
        ];
        assert!(matches!(
            ExtField::new(base, m),
            Err(Error::InvalidPolynomial(_))
        ));
    }
}
