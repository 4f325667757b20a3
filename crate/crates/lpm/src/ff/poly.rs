//! Dense univariate polynomial arithmetic over a prime field.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no
//! trailing zero coefficients (the zero polynomial is the empty vector).
//! Irreducibility uses the Rabin criterion: a monic `f` of degree `s` over
//! `F_p` is irreducible iff `f` divides `X^{p^s} - X` and
//! `gcd(f, X^{p^{s/l}} - X) = 1` for every prime `l` dividing `s`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::PrimeField;

pub(crate) fn trim(mut f: Vec<BigUint>) -> Vec<BigUint> {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

pub(crate) fn sub(f: &[BigUint], g: &[BigUint], field: &PrimeField) -> Vec<BigUint> {
    let n = f.len().max(g.len());
    let zero = BigUint::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = f.get(i).unwrap_or(&zero);
        let b = g.get(i).unwrap_or(&zero);
        out.push(field.sub(a, b));
    }
    trim(out)
}

pub(crate) fn mul(f: &[BigUint], g: &[BigUint], field: &PrimeField) -> Vec<BigUint> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            out[i + j] = field.add(&out[i + j], &field.mul(a, b));
        }
    }
    trim(out)
}

/// Remainder of `f` modulo the monic polynomial `m`.
pub(crate) fn rem(f: &[BigUint], m: &[BigUint], field: &PrimeField) -> Vec<BigUint> {
    debug_assert!(
        m.last().is_some_and(|c| c.is_one()),
        "modulus must be monic"
    );
    let deg_m = m.len() - 1;
    let mut r = f.to_vec();
    while r.len() > deg_m {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - deg_m;
        for (k, c) in m[..deg_m].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = field.mul(&lead, c);
            r[shift + k] = field.sub(&r[shift + k], &t);
        }
    }
    trim(r)
}

pub(crate) fn mul_mod(
    f: &[BigUint],
    g: &[BigUint],
    m: &[BigUint],
    field: &PrimeField,
) -> Vec<BigUint> {
    rem(&mul(f, g, field), m, field)
}

/// `base^exp` modulo the monic polynomial `m`, square-and-multiply over the
/// bits of the big-integer exponent.
pub(crate) fn pow_mod(
    base: &[BigUint],
    exp: &BigUint,
    m: &[BigUint],
    field: &PrimeField,
) -> Vec<BigUint> {
    let mut result = vec![BigUint::one()];
    let mut acc = rem(base, m, field);
    for i in 0..exp.bits() {
        if exp.bit(i) {
            result = mul_mod(&result, &acc, m, field);
        }
        if i + 1 < exp.bits() {
            acc = mul_mod(&acc, &acc, m, field);
        }
    }
    result
}

/// Monic greatest common divisor.
pub(crate) fn gcd(f: &[BigUint], g: &[BigUint], field: &PrimeField) -> Vec<BigUint> {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem_general(&a, &b, field);
        a = b;
        b = r;
    }
    make_monic(a, field)
}

/// Extended Euclid: returns `(gcd, u)` with `u * f = gcd (mod m)`, both monic
/// gcd. Used for inversion in extension fields.
pub(crate) fn ext_gcd_mod(
    f: &[BigUint],
    m: &[BigUint],
    field: &PrimeField,
) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(f.to_vec());
    let mut u0: Vec<BigUint> = Vec::new();
    let mut u1: Vec<BigUint> = vec![BigUint::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem_general(&r0, &r1, field);
        let next_u = sub(&u0, &mul(&q, &u1, field), field);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = next_u;
    }
    // Normalize so the gcd is monic.
    if let Some(lead) = r0.last().cloned() {
        if !lead.is_one() {
            let inv = field.inv_unchecked(&lead);
            r0 = scale(&r0, &inv, field);
            u0 = scale(&u0, &inv, field);
        }
    }
    (r0, u0)
}

fn scale(f: &[BigUint], c: &BigUint, field: &PrimeField) -> Vec<BigUint> {
    trim(f.iter().map(|a| field.mul(a, c)).collect())
}

fn make_monic(f: Vec<BigUint>, field: &PrimeField) -> Vec<BigUint> {
    match f.last() {
        Some(lead) if !lead.is_one() => {
            let inv = field.inv_unchecked(&lead.clone());
            scale(&f, &inv, field)
        }
        _ => f,
    }
}

/// Division with remainder by an arbitrary nonzero divisor.
fn div_rem_general(
    f: &[BigUint],
    g: &[BigUint],
    field: &PrimeField,
) -> (Vec<BigUint>, Vec<BigUint>) {
    assert!(!g.is_empty(), "division by the zero polynomial");
    let lead_inv = field.inv_unchecked(g.last().unwrap());
    let deg_g = g.len() - 1;
    let mut r = f.to_vec();
    if r.len() <= deg_g {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![BigUint::zero(); r.len() - deg_g];
    while r.len() > deg_g {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let coef = field.mul(&lead, &lead_inv);
        let shift = r.len() - deg_g;
        q[shift] = coef.clone();
        for (k, c) in g[..deg_g].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = field.mul(&coef, c);
            r[shift + k] = field.sub(&r[shift + k], &t);
        }
    }
    (trim(q), trim(r))
}

fn rem_general(f: &[BigUint], g: &[BigUint], field: &PrimeField) -> Vec<BigUint> {
    div_rem_general(f, g, field).1
}

fn small_prime_factors(mut s: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= s {
        if s.is_multiple_of(d) {
            out.push(d);
            while s.is_multiple_of(d) {
                s /= d;
            }
        }
        d += 1;
    }
    if s > 1 {
        out.push(s);
    }
    out
}

/// Rabin irreducibility test for a monic polynomial of degree at least 1
/// over the prime field, given as coefficients lowest degree first.
///
/// Panics if `f` is not monic of degree at least 1 or has unreduced
/// coefficients.
pub fn is_irreducible(f: &[BigUint], field: &PrimeField) -> bool {
    assert!(f.len() >= 2, "polynomial must have degree at least 1");
    assert!(f.last().unwrap().is_one(), "polynomial must be monic");
    assert!(
        f.iter().all(|c| c < field.modulus()),
        "coefficients must be reduced"
    );
    let s = f.len() - 1;
    let x = vec![BigUint::zero(), BigUint::one()];
    // Frobenius chain: frob[i] = X^{p^i} mod f.
    let mut frob = x.clone();
    let mut frob_at = vec![frob.clone()];
    for _ in 0..s {
        frob = pow_mod(&frob, field.modulus(), f, field);
        frob_at.push(frob.clone());
    }
    if frob_at[s] != rem(&x, f, field) {
        return false;
    }
    for l in small_prime_factors(s) {
        let h = sub(&frob_at[s / l], &x, field);
        let g = gcd(f, &h, field);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically first monic irreducible polynomial of degree `s`,
/// where candidates are ordered by the coefficient tuple
/// `(c_{s-1}, ..., c_0)`. Deterministic; always terminates because monic
/// irreducibles of every degree exist over every prime field.
pub fn find_irreducible(field: &PrimeField, s: usize) -> Vec<BigUint> {
    assert!(s >= 1, "degree must be at least 1");
    let p = field.modulus();
    let mut counter = BigUint::zero();
    loop {
        // Base-p digits of the counter, lowest first, give (c_0, ..., c_{s-1}).
        let mut coeffs = Vec::with_capacity(s + 1);
        let mut k = counter.clone();
        for _ in 0..s {
            coeffs.push(&k % p);
            k /= p;
        }
        assert!(k.is_zero(), "no irreducible found in the full search space");
        coeffs.push(BigUint::one());
        if is_irreducible(&coeffs, field) {
            return coeffs;
        }
        counter += BigUint::one();
    }
}
