//! Independent brute-force reference implementations used to cross-check
//! the production code paths. Nothing here shares an algorithm with what it
//! checks: determinants come from the Leibniz permutation sum instead of
//! elimination, irreducibility over `F_2` from bitmask trial division
//! instead of the Rabin criterion, and independence from the Hall condition
//! instead of augmenting-path matching.

use num_bigint::BigUint;

use crate::ff::{poly, ExtField, FieldCtx, FieldElement, FieldMatrix, PrimeField};
use crate::matroid::IntervalPresentation;
use crate::{Error, Result};

/// Determinant as the signed permutation sum. Exponential; sizes <= 4 only.
pub fn leibniz_det(m: &FieldMatrix) -> Result<FieldElement> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "Leibniz determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let ctx = m.ctx();
    let mut det = ctx.zero();
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, 0, true, &mut |perm, even| {
        let mut prod = ctx.one();
        for (i, &j) in perm.iter().enumerate() {
            prod = ctx.mul(&prod, m.get(i, j));
        }
        det = if even {
            ctx.add(&det, &prod)
        } else {
            ctx.sub(&det, &prod)
        };
    });
    Ok(det)
}

fn for_each_permutation<F: FnMut(&[usize], bool)>(
    perm: &mut Vec<usize>,
    k: usize,
    even: bool,
    f: &mut F,
) {
    if k == perm.len() {
        f(perm, even);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        let parity = if i == k { even } else { !even };
        for_each_permutation(perm, k + 1, parity, f);
        perm.swap(k, i);
    }
}

/// Rank as the size of the largest square submatrix with nonzero Leibniz
/// determinant. Exponential; small matrices only.
pub fn minor_rank(m: &FieldMatrix) -> Result<usize> {
    let max_k = m.rows().min(m.cols());
    for k in (1..=max_k).rev() {
        for rows in crate::matroid::Combinations::new(m.rows(), k) {
            for cols in crate::matroid::Combinations::new(m.cols(), k) {
                let mut sub = FieldMatrix::zeros(m.ctx().clone(), k, k);
                for (i, &ri) in rows.iter().enumerate() {
                    for (j, &cj) in cols.iter().enumerate() {
                        sub.set(i, j, m.get(ri - 1, cj - 1).clone());
                    }
                }
                if !m.ctx().is_zero(&leibniz_det(&sub)?) {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// Simple xorshift generator: deterministic entries for the cross-checks
/// without pulling a randomness dependency into the library.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Compares elimination determinants against the Leibniz sum on pseudo-
/// random and structured matrices up to 4x4 over a prime and an extension
/// field. Returns the number of comparisons.
pub fn determinant_cross_check() -> std::result::Result<usize, String> {
    let f37 = FieldCtx::Prime(PrimeField::new(BigUint::from(37u32)).map_err(|e| e.to_string())?);
    let f8 = FieldCtx::Ext(
        ExtField::find(
            PrimeField::new(BigUint::from(2u32)).map_err(|e| e.to_string())?,
            3,
        )
        .map_err(|e| e.to_string())?,
    );
    let mut rng = XorShift(0x5eed_cafe_f00d_d00d);
    let mut count = 0usize;
    for ctx in [f37, f8] {
        let span: u64 = ctx.order().try_into().unwrap_or(u64::MAX);
        for n in 1..=4usize {
            for _ in 0..6 {
                let mut m = FieldMatrix::zeros(ctx.clone(), n, n);
                for i in 0..n {
                    for j in 0..n {
                        m.set(i, j, ctx.from_u64(rng.next() % span));
                    }
                }
                compare_dets(&m)?;
                count += 1;
                // Duplicate a row: both routes must return zero.
                if n >= 2 {
                    let mut sing = m.clone();
                    for j in 0..n {
                        sing.set(1, j, sing.get(0, j).clone());
                    }
                    let d = sing.determinant().map_err(|e| e.to_string())?;
                    if !sing.ctx().is_zero(&d) {
                        return Err("duplicated-row determinant is nonzero".into());
                    }
                    compare_dets(&sing)?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn compare_dets(m: &FieldMatrix) -> std::result::Result<(), String> {
    let fast = m.determinant().map_err(|e| e.to_string())?;
    let slow = leibniz_det(m).map_err(|e| e.to_string())?;
    if fast != slow {
        return Err(format!(
            "elimination and Leibniz disagree on a {}x{} matrix",
            m.rows(),
            m.cols()
        ));
    }
    Ok(())
}

/// Binary polynomials as bitmasks: bit `i` is the coefficient of `x^i`.
fn f2_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros() as i32;
    loop {
        let da = 63 - (a.leading_zeros() as i32);
        if a == 0 || da < db {
            return a;
        }
        a ^= b << (da - db);
    }
}

fn f2_is_irreducible_by_trial(f: u64, degree: usize) -> bool {
    for d in 1..=degree / 2 {
        for low in 0..(1u64 << d) {
            let g = (1u64 << d) | low;
            if f2_rem(f, g) == 0 {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first monic irreducible of the given degree over F_2,
/// by exhaustive trial division. The candidate order `(c_{s-1}, ..., c_0)`
/// is exactly numeric order of the low bits.
pub fn f2_lex_first_irreducible(degree: usize) -> u64 {
    assert!((1..=32).contains(&degree));
    (0..(1u64 << degree))
        .map(|low| (1u64 << degree) | low)
        .find(|&f| f2_is_irreducible_by_trial(f, degree))
        .expect("irreducibles exist in every degree")
}

/// Compares the production irreducible search against the bitmask oracle
/// for degrees `1..=max_degree` over F_2.
pub fn irreducible_cross_check(max_degree: usize) -> std::result::Result<usize, String> {
    let f2 = PrimeField::new(BigUint::from(2u32)).map_err(|e| e.to_string())?;
    for s in 1..=max_degree {
        let found = poly::find_irreducible(&f2, s);
        let mut mask = 0u64;
        for (i, c) in found.iter().enumerate() {
            if c == &BigUint::from(1u32) {
                mask |= 1 << i;
            }
        }
        let expected = f2_lex_first_irreducible(s);
        if mask != expected {
            return Err(format!(
                "degree {s}: search found {mask:#b}, oracle says {expected:#b}"
            ));
        }
    }
    Ok(max_degree)
}

/// Hall criterion for one subset: `|Y| <= |N(Y)|` for every `Y` inside it.
fn hall_independent(g: &crate::matroid::BipartiteGraph, mask: usize, n: usize) -> Result<bool> {
    let mut y = mask;
    loop {
        let set = crate::matroid::mask_to_set(y, n);
        if set.len() > g.neighborhood_size(&set)? {
            return Ok(false);
        }
        if y == 0 {
            return Ok(true);
        }
        y = (y - 1) & mask;
    }
}

/// Checks that matching rank declares a subset independent exactly when
/// the Hall criterion over the Boolean polymatroid does, for every subset.
pub fn hall_cross_check(p: &IntervalPresentation) -> std::result::Result<(), String> {
    let g = p.to_graph().map_err(|e| e.to_string())?;
    let m = p.to_matroid().map_err(|e| e.to_string())?;
    let n = p.n();
    for mask in 0usize..(1 << n) {
        let set = crate::matroid::mask_to_set(mask, n);
        let by_matching = m.is_independent(&set).map_err(|e| e.to_string())?;
        let by_hall = hall_independent(&g, mask, n).map_err(|e| e.to_string())?;
        if by_matching != by_hall {
            return Err(format!("disagreement on subset {set:?}"));
        }
    }
    Ok(())
}
