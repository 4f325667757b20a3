//! Deterministic representation constructions and the exhaustive verifier.
//!
//! All three constructions start from the biadjacency matrix of an interval
//! presentation and replace each edge entry with a power of a distinguished
//! element, driven by a weight function whose minimum-weight matchings are
//! unique per basis. Uniqueness forces the minimum-degree coefficient of
//! every basis determinant to be a unit, so the determinants cannot vanish.
//!
//! - Extension construction: entries `alpha^{w(j,x)}` over `F_{p^s}` with
//!   `s` one more than the largest possible matching weight.
//! - Prime construction: entries `2^{w(j,x)}` reduced modulo a prime larger
//!   than the Hadamard bound on any basis determinant of the integer matrix.
//! - Part-uniform construction: entries `beta_x^{j-1} alpha^{w(j,x)}` over
//!   `F_{q^{s'}}`, with per-part distinct nonzero `beta` and part-level
//!   weights; minimum-degree coefficients become Vandermonde products.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::ff::{primes, ExtField, FieldCtx, FieldElement, FieldMatrix, PrimeField};
use crate::matroid::{Combinations, GroundPartition, IntervalPresentation, TransversalMatroid};
use crate::weights::{max_matching_weight_bound, simple_weight_bound, WeightFunction};
use crate::{Error, Result, MAX_SINGLE_SUBSET_N, MAX_SWEEP_N};

/// Ceiling on construction degrees; protects against absurd inputs, not a
/// mathematical limit.
const MAX_DEGREE: u64 = 10_000;

/// How a representation was produced, with the parameters needed to
/// reproduce it bit for bit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "kebab-case")]
pub enum Provenance {
    Extension {
        base_prime: String,
        degree: usize,
        /// Degree the closed-form `r(r-1)(n-1)/2` formula would give.
        formula_degree: u64,
        max_edge_weight: u64,
        matching_weight_bound: u64,
        weights: String,
    },
    Prime {
        modulus: String,
        /// Hadamard bound `2^{rt} ceil(r^{r/2})` with the actual `t`.
        hadamard_bound: String,
        /// Same bound with the worst-case `t = (r-1)(n-1)`.
        worst_case_bound: String,
        max_edge_weight: u64,
        weights: String,
    },
    MUniform {
        base_prime: String,
        degree: usize,
        /// Degree the closed-form `r(r-1)(m-1)/2` formula would give.
        formula_degree: u64,
        partition: Vec<usize>,
        weights: String,
    },
}

/// A field matrix claimed to represent a matroid, plus provenance.
///
/// Construction checks full row rank; column-by-column agreement with a
/// matroid is the verifier's job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    matrix: FieldMatrix,
    provenance: Provenance,
}

impl Representation {
    pub fn new(matrix: FieldMatrix, provenance: Provenance) -> Result<Self> {
        if matrix.rank() != matrix.rows() {
            return Err(Error::InvalidInput(format!(
                "matrix does not have full row rank {}",
                matrix.rows()
            )));
        }
        Ok(Representation { matrix, provenance })
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.matrix.ctx()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

fn degree_gate(bound: u64) -> Result<usize> {
    if bound + 1 > MAX_DEGREE {
        return Err(Error::ScaleLimit {
            what: "extension degree",
            limit: MAX_DEGREE as u128,
            actual: (bound + 1) as u128,
        });
    }
    Ok((bound + 1) as usize)
}

/// Powers `alpha^0 .. alpha^t` of an element, by iterated multiplication.
fn power_table(ctx: &FieldCtx, alpha: &FieldElement, t: u64) -> Vec<FieldElement> {
    let mut pows = Vec::with_capacity(t as usize + 1);
    pows.push(ctx.one());
    for _ in 0..t {
        let next = ctx.mul(pows.last().unwrap(), alpha);
        pows.push(next);
    }
    pows
}

/// Representation over `F_{p^s}` with entries `alpha^{w(j,x)}` under the
/// standard weights. The degree is one more than the matching-weight bound,
/// so every basis determinant is a nonzero polynomial of degree below `s`
/// with a unit minimum-degree coefficient.
pub fn build_extension_rep(
    presentation: &IntervalPresentation,
    base_prime: &BigUint,
) -> Result<Representation> {
    let graph = presentation.to_graph()?;
    let (r, n) = (graph.rows(), graph.cols());
    let w = WeightFunction::standard(&graph);
    let bound = max_matching_weight_bound(r, n);
    let degree = degree_gate(bound)?;
    let base = PrimeField::new(base_prime.clone())?;
    let ctx = FieldCtx::Ext(ExtField::find(base, degree)?);
    let alpha = ctx.generator();
    let pows = power_table(&ctx, &alpha, w.max_weight());
    let mut matrix = FieldMatrix::zeros(ctx, r, n);
    for (&(j, x), &wt) in w.edges() {
        matrix.set(j - 1, x - 1, pows[wt as usize].clone());
    }
    let provenance = Provenance::Extension {
        base_prime: base_prime.to_string(),
        degree,
        formula_degree: simple_weight_bound(r, n),
        max_edge_weight: w.max_weight(),
        matching_weight_bound: bound,
        weights: "standard".into(),
    };
    Representation::new(matrix, provenance)
}

fn ceil_sqrt(v: &BigUint) -> BigUint {
    let s = v.sqrt();
    if &(&s * &s) == v {
        s
    } else {
        s + BigUint::one()
    }
}

/// Hadamard bound `2^{rt} ceil(r^{r/2})` on basis determinants of the
/// integer matrix with entries `2^{w}`, `w <= t`.
pub fn hadamard_bound(r: usize, t: u64) -> Result<BigUint> {
    let shift = (r as u64)
        .checked_mul(t)
        .filter(|&b| b <= 4_000_000)
        .ok_or(Error::ScaleLimit {
            what: "hadamard bound bit length",
            limit: 4_000_000,
            actual: (r as u128).saturating_mul(t as u128),
        })?;
    let two_pow = BigUint::one() << shift;
    let r_pow = BigUint::from(r).pow(r as u32);
    Ok(two_pow * ceil_sqrt(&r_pow))
}

/// Representation over the prime field `F_p`, `p` the smallest prime above
/// the Hadamard bound; entries are `2^{w(j,x)}` reduced mod `p`. Basis
/// determinants of the integer matrix are nonzero (unit minimum-degree
/// coefficient at `alpha = 2`) and smaller than `p` in absolute value, so
/// they stay nonzero mod `p`.
pub fn build_prime_rep(presentation: &IntervalPresentation) -> Result<Representation> {
    let graph = presentation.to_graph()?;
    let (r, n) = (graph.rows(), graph.cols());
    let w = WeightFunction::standard(&graph);
    let t = w.max_weight();
    let bound = hadamard_bound(r, t)?;
    let p = primes::next_prime(&bound).map_err(|e| match e {
        Error::PrimalityRange { requested, bound } => Error::PrimalityRange {
            requested: format!("required Hadamard bound {requested}"),
            bound,
        },
        other => other,
    })?;
    let ctx = FieldCtx::Prime(PrimeField::new(p.clone())?);
    let two = ctx.from_u64(2);
    let pows = power_table(&ctx, &two, t);
    let mut matrix = FieldMatrix::zeros(ctx, r, n);
    for (&(j, x), &wt) in w.edges() {
        matrix.set(j - 1, x - 1, pows[wt as usize].clone());
    }
    let worst_case = hadamard_bound(r, (r as u64 - 1) * (n as u64 - 1))?;
    let provenance = Provenance::Prime {
        modulus: p.to_string(),
        hadamard_bound: bound.to_string(),
        worst_case_bound: worst_case.to_string(),
        max_edge_weight: t,
        weights: "standard".into(),
    };
    Representation::new(matrix, provenance)
}

/// Representation over `F_{q^{s'}}` for a presentation that is constant on
/// the parts of `partition`: entry `(j, x)` becomes
/// `beta_x^{j-1} alpha^{w(j,x)}` with `w(j,x) = (j-1)(m - pi(x))` and
/// `beta_x` the position of `x` inside its part, as a nonzero element of
/// `F_q`. Requires prime `q` exceeding every part size.
pub fn build_m_uniform_rep(
    presentation: &IntervalPresentation,
    partition: &GroundPartition,
    q: &BigUint,
) -> Result<Representation> {
    let graph = presentation.to_graph()?;
    let (r, n) = (graph.rows(), graph.cols());
    let w = WeightFunction::m_uniform(&graph, partition)?;
    let base = PrimeField::new(q.clone())?;
    let largest = partition.largest_part();
    if *q <= BigUint::from(largest) {
        return Err(Error::FieldTooSmall(format!(
            "q = {q} must exceed the largest part size {largest}"
        )));
    }
    let m = partition.m();
    let formula = (m as u64 - 1) * (r as u64) * (r as u64 - 1) / 2;
    let degree = degree_gate(formula)?;
    let ctx = FieldCtx::Ext(ExtField::find(base, degree)?);
    let alpha = ctx.generator();
    let alpha_pows = power_table(&ctx, &alpha, w.max_weight());
    // beta_x: the 1-based offset of x in its part, nonzero and distinct
    // within each part because q exceeds the part size.
    let thresholds = partition.thresholds();
    let beta: Vec<FieldElement> = (1..=n)
        .map(|x| {
            let part = partition.part_of(x).expect("x in range");
            ctx.from_u64((x - thresholds[part - 1] + 1) as u64)
        })
        .collect();
    let mut matrix = FieldMatrix::zeros(ctx.clone(), r, n);
    for (&(j, x), &wt) in w.edges() {
        let b = ctx.pow(&beta[x - 1], j as u64 - 1);
        matrix.set(j - 1, x - 1, ctx.mul(&b, &alpha_pows[wt as usize]));
    }
    let provenance = Provenance::MUniform {
        base_prime: q.to_string(),
        degree,
        formula_degree: (r as u64) * (r as u64 - 1) * (m as u64 - 1) / 2,
        partition: thresholds.to_vec(),
        weights: "m-uniform".into(),
    };
    Representation::new(matrix, provenance)
}

/// Verification strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Full matrix rank plus determinant-vs-basis agreement on all
    /// `r`-subsets.
    Bases,
    /// Column rank equals matroid rank on every subset of the ground set.
    AllSubsets,
}

/// Verifier verdict; on failure `witness` names the offending subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub witness: Option<Vec<usize>>,
}

impl VerifyOutcome {
    fn pass() -> Self {
        VerifyOutcome {
            ok: true,
            witness: None,
        }
    }

    fn fail(witness: Vec<usize>) -> Self {
        VerifyOutcome {
            ok: false,
            witness: Some(witness),
        }
    }
}

/// Checks a representation against the matroid's own rank oracle.
pub fn verify_representation(
    matroid: &TransversalMatroid,
    rep: &Representation,
    mode: VerifyMode,
) -> Result<VerifyOutcome> {
    let matrix = rep.matrix();
    let (r, n) = (matroid.rank(), matroid.n());
    if matrix.rows() != r || matrix.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{} but the matroid needs {r}x{n}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    match mode {
        VerifyMode::Bases => {
            if n > MAX_SINGLE_SUBSET_N {
                return Err(Error::ScaleLimit {
                    what: "basis-mode verification",
                    limit: MAX_SINGLE_SUBSET_N as u128,
                    actual: n as u128,
                });
            }
            for b in Combinations::new(n, r) {
                let cols: Vec<usize> = b.iter().map(|&x| x - 1).collect();
                let det = matrix.select_columns(&cols)?.determinant()?;
                let det_nonzero = !matrix.ctx().is_zero(&det);
                if det_nonzero != matroid.is_basis(&b)? {
                    return Ok(VerifyOutcome::fail(b));
                }
            }
            // Subset agreement plus the existence of a basis already forces
            // full rank; re-check as a final guard.
            if matrix.rank() != r {
                return Ok(VerifyOutcome::fail((1..=n).collect()));
            }
            Ok(VerifyOutcome::pass())
        }
        VerifyMode::AllSubsets => {
            if n > MAX_SWEEP_N {
                return Err(Error::ScaleLimit {
                    what: "all-subsets verification",
                    limit: MAX_SWEEP_N as u128,
                    actual: n as u128,
                });
            }
            for mask in 0usize..(1 << n) {
                let subset = crate::matroid::mask_to_set(mask, n);
                let cols: Vec<usize> = subset.iter().map(|&x| x - 1).collect();
                let matrix_rank = matrix.select_columns(&cols)?.rank();
                if matrix_rank != matroid.subset_rank(&subset)? {
                    return Ok(VerifyOutcome::fail(subset));
                }
            }
            Ok(VerifyOutcome::pass())
        }
    }
}
