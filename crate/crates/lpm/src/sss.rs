//! Vector secret sharing on matroid ports.
//!
//! A representation matrix `M` is the generator matrix of a linear code; a
//! codeword is `u * M` for a coefficient row `u`. The dealer column holds
//! the secret and the remaining coordinates are the shares, so a player set
//! can reconstruct exactly when the dealer column lies in the span of its
//! columns — the port of the represented matroid at the dealer element.
//!
//! The library itself never draws randomness: `deal` takes the full
//! coefficient vector (or derives it from caller-supplied free values), so
//! every test is deterministic and the privacy check can enumerate the
//! whole code.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::ff::{FieldCtx, FieldElement};
use crate::repr::Representation;
use crate::{Error, Result, MAX_ENUMERATION, MAX_SWEEP_N};

/// A dealing of one secret: the share of every requested player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareVector {
    shares: BTreeMap<usize, FieldElement>,
}

impl ShareVector {
    pub fn new(shares: BTreeMap<usize, FieldElement>) -> Self {
        ShareVector { shares }
    }

    pub fn players(&self) -> Vec<usize> {
        self.shares.keys().copied().collect()
    }

    pub fn share(&self, player: usize) -> Option<&FieldElement> {
        self.shares.get(&player)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &FieldElement)> {
        self.shares.iter()
    }

    /// Restriction to a subset of the players.
    pub fn restrict(&self, players: &[usize]) -> Result<ShareVector> {
        let mut shares = BTreeMap::new();
        for &x in players {
            let s = self
                .shares
                .get(&x)
                .ok_or_else(|| Error::InvalidElement(format!("no share for player {x}")))?;
            shares.insert(x, s.clone());
        }
        Ok(ShareVector { shares })
    }
}

/// A representation with a distinguished dealer column; players are the
/// remaining columns.
#[derive(Debug, Clone)]
pub struct SharingScheme {
    rep: Representation,
    p_o: usize,
    players: Vec<usize>,
}

impl SharingScheme {
    /// The dealer column must be nonzero (the dealer element is not a loop).
    pub fn new(rep: Representation, p_o: usize) -> Result<Self> {
        let n = rep.matrix().cols();
        if p_o < 1 || p_o > n {
            return Err(Error::InvalidElement(format!(
                "dealer element {p_o} out of range 1..={n}"
            )));
        }
        let ctx = rep.ctx().clone();
        let dealer_col = rep.matrix().column(p_o - 1);
        if dealer_col.iter().all(|e| ctx.is_zero(e)) {
            return Err(Error::LoopElement(p_o));
        }
        let players = (1..=n).filter(|&x| x != p_o).collect();
        Ok(SharingScheme { rep, p_o, players })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.rep.ctx()
    }

    pub fn dealer(&self) -> usize {
        self.p_o
    }

    pub fn players(&self) -> &[usize] {
        &self.players
    }

    fn rank(&self) -> usize {
        self.rep.matrix().rows()
    }

    /// Derives a coefficient vector encoding `secret` from `r - 1` free
    /// values: the first row with a nonzero dealer entry absorbs the
    /// correction, every other row takes the free values in order.
    pub fn derive_coefficients(
        &self,
        secret: &FieldElement,
        free: &[FieldElement],
    ) -> Result<Vec<FieldElement>> {
        let r = self.rank();
        if free.len() != r - 1 {
            return Err(Error::DimensionMismatch(format!(
                "need {} free coefficients, got {}",
                r - 1,
                free.len()
            )));
        }
        let ctx = self.ctx();
        let dealer_col = self.rep.matrix().column(self.p_o - 1);
        let pivot = dealer_col
            .iter()
            .position(|e| !ctx.is_zero(e))
            .expect("dealer column is nonzero");
        let mut coeffs = vec![ctx.zero(); r];
        let mut free_iter = free.iter();
        let mut acc = secret.clone();
        for i in 0..r {
            if i == pivot {
                continue;
            }
            let v = free_iter.next().unwrap().clone();
            acc = ctx.sub(&acc, &ctx.mul(&v, &dealer_col[i]));
            coeffs[i] = v;
        }
        let pivot_inv = ctx.inv(&dealer_col[pivot])?;
        coeffs[pivot] = ctx.mul(&acc, &pivot_inv);
        Ok(coeffs)
    }

    /// Shares of the codeword `u * M`. The coefficients must encode the
    /// secret in the dealer coordinate.
    pub fn deal(&self, secret: &FieldElement, coeffs: &[FieldElement]) -> Result<ShareVector> {
        let codeword = self.rep.matrix().left_mul_vector(coeffs)?;
        if &codeword[self.p_o - 1] != secret {
            return Err(Error::InconsistentCoefficients);
        }
        let shares = self
            .players
            .iter()
            .map(|&x| (x, codeword[x - 1].clone()))
            .collect();
        Ok(ShareVector { shares })
    }

    /// Whether the dealer column lies in the span of the given players'
    /// columns.
    pub fn is_qualified(&self, set: &[usize]) -> Result<bool> {
        self.check_players(set)?;
        Ok(self.solve_for_dealer(set)?.is_some())
    }

    /// Recovers the secret from a qualified share set by solving
    /// `sum_x lambda_x column_x = column_{p_o}` and combining the shares
    /// with the same coefficients. Refuses unqualified sets.
    pub fn reconstruct(&self, shares: &ShareVector) -> Result<FieldElement> {
        let set = shares.players();
        self.check_players(&set)?;
        let Some(lambda) = self.solve_for_dealer(&set)? else {
            return Err(Error::Unqualified);
        };
        let ctx = self.ctx();
        let mut secret = ctx.zero();
        for (l, (_, s)) in lambda.iter().zip(shares.iter()) {
            secret = ctx.add(&secret, &ctx.mul(l, s));
        }
        Ok(secret)
    }

    /// Exhaustive perfect-privacy check for an unqualified set: over all
    /// codewords, the multiset of share tuples on `set` must be identical
    /// for every secret value. Gated by [`MAX_ENUMERATION`] codewords.
    pub fn privacy_check(&self, set: &[usize]) -> Result<bool> {
        self.check_players(set)?;
        if self.is_qualified(set)? {
            return Err(Error::QualifiedSet(set.to_vec()));
        }
        let ctx = self.ctx();
        let order = ctx.order();
        let total = order.pow(self.rank() as u32);
        if total > BigUint::from(MAX_ENUMERATION) {
            return Err(Error::ScaleLimit {
                what: "codeword enumeration",
                limit: MAX_ENUMERATION as u128,
                actual: u128::try_from(&total).unwrap_or(u128::MAX),
            });
        }
        let elements = ctx.all_elements()?;
        let r = self.rank();
        // secret -> multiset of restricted share tuples.
        let mut buckets: BTreeMap<FieldElement, BTreeMap<Vec<FieldElement>, usize>> =
            BTreeMap::new();
        let mut index = vec![0usize; r];
        loop {
            let coeffs: Vec<FieldElement> = index.iter().map(|&i| elements[i].clone()).collect();
            let codeword = self.rep.matrix().left_mul_vector(&coeffs)?;
            let secret = codeword[self.p_o - 1].clone();
            let view: Vec<FieldElement> = set.iter().map(|&x| codeword[x - 1].clone()).collect();
            *buckets.entry(secret).or_default().entry(view).or_default() += 1;
            // Odometer over coefficient vectors.
            let mut pos = 0;
            loop {
                if pos == r {
                    let mut iter = buckets.values();
                    let first = iter.next().expect("at least one secret occurs");
                    return Ok(buckets.len() == elements.len() && iter.all(|m| m == first));
                }
                index[pos] += 1;
                if index[pos] < elements.len() {
                    break;
                }
                index[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Maximal unqualified player sets, each sorted, ordered
    /// lexicographically. Gated at [`MAX_SWEEP_N`] players.
    pub fn maximal_unqualified_sets(&self) -> Result<Vec<Vec<usize>>> {
        let k = self.players.len();
        if k > MAX_SWEEP_N {
            return Err(Error::ScaleLimit {
                what: "maximal unqualified set enumeration",
                limit: MAX_SWEEP_N as u128,
                actual: k as u128,
            });
        }
        let mut out = Vec::new();
        for mask in 0usize..(1 << k) {
            let set: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.players[i])
                .collect();
            if self.is_qualified(&set)? {
                continue;
            }
            // Maximal iff adding any missing player qualifies the set.
            let mut maximal = true;
            for &extra in &self.players {
                if set.contains(&extra) {
                    continue;
                }
                let mut bigger = set.clone();
                bigger.push(extra);
                bigger.sort_unstable();
                if !self.is_qualified(&bigger)? {
                    maximal = false;
                    break;
                }
            }
            if maximal {
                out.push(set);
            }
        }
        out.sort();
        Ok(out)
    }

    fn check_players(&self, set: &[usize]) -> Result<()> {
        let mut seen = Vec::new();
        for &x in set {
            if !self.players.contains(&x) {
                return Err(Error::InvalidElement(format!(
                    "{x} is not a player (dealer is {})",
                    self.p_o
                )));
            }
            if seen.contains(&x) {
                return Err(Error::InvalidElement(format!("player {x} repeated")));
            }
            seen.push(x);
        }
        Ok(())
    }

    /// Solves for the dealer column as a combination of the given columns;
    /// `None` when the set is unqualified. Coefficients come back in the
    /// order of `set`.
    fn solve_for_dealer(&self, set: &[usize]) -> Result<Option<Vec<FieldElement>>> {
        let cols: Vec<usize> = set.iter().map(|&x| x - 1).collect();
        let sub = self.rep.matrix().select_columns(&cols)?;
        let target = self.rep.matrix().column(self.p_o - 1);
        sub.solve(&target)
    }
}
