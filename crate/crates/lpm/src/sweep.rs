//! Desk-scale exhaustive sweeps: every acceptance property of the toolkit,
//! runnable as a library call (the CLI `sweep` subcommand and the
//! acceptance test suite both come through here).
//!
//! Each criterion enumerates every valid interval presentation up to the
//! configured size and checks one end-to-end property, reporting pass/fail
//! with a witness-bearing detail string. All checks are exact; there are no
//! tolerances anywhere.

pub mod oracle;

use std::time::Instant;

use num_bigint::BigUint;

use crate::matroid::{
    hierarchically_inferior, GroundPartition, IntervalPresentation, TransversalMatroid,
};
use crate::repr::{
    build_extension_rep, build_m_uniform_rep, build_prime_rep, verify_representation, VerifyMode,
};
use crate::sss::SharingScheme;
use crate::weights::{
    check_isolating, max_matching_weight_bound, simple_weight_bound, WeightFunction,
};

/// Sweep configuration. `jobs = 1` reproduces the single-threaded runtime
/// the targets are stated for; higher values fan instances out across
/// threads without changing any result.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_r: usize,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 6,
            max_r: 3,
            jobs: 1,
        }
    }
}

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    /// Number of instances (or cases) the criterion examined.
    pub instances: usize,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn summary_line(&self) -> String {
        format!(
            "criterion {}: {} — {} [{} instances, {:.2}s]",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.detail,
            self.instances,
            self.seconds
        )
    }
}

/// Every valid interval presentation with `n <= max_n` and `r <= max_r`,
/// in (n, r, intervals) lexicographic order. Validity means the staircase
/// conditions, full column coverage, and a row-saturating matching.
pub fn enumerate_presentations(max_n: usize, max_r: usize) -> Vec<IntervalPresentation> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 1..=max_r.min(n) {
            let mut rows: Vec<(usize, usize)> = Vec::with_capacity(r);
            gen_rows(n, r, &mut rows, &mut out);
        }
    }
    out
}

fn gen_rows(
    n: usize,
    r: usize,
    rows: &mut Vec<(usize, usize)>,
    out: &mut Vec<IntervalPresentation>,
) {
    let j = rows.len();
    if j == r {
        if let Ok(p) = IntervalPresentation::new(n, rows.clone()) {
            if p.to_graph().is_ok() {
                out.push(p);
            }
        }
        return;
    }
    let (a_lo, b_lo) = rows.last().copied().unwrap_or((1, 1));
    let a_hi = if j == 0 { 1 } else { n };
    for a in a_lo..=a_hi {
        let b_min = a.max(b_lo);
        let b_max = n;
        for b in b_min..=b_max {
            if j + 1 == r && b != n {
                continue;
            }
            rows.push((a, b));
            gen_rows(n, r, rows, out);
            rows.pop();
        }
    }
}

/// Maps `f` over `items` on up to `jobs` threads, preserving order.
pub(crate) fn par_map<T, U, F>(items: &[T], jobs: usize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|ch| scope.spawn(|| ch.iter().map(&f).collect::<Vec<U>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}

fn matroid_of(p: &IntervalPresentation) -> TransversalMatroid {
    p.to_matroid().expect("enumerated presentations are valid")
}

fn first_failure(results: &[std::result::Result<(), String>]) -> Option<&String> {
    results.iter().find_map(|r| r.as_ref().err())
}

/// Criterion 1: the extension construction over `F_2` verifies in
/// all-subsets mode on every instance.
pub fn criterion_extension_sweep(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let instances = enumerate_presentations(cfg.max_n, cfg.max_r);
    let two = BigUint::from(2u32);
    let results = par_map(
        &instances,
        cfg.jobs,
        |p| -> std::result::Result<(), String> {
            let rep = build_extension_rep(p, &two).map_err(|e| format!("{p:?}: {e}"))?;
            let m = matroid_of(p);
            let outcome = verify_representation(&m, &rep, VerifyMode::AllSubsets)
                .map_err(|e| format!("{p:?}: {e}"))?;
            if outcome.ok {
                Ok(())
            } else {
                Err(format!("{p:?}: witness {:?}", outcome.witness))
            }
        },
    );
    let seconds = start.elapsed().as_secs_f64();
    let pass = first_failure(&results).is_none() && seconds <= 120.0;
    let detail = match first_failure(&results) {
        Some(f) => format!("extension/F_2 all-subsets verification failed: {f}"),
        None => format!(
            "extension/F_2 all-subsets verification passed on every instance{}",
            if seconds > 120.0 {
                "; runtime target of 120s exceeded"
            } else {
                ""
            }
        ),
    };
    CriterionResult {
        id: 1,
        name: "extension-field sweep",
        pass,
        instances: instances.len(),
        detail,
        seconds,
    }
}

/// Criterion 2: the prime construction verifies in all-subsets mode on
/// every instance; at `r = 3, n = 6` the max edge weight stays at most 10
/// and the prime below 2^34.
pub fn criterion_prime_sweep(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let instances = enumerate_presentations(cfg.max_n, cfg.max_r);
    let results = par_map(
        &instances,
        cfg.jobs,
        |p| -> std::result::Result<(), String> {
            let rep = build_prime_rep(p).map_err(|e| format!("{p:?}: {e}"))?;
            let m = matroid_of(p);
            let outcome = verify_representation(&m, &rep, VerifyMode::AllSubsets)
                .map_err(|e| format!("{p:?}: {e}"))?;
            if !outcome.ok {
                return Err(format!("{p:?}: witness {:?}", outcome.witness));
            }
            if p.rank() == 3 && p.n() == 6 {
                let g = p.to_graph().map_err(|e| format!("{p:?}: {e}"))?;
                let t = WeightFunction::standard(&g).max_weight();
                if t > 10 {
                    return Err(format!("{p:?}: max edge weight {t} > 10"));
                }
                let bits = rep.ctx().order().bits();
                if bits > 34 {
                    return Err(format!("{p:?}: prime has {bits} bits > 34"));
                }
            }
            Ok(())
        },
    );
    let seconds = start.elapsed().as_secs_f64();
    let pass = first_failure(&results).is_none() && seconds <= 120.0;
    let detail = match first_failure(&results) {
        Some(f) => format!("prime-field verification failed: {f}"),
        None => "prime-field all-subsets verification passed; r=3,n=6 primes fit 34 bits".into(),
    };
    CriterionResult {
        id: 2,
        name: "prime-field sweep",
        pass,
        instances: instances.len(),
        detail,
        seconds,
    }
}

/// Criterion 3: the standard weights are isolating on every instance and
/// the diagonal matching is the unique minimum for every basis.
pub fn criterion_isolation(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let instances = enumerate_presentations(cfg.max_n, cfg.max_r);
    let results = par_map(
        &instances,
        cfg.jobs,
        |p| -> std::result::Result<(), String> {
            let g = p.to_graph().map_err(|e| format!("{p:?}: {e}"))?;
            let report = check_isolating(&g, &WeightFunction::standard(&g))
                .map_err(|e| format!("{p:?}: {e}"))?;
            if !report.isolating {
                return Err(format!(
                    "{p:?}: not isolating, witness {:?}",
                    report.witness().map(|b| &b.basis)
                ));
            }
            for b in &report.bases {
                let diagonal: Vec<(usize, usize)> = b
                    .basis
                    .iter()
                    .enumerate()
                    .map(|(j0, &x)| (j0 + 1, x))
                    .collect();
                if b.multiplicity != 1 || b.min_matchings != vec![diagonal] {
                    return Err(format!(
                        "{p:?}: basis {:?} minimum is not the diagonal matching",
                        b.basis
                    ));
                }
            }
            Ok(())
        },
    );
    let seconds = start.elapsed().as_secs_f64();
    let pass = first_failure(&results).is_none();
    let detail = match first_failure(&results) {
        Some(f) => format!("isolation failed: {f}"),
        None => "standard weights isolating; diagonal matching is the unique minimum".into(),
    };
    CriterionResult {
        id: 3,
        name: "isolation property",
        pass,
        instances: instances.len(),
        detail,
        seconds,
    }
}

/// Criterion 4: measured maximum perfect-matching weights respect the
/// summation bound everywhere, strictly undercut `r(r-1)(n-1)/2` at
/// `r = 3`, and equality cases at `r = 2` are reported without failing.
pub fn criterion_weight_bounds(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let instances = enumerate_presentations(cfg.max_n, cfg.max_r);
    let results = par_map(
        &instances,
        cfg.jobs,
        |p| -> std::result::Result<bool, String> {
            let g = p.to_graph().map_err(|e| format!("{p:?}: {e}"))?;
            let report = check_isolating(&g, &WeightFunction::standard(&g))
                .map_err(|e| format!("{p:?}: {e}"))?;
            let measured = report.bases.iter().map(|b| b.max_weight).max().unwrap_or(0);
            let (r, n) = (p.rank(), p.n());
            if measured > max_matching_weight_bound(r, n) {
                return Err(format!(
                    "{p:?}: measured weight {measured} exceeds the summation bound"
                ));
            }
            let simple = simple_weight_bound(r, n);
            if r == 3 && measured >= simple {
                return Err(format!(
                    "{p:?}: measured weight {measured} not strictly below {simple}"
                ));
            }
            Ok(r == 2 && measured == simple)
        },
    );
    let seconds = start.elapsed().as_secs_f64();
    let failure = results.iter().find_map(|r| r.as_ref().err());
    let equality_cases = results.iter().filter(|r| matches!(r, Ok(true))).count();
    let pass = failure.is_none();
    let detail = match failure {
        Some(f) => format!("weight bound violated: {f}"),
        None => {
            format!("bounds hold; {equality_cases} instances at r=2 meet r(r-1)(n-1)/2 exactly")
        }
    };
    CriterionResult {
        id: 4,
        name: "degree bounds",
        pass,
        instances: instances.len(),
        detail,
        seconds,
    }
}

/// Criterion 5: the part-uniform construction verifies on every
/// part-constant (instance, partition) pair with `m` in {2, 3}, using the
/// smallest prime above the largest part.
pub fn criterion_m_uniform(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let instances = enumerate_presentations(cfg.max_n, cfg.max_r);
    // Expand to all (instance, partition) pairs with m in {2, 3}.
    let mut cases: Vec<(IntervalPresentation, GroundPartition)> = Vec::new();
    for p in &instances {
        let n = p.n();
        for m in 2..=3usize.min(n) {
            for cuts in crate::matroid::Combinations::new(n - 1, m - 1) {
                // Cut after positions: thresholds are 1 plus each cut + 1.
                let mut thresholds = vec![1usize];
                thresholds.extend(cuts.iter().map(|&c| c + 1));
                let part = GroundPartition::new(n, thresholds).expect("cuts are valid");
                let g = p.to_graph().expect("valid instance");
                if WeightFunction::m_uniform(&g, &part).is_ok() {
                    cases.push((p.clone(), part));
                }
            }
        }
    }
    let results = par_map(
        &cases,
        cfg.jobs,
        |(p, part)| -> std::result::Result<(), String> {
            let q = crate::ff::primes::next_prime(&BigUint::from(part.largest_part()))
                .map_err(|e| format!("{p:?}: {e}"))?;
            let rep =
                build_m_uniform_rep(p, part, &q).map_err(|e| format!("{p:?} {part:?}: {e}"))?;
            let m = matroid_of(p);
            let outcome = verify_representation(&m, &rep, VerifyMode::AllSubsets)
                .map_err(|e| format!("{p:?} {part:?}: {e}"))?;
            if outcome.ok {
                Ok(())
            } else {
                Err(format!("{p:?} {part:?}: witness {:?}", outcome.witness))
            }
        },
    );
    let seconds = start.elapsed().as_secs_f64();
    let pass = first_failure(&results).is_none();
    let detail = match first_failure(&results) {
        Some(f) => format!("part-uniform verification failed: {f}"),
        None => "part-uniform construction verified on every part-constant pair".into(),
    };
    CriterionResult {
        id: 5,
        name: "part-uniform construction",
        pass,
        instances: cases.len(),
        detail,
        seconds,
    }
}

/// Criterion 6: secret sharing over the `F_2` extension representation at
/// dealer 1. On instances whose field has at most 9 elements, every
/// codeword round-trips through every qualified set, and the privacy check
/// passes on every maximal unqualified set.
pub fn criterion_secret_sharing(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let two = BigUint::from(2u32);
    let instances: Vec<IntervalPresentation> = enumerate_presentations(cfg.max_n, cfg.max_r)
        .into_iter()
        .filter(|p| {
            // Keep instances whose extension field stays at order <= 9.
            let s = max_matching_weight_bound(p.rank(), p.n()) + 1;
            s <= 3
        })
        .collect();
    let results = par_map(
        &instances,
        cfg.jobs,
        |p| -> std::result::Result<(), String> {
            let rep = build_extension_rep(p, &two).map_err(|e| format!("{p:?}: {e}"))?;
            let scheme = SharingScheme::new(rep, 1).map_err(|e| format!("{p:?}: {e}"))?;
            let ctx = scheme.ctx().clone();
            let elements = ctx.all_elements().map_err(|e| format!("{p:?}: {e}"))?;
            let r = scheme.representation().matrix().rows();
            // All qualified sets of players.
            let players = scheme.players().to_vec();
            let mut qualified: Vec<Vec<usize>> = Vec::new();
            for mask in 0usize..(1 << players.len()) {
                let set: Vec<usize> = (0..players.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| players[i])
                    .collect();
                if scheme
                    .is_qualified(&set)
                    .map_err(|e| format!("{p:?}: {e}"))?
                {
                    qualified.push(set);
                }
            }
            // Every coefficient vector; round-trip the induced secret.
            let mut index = vec![0usize; r];
            loop {
                let coeffs: Vec<_> = index.iter().map(|&i| elements[i].clone()).collect();
                let codeword = scheme
                    .representation()
                    .matrix()
                    .left_mul_vector(&coeffs)
                    .map_err(|e| format!("{p:?}: {e}"))?;
                let secret = codeword[scheme.dealer() - 1].clone();
                let shares = scheme
                    .deal(&secret, &coeffs)
                    .map_err(|e| format!("{p:?}: {e}"))?;
                for q in &qualified {
                    let sub = shares.restrict(q).map_err(|e| format!("{p:?}: {e}"))?;
                    let got = scheme
                        .reconstruct(&sub)
                        .map_err(|e| format!("{p:?} {q:?}: {e}"))?;
                    if got != secret {
                        return Err(format!("{p:?}: wrong secret for qualified set {q:?}"));
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == r {
                        // Privacy on every maximal unqualified set.
                        let maximal = scheme
                            .maximal_unqualified_sets()
                            .map_err(|e| format!("{p:?}: {e}"))?;
                        for u in &maximal {
                            let ok = scheme
                                .privacy_check(u)
                                .map_err(|e| format!("{p:?} {u:?}: {e}"))?;
                            if !ok {
                                return Err(format!("{p:?}: privacy fails on {u:?}"));
                            }
                        }
                        return Ok(());
                    }
                    index[pos] += 1;
                    if index[pos] < elements.len() {
                        break;
                    }
                    index[pos] = 0;
                    pos += 1;
                }
            }
        },
    );
    let seconds = start.elapsed().as_secs_f64();
    let pass = first_failure(&results).is_none();
    let detail = match first_failure(&results) {
        Some(f) => format!("secret sharing failed: {f}"),
        None => "deal/reconstruct round-trips and privacy hold on all small-field instances".into(),
    };
    CriterionResult {
        id: 6,
        name: "secret sharing",
        pass,
        instances: instances.len(),
        detail,
        seconds,
    }
}

/// Criterion 7: the port at 1 is hierarchical with smaller indices
/// superior; the port at `n` reverses the order.
pub fn criterion_hierarchy(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let instances = enumerate_presentations(cfg.max_n, cfg.max_r);
    let results = par_map(
        &instances,
        cfg.jobs,
        |p| -> std::result::Result<(), String> {
            let m = matroid_of(p);
            let n = p.n();
            if n >= 2 {
                let port1 = m.port(1).map_err(|e| format!("{p:?}: {e}"))?;
                for y in 2..=n {
                    for x in y + 1..=n {
                        // 1 < y <= x: x must be inferior to y.
                        if !hierarchically_inferior(&port1, x, y)
                            .map_err(|e| format!("{p:?}: {e}"))?
                        {
                            return Err(format!("{p:?}: port at 1: {x} not inferior to {y}"));
                        }
                    }
                }
                let port_n = m.port(n).map_err(|e| format!("{p:?}: {e}"))?;
                for x in 1..n {
                    for y in x + 1..n {
                        // Reversed: x <= y < n means x is inferior to y.
                        if !hierarchically_inferior(&port_n, x, y)
                            .map_err(|e| format!("{p:?}: {e}"))?
                        {
                            return Err(format!("{p:?}: port at {n}: {x} not inferior to {y}"));
                        }
                    }
                }
            }
            Ok(())
        },
    );
    let seconds = start.elapsed().as_secs_f64();
    let pass = first_failure(&results).is_none();
    let detail = match first_failure(&results) {
        Some(f) => format!("hierarchy violated: {f}"),
        None => "ports at 1 and n are hierarchical with the expected orders".into(),
    };
    CriterionResult {
        id: 7,
        name: "hierarchy",
        pass,
        instances: instances.len(),
        detail,
        seconds,
    }
}

/// Criterion 8: implementation-vs-oracle cross-checks. Elimination
/// determinants against the Leibniz sum, the irreducible search against an
/// independent bitmask trial-division oracle, and matching rank against the
/// Hall criterion.
pub fn criterion_oracles(cfg: &SweepConfig) -> CriterionResult {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut failure: Option<String> = None;

    // (a) determinant vs Leibniz on matrices up to 4x4.
    match oracle::determinant_cross_check() {
        Ok(count) => checked += count,
        Err(e) => failure = Some(format!("determinant vs Leibniz: {e}")),
    }

    // (b) lexicographically first irreducible over F_2 vs bitmask factor
    // search for degrees 1..=8.
    if failure.is_none() {
        match oracle::irreducible_cross_check(8) {
            Ok(count) => checked += count,
            Err(e) => failure = Some(format!("irreducible search: {e}")),
        }
    }

    // (c) Hall criterion vs matching rank on the sweep instances.
    if failure.is_none() {
        let instances = enumerate_presentations(cfg.max_n, cfg.max_r);
        let results = par_map(
            &instances,
            cfg.jobs,
            |p| -> std::result::Result<(), String> {
                oracle::hall_cross_check(p).map_err(|e| format!("{p:?}: {e}"))
            },
        );
        checked += instances.len();
        if let Some(f) = first_failure(&results) {
            failure = Some(format!("Hall criterion: {f}"));
        }
    }

    let seconds = start.elapsed().as_secs_f64();
    let pass = failure.is_none();
    let detail = match failure {
        Some(f) => f,
        None => "elimination, irreducibility and rank agree with independent oracles".into(),
    };
    CriterionResult {
        id: 8,
        name: "oracle cross-checks",
        pass,
        instances: checked,
        detail,
        seconds,
    }
}

/// Runs all eight criteria in order.
pub fn run_all(cfg: &SweepConfig) -> Vec<CriterionResult> {
    vec![
        criterion_extension_sweep(cfg),
        criterion_prime_sweep(cfg),
        criterion_isolation(cfg),
        criterion_weight_bounds(cfg),
        criterion_m_uniform(cfg),
        criterion_secret_sharing(cfg),
        criterion_hierarchy(cfg),
        criterion_oracles(cfg),
    ]
}

/// Convenience wrapper asserting nothing: callers inspect `pass`.
pub fn run_all_default() -> Vec<CriterionResult> {
    run_all(&SweepConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_match_independent_oracle() {
        // Frozen from an independent enumeration (coverage + staircase +
        // saturating matching checked with a separate matching library).
        let expected: &[((usize, usize), usize)] = &[
            ((1, 1), 1),
            ((2, 1), 1),
            ((2, 2), 4),
            ((3, 1), 1),
            ((3, 2), 8),
            ((3, 3), 25),
            ((4, 1), 1),
            ((4, 2), 13),
            ((4, 3), 69),
            ((5, 1), 1),
            ((5, 2), 19),
            ((5, 3), 147),
            ((6, 1), 1),
            ((6, 2), 26),
            ((6, 3), 272),
        ];
        let all = enumerate_presentations(6, 3);
        for &((n, r), count) in expected {
            let got = all.iter().filter(|p| p.n() == n && p.rank() == r).count();
            assert_eq!(got, count, "count mismatch at n={n}, r={r}");
        }
        assert_eq!(all.len(), 589);
    }

    #[test]
    fn small_sweep_all_pass() {
        let cfg = SweepConfig {
            max_n: 4,
            max_r: 3,
            jobs: 1,
        };
        for result in run_all(&cfg) {
            assert!(result.pass, "{}", result.summary_line());
        }
    }

    #[test]
    fn par_map_preserves_order() {
        let items: Vec<usize> = (0..103).collect();
        let doubled = par_map(&items, 4, |&x| x * 2);
        assert_eq!(doubled, items.iter().map(|&x| x * 2).collect::<Vec<_>>());
    }
}
