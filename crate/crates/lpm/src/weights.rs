//! Isolating weight functions on presentation graphs.
//!
//! A weight function on the edges is isolating when, for every basis `B`,
//! the induced subgraph `G_B` has a unique minimum-weight perfect matching.
//! The standard weights `w(j, x) = (j - 1)(n - x)` are isolating for every
//! interval presentation: the product of a non-decreasing row factor and a
//! non-increasing column factor makes the diagonal matching `(j, x_j)` the
//! strict minimum by the rearrangement inequality.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::matroid::{BipartiteGraph, GroundPartition};
use crate::{Error, Result, MAX_SINGLE_SUBSET_N};

/// Non-negative integer weights on the edges of a presentation graph,
/// keyed by 1-indexed `(row, column)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    weights: BTreeMap<(usize, usize), u64>,
    max_weight: u64,
}

impl WeightFunction {
    /// Wraps an explicit weight map; every edge of `graph` must be a key and
    /// no extraneous keys are allowed.
    pub fn new(graph: &BipartiteGraph, weights: BTreeMap<(usize, usize), u64>) -> Result<Self> {
        for &(j, x) in weights.keys() {
            if !graph.has_edge(j, x) {
                return Err(Error::InvalidInput(format!(
                    "weight on ({j},{x}) which is not an edge"
                )));
            }
        }
        for e in graph.edges() {
            if !weights.contains_key(&e) {
                return Err(Error::InvalidInput(format!(
                    "edge ({},{}) has no weight",
                    e.0, e.1
                )));
            }
        }
        let max_weight = weights.values().copied().max().unwrap_or(0);
        Ok(WeightFunction {
            weights,
            max_weight,
        })
    }

    /// The standard weights `w(j, x) = (j - 1)(n - x)`; the maximum weight
    /// is at most `(r - 1)(n - 1)`.
    pub fn standard(graph: &BipartiteGraph) -> Self {
        let n = graph.cols() as u64;
        let weights = graph
            .edges()
            .into_iter()
            .map(|(j, x)| ((j, x), (j as u64 - 1) * (n - x as u64)))
            .collect();
        Self::checked(weights)
    }

    /// Part-level weights `w(j, x) = (j - 1)(m - pi(x))` for a partition on
    /// which the graph is constant (columns in one part have identical
    /// neighborhoods).
    pub fn m_uniform(graph: &BipartiteGraph, part: &GroundPartition) -> Result<Self> {
        if part.n() != graph.cols() {
            return Err(Error::InvalidPartition(format!(
                "partition over {} elements for a graph with {} columns",
                part.n(),
                graph.cols()
            )));
        }
        for (lo, hi) in part.parts() {
            for x in lo + 1..=hi {
                if graph.col_neighbors(lo)? != graph.col_neighbors(x)? {
                    return Err(Error::NotPartConstant {
                        first: lo,
                        second: x,
                    });
                }
            }
        }
        let m = part.m() as u64;
        let mut weights = BTreeMap::new();
        for (j, x) in graph.edges() {
            let w = (j as u64 - 1) * (m - part.part_of(x)? as u64);
            weights.insert((j, x), w);
        }
        Ok(Self::checked(weights))
    }

    fn checked(weights: BTreeMap<(usize, usize), u64>) -> Self {
        let max_weight = weights.values().copied().max().unwrap_or(0);
        WeightFunction {
            weights,
            max_weight,
        }
    }

    pub fn weight(&self, j: usize, x: usize) -> Option<u64> {
        self.weights.get(&(j, x)).copied()
    }

    /// Largest edge weight `t`.
    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    pub fn edges(&self) -> impl Iterator<Item = (&(usize, usize), &u64)> {
        self.weights.iter()
    }

    /// Sum of the weights of a matching; every edge must carry a weight.
    pub fn matching_weight(&self, matching: &[(usize, usize)]) -> Result<u64> {
        let mut total: u64 = 0;
        for &(j, x) in matching {
            let w = self.weight(j, x).ok_or_else(|| {
                Error::InvalidInput(format!("matching edge ({j},{x}) has no weight"))
            })?;
            total = total
                .checked_add(w)
                .ok_or_else(|| Error::InvalidInput("matching weight overflow".into()))?;
        }
        Ok(total)
    }
}

/// Upper bound on the weight of any perfect matching of any `G_B` under the
/// standard weights: the sum `(r-1)(n-1) + (r-2)(n-2) + ... + 1(n-r+1)`,
/// i.e. `sum_{k=1}^{r-1} k (n - r + k)`.
pub fn max_matching_weight_bound(r: usize, n: usize) -> u64 {
    assert!(r >= 1 && r <= n, "need 1 <= r <= n");
    (1..r as u64)
        .map(|k| {
            k.checked_mul(n as u64 - r as u64 + k)
                .expect("weight bound overflow")
        })
        .sum()
}

/// The coarser closed-form bound `r(r-1)(n-1)/2` quoted alongside the sum.
pub fn simple_weight_bound(r: usize, n: usize) -> u64 {
    (r as u64) * (r as u64 - 1) * (n as u64 - 1) / 2
}

/// Minimum-weight data of one basis of the isolation check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisIsolation {
    pub basis: Vec<usize>,
    pub min_weight: u64,
    /// Number of distinct minimum-weight perfect matchings.
    pub multiplicity: usize,
    /// The minimum-weight matchings themselves (all of them).
    pub min_matchings: Vec<Vec<(usize, usize)>>,
    /// Largest perfect-matching weight seen for this basis.
    pub max_weight: u64,
}

/// Outcome of the exhaustive isolation check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IsolationReport {
    pub isolating: bool,
    pub bases: Vec<BasisIsolation>,
}

impl IsolationReport {
    /// First basis with more than one minimum matching, if any.
    pub fn witness(&self) -> Option<&BasisIsolation> {
        self.bases.iter().find(|b| b.multiplicity > 1)
    }
}

/// Enumerates all perfect matchings of `G_B` by recursive row-by-row
/// assignment with pruning; deterministic order. `b` must have exactly as
/// many columns as the graph has rows.
pub fn perfect_matchings(graph: &BipartiteGraph, b: &[usize]) -> Result<Vec<Vec<(usize, usize)>>> {
    if b.len() != graph.rows() {
        return Err(Error::DimensionMismatch(format!(
            "perfect matchings of {} columns against {} rows",
            b.len(),
            graph.rows()
        )));
    }
    if b.len() > MAX_SINGLE_SUBSET_N {
        return Err(Error::ScaleLimit {
            what: "perfect matching enumeration",
            limit: MAX_SINGLE_SUBSET_N as u128,
            actual: b.len() as u128,
        });
    }
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != b.len() {
        return Err(Error::InvalidElement("repeated column".into()));
    }
    let mut used = vec![false; sorted.len()];
    let mut current = Vec::with_capacity(graph.rows());
    let mut out = Vec::new();
    assign_rows(graph, &sorted, 1, &mut used, &mut current, &mut out);
    Ok(out)
}

fn assign_rows(
    graph: &BipartiteGraph,
    cols: &[usize],
    row: usize,
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if row > graph.rows() {
        out.push(current.clone());
        return;
    }
    for (i, &x) in cols.iter().enumerate() {
        if used[i] || !graph.has_edge(row, x) {
            continue;
        }
        used[i] = true;
        current.push((row, x));
        assign_rows(graph, cols, row + 1, used, current, out);
        current.pop();
        used[i] = false;
    }
}

/// Checks whether `w` is isolating on `graph`: for every basis the minimum
/// weight perfect matching must be unique. The report carries per-basis
/// minima, multiplicities and witnesses. Enumerates bases and their perfect
/// matchings, so it is gated at [`MAX_SINGLE_SUBSET_N`] columns.
pub fn check_isolating(graph: &BipartiteGraph, w: &WeightFunction) -> Result<IsolationReport> {
    if graph.cols() > MAX_SINGLE_SUBSET_N {
        return Err(Error::ScaleLimit {
            what: "isolation check",
            limit: MAX_SINGLE_SUBSET_N as u128,
            actual: graph.cols() as u128,
        });
    }
    let matroid = crate::matroid::TransversalMatroid::from_graph(graph.clone());
    let mut bases_report = Vec::new();
    let mut isolating = true;
    for basis in matroid.bases() {
        let matchings = perfect_matchings(graph, &basis)?;
        debug_assert!(!matchings.is_empty(), "a basis has a perfect matching");
        let weights: Vec<u64> = matchings
            .iter()
            .map(|m| w.matching_weight(m))
            .collect::<Result<_>>()?;
        let min = *weights.iter().min().unwrap();
        let max = *weights.iter().max().unwrap();
        let min_matchings: Vec<_> = matchings
            .iter()
            .zip(&weights)
            .filter(|(_, &wt)| wt == min)
            .map(|(m, _)| m.clone())
            .collect();
        if min_matchings.len() > 1 {
            isolating = false;
        }
        bases_report.push(BasisIsolation {
            basis,
            min_weight: min,
            multiplicity: min_matchings.len(),
            min_matchings,
            max_weight: max,
        });
    }
    Ok(IsolationReport {
        isolating,
        bases: bases_report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::IntervalPresentation;

    fn u23_graph() -> BipartiteGraph {
        IntervalPresentation::new(3, vec![(1, 3), (1, 3)])
            .unwrap()
            .to_graph()
            .unwrap()
    }

    #[test]
    fn standard_weight_values() {
        let g = u23_graph();
        let w = WeightFunction::standard(&g);
        assert_eq!(w.weight(2, 1), Some(2));
        assert_eq!(w.weight(1, 1), Some(0));
        assert_eq!(w.weight(1, 3), Some(0));
        assert_eq!(w.weight(2, 3), Some(0));
        assert_eq!(w.max_weight(), 2);

        let g = IntervalPresentation::new(4, vec![(1, 2), (1, 4)])
            .unwrap()
            .to_graph()
            .unwrap();
        let w = WeightFunction::standard(&g);
        assert_eq!(w.weight(2, 4), Some(0));
    }

    #[test]
    fn m_uniform_weight_values() {
        let g = IntervalPresentation::new(4, vec![(1, 4), (1, 4)])
            .unwrap()
            .to_graph()
            .unwrap();
        let part = GroundPartition::new(4, vec![1, 3]).unwrap();
        let w = WeightFunction::m_uniform(&g, &part).unwrap();
        assert_eq!(w.weight(2, 1), Some(1));
        assert_eq!(w.weight(2, 3), Some(0));
        assert_eq!(w.weight(1, 1), Some(0));
        assert_eq!(w.weight(1, 4), Some(0));
    }

    #[test]
    fn m_uniform_rejects_part_inconstant_graph() {
        let g = IntervalPresentation::new(4, vec![(1, 2), (1, 4)])
            .unwrap()
            .to_graph()
            .unwrap();
        // Columns 2 and 3 have different neighborhoods but share a part.
        let part = GroundPartition::new(4, vec![1, 2]).unwrap();
        assert!(matches!(
            WeightFunction::m_uniform(&g, &part),
            Err(Error::NotPartConstant {
                first: 2,
                second: 3
            })
        ));
    }

    #[test]
    fn matching_weight_sums() {
        let g = u23_graph();
        let w = WeightFunction::standard(&g);
        assert_eq!(w.matching_weight(&[]).unwrap(), 0);
        assert_eq!(w.matching_weight(&[(1, 1), (2, 2)]).unwrap(), 1);
        assert_eq!(w.matching_weight(&[(1, 2), (2, 1)]).unwrap(), 2);
        assert!(w.matching_weight(&[(2, 9)]).is_err());
    }

    #[test]
    fn weight_map_must_cover_edges() {
        let g = u23_graph();
        let mut map = BTreeMap::new();
        map.insert((1, 1), 0u64);
        assert!(WeightFunction::new(&g, map.clone()).is_err());
        map.insert((7, 7), 0u64);
        assert!(WeightFunction::new(&g, map).is_err());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(max_matching_weight_bound(2, 3), 2);
        assert_eq!(max_matching_weight_bound(3, 4), 8);
        assert_eq!(max_matching_weight_bound(1, 5), 0);
        assert_eq!(simple_weight_bound(3, 4), 9);
    }

    #[test]
    fn standard_weights_isolate_u23() {
        let g = u23_graph();
        let report = check_isolating(&g, &WeightFunction::standard(&g)).unwrap();
        assert!(report.isolating);
        assert!(report.witness().is_none());
        // Diagonal matching is the minimum for each basis.
        for b in &report.bases {
            let diag: Vec<(usize, usize)> = b
                .basis
                .iter()
                .enumerate()
                .map(|(j0, &x)| (j0 + 1, x))
                .collect();
            assert_eq!(b.min_matchings, vec![diag]);
        }
    }

    #[test]
    fn zero_weights_fail_on_u22() {
        let g = IntervalPresentation::new(2, vec![(1, 2), (1, 2)])
            .unwrap()
            .to_graph()
            .unwrap();
        let zero: BTreeMap<_, _> = g.edges().into_iter().map(|e| (e, 0u64)).collect();
        let w = WeightFunction::new(&g, zero).unwrap();
        let report = check_isolating(&g, &w).unwrap();
        assert!(!report.isolating);
        let witness = report.witness().unwrap();
        assert_eq!(witness.basis, vec![1, 2]);
        assert_eq!(witness.multiplicity, 2);
        assert_eq!(witness.min_weight, 0);
    }

    #[test]
    fn power_of_two_weights_always_isolate() {
        for p in [
            IntervalPresentation::new(2, vec![(1, 2), (1, 2)]).unwrap(),
            IntervalPresentation::new(4, vec![(1, 2), (1, 4)]).unwrap(),
            IntervalPresentation::new(5, vec![(1, 3), (2, 4), (3, 5)]).unwrap(),
        ] {
            let g = p.to_graph().unwrap();
            let map: BTreeMap<_, _> = g
                .edges()
                .into_iter()
                .enumerate()
                .map(|(k, e)| (e, 1u64 << k))
                .collect();
            let w = WeightFunction::new(&g, map).unwrap();
            assert!(check_isolating(&g, &w).unwrap().isolating);
        }
    }

    #[test]
    fn isolation_check_gated() {
        let p = IntervalPresentation::new(17, vec![(1, 17)]).unwrap();
        let g = p.to_graph().unwrap();
        let w = WeightFunction::standard(&g);
        assert!(matches!(
            check_isolating(&g, &w),
            Err(Error::ScaleLimit { .. })
        ));
    }

    #[test]
    fn matching_enumeration_counts() {
        let g = u23_graph();
        // U_{2,3}, basis {1,2}: both permutations are matchings.
        assert_eq!(perfect_matchings(&g, &[1, 2]).unwrap().len(), 2);
        let g = IntervalPresentation::new(3, vec![(1, 1), (2, 3)])
            .unwrap()
            .to_graph()
            .unwrap();
        assert_eq!(perfect_matchings(&g, &[1, 2]).unwrap().len(), 1);
        assert!(perfect_matchings(&g, &[1]).is_err());
    }
}
