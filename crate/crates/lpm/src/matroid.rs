//! Transversal and lattice path matroid machinery.
//!
//! A transversal matroid is given by a bipartite presentation graph with
//! rows `J = [r]` and ground-set columns `S = [n]`; a set of columns is
//! independent iff it can be matched into the rows. Lattice path matroids
//! are the transversal matroids presented by a staircase of row intervals
//! `A_j = [a_j, b_j]`. Elements and rows are 1-indexed in every public
//! signature (the serialized formats use the same convention); internal
//! storage is 0-indexed.

use crate::{Error, Result, MAX_SINGLE_SUBSET_N, MAX_SWEEP_N};

/// Bipartite presentation graph with rows `[r]` and columns `[n]`.
///
/// Invariants enforced at construction: `1 <= r <= n`, all edges in range,
/// and the rows can be saturated by a matching, so the presentation size
/// equals the rank of the induced matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    rows: usize,
    cols: usize,
    /// Sorted 0-indexed column neighbors per 0-indexed row.
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds a graph from 1-indexed `(row, column)` edges.
    pub fn new(rows: usize, cols: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if rows < 1 || rows > cols {
            return Err(Error::InvalidGraph(format!(
                "need 1 <= rows <= cols, got rows={rows} cols={cols}"
            )));
        }
        let mut adj = vec![Vec::new(); rows];
        for &(j, x) in edges {
            if j < 1 || j > rows {
                return Err(Error::InvalidGraph(format!("edge row {j} out of range")));
            }
            if x < 1 || x > cols {
                return Err(Error::InvalidGraph(format!("edge column {x} out of range")));
            }
            adj[j - 1].push(x - 1);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let g = BipartiteGraph { rows, cols, adj };
        let saturating = g.max_matching_internal(&(0..cols).collect::<Vec<_>>());
        if saturating.len() != rows {
            return Err(Error::InvalidGraph(format!(
                "rows cannot be saturated: maximum matching has {} < {} edges",
                saturating.len(),
                rows
            )));
        }
        Ok(g)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn has_edge(&self, j: usize, x: usize) -> bool {
        j >= 1
            && j <= self.rows
            && x >= 1
            && x <= self.cols
            && self.adj[j - 1].binary_search(&(x - 1)).is_ok()
    }

    /// All edges as 1-indexed pairs in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j0, nbrs) in self.adj.iter().enumerate() {
            for &x0 in nbrs {
                out.push((j0 + 1, x0 + 1));
            }
        }
        out
    }

    /// Neighborhood `A_j` of a row, 1-indexed.
    pub fn row_neighbors(&self, j: usize) -> Result<Vec<usize>> {
        if j < 1 || j > self.rows {
            return Err(Error::InvalidElement(format!("row {j} out of range")));
        }
        Ok(self.adj[j - 1].iter().map(|&x0| x0 + 1).collect())
    }

    /// Neighborhood `C_x` of a column, 1-indexed.
    pub fn col_neighbors(&self, x: usize) -> Result<Vec<usize>> {
        if x < 1 || x > self.cols {
            return Err(Error::InvalidElement(format!("column {x} out of range")));
        }
        Ok((1..=self.rows).filter(|&j| self.has_edge(j, x)).collect())
    }

    /// Boolean polymatroid rank `f(X) = |N(X)|`, the number of rows adjacent
    /// to some column of `X`.
    pub fn neighborhood_size(&self, cols: &[usize]) -> Result<usize> {
        let set = self.column_set(cols)?;
        let mut seen = vec![false; self.rows];
        for (j0, nbrs) in self.adj.iter().enumerate() {
            if nbrs.iter().any(|&x0| set[x0]) {
                seen[j0] = true;
            }
        }
        Ok(seen.iter().filter(|&&b| b).count())
    }

    /// Deterministic maximum matching of the subgraph induced by the given
    /// columns: augmenting-path search inserting rows in increasing order,
    /// scanning candidate columns in increasing order. Returns 1-indexed
    /// `(row, column)` pairs sorted by row.
    pub fn max_matching(&self, cols: &[usize]) -> Result<Vec<(usize, usize)>> {
        let set = self.column_set(cols)?;
        let allowed: Vec<usize> = (0..self.cols).filter(|&x0| set[x0]).collect();
        Ok(self
            .max_matching_internal(&allowed)
            .into_iter()
            .map(|(j0, x0)| (j0 + 1, x0 + 1))
            .collect())
    }

    /// Core matcher over 0-indexed allowed columns.
    fn max_matching_internal(&self, allowed: &[usize]) -> Vec<(usize, usize)> {
        let mut in_b = vec![false; self.cols];
        for &x0 in allowed {
            in_b[x0] = true;
        }
        // col_match[x0] = row matched to column x0.
        let mut col_match: Vec<Option<usize>> = vec![None; self.cols];
        for j0 in 0..self.rows {
            let mut visited = vec![false; self.cols];
            self.augment(j0, &in_b, &mut visited, &mut col_match);
        }
        let mut out: Vec<(usize, usize)> = col_match
            .iter()
            .enumerate()
            .filter_map(|(x0, m)| m.map(|j0| (j0, x0)))
            .collect();
        out.sort_unstable();
        out
    }

    fn augment(
        &self,
        j0: usize,
        in_b: &[bool],
        visited: &mut [bool],
        col_match: &mut [Option<usize>],
    ) -> bool {
        for &x0 in &self.adj[j0] {
            if !in_b[x0] || visited[x0] {
                continue;
            }
            visited[x0] = true;
            let free = match col_match[x0] {
                None => true,
                Some(other) => self.augment(other, in_b, visited, col_match),
            };
            if free {
                col_match[x0] = Some(j0);
                return true;
            }
        }
        false
    }

    /// Validates a 1-indexed column subset and returns a membership mask.
    fn column_set(&self, cols: &[usize]) -> Result<Vec<bool>> {
        let mut set = vec![false; self.cols];
        for &x in cols {
            if x < 1 || x > self.cols {
                return Err(Error::InvalidElement(format!(
                    "column {x} out of range 1..={}",
                    self.cols
                )));
            }
            if set[x - 1] {
                return Err(Error::InvalidElement(format!("column {x} repeated")));
            }
            set[x - 1] = true;
        }
        Ok(set)
    }
}

/// Row intervals `[a_j, b_j]` presenting a lattice path matroid.
///
/// Validity: `1 = a_1 <= ... <= a_r`, `b_1 <= ... <= b_r = n`, `a_j <= b_j`,
/// and every column covered by some interval (no loops).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPresentation {
    n: usize,
    intervals: Vec<(usize, usize)>,
}

impl IntervalPresentation {
    pub fn new(n: usize, intervals: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPresentation("ground set is empty".into()));
        }
        if intervals.is_empty() {
            return Err(Error::InvalidPresentation("interval list is empty".into()));
        }
        let r = intervals.len();
        if intervals[0].0 != 1 {
            return Err(Error::InvalidPresentation(format!(
                "a_1 = {} but the first interval must start at 1",
                intervals[0].0
            )));
        }
        if intervals[r - 1].1 != n {
            return Err(Error::InvalidPresentation(format!(
                "b_r = {} but the last interval must end at n = {n}",
                intervals[r - 1].1
            )));
        }
        for (j, &(a, b)) in intervals.iter().enumerate() {
            if a < 1 || b > n {
                return Err(Error::InvalidPresentation(format!(
                    "interval {} = [{a},{b}] leaves 1..={n}",
                    j + 1
                )));
            }
            if a > b {
                return Err(Error::InvalidPresentation(format!(
                    "interval {} = [{a},{b}] is empty",
                    j + 1
                )));
            }
            if j > 0 {
                let (pa, pb) = intervals[j - 1];
                if a < pa {
                    return Err(Error::InvalidPresentation(format!(
                        "a_{} = {a} < a_{} = {pa}: left endpoints must be non-decreasing",
                        j + 1,
                        j
                    )));
                }
                if b < pb {
                    return Err(Error::InvalidPresentation(format!(
                        "b_{} = {b} < b_{} = {pb}: right endpoints must be non-decreasing",
                        j + 1,
                        j
                    )));
                }
            }
        }
        let mut covered = vec![false; n];
        for &(a, b) in &intervals {
            for slot in covered.iter_mut().take(b).skip(a - 1) {
                *slot = true;
            }
        }
        if let Some(x0) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidPresentation(format!(
                "column {} is uncovered (would be a loop)",
                x0 + 1
            )));
        }
        Ok(IntervalPresentation { n, intervals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// Column intervals `C_x = [c_x, d_x]`, the transposed presentation.
    pub fn column_intervals(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .map(|x| {
                let c = self
                    .intervals
                    .iter()
                    .position(|&(a, b)| a <= x && x <= b)
                    .expect("every column is covered")
                    + 1;
                let d = self
                    .intervals
                    .iter()
                    .rposition(|&(a, b)| a <= x && x <= b)
                    .expect("every column is covered")
                    + 1;
                (c, d)
            })
            .collect()
    }

    /// Nested (generalized Catalan) presentations have `b_1 = n`,
    /// equivalently `c_n = 1`.
    pub fn is_nested(&self) -> bool {
        self.intervals[0].1 == self.n
    }

    /// The presentation graph, with edges exactly `{(j, x) : a_j <= x <= b_j}`.
    pub fn to_graph(&self) -> Result<BipartiteGraph> {
        let mut edges = Vec::new();
        for (j0, &(a, b)) in self.intervals.iter().enumerate() {
            for x in a..=b {
                edges.push((j0 + 1, x));
            }
        }
        BipartiteGraph::new(self.intervals.len(), self.n, &edges)
    }

    pub fn to_matroid(&self) -> Result<TransversalMatroid> {
        Ok(TransversalMatroid::from_graph(self.to_graph()?))
    }
}

/// A transversal matroid together with its presentation graph. The rank
/// equals the number of rows by the graph invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalMatroid {
    graph: BipartiteGraph,
}

/// Result of the lattice-path recognition procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpmCheck {
    /// The candidate intervals present the same matroid.
    LatticePath(IntervalPresentation),
    /// Refutation: a subset on which the candidate disagrees with the input.
    NotLatticePath { witness: Vec<usize> },
}

impl TransversalMatroid {
    pub fn from_graph(graph: BipartiteGraph) -> Self {
        TransversalMatroid { graph }
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.cols()
    }

    pub fn rank(&self) -> usize {
        self.graph.rows()
    }

    /// Rank of a column subset: the size of a maximum matching of `G_X`.
    pub fn subset_rank(&self, x: &[usize]) -> Result<usize> {
        Ok(self.graph.max_matching(x)?.len())
    }

    pub fn is_independent(&self, x: &[usize]) -> Result<bool> {
        Ok(self.subset_rank(x)? == x.len())
    }

    pub fn is_basis(&self, b: &[usize]) -> Result<bool> {
        Ok(b.len() == self.rank() && self.is_independent(b)?)
    }

    /// All bases in lexicographic order (as sorted 1-indexed sets). Runs a
    /// matching per r-subset, so the cost is C(n, r) matchings: desk scale.
    pub fn bases(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        Combinations::new(self.n(), self.rank())
            .filter(move |b| self.is_basis(b).expect("combination elements are in range"))
    }

    /// The port of the matroid at `p_o`: the access structure on the other
    /// elements whose qualified sets `X` satisfy `rank(X + p_o) = rank(X)`.
    pub fn port(&self, p_o: usize) -> Result<Port> {
        if p_o < 1 || p_o > self.n() {
            return Err(Error::InvalidElement(format!(
                "port element {p_o} out of range"
            )));
        }
        let players = (1..=self.n()).filter(|&x| x != p_o).collect();
        Ok(Port {
            matroid: self.clone(),
            p_o,
            players,
        })
    }

    /// Whether swapping `x` and `y` preserves the rank function, checked on
    /// every subset. Gated at [`MAX_SWEEP_N`].
    pub fn are_clones(&self, x: usize, y: usize) -> Result<bool> {
        let n = self.n();
        if x < 1 || x > n || y < 1 || y > n || x == y {
            return Err(Error::InvalidElement(format!(
                "clone check needs two distinct elements, got {x}, {y}"
            )));
        }
        let table = self.rank_table()?;
        let (xi, yi) = (x - 1, y - 1);
        for mask in 0..table.len() {
            let swapped = swap_bits(mask, xi, yi);
            if table[mask] != table[swapped] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Partition of the ground set into clonal classes, each sorted, classes
    /// ordered by smallest element.
    pub fn clonal_classes(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.n();
        let table = self.rank_table()?;
        let mut class_of: Vec<Option<usize>> = vec![None; n + 1];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 1..=n {
            if class_of[x].is_some() {
                continue;
            }
            let id = classes.len();
            classes.push(vec![x]);
            class_of[x] = Some(id);
            for y in x + 1..=n {
                if class_of[y].is_some() {
                    continue;
                }
                let clones = (0..table.len())
                    .all(|mask| table[mask] == table[swap_bits(mask, x - 1, y - 1)]);
                if clones {
                    classes[id].push(y);
                    class_of[y] = Some(id);
                }
            }
        }
        Ok(classes)
    }

    /// Ranks of all `2^n` subsets, indexed by bitmask (bit `i` = element
    /// `i + 1`). Gated at [`MAX_SWEEP_N`].
    pub fn rank_table(&self) -> Result<Vec<usize>> {
        let n = self.n();
        if n > MAX_SWEEP_N {
            return Err(Error::ScaleLimit {
                what: "all-subset rank table",
                limit: MAX_SWEEP_N as u128,
                actual: n as u128,
            });
        }
        let mut table = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            let subset = mask_to_set(mask as usize, n);
            table.push(self.subset_rank(&subset)?);
        }
        Ok(table)
    }

    /// Recognizes lattice path matroids: forms the candidate intervals
    /// `[a_j, b_j]` from the lexicographically first and last bases and
    /// verifies by exhaustive basis comparison that they present this
    /// matroid. Requires a loop-free matroid. Gated at
    /// [`MAX_SINGLE_SUBSET_N`] elements.
    pub fn canonical_lpm_presentation(&self) -> Result<LpmCheck> {
        if self.n() > MAX_SINGLE_SUBSET_N {
            return Err(Error::ScaleLimit {
                what: "lattice-path recognition",
                limit: MAX_SINGLE_SUBSET_N as u128,
                actual: self.n() as u128,
            });
        }
        for x in 1..=self.n() {
            if self.graph.col_neighbors(x)?.is_empty() {
                return Err(Error::LoopElement(x));
            }
        }
        let mut first: Option<Vec<usize>> = None;
        let mut last: Option<Vec<usize>> = None;
        for b in self.bases() {
            if first.is_none() {
                first = Some(b.clone());
            }
            last = Some(b);
        }
        let first = first.expect("a saturating matching exists, so there is a basis");
        let last = last.unwrap();
        let intervals: Vec<(usize, usize)> =
            first.iter().zip(&last).map(|(&a, &b)| (a, b)).collect();
        // The first basis dominates elementwise and the last is dominated,
        // so the candidate can only fail validation by leaving a column
        // uncovered; such a column would be a loop of the candidate matroid
        // and refutes the lattice-path claim by itself.
        for x in 1..=self.n() {
            if !intervals.iter().any(|&(a, b)| a <= x && x <= b) {
                return Ok(LpmCheck::NotLatticePath { witness: vec![x] });
            }
        }
        let candidate = IntervalPresentation::new(self.n(), intervals)?;
        let candidate_matroid = candidate.to_matroid()?;
        for b in Combinations::new(self.n(), self.rank()) {
            if self.is_basis(&b)? != candidate_matroid.is_basis(&b)? {
                return Ok(LpmCheck::NotLatticePath { witness: b });
            }
        }
        Ok(LpmCheck::LatticePath(candidate))
    }
}

/// Monotone access structure over 1-indexed players.
pub trait AccessStructure {
    fn players(&self) -> &[usize];
    fn is_qualified(&self, set: &[usize]) -> Result<bool>;
}

/// The port of a transversal matroid at a distinguished element.
#[derive(Debug, Clone)]
pub struct Port {
    matroid: TransversalMatroid,
    p_o: usize,
    players: Vec<usize>,
}

impl Port {
    pub fn p_o(&self) -> usize {
        self.p_o
    }

    pub fn matroid(&self) -> &TransversalMatroid {
        &self.matroid
    }

    /// Minimal qualified sets, sorted lexicographically. Gated at
    /// [`MAX_SWEEP_N`] players.
    pub fn minimal_qualified(&self) -> Result<Vec<Vec<usize>>> {
        let k = self.players.len();
        if k > MAX_SWEEP_N {
            return Err(Error::ScaleLimit {
                what: "minimal qualified set enumeration",
                limit: MAX_SWEEP_N as u128,
                actual: k as u128,
            });
        }
        let mut minimal = Vec::new();
        for mask in 0usize..(1 << k) {
            let set: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.players[i])
                .collect();
            if !self.is_qualified(&set)? {
                continue;
            }
            // Monotonicity: minimal iff removing any single player disqualifies.
            let mut is_minimal = true;
            for drop in &set {
                let smaller: Vec<usize> = set.iter().copied().filter(|x| x != drop).collect();
                if self.is_qualified(&smaller)? {
                    is_minimal = false;
                    break;
                }
            }
            if is_minimal {
                minimal.push(set);
            }
        }
        minimal.sort();
        Ok(minimal)
    }
}

impl AccessStructure for Port {
    fn players(&self) -> &[usize] {
        &self.players
    }

    fn is_qualified(&self, set: &[usize]) -> Result<bool> {
        for &x in set {
            if x == self.p_o || !self.players.contains(&x) {
                return Err(Error::InvalidElement(format!(
                    "{x} is not a player of the port at {}",
                    self.p_o
                )));
            }
        }
        let with: Vec<usize> = set.iter().copied().chain([self.p_o]).collect();
        Ok(self.matroid.subset_rank(&with)? == self.matroid.subset_rank(set)?)
    }
}

/// Whether `x` is hierarchically inferior to `y`: every qualified
/// `A + x` stays qualified as `A + y`, over all `A` avoiding both. Gated at
/// [`MAX_SWEEP_N`] players.
pub fn hierarchically_inferior(access: &dyn AccessStructure, x: usize, y: usize) -> Result<bool> {
    let players = access.players();
    if x == y || !players.contains(&x) || !players.contains(&y) {
        return Err(Error::InvalidElement(format!(
            "hierarchy check needs two distinct players, got {x}, {y}"
        )));
    }
    let rest: Vec<usize> = players
        .iter()
        .copied()
        .filter(|&z| z != x && z != y)
        .collect();
    if rest.len() > MAX_SWEEP_N {
        return Err(Error::ScaleLimit {
            what: "hierarchy subset sweep",
            limit: MAX_SWEEP_N as u128,
            actual: rest.len() as u128,
        });
    }
    for mask in 0usize..(1 << rest.len()) {
        let mut with_x: Vec<usize> = (0..rest.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| rest[i])
            .collect();
        let mut with_y = with_x.clone();
        with_x.push(x);
        with_y.push(y);
        if access.is_qualified(&with_x)? && !access.is_qualified(&with_y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partition of `[n]` into consecutive parts `S_i = [t_i, t_{i+1} - 1]`
/// given thresholds `1 = t_1 < t_2 < ... < t_m <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundPartition {
    n: usize,
    thresholds: Vec<usize>,
}

impl GroundPartition {
    pub fn new(n: usize, thresholds: Vec<usize>) -> Result<Self> {
        if thresholds.first() != Some(&1) {
            return Err(Error::InvalidPartition("first threshold must be 1".into()));
        }
        if thresholds.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(
                "thresholds must be strictly increasing".into(),
            ));
        }
        if *thresholds.last().unwrap() > n {
            return Err(Error::InvalidPartition(format!(
                "threshold {} exceeds n = {n}",
                thresholds.last().unwrap()
            )));
        }
        Ok(GroundPartition { n, thresholds })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts `m`.
    pub fn m(&self) -> usize {
        self.thresholds.len()
    }

    pub fn thresholds(&self) -> &[usize] {
        &self.thresholds
    }

    /// Parts as inclusive ranges `(t_i, t_{i+1} - 1)`.
    pub fn parts(&self) -> Vec<(usize, usize)> {
        (0..self.m())
            .map(|i| {
                let lo = self.thresholds[i];
                let hi = if i + 1 < self.m() {
                    self.thresholds[i + 1] - 1
                } else {
                    self.n
                };
                (lo, hi)
            })
            .collect()
    }

    /// `pi(x)`: the 1-indexed part containing element `x`.
    pub fn part_of(&self, x: usize) -> Result<usize> {
        if x < 1 || x > self.n {
            return Err(Error::InvalidElement(format!("element {x} out of range")));
        }
        Ok(self
            .thresholds
            .iter()
            .rposition(|&t| t <= x)
            .expect("t_1 = 1")
            + 1)
    }

    pub fn largest_part(&self) -> usize {
        self.parts()
            .iter()
            .map(|&(lo, hi)| hi - lo + 1)
            .max()
            .unwrap()
    }
}

/// Lexicographic iterator over `k`-subsets of `[n]`, 1-indexed.
pub(crate) struct Combinations {
    n: usize,
    k: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let current = if k <= n {
            Some((1..=k).collect())
        } else {
            None
        };
        Combinations { n, k, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        // Advance: find rightmost index that can still move right.
        let cur = self.current.as_mut().unwrap();
        if self.k == 0 {
            self.current = None;
            return Some(out);
        }
        let mut i = self.k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - (self.k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..self.k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

pub(crate) fn mask_to_set(mask: usize, n: usize) -> Vec<usize> {
    (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

fn swap_bits(mask: usize, i: usize, j: usize) -> usize {
    let bi = mask >> i & 1;
    let bj = mask >> j & 1;
    if bi == bj {
        return mask;
    }
    mask ^ (1 << i) ^ (1 << j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u23() -> IntervalPresentation {
        IntervalPresentation::new(3, vec![(1, 3), (1, 3)]).unwrap()
    }

    fn staircase_graph() -> IntervalPresentation {
        IntervalPresentation::new(4, vec![(1, 2), (1, 4)]).unwrap()
    }

    #[test]
    fn full_intervals_give_complete_graph() {
        let g = u23().to_graph().unwrap();
        assert_eq!(g.rows(), 2);
        assert_eq!(g.cols(), 3);
        assert_eq!(g.edges().len(), 6);
    }

    #[test]
    fn staircase_edges_exact() {
        let g = staircase_graph().to_graph().unwrap();
        assert_eq!(
            g.edges(),
            vec![(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (2, 4)]
        );
    }

    #[test]
    fn uncovered_column_rejected() {
        let err = IntervalPresentation::new(5, vec![(1, 2), (4, 5)]).unwrap_err();
        match err {
            Error::InvalidPresentation(msg) => assert!(msg.contains("column 3")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn monotonicity_violations_rejected() {
        assert!(IntervalPresentation::new(3, vec![(2, 3), (1, 3)]).is_err());
        assert!(IntervalPresentation::new(4, vec![(1, 3), (2, 2)]).is_err());
        assert!(IntervalPresentation::new(3, vec![(1, 2), (1, 2)]).is_err());
        assert!(IntervalPresentation::new(3, vec![]).is_err());
    }

    #[test]
    fn unsaturatable_rows_rejected() {
        // Rows 1 and 2 both cover only column 1.
        let p = IntervalPresentation::new(3, vec![(1, 1), (1, 1), (1, 3)]).unwrap();
        assert!(matches!(p.to_graph(), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn column_intervals_examples() {
        assert_eq!(u23().column_intervals(), vec![(1, 2), (1, 2), (1, 2)]);
        assert_eq!(
            staircase_graph().column_intervals(),
            vec![(1, 2), (1, 2), (2, 2), (2, 2)]
        );
        let p = IntervalPresentation::new(3, vec![(1, 1), (2, 3)]).unwrap();
        assert_eq!(p.column_intervals(), vec![(1, 1), (2, 2), (2, 2)]);
    }

    #[test]
    fn matching_examples() {
        let g = u23().to_graph().unwrap();
        assert_eq!(g.max_matching(&[1, 2]).unwrap().len(), 2);
        assert_eq!(g.max_matching(&[]).unwrap(), vec![]);
        let g = staircase_graph().to_graph().unwrap();
        assert_eq!(g.max_matching(&[3, 4]).unwrap().len(), 1);
    }

    #[test]
    fn rank_examples() {
        let m = staircase_graph().to_matroid().unwrap();
        assert_eq!(m.subset_rank(&[]).unwrap(), 0);
        assert_eq!(m.subset_rank(&[3, 4]).unwrap(), 1);
        assert_eq!(m.subset_rank(&[1, 2, 3, 4]).unwrap(), 2);
    }

    #[test]
    fn boolean_polymatroid_examples() {
        let g = staircase_graph().to_graph().unwrap();
        assert_eq!(g.neighborhood_size(&[]).unwrap(), 0);
        assert_eq!(g.neighborhood_size(&[1]).unwrap(), 2);
        assert_eq!(g.neighborhood_size(&[3, 4]).unwrap(), 1);
    }

    #[test]
    fn bases_lexicographic() {
        let m = u23().to_matroid().unwrap();
        let bases: Vec<_> = m.bases().collect();
        assert_eq!(bases, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);

        let m = staircase_graph().to_matroid().unwrap();
        let bases: Vec<_> = m.bases().collect();
        assert_eq!(
            bases,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );

        let m = IntervalPresentation::new(3, vec![(1, 1), (2, 3)])
            .unwrap()
            .to_matroid()
            .unwrap();
        let bases: Vec<_> = m.bases().collect();
        assert_eq!(bases, vec![vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn port_examples() {
        let m = u23().to_matroid().unwrap();
        let port = m.port(1).unwrap();
        assert!(port.is_qualified(&[2, 3]).unwrap());
        assert!(!port.is_qualified(&[2]).unwrap());

        let m = staircase_graph().to_matroid().unwrap();
        let port = m.port(4).unwrap();
        assert!(port.is_qualified(&[3]).unwrap());
        assert!(!port.is_qualified(&[2]).unwrap());

        // p_o a coloop: the port is empty.
        let m = IntervalPresentation::new(3, vec![(1, 1), (2, 3)])
            .unwrap()
            .to_matroid()
            .unwrap();
        let port = m.port(1).unwrap();
        assert_eq!(port.minimal_qualified().unwrap(), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn port_rejects_non_players() {
        let m = u23().to_matroid().unwrap();
        let port = m.port(1).unwrap();
        assert!(port.is_qualified(&[1, 2]).is_err());
        assert!(port.is_qualified(&[9]).is_err());
    }

    #[test]
    fn minimal_qualified_sets() {
        let m = u23().to_matroid().unwrap();
        let port = m.port(1).unwrap();
        assert_eq!(port.minimal_qualified().unwrap(), vec![vec![2, 3]]);
    }

    #[test]
    fn hierarchy_examples() {
        let m = u23().to_matroid().unwrap();
        let port = m.port(1).unwrap();
        assert!(hierarchically_inferior(&port, 2, 3).unwrap());
        assert!(hierarchically_inferior(&port, 3, 2).unwrap());

        let m = staircase_graph().to_matroid().unwrap();
        let port = m.port(4).unwrap();
        assert!(hierarchically_inferior(&port, 1, 3).unwrap());
    }

    #[test]
    fn clones_examples() {
        let m = u23().to_matroid().unwrap();
        assert!(m.are_clones(1, 2).unwrap());
        let m = staircase_graph().to_matroid().unwrap();
        assert!(m.are_clones(3, 4).unwrap());
        assert!(!m.are_clones(1, 3).unwrap());
        assert!(m.are_clones(1, 1).is_err());
    }

    #[test]
    fn clonal_classes_partition() {
        let m = u23().to_matroid().unwrap();
        assert_eq!(m.clonal_classes().unwrap(), vec![vec![1, 2, 3]]);
        let m = staircase_graph().to_matroid().unwrap();
        assert_eq!(m.clonal_classes().unwrap(), vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn canonical_lpm_round_trips() {
        let m = u23().to_matroid().unwrap();
        match m.canonical_lpm_presentation().unwrap() {
            LpmCheck::LatticePath(p) => {
                assert_eq!(p.intervals(), &[(1, 2), (2, 3)]);
            }
            other => panic!("expected lattice path, got {other:?}"),
        }

        // Two identical rows on two columns: the unique basis is {1,2}.
        let g = BipartiteGraph::new(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        let m = TransversalMatroid::from_graph(g);
        match m.canonical_lpm_presentation().unwrap() {
            LpmCheck::LatticePath(p) => assert_eq!(p.intervals(), &[(1, 1), (2, 2)]),
            other => panic!("expected lattice path, got {other:?}"),
        }
    }

    #[test]
    fn non_lpm_detected_with_witness() {
        // A_1 = {1,2,3}, A_2 = {1,4}: elements 2 and 3 are parallel and
        // pinned to row 1, which no interval presentation can express.
        let g = BipartiteGraph::new(2, 4, &[(1, 1), (1, 2), (1, 3), (2, 1), (2, 4)]).unwrap();
        let m = TransversalMatroid::from_graph(g);
        match m.canonical_lpm_presentation().unwrap() {
            LpmCheck::NotLatticePath { witness } => assert_eq!(witness, vec![2, 3]),
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn lpm_check_rejects_loops() {
        let g = BipartiteGraph::new(1, 2, &[(1, 1)]).unwrap();
        let m = TransversalMatroid::from_graph(g);
        assert!(matches!(
            m.canonical_lpm_presentation(),
            Err(Error::LoopElement(2))
        ));
    }

    #[test]
    fn partition_basics() {
        let part = GroundPartition::new(4, vec![1, 3]).unwrap();
        assert_eq!(part.m(), 2);
        assert_eq!(part.parts(), vec![(1, 2), (3, 4)]);
        assert_eq!(part.part_of(2).unwrap(), 1);
        assert_eq!(part.part_of(3).unwrap(), 2);
        assert_eq!(part.largest_part(), 2);
        assert!(GroundPartition::new(4, vec![2, 3]).is_err());
        assert!(GroundPartition::new(4, vec![1, 5]).is_err());
        assert!(GroundPartition::new(4, vec![1, 3, 3]).is_err());
    }

    #[test]
    fn combinations_cover_lex_order() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        let all: Vec<_> = Combinations::new(3, 0).collect();
        assert_eq!(all, vec![Vec::<usize>::new()]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
