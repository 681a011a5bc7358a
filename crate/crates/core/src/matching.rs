//! Bipartite maximum matching and minimum-weight maximum matching.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, AddAssign, Sub, SubAssign};

use crate::{Cost, Error};

/// Bipartite graph with left vertices `0..n_left` and right vertices `0..n_right`.
///
/// Adjacency keeps insertion order, which fixes tie-breaking in the solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n_right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(n_left: usize, n_right: usize) -> Self {
        Self {
            n_right,
            adj: vec![Vec::new(); n_left],
        }
    }

    pub fn from_edges<I>(n_left: usize, n_right: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n_left, n_right);
        for (l, r) in edges {
            g.add_edge(l, r)?;
        }
        Ok(g)
    }

    /// Adds `(l, r)`; returns whether it was new.
    pub fn add_edge(&mut self, l: usize, r: usize) -> Result<bool, Error> {
        self.check(l, r)?;
        if self.adj[l].contains(&r) {
            return Ok(false);
        }
        self.adj[l].push(r);
        Ok(true)
    }

    fn check(&self, l: usize, r: usize) -> Result<(), Error> {
        if l >= self.n_left() {
            return Err(Error::VertexOutOfRange {
                index: l,
                size: self.n_left(),
            });
        }
        if r >= self.n_right {
            return Err(Error::VertexOutOfRange {
                index: r,
                size: self.n_right,
            });
        }
        Ok(())
    }

    pub fn n_left(&self) -> usize {
        self.adj.len()
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adj.get(l).is_some_and(|a| a.contains(&r))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(l, rs)| rs.iter().map(move |&r| (l, r)))
    }
}

/// A set of vertex-disjoint `(left, right)` edges, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching, rejecting pairs that share an endpoint.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Option<Self> {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        let mut rights: Vec<_> = pairs.iter().map(|&(_, r)| r).collect();
        rights.sort_unstable();
        let left_clash = pairs.windows(2).any(|w| w[0].0 == w[1].0);
        let right_clash = rights.windows(2).any(|w| w[0] == w[1]);
        (!left_clash && !right_clash).then_some(Self { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, l: usize, r: usize) -> bool {
        self.pairs.binary_search(&(l, r)).is_ok()
    }

    pub fn right_of(&self, l: usize) -> Option<usize> {
        self.pairs
            .binary_search_by(|&(pl, _)| pl.cmp(&l))
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn left_of(&self, r: usize) -> Option<usize> {
        self.pairs.iter().find(|&&(_, pr)| pr == r).map(|&(l, _)| l)
    }

    /// Whether every pair is an edge of `g`.
    pub fn is_matching_of(&self, g: &BipartiteGraph) -> bool {
        self.pairs.iter().all(|&(l, r)| g.has_edge(l, r))
    }
}

/// Right vertices not covered by `m`, ascending.
pub fn right_unmatched(g: &BipartiteGraph, m: &Matching) -> Vec<usize> {
    let mut covered = vec![false; g.n_right()];
    for &(_, r) in m.pairs() {
        covered[r] = true;
    }
    (0..g.n_right()).filter(|&r| !covered[r]).collect()
}

/// Maximum-cardinality matching by Hopcroft–Karp, `O(|E| sqrt(V))`.
pub fn maximum_matching(g: &BipartiteGraph) -> Matching {
    const FREE: usize = usize::MAX;
    let n_left = g.n_left();
    let mut mate_left = vec![FREE; n_left];
    let mut mate_right = vec![FREE; g.n_right()];
    let mut dist = vec![usize::MAX; n_left];
    let mut queue = VecDeque::new();

    loop {
        queue.clear();
        for l in 0..n_left {
            if mate_left[l] == FREE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in g.neighbors(l) {
                match mate_right[r] {
                    FREE => found = true,
                    next if dist[next] == usize::MAX => {
                        dist[next] = dist[l] + 1;
                        queue.push_back(next);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut cursor = vec![0usize; n_left];
        for l in 0..n_left {
            if mate_left[l] == FREE {
                augment(
                    g,
                    l,
                    &mut mate_left,
                    &mut mate_right,
                    &mut dist,
                    &mut cursor,
                );
            }
        }
    }

    Matching {
        pairs: mate_left
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r != FREE)
            .map(|(l, &r)| (l, r))
            .collect(),
    }
}

fn augment(
    g: &BipartiteGraph,
    start: usize,
    mate_left: &mut [usize],
    mate_right: &mut [usize],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    const FREE: usize = usize::MAX;
    // Layered DFS with an explicit path of left vertices; cursor[l] is the
    // next neighbor of l to try and survives across calls within a phase.
    let mut path = vec![start];
    while let Some(&l) = path.last() {
        let nbrs = g.neighbors(l);
        if cursor[l] == nbrs.len() {
            dist[l] = usize::MAX;
            path.pop();
            if let Some(&parent) = path.last() {
                cursor[parent] += 1;
            }
            continue;
        }
        let next = mate_right[nbrs[cursor[l]]];
        if next == FREE {
            for &pl in &path {
                let pr = g.neighbors(pl)[cursor[pl]];
                mate_left[pl] = pr;
                mate_right[pr] = pl;
            }
            return true;
        }
        if dist[next] == dist[l] + 1 {
            path.push(next);
        } else {
            cursor[l] += 1;
        }
    }
    false
}

/// Bipartite graph with an extended nonnegative weight per edge.
///
/// An infinite weight marks an edge that may appear in a maximum matching
/// only when no maximum matching avoids it.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedBipartiteGraph {
    graph: BipartiteGraph,
    weights: Vec<Vec<Cost>>,
}

impl WeightedBipartiteGraph {
    pub fn new(n_left: usize, n_right: usize) -> Self {
        Self {
            graph: BipartiteGraph::new(n_left, n_right),
            weights: vec![Vec::new(); n_left],
        }
    }

    /// Adds `(l, r)` with weight `w`. A repeated edge keeps its smaller weight.
    pub fn add_edge(&mut self, l: usize, r: usize, w: Cost) -> Result<(), Error> {
        self.graph.check(l, r)?;
        if let Some(pos) = self.graph.adj[l].iter().position(|&x| x == r) {
            let slot = &mut self.weights[l][pos];
            *slot = (*slot).min(w);
        } else {
            self.graph.adj[l].push(r);
            self.weights[l].push(w);
        }
        Ok(())
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn weight(&self, l: usize, r: usize) -> Option<Cost> {
        let pos = self.graph.adj.get(l)?.iter().position(|&x| x == r)?;
        Some(self.weights[l][pos])
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Cost)> + '_ {
        self.graph
            .adj
            .iter()
            .zip(&self.weights)
            .enumerate()
            .flat_map(|(l, (rs, ws))| rs.iter().zip(ws).map(move |(&r, &w)| (l, r, w)))
    }

    /// Sum of weights of the pairs of `m`, which must all be edges.
    pub fn matching_weight(&self, m: &Matching) -> Cost {
        m.pairs()
            .iter()
            .map(|&(l, r)| self.weight(l, r).expect("pair is not an edge"))
            .sum()
    }
}

/// Lexicographic assignment cost: absent edges first, then forbidden edges,
/// then the finite weight. Minimizing it maximizes cardinality, then avoids
/// infinite edges, then minimizes the finite sum.
#[derive(Debug, Clone, Copy, Default)]
struct Tier {
    missing: i64,
    forbidden: i64,
    weight: f64,
}

impl Tier {
    const MISSING: Tier = Tier {
        missing: 1,
        forbidden: 0,
        weight: 0.0,
    };
    const UNBOUNDED: Tier = Tier {
        missing: i64::MAX / 4,
        forbidden: 0,
        weight: 0.0,
    };

    fn of(cost: Cost) -> Tier {
        match cost {
            Cost::Finite(weight) => Tier {
                missing: 0,
                forbidden: 0,
                weight,
            },
            Cost::Infinite => Tier {
                missing: 0,
                forbidden: 1,
                weight: 0.0,
            },
        }
    }
}

impl PartialEq for Tier {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Tier {}

impl PartialOrd for Tier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tier {
    fn cmp(&self, other: &Self) -> Ordering {
        self.missing
            .cmp(&other.missing)
            .then(self.forbidden.cmp(&other.forbidden))
            .then(self.weight.total_cmp(&other.weight))
    }
}

impl Add for Tier {
    type Output = Tier;
    fn add(self, o: Tier) -> Tier {
        Tier {
            missing: self.missing + o.missing,
            forbidden: self.forbidden + o.forbidden,
            weight: self.weight + o.weight,
        }
    }
}

impl Sub for Tier {
    type Output = Tier;
    fn sub(self, o: Tier) -> Tier {
        Tier {
            missing: self.missing - o.missing,
            forbidden: self.forbidden - o.forbidden,
            weight: self.weight - o.weight,
        }
    }
}

impl AddAssign for Tier {
    fn add_assign(&mut self, o: Tier) {
        *self = *self + o;
    }
}

impl SubAssign for Tier {
    fn sub_assign(&mut self, o: Tier) {
        *self = *self - o;
    }
}

/// Maximum matching of least total weight (Hungarian method with potentials).
///
/// Among all maximum-cardinality matchings, returns one that first uses the
/// fewest infinite-weight edges and then has the smallest finite weight sum.
/// The reported total is infinite iff an infinite edge could not be avoided.
/// Runs in `O(min(L, R)^2 * max(L, R))`.
pub fn min_weight_maximum_matching(wg: &WeightedBipartiteGraph) -> (Matching, Cost) {
    let g = wg.graph();
    let (n_left, n_right) = (g.n_left(), g.n_right());
    // Rows are the smaller side so every row can be assigned.
    let transposed = n_left > n_right;
    let (rows, cols) = if transposed {
        (n_right, n_left)
    } else {
        (n_left, n_right)
    };
    if rows == 0 {
        return (Matching::default(), Cost::ZERO);
    }

    let mut cost = vec![Tier::MISSING; rows * cols];
    for (l, r, w) in wg.edges() {
        let (i, j) = if transposed { (r, l) } else { (l, r) };
        cost[i * cols + j] = Tier::of(w);
    }

    // 1-based potentials; column 0 is the virtual start column.
    let mut u = vec![Tier::default(); rows + 1];
    let mut v = vec![Tier::default(); cols + 1];
    let mut row_of = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];
    let mut minv = vec![Tier::UNBOUNDED; cols + 1];
    let mut used = vec![false; cols + 1];

    for i in 1..=rows {
        row_of[0] = i;
        let mut j0 = 0;
        minv.fill(Tier::UNBOUNDED);
        used.fill(false);
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let base = (i0 - 1) * cols;
            let mut delta = Tier::UNBOUNDED;
            let mut j1 = 0;
            for j in 1..=cols {
                if used[j] {
                    continue;
                }
                let reduced = cost[base + j - 1] - u[i0] - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=cols {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut pairs = Vec::with_capacity(rows);
    for j in 1..=cols {
        let i = row_of[j];
        if i == 0 || cost[(i - 1) * cols + j - 1].missing != 0 {
            continue;
        }
        let (l, r) = if transposed {
            (j - 1, i - 1)
        } else {
            (i - 1, j - 1)
        };
        pairs.push((l, r));
    }
    pairs.sort_unstable();
    let m = Matching { pairs };
    let total = wg.matching_weight(&m);
    (m, total)
}
