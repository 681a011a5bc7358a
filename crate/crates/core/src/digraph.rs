//! State digraph of a structural dynamics matrix and its SCC decomposition.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

/// Directed graph on `n` state vertices.
///
/// An edge `(i, j)` means state `i` drives state `j`, i.e. the dynamics matrix
/// has a nonzero entry in row `j`, column `i`. Duplicate edges collapse;
/// self-loops are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateDigraph {
    successors: Vec<Vec<usize>>,
}

impl StateDigraph {
    /// An edgeless digraph on `n` states.
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::NoStates);
        }
        Ok(Self {
            successors: vec![Vec::new(); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (from, to) in edges {
            g.add_edge(from, to)?;
        }
        Ok(g)
    }

    /// Builds the digraph from a row-major 0/1 pattern, `pattern[j][i] != 0`
    /// giving the edge `i -> j`.
    pub fn from_pattern(pattern: &[Vec<bool>]) -> Result<Self, Error> {
        let n = pattern.len();
        let mut g = Self::new(n)?;
        for (row, entries) in pattern.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: entries.len(),
                });
            }
            for (col, &nonzero) in entries.iter().enumerate() {
                if nonzero {
                    g.add_edge(col, row)?;
                }
            }
        }
        Ok(g)
    }

    /// Adds `from -> to`; returns whether the edge was new.
    pub fn add_edge(&mut self, from: usize, to: usize) -> Result<bool, Error> {
        let n = self.n();
        for index in [from, to] {
            if index >= n {
                return Err(Error::VertexOutOfRange { index, size: n });
            }
        }
        let succ = &mut self.successors[from];
        match succ.binary_search(&to) {
            Ok(_) => Ok(false),
            Err(pos) => {
                succ.insert(pos, to);
                Ok(true)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.successors.len()
    }

    pub fn successors(&self, state: usize) -> &[usize] {
        &self.successors[state]
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.successors
            .get(from)
            .is_some_and(|s| s.binary_search(&to).is_ok())
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(i, succ)| succ.iter().map(move |&j| (i, j)))
    }

    /// Every edge reversed (the pattern of the transposed matrix).
    pub fn transpose(&self) -> Self {
        let mut successors = vec![Vec::new(); self.n()];
        for (i, j) in self.edges() {
            successors[j].push(i);
        }
        // edges() is ordered by source, so each list is already sorted
        Self { successors }
    }
}

/// Vertices reachable from `sources` by directed paths, sources included.
///
/// # Panics
///
/// Panics if a source is not a vertex of `g`.
pub fn reachable_from(g: &StateDigraph, sources: &[usize]) -> BTreeSet<usize> {
    let mut seen = vec![false; g.n()];
    let mut stack = Vec::new();
    for &s in sources {
        assert!(s < g.n(), "source {s} out of range for {} states", g.n());
        if !seen[s] {
            seen[s] = true;
            stack.push(s);
        }
    }
    while let Some(u) = stack.pop() {
        for &v in g.successors(u) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter()
        .enumerate()
        .filter_map(|(v, &hit)| hit.then_some(v))
        .collect()
}

/// Strongly connected components, condensation DAG and source components.
///
/// Components are numbered by their smallest vertex, so numbering is
/// reproducible across runs and platforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
    dag_edges: BTreeSet<(usize, usize)>,
    non_top_linked: Vec<usize>,
}

impl SccDecomposition {
    pub fn component_of(&self, state: usize) -> usize {
        self.component_of[state]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component(&self, id: usize) -> &[usize] {
        &self.components[id]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn dag_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.dag_edges
    }

    /// Components without incoming condensation edges, ascending.
    pub fn non_top_linked(&self) -> &[usize] {
        &self.non_top_linked
    }

    pub fn is_non_top_linked(&self, id: usize) -> bool {
        self.non_top_linked.binary_search(&id).is_ok()
    }

    /// Number of non-top-linked components.
    pub fn beta(&self) -> usize {
        self.non_top_linked.len()
    }
}

/// Tarjan's algorithm with an explicit stack; `O(n + |E|)`.
pub fn scc_decompose(g: &StateDigraph) -> SccDecomposition {
    const UNVISITED: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw_of = vec![UNVISITED; n];
    let mut raw_count = 0;
    let mut next_index = 0;
    // (vertex, position in its successor list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let succ = g.successors(v);
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
            if lowlink[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    raw_of[w] = raw_count;
                    if w == v {
                        break;
                    }
                }
                raw_count += 1;
            }
        }
    }

    // Renumber by smallest member: scanning vertices in order meets each
    // component first at its minimum.
    let mut renumber = vec![UNVISITED; raw_count];
    let mut components: Vec<Vec<usize>> = Vec::with_capacity(raw_count);
    let mut component_of = vec![0; n];
    for v in 0..n {
        let raw = raw_of[v];
        if renumber[raw] == UNVISITED {
            renumber[raw] = components.len();
            components.push(Vec::new());
        }
        component_of[v] = renumber[raw];
        components[renumber[raw]].push(v);
    }

    let mut dag_edges = BTreeSet::new();
    let mut has_incoming = vec![false; components.len()];
    for (u, v) in g.edges() {
        let (a, b) = (component_of[u], component_of[v]);
        if a != b {
            dag_edges.insert((a, b));
            has_incoming[b] = true;
        }
    }
    let non_top_linked = (0..components.len())
        .filter(|&c| !has_incoming[c])
        .collect();

    SccDecomposition {
        component_of,
        components,
        dag_edges,
        non_top_linked,
    }
}
