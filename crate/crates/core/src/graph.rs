//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` row whose set bits are its neighbours, so
//! neighbourhood intersections, degree counts and subset tests are single
//! word operations.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported graph order.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bits(mask: u64) -> Bits {
    Bits(mask)
}

/// A set of vertices stored as a 64-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All vertices `0..n`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    #[must_use]
    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0, |m, v| m | bit(v)))
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Degree sum over an independent triple, or `Infinite` when the graph has
/// no three pairwise non-adjacent vertices. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeSum {
    Finite(usize),
    Infinite,
}

/// Simple undirected graph with bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderOverflow(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from neighbour rows, validating symmetry and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidAdjacency(format!(
                    "row {v} references a vertex outside 0..{n}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidAdjacency(format!(
                        "edge {v}-{u} is not symmetric"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Caller guarantees the rows are valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), adj: rows }
    }

    /// The edgeless graph E_n.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = low_mask(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|v| all & !bit(v)).collect(),
        })
    }

    /// The path P_n on vertices 0-1-…-(n-1).
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The cycle C_n (n ≥ 3).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// δ(G); zero for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub(crate) fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Connected components ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(low_mask(self.n))
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    /// True when the graph has at most one component (the null graph counts
    /// as connected).
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, low_mask(self.n)) == low_mask(self.n)
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.mask() & !low_mask(self.n) != 0 {
            let vertex = (s.mask() & !low_mask(self.n)).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, order: self.n });
        }
        Ok(())
    }

    /// G[S], relabelled by order-preserving compaction.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        Ok(self.induced_mask(s.mask()))
    }

    pub(crate) fn induced_mask(&self, keep: u64) -> Graph {
        let kept: Vec<usize> = bits(keep).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in kept.iter().enumerate() {
            pos[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| bits(self.adj[v] & keep).fold(0u64, |row, u| row | bit(pos[u])))
            .collect();
        Graph { n: kept.len(), adj }
    }

    /// G − S, relabelled by order-preserving compaction.
    pub fn delete(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        Ok(self.induced_mask(low_mask(self.n) & !s.mask()))
    }

    /// G ∪ H with H's vertices shifted after G's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// G + H: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let left = low_mask(self.n);
        let right = low_mask(n) & !left;
        let mut adj = Vec::with_capacity(n);
        adj.extend(self.adj.iter().map(|&r| r | right));
        adj.extend(other.adj.iter().map(|&r| (r << self.n) | left));
        Ok(Graph { n, adj })
    }

    /// Disjoint union of `copies` copies of this graph.
    pub fn repeat(&self, copies: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..copies {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Graph { n: self.n, adj })
    }

    /// Copy of the graph with edge `uv` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Ok(Graph { n: self.n, adj })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for (v, &pv) in perm.iter().enumerate() {
            adj[pv] = bits(self.adj[v]).fold(0, |row, u| row | bit(perm[u]));
        }
        Ok(Graph { n: self.n, adj })
    }

    /// α(G), by branch and bound over vertex masks.
    pub fn independence_number(&self) -> usize {
        fn go(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            // Vertices with no candidate neighbour can always be taken.
            let mut free = 0;
            let mut pivot = usize::MAX;
            let mut pivot_deg = 0;
            for v in bits(cand) {
                let d = (adj[v] & cand).count_ones();
                if d == 0 {
                    free |= bit(v);
                } else if d > pivot_deg {
                    pivot_deg = d;
                    pivot = v;
                }
            }
            if free != 0 {
                go(adj, cand & !free, size + free.count_ones() as usize, best);
                return;
            }
            go(adj, cand & !bit(pivot) & !adj[pivot], size + 1, best);
            go(adj, cand & !bit(pivot), size, best);
        }
        let mut best = 0;
        go(&self.adj, low_mask(self.n), 0, &mut best);
        best
    }

    /// κ(G): the minimum number of vertices whose removal disconnects the
    /// graph, with κ(K_n) = n − 1.
    pub fn connectivity(&self) -> usize {
        let n = self.n;
        if n == 0 || !self.is_connected() {
            return 0;
        }
        // Some vertex among the first κ + 1 avoids a minimum separator, so
        // only pairs anchored there need a flow computation.
        let mut best = n - 1;
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    best = best.min(self.local_connectivity(i, j, best));
                }
            }
            i += 1;
        }
        best
    }

    /// Number of internally vertex-disjoint s–t paths for non-adjacent s, t,
    /// capped at `cap`.
    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // Vertex x splits into in(x) = 2x and out(x) = 2x + 1 joined by a
        // unit arc; each edge xy gives arcs out(x) -> in(y) and out(y) -> in(x).
        let n = self.n;
        let nodes = 2 * n;
        let mut flow = vec![0i8; nodes * nodes];
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut total = 0;
        while total < cap {
            let mut prev = vec![usize::MAX; nodes];
            prev[source] = source;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(a) = queue.pop_front() {
                if prev[sink] != usize::MAX {
                    break;
                }
                let x = a / 2;
                let mut next = Vec::with_capacity(n + 1);
                if a % 2 == 0 {
                    // in(x): forward to out(x), backward along used out(y) -> in(x).
                    if flow[a * nodes + a + 1] < 1 {
                        next.push(a + 1);
                    }
                    for y in bits(self.adj[x]) {
                        if flow[(2 * y + 1) * nodes + a] > 0 {
                            next.push(2 * y + 1);
                        }
                    }
                } else {
                    // out(x): forward to in(y), backward along used in(x) -> out(x).
                    for y in bits(self.adj[x]) {
                        if flow[a * nodes + 2 * y] < 1 {
                            next.push(2 * y);
                        }
                    }
                    if flow[(a - 1) * nodes + a] > 0 {
                        next.push(a - 1);
                    }
                }
                for b in next {
                    if prev[b] == usize::MAX {
                        prev[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut b = sink;
            while b != source {
                let a = prev[b];
                if flow[b * nodes + a] > 0 {
                    flow[b * nodes + a] -= 1;
                } else {
                    flow[a * nodes + b] += 1;
                }
                b = a;
            }
            total += 1;
        }
        total
    }

    /// σ₃(G): minimum degree sum over independent triples.
    pub fn sigma3(&self) -> DegreeSum {
        let n = self.n;
        let mut best = DegreeSum::Infinite;
        for x in 0..n {
            let after_x = !low_mask(x + 1) & low_mask(n) & !self.adj[x];
            for y in bits(after_x) {
                let after_y = after_x & !low_mask(y + 1) & !self.adj[y];
                for z in bits(after_y) {
                    let sum = self.degree(x) + self.degree(y) + self.degree(z);
                    best = best.min(DegreeSum::Finite(sum));
                }
            }
        }
        best
    }

    /// Graphviz DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}
