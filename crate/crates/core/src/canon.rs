//! Canonical labeling by equitable partition refinement and a pruned search
//! tree over individualizations.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::{bit, bits, low_mask, Graph};
use crate::graph6::encode_rows;

/// Isomorphism certificate: the graph6 bytes of the canonically relabeled
/// graph. Two graphs get equal forms exactly when they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // graph6 output is printable ASCII.
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        Graph::from_graph6(self.as_str()).expect("certificate decodes")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of canonical labeling: where each vertex goes, the relabeled
/// graph, and generators of the automorphism group found along the way.
#[derive(Clone, Debug)]
pub struct Labeling {
    position: Vec<usize>,
    rows: Vec<u64>,
    generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// Canonical position of every vertex.
    pub fn permutation(&self) -> &[usize] {
        &self.position
    }

    pub fn canonical_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    pub fn form(&self) -> CanonicalForm {
        CanonicalForm(encode_rows(&self.rows))
    }

    pub(crate) fn canonical_rows(&self) -> &[u64] {
        &self.rows
    }

    /// Automorphisms discovered by the search, each as a vertex map. They
    /// generate a subgroup of the automorphism group (in practice all of it).
    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// The smallest vertex in each vertex's automorphism orbit.
    pub fn vertex_orbits(&self) -> Vec<usize> {
        orbits(self.position.len(), self.generators.iter())
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            position: Vec::new(),
            rows: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut search = Search {
        adj: g.rows(),
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![low_mask(n)];
    refine(search.adj, n, &mut cells, VecDeque::from([low_mask(n)]));
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("search reaches a leaf");
    Labeling {
        position: best.position,
        rows: best.rows,
        generators: search.generators,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(parent, a), find(parent, b));
    if a != b {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        parent[hi] = lo;
    }
}

/// Orbit representatives (smallest member) under the group generated by
/// `gens`.
pub(crate) fn orbits<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            union(&mut parent, v, w);
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Orbit representatives for unordered pairs `(i, j)` with `i < j`, indexed
/// by `j * (j - 1) / 2 + i`.
pub(crate) fn pair_orbits(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let idx = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        j * (j - 1) / 2 + i
    };
    let total = n * n.saturating_sub(1) / 2;
    let mut parent: Vec<usize> = (0..total).collect();
    for g in gens {
        for j in 1..n {
            for i in 0..j {
                union(&mut parent, idx(i, j), idx(g[i], g[j]));
            }
        }
    }
    (0..total).map(|p| find(&mut parent, p)).collect()
}

/// Refines `cells` to the coarsest equitable partition finer than it,
/// splitting against the queued cells first.
fn refine(adj: &[u64], n: usize, cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
    let mut buckets = [0u64; 65];
    while let Some(splitter) = queue.pop_front() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            let mut present: u128 = 0;
            for v in bits(cell) {
                let c = (adj[v] & splitter).count_ones() as usize;
                if present & (1u128 << c) == 0 {
                    present |= 1u128 << c;
                    buckets[c] = 0;
                }
                buckets[c] |= bit(v);
            }
            if present & (present - 1) == 0 {
                i += 1;
                continue;
            }
            let mut pieces = Vec::with_capacity(present.count_ones() as usize);
            while present != 0 {
                let c = present.trailing_zeros() as usize;
                present &= present - 1;
                pieces.push(buckets[c]);
            }
            let len = pieces.len();
            queue.extend(pieces.iter().copied());
            cells.splice(i..=i, pieces);
            i += len;
        }
    }
}

struct Leaf {
    sequence: Vec<usize>,
    position: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Explores the subtree below `cells`. Returns the level to jump back
    /// to when the rest of this subtree is known to be redundant.
    fn descend(&mut self, cells: Vec<u64>, sequence: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, sequence);
        }
        let t = cells.iter().position(|&c| c & (c - 1) != 0).expect("non-discrete");
        let target = cells[t];
        let mut tried = 0u64;
        for w in bits(target) {
            if tried != 0 && self.equivalent_to_tried(sequence, w, tried) {
                continue;
            }
            tried |= bit(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(w));
            child.push(target & !bit(w));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.adj, self.n, &mut child, VecDeque::from([bit(w)]));
            sequence.push(w);
            let jump = self.descend(child, sequence);
            sequence.pop();
            if let Some(level) = jump {
                if level < sequence.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_tried(&self, sequence: &[usize], w: usize, tried: u64) -> bool {
        let fixing = self
            .generators
            .iter()
            .filter(|g| sequence.iter().all(|&v| g[v] == v));
        let reps = orbits(self.n, fixing);
        bits(tried).any(|u| reps[u] == reps[w])
    }

    fn leaf(&mut self, cells: &[u64], sequence: &[usize]) -> Option<usize> {
        let mut position = vec![0; self.n];
        for (i, &c) in cells.iter().enumerate() {
            position[c.trailing_zeros() as usize] = i;
        }
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[position[v]] = bits(self.adj[v]).fold(0, |acc, u| acc | bit(position[u]));
        }
        let leaf = Leaf {
            sequence: sequence.to_vec(),
            position,
            rows,
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                sequence: leaf.sequence.clone(),
                position: leaf.position.clone(),
                rows: leaf.rows.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let level = common_prefix(&leaf.sequence, &first.sequence);
            let gen = automorphism(&first.position, &leaf.position);
            self.generators.push(gen);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        if leaf.rows == best.rows {
            let level = common_prefix(&leaf.sequence, &best.sequence);
            let gen = automorphism(&best.position, &leaf.position);
            self.generators.push(gen);
            return Some(level);
        }
        if leaf.rows > best.rows {
            self.best = Some(leaf);
        }
        None
    }
}

/// Given two labelings producing the same relabeled graph, the vertex map
/// sending each vertex under `b` to the vertex with the same position under
/// `a`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut inverse_a = vec![0; a.len()];
    for (v, &p) in a.iter().enumerate() {
        inverse_a[p] = v;
    }
    b.iter().map(|&p| inverse_a[p]).collect()
}
