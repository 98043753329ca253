//! Longest paths, Hamiltonian paths, strong dominating paths and the
//! vertex-disjoint path (linear forest) containment decider.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::{bit, bits, low_mask, Graph};

/// Largest order accepted by the longest-path subset DP.
pub const LONGEST_PATH_LIMIT: usize = 24;
/// Largest order accepted by the strong-dominating-path search.
pub const DOMINATING_PATH_LIMIT: usize = 20;
/// Components up to this order get an exact longest-path cap during
/// containment search.
const CAP_DP_LIMIT: usize = 12;

fn guard(g: &Graph, operation: &'static str, limit: usize) -> Result<()> {
    if g.order() > limit {
        Err(Error::SizeGuard {
            operation,
            limit,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}

/// `reach[S]` is the set of local endpoints `v` such that some path visits
/// exactly the local vertex set `S` and ends at `v`.
fn path_reach(adj: &[u64], verts: &[usize]) -> Vec<u32> {
    let c = verts.len();
    let local: Vec<u32> = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &u)| adj[v] & bit(u) != 0)
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let mut reach = vec![0u32; 1 << c];
    for j in 0..c {
        reach[1 << j] = 1 << j;
    }
    for s in 1..reach.len() {
        let ends = reach[s];
        if ends == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = local[v] & !(s as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[s | 1 << u] |= 1 << u;
            }
        }
    }
    reach
}

/// Order of a longest path inside the vertex set `comp`.
fn longest_within(adj: &[u64], comp: u64) -> usize {
    let verts: Vec<usize> = bits(comp).collect();
    if verts.len() <= 2 {
        return verts.len();
    }
    if bits(comp).all(|v| adj[v] & comp == comp & !bit(v)) {
        return verts.len();
    }
    let reach = path_reach(adj, &verts);
    reach
        .iter()
        .enumerate()
        .filter(|(_, &r)| r != 0)
        .map(|(s, _)| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// p(G): the order of a longest path.
pub fn longest_path_order(g: &Graph) -> Result<usize> {
    guard(g, "longest_path_order", LONGEST_PATH_LIMIT)?;
    Ok(g
        .components_within(low_mask(g.order()))
        .into_iter()
        .map(|c| longest_within(g.rows(), c))
        .max()
        .unwrap_or(0))
}

pub fn has_hamiltonian_path(g: &Graph) -> Result<bool> {
    Ok(longest_path_order(g)? == g.order())
}

/// A path P such that every vertex off P has all its neighbors on P, i.e.
/// the vertices off P form an independent set. Searches vertex sets in
/// increasing bitmask order and returns the first hit.
pub fn strong_dominating_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    guard(g, "strong_dominating_path", DOMINATING_PATH_LIMIT)?;
    let n = g.order();
    let adj = g.rows();
    let verts: Vec<usize> = (0..n).collect();
    let reach = path_reach(adj, &verts);
    let all = low_mask(n);
    for (s, &ends) in reach.iter().enumerate() {
        if ends == 0 {
            continue;
        }
        let outside = all & !(s as u64);
        if bits(outside).all(|v| adj[v] & outside == 0) {
            // Walk back through the DP table.
            let mut path = Vec::new();
            let mut set = s as u64;
            let mut v = ends.trailing_zeros() as usize;
            loop {
                path.push(v);
                set &= !bit(v);
                if set == 0 {
                    break;
                }
                let prev = (reach[set as usize] as u64) & adj[v];
                v = prev.trailing_zeros() as usize;
            }
            path.reverse();
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Vertex-disjoint paths embedding a linear forest, one sequence per path
/// order in the forest's (descending) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestWitness {
    pub paths: Vec<Vec<usize>>,
}

impl ForestWitness {
    /// Re-checks orders, adjacency along each path and disjointness.
    pub fn validate(&self, g: &Graph, orders: &[usize]) -> bool {
        if self.paths.len() != orders.len() {
            return false;
        }
        let mut used = 0u64;
        for (path, &len) in self.paths.iter().zip(orders) {
            if path.len() != len {
                return false;
            }
            for &v in path {
                if v >= g.order() || used & bit(v) != 0 {
                    return false;
                }
                used |= bit(v);
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        true
    }
}

/// Some witness when `g` contains `f` as a (not necessarily induced)
/// subgraph.
pub fn contains_linear_forest(g: &Graph, f: &LinearForest) -> Option<ForestWitness> {
    find_disjoint_paths(g, f.orders()).map(|paths| ForestWitness { paths })
}

/// Vertex-disjoint paths of the given orders (each at least 1), returned in
/// the order requested.
pub fn find_disjoint_paths(g: &Graph, orders: &[usize]) -> Option<Vec<Vec<usize>>> {
    let total: usize = orders.iter().sum();
    if total > g.order() {
        return None;
    }
    if orders.is_empty() {
        return Some(Vec::new());
    }
    let mut sorted: Vec<(usize, usize)> = orders.iter().copied().enumerate().map(|(i, l)| (l, i)).collect();
    sorted.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let want: Vec<usize> = sorted.iter().map(|p| p.0).collect();
    let found = match host_paths(g) {
        Some(host) => pack_into_paths(&host, &want),
        None => {
            let mut search = Embed {
                adj: g.rows(),
                orders: &want,
                paths: Vec::with_capacity(want.len()),
                used: 0,
                all: low_mask(g.order()),
            };
            search.place(0).then_some(search.paths)
        }
    }?;
    let mut out = vec![Vec::new(); orders.len()];
    for (path, &(_, i)) in found.into_iter().zip(&sorted) {
        out[i] = path;
    }
    Some(out)
}

/// The vertex sequences of the components when every component is a path.
fn host_paths(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.max_degree() > 2 {
        return None;
    }
    let adj = g.rows();
    let mut out = Vec::new();
    for comp in g.components_within(low_mask(g.order())) {
        let size = comp.count_ones() as usize;
        let edges: usize = bits(comp).map(|v| adj[v].count_ones() as usize).sum::<usize>() / 2;
        if edges + 1 != size {
            return None;
        }
        let start = bits(comp).find(|&v| adj[v].count_ones() <= 1)?;
        let mut seq = vec![start];
        let mut prev_mask = bit(start);
        let mut v = start;
        while let Some(u) = bits(adj[v] & !prev_mask).next() {
            seq.push(u);
            prev_mask |= bit(u);
            v = u;
        }
        out.push(seq);
    }
    Some(out)
}

/// Assigns each wanted order to some host path with room left, exactly.
fn bin_pack(capacity: &mut [usize], want: &[usize], assign: &mut Vec<usize>) -> bool {
    let Some(&len) = want.get(assign.len()) else {
        return true;
    };
    for b in 0..capacity.len() {
        if capacity[b] < len || capacity[..b].contains(&capacity[b]) {
            continue;
        }
        capacity[b] -= len;
        assign.push(b);
        if bin_pack(capacity, want, assign) {
            return true;
        }
        assign.pop();
        capacity[b] += len;
    }
    false
}

/// Containment when the host is a disjoint union of paths: a path of order
/// m holds disjoint paths of orders a₁..a_j exactly when Σaᵢ ≤ m.
fn pack_into_paths(host: &[Vec<usize>], want: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut capacity: Vec<usize> = host.iter().map(Vec::len).collect();
    let mut assign = Vec::new();
    if !bin_pack(&mut capacity, want, &mut assign) {
        return None;
    }
    let mut cursor = vec![0; host.len()];
    Some(
        want.iter()
            .zip(&assign)
            .map(|(&len, &b)| {
                let seg = host[b][cursor[b]..cursor[b] + len].to_vec();
                cursor[b] += len;
                seg
            })
            .collect(),
    )
}

/// Containment of disjoint paths of the given orders in a disjoint union of
/// paths of the given orders.
pub fn path_union_contains(host: &[usize], want: &[usize]) -> bool {
    let mut capacity = host.to_vec();
    let mut want = want.to_vec();
    want.sort_unstable_by(|a, b| b.cmp(a));
    bin_pack(&mut capacity, &want, &mut Vec::new())
}

struct Embed<'a> {
    adj: &'a [u64],
    orders: &'a [usize],
    paths: Vec<Vec<usize>>,
    used: u64,
    all: u64,
}

impl Embed<'_> {
    fn twins(&self, u: usize, w: usize) -> bool {
        self.adj[u] & !bit(w) == self.adj[w] & !bit(u)
    }

    /// Picks candidates from `options`, skipping twins of vertices already
    /// tried (swapping two free twins maps solutions to solutions).
    fn candidates(&self, options: u64) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for w in bits(options) {
            if !out.iter().any(|&u| self.twins(u, w)) {
                out.push(w);
            }
        }
        out
    }

    /// Can the remaining orders be packed into the components of the free
    /// subgraph, each component holding at most its size in total and
    /// nothing longer than its longest path?
    fn packable(&self, rest: &[usize]) -> bool {
        let free = self.all & !self.used;
        let need: usize = rest.iter().sum();
        if need > free.count_ones() as usize {
            return false;
        }
        let mut bins: Vec<(usize, usize)> = Vec::new();
        let mut rest_comp = free;
        while rest_comp != 0 {
            let v = rest_comp.trailing_zeros() as usize;
            let comp = reach(self.adj, v, rest_comp);
            rest_comp &= !comp;
            let size = comp.count_ones() as usize;
            if size < rest[rest.len() - 1] {
                continue;
            }
            let cap = if size <= CAP_DP_LIMIT {
                longest_within(self.adj, comp)
            } else {
                size
            };
            bins.push((size, cap));
        }
        fn go(bins: &mut [(usize, usize)], rest: &[usize]) -> bool {
            let Some((&len, tail)) = rest.split_first() else {
                return true;
            };
            for b in 0..bins.len() {
                let (room, cap) = bins[b];
                if room < len || cap < len || bins[..b].contains(&bins[b]) {
                    continue;
                }
                bins[b].0 -= len;
                let ok = go(bins, tail);
                bins[b].0 += len;
                if ok {
                    return true;
                }
            }
            false
        }
        go(&mut bins, rest)
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.orders.len() {
            return true;
        }
        if !self.packable(&self.orders[i..]) {
            return false;
        }
        let free = self.all & !self.used;
        for start in self.candidates(free) {
            self.used |= bit(start);
            self.paths.push(vec![start]);
            if self.extend(i, start, self.orders[i] - 1) {
                return true;
            }
            self.paths.pop();
            self.used &= !bit(start);
        }
        false
    }

    fn extend(&mut self, i: usize, end: usize, need: usize) -> bool {
        if need == 0 {
            return self.place(i + 1);
        }
        let free = self.all & !self.used;
        let around = reach(self.adj, end, free | bit(end));
        if (around.count_ones() as usize) - 1 < need {
            return false;
        }
        for w in self.candidates(self.adj[end] & free) {
            self.used |= bit(w);
            self.paths[i].push(w);
            if self.extend(i, w, need - 1) {
                return true;
            }
            self.paths[i].pop();
            self.used &= !bit(w);
        }
        false
    }
}

fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = bit(start) & within;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}
