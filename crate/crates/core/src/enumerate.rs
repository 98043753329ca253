//! Isomorph-free generation of graphs on a fixed vertex count by canonical
//! edge augmentation, with F-free and edge-count pruning.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::canon::{canonical_labeling, pair_orbits, CanonicalForm, Labeling};
use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::{bit, low_mask, Graph, MAX_ORDER};
use crate::paths::find_disjoint_paths;

/// Largest order for which exhaustive enumeration runs without F-pruning
/// and a budget.
pub const UNFILTERED_LIMIT: usize = 10;
/// Edges added before the tree is split into parallel shards.
const SHARD_DEPTH: usize = 5;

/// Conjunctive filters. `f_free` and `max_edges` prune the search tree;
/// `connected` and `min_degree` only select what is reported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub connected: Option<bool>,
    pub min_degree: Option<usize>,
    pub f_free: Option<LinearForest>,
    pub max_edges: Option<usize>,
}

impl EnumFilter {
    pub fn f_free(forest: LinearForest) -> Self {
        EnumFilter {
            f_free: Some(forest),
            ..EnumFilter::default()
        }
    }

    fn reports(&self, g: &Graph) -> bool {
        self.connected.is_none_or(|c| g.is_connected() == c)
            && self.min_degree.is_none_or(|d| g.min_degree() >= d)
    }

    fn prunes(&self, g: &Graph) -> bool {
        self.max_edges.is_some_and(|m| g.edge_count() > m)
            || self
                .f_free
                .as_ref()
                .is_some_and(|f| find_disjoint_paths(g, f.orders()).is_some())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    /// Cap on search-tree nodes; exceeding it is an error, never a partial
    /// answer.
    pub budget: Option<u64>,
    /// Report only graphs to which no edge can be added without being
    /// pruned.
    pub edge_maximal_only: bool,
}

/// One isomorphism class: its canonical representative and certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumerated {
    pub graph: Graph,
    pub form: CanonicalForm,
    /// No single added edge keeps the graph inside the pruning filters.
    pub edge_maximal: bool,
}

/// One representative per isomorphism class of graphs on `n` vertices
/// passing `filter`, as canonical graphs ordered by certificate.
pub fn enumerate_graphs(n: usize, filter: &EnumFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_with(n, filter, &EnumOptions::default())?
        .into_iter()
        .map(|e| e.graph)
        .collect())
}

pub fn enumerate_with(n: usize, filter: &EnumFilter, options: &EnumOptions) -> Result<Vec<Enumerated>> {
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow(n));
    }
    if n > UNFILTERED_LIMIT && (filter.f_free.is_none() || options.budget.is_none()) {
        return Err(Error::InvalidParameter(format!(
            "enumeration beyond {UNFILTERED_LIMIT} vertices needs an f_free filter and a budget"
        )));
    }
    let run = Run {
        filter,
        options,
        visited: AtomicU64::new(0),
        exceeded: AtomicBool::new(false),
    };
    let empty = Graph::empty(n)?;
    let root = Node {
        lab: canonical_labeling(&empty),
        graph: empty,
    };
    let mut out = Vec::new();
    if filter.prunes(&root.graph) {
        return Ok(out);
    }
    let mut frontier = vec![root];
    for _ in 0..SHARD_DEPTH {
        let mut next = Vec::new();
        for node in frontier {
            if !run.enter()? {
                return Err(run.error());
            }
            let children = run.children(&node);
            run.report(&node, children.is_empty(), &mut out);
            next.extend(children);
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    let shards: Vec<Vec<Enumerated>> = frontier
        .into_par_iter()
        .map(|node| {
            let mut found = Vec::new();
            run.dfs(node, &mut found);
            found
        })
        .collect();
    if run.exceeded.load(Ordering::Relaxed) {
        return Err(run.error());
    }
    out.extend(shards.into_iter().flatten());
    out.sort_by(|a, b| a.form.cmp(&b.form));
    Ok(out)
}

struct Node {
    graph: Graph,
    lab: Labeling,
}

struct Run<'a> {
    filter: &'a EnumFilter,
    options: &'a EnumOptions,
    visited: AtomicU64,
    exceeded: AtomicBool,
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

impl Run<'_> {
    fn error(&self) -> Error {
        Error::BudgetExceeded {
            budget: self.options.budget.unwrap_or(u64::MAX),
        }
    }

    /// Counts a node against the budget; false once the budget is spent.
    fn enter(&self) -> Result<bool> {
        if self.exceeded.load(Ordering::Relaxed) {
            return Ok(false);
        }
        let count = self.visited.fetch_add(1, Ordering::Relaxed) + 1;
        if self.options.budget.is_some_and(|b| count > b) {
            self.exceeded.store(true, Ordering::Relaxed);
            return Ok(false);
        }
        Ok(true)
    }

    fn report(&self, node: &Node, maximal: bool, out: &mut Vec<Enumerated>) {
        if self.options.edge_maximal_only && !maximal {
            return;
        }
        if self.filter.reports(&node.graph) {
            out.push(Enumerated {
                graph: node.lab.canonical_graph(),
                form: node.lab.form(),
                edge_maximal: maximal,
            });
        }
    }

    fn dfs(&self, node: Node, out: &mut Vec<Enumerated>) {
        if !matches!(self.enter(), Ok(true)) {
            return;
        }
        let children = self.children(&node);
        self.report(&node, children.is_empty(), out);
        for child in children {
            self.dfs(child, out);
        }
    }

    /// Accepted children of `node`, one per isomorphism class. Empty means
    /// no edge can be added without hitting a pruning filter.
    fn children(&self, node: &Node) -> Vec<Node> {
        let g = &node.graph;
        let n = g.order();
        if n < 2 {
            return Vec::new();
        }
        let orbit = pair_orbits(n, node.lab.generators());
        let parent_form = node.lab.form();
        let parent_degrees = sorted_degrees(g);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for j in 1..n {
            for i in 0..j {
                let idx = pair_index(i, j);
                if g.rows()[i] & bit(j) != 0 || orbit[idx] != idx {
                    continue;
                }
                let h = g.with_edge(i, j).expect("in range");
                if self.filter.prunes(&h) {
                    continue;
                }
                let lab = canonical_labeling(&h);
                if !accepts(&h, &lab, (i, j), &parent_form, &parent_degrees) {
                    continue;
                }
                if seen.insert(lab.form()) {
                    out.push(Node { graph: h, lab });
                }
            }
        }
        out
    }
}

/// The last edge of the canonical relabeling, mapped back to `h`'s labels.
fn last_canonical_edge(lab: &Labeling) -> (usize, usize) {
    let rows = lab.canonical_rows();
    let j = (1..rows.len()).rev().find(|&j| rows[j] & low_mask(j) != 0).expect("has an edge");
    let i = 63 - (rows[j] & low_mask(j)).leading_zeros() as usize;
    let pos = lab.permutation();
    let at = |p: usize| pos.iter().position(|&q| q == p).expect("bijection");
    let (a, b) = (at(i), at(j));
    (a.min(b), a.max(b))
}

/// `h = parent + e` is kept when deleting its canonical last edge gives
/// back the parent's isomorphism class.
fn accepts(h: &Graph, lab: &Labeling, e: (usize, usize), parent_form: &CanonicalForm, parent_degrees: &[usize]) -> bool {
    let m = last_canonical_edge(lab);
    if m == e {
        return true;
    }
    let reduced = h.without_edge(m.0, m.1).expect("edge present");
    if sorted_degrees(&reduced) != parent_degrees {
        return false;
    }
    let orbit = pair_orbits(h.order(), lab.generators());
    if orbit[pair_index(e.0, e.1)] == orbit[pair_index(m.0, m.1)] {
        return true;
    }
    canonical_labeling(&reduced).form() == *parent_form
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0..1u64 << pairs.len())
            .map(|m| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &e)| e).collect();
                Graph::from_edges(n, &edges).unwrap()
            })
            .collect()
    }

    fn oracle_forms(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeSet<CanonicalForm> {
        all_labeled(n).iter().filter(|g| keep(g)).map(canonical_form).collect()
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..7).map(|n| enumerate_graphs(n, &EnumFilter::default()).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn stream_matches_dedup_oracle() {
        for n in 0..6 {
            let ours: Vec<CanonicalForm> = enumerate_with(n, &EnumFilter::default(), &EnumOptions::default())
                .unwrap()
                .into_iter()
                .map(|e| e.form)
                .collect();
            let sorted: Vec<_> = oracle_forms(n, |_| true).into_iter().collect();
            assert_eq!(ours, sorted);
        }
    }

    #[test]
    fn filters_match_filtered_oracle() {
        let forest = LinearForest::parse("2+2").unwrap();
        let filter = EnumFilter {
            connected: Some(true),
            min_degree: Some(1),
            f_free: Some(forest.clone()),
            max_edges: None,
        };
        let ours: BTreeSet<_> = enumerate_graphs(6, &filter).unwrap().iter().map(canonical_form).collect();
        let all = enumerate_graphs(6, &EnumFilter::default()).unwrap();
        let want: BTreeSet<_> = all
            .iter()
            .filter(|g| g.is_connected() && g.min_degree() >= 1 && find_disjoint_paths(g, forest.orders()).is_none())
            .map(canonical_form)
            .collect();
        assert_eq!(ours, want);
        // connected 2P_2-free graphs on 6 vertices: K_{1,5}, K_3 with pendants at one vertex, ...
        assert!(!ours.is_empty());

        let sparse = EnumFilter { max_edges: Some(3), ..EnumFilter::default() };
        let ours = enumerate_graphs(6, &sparse).unwrap();
        assert_eq!(ours.len(), all.iter().filter(|g| g.edge_count() <= 3).count());
    }

    #[test]
    fn edge_maximal_flags() {
        let forest = LinearForest::parse("2+2").unwrap();
        let found = enumerate_with(5, &EnumFilter::f_free(forest.clone()), &EnumOptions::default()).unwrap();
        for e in &found {
            let g = &e.graph;
            let extendable = g.edges().count() < 10
                && (1..5).any(|j| {
                    (0..j).any(|i| {
                        !g.has_edge(i, j) && find_disjoint_paths(&g.with_edge(i, j).unwrap(), forest.orders()).is_none()
                    })
                });
            assert_eq!(e.edge_maximal, !extendable, "{}", e.form);
        }
        let maximal = enumerate_with(5, &EnumFilter::f_free(forest), &EnumOptions { edge_maximal_only: true, budget: None }).unwrap();
        assert_eq!(maximal.len(), found.iter().filter(|e| e.edge_maximal).count());
    }

    #[test]
    fn pruned_branches_stay_infected() {
        // Every graph containing F has only F-containing supergraphs, so
        // the F-free stream equals the filtered full stream.
        for forest in ["2+2", "4", "3+2"] {
            let forest = LinearForest::parse(forest).unwrap();
            let pruned: Vec<_> = enumerate_graphs(6, &EnumFilter::f_free(forest.clone())).unwrap();
            let filtered: Vec<_> = enumerate_graphs(6, &EnumFilter::default())
                .unwrap()
                .into_iter()
                .filter(|g| find_disjoint_paths(g, forest.orders()).is_none())
                .collect();
            assert_eq!(pruned, filtered);
        }
    }

    #[test]
    fn budget_and_limits() {
        let tight = EnumOptions { budget: Some(10), edge_maximal_only: false };
        assert!(matches!(
            enumerate_with(6, &EnumFilter::default(), &tight),
            Err(Error::BudgetExceeded { budget: 10 })
        ));
        let exact = enumerate_with(4, &EnumFilter::default(), &EnumOptions::default()).unwrap().len() as u64;
        assert!(enumerate_with(4, &EnumFilter::default(), &EnumOptions { budget: Some(exact), edge_maximal_only: false }).is_ok());
        assert!(enumerate_graphs(11, &EnumFilter::default()).is_err());
        let forest = LinearForest::parse("2+2").unwrap();
        let big = enumerate_with(12, &EnumFilter::f_free(forest), &EnumOptions { budget: Some(100_000), edge_maximal_only: false }).unwrap();
        // Edgeless, a star K_{1,k} for k = 1..11, or a triangle; plus isolated vertices.
        assert_eq!(big.len(), 13);
    }
}
