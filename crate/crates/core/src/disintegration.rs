//! Peeling vertices of degree below δ_F down to the δ_F-core, with exact
//! accounting of the K_s copies destroyed at each step.

use serde::{Serialize, Serializer};

use crate::cliques::{binomial_small, count_within};
use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::{bit, bits, low_mask, Graph};

/// One deletion: the vertex (original label), its degree when deleted and
/// the number of K_s through it at that moment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub vertex: usize,
    pub degree: usize,
    pub loss: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    Lowest,
    Highest,
}

fn as_graph6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_graph6())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisintegrationTrace {
    pub s: usize,
    /// Vertices of degree below this are deleted (δ_F).
    pub threshold: usize,
    pub initial_order: usize,
    pub initial_count: u64,
    pub steps: Vec<Step>,
    /// Original labels of the surviving vertices, ascending.
    pub core_vertices: Vec<usize>,
    pub core_count: u64,
    #[serde(serialize_with = "as_graph6")]
    pub core: Graph,
}

impl DisintegrationTrace {
    /// m, the order of the core.
    pub fn core_order(&self) -> usize {
        self.core.order()
    }
}

/// The (δ_F − 1)-disintegration of `g`, always deleting the lowest-labeled
/// vertex of current degree below δ_F.
pub fn disintegrate(g: &Graph, f: &LinearForest, s: usize) -> Result<DisintegrationTrace> {
    disintegrate_below(g, f.delta(), s, TieBreak::Lowest)
}

/// Repeatedly deletes a vertex of current degree below `threshold`.
pub fn disintegrate_below(g: &Graph, threshold: usize, s: usize, tie: TieBreak) -> Result<DisintegrationTrace> {
    if s == 0 {
        return Err(Error::InvalidParameter("clique order s must be at least 1".into()));
    }
    let adj = g.rows();
    let n = g.order();
    let mut alive = low_mask(n);
    let initial_count = count_within(adj, alive, s);
    let mut steps = Vec::new();
    loop {
        let low = |v: &usize| ((adj[*v] & alive).count_ones() as usize) < threshold;
        let pick = match tie {
            TieBreak::Lowest => bits(alive).find(low),
            TieBreak::Highest => bits(alive).filter(low).last(),
        };
        let Some(v) = pick else { break };
        let nbhd = adj[v] & alive;
        steps.push(Step {
            vertex: v,
            degree: nbhd.count_ones() as usize,
            loss: count_within(adj, nbhd, s - 1),
        });
        alive &= !bit(v);
    }
    Ok(DisintegrationTrace {
        s,
        threshold,
        initial_order: n,
        initial_count,
        steps,
        core_vertices: bits(alive).collect(),
        core_count: count_within(adj, alive, s),
        core: g.induced_mask(alive),
    })
}

fn binomial_or_zero(a: isize, b: usize) -> u64 {
    if a < 0 {
        0
    } else {
        binomial_small(a as usize, b)
    }
}

/// Checks every per-step loss against C(degree, s−1) ≤ C(δ_F − 1, s − 1),
/// the telescoped bound 𝒩_s(G) ≤ 𝒩_s(core) + (n − m)·C(δ_F − 1, s − 1) and
/// the exact telescoping identity.
pub fn verify_step_bound(trace: &DisintegrationTrace, f: &LinearForest, s: usize) -> bool {
    let d = f.delta();
    if trace.s != s || trace.threshold != d || s == 0 {
        return false;
    }
    let cap = binomial_or_zero(d as isize - 1, s - 1);
    for step in &trace.steps {
        if step.degree >= d {
            return false;
        }
        let local = binomial_small(step.degree, s - 1);
        if step.loss > local || local > cap {
            return false;
        }
    }
    let deleted = (trace.initial_order - trace.core_order()) as u128;
    if trace.steps.len() as u128 != deleted {
        return false;
    }
    if trace.initial_count as u128 > trace.core_count as u128 + deleted * cap as u128 {
        return false;
    }
    let total: u128 = trace.steps.iter().map(|st| st.loss as u128).sum();
    trace.core_count <= trace.initial_count && (trace.initial_count - trace.core_count) as u128 == total
}
