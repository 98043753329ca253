//! Exact ex(n, K_s, F) by exhaustive search over edge-maximal F-free
//! graphs, and reconciliation against the closed-form values.

use num_bigint::BigUint;
use serde::Serialize;

use crate::cliques::{count_cliques, theorem_value, threshold_n};
use crate::enumerate::{enumerate_with, EnumFilter, EnumOptions};
use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub forest: LinearForest,
    pub n: usize,
    pub s: usize,
    #[serde(with = "crate::serde_big")]
    pub value: BigUint,
    /// graph6 of every edge-maximal maximizer, one per isomorphism class.
    pub extremal_graphs: Vec<String>,
    /// ex(n, K_s, P_{ℓ₁}) as fed into the theorem value.
    #[serde(with = "crate::serde_big::option")]
    pub path_value: Option<BigUint>,
    #[serde(with = "crate::serde_big::option")]
    pub formula_value: Option<BigUint>,
    #[serde(with = "crate::serde_big::option")]
    pub threshold: Option<BigUint>,
    /// Set only when n reaches the threshold.
    pub agrees: Option<bool>,
}

impl ExtremalRecord {
    pub fn below_threshold(&self) -> bool {
        match &self.threshold {
            Some(t) => BigUint::from(self.n) < *t,
            None => true,
        }
    }

    /// Short status used in tables.
    pub fn status(&self) -> &'static str {
        match self.agrees {
            Some(true) => "agrees",
            Some(false) => "DISAGREES",
            None if self.formula_value.is_none() => "no formula",
            None => "below threshold",
        }
    }
}

/// Maximizers of 𝒩_s among edge-maximal graphs of the stream; adding edges
/// never loses a clique, so the maximum is attained there.
fn search(n: usize, s: usize, forest: &LinearForest, budget: Option<u64>) -> Result<(BigUint, Vec<Graph>)> {
    if s == 0 {
        return Err(Error::InvalidParameter("clique order s must be at least 1".into()));
    }
    let found = enumerate_with(
        n,
        &EnumFilter::f_free(forest.clone()),
        &EnumOptions {
            budget,
            edge_maximal_only: true,
        },
    )?;
    let counts: Vec<BigUint> = found.iter().map(|e| count_cliques(&e.graph, s)).collect();
    let best = counts.iter().max().cloned().unwrap_or_default();
    let graphs = found
        .into_iter()
        .zip(&counts)
        .filter(|(_, c)| **c == best)
        .map(|(e, _)| e.graph)
        .collect();
    Ok((best, graphs))
}

/// ex(n, K_s, F) with all edge-maximal extremal graphs.
pub fn brute_force_ex(n: usize, s: usize, forest: &LinearForest, budget: Option<u64>) -> Result<ExtremalRecord> {
    let (value, graphs) = search(n, s, forest, budget)?;
    Ok(ExtremalRecord {
        forest: forest.clone(),
        n,
        s,
        value,
        extremal_graphs: graphs.iter().map(Graph::to_graph6).collect(),
        path_value: None,
        formula_value: None,
        threshold: threshold_n(forest, s).ok(),
        agrees: None,
    })
}

/// ex(n, K_s, P_ℓ).
pub fn brute_force_path_ex(n: usize, s: usize, ell: usize, budget: Option<u64>) -> Result<BigUint> {
    let path = LinearForest::new([ell])?;
    Ok(search(n, s, &path, budget)?.0)
}

/// One record per n: brute force, the theorem value fed by the brute-force
/// path number, the threshold and, at or above it, the agreement verdict.
pub fn reconcile(
    ns: impl IntoIterator<Item = usize>,
    s: usize,
    forest: &LinearForest,
    budget: Option<u64>,
) -> Result<Vec<ExtremalRecord>> {
    if let Some(why) = forest.hypothesis_violation() {
        return Err(Error::Hypothesis(why));
    }
    ns.into_iter()
        .map(|n| {
            let mut record = brute_force_ex(n, s, forest, budget)?;
            let path = brute_force_path_ex(n, s, forest.longest(), budget)?;
            record.formula_value = match theorem_value(forest, n, s, &path) {
                Ok(v) => Some(v),
                Err(Error::InvalidParameter(_)) => None,
                Err(e) => return Err(e),
            };
            record.path_value = Some(path);
            record.agrees = match (&record.formula_value, record.below_threshold()) {
                (Some(f), false) => Some(*f == record.value),
                _ => None,
            };
            Ok(record)
        })
        .collect()
}
