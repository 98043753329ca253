//! Builders for the explicit graph families: G_F(n), G_F(n, i), apex
//! families, K_2/E_2 + tK_4, clique unions and path unions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::{bit, low_mask, Graph, MAX_ORDER};

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderOverflow(n))
    } else {
        Ok(())
    }
}

/// Disjoint cliques of the given orders, laid out consecutively.
fn disjoint_cliques(sizes: &[usize]) -> Result<Graph> {
    let n: usize = sizes.iter().sum();
    check_order(n)?;
    let mut rows = vec![0u64; n];
    let mut start = 0;
    for &size in sizes {
        let block = low_mask(start + size) & !low_mask(start);
        for v in start..start + size {
            rows[v] = block & !bit(v);
        }
        start += size;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// K_δ + E_{n−δ} when F has an even path, K_δ + (E_{n−δ−2} ∪ K_2) when
/// every path of F is odd. Vertices 0..δ form the clique; in the odd case
/// δ and δ+1 carry the extra edge.
pub fn build_gf(f: &LinearForest, n: usize) -> Result<Graph> {
    let d = f.delta();
    if n < d + 2 {
        return Err(Error::InvalidParameter(format!(
            "G_F(n) for F = {f} needs n >= {}, got {n}",
            d + 2
        )));
    }
    check_order(n)?;
    let mut outside = Graph::empty(n - d)?;
    if f.all_odd() {
        outside = outside.with_edge(0, 1)?;
    }
    Graph::complete(d)?.join(&outside)
}

/// Cross edges from each added edge e_j = {a_j, b_j} into the clique:
/// `cross[j]` lists `(endpoint, clique_vertex)` with endpoint 0 for a_j and
/// 1 for b_j.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub cross: Vec<Vec<(usize, usize)>>,
}

impl Attachment {
    /// Disjoint clique pairs assigned greedily, then single cross edges
    /// while clique vertices remain.
    pub fn greedy(delta: usize, i: usize) -> Attachment {
        let mut next = 0;
        let mut singles = 0;
        let cross = (0..i)
            .map(|_| {
                if next + 2 <= delta {
                    next += 2;
                    vec![(0, next - 2), (1, next - 1)]
                } else if next < delta && singles < 2 {
                    next += 1;
                    singles += 1;
                    vec![(0, next - 1)]
                } else {
                    Vec::new()
                }
            })
            .collect();
        Attachment { cross }
    }

    fn has_independent_pair(edges: &[(usize, usize)]) -> bool {
        edges
            .iter()
            .any(|&(e, c)| edges.iter().any(|&(f, d)| e != f && c != d))
    }

    /// Checks the two rules: every e_j but at most two sends two
    /// independent edges into the clique, and each clique vertex sees at
    /// most one e_j.
    pub fn validate(&self, delta: usize) -> Result<()> {
        let mut owner = vec![None; delta];
        for (j, edges) in self.cross.iter().enumerate() {
            for &(end, c) in edges {
                if end > 1 {
                    return Err(Error::InvalidAttachment(format!(
                        "e_{} has endpoint index {end}; use 0 or 1",
                        j + 1
                    )));
                }
                if c >= delta {
                    return Err(Error::InvalidAttachment(format!(
                        "e_{} attaches to vertex {c} outside the clique 0..{delta}",
                        j + 1
                    )));
                }
                match owner[c] {
                    Some(other) if other != j => {
                        return Err(Error::InvalidAttachment(format!(
                            "clique vertex {c} has neighbors in both e_{} and e_{}",
                            other + 1,
                            j + 1
                        )))
                    }
                    _ => owner[c] = Some(j),
                }
            }
        }
        let lacking = self
            .cross
            .iter()
            .filter(|edges| !Self::has_independent_pair(edges))
            .count();
        if lacking > 2 {
            return Err(Error::InvalidAttachment(format!(
                "{lacking} added edges lack two independent cross edges; at most 2 may"
            )));
        }
        Ok(())
    }
}

/// G_F(n, i) for F = kP_5: i independent edges attached to the clique of
/// K_δ + E_{n−δ−2i}. Vertex layout: clique, then e_1..e_i as consecutive
/// pairs, then the independent set. `None` selects [`Attachment::greedy`].
pub fn build_gf_i(k: usize, n: usize, i: usize, attachment: Option<&Attachment>) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if i > k {
        return Err(Error::InvalidParameter(format!("i = {i} exceeds k = {k}")));
    }
    let d = 2 * k - 1;
    if n < d + 2 * i {
        return Err(Error::InvalidParameter(format!(
            "G_F(n, i) with k = {k}, i = {i} needs n >= {}, got {n}",
            d + 2 * i
        )));
    }
    check_order(n)?;
    let default;
    let attachment = match attachment {
        Some(a) => a,
        None => {
            default = Attachment::greedy(d, i);
            &default
        }
    };
    if attachment.cross.len() != i {
        return Err(Error::InvalidAttachment(format!(
            "expected cross edges for {i} added edges, got {}",
            attachment.cross.len()
        )));
    }
    attachment.validate(d)?;
    let mut edges = Vec::new();
    for a in 0..d {
        for b in a + 1..n {
            if b < d || b >= d + 2 * i {
                edges.push((a, b));
            }
        }
    }
    for (j, cross) in attachment.cross.iter().enumerate() {
        let base = d + 2 * j;
        edges.push((base, base + 1));
        edges.extend(cross.iter().map(|&(end, c)| (base + end, c)));
    }
    Graph::from_edges(n, &edges)
}

/// K_1 joined to disjoint cliques of the given orders; the apex is vertex 0.
pub fn apex_over_cliques(sizes: &[usize]) -> Result<Graph> {
    check_order(1 + sizes.iter().sum::<usize>())?;
    Graph::complete(1)?.join(&disjoint_cliques(sizes)?)
}

/// K_1 + tK_{ℓ−1}.
pub fn apex_cliques(ell: usize, t: usize) -> Result<Graph> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell must be at least 2, got {ell}")));
    }
    apex_over_cliques(&vec![ell - 1; t])
}

/// K_1 + (t₁K_{ℓ−1} ∪ t₂K_{ℓ−2}).
pub fn apex_mixed(ell: usize, t1: usize, t2: usize) -> Result<Graph> {
    if ell < 3 {
        return Err(Error::InvalidParameter(format!("ell must be at least 3, got {ell}")));
    }
    let mut sizes = vec![ell - 1; t1];
    sizes.extend(std::iter::repeat_n(ell - 2, t2));
    apex_over_cliques(&sizes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Base {
    K2,
    E2,
}

impl std::str::FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Base> {
        match s.to_ascii_uppercase().as_str() {
            "K2" => Ok(Base::K2),
            "E2" => Ok(Base::E2),
            _ => Err(Error::InvalidParameter(format!("base must be K2 or E2, got '{s}'"))),
        }
    }
}

/// K_2 + tK_4 or E_2 + tK_4, base vertices 0 and 1.
pub fn base_plus_k4(base: Base, t: usize) -> Result<Graph> {
    check_order(2 + 4 * t)?;
    let b = match base {
        Base::K2 => Graph::complete(2)?,
        Base::E2 => Graph::empty(2)?,
    };
    b.join(&disjoint_cliques(&vec![4; t])?)
}

/// ⌊n/(ℓ−1)⌋K_{ℓ−1} ∪ K_{n mod (ℓ−1)}.
pub fn clique_union(ell: usize, n: usize) -> Result<Graph> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell must be at least 2, got {ell}")));
    }
    check_order(n)?;
    let block = ell - 1;
    let mut sizes = vec![block; n / block];
    if !n.is_multiple_of(block) {
        sizes.push(n % block);
    }
    disjoint_cliques(&sizes)
}

/// Disjoint paths of the given orders (order 1 is a lone vertex), each
/// numbered consecutively.
pub fn paths_graph(orders: &[usize]) -> Result<Graph> {
    let n: usize = orders.iter().sum();
    check_order(n)?;
    let mut edges = Vec::new();
    let mut start = 0;
    for &l in orders {
        edges.extend((start + 1..start + l).map(|v| (v - 1, v)));
        start += l;
    }
    Graph::from_edges(n, &edges)
}

/// The forest itself as a graph.
pub fn path_union(f: &LinearForest) -> Result<Graph> {
    paths_graph(f.orders())
}

/// A named construction with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionId {
    Gf { forest: LinearForest, n: usize },
    GfI { k: usize, n: usize, i: usize },
    ApexCliques { ell: usize, t: usize },
    ApexMixed { ell: usize, t1: usize, t2: usize },
    BasePlusK4 { base: Base, t: usize },
    CliqueUnion { ell: usize, n: usize },
    PathUnion { forest: LinearForest },
}

impl ConstructionId {
    pub fn tag(&self) -> &'static str {
        match self {
            ConstructionId::Gf { .. } => "GF",
            ConstructionId::GfI { .. } => "GF_I",
            ConstructionId::ApexCliques { .. } => "APEX_CLIQUES",
            ConstructionId::ApexMixed { .. } => "APEX_MIXED",
            ConstructionId::BasePlusK4 { .. } => "BASE_PLUS_K4",
            ConstructionId::CliqueUnion { .. } => "CLIQUE_UNION",
            ConstructionId::PathUnion { .. } => "PATH_UNION",
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            ConstructionId::Gf { forest, n } => build_gf(forest, *n),
            ConstructionId::GfI { k, n, i } => build_gf_i(*k, *n, *i, None),
            ConstructionId::ApexCliques { ell, t } => apex_cliques(*ell, *t),
            ConstructionId::ApexMixed { ell, t1, t2 } => apex_mixed(*ell, *t1, *t2),
            ConstructionId::BasePlusK4 { base, t } => base_plus_k4(*base, *t),
            ConstructionId::CliqueUnion { ell, n } => clique_union(*ell, *n),
            ConstructionId::PathUnion { forest } => path_union(forest),
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionId::Gf { forest, n } => write!(f, "GF(forest={forest}, n={n})"),
            ConstructionId::GfI { k, n, i } => write!(f, "GF_I(k={k}, n={n}, i={i})"),
            ConstructionId::ApexCliques { ell, t } => write!(f, "APEX_CLIQUES(ell={ell}, t={t})"),
            ConstructionId::ApexMixed { ell, t1, t2 } => {
                write!(f, "APEX_MIXED(ell={ell}, t1={t1}, t2={t2})")
            }
            ConstructionId::BasePlusK4 { base, t } => write!(f, "BASE_PLUS_K4(base={base:?}, t={t})"),
            ConstructionId::CliqueUnion { ell, n } => write!(f, "CLIQUE_UNION(ell={ell}, n={n})"),
            ConstructionId::PathUnion { forest } => write!(f, "PATH_UNION(forest={forest})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> LinearForest {
        LinearForest::parse(s).unwrap()
    }

    #[test]
    fn gf_edge_counts() {
        let g = build_gf(&f("4+4"), 10).unwrap();
        assert_eq!(g.edge_count(), 3 + 21);
        assert_eq!(g.min_degree(), 3);
        let g = build_gf(&f("5+5"), 10).unwrap();
        assert_eq!(g.edge_count(), 25);
        assert!(g.has_edge(3, 4));
        let star = build_gf(&f("2+2"), 5).unwrap();
        assert_eq!(star.degrees(), vec![4, 1, 1, 1, 1]);
        assert!(build_gf(&f("5+5"), 4).is_err());
        assert!(build_gf(&f("2+2"), 65).is_err());
    }

    #[test]
    fn gf_min_degree_is_delta() {
        for forest in ["2+2", "4+2", "4+4", "5+5", "5+4", "7+5", "5+5+5", "5+5+2"] {
            let forest = f(forest);
            // With every path odd and n = δ+2 the graph is K_{δ+2}.
            let start = forest.delta() + if forest.all_odd() { 3 } else { 2 };
            for n in start..=40 {
                assert_eq!(build_gf(&forest, n).unwrap().min_degree(), forest.delta());
            }
        }
    }

    #[test]
    fn gf_i_examples() {
        let base = build_gf_i(2, 12, 0, None).unwrap();
        assert_eq!(base, Graph::complete(3).unwrap().join(&Graph::empty(9).unwrap()).unwrap());

        let one = Attachment { cross: vec![vec![(0, 0), (1, 1)]] };
        let g = build_gf_i(2, 12, 1, Some(&one)).unwrap();
        assert!(g.has_edge(3, 4) && g.has_edge(3, 0) && g.has_edge(4, 1));
        assert!(!g.has_edge(3, 1) && !g.has_edge(4, 2));
        assert_eq!(g.degree(5), 3);

        let clash = Attachment { cross: vec![vec![(0, 0), (1, 1)], vec![(0, 0), (1, 2)]] };
        assert!(matches!(build_gf_i(2, 12, 2, Some(&clash)), Err(Error::InvalidAttachment(_))));
        assert!(build_gf_i(2, 12, 3, None).is_err());
    }

    #[test]
    fn attachment_rules() {
        assert!(Attachment { cross: vec![vec![]; 2] }.validate(5).is_ok());
        assert!(Attachment { cross: vec![vec![]; 3] }.validate(5).is_err());
        // Both endpoints on one clique vertex is not an independent pair.
        let same = Attachment { cross: vec![vec![(0, 0), (1, 0)]; 1] };
        assert!(same.validate(3).is_ok());
        assert!(!Attachment::has_independent_pair(&same.cross[0]));
        assert!(Attachment { cross: vec![vec![(2, 0)]] }.validate(3).is_err());
        assert!(Attachment { cross: vec![vec![(0, 3)]] }.validate(3).is_err());
        for k in 1..8 {
            for i in 0..=k {
                Attachment::greedy(2 * k - 1, i).validate(2 * k - 1).unwrap();
                build_gf_i(k, (2 * k - 1 + 2 * i).max(1), i, None).unwrap();
            }
        }
    }

    #[test]
    fn apex_families() {
        let g = apex_cliques(5, 3).unwrap();
        assert_eq!(g.order(), 13);
        assert_eq!(g.min_degree(), 4);
        assert_eq!(g.degree(0), 12);
        assert_eq!(apex_mixed(5, 1, 1).unwrap().order(), 8);
        assert_eq!(apex_mixed(5, 1, 1).unwrap().edge_count(), 7 + 6 + 3);
        let k = base_plus_k4(Base::K2, 2).unwrap();
        assert_eq!((k.order(), k.min_degree()), (10, 5));
        assert!(k.has_edge(0, 1));
        let e = base_plus_k4(Base::E2, 2).unwrap();
        assert!(!e.has_edge(0, 1));
        assert_eq!(e.min_degree(), 5);
        assert!(base_plus_k4(Base::K2, 16).is_err());
    }

    #[test]
    fn unions() {
        let g = clique_union(4, 9).unwrap();
        assert_eq!((g.edge_count(), g.components().len()), (9, 3));
        let g = clique_union(4, 10).unwrap();
        assert_eq!((g.edge_count(), g.components().len()), (9, 4));
        let g = path_union(&f("7+4")).unwrap();
        assert_eq!((g.order(), g.edge_count()), (11, 9));
        assert_eq!(paths_graph(&[3, 1]).unwrap().edge_count(), 2);
    }

    #[test]
    fn construction_ids_build() {
        let id = ConstructionId::ApexCliques { ell: 5, t: 2 };
        assert_eq!(id.tag(), "APEX_CLIQUES");
        assert_eq!(id.build().unwrap(), apex_cliques(5, 2).unwrap());
        assert_eq!(id.to_string(), "APEX_CLIQUES(ell=5, t=2)");
    }
}
