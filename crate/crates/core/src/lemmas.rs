//! Executable checks of the path lemmas: the containment dichotomies for
//! P_{2δ+1} ∪ P_{δ}, P_{2δ+1} ∪ P_{δ+1}, P_{2δ+1} ∪ P_{δ+2}, Dirac's
//! longest-path bound and the Chvátal–Erdős condition.

use serde::Serialize;

use crate::constructions::paths_graph;
use crate::enumerate::{enumerate_graphs, EnumFilter};
use crate::error::Result;
use crate::forest::LinearForest;
use crate::paths::{find_disjoint_paths, has_hamiltonian_path, longest_path_order, path_union_contains};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub forest: String,
    pub delta: usize,
    /// Path orders of the host, e.g. "7+3".
    pub host: String,
    pub f_free: bool,
    pub predicted_free: bool,
}

impl LemmaRow {
    pub fn agrees(&self) -> bool {
        self.f_free == self.predicted_free
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub bound: usize,
    pub checked: usize,
    /// Inputs meeting the lemma's premise.
    pub applicable: usize,
    pub rows: Vec<LemmaRow>,
    /// Forest text or graph6 for each disagreement.
    pub mismatches: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Forests with k ≥ 2, no P_3 and |F| ≤ `max_total`.
pub fn valid_forests(max_total: usize) -> Vec<LinearForest> {
    LinearForest::all_up_to(max_total, 2)
        .into_iter()
        .filter(LinearForest::satisfies_hypotheses)
        .collect()
}

/// The forests for which P_{2δ+1} ∪ P_δ is predicted to be F-free.
pub fn claw_family(f: &LinearForest) -> bool {
    match f.orders() {
        [5, 5, 5, 5, 5] => true,
        [a, b] => a == b || *a == b + 1 || (*a == b + 2 && b % 2 == 1),
        [a, b, 2] => a == b && a % 2 == 1,
        _ => false,
    }
}

fn host_free(f: &LinearForest, host: &[usize]) -> bool {
    let fast = !path_union_contains(host, f.orders());
    let general = find_disjoint_paths(&paths_graph(host).expect("host fits"), f.orders()).is_none();
    assert_eq!(fast, general, "fast path disagrees on host {host:?}, F = {f}");
    fast
}

fn row(f: &LinearForest, host: [usize; 2], predicted_free: bool) -> LemmaRow {
    LemmaRow {
        forest: f.to_string(),
        delta: f.delta(),
        host: format!("{}+{}", host[0], host[1]),
        f_free: host_free(f, &host),
        predicted_free,
    }
}

fn finish(lemma: &str, bound: usize, rows: Vec<LemmaRow>) -> LemmaReport {
    let mismatches = rows
        .iter()
        .filter(|r| !r.agrees())
        .map(|r| format!("{} in {}", r.forest, r.host))
        .collect();
    LemmaReport {
        lemma: lemma.into(),
        bound,
        checked: rows.len(),
        applicable: rows.iter().filter(|r| r.f_free).count(),
        rows,
        mismatches,
    }
}

/// P_{2δ+1} ∪ P_δ is F-free exactly for the listed family.
pub fn claw_report(max_total: usize) -> LemmaReport {
    let rows = valid_forests(max_total)
        .iter()
        .map(|f| {
            let d = f.delta();
            row(f, [2 * d + 1, d], claw_family(f))
        })
        .collect();
    finish("claw", max_total, rows)
}

/// P_{2δ+1} ∪ P_{δ+1} is F-free exactly for 2P_ℓ with ℓ odd, and
/// P_{2δ+1} ∪ P_{δ+2} always contains F.
pub fn claw2_report(max_total: usize) -> LemmaReport {
    let rows = valid_forests(max_total)
        .iter()
        .flat_map(|f| {
            let d = f.delta();
            [
                row(f, [2 * d + 1, d + 1], f.twin_odd_order().is_some()),
                row(f, [2 * d + 1, d + 2], false),
            ]
        })
        .collect();
    finish("claw2", max_total, rows)
}

/// p(G) ≥ min(|G|, 2δ(G) + 1) on every connected graph with at most
/// `max_order` vertices.
pub fn dirac_report(max_order: usize) -> Result<LemmaReport> {
    let mut report = LemmaReport {
        lemma: "dirac".into(),
        bound: max_order,
        ..LemmaReport::default()
    };
    let connected = EnumFilter {
        connected: Some(true),
        ..EnumFilter::default()
    };
    for n in 1..=max_order {
        for g in enumerate_graphs(n, &connected)? {
            report.checked += 1;
            report.applicable += 1;
            if longest_path_order(&g)? < n.min(2 * g.min_degree() + 1) {
                report.mismatches.push(g.to_graph6());
            }
        }
    }
    Ok(report)
}

/// Every graph with α(G) ≤ κ(G) + 1 and at most `max_order` vertices has a
/// Hamiltonian path.
pub fn chvatal_erdos_report(max_order: usize) -> Result<LemmaReport> {
    let mut report = LemmaReport {
        lemma: "chvatal-erdos".into(),
        bound: max_order,
        ..LemmaReport::default()
    };
    for n in 1..=max_order {
        for g in enumerate_graphs(n, &EnumFilter::default())? {
            report.checked += 1;
            if g.independence_number() <= g.connectivity() + 1 {
                report.applicable += 1;
                if !has_hamiltonian_path(&g)? {
                    report.mismatches.push(g.to_graph6());
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claw_small_sweep() {
        let r = claw_report(12);
        assert!(r.passed(), "{:?}", r.mismatches);
        assert!(r.rows.iter().any(|x| x.forest == "5+5" && x.f_free));
        assert!(r.rows.iter().any(|x| x.forest == "4+2" && !x.f_free));
    }

    #[test]
    fn claw2_small_sweep() {
        let r = claw2_report(12);
        assert!(r.passed(), "{:?}", r.mismatches);
        let free: Vec<&str> = r.rows.iter().filter(|x| x.f_free).map(|x| x.forest.as_str()).collect();
        assert_eq!(free, vec!["5+5"]);
    }

    #[test]
    fn family_membership() {
        let f = |s: &str| LinearForest::parse(s).unwrap();
        assert!(claw_family(&f("5+5+5+5+5")));
        assert!(claw_family(&f("7+5")));
        assert!(!claw_family(&f("6+4")));
        assert!(claw_family(&f("5+5+2")));
        assert!(!claw_family(&f("4+4+2")));
        assert!(claw_family(&f("4+4")));
    }

    #[test]
    fn path_lemmas_on_small_graphs() {
        assert!(dirac_report(6).unwrap().passed());
        let ce = chvatal_erdos_report(6).unwrap();
        assert!(ce.passed());
        assert!(ce.applicable > 0 && ce.applicable < ce.checked);
    }
}
