//! Acceptance suite: one PASS/FAIL line per criterion. Every numeric
//! comparison is exact (tolerance 0); each criterion also has a wall-clock
//! limit.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use turanlab_core::*;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn forest(text: &str) -> LinearForest {
    LinearForest::parse(text).unwrap()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn battery() -> Vec<LinearForest> {
    ["2+2", "4+2", "4+4", "5+5", "5+4", "7+5", "5+5+5", "5+5+2"]
        .into_iter()
        .map(forest)
        .collect()
}

/// C(a, b) by Pascal's rule, kept apart from the library's binomials.
fn pascal(a: usize, b: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..a {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(b).copied().unwrap_or(0)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn star(n: usize) -> Graph {
    Graph::complete(1).unwrap().join(&Graph::empty(n - 1).unwrap()).unwrap()
}

fn c1_formula_agreement() -> Check {
    let mut cases = 0;
    for f in battery() {
        let d = f.delta();
        for n in d + 2..=60 {
            let g = build_gf(&f, n).unwrap();
            for s in 1..=d + 1 {
                let formula = gf_formula(&f, n, s).unwrap();
                let counted = count_cliques(&g, s);
                ensure(formula == counted, || format!("F={f} n={n} s={s}: formula {formula} != count {counted}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (F, n, s) cases equal"))
}

/// Forests predicted F-free on P_{2δ+1} ∪ P_δ, written out independently of the library.
fn predicted_free(orders: &[usize]) -> bool {
    let odd = |l: usize| l % 2 == 1;
    match *orders {
        [5, 5, 5, 5, 5] => true,
        [a, b] if a == b => true,
        [a, b] if a == b + 1 => true,
        [a, b] if a == b + 2 && odd(b) => true,
        [a, b, 2] if a == b && odd(a) => true,
        _ => false,
    }
}

fn c2_short_union_dichotomy() -> Check {
    let report = claw_report(16);
    ensure(report.passed(), || format!("library mismatches: {:?}", report.mismatches))?;
    let mut free = 0;
    for f in lemmas_valid(16) {
        let d = f.delta();
        let host = constructions::paths_graph(&[2 * d + 1, d]).unwrap();
        let is_free = find_disjoint_paths(&host, f.orders()).is_none();
        ensure(is_free == predicted_free(f.orders()), || format!("F={f}: free={is_free}"))?;
        free += usize::from(is_free);
    }
    Ok(format!("{} forests swept, {free} F-free, all on the printed list", report.checked))
}

fn lemmas_valid(max: usize) -> Vec<LinearForest> {
    LinearForest::all_up_to(max, 2)
        .into_iter()
        .filter(LinearForest::satisfies_hypotheses)
        .collect()
}

fn c3_long_union_dichotomy() -> Check {
    let report = claw2_report(16);
    ensure(report.passed(), || format!("library mismatches: {:?}", report.mismatches))?;
    let mut swept = 0;
    for f in lemmas_valid(16) {
        let d = f.delta();
        let o = f.orders();
        let twin_odd = o.len() == 2 && o[0] == o[1] && o[0] % 2 == 1;
        let h1 = constructions::paths_graph(&[2 * d + 1, d + 1]).unwrap();
        let h2 = constructions::paths_graph(&[2 * d + 1, d + 2]).unwrap();
        let free1 = find_disjoint_paths(&h1, o).is_none();
        ensure(free1 == twin_odd, || format!("F={f}: P_{}+P_{} free={free1}", 2 * d + 1, d + 1))?;
        let w = contains_linear_forest(&h2, &f).ok_or_else(|| format!("F={f} not in P_{}+P_{}", 2 * d + 1, d + 2))?;
        ensure(w.validate(&h2, o), || format!("bad witness for {f}"))?;
        swept += 1;
    }
    Ok(format!("{swept} forests: δ+1 host free iff 2P_odd, δ+2 host always contains F"))
}

/// Largest edge count of a labeled graph on n vertices without two disjoint
/// edges, by trying every edge subset.
fn max_edges_without_2k2(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u32..1 << pairs.len())
        .filter(|m| {
            let chosen: Vec<_> = (0..pairs.len()).filter(|k| m >> k & 1 == 1).map(|k| pairs[k]).collect();
            chosen.iter().all(|&(a, b)| chosen.iter().all(|&(c, d)| a == c || a == d || b == c || b == d))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn c4_reconcile_2p2() -> Check {
    let f = forest("2+2");
    let threshold = threshold_n(&f, 2).unwrap();
    ensure(threshold == big(16), || format!("threshold {threshold}"))?;
    let rows = reconcile(3..=9, 2, &f, None).map_err(|e| e.to_string())?;
    let first = &rows[0];
    ensure(first.value == big(3) && first.formula_value == Some(big(2)), || format!("n=3 row {first:?}"))?;
    ensure(first.below_threshold() && first.agrees.is_none(), || "n=3 row not flagged".into())?;
    for r in &rows[1..] {
        let n = r.n;
        ensure(r.value == big(n as u64 - 1), || format!("n={n}: ex = {}", r.value))?;
        let tv = theorem_value(&f, n, 2, r.path_value.as_ref().unwrap()).unwrap();
        ensure(tv == r.value, || format!("n={n}: theorem value {tv}"))?;
        if n >= 5 {
            let has_star = r
                .extremal_graphs
                .iter()
                .any(|s| are_isomorphic(&Graph::from_graph6(s).unwrap(), &star(n)));
            ensure(has_star, || format!("n={n}: star missing from {:?}", r.extremal_graphs))?;
        }
        if n <= 6 {
            let oracle = max_edges_without_2k2(n);
            ensure(oracle == n - 1, || format!("n={n}: labeled oracle {oracle}"))?;
        }
    }
    Ok("ex(n,K_2,2P_2) = n-1 for n=4..9, star extremal for n>=5, n=3 flagged below threshold 16".into())
}

fn c5_path_bound_equality() -> Check {
    let p4 = LinearForest::new([4]).unwrap();
    let r9 = brute_force_ex(9, 2, &p4, None).map_err(|e| e.to_string())?;
    ensure(r9.value == big(9), || format!("ex(9,K_2,P_4) = {}", r9.value))?;
    ensure(brute_force_path_ex(9, 2, 4, None).unwrap() == big(9), || "path ex mismatch".into())?;
    let three_k3 = clique_union(4, 9).unwrap();
    ensure(
        r9.extremal_graphs.iter().any(|s| are_isomorphic(&Graph::from_graph6(s).unwrap(), &three_k3)),
        || "3K_3 missing".into(),
    )?;
    ensure(luo_bound(4, 2, 9).unwrap() == BigRational::from_integer(9.into()), || "bound at 9".into())?;
    let v8 = brute_force_path_ex(8, 2, 4, None).map_err(|e| e.to_string())?;
    let bound8 = luo_bound(4, 2, 8).unwrap();
    ensure(BigRational::from_integer(v8.clone().into()) < bound8, || format!("ex(8) = {v8} vs bound {bound8}"))?;
    Ok(format!("ex(9,K_2,P_4) = 9 with 3K_3; ex(8,K_2,P_4) = {v8} < 8"))
}

fn c6_odd_branch_constructions() -> Check {
    let f = forest("5+5");
    for n in 10..=40usize {
        let (t, r) = ((n - 1) / 4, (n - 1) % 4);
        let mut sizes = vec![4; t];
        if r > 0 {
            sizes.push(r);
        }
        let g = apex_over_cliques(&sizes).unwrap();
        ensure(g.order() == n, || format!("order {}", g.order()))?;
        let mu = u64::from(r == 3);
        let expected = big(t as u64 * 5 + mu);
        let counted = count_cliques(&g, 4);
        ensure(counted == expected, || format!("n={n}: count {counted} vs {expected}"))?;
        let tv = theorem_value(&f, n, 4, &big(0)).unwrap();
        ensure(tv == expected, || format!("n={n}: theorem value {tv}"))?;
        ensure(contains_linear_forest(&g, &f).is_none(), || format!("n={n}: contains 2P_5"))?;
    }
    Ok("31 constructions: count = floor((n-1)/4)*5 + mu, all 2P_5-free".into())
}

fn c7_audit_2p2() -> Check {
    let f = forest("2+2");
    let mut notes = Vec::new();
    for n in [8, 9] {
        let r = audit_structure(&f, n, None).map_err(|e| e.to_string())?;
        ensure(r.examined > 0, || format!("n={n}: empty stream"))?;
        ensure(r.unclassified() == 0, || format!("n={n}: counterexamples {:?}", r.counterexamples))?;
        let gf = r.verdicts.get("SUBGRAPH_OF_GF").copied().unwrap_or(0);
        ensure(gf == r.examined, || format!("n={n}: verdicts {:?}", r.verdicts))?;
        notes.push(format!("n={n}: {gf}/{}", r.examined));
    }
    Ok(format!("all SUBGRAPH_OF_GF ({})", notes.join(", ")))
}

fn c8_disintegration() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let forests = battery();
    let mut traces = 0usize;
    let mut steps = 0usize;
    for _ in 0..10_000 {
        let n = rng.random_range(1..=30);
        let p = [0.1, 0.3, 0.5][rng.random_range(0..3)];
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        for f in &forests {
            let d = f.delta();
            for s in 1..=d + 1 {
                let t = disintegrate(&g, f, s).unwrap();
                let cap = pascal(d - 1, s - 1);
                for st in &t.steps {
                    ensure(st.degree < d && st.loss <= cap, || format!("{} F={f} s={s}: step {st:?} cap {cap}", g.to_graph6()))?;
                }
                let removed = t.steps.iter().fold(VertexSet::EMPTY, |acc, st| acc.with(st.vertex));
                let core = g.delete(removed).unwrap();
                ensure(core == t.core, || "core differs from recomputed deletion".into())?;
                let lost: u64 = t.steps.iter().map(|st| st.loss).sum();
                let before = count_cliques_u64(&g, s);
                let after = count_cliques_u64(&core, s);
                ensure(before - after == lost, || format!("{} F={f} s={s}: {before} - {after} != {lost}", g.to_graph6()))?;
                ensure(verify_step_bound(&t, f, s), || "verify_step_bound rejected a real trace".into())?;
                traces += 1;
                steps += t.steps.len();
            }
        }
    }
    Ok(format!("{traces} traces, {steps} steps, every loss within C(δ_F-1, s-1), telescoping exact"))
}

fn c9_count_comparisons() -> Check {
    let mut comparisons = 0;
    for ell in 2..=15usize {
        let mut shapes = vec![vec![ell + 1, ell]];
        if ell % 2 == 0 {
            shapes.push(vec![ell, ell]);
        } else {
            shapes.push(vec![ell + 2, ell]);
            shapes.push(vec![ell, ell, 2]);
        }
        for orders in shapes {
            let f = LinearForest::new(orders).unwrap();
            if !f.satisfies_hypotheses() {
                continue;
            }
            for t in 2..=30usize {
                let n = t * (ell - 1) + 1;
                if n > 64 || n < f.delta() + 2 {
                    continue;
                }
                let gf = build_gf(&f, n).unwrap();
                let apex = apex_cliques(ell, t).unwrap();
                for s in 1..=f.delta() + 1 {
                    let (a, b) = (count_cliques(&gf, s), count_cliques(&apex, s));
                    ensure(a >= b, || format!("F={f} t={t} s={s}: {a} < {b}"))?;
                    comparisons += 1;
                }
            }
        }
    }
    let three = forest("5+5+5");
    for t in 2..=15usize {
        let gf = build_gf(&three, 4 * t + 2).unwrap();
        for base in [Base::K2, Base::E2] {
            let other = base_plus_k4(base, t).unwrap();
            ensure(count_cliques(&gf, 1) == count_cliques(&other, 1), || "orders differ".into())?;
            for s in 2..=6 {
                let (a, b) = (count_cliques(&gf, s), count_cliques(&other, s));
                ensure(a > b, || format!("3P_5 t={t} s={s} {base:?}: {a} <= {b}"))?;
                comparisons += 1;
            }
        }
    }
    Ok(format!("{comparisons} comparisons; 3P_5 strict for 2<=s<=6 (s=1 is equality of orders)"))
}

/// Oracle: extend ordered vertex tuples one vertex at a time.
fn tuple_oracle(g: &Graph, orders: &[usize]) -> bool {
    fn go(g: &Graph, orders: &[usize], seq: &mut Vec<usize>, within: usize) -> bool {
        let Some(&len) = orders.first() else { return true };
        if within == len {
            return go(g, &orders[1..], seq, 0);
        }
        for v in 0..g.order() {
            if seq.contains(&v) || (within > 0 && !g.has_edge(*seq.last().unwrap(), v)) {
                continue;
            }
            seq.push(v);
            let ok = go(g, orders, seq, within + 1);
            seq.pop();
            if ok {
                return true;
            }
        }
        false
    }
    go(g, orders, &mut Vec::new(), 0)
}

fn all_labeled_forms(n: usize) -> BTreeSet<CanonicalForm> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|m| {
            let mut rows = vec![0u64; n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if m >> k & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
            canonical_form(&Graph::from_rows(rows).unwrap())
        })
        .collect()
}

fn c10_property_suites() -> Check {
    let dirac = dirac_report(9).map_err(|e| e.to_string())?;
    ensure(dirac.passed(), || format!("Dirac violations {:?}", dirac.mismatches))?;
    let ce = chvatal_erdos_report(9).map_err(|e| e.to_string())?;
    ensure(ce.passed(), || format!("Chvátal–Erdős violations {:?}", ce.mismatches))?;

    let forests = LinearForest::all_up_to(7, 1);
    let mut pairs = 0;
    for n in 1..=7 {
        for g in enumerate_graphs(n, &EnumFilter::default()).unwrap() {
            for f in &forests {
                let got = contains_linear_forest(&g, f);
                if let Some(w) = &got {
                    ensure(w.validate(&g, f.orders()), || format!("bad witness {} {f}", g.to_graph6()))?;
                }
                ensure(got.is_some() == tuple_oracle(&g, f.orders()), || format!("{} F={f}", g.to_graph6()))?;
                pairs += 1;
            }
        }
    }

    let expected = [11usize, 34, 156, 1044];
    for (n, &want) in (4..=7).zip(&expected) {
        let ours: Vec<CanonicalForm> = enumerate_graphs(n, &EnumFilter::default())
            .unwrap()
            .iter()
            .map(canonical_form)
            .collect();
        let oracle: Vec<CanonicalForm> = all_labeled_forms(n).into_iter().collect();
        ensure(ours.len() == want && oracle.len() == want && ours == oracle, || {
            format!("n={n}: enumerated {} oracle {}", ours.len(), oracle.len())
        })?;
    }
    Ok(format!(
        "Dirac {} graphs, Chvátal–Erdős {} applicable of {}, {pairs} containment pairs vs oracle, counts 11/34/156/1044",
        dirac.checked, ce.applicable, ce.checked
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("formula agreement", 10, c1_formula_agreement),
        ("P_{2d+1} u P_d dichotomy", 60, c2_short_union_dichotomy),
        ("P_{2d+1} u P_{d+1}, P_{d+2} dichotomy", 60, c3_long_union_dichotomy),
        ("2P_2 brute-force reconciliation", 120, c4_reconcile_2p2),
        ("path bound equality", 120, c5_path_bound_equality),
        ("odd-branch constructions", 10, c6_odd_branch_constructions),
        ("2P_2 structure audit", 300, c7_audit_2p2),
        ("disintegration ledger", 120, c8_disintegration),
        ("clique-count comparisons", 30, c9_count_comparisons),
        ("property suites", 900, c10_property_suites),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let (tag, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; exceeded {limit} s")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {tag} [{name}] tolerance=0 limit={limit}s elapsed={:.2}s: {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
