use turanlab_bench::{forest, gf_host, scrambled, shuffled_apex};
use turanlab_core::{are_isomorphic, apex_mixed, classify, contains_linear_forest, Case};

#[test]
fn shuffled_apex_is_a_relabeling() {
    assert!(are_isomorphic(&shuffled_apex(9), &apex_mixed(7, 3, 3).unwrap()));
}

#[test]
fn benchmark_inputs_exercise_both_answers() {
    let f = forest("7+7");
    assert!(contains_linear_forest(&shuffled_apex(9), &f).is_none());
    assert_eq!(classify(&shuffled_apex(9), &f).case, Case::ApexMixed);
    assert!(contains_linear_forest(&gf_host(30), &forest("7+5")).is_none());
    let density = scrambled(40, 50, 7).edge_count() as f64 / 780.0;
    assert!((0.4..0.6).contains(&density));
}
