use proptest::prelude::*;

use screenq::serre::{enumerate_words, singular_scan, solve_singular, verify_candidate, Multidegree};
use screenq::{ModuleContext, RootDatum, Weight};

fn generic(name: &str) -> ModuleContext {
    ModuleContext::new(RootDatum::catalog(name).unwrap(), Weight::Generic, 4).unwrap()
}

fn degrees() -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    prop_oneof![
        (0usize..=3).prop_map(|a| ("sl2", vec![a])),
        (0usize..=3).prop_map(|a| ("osp1_2", vec![a])),
        (0usize..=2, 0usize..=2).prop_map(|(a, b)| ("sl3", vec![a, b])),
        (0usize..=2, 0usize..=2).prop_map(|(a, b)| ("sl2_1", vec![a, b])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dimension_ignores_word_order((name, d) in degrees(), seed in any::<u64>()) {
        let ctx = generic(name);
        let d = Multidegree(d);
        prop_assume!(d.total() < ctx.depth());
        let words = enumerate_words(&d, ctx.depth()).unwrap();
        let mut shuffled = words.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            shuffled.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let a = solve_singular(&ctx, &words).unwrap().len();
        let b = solve_singular(&ctx, &shuffled).unwrap().len();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn scan_results_are_singular((name, d) in degrees()) {
        let ctx = generic(name);
        let d = Multidegree(d);
        prop_assume!(d.total() < ctx.depth());
        let scan = singular_scan(&ctx, &d).unwrap();
        for comb in &scan.combinations {
            prop_assert!(verify_candidate(&ctx, &comb.coefficients, &d).unwrap().singular);
            prop_assert!(comb.coefficients[0].1.is_one());
        }
    }
}

#[test]
fn odd_root_of_osp_is_not_nilpotent() {
    let scan = singular_scan(&generic("osp1_2"), &Multidegree(vec![2])).unwrap();
    assert_eq!(scan.dimension(), 0);
}

#[test]
fn concrete_weight_rejected() {
    let d = RootDatum::catalog("sl2").unwrap();
    let ctx = ModuleContext::new(d, Weight::parse("1").unwrap(), 4).unwrap();
    assert!(singular_scan(&ctx, &Multidegree(vec![2])).is_err());
}

#[test]
fn mismatched_words_rejected() {
    let ctx = generic("sl3");
    let words = enumerate_words(&Multidegree(vec![1, 1]), 4).unwrap();
    let comb: Vec<_> = words.into_iter().map(|w| (w, screenq::PhaseScalar::one(2))).collect();
    assert!(verify_candidate(&ctx, &comb, &Multidegree(vec![2, 0])).is_err());
}
