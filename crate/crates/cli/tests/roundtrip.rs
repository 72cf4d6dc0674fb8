use proptest::prelude::*;
use qes::parse::{parse_matrix_operator, parse_operator};
use qes::report::{RunReport, Verdict};
use qes_core::superops::MatDiffOp;
use qes_core::{DiffOp, Rational};

fn op() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec((-6i64..=6, 1i64..=4, 0u32..3, 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(DiffOp::zero(), |acc, (n, d, i, j, a, b)| {
            acc + DiffOp::monomial(Rational::new(n.into(), d.into()), i, j, a, b)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operators_print_and_parse_back(t in op()) {
        prop_assert_eq!(parse_operator(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn matrices_print_and_parse_back(a in op(), b in op(), c in op(), d in op()) {
        let m = MatDiffOp::new(a, b, c, d);
        prop_assert_eq!(parse_matrix_operator(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn reports_round_trip(passed in 0usize..5, extra in 0usize..5, word in "[A-Z][0-9]") {
        let results = serde_json::json!({"words": [word], "passed": passed});
        let r = RunReport::new("verify counts", Default::default(), results, Verdict::from_counts(passed, passed + extra));
        let back: RunReport = serde_json::from_str(&r.to_json()).unwrap();
        prop_assert_eq!(back, r);
    }
}
