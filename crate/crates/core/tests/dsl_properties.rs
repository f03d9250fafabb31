use paraquant::dsl::{self, Environment, Expr, Value};
use paraquant::logic::embed_crisp;
use paraquant::{ImplVariant, OpMap, PBit, SigmaConfig, SigmaConvention, TNormFamily, TruthPair};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = TruthPair> {
    (0.3..=1.0f64, 0.0..=0.7f64).prop_map(|(p, m)| TruthPair::new(p, m).unwrap())
}

/// Conjunction tree of depth ≤ 8 over pair literals.
fn conjunction() -> impl Strategy<Value = Expr> {
    leaf()
        .prop_map(Expr::Pair)
        .prop_recursive(8, 256, 2, |inner| (inner.clone(), inner).prop_map(|(l, r)| Expr::and(l, r)))
}

fn crisp_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0usize..4).prop_map(|i| Expr::Crisp(PBit::ALL[i])),
        prop_oneof![Just("a"), Just("b")].prop_map(Expr::atom),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::or(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Expr::implies(l, r)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjunctions_commute_with_sigma(e in conjunction(), p in prop_oneof![Just(-1.0), Just(-2.0), Just(-4.0)]) {
        prop_assume!(e.depth() <= 8);
        let fam = TNormFamily::schweizer_sklar(p).unwrap();
        let cfg = SigmaConfig::new(fam, SigmaConvention::PureGenerator, OpMap::Printed).unwrap();
        let report = dsl::compare(&e, &Environment::new(), &cfg, fam).unwrap();
        prop_assert!(report.root_abs_err <= 1e-9, "{} at p={}: {:e}", e, p, report.root_abs_err);
        prop_assert!(report.nodes.iter().all(|n| n.scaled_err <= 1e-12));
    }

    #[test]
    fn crisp_and_fuzzy_agree(e in crisp_tree(), a in 0usize..4, b in 0usize..4, standard: bool) {
        let env = Environment::new().with("a", Value::Crisp(PBit::ALL[a])).with("b", Value::Crisp(PBit::ALL[b]));
        let variant = if standard { ImplVariant::Standard } else { ImplVariant::Printed };
        let crisp = dsl::eval_crisp(&e, &env, variant).unwrap();
        for fam in [TNormFamily::MinMax, TNormFamily::Product, TNormFamily::schweizer_sklar(-3.0).unwrap()] {
            prop_assert_eq!(dsl::eval_fuzzy(&e, &env, fam, variant).unwrap(), embed_crisp(crisp));
        }
    }

    #[test]
    fn printing_round_trips(e in crisp_tree()) {
        prop_assert_eq!(dsl::parse(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn disjunction_is_only_approximate() {
    let fam = TNormFamily::schweizer_sklar(-1.0).unwrap();
    let cfg = SigmaConfig::new(fam, SigmaConvention::PureGenerator, OpMap::Printed).unwrap();
    let half = Value::Pair(TruthPair::new(0.5, 0.5).unwrap());
    let env = Environment::new().with("a", half.clone()).with("b", half);
    let report = dsl::compare(&dsl::parse("a | b").unwrap(), &env, &cfg, fam).unwrap();
    assert!(report.root_abs_err > 0.0);
    let single = dsl::compare(&dsl::parse("a").unwrap(), &env, &cfg, fam).unwrap();
    assert_eq!(single.root_abs_err, 0.0);
}
