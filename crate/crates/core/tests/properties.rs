mod common;

use proptest::prelude::*;
use sectio::cli::catalog::catalog;
use sectio::cli::doc::{BudgetStatus, DocValue, ResultDocument, SectionDoc};
use sectio::cli::expr::{parse_group, parse_hom, ActionName, GroupExpr, HomSpec};
use sectio::invariants::{sec, sigma, Value};
use sectio::subgroups::generated_subgroup;
use sectio::Limits;

fn leaf() -> impl Strategy<Value = GroupExpr> {
    prop_oneof![
        (1usize..40).prop_map(GroupExpr::Cyclic),
        (3usize..20).prop_map(GroupExpr::Dihedral),
        Just(GroupExpr::Quaternion),
        (1usize..6).prop_map(GroupExpr::Symmetric),
        (1usize..6).prop_map(GroupExpr::Alternating),
        (prop::sample::select(vec![2usize, 3, 5, 7]), 1usize..4).prop_map(|(p, k)| GroupExpr::Elementary(p, k)),
    ]
}

fn group_expr() -> impl Strategy<Value = GroupExpr> {
    leaf().prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(GroupExpr::Product),
            (inner.clone(), inner.clone(), prop::bool::ANY).prop_map(|(a, h, inv)| {
                GroupExpr::Semidirect(Box::new(a), Box::new(h), if inv { ActionName::Inv } else { ActionName::Trivial })
            }),
            (inner, prop::collection::vec(0usize..30, 0..4)).prop_map(|(g, v)| GroupExpr::Quotient(Box::new(g), v)),
        ]
    })
}

fn hom_spec() -> impl Strategy<Value = HomSpec> {
    let ints = || prop::collection::vec(0usize..30, 0..4);
    prop_oneof![
        group_expr().prop_map(HomSpec::Identity),
        (group_expr(), ints()).prop_map(|(g, v)| HomSpec::Quotient(g, v)),
        (group_expr(), prop::collection::vec(0usize..4, 1..3)).prop_map(|(g, v)| HomSpec::Projection(g, v)),
        (group_expr(), 0usize..4).prop_map(|(g, i)| HomSpec::Inclusion(g, i)),
        (group_expr(), group_expr(), ints()).prop_map(|(d, c, v)| HomSpec::Map(d, c, v)),
        (group_expr(), group_expr(), 0usize..30).prop_map(|(d, c, x)| HomSpec::Evaluation(d, c, x)),
        (group_expr(), group_expr()).prop_map(|(d, c)| HomSpec::Trivial(d, c)),
    ]
}

/// Spreads spaces between tokens without splitting names or numbers.
fn spaced(text: &str) -> String {
    let mut out = String::new();
    for ch in text.chars() {
        if "(),[]x".contains(ch) {
            out.push(' ');
            out.push(ch);
            out.push(' ');
        } else {
            out.push(ch);
        }
    }
    out
}

fn doc_strategy() -> impl Strategy<Value = ResultDocument> {
    let value = prop_oneof![
        Just(None),
        any::<bool>().prop_map(|b| Some(DocValue::Bool(b))),
        any::<u64>().prop_map(|n| Some(DocValue::Int(n))),
        Just(Some(DocValue::infinite())),
    ];
    let lists = prop::collection::vec(prop::collection::vec(0usize..64, 0..6), 0..4);
    (value, lists.clone(), lists, any::<f64>().prop_filter("finite", |t| t.is_finite()), "[a-z(),0-9]{0,12}")
        .prop_map(|(value, witness, images, timing_ms, input)| {
            let mut doc = ResultDocument::new("sigma", vec![input], &Limits::default());
            doc.value = value;
            doc.sections = witness
                .iter()
                .zip(&images)
                .map(|(s, i)| SectionDoc { subgroup: s.clone(), images: i.clone() })
                .collect();
            doc.witness = witness;
            doc.timing_ms = timing_ms;
            doc.budget = BudgetStatus { exhausted: images.len() % 2 == 1, ..doc.budget };
            doc.put("note", "x");
            doc
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_expressions_round_trip(e in group_expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_group(&text).unwrap(), e.clone());
        prop_assert_eq!(parse_group(&spaced(&text)).unwrap(), e);
    }

    #[test]
    fn hom_specs_round_trip(h in hom_spec()) {
        let text = h.to_string();
        prop_assert_eq!(parse_hom(&text).unwrap(), h.clone());
        prop_assert_eq!(parse_hom(&spaced(&text)).unwrap(), h);
    }

    #[test]
    fn documents_round_trip_bit_exactly(doc in doc_strategy()) {
        let text = doc.to_json();
        let back = ResultDocument::from_json(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn generated_subgroup_is_the_naive_closure(which in 0usize..40, seed in prop::collection::vec(0usize..16, 0..4)) {
        let limits = Limits::default();
        let groups = catalog(16, &limits).unwrap().groups;
        let g = &groups[which % groups.len()].group;
        let seed: Vec<usize> = seed.into_iter().map(|x| x % g.order()).collect();
        let ours = generated_subgroup(g, &seed).unwrap().elements();
        prop_assert_eq!(ours, common::naive_closure(g, &seed));
    }
}

#[test]
fn sec_never_below_sigma_of_codomain() {
    let limits = Limits::default();
    for ch in catalog(12, &limits).unwrap().homs.iter().filter(|h| h.hom.is_surjective()) {
        let s = sec(&ch.hom, &limits).unwrap().value;
        let sh = sigma(ch.hom.codomain(), &limits).unwrap().value;
        assert!(s >= sh, "{}", ch.spec);
        if let Value::Finite(n) = s {
            assert!(n >= 3);
        }
    }
}
