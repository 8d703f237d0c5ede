mod common;

use std::collections::BTreeSet;

use common::{names, transitive_reduction};
use conceptkit::classic::{enumerate_concepts, enumerate_concepts_with, induced_orders, ClassicContext, Enumerator};
use conceptkit::dm::{cut_oracle, dm_complete, dm_of_sum, validate_quad};
use conceptkit::enriched::{contextual_closure, validate_context};
use conceptkit::equivalence::{cl_to_dm, closure_identities, verify_equivalence};
use conceptkit::io::{parse_cxt, write_cxt, ContextDocument};
use conceptkit::order::{is_closed, Preorder};
use conceptkit::random::{context, ordered, Seeded};
use conceptkit::relation::{Carrier, Relation, Subset};
use conceptkit::sum::{fibrate, sum, verify_sum_equations};
use proptest::prelude::*;

fn carrier(name: &str, prefix: &str, n: usize) -> Carrier {
    Carrier::new(name, (0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

fn relation(max: usize) -> impl Strategy<Value = Relation> {
    (0..=max, 0..=max).prop_flat_map(|(n, m)| {
        prop::collection::vec(any::<bool>(), n * m).prop_map(move |cells| {
            Relation::from_fn(&carrier("X0", "a", n), &carrier("X1", "p", m), |i, j| cells[i * m + j])
        })
    })
}

fn with_subsets(max: usize) -> impl Strategy<Value = (Relation, Vec<bool>, Vec<bool>)> {
    relation(max).prop_flat_map(|r| {
        let n = r.source().len();
        (Just(r), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n))
    })
}

fn subset(c: &Carrier, mask: &[bool]) -> Subset {
    Subset::new(c, c.elements().iter().zip(mask).filter(|(_, &b)| b).map(|(e, _)| e.as_str())).unwrap()
}

/// All extents, one per attribute subset.
fn extent_oracle(r: &Relation) -> BTreeSet<BTreeSet<String>> {
    let (n, m) = (r.source().len(), r.target().len());
    (0u32..1 << m)
        .map(|mask| (0..n).filter(|&i| (0..m).all(|j| mask >> j & 1 == 0 || r.get(i, j))).map(|i| r.source().element(i).to_string()).collect())
        .collect()
}

fn order_from_seed(seed: u64) -> Preorder {
    let mut src = Seeded::new(seed);
    loop {
        if let Some(p) = ordered(&mut src, "P", "p", 6) {
            return p;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumerators_agree(r in relation(6)) {
        let ctx = ClassicContext::new(r);
        let a = enumerate_concepts_with(&ctx, Enumerator::NextClosure).unwrap();
        let b = enumerate_concepts_with(&ctx, Enumerator::PowerSet).unwrap();
        prop_assert_eq!(a.concepts(), b.concepts());
    }

    #[test]
    fn extents_match_brute_force(r in relation(5)) {
        let l = enumerate_concepts(&ClassicContext::new(r.clone())).unwrap();
        let got: BTreeSet<BTreeSet<String>> = l.concepts().iter().map(|c| names(&c.extent)).collect();
        prop_assert_eq!(got.len(), l.len());
        prop_assert_eq!(got, extent_oracle(&r));
    }

    #[test]
    fn derivation_is_a_galois_connection((r, a, b) in with_subsets(5)) {
        let ctx = ClassicContext::new(r);
        let x0 = ctx.entities().clone();
        let (a, b) = (subset(&x0, &a), subset(&x0, &b));
        let ab = a.intersection(&b).unwrap();
        let ia = ctx.derive_intent(&a).unwrap();
        prop_assert!(ia.is_subset(&ctx.derive_intent(&ab).unwrap()).unwrap());
        prop_assert!(a.is_subset(&ctx.derive_extent(&ia).unwrap()).unwrap());
        prop_assert_eq!(ctx.derive_intent(&ctx.derive_extent(&ia).unwrap()).unwrap(), ia);
    }

    #[test]
    fn covers_are_the_transitive_reduction(r in relation(5)) {
        let l = enumerate_concepts(&ClassicContext::new(r)).unwrap();
        let extents: Vec<BTreeSet<String>> = l.concepts().iter().map(|c| names(&c.extent)).collect();
        prop_assert_eq!(l.covers().into_iter().collect::<BTreeSet<_>>(), transitive_reduction(&extents));
    }

    #[test]
    fn closure_is_a_valid_context(r in relation(5)) {
        let c = contextual_closure(&r);
        let report = validate_context(c.source_order(), c.target_order(), c.forward(), c.backward());
        prop_assert!(report.is_valid(), "{}", report);
        let (s, t) = induced_orders(&ClassicContext::new(r.clone()));
        prop_assert!(is_closed(&r, &s, &t).unwrap());
        prop_assert!(verify_sum_equations(&sum(&c).unwrap()).is_valid());
    }

    #[test]
    fn equivalence_holds(r in relation(6)) {
        let rep = verify_equivalence(&r).unwrap();
        prop_assert!(rep.is_isomorphic(), "{:?}", rep.counterexamples);
    }

    #[test]
    fn concept_images_are_valid_quadruples(r in relation(5)) {
        let ctx = ClassicContext::new(r.clone());
        let closure = contextual_closure(&r);
        let dm = dm_of_sum(&closure).unwrap();
        for c in enumerate_concepts(&ctx).unwrap().concepts() {
            prop_assert!(closure_identities(c, &ctx).unwrap().is_empty());
            let q = cl_to_dm(c, &ctx).unwrap();
            prop_assert!(validate_quad(&closure, &q).unwrap().is_empty());
            prop_assert!(dm.index_of(&q).is_some());
        }
    }

    #[test]
    fn cxt_round_trip(r in relation(6), name in "[a-z ]{0,8}") {
        let doc = ContextDocument { name, context: ClassicContext::new(r), source: None };
        let text = write_cxt(&doc);
        let again = parse_cxt(&text).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(write_cxt(&again), text);
    }

    #[test]
    fn sum_and_fibrate_are_inverse(seed in any::<u64>()) {
        let mut src = Seeded::new(seed);
        if let Some(c) = context(&mut src, 4) {
            let s = sum(&c).unwrap();
            prop_assert_eq!(&fibrate(&s).unwrap(), &c);
            prop_assert_eq!(sum(&fibrate(&s).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn completion_matches_cut_oracle(seed in any::<u64>()) {
        let p = order_from_seed(seed);
        let dm = dm_complete(&p).unwrap();
        let oracle = cut_oracle(&p).unwrap();
        prop_assert_eq!(dm.cuts(), oracle.as_slice());
        for a in p.carrier().elements() {
            for b in p.carrier().elements() {
                let (i, j) = (dm.embed(a).unwrap(), dm.embed(b).unwrap());
                prop_assert_eq!(p.leq(a, b).unwrap(), dm.leq(i, j));
            }
        }
    }
}

/// A finite lattice is its own completion: every cut is principal.
fn is_own_completion(p: &Preorder) {
    let dm = dm_complete(p).unwrap();
    assert_eq!(dm.len(), p.len());
    let images: BTreeSet<usize> = p.carrier().elements().iter().map(|x| dm.embed(x).unwrap()).collect();
    assert_eq!(images.len(), p.len());
}

#[test]
fn chains_are_their_own_completion() {
    for n in 1..=6 {
        is_own_completion(&Preorder::chain(&carrier("C", "c", n)));
    }
    assert_eq!(dm_complete(&Preorder::chain(&carrier("C", "c", 0))).unwrap().len(), 1);
}

#[test]
fn boolean_lattices_are_their_own_completion() {
    for k in 0..=4 {
        let c = carrier("B", "s", 1 << k);
        is_own_completion(&Preorder::new(Relation::from_fn(&c, &c, |i, j| i & !j == 0)).unwrap());
    }
}

#[test]
fn antichains_gain_a_top_and_bottom() {
    for k in 2..=5 {
        assert_eq!(dm_complete(&Preorder::discrete(&carrier("A", "a", k))).unwrap().len(), k + 2);
    }
}
