//! Property tests for the syntax layer.

use holkit_core::syntax::{alpha_cmp, alpha_equal, subst_term, Term, TermSubst};
use holkit_testkit::debruijn::to_db;
use holkit_testkit::gen::{gen_subst, gen_term, gen_type, Rng};
use proptest::prelude::*;

fn term_from_seed(seed: u64) -> Term {
    let mut rng = Rng::new(seed);
    let ty = gen_type(&mut rng, 2);
    let mut scope = Vec::new();
    gen_term(&mut rng, &ty, &mut scope, 4)
}

fn terms() -> impl Strategy<Value = Term> {
    any::<u64>().prop_map(term_from_seed)
}

proptest! {
    #[test]
    fn alpha_is_an_equivalence(seed in any::<u64>(), other in terms()) {
        let t = term_from_seed(seed);
        // reflexive
        prop_assert!(alpha_equal(&t, &t));
        // symmetric, through two alpha-variants of the same skeleton
        let v1 = to_db(&t).to_named("u");
        let v2 = to_db(&t).to_named("w");
        prop_assert!(alpha_equal(&t, &v1));
        prop_assert!(alpha_equal(&v1, &t));
        // transitive
        prop_assert!(alpha_equal(&v1, &v2));
        prop_assert!(alpha_equal(&t, &v2));
        // comparison is antisymmetric against an unrelated term
        prop_assert_eq!(alpha_cmp(&t, &other), alpha_cmp(&other, &t).reverse());
    }

    #[test]
    fn substitution_respects_alpha_classes(seed in any::<u64>()) {
        // substituting into alpha-equal terms gives alpha-equal results
        let t = term_from_seed(seed);
        let variant = to_db(&t).to_named("v");
        let mut rng = Rng::new(seed ^ 0x5a5a);
        let subst = gen_subst(&mut rng, &t, 3);
        prop_assert!(alpha_equal(
            &subst_term(&subst, &t),
            &subst_term(&subst, &variant)
        ));
    }

    #[test]
    fn empty_substitution_is_identity(seed in any::<u64>()) {
        let t = term_from_seed(seed);
        let empty = TermSubst::new(Vec::new()).unwrap();
        prop_assert!(alpha_equal(&subst_term(&empty, &t), &t));
    }
}
