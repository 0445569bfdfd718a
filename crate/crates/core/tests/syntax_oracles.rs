//! Oracle checks for the syntax layer against the independent
//! de Bruijn model.

use holkit_core::syntax::{
    alpha_equal, beta_contract, fresh_variant, subst_term, subst_type, Term, TermSubst, Type,
    TypeSubst, Var,
};
use holkit_testkit::debruijn::{alpha_eq_oracle, to_db};
use holkit_testkit::gen::{gen_subst, gen_term, gen_type, Rng};

fn random_term(seed: u64) -> Term {
    let mut rng = Rng::new(seed);
    let ty = gen_type(&mut rng, 2);
    let mut scope = Vec::new();
    gen_term(&mut rng, &ty, &mut scope, 4)
}

#[test]
fn alpha_equal_agrees_with_de_bruijn_on_1000_pairs() {
    for seed in 0..1000u64 {
        let s = random_term(seed);
        // half the pairs share a seed region so equal terms do occur
        let t = random_term(seed / 2);
        assert_eq!(
            alpha_equal(&s, &t),
            alpha_eq_oracle(&s, &t),
            "disagreement on seed {}: {} vs {}",
            seed,
            s,
            t
        );
        assert!(alpha_equal(&s, &s));
    }
}

#[test]
fn subst_term_agrees_with_de_bruijn_on_1000_cases() {
    for seed in 0..1000u64 {
        let t = random_term(seed);
        let mut rng = Rng::new(seed.wrapping_add(0xabcdef));
        let subst = gen_subst(&mut rng, &t, 3);
        let ours = subst_term(&subst, &t);
        let db_map: Vec<_> = subst
            .pairs()
            .iter()
            .map(|(v, r)| (v.clone(), to_db(r)))
            .collect();
        let oracle = to_db(&t).subst_free(&db_map);
        assert_eq!(to_db(&ours), oracle, "seed {}: {} under {:?}", seed, t, subst);
    }
}

#[test]
fn subst_preserves_type() {
    for seed in 0..300u64 {
        let t = random_term(seed);
        let mut rng = Rng::new(seed.wrapping_add(17));
        let subst = gen_subst(&mut rng, &t, 3);
        let before = t.type_of().unwrap();
        let after = subst_term(&subst, &t).type_of().unwrap();
        assert_eq!(before, after);
    }
}

#[test]
fn free_vars_law_under_substitution() {
    for seed in 0..300u64 {
        let t = random_term(seed);
        let mut rng = Rng::new(seed.wrapping_add(99));
        let subst = gen_subst(&mut rng, &t, 3);
        let result = subst_term(&subst, &t);
        let mut allowed = t.free_vars();
        for (v, r) in subst.pairs() {
            allowed.remove(v);
            allowed.extend(r.free_vars());
        }
        for v in result.free_vars() {
            assert!(allowed.contains(&v), "seed {}: stray free var {:?}", seed, v);
        }
    }
}

#[test]
fn composition_of_disjoint_substitutions() {
    for seed in 0..300u64 {
        let t = random_term(seed);
        let fv: Vec<Var> = t.free_vars().into_iter().collect();
        if fv.len() < 2 {
            continue;
        }
        // two single-variable substitutions with ranges disjoint from
        // both domains: map each to a constant of the same type
        let s1 = TermSubst::single(fv[0].clone(), Term::constant("c1", fv[0].ty.clone())).unwrap();
        let s2 = TermSubst::single(fv[1].clone(), Term::constant("c2", fv[1].ty.clone())).unwrap();
        let seq = subst_term(&s2, &subst_term(&s1, &t));
        let combined = TermSubst::new(vec![
            (fv[0].clone(), Term::constant("c1", fv[0].ty.clone())),
            (fv[1].clone(), Term::constant("c2", fv[1].ty.clone())),
        ])
        .unwrap();
        let simultaneous = subst_term(&combined, &t);
        assert!(alpha_equal(&seq, &simultaneous), "seed {}", seed);
    }
}

#[test]
fn beta_contract_agrees_with_de_bruijn() {
    let mut checked = 0;
    for seed in 0..4000u64 {
        let mut rng = Rng::new(seed);
        // force a redex: build \x:ty. body applied to an argument
        let arg_ty = gen_type(&mut rng, 1);
        let body_ty = gen_type(&mut rng, 1);
        let x = Var::new(["x", "y"][rng.below(2)], arg_ty.clone());
        let mut scope = vec![x.clone()];
        let body = gen_term(&mut rng, &body_ty, &mut scope, 3);
        let mut scope2 = Vec::new();
        let arg = gen_term(&mut rng, &arg_ty, &mut scope2, 3);
        let redex = Term::app(Term::abs(x, body), arg).unwrap();
        let ours = beta_contract(&redex).unwrap();
        let oracle = to_db(&redex).beta().expect("redex by construction");
        assert_eq!(to_db(&ours), oracle, "seed {}: {}", seed, redex);
        checked += 1;
    }
    assert!(checked >= 1000);
}

#[test]
fn subst_type_commutes_with_type_of() {
    for seed in 0..500u64 {
        let t = random_term(seed);
        let mut rng = Rng::new(seed.wrapping_add(7));
        let target = gen_type(&mut rng, 1);
        let subst = TypeSubst::single("A", target);
        let out = subst_type(&subst, &t);
        assert_eq!(out.type_of().unwrap(), subst.apply(&t.type_of().unwrap()));
        // and the de Bruijn model agrees on the whole term
        assert_eq!(to_db(&out), to_db(&t).map_types(&subst), "seed {}", seed);
    }
}

#[test]
fn fresh_variant_is_fresh() {
    for seed in 0..500u64 {
        let t = random_term(seed);
        let avoid = t.free_vars();
        for v in &avoid {
            let fresh = fresh_variant(&avoid, v);
            assert!(!avoid.contains(&fresh));
            assert_eq!(fresh.ty, v.ty);
        }
    }
}
