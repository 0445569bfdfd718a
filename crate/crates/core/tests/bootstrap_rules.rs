//! Derived-rule and corpus checks across both kernel modes.

use holkit_core::bootstrap::{
    corpus, derive, falsity, install_connectives, mk_conj, mk_neg, truth, BootstrapError,
    DeriveArg, Prover,
};
use holkit_core::kernel::{
    dest_eq, mk_eq, mk_forall, mk_imp, KernelContext, KernelError, Mode, Theorem,
};
use holkit_core::syntax::{alpha_equal, Term, Type, Var};
use holkit_testkit::truthtable::is_tautology;

fn bvar(n: &str) -> Term {
    Term::var(Var::new(n, Type::bool()))
}

fn provers() -> (Prover, Prover) {
    (
        Prover::new(Mode::Minimal).unwrap(),
        Prover::new(Mode::Extended).unwrap(),
    )
}

#[test]
fn connective_definitions_match_both_modes() {
    let (min, ext) = provers();

    // extended truth: |- T = !(\x:bool. x ==> x)
    let x = Var::new("x", Type::bool());
    let expected = mk_eq(
        &truth(),
        &mk_forall(&x, &mk_imp(&Term::var(x.clone()), &Term::var(x.clone())).unwrap()).unwrap(),
    )
    .unwrap();
    assert!(alpha_equal(ext.table.truth_def.concl(), &expected));

    // minimal implication: |- (==>) = \p q. (p /\ q) = p
    let p = Var::new("p", Type::bool());
    let q = Var::new("q", Type::bool());
    let imp_rhs = Term::abs(
        p.clone(),
        Term::abs(
            q.clone(),
            mk_eq(&mk_conj(&Term::var(p.clone()), &Term::var(q)), &Term::var(p)).unwrap(),
        ),
    );
    let imp_def = min.table.imp_def.as_ref().unwrap();
    let (_, rhs) = dest_eq(imp_def.concl()).unwrap();
    assert!(alpha_equal(rhs, &imp_rhs));

    // installing twice clashes
    let mut ctx = KernelContext::new(Mode::Minimal);
    install_connectives(&mut ctx).unwrap();
    assert!(matches!(
        install_connectives(&mut ctx),
        Err(BootstrapError::Kernel(KernelError::NameClash(_)))
    ));
}

#[test]
fn defining_theorems_are_closed_and_boolean() {
    for mode in [Mode::Minimal, Mode::Extended] {
        let p = Prover::new(mode).unwrap();
        let mut defs: Vec<&Theorem> = vec![
            &p.table.truth_def,
            &p.table.falsity_def,
            &p.table.conj_def,
            &p.table.disj_def,
            &p.table.neg_def,
            &p.table.exists_def,
        ];
        defs.extend(p.table.imp_def.iter());
        defs.extend(p.table.forall_def.iter());
        for d in defs {
            assert!(d.hyps().is_empty());
            assert!(d.concl().type_of().unwrap().is_bool());
            assert!(d.concl().free_vars().is_empty());
            p.ctx.validate_term(d.concl()).unwrap();
        }
    }
}

#[test]
fn dual_kernel_corpus_agreement_and_step_dominance() {
    let (min, ext) = provers();
    let entries = corpus();
    assert!(entries.len() >= 40, "corpus must have at least 40 entries");
    let mut strict = 0usize;
    for e in &entries {
        let a = (e.build)(&min).unwrap_or_else(|err| panic!("{} minimal: {:?}", e.name, err));
        let b = (e.build)(&ext).unwrap_or_else(|err| panic!("{} extended: {:?}", e.name, err));
        assert!(
            a.alpha_eq_sequent(&b),
            "{}: sequents differ\n  minimal:  {}\n  extended: {}",
            e.name,
            a,
            b
        );
        assert!(
            b.step_count() <= a.step_count(),
            "{}: extended trace ({}) larger than minimal ({})",
            e.name,
            b.step_count(),
            a.step_count()
        );
        if b.step_count() < a.step_count() {
            strict += 1;
        }
    }
    // entries that exercise implication/quantifier reasoning must be
    // strictly smaller on the extended kernel
    assert!(strict * 2 > entries.len(), "no broad strict improvement");
}

#[test]
fn step_ratios_for_conj_and_disj1() {
    let (min, ext) = provers();
    let p = bvar("p");
    let q = bvar("q");
    let conj_min = min.conj(&min.ctx.assume(&p).unwrap(), &min.ctx.assume(&q).unwrap()).unwrap();
    let conj_ext = ext.conj(&ext.ctx.assume(&p).unwrap(), &ext.ctx.assume(&q).unwrap()).unwrap();
    let r1 = conj_ext.step_count() as f64 / conj_min.step_count() as f64;
    assert!(r1 <= 0.75, "CONJ ratio {} (ext {} / min {})", r1, conj_ext.step_count(), conj_min.step_count());

    let disj_min = min.disj1(&min.ctx.assume(&p).unwrap(), &q).unwrap();
    let disj_ext = ext.disj1(&ext.ctx.assume(&p).unwrap(), &q).unwrap();
    let r2 = disj_ext.step_count() as f64 / disj_min.step_count() as f64;
    assert!(r2 <= 0.50, "DISJ1 ratio {} (ext {} / min {})", r2, disj_ext.step_count(), disj_min.step_count());
}

#[test]
fn empty_hyp_corpus_conclusions_are_tautologies() {
    // the finite-model evaluator covers every conclusion whose types
    // are built from bool; the others fall outside the fragment
    let (min, _) = provers();
    let mut checked = 0;
    for e in corpus() {
        let th = (e.build)(&min).unwrap();
        if !th.hyps().is_empty() {
            continue;
        }
        if let Some(taut) = is_tautology(th.concl()) {
            assert!(taut, "{}: conclusion {} is not a tautology", e.name, th.concl());
            checked += 1;
        }
    }
    assert!(checked >= 5, "too few conclusions in the finite fragment: {}", checked);
}

#[test]
fn sequents_match_their_schemas() {
    for mode in [Mode::Minimal, Mode::Extended] {
        let pr = Prover::new(mode).unwrap();
        let p = bvar("p");
        let q = bvar("q");

        let conj = pr.conj(&pr.ctx.assume(&p).unwrap(), &pr.ctx.assume(&q).unwrap()).unwrap();
        assert!(alpha_equal(conj.concl(), &mk_conj(&p, &q)));
        assert_eq!(conj.hyps().len(), 2);

        let c1 = pr.conjunct1(&pr.ctx.assume(&mk_conj(&p, &q)).unwrap()).unwrap();
        assert!(alpha_equal(c1.concl(), &p));
        let c2 = pr.conjunct2(&pr.ctx.assume(&mk_conj(&p, &q)).unwrap()).unwrap();
        assert!(alpha_equal(c2.concl(), &q));

        let mp = pr
            .mp_rule(
                &pr.ctx.assume(&mk_imp(&p, &q).unwrap()).unwrap(),
                &pr.ctx.assume(&p).unwrap(),
            )
            .unwrap();
        assert!(alpha_equal(mp.concl(), &q));

        let di = pr.disch_rule(&p, &pr.ctx.assume(&p).unwrap()).unwrap();
        assert!(di.hyps().is_empty());
        assert!(alpha_equal(di.concl(), &mk_imp(&p, &p).unwrap()));

        // gen/spec round trip
        let x = Var::new("x", Type::var("A"));
        let refl = pr.ctx.refl(&Term::var(x.clone())).unwrap();
        let gen = pr.gen_rule(&x, &refl).unwrap();
        let back = pr.spec_rule(&Term::var(x.clone()), &gen).unwrap();
        assert!(back.alpha_eq_sequent(&refl));

        // disch/mp round trip over an assumption
        let th = pr.ctx.assume(&p).unwrap();
        let rt = pr.mp_rule(&pr.disch_rule(&p, &th).unwrap(), &pr.ctx.assume(&p).unwrap()).unwrap();
        assert!(rt.alpha_eq_sequent(&th));

        // negation pair
        let ni = pr.not_intro(&pr.ctx.assume(&mk_imp(&p, &falsity()).unwrap()).unwrap()).unwrap();
        assert!(alpha_equal(ni.concl(), &mk_neg(&p)));
        let ne = pr.not_elim(&pr.ctx.assume(&mk_neg(&p)).unwrap()).unwrap();
        assert!(alpha_equal(ne.concl(), &mk_imp(&p, &falsity()).unwrap()));
    }
}

#[test]
fn derive_dispatcher_covers_rules_and_rejects_junk() {
    let (_, ext) = provers();
    let p = bvar("p");
    let th = ext.ctx.assume(&p).unwrap();
    let out = derive(&ext, "EQT_INTRO", &[DeriveArg::Thm(th.clone())]).unwrap();
    assert!(alpha_equal(out.concl(), &mk_eq(&p, &truth()).unwrap()));

    assert!(matches!(
        derive(&ext, "NO_SUCH_RULE", &[]),
        Err(BootstrapError::UnknownRule(_))
    ));
    assert!(matches!(
        derive(&ext, "CONJ", &[DeriveArg::Thm(th.clone())]),
        Err(BootstrapError::BadArity { .. })
    ));
    // schema mismatch: CONJUNCT1 on a non-conjunction
    assert!(matches!(
        derive(&ext, "CONJUNCT1", &[DeriveArg::Thm(th)]),
        Err(BootstrapError::SchemaMismatch(_))
    ));
}

#[test]
fn legacy_definitions_need_extended_mode_and_eta() {
    let min = Prover::new(Mode::Minimal).unwrap();
    assert!(matches!(
        min.prove_legacy_definitions(),
        Err(BootstrapError::Kernel(KernelError::WrongMode))
    ));

    let ext = Prover::new(Mode::Extended).unwrap();
    assert!(matches!(
        ext.prove_legacy_definitions(),
        Err(BootstrapError::MissingAxiom)
    ));
}

#[test]
fn legacy_definitions_match_the_minimal_table() {
    let mut ext = Prover::new(Mode::Extended).unwrap();
    ext.install_eta_axiom().unwrap();
    let (forall_thm, imp_thm) = ext.prove_legacy_definitions().unwrap();

    assert!(forall_thm.hyps().is_empty());
    assert!(imp_thm.hyps().is_empty());

    // shapes match the minimal-mode definitional equations
    let min = Prover::new(Mode::Minimal).unwrap();
    let min_forall = min.table.forall_def.as_ref().unwrap();
    let min_imp = min.table.imp_def.as_ref().unwrap();
    assert!(
        alpha_equal(forall_thm.concl(), min_forall.concl()),
        "forall: proved {} expected {}",
        forall_thm.concl(),
        min_forall.concl()
    );
    assert!(
        alpha_equal(imp_thm.concl(), min_imp.concl()),
        "imp: proved {} expected {}",
        imp_thm.concl(),
        min_imp.concl()
    );
}

#[test]
fn eqt_rules_compose() {
    for mode in [Mode::Minimal, Mode::Extended] {
        let pr = Prover::new(mode).unwrap();
        let p = bvar("p");
        let th = pr.ctx.assume(&p).unwrap();
        let round = pr.eqt_elim(&pr.eqt_intro(&th).unwrap()).unwrap();
        assert!(round.alpha_eq_sequent(&th));
    }
}
