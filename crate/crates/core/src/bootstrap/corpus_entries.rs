//! The shared benchmark corpus. Every entry builds on either kernel
//! and yields the same sequent up to alpha; the recorded traces (and
//! hence article and proof-file sizes) differ between modes.

use alloc::vec::Vec;

use super::{
    falsity, mk_conj, mk_disj, mk_exists, mk_neg, truth, CorpusEntry, Prover, Result,
};
use crate::kernel::{mk_eq, mk_forall, mk_imp, Theorem};
use crate::syntax::{Term, TermSubst, Type, TypeSubst, Var};

fn b() -> Type {
    Type::bool()
}

fn a_ty() -> Type {
    Type::var("A")
}

fn bvar(n: &str) -> Term {
    Term::var(Var::new(n, b()))
}

fn avar(n: &str) -> Term {
    Term::var(Var::new(n, a_ty()))
}

fn p() -> Term {
    bvar("p")
}

fn q() -> Term {
    bvar("q")
}

fn r() -> Term {
    bvar("r")
}

fn assume(pr: &Prover, t: &Term) -> Result<Theorem> {
    Ok(pr.ctx.assume(t)?)
}

// --- derived rules on schematic atoms ---

fn eqt_intro_imp(pr: &Prover) -> Result<Theorem> {
    // |- (p ==> p) = T
    pr.eqt_intro(&pr.disch_rule(&p(), &assume(pr, &p())?)?)
}

fn eqt_roundtrip_imp(pr: &Prover) -> Result<Theorem> {
    // |- p ==> p through an EQT_INTRO/EQT_ELIM round trip
    pr.eqt_elim(&eqt_intro_imp(pr)?)
}

fn conj_atoms(pr: &Prover) -> Result<Theorem> {
    pr.conj(&assume(pr, &p())?, &assume(pr, &q())?)
}

fn conjunct1_atom(pr: &Prover) -> Result<Theorem> {
    pr.conjunct1(&assume(pr, &mk_conj(&p(), &q()))?)
}

fn conjunct2_atom(pr: &Prover) -> Result<Theorem> {
    pr.conjunct2(&assume(pr, &mk_conj(&p(), &q()))?)
}

fn mp_atoms(pr: &Prover) -> Result<Theorem> {
    pr.mp_rule(&assume(pr, &mk_imp(&p(), &q())?)?, &assume(pr, &p())?)
}

fn disch_atom(pr: &Prover) -> Result<Theorem> {
    pr.disch_rule(&p(), &assume(pr, &p())?)
}

fn gen_refl(pr: &Prover) -> Result<Theorem> {
    let x = Var::new("x", a_ty());
    pr.gen_rule(&x, &pr.ctx.refl(&Term::var(x.clone()))?)
}

fn spec_inst(pr: &Prover) -> Result<Theorem> {
    let th = gen_refl(pr)?;
    pr.spec_rule(&avar("c"), &th)
}

fn disj1_atom(pr: &Prover) -> Result<Theorem> {
    pr.disj1(&assume(pr, &p())?, &q())
}

fn disj2_atom(pr: &Prover) -> Result<Theorem> {
    pr.disj2(&p(), &assume(pr, &q())?)
}

fn disj_cases_same(pr: &Prover) -> Result<Theorem> {
    let pp = mk_disj(&p(), &p());
    let arm = assume(pr, &p())?;
    pr.disj_cases(&assume(pr, &pp)?, &arm, &arm)
}

fn exists_intro_pred(pr: &Prover) -> Result<Theorem> {
    // {P c} |- ?x. P x
    let cap = Var::new("P", Type::fun(a_ty(), b()));
    let c = avar("c");
    let x = Var::new("x", a_ty());
    let px = Term::app_unchecked(Term::var(cap.clone()), Term::var(x.clone()));
    let goal = mk_exists(&x, &px);
    let pc = Term::app_unchecked(Term::var(cap), c.clone());
    pr.exists_intro(&goal, &c, &assume(pr, &pc)?)
}

fn choose_elim(pr: &Prover) -> Result<Theorem> {
    // {?x. P x, !x. P x ==> q} |- q
    let cap = Var::new("P", Type::fun(a_ty(), b()));
    let x = Var::new("x", a_ty());
    let v = Var::new("v", a_ty());
    let px = Term::app_unchecked(Term::var(cap.clone()), Term::var(x.clone()));
    let ex = mk_exists(&x, &px);
    let all = mk_forall(&x, &mk_imp(&px, &q())?)?;
    let pv = Term::app_unchecked(Term::var(cap), Term::var(v.clone()));
    let spec_v = pr.spec_rule(&Term::var(v.clone()), &assume(pr, &all)?)?;
    let body = pr.mp_rule(&spec_v, &assume(pr, &pv)?)?;
    pr.choose(&v, &assume(pr, &ex)?, &body)
}

fn not_intro_atom(pr: &Prover) -> Result<Theorem> {
    pr.not_intro(&assume(pr, &mk_imp(&p(), &falsity())?)?)
}

fn not_elim_atom(pr: &Prover) -> Result<Theorem> {
    pr.not_elim(&assume(pr, &mk_neg(&p()))?)
}

fn sym_atoms(pr: &Prover) -> Result<Theorem> {
    pr.sym(&assume(pr, &mk_eq(&p(), &q())?)?)
}

fn ap_term_atoms(pr: &Prover) -> Result<Theorem> {
    // {a = b} |- f a = f b  at element type A
    let f = Term::var(Var::new("f", Type::fun(a_ty(), b())));
    pr.ap_term(&f, &assume(pr, &mk_eq(&avar("a"), &avar("b"))?)?)
}

fn ap_thm_atoms(pr: &Prover) -> Result<Theorem> {
    let fg = mk_eq(
        &Term::var(Var::new("f", Type::fun(a_ty(), b()))),
        &Term::var(Var::new("g", Type::fun(a_ty(), b()))),
    )?;
    pr.ap_thm(&assume(pr, &fg)?, &avar("a"))
}

// --- classic lemmas ---

fn conj_comm(pr: &Prover) -> Result<Theorem> {
    let asm = assume(pr, &mk_conj(&p(), &q()))?;
    pr.conj(&pr.conjunct2(&asm)?, &pr.conjunct1(&asm)?)
}

fn conj_assoc(pr: &Prover) -> Result<Theorem> {
    // {p /\ (q /\ r)} |- (p /\ q) /\ r
    let asm = assume(pr, &mk_conj(&p(), &mk_conj(&q(), &r())))?;
    let pp = pr.conjunct1(&asm)?;
    let qr = pr.conjunct2(&asm)?;
    let qq = pr.conjunct1(&qr)?;
    let rr = pr.conjunct2(&qr)?;
    pr.conj(&pr.conj(&pp, &qq)?, &rr)
}

fn conj_rebuild(pr: &Prover) -> Result<Theorem> {
    let asm = assume(pr, &mk_conj(&p(), &q()))?;
    pr.conj(&pr.conjunct1(&asm)?, &pr.conjunct2(&asm)?)
}

fn conj_truth(pr: &Prover) -> Result<Theorem> {
    let t = pr.truth_thm()?;
    pr.conj(&t, &t)
}

fn imp_trans(pr: &Prover) -> Result<Theorem> {
    let pq = assume(pr, &mk_imp(&p(), &q())?)?;
    let qr = assume(pr, &mk_imp(&q(), &r())?)?;
    let chained = pr.mp_rule(&qr, &pr.mp_rule(&pq, &assume(pr, &p())?)?)?;
    pr.disch_rule(&p(), &chained)
}

fn imp_swap(pr: &Prover) -> Result<Theorem> {
    // {p ==> (q ==> r)} |- q ==> (p ==> r)
    let asm = assume(pr, &mk_imp(&p(), &mk_imp(&q(), &r())?)?)?;
    let step = pr.mp_rule(
        &pr.mp_rule(&asm, &assume(pr, &p())?)?,
        &assume(pr, &q())?,
    )?;
    pr.disch_rule(&q(), &pr.disch_rule(&p(), &step)?)
}

fn imp_conj(pr: &Prover) -> Result<Theorem> {
    // {p} |- q ==> (p /\ q)
    let c = pr.conj(&assume(pr, &p())?, &assume(pr, &q())?)?;
    pr.disch_rule(&q(), &c)
}

fn and_imp_curry(pr: &Prover) -> Result<Theorem> {
    // {(p /\ q) ==> r} |- p ==> (q ==> r)
    let asm = assume(pr, &mk_imp(&mk_conj(&p(), &q()), &r())?)?;
    let c = pr.conj(&assume(pr, &p())?, &assume(pr, &q())?)?;
    let rr = pr.mp_rule(&asm, &c)?;
    pr.disch_rule(&p(), &pr.disch_rule(&q(), &rr)?)
}

fn or_intro_imp(pr: &Prover) -> Result<Theorem> {
    // |- p ==> (p \/ q)
    pr.disch_rule(&p(), &pr.disj1(&assume(pr, &p())?, &q())?)
}

fn disj_comm(pr: &Prover) -> Result<Theorem> {
    let asm = assume(pr, &mk_disj(&p(), &q()))?;
    let left = pr.disj2(&q(), &assume(pr, &p())?)?;
    let right = pr.disj1(&assume(pr, &q())?, &p())?;
    pr.disj_cases(&asm, &left, &right)
}

fn not_false(pr: &Prover) -> Result<Theorem> {
    // |- ~F
    let ff = pr.disch_rule(&falsity(), &assume(pr, &falsity())?)?;
    pr.not_intro(&ff)
}

fn not_not_intro(pr: &Prover) -> Result<Theorem> {
    // {p} |- ~~p
    let np = mk_neg(&p());
    let contra = pr.mp_rule(&pr.not_elim(&assume(pr, &np)?)?, &assume(pr, &p())?)?;
    pr.not_intro(&pr.disch_rule(&np, &contra)?)
}

fn contrapos(pr: &Prover) -> Result<Theorem> {
    // {p ==> q} |- ~q ==> ~p
    let nq = mk_neg(&q());
    let qq = pr.mp_rule(&assume(pr, &mk_imp(&p(), &q())?)?, &assume(pr, &p())?)?;
    let ff = pr.mp_rule(&pr.not_elim(&assume(pr, &nq)?)?, &qq)?;
    let np = pr.not_intro(&pr.disch_rule(&p(), &ff)?)?;
    pr.disch_rule(&nq, &np)
}

fn false_elim(pr: &Prover) -> Result<Theorem> {
    // {F} |- p
    let unfold = pr.unfold_def(&pr.table.falsity_def, &[])?;
    let all = pr.ctx.eq_mp(&unfold, &assume(pr, &falsity())?)?;
    pr.spec_rule(&p(), &all)
}

fn ex_falso_imp(pr: &Prover) -> Result<Theorem> {
    pr.disch_rule(&falsity(), &false_elim(pr)?)
}

// --- equality and lambda lemmas ---

fn beta_id(pr: &Prover) -> Result<Theorem> {
    // |- (\x. x) y = y  at bool
    let x = Var::new("x", b());
    let id = Term::abs(x.clone(), Term::var(x));
    Ok(pr.ctx.beta(&Term::app_unchecked(id, bvar("y")))?)
}

fn beta_const(pr: &Prover) -> Result<Theorem> {
    // |- (\x. c) y = c
    let x = Var::new("x", b());
    let k = Term::abs(x, bvar("c"));
    Ok(pr.ctx.beta(&Term::app_unchecked(k, bvar("y")))?)
}

fn beta_eta_like(pr: &Prover) -> Result<Theorem> {
    // |- (\x. f x) y = f y  by pure beta
    let x = Var::new("x", b());
    let f = Term::var(Var::new("f", Type::fun(b(), b())));
    let lam = Term::abs(x.clone(), Term::app_unchecked(f, Term::var(x)));
    Ok(pr.ctx.beta(&Term::app_unchecked(lam, bvar("y")))?)
}

fn refl_lambda(pr: &Prover) -> Result<Theorem> {
    let x = Var::new("x", b());
    pr.ctx.refl(&Term::abs(x.clone(), Term::var(x))).map_err(Into::into)
}

fn trans_chain(pr: &Prover) -> Result<Theorem> {
    let ab = assume(pr, &mk_eq(&bvar("a"), &bvar("b"))?)?;
    let bc = assume(pr, &mk_eq(&bvar("b"), &bvar("c"))?)?;
    pr.ctx.trans(&ab, &bc).map_err(Into::into)
}

fn eq_mp_atoms(pr: &Prover) -> Result<Theorem> {
    let pq = assume(pr, &mk_eq(&p(), &q())?)?;
    pr.ctx.eq_mp(&pq, &assume(pr, &p())?).map_err(Into::into)
}

fn deduct_same(pr: &Prover) -> Result<Theorem> {
    let a = assume(pr, &p())?;
    pr.ctx.deduct_antisym(&a, &a).map_err(Into::into)
}

fn inst_refl(pr: &Prover) -> Result<Theorem> {
    // |- c = c by instantiating |- x = x
    let x = Var::new("x", b());
    let th = pr.ctx.refl(&Term::var(x.clone()))?;
    let sub = TermSubst::single(x, bvar("c")).expect("types match");
    pr.ctx.inst(&sub, &th).map_err(Into::into)
}

fn inst_type_refl(pr: &Prover) -> Result<Theorem> {
    // |- (x:bool) = x from |- (x:A) = x
    let x = Var::new("x", a_ty());
    let th = pr.ctx.refl(&Term::var(x))?;
    let sub = TypeSubst::single("A", b());
    pr.ctx.inst_type(&sub, &th).map_err(Into::into)
}

fn mk_comb_pair(pr: &Prover) -> Result<Theorem> {
    // {a = b} |- f a = f b through the primitive rule
    let f = Term::var(Var::new("f", Type::fun(b(), b())));
    let fg = pr.ctx.refl(&f)?;
    let ab = assume(pr, &mk_eq(&bvar("a"), &bvar("b"))?)?;
    pr.ctx.mk_comb(&fg, &ab).map_err(Into::into)
}

fn abs_refl(pr: &Prover) -> Result<Theorem> {
    // |- (\x. x = x) = (\x. x = x) via ABS over refl
    let x = Var::new("x", a_ty());
    let inner = pr.ctx.refl(&mk_eq(&Term::var(x.clone()), &Term::var(x.clone()))?)?;
    pr.ctx.abs(&x, &inner).map_err(Into::into)
}

// --- quantifier lemmas ---

fn forall_imp_inst(pr: &Prover) -> Result<Theorem> {
    // {!x. P x} |- P c
    let cap = Var::new("P", Type::fun(a_ty(), b()));
    let x = Var::new("x", a_ty());
    let px = Term::app_unchecked(Term::var(cap), Term::var(x.clone()));
    let all = mk_forall(&x, &px)?;
    pr.spec_rule(&avar("c"), &assume(pr, &all)?)
}

fn forall_elim_imp(pr: &Prover) -> Result<Theorem> {
    // |- (!x. P x) ==> P c
    pr.disch_rule(
        &mk_forall(
            &Var::new("x", a_ty()),
            &Term::app_unchecked(
                Term::var(Var::new("P", Type::fun(a_ty(), b()))),
                Term::var(Var::new("x", a_ty())),
            ),
        )?,
        &forall_imp_inst(pr)?,
    )
}

fn forall_swap(pr: &Prover) -> Result<Theorem> {
    // {!x. !y. R x y} |- !y. !x. R x y
    let rel = Var::new("R", Type::fun(a_ty(), Type::fun(a_ty(), b())));
    let x = Var::new("x", a_ty());
    let y = Var::new("y", a_ty());
    let rxy = Term::app_unchecked(
        Term::app_unchecked(Term::var(rel), Term::var(x.clone())),
        Term::var(y.clone()),
    );
    let all = mk_forall(&x, &mk_forall(&y, &rxy)?)?;
    let asm = assume(pr, &all)?;
    let inner = pr.spec_rule(&Term::var(y.clone()), &pr.spec_rule(&Term::var(x.clone()), &asm)?)?;
    pr.gen_rule(&y, &pr.gen_rule(&x, &inner)?)
}

fn gen_truth(pr: &Prover) -> Result<Theorem> {
    // |- !x:bool. T
    pr.gen_rule(&Var::new("x", b()), &pr.truth_thm()?)
}

fn exists_bool_truth(pr: &Prover) -> Result<Theorem> {
    // |- ?x:bool. x  witnessed by T
    let x = Var::new("x", b());
    let goal = mk_exists(&x, &Term::var(x.clone()));
    pr.exists_intro(&goal, &truth(), &pr.truth_thm()?)
}

fn exists_conj_left(pr: &Prover) -> Result<Theorem> {
    // {p /\ q} |- ?x:bool. p /\ x
    let x = Var::new("x", b());
    let goal = mk_exists(&x, &mk_conj(&p(), &Term::var(x.clone())));
    let asm = assume(pr, &mk_conj(&p(), &q()))?;
    pr.exists_intro(&goal, &q(), &asm)
}

fn imp_refl_forall(pr: &Prover) -> Result<Theorem> {
    // |- !x:bool. x ==> x
    let x = Var::new("x", b());
    let body = pr.disch_rule(&Term::var(x.clone()), &assume(pr, &Term::var(x.clone()))?)?;
    pr.gen_rule(&x, &body)
}

fn conj_imp_both(pr: &Prover) -> Result<Theorem> {
    // |- (p /\ q) ==> (q /\ p)
    pr.disch_rule(&mk_conj(&p(), &q()), &conj_comm(pr)?)
}

fn or_elim_to_imp(pr: &Prover) -> Result<Theorem> {
    // {p \/ p} |- p ==> p is boring; instead: |- (p \/ p) ==> p
    pr.disch_rule(&mk_disj(&p(), &p()), &disj_cases_same(pr)?)
}

fn not_elim_mp(pr: &Prover) -> Result<Theorem> {
    // {~p, p} |- F
    pr.mp_rule(&not_elim_atom(pr)?, &assume(pr, &p())?)
}

pub fn corpus() -> Vec<CorpusEntry> {
    macro_rules! entries {
        ($($name:literal => $f:ident),+ $(,)?) => {
            alloc::vec![$(CorpusEntry { name: $name, build: $f }),+]
        };
    }
    entries![
        "eqt_intro_imp" => eqt_intro_imp,
        "eqt_roundtrip_imp" => eqt_roundtrip_imp,
        "conj_atoms" => conj_atoms,
        "conjunct1_atom" => conjunct1_atom,
        "conjunct2_atom" => conjunct2_atom,
        "conj_comm" => conj_comm,
        "conj_assoc" => conj_assoc,
        "conj_rebuild" => conj_rebuild,
        "conj_truth" => conj_truth,
        "conj_imp_both" => conj_imp_both,
        "mp_atoms" => mp_atoms,
        "disch_atom" => disch_atom,
        "imp_trans" => imp_trans,
        "imp_swap" => imp_swap,
        "imp_conj" => imp_conj,
        "and_imp_curry" => and_imp_curry,
        "gen_refl" => gen_refl,
        "spec_inst" => spec_inst,
        "forall_imp_inst" => forall_imp_inst,
        "forall_elim_imp" => forall_elim_imp,
        "forall_swap" => forall_swap,
        "gen_truth" => gen_truth,
        "imp_refl_forall" => imp_refl_forall,
        "disj1_atom" => disj1_atom,
        "disj2_atom" => disj2_atom,
        "disj_cases_same" => disj_cases_same,
        "disj_comm" => disj_comm,
        "or_intro_imp" => or_intro_imp,
        "or_elim_to_imp" => or_elim_to_imp,
        "exists_intro_pred" => exists_intro_pred,
        "exists_bool_truth" => exists_bool_truth,
        "exists_conj_left" => exists_conj_left,
        "choose_elim" => choose_elim,
        "not_intro_atom" => not_intro_atom,
        "not_elim_atom" => not_elim_atom,
        "not_false" => not_false,
        "not_not_intro" => not_not_intro,
        "not_elim_mp" => not_elim_mp,
        "contrapos" => contrapos,
        "false_elim" => false_elim,
        "ex_falso_imp" => ex_falso_imp,
        "sym_atoms" => sym_atoms,
        "ap_term_atoms" => ap_term_atoms,
        "ap_thm_atoms" => ap_thm_atoms,
        "beta_id" => beta_id,
        "beta_const" => beta_const,
        "beta_eta_like" => beta_eta_like,
        "refl_lambda" => refl_lambda,
        "trans_chain" => trans_chain,
        "eq_mp_atoms" => eq_mp_atoms,
        "deduct_same" => deduct_same,
        "inst_refl" => inst_refl,
        "inst_type_refl" => inst_type_refl,
        "mk_comb_pair" => mk_comb_pair,
        "abs_refl" => abs_refl,
    ]
}
