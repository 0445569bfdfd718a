//! Connectives, derived inference rules and the benchmark corpus.
//!
//! `install_connectives` defines the logical constants for the active
//! kernel mode. In minimal mode everything reduces to equality: truth
//! is the identity-function equation, conjunction the pairing trick,
//! and implication and the universal quantifier are themselves defined
//! constants. In extended mode implication and the quantifier are
//! kernel primitives and the remaining connectives are defined through
//! them.
//!
//! The derived rules are written once against the mode-dispatching
//! `mp_rule`/`disch_rule`/`gen_rule`/`spec_rule`, so the same script
//! produces alpha-equal sequents on both kernels while the recorded
//! primitive-step traces differ — which is exactly what the benchmark
//! measures.
//!
//! Conjunction in extended mode is `\p q. !r. (p ==> (q ==> r)) ==> r`.
//! The flat variant `\p q. !r. p ==> ((q ==> r) ==> r)` does not admit
//! the left projection; see `docs/connectives.md`.

use alloc::borrow::ToOwned;
use alloc::string::String;

use crate::kernel::{
    dest_eq, dest_forall, dest_imp, mk_eq, mk_forall, mk_imp, KernelContext, KernelError, Mode,
    Theorem, FORALL, IMP,
};
use crate::syntax::{
    alpha_equal, Term, TermSubst, Type, TypeSubst, Var,
};

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BootstrapError {
    Kernel(KernelError),
    /// Arguments do not match the rule's sequent schema.
    SchemaMismatch(&'static str),
    MissingAxiom,
    UnknownRule(String),
    BadArity { rule: String, expected: usize, got: usize },
}

impl From<KernelError> for BootstrapError {
    fn from(e: KernelError) -> Self {
        BootstrapError::Kernel(e)
    }
}

impl fmt::Display for BootstrapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BootstrapError::Kernel(e) => write!(f, "{}", e),
            BootstrapError::SchemaMismatch(rule) => {
                write!(f, "arguments do not match the {} schema", rule)
            }
            BootstrapError::MissingAxiom => write!(f, "extensionality axiom not installed"),
            BootstrapError::UnknownRule(r) => write!(f, "unknown derived rule {}", r),
            BootstrapError::BadArity { rule, expected, got } => {
                write!(f, "{} expects {} arguments, got {}", rule, expected, got)
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, BootstrapError>;

pub const TRUTH_C: &str = "T";
pub const FALSITY_C: &str = "F";
pub const CONJ_C: &str = "/\\";
pub const DISJ_C: &str = "\\/";
pub const NEG_C: &str = "~";
pub const EXISTS_C: &str = "?";

fn bool_ty() -> Type {
    Type::bool()
}

fn bool2() -> Type {
    Type::fun(bool_ty(), bool_ty())
}

fn bool3() -> Type {
    Type::fun(bool_ty(), bool2())
}

pub fn truth() -> Term {
    Term::constant(TRUTH_C, bool_ty())
}

pub fn falsity() -> Term {
    Term::constant(FALSITY_C, bool_ty())
}

fn binop(c: &str, p: &Term, q: &Term) -> Term {
    Term::app_unchecked(
        Term::app_unchecked(Term::constant(c, bool3()), p.clone()),
        q.clone(),
    )
}

pub fn mk_conj(p: &Term, q: &Term) -> Term {
    binop(CONJ_C, p, q)
}

pub fn mk_disj(p: &Term, q: &Term) -> Term {
    binop(DISJ_C, p, q)
}

pub fn mk_neg(p: &Term) -> Term {
    Term::app_unchecked(Term::constant(NEG_C, bool2()), p.clone())
}

/// `?(\x. body)`.
pub fn mk_exists(x: &Var, body: &Term) -> Term {
    let c = Term::constant(
        EXISTS_C,
        Type::fun(Type::fun(x.ty.clone(), bool_ty()), bool_ty()),
    );
    Term::app_unchecked(c, Term::abs(x.clone(), body.clone()))
}

pub fn dest_conj(t: &Term) -> Option<(&Term, &Term)> {
    t.dest_binop(CONJ_C)
}

pub fn dest_disj(t: &Term) -> Option<(&Term, &Term)> {
    t.dest_binop(DISJ_C)
}

pub fn dest_neg(t: &Term) -> Option<&Term> {
    let (f, a) = t.dest_app()?;
    match f.kind() {
        crate::syntax::TermKind::Const(n, _) if n == NEG_C => Some(a),
        _ => None,
    }
}

/// The defining theorems of the connectives installed in a context.
/// `imp_def`/`forall_def` are present only in minimal mode, where the
/// two symbols are defined rather than primitive; bi-implication is
/// equality at bool in both modes and needs no entry.
#[derive(Debug, Clone)]
pub struct Connectives {
    pub truth_def: Theorem,
    pub falsity_def: Theorem,
    pub conj_def: Theorem,
    pub disj_def: Theorem,
    pub neg_def: Theorem,
    /// Generic over the element type `A`.
    pub exists_def: Theorem,
    pub imp_def: Option<Theorem>,
    /// Generic over the element type `A`.
    pub forall_def: Option<Theorem>,
}

fn var(n: &str, ty: Type) -> Var {
    Var::new(n, ty)
}

fn tvar(n: &str, ty: Type) -> Term {
    Term::var(Var::new(n, ty))
}

/// Defines the connectives for the context's mode, in dependency
/// order. Fails with `NameClash` when called twice on one context.
pub fn install_connectives(ctx: &mut KernelContext) -> Result<Connectives> {
    let p = var("p", bool_ty());
    let q = var("q", bool_ty());
    let r = var("r", bool_ty());
    let x_bool = var("x", bool_ty());
    let a_ty = Type::var("A");
    let x_a = var("x", a_ty.clone());
    let cap_p = var("P", Type::fun(a_ty.clone(), bool_ty()));

    match ctx.mode() {
        Mode::Minimal => {
            // T = ((\p. p) = (\p. p))
            let idb = Term::abs(p.clone(), Term::var(p.clone()));
            let (_, truth_def) = ctx.define_const(TRUTH_C, &mk_eq(&idb, &idb)?)?;

            // /\ = \p q. (\f. f p q) = (\f. f T T)
            let f = var("f", bool3());
            let fpq = Term::app_unchecked(
                Term::app_unchecked(Term::var(f.clone()), Term::var(p.clone())),
                Term::var(q.clone()),
            );
            let ftt = Term::app_unchecked(
                Term::app_unchecked(Term::var(f.clone()), truth()),
                truth(),
            );
            let conj_rhs = Term::abs(
                p.clone(),
                Term::abs(
                    q.clone(),
                    mk_eq(&Term::abs(f.clone(), fpq), &Term::abs(f, ftt))?,
                ),
            );
            let (_, conj_def) = ctx.define_const(CONJ_C, &conj_rhs)?;

            // ==> = \p q. (p /\ q) = p
            let imp_rhs = Term::abs(
                p.clone(),
                Term::abs(
                    q.clone(),
                    mk_eq(&mk_conj(&Term::var(p.clone()), &Term::var(q.clone())), &Term::var(p.clone()))?,
                ),
            );
            let (_, imp_def) = ctx.define_const(IMP, &imp_rhs)?;

            // ! = \P. P = (\x. T)
            let forall_rhs = Term::abs(
                cap_p.clone(),
                mk_eq(&Term::var(cap_p.clone()), &Term::abs(x_a.clone(), truth()))?,
            );
            let (_, forall_def) = ctx.define_const(FORALL, &forall_rhs)?;

            // ? = \P. !q. (!x. P x ==> q) ==> q
            let px = Term::app_unchecked(Term::var(cap_p.clone()), Term::var(x_a.clone()));
            let inner = mk_forall(&x_a, &mk_imp(&px, &Term::var(q.clone()))?)?;
            let exists_rhs = Term::abs(
                cap_p.clone(),
                mk_forall(&q, &mk_imp(&inner, &Term::var(q.clone()))?)?,
            );
            let (_, exists_def) = ctx.define_const(EXISTS_C, &exists_rhs)?;

            // \/ = \p q. !r. (p ==> r) ==> ((q ==> r) ==> r)
            let pr = mk_imp(&Term::var(p.clone()), &Term::var(r.clone()))?;
            let qr = mk_imp(&Term::var(q.clone()), &Term::var(r.clone()))?;
            let disj_rhs = Term::abs(
                p.clone(),
                Term::abs(
                    q.clone(),
                    mk_forall(&r, &mk_imp(&pr, &mk_imp(&qr, &Term::var(r.clone()))?)?)?,
                ),
            );
            let (_, disj_def) = ctx.define_const(DISJ_C, &disj_rhs)?;

            // F = !p. p
            let (_, falsity_def) =
                ctx.define_const(FALSITY_C, &mk_forall(&p, &Term::var(p.clone()))?)?;

            // ~ = \p. p ==> F
            let neg_rhs = Term::abs(p.clone(), mk_imp(&Term::var(p.clone()), &falsity())?);
            let (_, neg_def) = ctx.define_const(NEG_C, &neg_rhs)?;

            Ok(Connectives {
                truth_def,
                falsity_def,
                conj_def,
                disj_def,
                neg_def,
                exists_def,
                imp_def: Some(imp_def),
                forall_def: Some(forall_def),
            })
        }
        Mode::Extended => {
            // T = !x. x ==> x
            let t_rhs = mk_forall(
                &x_bool,
                &mk_imp(&Term::var(x_bool.clone()), &Term::var(x_bool.clone()))?,
            )?;
            let (_, truth_def) = ctx.define_const(TRUTH_C, &t_rhs)?;

            // F = !p. p
            let (_, falsity_def) =
                ctx.define_const(FALSITY_C, &mk_forall(&p, &Term::var(p.clone()))?)?;

            // /\ = \p q. !r. (p ==> (q ==> r)) ==> r
            let body = mk_imp(
                &mk_imp(
                    &Term::var(p.clone()),
                    &mk_imp(&Term::var(q.clone()), &Term::var(r.clone()))?,
                )?,
                &Term::var(r.clone()),
            )?;
            let conj_rhs = Term::abs(p.clone(), Term::abs(q.clone(), mk_forall(&r, &body)?));
            let (_, conj_def) = ctx.define_const(CONJ_C, &conj_rhs)?;

            // \/ = \p q. !r. (p ==> r) ==> ((q ==> r) ==> r)
            let pr = mk_imp(&Term::var(p.clone()), &Term::var(r.clone()))?;
            let qr = mk_imp(&Term::var(q.clone()), &Term::var(r.clone()))?;
            let disj_rhs = Term::abs(
                p.clone(),
                Term::abs(
                    q.clone(),
                    mk_forall(&r, &mk_imp(&pr, &mk_imp(&qr, &Term::var(r.clone()))?)?)?,
                ),
            );
            let (_, disj_def) = ctx.define_const(DISJ_C, &disj_rhs)?;

            // ? = \P. !q. (!x. P x ==> q) ==> q
            let px = Term::app_unchecked(Term::var(cap_p.clone()), Term::var(x_a.clone()));
            let inner = mk_forall(&x_a, &mk_imp(&px, &Term::var(q.clone()))?)?;
            let exists_rhs = Term::abs(
                cap_p.clone(),
                mk_forall(&q, &mk_imp(&inner, &Term::var(q.clone()))?)?,
            );
            let (_, exists_def) = ctx.define_const(EXISTS_C, &exists_rhs)?;

            // ~ = \p. p ==> F
            let neg_rhs = Term::abs(p.clone(), mk_imp(&Term::var(p.clone()), &falsity())?);
            let (_, neg_def) = ctx.define_const(NEG_C, &neg_rhs)?;

            Ok(Connectives {
                truth_def,
                falsity_def,
                conj_def,
                disj_def,
                neg_def,
                exists_def,
                imp_def: None,
                forall_def: None,
            })
        }
    }
}

/// A kernel context with its connective table and, optionally, the
/// extensionality axiom: everything the derived rules need.
#[derive(Debug)]
pub struct Prover {
    pub ctx: KernelContext,
    pub table: Connectives,
    eta: Option<Theorem>,
}

impl Prover {
    pub fn new(mode: Mode) -> Result<Prover> {
        let mut ctx = KernelContext::new(mode);
        let table = install_connectives(&mut ctx)?;
        Ok(Prover { ctx, table, eta: None })
    }

    pub fn mode(&self) -> Mode {
        self.ctx.mode()
    }

    /// Installs the extensionality axiom `|- (\x. f x) = f` with
    /// schematic `f : A -> B`.
    pub fn install_eta_axiom(&mut self) -> Result<Theorem> {
        if let Some(th) = &self.eta {
            return Ok(th.clone());
        }
        let f = var("f", Type::fun(Type::var("A"), Type::var("B")));
        let x = var("x", Type::var("A"));
        let schema = mk_eq(
            &Term::abs(x.clone(), Term::app_unchecked(Term::var(f.clone()), Term::var(x))),
            &Term::var(f),
        )?;
        let th = self.ctx.new_axiom(&schema)?;
        self.eta = Some(th.clone());
        Ok(th)
    }

    pub fn eta_axiom(&self) -> Option<&Theorem> {
        self.eta.as_ref()
    }

    /// The eta instance `|- (\x. t x) = t` for a function-typed `t`.
    fn eta_for(&self, t: &Term) -> Result<Theorem> {
        let ax = self.eta.clone().ok_or(BootstrapError::MissingAxiom)?;
        let ty = t.type_of().map_err(KernelError::from)?;
        let (dom, cod) = ty.dest_fun().ok_or(BootstrapError::SchemaMismatch("ETA"))?;
        let tysub = TypeSubst::new(alloc::vec![
            ("A".to_owned(), dom.clone()),
            ("B".to_owned(), cod.clone()),
        ])
        .map_err(KernelError::from)?;
        let inst = self.ctx.inst_type(&tysub, &ax)?;
        let f = var("f", ty.clone());
        let sub = TermSubst::single(f, t.clone()).map_err(KernelError::from)?;
        Ok(self.ctx.inst(&sub, &inst)?)
    }

    // ----- equality toolkit -----

    /// `|- f a = f b` from `|- a = b`.
    pub fn ap_term(&self, f: &Term, th: &Theorem) -> Result<Theorem> {
        let refl = self.ctx.refl(f)?;
        Ok(self.ctx.mk_comb(&refl, th)?)
    }

    /// `|- f a = g a` from `|- f = g`.
    pub fn ap_thm(&self, th: &Theorem, a: &Term) -> Result<Theorem> {
        let refl = self.ctx.refl(a)?;
        Ok(self.ctx.mk_comb(th, &refl)?)
    }

    /// `|- r = l` from `|- l = r`.
    pub fn sym(&self, th: &Theorem) -> Result<Theorem> {
        let concl = th.concl();
        let (fx, _) = concl.dest_app().ok_or(KernelError::NotAnEquation)?;
        let (eq_tm, l) = fx.dest_app().ok_or(KernelError::NotAnEquation)?;
        let lth = self.ctx.refl(l)?;
        let th1 = self.ap_term(eq_tm, th)?;
        let th2 = self.ctx.mk_comb(&th1, &lth)?;
        Ok(self.ctx.eq_mp(&th2, &lth)?)
    }

    /// Removes a hypothesis of `b` proved by `a`.
    pub fn prove_hyp(&self, a: &Theorem, b: &Theorem) -> Result<Theorem> {
        if b.hyps().iter().any(|h| alpha_equal(h, a.concl())) {
            let dd = self.ctx.deduct_antisym(a, b)?;
            Ok(self.ctx.eq_mp(&dd, a)?)
        } else {
            Ok(b.clone())
        }
    }

    /// `|- t = t'` where `t'` is the weak-head beta normal form of `t`
    /// (head redexes contracted repeatedly, nothing under binders).
    pub fn whnf_conv(&self, t: &Term) -> Result<Theorem> {
        if let Some((f, a)) = t.dest_app() {
            if f.dest_abs().is_some() {
                let step = self.ctx.beta(t)?;
                let (_, reduced) = dest_eq(step.concl()).expect("beta yields an equation");
                let rest = self.whnf_conv(&reduced.clone())?;
                return if trivial_eq(&rest) {
                    Ok(step)
                } else {
                    Ok(self.ctx.trans(&step, &rest)?)
                };
            }
            let fth = self.whnf_conv(f)?;
            if !trivial_eq(&fth) {
                let lifted = self.ap_thm(&fth, a)?;
                let (_, new_t) = dest_eq(lifted.concl()).expect("equation");
                let rest = self.whnf_conv(&new_t.clone())?;
                return if trivial_eq(&rest) {
                    Ok(lifted)
                } else {
                    Ok(self.ctx.trans(&lifted, &rest)?)
                };
            }
        }
        Ok(self.ctx.refl(t)?)
    }

    /// Extends an equation on the right by weak-head reduction.
    fn conv_rhs_whnf(&self, th: &Theorem) -> Result<Theorem> {
        let (_, rhs) = dest_eq(th.concl()).ok_or(KernelError::NotAnEquation)?;
        let rb = self.whnf_conv(&rhs.clone())?;
        if trivial_eq(&rb) {
            Ok(th.clone())
        } else {
            Ok(self.ctx.trans(th, &rb)?)
        }
    }

    /// From a definition `|- c = \x1..xn. body` derives
    /// `|- c a1 .. an = body[a1../x1..]`.
    pub fn unfold_def(&self, def: &Theorem, args: &[Term]) -> Result<Theorem> {
        let mut th = def.clone();
        for a in args {
            th = self.ap_thm(&th, a)?;
        }
        self.conv_rhs_whnf(&th)
    }

    /// The forall definition instantiated at an element type
    /// (minimal mode only).
    fn forall_def_at(&self, ty: &Type) -> Result<Theorem> {
        let def = self.table.forall_def.as_ref().ok_or(BootstrapError::MissingAxiom)?;
        let sub = TypeSubst::single("A", ty.clone());
        Ok(self.ctx.inst_type(&sub, def)?)
    }

    fn exists_def_at(&self, ty: &Type) -> Result<Theorem> {
        let sub = TypeSubst::single("A", ty.clone());
        Ok(self.ctx.inst_type(&sub, &self.table.exists_def)?)
    }

    // ----- mode-dispatching implication/quantifier rules -----

    /// Modus ponens: primitive in extended mode, unfolded through the
    /// implication definition in minimal mode.
    pub fn mp_rule(&self, ipq: &Theorem, ip: &Theorem) -> Result<Theorem> {
        if self.mode() == Mode::Extended {
            return Ok(self.ctx.mp(ipq, ip)?);
        }
        let (p, q) = dest_imp(ipq.concl()).ok_or(KernelError::NotAnImplication)?;
        if !alpha_equal(p, ip.concl()) {
            return Err(KernelError::AntecedentMismatch.into());
        }
        let (p, q) = (p.clone(), q.clone());
        let p0 = tvar("p", bool_ty());
        let q0 = tvar("q", bool_ty());
        let imp_def = self.table.imp_def.as_ref().expect("minimal mode has an imp definition");
        let th1 = self.unfold_def(imp_def, &[p0.clone(), q0.clone()])?;
        let asm = self.ctx.assume(&mk_imp(&p0, &q0)?)?;
        let th2 = self.ctx.eq_mp(&th1, &asm)?;
        let th3 = self.ctx.eq_mp(&self.sym(&th2)?, &self.ctx.assume(&p0)?)?;
        let pth = self.conjunct2(&th3)?;
        let sub = TermSubst::new(alloc::vec![
            (var("p", bool_ty()), p),
            (var("q", bool_ty()), q),
        ])
        .map_err(KernelError::from)?;
        let inst = self.ctx.inst(&sub, &pth)?;
        self.prove_hyp(ip, &self.prove_hyp(ipq, &inst)?)
    }

    /// Discharge: primitive in extended mode, the conjunction/equality
    /// dance in minimal mode.
    pub fn disch_rule(&self, a: &Term, th: &Theorem) -> Result<Theorem> {
        if self.mode() == Mode::Extended {
            return Ok(self.ctx.disch(a, th)?);
        }
        let t = th.concl().clone();
        let th1 = self.conj(&self.ctx.assume(a)?, th)?;
        let at = mk_conj(a, &t);
        let th2 = self.conjunct1(&self.ctx.assume(&at)?)?;
        let th3 = self.ctx.deduct_antisym(&th1, &th2)?;
        let imp_def = self.table.imp_def.as_ref().expect("minimal mode has an imp definition");
        let th4 = self.sym(&self.unfold_def(imp_def, &[a.clone(), t])?)?;
        Ok(self.ctx.eq_mp(&th4, &th3)?)
    }

    /// Generalisation: primitive in extended mode; in minimal mode the
    /// equation with `\x. T` through the quantifier definition.
    pub fn gen_rule(&self, x: &Var, th: &Theorem) -> Result<Theorem> {
        if self.mode() == Mode::Extended {
            return Ok(self.ctx.gen(x, th)?);
        }
        let th1 = self.eqt_intro(th)?;
        let th2 = self.ctx.abs(x, &th1)?;
        let fd = self.forall_def_at(&x.ty)?;
        let lam = Term::abs(x.clone(), th.concl().clone());
        let th3 = self.unfold_def(&fd, &[lam])?;
        Ok(self.ctx.eq_mp(&self.sym(&th3)?, &th2)?)
    }

    /// Specialisation: primitive in extended mode; unfold, apply and
    /// strip `T` in minimal mode.
    pub fn spec_rule(&self, u: &Term, th: &Theorem) -> Result<Theorem> {
        if self.mode() == Mode::Extended {
            return Ok(self.ctx.spec(u, th)?);
        }
        let (x, _) = dest_forall(th.concl()).ok_or(KernelError::NotAForall)?;
        if u.type_of().map_err(KernelError::from)? != x.ty {
            return Err(KernelError::TypeMismatch.into());
        }
        let (_, pred) = th.concl().dest_app().expect("forall shape");
        let pred = pred.clone();
        let fd = self.forall_def_at(&u.type_of().map_err(KernelError::from)?)?;
        let th1 = self.unfold_def(&fd, &[pred])?;
        let th2 = self.ctx.eq_mp(&th1, th)?;
        let th3 = self.ap_thm(&th2, u)?;
        let (lhs, rhs) = dest_eq(th3.concl()).expect("equation");
        let (lhs, rhs) = (lhs.clone(), rhs.clone());
        let lb = self.whnf_conv(&lhs)?;
        let rb = self.whnf_conv(&rhs)?;
        let th4 = self.ctx.trans(&self.sym(&lb)?, &self.ctx.trans(&th3, &rb)?)?;
        self.eqt_elim(&th4)
    }

    // ----- derived rules -----

    /// `|- T`.
    pub fn truth_thm(&self) -> Result<Theorem> {
        match self.mode() {
            Mode::Minimal => {
                let p = var("p", bool_ty());
                let idb = Term::abs(p.clone(), Term::var(p));
                let refl = self.ctx.refl(&idb)?;
                Ok(self.ctx.eq_mp(&self.sym(&self.table.truth_def)?, &refl)?)
            }
            Mode::Extended => {
                let x = var("x", bool_ty());
                let xi = self.ctx.assume(&Term::var(x.clone()))?;
                let ii = self.ctx.disch(&Term::var(x.clone()), &xi)?;
                let body = self.ctx.gen(&x, &ii)?;
                Ok(self.ctx.eq_mp(&self.sym(&self.table.truth_def)?, &body)?)
            }
        }
    }

    /// `|- t = T` from `|- t`.
    pub fn eqt_intro(&self, th: &Theorem) -> Result<Theorem> {
        let t = th.concl().clone();
        let th1 = self.ctx.deduct_antisym(&self.ctx.assume(&t)?, &self.truth_thm()?)?;
        let th2 = self.eqt_elim(&self.ctx.assume(th1.concl())?)?;
        let pth = self.ctx.deduct_antisym(&th2, &th1)?;
        Ok(self.ctx.eq_mp(&pth, th)?)
    }

    /// `|- t` from `|- t = T`.
    pub fn eqt_elim(&self, th: &Theorem) -> Result<Theorem> {
        Ok(self.ctx.eq_mp(&self.sym(th)?, &self.truth_thm()?)?)
    }

    /// Conjunction introduction.
    pub fn conj(&self, th1: &Theorem, th2: &Theorem) -> Result<Theorem> {
        let p0 = tvar("p", bool_ty());
        let q0 = tvar("q", bool_ty());
        let unfold = self.unfold_def(&self.table.conj_def, &[p0.clone(), q0.clone()])?;
        let pth = match self.mode() {
            Mode::Minimal => {
                let a = self.eqt_intro(&self.ctx.assume(&p0)?)?;
                let b = self.eqt_intro(&self.ctx.assume(&q0)?)?;
                let (_, rhs) = dest_eq(unfold.concl()).expect("equation");
                let (lam, _) = dest_eq(rhs).ok_or(BootstrapError::SchemaMismatch("CONJ"))?;
                let (fv, _) = lam.dest_abs().ok_or(BootstrapError::SchemaMismatch("CONJ"))?;
                let fv = fv.clone();
                let cmb = self
                    .ctx
                    .mk_comb(&self.ctx.mk_comb(&self.ctx.refl(&Term::var(fv.clone()))?, &a)?, &b)?;
                let lam_th = self.ctx.abs(&fv, &cmb)?;
                self.ctx.eq_mp(&self.sym(&unfold)?, &lam_th)?
            }
            Mode::Extended => {
                let r0 = tvar("r", bool_ty());
                let h = mk_imp(&p0, &mk_imp(&q0, &r0)?)?;
                let s1 = self.ctx.mp(&self.ctx.assume(&h)?, &self.ctx.assume(&p0)?)?;
                let s2 = self.ctx.mp(&s1, &self.ctx.assume(&q0)?)?;
                let s3 = self.ctx.disch(&h, &s2)?;
                let s4 = self.ctx.gen(&var("r", bool_ty()), &s3)?;
                self.ctx.eq_mp(&self.sym(&unfold)?, &s4)?
            }
        };
        let sub = TermSubst::new(alloc::vec![
            (var("p", bool_ty()), th1.concl().clone()),
            (var("q", bool_ty()), th2.concl().clone()),
        ])
        .map_err(KernelError::from)?;
        let inst = self.ctx.inst(&sub, &pth)?;
        self.prove_hyp(th2, &self.prove_hyp(th1, &inst)?)
    }

    fn conjunct_schematic(&self, left: bool) -> Result<Theorem> {
        let p0 = tvar("p", bool_ty());
        let q0 = tvar("q", bool_ty());
        let unfold = self.unfold_def(&self.table.conj_def, &[p0.clone(), q0.clone()])?;
        let asm = self.ctx.assume(&mk_conj(&p0, &q0))?;
        let step = self.ctx.eq_mp(&unfold, &asm)?;
        match self.mode() {
            Mode::Minimal => {
                let a = var("a", bool_ty());
                let b = var("b", bool_ty());
                let sel = Term::abs(
                    a.clone(),
                    Term::abs(b.clone(), Term::var(if left { a } else { b })),
                );
                let app = self.ap_thm(&step, &sel)?;
                let (lhs, rhs) = dest_eq(app.concl()).expect("equation");
                let (lhs, rhs) = (lhs.clone(), rhs.clone());
                let lb = self.whnf_conv(&lhs)?;
                let rb = self.whnf_conv(&rhs)?;
                let tt = self.ctx.trans(&self.sym(&lb)?, &self.ctx.trans(&app, &rb)?)?;
                self.eqt_elim(&tt)
            }
            Mode::Extended => {
                let target = if left { &p0 } else { &q0 };
                let sp = self.ctx.spec(target, &step)?;
                let inner = if left {
                    self.ctx.assume(&p0)?
                } else {
                    self.ctx.assume(&q0)?
                };
                let k = self.ctx.disch(&p0, &self.ctx.disch(&q0, &inner)?)?;
                Ok(self.ctx.mp(&sp, &k)?)
            }
        }
    }

    fn conjunct(&self, th: &Theorem, left: bool) -> Result<Theorem> {
        let (p, q) = dest_conj(th.concl()).ok_or(BootstrapError::SchemaMismatch("CONJUNCT"))?;
        let sub = TermSubst::new(alloc::vec![
            (var("p", bool_ty()), p.clone()),
            (var("q", bool_ty()), q.clone()),
        ])
        .map_err(KernelError::from)?;
        let pth = self.conjunct_schematic(left)?;
        let inst = self.ctx.inst(&sub, &pth)?;
        self.prove_hyp(th, &inst)
    }

    /// Left projection of a conjunction.
    pub fn conjunct1(&self, th: &Theorem) -> Result<Theorem> {
        self.conjunct(th, true)
    }

    /// Right projection of a conjunction.
    pub fn conjunct2(&self, th: &Theorem) -> Result<Theorem> {
        self.conjunct(th, false)
    }

    fn disj_schematic(&self, first: bool) -> Result<Theorem> {
        let p0 = tvar("p", bool_ty());
        let q0 = tvar("q", bool_ty());
        let r0 = tvar("r", bool_ty());
        let unfold = self.unfold_def(&self.table.disj_def, &[p0.clone(), q0.clone()])?;
        let pr = mk_imp(&p0, &r0)?;
        let qr = mk_imp(&q0, &r0)?;
        let (arm, hyp) = if first { (&pr, &p0) } else { (&qr, &q0) };
        let s1 = self.mp_rule(&self.ctx.assume(arm)?, &self.ctx.assume(hyp)?)?;
        let s2 = self.disch_rule(&qr, &s1)?;
        let s3 = self.disch_rule(&pr, &s2)?;
        let gen = self.gen_rule(&var("r", bool_ty()), &s3)?;
        Ok(self.ctx.eq_mp(&self.sym(&unfold)?, &gen)?)
    }

    /// `|- p \/ q` from `|- p`.
    pub fn disj1(&self, th: &Theorem, q: &Term) -> Result<Theorem> {
        let sub = TermSubst::new(alloc::vec![
            (var("p", bool_ty()), th.concl().clone()),
            (var("q", bool_ty()), q.clone()),
        ])
        .map_err(KernelError::from)?;
        let pth = self.disj_schematic(true)?;
        let inst = self.ctx.inst(&sub, &pth)?;
        self.prove_hyp(th, &inst)
    }

    /// `|- p \/ q` from `|- q`.
    pub fn disj2(&self, p: &Term, th: &Theorem) -> Result<Theorem> {
        let sub = TermSubst::new(alloc::vec![
            (var("p", bool_ty()), p.clone()),
            (var("q", bool_ty()), th.concl().clone()),
        ])
        .map_err(KernelError::from)?;
        let pth = self.disj_schematic(false)?;
        let inst = self.ctx.inst(&sub, &pth)?;
        self.prove_hyp(th, &inst)
    }

    /// Case analysis on `|- p \/ q` with proofs of `r` from each arm.
    pub fn disj_cases(&self, dth: &Theorem, ath: &Theorem, bth: &Theorem) -> Result<Theorem> {
        let (p, q) = dest_disj(dth.concl()).ok_or(BootstrapError::SchemaMismatch("DISJ_CASES"))?;
        if !alpha_equal(ath.concl(), bth.concl()) {
            return Err(BootstrapError::SchemaMismatch("DISJ_CASES"));
        }
        let (p, q) = (p.clone(), q.clone());
        let r = ath.concl().clone();
        let unfold = self.unfold_def(&self.table.disj_def, &[p.clone(), q.clone()])?;
        let th1 = self.ctx.eq_mp(&unfold, dth)?;
        let th2 = self.spec_rule(&r, &th1)?;
        let th3 = self.mp_rule(&th2, &self.disch_rule(&p, ath)?)?;
        self.mp_rule(&th3, &self.disch_rule(&q, bth)?)
    }

    /// Existential introduction: `|- ?x. phi` from the goal term, a
    /// witness `u` and `|- phi[u/x]`.
    pub fn exists_intro(&self, goal: &Term, u: &Term, th: &Theorem) -> Result<Theorem> {
        let (qf, pred) = goal.dest_app().ok_or(BootstrapError::SchemaMismatch("EXISTS_I"))?;
        match qf.kind() {
            crate::syntax::TermKind::Const(n, _) if n == EXISTS_C => {}
            _ => return Err(BootstrapError::SchemaMismatch("EXISTS_I")),
        }
        if pred.dest_abs().is_none() {
            return Err(BootstrapError::SchemaMismatch("EXISTS_I"));
        }
        let ety = u.type_of().map_err(KernelError::from)?;
        // schematic derivation at the witness type
        let p0 = var("P", Type::fun(ety.clone(), bool_ty()));
        let x0 = var("x", ety.clone());
        let q0 = var("Q", bool_ty());
        let px = Term::app_unchecked(Term::var(p0.clone()), Term::var(x0.clone()));
        let all = mk_forall(&x0, &mk_imp(&px, &Term::var(q0.clone()))?)?;
        let th2 = self.spec_rule(&Term::var(x0.clone()), &self.ctx.assume(&all)?)?;
        let th3 = self.disch_rule(&all, &self.mp_rule(&th2, &self.ctx.assume(&px)?)?)?;
        let th4 = self.gen_rule(&q0, &th3)?;
        let ed = self.exists_def_at(&ety)?;
        let th1 = self.unfold_def(&ed, &[Term::var(p0.clone())])?;
        let pth = self.ctx.eq_mp(&self.sym(&th1)?, &th4)?;
        let sub = TermSubst::new(alloc::vec![(p0, pred.clone()), (x0, u.clone())])
            .map_err(KernelError::from)?;
        let inst = self.ctx.inst(&sub, &pth)?;
        // bridge the beta gap between (\x. phi) u and phi[u/x]
        let redex = Term::app_unchecked(pred.clone(), u.clone());
        let bth = self.ctx.beta(&redex)?;
        if !alpha_equal(dest_eq(bth.concl()).expect("equation").1, th.concl()) {
            return Err(BootstrapError::SchemaMismatch("EXISTS_I"));
        }
        let bridge = self.ctx.eq_mp(&self.sym(&bth)?, th)?;
        self.prove_hyp(&bridge, &inst)
    }

    /// Existential elimination: from `|- ?x. phi` and a proof of `r`
    /// under hypothesis `phi[v/x]`, concludes `r`. The chosen variable
    /// `v` must not occur free elsewhere.
    pub fn choose(&self, v: &Var, ex_th: &Theorem, body_th: &Theorem) -> Result<Theorem> {
        let (qf, pred) = ex_th
            .concl()
            .dest_app()
            .ok_or(BootstrapError::SchemaMismatch("CHOOSE"))?;
        match qf.kind() {
            crate::syntax::TermKind::Const(n, _) if n == EXISTS_C => {}
            _ => return Err(BootstrapError::SchemaMismatch("CHOOSE")),
        }
        let pred = pred.clone();
        let r = body_th.concl().clone();
        let cmb = Term::app_unchecked(pred.clone(), Term::var(v.clone()));
        let bth = self.ctx.beta(&cmb)?;
        let pat = dest_eq(bth.concl()).expect("equation").1.clone();
        let th3 = self.ctx.eq_mp(&bth, &self.ctx.assume(&cmb)?)?;
        let th4 = self.mp_rule(&self.disch_rule(&pat, body_th)?, &th3)?;
        let th5 = self.disch_rule(&cmb, &th4)?;
        let th6 = self.gen_rule(v, &th5)?;
        let ety = v.ty.clone();
        let ed = self.exists_def_at(&ety)?;
        let unfold = self.unfold_def(&ed, &[pred])?;
        let th7 = self.ctx.eq_mp(&unfold, ex_th)?;
        let th8 = self.spec_rule(&r, &th7)?;
        self.mp_rule(&th8, &th6)
    }

    /// `|- ~p` from `|- p ==> F`.
    pub fn not_intro(&self, th: &Theorem) -> Result<Theorem> {
        let (p, f) = dest_imp(th.concl()).ok_or(BootstrapError::SchemaMismatch("NOT_INTRO"))?;
        if !alpha_equal(f, &falsity()) {
            return Err(BootstrapError::SchemaMismatch("NOT_INTRO"));
        }
        let unfold = self.unfold_def(&self.table.neg_def, &[p.clone()])?;
        Ok(self.ctx.eq_mp(&self.sym(&unfold)?, th)?)
    }

    /// `|- p ==> F` from `|- ~p`.
    pub fn not_elim(&self, th: &Theorem) -> Result<Theorem> {
        let p = dest_neg(th.concl()).ok_or(BootstrapError::SchemaMismatch("NOT_ELIM"))?;
        let unfold = self.unfold_def(&self.table.neg_def, &[p.clone()])?;
        Ok(self.ctx.eq_mp(&unfold, th)?)
    }

    /// Recovers the minimal-mode definitions of the universal
    /// quantifier and implication as theorems of the extended kernel.
    /// Requires the extensionality axiom.
    pub fn prove_legacy_definitions(&self) -> Result<(Theorem, Theorem)> {
        if self.mode() != Mode::Extended {
            return Err(KernelError::WrongMode.into());
        }
        if self.eta.is_none() {
            return Err(BootstrapError::MissingAxiom);
        }
        Ok((self.legacy_forall()?, self.legacy_imp()?))
    }

    fn legacy_forall(&self) -> Result<Theorem> {
        let a_ty = Type::var("A");
        let p = var("P", Type::fun(a_ty.clone(), bool_ty()));
        let x = var("x", a_ty.clone());
        let p_tm = Term::var(p.clone());
        let forall_c = Term::constant(FORALL, Type::fun(p.ty.clone(), bool_ty()));
        let forall_p = Term::app_unchecked(forall_c.clone(), p_tm.clone());
        let lam_t = Term::abs(x.clone(), truth());

        // {(!)P} |- P = (\x. T)
        let asm = self.ctx.assume(&forall_p)?;
        let eta_p = self.eta_for(&p_tm)?;
        let lamified = self.ctx.eq_mp(&self.sym(&self.ap_term(&forall_c, &eta_p)?)?, &asm)?;
        let s1 = self.ctx.spec(&Term::var(x.clone()), &lamified)?;
        let s2 = self.eqt_intro(&s1)?;
        let rb = self.ctx.beta(&Term::app_unchecked(lam_t.clone(), Term::var(x.clone())))?;
        let s3 = self.ctx.trans(&s2, &self.sym(&rb)?)?;
        let s4 = self.ctx.abs(&x, &s3)?;
        let s5 = self.ctx.trans(&self.sym(&eta_p)?, &s4)?;
        let dir_a = self.ctx.trans(&s5, &self.eta_for(&lam_t)?)?;

        // {P = (\x. T)} |- (!)P
        let asm_b = self.ctx.assume(&mk_eq(&p_tm, &lam_t)?)?;
        let b1 = self.ap_thm(&asm_b, &Term::var(x.clone()))?;
        let b2 = self.ctx.trans(&b1, &rb)?;
        let b3 = self.eqt_elim(&b2)?;
        let b4 = self.ctx.gen(&x, &b3)?;
        let b5 = self.ap_term(&forall_c, &eta_p)?;
        let dir_b = self.ctx.eq_mp(&b5, &b4)?;

        let dd = self.ctx.deduct_antisym(&dir_b, &dir_a)?;
        let abs_p = self.ctx.abs(&p, &dd)?;
        Ok(self.ctx.trans(&self.sym(&self.eta_for(&forall_c)?)?, &abs_p)?)
    }

    fn legacy_imp(&self) -> Result<Theorem> {
        let p = var("p", bool_ty());
        let q = var("q", bool_ty());
        let p_tm = Term::var(p.clone());
        let q_tm = Term::var(q.clone());
        let imp_c = Term::constant(IMP, bool3());
        let ipq = mk_imp(&p_tm, &q_tm)?;
        let pq = mk_conj(&p_tm, &q_tm);

        // {p ==> q} |- (p /\ q) = p
        let a1 = self.conj(
            &self.ctx.assume(&p_tm)?,
            &self.ctx.mp(&self.ctx.assume(&ipq)?, &self.ctx.assume(&p_tm)?)?,
        )?;
        let a2 = self.conjunct1(&self.ctx.assume(&pq)?)?;
        let dir_a = self.ctx.deduct_antisym(&a1, &a2)?;

        // {(p /\ q) = p} |- p ==> q
        let eq_asm = self.ctx.assume(&mk_eq(&pq, &p_tm)?)?;
        let b1 = self.ctx.eq_mp(&self.sym(&eq_asm)?, &self.ctx.assume(&p_tm)?)?;
        let b2 = self.conjunct2(&b1)?;
        let dir_b = self.ctx.disch(&p_tm, &b2)?;

        let dd = self.ctx.deduct_antisym(&dir_b, &dir_a)?;
        let abs_q = self.ctx.abs(&q, &dd)?;
        let abs_p = self.ctx.abs(&p, &abs_q)?;

        // (==>) = (\p. \q. p ==> q) via eta, then across the equation
        let e1 = self.eta_for(&Term::app_unchecked(imp_c.clone(), p_tm.clone()))?;
        let e2 = self.ctx.abs(&p, &e1)?;
        let e3 = self.eta_for(&imp_c)?;
        let lhs = self.ctx.trans(&self.sym(&e3)?, &self.sym(&e2)?)?;
        Ok(self.ctx.trans(&lhs, &abs_p)?)
    }
}

fn trivial_eq(th: &Theorem) -> bool {
    match dest_eq(th.concl()) {
        Some((l, r)) => alpha_equal(l, r),
        None => false,
    }
}

/// An argument to the generic `derive` dispatcher.
#[derive(Debug, Clone)]
pub enum DeriveArg {
    Thm(Theorem),
    Term(Term),
    Var(Var),
}

fn want_thm(rule: &str, args: &[DeriveArg], i: usize) -> Result<Theorem> {
    match args.get(i) {
        Some(DeriveArg::Thm(t)) => Ok(t.clone()),
        _ => Err(BootstrapError::BadArity {
            rule: rule.to_owned(),
            expected: i + 1,
            got: args.len(),
        }),
    }
}

fn want_term(rule: &str, args: &[DeriveArg], i: usize) -> Result<Term> {
    match args.get(i) {
        Some(DeriveArg::Term(t)) => Ok(t.clone()),
        _ => Err(BootstrapError::BadArity {
            rule: rule.to_owned(),
            expected: i + 1,
            got: args.len(),
        }),
    }
}

fn want_var(rule: &str, args: &[DeriveArg], i: usize) -> Result<Var> {
    match args.get(i) {
        Some(DeriveArg::Var(v)) => Ok(v.clone()),
        _ => Err(BootstrapError::BadArity {
            rule: rule.to_owned(),
            expected: i + 1,
            got: args.len(),
        }),
    }
}

/// Name-indexed access to the derived-rule family.
pub fn derive(p: &Prover, rule: &str, args: &[DeriveArg]) -> Result<Theorem> {
    match rule {
        "TRUTH" => p.truth_thm(),
        "EQT_INTRO" => p.eqt_intro(&want_thm(rule, args, 0)?),
        "EQT_ELIM" => p.eqt_elim(&want_thm(rule, args, 0)?),
        "CONJ" => p.conj(&want_thm(rule, args, 0)?, &want_thm(rule, args, 1)?),
        "CONJUNCT1" => p.conjunct1(&want_thm(rule, args, 0)?),
        "CONJUNCT2" => p.conjunct2(&want_thm(rule, args, 0)?),
        "MP_D" => p.mp_rule(&want_thm(rule, args, 0)?, &want_thm(rule, args, 1)?),
        "DISCH_D" => p.disch_rule(&want_term(rule, args, 0)?, &want_thm(rule, args, 1)?),
        "GEN_D" => p.gen_rule(&want_var(rule, args, 0)?, &want_thm(rule, args, 1)?),
        "SPEC_D" => p.spec_rule(&want_term(rule, args, 0)?, &want_thm(rule, args, 1)?),
        "DISJ1" => p.disj1(&want_thm(rule, args, 0)?, &want_term(rule, args, 1)?),
        "DISJ2" => p.disj2(&want_term(rule, args, 0)?, &want_thm(rule, args, 1)?),
        "DISJ_CASES" => p.disj_cases(
            &want_thm(rule, args, 0)?,
            &want_thm(rule, args, 1)?,
            &want_thm(rule, args, 2)?,
        ),
        "EXISTS_I" => p.exists_intro(
            &want_term(rule, args, 0)?,
            &want_term(rule, args, 1)?,
            &want_thm(rule, args, 2)?,
        ),
        "CHOOSE" => p.choose(
            &want_var(rule, args, 0)?,
            &want_thm(rule, args, 1)?,
            &want_thm(rule, args, 2)?,
        ),
        "NOT_INTRO" => p.not_intro(&want_thm(rule, args, 0)?),
        "NOT_ELIM" => p.not_elim(&want_thm(rule, args, 0)?),
        "SYM" => p.sym(&want_thm(rule, args, 0)?),
        "AP_TERM" => p.ap_term(&want_term(rule, args, 0)?, &want_thm(rule, args, 1)?),
        "AP_THM" => p.ap_thm(&want_thm(rule, args, 0)?, &want_term(rule, args, 1)?),
        other => Err(BootstrapError::UnknownRule(other.to_owned())),
    }
}

/// One benchmark corpus entry: a stable name and a recipe that builds
/// the same sequent on either kernel.
pub struct CorpusEntry {
    pub name: &'static str,
    pub build: fn(&Prover) -> Result<Theorem>,
}

mod corpus_entries;

pub use corpus_entries::corpus;
