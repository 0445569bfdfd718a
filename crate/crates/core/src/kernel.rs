//! The trusted core: sealed theorems, primitive inference rules and
//! definitional mechanisms.
//!
//! A [`Theorem`] can only be produced by the operations in this module.
//! Every successful rule application records one trace node, so a
//! theorem carries its full primitive-step derivation; the trace is
//! what the article writer and the lambda-Pi translator consume.
//!
//! A [`KernelContext`] runs in one of two modes. Minimal mode declares
//! equality as the only logical constant and offers the ten primitive
//! rules. Extended mode additionally declares implication and the
//! universal quantifier as primitive, together with their rules `mp`,
//! `disch`, `gen` and `spec`. Calling an extended rule on a minimal
//! context is an error, never a silent fallback, so benchmarks cannot
//! accidentally mix kernels.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::syntax::{
    alpha_cmp, alpha_equal, beta_contract, match_type, subst_term, subst_type, Name, SyntaxError,
    Term, TermKind, TermSubst, Type, TypeSubst, Var,
};

/// Which rule set a context exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Minimal,
    Extended,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Minimal => write!(f, "minimal"),
            Mode::Extended => write!(f, "extended"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelError {
    Syntax(SyntaxError),
    NotAnEquation,
    MidpointMismatch,
    TypeMismatch,
    VarFreeInHyps(Name),
    NotBoolean,
    AntecedentMismatch,
    NotARedex,
    WrongMode,
    NotAnImplication,
    NotAForall,
    NameClash(Name),
    NotClosed,
    TypeVarEscape(Name),
    NonEmptyHyps,
    MalformedWitness,
    InvalidTypeVars,
    UndeclaredTypeOp(Name),
    UndeclaredConstant(Name),
    NotAConstInstance(Name),
    BadTypeArity(Name),
}

impl From<SyntaxError> for KernelError {
    fn from(e: SyntaxError) -> Self {
        match e {
            SyntaxError::NotARedex => KernelError::NotARedex,
            other => KernelError::Syntax(other),
        }
    }
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::Syntax(e) => write!(f, "{}", e),
            KernelError::NotAnEquation => write!(f, "conclusion is not an equation"),
            KernelError::MidpointMismatch => write!(f, "equation midpoints differ"),
            KernelError::TypeMismatch => write!(f, "operand types do not match"),
            KernelError::VarFreeInHyps(n) => write!(f, "variable {} is free in the hypotheses", n),
            KernelError::NotBoolean => write!(f, "term is not boolean"),
            KernelError::AntecedentMismatch => write!(f, "antecedent does not match"),
            KernelError::NotARedex => write!(f, "not a beta redex"),
            KernelError::WrongMode => write!(f, "rule unavailable in this kernel mode"),
            KernelError::NotAnImplication => write!(f, "conclusion is not an implication"),
            KernelError::NotAForall => write!(f, "conclusion is not a universal quantification"),
            KernelError::NameClash(n) => write!(f, "name {} is already declared", n),
            KernelError::NotClosed => write!(f, "definition body has free term variables"),
            KernelError::TypeVarEscape(n) => {
                write!(f, "type variable {} does not occur in the definition's type", n)
            }
            KernelError::NonEmptyHyps => write!(f, "witness theorem has hypotheses"),
            KernelError::MalformedWitness => write!(f, "witness conclusion is not `P t`"),
            KernelError::InvalidTypeVars => {
                write!(f, "type variable list does not match the predicate")
            }
            KernelError::UndeclaredTypeOp(n) => write!(f, "undeclared type operator {}", n),
            KernelError::UndeclaredConstant(n) => write!(f, "undeclared constant {}", n),
            KernelError::NotAConstInstance(n) => {
                write!(f, "type is not an instance of {}'s generic type", n)
            }
            KernelError::BadTypeArity(n) => write!(f, "wrong argument count for type operator {}", n),
        }
    }
}

pub type Result<T> = core::result::Result<T, KernelError>;

/// One primitive step with its operands. Premise sub-derivations live
/// in the surrounding [`Trace`] node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Refl { term: Term },
    Trans,
    MkComb,
    Abs { var: Var },
    Beta { redex: Term },
    Assume { prop: Term },
    EqMp,
    DeductAntisym,
    Inst { subst: TermSubst },
    InstType { subst: TypeSubst },
    Mp,
    Disch { antecedent: Term },
    Gen { var: Var },
    Spec { witness: Term },
    DefineConst { name: Name, rhs: Term },
    DefineTypeOp(Arc<TypeOpDef>, TypeOpSide),
    Axiom { prop: Term },
}

/// Payload shared by the two theorems a type-operator definition yields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeOpDef {
    pub name: Name,
    pub abs_name: Name,
    pub rep_name: Name,
    pub tyvars: Vec<Name>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeOpSide {
    AbsRep,
    RepAbs,
}

/// A derivation node: the sequent proved at this point, the rule that
/// proved it, and the premise derivations.
#[derive(Debug)]
pub struct Trace {
    hyps: Vec<Term>,
    concl: Term,
    step: Step,
    premises: Vec<Arc<Trace>>,
    step_count: u64,
}

impl Trace {
    pub fn step(&self) -> &Step {
        &self.step
    }

    pub fn premises(&self) -> &[Arc<Trace>] {
        &self.premises
    }

    pub fn hyps(&self) -> &[Term] {
        &self.hyps
    }

    pub fn concl(&self) -> &Term {
        &self.concl
    }

    pub fn step_count(&self) -> u64 {
        self.step_count
    }
}

/// A sealed sequent `hyps |- concl` together with its derivation.
/// Constructible only through kernel operations; cloning shares the
/// underlying trace.
#[derive(Debug, Clone)]
pub struct Theorem(Arc<Trace>);

impl Theorem {
    fn new(hyps: Vec<Term>, concl: Term, step: Step, premises: Vec<Arc<Trace>>) -> Theorem {
        let step_count = 1 + premises.iter().map(|p| p.step_count).sum::<u64>();
        Theorem(Arc::new(Trace { hyps, concl, step, premises, step_count }))
    }

    pub fn hyps(&self) -> &[Term] {
        &self.0.hyps
    }

    pub fn concl(&self) -> &Term {
        &self.0.concl
    }

    pub fn trace(&self) -> &Arc<Trace> {
        &self.0
    }

    /// Total number of primitive-rule nodes in the derivation tree.
    /// Definitional and axiom nodes count one each.
    pub fn step_count(&self) -> u64 {
        self.0.step_count
    }

    /// Sequent comparison up to alpha: hypothesis sets (already
    /// canonical) and conclusions.
    pub fn alpha_eq_sequent(&self, other: &Theorem) -> bool {
        alpha_equal(self.concl(), other.concl())
            && self.hyps().len() == other.hyps().len()
            && self
                .hyps()
                .iter()
                .zip(other.hyps())
                .all(|(a, b)| alpha_equal(a, b))
    }

    fn premise(&self) -> Arc<Trace> {
        self.0.clone()
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, h) in self.hyps().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", h)?;
        }
        write!(f, " |- {}", self.concl())
    }
}

/// Inserts into a canonically ordered, alpha-deduplicated hypothesis
/// list.
fn insert_hyp(hyps: &mut Vec<Term>, h: Term) {
    match hyps.binary_search_by(|x| alpha_cmp(x, &h)) {
        Ok(_) => {}
        Err(pos) => hyps.insert(pos, h),
    }
}

fn union_hyps(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = a.to_vec();
    for h in b {
        insert_hyp(&mut out, h.clone());
    }
    out
}

fn remove_hyp(hyps: &[Term], t: &Term) -> Vec<Term> {
    hyps.iter()
        .filter(|h| alpha_cmp(h, t) != Ordering::Equal)
        .cloned()
        .collect()
}

fn canonical_hyps(hyps: impl IntoIterator<Item = Term>) -> Vec<Term> {
    let mut out = Vec::new();
    for h in hyps {
        insert_hyp(&mut out, h);
    }
    out
}

/// A kernel session: the signature of declared type operators and
/// constants, the installed axioms, and the rule-set mode. Definitional
/// operations mutate the context; rule applications only read it.
#[derive(Debug)]
pub struct KernelContext {
    mode: Mode,
    type_ops: BTreeMap<Name, usize>,
    constants: BTreeMap<Name, Type>,
    definitions: BTreeMap<Name, Term>,
    axioms: Vec<Theorem>,
}

pub const EQ: &str = "=";
pub const IMP: &str = "==>";
pub const FORALL: &str = "!";

/// Generic type of equality: `A -> A -> bool`.
pub fn eq_generic_type() -> Type {
    let a = Type::var("A");
    Type::fun(a.clone(), Type::fun(a, Type::bool()))
}

/// Generic type of implication: `bool -> bool -> bool`.
pub fn imp_generic_type() -> Type {
    Type::fun(Type::bool(), Type::fun(Type::bool(), Type::bool()))
}

/// Generic type of the universal quantifier: `(A -> bool) -> bool`.
pub fn forall_generic_type() -> Type {
    Type::fun(Type::fun(Type::var("A"), Type::bool()), Type::bool())
}

/// `s = t` with the equality instance at the operands' type.
pub fn mk_eq(lhs: &Term, rhs: &Term) -> Result<Term> {
    let ty = lhs.type_of()?;
    if rhs.type_of()? != ty {
        return Err(KernelError::TypeMismatch);
    }
    let eq = Term::constant(EQ, Type::fun(ty.clone(), Type::fun(ty, Type::bool())));
    Ok(Term::app_unchecked(Term::app_unchecked(eq, lhs.clone()), rhs.clone()))
}

pub fn dest_eq(t: &Term) -> Option<(&Term, &Term)> {
    t.dest_binop(EQ)
}

/// `p ==> q`.
pub fn mk_imp(p: &Term, q: &Term) -> Result<Term> {
    if !p.type_of()?.is_bool() || !q.type_of()?.is_bool() {
        return Err(KernelError::NotBoolean);
    }
    let imp = Term::constant(IMP, imp_generic_type());
    Ok(Term::app_unchecked(Term::app_unchecked(imp, p.clone()), q.clone()))
}

pub fn dest_imp(t: &Term) -> Option<(&Term, &Term)> {
    t.dest_binop(IMP)
}

/// `!(\x. body)`.
pub fn mk_forall(x: &Var, body: &Term) -> Result<Term> {
    if !body.type_of()?.is_bool() {
        return Err(KernelError::NotBoolean);
    }
    let fa = Term::constant(
        FORALL,
        Type::fun(Type::fun(x.ty.clone(), Type::bool()), Type::bool()),
    );
    Ok(Term::app_unchecked(fa, Term::abs(x.clone(), body.clone())))
}

/// Splits `!(\x. body)`.
pub fn dest_forall(t: &Term) -> Option<(&Var, &Term)> {
    let (f, arg) = t.dest_app()?;
    match f.kind() {
        TermKind::Const(n, _) if n == FORALL => arg.dest_abs(),
        _ => None,
    }
}

impl KernelContext {
    pub fn new(mode: Mode) -> KernelContext {
        let mut type_ops = BTreeMap::new();
        type_ops.insert("bool".to_string(), 0);
        type_ops.insert("ind".to_string(), 0);
        type_ops.insert("->".to_string(), 2);
        let mut constants = BTreeMap::new();
        constants.insert(EQ.to_string(), eq_generic_type());
        if mode == Mode::Extended {
            constants.insert(IMP.to_string(), imp_generic_type());
            constants.insert(FORALL.to_string(), forall_generic_type());
        }
        KernelContext {
            mode,
            type_ops,
            constants,
            definitions: BTreeMap::new(),
            axioms: Vec::new(),
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn axioms(&self) -> &[Theorem] {
        &self.axioms
    }

    pub fn type_op_arity(&self, name: &str) -> Option<usize> {
        self.type_ops.get(name).copied()
    }

    pub fn constant_generic_type(&self, name: &str) -> Option<&Type> {
        self.constants.get(name)
    }

    /// The definition body registered for a constant, if it was
    /// introduced by `define_const`.
    pub fn definition_of(&self, name: &str) -> Option<&Term> {
        self.definitions.get(name)
    }

    /// Checks a raw type against the declared signature.
    pub fn validate_type(&self, ty: &Type) -> Result<()> {
        match ty {
            Type::Var(_) => Ok(()),
            Type::App(op, args) => {
                let arity = self
                    .type_op_arity(op)
                    .ok_or_else(|| KernelError::UndeclaredTypeOp(op.clone()))?;
                if args.len() != arity {
                    return Err(KernelError::BadTypeArity(op.clone()));
                }
                args.iter().try_for_each(|a| self.validate_type(a))
            }
        }
    }

    /// Checks a raw term: every type well-formed, every constant a
    /// declared instance, every application well-typed.
    pub fn validate_term(&self, t: &Term) -> Result<()> {
        match t.kind() {
            TermKind::Var(v) => self.validate_type(&v.ty),
            TermKind::Const(n, ty) => {
                self.validate_type(ty)?;
                let generic = self
                    .constant_generic_type(n)
                    .ok_or_else(|| KernelError::UndeclaredConstant(n.clone()))?;
                match match_type(generic, ty) {
                    Some(_) => Ok(()),
                    None => Err(KernelError::NotAConstInstance(n.clone())),
                }
            }
            TermKind::App(..) => {
                // recurse first for precise errors, then the arrow check
                let (f, a) = t.dest_app().unwrap();
                self.validate_term(f)?;
                self.validate_term(a)?;
                t.type_of()?;
                Ok(())
            }
            TermKind::Abs(v, b) => {
                self.validate_type(&v.ty)?;
                self.validate_term(b)
            }
        }
    }

    fn validate_bool_term(&self, t: &Term) -> Result<()> {
        self.validate_term(t)?;
        if t.type_of()?.is_bool() {
            Ok(())
        } else {
            Err(KernelError::NotBoolean)
        }
    }

    fn require_extended(&self) -> Result<()> {
        if self.mode == Mode::Extended {
            Ok(())
        } else {
            Err(KernelError::WrongMode)
        }
    }

    // ----- the ten primitive rules -----

    /// `|- t = t`
    pub fn refl(&self, t: &Term) -> Result<Theorem> {
        self.validate_term(t)?;
        let concl = mk_eq(t, t)?;
        Ok(Theorem::new(Vec::new(), concl, Step::Refl { term: t.clone() }, Vec::new()))
    }

    /// From `|- s = t1` and `|- t2 = u` with `t1` alpha-equal to `t2`,
    /// derives `|- s = u`.
    pub fn trans(&self, ab: &Theorem, bc: &Theorem) -> Result<Theorem> {
        let (s, t1) = dest_eq(ab.concl()).ok_or(KernelError::NotAnEquation)?;
        let (t2, u) = dest_eq(bc.concl()).ok_or(KernelError::NotAnEquation)?;
        if !alpha_equal(t1, t2) {
            return Err(KernelError::MidpointMismatch);
        }
        let concl = mk_eq(s, u)?;
        Ok(Theorem::new(
            union_hyps(ab.hyps(), bc.hyps()),
            concl,
            Step::Trans,
            alloc::vec![ab.premise(), bc.premise()],
        ))
    }

    /// From `|- f = g` and `|- x = y`, derives `|- f x = g y`.
    pub fn mk_comb(&self, fg: &Theorem, xy: &Theorem) -> Result<Theorem> {
        let (f, g) = dest_eq(fg.concl()).ok_or(KernelError::NotAnEquation)?;
        let (x, y) = dest_eq(xy.concl()).ok_or(KernelError::NotAnEquation)?;
        let fty = f.type_of()?;
        let xty = x.type_of()?;
        match fty.dest_fun() {
            Some((dom, _)) if *dom == xty => {}
            _ => return Err(KernelError::TypeMismatch),
        }
        let concl = mk_eq(
            &Term::app_unchecked(f.clone(), x.clone()),
            &Term::app_unchecked(g.clone(), y.clone()),
        )?;
        Ok(Theorem::new(
            union_hyps(fg.hyps(), xy.hyps()),
            concl,
            Step::MkComb,
            alloc::vec![fg.premise(), xy.premise()],
        ))
    }

    /// From `|- s = t` with `x` not free in the hypotheses, derives
    /// `|- (\x. s) = (\x. t)`.
    pub fn abs(&self, x: &Var, st: &Theorem) -> Result<Theorem> {
        let (s, t) = dest_eq(st.concl()).ok_or(KernelError::NotAnEquation)?;
        if st.hyps().iter().any(|h| h.has_free_var(x)) {
            return Err(KernelError::VarFreeInHyps(x.name.clone()));
        }
        let concl = mk_eq(
            &Term::abs(x.clone(), s.clone()),
            &Term::abs(x.clone(), t.clone()),
        )?;
        Ok(Theorem::new(
            st.hyps().to_vec(),
            concl,
            Step::Abs { var: x.clone() },
            alloc::vec![st.premise()],
        ))
    }

    /// For a redex `(\x. b) u`, derives `|- (\x. b) u = b[u/x]`.
    pub fn beta(&self, t: &Term) -> Result<Theorem> {
        self.validate_term(t)?;
        let contracted = beta_contract(t)?;
        let concl = mk_eq(t, &contracted)?;
        Ok(Theorem::new(Vec::new(), concl, Step::Beta { redex: t.clone() }, Vec::new()))
    }

    /// `{p} |- p` for boolean `p`.
    pub fn assume(&self, p: &Term) -> Result<Theorem> {
        self.validate_bool_term(p)?;
        Ok(Theorem::new(
            alloc::vec![p.clone()],
            p.clone(),
            Step::Assume { prop: p.clone() },
            Vec::new(),
        ))
    }

    /// From `|- a = b` and `|- a'` with `a` alpha-equal to `a'`,
    /// derives `|- b`.
    pub fn eq_mp(&self, pq: &Theorem, p: &Theorem) -> Result<Theorem> {
        let (a, b) = dest_eq(pq.concl()).ok_or(KernelError::NotAnEquation)?;
        if !alpha_equal(a, p.concl()) {
            return Err(KernelError::AntecedentMismatch);
        }
        Ok(Theorem::new(
            union_hyps(pq.hyps(), p.hyps()),
            b.clone(),
            Step::EqMp,
            alloc::vec![pq.premise(), p.premise()],
        ))
    }

    /// `(hyps(a) - {concl(b)}) u (hyps(b) - {concl(a)}) |- concl(a) = concl(b)`,
    /// removal up to alpha.
    pub fn deduct_antisym(&self, a: &Theorem, b: &Theorem) -> Result<Theorem> {
        let left = remove_hyp(a.hyps(), b.concl());
        let right = remove_hyp(b.hyps(), a.concl());
        let concl = mk_eq(a.concl(), b.concl())?;
        Ok(Theorem::new(
            union_hyps(&left, &right),
            concl,
            Step::DeductAntisym,
            alloc::vec![a.premise(), b.premise()],
        ))
    }

    /// Applies a capture-avoiding term substitution to hypotheses and
    /// conclusion.
    pub fn inst(&self, subst: &TermSubst, th: &Theorem) -> Result<Theorem> {
        for (_, r) in subst.pairs() {
            self.validate_term(r)?;
        }
        let hyps = canonical_hyps(th.hyps().iter().map(|h| subst_term(subst, h)));
        let concl = subst_term(subst, th.concl());
        Ok(Theorem::new(
            hyps,
            concl,
            Step::Inst { subst: subst.clone() },
            alloc::vec![th.premise()],
        ))
    }

    /// Applies a type substitution to hypotheses and conclusion.
    pub fn inst_type(&self, subst: &TypeSubst, th: &Theorem) -> Result<Theorem> {
        for (_, ty) in subst.pairs() {
            self.validate_type(ty)?;
        }
        let hyps = canonical_hyps(th.hyps().iter().map(|h| subst_type(subst, h)));
        let concl = subst_type(subst, th.concl());
        Ok(Theorem::new(
            hyps,
            concl,
            Step::InstType { subst: subst.clone() },
            alloc::vec![th.premise()],
        ))
    }

    // ----- the four extended-mode rules -----

    /// From `|- p ==> q` and `|- p'` with `p` alpha-equal to `p'`,
    /// derives `|- q`. Extended mode only.
    pub fn mp(&self, ipq: &Theorem, ip: &Theorem) -> Result<Theorem> {
        self.require_extended()?;
        let (p, q) = dest_imp(ipq.concl()).ok_or(KernelError::NotAnImplication)?;
        if !alpha_equal(p, ip.concl()) {
            return Err(KernelError::AntecedentMismatch);
        }
        Ok(Theorem::new(
            union_hyps(ipq.hyps(), ip.hyps()),
            q.clone(),
            Step::Mp,
            alloc::vec![ipq.premise(), ip.premise()],
        ))
    }

    /// Discharges `p`: `hyps - {p} |- p ==> concl`. `p` need not occur.
    /// Extended mode only.
    pub fn disch(&self, p: &Term, th: &Theorem) -> Result<Theorem> {
        self.require_extended()?;
        self.validate_bool_term(p)?;
        let hyps = remove_hyp(th.hyps(), p);
        let concl = mk_imp(p, th.concl())?;
        Ok(Theorem::new(
            hyps,
            concl,
            Step::Disch { antecedent: p.clone() },
            alloc::vec![th.premise()],
        ))
    }

    /// Generalises: `hyps |- !(\x. concl)` for `x` not free in the
    /// hypotheses. Extended mode only.
    pub fn gen(&self, x: &Var, th: &Theorem) -> Result<Theorem> {
        self.require_extended()?;
        self.validate_type(&x.ty)?;
        if th.hyps().iter().any(|h| h.has_free_var(x)) {
            return Err(KernelError::VarFreeInHyps(x.name.clone()));
        }
        let concl = mk_forall(x, th.concl())?;
        Ok(Theorem::new(
            th.hyps().to_vec(),
            concl,
            Step::Gen { var: x.clone() },
            alloc::vec![th.premise()],
        ))
    }

    /// Specialises `|- !(\x. body)` at `u`: `hyps |- body[u/x]`.
    /// Extended mode only.
    pub fn spec(&self, u: &Term, th: &Theorem) -> Result<Theorem> {
        self.require_extended()?;
        self.validate_term(u)?;
        let (x, body) = dest_forall(th.concl()).ok_or(KernelError::NotAForall)?;
        if u.type_of()? != x.ty {
            return Err(KernelError::TypeMismatch);
        }
        let subst = TermSubst::single(x.clone(), u.clone())?;
        let concl = subst_term(&subst, body);
        Ok(Theorem::new(
            th.hyps().to_vec(),
            concl,
            Step::Spec { witness: u.clone() },
            alloc::vec![th.premise()],
        ))
    }

    // ----- definitional mechanisms -----

    /// Introduces `name` with definition `t`: declares the constant at
    /// `t`'s type taken generically and returns `|- name = t`.
    pub fn define_const(&mut self, name: &str, t: &Term) -> Result<(Term, Theorem)> {
        if self.constants.contains_key(name) {
            return Err(KernelError::NameClash(name.to_string()));
        }
        self.validate_term(t)?;
        if !t.free_vars().is_empty() {
            return Err(KernelError::NotClosed);
        }
        let ty = t.type_of()?;
        let ty_vars = ty.vars();
        for tv in t.type_vars() {
            if !ty_vars.contains(&tv) {
                return Err(KernelError::TypeVarEscape(tv));
            }
        }
        self.constants.insert(name.to_string(), ty.clone());
        self.definitions.insert(name.to_string(), t.clone());
        let c = Term::constant(name, ty);
        let concl = mk_eq(&c, t)?;
        let thm = Theorem::new(
            Vec::new(),
            concl,
            Step::DefineConst { name: name.to_string(), rhs: t.clone() },
            Vec::new(),
        );
        Ok((c, thm))
    }

    /// Introduces a type operator from a nonemptiness witness
    /// `|- P t`, together with abstraction and representation
    /// constants. Returns the two bijection theorems
    /// `|- abs (rep a) = a` and `|- P r = (rep (abs r) = r)`.
    pub fn define_type_op(
        &mut self,
        name: &str,
        abs_name: &str,
        rep_name: &str,
        tyvars: &[Name],
        witness: &Theorem,
    ) -> Result<(Theorem, Theorem)> {
        if self.type_ops.contains_key(name) {
            return Err(KernelError::NameClash(name.to_string()));
        }
        if self.constants.contains_key(abs_name) {
            return Err(KernelError::NameClash(abs_name.to_string()));
        }
        if self.constants.contains_key(rep_name) || abs_name == rep_name {
            return Err(KernelError::NameClash(rep_name.to_string()));
        }
        if !witness.hyps().is_empty() {
            return Err(KernelError::NonEmptyHyps);
        }
        let (pred, wit) = witness.concl().dest_app().ok_or(KernelError::MalformedWitness)?;
        let mut distinct = BTreeSet::new();
        for tv in tyvars {
            if !distinct.insert(tv.clone()) {
                return Err(KernelError::InvalidTypeVars);
            }
        }
        if distinct != pred.type_vars() {
            return Err(KernelError::InvalidTypeVars);
        }

        let rep_ty = wit.type_of()?;
        let new_ty = Type::App(
            name.to_string(),
            tyvars.iter().map(|v| Type::Var(v.clone())).collect(),
        );
        let abs_ty = Type::fun(rep_ty.clone(), new_ty.clone());
        let rep_ty_fun = Type::fun(new_ty.clone(), rep_ty.clone());

        self.type_ops.insert(name.to_string(), tyvars.len());
        self.constants.insert(abs_name.to_string(), abs_ty.clone());
        self.constants.insert(rep_name.to_string(), rep_ty_fun.clone());

        let abs_c = Term::constant(abs_name, abs_ty);
        let rep_c = Term::constant(rep_name, rep_ty_fun);

        let def = Arc::new(TypeOpDef {
            name: name.to_string(),
            abs_name: abs_name.to_string(),
            rep_name: rep_name.to_string(),
            tyvars: tyvars.to_vec(),
        });

        // |- abs (rep a) = a
        let a = Term::var(Var::new("a", new_ty));
        let abs_rep = mk_eq(
            &Term::app_unchecked(abs_c.clone(), Term::app_unchecked(rep_c.clone(), a.clone())),
            &a,
        )?;
        let abs_thm = Theorem::new(
            Vec::new(),
            abs_rep,
            Step::DefineTypeOp(def.clone(), TypeOpSide::AbsRep),
            alloc::vec![witness.premise()],
        );

        // |- P r = (rep (abs r) = r)
        let r = Term::var(Var::new("r", rep_ty));
        let inner = mk_eq(
            &Term::app_unchecked(rep_c, Term::app_unchecked(abs_c, r.clone())),
            &r,
        )?;
        let rep_abs = mk_eq(&Term::app_unchecked(pred.clone(), r), &inner)?;
        let rep_thm = Theorem::new(
            Vec::new(),
            rep_abs,
            Step::DefineTypeOp(def, TypeOpSide::RepAbs),
            alloc::vec![witness.premise()],
        );
        Ok((abs_thm, rep_thm))
    }

    /// Installs `|- p` as an axiom and registers it in the context.
    pub fn new_axiom(&mut self, p: &Term) -> Result<Theorem> {
        self.validate_bool_term(p)?;
        let thm = Theorem::new(
            Vec::new(),
            p.clone(),
            Step::Axiom { prop: p.clone() },
            Vec::new(),
        );
        self.axioms.push(thm.clone());
        Ok(thm)
    }

    /// Accepts a sequent on faith during article replay; the replay
    /// reports it among the article's assumptions. Hypotheses are
    /// canonicalised.
    pub fn assume_sequent(&mut self, hyps: &[Term], concl: &Term) -> Result<Theorem> {
        for h in hyps {
            self.validate_bool_term(h)?;
        }
        self.validate_bool_term(concl)?;
        let thm = Theorem::new(
            canonical_hyps(hyps.iter().cloned()),
            concl.clone(),
            Step::Axiom { prop: concl.clone() },
            Vec::new(),
        );
        self.axioms.push(thm.clone());
        Ok(thm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bool_var(n: &str) -> Term {
        Term::var(Var::new(n, Type::bool()))
    }

    #[test]
    fn refl_and_step_count() {
        let ctx = KernelContext::new(Mode::Minimal);
        let x = bool_var("x");
        let th = ctx.refl(&x).unwrap();
        assert!(th.hyps().is_empty());
        assert_eq!(th.step_count(), 1);
        let tr = ctx.trans(&th, &th).unwrap();
        assert_eq!(tr.step_count(), 3);
    }

    #[test]
    fn trans_midpoint_mismatch() {
        let ctx = KernelContext::new(Mode::Minimal);
        let ab = ctx.assume(&mk_eq(&bool_var("a"), &bool_var("b")).unwrap()).unwrap();
        let cd = ctx.assume(&mk_eq(&bool_var("c"), &bool_var("d")).unwrap()).unwrap();
        assert!(matches!(ctx.trans(&ab, &cd), Err(KernelError::MidpointMismatch)));
        let bc = ctx.assume(&mk_eq(&bool_var("b"), &bool_var("c")).unwrap()).unwrap();
        let ac = ctx.trans(&ab, &bc).unwrap();
        assert!(alpha_equal(ac.concl(), &mk_eq(&bool_var("a"), &bool_var("c")).unwrap()));
        assert_eq!(ac.hyps().len(), 2);
    }

    #[test]
    fn assume_requires_bool() {
        let ctx = KernelContext::new(Mode::Minimal);
        let x = Term::var(Var::new("x", Type::ind()));
        assert!(matches!(ctx.assume(&x), Err(KernelError::NotBoolean)));
        let p = bool_var("p");
        let th = ctx.assume(&p).unwrap();
        assert_eq!(th.hyps(), &[p.clone()]);
        assert!(alpha_equal(th.concl(), &p));
    }

    #[test]
    fn abs_var_free_in_hyps() {
        let ctx = KernelContext::new(Mode::Minimal);
        let x = Var::new("x", Type::bool());
        let hx = ctx.assume(&mk_eq(&Term::var(x.clone()), &Term::var(x.clone())).unwrap()).unwrap();
        assert!(matches!(ctx.abs(&x, &hx), Err(KernelError::VarFreeInHyps(_))));
        let r = ctx.refl(&Term::var(x.clone())).unwrap();
        let th = ctx.abs(&x, &r).unwrap();
        let (l, _) = dest_eq(th.concl()).unwrap();
        assert!(l.dest_abs().is_some());
    }

    #[test]
    fn extended_rules_gated() {
        let min = KernelContext::new(Mode::Minimal);
        let ext = KernelContext::new(Mode::Extended);
        let p = bool_var("p");
        let q = bool_var("q");
        let imp = mk_imp(&p, &q).unwrap();
        // minimal context cannot even build the term through assume
        // (==> is undeclared), and the rule itself refuses.
        assert!(matches!(min.validate_term(&imp), Err(KernelError::UndeclaredConstant(_))));
        let ipq = ext.assume(&imp).unwrap();
        let ip = ext.assume(&p).unwrap();
        assert!(matches!(min.mp(&ipq, &ip), Err(KernelError::WrongMode)));
        let th = ext.mp(&ipq, &ip).unwrap();
        assert!(alpha_equal(th.concl(), &q));
        assert_eq!(th.hyps().len(), 2);
    }

    #[test]
    fn disch_gen_spec_roundtrip() {
        let ext = KernelContext::new(Mode::Extended);
        let p = bool_var("p");
        let th = ext.assume(&p).unwrap();
        let d = ext.disch(&p, &th).unwrap();
        assert!(d.hyps().is_empty());
        let back = ext.mp(&d, &th).unwrap();
        assert!(alpha_equal(back.concl(), &p));

        let x = Var::new("x", Type::var("A"));
        let r = ext.refl(&Term::var(x.clone())).unwrap();
        let g = ext.gen(&x, &r).unwrap();
        assert!(dest_forall(g.concl()).is_some());
        let c = Term::var(Var::new("c", Type::var("A")));
        let s = ext.spec(&c, &g).unwrap();
        assert!(alpha_equal(s.concl(), &mk_eq(&c, &c).unwrap()));
        // wrong witness type
        let cb = bool_var("c");
        assert!(matches!(ext.spec(&cb, &g), Err(KernelError::TypeMismatch)));
    }

    #[test]
    fn define_const_checks() {
        let mut ctx = KernelContext::new(Mode::Minimal);
        let p = Var::new("p", Type::bool());
        let idb = Term::abs(p.clone(), Term::var(p.clone()));
        let rhs = mk_eq(&idb, &idb).unwrap();
        let (c, th) = ctx.define_const("T", &rhs).unwrap();
        assert_eq!(c.type_of().unwrap(), Type::bool());
        assert!(th.hyps().is_empty());
        assert!(matches!(ctx.define_const("T", &rhs), Err(KernelError::NameClash(_))));
        // not closed
        let open = Term::var(p);
        assert!(matches!(ctx.define_const("U", &open), Err(KernelError::NotClosed)));
        // type variable escape: \x:A. T has type A -> bool, fine; but
        // an equation at type A hidden inside a bool term escapes.
        let xa = Var::new("x", Type::var("A"));
        let esc = mk_eq(
            &Term::abs(xa.clone(), Term::var(xa.clone())),
            &Term::abs(xa, Term::var(Var::new("x", Type::var("A")))),
        )
        .unwrap();
        assert!(matches!(ctx.define_const("V", &esc), Err(KernelError::TypeVarEscape(_))));
    }

    #[test]
    fn new_axiom_growth() {
        let mut ctx = KernelContext::new(Mode::Minimal);
        assert_eq!(ctx.axioms().len(), 0);
        let p = bool_var("p");
        let eq = mk_eq(&p, &p).unwrap();
        ctx.new_axiom(&eq).unwrap();
        assert_eq!(ctx.axioms().len(), 1);
        assert!(matches!(
            ctx.new_axiom(&Term::var(Var::new("x", Type::ind()))),
            Err(KernelError::NotBoolean)
        ));
        assert_eq!(ctx.axioms().len(), 1);
    }

    #[test]
    fn hyp_dedup_is_alpha_aware() {
        let ctx = KernelContext::new(Mode::Minimal);
        let x = Var::new("x", Type::bool());
        let y = Var::new("y", Type::bool());
        let lx = Term::abs(x.clone(), Term::var(x));
        let ly = Term::abs(y.clone(), Term::var(y));
        let p1 = mk_eq(&lx, &lx).unwrap();
        let p2 = mk_eq(&ly, &ly).unwrap();
        let a = ctx.assume(&p1).unwrap();
        let b = ctx.assume(&p2).unwrap();
        let th = ctx.deduct_antisym(&a, &b).unwrap();
        // p1 and p2 are alpha-equal, mutual removal empties the set
        assert!(th.hyps().is_empty());
    }
}
