//! Pure syntax: polymorphic simple types and typed lambda terms.
//!
//! Terms are immutable values with structural sharing through [`Arc`];
//! the sharing is never observable. Variable identity is the pair
//! (name, type): two variables with the same name but different types
//! are distinct.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Identifier for variables, constants and type operators.
pub type Name = String;

/// A polymorphic simple type: a type variable or a type-operator
/// application. `bool`, `ind` and `->` are ordinary operators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Type {
    Var(Name),
    App(Name, Vec<Type>),
}

impl Type {
    pub fn var(name: &str) -> Type {
        Type::Var(name.into())
    }

    pub fn bool() -> Type {
        Type::App("bool".into(), Vec::new())
    }

    pub fn ind() -> Type {
        Type::App("ind".into(), Vec::new())
    }

    pub fn fun(dom: Type, cod: Type) -> Type {
        Type::App("->".into(), alloc::vec![dom, cod])
    }

    pub fn is_bool(&self) -> bool {
        matches!(self, Type::App(op, args) if op == "bool" && args.is_empty())
    }

    /// Splits a function type into domain and codomain.
    pub fn dest_fun(&self) -> Option<(&Type, &Type)> {
        match self {
            Type::App(op, args) if op == "->" && args.len() == 2 => Some((&args[0], &args[1])),
            _ => None,
        }
    }

    /// Collects the type variables occurring in `self` into `out`.
    pub fn collect_vars(&self, out: &mut BTreeSet<Name>) {
        match self {
            Type::Var(n) => {
                out.insert(n.clone());
            }
            Type::App(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Var(n) => write!(f, "{}", n),
            Type::App(op, args) if op == "->" && args.len() == 2 => {
                write!(f, "({} -> {})", args[0], args[1])
            }
            Type::App(op, args) => {
                if args.is_empty() {
                    write!(f, "{}", op)
                } else {
                    write!(f, "{}(", op)?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{}", a)?;
                    }
                    write!(f, ")")
                }
            }
        }
    }
}

/// A term variable. Identity is the (name, type) pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub name: Name,
    pub ty: Type,
}

impl Var {
    pub fn new(name: &str, ty: Type) -> Var {
        Var { name: name.into(), ty }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// The head constructor of a term.
#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermKind {
    Var(Var),
    Const(Name, Type),
    App(Term, Term),
    Abs(Var, Term),
}

/// A typed lambda term. Cheap to clone; subterms are shared.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(Arc<TermKind>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyntaxError {
    /// An application node whose operator is not a function from the
    /// operand's type. Only reachable on hand-built raw terms.
    IllTypedApplication,
    /// `beta_contract` was handed something other than `(\x. b) u`.
    NotARedex,
    /// A substitution with a repeated domain variable.
    DuplicateSubstVar(Name),
    /// A term substitution pair whose replacement type differs from the
    /// variable's type.
    SubstTypeMismatch(Name),
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxError::IllTypedApplication => write!(f, "ill-typed application"),
            SyntaxError::NotARedex => write!(f, "not a beta redex"),
            SyntaxError::DuplicateSubstVar(n) => {
                write!(f, "substitution domain repeats variable {}", n)
            }
            SyntaxError::SubstTypeMismatch(n) => {
                write!(f, "substitution replaces {} with a term of different type", n)
            }
        }
    }
}

impl Term {
    pub fn kind(&self) -> &TermKind {
        &self.0
    }

    pub fn var(v: Var) -> Term {
        Term(Arc::new(TermKind::Var(v)))
    }

    pub fn constant(name: &str, ty: Type) -> Term {
        Term(Arc::new(TermKind::Const(name.into(), ty)))
    }

    /// Builds an application, checking the arrow invariant.
    pub fn app(fun: Term, arg: Term) -> Result<Term, SyntaxError> {
        let fty = fun.type_of()?;
        let aty = arg.type_of()?;
        match fty.dest_fun() {
            Some((dom, _)) if *dom == aty => Ok(Term(Arc::new(TermKind::App(fun, arg)))),
            _ => Err(SyntaxError::IllTypedApplication),
        }
    }

    /// Builds an application without checking types. Used internally
    /// where the invariant is known to hold.
    pub(crate) fn app_unchecked(fun: Term, arg: Term) -> Term {
        Term(Arc::new(TermKind::App(fun, arg)))
    }

    pub fn abs(bound: Var, body: Term) -> Term {
        Term(Arc::new(TermKind::Abs(bound, body)))
    }

    /// The unique type of a well-formed term.
    pub fn type_of(&self) -> Result<Type, SyntaxError> {
        match self.kind() {
            TermKind::Var(v) => Ok(v.ty.clone()),
            TermKind::Const(_, ty) => Ok(ty.clone()),
            TermKind::App(f, a) => {
                let fty = f.type_of()?;
                let aty = a.type_of()?;
                match fty.dest_fun() {
                    Some((dom, cod)) if *dom == aty => Ok(cod.clone()),
                    _ => Err(SyntaxError::IllTypedApplication),
                }
            }
            TermKind::Abs(v, b) => Ok(Type::fun(v.ty.clone(), b.type_of()?)),
        }
    }

    pub fn is_var(&self, v: &Var) -> bool {
        matches!(self.kind(), TermKind::Var(w) if w == v)
    }

    pub fn dest_app(&self) -> Option<(&Term, &Term)> {
        match self.kind() {
            TermKind::App(f, a) => Some((f, a)),
            _ => None,
        }
    }

    pub fn dest_abs(&self) -> Option<(&Var, &Term)> {
        match self.kind() {
            TermKind::Abs(v, b) => Some((v, b)),
            _ => None,
        }
    }

    /// Binary destructuring `c s t` for a named constant `c`.
    pub fn dest_binop(&self, cname: &str) -> Option<(&Term, &Term)> {
        let (fx, rhs) = self.dest_app()?;
        let (c, lhs) = fx.dest_app()?;
        match c.kind() {
            TermKind::Const(n, _) if n == cname => Some((lhs, rhs)),
            _ => None,
        }
    }

    /// Free variables; an abstraction removes its binder.
    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free_vars(&mut out);
        out
    }

    fn collect_free_vars(&self, out: &mut BTreeSet<Var>) {
        match self.kind() {
            TermKind::Var(v) => {
                out.insert(v.clone());
            }
            TermKind::Const(..) => {}
            TermKind::App(f, a) => {
                f.collect_free_vars(out);
                a.collect_free_vars(out);
            }
            TermKind::Abs(v, b) => {
                let mut inner = BTreeSet::new();
                b.collect_free_vars(&mut inner);
                inner.remove(v);
                out.append(&mut inner);
            }
        }
    }

    pub fn has_free_var(&self, v: &Var) -> bool {
        match self.kind() {
            TermKind::Var(w) => w == v,
            TermKind::Const(..) => false,
            TermKind::App(f, a) => f.has_free_var(v) || a.has_free_var(v),
            TermKind::Abs(w, b) => w != v && b.has_free_var(v),
        }
    }

    /// Type variables occurring anywhere in the term, including binder
    /// annotations and constant instance types.
    pub fn type_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_type_vars(&mut out);
        out
    }

    fn collect_type_vars(&self, out: &mut BTreeSet<Name>) {
        match self.kind() {
            TermKind::Var(v) => v.ty.collect_vars(out),
            TermKind::Const(_, ty) => ty.collect_vars(out),
            TermKind::App(f, a) => {
                f.collect_type_vars(out);
                a.collect_type_vars(out);
            }
            TermKind::Abs(v, b) => {
                v.ty.collect_vars(out);
                b.collect_type_vars(out);
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            TermKind::Var(v) => write!(f, "{}", v.name),
            TermKind::Const(n, _) => write!(f, "{}", n),
            TermKind::App(fun, arg) => write!(f, "({} {})", fun, arg),
            TermKind::Abs(v, b) => write!(f, "(\\{}:{}. {})", v.name, v.ty, b),
        }
    }
}

/// Total order on terms up to alpha equivalence. Bound variables are
/// compared by binder position, free variables by (name, type). The
/// order is used to keep hypothesis sets canonically sorted so that
/// serialisation is deterministic.
pub fn alpha_cmp(s: &Term, t: &Term) -> Ordering {
    fn var_rank<'a>(env: &[(&'a Var, &'a Var)], v: &Var, left: bool) -> Option<usize> {
        // innermost binder wins
        env.iter().rev().position(|(x, y)| if left { *x == v } else { *y == v })
    }
    fn go<'a>(env: &mut Vec<(&'a Var, &'a Var)>, s: &'a Term, t: &'a Term) -> Ordering {
        match (s.kind(), t.kind()) {
            (TermKind::Var(v), TermKind::Var(w)) => {
                let rv = var_rank(env, v, true);
                let rw = var_rank(env, w, false);
                match (rv, rw) {
                    (Some(i), Some(j)) => i.cmp(&j),
                    (Some(_), None) => Ordering::Less,
                    (None, Some(_)) => Ordering::Greater,
                    (None, None) => v.cmp(w),
                }
            }
            (TermKind::Var(..), _) => Ordering::Less,
            (_, TermKind::Var(..)) => Ordering::Greater,
            (TermKind::Const(n1, t1), TermKind::Const(n2, t2)) => {
                n1.cmp(n2).then_with(|| t1.cmp(t2))
            }
            (TermKind::Const(..), _) => Ordering::Less,
            (_, TermKind::Const(..)) => Ordering::Greater,
            (TermKind::App(f1, a1), TermKind::App(f2, a2)) => {
                go(env, f1, f2).then_with(|| go(env, a1, a2))
            }
            (TermKind::App(..), _) => Ordering::Less,
            (_, TermKind::App(..)) => Ordering::Greater,
            (TermKind::Abs(v, b1), TermKind::Abs(w, b2)) => v.ty.cmp(&w.ty).then_with(|| {
                env.push((v, w));
                let o = go(env, b1, b2);
                env.pop();
                o
            }),
        }
    }
    go(&mut Vec::new(), s, t)
}

/// Equality up to consistent renaming of bound variables; types are
/// compared structurally.
pub fn alpha_equal(s: &Term, t: &Term) -> bool {
    alpha_cmp(s, t) == Ordering::Equal
}

/// A simultaneous term substitution with pairwise-distinct domain
/// variables; each replacement has the type of its variable.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermSubst {
    pairs: Vec<(Var, Term)>,
}

impl TermSubst {
    pub fn new(pairs: Vec<(Var, Term)>) -> Result<TermSubst, SyntaxError> {
        for (i, (v, t)) in pairs.iter().enumerate() {
            if t.type_of().map_err(|_| SyntaxError::IllTypedApplication)? != v.ty {
                return Err(SyntaxError::SubstTypeMismatch(v.name.clone()));
            }
            if pairs[..i].iter().any(|(w, _)| w == v) {
                return Err(SyntaxError::DuplicateSubstVar(v.name.clone()));
            }
        }
        Ok(TermSubst { pairs })
    }

    pub fn single(v: Var, t: Term) -> Result<TermSubst, SyntaxError> {
        TermSubst::new(alloc::vec![(v, t)])
    }

    pub fn pairs(&self) -> &[(Var, Term)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn lookup(&self, v: &Var) -> Option<&Term> {
        self.pairs.iter().find(|(w, _)| w == v).map(|(_, t)| t)
    }
}

/// A simultaneous type substitution with pairwise-distinct domain
/// type variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TypeSubst {
    pairs: Vec<(Name, Type)>,
}

impl TypeSubst {
    pub fn new(pairs: Vec<(Name, Type)>) -> Result<TypeSubst, SyntaxError> {
        for (i, (n, _)) in pairs.iter().enumerate() {
            if pairs[..i].iter().any(|(m, _)| m == n) {
                return Err(SyntaxError::DuplicateSubstVar(n.clone()));
            }
        }
        Ok(TypeSubst { pairs })
    }

    pub fn single(n: &str, ty: Type) -> TypeSubst {
        TypeSubst { pairs: alloc::vec![(n.into(), ty)] }
    }

    pub fn pairs(&self) -> &[(Name, Type)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn apply(&self, ty: &Type) -> Type {
        if self.pairs.is_empty() {
            return ty.clone();
        }
        match ty {
            Type::Var(n) => self
                .pairs
                .iter()
                .find(|(m, _)| m == n)
                .map(|(_, t)| t.clone())
                .unwrap_or_else(|| ty.clone()),
            Type::App(op, args) => {
                Type::App(op.clone(), args.iter().map(|a| self.apply(a)).collect())
            }
        }
    }
}

/// Returns `v` unchanged when it does not occur in `avoid`, otherwise
/// the variable with the smallest number of `'` suffixes appended to
/// its name that is fresh. Deterministic so serialisation reproduces
/// byte-for-byte.
pub fn fresh_variant(avoid: &BTreeSet<Var>, v: &Var) -> Var {
    if !avoid.contains(v) {
        return v.clone();
    }
    let mut name = v.name.clone();
    loop {
        name.push('\'');
        let cand = Var { name: name.clone(), ty: v.ty.clone() };
        if !avoid.contains(&cand) {
            return cand;
        }
    }
}

/// Capture-avoiding simultaneous substitution. Bound variables are
/// renamed to fresh variants exactly when capture would occur.
pub fn subst_term(subst: &TermSubst, t: &Term) -> Term {
    if subst.is_empty() {
        return t.clone();
    }
    match t.kind() {
        TermKind::Var(v) => subst.lookup(v).cloned().unwrap_or_else(|| t.clone()),
        TermKind::Const(..) => t.clone(),
        TermKind::App(f, a) => {
            let f2 = subst_term(subst, f);
            let a2 = subst_term(subst, a);
            if f2 == *f && a2 == *a {
                t.clone()
            } else {
                Term::app_unchecked(f2, a2)
            }
        }
        TermKind::Abs(x, b) => {
            // keep only pairs that can act inside the body
            let live: Vec<(Var, Term)> = subst
                .pairs
                .iter()
                .filter(|(v, _)| v != x && b.has_free_var(v))
                .cloned()
                .collect();
            if live.is_empty() {
                return t.clone();
            }
            let captures = live.iter().any(|(_, r)| r.has_free_var(x));
            if !captures {
                let inner = TermSubst { pairs: live };
                Term::abs(x.clone(), subst_term(&inner, b))
            } else {
                let mut avoid: BTreeSet<Var> = BTreeSet::new();
                for (_, r) in &live {
                    avoid.append(&mut r.free_vars());
                }
                avoid.append(&mut b.free_vars());
                let x2 = fresh_variant(&avoid, x);
                let mut pairs = live;
                pairs.push((x.clone(), Term::var(x2.clone())));
                let inner = TermSubst { pairs };
                Term::abs(x2, subst_term(&inner, b))
            }
        }
    }
}

/// Applies a type substitution to every type annotation in the term.
/// When instantiation makes a binder collide with a free variable of
/// the body, the binder (the innermost offender) is renamed.
pub fn subst_type(subst: &TypeSubst, t: &Term) -> Term {
    if subst.is_empty() {
        return t.clone();
    }
    fn image_of_free(subst: &TypeSubst, env: &BTreeMap<Var, Var>, v: &Var) -> Var {
        match env.get(v) {
            Some(w) => w.clone(),
            None => Var { name: v.name.clone(), ty: subst.apply(&v.ty) },
        }
    }
    fn go(subst: &TypeSubst, env: &mut BTreeMap<Var, Var>, t: &Term) -> Term {
        match t.kind() {
            TermKind::Var(v) => Term::var(image_of_free(subst, env, v)),
            TermKind::Const(n, ty) => Term::constant(n, subst.apply(ty)),
            TermKind::App(f, a) => {
                Term::app_unchecked(go(subst, env, f), go(subst, env, a))
            }
            TermKind::Abs(x, b) => {
                let x1 = Var { name: x.name.clone(), ty: subst.apply(&x.ty) };
                // images of the body's other free variables
                let mut images = BTreeSet::new();
                for v in b.free_vars() {
                    if v != *x {
                        images.insert(image_of_free(subst, env, &v));
                    }
                }
                let x2 = fresh_variant(&images, &x1);
                let shadowed = env.insert(x.clone(), x2.clone());
                let b2 = go(subst, env, b);
                match shadowed {
                    Some(w) => {
                        env.insert(x.clone(), w);
                    }
                    None => {
                        env.remove(x);
                    }
                }
                Term::abs(x2, b2)
            }
        }
    }
    go(subst, &mut BTreeMap::new(), t)
}

/// Contracts a top-level beta redex `(\x. b) u` to `b[u/x]`.
pub fn beta_contract(t: &Term) -> Result<Term, SyntaxError> {
    let (f, u) = t.dest_app().ok_or(SyntaxError::NotARedex)?;
    let (x, b) = f.dest_abs().ok_or(SyntaxError::NotARedex)?;
    let subst = TermSubst::single(x.clone(), u.clone())?;
    Ok(subst_term(&subst, b))
}

/// First-order matching of a generic type against a concrete instance.
/// Returns the substitution on the generic's type variables, or `None`
/// when `concrete` is not an instance.
pub fn match_type(generic: &Type, concrete: &Type) -> Option<TypeSubst> {
    fn go(g: &Type, c: &Type, acc: &mut Vec<(Name, Type)>) -> bool {
        match g {
            Type::Var(n) => match acc.iter().find(|(m, _)| m == n) {
                Some((_, bound)) => bound == c,
                None => {
                    acc.push((n.clone(), c.clone()));
                    true
                }
            },
            Type::App(op, args) => match c {
                Type::App(cop, cargs) if cop == op && cargs.len() == args.len() => {
                    args.iter().zip(cargs).all(|(a, b)| go(a, b, acc))
                }
                _ => false,
            },
        }
    }
    let mut acc = Vec::new();
    if go(generic, concrete, &mut acc) {
        Some(TypeSubst { pairs: acc })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Type {
        Type::bool()
    }

    fn v(n: &str, ty: Type) -> Var {
        Var::new(n, ty)
    }

    #[test]
    fn type_of_basics() {
        let x = Term::var(v("x", b()));
        assert_eq!(x.type_of().unwrap(), b());
        let id = Term::abs(v("x", Type::ind()), Term::var(v("x", Type::ind())));
        assert_eq!(id.type_of().unwrap(), Type::fun(Type::ind(), Type::ind()));
        let idb = Term::abs(v("x", b()), Term::var(v("x", b())));
        let app = Term::app(idb, Term::var(v("y", b()))).unwrap();
        assert_eq!(app.type_of().unwrap(), b());
    }

    #[test]
    fn ill_typed_application_detected() {
        let f = Term::var(v("f", Type::fun(b(), b())));
        let a = Term::var(v("a", Type::ind()));
        assert_eq!(Term::app(f.clone(), a.clone()), Err(SyntaxError::IllTypedApplication));
        let raw = Term::app_unchecked(f, a);
        assert_eq!(raw.type_of(), Err(SyntaxError::IllTypedApplication));
    }

    #[test]
    fn alpha_equal_basics() {
        let lx = Term::abs(v("x", b()), Term::var(v("x", b())));
        let ly = Term::abs(v("y", b()), Term::var(v("y", b())));
        assert!(alpha_equal(&lx, &ly));
        let li = Term::abs(v("x", Type::ind()), Term::var(v("x", Type::ind())));
        assert!(!alpha_equal(&lx, &li));
    }

    #[test]
    fn free_vars_remove_binder() {
        let x = v("x", b());
        let y = v("y", Type::fun(b(), b()));
        // \x. y x
        let t = Term::abs(
            x.clone(),
            Term::app(Term::var(y.clone()), Term::var(x.clone())).unwrap(),
        );
        let fv = t.free_vars();
        assert!(fv.contains(&y));
        assert!(!fv.contains(&x));
    }

    #[test]
    fn subst_renames_on_capture() {
        // [x := y] (\y. x) => \y'. y
        let x = v("x", b());
        let y = v("y", b());
        let t = Term::abs(y.clone(), Term::var(x.clone()));
        let s = TermSubst::single(x, Term::var(y.clone())).unwrap();
        let r = subst_term(&s, &t);
        let (bv, body) = r.dest_abs().unwrap();
        assert_eq!(bv.name, "y'");
        assert!(body.is_var(&y));
    }

    #[test]
    fn subst_identity() {
        let t = Term::abs(v("x", b()), Term::var(v("x", b())));
        let s = TermSubst::new(Vec::new()).unwrap();
        assert!(alpha_equal(&subst_term(&s, &t), &t));
    }

    #[test]
    fn subst_type_renames_rightmost() {
        // [A := bool] (\x:A. \x:bool. x:A) => \x:bool. \x':bool. x
        let xa = v("x", Type::var("A"));
        let xb = v("x", b());
        let t = Term::abs(xa.clone(), Term::abs(xb, Term::var(xa)));
        let s = TypeSubst::single("A", b());
        let r = subst_type(&s, &t);
        let (outer, body) = r.dest_abs().unwrap();
        assert_eq!(outer, &v("x", b()));
        let (inner, core) = body.dest_abs().unwrap();
        assert_eq!(inner.name, "x'");
        assert!(core.is_var(&v("x", b())));
    }

    #[test]
    fn beta_contract_avoids_capture() {
        // (\x. \y. x) y => \y'. y
        let x = v("x", b());
        let y = v("y", b());
        let f = Term::abs(x.clone(), Term::abs(y.clone(), Term::var(x)));
        let t = Term::app(f, Term::var(y.clone())).unwrap();
        let r = beta_contract(&t).unwrap();
        let (bv, body) = r.dest_abs().unwrap();
        assert_eq!(bv.name, "y'");
        assert!(body.is_var(&y));
        assert_eq!(beta_contract(&Term::var(y)), Err(SyntaxError::NotARedex));
    }

    #[test]
    fn fresh_variant_primes() {
        let x = v("x", b());
        let mut avoid = BTreeSet::new();
        assert_eq!(fresh_variant(&avoid, &x), x);
        avoid.insert(x.clone());
        assert_eq!(fresh_variant(&avoid, &x).name, "x'");
        avoid.insert(v("x'", b()));
        assert_eq!(fresh_variant(&avoid, &x).name, "x''");
    }

    #[test]
    fn match_type_instance() {
        let generic = Type::fun(Type::var("A"), Type::fun(Type::var("A"), b()));
        let conc = Type::fun(b(), Type::fun(b(), b()));
        let s = match_type(&generic, &conc).unwrap();
        assert_eq!(s.apply(&generic), conc);
        let bad = Type::fun(b(), Type::fun(Type::ind(), b()));
        assert!(match_type(&generic, &bad).is_none());
    }
}
