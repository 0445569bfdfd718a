//! A locally-nameless term model: bound variables are indices, free
//! variables keep their (name, type) identity. Conversion from named
//! terms erases binder names, so structural equality on [`DbTerm`] is
//! exactly alpha equivalence, and substitution needs no renaming.

use holkit_core::syntax::{Name, Term, TermKind, Type, TypeSubst, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DbTerm {
    Bound(usize),
    Free(Var),
    Const(Name, Type),
    App(Box<DbTerm>, Box<DbTerm>),
    /// Binder name erased; only the annotation type remains.
    Abs(Type, Box<DbTerm>),
}

/// Converts a named term; bound occurrences become indices counting
/// toward the nearest enclosing binder.
pub fn to_db(t: &Term) -> DbTerm {
    fn go(env: &mut Vec<Var>, t: &Term) -> DbTerm {
        match t.kind() {
            TermKind::Var(v) => match env.iter().rev().position(|w| w == v) {
                Some(i) => DbTerm::Bound(i),
                None => DbTerm::Free(v.clone()),
            },
            TermKind::Const(n, ty) => DbTerm::Const(n.clone(), ty.clone()),
            TermKind::App(f, a) => DbTerm::App(Box::new(go(env, f)), Box::new(go(env, a))),
            TermKind::Abs(v, b) => {
                env.push(v.clone());
                let body = go(env, b);
                env.pop();
                DbTerm::Abs(v.ty.clone(), Box::new(body))
            }
        }
    }
    go(&mut Vec::new(), t)
}

/// Alpha equivalence through the de Bruijn model.
pub fn alpha_eq_oracle(a: &Term, b: &Term) -> bool {
    to_db(a) == to_db(b)
}

impl DbTerm {
    /// Simultaneous substitution of free variables. Replacements are
    /// locally closed, so no index shifting is required.
    pub fn subst_free(&self, map: &[(Var, DbTerm)]) -> DbTerm {
        match self {
            DbTerm::Bound(i) => DbTerm::Bound(*i),
            DbTerm::Free(v) => map
                .iter()
                .find(|(w, _)| w == v)
                .map(|(_, r)| r.clone())
                .unwrap_or_else(|| self.clone()),
            DbTerm::Const(..) => self.clone(),
            DbTerm::App(f, a) => DbTerm::App(
                Box::new(f.subst_free(map)),
                Box::new(a.subst_free(map)),
            ),
            DbTerm::Abs(ty, b) => DbTerm::Abs(ty.clone(), Box::new(b.subst_free(map))),
        }
    }

    /// Replaces index `depth` with `arg` and decrements deeper indices:
    /// the opening step of beta reduction.
    fn open(&self, depth: usize, arg: &DbTerm) -> DbTerm {
        match self {
            DbTerm::Bound(i) => {
                if *i == depth {
                    arg.clone()
                } else if *i > depth {
                    DbTerm::Bound(i - 1)
                } else {
                    DbTerm::Bound(*i)
                }
            }
            DbTerm::Free(_) | DbTerm::Const(..) => self.clone(),
            DbTerm::App(f, a) => {
                DbTerm::App(Box::new(f.open(depth, arg)), Box::new(a.open(depth, arg)))
            }
            DbTerm::Abs(ty, b) => DbTerm::Abs(ty.clone(), Box::new(b.open(depth + 1, arg))),
        }
    }

    /// Contracts a top-level redex, or returns `None`.
    pub fn beta(&self) -> Option<DbTerm> {
        match self {
            DbTerm::App(f, a) => match f.as_ref() {
                DbTerm::Abs(_, b) => Some(b.open(0, a)),
                _ => None,
            },
            _ => None,
        }
    }

    /// Applies a type substitution to every annotation. With nameless
    /// binders there is nothing to rename.
    pub fn map_types(&self, subst: &TypeSubst) -> DbTerm {
        match self {
            DbTerm::Bound(i) => DbTerm::Bound(*i),
            DbTerm::Free(v) => DbTerm::Free(Var {
                name: v.name.clone(),
                ty: subst.apply(&v.ty),
            }),
            DbTerm::Const(n, ty) => DbTerm::Const(n.clone(), subst.apply(ty)),
            DbTerm::App(f, a) => DbTerm::App(
                Box::new(f.map_types(subst)),
                Box::new(a.map_types(subst)),
            ),
            DbTerm::Abs(ty, b) => DbTerm::Abs(subst.apply(ty), Box::new(b.map_types(subst))),
        }
    }

    /// Rebuilds a named term, giving every binder a fresh name from a
    /// counter. Useful for producing alpha-variants of a term.
    pub fn to_named(&self, prefix: &str) -> Term {
        fn go(t: &DbTerm, prefix: &str, env: &mut Vec<Var>, counter: &mut usize) -> Term {
            match t {
                DbTerm::Bound(i) => Term::var(env[env.len() - 1 - i].clone()),
                DbTerm::Free(v) => Term::var(v.clone()),
                DbTerm::Const(n, ty) => Term::constant(n, ty.clone()),
                DbTerm::App(f, a) => {
                    let fun = go(f, prefix, env, counter);
                    let arg = go(a, prefix, env, counter);
                    // types were preserved, so the raw pairing is fine
                    Term::app(fun, arg).expect("reconstruction preserves typing")
                }
                DbTerm::Abs(ty, b) => {
                    let v = Var::new(&format!("{}{}", prefix, counter), ty.clone());
                    *counter += 1;
                    env.push(v.clone());
                    let body = go(b, prefix, env, counter);
                    env.pop();
                    Term::abs(v, body)
                }
            }
        }
        go(self, prefix, &mut Vec::new(), &mut 0)
    }

    /// Structural type inference with a stack of binder types.
    pub fn type_of(&self) -> Option<Type> {
        fn go(env: &mut Vec<Type>, t: &DbTerm) -> Option<Type> {
            match t {
                DbTerm::Bound(i) => env.iter().rev().nth(*i).cloned(),
                DbTerm::Free(v) => Some(v.ty.clone()),
                DbTerm::Const(_, ty) => Some(ty.clone()),
                DbTerm::App(f, a) => {
                    let fty = go(env, f)?;
                    let aty = go(env, a)?;
                    match fty.dest_fun() {
                        Some((dom, cod)) if *dom == aty => Some(cod.clone()),
                        _ => None,
                    }
                }
                DbTerm::Abs(ty, b) => {
                    env.push(ty.clone());
                    let bty = go(env, b)?;
                    env.pop();
                    Some(Type::fun(ty.clone(), bty))
                }
            }
        }
        go(&mut Vec::new(), self)
    }
}
