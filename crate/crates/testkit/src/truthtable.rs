//! A finite denotational evaluator for boolean-typed HOL terms.
//!
//! Types built from `bool` and `->` have small finite domains, so a
//! closed boolean term can be evaluated outright and an open one
//! checked under every assignment to its free variables. Connectives
//! are interpreted by their standard semantics, which is what their
//! definitions unfold to.

use holkit_core::syntax::{Term, TermKind, Type, Var};

/// A value in the finite model: a boolean or a function graph over the
/// enumerated domain of its argument type.
#[derive(Debug, Clone, PartialEq)]
pub enum Val {
    B(bool),
    Fun(Vec<(Val, Val)>),
}

const MAX_DOMAIN: usize = 256;

/// Enumerates the domain of a type, or `None` when it is not a finite
/// type over bool and arrows (or too large to enumerate).
pub fn enumerate(ty: &Type) -> Option<Vec<Val>> {
    if ty.is_bool() {
        return Some(vec![Val::B(false), Val::B(true)]);
    }
    if let Some((dom, cod)) = ty.dest_fun() {
        let dom_vals = enumerate(dom)?;
        let cod_vals = enumerate(cod)?;
        let count = cod_vals.len().checked_pow(dom_vals.len() as u32)?;
        if count > MAX_DOMAIN {
            return None;
        }
        let mut funs = Vec::with_capacity(count);
        for mut idx in 0..count {
            let mut graph = Vec::with_capacity(dom_vals.len());
            for d in &dom_vals {
                graph.push((d.clone(), cod_vals[idx % cod_vals.len()].clone()));
                idx /= cod_vals.len();
            }
            funs.push(Val::Fun(graph));
        }
        return Some(funs);
    }
    None
}

fn apply(f: &Val, x: &Val) -> Option<Val> {
    match f {
        Val::Fun(graph) => graph.iter().find(|(d, _)| d == x).map(|(_, v)| v.clone()),
        Val::B(_) => None,
    }
}

/// Curries a boolean binary connective into a `Val` over bool.
fn binop(f: impl Fn(bool, bool) -> bool) -> Val {
    let graph = [false, true]
        .iter()
        .map(|&a| {
            (
                Val::B(a),
                Val::Fun(
                    [false, true]
                        .iter()
                        .map(|&b| (Val::B(b), Val::B(f(a, b))))
                        .collect(),
                ),
            )
        })
        .collect();
    Val::Fun(graph)
}

/// The semantics of a logical constant at its instance type.
fn const_val(name: &str, ty: &Type) -> Option<Val> {
    match name {
        "T" => Some(Val::B(true)),
        "F" => Some(Val::B(false)),
        "~" => Some(Val::Fun(vec![
            (Val::B(false), Val::B(true)),
            (Val::B(true), Val::B(false)),
        ])),
        "/\\" => Some(binop(|a, b| a && b)),
        "\\/" => Some(binop(|a, b| a || b)),
        "==>" => Some(binop(|a, b| !a || b)),
        "=" => {
            let (dom, _) = ty.dest_fun()?;
            let vals = enumerate(dom)?;
            let graph = vals
                .iter()
                .map(|x| {
                    (
                        x.clone(),
                        Val::Fun(vals.iter().map(|y| (y.clone(), Val::B(x == y))).collect()),
                    )
                })
                .collect();
            Some(Val::Fun(graph))
        }
        "!" | "?" => {
            let (pred_ty, _) = ty.dest_fun()?;
            let preds = enumerate(pred_ty)?;
            let (dom, _) = pred_ty.dest_fun()?;
            let dom_vals = enumerate(dom)?;
            let graph = preds
                .into_iter()
                .map(|p| {
                    let holds = |x: &Val| apply(&p, x) == Some(Val::B(true));
                    let out = if name == "!" {
                        dom_vals.iter().all(holds)
                    } else {
                        dom_vals.iter().any(holds)
                    };
                    (p, Val::B(out))
                })
                .collect();
            Some(Val::Fun(graph))
        }
        _ => None,
    }
}

fn eval(t: &Term, env: &mut Vec<(Var, Val)>) -> Option<Val> {
    match t.kind() {
        TermKind::Var(v) => env.iter().rev().find(|(w, _)| w == v).map(|(_, x)| x.clone()),
        TermKind::Const(n, ty) => const_val(n, ty),
        TermKind::App(f, a) => {
            let fv = eval(f, env)?;
            let av = eval(a, env)?;
            apply(&fv, &av)
        }
        TermKind::Abs(v, b) => {
            let dom = enumerate(&v.ty)?;
            let mut graph = Vec::with_capacity(dom.len());
            for d in dom {
                env.push((v.clone(), d.clone()));
                let out = eval(b, env);
                env.pop();
                graph.push((d, out?));
            }
            Some(Val::Fun(graph))
        }
    }
}

/// `Some(true)` when the boolean term evaluates to true under every
/// assignment to its free variables; `None` when the term falls
/// outside the finite fragment (unknown constants, non-finite types).
pub fn is_tautology(t: &Term) -> Option<bool> {
    if !t.type_of().ok()?.is_bool() {
        return None;
    }
    let vars: Vec<Var> = t.free_vars().into_iter().collect();
    let mut domains = Vec::with_capacity(vars.len());
    for v in &vars {
        domains.push(enumerate(&v.ty)?);
    }
    let total: usize = domains.iter().map(|d| d.len()).product();
    for mut idx in 0..total {
        let mut env = Vec::with_capacity(vars.len());
        for (v, dom) in vars.iter().zip(&domains) {
            env.push((v.clone(), dom[idx % dom.len()].clone()));
            idx /= dom.len();
        }
        match eval(t, &mut env)? {
            Val::B(true) => {}
            _ => return Some(false),
        }
    }
    Some(true)
}
