//! Deterministic random generation of well-typed terms and
//! substitutions. A tiny xorshift generator keeps the oracle loops
//! reproducible without pulling a dependency into the test support
//! crate.

use holkit_core::syntax::{Term, TermSubst, Type, Var};

pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed.wrapping_mul(0x9e3779b97f4a7c15).max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    pub fn flip(&mut self) -> bool {
        self.next() & 1 == 1
    }
}

const NAMES: &[&str] = &["x", "y", "z", "f", "g"];

/// A small random type over bool, ind, a type variable and arrows.
pub fn gen_type(rng: &mut Rng, depth: usize) -> Type {
    if depth == 0 || rng.below(3) == 0 {
        match rng.below(3) {
            0 => Type::bool(),
            1 => Type::ind(),
            _ => Type::var("A"),
        }
    } else {
        Type::fun(gen_type(rng, depth - 1), gen_type(rng, depth - 1))
    }
}

/// A random well-typed term of the given type. Binder and free names
/// are drawn from the same small pool, so shadowing and capture
/// opportunities are frequent.
pub fn gen_term(rng: &mut Rng, ty: &Type, scope: &mut Vec<Var>, fuel: usize) -> Term {
    // prefer an in-scope variable of the right type now and then
    let candidates: Vec<Var> = scope.iter().filter(|v| v.ty == *ty).cloned().collect();
    if !candidates.is_empty() && rng.below(3) == 0 {
        return Term::var(candidates[rng.below(candidates.len())].clone());
    }
    if fuel > 0 {
        if let Some((dom, cod)) = ty.dest_fun() {
            if rng.flip() {
                let v = Var::new(NAMES[rng.below(NAMES.len())], dom.clone());
                scope.push(v.clone());
                let body = gen_term(rng, &cod.clone(), scope, fuel - 1);
                scope.pop();
                return Term::abs(v, body);
            }
        }
        if rng.below(3) == 0 {
            let arg_ty = gen_type(rng, 1);
            let fun = gen_term(rng, &Type::fun(arg_ty.clone(), ty.clone()), scope, fuel - 1);
            let arg = gen_term(rng, &arg_ty, scope, fuel - 1);
            return Term::app(fun, arg).expect("generated application is well-typed");
        }
    }
    if rng.flip() {
        Term::var(Var::new(NAMES[rng.below(NAMES.len())], ty.clone()))
    } else {
        Term::constant("k", ty.clone())
    }
}

/// A random substitution on some of the term's free variables, with
/// replacements built from the same hostile name pool.
pub fn gen_subst(rng: &mut Rng, t: &Term, fuel: usize) -> TermSubst {
    let mut pairs = Vec::new();
    for v in t.free_vars() {
        if rng.flip() {
            let mut scope = Vec::new();
            let r = gen_term(rng, &v.ty, &mut scope, fuel);
            pairs.push((v, r));
        }
    }
    TermSubst::new(pairs).expect("domain vars are distinct and types match")
}
