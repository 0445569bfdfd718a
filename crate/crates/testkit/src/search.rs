//! A bounded backward proof search for minimal intuitionistic logic
//! with a propositional quantifier. Used to compare candidate
//! definitions of conjunction: a sound definition must let the left
//! projection be derived, and the search exhibits (or fails to find)
//! the derivation within a depth bound.

/// Propositional formulas; `Bound` is a de Bruijn reference to an
/// enclosing propositional quantifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prop {
    Atom(char),
    Bound(usize),
    Imp(Box<Prop>, Box<Prop>),
    All(Box<Prop>),
}

impl Prop {
    pub fn atom(c: char) -> Prop {
        Prop::Atom(c)
    }

    pub fn imp(a: Prop, b: Prop) -> Prop {
        Prop::Imp(Box::new(a), Box::new(b))
    }

    pub fn all(body: Prop) -> Prop {
        Prop::All(Box::new(body))
    }

    fn open(&self, depth: usize, arg: &Prop) -> Prop {
        match self {
            Prop::Atom(_) => self.clone(),
            Prop::Bound(i) => {
                if *i == depth {
                    arg.clone()
                } else if *i > depth {
                    Prop::Bound(i - 1)
                } else {
                    self.clone()
                }
            }
            Prop::Imp(a, b) => Prop::Imp(
                Box::new(a.open(depth, arg)),
                Box::new(b.open(depth, arg)),
            ),
            Prop::All(b) => Prop::All(Box::new(b.open(depth + 1, arg))),
        }
    }

    pub fn instantiate(&self, arg: &Prop) -> Option<Prop> {
        match self {
            Prop::All(b) => Some(b.open(0, arg)),
            _ => None,
        }
    }
}

/// Depth-bounded search for `ctx |- goal`. Quantifiers on the left are
/// instantiated with the given candidate formulas.
pub fn provable(ctx: &[Prop], goal: &Prop, candidates: &[Prop], depth: usize) -> bool {
    if ctx.contains(goal) {
        return true;
    }
    if depth == 0 {
        return false;
    }
    if let Prop::Imp(a, b) = goal {
        let mut ctx2 = ctx.to_vec();
        if !ctx2.contains(a) {
            ctx2.push((**a).clone());
        }
        if provable(&ctx2, b, candidates, depth - 1) {
            return true;
        }
    }
    for (i, h) in ctx.iter().enumerate() {
        match h {
            Prop::Imp(a, b) => {
                // use the implication: prove its antecedent, continue
                // with its consequent in place of it
                let mut ctx2 = ctx.to_vec();
                ctx2.remove(i);
                if !ctx2.contains(b) {
                    ctx2.push((**b).clone());
                }
                if provable(&ctx2, goal, candidates, depth - 1)
                    && provable(ctx, a, candidates, depth - 1)
                {
                    return true;
                }
            }
            Prop::All(_) => {
                for c in candidates {
                    if let Some(inst) = h.instantiate(c) {
                        if !ctx.contains(&inst) {
                            let mut ctx2 = ctx.to_vec();
                            ctx2.push(inst);
                            if provable(&ctx2, goal, candidates, depth - 1) {
                                return true;
                            }
                        }
                    }
                }
            }
            Prop::Atom(_) | Prop::Bound(_) => {}
        }
    }
    false
}

/// `\p q. !x. (p -> (q -> x)) -> x` applied to atoms: the conjunction
/// encoding with the projections derivable.
pub fn and_curried(p: char, q: char) -> Prop {
    Prop::all(Prop::imp(
        Prop::imp(Prop::atom(p), Prop::imp(Prop::atom(q), Prop::Bound(0))),
        Prop::Bound(0),
    ))
}

/// `\p q. !x. p -> ((q -> x) -> x)` applied to atoms: the variant
/// whose left projection the search cannot derive.
pub fn and_flat(p: char, q: char) -> Prop {
    Prop::all(Prop::imp(
        Prop::atom(p),
        Prop::imp(Prop::imp(Prop::atom(q), Prop::Bound(0)), Prop::Bound(0)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections_from_curried_form() {
        let p = Prop::atom('p');
        let q = Prop::atom('q');
        let cands = [p.clone(), q.clone()];
        let and = and_curried('p', 'q');
        assert!(provable(&[and.clone()], &p, &cands, 6));
        assert!(provable(&[and], &q, &cands, 6));
    }

    #[test]
    fn no_left_projection_from_flat_form() {
        let p = Prop::atom('p');
        let q = Prop::atom('q');
        let cands = [p.clone(), q.clone(), Prop::imp(q.clone(), p.clone())];
        let and = and_flat('p', 'q');
        assert!(!provable(&[and.clone()], &p, &cands, 8));
        // the flat form still proves things that do not need the
        // projection, e.g. q -> p follows from p only via the flat
        // form's right-projection-like shape? It should at least prove
        // itself.
        assert!(provable(&[and.clone()], &and, &cands, 2));
    }

    #[test]
    fn intro_holds_for_both_forms() {
        // p, q |- and(p, q) for both candidate definitions
        let p = Prop::atom('p');
        let q = Prop::atom('q');
        let cands = [p.clone(), q.clone()];
        for and in [and_curried('p', 'q'), and_flat('p', 'q')] {
            // |- !x. ... needs a quantifier-right rule the search does
            // not implement; check the instantiated bodies instead.
            for c in &cands {
                let inst = and.instantiate(c).unwrap();
                assert!(provable(&[p.clone(), q.clone()], &inst, &cands, 8));
            }
        }
    }
}
