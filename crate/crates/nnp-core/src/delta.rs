//! Positive occurrences of a head, their associated negative expressions,
//! and the body/head De Morgan shift.
//!
//! Every positive-Horn head `H` is strongly equivalent to a conjunction of
//! pairs `(h v delta)`, one per positive occurrence `h` of a literal or
//! `bot` in `H`, where each `delta` is `bot` or a fully negative
//! expression. The `delta` of an occurrence collects, walking up from the
//! occurrence leaf to the root, the sibling disjuncts at every disjunction
//! passed through; conjunctions pass through unchanged. Falsifying `delta`
//! while the body holds is exactly what forces `h`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ast::{Elementary, Literal, NestedExpr, OccurrenceHandle, BOT};
use crate::classify;

/// A positive head element: a literal, or `bot` modeling a constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HeadElem {
    Lit(Literal),
    Bot,
}

/// One `(h v delta)` pair of a head decomposition, anchored at the
/// occurrence it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPair {
    pub occurrence: OccurrenceHandle,
    pub h: HeadElem,
    pub delta: NestedExpr,
}

/// The full decomposition of a positive-Horn head: the conjunction over
/// `pairs` of `(h v delta)` is strongly equivalent to the head. Pairs are
/// ordered left to right by occurrence; repeated literals keep distinct
/// occurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaDecomposition {
    pub pairs: Vec<DeltaPair>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaError {
    NotPositiveHorn,
    BadHandle,
}

impl fmt::Display for DeltaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaError::NotPositiveHorn => write!(f, "head is not positive-Horn"),
            DeltaError::BadHandle => write!(f, "handle does not resolve to a positive occurrence"),
        }
    }
}

/// All positive occurrences (literals and `bot`) of `h`, in left-to-right
/// leaf order. Overlined leaves are negative and excluded; `top` is not a
/// head element.
pub fn positive_occurrences(h: &NestedExpr) -> Vec<(OccurrenceHandle, HeadElem)> {
    let mut out = Vec::new();
    fn walk(e: &NestedExpr, at: OccurrenceHandle, out: &mut Vec<(OccurrenceHandle, HeadElem)>) {
        match e {
            NestedExpr::Elem(Elementary::Lit(l)) => out.push((at, HeadElem::Lit(*l))),
            NestedExpr::Elem(Elementary::Bot) => out.push((at, HeadElem::Bot)),
            NestedExpr::Elem(_) | NestedExpr::Over(_) => {}
            NestedExpr::And(cs) | NestedExpr::Or(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    walk(c, at.child(i as u32), out);
                }
            }
        }
    }
    walk(h, OccurrenceHandle::root(), &mut out);
    out
}

fn delta_at(h: &NestedExpr, occ: &OccurrenceHandle) -> Result<NestedExpr, DeltaError> {
    // Check the handle resolves to a positive occurrence.
    match occ.resolve(h) {
        Some(NestedExpr::Elem(Elementary::Lit(_) | Elementary::Bot)) => {}
        _ => return Err(DeltaError::BadHandle),
    }
    // Walk down the path, collecting sibling disjuncts of every
    // disjunction passed through, outermost first.
    let mut siblings = Vec::new();
    let mut cur = h;
    for &step in &occ.0 {
        if let NestedExpr::Or(cs) = cur {
            for (i, c) in cs.iter().enumerate() {
                if i as u32 != step {
                    siblings.push(c.clone());
                }
            }
        }
        cur = &cur.children()[step as usize];
    }
    Ok(match siblings.len() {
        0 => BOT,
        1 => siblings.into_iter().next().unwrap(),
        _ => NestedExpr::Or(siblings),
    })
}

/// The negative expression paired with one positive occurrence of a
/// positive-Horn head. The result is `bot` (the occurrence is
/// unconditional) or a fully negative expression.
pub fn delta_of(h: &NestedExpr, occ: &OccurrenceHandle) -> Result<NestedExpr, DeltaError> {
    if !classify::is_positive_horn(h) {
        return Err(DeltaError::NotPositiveHorn);
    }
    delta_at(h, occ)
}

/// Decompose a positive-Horn head into its `(h v delta)` pairs.
pub fn h_delta(h: &NestedExpr) -> Result<DeltaDecomposition, DeltaError> {
    if !classify::is_positive_horn(h) {
        return Err(DeltaError::NotPositiveHorn);
    }
    Ok(DeltaDecomposition {
        pairs: decompose_any(h),
    })
}

/// Pair computation without the positive-Horn check; the deltas of a head
/// outside the positive-Horn class need not be negative. Used for
/// classification flags.
pub fn decompose_any(h: &NestedExpr) -> Vec<DeltaPair> {
    positive_occurrences(h)
        .into_iter()
        .map(|(occurrence, elem)| {
            let delta = delta_at(h, &occurrence).expect("occurrence enumerated from the head");
            DeltaPair {
                occurrence,
                h: elem,
                delta,
            }
        })
        .collect()
}

/// Materialize `(h, delta)` pairs back into a head expression: the
/// conjunction of `or(h, delta)` pairs, with unconditional pairs
/// (`delta = bot`) rendered as the bare element and disjunctive deltas
/// spliced into the pair's disjunction (so a positive-Horn CNF
/// decomposes into itself).
pub fn pairs_to_head(pairs: &[(HeadElem, NestedExpr)]) -> NestedExpr {
    let mut conjuncts: Vec<NestedExpr> = Vec::with_capacity(pairs.len());
    for (h, delta) in pairs {
        let h = match h {
            HeadElem::Lit(l) => NestedExpr::lit(*l),
            HeadElem::Bot => BOT,
        };
        match delta {
            NestedExpr::Elem(Elementary::Bot) => conjuncts.push(h),
            NestedExpr::Or(ds) => {
                let mut children = vec![h];
                children.extend(ds.iter().cloned());
                conjuncts.push(NestedExpr::Or(children));
            }
            other => conjuncts.push(NestedExpr::Or(vec![h, other.clone()])),
        }
    }
    match conjuncts.len() {
        0 => NestedExpr::And(Vec::new()),
        1 => conjuncts.into_iter().next().unwrap(),
        _ => NestedExpr::And(conjuncts),
    }
}

impl DeltaDecomposition {
    /// The head expression strongly equivalent to the decomposed head.
    pub fn to_head(&self) -> NestedExpr {
        let pairs: Vec<(HeadElem, NestedExpr)> =
            self.pairs.iter().map(|p| (p.h, p.delta.clone())).collect();
        pairs_to_head(&pairs)
    }
}

/// Shift an overlined (head-side) expression to its body image: swap
/// `and`/`or`, remove overlines, and dualize constants. An interpretation
/// satisfies the image exactly when it falsifies the input.
pub fn shift_to_body(e: &NestedExpr) -> NestedExpr {
    match e {
        NestedExpr::Over(el) => match el {
            Elementary::Top => BOT,
            Elementary::Bot => NestedExpr::Elem(Elementary::Top),
            other => NestedExpr::Elem(*other),
        },
        // Bare constants in falsification position: `bot` is always
        // falsified, `top` never.
        NestedExpr::Elem(Elementary::Bot) => NestedExpr::Elem(Elementary::Top),
        NestedExpr::Elem(Elementary::Top) => BOT,
        NestedExpr::Elem(el) => NestedExpr::Elem(*el),
        NestedExpr::And(cs) => NestedExpr::Or(cs.iter().map(shift_to_body).collect()),
        NestedExpr::Or(cs) => NestedExpr::And(cs.iter().map(shift_to_body).collect()),
    }
}

/// Shift a body expression to its overlined head image: swap `and`/`or`
/// and overline every elementary expression. Inverse of [`shift_to_body`]
/// on fully overlined inputs.
pub fn shift_to_head(e: &NestedExpr) -> NestedExpr {
    match e {
        NestedExpr::Elem(Elementary::Top) => NestedExpr::Over(Elementary::Bot),
        NestedExpr::Elem(Elementary::Bot) => NestedExpr::Over(Elementary::Top),
        NestedExpr::Elem(el) => NestedExpr::Over(*el),
        NestedExpr::Over(_) => e.clone(),
        NestedExpr::And(cs) => NestedExpr::Or(cs.iter().map(shift_to_head).collect()),
        NestedExpr::Or(cs) => NestedExpr::And(cs.iter().map(shift_to_head).collect()),
    }
}

#[cfg(test)]
mod tests;
