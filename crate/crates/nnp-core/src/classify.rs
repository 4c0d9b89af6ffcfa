//! Membership in the nested expression classes and rule/program
//! classification.
//!
//! The classes are defined inductively and compose bottom-up, so every
//! recognizer here is a single post-order traversal:
//!
//! - *fully negative*: every leaf is overlined;
//! - *Horn*: literals, `bot` and negative expressions are Horn, a
//!   conjunction of Horn expressions is Horn, and a disjunction is Horn
//!   when one disjunct is Horn and the rest are negative;
//! - *positive-Horn*: literals and `bot` are positive-Horn, a conjunction
//!   of positive-Horn expressions is positive-Horn, and a disjunction is
//!   positive-Horn when exactly one disjunct is positive-Horn — itself a
//!   literal, `bot` or a conjunction, not another disjunction — and the
//!   rest are negative;
//! - *positive non-Horn*: a flat clause with exactly two distinct positive
//!   elements (all remaining elements overlined), a conjunction of positive
//!   non-Horn expressions, or a disjunction with a positive non-Horn
//!   disjunct whose remaining disjuncts are negative, positive-Horn, or
//!   positive non-Horn.
//!
//! A rule is NNP when its head is positive-Horn, DNP when its head is
//! positive non-Horn; other heads are reported as such and not guessed
//! into either class.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::ast::{Elementary, Literal, NestedExpr, Program, Rule, TOP};
use crate::delta;

/// Class flags for one expression, all computed in a single traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExprClass {
    pub negative: bool,
    pub horn: bool,
    pub positive_horn: bool,
    pub positive_non_horn: bool,
    pub flat_cnf: bool,
    pub flat_dnf: bool,
    pub atom_only: bool,
}

fn leaf_class(e: &NestedExpr) -> ExprClass {
    match e {
        NestedExpr::Elem(el) => {
            let (horn, ph) = match el {
                Elementary::Lit(_) | Elementary::Bot => (true, true),
                // `top` and bare defaults are not head elements; callers
                // simplify constants away first.
                Elementary::Top | Elementary::Default(_) => (false, false),
            };
            ExprClass {
                negative: false,
                horn,
                positive_horn: ph,
                positive_non_horn: false,
                flat_cnf: true,
                flat_dnf: true,
                atom_only: el.literal().is_none_or(|l| l.positive),
            }
        }
        NestedExpr::Over(el) => ExprClass {
            negative: true,
            horn: true,
            positive_horn: false,
            positive_non_horn: false,
            flat_cnf: true,
            flat_dnf: true,
            atom_only: el.literal().is_none_or(|l| l.positive),
        },
        _ => unreachable!("leaf_class on inner node"),
    }
}

/// Distinct positive elementary value of a leaf, for the flat non-Horn
/// clause rule. Overlined leaves and constants other than `bot` yield none.
fn positive_leaf_value(e: &NestedExpr) -> Option<Elementary> {
    match e {
        NestedExpr::Elem(el @ (Elementary::Lit(_) | Elementary::Bot)) => Some(*el),
        _ => None,
    }
}

fn class_rec(e: &NestedExpr, visits: &mut usize) -> ExprClass {
    *visits += 1;
    match e {
        NestedExpr::Elem(_) | NestedExpr::Over(_) => leaf_class(e),
        NestedExpr::And(cs) => {
            if cs.is_empty() {
                // `and[]` is `top`.
                return leaf_class(&TOP);
            }
            let mut negative = true;
            let mut horn = true;
            let mut ph = true;
            let mut pnh = true;
            let mut atom_only = true;
            let mut clauses = true;
            let mut conj_of_leaves = true;
            for c in cs {
                let k = class_rec(c, visits);
                negative &= k.negative;
                horn &= k.horn;
                ph &= k.positive_horn;
                pnh &= k.positive_non_horn;
                atom_only &= k.atom_only;
                clauses &= is_clause_shape(c);
                conj_of_leaves &= c.is_leaf();
            }
            ExprClass {
                negative,
                horn,
                positive_horn: ph,
                positive_non_horn: pnh,
                flat_cnf: clauses,
                flat_dnf: conj_of_leaves,
                atom_only,
            }
        }
        NestedExpr::Or(cs) => {
            if cs.is_empty() {
                // `or()` is `bot`.
                return leaf_class(&NestedExpr::Elem(Elementary::Bot));
            }
            let mut negative = true;
            let mut atom_only = true;
            let mut non_negative = 0usize;
            let mut non_neg_horn = true;
            let mut non_neg_ph = true;
            let mut any_pnh_child = false;
            let mut rest_ok_for_pnh = true;
            let mut all_leaves = true;
            let mut disj_of_conj = true;
            let mut positives: Vec<Elementary> = Vec::new();
            for c in cs {
                let k = class_rec(c, visits);
                negative &= k.negative;
                atom_only &= k.atom_only;
                if !k.negative {
                    non_negative += 1;
                    non_neg_horn &= k.horn;
                    // The positive disjunct of a positive-Horn disjunction
                    // is a literal, bot or a conjunction; a nested
                    // disjunction disqualifies the position.
                    non_neg_ph &= k.positive_horn && !matches!(c, NestedExpr::Or(_));
                }
                any_pnh_child |= k.positive_non_horn;
                rest_ok_for_pnh &= k.negative || k.positive_horn || k.positive_non_horn;
                all_leaves &= c.is_leaf();
                disj_of_conj &=
                    c.is_leaf() || matches!(c, NestedExpr::And(_)) && is_conj_of_leaves(c);
                if let Some(v) = positive_leaf_value(c) {
                    positives.push(v);
                }
            }
            let horn = non_negative <= 1 && non_neg_horn;
            let ph = non_negative == 1 && non_neg_ph;
            let flat_two_positive = all_leaves && non_negative == 2 && {
                positives.len() == 2 && positives[0] != positives[1]
            };
            let pnh = flat_two_positive || (any_pnh_child && rest_ok_for_pnh);
            ExprClass {
                negative,
                horn,
                positive_horn: ph,
                positive_non_horn: pnh,
                flat_cnf: all_leaves,
                flat_dnf: disj_of_conj,
                atom_only,
            }
        }
    }
}

fn is_conj_of_leaves(e: &NestedExpr) -> bool {
    match e {
        NestedExpr::And(cs) => cs.iter().all(NestedExpr::is_leaf),
        _ => e.is_leaf(),
    }
}

fn is_clause_shape(e: &NestedExpr) -> bool {
    match e {
        NestedExpr::Or(cs) => cs.iter().all(NestedExpr::is_leaf),
        _ => e.is_leaf(),
    }
}

/// Compute all class flags for `e`.
pub fn expr_class(e: &NestedExpr) -> ExprClass {
    expr_class_counted(e).0
}

/// Same as [`expr_class`], also reporting the number of node visits; the
/// recognizers visit each node exactly once.
pub fn expr_class_counted(e: &NestedExpr) -> (ExprClass, usize) {
    let mut visits = 0;
    let k = class_rec(e, &mut visits);
    (k, visits)
}

pub fn is_negative(e: &NestedExpr) -> bool {
    expr_class(e).negative
}

pub fn is_horn(e: &NestedExpr) -> bool {
    expr_class(e).horn
}

pub fn is_positive_horn(e: &NestedExpr) -> bool {
    expr_class(e).positive_horn
}

pub fn is_positive_non_horn(e: &NestedExpr) -> bool {
    expr_class(e).positive_non_horn
}

/// Head kind of a rule: the head alone decides normal vs disjunctive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeadKind {
    Nnp,
    Dnp,
    OtherHead,
}

impl fmt::Display for HeadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadKind::Nnp => write!(f, "NNP"),
            HeadKind::Dnp => write!(f, "DNP"),
            HeadKind::OtherHead => write!(f, "other-head"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleClass {
    pub kind: HeadKind,
    pub extended: bool,
    pub flat: bool,
    pub is_fact: bool,
    pub contains_fact: bool,
    pub is_constraint: bool,
    pub contains_constraint: bool,
    pub is_not_free: bool,
    pub partially_not_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    /// `top` occurs bare in a head; simplify constants first.
    BareTopInHead,
    /// A default literal occurs bare in a head.
    BareDefaultInHead,
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::BareTopInHead => {
                write!(f, "head contains bare `top`; simplify constants first")
            }
            ClassifyError::BareDefaultInHead => {
                write!(f, "head contains a bare default literal")
            }
        }
    }
}

fn head_diagnostic(e: &NestedExpr) -> Result<(), ClassifyError> {
    match e {
        NestedExpr::Elem(Elementary::Top) => Err(ClassifyError::BareTopInHead),
        NestedExpr::Elem(Elementary::Default(_)) => Err(ClassifyError::BareDefaultInHead),
        NestedExpr::Elem(_) | NestedExpr::Over(_) => Ok(()),
        NestedExpr::And(cs) | NestedExpr::Or(cs) => cs.iter().try_for_each(head_diagnostic),
    }
}

/// Classify one rule. The fact/constraint/not-free flags are read off the
/// head's decomposition into `(h, delta)` pairs: a pair with `delta = bot`
/// and body `top` is a fact, a pair with `h = bot` is a constraint, and the
/// rule is not-free when neither body nor any delta mentions a default.
pub fn classify_rule(r: &Rule) -> Result<RuleClass, ClassifyError> {
    head_diagnostic(&r.head)?;
    let head_class = expr_class(&r.head);
    let kind = if head_class.positive_horn {
        HeadKind::Nnp
    } else if head_class.positive_non_horn {
        HeadKind::Dnp
    } else {
        HeadKind::OtherHead
    };
    let extended = r.head.has_classical_negation() || r.body.has_classical_negation();
    let body_class = expr_class(&r.body);
    let flat = head_class.flat_cnf && (body_class.flat_cnf || body_class.flat_dnf);

    let pairs = delta::decompose_any(&r.head);
    let body_is_top = r.body == TOP;
    let delta_bot = |d: &NestedExpr| *d == NestedExpr::Elem(Elementary::Bot);
    let contains_fact = body_is_top && pairs.iter().any(|p| delta_bot(&p.delta));
    let is_fact = body_is_top && !pairs.is_empty() && pairs.iter().all(|p| delta_bot(&p.delta));
    let contains_constraint = pairs.iter().any(|p| p.h == delta::HeadElem::Bot);
    let is_constraint = !pairs.is_empty() && pairs.iter().all(|p| p.h == delta::HeadElem::Bot);
    let is_not_free = r.body.is_not_free() && pairs.iter().all(|p| p.delta.is_not_free());
    let partially_not_free = !is_not_free && pairs.iter().any(|p| p.delta.is_not_free());

    Ok(RuleClass {
        kind,
        extended,
        flat,
        is_fact,
        contains_fact,
        is_constraint,
        contains_constraint,
        is_not_free,
        partially_not_free,
    })
}

/// Positive head literals of the program (the `h != bot` of every head),
/// as a set.
pub fn head_literals(p: &Program) -> BTreeSet<Literal> {
    let mut out = BTreeSet::new();
    for r in &p.rules {
        for occ in delta::positive_occurrences(&r.head) {
            if let delta::HeadElem::Lit(l) = occ.1 {
                out.insert(l);
            }
        }
    }
    out
}

/// A program is head-consistent when its set of positive head literals
/// other than `bot` contains no complementary pair.
pub fn is_head_consistent(p: &Program) -> bool {
    let hs = head_literals(p);
    hs.iter().all(|l| !hs.contains(&l.complement()))
}
