//! Translations between nested and classical normal programs.
//!
//! `nn_of` is the canonical route: each head pair `(h, delta)` contributes
//! one classical rule `h <- C` per conjunct `C` of the disjunctive normal
//! form of `body and delta_body`, where `delta_body` is the body image of
//! the delta. `nn1_of` reaches the same program through distributivity
//! (`cnf(head) <- dnf(body)`, then clause-wise shifting) and exists to
//! cross-validate `nn_of`. Distributivity blows up exponentially by
//! design, so both sides run under an explicit node budget.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::ast::{simplify_constants, Elementary, NestedExpr, Position, Program, Rule, BOT, TOP};
use crate::classify;
use crate::delta::{self, HeadElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TranslateError {
    /// Distributivity exceeded the configured node budget.
    SizeBudgetExceeded { budget: usize },
    /// A head is not a positive-Horn clause.
    NotSn,
    /// A head is not a positive-Horn CNF.
    NotNfnp,
    /// A head is not positive-Horn.
    NotNnp,
    /// A disjunction cannot be split into positive-Horn choices.
    NotSplittable,
    /// The rewrite law does not apply to the given rule shape.
    NotApplicable,
}

impl fmt::Display for TranslateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TranslateError::SizeBudgetExceeded { budget } => {
                write!(f, "distributivity exceeded the {budget}-node budget")
            }
            TranslateError::NotSn => write!(f, "head is not a positive-Horn clause"),
            TranslateError::NotNfnp => write!(f, "head is not a positive-Horn CNF"),
            TranslateError::NotNnp => write!(f, "head is not positive-Horn"),
            TranslateError::NotSplittable => {
                write!(f, "a disjunct is neither positive-Horn nor negative")
            }
            TranslateError::NotApplicable => write!(f, "law not applicable to this rule shape"),
        }
    }
}

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Program whose rules all have a single literal (or `bot`) head and a
/// conjunction of elementary expressions as body.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalProgram {
    pub rules: Vec<Rule>,
}

impl NormalProgram {
    pub fn into_program(self) -> Program {
        Program { rules: self.rules }
    }

    pub fn as_program(&self) -> Program {
        Program {
            rules: self.rules.clone(),
        }
    }
}

fn check_budget(cells: usize, budget: usize) -> Result<(), TranslateError> {
    if cells > budget {
        Err(TranslateError::SizeBudgetExceeded { budget })
    } else {
        Ok(())
    }
}

/// Clause lists (each clause a list of leaves) of the CNF of `e`.
fn cnf_clauses(e: &NestedExpr, budget: usize) -> Result<Vec<Vec<NestedExpr>>, TranslateError> {
    match e {
        NestedExpr::Elem(_) | NestedExpr::Over(_) => Ok(vec![vec![e.clone()]]),
        NestedExpr::And(cs) => {
            let mut out = Vec::new();
            let mut cells = 0usize;
            for c in cs {
                for clause in cnf_clauses(c, budget)? {
                    cells += clause.len();
                    check_budget(cells, budget)?;
                    out.push(clause);
                }
            }
            Ok(out)
        }
        NestedExpr::Or(cs) => {
            let mut acc: Vec<Vec<NestedExpr>> = vec![Vec::new()];
            for c in cs {
                let rhs = cnf_clauses(c, budget)?;
                let mut next = Vec::new();
                let mut cells = 0usize;
                for a in &acc {
                    for b in &rhs {
                        let mut clause = a.clone();
                        clause.extend(b.iter().cloned());
                        cells += clause.len();
                        check_budget(cells, budget)?;
                        next.push(clause);
                    }
                }
                acc = next;
            }
            Ok(acc)
        }
    }
}

/// Conjunct lists (each a list of leaves) of the DNF of `e`.
fn dnf_conjuncts(e: &NestedExpr, budget: usize) -> Result<Vec<Vec<NestedExpr>>, TranslateError> {
    match e {
        NestedExpr::Elem(_) | NestedExpr::Over(_) => Ok(vec![vec![e.clone()]]),
        NestedExpr::Or(cs) => {
            let mut out = Vec::new();
            let mut cells = 0usize;
            for c in cs {
                for conj in dnf_conjuncts(c, budget)? {
                    cells += conj.len();
                    check_budget(cells, budget)?;
                    out.push(conj);
                }
            }
            Ok(out)
        }
        NestedExpr::And(cs) => {
            let mut acc: Vec<Vec<NestedExpr>> = vec![Vec::new()];
            for c in cs {
                let rhs = dnf_conjuncts(c, budget)?;
                let mut next = Vec::new();
                let mut cells = 0usize;
                for a in &acc {
                    for b in &rhs {
                        let mut conj = a.clone();
                        conj.extend(b.iter().cloned());
                        cells += conj.len();
                        check_budget(cells, budget)?;
                        next.push(conj);
                    }
                }
                acc = next;
            }
            Ok(acc)
        }
    }
}

fn or_of(leaves: Vec<NestedExpr>) -> NestedExpr {
    match leaves.len() {
        0 => BOT,
        1 => leaves.into_iter().next().unwrap(),
        _ => NestedExpr::Or(leaves),
    }
}

fn and_of(leaves: Vec<NestedExpr>) -> NestedExpr {
    match leaves.len() {
        0 => TOP,
        1 => leaves.into_iter().next().unwrap(),
        _ => NestedExpr::And(leaves),
    }
}

/// Conjunctive normal form by repeated distributivity. Leaves (elementary
/// and overlined elements) are atomic; no satisfiability-changing rewrite
/// is performed.
pub fn cnf(e: &NestedExpr, budget: usize) -> Result<NestedExpr, TranslateError> {
    let clauses = cnf_clauses(e, budget)?;
    Ok(and_of(clauses.into_iter().map(or_of).collect()))
}

/// Disjunctive normal form by repeated distributivity.
pub fn dnf(e: &NestedExpr, budget: usize) -> Result<NestedExpr, TranslateError> {
    let conjuncts = dnf_conjuncts(e, budget)?;
    Ok(or_of(conjuncts.into_iter().map(and_of).collect()))
}

/// `(h, negative leaves)` of a positive-Horn clause: a bare positive
/// element, or a flat disjunction with exactly one positive element.
fn clause_parts(h: &NestedExpr) -> Result<(HeadElem, Vec<NestedExpr>), TranslateError> {
    let leaves: Vec<&NestedExpr> = match h {
        NestedExpr::Or(cs) => cs.iter().collect(),
        leaf => vec![leaf],
    };
    let mut positive = None;
    let mut negatives = Vec::new();
    for leaf in leaves {
        match leaf {
            NestedExpr::Elem(Elementary::Lit(l)) => {
                if positive.replace(HeadElem::Lit(*l)).is_some() {
                    return Err(TranslateError::NotSn);
                }
            }
            NestedExpr::Elem(Elementary::Bot) => {
                if positive.replace(HeadElem::Bot).is_some() {
                    return Err(TranslateError::NotSn);
                }
            }
            NestedExpr::Over(_) => negatives.push(leaf.clone()),
            _ => return Err(TranslateError::NotSn),
        }
    }
    match positive {
        Some(p) => Ok((p, negatives)),
        None => Err(TranslateError::NotSn),
    }
}

/// Flat conjunct list of an NP-shaped body.
fn body_conjuncts(b: &NestedExpr) -> Result<Vec<NestedExpr>, TranslateError> {
    match b {
        NestedExpr::Elem(Elementary::Top) => Ok(Vec::new()),
        NestedExpr::Elem(_) => Ok(vec![b.clone()]),
        NestedExpr::And(cs) => {
            if cs.iter().all(|c| matches!(c, NestedExpr::Elem(_))) {
                Ok(cs.clone())
            } else {
                Err(TranslateError::NotSn)
            }
        }
        _ => Err(TranslateError::NotSn),
    }
}

fn np_rule(h: HeadElem, conjuncts: Vec<NestedExpr>) -> Rule {
    let head = match h {
        HeadElem::Lit(l) => NestedExpr::lit(l),
        HeadElem::Bot => BOT,
    };
    Rule::new(head, and_of(conjuncts))
}

/// Shift a clause head into the body: `h v D <- B` becomes
/// `h <- B and D_body`.
pub fn sn_of(p: &Program) -> Result<NormalProgram, TranslateError> {
    let mut rules = Vec::new();
    for r in &p.rules {
        let (h, negatives) = clause_parts(&r.head)?;
        let mut conj = body_conjuncts(&r.body)?;
        conj.extend(negatives.iter().map(delta::shift_to_body));
        rules.push(np_rule(h, conj));
    }
    Ok(NormalProgram { rules })
}

/// Clause list of a positive-Horn CNF head.
fn cnf_head_clauses(h: &NestedExpr) -> Result<Vec<NestedExpr>, TranslateError> {
    let clauses: Vec<NestedExpr> = match h {
        NestedExpr::And(cs) => cs.clone(),
        other => vec![other.clone()],
    };
    for c in &clauses {
        clause_parts(c).map_err(|_| TranslateError::NotNfnp)?;
    }
    Ok(clauses)
}

/// Flatten a CNF-headed rule set: one classical rule per head clause and
/// body DNF conjunct, shifting each clause's negative part into the body.
pub fn fn_of(p: &Program, budget: usize) -> Result<NormalProgram, TranslateError> {
    let mut rules = Vec::new();
    for r in &p.rules {
        let clauses = cnf_head_clauses(&r.head)?;
        let body = simplify_constants(&r.body, Position::Body);
        if body == BOT {
            continue;
        }
        let conjunct_lists = dnf_conjuncts(&body, budget)?;
        for clause in &clauses {
            let (h, negatives) = clause_parts(clause).map_err(|_| TranslateError::NotNfnp)?;
            for conj in &conjunct_lists {
                let mut full = conj.clone();
                full.extend(negatives.iter().map(delta::shift_to_body));
                rules.push(np_rule(h, full));
            }
        }
    }
    Ok(NormalProgram { rules })
}

fn body_is_bot(b: &NestedExpr) -> bool {
    simplify_constants(b, Position::Body) == BOT
}

/// Canonical translation to a classical normal program, through the head
/// decomposition: one rule `h <- C` per pair `(h, delta)` and per conjunct
/// `C` of `dnf(body and delta_body)`.
pub fn nn_of(p: &Program, budget: usize) -> Result<NormalProgram, TranslateError> {
    let mut rules = Vec::new();
    for r in &p.rules {
        let pairs = delta::h_delta(&r.head).map_err(|_| TranslateError::NotNnp)?;
        if body_is_bot(&r.body) {
            continue;
        }
        for pair in &pairs.pairs {
            let delta_body = delta::shift_to_body(&pair.delta);
            let combined = simplify_constants(
                &NestedExpr::And(vec![r.body.clone(), delta_body]),
                Position::Body,
            );
            if combined == BOT {
                continue;
            }
            for conj in dnf_conjuncts(&combined, budget)? {
                rules.push(np_rule(pair.h, conj));
            }
        }
    }
    Ok(NormalProgram { rules })
}

/// Distributivity route to a classical normal program:
/// `cnf(head) <- dnf(body)`, then clause-wise shifting. Strongly
/// equivalent to [`nn_of`] of the same program.
pub fn nn1_of(p: &Program, budget: usize) -> Result<NormalProgram, TranslateError> {
    for r in &p.rules {
        if !classify::is_positive_horn(&r.head) {
            return Err(TranslateError::NotNnp);
        }
    }
    let mut rules = Vec::new();
    for r in &p.rules {
        let head_cnf = cnf(&r.head, budget)?;
        let body = simplify_constants(&r.body, Position::Body);
        if body == BOT {
            continue;
        }
        let flat = Program::new(vec![Rule::new(head_cnf, body)]);
        rules.extend(fn_of(&flat, budget)?.rules);
    }
    Ok(NormalProgram { rules })
}

/// Split points of a head: disjunctions that are not positive-Horn, with
/// the indices of their positive-Horn disjuncts. Positive-Horn and fully
/// negative subtrees contain none.
fn find_split_points(
    h: &NestedExpr,
    at: crate::ast::OccurrenceHandle,
    out: &mut Vec<(crate::ast::OccurrenceHandle, Vec<usize>)>,
) -> Result<(), TranslateError> {
    let k = classify::expr_class(h);
    if k.positive_horn || k.negative {
        return Ok(());
    }
    match h {
        NestedExpr::Or(cs) => {
            let mut ph_choices = Vec::new();
            for (i, c) in cs.iter().enumerate() {
                let ck = classify::expr_class(c);
                if ck.positive_horn {
                    ph_choices.push(i);
                } else if !ck.negative {
                    return Err(TranslateError::NotSplittable);
                }
            }
            if ph_choices.len() < 2 {
                return Err(TranslateError::NotSplittable);
            }
            out.push((at, ph_choices));
            Ok(())
        }
        NestedExpr::And(cs) => {
            for (i, c) in cs.iter().enumerate() {
                find_split_points(c, at.child(i as u32), out)?;
            }
            Ok(())
        }
        _ => Err(TranslateError::NotSplittable),
    }
}

fn replace_at(
    e: &NestedExpr,
    at: &crate::ast::OccurrenceHandle,
    depth: usize,
    mk: &dyn Fn(&NestedExpr) -> NestedExpr,
) -> NestedExpr {
    if depth == at.0.len() {
        return mk(e);
    }
    let step = at.0[depth] as usize;
    match e {
        NestedExpr::And(cs) => NestedExpr::And(
            cs.iter()
                .enumerate()
                .map(|(i, c)| {
                    if i == step {
                        replace_at(c, at, depth + 1, mk)
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        ),
        NestedExpr::Or(cs) => NestedExpr::Or(
            cs.iter()
                .enumerate()
                .map(|(i, c)| {
                    if i == step {
                        replace_at(c, at, depth + 1, mk)
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        ),
        _ => unreachable!("handle resolves through connectives"),
    }
}

/// Split a program with non-Horn disjunctions into NNP programs: for each
/// such disjunction, keep one positive-Horn disjunct (and every negative
/// disjunct), one program per combination of choices. Choices are
/// enumerated leftmost-disjunct first; structurally equal programs are
/// deduplicated.
pub fn split_dnp(p: &Program) -> Result<Vec<Program>, TranslateError> {
    let mut rule_variants: Vec<Vec<Rule>> = Vec::new();
    for r in &p.rules {
        let mut points = Vec::new();
        find_split_points(&r.head, crate::ast::OccurrenceHandle::root(), &mut points)?;
        let mut heads = vec![r.head.clone()];
        // Handles stay valid across combinations: replacements never
        // change the arity of nodes above a split point.
        for (at, choices) in points.iter().rev() {
            let mut next = Vec::new();
            for head in &heads {
                for &choice in choices {
                    let picked = replace_at(head, at, 0, &|node| match node {
                        NestedExpr::Or(cs) => {
                            let kept: Vec<NestedExpr> = cs
                                .iter()
                                .enumerate()
                                .filter(|(i, c)| *i == choice || classify::expr_class(c).negative)
                                .map(|(_, c)| c.clone())
                                .collect();
                            match kept.len() {
                                1 => kept.into_iter().next().unwrap(),
                                _ => NestedExpr::Or(kept),
                            }
                        }
                        _ => unreachable!("split point is a disjunction"),
                    });
                    next.push(picked);
                }
            }
            heads = next;
        }
        let mut variants = Vec::new();
        for head in heads {
            if !classify::is_positive_horn(&head) {
                return Err(TranslateError::NotSplittable);
            }
            variants.push(Rule::new(head, r.body.clone()));
        }
        rule_variants.push(variants);
    }
    let mut programs = vec![Vec::new()];
    for variants in &rule_variants {
        let mut next = Vec::with_capacity(programs.len() * variants.len());
        for prefix in &programs {
            for v in variants {
                let mut rules: Vec<Rule> = prefix.clone();
                rules.push(v.clone());
                next.push(rules);
            }
        }
        programs = next;
    }
    let mut out: Vec<Program> = Vec::new();
    for rules in programs {
        let candidate = Program::new(rules);
        if !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// Strong-equivalence-preserving rewrite laws on rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteLaw {
    /// `and[E, F] <- G` into `E <- G` and `F <- G`.
    SplitConjHead,
    /// `E <- or(F, G)` into `E <- F` and `E <- G`.
    SplitDisjBody,
    /// The inverse merges: rules sharing a body get their heads conjoined;
    /// rules sharing a head get their bodies disjoined.
    Merge,
    /// `H <- B and F` into `or(H, F_head) <- B` (the last conjunct moves,
    /// overlined, into the head).
    Shift,
}

/// Apply one law. The split laws and the shift take exactly one rule;
/// merge takes at least two.
pub fn rewrite(rules: &[Rule], law: RewriteLaw) -> Result<Vec<Rule>, TranslateError> {
    match law {
        RewriteLaw::SplitConjHead => match rules {
            [r] => match &r.head {
                NestedExpr::And(cs) if !cs.is_empty() => Ok(cs
                    .iter()
                    .map(|c| Rule::new(c.clone(), r.body.clone()))
                    .collect()),
                _ => Err(TranslateError::NotApplicable),
            },
            _ => Err(TranslateError::NotApplicable),
        },
        RewriteLaw::SplitDisjBody => match rules {
            [r] => match &r.body {
                NestedExpr::Or(cs) if !cs.is_empty() => Ok(cs
                    .iter()
                    .map(|c| Rule::new(r.head.clone(), c.clone()))
                    .collect()),
                _ => Err(TranslateError::NotApplicable),
            },
            _ => Err(TranslateError::NotApplicable),
        },
        RewriteLaw::Merge => {
            if rules.len() < 2 {
                return Err(TranslateError::NotApplicable);
            }
            if rules.iter().all(|r| r.body == rules[0].body) {
                let heads = rules.iter().map(|r| r.head.clone()).collect();
                Ok(vec![Rule::new(
                    NestedExpr::And(heads),
                    rules[0].body.clone(),
                )])
            } else if rules.iter().all(|r| r.head == rules[0].head) {
                let bodies = rules.iter().map(|r| r.body.clone()).collect();
                Ok(vec![Rule::new(
                    rules[0].head.clone(),
                    NestedExpr::Or(bodies),
                )])
            } else {
                Err(TranslateError::NotApplicable)
            }
        }
        RewriteLaw::Shift => match rules {
            [r] => {
                if r.body == TOP {
                    return Err(TranslateError::NotApplicable);
                }
                let (rest, shifted) = match &r.body {
                    NestedExpr::And(cs) if cs.len() >= 2 => {
                        let (last, rest) = cs.split_last().unwrap();
                        (and_of(rest.to_vec()), delta::shift_to_head(last))
                    }
                    other => (TOP, delta::shift_to_head(other)),
                };
                Ok(vec![Rule::new(
                    NestedExpr::Or(vec![r.head.clone(), shifted]),
                    rest,
                )])
            }
            _ => Err(TranslateError::NotApplicable),
        },
    }
}

/// Size metrics of a program and of its classical translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuccinctnessReport {
    pub rule_count: usize,
    pub literal_occurrences: usize,
    pub connective_count: usize,
    /// Exact number of rules `nn_of` yields, computed arithmetically, so
    /// it is available even when materializing would blow the budget.
    pub np_rule_count: u128,
    /// Classical rules per nested rule.
    pub ratio: f64,
}

fn dnf_count(e: &NestedExpr) -> u128 {
    match e {
        NestedExpr::Elem(Elementary::Bot) => 0,
        NestedExpr::Elem(Elementary::Top) => 1,
        NestedExpr::Elem(_) | NestedExpr::Over(_) => 1,
        NestedExpr::Or(cs) => cs.iter().map(dnf_count).fold(0u128, u128::saturating_add),
        NestedExpr::And(cs) => cs.iter().map(dnf_count).fold(1u128, u128::saturating_mul),
    }
}

/// Literal, connective and translated-rule counts for an NNP program.
pub fn succinctness_report(p: &Program) -> SuccinctnessReport {
    let mut literal_occurrences = 0;
    let mut connective_count = 0;
    let mut np_rule_count: u128 = 0;
    for r in &p.rules {
        literal_occurrences += r.head.literal_occurrences() + r.body.literal_occurrences();
        connective_count += r.head.connective_count() + r.body.connective_count() + 1;
        if body_is_bot(&r.body) {
            continue;
        }
        for pair in delta::decompose_any(&r.head) {
            let combined = simplify_constants(
                &NestedExpr::And(vec![r.body.clone(), delta::shift_to_body(&pair.delta)]),
                Position::Body,
            );
            np_rule_count = np_rule_count.saturating_add(dnf_count(&combined));
        }
    }
    let ratio = if p.rules.is_empty() {
        0.0
    } else {
        np_rule_count as f64 / p.rules.len() as f64
    };
    SuccinctnessReport {
        rule_count: p.rules.len(),
        literal_occurrences,
        connective_count,
        np_rule_count,
        ratio,
    }
}
