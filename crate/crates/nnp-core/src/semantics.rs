//! Model-theoretic semantics of normal nested programs.
//!
//! An interpretation is a consistent set of classical literals. A rule
//! `H <- B` with positive-Horn head `H` is satisfied when the body fails,
//! or every pair `(h v delta)` of the head decomposition has its delta
//! unfalsified or its `h` in the interpretation. Reducts resolve default
//! literals against a fixed interpretation, leaving a not-free program on
//! which the immediate consequence operator reaches the least model.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::ast::{
    check_head_position, simplify_constants, Elementary, Literal, NestedExpr, Position,
    PositionViolation, Program, Rule, BOT, TOP,
};
use crate::calculus::{self, UrOutcome};
use crate::classify;
use crate::delta::{self, HeadElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    Position(PositionViolation),
    /// A rule head is not positive-Horn.
    NotNnp,
    /// The operation requires a not-free program.
    NotNotFree,
    /// Deriving a complementary pair of literals.
    InconsistentResult,
    /// A constraint head fired during fixpoint computation.
    ConstraintFired,
    UniverseTooLarge {
        size: usize,
        max: usize,
    },
}

impl fmt::Display for SemanticsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemanticsError::Position(v) => write!(f, "{v}"),
            SemanticsError::NotNnp => write!(f, "rule head is not positive-Horn (not NNP)"),
            SemanticsError::NotNotFree => write!(f, "program is not not-free"),
            SemanticsError::InconsistentResult => {
                write!(f, "derived a complementary pair of literals")
            }
            SemanticsError::ConstraintFired => write!(f, "a constraint fired"),
            SemanticsError::UniverseTooLarge { size, max } => {
                write!(f, "universe of {size} literals exceeds the bound of {max}")
            }
        }
    }
}

/// Consistent set of classical literals.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interpretation {
    lits: BTreeSet<Literal>,
}

impl Interpretation {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Build an interpretation, rejecting complementary pairs.
    pub fn try_new(lits: BTreeSet<Literal>) -> Result<Self, SemanticsError> {
        if lits.iter().any(|l| lits.contains(&l.complement())) {
            return Err(SemanticsError::InconsistentResult);
        }
        Ok(Interpretation { lits })
    }

    pub fn contains(&self, l: Literal) -> bool {
        self.lits.contains(&l)
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Literal> + '_ {
        self.lits.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<Literal> {
        &self.lits
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.lits.is_subset(&other.lits)
    }
}

impl FromIterator<Literal> for Interpretation {
    /// Collect literals into an interpretation; panics on a complementary
    /// pair. Use [`Interpretation::try_new`] for untrusted input.
    fn from_iter<T: IntoIterator<Item = Literal>>(iter: T) -> Self {
        Interpretation::try_new(iter.into_iter().collect()).expect("complementary pair")
    }
}

fn check_over_free(e: &NestedExpr) -> Result<(), SemanticsError> {
    match e {
        NestedExpr::Over(_) => Err(SemanticsError::Position(PositionViolation::OverInBody)),
        NestedExpr::Elem(_) => Ok(()),
        NestedExpr::And(cs) | NestedExpr::Or(cs) => cs.iter().try_for_each(check_over_free),
    }
}

fn eval_body(i: &Interpretation, e: &NestedExpr) -> bool {
    match e {
        NestedExpr::Elem(Elementary::Top) => true,
        NestedExpr::Elem(Elementary::Bot) => false,
        NestedExpr::Elem(Elementary::Lit(l)) => i.contains(*l),
        NestedExpr::Elem(Elementary::Default(l)) => !i.contains(*l),
        NestedExpr::Over(_) => unreachable!("checked over-free"),
        NestedExpr::And(cs) => cs.iter().all(|c| eval_body(i, c)),
        NestedExpr::Or(cs) => cs.iter().any(|c| eval_body(i, c)),
    }
}

/// Model relation for body-position expressions.
pub fn satisfies(i: &Interpretation, e: &NestedExpr) -> Result<bool, SemanticsError> {
    check_over_free(e)?;
    Ok(eval_body(i, e))
}

fn check_falsifiable_leaves(e: &NestedExpr) -> Result<(), SemanticsError> {
    match e {
        NestedExpr::Over(_) | NestedExpr::Elem(Elementary::Top | Elementary::Bot) => Ok(()),
        NestedExpr::Elem(_) => Err(SemanticsError::Position(
            PositionViolation::BareDefaultInHead,
        )),
        NestedExpr::And(cs) | NestedExpr::Or(cs) => {
            cs.iter().try_for_each(check_falsifiable_leaves)
        }
    }
}

/// Falsification relation for overlined expressions, evaluated through the
/// body image: `i` falsifies `e` exactly when `i` satisfies
/// [`delta::shift_to_body`]`(e)`.
pub fn falsifies(i: &Interpretation, e: &NestedExpr) -> Result<bool, SemanticsError> {
    check_falsifiable_leaves(e)?;
    Ok(eval_body(i, &delta::shift_to_body(e)))
}

/// Direct structural falsification, kept as a cross-check of [`falsifies`]:
/// a conjunction is falsified when some conjunct is, a disjunction when all
/// disjuncts are; an overlined literal is falsified when the literal holds,
/// an overlined default when the wrapped literal is absent; `bot` is always
/// falsified and `top` never, with overlined constants dual.
pub fn falsifies_direct(i: &Interpretation, e: &NestedExpr) -> Result<bool, SemanticsError> {
    check_falsifiable_leaves(e)?;
    fn eval(i: &Interpretation, e: &NestedExpr) -> bool {
        match e {
            NestedExpr::Over(Elementary::Lit(l)) => i.contains(*l),
            NestedExpr::Over(Elementary::Default(l)) => !i.contains(*l),
            NestedExpr::Over(Elementary::Bot) | NestedExpr::Elem(Elementary::Bot) => true,
            NestedExpr::Over(Elementary::Top) | NestedExpr::Elem(Elementary::Top) => false,
            NestedExpr::Elem(_) => unreachable!("checked leaves"),
            NestedExpr::And(cs) => cs.iter().any(|c| eval(i, c)),
            NestedExpr::Or(cs) => cs.iter().all(|c| eval(i, c)),
        }
    }
    Ok(eval(i, e))
}

fn head_elem_holds(i: &Interpretation, h: HeadElem) -> bool {
    match h {
        HeadElem::Lit(l) => i.contains(l),
        HeadElem::Bot => false,
    }
}

/// Satisfaction of an NNP rule: the body fails, or every pair of the head
/// decomposition has an unfalsified delta or its element in `i`.
pub fn satisfies_rule(i: &Interpretation, r: &Rule) -> Result<bool, SemanticsError> {
    let pairs = delta::h_delta(&r.head).map_err(|_| SemanticsError::NotNnp)?;
    if !satisfies(i, &r.body)? {
        return Ok(true);
    }
    for p in &pairs.pairs {
        if falsifies(i, &p.delta)? && !head_elem_holds(i, p.h) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn satisfies_program(i: &Interpretation, p: &Program) -> Result<bool, SemanticsError> {
    for r in &p.rules {
        if !satisfies_rule(i, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One rule of a reduct: a not-free body and the surviving
/// `(h, delta)` pairs, each delta not-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductRule {
    pub pairs: Vec<(HeadElem, NestedExpr)>,
    pub body: NestedExpr,
}

/// Not-free program obtained by resolving default literals against a fixed
/// interpretation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductProgram {
    pub rules: Vec<ReductRule>,
}

impl ReductProgram {
    /// Materialize back into an ordinary (not-free) program.
    pub fn to_program(&self) -> Program {
        let rules = self
            .rules
            .iter()
            .map(|r| Rule::new(delta::pairs_to_head(&r.pairs), r.body.clone()))
            .collect();
        Program::new(rules)
    }
}

/// Unwrap single-child connectives, so structurally distinct spellings of
/// the same delta normalize and the reduct is idempotent.
fn collapse_singletons(e: &NestedExpr) -> NestedExpr {
    match e {
        NestedExpr::And(cs) | NestedExpr::Or(cs) if cs.len() == 1 => collapse_singletons(&cs[0]),
        NestedExpr::And(cs) => NestedExpr::And(cs.iter().map(collapse_singletons).collect()),
        NestedExpr::Or(cs) => NestedExpr::Or(cs.iter().map(collapse_singletons).collect()),
        _ => e.clone(),
    }
}

fn substitute_defaults(e: &NestedExpr, i: &Interpretation) -> NestedExpr {
    match e {
        NestedExpr::Elem(Elementary::Default(l)) => {
            if i.contains(*l) {
                BOT
            } else {
                TOP
            }
        }
        NestedExpr::Elem(_) | NestedExpr::Over(_) => e.clone(),
        NestedExpr::And(cs) => {
            NestedExpr::And(cs.iter().map(|c| substitute_defaults(c, i)).collect())
        }
        NestedExpr::Or(cs) => {
            NestedExpr::Or(cs.iter().map(|c| substitute_defaults(c, i)).collect())
        }
    }
}

/// Reduct of an NNP program by `i`.
///
/// Bodies have their default literals replaced by constants and are
/// simplified; rules whose body becomes `bot` are dropped. Each head pair's
/// delta is resolved the same way through its body image: a pair whose
/// delta can no longer be falsified is dropped, a delta that is always
/// falsified becomes `bot`, and rules with no surviving pairs are dropped.
/// Structurally duplicate pairs are kept once.
pub fn reduct(p: &Program, i: &Interpretation) -> Result<ReductProgram, SemanticsError> {
    let mut rules = Vec::new();
    for r in &p.rules {
        let pairs_in = delta::h_delta(&r.head).map_err(|_| SemanticsError::NotNnp)?;
        let body = simplify_constants(&substitute_defaults(&r.body, i), Position::Body);
        if body == BOT {
            continue;
        }
        let mut pairs: Vec<(HeadElem, NestedExpr)> = Vec::new();
        for p in &pairs_in.pairs {
            let image = collapse_singletons(&simplify_constants(
                &substitute_defaults(&delta::shift_to_body(&p.delta), i),
                Position::Body,
            ));
            if image == BOT {
                // Never falsifiable: the pair can no longer fire.
                continue;
            }
            let delta = if image == TOP {
                BOT
            } else {
                delta::shift_to_head(&image)
            };
            if !pairs.iter().any(|(h, d)| *h == p.h && *d == delta) {
                pairs.push((p.h, delta));
            }
        }
        if pairs.is_empty() {
            continue;
        }
        rules.push(ReductRule { pairs, body });
    }
    Ok(ReductProgram { rules })
}

/// Pair form of an NNP program: heads decomposed into `(h, delta)` pairs,
/// bodies untouched (they may still carry default literals, which the
/// consequence operator evaluates against its argument). The reduct of a
/// not-free program coincides with its pair form.
pub fn pair_form(p: &Program) -> Result<ReductProgram, SemanticsError> {
    let mut rules = Vec::new();
    for r in &p.rules {
        let pairs = delta::h_delta(&r.head).map_err(|_| SemanticsError::NotNnp)?;
        rules.push(ReductRule {
            pairs: pairs.pairs.into_iter().map(|p| (p.h, p.delta)).collect(),
            body: r.body.clone(),
        });
    }
    Ok(ReductProgram { rules })
}

/// Satisfaction of a reduct program (all rules not-free).
pub fn satisfies_reduct(i: &Interpretation, p: &ReductProgram) -> Result<bool, SemanticsError> {
    for r in &p.rules {
        if !satisfies(i, &r.body)? {
            continue;
        }
        for (h, d) in &r.pairs {
            if falsifies(i, d)? && !head_elem_holds(i, *h) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `i` is closed under `p` when every pair of every rule whose body `i`
/// satisfies and whose delta `i` falsifies has its element in `i`.
pub fn is_closed(i: &Interpretation, p: &Program) -> Result<bool, SemanticsError> {
    for r in &p.rules {
        let pairs = delta::h_delta(&r.head).map_err(|_| SemanticsError::NotNnp)?;
        if !satisfies(i, &r.body)? {
            continue;
        }
        for pr in &pairs.pairs {
            if falsifies(i, &pr.delta)? && !head_elem_holds(i, pr.h) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `i` is supported by `p` when every literal of `i` is forced by some
/// pair: a rule whose body `i` satisfies and a `(h, delta)` with `h` the
/// literal and delta falsified.
pub fn is_supported(i: &Interpretation, p: &Program) -> Result<bool, SemanticsError> {
    'lits: for l in i.iter() {
        for r in &p.rules {
            let pairs = delta::h_delta(&r.head).map_err(|_| SemanticsError::NotNnp)?;
            if !satisfies(i, &r.body)? {
                continue;
            }
            for pr in &pairs.pairs {
                if pr.h == HeadElem::Lit(l) && falsifies(i, &pr.delta)? {
                    continue 'lits;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// One application of the immediate consequence operator: the head
/// elements forced by `i` under the (not-free) reduct program. An output
/// that together with `i` holds a complementary pair is an error.
pub fn nt_step(
    p: &ReductProgram,
    i: &Interpretation,
) -> Result<BTreeSet<HeadElem>, SemanticsError> {
    let mut out = BTreeSet::new();
    for r in &p.rules {
        if !satisfies(i, &r.body)? {
            continue;
        }
        for (h, d) in &r.pairs {
            if falsifies(i, d)? {
                out.insert(*h);
            }
        }
    }
    for h in &out {
        if let HeadElem::Lit(l) = h {
            if i.contains(l.complement()) || out.contains(&HeadElem::Lit(l.complement())) {
                return Err(SemanticsError::InconsistentResult);
            }
        }
    }
    Ok(out)
}

/// Least fixpoint of [`nt_step`] from the empty interpretation. Requires a
/// constraint-free reduct: a fired constraint is reported as an error, as
/// is a complementary pair (head-inconsistent input).
pub fn least_model_fixpoint(p: &ReductProgram) -> Result<Interpretation, SemanticsError> {
    let mut i = Interpretation::empty();
    let max_iters = p.rules.iter().map(|r| r.pairs.len()).sum::<usize>() + 1;
    for _ in 0..=max_iters {
        let out = nt_step(p, &i)?;
        let mut lits = BTreeSet::new();
        for h in out {
            match h {
                HeadElem::Bot => return Err(SemanticsError::ConstraintFired),
                HeadElem::Lit(l) => {
                    lits.insert(l);
                }
            }
        }
        let next = Interpretation::try_new(lits)?;
        if next == i {
            return Ok(i);
        }
        i = next;
    }
    unreachable!("fixpoint reached within the pair-count bound")
}

/// Which engine computes least models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Nested unit-resolution on the compiled Horn expression (default).
    #[default]
    Ur,
    /// Iteration of the immediate consequence operator.
    Fixpoint,
}

fn pair_heads_consistent(p: &ReductProgram) -> bool {
    let mut heads = BTreeSet::new();
    for r in &p.rules {
        for (h, _) in &r.pairs {
            if let HeadElem::Lit(l) = h {
                heads.insert(*l);
            }
        }
    }
    heads.iter().all(|l| !heads.contains(&l.complement()))
}

/// Least model of a not-free pair-form program through the chosen engine.
///
/// Constraint pairs are split off first and checked against the computed
/// least model of the rest; a violated constraint is a
/// [`SemanticsError::ConstraintFired`] (the fire set is upward closed, so
/// a program whose least model fires a constraint has no model at all).
/// Unit resolution is complete for head-consistent cores only — exactly
/// the precondition of the least-model theorems — so head-inconsistent
/// cores fall back to the fixpoint iteration under either engine.
pub fn least_model(p: &ReductProgram, engine: Engine) -> Result<Interpretation, SemanticsError> {
    let mut core = ReductProgram::default();
    let mut constraints: Vec<(NestedExpr, NestedExpr)> = Vec::new();
    for r in &p.rules {
        let mut pairs = Vec::new();
        for (h, d) in &r.pairs {
            match h {
                HeadElem::Bot => constraints.push((r.body.clone(), d.clone())),
                HeadElem::Lit(_) => pairs.push((*h, d.clone())),
            }
        }
        if !pairs.is_empty() {
            core.rules.push(ReductRule {
                pairs,
                body: r.body.clone(),
            });
        }
    }
    let lm = match engine {
        Engine::Ur if pair_heads_consistent(&core) => {
            let program = core.to_program();
            let mut work =
                calculus::to_horn_expression(&program).map_err(|_| SemanticsError::NotNotFree)?;
            match calculus::ur_least_model(&mut work) {
                UrOutcome::Inconsistent => return Err(SemanticsError::InconsistentResult),
                UrOutcome::LeastModel(lits) => Interpretation::try_new(lits)?,
            }
        }
        _ => least_model_fixpoint(&core)?,
    };
    for (body, delta) in &constraints {
        if satisfies(&lm, body)? && falsifies(&lm, delta)? {
            return Err(SemanticsError::ConstraintFired);
        }
    }
    Ok(lm)
}

/// Least model of a not-free NNP program. A fired constraint or a derived
/// complementary pair means the program has no (consistent) least model.
pub fn least_model_of_program(
    p: &Program,
    engine: Engine,
) -> Result<Interpretation, SemanticsError> {
    if !p
        .rules
        .iter()
        .all(|r| r.body.is_not_free() && r.head.is_not_free())
    {
        return Err(SemanticsError::NotNotFree);
    }
    least_model(&pair_form(p)?, engine)
}

/// Enumerate all consistent interpretations over `universe`, in cardinality
/// order (then lexicographic).
pub fn consistent_interpretations(universe: &BTreeSet<Literal>) -> Vec<Interpretation> {
    let lits: Vec<Literal> = universe.iter().copied().collect();
    let n = lits.len();
    assert!(n < usize::BITS as usize, "universe too large to enumerate");
    let mut out = Vec::new();
    for mask in 0usize..(1 << n) {
        let mut set = BTreeSet::new();
        let mut ok = true;
        for (k, l) in lits.iter().enumerate() {
            if mask & (1 << k) != 0 {
                if set.contains(&l.complement()) {
                    ok = false;
                    break;
                }
                set.insert(*l);
            }
        }
        if ok {
            out.push(Interpretation { lits: set });
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// All minimal models of `p` over consistent subsets of `universe`.
pub fn minimal_models(
    p: &Program,
    universe: &BTreeSet<Literal>,
    max_universe: usize,
) -> Result<Vec<Interpretation>, SemanticsError> {
    if universe.len() > max_universe {
        return Err(SemanticsError::UniverseTooLarge {
            size: universe.len(),
            max: max_universe,
        });
    }
    let mut models = Vec::new();
    for i in consistent_interpretations(universe) {
        if satisfies_program(&i, p)? {
            models.push(i);
        }
    }
    let minimal: Vec<Interpretation> = models
        .iter()
        .filter(|m| !models.iter().any(|n| n.len() < m.len() && n.is_subset(m)))
        .cloned()
        .collect();
    Ok(minimal)
}

#[derive(Debug, Clone, Copy)]
pub struct AnswerSetOptions {
    pub max_universe: usize,
    pub engine: Engine,
}

impl Default for AnswerSetOptions {
    fn default() -> Self {
        AnswerSetOptions {
            max_universe: 20,
            engine: Engine::Ur,
        }
    }
}

/// Answer sets of an NNP program.
///
/// Candidates are the consistent subsets of the positive head literals,
/// visited in cardinality order. A candidate `i` is an answer set when it
/// equals the least model of the constraint-free part of the reduct by `i`
/// and fires no constraint pair.
pub fn answer_sets(
    p: &Program,
    opts: &AnswerSetOptions,
) -> Result<Vec<Interpretation>, SemanticsError> {
    for r in &p.rules {
        check_head_position(&r.head).map_err(SemanticsError::Position)?;
        if !classify::is_positive_horn(&r.head) {
            return Err(SemanticsError::NotNnp);
        }
    }
    let universe = classify::head_literals(p);
    if universe.len() > opts.max_universe {
        return Err(SemanticsError::UniverseTooLarge {
            size: universe.len(),
            max: opts.max_universe,
        });
    }
    let mut out = Vec::new();
    for i in consistent_interpretations(&universe) {
        let red = reduct(p, &i)?;
        // A candidate is accepted when it reproduces itself as the least
        // model of its reduct's core without firing a constraint; checking
        // constraints at the least model is checking them at the candidate,
        // since only equal ones are accepted.
        match least_model(&red, opts.engine) {
            Ok(lm) => {
                if lm == i {
                    out.push(i);
                }
            }
            Err(SemanticsError::InconsistentResult | SemanticsError::ConstraintFired) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Outcome of a strong-equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivOutcome {
    Equivalent,
    /// Witnessing pair: `j` satisfies exactly one of the two reducts by `i`.
    Inequivalent {
        i: Interpretation,
        j: Interpretation,
    },
}

/// Strong equivalence by exhaustive check: for every pair of consistent
/// interpretations `(i, j)` over the joint literal universe, `j` must
/// satisfy the reduct of `p1` by `i` exactly when it satisfies the reduct
/// of `p2` by `i`.
pub fn strongly_equivalent(
    p1: &Program,
    p2: &Program,
    max_universe: usize,
) -> Result<EquivOutcome, SemanticsError> {
    let mut universe = p1.literals();
    universe.extend(p2.literals());
    if universe.len() > max_universe {
        return Err(SemanticsError::UniverseTooLarge {
            size: universe.len(),
            max: max_universe,
        });
    }
    let interps = consistent_interpretations(&universe);
    for i in &interps {
        let r1 = reduct(p1, i)?;
        let r2 = reduct(p2, i)?;
        for j in &interps {
            if satisfies_reduct(j, &r1)? != satisfies_reduct(j, &r2)? {
                return Ok(EquivOutcome::Inequivalent {
                    i: i.clone(),
                    j: j.clone(),
                });
            }
        }
    }
    Ok(EquivOutcome::Equivalent)
}
