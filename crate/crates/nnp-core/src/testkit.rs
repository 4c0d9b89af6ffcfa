//! Class-targeted random generators and independent brute-force oracles.
//!
//! Generators build members of each expression/rule class directly from
//! the inductive class definitions (no rejection sampling) and are pure
//! functions of `(config, seed)`.
//!
//! The oracles re-implement the defining semantics from scratch — a
//! generic head/body evaluator treating overlines as classical negation,
//! an expression-level reduct, textbook unit propagation and a classical
//! answer-set check — and deliberately share no evaluator code with the
//! engine they cross-validate.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ast::{Atom, Elementary, Literal, NestedExpr, Program, Rule, Symbols, BOT, TOP};
use crate::semantics::{consistent_interpretations, Interpretation};
use crate::translate::NormalProgram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    UniverseTooLarge { size: usize, max: usize },
    NotCnf,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::UniverseTooLarge { size, max } => {
                write!(f, "universe of {size} literals exceeds the bound of {max}")
            }
            OracleError::NotCnf => write!(f, "expression is not in clausal form"),
        }
    }
}

pub const DEFAULT_ORACLE_UNIVERSE: usize = 14;

// ---------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassTarget {
    Negative,
    Horn,
    PositiveHorn,
    PositiveNonHorn,
    NnpRule,
    DnpRule,
    NpRule,
    NotFree,
}

impl ClassTarget {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "negative" => ClassTarget::Negative,
            "horn" => ClassTarget::Horn,
            "positive_horn" => ClassTarget::PositiveHorn,
            "positive_non_horn" => ClassTarget::PositiveNonHorn,
            "nnp_rule" => ClassTarget::NnpRule,
            "dnp_rule" => ClassTarget::DnpRule,
            "np_rule" => ClassTarget::NpRule,
            "not_free" => ClassTarget::NotFree,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub atom_count: usize,
    pub max_depth: usize,
    pub max_width: usize,
    pub class_target: ClassTarget,
    pub seed: u64,
    /// Rules per generated program (program targets only).
    pub rule_count: usize,
    /// Permit classically negated literals.
    pub allow_classical_neg: bool,
    /// Permit default literals.
    pub allow_default: bool,
    /// Permit `bot` head occurrences (constraints).
    pub allow_bot: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            atom_count: 4,
            max_depth: 3,
            max_width: 3,
            class_target: ClassTarget::NnpRule,
            seed: 0,
            rule_count: 3,
            allow_classical_neg: false,
            allow_default: true,
            allow_bot: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Expr(NestedExpr),
    Rule(Rule),
    Program(Program),
}

fn atom_name(i: usize) -> String {
    let letter = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        format!("{letter}")
    } else {
        format!("{letter}{}", i / 26)
    }
}

/// Intern the `n` generator atoms and return them.
pub fn gen_atoms(n: usize, symbols: &mut Symbols) -> Vec<Atom> {
    (0..n).map(|i| symbols.intern(&atom_name(i))).collect()
}

struct Gen<'a> {
    rng: ChaCha8Rng,
    cfg: GenConfig,
    atoms: &'a [Atom],
}

impl Gen<'_> {
    fn literal(&mut self) -> Literal {
        let atom = self.atoms[self.rng.gen_range(0..self.atoms.len())];
        let positive = !(self.cfg.allow_classical_neg && self.rng.gen_bool(0.3));
        Literal { atom, positive }
    }

    fn over_elem(&mut self) -> Elementary {
        if self.cfg.allow_default && self.rng.gen_bool(0.3) {
            Elementary::Default(self.literal())
        } else {
            Elementary::Lit(self.literal())
        }
    }

    fn width(&mut self) -> usize {
        self.rng.gen_range(1..=self.cfg.max_width.max(1))
    }

    fn negative(&mut self, depth: usize) -> NestedExpr {
        if depth == 0 || self.rng.gen_bool(0.4) {
            return NestedExpr::Over(self.over_elem());
        }
        let w = self.width();
        let children = (0..w).map(|_| self.negative(depth - 1)).collect();
        if self.rng.gen_bool(0.5) {
            NestedExpr::And(children)
        } else {
            NestedExpr::Or(children)
        }
    }

    fn positive_horn(&mut self, depth: usize) -> NestedExpr {
        if depth == 0 || self.rng.gen_bool(0.35) {
            if self.cfg.allow_bot && self.rng.gen_bool(0.08) {
                return BOT;
            }
            return NestedExpr::lit(self.literal());
        }
        if self.rng.gen_bool(0.5) {
            let w = self.width();
            NestedExpr::And((0..w).map(|_| self.positive_horn(depth - 1)).collect())
        } else {
            let negs = self.rng.gen_range(0..self.cfg.max_width.max(1));
            let pos_at = self.rng.gen_range(0..=negs);
            let mut children = Vec::with_capacity(negs + 1);
            for k in 0..=negs {
                if k == pos_at {
                    children.push(self.positive_horn_disjunct(depth - 1));
                } else {
                    children.push(self.negative(depth - 1));
                }
            }
            NestedExpr::Or(children)
        }
    }

    /// The positive disjunct of a positive-Horn disjunction: a literal,
    /// `bot` or a positive-Horn conjunction, never a disjunction.
    fn positive_horn_disjunct(&mut self, depth: usize) -> NestedExpr {
        if depth == 0 || self.rng.gen_bool(0.45) {
            if self.cfg.allow_bot && self.rng.gen_bool(0.08) {
                return BOT;
            }
            return NestedExpr::lit(self.literal());
        }
        let w = self.width();
        NestedExpr::And((0..w).map(|_| self.positive_horn(depth - 1)).collect())
    }

    fn horn(&mut self, depth: usize) -> NestedExpr {
        if depth == 0 || self.rng.gen_bool(0.3) {
            return match self.rng.gen_range(0..3) {
                0 => NestedExpr::lit(self.literal()),
                1 if self.cfg.allow_bot => BOT,
                _ => self.negative(depth),
            };
        }
        if self.rng.gen_bool(0.5) {
            let w = self.width();
            NestedExpr::And((0..w).map(|_| self.horn(depth - 1)).collect())
        } else {
            let negs = self.rng.gen_range(0..self.cfg.max_width.max(1));
            let horn_at = self.rng.gen_range(0..=negs);
            let mut children = Vec::with_capacity(negs + 1);
            for k in 0..=negs {
                if k == horn_at {
                    children.push(self.horn(depth - 1));
                } else {
                    children.push(self.negative(depth - 1));
                }
            }
            NestedExpr::Or(children)
        }
    }

    /// Flat clause with exactly two distinct positive elements.
    fn pnh_clause(&mut self) -> NestedExpr {
        let first = self.literal();
        let second = loop {
            let l = self.literal();
            if l != first {
                break l;
            }
        };
        let extra = self.rng.gen_range(0..self.cfg.max_width.max(1));
        let mut children = vec![NestedExpr::lit(first), NestedExpr::lit(second)];
        for _ in 0..extra {
            children.push(NestedExpr::Over(self.over_elem()));
        }
        // Scatter: rotate so positives are not always leftmost.
        let cut = self.rng.gen_range(0..children.len());
        children.rotate_left(cut);
        NestedExpr::Or(children)
    }

    fn positive_non_horn(&mut self, depth: usize) -> NestedExpr {
        if depth == 0 || self.rng.gen_bool(0.35) {
            return self.pnh_clause();
        }
        if self.rng.gen_bool(0.4) {
            let w = self.width();
            NestedExpr::And((0..w).map(|_| self.positive_non_horn(depth - 1)).collect())
        } else {
            let others = self.rng.gen_range(0..self.cfg.max_width.max(1));
            let pnh_at = self.rng.gen_range(0..=others);
            let mut children = Vec::with_capacity(others + 1);
            for k in 0..=others {
                if k == pnh_at {
                    children.push(self.positive_non_horn(depth - 1));
                } else {
                    children.push(match self.rng.gen_range(0..3) {
                        0 => self.negative(depth - 1),
                        1 => self.positive_horn(depth - 1),
                        _ => self.positive_non_horn(depth - 1),
                    });
                }
            }
            NestedExpr::Or(children)
        }
    }

    fn body_elem(&mut self) -> NestedExpr {
        if self.cfg.allow_default && self.rng.gen_bool(0.35) {
            NestedExpr::default(self.literal())
        } else {
            NestedExpr::lit(self.literal())
        }
    }

    fn body(&mut self, depth: usize) -> NestedExpr {
        if depth == 0 || self.rng.gen_bool(0.4) {
            return self.body_elem();
        }
        let w = self.width();
        let children = (0..w).map(|_| self.body(depth - 1)).collect();
        if self.rng.gen_bool(0.5) {
            NestedExpr::And(children)
        } else {
            NestedExpr::Or(children)
        }
    }

    fn np_rule(&mut self) -> Rule {
        let head = if self.cfg.allow_bot && self.rng.gen_bool(0.1) {
            BOT
        } else {
            NestedExpr::lit(self.literal())
        };
        let w = self.rng.gen_range(0..=self.cfg.max_width.max(1));
        let body = match w {
            0 => TOP,
            1 => self.body_elem(),
            _ => NestedExpr::And((0..w).map(|_| self.body_elem()).collect()),
        };
        Rule::new(head, body)
    }

    fn nnp_rule(&mut self) -> Rule {
        let head = self.positive_horn(self.cfg.max_depth);
        let body = if self.rng.gen_bool(0.25) {
            TOP
        } else {
            self.body(self.cfg.max_depth)
        };
        Rule::new(head, body)
    }

    fn dnp_rule(&mut self) -> Rule {
        let head = self.positive_non_horn(self.cfg.max_depth);
        let body = if self.rng.gen_bool(0.25) {
            TOP
        } else {
            self.body(self.cfg.max_depth)
        };
        Rule::new(head, body)
    }
}

/// Generate a value in the configured class. Deterministic in
/// `(config, seed)`; atoms are the interned generator atoms.
pub fn gen(cfg: &GenConfig, symbols: &mut Symbols) -> Generated {
    let atoms = gen_atoms(cfg.atom_count.max(1), symbols);
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        cfg: *cfg,
        atoms: &atoms,
    };
    match cfg.class_target {
        ClassTarget::Negative => Generated::Expr(g.negative(cfg.max_depth)),
        ClassTarget::Horn => Generated::Expr(g.horn(cfg.max_depth)),
        ClassTarget::PositiveHorn => Generated::Expr(g.positive_horn(cfg.max_depth)),
        ClassTarget::PositiveNonHorn => Generated::Expr(g.positive_non_horn(cfg.max_depth)),
        ClassTarget::NpRule => Generated::Rule(g.np_rule()),
        ClassTarget::NnpRule => Generated::Rule(g.nnp_rule()),
        ClassTarget::DnpRule => Generated::Rule(g.dnp_rule()),
        ClassTarget::NotFree => {
            let mut inner = *cfg;
            inner.allow_default = false;
            let mut g = Gen {
                rng: ChaCha8Rng::seed_from_u64(cfg.seed),
                cfg: inner,
                atoms: &atoms,
            };
            let rules = (0..cfg.rule_count.max(1)).map(|_| g.nnp_rule()).collect();
            Generated::Program(Program::new(rules))
        }
    }
}

/// Generate an NNP program of `cfg.rule_count` rules.
pub fn gen_nnp_program(cfg: &GenConfig, symbols: &mut Symbols) -> Program {
    let atoms = gen_atoms(cfg.atom_count.max(1), symbols);
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        cfg: *cfg,
        atoms: &atoms,
    };
    Program::new((0..cfg.rule_count.max(1)).map(|_| g.nnp_rule()).collect())
}

/// Generate a classical NP program of `cfg.rule_count` rules.
pub fn gen_np_program(cfg: &GenConfig, symbols: &mut Symbols) -> Program {
    let atoms = gen_atoms(cfg.atom_count.max(1), symbols);
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        cfg: *cfg,
        atoms: &atoms,
    };
    Program::new((0..cfg.rule_count.max(1)).map(|_| g.np_rule()).collect())
}

/// Deterministic chain family for scaling runs: one seed fact and `rungs`
/// rules `or(c_{i+1}, ~c_i).`, so the least-model derivation must walk the
/// whole chain. Leaf count is `2 * rungs + 1`.
pub fn bench_chain(rungs: usize, symbols: &mut Symbols) -> Program {
    let atoms: Vec<Atom> = (0..=rungs)
        .map(|i| symbols.intern(&format!("c{i}")))
        .collect();
    let mut rules = vec![Rule::fact(NestedExpr::lit(Literal::pos(atoms[0])))];
    for i in 0..rungs {
        rules.push(Rule::fact(NestedExpr::Or(vec![
            NestedExpr::lit(Literal::pos(atoms[i + 1])),
            NestedExpr::Over(Elementary::Lit(Literal::pos(atoms[i]))),
        ])));
    }
    Program::new(rules)
}

// ---------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------

/// Generic evaluator for body-position expressions.
fn eval_body(i: &Interpretation, e: &NestedExpr) -> bool {
    match e {
        NestedExpr::Elem(Elementary::Top) => true,
        NestedExpr::Elem(Elementary::Bot) => false,
        NestedExpr::Elem(Elementary::Lit(l)) => i.contains(*l),
        NestedExpr::Elem(Elementary::Default(l)) => !i.contains(*l),
        NestedExpr::Over(_) => false,
        NestedExpr::And(cs) => cs.iter().all(|c| eval_body(i, c)),
        NestedExpr::Or(cs) => cs.iter().any(|c| eval_body(i, c)),
    }
}

/// Generic evaluator for head expressions: overlined elements read as the
/// classical negation of their content.
fn eval_head(i: &Interpretation, e: &NestedExpr) -> bool {
    match e {
        NestedExpr::Elem(Elementary::Top) => true,
        NestedExpr::Elem(Elementary::Bot) => false,
        NestedExpr::Elem(Elementary::Lit(l)) => i.contains(*l),
        NestedExpr::Elem(Elementary::Default(l)) => !i.contains(*l),
        NestedExpr::Over(Elementary::Lit(l)) => !i.contains(*l),
        NestedExpr::Over(Elementary::Default(l)) => i.contains(*l),
        NestedExpr::Over(Elementary::Bot) => false,
        NestedExpr::Over(Elementary::Top) => true,
        NestedExpr::And(cs) => cs.iter().all(|c| eval_head(i, c)),
        NestedExpr::Or(cs) => cs.iter().any(|c| eval_head(i, c)),
    }
}

/// Rule and program satisfaction per the generic evaluators.
pub fn oracle_satisfies_rule(i: &Interpretation, r: &Rule) -> bool {
    !eval_body(i, &r.body) || eval_head(i, &r.head)
}

pub fn oracle_satisfies_program(i: &Interpretation, p: &Program) -> bool {
    p.rules.iter().all(|r| oracle_satisfies_rule(i, r))
}

/// Satisfaction of a head expression under the generic evaluator; used to
/// cross-check the pair-based head semantics.
pub fn oracle_satisfies_head(i: &Interpretation, h: &NestedExpr) -> bool {
    eval_head(i, h)
}

/// Expression-level reduct: default literals collapse to constants (dually
/// under an overline) against the fixed interpretation.
pub fn oracle_reduct_expr(e: &NestedExpr, i: &Interpretation) -> NestedExpr {
    match e {
        NestedExpr::Elem(Elementary::Default(l)) => {
            if i.contains(*l) {
                BOT
            } else {
                TOP
            }
        }
        NestedExpr::Over(Elementary::Default(l)) => {
            if i.contains(*l) {
                NestedExpr::Over(Elementary::Top)
            } else {
                NestedExpr::Over(Elementary::Bot)
            }
        }
        NestedExpr::Elem(_) | NestedExpr::Over(_) => e.clone(),
        NestedExpr::And(cs) => {
            NestedExpr::And(cs.iter().map(|c| oracle_reduct_expr(c, i)).collect())
        }
        NestedExpr::Or(cs) => NestedExpr::Or(cs.iter().map(|c| oracle_reduct_expr(c, i)).collect()),
    }
}

pub fn oracle_reduct_program(p: &Program, i: &Interpretation) -> Program {
    Program::new(
        p.rules
            .iter()
            .map(|r| {
                Rule::new(
                    oracle_reduct_expr(&r.head, i),
                    oracle_reduct_expr(&r.body, i),
                )
            })
            .collect(),
    )
}

fn check_universe(universe: &BTreeSet<Literal>, max: usize) -> Result<(), OracleError> {
    if universe.len() > max {
        return Err(OracleError::UniverseTooLarge {
            size: universe.len(),
            max,
        });
    }
    Ok(())
}

/// All consistent subsets of `universe` satisfying the expression
/// (body-position evaluation).
pub fn brute_expr_models(
    e: &NestedExpr,
    universe: &BTreeSet<Literal>,
    max: usize,
) -> Result<Vec<Interpretation>, OracleError> {
    check_universe(universe, max)?;
    Ok(consistent_interpretations(universe)
        .into_iter()
        .filter(|i| eval_body(i, e))
        .collect())
}

/// All consistent subsets of `universe` that are models of the program
/// under the generic evaluators.
pub fn brute_models(
    p: &Program,
    universe: &BTreeSet<Literal>,
    max: usize,
) -> Result<Vec<Interpretation>, OracleError> {
    check_universe(universe, max)?;
    Ok(consistent_interpretations(universe)
        .into_iter()
        .filter(|i| oracle_satisfies_program(i, p))
        .collect())
}

/// Minimal models under the generic evaluators.
pub fn brute_minimal_models(
    p: &Program,
    universe: &BTreeSet<Literal>,
    max: usize,
) -> Result<Vec<Interpretation>, OracleError> {
    let models = brute_models(p, universe, max)?;
    Ok(models
        .iter()
        .filter(|m| !models.iter().any(|n| n.len() < m.len() && n.is_subset(m)))
        .cloned()
        .collect())
}

/// Answer sets by the generic-reduct route: `i` is an answer set when it
/// is a minimal model of the reduct of `p` by `i`. Defined for any nested
/// program, including disjunctive ones; used as the measured reference for
/// splitting.
pub fn oracle_answer_sets(
    p: &Program,
    universe: &BTreeSet<Literal>,
    max: usize,
) -> Result<Vec<Interpretation>, OracleError> {
    check_universe(universe, max)?;
    let all = consistent_interpretations(universe);
    let mut out = Vec::new();
    for i in &all {
        let red = oracle_reduct_program(p, i);
        if !oracle_satisfies_program(i, &red) {
            continue;
        }
        let minimal = !all
            .iter()
            .any(|j| j.len() < i.len() && j.is_subset(i) && oracle_satisfies_program(j, &red));
        if minimal {
            out.push(i.clone());
        }
    }
    Ok(out)
}

/// Textbook immediate consequence operator for classical NP programs:
/// heads whose positive body literals are all in `i` and whose default
/// literals all miss `i`.
pub fn textbook_tp(p: &NormalProgram, i: &Interpretation) -> BTreeSet<Literal> {
    let mut out = BTreeSet::new();
    for r in &p.rules {
        let h = match &r.head {
            NestedExpr::Elem(Elementary::Lit(l)) => *l,
            _ => continue,
        };
        if eval_np_body(i, &r.body) {
            out.insert(h);
        }
    }
    out
}

fn eval_np_body(i: &Interpretation, b: &NestedExpr) -> bool {
    let conjuncts: Vec<&NestedExpr> = match b {
        NestedExpr::And(cs) => cs.iter().collect(),
        other => vec![other],
    };
    conjuncts.iter().all(|c| match c {
        NestedExpr::Elem(Elementary::Lit(l)) => i.contains(*l),
        NestedExpr::Elem(Elementary::Default(l)) => !i.contains(*l),
        NestedExpr::Elem(Elementary::Top) => true,
        NestedExpr::Elem(Elementary::Bot) => false,
        _ => false,
    })
}

fn np_body_parts(b: &NestedExpr) -> (Vec<Literal>, Vec<Literal>) {
    let conjuncts: Vec<&NestedExpr> = match b {
        NestedExpr::And(cs) => cs.iter().collect(),
        NestedExpr::Elem(Elementary::Top) => Vec::new(),
        other => vec![other],
    };
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for c in conjuncts {
        match c {
            NestedExpr::Elem(Elementary::Lit(l)) => pos.push(*l),
            NestedExpr::Elem(Elementary::Default(l)) => neg.push(*l),
            _ => {}
        }
    }
    (pos, neg)
}

/// Independent classical answer-set check for NP programs: for each
/// consistent candidate, build the classical reduct (drop rules whose
/// default literals meet the candidate, strip defaults), take the closure
/// of the not-free part, and compare; constraints must not fire.
pub fn gl_reference_answer_sets(
    p: &NormalProgram,
    universe: &BTreeSet<Literal>,
    max: usize,
) -> Result<Vec<Interpretation>, OracleError> {
    check_universe(universe, max)?;
    let mut out = Vec::new();
    'cand: for i in consistent_interpretations(universe) {
        // Classical reduct.
        let mut core: Vec<(Literal, Vec<Literal>)> = Vec::new();
        let mut constraints: Vec<Vec<Literal>> = Vec::new();
        for r in &p.rules {
            let (pos, neg) = np_body_parts(&r.body);
            if neg.iter().any(|l| i.contains(*l)) {
                continue;
            }
            match &r.head {
                NestedExpr::Elem(Elementary::Lit(h)) => core.push((*h, pos)),
                NestedExpr::Elem(Elementary::Bot) => constraints.push(pos),
                _ => {}
            }
        }
        for c in &constraints {
            if c.iter().all(|l| i.contains(*l)) {
                continue 'cand;
            }
        }
        // Closure of the not-free core.
        let mut s: BTreeSet<Literal> = BTreeSet::new();
        loop {
            let mut changed = false;
            for (h, pos) in &core {
                if !s.contains(h) && pos.iter().all(|l| s.contains(l)) {
                    s.insert(*h);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if s.iter().any(|l| s.contains(&l.complement())) {
            continue;
        }
        if s == *i.as_set() {
            out.push(i);
        }
    }
    Ok(out)
}

/// Outcome of textbook unit propagation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitPropOutcome {
    pub units: BTreeSet<Literal>,
    pub conflict: bool,
}

/// Textbook unit propagation over clauses of literals (complement is the
/// classical complement). Conflict on an empty clause or complementary
/// derived units.
pub fn classical_unit_propagation(clauses: &[Vec<Literal>]) -> UnitPropOutcome {
    let mut units: BTreeSet<Literal> = BTreeSet::new();
    loop {
        let mut changed = false;
        for clause in clauses {
            if clause.iter().any(|l| units.contains(l)) {
                continue;
            }
            let open: Vec<Literal> = clause
                .iter()
                .copied()
                .filter(|l| !units.contains(&l.complement()))
                .collect();
            match open.len() {
                0 => {
                    return UnitPropOutcome {
                        units,
                        conflict: true,
                    }
                }
                1 => {
                    let u = open[0];
                    if units.contains(&u.complement()) {
                        return UnitPropOutcome {
                            units,
                            conflict: true,
                        };
                    }
                    units.insert(u);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return UnitPropOutcome {
                units,
                conflict: false,
            };
        }
    }
}

/// Clause view of a flat (CNF-shaped) expression over literals; `bot`
/// leaves drop out of their clauses.
pub fn flat_clauses(e: &NestedExpr) -> Result<Vec<Vec<Literal>>, OracleError> {
    fn clause_of(e: &NestedExpr) -> Result<Vec<Literal>, OracleError> {
        let leaves: Vec<&NestedExpr> = match e {
            NestedExpr::Or(cs) => cs.iter().collect(),
            other => vec![other],
        };
        let mut out = Vec::new();
        for leaf in leaves {
            match leaf {
                NestedExpr::Elem(Elementary::Lit(l)) => out.push(*l),
                NestedExpr::Elem(Elementary::Bot) => {}
                _ => return Err(OracleError::NotCnf),
            }
        }
        Ok(out)
    }
    match e {
        NestedExpr::And(cs) => cs.iter().map(clause_of).collect(),
        other => Ok(vec![clause_of(other)?]),
    }
}

#[cfg(test)]
mod tests;
