//! Expression, rule and program value model, plus the concrete text syntax.
//!
//! Expressions are NNF trees: literals, default literals and the truth
//! constants, combined by conjunction and disjunction of any arity. Inside
//! rule heads, elementary expressions may additionally occur *overlined*
//! ([`NestedExpr::Over`]): an overlined element is a negative occurrence,
//! and falsifying it is what licenses firing the head.

mod parse;
mod print;

pub use parse::{parse_expr, parse_program, ParseError};
pub use print::{expr_to_json, expr_to_text, program_to_json, program_to_text, rule_to_text};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Interned atom. Ordering is interning order (first occurrence wins),
/// which is the deterministic order used for all canonical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(pub u32);

/// Atom interner. Names are nonempty identifiers; each name maps to a
/// single [`Atom`] for the lifetime of the table.
#[derive(Debug, Clone, Default)]
pub struct Symbols {
    names: Vec<String>,
    ids: BTreeMap<String, Atom>,
}

impl Symbols {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, name: &str) -> Atom {
        assert!(!name.is_empty(), "atom names are nonempty");
        if let Some(&a) = self.ids.get(name) {
            return a;
        }
        let a = Atom(self.names.len() as u32);
        self.names.push(name.to_string());
        self.ids.insert(name.to_string(), a);
        a
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, a: Atom) -> &str {
        &self.names[a.0 as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> {
        (0..self.names.len() as u32).map(Atom)
    }
}

/// Classical literal: an atom or its classical negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub positive: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal {
            atom,
            positive: true,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal {
            atom,
            positive: false,
        }
    }

    /// The complementary literal; an involution.
    pub fn complement(self) -> Self {
        Literal {
            atom: self.atom,
            positive: !self.positive,
        }
    }
}

/// Elementary expression: a truth constant, a classical literal, or a
/// default literal `not l`. Default literals wrap exactly one literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elementary {
    Top,
    Bot,
    Lit(Literal),
    Default(Literal),
}

impl Elementary {
    pub fn literal(&self) -> Option<Literal> {
        match self {
            Elementary::Lit(l) | Elementary::Default(l) => Some(*l),
            _ => None,
        }
    }
}

/// Nested expression tree. `Over` marks a negative (overlined) occurrence
/// of an elementary expression and is only meaningful in head position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NestedExpr {
    Elem(Elementary),
    Over(Elementary),
    And(Vec<NestedExpr>),
    Or(Vec<NestedExpr>),
}

pub const TOP: NestedExpr = NestedExpr::Elem(Elementary::Top);
pub const BOT: NestedExpr = NestedExpr::Elem(Elementary::Bot);

impl NestedExpr {
    pub fn lit(l: Literal) -> Self {
        NestedExpr::Elem(Elementary::Lit(l))
    }

    pub fn default(l: Literal) -> Self {
        NestedExpr::Elem(Elementary::Default(l))
    }

    pub fn and(children: Vec<NestedExpr>) -> Self {
        NestedExpr::And(children)
    }

    pub fn or(children: Vec<NestedExpr>) -> Self {
        NestedExpr::Or(children)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, NestedExpr::Elem(_) | NestedExpr::Over(_))
    }

    pub fn children(&self) -> &[NestedExpr] {
        match self {
            NestedExpr::And(cs) | NestedExpr::Or(cs) => cs,
            _ => &[],
        }
    }

    /// Number of tree nodes (leaves count as one node each).
    pub fn node_count(&self) -> usize {
        match self {
            NestedExpr::Elem(_) | NestedExpr::Over(_) => 1,
            NestedExpr::And(cs) | NestedExpr::Or(cs) => {
                1 + cs.iter().map(NestedExpr::node_count).sum::<usize>()
            }
        }
    }

    /// Number of leaves.
    pub fn leaf_count(&self) -> usize {
        match self {
            NestedExpr::Elem(_) | NestedExpr::Over(_) => 1,
            NestedExpr::And(cs) | NestedExpr::Or(cs) => cs.iter().map(NestedExpr::leaf_count).sum(),
        }
    }

    /// Number of literal occurrences, counting literals under `not` and
    /// under overlines; truth constants are not counted.
    pub fn literal_occurrences(&self) -> usize {
        match self {
            NestedExpr::Elem(e) | NestedExpr::Over(e) => match e {
                Elementary::Lit(_) | Elementary::Default(_) => 1,
                _ => 0,
            },
            NestedExpr::And(cs) | NestedExpr::Or(cs) => {
                cs.iter().map(NestedExpr::literal_occurrences).sum()
            }
        }
    }

    /// Number of connective occurrences: `and`/`or` nodes plus `not`s.
    /// Overlines are not counted.
    pub fn connective_count(&self) -> usize {
        match self {
            NestedExpr::Elem(e) | NestedExpr::Over(e) => {
                usize::from(matches!(e, Elementary::Default(_)))
            }
            NestedExpr::And(cs) | NestedExpr::Or(cs) => {
                1 + cs.iter().map(NestedExpr::connective_count).sum::<usize>()
            }
        }
    }

    /// True when no default literal occurs anywhere in the expression.
    pub fn is_not_free(&self) -> bool {
        match self {
            NestedExpr::Elem(e) | NestedExpr::Over(e) => !matches!(e, Elementary::Default(_)),
            NestedExpr::And(cs) | NestedExpr::Or(cs) => cs.iter().all(NestedExpr::is_not_free),
        }
    }

    pub fn collect_literals(&self, out: &mut BTreeSet<Literal>) {
        match self {
            NestedExpr::Elem(e) | NestedExpr::Over(e) => {
                if let Some(l) = e.literal() {
                    out.insert(l);
                }
            }
            NestedExpr::And(cs) | NestedExpr::Or(cs) => {
                for c in cs {
                    c.collect_literals(out);
                }
            }
        }
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            NestedExpr::Elem(e) | NestedExpr::Over(e) => {
                if let Some(l) = e.literal() {
                    out.insert(l.atom);
                }
            }
            NestedExpr::And(cs) | NestedExpr::Or(cs) => {
                for c in cs {
                    c.collect_atoms(out);
                }
            }
        }
    }

    /// True when some classically negated literal occurs (under `not` or
    /// an overline included).
    pub fn has_classical_negation(&self) -> bool {
        match self {
            NestedExpr::Elem(e) | NestedExpr::Over(e) => e.literal().is_some_and(|l| !l.positive),
            NestedExpr::And(cs) | NestedExpr::Or(cs) => {
                cs.iter().any(NestedExpr::has_classical_negation)
            }
        }
    }
}

/// Rule `head <- body`. A fact `H.` is a rule with body `top`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub head: NestedExpr,
    pub body: NestedExpr,
}

impl Rule {
    pub fn new(head: NestedExpr, body: NestedExpr) -> Self {
        Rule { head, body }
    }

    pub fn fact(head: NestedExpr) -> Self {
        Rule { head, body: TOP }
    }
}

/// Ordered list of rules. The Herbrand base is derived from the rules.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Program {
    pub rules: Vec<Rule>,
}

impl Program {
    pub fn new(rules: Vec<Rule>) -> Self {
        Program { rules }
    }

    /// Herbrand base: exactly the atoms occurring in the rules.
    pub fn base(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for r in &self.rules {
            r.head.collect_atoms(&mut out);
            r.body.collect_atoms(&mut out);
        }
        out
    }

    /// All literals occurring in the rules, including under `not` and
    /// under overlines.
    pub fn literals(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        for r in &self.rules {
            r.head.collect_literals(&mut out);
            r.body.collect_literals(&mut out);
        }
        out
    }
}

/// Path of child indices from an expression root down to one node.
/// The empty path designates the root itself.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccurrenceHandle(pub Vec<u32>);

impl OccurrenceHandle {
    pub fn root() -> Self {
        OccurrenceHandle(Vec::new())
    }

    pub fn child(&self, i: u32) -> Self {
        let mut p = self.0.clone();
        p.push(i);
        OccurrenceHandle(p)
    }

    /// Resolve the handle against an expression, if the path exists.
    pub fn resolve<'e>(&self, root: &'e NestedExpr) -> Option<&'e NestedExpr> {
        let mut cur = root;
        for &i in &self.0 {
            cur = cur.children().get(i as usize)?;
        }
        Some(cur)
    }

    /// True when `self` is `other` or an ancestor of `other`.
    pub fn contains(&self, other: &OccurrenceHandle) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }
}

impl fmt::Display for OccurrenceHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Which side of a rule an expression sits on. Overlines are only legal in
/// heads; default literals occur bare in bodies and only overlined in heads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Head,
    Body,
}

/// Positional violations detected on an otherwise well-formed tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositionViolation {
    OverInBody,
    BotInBody,
    BareDefaultInHead,
}

impl fmt::Display for PositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositionViolation::OverInBody => write!(f, "overlined expression in body position"),
            PositionViolation::BotInBody => write!(f, "bot in body position"),
            PositionViolation::BareDefaultInHead => {
                write!(f, "default literal in head position must be overlined")
            }
        }
    }
}

/// Check that `e` is a legal body: no overlines, no `bot`.
pub fn check_body_position(e: &NestedExpr) -> Result<(), PositionViolation> {
    match e {
        NestedExpr::Over(_) => Err(PositionViolation::OverInBody),
        NestedExpr::Elem(Elementary::Bot) => Err(PositionViolation::BotInBody),
        NestedExpr::Elem(_) => Ok(()),
        NestedExpr::And(cs) | NestedExpr::Or(cs) => cs.iter().try_for_each(check_body_position),
    }
}

/// Check that `e` is a legal head: default literals appear only overlined.
pub fn check_head_position(e: &NestedExpr) -> Result<(), PositionViolation> {
    match e {
        NestedExpr::Elem(Elementary::Default(_)) => Err(PositionViolation::BareDefaultInHead),
        NestedExpr::Elem(_) | NestedExpr::Over(_) => Ok(()),
        NestedExpr::And(cs) | NestedExpr::Or(cs) => cs.iter().try_for_each(check_head_position),
    }
}

/// Enumerate all sub-expressions of `e` in pre-order: the expression itself
/// first, then the sub-expressions of each child. Leaves (including
/// overlined elements) yield only themselves.
pub fn subexpressions(e: &NestedExpr) -> Vec<(OccurrenceHandle, &NestedExpr)> {
    let mut out = Vec::new();
    fn walk<'e>(
        e: &'e NestedExpr,
        at: OccurrenceHandle,
        out: &mut Vec<(OccurrenceHandle, &'e NestedExpr)>,
    ) {
        out.push((at.clone(), e));
        for (i, c) in e.children().iter().enumerate() {
            walk(c, at.child(i as u32), out);
        }
    }
    walk(e, OccurrenceHandle::root(), &mut out);
    out
}

/// Constant simplification.
///
/// Applies the truth-constant equivalences (`and[bot, e] = bot`,
/// `or(top, e) = top`, `and[top, e] = e`, `or(bot, e) = e`, `and[] = top`,
/// `or() = bot`) until the result contains `top` only as the whole
/// expression, and `bot` only as the whole expression or — in head
/// position — as a positive occurrence modeling a constraint: in head
/// position a `bot` disjunct is a constraint marker and is kept.
///
/// Overlined constants are opaque negative leaves and are left alone.
/// The result is equivalent to the input and the operation is idempotent.
pub fn simplify_constants(e: &NestedExpr, pos: Position) -> NestedExpr {
    match e {
        NestedExpr::Elem(_) | NestedExpr::Over(_) => e.clone(),
        NestedExpr::And(cs) => {
            let mut kept = Vec::with_capacity(cs.len());
            let mut dropped = false;
            for c in cs {
                match simplify_constants(c, pos) {
                    NestedExpr::Elem(Elementary::Top) => dropped = true,
                    NestedExpr::Elem(Elementary::Bot) => return BOT,
                    other => kept.push(other),
                }
            }
            match (kept.len(), dropped) {
                (0, _) => TOP,
                (1, true) => kept.pop().unwrap(),
                _ => NestedExpr::And(kept),
            }
        }
        NestedExpr::Or(cs) => {
            let mut kept = Vec::with_capacity(cs.len());
            let mut dropped = false;
            for c in cs {
                match simplify_constants(c, pos) {
                    NestedExpr::Elem(Elementary::Top) => return TOP,
                    NestedExpr::Elem(Elementary::Bot) if pos == Position::Body => dropped = true,
                    other => kept.push(other),
                }
            }
            match (kept.len(), dropped) {
                (0, _) => BOT,
                (1, true) => kept.pop().unwrap(),
                _ => NestedExpr::Or(kept),
            }
        }
    }
}
