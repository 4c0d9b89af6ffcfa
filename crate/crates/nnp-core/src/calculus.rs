//! Nested unit-resolution over not-free Horn expressions.
//!
//! A not-free NNP program compiles to one Horn expression: the conjunction,
//! over its rules, of `H v nnf(not B)` (the head disjoined with the De
//! Morgan image of the negated body), with overlined literals replaced by
//! their classical complements. On that expression the calculus consists
//! of the main rule NUR plus four simplification rules:
//!
//! - NUR: given a top-level unit conjunct `l` and an occurrence of its
//!   complement, delete the maximal conjunctive scope of that occurrence
//!   from its enclosing disjunction (or replace it by `bot` when the scope
//!   reaches the top level);
//! - `or-bot` / `and-bot` propagate `bot` out of disjunctions and
//!   conjunctions;
//! - `unwrap` removes a connective applied to a single expression;
//! - `flatten` merges a connective into an enclosing connective of the
//!   same kind.
//!
//! Saturation on a consistent expression leaves the least model as the set
//! of top-level unit literals; deriving `bot` (or a complementary pair of
//! units) means the expression, and hence the program, is inconsistent.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::ast::{
    simplify_constants, Elementary, Literal, NestedExpr, OccurrenceHandle, Position, Program, BOT,
    TOP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum WorkNode {
    Lit(Literal),
    Bot,
    And(Vec<NodeId>),
    Or(Vec<NodeId>),
}

impl WorkNode {
    fn children(&self) -> &[NodeId] {
        match self {
            WorkNode::And(cs) | WorkNode::Or(cs) => cs,
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepRule {
    Nur,
    Nhur,
    OrBot,
    AndBot,
    Unwrap,
    Flatten,
}

impl StepRule {
    pub fn is_simplification(self) -> bool {
        !matches!(self, StepRule::Nur | StepRule::Nhur)
    }
}

impl fmt::Display for StepRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepRule::Nur => write!(f, "NUR"),
            StepRule::Nhur => write!(f, "NHUR"),
            StepRule::OrBot => write!(f, "or-bot"),
            StepRule::AndBot => write!(f, "and-bot"),
            StepRule::Unwrap => write!(f, "unwrap"),
            StepRule::Flatten => write!(f, "flatten"),
        }
    }
}

/// One recorded inference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: StepRule,
    pub literal: Option<Literal>,
    /// Path of the acted-on node at the time of the step.
    pub path: OccurrenceHandle,
    /// Alive node count after the step.
    pub size_after: usize,
}

/// Ordered record of rule applications for one derivation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DerivationTrace {
    pub steps: Vec<TraceStep>,
    pub initial_leaves: usize,
    pub initial_connectives: usize,
}

impl DerivationTrace {
    pub fn nur_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| !s.rule.is_simplification())
            .count()
    }

    pub fn simplification_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.rule.is_simplification())
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CalculusError {
    /// The program mentions a default literal.
    NotNotFree,
    /// The given literal is not a top-level unit conjunct, or has no
    /// complement occurrence to act on.
    NoUnit,
    /// The handle does not name a live complement occurrence.
    BadHandle,
}

impl fmt::Display for CalculusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalculusError::NotNotFree => write!(f, "program is not not-free"),
            CalculusError::NoUnit => write!(f, "no such top-level unit"),
            CalculusError::BadHandle => write!(f, "handle is not a live complement occurrence"),
        }
    }
}

/// Result of saturating the calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UrOutcome {
    LeastModel(BTreeSet<Literal>),
    Inconsistent,
}

/// Scope of a complement occurrence: the maximal conjunctively linked
/// subexpression around it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NegScope {
    /// The scope is one disjunct; NUR deletes it and keeps the siblings.
    Disjunct {
        delta: NodeId,
        siblings: Vec<NodeId>,
    },
    /// The scope is conjunctively linked to the whole expression; NUR
    /// replaces it by `bot`.
    TopLevel { delta: NodeId },
}

impl NegScope {
    fn delta(&self) -> NodeId {
        match self {
            NegScope::Disjunct { delta, .. } | NegScope::TopLevel { delta } => *delta,
        }
    }
}

/// A Horn expression under derivation: arena tree plus literal-occurrence
/// and unit indices, updated incrementally at each step.
#[derive(Debug, Clone)]
pub struct HornWork {
    nodes: Vec<WorkNode>,
    parent: Vec<Option<NodeId>>,
    alive: Vec<bool>,
    root: NodeId,
    alive_count: usize,
    /// Literal leaf occurrences, by literal.
    occ_index: BTreeMap<Literal, BTreeSet<NodeId>>,
    /// Top-level unit conjunct leaves, by literal.
    unit_index: BTreeMap<Literal, BTreeSet<NodeId>>,
    /// Units whose complement occurrences may still need resolving.
    pending_units: BTreeSet<Literal>,
    /// Nodes to re-examine for simplification rules.
    dirty: BTreeSet<NodeId>,
    pub trace: DerivationTrace,
}

impl HornWork {
    fn node(&self, id: NodeId) -> &WorkNode {
        &self.nodes[id.idx()]
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn size(&self) -> usize {
        self.alive_count
    }

    pub fn is_alive(&self, id: NodeId) -> bool {
        self.alive[id.idx()]
    }

    /// Live occurrences of a literal, in left-to-right order.
    pub fn occurrences_of(&self, l: Literal) -> Vec<NodeId> {
        self.occ_index
            .get(&l)
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default()
    }

    /// Current top-level unit literals, in literal order.
    pub fn units(&self) -> Vec<Literal> {
        self.unit_index.keys().copied().collect()
    }

    /// Index of `child` in `parent`'s list. Child ids are allocated in
    /// depth-first order and every mutation replaces a child by nodes of
    /// its own subtree or removes it, so the lists stay id-sorted and the
    /// position is found by binary search.
    fn child_position(&self, parent: NodeId, child: NodeId) -> usize {
        let cs = self.node(parent).children();
        debug_assert!(cs.windows(2).all(|w| w[0] < w[1]), "children id-sorted");
        cs.binary_search(&child).expect("child listed in parent")
    }

    /// Path of a live node from the root.
    pub fn path_of(&self, id: NodeId) -> OccurrenceHandle {
        let mut rev = Vec::new();
        let mut cur = id;
        while let Some(p) = self.parent[cur.idx()] {
            rev.push(self.child_position(p, cur) as u32);
            cur = p;
        }
        rev.reverse();
        OccurrenceHandle(rev)
    }

    /// Snapshot of the current expression.
    pub fn to_expr(&self) -> NestedExpr {
        fn build(w: &HornWork, id: NodeId) -> NestedExpr {
            match w.node(id) {
                WorkNode::Lit(l) => NestedExpr::lit(*l),
                WorkNode::Bot => BOT,
                WorkNode::And(cs) => NestedExpr::And(cs.iter().map(|&c| build(w, c)).collect()),
                WorkNode::Or(cs) => NestedExpr::Or(cs.iter().map(|&c| build(w, c)).collect()),
            }
        }
        build(self, self.root)
    }

    fn insert(&mut self, e: &NestedExpr, parent: Option<NodeId>) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(WorkNode::Bot);
        self.parent.push(parent);
        self.alive.push(true);
        self.alive_count += 1;
        let node = match e {
            NestedExpr::Elem(Elementary::Lit(l)) => {
                self.occ_index.entry(*l).or_default().insert(id);
                WorkNode::Lit(*l)
            }
            NestedExpr::Elem(Elementary::Bot) => WorkNode::Bot,
            NestedExpr::And(cs) => {
                let ids = cs.iter().map(|c| self.insert(c, Some(id))).collect();
                WorkNode::And(ids)
            }
            NestedExpr::Or(cs) => {
                let ids = cs.iter().map(|c| self.insert(c, Some(id))).collect();
                WorkNode::Or(ids)
            }
            other => unreachable!("classicalized expression has no {other:?}"),
        };
        self.nodes[id.idx()] = node;
        id
    }

    fn unindex_lit_leaf(&mut self, id: NodeId, l: Literal) {
        if let Some(s) = self.occ_index.get_mut(&l) {
            s.remove(&id);
            if s.is_empty() {
                self.occ_index.remove(&l);
            }
        }
        if let Some(s) = self.unit_index.get_mut(&l) {
            s.remove(&id);
            if s.is_empty() {
                self.unit_index.remove(&l);
                self.pending_units.remove(&l);
            }
        }
    }

    fn kill_subtree(&mut self, id: NodeId) {
        let mut stack = alloc::vec![id];
        while let Some(n) = stack.pop() {
            if !self.alive[n.idx()] {
                continue;
            }
            self.alive[n.idx()] = false;
            self.alive_count -= 1;
            self.dirty.remove(&n);
            match self.nodes[n.idx()].clone() {
                WorkNode::Lit(l) => self.unindex_lit_leaf(n, l),
                WorkNode::And(cs) | WorkNode::Or(cs) => stack.extend(cs),
                WorkNode::Bot => {}
            }
        }
    }

    /// Replace a live node by `bot`, discarding its subtree.
    fn replace_with_bot(&mut self, id: NodeId) {
        match self.nodes[id.idx()].clone() {
            WorkNode::Lit(l) => self.unindex_lit_leaf(id, l),
            WorkNode::And(cs) | WorkNode::Or(cs) => {
                for c in cs {
                    self.kill_subtree(c);
                }
            }
            WorkNode::Bot => {}
        }
        self.nodes[id.idx()] = WorkNode::Bot;
        self.dirty.remove(&id);
        // A fresh bot child enables the bot rules at the parent.
        self.enqueue_parent_of(id);
    }

    fn enqueue(&mut self, id: NodeId) {
        if self.alive[id.idx()] {
            self.dirty.insert(id);
        }
    }

    fn enqueue_parent_of(&mut self, id: NodeId) {
        if let Some(p) = self.parent[id.idx()] {
            self.enqueue(p);
        }
    }

    fn register_unit_candidate(&mut self, id: NodeId) {
        if let WorkNode::Lit(l) = self.node(id) {
            let l = *l;
            self.unit_index.entry(l).or_default().insert(id);
            self.pending_units.insert(l);
        }
    }

    fn refresh_units_at_root(&mut self) {
        match self.node(self.root) {
            WorkNode::Lit(_) => self.register_unit_candidate(self.root),
            WorkNode::And(cs) => {
                for c in cs.clone() {
                    self.register_unit_candidate(c);
                }
            }
            _ => {}
        }
    }

    /// Compute the scope of a complement occurrence: climb through
    /// conjunction parents; the child of the first disjunction reached is
    /// the deleted disjunct, and reaching the root without meeting a
    /// disjunction makes the scope top level.
    pub fn neg_scope(&self, occ: NodeId) -> Result<NegScope, CalculusError> {
        if !self.is_alive(occ) || !matches!(self.node(occ), WorkNode::Lit(_)) {
            return Err(CalculusError::BadHandle);
        }
        let mut cur = occ;
        loop {
            match self.parent[cur.idx()] {
                None => return Ok(NegScope::TopLevel { delta: cur }),
                Some(p) => match self.node(p) {
                    WorkNode::Or(cs) => {
                        let siblings = cs.iter().copied().filter(|&c| c != cur).collect();
                        return Ok(NegScope::Disjunct {
                            delta: cur,
                            siblings,
                        });
                    }
                    WorkNode::And(_) if p == self.root => {
                        // Conjunctively linked all the way up: the scope is
                        // the whole top-level conjunct.
                        return Ok(NegScope::TopLevel { delta: cur });
                    }
                    WorkNode::And(_) => cur = p,
                    _ => return Err(CalculusError::BadHandle),
                },
            }
        }
    }

    fn push_step(&mut self, rule: StepRule, literal: Option<Literal>, path: OccurrenceHandle) {
        let size_after = self.alive_count;
        self.trace.steps.push(TraceStep {
            rule,
            literal,
            path,
            size_after,
        });
    }

    fn delete_disjunct(&mut self, delta: NodeId) {
        let parent = self.parent[delta.idx()].expect("disjunct has a parent");
        let remaining = match &mut self.nodes[parent.idx()] {
            WorkNode::Or(cs) => {
                cs.retain(|&c| c != delta);
                cs.len()
            }
            _ => unreachable!("delta parent is a disjunction"),
        };
        self.kill_subtree(delta);
        match remaining {
            0 => {
                // A disjunction losing all disjuncts is unsatisfiable.
                self.nodes[parent.idx()] = WorkNode::Bot;
                self.dirty.remove(&parent);
                self.enqueue_parent_of(parent);
            }
            1 => self.enqueue(parent),
            _ => {}
        }
    }

    fn apply_scope_removal(&mut self, scope: &NegScope) {
        match scope {
            NegScope::Disjunct { delta, .. } => self.delete_disjunct(*delta),
            NegScope::TopLevel { delta } => self.replace_with_bot(*delta),
        }
    }
}

/// Replace every overlined element by its classical reading: an overlined
/// literal becomes its complement; overlined constants collapse dually.
fn classicalize(e: &NestedExpr) -> NestedExpr {
    match e {
        NestedExpr::Elem(Elementary::Lit(_) | Elementary::Bot | Elementary::Top) => e.clone(),
        NestedExpr::Elem(Elementary::Default(_)) => unreachable!("not-free checked"),
        NestedExpr::Over(el) => match el {
            Elementary::Lit(l) => NestedExpr::lit(l.complement()),
            Elementary::Bot => BOT,
            Elementary::Top => TOP,
            Elementary::Default(_) => unreachable!("not-free checked"),
        },
        NestedExpr::And(cs) => NestedExpr::And(cs.iter().map(classicalize).collect()),
        NestedExpr::Or(cs) => NestedExpr::Or(cs.iter().map(classicalize).collect()),
    }
}

/// Fold away `top` leaves without touching `bot` (constraint occurrences
/// stay; the traced simplification rules handle them).
fn fold_tops(e: &NestedExpr) -> NestedExpr {
    match e {
        NestedExpr::And(cs) => {
            let mut kept = Vec::with_capacity(cs.len());
            let mut dropped = false;
            for c in cs {
                match fold_tops(c) {
                    NestedExpr::Elem(Elementary::Top) => dropped = true,
                    other => kept.push(other),
                }
            }
            match (kept.len(), dropped) {
                (0, _) => TOP,
                (1, true) => kept.into_iter().next().unwrap(),
                _ => NestedExpr::And(kept),
            }
        }
        NestedExpr::Or(cs) => {
            let folded: Vec<NestedExpr> = cs.iter().map(fold_tops).collect();
            if folded.contains(&TOP) {
                TOP
            } else {
                NestedExpr::Or(folded)
            }
        }
        _ => e.clone(),
    }
}

/// De Morgan image of the negated body: swap connectives and complement
/// literals. The body must be not-free and constant-simplified.
fn nnf_neg(e: &NestedExpr) -> NestedExpr {
    match e {
        NestedExpr::Elem(Elementary::Lit(l)) => NestedExpr::lit(l.complement()),
        NestedExpr::Elem(Elementary::Top) => BOT,
        NestedExpr::Elem(Elementary::Bot) => TOP,
        NestedExpr::And(cs) => NestedExpr::Or(cs.iter().map(nnf_neg).collect()),
        NestedExpr::Or(cs) => NestedExpr::And(cs.iter().map(nnf_neg).collect()),
        other => unreachable!("body image has no {other:?}"),
    }
}

/// Compile a not-free NNP program into one working Horn expression: the
/// conjunction over rules of `H v nnf(not B)`, flattened at the top so
/// unit conjuncts are visible.
pub fn to_horn_expression(p: &Program) -> Result<HornWork, CalculusError> {
    for r in &p.rules {
        if !r.head.is_not_free() || !r.body.is_not_free() {
            return Err(CalculusError::NotNotFree);
        }
    }
    let mut conjuncts: Vec<NestedExpr> = Vec::new();
    for r in &p.rules {
        let body = simplify_constants(&r.body, Position::Body);
        if body == BOT {
            continue;
        }
        let head = fold_tops(&classicalize(&r.head));
        if head == TOP {
            continue;
        }
        let expr = if body == TOP {
            head
        } else {
            // Disjoin head and negated body, splicing nested disjunctions
            // so clause-shaped rules compile to clauses.
            let mut children = Vec::new();
            for part in [head, nnf_neg(&body)] {
                match part {
                    NestedExpr::Or(cs) => children.extend(cs),
                    other => children.push(other),
                }
            }
            NestedExpr::Or(children)
        };
        if expr == TOP {
            continue;
        }
        match expr {
            NestedExpr::And(cs) => conjuncts.extend(cs),
            other => conjuncts.push(other),
        }
    }
    let expr = match conjuncts.len() {
        1 => conjuncts.into_iter().next().unwrap(),
        _ => NestedExpr::And(conjuncts),
    };
    let initial_leaves = expr.leaf_count();
    let initial_connectives = expr.node_count() - initial_leaves;
    let mut w = HornWork {
        nodes: Vec::new(),
        parent: Vec::new(),
        alive: Vec::new(),
        root: NodeId(0),
        alive_count: 0,
        occ_index: BTreeMap::new(),
        unit_index: BTreeMap::new(),
        pending_units: BTreeSet::new(),
        dirty: BTreeSet::new(),
        trace: DerivationTrace {
            steps: Vec::new(),
            initial_leaves,
            initial_connectives,
        },
    };
    let root = w.insert(&expr, None);
    w.root = root;
    w.refresh_units_at_root();
    w.dirty = (0..w.nodes.len() as u32).map(NodeId).collect();
    Ok(w)
}

/// One NUR application: `unit` must be a top-level unit conjunct and `occ`
/// a live occurrence of its complement. Deletes the occurrence's scope
/// from its disjunction, or replaces a top-level scope by `bot`.
pub fn apply_nur(w: &mut HornWork, unit: Literal, occ: NodeId) -> Result<(), CalculusError> {
    if !w.unit_index.contains_key(&unit) {
        return Err(CalculusError::NoUnit);
    }
    if !w.is_alive(occ) || w.node(occ) != &WorkNode::Lit(unit.complement()) {
        return Err(CalculusError::BadHandle);
    }
    let path = w.path_of(occ);
    let scope = w.neg_scope(occ)?;
    w.apply_scope_removal(&scope);
    w.push_step(StepRule::Nur, Some(unit), path);
    Ok(())
}

/// Batched hyper variant: resolve every live complement occurrence of
/// every given unit in one pass, recorded as a single trace step.
pub fn apply_nhur(w: &mut HornWork, units: &[Literal]) -> Result<(), CalculusError> {
    for u in units {
        if !w.unit_index.contains_key(u) {
            return Err(CalculusError::NoUnit);
        }
    }
    let mut occs: Vec<NodeId> = Vec::new();
    for u in units {
        occs.extend(w.occurrences_of(u.complement()));
    }
    occs.sort();
    occs.dedup();
    if occs.is_empty() {
        return Err(CalculusError::NoUnit);
    }
    // Resolve all scopes on the unmodified tree, then drop the ones nested
    // inside another scope.
    let mut scopes = Vec::new();
    for occ in occs {
        scopes.push(w.neg_scope(occ)?);
    }
    let deltas: BTreeSet<NodeId> = scopes.iter().map(NegScope::delta).collect();
    let first = units.first().copied();
    let mut seen = BTreeSet::new();
    for scope in scopes {
        let delta = scope.delta();
        if !seen.insert(delta) || !w.is_alive(delta) {
            continue;
        }
        let mut nested = false;
        let mut cur = delta;
        while let Some(p) = w.parent[cur.idx()] {
            if deltas.contains(&p) {
                nested = true;
                break;
            }
            cur = p;
        }
        if nested {
            continue;
        }
        w.apply_scope_removal(&scope);
    }
    w.push_step(StepRule::Nhur, first, OccurrenceHandle::root());
    Ok(())
}

fn rule_applicable(w: &HornWork, id: NodeId) -> Option<StepRule> {
    if !w.is_alive(id) {
        return None;
    }
    match w.node(id) {
        WorkNode::Or(cs) => {
            if cs.len() >= 2 && cs.iter().any(|&c| w.node(c) == &WorkNode::Bot) {
                Some(StepRule::OrBot)
            } else if cs.len() == 1 {
                Some(StepRule::Unwrap)
            } else if cs.iter().any(|&c| matches!(w.node(c), WorkNode::Or(_))) {
                Some(StepRule::Flatten)
            } else {
                None
            }
        }
        WorkNode::And(cs) => {
            if cs.iter().any(|&c| w.node(c) == &WorkNode::Bot) {
                Some(StepRule::AndBot)
            } else if cs.len() == 1 {
                Some(StepRule::Unwrap)
            } else if cs.iter().any(|&c| matches!(w.node(c), WorkNode::And(_))) {
                Some(StepRule::Flatten)
            } else {
                None
            }
        }
        _ => None,
    }
}

fn apply_simplification(w: &mut HornWork, id: NodeId, rule: StepRule) {
    let path = w.path_of(id);
    match rule {
        StepRule::OrBot => {
            let pos = w
                .node(id)
                .children()
                .iter()
                .position(|&c| w.node(c) == &WorkNode::Bot)
                .expect("bot child present");
            let bot = match &mut w.nodes[id.idx()] {
                WorkNode::Or(cs) => cs.remove(pos),
                _ => unreachable!(),
            };
            w.alive[bot.idx()] = false;
            w.alive_count -= 1;
            w.dirty.remove(&bot);
            let again = match w.node(id) {
                WorkNode::Or(cs) => {
                    cs.len() == 1 || cs.iter().any(|&c| w.node(c) == &WorkNode::Bot)
                }
                _ => false,
            };
            if again {
                w.enqueue(id);
            }
        }
        StepRule::AndBot => {
            w.replace_with_bot(id);
        }
        StepRule::Unwrap => {
            let child = w.node(id).children()[0];
            match w.parent[id.idx()] {
                None => {
                    w.root = child;
                    w.parent[child.idx()] = None;
                    w.refresh_units_at_root();
                }
                Some(p) => {
                    let pos = w.child_position(p, id);
                    match &mut w.nodes[p.idx()] {
                        WorkNode::And(cs) | WorkNode::Or(cs) => cs[pos] = child,
                        _ => unreachable!("parent is a connective"),
                    }
                    w.parent[child.idx()] = Some(p);
                    if p == w.root && matches!(w.node(w.root), WorkNode::And(_)) {
                        w.register_unit_candidate(child);
                    }
                    // The replacement enables a parent rule only when it
                    // merges (same kind) or propagates (bot).
                    let enables = matches!(
                        (w.node(p), w.node(child)),
                        (_, WorkNode::Bot)
                            | (WorkNode::And(_), WorkNode::And(_))
                            | (WorkNode::Or(_), WorkNode::Or(_))
                    );
                    if enables {
                        w.enqueue(p);
                    }
                }
            }
            w.alive[id.idx()] = false;
            w.alive_count -= 1;
            w.dirty.remove(&id);
        }
        StepRule::Flatten => {
            let same_and = matches!(w.node(id), WorkNode::And(_));
            let pos = w
                .node(id)
                .children()
                .iter()
                .position(|&c| match w.node(c) {
                    WorkNode::And(_) => same_and,
                    WorkNode::Or(_) => !same_and,
                    _ => false,
                })
                .expect("same-kind child present");
            let inner = w.node(id).children()[pos];
            let inner_children = w.node(inner).children().to_vec();
            match &mut w.nodes[id.idx()] {
                WorkNode::And(cs) | WorkNode::Or(cs) => {
                    cs.splice(pos..=pos, inner_children.iter().copied());
                }
                _ => unreachable!(),
            }
            let at_root = id == w.root && same_and;
            let mut enables = false;
            for &c in &inner_children {
                w.parent[c.idx()] = Some(id);
                if at_root {
                    w.register_unit_candidate(c);
                }
                enables |= match w.node(c) {
                    WorkNode::Bot => true,
                    WorkNode::And(_) => same_and,
                    WorkNode::Or(_) => !same_and,
                    _ => false,
                };
            }
            w.alive[inner.idx()] = false;
            w.alive_count -= 1;
            w.dirty.remove(&inner);
            if enables {
                w.enqueue(id);
            }
        }
        StepRule::Nur | StepRule::Nhur => unreachable!("not simplification rules"),
    }
    w.push_step(rule, None, path);
}

/// Apply one simplification rule at the leftmost-innermost applicable
/// position; `None` when no rule applies.
pub fn simplify_step(w: &mut HornWork) -> Option<StepRule> {
    fn find(w: &HornWork, id: NodeId) -> Option<(NodeId, StepRule)> {
        for &c in w.node(id).children() {
            if let Some(hit) = find(w, c) {
                return Some(hit);
            }
        }
        rule_applicable(w, id).map(|r| (id, r))
    }
    let (id, rule) = find(w, w.root)?;
    apply_simplification(w, id, rule);
    Some(rule)
}

fn exhaust_simplifications(w: &mut HornWork) {
    // Worklist form of the scan: mutated nodes and their parents are
    // re-examined, in node order.
    while let Some(&id) = w.dirty.iter().next() {
        w.dirty.remove(&id);
        if let Some(rule) = rule_applicable(w, id) {
            apply_simplification(w, id, rule);
        }
    }
}

/// Saturate NUR and the simplification rules. On a consistent expression
/// the least model is the set of top-level unit literals of the final
/// expression; deriving `bot` or a complementary unit pair reports
/// inconsistency. Simplifications are exhausted after every NUR; units are
/// taken in literal order, complement occurrences leftmost first.
pub fn ur_least_model(w: &mut HornWork) -> UrOutcome {
    loop {
        exhaust_simplifications(w);
        if w.node(w.root) == &WorkNode::Bot {
            return UrOutcome::Inconsistent;
        }
        let mut fired = false;
        while let Some(&unit) = w.pending_units.iter().next() {
            if !w.unit_index.contains_key(&unit) {
                w.pending_units.remove(&unit);
                continue;
            }
            match w.occurrences_of(unit.complement()).into_iter().next() {
                Some(occ) => {
                    apply_nur(w, unit, occ).expect("live unit and occurrence");
                    fired = true;
                    break;
                }
                None => {
                    w.pending_units.remove(&unit);
                }
            }
        }
        if !fired {
            break;
        }
    }
    let units = w.units();
    for &u in &units {
        if units.contains(&u.complement()) {
            return UrOutcome::Inconsistent;
        }
    }
    UrOutcome::LeastModel(units.into_iter().collect())
}
