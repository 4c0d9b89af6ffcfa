//! Shared helpers for unit tests: terse parsing and interpretation
//! construction.

use alloc::string::String;
use alloc::vec::Vec;

use crate::ast::{parse_expr, parse_program, NestedExpr, Position, Program, Rule, Symbols};
use crate::semantics::Interpretation;

pub fn head(src: &str, sy: &mut Symbols) -> NestedExpr {
    parse_expr(src, Position::Head, sy).expect("head fixture parses")
}

pub fn body(src: &str, sy: &mut Symbols) -> NestedExpr {
    parse_expr(src, Position::Body, sy).expect("body fixture parses")
}

pub fn program(src: &str, sy: &mut Symbols) -> Program {
    parse_program(src, sy).expect("program fixture parses")
}

pub fn rule(src: &str, sy: &mut Symbols) -> Rule {
    let p = program(src, sy);
    assert_eq!(p.rules.len(), 1, "single-rule fixture");
    p.rules.into_iter().next().unwrap()
}

/// Interpretation from a comma-separated literal list (`-a` for the
/// classical negation); empty string is the empty interpretation.
pub fn interp(src: &str, sy: &mut Symbols) -> Interpretation {
    let mut lits = alloc::collections::BTreeSet::new();
    for tok in src.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (positive, name) = match tok.strip_prefix('-') {
            Some(rest) => (false, rest),
            None => (true, tok),
        };
        let atom = sy.intern(name);
        lits.insert(crate::ast::Literal { atom, positive });
    }
    Interpretation::try_new(lits).expect("consistent interpretation fixture")
}

/// Render a set of interpretations as sorted literal-list strings, for
/// readable set comparisons in assertions. Literals are ordered by name.
pub fn interp_strings(models: &[Interpretation], sy: &Symbols) -> Vec<String> {
    let mut out: Vec<String> = models
        .iter()
        .map(|m| {
            let mut parts: Vec<(String, bool)> = m
                .iter()
                .map(|l| (String::from(sy.name(l.atom)), l.positive))
                .collect();
            parts.sort();
            let parts: Vec<String> = parts
                .into_iter()
                .map(|(name, positive)| {
                    if positive {
                        name
                    } else {
                        let mut s = String::from("-");
                        s.push_str(&name);
                        s
                    }
                })
                .collect();
            parts.join(",")
        })
        .collect();
    out.sort();
    out
}
