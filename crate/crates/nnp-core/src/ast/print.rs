//! Rendering back to the concrete text syntax and to JSON.
//!
//! Text output round-trips: parsing the rendered form yields a structurally
//! equal value. The JSON encoding is a single-key tagged tree per node:
//! `{"atom": name}`, `{"lit": "-name"}`, `{"not": lit}`, `{"over": elem}`,
//! `{"and": [..]}`, `{"or": [..]}`, `{"top": null}`, `{"bot": null}`;
//! rules are `{"head": T, "body": T}` and programs `{"rules": [..]}`.

use alloc::string::String;
use core::fmt::Write as _;

use super::{Elementary, Literal, NestedExpr, Program, Rule, Symbols, TOP};

fn push_literal(out: &mut String, l: Literal, sy: &Symbols) {
    if !l.positive {
        out.push('-');
    }
    out.push_str(sy.name(l.atom));
}

fn push_elementary(out: &mut String, e: &Elementary, sy: &Symbols) {
    match e {
        Elementary::Top => out.push_str("top"),
        Elementary::Bot => out.push_str("bot"),
        Elementary::Lit(l) => push_literal(out, *l, sy),
        Elementary::Default(l) => {
            out.push_str("not ");
            push_literal(out, *l, sy);
        }
    }
}

fn push_expr(out: &mut String, e: &NestedExpr, sy: &Symbols) {
    match e {
        NestedExpr::Elem(el) => push_elementary(out, el, sy),
        NestedExpr::Over(el) => {
            out.push('~');
            push_elementary(out, el, sy);
        }
        NestedExpr::And(cs) => {
            out.push_str("and[");
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                push_expr(out, c, sy);
            }
            out.push(']');
        }
        NestedExpr::Or(cs) => {
            out.push_str("or(");
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                push_expr(out, c, sy);
            }
            out.push(')');
        }
    }
}

pub fn expr_to_text(e: &NestedExpr, sy: &Symbols) -> String {
    let mut out = String::new();
    push_expr(&mut out, e, sy);
    out
}

pub fn rule_to_text(r: &Rule, sy: &Symbols) -> String {
    let mut out = String::new();
    push_expr(&mut out, &r.head, sy);
    if r.body != TOP {
        out.push_str(" <- ");
        push_expr(&mut out, &r.body, sy);
    }
    out.push('.');
    out
}

pub fn program_to_text(p: &Program, sy: &Symbols) -> String {
    let mut out = String::new();
    for r in &p.rules {
        out.push_str(&rule_to_text(r, sy));
        out.push('\n');
    }
    out
}

fn push_literal_json(out: &mut String, l: Literal, sy: &Symbols) {
    out.push('"');
    if !l.positive {
        out.push('-');
    }
    out.push_str(sy.name(l.atom));
    out.push('"');
}

fn push_elementary_json(out: &mut String, e: &Elementary, sy: &Symbols) {
    match e {
        Elementary::Top => out.push_str("{\"top\":null}"),
        Elementary::Bot => out.push_str("{\"bot\":null}"),
        Elementary::Lit(l) => {
            if l.positive {
                out.push_str("{\"atom\":");
            } else {
                out.push_str("{\"lit\":");
            }
            push_literal_json(out, *l, sy);
            out.push('}');
        }
        Elementary::Default(l) => {
            out.push_str("{\"not\":");
            push_literal_json(out, *l, sy);
            out.push('}');
        }
    }
}

fn push_expr_json(out: &mut String, e: &NestedExpr, sy: &Symbols) {
    match e {
        NestedExpr::Elem(el) => push_elementary_json(out, el, sy),
        NestedExpr::Over(el) => {
            out.push_str("{\"over\":");
            push_elementary_json(out, el, sy);
            out.push('}');
        }
        NestedExpr::And(cs) | NestedExpr::Or(cs) => {
            let tag = if matches!(e, NestedExpr::And(_)) {
                "and"
            } else {
                "or"
            };
            let _ = write!(out, "{{\"{tag}\":[");
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                push_expr_json(out, c, sy);
            }
            out.push_str("]}");
        }
    }
}

pub fn expr_to_json(e: &NestedExpr, sy: &Symbols) -> String {
    let mut out = String::new();
    push_expr_json(&mut out, e, sy);
    out
}

pub fn program_to_json(p: &Program, sy: &Symbols) -> String {
    let mut out = String::from("{\"rules\":[");
    for (i, r) in p.rules.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str("{\"head\":");
        push_expr_json(&mut out, &r.head, sy);
        out.push_str(",\"body\":");
        push_expr_json(&mut out, &r.body, sy);
        out.push('}');
    }
    out.push_str("]}");
    out
}
