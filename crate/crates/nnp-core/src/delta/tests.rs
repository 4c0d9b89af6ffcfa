use super::*;
use crate::ast::Symbols;
use crate::classify;
use crate::testkit;
use crate::testutil::{body, head, interp};

use alloc::collections::BTreeSet;

/// `or(~a, and[or(and[~b, ~g], c), and[b, or(bot, ~not d)]])`: positive
/// occurrences {b, c, bot}, deltas ~a, or(~a, and[~b, ~g]),
/// or(~a, ~not d).
fn worked_head(sy: &mut Symbols) -> NestedExpr {
    head(
        "or(~a, and[or(and[~b, ~g], c), and[b, or(bot, ~not d)]])",
        sy,
    )
}

#[test]
fn positive_occurrence_enumeration() {
    let mut sy = Symbols::new();
    // Head with an embedded sub-expression and repeated literals: the
    // occurrence list is {m, c, bot, m, c, a} left to right.
    let h = head(
        "and[or(~b, m), or(~f, and[or(~m, and[c, or(~g, bot)]), or(m, ~e)]), or(~d, and[c, a])]",
        &mut sy,
    );
    let occs = positive_occurrences(&h);
    let m = HeadElem::Lit(crate::ast::Literal::pos(sy.lookup("m").unwrap()));
    let c = HeadElem::Lit(crate::ast::Literal::pos(sy.lookup("c").unwrap()));
    let a = HeadElem::Lit(crate::ast::Literal::pos(sy.lookup("a").unwrap()));
    let got: alloc::vec::Vec<HeadElem> = occs.iter().map(|(_, e)| *e).collect();
    assert_eq!(got, alloc::vec![m, c, HeadElem::Bot, m, c, a]);
    // Repeated literals have distinct handles.
    let handles: BTreeSet<_> = occs.iter().map(|(h, _)| h.clone()).collect();
    assert_eq!(handles.len(), 6);

    assert!(positive_occurrences(&head("~a", &mut sy)).is_empty());

    // Two occurrences of -y and one of -x.
    let h2 = head(
        "or(~not x, and[or(~not -y, -y), and[-y, or(-x, ~v)]])",
        &mut sy,
    );
    let got: alloc::vec::Vec<HeadElem> =
        positive_occurrences(&h2).iter().map(|(_, e)| *e).collect();
    let ny = HeadElem::Lit(crate::ast::Literal::neg(sy.lookup("y").unwrap()));
    let nx = HeadElem::Lit(crate::ast::Literal::neg(sy.lookup("x").unwrap()));
    assert_eq!(got, alloc::vec![ny, ny, nx]);
}

#[test]
fn worked_deltas() {
    let mut sy = Symbols::new();
    let h = worked_head(&mut sy);
    let occs = positive_occurrences(&h);
    assert_eq!(occs.len(), 3);
    // Occurrence order: c, b, bot? No: left-to-right leaves are c (in the
    // left disjunct of the inner conjunction), then b, then bot.
    let deltas: alloc::vec::Vec<NestedExpr> = occs
        .iter()
        .map(|(at, _)| delta_of(&h, at).unwrap())
        .collect();
    assert_eq!(deltas[0], head("or(~a, and[~b, ~g])", &mut sy)); // c
    assert_eq!(deltas[1], head("~a", &mut sy)); // b
    assert_eq!(deltas[2], head("or(~a, ~not d)", &mut sy)); // bot
}

#[test]
fn worked_decomposition() {
    let mut sy = Symbols::new();
    let h = worked_head(&mut sy);
    let d = h_delta(&h).unwrap();
    let b = HeadElem::Lit(crate::ast::Literal::pos(sy.lookup("b").unwrap()));
    let c = HeadElem::Lit(crate::ast::Literal::pos(sy.lookup("c").unwrap()));
    assert_eq!(d.pairs[0].h, c);
    assert_eq!(d.pairs[1].h, b);
    assert_eq!(d.pairs[2].h, HeadElem::Bot);
    // Materialized: and[or(c, ~a, and[~b, ~g]), or(b, ~a), or(bot, ~a, ~not d)].
    assert_eq!(
        d.to_head(),
        head(
            "and[or(c, ~a, and[~b, ~g]), or(b, ~a), or(bot, ~a, ~not d)]",
            &mut sy
        )
    );
}

#[test]
fn extended_decomposition() {
    let mut sy = Symbols::new();
    let h = head(
        "or(~not x, and[or(~not -y, -y), and[-y, or(-x, ~v)]])",
        &mut sy,
    );
    let occs = positive_occurrences(&h);
    let deltas: alloc::vec::Vec<NestedExpr> = occs
        .iter()
        .map(|(at, _)| delta_of(&h, at).unwrap())
        .collect();
    assert_eq!(deltas[0], head("or(~not x, ~not -y)", &mut sy)); // leftmost -y
    assert_eq!(deltas[1], head("~not x", &mut sy)); // rightmost -y
    assert_eq!(deltas[2], head("or(~not x, ~v)", &mut sy)); // -x
    assert_eq!(
        h_delta(&h).unwrap().to_head(),
        head(
            "and[or(-y, ~not x, ~not -y), or(-y, ~not x), or(-x, ~not x, ~v)]",
            &mut sy
        )
    );
}

#[test]
fn constraint_rule_deltas() {
    let mut sy = Symbols::new();
    let h = head("or(and[~b, ~d], and[c, a, or(~g, bot)])", &mut sy);
    let occs = positive_occurrences(&h);
    let deltas: alloc::vec::Vec<NestedExpr> = occs
        .iter()
        .map(|(at, _)| delta_of(&h, at).unwrap())
        .collect();
    let nd = head("and[~b, ~d]", &mut sy);
    assert_eq!(deltas[0], nd); // c
    assert_eq!(deltas[1], nd); // a
    assert_eq!(deltas[2], head("or(and[~b, ~d], ~g)", &mut sy)); // bot
}

#[test]
fn clause_delta_is_the_negative_part() {
    let mut sy = Symbols::new();
    // Positive-Horn clause h v D: the delta of h is D.
    let h = head("or(h, ~d1, ~d2)", &mut sy);
    let occs = positive_occurrences(&h);
    assert_eq!(occs.len(), 1);
    assert_eq!(
        delta_of(&h, &occs[0].0).unwrap(),
        head("or(~d1, ~d2)", &mut sy)
    );
    // And a positive-Horn CNF decomposes into itself.
    let cnf = head("and[or(h, ~d1, ~d2), or(bot, ~b), g]", &mut sy);
    assert_eq!(h_delta(&cnf).unwrap().to_head(), cnf);
}

#[test]
fn delta_errors() {
    let mut sy = Symbols::new();
    let not_ph = head("or(a, b)", &mut sy);
    let occs = positive_occurrences(&not_ph);
    assert_eq!(
        delta_of(&not_ph, &occs[0].0),
        Err(DeltaError::NotPositiveHorn)
    );
    assert_eq!(h_delta(&not_ph).unwrap_err(), DeltaError::NotPositiveHorn);

    let h = worked_head(&mut sy);
    // Handle pointing at an overlined leaf.
    let bad = OccurrenceHandle(alloc::vec![0]);
    assert_eq!(delta_of(&h, &bad), Err(DeltaError::BadHandle));
    let missing = OccurrenceHandle(alloc::vec![9, 9]);
    assert_eq!(delta_of(&h, &missing), Err(DeltaError::BadHandle));
}

#[test]
fn shift_examples() {
    let mut sy = Symbols::new();
    let f = head("and[~not -e, or(~-f, ~a)]", &mut sy);
    let f_b = body("or(not -e, and[-f, a])", &mut sy);
    assert_eq!(shift_to_body(&f), f_b);
    assert_eq!(shift_to_head(&f_b), f);
    assert_eq!(shift_to_head(&shift_to_body(&f)), f);
    // Constants dualize.
    assert_eq!(shift_to_body(&head("~bot", &mut sy)), crate::ast::TOP);
    assert_eq!(shift_to_body(&head("~top", &mut sy)), BOT);
    assert_eq!(shift_to_head(&crate::ast::TOP), head("~bot", &mut sy));
}

/// Shifting a shared body factor into a head: the coloring program's
/// factored body becomes the fully negative head expression.
#[test]
fn shift_of_the_factored_body() {
    let mut sy = Symbols::new();
    let psi = body("and[cxr, cyr, or(and[p, t], and[n, f])]", &mut sy);
    let psi_bar = head("or(~cxr, ~cyr, and[or(~p, ~t), or(~n, ~f)])", &mut sy);
    assert_eq!(shift_to_head(&psi), psi_bar);
    assert_eq!(shift_to_body(&psi_bar), psi);
}

#[test]
fn shift_round_trip_on_generated_negatives() {
    for seed in 0..300u64 {
        let mut sy = Symbols::new();
        let cfg = testkit::GenConfig {
            seed,
            class_target: testkit::ClassTarget::Negative,
            allow_classical_neg: true,
            ..Default::default()
        };
        let e = match testkit::gen(&cfg, &mut sy) {
            testkit::Generated::Expr(e) => e,
            _ => unreachable!(),
        };
        assert_eq!(shift_to_head(&shift_to_body(&e)), e, "seed {seed}");
    }
}

#[test]
fn deltas_of_positive_horn_heads_are_negative_or_bot() {
    for seed in 0..300u64 {
        let mut sy = Symbols::new();
        let cfg = testkit::GenConfig {
            seed,
            class_target: testkit::ClassTarget::PositiveHorn,
            allow_classical_neg: seed % 2 == 0,
            allow_bot: true,
            ..Default::default()
        };
        let h = match testkit::gen(&cfg, &mut sy) {
            testkit::Generated::Expr(e) => e,
            _ => unreachable!(),
        };
        for pair in h_delta(&h).unwrap().pairs {
            assert!(
                pair.delta == BOT || classify::is_negative(&pair.delta),
                "seed {seed}: delta {pair:?}"
            );
        }
    }
}

/// If an interpretation satisfies a not-free positive-Horn head and
/// falsifies the delta of an occurrence, the occurrence's literal is in
/// the interpretation.
#[test]
fn entailment_of_occurrences() {
    for seed in 0..300u64 {
        let mut sy = Symbols::new();
        let cfg = testkit::GenConfig {
            seed,
            atom_count: 5,
            allow_default: false,
            class_target: testkit::ClassTarget::PositiveHorn,
            ..Default::default()
        };
        let h = match testkit::gen(&cfg, &mut sy) {
            testkit::Generated::Expr(e) => e,
            _ => unreachable!(),
        };
        let mut universe = BTreeSet::new();
        h.collect_literals(&mut universe);
        for i in crate::semantics::consistent_interpretations(&universe) {
            if !testkit::oracle_satisfies_head(&i, &h) {
                continue;
            }
            for pair in h_delta(&h).unwrap().pairs {
                if crate::semantics::falsifies(&i, &pair.delta).unwrap() {
                    match pair.h {
                        HeadElem::Lit(l) => assert!(i.contains(l), "seed {seed}"),
                        HeadElem::Bot => {
                            panic!("seed {seed}: satisfied head fired a constraint")
                        }
                    }
                }
            }
        }
    }
}

/// The head and its decomposition are strongly equivalent: for every pair
/// of interpretations, `j` satisfies the reduct of the head by `i` exactly
/// when it satisfies the reduct of the decomposition by `i`.
#[test]
fn decomposition_is_strongly_equivalent() {
    for seed in 0..200u64 {
        let mut sy = Symbols::new();
        let cfg = testkit::GenConfig {
            seed,
            atom_count: 4,
            max_depth: 3,
            class_target: testkit::ClassTarget::PositiveHorn,
            allow_default: true,
            allow_classical_neg: seed % 2 == 0,
            ..Default::default()
        };
        let h = match testkit::gen(&cfg, &mut sy) {
            testkit::Generated::Expr(e) => e,
            _ => unreachable!(),
        };
        let h_d = h_delta(&h).unwrap().to_head();
        let mut universe = BTreeSet::new();
        h.collect_literals(&mut universe);
        if universe.len() > 5 {
            continue;
        }
        let interps = crate::semantics::consistent_interpretations(&universe);
        for i in &interps {
            let hi = testkit::oracle_reduct_expr(&h, i);
            let hdi = testkit::oracle_reduct_expr(&h_d, i);
            for j in &interps {
                assert_eq!(
                    testkit::oracle_satisfies_head(j, &hi),
                    testkit::oracle_satisfies_head(j, &hdi),
                    "seed {seed}, i={i:?}, j={j:?}"
                );
            }
        }
    }
}

/// Falsification of a shifted expression coincides with satisfaction of
/// the body image.
#[test]
fn shift_couples_satisfaction_and_falsification() {
    let mut sy = Symbols::new();
    for seed in 0..200u64 {
        let cfg = testkit::GenConfig {
            seed,
            atom_count: 4,
            class_target: testkit::ClassTarget::Negative,
            ..Default::default()
        };
        let f = match testkit::gen(&cfg, &mut sy) {
            testkit::Generated::Expr(e) => e,
            _ => unreachable!(),
        };
        let f_b = shift_to_body(&f);
        let mut universe = BTreeSet::new();
        f.collect_literals(&mut universe);
        for i in crate::semantics::consistent_interpretations(&universe) {
            assert_eq!(
                crate::semantics::satisfies(&i, &f_b).unwrap(),
                crate::semantics::falsifies_direct(&i, &f).unwrap(),
                "seed {seed}"
            );
        }
    }
    // The worked shifting case: {-f} satisfies the body image exactly as
    // it falsifies the head form.
    let f = head("and[~not -e, or(~-f, ~a)]", &mut sy);
    let i = interp("-f", &mut sy);
    assert!(crate::semantics::falsifies_direct(&i, &f).unwrap());
    assert!(crate::semantics::satisfies(&i, &shift_to_body(&f)).unwrap());
}
