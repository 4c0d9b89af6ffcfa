use super::*;
use crate::classify;
use crate::semantics::Engine;
use crate::testutil::{interp, program};

fn lit(sy: &mut Symbols, s: &str) -> Literal {
    let (positive, name) = match s.strip_prefix('-') {
        Some(rest) => (false, rest),
        None => (true, s),
    };
    Literal {
        atom: sy.intern(name),
        positive,
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<NestedExpr>();
    assert_send_sync::<Program>();
    assert_send_sync::<crate::semantics::Interpretation>();
    assert_send_sync::<crate::semantics::ReductProgram>();
    assert_send_sync::<crate::calculus::HornWork>();
    assert_send_sync::<Symbols>();
}

#[test]
fn generators_hit_their_classes() {
    for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        for target in [
            ClassTarget::Negative,
            ClassTarget::Horn,
            ClassTarget::PositiveHorn,
            ClassTarget::PositiveNonHorn,
            ClassTarget::NnpRule,
            ClassTarget::DnpRule,
            ClassTarget::NpRule,
            ClassTarget::NotFree,
        ] {
            let cfg = GenConfig {
                seed,
                class_target: target,
                allow_classical_neg: seed % 2 == 0,
                allow_bot: seed % 3 == 0,
                ..Default::default()
            };
            match gen(&cfg, &mut sy) {
                Generated::Expr(e) => {
                    let k = classify::expr_class(&e);
                    let ok = match target {
                        ClassTarget::Negative => k.negative,
                        ClassTarget::Horn => k.horn,
                        ClassTarget::PositiveHorn => k.positive_horn,
                        ClassTarget::PositiveNonHorn => k.positive_non_horn,
                        _ => unreachable!(),
                    };
                    assert!(ok, "seed {seed} target {target:?}: {e:?}");
                }
                Generated::Rule(r) => {
                    let k = classify::classify_rule(&r).unwrap();
                    match target {
                        ClassTarget::NnpRule => assert_eq!(k.kind, classify::HeadKind::Nnp),
                        ClassTarget::DnpRule => assert_eq!(k.kind, classify::HeadKind::Dnp),
                        ClassTarget::NpRule => {
                            assert_eq!(k.kind, classify::HeadKind::Nnp);
                            assert!(k.flat);
                        }
                        _ => unreachable!(),
                    }
                }
                Generated::Program(p) => {
                    assert_eq!(target, ClassTarget::NotFree);
                    for r in &p.rules {
                        let k = classify::classify_rule(r).unwrap();
                        assert_eq!(k.kind, classify::HeadKind::Nnp);
                        assert!(k.is_not_free, "seed {seed}");
                    }
                }
            }
        }
    }
}

#[test]
fn generation_is_deterministic() {
    for seed in [0u64, 1, 99, u64::MAX] {
        let cfg = GenConfig {
            seed,
            class_target: ClassTarget::NnpRule,
            ..Default::default()
        };
        let mut sy1 = Symbols::new();
        let mut sy2 = Symbols::new();
        assert_eq!(gen(&cfg, &mut sy1), gen(&cfg, &mut sy2));
    }
}

#[test]
fn brute_model_examples() {
    let mut sy = Symbols::new();
    let a = NestedExpr::lit(lit(&mut sy, "a"));
    let mut universe = BTreeSet::new();
    a.collect_literals(&mut universe);
    let models = brute_expr_models(&a, &universe, 14).unwrap();
    assert_eq!(models, alloc::vec![interp("a", &mut sy)]);

    assert!(brute_expr_models(&BOT, &universe, 14).unwrap().is_empty());

    // The flat rule: {e, m, b, c, g} is among its models.
    let p = program(
        "and[or(c, ~b, ~g), b, or(bot, ~not g)] <- or(a, not e, m).",
        &mut sy,
    );
    let models = brute_models(&p, &p.literals(), 14).unwrap();
    assert!(models.contains(&interp("e,m,b,c,g", &mut sy)));
}

#[test]
fn universe_bound_is_enforced() {
    let mut sy = Symbols::new();
    let universe: BTreeSet<Literal> = (0..15)
        .map(|k| lit(&mut sy, &alloc::format!("x{k}")))
        .collect();
    assert!(matches!(
        brute_expr_models(&TOP, &universe, 14),
        Err(OracleError::UniverseTooLarge { size: 15, max: 14 })
    ));
}

#[test]
fn unit_propagation_examples() {
    let mut sy = Symbols::new();
    let a = lit(&mut sy, "a");
    let b = lit(&mut sy, "b");
    let out = classical_unit_propagation(&[alloc::vec![a], alloc::vec![a.complement(), b]]);
    assert!(!out.conflict);
    assert_eq!(out.units, BTreeSet::from([a, b]));

    let out = classical_unit_propagation(&[alloc::vec![a], alloc::vec![a.complement()]]);
    assert!(out.conflict);

    let out = classical_unit_propagation(&[alloc::vec![]]);
    assert!(out.conflict);
}

/// On a not-free Horn program, unit propagation over the compiled clauses
/// agrees with the consequence-operator least model.
#[test]
fn unit_propagation_matches_the_least_model() {
    let mut sy = Symbols::new();
    let p = program(
        "b <- a.\n-c <- and[a, b].\ng <- and[a, d].\na.\nd.",
        &mut sy,
    );
    let lm = crate::semantics::least_model_of_program(&p, Engine::Fixpoint).unwrap();
    let w = crate::calculus::to_horn_expression(&p).unwrap();
    let clauses = flat_clauses(&w.to_expr()).unwrap();
    let prop = classical_unit_propagation(&clauses);
    assert!(!prop.conflict);
    let lm_set: BTreeSet<Literal> = lm.iter().collect();
    assert_eq!(prop.units, lm_set);
}

#[test]
fn reference_answer_sets() {
    let mut sy = Symbols::new();
    let p = program("a <- not b.", &mut sy);
    let np = crate::translate::nn_of(&p, crate::translate::DEFAULT_BUDGET).unwrap();
    let sets = gl_reference_answer_sets(&np, &p.literals(), 14).unwrap();
    assert_eq!(sets, alloc::vec![interp("a", &mut sy)]);

    let p = program("a <- not a.", &mut sy);
    let np = crate::translate::nn_of(&p, crate::translate::DEFAULT_BUDGET).unwrap();
    assert!(gl_reference_answer_sets(&np, &p.literals(), 14)
        .unwrap()
        .is_empty());

    // Not-free programs have their least model as unique answer set.
    let p = program("b <- a.\na.", &mut sy);
    let np = NormalProgram {
        rules: p.rules.clone(),
    };
    let sets = gl_reference_answer_sets(&np, &p.literals(), 14).unwrap();
    let lm = crate::semantics::least_model_of_program(&p, Engine::Fixpoint).unwrap();
    assert_eq!(sets, alloc::vec![lm]);
}

#[test]
fn oracle_reducts_resolve_defaults() {
    let mut sy = Symbols::new();
    let e = crate::testutil::body("and[not a, b]", &mut sy);
    let i = interp("a", &mut sy);
    assert_eq!(
        oracle_reduct_expr(&e, &i),
        NestedExpr::And(alloc::vec![BOT, crate::testutil::body("b", &mut sy)])
    );
    let h = crate::testutil::head("or(b, ~not a)", &mut sy);
    // Default fails under {a}: the overlined element can never fire.
    assert_eq!(
        oracle_reduct_expr(&h, &i),
        NestedExpr::Or(alloc::vec![
            crate::testutil::body("b", &mut sy),
            NestedExpr::Over(Elementary::Top),
        ])
    );
}

#[test]
fn oracle_answer_sets_match_the_engine_on_normal_programs() {
    let mut sy = Symbols::new();
    let p = program("a <- not b.\nb <- not a.", &mut sy);
    let sets = oracle_answer_sets(&p, &p.literals(), 12).unwrap();
    assert_eq!(crate::testutil::interp_strings(&sets, &sy), ["a", "b"]);
}

#[test]
fn chain_family_shape() {
    let mut sy = Symbols::new();
    let p = bench_chain(5, &mut sy);
    assert_eq!(p.rules.len(), 6);
    let leaves: usize = p
        .rules
        .iter()
        .map(|r| r.head.leaf_count() + r.body.leaf_count())
        .sum();
    // Each rung contributes two head leaves plus its top body leaf.
    assert_eq!(leaves, 17);
}
