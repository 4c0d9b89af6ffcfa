//! One-off deep differential stress run (not part of the test suite).
use nnp_core::ast::Symbols;
use nnp_core::semantics::{self, answer_sets, AnswerSetOptions, Engine, EquivOutcome};
use nnp_core::testkit::{self, GenConfig};
use nnp_core::translate;

fn main() {
    let mut checked = [0usize; 4];
    for seed in 0..4000u64 {
        // (1) answer sets vs classical reference, deeper programs
        {
            let mut sy = Symbols::new();
            let cfg = GenConfig {
                seed,
                atom_count: 5,
                rule_count: 4,
                max_depth: 3,
                max_width: 3,
                allow_classical_neg: seed % 3 == 0,
                allow_bot: seed % 4 == 0,
                ..Default::default()
            };
            let p = testkit::gen_nnp_program(&cfg, &mut sy);
            let nn = translate::nn_of(&p, 1_000_000).unwrap();
            let universe: std::collections::BTreeSet<_> = nn
                .as_program()
                .literals()
                .union(&p.literals())
                .copied()
                .collect();
            if universe.len() <= 12 {
                let engine = answer_sets(&p, &AnswerSetOptions::default()).unwrap();
                let reference = testkit::gl_reference_answer_sets(&nn, &universe, 12).unwrap();
                assert_eq!(engine, reference, "AS mismatch seed {seed}\n");
                let oracle = testkit::oracle_answer_sets(&p, &universe, 12).unwrap();
                assert_eq!(engine, oracle, "AS oracle mismatch seed {seed}");
                checked[0] += 1;
            }
        }
        // (2) ur vs fixpoint vs brute on deep not-free programs
        {
            let mut sy = Symbols::new();
            let cfg = GenConfig {
                seed,
                atom_count: 6,
                rule_count: 5,
                max_depth: 4,
                max_width: 3,
                allow_default: false,
                allow_classical_neg: seed % 5 == 0,
                allow_bot: seed % 6 == 0,
                ..Default::default()
            };
            let p = testkit::gen_nnp_program(&cfg, &mut sy);
            let ur = semantics::least_model_of_program(&p, Engine::Ur);
            let fp = semantics::least_model_of_program(&p, Engine::Fixpoint);
            match (&ur, &fp) {
                (Ok(a), Ok(b)) => assert_eq!(a, b, "LM mismatch seed {seed}"),
                (Err(_), Err(_)) => {}
                other => panic!("LM outcome mismatch seed {seed}: {other:?}"),
            }
            if let Ok(lm) = fp {
                let minimal = testkit::brute_minimal_models(&p, &p.literals(), 13).unwrap();
                assert_eq!(minimal.len(), 1, "seed {seed}");
                assert_eq!(minimal[0], lm, "seed {seed}");
            }
            checked[1] += 1;
        }
        // (3) strong equivalence of both translations, deeper
        if seed % 4 == 0 {
            let mut sy = Symbols::new();
            let cfg = GenConfig {
                seed,
                atom_count: 4,
                rule_count: 3,
                max_depth: 3,
                allow_classical_neg: seed % 3 == 0,
                ..Default::default()
            };
            let p = testkit::gen_nnp_program(&cfg, &mut sy);
            if p.literals().len() <= 6 {
                let nn = translate::nn_of(&p, 1_000_000).unwrap().into_program();
                let nn1 = translate::nn1_of(&p, 1_000_000).unwrap().into_program();
                assert_eq!(
                    semantics::strongly_equivalent(&p, &nn, 12).unwrap(),
                    EquivOutcome::Equivalent,
                    "nn seed {seed}"
                );
                assert_eq!(
                    semantics::strongly_equivalent(&p, &nn1, 12).unwrap(),
                    EquivOutcome::Equivalent,
                    "nn1 seed {seed}"
                );
                checked[2] += 1;
            }
        }
        // (4) reducts: satisfaction of the reduct at its own interpretation
        // coincides with program satisfaction
        {
            let mut sy = Symbols::new();
            let cfg = GenConfig {
                seed,
                atom_count: 4,
                rule_count: 3,
                max_depth: 3,
                allow_classical_neg: seed % 2 == 0,
                allow_bot: seed % 3 == 0,
                ..Default::default()
            };
            let p = testkit::gen_nnp_program(&cfg, &mut sy);
            let universe = p.literals();
            if universe.len() <= 8 {
                for i in semantics::consistent_interpretations(&universe)
                    .into_iter()
                    .step_by(3)
                {
                    let red = semantics::reduct(&p, &i).unwrap();
                    assert_eq!(
                        semantics::satisfies_program(&i, &p).unwrap(),
                        semantics::satisfies_reduct(&i, &red).unwrap(),
                        "reduct-sat mismatch seed {seed} at {i:?}"
                    );
                }
                checked[3] += 1;
            }
        }
    }
    println!("stress clean: {checked:?}");
}
