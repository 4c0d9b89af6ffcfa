//! Acceptance suite: one criterion per section, one pass/fail line each.
//!
//! 1. Worked-example regression corpus (exact discrete outputs, < 5 s).
//! 2. Oracle equivalence over 1000 random seeds per sub-suite.
//! 3. Coincidence with classical normal-program semantics, 1000 seeds.
//! 4. Scaling shape of least-model computation and answer-set search.
//! 5. Semantic property suites, 1000 seeds each, zero violations.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nnp_core::ast::{
    expr_to_text, parse_expr, parse_program, Elementary, Literal, NestedExpr, Position, Program,
    Symbols,
};
use nnp_core::calculus::{self, UrOutcome};
use nnp_core::classify;
use nnp_core::delta::{self, HeadElem};
use nnp_core::semantics::{
    self, answer_sets, consistent_interpretations, AnswerSetOptions, Engine, EquivOutcome,
    Interpretation,
};
use nnp_core::testkit::{self, ClassTarget, GenConfig, Generated};
use nnp_core::translate::{self, NormalProgram};

const BUDGET: usize = translate::DEFAULT_BUDGET;

fn program(src: &str, sy: &mut Symbols) -> Program {
    parse_program(src, sy).expect("fixture parses")
}

fn head(src: &str, sy: &mut Symbols) -> NestedExpr {
    parse_expr(src, Position::Head, sy).expect("fixture parses")
}

fn interp(src: &str, sy: &mut Symbols) -> Interpretation {
    let mut lits = BTreeSet::new();
    for tok in src.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (positive, name) = match tok.strip_prefix('-') {
            Some(rest) => (false, rest),
            None => (true, tok),
        };
        lits.insert(Literal {
            atom: sy.intern(name),
            positive,
        });
    }
    Interpretation::try_new(lits).expect("consistent")
}

/// Order-insensitive view of a classical program: head text plus sorted
/// body conjunct texts per rule, sorted.
fn normalized(p: &NormalProgram, sy: &Symbols) -> Vec<(String, Vec<String>)> {
    let mut out: Vec<(String, Vec<String>)> = p
        .rules
        .iter()
        .map(|r| {
            let head = expr_to_text(&r.head, sy);
            let mut conj: Vec<String> = match &r.body {
                NestedExpr::And(cs) => cs.iter().map(|c| expr_to_text(c, sy)).collect(),
                NestedExpr::Elem(Elementary::Top) => Vec::new(),
                other => vec![expr_to_text(other, sy)],
            };
            conj.sort();
            (head, conj)
        })
        .collect();
    out.sort();
    out
}

fn normalized_src(src: &str, sy: &mut Symbols) -> Vec<(String, Vec<String>)> {
    let p = program(src, sy);
    normalized(&NormalProgram { rules: p.rules }, sy)
}

fn check(violations: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        violations.push(what.to_string());
    }
}

// ---------------------------------------------------------------------
// Criterion 1: worked-example regression corpus.
// ---------------------------------------------------------------------

fn criterion_1() -> Result<String, String> {
    let started = Instant::now();
    let mut bad = Vec::new();

    // The compact rule: positive-Horn head, twelve classical rules.
    {
        let mut sy = Symbols::new();
        let p = program(
            "and[or(~b, -c), b, or(g, and[~d, ~not f])] <- or(a, not e, m).",
            &mut sy,
        );
        check(
            &mut bad,
            classify::is_positive_horn(&p.rules[0].head),
            "compact head PH",
        );
        let expected = normalized_src(
            "b <- a. b <- not e. b <- m.\n\
             -c <- and[a, b]. -c <- and[not e, b]. -c <- and[m, b].\n\
             g <- and[a, d]. g <- and[not e, d]. g <- and[m, d].\n\
             g <- and[a, not f]. g <- and[not e, not f]. g <- and[m, not f].",
            &mut sy,
        );
        let nn = translate::nn_of(&p, BUDGET).unwrap();
        check(&mut bad, nn.rules.len() == 12, "compact rule count 12");
        check(
            &mut bad,
            normalized(&nn, &sy) == expected,
            "compact rule set",
        );
    }

    // Class membership of the three graded heads.
    {
        let mut sy = Symbols::new();
        let h1 = head("or(and[~not b, ~d], and[c, a])", &mut sy);
        let h2 = head("or(and[~b, d], and[bot, ~a])", &mut sy);
        let h3 = head(
            "or(or(and[~not b, ~d], and[c, a]), or(~a, and[~not b, ~c]))",
            &mut sy,
        );
        check(
            &mut bad,
            classify::is_positive_horn(&h1),
            "h1 positive-Horn",
        );
        check(&mut bad, !classify::is_horn(&h2), "h2 not Horn");
        check(
            &mut bad,
            classify::is_horn(&h3) && !classify::is_positive_horn(&h3),
            "h3 Horn but not positive-Horn",
        );
    }

    // Deltas of the worked three-pair head and of the extended head.
    {
        let mut sy = Symbols::new();
        let h = head(
            "or(~a, and[or(and[~b, ~g], c), and[b, or(bot, ~not d)]])",
            &mut sy,
        );
        let pairs = delta::h_delta(&h).unwrap().pairs;
        let want_b = head("~a", &mut sy);
        let want_c = head("or(~a, and[~b, ~g])", &mut sy);
        let want_bot = head("or(~a, ~not d)", &mut sy);
        let by_elem = |want: &str| -> Vec<NestedExpr> {
            pairs
                .iter()
                .filter(|p| match p.h {
                    HeadElem::Lit(l) => l.positive && sy.name(l.atom) == want,
                    HeadElem::Bot => want == "bot",
                })
                .map(|p| p.delta.clone())
                .collect()
        };
        check(&mut bad, by_elem("b") == [want_b], "delta of b");
        check(&mut bad, by_elem("c") == [want_c], "delta of c");
        check(&mut bad, by_elem("bot") == [want_bot], "delta of bot");
        check(
            &mut bad,
            delta::h_delta(&h).unwrap().to_head()
                == head(
                    "and[or(c, ~a, and[~b, ~g]), or(b, ~a), or(bot, ~a, ~not d)]",
                    &mut sy,
                ),
            "materialized decomposition",
        );

        let h = head(
            "or(~not x, and[or(~not -y, -y), and[-y, or(-x, ~v)]])",
            &mut sy,
        );
        let occs = delta::positive_occurrences(&h);
        let deltas: Vec<NestedExpr> = occs
            .iter()
            .map(|(at, _)| delta::delta_of(&h, at).unwrap())
            .collect();
        check(
            &mut bad,
            deltas
                == [
                    head("or(~not x, ~not -y)", &mut sy),
                    head("~not x", &mut sy),
                    head("or(~not x, ~v)", &mut sy),
                ],
            "extended deltas",
        );
    }

    // Minimal-model sets of the flat rules.
    {
        let mut sy = Symbols::new();
        let r1 = "and[or(c, ~b, ~g), b, or(bot, ~not g)] <- or(a, not e, m).";
        let r2 = "and[or(-d, ~not c), d] <- or(a, not -e, -m).";
        let models = |src: &str, sy: &mut Symbols| {
            let p = program(src, sy);
            let ms = semantics::minimal_models(&p, &p.literals(), 14).unwrap();
            let mut out: Vec<BTreeSet<Literal>> = ms.iter().map(|m| m.iter().collect()).collect();
            out.sort();
            out
        };
        check(
            &mut bad,
            models(r1, &mut sy)
                == vec![
                    interp("b,c,g", &mut sy).iter().collect(),
                    interp("e", &mut sy).iter().collect(),
                ],
            "minimal models of the first flat rule",
        );
        check(
            &mut bad,
            models(r2, &mut sy)
                == vec![
                    interp("d,c", &mut sy).iter().collect(),
                    interp("-e", &mut sy).iter().collect(),
                ],
            "minimal models of the second flat rule",
        );
        let mut both = models(&format!("{r1}\n{r2}"), &mut sy);
        let mut want = vec![
            interp("b,c,d,g", &mut sy).iter().collect::<BTreeSet<_>>(),
            interp("e,d,c", &mut sy).iter().collect(),
            interp("-e,b,c,g", &mut sy).iter().collect(),
        ];
        both.sort();
        want.sort();
        check(&mut bad, both == want, "minimal models of the pair");
    }

    // Consequence-operator power sequences.
    {
        let mut sy = Symbols::new();
        let p = program(
            "and[f, g].\n\
             and[or(b, ~c), e, or(~a, h)] <- and[f, g].\n\
             and[a, or(~h, c)] <- and[f, e].",
            &mut sy,
        );
        let r = semantics::pair_form(&p).unwrap();
        let expected = [
            "f,g",
            "f,g,e",
            "f,g,e,a",
            "f,g,e,a,h",
            "f,g,e,a,h,c",
            "f,g,e,a,h,c,b",
        ];
        let mut i = Interpretation::empty();
        let mut ok = true;
        for want in expected {
            let out = semantics::nt_step(&r, &i).unwrap();
            let lits: BTreeSet<Literal> = out
                .into_iter()
                .map(|h| match h {
                    HeadElem::Lit(l) => l,
                    HeadElem::Bot => unreachable!(),
                })
                .collect();
            i = Interpretation::try_new(lits).unwrap();
            ok &= i == interp(want, &mut sy);
        }
        ok &= semantics::nt_step(&r, &i).unwrap().len() == i.len();
        check(&mut bad, ok, "flat power sequence");

        let p = program(
            "or(and[~m, ~d], and[c, a]) <- and[m, or(n, and[not g1, g2])].\nand[m, g2].",
            &mut sy,
        );
        let r = semantics::pair_form(&p).unwrap();
        let mut i = Interpretation::empty();
        let mut powers = Vec::new();
        for _ in 0..3 {
            let out = semantics::nt_step(&r, &i).unwrap();
            let lits: BTreeSet<Literal> = out
                .into_iter()
                .map(|h| match h {
                    HeadElem::Lit(l) => l,
                    HeadElem::Bot => unreachable!(),
                })
                .collect();
            i = Interpretation::try_new(lits).unwrap();
            powers.push(i.clone());
        }
        check(
            &mut bad,
            powers[0] == interp("m,g2", &mut sy)
                && powers[1] == interp("m,g2,c,a", &mut sy)
                && powers[2] == powers[1]
                && semantics::least_model_fixpoint(&r).unwrap() == powers[1],
            "nested power sequence and fixpoint",
        );
    }

    // Eight classical rules through both translation routes.
    {
        let mut sy = Symbols::new();
        let p = program(
            "or(and[~b, ~d], and[c, a]) <- and[m, or(n, and[not g1, g2])].",
            &mut sy,
        );
        let expected = normalized_src(
            "a <- and[d, m, not g1, g2]. a <- and[d, m, n].\n\
             c <- and[d, m, not g1, g2]. c <- and[d, m, n].\n\
             a <- and[b, m, not g1, g2]. a <- and[b, m, n].\n\
             c <- and[b, m, not g1, g2]. c <- and[b, m, n].",
            &mut sy,
        );
        let nn = translate::nn_of(&p, BUDGET).unwrap();
        let nn1 = translate::nn1_of(&p, BUDGET).unwrap();
        check(&mut bad, nn.rules.len() == 8, "worked rule count 8");
        check(
            &mut bad,
            normalized(&nn, &sy) == expected && normalized(&nn1, &sy) == expected,
            "worked rule set through both routes",
        );
    }

    // The staircase expands to 3 + 9 + 27 rules.
    {
        let mut sy = Symbols::new();
        let p = program(
            "or(and[~b1, ~b2, ~b3], and[a1, or(and[~c1, ~c2, ~c3], and[a2, or(and[~d1, ~d2, ~d3], a3)])]).",
            &mut sy,
        );
        check(
            &mut bad,
            translate::nn_of(&p, BUDGET).unwrap().rules.len() == 39
                && translate::nn1_of(&p, BUDGET).unwrap().rules.len() == 39
                && translate::succinctness_report(&p).np_rule_count == 39,
            "staircase count 39",
        );
    }

    // The running derivation and its inconsistent variant.
    {
        let mut sy = Symbols::new();
        let p = program(
            "and[or(c, ~a), or(~a, and[or(n, ~m), or(e, and[~a, ~e]), c]), a].",
            &mut sy,
        );
        let mut w = calculus::to_horn_expression(&p).unwrap();
        let leaves = w.trace.initial_leaves;
        let connectives = w.trace.initial_connectives;
        let lm_ok = match calculus::ur_least_model(&mut w) {
            UrOutcome::LeastModel(lits) => {
                lits == interp("c,e,a", &mut sy).iter().collect::<BTreeSet<_>>()
            }
            UrOutcome::Inconsistent => false,
        };
        check(&mut bad, lm_ok, "running least model {c,e,a}");
        check(
            &mut bad,
            w.trace.nur_steps() <= leaves && w.trace.simplification_steps() <= connectives,
            "running trace within the step bounds",
        );

        let p = program(
            "and[or(c, ~a), or(~a, and[or(n, ~m), or(e, and[~a, ~e]), -c]), a].",
            &mut sy,
        );
        let mut w = calculus::to_horn_expression(&p).unwrap();
        check(
            &mut bad,
            calculus::ur_least_model(&mut w) == UrOutcome::Inconsistent,
            "flipped variant inconsistent",
        );
        check(
            &mut bad,
            w.trace.nur_steps() <= w.trace.initial_leaves,
            "variant trace within the step bounds",
        );
    }

    let elapsed = started.elapsed();
    check(
        &mut bad,
        elapsed < Duration::from_secs(5),
        "corpus under 5 s",
    );
    if bad.is_empty() {
        Ok(format!(
            "worked-example corpus exact, {} ms",
            elapsed.as_millis()
        ))
    } else {
        Err(bad.join("; "))
    }
}

// ---------------------------------------------------------------------
// Criterion 2: oracle equivalence, 1000 seeds per sub-suite.
// ---------------------------------------------------------------------

fn criterion_2() -> Result<String, String> {
    let mut bad = Vec::new();

    // (a) Answer sets match the independent classical check on the
    // translated program.
    for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 3,
            max_depth: 2,
            allow_classical_neg: seed % 3 == 0,
            allow_bot: seed % 5 == 0,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        let nn = translate::nn_of(&p, BUDGET).unwrap();
        let universe = nn
            .as_program()
            .literals()
            .union(&p.literals())
            .copied()
            .collect();
        let engine = answer_sets(&p, &AnswerSetOptions::default()).unwrap();
        let reference = testkit::gl_reference_answer_sets(&nn, &universe, 12).unwrap();
        if engine != reference {
            bad.push(format!("2a seed {seed}"));
            break;
        }
    }

    // (b) Unit resolution, the fixpoint and the brute-force least model
    // agree on not-free head-consistent programs.
    for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 5,
            rule_count: 3,
            max_depth: 2,
            allow_default: false,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        let by_ur = semantics::least_model_of_program(&p, Engine::Ur).unwrap();
        let by_fix = semantics::least_model_of_program(&p, Engine::Fixpoint).unwrap();
        let minimal = testkit::brute_minimal_models(&p, &p.literals(), 12).unwrap();
        if by_ur != by_fix || minimal.len() != 1 || minimal[0] != by_ur {
            bad.push(format!("2b seed {seed}"));
            break;
        }
    }

    // (c) Every calculus step preserves the model set.
    'c: for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 2,
            max_depth: 2,
            allow_default: false,
            allow_bot: seed % 4 == 0,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        let mut w = calculus::to_horn_expression(&p).unwrap();
        let mut universe = BTreeSet::new();
        w.to_expr().collect_literals(&mut universe);
        if universe.len() > 6 {
            continue;
        }
        let mut before = testkit::brute_expr_models(&w.to_expr(), &universe, 12).unwrap();
        loop {
            let stepped = if calculus::simplify_step(&mut w).is_some() {
                true
            } else {
                let mut fired = false;
                for u in w.units() {
                    if let Some(occ) = w.occurrences_of(u.complement()).into_iter().next() {
                        calculus::apply_nur(&mut w, u, occ).unwrap();
                        fired = true;
                        break;
                    }
                }
                fired
            };
            if !stepped {
                break;
            }
            let after = testkit::brute_expr_models(&w.to_expr(), &universe, 12).unwrap();
            if before != after {
                bad.push(format!("2c seed {seed}"));
                break 'c;
            }
            before = after;
        }
    }

    // (d) Programs are strongly equivalent to both translations.
    for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 2,
            max_depth: 2,
            allow_classical_neg: seed % 3 == 0,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        if p.literals().len() > 6 {
            continue;
        }
        let nn = translate::nn_of(&p, BUDGET).unwrap().into_program();
        let nn1 = translate::nn1_of(&p, BUDGET).unwrap().into_program();
        let d1 = semantics::strongly_equivalent(&p, &nn, 12).unwrap();
        let d2 = semantics::strongly_equivalent(&nn, &nn1, 12).unwrap();
        if d1 != EquivOutcome::Equivalent || d2 != EquivOutcome::Equivalent {
            bad.push(format!("2d seed {seed}"));
            break;
        }
    }

    // (e) A head and its decomposition are strongly equivalent under the
    // reduct criterion.
    'e: for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            max_depth: 3,
            class_target: ClassTarget::PositiveHorn,
            allow_classical_neg: seed % 3 == 0,
            ..Default::default()
        };
        let h = match testkit::gen(&cfg, &mut sy) {
            Generated::Expr(e) => e,
            _ => unreachable!(),
        };
        let h_d = delta::h_delta(&h).unwrap().to_head();
        let mut universe = BTreeSet::new();
        h.collect_literals(&mut universe);
        if universe.len() > 5 {
            continue;
        }
        let interps = consistent_interpretations(&universe);
        for i in &interps {
            let hi = testkit::oracle_reduct_expr(&h, i);
            let hdi = testkit::oracle_reduct_expr(&h_d, i);
            for j in &interps {
                if testkit::oracle_satisfies_head(j, &hi) != testkit::oracle_satisfies_head(j, &hdi)
                {
                    bad.push(format!("2e seed {seed}"));
                    break 'e;
                }
            }
        }
    }

    if bad.is_empty() {
        Ok("5 oracle suites x 1000 seeds, zero counterexamples".to_string())
    } else {
        Err(bad.join("; "))
    }
}

// ---------------------------------------------------------------------
// Criterion 3: restriction to classical normal programs.
// ---------------------------------------------------------------------

fn criterion_3() -> Result<String, String> {
    let mut bad = Vec::new();

    // The nested consequence operator agrees with the textbook one,
    // pointwise, on classical programs.
    'tp: for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 4,
            class_target: ClassTarget::NpRule,
            ..Default::default()
        };
        let p = testkit::gen_np_program(&cfg, &mut sy);
        let np = NormalProgram {
            rules: p.rules.clone(),
        };
        let pair = semantics::pair_form(&p).unwrap();
        for i in consistent_interpretations(&p.literals()) {
            let nested: BTreeSet<Literal> = semantics::nt_step(&pair, &i)
                .unwrap()
                .into_iter()
                .map(|h| match h {
                    HeadElem::Lit(l) => l,
                    HeadElem::Bot => unreachable!("constraint-free"),
                })
                .collect();
            let classical = testkit::textbook_tp(&np, &i);
            if nested != classical {
                bad.push(format!("3-tp seed {seed}"));
                break 'tp;
            }
        }
    }

    // Saturation on the clausal compilation agrees with textbook unit
    // propagation, including conflict detection.
    for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 5,
            allow_default: false,
            allow_bot: seed % 2 == 0,
            class_target: ClassTarget::NpRule,
            ..Default::default()
        };
        let p = testkit::gen_np_program(&cfg, &mut sy);
        let mut w = calculus::to_horn_expression(&p).unwrap();
        let clauses = testkit::flat_clauses(&w.to_expr()).unwrap();
        let prop = testkit::classical_unit_propagation(&clauses);
        let agree = match calculus::ur_least_model(&mut w) {
            UrOutcome::Inconsistent => prop.conflict,
            UrOutcome::LeastModel(lits) => !prop.conflict && lits == prop.units,
        };
        if !agree {
            bad.push(format!("3-up seed {seed}"));
            break;
        }
    }

    if bad.is_empty() {
        Ok("2 restriction suites x 1000 seeds, zero mismatches".to_string())
    } else {
        Err(bad.join("; "))
    }
}

// ---------------------------------------------------------------------
// Criterion 4: scaling shape.
// ---------------------------------------------------------------------

fn time_chain_lm(rungs: usize) -> (Duration, usize, usize) {
    let mut best: Option<Duration> = None;
    let mut nur = 0;
    let mut leaves = 0;
    for _ in 0..3 {
        let mut sy = Symbols::new();
        let p = testkit::bench_chain(rungs, &mut sy);
        let started = Instant::now();
        let mut w = calculus::to_horn_expression(&p).unwrap();
        let out = calculus::ur_least_model(&mut w);
        let took = started.elapsed();
        assert!(matches!(out, UrOutcome::LeastModel(ref lits) if lits.len() == rungs + 1));
        nur = w.trace.nur_steps();
        leaves = w.trace.initial_leaves;
        best = Some(best.map_or(took, |b| b.min(took)));
    }
    (best.unwrap(), nur, leaves)
}

fn criterion_4() -> Result<String, String> {
    let mut bad = Vec::new();

    // Least-model scaling at 1k..16k leaves: step counts stay within the
    // leaf bound and wall time fits a polynomial of degree <= 2
    // (log-log slope <= 2.2).
    let mut points = Vec::new();
    for rungs in [500usize, 1000, 2000, 4000, 8000] {
        let (took, nur, leaves) = time_chain_lm(rungs);
        check(
            &mut bad,
            nur <= leaves,
            &format!("nur steps within leaves at {leaves}"),
        );
        points.push((leaves as f64, took.as_secs_f64().max(1e-7)));
    }
    let n = points.len() as f64;
    let (sx, sy_, sxy, sxx) = points.iter().fold((0.0, 0.0, 0.0, 0.0), |acc, (x, y)| {
        let (lx, ly) = (x.ln(), y.ln());
        (acc.0 + lx, acc.1 + ly, acc.2 + lx * ly, acc.3 + lx * lx)
    });
    let slope = (n * sxy - sx * sy_) / (n * sxx - sx * sx);
    check(
        &mut bad,
        slope <= 2.2,
        &format!("log-log slope {slope:.2} <= 2.2"),
    );

    // A ten-thousand-node least model completes within a second.
    let (took, _, _) = time_chain_lm(3400); // about 10^4 tree nodes
    check(
        &mut bad,
        took < Duration::from_secs(1),
        "10^4-node least model under 1 s",
    );

    // Answer-set enumeration over 16 relevant literals within 30 s.
    let started = Instant::now();
    let mut sy = Symbols::new();
    let mut src = String::new();
    for k in 0..16 {
        src.push_str(&format!("x{k} <- not x{}.\n", (k + 1) % 16));
    }
    let p = program(&src, &mut sy);
    let sets = answer_sets(&p, &AnswerSetOptions::default()).unwrap();
    let took16 = started.elapsed();
    check(&mut bad, sets.len() == 2, "even loop has two answer sets");
    check(
        &mut bad,
        took16 < Duration::from_secs(30),
        "16-literal search under 30 s",
    );

    if bad.is_empty() {
        Ok(format!(
            "slope {slope:.2}, 16-literal search {} ms",
            took16.as_millis()
        ))
    } else {
        Err(bad.join("; "))
    }
}

// ---------------------------------------------------------------------
// Criterion 5: semantic property suites.
// ---------------------------------------------------------------------

fn criterion_5() -> Result<String, String> {
    let mut bad = Vec::new();

    // Models are closed; answer sets are minimal models and closed.
    'props: for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 2,
            max_depth: 2,
            allow_classical_neg: seed % 4 == 0,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        let universe = p.literals();
        if universe.len() > 6 {
            continue;
        }
        let minimal = semantics::minimal_models(&p, &universe, 12).unwrap();
        for i in consistent_interpretations(&universe) {
            if semantics::satisfies_program(&i, &p).unwrap()
                && !semantics::is_closed(&i, &p).unwrap()
            {
                bad.push(format!("5 model-closed seed {seed}"));
                break 'props;
            }
        }
        for a in answer_sets(&p, &AnswerSetOptions::default()).unwrap() {
            if !minimal.contains(&a) || !semantics::is_closed(&a, &p).unwrap() {
                bad.push(format!("5 answer-minimal-closed seed {seed}"));
                break 'props;
            }
        }
    }

    // Minimal models of not-free programs are supported (the claim needs
    // monotone bodies; with defaults the classical one-rule program
    // `a <- not a.` already breaks it).
    'supp: for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 2,
            max_depth: 2,
            allow_default: false,
            allow_classical_neg: seed % 4 == 0,
            allow_bot: seed % 5 == 0,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        let universe = p.literals();
        if universe.len() > 6 {
            continue;
        }
        for m in &semantics::minimal_models(&p, &universe, 12).unwrap() {
            if !semantics::is_supported(m, &p).unwrap() {
                bad.push(format!("5 minimal-supported seed {seed}"));
                break 'supp;
            }
        }
    }

    // Monotonicity of the consequence operator, and the fixpoint bound.
    'mono: for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 3,
            max_depth: 2,
            allow_default: false,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        let r = semantics::pair_form(&p).unwrap();
        let interps = consistent_interpretations(&p.literals());
        for (k, i) in interps.iter().enumerate().step_by(3) {
            for j in interps.iter().skip(k).step_by(3) {
                if i.is_subset(j) {
                    let si = semantics::nt_step(&r, i).unwrap();
                    let sj = semantics::nt_step(&r, j).unwrap();
                    if !si.is_subset(&sj) {
                        bad.push(format!("5 monotone seed {seed}"));
                        break 'mono;
                    }
                }
            }
        }
        // Fixpoint within the positive-occurrence bound.
        let pair_count: usize = r.rules.iter().map(|r| r.pairs.len()).sum();
        let mut i = Interpretation::empty();
        let mut iters = 0;
        loop {
            let out = semantics::nt_step(&r, &i).unwrap();
            let lits: BTreeSet<Literal> = out
                .into_iter()
                .map(|h| match h {
                    HeadElem::Lit(l) => l,
                    HeadElem::Bot => unreachable!(),
                })
                .collect();
            let next = Interpretation::try_new(lits).unwrap();
            if next == i {
                break;
            }
            i = next;
            iters += 1;
        }
        if iters > pair_count {
            bad.push(format!("5 fixpoint bound seed {seed}"));
            break;
        }
    }

    // Reducts are not-free and idempotent; head-consistency is preserved
    // in both directions by the translation.
    for seed in 0..1000u64 {
        let mut sy = Symbols::new();
        let cfg = GenConfig {
            seed,
            atom_count: 4,
            rule_count: 2,
            max_depth: 2,
            allow_classical_neg: true,
            allow_bot: seed % 3 == 0,
            ..Default::default()
        };
        let p = testkit::gen_nnp_program(&cfg, &mut sy);
        let universe = p.literals();
        let mut ok = true;
        for i in consistent_interpretations(&universe).into_iter().take(4) {
            let once = semantics::reduct(&p, &i).unwrap();
            ok &= once
                .rules
                .iter()
                .all(|r| r.body.is_not_free() && r.pairs.iter().all(|(_, d)| d.is_not_free()));
            ok &= semantics::reduct(&once.to_program(), &i).unwrap() == once;
        }
        let nn = translate::nn_of(&p, BUDGET).unwrap();
        ok &= classify::is_head_consistent(&p) == classify::is_head_consistent(&nn.as_program());
        if !ok {
            bad.push(format!("5 reduct/translation seed {seed}"));
            break;
        }
    }

    if bad.is_empty() {
        Ok("semantic property suites x 1000 seeds, zero violations".to_string())
    } else {
        Err(bad.join("; "))
    }
}

type Criterion = fn() -> Result<String, String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 5] = [
        ("worked-example corpus", criterion_1),
        ("oracle equivalence", criterion_2),
        ("classical restriction", criterion_3),
        ("complexity shape", criterion_4),
        ("semantic properties", criterion_5),
    ];
    let mut failed = false;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("ACCEPTANCE {} ({name}): PASS — {detail}", k + 1),
            Err(detail) => {
                failed = true;
                println!("ACCEPTANCE {} ({name}): FAIL — {detail}", k + 1);
            }
        }
    }
    assert!(!failed, "acceptance criteria failed");
}
