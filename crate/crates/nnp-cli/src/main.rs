//! Batch command-line front end over the nested-program engine.
//!
//! Exit codes: 0 success, 1 logical "no" (inconsistent program, empty
//! answer-set list, inequivalent programs), 2 usage or parse error,
//! 3 budget or universe bound exceeded.

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nnp_core::ast::{
    expr_to_json, expr_to_text, parse_program, program_to_json, program_to_text, rule_to_text,
    Literal, NestedExpr, Program, Rule, Symbols,
};
use nnp_core::calculus;
use nnp_core::classify;
use nnp_core::delta::{self, HeadElem};
use nnp_core::semantics::{self, AnswerSetOptions, Engine, EquivOutcome, Interpretation};
use nnp_core::testkit::{self, ClassTarget, GenConfig};
use nnp_core::translate;

#[derive(Parser)]
#[command(name = "nnp", about = "Nested answer-set programming engine", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Ur,
    Fixpoint,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Ur => Engine::Ur,
            EngineArg::Fixpoint => Engine::Fixpoint,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TranslateTarget {
    /// Classical normal program.
    Np,
    /// Flat form: CNF head, DNF body.
    CnfHead,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TranslateRoute {
    Nn,
    Nn1,
}

#[derive(Subcommand)]
enum Command {
    /// Classify each rule and report program head-consistency.
    Classify { file: String },
    /// Print the head decomposition of each rule.
    Delta { file: String },
    /// Least model of a not-free program.
    Lm {
        file: String,
        #[arg(long, value_enum, default_value = "ur")]
        engine: EngineArg,
    },
    /// Answer sets of a program.
    #[command(name = "as")]
    As {
        file: String,
        /// Print every answer set (default: the first found).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 20)]
        max_universe: usize,
        #[arg(long, value_enum, default_value = "ur")]
        engine: EngineArg,
    },
    /// Reduct of the program by an interpretation.
    Reduct {
        file: String,
        /// Comma-separated literals, `-a` for classical negation; empty
        /// string is the empty interpretation.
        #[arg(long, allow_hyphen_values = true)]
        interp: String,
    },
    /// Translate to a classical normal program or to the flat form.
    Translate {
        file: String,
        #[arg(long, value_enum)]
        to: TranslateTarget,
        #[arg(long, value_enum, default_value = "nn")]
        route: TranslateRoute,
        #[arg(long, default_value_t = translate::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Split non-Horn disjunctions into normal programs.
    Split { file: String },
    /// Check two programs for strong equivalence.
    Equiv {
        a: String,
        b: String,
        #[arg(long, default_value_t = 20)]
        max_atoms: usize,
    },
    /// Derivation trace of the least-model computation.
    Trace { file: String },
    /// Generate a random member of an expression or rule class.
    Gen {
        #[arg(long, value_name = "CLASS")]
        class: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        atoms: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        width: usize,
        #[arg(long, default_value_t = 3)]
        rules: usize,
    },
}

enum Failure {
    /// Malformed input or arguments (exit 2).
    Usage(String),
    /// Budget or universe bound exceeded (exit 3).
    Budget(String),
}

type Outcome = Result<(String, bool), Failure>;

fn load(path: &str, sy: &mut Symbols) -> Result<Program, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    parse_program(&text, sy).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn parse_interp(src: &str, sy: &mut Symbols) -> Result<Interpretation, Failure> {
    let mut lits = BTreeSet::new();
    for tok in src.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (positive, name) = match tok.strip_prefix('-') {
            Some(rest) => (false, rest),
            None => (true, tok),
        };
        let valid = !name.is_empty()
            && name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Failure::Usage(format!(
                "bad literal `{tok}` in interpretation"
            )));
        }
        lits.insert(Literal {
            atom: sy.intern(name),
            positive,
        });
    }
    Interpretation::try_new(lits)
        .map_err(|_| Failure::Usage("interpretation holds a complementary pair".into()))
}

fn literal_text(l: Literal, sy: &Symbols) -> String {
    let mut s = String::new();
    if !l.positive {
        s.push('-');
    }
    s.push_str(sy.name(l.atom));
    s
}

fn interp_text(i: &Interpretation, sy: &Symbols) -> String {
    let parts: Vec<String> = i.iter().map(|l| literal_text(l, sy)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn interp_json(i: &Interpretation, sy: &Symbols) -> Value {
    Value::Array(
        i.iter()
            .map(|l| Value::String(literal_text(l, sy)))
            .collect(),
    )
}

fn expr_json_value(e: &NestedExpr, sy: &Symbols) -> Value {
    serde_json::from_str(&expr_to_json(e, sy)).expect("emitted JSON is valid")
}

fn program_json_value(p: &Program, sy: &Symbols) -> Value {
    serde_json::from_str(&program_to_json(p, sy)).expect("emitted JSON is valid")
}

fn semantics_failure(e: semantics::SemanticsError) -> Failure {
    match e {
        semantics::SemanticsError::UniverseTooLarge { .. } => Failure::Budget(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn translate_failure(e: translate::TranslateError) -> Failure {
    match e {
        translate::TranslateError::SizeBudgetExceeded { .. } => Failure::Budget(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn head_kind_text(k: classify::HeadKind) -> &'static str {
    match k {
        classify::HeadKind::Nnp => "NNP",
        classify::HeadKind::Dnp => "DNP",
        classify::HeadKind::OtherHead => "other-head",
    }
}

fn run_classify(file: &str, as_json: bool) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    let mut kinds = Vec::new();
    for (k, r) in p.rules.iter().enumerate() {
        let c = classify::classify_rule(r)
            .map_err(|e| Failure::Usage(format!("rule {}: {e}", k + 1)))?;
        kinds.push(c);
    }
    let consistent = classify::is_head_consistent(&p);
    if as_json {
        let rules: Vec<Value> = kinds
            .iter()
            .map(|c| {
                json!({
                    "kind": head_kind_text(c.kind),
                    "extended": c.extended,
                    "flat": c.flat,
                    "is_fact": c.is_fact,
                    "contains_fact": c.contains_fact,
                    "is_constraint": c.is_constraint,
                    "contains_constraint": c.contains_constraint,
                    "is_not_free": c.is_not_free,
                    "partially_not_free": c.partially_not_free,
                })
            })
            .collect();
        let v = json!({ "rules": rules, "head_consistent": consistent });
        return Ok((v.to_string(), true));
    }
    let mut out = String::new();
    for (k, c) in kinds.iter().enumerate() {
        let mut flags = vec![head_kind_text(c.kind).to_string()];
        if c.extended {
            flags.push("extended".into());
        }
        if c.flat {
            flags.push("flat".into());
        }
        if c.is_fact {
            flags.push("fact".into());
        } else if c.contains_fact {
            flags.push("contains-fact".into());
        }
        if c.is_constraint {
            flags.push("constraint".into());
        } else if c.contains_constraint {
            flags.push("contains-constraint".into());
        }
        if c.is_not_free {
            flags.push("not-free".into());
        } else if c.partially_not_free {
            flags.push("partially-not-free".into());
        }
        out.push_str(&format!("rule {}: {}\n", k + 1, flags.join(", ")));
    }
    out.push_str(&format!(
        "head-consistent: {}\n",
        if consistent { "yes" } else { "no" }
    ));
    Ok((out, true))
}

fn run_delta(file: &str, as_json: bool) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    let mut rules_json = Vec::new();
    let mut out = String::new();
    for (k, r) in p.rules.iter().enumerate() {
        let d =
            delta::h_delta(&r.head).map_err(|e| Failure::Usage(format!("rule {}: {e}", k + 1)))?;
        if as_json {
            let pairs: Vec<Value> = d
                .pairs
                .iter()
                .map(|pr| {
                    let h = match pr.h {
                        HeadElem::Lit(l) => literal_text(l, &sy),
                        HeadElem::Bot => "bot".into(),
                    };
                    json!({
                        "h": h,
                        "delta": expr_json_value(&pr.delta, &sy),
                        "path": pr.occurrence.0,
                    })
                })
                .collect();
            rules_json.push(json!({ "pairs": pairs }));
        } else {
            out.push_str(&format!("rule {}:\n", k + 1));
            for pr in &d.pairs {
                let h = match pr.h {
                    HeadElem::Lit(l) => literal_text(l, &sy),
                    HeadElem::Bot => "bot".into(),
                };
                out.push_str(&format!(
                    "  {} | delta: {}\n",
                    h,
                    expr_to_text(&pr.delta, &sy)
                ));
            }
        }
    }
    if as_json {
        return Ok((json!({ "rules": rules_json }).to_string(), true));
    }
    Ok((out, true))
}

fn run_lm(file: &str, engine: Engine, as_json: bool) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    match semantics::least_model_of_program(&p, engine) {
        Ok(lm) => {
            let out = if as_json {
                json!({ "least_model": interp_json(&lm, &sy) }).to_string()
            } else {
                interp_text(&lm, &sy)
            };
            Ok((out, true))
        }
        Err(
            semantics::SemanticsError::InconsistentResult
            | semantics::SemanticsError::ConstraintFired,
        ) => {
            let out = if as_json {
                json!({ "inconsistent": true }).to_string()
            } else {
                "inconsistent".to_string()
            };
            Ok((out, false))
        }
        Err(e) => Err(semantics_failure(e)),
    }
}

fn run_answer_sets(
    file: &str,
    all: bool,
    max_universe: usize,
    engine: Engine,
    as_json: bool,
) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    let opts = AnswerSetOptions {
        max_universe,
        engine,
    };
    let sets = semantics::answer_sets(&p, &opts).map_err(semantics_failure)?;
    let shown: Vec<&Interpretation> = if all {
        sets.iter().collect()
    } else {
        sets.iter().take(1).collect()
    };
    if as_json {
        let v = json!({
            "answer_sets": shown.iter().map(|s| interp_json(s, &sy)).collect::<Vec<_>>(),
            "total": sets.len(),
        });
        return Ok((v.to_string(), !sets.is_empty()));
    }
    if sets.is_empty() {
        return Ok(("no answer sets".to_string(), false));
    }
    let mut out = String::new();
    for s in shown {
        out.push_str(&interp_text(s, &sy));
        out.push('\n');
    }
    if !all && sets.len() > 1 {
        out.push_str(&format!(
            "({} answer sets; use --all to list them)\n",
            sets.len()
        ));
    }
    Ok((out, true))
}

fn run_reduct(file: &str, interp_src: &str, as_json: bool) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    let i = parse_interp(interp_src, &mut sy)?;
    let red = semantics::reduct(&p, &i).map_err(semantics_failure)?;
    let program = red.to_program();
    let out = if as_json {
        program_json_value(&program, &sy).to_string()
    } else {
        program_to_text(&program, &sy)
    };
    Ok((out, true))
}

fn run_translate(
    file: &str,
    to: TranslateTarget,
    route: TranslateRoute,
    budget: usize,
    as_json: bool,
) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    let out_program = match to {
        TranslateTarget::Np => {
            let np = match route {
                TranslateRoute::Nn => translate::nn_of(&p, budget),
                TranslateRoute::Nn1 => translate::nn1_of(&p, budget),
            }
            .map_err(translate_failure)?;
            np.into_program()
        }
        TranslateTarget::CnfHead => {
            let mut rules = Vec::new();
            for r in &p.rules {
                let head = translate::cnf(&r.head, budget).map_err(translate_failure)?;
                let body = translate::dnf(&r.body, budget).map_err(translate_failure)?;
                rules.push(Rule::new(head, body));
            }
            Program::new(rules)
        }
    };
    let out = if as_json {
        program_json_value(&out_program, &sy).to_string()
    } else {
        program_to_text(&out_program, &sy)
    };
    Ok((out, true))
}

fn run_split(file: &str, as_json: bool) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    let parts = translate::split_dnp(&p).map_err(translate_failure)?;
    if as_json {
        let v: Vec<Value> = parts.iter().map(|q| program_json_value(q, &sy)).collect();
        return Ok((json!({ "programs": v }).to_string(), true));
    }
    let mut out = String::new();
    for (k, q) in parts.iter().enumerate() {
        out.push_str(&format!("# program {}\n", k + 1));
        out.push_str(&program_to_text(q, &sy));
    }
    Ok((out, true))
}

fn run_equiv(a: &str, b: &str, max_atoms: usize, as_json: bool) -> Outcome {
    let mut sy = Symbols::new();
    let pa = load(a, &mut sy)?;
    let pb = load(b, &mut sy)?;
    match semantics::strongly_equivalent(&pa, &pb, max_atoms).map_err(semantics_failure)? {
        EquivOutcome::Equivalent => {
            let out = if as_json {
                json!({ "equivalent": true }).to_string()
            } else {
                "strongly equivalent".to_string()
            };
            Ok((out, true))
        }
        EquivOutcome::Inequivalent { i, j } => {
            let out = if as_json {
                json!({
                    "equivalent": false,
                    "witness": { "i": interp_json(&i, &sy), "j": interp_json(&j, &sy) },
                })
                .to_string()
            } else {
                format!(
                    "not strongly equivalent; witness i = {}, j = {}",
                    interp_text(&i, &sy),
                    interp_text(&j, &sy)
                )
            };
            Ok((out, false))
        }
    }
}

fn run_trace(file: &str, as_json: bool) -> Outcome {
    let mut sy = Symbols::new();
    let p = load(file, &mut sy)?;
    let mut w = calculus::to_horn_expression(&p).map_err(|e| Failure::Usage(e.to_string()))?;
    let outcome = calculus::ur_least_model(&mut w);
    let consistent = matches!(outcome, calculus::UrOutcome::LeastModel(_));
    if as_json {
        let steps: Vec<Value> = w
            .trace
            .steps
            .iter()
            .map(|s| {
                json!({
                    "rule": s.rule.to_string(),
                    "literal": s.literal.map(|l| literal_text(l, &sy)),
                    "path": s.path.0,
                    "size_after": s.size_after,
                })
            })
            .collect();
        let result = match &outcome {
            calculus::UrOutcome::LeastModel(lits) => json!({
                "least_model": lits.iter().map(|&l| literal_text(l, &sy)).collect::<Vec<_>>()
            }),
            calculus::UrOutcome::Inconsistent => json!({ "inconsistent": true }),
        };
        let v = json!({ "steps": steps, "result": result });
        return Ok((v.to_string(), consistent));
    }
    let mut out = String::new();
    for (k, s) in w.trace.steps.iter().enumerate() {
        let lit = s.literal.map(|l| literal_text(l, &sy)).unwrap_or_default();
        out.push_str(&format!(
            "{:4}. {:8} {:6} at {} size {}\n",
            k + 1,
            s.rule.to_string(),
            lit,
            s.path,
            s.size_after
        ));
    }
    match &outcome {
        calculus::UrOutcome::LeastModel(lits) => {
            let i: Interpretation = lits.iter().copied().collect();
            out.push_str(&format!("least model: {}\n", interp_text(&i, &sy)));
        }
        calculus::UrOutcome::Inconsistent => out.push_str("inconsistent\n"),
    }
    Ok((out, consistent))
}

fn run_gen(
    class: &str,
    seed: u64,
    atoms: usize,
    depth: usize,
    width: usize,
    rules: usize,
    as_json: bool,
) -> Outcome {
    let target = ClassTarget::parse(class)
        .ok_or_else(|| Failure::Usage(format!("unknown class `{class}`")))?;
    let cfg = GenConfig {
        atom_count: atoms,
        max_depth: depth,
        max_width: width,
        rule_count: rules,
        class_target: target,
        seed,
        allow_classical_neg: false,
        allow_default: true,
        allow_bot: false,
    };
    let mut sy = Symbols::new();
    let out = match testkit::gen(&cfg, &mut sy) {
        testkit::Generated::Expr(e) => {
            if as_json {
                expr_json_value(&e, &sy).to_string()
            } else {
                format!("{}\n", expr_to_text(&e, &sy))
            }
        }
        testkit::Generated::Rule(r) => {
            if as_json {
                program_json_value(&Program::new(vec![r]), &sy).to_string()
            } else {
                format!("{}\n", rule_to_text(&r, &sy))
            }
        }
        testkit::Generated::Program(p) => {
            if as_json {
                program_json_value(&p, &sy).to_string()
            } else {
                program_to_text(&p, &sy)
            }
        }
    };
    Ok((out, true))
}

fn dispatch(cli: Cli) -> Outcome {
    let as_json = cli.json;
    match cli.command {
        Command::Classify { file } => run_classify(&file, as_json),
        Command::Delta { file } => run_delta(&file, as_json),
        Command::Lm { file, engine } => run_lm(&file, engine.into(), as_json),
        Command::As {
            file,
            all,
            max_universe,
            engine,
        } => run_answer_sets(&file, all, max_universe, engine.into(), as_json),
        Command::Reduct { file, interp } => run_reduct(&file, &interp, as_json),
        Command::Translate {
            file,
            to,
            route,
            budget,
        } => run_translate(&file, to, route, budget, as_json),
        Command::Split { file } => run_split(&file, as_json),
        Command::Equiv { a, b, max_atoms } => run_equiv(&a, &b, max_atoms, as_json),
        Command::Trace { file } => run_trace(&file, as_json),
        Command::Gen {
            class,
            seed,
            atoms,
            depth,
            width,
            rules,
        } => run_gen(&class, seed, atoms, depth, width, rules, as_json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok((output, yes)) => {
            if output.ends_with('\n') {
                print!("{output}");
            } else {
                println!("{output}");
            }
            if yes {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
