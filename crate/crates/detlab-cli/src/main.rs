//! Command-line surface: parse ideals and matrices from files, run the
//! determinantal checks, emit human-readable or JSON reports, and replay
//! the worked examples by id.
//!
//! Exit codes: 0 = certified yes / all assertions passed, 1 = certified
//! no / an assertion failed, 2 = probable-no or inconclusive, 3 = usage,
//! parse, or data errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use detlab::catalog::{reproduce, ReproduceOptions, CATALOG_IDS};
use detlab::constructions::{basic_double_link, cone_family};
use detlab::detcheck::{check_good, check_standard, CheckReport, Verdict, Witness};
use detlab::ideal::Ideal;
use detlab::io::{parse_ideal_str, parse_matrix_str, parse_poly};
use detlab::matrix::{GenericityMode, GenericityVerdict};
use detlab::resolution::{free_resolution, is_acm};
use detlab::ring::FieldSpec;
use detlab::rng::{random_linear_form, seeded};

#[derive(Parser)]
#[command(
    name = "detlab",
    version,
    about = "Exact determinantal-ideal toolbox: checks, invariants, constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decision procedures on a matrix or ideal file
    Check {
        /// standard | good | one-generic | acm
        kind: String,
        /// input file (.mat for the matrix checks, .ideal for acm)
        input: PathBuf,
        #[command(flatten)]
        common: Common,
        /// trial budget for randomized certification
        #[arg(long, default_value_t = 8)]
        trials: u32,
    },
    /// Invariants and operations
    Compute {
        /// minors | degree-matrix | hilbert | mu | betti | section |
        /// artinian | bdl | cone-family
        kind: String,
        /// input files (two ideals for bdl, one file otherwise)
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
        /// minor size for `minors`
        #[arg(long)]
        size: Option<usize>,
        /// count minimal generators of the square of the ideal
        #[arg(long)]
        square: bool,
        /// hyperplane for `section`, e.g. "x4" or "x3 - x2"
        #[arg(long)]
        hyperplane: Option<String>,
        /// use a random hyperplane for `section`
        #[arg(long)]
        random: bool,
        /// linking form for `bdl`
        #[arg(long)]
        f: Option<String>,
        /// family parameter for `cone-family`
        #[arg(long)]
        s: Option<i64>,
    },
    /// Replay a worked example end to end and assert its conclusions
    Reproduce {
        /// catalog id (see --list), or nothing with --all
        id: Option<String>,
        /// run the whole catalog
        #[arg(long)]
        all: bool,
        /// list catalog ids
        #[arg(long)]
        list: bool,
        /// ambient parameter for the curve examples
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// seed for every randomized step (default: DETLAB_SEED or 0)
    #[arg(long)]
    seed: Option<u64>,
    /// override the coefficient field characteristic (0 = rationals)
    #[arg(long)]
    field: Option<u64>,
    /// emit a JSON report instead of text
    #[arg(long)]
    json: bool,
}

impl Common {
    fn seed(&self) -> u64 {
        self.seed
            .or_else(|| std::env::var("DETLAB_SEED").ok().and_then(|v| v.parse().ok()))
            .unwrap_or(0)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> detlab::Result<u8> {
    let started = Instant::now();
    match cli.command {
        Command::Check { kind, input, common, trials } => {
            check_command(&kind, &input, &common, trials, started)
        }
        Command::Compute { kind, inputs, common, size, square, hyperplane, random, f, s } => {
            compute_command(
                &kind, &inputs, &common, size, square, hyperplane, random, f, s, started,
            )
        }
        Command::Reproduce { id, all, list, n, common } => {
            reproduce_command(id, all, list, n, &common, started)
        }
    }
}

fn load_text(path: &PathBuf, field_override: Option<u64>) -> detlab::Result<String> {
    let text = std::fs::read_to_string(path)?;
    match field_override {
        None => Ok(text),
        Some(p) => {
            // patch the header characteristic
            let mut out = String::new();
            let mut patched = false;
            for line in text.lines() {
                let trimmed = line.trim();
                if !patched && trimmed.starts_with("ring") {
                    let rebuilt: Vec<String> = trimmed
                        .split_whitespace()
                        .map(|tok| {
                            if tok.starts_with("p=") {
                                format!("p={p}")
                            } else {
                                tok.to_string()
                            }
                        })
                        .collect();
                    out.push_str(&rebuilt.join(" "));
                    patched = true;
                } else {
                    out.push_str(line);
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn field_json(field: &FieldSpec) -> Value {
    match field {
        FieldSpec::Prime(p) => json!({"kind": "prime", "p": p}),
        FieldSpec::Rationals => json!({"kind": "rationals", "p": 0}),
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::CertifiedYes => "certified_yes",
        Verdict::CertifiedNo => "certified_no",
        Verdict::ProbableNo => "probable_no",
    }
}

fn verdict_exit(v: Verdict) -> u8 {
    match v {
        Verdict::CertifiedYes => 0,
        Verdict::CertifiedNo => 1,
        Verdict::ProbableNo => 2,
    }
}

fn witness_json(w: &Witness, field: &FieldSpec) -> Value {
    match w {
        Witness::RowOperation { matrix, deleted_row } => json!({
            "kind": "row_operation",
            "matrix": matrix
                .iter()
                .map(|row| row.iter().map(|c| c.display_string(field)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "deleted_row": deleted_row,
        }),
        Witness::GeneralizedRow { combination } => json!({
            "kind": "generalized_row",
            "combination": combination
                .iter()
                .map(|c| c.display_string(field))
                .collect::<Vec<_>>(),
        }),
        Witness::Refutation { mu, mu_square, bound, defect } => json!({
            "kind": "refutation",
            "mu": mu,
            "mu_square": mu_square,
            "bound": bound,
            "defect": defect,
        }),
    }
}

fn report_json(rep: &CheckReport, field: &FieldSpec, replay: String) -> Value {
    json!({
        "verdict": verdict_str(rep.verdict),
        "witness": rep.witness.as_ref().map(|w| witness_json(w, field)),
        "trials": rep.trials,
        "seed": rep.seed,
        "expected_height": rep.expected_height,
        "observed_height": rep.observed_height,
        "trial_log": rep
            .trial_log
            .iter()
            .map(|t| json!({"label": t.label, "height": t.height}))
            .collect::<Vec<_>>(),
        "notes": rep.notes,
        "replay": replay,
    })
}

fn emit(
    common: &Common,
    command: Vec<String>,
    field: &FieldSpec,
    seed: u64,
    payload: Value,
    human: String,
    started: Instant,
) {
    if common.json {
        let doc = json!({
            "schema_version": 1,
            "command": command,
            "seed": seed,
            "field": field_json(field),
            "timings": {"total_ms": started.elapsed().as_millis() as u64},
            "payload": payload,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!("{human}");
    }
}

fn check_command(
    kind: &str,
    input: &PathBuf,
    common: &Common,
    trials: u32,
    started: Instant,
) -> detlab::Result<u8> {
    let seed = common.seed();
    let text = load_text(input, common.field)?;
    let cmd = vec!["check".to_string(), kind.to_string(), input.display().to_string()];
    match kind {
        "standard" | "good" => {
            let matrix = parse_matrix_str(&text)?;
            let field = matrix.ring().field().clone();
            let rep = if kind == "standard" {
                check_standard(&matrix)?
            } else {
                check_good(&matrix, trials, seed)?
            };
            let replay = format!(
                "detlab check {kind} {} --seed {seed} --trials {trials} --field {}",
                input.display(),
                field.characteristic()
            );
            let mut human = format!("{}: verdict {}", kind, verdict_str(rep.verdict));
            if let Some(h) = rep.expected_height {
                human.push_str(&format!(", target height {h}"));
            }
            if let Some(h) = rep.observed_height {
                human.push_str(&format!(", observed height {h}"));
            }
            for note in &rep.notes {
                human.push('\n');
                human.push_str(note);
            }
            let code = verdict_exit(rep.verdict);
            emit(common, cmd, &field, seed, report_json(&rep, &field, replay), human, started);
            Ok(code)
        }
        "one-generic" => {
            let matrix = parse_matrix_str(&text)?;
            let field = matrix.ring().field().clone();
            let exact = matrix.is_one_generic(GenericityMode::RowsCols, 0, seed)?;
            let verdict = match exact {
                GenericityVerdict::OneGeneric => {
                    matrix.is_one_generic(GenericityMode::Generalized, trials.max(1), seed)?
                }
                other => other,
            };
            let (text_out, code) = match verdict {
                GenericityVerdict::OneGeneric => ("one-generic", 0u8),
                GenericityVerdict::NotOneGeneric => ("not one-generic", 1),
                GenericityVerdict::ProbablyOneGeneric => ("probably one-generic", 2),
            };
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({"verdict": text_out}),
                format!("one-generic: {text_out}"),
                started,
            );
            Ok(code)
        }
        "acm" => {
            let ideal = parse_ideal_str(&text)?;
            let field = ideal.ring().field().clone();
            let acm = is_acm(&ideal)?;
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({"acm": acm}),
                format!("arithmetically Cohen-Macaulay: {acm}"),
                started,
            );
            Ok(if acm { 0 } else { 1 })
        }
        other => Err(detlab::Error::Precondition(format!(
            "unknown check kind `{other}` (use standard, good, one-generic, acm)"
        ))),
    }
}

fn ideal_json(ideal: &Ideal) -> Value {
    json!(ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>())
}

#[allow(clippy::too_many_arguments)]
fn compute_command(
    kind: &str,
    inputs: &[PathBuf],
    common: &Common,
    size: Option<usize>,
    square: bool,
    hyperplane: Option<String>,
    random: bool,
    f: Option<String>,
    s: Option<i64>,
    started: Instant,
) -> detlab::Result<u8> {
    let seed = common.seed();
    let need = |n: usize| -> detlab::Result<()> {
        if inputs.len() != n {
            return Err(detlab::Error::Precondition(format!(
                "`compute {kind}` expects {n} input file(s), got {}",
                inputs.len()
            )));
        }
        Ok(())
    };
    let cmd = {
        let mut c = vec!["compute".to_string(), kind.to_string()];
        c.extend(inputs.iter().map(|p| p.display().to_string()));
        c
    };
    match kind {
        "minors" => {
            need(1)?;
            let m = parse_matrix_str(&load_text(&inputs[0], common.field)?)?;
            let field = m.ring().field().clone();
            let size = size.unwrap_or(m.rows());
            let minors = m.minors(size)?;
            let strs: Vec<String> = minors.iter().map(|p| p.to_string()).collect();
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({"size": size, "minors": strs}),
                strs.join("\n"),
                started,
            );
            Ok(0)
        }
        "degree-matrix" => {
            need(1)?;
            let m = parse_matrix_str(&load_text(&inputs[0], common.field)?)?;
            let field = m.ring().field().clone();
            let dm = m.degree_matrix()?;
            let human = dm
                .grid()
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({
                    "grid": dm.grid(),
                    "column_degrees": dm.col_degrees(),
                    "row_degrees": dm.row_degrees(),
                    "ambiguous": dm.is_ambiguous(),
                }),
                human,
                started,
            );
            Ok(0)
        }
        "hilbert" => {
            need(1)?;
            let ideal = parse_ideal_str(&load_text(&inputs[0], common.field)?)?;
            let field = ideal.ring().field().clone();
            let series = ideal.hilbert_series();
            let (dim, degree) = series.dimension_degree();
            let hp: Vec<String> =
                ideal.hilbert_polynomial().iter().map(|c| c.to_string()).collect();
            let human = format!(
                "numerator = {:?}\nKrull dimension {dim}, degree {degree}\nHilbert polynomial (constant first): {hp:?}",
                series.numerator()
            );
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({
                    "numerator": series.numerator(),
                    "n_vars": series.n_vars(),
                    "krull_dim": dim,
                    "degree": degree,
                    "hilbert_polynomial": hp,
                }),
                human,
                started,
            );
            Ok(0)
        }
        "mu" => {
            need(1)?;
            let ideal = parse_ideal_str(&load_text(&inputs[0], common.field)?)?;
            let field = ideal.ring().field().clone();
            let target = if square { ideal.square() } else { ideal.clone() };
            let graded = target.mu_graded();
            let total: u64 = graded.values().sum();
            let human = format!("mu = {total} (by degree: {graded:?})");
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({
                    "square": square,
                    "mu": total,
                    "graded": graded
                        .iter()
                        .map(|(d, c)| json!({"degree": d, "count": c}))
                        .collect::<Vec<_>>(),
                }),
                human,
                started,
            );
            Ok(0)
        }
        "betti" => {
            need(1)?;
            let ideal = parse_ideal_str(&load_text(&inputs[0], common.field)?)?;
            let field = ideal.ring().field().clone();
            let res = free_resolution(&ideal, None)?;
            let betti = res.betti_table()?;
            let entries: Vec<Value> = betti
                .entries()
                .iter()
                .map(|(&(i, j), &r)| json!({"i": i, "j": j, "rank": r}))
                .collect();
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({"entries": entries, "complete": res.is_complete()}),
                format!("{betti}"),
                started,
            );
            Ok(0)
        }
        "section" => {
            need(1)?;
            let ideal = parse_ideal_str(&load_text(&inputs[0], common.field)?)?;
            let ring = ideal.ring().clone();
            let field = ring.field().clone();
            let h = match (&hyperplane, random) {
                (Some(src), _) => parse_poly(&ring, src)?,
                (None, true) => random_linear_form(&ring, &mut seeded(seed)),
                (None, false) => {
                    return Err(detlab::Error::Precondition(
                        "pass --hyperplane \"...\" or --random".into(),
                    ))
                }
            };
            let (section, saturated) = ideal.hyperplane_section_checked(&h)?;
            let human = format!(
                "hyperplane: {h}\nsaturated: {saturated}\n{}",
                detlab::io::ideal_to_string(&section)
            );
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({
                    "hyperplane": h.to_string(),
                    "saturated": saturated,
                    "ideal": ideal_json(&section),
                    "n_vars": section.ring().n_vars(),
                }),
                human,
                started,
            );
            Ok(0)
        }
        "artinian" => {
            need(1)?;
            let ideal = parse_ideal_str(&load_text(&inputs[0], common.field)?)?;
            let field = ideal.ring().field().clone();
            let (reduced, forms) = ideal.artinian_reduction(seed)?;
            let human = format!(
                "sections used: {}\n{}",
                forms.len(),
                detlab::io::ideal_to_string(&reduced)
            );
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({
                    "ideal": ideal_json(&reduced),
                    "n_vars": reduced.ring().n_vars(),
                    "forms": forms.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }),
                human,
                started,
            );
            Ok(0)
        }
        "bdl" => {
            need(2)?;
            let i_c = parse_ideal_str(&load_text(&inputs[0], common.field)?)?;
            let i_s = parse_ideal_str(&load_text(&inputs[1], common.field)?)?;
            if i_c.ring() != i_s.ring() {
                return Err(detlab::Error::ContextMismatch(
                    "the two ideal files declare different rings".into(),
                ));
            }
            let field = i_c.ring().field().clone();
            let form = match &f {
                Some(src) => parse_poly(i_c.ring(), src)?,
                None => {
                    return Err(detlab::Error::Precondition(
                        "pass --f \"<form>\" for the linking hypersurface".into(),
                    ))
                }
            };
            let (linked, saturated) = basic_double_link(&i_c, &i_s, &form)?;
            let human =
                format!("saturated: {saturated}\n{}", detlab::io::ideal_to_string(&linked));
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({
                    "f": form.to_string(),
                    "saturated": saturated,
                    "ideal": ideal_json(&linked),
                }),
                human,
                started,
            );
            Ok(0)
        }
        "cone-family" => {
            need(1)?;
            let ideal = parse_ideal_str(&load_text(&inputs[0], common.field)?)?;
            let ring = ideal.ring().clone();
            let field = ring.field().clone();
            let param = ring.cfrom_i64(s.unwrap_or(0));
            let member = cone_family(&ideal, &param);
            let human = format!(
                "provenance: {}\n{}",
                member.provenance,
                detlab::io::ideal_to_string(&member.ideal)
            );
            emit(
                common,
                cmd,
                &field,
                seed,
                json!({
                    "s": param.display_string(&field),
                    "provenance": member.provenance,
                    "ideal": ideal_json(&member.ideal),
                }),
                human,
                started,
            );
            Ok(0)
        }
        other => Err(detlab::Error::Precondition(format!("unknown compute kind `{other}`"))),
    }
}

fn reproduce_command(
    id: Option<String>,
    all: bool,
    list: bool,
    n: Option<usize>,
    common: &Common,
    started: Instant,
) -> detlab::Result<u8> {
    if list {
        for id in CATALOG_IDS {
            println!("{id}");
        }
        return Ok(0);
    }
    let seed = common.seed();
    let prime = common.field.unwrap_or(detlab::ring::DEFAULT_PRIME);
    let field = if prime == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(prime) };
    let opts = ReproduceOptions { seed, prime, n };

    let ids: Vec<String> = if all {
        CATALOG_IDS.iter().map(|s| s.to_string()).collect()
    } else {
        match id {
            Some(id) => vec![id],
            None => {
                return Err(detlab::Error::Precondition(
                    "pass a catalog id, --all, or --list".into(),
                ))
            }
        }
    };

    let reports: Vec<_> = detlab::par::par_map(ids, |id| reproduce(&id, &opts));
    let mut all_pass = true;
    let mut payload = Vec::new();
    let mut human = String::new();
    for outcome in reports {
        let report = outcome?;
        let pass = report.passed();
        all_pass &= pass;
        human.push_str(&format!("{} {}\n", if pass { "PASS" } else { "FAIL" }, report.id));
        for c in &report.claims {
            human.push_str(&format!(
                "  [{}] {} ({})\n",
                if c.pass { "ok" } else { "FAILED" },
                c.text,
                c.detail
            ));
        }
        payload.push(json!({
            "id": report.id,
            "seed": report.seed,
            "prime": report.prime,
            "passed": pass,
            "claims": report
                .claims
                .iter()
                .map(|c| json!({"text": c.text, "pass": c.pass, "detail": c.detail}))
                .collect::<Vec<_>>(),
        }));
    }
    emit(
        common,
        vec!["reproduce".to_string()],
        &field,
        seed,
        json!(payload),
        human.trim_end().to_string(),
        started,
    );
    Ok(if all_pass { 0 } else { 1 })
}
