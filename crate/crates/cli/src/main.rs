//! `kfde`: command-line front end.
//!
//! Exit status: 0 when the claim checked holds (proved, valid, defines,
//! not separated, all figure checks pass), 1 when it fails, 2 on usage,
//! parse, I/O or bound errors.

mod output;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kfde::analysis::{self, figures, Criterion, Validity};
use kfde::semantics::{self, FrameProperty, Limits, ModelFile};
use kfde::syntax::{self, Language};
use kfde::tableau::{self, TableauResult};
use kfde::{Frame, Model, PointedModel};
use serde_json::json;

use output::Style;

#[derive(Parser)]
#[command(name = "kfde", version, about = "Four-valued non-contingency logic: prover, model checker, bounded search")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// ASCII notation only (also implied by NO_COLOR).
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tableau prover on a sequent of the ▲-language.
    Prove {
        sequent: String,
        /// Omit the proof tree from text output.
        #[arg(long)]
        no_tree: bool,
    },
    /// Evaluate a formula at a world of a model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        /// Defaults to the model's designated world.
        #[arg(long)]
        world: Option<String>,
        #[arg(long)]
        formula: String,
    },
    /// Check a sequent (or formula) on every model over a frame.
    ValidOnFrame {
        #[arg(long)]
        frame: PathBuf,
        sequent: String,
        /// Largest |W|·|Var| searched.
        #[arg(long, default_value_t = semantics::DEFAULT_MAX_CELLS)]
        max_cells: usize,
    },
    /// Print the dual model (B and N swapped).
    Dual {
        #[arg(long)]
        model: PathBuf,
    },
    /// Brute-force search for a small countermodel.
    Countermodel {
        sequent: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
    },
    /// Compare a frame property with validity of a sequent set.
    Definability(DefinabilityArgs),
    /// Look for a formula telling two pointed models apart.
    Separate(SeparateArgs),
    /// Re-run the checks on the bundled example models.
    Figures {
        /// Also write the bundled models to this directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DefinabilityArgs {
    /// A property name, or a class name (T, S4, S5, F, Ver, 1).
    #[arg(long)]
    property: String,
    /// One sequent or formula per line; defaults to the class's own set.
    #[arg(long)]
    sequents: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    max_size: usize,
}

#[derive(Args)]
struct SeparateArgs {
    #[arg(long)]
    model_a: PathBuf,
    #[arg(long)]
    world_a: Option<String>,
    #[arg(long)]
    model_b: PathBuf,
    #[arg(long)]
    world_b: Option<String>,
    #[arg(long, default_value = "tri")]
    language: Language,
    #[arg(long, default_value_t = 9)]
    max_size: usize,
    /// Comma-separated; defaults to the variables of both models.
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
    #[arg(long, default_value = "value")]
    criterion: Criterion,
}

struct Outcome {
    holds: bool,
    text: String,
}

type CliResult = Result<Outcome, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style { unicode: !cli.ascii && std::env::var_os("NO_COLOR").is_none(), json: cli.json };
    match run(cli.command, style) {
        Ok(outcome) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(io::stdout().lock(), "{}", outcome.text.trim_end());
            ExitCode::from(if outcome.holds { 0 } else { 1 })
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_file(path: &Path) -> Result<ModelFile, String> {
    ModelFile::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_pointed(path: &Path, world: Option<&str>) -> Result<PointedModel, String> {
    let file = load_file(path)?;
    let model = Model::from_file(&file).map_err(|e| format!("{}: {e}", path.display()))?;
    let world = world
        .or(file.designated.as_deref())
        .ok_or_else(|| format!("{}: no world given and no designated world in the file", path.display()))?;
    PointedModel::new(model, world).map_err(err)
}

fn load_frame(path: &Path) -> Result<Frame, String> {
    load_file(path)?.frame().map_err(|e| format!("{}: {e}", path.display()))
}

fn pretty_json(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize")
}

fn run(command: Command, style: Style) -> CliResult {
    match command {
        Command::Prove { sequent, no_tree } => prove(&sequent, !no_tree, style),
        Command::Eval { model, world, formula } => {
            let m = load_pointed(&model, world.as_deref())?;
            let f = syntax::parse_formula(&formula).map_err(err)?;
            let value = semantics::eval(&m.model, &m.world, &f).map_err(err)?;
            let text = if style.json {
                pretty_json(&json!({"world": m.world, "formula": f, "value": value}))
            } else {
                value.to_string()
            };
            Ok(Outcome { holds: true, text })
        }
        Command::ValidOnFrame { frame, sequent, max_cells } => {
            let frame = load_frame(&frame)?;
            let validity = Validity::parse(&sequent).map_err(err)?;
            let witness = validity.countermodel_on(&frame, Limits { max_cells }).map_err(err)?;
            let text = if style.json {
                pretty_json(&json!({"input": validity.render(), "valid": witness.is_none(), "countermodel": witness}))
            } else {
                match &witness {
                    None => "VALID".to_owned(),
                    Some(m) => format!("NOT VALID\ncountermodel:\n{}", output::model(m, style)),
                }
            };
            Ok(Outcome { holds: witness.is_none(), text })
        }
        Command::Dual { model } => {
            let file = load_file(&model)?;
            let m = Model::from_file(&file).map_err(err)?;
            let dual = ModelFile { designated: file.designated, ..semantics::dual_model(&m).to_file() };
            Ok(Outcome { holds: true, text: dual.to_json() })
        }
        Command::Countermodel { sequent, max_worlds } => {
            let s = syntax::parse_sequent(&sequent).map_err(err)?;
            let found = analysis::find_countermodel(&s, max_worlds).map_err(err)?;
            let text = if style.json {
                pretty_json(&json!({"sequent": s, "max_worlds": max_worlds, "countermodel": found}))
            } else {
                match &found {
                    None => format!("NONE (searched up to {max_worlds} worlds)"),
                    Some(m) => format!("FOUND\n{}", output::model(m, style)),
                }
            };
            Ok(Outcome { holds: found.is_none(), text })
        }
        Command::Definability(args) => definability(args, style),
        Command::Separate(args) => separate(args, style),
        Command::Figures { export } => run_figures(export.as_deref(), style),
    }
}

fn prove(sequent: &str, tree: bool, style: Style) -> CliResult {
    let s = syntax::parse_sequent(sequent).map_err(err)?;
    let result = tableau::prove(&s).map_err(err)?;
    let proved = result.is_proved();
    let text = if style.json {
        pretty_json(&json!({
            "sequent": s,
            "verdict": if proved { "proved" } else { "refuted" },
            "stats": result.stats(),
            "countermodel": result.countermodel(),
            "tree": result.tree(),
        }))
    } else {
        let mut text = String::from(if proved { "PROVED" } else { "REFUTED" });
        text.push('\n');
        if tree {
            text.push_str(&result.tree().render(style.unicode));
            text.push('\n');
        }
        if let TableauResult::Refuted(r) = &result {
            text.push_str("countermodel:\n");
            text.push_str(&output::model(&r.countermodel, style));
            text.push('\n');
        }
        let stats = result.stats();
        text.push_str(&format!(
            "{} nodes, {} rule applications, {} closed branches",
            stats.nodes, stats.rule_applications, stats.closed_branches
        ));
        text
    };
    Ok(Outcome { holds: proved, text })
}

fn definability(args: DefinabilityArgs, style: Style) -> CliResult {
    let class = analysis::frame_class(&args.property);
    let property = match &class {
        Some((property, _)) => *property,
        None => args.property.parse::<FrameProperty>()?,
    };
    let set = match (&args.sequents, class) {
        (Some(path), _) => analysis::parse_validity_set(&read(path)?).map_err(err)?,
        (None, Some((_, set))) => set,
        (None, None) => return Err(format!("`{}` is not a frame class; pass --sequents", args.property)),
    };
    let report = analysis::check_definability(property, &set, args.max_size).map_err(err)?;
    let text = if style.json { pretty_json(&json!(report)) } else { report.to_string() };
    Ok(Outcome { holds: report.defines(), text })
}

fn separate(args: SeparateArgs, style: Style) -> CliResult {
    let a = load_pointed(&args.model_a, args.world_a.as_deref())?;
    let b = load_pointed(&args.model_b, args.world_b.as_deref())?;
    let vars: Vec<String> = if args.vars.is_empty() {
        a.model.variables().union(&b.model.variables()).cloned().collect()
    } else {
        args.vars
    };
    if let Some(bad) = vars.iter().find(|v| !syntax::is_variable_name(v)) {
        return Err(format!("invalid variable name `{bad}`"));
    }
    let report =
        analysis::check_indistinguishability(&a, &b, args.language, &vars, args.max_size, args.criterion).map_err(err)?;
    let text = if style.json { pretty_json(&json!(report)) } else { report.to_string() };
    Ok(Outcome { holds: !report.separated(), text })
}

fn run_figures(export: Option<&Path>, style: Style) -> CliResult {
    if let Some(dir) = export {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        for (name, json) in figures::BUNDLED {
            let path = dir.join(format!("{name}.json"));
            fs::write(&path, json).map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    let checks = figures::run_figure_checks();
    let all = checks.iter().all(|c| c.passed);
    let text = if style.json {
        pretty_json(&json!({"passed": all, "checks": checks}))
    } else {
        output::check_table(&checks)
    };
    Ok(Outcome { holds: all, text })
}
