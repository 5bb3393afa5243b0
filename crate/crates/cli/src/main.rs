use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bpmnlint_core::engine::{self, RuleSetting};
use bpmnlint_core::{rules, xmlio, LintConfig, Severity};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Well-formedness checker for BPMN 2.0 process models.
#[derive(Parser, Debug)]
#[command(name = "bpmnlint", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lint one or more .bpmn files (directories are searched recursively).
    Check(CheckArgs),
    /// List the rules enabled under the given configuration.
    Rules(RulesArgs),
    /// Describe one rule.
    Explain {
        /// Rule id, e.g. FC-27.
        rule: String,
    },
}

#[derive(Args, Debug)]
struct ConfigArgs {
    /// Config file; falls back to $BPMNLINT_CONFIG.
    #[arg(long, env = "BPMNLINT_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    profile: Option<Profile>,
    /// Rule ids to switch off.
    #[arg(long, value_delimiter = ',', value_name = "ID,...")]
    disable: Vec<String>,
    /// Rule ids to switch on at their default severity.
    #[arg(long, value_delimiter = ',', value_name = "ID,...")]
    enable: Vec<String>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    config: ConfigArgs,
    /// Lowest severity that makes the run fail.
    #[arg(long, value_enum)]
    fail_on: Option<FailOn>,
    /// Print a per-rule histogram instead of per-element lines (text format).
    #[arg(long)]
    summary: bool,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct RulesArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    config: ConfigArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Profile {
    Standard,
    Strict,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FailOn {
    Error,
    Warning,
}

/// Usage, configuration and input errors; all exit with status 2.
#[derive(Debug)]
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

fn build_config(args: &ConfigArgs) -> Result<LintConfig, Fatal> {
    let mut cfg = match &args.config {
        Some(p) => LintConfig::load(p)?,
        None => LintConfig::default(),
    };
    if let Some(p) = args.profile {
        cfg.set_profile(match p {
            Profile::Standard => "standard",
            Profile::Strict => "strict",
        });
    }
    for id in &args.disable {
        cfg.set_rule(id, RuleSetting::Off)?;
    }
    for id in &args.enable {
        let d = rules::descriptor(&id.trim().to_ascii_uppercase()).ok_or_else(|| Fatal(format!("unknown rule id `{id}`")))?;
        cfg.set_rule(d.id, RuleSetting::Level(d.default_severity))?;
    }
    Ok(cfg)
}

/// Expands directories to the model files inside them and sorts the result.
fn collect_inputs(paths: &[PathBuf]) -> Result<Vec<PathBuf>, Fatal> {
    fn visit(dir: &Path, out: &mut Vec<PathBuf>) -> Result<(), Fatal> {
        for entry in std::fs::read_dir(dir).map_err(|e| Fatal(format!("{}: {e}", dir.display())))? {
            let p = entry?.path();
            if p.is_dir() {
                visit(&p, out)?;
            } else if p.extension().is_some_and(|e| e == "bpmn" || e == "xml") {
                out.push(p);
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            visit(p, &mut out)?;
        } else {
            out.push(p.clone());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn check(args: &CheckArgs) -> Result<ExitCode, Fatal> {
    let mut cfg = build_config(&args.config)?;
    if let Some(f) = args.fail_on {
        cfg.fail_threshold = match f {
            FailOn::Error => Severity::Error,
            FailOn::Warning => Severity::Warning,
        };
    }
    cfg.workers = args.jobs;
    let models = collect_inputs(&args.paths)?
        .iter()
        .map(|p| xmlio::parse_file(p).map_err(|e| Fatal(format!("{}: {e}", p.display()))))
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<_> = models.iter().collect();
    let report = engine::lint_many(&refs, &cfg)?;
    let out = match (args.format, args.summary) {
        (Format::Json, _) => engine::render_json(&report),
        (Format::Text, true) => engine::render_summary(&report),
        (Format::Text, false) => engine::render_text(&report),
    };
    print!("{out}");
    Ok(if report.fails(cfg.fail_threshold) { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn list(args: &RulesArgs) -> Result<ExitCode, Fatal> {
    let cfg = build_config(&args.config)?;
    let listed = engine::list_rules(&cfg);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&listed)?),
        Format::Text => {
            for d in &listed {
                let severity = cfg.severity_of(d).map_or("off", Severity::as_str);
                println!("{:<6} {:<7} {}", d.id, severity, d.title);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode, Fatal> {
    match &cli.command {
        Command::Check(args) => check(args),
        Command::Rules(args) => list(args),
        Command::Explain { rule } => {
            print!("{}", engine::explain(rule)?.text);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(&cli).unwrap_or_else(|Fatal(msg)| {
        eprintln!("bpmnlint: {msg}");
        ExitCode::from(2)
    })
}
