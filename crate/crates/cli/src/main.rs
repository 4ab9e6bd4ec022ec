//! `argstrength`: coherence checks, conclusion bounds and strength scores for
//! probabilistic arguments written in the `.arg` format.
//!
//! Exit status: 0 on success, 1 for usage, file or parse errors, 2 when an
//! argument's premises are incoherent.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use argstrength::ellsberg::{predict_from_table, table1, FirstChoice, SecondChoice, Variant};
use argstrength::{
    analyze, parse_argument_with_budget, rank, render_rational, strength, Analysis, Argument, ConclusionInterval,
    SolverConfig, SolverError, DEFAULT_MAX_ATOMS,
};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use report::{Document, OrderReport, PredictionReport, Record};

#[derive(Debug, Parser)]
#[command(name = "argstrength", version, about = "Coherent bounds and strength for probabilistic arguments")]
struct Cli {
    /// Print one JSON document instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Decimal places for rounded values (exact values are always reported).
    #[arg(long, global = true, value_name = "N", default_value_t = 4)]
    places: usize,
    /// Refuse arguments with more atoms than this.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_ATOMS)]
    max_atoms: usize,
    /// Include distributions attaining each bound.
    #[arg(long, global = true)]
    witness: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that an argument's premises are coherent.
    Check { file: PathBuf },
    /// Propagate the premises to bounds on the conclusion.
    Bounds { file: PathBuf },
    /// Score one or more arguments; with several, also order them.
    Strength {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Order arguments by strength.
    Rank {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Reproduce the four Ellsberg bets.
    Ellsberg {
        /// `decimal` (0.33 / 0.67) or `exact` (1/3, 2/3).
        #[arg(long, default_value = "decimal")]
        variant: Variant,
    },
}

#[derive(Debug)]
enum Failure {
    /// Reported message; exit 1.
    Usage(String),
    /// Output already printed; exit 2.
    Incoherent,
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(1),
            Failure::Incoherent => ExitCode::from(2),
        }
    }
}

struct Loaded {
    label: String,
    source: String,
    argument: Argument,
}

fn load(path: &Path, max_atoms: usize) -> Result<Loaded, Failure> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
    let argument = parse_argument_with_budget(&text, max_atoms).map_err(|e| Failure::Usage(format!("{source}:{e}")))?;
    let label = argument
        .label
        .clone()
        .or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| source.clone());
    Ok(Loaded { label, source, argument })
}

/// Solves each argument on its own thread; results keep input order.
fn solve_all(loaded: &[Loaded], config: &SolverConfig) -> Result<Vec<Analysis>, Failure> {
    let results: Vec<Result<Analysis, SolverError>> = thread::scope(|scope| {
        let handles: Vec<_> =
            loaded.iter().map(|l| scope.spawn(move || analyze(&l.argument, config))).collect();
        handles.into_iter().map(|h| h.join().expect("solver thread panicked")).collect()
    });
    results
        .into_iter()
        .zip(loaded)
        .map(|(r, l)| r.map_err(|e| Failure::Usage(format!("{}: {e}", l.source))))
        .collect()
}

fn interval_text(interval: &ConclusionInterval, places: usize) -> String {
    format!(
        "[{}, {}]",
        argstrength::round_half_up(&interval.lower, places),
        argstrength::round_half_up(&interval.upper, places)
    )
}

fn verdict_lines(record: &Record) -> String {
    let mut out = format!("{}: {}\n", record.label, record.coherence.status);
    if let Some(conflict) = &record.coherence.conflict {
        out.push_str(&format!("  no distribution satisfies premises {}\n", join(conflict)));
    }
    if record.coherence.zero_layers.is_empty() {
        if record.coherence.conflict.is_none() {
            out.push_str("  zero layers: none\n");
        }
    } else {
        for layer in &record.coherence.zero_layers {
            out.push_str(&format!(
                "  zero layer {}: premises {} (probability zero: {})\n",
                layer.depth,
                join(&layer.premises),
                layer.conditions.join(", ")
            ));
        }
    }
    out
}

fn join(items: &[usize]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn witness_lines(record: &Record) -> String {
    let mut out = String::new();
    if let Some(w) = &record.witnesses {
        for (name, masses) in [("lower", &w.lower), ("upper", &w.upper)] {
            if masses.is_empty() {
                continue;
            }
            let parts: Vec<String> = masses.iter().map(|m| format!("{} = {}", m.world, m.mass.exact)).collect();
            out.push_str(&format!("  {name} witness: {}\n", parts.join(", ")));
        }
    }
    out
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let config = SolverConfig { max_atoms: cli.max_atoms };
    let places = cli.places;
    match &cli.command {
        Command::Check { file } => {
            let loaded = load(file, cli.max_atoms)?;
            let analysis = solve_all(std::slice::from_ref(&loaded), &config)?.remove(0);
            let record = Record::new(loaded.label, loaded.source, &analysis.verdict);
            emit(cli, Document::new("check", places, vec![record.clone()]), || verdict_lines(&record));
            if analysis.verdict.is_coherent() {
                Ok(())
            } else {
                Err(Failure::Incoherent)
            }
        }
        Command::Bounds { file } => {
            let loaded = load(file, cli.max_atoms)?;
            let analysis = solve_all(std::slice::from_ref(&loaded), &config)?.remove(0);
            let mut record = Record::new(loaded.label, loaded.source, &analysis.verdict);
            let Some(interval) = &analysis.interval else {
                emit(cli, Document::new("bounds", places, vec![record.clone()]), || verdict_lines(&record));
                return Err(Failure::Incoherent);
            };
            record = record.with_interval(interval, places, cli.witness);
            let conclusion = loaded.argument.conclusion.to_string();
            emit(cli, Document::new("bounds", places, vec![record.clone()]), || {
                let exact = record.interval.as_ref().expect("interval");
                let mut out = format!(
                    "{}: {conclusion} in {}  exact [{}, {}]\n",
                    record.label,
                    interval_text(interval, places),
                    exact.lower.exact,
                    exact.upper.exact
                );
                if let Some(reason) = record.vacuous_reason {
                    out.push_str(&format!("  vacuous: {reason}\n"));
                }
                out + &witness_lines(&record)
            });
            Ok(())
        }
        Command::Strength { files } => score_files(cli, "strength", files, &config),
        Command::Rank { files } => score_files(cli, "rank", files, &config),
        Command::Ellsberg { variant } => {
            ellsberg(cli, *variant);
            Ok(())
        }
    }
}

fn score_files(cli: &Cli, command: &'static str, files: &[PathBuf], config: &SolverConfig) -> Result<(), Failure> {
    let places = cli.places;
    let loaded = files.iter().map(|f| load(f, cli.max_atoms)).collect::<Result<Vec<_>, _>>()?;
    let analyses = solve_all(&loaded, config)?;

    let mut records = Vec::new();
    let mut scored = Vec::new();
    let mut incoherent = false;
    for (l, analysis) in loaded.iter().zip(&analyses) {
        let record = Record::new(l.label.clone(), l.source.clone(), &analysis.verdict);
        match &analysis.interval {
            Some(interval) => {
                let score = strength(interval).map_err(|e| Failure::Usage(format!("{}: {e}", l.source)))?;
                records.push(record.with_interval(interval, places, cli.witness).with_strength(&score, places));
                scored.push((l.label.clone(), interval.clone()));
            }
            None => {
                incoherent = true;
                records.push(record);
            }
        }
    }
    if incoherent {
        let shown: Vec<Record> = records.iter().filter(|r| r.coherence.status == "incoherent").cloned().collect();
        emit(cli, Document::new(command, places, records), || shown.iter().map(verdict_lines).collect());
        return Err(Failure::Incoherent);
    }

    let order = rank(&scored).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut doc = Document::new(command, places, records);
    if command == "rank" || scored.len() >= 2 {
        doc.order = Some(OrderReport::new(&order, places));
    }
    let text = || {
        let mut out = if command == "rank" { rank_table(&doc, &order) } else { strength_table(&doc) };
        for r in &doc.records {
            if let Some(reason) = r.vacuous_reason {
                out.push_str(&format!("{}: vacuous, {reason}\n", r.label));
            }
            out.push_str(&witness_lines(r));
        }
        if let Some(order) = &doc.order {
            out.push_str(&format!("order: {}\n", order.display));
        }
        out
    };
    emit(cli, doc.clone(), text);
    Ok(())
}

fn strength_table(doc: &Document) -> String {
    let rows: Vec<Vec<String>> = doc
        .records
        .iter()
        .map(|r| {
            let (i, s) = (r.interval.as_ref().expect("interval"), r.strength.as_ref().expect("strength"));
            vec![
                r.label.clone(),
                format!("[{}, {}]", i.lower.decimal, i.upper.decimal),
                s.precision_factor.decimal.clone(),
                s.location_factor.decimal.clone(),
                s.value.decimal.clone(),
                s.value.exact.clone(),
            ]
        })
        .collect();
    report::table(&["argument", "interval", "precision", "location", "strength", "exact"], &rows)
}

fn rank_table(doc: &Document, order: &argstrength::PreferenceOrder) -> String {
    let mut rows = Vec::new();
    for (position, class) in order.classes.iter().enumerate() {
        for label in &class.labels {
            let record = doc.records.iter().find(|r| &r.label == label).expect("ranked label");
            let i = record.interval.as_ref().expect("interval");
            let s = record.strength.as_ref().expect("strength");
            rows.push(vec![
                (position + 1).to_string(),
                label.clone(),
                s.value.decimal.clone(),
                format!("[{}, {}]", i.lower.decimal, i.upper.decimal),
            ]);
        }
    }
    report::table(&["rank", "argument", "strength", "interval"], &rows)
}

fn ellsberg(cli: &Cli, variant: Variant) {
    let places = cli.places;
    let rows = table1(variant).expect("built-in scenario is coherent");
    let prediction = predict_from_table(&rows);
    let scored: Vec<_> = rows.iter().map(|r| (r.label.clone(), r.interval.clone())).collect();
    let order = rank(&scored).expect("well-formed intervals");

    let mut doc = Document::new("ellsberg", places, rows.iter().map(|r| report::ellsberg_record(r, variant, places)).collect());
    doc.variant = Some(variant.as_str());
    doc.order = Some(OrderReport::new(&order, places));
    doc.prediction = Some(PredictionReport::new(&prediction));

    emit(cli, doc.clone(), || {
        let (red, rest) = variant.premise_values();
        let mut out = format!(
            "Ellsberg urn, {variant} variant: P(R) = {}, P(B or Y) = {}, exactly one of R, B, Y\n",
            render_rational(&red),
            render_rational(&rest)
        );
        let table_rows: Vec<Vec<String>> = rows
            .iter()
            .zip(&doc.records)
            .map(|(row, record)| {
                let s = record.strength.as_ref().expect("strength");
                vec![
                    row.bet.to_string(),
                    row.label.clone(),
                    row.conclusion.to_string(),
                    interval_text(&row.interval, places),
                    s.value.decimal.clone(),
                    s.value.exact.clone(),
                ]
            })
            .collect();
        out.push_str(&report::table(&["bet", "argument", "conclusion", "interval", "strength", "exact"], &table_rows));
        let p = doc.prediction.as_ref().expect("prediction");
        out.push_str(&format!("order: {}\n", order));
        let first = match prediction.first {
            FirstChoice::Bet1 => "bet 1 ≻ bet 2",
            FirstChoice::Bet2 => "bet 2 ≻ bet 1",
            FirstChoice::Tie => "bet 1 ~ bet 2",
        };
        let second = match prediction.second {
            SecondChoice::Bet3 => "bet 3 ≻ bet 4",
            SecondChoice::Bet4 => "bet 4 ≻ bet 3",
            SecondChoice::Tie => "bet 3 ~ bet 4",
        };
        out.push_str(&format!("preferences: {first}, {second}\n"));
        out.push_str(&format!("strategy: {} ({})\n", p.strategy, p.description));
        out
    });
}

fn emit(cli: &Cli, doc: Document, text: impl FnOnce() -> String) {
    let out = if cli.json { doc.to_json() + "\n" } else { text() };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Failure::Usage(message) = &failure {
                eprintln!("error: {message}");
            }
            failure.exit_code()
        }
    }
}
