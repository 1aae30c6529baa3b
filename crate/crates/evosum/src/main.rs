use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use evosum::cli::{self, GridCell, RunManifest};
use evosum::ga::{GaConfig, GenerationStats};

/// Extractive summarization trained with a genetic algorithm.
#[derive(Parser)]
#[command(name = "evosum", version, about)]
struct Cli {
    /// Worker threads for fitness evaluation (default: all cores).
    #[arg(long, global = true, env = "EVOSUM_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Train a model and write the weights and stats files.
    Train(TrainArgs),
    /// Score a saved model against a test corpus.
    Eval(EvalArgs),
    /// Print the sentences of one article that pass the model's threshold.
    Summarize(SummarizeArgs),
    /// Train and evaluate a grid of training/vocabulary sizes.
    Grid(GridArgs),
}

#[derive(Args)]
struct GaArgs {
    #[arg(long, default_value_t = 100, env = "EVOSUM_POPULATION")]
    population: usize,
    #[arg(long, default_value_t = 15, env = "EVOSUM_GENERATIONS")]
    generations: usize,
    #[arg(long, default_value_t = 0.8, env = "EVOSUM_CROSSOVER_RATE")]
    crossover_rate: f64,
    /// Per-gene deletion probability applied to every offspring.
    #[arg(long, default_value_t = 0.01, env = "EVOSUM_MUTATION_RATE")]
    mutation_rate: f64,
    #[arg(long, default_value_t = 5, env = "EVOSUM_TOURNAMENT")]
    tournament: usize,
    /// Sentence weight a sentence must exceed to be extracted.
    #[arg(long, default_value_t = 0.6, env = "EVOSUM_THRESHOLD")]
    threshold: f64,
    #[arg(long, default_value_t = 0, env = "EVOSUM_SEED")]
    seed: u64,
}

impl GaArgs {
    fn config(&self) -> GaConfig {
        GaConfig {
            population_size: self.population,
            generations: self.generations,
            crossover_rate: self.crossover_rate,
            mutation_gene_rate: self.mutation_rate,
            tournament_size: self.tournament,
            threshold: self.threshold,
            seed: self.seed,
        }
    }
}

#[derive(Args)]
struct CorpusArgs {
    /// Directory of training stories.
    #[arg(long, env = "EVOSUM_TRAIN_DIR")]
    train_dir: PathBuf,
    /// Directory of vocabulary stories (defaults to --train-dir).
    #[arg(long, env = "EVOSUM_VOCAB_DIR")]
    vocab_dir: Option<PathBuf>,
    #[arg(long, env = "EVOSUM_TRAIN_LIMIT")]
    train_limit: Option<usize>,
    #[arg(long, env = "EVOSUM_VOCAB_LIMIT")]
    vocab_limit: Option<usize>,
}

#[derive(Args)]
struct TrainArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long, default_value = "weights.evosum", env = "EVOSUM_WEIGHTS_OUT")]
    weights_out: PathBuf,
    #[arg(long, default_value = "stats.csv", env = "EVOSUM_STATS_OUT")]
    stats_out: PathBuf,
    #[command(flatten)]
    ga: GaArgs,
}

#[derive(Args)]
struct EvalArgs {
    /// Weights file written by `train`.
    #[arg(long, env = "EVOSUM_WEIGHTS")]
    weights: PathBuf,
    #[arg(long, env = "EVOSUM_TEST_DIR")]
    test_dir: PathBuf,
    #[arg(long, env = "EVOSUM_TEST_LIMIT")]
    test_limit: Option<usize>,
}

#[derive(Args)]
struct SummarizeArgs {
    /// Weights file written by `train`.
    #[arg(long, env = "EVOSUM_WEIGHTS")]
    weights: PathBuf,
    /// Story or plain-text file to summarize.
    input: PathBuf,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long, env = "EVOSUM_TEST_DIR")]
    test_dir: PathBuf,
    #[arg(long, env = "EVOSUM_TEST_LIMIT")]
    test_limit: Option<usize>,
    /// Grid cells as TRAINxVOCAB, where VOCAB is a count or `all`.
    #[arg(long = "cell", required = true)]
    cells: Vec<GridCell>,
    /// Directory for per-cell artifacts and summary.csv.
    #[arg(long, default_value = "grid-out")]
    out_dir: PathBuf,
    #[command(flatten)]
    ga: GaArgs,
}

fn manifest(
    corpus: &CorpusArgs,
    ga: &GaArgs,
    weights_out: PathBuf,
    stats_out: PathBuf,
) -> RunManifest {
    RunManifest {
        config: ga.config(),
        train_dir: corpus.train_dir.clone(),
        vocab_dir: corpus
            .vocab_dir
            .clone()
            .unwrap_or_else(|| corpus.train_dir.clone()),
        train_limit: corpus.train_limit,
        vocab_limit: corpus.vocab_limit,
        weights_out,
        stats_out,
    }
}

fn progress_line(stats: &GenerationStats) -> String {
    format!(
        "gen {:>3}: min {:.4} mean {:.4} max {:.4} best {:.4}",
        stats.generation,
        stats.min_fitness,
        stats.mean_fitness,
        stats.max_fitness,
        stats.best_so_far
    )
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Train(args) => {
            let manifest = manifest(&args.corpus, &args.ga, args.weights_out, args.stats_out);
            let report = cli::train(&manifest, |s| eprintln!("{}", progress_line(s)))?;
            println!(
                "vocabulary: {} tokens from {} documents",
                report.vocab_size, report.vocab_docs
            );
            println!("training documents: {}", report.train_docs);
            println!("weights written to {}", manifest.weights_out.display());
            println!("stats written to {}", manifest.stats_out.display());
            println!(
                "final best training fitness: {:.2}",
                report.best_fitness * 100.0
            );
        }
        Command::Eval(args) => {
            let report = cli::eval(&args.weights, &args.test_dir, args.test_limit)?;
            println!("documents: {}", report.documents);
            println!("rouge1 mean: {:.2}", report.mean_score * 100.0);
            println!("precision: {:.2}", report.mean_precision * 100.0);
            println!("recall: {:.2}", report.mean_recall * 100.0);
            println!("f1: {:.2}", report.mean_f1 * 100.0);
        }
        Command::Summarize(args) => {
            for line in cli::summarize_file(&args.weights, &args.input)? {
                println!("{line}");
            }
        }
        Command::Grid(args) => {
            let base = manifest(
                &args.corpus,
                &args.ga,
                // Per-cell paths are derived inside the grid runner.
                args.out_dir.join("weights.txt"),
                args.out_dir.join("stats.csv"),
            );
            let rows = cli::experiment_grid(
                &base,
                &args.cells,
                &args.test_dir,
                args.test_limit,
                &args.out_dir,
                |cell, s| eprintln!("cell {cell} {}", progress_line(s)),
            )?;
            for row in &rows {
                println!(
                    "train {} vocab {}: train_score {:.2} test_score {:.2}",
                    row.train_size,
                    row.vocab_size,
                    row.train_score * 100.0,
                    row.test_score * 100.0
                );
            }
            println!(
                "summary written to {}",
                args.out_dir.join("summary.csv").display()
            );
        }
    }
    Ok(())
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")
            .unwrap_or_else(|err| {
                eprintln!("error: {err:#}");
                std::process::exit(1);
            });
    }
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
