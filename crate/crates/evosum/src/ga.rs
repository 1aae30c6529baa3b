//! Generational genetic algorithm over per-token weight vectors.
//!
//! # Randomness
//!
//! Every run is driven by a single ChaCha8 stream seeded from
//! [`GaConfig::seed`]. Draws are consumed in a fixed order:
//!
//! 1. Initialization: one uniform [0, 1] draw per gene, individual by
//!    individual, gene by gene.
//! 2. Per generation: selection first — `population_size` tournaments, each
//!    consuming `tournament_size` index draws (`gen_range(0..population)`).
//!    Then crossover — one [0, 1) gate draw per consecutive parent pair;
//!    when the gate fires and the chromosome has at least two genes, one
//!    draw for the first cut (`gen_range(0..len)`) then one for the second
//!    (`gen_range(first+1..=len)`); an unpaired trailing parent consumes
//!    nothing. Then mutation — one [0, 1) draw per gene of every offspring.
//!
//! Fitness evaluation consumes no randomness and may therefore run in
//! parallel without perturbing results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::corpus::Document;
use crate::error::{Error, Result};
use crate::rouge::rouge1;
use crate::summarizer::{summarize, Chromosome};
use crate::vocab::Vocabulary;

/// Run parameters. Defaults: population 100, 15 generations, crossover rate
/// 0.8, per-gene deletion rate 0.01, tournament size 5, threshold 0.6.
#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    pub population_size: usize,
    pub generations: usize,
    pub crossover_rate: f64,
    pub mutation_gene_rate: f64,
    pub tournament_size: usize,
    pub threshold: f64,
    pub seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        GaConfig {
            population_size: 100,
            generations: 15,
            crossover_rate: 0.8,
            mutation_gene_rate: 0.01,
            tournament_size: 5,
            threshold: 0.6,
            seed: 0,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::InvalidConfig(
                "population size must be positive".into(),
            ));
        }
        if self.tournament_size == 0 || self.tournament_size > self.population_size {
            return Err(Error::InvalidConfig(format!(
                "tournament size {} must be in 1..={}",
                self.tournament_size, self.population_size
            )));
        }
        for (name, value) in [
            ("crossover rate", self.crossover_rate),
            ("mutation rate", self.mutation_gene_rate),
            ("threshold", self.threshold),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidConfig(format!(
                    "{name} {value} must be in [0, 1]"
                )));
            }
        }
        Ok(())
    }
}

/// Fitness summary of one generation. `generation` 0 is the freshly
/// initialized population.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationStats {
    pub generation: usize,
    pub min_fitness: f64,
    pub mean_fitness: f64,
    pub max_fitness: f64,
    pub best_so_far: f64,
}

/// Result of a training run: the vocabulary trained against, the best
/// individual ever evaluated, and the per-generation statistics.
#[derive(Debug, Clone)]
pub struct TrainedModel {
    pub vocabulary: Vocabulary,
    pub best: Chromosome,
    pub config: GaConfig,
    pub stats: Vec<GenerationStats>,
}

impl TrainedModel {
    /// Training fitness of the best individual.
    pub fn best_fitness(&self) -> f64 {
        self.stats.last().map_or(0.0, |s| s.best_so_far)
    }
}

/// Random population: every gene uniform on [0, 1] inclusive.
pub fn init_population(
    rng: &mut impl Rng,
    vocab_size: usize,
    population_size: usize,
) -> Vec<Chromosome> {
    (0..population_size)
        .map(|_| {
            let weights = (0..vocab_size).map(|_| rng.gen_range(0.0..=1.0)).collect();
            Chromosome::from_weights_unchecked(weights)
        })
        .collect()
}

/// Swap the gene segment `[i, j)` between two equal-length parents.
pub(crate) fn two_point_crossover_at(
    a: &Chromosome,
    b: &Chromosome,
    i: usize,
    j: usize,
) -> (Chromosome, Chromosome) {
    debug_assert!(i < j && j <= a.len() && a.len() == b.len());
    let mut first = a.weights().to_vec();
    let mut second = b.weights().to_vec();
    first[i..j].copy_from_slice(&b.weights()[i..j]);
    second[i..j].copy_from_slice(&a.weights()[i..j]);
    (
        Chromosome::from_weights_unchecked(first),
        Chromosome::from_weights_unchecked(second),
    )
}

/// Two-point crossover: cuts `i < j` are drawn with `i` uniform over
/// `0..len` and `j` uniform over `i+1..=len`, and the segment `[i, j)` is
/// swapped. A non-empty segment always moves.
pub fn two_point_crossover(
    rng: &mut impl Rng,
    a: &Chromosome,
    b: &Chromosome,
) -> Result<(Chromosome, Chromosome)> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    let len = a.len();
    let i = rng.gen_range(0..len);
    let j = rng.gen_range(i + 1..=len);
    Ok(two_point_crossover_at(a, b, i, j))
}

/// Deletion mutation: each gene is zeroed independently with probability
/// `gene_rate`.
pub fn deletion_mutation(rng: &mut impl Rng, mut c: Chromosome, gene_rate: f64) -> Chromosome {
    for w in c.weights_mut() {
        if rng.gen::<f64>() < gene_rate {
            *w = 0.0;
        }
    }
    c
}

/// Tournament selection: draw `k` contestants uniformly with replacement and
/// copy the fittest; ties go to the lowest population index.
pub fn tournament_select(
    rng: &mut impl Rng,
    population: &[Chromosome],
    fitnesses: &[f64],
    k: usize,
) -> Chromosome {
    debug_assert!(!population.is_empty() && population.len() == fitnesses.len() && k >= 1);
    let mut best = rng.gen_range(0..population.len());
    for _ in 1..k {
        let contender = rng.gen_range(0..population.len());
        if fitnesses[contender] > fitnesses[best]
            || (fitnesses[contender] == fitnesses[best] && contender < best)
        {
            best = contender;
        }
    }
    population[best].clone()
}

/// Mean ROUGE-1 sub-metric average of the chromosome's summaries over the
/// corpus. Deterministic; no randomness is consumed.
pub fn evaluate_fitness(
    chromosome: &Chromosome,
    corpus: &[Document],
    vocab: &Vocabulary,
    threshold: f64,
) -> Result<f64> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut total = 0.0;
    for doc in corpus {
        let summary = summarize(doc, chromosome, vocab, threshold)?;
        total += rouge1(summary.tokens(), doc.reference())?.mean();
    }
    Ok(total / corpus.len() as f64)
}

/// Fitness of every individual, evaluated in parallel. Results are ordered
/// like the population and identical to sequential evaluation.
pub fn evaluate_population(
    population: &[Chromosome],
    corpus: &[Document],
    vocab: &Vocabulary,
    threshold: f64,
) -> Result<Vec<f64>> {
    population
        .par_iter()
        .map(|c| evaluate_fitness(c, corpus, vocab, threshold))
        .collect()
}

struct HallOfFame {
    best: Chromosome,
    fitness: f64,
}

impl HallOfFame {
    fn record(&mut self, population: &[Chromosome], fitnesses: &[f64]) {
        for (individual, &fitness) in population.iter().zip(fitnesses) {
            if fitness > self.fitness {
                self.fitness = fitness;
                self.best = individual.clone();
            }
        }
    }
}

fn generation_stats(generation: usize, fitnesses: &[f64], best_so_far: f64) -> GenerationStats {
    let min = fitnesses.iter().copied().fold(f64::INFINITY, f64::min);
    let max = fitnesses.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = fitnesses.iter().sum::<f64>() / fitnesses.len() as f64;
    GenerationStats {
        generation,
        min_fitness: min,
        mean_fitness: mean,
        max_fitness: max,
        best_so_far,
    }
}

/// Run the generational loop: evaluate the initial population, then for each
/// generation select parents by tournament, cross consecutive pairs with
/// probability `crossover_rate`, mutate every offspring, and re-evaluate.
///
/// The returned model carries the best individual ever evaluated, which
/// survives outside the population. `progress` receives each generation's
/// statistics as they are produced.
pub fn evolve(
    config: &GaConfig,
    corpus: &[Document],
    vocab: &Vocabulary,
    mut progress: impl FnMut(&GenerationStats),
) -> Result<TrainedModel> {
    config.validate()?;
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if vocab.is_empty() {
        return Err(Error::EmptyVocabulary);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut population = init_population(&mut rng, vocab.len(), config.population_size);
    let mut fitnesses = evaluate_population(&population, corpus, vocab, config.threshold)?;

    let mut hall = HallOfFame {
        best: population[0].clone(),
        fitness: f64::NEG_INFINITY,
    };
    hall.record(&population, &fitnesses);

    let mut stats = Vec::with_capacity(config.generations + 1);
    let first = generation_stats(0, &fitnesses, hall.fitness);
    progress(&first);
    stats.push(first);

    for generation in 1..=config.generations {
        let parents: Vec<Chromosome> = (0..config.population_size)
            .map(|_| tournament_select(&mut rng, &population, &fitnesses, config.tournament_size))
            .collect();

        let mut offspring = Vec::with_capacity(config.population_size);
        let mut pairs = parents.chunks_exact(2);
        for pair in &mut pairs {
            if rng.gen::<f64>() < config.crossover_rate && pair[0].len() >= 2 {
                let (c1, c2) = two_point_crossover(&mut rng, &pair[0], &pair[1])?;
                offspring.push(c1);
                offspring.push(c2);
            } else {
                offspring.push(pair[0].clone());
                offspring.push(pair[1].clone());
            }
        }
        offspring.extend(pairs.remainder().iter().cloned());

        population = offspring
            .into_iter()
            .map(|c| deletion_mutation(&mut rng, c, config.mutation_gene_rate))
            .collect();
        fitnesses = evaluate_population(&population, corpus, vocab, config.threshold)?;
        hall.record(&population, &fitnesses);

        let record = generation_stats(generation, &fitnesses, hall.fitness);
        progress(&record);
        stats.push(record);
    }

    Ok(TrainedModel {
        vocabulary: vocab.clone(),
        best: hall.best,
        config: config.clone(),
        stats,
    })
}
