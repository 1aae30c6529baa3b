//! The genetic operators in isolation: seeded initialization, two-point
//! crossover, deletion mutation, and tournament selection.
//!
//! Run with: `cargo run --example ga_operators`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use evosum::{deletion_mutation, init_population, tournament_select, two_point_crossover};

fn row(label: &str, weights: &[f64]) {
    let cells: Vec<String> = weights.iter().map(|w| format!("{w:.2}")).collect();
    println!("{label:<10} [{}]", cells.join(", "));
}

fn main() -> evosum::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let population = init_population(&mut rng, 8, 4);
    println!("initial population (seed 7):");
    for (i, c) in population.iter().enumerate() {
        row(&format!("  ind {i}"), c.weights());
    }

    let (child1, child2) = two_point_crossover(&mut rng, &population[0], &population[1])?;
    println!("\ntwo-point crossover of ind 0 and ind 1:");
    row("  child 1", child1.weights());
    row("  child 2", child2.weights());

    let mutated = deletion_mutation(&mut rng, child1.clone(), 0.25);
    println!("\ndeletion mutation of child 1 at rate 0.25:");
    row("  before", child1.weights());
    row("  after", mutated.weights());

    let fitnesses = [0.2, 0.9, 0.4, 0.7];
    println!("\ntournament selection (k = 2, fitnesses {fitnesses:?}), 8 draws:");
    for _ in 0..8 {
        let winner = tournament_select(&mut rng, &population, &fitnesses, 2);
        let idx = population.iter().position(|c| *c == winner).unwrap();
        print!("ind {idx}  ");
    }
    println!();
    Ok(())
}
