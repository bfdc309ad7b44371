//! Seeded random solvable algebras: nilpotent towers and their diagonal
//! extensions, with duality and harmonic checks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use solvform::hodge::{HodgeComplex, MetricFrame};
use solvform::random;

fn main() -> solvform::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..8 {
        let unimodular = i % 2 == 0;
        let lie = random::random_algebra(&mut rng, 5, unimodular)?;
        let frame = MetricFrame::new(random::random_coframe(&mut rng, lie.dim()))?;
        let harmonic: Vec<usize> = HodgeComplex::new(&lie, &frame)?
            .all_harmonic()
            .iter()
            .map(Vec::len)
            .collect();
        println!(
            "dim {} unimodular {:<5} brackets {:>2} betti {:?} harmonic {:?}",
            lie.dim(),
            lie.is_unimodular(),
            lie.structure_constants().nonzero().len(),
            lie.betti_numbers(),
            harmonic
        );
    }
    let s = random::random_character_system(&mut rng, 8)?;
    println!(
        "character system on {} covectors: betti {:?}",
        s.covectors(),
        s.betti_table()
    );
    Ok(())
}
