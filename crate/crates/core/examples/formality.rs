//! Geometric formality: search for two harmonic forms with a non-harmonic
//! product.

use rand::SeedableRng;
use solvform::catalog::{self, Route};
use solvform::hodge::{formality_check, FormalityVerdict, MetricFrame};
use solvform::random;

fn main() -> solvform::Result<()> {
    for name in ["example_5_6", "nil3", "sol4_1", "e3"] {
        let entry = catalog::get(name)?;
        let Route::CeHodge { lie, frame } = entry.route else {
            continue;
        };
        match formality_check(&lie, &frame)? {
            FormalityVerdict::Formal => println!("{name}: formal"),
            FormalityVerdict::NotFormal(w) => println!(
                "{name}: not formal, {} ^ {} = {} is {}",
                w.left.display_with(&entry.labels),
                w.right.display_with(&entry.labels),
                w.product.display_with(&entry.labels),
                w.failure.as_str(),
            ),
        }
    }

    // sol4_1 stays formal under other invariant metrics
    let Route::CeHodge { lie, .. } = catalog::get("sol4_1")?.route else {
        unreachable!()
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let formal = (0..10)
        .filter(|_| {
            let frame = MetricFrame::new(random::random_coframe(&mut rng, 4)).unwrap();
            formality_check(&lie, &frame).unwrap().is_formal()
        })
        .count();
    println!("sol4_1: {formal}/10 random metrics formal");
    Ok(())
}
