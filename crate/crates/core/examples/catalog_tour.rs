//! Every built-in example with its recomputed Betti numbers and verdict.

use solvform::catalog::{self, Route};
use solvform::hodge::formality_check;

fn main() -> solvform::Result<()> {
    for name in catalog::list() {
        let entry = catalog::get(name)?;
        let (betti, formal) = match &entry.route {
            Route::CeHodge { lie, frame } => (
                lie.betti_numbers(),
                formality_check(lie, frame)?.is_formal(),
            ),
            Route::Characters(s) => {
                let cert = s.mt_certificate()?;
                (cert.betti, cert.formal)
            }
        };
        assert_eq!(betti, entry.expected.betti);
        println!(
            "{:<12} {:<10} betti {:?} {}",
            entry.name,
            entry.route.as_str(),
            betti,
            if formal { "formal" } else { "not formal" }
        );
        for note in &entry.annotations {
            println!("    {note}");
        }
    }
    Ok(())
}
