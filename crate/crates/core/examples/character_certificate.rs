//! Formality certificates from character tables, including a relation
//! between symbolic weights and a complex weight.

use solvform::characters::{CharacterSystem, SymbolBasis, WeightValue};
use solvform::scalar::{int, rat};

fn main() -> solvform::Result<()> {
    // weights a, b, c of x, y, z with a + b + c = 0; t has weight 0
    let basis = SymbolBasis::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![vec![int(1), int(1), int(1), int(0)]],
    )?;
    let unit = |i: usize| {
        let mut v = vec![int(0); 4];
        v[i] = int(1);
        WeightValue::real(v)
    };
    let labels = vec!["x".into(), "y".into(), "z".into(), "t".into()];
    let system = CharacterSystem::new(
        basis,
        labels,
        vec![vec![unit(0), unit(1), unit(2), WeightValue::zero(4)]],
    )?;
    report(&system);

    // one symbol s with rotation angles ±2π/5 on x, y
    let basis = SymbolBasis::new(vec!["s".into()], vec![])?;
    let w = |re: i64, im: (i64, i64)| WeightValue {
        re: vec![int(re), int(0)],
        im2pi: rat(im.0, im.1),
    };
    let labels = vec!["x".into(), "y".into(), "z".into(), "t".into()];
    let row = vec![w(1, (1, 5)), w(1, (-1, 5)), w(-2, (0, 1)), w(0, (0, 1))];
    let system = CharacterSystem::new(basis, labels, vec![row])?;
    report(&system);
    Ok(())
}

fn report(system: &CharacterSystem) {
    let cert = system.mt_certificate().expect("certificate");
    let subsets: Vec<String> = cert
        .trivial_subsets
        .iter()
        .map(|s| {
            if s.is_empty() {
                "1".into()
            } else {
                s.iter()
                    .map(|&i| system.labels()[i].clone())
                    .collect::<Vec<_>>()
                    .join("^")
            }
        })
        .collect();
    println!(
        "betti {:?}, trivial monomials [{}], formal = {}",
        cert.betti,
        subsets.join(", "),
        cert.formal
    );
    println!("replayed: {:?}", cert.verify(system));
}
