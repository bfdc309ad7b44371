//! Hodge star, codifferential and harmonic forms for a non-diagonal metric.

use solvform::exterior::Multivector;
use solvform::hodge::{hodge_diagnostics, HodgeComplex, MetricFrame};
use solvform::lie::LieAlgebra;
use solvform::linalg::Matrix;
use solvform::scalar::{int, rat};

fn main() -> solvform::Result<()> {
    let lie = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, 2, int(1))],
    )?;
    let labels = lie.labels().to_vec();
    // orthonormal coframe θ1 = x, θ2 = x + y, θ3 = z/2
    let frame = MetricFrame::new(Matrix::from_rows(vec![
        vec![int(1), int(0), int(0)],
        vec![int(1), int(1), int(0)],
        vec![int(0), int(0), rat(1, 2)],
    ])?)?;

    let x: Multivector = Multivector::generator(3, 0)?;
    let star_x = frame.hodge_star(&x)?;
    println!("*x = {}", star_x.display_with(&labels));
    println!("**x = {}", frame.hodge_star(&star_x)?.display_with(&labels));
    println!(
        "vol = {}",
        frame
            .volume::<solvform::scalar::Rational>()
            .display_with(&labels)
    );

    let xy = x.wedge(&Multivector::generator(3, 1)?)?;
    println!(
        "δ(x^y) = {}",
        frame.codifferential(&lie, &xy)?.display_with(&labels)
    );

    let hc = HodgeComplex::new(&lie, &frame)?;
    for p in 0..=3 {
        let basis: Vec<String> = hc
            .harmonic_basis(p)?
            .iter()
            .map(|h| h.display_with(&labels))
            .collect();
        println!("harmonic {p}-forms: [{}]", basis.join(", "));
    }
    let diag = hodge_diagnostics(&lie, &frame)?;
    println!(
        "harmonic dims {:?}, betti {:?}",
        diag.harmonic_dims(),
        diag.betti()
    );
    Ok(())
}
