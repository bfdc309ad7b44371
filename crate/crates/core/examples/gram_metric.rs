//! A metric given by its Gram matrix on the structure basis, factored into a
//! rational orthonormal coframe.

use solvform::hodge::{harmonic_basis, MetricFrame};
use solvform::lie::LieAlgebra;
use solvform::linalg::Matrix;
use solvform::scalar::{int, rat};

fn main() -> solvform::Result<()> {
    let gram = Matrix::from_rows(vec![
        vec![int(4), int(2), int(0)],
        vec![int(2), int(5), int(0)],
        vec![int(0), int(0), rat(9, 4)],
    ])?;
    let frame = MetricFrame::from_gram(&gram)?;
    println!("coframe rows:");
    for r in frame.coframe().to_rows() {
        println!(
            "  {}",
            r.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    println!(
        "recovered gram equals input: {}",
        frame.metric_tensor() == gram
    );

    let lie = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, 2, int(1))],
    )?;
    let labels = lie.labels().to_vec();
    for p in 1..=2 {
        let h: Vec<String> = harmonic_basis(&lie, &frame, p)?
            .iter()
            .map(|w| w.display_with(&labels))
            .collect();
        println!("harmonic {p}-forms: [{}]", h.join(", "));
    }

    let irrational = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(2)]])?;
    println!("{}", MetricFrame::from_gram(&irrational).unwrap_err());
    Ok(())
}
