//! Cohomology invariant under a finite group of automorphisms, and formality
//! of the invariant harmonic forms.

use solvform::action::{averaging_projector, invariant_formality_check, FiniteAction};
use solvform::hodge::MetricFrame;
use solvform::lie::LieAlgebra;
use solvform::linalg::Matrix;
use solvform::scalar::int;

fn main() -> solvform::Result<()> {
    let h = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, 2, int(1))],
    )?;
    let frame = MetricFrame::identity(3);

    let sign = FiniteAction::closure(3, vec![Matrix::diagonal(&[int(-1), int(-1), int(1)])], 100)?;
    let rotation = FiniteAction::closure(
        3,
        vec![Matrix::from_rows(vec![
            vec![int(0), int(-1), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(1)],
        ])?],
        100,
    )?;
    for (name, action) in [("sign", &sign), ("rotation", &rotation)] {
        let inv = invariant_formality_check(&h, &frame, action)?;
        println!(
            "{name}: order {}, invariant dims {:?}, invariant formal = {}, full formal = {}",
            action.order(),
            inv.dims,
            inv.verdict.is_formal(),
            inv.full_verdict.is_formal()
        );
    }
    let proj = averaging_projector(&h, &sign, 1)?;
    println!("projector on H^1 has rank {}", proj.rank());

    let torus = LieAlgebra::abelian(3)?;
    let antipodal =
        FiniteAction::closure(3, vec![Matrix::diagonal(&[int(-1), int(-1), int(-1)])], 100)?;
    let inv = invariant_formality_check(&torus, &frame, &antipodal)?;
    println!("T^3 / ±1: invariant dims {:?}", inv.dims);
    Ok(())
}
