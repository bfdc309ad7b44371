//! Chevalley–Eilenberg differential, Betti numbers and cohomology
//! representatives from structure constants.

use solvform::lie::LieAlgebra;
use solvform::scalar::int;

fn main() -> solvform::Result<()> {
    // [x, y] = z
    let heisenberg = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, 2, int(1))],
    )?;
    let labels = heisenberg.labels().to_vec();
    for k in 0..3 {
        println!(
            "d {} = {}",
            labels[k],
            heisenberg
                .differential_of_generator(k)
                .display_with(&labels)
        );
    }
    println!("betti = {:?}", heisenberg.betti_numbers());
    for p in 0..=3 {
        let h = heisenberg.cohomology(p)?;
        let reps: Vec<String> = h
            .representatives
            .iter()
            .map(|r| r.display_with(&labels))
            .collect();
        println!("H^{p}: {}", reps.join(", "));
    }

    // [t, x] = x, [t, y] = -y: unimodular
    let sol = LieAlgebra::diagonal_extension(&[int(1), int(-1)])?;
    println!(
        "sol3: unimodular = {}, betti = {:?}",
        sol.is_unimodular(),
        sol.betti_numbers()
    );

    // [t, x] = x: Poincaré duality fails
    let affine = LieAlgebra::diagonal_extension(&[int(1)])?;
    println!(
        "aff: unimodular = {}, betti = {:?}",
        affine.is_unimodular(),
        affine.betti_numbers()
    );

    // [x, y] = z together with [x, z] = x violates Jacobi
    let broken = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, 2, int(1)), (0, 2, 0, int(1))],
    );
    println!("broken: {}", broken.unwrap_err());
    Ok(())
}
