//! Wedge products, signs and the induced inner product on forms.

use solvform::exterior::{basis, Monomial, Multivector};
use solvform::scalar::int;

fn main() -> solvform::Result<()> {
    let labels: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
    let x: Multivector = Multivector::generator(4, 0)?;
    let y = Multivector::generator(4, 1)?;
    let z = Multivector::generator(4, 2)?;

    let a = x.clone() + y.clone();
    let b = x.clone() - y.clone();
    println!("(x+y)^(x-y) = {}", a.wedge(&b)?.display_with(&labels));
    println!("y^x = {}", y.wedge(&x)?.display_with(&labels));

    let xy = x.wedge(&y)?;
    println!("(x^y)^z = {}", xy.wedge(&z)?.display_with(&labels));
    println!("z^(x^y) = {}", z.wedge(&xy)?.display_with(&labels));

    let form = Multivector::from_terms(
        4,
        [
            (Monomial::from_indices(&[0, 1]), int(3)),
            (Monomial::from_indices(&[2, 3]), int(-2)),
        ],
    );
    println!("|3 x^y - 2 z^w|^2 = {}", form.inner_product(&form)?);
    println!("self-wedge: {}", form.wedge(&form)?.display_with(&labels));

    for p in 0..=4 {
        println!("dim Λ^{p} = {}", basis(4, p).len());
    }
    Ok(())
}
