//! Built-in solvable geometries and worked examples.
//!
//! Entries either carry structure constants with an orthonormal coframe
//! (`ce_hodge`) or a character table (`characters`).

use crate::characters::{CharacterSystem, SymbolBasis, WeightValue};
use crate::error::{Error, Result};
use crate::hodge::MetricFrame;
use crate::lie::LieAlgebra;
use crate::scalar::{int, rat, Rational};

const NAMES: [&str; 12] = [
    "e3",
    "e4",
    "nil3",
    "nil3xE",
    "nil4",
    "sol3",
    "sol3xE",
    "sol4_mn",
    "sol4_0",
    "sol4_1",
    "example_5_6",
    "example_INO",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    CeHodge { lie: LieAlgebra, frame: MetricFrame },
    Characters(CharacterSystem),
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::CeHodge { .. } => "ce_hodge",
            Route::Characters(_) => "characters",
        }
    }
}

/// Values the engine must reproduce for an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub betti: Vec<usize>,
    pub formal: bool,
    /// Witness pair, rendered with the entry's labels.
    pub witness: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub route: Route,
    pub annotations: Vec<String>,
    pub expected: Expected,
}

pub fn list() -> Vec<&'static str> {
    NAMES.to_vec()
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn ce_entry(
    name: &str,
    names: &[&str],
    brackets: &[(usize, usize, usize, Rational)],
    annotations: &[&str],
    expected: Expected,
) -> Result<CatalogEntry> {
    let lie = LieAlgebra::from_brackets(labels(names), brackets)?;
    Ok(CatalogEntry {
        name: name.into(),
        dim: names.len(),
        labels: labels(names),
        route: Route::CeHodge {
            frame: MetricFrame::identity(names.len()),
            lie,
        },
        annotations: annotations.iter().map(|s| s.to_string()).collect(),
        expected,
    })
}

/// Weight value `Σ coeffs[s]·symbol_s + 2πi·im2pi`.
fn weight(width: usize, coeffs: &[(usize, i64)], im2pi: Rational) -> WeightValue {
    let mut re = vec![int(0); width];
    for &(s, c) in coeffs {
        re[s] = int(c);
    }
    WeightValue { re, im2pi }
}

fn char_entry(
    name: &str,
    names: &[&str],
    basis: SymbolBasis,
    table: Vec<Vec<WeightValue>>,
    annotations: &[&str],
    betti: Vec<usize>,
) -> Result<CatalogEntry> {
    let system = CharacterSystem::new(basis, labels(names), table)?;
    Ok(CatalogEntry {
        name: name.into(),
        dim: names.len(),
        labels: labels(names),
        route: Route::Characters(system),
        annotations: annotations.iter().map(|s| s.to_string()).collect(),
        expected: Expected {
            betti,
            formal: true,
            witness: None,
        },
    })
}

fn formal(betti: Vec<usize>) -> Expected {
    Expected {
        betti,
        formal: true,
        witness: None,
    }
}

fn not_formal(betti: Vec<usize>, witness: Option<(&str, &str)>) -> Expected {
    Expected {
        betti,
        formal: false,
        witness: witness.map(|(a, b)| (a.into(), b.into())),
    }
}

pub fn get(name: &str) -> Result<CatalogEntry> {
    let one = int(1);
    let zero = || rat(0, 1);
    match name {
        "e3" => ce_entry(
            name,
            &["x", "y", "z"],
            &[],
            &["metric dx^2+dy^2+dz^2"],
            formal(vec![1, 3, 3, 1]),
        ),
        "e4" => ce_entry(
            name,
            &["x", "y", "z", "t"],
            &[],
            &["metric dx^2+dy^2+dz^2+dt^2"],
            formal(vec![1, 4, 6, 4, 1]),
        ),
        "nil3" => ce_entry(
            name,
            &["x", "y", "z"],
            &[(0, 1, 2, one)],
            &["coframe {dx, dy, dz-x dy}; metric dx^2+dy^2+(dz-x dy)^2"],
            not_formal(vec![1, 2, 2, 1], Some(("x", "y"))),
        ),
        "nil3xE" => ce_entry(
            name,
            &["x", "y", "z", "t"],
            &[(0, 1, 2, one)],
            &["coframe {dx, dy, dz-x dy, dt}; metric dx^2+dy^2+(dz-x dy)^2+dt^2"],
            not_formal(vec![1, 3, 4, 3, 1], Some(("x", "y"))),
        ),
        "nil4" => ce_entry(
            name,
            &["e1", "e2", "e3", "e4"],
            &[(0, 1, 2, one.clone()), (0, 2, 3, one)],
            &[
                "filiform constants [e1,e2]=e3, [e1,e3]=e4 with the identity orthonormal frame",
                "chosen over the coframe dz-t dy+t^2/2 dx, which is not left-invariant \
                 for these constants",
            ],
            not_formal(vec![1, 2, 2, 2, 1], None),
        ),
        "sol4_1" => ce_entry(
            name,
            &["x", "y", "z", "t"],
            &[(0, 3, 0, int(-1)), (1, 3, 1, int(1)), (0, 1, 2, int(1))],
            &[
                "orthonormal coframe {e^-t dx, e^t dy, dz-x dy, dt}",
                "d e1 = e1^e4, d e2 = -e2^e4, d e3 = -e1^e2, d e4 = 0",
                "completely solvable, so invariant cohomology computes the cohomology of G/Γ",
            ],
            formal(vec![1, 1, 0, 1, 1]),
        ),
        "example_5_6" => ce_entry(
            name,
            &["x", "y", "z", "w"],
            &[(2, 0, 0, int(1)), (2, 0, 3, int(1)), (2, 1, 1, int(-1))],
            &[
                "dx = -z^x, dy = z^y, dz = 0, dw = -z^x",
                "metric x^2+y^2+z^2+w^2",
            ],
            not_formal(vec![1, 2, 2, 2, 1], Some(("z", "w-x"))),
        ),
        "sol3" => {
            let b = SymbolBasis::new(labels(&["a"]), vec![])?;
            char_entry(
                name,
                &["x", "y", "z"],
                b,
                vec![vec![
                    weight(2, &[(0, 1)], zero()),
                    weight(2, &[(0, -1)], zero()),
                    weight(2, &[], zero()),
                ]],
                &[
                    "R acting on R^2 by diag(e^t, e^-t); a = log of the lattice eigenvalue",
                    "metric e^2z dx^2+e^-2z dy^2+dz^2",
                ],
                vec![1, 1, 1, 1],
            )
        }
        "sol3xE" => {
            let b = SymbolBasis::new(labels(&["a"]), vec![])?;
            char_entry(
                name,
                &["x", "y", "z", "t"],
                b,
                vec![
                    vec![
                        weight(2, &[(0, 1)], zero()),
                        weight(2, &[(0, -1)], zero()),
                        weight(2, &[], zero()),
                        weight(2, &[], zero()),
                    ],
                    vec![weight(2, &[], zero()); 4],
                ],
                &["metric e^2z dx^2+e^-2z dy^2+dz^2+dt^2"],
                vec![1, 2, 2, 2, 1],
            )
        }
        "sol4_mn" => {
            let b = SymbolBasis::new(
                labels(&["a", "b", "c"]),
                vec![vec![int(1), int(1), int(1), int(0)]],
            )?;
            char_entry(
                name,
                &["x", "y", "z", "t"],
                b,
                vec![vec![
                    weight(4, &[(0, 1)], zero()),
                    weight(4, &[(1, 1)], zero()),
                    weight(4, &[(2, 1)], zero()),
                    weight(4, &[], zero()),
                ]],
                &[
                    "e^a, e^b, e^c distinct roots of X^3-mX^2+nX-1, so a+b+c = 0",
                    "metric e^-2at dx^2+e^-2bt dy^2+e^-2ct dz^2+dt^2",
                ],
                vec![1, 1, 0, 1, 1],
            )
        }
        "sol4_0" => {
            let b = SymbolBasis::new(labels(&["a"]), vec![])?;
            char_entry(
                name,
                &["x", "y", "z", "t"],
                b,
                vec![vec![
                    weight(2, &[(0, 1)], zero()),
                    weight(2, &[(0, 1)], zero()),
                    weight(2, &[(0, -2)], zero()),
                    weight(2, &[], zero()),
                ]],
                &[
                    "no lattice: only Lie-algebra-level results are meaningful",
                    "metric e^-2t dx^2+e^-2t dy^2+e^4t dz^2+dt^2",
                ],
                vec![1, 1, 0, 1, 1],
            )
        }
        "example_INO" => {
            let b = SymbolBasis::new(labels(&["s"]), vec![])?;
            char_entry(
                name,
                &["x", "y", "z", "t"],
                b,
                vec![vec![
                    weight(2, &[(0, 1)], rat(1, 5)),
                    weight(2, &[(0, 1)], rat(-1, 5)),
                    weight(2, &[(0, -2)], zero()),
                    weight(2, &[], zero()),
                ]],
                &[
                    "G = Sol^4_0 has no lattice; Γ lives in H, which rotates the (x,y) plane",
                    "the rotation angle 2π/5 is illustrative; any value gives the same table",
                ],
                vec![1, 1, 0, 1, 1],
            )
        }
        _ => Err(Error::UnknownEntry(name.to_string())),
    }
}
