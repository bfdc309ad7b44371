//! Conversions from library values into the oracle's plain representations.

#![allow(dead_code)]

use num_rational::BigRational as Q;
use num_traits::Zero;

use solvform::characters::CharacterSystem;
use solvform::exterior::Multivector;
use solvform::hodge::MetricFrame;
use solvform::lie::LieAlgebra;
use solvform::linalg::Matrix;

use crate::oracle::{tuples, Brackets, CharValue};

pub fn brackets(lie: &LieAlgebra) -> Brackets {
    Brackets::new(lie.dim(), &lie.structure_constants().nonzero())
}

pub fn dense(w: &Multivector, p: usize) -> Vec<Q> {
    let ts = tuples(w.dim(), p);
    let mut out = vec![Q::zero(); ts.len()];
    for (m, c) in w.terms() {
        let idx: Vec<usize> = m.indices().collect();
        assert_eq!(idx.len(), p, "form is not of pure grade {p}");
        let pos = ts.iter().position(|t| *t == idx).unwrap();
        out[pos] = c.clone();
    }
    out
}

pub fn rows(m: &Matrix) -> Vec<Vec<Q>> {
    m.to_rows()
}

pub fn coframe(frame: &MetricFrame) -> Vec<Vec<Q>> {
    frame.coframe().to_rows()
}

pub fn char_data(s: &CharacterSystem) -> (Vec<Vec<Q>>, Vec<Vec<CharValue>>) {
    let table = s
        .table()
        .iter()
        .map(|row| {
            row.iter()
                .map(|w| CharValue {
                    re: w.re.clone(),
                    im2pi: w.im2pi.clone(),
                })
                .collect()
        })
        .collect();
    (s.basis().relations().to_vec(), table)
}
