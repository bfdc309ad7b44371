//! Finite groups acting on the structure coframe by automorphisms, and the
//! invariant part of cohomology and of the harmonic algebra.
//!
//! A matrix `A` acts on coframe coordinates as columns: `e^j ↦ Σ_i A[i][j] e^i`,
//! extended multiplicatively to all forms.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::exterior::{basis, ExteriorMap, Multivector};
use crate::hodge::{FormalityVerdict, HodgeComplex, MetricFrame};
use crate::lie::LieAlgebra;
use crate::linalg::{independent_subset, Matrix};
use crate::scalar::{Rational, Scalar};

pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// A finite matrix group given by generators, with all elements listed in
/// breadth-first order from the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAction {
    dim: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
}

impl FiniteAction {
    pub fn closure(dim: usize, generators: Vec<Matrix>, cap: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if g.rows() != dim { g.rows() } else { g.cols() },
                });
            }
            if Scalar::is_zero(&g.determinant()) {
                return Err(Error::SingularGenerator(i));
            }
        }
        let id = Matrix::identity(dim);
        let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(FiniteAction {
            dim,
            generators,
            elements,
        })
    }

    pub fn trivial(dim: usize) -> Self {
        Self::closure(dim, Vec::new(), 1).expect("trivial group")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    fn maps(&self) -> Vec<ExteriorMap> {
        self.elements
            .iter()
            .map(|m| ExteriorMap::from_matrix(m).expect("square"))
            .collect()
    }

    /// `(1/|G|) Σ_g g·w`.
    pub fn average(&self, w: &Multivector) -> Result<Multivector> {
        let mut acc = Multivector::zero(w.dim());
        for map in self.maps() {
            acc = &acc + &map.apply(w)?;
        }
        Ok(acc.scale(&(Rational::one() / Rational::from_int(self.order() as i64))))
    }
}

/// Whether `A` commutes with `d` on 1-forms (and hence on all forms).
pub fn verify_automorphism(a: &Matrix, lie: &LieAlgebra) -> Result<bool> {
    let n = lie.dim();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.rows(),
        });
    }
    let map = ExteriorMap::from_matrix(a)?;
    for k in 0..n {
        let lhs = lie.differential(map.image_of_generator(k))?;
        let rhs = map.apply(lie.differential_of_generator(k))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every element of the group must be an automorphism.
pub fn check_automorphisms(lie: &LieAlgebra, action: &FiniteAction) -> Result<()> {
    if action.dim() != lie.dim() {
        return Err(Error::DimensionMismatch {
            expected: lie.dim(),
            found: action.dim(),
        });
    }
    for (i, g) in action.elements().iter().enumerate() {
        if !verify_automorphism(g, lie)? {
            return Err(Error::NotAutomorphism(i));
        }
    }
    Ok(())
}

/// Every element, rewritten in the orthonormal coframe, must be orthogonal.
pub fn check_isometries(frame: &MetricFrame, action: &FiniteAction) -> Result<()> {
    let c = frame.coframe();
    let c_inv_t = c.inverse().ok_or(Error::SingularFrame)?.transpose();
    let c_t = c.transpose();
    let id = Matrix::identity(frame.dim());
    for (i, g) in action.elements().iter().enumerate() {
        let q = &(&c_inv_t * g) * &c_t;
        if &q.transpose() * &q != id {
            return Err(Error::NotIsometry(i));
        }
    }
    Ok(())
}

/// Matrix of `g` on `H^p` in the basis of `lie.cohomology(p)` representatives.
pub fn cohomology_action_matrix(lie: &LieAlgebra, g: &Matrix, p: usize) -> Result<Matrix> {
    let n = lie.dim();
    let reps = lie.cohomology(p)?.representatives;
    let exact = lie.coboundaries(p)?;
    let b = basis(n, p);
    let columns: Vec<Vec<Rational>> = reps.iter().chain(&exact).map(|w| w.coords(&b)).collect();
    let system = Matrix::from_columns(b.len(), &columns);
    let map = ExteriorMap::from_matrix(g)?;
    let k = reps.len();
    let mut out = Matrix::zeros(k, k);
    for (j, r) in reps.iter().enumerate() {
        let image = map.apply(r)?.coords(&b);
        let coeffs = system.solve(&image).ok_or(Error::NotAutomorphism(0))?;
        for i in 0..k {
            out[(i, j)] = coeffs[i].clone();
        }
    }
    Ok(out)
}

/// `(1/|G|) Σ_g ρ(g)` on `H^p`.
pub fn averaging_projector(lie: &LieAlgebra, action: &FiniteAction, p: usize) -> Result<Matrix> {
    check_automorphisms(lie, action)?;
    let k = lie.cohomology(p)?.betti;
    let mut sum = Matrix::zeros(k, k);
    for g in action.elements() {
        sum = sum.add(&cohomology_action_matrix(lie, g, p)?);
    }
    Ok(sum.scale(&(Rational::one() / Rational::from_int(action.order() as i64))))
}

/// `dim (H^p)^G` for every `p`, as the rank of the averaging projector.
pub fn invariant_cohomology_dims(lie: &LieAlgebra, action: &FiniteAction) -> Result<Vec<usize>> {
    check_automorphisms(lie, action)?;
    (0..=lie.dim())
        .map(|p| Ok(averaging_projector(lie, action, p)?.rank()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFormality {
    /// Dimensions of the invariant harmonic forms per grade.
    pub dims: Vec<usize>,
    /// Invariant harmonic basis, per grade.
    pub harmonic: Vec<Vec<Multivector>>,
    pub verdict: FormalityVerdict,
    /// Verdict for the full harmonic algebra, before taking invariants.
    pub full_verdict: FormalityVerdict,
}

/// Formality of the algebra of `G`-invariant harmonic forms.
pub fn invariant_formality_check(
    lie: &LieAlgebra,
    frame: &MetricFrame,
    action: &FiniteAction,
) -> Result<InvariantFormality> {
    check_automorphisms(lie, action)?;
    check_isometries(frame, action)?;
    let hc = HodgeComplex::new(lie, frame)?;
    let full = hc.all_harmonic();
    let mut harmonic = Vec::with_capacity(full.len());
    for grade in &full {
        let averaged = grade
            .iter()
            .map(|h| action.average(h))
            .collect::<Result<Vec<_>>>()?;
        let b = basis(lie.dim(), harmonic.len());
        let coords: Vec<Vec<Rational>> = averaged.iter().map(|w| w.coords(&b)).collect();
        let keep = independent_subset(&coords);
        harmonic.push(
            keep.into_iter()
                .map(|i| averaged[i].clone())
                .collect::<Vec<_>>(),
        );
    }
    let flat_full: Vec<Multivector> = full.into_iter().flatten().collect();
    let flat_inv: Vec<Multivector> = harmonic.iter().flatten().cloned().collect();
    Ok(InvariantFormality {
        dims: harmonic.iter().map(Vec::len).collect(),
        verdict: hc.first_non_harmonic_product(&flat_inv)?,
        full_verdict: hc.first_non_harmonic_product(&flat_full)?,
        harmonic,
    })
}
