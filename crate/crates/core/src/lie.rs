//! Lie algebras given by rational structure constants and their
//! Chevalley–Eilenberg complex `(Λ g*, d)`.
//!
//! Convention: `dα(X, Y) = −α([X, Y])`, so on the dual coframe
//! `d e^k = −Σ_{i<j} c_{ij}^k e^i ∧ e^j` where `[e_i, e_j] = Σ_k c_{ij}^k e_k`.
//! `d` is extended to all of `Λ g*` as a degree +1 derivation.

use thiserror::Error;

use crate::error::{Error, Result};
use crate::exterior::{basis, default_labels, Monomial, Multivector, MAX_DIM};
use crate::linalg::{independent_subset, Matrix};
use crate::scalar::{Rational, Scalar};

/// A generator triple on which the Jacobi identity fails, with the defect
/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` in the basis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Jacobi identity fails for generators ({}, {}, {})", .triple[0], .triple[1], .triple[2])]
pub struct JacobiViolation {
    pub triple: [usize; 3],
    pub defect: Vec<Rational>,
}

/// Raw antisymmetric structure constants, not yet checked for Jacobi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    labels: Vec<String>,
    // c[(i * n + j) * n + k] = c_{ij}^k, kept antisymmetric in (i, j)
    c: Vec<Rational>,
}

impl StructureConstants {
    pub fn new(dim: usize) -> Result<Self> {
        Self::with_labels(default_labels(dim))
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidBracket("dimension must be at least 1".into()));
        }
        if dim > MAX_DIM {
            return Err(Error::TooLarge { dim, max: MAX_DIM });
        }
        Ok(StructureConstants {
            dim,
            labels,
            c: vec![Rational::zero(); dim * dim * dim],
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Sets the `e_k` component of `[e_i, e_j]` (and of `[e_j, e_i]` with the
    /// opposite sign).
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Rational) -> Result<()> {
        for index in [i, j, k] {
            if index >= self.dim {
                return Err(Error::IndexOutOfRange {
                    index,
                    dim: self.dim,
                });
            }
        }
        if i == j {
            if Scalar::is_zero(&c) {
                return Ok(());
            }
            return Err(Error::InvalidBracket(format!("[e{i}, e{i}] must vanish")));
        }
        let a = self.idx(i, j, k);
        let b = self.idx(j, i, k);
        self.c[b] = -c.clone();
        self.c[a] = c;
        Ok(())
    }

    /// `c_{ij}^k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.idx(i, j, k)]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }

    /// Nonzero `(i, j, k, c)` with `i < j`, in lexicographic order.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !Scalar::is_zero(c) {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if Scalar::is_zero(&x[i]) {
                continue;
            }
            for j in 0..n {
                if Scalar::is_zero(&y[j]) || i == j {
                    continue;
                }
                let f = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !Scalar::is_zero(c) {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }
}

/// Checks the Jacobi identity on every generator triple `i < j < k`;
/// reports the first failing triple in lexicographic order.
///
/// Equivalent to `d ∘ d = 0` on 1-forms.
pub fn validate_jacobi(sc: &StructureConstants) -> std::result::Result<(), JacobiViolation> {
    let n = sc.dim;
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (ei, ej, ek) = (unit(i), unit(j), unit(k));
                let a = sc.bracket_vec(&sc.bracket(i, j), &ek);
                let b = sc.bracket_vec(&sc.bracket(j, k), &ei);
                let c = sc.bracket_vec(&sc.bracket(k, i), &ej);
                let defect: Vec<Rational> = a
                    .into_iter()
                    .zip(b)
                    .zip(c)
                    .map(|((x, y), z)| x + y + z)
                    .collect();
                if defect.iter().any(|x| !Scalar::is_zero(x)) {
                    return Err(JacobiViolation {
                        triple: [i, j, k],
                        defect,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Cohomology of the Chevalley–Eilenberg complex in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degree: usize,
    pub betti: usize,
    /// Cocycles spanning a complement of the coboundaries, reduced against
    /// the echelon basis of the coboundaries.
    pub representatives: Vec<Multivector>,
}

/// A Lie algebra whose structure constants satisfy the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    sc: StructureConstants,
    dgen: Vec<Multivector>,
}

impl LieAlgebra {
    pub fn new(sc: StructureConstants) -> Result<Self> {
        validate_jacobi(&sc)?;
        let n = sc.dim;
        let dgen = (0..n)
            .map(|k| {
                let mut terms = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        let c = sc.get(i, j, k);
                        if !Scalar::is_zero(c) {
                            terms.push((Monomial::from_indices(&[i, j]), -c.clone()));
                        }
                    }
                }
                Multivector::from_terms(n, terms)
            })
            .collect();
        Ok(LieAlgebra { sc, dgen })
    }

    /// Builds an algebra from `(i, j, k, c)` entries meaning `[e_i, e_j] ∋ c e_k`.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let mut sc = StructureConstants::with_labels(labels)?;
        for (i, j, k, c) in brackets {
            sc.set(*i, *j, *k, c.clone())?;
        }
        Self::new(sc)
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new(StructureConstants::new(dim)?)
    }

    /// `ℝ ⋉ ℝ^m` with `[t, x_i] = λ_i x_i`; `t` is the last generator.
    pub fn diagonal_extension(weights: &[Rational]) -> Result<Self> {
        let m = weights.len();
        let mut labels: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
        labels.push("t".into());
        let mut sc = StructureConstants::with_labels(labels)?;
        for (i, w) in weights.iter().enumerate() {
            sc.set(m, i, i, w.clone())?;
        }
        Self::new(sc)
    }

    pub fn dim(&self) -> usize {
        self.sc.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.sc.labels
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    /// `d e^k`.
    pub fn differential_of_generator(&self, k: usize) -> &Multivector {
        &self.dgen[k]
    }

    pub fn differential<S: Scalar>(&self, w: &Multivector<S>) -> Result<Multivector<S>> {
        let n = self.dim();
        if w.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: w.dim(),
            });
        }
        let mut out = Multivector::zero(n);
        for (m, c) in w.terms() {
            let idx: Vec<usize> = m.indices().collect();
            for (r, &i) in idx.iter().enumerate() {
                let prefix = Monomial::from_indices(&idx[..r]);
                let suffix = Monomial::from_indices(&idx[r + 1..]);
                for (m2, c2) in self.dgen[i].terms() {
                    let Some((neg1, pm)) = prefix.wedge(m2) else {
                        continue;
                    };
                    let Some((neg2, full)) = pm.wedge(suffix) else {
                        continue;
                    };
                    let negative = neg1 ^ neg2 ^ (r % 2 == 1);
                    let coeff = c.clone() * S::from_rational(c2.clone());
                    out.add_term(full, if negative { -coeff } else { coeff });
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `d: Λ^p → Λ^{p+1}` in [`basis`] order.
    pub fn differential_matrix(&self, p: usize) -> Matrix {
        let n = self.dim();
        let src = basis(n, p);
        let dst = basis(n, p + 1);
        let cols: Vec<Vec<Rational>> = src
            .iter()
            .map(|&m| {
                self.differential(&Multivector::monomial(n, m, Rational::one()))
                    .expect("same dimension")
                    .coords(&dst)
            })
            .collect();
        Matrix::from_columns(dst.len(), &cols)
    }

    /// Closed `p`-forms, as a kernel basis.
    pub fn cocycles(&self, p: usize) -> Result<Vec<Multivector>> {
        self.check_degree(p)?;
        let b = basis(self.dim(), p);
        Ok(self
            .differential_matrix(p)
            .nullspace()
            .into_iter()
            .map(|v| Multivector::from_coords(self.dim(), &b, &v))
            .collect())
    }

    /// Echelon basis of the exact `p`-forms `d(Λ^{p-1})`.
    pub fn coboundaries(&self, p: usize) -> Result<Vec<Multivector>> {
        self.check_degree(p)?;
        if p == 0 {
            return Ok(Vec::new());
        }
        let b = basis(self.dim(), p);
        Ok(self
            .differential_matrix(p - 1)
            .transpose()
            .row_space()
            .into_iter()
            .map(|v| Multivector::from_coords(self.dim(), &b, &v))
            .collect())
    }

    fn check_degree(&self, p: usize) -> Result<()> {
        if p > self.dim() {
            return Err(Error::GradeOutOfRange {
                grade: p,
                dim: self.dim(),
            });
        }
        Ok(())
    }

    pub fn cohomology(&self, p: usize) -> Result<CohomologyResult> {
        self.check_degree(p)?;
        let n = self.dim();
        let b = basis(n, p);
        let exact: Vec<Vec<Rational>> = if p == 0 {
            Vec::new()
        } else {
            self.differential_matrix(p - 1).transpose().row_space()
        };
        let pivots: Vec<usize> = exact
            .iter()
            .map(|row| row.iter().position(|x| !Scalar::is_zero(x)).unwrap())
            .collect();
        let closed = self.differential_matrix(p).nullspace();
        let reduced: Vec<Vec<Rational>> = closed
            .into_iter()
            .map(|mut z| {
                for (row, &piv) in exact.iter().zip(&pivots) {
                    if !Scalar::is_zero(&z[piv]) {
                        let f = z[piv].clone();
                        for (x, y) in z.iter_mut().zip(row) {
                            if !Scalar::is_zero(y) {
                                *x -= &f * y;
                            }
                        }
                    }
                }
                z
            })
            .collect();
        let keep = independent_subset(&reduced);
        let representatives: Vec<Multivector> = keep
            .iter()
            .map(|&i| Multivector::from_coords(n, &b, &reduced[i]))
            .collect();
        Ok(CohomologyResult {
            degree: p,
            betti: representatives.len(),
            representatives,
        })
    }

    /// `b_0, …, b_n`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let n = self.dim();
        let ranks: Vec<usize> = (0..=n)
            .map(|p| self.differential_matrix(p).rank())
            .collect();
        (0..=n)
            .map(|p| {
                let dim = basis(n, p).len();
                let boundary = if p == 0 { 0 } else { ranks[p - 1] };
                dim - ranks[p] - boundary
            })
            .collect()
    }

    /// `trace(ad e_j) = Σ_i c_{ji}^i`.
    pub fn ad_trace(&self, j: usize) -> Rational {
        (0..self.dim())
            .map(|i| self.sc.get(j, i, i).clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|j| Scalar::is_zero(&self.ad_trace(j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(labels(&["x", "y", "z"]), &[(0, 1, 2, int(1))]).unwrap()
    }

    fn e(n: usize, idx: &[usize]) -> Multivector {
        Multivector::monomial(n, Monomial::from_indices(idx), int(1))
    }

    #[test]
    fn jacobi_accepts_abelian_and_heisenberg() {
        assert!(validate_jacobi(&StructureConstants::new(3).unwrap()).is_ok());
        assert!(validate_jacobi(heisenberg().structure_constants()).is_ok());
    }

    #[test]
    fn jacobi_violation_reports_triple() {
        let mut sc = StructureConstants::new(3).unwrap();
        sc.set(0, 1, 2, int(1)).unwrap();
        sc.set(0, 2, 0, int(1)).unwrap();
        let err = validate_jacobi(&sc).unwrap_err();
        assert_eq!(err.triple, [0, 1, 2]);
        // the Jacobi sum is −e3
        assert_eq!(err.defect, vec![int(0), int(0), int(-1)]);
        assert!(matches!(LieAlgebra::new(sc), Err(Error::Jacobi(_))));
    }

    #[test]
    fn rejects_bad_brackets() {
        let mut sc = StructureConstants::new(2).unwrap();
        assert!(sc.set(0, 0, 1, int(1)).is_err());
        assert!(sc.set(0, 2, 1, int(1)).is_err());
        assert!(StructureConstants::new(0).is_err());
    }

    #[test]
    fn heisenberg_differential() {
        let h = heisenberg();
        assert_eq!(h.differential(&e(3, &[2])).unwrap(), -e(3, &[0, 1]));
        assert!(h
            .differential(&Multivector::<Rational>::one(3))
            .unwrap()
            .is_zero());
        assert!(h.differential(&e(4, &[0])).is_err());
    }

    #[test]
    fn product_of_sol3_and_line_differentials() {
        // basis x, y, z, w with [z,x] = x + w, [z,y] = −y
        let mut sc = StructureConstants::with_labels(labels(&["x", "y", "z", "w"])).unwrap();
        sc.set(2, 0, 0, int(1)).unwrap();
        sc.set(2, 0, 3, int(1)).unwrap();
        sc.set(2, 1, 1, int(-1)).unwrap();
        let g = LieAlgebra::new(sc).unwrap();
        assert_eq!(g.differential(&e(4, &[0])).unwrap(), e(4, &[0, 2])); // −z∧x
        assert_eq!(g.differential(&e(4, &[1])).unwrap(), -e(4, &[1, 2])); // z∧y
        assert!(g.differential(&e(4, &[2])).unwrap().is_zero());
        assert_eq!(g.differential(&e(4, &[3])).unwrap(), e(4, &[0, 2]));
        assert!(g.is_unimodular());
    }

    #[test]
    fn abelian_cohomology_is_binomial() {
        let a = LieAlgebra::abelian(3).unwrap();
        assert_eq!(a.betti_numbers(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn heisenberg_cohomology() {
        let h = heisenberg();
        assert_eq!(h.betti_numbers(), vec![1, 2, 2, 1]);
        let h1 = h.cohomology(1).unwrap();
        assert_eq!(h1.betti, 2);
        assert_eq!(h1.representatives, vec![e(3, &[0]), e(3, &[1])]);
        for r in &h.cohomology(2).unwrap().representatives {
            assert!(h.differential(r).unwrap().is_zero());
        }
        assert!(h.cohomology(4).is_err());
    }

    #[test]
    fn unimodularity() {
        assert!(heisenberg().is_unimodular());
        // [z, x] = x in basis (z, x)
        let g = LieAlgebra::from_brackets(labels(&["z", "x"]), &[(0, 1, 1, int(1))]).unwrap();
        assert!(!g.is_unimodular());
        assert_eq!(g.ad_trace(0), int(1));
        assert_eq!(g.betti_numbers(), vec![1, 1, 0]);
    }

    #[test]
    fn diagonal_extension_weights() {
        let g = LieAlgebra::diagonal_extension(&[int(1), int(-1)]).unwrap();
        assert!(g.is_unimodular());
        assert_eq!(g.betti_numbers(), vec![1, 1, 1, 1]);
    }
}
