//! Sparse exterior algebra `Λ(V*)` over a fixed coframe `e_0, …, e_{n-1}`.
//!
//! A [`Monomial`] is a strictly increasing index set stored as a bitmask; a
//! [`Multivector`] maps monomials to nonzero exact coefficients. Zero
//! coefficients are pruned eagerly, so structural equality is mathematical
//! equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar};

pub const MAX_DIM: usize = 64;

/// `e_{i1} ∧ … ∧ e_{ip}` with `i1 < … < ip`, as a bitmask.
///
/// Ordered by grade first, then lexicographically by index sequence, which is
/// the basis order used everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(u64);

impl Monomial {
    /// The empty product, i.e. the scalar `1`.
    pub const ONE: Monomial = Monomial(0);

    pub fn from_mask(mask: u64) -> Self {
        Monomial(mask)
    }

    /// Builds a monomial from strictly increasing indices.
    ///
    /// # Panics
    /// If the indices are not strictly increasing or exceed [`MAX_DIM`].
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut mask = 0u64;
        let mut last = None;
        for &i in indices {
            assert!(i < MAX_DIM, "index {i} too large");
            assert!(last.is_none_or(|l| l < i), "indices must increase");
            mask |= 1 << i;
            last = Some(i);
        }
        Monomial(mask)
    }

    pub fn generator(i: usize) -> Self {
        Monomial::from_indices(&[i])
    }

    /// `e_0 ∧ … ∧ e_{n-1}`.
    pub fn top(n: usize) -> Self {
        Monomial(low_mask(n))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_DIM && self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..MAX_DIM).filter(move |&i| mask & (1 << i) != 0)
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Complement inside `{0, …, n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Monomial(!self.0 & low_mask(n))
    }

    /// `self ∧ other = sign · m`; `None` when the factors share an index.
    /// The boolean is `true` when the sign is negative.
    pub fn wedge(self, other: Monomial) -> Option<(bool, Monomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        for j in other.indices() {
            let above = if j >= 63 { 0 } else { !0u64 << (j + 1) };
            inversions += (self.0 & above).count_ones();
        }
        Some((inversions % 2 == 1, Monomial(self.0 | other.0)))
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the smallest differing index belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All grade-`p` monomials over `n` generators, in basis order.
pub fn basis(n: usize, p: usize) -> Vec<Monomial> {
    if p > n {
        return Vec::new();
    }
    (0..n)
        .combinations(p)
        .map(|c| Monomial::from_indices(&c))
        .collect()
}

/// Element of `Λ(V*)` with `dim V = n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector<S = Rational> {
    dim: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, s: S) -> Self {
        Self::monomial(dim, Monomial::ONE, s)
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    /// The generator `e_i`.
    pub fn generator(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        Ok(Self::monomial(dim, Monomial::generator(i), S::one()))
    }

    /// `e_0 ∧ … ∧ e_{n-1}`.
    pub fn top(dim: usize) -> Self {
        Self::monomial(dim, Monomial::top(dim), S::one())
    }

    pub fn monomial(dim: usize, m: Monomial, coeff: S) -> Self {
        let mut v = Self::zero(dim);
        assert!(
            m.max_index().is_none_or(|i| i < dim),
            "monomial outside dimension {dim}"
        );
        v.add_term(m, coeff);
        v
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut v = Self::zero(dim);
        for (m, c) in terms {
            assert!(m.max_index().is_none_or(|i| i < dim));
            v.add_term(m, c);
        }
        v
    }

    /// Coordinates with respect to `basis` (which must be sorted, as
    /// returned by [`basis`]) back to a multivector.
    pub fn from_coords(dim: usize, basis: &[Monomial], coords: &[S]) -> Self {
        Self::from_terms(dim, basis.iter().copied().zip(coords.iter().cloned()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: Monomial) -> S {
        self.terms.get(&m).cloned().unwrap_or_else(S::zero)
    }

    /// The grade when every term has the same grade; `None` for zero or
    /// mixed forms.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|m| m.grade());
        let g = grades.next()?;
        grades.all(|h| h == g).then_some(g)
    }

    pub fn grades(&self) -> Vec<usize> {
        self.terms.keys().map(|m| m.grade()).dedup().collect()
    }

    pub fn coords(&self, basis: &[Monomial]) -> Vec<S> {
        let mut out = vec![S::zero(); basis.len()];
        for (m, c) in &self.terms {
            let idx = basis
                .binary_search(m)
                .unwrap_or_else(|_| panic!("monomial {m:?} not in basis"));
            out[idx] = c.clone();
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        self.map_coeffs(|c| c.clone() * s.clone())
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector::from_terms(self.dim, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn conj(&self) -> Self {
        self.map_coeffs(S::conj)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((neg, m)) = a.wedge(*b) {
                    let c = ca.clone() * cb.clone();
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// `Σ_I a_I · conj(b_I)`: the inner product for which the monomials are
    /// orthonormal. Meaningful when both arguments are written in an
    /// orthonormal coframe.
    pub fn inner_product(&self, other: &Self) -> Result<S> {
        self.check_dim(other)?;
        let mut acc = S::zero();
        for (m, a) in &self.terms {
            if let Some(b) = other.terms.get(m) {
                acc = acc + a.clone() * b.conj();
            }
        }
        Ok(acc)
    }

    pub fn grade_project(&self, p: usize) -> Result<Self> {
        if p > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: p,
                dim: self.dim,
            });
        }
        Ok(Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.grade() == p)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    /// Renders with the given generator labels, e.g. `w-x` or `2*x^y+z^w`.
    /// Positive terms come first, each group in basis order.
    pub fn display_with(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let (pos, rest): (Vec<_>, Vec<_>) = self
            .terms
            .iter()
            .partition(|(_, c)| c.real_sign() == Some(Ordering::Greater));
        let mut out = String::new();
        for (m, c) in pos.into_iter().chain(rest) {
            let name = if *m == Monomial::ONE {
                None
            } else {
                Some(m.indices().map(|i| label(labels, i)).join("^"))
            };
            let negative = c.real_sign() == Some(Ordering::Less);
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            match name {
                None => out.push_str(&magnitude.to_string()),
                Some(n) if magnitude.is_one() => out.push_str(&n),
                Some(n) => {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                    out.push_str(&n);
                }
            }
        }
        out
    }
}

fn label(labels: &[String], i: usize) -> String {
    labels
        .get(i)
        .cloned()
        .unwrap_or_else(|| format!("e{}", i + 1))
}

/// Default labels `e1, …, en`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector<{}>({})", self.dim, self)
    }
}

/// Panics on dimension mismatch; use [`Multivector::wedge`] style checked
/// operations when dimensions come from user input.
impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Multivector<S>) -> Multivector<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Multivector<S>) -> Multivector<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        self.map_coeffs(|c| -c.clone())
    }
}

/// Algebra endomorphism of `Λ(V*)` induced by a linear map on 1-forms.
///
/// Built from a matrix acting on coordinate columns: generator `e_j` is sent
/// to `Σ_i M[i][j] e_i`. Composition of maps matches matrix multiplication.
#[derive(Clone)]
pub struct ExteriorMap<S = Rational> {
    dim: usize,
    images: Vec<Multivector<S>>,
}

impl<S: Scalar> fmt::Debug for ExteriorMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.images).finish()
    }
}

impl<S: Scalar> ExteriorMap<S> {
    pub fn from_matrix(m: &Matrix<S>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        let n = m.rows();
        let images = (0..n)
            .map(|j| {
                Multivector::from_terms(
                    n,
                    (0..n).map(|i| (Monomial::generator(i), m[(i, j)].clone())),
                )
            })
            .collect();
        Ok(ExteriorMap { dim: n, images })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn image_of_generator(&self, i: usize) -> &Multivector<S> {
        &self.images[i]
    }

    pub fn apply_monomial(&self, m: Monomial) -> Multivector<S> {
        m.indices().fold(Multivector::one(self.dim), |acc, i| {
            acc.wedge(&self.images[i]).expect("same dimension")
        })
    }

    pub fn apply(&self, w: &Multivector<S>) -> Result<Multivector<S>> {
        if w.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.dim(),
            });
        }
        let mut out = Multivector::zero(self.dim);
        for (m, c) in w.terms() {
            for (m2, c2) in self.apply_monomial(m).terms() {
                out.add_term(m2, c.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Matrix of the map restricted to grade `p`, in the [`basis`] order.
    pub fn grade_matrix(&self, p: usize) -> Matrix<S> {
        let b = basis(self.dim, p);
        let cols: Vec<Vec<S>> = b
            .iter()
            .map(|&m| self.apply_monomial(m).coords(&b))
            .collect();
        Matrix::from_columns(b.len(), &cols)
    }
}

impl ExteriorMap<Rational> {
    /// Applies a rational map to a form over any coefficient field.
    pub fn apply_to<T: Scalar>(&self, w: &Multivector<T>) -> Result<Multivector<T>> {
        if w.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.dim(),
            });
        }
        let mut out = Multivector::zero(self.dim);
        for (m, c) in w.terms() {
            for (m2, c2) in self.apply_monomial(m).terms() {
                out.add_term(m2, c.clone() * T::from_rational(c2.clone()));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Gaussian};

    fn e(n: usize, idx: &[usize]) -> Multivector {
        Multivector::monomial(n, Monomial::from_indices(idx), int(1))
    }

    #[test]
    fn basic_wedges() {
        let e1 = e(3, &[0]);
        let e2 = e(3, &[1]);
        assert_eq!(e1.wedge(&e2).unwrap(), e(3, &[0, 1]));
        assert_eq!(e2.wedge(&e1).unwrap(), -e(3, &[0, 1]));
        assert!(e1.wedge(&e1).unwrap().is_zero());
    }

    #[test]
    fn bilinear_expansion() {
        // (e1+e2)∧(e1−e2) = −e1∧e2 + e2∧e1 = −2 e12
        let a = &e(2, &[0]) + &e(2, &[1]);
        let b = &e(2, &[0]) - &e(2, &[1]);
        assert_eq!(a.wedge(&b).unwrap(), e(2, &[0, 1]).scale(&int(-2)));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(
            e(2, &[0]).wedge(&e(3, &[0])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(e(2, &[0]).inner_product(&e(3, &[0])).is_err());
    }

    #[test]
    fn inner_products() {
        assert_eq!(e(3, &[0, 1]).inner_product(&e(3, &[0, 1])).unwrap(), int(1));
        assert_eq!(e(3, &[0, 1]).inner_product(&e(3, &[0, 2])).unwrap(), int(0));
        let a = &e(3, &[0]).scale(&int(2)) + &e(3, &[1]).scale(&int(3));
        assert_eq!(a.inner_product(&e(3, &[0])).unwrap(), int(2));
    }

    #[test]
    fn hermitian_inner_product() {
        let i = Gaussian::i();
        let a: Multivector<Gaussian> = Multivector::monomial(2, Monomial::generator(0), i.clone());
        let b: Multivector<Gaussian> =
            Multivector::monomial(2, Monomial::generator(0), Gaussian::one());
        assert_eq!(a.inner_product(&b).unwrap(), i.clone());
        assert_eq!(b.inner_product(&a).unwrap(), i.conj());
        assert_eq!(a.inner_product(&a).unwrap(), Gaussian::one());
    }

    #[test]
    fn grade_projection() {
        let x = &(&Multivector::one(3) + &e(3, &[0])) + &e(3, &[0, 1]);
        assert_eq!(x.grade_project(1).unwrap(), e(3, &[0]));
        assert!(e(3, &[0, 1]).grade_project(0).unwrap().is_zero());
        let y = &Multivector::scalar(3, int(5)) + &e(3, &[0, 1, 2]);
        assert_eq!(y.grade_project(3).unwrap(), e(3, &[0, 1, 2]));
        assert!(y.grade_project(4).is_err());
    }

    #[test]
    fn monomial_order_is_grade_then_lex() {
        let b = basis(4, 2);
        let idx: Vec<Vec<usize>> = b.iter().map(|m| m.indices().collect()).collect();
        assert_eq!(
            idx,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert!(Monomial::generator(3) < Monomial::from_indices(&[0, 1]));
    }

    #[test]
    fn display_puts_positive_terms_first() {
        let labels: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        let v = &e(4, &[3]) - &e(4, &[0]);
        assert_eq!(v.display_with(&labels), "w-x");
        let u = &e(4, &[0, 1]).scale(&int(2)) - &Multivector::one(4);
        assert_eq!(u.display_with(&labels), "2*x^y-1");
        assert_eq!(Multivector::<Rational>::zero(2).to_string(), "0");
    }

    #[test]
    fn exterior_map_composes_like_matrices() {
        let a = Matrix::from_rows(vec![
            vec![int(0), int(-1), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap();
        let b = Matrix::diagonal(&[int(2), int(1), int(-1)]);
        let fa = ExteriorMap::from_matrix(&a).unwrap();
        let fb = ExteriorMap::from_matrix(&b).unwrap();
        let fab = ExteriorMap::from_matrix(&(&a * &b)).unwrap();
        let w = &e(3, &[0, 2]) + &e(3, &[1]);
        assert_eq!(
            fa.apply(&fb.apply(&w).unwrap()).unwrap(),
            fab.apply(&w).unwrap()
        );
        // e1 ↦ e2 under the rotation
        assert_eq!(fa.apply(&e(3, &[0])).unwrap(), e(3, &[1]));
    }
}
