//! Hodge star, codifferential and harmonic forms for invariant metrics.
//!
//! A metric is presented by an orthonormal coframe: row `i` of the matrix `C`
//! holds the coordinates of `θ_i` in the structure coframe, and the
//! orientation is `θ_1 ∧ … ∧ θ_n`. On `θ`-monomials the star is
//! `∗(θ_I) = sgn(I, J) θ_J` with `J` the complement of `I`, extended
//! conjugate-linearly so that `v ∧ ∗ū = g(v, u) vol`.

use crate::error::{Error, Result};
use crate::exterior::{basis, ExteriorMap, Monomial, Multivector};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{rational_sqrt, Rational, Scalar};

#[derive(Clone, Debug)]
pub struct MetricFrame {
    coframe: Matrix,
    to_frame: ExteriorMap,
    from_frame: ExteriorMap,
    det: Rational,
}

impl PartialEq for MetricFrame {
    fn eq(&self, other: &Self) -> bool {
        self.coframe == other.coframe
    }
}

impl Eq for MetricFrame {}

impl MetricFrame {
    /// `coframe` rows are the orthonormal covectors in structure coordinates.
    pub fn new(coframe: Matrix) -> Result<Self> {
        if !coframe.is_square() {
            return Err(Error::DimensionMismatch {
                expected: coframe.rows(),
                found: coframe.cols(),
            });
        }
        let det = coframe.determinant();
        if Scalar::is_zero(&det) {
            return Err(Error::SingularFrame);
        }
        let inv = coframe.inverse().ok_or(Error::SingularFrame)?;
        Ok(MetricFrame {
            to_frame: ExteriorMap::from_matrix(&inv.transpose())?,
            from_frame: ExteriorMap::from_matrix(&coframe.transpose())?,
            coframe,
            det,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n)).expect("identity is invertible")
    }

    /// Orthonormal coframe for the metric `g = Σ G_jk e^j e^k` from an exact
    /// `LDLᵀ` factorization. Fails unless `G` is symmetric positive definite
    /// with every pivot a rational square.
    pub fn from_gram(gram: &Matrix) -> Result<Self> {
        let n = gram.rows();
        if !gram.is_square() {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: gram.cols(),
            });
        }
        if *gram != gram.transpose() {
            return Err(Error::Gram("Gram matrix is not symmetric".into()));
        }
        let mut l: Matrix = Matrix::identity(n);
        let mut d: Vec<Rational> = Vec::with_capacity(n);
        for j in 0..n {
            let mut dj = gram[(j, j)].clone();
            for k in 0..j {
                dj -= &l[(j, k)] * &l[(j, k)] * &d[k];
            }
            if dj <= Rational::zero() {
                return Err(Error::Gram("Gram matrix is not positive definite".into()));
            }
            for i in j + 1..n {
                let mut v = gram[(i, j)].clone();
                for k in 0..j {
                    v -= &l[(i, k)] * &l[(j, k)] * &d[k];
                }
                l[(i, j)] = v / &dj;
            }
            d.push(dj);
        }
        let mut c: Matrix = Matrix::zeros(n, n);
        for (j, dj) in d.iter().enumerate() {
            let s = rational_sqrt(dj).ok_or_else(|| {
                Error::Gram(format!(
                    "LDLᵀ pivot value {dj} is not a rational square; \
                     supply an orthonormal coframe instead"
                ))
            })?;
            for i in j..n {
                c[(j, i)] = &s * &l[(i, j)];
            }
        }
        Self::new(c)
    }

    pub fn dim(&self) -> usize {
        self.coframe.rows()
    }

    pub fn coframe(&self) -> &Matrix {
        &self.coframe
    }

    /// `det C`; `vol = det C · e_1 ∧ … ∧ e_n` in structure coordinates.
    pub fn determinant(&self) -> &Rational {
        &self.det
    }

    /// `CᵀC`: the metric tensor on vectors dual to the structure coframe.
    pub fn metric_tensor(&self) -> Matrix {
        &self.coframe.transpose() * &self.coframe
    }

    /// Gram matrix of the structure coframe itself, `(CᵀC)⁻¹`.
    pub fn coframe_gram(&self) -> Matrix {
        self.metric_tensor().inverse().expect("frame is invertible")
    }

    /// Rewrites a form from structure coordinates into `θ` coordinates.
    pub fn to_frame<S: Scalar>(&self, w: &Multivector<S>) -> Result<Multivector<S>> {
        self.to_frame.apply_to(w)
    }

    /// Inverse of [`MetricFrame::to_frame`].
    pub fn from_frame<S: Scalar>(&self, w: &Multivector<S>) -> Result<Multivector<S>> {
        self.from_frame.apply_to(w)
    }

    /// Volume form in structure coordinates.
    pub fn volume<S: Scalar>(&self) -> Multivector<S> {
        Multivector::monomial(
            self.dim(),
            Monomial::top(self.dim()),
            S::from_rational(self.det.clone()),
        )
    }

    /// Star of a form given in `θ` coordinates, result in `θ` coordinates.
    pub fn star_in_frame<S: Scalar>(&self, w: &Multivector<S>) -> Result<Multivector<S>> {
        let n = self.dim();
        check_dim(n, w.dim())?;
        Ok(Multivector::from_terms(
            n,
            w.terms().map(|(m, c)| {
                let j = m.complement(n);
                let (neg, _) = m.wedge(j).expect("disjoint");
                let c = c.conj();
                (j, if neg { -c } else { c })
            }),
        ))
    }

    /// Star of a form in structure coordinates.
    pub fn hodge_star<S: Scalar>(&self, w: &Multivector<S>) -> Result<Multivector<S>> {
        self.from_frame(&self.star_in_frame(&self.to_frame(w)?)?)
    }

    /// Inner product induced by the metric on forms in structure coordinates.
    pub fn inner<S: Scalar>(&self, a: &Multivector<S>, b: &Multivector<S>) -> Result<S> {
        self.to_frame(a)?.inner_product(&self.to_frame(b)?)
    }

    /// `δ = (−1)^{np+n+1} ∗ d ∗` on each grade `p`; mixed forms are split by
    /// grade.
    pub fn codifferential<S: Scalar>(
        &self,
        lie: &LieAlgebra,
        w: &Multivector<S>,
    ) -> Result<Multivector<S>> {
        let n = self.dim();
        check_dim(n, lie.dim())?;
        check_dim(n, w.dim())?;
        let mut out = Multivector::zero(n);
        for p in w.grades() {
            let part = w.grade_project(p)?;
            let v = self.hodge_star(&lie.differential(&self.hodge_star(&part)?)?)?;
            let v = if (n * p + n + 1) % 2 == 1 { -v } else { v };
            out = &out + &v;
        }
        Ok(out)
    }

    /// `Q·C` where `Q` acts on the rows of the coframe.
    pub fn transformed(&self, q: &Matrix) -> Result<Self> {
        Self::new(q * &self.coframe)
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Which harmonicity condition a form fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarmonicFailure {
    NotClosed,
    NotCoclosed,
    Neither,
}

impl HarmonicFailure {
    fn from_flags(closed: bool, coclosed: bool) -> Option<Self> {
        match (closed, coclosed) {
            (true, true) => None,
            (false, true) => Some(HarmonicFailure::NotClosed),
            (true, false) => Some(HarmonicFailure::NotCoclosed),
            (false, false) => Some(HarmonicFailure::Neither),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            HarmonicFailure::NotClosed => "not_closed",
            HarmonicFailure::NotCoclosed => "not_coclosed",
            HarmonicFailure::Neither => "not_closed_not_coclosed",
        }
    }
}

/// Two harmonic forms whose product is not harmonic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub left: Multivector,
    pub right: Multivector,
    pub product: Multivector,
    pub failure: HarmonicFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormalityVerdict {
    Formal,
    NotFormal(Witness),
}

impl FormalityVerdict {
    pub fn is_formal(&self) -> bool {
        matches!(self, FormalityVerdict::Formal)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            FormalityVerdict::Formal => None,
            FormalityVerdict::NotFormal(w) => Some(w),
        }
    }
}

/// `d` and `δ` as matrices on every grade, for repeated harmonicity tests.
#[derive(Clone, Debug)]
pub struct HodgeComplex {
    dim: usize,
    bases: Vec<Vec<Monomial>>,
    d: Vec<Matrix>,
    delta: Vec<Matrix>,
}

impl HodgeComplex {
    pub fn new(lie: &LieAlgebra, frame: &MetricFrame) -> Result<Self> {
        let n = lie.dim();
        check_dim(n, frame.dim())?;
        let bases: Vec<Vec<Monomial>> = (0..=n).map(|p| basis(n, p)).collect();
        let d = (0..=n).map(|p| lie.differential_matrix(p)).collect();
        let mut delta = Vec::with_capacity(n + 1);
        for p in 0..=n {
            let target: &[Monomial] = if p == 0 { &[] } else { &bases[p - 1] };
            let cols = bases[p]
                .iter()
                .map(|&m| {
                    let w = Multivector::monomial(n, m, Rational::one());
                    Ok(frame.codifferential(lie, &w)?.coords(target))
                })
                .collect::<Result<Vec<_>>>()?;
            delta.push(Matrix::from_columns(target.len(), &cols));
        }
        Ok(HodgeComplex {
            dim: n,
            bases,
            d,
            delta,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `δ: Λ^p → Λ^{p-1}`.
    pub fn codifferential_matrix(&self, p: usize) -> &Matrix {
        &self.delta[p]
    }

    pub fn harmonic_basis(&self, p: usize) -> Result<Vec<Multivector>> {
        if p > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: p,
                dim: self.dim,
            });
        }
        Ok(self.d[p]
            .vstack(&self.delta[p])
            .nullspace()
            .into_iter()
            .map(|v| Multivector::from_coords(self.dim, &self.bases[p], &v))
            .collect())
    }

    /// `None` when `w` is harmonic, otherwise the condition that fails.
    pub fn harmonic_failure(&self, w: &Multivector) -> Result<Option<HarmonicFailure>> {
        check_dim(self.dim, w.dim())?;
        let mut closed = true;
        let mut coclosed = true;
        for p in w.grades() {
            let x = w.grade_project(p)?.coords(&self.bases[p]);
            closed &= self.d[p].mul_vec(&x).iter().all(Scalar::is_zero);
            coclosed &= self.delta[p].mul_vec(&x).iter().all(Scalar::is_zero);
        }
        Ok(HarmonicFailure::from_flags(closed, coclosed))
    }

    pub fn is_harmonic(&self, w: &Multivector) -> Result<bool> {
        Ok(self.harmonic_failure(w)?.is_none())
    }

    /// Scans the pairs `(h_i, h_j)`, `i ≤ j`, of the given harmonic forms in
    /// order and returns the first one whose product is not harmonic.
    pub fn first_non_harmonic_product(&self, harmonic: &[Multivector]) -> Result<FormalityVerdict> {
        for (i, a) in harmonic.iter().enumerate() {
            for b in &harmonic[i..] {
                let product = a.wedge(b)?;
                if product.is_zero() {
                    continue;
                }
                if let Some(failure) = self.harmonic_failure(&product)? {
                    return Ok(FormalityVerdict::NotFormal(Witness {
                        left: a.clone(),
                        right: b.clone(),
                        product,
                        failure,
                    }));
                }
            }
        }
        Ok(FormalityVerdict::Formal)
    }

    /// Harmonic bases of all grades, concatenated in grade order.
    pub fn all_harmonic(&self) -> Vec<Vec<Multivector>> {
        (0..=self.dim)
            .map(|p| self.harmonic_basis(p).expect("grade in range"))
            .collect()
    }
}

pub fn hodge_star<S: Scalar>(w: &Multivector<S>, frame: &MetricFrame) -> Result<Multivector<S>> {
    frame.hodge_star(w)
}

pub fn codifferential<S: Scalar>(
    w: &Multivector<S>,
    lie: &LieAlgebra,
    frame: &MetricFrame,
) -> Result<Multivector<S>> {
    frame.codifferential(lie, w)
}

/// Basis of `ker d ∩ ker δ` in grade `p`, in structure coordinates.
pub fn harmonic_basis(lie: &LieAlgebra, frame: &MetricFrame, p: usize) -> Result<Vec<Multivector>> {
    if p > lie.dim() {
        return Err(Error::GradeOutOfRange {
            grade: p,
            dim: lie.dim(),
        });
    }
    HodgeComplex::new(lie, frame)?.harmonic_basis(p)
}

/// Formal iff every product of two harmonic basis forms is harmonic. The
/// witness, if any, is the first failing pair in basis order.
pub fn formality_check(lie: &LieAlgebra, frame: &MetricFrame) -> Result<FormalityVerdict> {
    let hc = HodgeComplex::new(lie, frame)?;
    let all: Vec<Multivector> = hc.all_harmonic().into_iter().flatten().collect();
    hc.first_non_harmonic_product(&all)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeReport {
    pub grade: usize,
    pub harmonic_dim: usize,
    pub betti: usize,
    pub star_star_ok: bool,
}

impl GradeReport {
    pub fn agrees(&self) -> bool {
        self.harmonic_dim == self.betti
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiagnostics {
    pub unimodular: bool,
    pub grades: Vec<GradeReport>,
}

impl HodgeDiagnostics {
    pub fn harmonic_dims(&self) -> Vec<usize> {
        self.grades.iter().map(|g| g.harmonic_dim).collect()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.grades.iter().map(|g| g.betti).collect()
    }

    /// Harmonic dimensions differ from Betti numbers only for
    /// non-unimodular algebras; set when that is the case to watch.
    pub fn flags_non_unimodular(&self) -> bool {
        !self.unimodular
    }

    pub fn all_consistent(&self) -> bool {
        self.grades
            .iter()
            .all(|g| g.star_star_ok && (g.agrees() || !self.unimodular))
    }
}

/// Per grade: harmonic dimension against Betti number, and `∗∗ = (−1)^{p(n−p)}`
/// on every basis monomial.
pub fn hodge_diagnostics(lie: &LieAlgebra, frame: &MetricFrame) -> Result<HodgeDiagnostics> {
    let n = lie.dim();
    let hc = HodgeComplex::new(lie, frame)?;
    let betti = lie.betti_numbers();
    let mut grades = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let sign_negative = (p * (n - p)) % 2 == 1;
        let mut star_star_ok = true;
        for m in basis(n, p) {
            let w: Multivector = Multivector::monomial(n, m, Rational::one());
            let ss = frame.hodge_star(&frame.hodge_star(&w)?)?;
            let expected = if sign_negative { -w } else { w };
            star_star_ok &= ss == expected;
        }
        grades.push(GradeReport {
            grade: p,
            harmonic_dim: hc.harmonic_basis(p)?.len(),
            betti: betti[p],
            star_star_ok,
        });
    }
    Ok(HodgeDiagnostics {
        unimodular: lie.is_unimodular(),
        grades,
    })
}
