//! Seeded generators for randomized checks: valid Lie algebras, forms,
//! coframes and character systems.
//!
//! Nilpotent algebras are grown one generator at a time. Every generator
//! carries a weight vector in `ℤ^r`, and `d e^k` is a random closed 2-form of
//! weight `w_k`, so `d² = 0` holds by construction and every linear functional
//! on weights gives a diagonal derivation.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::characters::{CharacterSystem, SymbolBasis, WeightValue};
use crate::error::Result;
use crate::exterior::{basis, Monomial, Multivector};
use crate::lie::{LieAlgebra, StructureConstants};
use crate::linalg::Matrix;
use crate::scalar::{int, rat, Rational, Scalar};

/// A Lie algebra with a weight grading compatible with its bracket.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub lie: LieAlgebra,
    pub weights: Vec<Vec<i64>>,
}

impl GradedAlgebra {
    /// Diagonal automorphism `e_k ↦ (-1)^{χ·w_k} e_k`.
    pub fn sign_automorphism(&self, chi: &[i64]) -> Matrix {
        let entries: Vec<Rational> = self
            .weights
            .iter()
            .map(|w| {
                let s: i64 = w.iter().zip(chi).map(|(a, b)| a * b).sum();
                int(if s.rem_euclid(2) == 0 { 1 } else { -1 })
            })
            .collect();
        Matrix::diagonal(&entries)
    }
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = small_rational(rng);
        if !Scalar::is_zero(&q) {
            return q;
        }
    }
}

/// Random nilpotent algebra of dimension `dim` with `1..=dim` abelian
/// generators at the bottom.
pub fn nilpotent_tower<R: Rng>(rng: &mut R, dim: usize) -> Result<GradedAlgebra> {
    let rank = if dim <= 2 {
        dim
    } else {
        rng.gen_range(2..=dim.min(3))
    };
    let mut weights: Vec<Vec<i64>> = (0..dim)
        .map(|k| {
            let mut w = vec![0; dim];
            if k < rank {
                w[k] = 1;
            }
            w
        })
        .collect();
    let mut sc = StructureConstants::new(dim)?;
    for k in rank..dim {
        let lie = LieAlgebra::new(sc.clone())?;
        let i = rng.gen_range(0..k - 1);
        let j = rng.gen_range(i + 1..k);
        let target: Vec<i64> = weights[i]
            .iter()
            .zip(&weights[j])
            .map(|(a, b)| a + b)
            .collect();
        let candidates: Vec<Monomial> = basis(k, 2)
            .into_iter()
            .filter(|m| {
                let ix: Vec<usize> = m.indices().collect();
                weights[ix[0]]
                    .iter()
                    .zip(&weights[ix[1]])
                    .map(|(a, b)| a + b)
                    .eq(target.iter().copied())
            })
            .collect();
        let three = basis(dim, 3);
        let columns: Vec<Vec<Rational>> = candidates
            .iter()
            .map(|&m| {
                let w = Multivector::monomial(dim, m, Rational::one());
                lie.differential(&w).map(|dw| dw.coords(&three))
            })
            .collect::<Result<_>>()?;
        let closed = Matrix::from_columns(three.len(), &columns).nullspace();
        let mut omega = vec![Rational::zero(); candidates.len()];
        for v in &closed {
            let c = small_rational(rng);
            for (o, x) in omega.iter_mut().zip(v) {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
        if omega.iter().all(Scalar::is_zero) {
            if let Some(v) = closed.first() {
                omega = v.clone();
            }
        }
        if omega.iter().all(Scalar::is_zero) {
            weights[k] = vec![0; dim];
            weights[k][k] = 1;
            continue;
        }
        weights[k] = target;
        for (m, c) in candidates.iter().zip(&omega) {
            if !Scalar::is_zero(c) {
                let ix: Vec<usize> = m.indices().collect();
                sc.set(ix[0], ix[1], k, -c.clone())?;
            }
        }
    }
    Ok(GradedAlgebra {
        lie: LieAlgebra::new(sc)?,
        weights,
    })
}

/// `ℝ ⋉_D g` for a random diagonal derivation `D e_k = (λ·w_k) e_k`; the new
/// generator `t` is last. With `unimodular`, `λ` is projected so `tr D = 0`.
pub fn diagonal_extension<R: Rng>(
    rng: &mut R,
    g: &GradedAlgebra,
    unimodular: bool,
) -> Result<LieAlgebra> {
    let n = g.lie.dim();
    let r = g.weights.first().map_or(0, Vec::len);
    let mut lambda: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3)).collect();
    if unimodular {
        let s: Vec<i64> = (0..r)
            .map(|a| g.weights.iter().map(|w| w[a]).sum())
            .collect();
        let ss: i64 = s.iter().map(|x| x * x).sum();
        let ls: i64 = lambda.iter().zip(&s).map(|(a, b)| a * b).sum();
        lambda = lambda
            .iter()
            .zip(&s)
            .map(|(l, si)| l * ss - ls * si)
            .collect();
    }
    let mut labels = g.lie.labels().to_vec();
    labels.push("t".into());
    let mut sc = StructureConstants::with_labels(labels)?;
    for (i, j, k, c) in g.lie.structure_constants().nonzero() {
        sc.set(i, j, k, c)?;
    }
    for (k, w) in g.weights.iter().enumerate() {
        let mu: i64 = w.iter().zip(&lambda).map(|(a, b)| a * b).sum();
        if mu != 0 {
            sc.set(n, k, k, int(mu))?;
        }
    }
    LieAlgebra::new(sc)
}

/// A nilpotent tower, diagonally extended half of the time.
pub fn random_algebra<R: Rng>(rng: &mut R, max_dim: usize, unimodular: bool) -> Result<LieAlgebra> {
    let max_dim = max_dim.max(2);
    if rng.gen_bool(0.5) {
        let dim = rng.gen_range(1..max_dim);
        let g = nilpotent_tower(rng, dim)?;
        diagonal_extension(rng, &g, unimodular)
    } else {
        let dim = rng.gen_range(1..=max_dim);
        Ok(nilpotent_tower(rng, dim)?.lie)
    }
}

/// Random pure-grade form with roughly half of the monomials present.
pub fn random_form<R: Rng>(rng: &mut R, dim: usize, p: usize) -> Multivector {
    let mut terms = Vec::new();
    for m in basis(dim, p) {
        if rng.gen_bool(0.5) {
            terms.push((m, small_rational(rng)));
        }
    }
    Multivector::from_terms(dim, terms)
}

/// Random invertible matrix with small rational entries.
pub fn random_coframe<R: Rng>(rng: &mut R, dim: usize) -> Matrix {
    loop {
        let rows = (0..dim)
            .map(|_| (0..dim).map(|_| small_rational(rng)).collect())
            .collect();
        let m = Matrix::from_rows(rows).expect("square");
        if !Scalar::is_zero(&m.determinant()) {
            return m;
        }
    }
}

/// Random signed permutation matrix.
pub fn random_signed_permutation<R: Rng>(rng: &mut R, dim: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.shuffle(rng);
    let mut m = Matrix::zeros(dim, dim);
    for (i, &j) in perm.iter().enumerate() {
        m[(i, j)] = int(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    m
}

/// Random character system whose full product is trivial on every
/// generator. Entries are small so that many subsets are trivial.
pub fn random_character_system<R: Rng>(
    rng: &mut R,
    max_covectors: usize,
) -> Result<CharacterSystem> {
    let n = rng.gen_range(1..=max_covectors.max(1));
    let s = rng.gen_range(0..=2);
    let symbols: Vec<String> = (0..s).map(|i| format!("s{i}")).collect();
    let width = s + 1;
    let generators = rng.gen_range(1..=2);
    let im_choices = [rat(0, 1), rat(1, 2), rat(1, 3), rat(-1, 2), int(1)];
    let mut table = Vec::with_capacity(generators);
    for _ in 0..generators {
        let mut row: Vec<WeightValue> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    return WeightValue::zero(width);
                }
                let mut re = vec![Rational::zero(); width];
                for x in re.iter_mut().take(s) {
                    *x = int(rng.gen_range(-1..=1));
                }
                WeightValue {
                    re,
                    im2pi: im_choices.choose(rng).unwrap().clone(),
                }
            })
            .collect();
        let total = row[..n - 1]
            .iter()
            .fold(WeightValue::zero(width), |acc, w| acc.add(w));
        row[n - 1] = WeightValue {
            re: total.re.iter().map(|x| -x.clone()).collect(),
            im2pi: -total.im2pi,
        };
        table.push(row);
    }
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    CharacterSystem::new(SymbolBasis::new(symbols, Vec::new())?, labels, table)
}

/// A row of random weights for an extra lattice generator of `system`.
pub fn random_generator_row<R: Rng>(rng: &mut R, system: &CharacterSystem) -> Vec<WeightValue> {
    let width = system.basis().width();
    (0..system.covectors())
        .map(|_| {
            let mut re = vec![Rational::zero(); width];
            for x in re.iter_mut().take(width - 1) {
                *x = int(rng.gen_range(-1..=1));
            }
            WeightValue {
                re,
                im2pi: rat(rng.gen_range(-2..=2), 2),
            }
        })
        .collect()
}
