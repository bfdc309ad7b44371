//! Character calculus for `G = ℝⁿ ⋉_φ ℝᵐ` with semisimple `φ`.
//!
//! Each covector `x_i` carries a character `α_i`; the table stores
//! `log α_i(γ_k)` for every lattice generator `γ_k` as a [`WeightValue`]: a real
//! part, linear over declared real symbols and a rational constant, plus an
//! imaginary part measured in multiples of `2π`. A product `α_I` is trivial on
//! the lattice iff for every generator the summed real part vanishes modulo
//! the declared relations and the summed imaginary part is an integer.
//!
//! In the semisimple case the monomials `x_I` with `α_I` trivial span a
//! subcomplex with zero differential computing the cohomology, and it is closed
//! under the star of the metric making the `x_i` orthonormal whenever the full
//! index set is trivial.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar};

/// Largest supported number of covectors; subsets are enumerated exhaustively.
pub const MAX_COVECTORS: usize = 20;

/// Real symbols assumed ℚ-linearly independent apart from the declared
/// relations. Vectors over the basis have one coordinate per symbol followed by
/// a constant coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolBasis {
    symbols: Vec<String>,
    // echelon rows of the relation space, with their pivot columns
    relations: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SymbolBasis {
    pub fn new(symbols: Vec<String>, relations: Vec<Vec<Rational>>) -> Result<Self> {
        let width = symbols.len() + 1;
        if let Some(r) = relations.iter().find(|r| r.len() != width) {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: r.len(),
            });
        }
        let unique: BTreeSet<&String> = symbols.iter().collect();
        if unique.len() != symbols.len() || symbols.iter().any(|s| s == "const") {
            return Err(Error::Parse(
                "symbol names must be distinct and not \"const\"".into(),
            ));
        }
        let rows = if relations.is_empty() {
            Vec::new()
        } else {
            Matrix::from_rows(relations)?.row_space()
        };
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|x| !Scalar::is_zero(x)).unwrap())
            .collect();
        Ok(SymbolBasis {
            symbols,
            relations: rows,
            pivots,
        })
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// Number of coordinates, i.e. symbols plus the constant.
    pub fn width(&self) -> usize {
        self.symbols.len() + 1
    }

    /// Reduced echelon basis of the declared relations.
    pub fn relations(&self) -> &[Vec<Rational>] {
        &self.relations
    }

    pub fn symbol_index(&self, name: &str) -> Result<usize> {
        if name == "const" {
            return Ok(self.symbols.len());
        }
        self.symbols
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Canonical representative modulo the relations.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.relations.iter().zip(&self.pivots) {
            if !Scalar::is_zero(&v[p]) {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !Scalar::is_zero(y) {
                        *x -= &f * y;
                    }
                }
            }
        }
        v
    }

    pub fn is_zero(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }
}

/// `log α(γ) = re + 2πi · im2pi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightValue {
    pub re: Vec<Rational>,
    pub im2pi: Rational,
}

impl WeightValue {
    pub fn zero(width: usize) -> Self {
        WeightValue {
            re: vec![<Rational as Scalar>::zero(); width],
            im2pi: <Rational as Scalar>::zero(),
        }
    }

    /// A purely real value `Σ coeffs[s]·s`.
    pub fn real(re: Vec<Rational>) -> Self {
        WeightValue {
            re,
            im2pi: <Rational as Scalar>::zero(),
        }
    }

    pub fn add(&self, other: &WeightValue) -> WeightValue {
        WeightValue {
            re: self.re.iter().zip(&other.re).map(|(a, b)| a + b).collect(),
            im2pi: &self.im2pi + &other.im2pi,
        }
    }

    pub fn is_trivial(&self, basis: &SymbolBasis) -> bool {
        self.im2pi.is_integer() && basis.is_zero(&self.re)
    }
}

/// Character evaluations `log α_i(γ_k)` for `N` covectors and the lattice
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSystem {
    basis: SymbolBasis,
    labels: Vec<String>,
    table: Vec<Vec<WeightValue>>,
}

impl CharacterSystem {
    /// `table[k][i]` is the value on generator `k` of the character of
    /// covector `i`.
    pub fn new(
        basis: SymbolBasis,
        labels: Vec<String>,
        table: Vec<Vec<WeightValue>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n > MAX_COVECTORS {
            return Err(Error::TooLarge {
                dim: n,
                max: MAX_COVECTORS,
            });
        }
        let width = basis.width();
        let mut reduced = Vec::with_capacity(table.len());
        for row in table {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            let mut out = Vec::with_capacity(n);
            for w in row {
                if w.re.len() != width {
                    return Err(Error::DimensionMismatch {
                        expected: width,
                        found: w.re.len(),
                    });
                }
                out.push(WeightValue {
                    re: basis.reduce(&w.re),
                    im2pi: w.im2pi,
                });
            }
            reduced.push(out);
        }
        Ok(CharacterSystem {
            basis,
            labels,
            table: reduced,
        })
    }

    pub fn basis(&self) -> &SymbolBasis {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<WeightValue>] {
        &self.table
    }

    /// `N`, the number of covectors.
    pub fn covectors(&self) -> usize {
        self.labels.len()
    }

    pub fn generators(&self) -> usize {
        self.table.len()
    }

    /// Covectors whose character is trivial on every generator.
    pub fn zero_weight_covectors(&self) -> Vec<usize> {
        (0..self.covectors())
            .filter(|&i| self.table.iter().all(|row| row[i].is_trivial(&self.basis)))
            .collect()
    }

    /// Same system with one more lattice generator.
    pub fn with_generator(&self, row: Vec<WeightValue>) -> Result<Self> {
        let mut table = self.table.clone();
        table.push(row);
        Self::new(self.basis.clone(), self.labels.clone(), table)
    }

    fn mask_is_trivial(&self, mask: u32) -> bool {
        let width = self.basis.width();
        self.table.iter().all(|row| {
            let mut sum = WeightValue::zero(width);
            for (i, w) in row.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    sum = sum.add(w);
                }
            }
            // entries are already reduced, and reduction is linear
            sum.im2pi.is_integer() && sum.re.iter().all(Scalar::is_zero)
        })
    }

    /// Whether `α_I` restricted to the lattice is trivial.
    pub fn is_trivial(&self, indices: &[usize]) -> Result<bool> {
        let mut mask = 0u32;
        for &i in indices {
            if i >= self.covectors() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: self.covectors(),
                });
            }
            mask |= 1 << i;
        }
        Ok(self.mask_is_trivial(mask))
    }

    fn trivial_masks(&self) -> Vec<u32> {
        let n = self.covectors();
        let width = self.basis.width();
        let mut out = Vec::new();
        let start: Vec<WeightValue> = vec![WeightValue::zero(width); self.generators()];
        self.visit(0, 0, &start, &mut out, n);
        out
    }

    fn visit(&self, next: usize, mask: u32, sums: &[WeightValue], out: &mut Vec<u32>, n: usize) {
        if sums
            .iter()
            .all(|s| s.im2pi.is_integer() && s.re.iter().all(Scalar::is_zero))
        {
            out.push(mask);
        }
        for i in next..n {
            let extended: Vec<WeightValue> = sums
                .iter()
                .zip(&self.table)
                .map(|(s, row)| s.add(&row[i]))
                .collect();
            self.visit(i + 1, mask | (1 << i), &extended, out, n);
        }
    }

    /// All trivial index sets, ordered by size and then lexicographically.
    pub fn trivial_subsets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self
            .trivial_masks()
            .into_iter()
            .map(|m| mask_indices(m, self.covectors()))
            .collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets
    }

    /// `b_p` = number of trivial index sets of size `p`.
    pub fn betti_table(&self) -> Vec<usize> {
        let mut b = vec![0; self.covectors() + 1];
        for m in self.trivial_masks() {
            b[m.count_ones() as usize] += 1;
        }
        b
    }

    /// Whether the product of all characters is trivial on the lattice.
    pub fn is_unimodular_system(&self) -> bool {
        self.mask_is_trivial(full_mask(self.covectors()))
    }

    /// Checks that the complement of every trivial index set is trivial.
    pub fn complement_duality_check(&self) -> Result<()> {
        if !self.is_unimodular_system() {
            return Err(Error::NotUnimodular);
        }
        let full = full_mask(self.covectors());
        let trivial: BTreeSet<u32> = self.trivial_masks().into_iter().collect();
        for &m in &trivial {
            if !trivial.contains(&(full & !m)) {
                return Err(Error::DualityFailure(mask_indices(m, self.covectors())));
            }
        }
        Ok(())
    }

    /// Certificate that the metric making the `x_i` orthonormal is formal:
    /// every trivial monomial is closed (zero differential) and coclosed
    /// (the star maps trivial monomials to trivial monomials).
    pub fn mt_certificate(&self) -> Result<FormalityCertificate> {
        self.complement_duality_check()?;
        let trivial_subsets = self.trivial_subsets();
        let mut betti = vec![0; self.covectors() + 1];
        for s in &trivial_subsets {
            betti[s.len()] += 1;
        }
        Ok(FormalityCertificate {
            covectors: self.covectors(),
            betti,
            trivial_subsets,
            duality_ok: true,
            differential_vanishes: true,
            formal: true,
        })
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

fn mask_indices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalityCertificate {
    pub covectors: usize,
    pub betti: Vec<usize>,
    pub trivial_subsets: Vec<Vec<usize>>,
    pub duality_ok: bool,
    /// The subcomplex spanned by trivial monomials has zero differential;
    /// holds by assumption in the semisimple case.
    pub differential_vanishes: bool,
    pub formal: bool,
}

impl FormalityCertificate {
    /// Replays the certificate against `system`: each listed set is trivial,
    /// the list is complete and closed under complements, and the Betti
    /// numbers count it.
    pub fn verify(&self, system: &CharacterSystem) -> std::result::Result<(), String> {
        let n = system.covectors();
        if n != self.covectors || self.betti.len() != n + 1 {
            return Err("covector count does not match".into());
        }
        let listed: BTreeSet<Vec<usize>> = self.trivial_subsets.iter().cloned().collect();
        if listed.len() != self.trivial_subsets.len() {
            return Err("duplicate subsets".into());
        }
        for s in &self.trivial_subsets {
            match system.is_trivial(s) {
                Ok(true) => {}
                Ok(false) => return Err(format!("{s:?} is not trivial")),
                Err(e) => return Err(e.to_string()),
            }
            let complement: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
            if !listed.contains(&complement) {
                return Err(format!("complement of {s:?} missing"));
            }
        }
        let mut counts = vec![0; n + 1];
        for s in &self.trivial_subsets {
            counts[s.len()] += 1;
        }
        if counts != self.betti {
            return Err("betti numbers do not count the listed subsets".into());
        }
        if system.trivial_subsets().len() != listed.len() {
            return Err("list of trivial subsets is incomplete".into());
        }
        if !(self.duality_ok && self.differential_vanishes && self.formal) {
            return Err("certificate does not conclude formality".into());
        }
        Ok(())
    }
}

pub fn is_trivial(system: &CharacterSystem, indices: &[usize]) -> Result<bool> {
    system.is_trivial(indices)
}

pub fn betti_table(system: &CharacterSystem) -> Vec<usize> {
    system.betti_table()
}

pub fn mt_certificate(system: &CharacterSystem) -> Result<FormalityCertificate> {
    system.mt_certificate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// Symbol vector `Σ c_s s` over `width - 1` symbols.
    fn sym(width: usize, coeffs: &[(usize, i64)]) -> WeightValue {
        let mut re = vec![int(0); width];
        for &(s, c) in coeffs {
            re[s] = int(c);
        }
        WeightValue::real(re)
    }

    fn sol3() -> CharacterSystem {
        let b = SymbolBasis::new(names(&["a"]), vec![]).unwrap();
        CharacterSystem::new(
            b,
            names(&["x", "y", "z"]),
            vec![vec![sym(2, &[(0, 1)]), sym(2, &[(0, -1)]), sym(2, &[])]],
        )
        .unwrap()
    }

    #[test]
    fn sol3_triviality() {
        let s = sol3();
        assert!(s.is_trivial(&[]).unwrap());
        assert!(s.is_trivial(&[2]).unwrap());
        assert!(!s.is_trivial(&[0]).unwrap());
        assert!(s.is_trivial(&[0, 1]).unwrap());
        assert!(s.is_trivial(&[3]).is_err());
        assert_eq!(s.betti_table(), vec![1, 1, 1, 1]);
        assert!(s.is_unimodular_system());
        assert!(s.complement_duality_check().is_ok());
        assert_eq!(s.zero_weight_covectors(), vec![2]);
    }

    #[test]
    fn relations_make_sums_vanish() {
        let b = SymbolBasis::new(
            names(&["a", "b", "c"]),
            vec![vec![int(1), int(1), int(1), int(0)]],
        )
        .unwrap();
        assert!(b.is_zero(&[int(1), int(1), int(1), int(0)]));
        assert!(!b.is_zero(&[int(1), int(1), int(0), int(0)]));
        let s = CharacterSystem::new(
            b,
            names(&["x", "y", "z", "t"]),
            vec![vec![
                sym(4, &[(0, 1)]),
                sym(4, &[(1, 1)]),
                sym(4, &[(2, 1)]),
                sym(4, &[]),
            ]],
        )
        .unwrap();
        assert_eq!(s.betti_table(), vec![1, 1, 0, 1, 1]);
        assert!(s.mt_certificate().unwrap().verify(&s).is_ok());
    }

    #[test]
    fn non_unimodular_system() {
        let b = SymbolBasis::new(names(&["s"]), vec![]).unwrap();
        let s = CharacterSystem::new(
            b,
            names(&["u", "v"]),
            vec![vec![sym(2, &[(0, 1)]), sym(2, &[(0, 1)])]],
        )
        .unwrap();
        assert!(!s.is_unimodular_system());
        assert_eq!(s.complement_duality_check(), Err(Error::NotUnimodular));
        assert_eq!(s.mt_certificate(), Err(Error::NotUnimodular));
    }

    #[test]
    fn empty_system_is_unimodular() {
        let b = SymbolBasis::new(vec![], vec![]).unwrap();
        let s = CharacterSystem::new(b, vec![], vec![]).unwrap();
        assert!(s.is_unimodular_system());
        assert_eq!(s.betti_table(), vec![1]);
    }

    #[test]
    fn integral_imaginary_parts_are_trivial() {
        let b = SymbolBasis::new(vec![], vec![]).unwrap();
        let half = WeightValue {
            re: vec![int(0)],
            im2pi: crate::scalar::rat(1, 2),
        };
        let s =
            CharacterSystem::new(b, names(&["u", "v"]), vec![vec![half.clone(), half]]).unwrap();
        assert!(!s.is_trivial(&[0]).unwrap());
        assert!(s.is_trivial(&[0, 1]).unwrap());
    }

    #[test]
    fn torus_certificate() {
        let b = SymbolBasis::new(vec![], vec![]).unwrap();
        let s = CharacterSystem::new(b, names(&["u", "v"]), vec![vec![sym(1, &[]), sym(1, &[])]])
            .unwrap();
        let c = s.mt_certificate().unwrap();
        assert_eq!(c.betti, vec![1, 2, 1]);
        assert!(c.formal);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let s = sol3();
        let mut c = s.mt_certificate().unwrap();
        assert!(c.verify(&s).is_ok());
        c.trivial_subsets.push(vec![0]);
        c.betti[1] += 1;
        assert!(c.verify(&s).is_err());
    }

    #[test]
    fn bad_shapes() {
        let b = SymbolBasis::new(names(&["a"]), vec![]).unwrap();
        assert!(CharacterSystem::new(b.clone(), names(&["x"]), vec![vec![]]).is_err());
        assert!(CharacterSystem::new(b, names(&["x"]), vec![vec![sym(3, &[])]]).is_err());
        assert!(SymbolBasis::new(names(&["a", "a"]), vec![]).is_err());
        assert!(SymbolBasis::new(names(&["a"]), vec![vec![int(1)]]).is_err());
    }
}
