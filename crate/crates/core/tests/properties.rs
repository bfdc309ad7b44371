//! Invariants as property tests. Random structures come from the library's
//! seeded generators; proptest drives the seeds and the small parameters.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use solvform::action::{averaging_projector, invariant_cohomology_dims, FiniteAction};
use solvform::catalog::{self, Route};
use solvform::characters::{CharacterSystem, SymbolBasis, WeightValue};
use solvform::exterior::Multivector;
use solvform::hodge::{formality_check, FormalityVerdict, HodgeComplex, MetricFrame};
use solvform::lie::LieAlgebra;
use solvform::linalg::Matrix;
use solvform::random;
use solvform::scalar::{int, Gaussian, Rational, Scalar};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn signed(w: Multivector, negative: bool) -> Multivector {
    if negative {
        -w
    } else {
        w
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn wedge_is_graded_commutative(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let (p, q) = (r.gen_range(0..=n), r.gen_range(0..=n));
        let a = random::random_form(&mut r, n, p);
        let b = random::random_form(&mut r, n, q);
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        prop_assert_eq!(ab, signed(ba, p * q % 2 == 1));
    }

    #[test]
    fn wedge_is_associative(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let forms: Vec<Multivector> = (0..3)
            .map(|_| {
                let p = r.gen_range(0..=2);
                let q = r.gen_range(0..=2);
                random::random_form(&mut r, n, p.min(n)) + random::random_form(&mut r, n, q.min(n))
            })
            .collect();
        let left = forms[0].wedge(&forms[1]).unwrap().wedge(&forms[2]).unwrap();
        let right = forms[0].wedge(&forms[1].wedge(&forms[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inner_product_is_positive(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let mut a = Multivector::zero(n);
        for p in 0..=n {
            a = a + random::random_form(&mut r, n, p);
        }
        let norm = a.inner_product(&a).unwrap();
        if a.is_zero() {
            prop_assert!(Scalar::is_zero(&norm));
        } else {
            prop_assert!(norm > <Rational as Scalar>::zero());
        }
    }

    #[test]
    fn odd_forms_square_to_zero(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let p = 2 * r.gen_range(0..=(n - 1) / 2) + 1;
        let a = random::random_form(&mut r, n, p);
        prop_assert!(a.wedge(&a).unwrap().is_zero());
    }

    #[test]
    fn grade_projections_partition(seed in any::<u64>(), n in 0usize..=5) {
        let mut r = rng(seed);
        let mut a = Multivector::zero(n);
        for p in 0..=n {
            a = a + random::random_form(&mut r, n, p);
        }
        let mut sum = Multivector::zero(n);
        for p in 0..=n {
            let part = a.grade_project(p).unwrap();
            prop_assert!(part.grades().iter().all(|&g| g == p));
            sum = sum + part;
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn d_squared_and_derivation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let unimodular = r.gen_bool(0.5);
        let lie = random::random_algebra(&mut r, 6, unimodular).unwrap();
        let n = lie.dim();
        let (p, q) = (r.gen_range(0..=n), r.gen_range(0..=n));
        let a = random::random_form(&mut r, n, p);
        let b = random::random_form(&mut r, n, q);
        prop_assert!(lie.differential(&lie.differential(&a).unwrap()).unwrap().is_zero());
        let lhs = lie.differential(&a.wedge(&b).unwrap()).unwrap();
        let da_b = lie.differential(&a).unwrap().wedge(&b).unwrap();
        let a_db = a.wedge(&lie.differential(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, da_b + signed(a_db, p % 2 == 1));
    }

    #[test]
    fn euler_characteristic_vanishes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lie = random::random_algebra(&mut r, 6, false).unwrap();
        let chi: i64 = lie
            .betti_numbers()
            .iter()
            .enumerate()
            .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        prop_assert_eq!(chi, 0);
    }

    #[test]
    fn poincare_duality_when_unimodular(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lie = random::random_algebra(&mut r, 6, true).unwrap();
        prop_assert!(lie.is_unimodular());
        let b = lie.betti_numbers();
        let rev: Vec<usize> = b.iter().rev().copied().collect();
        prop_assert_eq!(b, rev);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_star_sign(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let frame = MetricFrame::new(random::random_coframe(&mut r, n)).unwrap();
        let p = r.gen_range(0..=n);
        let w = random::random_form(&mut r, n, p);
        let ss = frame.hodge_star(&frame.hodge_star(&w).unwrap()).unwrap();
        prop_assert_eq!(ss, signed(w, p * (n - p) % 2 == 1));
    }

    #[test]
    fn wedge_star_is_inner_times_volume(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let frame = MetricFrame::new(random::random_coframe(&mut r, n)).unwrap();
        let p = r.gen_range(0..=n);
        let a = random::random_form(&mut r, n, p);
        let b = random::random_form(&mut r, n, p);
        let lhs = a.wedge(&frame.hodge_star(&b).unwrap()).unwrap();
        let vol: Multivector = frame.volume();
        prop_assert_eq!(lhs, vol.scale(&frame.inner(&a, &b).unwrap()));
    }

    #[test]
    fn frame_round_trip(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let frame = MetricFrame::new(random::random_coframe(&mut r, n)).unwrap();
        let p = r.gen_range(0..=n);
        let w = random::random_form(&mut r, n, p);
        prop_assert_eq!(frame.from_frame(&frame.to_frame(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn star_is_conjugate_linear(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let frame = MetricFrame::new(random::random_coframe(&mut r, n)).unwrap();
        let p = r.gen_range(0..=n);
        let w: Multivector<Gaussian> = random::random_form(&mut r, n, p)
            .map_coeffs(|c| Gaussian::new(c.clone(), c.clone() + int(1)));
        let iw = w.map_coeffs(|c| c.clone() * Gaussian::i());
        let lhs = frame.hodge_star(&iw).unwrap();
        let rhs = frame.hodge_star(&w).unwrap().map_coeffs(|c| c.clone() * -Gaussian::i());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_and_codifferential_are_adjoint(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lie = random::random_algebra(&mut r, 5, true).unwrap();
        let n = lie.dim();
        let frame = MetricFrame::new(random::random_coframe(&mut r, n)).unwrap();
        let mut alpha = Multivector::zero(n);
        let mut beta = Multivector::zero(n);
        for p in 0..=n {
            alpha = alpha + random::random_form(&mut r, n, p);
            beta = beta + random::random_form(&mut r, n, p);
        }
        let left = frame.inner(&lie.differential(&alpha).unwrap(), &beta).unwrap();
        let right = frame.inner(&alpha, &frame.codifferential(&lie, &beta).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn verdict_invariant_under_signed_permutations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lie = random::random_algebra(&mut r, 5, true).unwrap();
        let n = lie.dim();
        let frame = MetricFrame::new(random::random_coframe(&mut r, n)).unwrap();
        let q = random::random_signed_permutation(&mut r, n);
        let moved = frame.transformed(&q).unwrap();
        prop_assert_eq!(
            formality_check(&lie, &frame).unwrap().is_formal(),
            formality_check(&lie, &moved).unwrap().is_formal()
        );
    }

    #[test]
    fn witnesses_are_sound(seed in any::<u64>()) {
        let mut r = rng(seed);
        let unimodular = r.gen_bool(0.7);
        let lie = random::random_algebra(&mut r, 5, unimodular).unwrap();
        let n = lie.dim();
        let frame = if r.gen_bool(0.5) {
            MetricFrame::identity(n)
        } else {
            MetricFrame::new(random::random_coframe(&mut r, n)).unwrap()
        };
        if let FormalityVerdict::NotFormal(w) = formality_check(&lie, &frame).unwrap() {
            let harmonic = |f: &Multivector| {
                lie.differential(f).unwrap().is_zero()
                    && frame.codifferential(&lie, f).unwrap().is_zero()
            };
            prop_assert!(harmonic(&w.left));
            prop_assert!(harmonic(&w.right));
            prop_assert_eq!(&w.product, &w.left.wedge(&w.right).unwrap());
            prop_assert!(!harmonic(&w.product));
        }
    }

    #[test]
    fn harmonic_dims_equal_betti_when_unimodular(seed in any::<u64>()) {
        let mut r = rng(seed);
        let lie = random::random_algebra(&mut r, 5, true).unwrap();
        let frame = MetricFrame::new(random::random_coframe(&mut r, lie.dim())).unwrap();
        let hc = HodgeComplex::new(&lie, &frame).unwrap();
        let dims: Vec<usize> = hc.all_harmonic().iter().map(Vec::len).collect();
        prop_assert_eq!(dims, lie.betti_numbers());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn character_betti_is_palindromic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random::random_character_system(&mut r, 12).unwrap();
        let b = s.betti_table();
        let n = s.covectors();
        prop_assert_eq!(b[0], 1);
        prop_assert!(b.iter().sum::<usize>() <= 1 << n);
        let rev: Vec<usize> = b.iter().rev().copied().collect();
        prop_assert_eq!(&b, &rev);
        prop_assert!(s.complement_duality_check().is_ok());
    }

    #[test]
    fn extra_generators_only_shrink_betti(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random::random_character_system(&mut r, 10).unwrap();
        let row = random::random_generator_row(&mut r, &s);
        let refined = s.with_generator(row).unwrap();
        for (a, b) in refined.betti_table().iter().zip(s.betti_table()) {
            prop_assert!(*a <= b);
        }
    }

    #[test]
    fn rational_weights_agree_with_cohomology(weights in prop::collection::vec(-3i64..=3, 1..=5)) {
        let q: Vec<Rational> = weights.iter().map(|&w| int(w)).collect();
        let lie = LieAlgebra::diagonal_extension(&q).unwrap();
        let basis = SymbolBasis::new(vec![], vec![]).unwrap();
        let mut row: Vec<WeightValue> = q.iter().map(|w| WeightValue::real(vec![w.clone()])).collect();
        row.push(WeightValue::zero(1));
        let s = CharacterSystem::new(basis, lie.labels().to_vec(), vec![row]).unwrap();
        prop_assert_eq!(s.betti_table(), lie.betti_numbers());
    }
}

fn catalog_algebras() -> Vec<(String, LieAlgebra)> {
    catalog::list()
        .into_iter()
        .filter_map(|name| match catalog::get(name).unwrap().route {
            Route::CeHodge { lie, .. } => Some((name.to_string(), lie)),
            Route::Characters(_) => None,
        })
        .collect()
}

#[test]
fn trivial_group_gives_betti_on_catalog() {
    for (name, lie) in catalog_algebras() {
        let id = FiniteAction::trivial(lie.dim());
        assert_eq!(
            invariant_cohomology_dims(&lie, &id).unwrap(),
            lie.betti_numbers(),
            "{name}"
        );
    }
}

#[test]
fn catalog_algebras_are_unimodular() {
    for (name, lie) in catalog_algebras() {
        assert!(lie.is_unimodular(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projector_is_idempotent_with_rank_invariant_dim(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.gen_range(2..=5);
        let g = random::nilpotent_tower(&mut r, dim).unwrap();
        let chi: Vec<i64> = (0..dim).map(|_| r.gen_range(0..2)).collect();
        let action = FiniteAction::closure(dim, vec![g.sign_automorphism(&chi)], 100).unwrap();
        let dims = invariant_cohomology_dims(&g.lie, &action).unwrap();
        for p in 0..=dim {
            let proj = averaging_projector(&g.lie, &action, p).unwrap();
            prop_assert_eq!(&(&proj * &proj), &proj);
            prop_assert_eq!(proj.rank(), dims[p]);
        }
    }

    #[test]
    fn more_generators_fewer_invariants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = r.gen_range(2..=5);
        let g = random::nilpotent_tower(&mut r, dim).unwrap();
        let mut chi = || -> Vec<i64> { (0..dim).map(|_| r.gen_range(0..2)).collect() };
        let first = g.sign_automorphism(&chi());
        let second = g.sign_automorphism(&chi());
        let small = FiniteAction::closure(dim, vec![first.clone()], 100).unwrap();
        let big = FiniteAction::closure(dim, vec![first, second], 100).unwrap();
        let a = invariant_cohomology_dims(&g.lie, &small).unwrap();
        let b = invariant_cohomology_dims(&g.lie, &big).unwrap();
        for (x, y) in b.iter().zip(&a) {
            prop_assert!(x <= y);
        }
    }

    #[test]
    fn antipodal_parity(seed in any::<u64>(), half in 0usize..=2) {
        let n = 2 * half + 1;
        let mut r = rng(seed);
        let lie = LieAlgebra::abelian(n).unwrap();
        let minus: Vec<Rational> = vec![int(-1); n];
        let mut gens = vec![Matrix::diagonal(&minus)];
        if r.gen_bool(0.5) {
            let signs: Vec<Rational> = (0..n).map(|_| int(if r.gen_bool(0.5) { 1 } else { -1 })).collect();
            gens.push(Matrix::diagonal(&signs));
        }
        let action = FiniteAction::closure(n, gens, 100).unwrap();
        prop_assert_eq!(action.order() % 2, 0);
        let dims = invariant_cohomology_dims(&lie, &action).unwrap();
        for p in (1..n).step_by(2) {
            prop_assert_eq!(dims[p], 0);
        }
    }
}
