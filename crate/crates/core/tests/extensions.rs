//! Enlargements and square-zero extensions built from cocycles.

use std::sync::Arc;

use metagroup_core::algebra::MetagroupAlgebra;
use metagroup_core::cohomology::{coboundary_matrix, derivations, is_coboundary, is_cocycle, CochainSpace, Support};
use metagroup_core::extensions::{
    algebra_extension, enlargement_scale, enlargement_sum, find_equivalence, module_enlargement, semidirect_inner,
    trivializing_enlargement, Enlargement,
};
use metagroup_core::generators::parse_metagroup;
use metagroup_core::gmodule::GradedBimodule;
use metagroup_core::linalg::SparseVec;
use metagroup_core::ring::Ring;
use metagroup_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn algebra(spec: &str, ring: Ring) -> MetagroupAlgebra {
    MetagroupAlgebra::new(Arc::new(parse_metagroup(spec).unwrap()), ring).unwrap()
}

fn random_vec(rng: &mut ChaCha8Rng, ring: &Ring, dim: usize, density: f64) -> SparseVec {
    let mut terms = Vec::new();
    for i in 0..dim {
        if rng.gen_bool(density) {
            terms.push((i, ring.from_i64(rng.gen_range(-3..=3))));
        }
    }
    SparseVec::from_terms(ring, terms)
}

fn combination(rng: &mut ChaCha8Rng, ring: &Ring, basis: &[SparseVec]) -> SparseVec {
    basis.iter().fold(SparseVec::new(), |acc, b| {
        acc.axpy(ring, &ring.from_i64(rng.gen_range(-2..=2)), b)
    })
}

#[test]
fn defect_report_empty_iff_cocycle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (spec, support) in [("cyclic2", Support::Full), ("cd2", Support::Full), ("cd3", Support::Graded)] {
        let a = algebra(spec, Ring::Rationals);
        let ring = a.ring().clone();
        let r = GradedBimodule::regular(&a);
        let s1 = CochainSpace::new(&r, 1, support).unwrap();
        let s2 = CochainSpace::new(&r, 2, support).unwrap();
        let d1 = coboundary_matrix(&r, 1, support).unwrap();
        let mut seen = [false; 2];
        for trial in 0..12 {
            let f = if trial % 2 == 0 {
                d1.apply(&ring, &random_vec(&mut rng, &ring, s1.dim(), 0.5))
            } else {
                random_vec(&mut rng, &ring, s2.dim(), 0.1)
            };
            let cocycle = is_cocycle(&r, &s2, &f).unwrap().is_cocycle;
            let (_, defects) = algebra_extension(&r, &s2, &f).unwrap();
            assert_eq!(defects.is_empty(), cocycle, "{spec}, trial {trial}");
            seen[usize::from(cocycle)] = true;
        }
        assert_eq!(seen, [true, true], "{spec}");
    }
}

#[test]
fn induced_actions_match_the_bimodule() {
    let a = algebra("cd3", Ring::Rationals);
    let ring = a.ring().clone();
    let r = GradedBimodule::regular(&a);
    let s2 = CochainSpace::new(&r, 2, Support::Graded).unwrap();
    let f = random_vec(&mut ChaCha8Rng::seed_from_u64(3), &ring, s2.dim(), 0.3);
    let (ext, _) = algebra_extension(&r, &s2, &f).unwrap();
    for x in 0..8 {
        for k in 0..8 {
            let m = ext.embed(&SparseVec::unit(k, &ring));
            let g = ext.gamma(&a.basis(x));
            assert_eq!(ext.mul(&g, &m), r.act_left(x, &SparseVec::unit(k, &ring)));
            assert_eq!(ext.mul(&m, &g), r.act_right(&SparseVec::unit(k, &ring), x));
            assert!(ext.mul(&m, &m).is_zero());
        }
    }
}

fn trivial_setup() -> (GradedBimodule, GradedBimodule, CochainSpace, Vec<SparseVec>) {
    let a = algebra("cyclic3", Ring::PrimeField(3));
    let m = GradedBimodule::trivial(&a);
    let hom = GradedBimodule::hom(&m, &m).unwrap();
    let space = CochainSpace::new(&hom, 1, Support::Full).unwrap();
    let z = derivations(&hom, Support::Full).unwrap();
    (m, hom, space, z)
}

#[test]
fn module_enlargement_splits_iff_coboundary() {
    let (m, hom, space, z) = trivial_setup();
    let ring = m.ring().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = [false; 2];
    for trial in 0..10 {
        let f = if trial == 0 { SparseVec::new() } else { combination(&mut rng, &ring, &z) };
        let e = module_enlargement(&f, &m, &m).unwrap();
        let coboundary = is_coboundary(&hom, &space, &f).unwrap().is_some();
        assert_eq!(e.splitting_map.is_some(), coboundary);
        assert_eq!(e.enlargement.splitting().unwrap().is_some(), coboundary);
        seen[usize::from(coboundary)] = true;
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn recovered_map_spans_a_complement() {
    let a = algebra("cd2", Ring::Rationals);
    let ring = a.ring().clone();
    let r = GradedBimodule::regular(&a);
    let left = GradedBimodule::new(a.clone(), "left", r.grades().to_vec(), r.left_matrices().to_vec(), None).unwrap();
    let hom = GradedBimodule::hom(&left, &left).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let w = random_vec(&mut rng, &ring, hom.dim(), 0.4);
        let f = coboundary_matrix(&hom, 0, Support::Full).unwrap().apply(&ring, &w);
        let e = module_enlargement(&f, &left, &left).unwrap();
        let u = e.splitting_map.expect("coboundaries split");
        let d = left.dim();
        // the vectors (u(n), n) are closed under the action of every basis element
        let section: Vec<SparseVec> = (0..d)
            .map(|j| {
                let un: Vec<(usize, _)> = u.iter().filter(|(e, _)| e % d == j).map(|(e, c)| (e / d, c.clone())).collect();
                SparseVec::from_terms(&ring, un).add(&ring, &SparseVec::unit(d + j, &ring))
            })
            .collect();
        for x in 0..a.dim() {
            for (j, s) in section.iter().enumerate() {
                let image = e.enlargement.total.act_left(x, s);
                let lower = image.restrict(d..2 * d);
                let expected = lower.iter().fold(SparseVec::new(), |acc, (k, c)| acc.axpy(&ring, c, &section[*k]));
                assert_eq!(image, expected, "basis {x}, section vector {j}");
            }
        }
    }
}

#[test]
fn trivializing_enlargement_kills_the_class() {
    let a = algebra("cd3", Ring::Rationals);
    let ring = a.ring().clone();
    let r = GradedBimodule::regular(&a);
    let s1 = CochainSpace::new(&r, 1, Support::Full).unwrap();
    let ders = derivations(&r, Support::Full).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..3 {
        let d = combination(&mut rng, &ring, &ders);
        let t = trivializing_enlargement(&r, &s1, &d, 1).unwrap();
        assert!(t.verified);
        let total = &t.enlargement.total;
        let space = CochainSpace::new(total, 1, Support::Full).unwrap();
        assert!(is_coboundary(total, &space, &t.f_in_total).unwrap().is_some());
        t.enlargement.check_exact().unwrap();
    }
}

#[test]
fn semidirect_product_makes_derivations_inner() {
    let a = algebra("cd2", Ring::Rationals);
    let ring = a.ring().clone();
    let r = GradedBimodule::regular(&a);
    let s1 = CochainSpace::new(&r, 1, Support::Full).unwrap();
    let ders = derivations(&r, Support::Full).unwrap();
    let d = combination(&mut ChaCha8Rng::seed_from_u64(2), &ring, &ders);
    let sd = semidirect_inner(&r, &d).unwrap();
    for x in 0..a.dim() {
        let expected = sd.embed_module(&sd.xi.apply(&ring, &s1.value(&d, x)));
        assert_eq!(sd.commutator_with_p(&a.basis(x)), expected);
    }
}

fn enlargement_of(f: &SparseVec, m: &GradedBimodule) -> Enlargement {
    module_enlargement(f, m, m).unwrap().enlargement
}

#[test]
fn baer_arithmetic() {
    let (m, _, _, z) = trivial_setup();
    let ring = m.ring().clone();
    let zero = enlargement_of(&SparseVec::new(), &m);
    let f = &z[z.len() - 1];
    let ef = enlargement_of(f, &m);
    // E + trivial ≅ E
    let sum = enlargement_sum(&ef, &zero).unwrap();
    assert!(find_equivalence(&sum, &ef).unwrap().is_some());
    // 0·E is split
    let scaled = enlargement_scale(&ef, &ring.zero()).unwrap();
    assert!(find_equivalence(&scaled, &zero).unwrap().is_some());
    assert!(scaled.splitting().unwrap().is_some());
    // E + (−1)E is split, E itself is not
    let minus = enlargement_scale(&ef, &ring.from_i64(-1)).unwrap();
    let cancel = enlargement_sum(&ef, &minus).unwrap();
    assert!(cancel.splitting().unwrap().is_some());
    assert!(ef.splitting().unwrap().is_none());
    // sums of split enlargements split
    let split_sum = enlargement_sum(&zero, &zero).unwrap();
    assert!(split_sum.splitting().unwrap().is_some());
}

#[test]
fn sums_of_equivalent_inputs_are_equivalent() {
    let (m, hom, _, z) = trivial_setup();
    let ring = m.ring().clone();
    let f = &z[z.len() - 1];
    let w = SparseVec::unit(0, &ring);
    let shifted = f.add(&ring, &coboundary_matrix(&hom, 0, Support::Full).unwrap().apply(&ring, &w));
    let (a, b) = (enlargement_of(f, &m), enlargement_of(&shifted, &m));
    assert!(find_equivalence(&a, &b).unwrap().is_some());
    let g = &z[0];
    let eg = enlargement_of(g, &m);
    let s1 = enlargement_sum(&a, &eg).unwrap();
    let s2 = enlargement_sum(&b, &eg).unwrap();
    assert!(find_equivalence(&s1, &s2).unwrap().is_some());
    let two = ring.from_i64(2);
    assert!(find_equivalence(&enlargement_scale(&a, &two).unwrap(), &enlargement_scale(&b, &two).unwrap())
        .unwrap()
        .is_some());
}

#[test]
fn invalid_inputs() {
    let a = algebra("cyclic2", Ring::Rationals);
    let r = GradedBimodule::regular(&a);
    let s1 = CochainSpace::new(&r, 1, Support::Full).unwrap();
    let not_cocycle = SparseVec::unit(3, a.ring());
    assert!(matches!(trivializing_enlargement(&r, &s1, &not_cocycle, 1), Err(Error::NotACocycle(_))));
    let s3 = CochainSpace::new(&r, 3, Support::Full).unwrap();
    assert!(matches!(trivializing_enlargement(&r, &s3, &SparseVec::new(), 1), Err(Error::CapExceeded(_))));
    let z = algebra("cyclic2", Ring::Integers);
    let rz = GradedBimodule::regular(&z);
    let sz = CochainSpace::new(&rz, 1, Support::Full).unwrap();
    assert!(matches!(trivializing_enlargement(&rz, &sz, &SparseVec::new(), 1), Err(Error::RingIncompatible(_))));
    let bigger = GradedBimodule::regular_power(&a, 2);
    let e1 = enlargement_of(&SparseVec::new(), &GradedBimodule::new(a.clone(), "l", r.grades().to_vec(), r.left_matrices().to_vec(), None).unwrap());
    let e2 = enlargement_of(&SparseVec::new(), &GradedBimodule::new(a.clone(), "l2", bigger.grades().to_vec(), bigger.left_matrices().to_vec(), None).unwrap());
    assert!(matches!(enlargement_sum(&e1, &e2), Err(Error::DimensionMismatch(_))));
}
