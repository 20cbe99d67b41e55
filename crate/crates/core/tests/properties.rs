//! Module-level invariants from the operation contracts, beyond the
//! acceptance suite: exact algebraic identities on seeded random data.

mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use sharbly_core::gl2of::{is_normal_form, normal_form, ray_normalize, Mat2, RayVector, Vec2};
use sharbly_core::qfield::{Embedding, FieldElem, FieldParams, Rational};
use sharbly_core::sharbly::SharblyChain;
use sharbly_core::voronoi::{min_vectors, ConeContext, SymPair};

fn ctx() -> &'static ConeContext {
    ConeContext::qsqrt2()
}

fn random_rational(rng: &mut rand_chacha::ChaCha8Rng, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn random_field_elem(rng: &mut rand_chacha::ChaCha8Rng, d: u32, bound: i64) -> FieldElem {
    FieldElem::new(d, random_rational(rng, bound), random_rational(rng, bound))
}

#[test]
fn norm_is_multiplicative() {
    let mut rng = seeded_rng(11);
    for _ in 0..1000 {
        let x = random_field_elem(&mut rng, 2, 30);
        let y = random_field_elem(&mut rng, 2, 30);
        assert_eq!(x.mul(&y).norm_abs(), x.norm_abs() * y.norm_abs());
    }
}

#[test]
fn canonical_associate_is_orbit_constant() {
    let p = FieldParams::sqrt2();
    let mut rng = seeded_rng(12);
    for _ in 0..300 {
        let x = loop {
            let x = random_field_elem(&mut rng, 2, 20);
            if !x.is_zero() {
                break x;
            }
        };
        let (y, u) = p.canonical_associate(&x).unwrap();
        assert_eq!(y, u.mul(&x));
        assert!(u.is_unit());
        // idempotent
        let (y2, u2) = p.canonical_associate(&y).unwrap();
        assert_eq!(y2, y);
        assert!(u2.is_one());
        // constant on the unit orbit +-eps^k, |k| <= 6
        let k: i32 = rng.gen_range(-6..=6);
        let mut unit = FieldElem::one(2);
        for _ in 0..k.abs() {
            unit = unit.mul(if k >= 0 { p.eps() } else { p.eps_inv() });
        }
        if rng.gen_bool(0.5) {
            unit = unit.neg();
        }
        let (y3, _) = p.canonical_associate(&unit.mul(&x)).unwrap();
        assert_eq!(y3, y);
    }
}

#[test]
fn mod_translate_is_periodic_and_idempotent() {
    let p = FieldParams::sqrt2();
    let mut rng = seeded_rng(13);
    for _ in 0..300 {
        let b = random_field_elem(&mut rng, 2, 20);
        let t = loop {
            let t = random_field_elem(&mut rng, 2, 10);
            if !t.is_zero() {
                break t;
            }
        };
        let r = p.mod_translate(&b, &t).unwrap();
        assert_eq!(p.mod_translate(&r, &t).unwrap(), r);
        let q = FieldElem::from_integers(2, rng.gen_range(-10..=10), rng.gen_range(-10..=10));
        let shifted = b.add(&t.mul(&q));
        assert_eq!(p.mod_translate(&shifted, &t).unwrap(), r);
    }
}

#[test]
fn nearest_integer_is_norm_euclidean_for_2_and_3() {
    for d in [2u32, 3] {
        let p = if d == 2 {
            FieldParams::sqrt2()
        } else {
            FieldParams::sqrt3()
        };
        let mut rng = seeded_rng(14 + d as u64);
        for _ in 0..1000 {
            let x = FieldElem::new(
                d,
                random_rational(&mut rng, 100),
                random_rational(&mut rng, 100),
            );
            let a = p.nearest_integer(&x);
            assert!(a.is_integral());
            assert!(
                x.sub(&a).norm_abs() < Rational::from_integer(1.into()),
                "d={d}"
            );
        }
    }
}

/// Test-side mirror of the euclidean descent: the printed algorithm must
/// clear the lower-left entry in at most 64 norm-decreasing steps.
#[test]
fn descent_terminates_within_64_steps() {
    let p = FieldParams::sqrt2();
    let mut rng = seeded_rng(15);
    for _ in 0..300 {
        let m = Mat2::new(
            random_o_elem(&mut rng, 9),
            random_o_elem(&mut rng, 9),
            random_o_elem(&mut rng, 9),
            random_o_elem(&mut rng, 9),
        );
        if m.is_zero() || (m.a.is_zero() && m.c.is_zero()) {
            continue;
        }
        let mut a = m.a.clone();
        let mut b = m.b.clone();
        let mut c = m.c.clone();
        let mut dd = m.d.clone();
        let mut steps = 0;
        while !c.is_zero() {
            steps += 1;
            assert!(steps <= 64, "descent exceeded 64 steps");
            if a.is_zero() {
                std::mem::swap(&mut a, &mut c);
                std::mem::swap(&mut b, &mut dd);
                continue;
            }
            let alpha = p.nearest_integer(&a.div(&c).unwrap());
            let a2 = a.sub(&alpha.mul(&c));
            let b2 = b.sub(&alpha.mul(&dd));
            let keep_norm = c.norm_abs();
            a = c;
            b = dd;
            c = a2;
            dd = b2;
            assert!(c.norm_abs() < keep_norm || c.is_zero());
        }
        // and the library's normal form agrees on the coset
        let (m0, g) = normal_form(&p, &m).unwrap();
        assert!(is_normal_form(&p, &m0));
        assert_eq!(g.mul(&m), m0);
    }
}

#[test]
fn ray_normalize_is_gl2o_compatible() {
    let p = FieldParams::sqrt2();
    let mut rng = seeded_rng(16);
    for _ in 0..300 {
        let v = random_vec(&mut rng, 8);
        let g = random_gamma(&mut rng, 5);
        let lhs = ray_normalize(&p, &g.mul_vec(&v)).unwrap();
        let rhs = ray_normalize(&p, &g.mul_vec(ray_normalize(&p, &v).unwrap().vec())).unwrap();
        assert_eq!(lhs, rhs);
    }
}

/// Equivariance of minimal vectors under the form action g.A = g A g^T:
/// the minimal set transports by the inverse transpose.
#[test]
fn min_vectors_equivariance() {
    let c = ctx();
    let p = c.params();
    let mut rng = seeded_rng(17);
    for dual in [&c.data().top_cones[0].dual, &c.data().top_cones[1].dual] {
        for _ in 0..10 {
            let g = random_gamma(&mut rng, 4);
            let moved = dual.act(&g);
            let (m1, s1) = min_vectors(p, dual).unwrap();
            let (m2, s2) = min_vectors(p, &moved).unwrap();
            assert_eq!(m1, m2);
            let git = g.inverse().unwrap().transpose();
            let mut transported: Vec<RayVector> = s1
                .iter()
                .map(|r| ray_normalize(p, &git.mul_vec(r.vec())).unwrap())
                .collect();
            transported.sort();
            assert_eq!(s2, transported);
        }
    }
}

#[test]
fn containing_cone_postcondition_on_random_points() {
    let c = ctx();
    let mut rng = seeded_rng(18);
    for _ in 0..60 {
        // random PSD points: sums of a few rank-one pieces
        let n = rng.gen_range(1..=3);
        let mut p = SymPair::zero(2);
        for _ in 0..n {
            p = p.add(&sharbly_core::voronoi::l_of(&random_vec(&mut rng, 4)));
        }
        let cone = c.containing_cone(&p).unwrap();
        assert!(cone.contains(&p));
        assert!(!cone.generators.is_empty());
        assert_eq!(cone.dim >= 1, true);
        // every generator satisfies every facet inequality
        for g in &cone.generators {
            let pt = sharbly_core::voronoi::l_of(g.vec());
            assert!(cone.contains(&pt));
        }
    }
}

/// Ground-truth oracle for cone location: a positive combination of
/// generators of a (translated) top cone lies in a Voronoi cone whose
/// generator set contains exactly those rays among its extreme rays, by
/// extremality of faces. The walk, the facet enumeration and the face
/// extraction must reproduce that from scratch.
#[test]
fn containing_cone_matches_constructed_membership() {
    let c = ctx();
    let p = c.params();
    let mut rng = seeded_rng(21);
    for round in 0..40 {
        let which = rng.gen_range(0..2) as usize;
        let base = &c.data().top_cones[which].cone.generators;
        let g = random_gamma(&mut rng, 3);
        // translate the cone, pick a random generator subset, and combine
        // with random positive integer weights
        let translated: Vec<RayVector> = base
            .iter()
            .map(|r| ray_normalize(p, &g.mul_vec(r.vec())).unwrap())
            .collect();
        let k = rng.gen_range(1..=translated.len());
        let mut idx: Vec<usize> = (0..translated.len()).collect();
        for i in 0..k {
            let j = rng.gen_range(i..translated.len());
            idx.swap(i, j);
        }
        let chosen: Vec<&RayVector> = idx[..k].iter().map(|&i| &translated[i]).collect();
        let mut point = SymPair::zero(2);
        for r in &chosen {
            let w = Rational::from_integer(rng.gen_range(1i64..=4).into());
            point = point.add(&sharbly_core::voronoi::l_of(r.vec()).scale(&w));
        }
        let cone = c.containing_cone(&point).unwrap();
        for r in &chosen {
            assert!(
                cone.has_generator(r),
                "round {round}: chosen generator missing from the located cone"
            );
        }
        assert!(cone.contains(&point));
        // the located cone is a face of the translated top cone: all its
        // generators are among the translated ones
        for cg in &cone.generators {
            assert!(
                translated.contains(cg),
                "round {round}: located cone has a foreign generator"
            );
        }
    }
}

#[test]
fn chain_accumulation_is_order_independent() {
    let p = ctx().params();
    let mut rng = seeded_rng(19);
    let mut items: Vec<(Vec<Vec2>, i64)> = Vec::new();
    for _ in 0..40 {
        let raw: Vec<Vec2> = (0..3).map(|_| random_vec(&mut rng, 4)).collect();
        items.push((raw, rng.gen_range(-2i64..=2)));
    }
    let mut a = SharblyChain::new();
    for (raw, co) in &items {
        a.add_raw(p, raw, *co).unwrap();
    }
    let mut b = SharblyChain::new();
    for (raw, co) in items.iter().rev() {
        b.add_raw(p, raw, *co).unwrap();
    }
    assert_eq!(a, b);
    // inserting [v, ...] and [-v, ...] accumulates on the same term
    let raw: Vec<Vec2> = (0..3).map(|_| random_vec(&mut rng, 3)).collect();
    let mut c1 = SharblyChain::new();
    c1.add_raw(p, &raw, 1).unwrap();
    let mut negged = raw.clone();
    negged[0] = negged[0].neg();
    c1.add_raw(p, &negged, 1).unwrap();
    if let Some((s, _)) = sharbly_core::sharbly::Sharbly::canonicalize(p, &raw).unwrap() {
        assert_eq!(c1.coeff(&s).abs(), 2);
    }
}

#[test]
fn normal_form_works_over_sqrt3() {
    let p = FieldParams::sqrt3();
    let mut rng = seeded_rng(20);
    let fe3 = |rng: &mut rand_chacha::ChaCha8Rng| {
        FieldElem::from_integers(3, rng.gen_range(-6..=6), rng.gen_range(-6..=6))
    };
    for _ in 0..100 {
        let m = Mat2::new(fe3(&mut rng), fe3(&mut rng), fe3(&mut rng), fe3(&mut rng));
        if m.is_zero() {
            continue;
        }
        let (m0, g) = normal_form(&p, &m).unwrap();
        assert!(is_normal_form(&p, &m0));
        assert_eq!(g.mul(&m), m0);
        assert!(g.is_gl2o());
        assert_eq!(m0.a.embedding_sign(Embedding::First) < 0, false);
    }
}

#[test]
fn min_vectors_values_are_scale_covariant() {
    // rays are scale invariant: rational rescaling multiplies the minimum
    // and fixes the minimizing set
    let c = ctx();
    let p = c.params();
    let dual = &c.data().top_cones[1].dual;
    let (m, s) = min_vectors(p, dual).unwrap();
    let scaled = dual.scale(&BigRational::new(BigInt::from(7), BigInt::from(3)));
    let (m2, s2) = min_vectors(p, &scaled).unwrap();
    assert_eq!(m2, m * BigRational::new(BigInt::from(7), BigInt::from(3)));
    assert_eq!(s, s2);
}
