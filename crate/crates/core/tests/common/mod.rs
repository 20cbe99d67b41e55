//! Shared fixtures for the integration suites: the reference reduction
//! over Q(sqrt 2) and helpers for seeded random data.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sharbly_core::gl2of::{Mat2, Vec2};
use sharbly_core::qfield::FieldElem;
use sharbly_core::sharbly::{LiftedSharbly1, LiftedTerm};
use sharbly_core::voronoi::ConeContext;

pub fn fe(a: i64, b: i64) -> FieldElem {
    FieldElem::from_integers(2, a, b)
}

pub fn vec2(a1: i64, b1: i64, a2: i64, b2: i64) -> Vec2 {
    Vec2::new(fe(a1, b1), fe(a2, b2))
}

/// Columns of the input 1-sharbly T.
pub fn t_cols() -> [Vec2; 3] {
    [vec2(3, 1, 0, 1), vec2(4, 4, -1, 5), vec2(-4, 3, -5, -3)]
}

pub fn t_term(ctx: &ConeContext) -> LiftedTerm {
    LiftedTerm {
        coeff: 1,
        tri: LiftedSharbly1::with_default_lifts(ctx.params(), &t_cols()).unwrap(),
    }
}

/// Columns of S4, the middle triangle of the first pass.
pub fn s4_cols() -> [Vec2; 3] {
    [vec2(0, 0, -1, -1), vec2(1, 0, 0, 0), vec2(-1, -1, 0, -1)]
}

/// Columns of Q4, the case-IV triangle of the third pass.
pub fn q4_cols() -> [Vec2; 3] {
    [vec2(1, -1, 3, 2), vec2(0, 0, -1, -1), vec2(-4, 3, -5, -3)]
}

/// The reference final output list (names and columns). Its R block
/// duplicates its N block verbatim; see the reducedness tests.
pub fn paper_final() -> Vec<(&'static str, [Vec2; 3])> {
    vec![
        (
            "N1",
            [vec2(1, -1, 3, 2), vec2(0, 0, -1, -1), vec2(0, 0, -3, -2)],
        ),
        (
            "N2",
            [vec2(0, 0, -1, -1), vec2(-4, 3, -5, -3), vec2(0, 0, -3, -2)],
        ),
        (
            "N3",
            [vec2(-4, 3, -5, -3), vec2(1, -1, 3, 2), vec2(0, 0, -3, -2)],
        ),
        (
            "O3",
            [vec2(-1, -1, -1, 0), vec2(-1, -1, 0, -1), vec2(1, 0, 0, 0)],
        ),
        (
            "O4",
            [vec2(-1, -1, -1, 0), vec2(1, 0, 0, 0), vec2(3, 1, 0, 1)],
        ),
        (
            "P1",
            [vec2(3, 2, 2, 1), vec2(4, 4, -1, 5), vec2(1, 0, 2, -2)],
        ),
        (
            "P2",
            [vec2(3, 2, 2, 1), vec2(1, 0, 2, -2), vec2(0, 0, -1, -1)],
        ),
        (
            "P3",
            [vec2(3, 2, 2, 1), vec2(0, 0, -1, -1), vec2(-1, -1, 0, -1)],
        ),
        (
            "P4",
            [vec2(3, 2, 2, 1), vec2(-1, -1, 0, -1), vec2(4, 4, -1, 5)],
        ),
        (
            "Q3",
            [vec2(1, -1, 3, 2), vec2(1, 0, 0, 0), vec2(0, 0, -1, -1)],
        ),
        (
            "R1",
            [vec2(1, -1, 3, 2), vec2(0, 0, -1, -1), vec2(0, 0, -3, -2)],
        ),
        (
            "R2",
            [vec2(0, 0, -1, -1), vec2(-4, 3, -5, -3), vec2(0, 0, -3, -2)],
        ),
        (
            "R3",
            [vec2(-4, 3, -5, -3), vec2(1, -1, 3, 2), vec2(0, 0, -3, -2)],
        ),
    ]
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_o_elem(rng: &mut ChaCha8Rng, bound: i64) -> FieldElem {
    fe(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// A random GL2(O) element: a product of up to `factors` elementary
/// matrices (shears, the swap, and unit diagonals).
pub fn random_gamma(rng: &mut ChaCha8Rng, factors: usize) -> Mat2 {
    let mut g = Mat2::identity(2);
    let eps = fe(1, 1);
    let eps_inv = fe(-1, 1);
    for _ in 0..factors {
        let pick: u32 = rng.gen_range(0..4);
        let f = match pick {
            0 => Mat2::new(fe(1, 0), random_o_elem(rng, 3), fe(0, 0), fe(1, 0)),
            1 => Mat2::swap(2),
            2 => {
                let mut u = fe(1, 0);
                let k: i32 = rng.gen_range(-3..=3);
                for _ in 0..k.abs() {
                    u = u.mul(if k > 0 { &eps } else { &eps_inv });
                }
                if rng.gen_bool(0.5) {
                    u = u.neg();
                }
                Mat2::new(u, fe(0, 0), fe(0, 0), fe(1, 0))
            }
            _ => Mat2::new(fe(1, 0), fe(0, 0), random_o_elem(rng, 3), fe(1, 0)),
        };
        g = g.mul(&f);
    }
    assert!(g.is_gl2o());
    g
}

/// A random nonzero integral vector with coordinates bounded by `bound`.
pub fn random_vec(rng: &mut ChaCha8Rng, bound: i64) -> Vec2 {
    loop {
        let v = Vec2::new(random_o_elem(rng, bound), random_o_elem(rng, bound));
        if !v.is_zero() {
            return v;
        }
    }
}
