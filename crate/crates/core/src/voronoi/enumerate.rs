//! Exact shortest-vector enumeration for the positive definite quadratic
//! form q(x) = <phi, L(v(x))> on O^2 = Z^4 (basis e1, w e1, e2, w e2).

use num_bigint::BigInt;

use num_traits::{Signed, ToPrimitive, Zero};

use super::{l_of, pairing, SymPair};
use crate::error::{Error, Result};
use crate::gl2of::{ray_normalize, Vec2};
use crate::qfield::{FieldElem, FieldParams, Rational};

fn basis_vec(d: u32, i: usize) -> Vec2 {
    let z = || FieldElem::zero(d);
    match i {
        0 => Vec2::new(FieldElem::one(d), z()),
        1 => Vec2::new(FieldElem::sqrt_d(d), z()),
        2 => Vec2::new(z(), FieldElem::one(d)),
        _ => Vec2::new(z(), FieldElem::sqrt_d(d)),
    }
}

pub(crate) fn coords_to_vec(d: u32, x: &[i64; 4]) -> Vec2 {
    let fe = |a: i64, b: i64| FieldElem::from_integers(d, a, b);
    Vec2::new(fe(x[0], x[1]), fe(x[2], x[3]))
}

/// Rational 4x4 Gram matrix of q in the fixed O^2 basis.
fn gram(phi: &SymPair) -> [[Rational; 4]; 4] {
    let d = phi.d();
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let bil = |v: &Vec2, w: &Vec2| -> Rational {
        let sym = SymPair::new(
            v.x1.mul(&w.x1),
            v.x2.mul(&w.x2),
            v.x1.mul(&w.x2).add(&w.x1.mul(&v.x2)).scale(&half),
        );
        pairing(phi, &sym)
    };
    let es: Vec<Vec2> = (0..4).map(|i| basis_vec(d, i)).collect();
    std::array::from_fn(|i| std::array::from_fn(|j| bil(&es[i], &es[j])))
}

/// Exact Lovasz-reduction of a positive definite 4x4 Gram matrix. Returns
/// the reduced Gram U^T G U and the unimodular U; enumeration runs in the
/// reduced basis and maps back through U. Keeps the Fincke-Pohst boxes small
/// for arbitrarily skewed forms.
fn lll_gram(g0: &[[Rational; 4]; 4]) -> ([[Rational; 4]; 4], [[i64; 4]; 4]) {
    let n = 4usize;
    let mut g = g0.clone();
    let mut u = [[0i64; 4]; 4];
    for (i, row) in u.iter_mut().enumerate() {
        row[i] = 1;
    }
    // column operation x_k += q * x_l on the Gram and on U
    #[allow(clippy::needless_range_loop)]
    fn col_op(g: &mut [[Rational; 4]; 4], u: &mut [[i64; 4]; 4], k: usize, l: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let qr = Rational::from_integer(q.clone());
        for i in 0..4 {
            let t = &g[i][l] * &qr;
            g[i][k] = &g[i][k] + &t;
        }
        for j in 0..4 {
            let t = &g[l][j] * &qr;
            g[k][j] = &g[k][j] + &t;
        }
        let qi = q.to_i64().expect("reduction coefficient fits i64");
        for row in u.iter_mut() {
            row[k] += qi * row[l];
        }
    }
    fn swap_cols(g: &mut [[Rational; 4]; 4], u: &mut [[i64; 4]; 4], k: usize, l: usize) {
        for row in g.iter_mut() {
            row.swap(k, l);
        }
        g.swap(k, l);
        for row in u.iter_mut() {
            row.swap(k, l);
        }
    }
    // Gram-Schmidt data recomputed from scratch (n = 4: cheap)
    fn gso(g: &[[Rational; 4]; 4]) -> ([Rational; 4], [[Rational; 4]; 4]) {
        let mut b = std::array::from_fn(|_| Rational::zero());
        let mut mu: [[Rational; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
        let b_ref: &mut [Rational; 4] = &mut b;
        for i in 0..4 {
            // <b_i, b*_j> = g[i][j] - sum_{k<j} mu[j][k] <b_i, b*_k>
            let mut proj = std::array::from_fn(|_| Rational::zero());
            let proj_ref: &mut [Rational; 4] = &mut proj;
            for j in 0..i {
                let mut t = g[i][j].clone();
                for k in 0..j {
                    t -= &mu[j][k] * &proj_ref[k];
                }
                proj_ref[j] = t;
                mu[i][j] = &proj_ref[j] / &b_ref[j];
            }
            let mut bi = g[i][i].clone();
            for k in 0..i {
                bi -= &mu[i][k] * &proj_ref[k];
            }
            b_ref[i] = bi;
        }
        (b, mu)
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let delta = Rational::new(BigInt::from(3), BigInt::from(4));
    let mut k = 1usize;
    let mut steps = 0u32;
    while k < n && steps < 10_000 {
        steps += 1;
        // size-reduce column k against k-1 .. 0
        for j in (0..k).rev() {
            let (_, mu) = gso(&g);
            let m = &mu[k][j];
            if m.abs() > half {
                let q = -(m.round().to_integer());
                col_op(&mut g, &mut u, k, j, &q);
            }
        }
        let (b, mu) = gso(&g);
        let lhs = &b[k] + &(&mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1];
        if lhs < &delta * &b[k - 1] {
            swap_cols(&mut g, &mut u, k, k - 1);
            k = k.max(2) - 1;
        } else {
            k += 1;
        }
    }
    (g, u)
}

/// LDL decomposition q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
fn ldl(g: &[[Rational; 4]; 4]) -> Result<([Rational; 4], [[Rational; 4]; 4])> {
    let mut d: [Rational; 4] = std::array::from_fn(|_| Rational::zero());
    let mut u: [[Rational; 4]; 4] =
        std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
    for i in 0..4 {
        let mut di = g[i][i].clone();
        for k in 0..i {
            di -= &d[k] * &u[k][i] * &u[k][i];
        }
        if !di.is_positive() {
            return Err(Error::NotDefinite);
        }
        d[i] = di;
        for j in (i + 1)..4 {
            let mut t = g[i][j].clone();
            for k in 0..i {
                t -= &d[k] * &u[k][i] * &u[k][j];
            }
            u[i][j] = t / &d[i];
        }
    }
    Ok((d, u))
}

/// floor(sqrt(r)) for a nonnegative rational.
fn isqrt_rational(r: &Rational) -> BigInt {
    debug_assert!(!r.is_negative());
    let mut n = r.to_integer().sqrt();
    loop {
        let m = &n + 1;
        if Rational::from_integer(&m * &m) <= *r {
            n = m;
        } else {
            break;
        }
    }
    n
}

/// All nonzero x in Z^4 with q(x) <= bound, one per +-pair.
fn enumerate_leq(
    d_diag: &[Rational; 4],
    u: &[[Rational; 4]; 4],
    bound: &Rational,
) -> Result<Vec<([i64; 4], Rational)>> {
    let mut out = Vec::new();
    let mut x = [0i64; 4];
    let mut budget: u64 = 10_000_000;
    #[allow(clippy::too_many_arguments)]
    fn level(
        i: isize,
        rem: Rational,
        x: &mut [i64; 4],
        d_diag: &[Rational; 4],
        u: &[[Rational; 4]; 4],
        bound: &Rational,
        out: &mut Vec<([i64; 4], Rational)>,
        budget: &mut u64,
    ) -> Result<()> {
        if i < 0 {
            if x.iter().any(|&t| t != 0) {
                out.push((*x, bound - &rem));
            }
            return Ok(());
        }
        let i = i as usize;
        let mut c = Rational::zero();
        for j in (i + 1)..4 {
            c += &u[i][j] * Rational::from_integer(BigInt::from(x[j]));
        }
        let s: BigInt = isqrt_rational(&(&rem / &d_diag[i])) + 1;
        let lo = (-&c - Rational::from_integer(s.clone()))
            .floor()
            .to_integer();
        let hi = (-&c + Rational::from_integer(s)).ceil().to_integer();
        let mut n = lo.clone();
        while n <= hi {
            *budget = budget.checked_sub(1).ok_or(Error::ConeLocationFailed)?;
            let ni = n.to_i64().ok_or(Error::ConeLocationFailed)?;
            let t = {
                let v = Rational::from_integer(n.clone()) + &c;
                &d_diag[i] * &v * &v
            };
            if t <= rem {
                x[i] = ni;
                level(i as isize - 1, &rem - &t, x, d_diag, u, bound, out, budget)?;
                x[i] = 0;
            }
            n += 1;
        }
        Ok(())
    }
    level(
        3,
        bound.clone(),
        &mut x,
        d_diag,
        u,
        bound,
        &mut out,
        &mut budget,
    )?;
    Ok(out)
}

fn canonical_sign(x: &[i64; 4]) -> [i64; 4] {
    for &t in x {
        if t != 0 {
            return if t > 0 {
                *x
            } else {
                std::array::from_fn(|i| -x[i])
            };
        }
    }
    *x
}

/// Minimum of q over nonzero O^2 and all minimizing vectors up to sign,
/// as raw integral vectors. With `cap`, only minima <= cap are reported
/// (None means the true minimum exceeds the cap).
pub(crate) fn min_vectors_raw(
    phi: &SymPair,
    cap: Option<&Rational>,
) -> Result<Option<(Rational, Vec<Vec2>)>> {
    if !phi.is_positive_definite() {
        return Err(Error::NotDefinite);
    }
    let d = phi.d();
    let g0 = gram(phi);
    let (g, basis) = lll_gram(&g0);
    let (dd, u) = ldl(&g)?;
    let mut seed = (0..4).map(|i| g[i][i].clone()).min().unwrap();
    if let Some(c) = cap {
        if *c < seed {
            seed = c.clone();
        }
    }
    let all = enumerate_leq(&dd, &u, &seed)?;
    if all.is_empty() {
        return Ok(None);
    }
    let m = all.iter().map(|(_, v)| v.clone()).min().unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for (y, v) in &all {
        if *v == m {
            // back to the original O^2 coordinates
            let x: [i64; 4] = std::array::from_fn(|i| {
                (0..4).map(|j| basis[i][j].checked_mul(y[j]).unwrap()).sum()
            });
            seen.insert(canonical_sign(&x));
        }
    }
    let vecs = seen.iter().map(|x| coords_to_vec(d, x)).collect();
    Ok(Some((m, vecs)))
}

/// The spec's min_vectors: minimum of the pairing over nonzero O^2 together
/// with all content-primitive minimizers as canonical rays.
pub fn min_vectors(
    params: &FieldParams,
    phi: &SymPair,
) -> Result<(Rational, Vec<crate::gl2of::RayVector>)> {
    let (m, vecs) = min_vectors_raw(phi, None)?.expect("uncapped enumeration is nonempty");
    let mut rays = Vec::new();
    for v in &vecs {
        if crate::gl2of::is_content_primitive(params, v)? {
            rays.push(ray_normalize(params, v)?);
        }
    }
    rays.sort();
    rays.dedup();
    Ok((m, rays))
}

/// Value of the form at a vector, <phi, L(v)>.
pub fn value_at(phi: &SymPair, v: &Vec2) -> Rational {
    pairing(phi, &l_of(v))
}
