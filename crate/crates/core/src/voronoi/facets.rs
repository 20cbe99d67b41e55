//! Exact facet enumeration for finitely generated cones in the 6-dimensional
//! rational coordinate space of Lambda (x) Q.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::qfield::Rational;

pub(crate) type Q6 = [Rational; 6];
pub(crate) type N6 = [BigInt; 6];

pub(crate) fn dot(n: &N6, p: &Q6) -> Rational {
    let mut s = Rational::zero();
    for i in 0..6 {
        s += Rational::from_integer(n[i].clone()) * &p[i];
    }
    s
}

fn to_primitive(v: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for r in v {
        l = l.lcm(r.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|r| (r * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.iter().map(|x| x / &g).collect()
}

/// Signed Bareiss determinant of an n x n integer matrix.
fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Fast path for full-rank cones in Q^6 with integral generators: the facet
/// normal through a rank-5 subset is the vector of signed 5x5 minors.
fn facet_normals_full_rank(pts: &[Q6]) -> Vec<N6> {
    let rows: Vec<Vec<BigInt>> = pts
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| {
                    debug_assert!(x.is_integer());
                    x.to_integer()
                })
                .collect()
        })
        .collect();
    let mut found: std::collections::BTreeSet<Vec<BigInt>> = std::collections::BTreeSet::new();
    for sub in (0..rows.len()).combinations(5) {
        let mut normal: Vec<BigInt> = Vec::with_capacity(6);
        for drop in 0..6 {
            let minor: Vec<Vec<BigInt>> = sub
                .iter()
                .map(|&i| {
                    (0..6)
                        .filter(|&j| j != drop)
                        .map(|j| rows[i][j].clone())
                        .collect()
                })
                .collect();
            let det = det_bareiss(minor);
            normal.push(if drop % 2 == 0 { det } else { -det });
        }
        if normal.iter().all(|x| x.is_zero()) {
            continue; // subset rank below 5
        }
        let vals: Vec<BigInt> = rows
            .iter()
            .map(|r| (0..6).map(|j| &normal[j] * &r[j]).sum())
            .collect();
        let pos = vals.iter().any(|v| v.is_positive());
        let neg = vals.iter().any(|v| v.is_negative());
        if pos && neg {
            continue;
        }
        if neg {
            for x in normal.iter_mut() {
                *x = -x.clone();
            }
        }
        let mut g = BigInt::zero();
        for x in &normal {
            g = g.gcd(x);
        }
        let normal: Vec<BigInt> = normal.iter().map(|x| x / &g).collect();
        found.insert(normal);
    }
    found
        .into_iter()
        .map(|v| {
            let mut arr: N6 = std::array::from_fn(|_| BigInt::zero());
            for (i, x) in v.into_iter().enumerate() {
                arr[i] = x;
            }
            arr
        })
        .collect()
}

/// Facet functionals of cone(pts): integer-primitive Q^6 functionals, each
/// nonnegative on every generator and vanishing on a rank (k-1) subset,
/// where k is the rank of the generator set. Complete for every dimension:
/// the enumeration runs inside span coordinates and is pulled back.
pub(crate) fn facet_normals(pts: &[Q6]) -> Vec<N6> {
    let rows: Vec<linalg::Row> = pts.iter().map(|p| p.to_vec()).collect();
    let k = linalg::rank(&rows);
    if k < 2 {
        return vec![];
    }
    if k == 6 && pts.iter().all(|p| p.iter().all(|x| x.is_integer())) {
        return facet_normals_full_rank(pts);
    }
    facet_normals_generic(pts, k)
}

/// Span-coordinate enumeration, complete for every rank.
fn facet_normals_generic(pts: &[Q6], k: usize) -> Vec<N6> {
    let rows: Vec<linalg::Row> = pts.iter().map(|p| p.to_vec()).collect();
    // independent spanning subset (deterministic: first-found)
    let mut basis: Vec<linalg::Row> = Vec::new();
    for r in &rows {
        if basis.len() == k {
            break;
        }
        let mut trial = basis.clone();
        trial.push(r.clone());
        if linalg::rank(&trial) > basis.len() {
            basis = trial;
        }
    }
    // coordinates of every generator in the span basis: solve B^T t = p
    let bt: Vec<linalg::Row> = (0..6)
        .map(|j| (0..k).map(|i| basis[i][j].clone()).collect())
        .collect();
    let coords: Vec<Vec<Rational>> = rows
        .iter()
        .map(|p| linalg::solve(&bt, p).expect("generator lies in its own span"))
        .collect();
    // dual functionals of the basis: rows of (B B^T)^{-1} B
    let gram: Vec<linalg::Row> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..6).map(|t| &basis[i][t] * &basis[j][t]).sum())
                .collect()
        })
        .collect();
    let duals: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut rhs = vec![Rational::zero(); k];
            rhs[i] = Rational::one();
            let y = linalg::solve(&gram, &rhs).expect("span Gram is invertible");
            (0..6)
                .map(|t| (0..k).map(|j| &y[j] * &basis[j][t]).sum())
                .collect()
        })
        .collect();
    let mut found: std::collections::BTreeSet<Vec<BigInt>> = std::collections::BTreeSet::new();
    for sub in (0..pts.len()).combinations(k - 1) {
        let sel: Vec<linalg::Row> = sub.iter().map(|&i| coords[i].clone()).collect();
        if linalg::rank(&sel) != k - 1 {
            continue;
        }
        let ns = linalg::nullspace(&sel, k);
        if ns.len() != 1 {
            continue;
        }
        let cand = &ns[0];
        let vals: Vec<Rational> = coords
            .iter()
            .map(|c| (0..k).map(|i| &cand[i] * &c[i]).sum())
            .collect();
        let pos = vals.iter().any(|v| v.is_positive());
        let neg = vals.iter().any(|v| v.is_negative());
        if pos && neg {
            continue;
        }
        let sign = if neg {
            -Rational::one()
        } else {
            Rational::one()
        };
        let tight: Vec<linalg::Row> = coords
            .iter()
            .zip(&vals)
            .filter(|(_, v)| v.is_zero())
            .map(|(c, _)| c.clone())
            .collect();
        if linalg::rank(&tight) != k - 1 {
            continue;
        }
        // pull the span functional back to Q^6
        let n6: Vec<Rational> = (0..6)
            .map(|t| (0..k).map(|i| &(&cand[i] * &sign) * &duals[i][t]).sum())
            .collect();
        found.insert(to_primitive(&n6));
    }
    found
        .into_iter()
        .map(|v| {
            let mut arr: N6 = std::array::from_fn(|_| BigInt::zero());
            for (i, x) in v.into_iter().enumerate() {
                arr[i] = x;
            }
            arr
        })
        .collect()
}
