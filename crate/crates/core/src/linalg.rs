//! Small exact Gaussian elimination helpers over Q, used by the cone
//! machinery. Everything is dense and tiny (at most 12 x 6).

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Row = Vec<BigRational>;

/// Reduced row echelon form in place; returns the pivot column indices.
#[allow(clippy::ptr_arg, clippy::needless_range_loop)]
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    let m = rows.len();
    if m == 0 {
        return vec![];
    }
    let n = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &pv;
        }
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..n {
                    let t = &rows[r][j] * &f;
                    rows[i][j] = &rows[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Row]) -> usize {
    let mut copy: Vec<Row> = rows.to_vec();
    rref(&mut copy).len()
}

/// Basis of the right nullspace of the matrix (rows of width `n`).
pub fn nullspace(rows: &[Row], n: usize) -> Vec<Row> {
    let mut copy: Vec<Row> = rows.to_vec();
    let pivots = rref(&mut copy);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![BigRational::zero(); n];
        v[fc] = BigRational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -copy[i][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of A x = b, or None if inconsistent.
pub fn solve(rows: &[Row], rhs: &[BigRational]) -> Option<Row> {
    assert_eq!(rows.len(), rhs.len());
    if rows.is_empty() {
        return Some(vec![]);
    }
    let n = rows[0].len();
    let mut aug: Vec<Row> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) {
        return None;
    }
    for row in &aug {
        if row[..n].iter().all(|x| x.is_zero()) && !row[n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![r(0), r(1), r(1)],
        ];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot: BigRational = (0..3).map(|i| &row[i] * &ns[0][i]).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let rows = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        let x = solve(&rows, &[r(3), r(1)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
        let rows = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        assert!(solve(&rows, &[r(1), r(3)]).is_none());
    }
}
