//! Exact integer linear algebra on small matrices (fraction-free Bareiss
//! elimination over `i128`).

use super::ParikhVector;
use crate::alphabet::Letter;
use crate::error::{Error, Result};

type Matrix = Vec<Vec<i128>>;

fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in exact elimination")
}

fn sub(a: i128, b: i128) -> i128 {
    a.checked_sub(b).expect("integer overflow in exact elimination")
}

/// Column matrix: one column per vector, one row per letter.
fn columns(vs: &[ParikhVector]) -> Matrix {
    let m = vs.first().map_or(0, ParikhVector::dim);
    (0..m)
        .map(|i| vs.iter().map(|v| v.get(i) as i128).collect())
        .collect()
}

/// Bareiss row echelon; returns (rank, sign of the row permutation, last pivot).
fn bareiss(mut a: Matrix) -> (usize, i128, i128) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = 1i128;
    let mut rank = 0;
    let mut sign = 1i128;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = sub(mul(a[i][j], a[rank][col]), mul(a[i][col], a[rank][j]));
                debug_assert_eq!(num % prev, 0);
                a[i][j] = num / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    (rank, sign, prev)
}

/// Determinant of a square integer matrix.
pub fn determinant(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    assert!(a.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let (rank, sign, last) = bareiss(a.to_vec());
    if rank < n {
        0
    } else {
        sign * last
    }
}

/// Rank over the rationals (equivalently, the maximal number of vectors that
/// are linearly independent over the integers).
pub fn rank(vs: &[ParikhVector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    bareiss(columns(vs)).0
}

pub fn is_independent(vs: &[ParikhVector]) -> bool {
    rank(vs) == vs.len()
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn select(a: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| a[r][c]).collect())
        .collect()
}

/// A primitive integer dependency `λ` (`Σ λ_j v_j = 0`, gcd 1) supported on a
/// minimal dependent prefix of `vs`, or `None` if `vs` is independent.
///
/// The sign is fixed so that the first nonzero entry is positive.
pub fn primitive_dependency(vs: &[ParikhVector]) -> Option<Vec<i128>> {
    let r = (1..=vs.len()).find(|&r| rank(&vs[..r]) < r)?;
    let a = columns(&vs[..r]);
    let m = a.len();
    let mut lambda = vec![0i128; vs.len()];
    if r == 1 {
        // a zero vector
        lambda[0] = 1;
        return Some(lambda);
    }
    let head: Vec<usize> = (0..r - 1).collect();
    let rows = subsets(m, r - 1)
        .into_iter()
        .find(|rows| determinant(&select(&a, rows, &head)) != 0)
        .expect("first r-1 vectors are independent");
    let all: Vec<usize> = (0..r).collect();
    for j in 0..r {
        let cols: Vec<usize> = all.iter().copied().filter(|&c| c != j).collect();
        let d = determinant(&select(&a, &rows, &cols));
        lambda[j] = if j % 2 == 0 { d } else { -d };
    }
    let g = lambda.iter().fold(0, |g, &x| gcd(g, x));
    for x in &mut lambda {
        *x /= g;
    }
    if lambda.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in &mut lambda {
            *x = -*x;
        }
    }
    Some(lambda)
}

/// Pairwise distinct letters `t_1..t_k` with `vs[j][t_j] ≠ 0`, chosen by
/// expanding a nonsingular `k×k` minor along its last column and recursing on
/// the complementary minor.
pub fn independent_indices(vs: &[ParikhVector]) -> Result<Vec<Letter>> {
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    if !is_independent(vs) {
        return Err(Error::Precondition("vectors are linearly dependent".into()));
    }
    let a = columns(vs);
    let k = vs.len();
    let all_cols: Vec<usize> = (0..k).collect();
    let rows = subsets(a.len(), k)
        .into_iter()
        .find(|rows| determinant(&select(&a, rows, &all_cols)) != 0)
        .expect("independent vectors have a nonsingular minor");
    let square = select(&a, &rows, &all_cols);
    Ok(expand(&square, &rows))
}

fn expand(square: &Matrix, labels: &[Letter]) -> Vec<Letter> {
    let k = square.len();
    let last = k - 1;
    if k == 1 {
        debug_assert_ne!(square[0][0], 0);
        return vec![labels[0]];
    }
    for i in 0..k {
        if square[i][last] == 0 {
            continue;
        }
        let rest_rows: Vec<usize> = (0..k).filter(|&r| r != i).collect();
        let rest_cols: Vec<usize> = (0..last).collect();
        let minor = select(square, &rest_rows, &rest_cols);
        if determinant(&minor) != 0 {
            let rest_labels: Vec<Letter> = rest_rows.iter().map(|&r| labels[r]).collect();
            let mut out = expand(&minor, &rest_labels);
            out.push(labels[i]);
            return out;
        }
    }
    unreachable!("a nonsingular matrix has a nonzero term in its last-column expansion")
}
