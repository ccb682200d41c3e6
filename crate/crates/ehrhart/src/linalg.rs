//! Exact integer linear algebra: determinants, ranks, hyperplane normals.
//!
//! Everything is fraction-free over `BigInt`; no floating point.

use crate::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// gcd of the absolute values of a vector, 0 for the zero vector.
pub(crate) fn vec_gcd(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

/// Divide every entry by the gcd, making the vector primitive.
/// Returns the zero vector unchanged.
pub(crate) fn make_primitive(v: &mut [Int]) {
    let g = vec_gcd(v);
    if g > Int::one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub(crate) fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact determinant via the Bareiss fraction-free algorithm.
pub(crate) fn determinant(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                // Exact division: the Bareiss update is always divisible by prev.
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Rank of an integer matrix given as rows, by fraction-free elimination.
pub(crate) fn rank(rows: &[Vec<Int>]) -> usize {
    let mut m: Vec<Vec<Int>> = rows.iter().filter(|r| !r.iter().all(Zero::is_zero)).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for i in row + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let (a, b) = (m[row][col].clone(), m[i][col].clone());
            for j in col..cols {
                m[i][j] = &m[i][j] * &a - &m[row][j] * &b;
            }
        }
        row += 1;
        rank += 1;
        if row == m.len() {
            break;
        }
    }
    rank
}

/// Affine rank of a point set: rank of the edge vectors from the first point.
pub(crate) fn affine_rank(points: &[Vec<Int>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let edges: Vec<Vec<Int>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&edges)
}

/// Normal of the hyperplane spanned by `dim - 1` edge vectors in dimension
/// `dim`, via signed maximal minors (the generalized cross product).
/// Returns `None` when the edges are linearly dependent.
pub(crate) fn hyperplane_normal(edges: &[Vec<Int>], dim: usize) -> Option<Vec<Int>> {
    debug_assert_eq!(edges.len() + 1, dim);
    let mut normal = Vec::with_capacity(dim);
    for j in 0..dim {
        let minor: Vec<Vec<Int>> = edges
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let det = determinant(minor);
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    if normal.iter().all(Zero::is_zero) {
        None
    } else {
        debug_assert!(edges.iter().all(|e| dot(&normal, e).is_zero()));
        Some(normal)
    }
}

/// Binomial coefficient C(n, k) for big-integer n >= 0.
pub(crate) fn binomial(n: &Int, k: u32) -> Int {
    debug_assert!(!n.is_negative());
    if Int::from(k) > *n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for i in 0..k {
        acc *= n - Int::from(i);
        acc /= Int::from(i + 1); // exact: product of j consecutive integers is divisible by j!
    }
    acc
}

/// Binomial coefficient for machine-sized arguments.
pub(crate) fn binomial_u(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    binomial(&Int::from(n), k as u32)
}
