//! Exact rank and kernel over `ℚ`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form; returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (i, target) in m.iter_mut().enumerate() {
            if i != row && !target[c].is_zero() {
                let f = target[c].clone();
                for (x, y) in target[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

fn to_rational(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            r.iter().map(|x| BigRational::from_integer(x.clone())).collect()
        })
        .collect()
}

/// Rank of a matrix given by rows of length `cols`.
pub fn rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let mut m = to_rational(rows, cols);
    rref(&mut m, cols).len()
}

/// Basis of `{x : M x = 0}`, one vector per free column, each scaled to
/// coprime integers and positive at its free column.
pub fn kernel(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m = to_rational(rows, cols);
    let pivots = rref(&mut m, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(primitive(&v));
    }
    basis
}

/// Clears denominators and divides by the content.
fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return ints;
    }
    let gcd = gcd.abs();
    ints.into_iter().map(|x| x / &gcd).collect()
}
