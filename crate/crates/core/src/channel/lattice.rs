use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Integer row lattice in Hermite normal form: rows echelon, pivots positive,
/// entries above a pivot reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

impl Lattice {
    /// Row span of `rows`; every row must have length `dim`.
    pub fn span(dim: usize, rows: &[Vec<BigInt>]) -> Self {
        let (rows, _) = hnf(dim, rows.to_vec());
        Lattice { dim, rows }
    }

    /// Same as [`span`](Self::span), also returning the number of row operations.
    pub fn span_counted(dim: usize, rows: &[Vec<BigInt>]) -> (Self, u64) {
        let (rows, ops) = hnf(dim, rows.to_vec());
        (Lattice { dim, rows }, ops)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        Lattice::span(self.dim, &rows) == *self
    }
}

fn pivot_col(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

fn hnf(dim: usize, mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, u64) {
    assert!(rows.iter().all(|r| r.len() == dim), "row length differs from dimension");
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut ops = 0u64;
    let mut r = 0;
    for c in 0..dim {
        loop {
            // smallest nonzero entry in column c among rows r..
            let best = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).min_by_key(|&i| rows[i][c].abs());
            let Some(p) = best else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                ops += 1;
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -&*x;
                }
            }
            let pivot = rows[r].clone();
            for i in 0..r {
                let q = rows[i][c].div_floor(&pivot[c]);
                if !q.is_zero() {
                    for (x, y) in rows[i].iter_mut().zip(&pivot) {
                        *x -= &q * y;
                    }
                    ops += 1;
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    debug_assert!(rows.windows(2).all(|w| pivot_col(&w[0]) < pivot_col(&w[1])));
    (rows, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::Prng;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn one_dimensional_gcd() {
        assert_eq!(Lattice::span(1, &[v(&[6]), v(&[10])]).rows(), &[v(&[2])]);
        assert_eq!(Lattice::span(1, &[v(&[6]), v(&[10]), v(&[15])]).rows(), &[v(&[1])]);
        assert_eq!(Lattice::span(1, &[v(&[-4])]).rows(), &[v(&[4])]);
        assert_eq!(Lattice::span(2, &[v(&[0, 0])]).rank(), 0);
    }

    #[test]
    fn known_form() {
        let l = Lattice::span(3, &[v(&[2, 3, 6]), v(&[-4, 1, 0]), v(&[2, 10, 0])]);
        for r in l.rows() {
            assert!(l.contains(r));
        }
        assert!(l.contains(&v(&[2, 3, 6])));
        assert!(l.contains(&v(&[0, 7, 12])));
        assert!(!l.contains(&v(&[1, 0, 0])));
    }

    fn det2(a: &[BigInt], b: &[BigInt]) -> BigInt {
        &a[0] * &b[1] - &a[1] * &b[0]
    }

    // invariants of Z² lattices: gcd of first coordinates and gcd of 2×2 minors
    #[test]
    fn matches_minor_gcds() {
        let mut p = Prng::new(17);
        for _ in 0..300 {
            let k = 2 + p.below(4) as usize;
            let rows: Vec<Vec<BigInt>> = (0..k).map(|_| v(&[p.below(41) as i64 - 20, p.below(41) as i64 - 20])).collect();
            let l = Lattice::span(2, &rows);
            let mut minors = BigInt::zero();
            for i in 0..k {
                for j in i + 1..k {
                    minors = minors.gcd(&det2(&rows[i], &rows[j]));
                }
            }
            let col0 = rows.iter().fold(BigInt::zero(), |g, r| g.gcd(&r[0]));
            if minors.is_zero() {
                assert!(l.rank() <= 1);
            } else {
                assert_eq!(l.rank(), 2);
                assert_eq!(&l.rows()[0][0] * &l.rows()[1][1], minors);
                assert_eq!(l.rows()[0][0], col0);
                assert!(l.rows()[0][1] >= BigInt::zero() && l.rows()[0][1] < l.rows()[1][1]);
            }
            // unimodular change of generators leaves the form unchanged
            let mut mixed = rows.clone();
            let (a, b) = (mixed[0].clone(), mixed[1].clone());
            mixed[0] = a.iter().zip(&b).map(|(x, y)| x + y * 3).collect();
            assert_eq!(Lattice::span(2, &mixed), l);
        }
    }
}
