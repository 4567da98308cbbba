//! Exact dense elimination over the rationals.

use num::{BigInt, One, Signed, Zero};

use crate::graph::Rational;

/// Row-echelon basis grown one column at a time. Each stored vector has a
/// 1 at its pivot and zeros at the pivots of every earlier vector.
#[derive(Debug, Default)]
pub(crate) struct EchelonBasis {
    vectors: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (p, b) in &self.vectors {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
        }
        v
    }

    /// Adds `v` when it is independent of the basis; returns whether it was.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        v.iter_mut().for_each(|x| *x *= &inv);
        self.vectors.push((p, v));
        true
    }

    #[cfg(test)]
    pub fn contains(&self, v: Vec<Rational>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Solves the square nonsingular system `m x = b`, returning `x` and
/// `det(m)`. Returns `None` when `m` is singular.
pub(crate) fn solve_square(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<(Vec<Rational>, BigInt)> {
    let k = m.len();
    let mut det = Rational::one();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        if pivot != col {
            m.swap(pivot, col);
            b.swap(pivot, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in 0..k {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..k {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    let x = (0..k).map(|i| &b[i] / &m[i][i]).collect();
    Some((x, det.to_integer()))
}

/// Rank of a dense rational matrix given by columns.
#[cfg(test)]
pub(crate) fn rank_of_columns(cols: impl IntoIterator<Item = Vec<Rational>>) -> usize {
    let mut basis = EchelonBasis::default();
    for c in cols {
        basis.insert(c);
    }
    basis.rank()
}

pub(crate) fn abs_det(det: &BigInt) -> BigInt {
    det.abs()
}
