//! Coefficient fields and the small amount of linear algebra the oracle needs.

use num::{BigInt, BigRational, One, Zero};

pub trait Field: Sync {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i128(&self, v: i128) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// `F_p`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * b as u128) % self.p as u128) as u64;
            }
            b = ((b as u128 * b as u128) % self.p as u128) as u64;
            e >>= 1;
        }
        r
    }
}

impl Field for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// `Q`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i128(&self, v: i128) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Indices of a maximal linearly independent set of rows, chosen greedily.
pub fn independent_rows<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<F::Elem>)> = vec![];
    let mut chosen = vec![];
    for (idx, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (piv, b) in &basis {
            if !f.is_zero(&r[*piv]) {
                let c = r[*piv].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        if let Some(piv) = r.iter().position(|x| !f.is_zero(x)) {
            let inv = f.inv(&r[piv]);
            for x in r.iter_mut() {
                *x = f.mul(x, &inv);
            }
            basis.push((piv, r));
            chosen.push(idx);
        }
    }
    chosen
}

pub fn rank<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    independent_rows(f, rows).len()
}

/// Solve `a x = b` for square invertible `a` (`m×m`) and `b` (`m×k`).
pub fn solve<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let m = a.len();
    let k = b.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| {
            let mut r = ra.clone();
            r.extend(rb.iter().cloned());
            r
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| !f.is_zero(&aug[r][col])).expect("singular matrix");
        aug.swap(col, piv);
        let inv = f.inv(&aug[col][col]);
        for x in aug[col].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !f.is_zero(&row[col]) {
                let c = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
    }
    aug.into_iter().map(|r| r[m..m + k].to_vec()).collect()
}

/// Generalised binomial coefficient `C(x, t)` for any integer `x`.
pub fn binom(x: i64, t: u32) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for s in 0..t as i128 {
        num *= x as i128 - s;
        den *= s + 1;
        let g = gcd(num.abs(), den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    num / den
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs().max(1)
}

/// Exact rational rank of an integer matrix.
pub fn rational_rank(rows: &[Vec<i128>]) -> usize {
    let q = Rationals;
    let conv: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| q.from_i128(x)).collect()).collect();
    rank(&q, &conv)
}

pub fn modular_rank(rows: &[Vec<i128>], p: u64) -> usize {
    let f = PrimeField { p };
    let conv: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| f.from_i128(x)).collect()).collect();
    rank(&f, &conv)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(-1, 3), -1);
        assert_eq!(binom(-2, 2), 3);
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(7, 0), 1);
    }

    #[test]
    fn ranks() {
        let m = vec![vec![2, 1], vec![4, 2], vec![1, 1]];
        assert_eq!(rational_rank(&m), 2);
        let m = vec![vec![2, 1], vec![1, 2]];
        assert_eq!(modular_rank(&m, 3), 1);
        assert_eq!(rational_rank(&m), 2);
    }

    #[test]
    fn solving() {
        let f = PrimeField { p: 7 };
        let a = vec![vec![1, 2], vec![3, 4]];
        let b = vec![vec![5], vec![6]];
        let x = solve(&f, &a, &b);
        // check a x = b
        for i in 0..2 {
            let s = f.add(&f.mul(&a[i][0], &x[0][0]), &f.mul(&a[i][1], &x[1][0]));
            assert_eq!(s, b[i][0]);
        }
    }
}
