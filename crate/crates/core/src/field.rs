//! Dense matrices over a prime field `F_p` with `p < 2^32`, and exact rank.

use crate::error::{Error, Result};

/// `2^31 - 1`, the default field for the generic-element oracle.
pub const ORACLE_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: ORACLE_PRIME }
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element, by Fermat.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Square matrix with entries reduced mod `p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    size: usize,
    data: Vec<u64>,
}

impl DenseMatrix {
    pub fn zero(size: usize) -> Self {
        DenseMatrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.size + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &DenseMatrix, field: PrimeField) -> DenseMatrix {
        let n = self.size;
        let mut out = DenseMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if b != 0 {
                        let v = field.add(out.get(r, c), field.mul(a, b));
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination with full pivoting.
    pub fn rank(&self, field: PrimeField) -> usize {
        let n = self.size;
        let mut m = self.data.clone();
        let mut rank = 0;
        let mut rows: Vec<usize> = (0..n).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        while rank < n {
            // full pivot search over the remaining submatrix
            let mut pivot = None;
            'search: for (ri, &r) in rows.iter().enumerate().skip(rank) {
                for (ci, &c) in cols.iter().enumerate().skip(rank) {
                    if m[r * n + c] != 0 {
                        pivot = Some((ri, ci));
                        break 'search;
                    }
                }
            }
            let Some((ri, ci)) = pivot else { break };
            rows.swap(rank, ri);
            cols.swap(rank, ci);
            let (pr, pc) = (rows[rank], cols[rank]);
            let inv = field.inv(m[pr * n + pc]);
            for &r in &rows[rank + 1..] {
                let factor = field.mul(m[r * n + pc], inv);
                if factor == 0 {
                    continue;
                }
                for &c in &cols[rank..] {
                    let v = field.sub(m[r * n + c], field.mul(factor, m[pr * n + c]));
                    m[r * n + c] = v;
                }
            }
            rank += 1;
        }
        rank
    }
}
