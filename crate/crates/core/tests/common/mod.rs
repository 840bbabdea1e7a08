//! Gröbner-free oracles: Hilbert functions by dense linear algebra over F_p
//! on monomial bases, and depth by generic linear regular sequences.

#![allow(dead_code)]

use depthkit::{FPModule, Poly, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn monomials(n: usize, d: i32) -> Vec<Vec<u16>> {
    if d < 0 {
        return vec![];
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - e) {
            rest.insert(0, e as u16);
            out.push(rest);
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank of a matrix over F_p by Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// A presentation over the ambient polynomial ring: generator degrees and
/// relation columns, ideal multiples included.
#[derive(Clone)]
pub struct Dense {
    pub n: usize,
    pub field: PrimeField,
    pub p: u64,
    pub twists: Vec<i32>,
    pub cols: Vec<Vec<Poly>>,
}

impl Dense {
    pub fn of(m: &FPModule) -> Self {
        let ring = m.ring();
        let twists = m.generator_degrees().to_vec();
        let mut cols: Vec<Vec<Poly>> = m.presentation().columns().to_vec();
        for g in ring.relations() {
            for j in 0..twists.len() {
                let mut c = vec![ring.zero(); twists.len()];
                c[j] = g.clone();
                cols.push(c);
            }
        }
        Dense {
            n: ring.nvars(),
            field: ring.field(),
            p: ring.characteristic() as u64,
            twists,
            cols,
        }
    }

    /// Adds `f * e_j` for every generator.
    pub fn with_multiples(&self, f: &Poly) -> Dense {
        let mut d = self.clone();
        for j in 0..self.twists.len() {
            let mut c = vec![Poly::zero(self.field, self.n); self.twists.len()];
            c[j] = f.clone();
            d.cols.push(c);
        }
        d
    }

    fn col_degree(&self, c: &[Poly]) -> Option<i32> {
        c.iter()
            .zip(&self.twists)
            .find(|(e, _)| !e.is_zero())
            .map(|(e, t)| e.homogeneous_degree().unwrap() as i32 + t)
    }

    /// `dim_k` of the cokernel in degree `t`.
    pub fn hilbert(&self, t: i32) -> u64 {
        let mut index = std::collections::HashMap::new();
        for (j, &a) in self.twists.iter().enumerate() {
            for m in monomials(self.n, t - a) {
                let k = index.len();
                index.insert((j, m), k);
            }
        }
        let dim = index.len();
        if dim == 0 {
            return 0;
        }
        let mut rows = Vec::new();
        for c in &self.cols {
            let Some(dc) = self.col_degree(c) else {
                continue;
            };
            for mult in monomials(self.n, t - dc) {
                let mut row = vec![0u64; dim];
                for (j, e) in c.iter().enumerate() {
                    for (mon, coeff) in e.terms() {
                        let exps: Vec<u16> = mon.exponents()[..self.n]
                            .iter()
                            .zip(&mult)
                            .map(|(a, b)| a + b)
                            .collect();
                        let k = index[&(j, exps)];
                        row[k] = (row[k] + coeff.value() as u64) % self.p;
                    }
                }
                rows.push(row);
            }
        }
        dim as u64 - rank_mod_p(rows, self.p) as u64
    }

    pub fn hilbert_range(&self, lo: i32, hi: i32) -> Vec<u64> {
        (lo..=hi).map(|t| self.hilbert(t)).collect()
    }

    /// Depth as the length of a regular sequence of random linear forms,
    /// testing regularity of `l` by `HF(M/lM)(t) = HF(M)(t) - HF(M)(t-1)`
    /// for `t <= top`.
    pub fn generic_depth(&self, ring: &depthkit::Ring, top: i32, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lo = *self.twists.iter().min().unwrap();
        let mut cur = self.clone();
        let mut depth = 0;
        while depth < self.n {
            let mut l = ring.zero();
            for i in 0..self.n {
                let c = ring.constant(rng.gen_range(1..self.p as i64));
                l = l.add(&c.mul(&ring.var(i)));
            }
            let next = cur.with_multiples(&l);
            let h = cur.hilbert_range(lo - 1, top);
            let hq = next.hilbert_range(lo, top);
            let regular = (0..hq.len()).all(|k| hq[k] as i64 == h[k + 1] as i64 - h[k] as i64);
            if !regular {
                break;
            }
            depth += 1;
            cur = next;
        }
        depth
    }
}
