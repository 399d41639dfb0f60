//! Test-only reference arithmetic that shares no code with the library's
//! reduction engine.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use realbott::{BottMatrix, Monomial, Z2Polynomial};

/// Polynomials as sets of square-free bitmasks.
pub type Masks = BTreeSet<u64>;

pub struct OracleRing {
    /// columns[j] has bit i set iff a_{i+1, j+1} = 1.
    columns: Vec<u64>,
}

impl OracleRing {
    pub fn new(a: &BottMatrix) -> Self {
        let n = a.dim();
        let mut columns = vec![0u64; n];
        for i in 1..=n {
            for j in 1..=n {
                if a.get(i, j) {
                    columns[j - 1] |= 1 << (i - 1);
                }
            }
        }
        Self { columns }
    }

    fn toggle(set: &mut Masks, m: u64) {
        if !set.remove(&m) {
            set.insert(m);
        }
    }

    /// x_{i+1} * m. When x_{i+1} divides m, x_{i+1} m = x_{i+1}^2 m' equals
    /// sum over the column of x_l x_{i+1} m' = x_l m.
    fn mul_var(&self, m: u64, i: usize, out: &mut Masks) {
        if m >> i & 1 == 0 {
            Self::toggle(out, m | 1 << i);
            return;
        }
        let mut col = self.columns[i];
        while col != 0 {
            let l = col.trailing_zeros() as usize;
            col &= col - 1;
            self.mul_var(m, l, out);
        }
    }

    pub fn mul_masks(&self, p: &Masks, q: &Masks) -> Masks {
        let mut out = Masks::new();
        for &a in p {
            for &b in q {
                let mut cur = Masks::from([a]);
                let mut rest = b;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let mut next = Masks::new();
                    for &m in &cur {
                        self.mul_var(m, i, &mut next);
                    }
                    cur = next;
                }
                for m in cur {
                    Self::toggle(&mut out, m);
                }
            }
        }
        out
    }

    pub fn multiply(&self, p: &Z2Polynomial, q: &Z2Polynomial) -> Z2Polynomial {
        from_masks(&self.mul_masks(&to_masks(p), &to_masks(q)))
    }

    /// Total class as the product of (1 + y_j), y_j read from column j.
    pub fn total_sw(&self) -> Masks {
        let mut w = Masks::from([0u64]);
        for &col in &self.columns {
            let mut factor = Masks::from([0u64]);
            let mut c = col;
            while c != 0 {
                factor.insert(1 << c.trailing_zeros());
                c &= c - 1;
            }
            w = self.mul_masks(&w, &factor);
        }
        w
    }

    pub fn sw_class(&self, k: usize) -> Z2Polynomial {
        from_masks(&self.total_sw().into_iter().filter(|m| m.count_ones() as usize == k).collect())
    }
}

pub fn to_masks(p: &Z2Polynomial) -> Masks {
    p.terms().map(Monomial::mask).collect()
}

pub fn from_masks(m: &Masks) -> Z2Polynomial {
    m.iter().map(|&x| Monomial::from_mask(x)).collect()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut StdRng, n: usize) -> BottMatrix {
    let bits = n * (n - 1) / 2;
    let mask = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
    BottMatrix::from_upper_bits(n, rng.random::<u64>() & mask).unwrap()
}

pub fn random_monomial(rng: &mut StdRng, n: usize, degree: usize) -> Monomial {
    let mut mask = 0u64;
    while (mask.count_ones() as usize) < degree.min(n) {
        mask |= 1 << rng.random_range(0..n);
    }
    Monomial::from_mask(mask)
}

/// A random polynomial in normal form with terms of degree at most
/// `max_degree`.
pub fn random_polynomial(rng: &mut StdRng, n: usize, max_degree: usize, max_terms: usize) -> Z2Polynomial {
    let terms = rng.random_range(0..=max_terms);
    (0..terms)
        .map(|_| {
            let d = rng.random_range(0..=max_degree.min(n));
            random_monomial(rng, n, d)
        })
        .collect()
}

/// A random homogeneous polynomial of degree `degree`.
pub fn random_homogeneous(rng: &mut StdRng, n: usize, degree: usize, max_terms: usize) -> Z2Polynomial {
    let terms = rng.random_range(0..=max_terms);
    (0..terms).map(|_| random_monomial(rng, n, degree)).collect()
}
