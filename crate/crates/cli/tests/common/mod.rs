#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use pmat_core::linalg::det;
use pmat_core::{Rational, RationalMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ bound`, `1 ≤ q ≤ bound`.
pub fn rational(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-bound..=bound)),
        BigInt::from(rng.gen_range(1..=bound)),
    )
}

pub fn nonneg_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(0..=bound)),
        BigInt::from(rng.gen_range(1..=bound)),
    )
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |_, _| rational(rng, bound))
}

/// Nonnegative matrix where roughly a third of the entries are zero.
pub fn sparse_nonneg(rng: &mut impl Rng, n: usize, bound: i64) -> RationalMatrix {
    RationalMatrix::from_fn(n, n, |_, _| {
        if rng.gen_bool(0.35) {
            Rational::zero()
        } else {
            nonneg_rational(rng, bound)
        }
    })
}

pub fn nonsingular(rng: &mut impl Rng, n: usize, bound: i64) -> RationalMatrix {
    loop {
        let m = matrix(rng, n, n, bound);
        if !det(&m).unwrap().is_zero() {
            return m;
        }
    }
}

/// Permutation-expansion determinant, independent of the elimination path.
pub fn leibniz_det(m: &RationalMatrix) -> Rational {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &RationalMatrix, total: &mut Rational) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term: Rational = (0..n).map(|i| m.get(i, perm[i]).clone()).product();
        if inversions % 2 == 1 {
            term = -term;
        }
        *total += term;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}
