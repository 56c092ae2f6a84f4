mod common;

use common::{leibniz_det, matrix, nonsingular, rng};
use num_traits::Zero;
use pmat_core::linalg::{det, det_identity_plus_product, inverse, principal_minor, IndexSet};
use pmat_core::RationalMatrix;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Stacks a 2x2 grid of blocks.
fn blocks(
    a11: &RationalMatrix,
    a12: &RationalMatrix,
    a21: &RationalMatrix,
    a22: &RationalMatrix,
) -> RationalMatrix {
    let (m1, n1) = a11.shape();
    let rows = m1 + a21.rows();
    let cols = n1 + a12.cols();
    RationalMatrix::from_fn(rows, cols, |i, j| match (i < m1, j < n1) {
        (true, true) => a11.get(i, j).clone(),
        (true, false) => a12.get(i, j - n1).clone(),
        (false, true) => a21.get(i - m1, j).clone(),
        (false, false) => a22.get(i - m1, j - n1).clone(),
    })
}

#[test]
fn bareiss_matches_permutation_expansion() {
    let mut rng = rng(11);
    for _ in 0..150 {
        let n = rng.gen_range(0..=5);
        let m = matrix(&mut rng, n, n, 10);
        assert_eq!(det(&m).unwrap(), leibniz_det(&m));
    }
}

#[test]
fn identity_plus_product_agrees_on_both_sides() {
    let mut rng = rng(12);
    for _ in 0..200 {
        let k = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=5);
        let f = matrix(&mut rng, k, n, 10);
        let g = matrix(&mut rng, n, k, 10);
        let small = det_identity_plus_product(&f, &g).unwrap();
        let left = leibniz_det(&RationalMatrix::identity(k).add(&f.mul(&g).unwrap()).unwrap());
        let right = leibniz_det(&RationalMatrix::identity(n).add(&g.mul(&f).unwrap()).unwrap());
        assert_eq!(small, left);
        assert_eq!(small, right);
    }
}

#[test]
fn block_row_and_column_updates_keep_the_determinant() {
    let mut rng = rng(13);
    for _ in 0..100 {
        let (m1, m2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let size = m1 + m2;
        let n1 = rng.gen_range(1..size);
        let n2 = size - n1;
        let a = matrix(&mut rng, size, size, 10);
        let a11 = a.select(&(0..m1).collect::<Vec<_>>(), &(0..n1).collect::<Vec<_>>()).unwrap();
        let a12 = a.select(&(0..m1).collect::<Vec<_>>(), &(n1..size).collect::<Vec<_>>()).unwrap();
        let a21 = a.select(&(m1..size).collect::<Vec<_>>(), &(0..n1).collect::<Vec<_>>()).unwrap();
        let a22 = a.select(&(m1..size).collect::<Vec<_>>(), &(n1..size).collect::<Vec<_>>()).unwrap();
        assert_eq!(blocks(&a11, &a12, &a21, &a22), a);

        let x = matrix(&mut rng, m1, m2, 10);
        let y = matrix(&mut rng, n1, n2, 10);
        let rows_updated = blocks(
            &a11.add(&x.mul(&a21).unwrap()).unwrap(),
            &a12.add(&x.mul(&a22).unwrap()).unwrap(),
            &a21,
            &a22,
        );
        let cols_updated = blocks(
            &a11,
            &a12.add(&a11.mul(&y).unwrap()).unwrap(),
            &a21,
            &a22.add(&a21.mul(&y).unwrap()).unwrap(),
        );
        let d = det(&a).unwrap();
        assert_eq!(det(&rows_updated).unwrap(), d);
        assert_eq!(det(&cols_updated).unwrap(), d);
    }
}

#[test]
fn determinant_is_multiplicative() {
    let mut rng = rng(14);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let m = matrix(&mut rng, n, n, 10);
        let p = matrix(&mut rng, n, n, 10);
        assert_eq!(
            det(&m.mul(&p).unwrap()).unwrap(),
            det(&m).unwrap() * det(&p).unwrap()
        );
    }
}

#[test]
fn inverse_is_two_sided() {
    let mut rng = rng(15);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let m = nonsingular(&mut rng, n, 10);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv.mul(&m).unwrap(), RationalMatrix::identity(n));
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(n));
    }
}

#[test]
fn principal_minor_ignores_listing_order() {
    let mut rng = rng(16);
    for _ in 0..50 {
        let n = rng.gen_range(2..=5);
        let m = matrix(&mut rng, n, n, 10);
        let mut indices: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        if indices.is_empty() {
            indices.push(0);
        }
        let sorted = IndexSet::new(indices.clone()).unwrap();
        indices.shuffle(&mut rng);
        let shuffled = IndexSet::new(indices).unwrap();
        assert_eq!(sorted, shuffled);
        assert_eq!(
            principal_minor(&m, &sorted).unwrap(),
            leibniz_det(&m.select(sorted.as_slice(), sorted.as_slice()).unwrap())
        );
    }
}

proptest! {
    #[test]
    fn singular_iff_inverse_fails(entries in proptest::collection::vec(-3i64..=3, 9)) {
        let rows: Vec<[i64; 3]> = entries.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        let m = RationalMatrix::from_ints(&rows);
        prop_assert_eq!(det(&m).unwrap().is_zero(), inverse(&m).is_err());
    }
}
