//! Shared fixtures for the classifier benchmarks.

use ozone_core::{IntMat, SkewParams};

/// The rank-4, order-6 ring with a reflection on the last axis.
pub fn rank4_order6() -> SkewParams {
    SkewParams::new(
        6,
        vec![
            vec![0, 1, 1, 3],
            vec![-1, 0, 1, 3],
            vec![-1, -1, 0, 3],
            vec![-3, -3, -3, 0],
        ],
    )
    .expect("fixture is valid")
}

/// The order-24 rank-3 ring at k=9 (gorenstein, 576-element group image).
pub fn rank3_order24() -> SkewParams {
    SkewParams::new(24, vec![vec![0, 4, 6], vec![-4, 0, 9], vec![-6, -9, 0]])
        .expect("fixture is valid")
}

/// A dense square matrix with mixed-sign entries for elimination benchmarks.
pub fn dense_square() -> IntMat {
    IntMat::from_rows(vec![
        vec![2, 4, 4, -6],
        vec![-6, 6, 12, 9],
        vec![10, -4, -16, 7],
        vec![3, 5, -8, 11],
    ])
    .expect("fixture is square")
}

/// A 6x6 integer skew-symmetric matrix for pfaffian benchmarks.
pub fn skew_six() -> IntMat {
    IntMat::from_rows(vec![
        vec![0, 2, -7, 3, 1, -4],
        vec![-2, 0, 1, 8, -5, 2],
        vec![7, -1, 0, -5, 6, -3],
        vec![-3, -8, 5, 0, 4, 9],
        vec![-1, 5, -6, -4, 0, -2],
        vec![4, -2, 3, -9, 2, 0],
    ])
    .expect("fixture is square")
}
